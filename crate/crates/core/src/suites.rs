//! Seeded batch certification runs, one per family of statements.
//!
//! Every randomized item draws from its own stream `rng_for(seed, item)`, so
//! a report depends only on the configuration and the crate version, never on
//! thread scheduling.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::ballgeo::{
    build_isometry_decomposition, extreme_dichotomy_probe, is_psd_direct, psd_trace_equivalence,
    trace_psd_check, verify_flat_decomposition, verify_flat_on, SearchBudget,
};
use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::isomaps::{
    form_distance, random_pairs, recover, verify_distance_preserving, IsometryForm, Phi,
};
use crate::linalg::{CMatrix, C64};
use crate::opmodel::TailOperator;
use crate::sample;
use crate::uinorm::{
    self, beta_witness_cert, cnorm_corollary_suite, is_algebra_norm, is_cross_norm,
    is_submultiplicative, norm_f, product_equality_cert, radius_constants, radius_witnesses,
    rank_one_extremal, sharp_beta, spectral_bounds_cert, submult_cert, submult_counterexample,
    triple_product, triple_submult_cert, uniform_cert, verify_radius_sandwich_with,
    RadiusConstants, RADIUS_TOL,
};
use crate::vecnorm::SymmetricNorm;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const RECOVERY_TOL: f64 = 1e-6;
const RANK_ONE_INSTANCES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RadiusSandwich,
    Uniform,
    Submult,
    Triple,
    ProductEquality,
    CnormCorollary,
    TracePsd,
    FlatDecomposition,
    Isometry,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::RadiusSandwich,
        Suite::Uniform,
        Suite::Submult,
        Suite::Triple,
        Suite::ProductEquality,
        Suite::CnormCorollary,
        Suite::TracePsd,
        Suite::FlatDecomposition,
        Suite::Isometry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RadiusSandwich => "radius-sandwich",
            Suite::Uniform => "uniform",
            Suite::Submult => "submult",
            Suite::Triple => "triple",
            Suite::ProductEquality => "product-equality",
            Suite::CnormCorollary => "cnorm-corollary",
            Suite::TracePsd => "trace-psd",
            Suite::FlatDecomposition => "flat-decomposition",
            Suite::Isometry => "isometry",
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::TracePsd => 10_000,
            Suite::Isometry | Suite::FlatDecomposition => 100,
            Suite::CnormCorollary => 200,
            _ => 500,
        }
    }

    fn default_tol(self) -> f64 {
        match self {
            Suite::RadiusSandwich => RADIUS_TOL,
            _ => uinorm::DEFAULT_TOL,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    /// Overrides the suite's default tolerance.
    pub tol: Option<f64>,
    /// Overrides the suite's default sample count.
    pub samples: Option<usize>,
    pub execution: Execution,
    pub paper_examples: bool,
    /// Restricts family-indexed suites to this norm.
    pub family: Option<SymmetricNorm>,
    /// Weight vector for the c-norm corollary suite.
    pub c: Option<Vec<f64>>,
    /// Restart budget for the extreme-point dichotomy probe.
    pub budget: SearchBudget,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub version: &'static str,
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub passed: bool,
    pub certificates: Vec<Certificate>,
}

/// Norms shipped for family-indexed suites, all of arity 3. Aliases of the
/// operator norm (`ℓ∞`, Ky Fan 1, `1·ℓ∞`) are left out in favour of the
/// c-norm `(1, 0, 0)`.
pub fn catalog() -> Vec<SymmetricNorm> {
    let ok = |r: Result<SymmetricNorm>| r.expect("catalog parameters are valid");
    vec![
        ok(SymmetricNorm::ky_fan(3, 2)),
        ok(SymmetricNorm::ky_fan(3, 3)),
        ok(SymmetricNorm::lp(3, 1.0)),
        ok(SymmetricNorm::lp(3, 2.0)),
        ok(SymmetricNorm::lp(3, 3.0)),
        ok(SymmetricNorm::c_norm(vec![1.0, 0.0, 0.0])),
        ok(SymmetricNorm::c_norm(vec![1.0, 0.5, 0.25])),
        ok(SymmetricNorm::c_norm(vec![0.5, 0.5, 0.0])),
        ok(SymmetricNorm::cp_norm(vec![1.0, 0.5, 0.25], 2.0)),
        ok(SymmetricNorm::max_c(vec![
            vec![2.5, 0.0, 0.0],
            vec![1.0, 1.0, 1.0],
        ])),
        ok(SymmetricNorm::scaled_linf(3, 0.5)),
        ok(SymmetricNorm::scaled_linf(3, 2.0)),
    ]
}

/// Families for the radius sandwich: Ky Fan `k ≤ 4`, `ℓ1`, `ℓ2`, `ℓ∞` and
/// three seeded c-norms, all of arity 4.
pub fn radius_families(seed: u64) -> Vec<SymmetricNorm> {
    let mut out: Vec<SymmetricNorm> = (1..=4)
        .map(|k| SymmetricNorm::ky_fan(4, k).expect("k <= 4"))
        .collect();
    for p in [1.0, 2.0, f64::INFINITY] {
        out.push(SymmetricNorm::lp(4, p).expect("p >= 1"));
    }
    let mut rng = sample::rng_for(seed, u64::MAX);
    for _ in 0..3 {
        let c = sample::random_positive_descending(&mut rng, 4);
        out.push(SymmetricNorm::c_norm(c).expect("positive weights"));
    }
    out
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport> {
    let tol = cfg.tol.unwrap_or(suite.default_tol());
    let samples = cfg.samples.unwrap_or(suite.default_samples());
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    let certificates = match suite {
        Suite::RadiusSandwich => radius_suite(cfg, samples, tol),
        Suite::Uniform => uniform_suite(cfg, samples, tol),
        Suite::Submult => submult_suite(cfg, samples, tol),
        Suite::Triple => triple_suite(cfg, samples, tol),
        Suite::ProductEquality => product_suite(cfg, samples, tol)?,
        Suite::CnormCorollary => corollary_suite(cfg, samples, tol)?,
        Suite::TracePsd => trace_suite(cfg, samples, tol)?,
        Suite::FlatDecomposition => flat_suite(cfg, samples, tol)?,
        Suite::Isometry => isometry_suite(cfg, samples, tol)?,
    };
    Ok(SuiteReport {
        suite,
        version: VERSION,
        seed: cfg.seed,
        tolerance: tol,
        samples,
        passed: certificates.iter().all(Certificate::passed),
        certificates,
    })
}

fn families_or(cfg: &RunConfig, default: Vec<SymmetricNorm>) -> Vec<SymmetricNorm> {
    match &cfg.family {
        Some(f) => vec![f.clone()],
        None => default,
    }
}

fn labelled(cert: Certificate, f: &SymmetricNorm) -> Certificate {
    cert.with_inputs(json!({ "family": f }))
}

fn aggregate(statement: &str, f: &SymmetricNorm, items: &[Certificate]) -> Certificate {
    labelled(
        Certificate::worst_of(statement, items).expect("suites run at least one sample"),
        f,
    )
}

fn random_item(seed: u64, i: usize, max_m: usize) -> TailOperator {
    let mut rng = sample::rng_for(seed, i as u64);
    sample::random_operator(&mut rng, max_m)
}

fn random_pair_item(seed: u64, i: usize) -> (TailOperator, TailOperator) {
    let mut rng = sample::rng_for(seed, i as u64);
    let ma = rng.random_range(1..=5);
    let a = sample::random_operator_of_size(&mut rng, ma);
    let mb = rng.random_range(1..=5);
    let b = sample::random_operator_of_size(&mut rng, mb);
    (a, b)
}

fn radius_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Vec<Certificate> {
    let families = families_or(cfg, radius_families(cfg.seed));
    let ops: Vec<(TailOperator, f64)> = map_indexed(cfg.execution, samples, |i| {
        let a = random_item(cfg.seed, i, 8);
        let r = a.numerical_radius();
        (a, r)
    });
    let mut out = Vec::new();
    for f in &families {
        let items: Vec<Certificate> = ops
            .iter()
            .map(|(a, r)| verify_radius_sandwich_with(a, f, *r, tol))
            .collect();
        out.push(aggregate("radius-sandwich", f, &items));
        let sharp = sharp_beta(f);
        let upper: Vec<Certificate> = ops
            .iter()
            .map(|(a, r)| Certificate::at_most("radius-sharp-upper", norm_f(a, f), sharp * r, tol))
            .collect();
        out.push(
            aggregate("radius-sharp-upper", f, &upper).with_witness(json!({ "sharp_beta": sharp })),
        );
        out.push(labelled(beta_witness_cert(f, tol), f));

        let RadiusConstants { alpha, beta } = radius_constants(f);
        let (lo, hi) = radius_witnesses(f);
        for (name, w, constant) in [
            ("radius-alpha-witness", lo, alpha),
            ("radius-beta-witness", hi, beta),
        ] {
            let r = w.numerical_radius();
            let cert = Certificate::equal(name, norm_f(&w, f), constant * r, tol)
                .with_witness(json!({ "operator": w, "radius": r }));
            out.push(labelled(cert, f));
        }
    }
    out
}

fn uniform_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Vec<Certificate> {
    let families = families_or(cfg, catalog());
    let pairs = map_indexed(cfg.execution, samples, |i| random_pair_item(cfg.seed, i));
    let mut out = Vec::new();
    for f in &families {
        let results = map_indexed(cfg.execution, samples, |i| {
            let (a, b) = &pairs[i];
            (uniform_cert(f, a, b, tol), spectral_bounds_cert(a, f, tol))
        });
        let (uniform, bounds): (Vec<_>, Vec<_>) = results.into_iter().unzip();
        out.push(aggregate("uniform", f, &uniform));
        out.push(aggregate("spectral-bounds", f, &bounds));
    }
    out
}

fn submultiplicative_catalog() -> Vec<SymmetricNorm> {
    catalog().into_iter().filter(is_submultiplicative).collect()
}

fn submult_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Vec<Certificate> {
    let families = families_or(cfg, submultiplicative_catalog());
    let pairs = map_indexed(cfg.execution, samples, |i| random_pair_item(cfg.seed, i));
    let mut out = Vec::new();
    for f in &families {
        if let Some(cex) = submult_counterexample(f, tol) {
            out.push(labelled(cex, f));
            continue;
        }
        let items: Vec<Certificate> = pairs
            .iter()
            .map(|(a, b)| submult_cert(f, a, b, tol))
            .collect();
        out.push(aggregate("submultiplicative", f, &items));
    }
    if cfg.family.is_none() {
        out.push(algebra_detector_cert());
    }
    out
}

/// The detector must fire for the c-norm `(1, 0, 0)` and nothing else in the catalog.
fn algebra_detector_cert() -> Certificate {
    let spectral = SymmetricNorm::spectral(3).expect("n > 0");
    let families = catalog();
    let detections: Vec<_> = families
        .iter()
        .map(|f| (f, is_algebra_norm(f), *f == spectral))
        .collect();
    let mismatches = detections
        .iter()
        .filter(|(_, got, want)| got != want)
        .count();
    Certificate::equal("algebra-norm-detector", mismatches as f64, 0.0, 0.0).with_witness(json!({
        "detected": detections
            .iter()
            .filter(|(_, got, _)| *got)
            .map(|(f, _, _)| json!(f))
            .collect::<Vec<_>>(),
    }))
}

fn triple_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Vec<Certificate> {
    let families = families_or(cfg, submultiplicative_catalog());
    let triples = map_indexed(cfg.execution, samples, |i| {
        let (a, b) = random_pair_item(cfg.seed, i);
        let c = random_item(cfg.seed ^ 0x7269_706c, i, 5);
        (a, b, c)
    });
    let mut out = Vec::new();
    for f in &families {
        if !is_submultiplicative(f) {
            let e = TailOperator::real_diag(&[1.0], 0.0);
            let cert = triple_submult_cert(f, &e, &e, &e, tol)
                .with_check("cube-is-identity", triple_product(&e, &e, &e) == e);
            out.push(labelled(cert, f));
            continue;
        }
        let items: Vec<Certificate> = triples
            .iter()
            .map(|(a, b, c)| triple_submult_cert(f, a, b, c, tol))
            .collect();
        out.push(aggregate("triple-submultiplicative", f, &items));
    }
    out
}

/// `A = xy*`, `B = yz*` with unit `y` and random `x`, `z`.
fn rank_one_chain_item(seed: u64, i: usize) -> (TailOperator, TailOperator) {
    let mut rng = sample::rng_for(seed, i as u64);
    let m = rng.random_range(2..=5);
    let stretch = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<C64> {
        let s = rng.random_range(0.5..2.0);
        sample::random_unit_vector(rng, m)
            .into_iter()
            .map(|z| z * s)
            .collect()
    };
    let x = stretch(&mut rng);
    let y = sample::random_unit_vector(&mut rng, m);
    let z = stretch(&mut rng);
    (
        TailOperator::rank_one(&x, &y),
        TailOperator::rank_one(&y, &z),
    )
}

fn product_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Result<Vec<Certificate>> {
    let families = families_or(cfg, submultiplicative_catalog());
    let mut out = Vec::new();
    for f in &families {
        if !is_submultiplicative(f) {
            return Err(Error::NotSubmultiplicative(f.at_e1()));
        }
        if is_cross_norm(f) {
            let flag = rank_one_extremal(f);
            let items = map_indexed(cfg.execution, samples.min(RANK_ONE_INSTANCES), |i| {
                let (a, b) = rank_one_chain_item(cfg.seed, i);
                product_equality_cert(f, &a, &b, flag, tol)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
            let all_equal = items.iter().all(|c| c.verdict == Verdict::Equality);
            out.push(
                aggregate("product-equality-rank-one", f, &items)
                    .with_check("all-equality", all_equal)
                    .with_witness(json!({ "rank_one_extremal": flag, "count": items.len() })),
            );
        }
        let items = map_indexed(cfg.execution, samples, |i| {
            let (a, b) = random_pair_item(cfg.seed ^ 0x7072_6f64, i);
            product_equality_cert(f, &a, &b, false, tol)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let mut cert = aggregate("product-equality-random", f, &items);
        if !is_cross_norm(f) {
            let strict = items.iter().all(|c| c.verdict == Verdict::Holds);
            cert = cert.with_check("all-strict", strict);
        }
        out.push(cert);
    }
    if cfg.family.is_none() {
        let spectral = SymmetricNorm::spectral(3)?;
        let id = TailOperator::identity();
        let cert = product_equality_cert(&spectral, &id, &id, false, tol)?;
        let equality = cert.verdict == Verdict::Equality;
        let mut cert = labelled(cert, &spectral).with_check("equality", equality);
        cert.statement = "product-equality-unitary".into();
        out.push(cert);
    }
    Ok(out)
}

fn corollary_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Result<Vec<Certificate>> {
    let weights = match &cfg.c {
        Some(c) => vec![c.clone()],
        None => vec![
            vec![1.0, 0.5, 0.25],
            vec![2.0, 1.0, 0.5],
            vec![1.0, 1.0, 1.0],
            vec![0.5, 0.25],
        ],
    };
    let mut out = Vec::new();
    for (k, c) in weights.iter().enumerate() {
        out.extend(cnorm_corollary_suite(
            c,
            samples,
            cfg.seed.wrapping_add(k as u64),
            tol,
        )?);
    }
    Ok(out)
}

fn trace_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Result<Vec<Certificate>> {
    const P: usize = 5;
    let items = map_indexed(cfg.execution, samples, |i| {
        let mut rng = sample::rng_for(cfg.seed, i as u64);
        let c = sample::random_positive_descending(&mut rng, P);
        let r = match i % 4 {
            0 => {
                let rank = rng.random_range(1..=P);
                sample::random_psd(&mut rng, P, rank)
            }
            1 => CMatrix::from_real_diag(&sample::random_descending(&mut rng, P)),
            _ => sample::gaussian_matrix(&mut rng, P),
        };
        trace_psd_check(&c, &r, tol)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut out = vec![Certificate::worst_of("trace-psd", &items).expect("samples > 0")];

    let labelled_samples = map_indexed(cfg.execution, 400, |i| {
        let mut rng = sample::rng_for(cfg.seed ^ 0x7073_6400, i as u64);
        let psd = i % 2 == 0;
        let r = if psd {
            let rank = rng.random_range(1..=P);
            sample::random_psd(&mut rng, P, rank)
        } else if i % 4 == 1 {
            sample::gaussian_matrix(&mut rng, P)
        } else {
            let u = sample::random_unitary(&mut rng, P);
            let mut d = sample::random_descending(&mut rng, P);
            d[P - 1] = -rng.random_range(0.05..1.0);
            &(&u * &CMatrix::from_real_diag(&d)) * &u.adjoint()
        };
        (psd, psd_trace_equivalence(&r), is_psd_direct(&r))
    });
    let disagreements = labelled_samples.iter().filter(|(_, a, b)| a != b).count();
    let mislabelled = labelled_samples.iter().filter(|(l, _, b)| l != b).count();
    out.push(
        Certificate::equal("psd-trace-equivalence", disagreements as f64, 0.0, 0.0)
            .with_check("labels-match-direct-test", mislabelled == 0)
            .with_witness(json!({ "samples": labelled_samples.len() })),
    );
    Ok(out)
}

fn grid_21() -> Vec<Vec<f64>> {
    let pts: Vec<f64> = (0..=20).map(|i| -2.0 + 0.2 * i as f64).collect();
    pts.iter()
        .flat_map(|&mu| pts.iter().map(move |&nu| vec![mu, nu]))
        .collect()
}

/// The two flat splits of the worked example: `(norm, A, B, D)`.
pub fn example_splits() -> [(SymmetricNorm, TailOperator, TailOperator, TailOperator); 2] {
    let maxc = SymmetricNorm::max_c(vec![vec![2.5, 0.0, 0.0], vec![1.0, 1.0, 1.0]])
        .expect("valid weights");
    let kf2 = SymmetricNorm::ky_fan(2, 2).expect("k <= n");
    [
        (
            maxc,
            TailOperator::real_diag(&[0.4, 0.4], 0.2),
            TailOperator::real_diag(&[0.4, 0.0], 0.1),
            TailOperator::real_diag(&[0.0, 0.4], 0.1),
        ),
        (
            kf2,
            TailOperator::real_diag(&[1.0], 0.0),
            TailOperator::real_diag(&[0.5, 0.5], 0.0),
            TailOperator::real_diag(&[0.5, -0.5], 0.0),
        ),
    ]
}

fn flat_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let normalized = SymmetricNorm::c_norm(vec![0.5, 0.5])?;
    let mut rng = sample::rng_for(cfg.seed, 0);
    let unitaries = [
        TailOperator::identity(),
        sample::random_unitary_operator(&mut rng, 3),
    ];
    for (k, u) in unitaries.iter().enumerate() {
        let f = cfg.family.clone().unwrap_or_else(|| normalized.clone());
        let n_parts = f.arity() * f.arity() + 1;
        let d = build_isometry_decomposition(u, &f, n_parts)?;
        let cert = verify_flat_decomposition(&d.parts, &f, samples, cfg.seed + k as u64, tol)?
            .with_check("sum", d.sum().spectral_distance(u) <= 1e-10);
        out.push(labelled(cert, &f).with_inputs(json!({ "family": f, "U": u, "N": n_parts })));
    }

    let [(maxc, a1, _, _), (kf2, a2, _, _)] = example_splits();
    for (f, a, n_parts) in [(maxc, a1, 10), (kf2, a2, 5)] {
        let report = extreme_dichotomy_probe(&a, &f, n_parts, cfg.budget, cfg.seed, cfg.execution)?;
        out.push(labelled(report.certificate, &f));
    }

    if cfg.paper_examples {
        for (idx, (f, a, b, d)) in example_splits().into_iter().enumerate() {
            let example_tol = if idx == 0 { tol } else { tol.min(1e-12) };
            let mut cert = verify_flat_on(&[b.clone(), d.clone()], &f, &grid_21(), example_tol)?;
            cert.statement = format!("example-{}-flat-grid", idx + 1);
            let sum_ok = (&b + &d).spectral_distance(&a) <= 1e-15;
            out.push(labelled(cert, &f).with_check("A = B + D", sum_ok));
            let ab = norm_f(&(&a + &b), &f);
            out.push(labelled(
                Certificate::equal(
                    format!("example-{}-norm-a-plus-b", idx + 1),
                    ab,
                    2.0,
                    example_tol,
                ),
                &f,
            ));
        }
    }
    Ok(out)
}

fn isometry_suite(cfg: &RunConfig, samples: usize, tol: f64) -> Result<Vec<Certificate>> {
    let families = families_or(cfg, catalog());
    let results = map_indexed(
        cfg.execution,
        samples,
        |i| -> Result<(Certificate, Certificate)> {
            let mut rng = sample::rng_for(cfg.seed, i as u64);
            let m = 2 + i % 3;
            let phi = Phi::ALL[i % 4];
            let f = &families[i % families.len()];
            let l = IsometryForm::random(&mut rng, m, phi);
            let pairs = random_pairs(200, 4, cfg.seed ^ (i as u64).wrapping_mul(0x9e37_79b9));
            let distance = labelled(verify_distance_preserving(&l, f, &pairs, tol)?, f);
            let recovered = recover(|a| l.apply(a), m, f, cfg.seed.wrapping_add(i as u64))?;
            let gap = form_distance(&recovered, &l);
            let recovery = Certificate::at_most("recover", gap, RECOVERY_TOL, 0.0)
                .with_check("phi", recovered.phi() == phi)
                .with_witness(json!({ "m": m, "phi": phi }));
            Ok((distance, recovery))
        },
    )
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let (distance, recovery): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(vec![
        Certificate::worst_of("distance-preserving", &distance).expect("samples > 0"),
        Certificate::worst_of("recover", &recovery).expect("samples > 0"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(seed: u64) -> RunConfig {
        RunConfig {
            seed,
            samples: Some(20),
            budget: SearchBudget {
                restarts: 200,
                steps: 40,
                polish: 4,
                polish_steps: 1000,
            },
            ..RunConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_on_defaults() {
        for s in Suite::ALL
            .into_iter()
            .filter(|s| *s != Suite::RadiusSandwich)
        {
            let mut cfg = quick(7);
            cfg.paper_examples = true;
            let report = run_suite(s, &cfg).unwrap();
            let failed: Vec<_> = report.certificates.iter().filter(|c| !c.passed()).collect();
            assert!(report.passed, "{s}: {failed:#?}");
        }
    }

    #[test]
    fn radius_sandwich_holds_only_where_beta_is_sharp() {
        let report = run_suite(Suite::RadiusSandwich, &quick(7)).unwrap();
        for cert in &report.certificates {
            let f: SymmetricNorm = serde_json::from_value(cert.inputs["family"].clone()).unwrap();
            let beta = radius_constants(&f).beta;
            match cert.statement.as_str() {
                "radius-sharp-upper" | "radius-alpha-witness" => {
                    assert!(cert.passed(), "{cert:#?}")
                }
                "radius-beta-upper" => assert_eq!(cert.passed(), beta >= sharp_beta(&f) - 1e-12),
                "radius-sandwich" | "radius-beta-witness" => {
                    if beta >= sharp_beta(&f) - 1e-12 {
                        assert!(cert.passed(), "{cert:#?}");
                    }
                }
                other => panic!("unexpected statement {other}"),
            }
        }
        assert!(!report.passed);
    }

    #[test]
    fn scaled_linf_submult_reports_violation() {
        let cfg = RunConfig {
            family: Some(SymmetricNorm::scaled_linf(3, 0.5).unwrap()),
            ..quick(1)
        };
        let report = run_suite(Suite::Submult, &cfg).unwrap();
        assert!(!report.passed);
        let cert = &report.certificates[0];
        assert_eq!(cert.verdict, Verdict::Violated);
        assert_eq!((cert.lhs, cert.rhs), (0.5, 0.25));
    }

    #[test]
    fn reports_are_reproducible_and_schedule_independent() {
        let seq = RunConfig {
            execution: Execution::Sequential,
            ..quick(3)
        };
        let par = RunConfig {
            execution: Execution::Parallel,
            ..quick(3)
        };
        for s in [Suite::RadiusSandwich, Suite::TracePsd, Suite::Isometry] {
            let a = serde_json::to_string(&run_suite(s, &seq).unwrap()).unwrap();
            let b = serde_json::to_string(&run_suite(s, &par).unwrap()).unwrap();
            let c = serde_json::to_string(&run_suite(s, &seq).unwrap()).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }

    #[test]
    fn catalog_detector_fires_once() {
        assert!(algebra_detector_cert().passed());
        let aliases = [
            SymmetricNorm::lp(3, f64::INFINITY).unwrap(),
            SymmetricNorm::ky_fan(3, 1).unwrap(),
            SymmetricNorm::scaled_linf(3, 1.0).unwrap(),
        ];
        assert!(aliases.iter().all(is_algebra_norm));
    }
}
