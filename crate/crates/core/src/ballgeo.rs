//! Geometry of the unit ball of `‖·‖_f`: the shape of extreme points, the
//! trace/positivity criterion for c-norms, and flat decompositions
//! `‖Σ aⱼAⱼ‖ = max |aⱼ|`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::linalg::{CMatrix, C64, ONE, ZERO};
use crate::opmodel::{merge_spectrum, TailOperator};
use crate::sample;
use crate::uinorm::norm_f;
use crate::vecnorm::{cnorm_of_spectrum, SymmetricNorm};

const UNIT_NORM_TOL: f64 = 1e-9;
const RECONSTRUCTION_TOL: f64 = 1e-9;
const PERTURBATION_SLACK: f64 = 1e-14;
const PERTURBATION_MAX_EPS: f64 = 1e-6;
const TRACE_EQUALITY_TOL: f64 = 1e-8;
const PSD_TOL: f64 = 1e-6;
const EQUIVALENCE_TOL: f64 = 1e-8;
const NONZERO_PART: f64 = 1e-6;

/// `A = Σⱼ sⱼxⱼyⱼ* + sₙ·U` with orthonormal `xⱼ`, `yⱼ` and a partial
/// isometry `U` between their orthogonal complements.
#[derive(Clone, Debug)]
pub struct ExtremeForm {
    pub s: Vec<f64>,
    /// `xⱼ` as columns, in the padded block.
    pub left: CMatrix,
    /// `yⱼ` as columns, in the padded block.
    pub right: CMatrix,
    /// The partial isometry `U`.
    pub complement: TailOperator,
    pub tail_phase: C64,
    /// Whether `A` has the extreme-point form.
    pub flag: bool,
    /// `‖A − (Σ sⱼxⱼyⱼ* + sₙU)‖_sp`.
    pub residual: f64,
}

/// Splits a unit-norm `A` into its top-`n` singular part and the remainder,
/// and tests whether the remainder is `sₙ` times a partial isometry.
pub fn match_extreme_form(a: &TailOperator, f: &SymmetricNorm) -> Result<ExtremeForm> {
    let norm = norm_f(a, f);
    if (norm - 1.0).abs() > UNIT_NORM_TOL {
        return Err(Error::Precondition(format!("‖A‖_f = {norm}, expected 1")));
    }
    let n = f.arity();
    let p = a.padded(n);
    let dim = p.m();
    let svd = p.block().svd()?;
    let spectrum = a.singular_values(n);
    let sn = spectrum.s(n);
    let tail = p.tail();
    let tail_phase = if tail.norm() > 0.0 {
        tail / tail.norm()
    } else {
        ONE
    };

    let flat_beyond_n = svd.s[n..].iter().all(|&v| (v - sn).abs() <= UNIT_NORM_TOL);
    let tail_matches = (tail.norm() - sn).abs() <= UNIT_NORM_TOL;

    let left = svd.u.leading(dim, n);
    let right = svd.v.leading(dim, n);
    let mut head = CMatrix::zeros(dim, dim);
    let mut rest = CMatrix::zeros(dim, dim);
    for j in 0..dim {
        let (u, v) = (svd.u.column(j), svd.v.column(j));
        let target = if j < n { &mut head } else { &mut rest };
        let w = if j < n { svd.s[j] } else { 1.0 };
        for r in 0..dim {
            for c in 0..dim {
                target[(r, c)] += u[r] * v[c].conj() * w;
            }
        }
    }
    let complement = TailOperator::new(rest, tail_phase)?;
    let rebuilt = &TailOperator::finite(head)? + &complement.scale_real(sn);
    let residual = rebuilt.spectral_distance(&p);
    Ok(ExtremeForm {
        s: spectrum.values,
        left,
        right,
        complement,
        tail_phase,
        flag: flat_beyond_n && tail_matches && residual <= RECONSTRUCTION_TOL,
        residual,
    })
}

/// Largest `ε ∈ [0, 1]` with `‖A ± εB‖_f ≤ 1` for each direction, after
/// normalising `‖B‖_f = 1`. Violated if some direction admits `ε > 1e-6`.
pub fn extreme_perturbation_probe(
    a: &TailOperator,
    f: &SymmetricNorm,
    directions: &[TailOperator],
) -> Certificate {
    let mut best = (0.0_f64, usize::MAX);
    for (idx, b) in directions.iter().enumerate() {
        let nb = norm_f(b, f);
        if nb == 0.0 {
            continue;
        }
        let b = b.scale_real(1.0 / nb);
        let eps = max_feasible_step(a, &b, f);
        if eps > best.0 {
            best = (eps, idx);
        }
    }
    let mut witness = json!({ "directions": directions.len(), "heuristic": true });
    if best.1 != usize::MAX {
        witness["best_direction"] = json!(best.1);
        witness["B"] = json!(&directions[best.1]);
    }
    Certificate::at_most("extreme-perturbation", best.0, PERTURBATION_MAX_EPS, 0.0)
        .with_witness(witness)
}

fn max_feasible_step(a: &TailOperator, b: &TailOperator, f: &SymmetricNorm) -> f64 {
    let feasible = |eps: f64| {
        let bb = b.scale_real(eps);
        norm_f(&(a + &bb), f) <= 1.0 + PERTURBATION_SLACK
            && norm_f(&(a - &bb), f) <= 1.0 + PERTURBATION_SLACK
    };
    if feasible(1.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Perturbation test of `U/‖U‖_f` for a maximal partial isometry `U` along
/// `directions` random directions plus the matrix units of the padded block.
pub fn maximal_isometry_extreme_cert(
    u: &TailOperator,
    f: &SymmetricNorm,
    directions: usize,
    seed: u64,
) -> Result<Certificate> {
    if !u.is_maximal_partial_isometry() {
        return Err(Error::Precondition("not a maximal partial isometry".into()));
    }
    let a = u.scale_real(1.0 / norm_f(u, f));
    let dim = u.m() + f.arity();
    let mut rng = sample::rng_for(seed, 0);
    let mut dirs: Vec<TailOperator> = Vec::new();
    for i in 0..dim.min(4) {
        for j in 0..dim.min(4) {
            let mut e = CMatrix::zeros(dim, dim);
            e[(i, j)] = ONE;
            dirs.push(TailOperator::finite(e)?);
        }
    }
    dirs.push(TailOperator::identity());
    dirs.push(TailOperator::scalar(C64::new(0.0, 1.0)));
    for _ in 0..directions {
        dirs.push(sample::random_operator_of_size(&mut rng, dim));
    }
    Ok(extreme_perturbation_probe(&a, f, &dirs).with_inputs(json!({ "U": u, "seed": seed })))
}

/// Checks `Re tr(CR) ≤ ‖R‖_c`, and positivity of `R` whenever equality holds.
pub fn trace_psd_check(c: &[f64], r: &CMatrix, tol: f64) -> Result<Certificate> {
    if c.iter().any(|&v| v.is_nan() || v <= 0.0) {
        return Err(Error::InvalidParameter("weights must be positive".into()));
    }
    if r.rows() != c.len() || !r.is_square() {
        return Err(Error::Arity {
            expected: c.len(),
            got: r.rows(),
        });
    }
    let t: f64 = c.iter().enumerate().map(|(j, cj)| cj * r[(j, j)].re).sum();
    let s = r.singular_values()?;
    let norm = cnorm_of_spectrum(c, &s)?;
    let mut cert = Certificate::at_most("trace-psd", t, norm, tol);
    let tight = (t - norm).abs() <= TRACE_EQUALITY_TOL;
    if tight {
        let skew = (r - &r.adjoint()).spectral_norm();
        let lambda_min = r.hermitian_part().hermitian_eigenvalues()[0];
        cert = cert
            .with_check("hermitian", skew <= PSD_TOL)
            .with_check("psd", lambda_min >= -PSD_TOL);
    }
    Ok(cert.with_witness(json!({ "trace_cr": t, "c_norm": norm, "psd_claimed": tight })))
}

/// `tr R = Σ sⱼ(R)`, which characterises positive semidefinite `R`.
pub fn psd_trace_equivalence(r: &CMatrix) -> bool {
    let s: f64 = r
        .singular_values()
        .map(|s| s.iter().sum())
        .unwrap_or(f64::NAN);
    (r.trace() - C64::new(s, 0.0)).norm() <= EQUIVALENCE_TOL
}

/// Hermitian within `1e-8` and smallest eigenvalue `≥ −1e-8`.
pub fn is_psd_direct(r: &CMatrix) -> bool {
    if (r - &r.adjoint()).max_abs() > EQUIVALENCE_TOL {
        return false;
    }
    r.hermitian_eigenvalues()
        .first()
        .is_none_or(|&l| l >= -EQUIVALENCE_TOL)
}

/// `A = A₁ + ⋯ + A_N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(rename = "N")]
    pub n_parts: usize,
    pub parts: Vec<TailOperator>,
}

impl Decomposition {
    pub fn sum(&self) -> TailOperator {
        self.parts
            .iter()
            .fold(TailOperator::zero(), |acc, p| &acc + p)
    }

    pub fn combine(&self, a: &[f64]) -> TailOperator {
        self.parts
            .iter()
            .zip(a)
            .fold(TailOperator::zero(), |acc, (p, &w)| &acc + &p.scale_real(w))
    }
}

/// `Aⱼ = U·Pⱼ` for coordinate projections `P₁, …, P_{N−1}` of rank `n` and
/// `P_N = I − ΣPⱼ`, which carries the tail.
pub fn build_isometry_decomposition(
    u: &TailOperator,
    f: &SymmetricNorm,
    n_parts: usize,
) -> Result<Decomposition> {
    if !u.is_maximal_partial_isometry() {
        return Err(Error::Precondition("not a maximal partial isometry".into()));
    }
    if (f.at_ones() - 1.0).abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "f(1, …, 1) = {}, expected 1",
            f.at_ones()
        )));
    }
    isometry_parts(u, f.arity(), n_parts)
}

fn isometry_parts(u: &TailOperator, n: usize, n_parts: usize) -> Result<Decomposition> {
    if n_parts == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let u = u.padded_to(n * (n_parts - 1));
    let dim = u.m();
    let parts = (0..n_parts)
        .map(|j| {
            let cols = if j + 1 < n_parts {
                j * n..(j + 1) * n
            } else {
                (n_parts - 1) * n..dim
            };
            let block = CMatrix::from_fn(dim, dim, |r, c| {
                if cols.contains(&c) {
                    u.block()[(r, c)]
                } else {
                    ZERO
                }
            });
            let tail = if j + 1 == n_parts { u.tail() } else { ZERO };
            TailOperator::new(block, tail)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { n_parts, parts })
}

/// `‖Σ aⱼAⱼ‖_f = max |aⱼ|` for each listed coefficient vector.
pub fn verify_flat_on(
    parts: &[TailOperator],
    f: &SymmetricNorm,
    coefficients: &[Vec<f64>],
    tol: f64,
) -> Result<Certificate> {
    let d = Decomposition {
        n_parts: parts.len(),
        parts: parts.to_vec(),
    };
    let items = coefficients
        .iter()
        .map(|a| {
            if a.len() != parts.len() {
                return Err(Error::Arity {
                    expected: parts.len(),
                    got: a.len(),
                });
            }
            let lhs = norm_f(&d.combine(a), f);
            let rhs = a.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            Ok(Certificate::equal("flat", lhs, rhs, tol).with_witness(json!({ "a": a })))
        })
        .collect::<Result<Vec<_>>>()?;
    Certificate::worst_of("flat-decomposition", &items)
        .ok_or_else(|| Error::InvalidParameter("no coefficient vectors".into()))
}

/// [`verify_flat_on`] for the `2N` signed unit vectors and `samples` random
/// vectors in `[−2, 2]^N`.
pub fn verify_flat_decomposition(
    parts: &[TailOperator],
    f: &SymmetricNorm,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<Certificate> {
    let n = parts.len();
    let mut coeffs = Vec::with_capacity(2 * n + samples);
    for j in 0..n {
        for sign in [1.0, -1.0] {
            let mut e = vec![0.0; n];
            e[j] = sign;
            coeffs.push(e);
        }
    }
    let mut rng = sample::rng_for(seed, 0);
    coeffs.extend((0..samples).map(|_| (0..n).map(|_| rng.random_range(-2.0..=2.0)).collect()));
    verify_flat_on(parts, f, &coeffs, tol)
}

/// Search effort for [`extreme_dichotomy_probe`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub restarts: usize,
    /// Proposals per restart.
    pub steps: usize,
    /// Best restarts carried into the polishing phase.
    pub polish: usize,
    /// Proposals per polished candidate.
    pub polish_steps: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            restarts: 10_000,
            steps: 40,
            polish: 8,
            polish_steps: 4_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub certificate: Certificate,
    pub seed: u64,
    pub budget: SearchBudget,
    pub best_residual: f64,
    pub decomposition: Option<Decomposition>,
}

/// Looks for an `N`-part flat decomposition of an extreme point `A` with
/// every part nonzero.
///
/// A scalar multiple of a maximal partial isometry gets the constructive
/// decomposition. Otherwise a seeded random search runs over parts that are
/// real-diagonal in the singular frames of `A`: each restart draws a split
/// of the spectrum and performs pairwise transfers between parts (which keep
/// `ΣAⱼ = A`), accepting only moves that lower the worst flatness defect over
/// the signed unit and pair vectors. The best restarts are then polished on a
/// larger coefficient set. "None found" is a heuristic outcome.
pub fn extreme_dichotomy_probe(
    a: &TailOperator,
    f: &SymmetricNorm,
    n_parts: usize,
    budget: SearchBudget,
    seed: u64,
    exec: Execution,
) -> Result<ProbeReport> {
    if n_parts < 2 {
        return Err(Error::InvalidParameter("N must be at least 2".into()));
    }
    let form = match_extreme_form(a, f)?;
    if !form.flag {
        return Err(Error::Precondition("A is not of extreme-point form".into()));
    }
    let n = f.arity();
    let theorem_n = n * n + 1;
    let tol = crate::uinorm::DEFAULT_TOL;

    let s1 = form.s[0];
    let isometry_multiple = s1 > 0.0
        && (a.tail().norm() - s1).abs() <= UNIT_NORM_TOL
        && a.finite_singular_values()
            .iter()
            .all(|&v| (v - s1).abs() <= UNIT_NORM_TOL);

    if isometry_multiple {
        let u = a.scale_real(1.0 / s1);
        let mut d = isometry_parts(&u, n, n_parts)?;
        d.parts = d.parts.iter().map(|p| p.scale_real(s1)).collect();
        let check = verify_flat_decomposition(&d.parts, f, 100, seed, tol)?;
        let residual = (check.lhs - check.rhs).abs();
        let cert = Certificate::at_most("extreme-dichotomy", residual, tol, 0.0)
            .with_check("sum", d.sum().spectral_distance(a) <= 1e-10)
            .with_check(
                "nonzero-parts",
                d.parts.iter().all(|p| norm_f(p, f) >= NONZERO_PART),
            )
            .with_witness(json!({
                "outcome": "found",
                "method": "constructive",
                "predicted": "found",
                "N": n_parts,
            }));
        return Ok(ProbeReport {
            certificate: cert,
            seed,
            budget,
            best_residual: residual,
            decomposition: Some(d),
        });
    }

    let search = DiagonalSearch::new(a, f, &form, n_parts);
    let restarts = map_indexed(exec, budget.restarts, |i| {
        let mut rng = sample::rng_for(seed, i as u64);
        let mut parts = search.initial(&mut rng, i);
        let score = search.descend(&mut parts, &search.coarse, budget.steps, &mut rng);
        (score, i, parts)
    });
    let mut ranked: Vec<&(f64, usize, Vec<Vec<f64>>)> = restarts.iter().collect();
    ranked.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

    let polished = map_indexed(exec, budget.polish.min(ranked.len()), |r| {
        let (_, i, parts) = ranked[r];
        let mut rng = sample::rng_for(seed ^ 0x9e37_79b9_7f4a_7c15, *i as u64);
        let mut parts = parts.clone();
        search.descend(&mut parts, &search.fine, budget.polish_steps, &mut rng);
        let ops = search.operators(&parts);
        let nonzero = ops.iter().all(|p| norm_f(p, f) >= NONZERO_PART);
        let residual = match verify_flat_decomposition(&ops, f, 200, seed, tol) {
            Ok(c) if nonzero => (c.lhs - c.rhs).abs(),
            _ => f64::INFINITY,
        };
        (residual, ops)
    });
    let (best_residual, best_ops) = polished
        .into_iter()
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .unwrap_or((f64::INFINITY, Vec::new()));
    let found = best_residual <= tol;
    let predicted = if n_parts >= theorem_n { "none" } else { "open" };
    let outcome = if found { "found" } else { "none-found" };
    let cert = if found && predicted == "open" {
        Certificate::at_most("extreme-dichotomy", best_residual, tol, 0.0)
    } else {
        Certificate::at_most("extreme-dichotomy", tol, best_residual, 0.0)
    };
    let cert = cert.with_witness(json!({
        "outcome": outcome,
        "method": "diagonal-transfer-search",
        "predicted": predicted,
        "heuristic": !found,
        "N": n_parts,
        "best_residual": best_residual,
        "seed": seed,
        "restarts": budget.restarts,
    }));
    Ok(ProbeReport {
        certificate: cert,
        seed,
        budget,
        best_residual,
        decomposition: found.then_some(Decomposition {
            n_parts,
            parts: best_ops,
        }),
    })
}

/// Parts `Aⱼ = X diag(dⱼ) Y* ⊕ tⱼ·phase` in the singular frames `X`, `Y` of
/// `A`, stored as rows `(dⱼ, tⱼ)` of real coordinates summing to `(σ, |τ|)`.
struct DiagonalSearch<'a> {
    f: &'a SymmetricNorm,
    frames: (CMatrix, CMatrix),
    phase: C64,
    target: Vec<f64>,
    n_parts: usize,
    coarse: Vec<Vec<f64>>,
    fine: Vec<Vec<f64>>,
}

impl<'a> DiagonalSearch<'a> {
    fn new(a: &TailOperator, f: &'a SymmetricNorm, form: &ExtremeForm, n_parts: usize) -> Self {
        let p = a.padded(f.arity());
        let svd = p.block().svd().expect("finite square block");
        let mut target = svd.s.clone();
        target.push(p.tail().norm());
        let mut coarse = Vec::new();
        for i in 0..n_parts {
            for sign in [1.0, -1.0] {
                let mut e = vec![0.0; n_parts];
                e[i] = sign;
                coarse.push(e);
            }
            for j in i + 1..n_parts {
                for sign in [1.0, -1.0] {
                    let mut e = vec![0.0; n_parts];
                    e[i] = 1.0;
                    e[j] = sign;
                    coarse.push(e);
                }
            }
        }
        let mut fine = coarse.clone();
        let mut rng = sample::rng_for(0x5eed, 0);
        fine.extend((0..64).map(|_| (0..n_parts).map(|_| rng.random_range(-1.0..=1.0)).collect()));
        Self {
            f,
            frames: (svd.u, svd.v),
            phase: form.tail_phase,
            target,
            n_parts,
            coarse,
            fine,
        }
    }

    fn initial<R: Rng + ?Sized>(&self, rng: &mut R, restart: usize) -> Vec<Vec<f64>> {
        let dims = self.target.len();
        let scale = self.target[0].max(1e-3);
        let mut parts = vec![vec![0.0; dims]; self.n_parts];
        for (i, &t) in self.target.iter().enumerate() {
            if restart.is_multiple_of(2) {
                let owner = rng.random_range(0..self.n_parts);
                parts[owner][i] = t;
                for part in parts.iter_mut() {
                    let g: f64 = rng.sample(StandardNormal);
                    part[i] += 0.05 * scale * g;
                }
            } else {
                let spread = rng.random_range(0.0..1.0) * scale;
                for part in parts.iter_mut() {
                    let g: f64 = rng.sample(StandardNormal);
                    part[i] = t / self.n_parts as f64 + spread * g;
                }
            }
            let mean: f64 = parts.iter().map(|p| p[i]).sum::<f64>() / self.n_parts as f64;
            let shift = mean - t / self.n_parts as f64;
            parts.iter_mut().for_each(|p| p[i] -= shift);
        }
        parts
    }

    /// Root-mean-square of `‖Σ aⱼAⱼ‖ − max |aⱼ|` over `coeffs`.
    fn defect(&self, parts: &[Vec<f64>], coeffs: &[Vec<f64>]) -> f64 {
        let n = self.f.arity();
        let dims = self.target.len();
        let mut combo = vec![0.0; dims - 1];
        let mut finite = vec![0.0; dims - 1];
        let mut total = 0.0;
        for a in coeffs {
            combo.iter_mut().for_each(|v| *v = 0.0);
            let mut tail = 0.0;
            for (part, &w) in parts.iter().zip(a) {
                if w == 0.0 {
                    continue;
                }
                for (c, p) in combo.iter_mut().zip(part) {
                    *c += w * p;
                }
                tail += w * part[dims - 1];
            }
            for (d, c) in finite.iter_mut().zip(&combo) {
                *d = c.abs();
            }
            finite.sort_by(|x, y| y.total_cmp(x));
            let s = merge_spectrum(&finite, tail.abs(), n);
            let value = self.f.eval_canonical(&s.values);
            let target = a.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            total += (value - target).powi(2);
        }
        (total / coeffs.len() as f64).sqrt()
    }

    /// Random transfers between pairs of parts, either along one coordinate
    /// or along a random direction; only improving moves are kept.
    fn descend<R: Rng + ?Sized>(
        &self,
        parts: &mut [Vec<f64>],
        coeffs: &[Vec<f64>],
        steps: usize,
        rng: &mut R,
    ) -> f64 {
        let dims = self.target.len();
        let mut score = self.defect(parts, coeffs);
        let mut step = 0.25 * self.target[0].max(1e-3);
        let mut misses = 0;
        let mut delta = vec![0.0; dims];
        for _ in 0..steps {
            let j = rng.random_range(0..self.n_parts);
            let k = (j + rng.random_range(1..self.n_parts)) % self.n_parts;
            if rng.random::<bool>() {
                delta.iter_mut().for_each(|d| *d = 0.0);
                let g: f64 = rng.sample(StandardNormal);
                delta[rng.random_range(0..dims)] = step * g;
            } else {
                for d in delta.iter_mut() {
                    let g: f64 = rng.sample(StandardNormal);
                    *d = step * g;
                }
            }
            for i in 0..dims {
                parts[j][i] += delta[i];
                parts[k][i] -= delta[i];
            }
            let trial = self.defect(parts, coeffs);
            if trial < score {
                score = trial;
                misses = 0;
                step = (step * 1.5).min(self.target[0].max(1e-3));
            } else {
                for i in 0..dims {
                    parts[j][i] -= delta[i];
                    parts[k][i] += delta[i];
                }
                misses += 1;
                if misses >= 8 {
                    step *= 0.5;
                    misses = 0;
                }
            }
            if step < 1e-15 || score == 0.0 {
                break;
            }
        }
        score
    }

    fn operators(&self, parts: &[Vec<f64>]) -> Vec<TailOperator> {
        let (x, y) = &self.frames;
        let dim = x.rows();
        parts
            .iter()
            .map(|d| {
                let block = CMatrix::from_fn(dim, dim, |r, c| {
                    (0..dim).map(|k| x[(r, k)] * d[k] * y[(c, k)].conj()).sum()
                });
                TailOperator::new(block, self.phase * d[dim]).expect("finite square block")
            })
            .collect()
    }
}

/// Whether a flatness certificate reports equality on every coefficient vector.
pub fn is_flat(cert: &Certificate) -> bool {
    cert.verdict == Verdict::Equality && cert.passed()
}
