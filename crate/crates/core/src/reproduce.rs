//! Recomputes every worked value quoted in the source material and tabulates
//! it against the quoted figure.

use serde::Serialize;

use crate::ballgeo::{extreme_dichotomy_probe, match_extreme_form, SearchBudget};
use crate::error::Result;
use crate::exec::Execution;
use crate::linalg::C64;
use crate::opmodel::{compression_lower_bound, FrameSeeding, TailOperator};
use crate::sample;
use crate::suites::{example_splits, VERSION};
use crate::uinorm::{norm_c, norm_f, radius_constants, radius_witnesses, triple_product};
use crate::vecnorm::SymmetricNorm;

pub const EXAMPLES_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub quantity: String,
    pub expected: f64,
    pub computed: f64,
    pub delta: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExamplesReport {
    pub version: &'static str,
    pub tolerance: f64,
    pub max_delta: f64,
    pub passed: bool,
    pub rows: Vec<Row>,
}

impl ExamplesReport {
    /// Plain-text table, one row per quantity.
    pub fn table(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.quantity.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = format!(
            "{:<width$}  {:>12}  {:>18}  {:>10}\n",
            "quantity", "expected", "computed", "|Δ|"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<width$}  {:>12.6}  {:>18.12}  {:>10.2e}\n",
                r.quantity, r.expected, r.computed, r.delta
            ));
        }
        out
    }
}

struct Table(Vec<Row>);

impl Table {
    fn push(&mut self, quantity: impl Into<String>, expected: f64, computed: f64) {
        let delta = (expected - computed).abs();
        self.0.push(Row {
            quantity: quantity.into(),
            expected,
            computed,
            delta: if delta.is_nan() { f64::INFINITY } else { delta },
        });
    }

    fn flag(&mut self, quantity: impl Into<String>, expected: bool, computed: bool) {
        self.push(
            quantity,
            f64::from(u8::from(expected)),
            f64::from(u8::from(computed)),
        );
    }
}

fn grid() -> Vec<(f64, f64)> {
    let pts: Vec<f64> = (0..=20).map(|i| -2.0 + 0.2 * i as f64).collect();
    pts.iter()
        .flat_map(|&mu| pts.iter().map(move |&nu| (mu, nu)))
        .collect()
}

fn max_over_grid(mut g: impl FnMut(f64, f64) -> f64) -> f64 {
    grid()
        .into_iter()
        .map(|(mu, nu)| g(mu, nu))
        .fold(0.0, f64::max)
}

fn unit(z: [f64; 2], w: [f64; 2]) -> Vec<C64> {
    let v = vec![C64::new(z[0], z[1]), C64::new(w[0], w[1])];
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|c| c / norm).collect()
}

/// Rebuilds the table. `budget` controls the dichotomy probe on the first
/// example operator.
pub fn reproduce_examples(
    budget: SearchBudget,
    seed: u64,
    exec: Execution,
) -> Result<ExamplesReport> {
    let mut t = Table(Vec::new());
    let [(maxc, a1, b1, d1), (kf2, a2, b2, d2)] = example_splits();

    let s = a1.singular_values(3).values;
    for (j, (e, c)) in [0.4, 0.4, 0.2].iter().zip(&s).enumerate() {
        t.push(format!("example-1 s{}(A)", j + 1), *e, *c);
    }
    let s = a2.singular_values(2).values;
    for (j, (e, c)) in [1.0, 0.0].iter().zip(&s).enumerate() {
        t.push(format!("example-2 s{}(A)", j + 1), *e, *c);
    }

    t.push("example-1 ‖A‖", 1.0, norm_f(&a1, &maxc));
    t.push(
        "example-1 ‖A‖_c, c=(1,1,1)",
        1.0,
        norm_c(&a1, &[1.0, 1.0, 1.0])?,
    );
    let mut rng = sample::rng_for(seed, 0);
    t.push(
        "example-1 compression bound of ‖A‖",
        1.0,
        compression_lower_bound(&a1, &maxc, 16, FrameSeeding::SingularFrames, &mut rng)?,
    );
    t.push(
        "example-1 μB+νD closed form, max distance",
        0.0,
        max_over_grid(|mu, nu| {
            let lhs = &b1.scale_real(mu) + &d1.scale_real(nu);
            let rhs = TailOperator::real_diag(&[0.4 * mu, 0.4 * nu], (mu + nu) / 10.0);
            lhs.spectral_distance(&rhs)
        }),
    );
    t.push(
        "example-1 ‖μB+νD‖ − max(|μ|,|ν|), grid max",
        0.0,
        max_over_grid(|mu, nu| {
            (norm_f(&(&b1.scale_real(mu) + &d1.scale_real(nu)), &maxc) - mu.abs().max(nu.abs()))
                .abs()
        }),
    );
    let ab1 = &a1 + &b1;
    t.push("example-1 ‖A+B‖", 2.0, norm_f(&ab1, &maxc));
    t.push(
        "example-1 ‖A+B‖_c, c=(5/2,0,0)",
        2.0,
        norm_c(&ab1, &[2.5, 0.0, 0.0])?,
    );

    t.push("example-2 ‖A‖₂", 1.0, norm_f(&a2, &kf2));
    t.push(
        "example-2 ‖μB+νD‖₂ − ½(|μ+ν|+|μ−ν|), grid max",
        0.0,
        max_over_grid(|mu, nu| {
            let closed = 0.5 * ((mu + nu).abs() + (mu - nu).abs());
            (norm_f(&(&b2.scale_real(mu) + &d2.scale_real(nu)), &kf2) - closed).abs()
        }),
    );
    t.push(
        "example-2 ½(|μ+ν|+|μ−ν|) − max(|μ|,|ν|), grid max",
        0.0,
        max_over_grid(|mu, nu| {
            (0.5 * ((mu + nu).abs() + (mu - nu).abs()) - mu.abs().max(nu.abs())).abs()
        }),
    );
    let ab2 = &a2 + &b2;
    t.push("example-2 ‖A+B‖₂", 2.0, norm_f(&ab2, &kf2));
    t.push(
        "example-2 ‖A+B‖_c, c=(1,1)",
        2.0,
        norm_c(&ab2, &[1.0, 1.0])?,
    );

    let f = SymmetricNorm::ky_fan(2, 2)?;
    let rc = radius_constants(&f);
    t.push("ky-fan-2 α", 1.0, rc.alpha);
    t.push("ky-fan-2 β", 2.0, rc.beta);
    let (lo, hi) = radius_witnesses(&f);
    t.push("r(xx*)", 1.0, lo.numerical_radius());
    t.push(
        "ky-fan-2 ‖xx*‖ − α·r(xx*)",
        0.0,
        norm_f(&lo, &f) - rc.alpha * lo.numerical_radius(),
    );
    t.push("ky-fan-2 ‖2E₁₂‖", 2.0, norm_f(&hi, &f));
    t.push(
        "ky-fan-2 ‖2E₁₂‖ − β·r(2E₁₂)",
        0.0,
        norm_f(&hi, &f) - rc.beta * hi.numerical_radius(),
    );

    t.flag(
        "example-1 A is a maximal partial isometry",
        false,
        a1.is_maximal_partial_isometry(),
    );
    t.flag(
        "example-1 extreme-form flag",
        true,
        match_extreme_form(&a1, &maxc)?.flag,
    );
    t.flag(
        "example-2 extreme-form flag",
        true,
        match_extreme_form(&a2, &kf2)?.flag,
    );

    let x = unit([0.6, 0.0], [0.0, 0.8]);
    let y = unit([1.0, 0.0], [1.0, 1.0]);
    let z = unit([0.0, 1.0], [2.0, 0.0]);
    let xy = TailOperator::rank_one(&x, &y);
    t.push(
        "xy*∘xy*∘xy* − xy*, distance",
        0.0,
        triple_product(&xy, &xy, &xy).spectral_distance(&xy),
    );
    let yz = TailOperator::rank_one(&y, &z);
    t.push(
        "ky-fan-2 ‖xy*·yz*‖ − ‖xy*‖‖yz*‖",
        0.0,
        norm_f(&(&xy * &yz), &f) - norm_f(&xy, &f) * norm_f(&yz, &f),
    );
    t.push(
        "xy*·yz* − xz*, distance",
        0.0,
        (&xy * &yz).spectral_distance(&TailOperator::rank_one(&x, &z)),
    );
    let spectral = SymmetricNorm::spectral(2)?;
    let id = TailOperator::identity();
    t.push(
        "spectral ‖I·I‖ − ‖I‖‖I‖",
        0.0,
        norm_f(&(&id * &id), &spectral) - norm_f(&id, &spectral).powi(2),
    );

    let probe = extreme_dichotomy_probe(&a1, &maxc, 10, budget, seed, exec)?;
    t.flag(
        "example-1 flat 10-part split found",
        false,
        probe.certificate.witness["outcome"] == "found",
    );

    let rows = t.0;
    let max_delta = rows.iter().map(|r| r.delta).fold(0.0, f64::max);
    Ok(ExamplesReport {
        version: VERSION,
        tolerance: EXAMPLES_TOL,
        max_delta,
        passed: max_delta <= EXAMPLES_TOL,
        rows,
    })
}
