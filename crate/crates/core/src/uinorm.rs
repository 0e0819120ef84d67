//! Unitarily invariant norms `‖A‖_f = f(s₁(A), …, sₙ(A))` and certificates
//! for the inequalities and equality cases they satisfy.

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::opmodel::TailOperator;
use crate::sample;
use crate::vecnorm::{cnorm_of_spectrum, SymmetricNorm};

/// Default absolute tolerance for norm inequalities.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default tolerance for the numerical-radius sandwich.
pub const RADIUS_TOL: f64 = 1e-8;

const CROSS_TOL: f64 = 1e-12;
const ALGEBRA_TOL: f64 = 1e-10;
const ALGEBRA_GRID: usize = 200;

/// `‖A‖_f`.
pub fn norm_f(a: &TailOperator, f: &SymmetricNorm) -> f64 {
    f.eval_canonical(&a.singular_values(f.arity()).values)
}

/// `‖A‖_c = Σ cⱼ sⱼ(A)`.
pub fn norm_c(a: &TailOperator, c: &[f64]) -> Result<f64> {
    if c.is_empty() {
        return Err(Error::InvalidParameter("empty weight vector".into()));
    }
    cnorm_of_spectrum(c, &a.singular_values(c.len()).values)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusConstants {
    pub alpha: f64,
    pub beta: f64,
}

/// The best constants in `α·r(A) ≤ ‖A‖_f ≤ β·r(A)`.
pub fn radius_constants(f: &SymmetricNorm) -> RadiusConstants {
    let n = f.arity();
    let k = n / 2;
    let mut x = vec![0.0; n];
    x[..k].iter_mut().for_each(|v| *v = 1.0);
    if n % 2 == 1 {
        x[k] = 0.5;
    }
    RadiusConstants {
        alpha: f.at_e1(),
        beta: 2.0 * f.eval_canonical(&x),
    }
}

pub fn verify_radius_sandwich(a: &TailOperator, f: &SymmetricNorm, tol: f64) -> Certificate {
    verify_radius_sandwich_with(a, f, a.numerical_radius(), tol)
}

/// As [`verify_radius_sandwich`] with `r(A)` supplied by the caller, so one
/// radius computation can serve several norms.
pub fn verify_radius_sandwich_with(
    a: &TailOperator,
    f: &SymmetricNorm,
    r: f64,
    tol: f64,
) -> Certificate {
    let RadiusConstants { alpha, beta } = radius_constants(f);
    let norm = norm_f(a, f);
    let lower = alpha * r - norm;
    let upper = norm - beta * r;
    let attained = if lower.abs() <= tol {
        "alpha"
    } else if upper.abs() <= tol {
        "beta"
    } else {
        "none"
    };
    Certificate::at_most("radius-sandwich", lower.max(upper), 0.0, tol).with_witness(json!({
        "norm": norm,
        "radius": r,
        "alpha": alpha,
        "beta": beta,
        "attained": attained,
    }))
}

/// Operators attaining the lower and upper radius bounds: `E₁₁`, and
/// `2(E₁₂ + E₃₄ + ⋯)` plus `Eₙₙ` when `n` is odd.
pub fn radius_witnesses(f: &SymmetricNorm) -> (TailOperator, TailOperator) {
    let n = f.arity();
    let lower = TailOperator::real_diag(&[1.0], 0.0);
    let mut block = crate::linalg::CMatrix::zeros(n, n);
    for j in 0..n / 2 {
        block[(2 * j, 2 * j + 1)] = C64::new(2.0, 0.0);
    }
    if n % 2 == 1 {
        block[(n - 1, n - 1)] = C64::new(1.0, 0.0);
    }
    let upper = TailOperator::finite(block).expect("finite square block");
    (lower, upper)
}

/// Upper constant valid for every operator in the model: each `sⱼ(A)` is at
/// most `2r(A)`, so `‖A‖ ≤ 2f(1, …, 1)·r(A)`. Exceeds `beta` unless `f` is
/// flat beyond its first `⌈n/2⌉` coordinates.
pub fn sharp_beta(f: &SymmetricNorm) -> f64 {
    2.0 * f.at_ones()
}

/// `2(E₁₂ + E₃₄ + ⋯ + E₂ₙ₋₁,₂ₙ)`: numerical radius 1 and `n` singular values
/// equal to 2, so its norm is `sharp_beta(f)`.
pub fn sharp_beta_witness(f: &SymmetricNorm) -> TailOperator {
    let n = f.arity();
    let mut block = crate::linalg::CMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        block[(2 * j, 2 * j + 1)] = C64::new(2.0, 0.0);
    }
    TailOperator::finite(block).expect("finite square block")
}

/// Certifies `‖A‖ ≤ beta·r(A)` on [`sharp_beta_witness`]. Violated exactly
/// when `beta < sharp_beta(f)`.
pub fn beta_witness_cert(f: &SymmetricNorm, tol: f64) -> Certificate {
    let w = sharp_beta_witness(f);
    let r = w.numerical_radius();
    let RadiusConstants { beta, .. } = radius_constants(f);
    Certificate::at_most("radius-beta-upper", norm_f(&w, f), beta * r, tol).with_witness(json!({
        "operator": w,
        "radius": r,
        "beta": beta,
        "sharp_beta": sharp_beta(f),
    }))
}

/// `‖AB‖ ≤ s₁(A)‖B‖` and `‖AB‖ ≤ s₁(B)‖A‖`.
pub fn uniform_cert(
    f: &SymmetricNorm,
    a: &TailOperator,
    b: &TailOperator,
    tol: f64,
) -> Certificate {
    let ab = norm_f(&(a * b), f);
    let (na, nb) = (norm_f(a, f), norm_f(b, f));
    let (sa, sb) = (a.spectral_norm(), b.spectral_norm());
    let left = ab - sa * nb;
    let right = ab - sb * na;
    Certificate::at_most("uniform", left.max(right), 0.0, tol).with_witness(json!({
        "norm_ab": ab,
        "s1_a_norm_b": sa * nb,
        "s1_b_norm_a": sb * na,
    }))
}

pub fn is_cross_norm(f: &SymmetricNorm) -> bool {
    (f.at_e1() - 1.0).abs() <= CROSS_TOL
}

/// `f(e₁)·s₁(A) ≤ ‖A‖_f ≤ f(1, …, 1)·s₁(A)`.
pub fn spectral_bounds_cert(a: &TailOperator, f: &SymmetricNorm, tol: f64) -> Certificate {
    let s1 = a.spectral_norm();
    let norm = norm_f(a, f);
    let lower = f.at_e1() * s1 - norm;
    let upper = norm - f.at_ones() * s1;
    Certificate::at_most("spectral-bounds", lower.max(upper), 0.0, tol).with_witness(json!({
        "norm": norm,
        "s1": s1,
        "lower": f.at_e1() * s1,
        "upper": f.at_ones() * s1,
    }))
}

pub fn is_submultiplicative(f: &SymmetricNorm) -> bool {
    f.at_e1() >= 1.0 - CROSS_TOL
}

/// `‖AB‖ ≤ ‖A‖‖B‖`.
pub fn submult_cert(
    f: &SymmetricNorm,
    a: &TailOperator,
    b: &TailOperator,
    tol: f64,
) -> Certificate {
    let ab = norm_f(&(a * b), f);
    let (na, nb) = (norm_f(a, f), norm_f(b, f));
    Certificate::at_most("submultiplicative", ab, na * nb, tol)
        .with_witness(json!({ "norm_a": na, "norm_b": nb }))
}

/// For `f(e₁) < 1`, the product `A = B = E₁₁` violating submultiplicativity.
pub fn submult_counterexample(f: &SymmetricNorm, tol: f64) -> Option<Certificate> {
    if is_submultiplicative(f) {
        return None;
    }
    let e = TailOperator::real_diag(&[1.0], 0.0);
    Some(submult_cert(f, &e, &e, tol).with_inputs(json!({ "A": &e, "B": &e })))
}

/// Whether `f` is the spectral gauge `x ↦ max |xⱼ|`, tested on a fixed grid.
pub fn is_algebra_norm(f: &SymmetricNorm) -> bool {
    if (f.at_e1() - 1.0).abs() > ALGEBRA_TOL {
        return false;
    }
    let n = f.arity();
    algebra_grid(n)
        .iter()
        .all(|x| (f.eval_canonical(x) - x[0]).abs() <= ALGEBRA_TOL)
}

/// Deterministic descending nonnegative vectors: a Weyl sequence with
/// irrational steps, plus the all-ones vector.
fn algebra_grid(n: usize) -> Vec<Vec<f64>> {
    let steps: Vec<f64> = (0..n)
        .map(|j| ((j + 2) as f64).sqrt().fract().max(0.1))
        .collect();
    let mut grid: Vec<Vec<f64>> = (1..ALGEBRA_GRID)
        .map(|i| {
            let x: Vec<f64> = steps.iter().map(|s| (i as f64 * s).fract()).collect();
            crate::vecnorm::canonicalize(&x)
        })
        .collect();
    grid.push(vec![1.0; n]);
    grid
}

/// The Jordan triple product `½(AB*C + CB*A)`.
pub fn triple_product(a: &TailOperator, b: &TailOperator, c: &TailOperator) -> TailOperator {
    let bs = b.adjoint();
    let left = &(a * &bs) * c;
    let right = &(c * &bs) * a;
    (&left + &right).scale_real(0.5)
}

/// `‖A∘B∘C‖ ≤ ‖A‖‖B‖‖C‖`.
pub fn triple_submult_cert(
    f: &SymmetricNorm,
    a: &TailOperator,
    b: &TailOperator,
    c: &TailOperator,
    tol: f64,
) -> Certificate {
    let lhs = norm_f(&triple_product(a, b, c), f);
    let (na, nb, nc) = (norm_f(a, f), norm_f(b, f), norm_f(c, f));
    Certificate::at_most("triple-submultiplicative", lhs, na * nb * nc, tol).with_witness(json!({
        "f_e1": f.at_e1(),
        "norms": [na, nb, nc],
    }))
}

/// Whether every `T` with `‖T‖_f = s₁(T)` has rank one, tested on the
/// rank-two spectra `(1, t, 0, …)`.
pub fn rank_one_extremal(f: &SymmetricNorm) -> bool {
    let n = f.arity();
    if n < 2 {
        return false;
    }
    [0.01, 0.25, 0.5, 1.0].iter().all(|&t| {
        let mut x = vec![0.0; n];
        x[0] = 1.0;
        x[1] = t;
        f.eval_canonical(&x) > f.at_e1() + CROSS_TOL
    })
}

/// Equality case of `‖AB‖ ≤ ‖A‖‖B‖`.
///
/// For cross norms the certificate records whether the verdict agrees with
/// `s₁(AB) = ‖A‖‖B‖`. With `rank_one` set (the caller asserts that only
/// rank-one operators satisfy `‖T‖ = s₁(T)`), an equality verdict is also
/// matched against the form `A = xy*`, `B = yz*`. For `f(e₁) = d > 1` the
/// inequality must be strict and `‖A‖ ≥ d·s₁(A)`.
pub fn product_equality_cert(
    f: &SymmetricNorm,
    a: &TailOperator,
    b: &TailOperator,
    rank_one: bool,
    tol: f64,
) -> Result<Certificate> {
    if !is_submultiplicative(f) {
        return Err(Error::NotSubmultiplicative(f.at_e1()));
    }
    let n = f.arity();
    let (sa, sb) = (a.singular_values(n), b.singular_values(n));
    if sa.s1() == 0.0 || sb.s1() == 0.0 {
        return Err(Error::ZeroOperand);
    }
    let ab = a * b;
    let (na, nb) = (f.eval_canonical(&sa.values), f.eval_canonical(&sb.values));
    let nab = norm_f(&ab, f);
    let s1ab = ab.spectral_norm();
    let mut cert = Certificate::at_most("product-equality", nab, na * nb, tol);
    let equality = cert.verdict == Verdict::Equality;
    cert = cert.with_check("s1-lower-bound", s1ab <= nab + tol);

    if is_cross_norm(f) {
        let criterion = (s1ab - na * nb).abs() <= tol;
        cert = cert.with_check("s1-criterion", criterion == equality);
        if rank_one {
            cert = cert.with_check("rank-one-extremal", rank_one_extremal(f));
            if equality {
                cert = cert.with_check("rank-one-form", rank_one_chain(a, b, tol));
            }
        }
    } else {
        let d = f.at_e1();
        cert = cert
            .with_check("strict", !equality)
            .with_check("norm-a-dominates-d-s1", na >= d * sa.s1() - tol)
            .with_check("norm-b-dominates-d-s1", nb >= d * sb.s1() - tol);
    }
    Ok(cert.with_witness(json!({
        "norm_a": na,
        "norm_b": nb,
        "s1_ab": s1ab,
        "cross": is_cross_norm(f),
    })))
}

/// `A = xy*` and `B = yz*` up to scaling: both rank one, with the right
/// singular vector of `A` parallel to the left singular vector of `B`.
fn rank_one_chain(a: &TailOperator, b: &TailOperator, tol: f64) -> bool {
    if a.tail().norm() > tol || b.tail().norm() > tol {
        return false;
    }
    let m = a.m().max(b.m());
    let (a, b) = (a.padded_to(m), b.padded_to(m));
    let (Ok(sa), Ok(sb)) = (a.block().svd(), b.block().svd()) else {
        return false;
    };
    let rank_one = |s: &[f64]| !s.is_empty() && s.get(1).is_none_or(|&v| v <= tol * s[0].max(1.0));
    if !rank_one(&sa.s) || !rank_one(&sb.s) {
        return false;
    }
    let va = sa.v.column(0);
    let ub = sb.u.column(0);
    let overlap: C64 = va.iter().zip(&ub).map(|(p, q)| p.conj() * q).sum();
    (overlap.norm() - 1.0).abs() <= 1e-6
}

/// Executable checks of the c-norm corollary: (a) submultiplicative iff
/// `c₁ ≥ 1`; (b) cross iff `c₁ = 1`; (c) an equality pair exists iff
/// `c₁ = 1`; (d) for `c = e₁`, equality iff `s₁(AB) = s₁(A)s₁(B)`; (e) for
/// `c₁ = 1 < …`, `c₂ > 0`, equality exactly on `A = xy*`, `B = yz*`.
///
/// Parts whose hypotheses fail for the given `c` are omitted, except (d),
/// which always runs on `e₁`.
pub fn cnorm_corollary_suite(
    c: &[f64],
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<Vec<Certificate>> {
    let f = SymmetricNorm::c_norm(c.to_vec())?;
    if c.iter().any(|&v| v <= 0.0) {
        return Err(Error::InvalidParameter(
            "corollary weights must be strictly positive".into(),
        ));
    }
    let n = c.len();
    let c1 = c[0];
    let cross = (c1 - 1.0).abs() <= CROSS_TOL;
    let mut rng = sample::rng_for(seed, 0);
    let mut out = Vec::new();
    let inputs = json!({ "c": c });

    // (a)
    let a_cert = if c1 >= 1.0 - CROSS_TOL {
        let items: Vec<Certificate> = (0..samples.max(1))
            .map(|_| {
                let (a, b) = random_pair(&mut rng);
                submult_cert(&f, &a, &b, tol)
            })
            .collect();
        Certificate::worst_of("cnorm-a-submultiplicative", &items).expect("nonempty batch")
    } else {
        let e = TailOperator::real_diag(&[1.0], 0.0);
        let prod = norm_f(&e, &f);
        Certificate::at_most("cnorm-a-rank-one-violation", prod * prod, prod, tol)
            .with_check("strict", prod * prod < prod - tol)
    };
    out.push(a_cert.with_inputs(inputs.clone()).with_check(
        "predicate",
        is_submultiplicative(&f) == (c1 >= 1.0 - CROSS_TOL),
    ));

    // (b)
    let items: Vec<Certificate> = (0..samples.max(1))
        .map(|_| {
            let m = rng.random_range(n.max(1)..=n + 3);
            let x = sample::random_unit_vector(&mut rng, m);
            let y = sample::random_unit_vector(&mut rng, m);
            let r = TailOperator::rank_one(&x, &y);
            Certificate::equal("cnorm-b-rank-one-value", norm_f(&r, &f), c1, tol)
        })
        .collect();
    out.push(
        Certificate::worst_of("cnorm-b-cross", &items)
            .expect("nonempty batch")
            .with_inputs(inputs.clone())
            .with_check("predicate", is_cross_norm(&f) == cross),
    );

    // (c)
    if c1 >= 1.0 - CROSS_TOL {
        let x = sample::random_unit_vector(&mut rng, n.max(2));
        let p = TailOperator::rank_one(&x, &x);
        let witness = product_equality_cert(&f, &p, &p, false, tol)?;
        let cert = if cross {
            witness.with_check("equality-witness", true)
        } else {
            let mut items = vec![witness];
            items.extend((0..samples.max(1)).map(|_| {
                let (a, b) = random_pair(&mut rng);
                product_equality_cert(&f, &a, &b, false, tol).expect("nonzero operands")
            }));
            let strict = items.iter().all(|c| c.verdict == Verdict::Holds);
            Certificate::worst_of("cnorm-c", &items)
                .expect("nonempty batch")
                .with_check("all-strict", strict)
        };
        let mut cert = cert;
        cert.statement = "cnorm-c-equality-pair".into();
        out.push(cert.with_inputs(inputs.clone()));
    }

    // (d)
    let spectral = SymmetricNorm::spectral(n)?;
    let mut items: Vec<Certificate> = Vec::new();
    let id = TailOperator::identity();
    items.push(product_equality_cert(&spectral, &id, &id, false, tol)?);
    for _ in 0..samples.max(1) {
        let (a, b) = random_pair(&mut rng);
        items.push(product_equality_cert(&spectral, &a, &b, false, tol)?);
    }
    let unitary_equality = items[0].verdict == Verdict::Equality;
    out.push(
        Certificate::worst_of("cnorm-d-spectral", &items)
            .expect("nonempty batch")
            .with_check("unitary-pair-equality", unitary_equality),
    );

    // (e)
    if cross && n >= 2 && c[1] > 0.0 {
        let mut positives = Vec::new();
        let mut negatives = Vec::new();
        for _ in 0..samples.max(1) {
            let m = rng.random_range(n..=n + 3);
            let x: Vec<C64> = sample::random_unit_vector(&mut rng, m)
                .into_iter()
                .map(|z| z * rng.random_range(0.5..2.0))
                .collect();
            let y = sample::random_unit_vector(&mut rng, m);
            let z: Vec<C64> = sample::random_unit_vector(&mut rng, m)
                .into_iter()
                .map(|z| z * rng.random_range(0.5..2.0))
                .collect();
            let a = TailOperator::rank_one(&x, &y);
            let b = TailOperator::rank_one(&y, &z);
            positives.push(product_equality_cert(&f, &a, &b, true, tol)?);

            let y2 = sample::random_unit_vector(&mut rng, m);
            let b2 = TailOperator::rank_one(&y2, &z);
            negatives.push(product_equality_cert(&f, &a, &b2, true, tol)?);
            let (a3, b3) = random_pair(&mut rng);
            negatives.push(product_equality_cert(&f, &a3, &b3, true, tol)?);
        }
        let all_equal = positives
            .iter()
            .all(|c| c.verdict == Verdict::Equality && c.passed());
        let none_equal = negatives
            .iter()
            .all(|c| c.verdict == Verdict::Holds && c.passed());
        let mut items = positives;
        items.extend(negatives);
        out.push(
            Certificate::worst_of("cnorm-e-rank-one-characterization", &items)
                .expect("nonempty batch")
                .with_inputs(inputs)
                .with_check("witnesses-equal", all_equal)
                .with_check("negatives-strict", none_equal),
        );
    }
    Ok(out)
}

fn random_pair<R: Rng + ?Sized>(rng: &mut R) -> (TailOperator, TailOperator) {
    let ma = rng.random_range(2..=5);
    let a = sample::random_operator_of_size(rng, ma);
    let mb = rng.random_range(2..=5);
    let b = sample::random_operator_of_size(rng, mb);
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CMatrix;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};

    fn example_norm() -> SymmetricNorm {
        SymmetricNorm::max_c(vec![vec![2.5, 0.0, 0.0], vec![1.0, 1.0, 1.0]]).unwrap()
    }

    fn e12(scale: f64) -> TailOperator {
        let mut b = CMatrix::zeros(2, 2);
        b[(0, 1)] = C64::new(scale, 0.0);
        TailOperator::finite(b).unwrap()
    }

    #[test]
    fn norm_examples() {
        let a = TailOperator::real_diag(&[0.4, 0.4], 0.2);
        assert!((norm_f(&a, &example_norm()) - 1.0).abs() < 1e-12);
        let d = TailOperator::real_diag(&[1.0], 0.0);
        assert!((norm_f(&d, &SymmetricNorm::ky_fan(2, 2).unwrap()) - 1.0).abs() < 1e-12);
        assert_eq!(norm_f(&TailOperator::zero(), &example_norm()), 0.0);
        assert!((norm_c(&a, &[1.0, 1.0, 1.0]).unwrap() - 1.0).abs() < 1e-12);
        let ab = TailOperator::real_diag(&[1.5, 0.5], 0.0);
        assert!((norm_c(&ab, &[1.0, 1.0]).unwrap() - 2.0).abs() < 1e-12);
        assert!(norm_c(&ab, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn radius_examples() {
        let f = SymmetricNorm::ky_fan(2, 2).unwrap();
        let rc = radius_constants(&f);
        assert_eq!((rc.alpha, rc.beta), (1.0, 2.0));
        let cert = verify_radius_sandwich(&e12(2.0), &f, RADIUS_TOL);
        assert_eq!(cert.verdict, Verdict::Equality);
        assert_eq!(cert.witness["attained"], "beta");

        let f3 = SymmetricNorm::ky_fan(3, 3).unwrap();
        assert_eq!(radius_constants(&f3).beta, 3.0);
        let (lo, hi) = radius_witnesses(&f3);
        assert_eq!(hi.singular_values(3).values, vec![2.0, 1.0, 0.0]);
        assert_eq!(
            verify_radius_sandwich(&hi, &f3, RADIUS_TOL).witness["attained"],
            "beta"
        );
        assert_eq!(
            verify_radius_sandwich(&lo, &f3, RADIUS_TOL).witness["attained"],
            "alpha"
        );
    }

    #[test]
    fn beta_fails_beyond_dimension_n() {
        let kf4 = SymmetricNorm::ky_fan(4, 4).unwrap();
        let cert = beta_witness_cert(&kf4, RADIUS_TOL);
        assert_eq!(cert.verdict, Verdict::Violated);
        assert!((cert.lhs - 8.0).abs() < 1e-12 && (cert.rhs - 4.0).abs() < 1e-8);

        let mut block = CMatrix::zeros(2, 2);
        block[(0, 1)] = C64::new(2.0, 0.0);
        let a = TailOperator::new(block, C64::new(1.0, 0.0)).unwrap();
        assert_eq!(a.singular_values(4).values, vec![2.0, 1.0, 1.0, 1.0]);
        assert_eq!(
            verify_radius_sandwich(&a, &kf4, RADIUS_TOL).verdict,
            Verdict::Violated
        );

        let kf2 = SymmetricNorm::ky_fan(4, 2).unwrap();
        assert_eq!(
            beta_witness_cert(&kf2, RADIUS_TOL).verdict,
            Verdict::Equality
        );
    }

    #[test]
    fn sharp_beta_is_attained() {
        for f in [
            SymmetricNorm::ky_fan(3, 3).unwrap(),
            SymmetricNorm::lp(4, 2.0).unwrap(),
            SymmetricNorm::c_norm(vec![1.0, 0.5, 0.25]).unwrap(),
        ] {
            let w = sharp_beta_witness(&f);
            let r = w.numerical_radius();
            assert!((r - 1.0).abs() < 1e-9);
            assert!((norm_f(&w, &f) - sharp_beta(&f)).abs() < 1e-12);
        }
    }

    #[test]
    fn cross_and_algebra_detection() {
        let kf2 = SymmetricNorm::ky_fan(2, 2).unwrap();
        let half = SymmetricNorm::scaled_linf(3, 0.5).unwrap();
        assert!(is_cross_norm(&kf2));
        assert!(!is_cross_norm(&half));
        assert!(is_submultiplicative(&kf2));
        assert!(!is_algebra_norm(&kf2));
        assert!(!is_submultiplicative(&half));
        assert!(is_algebra_norm(&SymmetricNorm::spectral(4).unwrap()));
        assert!(is_algebra_norm(
            &SymmetricNorm::lp(4, f64::INFINITY).unwrap()
        ));
        assert!(!is_algebra_norm(
            &SymmetricNorm::c_norm(vec![1.0, 1e-6]).unwrap()
        ));
    }

    #[test]
    fn scaled_linf_counterexample() {
        let half = SymmetricNorm::scaled_linf(3, 0.5).unwrap();
        let cert = submult_counterexample(&half, DEFAULT_TOL).unwrap();
        assert_eq!(cert.verdict, Verdict::Violated);
        assert!((cert.lhs - 0.5).abs() < 1e-15 && (cert.rhs - 0.25).abs() < 1e-15);
        assert!(
            submult_counterexample(&SymmetricNorm::ky_fan(2, 1).unwrap(), DEFAULT_TOL).is_none()
        );
    }

    #[test]
    fn triple_product_rank_one() {
        let x = vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)];
        let y = vec![C64::new(1.0, 0.0), ZERO_C];
        let a = TailOperator::rank_one(&x, &y);
        let t = triple_product(&a, &a, &a);
        assert!(t.spectral_distance(&a) < 1e-15);

        let half = SymmetricNorm::scaled_linf(2, 0.5).unwrap();
        let cert = triple_submult_cert(&half, &a, &a, &a, DEFAULT_TOL);
        assert_eq!(cert.verdict, Verdict::Violated);
        assert!((cert.lhs - 0.5).abs() < 1e-12 && (cert.rhs - 0.125).abs() < 1e-12);

        let f = SymmetricNorm::ky_fan(2, 2).unwrap();
        let cert = triple_submult_cert(&f, &a, &a, &TailOperator::zero(), DEFAULT_TOL);
        assert_eq!(cert.lhs, 0.0);
        assert!(cert.passed());
    }

    const ZERO_C: C64 = C64::new(0.0, 0.0);

    #[test]
    fn product_equality_examples() {
        let f = SymmetricNorm::c_norm(vec![1.0, 0.5, 0.25]).unwrap();
        let x = vec![C64::new(1.0, 0.0), ZERO_C, C64::new(0.0, 2.0)];
        let y = vec![ZERO_C, C64::new(0.6, 0.8), ZERO_C];
        let z = vec![C64::new(0.5, 0.0), C64::new(0.5, 0.0), ZERO_C];
        let a = TailOperator::rank_one(&x, &y);
        let b = TailOperator::rank_one(&y, &z);
        let cert = product_equality_cert(&f, &a, &b, true, DEFAULT_TOL).unwrap();
        assert_eq!(cert.verdict, Verdict::Equality);
        assert!(cert.passed(), "{cert:?}");
        let ab = &a * &b;
        assert!(ab.spectral_distance(&TailOperator::rank_one(&x, &z)) < 1e-14);

        let sp = SymmetricNorm::spectral(3).unwrap();
        let id = TailOperator::identity();
        let cert = product_equality_cert(&sp, &id, &id, false, DEFAULT_TOL).unwrap();
        assert_eq!(cert.verdict, Verdict::Equality);
        assert!(cert.passed());

        let d2 = SymmetricNorm::c_norm(vec![2.0, 1.0]).unwrap();
        let cert = product_equality_cert(&d2, &a, &b, false, DEFAULT_TOL).unwrap();
        assert_eq!(cert.verdict, Verdict::Holds);
        assert!(cert.passed());

        assert!(matches!(
            product_equality_cert(&f, &a, &TailOperator::zero(), false, DEFAULT_TOL),
            Err(Error::ZeroOperand)
        ));
        let half = SymmetricNorm::scaled_linf(3, 0.5).unwrap();
        assert!(matches!(
            product_equality_cert(&half, &a, &b, false, DEFAULT_TOL),
            Err(Error::NotSubmultiplicative(_))
        ));
    }

    #[test]
    fn rank_one_flag_is_checked() {
        assert!(rank_one_extremal(&SymmetricNorm::ky_fan(2, 2).unwrap()));
        assert!(!rank_one_extremal(&SymmetricNorm::spectral(3).unwrap()));
        let sp = SymmetricNorm::spectral(3).unwrap();
        let id = TailOperator::identity();
        let cert = product_equality_cert(&sp, &id, &id, true, DEFAULT_TOL).unwrap();
        assert!(!cert.passed(), "a false rank-one claim must not certify");
    }

    #[test]
    fn corollary_suite_cases() {
        for c in [
            vec![1.0, 0.5],
            vec![2.0, 1.0],
            vec![0.5, 0.25],
            vec![1.0, 1.0, 1.0],
        ] {
            let certs = cnorm_corollary_suite(&c, 30, 11, DEFAULT_TOL).unwrap();
            for cert in &certs {
                assert!(cert.passed(), "c = {c:?}: {cert:?}");
            }
        }
        let names: Vec<String> = cnorm_corollary_suite(&[1.0, 0.5], 5, 1, DEFAULT_TOL)
            .unwrap()
            .into_iter()
            .map(|c| c.statement)
            .collect();
        assert_eq!(names.len(), 5, "{names:?}");
        assert!(cnorm_corollary_suite(&[1.0, 0.0], 5, 1, DEFAULT_TOL).is_err());
    }

    #[test]
    fn diag_consistency() {
        let f = example_norm();
        let a = [0.3, -0.9, 0.1];
        let op = TailOperator::real_diag(&a, 0.0);
        assert!((norm_f(&op, &f) - f.eval(&a).unwrap()).abs() < 1e-14);
    }

    fn families(n: usize) -> Vec<SymmetricNorm> {
        vec![
            SymmetricNorm::ky_fan(n, 1).unwrap(),
            SymmetricNorm::ky_fan(n, n).unwrap(),
            SymmetricNorm::lp(n, 2.0).unwrap(),
            SymmetricNorm::cp_norm((0..n).map(|j| 1.0 / (j + 1) as f64).collect(), 3.0).unwrap(),
            SymmetricNorm::scaled_linf(n, 0.5).unwrap(),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn unitary_invariance(seed in any::<u64>()) {
            let mut rng = sample::rng_for(seed, 0);
            let m = rng.random_range(1..=5);
            let a = sample::random_operator_of_size(&mut rng, m);
            let u = sample::random_unitary_operator(&mut rng, m);
            let v = sample::random_unitary_operator(&mut rng, m);
            let uav = &(&u * &a) * &v;
            for f in families(3) {
                prop_assert!((norm_f(&uav, &f) - norm_f(&a, &f)).abs() < 1e-9);
            }
        }

        #[test]
        fn maxc_is_max_of_cnorms(seed in any::<u64>()) {
            let mut rng = sample::rng_for(seed, 0);
            let a = sample::random_operator(&mut rng, 4);
            let set: Vec<Vec<f64>> = (0..3).map(|_| {
                let mut c = sample::random_descending(&mut rng, 3);
                c[0] += 0.1;
                c
            }).collect();
            let f = SymmetricNorm::max_c(set.clone()).unwrap();
            let direct = set.iter().map(|c| norm_c(&a, c).unwrap()).fold(0.0, f64::max);
            prop_assert_eq!(norm_f(&a, &f), direct);
        }

        #[test]
        fn uniform_and_bounds(seed in any::<u64>()) {
            let mut rng = sample::rng_for(seed, 0);
            let (a, b) = random_pair(&mut rng);
            for f in families(3) {
                prop_assert!(uniform_cert(&f, &a, &b, DEFAULT_TOL).passed());
                prop_assert!(spectral_bounds_cert(&a, &f, DEFAULT_TOL).passed());
            }
        }

        #[test]
        fn triple_submultiplicative_when_f_e1_at_least_one(seed in any::<u64>()) {
            let mut rng = sample::rng_for(seed, 0);
            let (a, b) = random_pair(&mut rng);
            let c = sample::random_operator(&mut rng, 4);
            for f in families(3).into_iter().filter(is_submultiplicative) {
                prop_assert!(triple_submult_cert(&f, &a, &b, &c, DEFAULT_TOL).passed());
            }
        }

        #[test]
        fn padding_invariance(seed in any::<u64>(), k in 0usize..4) {
            let mut rng = sample::rng_for(seed, 0);
            let a = sample::random_operator(&mut rng, 4);
            let p = a.padded(k);
            for f in families(3) {
                prop_assert!((norm_f(&p, &f) - norm_f(&a, &f)).abs() < 1e-10);
            }
        }
    }
}
