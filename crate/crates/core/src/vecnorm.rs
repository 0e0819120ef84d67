//! Symmetric gauge functions on ℝⁿ and weak majorization.
//!
//! Every evaluation first canonicalizes its argument to the absolute values
//! sorted in descending order, so invariance under signed permutations holds
//! by construction rather than up to rounding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::NormSpec;

/// A finite generating set of descending nonnegative weight vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct CSet {
    vectors: Vec<Vec<f64>>,
}

impl CSet {
    /// Validates and stores the vectors, dropping exact duplicates.
    pub fn new(vectors: Vec<Vec<f64>>) -> Result<Self> {
        let n = match vectors.first() {
            Some(v) => v.len(),
            None => return Err(Error::InvalidParameter("empty c-set".into())),
        };
        let mut kept: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != n {
                return Err(Error::Arity {
                    expected: n,
                    got: v.len(),
                });
            }
            check_weight_vector(&v)?;
            if !kept.contains(&v) {
                kept.push(v);
            }
        }
        Ok(Self { vectors: kept })
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn arity(&self) -> usize {
        self.vectors[0].len()
    }
}

fn check_weight_vector(c: &[f64]) -> Result<()> {
    if c.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    check_nonnegative(c)?;
    check_descending(c)?;
    if c.iter().all(|&x| x == 0.0) {
        return Err(Error::InvalidParameter("weight vector is zero".into()));
    }
    Ok(())
}

fn check_nonnegative(x: &[f64]) -> Result<()> {
    match x.iter().position(|&v| v < 0.0) {
        Some(index) => Err(Error::NegativeEntry {
            index,
            value: x[index],
        }),
        None => Ok(()),
    }
}

fn check_descending(x: &[f64]) -> Result<()> {
    match x.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(Error::Unsorted { index: i + 1 }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NormFamily {
    /// ℓp norm; `p = f64::INFINITY` is the max norm.
    Lp { p: f64 },
    /// Sum of the `k` largest entries.
    KyFan { k: usize },
    /// `Σ cⱼ x₍ⱼ₎` for descending nonnegative `c`.
    CNorm { c: Vec<f64> },
    /// `(Σ (cⱼ x₍ⱼ₎)^p)^{1/p}`.
    CpNorm { c: Vec<f64>, p: f64 },
    /// Maximum of c-norms over a finite set.
    MaxC { set: CSet },
    /// `γ · max |xⱼ|`.
    ScaledLInf { gamma: f64 },
}

/// A symmetric norm `f` on ℝⁿ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NormSpec", into = "NormSpec")]
pub struct SymmetricNorm {
    n: usize,
    family: NormFamily,
}

impl SymmetricNorm {
    pub fn new(n: usize, family: NormFamily) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("arity must be positive".into()));
        }
        match &family {
            NormFamily::Lp { p } => check_p(*p)?,
            NormFamily::KyFan { k } => {
                if *k == 0 || *k > n {
                    return Err(Error::InvalidParameter(format!(
                        "Ky Fan index {k} outside 1..={n}"
                    )));
                }
            }
            NormFamily::CNorm { c } => {
                check_arity(n, c.len())?;
                check_weight_vector(c)?;
            }
            NormFamily::CpNorm { c, p } => {
                check_arity(n, c.len())?;
                check_weight_vector(c)?;
                check_p(*p)?;
            }
            NormFamily::MaxC { set } => check_arity(n, set.arity())?,
            NormFamily::ScaledLInf { gamma } => {
                if !(gamma.is_finite() && *gamma > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "gamma must be positive, got {gamma}"
                    )));
                }
            }
        }
        Ok(Self { n, family })
    }

    pub fn lp(n: usize, p: f64) -> Result<Self> {
        Self::new(n, NormFamily::Lp { p })
    }

    pub fn ky_fan(n: usize, k: usize) -> Result<Self> {
        Self::new(n, NormFamily::KyFan { k })
    }

    pub fn c_norm(c: Vec<f64>) -> Result<Self> {
        Self::new(c.len(), NormFamily::CNorm { c })
    }

    pub fn cp_norm(c: Vec<f64>, p: f64) -> Result<Self> {
        Self::new(c.len(), NormFamily::CpNorm { c, p })
    }

    pub fn max_c(set: Vec<Vec<f64>>) -> Result<Self> {
        let set = CSet::new(set)?;
        Self::new(set.arity(), NormFamily::MaxC { set })
    }

    pub fn scaled_linf(n: usize, gamma: f64) -> Result<Self> {
        Self::new(n, NormFamily::ScaledLInf { gamma })
    }

    /// The operator (spectral) norm gauge `x ↦ max |xⱼ|` as the c-norm `e₁`.
    pub fn spectral(n: usize) -> Result<Self> {
        let mut c = vec![0.0; n];
        if let Some(first) = c.first_mut() {
            *first = 1.0;
        }
        Self::c_norm(c)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &NormFamily {
        &self.family
    }

    /// `f(x)`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        check_arity(self.n, x.len())?;
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(self.eval_canonical(&canonicalize(x)))
    }

    /// Evaluates on an already canonical (nonnegative, descending) vector of
    /// length `n`.
    pub(crate) fn eval_canonical(&self, s: &[f64]) -> f64 {
        debug_assert_eq!(s.len(), self.n);
        match &self.family {
            NormFamily::Lp { p } => lp(s, *p),
            NormFamily::KyFan { k } => s[..*k].iter().sum(),
            NormFamily::CNorm { c } => dot(c, s),
            NormFamily::CpNorm { c, p } => {
                let w: Vec<f64> = c.iter().zip(s).map(|(a, b)| a * b).collect();
                lp(&w, *p)
            }
            NormFamily::MaxC { set } => set.vectors.iter().map(|c| dot(c, s)).fold(0.0, f64::max),
            NormFamily::ScaledLInf { gamma } => gamma * s[0],
        }
    }

    /// `f(e₁)`.
    pub fn at_e1(&self) -> f64 {
        let mut e = vec![0.0; self.n];
        e[0] = 1.0;
        self.eval_canonical(&e)
    }

    /// `f(1, …, 1)`.
    pub fn at_ones(&self) -> f64 {
        self.eval_canonical(&vec![1.0; self.n])
    }
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::Arity { expected, got });
    }
    Ok(())
}

fn check_p(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidParameter(format!("p must be >= 1, got {p}")));
    }
    Ok(())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn lp(s: &[f64], p: f64) -> f64 {
    let max = s.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if p.is_infinite() || max == 0.0 {
        return max;
    }
    if p == 1.0 {
        return s.iter().map(|v| v.abs()).sum();
    }
    let sum: f64 = s.iter().map(|v| (v.abs() / max).powf(p)).sum();
    max * sum.powf(1.0 / p)
}

/// Absolute values sorted in descending order (stable).
pub fn canonicalize(x: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// `x ≺_w y`: every partial sum of the descending rearrangement of `x` is at
/// most the matching partial sum of `y`.
pub fn weak_majorizes(x: &[f64], y: &[f64]) -> Result<bool> {
    check_arity(x.len(), y.len())?;
    check_nonnegative(x)?;
    check_nonnegative(y)?;
    let xs = canonicalize(x);
    let ys = canonicalize(y);
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx > sy {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ cⱼ sⱼ` for descending nonnegative `c` and `s`.
pub fn cnorm_of_spectrum(c: &[f64], s: &[f64]) -> Result<f64> {
    check_arity(c.len(), s.len())?;
    check_nonnegative(c)?;
    check_nonnegative(s)?;
    check_descending(c)?;
    check_descending(s)?;
    Ok(dot(c, s))
}

/// Outcome of checking `x ≺_w y ⟹ f(x) ≤ f(y)` on one pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanDominance {
    pub majorized: bool,
    pub fx: f64,
    pub fy: f64,
    pub holds: bool,
}

pub fn fan_dominance_check(f: &SymmetricNorm, x: &[f64], y: &[f64]) -> Result<FanDominance> {
    let majorized = weak_majorizes(x, y)?;
    let fx = f.eval(x)?;
    let fy = f.eval(y)?;
    Ok(FanDominance {
        majorized,
        fx,
        fy,
        holds: !majorized || fx <= fy + 1e-10,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn families(n: usize) -> Vec<SymmetricNorm> {
        let mut c: Vec<f64> = (0..n).map(|i| 1.0 / (i + 1) as f64).collect();
        c[0] = 1.5;
        let mut out = vec![
            SymmetricNorm::lp(n, 1.0).unwrap(),
            SymmetricNorm::lp(n, 2.0).unwrap(),
            SymmetricNorm::lp(n, 3.5).unwrap(),
            SymmetricNorm::lp(n, f64::INFINITY).unwrap(),
            SymmetricNorm::ky_fan(n, 1).unwrap(),
            SymmetricNorm::ky_fan(n, n).unwrap(),
            SymmetricNorm::c_norm(c.clone()).unwrap(),
            SymmetricNorm::cp_norm(c.clone(), 2.0).unwrap(),
            SymmetricNorm::scaled_linf(n, 0.5).unwrap(),
        ];
        let mut first = vec![0.0; n];
        first[0] = 2.5;
        out.push(SymmetricNorm::max_c(vec![first, vec![1.0; n], c]).unwrap());
        out
    }

    #[test]
    fn ky_fan_two_on_three_one() {
        let f = SymmetricNorm::ky_fan(2, 2).unwrap();
        assert_eq!(f.eval(&[3.0, 1.0]).unwrap(), 4.0);
    }

    #[test]
    fn max_c_example_norm_value() {
        let f = SymmetricNorm::max_c(vec![vec![2.5, 0.0, 0.0], vec![1.0, 1.0, 1.0]]).unwrap();
        let v = f.eval(&[0.4, 0.4, 0.2]).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_vector_has_zero_norm() {
        for f in families(4) {
            assert_eq!(f.eval(&[0.0; 4]).unwrap(), 0.0);
        }
    }

    #[test]
    fn eval_rejects_wrong_arity() {
        let f = SymmetricNorm::ky_fan(3, 2).unwrap();
        assert!(matches!(
            f.eval(&[1.0, 2.0]),
            Err(Error::Arity {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn constructors_validate() {
        assert!(SymmetricNorm::ky_fan(2, 3).is_err());
        assert!(SymmetricNorm::lp(2, 0.5).is_err());
        assert!(SymmetricNorm::c_norm(vec![0.5, 1.0]).is_err());
        assert!(SymmetricNorm::c_norm(vec![0.0, 0.0]).is_err());
        assert!(SymmetricNorm::c_norm(vec![1.0, -0.5]).is_err());
        assert!(SymmetricNorm::scaled_linf(2, 0.0).is_err());
        assert!(SymmetricNorm::max_c(vec![]).is_err());
        assert!(SymmetricNorm::max_c(vec![vec![1.0, 0.0], vec![1.0]]).is_err());
    }

    #[test]
    fn cset_prunes_exact_duplicates_only() {
        let s = CSet::new(vec![vec![1.0, 1.0], vec![2.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(s.vectors().len(), 2);
        // (1, 0.5) is dominated by (1, 1) but is kept
        let s = CSet::new(vec![vec![1.0, 1.0], vec![1.0, 0.5]]).unwrap();
        assert_eq!(s.vectors().len(), 2);
    }

    #[test]
    fn weak_majorization_examples() {
        assert!(weak_majorizes(&[3.0, 1.0], &[3.0, 2.0]).unwrap());
        assert!(!weak_majorizes(&[4.0, 0.0], &[3.0, 2.0]).unwrap());
        assert!(weak_majorizes(&[1.0, 1.0], &[1.0, 1.0]).unwrap());
        // order of entries is irrelevant
        assert!(weak_majorizes(&[1.0, 3.0], &[2.0, 3.0]).unwrap());
        assert!(matches!(
            weak_majorizes(&[-1.0, 0.0], &[1.0, 1.0]),
            Err(Error::NegativeEntry { index: 0, .. })
        ));
    }

    #[test]
    fn cnorm_of_spectrum_examples() {
        assert_eq!(
            cnorm_of_spectrum(&[1.0, 1.0, 0.0], &[2.0, 1.0, 0.5]).unwrap(),
            3.0
        );
        assert_eq!(
            cnorm_of_spectrum(&[1.0, 0.0, 0.0], &[7.0, 2.0, 1.0]).unwrap(),
            7.0
        );
        // 1·1 + ½·1 by hand
        assert_eq!(cnorm_of_spectrum(&[1.0, 0.5], &[1.0, 1.0]).unwrap(), 1.5);
        assert!(matches!(
            cnorm_of_spectrum(&[1.0, 0.0], &[1.0, 2.0]),
            Err(Error::Unsorted { index: 1 })
        ));
        assert!(matches!(
            cnorm_of_spectrum(&[1.0], &[1.0, 2.0]),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn fan_dominance_examples() {
        let kf = SymmetricNorm::ky_fan(2, 2).unwrap();
        let r = fan_dominance_check(&kf, &[1.0, 1.0], &[2.0, 0.5]).unwrap();
        assert!(r.majorized && r.holds);
        assert_eq!((r.fx, r.fy), (2.0, 2.5));

        let r = fan_dominance_check(&kf, &[0.3, 0.2], &[0.3, 0.2]).unwrap();
        assert!(r.majorized && r.holds);

        let l1 = SymmetricNorm::lp(2, 1.0).unwrap();
        let r = fan_dominance_check(&l1, &[1.0, 0.0], &[0.6, 0.6]).unwrap();
        assert!(!r.majorized && r.holds);
    }

    #[test]
    fn cp_norm_reduces_to_c_norm_at_p_one() {
        let c = vec![2.0, 1.0, 0.5];
        let cp = SymmetricNorm::cp_norm(c.clone(), 1.0).unwrap();
        let cn = SymmetricNorm::c_norm(c).unwrap();
        let x = [0.3, -2.0, 1.1];
        assert!((cp.eval(&x).unwrap() - cn.eval(&x).unwrap()).abs() < 1e-15);
    }

    fn vec3() -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec(-10.0..10.0f64, 3)
    }

    proptest! {
        #[test]
        fn signed_permutations_leave_eval_unchanged(x in vec3(), perm in Just(vec![2usize, 0, 1]), signs in proptest::collection::vec(any::<bool>(), 3)) {
            let y: Vec<f64> = perm.iter().zip(&signs).map(|(&i, &s)| if s { -x[i] } else { x[i] }).collect();
            for f in families(3) {
                prop_assert_eq!(f.eval(&x).unwrap(), f.eval(&y).unwrap());
            }
        }

        #[test]
        fn norm_axioms_on_samples(x in vec3(), y in vec3(), a in -5.0..5.0f64) {
            for f in families(3) {
                let fx = f.eval(&x).unwrap();
                let fy = f.eval(&y).unwrap();
                let ax: Vec<f64> = x.iter().map(|v| a * v).collect();
                let fax = f.eval(&ax).unwrap();
                prop_assert!((fax - a.abs() * fx).abs() <= 1e-12 * fax.abs().max(1.0));
                let sum: Vec<f64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
                prop_assert!(f.eval(&sum).unwrap() <= fx + fy + 1e-10);
            }
        }

        #[test]
        fn max_c_is_max_of_c_norms(x in vec3()) {
            let set = vec![vec![2.5, 0.0, 0.0], vec![1.0, 1.0, 1.0], vec![1.2, 0.7, 0.1]];
            let f = SymmetricNorm::max_c(set.clone()).unwrap();
            let s = canonicalize(&x);
            let expect = set.iter().map(|c| cnorm_of_spectrum(c, &s).unwrap()).fold(0.0, f64::max);
            prop_assert_eq!(f.eval(&x).unwrap(), expect);
        }

        #[test]
        fn fan_dominance_never_fails(x in proptest::collection::vec(0.0..5.0f64, 3), y in proptest::collection::vec(0.0..5.0f64, 3)) {
            for f in families(3) {
                prop_assert!(fan_dominance_check(&f, &x, &y).unwrap().holds);
            }
        }

        #[test]
        fn scaling_e1(a in -10.0..10.0f64) {
            for f in families(3) {
                let v = f.eval(&[0.0, a, 0.0]).unwrap();
                prop_assert!((v - a.abs() * f.at_e1()).abs() <= 1e-12 * v.max(1.0));
            }
        }
    }
}
