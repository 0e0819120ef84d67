//! Distance-preserving maps `A ↦ U*φ(A)V + R₀` with `φ` one of the identity,
//! transpose, adjoint or entrywise conjugate, and recovery of `(U, V, φ, R₀)`
//! from a black-box map by probing.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64, ONE};
use crate::opmodel::TailOperator;
use crate::sample;
use crate::uinorm::norm_f;
use crate::vecnorm::SymmetricNorm;

const UNITARY_TOL: f64 = 1e-9;
const PROBE_TOL: f64 = 1e-6;
const VALIDATION_INPUTS: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phi {
    #[serde(rename = "id")]
    Id,
    #[serde(rename = "t")]
    Transpose,
    #[serde(rename = "adj")]
    Adjoint,
    /// `A ↦ (A*)ᵗ`, the entrywise conjugate.
    #[serde(rename = "adjt")]
    AdjointTranspose,
}

impl Phi {
    pub const ALL: [Phi; 4] = [Phi::Id, Phi::Transpose, Phi::Adjoint, Phi::AdjointTranspose];

    pub fn apply(self, a: &TailOperator) -> TailOperator {
        match self {
            Phi::Id => a.clone(),
            Phi::Transpose => a.transpose(),
            Phi::Adjoint => a.adjoint(),
            Phi::AdjointTranspose => a.conj(),
        }
    }

    fn is_multiplicative(self) -> bool {
        matches!(self, Phi::Id | Phi::AdjointTranspose)
    }

    fn from_symbols(linear: bool, multiplicative: bool) -> Self {
        match (linear, multiplicative) {
            (true, true) => Phi::Id,
            (true, false) => Phi::Transpose,
            (false, false) => Phi::Adjoint,
            (false, true) => Phi::AdjointTranspose,
        }
    }
}

/// `A ↦ U*φ(A)V + R₀` with `U`, `V` unitary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IsometryFormJson", into = "IsometryFormJson")]
pub struct IsometryForm {
    u: TailOperator,
    v: TailOperator,
    phi: Phi,
    r0: TailOperator,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsometryFormJson {
    #[serde(rename = "U")]
    pub u: TailOperator,
    #[serde(rename = "V")]
    pub v: TailOperator,
    pub phi: Phi,
    #[serde(rename = "R0")]
    pub r0: TailOperator,
}

impl TryFrom<IsometryFormJson> for IsometryForm {
    type Error = Error;
    fn try_from(j: IsometryFormJson) -> Result<Self> {
        IsometryForm::new(j.u, j.v, j.phi, j.r0)
    }
}

impl From<IsometryForm> for IsometryFormJson {
    fn from(l: IsometryForm) -> Self {
        IsometryFormJson {
            u: l.u,
            v: l.v,
            phi: l.phi,
            r0: l.r0,
        }
    }
}

impl IsometryForm {
    pub fn new(u: TailOperator, v: TailOperator, phi: Phi, r0: TailOperator) -> Result<Self> {
        for (name, w) in [("U", &u), ("V", &v)] {
            if !is_unitary(w) {
                return Err(Error::Precondition(format!("{name} is not unitary")));
            }
        }
        Ok(Self { u, v, phi, r0 })
    }

    pub fn identity() -> Self {
        Self {
            u: TailOperator::identity(),
            v: TailOperator::identity(),
            phi: Phi::Id,
            r0: TailOperator::zero(),
        }
    }

    /// Haar-random `U`, `V` of block size `m` with unimodular tails, and a
    /// random `R₀`.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, m: usize, phi: Phi) -> Self {
        let u = sample::random_unitary_operator(rng, m);
        let v = sample::random_unitary_operator(rng, m);
        let r0 = sample::random_operator_of_size(rng, m);
        Self { u, v, phi, r0 }
    }

    pub fn u(&self) -> &TailOperator {
        &self.u
    }

    pub fn v(&self) -> &TailOperator {
        &self.v
    }

    pub fn phi(&self) -> Phi {
        self.phi
    }

    pub fn r0(&self) -> &TailOperator {
        &self.r0
    }

    pub fn apply(&self, a: &TailOperator) -> TailOperator {
        let image = &(&self.u.adjoint() * &self.phi.apply(a)) * &self.v;
        &image + &self.r0
    }
}

fn is_unitary(w: &TailOperator) -> bool {
    if (w.tail().norm() - 1.0).abs() > UNITARY_TOL {
        return false;
    }
    let id = CMatrix::identity(w.m());
    let b = w.block();
    (&(&b.adjoint() * b) - &id).max_abs() <= UNITARY_TOL
        && (&(b * &b.adjoint()) - &id).max_abs() <= UNITARY_TOL
}

/// Checks `‖A − B‖_f = ‖L(A) − L(B)‖_f` on each pair.
pub fn verify_distance_preserving(
    l: &IsometryForm,
    f: &SymmetricNorm,
    pairs: &[(TailOperator, TailOperator)],
    tol: f64,
) -> Result<Certificate> {
    let items: Vec<Certificate> = pairs
        .iter()
        .map(|(a, b)| {
            let before = norm_f(&(a - b), f);
            let after = norm_f(&(&l.apply(a) - &l.apply(b)), f);
            Certificate::equal("distance", after, before, tol)
        })
        .collect();
    Certificate::worst_of("distance-preserving", &items)
        .map(|c| c.with_inputs(json!({ "phi": l.phi, "pairs": pairs.len() })))
        .ok_or_else(|| Error::InvalidParameter("no pairs".into()))
}

/// Random pairs with block sizes up to `max_m` for [`verify_distance_preserving`].
pub fn random_pairs(count: usize, max_m: usize, seed: u64) -> Vec<(TailOperator, TailOperator)> {
    let mut rng = sample::rng_for(seed, 0);
    (0..count)
        .map(|_| {
            (
                sample::random_operator(&mut rng, max_m),
                sample::random_operator(&mut rng, max_m),
            )
        })
        .collect()
}

/// Reconstructs `(U, V, φ, R₀)` from a map promised to be of canonical form
/// on block size `m`.
///
/// With `L̂ = L − L(0)` and `W = L̂(I) = U*V`, the map `Ψ(X) = L̂(X)W*` equals
/// `U*φ(X)U`. Complex-linearity of `L̂` and (anti-)multiplicativity of `Ψ`
/// identify `φ`; the images of the matrix units `Eᵢ₁` then give the columns
/// of `U*` up to one common phase. The tail of `U` is fixed to `1`. The
/// result is checked against the oracle on fresh random inputs and rejected
/// with [`Error::NotCanonical`] if any image differs by more than `1e-6`.
pub fn recover<L>(oracle: L, m: usize, f: &SymmetricNorm, seed: u64) -> Result<IsometryForm>
where
    L: Fn(&TailOperator) -> TailOperator,
{
    if m == 0 {
        return Err(Error::InvalidParameter(
            "block size must be positive".into(),
        ));
    }
    let not_canonical = |residual: f64| Error::NotCanonical { residual };
    let r0 = oracle(&TailOperator::zero().padded(m));
    let hat = |x: &TailOperator| -> TailOperator { &oracle(x) - &r0 };

    let w = hat(&TailOperator::identity().padded(m)).padded_to(m);
    if w.m() != m || !is_unitary(&w) {
        let defect = (&(&w.adjoint() * &w) - &TailOperator::identity()).spectral_norm();
        return Err(not_canonical(defect.max(UNITARY_TOL * 10.0)));
    }
    let w_adj = w.adjoint();
    let psi = |x: &TailOperator| -> TailOperator { &hat(x) * &w_adj };

    let mut rng = sample::rng_for(seed, 0);
    let x = sample::random_operator_of_size(&mut rng, m);
    let y = sample::random_operator_of_size(&mut rng, m);
    let i = C64::new(0.0, 1.0);
    let lx = hat(&x);
    let lix = hat(&x.scale(i));
    let linear_defect = lix.spectral_distance(&lx.scale(i));
    let antilinear_defect = lix.spectral_distance(&lx.scale(-i));
    let (px, py, pxy) = (psi(&x), psi(&y), psi(&(&x * &y)));
    let mult_defect = pxy.spectral_distance(&(&px * &py));
    let anti_defect = pxy.spectral_distance(&(&py * &px));
    let scale = lx.spectral_norm().max(1.0);
    if linear_defect.min(antilinear_defect) > PROBE_TOL * scale
        || mult_defect.min(anti_defect) > PROBE_TOL * scale
    {
        return Err(not_canonical(
            linear_defect
                .min(antilinear_defect)
                .max(mult_defect.min(anti_defect)),
        ));
    }
    let phi = Phi::from_symbols(
        linear_defect <= antilinear_defect,
        mult_defect <= anti_defect,
    );

    // Q(i, j) = Ψ(φ-adjusted unit) = pᵢpⱼ*, where pᵢ = U*eᵢ.
    let unit = |r: usize, c: usize| -> TailOperator {
        let (r, c) = if phi.is_multiplicative() {
            (r, c)
        } else {
            (c, r)
        };
        let mut e = CMatrix::zeros(m, m);
        e[(r, c)] = ONE;
        TailOperator::finite(e).expect("finite square block")
    };
    let q11 = psi(&unit(0, 0)).padded_to(m);
    let q11b = q11.block();
    let k = (0..m)
        .max_by(|&a, &b| q11b[(a, a)].re.total_cmp(&q11b[(b, b)].re))
        .expect("m > 0");
    let pivot = q11b[(k, k)].re;
    if pivot <= PROBE_TOL {
        return Err(not_canonical(1.0 - pivot.max(0.0)));
    }
    let p1: Vec<C64> = (0..m).map(|r| q11b[(r, k)] / pivot.sqrt()).collect();
    let mut columns = vec![p1.clone()];
    for r in 1..m {
        let q = psi(&unit(r, 0)).padded_to(m);
        columns.push(q.block().mul_vec(&p1));
    }
    let u_star = CMatrix::from_columns(m, &columns);
    let u = TailOperator::new(u_star.adjoint(), ONE)?;
    let v = &u * &w;
    let candidate = IsometryForm::new(u, v, phi, r0.clone()).map_err(|_| not_canonical(1.0))?;

    let mut residual = 0.0_f64;
    let mut distance_defect = 0.0_f64;
    for _ in 0..VALIDATION_INPUTS {
        let a = sample::random_operator_of_size(&mut rng, m);
        let b = sample::random_operator_of_size(&mut rng, m);
        let la = oracle(&a);
        residual = residual.max(candidate.apply(&a).spectral_distance(&la));
        let before = norm_f(&(&a - &b), f);
        let after = norm_f(&(&la - &oracle(&b)), f);
        distance_defect = distance_defect.max((after - before).abs());
    }
    if residual > PROBE_TOL || distance_defect > PROBE_TOL {
        return Err(not_canonical(residual.max(distance_defect)));
    }
    Ok(candidate)
}

/// Representative of `(U, V)` modulo the joint phases `(e^{iθ}U, e^{iθ}V)`
/// on the block and, separately, on the tail: the largest-modulus entry of
/// the first column of `U` (lowest index on ties) is made real positive, and
/// the tail of `U` is made `1`.
pub fn phase_quotient(l: &IsometryForm) -> IsometryForm {
    let m = l.u.m().max(l.v.m());
    let (u, v) = (l.u.padded_to(m), l.v.padded_to(m));
    let block_phase = if m == 0 {
        ONE
    } else {
        let col = u.block().column(0);
        let (mut best, mut idx) = (0.0, 0);
        for (i, z) in col.iter().enumerate() {
            if z.norm() > best + 1e-12 {
                best = z.norm();
                idx = i;
            }
        }
        if best > 0.0 {
            col[idx].conj() / best
        } else {
            ONE
        }
    };
    let tail_phase = l.u.tail().conj() / l.u.tail().norm();
    let fix = |w: &TailOperator| {
        TailOperator::new(w.block().scale(block_phase), w.tail() * tail_phase)
            .expect("finite square block")
    };
    IsometryForm {
        u: fix(&u),
        v: fix(&v),
        phi: l.phi,
        r0: l.r0.clone(),
    }
}

/// Frobenius distance between phase-quotiented parameters (`∞` if `φ` differs).
pub fn form_distance(a: &IsometryForm, b: &IsometryForm) -> f64 {
    if a.phi != b.phi {
        return f64::INFINITY;
    }
    let (a, b) = (phase_quotient(a), phase_quotient(b));
    let d = |x: &TailOperator, y: &TailOperator| {
        let diff = x - y;
        (diff.block().frobenius_norm().powi(2) + (x.tail() - y.tail()).norm_sqr()).sqrt()
    };
    let r0 = {
        let m = a.r0.m().max(b.r0.m());
        let diff = &a.r0.padded_to(m) - &b.r0.padded_to(m);
        (diff.block().frobenius_norm().powi(2) + diff.tail().norm_sqr()).sqrt()
    };
    (d(&a.u, &b.u).powi(2) + d(&a.v, &b.v).powi(2) + r0.powi(2)).sqrt()
}
