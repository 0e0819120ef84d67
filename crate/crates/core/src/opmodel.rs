//! The operator model `F ⊕ τ·I`: a finite square block `F` followed by a
//! scalar multiple of the identity on an infinite-dimensional complement.
//!
//! Padding by `k` rewrites `(m, F, τ)` as `(m + k, F ⊕ τI_k, τ)`; it denotes
//! the same operator, and every quantity computed here is invariant under it.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::OperatorJson;
use crate::linalg::{CMatrix, C64, ZERO};
use crate::sample;
use crate::vecnorm::SymmetricNorm;

const RADIUS_GRID: usize = 720;
const RADIUS_REFINE_TOL: f64 = 1e-9;
const RADIUS_REFINE_CANDIDATES: usize = 6;
const ISOMETRY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "OperatorJson", into = "OperatorJson")]
pub struct TailOperator {
    block: CMatrix,
    tail: C64,
}

/// The `n` largest singular values of a tail operator, with the tail modulus
/// `|τ|` that every further singular value equals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularSpectrum {
    pub values: Vec<f64>,
    pub tail_value: f64,
}

impl SingularSpectrum {
    /// `s_k` with 1-based `k`; indices past the stored prefix return the tail value.
    pub fn s(&self, k: usize) -> f64 {
        assert!(k >= 1, "singular values are indexed from 1");
        self.values.get(k - 1).copied().unwrap_or(self.tail_value)
    }

    pub fn s1(&self) -> f64 {
        self.s(1)
    }
}

/// How `compression_lower_bound` chooses its first frame pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSeeding {
    /// First trial uses the singular frames, remaining trials are random.
    SingularFrames,
    /// Every trial uses random frames.
    RandomOnly,
}

impl TailOperator {
    pub fn new(block: CMatrix, tail: C64) -> Result<Self> {
        if !block.is_square() {
            return Err(Error::NotSquare {
                rows: block.rows(),
                cols: block.cols(),
            });
        }
        if !block.is_finite() || !tail.re.is_finite() || !tail.im.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self { block, tail })
    }

    pub fn scalar(tail: C64) -> Self {
        Self {
            block: CMatrix::zeros(0, 0),
            tail,
        }
    }

    pub fn zero() -> Self {
        Self::scalar(ZERO)
    }

    pub fn identity() -> Self {
        Self::scalar(C64::new(1.0, 0.0))
    }

    /// `diag(d) ⊕ tail·I` with real entries.
    pub fn real_diag(d: &[f64], tail: f64) -> Self {
        Self {
            block: CMatrix::from_real_diag(d),
            tail: C64::new(tail, 0.0),
        }
    }

    /// Finite block only, zero tail.
    pub fn finite(block: CMatrix) -> Result<Self> {
        Self::new(block, ZERO)
    }

    /// Rank-one `x y*` (zero tail).
    pub fn rank_one(x: &[C64], y: &[C64]) -> Self {
        let m = x.len().max(y.len());
        let mut xp = x.to_vec();
        let mut yp = y.to_vec();
        xp.resize(m, ZERO);
        yp.resize(m, ZERO);
        Self {
            block: CMatrix::outer(&xp, &yp),
            tail: ZERO,
        }
    }

    pub fn m(&self) -> usize {
        self.block.rows()
    }

    pub fn block(&self) -> &CMatrix {
        &self.block
    }

    pub fn tail(&self) -> C64 {
        self.tail
    }

    /// The same operator written with a finite block larger by `k`.
    pub fn padded(&self, k: usize) -> Self {
        Self {
            block: self.block.pad_diagonal(k, self.tail),
            tail: self.tail,
        }
    }

    /// Pads up to block size `m` (no-op when already at least that large).
    pub fn padded_to(&self, m: usize) -> Self {
        self.padded(m.saturating_sub(self.m()))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let m = self.m().max(other.m());
        (self.padded_to(m), other.padded_to(m))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            block: self.block.scale(s),
            tail: self.tail * s,
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        Self {
            block: self.block.adjoint(),
            tail: self.tail.conj(),
        }
    }

    /// Transpose with respect to the standard basis.
    pub fn transpose(&self) -> Self {
        Self {
            block: self.block.transpose(),
            tail: self.tail,
        }
    }

    /// Entrywise conjugate, i.e. the transpose of the adjoint.
    pub fn conj(&self) -> Self {
        Self {
            block: self.block.conj(),
            tail: self.tail.conj(),
        }
    }

    /// Singular values of the finite block, descending.
    pub fn finite_singular_values(&self) -> Vec<f64> {
        self.block
            .singular_values()
            .expect("blocks are square and finite by construction")
    }

    /// The `n` largest singular values: the finite ones merged with `|τ|`
    /// taken at infinite multiplicity.
    pub fn singular_values(&self, n: usize) -> SingularSpectrum {
        merge_spectrum(&self.finite_singular_values(), self.tail.norm(), n)
    }

    /// `s₁(A)`, the operator norm.
    pub fn spectral_norm(&self) -> f64 {
        self.singular_values(1).s1()
    }

    /// Operator norm of `self - other`.
    pub fn spectral_distance(&self, other: &Self) -> f64 {
        (self - other).spectral_norm()
    }

    /// `r(A) = max(r(F), |τ|)`.
    pub fn numerical_radius(&self) -> f64 {
        block_numerical_radius(&self.block).max(self.tail.norm())
    }

    /// `A*A = I` or `AA* = I`, which for this model means a unitary block
    /// and a unimodular tail.
    pub fn is_maximal_partial_isometry(&self) -> bool {
        if (self.tail.norm() - 1.0).abs() > ISOMETRY_TOL {
            return false;
        }
        let id = CMatrix::identity(self.m());
        let left = &self.block.adjoint() * &self.block;
        let right = &self.block * &self.block.adjoint();
        (&left - &id).max_abs() <= ISOMETRY_TOL || (&right - &id).max_abs() <= ISOMETRY_TOL
    }

    pub fn is_zero(&self) -> bool {
        self.tail == ZERO && self.block.as_slice().iter().all(|z| *z == ZERO)
    }
}

/// Top `n` of the multiset `finite ∪ {tail × ∞}`; `finite` must be descending.
pub(crate) fn merge_spectrum(finite: &[f64], tail: f64, n: usize) -> SingularSpectrum {
    let mut values = Vec::with_capacity(n);
    let mut it = finite.iter().copied().peekable();
    while values.len() < n {
        match it.peek() {
            Some(&s) if s > tail => {
                values.push(s);
                it.next();
            }
            _ => values.push(tail),
        }
    }
    SingularSpectrum {
        values,
        tail_value: tail,
    }
}

/// Largest `|λ|` of `cos θ·H + sin θ·K`.
fn support(h: &CMatrix, k: &CMatrix, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let m = CMatrix::from_fn(h.rows(), h.cols(), |i, j| h[(i, j)] * c + k[(i, j)] * s);
    let ev = m.hermitian_eigenvalues();
    match (ev.first(), ev.last()) {
        (Some(lo), Some(hi)) => hi.abs().max(lo.abs()),
        _ => 0.0,
    }
}

/// Numerical radius of a square matrix: a 720-point sweep over θ ∈ [0, π)
/// of the spectral radius of `Re(e^{iθ}F)`, then golden-section refinement
/// around the best local maxima.
pub fn block_numerical_radius(f: &CMatrix) -> f64 {
    let m = f.rows();
    if m == 0 {
        return 0.0;
    }
    if m == 1 {
        return f[(0, 0)].norm();
    }
    let h = f.hermitian_part();
    // K = i(F - F*)/2 so that Re(e^{iθ}F) = cos θ·H + sin θ·K
    let fa = f.adjoint();
    let k = CMatrix::from_fn(m, m, |i, j| (f[(i, j)] - fa[(i, j)]) * C64::new(0.0, 0.5));

    let step = PI / RADIUS_GRID as f64;
    let grid: Vec<f64> = (0..RADIUS_GRID)
        .map(|i| support(&h, &k, i as f64 * step))
        .collect();
    let mut best = grid.iter().copied().fold(0.0, f64::max);

    let mut peaks: Vec<usize> = (0..RADIUS_GRID)
        .filter(|&i| {
            let prev = grid[(i + RADIUS_GRID - 1) % RADIUS_GRID];
            let next = grid[(i + 1) % RADIUS_GRID];
            grid[i] >= prev && grid[i] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| grid[b].total_cmp(&grid[a]));
    for &i in peaks.iter().take(RADIUS_REFINE_CANDIDATES) {
        let center = i as f64 * step;
        let refined = golden_max(|t| support(&h, &k, t), center - step, center + step);
        best = best.max(refined);
    }
    best
}

fn golden_max(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    let mut best = g1.max(g2);
    while hi - lo > RADIUS_REFINE_TOL {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + ratio * (hi - lo);
            g2 = g(x2);
            best = best.max(g2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - ratio * (hi - lo);
            g1 = g(x1);
            best = best.max(g1);
        }
    }
    best
}

/// Lower bound for `‖A‖_f` from compressions `X*AY` with `X*X = Y*Y = I_n`.
///
/// The operator is padded by `n` first so the frames can reach the tail.
/// With [`FrameSeeding::SingularFrames`] the first trial uses the singular
/// frames and attains `‖A‖_f`; later trials sample Haar-random frames.
pub fn compression_lower_bound<R: Rng + ?Sized>(
    a: &TailOperator,
    f: &SymmetricNorm,
    trials: usize,
    seeding: FrameSeeding,
    rng: &mut R,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    let n = f.arity();
    let p = a.padded(n);
    let dim = p.m();
    let mut best = 0.0_f64;
    for trial in 0..trials {
        let (x, y) = if trial == 0 && seeding == FrameSeeding::SingularFrames {
            let svd = p.block().svd()?;
            (svd.u.leading(dim, n), svd.v.leading(dim, n))
        } else {
            (
                sample::random_frame(rng, dim, n),
                sample::random_frame(rng, dim, n),
            )
        };
        let compressed = &(&x.adjoint() * p.block()) * &y;
        let s = compressed.singular_values()?;
        best = best.max(f.eval_canonical(&s));
    }
    Ok(best)
}

impl Add for &TailOperator {
    type Output = TailOperator;
    fn add(self, rhs: &TailOperator) -> TailOperator {
        let (a, b) = self.aligned(rhs);
        TailOperator {
            block: &a.block + &b.block,
            tail: a.tail + b.tail,
        }
    }
}

impl Sub for &TailOperator {
    type Output = TailOperator;
    fn sub(self, rhs: &TailOperator) -> TailOperator {
        let (a, b) = self.aligned(rhs);
        TailOperator {
            block: &a.block - &b.block,
            tail: a.tail - b.tail,
        }
    }
}

impl Mul for &TailOperator {
    type Output = TailOperator;
    fn mul(self, rhs: &TailOperator) -> TailOperator {
        let (a, b) = self.aligned(rhs);
        TailOperator {
            block: &a.block * &b.block,
            tail: a.tail * b.tail,
        }
    }
}

impl Neg for &TailOperator {
    type Output = TailOperator;
    fn neg(self) -> TailOperator {
        self.scale_real(-1.0)
    }
}
