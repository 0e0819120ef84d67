//! Seeded random generators for operators, unitaries, frames and weights.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{CMatrix, C64, ZERO};
use crate::opmodel::TailOperator;

/// Independent generator for item `stream` of a run seeded with `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian, `E|z|² = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, m: usize) -> CMatrix {
    CMatrix::from_fn(m, m, |_, _| complex_normal(rng))
}

pub fn unit_phase<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    C64::from_polar(1.0, t)
}

/// Operator with block size `m` and `O(1)` spectral norm.
pub fn random_operator_of_size<R: Rng + ?Sized>(rng: &mut R, m: usize) -> TailOperator {
    let scale = 1.0 / (m.max(1) as f64).sqrt();
    let block = gaussian_matrix(rng, m).scale_real(scale);
    TailOperator::new(block, complex_normal(rng)).expect("finite square block")
}

/// Operator with block size uniform in `0..=max_m`.
pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, max_m: usize) -> TailOperator {
    let m = rng.random_range(0..=max_m);
    random_operator_of_size(rng, m)
}

pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..m).map(|_| complex_normal(rng)).collect();
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-8 {
            return v.into_iter().map(|z| z / n).collect();
        }
    }
}

/// Haar-distributed unitary (Gram–Schmidt on a complex Gaussian matrix).
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, m: usize) -> CMatrix {
    let g = gaussian_matrix(rng, m);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(m);
    for j in 0..m {
        let mut v = g.column(j);
        for _ in 0..2 {
            for q in &cols {
                let proj: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / n).collect());
    }
    CMatrix::from_columns(m, &cols)
}

/// Unitary block of size `m` with a unimodular tail.
pub fn random_unitary_operator<R: Rng + ?Sized>(rng: &mut R, m: usize) -> TailOperator {
    let u = random_unitary(rng, m);
    TailOperator::new(u, unit_phase(rng)).expect("finite square block")
}

/// `dim x k` matrix with orthonormal columns.
pub fn random_frame<R: Rng + ?Sized>(rng: &mut R, dim: usize, k: usize) -> CMatrix {
    random_unitary(rng, dim).leading(dim, k)
}

/// Random positive semidefinite `p x p` matrix of rank `rank`.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, p: usize, rank: usize) -> CMatrix {
    let g = CMatrix::from_fn(p, rank, |_, _| complex_normal(rng));
    (&g * &g.adjoint()).scale_real(1.0 / rank.max(1) as f64)
}

/// Strictly positive weights sorted in descending order.
pub fn random_positive_descending<R: Rng + ?Sized>(rng: &mut R, p: usize) -> Vec<f64> {
    let mut c: Vec<f64> = (0..p).map(|_| rng.random_range(0.05..2.0)).collect();
    c.sort_by(|a, b| b.total_cmp(a));
    c
}

/// Nonnegative vector in descending order with entries in `[0, 1)`.
pub fn random_descending<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut c: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    c.sort_by(|a, b| b.total_cmp(a));
    c
}

pub fn basis_vector(m: usize, i: usize) -> Vec<C64> {
    let mut e = vec![ZERO; m];
    e[i] = C64::new(1.0, 0.0);
    e
}
