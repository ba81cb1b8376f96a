//! Dense complex linear-algebra support: vectorization, matrix exponential,
//! eigenvector conditioning and spectral comparison helpers.
//!
//! Vectorization is column-stacking throughout: vec(A rho B) = (B^T (x) A) vec(rho),
//! so the matrix element (row, col) sits at vec index col * d + row.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, Inverse, OperationNorm, SVD};

use crate::error::{DimerError, Result};
use crate::C64;

/// Column-stack a matrix into a vector.
pub fn vectorize(m: &Array2<C64>) -> Array1<C64> {
    let d = m.nrows();
    Array1::from_shape_fn(d * d, |k| m[[k % d, k / d]])
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &Array1<C64>) -> Array2<C64> {
    let d = (v.len() as f64).sqrt().round() as usize;
    assert_eq!(d * d, v.len(), "vector length must be a perfect square");
    Array2::from_shape_fn((d, d), |(r, c)| v[c * d + r])
}

/// vec index of matrix element (row, col).
pub fn vec_index(row: usize, col: usize, d: usize) -> usize {
    col * d + row
}

/// Dense matrix exponential by scaling and squaring with a degree-13 Pade
/// approximant.
pub fn expm(a: &Array2<C64>) -> Result<Array2<C64>> {
    const THETA_13: f64 = 5.371920351148152;
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let n = a.nrows();
    if n != a.ncols() {
        return Err(DimerError::DimensionMismatch("expm needs square input".into()));
    }
    let norm = a.opnorm_one().map_err(|e| DimerError::Numerical(e.to_string()))?;
    let squarings = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    let scale = C64::new((0.5f64).powi(squarings as i32), 0.0);
    let a = a.mapv(|z| z * scale);

    let eye: Array2<C64> = Array2::eye(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);

    let cb = |x: f64| C64::new(x, 0.0);
    let u_inner = a6.mapv(|z| z * cb(B[13])) + a4.mapv(|z| z * cb(B[11])) + a2.mapv(|z| z * cb(B[9]));
    let u_poly = a6.dot(&u_inner)
        + a6.mapv(|z| z * cb(B[7]))
        + a4.mapv(|z| z * cb(B[5]))
        + a2.mapv(|z| z * cb(B[3]))
        + eye.mapv(|z| z * cb(B[1]));
    let u = a.dot(&u_poly);
    let v_inner = a6.mapv(|z| z * cb(B[12])) + a4.mapv(|z| z * cb(B[10])) + a2.mapv(|z| z * cb(B[8]));
    let v = a6.dot(&v_inner)
        + a6.mapv(|z| z * cb(B[6]))
        + a4.mapv(|z| z * cb(B[4]))
        + a2.mapv(|z| z * cb(B[2]))
        + eye.mapv(|z| z * cb(B[0]));

    let denom = &v - &u;
    let numer = &v + &u;
    let denom_inv = denom
        .inv()
        .map_err(|e| DimerError::LinearSolve(format!("expm Pade solve: {e}")))?;
    let mut f = denom_inv.dot(&numer);
    for _ in 0..squarings {
        f = f.dot(&f);
    }
    Ok(f)
}

/// Right eigendecomposition with the inverse of the eigenvector matrix and
/// its 2-norm condition number.
pub struct Eigensystem {
    pub values: Array1<C64>,
    pub vectors: Array2<C64>,
    pub vectors_inv: Array2<C64>,
    pub condition: f64,
}

impl Eigensystem {
    pub fn new(a: &Array2<C64>) -> Result<Self> {
        let (values, vectors) = a
            .eig()
            .map_err(|e| DimerError::Eigensolver(e.to_string()))?;
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(DimerError::Eigensolver(
                "non-finite eigenvalue produced".into(),
            ));
        }
        let vectors_inv = vectors
            .inv()
            .map_err(|e| DimerError::Eigensolver(format!("eigenvector inversion: {e}")))?;
        let condition = condition_number_2(&vectors)?;
        Ok(Self {
            values,
            vectors,
            vectors_inv,
            condition,
        })
    }
}

/// 2-norm condition number via singular values.
pub fn condition_number_2(m: &Array2<C64>) -> Result<f64> {
    let (_, sv, _) = m
        .svd(false, false)
        .map_err(|e| DimerError::Numerical(format!("svd: {e}")))?;
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(if smin > 0.0 { smax / smin } else { f64::INFINITY })
}

/// Smallest distance between any pair of values.
pub fn min_pair_distance(values: &[C64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            best = best.min((values[i] - values[j]).norm());
        }
    }
    best
}

/// Greedy nearest-neighbor matching distance between two spectra of equal
/// length. Avoids the branch-ordering ambiguity of lexicographic sorting.
pub fn matched_max_distance(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut remaining: Vec<C64> = b.to_vec();
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = remaining
            .iter()
            .enumerate()
            .map(|(j, y)| (j, (*x - *y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("nonempty");
        worst = worst.max(d);
        remaining.swap_remove(j);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::arr2;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn vec_convention_roundtrip_and_kron_identity() {
        // vec(A X B) = (B^T (x) A) vec(X) for the column-stacking convention.
        let a = arr2(&[[c(1.0, 0.2), c(-0.3, 1.0)], [c(0.0, -1.5), c(2.0, 0.0)]]);
        let x = arr2(&[[c(0.5, 0.0), c(1.0, -1.0)], [c(-0.7, 0.3), c(0.1, 0.9)]]);
        let b = arr2(&[[c(2.0, -0.4), c(0.6, 0.0)], [c(1.1, 0.5), c(-0.2, 0.8)]]);
        let lhs = vectorize(&a.dot(&x).dot(&b));
        let bt = b.t().to_owned();
        let rhs = ndarray::linalg::kron(&bt, &a).dot(&vectorize(&x));
        for (u, v) in lhs.iter().zip(rhs.iter()) {
            assert_abs_diff_eq!((u - v).norm(), 0.0, epsilon = 1e-14);
        }
        assert_eq!(unvectorize(&vectorize(&x)), x);
    }

    #[test]
    fn expm_diagonal() {
        let a = arr2(&[[c(0.3, -1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-2.0, 0.5)]]);
        let e = expm(&a).unwrap();
        assert_abs_diff_eq!((e[[0, 0]] - a[[0, 0]].exp()).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((e[[1, 1]] - a[[1, 1]].exp()).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e[[0, 1]].norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn expm_nilpotent() {
        // exp([[0, a], [0, 0]]) = [[1, a], [0, 1]]
        let a = arr2(&[[c(0.0, 0.0), c(3.0, -2.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
        let e = expm(&a).unwrap();
        assert_abs_diff_eq!((e[[0, 1]] - c(3.0, -2.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((e[[0, 0]] - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn expm_rotation_large_norm_triggers_squaring() {
        // exp(t * [[0, -w], [w, 0]]) is a rotation by w t.
        let w = 40.0;
        let a = arr2(&[[c(0.0, 0.0), c(-w, 0.0)], [c(w, 0.0), c(0.0, 0.0)]]);
        let e = expm(&a).unwrap();
        assert_abs_diff_eq!(e[[0, 0]].re, w.cos(), epsilon = 1e-11);
        assert_abs_diff_eq!(e[[1, 0]].re, w.sin(), epsilon = 1e-11);
    }

    #[test]
    fn expm_agrees_with_eigendecomposition() {
        let a = arr2(&[
            [c(-0.5, 1.0), c(0.3, 0.0), c(0.0, -0.2)],
            [c(0.1, 0.1), c(-1.0, -2.0), c(0.4, 0.0)],
            [c(0.0, 0.3), c(-0.2, 0.0), c(-0.1, 0.7)],
        ]);
        let e = expm(&a).unwrap();
        let es = Eigensystem::new(&a).unwrap();
        let lam = Array2::from_diag(&es.values.mapv(|z| z.exp()));
        let via_eig = es.vectors.dot(&lam).dot(&es.vectors_inv);
        for (u, v) in e.iter().zip(via_eig.iter()) {
            assert_abs_diff_eq!((u - v).norm(), 0.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn matched_distance_handles_tied_real_parts() {
        let a = [c(1.0, -0.3), c(1.0, -1.7), c(0.4, -1.0)];
        let b = [c(1.0, -1.7), c(0.4, -1.0), c(1.0, -0.3)];
        assert_eq!(matched_max_distance(&a, &b), 0.0);
    }

    #[test]
    fn condition_number_of_unitary_is_one() {
        let u = arr2(&[
            [c(0.0, 1.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-1.0, 0.0)],
        ]);
        assert_abs_diff_eq!(condition_number_2(&u).unwrap(), 1.0, epsilon = 1e-12);
    }
}
