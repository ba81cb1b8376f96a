//! Hilbert-space and operator algebra for the two-site dimer.
//!
//! Local ladder operators, tensor embedding onto the joint space, the
//! coherent-coupling Hamiltonian and validated density matrices. The joint
//! basis is |n1, n2> with index n1 * N + n2 (site-1 major), where N is the
//! local dimension per site.

use ndarray::{Array1, Array2};
use ndarray_linalg::Eigh;

use crate::error::{DimerError, Result};
use crate::C64;

/// Elementwise Hermiticity tolerance for density matrices.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Trace-normalization tolerance for density matrices.
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest admissible eigenvalue of a density matrix (numerical positivity).
pub const POSITIVITY_TOL: f64 = -1e-8;

/// Physical parameters of the dimer.
///
/// Site 1 is pumped incoherently at rate `s * kappa`, site 2 decays at rate
/// `kappa`, and the two sites are coherently coupled with strength `g` at
/// common transition frequency `omega0`. `n_levels = 2` is the qubit model;
/// larger values truncate a pair of harmonic oscillators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub omega0: f64,
    pub g: f64,
    pub kappa: f64,
    pub s: f64,
    pub n_levels: usize,
}

impl SystemParams {
    pub fn new(omega0: f64, g: f64, kappa: f64, s: f64, n_levels: usize) -> Result<Self> {
        if !omega0.is_finite() || !g.is_finite() || !kappa.is_finite() || !s.is_finite() {
            return Err(DimerError::InvalidParams(
                "omega0, g, kappa, s must be finite".into(),
            ));
        }
        if g < 0.0 {
            return Err(DimerError::InvalidParams(format!("g = {g} must be >= 0")));
        }
        if kappa < 0.0 {
            return Err(DimerError::InvalidParams(format!(
                "kappa = {kappa} must be >= 0"
            )));
        }
        if s < 0.0 {
            return Err(DimerError::InvalidParams(format!("s = {s} must be >= 0")));
        }
        if n_levels < 2 {
            return Err(DimerError::InvalidParams(format!(
                "n_levels = {n_levels} must be >= 2"
            )));
        }
        Ok(Self {
            omega0,
            g,
            kappa,
            s,
            n_levels,
        })
    }

    /// Convenience constructor for the qubit model (`n_levels = 2`).
    pub fn qubit(omega0: f64, g: f64, kappa: f64, s: f64) -> Result<Self> {
        Self::new(omega0, g, kappa, s, 2)
    }

    /// Dimension of the joint Hilbert space, `n_levels^2`.
    pub fn joint_dim(&self) -> usize {
        self.n_levels * self.n_levels
    }

    pub fn is_qubit(&self) -> bool {
        self.n_levels == 2
    }

    pub(crate) fn require_qubit(&self, what: &str) -> Result<()> {
        if self.is_qubit() {
            Ok(())
        } else {
            Err(DimerError::InvalidParams(format!(
                "{what} is defined for n_levels = 2 only (got {})",
                self.n_levels
            )))
        }
    }
}

/// One of the two sites of the dimer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    One,
    Two,
}

impl Site {
    pub fn index(self) -> usize {
        match self {
            Site::One => 1,
            Site::Two => 2,
        }
    }
}

impl TryFrom<usize> for Site {
    type Error = DimerError;
    fn try_from(v: usize) -> Result<Self> {
        match v {
            1 => Ok(Site::One),
            2 => Ok(Site::Two),
            _ => Err(DimerError::InvalidParams(format!(
                "site = {v} must be 1 or 2"
            ))),
        }
    }
}

/// Conjugate transpose.
pub fn dagger(op: &Array2<C64>) -> Array2<C64> {
    op.t().mapv(|z| z.conj())
}

/// Local lowering operator on an `n_levels`-dimensional site:
/// entries `M[k, k+1] = sqrt(k+1)`. For `n_levels = 2` this is the qubit
/// lowering operator `sigma`.
pub fn lowering_operator(n_levels: usize) -> Result<Array2<C64>> {
    if n_levels < 2 {
        return Err(DimerError::InvalidParams(format!(
            "n_levels = {n_levels} must be >= 2"
        )));
    }
    let mut m = Array2::zeros((n_levels, n_levels));
    for k in 0..n_levels - 1 {
        m[[k, k + 1]] = C64::new(((k + 1) as f64).sqrt(), 0.0);
    }
    Ok(m)
}

/// Embed a single-site operator onto the joint space: `op (x) 1` for site 1,
/// `1 (x) op` for site 2 (site-1-major basis ordering).
pub fn embed(op: &Array2<C64>, site: Site, n_levels: usize) -> Result<Array2<C64>> {
    if op.nrows() != n_levels || op.ncols() != n_levels {
        return Err(DimerError::DimensionMismatch(format!(
            "operator is {}x{}, expected {n_levels}x{n_levels}",
            op.nrows(),
            op.ncols()
        )));
    }
    let eye = Array2::eye(n_levels);
    Ok(match site {
        Site::One => ndarray::linalg::kron(op, &eye),
        Site::Two => ndarray::linalg::kron(&eye, op),
    })
}

/// Lowering operator of the given site, embedded on the joint space.
pub fn site_lowering(params: &SystemParams, site: Site) -> Array2<C64> {
    let low = lowering_operator(params.n_levels).expect("n_levels validated");
    embed(&low, site, params.n_levels).expect("dimensions consistent")
}

/// Number operator of the given site, embedded on the joint space.
pub fn site_number(params: &SystemParams, site: Site) -> Array2<C64> {
    let a = site_lowering(params, site);
    dagger(&a).dot(&a)
}

/// Dimer Hamiltonian
/// `omega0 (a1'a1 + a2'a2) + g (a1'a2 + a2'a1)`, Hermitian by construction.
pub fn hamiltonian(params: &SystemParams) -> Array2<C64> {
    let a1 = site_lowering(params, Site::One);
    let a2 = site_lowering(params, Site::Two);
    let a1d = dagger(&a1);
    let a2d = dagger(&a2);
    let number = a1d.dot(&a1) + a2d.dot(&a2);
    let hop = a1d.dot(&a2) + a2d.dot(&a1);
    number.mapv(|z| z * params.omega0) + hop.mapv(|z| z * params.g)
}

/// Validated density matrix on the joint space.
///
/// Construction enforces Hermiticity and unit trace to 1e-10 and eigenvalues
/// above -1e-8.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: Array2<C64>,
}

impl DensityMatrix {
    pub fn new(mat: Array2<C64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(DimerError::InvalidState(format!(
                "density matrix must be square, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let herm_defect = hermiticity_defect(&mat);
        if !(herm_defect <= HERMITICITY_TOL) {
            return Err(DimerError::InvalidState(format!(
                "Hermiticity defect {herm_defect:.3e} exceeds {HERMITICITY_TOL:.0e}"
            )));
        }
        let tr = trace(&mat);
        if !((tr.re - 1.0).abs() <= TRACE_TOL && tr.im.abs() <= TRACE_TOL) {
            return Err(DimerError::InvalidState(format!(
                "trace {tr} deviates from 1 beyond {TRACE_TOL:.0e}"
            )));
        }
        let herm = (&mat + &dagger(&mat)).mapv(|z| z * 0.5);
        let evals = herm
            .eigvalsh(ndarray_linalg::UPLO::Lower)
            .map_err(|e| DimerError::Eigensolver(e.to_string()))?;
        let min_eval = evals.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(min_eval >= POSITIVITY_TOL) {
            return Err(DimerError::InvalidState(format!(
                "minimum eigenvalue {min_eval:.3e} below {POSITIVITY_TOL:.0e}"
            )));
        }
        Ok(Self { mat })
    }

    /// Pure product state |n1, n2><n1, n2|.
    pub fn basis_state(occupations: (usize, usize), n_levels: usize) -> Result<Self> {
        let (n1, n2) = occupations;
        if n_levels < 2 {
            return Err(DimerError::InvalidParams(format!(
                "n_levels = {n_levels} must be >= 2"
            )));
        }
        if n1 >= n_levels || n2 >= n_levels {
            return Err(DimerError::InvalidParams(format!(
                "occupations ({n1}, {n2}) out of range for n_levels = {n_levels}"
            )));
        }
        let dim = n_levels * n_levels;
        let idx = n1 * n_levels + n2;
        let mut mat = Array2::zeros((dim, dim));
        mat[[idx, idx]] = C64::new(1.0, 0.0);
        Ok(Self { mat })
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.mat
    }

    pub fn into_matrix(self) -> Array2<C64> {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Expectation value Tr(rho op).
    pub fn expectation(&self, op: &Array2<C64>) -> C64 {
        debug_assert_eq!(op.nrows(), self.dim());
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += self.mat[[i, j]] * op[[j, i]];
            }
        }
        acc
    }

    /// Tr(rho^2).
    pub fn purity(&self) -> f64 {
        self.expectation(&self.mat).re
    }

    /// Diagonal (populations) in the joint basis.
    pub fn populations(&self) -> Array1<f64> {
        Array1::from_iter((0..self.dim()).map(|i| self.mat[[i, i]].re))
    }
}

pub fn trace(mat: &Array2<C64>) -> C64 {
    mat.diag().sum()
}

/// Elementwise max |m - m^dag|.
pub fn hermiticity_defect(mat: &Array2<C64>) -> f64 {
    let d = mat - &dagger(mat);
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
