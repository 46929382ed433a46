//! Hodge Laplacians `L^up_n = B_{n+1} B_{n+1}^T`, `L^down_n = B_n^T B_n`,
//! their chain identities and kernel dimensions.
//!
//! The Laplacians are kept as exact integer matrices; conversion to a
//! floating type happens only when a spectrum is requested.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::Float;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::scalar::LinalgReal;

/// Default cutoff below which a Laplacian eigenvalue counts as zero.
pub const DEFAULT_KERNEL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeLaplacian {
    n: usize,
    up: DMatrix<i64>,
    down: Option<DMatrix<i64>>,
}

impl HodgeLaplacian {
    /// Assembles the Laplacian from dense incidence matrices. `lower` is
    /// `B_n` (absent for `n = 0`), `upper` is `B_{n+1}`.
    pub fn from_incidence(n: usize, lower: Option<&DMatrix<i64>>, upper: &DMatrix<i64>) -> Self {
        let up = upper * upper.transpose();
        let down = lower.map(|b| b.transpose() * b);
        HodgeLaplacian { n, up, down }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn up(&self) -> &DMatrix<i64> {
        &self.up
    }

    pub fn down(&self) -> Option<&DMatrix<i64>> {
        self.down.as_ref()
    }

    /// `L_n = L^up_n + L^down_n` (just `L^up_0` for `n = 0`).
    pub fn total(&self) -> DMatrix<i64> {
        match &self.down {
            Some(down) => &self.up + down,
            None => self.up.clone(),
        }
    }
}

pub fn hodge_laplacian(complex: &SimplicialComplex, n: usize) -> Result<HodgeLaplacian> {
    if n >= complex.num_levels() {
        return Err(Error::invalid(format!(
            "Hodge Laplacian L_{n} needs n < {}",
            complex.num_levels()
        )));
    }
    let upper = complex.boundary_matrix(n + 1)?.to_dense();
    let lower = if n > 0 {
        Some(complex.boundary_matrix(n)?.to_dense())
    } else {
        None
    };
    Ok(HodgeLaplacian::from_incidence(n, lower.as_ref(), &upper))
}

/// Outcome of the exact chain-complex checks at dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainIdentityReport {
    pub dim: usize,
    /// `B_n B_{n+1} = 0`.
    pub boundary_of_boundary: bool,
    /// `L^up_n L^down_n = 0`.
    pub up_down: bool,
    /// `L^down_n L^up_n = 0`.
    pub down_up: bool,
}

impl ChainIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.boundary_of_boundary && self.up_down && self.down_up
    }
}

/// Checks the identities in integer arithmetic. For `n = 0` there is no
/// `B_0` and the identities hold vacuously.
pub fn verify_chain_identities(
    complex: &SimplicialComplex,
    n: usize,
) -> Result<ChainIdentityReport> {
    let laplacian = hodge_laplacian(complex, n)?;
    let Some(down) = laplacian.down() else {
        return Ok(ChainIdentityReport {
            dim: n,
            boundary_of_boundary: true,
            up_down: true,
            down_up: true,
        });
    };
    let b_n = complex.boundary_matrix(n)?.to_dense();
    let b_next = complex.boundary_matrix(n + 1)?.to_dense();
    let is_zero = |m: &DMatrix<i64>| m.iter().all(|&x| x == 0);
    Ok(ChainIdentityReport {
        dim: n,
        boundary_of_boundary: is_zero(&(&b_n * &b_next)),
        up_down: is_zero(&(laplacian.up() * down)),
        down_up: is_zero(&(down * laplacian.up())),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport<T> {
    pub dim: usize,
    /// Ascending.
    pub eigenvalues: Vec<T>,
    pub betti: usize,
}

/// Ascending eigenvalues of a symmetric integer matrix.
pub fn symmetric_eigenvalues<T: LinalgReal>(matrix: &DMatrix<i64>) -> Result<Vec<T>> {
    if matrix.is_empty() {
        return Ok(Vec::new());
    }
    let real = matrix.map(|x| T::from_i64(x).expect("small integer entry"));
    let eigen = SymmetricEigen::try_new(real, T::default_epsilon(), 0)
        .ok_or_else(|| Error::Numerical("symmetric eigensolver did not converge".into()))?;
    let mut values: Vec<T> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(values)
}

/// Number of eigenvalues at or above `tolerance`.
pub fn numerical_rank<T: LinalgReal>(matrix: &DMatrix<i64>, tolerance: T) -> Result<usize> {
    Ok(symmetric_eigenvalues::<T>(matrix)?
        .into_iter()
        .filter(|&x| x >= tolerance)
        .count())
}

/// Spectrum of the total Laplacian `L_n` with its kernel dimension.
pub fn spectrum<T: LinalgReal>(
    complex: &SimplicialComplex,
    n: usize,
    tolerance: T,
) -> Result<SpectrumReport<T>> {
    if Float::is_nan(tolerance) || tolerance <= T::zero() {
        return Err(Error::invalid("kernel tolerance must be positive"));
    }
    let total = hodge_laplacian(complex, n)?.total();
    let eigenvalues = symmetric_eigenvalues::<T>(&total)?;
    let betti = eigenvalues
        .iter()
        .filter(|&&x| Float::abs(x) < tolerance)
        .count();
    Ok(SpectrumReport {
        dim: n,
        eigenvalues,
        betti,
    })
}

/// `β_n = dim ker L_n`.
pub fn betti_number<T: LinalgReal>(
    complex: &SimplicialComplex,
    n: usize,
    tolerance: T,
) -> Result<usize> {
    Ok(spectrum(complex, n, tolerance)?.betti)
}
