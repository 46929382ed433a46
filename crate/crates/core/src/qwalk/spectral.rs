//! Long-time behaviour of the walk from the spectral decomposition of `U`.
//!
//! `U` is unitary, hence normal, so its complex Schur form is diagonal and
//! the Schur vectors form an orthonormal eigenbasis even when eigenphases
//! repeat. Eigenphases closer than a tolerance (circularly) are grouped and
//! each group contributes through its eigenspace projector `P_g`:
//!
//! `q(σx→σy) = 1/(|N^l(σx)||N^l(σy)|) Σ_w Σ_v Σ_g |⟨σy→σw|P_g|σx→σv⟩|²`,
//!
//! which is the Kronecker-delta sum over equal phases evaluated exactly.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::scalar::LinalgReal;

use super::operators::UnitaryWalk;
use super::space::WalkSpace;
use super::transition::{table_from_occupation, Estimator, TransitionTable};

pub const DEFAULT_PHASE_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct UnitarySpectrum<T> {
    phases: Vec<T>,
    vectors: DMatrix<Complex<T>>,
    groups: Vec<Vec<usize>>,
}

impl<T: LinalgReal> UnitarySpectrum<T> {
    /// Densifies `U` once and diagonalizes it.
    pub fn compute(walk: &UnitaryWalk<T>, phase_tolerance: T) -> Result<Self> {
        let u = walk.to_dense();
        let m = u.nrows();
        if m == 0 {
            return Ok(UnitarySpectrum {
                phases: Vec::new(),
                vectors: u,
                groups: Vec::new(),
            });
        }
        let eps = <T as Float>::epsilon();
        let schur = Schur::try_new(u.clone(), eps, 0)
            .ok_or_else(|| Error::Numerical("complex Schur iteration did not converge".into()))?;
        let (vectors, triangular) = schur.unpack();

        let two_pi = <T as nalgebra::RealField>::two_pi();
        let phases: Vec<T> = (0..m)
            .map(|k| {
                let z = triangular[(k, k)];
                let theta = Float::atan2(z.im, z.re);
                if theta < T::zero() {
                    theta + two_pi
                } else {
                    theta
                }
            })
            .collect();

        let spectrum = UnitarySpectrum {
            groups: group_phases(&phases, phase_tolerance),
            phases,
            vectors,
        };
        let residual = spectrum.max_residual(&u);
        let limit = Float::sqrt(eps) * T::from_count(10);
        if Float::is_nan(residual) || residual > limit {
            return Err(Error::Numerical(format!(
                "eigenpair residual {residual} exceeds {limit}; U is not numerically normal"
            )));
        }
        Ok(spectrum)
    }

    /// `θ_k ∈ [0, 2π)`.
    pub fn phases(&self) -> &[T] {
        &self.phases
    }

    /// Orthonormal eigenvectors as columns.
    pub fn vectors(&self) -> &DMatrix<Complex<T>> {
        &self.vectors
    }

    /// Indices of eigenpairs sharing a phase, ordered by phase.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn is_degenerate(&self) -> bool {
        self.groups.iter().any(|g| g.len() > 1)
    }

    /// `max_k ‖U Φ_k − e^{iθ_k} Φ_k‖_∞`.
    pub fn max_residual(&self, u: &DMatrix<Complex<T>>) -> T {
        let mut worst = T::zero();
        for (k, &theta) in self.phases.iter().enumerate() {
            let lambda = Complex::from_polar(T::one(), theta);
            let phi = self.vectors.column(k);
            for i in 0..u.nrows() {
                let mut acc: Complex<T> = Complex::zero();
                for j in 0..u.ncols() {
                    acc += u[(i, j)] * phi[j];
                }
                let diff: Complex<T> = acc - lambda * phi[i];
                worst = Float::max(worst, diff.norm());
            }
        }
        worst
    }

    /// `max |⟨Φ_j|Φ_k⟩ − δ_jk|`.
    pub fn orthonormality_defect(&self) -> T {
        let mut worst = T::zero();
        let m = self.vectors.ncols();
        for j in 0..m {
            for k in j..m {
                let mut dot = Complex::zero();
                for i in 0..self.vectors.nrows() {
                    dot += self.vectors[(i, j)].conj() * self.vectors[(i, k)];
                }
                if j == k {
                    dot -= Complex::new(T::one(), T::zero());
                }
                worst = Float::max(worst, dot.norm());
            }
        }
        worst
    }

    /// Long-time arc occupation `Σ_v Σ_g |P_g |σx→σv⟩|²`.
    pub fn long_time_occupation(&self, space: &WalkSpace, source: usize) -> Vec<T> {
        let m = self.vectors.nrows();
        let mut occupation = vec![T::zero(); m];
        let mut column = vec![Complex::zero(); m];
        for arc in space.arcs_of(source) {
            for group in &self.groups {
                column.iter_mut().for_each(|z| *z = Complex::zero());
                for &k in group {
                    let weight = self.vectors[(arc, k)].conj();
                    for (z, phi) in column.iter_mut().zip(self.vectors.column(k).iter()) {
                        *z += *phi * weight;
                    }
                }
                for (o, z) in occupation.iter_mut().zip(&column) {
                    *o += z.norm_sqr();
                }
            }
        }
        occupation
    }

    /// Per-eigenvector form `Σ_v Σ_k |Φ_k[b]|²·|Φ_k[σx→σv]|²`, valid only when
    /// every phase is distinct.
    pub fn eigenbasis_occupation(&self, space: &WalkSpace, source: usize) -> Vec<T> {
        let m = self.vectors.nrows();
        let mut occupation = vec![T::zero(); m];
        for k in 0..self.vectors.ncols() {
            let weight: T = space
                .arcs_of(source)
                .map(|a| self.vectors[(a, k)].norm_sqr())
                .sum();
            for (o, phi) in occupation.iter_mut().zip(self.vectors.column(k).iter()) {
                *o += phi.norm_sqr() * weight;
            }
        }
        occupation
    }
}

/// Sorts phases and merges neighbours within `tolerance`, wrapping at 2π.
fn group_phases<T: LinalgReal>(phases: &[T], tolerance: T) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..phases.len()).collect();
    order.sort_by(|&a, &b| phases[a].partial_cmp(&phases[b]).expect("finite phase"));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, &k) in order.iter().enumerate() {
        let starts_new = pos == 0 || phases[k] - phases[order[pos - 1]] > tolerance;
        if starts_new {
            groups.push(vec![k]);
        } else {
            groups.last_mut().expect("non-empty").push(k);
        }
    }
    if groups.len() > 1 {
        let first = phases[order[0]];
        let last = phases[order[order.len() - 1]];
        if first + <T as nalgebra::RealField>::two_pi() - last <= tolerance {
            let tail = groups.pop().expect("non-empty");
            groups[0].extend(tail);
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Long-time average `q(σx→σy)` for every active target.
pub fn long_time_average_spectral<T: LinalgReal>(
    walk: &UnitaryWalk<T>,
    spectrum: &UnitarySpectrum<T>,
    source: &Simplex,
) -> Result<TransitionTable<T>> {
    let space = walk.space();
    let x = space.active_index_of(source)?;
    let occupation = spectrum.long_time_occupation(space, x);
    Ok(table_from_occupation(
        space,
        x,
        Estimator::Spectral,
        &occupation,
    ))
}

/// Lower bound on `q(σx→σy)` from the averaged amplitude
/// `Σ_g |⟨σy|P_g|σx⟩|²`, where `|σ⟩ = (1/|N^l(σ)|) Σ_v |σ→σv⟩`.
///
/// With distinct phases each `P_g` is a single `|Φ_k⟩⟨Φ_k|` and this is
/// `Σ_k |⟨σy|Φ_k⟩⟨Φ_k|σx⟩|²`. The states are not normalized.
pub fn amplitude_lower_bound<T: LinalgReal>(
    walk: &UnitaryWalk<T>,
    spectrum: &UnitarySpectrum<T>,
    source: &Simplex,
    target: &Simplex,
) -> Result<T> {
    let space = walk.space();
    let x = space.active_index_of(source)?;
    let y = space.active_index_of(target)?;
    let dx = T::from_count(space.degree(x));
    let dy = T::from_count(space.degree(y));
    let vectors = spectrum.vectors();
    let mut bound = T::zero();
    for group in spectrum.groups() {
        let mut amplitude: Complex<T> = Complex::zero();
        for &k in group {
            let onto_y: Complex<T> = space
                .arcs_of(y)
                .fold(Complex::zero(), |acc, a| acc + vectors[(a, k)]);
            let from_x: Complex<T> = space
                .arcs_of(x)
                .fold(Complex::zero(), |acc, a| acc + vectors[(a, k)].conj());
            amplitude += onto_y * from_x;
        }
        bound += amplitude.norm_sqr() / (dx * dx * dy * dy);
    }
    Ok(bound)
}
