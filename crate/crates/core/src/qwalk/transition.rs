use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::scalar::Real;

use super::operators::UnitaryWalk;
use super::space::WalkSpace;

/// How the long-time transition probability is estimated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    /// Cesàro mean of `p(σx→σy; t)` over `t = 1..=time_steps`.
    FiniteTime { time_steps: usize },
    /// Exact long-time average from the eigenphase structure of `U`.
    Spectral,
}

impl Default for Estimator {
    fn default() -> Self {
        Estimator::FiniteTime {
            time_steps: DEFAULT_TIME_STEPS,
        }
    }
}

pub const DEFAULT_TIME_STEPS: usize = 100;

/// Transition probabilities from one source to every active n-simplex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransitionTable<T> {
    pub source: Simplex,
    pub estimator: Estimator,
    /// `(target, q)` in canonical target order; isolated simplices are absent.
    pub values: Vec<(Simplex, T)>,
}

impl<T: Copy> TransitionTable<T> {
    pub fn get(&self, target: &Simplex) -> Option<T> {
        self.values
            .binary_search_by(|(s, _)| s.cmp(target))
            .ok()
            .map(|k| self.values[k].1)
    }
}

/// Folds per-arc occupation into per-simplex values:
/// `Σ_w occ[σy→σw] / (|N^l(σx)|·|N^l(σy)|)`.
pub(crate) fn table_from_occupation<T: Real>(
    space: &WalkSpace,
    source: usize,
    estimator: Estimator,
    occupation: &[T],
) -> TransitionTable<T> {
    let dx = T::from_count(space.degree(source));
    let values = space
        .active()
        .map(|y| {
            let mass: T = occupation[space.arcs_of(y)].iter().copied().sum();
            let q = mass / (dx * T::from_count(space.degree(y)));
            (space.simplex(y).clone(), q)
        })
        .collect();
    TransitionTable {
        source: space.simplex(source).clone(),
        estimator,
        values,
    }
}

impl<T: Real> UnitaryWalk<T> {
    /// Evolves every initial arc of `source` for `steps` steps and reduces
    /// `Σ_v |⟨b|U^t|σx→σv⟩|²` over the times selected by `keep`.
    fn accumulate_occupation(
        &self,
        source: usize,
        steps: usize,
        keep: impl Fn(usize) -> bool + Sync,
    ) -> Vec<T> {
        let m = self.dim();
        let per_arc: Vec<Vec<T>> = self
            .space()
            .arcs_of(source)
            .into_par_iter()
            .map(|arc| {
                let mut psi = vec![Complex::new(T::zero(), T::zero()); m];
                psi[arc] = Complex::new(T::one(), T::zero());
                let mut scratch = Vec::with_capacity(m);
                let mut acc = vec![T::zero(); m];
                if keep(0) {
                    acc[arc] = T::one();
                }
                for t in 1..=steps {
                    self.step_in_place(&mut psi, &mut scratch);
                    if keep(t) {
                        for (a, z) in acc.iter_mut().zip(&psi) {
                            *a = *a + z.norm_sqr();
                        }
                    }
                }
                acc
            })
            .collect();
        // Sequential reduction keeps the result independent of thread count.
        let mut total = vec![T::zero(); m];
        for acc in per_arc {
            for (t, a) in total.iter_mut().zip(acc) {
                *t = *t + a;
            }
        }
        total
    }

    /// Arc occupation `Σ_v |U^t|σx→σv⟩|²` at a single time.
    pub fn occupation_at(&self, source: usize, t: usize) -> Vec<T> {
        self.accumulate_occupation(source, t, |s| s == t)
    }

    /// Time-averaged arc occupation over `t = 1..=time_steps`.
    pub fn averaged_occupation(&self, source: usize, time_steps: usize) -> Vec<T> {
        let scale = T::one() / T::from_count(time_steps);
        self.accumulate_occupation(source, time_steps, |t| t >= 1)
            .into_iter()
            .map(|x| x * scale)
            .collect()
    }
}

/// `p(σx→σy; t)` for every active target at once.
pub fn transition_table_at<T: Real>(
    walk: &UnitaryWalk<T>,
    source: &Simplex,
    t: usize,
) -> Result<TransitionTable<T>> {
    let x = walk.space().active_index_of(source)?;
    let occupation = walk.occupation_at(x, t);
    Ok(table_from_occupation(
        walk.space(),
        x,
        Estimator::FiniteTime { time_steps: t },
        &occupation,
    ))
}

/// Normalized transition probability `p(σx→σy; t)`.
pub fn transition_probability<T: Real>(
    walk: &UnitaryWalk<T>,
    source: &Simplex,
    target: &Simplex,
    t: usize,
) -> Result<T> {
    walk.space().active_index_of(target)?;
    let table = transition_table_at(walk, source, t)?;
    Ok(table.get(target).expect("active target is tabulated"))
}

/// `q̃_T(σx→σy) = (1/T) Σ_{t=1..T} p(σx→σy; t)` for every active target.
pub fn finite_time_average<T: Real>(
    walk: &UnitaryWalk<T>,
    source: &Simplex,
    time_steps: usize,
) -> Result<TransitionTable<T>> {
    if time_steps == 0 {
        return Err(Error::invalid("time_steps must be at least 1"));
    }
    let x = walk.space().active_index_of(source)?;
    let occupation = walk.averaged_occupation(x, time_steps);
    Ok(table_from_occupation(
        walk.space(),
        x,
        Estimator::FiniteTime { time_steps },
        &occupation,
    ))
}
