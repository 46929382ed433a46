use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{root_of_unity, Real};

use super::space::WalkSpace;

/// Block-diagonal Fourier coin: on the arcs leaving `σ_i` it acts as the
/// `d×d` DFT matrix `ω^{αβ}/√d`, `d = |N^l(σ_i)|`, `ω = e^{2πi/d}`.
#[derive(Clone, Debug)]
pub struct FourierCoin<T> {
    // Row-major d×d blocks keyed by d; blocks only depend on the size.
    blocks: BTreeMap<usize, Vec<Complex<T>>>,
}

impl<T: Real> FourierCoin<T> {
    pub fn new(space: &WalkSpace) -> Self {
        let mut blocks = BTreeMap::new();
        for d in space.degrees() {
            blocks.entry(d).or_insert_with(|| fourier_matrix(d));
        }
        FourierCoin { blocks }
    }

    /// The `d×d` block, row-major, if some simplex has `|N^l| = d`.
    pub fn block(&self, d: usize) -> Option<&[Complex<T>]> {
        self.blocks.get(&d).map(Vec::as_slice)
    }

    /// `out = C · input`.
    pub fn apply(&self, space: &WalkSpace, input: &[Complex<T>], out: &mut [Complex<T>]) {
        for i in space.active() {
            let range = space.arcs_of(i);
            let d = range.len();
            let block = &self.blocks[&d];
            let x = &input[range.clone()];
            for (beta, y) in out[range].iter_mut().enumerate() {
                let row = &block[beta * d..(beta + 1) * d];
                *y = row
                    .iter()
                    .zip(x)
                    .fold(Complex::zero(), |acc, (&f, &v)| acc + f * v);
            }
        }
    }

    pub fn to_dense(&self, space: &WalkSpace) -> DMatrix<Complex<T>> {
        let mut m = DMatrix::from_element(space.arc_count(), space.arc_count(), Complex::zero());
        for i in space.active() {
            let range = space.arcs_of(i);
            let d = range.len();
            let block = &self.blocks[&d];
            for beta in 0..d {
                for alpha in 0..d {
                    m[(range.start + beta, range.start + alpha)] = block[beta * d + alpha];
                }
            }
        }
        m
    }
}

/// The `d×d` Fourier matrix with entries `e^{2πi·αβ/d}/√d`.
pub fn fourier_matrix<T: Real>(d: usize) -> Vec<Complex<T>> {
    let scale = T::one() / T::from_count(d).sqrt();
    let mut block = Vec::with_capacity(d * d);
    for beta in 0..d {
        for alpha in 0..d {
            block.push(root_of_unity::<T>(alpha * beta, d) * scale);
        }
    }
    block
}

/// Arc reversal `|σ_i → σ_j⟩ ↦ |σ_j → σ_i⟩`, an involutive permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcShift {
    reverse: Vec<usize>,
}

impl ArcShift {
    pub fn new(space: &WalkSpace) -> Self {
        ArcShift {
            reverse: (0..space.arc_count()).map(|a| space.reverse(a)).collect(),
        }
    }

    /// Image of basis arc `a`.
    pub fn image(&self, a: usize) -> usize {
        self.reverse[a]
    }

    pub fn apply<V: Copy>(&self, input: &[V], out: &mut [V]) {
        for (a, &v) in input.iter().enumerate() {
            out[self.reverse[a]] = v;
        }
    }

    pub fn to_dense<T: Real>(&self) -> DMatrix<Complex<T>> {
        let m = self.reverse.len();
        let mut out = DMatrix::from_element(m, m, Complex::zero());
        for (a, &b) in self.reverse.iter().enumerate() {
            out[(b, a)] = Complex::new(T::one(), T::zero());
        }
        out
    }
}

/// One step of the walk, `U = S·C`, applied without forming `U`.
#[derive(Clone, Debug)]
pub struct UnitaryWalk<T> {
    space: WalkSpace,
    coin: FourierCoin<T>,
    shift: ArcShift,
}

impl<T: Real> UnitaryWalk<T> {
    pub fn new(space: WalkSpace) -> Self {
        let coin = FourierCoin::new(&space);
        let shift = ArcShift::new(&space);
        UnitaryWalk { space, coin, shift }
    }

    pub fn space(&self) -> &WalkSpace {
        &self.space
    }

    pub fn coin(&self) -> &FourierCoin<T> {
        &self.coin
    }

    pub fn shift(&self) -> &ArcShift {
        &self.shift
    }

    pub fn dim(&self) -> usize {
        self.space.arc_count()
    }

    /// `state ← U·state`; `scratch` is resized as needed.
    pub fn step_in_place(&self, state: &mut [Complex<T>], scratch: &mut Vec<Complex<T>>) {
        scratch.resize(state.len(), Complex::zero());
        self.coin.apply(&self.space, state, scratch);
        self.shift.apply(scratch, state);
    }

    /// `U^t |ψ⟩`.
    pub fn evolve(&self, state: &QuantumState<T>, t: usize) -> QuantumState<T> {
        let mut amplitudes = state.amplitudes.clone();
        let mut scratch = Vec::with_capacity(amplitudes.len());
        for _ in 0..t {
            self.step_in_place(&mut amplitudes, &mut scratch);
        }
        QuantumState { amplitudes }
    }

    /// Dense `U`, with `U[S(b), a] = C[b, a]`.
    pub fn to_dense(&self) -> DMatrix<Complex<T>> {
        let m = self.dim();
        let mut u = DMatrix::from_element(m, m, Complex::zero());
        for i in self.space.active() {
            let range = self.space.arcs_of(i);
            let d = range.len();
            let block = self.coin.block(d).expect("block for every active degree");
            for beta in 0..d {
                let row = self.shift.image(range.start + beta);
                for alpha in 0..d {
                    u[(row, range.start + alpha)] = block[beta * d + alpha];
                }
            }
        }
        u
    }
}

pub fn coin_operator<T: Real>(space: &WalkSpace) -> FourierCoin<T> {
    FourierCoin::new(space)
}

pub fn shift_operator(space: &WalkSpace) -> ArcShift {
    ArcShift::new(space)
}

pub fn step_operator<T: Real>(space: WalkSpace) -> UnitaryWalk<T> {
    UnitaryWalk::new(space)
}

/// Amplitudes over the arc basis of a [`WalkSpace`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> QuantumState<T> {
    pub fn new(amplitudes: Vec<Complex<T>>) -> Self {
        QuantumState { amplitudes }
    }

    /// The basis state concentrated on `arc`.
    pub fn basis(dim: usize, arc: usize) -> Result<Self> {
        if arc >= dim {
            return Err(Error::invalid(format!(
                "arc {arc} outside a space of dimension {dim}"
            )));
        }
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[arc] = Complex::new(T::one(), T::zero());
        Ok(QuantumState { amplitudes })
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<T> {
        self.amplitudes.iter().map(|z| z.norm_sqr()).collect()
    }
}

pub fn evolve<T: Real>(
    walk: &UnitaryWalk<T>,
    state: &QuantumState<T>,
    t: usize,
) -> QuantumState<T> {
    walk.evolve(state, t)
}
