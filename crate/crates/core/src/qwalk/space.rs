use std::ops::Range;

use crate::complex::{Adjacency, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Basis of translation states `|σ_i → σ_j⟩` over ordered lower-adjacent
/// pairs of n-simplices.
///
/// Arcs are grouped by source in canonical simplex order, and inside a group
/// ordered by target, so arc positions `offsets[i]..offsets[i+1]` belong to
/// simplex `i`. Simplices with an empty lower neighborhood own no arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkSpace {
    n: usize,
    simplices: Vec<Simplex>,
    offsets: Vec<usize>,
    sources: Vec<usize>,
    targets: Vec<usize>,
    reverse: Vec<usize>,
}

impl WalkSpace {
    pub fn new(complex: &SimplicialComplex, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid(
                "the walk is defined on n-simplices with n >= 1",
            ));
        }
        let adjacency = complex.adjacency(n, Adjacency::Lower)?;
        let simplices = complex.simplices(n).to_vec();
        let mut offsets = Vec::with_capacity(simplices.len() + 1);
        let mut sources = Vec::with_capacity(adjacency.nnz());
        let mut targets = Vec::with_capacity(adjacency.nnz());
        offsets.push(0);
        for i in 0..simplices.len() {
            for &j in adjacency.neighbors(i) {
                sources.push(i);
                targets.push(j);
            }
            offsets.push(targets.len());
        }
        let mut space = WalkSpace {
            n,
            simplices,
            offsets,
            sources,
            targets,
            reverse: Vec::new(),
        };
        space.reverse = (0..space.arc_count())
            .map(|a| {
                space
                    .arc(space.targets[a], space.sources[a])
                    .expect("lower adjacency is symmetric")
            })
            .collect();
        Ok(space)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `m_n`, the dimension of the walk's Hilbert space.
    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    /// All n-simplices, including isolated ones.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn index_of(&self, s: &Simplex) -> Result<usize> {
        self.simplices
            .binary_search(s)
            .map_err(|_| Error::UnknownSimplex(s.to_string()))
    }

    /// Like [`index_of`](Self::index_of) but rejects simplices that own no arcs.
    pub fn active_index_of(&self, s: &Simplex) -> Result<usize> {
        let i = self.index_of(s)?;
        if self.degree(i) == 0 {
            return Err(Error::IsolatedSimplex(s.to_string()));
        }
        Ok(i)
    }

    /// `|N^l(σ_i)|`.
    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn arcs_of(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.targets[self.arcs_of(i)]
    }

    /// Position of `|σ_i → σ_j⟩`, if the pair is lower adjacent.
    pub fn arc(&self, i: usize, j: usize) -> Option<usize> {
        let range = self.arcs_of(i);
        self.targets[range.clone()]
            .binary_search(&j)
            .ok()
            .map(|k| range.start + k)
    }

    pub fn source(&self, arc: usize) -> usize {
        self.sources[arc]
    }

    pub fn target(&self, arc: usize) -> usize {
        self.targets[arc]
    }

    /// Position of the reversed arc `|σ_j → σ_i⟩`.
    pub fn reverse(&self, arc: usize) -> usize {
        self.reverse[arc]
    }

    pub fn active(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.simplices.len()).filter(|&i| self.degree(i) > 0)
    }

    pub fn isolated(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.simplices.len()).filter(|&i| self.degree(i) == 0)
    }

    /// Distinct block sizes `|N^l|` present among active simplices.
    pub(crate) fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.active().map(|i| self.degree(i))
    }
}

pub fn build_walk_space(complex: &SimplicialComplex, n: usize) -> Result<WalkSpace> {
    WalkSpace::new(complex, n)
}
