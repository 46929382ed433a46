//! Simplicial communities: exact lower/upper connectivity, the up/down
//! correspondence, simplicial modularity and quantum-walk detection.

use std::collections::{BTreeSet, HashMap, VecDeque};

use nalgebra::DMatrix;
use serde::Serialize;

use crate::complex::{Adjacency, AdjacencyMatrix, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::qwalk::{
    finite_time_average, long_time_average_spectral, Estimator, TransitionTable, UnitarySpectrum,
    UnitaryWalk, WalkSpace, DEFAULT_PHASE_TOLERANCE,
};
use crate::scalar::{LinalgReal, Real};

/// Disjoint, exhaustive assignment of the n-simplices of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommunityPartition {
    dim: usize,
    communities: Vec<Vec<Simplex>>,
    #[serde(skip)]
    labels: HashMap<Simplex, usize>,
}

impl CommunityPartition {
    /// Validates and canonicalizes `communities`: each is sorted, the order
    /// of communities is kept.
    pub fn new(
        complex: &SimplicialComplex,
        n: usize,
        communities: Vec<Vec<Simplex>>,
    ) -> Result<Self> {
        let mut labels = HashMap::new();
        let mut sorted = Vec::with_capacity(communities.len());
        for (c, mut members) in communities.into_iter().enumerate() {
            if members.is_empty() {
                return Err(Error::invalid(format!("community {c} is empty")));
            }
            members.sort();
            for s in &members {
                if s.dim() != n {
                    return Err(Error::invalid(format!("{s} is not a {n}-simplex")));
                }
                complex.position(s)?;
                if labels.insert(s.clone(), c).is_some() {
                    return Err(Error::invalid(format!(
                        "{s} appears in more than one community"
                    )));
                }
            }
            sorted.push(members);
        }
        if labels.len() != complex.count(n) {
            return Err(Error::invalid(format!(
                "partition covers {} of {} {n}-simplices",
                labels.len(),
                complex.count(n)
            )));
        }
        Ok(CommunityPartition {
            dim: n,
            communities: sorted,
            labels,
        })
    }

    fn from_index_groups(complex: &SimplicialComplex, n: usize, groups: Vec<Vec<usize>>) -> Self {
        let simplices = complex.simplices(n);
        let communities = groups
            .into_iter()
            .map(|g| g.into_iter().map(|i| simplices[i].clone()).collect())
            .collect();
        Self::new(complex, n, communities).expect("index groups form a partition")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn communities(&self) -> &[Vec<Simplex>] {
        &self.communities
    }

    pub fn len(&self) -> usize {
        self.communities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    pub fn label(&self, s: &Simplex) -> Option<usize> {
        self.labels.get(s).copied()
    }

    /// Compares the communities as a set of sets.
    pub fn same_communities(&self, other: &CommunityPartition) -> bool {
        let as_set = |p: &CommunityPartition| -> BTreeSet<Vec<Simplex>> {
            p.communities.iter().cloned().collect()
        };
        self.dim == other.dim && as_set(self) == as_set(other)
    }

    /// `W_n`: one row per n-simplex (canonical order), one column per
    /// community.
    pub fn membership_matrix<T: Real>(&self, complex: &SimplicialComplex) -> DMatrix<T> {
        let simplices = complex.simplices(self.dim);
        let mut w = DMatrix::from_element(simplices.len(), self.len(), T::zero());
        for (i, s) in simplices.iter().enumerate() {
            w[(i, self.labels[s])] = T::one();
        }
        w
    }
}

fn components(adjacency: &AdjacencyMatrix) -> Vec<Vec<usize>> {
    let size = adjacency.size();
    let mut seen = vec![false; size];
    let mut out = Vec::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut members = Vec::new();
        while let Some(i) = queue.pop_front() {
            members.push(i);
            for &j in adjacency.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Components of the lower-adjacency graph on n-simplices (`n >= 1`).
pub fn exact_down_communities(complex: &SimplicialComplex, n: usize) -> Result<CommunityPartition> {
    let adjacency = complex.adjacency(n, Adjacency::Lower)?;
    Ok(CommunityPartition::from_index_groups(
        complex,
        n,
        components(&adjacency),
    ))
}

/// Components of the upper-adjacency graph on n-simplices.
pub fn exact_up_communities(complex: &SimplicialComplex, n: usize) -> Result<CommunityPartition> {
    let adjacency = complex.adjacency(n, Adjacency::Upper)?;
    Ok(CommunityPartition::from_index_groups(
        complex,
        n,
        components(&adjacency),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub dim: usize,
    pub holds: bool,
    /// For each (n+1)-down community, the index of the n-up community equal
    /// to its set of n-faces, if any.
    pub mapping: Vec<Option<usize>>,
    pub down: CommunityPartition,
    pub up: CommunityPartition,
}

/// Checks that sending each (n+1)-down community to the set of n-faces of
/// its members is a bijection onto the non-singleton n-up communities.
pub fn verify_symmetry(complex: &SimplicialComplex, n: usize) -> Result<SymmetryReport> {
    let up = exact_up_communities(complex, n)?;
    let down = if complex.count(n + 1) > 0 {
        exact_down_communities(complex, n + 1)?
    } else {
        CommunityPartition {
            dim: n + 1,
            communities: Vec::new(),
            labels: HashMap::new(),
        }
    };
    let up_index: HashMap<&[Simplex], usize> = up
        .communities()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .map(|(i, c)| (c.as_slice(), i))
        .collect();

    let mapping: Vec<Option<usize>> = down
        .communities()
        .iter()
        .map(|members| {
            let faces: BTreeSet<Simplex> = members
                .iter()
                .flat_map(|s| s.faces(n).expect("n < n + 1"))
                .collect();
            let faces: Vec<Simplex> = faces.into_iter().collect();
            up_index.get(faces.as_slice()).copied()
        })
        .collect();
    let hit: BTreeSet<usize> = mapping.iter().flatten().copied().collect();
    let holds = mapping.iter().all(Option::is_some)
        && hit.len() == mapping.len()
        && hit.len() == up_index.len();
    Ok(SymmetryReport {
        dim: n,
        holds,
        mapping,
        down,
        up,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModularityReport<T> {
    pub q: T,
    /// `Σ_σ |N^l(σ)|`.
    pub m_n: usize,
    /// Per-community share of `q`, in partition order.
    pub contributions: Vec<T>,
}

/// `M_n(σ,σ') = A^l_n(σ,σ') − |N^l(σ)|·|N^l(σ')| / m_n`.
pub fn modularity_matrix<T: Real>(complex: &SimplicialComplex, n: usize) -> Result<DMatrix<T>> {
    let adjacency = complex.adjacency(n, Adjacency::Lower)?;
    let m = adjacency.nnz();
    if m == 0 {
        return Err(Error::NoAdjacency(n));
    }
    let m = T::from_count(m);
    let size = adjacency.size();
    Ok(DMatrix::from_fn(size, size, |i, j| {
        let a = if adjacency.get(i, j) {
            T::one()
        } else {
            T::zero()
        };
        let di = T::from_count(adjacency.row_sum(i));
        let dj = T::from_count(adjacency.row_sum(j));
        a - di * dj / m
    }))
}

/// `Q_n = Tr(W^T M_n W) / m_n`, split per community.
pub fn simplicial_modularity<T: Real>(
    complex: &SimplicialComplex,
    n: usize,
    partition: &CommunityPartition,
) -> Result<ModularityReport<T>> {
    if partition.dim() != n {
        return Err(Error::invalid(format!(
            "partition is over {}-simplices, not {n}-simplices",
            partition.dim()
        )));
    }
    let adjacency = complex.adjacency(n, Adjacency::Lower)?;
    let m_n = adjacency.nnz();
    if m_n == 0 {
        return Err(Error::NoAdjacency(n));
    }
    let m = T::from_count(m_n);
    let simplices = complex.simplices(n);
    let mut internal = vec![0usize; partition.len()];
    let mut degree_sum = vec![0usize; partition.len()];
    for (i, s) in simplices.iter().enumerate() {
        let c = partition.labels[s];
        degree_sum[c] += adjacency.row_sum(i);
        internal[c] += adjacency
            .neighbors(i)
            .iter()
            .filter(|&&j| partition.labels[&simplices[j]] == c)
            .count();
    }
    let contributions: Vec<T> = internal
        .iter()
        .zip(&degree_sum)
        .map(|(&e, &d)| {
            let d = T::from_count(d);
            (T::from_count(e) - d * d / m) / m
        })
        .collect();
    let q = contributions.iter().copied().sum();
    Ok(ModularityReport {
        q,
        m_n,
        contributions,
    })
}

/// Membership rule `q(σx→σy) > 1/m_n` or its non-strict variant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Threshold {
    #[default]
    Strict,
    AtLeast,
}

impl Threshold {
    fn admits<T: Real>(self, q: T, cutoff: T) -> bool {
        match self {
            Threshold::Strict => q > cutoff,
            Threshold::AtLeast => q >= cutoff,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DetectOptions {
    pub estimator: Estimator,
    pub threshold: Threshold,
    /// Only used by [`Estimator::Spectral`].
    pub phase_tolerance: f64,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            estimator: Estimator::default(),
            threshold: Threshold::Strict,
            phase_tolerance: DEFAULT_PHASE_TOLERANCE,
        }
    }
}

/// One pass of the detection loop.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DetectionRound<T> {
    pub start: Simplex,
    pub members: Vec<Simplex>,
    /// `None` when the start simplex is isolated and no walk was run.
    pub table: Option<TransitionTable<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Detection<T> {
    pub partition: CommunityPartition,
    pub rounds: Vec<DetectionRound<T>>,
}

/// Quantum-walk community detection on n-simplices.
///
/// Each round starts from the unassigned simplex with the largest lower
/// neighborhood (ties by canonical order), estimates `q(σx→σy)` for the
/// unassigned targets and takes those passing the `1/m_n` threshold. The
/// start simplex always joins its own community; isolated simplices end up
/// as singletons. Assigned simplices are never revisited.
pub fn detect_communities<T: LinalgReal>(
    complex: &SimplicialComplex,
    n: usize,
    options: &DetectOptions,
) -> Result<Detection<T>> {
    let space = WalkSpace::new(complex, n)?;
    let m_n = space.arc_count();
    let walk = UnitaryWalk::<T>::new(space);
    let spectrum = match options.estimator {
        Estimator::Spectral if m_n > 0 => Some(UnitarySpectrum::compute(
            &walk,
            T::from_f64_lossy(options.phase_tolerance),
        )?),
        _ => None,
    };
    let space = walk.space();
    let cutoff = if m_n > 0 {
        T::one() / T::from_count(m_n)
    } else {
        T::zero()
    };

    let mut assigned = vec![false; space.simplices().len()];
    let mut remaining = assigned.len();
    let mut rounds = Vec::new();
    while remaining > 0 {
        // max_by_key keeps the last maximum; iterate in reverse so ties go
        // to the canonically smallest simplex.
        let start = (0..assigned.len())
            .rev()
            .filter(|&i| !assigned[i])
            .max_by_key(|&i| space.degree(i))
            .expect("unassigned simplex exists");
        let start_simplex = space.simplex(start).clone();
        let mut members = vec![start];
        let table = if space.degree(start) == 0 {
            None
        } else {
            let table = match (options.estimator, &spectrum) {
                (Estimator::FiniteTime { time_steps }, _) => {
                    finite_time_average(&walk, &start_simplex, time_steps)?
                }
                (Estimator::Spectral, Some(spectrum)) => {
                    long_time_average_spectral(&walk, spectrum, &start_simplex)?
                }
                (Estimator::Spectral, None) => unreachable!("spectrum exists when m_n > 0"),
            };
            for (target, q) in &table.values {
                let y = space.index_of(target)?;
                if y != start && !assigned[y] && options.threshold.admits(*q, cutoff) {
                    members.push(y);
                }
            }
            Some(table)
        };
        members.sort_unstable();
        for &i in &members {
            assigned[i] = true;
        }
        remaining -= members.len();
        rounds.push(DetectionRound {
            start: start_simplex,
            members: members.iter().map(|&i| space.simplex(i).clone()).collect(),
            table,
        });
    }
    let communities = rounds.iter().map(|r| r.members.clone()).collect();
    let partition = CommunityPartition::new(complex, n, communities)?;
    Ok(Detection { partition, rounds })
}
