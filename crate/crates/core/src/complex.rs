//! Oriented simplices, clique complexes and the integer operators built on
//! them: incidence (boundary) matrices, upper/lower adjacency, degrees and
//! lower neighborhoods.
//!
//! Every simplex is stored with its vertices in ascending order, and that
//! order is its orientation. Within a dimension simplices are sorted
//! lexicographically, and every matrix in this crate is laid out in that
//! order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use nalgebra::{DMatrix, Scalar};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A 1-indexed vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 {
            return Err(Error::invalid("vertex ids are 1-indexed; got 0"));
        }
        Ok(VertexId(id))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An oriented simplex with strictly ascending vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds the canonical simplex spanned by `vertices`, sorting them.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::invalid("a simplex needs at least one vertex"));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSimplex(w[0].get()));
        }
        Ok(Simplex { vertices })
    }

    /// Convenience constructor from raw labels.
    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        let vertices = ids
            .iter()
            .map(|&i| VertexId::new(i))
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vertices)
    }

    // Callers guarantee the input is already strictly ascending.
    fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn ids(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.get()).collect()
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// All `k`-faces in lexicographic order. Requires `k < dim`.
    pub fn faces(&self, k: usize) -> Result<Vec<Simplex>> {
        if k >= self.dim() {
            return Err(Error::invalid(format!(
                "face dimension {k} must be below simplex dimension {}",
                self.dim()
            )));
        }
        Ok(self
            .vertices
            .iter()
            .copied()
            .combinations(k + 1)
            .map(Simplex::from_sorted)
            .collect())
    }

    /// The codimension-1 face obtained by dropping the vertex at `position`.
    pub fn drop_vertex(&self, position: usize) -> Simplex {
        let mut vertices = self.vertices.clone();
        vertices.remove(position);
        Simplex::from_sorted(vertices)
    }

    /// `(k, σ_∼k)` pairs; the sign of the face in ∂σ is `(-1)^k`.
    pub fn boundary_faces(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let top = if self.dim() == 0 {
            0
        } else {
            self.vertices.len()
        };
        (0..top).map(move |k| (k, self.drop_vertex(k)))
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.len() < other.vertices.len()
            && self
                .vertices
                .iter()
                .all(|v| other.vertices.binary_search(v).is_ok())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vertices.iter().join(","))
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices.iter().map(|v| v.get()))
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<u32>::deserialize(deserializer)?;
        Simplex::from_ids(&ids).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjacency {
    /// Faces of a common (n+1)-simplex.
    Upper,
    /// Sharing a common (n-1)-face.
    Lower,
}

/// A finite simplicial complex, closed under faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    levels: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// Builds the smallest complex containing `simplices` (all faces are added).
    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.dim();
            if sets.len() <= d {
                sets.resize_with(d + 1, BTreeSet::new);
            }
            for (k, level) in sets.iter_mut().enumerate().take(d) {
                level.extend(s.faces(k).expect("k < dim"));
            }
            sets[d].insert(s);
        }
        Self::from_levels(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn from_levels(levels: Vec<Vec<Simplex>>) -> Self {
        let index = levels
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)))
            .collect();
        SimplicialComplex { levels, index }
    }

    /// Number of allocated dimensions (`max_dim + 1` for clique complexes);
    /// trailing levels may be empty.
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Highest dimension holding at least one simplex.
    pub fn top_dim(&self) -> Option<usize> {
        self.levels.iter().rposition(|l| !l.is_empty())
    }

    /// `N_n`; zero for dimensions beyond the complex.
    pub fn count(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, n: usize) -> &[Simplex] {
        self.levels.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Position of `s` in the canonical ordering of its dimension.
    pub fn position(&self, s: &Simplex) -> Result<usize> {
        self.index
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownSimplex(s.to_string()))
    }

    /// `B_n`: rows are (n-1)-simplices, columns n-simplices, entry `(-1)^k`
    /// at `(σ_∼k, σ)`. Valid for `1 <= n <= num_levels()`; the last one has no
    /// columns.
    pub fn boundary_matrix(&self, n: usize) -> Result<IncidenceMatrix> {
        if n == 0 || n > self.levels.len() {
            return Err(Error::invalid(format!(
                "boundary matrix B_{n} needs 1 <= n <= {}",
                self.levels.len()
            )));
        }
        let rows = self.count(n - 1);
        let columns = self
            .simplices(n)
            .iter()
            .map(|s| {
                s.boundary_faces()
                    .map(|(k, face)| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (self.index[&face], sign)
                    })
                    .collect()
            })
            .collect();
        Ok(IncidenceMatrix { n, rows, columns })
    }

    /// For every n-simplex, positions of the (n+1)-simplices having it as a face.
    pub fn cofaces(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count(n)];
        for (j, s) in self.simplices(n + 1).iter().enumerate() {
            for (_, face) in s.boundary_faces() {
                out[self.index[&face]].push(j);
            }
        }
        out
    }

    pub fn adjacency(&self, n: usize, flavor: Adjacency) -> Result<AdjacencyMatrix> {
        if n >= self.levels.len() {
            return Err(Error::invalid(format!(
                "dimension {n} is outside the complex"
            )));
        }
        let size = self.count(n);
        let mut sets = vec![BTreeSet::new(); size];
        match flavor {
            Adjacency::Upper => {
                for s in self.simplices(n + 1) {
                    let faces: Vec<usize> =
                        s.boundary_faces().map(|(_, f)| self.index[&f]).collect();
                    for (&a, &b) in faces.iter().tuple_combinations() {
                        sets[a].insert(b);
                        sets[b].insert(a);
                    }
                }
            }
            Adjacency::Lower => {
                if n == 0 {
                    return Err(Error::invalid("lower adjacency needs n >= 1"));
                }
                for members in self.cofaces(n - 1) {
                    for (&a, &b) in members.iter().tuple_combinations() {
                        sets[a].insert(b);
                        sets[b].insert(a);
                    }
                }
            }
        }
        Ok(AdjacencyMatrix {
            n,
            flavor,
            neighbors: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Upper degree counts cofaces; lower degree is `n + 1` for `n > 0`.
    pub fn degree(&self, s: &Simplex, flavor: Adjacency) -> Result<usize> {
        self.position(s)?;
        let n = s.dim();
        match flavor {
            Adjacency::Upper => Ok(self
                .simplices(n + 1)
                .iter()
                .filter(|c| s.is_face_of(c))
                .count()),
            Adjacency::Lower if n == 0 => Err(Error::invalid("lower degree needs n >= 1")),
            Adjacency::Lower => Ok(n + 1),
        }
    }

    /// `N^l(σ)`: every other n-simplex sharing an (n-1)-face with σ, in
    /// canonical order.
    pub fn lower_neighborhood(&self, s: &Simplex) -> Result<Vec<Simplex>> {
        self.position(s)?;
        let n = s.dim();
        if n == 0 {
            return Err(Error::invalid("lower neighborhood needs n >= 1"));
        }
        let mut out = BTreeSet::new();
        for (_, face) in s.boundary_faces() {
            for other in self.simplices(n) {
                if other != s && face.is_face_of(other) {
                    out.insert(other.clone());
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// `m_n = Σ_σ |N^l(σ)|`, the number of ordered lower-adjacent pairs.
    pub fn lower_pair_count(&self, n: usize) -> Result<usize> {
        Ok(self.adjacency(n, Adjacency::Lower)?.nnz())
    }
}

/// Builds the clique complex of a graph, keeping cliques of up to
/// `max_dim + 1` vertices.
pub fn clique_complex(edges: &[(VertexId, VertexId)], max_dim: usize) -> Result<SimplicialComplex> {
    clique_complex_with_vertices(&[], edges, max_dim)
}

/// Like [`clique_complex`], but also keeps `vertices` that touch no edge.
pub fn clique_complex_with_vertices(
    vertices: &[VertexId],
    edges: &[(VertexId, VertexId)],
    max_dim: usize,
) -> Result<SimplicialComplex> {
    if max_dim < 1 {
        return Err(Error::invalid("max_dim must be at least 1"));
    }
    let mut higher: HashMap<VertexId, BTreeSet<VertexId>> = HashMap::new();
    let mut all: BTreeSet<VertexId> = vertices.iter().copied().collect();
    for &(a, b) in edges {
        if a == b {
            return Err(Error::InvalidEdge(a.get(), b.get()));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        all.insert(lo);
        all.insert(hi);
        higher.entry(lo).or_default().insert(hi);
    }
    let empty = BTreeSet::new();
    let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];

    // Each clique is grown only through vertices above its current maximum,
    // so it is produced exactly once.
    fn extend(
        clique: &mut Vec<VertexId>,
        candidates: &[VertexId],
        higher: &HashMap<VertexId, BTreeSet<VertexId>>,
        empty: &BTreeSet<VertexId>,
        levels: &mut [Vec<Simplex>],
    ) {
        levels[clique.len() - 1].push(Simplex::from_sorted(clique.clone()));
        if clique.len() == levels.len() {
            return;
        }
        for (i, &c) in candidates.iter().enumerate() {
            let nbrs = higher.get(&c).unwrap_or(empty);
            let next: Vec<VertexId> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|v| nbrs.contains(v))
                .collect();
            clique.push(c);
            extend(clique, &next, higher, empty, levels);
            clique.pop();
        }
    }

    for &v in &all {
        let candidates: Vec<VertexId> = higher.get(&v).unwrap_or(&empty).iter().copied().collect();
        extend(&mut vec![v], &candidates, &higher, &empty, &mut levels);
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    Ok(SimplicialComplex::from_levels(levels))
}

/// Parses whitespace-separated vertex pairs, one per line; blank lines and
/// lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Vec<(VertexId, VertexId)>> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!(
                "expected two vertex ids, found {}",
                fields.len()
            )));
        }
        let mut ids = [VertexId(1); 2];
        for (slot, field) in ids.iter_mut().zip(&fields) {
            let raw: u32 = field
                .parse()
                .map_err(|_| parse_err(format!("`{field}` is not a positive integer")))?;
            *slot = VertexId::new(raw).map_err(|e| parse_err(e.to_string()))?;
        }
        edges.push((ids[0], ids[1]));
    }
    Ok(edges)
}

/// Sparse signed incidence matrix `B_n`, stored by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IncidenceMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.columns.len())
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn to_dense(&self) -> DMatrix<i64> {
        let mut m = DMatrix::zeros(self.rows, self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Applies ∂_n to an n-chain.
    pub fn boundary<C: Coefficient>(&self, chain: &ChainVector<C>) -> Result<ChainVector<C>> {
        if chain.n != self.n || chain.coefficients.len() != self.columns.len() {
            return Err(Error::invalid(format!(
                "chain of dimension {} and length {} does not match B_{} ({} columns)",
                chain.n,
                chain.coefficients.len(),
                self.n,
                self.columns.len()
            )));
        }
        let mut out = vec![C::zero(); self.rows];
        for (col, b) in self.columns.iter().zip(&chain.coefficients) {
            for &(i, sign) in col {
                if sign > 0 {
                    out[i] = out[i].clone() + b.clone();
                } else {
                    out[i] = out[i].clone() - b.clone();
                }
            }
        }
        Ok(ChainVector {
            n: self.n - 1,
            coefficients: out,
        })
    }
}

/// Symmetric 0/1 adjacency between n-simplices, stored as sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    flavor: Adjacency,
    neighbors: Vec<Vec<usize>>,
}

impl AdjacencyMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Adjacency {
        self.flavor
    }

    pub fn size(&self) -> usize {
        self.neighbors.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].binary_search(&j).is_ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    /// Number of nonzero entries, i.e. ordered adjacent pairs.
    pub fn nnz(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum()
    }

    pub fn to_dense<T: Scalar + Zero + One>(&self) -> DMatrix<T> {
        let n = self.size();
        let mut m = DMatrix::zeros(n, n);
        for (i, row) in self.neighbors.iter().enumerate() {
            for &j in row {
                m[(i, j)] = T::one();
            }
        }
        m
    }
}

/// Coefficients of an n-chain over the canonical n-simplex basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainVector<C> {
    n: usize,
    coefficients: Vec<C>,
}

impl<C: Coefficient> ChainVector<C> {
    pub fn new(complex: &SimplicialComplex, n: usize, coefficients: Vec<C>) -> Result<Self> {
        if coefficients.len() != complex.count(n) {
            return Err(Error::invalid(format!(
                "chain length {} differs from N_{n} = {}",
                coefficients.len(),
                complex.count(n)
            )));
        }
        Ok(ChainVector { n, coefficients })
    }

    pub fn zero(complex: &SimplicialComplex, n: usize) -> Self {
        ChainVector {
            n,
            coefficients: vec![C::zero(); complex.count(n)],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}
