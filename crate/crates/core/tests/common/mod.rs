#![allow(dead_code)]

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use simplex_walk::{
    clique_complex, parse_edge_list, Simplex, SimplicialComplex, VertexId, KARATE_EDGE_LIST,
};

pub fn edges(pairs: &[(u32, u32)]) -> Vec<(VertexId, VertexId)> {
    pairs
        .iter()
        .map(|&(a, b)| (VertexId::new(a).unwrap(), VertexId::new(b).unwrap()))
        .collect()
}

pub fn complex(pairs: &[(u32, u32)], max_dim: usize) -> SimplicialComplex {
    clique_complex(&edges(pairs), max_dim).unwrap()
}

pub fn s(ids: &[u32]) -> Simplex {
    Simplex::from_ids(ids).unwrap()
}

pub fn karate() -> SimplicialComplex {
    clique_complex(&parse_edge_list(KARATE_EDGE_LIST).unwrap(), 4).unwrap()
}

pub const TRIANGLE: &[(u32, u32)] = &[(1, 2), (1, 3), (2, 3)];
pub const PATH: &[(u32, u32)] = &[(1, 2), (2, 3)];
pub const BOWTIE: &[(u32, u32)] = &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)];
pub const STAR: &[(u32, u32)] = &[(1, 2), (1, 3), (1, 4)];
pub const SQUARE: &[(u32, u32)] = &[(1, 2), (2, 3), (3, 4), (1, 4)];
pub const K4: &[(u32, u32)] = &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
pub const DIAMOND: &[(u32, u32)] = &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)];
pub const TWO_EDGES: &[(u32, u32)] = &[(1, 2), (3, 4)];
pub const TAILED_TRIANGLE: &[(u32, u32)] = &[(1, 2), (1, 3), (2, 3), (3, 4)];

/// Toy complexes: clique complexes at several truncations plus a hollow
/// triangle.
pub fn toy_fixtures() -> Vec<(&'static str, SimplicialComplex)> {
    let mut out = Vec::new();
    for (name, pairs) in [
        ("triangle", TRIANGLE),
        ("path", PATH),
        ("bowtie", BOWTIE),
        ("star", STAR),
        ("square", SQUARE),
        ("k4", K4),
        ("diamond", DIAMOND),
        ("two_edges", TWO_EDGES),
        ("tailed_triangle", TAILED_TRIANGLE),
    ] {
        out.push((name, complex(pairs, 3)));
    }
    out.push(("hollow_triangle", complex(TRIANGLE, 1)));
    out
}

/// Random simple graphs on up to `max_vertices` vertices.
pub fn arb_graph(max_vertices: u32) -> impl Strategy<Value = Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (1..=max_vertices)
        .flat_map(|a| (a + 1..=max_vertices).map(move |b| (a, b)))
        .collect();
    let len = pairs.len();
    proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
        pairs
            .iter()
            .zip(mask)
            .filter(|(_, keep)| *keep)
            .map(|(p, _)| *p)
            .collect()
    })
}

/// Lower adjacency straight from the definition: distinct n-simplices whose
/// vertex sets share exactly n vertices.
pub fn naive_lower_neighbors(simplices: &[Simplex]) -> Vec<Vec<usize>> {
    let n = simplices.first().map_or(0, Simplex::dim);
    simplices
        .iter()
        .map(|a| {
            simplices
                .iter()
                .enumerate()
                .filter(|(_, b)| {
                    *b != a && a.ids().iter().filter(|v| b.ids().contains(v)).count() == n
                })
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Dense reference walk built directly from the arc list with `exp`.
pub struct DenseWalk {
    pub simplices: Vec<Simplex>,
    pub neighbors: Vec<Vec<usize>>,
    pub arcs: BTreeMap<(usize, usize), usize>,
    pub u: DMatrix<Complex64>,
}

impl DenseWalk {
    pub fn new(complex: &SimplicialComplex, n: usize) -> Self {
        let simplices = complex.simplices(n).to_vec();
        let neighbors = naive_lower_neighbors(&simplices);
        let mut arcs = BTreeMap::new();
        for (i, nb) in neighbors.iter().enumerate() {
            for &j in nb {
                let k = arcs.len();
                arcs.insert((i, j), k);
            }
        }
        let m = arcs.len();
        let mut coin = DMatrix::from_element(m, m, Complex64::new(0.0, 0.0));
        for (i, nb) in neighbors.iter().enumerate() {
            let d = nb.len() as f64;
            for (alpha, &ja) in nb.iter().enumerate() {
                for (beta, &jb) in nb.iter().enumerate() {
                    let angle = std::f64::consts::TAU * (alpha * beta) as f64 / d;
                    coin[(arcs[&(i, jb)], arcs[&(i, ja)])] =
                        Complex64::from_polar(1.0 / d.sqrt(), angle);
                }
            }
        }
        let mut shift = DMatrix::from_element(m, m, Complex64::new(0.0, 0.0));
        for (&(i, j), &a) in &arcs {
            shift[(arcs[&(j, i)], a)] = Complex64::new(1.0, 0.0);
        }
        DenseWalk {
            simplices,
            neighbors,
            arcs,
            u: shift * coin,
        }
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    /// `p(σx→σy; t)` from an explicit matrix power.
    pub fn probability(&self, power: &DMatrix<Complex64>, x: usize, y: usize) -> f64 {
        let mut total = 0.0;
        for &w in &self.neighbors[y] {
            for &v in &self.neighbors[x] {
                total += power[(self.arcs[&(y, w)], self.arcs[&(x, v)])].norm_sqr();
            }
        }
        total / (self.neighbors[x].len() * self.neighbors[y].len()) as f64
    }

    /// `q̃_T(σx→·)` by repeated dense multiplication.
    pub fn finite_average(&self, x: usize, time_steps: usize) -> Vec<f64> {
        let mut power = DMatrix::identity(self.m(), self.m());
        let mut acc = vec![0.0; self.simplices.len()];
        for _ in 0..time_steps {
            power = &self.u * power;
            for (y, a) in acc.iter_mut().enumerate() {
                if !self.neighbors[y].is_empty() {
                    *a += self.probability(&power, x, y);
                }
            }
        }
        acc.iter().map(|a| a / time_steps as f64).collect()
    }
}

/// Union-find over index pairs.
pub struct UnionFind(Vec<usize>);

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Groups as sorted index lists, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.0.len() {
            let r = self.find(i);
            by_root.entry(r).or_default().push(i);
        }
        let mut groups: Vec<_> = by_root.into_values().collect();
        groups.sort();
        groups
    }
}

/// Karate partitions: two edge communities, four triangle communities, the
/// tetrahedra split into a cluster and two singletons, and the lone pair of
/// 4-simplices.
pub fn karate_edge_partition(k: &SimplicialComplex) -> Vec<Vec<Simplex>> {
    let hi = simplex_walk::KARATE_MR_HI_FACTION;
    let extra = [(1, 32), (2, 31), (3, 10), (3, 28), (3, 29)];
    let (first, second): (Vec<Simplex>, Vec<Simplex>) =
        k.simplices(1).iter().cloned().partition(|e| {
            let v = e.ids();
            (hi.contains(&v[0]) && hi.contains(&v[1])) || extra.contains(&(v[0], v[1]))
        });
    vec![first, second]
}

pub fn karate_triangle_partition() -> Vec<Vec<Simplex>> {
    let groups: [&[[u32; 3]]; 4] = [
        &[
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 8],
            [1, 2, 14],
            [1, 2, 18],
            [1, 2, 20],
            [1, 2, 22],
            [1, 3, 4],
            [1, 3, 8],
            [1, 3, 9],
            [1, 3, 14],
            [1, 4, 8],
            [1, 4, 13],
            [1, 4, 14],
            [2, 3, 4],
            [2, 3, 8],
            [2, 3, 14],
            [2, 4, 8],
            [2, 4, 14],
            [3, 4, 8],
            [3, 4, 14],
        ],
        &[
            [3, 9, 33],
            [9, 31, 33],
            [9, 31, 34],
            [9, 33, 34],
            [15, 33, 34],
            [16, 33, 34],
            [19, 33, 34],
            [21, 33, 34],
            [23, 33, 34],
            [24, 28, 34],
            [24, 30, 33],
            [24, 30, 34],
            [24, 33, 34],
            [27, 30, 34],
            [29, 32, 34],
            [30, 33, 34],
            [31, 33, 34],
            [32, 33, 34],
        ],
        &[[1, 5, 7], [1, 5, 11], [1, 6, 7], [1, 6, 11], [6, 7, 17]],
        &[[25, 26, 32]],
    ];
    groups
        .iter()
        .map(|g| g.iter().map(|t| s(t)).collect())
        .collect()
}

pub fn karate_tetrahedron_partition(k: &SimplicialComplex) -> Vec<Vec<Simplex>> {
    let lone = [s(&[9, 31, 33, 34]), s(&[24, 30, 33, 34])];
    let cluster: Vec<Simplex> = k
        .simplices(3)
        .iter()
        .filter(|t| !lone.contains(t))
        .cloned()
        .collect();
    vec![cluster, vec![lone[0].clone()], vec![lone[1].clone()]]
}
