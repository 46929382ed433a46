use std::fmt::Write;

use serde::Serialize;
use simplex_walk::{CommunityPartition, Simplex, SimplicialComplex};

/// Rounds to 12 significant digits so repeated runs print identical text.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn csv_simplex(s: &Simplex) -> String {
    let ids: Vec<String> = s.ids().iter().map(u32::to_string).collect();
    format!("\"{}\"", ids.join(","))
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

fn color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

/// Graphviz rendering of the 1-skeleton. Edge communities color edges, and
/// vertices whose edges all share one community; higher dimensions are
/// listed as a comment table.
pub fn dot(complex: &SimplicialComplex, partition: &CommunityPartition) -> String {
    let mut out = String::new();
    let n = partition.dim();
    writeln!(out, "graph communities {{").unwrap();
    writeln!(out, "  // dim {n}, {} communities", partition.len()).unwrap();
    if n != 1 {
        for (c, members) in partition.communities().iter().enumerate() {
            let listed: Vec<String> = members.iter().map(Simplex::to_string).collect();
            writeln!(
                out,
                "  // community {c} [{}]: {}",
                color(c),
                listed.join(" ")
            )
            .unwrap();
        }
    }
    writeln!(out, "  node [shape=circle, style=filled, fillcolor=white];").unwrap();
    for v in complex.simplices(0) {
        let vertex = v.ids()[0];
        let fill = if n == 1 {
            let mut labels = complex
                .simplices(1)
                .iter()
                .filter(|e| v.is_face_of(e))
                .filter_map(|e| partition.label(e));
            match labels.next() {
                Some(first) if labels.all(|l| l == first) => Some(first),
                _ => None,
            }
        } else {
            None
        };
        match fill {
            Some(c) => writeln!(out, "  {vertex} [fillcolor=\"{}\"];", color(c)).unwrap(),
            None => writeln!(out, "  {vertex};").unwrap(),
        }
    }
    for e in complex.simplices(1) {
        let ids = e.ids();
        match partition.label(e).filter(|_| n == 1) {
            Some(c) => writeln!(
                out,
                "  {} -- {} [color=\"{}\", community={c}];",
                ids[0],
                ids[1],
                color(c)
            )
            .unwrap(),
            None => writeln!(out, "  {} -- {};", ids[0], ids[1]).unwrap(),
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
