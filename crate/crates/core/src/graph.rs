//! Crystal graphs as explicit node and edge lists, with DOT and JSON output.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::crystal::{crystal_on_sst, crystal_op, Dir, Half, Word};
use crate::error::{Error, Result};
use crate::jcrystal::{apply, check_guard, operator_labels};
use crate::tableaux::{Bipartition, Bitableau, Partition, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// `3/2` for `F̃_{3/2}`, `2` for `f̃_2`, `2'` for `f̃_{2'}`.
    pub label: String,
    pub primed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub kind: String,
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
}

pub fn word_label(w: &[i32]) -> String {
    let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

pub fn bitableau_label(t: &Bitableau) -> String {
    format!("{};{}", t.minus, t.plus)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl CrystalGraph {
    /// Graphviz source; `f̃_i` edges are solid, `f̃_{i'}` edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", dot_escape(&self.kind)).unwrap();
        writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        for (k, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{k} [label=\"{}\"];", dot_escape(n)).unwrap();
        }
        for e in &self.edges {
            let style = if e.primed { "dashed" } else { "solid" };
            writeln!(
                out,
                "  n{} -> n{} [label=\"{}\", style={style}];",
                e.from,
                e.to,
                dot_escape(&e.label)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Sources: nodes without incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_in[k]).collect()
    }
}

fn build<T, F>(kind: String, items: Vec<T>, label: impl Fn(&T) -> String, succ: F) -> Result<CrystalGraph>
where
    T: Eq + std::hash::Hash + Clone,
    F: Fn(&T) -> Result<Vec<(T, String, bool)>>,
{
    let index: HashMap<T, usize> = items.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (k, t) in items.iter().enumerate() {
        for (u, lab, primed) in succ(t)? {
            let to = *index
                .get(&u)
                .ok_or_else(|| Error::Internal(format!("edge {lab} leaves the node set at {}", label(t))))?;
            edges.push(Edge {
                from: k,
                to,
                label: lab,
                primed,
            });
        }
    }
    Ok(CrystalGraph {
        kind,
        nodes: items.iter().map(label).collect(),
        edges,
    })
}

fn words_guard(r: usize, d: usize, guard: u64) -> Result<()> {
    let n = (2 * r as u64 + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    check_guard("graph: words", n, guard)
}

/// The type `A_{2r}` crystal on words of length `d`.
pub fn crystal_graph_power(r: usize, d: usize, guard: u64) -> Result<CrystalGraph> {
    words_guard(r, d, guard)?;
    build(format!("B^{d} (type A, r={r})"), Word::all(r, d), |w| word_label(w), |w| {
        Ok(Half::all(r)
            .into_iter()
            .filter_map(|h| crystal_op(w, h, Dir::F).map(|t| (t, h.to_string(), false)))
            .collect())
    })
}

/// The type `A_{2r}` crystal on `SST(λ)` in letters `-r..=r`.
pub fn crystal_graph_sst(shape: &Partition, r: usize, guard: u64) -> Result<CrystalGraph> {
    let alphabet: Vec<i32> = (-(r as i32)..=r as i32).collect();
    let items = Tableau::enumerate_sst(shape, &alphabet);
    check_guard("graph: tableaux", items.len() as u64, guard)?;
    build(format!("SST{shape} (type A, r={r})"), items, |t| t.to_string(), |t| {
        let mut out = Vec::new();
        for h in Half::all(r) {
            if let Some(u) = crystal_on_sst(t, h, Dir::F)? {
                out.push((u, h.to_string(), false));
            }
        }
        Ok(out)
    })
}

fn j_succ(w: &[i32], r: usize) -> Vec<(Vec<i32>, String, bool)> {
    operator_labels(r)
        .into_iter()
        .filter_map(|op| {
            let lab = if op.1 { format!("{}'", op.0) } else { op.0.to_string() };
            apply(w, op, Dir::F).map(|t| (t, lab, op.1))
        })
        .collect()
}

/// The quasi-ȷ-crystal on words of length `d`, with the primed operators.
pub fn jcrystal_graph_power(r: usize, d: usize, guard: u64) -> Result<CrystalGraph> {
    words_guard(r, d, guard)?;
    build(format!("B^{d} (r={r})"), Word::all(r, d), |w| word_label(w), |w| Ok(j_succ(w, r)))
}

/// The ȷ-crystal on `SST(λ)`, embedded in words by the reading `R`.
pub fn jcrystal_graph_shape(shape: &Bipartition, guard: u64) -> Result<CrystalGraph> {
    let r = shape.rank();
    let items = Bitableau::enumerate_sst(shape);
    check_guard("graph: bitableaux", items.len() as u64, guard)?;
    let words: Vec<Vec<i32>> = items.iter().map(Bitableau::reading).collect();
    let g = build(format!("SST{shape} (r={r})"), words, |w| word_label(w), |w| Ok(j_succ(w, r)))?;
    Ok(CrystalGraph {
        nodes: items.iter().map(bitableau_label).collect(),
        ..g
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_representation_graph() {
        let g = jcrystal_graph_power(1, 1, 100).unwrap();
        assert_eq!(g.nodes, vec!["(-1)", "(0)", "(1)"]);
        // f̃_1: 0 -> -1
        assert_eq!(g.edges.len(), 1);
        assert_eq!((g.edges[0].from, g.edges[0].to), (1, 0));
        assert!(g.to_dot().contains("n1 -> n0 [label=\"1\", style=solid];"));
    }

    #[test]
    fn shape_graph_has_one_source() {
        for shape in Bipartition::all(3, 2) {
            let g = jcrystal_graph_shape(&shape, 10_000).unwrap();
            assert_eq!(g.sources().len(), 1, "{shape}");
        }
    }
}
