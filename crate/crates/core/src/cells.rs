//! Left cells of `W_d` two ways, and the matching of ȷ-crystal components of
//! `B^{⊗d}` with left cells through `u = f_u w_u`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::hecke::HeckeAlgebra;
use crate::jcrystal::{check_guard, decompose_tensor_power};
use crate::tableaux::{signed_rs, Bitableau};
use crate::weyl::WeylGroup;

/// A left cell with its common recording bitableau.
#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub elements: Vec<Vec<i32>>,
    pub recording: Bitableau,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellsReport {
    pub d: usize,
    pub cells: Vec<Cell>,
    /// The partition by `->_L` closure equals the partition by `(Q⁻, Q⁺)`.
    pub agree: bool,
}

/// Group-element indices partitioned by the recording bitableau `(Q⁻, Q⁺)`.
pub fn recording_classes(group: &WeylGroup) -> BTreeMap<Bitableau, Vec<usize>> {
    let mut out: BTreeMap<Bitableau, Vec<usize>> = BTreeMap::new();
    for (k, w) in group.elements().iter().enumerate() {
        out.entry(signed_rs(w).1).or_default().push(k);
    }
    out
}

fn as_partition(blocks: impl IntoIterator<Item = Vec<usize>>) -> BTreeSet<Vec<usize>> {
    blocks
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect()
}

/// Left cells of `W_d` from the KL preorder, checked against the recording
/// bitableaux of signed Robinson–Schensted.
pub fn left_cells(d: usize, guard: u64) -> Result<CellsReport> {
    let order = (1..=d as u64).product::<u64>() << d;
    check_guard("cells: |W_d|", order, guard)?;
    let alg = HeckeAlgebra::new(d);
    let kl = alg.left_cells();
    let rs = recording_classes(alg.group());
    let agree = as_partition(kl.iter().cloned()) == as_partition(rs.values().cloned());
    let cells = kl
        .iter()
        .map(|c| Cell {
            elements: c.iter().map(|&w| alg.group().elem(w).window()).collect(),
            recording: signed_rs(alg.group().elem(c[0])).1,
        })
        .collect();
    Ok(CellsReport { d, cells, agree })
}

/// `u = f_u · w_u` with `0 <= f_u(1) <= ... <= f_u(d)` and `w_u` of maximal
/// length; returns `(f_u, index of w_u)`.
pub fn dominant_factorization(group: &WeylGroup, u: &[i32]) -> (Vec<i32>, usize) {
    let mut f: Vec<i32> = u.iter().map(|x| x.abs()).collect();
    f.sort_unstable();
    let best = (0..group.order())
        .filter(|&k| group.elem(k).act(&f) == u)
        .max_by_key(|&k| group.length(k))
        .expect("the sorted word lies in the orbit");
    (f, best)
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentCellReport {
    pub r: usize,
    pub d: usize,
    pub components: usize,
    /// Components of the ȷ-crystal = classes of `u` by the left cell of `w_u`.
    pub match_kl: bool,
    /// Components of the ȷ-crystal = classes of `u` by `(Q⁻(w_u), Q⁺(w_u))`.
    pub match_recording: bool,
}

/// Compares the components of `B^{⊗d}` with the sets `{u : w_u ∈ X}` for left
/// cells `X`, and with the fibres of `u ↦ (Q⁻(w_u), Q⁺(w_u))`.
pub fn components_vs_cells(r: usize, d: usize, guard: u64) -> Result<ComponentCellReport> {
    let dec = decompose_tensor_power(r, d, guard)?;
    let alg = HeckeAlgebra::new(d);
    let group = alg.group();
    let mut cell_of = vec![0; group.order()];
    for (c, cell) in alg.left_cells().iter().enumerate() {
        for &w in cell {
            cell_of[w] = c;
        }
    }
    let comps: BTreeSet<BTreeSet<Vec<i32>>> = dec
        .components
        .iter()
        .map(|c| c.members.iter().cloned().collect())
        .collect();
    let mut by_cell: BTreeMap<usize, BTreeSet<Vec<i32>>> = BTreeMap::new();
    let mut by_q: BTreeMap<Bitableau, BTreeSet<Vec<i32>>> = BTreeMap::new();
    for c in &dec.components {
        for u in &c.members {
            let (_, w) = dominant_factorization(group, u);
            by_cell.entry(cell_of[w]).or_default().insert(u.clone());
            by_q.entry(signed_rs(group.elem(w)).1).or_default().insert(u.clone());
        }
    }
    Ok(ComponentCellReport {
        r,
        d,
        components: comps.len(),
        match_kl: by_cell.into_values().collect::<BTreeSet<_>>() == comps,
        match_recording: by_q.into_values().collect::<BTreeSet<_>>() == comps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_cells() {
        let rep = left_cells(1, 1000).unwrap();
        assert!(rep.agree);
        assert_eq!(rep.cells.len(), 2);
    }

    #[test]
    fn factorization_is_maximal() {
        let g = WeylGroup::new(2);
        let (f, w) = dominant_factorization(&g, &[-1, 0]);
        assert_eq!(f, vec![0, 1]);
        assert_eq!(g.elem(w).act(&f), vec![-1, 0]);
        // s_0 fixes the 0, so the longer of the two preimages is chosen
        assert_eq!(g.length(w), 3);
    }
}
