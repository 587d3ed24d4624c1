//! The quasi-ȷ-crystal structure on words and its tensor product rule.
//!
//! For `i >= 1` the reduced word `s_i` is built from the ordinary brackets:
//! `s_1` is the reversal of `s_{-½}`; for `i >= 2` it is the concatenation of
//! the reversal of `s_{-(i-½)}` with `s_{i-½}`, after cancelling adjacent
//! pairs `(-(i-1), i)`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::crystal::{self, crystal_op, reduce_half, Dir, Half, Word};
use crate::error::{Error, Result};
use crate::tableaux::{Bipartition, Bitableau, Partition};

/// The reduced word `s_i` as `(position, letter)` pairs.
pub fn reduce_int(word: &[i32], i: usize) -> Vec<(usize, i32)> {
    let i = i as i32;
    if i == 1 {
        let mut s = reduce_half(word, Half(0));
        s.reverse();
        return s;
    }
    let mut a = reduce_half(word, Half(-(i - 1)));
    a.reverse();
    let mut stack: Vec<(usize, i32)> = Vec::new();
    for x in a.into_iter().chain(reduce_half(word, Half(i))) {
        if x.1 == i && stack.last().is_some_and(|t| t.1 == -(i - 1)) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// `ẽ_i` or `f̃_i` for `i >= 1`; `None` stands for zero.
pub fn jop(word: &[i32], i: usize, dir: Dir) -> Option<Vec<i32>> {
    let s = reduce_int(word, i);
    let ii = i as i32;
    let rightmost = |l: i32| s.iter().rev().find(|x| x.1 == l).map(|x| x.0);
    let leftmost = |l: i32| s.iter().find(|x| x.1 == l).map(|x| x.0);
    let (pos, new) = if i == 1 {
        match dir {
            Dir::E => (rightmost(-1)?, 0),
            Dir::F => (leftmost(0)?, -1),
        }
    } else {
        match dir {
            Dir::E => match rightmost(ii) {
                Some(k) => (k, ii - 1),
                None => (rightmost(-ii)?, -(ii - 1)),
            },
            Dir::F => match leftmost(-(ii - 1)) {
                Some(k) => (k, -ii),
                None => (leftmost(ii - 1)?, ii),
            },
        }
    };
    let mut out = word.to_vec();
    out[pos] = new;
    Some(out)
}

fn string_len(word: &[i32], step: impl Fn(&[i32]) -> Option<Vec<i32>>) -> usize {
    let mut n = 0;
    let mut cur = word.to_vec();
    while let Some(next) = step(&cur) {
        cur = next;
        n += 1;
    }
    n
}

/// `ε_i(b) = max{n : ẽ_i^n b != 0}`.
pub fn jepsilon(word: &[i32], i: usize) -> usize {
    string_len(word, |w| jop(w, i, Dir::E))
}

/// `φ_i(b) = max{n : f̃_i^n b != 0}`.
pub fn jphi(word: &[i32], i: usize) -> usize {
    string_len(word, |w| jop(w, i, Dir::F))
}

/// `ẽ_{i'}` (`i >= 2`): `Ẽ_{i-½}`, allowed only when `ẽ_j` vanishes for
/// `j < i` and `Ẽ_{j-½}` vanishes for `2 <= j < i`.
pub fn jop_primed(word: &[i32], i: usize, dir: Dir) -> Option<Vec<i32>> {
    assert!(i >= 2, "primed operators exist for i >= 2");
    match dir {
        Dir::E => {
            let gate = (1..i).all(|j| jop(word, j, Dir::E).is_none())
                && (2..i).all(|j| crystal_op(word, Half(j as i32), Dir::E).is_none());
            if gate {
                crystal_op(word, Half(i as i32), Dir::E)
            } else {
                None
            }
        }
        Dir::F => {
            let t = crystal_op(word, Half(i as i32), Dir::F)?;
            (jop_primed(&t, i, Dir::E).as_deref() == Some(word)).then_some(t)
        }
    }
}

/// All operators of the quasi-ȷ-crystal at rank `r`, as `(i, primed)`.
pub fn operator_labels(r: usize) -> Vec<(usize, bool)> {
    (1..=r)
        .map(|i| (i, false))
        .chain((2..=r).map(|i| (i, true)))
        .collect()
}

pub fn apply(word: &[i32], (i, primed): (usize, bool), dir: Dir) -> Option<Vec<i32>> {
    if primed {
        jop_primed(word, i, dir)
    } else {
        jop(word, i, dir)
    }
}

/// Which tensor factor an operator acts on, by the tensor product rule.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Placement {
    /// The quasi-ȷ-crystal operator acts on the left factor.
    Left,
    /// The ordinary crystal operator acts on the right factor.
    Right(Half, Dir),
}

/// The tensor product rule for `b ⊗ b'`: `b` is an element of a
/// quasi-ȷ-crystal (here a word), `b'` of an ordinary crystal.
pub fn tensor_rule(left: &[i32], right: &[i32], i: usize, dir: Dir) -> Placement {
    let ep = jepsilon(left, i) as i64;
    if i == 1 {
        let em = crystal::epsilon(right, Half(0)) as i64;
        return match dir {
            Dir::F if ep < em => Placement::Right(Half(0), Dir::E),
            Dir::E if ep <= em => Placement::Right(Half(0), Dir::F),
            _ => Placement::Left,
        };
    }
    let ii = i as i32;
    let (hp, hm) = (Half(ii), Half(-(ii - 1)));
    let ph = jphi(left, i) as i64;
    let e1 = crystal::epsilon(right, hp) as i64;
    let em = crystal::epsilon(right, hm) as i64;
    match dir {
        Dir::F => {
            if e1 < ph {
                if ep < em {
                    Placement::Right(hm, Dir::E)
                } else {
                    Placement::Left
                }
            } else if ep + e1 - ph < em {
                Placement::Right(hm, Dir::E)
            } else {
                Placement::Right(hp, Dir::F)
            }
        }
        Dir::E => {
            if e1 <= ph {
                if ep <= em {
                    Placement::Right(hm, Dir::F)
                } else {
                    Placement::Left
                }
            } else if ep + e1 - ph <= em {
                Placement::Right(hm, Dir::F)
            } else {
                Placement::Right(hp, Dir::E)
            }
        }
    }
}

/// Evaluates an operator on `left ++ right` through [`tensor_rule`].
pub fn tensor_rule_eval(left: &[i32], right: &[i32], i: usize, dir: Dir) -> Option<Vec<i32>> {
    let (l, r) = match tensor_rule(left, right, i, dir) {
        Placement::Left => (jop(left, i, dir)?, right.to_vec()),
        Placement::Right(h, d) => (left.to_vec(), crystal_op(right, h, d)?),
    };
    let mut out = l;
    out.extend(r);
    Some(out)
}

/// Whether `s` is a Yamanouchi biword: on every suffix `#0 >= #(-1)` and
/// `#(-(j-1)) >= #(-j)`, on every prefix `#(j-1) >= #j` for `2 <= j <= r`.
pub fn is_yamanouchi_biword(s: &[i32], r: usize) -> bool {
    let r = r as i32;
    let idx = |x: i32| (x + r) as usize;
    let width = (2 * r + 1) as usize;
    let mut suffix = vec![0i64; width];
    for &x in s.iter().rev() {
        suffix[idx(x)] += 1;
        if (1..=r).any(|j| suffix[idx(-(j - 1))] < suffix[idx(-j)]) {
            return false;
        }
    }
    let mut prefix = vec![0i64; width];
    for &x in s {
        prefix[idx(x)] += 1;
        if (2..=r).any(|j| prefix[idx(j - 1)] < prefix[idx(j)]) {
            return false;
        }
    }
    true
}

/// Letter counts `λ_i = #{k : s_k = i}` as a bipartition.
pub fn letter_shape(s: &[i32], r: usize) -> Result<Bipartition> {
    let count = |x: i32| s.iter().filter(|&&y| y == x).count() as u32;
    Bipartition::new(
        Partition::new((0..=r as i32).map(|k| count(-k)).collect())?,
        Partition::new((1..=r as i32).map(count).collect())?,
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub sources: Vec<Vec<i32>>,
    pub shape: Bipartition,
    pub size: usize,
    #[serde(skip)]
    pub members: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeSummary {
    pub shape: Bipartition,
    pub multiplicity: usize,
    pub component_size: usize,
    pub sst_count: usize,
    pub st_count: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub r: usize,
    pub d: usize,
    pub dimension: usize,
    pub components: Vec<Component>,
    pub shapes: Vec<ShapeSummary>,
}

pub fn check_guard(what: &str, needed: u64, guard: u64) -> Result<()> {
    if needed > guard {
        return Err(Error::SizeLimit {
            what: what.to_string(),
            needed,
            guard,
        });
    }
    Ok(())
}

/// Connected components of the quasi-ȷ-crystal on all words of length `d`.
pub fn decompose_tensor_power(r: usize, d: usize, guard: u64) -> Result<Decomposition> {
    if r == 0 {
        return Err(Error::Invalid("rank must be at least 1".into()));
    }
    let dim = (2 * r as u64 + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    check_guard("tensor power", dim, guard)?;
    let words = Word::all(r, d);
    let index: HashMap<&[i32], usize> =
        words.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let ops = operator_labels(r);
    let mut sources = Vec::new();
    for (k, w) in words.iter().enumerate() {
        let mut is_source = true;
        for &op in &ops {
            if let Some(t) = apply(w, op, Dir::F) {
                let (a, b) = (find(&mut parent, k), find(&mut parent, index[t.as_slice()]));
                parent[a] = b;
            }
            if let Some(t) = apply(w, op, Dir::E) {
                is_source = false;
                let (a, b) = (find(&mut parent, k), find(&mut parent, index[t.as_slice()]));
                parent[a] = b;
            }
        }
        if is_source {
            sources.push(k);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..words.len() {
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(k);
    }
    let mut components = Vec::new();
    for (root, members) in groups {
        let srcs: Vec<Vec<i32>> = sources
            .iter()
            .filter(|&&s| find(&mut parent, s) == root)
            .map(|&s| words[s].clone())
            .collect();
        let first = srcs
            .first()
            .ok_or_else(|| Error::Internal("component without a source".into()))?;
        components.push(Component {
            shape: letter_shape(first, r)?,
            sources: srcs,
            size: members.len(),
            members: members.iter().map(|&k| words[k].clone()).collect(),
        });
    }
    components.sort_by(|a, b| (&a.shape, &a.sources).cmp(&(&b.shape, &b.sources)));
    let mut shapes: BTreeMap<Bipartition, (usize, usize)> = BTreeMap::new();
    for c in &components {
        let e = shapes.entry(c.shape.clone()).or_insert((0, c.size));
        e.0 += 1;
    }
    let shapes = shapes
        .into_iter()
        .map(|(shape, (multiplicity, component_size))| ShapeSummary {
            sst_count: Bitableau::enumerate_sst(&shape).len(),
            st_count: shape.count_standard(),
            shape,
            multiplicity,
            component_size,
        })
        .collect();
    Ok(Decomposition {
        r,
        d,
        dimension: words.len(),
        components,
        shapes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: [i32; 15] = [-4, -3, -3, -1, -2, 0, 0, -1, -4, 4, 2, 2, 1, 4, 3];

    fn letters(v: Vec<(usize, i32)>) -> Vec<i32> {
        v.into_iter().map(|(_, x)| x).collect()
    }

    #[test]
    fn golden_reductions() {
        assert_eq!(letters(reduce_int(&GOLDEN, 4)), vec![-4, 4, 3]);
        assert_eq!(letters(reduce_int(&GOLDEN, 1)), vec![-1, 0]);
    }

    #[test]
    fn rank_one_vector_rep() {
        assert_eq!(jop(&[0], 1, Dir::F), Some(vec![-1]));
        assert_eq!(jop(&[-1], 1, Dir::E), Some(vec![0]));
        assert_eq!(jop(&[1], 1, Dir::E), None);
        assert_eq!(jop(&[1], 1, Dir::F), None);
        assert!(is_yamanouchi_biword(&[0], 1));
        assert!(is_yamanouchi_biword(&[1], 1));
        assert!(!is_yamanouchi_biword(&[-1], 1));
        assert!(is_yamanouchi_biword(&[1, -1, 0], 1));
    }

    #[test]
    fn rank_one_decomposition() {
        let dec = decompose_tensor_power(1, 2, 1 << 20).unwrap();
        let total: usize = dec.components.iter().map(|c| c.size).sum();
        assert_eq!(total, 9);
        for c in &dec.components {
            assert_eq!(c.sources.len(), 1);
        }
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            decompose_tensor_power(2, 4, 100),
            Err(Error::SizeLimit { .. })
        ));
    }
}
