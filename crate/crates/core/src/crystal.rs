//! The ordinary crystal structure on words.
//!
//! For a half-integer index `i - ½` the letters `i - 1` (lower) and `i`
//! (upper) are bracketed: an adjacent pair `(i - 1, i)` cancels, repeatedly,
//! leaving `(i, ..., i, i - 1, ..., i - 1)`. `Ẽ` turns the rightmost remaining
//! `i` into `i - 1`, `F̃` the leftmost remaining `i - 1` into `i`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::{Partition, Tableau};

/// The index `i - ½`, stored as `i` (the upper letter).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Half(pub i32);

impl Half {
    pub fn upper(self) -> i32 {
        self.0
    }
    pub fn lower(self) -> i32 {
        self.0 - 1
    }
    /// All indices `-(r - ½), ..., r - ½`.
    pub fn all(r: usize) -> Vec<Half> {
        (-(r as i32) + 1..=r as i32).map(Half).collect()
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", 2 * self.0 - 1)
    }
}

impl Serialize for Half {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    E,
    F,
}

/// A word in the letters `-r, ..., r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Word {
    pub rank: usize,
    pub letters: Vec<i32>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        let r = rank as i32;
        if let Some(x) = letters.iter().find(|&&x| x < -r || x > r) {
            return Err(Error::Rank {
                rank,
                what: format!("letter {x}"),
            });
        }
        Ok(Self { rank, letters })
    }

    /// All words of length `d` in `-r..=r`, in lexicographic order.
    pub fn all(r: usize, d: usize) -> Vec<Vec<i32>> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (-(r as i32)..=r as i32).map(move |x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

/// Positions of the unmatched uppers and unmatched lowers after cancelling
/// adjacent `(lower, upper)` pairs.
pub fn bracket(word: &[i32], lower: i32, upper: i32) -> (Vec<usize>, Vec<usize>) {
    let mut ups = Vec::new();
    let mut lows: Vec<usize> = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        if x == lower {
            lows.push(k);
        } else if x == upper && lows.pop().is_none() {
            ups.push(k);
        }
    }
    (ups, lows)
}

/// The reduced word `s_{i-½}` as `(position, letter)` pairs.
pub fn reduce_half(word: &[i32], h: Half) -> Vec<(usize, i32)> {
    let (ups, lows) = bracket(word, h.lower(), h.upper());
    ups.iter()
        .map(|&k| (k, h.upper()))
        .chain(lows.iter().map(|&k| (k, h.lower())))
        .collect()
}

pub fn epsilon(word: &[i32], h: Half) -> usize {
    bracket(word, h.lower(), h.upper()).0.len()
}

pub fn phi(word: &[i32], h: Half) -> usize {
    bracket(word, h.lower(), h.upper()).1.len()
}

/// `Ẽ_{i-½}` or `F̃_{i-½}`; `None` stands for the zero element.
pub fn crystal_op(word: &[i32], h: Half, dir: Dir) -> Option<Vec<i32>> {
    let (ups, lows) = bracket(word, h.lower(), h.upper());
    let mut out = word.to_vec();
    match dir {
        Dir::E => out[*ups.last()?] = h.lower(),
        Dir::F => out[*lows.first()?] = h.upper(),
    }
    Some(out)
}

/// A crystal operator on a semistandard tableau in the natural order, via its
/// ME reading word.
pub fn crystal_on_sst(t: &Tableau, h: Half, dir: Dir) -> Result<Option<Tableau>> {
    let shape = t.shape(0);
    let Some(w) = crystal_op(&t.read_me(), h, dir) else {
        return Ok(None);
    };
    let out = Tableau::from_me(&shape, &w)?;
    if !out.is_semistandard(crate::tableaux::LetterOrder::Natural) {
        return Err(Error::Internal(format!("{t} maps to non-semistandard {out}")));
    }
    Ok(Some(out))
}

/// Insertion and recording tableaux of a word under column insertion, with
/// the recording tableau standard on `1..=len`.
pub fn rs_word(word: &[i32]) -> (Tableau, Tableau) {
    let labels: Vec<i32> = (1..=word.len() as i32).collect();
    Tableau::insert_word(word, &labels, crate::tableaux::LetterOrder::Natural)
}

/// Shape of the insertion tableau, padded to `len`.
pub fn rs_shape(word: &[i32], len: usize) -> Partition {
    rs_word(word).0.shape(len)
}

#[derive(Clone, Debug, Serialize)]
pub struct RsReport {
    pub r: usize,
    pub d: usize,
    pub edges: usize,
    /// `P(F̃ w) = F̃ P(w)` and `Q(F̃ w) = Q(w)` on every edge.
    pub intertwines: bool,
    /// Number of words per recording-tableau shape, against
    /// `#ST(λ) · #SST(λ)` summed over shapes.
    pub dimension_ok: bool,
}

/// Checks that `w ↦ (P(w), Q(w))` is a crystal isomorphism on all words of
/// length `d` over `-r..=r`.
pub fn crystal_rs_check(r: usize, d: usize, guard: u64) -> Result<RsReport> {
    let n = (2 * r as u64 + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    crate::jcrystal::check_guard("crystal-rs: words", n, guard)?;
    let alphabet: Vec<i32> = (-(r as i32)..=r as i32).collect();
    let mut edges = 0;
    let mut intertwines = true;
    let mut per_q: std::collections::BTreeMap<Tableau, usize> = Default::default();
    for w in Word::all(r, d) {
        let (p, q) = rs_word(&w);
        *per_q.entry(q.clone()).or_default() += 1;
        for h in Half::all(r) {
            let Some(t) = crystal_op(&w, h, Dir::F) else {
                continue;
            };
            edges += 1;
            let (p2, q2) = rs_word(&t);
            intertwines &= q2 == q && crystal_on_sst(&p, h, Dir::F)?.as_ref() == Some(&p2);
        }
    }
    let dimension_ok = per_q.iter().all(|(q, &count)| {
        count == Tableau::enumerate_sst(&q.shape(0), &alphabet).len()
    });
    Ok(RsReport {
        r,
        d,
        edges,
        intertwines,
        dimension_ok,
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
        assert_eq!(letters(reduce_half(&GOLDEN, Half(-3))), vec![-3, -4]);
        assert_eq!(letters(reduce_half(&GOLDEN, Half(4))), vec![4, 4, 3]);
    }

    #[test]
    fn sl2_pairs() {
        // (1, 2) is the singlet for index 3/2
        assert_eq!(epsilon(&[1, 2], Half(2)), 0);
        assert_eq!(phi(&[1, 2], Half(2)), 0);
        assert_eq!(crystal_op(&[2, 1], Half(2), Dir::E), Some(vec![1, 1]));
        assert_eq!(crystal_op(&[2, 1], Half(2), Dir::F), Some(vec![2, 2]));
        assert_eq!(crystal_op(&[1, 1], Half(2), Dir::F), Some(vec![2, 1]));
    }

    #[test]
    fn rs_is_a_crystal_isomorphism() {
        for (r, d) in [(1, 2), (1, 3), (2, 2)] {
            let rep = crystal_rs_check(r, d, 1000).unwrap();
            assert!(rep.intertwines && rep.dimension_ok, "{rep:?}");
        }
    }

    #[test]
    fn half_display() {
        assert_eq!(Half(0).to_string(), "-1/2");
        assert_eq!(Half(2).to_string(), "3/2");
        assert_eq!(Half::all(2).len(), 4);
    }
}
