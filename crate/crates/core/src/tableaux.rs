//! Partitions, bipartitions, (bi)tableaux, reading words, Schensted column
//! insertion and the classification map between bipartitions and
//! highest-weight data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::SignedPerm;

/// A weakly decreasing sequence of non-negative parts of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn empty(len: usize) -> Self {
        Self {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.parts.iter().filter(|&&x| x > 0).count()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Vec<u32> {
        let w = self.part(0);
        (0..w)
            .map(|c| self.parts.iter().filter(|&&x| x > c).count() as u32)
            .collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..self.len().max(other.len())).all(|i| self.part(i) >= other.part(i))
    }

    /// Same nonzero parts, padded or truncated to `len`.
    pub fn with_len(&self, len: usize) -> Result<Self> {
        if self.height() > len {
            return Err(Error::Shape(format!("{self} has more than {len} rows")));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(Self { parts })
    }

    /// All partitions of `n` with at most `len` parts, padded to `len`, in
    /// reverse lexicographic order.
    pub fn all(n: usize, len: usize) -> Vec<Partition> {
        fn rec(n: u32, max: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == len {
                if n == 0 {
                    out.push(Partition { parts: cur.clone() });
                }
                return;
            }
            for x in (0..=max.min(n)).rev() {
                cur.push(x);
                rec(n - x, x, len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as u32, n as u32, len, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn count_standard(&self) -> u128 {
        let n = self.size() as u32;
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj[j as usize] - i as u32 - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / hooks
    }
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {x:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    /// `(3,1,0)` or `3,1,0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Partition::new(parse_parts(s)?)
    }
}

/// A pair `(λ⁻; λ⁺)` with `λ⁻` of length `r + 1` and `λ⁺` of length `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition {
    pub minus: Partition,
    pub plus: Partition,
}

impl Bipartition {
    pub fn new(minus: Partition, plus: Partition) -> Result<Self> {
        if minus.len() != plus.len() + 1 {
            return Err(Error::Shape(format!(
                "({minus};{plus}): lengths must be r+1 and r"
            )));
        }
        Ok(Self { minus, plus })
    }

    pub fn rank(&self) -> usize {
        self.plus.len()
    }

    /// Pads (or checks) both components to lengths `r + 1` and `r`, so that
    /// `(;)` and `(1;)` can be written without trailing zeros.
    pub fn with_rank(&self, r: usize) -> Result<Self> {
        Bipartition::new(self.minus.with_len(r + 1)?, self.plus.with_len(r)?)
    }

    /// Parses a bipartition whose components may be given without padding.
    pub fn parse_with_rank(s: &str, r: usize) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected ';' in {s:?}")))?;
        Bipartition {
            minus: Partition::new(parse_parts(a)?)?,
            plus: Partition::new(parse_parts(b)?)?,
        }
        .with_rank(r)
    }

    pub fn size(&self) -> usize {
        self.minus.size() + self.plus.size()
    }

    /// `λ_i`: `λ⁻_{1-i}` for `i <= 0` and `λ⁺_i` for `i > 0`.
    pub fn row(&self, i: i32) -> u32 {
        if i <= 0 {
            self.minus.part((-i) as usize)
        } else {
            self.plus.part(i as usize - 1)
        }
    }

    pub fn has_zero_row(&self) -> bool {
        self.minus.parts().contains(&0) || self.plus.parts().contains(&0)
    }

    /// All bipartitions of `n` of rank `r`.
    pub fn all(n: usize, r: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for m in Partition::all(k, r + 1) {
                for p in Partition::all(n - k, r) {
                    out.push(Bipartition {
                        minus: m.clone(),
                        plus: p,
                    });
                }
            }
        }
        out
    }

    /// `#ST(λ) = #ST(λ⁻) #ST(λ⁺) C(|λ|, |λ⁺|)`.
    pub fn count_standard(&self) -> u128 {
        self.minus.count_standard()
            * self.plus.count_standard()
            * binomial(self.size() as u32, self.plus.size() as u32)
    }

    /// Whether both shapes differ by a constant `n` added to every row.
    pub fn pi_equivalent(&self, other: &Bipartition) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let rows = |b: &Bipartition| -> Vec<i64> {
            (-(b.rank() as i32)..=b.rank() as i32)
                .map(|i| b.row(i) as i64)
                .collect()
        };
        let (x, y) = (rows(self), rows(other));
        let n = x[0] - y[0];
        x.iter().zip(&y).all(|(a, b)| a - b == n)
    }

    /// The representative of the π-equivalence class with a zero row.
    pub fn zero_representative(&self) -> Bipartition {
        let m = (-(self.rank() as i32)..=self.rank() as i32)
            .map(|i| self.row(i))
            .min()
            .unwrap_or(0);
        Bipartition {
            minus: Partition {
                parts: self.minus.parts.iter().map(|x| x - m).collect(),
            },
            plus: Partition {
                parts: self.plus.parts.iter().map(|x| x - m).collect(),
            },
        }
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.minus.parts.iter().map(|x| x.to_string()).collect();
        let p: Vec<String> = self.plus.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({};{})", m.join(","), p.join(","))
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    /// `(4,2,2,1;4,2,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected ';' in {s:?}")))?;
        Bipartition::new(Partition::new(parse_parts(a)?)?, Partition::new(parse_parts(b)?)?)
    }
}

/// Order on letters: natural for `Natural`, and `0 ≺ -1 ≺ ... ≺ -r` for `Minus`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LetterOrder {
    Natural,
    Minus,
}

impl LetterOrder {
    pub fn key(self, x: i32) -> i32 {
        match self {
            LetterOrder::Natural => x,
            LetterOrder::Minus => -x,
        }
    }
}

/// A filling of a Young diagram, stored row by row (no empty rows).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        let rows: Vec<Vec<i32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Shape("row lengths must weakly decrease".into()));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths padded with zeros to `len`.
    pub fn shape(&self, len: usize) -> Partition {
        let mut parts: Vec<u32> = self.rows.iter().map(|r| r.len() as u32).collect();
        parts.resize(len.max(parts.len()), 0);
        Partition { parts }
    }

    pub fn is_semistandard(&self, order: LetterOrder) -> bool {
        let k = |x| order.key(x);
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| k(w[0]) > k(w[1])) {
                return false;
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(x, y)| k(*x) <= k(*y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Reading word right to left along rows, top row first.
    pub fn read_me(&self) -> Vec<i32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Reverse of [`Self::read_me`].
    pub fn read_em(&self) -> Vec<i32> {
        let mut w = self.read_me();
        w.reverse();
        w
    }

    /// The tableau of the given shape whose ME reading is `word`.
    pub fn from_me(shape: &Partition, word: &[i32]) -> Result<Self> {
        if shape.size() != word.len() {
            return Err(Error::Shape(format!(
                "word of length {} does not fill {shape}",
                word.len()
            )));
        }
        let mut rows = Vec::new();
        let mut pos = 0;
        for &len in shape.parts() {
            let len = len as usize;
            let mut row = word[pos..pos + len].to_vec();
            row.reverse();
            rows.push(row);
            pos += len;
        }
        Tableau::new(rows)
    }

    /// All semistandard tableaux of shape `shape` with entries in `alphabet`
    /// (listed in increasing order), in column-lexicographic order of fillings.
    pub fn enumerate_sst(shape: &Partition, alphabet: &[i32]) -> Vec<Tableau> {
        let conj = shape.conjugate();
        let cells: Vec<(usize, usize)> = conj
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (0..h as usize).map(move |r| (r, c)))
            .collect();
        let mut grid: Vec<Vec<usize>> = shape
            .parts()
            .iter()
            .map(|&l| vec![usize::MAX; l as usize])
            .collect();
        let mut out = Vec::new();
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<usize>>,
            alphabet: &[i32],
            out: &mut Vec<Tableau>,
        ) {
            if k == cells.len() {
                let rows = grid
                    .iter()
                    .map(|row| row.iter().map(|&i| alphabet[i]).collect())
                    .collect();
                out.push(Tableau::new(rows).unwrap());
                return;
            }
            let (r, c) = cells[k];
            let lo_left = if c > 0 { grid[r][c - 1] } else { 0 };
            let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
            for v in lo_left.max(lo_up)..alphabet.len() {
                grid[r][c] = v;
                rec(k + 1, cells, grid, alphabet, out);
            }
            grid[r][c] = usize::MAX;
        }
        rec(0, &cells, &mut grid, alphabet, &mut out);
        out
    }

    /// Schensted column insertion: `x` replaces the topmost entry `>= x` of
    /// the first column, the displaced entry is inserted into the next column,
    /// and so on; an entry larger than a whole column is appended at its
    /// bottom. Returns the new box as `(row, column)`.
    pub fn column_insert(&mut self, x: i32, order: LetterOrder) -> (usize, usize) {
        let k = |v| order.key(v);
        let mut val = x;
        let mut col = 0;
        loop {
            let height = self.rows.iter().take_while(|r| r.len() > col).count();
            match (0..height).find(|&r| k(self.rows[r][col]) >= k(val)) {
                Some(r) => {
                    std::mem::swap(&mut self.rows[r][col], &mut val);
                    col += 1;
                }
                None => {
                    if height == self.rows.len() {
                        self.rows.push(Vec::new());
                    }
                    self.rows[height].push(val);
                    return (height, col);
                }
            }
        }
    }

    /// Insertion and recording tableaux of `word`; the recording tableau
    /// uses `labels[k]` for the box created by `word[k]`.
    pub fn insert_word(word: &[i32], labels: &[i32], order: LetterOrder) -> (Tableau, Tableau) {
        let mut p = Tableau::empty();
        let mut q = Tableau::empty();
        for (&x, &l) in word.iter().zip(labels) {
            let (r, c) = p.column_insert(x, order);
            if r == q.rows.len() {
                q.rows.push(Vec::new());
            }
            debug_assert_eq!(q.rows[r].len(), c);
            q.rows[r].push(l);
        }
        (p, q)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", s.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A pair of tableaux `(T⁻, T⁺)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Bitableau {
    pub minus: Tableau,
    pub plus: Tableau,
}

impl Bitableau {
    pub fn shape(&self, r: usize) -> Bipartition {
        Bipartition {
            minus: self.minus.shape(r + 1),
            plus: self.plus.shape(r),
        }
    }

    /// `R(T) = (EM(T⁻), ME(T⁺))`.
    pub fn reading(&self) -> Vec<i32> {
        let mut w = self.minus.read_em();
        w.extend(self.plus.read_me());
        w
    }

    /// Inverse of [`Self::reading`] for a fixed shape.
    pub fn from_reading(shape: &Bipartition, word: &[i32]) -> Result<Self> {
        let k = shape.minus.size();
        if word.len() != k + shape.plus.size() {
            return Err(Error::Shape(format!("word length does not fit {shape}")));
        }
        let mut em = word[..k].to_vec();
        em.reverse();
        Ok(Self {
            minus: Tableau::from_me(&shape.minus, &em)?,
            plus: Tableau::from_me(&shape.plus, &word[k..])?,
        })
    }

    /// Semistandard bitableaux of rank `r`: `T⁻` in `0 ≺ -1 ≺ ... ≺ -r`,
    /// `T⁺` in `1 < ... < r`.
    pub fn enumerate_sst(shape: &Bipartition) -> Vec<Bitableau> {
        let r = shape.rank() as i32;
        let minus_alpha: Vec<i32> = (0..=r).map(|x| -x).collect();
        let plus_alpha: Vec<i32> = (1..=r).collect();
        let ms = Tableau::enumerate_sst(&shape.minus, &minus_alpha);
        let ps = Tableau::enumerate_sst(&shape.plus, &plus_alpha);
        let mut out = Vec::with_capacity(ms.len() * ps.len());
        for m in &ms {
            for p in &ps {
                out.push(Bitableau {
                    minus: m.clone(),
                    plus: p.clone(),
                });
            }
        }
        out
    }

    pub fn is_semistandard(&self, r: usize) -> bool {
        let r = r as i32;
        self.minus.is_semistandard(LetterOrder::Minus)
            && self.plus.is_semistandard(LetterOrder::Natural)
            && self.minus.rows.iter().flatten().all(|&x| -r <= x && x <= 0)
            && self.plus.rows.iter().flatten().all(|&x| 1 <= x && x <= r)
    }

    /// Standard bitableaux on `{1, ..., n}` of the given shape.
    pub fn enumerate_standard(shape: &Bipartition) -> Vec<Bitableau> {
        let n = shape.size();
        let mut out = Vec::new();
        let mut cur = [vec![Vec::<i32>::new(); shape.minus.len()], vec![
            Vec::<i32>::new();
            shape.plus.len()
        ]];
        let targets = [shape.minus.parts().to_vec(), shape.plus.parts().to_vec()];
        fn rec(
            k: usize,
            n: usize,
            cur: &mut [Vec<Vec<i32>>; 2],
            targets: &[Vec<u32>; 2],
            out: &mut Vec<Bitableau>,
        ) {
            if k > n {
                out.push(Bitableau {
                    minus: Tableau::new(cur[0].clone()).unwrap(),
                    plus: Tableau::new(cur[1].clone()).unwrap(),
                });
                return;
            }
            for side in 0..2 {
                for row in 0..cur[side].len() {
                    let len = cur[side][row].len();
                    let fits = (len as u32) < targets[side][row]
                        && (row == 0 || cur[side][row - 1].len() > len);
                    if fits {
                        cur[side][row].push(k as i32);
                        rec(k + 1, n, cur, targets, out);
                        cur[side][row].pop();
                    }
                }
            }
        }
        rec(1, n, &mut cur, &targets, &mut out);
        out
    }
}

/// Insertion and recording bitableaux `(P⁻, P⁺)`, `(Q⁻, Q⁺)` of a signed
/// permutation: negative window entries (at positions `j_1 < ... < j_l`) are
/// column-inserted into `P⁻` with recording labels `j_k`, positive ones into
/// `P⁺`.
pub fn signed_rs(w: &SignedPerm) -> (Bitableau, Bitableau) {
    let win = w.window();
    let (mut neg, mut negpos, mut pos, mut pospos) = (vec![], vec![], vec![], vec![]);
    for (k, &x) in win.iter().enumerate() {
        if x < 0 {
            neg.push(x);
            negpos.push(k as i32 + 1);
        } else {
            pos.push(x);
            pospos.push(k as i32 + 1);
        }
    }
    let (pm, qm) = Tableau::insert_word(&neg, &negpos, LetterOrder::Natural);
    let (pp, qp) = Tableau::insert_word(&pos, &pospos, LetterOrder::Natural);
    (
        Bitableau {
            minus: pm,
            plus: pp,
        },
        Bitableau {
            minus: qm,
            plus: qp,
        },
    )
}

/// Highest-weight data `(a; b)` of a finite-dimensional irreducible module:
/// `a_1` any integer, `0 <= b_i <= a_i` for `i >= 2`, `b_1 >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ClassificationData {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl ClassificationData {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let ok = a.len() == b.len()
            && !a.is_empty()
            && b.iter().all(|&x| x >= 0)
            && (1..a.len()).all(|i| b[i] <= a[i]);
        if !ok {
            return Err(Error::Invalid(format!("({a:?}; {b:?}) is not admissible")));
        }
        Ok(Self { a, b })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }
}

/// `a_1 = 2λ_0 - λ_-1 - λ_1`, `a_i = λ_{-(i-1)} - λ_{-i} + λ_{i-1} - λ_i`,
/// `b_i = λ_{-(i-1)} - λ_{-i}`.
pub fn pi_map(shape: &Bipartition) -> ClassificationData {
    let r = shape.rank() as i32;
    let l = |i: i32| shape.row(i) as i64;
    let mut a = vec![2 * l(0) - l(-1) - l(1)];
    a.extend((2..=r).map(|i| l(-(i - 1)) - l(-i) + l(i - 1) - l(i)));
    let b = (1..=r).map(|i| l(-(i - 1)) - l(-i)).collect();
    ClassificationData { a, b }
}

/// The bipartition with a zero row mapped to `data` by [`pi_map`].
pub fn pi_inverse(data: &ClassificationData) -> Bipartition {
    let r = data.rank();
    let (a, b) = (&data.a, &data.b);
    let sb: i64 = b.iter().sum();
    let sa2: i64 = a[1..].iter().sum();
    let c = a[0] - (2 * sb - sa2);
    let (cm, cp) = (c.max(0), c.min(0));
    let minus = (0..=r)
        .map(|k| b[k.min(r)..].iter().sum::<i64>() + cm)
        .map(|x| x as u32)
        .collect();
    let plus = (1..=r)
        .map(|k| (k..r).map(|i| a[i] - b[i]).sum::<i64>() - cp)
        .map(|x| x as u32)
        .collect();
    Bipartition {
        minus: Partition { parts: minus },
        plus: Partition { parts: plus },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden_bitableau() -> Bitableau {
        Bitableau {
            minus: Tableau::new(vec![vec![0, 0, -1, -4], vec![-1, -2], vec![-3, -3], vec![-4]])
                .unwrap(),
            plus: Tableau::new(vec![vec![1, 2, 2, 4], vec![3, 4]]).unwrap(),
        }
    }

    #[test]
    fn golden_reading_word() {
        let t = golden_bitableau();
        assert!(t.is_semistandard(4));
        assert_eq!(
            t.reading(),
            vec![-4, -3, -3, -1, -2, 0, 0, -1, -4, 4, 2, 2, 1, 4, 3]
        );
        let back = Bitableau::from_reading(&t.shape(4), &t.reading()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn golden_pi() {
        let data = ClassificationData::new(vec![2, 2, 3], vec![2, 0, 1]).unwrap();
        let shape = pi_inverse(&data);
        assert_eq!(shape, "(4,2,2,1;4,2,0)".parse().unwrap());
        assert_eq!(pi_map(&shape), data);
    }

    #[test]
    fn column_insertion_shapes() {
        let (p, _) = Tableau::insert_word(&[2, 1], &[1, 2], LetterOrder::Natural);
        assert_eq!(p.rows(), &[vec![1, 2]]);
        let (p, q) = Tableau::insert_word(&[1, 2], &[1, 2], LetterOrder::Natural);
        assert_eq!(p.rows(), &[vec![1], vec![2]]);
        assert_eq!(q.rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn hook_lengths() {
        let l: Partition = "(3,2,1)".parse().unwrap();
        assert_eq!(l.count_standard(), 16);
        let b: Bipartition = "(2,1;1)".parse().unwrap();
        assert_eq!(b.count_standard(), 2 * 4);
        assert_eq!(Bitableau::enumerate_standard(&b).len(), 8);
    }

    #[test]
    fn pi_equivalence() {
        let x: Bipartition = "(1,1;1)".parse().unwrap();
        let y: Bipartition = "(0,0;0)".parse().unwrap();
        assert!(x.pi_equivalent(&y));
        assert_eq!(x.zero_representative(), y);
        assert_eq!(pi_map(&x), pi_map(&y));
    }

    #[test]
    fn sst_counts() {
        let l: Partition = "(2,1)".parse().unwrap();
        assert_eq!(Tableau::enumerate_sst(&l, &[1, 2, 3]).len(), 8);
        let b: Bipartition = "(1,0;0)".parse().unwrap();
        assert_eq!(Bitableau::enumerate_sst(&b).len(), 2);
    }
}
