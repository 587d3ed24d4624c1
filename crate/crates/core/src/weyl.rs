//! The hyperoctahedral group W_d of type B_d.
//!
//! An element `w` is stored by its window `(1, ..., d) w`, the image of the
//! identity tuple under the right action: `s_0` negates the first entry and
//! `s_j` (`1 <= j < d`) swaps entries `j` and `j + 1`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(d: usize) -> Self {
        Self {
            window: (1..=d as i8).collect(),
        }
    }

    /// The simple reflection `s_i`, `0 <= i < d`.
    pub fn generator(d: usize, i: usize) -> Self {
        Self::identity(d).rmul_gen(i)
    }

    pub fn from_window(w: &[i32]) -> Result<Self> {
        let d = w.len();
        let mut seen = vec![false; d + 1];
        for &x in w {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > d || seen[a] {
                return Err(Error::Invalid(format!("{w:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(Self {
            window: w.iter().map(|&x| x as i8).collect(),
        })
    }

    pub fn window(&self) -> Vec<i32> {
        self.window.iter().map(|&x| x as i32).collect()
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// Group product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let window = other
            .window
            .iter()
            .map(|&y| y.signum() * self.window[y.unsigned_abs() as usize - 1])
            .collect();
        Self { window }
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0i8; self.window.len()];
        for (k, &x) in self.window.iter().enumerate() {
            window[x.unsigned_abs() as usize - 1] = x.signum() * (k as i8 + 1);
        }
        Self { window }
    }

    /// Right action on a tuple of length `d`: `(t w)_k = sign(w_k) t_{|w_k|}`.
    pub fn act<T>(&self, t: &[T]) -> Vec<T>
    where
        T: Copy + std::ops::Neg<Output = T>,
    {
        self.window
            .iter()
            .map(|&y| {
                let v = t[y.unsigned_abs() as usize - 1];
                if y < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// `self * s_i`: acts on positions.
    pub fn rmul_gen(&self, i: usize) -> Self {
        let mut window = self.window.clone();
        if i == 0 {
            window[0] = -window[0];
        } else {
            window.swap(i - 1, i);
        }
        Self { window }
    }

    /// `s_i * self`: acts on values.
    pub fn lmul_gen(&self, i: usize) -> Self {
        let window = self
            .window
            .iter()
            .map(|&x| {
                let (s, a) = (x.signum(), x.abs());
                if i == 0 {
                    if a == 1 {
                        -x
                    } else {
                        x
                    }
                } else if a == i as i8 {
                    s * (a + 1)
                } else if a == i as i8 + 1 {
                    s * (a - 1)
                } else {
                    x
                }
            })
            .collect();
        Self { window }
    }

    /// Coxeter length: inversions of the window plus the absolute values of
    /// its negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut l = 0usize;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
            if w[i] < 0 {
                l += (-w[i]) as usize;
            }
        }
        l
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.lmul_gen(i).length() < self.length()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.rmul_gen(i).length() < self.length()
    }

    /// A reduced word `[a_1, ..., a_k]` with `self = s_{a_1} ... s_{a_k}`,
    /// peeling left descents greedily (smallest index first).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::new();
        while let Some(i) = (0..w.rank()).find(|&i| w.is_left_descent(i)) {
            out.push(i);
            w = w.lmul_gen(i);
        }
        out
    }

    pub fn from_word(d: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(d), |acc, &i| acc.rmul_gen(i))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Fixed bit set over group indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        Self {
            words: vec![0; n.div_ceil(64)],
        }
    }
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn union_with(&mut self, o: &Self) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a |= b;
        }
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// Multiplication tables for W_d, elements indexed by position in
/// (length, window) order; index 0 is the identity.
pub struct WeylGroup {
    d: usize,
    elems: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    lengths: Vec<usize>,
    lmul: Vec<Vec<usize>>,
    rmul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl WeylGroup {
    pub fn new(d: usize) -> Self {
        let mut elems = vec![SignedPerm::identity(d)];
        let mut seen: HashMap<SignedPerm, usize> = HashMap::new();
        seen.insert(elems[0].clone(), 0);
        let mut frontier = vec![elems[0].clone()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..d {
                    let x = w.rmul_gen(i);
                    if !seen.contains_key(&x) {
                        seen.insert(x.clone(), 0);
                        next.push(x);
                    }
                }
            }
            next.sort();
            elems.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<SignedPerm, usize> =
            elems.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let lengths = elems.iter().map(|w| w.length()).collect();
        let lmul = (0..d)
            .map(|i| elems.iter().map(|w| index[&w.lmul_gen(i)]).collect())
            .collect();
        let rmul = (0..d)
            .map(|i| elems.iter().map(|w| index[&w.rmul_gen(i)]).collect())
            .collect();
        let inv = elems.iter().map(|w| index[&w.inverse()]).collect();
        Self {
            d,
            elems,
            index,
            lengths,
            lmul,
            rmul,
            inv,
        }
    }

    pub fn rank(&self) -> usize {
        self.d
    }
    pub fn order(&self) -> usize {
        self.elems.len()
    }
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elems
    }
    pub fn elem(&self, k: usize) -> &SignedPerm {
        &self.elems[k]
    }
    pub fn index_of(&self, w: &SignedPerm) -> Option<usize> {
        self.index.get(w).copied()
    }
    pub fn length(&self, k: usize) -> usize {
        self.lengths[k]
    }
    /// Index of `s_i * w`.
    pub fn lmul(&self, i: usize, k: usize) -> usize {
        self.lmul[i][k]
    }
    /// Index of `w * s_i`.
    pub fn rmul(&self, k: usize, i: usize) -> usize {
        self.rmul[i][k]
    }
    pub fn inverse(&self, k: usize) -> usize {
        self.inv[k]
    }
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.reduced_word(y)
            .iter()
            .fold(x, |acc, &i| self.rmul(acc, i))
    }
    pub fn reduced_word(&self, k: usize) -> Vec<usize> {
        self.elems[k].reduced_word()
    }
    pub fn is_left_descent(&self, i: usize, k: usize) -> bool {
        self.lengths[self.lmul[i][k]] < self.lengths[k]
    }
    pub fn is_right_descent(&self, k: usize, i: usize) -> bool {
        self.lengths[self.rmul[i][k]] < self.lengths[k]
    }
    pub fn left_descent(&self, k: usize) -> Option<usize> {
        (0..self.d).find(|&i| self.is_left_descent(i, k))
    }
    pub fn right_descent(&self, k: usize) -> Option<usize> {
        (0..self.d).find(|&i| self.is_right_descent(k, i))
    }

    /// For every `w`, the Bruhat interval `{y : y <= w}`, built from the
    /// subword property along a fixed reduced word of `w`.
    pub fn bruhat_lower_sets(&self) -> Vec<BitSet> {
        let n = self.order();
        let mut below: Vec<BitSet> = Vec::with_capacity(n);
        for k in 0..n {
            let mut set = BitSet::new(n);
            match self.left_descent(k) {
                None => set.insert(k),
                Some(s) => {
                    let prev = &below[self.lmul(s, k)];
                    set.union_with(prev);
                    for y in prev.iter() {
                        set.insert(self.lmul(s, y));
                    }
                }
            }
            below.push(set);
        }
        below
    }

    /// Elements of the parabolic subgroup generated by `j`.
    pub fn parabolic_subgroup(&self, j: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut out = vec![0];
        while let Some(w) = stack.pop() {
            for &i in j {
                let x = self.rmul(w, i);
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The longest element of the parabolic subgroup generated by `j`.
    pub fn longest_in(&self, j: &[usize]) -> usize {
        self.parabolic_subgroup(j)
            .into_iter()
            .max_by_key(|&w| self.length(w))
            .unwrap()
    }

    /// Whether `w` is the minimal length element of its coset `W_J w`.
    pub fn is_min_left_coset_rep(&self, j: &[usize], w: usize) -> bool {
        j.iter().all(|&s| !self.is_left_descent(s, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (d, n) in [(0, 1), (1, 2), (2, 8), (3, 48), (4, 384)] {
            assert_eq!(WeylGroup::new(d).order(), n);
        }
    }

    #[test]
    fn length_matches_bfs_depth() {
        let g = WeylGroup::new(3);
        let mut dist = vec![usize::MAX; g.order()];
        dist[0] = 0;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(w) = queue.pop_front() {
            for i in 0..3 {
                let x = g.rmul(w, i);
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    queue.push_back(x);
                }
            }
        }
        for k in 0..g.order() {
            assert_eq!(g.length(k), dist[k]);
            assert_eq!(g.reduced_word(k).len(), dist[k]);
        }
        assert_eq!((0..g.order()).map(|k| g.length(k)).max(), Some(9));
    }

    #[test]
    fn generators_and_actions() {
        let s0 = SignedPerm::generator(2, 0);
        assert_eq!(s0.window(), vec![-1, 2]);
        let s1 = SignedPerm::generator(2, 1);
        assert_eq!(s1.window(), vec![2, 1]);
        let w = s0.mul(&s1);
        assert_eq!(w.window(), vec![2, -1]);
        assert_eq!(w.act(&[5, 7]), vec![7, -5]);
        assert_eq!(s1.act(&s0.act(&[5, 7])), w.act(&[5, 7]));
        assert_eq!(s0.lmul_gen(1), s1.mul(&s0));
    }

    #[test]
    fn bruhat_contains_subwords() {
        let g = WeylGroup::new(2);
        let below = g.bruhat_lower_sets();
        let top = (0..g.order()).max_by_key(|&k| g.length(k)).unwrap();
        assert_eq!(below[top].len(), 8);
        let s0 = g.index_of(&SignedPerm::generator(2, 0)).unwrap();
        assert_eq!(below[s0].len(), 2);
    }
}
