//! The Hecke algebra of W_d with parameters `q_0 = p`, `q_i = q` (`i >= 1`),
//! its bar involution, Kazhdan–Lusztig basis, parabolic KL bases and left
//! cells.
//!
//! Conventions: `H_i H_w = H_{s_i w}` if `s_i w > w` and
//! `H_{s_i w} - (q_i - q_i^-1) H_w` otherwise; the bar involution sends
//! `H_w` to `H_{w^-1}^-1` and `p, q` to `p^-1, q^-1`; `C_w = H_w + sum c_{y,w}
//! H_y` is bar-invariant with `c_{y,w}` in `p Z[p, q^±1] + q Z[q]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratfunc::{LaurentPoly, RatFunc};
use crate::tableaux::Partition;
use crate::weyl::{BitSet, SignedPerm, WeylGroup};

/// Finite linear combination of standard basis elements `H_w`, keyed by the
/// index of `w` in its [`WeylGroup`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<usize, RatFunc>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: usize) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn term(w: usize, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: usize) -> RatFunc {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RatFunc)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    pub fn add_term(&mut self, w: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(*w, &(x * c));
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::from_int(-1));
        out
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*H#{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Split a Laurent polynomial into its parts in the positive lattice
/// `p Z[p, q^±1] + q Z[q]`, the constants, and the bar of the positive lattice.
fn lattice_split(c: &LaurentPoly) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let pos = |(a, b): (i32, i32)| a > 0 || (a == 0 && b > 0);
    let plus = LaurentPoly::from_terms(
        c.terms().iter().filter(|(m, _)| pos(*m)).cloned(),
    );
    let zero = LaurentPoly::constant(c.coeff((0, 0)));
    let minus = LaurentPoly::from_terms(
        c.terms()
            .iter()
            .filter(|(m, _)| !pos(*m) && *m != (0, 0))
            .cloned(),
    );
    (plus, zero, minus)
}

/// Membership in `p Z[p, q^±1] + q Z[q]`.
pub fn in_positive_lattice(c: &RatFunc) -> bool {
    let Some(l) = c.as_laurent() else {
        return false;
    };
    l.terms().iter().all(|((a, b), x)| {
        x.is_integer() && (*a > 0 || (*a == 0 && *b > 0))
    })
}

pub struct HeckeAlgebra {
    group: WeylGroup,
    params: Vec<RatFunc>,
    diffs: Vec<RatFunc>,
    bar_basis: OnceLock<Vec<HeckeElt>>,
    kl: OnceLock<Vec<HeckeElt>>,
    preorder: OnceLock<Vec<BitSet>>,
}

impl HeckeAlgebra {
    pub fn new(d: usize) -> Self {
        let group = WeylGroup::new(d);
        let params: Vec<RatFunc> = (0..d)
            .map(|i| if i == 0 { RatFunc::p() } else { RatFunc::q() })
            .collect();
        let diffs = params
            .iter()
            .map(|x| x - &x.inv().unwrap())
            .collect();
        Self {
            group,
            params,
            diffs,
            bar_basis: OnceLock::new(),
            kl: OnceLock::new(),
            preorder: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn index(&self, w: &SignedPerm) -> Result<usize> {
        self.group
            .index_of(w)
            .ok_or_else(|| Error::Invalid(format!("{w} is not in W_{}", self.rank())))
    }

    /// `q_i`: `p` for `i = 0`, `q` otherwise.
    pub fn param(&self, i: usize) -> &RatFunc {
        &self.params[i]
    }

    /// `q_w = q_{a_1} ... q_{a_k}` for a reduced word of `w`.
    pub fn q_w(&self, w: usize) -> RatFunc {
        self.group
            .reduced_word(w)
            .iter()
            .fold(RatFunc::one(), |acc, &i| &acc * &self.params[i])
    }

    pub fn generator(&self, i: usize) -> HeckeElt {
        HeckeElt::basis(self.group.lmul(i, 0))
    }

    /// `H_i^-1 = H_i + (q_i - q_i^-1)`.
    pub fn generator_inverse(&self, i: usize) -> HeckeElt {
        let mut x = self.generator(i);
        x.add_term(0, &self.diffs[i]);
        x
    }

    /// `C_{s_i} = H_i + q_i`.
    pub fn kl_generator(&self, i: usize) -> HeckeElt {
        let mut x = self.generator(i);
        x.add_term(0, &self.params[i]);
        x
    }

    /// `H_i x`.
    pub fn lmul_gen(&self, i: usize, x: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in x.iter() {
            let sw = self.group.lmul(i, w);
            out.add_term(sw, c);
            if self.group.length(sw) < self.group.length(w) {
                out.add_term(w, &-(c * &self.diffs[i]));
            }
        }
        out
    }

    /// `x H_i`.
    pub fn rmul_gen(&self, x: &HeckeElt, i: usize) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in x.iter() {
            let ws = self.group.rmul(w, i);
            out.add_term(ws, c);
            if self.group.length(ws) < self.group.length(w) {
                out.add_term(w, &-(c * &self.diffs[i]));
            }
        }
        out
    }

    /// `H_w x`.
    pub fn basis_mul(&self, w: usize, x: &HeckeElt) -> HeckeElt {
        self.group
            .reduced_word(w)
            .iter()
            .rev()
            .fold(x.clone(), |acc, &i| self.lmul_gen(i, &acc))
    }

    pub fn mul(&self, x: &HeckeElt, y: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.basis_mul(w, y), c);
        }
        out
    }

    fn bar_basis(&self) -> &[HeckeElt] {
        self.bar_basis.get_or_init(|| {
            let n = self.group.order();
            let mut out: Vec<HeckeElt> = Vec::with_capacity(n);
            for w in 0..n {
                let v = match self.group.left_descent(w) {
                    None => HeckeElt::basis(0),
                    Some(s) => {
                        let prev = &out[self.group.lmul(s, w)];
                        let mut v = self.lmul_gen(s, prev);
                        v.add_scaled(prev, &self.diffs[s]);
                        v
                    }
                };
                out.push(v);
            }
            out
        })
    }

    /// The bar involution.
    pub fn bar(&self, x: &HeckeElt) -> HeckeElt {
        let table = self.bar_basis();
        let mut out = HeckeElt::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&table[w], &c.bar());
        }
        out
    }

    /// Adjust a bar-invariant `x` with leading term `H_top` by subtracting
    /// bar-invariant multiples of `basis[y]`, longest `y` first, until every
    /// lower coefficient lies in the positive lattice.
    fn triangular_correct(
        &self,
        mut x: HeckeElt,
        top: usize,
        basis: &dyn Fn(usize) -> HeckeElt,
    ) -> Result<HeckeElt> {
        let top_len = self.group.length(top);
        for len in (0..top_len).rev() {
            let ys: Vec<usize> = x
                .support()
                .into_iter()
                .filter(|&y| self.group.length(y) == len)
                .collect();
            for y in ys {
                let c = x.coeff(y);
                let l = c.as_laurent().ok_or_else(|| {
                    Error::Internal(format!("non-Laurent KL coefficient {c}"))
                })?;
                let (_, zero, minus) = lattice_split(l);
                let m = RatFunc::from_poly(zero)
                    + RatFunc::from_poly(minus.clone())
                    + RatFunc::from_poly(minus.bar());
                if !m.is_zero() {
                    x.add_scaled(&basis(y), &-m);
                }
            }
        }
        Ok(x)
    }

    fn kl_table(&self) -> &[HeckeElt] {
        self.kl.get_or_init(|| {
            let n = self.group.order();
            let mut table: Vec<HeckeElt> = Vec::with_capacity(n);
            for w in 0..n {
                let v = match self.group.left_descent(w) {
                    None => HeckeElt::basis(0),
                    Some(s) => {
                        let prev = &table[self.group.lmul(s, w)];
                        let mut x = self.lmul_gen(s, prev);
                        x.add_scaled(prev, &self.params[s]);
                        self.triangular_correct(x, w, &|y| table[y].clone())
                            .expect("KL coefficients are Laurent polynomials")
                    }
                };
                table.push(v);
            }
            table
        })
    }

    /// The Kazhdan–Lusztig basis element `C_w`.
    pub fn kl_basis(&self, w: usize) -> &HeckeElt {
        &self.kl_table()[w]
    }

    /// Coordinates of `x` in the KL basis.
    pub fn expand_in_kl(&self, x: &HeckeElt) -> BTreeMap<usize, RatFunc> {
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        while let Some(y) = rest
            .support()
            .into_iter()
            .max_by_key(|&y| (self.group.length(y), y))
        {
            let c = rest.coeff(y);
            rest.add_scaled(self.kl_basis(y), &-&c);
            out.insert(y, c);
        }
        out
    }

    /// `x_J = sum_{w in W_J} q_{w_J} q_w^-1 H_w`.
    pub fn x_j(&self, j: &[usize]) -> HeckeElt {
        let top = self.q_w(self.group.longest_in(j));
        let mut out = HeckeElt::zero();
        for w in self.group.parabolic_subgroup(j) {
            out.add_term(w, &(&top / &self.q_w(w)));
        }
        out
    }

    /// Rewrites `x_J h` as `x_J h'` with `h'` supported on minimal coset
    /// representatives, using `x_J H_u = q_u^-1 x_J` for `u in W_J`.
    fn coset_reduce(&self, j: &[usize], h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (z, c) in h.iter() {
            let mut z = z;
            let mut f = c.clone();
            while let Some(&s) = j.iter().find(|&&s| self.group.is_left_descent(s, z)) {
                z = self.group.lmul(s, z);
                f = &f / &self.params[s];
            }
            out.add_term(z, &f);
        }
        out
    }

    /// The parabolic KL basis element `ᴶC_w` for `w` a minimal left coset
    /// representative, computed in the module `x_J H` and returned in the
    /// standard basis of H.
    pub fn parabolic_kl(&self, j: &[usize], w: usize) -> Result<HeckeElt> {
        if !self.group.is_min_left_coset_rep(j, w) {
            return Err(Error::NotMinimalCoset(self.group.elem(w).to_string()));
        }
        let reps = self.parabolic_reps(j, w)?;
        Ok(self.mul(&self.x_j(j), &reps[&w]))
    }

    /// Representatives `h_y` with `ᴶC_y = x_J h_y` for all minimal coset
    /// representatives `y` up to the length of `w`.
    fn parabolic_reps(&self, j: &[usize], w: usize) -> Result<BTreeMap<usize, HeckeElt>> {
        let mut reps: BTreeMap<usize, HeckeElt> = BTreeMap::new();
        reps.insert(0, HeckeElt::basis(0));
        let max_len = self.group.length(w);
        let mut order: Vec<usize> = (1..self.group.order())
            .filter(|&y| {
                self.group.length(y) <= max_len && self.group.is_min_left_coset_rep(j, y)
            })
            .collect();
        order.sort_by_key(|&y| (self.group.length(y), y));
        for y in order {
            let s = self.group.right_descent(y).unwrap();
            let prev = &reps[&self.group.rmul(y, s)];
            let mut x = self.rmul_gen(prev, s);
            x.add_scaled(prev, &self.params[s]);
            let x = self.coset_reduce(j, &x);
            let v = self.triangular_correct(x, y, &|z| reps[&z].clone())?;
            reps.insert(y, v);
        }
        Ok(reps)
    }

    /// Graph of the relation `y ->_L w`: `C_y` occurs in some `H_s C_w`.
    /// Entry `w` lists those `y`.
    pub fn left_edges(&self) -> Vec<BTreeSet<usize>> {
        let d = self.rank();
        (0..self.group.order())
            .map(|w| {
                let mut ys = BTreeSet::new();
                for s in 0..d {
                    let x = self.lmul_gen(s, self.kl_basis(w));
                    for (y, c) in self.expand_in_kl(&x) {
                        if !c.is_zero() {
                            ys.insert(y);
                        }
                    }
                }
                ys
            })
            .collect()
    }

    /// For each `w`, the set `{y : y <=_L w}`.
    pub fn left_preorder(&self) -> &[BitSet] {
        self.preorder.get_or_init(|| {
            let edges = self.left_edges();
            let n = edges.len();
            (0..n)
                .map(|w| {
                    let mut seen = BitSet::new(n);
                    seen.insert(w);
                    let mut stack = vec![w];
                    while let Some(x) = stack.pop() {
                        for &y in &edges[x] {
                            if !seen.contains(y) {
                                seen.insert(y);
                                stack.push(y);
                            }
                        }
                    }
                    seen
                })
                .collect()
        })
    }

    /// Left cells as strongly connected components of the `->_L` graph.
    pub fn left_cells(&self) -> Vec<Vec<usize>> {
        let edges = self.left_edges();
        let mut g: DiGraph<usize, ()> = DiGraph::new();
        let nodes: Vec<_> = (0..edges.len()).map(|w| g.add_node(w)).collect();
        for (w, ys) in edges.iter().enumerate() {
            for &y in ys {
                g.add_edge(nodes[w], nodes[y], ());
            }
        }
        let mut cells: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|n| g[n]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        cells.sort();
        cells
    }
}

/// The two one-sided Gyoja elements attached to a Young diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gyoja {
    /// `e_+ = sum_{x in S_+} q^-l(x) H_x` over the row stabiliser of `T_+`.
    Plus,
    /// `e_- = sum_{y in S_-} (-q)^l(y) H_y` over the column stabiliser of `T_-`.
    Minus,
}

/// `T_+` (rows filled left to right, top to bottom) and `T_-` (columns filled
/// top to bottom, left to right) as maps box -> entry, entries from 1.
fn row_and_column_fillings(shape: &Partition) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let rows: Vec<usize> = shape.parts().iter().map(|&x| x as usize).collect();
    let mut tp = Vec::new();
    let mut next = 1;
    for &len in &rows {
        tp.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    let cols = shape.conjugate();
    let mut tm: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut next = 1;
    for (j, &h) in cols.iter().enumerate() {
        for row in tm.iter_mut().take(h as usize) {
            row[j] = next;
            next += 1;
        }
    }
    (tp, tm)
}

impl HeckeAlgebra {
    fn check_block(&self, shape: &Partition, offset: usize) -> Result<()> {
        if offset + shape.size() > self.rank() {
            return Err(Error::Shape(format!(
                "{shape} shifted by {offset} does not fit in W_{}",
                self.rank()
            )));
        }
        Ok(())
    }

    /// Gyoja's `e_+` or `e_-` for the symmetric group on `offset+1..=offset+|shape|`.
    pub fn gyoja_e(&self, shape: &Partition, offset: usize, which: Gyoja) -> Result<HeckeElt> {
        self.check_block(shape, offset)?;
        let (tp, tm) = row_and_column_fillings(shape);
        let mut gens = Vec::new();
        match which {
            Gyoja::Plus => {
                for row in &tp {
                    gens.extend(row.windows(2).map(|w| w[0] + offset));
                }
            }
            Gyoja::Minus => {
                let n = shape.size();
                let col_of = |x: usize| {
                    tm.iter()
                        .find_map(|row| row.iter().position(|&y| y == x))
                        .unwrap()
                };
                gens.extend((1..n).filter(|&i| col_of(i) == col_of(i + 1)).map(|i| i + offset));
            }
        }
        let mut out = HeckeElt::zero();
        for w in self.group.parabolic_subgroup(&gens) {
            let l = self.group.length(w) as i32;
            let c = match which {
                Gyoja::Plus => RatFunc::q_pow(-l),
                Gyoja::Minus => RatFunc::monomial(if l % 2 == 0 { 1 } else { -1 }, 0, l),
            };
            out.add_term(w, &c);
        }
        Ok(out)
    }

    /// The index of `[+,-]`, the permutation with `T_+ . [+,-] = T_-`: its
    /// window has `T_+(b)` at position `T_-(b)` for every box `b`.
    pub fn gyoja_perm(&self, shape: &Partition, offset: usize) -> Result<usize> {
        self.check_block(shape, offset)?;
        let (tp, tm) = row_and_column_fillings(shape);
        let mut window: Vec<i32> = (1..=self.rank() as i32).collect();
        for (rp, rm) in tp.iter().zip(&tm) {
            for (&x, &y) in rp.iter().zip(rm) {
                window[y + offset - 1] = (x + offset) as i32;
            }
        }
        self.index(&SignedPerm::from_window(&window)?)
    }

    /// `e_+ H_[+,-] e_-`, the generator of the Specht module `S^shape`.
    pub fn gyoja_generator(&self, shape: &Partition, offset: usize) -> Result<HeckeElt> {
        let ep = self.gyoja_e(shape, offset, Gyoja::Plus)?;
        let em = self.gyoja_e(shape, offset, Gyoja::Minus)?;
        let w = HeckeElt::basis(self.gyoja_perm(shape, offset)?);
        Ok(self.mul(&self.mul(&ep, &w), &em))
    }

    /// `H_x` for the product `s_{a_1} ... s_{a_k}`, reduced or not.
    fn word_elt(&self, word: &[usize]) -> HeckeElt {
        let w = word.iter().fold(0, |w, &i| self.group.rmul(w, i));
        HeckeElt::basis(w)
    }

    /// Dipper–James' `v_{a,b}` with `b = d - a`:
    /// `prod_i (p + H_{s_{i,1}} H_0 H_{s_{1,i}}) H_{w_{a,b}} prod_j (1 - p H_{s_{j,1}} H_0 H_{s_{1,j}})`
    /// where `s_{1,i} = s_1 ... s_{i-1}` and `w_{a,b} = (s_{d-1} ... s_1)^b`.
    pub fn dipper_james_v(&self, a: usize) -> Result<HeckeElt> {
        let d = self.rank();
        if a > d {
            return Err(Error::Invalid(format!("a = {a} exceeds d = {d}")));
        }
        let b = d - a;
        let hook = |i: usize| {
            let mut word: Vec<usize> = (1..i).rev().collect();
            word.push(0);
            word.extend(1..i);
            self.word_elt(&word)
        };
        let mut out = HeckeElt::basis(0);
        for i in 1..=a {
            let mut f = hook(i);
            f.add_term(0, &RatFunc::p());
            out = self.mul(&out, &f);
        }
        let cycle: Vec<usize> = (1..d).rev().collect();
        let mut word = Vec::new();
        for _ in 0..b {
            word.extend(&cycle);
        }
        out = self.mul(&out, &self.word_elt(&word));
        for j in 1..=b {
            let mut f = hook(j).scale(&-RatFunc::p());
            f.add_term(0, &RatFunc::one());
            out = self.mul(&out, &f);
        }
        Ok(out)
    }
}

/// One KL basis element, `C_w = Σ_y c_y H_y`, in printable form.
#[derive(Clone, Debug, Serialize)]
pub struct KlEntry {
    pub w: Vec<i32>,
    pub length: usize,
    pub terms: Vec<(Vec<i32>, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KlReport {
    pub d: usize,
    pub entries: Vec<KlEntry>,
    pub bar_invariant: bool,
    /// Lower coefficients lie in `p Z[p, q^±1] + q Z[q]`.
    pub lattice: bool,
    /// Number of pairs `(J, w)` with `w` a minimal coset representative.
    pub parabolic_checked: usize,
    /// `ᴶC_w = C_{w_J w}` for all of them.
    pub parabolic: bool,
}

impl KlReport {
    pub fn passed(&self) -> bool {
        self.bar_invariant && self.lattice && self.parabolic
    }
}

/// The KL basis of `H(W_d)` with its bar-invariance, lattice and parabolic
/// checks.
pub fn kl_suite(d: usize, guard: u64) -> Result<KlReport> {
    let order = (1..=d as u64).product::<u64>() << d;
    if order > guard {
        return Err(Error::SizeLimit {
            what: "kl: |W_d|".into(),
            needed: order,
            guard,
        });
    }
    let alg = HeckeAlgebra::new(d);
    let g = alg.group();
    let mut bar_invariant = true;
    let mut lattice = true;
    let mut entries = Vec::with_capacity(g.order());
    for w in 0..g.order() {
        let c = alg.kl_basis(w);
        bar_invariant &= &alg.bar(c) == c;
        lattice &= c.coeff(w).is_one()
            && c.iter().all(|(y, x)| y == w || in_positive_lattice(x));
        let mut terms: Vec<(usize, String)> = c.iter().map(|(y, x)| (y, x.to_string())).collect();
        terms.sort_by_key(|&(y, _)| (std::cmp::Reverse(g.length(y)), y));
        entries.push(KlEntry {
            w: g.elem(w).window(),
            length: g.length(w),
            terms: terms.into_iter().map(|(y, x)| (g.elem(y).window(), x)).collect(),
        });
    }
    let mut parabolic_checked = 0;
    let mut parabolic = true;
    for mask in 0u32..1 << d {
        let j: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
        let top = g.longest_in(&j);
        for w in (0..g.order()).filter(|&w| g.is_min_left_coset_rep(&j, w)) {
            parabolic_checked += 1;
            parabolic &= &alg.parabolic_kl(&j, w)? == alg.kl_basis(g.mul(top, w));
        }
    }
    Ok(KlReport {
        d,
        entries,
        bar_invariant,
        lattice,
        parabolic_checked,
        parabolic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let h = HeckeAlgebra::new(2);
        for i in 0..2 {
            let x = h.generator(i);
            let sq = h.mul(&x, &x);
            let mut expect = HeckeElt::basis(0);
            expect.add_scaled(&x, &-(&h.diffs[i]));
            assert_eq!(sq, expect);
            assert_eq!(h.mul(&x, &h.generator_inverse(i)), HeckeElt::basis(0));
        }
    }

    #[test]
    fn bar_of_generator() {
        let h = HeckeAlgebra::new(2);
        let s1 = h.group().lmul(1, 0);
        let mut expect = HeckeElt::basis(s1);
        expect.add_term(0, &r("q - q^-1"));
        assert_eq!(h.bar(&HeckeElt::basis(s1)), expect);
    }

    #[test]
    fn kl_in_rank_one() {
        let h = HeckeAlgebra::new(1);
        let mut expect = HeckeElt::basis(1);
        expect.add_term(0, &RatFunc::p());
        assert_eq!(h.kl_basis(1), &expect);
        assert_eq!(h.left_cells(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn x_j_is_kl_of_longest() {
        let h = HeckeAlgebra::new(2);
        let j = [1usize];
        let s1 = h.group().lmul(1, 0);
        let mut expect = HeckeElt::basis(s1);
        expect.add_term(0, &RatFunc::q());
        assert_eq!(h.x_j(&j), expect);
        assert_eq!(&h.x_j(&j), h.kl_basis(s1));
    }

    #[test]
    fn parabolic_rejects_non_minimal() {
        let h = HeckeAlgebra::new(2);
        let s1 = h.group().lmul(1, 0);
        assert!(matches!(
            h.parabolic_kl(&[1], s1),
            Err(Error::NotMinimalCoset(_))
        ));
    }

    #[test]
    fn gyoja_elements() {
        let h = HeckeAlgebra::new(2);
        let s1 = h.group().lmul(1, 0);
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(h.gyoja_e(&one, 0, Gyoja::Plus).unwrap(), HeckeElt::basis(0));
        // a column of two boxes: column group <s_1>
        let col = Partition::new(vec![1, 1]).unwrap();
        let mut expect = HeckeElt::basis(0);
        expect.add_term(s1, &-RatFunc::q());
        assert_eq!(h.gyoja_e(&col, 0, Gyoja::Minus).unwrap(), expect);
        // a row has trivial column group
        let row = Partition::new(vec![2]).unwrap();
        assert_eq!(h.gyoja_e(&row, 0, Gyoja::Minus).unwrap(), HeckeElt::basis(0));
        assert_eq!(h.gyoja_perm(&row, 0).unwrap(), 0);
    }

    #[test]
    fn gyoja_perm_is_length_additive() {
        let h = HeckeAlgebra::new(4);
        let g = h.group();
        for lam in Partition::all(4, 4) {
            let w = h.gyoja_perm(&lam, 0).unwrap();
            let plus = h.gyoja_e(&lam, 0, Gyoja::Plus).unwrap().support();
            let minus = h.gyoja_e(&lam, 0, Gyoja::Minus).unwrap().support();
            for &x in &plus {
                for &y in &minus {
                    let z = g.mul(g.mul(x, w), y);
                    assert_eq!(g.length(z), g.length(x) + g.length(w) + g.length(y));
                }
            }
        }
    }

    #[test]
    fn kl_suite_small_ranks() {
        for d in 0..=2 {
            let rep = kl_suite(d, 1000).unwrap();
            assert!(rep.passed(), "d={d}");
            assert_eq!(rep.entries.len(), (1..=d).product::<usize>() << d);
        }
    }

    #[test]
    fn dipper_james_v_trivial_cases() {
        let h = HeckeAlgebra::new(0);
        assert_eq!(h.dipper_james_v(0).unwrap(), HeckeElt::basis(0));
        let h = HeckeAlgebra::new(1);
        let mut expect = HeckeElt::basis(1);
        expect.add_term(0, &RatFunc::p());
        assert_eq!(h.dipper_james_v(1).unwrap(), expect);
    }
}
