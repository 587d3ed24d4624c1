//! Symbolic actions on `V^{⊗d}` over Q(p, q).
//!
//! `V` has basis `u_{-r}, ..., u_r`; `E_{i-½}` sends `u_i` to `u_{i-1}`, `F_{i-½}`
//! sends `u_{i-1}` to `u_i`, and `K_{i-½}` scales `u_{i-1}` by `q` and `u_i` by
//! `q^-1`. Tensor powers use `Δ(E) = 1⊗E + E⊗K^-1`, `Δ(F) = F⊗1 + K⊗F`, so on
//! `V^{⊗d}` an `E` at position `k` picks up `K^-1` from every later position and
//! an `F` picks up `K` from every earlier one.
//!
//! The coideal generators `e_i, f_i, k_i` act through their definition as
//! elements of U; [`act_uj_coideal`] evaluates the same action through the
//! coideal coproduct instead and serves as an independent check.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::crystal::Half;
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::ratfunc::{qfact, qint, RatFunc};

/// A vector of `V^{⊗d}` in the tensor basis `u_w = u_{w_1} ⊗ ... ⊗ u_{w_d}`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModVec {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<i32>, RatFunc>,
}

impl ModVec {
    pub fn zero(rank: usize, degree: usize) -> Self {
        Self {
            rank,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(rank: usize, word: &[i32]) -> Result<Self> {
        let r = rank as i32;
        if let Some(x) = word.iter().find(|&&x| x < -r || x > r) {
            return Err(Error::Rank {
                rank,
                what: format!("letter {x}"),
            });
        }
        let mut v = Self::zero(rank, word.len());
        v.coeffs.insert(word.to_vec(), RatFunc::one());
        Ok(v)
    }

    /// All basis vectors, in lexicographic order of words.
    pub fn all_basis(rank: usize, degree: usize) -> Vec<Self> {
        crate::crystal::Word::all(rank, degree)
            .into_iter()
            .map(|w| Self::basis(rank, &w).unwrap())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, word: &[i32]) -> RatFunc {
        self.coeffs.get(word).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: Vec<i32>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.coeffs {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.rank, self.degree);
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
        out.add_scaled(other, &-RatFunc::one());
        out
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank, self.degree + other.degree);
        for (w, x) in &self.coeffs {
            for (u, y) in &other.coeffs {
                let mut wu = w.clone();
                wu.extend(u);
                out.add_term(wu, &(x * y));
            }
        }
        out
    }

    /// The smallest word in the support together with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<i32>, &RatFunc)> {
        self.coeffs.iter().next()
    }

    /// Whether every coefficient lies in the local ring at `p = q = 0`.
    pub fn in_lattice(&self) -> bool {
        self.coeffs.values().all(RatFunc::in_local_ring)
    }

    /// The image modulo `q L`: coefficients specialised at `p = q = 0`.
    pub fn crystal_limit(&self) -> Result<BTreeMap<Vec<i32>, num_rational::BigRational>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let x = c.specialize_p0_q0()?;
            if !num_traits::Zero::is_zero(&x) {
                out.insert(w.clone(), x);
            }
        }
        Ok(out)
    }

    /// Rescales by a monomial so that the coefficients lie in the local ring
    /// and at least one of them is a unit there.
    pub fn normalize_to_lattice(&self) -> Self {
        let Some(m) = self.coeffs.values().filter_map(RatFunc::valuation).min() else {
            return self.clone();
        };
        self.scale(&RatFunc::monomial(1, -m.0, -m.1))
    }

    /// Splits into components on which every `k_i` acts by a fixed power of `q`.
    pub fn weight_components(&self) -> BTreeMap<Vec<i32>, ModVec> {
        let mut out: BTreeMap<Vec<i32>, ModVec> = BTreeMap::new();
        for (w, c) in &self.coeffs {
            out.entry(weight(self.rank, w))
                .or_insert_with(|| Self::zero(self.rank, self.degree))
                .add_term(w.clone(), c);
        }
        out
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            write!(f, "({c})*u[{}]", word.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exponent of `K_h` on the letter `x`.
fn k_exp(h: Half, x: i32) -> i32 {
    if x == h.lower() {
        1
    } else if x == h.upper() {
        -1
    } else {
        0
    }
}

/// The exponents `(β_i, wt(w))` by which `k_1, ..., k_r` act on `u_w`.
pub fn weight(rank: usize, w: &[i32]) -> Vec<i32> {
    (1..=rank as i32)
        .map(|i| {
            w.iter()
                .map(|&x| k_exp(Half(i), x) - k_exp(Half(1 - i), x))
                .sum()
        })
        .collect()
}

/// `(β_i, γ_j)`: the `k_i`-degree of `e_j`.
pub fn beta_gamma(i: usize, j: usize) -> i32 {
    match (i, j) {
        (1, 1) => 3,
        _ if i == j => 2,
        _ if i.abs_diff(j) == 1 => -1,
        _ => 0,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum UGen {
    E,
    F,
    K,
    KInv,
}

/// `e_i`, `f_i`, `k_i`, `k_i^-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum UjGen {
    E,
    F,
    K,
    KInv,
}

fn check_half(rank: usize, h: Half) -> Result<()> {
    if h.0 < 1 - rank as i32 || h.0 > rank as i32 {
        return Err(Error::Rank {
            rank,
            what: format!("index {h}"),
        });
    }
    Ok(())
}

fn check_index(rank: usize, i: usize) -> Result<()> {
    if i == 0 || i > rank {
        return Err(Error::Rank {
            rank,
            what: format!("generator index {i}"),
        });
    }
    Ok(())
}

/// A generator of U acting on `V^{⊗d}` through the iterated coproduct.
pub fn act_u(g: UGen, h: Half, v: &ModVec) -> Result<ModVec> {
    check_half(v.rank, h)?;
    let mut out = ModVec::zero(v.rank, v.degree);
    for (w, c) in &v.coeffs {
        let exps: Vec<i32> = w.iter().map(|&x| k_exp(h, x)).collect();
        match g {
            UGen::K | UGen::KInv => {
                let s: i32 = exps.iter().sum();
                let s = if g == UGen::K { s } else { -s };
                out.add_term(w.clone(), &(c * &RatFunc::q_pow(s)));
            }
            UGen::E => {
                for k in 0..w.len() {
                    if w[k] == h.upper() {
                        let s: i32 = exps[k + 1..].iter().sum();
                        let mut u = w.clone();
                        u[k] = h.lower();
                        out.add_term(u, &(c * &RatFunc::q_pow(-s)));
                    }
                }
            }
            UGen::F => {
                for k in 0..w.len() {
                    if w[k] == h.lower() {
                        let s: i32 = exps[..k].iter().sum();
                        let mut u = w.clone();
                        u[k] = h.upper();
                        out.add_term(u, &(c * &RatFunc::q_pow(s)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `p^-δ_{i,1}` in `e_i` (and its inverse in `f_i`).
fn p_factor(i: usize, inverse: bool) -> RatFunc {
    match (i, inverse) {
        (1, false) => RatFunc::p_pow(-1),
        (1, true) => RatFunc::p(),
        _ => RatFunc::one(),
    }
}

/// A coideal generator acting through its expression in U:
/// `e_i = E_{i-½} + p^-δ F_{-(i-½)} K_{i-½}^-1`,
/// `f_i = E_{-(i-½)} + p^δ K_{-(i-½)}^-1 F_{i-½}`,
/// `k_i = K_{i-½} K_{-(i-½)}^-1`.
pub fn act_uj(g: UjGen, i: usize, v: &ModVec) -> Result<ModVec> {
    check_index(v.rank, i)?;
    let (hp, hm) = (Half(i as i32), Half(1 - i as i32));
    Ok(match g {
        UjGen::E => {
            let mut out = act_u(UGen::E, hp, v)?;
            let t = act_u(UGen::F, hm, &act_u(UGen::KInv, hp, v)?)?;
            out.add_scaled(&t, &p_factor(i, false));
            out
        }
        UjGen::F => {
            let mut out = act_u(UGen::E, hm, v)?;
            let t = act_u(UGen::KInv, hm, &act_u(UGen::F, hp, v)?)?;
            out.add_scaled(&t, &p_factor(i, true));
            out
        }
        UjGen::K => act_u(UGen::K, hp, &act_u(UGen::KInv, hm, v)?)?,
        UjGen::KInv => act_u(UGen::KInv, hp, &act_u(UGen::K, hm, v)?)?,
    })
}

/// Single-letter U action: `(letter, coefficient)` or `None`.
fn letter_u(g: UGen, h: Half, x: i32) -> Option<(i32, RatFunc)> {
    match g {
        UGen::E => (x == h.upper()).then(|| (h.lower(), RatFunc::one())),
        UGen::F => (x == h.lower()).then(|| (h.upper(), RatFunc::one())),
        UGen::K => Some((x, RatFunc::q_pow(k_exp(h, x)))),
        UGen::KInv => Some((x, RatFunc::q_pow(-k_exp(h, x)))),
    }
}

fn coideal_word(g: UjGen, i: usize, rank: usize, w: &[i32]) -> ModVec {
    let Some((&x, prefix)) = w.split_last() else {
        let mut out = ModVec::zero(rank, 0);
        if matches!(g, UjGen::K | UjGen::KInv) {
            out.add_term(Vec::new(), &RatFunc::one());
        }
        return out;
    };
    let (hp, hm) = (Half(i as i32), Half(1 - i as i32));
    let mut out = ModVec::zero(rank, w.len());
    let push = |out: &mut ModVec, left: &ModVec, y: Option<(i32, RatFunc)>, c: &RatFunc| {
        if let Some((y, cy)) = y {
            let right = ModVec {
                rank,
                degree: 1,
                coeffs: [(vec![y], cy)].into_iter().collect(),
            };
            out.add_scaled(&left.tensor(&right), c);
        }
    };
    let pre = || ModVec::basis(rank, prefix).unwrap();
    let one = RatFunc::one();
    let compose = |a: Option<(i32, RatFunc)>, g2: UGen, h2: Half| {
        a.and_then(|(y, c)| letter_u(g2, h2, y).map(|(z, c2)| (z, &c * &c2)))
    };
    match g {
        // e_i ⊗ K_{i-½}^-1 + 1 ⊗ E_{i-½} + p^-δ k_i^-1 ⊗ F_{-(i-½)} K_{i-½}^-1
        UjGen::E => {
            push(&mut out, &coideal_word(g, i, rank, prefix), letter_u(UGen::KInv, hp, x), &one);
            push(&mut out, &pre(), letter_u(UGen::E, hp, x), &one);
            push(
                &mut out,
                &coideal_word(UjGen::KInv, i, rank, prefix),
                compose(letter_u(UGen::KInv, hp, x), UGen::F, hm),
                &p_factor(i, false),
            );
        }
        // f_i ⊗ K_{-(i-½)}^-1 + 1 ⊗ E_{-(i-½)} + p^δ k_i ⊗ K_{-(i-½)}^-1 F_{i-½}
        UjGen::F => {
            push(&mut out, &coideal_word(g, i, rank, prefix), letter_u(UGen::KInv, hm, x), &one);
            push(&mut out, &pre(), letter_u(UGen::E, hm, x), &one);
            push(
                &mut out,
                &coideal_word(UjGen::K, i, rank, prefix),
                compose(letter_u(UGen::F, hp, x), UGen::KInv, hm),
                &p_factor(i, true),
            );
        }
        UjGen::K | UjGen::KInv => {
            let (gp, gm) = if g == UjGen::K {
                (UGen::K, UGen::KInv)
            } else {
                (UGen::KInv, UGen::K)
            };
            push(
                &mut out,
                &coideal_word(g, i, rank, prefix),
                compose(letter_u(gp, hp, x), gm, hm),
                &one,
            );
        }
    }
    out
}

/// The same action as [`act_uj`], evaluated through the coideal coproduct
/// `Δ(U^ȷ) ⊂ U^ȷ ⊗ U` by recursion on the tensor length.
pub fn act_uj_coideal(g: UjGen, i: usize, v: &ModVec) -> Result<ModVec> {
    check_index(v.rank, i)?;
    let mut out = ModVec::zero(v.rank, v.degree);
    for (w, c) in &v.coeffs {
        out.add_scaled(&coideal_word(g, i, v.rank, w), c);
    }
    Ok(out)
}

/// The right action of a Hecke generator: `H_0` for `j = 0`, `H_j` swapping
/// tensor positions `j` and `j+1` otherwise.
pub fn act_hecke(v: &ModVec, j: usize) -> Result<ModVec> {
    if j >= v.degree.max(1) || (j == 0 && v.degree == 0) {
        return Err(Error::Invalid(format!(
            "H_{j} does not act on tensor degree {}",
            v.degree
        )));
    }
    let mut out = ModVec::zero(v.rank, v.degree);
    for (w, c) in &v.coeffs {
        let mut u = w.clone();
        let (x, y, param) = if j == 0 {
            u[0] = -w[0];
            (0, w[0], RatFunc::p())
        } else {
            u.swap(j - 1, j);
            (w[j - 1], w[j], RatFunc::q())
        };
        let inv = param.inv().unwrap();
        match x.cmp(&y) {
            std::cmp::Ordering::Equal => out.add_term(w.clone(), &(c * &inv)),
            std::cmp::Ordering::Less => out.add_term(u, c),
            std::cmp::Ordering::Greater => {
                out.add_term(u, c);
                out.add_term(w.clone(), &(c * &(&inv - &param)));
            }
        }
    }
    Ok(out)
}

/// `v · h` for an element of the Hecke algebra of `W_d`, `d` the tensor degree.
pub fn act_hecke_elt(v: &ModVec, alg: &HeckeAlgebra, h: &HeckeElt) -> Result<ModVec> {
    if alg.rank() != v.degree {
        return Err(Error::Invalid(format!(
            "Hecke algebra of W_{} on tensor degree {}",
            alg.rank(),
            v.degree
        )));
    }
    let mut out = ModVec::zero(v.rank, v.degree);
    for (w, c) in h.iter() {
        let mut x = v.clone();
        for j in alg.group().reduced_word(w) {
            x = act_hecke(&x, j)?;
        }
        out.add_scaled(&x, c);
    }
    Ok(out)
}

/// Which of the two braid operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BraidKind {
    /// `τ'_{i,e} = sum_{a-b+c=n} s(b) q^{e(-ac+b)} f^(a) e^(b) f^(c)`.
    Prime,
    /// `τ''_{i,e} = sum_{-a+b-c=n} s(b) q^{e(-ac+b)} e^(a) f^(b) e^(c)`.
    DoublePrime,
}

/// The sign factor `s(b)` in the braid operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum BraidSign {
    /// `(-1)^b`, as for Lusztig's operators on U_q(sl_2)-modules.
    #[default]
    MinusOne,
    /// `(-q)^b`.
    MinusQ,
}

fn divided_power(g: UjGen, i: usize, n: usize, v: &ModVec) -> Result<ModVec> {
    let mut x = v.clone();
    for _ in 0..n {
        if x.is_zero() {
            return Ok(x);
        }
        x = act_uj(g, i, &x)?;
    }
    Ok(x.scale(&qfact(n as u32).inv()?))
}

/// The braid operator `τ'_{i,e}` or `τ''_{i,e}` (`i >= 2`) on a vector, applied
/// weight component by weight component.
pub fn braid_op(i: usize, kind: BraidKind, e: i32, sign: BraidSign, v: &ModVec) -> Result<ModVec> {
    check_index(v.rank, i)?;
    if i < 2 || e.abs() != 1 {
        return Err(Error::Invalid(format!("braid operator τ_{{{i},{e}}} is undefined")));
    }
    let (outer, inner) = match kind {
        BraidKind::Prime => (UjGen::F, UjGen::E),
        BraidKind::DoublePrime => (UjGen::E, UjGen::F),
    };
    let mut out = ModVec::zero(v.rank, v.degree);
    for (wt, m) in v.weight_components() {
        let n = wt[i - 1];
        let mut c = 0usize;
        loop {
            let xc = divided_power(outer, i, c, &m)?;
            if xc.is_zero() {
                break;
            }
            let mut b = 0usize;
            loop {
                let xb = divided_power(inner, i, b, &xc)?;
                if xb.is_zero() {
                    break;
                }
                // τ': a - b + c = n;  τ'': -a + b - c = n
                let a = match kind {
                    BraidKind::Prime => n + b as i32 - c as i32,
                    BraidKind::DoublePrime => b as i32 - c as i32 - n,
                };
                if a >= 0 {
                    let xa = divided_power(outer, i, a as usize, &xb)?;
                    let (ai, bi, ci) = (a, b as i32, c as i32);
                    let mut coef = RatFunc::q_pow(e * (-ai * ci + bi));
                    if bi % 2 == 1 {
                        coef = -coef;
                    }
                    if sign == BraidSign::MinusQ {
                        coef = &coef * &RatFunc::q_pow(bi);
                    }
                    out.add_scaled(&xa, &coef);
                }
                b += 1;
            }
            c += 1;
        }
    }
    Ok(out)
}

/// A composable operator on `V^{⊗d}`. Products apply their factors right to
/// left, as written.
#[derive(Clone, Debug)]
pub enum Op {
    Id,
    Scalar(RatFunc),
    U(UGen, Half),
    Uj(UjGen, usize),
    Sum(Vec<Op>),
    Prod(Vec<Op>),
    Scale(RatFunc, Box<Op>),
    Braid { i: usize, kind: BraidKind, e: i32 },
    Hecke(usize),
}

impl Op {
    pub fn e(i: usize) -> Op {
        Op::Uj(UjGen::E, i)
    }
    pub fn f(i: usize) -> Op {
        Op::Uj(UjGen::F, i)
    }
    pub fn k(i: usize) -> Op {
        Op::Uj(UjGen::K, i)
    }
    pub fn kinv(i: usize) -> Op {
        Op::Uj(UjGen::KInv, i)
    }
    pub fn scalar(c: RatFunc) -> Op {
        Op::Scalar(c)
    }

    pub fn prod(ops: Vec<Op>) -> Op {
        Op::Prod(ops)
    }

    pub fn sum(ops: Vec<Op>) -> Op {
        Op::Sum(ops)
    }

    pub fn scaled(self, c: RatFunc) -> Op {
        Op::Scale(c, Box::new(self))
    }

    pub fn then(self, other: Op) -> Op {
        Op::Prod(vec![other, self])
    }

    pub fn minus(self, other: Op) -> Op {
        Op::Sum(vec![self, other.scaled(-RatFunc::one())])
    }

    pub fn pow(self, n: usize) -> Op {
        Op::Prod(vec![self; n])
    }

    /// `x^(n) = x^n / [n]!`, zero for negative `n`.
    pub fn divided(self, n: i32) -> Op {
        if n < 0 {
            return Op::Scalar(RatFunc::zero());
        }
        let c = qfact(n as u32).inv().unwrap();
        self.pow(n as usize).scaled(c)
    }

    /// `[x, y]_a = xy - q^a yx`.
    pub fn bracket(x: Op, y: Op, a: i32) -> Op {
        Op::Sum(vec![
            Op::Prod(vec![x.clone(), y.clone()]),
            Op::Prod(vec![y, x]).scaled(-RatFunc::q_pow(a)),
        ])
    }

    /// `{c k_i} = c k_i + c^-1 k_i^-1`.
    pub fn brace_k(c: RatFunc, i: usize) -> Op {
        let ci = c.inv().unwrap();
        Op::Sum(vec![Op::k(i).scaled(c), Op::kinv(i).scaled(ci)])
    }

    /// `h_1 = h'_1 = [e_1, f_1]_1`.
    pub fn h1() -> Op {
        Op::bracket(Op::e(1), Op::f(1), 1)
    }

    /// `h'_1 = [e_1, f_1]_1`, `h'_{i+1} = [[e_{i+1}, h'_i]_1, f_{i+1}]_1`.
    pub fn h_prime(i: usize) -> Op {
        let mut h = Op::h1();
        for j in 2..=i {
            h = Op::bracket(Op::bracket(Op::e(j), h, 1), Op::f(j), 1);
        }
        h
    }

    /// `τ_i = τ''_{i,1}`.
    pub fn tau(i: usize) -> Op {
        Op::Braid {
            i,
            kind: BraidKind::DoublePrime,
            e: 1,
        }
    }

    /// `τ_i^-1 = τ'_{i,-1}`.
    pub fn tau_inv(i: usize) -> Op {
        Op::Braid {
            i,
            kind: BraidKind::Prime,
            e: -1,
        }
    }

    /// `h_i = τ_i ... τ_2 (h_1)`, acting as `τ_i ∘ ... ∘ τ_2 ∘ h_1 ∘ τ_2^-1 ∘ ... ∘ τ_i^-1`.
    pub fn h(i: usize) -> Op {
        let mut ops: Vec<Op> = (2..=i).rev().map(Op::tau).collect();
        ops.push(Op::h1());
        ops.extend((2..=i).map(Op::tau_inv));
        Op::Prod(ops)
    }

    /// `z_1 = h'_1 + [2] p q / (1 - q^2) k_1 + [2] p^-1 q^-1 / (1 - q^-4) k_1^-1`.
    pub fn z1() -> Op {
        let two = qint(2);
        let c1 = &(&two * &RatFunc::monomial(1, 1, 1)) / &(RatFunc::one() - RatFunc::q_pow(2));
        let c2 =
            &(&two * &RatFunc::monomial(1, -1, -1)) / &(RatFunc::one() - RatFunc::q_pow(-4));
        Op::Sum(vec![Op::h1(), Op::k(1).scaled(c1), Op::kinv(1).scaled(c2)])
    }

    /// `f'_2 = q^-2 [e_1, [f_1, f_2]_1]_1 - p^-1 q^-1 f_2 k_1^-1`.
    pub fn f2_prime() -> Op {
        let inner = Op::bracket(Op::e(1), Op::bracket(Op::f(1), Op::f(2), 1), 1);
        Op::Sum(vec![
            inner.scaled(RatFunc::q_pow(-2)),
            Op::Prod(vec![Op::f(2), Op::kinv(1)]).scaled(-RatFunc::monomial(1, -1, -1)),
        ])
    }

    /// `h''_1 = h_1 + p^-1 q k_1^-1 / (q - q^-1)`.
    pub fn h1_dprime() -> Op {
        let c = &RatFunc::monomial(1, -1, 1) / &(RatFunc::q() - RatFunc::q_pow(-1));
        Op::Sum(vec![Op::h1(), Op::kinv(1).scaled(c)])
    }

    /// `f'_{2,k}(a, b, n)`, `k = 1, 2, 3`.
    pub fn f2_prime_k(k: usize, a: i32, b: i32, n: i32) -> Result<Op> {
        let fb = Op::f2_prime().bar()?;
        let m = |c: i64, x: i32, y: i32| RatFunc::monomial(c, x, y);
        let (c1, c2, c3) = match k {
            1 => (m(1, 0, b - n - 1), m(1, 1, a - b) - m(1, -1, -a + b), -m(1, 0, -b + n + 1)),
            2 => (
                m(1, 1, a - b - n - 2),
                -(m(1, 0, b + 1) + m(1, 0, -b - 1)),
                m(1, -1, -a + b + n + 2),
            ),
            3 => (
                m(1, 0, -n - 2),
                m(1, 1, a - 2 * b - 1) - m(1, -1, -a + 2 * b + 1),
                -m(1, 0, n + 2),
            ),
            _ => return Err(Error::Invalid(format!("f'_2,{k} is undefined"))),
        };
        Ok(Op::Sum(vec![fb.scaled(c1), Op::f(2).scaled(c2), Op::f2_prime().scaled(c3)]))
    }

    /// The automorphism fixing `e_i, f_i`, inverting `k_i`, `p` and `q`.
    /// Defined on expressions in the coideal generators only.
    pub fn bar(&self) -> Result<Op> {
        Ok(match self {
            Op::Id => Op::Id,
            Op::Scalar(c) => Op::Scalar(c.bar()),
            Op::Uj(g, i) => Op::Uj(
                match g {
                    UjGen::K => UjGen::KInv,
                    UjGen::KInv => UjGen::K,
                    g => *g,
                },
                *i,
            ),
            Op::Sum(v) => Op::Sum(v.iter().map(Op::bar).collect::<Result<_>>()?),
            Op::Prod(v) => Op::Prod(v.iter().map(Op::bar).collect::<Result<_>>()?),
            Op::Scale(c, x) => Op::Scale(c.bar(), Box::new(x.bar()?)),
            _ => {
                return Err(Error::Invalid(format!(
                    "bar is only defined on coideal expressions, not {self:?}"
                )))
            }
        })
    }

    pub fn apply(&self, v: &ModVec) -> Result<ModVec> {
        self.apply_with(v, BraidSign::default())
    }

    pub fn apply_with(&self, v: &ModVec, sign: BraidSign) -> Result<ModVec> {
        if v.is_zero() {
            return Ok(v.clone());
        }
        Ok(match self {
            Op::Id => v.clone(),
            Op::Scalar(c) => v.scale(c),
            Op::U(g, h) => act_u(*g, *h, v)?,
            Op::Uj(g, i) => act_uj(*g, *i, v)?,
            Op::Sum(ops) => {
                let mut out = ModVec::zero(v.rank, v.degree);
                for o in ops {
                    out.add_scaled(&o.apply_with(v, sign)?, &RatFunc::one());
                }
                out
            }
            Op::Prod(ops) => {
                let mut x = v.clone();
                for o in ops.iter().rev() {
                    x = o.apply_with(&x, sign)?;
                }
                x
            }
            Op::Scale(c, o) => o.apply_with(v, sign)?.scale(c),
            Op::Braid { i, kind, e } => braid_op(*i, *kind, *e, sign, v)?,
            Op::Hecke(j) => act_hecke(v, *j)?,
        })
    }
}

/// Incremental row echelon form over Q(p, q); pivots are the smallest words
/// of the reduced vectors.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<(Vec<i32>, ModVec, Vec<RatFunc>)>,
    inputs: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of previous inputs subtracted.
    fn reduce(&self, v: &ModVec) -> (ModVec, Vec<RatFunc>) {
        let mut v = v.clone();
        let mut combo = vec![RatFunc::zero(); self.inputs];
        for (piv, row, rc) in &self.rows {
            let c = v.coeff(piv);
            if c.is_zero() {
                continue;
            }
            let f = &c / &row.coeff(piv);
            v.add_scaled(row, &-&f);
            for (x, y) in combo.iter_mut().zip(rc) {
                *x -= &(&f * y);
            }
        }
        (v, combo)
    }

    /// Adds `v` as the next input; returns the linear relation
    /// `v + sum c_j input_j = 0` if it is dependent.
    pub fn insert(&mut self, v: &ModVec) -> Option<Vec<RatFunc>> {
        let (rem, mut combo) = self.reduce(v);
        combo.push(RatFunc::one());
        self.inputs += 1;
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(RatFunc::zero());
        }
        match rem.leading() {
            None => Some(combo),
            Some((piv, _)) => {
                let piv = piv.clone();
                self.rows.push((piv, rem, combo));
                None
            }
        }
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coefficients of `v` in the inputs, when the inputs are independent and
    /// span `v`.
    pub fn coordinates(&self, v: &ModVec) -> Option<Vec<RatFunc>> {
        if self.rows.len() != self.inputs {
            return None;
        }
        let (rem, combo) = self.reduce(v);
        rem.is_zero().then(|| combo.into_iter().map(|c| -c).collect())
    }
}

/// Rank of a matrix over `Q(p, q)`.
pub fn matrix_rank(mut m: Vec<Vec<RatFunc>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for k in c..cols {
                let t = &f * &m[rank][k];
                m[i][k] -= &t;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a family of vectors.
pub fn rank_of(vs: &[ModVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vs {
        ech.insert(v);
    }
    ech.rank()
}

/// A basis of `{ sum c_j domain_j : sum c_j images_j = 0 }`.
pub fn kernel(domain: &[ModVec], images: &[ModVec]) -> Vec<ModVec> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for img in images {
        if let Some(rel) = ech.insert(img) {
            let (rank, degree) = (domain[0].rank, domain[0].degree);
            let mut v = ModVec::zero(rank, degree);
            for (d, c) in domain.iter().zip(&rel) {
                v.add_scaled(d, c);
            }
            out.push(v);
        }
    }
    out
}

/// Basis words of `V^{⊗d}` grouped by `k`-weight.
pub fn weight_spaces(rank: usize, degree: usize) -> BTreeMap<Vec<i32>, Vec<Vec<i32>>> {
    let mut out: BTreeMap<Vec<i32>, Vec<Vec<i32>>> = BTreeMap::new();
    for w in crate::crystal::Word::all(rank, degree) {
        out.entry(weight(rank, &w)).or_default().push(w);
    }
    out
}

/// Whether `lhs` and `rhs` agree on every basis vector; returns the first
/// word where they differ.
pub fn first_difference(lhs: &Op, rhs: &Op, rank: usize, degree: usize) -> Result<Option<Vec<i32>>> {
    let basis = crate::crystal::Word::all(rank, degree);
    let found: Result<Vec<Option<Vec<i32>>>> = basis
        .par_iter()
        .map(|w| {
            let v = ModVec::basis(rank, w)?;
            let d = lhs.apply(&v)?.sub(&rhs.apply(&v)?);
            Ok((!d.is_zero()).then(|| w.clone()))
        })
        .collect();
    Ok(found?.into_iter().flatten().next())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn u(rank: usize, w: &[i32]) -> ModVec {
        ModVec::basis(rank, w).unwrap()
    }

    #[test]
    fn vector_representation() {
        // E_{1/2} u_1 = u_0
        assert_eq!(act_u(UGen::E, Half(1), &u(1, &[1])).unwrap(), u(1, &[0]));
        assert!(act_u(UGen::E, Half(1), &u(1, &[0])).unwrap().is_zero());
        assert_eq!(act_u(UGen::F, Half(1), &u(1, &[0])).unwrap(), u(1, &[1]));
    }

    #[test]
    fn f_on_two_letters() {
        // Δ(F) = F ⊗ 1 + K ⊗ F with K_{1/2} u_0 = q u_0
        let v = act_u(UGen::F, Half(1), &u(1, &[0, 0])).unwrap();
        let mut expect = u(1, &[1, 0]);
        expect.add_scaled(&u(1, &[0, 1]), &RatFunc::q());
        assert_eq!(v, expect);
    }

    #[test]
    fn e1_on_u0() {
        // E_{1/2} needs the letter 1 and F_{-1/2} the letter -1
        assert!(act_uj(UjGen::E, 1, &u(1, &[0])).unwrap().is_zero());
        // e_1 u_1 = u_0 + p^-1 F_{-1/2} q u_1 = u_0
        assert_eq!(act_uj(UjGen::E, 1, &u(1, &[1])).unwrap(), u(1, &[0]));
        // e_1 u_{-1} = p^-1 u_0
        assert_eq!(
            act_uj(UjGen::E, 1, &u(1, &[-1])).unwrap(),
            u(1, &[0]).scale(&r("p^-1"))
        );
        // f_1 u_0 = u_{-1} + p u_1
        let mut expect = u(1, &[-1]);
        expect.add_scaled(&u(1, &[1]), &RatFunc::p());
        assert_eq!(act_uj(UjGen::F, 1, &u(1, &[0])).unwrap(), expect);
        // k_1 u_0 = q^2 u_0
        assert_eq!(act_uj(UjGen::K, 1, &u(1, &[0])).unwrap(), u(1, &[0]).scale(&r("q^2")));
    }

    #[test]
    fn h1_on_single_letter() {
        // u_0 is a highest weight vector of L(2;1): eigenvalue [1]{0} = p + p^-1
        let v = Op::h1().apply(&u(1, &[0])).unwrap();
        assert_eq!(v, u(1, &[0]).scale(&r("p + p^-1")));
    }

    #[test]
    fn coideal_agrees_with_embedding() {
        for rank in 1..=2 {
            for d in 0..=2 {
                for v in ModVec::all_basis(rank, d) {
                    for i in 1..=rank {
                        for g in [UjGen::E, UjGen::F, UjGen::K, UjGen::KInv] {
                            assert_eq!(
                                act_uj(g, i, &v).unwrap(),
                                act_uj_coideal(g, i, &v).unwrap(),
                                "{g:?}_{i} on {v}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_cases() {
        let v = act_hecke(&u(1, &[1, 1]), 1).unwrap();
        assert_eq!(v, u(1, &[1, 1]).scale(&r("q^-1")));
        assert_eq!(act_hecke(&u(1, &[1, 0]), 0).unwrap(), u(1, &[-1, 0]));
        let v = act_hecke(&u(1, &[-1]), 0).unwrap();
        let mut expect = u(1, &[1]);
        expect.add_scaled(&u(1, &[-1]), &r("p^-1 - p"));
        assert_eq!(v, expect);
    }

    #[test]
    fn kernel_of_e1() {
        let basis: Vec<ModVec> = [[-1], [0], [1]].iter().map(|w| u(1, w)).collect();
        let imgs: Vec<ModVec> = basis.iter().map(|b| act_uj(UjGen::E, 1, b).unwrap()).collect();
        let ker = kernel(&basis, &imgs);
        // u_0, and u_1 - p u_{-1}
        assert_eq!(ker.len(), 2);
        let v = ker.iter().find(|k| k.len() == 2).unwrap();
        let c = v.coeff(&[1]);
        let v = v.scale(&c.inv().unwrap());
        let mut expect = u(1, &[1]);
        expect.add_scaled(&u(1, &[-1]), &-RatFunc::p());
        assert_eq!(v, expect);
    }
}

#[cfg(test)]
mod h2_cross_check {
    use super::*;

    /// `ker e_1 ∩ ker e_2` in each weight space of `V^{⊗2}`, `r = 2`.
    fn raised() -> Vec<(Vec<i32>, ModVec)> {
        let mut out = Vec::new();
        for (wt, words) in weight_spaces(2, 2) {
            let basis: Vec<ModVec> = words.iter().map(|w| ModVec::basis(2, w).unwrap()).collect();
            let i1: Vec<ModVec> = basis.iter().map(|b| act_uj(UjGen::E, 1, b).unwrap()).collect();
            let k1 = kernel(&basis, &i1);
            if k1.is_empty() {
                continue;
            }
            let i2: Vec<ModVec> = k1.iter().map(|b| act_uj(UjGen::E, 2, b).unwrap()).collect();
            out.extend(kernel(&k1, &i2).into_iter().map(|v| (wt.clone(), v)));
        }
        out
    }

    fn eigenvalue(op: &Op, v: &ModVec) -> Option<RatFunc> {
        let img = op.apply(v).unwrap();
        let (w, c) = v.leading().unwrap();
        let x = &img.coeff(w) / c;
        (img == v.scale(&x)).then_some(x)
    }

    // h_2 = τ_2 h_1 τ_2^-1 is diagonal on every raised vector; the root vector
    // h'_2 = [[e_2, h'_1]_1, f_2]_1 is a different element and is not.
    #[test]
    fn conjugated_h2_against_root_vector() {
        let vs = raised();
        assert_eq!(vs.len(), 6);
        let mut agree = 0;
        for (wt, v) in &vs {
            let h = eigenvalue(&Op::h(2), v).unwrap_or_else(|| panic!("h_2 not diagonal at {wt:?}"));
            if let Some(hp) = eigenvalue(&Op::h_prime(2), v) {
                agree += (h == hp) as usize;
            }
            if *wt == [4, 0] {
                assert_eq!(h, "p^-1*q^-2 + p^-1 + p + p*q^2".parse().unwrap());
                assert!(Op::h_prime(2).apply(v).unwrap().is_zero());
            }
        }
        // only where both vanish, at weights (-2,2) and (-1,0)
        assert_eq!(agree, 2);
    }
}
