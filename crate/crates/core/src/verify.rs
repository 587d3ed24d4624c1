//! Exact verification of operator identities on `V^{⊗d}`, highest weight
//! spectra, and the Dipper–James generators of the bimodule decomposition.
//!
//! Every check compares two rational functions or two vectors for equality;
//! there are no tolerances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{Gyoja, HeckeAlgebra};
use crate::jcrystal::{check_guard, decompose_tensor_power, is_yamanouchi_biword, letter_shape};
use crate::ratfunc::{brace, qint, RatFunc};
use crate::tableaux::{pi_map, Bipartition, ClassificationData, Partition};
use crate::ujmod::{
    act_hecke_elt, act_uj, act_uj_coideal, beta_gamma, braid_op, first_difference, kernel,
    matrix_rank, rank_of, weight, weight_spaces, Echelon, BraidKind, BraidSign, ModVec, Op, UjGen,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Defrel,
    Coideal,
    Weight,
    Hecke,
    Duality,
    LemmaH1,
    E1f1n,
    Z1,
    Braid,
    F1n,
    #[serde(rename = "appendixA")]
    AppendixA,
    Spectrum,
    DipperJames,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Defrel,
        Family::Coideal,
        Family::Weight,
        Family::Hecke,
        Family::Duality,
        Family::LemmaH1,
        Family::E1f1n,
        Family::Z1,
        Family::Braid,
        Family::F1n,
        Family::AppendixA,
        Family::Spectrum,
        Family::DipperJames,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Defrel => "defrel",
            Family::Coideal => "coideal",
            Family::Weight => "weight",
            Family::Hecke => "hecke",
            Family::Duality => "duality",
            Family::LemmaH1 => "lemma-h1",
            Family::E1f1n => "e1f1n",
            Family::Z1 => "z1",
            Family::Braid => "braid",
            Family::F1n => "f1n",
            Family::AppendixA => "appendixA",
            Family::Spectrum => "spectrum",
            Family::DipperJames => "dipper-james",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown check family '{s}'")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub family: Family,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub r: usize,
    pub d: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            write!(f, "{tag} [{}] {}", c.family, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " -- {d}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "r={} d={}: {} passed, {} failed, {} skipped",
            self.r,
            self.d,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}

struct Ctx {
    r: usize,
    d: usize,
    checks: Vec<Check>,
}

impl Ctx {
    fn push(&mut self, family: Family, name: impl Into<String>, ok: bool, detail: Option<String>) {
        self.checks.push(Check {
            family,
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        });
    }

    fn skip(&mut self, family: Family, name: impl Into<String>, why: &str) {
        self.checks.push(Check {
            family,
            name: name.into(),
            status: Status::Skip,
            detail: Some(why.to_string()),
        });
    }

    fn identity(&mut self, family: Family, name: impl Into<String>, lhs: &Op, rhs: &Op) -> Result<()> {
        let diff = first_difference(lhs, rhs, self.r, self.d)?;
        let detail = diff.map(|w| format!("differs on u{w:?}"));
        self.push(family, name, detail.is_none(), detail);
        Ok(())
    }
}

fn q(n: i32) -> RatFunc {
    RatFunc::q_pow(n)
}

fn mono(c: i64, a: i32, b: i32) -> RatFunc {
    RatFunc::monomial(c, a, b)
}

fn zero_op() -> Op {
    Op::Scalar(RatFunc::zero())
}

fn defrel(cx: &mut Ctx) -> Result<()> {
    let fam = Family::Defrel;
    let r = cx.r;
    let qq = &RatFunc::q() - &q(-1);
    for i in 1..=r {
        cx.identity(fam, format!("k{i} k{i}^-1 = 1"), &Op::prod(vec![Op::k(i), Op::kinv(i)]), &Op::Id)?;
        cx.identity(fam, format!("k{i}^-1 k{i} = 1"), &Op::prod(vec![Op::kinv(i), Op::k(i)]), &Op::Id)?;
        for j in 1..=r {
            if i < j {
                cx.identity(
                    fam,
                    format!("k{i} k{j} = k{j} k{i}"),
                    &Op::prod(vec![Op::k(i), Op::k(j)]),
                    &Op::prod(vec![Op::k(j), Op::k(i)]),
                )?;
            }
            let bg = beta_gamma(i, j);
            cx.identity(
                fam,
                format!("k{i} e{j} k{i}^-1 = q^{bg} e{j}"),
                &Op::prod(vec![Op::k(i), Op::e(j), Op::kinv(i)]),
                &Op::e(j).scaled(q(bg)),
            )?;
            cx.identity(
                fam,
                format!("k{i} f{j} k{i}^-1 = q^{} f{j}", -bg),
                &Op::prod(vec![Op::k(i), Op::f(j), Op::kinv(i)]),
                &Op::f(j).scaled(q(-bg)),
            )?;
            if (i, j) != (1, 1) {
                let rhs = if i == j {
                    Op::k(i).minus(Op::kinv(i)).scaled(qq.inv()?)
                } else {
                    zero_op()
                };
                cx.identity(fam, format!("e{i} f{j} - f{j} e{i}"), &Op::bracket(Op::e(i), Op::f(j), 0), &rhs)?;
            }
            if i.abs_diff(j) == 1 {
                for (x, y, name) in [(Op::e(i), Op::e(j), "e"), (Op::f(i), Op::f(j), "f")] {
                    let lhs = Op::sum(vec![
                        Op::prod(vec![x.clone(), x.clone(), y.clone()]),
                        Op::prod(vec![x.clone(), y.clone(), x.clone()]).scaled(-qint(2)),
                        Op::prod(vec![y.clone(), x.clone(), x.clone()]),
                    ]);
                    cx.identity(fam, format!("Serre {name}{i}^2 {name}{j}"), &lhs, &zero_op())?;
                }
            }
            if i.abs_diff(j) > 1 && i < j {
                cx.identity(fam, format!("e{i} e{j} = e{j} e{i}"), &Op::bracket(Op::e(i), Op::e(j), 0), &zero_op())?;
                cx.identity(fam, format!("f{i} f{j} = f{j} f{i}"), &Op::bracket(Op::f(i), Op::f(j), 0), &zero_op())?;
            }
        }
    }
    let brace1 = Op::brace_k(mono(1, 1, 1), 1);
    let (e1, f1) = (Op::e(1), Op::f(1));
    let lhs = Op::sum(vec![
        Op::prod(vec![e1.clone(), e1.clone(), f1.clone()]),
        Op::prod(vec![e1.clone(), f1.clone(), e1.clone()]).scaled(-qint(2)),
        Op::prod(vec![f1.clone(), e1.clone(), e1.clone()]),
    ]);
    let rhs = Op::prod(vec![e1.clone(), brace1.clone()]).scaled(-qint(2));
    cx.identity(fam, "e1^2 f1 relation", &lhs, &rhs)?;
    let lhs = Op::sum(vec![
        Op::prod(vec![f1.clone(), f1.clone(), e1.clone()]),
        Op::prod(vec![f1.clone(), e1.clone(), f1.clone()]).scaled(-qint(2)),
        Op::prod(vec![e1.clone(), f1.clone(), f1.clone()]),
    ]);
    let rhs = Op::prod(vec![brace1, f1]).scaled(-qint(2));
    cx.identity(fam, "f1^2 e1 relation", &lhs, &rhs)
}

fn coideal(cx: &mut Ctx) -> Result<()> {
    for i in 1..=cx.r {
        for g in [UjGen::E, UjGen::F, UjGen::K, UjGen::KInv] {
            let mut bad = None;
            for v in ModVec::all_basis(cx.r, cx.d) {
                if act_uj(g, i, &v)? != act_uj_coideal(g, i, &v)? {
                    bad = Some(format!("differs on {v}"));
                    break;
                }
            }
            cx.push(Family::Coideal, format!("{g:?}_{i}: embedding = coideal coproduct"), bad.is_none(), bad);
        }
    }
    Ok(())
}

fn weights(cx: &mut Ctx) -> Result<()> {
    for i in 1..=cx.r {
        for (g, sign) in [(UjGen::E, 1), (UjGen::F, -1)] {
            let mut bad = None;
            for v in ModVec::all_basis(cx.r, cx.d) {
                let (w, _) = v.leading().unwrap();
                let mut expect = weight(cx.r, w);
                for (k, x) in expect.iter_mut().enumerate() {
                    *x += sign * beta_gamma(k + 1, i);
                }
                let img = act_uj(g, i, &v)?;
                if img.iter().any(|(u, _)| weight(cx.r, u) != expect) {
                    bad = Some(format!("{g:?}_{i} on {v}"));
                    break;
                }
            }
            let name = if sign > 0 { "e" } else { "f" };
            cx.push(Family::Weight, format!("{name}{i} shifts weights by {}γ{i}", if sign > 0 { "+" } else { "-" }), bad.is_none(), bad);
        }
    }
    Ok(())
}

fn hecke(cx: &mut Ctx) -> Result<()> {
    let fam = Family::Hecke;
    for j in 0..cx.d {
        let t = if j == 0 { RatFunc::p() } else { RatFunc::q() };
        let lhs = Op::prod(vec![
            Op::Hecke(j).minus(Op::Scalar(t.inv()?)),
            Op::sum(vec![Op::Hecke(j), Op::Scalar(t.clone())]),
        ]);
        cx.identity(fam, format!("(H{j} - q{j}^-1)(H{j} + q{j}) = 0"), &lhs, &zero_op())?;
    }
    for j in 0..cx.d {
        for k in j + 1..cx.d {
            let (hj, hk) = (Op::Hecke(j), Op::Hecke(k));
            let (lhs, rhs, name) = match (j, k) {
                (0, 1) => (
                    Op::prod(vec![hj.clone(), hk.clone(), hj.clone(), hk.clone()]),
                    Op::prod(vec![hk.clone(), hj.clone(), hk.clone(), hj.clone()]),
                    "H0 H1 H0 H1 = H1 H0 H1 H0".to_string(),
                ),
                _ if k == j + 1 => (
                    Op::prod(vec![hj.clone(), hk.clone(), hj.clone()]),
                    Op::prod(vec![hk.clone(), hj.clone(), hk.clone()]),
                    format!("H{j} H{k} H{j} = H{k} H{j} H{k}"),
                ),
                _ => (
                    Op::prod(vec![hj.clone(), hk.clone()]),
                    Op::prod(vec![hk.clone(), hj.clone()]),
                    format!("H{j} H{k} = H{k} H{j}"),
                ),
            };
            cx.identity(fam, name, &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn duality(cx: &mut Ctx) -> Result<()> {
    for i in 1..=cx.r {
        for (x, name) in [(Op::e(i), "e"), (Op::f(i), "f"), (Op::k(i), "k")] {
            for j in 0..cx.d {
                cx.identity(
                    Family::Duality,
                    format!("[{name}{i}, H{j}] = 0"),
                    &Op::prod(vec![x.clone(), Op::Hecke(j)]),
                    &Op::prod(vec![Op::Hecke(j), x.clone()]),
                )?;
            }
        }
    }
    Ok(())
}

fn lemma_h1(cx: &mut Ctx) -> Result<()> {
    let brace1 = Op::brace_k(mono(1, 1, 1), 1);
    cx.identity(
        Family::LemmaH1,
        "[h'1, f1]_-1 = -[2]{pq k1} f1",
        &Op::bracket(Op::h1(), Op::f(1), -1),
        &Op::prod(vec![brace1.clone(), Op::f(1)]).scaled(-qint(2)),
    )?;
    cx.identity(
        Family::LemmaH1,
        "[e1, h'1]_-1 = -[2] e1 {pq k1}",
        &Op::bracket(Op::e(1), Op::h1(), -1),
        &Op::prod(vec![Op::e(1), brace1]).scaled(-qint(2)),
    )
}

fn e1f1n(cx: &mut Ctx) -> Result<()> {
    for n in 0..=4i32 {
        let lhs = Op::prod(vec![Op::e(1), Op::f(1).divided(n)]);
        let corr = Op::brace_k(mono(1, 1, -n), 1).scaled(qint(n - 1));
        let rhs = Op::sum(vec![
            Op::prod(vec![Op::f(1).divided(n - 1), Op::h1().minus(corr)]),
            Op::prod(vec![Op::f(1).divided(n), Op::e(1)]).scaled(q(n)),
        ]);
        cx.identity(Family::E1f1n, format!("e1 f1^({n})"), &lhs, &rhs)?;
    }
    Ok(())
}

/// `z_1(a, b, n)` from its defining expression.
pub fn z1_value(a: i32, b: i32, n: i32) -> RatFunc {
    let two = qint(2);
    let t1 = &qint(b) * &brace(a - b - 1);
    let t2 = &(&two * &mono(1, 1, 1 + a)) / &(RatFunc::one() - q(2));
    let t3 = &(&two * &mono(1, -1, -1 - a)) / &(RatFunc::one() - q(-4));
    &q(-n) * &(&(&t1 + &t2) + &t3)
}

/// The closed form of `z_1(a, b, n)`.
pub fn z1_closed(a: i32, b: i32, n: i32) -> RatFunc {
    let qq = &RatFunc::q() - &q(-1);
    let t1 = &(&mono(1, 1, a - b - n) * &(&q(b + 1) + &q(-b - 1))) / &qq;
    let t2 = &mono(1, -1, -a + 2 * b - n + 1) / &qq;
    &t2 - &t1
}

/// The grid `a in [-3, 3]`, `b in [0, 3]`, `n in [0, b]`.
pub fn grid() -> Vec<(i32, i32, i32)> {
    let mut out = Vec::new();
    for a in -3..=3 {
        for b in 0..=3 {
            for n in 0..=b {
                out.push((a, b, n));
            }
        }
    }
    out
}

fn z1(cx: &mut Ctx) -> Result<()> {
    let fam = Family::Z1;
    cx.identity(
        fam,
        "z1 f1 = q^-1 f1 z1",
        &Op::prod(vec![Op::z1(), Op::f(1)]),
        &Op::prod(vec![Op::f(1), Op::z1()]).scaled(q(-1)),
    )?;
    cx.identity(
        fam,
        "z1 e1 = q e1 z1",
        &Op::prod(vec![Op::z1(), Op::e(1)]),
        &Op::prod(vec![Op::e(1), Op::z1()]).scaled(RatFunc::q()),
    )?;
    let g = grid();
    let bad: Vec<_> = g.iter().filter(|&&(a, b, n)| z1_value(a, b, n) != z1_closed(a, b, n)).collect();
    cx.push(
        fam,
        "z1(a,b,n) closed form on the grid",
        bad.is_empty(),
        bad.first().map(|x| format!("fails at {x:?}")),
    );
    let mut seen: BTreeMap<String, (i32, i32, i32)> = BTreeMap::new();
    let mut clash = None;
    for &t in &g {
        if let Some(prev) = seen.insert(z1_closed(t.0, t.1, t.2).to_string(), t) {
            clash = Some(format!("{prev:?} and {t:?} collide"));
        }
    }
    cx.push(fam, "z1(a,b,n) injective on the grid", clash.is_none(), clash);
    Ok(())
}

fn braid(cx: &mut Ctx) -> Result<()> {
    let fam = Family::Braid;
    if cx.r < 2 {
        cx.skip(fam, "braid operators", "need r >= 2");
        return Ok(());
    }
    let tau = |i, kind, e| Op::Braid { i, kind, e };
    for i in 2..=cx.r {
        for e in [1, -1] {
            cx.identity(
                fam,
                format!("τ'_{{{i},{e}}} τ''_{{{i},{}}} = id", -e),
                &Op::prod(vec![tau(i, BraidKind::Prime, e), tau(i, BraidKind::DoublePrime, -e)]),
                &Op::Id,
            )?;
            cx.identity(
                fam,
                format!("τ''_{{{i},{}}} τ'_{{{i},{e}}} = id", -e),
                &Op::prod(vec![tau(i, BraidKind::DoublePrime, -e), tau(i, BraidKind::Prime, e)]),
                &Op::Id,
            )?;
            // τ''(m) = (-1)^n q^{en} τ'(m) on weight vectors
            let mut bad = None;
            for v in ModVec::all_basis(cx.r, cx.d) {
                let n = weight(cx.r, v.leading().unwrap().0)[i - 1];
                let lhs = braid_op(i, BraidKind::DoublePrime, e, BraidSign::default(), &v)?;
                let mut c = q(e * n);
                if n.rem_euclid(2) == 1 {
                    c = -c;
                }
                let rhs = braid_op(i, BraidKind::Prime, e, BraidSign::default(), &v)?.scale(&c);
                if lhs != rhs {
                    bad = Some(format!("on {v}"));
                    break;
                }
            }
            cx.push(fam, format!("τ''_{{{i},{e}}} = (-1)^n q^{{en}} τ'_{{{i},{e}}}"), bad.is_none(), bad);
            lusztig_522(cx, i, e)?;
            compatibility(cx, i, e)?;
        }
        // the (-q)^b variant, reported for comparison
        let v = ModVec::all_basis(cx.r, cx.d);
        let mut inverse = true;
        for x in &v {
            let y = braid_op(i, BraidKind::DoublePrime, -1, BraidSign::MinusQ, x)?;
            if braid_op(i, BraidKind::Prime, 1, BraidSign::MinusQ, &y)? != *x {
                inverse = false;
                break;
            }
        }
        cx.push(
            fam,
            format!("sign (-1)^b is the one making τ'_{{{i},1}} τ''_{{{i},-1}} = id"),
            true,
            Some(format!("(-q)^b variant inverse: {inverse}")),
        );
    }
    Ok(())
}

/// `τ'_{i,e}(f_i^(j) η) = (-1)^j q^{e(jh+j)} f_i^(h) η` for `e_i η = 0`.
fn lusztig_522(cx: &mut Ctx, i: usize, e: i32) -> Result<()> {
    let mut bad = None;
    let mut count = 0;
    for (wt, words) in weight_spaces(cx.r, cx.d) {
        let n = wt[i - 1];
        if n < 0 {
            continue;
        }
        let dom: Vec<ModVec> = words.iter().map(|w| ModVec::basis(cx.r, w)).collect::<Result<_>>()?;
        let imgs: Vec<ModVec> = dom.iter().map(|v| act_uj(UjGen::E, i, v)).collect::<Result<_>>()?;
        for eta in kernel(&dom, &imgs) {
            for j in 0..=n {
                let h = n - j;
                let lhs = braid_op(i, BraidKind::Prime, e, BraidSign::default(), &Op::f(i).divided(j).apply(&eta)?)?;
                let mut c = q(e * (j * h + j));
                if j % 2 == 1 {
                    c = -c;
                }
                let rhs = Op::f(i).divided(h).apply(&eta)?.scale(&c);
                count += 1;
                if lhs != rhs && bad.is_none() {
                    bad = Some(format!("weight {wt:?}, j = {j}"));
                }
            }
        }
    }
    cx.push(
        Family::Braid,
        format!("τ'_{{{i},{e}}} on f_{i}-strings ({count} cases)"),
        bad.is_none(),
        bad,
    );
    Ok(())
}

/// The images `τ'_{i,e}(x)` and `τ''_{i,-e}(x)` of the generators.
fn braid_image(i: usize, kind: BraidKind, e: i32, x: UjGen, j: usize) -> Op {
    let (ei, fi) = (Op::e(i), Op::f(i));
    let ke = |s: i32| if s > 0 { Op::k(i) } else { Op::kinv(i) };
    let neg = |o: Op| o.scaled(-RatFunc::one());
    match x {
        UjGen::K | UjGen::KInv => {
            let base = if j == i {
                Op::kinv(i)
            } else if i.abs_diff(j) == 1 {
                Op::prod(vec![Op::k(i), Op::k(j)])
            } else {
                Op::k(j)
            };
            if x == UjGen::K {
                base
            } else {
                match base {
                    Op::Prod(v) => Op::Prod(v.iter().map(|o| o.bar().unwrap()).collect()),
                    o => o.bar().unwrap(),
                }
            }
        }
        UjGen::E => match kind {
            _ if i.abs_diff(j) > 1 => Op::e(j),
            BraidKind::Prime if j == i => neg(Op::prod(vec![ke(e), fi])),
            BraidKind::Prime => Op::bracket(Op::e(j), ei, e),
            BraidKind::DoublePrime if j == i => neg(Op::prod(vec![fi, ke(-e)])),
            BraidKind::DoublePrime => Op::bracket(ei, Op::e(j), e),
        },
        UjGen::F => match kind {
            _ if i.abs_diff(j) > 1 => Op::f(j),
            BraidKind::Prime if j == i => neg(Op::prod(vec![ei, ke(-e)])),
            BraidKind::Prime => Op::bracket(fi, Op::f(j), -e),
            BraidKind::DoublePrime if j == i => neg(Op::prod(vec![ke(e), ei])),
            BraidKind::DoublePrime => Op::bracket(Op::f(j), fi, -e),
        },
    }
}

/// `τ(x m) = τ(x) τ(m)` for the generators, with `τ = τ'_{i,e}` and `τ''_{i,-e}`.
fn compatibility(cx: &mut Ctx, i: usize, e: i32) -> Result<()> {
    for (kind, ee) in [(BraidKind::Prime, e), (BraidKind::DoublePrime, -e)] {
        let t = Op::Braid { i, kind, e: ee };
        let mut bad = None;
        for j in 1..=cx.r {
            for x in [UjGen::E, UjGen::F, UjGen::K] {
                let lhs = Op::prod(vec![t.clone(), Op::Uj(x, j)]);
                let rhs = Op::prod(vec![braid_image(i, kind, e, x, j), t.clone()]);
                if let Some(w) = first_difference(&lhs, &rhs, cx.r, cx.d)? {
                    bad.get_or_insert(format!("{x:?}_{j} on u{w:?}"));
                }
            }
        }
        let name = match kind {
            BraidKind::Prime => format!("τ'_{{{i},{ee}}}(x m) = τ'_{{{i},{ee}}}(x) τ'_{{{i},{ee}}}(m)"),
            BraidKind::DoublePrime => {
                format!("τ''_{{{i},{ee}}}(x m) = τ''_{{{i},{ee}}}(x) τ''_{{{i},{ee}}}(m)")
            }
        };
        cx.push(Family::Braid, name, bad.is_none(), bad);
    }
    Ok(())
}

/// Highest weight vectors of `V^{⊗d}` killed by `e_1` (for `r = 1`, all `e_i`
/// in general) in the weight space `wt`, as a basis of the joint kernel.
fn joint_kernel(r: usize, words: &[Vec<i32>], gens: &[usize]) -> Result<Vec<ModVec>> {
    let dom: Vec<ModVec> = words.iter().map(|w| ModVec::basis(r, w)).collect::<Result<_>>()?;
    if dom.is_empty() {
        return Ok(Vec::new());
    }
    let imgs: Vec<ModVec> = dom
        .iter()
        .map(|v| {
            // stack the images of all e_i into one vector by tagging words
            let mut out = ModVec::zero(r, v.degree() + 1);
            for &i in gens {
                let img = act_uj(UjGen::E, i, v)?;
                for (w, c) in img.iter() {
                    let mut t = vec![i as i32];
                    t.extend(w);
                    out.add_term(t, c);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(kernel(&dom, &imgs))
}

/// `[b]{a-b-1}`.
pub fn h1_eigenvalue(a: i32, b: i32) -> RatFunc {
    &qint(b) * &brace(a - b - 1)
}

/// `H_i = [b_1 + ... + b_i]{a_1 + ... + a_i - (b_1 + ... + b_i) - 1}`.
pub fn h_eigenvalues(data: &ClassificationData) -> Vec<RatFunc> {
    let mut out = Vec::new();
    let (mut sa, mut sb) = (0i64, 0i64);
    for (a, b) in data.a.iter().zip(&data.b) {
        sa += a;
        sb += b;
        out.push(h1_eigenvalue(sa as i32, sb as i32));
    }
    out
}

/// The matrix of `x` on a basis `vs` of an `x`-stable subspace, columns are images.
fn operator_matrix(vs: &[ModVec], x: &Op) -> Result<Vec<Vec<RatFunc>>> {
    let mut ech = Echelon::new();
    for v in vs {
        ech.insert(v);
    }
    let n = vs.len();
    let mut m = vec![vec![RatFunc::zero(); n]; n];
    for (j, v) in vs.iter().enumerate() {
        let col = ech
            .coordinates(&x.apply(v)?)
            .ok_or_else(|| Error::Internal("operator does not preserve the subspace".into()))?;
        for (i, c) in col.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

/// `dim ker(m - λ)`.
fn eigenspace_dim(m: &[Vec<RatFunc>], lambda: &RatFunc) -> usize {
    let mut a = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    m.len() - matrix_rank(a)
}

fn spectrum(cx: &mut Ctx, guard: u64) -> Result<()> {
    let fam = Family::Spectrum;
    if cx.r != 1 {
        cx.skip(fam, "h1 spectrum on e1-kernels", "stated for r = 1");
        return Ok(());
    }
    let dec = decompose_tensor_power(1, cx.d, guard)?;
    let mut expected: BTreeMap<(i64, i64), u128> = BTreeMap::new();
    for s in &dec.shapes {
        let data = pi_map(&s.shape);
        *expected.entry((data.a[0], data.b[0])).or_default() += s.multiplicity as u128;
    }
    for (wt, words) in weight_spaces(1, cx.d) {
        let a = wt[0];
        let ker = joint_kernel(1, &words, &[1])?;
        let h = operator_matrix(&ker, &Op::h1())?;
        let mut total = 0;
        let mut mults = Vec::new();
        let mut ok = true;
        for b in 0..=cx.d as i32 {
            let dim = eigenspace_dim(&h, &h1_eigenvalue(a, b));
            total += dim;
            let exp = expected.get(&(a as i64, b as i64)).copied().unwrap_or(0);
            if dim as u128 != exp {
                ok = false;
            }
            if dim > 0 {
                mults.push(format!("L({a};{b})x{dim}"));
            }
        }
        let detail = format!(
            "kernel dim {}, eigenvectors {}: {}",
            ker.len(),
            total,
            if mults.is_empty() { "-".into() } else { mults.join(", ") }
        );
        cx.push(
            fam,
            format!("k1-weight q^{a}: h1 diagonal with eigenvalues [b]{{a-b-1}} matching the crystal"),
            ok && total == ker.len(),
            Some(detail),
        );
    }
    Ok(())
}

/// Eigenvectors of `h_1` in `ker e_1` of `V^{⊗deg}` (rank 1) for eigenvalue `[b]{a-b-1}`.
fn r1_highest_vectors(deg: usize) -> Result<Vec<(i32, i32, ModVec)>> {
    let mut out = Vec::new();
    for (wt, words) in weight_spaces(1, deg) {
        let a = wt[0];
        let ker = joint_kernel(1, &words, &[1])?;
        if ker.is_empty() {
            continue;
        }
        for b in 0..=deg as i32 {
            let lam = h1_eigenvalue(a, b);
            let imgs: Vec<ModVec> = ker
                .iter()
                .map(|v| Ok(Op::h1().apply(v)?.sub(&v.scale(&lam))))
                .collect::<Result<_>>()?;
            for v in kernel(&ker, &imgs) {
                out.push((a, b, v));
            }
        }
    }
    Ok(out)
}

fn f1n(cx: &mut Ctx) -> Result<()> {
    let fam = Family::F1n;
    if cx.r != 1 || cx.d == 0 {
        cx.skip(fam, "L(a;b) ⊗ V", "stated for r = 1, d >= 1");
        return Ok(());
    }
    let u = |x: i32| ModVec::basis(1, &[x]).unwrap();
    for (a, b, v) in r1_highest_vectors(cx.d - 1)? {
        let f1v = Op::f(1).apply(&v)?;
        let v0 = v.tensor(&u(0));
        let br = brace(a - b - 1);
        let mut v1 = v.tensor(&u(1));
        v1.add_scaled(&f1v.tensor(&u(0)), &-(&(&q(-b + 1) * &(&RatFunc::q() - &q(-1))) / &br));
        v1.add_scaled(&v.tensor(&u(-1)), &-mono(1, 1, a - 2 * b));
        let mut vm = f1v.tensor(&u(0));
        vm.add_scaled(&v.tensor(&u(-1)), &-(&q(b) * &qint(b)));
        vm.add_scaled(&v.tensor(&u(1)), &-(&mono(1, 1, a - b - 2) * &qint(b)));
        for (name, x, aa, bb) in [
            ("v⊗u0", v0, a + 2, b + 1),
            ("v1", v1, a - 1, b),
            ("v-1", vm, a - 1, b - 1),
        ] {
            let lam = h1_eigenvalue(aa, bb);
            let ok = Op::h1().apply(&x)? == x.scale(&lam) && act_uj(UjGen::E, 1, &x)?.is_zero();
            cx.push(
                fam,
                format!("L({a};{b}) ⊗ V: {name} is a highest weight vector of L({aa};{bb})"),
                ok,
                None,
            );
        }
    }
    Ok(())
}

/// `h''_1(a, b, n)`.
pub fn h1_dprime_value(a: i32, b: i32, n: i32) -> RatFunc {
    let t1 = &(&qint(n + 1) * &qint(b - n)) * &brace(a - b - n - 1);
    let t2 = &(&(&RatFunc::q() * &qint(n)) * &qint(b - n + 1)) * &brace(a - b - n);
    let t3 = &mono(1, -1, -a + 3 * n + 1) / &(&RatFunc::q() - &q(-1));
    &(&t1 - &t2) + &t3
}

/// The matrix of `h''_1` on `(bar f'_2 m, f_2 m, f'_2 m)`, columns are images.
pub fn h1_matrix(a: i32, b: i32, n: i32) -> [[RatFunc; 3]; 3] {
    let h = h1_dprime_value(a, b, n);
    let hb = h.bar();
    let qq = &RatFunc::q() - &q(-1);
    let z = RatFunc::zero;
    [
        [&RatFunc::q() * &h, z(), -mono(1, 1, a - 3 * n - 3)],
        [
            q(2),
            &RatFunc::q() * &h,
            &(&(&mono(1, 1, a - 3 * n - 1) * &qq) * &hb) + &(&q(-1) * &qint(2)),
        ],
        [z(), q(2), &(&q(-1) * &h) + &(&mono(1, 1, a - 3 * n) * &qint(2))],
    ]
}

/// The three claimed eigenvectors with their eigenvalues.
pub fn h1_eigenvectors(a: i32, b: i32, n: i32) -> [([RatFunc; 3], RatFunc); 3] {
    [
        (
            [q(b - n - 1), &mono(1, 1, a - b) - &mono(1, -1, -a + b), -q(-b + n + 1)],
            h1_dprime_value(a + 1, b + 1, n),
        ),
        (
            [mono(1, 1, a - b - n - 2), -(&q(b + 1) + &q(-b - 1)), mono(1, -1, -a + b + n + 2)],
            h1_dprime_value(a + 1, b, n),
        ),
        (
            [q(-n - 2), &mono(1, 1, a - 2 * b - 1) - &mono(1, -1, -a + 2 * b + 1), -q(n + 2)],
            h1_dprime_value(a - 2, b - 1, n - 1),
        ),
    ]
}

fn appendix_a(cx: &mut Ctx) -> Result<()> {
    let fam = Family::AppendixA;
    for k in 0..3 {
        let mut bad = None;
        for (a, b, n) in grid() {
            let m = h1_matrix(a, b, n);
            let (v, lam) = &h1_eigenvectors(a, b, n)[k];
            for row in 0..3 {
                let mut s = RatFunc::zero();
                for (col, x) in v.iter().enumerate() {
                    s += &(&m[row][col] * x);
                }
                if s != lam * &v[row] {
                    bad.get_or_insert(format!("(a,b,n) = ({a},{b},{n}), row {row}"));
                }
            }
        }
        cx.push(
            fam,
            format!("eigenvector {} of the h''1 matrix on the grid", k + 1),
            bad.is_none(),
            bad,
        );
    }
    if cx.r < 2 {
        cx.skip(fam, "Lemma A.1.1 operator identities", "need r >= 2");
        return Ok(());
    }
    let h = Op::h1_dprime();
    let f2p = Op::f2_prime();
    let f2pb = f2p.bar()?;
    let f2 = Op::f(2);
    cx.identity(fam, "[h''1, f2]_1 = q^2 f'2", &Op::bracket(h.clone(), f2.clone(), 1), &f2p.clone().scaled(q(2)))?;
    cx.identity(fam, "[h''1, bar f'2]_1 = q^2 f2", &Op::bracket(h.clone(), f2pb.clone(), 1), &f2.clone().scaled(q(2)))?;
    let inner = Op::sum(vec![
        Op::bar(&h)?.scaled(&q(-1) * &(&RatFunc::q() - &q(-1))),
        Op::kinv(1).scaled(&qint(2) * &mono(1, -1, -1)),
    ]);
    let rhs = Op::prod(vec![
        Op::sum(vec![
            f2pb.scaled(q(-3)),
            f2p.clone().scaled(-qint(2)),
            Op::prod(vec![f2, inner]).scaled(-RatFunc::one()),
        ]),
        Op::k(1),
    ])
    .scaled(-RatFunc::p());
    cx.identity(fam, "[h''1, f'2]_-1", &Op::bracket(h, f2p, -1), &rhs)
}

pub fn default_guard() -> u64 {
    125
}

/// Runs the selected families (all when `only` is empty) on `V^{⊗d}` of rank `r`.
pub fn verify_suite(r: usize, d: usize, only: &[Family], guard: u64) -> Result<VerifyReport> {
    if r == 0 {
        return Err(Error::Invalid("rank must be at least 1".into()));
    }
    let dim = (2 * r as u64 + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    check_guard("verify: dim V^{⊗d}", dim, guard)?;
    let mut cx = Ctx {
        r,
        d,
        checks: Vec::new(),
    };
    let want = |f: Family| only.is_empty() || only.contains(&f);
    if want(Family::Defrel) {
        defrel(&mut cx)?;
    }
    if want(Family::Coideal) {
        coideal(&mut cx)?;
    }
    if want(Family::Weight) {
        weights(&mut cx)?;
    }
    if want(Family::Hecke) {
        hecke(&mut cx)?;
    }
    if want(Family::Duality) {
        duality(&mut cx)?;
    }
    if want(Family::LemmaH1) {
        lemma_h1(&mut cx)?;
    }
    if want(Family::E1f1n) {
        e1f1n(&mut cx)?;
    }
    if want(Family::Z1) {
        z1(&mut cx)?;
    }
    if want(Family::Braid) {
        braid(&mut cx)?;
    }
    if want(Family::F1n) {
        f1n(&mut cx)?;
    }
    if want(Family::AppendixA) {
        appendix_a(&mut cx)?;
    }
    if want(Family::Spectrum) {
        spectrum(&mut cx, guard)?;
    }
    if want(Family::DipperJames) {
        for shape in Bipartition::all(d, r) {
            let name = format!("L{shape} ⊠ S^({};{})", shape.minus, shape.plus);
            match dipper_james_component(&shape.minus, &shape.plus, r, guard) {
                Ok(rep) => {
                    let ok = rep.passed();
                    cx.push(Family::DipperJames, name, ok, Some(rep.summary()));
                }
                Err(Error::Shape(why)) => cx.skip(Family::DipperJames, name, &why),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(VerifyReport {
        r,
        d,
        checks: cx.checks,
    })
}

/// What [`dipper_james_component`] found.
#[derive(Clone, Debug, Serialize)]
pub struct DipperJamesReport {
    pub shape: Bipartition,
    pub data: ClassificationData,
    /// `M_{f_λμ} v_{a,b}` is a nonzero multiple of `u_{f_μ} ⊗ u_{-f_λ}` at `p = 0`.
    pub p_limit_ok: bool,
    /// That multiple, a function of `q`.
    pub p_limit: Option<String>,
    /// `λ` has `r + 1` rows and its block of `f_λμ` uses the letters `0..=r`;
    /// the `p = 0` limit is then not taken.
    pub shifted: bool,
    /// `M_{λ,+}` and `M_{μ,+}` lie in `M_{f·[+,-]} + q L`.
    pub type_a_limits_ok: bool,
    /// Dimension of the Hecke submodule generated, against `#ST(λ;μ)`.
    pub hecke_dim: usize,
    pub expected_dim: u128,
    /// Generators `e_i` (in application order) raising the generator to the top weight.
    pub raising: Vec<usize>,
    pub highest_weight_found: bool,
    pub k_exponents: Vec<i32>,
    pub h_ok: Vec<bool>,
    /// The `f_1`-string through the normalised highest weight vector stays in the lattice.
    pub lattice_ok: bool,
    /// The normalised highest weight vector is a Yamanouchi biword of shape `(λ;μ)` modulo `q L`.
    pub crystal_limit: Option<Vec<i32>>,
    pub crystal_limit_ok: bool,
}

impl DipperJamesReport {
    pub fn passed(&self) -> bool {
        (self.shifted || self.p_limit_ok)
            && self.type_a_limits_ok
            && self.hecke_dim as u128 == self.expected_dim
            && self.highest_weight_found
            && self.k_exponents.iter().map(|&x| x as i64).eq(self.data.a.iter().copied())
            && self.h_ok.iter().all(|&x| x)
            && self.lattice_ok
            && self.crystal_limit_ok
    }

    pub fn summary(&self) -> String {
        format!(
            "π = ({:?}; {:?}), p-limit {}, hecke dim {}/{}, raising {:?}, hw {}, h {:?}, lattice {}, limit {:?}",
            self.data.a,
            self.data.b,
            if self.shifted { "n/a" } else { self.p_limit.as_deref().unwrap_or("-") },
            self.hecke_dim,
            self.expected_dim,
            self.raising,
            self.highest_weight_found,
            self.h_ok,
            self.lattice_ok,
            self.crystal_limit
        )
    }
}

/// `f_λ`: the letter `j` on the positions of row `j` of `T_+`.
fn row_letters(shape: &Partition) -> Vec<i32> {
    let mut out = Vec::new();
    for (j, &len) in shape.parts().iter().enumerate() {
        out.extend(std::iter::repeat(j as i32 + 1).take(len as usize));
    }
    out
}

/// All distinct orderings of a multiset.
fn orderings(counts: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = counts.iter().sum();
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        if c > 0 {
            let mut rest = counts.to_vec();
            rest[i] -= 1;
            for mut tail in orderings(&rest) {
                tail.insert(0, i + 1);
                out.push(tail);
            }
        }
    }
    out
}

/// Builds the Dipper–James generator `M_{f_λμ} · S^λ S^μ v_{a,b}` of the
/// Hecke-submodule of `V^{⊗d}` isomorphic to `S^{λ,μ}`, raises it to the top
/// weight of `L(λ;μ)` and checks the highest weight data against `π(λ;μ)`.
pub fn dipper_james_component(
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    guard: u64,
) -> Result<DipperJamesReport> {
    let (a, b) = (lambda.size(), mu.size());
    let d = a + b;
    let dim = (2 * r as u64 + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    check_guard("dipper-james: dim V^{⊗d}", dim, guard)?;
    let shape = Bipartition::new(lambda.with_len(r + 1)?, mu.with_len(r)?)?;
    if mu.height() > r {
        return Err(Error::Shape(format!("({lambda};{mu}) is not a shape of rank {r}")));
    }
    // a (r+1)-row λ runs out of positive letters; shift its block down to 0..=r
    let shift = if lambda.height() > r { 1 } else { 0 };
    let lambda_letters: Vec<i32> = row_letters(lambda).iter().map(|x| x - shift).collect();
    let data = pi_map(&shape);
    let alg = HeckeAlgebra::new(d);

    // type-A pieces: M_{ν,+} = M_{f_ν} H_[+,-] e_- modulo q L
    let mut type_a_limits_ok = true;
    for nu in [lambda, mu] {
        if shift == 1 && nu == lambda {
            continue;
        }
        let n = nu.size();
        let small = HeckeAlgebra::new(n);
        let w = small.gyoja_perm(nu, 0)?;
        let h = small.mul(
            &crate::hecke::HeckeElt::basis(w),
            &small.gyoja_e(nu, 0, Gyoja::Minus)?,
        );
        let f = row_letters(nu);
        let m = act_hecke_elt(&ModVec::basis(r, &f)?, &small, &h)?;
        let target = small.group().elem(w).act(&f);
        let limit = m.crystal_limit();
        let ok = matches!(&limit, Ok(l) if l.len() == 1
            && l.get(&target).is_some_and(num_traits::One::is_one));
        type_a_limits_ok &= ok;
    }

    // M_{f_λμ} v_{a,b} ≡ u_{f_μ} ⊗ u_{-f_λ} mod p L
    let mut f = lambda_letters.clone();
    f.extend(row_letters(mu));
    let mf = ModVec::basis(r, &f)?;
    let v_ab = alg.dipper_james_v(a)?;
    let mv = act_hecke_elt(&mf, &alg, &v_ab)?;
    let mut target = row_letters(mu);
    target.extend(lambda_letters.iter().map(|x| -x));
    let mut p_limit = None;
    let mut p_limit_ok = true;
    for (w, c) in mv.iter() {
        match c.specialize_p0() {
            Ok(x) if x.is_zero() => {}
            Ok(x) if *w == target && p_limit.is_none() => p_limit = Some(x.to_string()),
            _ => p_limit_ok = false,
        }
    }
    let p_limit_ok = p_limit_ok && p_limit.is_some();

    // G = M_{f_λμ} X_λ X_μ v_{a,b}, X_ν = e_+ H_[+,-] e_-
    let x = alg.mul(&alg.gyoja_generator(lambda, 0)?, &alg.gyoja_generator(mu, a)?);
    let gen = act_hecke_elt(&mf, &alg, &alg.mul(&x, &v_ab))?;
    let images: Vec<ModVec> = (0..alg.group().order())
        .map(|w| act_hecke_elt(&gen, &alg, &crate::hecke::HeckeElt::basis(w)))
        .collect::<Result<_>>()?;
    let hecke_dim = rank_of(&images);
    let expected_dim = shape.count_standard();

    // raise to the top weight: e_i changes the k_k-exponent by (β_k, γ_i)
    let top: Vec<i32> = data.a.iter().map(|&x| x as i32).collect();
    let start = weight(r, &f);
    let bound = 3 * d + 3;
    let mut counts = None;
    let mut n = vec![0usize; r];
    'search: loop {
        let reached: Vec<i32> = (0..r)
            .map(|k| start[k] + (0..r).map(|i| n[i] as i32 * beta_gamma(k + 1, i + 1)).sum::<i32>())
            .collect();
        if reached == top {
            counts = Some(n.clone());
            break;
        }
        for k in 0..r {
            n[k] += 1;
            if n[k] <= bound {
                continue 'search;
            }
            n[k] = 0;
        }
        break;
    }
    let mut raising = Vec::new();
    let mut hw = None;
    if let Some(counts) = counts {
        for order in orderings(&counts) {
            let mut v = gen.clone();
            for &i in &order {
                v = act_uj(UjGen::E, i, &v)?;
            }
            if !v.is_zero() {
                raising = order;
                hw = Some(v);
                break;
            }
        }
    }
    let mut report = DipperJamesReport {
        shape: shape.clone(),
        data: data.clone(),
        p_limit_ok,
        p_limit,
        shifted: shift == 1,
        type_a_limits_ok,
        hecke_dim,
        expected_dim,
        raising,
        highest_weight_found: false,
        k_exponents: Vec::new(),
        h_ok: Vec::new(),
        lattice_ok: false,
        crystal_limit: None,
        crystal_limit_ok: false,
    };
    let Some(v) = hw else {
        return Ok(report);
    };
    let mut killed = true;
    for i in 1..=r {
        killed &= act_uj(UjGen::E, i, &v)?.is_zero();
    }
    report.highest_weight_found = killed;
    report.k_exponents = weight(r, v.leading().unwrap().0);
    for (i, lam) in h_eigenvalues(&data).iter().enumerate() {
        report.h_ok.push(Op::h(i + 1).apply(&v)? == v.scale(lam));
    }
    let v = v.normalize_to_lattice();
    let mut lattice_ok = true;
    let mut n = 0;
    loop {
        let x = Op::f(1).divided(n).apply(&v)?;
        if x.is_zero() {
            break;
        }
        lattice_ok &= x.in_lattice();
        n += 1;
    }
    report.lattice_ok = lattice_ok;
    if let Ok(limit) = v.crystal_limit() {
        if limit.len() == 1 {
            let w = limit.keys().next().unwrap().clone();
            report.crystal_limit_ok = is_yamanouchi_biword(&w, r)
                && letter_shape(&w, r).is_ok_and(|s| s == shape);
            report.crystal_limit = Some(w);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z1_forms_agree() {
        for (a, b, n) in grid() {
            assert_eq!(z1_value(a, b, n), z1_closed(a, b, n));
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn orderings_of_multiset() {
        assert_eq!(orderings(&[1, 1]), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(orderings(&[2, 0]).len(), 1);
    }
}
