//! Littlewood–Richardson coefficients: type A by skew tableaux and by crystal
//! highest weights, the rule for `L(λ) ⊗ L(μ)` restricted to `Uʲ`, and
//! branching from `U` to `Uʲ`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jcrystal::{check_guard, is_yamanouchi_biword, letter_shape};
use crate::tableaux::{Bipartition, Bitableau, Partition, Tableau};

/// Whether every prefix of `word` has at least as many `i` as `i + 1`, for
/// letters `1..=n`.
pub fn is_lattice_word(word: &[i32], n: usize) -> bool {
    let mut counts = vec![0usize; n + 2];
    for &x in word {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

fn fits(p: &Partition, n: usize) -> bool {
    p.height() <= n
}

/// `LR^μ_{η,ξ}(n)`: semistandard skew tableaux of shape `μ/η` in letters
/// `1..=n` with content `ξ` whose ME reading is a lattice word.
pub fn lr_type_a(eta: &Partition, xi: &Partition, mu: &Partition, n: usize) -> Result<u64> {
    let len = eta.len().max(mu.len()).max(xi.len());
    let (eta, mu) = (eta.with_len(len)?, mu.with_len(len)?);
    if !mu.contains(&eta) {
        return Err(Error::Shape(format!("{eta} is not contained in {mu}")));
    }
    if !fits(xi, n) || !fits(&mu, n) || eta.size() + xi.size() != mu.size() {
        return Ok(0);
    }
    // cells in ME order: rows top to bottom, each right to left
    let mut cells = Vec::new();
    for i in 0..len {
        for j in (eta.part(i)..mu.part(i)).rev() {
            cells.push((i, j as usize));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..len).map(|i| vec![0; mu.part(i) as usize]).collect();
    let content: Vec<usize> = (0..=n).map(|k| if k == 0 { 0 } else { xi.part(k - 1) as usize }).collect();
    let mut counts = vec![0usize; n + 1];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        eta: &Partition,
        grid: &mut Vec<Vec<usize>>,
        content: &[usize],
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let n = counts.len() - 1;
        let mut total = 0;
        for x in 1..=n {
            if counts[x] == content[x] || (x > 1 && counts[x] + 1 > counts[x - 1]) {
                continue;
            }
            // rows weakly increase: the cell to the right is already filled
            if j + 1 < grid[i].len() && x > grid[i][j + 1] {
                continue;
            }
            // columns strictly increase against the skew cell above
            if i > 0 && j >= eta.part(i - 1) as usize && x <= grid[i - 1][j] {
                continue;
            }
            grid[i][j] = x;
            counts[x] += 1;
            total += rec(k + 1, cells, eta, grid, content, counts);
            counts[x] -= 1;
        }
        grid[i][j] = 0;
        total
    }
    Ok(rec(0, &cells, &eta, &mut grid, &content, &mut counts))
}

/// [`lr_type_a`], zero when `η ⊄ μ`.
fn lr_a(eta: &Partition, xi: &Partition, mu: &Partition, n: usize) -> Result<u64> {
    match lr_type_a(eta, xi, mu, n) {
        Err(Error::Shape(_)) => Ok(0),
        x => x,
    }
}

/// `LR^μ_{η,ξ}(n)` as the number of highest weight elements of weight `μ` in
/// `B(η) ⊗ B(ξ)`, both embedded in words by the ME reading.
pub fn lr_type_a_oracle(eta: &Partition, xi: &Partition, mu: &Partition, n: usize) -> u64 {
    if !fits(eta, n) || !fits(xi, n) || !fits(mu, n) || eta.size() + xi.size() != mu.size() {
        return 0;
    }
    let alphabet: Vec<i32> = (1..=n as i32).collect();
    let left = Tableau::enumerate_sst(eta, &alphabet);
    let right = Tableau::enumerate_sst(xi, &alphabet);
    let target: Vec<usize> = (0..n).map(|k| mu.part(k) as usize).collect();
    let mut count = 0;
    for a in &left {
        let wa = a.read_me();
        if !is_lattice_word(&wa, n) {
            continue;
        }
        for b in &right {
            let mut w = wa.clone();
            w.extend(b.read_me());
            if is_lattice_word(&w, n) {
                let mut c = vec![0usize; n];
                for &x in &w {
                    c[x as usize - 1] += 1;
                }
                count += (c == target) as u64;
            }
        }
    }
    count
}

/// A query `LR^ν_{λ,μ}(r)`.
#[derive(Clone, Debug, Serialize)]
pub struct LrQuery {
    pub lambda: Bipartition,
    pub mu: Partition,
    pub nu: Bipartition,
    pub r: usize,
}

impl LrQuery {
    pub fn new(lambda: Bipartition, mu: Partition, nu: Bipartition) -> Result<Self> {
        let r = lambda.rank();
        if nu.rank() != r {
            return Err(Error::Shape(format!("{lambda} and {nu} have different ranks")));
        }
        if r == 0 {
            return Err(Error::Invalid("rank must be at least 1".into()));
        }
        let mu = mu.with_len(2 * r + 1)?;
        Ok(Self { lambda, mu, nu, r })
    }
}

/// The multiplicity of `L(ν)` in `L(λ) ⊗ L(μ)`:
/// `Σ_{η ⊆ μ, ξ} LR^{ν⁻}_{η,λ⁻}(r+1) LR^μ_{η,ξ}(2r+1) LR^{ν⁺}_{λ⁺,ξ}(r)`.
pub fn lr_j(q: &LrQuery) -> Result<u64> {
    let r = q.r;
    if q.nu.size() != q.lambda.size() + q.mu.size() {
        return Ok(0);
    }
    let mut total = 0;
    for k in 0..=q.mu.size() {
        for eta in Partition::all(k, r + 1) {
            if !q.mu.with_len(2 * r + 1)?.contains(&eta.with_len(2 * r + 1)?) {
                continue;
            }
            let a = lr_a(&eta, &q.lambda.minus, &q.nu.minus, r + 1)?;
            if a == 0 {
                continue;
            }
            for xi in Partition::all(q.mu.size() - k, r) {
                let b = lr_a(&eta, &xi, &q.mu, 2 * r + 1)?;
                if b == 0 {
                    continue;
                }
                total += a * b * lr_a(&q.lambda.plus, &xi, &q.nu.plus, r)?;
            }
        }
    }
    Ok(total)
}

/// Yamanouchi biwords in `B(λ) ⊗ B(μ)` counted by shape: `B(λ)` is embedded by
/// the reading `R`, `B(μ)` by the ME reading in letters `-r..=r`.
pub fn lr_j_oracle_all(lambda: &Bipartition, mu: &Partition, guard: u64) -> Result<BTreeMap<Bipartition, u64>> {
    let r = lambda.rank();
    let mu = mu.with_len(2 * r + 1)?;
    let alphabet: Vec<i32> = (-(r as i32)..=r as i32).collect();
    let left = Bitableau::enumerate_sst(lambda);
    let right = Tableau::enumerate_sst(&mu, &alphabet);
    check_guard(
        "lr oracle: |B(λ)| |B(μ)|",
        (left.len() as u64).saturating_mul(right.len() as u64),
        guard,
    )?;
    let counts = left
        .par_iter()
        .map(|a| {
            let mut out: BTreeMap<Bipartition, u64> = BTreeMap::new();
            let wa = a.reading();
            for b in &right {
                let mut w = wa.clone();
                w.extend(b.read_me());
                if is_yamanouchi_biword(&w, r) {
                    *out.entry(letter_shape(&w, r)?).or_default() += 1;
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeMap::new();
    for m in counts {
        for (k, v) in m {
            *out.entry(k).or_default() += v;
        }
    }
    Ok(out)
}

pub fn lr_j_oracle(q: &LrQuery, guard: u64) -> Result<u64> {
    Ok(lr_j_oracle_all(&q.lambda, &q.mu, guard)?
        .get(&q.nu)
        .copied()
        .unwrap_or(0))
}

/// All nonzero `LR^ν_{λ,μ}(r)` by the rule, keyed by `ν`.
pub fn lr_j_all(lambda: &Bipartition, mu: &Partition) -> Result<BTreeMap<Bipartition, u64>> {
    let r = lambda.rank();
    let mut out = BTreeMap::new();
    for nu in Bipartition::all(lambda.size() + mu.size(), r) {
        let c = lr_j(&LrQuery::new(lambda.clone(), mu.clone(), nu.clone())?)?;
        if c > 0 {
            out.insert(nu, c);
        }
    }
    Ok(out)
}

/// Multiplicity of `L(ν)` in `L(μ)` restricted to `Uʲ`: `LR^μ_{ν⁻,ν⁺}(2r+1)`.
pub fn branching(mu: &Partition, nu: &Bipartition) -> Result<u64> {
    let r = nu.rank();
    let mu = mu.with_len(2 * r + 1)?;
    if nu.size() != mu.size() {
        return Ok(0);
    }
    lr_a(&nu.minus, &nu.plus, &mu, 2 * r + 1)
}

/// All nonzero branching multiplicities of `L(μ)`.
pub fn branching_all(mu: &Partition, r: usize) -> Result<BTreeMap<Bipartition, u64>> {
    let mut out = BTreeMap::new();
    for nu in Bipartition::all(mu.size(), r) {
        let c = branching(mu, &nu)?;
        if c > 0 {
            out.insert(nu, c);
        }
    }
    Ok(out)
}

/// Branching by counting Yamanouchi biwords among the ME readings of `SST(μ)`.
pub fn branching_by_biwords(mu: &Partition, r: usize, guard: u64) -> Result<BTreeMap<Bipartition, u64>> {
    lr_j_oracle_all(&Bipartition::new(Partition::empty(r + 1), Partition::empty(r))?, mu, guard)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(lr_type_a(&p("2,1"), &p(""), &p("2,1"), 3).unwrap(), 1);
        assert_eq!(lr_type_a(&p("1,0,0"), &p("1,1,0"), &p("2,1,0"), 3).unwrap(), 1);
        assert_eq!(lr_type_a(&p("2,1"), &p("2,1"), &p("3,2,1"), 3).unwrap(), 2);
        assert!(lr_type_a(&p("2"), &p("1"), &p("1,1,1"), 3).is_err());
    }

    #[test]
    fn type_a_agrees_with_oracle() {
        for n in 1..=3 {
            for a in 0..=3 {
                for b in 0..=3 - a {
                    for eta in Partition::all(a, n) {
                        for xi in Partition::all(b, n) {
                            for mu in Partition::all(a + b, n) {
                                let x = lr_type_a_oracle(&eta, &xi, &mu, n);
                                let y = if mu.contains(&eta) { lr_type_a(&eta, &xi, &mu, n).unwrap() } else { 0 };
                                assert_eq!(x, y, "{eta} {xi} {mu} n={n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_box_branches_into_both_halves() {
        let b = branching_all(&p("1,0,0"), 1).unwrap();
        let keys: Vec<String> = b.keys().map(|k| k.to_string()).collect();
        assert_eq!(keys, vec!["(0,0;1)", "(1,0;0)"]);
        assert_eq!(branching_by_biwords(&p("1"), 1, 1000).unwrap(), b);
    }
}
