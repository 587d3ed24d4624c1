//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use jcrystal::cells::left_cells;
use jcrystal::crystal::{reduce_half, Dir, Half, Word};
use jcrystal::graph::word_label;
use jcrystal::hecke::kl_suite;
use jcrystal::jcrystal::{
    apply, decompose_tensor_power, is_yamanouchi_biword, jop, operator_labels, reduce_int, tensor_rule_eval,
};
use jcrystal::lr::{branching_all, branching_by_biwords, lr_j_all, lr_j_oracle_all};
use jcrystal::tableaux::{pi_inverse, pi_map, Bipartition, Bitableau, ClassificationData, Partition, Tableau};
use jcrystal::verify::{verify_suite, Family, VerifyReport};

const GUARD: u64 = 1 << 30;

/// The grid of criteria 1–3.
fn grid() -> Vec<(usize, usize)> {
    let mut g: Vec<(usize, usize)> = (1..=2).flat_map(|r| (1..=4).map(move |d| (r, d))).collect();
    g.extend((1..=3).map(|d| (3, d)));
    g
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimensions() -> Outcome {
    let mut shapes = 0;
    for (r, d) in grid() {
        let dec = decompose_tensor_power(r, d, GUARD).map_err(|e| e.to_string())?;
        let mut total = 0u128;
        for s in &dec.shapes {
            total += s.sst_count as u128 * s.st_count;
            ensure(s.multiplicity as u128 == s.st_count, || {
                format!("r={r} d={d}: {} has {} components, #ST = {}", s.shape, s.multiplicity, s.st_count)
            })?;
            ensure(s.component_size == s.sst_count, || format!("r={r} d={d}: |component| ≠ |SST({})|", s.shape))?;
        }
        let expected = (2 * r as u128 + 1).pow(d as u32);
        ensure(total == expected, || format!("r={r} d={d}: Σ = {total}, expected {expected}"))?;
        // every shape of size d occurs
        ensure(dec.shapes.len() == Bipartition::all(d, r).len(), || format!("r={r} d={d}: missing shapes"))?;
        shapes += dec.shapes.len();
    }
    Ok(format!("{} (r,d) pairs, {shapes} shapes", grid().len()))
}

fn single_source() -> Outcome {
    let mut comps = 0;
    for (r, d) in grid() {
        let dec = decompose_tensor_power(r, d, GUARD).map_err(|e| e.to_string())?;
        for c in &dec.components {
            ensure(c.sources.len() == 1, || format!("r={r} d={d}: {} sources", c.sources.len()))?;
            ensure(is_yamanouchi_biword(&c.sources[0], r), || {
                format!("r={r} d={d}: source {} is not Yamanouchi", word_label(&c.sources[0]))
            })?;
        }
        comps += dec.components.len();
    }
    Ok(format!("{comps} components"))
}

fn operator_axioms() -> Outcome {
    let (mut pairs, mut splits) = (0u64, 0u64);
    for (r, d) in grid() {
        let ops = operator_labels(r);
        for w in Word::all(r, d) {
            for &op in &ops {
                if let Some(t) = apply(&w, op, Dir::F) {
                    ensure(apply(&t, op, Dir::E).as_ref() == Some(&w), || format!("ẽ f̃ ≠ id at {w:?} {op:?}"))?;
                    pairs += 1;
                }
                if let Some(t) = apply(&w, op, Dir::E) {
                    ensure(apply(&t, op, Dir::F).as_ref() == Some(&w), || format!("f̃ ẽ ≠ id at {w:?} {op:?}"))?;
                }
            }
            for k in 0..=d {
                let (left, right) = w.split_at(k);
                for i in 1..=r {
                    for dir in [Dir::E, Dir::F] {
                        ensure(tensor_rule_eval(left, right, i, dir) == jop(&w, i, dir), || {
                            format!("tensor rule differs at {w:?} split {k} i={i} {dir:?}")
                        })?;
                        splits += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} edges inverted, {splits} tensor splits"))
}

fn run_suite(r: usize, d: usize, only: &[Family]) -> Result<VerifyReport, String> {
    let rep = verify_suite(r, d, only, GUARD).map_err(|e| e.to_string())?;
    if let Some(c) = rep.failures().next() {
        return Err(format!("r={r} d={d}: [{}] {} {}", c.family, c.name, c.detail.clone().unwrap_or_default()));
    }
    Ok(rep)
}

fn symbolic_suite() -> Outcome {
    use Family::*;
    let families = [Defrel, Coideal, Weight, Hecke, LemmaH1, E1f1n, Z1, Braid, F1n, AppendixA];
    let mut n = 0;
    for r in 1..=2 {
        for d in 1..=3 {
            n += run_suite(r, d, &families)?.count(jcrystal::verify::Status::Pass);
        }
    }
    Ok(format!("{n} checks with zero residual"))
}

fn duality() -> Outcome {
    let mut n = 0;
    for r in 1..=2 {
        for d in 1..=3 {
            n += run_suite(r, d, &[Family::Duality])?.count(jcrystal::verify::Status::Pass);
        }
    }
    Ok(format!("{n} commutators vanish"))
}

fn kl() -> Outcome {
    let mut out = Vec::new();
    for d in 1..=3 {
        let rep = kl_suite(d, GUARD).map_err(|e| e.to_string())?;
        ensure(rep.bar_invariant, || format!("d={d}: C_w not bar-invariant"))?;
        ensure(rep.lattice, || format!("d={d}: coefficient outside the lattice"))?;
        ensure(rep.parabolic, || format!("d={d}: ᴶC_w ≠ C_(w_J w)"))?;
        let cells = left_cells(d, GUARD).map_err(|e| e.to_string())?;
        ensure(cells.agree, || format!("d={d}: KL cells ≠ (Q⁻,Q⁺) classes"))?;
        out.push(format!("d={d}: {} cells, {} parabolic pairs", cells.cells.len(), rep.parabolic_checked));
    }
    Ok(out.join("; "))
}

fn lr() -> Outcome {
    let (mut queries, mut branchings) = (0, 0);
    for r in 1..=2 {
        for total in 0..=5 {
            for a in 0..=total {
                for lambda in Bipartition::all(a, r) {
                    for mu in Partition::all(total - a, 2 * r + 1) {
                        let rule = lr_j_all(&lambda, &mu).map_err(|e| e.to_string())?;
                        let oracle = lr_j_oracle_all(&lambda, &mu, GUARD).map_err(|e| e.to_string())?;
                        ensure(rule == oracle, || format!("r={r} λ={lambda} μ={mu}: {rule:?} ≠ {oracle:?}"))?;
                        queries += 1;
                    }
                }
            }
            for mu in Partition::all(total, 2 * r + 1) {
                let formula = branching_all(&mu, r).map_err(|e| e.to_string())?;
                let counted = branching_by_biwords(&mu, r, GUARD).map_err(|e| e.to_string())?;
                ensure(formula == counted, || format!("r={r} μ={mu}: branching differs"))?;
                branchings += 1;
            }
        }
    }
    Ok(format!("{queries} (λ,μ) pairs, {branchings} branchings"))
}

fn golden() -> Outcome {
    let letters = |v: Vec<(usize, i32)>| word_label(&v.into_iter().map(|(_, x)| x).collect::<Vec<_>>());
    let t = Bitableau {
        minus: Tableau::new(vec![vec![0, 0, -1, -4], vec![-1, -2], vec![-3, -3], vec![-4]]).unwrap(),
        plus: Tableau::new(vec![vec![1, 2, 2, 4], vec![3, 4]]).unwrap(),
    };
    let w = t.reading();
    let data = ClassificationData::new(vec![2, 2, 3], vec![2, 0, 1]).unwrap();
    let shape = pi_inverse(&data);
    let image = pi_map(&shape);
    let got = [
        format!("reading {}", word_label(&w)),
        format!("s[-3-1/2] {}", letters(reduce_half(&w, Half(-3)))),
        format!("s[4-1/2] {}", letters(reduce_half(&w, Half(4)))),
        format!("s[4] {}", letters(reduce_int(&w, 4))),
        format!("s[1] {}", letters(reduce_int(&w, 1))),
        format!("pi^-1(a={:?}, b={:?}) {shape}", data.a, data.b),
        format!("pi {shape} a={:?} b={:?}", image.a, image.b),
    ]
    .join("\n")
        + "\n";
    let expected = include_str!("golden/reading_example.txt");
    ensure(got == expected, || format!("golden mismatch:\n{got}"))?;
    Ok(format!("{} lines byte-identical", expected.lines().count()))
}

fn spectra() -> Outcome {
    let mut n = 0;
    for d in 1..=3 {
        n += run_suite(1, d, &[Family::Spectrum])?.count(jcrystal::verify::Status::Pass);
    }
    let mut dj = BTreeMap::new();
    for r in 1..=2 {
        for d in 1..=3 {
            let rep = run_suite(r, d, &[Family::DipperJames])?;
            dj.insert((r, d), rep.count(jcrystal::verify::Status::Pass));
        }
    }
    Ok(format!("{n} spectrum checks; dipper-james components {:?}", dj))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("dimension bookkeeping", dimensions),
        ("single-source connectivity", single_source),
        ("operator axioms and tensor rule", operator_axioms),
        ("symbolic relation suite", symbolic_suite),
        ("Schur duality commutation", duality),
        ("KL basis, parabolic KL and left cells", kl),
        ("LR rule and branching", lr),
        ("golden values", golden),
        ("highest-weight spectra and bimodule pairing", spectra),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name} — {msg} ({secs:.1}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} — {msg} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
