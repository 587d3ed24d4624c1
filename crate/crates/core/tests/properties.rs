use proptest::prelude::*;

use jcrystal::crystal::{crystal_op, epsilon, phi, rs_word, Dir, Half};
use jcrystal::hecke::{HeckeAlgebra, HeckeElt};
use jcrystal::jcrystal::{apply, jepsilon, jop, jphi, operator_labels, tensor_rule_eval};
use jcrystal::lr::{lr_type_a, lr_type_a_oracle};
use jcrystal::tableaux::{pi_inverse, pi_map, Bipartition, Bitableau, ClassificationData, Partition};
use jcrystal::weyl::SignedPerm;
use jcrystal::RatFunc;

fn word(max_r: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<i32>)> {
    (1..=max_r).prop_flat_map(move |r| {
        let r32 = r as i32;
        (Just(r), prop::collection::vec(-r32..=r32, 0..=max_len))
    })
}

fn signed_perm(d: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((1..=d as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), d)).prop_map(
        |(w, s)| {
            let w: Vec<i32> = w.iter().zip(s).map(|(&x, neg)| if neg { -x } else { x }).collect();
            SignedPerm::from_window(&w).unwrap()
        },
    )
}

/// A small Laurent polynomial in `p, q` with integer coefficients.
fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(RatFunc::zero(), |acc, (c, a, b)| &acc + &RatFunc::monomial(c, a, b))
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn type_a_operators_are_partial_inverses((r, w) in word(4, 12)) {
        for h in Half::all(r) {
            prop_assert_eq!(phi(&w, h) as i64 - epsilon(&w, h) as i64,
                w.iter().filter(|&&x| x == h.lower()).count() as i64
                    - w.iter().filter(|&&x| x == h.upper()).count() as i64);
            if let Some(t) = crystal_op(&w, h, Dir::F) {
                prop_assert_eq!(crystal_op(&t, h, Dir::E), Some(w.clone()));
                prop_assert_eq!(phi(&t, h) + 1, phi(&w, h));
            }
        }
    }

    #[test]
    fn recording_tableau_is_a_crystal_invariant((r, w) in word(3, 10)) {
        let q = rs_word(&w).1;
        for h in Half::all(r) {
            for dir in [Dir::E, Dir::F] {
                if let Some(t) = crystal_op(&w, h, dir) {
                    prop_assert_eq!(&rs_word(&t).1, &q);
                }
            }
        }
    }

    #[test]
    fn jcrystal_operators_are_partial_inverses((r, w) in word(4, 10)) {
        for op in operator_labels(r) {
            if let Some(t) = apply(&w, op, Dir::F) {
                prop_assert_eq!(apply(&t, op, Dir::E), Some(w.clone()));
            }
            if let Some(t) = apply(&w, op, Dir::E) {
                prop_assert_eq!(apply(&t, op, Dir::F), Some(w.clone()));
            }
        }
        for i in 1..=r {
            if let Some(t) = jop(&w, i, Dir::F) {
                prop_assert_eq!(jphi(&t, i) + 1, jphi(&w, i));
                prop_assert_eq!(jepsilon(&t, i), jepsilon(&w, i) + 1);
            }
        }
    }

    #[test]
    fn tensor_rule_matches_words((r, w) in word(4, 10), k in 0usize..=10) {
        let k = k.min(w.len());
        let (left, right) = w.split_at(k);
        for i in 1..=r {
            for dir in [Dir::E, Dir::F] {
                prop_assert_eq!(tensor_rule_eval(left, right, i, dir), jop(&w, i, dir));
            }
        }
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn right_action_of_signed_permutations(
        (x, y) in (1usize..=5).prop_flat_map(|d| (signed_perm(d), signed_perm(d))),
    ) {
        let t: Vec<i32> = (1..=x.rank() as i32).map(|k| 10 * k).collect();
        prop_assert_eq!(x.mul(&y).act(&t), y.act(&x.act(&t)));
        prop_assert_eq!(x.inverse().length(), x.length());
        let rw = x.reduced_word();
        prop_assert_eq!(rw.len(), x.length());
        prop_assert_eq!(SignedPerm::from_word(x.rank(), &rw), x.clone());
    }

    #[test]
    fn pi_round_trip(a1 in -6i64..=6, rest in prop::collection::vec((0i64..=4, 0i64..=4), 0..3), b1 in 0i64..=4) {
        let mut a = vec![a1];
        let mut b = vec![b1];
        for (x, y) in rest {
            a.push(x.max(y));
            b.push(x.min(y));
        }
        let data = ClassificationData::new(a, b).unwrap();
        let shape = pi_inverse(&data);
        prop_assert!(shape.has_zero_row());
        prop_assert_eq!(pi_map(&shape), data);
    }

    #[test]
    fn pi_classes_are_zero_row_representatives(r in 1usize..=3, n in 0usize..=6, pick in any::<prop::sample::Index>()) {
        let shapes = Bipartition::all(n, r);
        let shape = &shapes[pick.index(shapes.len())];
        let rep = pi_inverse(&pi_map(shape));
        prop_assert!(shape.pi_equivalent(&rep));
        prop_assert_eq!(rep.zero_representative(), shape.zero_representative());
    }

    #[test]
    fn reading_word_round_trip(r in 1usize..=3, n in 0usize..=4, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let shapes = Bipartition::all(n, r);
        let shape = &shapes[a.index(shapes.len())];
        let all = Bitableau::enumerate_sst(shape);
        let t = &all[b.index(all.len())];
        prop_assert!(t.is_semistandard(r));
        prop_assert_eq!(&Bitableau::from_reading(shape, &t.reading()).unwrap(), t);
    }

    #[test]
    fn lr_skew_tableaux_match_crystal_count(n in 1usize..=3, a in 0usize..=3, b in 0usize..=3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let etas = Partition::all(a, n);
        let xis = Partition::all(b, n);
        let mus = Partition::all(a + b, n);
        let (eta, xi, mu) = (&etas[i.index(etas.len())], &xis[j.index(xis.len())], &mus[k.index(mus.len())]);
        let oracle = lr_type_a_oracle(eta, xi, mu, n);
        let rule = if mu.contains(eta) { lr_type_a(eta, xi, mu, n).unwrap() } else { 0 };
        prop_assert_eq!(rule, oracle);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hecke_bar_is_an_involutive_ring_map(
        x in prop::collection::vec((0usize..48, laurent()), 0..4),
        y in prop::collection::vec((0usize..48, laurent()), 0..3),
    ) {
        let h = HeckeAlgebra::new(3);
        let elt = |v: &[(usize, RatFunc)]| v.iter().fold(HeckeElt::zero(), |mut acc, (w, c)| {
            acc.add_term(*w, c);
            acc
        });
        let (x, y) = (elt(&x), elt(&y));
        prop_assert_eq!(h.bar(&h.bar(&x)), x.clone());
        prop_assert_eq!(h.bar(&h.mul(&x, &y)), h.mul(&h.bar(&x), &h.bar(&y)));
    }
}
