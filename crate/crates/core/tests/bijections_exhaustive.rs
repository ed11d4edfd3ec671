use std::collections::BTreeSet;

use num_bigint::BigUint;

use invseq::bijections::*;
use invseq::enumerate::{catalan_triangle, gen_permutations, invseq_avoiders, schroder_triangle, Avoidance};
use invseq::stats::{ascent_set, descent_set, inversions};
use invseq::words::{violates_triple, InversionSequence, RelationTriple};

const CAT: RelationTriple = RelationTriple::CATALAN;
const SCH: RelationTriple = RelationTriple::SCHRODER;
const MAX_N: usize = 8;

fn avoiders(n: usize, r: RelationTriple) -> Vec<InversionSequence> {
    invseq_avoiders(n, &Avoidance::Triple(r))
}

fn with_last(objs: &[InversionSequence], k: u32) -> BTreeSet<InversionSequence> {
    objs.iter().filter(|e| e.last() == Some(k)).cloned().collect()
}

#[test]
fn theta_is_a_bijection_carrying_des_to_asc() {
    for n in 0..=7 {
        let mut seen = BTreeSet::new();
        for pi in gen_permutations(n) {
            let e = theta(&pi);
            assert_eq!(theta_inverse(&e), pi);
            assert_eq!(descent_set(&pi), ascent_set(&e), "{pi}");
            assert_eq!(e.iter().map(|&x| x as u64).sum::<u64>(), inversions(&pi));
            assert!(seen.insert(e));
        }
        assert_eq!(seen.len(), (1..=n).product::<usize>());
    }
}

#[test]
fn catalan_refinement_sizes() {
    let c = catalan_triangle(MAX_N);
    for n in 2..=MAX_N {
        let objs = avoiders(n, CAT);
        for k in 0..n as u32 {
            let a = objs
                .iter()
                .filter(|e| e.last() == Some(k) && in_a(e, &CAT).unwrap())
                .count();
            let b = objs
                .iter()
                .filter(|e| e.last() == Some(k) && in_b(e, &CAT).unwrap())
                .count();
            assert_eq!(a + b, with_last(&objs, k).len());
            assert_eq!(BigUint::from(a), c.get(n - 1, k as i64), "|A({n},{k})|");
            assert_eq!(BigUint::from(b), c.get(n, k as i64 - 1), "|B({n},{k})|");
        }
    }
}

#[test]
fn catalan_g_is_a_bijection() {
    for n in 2..=MAX_N {
        let objs = avoiders(n, CAT);
        let shorter = avoiders(n - 1, CAT);
        for k in 0..n as u32 {
            let images: Vec<_> = objs
                .iter()
                .filter(|e| e.last() == Some(k) && in_a(e, &CAT).unwrap())
                .map(|e| catalan_g(e).unwrap())
                .collect();
            let set: BTreeSet<_> = images.iter().cloned().collect();
            assert_eq!(set.len(), images.len(), "g not injective at ({n},{k})");
            assert_eq!(set, with_last(&shorter, k), "g image at ({n},{k})");
        }
    }
}

#[test]
fn last_decrement_is_a_bijection() {
    for r in [CAT, SCH] {
        for n in 1..=MAX_N {
            let objs = avoiders(n, r);
            for k in 1..n as u32 {
                let images: BTreeSet<_> = objs
                    .iter()
                    .filter(|e| e.last() == Some(k) && in_b(e, &r).unwrap())
                    .map(|e| last_decrement(e, &r).unwrap())
                    .collect();
                assert!(images.iter().all(|e| !violates_triple(e, &r)));
                let b = objs
                    .iter()
                    .filter(|e| e.last() == Some(k) && in_b(e, &r).unwrap())
                    .count();
                assert_eq!(images.len(), b);
                assert_eq!(images, with_last(&objs, k - 1), "{r} at ({n},{k})");
            }
        }
    }
}

#[test]
fn schroder_f_is_a_bijection_onto_shorter_rows() {
    for n in 3..=MAX_N {
        let objs = avoiders(n, SCH);
        let shorter = avoiders(n - 1, SCH);
        for k in 0..=(n as u32 - 3) {
            let d: Vec<_> = objs
                .iter()
                .filter(|e| e.last() == Some(k) && in_d(e).unwrap())
                .collect();
            for e in &d {
                schroder_d_shape(e).unwrap();
            }
            let images: BTreeSet<_> = d.iter().map(|e| schroder_f(e).unwrap()).collect();
            assert_eq!(images.len(), d.len(), "f not injective at ({n},{k})");
            assert_eq!(images, with_last(&shorter, k), "f image at ({n},{k})");
        }
    }
}

#[test]
fn schroder_c_counts_are_row_differences() {
    let s = schroder_triangle(MAX_N);
    for n in 2..=MAX_N {
        let objs = avoiders(n, SCH);
        for k in 0..n as u32 {
            let c = objs.iter().filter(|e| e.last() == Some(k) && in_c(e).unwrap()).count();
            if (k as usize) + 1 < n {
                let lhs = BigUint::from(c) + s.get(n - 1, k as i64 - 1);
                assert_eq!(lhs, s.get(n - 1, k as i64), "|C({n},{k})|");
            } else {
                assert_eq!(c, 0);
            }
        }
    }
}

#[test]
fn split_and_join_are_inverse() {
    for n in 1..=MAX_N {
        for e in avoiders(n, CAT) {
            match split_222(&e) {
                Ok(s) => {
                    assert!(!violates_triple(&s.left, &CAT), "{e}");
                    assert!(!violates_triple(&s.right, &CAT), "{e}");
                    assert_eq!(s.left.len() + s.right.len() + 1, n);
                    assert_eq!(join_222(&s).unwrap(), e);
                }
                Err(_) => assert_eq!(e.last().unwrap() as usize, n - 1, "{e}"),
            }
        }
    }
}

#[test]
fn maps_reject_inputs_outside_their_domain() {
    let bad = InversionSequence::new(vec![0, 0, 0]).unwrap();
    assert!(catalan_g(&bad).is_err());
    // 000 avoids the Schröder triple, so it is a legitimate f input
    assert_eq!(schroder_f(&bad).unwrap(), InversionSequence::zeros(2));
    assert!(schroder_f(&InversionSequence::new(vec![0, 1, 2]).unwrap()).is_err());
    assert!(last_decrement(&bad, &CAT).is_err());
    assert!(split_222(&bad).is_err());
}

#[test]
fn library_suite_agrees() {
    for n in 0..=MAX_N {
        invseq::checks::bijection_suite(n).unwrap();
    }
}
