//! Every claim at its default (acceptance) size.

use invseq::checks::{run_check, scan_schroder_pairs, Theorem, CONJECTURED_PAIRS};

fn assert_claim(t: Theorem) {
    let rep = run_check(t, t.default_max_n(), false);
    assert!(rep.passed, "{t} failed: {:?}", rep.sizes.last());
    assert_eq!(rep.sizes.last().unwrap().n, t.default_max_n());
}

macro_rules! claims {
    ($($name:ident => $t:expr),* $(,)?) => {$(
        #[test]
        fn $name() {
            assert_claim($t);
        }
    )*};
}

claims! {
    eq1 => Theorem::Eq1,
    thm1_1 => Theorem::Thm1_1,
    thm2_2 => Theorem::Thm2_2,
    thm3_1 => Theorem::Thm3_1,
    thm3_4 => Theorem::Thm3_4,
    thm3_5 => Theorem::Thm3_5,
    thm3_6 => Theorem::Thm3_6,
    thm4_1 => Theorem::Thm4_1,
    cor4_2 => Theorem::Cor4_2,
    thm5_1 => Theorem::Thm5_1,
    thm5_2 => Theorem::Thm5_2,
    entringer => Theorem::Entringer,
    palindromic => Theorem::Palindromic,
}

#[test]
fn schroder_pair_scan_finds_exactly_the_nine() {
    let scan = scan_schroder_pairs(8);
    let mut expected: Vec<(String, String)> = CONJECTURED_PAIRS
        .iter()
        .map(|&(a, b)| {
            if a > b {
                (a.to_string(), b.to_string())
            } else {
                (b.to_string(), a.to_string())
            }
        })
        .collect();
    expected.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(scan.pairs, expected);
}
