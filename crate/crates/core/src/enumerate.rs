//! Exhaustive generation, generating trees and triangles.
//!
//! Avoiders are produced by extending prefixes one letter at a time and
//! discarding a prefix as soon as it contains a forbidden pattern. That is
//! sound for every avoidance notion used here, vincular patterns included:
//! an occurrence inside a prefix stays an occurrence, with the same
//! adjacencies, in every extension. Each new letter therefore only needs the
//! occurrences that end on it.
//!
//! Work is split across the prefixes of a fixed small depth and the pieces
//! are concatenated in order, so output is identical with or without
//! parallelism.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::stats::{critical_value, Stat, StatValue};
use crate::words::{violates_triple, violates_triple_at_last, InversionSequence, Pattern, Permutation, RelationTriple};

/// Lexicographic iterator over `I_n`.
#[derive(Clone, Debug)]
pub struct InversionSequences {
    current: Option<Vec<u32>>,
}

impl InversionSequences {
    pub fn new(n: usize) -> Self {
        InversionSequences {
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if (next[i] as usize) < i {
                next[i] += 1;
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(InversionSequence::new_unchecked(cur))
    }
}

pub fn gen_inversion_sequences(n: usize) -> InversionSequences {
    InversionSequences::new(n)
}

/// Lexicographic iterator over `S_n`.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((1..=n as u32).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let n = next.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| next[i] < next[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| next[j] > next[i]).unwrap();
                next.swap(i, j);
                next[i + 1..].reverse();
                self.current = Some(next);
            }
        }
        Some(Permutation::new_unchecked(cur))
    }
}

pub fn gen_permutations(n: usize) -> Permutations {
    Permutations::new(n)
}

/// What an avoider must avoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Avoidance {
    Nothing,
    Patterns(Vec<Pattern>),
    Triple(RelationTriple),
}

impl Avoidance {
    pub fn patterns(ps: &[&str]) -> Result<Self> {
        ps.iter()
            .map(|p| p.parse())
            .collect::<Result<Vec<_>>>()
            .map(Avoidance::Patterns)
    }

    /// True iff `w` contains something forbidden.
    pub fn violated(&self, w: &[u32]) -> bool {
        match self {
            Avoidance::Nothing => false,
            Avoidance::Patterns(ps) => ps.iter().any(|p| p.contained_in(w)),
            Avoidance::Triple(r) => violates_triple(w, r),
        }
    }

    /// Assuming `w` minus its last letter is clean, is `w` dirty?
    fn violated_at_last(&self, w: &[u32]) -> bool {
        match self {
            Avoidance::Nothing => false,
            Avoidance::Patterns(ps) => ps.iter().any(|p| p.contained_ending_at_last(w)),
            Avoidance::Triple(r) => violates_triple_at_last(w, r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Universe {
    Permutations,
    InversionSequences,
}

/// Letters that may extend `prefix` inside a word of length `n`.
fn candidates(universe: Universe, prefix: &[u32], n: usize) -> Vec<u32> {
    match universe {
        Universe::InversionSequences => (0..=prefix.len() as u32).collect(),
        Universe::Permutations => (1..=n as u32).filter(|v| !prefix.contains(v)).collect(),
    }
}

/// Depth-first extension of `prefix` up to length `target` inside words
/// of length `n`.
fn extend_all(
    universe: Universe,
    avoid: &Avoidance,
    n: usize,
    target: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if prefix.len() == target {
        out.push(prefix.clone());
        return;
    }
    for c in candidates(universe, prefix, n) {
        prefix.push(c);
        if !avoid.violated_at_last(prefix) {
            extend_all(universe, avoid, n, target, prefix, out);
        }
        prefix.pop();
    }
}

fn avoiders_raw(universe: Universe, avoid: &Avoidance, n: usize) -> Vec<Vec<u32>> {
    const SPLIT_DEPTH: usize = 4;
    if n <= SPLIT_DEPTH + 2 {
        let mut out = Vec::new();
        extend_all(universe, avoid, n, n, &mut Vec::new(), &mut out);
        return out;
    }
    let mut prefixes = Vec::new();
    extend_all(universe, avoid, n, SPLIT_DEPTH, &mut Vec::new(), &mut prefixes);
    prefixes
        .into_par_iter()
        .map(|mut p| {
            let mut out = Vec::new();
            extend_all(universe, avoid, n, n, &mut p, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Inversion sequences of length `n` avoiding `avoid`, lexicographically.
pub fn invseq_avoiders(n: usize, avoid: &Avoidance) -> Vec<InversionSequence> {
    avoiders_raw(Universe::InversionSequences, avoid, n)
        .into_iter()
        .map(InversionSequence::new_unchecked)
        .collect()
}

/// Permutations of length `n` avoiding `avoid`, lexicographically.
pub fn perm_avoiders(n: usize, avoid: &Avoidance) -> Vec<Permutation> {
    avoiders_raw(Universe::Permutations, avoid, n)
        .into_iter()
        .map(Permutation::new_unchecked)
        .collect()
}

/// Unpruned reference: filter the full universe.
pub fn invseq_avoiders_unpruned(n: usize, avoid: &Avoidance) -> Vec<InversionSequence> {
    gen_inversion_sequences(n).filter(|e| !avoid.violated(e)).collect()
}

pub fn perm_avoiders_unpruned(n: usize, avoid: &Avoidance) -> Vec<Permutation> {
    gen_permutations(n).filter(|p| !avoid.violated(p)).collect()
}

/// A multiset of statistic tuples with exact counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    entries: BTreeMap<Vec<StatValue>, BigUint>,
}

impl Distribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: Vec<StatValue>) {
        *self.entries.entry(key).or_insert_with(BigUint::zero) += 1u32;
    }

    pub fn add_count(&mut self, key: Vec<StatValue>, count: BigUint) {
        if !count.is_zero() {
            *self.entries.entry(key).or_insert_with(BigUint::zero) += count;
        }
    }

    /// Associative and commutative.
    pub fn merge(mut self, other: Distribution) -> Distribution {
        for (k, c) in other.entries {
            self.add_count(k, c);
        }
        self
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn get(&self, key: &[StatValue]) -> BigUint {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<StatValue>, &BigUint)> {
        self.entries.iter()
    }

    /// Collect `key(x)` over `objects` in parallel.
    pub fn collect<T, F>(objects: &[T], key: F) -> Distribution
    where
        T: Sync,
        F: Fn(&T) -> Vec<StatValue> + Sync,
    {
        objects
            .par_iter()
            .fold(Distribution::new, |mut d, x| {
                d.add(key(x));
                d
            })
            .reduce(Distribution::new, Distribution::merge)
    }

    /// Single-numeric-key distributions as a dense coefficient vector.
    pub fn coefficients(&self) -> Option<Vec<BigUint>> {
        let mut out: Vec<BigUint> = Vec::new();
        for (k, c) in &self.entries {
            let [StatValue::Num(x)] = k.as_slice() else {
                return None;
            };
            let x = *x as usize;
            if out.len() <= x {
                out.resize(x + 1, BigUint::zero());
            }
            out[x] = c.clone();
        }
        Some(out)
    }
}

impl FromIterator<Vec<StatValue>> for Distribution {
    fn from_iter<I: IntoIterator<Item = Vec<StatValue>>>(iter: I) -> Self {
        let mut d = Distribution::new();
        for k in iter {
            d.add(k);
        }
        d
    }
}

/// Distribution of the selected statistics over permutations.
pub fn perm_distribution(objects: &[Permutation], stats: &[Stat]) -> Result<Distribution> {
    for o in objects.iter().take(1) {
        for s in stats {
            s.eval_perm(o)?;
        }
    }
    Ok(Distribution::collect(objects, |p| {
        stats
            .iter()
            .map(|s| s.eval_perm(p).expect("checked on first object"))
            .collect()
    }))
}

/// Distribution of the selected statistics over inversion sequences.
pub fn invseq_distribution(objects: &[InversionSequence], stats: &[Stat]) -> Result<Distribution> {
    // every object is evaluated fallibly first: EXPO rejects 021-containers
    let keys: Vec<Vec<StatValue>> = objects
        .par_iter()
        .map(|e| stats.iter().map(|s| s.eval_invseq(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(keys.into_iter().collect())
}

/// Rows `n = 1..=N` of a number triangle; row `n` has entries `k = 0..n-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Triangle {
    #[serde(serialize_with = "serialize_rows")]
    rows: Vec<Vec<BigUint>>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<BigUint>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let as_str: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    as_str.serialize(s)
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Self {
        Triangle { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` (1-based).
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Entry `(n,k)`, zero outside `0 <= k < n`.
    pub fn get(&self, n: usize, k: i64) -> BigUint {
        if n == 0 || n > self.rows.len() || k < 0 || k as usize >= n {
            return BigUint::zero();
        }
        self.rows[n - 1][k as usize].clone()
    }

    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// `n,k,count,row_sum` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,k,count,row_sum\n");
        for (i, r) in self.rows.iter().enumerate() {
            let sum: BigUint = r.iter().sum();
            for (k, c) in r.iter().enumerate() {
                writeln!(s, "{},{},{},{}", i + 1, k, c, sum).unwrap();
            }
        }
        s
    }

    /// OEIS b-file: rows read left to right, running index from 1.
    pub fn to_bfile(&self) -> String {
        let mut s = String::new();
        for (idx, c) in self.rows.iter().flatten().enumerate() {
            writeln!(s, "{} {}", idx + 1, c).unwrap();
        }
        s
    }
}

/// Tally of last entries, one row per length.
pub fn last_entry_triangle(rows: &[Vec<InversionSequence>]) -> Triangle {
    Triangle::from_rows(
        rows.iter()
            .enumerate()
            .map(|(i, objs)| {
                let mut r = vec![BigUint::zero(); i + 1];
                for e in objs {
                    r[e.last().unwrap() as usize] += 1u32;
                }
                r
            })
            .collect(),
    )
}

/// The Catalan triangle by the three-term recurrence
/// `C(n,k) = C(n,k-1) + C(n-1,k)`, `C(1,0) = 1`.
pub fn catalan_triangle(max_n: usize) -> Triangle {
    let mut t = Triangle::default();
    for n in 1..=max_n {
        let mut row = vec![BigUint::zero(); n];
        for k in 0..n {
            row[k] = if n == 1 {
                BigUint::one()
            } else {
                let left = if k > 0 { row[k - 1].clone() } else { BigUint::zero() };
                left + t.get(n - 1, k as i64)
            };
        }
        t.rows.push(row);
    }
    t
}

/// Last-entry triangle of `I_n(r)` for `r` one of `(>=,-,>=)` and
/// `(>=,-,>)`, grown by the critical-value generating tree.
///
/// For these triples the label `(cri, max)` determines the children: the
/// admissible last entries are `cri..=n`, and appending `k` gives
/// `max' = max(max, k)` and `cri' = max + s` when `k <= max`
/// (`s = 1` for `>=` in the third slot, `0` for `>`), else `cri' = cri`.
pub fn triangle_by_critical_value(max_n: usize, r: &RelationTriple) -> Result<Triangle> {
    let step = if *r == RelationTriple::CATALAN {
        1
    } else if *r == RelationTriple::SCHRODER {
        0
    } else {
        return Err(Error::UnsupportedTriple(r.to_string()));
    };
    let mut t = Triangle::default();
    if max_n == 0 {
        return Ok(t);
    }
    let mut level: BTreeMap<(u32, u32), BigUint> = BTreeMap::new();
    level.insert((0, 0), BigUint::one());
    t.rows.push(vec![BigUint::one()]);
    for n in 1..max_n as u32 {
        let mut next: BTreeMap<(u32, u32), BigUint> = BTreeMap::new();
        let mut row = vec![BigUint::zero(); n as usize + 1];
        for (&(cri, max), count) in &level {
            for k in cri..=n {
                let child = if k <= max { (max + step, max) } else { (cri, k) };
                *next.entry(child).or_insert_with(BigUint::zero) += count;
                row[k as usize] += count;
            }
        }
        t.rows.push(row);
        level = next;
    }
    Ok(t)
}

/// The Schröder triangle `S(n,k)`: `I_n(>=,-,>)` by last entry.
pub fn schroder_triangle(max_n: usize) -> Triangle {
    triangle_by_critical_value(max_n, &RelationTriple::SCHRODER).expect("supported triple")
}

/// Parameters `(p,q)` of `e` in `I_n(>=,>=,>)`: `p = m + 1 - cri(e)`,
/// `q = n - m` with `m` the largest entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BaxterParams {
    pub p: u32,
    pub q: u32,
}

pub fn baxter_params(e: &[u32]) -> Result<BaxterParams> {
    if e.is_empty() {
        return Err(Error::EmptyObject);
    }
    let cri = critical_value(e, &RelationTriple::BAXTER)?;
    let m = *e.iter().max().unwrap();
    if cri > m + 1 {
        return Err(Error::Invariant(format!("cri {cri} exceeds max+1 for {e:?}")));
    }
    Ok(BaxterParams {
        p: m + 1 - cri,
        q: e.len() as u32 - m,
    })
}

/// Children of a node with parameters `(p,q)`, in order of increasing last
/// entry.
pub fn baxter_children(params: BaxterParams) -> Vec<BaxterParams> {
    let BaxterParams { p, q } = params;
    let mut out = Vec::with_capacity((p + q) as usize);
    out.extend((1..p).rev().map(|a| BaxterParams { p: a, q: q + 1 }));
    out.push(BaxterParams { p: 1, q: q + 1 });
    out.extend((1..=q).map(|i| BaxterParams { p: p + i, q: q + 1 - i }));
    out
}

/// `F(n,p,q)` tables and the last-entry triangle from the Baxter
/// succession rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaxterTree {
    /// `levels[n-1]` maps `(p,q)` to `F(n,p,q)`.
    pub levels: Vec<BTreeMap<BaxterParams, BigUint>>,
    pub triangle: Triangle,
}

impl BaxterTree {
    pub fn count(&self, n: usize, p: u32, q: u32) -> BigUint {
        self.levels
            .get(n - 1)
            .and_then(|l| l.get(&BaxterParams { p, q }))
            .cloned()
            .unwrap_or_default()
    }

    pub fn totals(&self) -> Vec<BigUint> {
        self.levels.iter().map(|l| l.values().sum()).collect()
    }
}

pub fn baxter_generating_tree(max_n: usize) -> BaxterTree {
    let mut levels = Vec::new();
    let mut rows = Vec::new();
    if max_n == 0 {
        return BaxterTree {
            levels,
            triangle: Triangle::default(),
        };
    }
    let mut level = BTreeMap::new();
    level.insert(BaxterParams { p: 1, q: 1 }, BigUint::one());
    rows.push(vec![BigUint::one()]);
    for n in 1..max_n as u32 {
        let mut next: BTreeMap<BaxterParams, BigUint> = BTreeMap::new();
        let mut row = vec![BigUint::zero(); n as usize + 1];
        for (&params, count) in &level {
            let first = n + 1 - (params.p + params.q);
            for (i, child) in baxter_children(params).into_iter().enumerate() {
                *next.entry(child).or_insert_with(BigUint::zero) += count;
                row[(first as usize) + i] += count;
            }
        }
        levels.push(level);
        rows.push(row);
        level = next;
    }
    levels.push(level);
    BaxterTree {
        levels,
        triangle: Triangle::from_rows(rows),
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `B_n` from the triple-binomial sum; errors if the final division is
/// not exact.
pub fn baxter_closed_form(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Precondition("Baxter numbers start at n = 1".into()));
    }
    let m = n + 1;
    let sum: BigUint = (0..n)
        .map(|k| binomial(m, k) * binomial(m, k + 1) * binomial(m, k + 2))
        .sum();
    let den = binomial(m, 1) * binomial(m, 2);
    let (q, r) = sum.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("Baxter sum {sum} / {den}")));
    }
    Ok(q)
}

pub fn catalan_number(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// No double descent after deleting the values `n, n-1, .., k+1`, for
/// every `k`.
pub fn is_simsun(pi: &Permutation) -> bool {
    let n = pi.len() as u32;
    (1..=n).all(|k| {
        let w: Vec<u32> = pi.iter().copied().filter(|&v| v <= k).collect();
        !w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
    })
}

pub fn simsun_permutations(n: usize) -> Vec<Permutation> {
    gen_permutations(n).filter(is_simsun).collect()
}

/// The Seidel–Entringer triangle, rows `m = 0..=max_m`, entries
/// `E(m,k)` for `k = 0..=m`: `E(0,0) = 1`, `E(m,0) = 0`,
/// `E(m,k) = E(m,k-1) + E(m-1,m-k)`.
///
/// `E(m,m)` is the Euler number `E_m` and row `m` sums to `E_{m+1}`.
pub fn entringer_triangle(max_m: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for m in 1..=max_m {
        let mut row = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            row[k] = &row[k - 1] + &rows[m - 1][m - k];
        }
        rows.push(row);
    }
    rows
}

/// Euler (up/down) numbers `E_0..=E_max`.
pub fn euler_numbers(max: usize) -> Vec<BigUint> {
    entringer_triangle(max)
        .into_iter()
        .map(|r| r.last().unwrap().clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn nums(v: &[u64]) -> Vec<StatValue> {
        v.iter().map(|&x| StatValue::Num(x)).collect()
    }

    #[test]
    fn small_universes() {
        let i2: Vec<_> = gen_inversion_sequences(2).map(|e| e.into_vec()).collect();
        assert_eq!(i2, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(gen_inversion_sequences(1).count(), 1);
        assert_eq!(gen_inversion_sequences(3).count(), 6);
        assert_eq!(gen_inversion_sequences(0).count(), 1);
        let s2: Vec<_> = gen_permutations(2).map(|p| p.into_vec()).collect();
        assert_eq!(s2, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(gen_permutations(0).next().unwrap().len(), 0);
        assert_eq!(gen_permutations(0).count(), 1);
        assert_eq!(gen_permutations(3).count(), 6);
    }

    #[test]
    fn generators_are_lexicographic() {
        let v: Vec<_> = gen_permutations(5).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        let v: Vec<_> = gen_inversion_sequences(6).collect();
        assert_eq!(v.len(), 720);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn pruned_matches_unpruned() {
        let avoidances = [
            Avoidance::Triple(RelationTriple::CATALAN),
            Avoidance::Triple(RelationTriple::BAXTER),
            Avoidance::patterns(&["021"]).unwrap(),
            Avoidance::patterns(&["000"]).unwrap(),
            Avoidance::patterns(&["2_41_3", "3_14_2"]).unwrap(),
            Avoidance::patterns(&["_12_3"]).unwrap(),
            Avoidance::Nothing,
        ];
        for n in 0..=7 {
            for a in &avoidances {
                assert_eq!(invseq_avoiders(n, a), invseq_avoiders_unpruned(n, a), "{n} {a:?}");
                assert_eq!(perm_avoiders(n, a), perm_avoiders_unpruned(n, a), "{n} {a:?}");
            }
        }
    }

    #[test]
    fn catalan_and_euler_counts() {
        let cat = Avoidance::Triple(RelationTriple::CATALAN);
        let counts: Vec<usize> = (1..=5).map(|n| invseq_avoiders(n, &cat).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42]);
        let e000 = Avoidance::patterns(&["000"]).unwrap();
        let counts: Vec<usize> = (1..=4).map(|n| invseq_avoiders(n, &e000).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn distribution_examples() {
        let i3: Vec<_> = gen_inversion_sequences(3).collect();
        let d = invseq_distribution(&i3, &[Stat::Asc]).unwrap();
        assert_eq!(d.coefficients().unwrap(), big(&[1, 4, 1]));
        let s3: Vec<_> = gen_permutations(3).collect();
        let d = perm_distribution(&s3, &[Stat::Des]).unwrap();
        assert_eq!(d.coefficients().unwrap(), big(&[1, 4, 1]));
        let i1: Vec<_> = gen_inversion_sequences(1).collect();
        let d = invseq_distribution(&i1, &[Stat::Dist]).unwrap();
        assert_eq!(d.get(&nums(&[0])), BigUint::from(1u32));
        assert_eq!(d.total(), BigUint::from(1u32));
        assert!(invseq_distribution(&i1, &[Stat::DesSet]).is_err());
    }

    #[test]
    fn catalan_triangle_rows() {
        let t = catalan_triangle(8);
        assert_eq!(t.row(2), big(&[1, 1]).as_slice());
        assert_eq!(t.row(5), big(&[1, 4, 9, 14, 14]).as_slice());
        for n in 3..=8 {
            assert_eq!(t.get(n, n as i64 - 1), t.get(n, n as i64 - 2));
        }
        assert_eq!(t, triangle_by_critical_value(8, &RelationTriple::CATALAN).unwrap());
    }

    #[test]
    fn schroder_triangle_rows() {
        let t = schroder_triangle(5);
        assert_eq!(t.row(1), big(&[1]).as_slice());
        assert_eq!(t.row(2), big(&[1, 1]).as_slice());
        assert_eq!(t.row_sums(), big(&[1, 2, 6, 22, 90]));
        let lhs = t.get(5, 1);
        let rhs = t.get(5, 0) + BigUint::from(2u32) * t.get(4, 1) - t.get(4, 0);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triangles_match_brute_force() {
        for (r, t) in [
            (RelationTriple::CATALAN, catalan_triangle(8)),
            (RelationTriple::SCHRODER, schroder_triangle(8)),
            (RelationTriple::BAXTER, baxter_generating_tree(8).triangle),
        ] {
            let rows: Vec<_> = (1..=8).map(|n| invseq_avoiders(n, &Avoidance::Triple(r))).collect();
            assert_eq!(last_entry_triangle(&rows), t, "{r}");
        }
    }

    #[test]
    fn baxter_root_children() {
        let kids = baxter_children(BaxterParams { p: 1, q: 1 });
        assert_eq!(kids, vec![BaxterParams { p: 1, q: 2 }, BaxterParams { p: 2, q: 1 }]);
        assert_eq!(baxter_params(&[0, 0]).unwrap(), BaxterParams { p: 1, q: 2 });
        assert_eq!(baxter_params(&[0, 1]).unwrap(), BaxterParams { p: 2, q: 1 });
        let tree = baxter_generating_tree(2);
        assert_eq!(tree.triangle.row(2), big(&[1, 1]).as_slice());
    }

    #[test]
    fn baxter_totals_match_closed_form() {
        let tree = baxter_generating_tree(12);
        let totals = tree.totals();
        assert_eq!(&totals[..6], big(&[1, 2, 6, 22, 92, 422]).as_slice());
        for (i, t) in totals.iter().enumerate() {
            assert_eq!(*t, baxter_closed_form(i as u64 + 1).unwrap());
        }
        assert_eq!(tree.triangle.row_sums(), totals);
    }

    #[test]
    fn baxter_table_matches_brute_force() {
        let tree = baxter_generating_tree(8);
        for n in 1..=8 {
            let mut brute: BTreeMap<BaxterParams, BigUint> = BTreeMap::new();
            for e in invseq_avoiders(n, &Avoidance::Triple(RelationTriple::BAXTER)) {
                *brute.entry(baxter_params(&e).unwrap()).or_default() += 1u32;
            }
            assert_eq!(brute, tree.levels[n - 1], "n = {n}");
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(baxter_closed_form(1).unwrap(), BigUint::from(1u32));
        assert_eq!(baxter_closed_form(4).unwrap(), BigUint::from(22u32));
        assert_eq!(baxter_closed_form(6).unwrap(), BigUint::from(422u32));
        assert!(baxter_closed_form(0).is_err());
        let bax = Avoidance::patterns(&["2_41_3", "3_14_2"]).unwrap();
        assert_eq!(perm_avoiders(4, &bax).len(), 22);
        assert_eq!(catalan_number(8), BigUint::from(1430u32));
    }

    #[test]
    fn simsun_examples() {
        assert!(is_simsun(&Permutation::new(vec![1, 2, 3]).unwrap()));
        assert!(!is_simsun(&Permutation::new(vec![3, 2, 1]).unwrap()));
        assert!(!is_simsun(&Permutation::new(vec![4, 2, 1, 3]).unwrap()));
        let counts: Vec<usize> = (1..=5).map(|n| simsun_permutations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 61]);
    }

    #[test]
    fn entringer_oracle() {
        let t = entringer_triangle(5);
        let sums: Vec<BigUint> = t.iter().take(5).map(|r| r.iter().sum()).collect();
        assert_eq!(sums, big(&[1, 1, 2, 5, 16]));
        assert_eq!(t[3], big(&[0, 1, 2, 2]));
        assert_eq!(euler_numbers(6), big(&[1, 1, 1, 2, 5, 16, 61]));

        let i3 = invseq_avoiders(3, &Avoidance::patterns(&["000"]).unwrap());
        assert_eq!(i3.len(), 5);
        let d = invseq_distribution(&i3, &[Stat::Last]).unwrap();
        assert_eq!(d.coefficients().unwrap(), big(&[1, 2, 2]));
        // shifted by one, the tally is row 3 read from k = 1
        assert_eq!(&t[3][1..], d.coefficients().unwrap().as_slice());
    }

    #[test]
    fn exports() {
        let t = catalan_triangle(2);
        assert_eq!(t.to_csv(), "n,k,count,row_sum\n1,0,1,1\n2,0,1,2\n2,1,1,2\n");
        assert_eq!(t.to_bfile(), "1 1\n2 1\n3 1\n");
    }

    #[test]
    fn distribution_merge_is_commutative() {
        let a: Distribution = [nums(&[1]), nums(&[2]), nums(&[1])].into_iter().collect();
        let b: Distribution = [nums(&[2]), nums(&[3])].into_iter().collect();
        let ab = a.clone().merge(b.clone());
        assert_eq!(ab, b.merge(a));
        assert_eq!(ab.total(), BigUint::from(5u32));
    }
}
