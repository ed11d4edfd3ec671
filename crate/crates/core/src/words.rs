//! Words over the naturals, the two structured word families (permutations
//! and inversion sequences) and the pattern-containment engines.
//!
//! Positions are 1-based in every public contract; storage is 0-based.
//! Containment uses order isomorphism with *equalities preserved*, so a
//! pattern such as `101` is matched only by subwords `aba` with `a > b`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the naturals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }
}

impl Deref for Word {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<&[u32]> for Word {
    fn from(s: &[u32]) -> Self {
        Word(s.to_vec())
    }
}

/// A permutation of `{1,..,n}` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            return Err(Error::NotAPermutation(values));
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees the values are exactly `1..=n`.
    pub(crate) fn new_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for Permutation {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0, self.0.len() >= 10)
    }
}

/// A sequence `(e_1,..,e_n)` with `0 <= e_i < i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence(Vec<u32>);

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        for (i, &e) in entries.iter().enumerate() {
            if e as usize > i {
                return Err(Error::NotAnInversionSequence {
                    position: i + 1,
                    value: e,
                });
            }
        }
        Ok(InversionSequence(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(InversionSequence::new(entries.clone()).is_ok());
        InversionSequence(entries)
    }

    pub fn zeros(n: usize) -> Self {
        InversionSequence(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// `(e_1,..,e_n,k)`, unchecked against the bound `k <= n`.
    pub fn appended(&self, k: u32) -> InversionSequence {
        let mut v = self.0.clone();
        v.push(k);
        InversionSequence(v)
    }

    /// The first `n - 1` entries.
    pub fn prefix(&self) -> InversionSequence {
        let n = self.0.len().saturating_sub(1);
        InversionSequence(self.0[..n].to_vec())
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl Deref for InversionSequence {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32], separated: bool) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if separated && i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Relabel letters to `0..m` preserving order and equalities.
pub fn flatten(letters: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = letters.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    letters
        .iter()
        .map(|l| distinct.binary_search(l).unwrap() as u32)
        .collect()
}

/// True iff `u` and `v` have the same length and the same relative order,
/// equalities included.
pub fn order_isomorphic(u: &[u32], v: &[u32]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            if u[a].cmp(&u[b]) != v[a].cmp(&v[b]) {
                return false;
            }
        }
    }
    true
}

/// A classical pattern, possibly with repeated letters, kept in flattened form.
#[derive(Clone, Debug)]
pub struct ClassicalPattern {
    letters: Vec<u32>,
    text: String,
}

impl ClassicalPattern {
    pub fn new(letters: &[u32]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::MalformedPattern(String::new()));
        }
        let text = letters.iter().map(|l| l.to_string()).collect();
        Ok(ClassicalPattern {
            letters: flatten(letters),
            text,
        })
    }

    /// Canonical flattened letters (`0..m`).
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl PartialEq for ClassicalPattern {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}
impl Eq for ClassicalPattern {}

impl fmt::Display for ClassicalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for ClassicalPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::MalformedPattern(s.to_string()));
        }
        let letters: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        Ok(ClassicalPattern {
            letters: flatten(&letters),
            text: s.to_string(),
        })
    }
}

/// A permutation pattern whose letters at the listed gaps must sit in
/// consecutive host positions. Gap `i` (1-based) joins letters `i` and `i+1`.
#[derive(Clone, Debug)]
pub struct VincularPattern {
    base: Vec<u32>,
    adjacent: Vec<usize>,
    text: String,
}

impl VincularPattern {
    pub fn new(base: &[u32], adjacent: &[usize]) -> Result<Self> {
        let k = base.len();
        if k == 0 || adjacent.iter().any(|&i| i == 0 || i >= k) {
            return Err(Error::MalformedPattern(format!("{base:?} / {adjacent:?}")));
        }
        let mut adjacent = adjacent.to_vec();
        adjacent.sort_unstable();
        adjacent.dedup();
        let mut text = String::new();
        let mut open = false;
        for (i, l) in base.iter().enumerate() {
            let pos = i + 1;
            let joins_next = adjacent.contains(&pos);
            if joins_next && !open {
                text.push('_');
                open = true;
            }
            text.push_str(&l.to_string());
            if open && !joins_next {
                text.push('_');
                open = false;
            }
        }
        if text.ends_with('_') {
            text.pop();
        }
        Ok(VincularPattern {
            base: flatten(base),
            adjacent,
            text,
        })
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    /// Sorted 1-based gap indices.
    pub fn adjacent(&self) -> &[usize] {
        &self.adjacent
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    fn gap_flags(&self) -> Vec<bool> {
        let mut g = vec![false; self.base.len().saturating_sub(1)];
        for &i in &self.adjacent {
            g[i - 1] = true;
        }
        g
    }
}

impl PartialEq for VincularPattern {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.adjacent == other.adjacent
    }
}
impl Eq for VincularPattern {}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Parses `2_41_3`: segments between underscore pairs are adjacency blocks.
impl FromStr for VincularPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::MalformedPattern(s.to_string());
        let mut base = Vec::new();
        let mut adjacent = Vec::new();
        for (seg_idx, seg) in s.split('_').enumerate() {
            if !seg.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let underlined = seg_idx % 2 == 1;
            if underlined && seg.len() < 2 {
                return Err(bad());
            }
            let start = base.len();
            base.extend(seg.chars().map(|c| c.to_digit(10).unwrap()));
            if underlined {
                adjacent.extend(start + 1..base.len());
            }
        }
        if base.is_empty() || s.split('_').count().is_multiple_of(2) {
            return Err(bad());
        }
        VincularPattern::new(&base, &adjacent).map(|mut p| {
            p.text = s.to_string();
            p
        })
    }
}

/// Either pattern kind; the avoidance sets of the library mix both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Classical(ClassicalPattern),
    Vincular(VincularPattern),
}

impl Pattern {
    pub fn len(&self) -> usize {
        match self {
            Pattern::Classical(p) => p.len(),
            Pattern::Vincular(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contained_in(&self, w: &[u32]) -> bool {
        match self {
            Pattern::Classical(p) => contains_classical(w, p),
            Pattern::Vincular(p) => contains_vincular(w, p),
        }
    }

    /// Containment restricted to occurrences that use the last letter of `w`.
    pub(crate) fn contained_ending_at_last(&self, w: &[u32]) -> bool {
        match self {
            Pattern::Classical(p) => find_occurrence(w, &p.letters, &[], true),
            Pattern::Vincular(p) => find_occurrence(w, &p.base, &p.gap_flags(), true),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Classical(p) => p.fmt(f),
            Pattern::Vincular(p) => p.fmt(f),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('_') {
            s.parse().map(Pattern::Vincular)
        } else {
            s.parse().map(Pattern::Classical)
        }
    }
}

/// Parses a comma-separated pattern list such as `2_41_3,3_14_2`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<Pattern>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::MalformedPattern(s.to_string()));
    }
    parts.into_iter().map(str::parse).collect()
}

/// Backtracking search for an occurrence of `pat` in `host`.
///
/// `gaps[j]` forces pattern letters `j` and `j+1` onto consecutive host
/// positions; `anchor_last` forces the final pattern letter onto the last
/// host position.
fn find_occurrence(host: &[u32], pat: &[u32], gaps: &[bool], anchor_last: bool) -> bool {
    let n = host.len();
    let k = pat.len();
    if k == 0 {
        return !anchor_last || n == 0;
    }
    if k > n {
        return false;
    }
    let mut pos = vec![0usize; k];

    fn consistent(host: &[u32], pat: &[u32], pos: &[usize], j: usize, idx: usize) -> bool {
        (0..j).all(|l| host[pos[l]].cmp(&host[idx]) == pat[l].cmp(&pat[j]))
    }

    fn go(host: &[u32], pat: &[u32], gaps: &[bool], anchor_last: bool, pos: &mut [usize], j: usize) -> bool {
        let n = host.len();
        let k = pat.len();
        if j == k {
            return true;
        }
        let mut lo = if j == 0 { 0 } else { pos[j - 1] + 1 };
        let mut hi = n - (k - j);
        if j > 0 && gaps.get(j - 1).copied().unwrap_or(false) {
            hi = hi.min(lo);
        }
        if anchor_last && j == k - 1 {
            lo = lo.max(n - 1);
        }
        for idx in lo..=hi {
            if consistent(host, pat, pos, j, idx) {
                pos[j] = idx;
                if go(host, pat, gaps, anchor_last, pos, j + 1) {
                    return true;
                }
            }
        }
        false
    }

    go(host, pat, gaps, anchor_last, &mut pos, 0)
}

/// True iff some subsequence of `w` is order-isomorphic to `p`.
pub fn contains_classical(w: &[u32], p: &ClassicalPattern) -> bool {
    find_occurrence(w, &p.letters, &[], false)
}

/// True iff `w` has an occurrence of the base of `p` with the required
/// adjacencies.
pub fn contains_vincular(w: &[u32], p: &VincularPattern) -> bool {
    find_occurrence(w, &p.base, &p.gap_flags(), false)
}

/// Conjunction of avoidance over a mixed pattern list.
pub fn avoids_all(w: &[u32], ps: &[Pattern]) -> bool {
    ps.iter().all(|p| !p.contained_in(w))
}

/// One of the seven binary relations used in relation-triple avoidance.
/// `Any` holds for every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    Any,
}

impl Relation {
    #[inline]
    pub fn holds(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Lt => a < b,
            Relation::Gt => a > b,
            Relation::Le => a <= b,
            Relation::Ge => a >= b,
            Relation::Eq => a == b,
            Relation::Ne => a != b,
            Relation::Any => true,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Any => "-",
        }
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "<" => Relation::Lt,
            ">" => Relation::Gt,
            "<=" | "≤" => Relation::Le,
            ">=" | "≥" => Relation::Ge,
            "=" => Relation::Eq,
            "!=" | "≠" => Relation::Ne,
            "-" | "−" => Relation::Any,
            other => return Err(Error::MalformedTriple(other.to_string())),
        })
    }
}

/// `(rho1, rho2, rho3)`: a sequence violates it when some `i<j<k` has
/// `e_i rho1 e_j`, `e_j rho2 e_k` and `e_i rho3 e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationTriple {
    pub rho1: Relation,
    pub rho2: Relation,
    pub rho3: Relation,
}

impl RelationTriple {
    pub const fn new(rho1: Relation, rho2: Relation, rho3: Relation) -> Self {
        RelationTriple { rho1, rho2, rho3 }
    }

    /// `(>=,-,>=)`, counted by the Catalan numbers.
    pub const CATALAN: RelationTriple = RelationTriple::new(Relation::Ge, Relation::Any, Relation::Ge);
    /// `(>=,-,>)`, counted by the large Schröder numbers.
    pub const SCHRODER: RelationTriple = RelationTriple::new(Relation::Ge, Relation::Any, Relation::Gt);
    /// `(>=,>=,>)`, counted by the Baxter numbers.
    pub const BAXTER: RelationTriple = RelationTriple::new(Relation::Ge, Relation::Ge, Relation::Gt);

    #[inline]
    fn matches(&self, a: u32, b: u32, c: u32) -> bool {
        self.rho1.holds(a, b) && self.rho2.holds(b, c) && self.rho3.holds(a, c)
    }
}

impl fmt::Display for RelationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.rho1.symbol(),
            self.rho2.symbol(),
            self.rho3.symbol()
        )
    }
}

impl FromStr for RelationTriple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::MalformedTriple(s.to_string()));
        }
        let r = |p: &str| p.parse::<Relation>().map_err(|_| Error::MalformedTriple(s.to_string()));
        Ok(RelationTriple::new(r(parts[0])?, r(parts[1])?, r(parts[2])?))
    }
}

/// True iff some `i<j<k` satisfies all three relations.
pub fn violates_triple(e: &[u32], r: &RelationTriple) -> bool {
    let n = e.len();
    for i in 0..n {
        for j in i + 1..n {
            if !r.rho1.holds(e[i], e[j]) {
                continue;
            }
            for k in j + 1..n {
                if r.matches(e[i], e[j], e[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Violations whose third index is the last position.
pub(crate) fn violates_triple_at_last(e: &[u32], r: &RelationTriple) -> bool {
    let n = e.len();
    if n < 3 {
        return false;
    }
    let c = e[n - 1];
    for i in 0..n - 1 {
        if !r.rho3.holds(e[i], c) {
            continue;
        }
        for j in i + 1..n - 1 {
            if r.matches(e[i], e[j], c) {
                return true;
            }
        }
    }
    false
}
