//! Numeric and set-valued statistics.
//!
//! Set-valued statistics are returned as sorted vectors of 1-based
//! positions (or of values, for `ROW`). A numeric statistic written in lower
//! case is the cardinality of its upper-case set-valued counterpart.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{
    contains_classical, violates_triple, violates_triple_at_last, ClassicalPattern, InversionSequence, Permutation,
    RelationTriple,
};

/// A statistic value: a number or a canonically sorted set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum StatValue {
    Num(u64),
    Set(Vec<u32>),
}

impl StatValue {
    pub fn set(mut items: Vec<u32>) -> Self {
        items.sort_unstable();
        items.dedup();
        StatValue::Set(items)
    }

    pub fn as_num(&self) -> Option<u64> {
        match self {
            StatValue::Num(n) => Some(*n),
            StatValue::Set(_) => None,
        }
    }
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Num(n) => write!(f, "{n}"),
            StatValue::Set(s) => {
                write!(f, "{{")?;
                for (i, x) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermStats {
    #[serde(rename = "DES")]
    pub des_set: Vec<u32>,
    #[serde(rename = "VID")]
    pub vid: Vec<u32>,
    #[serde(rename = "LMA")]
    pub lma_set: Vec<u32>,
    #[serde(rename = "LMI")]
    pub lmi_set: Vec<u32>,
    #[serde(rename = "RMA")]
    pub rma_set: Vec<u32>,
    #[serde(rename = "RMI")]
    pub rmi_set: Vec<u32>,
    pub des: u32,
    pub ides: u32,
    pub iasc: u32,
    pub asc: u32,
    pub lma: u32,
    pub rma: u32,
    pub last: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvSeqStats {
    #[serde(rename = "ASC")]
    pub asc_set: Vec<u32>,
    #[serde(rename = "DIST")]
    pub dist_set: Vec<u32>,
    #[serde(rename = "ZERO")]
    pub zero: Vec<u32>,
    #[serde(rename = "EMA")]
    pub ema: Vec<u32>,
    #[serde(rename = "RMI")]
    pub rmi: Vec<u32>,
    #[serde(rename = "ROW")]
    pub row: Vec<u32>,
    pub asc: u32,
    pub dist: u32,
    pub last: Option<u32>,
}

fn positions(n: usize, pred: impl Fn(usize) -> bool) -> Vec<u32> {
    (0..n).filter(|&i| pred(i)).map(|i| i as u32 + 1).collect()
}

pub fn descent_set(w: &[u32]) -> Vec<u32> {
    positions(w.len().saturating_sub(1), |i| w[i] > w[i + 1])
}

pub fn ascent_set(w: &[u32]) -> Vec<u32> {
    positions(w.len().saturating_sub(1), |i| w[i] < w[i + 1])
}

pub fn left_to_right_maxima(w: &[u32]) -> Vec<u32> {
    positions(w.len(), |i| w[..i].iter().all(|&x| x < w[i]))
}

pub fn left_to_right_minima(w: &[u32]) -> Vec<u32> {
    positions(w.len(), |i| w[..i].iter().all(|&x| x > w[i]))
}

pub fn right_to_left_maxima(w: &[u32]) -> Vec<u32> {
    positions(w.len(), |i| w[i + 1..].iter().all(|&x| x < w[i]))
}

/// Positions `i` with `w_i < w_j` for all `j > i`.
pub fn right_to_left_minima(w: &[u32]) -> Vec<u32> {
    positions(w.len(), |i| w[i + 1..].iter().all(|&x| x > w[i]))
}

/// Positions `i >= 2` whose value plus one sits to the left.
pub fn vid(pi: &Permutation) -> Vec<u32> {
    let inv = pi.inverse();
    positions(pi.len(), |i| {
        let v = pi[i] as usize;
        i >= 1 && v < pi.len() && (inv[v] as usize) < i + 1
    })
}

pub fn perm_stats(pi: &Permutation) -> PermStats {
    let n = pi.len() as u32;
    let des_set = descent_set(pi);
    let ides = descent_set(&pi.inverse()).len() as u32;
    let lma_set = left_to_right_maxima(pi);
    let rma_set = right_to_left_maxima(pi);
    let des = des_set.len() as u32;
    PermStats {
        vid: vid(pi),
        lmi_set: left_to_right_minima(pi),
        rmi_set: right_to_left_minima(pi),
        des,
        ides,
        iasc: n.saturating_sub(1) - ides,
        asc: n.saturating_sub(1) - des,
        lma: lma_set.len() as u32,
        rma: rma_set.len() as u32,
        last: pi.last().copied(),
        des_set,
        lma_set,
        rma_set,
    }
}

/// Positions of the last occurrence of each distinct positive entry.
pub fn dist_set(e: &[u32]) -> Vec<u32> {
    positions(e.len(), |i| e[i] != 0 && e[i + 1..].iter().all(|&x| x != e[i]))
}

pub fn zero_set(e: &[u32]) -> Vec<u32> {
    positions(e.len(), |i| e[i] == 0)
}

/// Positions whose entry reaches its ceiling `i - 1`.
pub fn ema_set(e: &[u32]) -> Vec<u32> {
    positions(e.len(), |i| e[i] as usize == i)
}

/// Distinct positive values.
pub fn row_set(e: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = e.iter().copied().filter(|&x| x != 0).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn invseq_stats(e: &InversionSequence) -> InvSeqStats {
    let asc_set = ascent_set(e);
    let dist_set = dist_set(e);
    InvSeqStats {
        asc: asc_set.len() as u32,
        dist: dist_set.len() as u32,
        zero: zero_set(e),
        ema: ema_set(e),
        rmi: right_to_left_minima(e),
        row: row_set(e),
        last: e.last(),
        asc_set,
        dist_set,
    }
}

/// Number of inversions `i < j` with `w_i > w_j`.
pub fn inversions(w: &[u32]) -> u64 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

fn supported_for_cri(r: &RelationTriple) -> bool {
    [
        RelationTriple::CATALAN,
        RelationTriple::SCHRODER,
        RelationTriple::BAXTER,
    ]
    .contains(r)
}

/// The least `c` with `(e_1,..,e_n,c)` still avoiding `r`.
///
/// Only the Catalan, Schröder and Baxter triples are accepted; for those the
/// admissible appended values form the interval `[cri(e), n]`.
pub fn critical_value(e: &[u32], r: &RelationTriple) -> Result<u32> {
    if !supported_for_cri(r) {
        return Err(Error::UnsupportedTriple(r.to_string()));
    }
    if violates_triple(e, r) {
        return Err(Error::ViolatesTriple(e.to_vec(), r.to_string()));
    }
    let n = e.len() as u32;
    let mut ext = e.to_vec();
    ext.push(0);
    for c in 0..=n {
        *ext.last_mut().unwrap() = c;
        if !violates_triple_at_last(&ext, r) {
            return Ok(c);
        }
    }
    Err(Error::Invariant(format!("no admissible extension of {e:?} under {r}")))
}

/// The outline of a 021-avoiding inversion sequence: east-step heights and
/// the red (zero-entry) positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoColoredDyckPath {
    pub heights: Vec<u32>,
    pub red: Vec<u32>,
}

impl TwoColoredDyckPath {
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Heights stay weakly below the diagonal and never decrease.
    pub fn is_dyck(&self) -> bool {
        self.heights.iter().enumerate().all(|(i, &d)| d as usize <= i) && self.heights.windows(2).all(|w| w[0] <= w[1])
    }
}

fn pattern_021() -> ClassicalPattern {
    ClassicalPattern::new(&[0, 2, 1]).unwrap()
}

fn require_021_avoider(e: &[u32]) -> Result<()> {
    if contains_classical(e, &pattern_021()) {
        return Err(Error::Contains021(e.to_vec()));
    }
    Ok(())
}

pub fn outline(e: &[u32]) -> Result<TwoColoredDyckPath> {
    require_021_avoider(e)?;
    let mut running_max = 0;
    let heights = e
        .iter()
        .map(|&x| {
            running_max = running_max.max(x);
            if x != 0 {
                x
            } else {
                running_max
            }
        })
        .collect();
    Ok(TwoColoredDyckPath {
        heights,
        red: zero_set(e),
    })
}

/// Zero positions sandwiched between two equal positive entries.
pub fn covered_zeros(e: &[u32]) -> Vec<u32> {
    positions(e.len(), |i| {
        e[i] == 0 && e[..i].iter().any(|&a| a != 0 && e[i + 1..].contains(&a))
    })
}

/// Exposed positions: not a covered zero, and `i - d_i` is strictly below
/// `j - d_j` for every later `j`.
pub fn expo(e: &[u32]) -> Result<Vec<u32>> {
    let d = outline(e)?.heights;
    let covered = covered_zeros(e);
    let slack: Vec<i64> = d.iter().enumerate().map(|(i, &h)| i as i64 + 1 - h as i64).collect();
    Ok(positions(e.len(), |i| {
        !covered.contains(&(i as u32 + 1)) && slack[i + 1..].iter().all(|&s| slack[i] < s)
    }))
}

/// Named statistic selectors, shared by the CLI and the distribution
/// collectors. Upper-case names are set-valued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    DesSet,
    Vid,
    LmaSet,
    LmiSet,
    RmaSet,
    RmiSet,
    AscSet,
    DistSet,
    Zero,
    Ema,
    Row,
    Expo,
    Des,
    Ides,
    Iasc,
    Asc,
    Lma,
    Rma,
    Dist,
    Last,
}

const PERM: &str = "permutations";
const INVSEQ: &str = "inversion sequences";

impl Stat {
    pub const ALL: [Stat; 20] = [
        Stat::DesSet,
        Stat::Vid,
        Stat::LmaSet,
        Stat::LmiSet,
        Stat::RmaSet,
        Stat::RmiSet,
        Stat::AscSet,
        Stat::DistSet,
        Stat::Zero,
        Stat::Ema,
        Stat::Row,
        Stat::Expo,
        Stat::Des,
        Stat::Ides,
        Stat::Iasc,
        Stat::Asc,
        Stat::Lma,
        Stat::Rma,
        Stat::Dist,
        Stat::Last,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::DesSet => "DES",
            Stat::Vid => "VID",
            Stat::LmaSet => "LMA",
            Stat::LmiSet => "LMI",
            Stat::RmaSet => "RMA",
            Stat::RmiSet => "RMI",
            Stat::AscSet => "ASC",
            Stat::DistSet => "DIST",
            Stat::Zero => "ZERO",
            Stat::Ema => "EMA",
            Stat::Row => "ROW",
            Stat::Expo => "EXPO",
            Stat::Des => "des",
            Stat::Ides => "ides",
            Stat::Iasc => "iasc",
            Stat::Asc => "asc",
            Stat::Lma => "lma",
            Stat::Rma => "rma",
            Stat::Dist => "dist",
            Stat::Last => "last",
        }
    }

    fn wrong_universe(self, universe: &'static str) -> Error {
        Error::StatisticUniverse {
            stat: self.name().to_string(),
            universe,
        }
    }

    pub fn eval_perm(self, pi: &Permutation) -> Result<StatValue> {
        let num = |x: usize| Ok(StatValue::Num(x as u64));
        let n = pi.len();
        match self {
            Stat::DesSet => Ok(StatValue::Set(descent_set(pi))),
            Stat::Vid => Ok(StatValue::Set(vid(pi))),
            Stat::LmaSet => Ok(StatValue::Set(left_to_right_maxima(pi))),
            Stat::LmiSet => Ok(StatValue::Set(left_to_right_minima(pi))),
            Stat::RmaSet => Ok(StatValue::Set(right_to_left_maxima(pi))),
            Stat::RmiSet => Ok(StatValue::Set(right_to_left_minima(pi))),
            Stat::Des => num(descent_set(pi).len()),
            Stat::Ides => num(descent_set(&pi.inverse()).len()),
            Stat::Iasc => num(n.saturating_sub(1) - descent_set(&pi.inverse()).len()),
            Stat::Asc => num(n.saturating_sub(1) - descent_set(pi).len()),
            Stat::Lma => num(left_to_right_maxima(pi).len()),
            Stat::Rma => num(right_to_left_maxima(pi).len()),
            Stat::Last => pi.last().map(|&l| StatValue::Num(l as u64)).ok_or(Error::EmptyObject),
            _ => Err(self.wrong_universe(PERM)),
        }
    }

    pub fn eval_invseq(self, e: &InversionSequence) -> Result<StatValue> {
        let num = |x: usize| Ok(StatValue::Num(x as u64));
        match self {
            Stat::AscSet => Ok(StatValue::Set(ascent_set(e))),
            Stat::DistSet => Ok(StatValue::Set(dist_set(e))),
            Stat::Zero => Ok(StatValue::Set(zero_set(e))),
            Stat::Ema => Ok(StatValue::Set(ema_set(e))),
            Stat::RmiSet => Ok(StatValue::Set(right_to_left_minima(e))),
            Stat::Row => Ok(StatValue::Set(row_set(e))),
            Stat::Expo => expo(e).map(StatValue::Set),
            Stat::Asc => num(ascent_set(e).len()),
            Stat::Dist => num(dist_set(e).len()),
            Stat::Last => e.last().map(|l| StatValue::Num(l as u64)).ok_or(Error::EmptyObject),
            _ => Err(self.wrong_universe(INVSEQ)),
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == s.trim())
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn inv(v: &[u32]) -> InversionSequence {
        InversionSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn singleton_permutation() {
        let s = perm_stats(&perm(&[1]));
        assert!(s.des_set.is_empty() && s.vid.is_empty());
        assert_eq!(
            (s.lma_set, s.lmi_set, s.rma_set, s.rmi_set),
            (vec![1], vec![1], vec![1], vec![1])
        );
    }

    #[test]
    fn permutation_21() {
        let s = perm_stats(&perm(&[2, 1]));
        assert_eq!(s.des_set, vec![1]);
        assert_eq!(s.vid, vec![2]);
        assert_eq!(s.lma_set, vec![1]);
        assert_eq!(s.lmi_set, vec![1, 2]);
        assert_eq!(s.rma_set, vec![1, 2]);
        assert_eq!(s.rmi_set, vec![2]);
        assert_eq!((s.des, s.ides, s.asc, s.iasc, s.last), (1, 1, 0, 0, Some(1)));
    }

    #[test]
    fn permutation_2413() {
        let s = perm_stats(&perm(&[2, 4, 1, 3]));
        assert_eq!(s.des_set, vec![2]);
        assert_eq!(s.des, 1);
        assert_eq!(descent_set(&[3, 1, 4, 2]), vec![1, 3]);
        assert_eq!(s.ides, 2);
    }

    #[test]
    fn empty_objects() {
        let s = perm_stats(&perm(&[]));
        assert_eq!((s.des, s.asc, s.iasc, s.last), (0, 0, 0, None));
        assert_eq!(Stat::Last.eval_perm(&perm(&[])), Err(Error::EmptyObject));
        let t = invseq_stats(&inv(&[]));
        assert!(t.zero.is_empty() && t.last.is_none());
    }

    #[test]
    fn inversion_sequence_examples() {
        let s = invseq_stats(&inv(&[0]));
        assert!(s.asc_set.is_empty() && s.dist_set.is_empty() && s.row.is_empty());
        assert_eq!((s.zero, s.ema, s.rmi, s.last), (vec![1], vec![1], vec![1], Some(0)));

        let s = invseq_stats(&inv(&[0, 1, 0, 1, 2, 0, 4]));
        assert_eq!(s.zero, vec![1, 3, 6]);
        assert_eq!(s.last, Some(4));

        let s = invseq_stats(&inv(&[0, 1, 0, 2, 2, 4]));
        assert_eq!(s.dist_set, vec![2, 5, 6]);
        assert_eq!(s.dist, 3);
        assert_eq!(s.row, vec![1, 2, 4]);
    }

    #[test]
    fn critical_value_examples() {
        let e = [0, 1, 0, 2, 2, 4];
        assert_eq!(critical_value(&e, &RelationTriple::SCHRODER), Ok(2));
        assert_eq!(critical_value(&e, &RelationTriple::CATALAN), Ok(3));
        assert_eq!(critical_value(&[0], &RelationTriple::BAXTER), Ok(0));
        assert!(matches!(
            critical_value(&[0, 0, 0], &RelationTriple::CATALAN),
            Err(Error::ViolatesTriple(..))
        ));
        let other: RelationTriple = "<,>,<".parse().unwrap();
        assert!(matches!(critical_value(&[0], &other), Err(Error::UnsupportedTriple(_))));
    }

    #[test]
    fn outline_examples() {
        let d = outline(&[0, 1, 0, 1, 2, 0, 4]).unwrap();
        assert_eq!(d.heights, vec![0, 1, 1, 1, 2, 2, 4]);
        assert_eq!(d.red, vec![1, 3, 6]);
        assert!(d.is_dyck());
        assert_eq!(
            outline(&[0]).unwrap(),
            TwoColoredDyckPath {
                heights: vec![0],
                red: vec![1]
            }
        );
        assert_eq!(outline(&[0, 1, 2]).unwrap().heights, vec![0, 1, 2]);
        assert_eq!(outline(&[0, 1, 2]).unwrap().red, vec![1]);
        assert!(matches!(outline(&[0, 0, 2, 1]), Err(Error::Contains021(_))));
    }

    #[test]
    fn expo_examples() {
        assert_eq!(expo(&[0, 1, 0, 1, 2, 0, 4]).unwrap(), vec![2, 7]);
        assert_eq!(expo(&[0]).unwrap(), vec![1]);
        assert_eq!(covered_zeros(&[0, 1, 0, 1, 2, 0, 4]), vec![3]);
        assert!(expo(&[0, 0, 2, 1]).is_err());
    }

    #[test]
    fn selectors_parse_and_respect_universe() {
        for s in Stat::ALL {
            assert_eq!(s.name().parse::<Stat>().unwrap(), s);
        }
        assert!(matches!("foo".parse::<Stat>(), Err(Error::UnknownStatistic(_))));
        assert!(Stat::Zero.eval_perm(&perm(&[1])).is_err());
        assert!(Stat::DesSet.eval_invseq(&inv(&[0])).is_err());
        assert_eq!(
            Stat::RmiSet.eval_invseq(&inv(&[0, 0])).unwrap(),
            StatValue::Set(vec![2])
        );
        assert_eq!(
            Stat::RmiSet.eval_perm(&perm(&[1, 2])).unwrap(),
            StatValue::Set(vec![1, 2])
        );
    }

    #[test]
    fn record_serializes_with_fixed_keys() {
        let json = serde_json::to_value(perm_stats(&perm(&[2, 1]))).unwrap();
        assert_eq!(json["DES"], serde_json::json!([1]));
        assert_eq!(json["VID"], serde_json::json!([2]));
        assert_eq!(json["ides"], serde_json::json!(1));
        let json = serde_json::to_value(invseq_stats(&inv(&[0, 1, 1]))).unwrap();
        assert_eq!(json["ROW"], serde_json::json!([1]));
        assert_eq!(json["DIST"], serde_json::json!([3]));
    }
}
