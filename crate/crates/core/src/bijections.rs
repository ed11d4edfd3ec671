//! Explicit maps between classes of inversion sequences and permutations.
//!
//! Every map checks its domain first and returns an error instead of
//! producing an image for an input outside it.
//!
//! The refinement sets used by the triangle recurrences, for a triple `r`
//! and `e` in `I_n(r)` with last entry `k`:
//!
//! * `A(n,k)`: the prefix `(e_1..e_{n-1})` has critical value exactly `k`;
//! * `B(n,k)`: the prefix has critical value at most `k - 1`;
//! * `C(n,k)` (Schröder only): `e` in `A(n,k)`, `e_{n-1} = n - 2` and
//!   `(e_1..e_{n-2})` has critical value `k`;
//! * `D(n,k)` (Schröder only): `A(n,k)` minus `C(n,k)`, with `k <= n - 3`.

use crate::error::{Error, Result};
use crate::stats::critical_value;
use crate::words::{violates_triple, InversionSequence, Permutation, RelationTriple};

/// The inversion-count coding: `e_i` counts earlier larger values.
pub fn theta(pi: &Permutation) -> InversionSequence {
    let e = (0..pi.len())
        .map(|i| pi[..i].iter().filter(|&&x| x > pi[i]).count() as u32)
        .collect();
    InversionSequence::new_unchecked(e)
}

/// Inverse of [`theta`]: reads `e` right to left, each entry choosing its
/// value among those still unused, counted from the top.
pub fn theta_inverse(e: &InversionSequence) -> Permutation {
    let n = e.len();
    let mut unused: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![0; n];
    for i in (0..n).rev() {
        // `e_i` earlier values exceed pi_i, so among the i+1 values still
        // available pi_i is the (e_i+1)-th largest
        let idx = unused.len() - 1 - e[i] as usize;
        out[i] = unused.remove(idx);
    }
    Permutation::new_unchecked(out)
}

fn in_class(e: &[u32], r: &RelationTriple) -> Result<()> {
    if violates_triple(e, r) {
        return Err(Error::ViolatesTriple(e.to_vec(), r.to_string()));
    }
    Ok(())
}

fn prefix_cri(e: &[u32], len: usize, r: &RelationTriple) -> Result<u32> {
    critical_value(&e[..len], r)
}

pub fn in_a(e: &[u32], r: &RelationTriple) -> Result<bool> {
    in_class(e, r)?;
    let Some(&k) = e.last() else { return Ok(false) };
    Ok(prefix_cri(e, e.len() - 1, r)? == k)
}

pub fn in_b(e: &[u32], r: &RelationTriple) -> Result<bool> {
    in_class(e, r)?;
    let Some(&k) = e.last() else { return Ok(false) };
    Ok(prefix_cri(e, e.len() - 1, r)? < k)
}

pub fn in_c(e: &[u32]) -> Result<bool> {
    let r = RelationTriple::SCHRODER;
    let n = e.len();
    if n < 2 || !in_a(e, &r)? {
        return Ok(false);
    }
    let k = e[n - 1];
    Ok(e[n - 2] as usize == n - 2 && prefix_cri(e, n - 2, &r)? == k)
}

pub fn in_d(e: &[u32]) -> Result<bool> {
    let r = RelationTriple::SCHRODER;
    let n = e.len();
    if n < 3 || !in_a(e, &r)? || in_c(e)? {
        return Ok(false);
    }
    Ok(e[n - 1] as usize + 3 <= n)
}

/// `(e_1..e_{n-1}, k)` to `(e_1..e_{n-1}, k-1)` for `e` in `B(n,k)`.
pub fn last_decrement(e: &InversionSequence, r: &RelationTriple) -> Result<InversionSequence> {
    if !in_b(e, r)? {
        return Err(Error::Precondition(format!(
            "{e} is not in B(n,k) for {r}: decrementing the last entry would leave the class"
        )));
    }
    let mut v = e.entries().to_vec();
    *v.last_mut().unwrap() -= 1;
    Ok(InversionSequence::new_unchecked(v))
}

/// The Catalan-triangle map `A(n,k) -> C(n-1,k)`: delete `e_{n-1}` if it
/// equals `n-2`, otherwise delete the unique `e_i` with `e_i = k-1` and
/// `e_{i+1} <= k-1`.
pub fn catalan_g(e: &InversionSequence) -> Result<InversionSequence> {
    let r = RelationTriple::CATALAN;
    let n = e.len();
    if n < 2 || !in_a(e, &r)? {
        return Err(Error::Precondition(format!("{e} is not in A(n,k) for {r}")));
    }
    let k = e[n - 1];
    let drop = if e[n - 2] as usize == n - 2 {
        n - 2
    } else {
        let hits: Vec<usize> = (0..n - 1)
            .filter(|&i| k >= 1 && e[i] == k - 1 && e[i + 1] < k)
            .collect();
        match hits.as_slice() {
            [i] => *i,
            _ => {
                return Err(Error::Invariant(format!(
                    "expected a unique index i with e_i = k-1 and e_(i+1) <= k-1 in {e}, found {hits:?}"
                )))
            }
        }
    };
    let mut v = e.entries().to_vec();
    v.remove(drop);
    InversionSequence::new(v)
}

/// The Schröder-triangle map `D(n,k) -> S(n-1,k)`: with `i` the leftmost
/// position holding `k`, delete the rightmost `e_j = k` with
/// `i <= j <= n-1`.
pub fn schroder_f(e: &InversionSequence) -> Result<InversionSequence> {
    if !in_d(e)? {
        return Err(Error::Precondition(format!("{e} is not in D(n,k)")));
    }
    let n = e.len();
    let k = e[n - 1];
    let i = (0..n - 1)
        .find(|&i| e[i] == k)
        .ok_or_else(|| Error::Invariant(format!("no entry equal to {k} before the end of {e}")))?;
    let j = (i..n - 1).rev().find(|&j| e[j] == k).unwrap();
    let mut v = e.entries().to_vec();
    v.remove(j);
    InversionSequence::new(v)
}

/// The shape of a `D(n,k)` member after its leftmost `k` at position `i`:
/// `e_{i+1} <= k`, then `k <= e_{i+2} <= .. <= e_{n-1}` with a strict step
/// after every entry above `k`. Positions are 1-based in the message.
pub fn schroder_d_shape(e: &[u32]) -> Result<()> {
    let n = e.len();
    let k = e[n - 1];
    let fail = |what: &str| Err(Error::Invariant(format!("{e:?}: {what}")));
    let Some(i) = (0..n - 1).find(|&i| e[i] == k) else {
        return fail("no entry equals k before the last position");
    };
    if i + 1 < n - 1 && e[i + 1] > k {
        return fail("entry after the leftmost k exceeds k");
    }
    let tail = if i + 2 < n - 1 { &e[i + 2..n - 1] } else { &[][..] };
    if tail.iter().any(|&x| x < k) {
        return fail("entry below k after position i+1");
    }
    for w in tail.windows(2) {
        let ok = if w[0] > k { w[0] < w[1] } else { w[0] <= w[1] };
        if !ok {
            return fail("tail not increasing as required");
        }
    }
    Ok(())
}

/// Pieces of a `(>=,-,>=)`-avoider around its last ceiling position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub t: usize,
    pub left: InversionSequence,
    pub right: InversionSequence,
}

/// Cuts `e` at `t = max{i : e_i = i-1}` into `(e_1..e_{t-1}, e_{t+1})` and
/// `(e_{t+2}-t, .., e_n-t)`.
pub fn split_222(e: &InversionSequence) -> Result<Split> {
    in_class(e, &RelationTriple::CATALAN)?;
    let n = e.len();
    let t = (0..n)
        .rev()
        .find(|&i| e[i] as usize == i)
        .map(|i| i + 1)
        .ok_or(Error::EmptyObject)?;
    if t == n {
        return Err(Error::Precondition(format!(
            "{e} ends at its ceiling; nothing to split"
        )));
    }
    let mut left = e[..t - 1].to_vec();
    left.push(e[t]);
    let right = e[t + 1..]
        .iter()
        .map(|&x| {
            x.checked_sub(t as u32)
                .ok_or_else(|| Error::Invariant(format!("{e}: entry {x} after the cut is below {t}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Split {
        t,
        left: InversionSequence::new(left)?,
        right: InversionSequence::new(right)?,
    })
}

/// Inverse of [`split_222`].
pub fn join_222(s: &Split) -> Result<InversionSequence> {
    let t = s.t;
    if s.left.len() != t {
        return Err(Error::Precondition(format!("left piece must have length {t}")));
    }
    let mut v = s.left[..t - 1].to_vec();
    v.push(t as u32 - 1);
    v.push(s.left[t - 1]);
    v.extend(s.right.iter().map(|&x| x + t as u32));
    InversionSequence::new(v)
}
