//! Exact truncated power series and the generating-function identities
//! they verify.
//!
//! Coefficients are [`LaurentPoly`]s over big rationals; nothing is ever
//! rounded. A check compares both sides coefficient by coefficient through
//! the requested order, so it certifies an identity only up to that order.
//!
//! ```
//! use invseq::series::{check, Identity};
//! let report = check(Identity::KernelRoot, 4);
//! assert!(report.passed, "{:?}", report.failure);
//! assert_eq!(report.digests.len(), 5);
//! ```

mod laurent;
mod multi;
mod truncated;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub use laurent::LaurentPoly;
pub use multi::{kernel, Exps, MultiPoly};
pub use truncated::TruncatedSeries;

use crate::enumerate::{baxter_generating_tree, invseq_avoiders, perm_avoiders, Avoidance};
use crate::error::{Error, Result};
use crate::stats::{dist_set, left_to_right_maxima, right_to_left_maxima};
use crate::words::RelationTriple;
use laurent::rat;

const T: char = 't';
const X: char = 'x';

/// The identities `series-check` knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    DistOgf,
    KernelRoot,
    BaxterFe,
    MainIdentity,
    BousquetSide,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::DistOgf,
        Identity::KernelRoot,
        Identity::BaxterFe,
        Identity::MainIdentity,
        Identity::BousquetSide,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::DistOgf => "dist-ogf",
            Identity::KernelRoot => "kernel-root",
            Identity::BaxterFe => "baxter-fe",
            Identity::MainIdentity => "main-identity",
            Identity::BousquetSide => "bousquet-side",
        }
    }

    /// The order each identity is routinely checked at.
    pub fn default_order(self) -> usize {
        match self {
            Identity::DistOgf => 9,
            Identity::KernelRoot => 10,
            Identity::BaxterFe | Identity::MainIdentity => 8,
            Identity::BousquetSide => 7,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Series(format!("unknown identity {s:?}")))
    }
}

/// Outcome of one identity check. `digests[n]` is the SHA-256 of the
/// canonical serialization of the principal series' coefficient of order
/// `n`, for regression tracking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub identity: Identity,
    pub order: usize,
    pub passed: bool,
    pub digests: Vec<String>,
    pub failure: Option<String>,
}

/// Run one identity through `order`. Algebra errors (inexact division,
/// exponent escape) count as failures and are reported, not raised.
pub fn check(identity: Identity, order: usize) -> SeriesReport {
    let run = match identity {
        Identity::DistOgf => dist_ogf(order),
        Identity::KernelRoot => kernel_root(order),
        Identity::BaxterFe => baxter_fe(order),
        Identity::MainIdentity => main_identity(order),
        Identity::BousquetSide => bousquet_side(order),
    };
    match run {
        Ok(digests) => SeriesReport {
            identity,
            order,
            passed: true,
            digests,
            failure: None,
        },
        Err(e) => SeriesReport {
            identity,
            order,
            passed: false,
            digests: Vec::new(),
            failure: Some(e.to_string()),
        },
    }
}

pub fn dist_ogf_check(n_x: usize) -> bool {
    check(Identity::DistOgf, n_x).passed
}

pub fn baxter_fe_check(n_t: usize) -> bool {
    check(Identity::BaxterFe, n_t).passed
}

pub fn main_identity_check(n_t: usize) -> bool {
    check(Identity::MainIdentity, n_t).passed
}

pub fn bousquet_side_check(n_t: usize) -> bool {
    check(Identity::BousquetSide, n_t).passed
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}

fn ensure_eq(a: &TruncatedSeries, b: &TruncatedSeries, what: &str) -> Result<()> {
    ensure(a == b, || {
        let n = (0..=a.order().min(b.order()))
            .find(|&n| a.coeff(n) != b.coeff(n))
            .unwrap_or(0);
        format!("{what}: sides differ at order {n}: {} vs {}", a.coeff(n), b.coeff(n))
    })
}

fn digest(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

fn series_digests(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(|c| digest(&c.canonical())).collect()
}

/// Exponents at order `n` stay inside `[-(3n+3), 3n+3]`.
fn bounded(s: &TruncatedSeries) -> Result<()> {
    s.check_exponent_bound(|n| 3 * n as i64 + 3)
}

fn integral(s: &TruncatedSeries, what: &str) -> Result<()> {
    ensure(s.is_integral(), || {
        format!("{what} has a non-integral coefficient: {s}")
    })
}

fn lp(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(c)
}

/// `c` as a constant series.
fn cst(var: char, order: usize, c: LaurentPoly) -> TruncatedSeries {
    TruncatedSeries::constant(var, order, c)
}

/// `(1+x)^k` for `k = 0..=max`.
fn one_plus_x_powers(max: usize) -> Vec<LaurentPoly> {
    let base = lp(&[1, 1]);
    let mut out = vec![LaurentPoly::one()];
    for k in 1..=max {
        out.push(&out[k - 1] * &base);
    }
    out
}

/// `P = sum_n x^n sum_{e in I_n(>=,-,>=)} t^dist(e)` through `x^n_x`; the
/// inner variable of each coefficient stands for `t`.
pub fn dist_polynomial(n_x: usize) -> TruncatedSeries {
    let avoid = Avoidance::Triple(RelationTriple::CATALAN);
    let coeffs = (0..=n_x)
        .map(|n| {
            let mut c = LaurentPoly::zero();
            if n > 0 {
                for e in invseq_avoiders(n, &avoid) {
                    c.add_term(dist_set(&e).len() as i64, rat(1));
                }
            }
            c
        })
        .collect();
    TruncatedSeries::from_coeffs(X, n_x, coeffs)
}

/// Both forms of the `dist` generating function: the squared form
/// `(M P + 1 - 2tx(1+x-tx))^2 = 1 - 4tx(1+x-tx)` with
/// `M = 2t^2 x(tx-1-x)`, and `P` recovered by square root and division.
fn dist_ogf(n_x: usize) -> Result<Vec<String>> {
    ensure(n_x >= 1, || "dist-ogf needs x-order at least 1".into())?;
    verify_dist_ogf(&dist_polynomial(n_x))
}

fn verify_dist_ogf(p: &TruncatedSeries) -> Result<Vec<String>> {
    let n_x = p.order();
    let hi = n_x + 1;
    // M / x = -2t^2 + (2t^3 - 2t^2) x
    let m_over_x = TruncatedSeries::from_coeffs(X, n_x, vec![lp(&[0, 0, -2]), lp(&[0, 0, -2, 2])]);
    // 1 - 2tx(1+x-tx) and 1 - 4tx(1+x-tx)
    let lin = TruncatedSeries::from_coeffs(X, hi, vec![lp(&[1]), lp(&[0, -2]), lp(&[0, -2, 2])]);
    let disc = TruncatedSeries::from_coeffs(X, hi, vec![lp(&[1]), lp(&[0, -4]), lp(&[0, -4, 4])]);

    // multiplying by x raises the order, so P's top coefficient is tested
    let q = p.mul(&m_over_x).shift_up(1).add(&lin);
    ensure_eq(&q.mul(&q), &disc, "squared dist o.g.f.")?;

    let root = disc.sqrt()?;
    // -1 + 2tx(1+x-tx) + sqrt(..) = sqrt(..) - lin
    let num = root.sub(&lin);
    let den = m_over_x.shift_up(1);
    let via_root = num.div(&den)?;
    ensure_eq(&via_root, p, "dist o.g.f. via square root")?;
    integral(&via_root, "dist o.g.f.")?;
    bounded(p)?;
    Ok(series_digests(p))
}

/// The discriminant `1 - 2t(1+x)(1+xbar) - t^2(1-x^2)(1-xbar^2)` and
/// `1 - t(1+x)(1+xbar)`, to order `hi`.
fn kernel_pieces(hi: usize) -> (TruncatedSeries, TruncatedSeries) {
    let a = lp(&[1, 2, 1]).shift(-1);
    let b = lp(&[-1, 0, 2, 0, -1]).shift(-2);
    let disc = TruncatedSeries::from_coeffs(T, hi, vec![LaurentPoly::one(), -&a.scale(&rat(2)), -&b]);
    let lin = TruncatedSeries::from_coeffs(T, hi, vec![LaurentPoly::one(), -&a]);
    (disc, lin)
}

/// The root `Y(x) = (1 - t(1+x)(1+xbar) - sqrt(disc)) / (2t(1+xbar))` of
/// the kernel that is a power series in `t`, through `t^n_t`.
pub fn kernel_root_y(n_t: usize) -> Result<TruncatedSeries> {
    let hi = n_t + 1;
    let (disc, lin) = kernel_pieces(hi);
    let root = disc.sqrt()?;
    let num = lin.sub(&root);
    match num.valuation() {
        Some(v) if v >= 1 => {}
        v => {
            return Err(Error::Series(format!(
                "numerator of Y has t-valuation {v:?}, expected >= 1"
            )))
        }
    }
    let den = cst(T, n_t, lp(&[1, 1]).shift(-1).scale(&rat(2)));
    let y = num.shift_down(1)?.div(&den)?;
    let residual = kernel_at(&y);
    ensure(residual.valuation().is_none(), || format!("K(x,Y) = {residual}"))?;
    Ok(y)
}

/// The other root keeps `+sqrt(disc)`, whose numerator starts with `2`;
/// true iff that numerator cannot be divided by `t`.
pub fn discarded_root_has_pole(n_t: usize) -> bool {
    let (disc, lin) = kernel_pieces(n_t + 1);
    let Ok(root) = disc.sqrt() else { return false };
    let num = lin.add(&root);
    num.valuation() == Some(0) && num.shift_down(1).is_err()
}

/// `K(x, y) = xy - t(1+x)(1+y)(x+y)` for a series `y` in `t`.
pub fn kernel_at(y: &TruncatedSeries) -> TruncatedSeries {
    let order = y.order();
    let x = cst(T, order, LaurentPoly::x());
    let one = TruncatedSeries::one(T, order);
    let rest = y
        .add(&one)
        .mul(&y.add(&x))
        .scale(&lp(&[1, 1]))
        .shift_up(1)
        .truncate(order);
    x.mul(y).sub(&rest)
}

fn kernel_root(n_t: usize) -> Result<Vec<String>> {
    ensure(n_t >= 1, || "kernel-root needs t-order at least 1".into())?;
    ensure(kernel().swap(1, 2) == kernel(), || "kernel is not symmetric".into())?;
    let y = kernel_root_y(n_t)?;
    ensure(y.coeff(0).is_zero(), || "Y has a constant term".into())?;
    ensure(discarded_root_has_pole(n_t), || {
        "the discarded root is a power series".into()
    })?;
    integral(&y, "Y")?;
    bounded(&y)?;
    Ok(series_digests(&y))
}

/// `F(u,v) = sum F(n,p,q) t^n u^p v^q` over `(t, u, v)` through `t^n_t`.
pub fn baxter_f(n_t: usize) -> MultiPoly {
    let tree = baxter_generating_tree(n_t);
    let mut f = MultiPoly::zero([T, 'u', 'v']);
    for (i, level) in tree.levels.iter().enumerate() {
        for (params, count) in level {
            let c = BigRational::from_integer(BigInt::from(count.clone()));
            f.add_term([i as i32 + 1, params.p as i32, params.q as i32], c);
        }
    }
    f
}

fn multi_digests(f: &MultiPoly, n_t: usize) -> Vec<String> {
    let mut per_order = vec![String::new(); n_t + 1];
    for (e, c) in f.terms() {
        let s = &mut per_order[e[0] as usize];
        if !s.is_empty() {
            s.push(';');
        }
        s.push_str(&format!("{},{}:{}/{}", e[1], e[2], c.numer(), c.denom()));
    }
    per_order.iter().map(|s| digest(s)).collect()
}

/// The Baxter functional equation with denominators cleared:
/// `[(1-u)(u-v) + tv(u-v) + tuv(1-u)] F(u,v)
///   = tuv(1-u)(u-v) + tuv(2-u)(u-v) F(1,v) + tuv(1-u) F(u,u)`.
fn baxter_fe(n_t: usize) -> Result<Vec<String>> {
    ensure(n_t >= 1, || "baxter-fe needs t-order at least 1".into())?;
    let names = [T, 'u', 'v'];
    let deg = n_t as i32;
    let f = baxter_f(n_t);
    let t = MultiPoly::var(names, 0);
    let u = MultiPoly::var(names, 1);
    let v = MultiPoly::var(names, 2);
    let one = MultiPoly::constant(names, 1);
    let one_m_u = one.sub(&u);
    let u_m_v = u.sub(&v);
    let tuv = t.mul(&u).mul(&v);

    let lhs_coeff = one_m_u.mul(&u_m_v).add(&t.mul(&v).mul(&u_m_v)).add(&tuv.mul(&one_m_u));
    let lhs = lhs_coeff.mul_truncated(&f, 0, deg);
    let rhs = tuv
        .mul(&one_m_u)
        .mul(&u_m_v)
        .add(
            &tuv.mul(&one.scale(2).sub(&u))
                .mul(&u_m_v)
                .mul_truncated(&f.at_one(1), 0, deg),
        )
        .add(&tuv.mul(&one_m_u).mul_truncated(&f.identify(2, 1), 0, deg))
        .truncate(0, deg);
    let diff = lhs.sub(&rhs);
    ensure(diff.is_zero(), || format!("functional equation residual: {diff}"))?;
    Ok(multi_digests(&f, n_t))
}

/// `F~(x) = x F(1+x, 1+x)` through `t^n_t`.
pub fn f_tilde(n_t: usize) -> TruncatedSeries {
    let tree = baxter_generating_tree(n_t);
    let pw = one_plus_x_powers(n_t + 1);
    let mut coeffs = vec![LaurentPoly::zero()];
    for level in &tree.levels {
        let mut c = LaurentPoly::zero();
        for (params, count) in level {
            let k = BigRational::from_integer(BigInt::from(count.clone()));
            c = &c + &pw[(params.p + params.q) as usize].scale(&k);
        }
        coeffs.push(c.shift(1));
    }
    TruncatedSeries::from_coeffs(T, n_t, coeffs)
}

/// `Y(1+x)(x^4 - 2Yx^3 + 2Y^2 x - 2Y + 1) / (x^2 (Y-1)(Y-x))`.
fn main_rhs(y: &TruncatedSeries) -> Result<TruncatedSeries> {
    let order = y.order();
    let c = |p: LaurentPoly| cst(T, order, p);
    let y2 = y.mul(y);
    let quartic = c(lp(&[1, 0, 0, 0, 1]))
        .sub(&y.scale(&lp(&[2, 0, 0, 2])))
        .add(&y2.scale(&lp(&[0, 2])));
    let num = y.scale(&lp(&[1, 1])).mul(&quartic);
    let den = y
        .sub(&c(LaurentPoly::one()))
        .mul(&y.sub(&c(LaurentPoly::x())))
        .scale(&lp(&[0, 0, 1]));
    num.div(&den)
}

fn main_identity(n_t: usize) -> Result<Vec<String>> {
    ensure(n_t >= 1, || "main-identity needs t-order at least 1".into())?;
    let ft = f_tilde(n_t);
    for (n, c) in ft.coeffs().iter().enumerate() {
        ensure(
            c.is_integral() && c.is_nonnegative() && c.constant_term() == rat(0),
            || format!("coefficient {n} of F~ is not in xN[x]: {c}"),
        )?;
    }
    let rhs = main_rhs(&kernel_root_y(n_t)?)?;
    bounded(&rhs)?;
    integral(&rhs, "right side")?;
    for (n, c) in rhs.coeffs().iter().enumerate() {
        ensure(c.constant_term() == rat(0), || {
            format!("right side has constant term at order {n}")
        })?;
    }
    ensure_eq(&ft.add(&ft.reflect()), &rhs, "F~(x) + F~(xbar)")?;
    ensure_eq(&rhs.positive_part(), &ft, "positive part")?;
    ensure_eq(&rhs.negative_part(), &ft.reflect(), "negative part")?;
    Ok(series_digests(&ft))
}

/// `(G~, R)` with `G~(x) = x G(1+x,1+x)`, `R(x) = x G(1+x,1)`, from the
/// Baxter permutations of each size through `n_t`.
pub fn baxter_lma_rma_series(n_t: usize) -> (TruncatedSeries, TruncatedSeries) {
    let avoid = Avoidance::patterns(&["2_41_3", "3_14_2"]).expect("Baxter patterns parse");
    let pw = one_plus_x_powers(2 * n_t);
    let mut g = vec![LaurentPoly::zero()];
    let mut r = vec![LaurentPoly::zero()];
    for n in 1..=n_t {
        let (mut gc, mut rc) = (LaurentPoly::zero(), LaurentPoly::zero());
        for pi in perm_avoiders(n, &avoid) {
            let lma = left_to_right_maxima(&pi).len();
            let rma = right_to_left_maxima(&pi).len();
            gc = &gc + &pw[lma + rma];
            rc = &rc + &pw[lma];
        }
        g.push(gc.shift(1));
        r.push(rc.shift(1));
    }
    (
        TruncatedSeries::from_coeffs(T, n_t, g),
        TruncatedSeries::from_coeffs(T, n_t, r),
    )
}

fn bousquet_side(n_t: usize) -> Result<Vec<String>> {
    ensure(n_t >= 1, || "bousquet-side needs t-order at least 1".into())?;
    let (g, r) = baxter_lma_rma_series(n_t);
    integral(&g, "G~")?;
    integral(&r, "R")?;
    let c = |p: LaurentPoly| cst(T, n_t, p);
    let sq = lp(&[1, 2, 1]);

    // (x - 2t(1+x)^2) G~ = t(1+x)^2 (x^2 - 2R)
    let factor = TruncatedSeries::from_coeffs(T, n_t, vec![LaurentPoly::x(), sq.scale(&rat(-2))]);
    let lhs = factor.mul(&g);
    let rhs = c(lp(&[0, 0, 1]))
        .sub(&r.scale(&LaurentPoly::int(2)))
        .scale(&sq)
        .shift_up(1)
        .truncate(n_t);
    ensure_eq(&lhs, &rhs, "G~ against R")?;

    // R(x) + R(xbar) = xbar^2 Y (1 + x^3 - xY)
    let y = kernel_root_y(n_t)?;
    let y_part = c(lp(&[1, 0, 0, 1]))
        .sub(&y.scale(&LaurentPoly::x()))
        .mul(&y)
        .scale(&LaurentPoly::monomial(rat(1), -2));
    ensure_eq(&r.add(&r.reflect()), &y_part, "R(x) + R(xbar)")?;

    // G~(x) + G~(xbar) = t(1+x)^2 (x^2 + xbar^2 - 2 xbar^2 Y(1+x^3-xY)) / (x - 2t(1+x)^2)
    let num = c(&lp(&[0, 0, 1]) + &LaurentPoly::monomial(rat(1), -2))
        .sub(&y_part.scale(&LaurentPoly::int(2)))
        .scale(&sq)
        .shift_up(1)
        .truncate(n_t);
    let chained = num.div(&factor)?;
    bounded(&chained)?;
    ensure_eq(&g.add(&g.reflect()), &chained, "chained identity")?;
    ensure_eq(&chained, &main_rhs(&y)?, "chained against main right side")?;
    ensure_eq(&g, &f_tilde(n_t), "F~ = G~")?;
    Ok(series_digests(&g))
}
