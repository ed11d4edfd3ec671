use std::fmt;

use num_rational::BigRational;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A power series in one distinguished variable, known exactly through
/// `order`, with Laurent-polynomial coefficients in a second variable.
///
/// Results never claim more precision than their inputs: the order of a
/// sum or product is the smaller input order, and dividing by a series of
/// valuation `v` loses `v` orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: char,
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(var: char, order: usize) -> Self {
        TruncatedSeries {
            var,
            order,
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// A polynomial in the series variable, truncated at `order`.
    pub fn from_coeffs(var: char, order: usize, coeffs: Vec<LaurentPoly>) -> Self {
        let mut s = Self::zero(var, order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn constant(var: char, order: usize, c: LaurentPoly) -> Self {
        Self::from_coeffs(var, order, vec![c])
    }

    pub fn one(var: char, order: usize) -> Self {
        Self::constant(var, order, LaurentPoly::one())
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            var: self.var,
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        TruncatedSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Coefficientwise `x -> 1/x` in the inner variable.
    pub fn reflect(&self) -> Self {
        self.map(LaurentPoly::reflect)
    }

    pub fn positive_part(&self) -> Self {
        self.map(LaurentPoly::positive_part)
    }

    pub fn negative_part(&self) -> Self {
        self.map(LaurentPoly::negative_part)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|x| x * c)
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(self.var, other.var, "mixing series in different variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries {
            var: self.var,
            order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_var(other);
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncatedSeries {
            var: self.var,
            order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        let order = self.order.min(other.order);
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
                }
            }
        }
        TruncatedSeries {
            var: self.var,
            order,
            coeffs,
        }
    }

    /// Multiply by `var^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries {
            var: self.var,
            order: self.order + k,
            coeffs,
        }
    }

    /// Divide by `var^k`; errors unless the first `k` coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::Series(format!(
                "cannot divide an order-{} series by {}^{k}",
                self.order, self.var
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "division by {}^{k}: coefficient of {}^{i} is nonzero ({})",
                self.var, self.var, self.coeffs[i]
            )));
        }
        Ok(TruncatedSeries {
            var: self.var,
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Exact quotient. The divisor's leading coefficient (after removing its
    /// valuation) must divide every intermediate remainder exactly.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor);
        let v = divisor
            .valuation()
            .ok_or_else(|| Error::Series("division by the zero series".into()))?;
        let num_val = self.valuation().unwrap_or(usize::MAX);
        if num_val < v {
            return Err(Error::Series(format!(
                "dividend valuation {num_val} is below divisor valuation {v}"
            )));
        }
        let order = self.order.min(divisor.order);
        let a = self.truncate(order).shift_down(v)?;
        let b = divisor.truncate(order).shift_down(v)?;
        let order = a.order;
        let lead = &b.coeffs[0];
        let mut q: Vec<LaurentPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = a.coeffs[n].clone();
            for j in 1..=n {
                if !b.coeffs[j].is_zero() && !q[n - j].is_zero() {
                    acc = &acc - &(&b.coeffs[j] * &q[n - j]);
                }
            }
            q.push(acc.div_exact(lead)?);
        }
        Ok(TruncatedSeries {
            var: self.var,
            order,
            coeffs: q,
        })
    }

    /// Square root with constant term 1, by Newton iteration
    /// `s <- (s + a/s) / 2` with doubling precision; the result is squared
    /// back and compared before it is returned.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != LaurentPoly::one() {
            return Err(Error::Series(format!(
                "sqrt needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let half = LaurentPoly::constant(BigRational::new(1.into(), 2.into()));
        let mut s = TruncatedSeries::one(self.var, 0);
        let mut prec = 0;
        while prec < self.order {
            prec = (2 * prec + 1).min(self.order);
            let a = self.truncate(prec);
            let s_ext = TruncatedSeries::from_coeffs(self.var, prec, s.coeffs.clone());
            s = s_ext.add(&a.div(&s_ext)?).scale(&half);
        }
        let s = TruncatedSeries::from_coeffs(self.var, self.order, s.coeffs);
        if s.mul(&s) != *self {
            return Err(Error::Invariant("series square root does not square back".into()));
        }
        Ok(s)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.var, self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Errors if the coefficient of `var^n` has an exponent outside
    /// `[-bound(n), bound(n)]`.
    pub fn check_exponent_bound(&self, bound: impl Fn(usize) -> i64) -> Result<()> {
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.within(bound(n)) {
                return Err(Error::Series(format!(
                    "exponent escape at {}^{n}: {c} exceeds +-{}",
                    self.var,
                    bound(n)
                )));
            }
        }
        Ok(())
    }

    /// True iff every coefficient has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_integral)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{}^{n}", self.var)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}
