use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in one variable with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(rat(1), 1)
    }

    /// The reciprocal of the variable.
    pub fn xbar() -> Self {
        Self::monomial(rat(1), -1)
    }

    /// `sum c_i x^i` from integer coefficients starting at exponent 0.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i as i64, rat(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Substitute `x -> 1/x`.
    pub fn reflect(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Terms with strictly positive exponent.
    pub fn positive_part(&self) -> Self {
        LaurentPoly {
            terms: self.terms.range(1..).map(|(&e, v)| (e, v.clone())).collect(),
        }
    }

    /// Terms with strictly negative exponent.
    pub fn negative_part(&self) -> Self {
        LaurentPoly {
            terms: self.terms.range(..0).map(|(&e, v)| (e, v.clone())).collect(),
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `x = 1`.
    pub fn at_one(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// True iff every exponent lies in `[-bound, bound]`.
    pub fn within(&self, bound: i64) -> bool {
        self.min_exp().is_none_or(|lo| lo >= -bound) && self.max_exp().is_none_or(|hi| hi <= bound)
    }

    /// Exact quotient `self / divisor` in the Laurent ring; errors when the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        };
        let Some(nlo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        // both sides normalized to polynomials with nonzero constant term
        let den = divisor.shift(-dlo);
        let mut rem = self.shift(-nlo);
        let lead_exp = dhi - dlo;
        let lead = den.coeff(lead_exp);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < lead_exp {
                break;
            }
            let c = rem.coeff(top) / &lead;
            let e = top - lead_exp;
            rem = &rem - &den.shift(e).scale(&c);
            quot.add_term(e, c);
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves ({rem})")));
        }
        Ok(quot.shift(nlo - dlo))
    }

    /// Canonical text: `exp:num/den` terms joined by `;`, ascending exponent.
    pub fn canonical(&self) -> String {
        self.terms
            .iter()
            .map(|(e, c)| format!("{e}:{}/{}", c.numer(), c.denom()))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
