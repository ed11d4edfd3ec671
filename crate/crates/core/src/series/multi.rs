use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::rat;

/// Exponent vector over the three variables.
pub type Exps = [i32; 3];

/// Sparse polynomial in three named variables with rational coefficients.
/// Zero coefficients are never stored, so derived equality is structural
/// equality of the canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    names: [char; 3],
    terms: BTreeMap<Exps, BigRational>,
}

impl MultiPoly {
    pub fn zero(names: [char; 3]) -> Self {
        MultiPoly {
            names,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(names: [char; 3], c: BigRational, exps: Exps) -> Self {
        let mut p = Self::zero(names);
        p.add_term(exps, c);
        p
    }

    pub fn constant(names: [char; 3], c: i64) -> Self {
        Self::term(names, rat(c), [0; 3])
    }

    /// The `i`-th variable.
    pub fn var(names: [char; 3], i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::term(names, rat(1), e)
    }

    pub fn names(&self) -> [char; 3] {
        self.names
    }

    pub fn add_term(&mut self, exps: Exps, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: Exps) -> BigRational {
        self.terms.get(&exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn rebuild(&self, f: impl Fn(Exps) -> Option<Exps>) -> Self {
        let mut out = Self::zero(self.names);
        for (&e, c) in &self.terms {
            if let Some(e2) = f(e) {
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Exchange variables `i` and `j`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        self.rebuild(|mut e| {
            e.swap(i, j);
            Some(e)
        })
    }

    /// Substitute variable `i := 1`.
    pub fn at_one(&self, i: usize) -> Self {
        self.rebuild(|mut e| {
            e[i] = 0;
            Some(e)
        })
    }

    /// Substitute variable `i := ` variable `j`.
    pub fn identify(&self, i: usize, j: usize) -> Self {
        self.rebuild(|mut e| {
            e[j] += e[i];
            e[i] = 0;
            Some(e)
        })
    }

    /// Drop every term whose degree in variable `i` exceeds `deg`.
    pub fn truncate(&self, i: usize, deg: i32) -> Self {
        self.rebuild(|e| (e[i] <= deg).then_some(e))
    }

    pub fn max_degree(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.names);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }

    /// Product with every term of degree above `deg` in variable `i`
    /// discarded as it is formed.
    pub fn mul_truncated(&self, other: &Self, i: usize, deg: i32) -> Self {
        let mut out = Self::zero(self.names);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a[i] + b[i] <= deg {
                    out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = rat(c);
        self.clone().map_coeffs(|x| x * &c)
    }

    fn map_coeffs(mut self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        let terms = std::mem::take(&mut self.terms);
        for (e, c) in terms {
            self.add_term(e, f(&c));
        }
        self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, &d) in self.names.iter().zip(e) {
                match d {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{d}")?,
                }
            }
        }
        Ok(())
    }
}

/// `K(x,y) = xy - t(1+x)(1+y)(x+y)` over the variables `(t, x, y)`.
pub fn kernel() -> MultiPoly {
    let names = ['t', 'x', 'y'];
    let t = MultiPoly::var(names, 0);
    let x = MultiPoly::var(names, 1);
    let y = MultiPoly::var(names, 2);
    let one = MultiPoly::constant(names, 1);
    let rest = t.mul(&one.add(&x)).mul(&one.add(&y)).mul(&x.add(&y));
    x.mul(&y).sub(&rest)
}
