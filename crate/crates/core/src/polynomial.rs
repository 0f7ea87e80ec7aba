//! Integer-coefficient polynomials in one variable, used for Eulerian and
//! multi-Eulerian polynomials and for f/h-vectors of simplicial complexes.

use std::collections::BTreeMap;
use std::fmt;

/// A polynomial with `i64` coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = IntPolynomial::zero();
        p.set(0, c);
        p
    }

    /// The monomial `c * t^d`.
    pub fn monomial(d: u32, c: i64) -> Self {
        let mut p = IntPolynomial::zero();
        p.set(d, c);
        p
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Self {
        let mut p = IntPolynomial::zero();
        for &(d, c) in pairs {
            p.add_term(d, c);
        }
        p
    }

    pub fn set(&mut self, degree: u32, coeff: i64) {
        if coeff == 0 {
            self.coeffs.remove(&degree);
        } else {
            self.coeffs.insert(degree, coeff);
        }
    }

    pub fn add_term(&mut self, degree: u32, coeff: i64) {
        let c = self.coeff(degree).checked_add(coeff).expect("coefficient overflow");
        self.set(degree, c);
    }

    pub fn coeff(&self, degree: u32) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c);
        }
        out
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, -c);
        }
        out
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                out.add_term(d1 + d2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d, a) in self.terms() {
            out.add_term(d, a.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn eval(&self, x: i64) -> i64 {
        let mut total = 0i64;
        for (d, c) in self.terms() {
            let mut p = 1i64;
            for _ in 0..d {
                p = p.checked_mul(x).expect("eval overflow");
            }
            total = total.checked_add(c.checked_mul(p).expect("eval overflow")).expect("eval overflow");
        }
        total
    }

    pub fn derivative(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d, c) in self.terms() {
            if d > 0 {
                out.add_term(d - 1, c * d as i64);
            }
        }
        out
    }

    /// `t * d/dt` of the polynomial.
    pub fn t_times_derivative(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d, c) in self.terms() {
            if d > 0 {
                out.add_term(d, c * d as i64);
            }
        }
        out
    }

    /// `(1 - t)^e`.
    pub fn one_minus_t_power(e: u32) -> IntPolynomial {
        let mut out = IntPolynomial::constant(1);
        let factor = IntPolynomial::from_pairs(&[(0, 1), (1, -1)]);
        for _ in 0..e {
            out = out.mul(&factor);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
