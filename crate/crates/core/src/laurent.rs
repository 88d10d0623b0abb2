//! Integer Laurent polynomials in one variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Finite sum of `c·q^e` with `c ≠ 0`. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `(c, e)` when the polynomial is the single term `c·q^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, *e))
    }

    /// Units of `ℤ[q, q⁻¹]` are exactly `±q^e`.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Multiplicative inverse, defined only for units.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        if !c.abs().is_one() {
            return None;
        }
        Some(Self::monomial(c.clone(), -e))
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The constant polynomial obtained by substituting `q := 1`.
    pub fn specialize_at_one(&self) -> Self {
        Self::constant(self.eval_at_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Highest power first, e.g. `q^2 - 1`, `-3q^-1`, `q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_times_q_inverse_is_one() {
        let p = &LaurentPoly::q_pow(1) * &LaurentPoly::q_pow(-1);
        assert_eq!(p, LaurentPoly::one());
        assert!(p.is_one());
    }

    #[test]
    fn braiding_control_is_not_one() {
        assert_ne!(LaurentPoly::q_pow(2), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::q_pow(2).specialize_at_one(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = LaurentPoly::from_terms([(2, 1), (0, -1)]);
        let r = &p - &LaurentPoly::q_pow(2);
        assert_eq!(r, LaurentPoly::constant(-1));
        assert!((&p - &p).is_zero());
        assert_eq!(
            LaurentPoly::from_terms([(3, 2), (3, -2)]),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn product_of_binomials() {
        // (q + 1)(q - 1) = q^2 - 1
        let a = LaurentPoly::from_terms([(1, 1), (0, 1)]);
        let b = LaurentPoly::from_terms([(1, 1), (0, -1)]);
        assert_eq!(&a * &b, LaurentPoly::from_terms([(2, 1), (0, -1)]));
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(-1, 5).is_unit());
        assert!(!LaurentPoly::monomial(2, 0).is_unit());
        assert!(!LaurentPoly::from_terms([(1, 1), (0, 1)]).is_unit());
        assert_eq!(
            LaurentPoly::monomial(-1, 3).unit_inverse(),
            Some(LaurentPoly::monomial(-1, -3))
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            LaurentPoly::from_terms([(2, 1), (0, -1)]).to_string(),
            "q^2 - 1"
        );
        assert_eq!(LaurentPoly::q_pow(1).to_string(), "q");
        assert_eq!(LaurentPoly::monomial(-3, -1).to_string(), "-3q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_terms([(1, 2), (0, 5), (-2, -1)]).to_string(),
            "2q + 5 - q^-2"
        );
    }

    #[test]
    fn evaluation_at_one() {
        let p = LaurentPoly::from_terms([(4, 3), (-1, -5), (0, 1)]);
        assert_eq!(p.eval_at_one(), BigInt::from(-1));
    }
}
