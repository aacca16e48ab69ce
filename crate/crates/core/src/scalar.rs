//! The exact coefficient field Q(q^{1/2}).
//!
//! `ScalarQ` is a canonical fraction of integer-coefficient Laurent
//! polynomials in the half-power symbol s = q^{1/2}. Keeping the half power
//! as the base symbol lets the quantum determinant shifts z*q^{(N-1)/2}
//! stay inside the ring for even N without a later extension.
//!
//! Canonical form: the denominator is primitive (integer content 1), has a
//! nonzero constant term (all s-units are pushed into the numerator), has a
//! positive leading coefficient, and shares no factor with the numerator.
//! Equality is therefore plain structural comparison.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by the zero scalar.
    DivisionByZero,
    /// Evaluation hit a vanishing denominator; carries the printed denominator.
    Pole(String),
    /// Evaluation required q^{1/2} at a value whose square root is not rational.
    IrrationalHalfPower(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero scalar"),
            ScalarError::Pole(d) => write!(f, "pole: denominator {d} vanishes at the given value"),
            ScalarError::IrrationalHalfPower(v) => {
                write!(f, "q^(1/2) is irrational at q = {v}")
            }
        }
    }
}

impl core::error::Error for ScalarError {}

/// Integer-coefficient Laurent polynomial in s = q^{1/2}.
///
/// `coeffs[k]` is the coefficient of s^(lo + k); the vector is empty exactly
/// for the zero polynomial and otherwise has nonzero first and last entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentZ {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        LaurentZ { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentZ { lo: 0, coeffs: vec![BigInt::one()] }
    }

    pub fn from_int(v: BigInt) -> Self {
        if v.is_zero() {
            Self::zero()
        } else {
            LaurentZ { lo: 0, coeffs: vec![v] }
        }
    }

    /// The monomial c * s^e.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentZ { lo: e, coeffs: vec![c] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn lo_exp(&self) -> i64 {
        self.lo
    }

    pub fn hi_exp(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn shift(mut self, by: i64) -> Self {
        if !self.is_zero() {
            self.lo += by;
        }
        self
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() || e < self.lo || e > self.hi_exp() {
            BigInt::zero()
        } else {
            self.coeffs[(e - self.lo) as usize].clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi_exp().max(other.hi_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + k] += c;
        }
        LaurentZ { lo, coeffs }.trim()
    }

    pub fn neg(&self) -> Self {
        LaurentZ { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentZ { lo: self.lo + other.lo, coeffs }.trim()
    }

    /// Integer content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    /// Divide by an integer that divides every coefficient.
    fn div_int_exact(&self, d: &BigInt) -> Self {
        LaurentZ { lo: self.lo, coeffs: self.coeffs.iter().map(|c| c / d).collect() }
    }

    /// Exact division as ordinary (non-Laurent) polynomials after aligning
    /// the s-offset; panics if the division is not exact. Internal helper for
    /// gcd-based reduction, where exactness is guaranteed.
    fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        // Work with coefficient vectors; track s-offset separately.
        let mut rem = self.coeffs.clone();
        let div = &other.coeffs;
        let dn = div.len();
        assert!(rem.len() >= dn, "inexact Laurent division");
        let mut quot = vec![BigInt::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (qk, r) = num_integer::div_rem(top, other.leading().clone());
            assert!(r.is_zero(), "inexact coefficient division");
            for (j, d) in div.iter().enumerate() {
                let sub = &qk * d;
                rem[k + j] -= sub;
            }
            quot[k] = qk;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder in exact division");
        LaurentZ { lo: self.lo - other.lo, coeffs: quot }.trim()
    }

    /// Primitive part with positive leading coefficient and offset 0.
    fn normalized_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let mut p = self.div_int_exact(&c);
        p.lo = 0;
        p
    }

    /// Gcd of the underlying ordinary polynomials (primitive, positive lead,
    /// offset 0). Units s^k are quotiented away.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_primitive();
        }
        if other.is_zero() {
            return self.normalized_primitive();
        }
        let mut a = self.normalized_primitive();
        let mut b = other.normalized_primitive();
        // Primitive Euclid with pseudo-division.
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.normalized_primitive();
        }
        a.normalized_primitive()
    }

    /// Pseudo-remainder of self by other (both offset-0 ordinary polys).
    fn pseudo_rem(&self, other: &Self) -> Self {
        let mut rem = self.clone();
        let d = other.coeffs.len();
        if rem.coeffs.len() < d {
            return rem;
        }
        let lead = other.leading().clone();
        while !rem.is_zero() && rem.coeffs.len() >= d {
            let k = rem.coeffs.len() - d;
            let top = rem.leading().clone();
            // rem = lead*rem - top * s^k * other
            let mut scaled: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            for (j, oc) in other.coeffs.iter().enumerate() {
                scaled[k + j] -= &top * oc;
            }
            rem = LaurentZ { lo: rem.lo, coeffs: scaled }.trim();
        }
        rem
    }

    /// Evaluate at a rational value of s.
    pub fn eval(&self, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        // Horner over the ordinary part, then multiply by s^lo.
        for c in self.coeffs.iter().rev() {
            acc = acc * s + BigRational::from_integer(c.clone());
        }
        if self.lo != 0 {
            let p = pow_rational(s, self.lo);
            acc *= p;
        }
        acc
    }

    /// Whether the polynomial only has even s-powers (pure q dependence).
    pub fn even_only(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (self.lo + k as i64) % 2 == 0)
    }

    /// d/dgamma through q = e^{i*gamma}, divided by i and evaluated at q = 1:
    /// sum_e c_e s^e  ->  sum_e c_e * e/2.
    pub fn gamma_derivative_at_one(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.lo + k as i64;
            acc += BigRational::new(c * BigInt::from(e), BigInt::from(2));
        }
        acc
    }
}

fn pow_rational(s: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { s.clone() } else { s.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + k as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", fmt_q_power(e))?;
            }
        }
        Ok(())
    }
}

/// Render s^e in terms of q: s^2 = q.
fn fmt_q_power(e: i64) -> String {
    use alloc::format;
    if e % 2 == 0 {
        let h = e / 2;
        match h {
            1 => "q".to_owned(),
            -1 => "q^-1".to_owned(),
            _ => format!("q^{h}"),
        }
    } else {
        format!("q^({e}/2)")
    }
}

/// An element of the field Q(q^{1/2}) in canonical fraction form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentZ,
    den: LaurentZ,
}

impl ScalarQ {
    fn make(num: LaurentZ, den: LaurentZ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        ScalarQ { num, den }.canonicalize()
    }

    fn canonicalize(mut self) -> Self {
        if self.num.is_zero() {
            return ScalarQ { num: LaurentZ::zero(), den: LaurentZ::one() };
        }
        // Push s-units out of the denominator.
        let shift = self.den.lo;
        if shift != 0 {
            self.den = self.den.shift(-shift);
            self.num = self.num.shift(-shift);
        }
        // Cancel the polynomial gcd.
        let g = self.num.gcd(&self.den);
        if !(g.coeffs.len() == 1 && g.leading().is_one()) {
            // Gcd of Laurent input may carry an s-offset relative to num:
            // align via div_exact on trimmed parts.
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // Cancel integer content and fix the sign.
        let mut c = num_integer::gcd(self.num.content(), self.den.content());
        if self.den.leading().is_negative() {
            c = -c;
        }
        self.num = self.num.div_int_exact(&c);
        self.den = self.den.div_int_exact(&c);
        // Re-align any residual offset in the denominator.
        let shift = self.den.lo;
        if shift != 0 {
            self.den = self.den.shift(-shift);
            self.num = self.num.shift(-shift);
        }
        self
    }

    pub fn zero() -> Self {
        ScalarQ { num: LaurentZ::zero(), den: LaurentZ::one() }
    }

    pub fn one() -> Self {
        ScalarQ { num: LaurentZ::one(), den: LaurentZ::one() }
    }

    pub fn from_int(v: i64) -> Self {
        ScalarQ { num: LaurentZ::from_int(BigInt::from(v)), den: LaurentZ::one() }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        ScalarQ { num: LaurentZ::from_int(v), den: LaurentZ::one() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Self::make(
            LaurentZ::from_int(BigInt::from(p)),
            LaurentZ::from_int(BigInt::from(q)),
        )
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::make(
            LaurentZ::from_int(r.numer().clone()),
            LaurentZ::from_int(r.denom().clone()),
        )
    }

    /// q^{k/2}, the monomial s^k.
    pub fn q_half_pow(k: i64) -> Self {
        ScalarQ { num: LaurentZ::monomial(BigInt::one(), k), den: LaurentZ::one() }
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        Self::q_half_pow(2 * k)
    }

    /// The symbol q itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// q - q^{-1}, ubiquitous in the R-matrix constructions.
    pub fn q_minus_qinv() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn numerator(&self) -> &LaurentZ {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentZ {
        &self.den
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::make(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * other.inv()?)
    }

    /// Exact evaluation at a rational value of q.
    ///
    /// Odd powers of s = q^{1/2} require the square root of the value to be
    /// rational; otherwise an error is reported.
    pub fn specialize_q(&self, q: &BigRational) -> Result<BigRational, ScalarError> {
        use alloc::string::ToString;
        let needs_half = !self.num.even_only() || !self.den.even_only();
        let s = if needs_half {
            match rational_sqrt(q) {
                Some(s) => s,
                None => return Err(ScalarError::IrrationalHalfPower(q.to_string())),
            }
        } else {
            // Evaluate in the variable q directly by halving exponents.
            let num = self.num.eval_even(q);
            let den = self.den.eval_even(q);
            if den.is_zero() {
                return Err(ScalarError::Pole(self.den.to_string()));
            }
            return Ok(num / den);
        };
        let den = self.den.eval(&s);
        if den.is_zero() {
            return Err(ScalarError::Pole(self.den.to_string()));
        }
        Ok(self.num.eval(&s) / den)
    }

    /// Evaluation at q = 1 (the classical point).
    pub fn at_q_one(&self) -> Result<BigRational, ScalarError> {
        self.specialize_q(&BigRational::one())
    }

    /// d/dgamma through q = e^{i*gamma}, divided by i, at q = 1.
    /// For a fraction f/g this is (f'g - fg')/g^2 evaluated at q = 1.
    pub fn gamma_derivative_at_one(&self) -> Result<BigRational, ScalarError> {
        use alloc::string::ToString;
        let one = BigRational::one();
        let g1 = self.den.eval(&one);
        if g1.is_zero() {
            return Err(ScalarError::Pole(self.den.to_string()));
        }
        let f1 = self.num.eval(&one);
        let df = self.num.gamma_derivative_at_one();
        let dg = self.den.gamma_derivative_at_one();
        Ok((df * &g1 - f1 * dg) / (&g1 * &g1))
    }

    /// Canonical text form.
    pub fn to_canonical_string(&self) -> String {
        use alloc::format;
        if self.den == LaurentZ::one() {
            format!("{}", self.num)
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

impl LaurentZ {
    /// Evaluate a polynomial with only even s-powers at the q-value directly.
    fn eval_even(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + k as i64;
            debug_assert!(e % 2 == 0);
            acc += BigRational::from_integer(c.clone()) * pow_rational(q, e / 2);
        }
        acc
    }
}

/// Exact square root of a nonnegative rational, if it exists.
fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let ns = v.numer().sqrt();
    let ds = v.denom().sqrt();
    if &(&ns * &ns) == v.numer() && &(&ds * &ds) == v.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

impl Add for ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: ScalarQ) -> ScalarQ {
        &self + &rhs
    }
}

impl<'a> Add<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: ScalarQ) -> ScalarQ {
        &self - &rhs
    }
}

impl<'a> Sub<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        ScalarQ::make(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: ScalarQ) -> ScalarQ {
        &self * &rhs
    }
}

impl<'a> Mul<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        ScalarQ::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for ScalarQ {
    type Output = ScalarQ;
    /// Panics on division by zero; use `checked_div` for the fallible form.
    fn div(self, rhs: ScalarQ) -> ScalarQ {
        self.checked_div(&rhs).expect("scalar division by zero")
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { num: self.num.neg(), den: self.den }
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    fn qinv() -> ScalarQ {
        ScalarQ::q_pow(-1)
    }

    #[test]
    fn unit_inverse() {
        assert_eq!(q() * qinv(), ScalarQ::one());
    }

    #[test]
    fn additive_inverse() {
        let a = q() - qinv();
        let b = qinv() - q();
        assert!((a + b).is_zero());
    }

    #[test]
    fn quotient_cancels_to_q() {
        // (q^2 - 1)/(q - q^-1) = q, verified independently by
        // cross-multiplication: q*(q - q^-1) = q^2 - 1.
        let lhs = (ScalarQ::q_pow(2) - ScalarQ::one())
            .checked_div(&ScalarQ::q_minus_qinv())
            .unwrap();
        assert_eq!(lhs, q());
        let cross = q() * ScalarQ::q_minus_qinv();
        assert_eq!(cross, ScalarQ::q_pow(2) - ScalarQ::one());
    }

    #[test]
    fn specialize_classical_point() {
        let v = ScalarQ::q_minus_qinv().at_q_one().unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn specialize_half_power_perfect_square() {
        let v = ScalarQ::q_half_pow(1)
            .specialize_q(&BigRational::from_integer(4.into()))
            .unwrap();
        assert_eq!(v, BigRational::from_integer(2.into()));
    }

    #[test]
    fn specialize_half_power_irrational() {
        let r = ScalarQ::q_half_pow(1).specialize_q(&BigRational::from_integer(2.into()));
        assert!(matches!(r, Err(ScalarError::IrrationalHalfPower(_))));
    }

    #[test]
    fn specialize_pole() {
        let f = ScalarQ::one().checked_div(&(q() - ScalarQ::one())).unwrap();
        let r = f.specialize_q(&BigRational::one());
        assert!(matches!(r, Err(ScalarError::Pole(_))));
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            ScalarQ::one().checked_div(&ScalarQ::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn gamma_derivative_of_q_power() {
        // D(q^m) = m at q=1; D(q - q^-1) = 2.
        let d = ScalarQ::q_minus_qinv().gamma_derivative_at_one().unwrap();
        assert_eq!(d, BigRational::from_integer(2.into()));
    }

    #[test]
    fn display_canonical() {
        let x = (q() - qinv()) * ScalarQ::from_ratio(1, 2);
        assert_eq!(x.to_canonical_string(), "(q - q^-1)/(2)");
        assert_eq!(ScalarQ::q_half_pow(3).to_canonical_string(), "q^(3/2)");
    }

    fn arb_scalar() -> impl Strategy<Value = ScalarQ> {
        // Small Laurent fractions: numerator with up to 3 terms, denominator
        // one of a short list of nonzero polynomials.
        let term = (-4i64..=4, -3i64..=3).prop_map(|(c, e)| {
            ScalarQ::from_int(c) * ScalarQ::q_half_pow(e)
        });
        let num = proptest::collection::vec(term, 1..3)
            .prop_map(|ts| ts.into_iter().fold(ScalarQ::zero(), |a, b| a + b));
        let den = prop_oneof![
            Just(ScalarQ::one()),
            Just(ScalarQ::q()),
            Just(ScalarQ::q() + ScalarQ::one()),
            Just(ScalarQ::q_minus_qinv() + ScalarQ::from_int(3)),
        ];
        (num, den).prop_map(|(n, d)| n.checked_div(&d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            // Associativity and distributivity, exactly.
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), (&a * &b) + (&a * &c));
        }

        #[test]
        fn canonicalization_idempotent(a in arb_scalar()) {
            let again = ScalarQ::make(a.num.clone(), a.den.clone());
            prop_assert_eq!(a, again);
        }

        #[test]
        fn specialize_is_homomorphism(a in arb_scalar(), b in arb_scalar()) {
            let q0 = BigRational::from_integer(9.into());
            if let (Ok(va), Ok(vb), Ok(vab)) = (
                a.specialize_q(&q0),
                b.specialize_q(&q0),
                (&a * &b).specialize_q(&q0),
            ) {
                prop_assert_eq!(va * vb, vab);
            }
        }
    }
}
