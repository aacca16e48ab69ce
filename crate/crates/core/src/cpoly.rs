//! Sparse commutative polynomials over Q(q^{1/2}) in a declared variable list.
//!
//! The variable list is fixed at construction; mixing polynomials over
//! different lists is an error rather than an implicit coercion. Monomials
//! are ordered graded-lexicographically, which also fixes the canonical text
//! form used in reports and golden files.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::scalar::{ScalarError, ScalarQ};

/// A commutative indeterminate. `Gen` variables stand for images of
/// noncommutative generators under the commutative (q = 1) specialization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Z,
    Zp,
    Z1,
    Z2,
    Z3,
    W,
    X,
    T(u8),
    Gen(u16),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z => write!(f, "z"),
            Var::Zp => write!(f, "z'"),
            Var::Z1 => write!(f, "z1"),
            Var::Z2 => write!(f, "z2"),
            Var::Z3 => write!(f, "z3"),
            Var::W => write!(f, "w"),
            Var::X => write!(f, "x"),
            Var::T(k) => write!(f, "t{k}"),
            Var::Gen(k) => write!(f, "g{k}"),
        }
    }
}

/// An ordered, duplicate-free variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarSet(Vec<Var>);

impl VarSet {
    pub fn new(mut vars: Vec<Var>) -> Self {
        vars.sort();
        vars.dedup();
        VarSet(vars)
    }

    pub fn empty() -> Self {
        VarSet(Vec::new())
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.index_of(v).is_some()
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        let mut vs = self.0.clone();
        vs.extend_from_slice(&other.0);
        VarSet::new(vs)
    }
}

/// Exponent vector aligned with a `VarSet`, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CPolyError {
    VarMismatch,
    UnknownVar(Var),
    InexactDivision,
    NotConstant,
    Scalar(ScalarError),
}

impl fmt::Display for CPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CPolyError::VarMismatch => write!(f, "operands have different variable lists"),
            CPolyError::UnknownVar(v) => write!(f, "variable {v} is not in the declared list"),
            CPolyError::InexactDivision => write!(f, "polynomial division left a remainder"),
            CPolyError::NotConstant => write!(f, "polynomial is not a constant"),
            CPolyError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CPolyError {}

impl From<ScalarError> for CPolyError {
    fn from(e: ScalarError) -> Self {
        CPolyError::Scalar(e)
    }
}

/// Sparse multivariate polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly {
    vars: VarSet,
    terms: BTreeMap<Mono, ScalarQ>,
}

impl CPoly {
    pub fn zero(vars: VarSet) -> Self {
        CPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, c: ScalarQ) -> Self {
        let mut p = CPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, ScalarQ::one())
    }

    pub fn var(vars: VarSet, v: Var) -> Result<Self, CPolyError> {
        let idx = vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = CPoly::zero(vars);
        p.terms.insert(Mono(exps), ScalarQ::one());
        Ok(p)
    }

    pub fn from_terms(
        vars: VarSet,
        terms: impl IntoIterator<Item = (Mono, ScalarQ)>,
    ) -> Self {
        let mut p = CPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<ScalarQ> {
        if self.is_zero() {
            return Some(ScalarQ::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, m: Mono, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &CPoly) -> Result<CPoly, CPolyError> {
        if self.vars != other.vars {
            return Err(CPolyError::VarMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CPoly) -> Result<CPoly, CPolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &CPoly) -> Result<CPoly, CPolyError> {
        if self.vars != other.vars {
            return Err(CPolyError::VarMismatch);
        }
        let mut out = CPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> CPoly {
        CPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> CPoly {
        if c.is_zero() {
            return CPoly::zero(self.vars.clone());
        }
        CPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CPoly {
        let mut acc = CPoly::one(self.vars.clone());
        for _ in 0..e {
            acc = acc.try_mul(self).unwrap();
        }
        acc
    }

    /// Leading (largest) term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Mono, &ScalarQ)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> Result<Option<u32>, CPolyError> {
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Coefficient of v^k, as a polynomial over the same variable list with
    /// the v-exponent zeroed.
    pub fn coeff_of(&self, v: Var, k: u32) -> Result<CPoly, CPolyError> {
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.0[idx] == k {
                let mut e = m.clone();
                e.0[idx] = 0;
                out.add_term(e, c.clone());
            }
        }
        Ok(out)
    }

    /// Substitute v -> value (a scalar).
    pub fn substitute_scalar(&self, v: Var, value: &ScalarQ) -> Result<CPoly, CPolyError> {
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut m2 = m.clone();
            m2.0[idx] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = &coeff * value;
            }
            out.add_term(m2, coeff);
        }
        Ok(out)
    }

    /// Substitute v -> scale * v (used for the argument shifts z -> z q^s).
    pub fn scale_var(&self, v: Var, scale: &ScalarQ) -> Result<CPoly, CPolyError> {
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..m.0[idx] {
                coeff = &coeff * scale;
            }
            out.add_term(m.clone(), coeff);
        }
        Ok(out)
    }

    /// Substitute v -> a full polynomial over the same variable list.
    pub fn substitute_poly(&self, v: Var, value: &CPoly) -> Result<CPoly, CPolyError> {
        if value.vars != self.vars {
            return Err(CPolyError::VarMismatch);
        }
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut m2 = m.clone();
            m2.0[idx] = 0;
            let mut part = CPoly::from_terms(self.vars.clone(), [(m2, c.clone())]);
            for _ in 0..e {
                part = part.try_mul(value)?;
            }
            out = out.try_add(&part)?;
        }
        Ok(out)
    }

    /// Reinterpret over a superset variable list.
    pub fn extend_vars(&self, vars: &VarSet) -> Result<CPoly, CPolyError> {
        let map: Vec<usize> = self
            .vars
            .vars()
            .iter()
            .map(|v| vars.index_of(*v).ok_or(CPolyError::UnknownVar(*v)))
            .collect::<Result<_, _>>()?;
        let mut out = CPoly::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (k, &exp) in m.0.iter().enumerate() {
                e[map[k]] = exp;
            }
            out.add_term(Mono(e), c.clone());
        }
        Ok(out)
    }

    /// Exact division; errors if the divisor does not divide exactly.
    pub fn exact_div(&self, divisor: &CPoly) -> Result<CPoly, CPolyError> {
        if self.vars != divisor.vars {
            return Err(CPolyError::VarMismatch);
        }
        let (dm, dc) = divisor.leading_term().ok_or(CPolyError::InexactDivision)?;
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = CPoly::zero(self.vars.clone());
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return Err(CPolyError::InexactDivision);
            }
            let qm = rm.div(&dm);
            let qc = rc.checked_div(&dc)?;
            let qt = CPoly::from_terms(self.vars.clone(), [(qm, qc)]);
            rem = rem.try_sub(&qt.try_mul(divisor)?)?;
            quot = quot.try_add(&qt)?;
        }
        Ok(quot)
    }

    /// Evaluate all variables at scalar values (aligned with the list).
    pub fn eval(&self, values: &[ScalarQ]) -> Result<ScalarQ, CPolyError> {
        if values.len() != self.vars.len() {
            return Err(CPolyError::VarMismatch);
        }
        let mut acc = ScalarQ::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &values[k];
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluate at complex points; coefficients must be free of q (they are
    /// specialized at q = 1 and converted).
    pub fn eval_complex(&self, values: &[Complex64]) -> Result<Complex64, CPolyError> {
        if values.len() != self.vars.len() {
            return Err(CPolyError::VarMismatch);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let r = c.at_q_one()?;
            let mut t = Complex64::new(rational_to_f64(&r), 0.0);
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= values[k];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Coefficient-wise specialization at q = 1.
    pub fn at_q_one(&self) -> Result<CPoly, CPolyError> {
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let r = c.at_q_one()?;
            out.add_term(m.clone(), ScalarQ::from_rational(&r));
        }
        Ok(out)
    }

    /// Coefficient-wise gamma-derivative (divided by i) at q = 1.
    pub fn gamma_derivative_at_one(&self) -> Result<CPoly, CPolyError> {
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let r = c.gamma_derivative_at_one()?;
            out.add_term(m.clone(), ScalarQ::from_rational(&r));
        }
        Ok(out)
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Result<CPoly, CPolyError> {
        let idx = self.vars.index_of(v).ok_or(CPolyError::UnknownVar(v))?;
        let mut out = CPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] = e - 1;
            out.add_term(m2, c * &ScalarQ::from_int(e as i64));
        }
        Ok(out)
    }

    pub fn to_canonical_string(&self) -> String {
        use alloc::format;
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = self.mono_string(m);
            let cs = c.to_canonical_string();
            let piece = if mono.is_empty() {
                wrap_if_composite(&cs)
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", wrap_if_composite(&cs))
            };
            parts.push(piece);
        }
        parts.join(" + ")
    }

    fn mono_string(&self, m: &Mono) -> String {
        use alloc::format;
        let mut parts: Vec<String> = Vec::new();
        for (k, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = self.vars.vars()[k];
            if e == 1 {
                parts.push(format!("{v}"));
            } else {
                parts.push(format!("{v}^{e}"));
            }
        }
        parts.join("*")
    }
}

fn wrap_if_composite(s: &str) -> String {
    use alloc::format;
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        String::from(s)
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> VarSet {
        VarSet::new(vec![Var::Z, Var::Zp])
    }

    fn z() -> CPoly {
        CPoly::var(zz(), Var::Z).unwrap()
    }

    fn zp() -> CPoly {
        CPoly::var(zz(), Var::Zp).unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        let p = z().try_mul(&z()).unwrap().try_sub(&zp().try_mul(&zp()).unwrap()).unwrap();
        assert_eq!(p.to_canonical_string(), "z^2 + -z'^2");
        let d = z().try_sub(&zp()).unwrap();
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, z().try_add(&zp()).unwrap());
    }

    #[test]
    fn inexact_division_detected() {
        let p = z().try_mul(&z()).unwrap();
        let d = z().try_sub(&zp()).unwrap();
        assert_eq!(p.exact_div(&d), Err(CPolyError::InexactDivision));
    }

    #[test]
    fn var_mismatch_is_error() {
        let a = CPoly::var(VarSet::new(vec![Var::Z]), Var::Z).unwrap();
        assert_eq!(a.try_add(&z()), Err(CPolyError::VarMismatch));
    }

    #[test]
    fn coeff_extraction() {
        // z^2 z' + 3 z: coefficient of z^1 is 3, of z^2 is z'.
        let p = z()
            .pow(2)
            .try_mul(&zp())
            .unwrap()
            .try_add(&z().scale(&ScalarQ::from_int(3)))
            .unwrap();
        assert_eq!(
            p.coeff_of(Var::Z, 1).unwrap(),
            CPoly::constant(zz(), ScalarQ::from_int(3))
        );
        assert_eq!(p.coeff_of(Var::Z, 2).unwrap(), zp());
    }

    #[test]
    fn grlex_ordering() {
        // z < z' as Vars, so exponent vector (z, z'); grlex: z^2 > z*z' > z'^2? No:
        // same degree, lex on (e_z, e_z'): (2,0) > (1,1) > (0,2).
        let m1 = Mono(vec![2, 0]);
        let m2 = Mono(vec![1, 1]);
        let m3 = Mono(vec![0, 2]);
        assert!(m1 > m2 && m2 > m3);
        assert!(Mono(vec![0, 3]) > m1);
    }

    #[test]
    fn scale_var_shifts_arguments() {
        let p = z().pow(2);
        let s = p.scale_var(Var::Z, &ScalarQ::q()).unwrap();
        let expect = z().pow(2).scale(&ScalarQ::q_pow(2));
        assert_eq!(s, expect);
    }
}
