//! Exact elements of Q(q,t), Q(alpha) and Q(t).
//!
//! A [`RatFunc`] is a fully reduced fraction of [`IntPoly2`] values with a
//! deterministic normal form: gcd(num, den) = 1, the integer contents are
//! coprime, and the denominator's leading coefficient (deglex) is positive.
//! Equality is therefore structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::intpoly::IntPoly2;
use crate::error::{Error, Result};

/// Which coefficient field a value lives in. Mixing them is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSet {
    /// Q(q,t): slot 0 is q, slot 1 is t.
    Qt,
    /// Q(alpha): slot 0 is alpha, slot 1 unused.
    Alpha,
    /// Q(t) after the substitution q -> t^a: slot 1 is t, slot 0 unused.
    T,
}

impl VarSet {
    pub fn var_names(self) -> (&'static str, &'static str) {
        match self {
            VarSet::Qt => ("q", "t"),
            VarSet::Alpha => ("alpha", "_"),
            VarSet::T => ("_", "t"),
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSet::Qt => write!(f, "Q(q,t)"),
            VarSet::Alpha => write!(f, "Q(alpha)"),
            VarSet::T => write!(f, "Q(t)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly2,
    den: IntPoly2,
    vars: VarSet,
}

impl RatFunc {
    fn make(num: IntPoly2, den: IntPoly2, vars: VarSet) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den, vars };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly2::one();
            return;
        }
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.exact_div(&g).expect("gcd divides");
                self.den = self.den.exact_div(&g).expect("gcd divides");
            }
        }
        if self.den.leading_coeff_sign_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero(vars: VarSet) -> Self {
        RatFunc { num: IntPoly2::zero(), den: IntPoly2::one(), vars }
    }

    pub fn one(vars: VarSet) -> Self {
        RatFunc { num: IntPoly2::one(), den: IntPoly2::one(), vars }
    }

    pub fn from_int(n: i64, vars: VarSet) -> Self {
        RatFunc {
            num: IntPoly2::constant(BigInt::from(n)),
            den: IntPoly2::one(),
            vars,
        }
    }

    pub fn from_bigint(n: BigInt, vars: VarSet) -> Self {
        RatFunc { num: IntPoly2::constant(n), den: IntPoly2::one(), vars }
    }

    pub fn from_rational(r: &BigRational, vars: VarSet) -> Self {
        Self::make(
            IntPoly2::constant(r.numer().clone()),
            IntPoly2::constant(r.denom().clone()),
            vars,
        )
    }

    pub fn from_poly(num: IntPoly2, vars: VarSet) -> Self {
        RatFunc { num, den: IntPoly2::one(), vars }
    }

    pub fn from_fraction(num: IntPoly2, den: IntPoly2, vars: VarSet) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::make(num, den, vars))
    }

    /// Generator power with a possibly negative exponent: `slot` 0 is q (or
    /// alpha), slot 1 is t.
    pub fn gen_pow(vars: VarSet, slot: usize, exp: i64) -> Self {
        let e = exp.unsigned_abs() as u32;
        let (e0, e1) = if slot == 0 { (e, 0) } else { (0, e) };
        let m = IntPoly2::monomial(e0, e1, BigInt::one());
        if exp >= 0 {
            RatFunc { num: m, den: IntPoly2::one(), vars }
        } else {
            RatFunc { num: IntPoly2::one(), den: m, vars }
        }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::gen_pow(VarSet::Qt, 0, exp)
    }

    pub fn t_pow(exp: i64) -> Self {
        Self::gen_pow(VarSet::Qt, 1, exp)
    }

    pub fn alpha() -> Self {
        Self::gen_pow(VarSet::Alpha, 0, 1)
    }

    /// 1 - q^a t^b, exponents possibly negative.
    pub fn one_minus_qt(a: i64, b: i64) -> Self {
        Self::one(VarSet::Qt) - Self::q_pow(a) * Self::t_pow(b)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn num(&self) -> &IntPoly2 {
        &self.num
    }

    pub fn den(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Combined term count of numerator and denominator (a size measure).
    pub fn size_hint(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    /// True if the value is a polynomial (denominator 1) with integer
    /// coefficients. The normal form keeps contents coprime, so a constant
    /// denominator other than 1 means a genuinely non-integral coefficient.
    pub fn is_integral_poly(&self) -> bool {
        self.den.is_one()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch(self.vars, other.vars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Ok(Self::make(num, den, self.vars))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        // cross-cancel before multiplying to keep intermediates small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        Ok(Self::make(n1.mul(&n2), d1.mul(&d2), self.vars))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.try_inverse()?)
    }

    pub fn try_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::make(self.den.clone(), self.num.clone(), self.vars))
    }

    fn neg_ref(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
            vars: self.vars,
        }
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.try_inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut out = Self::one(self.vars);
        while e > 0 {
            if e & 1 == 1 {
                out = out.try_mul(&base)?;
            }
            base = base.try_mul(&base)?;
            e >>= 1;
        }
        Ok(out)
    }

    /// Replace q by t^a exactly. Only meaningful on Q(q,t) values.
    pub fn substitute_q_power(&self, a: u32) -> Result<Self> {
        if self.vars != VarSet::Qt {
            return Err(Error::VarSetMismatch(self.vars, VarSet::Qt));
        }
        Self::from_fraction(
            self.num.substitute_slot0_power(a),
            self.den.substitute_slot0_power(a),
            VarSet::T,
        )
    }

    /// Evaluate a univariate value (Q(t) or Q(alpha)) at a rational point.
    /// The stored fraction is fully reduced, so removable singularities have
    /// already been cancelled; a vanishing denominator is a genuine pole.
    pub fn eval_univar(&self, x: &BigRational) -> Result<BigRational> {
        let slot = match self.vars {
            VarSet::T => 1,
            VarSet::Alpha => 0,
            VarSet::Qt => return Err(Error::VarSetMismatch(self.vars, VarSet::T)),
        };
        let n = self
            .num
            .eval_univar(slot, x)
            .ok_or_else(|| Error::Invalid(format!("value not univariate: {self}")))?;
        let d = self
            .den
            .eval_univar(slot, x)
            .ok_or_else(|| Error::Invalid(format!("value not univariate: {self}")))?;
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(n / d)
    }

    /// Canonical text form: sorted terms, explicit signs; fractions rendered
    /// as `(num)/(den)`.
    pub fn render(&self) -> String {
        let (v0, v1) = self.vars.var_names();
        let n = self.num.render(v0, v1);
        if self.den.is_one() {
            n
        } else {
            let d = self.den.render(v0, v1);
            format!("({})/({})", n, d)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$try(rhs).expect(concat!("RatFunc ", stringify!($method)))
            }
        }
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}
