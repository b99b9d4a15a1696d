//! Sparse multivariate Laurent polynomials in x_1..x_N over a coefficient
//! field, the q-shift and variable-swap operators, symmetry tests, and exact
//! division. Negative exponents are first-class so that e_N^{-1} and the
//! adjoint operators can be expressed directly.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{RatFunc, VarSet};
use crate::error::{Error, Result};

/// Exponent vector of fixed length N; entries may be negative.
pub type Exps = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    n_vars: usize,
    vars: VarSet,
    terms: BTreeMap<Exps, RatFunc>,
}

impl MPoly {
    pub fn zero(n_vars: usize, vars: VarSet) -> Self {
        MPoly { n_vars, vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: RatFunc, n_vars: usize) -> Self {
        let vars = c.vars();
        let mut out = Self::zero(n_vars, vars);
        out.add_term(vec![0; n_vars], c);
        out
    }

    pub fn one(n_vars: usize, vars: VarSet) -> Self {
        Self::constant(RatFunc::one(vars), n_vars)
    }

    /// The variable x_i (1-indexed).
    pub fn var(i: usize, n_vars: usize, vars: VarSet) -> Result<Self> {
        if i < 1 || i > n_vars {
            return Err(Error::IndexOutOfRange(i, n_vars));
        }
        let mut e = vec![0; n_vars];
        e[i - 1] = 1;
        let mut out = Self::zero(n_vars, vars);
        out.add_term(e, RatFunc::one(vars));
        Ok(out)
    }

    pub fn monomial(exps: Exps, c: RatFunc, n_vars: usize) -> Self {
        assert_eq!(exps.len(), n_vars);
        let vars = c.vars();
        let mut out = Self::zero(n_vars, vars);
        out.add_term(exps, c);
        out
    }

    /// prod_{i in I} x_i for a 1-indexed subset.
    pub fn subset_monomial(subset: &[usize], n_vars: usize, vars: VarSet) -> Self {
        let mut e = vec![0; n_vars];
        for &i in subset {
            e[i - 1] += 1;
        }
        Self::monomial(e, RatFunc::one(vars), n_vars)
    }

    /// e_k as an explicit polynomial in x_1..x_N.
    pub fn elementary(k: usize, n_vars: usize, vars: VarSet) -> Self {
        if k > n_vars {
            return Self::zero(n_vars, vars);
        }
        let mut out = Self::zero(n_vars, vars);
        for subset in k_subsets(n_vars, k) {
            let mut e = vec![0; n_vars];
            for i in subset {
                e[i - 1] = 1;
            }
            out.add_term(e, RatFunc::one(vars));
        }
        out
    }

    /// prod_{i<j in `indices`} (x_i - x_j), the common denominator for
    /// operator subset sums.
    pub fn vandermonde(indices: &[usize], n_vars: usize, vars: VarSet) -> Self {
        let mut out = Self::one(n_vars, vars);
        for (a, &i) in indices.iter().enumerate() {
            for &j in &indices[a + 1..] {
                let d = Self::var(i, n_vars, vars).unwrap() - Self::var(j, n_vars, vars).unwrap();
                out = &out * &d;
            }
        }
        out
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn coeff_vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &RatFunc)> {
        self.terms.iter()
    }

    /// Maximum total degree, or 0 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, e: Exps, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().try_add(&c).expect("coefficient field mismatch");
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        assert_eq!(self.vars, other.vars, "coefficient field mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            n_vars: self.n_vars,
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.n_vars, self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.try_mul(cb).expect("coefficient field mismatch"));
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars, self.vars);
        }
        MPoly {
            n_vars: self.n_vars,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k.try_mul(c).expect("coefficient field mismatch")))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.n_vars);
        MPoly {
            n_vars: self.n_vars,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())
                })
                .collect(),
        }
    }

    /// T_{q,x_i}: substitute x_i -> q x_i. Q(q,t) coefficients only.
    pub fn shift_q(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.n_vars {
            return Err(Error::IndexOutOfRange(i, self.n_vars));
        }
        if self.vars != VarSet::Qt {
            return Err(Error::VarSetMismatch(self.vars, VarSet::Qt));
        }
        let mut out = Self::zero(self.n_vars, self.vars);
        for (e, c) in &self.terms {
            let f = RatFunc::q_pow(e[i - 1]);
            out.add_term(e.clone(), c.try_mul(&f)?);
        }
        Ok(out)
    }

    /// Apply T_{q,x_i} for every i in the (1-indexed) list.
    pub fn shift_q_many(&self, indices: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for &i in indices {
            out = out.shift_q(i)?;
        }
        Ok(out)
    }

    /// K_{ij}: exchange the exponents of x_i and x_j.
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<Self> {
        if i < 1 || i > self.n_vars {
            return Err(Error::IndexOutOfRange(i, self.n_vars));
        }
        if j < 1 || j > self.n_vars {
            return Err(Error::IndexOutOfRange(j, self.n_vars));
        }
        let mut out = Self::zero(self.n_vars, self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// x_i d/dx_i, term by term (valid for Laurent exponents).
    pub fn euler(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.n_vars {
            return Err(Error::IndexOutOfRange(i, self.n_vars));
        }
        let mut out = Self::zero(self.n_vars, self.vars);
        for (e, c) in &self.terms {
            let k = RatFunc::from_int(e[i - 1], self.vars);
            out.add_term(e.clone(), c.try_mul(&k)?);
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Exps, &RatFunc)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the Laurent ring; `Err(NotDivisible)` certifies a
    /// nonzero remainder.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check(g);
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n_vars, self.vars));
        }
        // shift both operands into the polynomial ring so that the
        // leading-term divisibility check is sound
        let min_shift = |p: &Self| -> Exps {
            (0..p.n_vars)
                .map(|k| p.terms.keys().map(|e| e[k]).min().unwrap_or(0).min(0))
                .collect()
        };
        let sf = min_shift(self);
        let sg = min_shift(g);
        let negate = |v: &Exps| -> Exps { v.iter().map(|x| -x).collect() };
        let f = self.mul_monomial(&negate(&sf));
        let g2 = g.mul_monomial(&negate(&sg));

        let (lg_e, lg_c) = g2.leading().unwrap();
        let lg_e = lg_e.clone();
        let lg_c = lg_c.clone();
        let mut rem = f;
        let mut quot = Self::zero(self.n_vars, self.vars);
        while let Some((re, rc)) = rem.leading() {
            let qe: Exps = re.iter().zip(&lg_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(Error::NotDivisible);
            }
            let qc = rc.try_div(&lg_c)?;
            let qterm = Self::monomial(qe.clone(), qc.clone(), self.n_vars);
            rem = rem.sub(&qterm.mul(&g2));
            quot.add_term(qe, qc);
        }
        // undo the shifts: f x^{-sf} = q' g x^{-sg}  =>  q = q' x^{sg - sf}
        let corr: Exps = sg.iter().zip(&sf).map(|(b, a)| a - b).collect();
        Ok(quot.mul_monomial(&corr))
    }

    /// (f - K_{ij} f) / (x_i - x_j); always an exact polynomial.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        let num = self.sub(&self.swap_vars(i, j)?);
        if num.is_zero() {
            return Ok(Self::zero(self.n_vars, self.vars));
        }
        let d = Self::var(i, self.n_vars, self.vars)?.sub(&Self::var(j, self.n_vars, self.vars)?);
        num.exact_div(&d)
    }

    /// Invariance under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n_vars).all(|i| self.swap_vars(i, i + 1).unwrap() == *self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (k, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", k + 1)?,
                    _ => write!(f, "*x{}^{}", k + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

macro_rules! mpoly_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                MPoly::$method(self, rhs)
            }
        }
        impl std::ops::$trait for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                MPoly::$method(&self, &rhs)
            }
        }
    };
}

mpoly_binop!(Add, add);
mpoly_binop!(Sub, sub);
mpoly_binop!(Mul, mul);

/// All k-element subsets of {1,..,n}, each ascending, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}
