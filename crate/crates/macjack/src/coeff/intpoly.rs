//! Sparse bivariate polynomials over the integers.
//!
//! These are the numerators and denominators of [`crate::coeff::RatFunc`].
//! The two exponent slots hold (q, t) for the Macdonald side; the Jack side
//! uses slot 0 for alpha and leaves slot 1 at zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair (slot 0, slot 1); both nonnegative.
pub type Exp2 = (u32, u32);

/// A sparse polynomial in two variables with arbitrary-precision integer
/// coefficients. Stored zero coefficients are forbidden.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly2 {
    terms: BTreeMap<Exp2, BigInt>,
}

/// Degree-lexicographic key: total degree first, then slot 0, then slot 1.
fn deglex(e: Exp2) -> (u32, u32, u32) {
    (e.0 + e.1, e.0, e.1)
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        IntPoly2 { terms }
    }

    pub fn monomial(e0: u32, e1: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e0, e1), c);
        }
        IntPoly2 { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp2, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp2, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximum exponent in the given slot, or 0 for the zero polynomial.
    pub fn degree(&self, slot: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| if slot == 0 { e.0 } else { e.1 })
            .max()
            .unwrap_or(0)
    }

    /// True if every exponent in `slot` is zero.
    pub fn free_of(&self, slot: usize) -> bool {
        self.terms
            .keys()
            .all(|e| (if slot == 0 { e.0 } else { e.1 }) == 0)
    }

    fn add_term(&mut self, e: Exp2, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        IntPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }

    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly2 {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under degree-lexicographic order.
    pub fn leading_term(&self) -> Option<(Exp2, &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| deglex(**e))
            .map(|(e, c)| (*e, c))
    }

    pub fn leading_coeff_sign_negative(&self) -> bool {
        self.leading_term().map_or(false, |(_, c)| c.is_negative())
    }

    /// GCD of all integer coefficients (nonnegative; 0 for the zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.is_one() {
            return Some(self.clone());
        }
        let (le, lc) = other.leading_term().unwrap();
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading_term() {
            if re.0 < le.0 || re.1 < le.1 {
                return None;
            }
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qe = (re.0 - le.0, re.1 - le.1);
            let qterm = Self::monomial(qe.0, qe.1, qc.clone());
            rem = rem.sub(&qterm.mul(other));
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Substitute slot0 -> slot1^a (used for q -> t^a).
    pub fn substitute_slot0_power(&self, a: u32) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term((0, e.1 + a * e.0), c.clone());
        }
        out
    }

    /// Swap the two exponent slots.
    pub fn swap_slots(&self) -> Self {
        IntPoly2 {
            terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect(),
        }
    }

    /// Evaluate, requiring that only the given slot carries exponents.
    pub fn eval_univar(&self, slot: usize, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let (ev, other) = if slot == 0 { (e.0, e.1) } else { (e.1, e.0) };
            if other != 0 {
                return None;
            }
            let mut p = BigRational::one();
            for _ in 0..ev {
                p *= x;
            }
            acc += BigRational::from(c.clone()) * p;
        }
        Some(acc)
    }

    /// Polynomial GCD, positive-leading-coefficient normalized.
    ///
    /// Tries the evaluation-reconstruction heuristic first (with the divide
    /// test as proof), falling back to the primitive pseudo-remainder
    /// sequence when the heuristic repeatedly fails.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.sign_normalized();
        }
        if other.is_zero() {
            return self.sign_normalized();
        }
        if self.is_one() || other.is_one() {
            return Self::one();
        }
        if self.is_constant() || other.is_constant() {
            let g = self.content().gcd(&other.content());
            return Self::constant(g);
        }
        if let Some(g) = heu_gcd(self, other) {
            return g.sign_normalized();
        }
        let a = BPoly::from_poly(self);
        let b = BPoly::from_poly(other);
        a.gcd(&b).to_poly().sign_normalized()
    }

    /// Largest absolute value among the coefficients.
    fn max_norm(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitute the given slot by the integer `xi`, collecting on the
    /// other slot.
    fn eval_slot(&self, slot: usize, xi: &BigInt) -> Self {
        let deg = self.degree(slot);
        let mut powers = Vec::with_capacity(deg as usize + 1);
        powers.push(BigInt::one());
        for _ in 0..deg {
            let next = powers.last().unwrap() * xi;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let (ev, keep) = if slot == 0 { (e.0, e.1) } else { (e.1, e.0) };
            let key = if slot == 0 { (0, keep) } else { (keep, 0) };
            out.add_term(key, c * &powers[ev as usize]);
        }
        out
    }

    fn div_bigint_exact(&self, c: &BigInt) -> Self {
        IntPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    let (q, r) = k.div_rem(c);
                    debug_assert!(r.is_zero());
                    (*e, q)
                })
                .collect(),
        }
    }

    fn sign_normalized(&self) -> Self {
        if self.leading_coeff_sign_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Render with the given variable names, ascending deglex term order.
    pub fn render(&self, var0: &str, var1: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<Exp2> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|e| deglex(*e));
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push('-');
            } else {
                out.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (e.0 == 0 && e.1 == 0) {
                factors.push(abs.to_string());
            }
            for (v, name) in [(e.0, var0), (e.1, var1)] {
                match v {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{}^{}", name, v)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q", "t"))
    }
}

// ---------------------------------------------------------------------------
// Heuristic GCD by single-point evaluation and balanced digit reconstruction
// ---------------------------------------------------------------------------

/// Balanced base-`xi` digits of `v`, failing if more than `cap + 1` digits
/// would be needed (the gcd degree bound).
fn balanced_digits(mut v: BigInt, xi: &BigInt, cap: usize) -> Option<Vec<BigInt>> {
    let half = xi / BigInt::from(2);
    let mut out = Vec::new();
    while !v.is_zero() {
        if out.len() > cap {
            return None;
        }
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        out.push(d);
    }
    Some(out)
}

/// Rebuild a polynomial from the evaluation `g_eval` at `slot = xi` by
/// expanding every coefficient in balanced base-`xi` digits.
fn reconstruct_slot(g_eval: &IntPoly2, slot: usize, xi: &BigInt, cap: usize) -> Option<IntPoly2> {
    let mut g = IntPoly2::zero();
    for (e, c) in g_eval.terms() {
        let digits = balanced_digits(c.clone(), xi, cap)?;
        for (k, d) in digits.into_iter().enumerate() {
            let key = if slot == 0 {
                (k as u32, e.1)
            } else {
                (e.0, k as u32)
            };
            g.add_term(key, d);
        }
    }
    Some(g)
}

/// Evaluation-homomorphism gcd: evaluate one variable at a large integer,
/// take the gcd one level down, lift by balanced digits, and certify by
/// trial division. With the evaluation point beyond twice the smaller
/// coefficient norm the divide test proves the result is the gcd.
fn heu_gcd(a: &IntPoly2, b: &IntPoly2) -> Option<IntPoly2> {
    if a.is_constant() || b.is_constant() {
        return Some(IntPoly2::constant(a.content().gcd(&b.content())));
    }
    let ca = a.content();
    let cb = b.content();
    let cc = ca.gcd(&cb);
    let pa = a.div_bigint_exact(&ca);
    let pb = b.div_bigint_exact(&cb);

    let slot = if !pa.free_of(1) || !pb.free_of(1) { 1 } else { 0 };
    let cap = pa.degree(slot).min(pb.degree(slot)) as usize;
    let norm = pa.max_norm().min(pb.max_norm());
    let mut xi: BigInt = BigInt::from(2) * norm + BigInt::from(29);
    for _ in 0..6 {
        let ae = pa.eval_slot(slot, &xi);
        let be = pb.eval_slot(slot, &xi);
        let ge = if ae.is_constant() || be.is_constant() {
            IntPoly2::constant(ae.content().gcd(&be.content()))
        } else {
            match heu_gcd(&ae, &be) {
                Some(g) => g,
                None => {
                    xi = &xi * BigInt::from(6) + BigInt::from(29);
                    continue;
                }
            }
        };
        if let Some(g) = reconstruct_slot(&ge, slot, &xi, cap) {
            if !g.is_zero() {
                let g = g.div_bigint_exact(&g.content()).sign_normalized();
                if pa.exact_div(&g).is_some() && pb.exact_div(&g).is_some() {
                    return Some(g.mul_bigint(&cc));
                }
            }
        }
        xi = &xi * BigInt::from(6) + BigInt::from(29);
    }
    None
}

// ---------------------------------------------------------------------------
// Dense recursive representation used only for the GCD computation
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in slot 1; last element nonzero.
type UPoly = Vec<BigInt>;

fn u_trim(mut p: UPoly) -> UPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_deg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if u_is_zero(a) || u_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    u_trim(out)
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    u_trim(out)
}

fn u_mul_const(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|k| k * c).collect()
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_const_exact(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter()
        .map(|k| {
            let (q, r) = k.div_rem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Pseudo-remainder: lc(b)^m * a mod b for some m >= 0.
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = u_deg(b);
    let d = b[db].clone();
    let mut r = a.clone();
    while !u_is_zero(&r) && u_deg(&r) >= db {
        let k = u_deg(&r) - db;
        let lr = r[u_deg(&r)].clone();
        let mut shifted = vec![BigInt::zero(); k];
        shifted.extend(u_mul_const(b, &lr));
        r = u_sub(&u_mul_const(&r, &d), &shifted);
    }
    r
}

fn u_primitive(a: &UPoly) -> UPoly {
    if u_is_zero(a) {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_const_exact(a, &c)
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if u_is_zero(a) {
        return u_sign_norm(b.clone());
    }
    if u_is_zero(b) {
        return u_sign_norm(a.clone());
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    let mut pa = u_div_const_exact(a, &ca);
    let mut pb = u_div_const_exact(b, &cb);
    if u_deg(&pa) < u_deg(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !u_is_zero(&pb) {
        let r = u_prem(&pa, &pb);
        pa = pb;
        pb = u_primitive(&r);
    }
    u_sign_norm(u_mul_const(&u_primitive(&pa), &c))
}

fn u_sign_norm(p: UPoly) -> UPoly {
    if p.last().map_or(false, |c| c.is_negative()) {
        p.iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// Exact division of univariate polynomials; panics on non-exactness
/// (only used where divisibility is guaranteed).
fn u_exact_div(a: &UPoly, b: &UPoly) -> UPoly {
    assert!(!u_is_zero(b));
    if u_is_zero(a) {
        return Vec::new();
    }
    let db = u_deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !u_is_zero(&r) {
        let dr = u_deg(&r);
        assert!(dr >= db, "non-exact univariate division");
        let (qc, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "non-exact univariate division");
        let k = dr - db;
        let mut shifted = vec![BigInt::zero(); k];
        shifted.extend(u_mul_const(b, &qc));
        r = u_sub(&r, &shifted);
        q[k] = qc;
    }
    u_trim(q)
}

/// Dense polynomial in slot 0 with UPoly coefficients; last element nonzero.
struct BPoly(Vec<UPoly>);

impl BPoly {
    fn from_poly(p: &IntPoly2) -> Self {
        let d0 = p.degree(0) as usize;
        let d1 = p.degree(1) as usize;
        let mut rows = vec![vec![BigInt::zero(); d1 + 1]; d0 + 1];
        for (e, c) in &p.terms {
            rows[e.0 as usize][e.1 as usize] = c.clone();
        }
        BPoly(Self::trim(rows.into_iter().map(u_trim).collect()))
    }

    fn trim(mut rows: Vec<UPoly>) -> Vec<UPoly> {
        while rows.last().map_or(false, u_is_zero) {
            rows.pop();
        }
        rows
    }

    fn to_poly(&self) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (i, row) in self.0.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.add_term((i as u32, j as u32), c.clone());
                }
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> UPoly {
        let mut g: UPoly = Vec::new();
        for row in &self.0 {
            g = u_gcd(&g, row);
            if g.len() == 1 && g[0].is_one() {
                break;
            }
        }
        g
    }

    fn div_content(&self, c: &UPoly) -> BPoly {
        BPoly(self.0.iter().map(|row| u_exact_div(row, c)).collect())
    }

    fn primitive(&self) -> BPoly {
        if self.is_zero() {
            return BPoly(Vec::new());
        }
        self.div_content(&self.content())
    }

    fn mul_upoly(&self, c: &UPoly) -> BPoly {
        BPoly(Self::trim(self.0.iter().map(|row| u_mul(row, c)).collect()))
    }

    fn sub(&self, other: &BPoly) -> BPoly {
        let n = self.0.len().max(other.0.len());
        let mut rows = vec![Vec::new(); n];
        for (i, row) in rows.iter_mut().enumerate() {
            let a = self.0.get(i).cloned().unwrap_or_default();
            let b = other.0.get(i).cloned().unwrap_or_default();
            *row = u_sub(&a, &b);
        }
        BPoly(Self::trim(rows))
    }

    fn shift(&self, k: usize) -> BPoly {
        if self.is_zero() {
            return BPoly(Vec::new());
        }
        let mut rows = vec![Vec::new(); k];
        rows.extend(self.0.iter().cloned());
        BPoly(rows)
    }

    fn prem(&self, other: &BPoly) -> BPoly {
        let db = other.deg();
        let d = other.0[db].clone();
        let mut r = BPoly(self.0.clone());
        while !r.is_zero() && r.deg() >= db {
            let k = r.deg() - db;
            let lr = r.0[r.deg()].clone();
            r = r.mul_upoly(&d).sub(&other.mul_upoly(&lr).shift(k));
        }
        r
    }

    fn gcd(&self, other: &BPoly) -> BPoly {
        if self.is_zero() {
            return other.primitive().mul_upoly(&other.content());
        }
        if other.is_zero() {
            return self.primitive().mul_upoly(&self.content());
        }
        let cont = u_gcd(&self.content(), &other.content());
        let mut pa = self.primitive();
        let mut pb = other.primitive();
        if pa.deg() < pb.deg() {
            std::mem::swap(&mut pa, &mut pb);
        }
        while !pb.is_zero() {
            let r = pa.prem(&pb);
            pa = pb;
            pb = r.primitive();
        }
        pa.primitive().mul_upoly(&cont)
    }
}
