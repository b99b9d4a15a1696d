//! Symmetric functions in N variables stored in the monomial basis, with
//! conversion to the x-monomial ring, the power-sum change of basis, the two
//! abstract scalar products, and Gram-Schmidt orthogonalization along linear
//! extensions of dominance order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{IntPoly2, RatFunc, VarSet};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::MPoly;

/// Basis tags used by the CLI and serializers; conversions to the Macdonald
/// bases P and J live in the macdonald module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Monomial,
    Elementary,
    PowerSum,
    MacdonaldP,
    MacdonaldJ,
}

/// A symmetric function as a finite map Partition -> coefficient in the
/// monomial basis. Keys always have at most n_vars parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    n_vars: usize,
    vars: VarSet,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(n_vars: usize, vars: VarSet) -> Self {
        SymFunc { n_vars, vars, coeffs: BTreeMap::new() }
    }

    pub fn one(n_vars: usize, vars: VarSet) -> Self {
        let mut s = Self::zero(n_vars, vars);
        s.coeffs.insert(Partition::empty(), RatFunc::one(vars));
        s
    }

    /// A single monomial symmetric function m_lambda.
    pub fn monomial(lam: &Partition, n_vars: usize, vars: VarSet) -> Result<Self> {
        let mut s = Self::zero(n_vars, vars);
        s.set(lam.clone(), RatFunc::one(vars))?;
        Ok(s)
    }

    /// e_k = m_(1^k); zero when k exceeds the variable count.
    pub fn elementary(k: usize, n_vars: usize, vars: VarSet) -> Self {
        if k > n_vars {
            return Self::zero(n_vars, vars);
        }
        Self::monomial(&Partition::single_column(k), n_vars, vars).expect("length k <= N")
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn coeff_vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> RatFunc {
        self.coeffs
            .get(lam)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.vars))
    }

    pub fn set(&mut self, lam: Partition, c: RatFunc) -> Result<()> {
        if lam.len() > self.n_vars {
            return Err(Error::TooManyParts(lam.len(), self.n_vars));
        }
        if c.is_zero() {
            self.coeffs.remove(&lam);
        } else {
            self.coeffs.insert(lam, c);
        }
        Ok(())
    }

    pub fn add_to(&mut self, lam: Partition, c: RatFunc) -> Result<()> {
        let cur = self.coeff(&lam);
        self.set(lam, cur.try_add(&c)?)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        assert_eq!(self.vars, other.vars, "coefficient field mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_to(l.clone(), c.clone()).expect("keys already valid");
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1, other.vars)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars, self.vars);
        }
        SymFunc {
            n_vars: self.n_vars,
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, k)| (l.clone(), k.try_mul(c).expect("field mismatch")))
                .collect(),
        }
    }

    /// The common weight of all keys; `None` when zero or mixed-degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|l| l.weight());
        let first = it.next()?;
        if it.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Expand into the x-monomial ring.
    pub fn to_x(&self) -> MPoly {
        let mut out = MPoly::zero(self.n_vars, self.vars);
        for (lam, c) in &self.coeffs {
            for perm in distinct_permutations(lam, self.n_vars) {
                let exps: Vec<i64> = perm.iter().map(|&p| p as i64).collect();
                out = out.add(&MPoly::monomial(exps, c.clone(), self.n_vars));
            }
        }
        out
    }

    /// Collect a symmetric polynomial back into the m-basis.
    pub fn from_x(g: &MPoly) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = Self::zero(g.n_vars(), g.coeff_vars());
        for (e, c) in g.terms() {
            if e.iter().any(|&x| x < 0) {
                return Err(Error::Invalid(
                    "negative exponents cannot be collected into partitions".into(),
                ));
            }
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let parts: Vec<u32> = e.iter().map(|&x| x as u32).collect();
                out.set(Partition::new(parts)?, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Exact product computed by convolution of monomial orbits; this is an
    /// independent route from x-space multiplication.
    pub fn multiply(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.n_vars;
        let mut out = Self::zero(n, self.vars);
        for (lam, cl) in &self.coeffs {
            let orb_l = distinct_permutations(lam, n);
            for (mu, cm) in &other.coeffs {
                let orb_m = distinct_permutations(mu, n);
                let c = cl.try_mul(cm).expect("field mismatch");
                let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
                for a in &orb_l {
                    for b in &orb_m {
                        let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if s.windows(2).all(|w| w[0] >= w[1]) {
                            let p = Partition::new(s).expect("sorted");
                            *counts.entry(p).or_insert(0) += 1;
                        }
                    }
                }
                for (p, k) in counts {
                    let kc = c.try_mul(&RatFunc::from_int(k as i64, self.vars)).unwrap();
                    out.add_to(p, kc).expect("length bounded by N");
                }
            }
        }
        out
    }

    /// Drop coefficients whose partition needs more than `n_vars` parts;
    /// valid by the stability of the m-basis expansion.
    pub fn truncate_to(&self, n_vars: usize) -> Self {
        SymFunc {
            n_vars,
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.len() <= n_vars)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*m{}", c, l)?;
        }
        Ok(())
    }
}

/// All distinct permutations of the parts of `lam` padded with zeros to
/// length n, in descending lexicographic order.
pub fn distinct_permutations(lam: &Partition, n: usize) -> Vec<Vec<u32>> {
    assert!(lam.len() <= n, "partition longer than variable count");
    let mut padded: Vec<u32> = (1..=n).map(|i| lam.part(i)).collect();
    let mut out = Vec::new();
    loop {
        out.push(padded.clone());
        // next permutation in descending enumeration (prev_permutation)
        let mut i = n;
        while i > 1 && padded[i - 2] <= padded[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            break;
        }
        let mut j = n;
        while padded[j - 1] >= padded[i - 2] {
            j -= 1;
        }
        padded.swap(i - 2, j - 1);
        padded[i - 1..].reverse();
    }
    out
}

// ---------------------------------------------------------------------------
// Power-sum change of basis
// ---------------------------------------------------------------------------

/// Change-of-basis data between the p and m bases in degree n with N
/// variables. Entries of `p2m` are integers; `m2p` is present only when the
/// matrix is square and invertible (always the case for n <= N).
pub struct PBasis {
    pub parts: Vec<Partition>,
    pub p2m: Vec<Vec<BigInt>>,
    pub m2p: Option<Vec<Vec<BigRational>>>,
}

static PBASIS_CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<PBasis>>>> = OnceLock::new();

/// Multiply an integer m-basis vector by the power sum p_k.
fn mul_by_power_sum(
    v: &BTreeMap<Partition, BigInt>,
    k: u32,
    n_vars: usize,
) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (mu, c) in v {
        for a in distinct_permutations(mu, n_vars) {
            for i in 0..n_vars {
                let mut b = a.clone();
                b[i] += k;
                if b.windows(2).all(|w| w[0] >= w[1]) {
                    let p = Partition::new(b).expect("sorted");
                    *out.entry(p).or_insert_with(BigInt::zero) += c;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The m-basis expansion of p_lambda in N variables.
pub fn power_sum_in_m(lam: &Partition, n_vars: usize) -> BTreeMap<Partition, BigInt> {
    let mut v = BTreeMap::new();
    v.insert(Partition::empty(), BigInt::one());
    for &k in lam.parts() {
        v = mul_by_power_sum(&v, k, n_vars);
    }
    v
}

/// Partitions of n with at most N parts, and the matrix expressing each
/// p_lambda over the m_mu (rows indexed like `parts`, columns too).
pub fn p_basis(n: u32, n_vars: usize) -> Arc<PBasis> {
    let cache = PBASIS_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, n_vars)) {
        return Arc::clone(b);
    }
    let parts = Partition::all(n, n_vars);
    let index: HashMap<&Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = parts.len();
    let mut p2m = vec![vec![BigInt::zero(); dim]; dim];
    for (i, lam) in parts.iter().enumerate() {
        for (mu, c) in power_sum_in_m(lam, n_vars) {
            let j = index[&mu];
            p2m[i][j] = c;
        }
    }
    let m2p = invert_rational(&p2m);
    let b = Arc::new(PBasis { parts, p2m, m2p });
    cache
        .lock()
        .unwrap()
        .insert((n, n_vars), Arc::clone(&b));
    b
}

/// Inverse of an integer matrix over the rationals, if it exists.
fn invert_rational(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let dim = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..dim {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..dim {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..dim {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// The p-to-m matrix for degree n, exposed with field coefficients.
pub fn p_basis_matrix(n: u32, n_vars: usize, vars: VarSet) -> (Vec<Partition>, Vec<Vec<RatFunc>>) {
    let b = p_basis(n, n_vars);
    let m = b
        .p2m
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| RatFunc::from_bigint(c.clone(), vars))
                .collect()
        })
        .collect();
    (b.parts.clone(), m)
}

/// z_lambda = prod_i i^{m_i} m_i!
pub fn z_lambda(lam: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (i, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(i);
        }
        for k in 1..=m {
            z *= BigInt::from(k);
        }
    }
    z
}

/// Diagonal weight of the (q,t) pairing on p_lambda.
fn pairing_weight_qt(lam: &Partition) -> RatFunc {
    let mut w = RatFunc::from_bigint(z_lambda(lam), VarSet::Qt);
    for &p in lam.parts() {
        w = w
            * RatFunc::one_minus_qt(p as i64, 0)
                .try_div(&RatFunc::one_minus_qt(0, p as i64))
                .expect("1 - t^p != 0");
    }
    w
}

/// Diagonal weight of the alpha pairing on p_lambda.
fn pairing_weight_alpha(lam: &Partition) -> RatFunc {
    let mut w = RatFunc::from_bigint(z_lambda(lam), VarSet::Alpha);
    for _ in 0..lam.len() {
        w = w * RatFunc::alpha();
    }
    w
}

fn pairing_weight(lam: &Partition, vars: VarSet) -> Result<RatFunc> {
    match vars {
        VarSet::Qt => Ok(pairing_weight_qt(lam)),
        VarSet::Alpha => Ok(pairing_weight_alpha(lam)),
        VarSet::T => Err(Error::VarSetMismatch(vars, VarSet::Qt)),
    }
}

/// p-basis coordinates of a homogeneous symmetric function of degree <= N.
fn to_p_coords(f: &SymFunc, basis: &PBasis) -> Result<Vec<RatFunc>> {
    let vars = f.coeff_vars();
    let m2p = basis
        .m2p
        .as_ref()
        .expect("p-basis invertible for degree <= N");
    let dim = basis.parts.len();
    let mut out = vec![RatFunc::zero(vars); dim];
    for (mu, c) in f.terms() {
        let j = basis
            .parts
            .iter()
            .position(|p| p == mu)
            .ok_or_else(|| Error::Invalid(format!("partition {mu} missing from basis")))?;
        for (lam_idx, coord) in out.iter_mut().enumerate() {
            let e = &m2p[j][lam_idx];
            if !e.is_zero() {
                *coord = coord.try_add(&c.try_mul(&RatFunc::from_rational(e, vars))?)?;
            }
        }
    }
    Ok(out)
}

fn scalar_generic(f: &SymFunc, g: &SymFunc) -> Result<RatFunc> {
    f.check(g);
    let vars = f.coeff_vars();
    if f.is_zero() || g.is_zero() {
        return Ok(RatFunc::zero(vars));
    }
    let n = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Invalid("scalar product needs homogeneous input".into()))?;
    let m = g
        .homogeneous_degree()
        .ok_or_else(|| Error::Invalid("scalar product needs homogeneous input".into()))?;
    if n != m {
        return Ok(RatFunc::zero(vars));
    }
    if n as usize > f.n_vars() {
        return Err(Error::DegreeExceedsVars(n as usize, f.n_vars()));
    }
    let basis = p_basis(n, f.n_vars());
    let fp = to_p_coords(f, &basis)?;
    let gp = to_p_coords(g, &basis)?;
    let mut acc = RatFunc::zero(vars);
    for (i, lam) in basis.parts.iter().enumerate() {
        if fp[i].is_zero() || gp[i].is_zero() {
            continue;
        }
        let w = pairing_weight(lam, vars)?;
        acc = acc.try_add(&fp[i].try_mul(&gp[i])?.try_mul(&w)?)?;
    }
    Ok(acc)
}

/// The (q,t) scalar product of Eq-7 type, defined for degree <= N.
pub fn scalar_qt(f: &SymFunc, g: &SymFunc) -> Result<RatFunc> {
    if f.coeff_vars() != VarSet::Qt {
        return Err(Error::VarSetMismatch(f.coeff_vars(), VarSet::Qt));
    }
    scalar_generic(f, g)
}

/// The alpha scalar product, defined for degree <= N.
pub fn scalar_alpha(f: &SymFunc, g: &SymFunc) -> Result<RatFunc> {
    if f.coeff_vars() != VarSet::Alpha {
        return Err(Error::VarSetMismatch(f.coeff_vars(), VarSet::Alpha));
    }
    scalar_generic(f, g)
}

// ---------------------------------------------------------------------------
// Gram-Schmidt oracle
// ---------------------------------------------------------------------------

/// Tie-break rule for incomparable pairs when linearizing dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderExtension {
    /// Ascending lexicographic order on parts (a genuine linear extension).
    Lex,
    /// Descending lexicographic order on conjugates (a different extension).
    ConjLex,
}

/// Partitions of n ordered increasingly along a linear extension of
/// dominance.
pub fn dominance_extension(n: u32, ext: OrderExtension) -> Vec<Partition> {
    let mut parts = Partition::all(n, n as usize);
    match ext {
        OrderExtension::Lex => parts.sort(),
        OrderExtension::ConjLex => parts.sort_by(|a, b| {
            b.conjugate().cmp(&a.conjugate())
        }),
    }
    parts
}

/// Orthogonalize the monomial basis of degree n along a linear extension of
/// dominance, producing the monic orthogonal family P_lambda. Requires
/// n <= n_vars so the pairing is defined. This is the independent ground
/// truth for the creation-operator constructions.
///
/// The projection chain runs fraction-free: each orthogonal direction is an
/// integer-polynomial vector in p-coordinates, scaled pairing weights clear
/// the denominators once up front, and a single content gcd per step keeps
/// entries small. Monic normalization happens only at the end.
pub fn gram_schmidt_basis(
    n: u32,
    n_vars: usize,
    vars: VarSet,
    ext: OrderExtension,
) -> Result<Vec<(Partition, SymFunc)>> {
    if n as usize > n_vars {
        return Err(Error::DegreeExceedsVars(n as usize, n_vars));
    }
    let order = dominance_extension(n, ext);
    let basis = p_basis(n, n_vars);
    let dim = basis.parts.len();
    let weights: Vec<RatFunc> = basis
        .parts
        .iter()
        .map(|l| pairing_weight(l, vars))
        .collect::<Result<_>>()?;

    // polynomial pairing weights: W_i = w_i * lcm of all denominators
    let mut lcm = IntPoly2::one();
    for w in &weights {
        let g = lcm.gcd(w.den());
        lcm = lcm.mul(&w.den().exact_div(&g).expect("gcd divides"));
    }
    let wpoly: Vec<IntPoly2> = weights
        .iter()
        .map(|w| {
            w.num()
                .mul(&lcm.exact_div(w.den()).expect("lcm divisible"))
        })
        .collect();

    let m2p = basis
        .m2p
        .as_ref()
        .expect("p-basis invertible for degree <= N");
    // integer-cleared p-coordinates of m_lambda (row j of the inverse matrix)
    let row_int = |j: usize| -> Vec<IntPoly2> {
        let mut l = BigInt::one();
        for e in &m2p[j] {
            l = num_integer::Integer::lcm(&l, e.denom());
        }
        let lr = BigRational::from(l);
        m2p[j]
            .iter()
            .map(|e| IntPoly2::constant((e * &lr).to_integer()))
            .collect()
    };

    let dot = |a: &[IntPoly2], b: &[IntPoly2]| -> IntPoly2 {
        let mut acc = IntPoly2::zero();
        for i in 0..dim {
            if a[i].is_zero() || b[i].is_zero() {
                continue;
            }
            acc = acc.add(&a[i].mul(&b[i]).mul(&wpoly[i]));
        }
        acc
    };
    let reduce_content = |v: &mut Vec<IntPoly2>| {
        let mut g = IntPoly2::zero();
        for e in v.iter() {
            g = g.gcd(e);
            if g.is_one() {
                return;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for e in v.iter_mut() {
                *e = e.exact_div(&g).expect("gcd divides");
            }
        }
    };

    let mut done: Vec<(Partition, Vec<IntPoly2>)> = Vec::new();
    for lam in &order {
        let j = basis
            .parts
            .iter()
            .position(|p| p == lam)
            .expect("orders enumerate the same partitions");
        let mut v = row_int(j);
        for (_, u) in &done {
            let s_vu = dot(&v, u);
            if s_vu.is_zero() {
                continue;
            }
            let s_uu = dot(u, u);
            v = v
                .iter()
                .zip(u)
                .map(|(vi, ui)| vi.mul(&s_uu).sub(&ui.mul(&s_vu)))
                .collect();
            reduce_content(&mut v);
        }
        done.push((lam.clone(), v));
    }

    // convert back to the m-basis and normalize monic in m_lambda
    let mut out = Vec::new();
    for (lam, v) in done {
        let mut mcoeffs = vec![IntPoly2::zero(); dim];
        for (i, coord) in v.iter().enumerate() {
            if coord.is_zero() {
                continue;
            }
            for (j, slot) in mcoeffs.iter_mut().enumerate() {
                let e = &basis.p2m[i][j];
                if !e.is_zero() {
                    *slot = slot.add(&coord.mul_bigint(e));
                }
            }
        }
        let pivot_idx = basis
            .parts
            .iter()
            .position(|p| p == &lam)
            .expect("lam in basis");
        let pivot = mcoeffs[pivot_idx].clone();
        assert!(!pivot.is_zero(), "leading coefficient vanished");
        let mut f = SymFunc::zero(n_vars, vars);
        for (j, mu) in basis.parts.iter().enumerate() {
            if mcoeffs[j].is_zero() {
                continue;
            }
            f.set(
                mu.clone(),
                RatFunc::from_fraction(mcoeffs[j].clone(), pivot.clone(), vars)?,
            )?;
        }
        out.push((lam, f));
    }
    Ok(out)
}

/// Single orthogonal basis element from the oracle, in n_vars variables
/// (computed in max(|lambda|, n_vars) variables and truncated, using the
/// stability of the monomial expansion).
pub fn gram_schmidt_p(
    lam: &Partition,
    n_vars: usize,
    vars: VarSet,
    ext: OrderExtension,
) -> Result<SymFunc> {
    if lam.len() > n_vars {
        return Err(Error::TooManyParts(lam.len(), n_vars));
    }
    let n = lam.weight();
    let work_vars = (n as usize).max(n_vars);
    let basis = gram_schmidt_basis(n, work_vars, vars, ext)?;
    let f = basis
        .into_iter()
        .find(|(l, _)| l == lam)
        .map(|(_, f)| f)
        .ok_or_else(|| Error::Invalid(format!("partition {lam} not found")))?;
    Ok(f.truncate_to(n_vars))
}

fn _order_check(order: &[Partition]) -> bool {
    // every linear extension must respect strict dominance
    for (i, a) in order.iter().enumerate() {
        for b in &order[i + 1..] {
            if b.dominance_cmp(a).unwrap() == Some(Ordering::Less) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn qt_int(n: i64) -> RatFunc {
        RatFunc::from_int(n, VarSet::Qt)
    }

    #[test]
    fn to_x_examples() {
        let m11 = SymFunc::monomial(&p(&[1, 1]), 2, VarSet::Qt).unwrap();
        let x1x2 = MPoly::monomial(vec![1, 1], RatFunc::one(VarSet::Qt), 2);
        assert_eq!(m11.to_x(), x1x2);

        let m2 = SymFunc::monomial(&p(&[2]), 2, VarSet::Qt).unwrap();
        let expected = MPoly::monomial(vec![2, 0], RatFunc::one(VarSet::Qt), 2)
            .add(&MPoly::monomial(vec![0, 2], RatFunc::one(VarSet::Qt), 2));
        assert_eq!(m2.to_x(), expected);
    }

    #[test]
    fn from_x_examples() {
        let g = MPoly::elementary(1, 3, VarSet::Qt);
        let f = SymFunc::from_x(&g).unwrap();
        assert_eq!(f, SymFunc::monomial(&p(&[1]), 3, VarSet::Qt).unwrap());

        let bad = MPoly::var(1, 2, VarSet::Qt).unwrap();
        assert!(matches!(SymFunc::from_x(&bad), Err(Error::NotSymmetric)));
    }

    #[test]
    fn round_trip_random_combinations() {
        for n in 0..=5u32 {
            for lam in Partition::all(n, 3) {
                let f = SymFunc::monomial(&lam, 3, VarSet::Qt).unwrap();
                assert_eq!(SymFunc::from_x(&f.to_x()).unwrap(), f);
            }
        }
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            SymFunc::elementary(1, 2, VarSet::Qt),
            SymFunc::monomial(&p(&[1]), 2, VarSet::Qt).unwrap()
        );
        assert_eq!(
            SymFunc::elementary(2, 2, VarSet::Qt),
            SymFunc::monomial(&p(&[1, 1]), 2, VarSet::Qt).unwrap()
        );
        assert_eq!(SymFunc::elementary(0, 2, VarSet::Qt), SymFunc::one(2, VarSet::Qt));
        assert!(SymFunc::elementary(3, 2, VarSet::Qt).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let e1 = SymFunc::elementary(1, 2, VarSet::Qt);
        let sq = e1.multiply(&e1);
        let mut expected = SymFunc::zero(2, VarSet::Qt);
        expected.set(p(&[2]), qt_int(1)).unwrap();
        expected.set(p(&[1, 1]), qt_int(2)).unwrap();
        assert_eq!(sq, expected);

        let e2 = SymFunc::elementary(2, 2, VarSet::Qt);
        assert_eq!(
            e2.multiply(&e2),
            SymFunc::monomial(&p(&[2, 2]), 2, VarSet::Qt).unwrap()
        );

        let f = SymFunc::monomial(&p(&[2, 1]), 3, VarSet::Qt).unwrap();
        assert_eq!(f.multiply(&SymFunc::one(3, VarSet::Qt)), f);
    }

    #[test]
    fn multiply_agrees_with_x_space() {
        let shapes = [vec![2u32], vec![1, 1], vec![2, 1], vec![3]];
        for a in &shapes {
            for b in &shapes {
                let f = SymFunc::monomial(&p(a), 3, VarSet::Qt).unwrap();
                let g = SymFunc::monomial(&p(b), 3, VarSet::Qt).unwrap();
                let direct = f.multiply(&g);
                let via_x = SymFunc::from_x(&f.to_x().mul(&g.to_x())).unwrap();
                assert_eq!(direct, via_x);
            }
        }
    }

    #[test]
    fn power_sum_expansions() {
        // p1 = m1
        let v = power_sum_in_m(&p(&[1]), 2);
        assert_eq!(v.len(), 1);
        assert_eq!(v[&p(&[1])], BigInt::one());
        // p2 = m2 ; p11 = m2 + 2 m11
        let v = power_sum_in_m(&p(&[2]), 2);
        assert_eq!(v.len(), 1);
        assert_eq!(v[&p(&[2])], BigInt::one());
        let v = power_sum_in_m(&p(&[1, 1]), 2);
        assert_eq!(v[&p(&[2])], BigInt::one());
        assert_eq!(v[&p(&[1, 1])], BigInt::from(2));
        // single variable: p2 = m2 = p11
        let v = power_sum_in_m(&p(&[1, 1]), 1);
        assert_eq!(v.len(), 1);
        assert_eq!(v[&p(&[2])], BigInt::one());
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(z_lambda(&Partition::empty()), BigInt::one());
        assert_eq!(z_lambda(&p(&[1])), BigInt::one());
        assert_eq!(z_lambda(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[2])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[3, 1, 1])), BigInt::from(6));
    }

    fn sym_from_p(lam: &Partition, n_vars: usize, vars: VarSet) -> SymFunc {
        let mut f = SymFunc::zero(n_vars, vars);
        for (mu, c) in power_sum_in_m(lam, n_vars) {
            f.add_to(mu, RatFunc::from_bigint(c, vars)).unwrap();
        }
        f
    }

    #[test]
    fn scalar_qt_examples() {
        let p1 = sym_from_p(&p(&[1]), 2, VarSet::Qt);
        let v = scalar_qt(&p1, &p1).unwrap();
        let expected = RatFunc::one_minus_qt(1, 0)
            .try_div(&RatFunc::one_minus_qt(0, 1))
            .unwrap();
        assert_eq!(v, expected);

        let p2 = sym_from_p(&p(&[2]), 2, VarSet::Qt);
        let p11 = sym_from_p(&p(&[1, 1]), 2, VarSet::Qt);
        assert!(scalar_qt(&p2, &p11).unwrap().is_zero());

        let v = scalar_qt(&p11, &p11).unwrap();
        let expected = qt_int(2)
            * expected.clone()
            * RatFunc::one_minus_qt(1, 0)
                .try_div(&RatFunc::one_minus_qt(0, 1))
                .unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn scalar_alpha_examples() {
        let a = VarSet::Alpha;
        let p1 = sym_from_p(&p(&[1]), 2, a);
        assert_eq!(scalar_alpha(&p1, &p1).unwrap(), RatFunc::alpha());
        let p2 = sym_from_p(&p(&[2]), 2, a);
        assert_eq!(
            scalar_alpha(&p2, &p2).unwrap(),
            RatFunc::from_int(2, a) * RatFunc::alpha()
        );
        let p11 = sym_from_p(&p(&[1, 1]), 2, a);
        assert!(scalar_alpha(&p2, &p11).unwrap().is_zero());
    }

    #[test]
    fn scalar_refuses_large_degree() {
        let f = SymFunc::monomial(&p(&[2, 1]), 2, VarSet::Qt).unwrap();
        assert!(matches!(
            scalar_qt(&f, &f),
            Err(Error::DegreeExceedsVars(3, 2))
        ));
    }

    #[test]
    fn scalar_is_symmetric_bilinear() {
        let f = SymFunc::monomial(&p(&[2, 1]), 3, VarSet::Qt).unwrap();
        let g = SymFunc::monomial(&p(&[1, 1, 1]), 3, VarSet::Qt).unwrap();
        assert_eq!(scalar_qt(&f, &g).unwrap(), scalar_qt(&g, &f).unwrap());
        let h = f.scale(&qt_int(3)).add(&g);
        let lhs = scalar_qt(&h, &g).unwrap();
        let rhs = scalar_qt(&f, &g).unwrap() * qt_int(3) + scalar_qt(&g, &g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dominance_extensions_are_valid_and_distinct() {
        for n in 1..=7u32 {
            let a = dominance_extension(n, OrderExtension::Lex);
            let b = dominance_extension(n, OrderExtension::ConjLex);
            assert!(_order_check(&a));
            assert!(_order_check(&b));
            if n >= 6 {
                assert_ne!(a, b, "extensions should differ for n = {n}");
            }
        }
    }

    #[test]
    fn gram_schmidt_is_orthogonal_and_triangular() {
        for vars in [VarSet::Qt, VarSet::Alpha] {
            let basis = gram_schmidt_basis(3, 3, vars, OrderExtension::Lex).unwrap();
            for (i, (lam, f)) in basis.iter().enumerate() {
                // monic in m_lambda
                assert!(f.coeff(lam).is_one());
                // triangular: support dominated by lam
                for (mu, _) in f.terms() {
                    assert!(mu.dominance_leq(lam).unwrap());
                }
                for (lam2, g) in basis.iter().skip(i + 1) {
                    assert_ne!(lam, lam2);
                    assert!(scalar_generic(f, g).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_independent_of_extension() {
        for n in 1..=5u32 {
            let a = gram_schmidt_basis(n, n as usize, VarSet::Qt, OrderExtension::Lex).unwrap();
            let b =
                gram_schmidt_basis(n, n as usize, VarSet::Qt, OrderExtension::ConjLex).unwrap();
            let bm: BTreeMap<_, _> = b.into_iter().collect();
            for (lam, f) in a {
                assert_eq!(&f, &bm[&lam], "P_{lam} differs between extensions");
            }
        }
    }
}
