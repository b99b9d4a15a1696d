//! The alpha side: Dunkl operators, the Rodrigues formula for Jack
//! polynomials, alpha-Pieri machinery, the F^(alpha) family with its
//! verification sweep, and the exact limit bridge from the q,t side.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::{RatFunc, VarSet};
use crate::conjecture_lab::{SweepBounds, VerificationReport};
use crate::error::{Error, Result};
use crate::macdonald::rodrigues;
use crate::partitions::{c_lambda_alpha, psi_alpha, Cell, ExtendedPartition, Partition};
use crate::polyring::{k_subsets, MPoly};
use crate::symmetric::SymFunc;

use rayon::prelude::*;

/// An ordered index subset with the base shift of a Dunkl product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DunklProductSpec {
    indices: Vec<usize>,
    omega: BigRational,
}

impl DunklProductSpec {
    /// Indices must be strictly increasing and lie in 1..=n_vars.
    pub fn new(indices: Vec<usize>, omega: BigRational, n_vars: usize) -> Result<Self> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Invalid("indices not strictly increasing".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i < 1 || i > n_vars) {
            return Err(Error::IndexOutOfRange(bad, n_vars));
        }
        Ok(DunklProductSpec { indices, omega })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn omega(&self) -> &BigRational {
        &self.omega
    }
}

/// The Dunkl operator D_i = alpha x_i d/dx_i + sum_{j != i}
/// x_i/(x_i - x_j) (1 - K_ij), exact on Laurent polynomials.
pub fn dunkl(f: &MPoly, i: usize) -> Result<MPoly> {
    let n = f.n_vars();
    let vars = f.coeff_vars();
    if vars != VarSet::Alpha {
        return Err(Error::VarSetMismatch(vars, VarSet::Alpha));
    }
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange(i, n));
    }
    let mut out = f.euler(i)?.scale(&RatFunc::alpha());
    let xi = MPoly::var(i, n, vars)?;
    for j in 1..=n {
        if j != i {
            out = out.add(&(&xi * &f.divided_difference(i, j)?));
        }
    }
    Ok(out)
}

/// Apply the ordered product (D_{j_1} + w)(D_{j_2} + w + 1) ... right to
/// left, with an arbitrary base shift in the coefficient field.
pub fn d_product_with(f: &MPoly, indices: &[usize], omega: &RatFunc) -> Result<MPoly> {
    let mut g = f.clone();
    for (pos, &j) in indices.iter().enumerate().rev() {
        let shift = omega.try_add(&RatFunc::from_int(pos as i64, omega.vars()))?;
        g = dunkl(&g, j)?.add(&g.scale(&shift));
    }
    Ok(g)
}

/// Apply a Dunkl product given by a spec with rational base shift.
pub fn d_product(f: &MPoly, spec: &DunklProductSpec) -> Result<MPoly> {
    let omega = RatFunc::from_rational(&spec.omega, VarSet::Alpha);
    d_product_with(f, &spec.indices, &omega)
}

fn x_subset_exps(in_set: &[usize], n: usize) -> Vec<i64> {
    let mut e = vec![0i64; n];
    for &i in in_set {
        e[i - 1] = 1;
    }
    e
}

fn subset_sum(f: &SymFunc, k: usize, omega: &RatFunc) -> Result<SymFunc> {
    let n = f.n_vars();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange(k, n));
    }
    let fx = f.to_x();
    let mut acc = MPoly::zero(n, VarSet::Alpha);
    for subset in k_subsets(n, k) {
        let g = d_product_with(&fx, &subset, omega)?;
        acc = acc.add(&g.mul_monomial(&x_subset_exps(&subset, n)));
    }
    SymFunc::from_x(&acc)
}

/// The creation operator sum_{|J|=k} x_J D_{J,1}.
pub fn tilde_b_plus_alpha(f: &SymFunc, k: usize) -> Result<SymFunc> {
    subset_sum(f, k, &RatFunc::one(VarSet::Alpha))
}

static JACK_CACHE: OnceLock<Mutex<HashMap<(Partition, usize), SymFunc>>> = OnceLock::new();

/// The integral Jack polynomial J_lambda(alpha) via the creation-operator
/// chain, with intermediate results cached.
pub fn rodrigues_jack(lam: &Partition, n_vars: usize) -> Result<SymFunc> {
    if lam.len() > n_vars {
        return Err(Error::TooManyParts(lam.len(), n_vars));
    }
    let cache = JACK_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(lam.clone(), n_vars)) {
        return Ok(f.clone());
    }
    let result = if lam.is_empty() {
        SymFunc::one(n_vars, VarSet::Alpha)
    } else {
        let l = lam.len();
        let prev_parts: Vec<u32> = lam.parts().iter().map(|&p| p - 1).collect();
        let prev = Partition::new(prev_parts)?;
        let jprev = rodrigues_jack(&prev, n_vars)?;
        tilde_b_plus_alpha(&jprev, l)?
    };
    cache
        .lock()
        .unwrap()
        .insert((lam.clone(), n_vars), result.clone());
    Ok(result)
}

/// The monic Jack polynomial P_lambda(alpha) = J_lambda / c_lambda(alpha).
pub fn jack_p(lam: &Partition, n_vars: usize) -> Result<SymFunc> {
    let j = rodrigues_jack(lam, n_vars)?;
    Ok(j.scale(&c_lambda_alpha(lam).try_inverse()?))
}

/// The alternative creation operator
/// prod_{j=k+1}^N (-alpha + k + 1 - j)^{-1} D_{{1..N}, k+1-N-alpha} e_k.
pub fn b_plus_alpha(f: &SymFunc, k: usize) -> Result<SymFunc> {
    let n = f.n_vars();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange(k, n));
    }
    let alpha = RatFunc::alpha();
    let mut pre = RatFunc::one(VarSet::Alpha);
    for j in (k + 1)..=n {
        let factor = RatFunc::from_int((k as i64) + 1 - (j as i64), VarSet::Alpha)
            .try_sub(&alpha)?;
        pre = pre.try_mul(&factor)?;
    }
    let ek = SymFunc::elementary(k, n, VarSet::Alpha);
    let g = ek.multiply(f).to_x();
    let omega = RatFunc::from_int((k as i64) + 1 - (n as i64), VarSet::Alpha).try_sub(&alpha)?;
    let full: Vec<usize> = (1..=n).collect();
    let h = d_product_with(&g, &full, &omega)?;
    let sym = SymFunc::from_x(&h)?;
    Ok(sym.scale(&pre.try_inverse()?))
}

/// Pieri expansion on the alpha side: e_k P_lambda = sum over vertical
/// k-strips mu of Psi^(alpha)_{mu/lambda} P_mu, restricted to length <= N.
pub fn pieri_alpha(lam: &Partition, k: usize, n_vars: usize) -> Result<Vec<(Partition, RatFunc)>> {
    if lam.len() > n_vars {
        return Err(Error::TooManyParts(lam.len(), n_vars));
    }
    let mut out = Vec::new();
    for mu in lam.vertical_strips(k, n_vars) {
        out.push((mu.clone(), psi_alpha(&mu, lam)?));
    }
    Ok(out)
}

/// Expand a symmetric function over Q(alpha) in the Jack P-basis by peeling
/// dominance-maximal monomial supports.
pub fn to_p_basis_alpha(f: &SymFunc) -> Result<Vec<(Partition, RatFunc)>> {
    let n_vars = f.n_vars();
    if f.coeff_vars() != VarSet::Alpha {
        return Err(Error::VarSetMismatch(f.coeff_vars(), VarSet::Alpha));
    }
    let mut rest = f.clone();
    let mut out: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    while !rest.is_zero() {
        let lam = rest
            .terms()
            .map(|(l, _)| l.clone())
            .max_by_key(|l| (l.weight(), l.clone()))
            .expect("nonzero");
        let c = rest.coeff(&lam);
        let p = jack_p(&lam, n_vars)?;
        rest = rest.sub(&p.scale(&c));
        out.insert(lam, c);
    }
    Ok(out.into_iter().collect())
}

/// Strip factor alpha (a'(s) + offset) + kappa - l'(s) for a cell of the
/// shifted diagram; offset and kappa may be rational.
fn f_alpha_factor(mu: &Partition, s: Cell, kappa: &BigRational, offset: &BigRational) -> Result<RatFunc> {
    let lp = BigRational::from(BigInt::from(mu.coleg(s)?));
    let ap = BigRational::from(BigInt::from(mu.coarm(s)?));
    let a_part = RatFunc::alpha().try_mul(&RatFunc::from_rational(&(ap + offset), VarSet::Alpha))?;
    a_part.try_add(&RatFunc::from_rational(&(kappa - lp), VarSet::Alpha))
}

/// Action of F^(alpha)_{m,kappa} on P_beta for an extended partition beta:
/// the vertical m-strip expansion with the extra strip factors. Both kappa
/// and the anchor of beta may be rational.
pub fn f_alpha_action(
    beta: &ExtendedPartition,
    m: usize,
    kappa: &BigRational,
) -> Result<Vec<(ExtendedPartition, RatFunc)>> {
    let n = beta.n_vars();
    let offset = beta.offset().clone();
    let lam = beta.base();
    let mut out = Vec::new();
    for mu in lam.vertical_strips(m, n) {
        let mut c = psi_alpha(&mu, lam)?;
        for s in mu.cells() {
            if !lam.contains_cell(s) {
                c = c.try_mul(&f_alpha_factor(&mu, s, kappa, &offset)?)?;
            }
        }
        let delta = beta.with_base(mu)?;
        out.push((delta, c));
    }
    Ok(out)
}

/// The realized F^(alpha)_{m,kappa} operator sum_{|J|=m} x_J D_{J,kappa-m+1}
/// for rational kappa.
pub fn f_alpha_realized(f: &SymFunc, m: usize, kappa: &BigRational) -> Result<SymFunc> {
    let omega = kappa - BigRational::from(BigInt::from(m as i64 - 1));
    subset_sum(f, m, &RatFunc::from_rational(&omega, VarSet::Alpha))
}

fn partitions_in_range(n_vars: usize, deg_max: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for deg in 0..=deg_max {
        out.extend(Partition::all(deg, n_vars));
    }
    out
}

fn reconstruct_action(
    action: &[(ExtendedPartition, RatFunc)],
    n: usize,
) -> Result<SymFunc> {
    let mut combo = SymFunc::zero(n, VarSet::Alpha);
    for (delta, c) in action {
        let off = delta
            .offset_as_int()
            .ok_or_else(|| Error::Invalid("non-integer target".into()))?;
        if off < 0 {
            return Err(Error::Invalid("negative target offset".into()));
        }
        let parts: Vec<u32> = (1..=n).map(|i| delta.base().part(i) + off as u32).collect();
        let full = Partition::new(parts)?;
        combo = combo.add(&jack_p(&full, n)?.scale(c));
    }
    Ok(combo)
}

fn report(conjecture: &str, case: String, diff: Option<String>) -> VerificationReport {
    use crate::conjecture_lab::Status;
    VerificationReport {
        conjecture: conjecture.to_string(),
        case,
        status: if diff.is_none() {
            Status::Verified
        } else {
            Status::Refuted
        },
        witness: diff,
        millis: None,
    }
}

fn skip(conjecture: &str, case: String, why: String) -> VerificationReport {
    VerificationReport {
        conjecture: conjecture.to_string(),
        case,
        status: crate::conjecture_lab::Status::Skipped,
        witness: Some(why),
        millis: None,
    }
}

fn diff_witness(a: &SymFunc, b: &SymFunc) -> Option<String> {
    let d = a.sub(b);
    if d.is_zero() {
        None
    } else {
        Some(d.to_string())
    }
}

/// Sweep the three parts of the conjecture on the alpha side:
/// (i) F^(alpha)_{k,k} acts like the creation operator, (ii) the Dunkl-sum
/// realization matches the strip action on the P-basis, (iii) the family
/// commutes.
pub fn conjecture11_sweep(bounds: &SweepBounds) -> Vec<VerificationReport> {
    #[derive(Clone)]
    enum Case {
        I(usize, usize, Partition),
        Ii(usize, usize, i64, Partition),
        Iii(usize, usize, usize, i64, Partition),
    }
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for k in 1..=n {
            for lam in partitions_in_range(n, bounds.deg_max) {
                cases.push(Case::I(n, k, lam));
            }
        }
    }
    for n in 1..=bounds.n_max {
        for m in 1..=n {
            for kappa in bounds.kappa_range.0..=bounds.kappa_range.1 {
                for lam in partitions_in_range(n, bounds.deg_max) {
                    cases.push(Case::Ii(n, m, kappa, lam));
                }
            }
        }
    }
    for n in 1..=bounds.n_max {
        for m1 in 1..=n {
            for m2 in (m1 + 1)..=n {
                for kappa in bounds.kappa_range.0..=bounds.kappa_range.1 {
                    for lam in partitions_in_range(n, bounds.deg_max) {
                        cases.push(Case::Iii(n, m1, m2, kappa, lam));
                    }
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|case| match case {
            Case::I(n, k, lam) => {
                let label = "conjecture-11-i";
                let name = format!("N={n} k={k} lambda={lam}");
                let body = || -> Result<Option<String>> {
                    let p = jack_p(lam, *n)?;
                    let lhs = tilde_b_plus_alpha(&p, *k)?;
                    let beta = ExtendedPartition::from_partition(lam, *n)?;
                    let kap = BigRational::from(BigInt::from(*k as i64));
                    let rhs = reconstruct_action(&f_alpha_action(&beta, *k, &kap)?, *n)?;
                    Ok(diff_witness(&lhs, &rhs))
                };
                match body() {
                    Ok(diff) => report(label, name, diff),
                    Err(e) => skip(label, name, e.to_string()),
                }
            }
            Case::Ii(n, m, kappa, lam) => {
                let label = "conjecture-11-ii";
                let name = format!("N={n} m={m} kappa={kappa} lambda={lam}");
                let body = || -> Result<Option<String>> {
                    let p = jack_p(lam, *n)?;
                    let kap = BigRational::from(BigInt::from(*kappa));
                    let lhs = f_alpha_realized(&p, *m, &kap)?;
                    let beta = ExtendedPartition::from_partition(lam, *n)?;
                    let rhs = reconstruct_action(&f_alpha_action(&beta, *m, &kap)?, *n)?;
                    Ok(diff_witness(&lhs, &rhs))
                };
                match body() {
                    Ok(diff) => report(label, name, diff),
                    Err(e) => skip(label, name, e.to_string()),
                }
            }
            Case::Iii(n, m1, m2, kappa, lam) => {
                let label = "conjecture-11-iii";
                let name = format!("N={n} m={m1} n={m2} kappa={kappa} lambda={lam}");
                let body = || -> Result<Option<String>> {
                    let p = jack_p(lam, *n)?;
                    let kap = BigRational::from(BigInt::from(*kappa));
                    let ab = f_alpha_realized(&f_alpha_realized(&p, *m2, &kap)?, *m1, &kap)?;
                    let ba = f_alpha_realized(&f_alpha_realized(&p, *m1, &kap)?, *m2, &kap)?;
                    Ok(diff_witness(&ab, &ba))
                };
                match body() {
                    Ok(diff) => report(label, name, diff),
                    Err(e) => skip(label, name, e.to_string()),
                }
            }
        })
        .collect()
}

/// Exact limit check at integer alpha = a: substitute q = t^a in
/// J_lambda(q,t), divide each m-coefficient by (1-t)^{|lambda|}, evaluate
/// at t = 1, and compare with J_lambda(alpha) at alpha = a.
pub fn limit_bridge(lam: &Partition, n_vars: usize, a: u32) -> Result<bool> {
    if a < 1 {
        return Err(Error::Invalid("alpha exponent must be positive".into()));
    }
    let jqt = rodrigues(lam, n_vars)?;
    let jal = rodrigues_jack(lam, n_vars)?;
    let one_minus_t = RatFunc::one(VarSet::T).try_sub(&RatFunc::gen_pow(VarSet::T, 1, 1))?;
    let denom = one_minus_t.pow(lam.weight() as i64)?;
    let t_one = BigRational::one();
    let alpha_val = BigRational::from(BigInt::from(a));

    let keys: std::collections::BTreeSet<Partition> = jqt
        .terms()
        .map(|(l, _)| l.clone())
        .chain(jal.terms().map(|(l, _)| l.clone()))
        .collect();
    for mu in keys {
        let left = jqt
            .coeff(&mu)
            .substitute_q_power(a)?
            .try_div(&denom)?
            .eval_univar(&t_one)?;
        let right = jal.coeff(&mu).eval_univar(&alpha_val)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjecture_lab::Status;
    use crate::symmetric::{gram_schmidt_p, scalar_alpha, OrderExtension};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn dunkl_basics() {
        for n in 1..=3usize {
            // D_i 1 = 0
            let one = MPoly::constant(RatFunc::one(VarSet::Alpha), n);
            assert!(dunkl(&one, 1).unwrap().is_zero());
            // D_1 x_1 = (alpha + N - 1) x_1
            let x1 = MPoly::var(1, n, VarSet::Alpha).unwrap();
            let expected = x1.scale(
                &RatFunc::alpha()
                    .try_add(&RatFunc::from_int(n as i64 - 1, VarSet::Alpha))
                    .unwrap(),
            );
            assert_eq!(dunkl(&x1, 1).unwrap(), expected, "N={n}");
        }
        // D_1 x_2 = -x_1 at N = 2
        let x2 = MPoly::var(2, 2, VarSet::Alpha).unwrap();
        let x1 = MPoly::var(1, 2, VarSet::Alpha).unwrap();
        assert_eq!(dunkl(&x2, 1).unwrap(), x1.neg());
    }

    #[test]
    fn d_product_trivia() {
        let one = MPoly::constant(RatFunc::one(VarSet::Alpha), 2);
        let empty = DunklProductSpec::new(vec![], rat(7), 2).unwrap();
        assert_eq!(d_product(&one, &empty).unwrap(), one);
        let single = DunklProductSpec::new(vec![1], rat(7), 2).unwrap();
        assert_eq!(
            d_product(&one, &single).unwrap(),
            one.scale(&RatFunc::from_int(7, VarSet::Alpha))
        );
        assert!(DunklProductSpec::new(vec![2, 1], rat(0), 2).is_err());
        assert!(DunklProductSpec::new(vec![1, 3], rat(0), 2).is_err());
    }

    #[test]
    fn eigen_relation_on_leading_subsets() {
        // (Res D_{J,w}) J_lam(x(J)) = prod (alpha lam_i + w + l - i) J_lam
        // for J = {1..l}, realized by embedding l-variable Jacks in N = l
        for l in 1..=3usize {
            for deg in 0..=3u32 {
                for lam in Partition::all(deg, l) {
                    for w in 0..=2i64 {
                        let j = rodrigues_jack(&lam, l).unwrap().to_x();
                        let spec =
                            DunklProductSpec::new((1..=l).collect(), rat(w), l).unwrap();
                        let got = d_product(&j, &spec).unwrap();
                        let mut eig = RatFunc::one(VarSet::Alpha);
                        for i in 1..=l {
                            let term = RatFunc::alpha()
                                .try_mul(&RatFunc::from_int(lam.part(i) as i64, VarSet::Alpha))
                                .unwrap()
                                .try_add(&RatFunc::from_int(
                                    w + l as i64 - i as i64,
                                    VarSet::Alpha,
                                ))
                                .unwrap();
                            eig = eig.try_mul(&term).unwrap();
                        }
                        assert_eq!(got, j.scale(&eig), "l={l} lam={lam} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn rodrigues_jack_small_values() {
        assert_eq!(
            rodrigues_jack(&Partition::empty(), 2).unwrap(),
            SymFunc::one(2, VarSet::Alpha)
        );
        assert_eq!(
            rodrigues_jack(&p(&[1]), 2).unwrap(),
            SymFunc::monomial(&p(&[1]), 2, VarSet::Alpha).unwrap()
        );
        // leading coefficient of J_(2) is c_(2)(alpha) = alpha + 1
        let j2 = rodrigues_jack(&p(&[2]), 2).unwrap();
        assert_eq!(j2.coeff(&p(&[2])), c_lambda_alpha(&p(&[2])));
        assert_eq!(
            c_lambda_alpha(&p(&[2])),
            RatFunc::alpha()
                .try_add(&RatFunc::one(VarSet::Alpha))
                .unwrap()
        );
        assert_eq!(c_lambda_alpha(&p(&[1, 1])), RatFunc::from_int(2, VarSet::Alpha));
    }

    #[test]
    fn rodrigues_jack_matches_gram_schmidt() {
        for n_vars in 1..=3usize {
            for deg in 0..=3u32 {
                for lam in Partition::all(deg, n_vars) {
                    let oracle =
                        gram_schmidt_p(&lam, n_vars, VarSet::Alpha, OrderExtension::Lex).unwrap();
                    let built = jack_p(&lam, n_vars).unwrap();
                    assert_eq!(built, oracle, "N={n_vars} lam={lam}");
                }
            }
        }
    }

    #[test]
    fn jack_orthogonality() {
        let n = 3;
        let lams = partitions_in_range(n, 3);
        for a in &lams {
            for b in &lams {
                if a != b && a.weight() == b.weight() {
                    let s = scalar_alpha(
                        &rodrigues_jack(a, n).unwrap(),
                        &rodrigues_jack(b, n).unwrap(),
                    )
                    .unwrap();
                    assert!(s.is_zero(), "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn b_plus_alpha_chain_matches_rodrigues() {
        for n in 1..=3usize {
            for deg in 0..=3u32 {
                for lam in Partition::all(deg, n) {
                    if lam.is_empty() {
                        continue;
                    }
                    let l = lam.len();
                    let prev =
                        Partition::new(lam.parts().iter().map(|&x| x - 1).collect()).unwrap();
                    let jprev = rodrigues_jack(&prev, n).unwrap();
                    let via_b = b_plus_alpha(&jprev, l).unwrap();
                    assert_eq!(via_b, rodrigues_jack(&lam, n).unwrap(), "N={n} lam={lam}");
                }
            }
        }
    }

    #[test]
    fn pieri_alpha_matches_multiplication() {
        let n = 3;
        for lam in partitions_in_range(n, 2) {
            for k in 1..=n {
                let expansion = pieri_alpha(&lam, k, n).unwrap();
                let prod = SymFunc::elementary(k, n, VarSet::Alpha)
                    .multiply(&jack_p(&lam, n).unwrap());
                let direct = to_p_basis_alpha(&prod).unwrap();
                let expected: BTreeMap<Partition, RatFunc> = expansion
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                let got: BTreeMap<Partition, RatFunc> =
                    direct.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                assert_eq!(got, expected, "lam={lam} k={k}");
            }
        }
    }

    #[test]
    fn f_alpha_action_identity_at_m_zero() {
        let beta = ExtendedPartition::parse_int_entries("(2,1,-1)").unwrap();
        let out = f_alpha_action(&beta, 0, &rat(4)).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, beta);
        assert!(out[0].1.is_one());
    }

    #[test]
    fn f_alpha_rational_anchor_is_legal() {
        use std::str::FromStr;
        let beta = ExtendedPartition::new(
            p(&[2, 1]),
            BigRational::from_str("1/2").unwrap(),
            3,
        )
        .unwrap();
        let out = f_alpha_action(&beta, 1, &BigRational::from_str("3/2").unwrap()).unwrap();
        assert!(!out.is_empty());
        for (_, c) in &out {
            assert!(!c.is_zero());
        }
    }

    #[test]
    fn conjecture11_sweep_small_range() {
        let bounds = SweepBounds { n_max: 2, deg_max: 3, kappa_range: (0, 2) };
        let reports = conjecture11_sweep(&bounds);
        assert!(!reports.is_empty());
        for r in &reports {
            assert_eq!(
                r.status,
                Status::Verified,
                "{} {} {:?}",
                r.conjecture,
                r.case,
                r.witness
            );
        }
    }

    #[test]
    fn limit_bridge_instances() {
        for a in 1..=3u32 {
            for n in 1..=2usize {
                for deg in 0..=3u32 {
                    for lam in Partition::all(deg, n) {
                        assert!(limit_bridge(&lam, n, a).unwrap(), "a={a} N={n} lam={lam}");
                    }
                }
            }
        }
    }
}
