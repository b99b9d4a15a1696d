//! Conjectural creation operators (the tilde and bar families and the
//! F_{m,kappa} operators), the proven special cases surrounding them, and a
//! sweep harness that certifies or refutes instances with exact witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{RatFunc, VarSet};
use crate::error::{Error, Result};
use crate::macdonald::{b_plus, macdonald_on_subset, macdonald_p, rodrigues};
use crate::partitions::{psi_qt, Cell, ExtendedPartition, Partition};
use crate::polyring::{k_subsets, MPoly};
use crate::symmetric::SymFunc;

/// Outcome of a single verification case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

/// One exact check: either a proven identity (failure is a bug) or a
/// conjecture instance (failure is a discovery, recorded with a witness).
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub conjecture: String,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl VerificationReport {
    fn new(conjecture: &str, case: String, diff: Option<String>) -> Self {
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

    fn skipped(conjecture: &str, case: String, why: String) -> Self {
        VerificationReport {
            conjecture: conjecture.to_string(),
            case,
            status: Status::Skipped,
            witness: Some(why),
            millis: None,
        }
    }
}

/// Case bounds for a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepBounds {
    pub n_max: usize,
    pub deg_max: u32,
    pub kappa_range: (i64, i64),
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds { n_max: 3, deg_max: 4, kappa_range: (0, 3) }
    }
}

// ---------------------------------------------------------------------------
// Subset operators
// ---------------------------------------------------------------------------

/// Numerator of a cross-pair coefficient over the full Vandermonde: returns
/// sign * prod_cross(factor) * Vand(in) * Vand(out), where `factor` is
/// (t x_i - x_j) when `t_on_in` and (x_i - t x_j) otherwise, for i in
/// `in_set` and j in `out_set`.
fn cross_numerator(
    in_set: &[usize],
    out_set: &[usize],
    n: usize,
    vars: VarSet,
    t_on_in: bool,
) -> MPoly {
    let mut flips = 0usize;
    for &b in in_set {
        for &a in out_set {
            if a < b {
                flips += 1;
            }
        }
    }
    let sign = if flips % 2 == 0 { 1 } else { -1 };
    let mut out = MPoly::constant(RatFunc::from_int(sign, vars), n);
    for &i in in_set {
        for &j in out_set {
            let xi = MPoly::var(i, n, vars).expect("index checked");
            let xj = MPoly::var(j, n, vars).expect("index checked");
            let f = if t_on_in {
                xi.scale(&RatFunc::t_pow(1)) - xj
            } else {
                xi - xj.scale(&RatFunc::t_pow(1))
            };
            out = &out * &f;
        }
    }
    out = &out * &MPoly::vandermonde(in_set, n, vars);
    out = &out * &MPoly::vandermonde(out_set, n, vars);
    out
}

fn x_subset_exps(in_set: &[usize], n: usize) -> Vec<i64> {
    let mut e = vec![0i64; n];
    for &i in in_set {
        e[i - 1] = 1;
    }
    e
}

/// Shared body of the tilde / F-realized subset operators:
/// sum over k-subsets I of  pre * prod (t x_i - x_j)/(x_i - x_j) * x_I *
/// M_I(X) f, with the subset Macdonald operator acting in the I variables.
fn tilde_like(f: &MPoly, k: usize, x_param: &RatFunc, pre: &RatFunc) -> Result<MPoly> {
    let n = f.n_vars();
    let vars = f.coeff_vars();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange(k, n));
    }
    let full: Vec<usize> = (1..=n).collect();
    let vand = MPoly::vandermonde(&full, n, vars);
    let mut acc = MPoly::zero(n, vars);
    for in_set in k_subsets(n, k) {
        let out_set: Vec<usize> = full
            .iter()
            .copied()
            .filter(|i| !in_set.contains(i))
            .collect();
        let mi = macdonald_on_subset(f, &in_set, &|r| x_param.pow(r as i64).ok())?;
        let term = mi.mul_monomial(&x_subset_exps(&in_set, n));
        let num = cross_numerator(&in_set, &out_set, n, vars, true);
        acc = &acc + &(&term * &num);
    }
    let res = acc.exact_div(&vand)?;
    Ok(res.scale(pre))
}

/// The conjectural creation operator with the plain subset coefficients.
pub fn tilde_b_plus(f: &SymFunc, k: usize) -> Result<SymFunc> {
    let n = f.n_vars();
    let pre = RatFunc::t_pow(-(((n - k) * k) as i64));
    let g = tilde_like(&f.to_x(), k, &-RatFunc::t_pow(1), &pre)?;
    SymFunc::from_x(&g)
}

/// The conjectural creation operator whose coefficients carry q-shifts on
/// the complement variables.
pub fn bar_b_plus(f: &SymFunc, k: usize) -> Result<SymFunc> {
    let n = f.n_vars();
    let vars = f.coeff_vars();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange(k, n));
    }
    let fx = f.to_x();
    let full: Vec<usize> = (1..=n).collect();
    let vand = MPoly::vandermonde(&full, n, vars);
    let x = -RatFunc::t_pow(1);
    let mut acc = MPoly::zero(n, vars);
    for in_set in k_subsets(n, k) {
        let out_set: Vec<usize> = full
            .iter()
            .copied()
            .filter(|i| !in_set.contains(i))
            .collect();
        let mi = macdonald_on_subset(&fx, &in_set, &|r| x.pow(r as i64).ok())?;
        // the coefficient's shift operators act on everything to the right
        let term = mi.shift_q_many(&out_set)?.mul_monomial(&x_subset_exps(&in_set, n));
        let num = cross_numerator(&in_set, &out_set, n, vars, false);
        acc = &acc + &(&term * &num);
    }
    let g = acc.exact_div(&vand)?;
    SymFunc::from_x(&g)
}

/// The realized F_{m,kappa} operator: like the tilde operator but with the
/// subset Macdonald parameter shifted to X = -t^{kappa-m+1}.
pub fn f_realized(f: &SymFunc, m: usize, kappa: i64) -> Result<SymFunc> {
    let n = f.n_vars();
    let pre = RatFunc::t_pow(-(((n - m) * m) as i64));
    let x = -RatFunc::t_pow(kappa - m as i64 + 1);
    let g = tilde_like(&f.to_x(), m, &x, &pre)?;
    SymFunc::from_x(&g)
}

/// Difference of the subset identity sum_I prod (x_i - t x_j)/(x_i - x_j)
/// x_I minus e_k; zero exactly when the identity holds.
pub fn garsia_tesler_difference(n: usize, k: usize) -> Result<MPoly> {
    let vars = VarSet::Qt;
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange(k, n));
    }
    let full: Vec<usize> = (1..=n).collect();
    let vand = MPoly::vandermonde(&full, n, vars);
    let mut acc = MPoly::zero(n, vars);
    for in_set in k_subsets(n, k) {
        let out_set: Vec<usize> = full
            .iter()
            .copied()
            .filter(|i| !in_set.contains(i))
            .collect();
        let num = cross_numerator(&in_set, &out_set, n, vars, false);
        acc = &acc + &num.mul_monomial(&x_subset_exps(&in_set, n));
    }
    let lhs = acc.exact_div(&vand)?;
    Ok(lhs.sub(&MPoly::elementary(k, n, vars)))
}

// ---------------------------------------------------------------------------
// The combinatorial F-action
// ---------------------------------------------------------------------------

/// Strip factor 1 - t^{kappa - l'(s)} q^{a'(s) + offset} for a cell of the
/// shifted diagram.
fn f_factor(mu: &Partition, s: Cell, kappa: i64, offset: i64) -> Result<RatFunc> {
    let lp = mu.coleg(s)? as i64;
    let ap = mu.coarm(s)? as i64;
    Ok(RatFunc::one(VarSet::Qt) - RatFunc::t_pow(kappa - lp) * RatFunc::q_pow(ap + offset))
}

/// Action of F_{m,kappa} on P_beta for an extended partition beta with
/// integer anchor: the vertical m-strip expansion with the extra strip
/// factors. Coefficients are exact elements of Q(q,t).
pub fn f_action(
    beta: &ExtendedPartition,
    m: usize,
    kappa: i64,
) -> Result<Vec<(ExtendedPartition, RatFunc)>> {
    let n = beta.n_vars();
    let offset = beta
        .offset_as_int()
        .ok_or_else(|| Error::Invalid("non-integer anchor".into()))?;
    let lam = beta.base();
    let mut out = Vec::new();
    for mu in lam.vertical_strips(m, n) {
        let mut c = psi_qt(&mu, lam)?;
        for s in mu.cells() {
            if !lam.contains_cell(s) {
                c = c.try_mul(&f_factor(&mu, s, kappa, offset)?)?;
            }
        }
        let delta = beta.with_base(mu)?;
        out.push((delta, c));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Which family of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// Tilde-operator chains build the J polynomials.
    Conjecture4,
    /// Bar-operator chains build the J polynomials.
    Conjecture5,
    /// The tilde operator coincides with the realized F_{k,k}.
    Conjecture8,
    /// [F_{m,kappa}, F_{n,kappa}] = 0 on the Macdonald basis.
    Commuting,
    /// Bar-chain outputs have integer polynomial coefficients.
    Integrality,
    /// Subset Macdonald operators intertwine with e_N (proven).
    Intertwining,
    /// Tilde equals the plain creation operator on short partitions when
    /// N = k + 1 (proven).
    TildePlain,
    /// The subset coefficient identity summing to e_k (proven).
    GarsiaTesler,
}

impl SweepKind {
    pub fn label(self) -> &'static str {
        match self {
            SweepKind::Conjecture4 => "conjecture-4",
            SweepKind::Conjecture5 => "conjecture-5",
            SweepKind::Conjecture8 => "conjecture-8",
            SweepKind::Commuting => "commuting-family",
            SweepKind::Integrality => "integrality",
            SweepKind::Intertwining => "en-intertwining",
            SweepKind::TildePlain => "tilde-matches-plain",
            SweepKind::GarsiaTesler => "subset-identity",
        }
    }

    /// Proven content: a refutation here is a bug, not a discovery.
    pub fn is_proven(self) -> bool {
        matches!(
            self,
            SweepKind::Intertwining | SweepKind::TildePlain | SweepKind::GarsiaTesler
        )
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

/// Apply a creation-operator chain for lambda starting from 1.
fn chain(
    lam: &Partition,
    n_vars: usize,
    op: &dyn Fn(&SymFunc, usize) -> Result<SymFunc>,
) -> Result<SymFunc> {
    let mut acc = SymFunc::one(n_vars, VarSet::Qt);
    // peel columns from the right of the conjugate: apply B_k for every
    // column of lambda, widest (k = column height) first
    let conj = lam.conjugate();
    for col in (1..=lam.part(1) as usize).rev() {
        let k = conj.part(col) as usize;
        acc = op(&acc, k)?;
    }
    Ok(acc)
}

fn partitions_in_range(n_vars: usize, deg_max: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for deg in 0..=deg_max {
        out.extend(Partition::all(deg, n_vars));
    }
    out
}

fn run_cases<C: Send + Sync>(
    cases: Vec<C>,
    f: impl Fn(&C) -> VerificationReport + Send + Sync,
) -> Vec<VerificationReport> {
    cases.par_iter().map(f).collect()
}

fn chain_sweep(
    kind: SweepKind,
    bounds: &SweepBounds,
    op: &(dyn Fn(&SymFunc, usize) -> Result<SymFunc> + Sync),
) -> Vec<VerificationReport> {
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for lam in partitions_in_range(n, bounds.deg_max) {
            if !lam.is_empty() {
                cases.push((n, lam));
            }
        }
    }
    run_cases(cases, |(n, lam)| {
        let case = format!("N={n} lambda={lam}");
        let built = chain(lam, *n, op);
        let expected = rodrigues(lam, *n);
        match (built, expected) {
            (Ok(a), Ok(b)) => VerificationReport::new(kind.label(), case, diff_witness(&a, &b)),
            (Err(e), _) | (_, Err(e)) => {
                VerificationReport::skipped(kind.label(), case, e.to_string())
            }
        }
    })
}

/// Run one family of checks over the given bounds. Reports come back in a
/// deterministic case order regardless of parallelism.
pub fn conjecture_sweep(kind: SweepKind, bounds: &SweepBounds) -> Vec<VerificationReport> {
    match kind {
        SweepKind::Conjecture4 => chain_sweep(kind, bounds, &|f, k| tilde_b_plus(f, k)),
        SweepKind::Conjecture5 => chain_sweep(kind, bounds, &|f, k| bar_b_plus(f, k)),
        SweepKind::Conjecture8 => sweep_conjecture8(bounds),
        SweepKind::Commuting => sweep_commuting(bounds),
        SweepKind::Integrality => sweep_integrality(bounds),
        SweepKind::Intertwining => sweep_intertwining(bounds),
        SweepKind::TildePlain => sweep_tilde_plain(bounds),
        SweepKind::GarsiaTesler => sweep_garsia_tesler(bounds),
    }
}

fn sweep_conjecture8(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::Conjecture8;
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for k in 1..=n {
            for lam in partitions_in_range(n, bounds.deg_max) {
                cases.push((n, k, lam));
            }
        }
    }
    run_cases(cases, |(n, k, lam)| {
        let case = format!("N={n} k={k} lambda={lam}");
        let body = || -> Result<Option<String>> {
            let p = macdonald_p(lam, *n)?;
            let realized = f_realized(&p, *k, *k as i64)?;
            let tilde = tilde_b_plus(&p, *k)?;
            if let Some(w) = diff_witness(&realized, &tilde) {
                return Ok(Some(format!("realized vs tilde: {w}")));
            }
            // reconstruct the combinatorial action and compare
            let beta = ExtendedPartition::from_partition(lam, *n)?;
            let mut combo = SymFunc::zero(*n, VarSet::Qt);
            for (delta, c) in f_action(&beta, *k, *k as i64)? {
                let off = delta
                    .offset_as_int()
                    .ok_or_else(|| Error::Invalid("non-integer target".into()))?;
                if off < 0 {
                    return Err(Error::Invalid("negative target offset".into()));
                }
                let parts: Vec<u32> = (1..=*n)
                    .map(|i| delta.base().part(i) + off as u32)
                    .collect();
                let full = Partition::new(parts)?;
                combo = combo.add(&macdonald_p(&full, *n)?.scale(&c));
            }
            Ok(diff_witness(&realized, &combo)
                .map(|w| format!("realized vs strip action: {w}")))
        };
        match body() {
            Ok(diff) => VerificationReport::new(kind.label(), case, diff),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}

fn sweep_commuting(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::Commuting;
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for m1 in 1..=n {
            for m2 in (m1 + 1)..=n {
                for kappa in bounds.kappa_range.0..=bounds.kappa_range.1 {
                    for lam in partitions_in_range(n, bounds.deg_max) {
                        cases.push((n, m1, m2, kappa, lam));
                    }
                }
            }
        }
    }
    run_cases(cases, |(n, m1, m2, kappa, lam)| {
        let case = format!("N={n} m={m1} n={m2} kappa={kappa} lambda={lam}");
        let body = || -> Result<Option<String>> {
            let p = macdonald_p(lam, *n)?;
            let ab = f_realized(&f_realized(&p, *m2, *kappa)?, *m1, *kappa)?;
            let ba = f_realized(&f_realized(&p, *m1, *kappa)?, *m2, *kappa)?;
            Ok(diff_witness(&ab, &ba))
        };
        match body() {
            Ok(diff) => VerificationReport::new(kind.label(), case, diff),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}

fn sweep_integrality(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::Integrality;
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for lam in partitions_in_range(n, bounds.deg_max) {
            if !lam.is_empty() {
                cases.push((n, lam));
            }
        }
    }
    run_cases(cases, |(n, lam)| {
        let case = format!("N={n} lambda={lam}");
        let body = || -> Result<Option<String>> {
            let built = chain(lam, *n, &|f, k| bar_b_plus(f, k))?;
            let bad: Vec<String> = built
                .terms()
                .filter(|(_, c)| !c.is_integral_poly())
                .map(|(mu, c)| format!("m{mu}: {c}"))
                .collect();
            Ok(if bad.is_empty() {
                None
            } else {
                Some(bad.join("; "))
            })
        };
        match body() {
            Ok(diff) => VerificationReport::new(kind.label(), case, diff),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}

/// Deterministic pseudo-random symmetric polynomial used as a generic test
/// vector; symmetry keeps the subset operators polynomial-valued.
fn random_poly(n: usize, max_deg: u32, seed: u64) -> MPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SymFunc::zero(n, VarSet::Qt);
    for deg in 0..=max_deg {
        for lam in Partition::all(deg, n) {
            let c = RatFunc::from_int(rng.gen_range(-3..=3), VarSet::Qt);
            out.add_to(lam, c).expect("length fits");
        }
    }
    out.to_x()
}

fn sweep_intertwining(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::Intertwining;
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for k in 1..=n {
            for (xi, x) in [
                (0usize, -RatFunc::t_pow(1)),
                (1, RatFunc::q_pow(1)),
                (2, RatFunc::from_int(3, VarSet::Qt)),
            ] {
                for subset in k_subsets(n, k) {
                    cases.push((n, subset, xi, x.clone()));
                }
            }
        }
    }
    run_cases(cases, |(n, subset, xi, x)| {
        let case = format!("N={n} I={subset:?} X#{xi}");
        let body = || -> Result<Option<String>> {
            let f = random_poly(*n, 2, 41 + *n as u64);
            let en = MPoly::elementary(*n, *n, VarSet::Qt);
            let lhs = macdonald_on_subset(&(&en * &f), subset, &|r| x.pow(r as i64).ok())?;
            let xq = x.try_mul(&RatFunc::q_pow(1))?;
            let rhs = &en * &macdonald_on_subset(&f, subset, &|r| xq.pow(r as i64).ok())?;
            let d = lhs.sub(&rhs);
            Ok(if d.is_zero() {
                None
            } else {
                Some(format!("{} terms differ", d.num_terms()))
            })
        };
        match body() {
            Ok(diff) => VerificationReport::new(kind.label(), case, diff),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}

fn sweep_tilde_plain(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::TildePlain;
    let mut cases = Vec::new();
    for k in 1..bounds.n_max.max(1) {
        let n = k + 1;
        if n > bounds.n_max {
            break;
        }
        for lam in partitions_in_range(n, bounds.deg_max) {
            if lam.len() <= k {
                cases.push((n, k, lam));
            }
        }
    }
    run_cases(cases, |(n, k, lam)| {
        let case = format!("N={n} k={k} lambda={lam}");
        let body = || -> Result<Option<String>> {
            let j = rodrigues(lam, *n)?;
            let a = tilde_b_plus(&j, *k)?;
            let b = b_plus(&j, *k)?;
            Ok(diff_witness(&a, &b))
        };
        match body() {
            Ok(diff) => VerificationReport::new(kind.label(), case, diff),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}

fn sweep_garsia_tesler(bounds: &SweepBounds) -> Vec<VerificationReport> {
    let kind = SweepKind::GarsiaTesler;
    let mut cases = Vec::new();
    for n in 1..=bounds.n_max {
        for k in 1..=n {
            cases.push((n, k));
        }
    }
    run_cases(cases, |(n, k)| {
        let case = format!("N={n} k={k}");
        match garsia_tesler_difference(*n, *k) {
            Ok(d) if d.is_zero() => VerificationReport::new(kind.label(), case, None),
            Ok(d) => VerificationReport::new(
                kind.label(),
                case,
                Some(format!("{} stray terms", d.num_terms())),
            ),
            Err(e) => VerificationReport::skipped(kind.label(), case, e.to_string()),
        }
    })
}
