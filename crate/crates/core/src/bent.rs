//! Bent functions `f: G → S(GF(q))`, i.e. `norm(f̂(α)) = |G| mod p` for all `α`.
//!
//! Two independent tests are provided: the spectral definition, and the
//! derivative characterisation (every autocorrelation value off `0_G`
//! vanishes). The dual, the Maiorana–McFarland construction and an exhaustive
//! parallel search are built on top of them.

use std::sync::Arc;
use std::thread;

use crate::characters::chi;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::fourier::ft;
use crate::function::ScalarFunction;
use crate::group::GroupSpec;

/// Default cap on the number of candidates [`search_bent`] will enumerate.
pub const DEFAULT_MAX_CANDIDATES: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BentReport {
    pub is_bent: bool,
    /// `norm(f̂(α))` for every `α` in canonical order.
    pub spectrum_norms: Vec<FieldElement>,
    /// Indices `α` where `norm(f̂(α)) ≠ |G| mod p`.
    pub failing_points: Vec<usize>,
}

/// Bentness straight from the definition.
pub fn is_bent_spectral(f: &ScalarFunction) -> Result<BentReport> {
    f.check_circle_valued()?;
    let ctx = f.context();
    let spectrum_norms: Vec<_> = ft(f).values().iter().map(|&v| ctx.norm(v)).collect();
    Ok(report_from_norms(f, spectrum_norms))
}

/// Bentness through the derivative characterisation: `AC_f(α) = 0` for all
/// `α ≠ 0`. The spectrum norms are recovered as `ft(AC_f)`.
pub fn is_bent_autocorr(f: &ScalarFunction) -> Result<BentReport> {
    f.check_circle_valued()?;
    let ac = autocorrelation(f);
    let is_bent = ac.values().iter().skip(1).all(|v| v.is_zero());
    let report = report_from_norms(f, ft(&ac).into_values());
    debug_assert_eq!(report.is_bent, is_bent);
    Ok(BentReport { is_bent, ..report })
}

fn report_from_norms(f: &ScalarFunction, spectrum_norms: Vec<FieldElement>) -> BentReport {
    let target = f.context().from_int(f.spec().order_mod_p() as i64);
    let failing_points: Vec<usize> = spectrum_norms
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != target)
        .map(|(i, _)| i)
        .collect();
    BentReport {
        is_bent: failing_points.is_empty(),
        spectrum_norms,
        failing_points,
    }
}

/// `d_α f(x) = f(α + x)·conj(f(x))`.
pub fn derivative(f: &ScalarFunction, alpha: usize) -> ScalarFunction {
    let spec = f.spec().clone();
    let ctx = spec.context().clone();
    ScalarFunction::from_fn(spec.clone(), |x| {
        ctx.mul(f.get(spec.add_index(alpha, x)), ctx.conjugate(f.get(x)))
    })
}

/// `AC_f(α) = Σ_x d_α f(x)`.
pub fn autocorrelation(f: &ScalarFunction) -> ScalarFunction {
    let spec = f.spec().clone();
    let ctx = spec.context().clone();
    let conj: Vec<_> = f.values().iter().map(|&v| ctx.conjugate(v)).collect();
    ScalarFunction::from_fn(spec.clone(), |alpha| autocorrelation_at(f, &conj, alpha))
}

fn autocorrelation_at(f: &ScalarFunction, conj: &[FieldElement], alpha: usize) -> FieldElement {
    let spec = f.spec();
    let ctx = spec.context();
    (0..spec.order()).fold(FieldElement::ZERO, |acc, x| {
        ctx.add(acc, ctx.mul(f.get(spec.add_index(alpha, x)), conj[x]))
    })
}

fn autocorrelation_vanishes(f: &ScalarFunction) -> bool {
    let ctx = f.context();
    let conj: Vec<_> = f.values().iter().map(|&v| ctx.conjugate(v)).collect();
    (1..f.len()).all(|alpha| autocorrelation_at(f, &conj, alpha).is_zero())
}

/// Square root in GF(p), or `None` for a non-residue.
///
/// For `p ≡ 3 (mod 4)` the root is `a^{(p+1)/4}`. Otherwise Tonelli–Shanks is
/// used and the smaller of the two roots in `[0, p)` is returned.
pub fn sqrt_mod_p(a: u32, p: u32) -> Option<u32> {
    let p64 = p as u64;
    let a = a as u64 % p64;
    if p == 2 || a == 0 {
        return Some(a as u32);
    }
    if pow_mod(a, (p64 - 1) / 2, p64) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p64 + 1) / 4, p64) as u32);
    }
    // p - 1 = s·2^e with s odd
    let (mut s, mut e) = (p64 - 1, 0u32);
    while s % 2 == 0 {
        s /= 2;
        e += 1;
    }
    let z = (2..p64).find(|&z| pow_mod(z, (p64 - 1) / 2, p64) == p64 - 1)?;
    let mut m = e;
    let mut c = pow_mod(z, s, p64);
    let mut t = pow_mod(a, s, p64);
    let mut r = pow_mod(a, s.div_ceil(2), p64);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p64;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p64);
        m = i;
        c = b * b % p64;
        t = t * c % p64;
        r = r * b % p64;
    }
    Some(r.min(p64 - r) as u32)
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// The scalar `(|G| mod p)^{-1/2}` used by [`dual_bent`].
pub fn dual_scale(spec: &GroupSpec) -> Result<u32> {
    let p = spec.context().p();
    let m = spec.order_mod_p();
    let root = sqrt_mod_p(m, p).ok_or(Error::NotQuadraticResidue(m, p))?;
    Ok(if p == 2 {
        1
    } else {
        pow_mod(root as u64, p as u64 - 2, p as u64) as u32
    })
}

/// The dual `α ↦ (|G| mod p)^{-1/2}·f̂(α)` of a bent function.
pub fn dual_bent(f: &ScalarFunction) -> Result<ScalarFunction> {
    if !is_bent_spectral(f)?.is_bent {
        return Err(Error::NotBent);
    }
    let scale = dual_scale(f.spec())?;
    let ctx = f.context();
    Ok(ft(f).scale(ctx.from_int(scale as i64)))
}

/// Maiorana–McFarland: `f(x, y) = χ_x(y)·g(y)` on `G × G`.
pub fn mm_construct(g: &ScalarFunction) -> Result<ScalarFunction> {
    g.check_circle_valued()?;
    let spec = g.spec();
    let square = spec.square()?;
    let ctx = spec.context().clone();
    let n = spec.order();
    Ok(ScalarFunction::from_fn(square, |i| {
        let (x, y) = (i / n, i % n);
        ctx.mul(chi(spec, x, y), g.get(y))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_candidates: u128,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_candidates: DEFAULT_MAX_CANDIDATES,
            jobs: 1,
        }
    }
}

/// Result of an exhaustive search over `S_d`-valued functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub spec: Arc<GroupSpec>,
    pub d: u32,
    pub candidates: u128,
    /// Exponent tables `e` (with `f(x) = u_d^{e(x)}`) of the bent candidates,
    /// in enumeration order.
    pub bent: Vec<Vec<u32>>,
}

impl SearchOutcome {
    pub fn count(&self) -> usize {
        self.bent.len()
    }

    pub fn functions(&self) -> impl Iterator<Item = ScalarFunction> + '_ {
        self.bent.iter().map(|e| {
            ScalarFunction::from_exponents(self.spec.clone(), self.d, e)
                .expect("exponents were produced by the search")
        })
    }
}

/// Enumerates every `f: G → S_d(GF(q))` as an exponent table in mixed-radix
/// order (first element most significant) and keeps those passing the
/// autocorrelation test.
///
/// The index space is cut into `jobs` contiguous ranges of leading digits;
/// results are concatenated in range order, so the output does not depend
/// on the number of workers.
pub fn search_bent(spec: &Arc<GroupSpec>, d: u32, options: SearchOptions) -> Result<SearchOutcome> {
    let ctx = spec.context();
    if d == 0 || !ctx.circle_order().is_multiple_of(d as u64) {
        return Err(Error::InvalidDivisor(d as u64));
    }
    let size = spec.order();
    let candidates = (0..size).try_fold(1u128, |acc, _| acc.checked_mul(d as u128));
    let candidates = match candidates {
        Some(c) if c <= options.max_candidates => c,
        other => {
            return Err(Error::BudgetExceeded {
                candidates: other.unwrap_or(u128::MAX),
                budget: options.max_candidates,
            })
        }
    };
    let jobs = options.jobs.max(1).min(candidates as usize);
    let chunk = candidates.div_ceil(jobs as u128);

    let results: Vec<Vec<Vec<u32>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u128)
            .map(|w| {
                let start = (w * chunk).min(candidates);
                let end = ((w + 1) * chunk).min(candidates);
                scope.spawn(move || search_range(spec, d, start, end))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    Ok(SearchOutcome {
        spec: spec.clone(),
        d,
        candidates,
        bent: results.into_iter().flatten().collect(),
    })
}

fn search_range(spec: &Arc<GroupSpec>, d: u32, start: u128, end: u128) -> Vec<Vec<u32>> {
    let size = spec.order();
    let ctx = spec.context();
    let step = ctx.circle_order() / d as u64;
    let values: Vec<FieldElement> = (0..d as u64).map(|k| ctx.circle_power(k * step)).collect();

    let mut digits = vec![0u32; size];
    let mut rest = start;
    for slot in digits.iter_mut().rev() {
        *slot = (rest % d as u128) as u32;
        rest /= d as u128;
    }

    let mut found = Vec::new();
    let mut f = ScalarFunction::from_fn(spec.clone(), |i| values[digits[i] as usize]);
    for _ in start..end {
        if autocorrelation_vanishes(&f) {
            found.push(digits.clone());
        }
        // odometer increment, last position fastest
        for i in (0..size).rev() {
            digits[i] += 1;
            if digits[i] < d {
                break;
            }
            digits[i] = 0;
        }
        f = ScalarFunction::from_fn(spec.clone(), |i| values[digits[i] as usize]);
    }
    found
}
