//! Root-of-unity valued functions `f(x) = ζ_m^{e(x)}` and their ordinary,
//! complex-valued bentness, compared with bentness in GF(q).
//!
//! With `m | √q+1`, the complex group `U_m` is identified with the order-m
//! subgroup of the unit circle by `ζ_m^k ↦ u_m^k`. Complex characters use
//! the same exponent data as the field characters, with `u` replaced by
//! `exp(2πi/(√q+1))`, so both transforms are indexed identically.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;

use crate::bent::is_bent_spectral;
use crate::error::{Error, Result};
use crate::function::ScalarFunction;
use crate::group::GroupSpec;

/// Exponent table `e: G → Z_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentFunction {
    spec: Arc<GroupSpec>,
    m: u32,
    exponents: Vec<u32>,
}

impl ExponentFunction {
    pub fn new(spec: Arc<GroupSpec>, m: u32, exponents: Vec<u32>) -> Result<Self> {
        if m == 0 || !spec.context().circle_order().is_multiple_of(m as u64) {
            return Err(Error::InvalidOrder(m));
        }
        if exponents.len() != spec.order() {
            return Err(Error::TableLength {
                expected: spec.order(),
                got: exponents.len(),
            });
        }
        if let Some(&e) = exponents.iter().find(|&&e| e >= m) {
            return Err(Error::InvalidExponent {
                exponent: e,
                order: m,
            });
        }
        Ok(ExponentFunction { spec, m, exponents })
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Complex values `ζ_m^{e(x)}`.
    pub fn complex_values(&self) -> Vec<Complex64> {
        self.exponents
            .iter()
            .map(|&e| root_of_unity(e as u64, self.m as u64))
            .collect()
    }
}

fn root_of_unity(k: u64, order: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (k % order) as f64 / order as f64)
}

/// The ordinary Fourier transform `Σ_x ζ_m^{e(x)}·χ_α(x)` with complex characters.
pub fn classical_ft(ef: &ExponentFunction) -> Vec<Complex64> {
    let spec = &ef.spec;
    let circle = spec.context().circle_order();
    let values = ef.complex_values();
    (0..spec.order())
        .map(|alpha| {
            values
                .iter()
                .enumerate()
                .map(|(x, v)| v * root_of_unity(spec.character_exponent(alpha, x), circle))
                .sum()
        })
        .collect()
}

/// Default tolerance `1e-6·|G|` for [`is_classical_bent`].
pub fn default_tolerance(spec: &GroupSpec) -> f64 {
    1e-6 * spec.order() as f64
}

/// Whether `max_α ||f̃(α)|² - |G|| ≤ tol`.
pub fn is_classical_bent(ef: &ExponentFunction, tol: f64) -> bool {
    let order = ef.spec.order() as f64;
    classical_ft(ef)
        .iter()
        .all(|v| (v.norm_sqr() - order).abs() <= tol)
}

/// `ζ_m^{e(x)} ↦ u_m^{e(x)}`.
pub fn embed(ef: &ExponentFunction) -> ScalarFunction {
    ScalarFunction::from_exponents(ef.spec.clone(), ef.m, &ef.exponents)
        .expect("exponent function invariants hold")
}

/// Both verdicts for one function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub classical_bent: bool,
    pub field_bent: bool,
}

impl Comparison {
    /// Classical bentness implies bentness in GF(q).
    pub fn implication_holds(&self) -> bool {
        !self.classical_bent || self.field_bent
    }
}

pub fn compare(ef: &ExponentFunction, tol: f64) -> Comparison {
    let field_bent = is_bent_spectral(&embed(ef))
        .expect("embedded functions are circle-valued")
        .is_bent;
    Comparison {
        classical_bent: is_classical_bent(ef, tol),
        field_bent,
    }
}

/// `false` exactly when `ef` is a counterexample to
/// "classically bent ⇒ bent over GF(q)".
pub fn comparison_check(ef: &ExponentFunction, tol: f64) -> bool {
    compare(ef, tol).implication_holds()
}

/// Tally of a batch comparison.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Census {
    pub total: u64,
    pub classical_bent: u64,
    pub field_bent: u64,
    pub both: u64,
    pub counterexamples: Vec<Vec<u32>>,
}

impl Census {
    pub fn record(&mut self, ef: &ExponentFunction, c: Comparison) {
        self.total += 1;
        self.classical_bent += c.classical_bent as u64;
        self.field_bent += c.field_bent as u64;
        self.both += (c.classical_bent && c.field_bent) as u64;
        if !c.implication_holds() {
            self.counterexamples.push(ef.exponents.clone());
        }
    }
}

/// Compares every exponent table `G → Z_m`, bounded by `max_candidates`.
pub fn exhaustive_census(
    spec: &Arc<GroupSpec>,
    m: u32,
    tol: f64,
    max_candidates: u128,
) -> Result<Census> {
    let size = spec.order();
    let total = (0..size).try_fold(1u128, |acc, _| acc.checked_mul(m as u128));
    let total = match total {
        Some(t) if t <= max_candidates => t,
        other => {
            return Err(Error::BudgetExceeded {
                candidates: other.unwrap_or(u128::MAX),
                budget: max_candidates,
            })
        }
    };
    let mut census = Census::default();
    let mut exps = vec![0u32; size];
    for _ in 0..total {
        let ef = ExponentFunction::new(spec.clone(), m, exps.clone())?;
        census.record(&ef, compare(&ef, tol));
        for i in (0..size).rev() {
            exps[i] += 1;
            if exps[i] < m {
                break;
            }
            exps[i] = 0;
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn cyclic(p: u32, n: u32, d: u32) -> Arc<GroupSpec> {
        GroupSpec::cyclic(Arc::new(FieldContext::new(p, n, None).unwrap()), d).unwrap()
    }

    fn ef(g: &Arc<GroupSpec>, m: u32, e: &[u32]) -> ExponentFunction {
        ExponentFunction::new(g.clone(), m, e.to_vec()).unwrap()
    }

    #[test]
    fn classical_transform_examples() {
        let g = cyclic(2, 1, 3);
        let spectrum = classical_ft(&ef(&g, 3, &[0, 0, 0]));
        assert!((spectrum[0] - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        assert!(spectrum[1].norm() < 1e-9 && spectrum[2].norm() < 1e-9);

        for v in classical_ft(&ef(&g, 3, &[0, 1, 1])) {
            assert!((v.norm_sqr() - 3.0).abs() < 1e-9);
        }
        let g5 = cyclic(2, 2, 5);
        for v in classical_ft(&ef(&g5, 5, &[0, 1, 4, 4, 1])) {
            assert!((v.norm_sqr() - 5.0).abs() < 1e-9);
        }
    }

    #[test]
    fn classical_verdicts() {
        let g = cyclic(2, 1, 3);
        let tol = default_tolerance(&g);
        assert!(is_classical_bent(&ef(&g, 3, &[0, 1, 1]), tol));
        assert!(!is_classical_bent(&ef(&g, 3, &[0, 0, 0]), tol));
        let g5 = cyclic(2, 2, 5);
        assert!(is_classical_bent(
            &ef(&g5, 5, &[0, 1, 4, 4, 1]),
            default_tolerance(&g5)
        ));
    }

    #[test]
    fn embedding_examples() {
        let g = cyclic(2, 1, 3);
        let ctx = g.context();
        let w = ctx.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(embed(&ef(&g, 3, &[0, 1, 1])).values(), &[ctx.one(), w, w]);
        assert!(embed(&ef(&g, 3, &[0, 0, 0]))
            .values()
            .iter()
            .all(|&v| v == ctx.one()));
        let g5 = cyclic(2, 2, 5);
        let ctx = g5.context();
        let u = ctx.circle_generator();
        let u4 = ctx.pow(u, 4);
        assert_eq!(
            embed(&ef(&g5, 5, &[0, 1, 4, 4, 1])).values(),
            &[ctx.one(), u, u4, u4, u]
        );
    }

    #[test]
    fn embedding_is_a_homomorphism_commuting_with_conjugation() {
        let g = cyclic(2, 3, 9);
        let ctx = g.context();
        for m in [3u32, 9] {
            for a in 0..m {
                for b in 0..m {
                    let ea = embed(&ef(&g, m, &[a; 9])).get(0);
                    let eb = embed(&ef(&g, m, &[b; 9])).get(0);
                    let eab = embed(&ef(&g, m, &[(a + b) % m; 9])).get(0);
                    assert_eq!(ctx.mul(ea, eb), eab);
                }
                let neg = embed(&ef(&g, m, &[(m - a) % m; 9])).get(0);
                assert_eq!(neg, ctx.conjugate(embed(&ef(&g, m, &[a; 9])).get(0)));
            }
        }
    }

    #[test]
    fn invalid_orders() {
        let g = cyclic(2, 1, 3);
        assert_eq!(
            ExponentFunction::new(g.clone(), 2, vec![0; 3]).unwrap_err(),
            Error::InvalidOrder(2)
        );
        assert!(ExponentFunction::new(g.clone(), 3, vec![0; 2]).is_err());
        assert!(ExponentFunction::new(g, 3, vec![0, 3, 0]).is_err());
    }

    #[test]
    fn comparison_examples() {
        let g = cyclic(2, 1, 3);
        let tol = default_tolerance(&g);
        let c = compare(&ef(&g, 3, &[0, 1, 1]), tol);
        assert!(c.classical_bent && c.field_bent);
        assert!(comparison_check(&ef(&g, 3, &[0, 0, 0]), tol));
    }

    #[test]
    fn z3_census_sets_coincide() {
        let g = cyclic(2, 1, 3);
        let census = exhaustive_census(&g, 3, default_tolerance(&g), 1 << 20).unwrap();
        assert_eq!(census.total, 27);
        assert_eq!(census.classical_bent, 18);
        assert_eq!(census.field_bent, 18);
        assert_eq!(census.both, 18);
        assert!(census.counterexamples.is_empty());
    }

    #[test]
    fn no_counterexamples_on_larger_groups() {
        for (p, n, d, m) in [(2, 2, 5, 5), (3, 1, 4, 4), (3, 1, 4, 2), (2, 3, 9, 3)] {
            let g = cyclic(p, n, d);
            let census = exhaustive_census(&g, m, default_tolerance(&g), 1 << 20).unwrap();
            assert!(census.counterexamples.is_empty(), "{p} {n} {d} {m}");
        }
    }

    #[test]
    fn classical_transform_at_zero_of_constant_is_group_order() {
        let g = cyclic(3, 1, 4);
        let s = classical_ft(&ef(&g, 4, &[0; 4]));
        assert!((s[0].re - 4.0).abs() < 1e-9 && s[0].im.abs() < 1e-9);
    }
}
