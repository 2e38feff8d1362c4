//! Circle-valued characters `χ_α(x) = ∏_i u_{d_i}^{α_i·x_i}` and the
//! GF(q)-valued inner product on functions `G → GF(q)`.
//!
//! Character values are computed from circle exponents: with `c = √q+1`,
//! `χ_α(x) = u^k` where `k = Σ_j (c/d_j)·(α_j x_j mod d_j) mod c`. The slower
//! [`character_value_by_pow`] evaluates the same product with field
//! exponentiation and exists so the two can be checked against each other.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::function::ScalarFunction;
use crate::group::{GroupElement, GroupSpec};

/// Default bound on `|G|` for exhaustive table checks.
pub const DEFAULT_ENUMERATION_BOUND: usize = 4096;

/// `χ_α(x)` for element indices.
pub fn chi(spec: &GroupSpec, alpha: usize, x: usize) -> FieldElement {
    spec.context()
        .circle_power(spec.character_exponent(alpha, x))
}

pub fn character_value(
    spec: &GroupSpec,
    alpha: &GroupElement,
    x: &GroupElement,
) -> Result<FieldElement> {
    Ok(chi(spec, spec.index_of(alpha)?, spec.index_of(x)?))
}

/// `∏_i u_{d_i}^{α_i·x_i}` evaluated with `pow` on the subgroup generators.
pub fn character_value_by_pow(
    spec: &GroupSpec,
    alpha: &GroupElement,
    x: &GroupElement,
) -> Result<FieldElement> {
    let ctx = spec.context();
    let dots = spec.factor_dot(alpha, x)?;
    let mut acc = FieldElement::ONE;
    for (f, dot) in spec.factors().iter().zip(dots) {
        let generator = ctx.circle_subgroup_generator(f.d as u64)?;
        acc = ctx.mul(acc, ctx.pow(generator, dot as u64));
    }
    Ok(acc)
}

/// The table of `χ_α` as a function on `G`.
pub fn character(spec: &std::sync::Arc<GroupSpec>, alpha: usize) -> ScalarFunction {
    ScalarFunction::from_fn(spec.clone(), |x| chi(spec, alpha, x))
}

/// Full `|G|×|G|` table, rows indexed by `α` in canonical order.
pub fn character_table(spec: &GroupSpec, bound: usize) -> Result<Vec<Vec<FieldElement>>> {
    check_bound(spec, bound)?;
    let n = spec.order();
    Ok((0..n)
        .map(|a| (0..n).map(|x| chi(spec, a, x)).collect())
        .collect())
}

/// `Σ_x χ_α(x)`, summed in the field.
pub fn character_sum(spec: &GroupSpec, alpha: &GroupElement) -> Result<FieldElement> {
    let a = spec.index_of(alpha)?;
    let ctx = spec.context();
    Ok((0..spec.order()).fold(FieldElement::ZERO, |acc, x| ctx.add(acc, chi(spec, a, x))))
}

/// `⟨f, g⟩ = Σ_x f(x)·conj(g(x))`.
pub fn inner_product(f: &ScalarFunction, g: &ScalarFunction) -> Result<FieldElement> {
    f.check_same_spec(g)?;
    let ctx = f.context();
    Ok(f.values()
        .iter()
        .zip(g.values())
        .fold(FieldElement::ZERO, |acc, (&a, &b)| {
            ctx.add(acc, ctx.mul(a, ctx.conjugate(b)))
        }))
}

/// Whether `x ↦ (α ↦ χ_α(x))` is injective, i.e. the rows of the
/// transposed character table are pairwise distinct.
pub fn evaluation_map_is_bijective(spec: &GroupSpec, bound: usize) -> Result<bool> {
    check_bound(spec, bound)?;
    let n = spec.order();
    let columns: HashSet<Vec<FieldElement>> = (0..n)
        .map(|x| (0..n).map(|a| chi(spec, a, x)).collect())
        .collect();
    Ok(columns.len() == n)
}

fn check_bound(spec: &GroupSpec, bound: usize) -> Result<()> {
    if spec.order() > bound {
        return Err(Error::TooLarge {
            size: spec.order() as u128,
            bound: bound as u128,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::group::Factor;
    use std::sync::Arc;

    fn group(p: u32, n: u32, factors: &[(u32, u32)]) -> Arc<GroupSpec> {
        let ctx = Arc::new(FieldContext::new(p, n, None).unwrap());
        let factors: Vec<_> = factors.iter().map(|&(d, m)| Factor::new(d, m)).collect();
        GroupSpec::new(ctx, &factors).unwrap()
    }

    fn small_groups() -> Vec<Arc<GroupSpec>> {
        vec![
            group(2, 1, &[(3, 1)]),
            group(2, 2, &[(5, 1)]),
            group(3, 1, &[(4, 1)]),
            group(3, 1, &[(2, 2)]),
            group(2, 2, &[(5, 2)]),
            group(2, 3, &[(3, 1), (9, 1)]),
            group(5, 1, &[(2, 1), (3, 1)]),
        ]
    }

    #[test]
    fn examples() {
        let g = group(2, 1, &[(3, 1)]);
        let ctx = g.context();
        let w = ctx.from_coeffs(&[0, 1]).unwrap();
        let one = g.element(&[1]).unwrap();
        assert_eq!(character_value(&g, &one, &one).unwrap(), w);
        for x in g.enumerate() {
            assert_eq!(
                character_value(&g, &g.zero(), &x).unwrap(),
                FieldElement::ONE
            );
        }

        let g = group(2, 2, &[(5, 1)]);
        let ctx = g.context();
        let v = character_value(&g, &g.element(&[2]).unwrap(), &g.element(&[3]).unwrap()).unwrap();
        assert_eq!(v, ctx.circle_generator());
        assert_eq!(v, ctx.pow(ctx.generator(), 3));
    }

    #[test]
    fn exponent_path_agrees_with_field_exponentiation() {
        for g in small_groups() {
            for a in g.enumerate() {
                for x in g.enumerate() {
                    assert_eq!(
                        character_value(&g, &a, &x).unwrap(),
                        character_value_by_pow(&g, &a, &x).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn characters_are_symmetric_homomorphisms_into_the_circle() {
        for g in small_groups() {
            let ctx = g.context();
            let n = g.order();
            for a in 0..n {
                assert_eq!(chi(&g, a, 0), FieldElement::ONE);
                for x in 0..n {
                    let v = chi(&g, a, x);
                    assert!(ctx.in_circle(v));
                    assert_eq!(v, chi(&g, x, a));
                    assert_eq!(chi(&g, a, g.neg_index(x)), ctx.conjugate(v));
                    for y in 0..n {
                        assert_eq!(chi(&g, a, g.add_index(x, y)), ctx.mul(v, chi(&g, a, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn character_sums() {
        let g = group(2, 1, &[(3, 1)]);
        assert_eq!(
            character_sum(&g, &g.element(&[1]).unwrap()).unwrap(),
            FieldElement::ZERO
        );
        assert_eq!(character_sum(&g, &g.zero()).unwrap(), FieldElement::ONE);
        let g = group(2, 2, &[(5, 1)]);
        assert_eq!(character_sum(&g, &g.zero()).unwrap(), FieldElement::ONE);
        for g in small_groups() {
            let ctx = g.context();
            for a in g.enumerate().into_iter().skip(1) {
                assert_eq!(character_sum(&g, &a).unwrap(), FieldElement::ZERO);
            }
            assert_eq!(
                character_sum(&g, &g.zero()).unwrap(),
                ctx.from_int(g.order() as i64)
            );
        }
    }

    #[test]
    fn orthogonality() {
        for g in small_groups() {
            let ctx = g.context();
            let chars: Vec<_> = (0..g.order()).map(|a| character(&g, a)).collect();
            let diag = ctx.from_int(g.order_mod_p() as i64);
            for (a, ca) in chars.iter().enumerate() {
                for (b, cb) in chars.iter().enumerate() {
                    let expected = if a == b { diag } else { FieldElement::ZERO };
                    assert_eq!(inner_product(ca, cb).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn inner_product_is_conjugate_symmetric() {
        let g = group(2, 2, &[(5, 1)]);
        let ctx = g.context();
        let f = ScalarFunction::from_fn(g.clone(), |i| ctx.from_packed(i as u32 * 3 % 16).unwrap());
        let h = ScalarFunction::from_fn(g.clone(), |i| ctx.from_packed(i as u32 * 7 % 16).unwrap());
        assert_eq!(
            inner_product(&f, &h).unwrap(),
            ctx.conjugate(inner_product(&h, &f).unwrap())
        );
        let other = group(2, 1, &[(3, 1)]);
        assert_eq!(
            inner_product(&f, &ScalarFunction::zero(other)).unwrap_err(),
            Error::SpecMismatch
        );
    }

    #[test]
    fn constant_one_on_z3_has_unit_self_product() {
        let g = group(2, 1, &[(3, 1)]);
        let f = ScalarFunction::constant(g, FieldElement::ONE);
        assert_eq!(inner_product(&f, &f).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn evaluation_map_and_character_injectivity() {
        for g in small_groups() {
            assert!(evaluation_map_is_bijective(&g, DEFAULT_ENUMERATION_BOUND).unwrap());
            let rows: HashSet<_> = character_table(&g, DEFAULT_ENUMERATION_BOUND)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(rows.len(), g.order());
        }
        let trivial = group(2, 1, &[(1, 1)]);
        assert!(evaluation_map_is_bijective(&trivial, 1).unwrap());
        let g = group(2, 2, &[(5, 2)]);
        assert!(matches!(
            evaluation_map_is_bijective(&g, 10),
            Err(Error::TooLarge { .. })
        ));
    }
}
