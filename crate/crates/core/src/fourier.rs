//! The GF(q)-valued Fourier transform `f̂(α) = Σ_x f(x)·χ_α(x)`.
//!
//! Transforms are direct `O(|G|²)` sums. Inversion divides by `|G| mod p`,
//! which is a unit because every admissible `d_i` is `≡ 1 (mod p)`.

use crate::characters::chi;
use crate::error::Result;
use crate::field::FieldElement;
use crate::function::ScalarFunction;

pub fn ft(f: &ScalarFunction) -> ScalarFunction {
    let spec = f.spec().clone();
    let ctx = spec.context().clone();
    ScalarFunction::from_fn(spec.clone(), |alpha| {
        f.values()
            .iter()
            .enumerate()
            .fold(FieldElement::ZERO, |acc, (x, &v)| {
                if v.is_zero() {
                    acc
                } else {
                    ctx.add(acc, ctx.mul(v, chi(&spec, alpha, x)))
                }
            })
    })
}

/// `f(x) = (|G| mod p)^{-1} Σ_α F(α)·conj(χ_α(x))`.
pub fn inverse_ft(big_f: &ScalarFunction) -> ScalarFunction {
    let spec = big_f.spec().clone();
    let ctx = spec.context().clone();
    let scale = ctx.from_int(spec.order_mod_p_inv() as i64);
    ScalarFunction::from_fn(spec.clone(), |x| {
        let sum = big_f
            .values()
            .iter()
            .enumerate()
            .fold(FieldElement::ZERO, |acc, (alpha, &v)| {
                if v.is_zero() {
                    acc
                } else {
                    ctx.add(acc, ctx.mul(v, ctx.conjugate(chi(&spec, alpha, x))))
                }
            });
        ctx.mul(scale, sum)
    })
}

/// `(f * g)(α) = Σ_x f(x)·g(α - x)`.
pub fn convolve(f: &ScalarFunction, g: &ScalarFunction) -> Result<ScalarFunction> {
    f.check_same_spec(g)?;
    let spec = f.spec().clone();
    let ctx = spec.context().clone();
    Ok(ScalarFunction::from_fn(spec.clone(), |alpha| {
        (0..spec.order()).fold(FieldElement::ZERO, |acc, x| {
            let shifted = spec.add_index(alpha, spec.neg_index(x));
            ctx.add(acc, ctx.mul(f.get(x), g.get(shifted)))
        })
    }))
}

/// Both sides of the Plancherel formula:
/// `Σ_x f(x)·conj(g(x))` and `(|G| mod p)^{-1} Σ_α f̂(α)·conj(ĝ(α))`.
pub fn plancherel_sides(
    f: &ScalarFunction,
    g: &ScalarFunction,
) -> Result<(FieldElement, FieldElement)> {
    f.check_same_spec(g)?;
    let ctx = f.context();
    let lhs = hermitian_sum(f, g);
    let rhs = ctx.mul(
        ctx.from_int(f.spec().order_mod_p_inv() as i64),
        hermitian_sum(&ft(f), &ft(g)),
    );
    Ok((lhs, rhs))
}

pub fn plancherel_check(f: &ScalarFunction, g: &ScalarFunction) -> Result<bool> {
    let (lhs, rhs) = plancherel_sides(f, g)?;
    Ok(lhs == rhs)
}

/// `Σ_x norm(f(x)) = (|G| mod p)^{-1} Σ_α norm(f̂(α))`, and for circle-valued
/// `f` additionally `Σ_α norm(f̂(α)) = (|G| mod p)²`.
pub fn parseval_check(f: &ScalarFunction) -> bool {
    let ctx = f.context();
    let spectrum = ft(f);
    let lhs = norm_sum(f);
    let spectral = norm_sum(&spectrum);
    let rhs = ctx.mul(ctx.from_int(f.spec().order_mod_p_inv() as i64), spectral);
    let circle_ok = f.check_circle_valued().is_err() || {
        let m = ctx.from_int(f.spec().order_mod_p() as i64);
        spectral == ctx.mul(m, m)
    };
    lhs == rhs && circle_ok
}

/// `Σ_x norm(f(x))`.
pub fn norm_sum(f: &ScalarFunction) -> FieldElement {
    let ctx = f.context();
    f.values()
        .iter()
        .fold(FieldElement::ZERO, |acc, &v| ctx.add(acc, ctx.norm(v)))
}

fn hermitian_sum(f: &ScalarFunction, g: &ScalarFunction) -> FieldElement {
    let ctx = f.context();
    f.values()
        .iter()
        .zip(g.values())
        .fold(FieldElement::ZERO, |acc, (&a, &b)| {
            ctx.add(acc, ctx.mul(a, ctx.conjugate(b)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character;
    use crate::field::FieldContext;
    use crate::group::{Factor, GroupSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn group(p: u32, n: u32, factors: &[(u32, u32)]) -> Arc<GroupSpec> {
        let ctx = Arc::new(FieldContext::new(p, n, None).unwrap());
        let factors: Vec<_> = factors.iter().map(|&(d, m)| Factor::new(d, m)).collect();
        GroupSpec::new(ctx, &factors).unwrap()
    }

    fn z3() -> Arc<GroupSpec> {
        group(2, 1, &[(3, 1)])
    }

    fn elems(g: &Arc<GroupSpec>, coeffs: &[&[u32]]) -> ScalarFunction {
        let ctx = g.context();
        let vals = coeffs.iter().map(|c| ctx.from_coeffs(c).unwrap()).collect();
        ScalarFunction::new(g.clone(), vals).unwrap()
    }

    // ω = [0,1], ω² = ω+1 = [1,1]
    const ONE: &[u32] = &[1, 0];
    const W: &[u32] = &[0, 1];
    const W2: &[u32] = &[1, 1];
    const ZERO: &[u32] = &[0, 0];

    #[test]
    fn ft_examples() {
        let g = group(2, 2, &[(5, 1)]);
        assert_eq!(
            ft(&ScalarFunction::delta(g.clone(), 0)),
            ScalarFunction::constant(g.clone(), FieldElement::ONE)
        );
        let g = z3();
        assert_eq!(
            ft(&elems(&g, &[ONE, ONE, ONE])),
            elems(&g, &[ONE, ZERO, ZERO])
        );
        assert_eq!(ft(&elems(&g, &[ONE, W, W])), elems(&g, &[ONE, W2, W2]));
    }

    #[test]
    fn inverse_ft_examples() {
        let g = group(2, 2, &[(5, 1)]);
        assert_eq!(
            inverse_ft(&ScalarFunction::constant(g.clone(), FieldElement::ONE)),
            ScalarFunction::delta(g.clone(), 0)
        );
        assert_eq!(
            inverse_ft(&ScalarFunction::zero(g.clone())),
            ScalarFunction::zero(g)
        );
        let g = z3();
        assert_eq!(
            inverse_ft(&elems(&g, &[ONE, ZERO, ZERO])),
            elems(&g, &[ONE, ONE, ONE])
        );
    }

    #[test]
    fn delta_transforms_to_character() {
        for g in [z3(), group(3, 1, &[(4, 1)]), group(2, 2, &[(5, 2)])] {
            for x in 0..g.order() {
                assert_eq!(ft(&ScalarFunction::delta(g.clone(), x)), character(&g, x));
            }
        }
    }

    #[test]
    fn exhaustive_round_trip_and_double_transform_on_z3() {
        let g = z3();
        let ctx = g.context().clone();
        for code in 0..64u32 {
            let f = ScalarFunction::from_fn(g.clone(), |i| {
                ctx.from_packed((code >> (2 * i)) & 3).unwrap()
            });
            assert_eq!(inverse_ft(&ft(&f)), f);
            assert_eq!(ft(&inverse_ft(&f)), f);
            let m = ctx.from_int(g.order_mod_p() as i64);
            assert_eq!(ft(&ft(&f)), f.reflect().scale(m));
        }
    }

    #[test]
    fn random_round_trips_odd_characteristic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            group(3, 1, &[(4, 1)]),
            group(5, 1, &[(3, 1), (2, 1)]),
            group(3, 2, &[(5, 1), (2, 1)]),
        ] {
            let ctx = g.context().clone();
            let m = ctx.from_int(g.order_mod_p() as i64);
            for _ in 0..30 {
                let f = ScalarFunction::random(g.clone(), &mut rng);
                assert_eq!(inverse_ft(&ft(&f)), f);
                assert_eq!(ft(&ft(&f)), f.reflect().scale(m));
            }
        }
    }

    #[test]
    fn linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = group(2, 2, &[(5, 1)]);
        let ctx = g.context().clone();
        for _ in 0..20 {
            let f = ScalarFunction::random(g.clone(), &mut rng);
            let h = ScalarFunction::random(g.clone(), &mut rng);
            let c = ctx.from_packed(11).unwrap();
            let lhs = ft(&f.scale(c).add(&h).unwrap());
            let rhs = ft(&f).scale(c).add(&ft(&h)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn convolution_examples() {
        let g = z3();
        let f = elems(&g, &[ONE, W, W2]);
        assert_eq!(
            convolve(&f, &ScalarFunction::delta(g.clone(), 0)).unwrap(),
            f
        );
        let d1 = ScalarFunction::delta(g.clone(), 1);
        assert_eq!(
            convolve(&d1, &d1).unwrap(),
            ScalarFunction::delta(g.clone(), 2)
        );
    }

    #[test]
    fn convolution_trivialises() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for g in [group(2, 2, &[(5, 1)]), group(3, 1, &[(2, 2)])] {
            for _ in 0..20 {
                let f = ScalarFunction::random(g.clone(), &mut rng);
                let h = ScalarFunction::random(g.clone(), &mut rng);
                let lhs = ft(&convolve(&f, &h).unwrap());
                let rhs = ft(&f).pointwise_mul(&ft(&h)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn plancherel_and_parseval() {
        let g = group(2, 2, &[(5, 1)]);
        let d = ScalarFunction::delta(g.clone(), 0);
        assert_eq!(
            plancherel_sides(&d, &d).unwrap(),
            (FieldElement::ONE, FieldElement::ONE)
        );
        let g3 = z3();
        let f = elems(&g3, &[ONE, W, W]);
        assert_eq!(norm_sum(&ft(&f)), FieldElement::ONE);
        assert!(parseval_check(&f));

        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let f = ScalarFunction::random(g.clone(), &mut rng);
            let h = ScalarFunction::random(g.clone(), &mut rng);
            assert!(parseval_check(&f));
            assert!(plancherel_check(&f, &h).unwrap());
            assert!(parseval_check(&ScalarFunction::random_circle(
                g.clone(),
                &mut rng
            )));
        }
    }

    #[test]
    fn mismatched_specs_are_rejected() {
        let a = ScalarFunction::zero(z3());
        let b = ScalarFunction::zero(group(2, 2, &[(5, 1)]));
        assert!(convolve(&a, &b).is_err());
        assert!(plancherel_check(&a, &b).is_err());
    }
}
