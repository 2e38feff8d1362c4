//! Functions `G → GF(q)^l` with the Hermitian product
//! `⟨x, y⟩ = Σ_i x_i·conj(y_i)`.
//!
//! The multidimensional transform is `f̂(α) = Σ_x χ_α(x)·f(x)`, computed
//! directly on vectors; it agrees with the scalar transform of each
//! coordinate function. The dot product takes the place of multiplication in
//! the convolution, the derivative and the autocorrelation.

use std::sync::Arc;

use rand::Rng;

use crate::bent::BentReport;
use crate::characters::chi;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::fourier::ft;
use crate::function::ScalarFunction;
use crate::group::GroupSpec;

/// A dense vector of `l` field elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector(pub Vec<FieldElement>);

impl FieldVector {
    pub fn zero(l: usize) -> Self {
        FieldVector(vec![FieldElement::ZERO; l])
    }

    /// The canonical basis vector `e_i`.
    pub fn basis(l: usize, i: usize) -> Result<Self> {
        if i >= l {
            return Err(Error::IndexOutOfRange { index: i, len: l });
        }
        let mut v = Self::zero(l);
        v.0[i] = FieldElement::ONE;
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.0
    }

    fn add_scaled(&mut self, ctx: &FieldContext, c: FieldElement, other: &FieldVector) {
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a = ctx.add(*a, ctx.mul(c, b));
        }
    }
}

pub fn hermitian_dot(ctx: &FieldContext, x: &FieldVector, y: &FieldVector) -> Result<FieldElement> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    Ok(x.0
        .iter()
        .zip(&y.0)
        .fold(FieldElement::ZERO, |acc, (&a, &b)| {
            ctx.add(acc, ctx.mul(a, ctx.conjugate(b)))
        }))
}

/// `⟨x, x⟩`, an element of GF(√q).
pub fn norm_l(ctx: &FieldContext, x: &FieldVector) -> FieldElement {
    x.0.iter()
        .fold(FieldElement::ZERO, |acc, &a| ctx.add(acc, ctx.norm(a)))
}

pub fn on_hypersphere(ctx: &FieldContext, x: &FieldVector) -> bool {
    norm_l(ctx, x) == FieldElement::ONE
}

/// A total table `G → GF(q)^l`.
#[derive(Debug, Clone)]
pub struct VectorFunction {
    spec: Arc<GroupSpec>,
    l: usize,
    values: Vec<FieldVector>,
}

impl PartialEq for VectorFunction {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same_as(&other.spec) && self.l == other.l && self.values == other.values
    }
}

impl Eq for VectorFunction {}

impl VectorFunction {
    pub fn new(spec: Arc<GroupSpec>, l: usize, values: Vec<FieldVector>) -> Result<Self> {
        if l == 0 {
            return Err(Error::DimensionMismatch(0, 1));
        }
        if values.len() != spec.order() {
            return Err(Error::TableLength {
                expected: spec.order(),
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| v.dim() != l) {
            return Err(Error::DimensionMismatch(v.dim(), l));
        }
        let q = spec.context().q();
        if let Some(bad) = values
            .iter()
            .flat_map(|v| &v.0)
            .find(|e| e.packed() as u64 >= q)
        {
            return Err(Error::InvalidElement {
                coeffs: vec![bad.packed()],
            });
        }
        Ok(VectorFunction { spec, l, values })
    }

    fn from_fn(spec: Arc<GroupSpec>, l: usize, f: impl FnMut(usize) -> FieldVector) -> Self {
        let values = (0..spec.order()).map(f).collect();
        VectorFunction { spec, l, values }
    }

    /// Reassembles `f(x) = Σ_e f_e(x)·e` from coordinate functions.
    pub fn from_coordinates(coords: &[ScalarFunction]) -> Result<Self> {
        let first = coords.first().ok_or(Error::DimensionMismatch(0, 1))?;
        for c in coords {
            first.check_same_spec(c)?;
        }
        let spec = first.spec().clone();
        let ctx = spec.context().clone();
        let l = coords.len();
        let basis: Vec<_> = (0..l)
            .map(|e| FieldVector::basis(l, e))
            .collect::<Result<_>>()?;
        Ok(Self::from_fn(spec, l, |x| {
            let mut v = FieldVector::zero(l);
            for (c, e) in coords.iter().zip(&basis) {
                v.add_scaled(&ctx, c.get(x), e);
            }
            v
        }))
    }

    /// `x ↦ (f(x), 0, …, 0)` in dimension `l`.
    pub fn zero_pad(f: &ScalarFunction, l: usize) -> Result<Self> {
        let mut coords = vec![f.clone()];
        coords.resize(l.max(1), ScalarFunction::zero(f.spec().clone()));
        Self::from_coordinates(&coords)
    }

    pub fn random<R: Rng + ?Sized>(spec: Arc<GroupSpec>, l: usize, rng: &mut R) -> Self {
        let coords: Vec<_> = (0..l)
            .map(|_| ScalarFunction::random(spec.clone(), rng))
            .collect();
        Self::from_coordinates(&coords).expect("coordinates share one group")
    }

    /// Random values on the unit hypersphere, by rejection sampling.
    pub fn random_hypersphere<R: Rng + ?Sized>(
        spec: Arc<GroupSpec>,
        l: usize,
        rng: &mut R,
    ) -> Self {
        let ctx = spec.context().clone();
        let q = ctx.q() as u32;
        Self::from_fn(spec, l, |_| loop {
            let v = FieldVector(
                (0..l)
                    .map(|_| ctx.from_packed(rng.random_range(0..q)).expect("below q"))
                    .collect(),
            );
            if on_hypersphere(&ctx, &v) {
                break v;
            }
        })
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        self.spec.context()
    }

    pub fn dim(&self) -> usize {
        self.l
    }

    pub fn values(&self) -> &[FieldVector] {
        &self.values
    }

    pub fn get(&self, index: usize) -> &FieldVector {
        &self.values[index]
    }

    fn check_compatible(&self, other: &VectorFunction) -> Result<()> {
        if !self.spec.same_as(&other.spec) {
            return Err(Error::SpecMismatch);
        }
        if self.l != other.l {
            return Err(Error::DimensionMismatch(self.l, other.l));
        }
        Ok(())
    }

    /// `f_e(x) = ⟨f(x), e⟩`.
    pub fn coordinate_function(&self, e: usize) -> Result<ScalarFunction> {
        let basis = FieldVector::basis(self.l, e)?;
        let ctx = self.context().clone();
        Ok(ScalarFunction::from_fn(self.spec.clone(), |x| {
            hermitian_dot(&ctx, &self.values[x], &basis).expect("uniform dimension")
        }))
    }

    /// Fails with the first index whose value is off the unit hypersphere.
    pub fn check_hypersphere_valued(&self) -> Result<()> {
        let ctx = self.context();
        match self.values.iter().position(|v| !on_hypersphere(ctx, v)) {
            Some(index) => Err(Error::NotOnHypersphere { index }),
            None => Ok(()),
        }
    }

    pub fn coeff_table(&self) -> Vec<Vec<Vec<u32>>> {
        let ctx = self.context();
        self.values
            .iter()
            .map(|v| v.0.iter().map(|&e| ctx.coeffs(e)).collect())
            .collect()
    }
}

pub fn md_ft(f: &VectorFunction) -> VectorFunction {
    let spec = f.spec.clone();
    let ctx = spec.context().clone();
    VectorFunction::from_fn(spec.clone(), f.l, |alpha| {
        let mut acc = FieldVector::zero(f.l);
        for (x, v) in f.values.iter().enumerate() {
            acc.add_scaled(&ctx, chi(&spec, alpha, x), v);
        }
        acc
    })
}

/// `f(α) = (|G| mod p)^{-1} Σ_x conj(χ_x(α))·F(x)`.
pub fn md_inverse_ft(big_f: &VectorFunction) -> VectorFunction {
    let spec = big_f.spec.clone();
    let ctx = spec.context().clone();
    let scale = ctx.from_int(spec.order_mod_p_inv() as i64);
    VectorFunction::from_fn(spec.clone(), big_f.l, |alpha| {
        let mut acc = FieldVector::zero(big_f.l);
        for (x, v) in big_f.values.iter().enumerate() {
            acc.add_scaled(&ctx, ctx.mul(scale, ctx.conjugate(chi(&spec, x, alpha))), v);
        }
        acc
    })
}

/// `(f * g)(α) = Σ_x ⟨g(α + x), f(x)⟩`.
pub fn vector_convolve(f: &VectorFunction, g: &VectorFunction) -> Result<ScalarFunction> {
    f.check_compatible(g)?;
    let spec = f.spec.clone();
    let ctx = spec.context().clone();
    Ok(ScalarFunction::from_fn(spec.clone(), |alpha| {
        (0..spec.order()).fold(FieldElement::ZERO, |acc, x| {
            let dot = hermitian_dot(&ctx, &g.values[spec.add_index(alpha, x)], &f.values[x])
                .expect("same dimension");
            ctx.add(acc, dot)
        })
    }))
}

/// `Σ_x norm_l(f(x))` and `(|G| mod p)^{-1} Σ_α norm_l(f̂(α))`.
pub fn md_parseval_sides(f: &VectorFunction) -> (FieldElement, FieldElement) {
    let ctx = f.context();
    let lhs = norm_l_sum(f);
    let rhs = ctx.mul(
        ctx.from_int(f.spec.order_mod_p_inv() as i64),
        norm_l_sum(&md_ft(f)),
    );
    (lhs, rhs)
}

/// Multidimensional Parseval, plus `Σ_α norm_l(f̂(α)) = (|G| mod p)²` for
/// hypersphere-valued `f`.
pub fn md_parseval_check(f: &VectorFunction) -> bool {
    let ctx = f.context();
    let (lhs, rhs) = md_parseval_sides(f);
    let sphere_ok = f.check_hypersphere_valued().is_err() || {
        let m = ctx.from_int(f.spec.order_mod_p() as i64);
        norm_l_sum(&md_ft(f)) == ctx.mul(m, m)
    };
    lhs == rhs && sphere_ok
}

fn norm_l_sum(f: &VectorFunction) -> FieldElement {
    let ctx = f.context();
    f.values
        .iter()
        .fold(FieldElement::ZERO, |acc, v| ctx.add(acc, norm_l(ctx, v)))
}

/// `d_α f(x) = ⟨f(α + x), f(x)⟩`.
pub fn md_derivative(f: &VectorFunction, alpha: usize) -> ScalarFunction {
    let spec = f.spec.clone();
    let ctx = spec.context().clone();
    ScalarFunction::from_fn(spec.clone(), |x| {
        hermitian_dot(&ctx, &f.values[spec.add_index(alpha, x)], &f.values[x])
            .expect("uniform dimension")
    })
}

/// `AC_f(α) = ft(d_α f)(0) = Σ_x d_α f(x)`.
pub fn md_autocorrelation(f: &VectorFunction) -> ScalarFunction {
    let spec = f.spec.clone();
    let ctx = spec.context().clone();
    ScalarFunction::from_fn(spec.clone(), |alpha| {
        md_derivative(f, alpha)
            .values()
            .iter()
            .fold(FieldElement::ZERO, |acc, &v| ctx.add(acc, v))
    })
}

/// Multidimensional bentness from the definition: `norm_l(f̂(α)) = |G| mod p`.
pub fn is_md_bent(f: &VectorFunction) -> Result<BentReport> {
    f.check_hypersphere_valued()?;
    let ctx = f.context();
    let norms = md_ft(f).values.iter().map(|v| norm_l(ctx, v)).collect();
    Ok(report(f, norms))
}

/// Multidimensional bentness through derivatives: `ft(d_α f)(0) = 0` for all
/// `α ≠ 0`. Spectrum norms are recovered as `ft(AC_f)`.
pub fn is_md_bent_derivative(f: &VectorFunction) -> Result<BentReport> {
    f.check_hypersphere_valued()?;
    let ac = md_autocorrelation(f);
    let is_bent = ac.values().iter().skip(1).all(|v| v.is_zero());
    let r = report(f, ft(&ac).into_values());
    debug_assert_eq!(r.is_bent, is_bent);
    Ok(BentReport { is_bent, ..r })
}

fn report(f: &VectorFunction, spectrum_norms: Vec<FieldElement>) -> BentReport {
    let target = f.context().from_int(f.spec.order_mod_p() as i64);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bent::{is_bent_spectral, mm_construct};
    use crate::group::Factor;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn group(p: u32, n: u32, factors: &[(u32, u32)]) -> Arc<GroupSpec> {
        let ctx = Arc::new(FieldContext::new(p, n, None).unwrap());
        let factors: Vec<_> = factors.iter().map(|&(d, m)| Factor::new(d, m)).collect();
        GroupSpec::new(ctx, &factors).unwrap()
    }

    fn z3() -> Arc<GroupSpec> {
        group(2, 1, &[(3, 1)])
    }

    fn w(ctx: &FieldContext) -> FieldElement {
        ctx.from_coeffs(&[0, 1]).unwrap()
    }

    fn bent_z3() -> ScalarFunction {
        ScalarFunction::from_exponents(z3(), 3, &[0, 1, 1]).unwrap()
    }

    #[test]
    fn dot_product_examples() {
        let g = z3();
        let ctx = g.context();
        let x = FieldVector(vec![ctx.one(), w(ctx)]);
        let y = FieldVector(vec![w(ctx), ctx.one()]);
        assert_eq!(hermitian_dot(ctx, &x, &y).unwrap(), ctx.one());
        let ww = FieldVector(vec![w(ctx), w(ctx)]);
        assert_eq!(norm_l(ctx, &ww), FieldElement::ZERO);
        assert!(!on_hypersphere(ctx, &ww));
        for i in 0..3 {
            for j in 0..3 {
                let dot = hermitian_dot(
                    ctx,
                    &FieldVector::basis(3, i).unwrap(),
                    &FieldVector::basis(3, j).unwrap(),
                );
                assert_eq!(dot.unwrap(), if i == j { ctx.one() } else { ctx.zero() });
            }
        }
        assert_eq!(
            hermitian_dot(ctx, &x, &FieldVector::zero(3)).unwrap_err(),
            Error::DimensionMismatch(2, 3)
        );
    }

    #[test]
    fn dot_product_properties() {
        let ctx = FieldContext::new(3, 1, None).unwrap();
        let all: Vec<_> = ctx.elements().collect();
        let vecs: Vec<FieldVector> = all
            .iter()
            .flat_map(|&a| all.iter().map(move |&b| FieldVector(vec![a, b])))
            .collect();
        for x in &vecs {
            let nx = norm_l(&ctx, x);
            assert_eq!(ctx.pow(nx, ctx.sqrt_q()), nx);
            for y in vecs.iter().step_by(5) {
                let xy = hermitian_dot(&ctx, x, y).unwrap();
                assert_eq!(xy, ctx.conjugate(hermitian_dot(&ctx, y, x).unwrap()));
                let c = all[5];
                let cx = FieldVector(x.0.iter().map(|&v| ctx.mul(c, v)).collect());
                assert_eq!(hermitian_dot(&ctx, &cx, y).unwrap(), ctx.mul(c, xy));
            }
            let orthogonal_to_basis = (0..2).all(|i| {
                hermitian_dot(&ctx, x, &FieldVector::basis(2, i).unwrap())
                    .unwrap()
                    .is_zero()
            });
            assert_eq!(orthogonal_to_basis, x.0.iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn md_ft_collapses_to_scalar_ft_at_dimension_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = group(2, 2, &[(5, 1)]);
        for _ in 0..20 {
            let f = ScalarFunction::random(g.clone(), &mut rng);
            let vf = VectorFunction::zero_pad(&f, 1).unwrap();
            assert_eq!(md_ft(&vf).coordinate_function(0).unwrap(), ft(&f));
        }
    }

    #[test]
    fn md_ft_is_coordinatewise_and_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (g, l) in [
            (z3(), 2),
            (group(3, 1, &[(4, 1)]), 3),
            (group(2, 2, &[(5, 1)]), 2),
        ] {
            let ctx = g.context().clone();
            let m = ctx.from_int(g.order_mod_p() as i64);
            for _ in 0..10 {
                let f = VectorFunction::random(g.clone(), l, &mut rng);
                let spectrum = md_ft(&f);
                let coords: Vec<_> = (0..l)
                    .map(|e| ft(&f.coordinate_function(e).unwrap()))
                    .collect();
                assert_eq!(spectrum, VectorFunction::from_coordinates(&coords).unwrap());
                assert_eq!(md_inverse_ft(&spectrum), f);
                assert_eq!(md_ft(&md_inverse_ft(&f)), f);
                let double = md_ft(&spectrum);
                for a in 0..g.order() {
                    let expected: Vec<_> = f
                        .get(g.neg_index(a))
                        .0
                        .iter()
                        .map(|&v| ctx.mul(m, v))
                        .collect();
                    assert_eq!(double.get(a).0, expected);
                }
            }
        }
    }

    #[test]
    fn coordinate_functions() {
        let f = VectorFunction::zero_pad(&bent_z3(), 2).unwrap();
        assert_eq!(f.coordinate_function(0).unwrap(), bent_z3());
        assert_eq!(
            f.coordinate_function(1).unwrap(),
            ScalarFunction::zero(z3())
        );
        assert_eq!(
            f.coordinate_function(2).unwrap_err(),
            Error::IndexOutOfRange { index: 2, len: 2 }
        );
        let spectrum = md_ft(&f);
        assert_eq!(
            spectrum,
            VectorFunction::zero_pad(&ft(&bent_z3()), 2).unwrap()
        );

        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = VectorFunction::random(group(2, 2, &[(5, 1)]), 3, &mut rng);
        let coords: Vec<_> = (0..3).map(|e| f.coordinate_function(e).unwrap()).collect();
        assert_eq!(VectorFunction::from_coordinates(&coords).unwrap(), f);
        let zero = VectorFunction::from_coordinates(&vec![ScalarFunction::zero(z3()); 2]).unwrap();
        assert_eq!(md_ft(&zero), zero);
    }

    #[test]
    fn convolution_trivialises_and_parseval_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (g, l) in [
            (z3(), 2),
            (group(3, 1, &[(2, 2)]), 2),
            (group(2, 2, &[(5, 1)]), 3),
        ] {
            let ctx = g.context().clone();
            for _ in 0..20 {
                let f = VectorFunction::random(g.clone(), l, &mut rng);
                let h = VectorFunction::random(g.clone(), l, &mut rng);
                let conv = vector_convolve(&f, &h).unwrap();
                let (sf, sh) = (md_ft(&f), md_ft(&h));
                let expected = ScalarFunction::from_fn(g.clone(), |a| {
                    hermitian_dot(&ctx, sh.get(a), sf.get(a)).unwrap()
                });
                assert_eq!(ft(&conv), expected);
                let self_conv = vector_convolve(&f, &f).unwrap();
                assert_eq!(self_conv.get(0), norm_l_sum(&f));
                assert!(md_parseval_check(&f));
            }
            let sphere = VectorFunction::random_hypersphere(g.clone(), l, &mut rng);
            assert!(md_parseval_check(&sphere));
        }
    }

    #[test]
    fn md_bent_examples() {
        let f = VectorFunction::zero_pad(&bent_z3(), 2).unwrap();
        assert!(is_md_bent(&f).unwrap().is_bent);
        assert!(is_md_bent_derivative(&f).unwrap().is_bent);
        let ones = VectorFunction::zero_pad(&ScalarFunction::constant(z3(), FieldElement::ONE), 2)
            .unwrap();
        assert!(!is_md_bent(&ones).unwrap().is_bent);
        assert_eq!(
            md_autocorrelation(&ones),
            ScalarFunction::constant(z3(), FieldElement::ONE)
        );
        let off = VectorFunction::zero_pad(&ScalarFunction::delta(z3(), 0), 2).unwrap();
        assert_eq!(
            is_md_bent(&off).unwrap_err(),
            Error::NotOnHypersphere { index: 1 }
        );
    }

    #[test]
    fn md_bent_matches_scalar_bent_at_dimension_one() {
        let g = z3();
        for code in 0..27u32 {
            let e = [code / 9, code / 3 % 3, code % 3];
            let f = ScalarFunction::from_exponents(g.clone(), 3, &e).unwrap();
            let vf = VectorFunction::zero_pad(&f, 1).unwrap();
            let scalar = is_bent_spectral(&f).unwrap().is_bent;
            assert_eq!(is_md_bent(&vf).unwrap().is_bent, scalar);
            assert_eq!(is_md_bent_derivative(&vf).unwrap().is_bent, scalar);
        }
    }

    #[test]
    fn md_spectral_and_derivative_agree_in_dimension_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut seen_bent = 0;
        for g in [z3(), group(3, 1, &[(4, 1)]), group(2, 2, &[(5, 1)])] {
            for _ in 0..60 {
                let f = VectorFunction::random_hypersphere(g.clone(), 2, &mut rng);
                let a = is_md_bent(&f).unwrap();
                let b = is_md_bent_derivative(&f).unwrap();
                assert_eq!(a, b);
                seen_bent += a.is_bent as usize;
            }
            // zero-padded Maiorana–McFarland outputs are bent; rotate coordinates
            let mm = mm_construct(&ScalarFunction::random_circle(g.clone(), &mut rng)).unwrap();
            let vf =
                VectorFunction::from_coordinates(&[ScalarFunction::zero(mm.spec().clone()), mm])
                    .unwrap();
            assert!(is_md_bent(&vf).unwrap().is_bent);
            assert!(is_md_bent_derivative(&vf).unwrap().is_bent);
        }
        let _ = seen_bent;
    }

    #[test]
    fn support_at_zero_iff_constant_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = group(2, 2, &[(5, 1)]);
        for _ in 0..20 {
            let v = VectorFunction::random(g.clone(), 2, &mut rng);
            let supported = VectorFunction::from_fn(g.clone(), 2, |x| {
                if x == 0 {
                    v.get(0).clone()
                } else {
                    FieldVector::zero(2)
                }
            });
            let spectrum = md_ft(&supported);
            assert!(spectrum.values().iter().all(|s| s == v.get(0)));
            // converse direction through inversion
            let constant = VectorFunction::from_fn(g.clone(), 2, |_| v.get(0).clone());
            assert_eq!(md_inverse_ft(&constant), supported);
            // a random function is generically not supported at 0 and its transform not constant
            let spec_v = md_ft(&v);
            let is_constant = spec_v.values().iter().all(|s| s == v.get(0));
            let is_supported = v
                .values()
                .iter()
                .skip(1)
                .all(|x| x.0.iter().all(|e| e.is_zero()));
            assert_eq!(is_constant, is_supported);
        }
    }
}
