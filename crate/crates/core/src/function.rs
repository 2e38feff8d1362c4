use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::group::GroupSpec;

/// A total table `G → GF(q)` in canonical element order.
#[derive(Debug, Clone)]
pub struct ScalarFunction {
    spec: Arc<GroupSpec>,
    values: Vec<FieldElement>,
}

impl PartialEq for ScalarFunction {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same_as(&other.spec) && self.values == other.values
    }
}

impl Eq for ScalarFunction {}

impl ScalarFunction {
    pub fn new(spec: Arc<GroupSpec>, values: Vec<FieldElement>) -> Result<Self> {
        if values.len() != spec.order() {
            return Err(Error::TableLength {
                expected: spec.order(),
                got: values.len(),
            });
        }
        let q = spec.context().q();
        if let Some(bad) = values.iter().find(|v| v.packed() as u64 >= q) {
            return Err(Error::InvalidElement {
                coeffs: vec![bad.packed()],
            });
        }
        Ok(ScalarFunction { spec, values })
    }

    /// Builds the table by evaluating `f` at every element index.
    pub fn from_fn(spec: Arc<GroupSpec>, f: impl FnMut(usize) -> FieldElement) -> Self {
        let values = (0..spec.order()).map(f).collect();
        ScalarFunction { spec, values }
    }

    pub fn constant(spec: Arc<GroupSpec>, value: FieldElement) -> Self {
        Self::from_fn(spec, |_| value)
    }

    pub fn zero(spec: Arc<GroupSpec>) -> Self {
        Self::constant(spec, FieldElement::ZERO)
    }

    /// Indicator `δ_x` of the element with index `x`.
    pub fn delta(spec: Arc<GroupSpec>, x: usize) -> Self {
        Self::from_fn(spec, |i| {
            if i == x {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
    }

    /// `x ↦ u_d^{e(x)}` for an exponent table relative to the order-d circle subgroup.
    pub fn from_exponents(spec: Arc<GroupSpec>, d: u32, exponents: &[u32]) -> Result<Self> {
        let ctx = spec.context().clone();
        if d == 0 || !ctx.circle_order().is_multiple_of(d as u64) {
            return Err(Error::InvalidOrder(d));
        }
        if exponents.len() != spec.order() {
            return Err(Error::TableLength {
                expected: spec.order(),
                got: exponents.len(),
            });
        }
        if let Some(&e) = exponents.iter().find(|&&e| e >= d) {
            return Err(Error::InvalidExponent {
                exponent: e,
                order: d,
            });
        }
        let step = ctx.circle_order() / d as u64;
        let values = exponents
            .iter()
            .map(|&e| ctx.circle_power(step * e as u64))
            .collect();
        Ok(ScalarFunction { spec, values })
    }

    /// Inverse of [`from_exponents`](Self::from_exponents); `None` if some
    /// value is outside the order-d subgroup.
    pub fn to_exponents(&self, d: u32) -> Option<Vec<u32>> {
        let ctx = self.context();
        if d == 0 || !ctx.circle_order().is_multiple_of(d as u64) {
            return None;
        }
        let step = (ctx.circle_order() / d as u64) as u32;
        self.values
            .iter()
            .map(|&v| {
                ctx.circle_log(v)
                    .filter(|k| k % step == 0)
                    .map(|k| k / step)
            })
            .collect()
    }

    /// Uniformly random values in GF(q).
    pub fn random<R: Rng + ?Sized>(spec: Arc<GroupSpec>, rng: &mut R) -> Self {
        let q = spec.context().q() as u32;
        Self::from_fn(spec, |_| {
            FieldElement::from_packed_unchecked(rng.random_range(0..q))
        })
    }

    /// Uniformly random values on the unit circle.
    pub fn random_circle<R: Rng + ?Sized>(spec: Arc<GroupSpec>, rng: &mut R) -> Self {
        let ctx = spec.context().clone();
        let c = ctx.circle_order();
        Self::from_fn(spec, |_| ctx.circle_power(rng.random_range(0..c)))
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        self.spec.context()
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn into_values(self) -> Vec<FieldElement> {
        self.values
    }

    pub fn get(&self, index: usize) -> FieldElement {
        self.values[index]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub(crate) fn check_same_spec(&self, other: &ScalarFunction) -> Result<()> {
        if self.spec.same_as(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// `x ↦ f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_fn(self.spec.clone(), |i| self.values[self.spec.neg_index(i)])
    }

    /// `x ↦ f(x + c)`.
    pub fn translate(&self, c: usize) -> Self {
        Self::from_fn(self.spec.clone(), |i| {
            self.values[self.spec.add_index(i, c)]
        })
    }

    pub fn map(&self, mut f: impl FnMut(FieldElement) -> FieldElement) -> Self {
        Self::from_fn(self.spec.clone(), |i| f(self.values[i]))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let ctx = self.context().clone();
        self.map(|v| ctx.mul(c, v))
    }

    pub fn add(&self, other: &ScalarFunction) -> Result<Self> {
        self.check_same_spec(other)?;
        let ctx = self.context().clone();
        Ok(Self::from_fn(self.spec.clone(), |i| {
            ctx.add(self.values[i], other.values[i])
        }))
    }

    pub fn pointwise_mul(&self, other: &ScalarFunction) -> Result<Self> {
        self.check_same_spec(other)?;
        let ctx = self.context().clone();
        Ok(Self::from_fn(self.spec.clone(), |i| {
            ctx.mul(self.values[i], other.values[i])
        }))
    }

    pub fn conjugate(&self) -> Self {
        let ctx = self.context().clone();
        self.map(|v| ctx.conjugate(v))
    }

    /// Fails with the first index whose value has norm ≠ 1.
    pub fn check_circle_valued(&self) -> Result<()> {
        let ctx = self.context();
        match self.values.iter().position(|&v| !ctx.in_circle(v)) {
            Some(index) => Err(Error::NotCircleValued { index }),
            None => Ok(()),
        }
    }

    /// Coefficient vectors of the values, in canonical order.
    pub fn coeff_table(&self) -> Vec<Vec<u32>> {
        let ctx = self.context();
        self.values.iter().map(|&v| ctx.coeffs(v)).collect()
    }
}
