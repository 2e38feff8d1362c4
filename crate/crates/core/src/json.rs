//! Serializable records for contexts, groups and function tables.
//!
//! Field elements are coefficient arrays, low degree first, of length 2n.
//! Group elements and table rows follow canonical enumeration order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bent::SearchOutcome;
use crate::classical::ExponentFunction;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::function::ScalarFunction;
use crate::group::{Factor, GroupSpec};
use crate::vectorial::{FieldVector, VectorFunction};

/// Version of the record layouts below.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextJson {
    pub p: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl ContextJson {
    pub fn build(&self) -> Result<Arc<FieldContext>> {
        FieldContext::new(self.p, self.n, self.modulus.as_deref()).map(Arc::new)
    }
}

impl From<&FieldContext> for ContextJson {
    fn from(ctx: &FieldContext) -> Self {
        ContextJson {
            p: ctx.p(),
            n: ctx.n(),
            modulus: Some(ctx.modulus().to_vec()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub d: u32,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub factors: Vec<FactorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextJson>,
}

impl GroupJson {
    /// Builds the group over its embedded context, or over `fallback` when
    /// the record carries none.
    pub fn build(&self, fallback: Option<Arc<FieldContext>>) -> Result<Arc<GroupSpec>> {
        let ctx = match (&self.context, fallback) {
            (Some(c), _) => c.build()?,
            (None, Some(ctx)) => ctx,
            (None, None) => return Err(Error::MissingContext),
        };
        let factors: Vec<_> = self.factors.iter().map(|f| Factor::new(f.d, f.m)).collect();
        GroupSpec::new(ctx, &factors)
    }

    /// The factor list alone, as nested inside function records.
    pub fn bare(spec: &GroupSpec) -> Self {
        GroupJson {
            factors: spec
                .factors()
                .iter()
                .map(|f| FactorJson { d: f.d, m: f.m })
                .collect(),
            context: None,
        }
    }

    pub fn with_context(spec: &GroupSpec) -> Self {
        GroupJson {
            context: Some(spec.context().as_ref().into()),
            ..Self::bare(spec)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarFunctionJson {
    pub context: ContextJson,
    pub group: GroupJson,
    pub values: Vec<Vec<u32>>,
}

impl ScalarFunctionJson {
    pub fn build(&self) -> Result<ScalarFunction> {
        let spec = self.group.build(Some(self.context.build()?))?;
        let ctx = spec.context().clone();
        let values = self
            .values
            .iter()
            .map(|c| ctx.from_coeffs(c))
            .collect::<Result<_>>()?;
        ScalarFunction::new(spec, values)
    }
}

impl From<&ScalarFunction> for ScalarFunctionJson {
    fn from(f: &ScalarFunction) -> Self {
        ScalarFunctionJson {
            context: f.context().as_ref().into(),
            group: GroupJson::bare(f.spec()),
            values: f.coeff_table(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentFunctionJson {
    pub m: u32,
    pub exponents: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupJson>,
}

impl ExponentFunctionJson {
    /// The group comes from the record, else from `fallback`; the context
    /// likewise.
    pub fn build(&self, fallback: Option<Arc<GroupSpec>>) -> Result<ExponentFunction> {
        let ctx = match (&self.context, &fallback) {
            (Some(c), _) => Some(c.build()?),
            (None, Some(spec)) => Some(spec.context().clone()),
            (None, None) => None,
        };
        let spec = match (&self.group, fallback) {
            (Some(g), _) => g.build(ctx)?,
            (None, Some(spec)) => spec,
            (None, None) => return Err(Error::MissingContext),
        };
        ExponentFunction::new(spec, self.m, self.exponents.clone())
    }
}

impl From<&ExponentFunction> for ExponentFunctionJson {
    fn from(ef: &ExponentFunction) -> Self {
        ExponentFunctionJson {
            m: ef.m(),
            exponents: ef.exponents().to_vec(),
            context: Some(ef.spec().context().as_ref().into()),
            group: Some(GroupJson::bare(ef.spec())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorFunctionJson {
    pub context: ContextJson,
    pub group: GroupJson,
    pub l: usize,
    pub values: Vec<Vec<Vec<u32>>>,
}

impl VectorFunctionJson {
    pub fn build(&self) -> Result<VectorFunction> {
        let spec = self.group.build(Some(self.context.build()?))?;
        let ctx = spec.context().clone();
        let values = self
            .values
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| ctx.from_coeffs(c))
                    .collect::<Result<Vec<FieldElement>>>()
                    .map(FieldVector)
            })
            .collect::<Result<_>>()?;
        VectorFunction::new(spec, self.l, values)
    }
}

impl From<&VectorFunction> for VectorFunctionJson {
    fn from(f: &VectorFunction) -> Self {
        VectorFunctionJson {
            context: f.context().as_ref().into(),
            group: GroupJson::bare(f.spec()),
            l: f.dim(),
            values: f.coeff_table(),
        }
    }
}

/// Result of an exhaustive search: bent functions as exponent tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJson {
    pub group: GroupJson,
    pub d: u32,
    pub candidates: u128,
    pub count: usize,
    pub bent: Vec<Vec<u32>>,
}

impl From<&SearchOutcome> for SearchJson {
    fn from(s: &SearchOutcome) -> Self {
        SearchJson {
            group: GroupJson::with_context(&s.spec),
            d: s.d,
            candidates: s.candidates,
            count: s.count(),
            bent: s.bent.clone(),
        }
    }
}
