//! Finite Abelian groups `∏ Z_{d_i}^{m_i}` whose every `d_i` divides √q+1.
//!
//! Elements are addressed by their index in the canonical mixed-radix order:
//! the first factor is most significant and the last coordinate varies
//! fastest. Every function table in this crate is laid out in that order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldContext;

/// Upper bound on `|G|`; tables are dense and transforms are quadratic.
pub const MAX_GROUP_ORDER: usize = 1 << 20;

/// One block `Z_d^m` of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub d: u32,
    pub m: u32,
}

impl Factor {
    pub fn new(d: u32, m: u32) -> Self {
        Factor { d, m }
    }
}

/// An element, as a flat residue vector in canonical block order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u32>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// `G = ∏ Z_{d_i}^{m_i}` bound to a field context.
///
/// The decomposition is kept exactly as given: the character isomorphism
/// depends on it.
#[derive(Debug)]
pub struct GroupSpec {
    ctx: Arc<FieldContext>,
    factors: Vec<Factor>,
    // modulus of each flat coordinate
    radices: Vec<u32>,
    // (√q+1)/d for each flat coordinate
    char_weights: Vec<u64>,
    order: usize,
    order_mod_p: u32,
    order_mod_p_inv: u32,
    // coords of every element, row-major, |G| × rank
    table: Vec<u32>,
}

impl GroupSpec {
    pub fn new(ctx: Arc<FieldContext>, factors: &[Factor]) -> Result<Arc<Self>> {
        if factors.is_empty() || factors.iter().any(|f| f.m == 0 || f.d == 0) {
            return Err(Error::EmptyGroup);
        }
        let circle = ctx.circle_order();
        if let Some(bad) = factors.iter().find(|f| !circle.is_multiple_of(f.d as u64)) {
            return Err(Error::InadmissibleFactor(bad.d));
        }
        let mut order: u128 = 1;
        let mut radices = Vec::new();
        let mut char_weights = Vec::new();
        for f in factors {
            for _ in 0..f.m {
                radices.push(f.d);
                char_weights.push(circle / f.d as u64);
                order *= f.d as u128;
                if order > MAX_GROUP_ORDER as u128 {
                    return Err(Error::TooLarge {
                        size: order,
                        bound: MAX_GROUP_ORDER as u128,
                    });
                }
            }
        }
        let order = order as usize;
        let p = ctx.p();
        let order_mod_p = (order % p as usize) as u32;
        // every d_i ≡ 1 (mod p) since d_i | p^n + 1, so |G| is a unit mod p
        debug_assert_ne!(order_mod_p, 0);
        let order_mod_p_inv = mod_inverse(order_mod_p, p);

        let rank = radices.len();
        let mut table = vec![0u32; order * rank];
        for idx in 0..order {
            let mut rest = idx;
            for j in (0..rank).rev() {
                table[idx * rank + j] = (rest % radices[j] as usize) as u32;
                rest /= radices[j] as usize;
            }
        }

        Ok(Arc::new(GroupSpec {
            ctx,
            factors: factors.to_vec(),
            radices,
            char_weights,
            order,
            order_mod_p,
            order_mod_p_inv,
            table,
        }))
    }

    /// Convenience for a single cyclic factor `Z_d`.
    pub fn cyclic(ctx: Arc<FieldContext>, d: u32) -> Result<Arc<Self>> {
        Self::new(ctx, &[Factor::new(d, 1)])
    }

    /// `G × G`, with the first copy most significant. Adjacent factors with
    /// equal `d` are merged, which leaves the coordinate layout unchanged.
    pub fn square(&self) -> Result<Arc<Self>> {
        let mut factors: Vec<Factor> = Vec::new();
        for f in self.factors.iter().chain(self.factors.iter()) {
            match factors.last_mut() {
                Some(last) if last.d == f.d => last.m += f.m,
                _ => factors.push(*f),
            }
        }
        Self::new(self.ctx.clone(), &factors)
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Number of flat coordinates, `Σ m_i`.
    pub fn rank(&self) -> usize {
        self.radices.len()
    }

    pub fn radices(&self) -> &[u32] {
        &self.radices
    }

    /// `|G|`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `|G| mod p`, never zero.
    pub fn order_mod_p(&self) -> u32 {
        self.order_mod_p
    }

    /// Inverse of `|G| mod p` in GF(p).
    pub fn order_mod_p_inv(&self) -> u32 {
        self.order_mod_p_inv
    }

    /// Same coordinate layout over the same field.
    pub fn same_as(&self, other: &GroupSpec) -> bool {
        std::ptr::eq(self, other)
            || (self.radices == other.radices
                && self.ctx.p() == other.ctx.p()
                && self.ctx.n() == other.ctx.n()
                && self.ctx.modulus() == other.ctx.modulus())
    }

    pub fn element(&self, coords: &[u32]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        if let Some((j, &c)) = coords
            .iter()
            .enumerate()
            .find(|(j, &c)| c >= self.radices[*j])
        {
            return Err(Error::ShapeMismatch(format!(
                "coordinate {j} = {c} is not a residue mod {}",
                self.radices[j]
            )));
        }
        Ok(GroupElement {
            coords: coords.to_vec(),
        })
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        self.element(&x.coords).map(|_| ())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
        }
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.radices)
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn neg(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        let coords = x
            .coords
            .iter()
            .zip(&self.radices)
            .map(|(a, d)| (d - a) % d)
            .collect();
        Ok(GroupElement { coords })
    }

    /// All elements in canonical order.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        (0..self.order).map(|i| self.element_at(i)).collect()
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        GroupElement {
            coords: self.coords_at(index).to_vec(),
        }
    }

    pub(crate) fn coords_at(&self, index: usize) -> &[u32] {
        let r = self.rank();
        &self.table[index * r..(index + 1) * r]
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        self.check(x)?;
        Ok(self.index_of_coords(&x.coords))
    }

    fn index_of_coords(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.radices)
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + c as usize)
    }

    /// Index of `x + y`.
    pub fn add_index(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coords_at(x), self.coords_at(y));
        a.iter()
            .zip(b)
            .zip(&self.radices)
            .fold(0usize, |acc, ((&a, &b), &d)| {
                acc * d as usize + ((a + b) % d) as usize
            })
    }

    /// Index of `-x`.
    pub fn neg_index(&self, x: usize) -> usize {
        self.coords_at(x)
            .iter()
            .zip(&self.radices)
            .fold(0usize, |acc, (&a, &d)| {
                acc * d as usize + ((d - a) % d) as usize
            })
    }

    /// Per-factor dot products `α_i · x_i mod d_i`.
    pub fn factor_dot(&self, alpha: &GroupElement, x: &GroupElement) -> Result<Vec<u32>> {
        self.check(alpha)?;
        self.check(x)?;
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for f in &self.factors {
            let mut acc = 0u64;
            for _ in 0..f.m {
                acc += alpha.coords[j] as u64 * x.coords[j] as u64;
                j += 1;
            }
            out.push((acc % f.d as u64) as u32);
        }
        Ok(out)
    }

    /// Exponent `k` with `χ_α(x) = u^k`, for element indices.
    pub(crate) fn character_exponent(&self, alpha: usize, x: usize) -> u64 {
        let circle = self.ctx.circle_order();
        let (a, b) = (self.coords_at(alpha), self.coords_at(x));
        let mut acc = 0u64;
        for j in 0..a.len() {
            acc = (acc + self.char_weights[j] * ((a[j] * b[j]) % self.radices[j]) as u64) % circle;
        }
        acc
    }
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroupSpec {}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (p64, mut base, mut e, mut acc) = (p as u64, a as u64 % p as u64, p as u64 - 2, 1u64);
    if p == 2 {
        return a % 2;
    }
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}
