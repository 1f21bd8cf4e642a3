//! Hochschild cochains of `A` and Gerstenhaber's pre-Lie operations on them.
//!
//! A cochain `f ∈ Hom(A^{⊗n}, A)` is stored by its values on tuples of group
//! elements; insertion of a general element of `A` into a slot is expanded
//! multilinearly over the group basis.

use rand::Rng;
use rayon::prelude::*;

use super::{decode_into, encode};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgElt, GroupCtx, GroupElt};
use crate::modp::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochCochain {
    degree: usize,
    order: usize,
    values: Vec<Scalar>,
}

impl HochCochain {
    pub fn zero(ctx: &GroupCtx, degree: usize) -> Result<Self> {
        let m = ctx.order();
        let len = ctx.tuple_count(degree, m)?;
        Ok(Self {
            degree,
            order: m,
            values: vec![Scalar::ZERO; len * m],
        })
    }

    pub fn from_fn<F>(ctx: &GroupCtx, degree: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[GroupElt]) -> AlgElt,
    {
        let mut out = Self::zero(ctx, degree)?;
        let m = ctx.order();
        let mut tuple = vec![GroupElt::IDENTITY; degree];
        for (idx, block) in out.values.chunks_mut(m).enumerate() {
            decode_into(m, idx, &mut tuple);
            block.copy_from_slice(f(&tuple).coeffs());
        }
        Ok(out)
    }

    /// A 0-cochain, i.e. an element of `A`.
    pub fn constant(ctx: &GroupCtx, a: &AlgElt) -> Self {
        Self {
            degree: 0,
            order: ctx.order(),
            values: a.coeffs().to_vec(),
        }
    }

    pub fn random<R: Rng + ?Sized>(ctx: &GroupCtx, degree: usize, rng: &mut R) -> Result<Self> {
        let mut out = Self::zero(ctx, degree)?;
        let p = ctx.p();
        for v in out.values.iter_mut() {
            *v = Scalar(rng.random_range(0..p));
        }
        Ok(out)
    }

    pub(crate) fn from_raw(order: usize, degree: usize, values: Vec<Scalar>) -> Self {
        Self { degree, order, values }
    }

    pub(crate) fn raw(&self) -> &[Scalar] {
        &self.values
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, ctx: &GroupCtx, tuple: &[GroupElt]) -> AlgElt {
        let m = self.order;
        let idx = encode(m, tuple);
        ctx.alg_from(self.values[idx * m..(idx + 1) * m].to_vec())
            .expect("block width equals the group order")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, ctx: &GroupCtx, other: &Self) -> Result<Self> {
        self.combine(ctx, other, Scalar::ONE)
    }

    pub fn sub(&self, ctx: &GroupCtx, other: &Self) -> Result<Self> {
        self.combine(ctx, other, ctx.field().elem(-1))
    }

    pub fn scale(&self, ctx: &GroupCtx, c: Scalar) -> Self {
        let f = ctx.field();
        Self {
            degree: self.degree,
            order: self.order,
            values: self.values.iter().map(|&v| f.mul(v, c)).collect(),
        }
    }

    /// `self + c · other`
    fn combine(&self, ctx: &GroupCtx, other: &Self, c: Scalar) -> Result<Self> {
        if self.degree != other.degree || self.order != other.order {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                actual: other.degree,
            });
        }
        let f = ctx.field();
        Ok(Self {
            degree: self.degree,
            order: self.order,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f.mul_add(a, c, b))
                .collect(),
        })
    }
}

/// The multiplication `μ(x ⊗ y) = xy` as a 2-cochain.
pub fn multiplication_cochain(ctx: &GroupCtx) -> HochCochain {
    HochCochain::from_fn(ctx, 2, |t| ctx.monomial(ctx.mul(t[0], t[1]), Scalar::ONE))
        .expect("m^3 entries fit any sensible guard")
}

/// The identity map of `A` as a 1-cochain.
pub fn identity_cochain(ctx: &GroupCtx) -> HochCochain {
    HochCochain::from_fn(ctx, 1, |t| ctx.monomial(t[0], Scalar::ONE)).expect("m^2 entries")
}

/// `f ∘_i h`: substitute `h(x_i ⊗ .. ⊗ x_{i+k-1})` into slot `i` (1-based) of `f`.
/// For a 0-cochain `h = a`, the element `a` itself is inserted.
pub fn hoch_circle_i(ctx: &GroupCtx, f: &HochCochain, h: &HochCochain, slot: usize) -> Result<HochCochain> {
    let n = f.degree;
    let k = h.degree;
    if slot == 0 || slot > n {
        return Err(Error::SlotOutOfRange { slot, degree: n });
    }
    let m = ctx.order();
    let mut out = HochCochain::zero(ctx, n + k - 1)?;
    let field = ctx.field();
    let below = m.pow(slot as u32 - 1);
    let inner = m.pow(k as u32);
    out.values.par_chunks_mut(m).enumerate().for_each(|(idx, block)| {
        let low = idx % below;
        let h_idx = (idx / below) % inner;
        let high = idx / (below * inner);
        let h_val = &h.values[h_idx * m..(h_idx + 1) * m];
        for (z, &c) in h_val.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f_idx = low + below * (z + m * high);
            let f_val = &f.values[f_idx * m..(f_idx + 1) * m];
            for (o, &v) in block.iter_mut().zip(f_val) {
                *o = field.mul_add(*o, c, v);
            }
        }
    });
    Ok(out)
}

/// `f ∘ h = Σ_i (-1)^{(i-1)(k-1)} f ∘_i h`; zero when `f` has degree 0.
pub fn hoch_circle(ctx: &GroupCtx, f: &HochCochain, h: &HochCochain) -> Result<HochCochain> {
    let n = f.degree;
    let k = h.degree;
    if n == 0 {
        return HochCochain::zero(ctx, k.saturating_sub(1));
    }
    let field = ctx.field();
    let mut acc = HochCochain::zero(ctx, n + k - 1)?;
    for i in 1..=n {
        let term = hoch_circle_i(ctx, f, h, i)?;
        let sign = field.sign((i as i64 - 1) * (k as i64 - 1));
        acc = acc.combine(ctx, &term, sign)?;
    }
    Ok(acc)
}

/// Gerstenhaber bracket `[f, h] = f ∘ h - (-1)^{(n-1)(k-1)} h ∘ f`.
/// Two 0-cochains bracket to the zero 0-cochain.
pub fn hoch_bracket(ctx: &GroupCtx, f: &HochCochain, h: &HochCochain) -> Result<HochCochain> {
    let n = f.degree as i64;
    let k = h.degree as i64;
    if n == 0 && k == 0 {
        return HochCochain::zero(ctx, 0);
    }
    let field = ctx.field();
    let fh = hoch_circle(ctx, f, h)?;
    let hf = hoch_circle(ctx, h, f)?;
    fh.combine(ctx, &hf, field.neg(field.sign((n - 1) * (k - 1))))
}

/// Hochschild differential `δf = (-1)^{n-1} [μ, f]`.
pub fn hoch_diff(ctx: &GroupCtx, f: &HochCochain) -> Result<HochCochain> {
    let mu = multiplication_cochain(ctx);
    let b = hoch_bracket(ctx, &mu, f)?;
    Ok(b.scale(ctx, ctx.field().sign(f.degree as i64 - 1)))
}
