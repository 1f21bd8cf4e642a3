use rand::Rng;

use super::{decode, decode_into, encode};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgElt, GroupCtx, GroupElt};
use crate::modp::{kernel_basis, solve_linear, MatrixFp, Scalar};

/// A map `G^n → F_p`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCochain {
    degree: usize,
    values: Vec<Scalar>,
}

impl GroupCochain {
    pub fn zero(ctx: &GroupCtx, degree: usize) -> Result<Self> {
        let len = ctx.tuple_count(degree, 1)?;
        Ok(Self {
            degree,
            values: vec![Scalar::ZERO; len],
        })
    }

    pub fn from_fn<F>(ctx: &GroupCtx, degree: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[GroupElt]) -> Scalar,
    {
        let len = ctx.tuple_count(degree, 1)?;
        let mut tuple = vec![GroupElt::IDENTITY; degree];
        let values = (0..len)
            .map(|idx| {
                decode_into(ctx.order(), idx, &mut tuple);
                f(&tuple)
            })
            .collect();
        Ok(Self { degree, values })
    }

    pub fn from_values(ctx: &GroupCtx, degree: usize, values: Vec<Scalar>) -> Result<Self> {
        let len = ctx.tuple_count(degree, 1)?;
        if values.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                actual: values.len(),
            });
        }
        Ok(Self { degree, values })
    }

    /// A constant 0-cochain.
    pub fn scalar(value: Scalar) -> Self {
        Self {
            degree: 0,
            values: vec![value],
        }
    }

    pub fn random<R: Rng + ?Sized>(ctx: &GroupCtx, degree: usize, rng: &mut R) -> Result<Self> {
        let p = ctx.p();
        Self::from_fn(ctx, degree, |_| Scalar(rng.random_range(0..p)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn at(&self, ctx: &GroupCtx, tuple: &[GroupElt]) -> Scalar {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values[encode(ctx.order(), tuple)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, ctx: &GroupCtx, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| ctx.field().add(a, b))
    }

    pub fn sub(&self, ctx: &GroupCtx, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| ctx.field().sub(a, b))
    }

    pub fn scale(&self, ctx: &GroupCtx, c: Scalar) -> Self {
        Self {
            degree: self.degree,
            values: self.values.iter().map(|&v| ctx.field().mul(v, c)).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Scalar, Scalar) -> Scalar) -> Result<Self> {
        if self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                actual: other.values.len(),
            });
        }
        Ok(Self {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        })
    }
}

/// An element of `Map(G^n, F_p) ⊗ A`, stored as a map `G^n → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCochain {
    degree: usize,
    order: usize,
    // m^degree blocks of m coefficients
    values: Vec<Scalar>,
}

impl TensorCochain {
    pub fn zero(ctx: &GroupCtx, degree: usize) -> Result<Self> {
        let m = ctx.order();
        let len = ctx.tuple_count(degree, m)?;
        Ok(Self {
            degree,
            order: m,
            values: vec![Scalar::ZERO; len * m],
        })
    }

    pub(crate) fn from_raw(order: usize, degree: usize, values: Vec<Scalar>) -> Self {
        Self { degree, order, values }
    }

    pub(crate) fn raw(&self) -> &[Scalar] {
        &self.values
    }

    /// `α ⊗ a`
    pub fn pure(ctx: &GroupCtx, alpha: &GroupCochain, a: &AlgElt) -> Result<Self> {
        let mut out = Self::zero(ctx, alpha.degree)?;
        let f = ctx.field();
        let m = ctx.order();
        for (idx, &v) in alpha.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (slot, &c) in out.values[idx * m..(idx + 1) * m].iter_mut().zip(a.coeffs()) {
                *slot = f.mul(v, c);
            }
        }
        Ok(out)
    }

    pub fn random<R: Rng + ?Sized>(ctx: &GroupCtx, degree: usize, rng: &mut R) -> Result<Self> {
        let mut out = Self::zero(ctx, degree)?;
        let p = ctx.p();
        for v in out.values.iter_mut() {
            *v = Scalar(rng.random_range(0..p));
        }
        Ok(out)
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

    /// The `F_p`-valued cochain given by the coefficient of `x`.
    pub fn component(&self, x: GroupElt) -> GroupCochain {
        GroupCochain {
            degree: self.degree,
            values: self.values.iter().skip(x.exp()).step_by(self.order).copied().collect(),
        }
    }

    /// Reassembles `Σ_x components[x] ⊗ x`.
    pub fn from_components(ctx: &GroupCtx, components: &[GroupCochain]) -> Result<Self> {
        let m = ctx.order();
        if components.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                actual: components.len(),
            });
        }
        let degree = components[0].degree;
        let mut out = Self::zero(ctx, degree)?;
        for (x, comp) in components.iter().enumerate() {
            if comp.degree != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    actual: comp.degree,
                });
            }
            for (idx, &v) in comp.values.iter().enumerate() {
                out.values[idx * m + x] = v;
            }
        }
        Ok(out)
    }

    pub fn add(&self, ctx: &GroupCtx, other: &Self) -> Result<Self> {
        if self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                actual: other.values.len(),
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
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }
}

/// Evaluates the coboundary of `f` (degree n) at an (n+1)-tuple:
/// `f(x_2..) + Σ_i (-1)^i f(.., x_i x_{i+1}, ..) + (-1)^{n+1} f(x_1..x_n)`.
fn coboundary_terms(ctx: &GroupCtx, tuple: &[GroupElt], scratch: &mut Vec<GroupElt>, mut emit: impl FnMut(usize, i64)) {
    let n1 = tuple.len();
    let m = ctx.order();
    emit(encode(m, &tuple[1..]), 0);
    for i in 1..n1 {
        scratch.clear();
        scratch.extend_from_slice(&tuple[..i - 1]);
        scratch.push(ctx.mul(tuple[i - 1], tuple[i]));
        scratch.extend_from_slice(&tuple[i + 1..]);
        emit(encode(m, scratch), i as i64);
    }
    emit(encode(m, &tuple[..n1 - 1]), n1 as i64);
}

/// The group-cohomology differential `d_n`; `d_0 = 0`.
pub fn cochain_diff(ctx: &GroupCtx, c: &GroupCochain) -> Result<GroupCochain> {
    let n = c.degree;
    if n == 0 {
        return GroupCochain::zero(ctx, 1);
    }
    let f = ctx.field();
    let mut scratch = Vec::with_capacity(n);
    GroupCochain::from_fn(ctx, n + 1, |t| {
        let mut acc = Scalar::ZERO;
        coboundary_terms(ctx, t, &mut scratch, |idx, sign| {
            acc = f.mul_add(acc, f.sign(sign), c.values[idx]);
        });
        acc
    })
}

/// `d' = d ⊗ id`.
pub fn tensor_diff(ctx: &GroupCtx, c: &TensorCochain) -> Result<TensorCochain> {
    let n = c.degree;
    let mut out = TensorCochain::zero(ctx, n + 1)?;
    if n == 0 {
        return Ok(out);
    }
    let m = ctx.order();
    let f = ctx.field();
    let mut tuple = vec![GroupElt::IDENTITY; n + 1];
    let mut scratch = Vec::with_capacity(n);
    for (idx, block) in out.values.chunks_mut(m).enumerate() {
        decode_into(m, idx, &mut tuple);
        coboundary_terms(ctx, &tuple, &mut scratch, |src, sign| {
            let s = f.sign(sign);
            for (o, &v) in block.iter_mut().zip(&c.values[src * m..(src + 1) * m]) {
                *o = f.mul_add(*o, s, v);
            }
        });
    }
    Ok(out)
}

/// Matrix of `d_n : C^n → C^{n+1}` in the dense tuple bases.
pub fn differential_matrix(ctx: &GroupCtx, n: usize) -> Result<MatrixFp> {
    let m = ctx.order();
    let cols = ctx.tuple_count(n, 1)?;
    let rows = ctx.tuple_count(n + 1, 1)?;
    ctx.guard(rows as u128 * cols as u128)?;
    let mut mat = MatrixFp::zeros(rows, cols);
    if n == 0 {
        return Ok(mat);
    }
    let f = ctx.field();
    let mut scratch = Vec::with_capacity(n);
    for r in 0..rows {
        let t = decode(m, n + 1, r);
        coboundary_terms(ctx, &t, &mut scratch, |c, sign| mat.add_to(f, r, c, f.sign(sign)));
    }
    Ok(mat)
}

/// Finds `b` with `d(b) = c`, or `None` when `c` represents a nonzero class.
pub fn coboundary_witness(ctx: &GroupCtx, c: &GroupCochain) -> Result<Option<GroupCochain>> {
    if c.degree == 0 {
        return Err(Error::DegreeTooLow {
            what: "coboundary_witness",
            min: 1,
            degree: 0,
        });
    }
    if !cochain_diff(ctx, c)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let n = c.degree;
    let mat = differential_matrix(ctx, n - 1)?;
    Ok(solve_linear(ctx.field(), &mat, &c.values)?.map(|values| GroupCochain { degree: n - 1, values }))
}

/// Coefficient-wise [`coboundary_witness`] for `C ⊗ A`.
pub fn tensor_coboundary_witness(ctx: &GroupCtx, c: &TensorCochain) -> Result<Option<TensorCochain>> {
    if c.degree == 0 {
        return Err(Error::DegreeTooLow {
            what: "tensor_coboundary_witness",
            min: 1,
            degree: 0,
        });
    }
    if !tensor_diff(ctx, c)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let mat = differential_matrix(ctx, c.degree - 1)?;
    let mut parts = Vec::with_capacity(ctx.order());
    for x in ctx.elements() {
        let comp = c.component(x);
        match solve_linear(ctx.field(), &mat, &comp.values)? {
            Some(values) => parts.push(GroupCochain {
                degree: c.degree - 1,
                values,
            }),
            None => return Ok(None),
        }
    }
    TensorCochain::from_components(ctx, &parts).map(Some)
}

/// A uniformly random element of the cocycle space `ker d_n`.
pub fn random_cocycle<R: Rng + ?Sized>(ctx: &GroupCtx, n: usize, rng: &mut R) -> Result<GroupCochain> {
    let mat = differential_matrix(ctx, n)?;
    let basis = kernel_basis(ctx.field(), &mat);
    let f = ctx.field();
    let mut values = vec![Scalar::ZERO; mat.cols()];
    for v in &basis {
        let c = Scalar(rng.random_range(0..ctx.p()));
        for (acc, &x) in values.iter_mut().zip(v) {
            *acc = f.mul_add(*acc, c, x);
        }
    }
    GroupCochain::from_values(ctx, n, values)
}
