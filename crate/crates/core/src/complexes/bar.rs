use std::collections::BTreeMap;
use std::fmt;

use super::fmt_tuple;
use crate::error::{Error, Result};
use crate::group_algebra::{AlgElt, GroupCtx, GroupElt};
use crate::modp::Scalar;

/// An element of the free module `A[G^n]`: a sparse sum `Σ a_t [t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarElt {
    degree: usize,
    terms: BTreeMap<Vec<GroupElt>, AlgElt>,
}

impl BarElt {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `1 · [tuple]`
    pub fn basis(ctx: &GroupCtx, tuple: Vec<GroupElt>) -> Self {
        let mut b = Self::zero(tuple.len());
        b.add_term(ctx, tuple, &ctx.one());
        b
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[GroupElt], &AlgElt)> {
        self.terms.iter().map(|(t, a)| (t.as_slice(), a))
    }

    pub fn coeff(&self, ctx: &GroupCtx, tuple: &[GroupElt]) -> AlgElt {
        self.terms.get(tuple).cloned().unwrap_or_else(|| ctx.zero())
    }

    /// `self += a · [tuple]`, dropping the term if it cancels.
    pub fn add_term(&mut self, ctx: &GroupCtx, tuple: Vec<GroupElt>, a: &AlgElt) {
        debug_assert_eq!(tuple.len(), self.degree);
        if a.is_zero() {
            return;
        }
        match self.terms.get_mut(&tuple) {
            Some(existing) => {
                *existing = ctx.add(existing, a).expect("same context");
                if existing.is_zero() {
                    self.terms.remove(&tuple);
                }
            }
            None => {
                self.terms.insert(tuple, a.clone());
            }
        }
    }

    /// Left multiplication by `a ∈ A`.
    pub fn scale(&self, ctx: &GroupCtx, a: &AlgElt) -> Result<Self> {
        let mut out = Self::zero(self.degree);
        for (t, c) in &self.terms {
            out.add_term(ctx, t.clone(), &ctx.mul_alg(a, c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for BarElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, a)| format!("({a}){}", fmt_tuple(t)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bar differential
/// `d_n[x_1|..|x_n] = x_1[x_2|..|x_n] + Σ_{i<n} (-1)^i [..|x_i x_{i+1}|..] + (-1)^n [x_1|..|x_{n-1}]`,
/// extended A-linearly. In degree one this is `d_1[x] = x[ ] - [ ]`.
pub fn bar_diff(ctx: &GroupCtx, b: &BarElt) -> Result<BarElt> {
    let n = b.degree;
    if n == 0 {
        return Err(Error::DegreeTooLow {
            what: "bar_diff",
            min: 1,
            degree: 0,
        });
    }
    let f = ctx.field();
    let mut out = BarElt::zero(n - 1);
    for (t, a) in &b.terms {
        out.add_term(ctx, t[1..].to_vec(), &ctx.shift(a, t[0]));
        for i in 1..n {
            let mut merged = Vec::with_capacity(n - 1);
            merged.extend_from_slice(&t[..i - 1]);
            merged.push(ctx.mul(t[i - 1], t[i]));
            merged.extend_from_slice(&t[i + 1..]);
            out.add_term(ctx, merged, &ctx.scale(a, f.sign(i as i64))?);
        }
        out.add_term(ctx, t[..n - 1].to_vec(), &ctx.scale(a, f.sign(n as i64))?);
    }
    Ok(out)
}

/// `d_0 : A[ ] → K`, the augmentation of the coefficient.
pub fn bar_augmentation(ctx: &GroupCtx, b: &BarElt) -> Result<Scalar> {
    if b.degree != 0 {
        return Err(Error::DimensionMismatch {
            expected: 0,
            actual: b.degree,
        });
    }
    Ok(b.terms
        .values()
        .fold(Scalar::ZERO, |acc, a| ctx.field().add(acc, ctx.epsilon(a))))
}

/// Differential of the periodic minimal resolution `A v_n → A v_{n-1}`:
/// multiplication by `g - 1` in odd degrees and by `T` in even degrees.
pub fn minimal_diff(ctx: &GroupCtx, n: usize, a: &AlgElt) -> Result<AlgElt> {
    match n {
        0 => Err(Error::DegreeTooLow {
            what: "minimal_diff",
            min: 1,
            degree: 0,
        }),
        n if n % 2 == 1 => ctx.mul_gm1(a),
        _ => ctx.mul_alg(&ctx.norm_t(), a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::elt_tuples;

    #[test]
    fn d2_example() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let (one, g, g2) = (ctx.elt(0), ctx.elt(1), ctx.elt(2));
        let d = bar_diff(&ctx, &BarElt::basis(&ctx, vec![g, g2])).unwrap();
        let mut expected = BarElt::zero(1);
        expected.add_term(&ctx, vec![g2], &ctx.monomial(g, Scalar::ONE));
        expected.add_term(&ctx, vec![one], &ctx.scale(&ctx.one(), ctx.field().elem(-1)).unwrap());
        expected.add_term(&ctx, vec![g], &ctx.one());
        assert_eq!(d, expected);
    }

    #[test]
    fn d1_example() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        for x in ctx.elements() {
            let d = bar_diff(&ctx, &BarElt::basis(&ctx, vec![x])).unwrap();
            let expected = ctx.sub(&ctx.monomial(x, Scalar::ONE), &ctx.one()).unwrap();
            assert_eq!(d.coeff(&ctx, &[]), expected);
        }
        assert!(bar_diff(&ctx, &BarElt::zero(0)).is_err());
    }

    #[test]
    fn bar_d_squared_vanishes_on_basis() {
        for (m, p) in [(3, 3), (9, 3)] {
            let ctx = GroupCtx::new(m, p).unwrap();
            for n in 2..=4 {
                for t in elt_tuples(m, n) {
                    let b = BarElt::basis(&ctx, t.clone());
                    let dd = bar_diff(&ctx, &bar_diff(&ctx, &b).unwrap()).unwrap();
                    assert!(dd.is_zero(), "{t:?}");
                }
            }
            for x in ctx.elements() {
                let d = bar_diff(&ctx, &BarElt::basis(&ctx, vec![x])).unwrap();
                assert_eq!(bar_augmentation(&ctx, &d).unwrap(), Scalar::ZERO);
            }
        }
    }

    #[test]
    fn minimal_examples() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        for x in ctx.elements() {
            let lhs = minimal_diff(&ctx, 1, &ctx.bracket_int(x)).unwrap();
            let rhs = ctx.sub(&ctx.monomial(x, Scalar::ONE), &ctx.one()).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(minimal_diff(&ctx, 2, &ctx.one()).unwrap(), ctx.norm_t());
        assert!(minimal_diff(&ctx, 0, &ctx.one()).is_err());
    }

    #[test]
    fn minimal_d_squared_vanishes() {
        for (m, p) in [(3, 3), (9, 3)] {
            let ctx = GroupCtx::new(m, p).unwrap();
            for n in 1..=4 {
                for x in ctx.elements() {
                    let a = ctx.monomial(x, Scalar::ONE);
                    let dd = minimal_diff(&ctx, n, &minimal_diff(&ctx, n + 1, &a).unwrap()).unwrap();
                    assert!(dd.is_zero());
                }
            }
        }
    }
}
