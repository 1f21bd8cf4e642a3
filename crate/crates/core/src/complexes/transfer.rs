//! The mutually inverse cochain isomorphisms between the Hochschild complex of
//! `A = F_p[G]` and `C ⊗ A`. For a tuple `t = (x_1..x_n)` with product
//! `π = x_1⋯x_n`:
//!
//! * `φ(f)(t)` has coefficient `λ_{π x}(f(t))` at `x`,
//! * `ψ(α ⊗ x)(t) = α(t) · π x`.
//!
//! Both are re-indexings of each value block by a rotation of `π`.

use rand::Rng;

use super::decode_into;
use super::{hoch_diff, tensor_diff, HochCochain, TensorCochain};
use crate::error::Result;
use crate::group_algebra::{GroupCtx, GroupElt};
use crate::report::Report;

fn tuple_products(ctx: &GroupCtx, degree: usize, count: usize) -> impl Iterator<Item = usize> + '_ {
    let m = ctx.order();
    let mut tuple = vec![GroupElt::IDENTITY; degree];
    (0..count).map(move |idx| {
        decode_into(m, idx, &mut tuple);
        tuple.iter().map(|x| x.exp()).sum::<usize>() % m
    })
}

pub fn phi(ctx: &GroupCtx, f: &HochCochain) -> TensorCochain {
    let m = ctx.order();
    let src = f.raw();
    let mut out = vec![src[0]; src.len()];
    for (idx, prod) in tuple_products(ctx, f.degree(), src.len() / m).enumerate() {
        let block = &src[idx * m..(idx + 1) * m];
        for x in 0..m {
            out[idx * m + x] = block[(prod + x) % m];
        }
    }
    TensorCochain::from_raw(m, f.degree(), out)
}

pub fn psi(ctx: &GroupCtx, c: &TensorCochain) -> HochCochain {
    let m = ctx.order();
    let src = c.raw();
    let mut out = vec![src[0]; src.len()];
    for (idx, prod) in tuple_products(ctx, c.degree(), src.len() / m).enumerate() {
        let block = &src[idx * m..(idx + 1) * m];
        for x in 0..m {
            out[idx * m + (prod + x) % m] = block[x];
        }
    }
    HochCochain::from_raw(m, c.degree(), out)
}

/// `φψ = id`, `ψφ = id` and `ψ d' = δ ψ` on random cochains of degree
/// `<= max_n`.
pub fn verify_transfer<R: Rng + ?Sized>(ctx: &GroupCtx, max_n: usize, trials: usize, rng: &mut R) -> Result<Report> {
    let mut report = Report::new("transfer");
    for n in 0..=max_n {
        for trial in 0..trials {
            let c = TensorCochain::random(ctx, n, rng)?;
            let f = HochCochain::random(ctx, n, rng)?;
            report.check(phi(ctx, &psi(ctx, &c)) == c, || {
                (format!("n={n} trial {trial}"), "φψ = id".into(), "differs".into())
            });
            report.check(psi(ctx, &phi(ctx, &f)) == f, || {
                (format!("n={n} trial {trial}"), "ψφ = id".into(), "differs".into())
            });
            let lhs = hoch_diff(ctx, &psi(ctx, &c))?;
            let rhs = psi(ctx, &tensor_diff(ctx, &c)?);
            report.check(lhs == rhs, || {
                (format!("n={n} trial {trial}"), "δψ = ψd'".into(), "differs".into())
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::complexes::{hoch_diff, tensor_diff, GroupCochain};
    use crate::modp::Scalar;

    #[test]
    fn derivations_transfer_to_beta1() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let beta1 = GroupCochain::from_fn(&ctx, 1, |t| ctx.beta1(t[0])).unwrap();
        for i in ctx.elements() {
            // D_i(g^j) = j g^{i+j}
            let d = HochCochain::from_fn(&ctx, 1, |t| ctx.monomial(ctx.mul(t[0], i), ctx.beta1(t[0]))).unwrap();
            let expected = TensorCochain::pure(&ctx, &beta1, &ctx.monomial(i, Scalar::ONE)).unwrap();
            assert_eq!(phi(&ctx, &d), expected);
        }
    }

    #[test]
    fn degree_zero_is_identity() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let a = ctx.alg_from_ints(&[2, 0, 1]).unwrap();
        let f = HochCochain::constant(&ctx, &a);
        assert_eq!(phi(&ctx, &f).value(&ctx, &[]), a);
    }

    #[test]
    fn psi_unrolled() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let beta1 = GroupCochain::from_fn(&ctx, 1, |t| ctx.beta1(t[0])).unwrap();
        let c = TensorCochain::pure(&ctx, &beta1, &ctx.one()).unwrap();
        let f = psi(&ctx, &c);
        assert_eq!(f.value(&ctx, &[ctx.elt(2)]), ctx.monomial(ctx.elt(2), Scalar(2)));
    }

    #[test]
    fn mutually_inverse_and_chain_map() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 0..=3 {
            for _ in 0..20 {
                let c = TensorCochain::random(&ctx, n, &mut rng).unwrap();
                assert_eq!(phi(&ctx, &psi(&ctx, &c)), c);
                let f = HochCochain::random(&ctx, n, &mut rng).unwrap();
                assert_eq!(psi(&ctx, &phi(&ctx, &f)), f);
            }
        }
        for n in 0..=2 {
            let c = TensorCochain::random(&ctx, n, &mut rng).unwrap();
            let lhs = hoch_diff(&ctx, &psi(&ctx, &c)).unwrap();
            let rhs = psi(&ctx, &tensor_diff(&ctx, &c).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
