//! Comparison maps between the bar resolution `B` and the periodic minimal
//! resolution `M` of the trivial module, and the induced isomorphisms
//! `H^n(G, K) ≅ K`.
//!
//! `q: B → M` and `s: M → B` are the resolution-level chain maps; `q_cochain`
//! and `s_value` are the maps they induce on cochains.

use rand::Rng;
use rayon::prelude::*;

use crate::complexes::{
    bar_augmentation, bar_diff, coboundary_witness, cochain_diff, decode_into, fmt_tuple, minimal_diff, random_cocycle,
    BarElt, GroupCochain, TensorCochain,
};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgElt, GroupCtx, GroupElt};
use crate::modp::Scalar;
use crate::report::Report;

/// Condition `C(n)`: `x_i ∈ Q(x_{i+1})` for every odd `i` when `n` is even,
/// for every even `i` when `n` is odd (1-based `i < n`).
pub fn satisfies_c(ctx: &GroupCtx, tuple: &[GroupElt]) -> Result<bool> {
    let n = tuple.len();
    if n < 2 {
        return Err(Error::DegreeTooLow {
            what: "satisfies_c",
            min: 2,
            degree: n,
        });
    }
    // 0-based start: position 0 is i = 1
    let start = if n.is_multiple_of(2) { 0 } else { 1 };
    Ok((start..n - 1).step_by(2).all(|j| ctx.in_q(tuple[j], tuple[j + 1])))
}

/// Coefficient of `v_n` in `q_n[x_1|..|x_n]`.
pub fn q_apply(ctx: &GroupCtx, tuple: &[GroupElt]) -> AlgElt {
    match tuple.len() {
        0 => ctx.one(),
        1 => ctx.bracket_int(tuple[0]),
        n => {
            if !satisfies_c(ctx, tuple).expect("n >= 2") {
                ctx.zero()
            } else if n % 2 == 0 {
                ctx.one()
            } else {
                ctx.bracket_int(tuple[0])
            }
        }
    }
}

/// `q` extended A-linearly to a bar element.
pub fn q_linear(ctx: &GroupCtx, b: &BarElt) -> Result<AlgElt> {
    let mut acc = ctx.zero();
    for (t, a) in b.terms() {
        acc = ctx.add(&acc, &ctx.mul_alg(a, &q_apply(ctx, t))?)?;
    }
    Ok(acc)
}

/// Builds `[g|g^{i_1}|g|g^{i_2}|..|g|g^{i_k}]`, with a trailing `g` for odd `n`.
fn s_tuple(ctx: &GroupCtx, n: usize, exps: &[GroupElt], out: &mut Vec<GroupElt>) {
    out.clear();
    for &x in exps {
        out.push(ctx.g());
        out.push(x);
    }
    if n % 2 == 1 {
        out.push(ctx.g());
    }
}

/// `s_n(v_n) = Σ a(i_1..i_k) [g|g^{i_1}|..|g|g^{i_k}]`, `k = ⌊n/2⌋`, with a
/// trailing `|g]` when `n` is odd.
pub fn s_chain(ctx: &GroupCtx, n: usize) -> Result<BarElt> {
    let m = ctx.order();
    let k = n / 2;
    let count = ctx.tuple_count(k, n.max(1))?;
    let mut out = BarElt::zero(n);
    let mut exps = vec![GroupElt::IDENTITY; k];
    let mut tuple = Vec::with_capacity(n);
    for idx in 0..count {
        decode_into(m, idx, &mut exps);
        let coeff = if k == 0 {
            GroupElt::IDENTITY
        } else {
            let raw: Vec<usize> = exps.iter().map(|x| x.exp()).collect();
            ctx.a_coeff(&raw)?
        };
        s_tuple(ctx, n, &exps, &mut tuple);
        out.add_term(ctx, tuple.clone(), &ctx.monomial(coeff, Scalar::ONE));
    }
    Ok(out)
}

/// The map induced by `s` on cochains, for a cochain given by its values:
/// `Σ α[g|g^{i_1}|..|g|g^{i_k}]` (and the odd variant); the stored scalar in
/// degree 0. Only `m^⌊n/2⌋` values are read.
pub fn s_value_with<F>(ctx: &GroupCtx, n: usize, eval: F) -> Result<Scalar>
where
    F: Fn(&[GroupElt]) -> Scalar,
{
    let m = ctx.order();
    let k = n / 2;
    let count = ctx.tuple_count(k, 1)?;
    let f = ctx.field();
    let mut exps = vec![GroupElt::IDENTITY; k];
    let mut tuple = Vec::with_capacity(n);
    let mut acc = Scalar::ZERO;
    for idx in 0..count {
        decode_into(m, idx, &mut exps);
        s_tuple(ctx, n, &exps, &mut tuple);
        acc = f.add(acc, eval(&tuple));
    }
    Ok(acc)
}

pub fn s_value(ctx: &GroupCtx, c: &GroupCochain) -> Result<Scalar> {
    s_value_with(ctx, c.degree(), |t| c.at(ctx, t))
}

/// `s ⊗ id`: the class in `H^n ⊗ A ≅ A` of a cocycle of `C ⊗ A`.
pub fn s_tensor(ctx: &GroupCtx, c: &TensorCochain) -> Result<AlgElt> {
    let n = c.degree();
    let k = n / 2;
    let count = ctx.tuple_count(k, 1)?;
    let mut exps = vec![GroupElt::IDENTITY; k];
    let mut tuple = Vec::with_capacity(n);
    let mut acc = ctx.zero();
    for idx in 0..count {
        decode_into(ctx.order(), idx, &mut exps);
        s_tuple(ctx, n, &exps, &mut tuple);
        acc = ctx.add(&acc, &c.value(ctx, &tuple))?;
    }
    Ok(acc)
}

/// `β^n(x_1..x_n)` without materializing the cochain.
pub fn beta_value(ctx: &GroupCtx, tuple: &[GroupElt]) -> Scalar {
    ctx.epsilon(&q_apply(ctx, tuple))
}

/// The basis cocycle `β^n`.
pub fn beta_n(ctx: &GroupCtx, n: usize) -> Result<GroupCochain> {
    GroupCochain::from_fn(ctx, n, |t| beta_value(ctx, t))
}

/// `q_n(λ) = λ β^n`.
pub fn q_cochain(ctx: &GroupCtx, n: usize, lambda: Scalar) -> Result<GroupCochain> {
    Ok(beta_n(ctx, n)?.scale(ctx, lambda))
}

fn sweep<F>(name: &str, count: usize, check: F) -> Report
where
    F: Fn(usize, &mut Report) + Sync,
{
    (0..count)
        .into_par_iter()
        .fold(
            || Report::new(name),
            |mut r, idx| {
                check(idx, &mut r);
                r
            },
        )
        .reduce(|| Report::new(name), Report::merge)
}

/// Checks `q_{n-1} ∘ d_n = ∂_n ∘ q_n` on every basis tuple of degree
/// `1..=max_n+1`, and `ε ∘ q_0 = d_0`.
pub fn verify_q_chainmap(ctx: &GroupCtx, max_n: usize) -> Result<Report> {
    let m = ctx.order();
    let mut report = Report::new("q_chainmap");
    for x in ctx.elements() {
        let a = ctx.monomial(x, Scalar::ONE);
        let lhs = ctx.epsilon(&ctx.mul_alg(&a, &q_apply(ctx, &[]))?);
        let rhs = bar_augmentation(ctx, &BarElt::basis(ctx, vec![]).scale(ctx, &a)?)?;
        report.check(lhs == rhs, || (format!("{x}[ ]"), rhs.to_string(), lhs.to_string()));
    }
    for n in 1..=max_n + 1 {
        let count = ctx.tuple_count(n, 1)?;
        let part = sweep("q_chainmap", count, |idx, r| {
            let mut t = vec![GroupElt::IDENTITY; n];
            decode_into(m, idx, &mut t);
            let d = bar_diff(ctx, &BarElt::basis(ctx, t.clone())).expect("n >= 1");
            let lhs = q_linear(ctx, &d).expect("same context");
            let rhs = minimal_diff(ctx, n, &q_apply(ctx, &t)).expect("n >= 1");
            r.check(lhs == rhs, || {
                (format!("n={n} {}", fmt_tuple(&t)), rhs.to_string(), lhs.to_string())
            });
        });
        report = report.merge(part);
    }
    Ok(report)
}

/// Checks `d_n ∘ s_n = s_{n-1} ∘ ∂_n` for `n = 1..=max_n+1` coefficient by
/// coefficient, and `d_0 ∘ s_0 = ε`.
pub fn verify_s_chainmap(ctx: &GroupCtx, max_n: usize) -> Result<Report> {
    let mut report = Report::new("s_chainmap");
    let s0 = s_chain(ctx, 0)?;
    for x in ctx.elements() {
        let a = ctx.monomial(x, Scalar::ONE);
        let lhs = bar_augmentation(ctx, &s0.scale(ctx, &a)?)?;
        let rhs = ctx.epsilon(&a);
        report.check(lhs == rhs, || (format!("{x} v_0"), rhs.to_string(), lhs.to_string()));
    }
    let mut prev = s0;
    for n in 1..=max_n + 1 {
        let cur = s_chain(ctx, n)?;
        let lhs = bar_diff(ctx, &cur)?;
        let rhs = prev.scale(ctx, &minimal_diff(ctx, n, &ctx.one())?)?;
        let mut keys: Vec<Vec<GroupElt>> = lhs.terms().chain(rhs.terms()).map(|(t, _)| t.to_vec()).collect();
        keys.sort();
        keys.dedup();
        for t in keys {
            let (l, r) = (lhs.coeff(ctx, &t), rhs.coeff(ctx, &t));
            report.check(l == r, || {
                (
                    format!("n={n} coefficient of {}", fmt_tuple(&t)),
                    r.to_string(),
                    l.to_string(),
                )
            });
        }
        prev = cur;
    }
    Ok(report)
}

/// For random cocycles `α` of degree `n`, checks that `α - q_n(s_n(α))` is a
/// coboundary and that the witness found really maps onto it.
pub fn verify_homotopy<R: Rng + ?Sized>(ctx: &GroupCtx, n: usize, trials: usize, rng: &mut R) -> Result<Report> {
    let mut report = Report::new(format!("homotopy_n{n}"));
    for trial in 0..trials {
        let alpha = random_cocycle(ctx, n, rng)?;
        let lambda = s_value(ctx, &alpha)?;
        let diff = alpha.sub(ctx, &q_cochain(ctx, n, lambda)?)?;
        if n == 0 {
            report.check(diff.is_zero(), || {
                (format!("trial {trial}"), "0".into(), "nonzero".into())
            });
            continue;
        }
        let ok = match coboundary_witness(ctx, &diff)? {
            Some(b) => cochain_diff(ctx, &b)? == diff,
            None => false,
        };
        report.check(ok, || {
            (
                format!("trial {trial}, s(α)={lambda}"),
                "coboundary".into(),
                "no witness".into(),
            )
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::complexes::elt_tuples;

    fn ctx3() -> GroupCtx {
        GroupCtx::new(3, 3).unwrap()
    }

    #[test]
    fn condition_c_examples() {
        let ctx = ctx3();
        let sat: Vec<Vec<usize>> = elt_tuples(3, 2)
            .filter(|t| satisfies_c(&ctx, t).unwrap())
            .map(|t| t.iter().map(|x| x.exp()).collect())
            .collect();
        assert_eq!(sat, vec![vec![2, 1], vec![1, 2], vec![2, 2]]);
        let t = [ctx.elt(2), ctx.elt(1), ctx.elt(2)];
        assert!(satisfies_c(&ctx, &t).unwrap());
        assert!(!satisfies_c(&ctx, &[ctx.elt(2), ctx.elt(0)]).unwrap());
        assert!(!satisfies_c(&ctx, &[ctx.elt(2), ctx.elt(1), ctx.elt(0)]).unwrap());
        assert!(satisfies_c(&ctx, &[ctx.g()]).is_err());
    }

    #[test]
    fn q_examples() {
        let ctx = ctx3();
        let (g, g2) = (ctx.elt(1), ctx.elt(2));
        assert_eq!(q_apply(&ctx, &[g, g2]), ctx.one());
        assert_eq!(q_apply(&ctx, &[g2, g, g2]), ctx.alg_from_ints(&[1, 1, 0]).unwrap());
        assert!(q_apply(&ctx, &[g, g]).is_zero());
        assert_eq!(q_apply(&ctx, &[]), ctx.one());
        assert_eq!(q_apply(&ctx, &[g2]), ctx.bracket_int(g2));
    }

    #[test]
    fn q_values_are_structured() {
        let ctx = GroupCtx::new(9, 3).unwrap();
        for n in 2..=4 {
            for t in elt_tuples(9, n) {
                let v = q_apply(&ctx, &t);
                if n % 2 == 0 {
                    assert!(v.is_zero() || v == ctx.one());
                } else {
                    assert!(v.is_zero() || v == ctx.bracket_int(t[0]));
                }
            }
        }
    }

    #[test]
    fn s_chain_examples() {
        let ctx = ctx3();
        let (one, g, g2) = (ctx.elt(0), ctx.elt(1), ctx.elt(2));
        assert_eq!(s_chain(&ctx, 0).unwrap(), BarElt::basis(&ctx, vec![]));
        assert_eq!(s_chain(&ctx, 1).unwrap(), BarElt::basis(&ctx, vec![g]));
        let mut expected = BarElt::zero(2);
        expected.add_term(&ctx, vec![g, one], &ctx.monomial(g2, Scalar::ONE));
        expected.add_term(&ctx, vec![g, g], &ctx.monomial(g, Scalar::ONE));
        expected.add_term(&ctx, vec![g, g2], &ctx.one());
        assert_eq!(s_chain(&ctx, 2).unwrap(), expected);
    }

    #[test]
    fn s_value_examples() {
        let ctx = ctx3();
        for n in 0..=6 {
            assert_eq!(s_value(&ctx, &beta_n(&ctx, n).unwrap()).unwrap(), Scalar::ONE, "n={n}");
        }
        let lam = ctx.field().elem(2);
        assert_eq!(s_value(&ctx, &q_cochain(&ctx, 3, lam).unwrap()).unwrap(), lam);
        assert!(q_cochain(&ctx, 2, Scalar::ZERO).unwrap().is_zero());
    }

    #[test]
    fn beta_examples() {
        let ctx = ctx3();
        let b2 = beta_n(&ctx, 2).unwrap();
        assert_eq!(b2.values().iter().filter(|v| !v.is_zero()).count(), 3);
        let b3 = beta_n(&ctx, 3).unwrap();
        assert_eq!(b3.at(&ctx, &[ctx.elt(2), ctx.elt(1), ctx.elt(2)]), Scalar(2));
        assert_eq!(beta_n(&ctx, 0).unwrap(), GroupCochain::scalar(Scalar::ONE));
        for n in 0..=4 {
            assert!(cochain_diff(&ctx, &beta_n(&ctx, n).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn s_tensor_examples() {
        let ctx = ctx3();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3 {
            let b = beta_n(&ctx, n).unwrap();
            for x in ctx.elements() {
                let a = ctx.monomial(x, Scalar::ONE);
                let c = TensorCochain::pure(&ctx, &b, &a).unwrap();
                assert_eq!(s_tensor(&ctx, &c).unwrap(), a);
            }
            let r = TensorCochain::random(&ctx, n - 1, &mut rng).unwrap();
            let d = crate::complexes::tensor_diff(&ctx, &r).unwrap();
            assert!(s_tensor(&ctx, &d).unwrap().is_zero());
            assert!(s_tensor(&ctx, &TensorCochain::zero(&ctx, n).unwrap())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn base_cases_of_q() {
        let ctx = ctx3();
        let (g, g2) = (ctx.elt(1), ctx.elt(2));
        for (t, expected) in [(vec![g, g2], ctx.norm_t()), (vec![g, g], ctx.zero())] {
            let d = bar_diff(&ctx, &BarElt::basis(&ctx, t.clone())).unwrap();
            assert_eq!(q_linear(&ctx, &d).unwrap(), expected);
            assert_eq!(minimal_diff(&ctx, 2, &q_apply(&ctx, &t)).unwrap(), expected);
        }
    }

    #[test]
    fn chain_maps_pass() {
        for (m, p) in [(3, 3), (9, 3), (5, 5)] {
            let ctx = GroupCtx::new(m, p).unwrap();
            let r = verify_q_chainmap(&ctx, 3).unwrap();
            assert!(r.passed(), "{r}");
            let r = verify_s_chainmap(&ctx, 5).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_map_is_caught() {
        let ctx = ctx3();
        let g = ctx.g();
        // s_1(v_1) = [g^2] is not a lift of g - 1
        let lhs = bar_diff(&ctx, &BarElt::basis(&ctx, vec![ctx.elt(2)])).unwrap();
        let rhs = s_chain(&ctx, 0)
            .unwrap()
            .scale(&ctx, &minimal_diff(&ctx, 1, &ctx.one()).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
        assert_eq!(bar_diff(&ctx, &BarElt::basis(&ctx, vec![g])).unwrap(), rhs);
    }

    #[test]
    fn homotopy_passes() {
        let ctx = ctx3();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 0..=3 {
            let r = verify_homotopy(&ctx, n, 10, &mut rng).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
