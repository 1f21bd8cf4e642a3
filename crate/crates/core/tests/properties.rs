use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclic_hh_core::comparison::{beta_value, q_apply, q_linear, s_value_with};
use cyclic_hh_core::complexes::{bar_diff, minimal_diff, phi, psi, BarElt, HochCochain, TensorCochain};
use cyclic_hh_core::gerstenhaber::{closed_bracket, closed_bracket_graded};
use cyclic_hh_core::modp::{solve_linear, MatrixFp};
use cyclic_hh_core::{BasisClass, GradedElt, GroupCtx, PrimeField, Scalar};

const CONFIGS: [(usize, u64); 6] = [(3, 3), (6, 3), (9, 3), (5, 5), (10, 5), (7, 7)];

fn config() -> impl Strategy<Value = GroupCtx> {
    prop::sample::select(CONFIGS.to_vec()).prop_map(|(m, p)| GroupCtx::new(m, p).unwrap())
}

fn class(ctx: &GroupCtx, max_degree: usize) -> impl Strategy<Value = BasisClass> {
    let ctx = ctx.clone();
    let (m, p) = (ctx.order() as i64, ctx.p() as i64);
    (0..=max_degree, 0..m, 0..p).prop_map(move |(n, i, c)| BasisClass::new(&ctx, n, i).with_coeff(ctx.field().elem(c)))
}

proptest! {
    #[test]
    fn solve_recovers_consistent_systems(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        rows in 1usize..6,
        cols in 1usize..6,
        seed in any::<u64>(),
    ) {
        let field = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = MatrixFp::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                a.set(r, c, field.elem(rand::Rng::random_range(&mut rng, 0..p as i64)));
            }
        }
        let x: Vec<Scalar> = (0..cols).map(|_| field.elem(rand::Rng::random_range(&mut rng, 0..p as i64))).collect();
        let b = a.mul_vec(&field, &x).unwrap();
        let y = solve_linear(&field, &a, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&field, &y).unwrap(), b);
    }

    #[test]
    fn q_set_is_wraparound(ctx in config(), i in 0usize..10, j in 0usize..10) {
        let m = ctx.order();
        let (x, y) = (ctx.elt((i % m) as i64), ctx.elt((j % m) as i64));
        prop_assert_eq!(ctx.in_q(x, y), i % m + j % m >= m);
    }

    #[test]
    fn transfer_round_trip(ctx in config(), n in 0usize..3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = TensorCochain::random(&ctx, n, &mut rng).unwrap();
        prop_assert_eq!(phi(&ctx, &psi(&ctx, &c)), c);
        let f = HochCochain::random(&ctx, n, &mut rng).unwrap();
        prop_assert_eq!(psi(&ctx, &phi(&ctx, &f)), f);
    }

    #[test]
    fn q_commutes_with_differentials(ctx in config(), raw in prop::collection::vec(0usize..10, 1..7)) {
        let t: Vec<_> = raw.iter().map(|&e| ctx.elt(e as i64)).collect();
        let n = t.len();
        let lhs = q_linear(&ctx, &bar_diff(&ctx, &BarElt::basis(&ctx, t.clone())).unwrap()).unwrap();
        let rhs = minimal_diff(&ctx, n, &q_apply(&ctx, &t)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_inverts_q(ctx in config(), n in 0usize..9, lambda in 0i64..11) {
        let f = ctx.field();
        let l = f.elem(lambda);
        let v = s_value_with(&ctx, n, |t| f.mul(l, beta_value(&ctx, t))).unwrap();
        prop_assert_eq!(v, l);
    }

    #[test]
    fn closed_bracket_antisymmetric(
        (ctx, a, b) in config().prop_flat_map(|ctx| {
            let (ca, cb) = (class(&ctx, 8), class(&ctx, 8));
            (Just(ctx), ca, cb)
        })
    ) {
        let shift = (a.degree as i64 - 1) * (b.degree as i64 - 1);
        let s = ctx.field().neg(ctx.field().sign(shift));
        prop_assert_eq!(closed_bracket(&ctx, a, b), closed_bracket(&ctx, b, a).scale(&ctx, s));
    }

    #[test]
    fn closed_bracket_bilinear(
        (ctx, a1, a2, b) in config().prop_flat_map(|ctx| {
            let (x, y, z) = (class(&ctx, 5), class(&ctx, 5), class(&ctx, 5));
            (Just(ctx), x, y, z)
        })
    ) {
        let g = |c| GradedElt::from_class(&ctx, c);
        let lhs = closed_bracket_graded(&ctx, &g(a1).add(&ctx, &g(a2)), &g(b));
        let rhs = closed_bracket(&ctx, a1, b).add(&ctx, &closed_bracket(&ctx, a2, b));
        prop_assert_eq!(lhs, rhs);
    }
}
