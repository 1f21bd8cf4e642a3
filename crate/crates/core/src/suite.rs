//! Runs every verification sweep for one `(m, p)` configuration.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comparison::{verify_homotopy, verify_q_chainmap, verify_s_chainmap};
use crate::complexes::verify_transfer;
use crate::error::Result;
use crate::gerstenhaber::{
    verify_antisymmetry, verify_even_abelian, verify_gamma_table, verify_jacobi, verify_leibniz,
    verify_module_structure, verify_odd_iso, verify_oracle_exhaustive, verify_oracle_random, verify_witt,
    verify_wittype,
};
use crate::group_algebra::GroupCtx;
use crate::report::Report;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Orders up to this size get the exhaustive three-route comparison.
pub const EXHAUSTIVE_ORDER: usize = 5;

/// Largest `m^{2n+1}` for which the homotopy check solves a linear system.
const HOMOTOPY_BUDGET: u128 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_degree: 4,
            seed: DEFAULT_SEED,
        }
    }
}

pub fn run_all(ctx: &GroupCtx, cfg: SuiteConfig) -> Result<Vec<Report>> {
    let d = cfg.max_degree.max(1);
    let m = ctx.order();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = vec![
        ctx.verify_q_lemmas(),
        ctx.verify_telescope(),
        ctx.verify_a_shift((d / 2).max(1)),
        verify_q_chainmap(ctx, d)?,
        verify_s_chainmap(ctx, d)?,
    ];
    for n in 1..=d.min(3) {
        if (m as u128).pow(2 * n as u32 + 1) <= HOMOTOPY_BUDGET {
            out.push(verify_homotopy(ctx, n, 20, &mut rng)?);
        }
    }
    out.push(verify_transfer(ctx, d.min(3), 10, &mut rng)?);
    out.push(if m <= EXHAUSTIVE_ORDER {
        verify_oracle_exhaustive(ctx, 0..=d.min(3))?
    } else {
        verify_oracle_random(ctx, d.min(3), 100, &mut rng)?
    });
    out.push(verify_gamma_table(ctx, d)?);
    out.push(verify_witt(ctx)?);
    let mut modules = Report::new("module_structure");
    for n in 1..=d {
        modules = modules.merge(verify_module_structure(ctx, n)?);
    }
    out.push(modules);
    out.push(verify_odd_iso(ctx, (d - 1) / 2)?);
    out.push(verify_wittype(ctx, d)?);
    out.push(verify_antisymmetry(ctx, d));
    out.push(verify_even_abelian(ctx, d));
    out.push(verify_jacobi(ctx, d + 2));
    out.push(verify_leibniz(ctx, d.min(2), 2, &mut rng)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_config_passes() {
        let ctx = GroupCtx::new(3, 3).unwrap();
        let reports = run_all(&ctx, SuiteConfig { max_degree: 2, seed: 1 }).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0, "{r}");
        }
    }
}
