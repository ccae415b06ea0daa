use std::time::Instant;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{verify_lemma_k_minus_1, verify_main_guarantee, Budget, CampaignReport};
use crate::error::{Error, Result};
use crate::tree::gen_random_tree;

#[derive(Debug, Clone, Copy)]
struct Trial {
    seed: u64,
    n: usize,
    k: usize,
}

fn plan(
    trials: usize,
    n_max: usize,
    k_max: usize,
    seed: u64,
    budget: &Budget,
) -> Result<Vec<Trial>> {
    if n_max == 0 {
        return Err(Error::BadParams("n_max must be at least 1".into()));
    }
    if n_max >= 3 && k_max < 2 {
        return Err(Error::InfeasibleParams(format!(
            "trees with up to {n_max} vertices need k_max >= 2"
        )));
    }
    budget.check_size(n_max)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..trials)
        .map(|_| {
            let seed = rng.next_u64();
            let n = rng.gen_range(1..=n_max);
            let k = if k_max < 3 {
                k_max
            } else {
                rng.gen_range(3..=k_max)
            };
            Trial { seed, n, k }
        })
        .collect())
}

/// Generates the tree for one trial and checks the main guarantee for every
/// `c` in `2..=max(max_valence, 2)`, then the `(k-1)`-coloring.
fn run_trial(trial: Trial, budget: &Budget) -> Result<CampaignReport> {
    let tree = gen_random_tree(trial.n, trial.k, trial.seed)?;
    let mut report = CampaignReport::default();
    for c in 2..=tree.max_valence().max(2) as u32 {
        report.absorb(verify_main_guarantee(&tree, c, budget)?);
    }
    report.absorb(verify_lemma_k_minus_1(&tree, budget)?);
    for f in &mut report.failures {
        f.seed = Some(trial.seed);
        f.n = trial.n;
        f.k = trial.k;
    }
    Ok(report)
}

/// Runs `trials` seeded random trees through the guarantee checks.
///
/// Tree sizes are uniform in `1..=n_max`, valence bounds uniform in
/// `3..=k_max` (or exactly `k_max` if that is below 3).
pub fn run_random_campaign(
    trials: usize,
    n_max: usize,
    k_max: usize,
    seed: u64,
    budget: &Budget,
) -> Result<CampaignReport> {
    run_random_campaign_parallel(trials, n_max, k_max, seed, budget, 1)
}

/// As [`run_random_campaign`], spread over `workers` threads. The report
/// does not depend on the worker count.
pub fn run_random_campaign_parallel(
    trials: usize,
    n_max: usize,
    k_max: usize,
    seed: u64,
    budget: &Budget,
    workers: usize,
) -> Result<CampaignReport> {
    let start = Instant::now();
    let plan = plan(trials, n_max, k_max, seed, budget)?;
    let workers = workers.clamp(1, plan.len().max(1));
    let chunk = plan.len().div_ceil(workers).max(1);
    let parts: Vec<Result<CampaignReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut acc = CampaignReport::default();
                    for &t in part {
                        acc.absorb(run_trial(t, budget)?);
                    }
                    Ok(acc)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("campaign worker panicked"))
            .collect()
    });
    let mut report = CampaignReport {
        trials,
        ..Default::default()
    };
    for part in parts {
        report.absorb(part?);
    }
    report.failures.sort();
    report.elapsed = start.elapsed();
    Ok(report)
}
