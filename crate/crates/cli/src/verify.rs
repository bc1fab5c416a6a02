//! Randomized self-check: every optimized path against the brute-force
//! oracles and against each other.

use kmismatch::one_mismatch::{all_longest_k_repeats, klcs1, klcs1_windowed};
use kmismatch::oracle::{lcf_naive, longest_k_repeat_naive, ms_naive, phi_naive};
use kmismatch::scan::{dual_matching_stats_k, lcf_const_space, lcf_kangaroo, lcf_queue, matching_stats_k};
use kmismatch::suffix::GeneralizedSuffixTree;
use kmismatch::Sequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "KMISMATCH_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub failed_checks: Vec<&'static str>,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        self.failed_checks.is_empty()
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn random_seq(rng: &mut ChaCha8Rng, max_len: usize, sigma: u8) -> Sequence {
    let len = rng.gen_range(0..=max_len);
    Sequence::new((0..len).map(|_| b'A' + rng.gen_range(0..sigma)).collect::<Vec<_>>())
        .expect("letters are not sentinels")
}

/// One randomized instance and every cross-check on it.
pub fn run_trial(seed: u64, trial: usize) -> TrialOutcome {
    let mut rng = trial_rng(seed, trial);
    let sigma = [2, 4, 20][rng.gen_range(0..3)];
    let k = [0, 1, 2, 5][rng.gen_range(0..4)];
    let s1 = random_seq(&mut rng, 40, sigma);
    let s2 = random_seq(&mut rng, 40, sigma);
    let mut failed = Vec::new();
    let mut check = |name: &'static str, ok: bool| {
        if !ok {
            failed.push(name);
        }
    };

    let naive = lcf_naive(&s1, &s2, k);
    let queue = lcf_queue(&s1, &s2, k);
    let constant = lcf_const_space(&s1, &s2, k);
    let tree = GeneralizedSuffixTree::build(&s1, &s2);
    let kangaroo = lcf_kangaroo(&s1, &s2, k, &tree).expect("tree built over these strings");
    check("queue-vs-naive", queue.length == naive.length);
    check("const-space-vs-queue", constant.length == queue.length);
    check("kangaroo-vs-queue", kangaroo.length == queue.length);
    check(
        "witness-validity",
        [queue, constant, kangaroo].iter().all(|r| r.is_valid_for(&s1, &s2, k)),
    );

    check("ms-vs-naive", matching_stats_k(&s1, &s2, k) == ms_naive(&s1, &s2, k));
    let column_max: Vec<usize> = (0..s2.len())
        .map(|j| {
            (0..s1.len())
                .map(|i| phi_naive(&s1, &s2, k, i, j).expect("in range"))
                .max()
                .unwrap_or(0)
        })
        .collect();
    check("dual-ms-vs-naive", dual_matching_stats_k(&s1, &s2, k).values() == column_max.as_slice());

    let one = lcf_queue(&s1, &s2, 1).length;
    let stree = klcs1(&s1, &s2).gamma;
    check("stree1-vs-queue", stree == one);
    check("windowed-vs-stree1", klcs1_windowed(&s1, &s2).gamma == stree);

    let gap = k.max(1);
    if !s1.is_empty() {
        let fast = all_longest_k_repeats(&s1, gap).expect("gap >= 1").gamma;
        check("repeats-vs-naive", fast == longest_k_repeat_naive(&s1, gap));
    }

    TrialOutcome { trial, failed_checks: failed }
}

/// Worker count: `KMISMATCH_THREADS` if set and positive, else the number
/// of available cores.
pub fn thread_budget() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Runs `trials` trials on up to `threads` threads. Output is sorted by
/// trial id and depends only on `seed` and `trials`.
pub fn run_trials(seed: u64, trials: usize, threads: usize) -> Vec<TrialOutcome> {
    let threads = threads.clamp(1, trials.max(1));
    let mut outcomes: Vec<TrialOutcome> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|w| scope.spawn(move || (w..trials).step_by(threads).map(|t| run_trial(seed, t)).collect::<Vec<_>>()))
            .collect();
        workers.into_iter().flat_map(|h| h.join().expect("verify worker panicked")).collect()
    });
    outcomes.sort_by_key(|o| o.trial);
    outcomes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trials_pass_and_are_thread_independent() {
        let one = run_trials(42, 60, 1);
        let many = run_trials(42, 60, 4);
        assert_eq!(one, many);
        assert!(one.iter().all(TrialOutcome::passed));
        assert_eq!(one.iter().map(|o| o.trial).collect::<Vec<_>>(), (0..60).collect::<Vec<_>>());
    }
}
