//! Brute-force oracles and seeded generators.
//!
//! Nothing here calls into the closed forms it is meant to audit: the
//! allocation oracle enumerates every rank split, the tableau counter
//! backtracks over fillings, and the split-bundle oracle sorts degrees.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hn::{HnBlock, HnType};
use crate::scalar::{int, Scalar};

/// Largest total rank the property suites feed to [`allocation_oracle`].
pub const ALLOCATION_RANK_BUDGET: usize = 12;

/// Largest number of cells [`syt_count_bruteforce`] will enumerate.
pub const SYT_CELL_BUDGET: usize = 20;

/// A choice of ranks `s_j` for a subbundle meeting each HN factor, with the
/// slope bound it yields: `objective = sum s_j mu_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationWitness<I: Scalar> {
    pub s_values: Vec<usize>,
    pub objective: Ratio<I>,
}

impl<I: Scalar> AllocationWitness<I> {
    pub fn is_consistent(&self, v: &HnType<I>, s: usize) -> bool {
        self.s_values.len() == v.len()
            && self.s_values.iter().sum::<usize>() == s
            && self.s_values.iter().zip(v.blocks()).all(|(sj, b)| *sj <= b.rank)
            && self.objective == allocation_value(v, &self.s_values)
    }
}

fn allocation_value<I: Scalar>(v: &HnType<I>, s_values: &[usize]) -> Ratio<I> {
    s_values
        .iter()
        .zip(v.block_slopes())
        .fold(Ratio::from_integer(I::zero()), |acc, (sj, mu)| {
            acc + mu.clone() * Ratio::from_integer(int::<I>(*sj))
        })
}

/// Maximizes `sum s_j mu_j` over all `0 <= s_j <= rank_j` with
/// `sum s_j = s`, by exhaustive enumeration. Ties go to the
/// lexicographically greatest `s_values`.
pub fn allocation_oracle<I: Scalar>(v: &HnType<I>, s: usize) -> Result<AllocationWitness<I>> {
    if s == 0 || s > v.rank() {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.to_string(),
            range: format!("1..={}", v.rank()),
        });
    }
    let ranks: Vec<usize> = v.blocks().iter().map(|b| b.rank).collect();
    let mut best: Option<AllocationWitness<I>> = None;
    let mut current = vec![0; ranks.len()];
    enumerate_allocations(&ranks, 0, s, &mut current, &mut |candidate| {
        let objective = allocation_value(v, candidate);
        let better = match &best {
            None => true,
            Some(b) => objective > b.objective || (objective == b.objective && candidate > &b.s_values[..]),
        };
        if better {
            best = Some(AllocationWitness {
                s_values: candidate.to_vec(),
                objective,
            });
        }
    });
    Ok(best.expect("s <= r admits at least one allocation"))
}

fn enumerate_allocations(
    ranks: &[usize],
    j: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if j == ranks.len() {
        if remaining == 0 {
            visit(current);
        }
        return;
    }
    for sj in 0..=ranks[j].min(remaining) {
        current[j] = sj;
        enumerate_allocations(ranks, j + 1, remaining - sj, current, visit);
    }
    current[j] = 0;
}

/// Counts standard Young tableaux of a `rows x cols` rectangle by placing
/// `1, 2, ..., rows*cols` one at a time in every admissible cell.
pub fn syt_count_bruteforce(rows: usize, cols: usize) -> Result<u64> {
    let cells = rows * cols;
    if cells > SYT_CELL_BUDGET {
        return Err(Error::BudgetExceeded {
            cells,
            budget: SYT_CELL_BUDGET,
        });
    }
    if cells == 0 {
        return Err(Error::InvalidArgument("rectangle must be non-empty".into()));
    }
    let mut row_lengths = vec![0usize; rows];
    Ok(place_next(&mut row_lengths, cols, cells))
}

fn place_next(row_lengths: &mut [usize], cols: usize, left: usize) -> u64 {
    if left == 0 {
        return 1;
    }
    let mut count = 0;
    for i in 0..row_lengths.len() {
        // the next entry may go at the end of row i if it stays a partition
        let fits = row_lengths[i] < cols && (i == 0 || row_lengths[i - 1] > row_lengths[i]);
        if fits {
            row_lengths[i] += 1;
            count += place_next(row_lengths, cols, left - 1);
            row_lengths[i] -= 1;
        }
    }
    count
}

/// Maximal slope of a rank-`s` subbundle of a direct sum of line bundles:
/// the mean of the `s` largest degrees.
pub fn split_bundle_e_s<I: Scalar>(line_degrees: &[I], s: usize) -> Result<Ratio<I>> {
    if s == 0 || s > line_degrees.len() {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.to_string(),
            range: format!("1..={}", line_degrees.len()),
        });
    }
    let mut sorted = line_degrees.to_vec();
    sorted.sort();
    let top: I = sorted.iter().rev().take(s).fold(I::zero(), |acc, d| acc + d.clone());
    Ok(Ratio::new(top, int(s)))
}

/// Number of attempts at drawing distinct slopes before dropping a block.
const SLOPE_DRAWS: usize = 32;

/// Deterministic random HN type.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`, and
/// every draw is made on fixed-width integer ranges, so a seed produces the
/// same type on every platform. Procedure: draw the genus in `0..=3` and the
/// total rank in `1..=max_rank`; draw the number of blocks `l` and cut the
/// rank into `l` positive parts; draw each block degree uniformly in
/// `[-max_abs_degree, max_abs_degree]`. If two block slopes coincide the
/// degrees are redrawn, and after 32 failed draws one block is merged away.
/// Finally the blocks are sorted by decreasing slope.
pub fn random_hn_type<I: Scalar>(seed: u64, max_rank: usize, max_abs_degree: i64) -> HnType<I> {
    assert!(max_rank >= 1, "max_rank must be positive");
    let max_abs_degree = max_abs_degree.abs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let genus = rng.gen_range(0u32..=3) as u64;
    let rank = rng.gen_range(1u32..=max_rank as u32) as usize;
    let mut blocks = rng.gen_range(1u32..=rank as u32) as usize;

    loop {
        let parts = random_composition(&mut rng, rank, blocks);
        for _ in 0..SLOPE_DRAWS {
            let mut drawn: Vec<(usize, i64)> = parts
                .iter()
                .map(|&rank_j| (rank_j, rng.gen_range(-max_abs_degree..=max_abs_degree)))
                .collect();
            // sort by slope descending: a/b > c/d  <=>  a d > c b
            drawn.sort_by(|a, b| (b.1 * a.0 as i64).cmp(&(a.1 * b.0 as i64)));
            let distinct = drawn
                .windows(2)
                .all(|w| w[0].1 * (w[1].0 as i64) != w[1].1 * (w[0].0 as i64));
            if distinct {
                let blocks = drawn.into_iter().map(|(r, d)| HnBlock::new(r, I::from(d)));
                return HnType::new(genus, blocks).expect("generator emits valid HN types");
            }
        }
        blocks -= 1;
    }
}

/// `parts` positive integers summing to `total`, from `parts - 1` distinct
/// cut points in `1..total`.
fn random_composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = Vec::with_capacity(parts + 1);
    cuts.push(0);
    while cuts.len() < parts {
        let c = rng.gen_range(1u32..total as u32) as usize;
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(total);
    cuts.sort_unstable();
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Deterministic random list of `1..=max_len` line-bundle degrees in
/// `[-max_abs, max_abs]`, same generator conventions as [`random_hn_type`].
pub fn random_line_degrees(seed: u64, max_len: usize, max_abs: i64) -> Vec<i64> {
    assert!(max_len >= 1, "max_len must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = rng.gen_range(1u32..=max_len as u32);
    (0..len).map(|_| rng.gen_range(-max_abs..=max_abs)).collect()
}
