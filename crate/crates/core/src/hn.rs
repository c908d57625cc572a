//! Harder-Narasimhan types: the ordered (rank, degree) ladder of the
//! semistable factors of a bundle, together with the genus of the base curve.
//!
//! Every block is read as a strongly semistable factor. Blocks must be given
//! in HN order, i.e. with strictly decreasing slopes; adjacent blocks of equal
//! slope are rejected rather than merged (use [`HnType::from_split`] to group
//! a list of line-bundle degrees).

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::polygon::HnPolygon;
use crate::scalar::{int, Scalar};

/// One Harder-Narasimhan factor `V_j / V_{j-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnBlock<I> {
    pub rank: usize,
    pub degree: I,
}

impl<I: Scalar> HnBlock<I> {
    pub fn new(rank: usize, degree: I) -> Self {
        HnBlock { rank, degree }
    }

    pub fn slope(&self) -> Ratio<I> {
        Ratio::new(self.degree.clone(), int(self.rank))
    }
}

impl<I: Scalar> From<(usize, I)> for HnBlock<I> {
    fn from((rank, degree): (usize, I)) -> Self {
        HnBlock { rank, degree }
    }
}

/// A validated Harder-Narasimhan type with its cumulative data cached.
///
/// Indices follow the filtration: `cumulative_ranks()[i]` is `r_i` for
/// `i = 0..=l` with `r_0 = 0`, and `block_slopes()[j]` is the slope of the
/// `(j+1)`-th factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnType<I: Scalar> {
    genus: u64,
    blocks: Vec<HnBlock<I>>,
    ranks: Vec<usize>,
    degrees: Vec<I>,
    slopes: Vec<Ratio<I>>,
}

impl<I: Scalar> HnType<I> {
    pub fn new<B>(genus: u64, blocks: impl IntoIterator<Item = B>) -> Result<Self>
    where
        B: Into<HnBlock<I>>,
    {
        let blocks: Vec<HnBlock<I>> = blocks.into_iter().map(Into::into).collect();
        if blocks.is_empty() {
            return Err(Error::EmptyType);
        }
        if let Some(index) = blocks.iter().position(|b| b.rank == 0) {
            return Err(Error::ZeroRank { index: index + 1 });
        }
        let slopes: Vec<Ratio<I>> = blocks.iter().map(HnBlock::slope).collect();
        for (j, pair) in slopes.windows(2).enumerate() {
            if pair[0] <= pair[1] {
                return Err(Error::SlopeOrderViolation {
                    index: j + 1,
                    upper: pair[0].to_string(),
                    lower: pair[1].to_string(),
                });
            }
        }

        let mut ranks = Vec::with_capacity(blocks.len() + 1);
        let mut degrees = Vec::with_capacity(blocks.len() + 1);
        ranks.push(0);
        degrees.push(I::zero());
        for b in &blocks {
            ranks.push(ranks.last().unwrap() + b.rank);
            degrees.push(degrees.last().unwrap().clone() + b.degree.clone());
        }
        Ok(HnType {
            genus,
            blocks,
            ranks,
            degrees,
            slopes,
        })
    }

    /// The HN type of a direct sum of line bundles of the given degrees:
    /// degrees are sorted descending and equal values grouped into one block.
    pub fn from_split(genus: u64, line_degrees: &[I]) -> Result<Self> {
        let mut sorted = line_degrees.to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        let mut blocks: Vec<HnBlock<I>> = Vec::new();
        for d in sorted {
            match blocks.last_mut() {
                Some(last) if last.slope() == Ratio::from_integer(d.clone()) => {
                    last.rank += 1;
                    last.degree = last.degree.clone() + d;
                }
                _ => blocks.push(HnBlock::new(1, d)),
            }
        }
        HnType::new(genus, blocks)
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn blocks(&self) -> &[HnBlock<I>] {
        &self.blocks
    }

    /// Length `l` of the filtration.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `r_0, r_1, ..., r_l`.
    pub fn cumulative_ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `d_0, d_1, ..., d_l`.
    pub fn cumulative_degrees(&self) -> &[I] {
        &self.degrees
    }

    /// `mu_1 > mu_2 > ... > mu_l`.
    pub fn block_slopes(&self) -> &[Ratio<I>] {
        &self.slopes
    }

    pub fn rank(&self) -> usize {
        *self.ranks.last().unwrap()
    }

    pub fn degree(&self) -> &I {
        self.degrees.last().unwrap()
    }

    /// `mu(V) = d / r`.
    pub fn slope(&self) -> Ratio<I> {
        Ratio::new(self.degree().clone(), int(self.rank()))
    }

    /// Slope of the maximal destabilizing subbundle, `mu_1`.
    pub fn mu_max(&self) -> Ratio<I> {
        self.slopes[0].clone()
    }

    /// Slope of the minimal quotient, `mu_l`.
    pub fn mu_min(&self) -> Ratio<I> {
        self.slopes[self.slopes.len() - 1].clone()
    }

    /// `mu(V_i) = d_i / r_i` for `1 <= i <= l`; `None` for `i = 0`.
    pub fn filtration_slope(&self, i: usize) -> Option<Ratio<I>> {
        if i == 0 || i > self.len() {
            return None;
        }
        Some(Ratio::new(self.degrees[i].clone(), int(self.ranks[i])))
    }

    /// The unique `i` with `r_i < s <= r_{i+1}`.
    pub fn bracket(&self, s: usize) -> Result<usize> {
        self.check_rank_index(s)?;
        Ok(self.ranks.partition_point(|&r| r < s) - 1)
    }

    pub(crate) fn check_rank_index(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.rank() {
            return Err(Error::OutOfRange {
                what: "s",
                value: s.to_string(),
                range: format!("1..={}", self.rank()),
            });
        }
        Ok(())
    }

    /// `V (x) L` for a line bundle `L` of degree `t`.
    pub fn twist(&self, t: &I) -> Self {
        if t.is_zero() {
            return self.clone();
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| HnBlock::new(b.rank, b.degree.clone() + t.clone() * int::<I>(b.rank)));
        HnType::new(self.genus, blocks).expect("twisting preserves the slope order")
    }

    /// Semistable in the HN sense: a single block.
    pub fn is_semistable(&self) -> bool {
        self.len() == 1
    }

    pub fn polygon(&self) -> HnPolygon<I> {
        HnPolygon::from_vertices(
            self.ranks
                .iter()
                .copied()
                .zip(self.degrees.iter().cloned())
                .collect(),
        )
    }
}
