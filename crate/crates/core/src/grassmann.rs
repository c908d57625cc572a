//! Intersection numbers on the Grassmann bundle `Gr(s, V) -> C` of rank-`s`
//! quotients of a strongly semistable bundle `V`, and the invariants of the
//! complete-intersection curves `D` cut out by `O(n) (x) pi^*L_n`.
//!
//! Write `k = s(r - s)` for the relative dimension and `P` for the degree of
//! a fibre `Gr(s, r)` in its Plucker embedding, `P = [O(1)]^k . F`. Then
//!
//! ```text
//! [O(1)]^(k+1)         = (k + 1) s mu P
//! [O(1)]^k . [pi^*L]   = deg(L) P
//! [pi^*L] . [pi^*L]    = 0
//! ```

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{floor, from_biguint, int, int_u64, Scalar};

/// Rank, degree and genus of `V` together with the quotient rank `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannSetup<I> {
    rank: usize,
    degree: I,
    genus: u64,
    sub_rank: usize,
}

impl<I: Scalar> GrassmannSetup<I> {
    pub fn new(rank: usize, degree: I, genus: u64, sub_rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::OutOfRange {
                what: "rank",
                value: rank.to_string(),
                range: ">= 2".into(),
            });
        }
        if sub_rank == 0 || sub_rank >= rank {
            return Err(Error::OutOfRange {
                what: "sub-rank",
                value: sub_rank.to_string(),
                range: format!("1..{rank}"),
            });
        }
        Ok(GrassmannSetup {
            rank,
            degree,
            genus,
            sub_rank,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> &I {
        &self.degree
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn sub_rank(&self) -> usize {
        self.sub_rank
    }

    pub fn slope(&self) -> Ratio<I> {
        Ratio::new(self.degree.clone(), int(self.rank))
    }

    /// `s (r - s)`, the dimension of a fibre.
    pub fn fiber_dimension(&self) -> usize {
        self.sub_rank * (self.rank - self.sub_rank)
    }

    pub fn plucker_degree(&self) -> Result<I> {
        from_biguint(&plucker_fiber_degree(self.rank, self.sub_rank)?)
    }
}

/// Number of standard Young tableaux of a `rows x cols` rectangle, by the
/// hook-length formula.
pub fn rectangle_syt_count(rows: usize, cols: usize) -> BigUint {
    let cells = rows * cols;
    let mut numerator = BigUint::one();
    for m in 2..=cells {
        numerator *= m;
    }
    let mut hooks = BigUint::one();
    for i in 0..rows {
        for j in 0..cols {
            hooks *= (rows - i) + (cols - j) - 1;
        }
    }
    numerator / hooks
}

/// `[O(1)]^{s(r-s)} . F`: the Plucker degree of `Gr(s, r)`.
pub fn plucker_fiber_degree(rank: usize, sub_rank: usize) -> Result<BigUint> {
    if sub_rank == 0 || sub_rank >= rank {
        return Err(Error::OutOfRange {
            what: "s",
            value: sub_rank.to_string(),
            range: format!("1..{rank}"),
        });
    }
    Ok(rectangle_syt_count(sub_rank, rank - sub_rank))
}

/// Dimension of the irreducible `GL_r` representation whose highest weight
/// is the rectangle with `rows` rows and `cols` columns, via the
/// hook-content formula `prod (r + col - row) / hook`.
pub fn rectangle_gl_dimension(r: usize, rows: usize, cols: usize) -> BigUint {
    let mut numerator = BigUint::one();
    let mut hooks = BigUint::one();
    for i in 0..rows {
        for j in 0..cols {
            // r + j - i, zero when the rectangle has more than r rows
            match (r + j).checked_sub(i) {
                Some(c) => numerator *= c,
                None => return BigUint::zero(),
            }
            hooks *= (rows - i) + (cols - j) - 1;
        }
    }
    numerator / hooks
}

/// The bundle `V_{s,n} = pi_*(O(n))` attached to `V` by the Weyl module of
/// highest weight `n omega_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylBundleData<I: Scalar> {
    pub weyl_rank: I,
    pub weyl_slope: Ratio<I>,
    pub weyl_degree: Ratio<I>,
}

pub fn weyl_data<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<WeylBundleData<I>> {
    check_twist_level(n)?;
    let cols = usize::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))?;
    let weyl_rank: I = from_biguint(&rectangle_gl_dimension(setup.rank, setup.sub_rank, cols))?;
    let weyl_slope = Ratio::from_integer(int_u64::<I>(n) * int::<I>(setup.sub_rank)) * setup.slope();
    let weyl_degree = weyl_slope.clone() * Ratio::from_integer(weyl_rank.clone());
    Ok(WeylBundleData {
        weyl_rank,
        weyl_slope,
        weyl_degree,
    })
}

fn check_twist_level(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: "0".into(),
            range: ">= 1".into(),
        });
    }
    Ok(())
}

/// `2g - n s mu`: every line bundle `L` of strictly larger degree makes
/// `O(n) (x) pi^*L` separate points of `Gr(s, V)`.
pub fn separation_threshold<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<Ratio<I>> {
    check_twist_level(n)?;
    let two_g = Ratio::from_integer(int_u64::<I>(2 * setup.genus));
    let ns = Ratio::from_integer(int_u64::<I>(n) * int::<I>(setup.sub_rank));
    Ok(two_g - ns * setup.slope())
}

/// Smallest integer degree strictly above `threshold`, and its excess
/// `epsilon = degree - threshold`, which lies in `(0, 1]`.
pub fn twist_degree_above<I: Scalar>(threshold: &Ratio<I>) -> (I, Ratio<I>) {
    let degree = floor(threshold) + I::one();
    let epsilon = Ratio::from_integer(degree.clone()) - threshold;
    (degree, epsilon)
}

/// `(deg L_n, epsilon_n)` with `deg L_n = 2g - n s mu + epsilon_n`.
pub fn choose_twist_line_bundle<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<(I, Ratio<I>)> {
    Ok(twist_degree_above(&separation_threshold(setup, n)?))
}

/// Degree of the zero-cycle `[O(1)]^a . [pi^*L_1] ... [pi^*L_b]` with
/// `a + b = s(r-s) + 1`, given the degrees of the `L_j`.
pub fn intersection_monomial<I: Scalar>(
    setup: &GrassmannSetup<I>,
    tautological_power: usize,
    pullback_degrees: &[I],
) -> Result<Ratio<I>> {
    let dim = setup.fiber_dimension() + 1;
    if tautological_power + pullback_degrees.len() != dim {
        return Err(Error::InvalidArgument(format!(
            "monomial of degree {} on a variety of dimension {dim}",
            tautological_power + pullback_degrees.len()
        )));
    }
    let p = Ratio::from_integer(setup.plucker_degree()?);
    Ok(match pullback_degrees {
        [] => Ratio::from_integer(int::<I>(dim) * int::<I>(setup.sub_rank)) * setup.slope() * p,
        [deg_l] => Ratio::from_integer(deg_l.clone()) * p,
        _ => Ratio::zero(),
    })
}

/// `[O(1)]^{s(r-s)+1} = (s(r-s)+1) s mu P`.
pub fn top_self_intersection<I: Scalar>(setup: &GrassmannSetup<I>) -> Result<Ratio<I>> {
    intersection_monomial(setup, setup.fiber_dimension() + 1, &[])
}

/// `[O(1)]^{s(r-s)} . [pi^*L] = deg(L) P`.
pub fn mixed_intersection<I: Scalar>(setup: &GrassmannSetup<I>, deg_l: &I) -> Result<Ratio<I>> {
    intersection_monomial(setup, setup.fiber_dimension(), std::slice::from_ref(deg_l))
}

/// Invariants of a complete-intersection curve `D` in `Gr(s, V)` cut out by
/// `s(r-s)` sections of `O(n) (x) pi^*L_n`, and of the universal sequence
/// `0 -> S -> pi^*V -> Q -> 0` restricted to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiCurveData<I: Scalar> {
    pub n: u64,
    pub deg_ln: I,
    pub epsilon_n: Ratio<I>,
    pub fiber_degree: I,
    /// `deg(D -> C) = n^{s(r-s)} P`.
    pub cover_degree: I,
    pub quotient_degree: Ratio<I>,
    pub sub_degree: Ratio<I>,
    /// `mu(S|_D)`; `S` has rank `r - s`.
    pub sub_slope: Ratio<I>,
    /// `mu(S|_D) / deg(D -> C)`.
    pub normalized_sample: Ratio<I>,
}

impl<I: Scalar> CiCurveData<I> {
    /// `mu(V) - normalized_sample`, which equals `s (2g + epsilon_n) / n`.
    pub fn gap(&self, setup: &GrassmannSetup<I>) -> Ratio<I> {
        setup.slope() - self.normalized_sample.clone()
    }
}

/// `n^{s(r-s)} P (mu - s (2g + epsilon_n) / n)`, the closed form of
/// `mu(S|_D)`.
pub fn sub_slope_closed_form<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<Ratio<I>> {
    let (_, epsilon) = choose_twist_line_bundle(setup, n)?;
    let cover = Ratio::from_integer(cover_degree(setup, n)?);
    let s = Ratio::from_integer(int::<I>(setup.sub_rank));
    let two_g = Ratio::from_integer(int_u64::<I>(2 * setup.genus));
    let n = Ratio::from_integer(int_u64::<I>(n));
    Ok(cover * (setup.slope() - s * (two_g + epsilon) / n))
}

fn cover_degree<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<I> {
    let k = setup.fiber_dimension();
    Ok(num_traits::pow(int_u64::<I>(n), k) * setup.plucker_degree()?)
}

/// Computes the degrees of `Q|_D` and `S|_D` by expanding
/// `[D] . [O(1)] = ([O(n)] + [pi^*L_n])^{s(r-s)} . [O(1)]` and checks the
/// resulting slope of `S|_D` against [`sub_slope_closed_form`].
pub fn ci_curve<I: Scalar>(setup: &GrassmannSetup<I>, n: u64) -> Result<CiCurveData<I>> {
    let (deg_ln, epsilon_n) = choose_twist_line_bundle(setup, n)?;
    let k = setup.fiber_dimension();
    let fiber_degree = setup.plucker_degree()?;
    let cover = cover_degree(setup, n)?;

    let n_int = int_u64::<I>(n);
    let n_pow_k = Ratio::from_integer(num_traits::pow(n_int.clone(), k));
    let n_pow_k_minus_1 = Ratio::from_integer(num_traits::pow(n_int, k - 1));

    // n^k [O(1)]^{k+1} + k n^{k-1} [O(1)]^k . [pi^*L_n]
    let quotient_degree = n_pow_k * top_self_intersection(setup)?
        + Ratio::from_integer(int::<I>(k)) * n_pow_k_minus_1 * mixed_intersection(setup, &deg_ln)?;
    let pullback_degree = Ratio::from_integer(cover.clone() * setup.degree.clone());
    let sub_degree = pullback_degree - quotient_degree.clone();
    let sub_slope = sub_degree.clone() / Ratio::from_integer(int::<I>(setup.rank - setup.sub_rank));

    let closed = sub_slope_closed_form(setup, n)?;
    if closed != sub_slope {
        return Err(Error::CrossCheck(format!(
            "mu(S|_D) from the degree expansion is {sub_slope}, closed form gives {closed}"
        )));
    }
    let normalized_sample = sub_slope.clone() / Ratio::from_integer(cover.clone());
    Ok(CiCurveData {
        n,
        deg_ln,
        epsilon_n,
        fiber_degree,
        cover_degree: cover,
        quotient_degree,
        sub_degree,
        sub_slope,
        normalized_sample,
    })
}

/// Smallest `n` with `s (2g + 1) < n eps`; since `epsilon_n <= 1` this
/// guarantees `mu - normalized_sample(n) < eps`.
pub fn min_n_for_gap<I: Scalar>(setup: &GrassmannSetup<I>, eps: &Ratio<I>) -> Result<u64> {
    if !eps.is_positive() {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    let bound = Ratio::from_integer(int::<I>(setup.sub_rank) * int_u64::<I>(2 * setup.genus + 1)) / eps;
    let n = floor(&bound) + I::one();
    crate::scalar::to_usize(&n)
        .map(|n| n as u64)
        .ok_or(Error::Overflow { value: n.to_string() })
}

/// Genus of an etale cover and whether such a cover can exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGenus<I> {
    pub genus: I,
    /// False when the formula is evaluated where no etale cover of that
    /// degree exists (rational base, degree at least 2).
    pub geometric: bool,
}

/// `g' = deg (g - 1) + 1`, from `1 - g' = deg (1 - g)`.
pub fn etale_cover_genus<I: Scalar>(base_genus: u64, deg: u64) -> Result<CoverGenus<I>> {
    if deg == 0 {
        return Err(Error::OutOfRange {
            what: "cover degree",
            value: "0".into(),
            range: ">= 1".into(),
        });
    }
    let genus = int_u64::<I>(deg) * (int_u64::<I>(base_genus) - I::one()) + I::one();
    Ok(CoverGenus {
        genus,
        geometric: !(base_genus == 0 && deg >= 2),
    })
}

/// Riemann-Roch: `chi = deg + rank (1 - g)`. The genus is signed so that
/// non-geometric values from [`etale_cover_genus`] can be fed back in.
pub fn euler_characteristic<I: Scalar>(rank: usize, degree: &I, genus: &I) -> I {
    degree.clone() + int::<I>(rank) * (I::one() - genus.clone())
}

/// `mu(W) / deg f`, an upper bound for `mu_max(f_* W)`; exact for the slope
/// of the pushforward along an etale `f`.
pub fn pushforward_slope_bound<I: Scalar>(mu_w: &Ratio<I>, deg_f: u64) -> Result<Ratio<I>> {
    if deg_f == 0 {
        return Err(Error::OutOfRange {
            what: "map degree",
            value: "0".into(),
            range: ">= 1".into(),
        });
    }
    Ok(mu_w / Ratio::from_integer(int_u64::<I>(deg_f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::syt_count_bruteforce;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn setup(r: usize, d: i64, g: u64, s: usize) -> GrassmannSetup<i64> {
        GrassmannSetup::new(r, d, g, s).unwrap()
    }

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn binomial(n: usize, k: usize) -> BigUint {
        (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn setup_validation() {
        assert!(GrassmannSetup::new(1, 0i64, 0, 1).is_err());
        assert!(GrassmannSetup::new(3, 0i64, 0, 0).is_err());
        assert!(GrassmannSetup::new(3, 0i64, 0, 3).is_err());
        assert_eq!(setup(4, 6, 1, 2).slope(), q(3, 2));
        assert_eq!(setup(5, 0, 0, 2).fiber_dimension(), 6);
    }

    #[test]
    fn plucker_spot_values() {
        for r in 2..10 {
            assert_eq!(plucker_fiber_degree(r, 1).unwrap(), BigUint::one());
        }
        assert_eq!(plucker_fiber_degree(4, 2).unwrap(), BigUint::from(2u8));
        assert_eq!(plucker_fiber_degree(5, 2).unwrap(), BigUint::from(5u8));
        // Gr(3, 6): 3x3 rectangle, 9!/(5*4^2*3^3*2^2*1) = 42
        assert_eq!(plucker_fiber_degree(6, 3).unwrap(), BigUint::from(42u8));
        assert!(plucker_fiber_degree(4, 0).is_err());
        assert!(plucker_fiber_degree(4, 4).is_err());
    }

    #[test]
    fn plucker_matches_enumeration_and_duality() {
        for r in 2..=8 {
            for s in 1..r {
                let hook = plucker_fiber_degree(r, s).unwrap();
                assert_eq!(hook, BigUint::from(syt_count_bruteforce(s, r - s).unwrap()));
                assert_eq!(hook, plucker_fiber_degree(r, r - s).unwrap());
            }
        }
    }

    #[test]
    fn weyl_ranks() {
        assert_eq!(weyl_data(&setup(4, 0, 0, 2), 1).unwrap().weyl_rank, 6);
        // Sym^3 of a rank-2 bundle; SSYT on {1,2} of shape (3): 4
        assert_eq!(weyl_data(&setup(2, 0, 0, 1), 3).unwrap().weyl_rank, 4);
        // Sym^2 of a rank-3 bundle; SSYT on {1,2,3} of shape (2): 6
        assert_eq!(weyl_data(&setup(3, 0, 0, 1), 2).unwrap().weyl_rank, 6);
        for r in 2..=10 {
            for s in 1..r {
                let rank = weyl_data(&GrassmannSetup::new(r, BigInt::from(1), 0, s).unwrap(), 1)
                    .unwrap()
                    .weyl_rank;
                assert_eq!(rank, BigInt::from(binomial(r, s)));
            }
        }
        assert!(weyl_data(&setup(3, 0, 0, 1), 0).is_err());
    }

    #[test]
    fn weyl_slope_and_degree() {
        let w = weyl_data(&setup(4, 2, 0, 2), 3).unwrap();
        // 2x3 rectangle for GL_4: hook-content gives 50
        assert_eq!(w.weyl_rank, 50);
        assert_eq!(w.weyl_slope, q(3, 1));
        assert_eq!(w.weyl_degree, q(150, 1));
    }

    #[test]
    fn gl_dimension_vanishes_beyond_rank() {
        assert_eq!(rectangle_gl_dimension(2, 3, 1), BigUint::zero());
        assert_eq!(rectangle_gl_dimension(3, 3, 1), BigUint::one());
    }

    #[test]
    fn separation_thresholds() {
        assert_eq!(separation_threshold(&setup(2, 0, 0, 1), 1).unwrap(), q(0, 1));
        assert_eq!(separation_threshold(&setup(2, 2, 2, 1), 3).unwrap(), q(1, 1));
        let st = setup(3, 2, 1, 2);
        let step = separation_threshold(&st, 4).unwrap() - separation_threshold(&st, 5).unwrap();
        assert_eq!(step, q(2, 1) * st.slope());
    }

    #[test]
    fn twist_degree_choice() {
        assert_eq!(twist_degree_above(&q(0, 1)), (1, q(1, 1)));
        assert_eq!(twist_degree_above(&q(1, 2)), (1, q(1, 2)));
        assert_eq!(twist_degree_above(&q(-7, 3)), (-2, q(1, 3)));
        assert_eq!(twist_degree_above(&q(-3, 1)), (-2, q(1, 1)));
        assert_eq!(choose_twist_line_bundle(&setup(2, 2, 2, 1), 3).unwrap(), (2, q(1, 1)));
    }

    #[test]
    fn intersection_numbers() {
        assert_eq!(top_self_intersection(&setup(3, 0, 1, 1)).unwrap(), q(0, 1));
        assert_eq!(top_self_intersection(&setup(2, 6, 0, 1)).unwrap(), q(6, 1));
        assert_eq!(mixed_intersection(&setup(4, 1, 0, 2), &0).unwrap(), q(0, 1));
        assert_eq!(mixed_intersection(&setup(4, 1, 0, 2), &3).unwrap(), q(6, 1));
        let st = setup(4, 1, 0, 2);
        assert_eq!(
            mixed_intersection(&st, &7).unwrap(),
            mixed_intersection(&st, &3).unwrap() + mixed_intersection(&st, &4).unwrap()
        );
        // two pullback classes kill the monomial
        assert_eq!(intersection_monomial(&st, 3, &[2, 5]).unwrap(), q(0, 1));
        assert!(intersection_monomial(&st, 3, &[]).is_err());
    }

    #[test]
    fn top_intersection_is_linear_under_twist() {
        let (r, s, t) = (5, 2, 3i64);
        for d in -10..=10 {
            let base = top_self_intersection(&setup(r, d, 0, s)).unwrap();
            let twisted = top_self_intersection(&setup(r, d + t * r as i64, 0, s)).unwrap();
            // (k+1) s t P with k = 6, P = 5
            assert_eq!(twisted - base, q(7 * 2 * 3 * 5, 1));
        }
    }

    #[test]
    fn ci_curve_examples() {
        let st = setup(2, 0, 0, 1);
        let one = ci_curve(&st, 1).unwrap();
        assert_eq!(one.fiber_degree, 1);
        assert_eq!(one.cover_degree, 1);
        assert_eq!(one.deg_ln, 1);
        assert_eq!(one.epsilon_n, q(1, 1));
        assert_eq!(one.normalized_sample, q(-1, 1));
        assert_eq!(one.gap(&st), q(1, 1));
        let four = ci_curve(&st, 4).unwrap();
        assert_eq!(four.normalized_sample, q(-1, 4));
        assert_eq!(four.cover_degree, 4);
    }

    #[test]
    fn ci_curve_plucker_two() {
        let st = setup(4, 4, 1, 2);
        let data = ci_curve(&st, 1).unwrap();
        assert_eq!(data.fiber_degree, 2);
        // threshold 2 - 2 = 0, so deg L_1 = 1 and epsilon = 1
        assert_eq!((data.deg_ln, data.epsilon_n), (1, q(1, 1)));
        // Q: 5*2*1*2 + 4*1*2 = 28; S: 2*4 - 28 = -20; mu(S) = -10
        assert_eq!(data.quotient_degree, q(28, 1));
        assert_eq!(data.sub_degree, q(-20, 1));
        assert_eq!(data.sub_slope, q(-10, 1));
        assert_eq!(data.normalized_sample, q(-5, 1));
        assert_eq!(data.gap(&st), q(6, 1));
    }

    #[test]
    fn gap_search() {
        assert_eq!(min_n_for_gap(&setup(2, 0, 0, 1), &q(2, 1)).unwrap(), 1);
        assert_eq!(min_n_for_gap(&setup(2, 0, 2, 1), &q(1, 10)).unwrap(), 51);
        // 5 < n/10 fails at exactly n = 50
        assert!(ci_curve(&setup(2, 0, 2, 1), 51).unwrap().gap(&setup(2, 0, 2, 1)) < q(1, 10));
        assert!(min_n_for_gap(&setup(2, 0, 0, 1), &q(0, 1)).is_err());
        assert!(min_n_for_gap(&setup(2, 0, 0, 1), &q(-1, 2)).is_err());
    }

    #[test]
    fn cover_genus() {
        for deg in 1..6 {
            let c = etale_cover_genus::<i64>(1, deg).unwrap();
            assert_eq!(c, CoverGenus { genus: 1, geometric: true });
        }
        assert_eq!(etale_cover_genus::<i64>(2, 3).unwrap().genus, 4);
        let rational = etale_cover_genus::<i64>(0, 2).unwrap();
        assert_eq!(rational.genus, -1);
        assert!(!rational.geometric);
        assert!(etale_cover_genus::<i64>(0, 1).unwrap().geometric);
        assert!(etale_cover_genus::<i64>(3, 0).is_err());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(1, &0i64, &1), 0);
        assert_eq!(euler_characteristic(2, &3i64, &2), 1);
        assert_eq!(
            euler_characteristic(5, &7i64, &3),
            euler_characteristic(2, &3i64, &3) + euler_characteristic(3, &4i64, &3)
        );
    }

    #[test]
    fn pushforward_bounds() {
        assert_eq!(pushforward_slope_bound(&q(0, 1), 4).unwrap(), q(0, 1));
        assert_eq!(pushforward_slope_bound(&q(6, 1), 3).unwrap(), q(2, 1));
        assert!(pushforward_slope_bound(&q(6, 1), 0).is_err());
    }

    #[test]
    fn rational_base_cover_genus_is_negative_for_every_degree() {
        for deg in 2..10 {
            let c = etale_cover_genus::<i64>(0, deg).unwrap();
            assert_eq!(c.genus, 1 - deg as i64);
        }
    }

    proptest! {
        #[test]
        fn riemann_roch_along_etale_covers(g in 0u64..6, deg in 1u64..8, w in 1usize..6, d in -30i64..30) {
            let cover = etale_cover_genus::<i64>(g, deg).unwrap().genus;
            prop_assert_eq!(
                euler_characteristic(w, &d, &cover),
                euler_characteristic(deg as usize * w, &d, &(g as i64))
            );
            let mu_w = q(d, w as i64);
            let pushed = Ratio::new(d, (deg as usize * w) as i64);
            prop_assert_eq!(pushforward_slope_bound(&mu_w, deg).unwrap(), pushed);
        }

        #[test]
        fn two_routes_for_sub_slope(r in 2usize..=5, s_off in 0usize..4, g in 0u64..=3, d in -10i64..=10, n in 1u64..=6) {
            let s = 1 + s_off % (r - 1);
            let st = GrassmannSetup::new(r, BigInt::from(d), g, s).unwrap();
            let data = ci_curve(&st, n).unwrap();
            prop_assert_eq!(&data.sub_slope, &sub_slope_closed_form(&st, n).unwrap());
            let s_big = Ratio::from_integer(BigInt::from(s));
            let expected_gap = s_big * (Ratio::from_integer(BigInt::from(2 * g)) + data.epsilon_n.clone())
                / Ratio::from_integer(BigInt::from(n));
            prop_assert_eq!(data.gap(&st), expected_gap);
            prop_assert!(data.normalized_sample < st.slope());
            prop_assert!(data.epsilon_n > Ratio::zero() && data.epsilon_n <= Ratio::one());
        }
    }
}
