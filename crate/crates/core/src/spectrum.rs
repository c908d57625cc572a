//! Supremum of the asymptotic slope spectrum and the criteria built on it.
//!
//! For a bundle `V` with Harder-Narasimhan type `r_i, d_i, mu_i`, the
//! supremum `nu_s(V)` of the normalized maximal rank-`s` subbundle slopes
//! over all finite pullbacks is the chord slope of the HN polygon at `s`:
//!
//! ```text
//! s * nu_s = d_i + (s - r_i) * mu_{i+1}      where r_i < s <= r_{i+1}
//! ```
//!
//! [`nu_s`] evaluates the polygon; [`nu_s_bracket`] evaluates the bracket
//! expression directly. The two are independent routes to the same number.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::hn::HnType;
use crate::scalar::{int, Scalar};

/// `nu_s(V)`, computed as `polygon(s) / s`. Admits `s = r`, where it equals
/// `mu(V)`.
pub fn nu_s<I: Scalar>(v: &HnType<I>, s: usize) -> Result<Ratio<I>> {
    v.check_rank_index(s)?;
    Ok(v.polygon().eval_at(s)? / Ratio::from_integer(int::<I>(s)))
}

/// `d_i + (s - r_i) * mu_{i+1}` for an explicit bracket index `i` in
/// `0..l`. This is `s * nu_s` when `r_i < s <= r_{i+1}`; it is also
/// well-defined (and used for the breakpoint check) outside that bracket.
pub fn bracket_expression<I: Scalar>(v: &HnType<I>, i: usize, s: usize) -> Result<Ratio<I>> {
    if i >= v.len() {
        return Err(Error::OutOfRange {
            what: "bracket index",
            value: i.to_string(),
            range: format!("0..{}", v.len()),
        });
    }
    let r_i = v.cumulative_ranks()[i];
    let d_i = Ratio::from_integer(v.cumulative_degrees()[i].clone());
    let offset = Ratio::from_integer(int::<I>(s) - int::<I>(r_i));
    Ok(d_i + offset * v.block_slopes()[i].clone())
}

/// `nu_s(V)` from the bracket formula rather than the polygon.
pub fn nu_s_bracket<I: Scalar>(v: &HnType<I>, s: usize) -> Result<Ratio<I>> {
    let i = v.bracket(s)?;
    Ok(bracket_expression(v, i, s)? / Ratio::from_integer(int::<I>(s)))
}

/// Strong semistability read off an HN type whose factors are strongly
/// semistable: a single block.
pub fn is_strongly_semistable_type<I: Scalar>(v: &HnType<I>) -> bool {
    v.len() == 1
}

/// Whether some `1 <= s < r` has `nu_s(V) = mu(V)`. For every valid type of
/// rank at least 2 this coincides with [`is_strongly_semistable_type`]; a
/// line bundle has no such `s`.
pub fn some_nu_equals_slope<I: Scalar>(v: &HnType<I>) -> bool {
    let mu = v.slope();
    (1..v.rank()).any(|s| nu_s(v, s).is_ok_and(|nu| nu == mu))
}

/// Lower bound on `deg(W)/deg(f)` above which a rank-`s` subbundle `W` of
/// `f^*V` is forced between `f^*V_i` and `f^*V_{i+1}`:
///
/// ```text
/// d_i + (s - r_i) mu_{i+1} - (mu(V_i) - mu_{i+1})
/// ```
///
/// `None` when `s <= r_1`, where `mu(V_0)` has no meaning.
pub fn sandwich_threshold<I: Scalar>(v: &HnType<I>, s: usize) -> Result<Option<Ratio<I>>> {
    let i = v.bracket(s)?;
    let Some(mu_vi) = v.filtration_slope(i) else {
        return Ok(None);
    };
    let mu_next = v.block_slopes()[i].clone();
    Ok(Some(bracket_expression(v, i, s)? - (mu_vi - mu_next)))
}

/// True iff `delta = deg(W)/deg(f)` strictly exceeds the sandwich threshold,
/// so any such `W` satisfies `f^*V_i ⊂ W ⊂ f^*V_{i+1}`.
pub fn sandwich_forced<I: Scalar>(v: &HnType<I>, s: usize, delta: &Ratio<I>) -> Result<bool> {
    match sandwich_threshold(v, s)? {
        Some(threshold) => Ok(*delta > threshold),
        None => Err(Error::UndefinedThreshold { s }),
    }
}

/// Whether `mu(V)` is an isolated point of the rank-`s` spectrum of a
/// strongly semistable bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isolation {
    /// `e_s(V) = mu(V)`: the spectrum is the single value `mu(V)`.
    SingletonSpectrum,
    /// `e_s(V) < mu(V)`: `mu(V)` is approached by spectrum values along
    /// sequences of genuinely ramified covers, and is not isolated.
    SupremumNotIsolated,
}

pub fn classify_isolation<I: Scalar>(v: &HnType<I>, s: usize, e_s: &Ratio<I>) -> Result<Isolation> {
    if !is_strongly_semistable_type(v) {
        return Err(Error::NotStronglySemistable { blocks: v.len() });
    }
    if s == 0 || s >= v.rank() {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.to_string(),
            range: format!("1..{}", v.rank()),
        });
    }
    let mu = v.slope();
    if *e_s > mu {
        return Err(Error::InvalidESValue {
            s,
            e_s: e_s.to_string(),
            bound: mu.to_string(),
        });
    }
    Ok(if *e_s == mu {
        Isolation::SingletonSpectrum
    } else {
        Isolation::SupremumNotIsolated
    })
}

/// One row of a [`SpectrumReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumRow<I: Scalar> {
    pub s: usize,
    /// Supremum of the rank-`s` spectrum. Whether it is attained is not
    /// decidable from HN data.
    pub nu: Ratio<I>,
    /// `i` with `r_i < s <= r_{i+1}`.
    pub bracket_index: usize,
    pub equals_slope: bool,
    pub threshold: Option<Ratio<I>>,
    pub e_s: Option<Ratio<I>>,
    /// `s = r`: outside the range where `e_s` is defined; kept as the
    /// polygon end point, where `nu_r = mu(V)`.
    pub endpoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport<I: Scalar> {
    pub rows: Vec<SpectrumRow<I>>,
    pub slope: Ratio<I>,
    /// Every spectrum lies in `[e_s(V), interval_upper]`, with
    /// `interval_upper = mu_max(V)`.
    pub interval_upper: Ratio<I>,
    pub strongly_semistable: bool,
}

/// Assembles `nu_s` and the derived data for every `s` in `1..=r`.
///
/// `e_s_values`, when given, holds `e_1, ..., e_{r-1}`; each must satisfy
/// `e_s <= nu_s`.
pub fn full_spectrum_sup<I: Scalar>(
    v: &HnType<I>,
    e_s_values: Option<&[Ratio<I>]>,
) -> Result<SpectrumReport<I>> {
    let r = v.rank();
    if let Some(values) = e_s_values {
        if values.len() != r - 1 {
            return Err(Error::ESLength {
                expected: r - 1,
                got: values.len(),
            });
        }
    }
    let slope = v.slope();
    let mut rows = Vec::with_capacity(r);
    for s in 1..=r {
        let nu = nu_s(v, s)?;
        let e_s = e_s_values.and_then(|values| values.get(s - 1)).cloned();
        if let Some(e) = &e_s {
            if *e > nu {
                return Err(Error::InvalidESValue {
                    s,
                    e_s: e.to_string(),
                    bound: nu.to_string(),
                });
            }
        }
        rows.push(SpectrumRow {
            s,
            equals_slope: nu == slope,
            bracket_index: v.bracket(s)?,
            threshold: sandwich_threshold(v, s)?,
            nu,
            e_s,
            endpoint: s == r,
        });
    }
    Ok(SpectrumReport {
        rows,
        slope,
        interval_upper: v.mu_max(),
        strongly_semistable: is_strongly_semistable_type(v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{allocation_oracle, random_hn_type};
    use proptest::prelude::*;

    fn hn(blocks: &[(usize, i64)]) -> HnType<i64> {
        HnType::new(1, blocks.iter().copied()).unwrap()
    }

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn semistable_nu_is_slope() {
        let v = hn(&[(3, 6)]);
        for s in 1..=3 {
            assert_eq!(nu_s(&v, s).unwrap(), q(2, 1));
        }
    }

    #[test]
    fn running_example_nu_values() {
        // frozen from allocation_oracle over (s_1, s_2) in {0..2} x {0..3}
        let v = hn(&[(2, 10), (3, 9)]);
        let expected = [q(5, 1), q(5, 1), q(13, 3), q(4, 1), q(19, 5)];
        for (s, want) in (1..=5).zip(expected) {
            assert_eq!(nu_s(&v, s).unwrap(), want, "s = {s}");
            assert_eq!(nu_s_bracket(&v, s).unwrap(), want, "s = {s}");
            assert_eq!(allocation_oracle(&v, s).unwrap().objective, want * q(s as i64, 1));
        }
    }

    #[test]
    fn split_bundle_nu() {
        let v = HnType::from_split(3, &[3i64, 1]).unwrap();
        assert_eq!(nu_s(&v, 2).unwrap(), q(2, 1));
        assert_eq!(nu_s(&v, 1).unwrap(), q(3, 1));
    }

    #[test]
    fn nu_out_of_range() {
        let v = hn(&[(2, 10), (3, 9)]);
        assert!(matches!(nu_s(&v, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(nu_s(&v, 6), Err(Error::OutOfRange { .. })));
        assert!(matches!(nu_s_bracket(&v, 6), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn full_report_semistable() {
        let report = full_spectrum_sup(&hn(&[(3, 6)]), None).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.iter().all(|row| row.nu == q(2, 1) && row.equals_slope));
        assert!(report.strongly_semistable);
        assert!(report.rows[2].endpoint && !report.rows[1].endpoint);
        assert_eq!(report.interval_upper, q(2, 1));
    }

    #[test]
    fn full_report_running_example() {
        let report = full_spectrum_sup(&hn(&[(2, 10), (3, 9)]), None).unwrap();
        let nus: Vec<_> = report.rows.iter().map(|row| row.nu).collect();
        assert_eq!(nus, vec![q(5, 1), q(5, 1), q(13, 3), q(4, 1), q(19, 5)]);
        let brackets: Vec<_> = report.rows.iter().map(|row| row.bracket_index).collect();
        assert_eq!(brackets, vec![0, 0, 1, 1, 1]);
        // only the endpoint s = r reaches mu(V)
        let flags: Vec<_> = report.rows.iter().map(|row| row.equals_slope).collect();
        assert_eq!(flags, vec![false, false, false, false, true]);
        assert!(!report.strongly_semistable);
        assert_eq!(report.interval_upper, q(5, 1));
    }

    #[test]
    fn e_s_above_nu_is_rejected() {
        let v = hn(&[(2, 10), (3, 9)]);
        let e = [q(5, 1), q(6, 1), q(4, 1), q(3, 1)];
        assert!(matches!(
            full_spectrum_sup(&v, Some(&e)),
            Err(Error::InvalidESValue { s: 2, .. })
        ));
        let ok = [q(5, 1), q(9, 2), q(4, 1), q(7, 2)];
        let report = full_spectrum_sup(&v, Some(&ok)).unwrap();
        assert_eq!(report.rows[1].e_s, Some(q(9, 2)));
        assert_eq!(report.rows[4].e_s, None);
        assert!(matches!(
            full_spectrum_sup(&v, Some(&ok[..3])),
            Err(Error::ESLength { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn strong_semistability() {
        assert!(is_strongly_semistable_type(&hn(&[(3, 6)])));
        assert!(!is_strongly_semistable_type(&hn(&[(2, 10), (3, 9)])));
        let v = hn(&[(1, 1), (1, 0)]);
        assert!(!is_strongly_semistable_type(&v));
        assert_eq!(nu_s(&v, 1).unwrap(), q(1, 1));
        assert_eq!(v.slope(), q(1, 2));
        assert!(!some_nu_equals_slope(&v));
    }

    #[test]
    fn thresholds() {
        let v = hn(&[(2, 10), (3, 9)]);
        assert_eq!(sandwich_threshold(&v, 4).unwrap(), Some(q(14, 1)));
        assert_eq!(sandwich_threshold(&v, 3).unwrap(), Some(q(11, 1)));
        assert_eq!(sandwich_threshold(&v, 5).unwrap(), Some(q(17, 1)));
        assert_eq!(sandwich_threshold(&v, 1).unwrap(), None);
        assert_eq!(sandwich_threshold(&v, 2).unwrap(), None);
        assert!(sandwich_threshold(&v, 6).is_err());
    }

    #[test]
    fn sandwich() {
        let v = hn(&[(2, 10), (3, 9)]);
        assert!(sandwich_forced(&v, 4, &q(15, 1)).unwrap());
        assert!(!sandwich_forced(&v, 4, &q(14, 1)).unwrap());
        assert!(sandwich_forced(&v, 4, &q(16, 1)).unwrap());
        assert!(sandwich_forced(&v, 4, &q(29, 2)).unwrap());
        assert_eq!(
            sandwich_forced(&v, 1, &q(100, 1)),
            Err(Error::UndefinedThreshold { s: 1 })
        );
    }

    #[test]
    fn isolation() {
        let v = hn(&[(2, 4)]);
        assert_eq!(classify_isolation(&v, 1, &q(2, 1)), Ok(Isolation::SingletonSpectrum));
        let v = hn(&[(2, 0)]);
        assert_eq!(classify_isolation(&v, 1, &q(-1, 1)), Ok(Isolation::SupremumNotIsolated));
        assert!(matches!(
            classify_isolation(&v, 1, &q(1, 2)),
            Err(Error::InvalidESValue { .. })
        ));
        assert!(matches!(classify_isolation(&v, 2, &q(0, 1)), Err(Error::OutOfRange { .. })));
        let unstable = hn(&[(1, 1), (1, 0)]);
        assert_eq!(
            classify_isolation(&unstable, 1, &q(0, 1)),
            Err(Error::NotStronglySemistable { blocks: 2 })
        );
    }

    proptest! {
        #[test]
        fn polygon_and_bracket_routes_agree(seed in any::<u64>()) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            for s in 1..=v.rank() {
                prop_assert_eq!(nu_s(&v, s).unwrap(), nu_s_bracket(&v, s).unwrap());
            }
        }

        #[test]
        fn breakpoints_are_consistent(seed in any::<u64>()) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            for i in 0..v.len() - 1 {
                let s = v.cumulative_ranks()[i + 1];
                let d = Ratio::from_integer(v.cumulative_degrees()[i + 1]);
                prop_assert_eq!(bracket_expression(&v, i, s).unwrap(), d);
                prop_assert_eq!(bracket_expression(&v, i + 1, s).unwrap(), d);
            }
        }

        #[test]
        fn nu_is_monotone_with_fixed_ends(seed in any::<u64>()) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            let nus: Vec<_> = (1..=v.rank()).map(|s| nu_s(&v, s).unwrap()).collect();
            prop_assert!(nus.windows(2).all(|w| w[0] >= w[1]));
            prop_assert_eq!(nus[0], v.mu_max());
            prop_assert_eq!(*nus.last().unwrap(), v.slope());
            prop_assert!(nus.iter().all(|nu| *nu >= v.slope()));
        }

        #[test]
        fn criterion_matches_block_count(seed in any::<u64>()) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            if v.rank() >= 2 {
                prop_assert_eq!(some_nu_equals_slope(&v), is_strongly_semistable_type(&v));
            } else {
                prop_assert!(!some_nu_equals_slope(&v));
            }
        }

        #[test]
        fn twist_equivariance(seed in any::<u64>(), t in -50i64..=50) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            let w = v.twist(&t);
            for s in 1..=v.rank() {
                prop_assert_eq!(nu_s(&w, s).unwrap(), nu_s(&v, s).unwrap() + q(t, 1));
            }
        }

        #[test]
        fn threshold_sits_below_s_nu(seed in any::<u64>()) {
            let v = random_hn_type::<i64>(seed, 12, 40);
            for s in 1..=v.rank() {
                let i = v.bracket(s).unwrap();
                let s_nu = nu_s(&v, s).unwrap() * q(s as i64, 1);
                match sandwich_threshold(&v, s).unwrap() {
                    Some(t) => {
                        let gap = v.filtration_slope(i).unwrap() - v.block_slopes()[i];
                        prop_assert_eq!(t, s_nu - gap);
                        prop_assert!(t < s_nu);
                    }
                    None => prop_assert_eq!(i, 0),
                }
            }
        }
    }
}
