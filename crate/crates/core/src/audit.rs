//! Invariant audit over HN types and Grassmann setups.
//!
//! Each check compares a closed form against an independent route (brute
//! force, a second formula, or a structural identity) and stops at the
//! first counterexample.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::bundle_file;
use crate::error::Result;
use crate::grassmann::{ci_curve, min_n_for_gap, sub_slope_closed_form, GrassmannSetup};
use crate::hn::HnType;
use crate::oracles::{allocation_oracle, random_hn_type};
use crate::scalar::{int, Scalar};
use crate::spectrum::{
    bracket_expression, is_strongly_semistable_type, nu_s_bracket, sandwich_threshold, some_nu_equals_slope,
};

type Q = Ratio<BigInt>;

/// Closed form under audit: `(V, s) -> nu_s(V)`.
pub type NuFn = fn(&HnType<BigInt>, usize) -> Result<Q>;

/// A violated invariant with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub witness: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}\nwitness:\n{}", self.check, self.detail, self.witness)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub types_checked: usize,
    pub setups_checked: usize,
    pub assertions: usize,
    pub violation: Option<Violation>,
}

impl AuditSummary {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub struct Auditor {
    nu: NuFn,
    twists: Vec<i64>,
    summary: AuditSummary,
}

impl Default for Auditor {
    fn default() -> Self {
        Auditor::new(crate::spectrum::nu_s::<BigInt>)
    }
}

macro_rules! ensure {
    ($self:ident, $cond:expr, $check:expr, $witness:expr, $($detail:tt)+) => {
        $self.summary.assertions += 1;
        if !$cond {
            return $self.fail($check, $witness, format!($($detail)+));
        }
    };
}

impl Auditor {
    /// Audits the given `nu_s` implementation. The library's own is the
    /// default; tests pass deliberately broken ones.
    pub fn new(nu: NuFn) -> Self {
        Auditor {
            nu,
            twists: vec![-7, -1, 1, 3, 50],
            summary: AuditSummary::default(),
        }
    }

    pub fn summary(&self) -> &AuditSummary {
        &self.summary
    }

    pub fn into_summary(self) -> AuditSummary {
        self.summary
    }

    fn fail(&mut self, check: &'static str, witness: String, detail: String) -> bool {
        self.summary.violation = Some(Violation { check, witness, detail });
        false
    }

    fn done(&self) -> bool {
        self.summary.violation.is_some()
    }

    /// Runs every HN-type invariant on `v`. Returns false at the first
    /// violation, which is then recorded in the summary.
    pub fn check_type(&mut self, v: &HnType<BigInt>) -> bool {
        if self.done() {
            return false;
        }
        self.summary.types_checked += 1;
        let witness = bundle_file::render(v);
        let r = v.rank();
        let mu = v.slope();
        let nu = self.nu;

        let mut nus = Vec::with_capacity(r);
        for s in 1..=r {
            let value = match nu(v, s) {
                Ok(x) => x,
                Err(e) => return self.fail("nu_s evaluation", witness, format!("s = {s}: {e}")),
            };
            let s_q = Q::from_integer(int(s));
            let oracle = allocation_oracle(v, s).expect("s in range").objective;
            ensure!(
                self,
                value.clone() * s_q.clone() == oracle,
                "closed form vs allocation oracle",
                witness.clone(),
                "s = {s}: s * nu_s = {} but the oracle maximum is {oracle}",
                value.clone() * s_q.clone()
            );
            let bracket = nu_s_bracket(v, s).expect("s in range");
            ensure!(
                self,
                value == bracket,
                "polygon vs bracket formula",
                witness.clone(),
                "s = {s}: nu_s = {value}, bracket formula gives {bracket}"
            );
            ensure!(
                self,
                value >= mu,
                "nu_s >= mu(V)",
                witness.clone(),
                "s = {s}: nu_s = {value} < mu = {mu}"
            );
            if let Some(t) = sandwich_threshold(v, s).expect("s in range") {
                let i = v.bracket(s).expect("s in range");
                let gap = v.filtration_slope(i).expect("i >= 1") - v.block_slopes()[i].clone();
                let s_nu = value.clone() * s_q;
                ensure!(
                    self,
                    t == s_nu.clone() - gap && t < s_nu,
                    "sandwich threshold gap",
                    witness.clone(),
                    "s = {s}: threshold {t}, s * nu_s = {s_nu}"
                );
            }
            nus.push(value);
        }

        ensure!(
            self,
            nus.windows(2).all(|w| w[0] >= w[1]),
            "monotonicity",
            witness.clone(),
            "nu_s is not non-increasing: {nus:?}"
        );
        ensure!(
            self,
            nus[0] == v.mu_max() && nus[r - 1] == mu,
            "end points",
            witness.clone(),
            "nu_1 = {}, mu_max = {}, nu_r = {}, mu = {mu}",
            nus[0],
            v.mu_max(),
            nus[r - 1]
        );
        let attained = (1..r).any(|s| nus[s - 1] == mu);
        // a line bundle has no s < r to test
        ensure!(
            self,
            r < 2 || (attained == is_strongly_semistable_type(v) && attained == some_nu_equals_slope(v)),
            "semistability criterion",
            witness.clone(),
            "nu_s = mu for some s < r is {attained}, but the type has {} block(s)",
            v.len()
        );

        for i in 0..v.len() - 1 {
            let s = v.cumulative_ranks()[i + 1];
            let d = Q::from_integer(v.cumulative_degrees()[i + 1].clone());
            let left = bracket_expression(v, i, s).expect("bracket in range");
            let right = bracket_expression(v, i + 1, s).expect("bracket in range");
            ensure!(
                self,
                left == d && right == d,
                "breakpoint consistency",
                witness.clone(),
                "at s = r_{} = {s}: brackets give {left} and {right}, d = {d}",
                i + 1
            );
        }

        for &t in &self.twists.clone() {
            let w = v.twist(&BigInt::from(t));
            let shift = Q::from_integer(BigInt::from(t));
            for s in 1..=r {
                let twisted = nu(&w, s).ok();
                let expected = nus[s - 1].clone() + shift.clone();
                ensure!(
                    self,
                    twisted.as_ref() == Some(&expected),
                    "twist equivariance",
                    witness.clone(),
                    "t = {t}, s = {s}: nu_s(V(t)) = {twisted:?}, expected {expected}"
                );
            }
        }

        let round_trip = bundle_file::parse::<BigInt>(&witness);
        ensure!(
            self,
            round_trip.as_ref() == Ok(v),
            "bundle file round trip",
            witness.clone(),
            "parse(render(V)) = {round_trip:?}"
        );
        true
    }

    /// Checks the two routes to `mu(S|_D)`, the exact gap identity, and the
    /// `n` bound from [`min_n_for_gap`] for `n` in `1..=n_max`.
    pub fn check_setup(&mut self, setup: &GrassmannSetup<BigInt>, n_max: u64) -> bool {
        if self.done() {
            return false;
        }
        self.summary.setups_checked += 1;
        let witness = format!(
            "r = {}, d = {}, g = {}, s = {}",
            setup.rank(),
            setup.degree(),
            setup.genus(),
            setup.sub_rank()
        );
        let s_q = Q::from_integer(int(setup.sub_rank()));
        let two_g = Q::from_integer(BigInt::from(2 * setup.genus()));
        for n in 1..=n_max {
            let data = match ci_curve(setup, n) {
                Ok(data) => data,
                Err(e) => return self.fail("complete-intersection data", witness, format!("n = {n}: {e}")),
            };
            let closed = sub_slope_closed_form(setup, n).expect("valid setup");
            ensure!(
                self,
                data.sub_slope == closed,
                "degree expansion vs closed form",
                witness.clone(),
                "n = {n}: {} vs {closed}",
                data.sub_slope
            );
            let expected_gap = s_q.clone() * (two_g.clone() + data.epsilon_n.clone()) / Q::from_integer(n.into());
            ensure!(
                self,
                data.gap(setup) == expected_gap,
                "gap identity",
                witness.clone(),
                "n = {n}: gap {} vs s(2g+eps)/n = {expected_gap}",
                data.gap(setup)
            );
            ensure!(
                self,
                data.epsilon_n > Q::zero() && data.epsilon_n <= Q::one(),
                "epsilon range",
                witness.clone(),
                "n = {n}: epsilon_n = {}",
                data.epsilon_n
            );
        }
        for eps in [Q::one(), Q::new(1.into(), 10.into()), Q::new(1.into(), 100.into())] {
            let n = min_n_for_gap(setup, &eps).expect("positive eps");
            let gap = ci_curve(setup, n).expect("valid setup").gap(setup);
            ensure!(
                self,
                gap < eps,
                "gap bound",
                witness.clone(),
                "eps = {eps}: n = {n} leaves gap {gap}"
            );
        }
        true
    }

    /// Every setup with `2 <= r <= max_rank`, `1 <= s < r`, `g <= max_genus`
    /// and `|d| <= max_abs_degree`.
    pub fn check_setup_grid(&mut self, max_rank: usize, max_genus: u64, max_abs_degree: i64, n_max: u64) -> bool {
        for r in 2..=max_rank {
            for s in 1..r {
                for g in 0..=max_genus {
                    for d in -max_abs_degree..=max_abs_degree {
                        let setup = GrassmannSetup::new(r, BigInt::from(d), g, s).expect("grid is valid");
                        if !self.check_setup(&setup, n_max) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Audits one HN type, every Grassmann setup built from its rank, degree and
/// genus, and the standard setup grid.
pub fn audit_type<I: Scalar>(v: &HnType<I>) -> AuditSummary {
    let v = to_big(v);
    let mut auditor = Auditor::default();
    auditor.check_type(&v);
    if v.rank() >= 2 {
        for s in 1..v.rank() {
            let setup = GrassmannSetup::new(v.rank(), v.degree().clone(), v.genus(), s).expect("r >= 2");
            auditor.check_setup(&setup, 6);
        }
    }
    auditor.check_setup_grid(5, 3, 10, 6);
    auditor.into_summary()
}

/// Audits `count` random types drawn with seeds `seed, seed+1, ...` (rank at
/// most 12, block degrees at most 40 in absolute value), plus the standard
/// setup grid.
pub fn audit_random(seed: u64, count: usize) -> AuditSummary {
    let mut auditor = Auditor::default();
    for k in 0..count as u64 {
        let v = random_hn_type::<BigInt>(seed.wrapping_add(k), crate::oracles::ALLOCATION_RANK_BUDGET, 40);
        if !auditor.check_type(&v) {
            break;
        }
    }
    auditor.check_setup_grid(5, 3, 10, 6);
    auditor.into_summary()
}

fn to_big<I: Scalar>(v: &HnType<I>) -> HnType<BigInt> {
    HnType::new(
        v.genus(),
        v.blocks().iter().map(|b| (b.rank, b.degree.clone().into())),
    )
    .expect("conversion preserves validity")
}
