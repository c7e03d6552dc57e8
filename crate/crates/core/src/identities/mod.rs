//! Registry of symbolic identity checks. Each identity is assembled as two
//! sums of truncated series and compared coefficient by coefficient with
//! exact rational-function equality.

mod classical;
mod coefficient;
mod matrix;
mod transform;

pub use classical::{
    check_coogan_ono, check_lemma13, check_rogers_fine, coogan_ono_sides, lemma13_sides, rogers_fine_sides,
    RogersFineParams,
};
pub use coefficient::{check_1psi1_coeff, check_floor_sum, floor_sum_sides, psi_coeff_sides};
pub use matrix::{
    b_column_peel, b_eq_aq_consistency, b_zero_consistency, carlitz_consistency, column_functional, coogan_ono_expansion,
    dual_path_coefficients, dual_path_entries, finite_gf, gn_specialization, homogeneity, inverse_pair, k0_identity,
    polynomial_f, recurrence, sn_divisibility, three_term, DUAL_PATH_CASES,
};
pub use transform::{
    check_2phi1_to_4phi3, check_coro_tlnew, check_partial_theta, check_theorem16, coro_tlnew_sides,
    partial_theta_sides, theorem16_sides, two_phi_one_sides,
};

use serde::Serialize;

use crate::coeffring::RatFun;
use crate::error::Result;
use crate::exec::Exec;
use crate::series::{QCtx, TruncSeries};

/// First coefficient (or entry) at which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Failure {
    pub fn new(index: usize, lhs: &RatFun, rhs: &RatFun) -> Self {
        Failure { index, lhs: lhs.to_string(), rhs: rhs.to_string(), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub parameters: Vec<(String, String)>,
    pub order: usize,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

impl IdentityReport {
    pub fn from_outcome(name: &str, parameters: Vec<(String, String)>, order: usize, failure: Option<Failure>) -> Self {
        IdentityReport { name: name.to_string(), parameters, order, passed: failure.is_none(), first_failure: failure }
    }

    fn from_error(name: &str, order: usize, err: &crate::Error) -> Self {
        let f = Failure { index: 0, lhs: String::new(), rhs: String::new(), note: Some(format!("error: {err}")) };
        Self::from_outcome(name, Vec::new(), order, Some(f))
    }
}

/// Both sides of an identity as sums of series terms of a common order.
#[derive(Clone, Debug)]
pub struct Sides {
    pub lhs: Vec<TruncSeries>,
    pub rhs: Vec<TruncSeries>,
}

fn sum(terms: &[TruncSeries]) -> TruncSeries {
    TruncSeries::checked_sum(terms).expect("terms share one symbol table")
}

impl Sides {
    pub fn new(lhs: Vec<TruncSeries>, rhs: Vec<TruncSeries>) -> Self {
        assert!(!lhs.is_empty() && !rhs.is_empty());
        Sides { lhs, rhs }
    }

    pub fn lhs_sum(&self) -> TruncSeries {
        sum(&self.lhs)
    }

    pub fn rhs_sum(&self) -> TruncSeries {
        sum(&self.rhs)
    }

    pub fn compare(&self) -> Option<Failure> {
        let l = self.lhs_sum();
        let r = self.rhs_sum();
        l.first_difference(&r).map(|i| Failure::new(i, &l.coeff(i), &r.coeff(i)))
    }

    pub fn terms(&self, side: Side) -> &[TruncSeries] {
        match side {
            Side::Lhs => &self.lhs,
            Side::Rhs => &self.rhs,
        }
    }

    /// Copy with term `j` of `side` multiplied by `1 + q`.
    pub fn perturbed(&self, ctx: &QCtx, side: Side, j: usize) -> Sides {
        let mut out = self.clone();
        let terms = match side {
            Side::Lhs => &mut out.lhs,
            Side::Rhs => &mut out.rhs,
        };
        terms[j] = terms[j].scalar_mul(&(&ctx.one() + ctx.q()));
        out
    }

    pub fn substitute(&self, assignments: &[(crate::Symbol, RatFun)]) -> Result<Sides> {
        let map = |v: &[TruncSeries]| v.iter().map(|t| t.substitute(assignments)).collect::<Result<Vec<_>>>();
        Ok(Sides { lhs: map(&self.lhs)?, rhs: map(&self.rhs)? })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// A built identity: its context, parameter description and sides.
pub struct Built {
    pub ctx: QCtx,
    pub parameters: Vec<(String, String)>,
    pub sides: Sides,
}

impl Built {
    pub fn report(&self, name: &str, order: usize) -> IdentityReport {
        IdentityReport::from_outcome(name, self.parameters.clone(), order, self.sides.compare())
    }
}

/// Outcome of a property check that is not phrased as two series.
pub struct PropertyOutcome {
    pub parameters: Vec<(String, String)>,
    pub failure: Option<Failure>,
}

/// Inputs shared by every registered check.
#[derive(Clone, Copy, Debug)]
pub struct CheckInput {
    pub order: usize,
    pub seed: u64,
}

#[derive(Clone, Copy)]
pub enum CheckBody {
    Series(fn(&CheckInput) -> Result<Built>),
    Property(fn(&CheckInput) -> Result<PropertyOutcome>),
}

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub body: CheckBody,
    /// Largest order this check runs at; the report states the order used.
    pub max_order: Option<usize>,
}

/// `coro_tlnew_r1` carries six symbols and grows about 4.5x per order.
pub const CORO_R1_MAX_ORDER: usize = 7;

impl Check {
    pub fn effective_order(&self, order: usize) -> usize {
        self.max_order.map_or(order, |m| order.min(m))
    }

    pub fn run(&self, input: &CheckInput) -> IdentityReport {
        let input = &CheckInput { order: self.effective_order(input.order), seed: input.seed };
        match self.body {
            CheckBody::Series(build) => match build(input) {
                Ok(b) => b.report(self.name, input.order),
                Err(e) => IdentityReport::from_error(self.name, input.order, &e),
            },
            CheckBody::Property(f) => match f(input) {
                Ok(o) => IdentityReport::from_outcome(self.name, o.parameters, input.order, o.failure),
                Err(e) => IdentityReport::from_error(self.name, input.order, &e),
            },
        }
    }
}

/// Every registered check, sorted by name.
pub fn registry() -> Vec<Check> {
    use CheckBody::{Property, Series};
    let mut v = vec![
        Check { name: "coogan_ono", body: Series(|i| classical::coogan_ono_built(i.order)), max_order: None },
        Check { name: "lemma13", body: Series(|i| classical::lemma13_built(i.order)), max_order: None },
        Check { name: "rogers_fine", body: Series(|i| classical::rogers_fine_built(i.order)), max_order: None },
        Check { name: "rf_at_aq_z_negb", body: Series(|i| classical::rf_coogan_ono_built(i.order)), max_order: None },
        Check { name: "rf_at_a_z_negb", body: Series(|i| classical::rf_lemma13_built(i.order)), max_order: None },
        Check { name: "theorem16_unit", body: Series(|i| transform::theorem16_unit_built(i.order)), max_order: None },
        Check { name: "theorem16_3phi2", body: Series(|i| transform::theorem16_3phi2_built(i.order)), max_order: None },
        Check { name: "theorem16_random", body: Series(|i| transform::theorem16_random_built(i.order, i.seed)), max_order: None },
        Check { name: "coro_tlnew_r0", body: Series(|i| transform::coro_tlnew_r0_built(i.order)), max_order: None },
        Check { name: "coro_tlnew_upper_q", body: Series(|i| transform::coro_tlnew_upper_q_built(i.order)), max_order: None },
        Check {
            name: "coro_tlnew_r1",
            body: Series(|i| transform::coro_tlnew_r1_built(i.order)),
            max_order: Some(CORO_R1_MAX_ORDER),
        },
        Check { name: "2phi1_to_4phi3", body: Series(|i| transform::two_phi_one_built(i.order, false)), max_order: None },
        Check { name: "2phi1_to_4phi3_a_eq_c", body: Series(|i| transform::two_phi_one_built(i.order, true)), max_order: None },
        Check { name: "partial_theta", body: Series(|i| transform::partial_theta_built(i.order)), max_order: None },
        Check { name: "1psi1_coeff", body: Series(|i| coefficient::psi_coeff_built(i.order)), max_order: None },
        Check { name: "floor_sum", body: Series(|i| coefficient::floor_sum_built(i.order)), max_order: None },
        Check { name: "matrix_inverse_pair", body: Property(|i| inverse_pair(i.order)), max_order: None },
        Check { name: "matrix_dual_path_coeffs", body: Property(|i| dual_path_coefficients(i.order, i.seed, DUAL_PATH_CASES)), max_order: None },
        Check { name: "matrix_dual_path_entries", body: Property(|i| dual_path_entries(i.order)), max_order: None },
        Check { name: "matrix_b_column_peel", body: Property(|i| b_column_peel(i.order)), max_order: None },
        Check { name: "matrix_recurrence", body: Property(|i| recurrence(i.order)), max_order: None },
        Check { name: "matrix_three_term", body: Property(|i| three_term(i.order)), max_order: None },
        Check { name: "matrix_column_functional", body: Property(|i| column_functional(i.order, 6)), max_order: None },
        Check { name: "matrix_finite_gf", body: Property(|i| finite_gf(i.order.min(8))), max_order: None },
        Check { name: "matrix_sn_divisibility", body: Property(|i| sn_divisibility(i.order.min(6))), max_order: None },
        Check { name: "matrix_homogeneity", body: Property(|i| homogeneity(i.order)), max_order: None },
        Check { name: "matrix_k0_identity", body: Property(|i| k0_identity(i.order)), max_order: None },
        Check { name: "matrix_gn_specialization", body: Property(|i| gn_specialization(i.order)), max_order: None },
        Check { name: "expansion_carlitz", body: Property(|i| carlitz_consistency(i.order, i.seed)), max_order: None },
        Check { name: "expansion_b_zero", body: Property(|i| b_zero_consistency(i.order, i.seed)), max_order: None },
        Check { name: "expansion_b_eq_aq", body: Property(|i| b_eq_aq_consistency(i.order, i.seed)), max_order: None },
        Check { name: "expansion_polynomial_f", body: Property(|i| polynomial_f(i.order)), max_order: None },
        Check { name: "expansion_coogan_ono", body: Property(|i| coogan_ono_expansion(i.order)), max_order: None },
    ];
    v.sort_by_key(|c| c.name);
    v
}

pub fn names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name).collect()
}

pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name == name)
}

/// Runs every registered check whose name contains `filter`, in name order.
pub fn run_all(order: usize, filter: Option<&str>, seed: u64, mode: Exec) -> Vec<IdentityReport> {
    let checks: Vec<Check> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f)))
        .collect();
    run_checks(&checks, CheckInput { order, seed }, mode)
}

pub fn run_checks(checks: &[Check], input: CheckInput, mode: Exec) -> Vec<IdentityReport> {
    mode.map(checks.to_vec(), |c| c.run(&input))
}

/// Builder for the series-type check `name`, if there is one.
pub fn series_builder(name: &str) -> Option<fn(&CheckInput) -> Result<Built>> {
    match find(name)?.body {
        CheckBody::Series(b) => Some(b),
        CheckBody::Property(_) => None,
    }
}

pub(crate) fn symbolic_params(names: &[&str]) -> Vec<(String, String)> {
    names.iter().map(|n| (n.to_string(), n.to_string())).collect()
}
