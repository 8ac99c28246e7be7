//! The discount trade-off between the railroad and the customer.
//!
//! For one shipment, let `cost_saving` be the railroad's total saving from
//! running the entire train, `rail_charge` the undiscounted charge over
//! the contract and `inventory_cost` the customer's extra inventory cost.
//! At discount fraction `beta` of the charge:
//!
//! - the railroad keeps `cost_saving - beta * rail_charge`
//!   ([`railroad_surplus`]);
//! - the customer gains `beta * rail_charge - inventory_cost`
//!   ([`customer_surplus`]).
//!
//! Both parties accept when both surpluses are nonnegative, which happens
//! exactly for `beta` between `inventory_cost / rail_charge` and
//! `cost_saving / rail_charge`. [`classify`] names the four possible
//! outcomes at a given `beta`, [`feasible_interval`] computes the band,
//! [`recommend_beta`] splits the joint surplus evenly, and
//! [`adoption_curve`] sweeps a discount grid over a shipment portfolio.

use alloc::vec::Vec;
use core::fmt;

/// Monetary inputs of one shipment's trade-off, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TradeoffInputs {
    cost_saving: f64,
    rail_charge: f64,
    inventory_cost: f64,
}

impl TradeoffInputs {
    /// `rail_charge` must be positive and `inventory_cost` nonnegative;
    /// `cost_saving` may have either sign.
    pub fn new(
        cost_saving: f64,
        rail_charge: f64,
        inventory_cost: f64,
    ) -> Result<Self, TradeoffError> {
        if !cost_saving.is_finite() {
            return Err(TradeoffError::InvalidInputs("cost_saving must be finite"));
        }
        let charge_ok = rail_charge.is_finite() && rail_charge > 0.0;
        if !charge_ok {
            return Err(TradeoffError::InvalidInputs("rail_charge must be > 0"));
        }
        let inventory_ok = inventory_cost.is_finite() && inventory_cost >= 0.0;
        if !inventory_ok {
            return Err(TradeoffError::InvalidInputs("inventory_cost must be >= 0"));
        }
        Ok(TradeoffInputs { cost_saving, rail_charge, inventory_cost })
    }

    pub fn cost_saving(&self) -> f64 {
        self.cost_saving
    }

    pub fn rail_charge(&self) -> f64 {
        self.rail_charge
    }

    pub fn inventory_cost(&self) -> f64 {
        self.inventory_cost
    }
}

/// Outcome of offering a given discount for one shipment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// The switch costs the railroad money at any discount; it keeps
    /// running transfer trains.
    RailroadRefuses,
    /// The discount is too small to cover the customer's extra inventory.
    CustomerRefuses,
    /// The discount gives away more than the railroad saves.
    RailroadRefusesAtBeta,
    /// Both parties gain.
    WinWin,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::RailroadRefuses => "CASE1_RAILROAD_REFUSES",
            CaseLabel::CustomerRefuses => "CASE2_CUSTOMER_REFUSES",
            CaseLabel::RailroadRefusesAtBeta => "CASE3_RAILROAD_REFUSES_AT_BETA",
            CaseLabel::WinWin => "CASE4_WIN_WIN",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TradeoffError {
    BetaOutOfRange(f64),
    InvalidInputs(&'static str),
    EmptyPortfolio,
    UnsortedGrid,
}

impl fmt::Display for TradeoffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TradeoffError::BetaOutOfRange(beta) => {
                write!(f, "discount beta {beta} is outside [0, 1]")
            }
            TradeoffError::InvalidInputs(why) => write!(f, "invalid trade-off inputs: {why}"),
            TradeoffError::EmptyPortfolio => write!(f, "portfolio has no shipments"),
            TradeoffError::UnsortedGrid => write!(f, "beta grid must be sorted ascending"),
        }
    }
}

impl core::error::Error for TradeoffError {}

fn check_beta(beta: f64) -> Result<(), TradeoffError> {
    if (0.0..=1.0).contains(&beta) {
        Ok(())
    } else {
        Err(TradeoffError::BetaOutOfRange(beta))
    }
}

fn railroad_surplus_at(inputs: &TradeoffInputs, beta: f64) -> f64 {
    inputs.cost_saving - beta * inputs.rail_charge
}

fn customer_surplus_at(inputs: &TradeoffInputs, beta: f64) -> f64 {
    beta * inputs.rail_charge - inputs.inventory_cost
}

fn label_at(inputs: &TradeoffInputs, beta: f64) -> CaseLabel {
    if inputs.cost_saving < 0.0 {
        return CaseLabel::RailroadRefuses;
    }
    let railroad = railroad_surplus_at(inputs, beta);
    let customer = customer_surplus_at(inputs, beta);
    if railroad >= 0.0 && customer < 0.0 {
        CaseLabel::CustomerRefuses
    } else if railroad < 0.0 {
        // Covers both "discount too generous" and the empty-band state
        // where no discount satisfies either side.
        CaseLabel::RailroadRefusesAtBeta
    } else {
        CaseLabel::WinWin
    }
}

/// What the railroad keeps at discount `beta`: the cost saving minus the
/// discount granted.
pub fn railroad_surplus(inputs: &TradeoffInputs, beta: f64) -> Result<f64, TradeoffError> {
    check_beta(beta)?;
    Ok(railroad_surplus_at(inputs, beta))
}

/// What the customer gains at discount `beta`: the discount received minus
/// the extra inventory cost.
pub fn customer_surplus(inputs: &TradeoffInputs, beta: f64) -> Result<f64, TradeoffError> {
    check_beta(beta)?;
    Ok(customer_surplus_at(inputs, beta))
}

/// Classifies the offer at discount `beta` into exactly one case.
pub fn classify(inputs: &TradeoffInputs, beta: f64) -> Result<CaseLabel, TradeoffError> {
    check_beta(beta)?;
    Ok(label_at(inputs, beta))
}

/// The discount band acceptable to both parties.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleInterval {
    /// Smallest discount the customer accepts: `inventory_cost / rail_charge`.
    pub beta_min: f64,
    /// Largest discount the railroad accepts: `cost_saving / rail_charge`,
    /// clamped to [0, 1].
    pub beta_max: f64,
    pub feasible: bool,
}

/// Computes the feasible discount band. The band is nonempty exactly when
/// the railroad's saving is nonnegative, covers the customer's inventory
/// cost, and the compensating discount does not exceed the full charge.
pub fn feasible_interval(inputs: &TradeoffInputs) -> FeasibleInterval {
    let beta_min = inputs.inventory_cost / inputs.rail_charge;
    let beta_max = (inputs.cost_saving / inputs.rail_charge).clamp(0.0, 1.0);
    let feasible = inputs.cost_saving >= 0.0
        && inputs.cost_saving >= inputs.inventory_cost
        && beta_min <= 1.0;
    FeasibleInterval { beta_min, beta_max, feasible }
}

/// The equal-split discount: both surpluses equal half the joint surplus
/// `cost_saving - inventory_cost`. Returns `None` when no discount works.
/// Capped at 1 (a full rebate); past that point the railroad still gains
/// because its saving exceeds the whole charge.
pub fn recommend_beta(inputs: &TradeoffInputs) -> Option<f64> {
    let interval = feasible_interval(inputs);
    if !interval.feasible {
        return None;
    }
    let equal_split = (inputs.cost_saving + inputs.inventory_cost) / (2.0 * inputs.rail_charge);
    Some(equal_split.min(1.0))
}

/// A recommended discount with the surpluses it yields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recommendation {
    pub beta: f64,
    pub railroad_surplus: f64,
    pub customer_surplus: f64,
}

/// Full trade-off evaluation of one shipment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TradeoffOutcome {
    pub case: CaseLabel,
    pub beta_min: f64,
    pub beta_max: f64,
    pub feasible: bool,
    pub recommendation: Option<Recommendation>,
}

/// Evaluates the band, the recommended discount and the case label.
///
/// The label is taken at the recommended discount when one exists;
/// otherwise at the discount that would just compensate the customer
/// (capped at a full rebate), which shows why the deal fails.
pub fn evaluate(inputs: &TradeoffInputs) -> TradeoffOutcome {
    let interval = feasible_interval(inputs);
    let recommended = recommend_beta(inputs);
    let probe = recommended.unwrap_or_else(|| interval.beta_min.min(1.0));
    let case = label_at(inputs, probe);
    let recommendation = recommended.map(|beta| Recommendation {
        beta,
        railroad_surplus: railroad_surplus_at(inputs, beta),
        customer_surplus: customer_surplus_at(inputs, beta),
    });
    TradeoffOutcome {
        case,
        beta_min: interval.beta_min,
        beta_max: interval.beta_max,
        feasible: interval.feasible,
        recommendation,
    }
}

/// One row of an adoption sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdoptionPoint {
    pub beta: f64,
    /// Fraction of shipments the railroad would still offer at this
    /// discount (railroad surplus >= 0).
    pub offered_fraction: f64,
    /// Fraction of customers the discount fully compensates
    /// (customer surplus >= 0).
    pub adopting_fraction: f64,
    /// Fraction where both hold.
    pub win_win_fraction: f64,
}

/// Sweeps a sorted discount grid over a portfolio and reports, per grid
/// point, the fractions of shipments offered, adopting and win-win.
pub fn adoption_curve(
    portfolio: &[TradeoffInputs],
    betas: &[f64],
) -> Result<Vec<AdoptionPoint>, TradeoffError> {
    if portfolio.is_empty() {
        return Err(TradeoffError::EmptyPortfolio);
    }
    for beta in betas {
        check_beta(*beta)?;
    }
    if betas.windows(2).any(|pair| pair[0] > pair[1]) {
        return Err(TradeoffError::UnsortedGrid);
    }

    let total = portfolio.len() as f64;
    Ok(betas
        .iter()
        .map(|&beta| {
            let mut offered = 0usize;
            let mut adopting = 0usize;
            let mut win_win = 0usize;
            for inputs in portfolio {
                let railroad_ok = railroad_surplus_at(inputs, beta) >= 0.0;
                let customer_ok = customer_surplus_at(inputs, beta) >= 0.0;
                offered += usize::from(railroad_ok);
                adopting += usize::from(customer_ok);
                win_win += usize::from(railroad_ok && customer_ok);
            }
            AdoptionPoint {
                beta,
                offered_fraction: offered as f64 / total,
                adopting_fraction: adopting as f64 / total,
                win_win_fraction: win_win as f64 / total,
            }
        })
        .collect())
}
