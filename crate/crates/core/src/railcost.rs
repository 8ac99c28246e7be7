//! The railroad's cost-and-time difference between transfer transportation
//! and a low-frequency entire train.
//!
//! Switching a shipment to an entire train removes every reclassification
//! on its route (a saving in both car-hours and handling cost) and adds a
//! small extra loading and unloading cost at the terminals. Saved time is
//! converted to money at `time_value` yuan per car-hour. Car-miles cost is
//! carried as an explicit zero: both modes run the same distance.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::network::{Route, YardParams};

/// Terminal-cost and time-conversion parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RailCostParams {
    /// Conversion between saved car-hours and money, yuan per car-hour.
    pub time_value: f64,
    /// Extra loading cost of entire-train operation, yuan per car.
    pub extra_loading_cost: f64,
    /// Extra unloading cost of entire-train operation, yuan per car.
    pub extra_unloading_cost: f64,
    /// Loading-time difference over the contract, car-hours. Usually zero:
    /// empty cars are supplied in groups either way.
    pub loading_time_diff: f64,
    /// Unloading-time difference over the contract, car-hours. Usually zero.
    pub unloading_time_diff: f64,
}

impl RailCostParams {
    pub fn validate(&self) -> Result<(), RailCostError> {
        let ok = self.time_value >= 0.0
            && self.extra_loading_cost >= 0.0
            && self.extra_unloading_cost >= 0.0
            && self.loading_time_diff.is_finite()
            && self.unloading_time_diff.is_finite();
        if ok {
            Ok(())
        } else {
            Err(RailCostError::InvalidParams)
        }
    }
}

/// The cost difference decomposed by source, in yuan. Positive terms favor
/// the entire train.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostBreakdown {
    pub loading: f64,
    pub unloading: f64,
    pub reclassification: f64,
    /// Always zero: car-miles cost is equal across the two modes.
    pub car_miles: f64,
    pub total: f64,
    /// Saved reclassification time over the contract, car-hours.
    pub reclassification_hours: f64,
    /// Saved intermediate handling cost over the contract, yuan.
    pub reclassification_handling: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RailCostError {
    UnknownYard(String),
    InvalidParams,
}

impl fmt::Display for RailCostError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RailCostError::UnknownYard(id) => {
                write!(f, "no yard parameters for {id:?}")
            }
            RailCostError::InvalidParams => {
                write!(f, "rail cost parameters must be nonnegative and finite")
            }
        }
    }
}

impl core::error::Error for RailCostError {}

/// Car-hours of reclassification delay saved over the contract: every car
/// of every shipment-day skips the breakup and sorting delay at each yard
/// in the route's reclassification set.
pub fn reclass_time_saving(
    route: &Route,
    yards: &BTreeMap<String, YardParams>,
    daily_cars: f64,
    contract_days: f64,
) -> Result<f64, RailCostError> {
    let delay: f64 = route_yard_sum(route, yards, YardParams::delay_hours)?;
    Ok(contract_days * daily_cars * delay)
}

/// Yuan of intermediate handling saved over the contract.
pub fn reclass_cost_saving(
    route: &Route,
    yards: &BTreeMap<String, YardParams>,
    daily_cars: f64,
    contract_days: f64,
) -> Result<f64, RailCostError> {
    let handling: f64 = route_yard_sum(route, yards, |params| params.classify_cost)?;
    Ok(contract_days * daily_cars * handling)
}

/// Full cost difference of running the entire train instead of transfer
/// transportation for one shipment over its contract.
///
/// Loading and unloading contribute the (usually zero) time difference at
/// the conversion rate minus the per-car extra cost over all contract
/// cars; reclassification contributes the converted time saving plus the
/// handling saving; car-miles contributes zero.
pub fn cost_breakdown(
    params: &RailCostParams,
    route: &Route,
    yards: &BTreeMap<String, YardParams>,
    daily_cars: f64,
    contract_days: f64,
) -> Result<CostBreakdown, RailCostError> {
    params.validate()?;
    let contract_cars = contract_days * daily_cars;
    let loading = params.time_value * params.loading_time_diff
        - params.extra_loading_cost * contract_cars;
    let unloading = params.time_value * params.unloading_time_diff
        - params.extra_unloading_cost * contract_cars;
    let reclassification_hours = reclass_time_saving(route, yards, daily_cars, contract_days)?;
    let reclassification_handling = reclass_cost_saving(route, yards, daily_cars, contract_days)?;
    let reclassification =
        params.time_value * reclassification_hours + reclassification_handling;
    let car_miles = 0.0;
    Ok(CostBreakdown {
        loading,
        unloading,
        reclassification,
        car_miles,
        total: loading + unloading + reclassification + car_miles,
        reclassification_hours,
        reclassification_handling,
    })
}

fn route_yard_sum(
    route: &Route,
    yards: &BTreeMap<String, YardParams>,
    value: impl Fn(&YardParams) -> f64,
) -> Result<f64, RailCostError> {
    let mut sum = 0.0;
    for id in &route.reclass_yards {
        let params = yards
            .get(id)
            .ok_or_else(|| RailCostError::UnknownYard(id.clone()))?;
        sum += value(params);
    }
    Ok(sum)
}
