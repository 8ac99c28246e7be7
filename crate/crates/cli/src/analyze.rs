//! The per-shipment pipeline: route, rail cost difference, tariff charge,
//! inventory change, trade-off evaluation.

use entrain_core::inventory::{stock_quantities, StockReport};
use entrain_core::network::Route;
use entrain_core::railcost::{cost_breakdown, CostBreakdown};
use entrain_core::tariff::contract_tonnage;
use entrain_core::tradeoff::{
    classify, customer_surplus, evaluate, railroad_surplus, CaseLabel, TradeoffInputs,
    TradeoffOutcome,
};

use crate::error::CliError;
use crate::scenario::Scenario;

/// Everything computed for one shipment.
#[derive(Debug, Clone)]
pub struct ShipmentAnalysis {
    pub route: Route,
    pub breakdown: CostBreakdown,
    pub stock: StockReport,
    pub price: f64,
    pub outcome: TradeoffOutcome,
}

/// A shipment's analysis, or the reason it failed. Failures of one
/// shipment never abort the batch.
#[derive(Debug, Clone)]
pub struct AnalyzedShipment {
    pub id: String,
    pub result: Result<ShipmentAnalysis, String>,
}

/// Analyzes every shipment, in id order. Deterministic: the same scenario
/// always produces the same list.
pub fn analyze(scenario: &Scenario) -> Vec<AnalyzedShipment> {
    scenario
        .shipments
        .iter()
        .map(|shipment| AnalyzedShipment {
            id: shipment.id.clone(),
            result: analyze_one(scenario, &shipment.id),
        })
        .collect()
}

fn analyze_one(scenario: &Scenario, shipment_id: &str) -> Result<ShipmentAnalysis, String> {
    let shipment = scenario
        .shipments
        .iter()
        .find(|s| s.id == shipment_id)
        .expect("shipment ids come from the scenario");

    let route = scenario
        .network
        .shortest_path(&shipment.origin, &shipment.destination)
        .map_err(|err| err.to_string())?;
    let route = scenario
        .network
        .reclassification_set(&route, shipment.service_chain.as_ref())
        .map_err(|err| err.to_string())?;

    let breakdown = cost_breakdown(
        &scenario.cost_params,
        &route,
        &scenario.yards,
        shipment.demand.daily_cars,
        shipment.demand.contract_days,
    )
    .map_err(|err| err.to_string())?;

    let tonnage = contract_tonnage(&shipment.demand);
    let price = scenario
        .tariff
        .rail_charge(&shipment.category, route.distance_km, tonnage)
        .map_err(|err| err.to_string())?;

    let stock = stock_quantities(&shipment.demand).map_err(|err| err.to_string())?;

    let inputs = TradeoffInputs::new(breakdown.total, price, stock.inventory_cost)
        .map_err(|err| err.to_string())?;
    let outcome = evaluate(&inputs);

    Ok(ShipmentAnalysis { route, breakdown, stock, price, outcome })
}

/// Trade-off inputs of every successfully analyzed shipment, for
/// portfolio sweeps.
pub fn portfolio(analyzed: &[AnalyzedShipment]) -> Vec<TradeoffInputs> {
    analyzed
        .iter()
        .filter_map(|shipment| shipment.result.as_ref().ok())
        .map(|analysis| {
            TradeoffInputs::new(
                analysis.breakdown.total,
                analysis.price,
                analysis.stock.inventory_cost,
            )
            .expect("analysis only succeeds with valid inputs")
        })
        .collect()
}

/// One shipment evaluated at one explicit discount.
#[derive(Debug, Clone)]
pub struct Quote {
    pub shipment_id: String,
    pub beta: f64,
    pub price: f64,
    pub cost_saving: f64,
    pub inventory_cost: f64,
    pub railroad_surplus: f64,
    pub customer_surplus: f64,
    pub case: CaseLabel,
}

pub fn quote(scenario: &Scenario, shipment_id: &str, beta: f64) -> Result<Quote, CliError> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(CliError::BadRange(format!("beta {beta} is outside [0, 1]")));
    }
    let shipment = scenario
        .shipments
        .iter()
        .find(|s| s.id == shipment_id)
        .ok_or_else(|| CliError::UnknownShipment(shipment_id.to_string()))?;
    let analysis = analyze_one(scenario, &shipment.id)
        .map_err(|why| CliError::ShipmentNotQuotable { id: shipment.id.clone(), why })?;

    let inputs =
        TradeoffInputs::new(analysis.breakdown.total, analysis.price, analysis.stock.inventory_cost)
            .expect("analysis only succeeds with valid inputs");
    Ok(Quote {
        shipment_id: shipment.id.clone(),
        beta,
        price: analysis.price,
        cost_saving: analysis.breakdown.total,
        inventory_cost: analysis.stock.inventory_cost,
        railroad_surplus: railroad_surplus(&inputs, beta).expect("beta checked above"),
        customer_surplus: customer_surplus(&inputs, beta).expect("beta checked above"),
        case: classify(&inputs, beta).expect("beta checked above"),
    })
}
