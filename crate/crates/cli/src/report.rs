//! Machine-readable and human-readable views of an analysis.
//!
//! The JSON report keeps full float precision so downstream tooling sees
//! exactly what the engine computed; the table printed to stdout rounds
//! money to two decimals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analyze::{AnalyzedShipment, Quote};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShipmentReport {
    pub shipment_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<RouteReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost_breakdown: Option<CostReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stock: Option<StockSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub price: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tradeoff: Option<TradeoffReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RouteReport {
    pub nodes: Vec<String>,
    pub distance_km: f64,
    pub reclass_yards: Vec<String>,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    pub de_loading: f64,
    pub de_unloading: f64,
    pub de_reclassification: f64,
    pub de_car_miles: f64,
    pub de_total: f64,
    pub dg_reclassification: f64,
    pub dc_reclassification: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StockSummary {
    pub q_train: f64,
    pub q_daily: f64,
    pub interval_days: f64,
    pub s_train_per_day: f64,
    pub s_daily_per_day: f64,
    pub delta_s: f64,
    pub c_inventory_total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TradeoffReport {
    pub case_label: String,
    pub beta_min: f64,
    pub beta_max: f64,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_recommended: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dh_at_recommended: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dr_at_recommended: Option<f64>,
}

pub fn to_reports(analyzed: &[AnalyzedShipment]) -> Vec<ShipmentReport> {
    analyzed.iter().map(to_report).collect()
}

fn to_report(shipment: &AnalyzedShipment) -> ShipmentReport {
    match &shipment.result {
        Err(why) => ShipmentReport {
            shipment_id: shipment.id.clone(),
            error: Some(why.clone()),
            route: None,
            cost_breakdown: None,
            stock: None,
            price: None,
            tradeoff: None,
        },
        Ok(analysis) => ShipmentReport {
            shipment_id: shipment.id.clone(),
            error: None,
            route: Some(RouteReport {
                nodes: analysis.route.nodes.clone(),
                distance_km: analysis.route.distance_km,
                reclass_yards: analysis.route.reclass_yards.clone(),
                q: analysis.route.yard_count(),
            }),
            cost_breakdown: Some(CostReport {
                de_loading: analysis.breakdown.loading,
                de_unloading: analysis.breakdown.unloading,
                de_reclassification: analysis.breakdown.reclassification,
                de_car_miles: analysis.breakdown.car_miles,
                de_total: analysis.breakdown.total,
                dg_reclassification: analysis.breakdown.reclassification_hours,
                dc_reclassification: analysis.breakdown.reclassification_handling,
            }),
            stock: Some(StockSummary {
                q_train: analysis.stock.train_load,
                q_daily: analysis.stock.daily_load,
                interval_days: analysis.stock.interval_days,
                s_train_per_day: analysis.stock.avg_stock_train,
                s_daily_per_day: analysis.stock.avg_stock_daily,
                delta_s: analysis.stock.extra_stock_per_day,
                c_inventory_total: analysis.stock.inventory_cost,
            }),
            price: Some(analysis.price),
            tradeoff: Some(TradeoffReport {
                case_label: analysis.outcome.case.to_string(),
                beta_min: analysis.outcome.beta_min,
                beta_max: analysis.outcome.beta_max,
                feasible: analysis.outcome.feasible,
                beta_recommended: analysis.outcome.recommendation.map(|r| r.beta),
                dh_at_recommended: analysis.outcome.recommendation.map(|r| r.railroad_surplus),
                dr_at_recommended: analysis.outcome.recommendation.map(|r| r.customer_surplus),
            }),
        },
    }
}

/// The JSON document written by `analyze --out`: a newline-terminated
/// pretty array of shipment reports.
pub fn render_json(reports: &[ShipmentReport]) -> String {
    let mut text = serde_json::to_string_pretty(reports).expect("reports always serialize");
    text.push('\n');
    text
}

/// One line per shipment, money at two decimals.
pub fn render_table(reports: &[ShipmentReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<12} {:>9} {:>3} {:>16} {:>16} {:>14} {:>9} {:>9} {:>9}  case",
        "shipment", "km", "q", "dE", "P", "C_inv", "beta_min", "beta_max", "beta*"
    );
    for report in reports {
        match (&report.error, &report.route, &report.cost_breakdown, &report.stock, &report.tradeoff)
        {
            (Some(why), ..) => {
                let _ = writeln!(out, "{:<12} error: {why}", report.shipment_id);
            }
            (None, Some(route), Some(cost), Some(stock), Some(tradeoff)) => {
                let beta_star = tradeoff
                    .beta_recommended
                    .map(|beta| format!("{beta:>9.4}"))
                    .unwrap_or_else(|| format!("{:>9}", "-"));
                let _ = writeln!(
                    out,
                    "{:<12} {:>9.1} {:>3} {:>16.2} {:>16.2} {:>14.2} {:>9.4} {:>9.4} {}  {}",
                    report.shipment_id,
                    route.distance_km,
                    route.q,
                    cost.de_total,
                    report.price.unwrap_or(f64::NAN),
                    stock.c_inventory_total,
                    tradeoff.beta_min,
                    tradeoff.beta_max,
                    beta_star,
                    tradeoff.case_label,
                );
            }
            _ => {
                let _ = writeln!(out, "{:<12} (incomplete report)", report.shipment_id);
            }
        }
    }
    out
}

pub fn render_quote(quote: &Quote) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "shipment {} at beta = {}", quote.shipment_id, quote.beta);
    let _ = writeln!(out, "  rail charge P     = {:.2}", quote.price);
    let _ = writeln!(out, "  cost saving dE    = {:.2}", quote.cost_saving);
    let _ = writeln!(out, "  inventory cost C  = {:.2}", quote.inventory_cost);
    let _ = writeln!(out, "  railroad surplus  = {:.2}", quote.railroad_surplus);
    let _ = writeln!(out, "  customer surplus  = {:.2}", quote.customer_surplus);
    let _ = writeln!(out, "  case              = {}", quote.case);
    out
}
