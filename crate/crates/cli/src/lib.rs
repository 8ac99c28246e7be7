//! Scenario loading, analysis orchestration and report emission around
//! [`entrain_core`].

pub mod adoption;
pub mod analyze;
pub mod error;
pub mod report;
pub mod scenario;

pub use analyze::{analyze, portfolio, quote, AnalyzedShipment, Quote, ShipmentAnalysis};
pub use error::CliError;
pub use report::{render_json, render_quote, render_table, to_reports, ShipmentReport};
pub use scenario::{build_scenario, load_scenario, Scenario, ScenarioFile, Shipment};
