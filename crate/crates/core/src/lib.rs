//! Decision engine for low-frequency entire-train service.
//!
//! A railroad can move a small shipment either by transfer transportation
//! (a chain of train services with re-sorting at classification yards) or
//! by a dedicated entire train dispatched every few days. The entire train
//! saves the railroad reclassification time and handling cost but raises
//! the customer's average inventory. This crate computes both sides of
//! that trade and the rail-charge discount that makes the switch worth it
//! for both parties:
//!
//! - [`network`]: the rail network, shortest-path routing and the set of
//!   yards where a transfer shipment is reclassified.
//! - [`inventory`]: sawtooth stock quantities under train vs. daily
//!   delivery, plus a discrete trajectory simulator used as an oracle.
//! - [`railcost`]: the railroad's cost-and-time difference between the
//!   two modes, decomposed into loading, unloading, reclassification and
//!   car-miles terms.
//! - [`tariff`]: the two-part distance tariff and contract tonnage.
//! - [`tradeoff`]: surplus functions of the discount parameter, the
//!   feasible discount interval, case classification and portfolio
//!   adoption curves.
//!
//! The crate is `no_std` (with `alloc`) and all operations are pure;
//! values are freely shared across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod inventory;
pub mod network;
pub mod railcost;
pub mod tariff;
pub mod tradeoff;

pub use inventory::{simulate_stock, stock_quantities, DemandProfile, StockReport};
pub use network::{Leg, Link, Network, Node, NodeKind, Route, ServiceChain, YardParams};
pub use railcost::{cost_breakdown, CostBreakdown, RailCostParams};
pub use tariff::{contract_tonnage, TariffCategory, TariffTable};
pub use tradeoff::{
    adoption_curve, classify, customer_surplus, evaluate, feasible_interval, railroad_surplus,
    recommend_beta, AdoptionPoint, CaseLabel, FeasibleInterval, Recommendation, TradeoffInputs,
    TradeoffOutcome,
};
