//! The scenario file: one self-contained JSON document per what-if case.
//!
//! Top-level keys are `network` (with `nodes` and `links`), `yards`,
//! `tariff`, `cost_params` and `shipments`. Yard parameters live in their
//! own `yards` table keyed by node id; every `classification_yard` node
//! must have an entry there and nothing else may. All numbers are parsed
//! as 64-bit floats. Parsing is strict: unknown fields are rejected with
//! their location.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use entrain_core::inventory::DemandProfile;
use entrain_core::network::{Leg, Link, Network, Node, NodeKind, ServiceChain, YardParams};
use entrain_core::railcost::RailCostParams;
use entrain_core::tariff::{TariffCategory, TariffTable};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub network: NetworkSection,
    pub yards: BTreeMap<String, YardEntry>,
    pub tariff: TariffSection,
    pub cost_params: CostParamsEntry,
    pub shipments: Vec<ShipmentEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSection {
    pub nodes: Vec<NodeEntry>,
    pub links: Vec<LinkEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeEntry {
    pub id: String,
    pub kind: NodeKindEntry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKindEntry {
    LoadingStation,
    UnloadingStation,
    ClassificationYard,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkEntry {
    pub endpoints: (String, String),
    pub length: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YardEntry {
    pub t_broken_up: f64,
    pub t_classified: f64,
    pub c_classified: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TariffSection {
    pub categories: BTreeMap<String, CategoryEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryEntry {
    pub p1: f64,
    pub r2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostParamsEntry {
    pub gamma: f64,
    pub c_loading_extra: f64,
    pub c_unloading_extra: f64,
    #[serde(default)]
    pub dg_loading: f64,
    #[serde(default)]
    pub dg_unloading: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShipmentEntry {
    pub id: String,
    pub origin: String,
    pub destination: String,
    pub category: String,
    pub demand: DemandEntry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub service_chain: Option<Vec<LegEntry>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DemandEntry {
    pub q_car: f64,
    pub n_ij: f64,
    pub m_ij: f64,
    pub q_safety: f64,
    pub t_days: f64,
    pub c_inventory_unit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegEntry {
    pub from: String,
    pub to: String,
}

/// A fully validated scenario with every cross-reference resolved.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub network: Network,
    pub yards: BTreeMap<String, YardParams>,
    pub tariff: TariffTable,
    pub cost_params: RailCostParams,
    /// Sorted by shipment id; analysis order and report order.
    pub shipments: Vec<Shipment>,
}

#[derive(Debug, Clone)]
pub struct Shipment {
    pub id: String,
    pub origin: String,
    pub destination: String,
    pub category: String,
    pub demand: DemandProfile,
    pub service_chain: Option<ServiceChain>,
}

/// Reads, parses and validates a scenario file.
pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::read(path, source))?;
    let file: ScenarioFile = serde_json::from_str(&text)
        .map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    build_scenario(&file)
}

/// Validates a parsed scenario document and builds the typed form.
pub fn build_scenario(file: &ScenarioFile) -> Result<Scenario, CliError> {
    let invalid = |message: String| CliError::Validation(message);

    // Yard parameters are cross-checked against node kinds before the
    // network is built, so a mismatch names the offending node.
    let mut yard_nodes = BTreeMap::new();
    for node in &file.network.nodes {
        if node.kind == NodeKindEntry::ClassificationYard {
            yard_nodes.insert(node.id.clone(), ());
        }
    }
    for id in file.yards.keys() {
        if !yard_nodes.contains_key(id) {
            return Err(invalid(format!(
                "yards entry {id:?} does not name a classification_yard node"
            )));
        }
    }

    let mut yards = BTreeMap::new();
    let mut nodes = Vec::with_capacity(file.network.nodes.len());
    for node in &file.network.nodes {
        let kind = match node.kind {
            NodeKindEntry::LoadingStation => NodeKind::LoadingStation,
            NodeKindEntry::UnloadingStation => NodeKind::UnloadingStation,
            NodeKindEntry::ClassificationYard => {
                let entry = file.yards.get(&node.id).ok_or_else(|| {
                    invalid(format!(
                        "classification_yard {:?} has no entry in yards",
                        node.id
                    ))
                })?;
                let params = YardParams {
                    breakup_hours: entry.t_broken_up,
                    classify_hours: entry.t_classified,
                    classify_cost: entry.c_classified,
                };
                yards.insert(node.id.clone(), params);
                NodeKind::ClassificationYard(params)
            }
        };
        nodes.push(Node::new(node.id.clone(), kind));
    }

    let links = file
        .network
        .links
        .iter()
        .map(|link| Link::new(link.endpoints.0.clone(), link.endpoints.1.clone(), link.length))
        .collect();
    let network = Network::new(nodes, links).map_err(|err| invalid(err.to_string()))?;

    let categories = file
        .tariff
        .categories
        .iter()
        .map(|(id, entry)| {
            (id.clone(), TariffCategory { base_price: entry.p1, distance_rate: entry.r2 })
        })
        .collect();
    let tariff = TariffTable::new(categories).map_err(|err| invalid(err.to_string()))?;

    let cost_params = RailCostParams {
        time_value: file.cost_params.gamma,
        extra_loading_cost: file.cost_params.c_loading_extra,
        extra_unloading_cost: file.cost_params.c_unloading_extra,
        loading_time_diff: file.cost_params.dg_loading,
        unloading_time_diff: file.cost_params.dg_unloading,
    };
    cost_params.validate().map_err(|err| invalid(err.to_string()))?;

    let mut shipments = Vec::with_capacity(file.shipments.len());
    let mut seen_ids = BTreeMap::new();
    for entry in &file.shipments {
        if seen_ids.insert(entry.id.clone(), ()).is_some() {
            return Err(invalid(format!("duplicate shipment id {:?}", entry.id)));
        }
        if entry.origin == entry.destination {
            return Err(invalid(format!(
                "shipment {:?}: origin and destination are both {:?}",
                entry.id, entry.origin
            )));
        }
        for node in [&entry.origin, &entry.destination] {
            if network.node(node).is_none() {
                return Err(invalid(format!("shipment {:?}: unknown node {node:?}", entry.id)));
            }
        }
        if tariff.category(&entry.category).is_none() {
            return Err(invalid(format!(
                "shipment {:?}: unknown tariff category {:?}",
                entry.id, entry.category
            )));
        }
        let demand = DemandProfile {
            car_load: entry.demand.q_car,
            daily_cars: entry.demand.n_ij,
            train_cars: entry.demand.m_ij,
            safety_stock: entry.demand.q_safety,
            contract_days: entry.demand.t_days,
            unit_inventory_cost: entry.demand.c_inventory_unit,
        };
        demand
            .validate()
            .map_err(|err| invalid(format!("shipment {:?}: {err}", entry.id)))?;
        let service_chain = match &entry.service_chain {
            None => None,
            Some(legs) if legs.is_empty() => {
                return Err(invalid(format!(
                    "shipment {:?}: service_chain must not be empty",
                    entry.id
                )));
            }
            Some(legs) => Some(ServiceChain::new(
                legs.iter().map(|leg| Leg::new(leg.from.clone(), leg.to.clone())).collect(),
            )),
        };
        shipments.push(Shipment {
            id: entry.id.clone(),
            origin: entry.origin.clone(),
            destination: entry.destination.clone(),
            category: entry.category.clone(),
            demand,
            service_chain,
        });
    }
    shipments.sort_by(|a, b| a.id.cmp(&b.id));

    Ok(Scenario { network, yards, tariff, cost_params, shipments })
}
