//! Rail network model: stations, classification yards, links and routing.
//!
//! The network is an undirected graph built once and then queried.
//! [`Network::shortest_path`] returns the minimum-length route between two
//! nodes; ties are broken by the lexicographically smallest node-id
//! sequence so repeated runs over the same scenario are byte-identical.
//! [`Network::reclassification_set`] refines a route with the yards where
//! a transfer shipment is actually re-sorted, either every intermediate
//! yard (the default) or only the junctions of an explicit service chain.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Per-car processing parameters of a classification yard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YardParams {
    /// Hours to break an inbound train up, per car batch.
    pub breakup_hours: f64,
    /// Hours to sort the cars into outbound trains.
    pub classify_hours: f64,
    /// Handling cost per car, in yuan.
    pub classify_cost: f64,
}

impl YardParams {
    /// Total intermediate delay a car accrues at this yard, in hours.
    pub fn delay_hours(&self) -> f64 {
        self.breakup_hours + self.classify_hours
    }

    fn is_valid(&self) -> bool {
        self.breakup_hours >= 0.0 && self.classify_hours >= 0.0 && self.classify_cost >= 0.0
    }
}

/// What a node does in the network.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    LoadingStation,
    UnloadingStation,
    ClassificationYard(YardParams),
}

impl NodeKind {
    pub fn is_yard(&self) -> bool {
        matches!(self, NodeKind::ClassificationYard(_))
    }
}

/// A station or classification yard.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
}

impl Node {
    pub fn new(id: impl Into<String>, kind: NodeKind) -> Self {
        Node { id: id.into(), kind }
    }
}

/// An undirected track segment between two nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub a: String,
    pub b: String,
    pub length_km: f64,
}

impl Link {
    pub fn new(a: impl Into<String>, b: impl Into<String>, length_km: f64) -> Self {
        Link { a: a.into(), b: b.into(), length_km }
    }
}

/// A routed origin-destination path.
///
/// `reclass_yards` lists the intermediate classification yards where a
/// transfer shipment is re-sorted, in route order. Its length is the
/// reclassification count `q` used by the rail cost model.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub nodes: Vec<String>,
    pub distance_km: f64,
    pub reclass_yards: Vec<String>,
}

impl Route {
    /// Number of yards where the shipment is reclassified.
    pub fn yard_count(&self) -> usize {
        self.reclass_yards.len()
    }

    pub fn origin(&self) -> &str {
        self.nodes.first().map(String::as_str).unwrap_or("")
    }

    pub fn destination(&self) -> &str {
        self.nodes.last().map(String::as_str).unwrap_or("")
    }
}

/// One train-service leg of a transfer movement.
#[derive(Debug, Clone, PartialEq)]
pub struct Leg {
    pub from: String,
    pub to: String,
}

impl Leg {
    pub fn new(from: impl Into<String>, to: impl Into<String>) -> Self {
        Leg { from: from.into(), to: to.into() }
    }
}

/// An ordered list of train-service legs covering a route end to end.
///
/// Consecutive legs must meet at a shared node; those interior junctions
/// are where the shipment changes trains, so a junction that is a
/// classification yard is a reclassification point. Yards that a leg
/// passes over without stopping are bypassed.
#[derive(Debug, Clone, PartialEq)]
pub struct ServiceChain {
    pub legs: Vec<Leg>,
}

impl ServiceChain {
    pub fn new(legs: Vec<Leg>) -> Self {
        ServiceChain { legs }
    }
}

/// Errors raised while building or querying a network.
#[derive(Debug, Clone, PartialEq)]
pub enum NetworkError {
    DuplicateNodeId(String),
    DanglingLinkEndpoint(String),
    NonPositiveLength { a: String, b: String, length_km: f64 },
    SelfLoop(String),
    InvalidYardParams(String),
    UnknownNode(String),
    Unreachable { origin: String, destination: String },
    ChainNotOnRoute(String),
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkError::DuplicateNodeId(id) => write!(f, "duplicate node id {id:?}"),
            NetworkError::DanglingLinkEndpoint(id) => {
                write!(f, "link endpoint {id:?} is not a node")
            }
            NetworkError::NonPositiveLength { a, b, length_km } => {
                write!(f, "link {a:?}-{b:?} has length {length_km}; length must be > 0")
            }
            NetworkError::SelfLoop(id) => write!(f, "link {id:?}-{id:?} joins a node to itself"),
            NetworkError::InvalidYardParams(id) => {
                write!(f, "yard {id:?} has a negative time or cost parameter")
            }
            NetworkError::UnknownNode(id) => write!(f, "unknown node {id:?}"),
            NetworkError::Unreachable { origin, destination } => {
                write!(f, "no path from {origin:?} to {destination:?}")
            }
            NetworkError::ChainNotOnRoute(why) => write!(f, "service chain not on route: {why}"),
        }
    }
}

impl core::error::Error for NetworkError {}

/// An immutable rail network. All queries are pure.
#[derive(Debug, Clone)]
pub struct Network {
    nodes: Vec<Node>,
    index: BTreeMap<String, usize>,
    /// Neighbor index -> shortest link length between the pair.
    adjacency: Vec<BTreeMap<usize, f64>>,
}

impl Network {
    /// Builds a network from nodes and undirected links.
    ///
    /// Parallel links between the same pair of nodes are collapsed to the
    /// shortest one; routing never uses a longer parallel track.
    pub fn new(nodes: Vec<Node>, links: Vec<Link>) -> Result<Self, NetworkError> {
        let mut index = BTreeMap::new();
        for (i, node) in nodes.iter().enumerate() {
            if index.insert(node.id.clone(), i).is_some() {
                return Err(NetworkError::DuplicateNodeId(node.id.clone()));
            }
            if let NodeKind::ClassificationYard(params) = &node.kind {
                if !params.is_valid() {
                    return Err(NetworkError::InvalidYardParams(node.id.clone()));
                }
            }
        }

        let mut adjacency = vec![BTreeMap::new(); nodes.len()];
        for link in &links {
            let a = *index
                .get(&link.a)
                .ok_or_else(|| NetworkError::DanglingLinkEndpoint(link.a.clone()))?;
            let b = *index
                .get(&link.b)
                .ok_or_else(|| NetworkError::DanglingLinkEndpoint(link.b.clone()))?;
            if a == b {
                return Err(NetworkError::SelfLoop(link.a.clone()));
            }
            let positive = link.length_km.is_finite() && link.length_km > 0.0;
            if !positive {
                return Err(NetworkError::NonPositiveLength {
                    a: link.a.clone(),
                    b: link.b.clone(),
                    length_km: link.length_km,
                });
            }
            insert_min(&mut adjacency[a], b, link.length_km);
            insert_min(&mut adjacency[b], a, link.length_km);
        }

        Ok(Network { nodes, index, adjacency })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.index.get(id).map(|&i| &self.nodes[i])
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes.iter()
    }

    /// Number of distinct undirected edges.
    pub fn link_count(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    /// Neighbors of a node with the link length to each.
    pub fn neighbors<'a>(&'a self, id: &str) -> Option<impl Iterator<Item = (&'a str, f64)>> {
        let &i = self.index.get(id)?;
        Some(self.adjacency[i].iter().map(move |(&j, &len)| (self.nodes[j].id.as_str(), len)))
    }

    /// Processing parameters of a classification yard, if `id` is one.
    pub fn yard_params(&self, id: &str) -> Option<&YardParams> {
        match &self.node(id)?.kind {
            NodeKind::ClassificationYard(params) => Some(params),
            _ => None,
        }
    }

    /// All yard parameters keyed by node id.
    pub fn yard_params_map(&self) -> BTreeMap<String, YardParams> {
        self.nodes
            .iter()
            .filter_map(|node| match &node.kind {
                NodeKind::ClassificationYard(params) => Some((node.id.clone(), *params)),
                _ => None,
            })
            .collect()
    }

    /// Shortest route from `origin` to `destination`.
    ///
    /// Among routes of equal minimum length the lexicographically smallest
    /// node-id sequence is returned. The route's `reclass_yards` is
    /// initialized to every intermediate classification yard; apply
    /// [`Network::reclassification_set`] with a service chain to model
    /// bypassed yards.
    pub fn shortest_path(&self, origin: &str, destination: &str) -> Result<Route, NetworkError> {
        let source = self.resolve(origin)?;
        let target = self.resolve(destination)?;
        if source == target {
            return Ok(Route {
                nodes: vec![self.nodes[source].id.clone()],
                distance_km: 0.0,
                reclass_yards: Vec::new(),
            });
        }

        let (dist, parent) = self.dijkstra(source);
        if dist[target].is_infinite() {
            return Err(NetworkError::Unreachable {
                origin: origin.to_string(),
                destination: destination.to_string(),
            });
        }

        let path = self
            .lexicographic_shortest(source, target, &dist)
            .unwrap_or_else(|| parent_chain(&parent, source, target));

        let nodes: Vec<String> = path.iter().map(|&i| self.nodes[i].id.clone()).collect();
        let reclass_yards = self.intermediate_yards(&nodes);
        Ok(Route { nodes, distance_km: dist[target], reclass_yards })
    }

    /// Recomputes the reclassification set of a route.
    ///
    /// Without a chain every intermediate classification yard handles the
    /// shipment. With a chain only the interior leg junctions that are
    /// classification yards do; yards inside a leg are bypassed by that
    /// direct service. The route's nodes and distance are unchanged.
    pub fn reclassification_set(
        &self,
        route: &Route,
        chain: Option<&ServiceChain>,
    ) -> Result<Route, NetworkError> {
        let reclass_yards = match chain {
            None => self.intermediate_yards(&route.nodes),
            Some(chain) => {
                let junctions = chain_junctions(route, chain)?;
                junctions
                    .into_iter()
                    .filter(|id| self.node(id).is_some_and(|node| node.kind.is_yard()))
                    .collect()
            }
        };
        Ok(Route {
            nodes: route.nodes.clone(),
            distance_km: route.distance_km,
            reclass_yards,
        })
    }

    fn resolve(&self, id: &str) -> Result<usize, NetworkError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| NetworkError::UnknownNode(id.to_string()))
    }

    fn intermediate_yards(&self, nodes: &[String]) -> Vec<String> {
        if nodes.len() < 3 {
            return Vec::new();
        }
        nodes[1..nodes.len() - 1]
            .iter()
            .filter(|id| self.node(id).is_some_and(|node| node.kind.is_yard()))
            .cloned()
            .collect()
    }

    fn dijkstra(&self, source: usize) -> (Vec<f64>, Vec<usize>) {
        let n = self.nodes.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut parent = vec![usize::MAX; n];
        let mut settled = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(QueueEntry { dist: 0.0, node: source });

        while let Some(QueueEntry { node, .. }) = heap.pop() {
            if settled[node] {
                continue;
            }
            settled[node] = true;
            for (&next, &len) in &self.adjacency[node] {
                let candidate = dist[node] + len;
                if candidate < dist[next] {
                    dist[next] = candidate;
                    parent[next] = node;
                    heap.push(QueueEntry { dist: candidate, node: next });
                }
            }
        }
        (dist, parent)
    }

    /// Walks the tight-edge DAG from the source, always taking the
    /// smallest node id that still reaches the target on a shortest path.
    /// Returns `None` only if float absorption creates a tight cycle, in
    /// which case the caller falls back to the Dijkstra parent chain.
    fn lexicographic_shortest(
        &self,
        source: usize,
        target: usize,
        dist: &[f64],
    ) -> Option<Vec<usize>> {
        let n = self.nodes.len();

        // An edge (u, v) is tight when it lies on some shortest path from
        // the source. Mark every node that can still reach the target over
        // tight edges.
        let mut reaches_target = vec![false; n];
        reaches_target[target] = true;
        let mut stack = vec![target];
        while let Some(v) = stack.pop() {
            for (&u, &len) in &self.adjacency[v] {
                if !reaches_target[u] && dist[u].is_finite() && dist[u] + len == dist[v] {
                    reaches_target[u] = true;
                    stack.push(u);
                }
            }
        }

        let mut path = vec![source];
        let mut visited = vec![false; n];
        visited[source] = true;
        let mut current = source;
        for _ in 0..n {
            if current == target {
                return Some(path);
            }
            let next = self.adjacency[current]
                .iter()
                .filter(|&(&v, &len)| {
                    !visited[v] && reaches_target[v] && dist[current] + len == dist[v]
                })
                .map(|(&v, _)| v)
                .min_by(|&a, &b| self.nodes[a].id.cmp(&self.nodes[b].id))?;
            visited[next] = true;
            path.push(next);
            current = next;
        }
        None
    }
}

fn insert_min(adjacency: &mut BTreeMap<usize, f64>, neighbor: usize, length_km: f64) {
    adjacency
        .entry(neighbor)
        .and_modify(|len| {
            if length_km < *len {
                *len = length_km;
            }
        })
        .or_insert(length_km);
}

fn parent_chain(parent: &[usize], source: usize, target: usize) -> Vec<usize> {
    let mut path = vec![target];
    let mut current = target;
    while current != source {
        current = parent[current];
        path.push(current);
    }
    path.reverse();
    path
}

/// Validates a chain against a route and returns the interior junction
/// node ids in route order.
fn chain_junctions(route: &Route, chain: &ServiceChain) -> Result<Vec<String>, NetworkError> {
    if chain.legs.is_empty() {
        return Err(NetworkError::ChainNotOnRoute("chain has no legs".to_string()));
    }
    for leg in &chain.legs {
        if leg.from == leg.to {
            return Err(NetworkError::ChainNotOnRoute(format!(
                "leg {:?}->{:?} is degenerate",
                leg.from, leg.to
            )));
        }
    }
    for pair in chain.legs.windows(2) {
        if pair[0].to != pair[1].from {
            return Err(NetworkError::ChainNotOnRoute(format!(
                "leg ending at {:?} is followed by a leg starting at {:?}",
                pair[0].to, pair[1].from
            )));
        }
    }
    let first = &chain.legs[0].from;
    if first != route.origin() {
        return Err(NetworkError::ChainNotOnRoute(format!(
            "chain starts at {:?}, route starts at {:?}",
            first,
            route.origin()
        )));
    }
    let last = &chain.legs[chain.legs.len() - 1].to;
    if last != route.destination() {
        return Err(NetworkError::ChainNotOnRoute(format!(
            "chain ends at {:?}, route ends at {:?}",
            last,
            route.destination()
        )));
    }

    // The stop sequence origin, junction.., destination must appear in the
    // route in order; a leg endpoint off the route (or out of order) means
    // the chain describes a different path.
    let mut stops = Vec::with_capacity(chain.legs.len() + 1);
    stops.push(chain.legs[0].from.clone());
    for leg in &chain.legs {
        stops.push(leg.to.clone());
    }
    let mut route_iter = route.nodes.iter();
    for stop in &stops {
        if !route_iter.any(|node| node == stop) {
            return Err(NetworkError::ChainNotOnRoute(format!(
                "stop {stop:?} is not on the route in leg order"
            )));
        }
    }

    Ok(stops[1..stops.len() - 1].to_vec())
}

#[derive(PartialEq)]
struct QueueEntry {
    dist: f64,
    node: usize,
}

impl Eq for QueueEntry {}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the smallest
        // distance (then smallest index) first.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
