//! Acceptance suite. Each test covers one release criterion, pins its
//! tolerance in code and prints a PASS line when it holds.
//!
//! Run with `cargo test -p entrain-cli --test acceptance -- --nocapture`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use entrain_cli::analyze::analyze;
use entrain_cli::report::{to_reports, ShipmentReport};
use entrain_cli::scenario::load_scenario;
use entrain_core::inventory::{simulate_stock, stock_quantities, DemandProfile};
use entrain_core::network::{Link, Network, Node, NodeKind};
use entrain_core::tradeoff::{
    adoption_curve, classify, customer_surplus, feasible_interval, railroad_surplus, CaseLabel,
    TradeoffInputs,
};

fn golden_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios/golden.json")
}

fn pass(number: u32, name: &str) {
    println!("acceptance criterion {number} ({name}): PASS");
}

fn rel_gap(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(1.0)
}

/// Criterion 1: the shipped scenario reproduces the yearly
/// reclassification saving of a daily 15-car shipment handled 2.5 times
/// at 40 yuan per car: exactly 547,500, in under a second.
#[test]
fn criterion_1_worked_reclassification_example() {
    let started = Instant::now();
    let scenario = load_scenario(&golden_path()).unwrap();
    let analyzed = analyze(&scenario);
    let flagship = analyzed
        .iter()
        .find(|s| s.id == "S1")
        .and_then(|s| s.result.as_ref().ok())
        .expect("S1 analyzes cleanly");
    assert_eq!(flagship.breakdown.reclassification_handling, 547_500.0);
    assert!(started.elapsed().as_secs_f64() < 1.0, "took {:?}", started.elapsed());
    pass(1, "worked reclassification example, tolerance 0");
}

/// Criterion 2: over 200 random profiles with a whole-day interval in
/// [1, 10], the trajectory simulator at 1000 steps/day over three
/// intervals matches the closed-form average within 1e-3 relative, and
/// the extra-stock formula within 1e-12 relative, all in under 10 s.
#[test]
fn criterion_2_inventory_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x01);
    for _ in 0..200 {
        let daily: u32 = rng.random_range(1..=20);
        let interval: u32 = rng.random_range(1..=10);
        let demand = DemandProfile {
            car_load: rng.random_range(1.0..120.0),
            daily_cars: f64::from(daily),
            train_cars: f64::from(daily * interval),
            safety_stock: rng.random_range(0.0..500.0),
            contract_days: rng.random_range(1.0..1000.0),
            unit_inventory_cost: rng.random_range(0.0..10.0),
        };
        let report = stock_quantities(&demand).unwrap();
        let simulated = simulate_stock(&demand, 3 * interval, 1000).unwrap();
        assert!(
            rel_gap(simulated, report.avg_stock_train) <= 1e-3,
            "simulated {simulated} vs closed form {} for {demand:?}",
            report.avg_stock_train
        );
        let direct = 0.5 * demand.car_load * (demand.train_cars - demand.daily_cars);
        assert!(rel_gap(report.extra_stock_per_day, direct) <= 1e-12);
    }
    assert!(started.elapsed().as_secs_f64() < 10.0, "took {:?}", started.elapsed());
    pass(2, "inventory oracle equivalence, 1e-3 / 1e-12 relative");
}

/// Criterion 3: at the three-day interval, the per-period stocks equal
/// (3/2) train load + 3 safety stock and the extra stock equals half the
/// car load times the car difference, within 1e-12 relative.
#[test]
fn criterion_3_three_day_period_regression() {
    let mut rng = StdRng::seed_from_u64(0x03);
    let check = |demand: DemandProfile| {
        let report = stock_quantities(&demand).unwrap();
        assert_eq!(report.interval_days, 3.0);
        let period = 3.0;
        let stock_train_period = report.avg_stock_train * period;
        let stock_daily_period = report.avg_stock_daily * period;
        let expected_train = 1.5 * demand.car_load * demand.train_cars + 3.0 * demand.safety_stock;
        let expected_daily = 1.5 * demand.car_load * demand.daily_cars + 3.0 * demand.safety_stock;
        let expected_extra = 0.5 * demand.car_load * (demand.train_cars - demand.daily_cars);
        assert!(rel_gap(stock_train_period, expected_train) <= 1e-12);
        assert!(rel_gap(stock_daily_period, expected_daily) <= 1e-12);
        assert!(rel_gap(report.extra_stock_per_day, expected_extra) <= 1e-12);
        assert!(rel_gap(
            (stock_train_period - stock_daily_period) / period,
            expected_extra
        ) <= 1e-12);
    };
    check(DemandProfile {
        car_load: 60.0,
        daily_cars: 15.0,
        train_cars: 45.0,
        safety_stock: 0.0,
        contract_days: 365.0,
        unit_inventory_cost: 1.0,
    });
    for _ in 0..100 {
        let daily = f64::from(rng.random_range(1u32..=50));
        check(DemandProfile {
            car_load: rng.random_range(1.0..120.0),
            daily_cars: daily,
            train_cars: 3.0 * daily,
            safety_stock: rng.random_range(0.0..1000.0),
            contract_days: rng.random_range(1.0..1000.0),
            unit_inventory_cost: rng.random_range(0.0..10.0),
        });
    }
    pass(3, "three-day period regression, 1e-12 relative");
}

/// Criterion 4: for 500 random feasible inputs, the surpluses vanish at
/// their band boundaries within 1e-9 of the charge, and for 100 random
/// discounts each the two surpluses sum to the joint surplus within
/// 1e-12 of the operand scale.
#[test]
fn criterion_4_band_boundary_zeros_and_surplus_conservation() {
    let mut rng = StdRng::seed_from_u64(0x04);
    for _ in 0..500 {
        let charge: f64 = rng.random_range(1e2..1e7);
        let inventory = rng.random_range(0.0..0.9) * charge;
        let saving = inventory + rng.random_range(0.0..=1.0) * (charge - inventory);
        let inputs = TradeoffInputs::new(saving, charge, inventory).unwrap();

        let interval = feasible_interval(&inputs);
        assert!(interval.feasible);
        let at_max = railroad_surplus(&inputs, interval.beta_max).unwrap();
        let at_min = customer_surplus(&inputs, interval.beta_min).unwrap();
        assert!(at_max.abs() <= 1e-9 * charge, "dH(beta_max) = {at_max}");
        assert!(at_min.abs() <= 1e-9 * charge, "dR(beta_min) = {at_min}");

        for _ in 0..100 {
            let beta = rng.random_range(0.0..=1.0);
            let total = railroad_surplus(&inputs, beta).unwrap()
                + customer_surplus(&inputs, beta).unwrap();
            let joint = saving - inventory;
            let scale = saving.abs().max(beta * charge).max(inventory).max(1.0);
            assert!(
                (total - joint).abs() <= 1e-12 * scale,
                "conservation broke: {total} vs {joint}"
            );
        }
    }
    pass(4, "boundary zeros 1e-9, surplus conservation 1e-12");
}

/// Criterion 5: over 10,000 random tuples the classifier returns exactly
/// one of the four labels, the win-win label appears exactly on the band
/// beta in [C/P, dE/P] with dE >= 0, and a negative saving always maps to
/// the first case. Zero violations.
#[test]
fn criterion_5_case_partition() {
    let mut rng = StdRng::seed_from_u64(0x05);
    let mut seen = [false; 4];
    for _ in 0..10_000 {
        let saving: f64 = rng.random_range(-1e6..1e6);
        let charge: f64 = rng.random_range(1e2..1e7);
        let inventory: f64 = rng.random_range(0.0..1e6);
        let beta: f64 = rng.random_range(0.0..=1.0);
        let inputs = TradeoffInputs::new(saving, charge, inventory).unwrap();
        let case = classify(&inputs, beta).unwrap();
        seen[match case {
            CaseLabel::RailroadRefuses => 0,
            CaseLabel::CustomerRefuses => 1,
            CaseLabel::RailroadRefusesAtBeta => 2,
            CaseLabel::WinWin => 3,
        }] = true;

        let in_band =
            saving >= 0.0 && beta >= inventory / charge && beta <= saving / charge;
        assert_eq!(
            case == CaseLabel::WinWin,
            in_band,
            "case {case} at beta {beta} for dE {saving}, P {charge}, C {inventory}"
        );
        if saving < 0.0 {
            assert_eq!(case, CaseLabel::RailroadRefuses);
        }
    }
    assert!(seen.iter().all(|&s| s), "all four cases should occur: {seen:?}");
    pass(5, "case partition over 10,000 tuples, zero violations");
}

/// Criterion 6: on 100 random connected graphs of up to 8 nodes, the
/// routed distance equals the exhaustive minimum over all simple paths
/// exactly, and repeating the query returns the identical route.
#[test]
fn criterion_6_routing_oracle() {
    let mut rng = StdRng::seed_from_u64(0x06);
    for _ in 0..100 {
        let node_count: usize = rng.random_range(2..=8);
        let mut edges: Vec<(usize, usize, f64)> = Vec::new();
        for child in 1..node_count {
            edges.push((child, rng.random_range(0..child), rng.random_range(0.1..100.0)));
        }
        for _ in 0..rng.random_range(0..10) {
            let a = rng.random_range(0..node_count);
            let b = rng.random_range(0..node_count);
            if a != b {
                edges.push((a, b, rng.random_range(0.1..100.0)));
            }
        }

        let nodes = (0..node_count)
            .map(|i| Node::new(format!("N{i}"), NodeKind::LoadingStation))
            .collect();
        let links = edges
            .iter()
            .map(|&(a, b, len)| Link::new(format!("N{a}"), format!("N{b}"), len))
            .collect();
        let net = Network::new(nodes, links).unwrap();

        let origin = rng.random_range(0..node_count);
        let target = rng.random_range(0..node_count);
        let route = net
            .shortest_path(&format!("N{origin}"), &format!("N{target}"))
            .unwrap();
        let oracle = enumerate_min_distance(node_count, &edges, origin, target);
        assert_eq!(route.distance_km, oracle, "graph edges: {edges:?}");

        let again = net
            .shortest_path(&format!("N{origin}"), &format!("N{target}"))
            .unwrap();
        assert_eq!(route, again);
    }
    pass(6, "routing oracle, exact distances and deterministic routes");
}

fn enumerate_min_distance(
    node_count: usize,
    edges: &[(usize, usize, f64)],
    origin: usize,
    target: usize,
) -> f64 {
    let mut adjacency = vec![Vec::new(); node_count];
    for &(a, b, len) in edges {
        adjacency[a].push((b, len));
        adjacency[b].push((a, len));
    }
    fn walk(
        adjacency: &[Vec<(usize, f64)>],
        visited: &mut [bool],
        at: usize,
        target: usize,
        acc: f64,
        best: &mut f64,
    ) {
        if at == target {
            if acc < *best {
                *best = acc;
            }
            return;
        }
        for &(next, len) in &adjacency[at] {
            if !visited[next] {
                visited[next] = true;
                walk(adjacency, visited, next, target, acc + len, best);
                visited[next] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    let mut visited = vec![false; node_count];
    visited[origin] = true;
    walk(&adjacency, &mut visited, origin, target, 0.0, &mut best);
    best
}

/// Criterion 7: on random portfolios of up to 50 shipments swept over a
/// 101-point grid, the adopting fraction never decreases, the offered
/// fraction never increases, and the win-win fraction never exceeds
/// either.
#[test]
fn criterion_7_adoption_curve_monotonicity() {
    let mut rng = StdRng::seed_from_u64(0x07);
    let betas: Vec<f64> = (0..=100).map(|i| f64::from(i) / 100.0).collect();
    for _ in 0..25 {
        let size = rng.random_range(1..=50);
        let portfolio: Vec<TradeoffInputs> = (0..size)
            .map(|_| {
                TradeoffInputs::new(
                    rng.random_range(-1e6..1e6),
                    rng.random_range(1e2..1e7),
                    rng.random_range(0.0..1e6),
                )
                .unwrap()
            })
            .collect();
        let points = adoption_curve(&portfolio, &betas).unwrap();
        assert_eq!(points.len(), 101);
        for point in &points {
            assert!(
                point.win_win_fraction
                    <= point.offered_fraction.min(point.adopting_fraction)
            );
        }
        for pair in points.windows(2) {
            assert!(pair[1].adopting_fraction >= pair[0].adopting_fraction);
            assert!(pair[1].offered_fraction <= pair[0].offered_fraction);
        }
    }
    pass(7, "adoption-curve monotonicity on 101-point grids");
}

/// Criterion 8: two consecutive runs of the binary over the shipped
/// scenario produce byte-identical reports, and the recommended discount
/// splits the joint surplus evenly within 1e-9 relative.
#[test]
fn criterion_8_golden_run_determinism_and_even_split() {
    let golden = golden_path();
    let out_a = std::env::temp_dir().join(format!("entrain-golden-a-{}.json", std::process::id()));
    let out_b = std::env::temp_dir().join(format!("entrain-golden-b-{}.json", std::process::id()));
    for out in [&out_a, &out_b] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_entrain"))
            .args([
                "analyze",
                "--scenario",
                golden.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .expect("binary runs");
        assert!(status.success());
    }
    let bytes_a = std::fs::read(&out_a).unwrap();
    let bytes_b = std::fs::read(&out_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "reports differ between runs");

    let reports: Vec<ShipmentReport> = serde_json::from_slice(&bytes_a).unwrap();
    let flagship = reports.iter().find(|r| r.shipment_id == "S1").unwrap();
    let cost = flagship.cost_breakdown.as_ref().unwrap();
    let stock = flagship.stock.as_ref().unwrap();
    let tradeoff = flagship.tradeoff.as_ref().unwrap();
    let half_joint = (cost.de_total - stock.c_inventory_total) / 2.0;
    let dh = tradeoff.dh_at_recommended.unwrap();
    let dr = tradeoff.dr_at_recommended.unwrap();
    assert!(rel_gap(dh, half_joint) <= 1e-9, "dH {dh} vs {half_joint}");
    assert!(rel_gap(dr, half_joint) <= 1e-9, "dR {dr} vs {half_joint}");
    assert!(rel_gap(dh, dr) <= 1e-9);

    // The in-process pipeline agrees with what the binary wrote.
    let scenario = load_scenario(&golden).unwrap();
    let in_process = to_reports(&analyze(&scenario));
    assert_eq!(&in_process, &reports);

    std::fs::remove_file(&out_a).ok();
    std::fs::remove_file(&out_b).ok();
    pass(8, "golden run byte-identical, even split at 1e-9");
}
