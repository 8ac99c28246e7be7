//! Customer-side inventory under entire-train versus daily delivery.
//!
//! A train of `train_cars` railcars arrives every `train_cars /
//! daily_cars` days and is consumed at a constant daily rate, so the
//! stock traces a sawtooth between `safety_stock` and `safety_stock +
//! train load`. Daily delivery traces the same sawtooth with a one-day
//! period. [`stock_quantities`] evaluates the closed-form per-day
//! averages and the customer's extra inventory cost over the contract;
//! [`simulate_stock`] integrates the trajectory numerically and exists to
//! cross-check the closed form.

use core::fmt;

/// An origin-destination demand contract.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemandProfile {
    /// Rated load of one railcar, tons.
    pub car_load: f64,
    /// Railcars demanded per day.
    pub daily_cars: f64,
    /// Railcars per dispatched entire train. Must be at least `daily_cars`.
    pub train_cars: f64,
    /// Stock held regardless of delivery mode, tons.
    pub safety_stock: f64,
    /// Contract length, days.
    pub contract_days: f64,
    /// Holding cost, yuan per ton-day.
    pub unit_inventory_cost: f64,
}

impl DemandProfile {
    /// Days between train arrivals: one train carries this many days of
    /// demand.
    pub fn service_interval_days(&self) -> f64 {
        self.train_cars / self.daily_cars
    }

    pub fn validate(&self) -> Result<(), InventoryError> {
        let invalid = |why: &'static str| Err(InventoryError::InvalidProfile(why));
        let all_finite = self.car_load.is_finite()
            && self.daily_cars.is_finite()
            && self.train_cars.is_finite()
            && self.safety_stock.is_finite()
            && self.contract_days.is_finite()
            && self.unit_inventory_cost.is_finite();
        if !all_finite {
            return invalid("all fields must be finite");
        }
        if self.car_load <= 0.0 {
            return invalid("car_load must be > 0");
        }
        if self.daily_cars <= 0.0 {
            return invalid("daily_cars must be > 0");
        }
        if self.train_cars <= 0.0 {
            return invalid("train_cars must be > 0");
        }
        if self.train_cars < self.daily_cars {
            return invalid("train_cars must be >= daily_cars");
        }
        if self.safety_stock < 0.0 {
            return invalid("safety_stock must be >= 0");
        }
        if self.contract_days <= 0.0 {
            return invalid("contract_days must be > 0");
        }
        if self.unit_inventory_cost < 0.0 {
            return invalid("unit_inventory_cost must be >= 0");
        }
        Ok(())
    }
}

/// Closed-form stock quantities for one demand profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StockReport {
    /// Tons carried by one entire train.
    pub train_load: f64,
    /// Tons consumed (and delivered daily) per day.
    pub daily_load: f64,
    /// Days between train arrivals.
    pub interval_days: f64,
    /// Average stock per day under entire-train delivery, tons.
    pub avg_stock_train: f64,
    /// Average stock per day under daily delivery, tons.
    pub avg_stock_daily: f64,
    /// Extra average stock per day from switching to the train, tons.
    pub extra_stock_per_day: f64,
    /// Extra inventory cost over the whole contract, yuan.
    pub inventory_cost: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InventoryError {
    InvalidProfile(&'static str),
    /// The simulator requires a whole number of days between arrivals.
    NonIntegerInterval { interval_days: f64 },
    InvalidHorizon { horizon_days: u32, interval_days: u64 },
    InvalidSteps { steps_per_day: u32 },
}

impl fmt::Display for InventoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InventoryError::InvalidProfile(why) => write!(f, "invalid demand profile: {why}"),
            InventoryError::NonIntegerInterval { interval_days } => write!(
                f,
                "service interval {interval_days} is not a whole number of days"
            ),
            InventoryError::InvalidHorizon { horizon_days, interval_days } => write!(
                f,
                "horizon of {horizon_days} days is not a positive multiple of the \
                 {interval_days}-day service interval"
            ),
            InventoryError::InvalidSteps { steps_per_day } => {
                write!(f, "steps_per_day must be at least 2, got {steps_per_day}")
            }
        }
    }
}

impl core::error::Error for InventoryError {}

/// Evaluates the sawtooth averages and the contract inventory cost.
///
/// The average stock under either mode is half the delivered batch plus
/// the safety stock, so the per-day difference is
/// `car_load * (train_cars - daily_cars) / 2`; the safety stock cancels.
/// The total cost is that difference held for every contract day at the
/// unit holding cost.
pub fn stock_quantities(demand: &DemandProfile) -> Result<StockReport, InventoryError> {
    demand.validate()?;
    let train_load = demand.car_load * demand.train_cars;
    let daily_load = demand.car_load * demand.daily_cars;
    let extra_stock_per_day = 0.5 * demand.car_load * (demand.train_cars - demand.daily_cars);
    Ok(StockReport {
        train_load,
        daily_load,
        interval_days: demand.service_interval_days(),
        avg_stock_train: train_load / 2.0 + demand.safety_stock,
        avg_stock_daily: daily_load / 2.0 + demand.safety_stock,
        extra_stock_per_day,
        inventory_cost: demand.unit_inventory_cost * demand.contract_days * extra_stock_per_day,
    })
}

/// Simulates the entire-train stock trajectory and returns its
/// time-averaged level in tons.
///
/// A train load arrives at the start of every service interval and the
/// stock depletes linearly between arrivals. Each sub-step contributes
/// the trapezoid of its endpoint stocks, taken after the arrival at the
/// step start and before any arrival at the step end. The service
/// interval must be a whole number of days and the horizon a positive
/// multiple of it, so that arrivals land exactly on step boundaries.
pub fn simulate_stock(
    demand: &DemandProfile,
    horizon_days: u32,
    steps_per_day: u32,
) -> Result<f64, InventoryError> {
    demand.validate()?;
    if steps_per_day < 2 {
        return Err(InventoryError::InvalidSteps { steps_per_day });
    }
    let interval = demand.service_interval_days();
    let interval_days = nearest_positive_integer(interval);
    if interval_days == 0 || relative_gap(interval, interval_days as f64) > 1e-9 {
        return Err(InventoryError::NonIntegerInterval { interval_days: interval });
    }
    if horizon_days == 0 || !u64::from(horizon_days).is_multiple_of(interval_days) {
        return Err(InventoryError::InvalidHorizon { horizon_days, interval_days });
    }

    let train_load = demand.car_load * demand.train_cars;
    let daily_load = demand.car_load * demand.daily_cars;
    let step_days = 1.0 / f64::from(steps_per_day);
    let consumed_per_step = daily_load * step_days;
    let steps_per_interval = interval_days * u64::from(steps_per_day);
    let total_steps = u64::from(horizon_days) * u64::from(steps_per_day);

    let mut stock = demand.safety_stock;
    let mut area = 0.0;
    for step in 0..total_steps {
        if step % steps_per_interval == 0 {
            stock += train_load;
        }
        let at_start = stock;
        stock -= consumed_per_step;
        area += 0.5 * (at_start + stock) * step_days;
    }
    Ok(area / f64::from(horizon_days))
}

fn nearest_positive_integer(x: f64) -> u64 {
    if x <= 0.0 {
        0
    } else {
        (x + 0.5) as u64
    }
}

fn relative_gap(x: f64, y: f64) -> f64 {
    let scale = if x.abs() > 1.0 { x.abs() } else { 1.0 };
    (x - y).abs() / scale
}
