//! Two-part distance tariff: a terminal charge per ton plus a shipping
//! charge per ton-kilometer, both depending on the commodity category.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::inventory::DemandProfile;

/// Prices for one commodity category.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TariffCategory {
    /// Terminal and accumulation charge, yuan per ton.
    pub base_price: f64,
    /// Distance charge, yuan per ton-kilometer.
    pub distance_rate: f64,
}

/// Category table keyed by category id.
#[derive(Debug, Clone, PartialEq)]
pub struct TariffTable {
    categories: BTreeMap<String, TariffCategory>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TariffError {
    EmptyTable,
    InvalidCategory(String),
    UnknownCategory(String),
    NegativeInput(&'static str),
}

impl fmt::Display for TariffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TariffError::EmptyTable => write!(f, "tariff table has no categories"),
            TariffError::InvalidCategory(id) => {
                write!(f, "category {id:?} has a negative or non-finite price")
            }
            TariffError::UnknownCategory(id) => write!(f, "unknown tariff category {id:?}"),
            TariffError::NegativeInput(what) => write!(f, "{what} must be >= 0"),
        }
    }
}

impl core::error::Error for TariffError {}

impl TariffTable {
    pub fn new(categories: BTreeMap<String, TariffCategory>) -> Result<Self, TariffError> {
        if categories.is_empty() {
            return Err(TariffError::EmptyTable);
        }
        for (id, category) in &categories {
            let ok = category.base_price >= 0.0
                && category.distance_rate >= 0.0
                && category.base_price.is_finite()
                && category.distance_rate.is_finite();
            if !ok {
                return Err(TariffError::InvalidCategory(id.clone()));
            }
        }
        Ok(TariffTable { categories })
    }

    pub fn category(&self, id: &str) -> Option<&TariffCategory> {
        self.categories.get(id)
    }

    pub fn categories(&self) -> impl Iterator<Item = (&str, &TariffCategory)> {
        self.categories.iter().map(|(id, c)| (id.as_str(), c))
    }

    /// Rail charge for shipping `tonnage` tons of a category over
    /// `distance_km`: `(base_price + distance_rate * distance) * tonnage`.
    pub fn rail_charge(
        &self,
        category_id: &str,
        distance_km: f64,
        tonnage: f64,
    ) -> Result<f64, TariffError> {
        if distance_km < 0.0 || distance_km.is_nan() {
            return Err(TariffError::NegativeInput("distance_km"));
        }
        if tonnage < 0.0 || tonnage.is_nan() {
            return Err(TariffError::NegativeInput("tonnage"));
        }
        let category = self
            .categories
            .get(category_id)
            .ok_or_else(|| TariffError::UnknownCategory(category_id.into()))?;
        Ok((category.base_price + category.distance_rate * distance_km) * tonnage)
    }
}

/// Total contract tonnage of a demand profile: the daily tonnage times the
/// contract length.
pub fn contract_tonnage(demand: &DemandProfile) -> f64 {
    demand.car_load * demand.daily_cars * demand.contract_days
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn table() -> TariffTable {
        let categories = [(
            String::from("n4"),
            TariffCategory { base_price: 16.3, distance_rate: 0.098 },
        )]
        .into_iter()
        .collect();
        TariffTable::new(categories).unwrap()
    }

    fn profile() -> DemandProfile {
        DemandProfile {
            car_load: 60.0,
            daily_cars: 15.0,
            train_cars: 45.0,
            safety_stock: 0.0,
            contract_days: 365.0,
            unit_inventory_cost: 1.0,
        }
    }

    #[test]
    fn contract_tonnage_is_daily_tonnage_times_days() {
        assert_eq!(contract_tonnage(&profile()), 328_500.0);
        let single = DemandProfile {
            daily_cars: 1.0,
            train_cars: 1.0,
            contract_days: 1.0,
            ..profile()
        };
        assert_eq!(contract_tonnage(&single), 60.0);
    }

    #[test]
    fn zero_distance_charges_only_the_terminal_price() {
        let charge = table().rail_charge("n4", 0.0, 1000.0).unwrap();
        assert_eq!(charge, 16.3 * 1000.0);
    }

    #[test]
    fn long_haul_charge_matches_direct_arithmetic() {
        let charge = table().rail_charge("n4", 800.0, 328_500.0).unwrap();
        assert!((charge - 31_108_950.0).abs() < 1e-6 * 31_108_950.0);
    }

    #[test]
    fn unknown_category_is_an_error() {
        let err = table().rail_charge("n9", 100.0, 100.0).unwrap_err();
        assert_eq!(err, TariffError::UnknownCategory("n9".into()));
    }

    #[test]
    fn negative_inputs_are_rejected() {
        assert_eq!(
            table().rail_charge("n4", -1.0, 100.0).unwrap_err(),
            TariffError::NegativeInput("distance_km")
        );
        assert_eq!(
            table().rail_charge("n4", 1.0, -100.0).unwrap_err(),
            TariffError::NegativeInput("tonnage")
        );
    }

    #[test]
    fn zero_everything_ships_for_free() {
        assert_eq!(table().rail_charge("n4", 0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn table_must_be_well_formed() {
        assert_eq!(
            TariffTable::new(BTreeMap::new()).unwrap_err(),
            TariffError::EmptyTable
        );
        let negative = [(
            String::from("n1"),
            TariffCategory { base_price: -1.0, distance_rate: 0.1 },
        )]
        .into_iter()
        .collect();
        assert_eq!(
            TariffTable::new(negative).unwrap_err(),
            TariffError::InvalidCategory("n1".into())
        );
    }

    #[test]
    fn categories_iterate_in_id_order() {
        let categories = [
            (String::from("n2"), TariffCategory { base_price: 1.0, distance_rate: 0.1 }),
            (String::from("n1"), TariffCategory { base_price: 2.0, distance_rate: 0.2 }),
        ]
        .into_iter()
        .collect();
        let table = TariffTable::new(categories).unwrap();
        let ids: Vec<_> = table.categories().map(|(id, _)| id).collect();
        assert_eq!(ids, ["n1", "n2"]);
    }
}
