//! The four reference grids: starlikeness thresholds and radii (at
//! `nu = 0.7`) for `f_{a,nu}` and `g_{a,nu}`, over `a in {1,2,3}` and
//! `beta in {0, 0.5, 0.95}`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::starlike::{in_disk_radius, radius_f, radius_g, threshold_nu_f, threshold_nu_g, Family, RadiusQuery};

pub const TABLE_A: [u32; 3] = [1, 2, 3];
pub const TABLE_BETA: [f64; 3] = [0.0, 0.5, 0.95];
pub const TABLE_NU: f64 = 0.7;
/// Allowed absolute deviation from a published six-figure value.
pub const TABLE_TOLERANCE: f64 = 5e-6;

/// Published values, rows `a = 1, 2, 3`, columns `beta = 0, 0.5, 0.95`.
const REFERENCE: [[[f64; 3]; 3]; 4] = [
    [[0.39001, 0.645715, 2.72421], [0.659908, 0.706779, 0.781815], [0.766251, 0.776181, 0.786989]],
    [[1.44678, 1.05621, 0.343848], [1.12397, 0.982365, 0.828745], [0.577726, 0.549716, 0.523133]],
    [[-0.340092, 0.122499, 9.02272], [0.39002, 0.586273, 0.772587], [0.714616, 0.751407, 0.784626]],
    [[1.68326, 1.24519, 0.410407], [1.44678, 1.1867, 0.856647], [0.939782, 0.763126, 0.549716]],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    ThresholdF,
    RadiusF,
    ThresholdG,
    RadiusG,
}

impl TableId {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(TableId::ThresholdF),
            2 => Ok(TableId::RadiusF),
            3 => Ok(TableId::ThresholdG),
            4 => Ok(TableId::RadiusG),
            _ => Err(Error::InvalidConfig(format!("table id must be 1, 2, 3 or 4, got {n}"))),
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            TableId::ThresholdF => 1,
            TableId::RadiusF => 2,
            TableId::ThresholdG => 3,
            TableId::RadiusG => 4,
        }
    }

    pub fn caption(&self) -> &'static str {
        match self {
            TableId::ThresholdF => "Values of nu for f_{a,nu} to be starlike",
            TableId::RadiusF => "Radius of starlikeness for f_{a,nu} when nu=0.7",
            TableId::ThresholdG => "Values of nu for g_{a,nu} to be starlike",
            TableId::RadiusG => "The radius of starlikeness for g_{a,nu} when nu=0.7",
        }
    }

    pub fn is_radius(&self) -> bool {
        matches!(self, TableId::RadiusF | TableId::RadiusG)
    }

    pub fn reference(&self, a: u32, beta: f64) -> Option<f64> {
        let row = TABLE_A.iter().position(|&x| x == a)?;
        let col = TABLE_BETA.iter().position(|&x| x == beta)?;
        Some(REFERENCE[self.number() as usize - 1][row][col])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub a: u32,
    pub beta: f64,
    pub deviation: f64,
    /// `min(value, 1)` for radius tables.
    pub in_disk_radius: Option<f64>,
    pub reference: f64,
    pub residual: f64,
    pub value: f64,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub caption: String,
    pub cells: Vec<TableCell>,
    pub id: u8,
}

impl Table {
    pub fn all_within_tolerance(&self) -> bool {
        self.cells.iter().all(|c| c.within_tolerance)
    }

    pub fn cell(&self, a: u32, beta: f64) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.a == a && c.beta == beta)
    }
}

fn compute_cell(id: TableId, a: u32, beta: f64) -> Result<TableCell> {
    let root = match id {
        TableId::ThresholdF => threshold_nu_f(a, beta)?,
        TableId::ThresholdG => threshold_nu_g(a, beta)?,
        TableId::RadiusF => radius_f(&RadiusQuery::new(a, TABLE_NU, beta, Family::F)?)?,
        TableId::RadiusG => radius_g(&RadiusQuery::new(a, TABLE_NU, beta, Family::G)?)?,
    };
    let reference = id.reference(a, beta).expect("grid point");
    let deviation = (root.value - reference).abs();
    let family = if id == TableId::RadiusF { Family::F } else { Family::G };
    Ok(TableCell {
        a,
        beta,
        deviation,
        in_disk_radius: id.is_radius().then(|| in_disk_radius(family, root.value)),
        reference,
        residual: root.residual,
        value: root.value,
        within_tolerance: deviation <= TABLE_TOLERANCE,
    })
}

/// All nine cells, computed concurrently, in row-major order.
pub fn compute_table(id: TableId) -> Result<Table> {
    let grid: Vec<(u32, f64)> = TABLE_A
        .iter()
        .flat_map(|&a| TABLE_BETA.iter().map(move |&b| (a, b)))
        .collect();
    let cells = grid
        .par_iter()
        .map(|&(a, beta)| compute_cell(id, a, beta))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { caption: id.caption().to_string(), cells, id: id.number() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for n in 1..=4 {
            assert_eq!(TableId::from_number(n).unwrap().number(), n);
        }
        assert!(TableId::from_number(5).is_err());
    }

    #[test]
    fn radius_tables_match() {
        for id in [TableId::RadiusF, TableId::RadiusG] {
            let t = compute_table(id).unwrap();
            assert_eq!(t.cells.len(), 9);
            assert!(t.all_within_tolerance(), "{t:?}");
        }
    }

    #[test]
    fn clipped_radius() {
        let t = compute_table(TableId::RadiusG).unwrap();
        let cell = t.cell(1, 0.0).unwrap();
        assert!(cell.value > 1.0);
        assert_eq!(cell.in_disk_radius, Some(1.0));
    }

    #[test]
    fn threshold_g_flags_misprinted_cell() {
        // the a = 2, beta = 0 equation is the a = 1, beta = 0 threshold-f equation
        let t = compute_table(TableId::ThresholdG).unwrap();
        let cell = t.cell(2, 0.0).unwrap();
        let f = threshold_nu_f(1, 0.0).unwrap().value;
        assert!((cell.value - f).abs() < 1e-10);
        assert!(!cell.within_tolerance);
        assert_eq!(t.cells.iter().filter(|c| !c.within_tolerance).count(), 1);
    }
}
