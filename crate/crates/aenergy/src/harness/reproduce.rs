use std::fmt;

use aenergy_core::bounds::{self, AlphaFacts, GraphFacts};
use aenergy_core::{BoundId, Evaluation, FamilySpec};
use serde::Serialize;

use crate::{Error, Result};

/// Rounds half away from zero to two decimals and prints both digits.
pub fn round2(x: f64) -> String {
    format!("{:.2}", (x * 100.0).round() / 100.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub row: String,
    pub alpha: f64,
    pub column: &'static str,
    pub value: f64,
    pub expected: &'static str,
}

impl Cell {
    pub fn rendered(&self) -> String {
        round2(self.value)
    }

    pub fn matches(&self) -> bool {
        self.rendered() == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub cells: Vec<Cell>,
    /// Extra per-row orderings that must hold, as `(row, description, holds)`.
    pub checks: Vec<(String, &'static str, bool)>,
}

impl Table {
    /// First mismatching cell or failed check, as a [`Error::ReproductionFailure`].
    pub fn verify(&self) -> Result<()> {
        if let Some(c) = self.cells.iter().find(|c| !c.matches()) {
            return Err(Error::ReproductionFailure {
                table: self.name,
                row: c.row.clone(),
                column: c.column,
                expected: c.expected.to_string(),
                actual: c.rendered(),
            });
        }
        if let Some((row, what, _)) = self.checks.iter().find(|(_, _, ok)| !ok) {
            return Err(Error::ReproductionFailure {
                table: self.name,
                row: row.clone(),
                column: what,
                expected: "true".into(),
                actual: "false".into(),
            });
        }
        Ok(())
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.matches())
    }

    fn rows(&self) -> Vec<(&str, f64)> {
        let mut rows: Vec<(&str, f64)> = Vec::new();
        for c in &self.cells {
            if !rows.iter().any(|(r, _)| *r == c.row) {
                rows.push((&c.row, c.alpha));
            }
        }
        rows
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<18} {:>5}", "graph", "alpha")?;
        for col in &self.columns {
            write!(f, " {col:>9}")?;
        }
        writeln!(f)?;
        for (row, alpha) in self.rows() {
            write!(f, "{row:<18} {alpha:>5.2}")?;
            for col in &self.columns {
                let cell = self.cells.iter().find(|c| c.row == row && c.column == *col);
                match cell {
                    Some(c) if c.matches() => write!(f, " {:>9}", c.rendered())?,
                    Some(c) => write!(f, " {:>9}", format!("{}!={}", c.rendered(), c.expected))?,
                    None => write!(f, " {:>9}", "-")?,
                }
            }
            writeln!(f)?;
        }
        for (row, what, ok) in &self.checks {
            writeln!(f, "{row}: {what} {}", if *ok { "holds" } else { "FAILS" })?;
        }
        Ok(())
    }
}

fn bound_value(spec: FamilySpec, alpha: f64, id: BoundId) -> Result<f64> {
    let g = spec.generate()?;
    match bounds::evaluate(&GraphFacts::new(&g)?, &AlphaFacts::new(&g, alpha)?, id) {
        Evaluation::Bound(b) => Ok(b.value),
        // rendered as NaN, so the cell fails with a visible diff
        _ => Ok(f64::NAN),
    }
}

fn build(
    name: &'static str,
    columns: [BoundId; 2],
    rows: &[(FamilySpec, f64, [&'static str; 2])],
) -> Result<Table> {
    let mut cells = Vec::new();
    for &(spec, alpha, expected) in rows {
        for (id, expected) in columns.into_iter().zip(expected) {
            cells.push(Cell {
                row: spec.to_string(),
                alpha,
                column: id.as_str(),
                value: bound_value(spec, alpha, id)?,
                expected,
            });
        }
    }
    Ok(Table { name, columns: columns.iter().map(BoundId::as_str).collect(), cells, checks: Vec::new() })
}

/// LB_T41 and LB_L42 on five small graphs, against their published 2-decimal values.
pub fn reproduce_table1() -> Result<Table> {
    use FamilySpec::*;
    build(
        "table1",
        [BoundId::LbT41, BoundId::LbL42],
        &[
            (Star(4), 0.5, ["2.25", "2.24"]),
            (Friendship(3), 0.6, ["4.89", "2.20"]),
            (Cycle(9), 0.7, ["2.78", "2.71"]),
            (Book(4), 0.8, ["7.00", "6.43"]),
            (Path(10), 0.9, ["2.68", "0.76"]),
        ],
    )
}

/// UB_T31 against UB_EQ3 on two stars; UB_T31 must be the smaller.
pub fn reproduce_remark32() -> Result<Table> {
    use FamilySpec::*;
    let mut t = build(
        "remark32",
        [BoundId::UbT31, BoundId::UbEq3],
        &[(Star(20), 0.6, ["43.32", "48.35"]), (DoubleStar(12, 21), 0.7, ["92.48", "98.56"])],
    )?;
    t.checks = t
        .cells
        .chunks(2)
        .map(|pair| (pair[0].row.clone(), "UB_T31 < UB_EQ3", pair[0].value < pair[1].value))
        .collect();
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round2(2.2049), "2.20");
        assert_eq!(round2(7.0011), "7.00");
        assert_eq!(round2(0.125), "0.13");
        assert_eq!(round2(-0.125), "-0.13");
        assert_eq!(round2(f64::NAN), "NaN");
    }

    #[test]
    fn tables_reproduce() {
        let t = reproduce_table1().unwrap();
        assert_eq!(t.cells.len(), 10);
        t.verify().unwrap();
        let r = reproduce_remark32().unwrap();
        assert_eq!(r.cells.len(), 4);
        assert_eq!(r.checks.len(), 2);
        r.verify().unwrap();
    }

    #[test]
    fn tampered_cell_is_named() {
        let mut t = reproduce_table1().unwrap();
        t.cells[5].value += 0.01;
        match t.verify() {
            Err(Error::ReproductionFailure { row, column, expected, actual, .. }) => {
                assert_eq!((row.as_str(), column), ("cycle:9", "LB_L42"));
                assert_eq!((expected.as_str(), actual.as_str()), ("2.71", "2.72"));
            }
            other => panic!("{other:?}"),
        }
        assert!(t.to_string().contains("2.72!=2.71"));
    }

    #[test]
    fn failed_ordering_is_reported() {
        let mut r = reproduce_remark32().unwrap();
        r.checks[1].2 = false;
        assert!(matches!(r.verify(), Err(Error::ReproductionFailure { column: "UB_T31 < UB_EQ3", .. })));
    }
}
