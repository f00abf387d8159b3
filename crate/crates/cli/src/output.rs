//! Report assembly and artifact writing.

use std::{fs, io, path::Path};

use serde_json::{json, Map, Value};
use symprod_core::C64;

/// One asserted tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `value ≤ tolerance`.
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, tolerance, passed: value <= tolerance }
    }

    /// Passes when `value ≥ bound`.
    pub fn at_least(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check { name: name.into(), value, tolerance: bound, passed: value >= bound }
    }

    /// Passes when `|value − target| ≤ tolerance`; `value` is reported raw.
    pub fn within(name: impl Into<String>, value: f64, target: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, tolerance, passed: (value - target).abs() <= tolerance }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "value": self.value, "tolerance": self.tolerance, "passed": self.passed })
    }
}

/// A CSV artifact. Cells are preformatted so output is byte-stable.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> io::Result<Vec<u8>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.into_inner().map_err(|e| e.into_error())
    }
}

/// Shortest round-trip decimal.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

/// Real and imaginary parts as two cells.
pub fn cplx(z: C64) -> [String; 2] {
    [num(z.re), num(z.im)]
}

pub fn cplx_json(z: C64) -> Value {
    json!([z.re, z.im])
}

/// Everything one subcommand produces.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub tables: Vec<Table>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn insert(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    /// Appends another outcome's checks, tables and results (the latter
    /// under `key`).
    pub fn absorb(&mut self, key: &str, other: Outcome) {
        self.checks.extend(other.checks);
        self.tables.extend(other.tables);
        self.results.insert(key.to_string(), Value::Object(other.results));
    }

    pub fn report(&self, meta: Value) -> Value {
        json!({
            "meta": meta,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "failures": self.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
            "results": Value::Object(self.results.clone()),
            "tables": self.tables.iter().map(|t| format!("{}.csv", t.name)).collect::<Vec<_>>(),
        })
    }

    /// Writes `report.json` and one CSV per table into `dir`.
    pub fn write(&self, dir: &Path, meta: Value) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut text = serde_json::to_string_pretty(&self.report(meta))?;
        text.push('\n');
        fs::write(dir.join("report.json"), text)?;
        for t in &self.tables {
            fs::write(dir.join(format!("{}.csv", t.name)), t.to_csv()?)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_and_split_complex_columns() {
        let mut t = Table::new("x", &["k", "re", "im"]);
        let [re, im] = cplx(C64::new(0.5, -1.0));
        t.push(vec!["0".into(), re, im]);
        assert_eq!(String::from_utf8(t.to_csv().unwrap()).unwrap(), "k,re,im\n0,0.5,-1.0\n");
    }

    #[test]
    fn checks() {
        assert!(Check::at_most("a", 1e-12, 1e-10).passed);
        assert!(!Check::at_most("a", f64::NAN, 1e-10).passed);
        assert!(Check::at_least("b", 0.5, 0.4).passed);
        assert!(Check::within("c", -1.1, -1.0, 0.2).passed);
        assert!(!Check::within("c", -1.4, -2.0, 0.3).passed);
    }
}
