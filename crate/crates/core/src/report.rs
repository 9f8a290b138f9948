//! CSV and JSON rendering of result tables.
//!
//! Exact rationals are always emitted as separate numerator and denominator
//! columns. CSV floats carry 17 significant digits. In JSON, big integers are
//! decimal strings and floats are plain numbers.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Result as LibResult;
use crate::exact::{derangements, gap_to_limit, solve, Method};
use crate::prob::{to_f64, Rational};
use crate::steps::expected_steps;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Big(String),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Float(v) => format_float(*v),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json_value(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Big(s) | Cell::Text(s) => json!(s),
            Cell::Float(v) => json!(v),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<&BigInt> for Cell {
    fn from(v: &BigInt) -> Self {
        Cell::Big(v.to_string())
    }
}

impl From<&BigUint> for Cell {
    fn from(v: &BigUint) -> Self {
        Cell::Big(v.to_string())
    }
}

/// 17 significant digits in scientific notation.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub seed: Option<u64>,
    pub method: String,
    pub version: &'static str,
}

impl Meta {
    pub fn new(method: impl Into<String>, seed: Option<u64>) -> Self {
        Meta {
            seed,
            method: method.into(),
            version: VERSION,
        }
    }
}

/// Column names plus rows of cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Meta,
}

impl Report {
    pub fn write<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv_text))?;
        }
        w.flush()
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json_value()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "rows": rows, "meta": self.meta });
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)
    }
}

/// One line of the `solve` report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub d_prob_num: BigInt,
    pub d_prob_den: BigInt,
    pub d_prob_float: f64,
    pub gap_to_e_inv: f64,
    /// Derangement count `d_n`.
    pub d_n: BigUint,
    pub method: Method,
}

impl ReportRow {
    pub const COLUMNS: [&'static str; 7] = [
        "n",
        "d_prob_num",
        "d_prob_den",
        "d_prob_float",
        "gap_to_e_inv",
        "d_n",
        "method",
    ];

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Int(self.n as u64),
            (&self.d_prob_num).into(),
            (&self.d_prob_den).into(),
            Cell::Float(self.d_prob_float),
            Cell::Float(self.gap_to_e_inv),
            (&self.d_n).into(),
            Cell::Text(self.method.to_string()),
        ]
    }
}

/// `D_n` for `n = 0..=n_max` from the chosen method.
pub fn solve_rows(method: Method, n_max: usize) -> Vec<ReportRow> {
    let table = solve(method, n_max);
    let der = derangements(n_max);
    (0..=n_max)
        .map(|n| {
            let d = table.d(n).expect("n within table");
            let gap = gap_to_limit(n, &table).expect("n within table");
            ReportRow {
                n,
                d_prob_num: d.numer().clone(),
                d_prob_den: d.denom().clone(),
                d_prob_float: gap.d_n_float,
                gap_to_e_inv: gap.gap,
                d_n: der.d()[n].clone(),
                method,
            }
        })
        .collect()
}

pub fn solve_report(method: Method, n_max: usize) -> Report {
    Report {
        columns: ReportRow::COLUMNS.to_vec(),
        rows: solve_rows(method, n_max)
            .iter()
            .map(ReportRow::cells)
            .collect(),
        meta: Meta::new(method.as_str(), None),
    }
}

pub fn steps_report(n_max: usize) -> LibResult<Report> {
    let table = expected_steps(n_max)?;
    let rows = (1..=n_max)
        .map(|n| {
            let ez = table.ez(n).expect("n within table");
            let (eq_num, eq_den) = match table.eq(n) {
                Some(q) => (q.numer().into(), q.denom().into()),
                None => (Cell::Empty, Cell::Empty),
            };
            vec![
                Cell::Int(n as u64),
                ez.numer().into(),
                ez.denom().into(),
                eq_num,
                eq_den,
                Cell::Float(to_f64(ez)),
            ]
        })
        .collect();
    Ok(Report {
        columns: vec!["n", "ez_num", "ez_den", "eq_num", "eq_den", "ez_float"],
        rows,
        meta: Meta::new("steps", None),
    })
}

pub fn convergence_report(n_max: usize) -> Report {
    let table = solve(Method::Recursive, n_max);
    let rows = (0..=n_max)
        .map(|n| {
            let g = gap_to_limit(n, &table).expect("n within table");
            vec![
                Cell::Int(n as u64),
                Cell::Float(g.d_n_float),
                Cell::Float(g.gap),
                Cell::Float(to_f64(&g.bound)),
            ]
        })
        .collect();
    Report {
        columns: vec!["n", "d_prob_float", "gap_to_e_inv", "bound"],
        rows,
        meta: Meta::new("convergence", None),
    }
}

/// Monte Carlo summary together with the exact `D_n`.
pub fn simulate_report(result: &crate::sim::SimResult, exact_d: &Rational) -> Report {
    let exact_float = to_f64(exact_d);
    let within_ci = result.ci_low <= exact_float && exact_float <= result.ci_high;
    let row = vec![
        Cell::Int(result.n),
        Cell::Int(result.trials),
        Cell::Int(result.d_wins),
        Cell::Float(result.p_hat),
        Cell::Float(result.ci_low),
        Cell::Float(result.ci_high),
        Cell::Float(result.ci_level),
        Cell::Float(result.mean_r_steps),
        Cell::Float(result.sd_r_steps),
        Cell::Int(result.seed),
        Cell::Int(result.workers),
        exact_d.numer().into(),
        exact_d.denom().into(),
        Cell::Float(exact_float),
        Cell::Bool(within_ci),
    ];
    Report {
        columns: vec![
            "n",
            "trials",
            "d_wins",
            "p_hat",
            "ci_low",
            "ci_high",
            "ci_level",
            "mean_r_steps",
            "sd_r_steps",
            "seed",
            "workers",
            "exact_d_num",
            "exact_d_den",
            "exact_d_float",
            "within_ci",
        ],
        rows: vec![row],
        meta: Meta::new("monte-carlo", Some(result.seed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv_string(r: &Report) -> String {
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn floats_round_trip() {
        for v in [0.1, 1.0 / 3.0, 2.311_427_194_090_498_5e-8, 0.0, 1.0] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn solve_csv_small() {
        let text = csv_string(&solve_report(Method::ClosedForm, 2));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "n,d_prob_num,d_prob_den,d_prob_float,gap_to_e_inv,d_n,method"
        );
        assert!(lines[1].starts_with("0,1,1,"));
        assert!(lines[2].starts_with("1,0,1,"));
        assert!(lines[3].starts_with("2,1,2,"));
        assert!(lines[3].ends_with(",1,closed-form"));
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn solve_row_ten() {
        let rows = solve_rows(Method::Recursive, 10);
        let r = &rows[10];
        // 1334961/3628800 in lowest terms
        assert_eq!(r.d_prob_num, BigInt::from(16_481));
        assert_eq!(r.d_prob_den, BigInt::from(44_800));
        assert_eq!(r.d_n, BigUint::from(1_334_961u32));
    }

    #[test]
    fn json_layout() {
        let mut buf = Vec::new();
        solve_report(Method::Gf, 0).write_json(&mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["meta"]["method"], "gf");
        assert_eq!(v["meta"]["seed"], Value::Null);
        assert_eq!(v["meta"]["version"], VERSION);
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0]["n"], 0);
        assert_eq!(rows[0]["d_prob_num"], "1");
        assert_eq!(rows[0]["d_prob_den"], "1");
    }

    #[test]
    fn steps_rows() {
        let r = steps_report(3).unwrap();
        let text = csv_string(&r);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,ez_num,ez_den,eq_num,eq_den,ez_float");
        assert!(lines[1].starts_with("1,1,1,,,"));
        assert!(lines[2].starts_with("2,1,1,0,1,"));
        assert!(lines[3].starts_with("3,4,3,1,3,"));
        assert!(steps_report(0).is_err());
    }

    #[test]
    fn convergence_rows_respect_bound() {
        let r = convergence_report(25);
        for row in &r.rows {
            let (Cell::Float(gap), Cell::Float(bound)) = (&row[2], &row[3]) else {
                panic!("float columns expected");
            };
            assert!(*gap <= *bound + crate::exact::FLOAT_SLACK);
        }
        assert_eq!(r.rows[0][1], Cell::Float(1.0));
    }
}
