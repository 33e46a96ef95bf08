use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub const CSV_HEADER: [&str; 6] = ["command", "item", "value", "expected", "tolerance", "pass"];

/// Rounds to 15 significant digits.
pub fn round15(v: f64) -> f64 {
    if v.is_finite() {
        format!("{v:.14e}").parse().unwrap_or(v)
    } else {
        v
    }
}

/// Formats with 15 significant digits, switching to exponent form for very
/// large or small magnitudes.
pub fn fmt15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp) as usize, v)
    } else {
        format!("{v:.14e}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Numeric {
    pub value: f64,
    pub err_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn numeric(name: impl Into<String>, expected: f64, got: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            expected: fmt15(expected),
            got: fmt15(got),
            tolerance: Some(tolerance),
            pass: (got - expected).abs() <= tolerance,
        }
    }

    pub fn exact(name: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check {
            name: name.into(),
            pass: expected == got,
            expected,
            got,
            tolerance: None,
        }
    }

    /// A check with a hand-written pass condition.
    pub fn custom(
        name: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        tolerance: Option<f64>,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            expected: expected.into(),
            got: got.into(),
            tolerance,
            pass,
        }
    }
}

/// Output of one command. Every key is always present in JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub exact: Option<String>,
    pub numeric: Option<Numeric>,
    pub oracle: Option<f64>,
    pub delta: Option<f64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            exact: None,
            numeric: None,
            oracle: None,
            delta: None,
            checks: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    /// Sets the oracle value and, when a numeric value exists, the delta.
    pub fn with_oracle(mut self, oracle: f64) -> Self {
        self.oracle = Some(oracle);
        self.delta = self.numeric.as_ref().map(|n| (n.value - oracle).abs());
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn rounded(&self) -> Report {
        let mut r = self.clone();
        if let Some(n) = r.numeric.as_mut() {
            n.value = round15(n.value);
            n.err_bound = n.err_bound.map(round15);
            if let Some(c) = n.coefficients.as_mut() {
                c.iter_mut().for_each(|v| *v = round15(*v));
            }
        }
        r.oracle = r.oracle.map(round15);
        r.delta = r.delta.map(round15);
        r
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.rounded()).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{} {}", self.command, inputs.join(" "));
        if let Some(e) = &self.exact {
            let _ = writeln!(out, "  exact   {e}");
        }
        if let Some(n) = &self.numeric {
            let bound = n.err_bound.map(|b| format!("  (err <= {b:.2e})")).unwrap_or_default();
            let _ = writeln!(out, "  value   {}{bound}", fmt15(n.value));
            if let Some(c) = &n.coefficients {
                for (i, v) in c.iter().enumerate() {
                    let _ = writeln!(out, "  c[{i:>2}]   {}", fmt15(*v));
                }
            }
        }
        if let Some(o) = self.oracle {
            let _ = writeln!(out, "  oracle  {}", fmt15(o));
        }
        if let Some(d) = self.delta {
            let _ = writeln!(out, "  delta   {d:.3e}");
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &self.checks {
                let tol = c.tolerance.map(|t| format!("  tol {t:.0e}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  {}  {:<width$}  expected {}  got {}{tol}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.got,
                );
            }
            let failed = self.checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(out, "  {} checks, {failed} failed", self.checks.len());
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let cmd = self.command.as_str();
        let opt = |v: Option<f64>| v.map(fmt15).unwrap_or_default();
        w.write_record(CSV_HEADER).expect("in-memory write");
        let mut row = |item: &str, value: String, expected: String, tol: String, pass: &str| {
            w.write_record([cmd, item, &value, &expected, &tol, pass])
                .expect("in-memory write");
        };
        for (k, v) in &self.inputs {
            row(&format!("input:{k}"), v.clone(), String::new(), String::new(), "");
        }
        if let Some(e) = &self.exact {
            row("exact", e.clone(), String::new(), String::new(), "");
        }
        if let Some(n) = &self.numeric {
            row("numeric", fmt15(n.value), String::new(), opt(n.err_bound), "");
            for (i, c) in n.coefficients.iter().flatten().enumerate() {
                row(&format!("c{i}"), fmt15(*c), String::new(), String::new(), "");
            }
        }
        if let Some(o) = self.oracle {
            row("oracle", fmt15(o), String::new(), String::new(), "");
        }
        if let Some(d) = self.delta {
            row("delta", fmt15(d), String::new(), String::new(), "");
        }
        for c in &self.checks {
            let tol = c.tolerance.map(|t| format!("{t:e}")).unwrap_or_default();
            row(&c.name, c.got.clone(), c.expected.clone(), tol, if c.pass { "PASS" } else { "FAIL" });
        }
        drop(row);
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}
