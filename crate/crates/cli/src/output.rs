use std::fmt::Write as _;

use clap::ValueEnum;
use lagcorr::scalars::{format_rational, GaussianRational};
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// One command result in all three renderings.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Output {
    pub fn new(json: Value) -> Self {
        Self { json, header: Vec::new(), rows: Vec::new(), text: String::new() }
    }

    pub fn csv(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                if self.rows.is_empty() {
                    // fall back to flattened key/value pairs
                    writeln!(s, "key,value").unwrap();
                    flatten("", &self.json, &mut s);
                    return s;
                }
                writeln!(s, "{}", self.header.join(",")).unwrap();
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(|c| quote(c)).collect();
                    writeln!(s, "{}", cells.join(",")).unwrap();
                }
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn quote(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) => {
            for (k, x) in a.iter().enumerate() {
                flatten(&join(&k.to_string()), x, out);
            }
        }
        Value::String(s) => writeln!(out, "{},{}", quote(prefix), quote(s)).unwrap(),
        other => writeln!(out, "{},{}", quote(prefix), other).unwrap(),
    }
}

/// `[exponent, re, im]` CSV cells.
pub fn term_row(variable: &str, k: i64, c: &GaussianRational) -> Vec<String> {
    vec![variable.to_string(), k.to_string(), format_rational(c.re()), format_rational(c.im())]
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
