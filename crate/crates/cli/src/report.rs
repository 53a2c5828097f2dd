//! Line-oriented reports with a trailing JSON document.
//!
//! ```text
//! # tca-lab 0.1.0
//! # command: decompose
//! # config: flavor=symmetric rank=4 degree=2 seed=1
//! table flavor=symmetric n=4 d=2 irreps={(2,2):1, (4):1}
//! check closed-form/symmetric/d=2 PASS
//! verdict PASS
//! --- json
//! {...}
//! ```

use std::fmt;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 2,
            Verdict::Inconclusive => 3,
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub config: Vec<(String, String)>,
    pub records: Vec<Record>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, config: Vec<(String, String)>) -> Self {
        Report { command: command.to_string(), config, records: Vec::new(), checks: Vec::new() }
    }

    pub fn record<K: ToString, V: ToString>(&mut self, kind: &str, fields: impl IntoIterator<Item = (K, V)>) {
        self.records.push(Record {
            kind: kind.to_string(),
            fields: fields.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), verdict, detail: detail.into() });
    }

    /// FAIL if anything failed, else INCONCLUSIVE if anything was, else PASS.
    pub fn verdict(&self) -> Verdict {
        self.checks.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Pass)
    }

    pub fn absorb(&mut self, other: Report) {
        self.records.extend(other.records);
        self.checks.extend(other.checks);
    }

    fn json(&self) -> Value {
        let pairs = |v: &[(String, String)]| {
            Value::Object(v.iter().map(|(k, x)| (k.clone(), Value::String(x.clone()))).collect::<Map<_, _>>())
        };
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert("kind".into(), Value::String(r.kind.clone()));
                m.insert("fields".into(), pairs(&r.fields));
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("tool".into(), Value::String(format!("tca-lab {}", env!("CARGO_PKG_VERSION"))));
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("config".into(), pairs(&self.config));
        m.insert("records".into(), Value::Array(records));
        m.insert("checks".into(), serde_json::to_value(&self.checks).expect("serializable"));
        m.insert("verdict".into(), serde_json::to_value(self.verdict()).expect("serializable"));
        Value::Object(m)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn quote(v: &str) -> String {
    if v.is_empty() || v.contains(char::is_whitespace) {
        format!("{v:?}")
    } else {
        v.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# tca-lab {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(f, "# command: {}", self.command)?;
        let config: Vec<String> = self.config.iter().map(|(k, v)| format!("{k}={}", quote(v))).collect();
        writeln!(f, "# config: {}", config.join(" "))?;
        // reproducible builds convention; no wall-clock time otherwise
        if let Ok(epoch) = std::env::var("SOURCE_DATE_EPOCH") {
            writeln!(f, "# timestamp: {epoch}")?;
        }
        for r in &self.records {
            write!(f, "{}", r.kind)?;
            for (k, v) in &r.fields {
                write!(f, " {k}={}", quote(v))?;
            }
            writeln!(f)?;
        }
        for c in &self.checks {
            write!(f, "check {} {}", c.name, c.verdict)?;
            if !c.detail.is_empty() {
                write!(f, " {}", quote(&c.detail))?;
            }
            writeln!(f)?;
        }
        writeln!(f, "verdict {}", self.verdict())?;
        writeln!(f, "--- json")?;
        writeln!(f, "{}", serde_json::to_string_pretty(&self.json()).expect("serializable"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        let mut r = Report::new("x", vec![]);
        assert_eq!(r.verdict(), Verdict::Pass);
        r.check("a", Verdict::Pass, "");
        r.check("b", Verdict::Inconclusive, "budget");
        assert_eq!(r.verdict(), Verdict::Inconclusive);
        r.check("c", Verdict::Fail, "");
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.verdict().exit_code(), 2);
    }

    #[test]
    fn rendering() {
        let mut r = Report::new("decompose", vec![("rank".into(), "2".into())]);
        r.record("table", [("irreps", "{(2,2):1, (4):1}"), ("d", "2")]);
        r.check("closed-form", Verdict::Pass, "");
        let text = r.render();
        assert!(text.contains("table irreps=\"{(2,2):1, (4):1}\" d=2\n"));
        assert!(text.contains("check closed-form PASS\nverdict PASS\n--- json\n"));
        let json: Value = serde_json::from_str(text.split("--- json\n").nth(1).unwrap()).unwrap();
        assert_eq!(json["verdict"], "PASS");
        assert_eq!(json["records"][0]["fields"]["d"], "2");
    }
}
