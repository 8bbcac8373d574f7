use serde::Serialize;
use serde_json::Value;
use tribound_core::verify::Ratio;
use tribound_core::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The command's checks do not apply to this graph.
    Inapplicable,
    Error,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
}

impl Invariants {
    pub fn basic(g: &Graph) -> Invariants {
        let stats = g.degree_stats();
        Invariants {
            n: g.order(),
            m: g.size(),
            min_degree: stats.min,
            max_degree: stats.max,
            ..Invariants::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub seq: usize,
    pub graph6: String,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: f64,
    /// Bound slack in units of `n`, for the summary.
    #[serde(skip)]
    pub slack: Option<Ratio>,
    #[serde(skip)]
    pub equality: bool,
    #[serde(skip)]
    pub decode_error: bool,
}

impl VerdictRecord {
    pub fn new(command: &'static str, graph6: String) -> VerdictRecord {
        VerdictRecord {
            seq: 0,
            graph6,
            command,
            invariants: None,
            report: None,
            status: Status::Pass,
            error: None,
            elapsed_ms: 0.0,
            slack: None,
            equality: false,
            decode_error: false,
        }
    }

    pub fn error(command: &'static str, graph6: String, error: impl ToString) -> VerdictRecord {
        VerdictRecord {
            status: Status::Error,
            error: Some(error.to_string()),
            ..VerdictRecord::new(command, graph6)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub command: &'static str,
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub error: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack: Option<Ratio>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack_graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", flatten)]
    pub extra: Option<serde_json::Map<String, Value>>,
    #[serde(skip)]
    pub decode_errors: usize,
}

impl Summary {
    pub fn new(command: &'static str, bounds: bool) -> Summary {
        Summary {
            command,
            records: 0,
            pass: 0,
            fail: 0,
            inapplicable: 0,
            error: 0,
            strict: bounds.then_some(0),
            equality: bounds.then_some(0),
            min_slack: None,
            min_slack_graph6: None,
            extra: None,
            decode_errors: 0,
        }
    }

    pub fn add(&mut self, r: &VerdictRecord) {
        self.records += 1;
        match r.status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Inapplicable => self.inapplicable += 1,
            Status::Error => self.error += 1,
        }
        self.decode_errors += r.decode_error as usize;
        if let Some(slack) = r.slack {
            if r.equality {
                *self.equality.get_or_insert(0) += 1;
            } else if slack.num > 0 {
                *self.strict.get_or_insert(0) += 1;
            }
            if self.min_slack.map_or(true, |m| slack < m) {
                self.min_slack = Some(slack);
                self.min_slack_graph6 = Some(r.graph6.clone());
            }
        }
    }

    /// 2 on undecodable input, 1 on any failed or erroneous record, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.decode_errors > 0 {
            2
        } else if self.fail > 0 || self.error > 0 {
            1
        } else {
            0
        }
    }
}
