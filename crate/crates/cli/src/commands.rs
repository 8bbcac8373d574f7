use serde::Serialize;
use serde_json::{json, Value};
use tribound_core::decomposition::{gallai_edmonds, verify_ge};
use tribound_core::solvers::{
    chromatic_number, clique_number, independence_number, max_matching, CHROMATIC_MAX_ORDER,
};
use tribound_core::verify::{
    check_bound, check_class, chi_binding_check, classify_equality, perfect_matching_shortcut,
    proof_ledger, Ratio, Theorem,
};
use tribound_core::Graph;

use crate::record::{Invariants, Status, VerdictRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Bounds(&'static [Theorem]),
    Corollary,
}

#[derive(Clone, Copy, Debug)]
pub enum Task {
    Invariants,
    Verify(Check),
    Decompose,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Invariants => "invariants",
            Task::Verify(_) => "verify",
            Task::Decompose => "decompose",
        }
    }

    pub fn reports_bounds(self) -> bool {
        matches!(self, Task::Verify(_))
    }

    pub fn run(self, text: String, g: &Graph) -> VerdictRecord {
        match self {
            Task::Invariants => invariants(text, g),
            Task::Verify(Check::Bounds(theorems)) => bounds(text, g, theorems),
            Task::Verify(Check::Corollary) => corollary(text, g),
            Task::Decompose => decompose(text, g),
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn invariants(text: String, g: &Graph) -> VerdictRecord {
    let alpha = independence_number(g);
    let beta = max_matching(g);
    let omega = clique_number(g);
    let chi = (g.order() <= CHROMATIC_MAX_ORDER).then(|| chromatic_number(g).expect("within envelope"));
    let inv = Invariants {
        alpha: Some(alpha.value),
        beta: Some(beta.value),
        omega: Some(omega.value),
        chi: chi.as_ref().map(|w| w.value),
        ..Invariants::basic(g)
    };
    VerdictRecord {
        invariants: Some(inv),
        report: Some(json!({
            "triangle_free": g.is_triangle_free(),
            "connected": g.is_connected(),
            "alpha": alpha,
            "beta": beta,
            "omega": omega,
            "chi": chi,
        })),
        ..VerdictRecord::new("invariants", text)
    }
}

fn bounds(text: String, g: &Graph, theorems: &[Theorem]) -> VerdictRecord {
    if let Err(e) = check_class(g) {
        return VerdictRecord {
            invariants: Some(Invariants::basic(g)),
            ..VerdictRecord::error("verify", text, e)
        };
    }
    let mut entries = Vec::new();
    let mut ok = true;
    let mut slack: Option<Ratio> = None;
    let mut equality = false;
    let mut inv = Invariants::basic(g);
    for &t in theorems {
        let report = check_bound(g, t.spec()).expect("class checked");
        let classification = classify_equality(g, t).expect("class checked");
        ok &= report.holds() && classification.consistent();
        equality |= report.equality;
        let s = Ratio::new(report.slack, report.spec.scale());
        slack = Some(slack.map_or(s, |m| m.min(s)));
        inv.alpha = Some(report.alpha);
        inv.beta = Some(report.beta);
        entries.push(json!({
            "theorem": t,
            "bound": report,
            "classification": classification,
        }));
    }
    let shortcut = perfect_matching_shortcut(g).expect("class checked");
    VerdictRecord {
        invariants: Some(inv),
        report: Some(json!({ "bounds": entries, "shortcut": shortcut })),
        status: if ok { Status::Pass } else { Status::Fail },
        slack,
        equality,
        ..VerdictRecord::new("verify", text)
    }
}

fn corollary(text: String, g: &Graph) -> VerdictRecord {
    let v = match chi_binding_check(g) {
        Ok(v) => v,
        Err(e) => {
            return VerdictRecord {
                invariants: Some(Invariants::basic(g)),
                ..VerdictRecord::error("verify", text, e)
            }
        }
    };
    VerdictRecord {
        invariants: Some(Invariants {
            omega: Some(v.omega),
            chi: Some(v.chi),
            ..Invariants::basic(g)
        }),
        status: if v.passed() { Status::Pass } else { Status::Fail },
        // 7/4 omega - chi
        slack: Some(Ratio::new(v.scaled_rhs - v.scaled_lhs, 4)),
        equality: v.tight,
        report: Some(to_value(&v)),
        ..VerdictRecord::new("verify", text)
    }
}

fn decompose(text: String, g: &Graph) -> VerdictRecord {
    let d = gallai_edmonds(g);
    let checks = verify_ge(g, &d);
    let beta = d.implied_matching_number(g.order());
    // the ledger is only defined on the bounded class
    let ledger = check_class(g).ok().map(|_| proof_ledger(g).expect("class checked"));
    let status = if !checks.passed() || ledger.as_ref().is_some_and(|l| !l.passed()) {
        Status::Fail
    } else if ledger.is_none() {
        Status::Inapplicable
    } else {
        Status::Pass
    };
    VerdictRecord {
        invariants: Some(Invariants {
            beta,
            ..Invariants::basic(g)
        }),
        report: Some(json!({
            "decomposition": d,
            "checks": checks,
            "ledger": ledger,
        })),
        status,
        ..VerdictRecord::new("decompose", text)
    }
}
