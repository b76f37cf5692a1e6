use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::prime_field::PrimeField;
use crate::algebra::primes::odd_primes_up_to;
use crate::error::Result;

use super::analysis::{analyze_prime, KnotContext, PrimeReport};
use super::candidates::Candidates;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    /// The candidate primes.
    Auto,
    List(Vec<u64>),
    /// Every odd prime up to the bound, together with the candidates.
    ScanUpTo(u64),
}

#[derive(Clone, Debug)]
pub struct RamificationReport {
    pub knot: String,
    pub curve: String,
    pub baseline: Value,
    pub primes: Vec<PrimeReport>,
    pub candidates: Candidates,
}

impl RamificationReport {
    pub fn ramified(&self) -> Vec<u64> {
        self.primes.iter().filter(|r| !r.phenomena.is_empty()).map(|r| r.p).collect()
    }

    pub fn to_json(&self) -> Value {
        // an array keeps the primes in numeric order
        let cands: Vec<Value> = self.candidates.primes.iter().map(|(p, s)| json!({"p": p, "sources": s})).collect();
        json!({
            "knot": self.knot,
            "curve": self.curve,
            "baseline": self.baseline,
            "primes": serde_json::to_value(&self.primes).expect("serializable"),
            "candidates": cands,
            "unfactored_candidates": self.candidates.unfactored.iter().map(|(n, s)| json!({"value": n, "sources": s})).collect::<Vec<_>>(),
            "notes": self.candidates.notes,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("knot {}", self.knot));
        out.push(format!("P = {}", self.curve));
        let b = &self.baseline;
        out.push(format!(
            "over Q: {} component(s) ({}), {} singular point(s), Y^ab = {}",
            b["components"],
            b["components_source"].as_str().unwrap_or(""),
            b["singular_points"].as_array().map_or(0, |g| g.iter().map(|e| e["count"].as_u64().unwrap_or(0)).sum::<u64>()),
            b["y_counts"]["y_ab"]
        ));
        for pt in b["infinity"].as_array().into_iter().flatten() {
            out.push(format!(
                "  at infinity {}: intersection multiplicity {}, multiplicity {}, {}",
                pt["point"].as_str().unwrap_or(""),
                pt["intersection_multiplicity"],
                pt["multiplicity"],
                if pt["smooth"] == Value::Bool(true) { "smooth" } else { "singular" }
            ));
        }
        let cands: Vec<String> = self.candidates.primes.iter().map(|(p, s)| format!("{p} [{}]", s.join(", "))).collect();
        out.push(format!("candidates: {}", if cands.is_empty() { "none".to_string() } else { cands.join("; ") }));
        for (n, s) in &self.candidates.unfactored {
            out.push(format!("  unfactored {n} [{}]", s.join(", ")));
        }
        for n in &self.candidates.notes {
            out.push(format!("  note: {n}"));
        }
        for r in &self.primes {
            if r.phenomena.is_empty() {
                out.push(format!("p = {}: unramified", r.p));
            } else {
                out.push(format!("p = {}: ramified", r.p));
                for ph in &r.phenomena {
                    out.push(format!("  {ph}"));
                }
            }
            for e in &r.evidence {
                out.push(format!("    {e}"));
            }
        }
        out.push(format!(
            "ramified primes: {}",
            self.ramified().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        ));
        out.join("\n") + "\n"
    }
}

/// Analyze the selected primes in parallel; results are ordered by prime.
pub fn ramify(ctx: &KnotContext, selection: &PrimeSelection) -> Result<RamificationReport> {
    let mut candidates = ctx.candidates.clone();
    let mut primes = candidates.prime_list();
    match selection {
        PrimeSelection::Auto => {}
        PrimeSelection::List(ps) => {
            for &p in ps {
                PrimeField::new(p)?;
            }
            primes = ps.clone();
            for &p in ps {
                candidates.force(p, "user");
            }
        }
        PrimeSelection::ScanUpTo(n) => {
            for p in odd_primes_up_to(*n) {
                candidates.force(p, "scan");
                primes.push(p);
            }
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let reports = primes.par_iter().map(|&p| analyze_prime(ctx, p)).collect::<Result<Vec<_>>>()?;
    Ok(RamificationReport {
        knot: ctx.name.clone(),
        curve: ctx.curve_text(),
        baseline: ctx.baseline.to_json(),
        primes: reports,
        candidates,
    })
}
