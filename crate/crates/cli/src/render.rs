use std::fmt::Write as _;

use schensted_core::{InsertionTrace, Tableau, TableauPair};

pub fn trace(scheme: &str, trace: &InsertionTrace) -> String {
    let mut out = String::new();
    let inserted = trace.steps.first().map_or(0, |s| s.entry);
    let _ = writeln!(out, "scheme: {scheme}");
    let _ = writeln!(out, "insert {inserted} into");
    let _ = writeln!(out, "{}\n", trace.initial);
    for (step, snapshot) in trace.steps.iter().zip(trace.snapshots()) {
        let _ = writeln!(out, "{snapshot}");
        let _ = writeln!(out, "  [{}] {} at {}\n", step.rule.label(), step.entry, step.square);
    }
    let _ = writeln!(out, "result:");
    let _ = writeln!(out, "{}", trace.final_tableau);
    out
}

pub fn correspondence(scheme: &str, word: &str, history: &[Tableau], pair: &TableauPair) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scheme: {scheme}");
    let _ = writeln!(out, "permutation: {word}\n");
    for (k, p) in history.iter().enumerate() {
        let _ = writeln!(out, "P_{}:", k + 1);
        let _ = writeln!(out, "{p}\n");
    }
    let _ = writeln!(out, "P:");
    let _ = writeln!(out, "{}\n", pair.p);
    let _ = writeln!(out, "Q:");
    let _ = writeln!(out, "{}", pair.q);
    out
}
