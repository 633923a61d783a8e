//! Newline-delimited JSON records for reduction traces, with 1-based ids to
//! match the graph file format.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::graph::{Vertex, Weight};
use crate::reduction::{ReductionOutcome, ReductionStep, RuleInstance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub rule_id: u8,
    pub witnesses: RuleInstance,
    pub removed: Vec<Vertex>,
    pub marked: Vec<Vertex>,
    pub k_delta: i64,
    /// Remaining excess in quarters after this step.
    pub k_after: i64,
    pub extension_payload: Vec<(Vertex, Vertex, Weight)>,
}

impl TraceRecord {
    pub fn from_step(index: usize, step: &ReductionStep, k_after: i64) -> Self {
        let one = |v: Vertex| v + 1;
        TraceRecord {
            step: index + 1,
            rule_id: step.rule_id(),
            witnesses: step.instance.map_vertices(one),
            removed: step.removed.iter().map(|&v| one(v)).collect(),
            marked: step.marked.iter().map(|&v| one(v)).collect(),
            k_delta: step.k_delta_quarters,
            k_after,
            extension_payload: step.payload.iter().map(|&(u, v, w)| (one(u), one(v), w)).collect(),
        }
    }
}

/// One record per step of `out`, starting from an excess of `k_quarters`.
pub fn trace_records(out: &ReductionOutcome, k_quarters: i64) -> Vec<TraceRecord> {
    let mut k = k_quarters;
    out.trace
        .iter()
        .enumerate()
        .map(|(i, s)| {
            k -= s.k_delta_quarters;
            TraceRecord::from_step(i, s, k)
        })
        .collect()
}

pub fn write_trace<W: Write>(mut w: W, out: &ReductionOutcome, k_quarters: i64) -> std::io::Result<()> {
    for r in trace_records(out, k_quarters) {
        serde_json::to_writer(&mut w, &r)?;
        writeln!(w)?;
    }
    Ok(())
}
