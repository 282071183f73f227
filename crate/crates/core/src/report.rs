//! Stable line-oriented reports and DOT export.

use std::fmt::Write as _;

use crate::classify::Classification;
use crate::coxeter::FcCheck;
use crate::fc_rank::{LabelVerdict, SSetReport};
use crate::heap::Heap;
use crate::rank::{IntervalVerdict, RankOutcome};

fn push_line(out: &mut String, line: impl AsRef<str>) {
    out.push_str(line.as_ref());
    out.push('\n');
}

/// `RANKED` with one `rank` line per element, or `UNRANKED` with the
/// certificate walk and its signed sum.
pub fn rank_report(heap: &Heap, outcome: &RankOutcome) -> String {
    let mut out = String::new();
    match outcome {
        RankOutcome::Ranked(r) => {
            push_line(&mut out, "RANKED");
            for e in heap.elements() {
                push_line(&mut out, format!("rank {} {}", heap.name(e), r.rank(e)));
            }
        }
        RankOutcome::Unranked(cert) => {
            push_line(&mut out, "UNRANKED");
            let mut walk = String::from("walk");
            if let Some(first) = cert.walk.first() {
                write!(walk, " {}", heap.name(first.from)).expect("writing to a String");
            }
            for step in &cert.walk {
                write!(walk, " {} {}", step.dir, heap.name(step.to)).expect("writing to a String");
            }
            push_line(&mut out, walk);
            push_line(&mut out, format!("sum {}", cert.signed_sum));
        }
    }
    out
}

/// `ERROR circuit v1 ... vk`.
pub fn circuit_report(circuit: &[String]) -> String {
    format!("ERROR circuit {}\n", circuit.join(" "))
}

pub fn interval_verdict_report(heap: &Heap, verdict: &IntervalVerdict) -> String {
    match verdict {
        IntervalVerdict::Ranked => "RANKED\n".to_string(),
        IntervalVerdict::Unranked(iv) => format!(
            "UNRANKED\ninterval {} {}\n",
            heap.name(iv.bottom),
            heap.name(iv.top)
        ),
    }
}

/// `SSET <a> <b> members <e:label ...> verdict <pattern>`.
pub fn sset_line(heap: &Heap, report: &SSetReport) -> String {
    let mut out = format!(
        "SSET {} {} members",
        heap.name(report.interval.bottom),
        heap.name(report.interval.top)
    );
    for &c in &report.members {
        write!(out, " {}:{}", heap.name(c), heap.label_name(c)).expect("writing to a String");
    }
    write!(out, " verdict {}", report.pattern).expect("writing to a String");
    out
}

pub fn label_verdict_report(heap: &Heap, verdict: &LabelVerdict) -> String {
    match verdict {
        LabelVerdict::Ranked => "RANKED\n".to_string(),
        LabelVerdict::Unranked(report) => format!("UNRANKED\n{}\n", sset_line(heap, report)),
    }
}

/// `FC`, or `NOT-FC <kind> <witness elements>`.
pub fn fc_report(heap: &Heap, check: &FcCheck) -> String {
    match check {
        FcCheck::FullyCommutative => "FC\n".to_string(),
        FcCheck::Violation(v) => {
            let witness: Vec<&str> = v.witness.iter().map(|&e| heap.name(e)).collect();
            format!("NOT-FC {} {}\n", v.kind, witness.join(" "))
        }
    }
}

/// `FC-FINITE <tag> [+ <tag> ...]`, or `NOT-FC-FINITE` followed by one
/// line per component.
pub fn classification_report(c: &Classification) -> String {
    if c.is_fc_finite() {
        let tags: Vec<String> = c
            .components
            .iter()
            .filter_map(|comp| comp.tag.map(|t| t.to_string()))
            .collect();
        if tags.is_empty() {
            return "FC-FINITE\n".to_string();
        }
        return format!("FC-FINITE {}\n", tags.join(" + "));
    }
    let mut out = String::from("NOT-FC-FINITE\n");
    for comp in &c.components {
        let tag = comp
            .tag
            .map_or_else(|| "unclassified".to_string(), |t| t.to_string());
        push_line(
            &mut out,
            format!("component {} : {}", comp.generators.join(" "), tag),
        );
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram in DOT: one node per element labelled `id:piece`, one
/// edge per cover, drawn bottom to top.
pub fn to_dot(heap: &Heap) -> String {
    let mut out = String::from("digraph heap {\n  rankdir=BT;\n");
    for e in heap.elements() {
        writeln!(
            out,
            "  n{} [label=\"{}:{}\"];",
            e.0,
            dot_escape(heap.name(e)),
            dot_escape(heap.label_name(e))
        )
        .expect("writing to a String");
    }
    for &(a, b) in heap.covers() {
        writeln!(out, "  n{} -> n{};", a.0, b.0).expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
