use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use shapestab_core::{ChainOutcome, HomologyVerdict, MatrixChainReport, StabilizationReport};

/// Machine-readable verdict of `check --json`. Every field is always
/// present; `stabilization_index` and `stable_rank` are `null` exactly when
/// the chain does not stabilize, `witness` exactly when it does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub stabilizes: bool,
    pub shape_equivalence: bool,
    pub ranks: Vec<usize>,
    pub stabilization_index: Option<usize>,
    pub stable_rank: Option<usize>,
    pub witness: Option<String>,
    pub conclusion: String,
}

impl VerdictJson {
    pub fn from_report(report: &StabilizationReport, handlebody: bool) -> Self {
        Self {
            stabilizes: report.stabilizes,
            shape_equivalence: report.shape_equivalence,
            ranks: report.ranks.clone(),
            stabilization_index: report.stabilization_index(),
            stable_rank: report.stable_rank,
            witness: report.witness_text(),
            conclusion: report.conclusion(handlebody),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn join(ranks: &[usize]) -> String {
    ranks.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn human_report(report: &StabilizationReport, handlebody: bool) -> String {
    let n = report.rank_equal_index;
    let mut out = String::new();
    let _ = writeln!(out, "ranks of im Φ^n: {}", join(&report.ranks));
    let _ = writeln!(
        out,
        "rank phase: first repeat r_{n} = r_{} = {}",
        n + 1,
        report.ranks[n + 1]
    );
    match &report.witness {
        None => {
            let _ = writeln!(
                out,
                "membership phase: every Φ^{n}(g) lies in im Φ^{}, so im Φ^{n} = im Φ^{}",
                n + 1,
                n + 1
            );
        }
        Some((i, w)) => {
            let a = &report.alphabet;
            let _ = writeln!(
                out,
                "membership phase: Φ^{n}({}) = {} is not in im Φ^{}",
                a.name(*i).unwrap_or("?"),
                w.display(a),
                n + 1
            );
        }
    }
    let _ = writeln!(out, "{}", report.conclusion(handlebody));
    out
}

pub fn matrix_report(
    report: &MatrixChainReport,
    isomorphism: Option<bool>,
    homology: Option<&HomologyVerdict>,
) -> String {
    let mut out = String::new();
    let ranks: Vec<usize> = report.images.iter().map(|b| b.rank()).collect();
    let _ = writeln!(out, "ring: {}", report.ring);
    let _ = writeln!(out, "ranks of im A^n: {}", join(&ranks));
    match report.outcome {
        ChainOutcome::Stabilizes { index } => {
            let _ = writeln!(
                out,
                "stabilizes at n = {index}: im A^{index} = im A^{}, stable rank {}",
                index + 1,
                report.stable_rank.unwrap_or(0)
            );
            let stable = &report.images[index];
            if stable.rank() == 0 {
                let _ = writeln!(out, "stable image: 0");
            } else {
                let _ = writeln!(out, "stable image basis (columns):");
                for v in stable.vectors() {
                    let entries: Vec<String> = v.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "  ({})", entries.join(", "));
                }
            }
        }
        ChainOutcome::NeverStabilizes { rank_repeat_index: k } => {
            let _ = writeln!(
                out,
                "never stabilizes: rank repeats at n = {k} but im A^{k} ≠ im A^{}, so the chain decreases forever",
                k + 1
            );
        }
        ChainOutcome::Inconclusive { steps } => {
            let _ = writeln!(out, "inconclusive: no verdict within {steps} steps");
        }
    }
    if let Some(iso) = isomorphism {
        let _ = writeln!(
            out,
            "A restricted to the stable image is {}",
            if iso { "an isomorphism" } else { "not an isomorphism" }
        );
    }
    if let Some(h) = homology {
        let _ = writeln!(out, "{h}");
    }
    out
}
