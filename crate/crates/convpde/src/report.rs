//! Output documents for the CLI: one serializable structure per command,
//! rendered as plain text or as a single JSON document. Everything here is
//! deterministic: same inputs, byte-identical output.

use std::fmt::Write as _;

use convpde_core::{KernelChain, SecondOrderPde, TripleAnalysis, VarNames};
use serde::Serialize;

use crate::oracle::{ExperimentConfig, InvarianceReport};
use crate::repro::ReproReport;

#[derive(Clone, Debug, Serialize)]
pub struct ConvolveDoc {
    pub command: &'static str,
    pub axis: String,
    pub vars: [String; 2],
    pub inputs: Vec<String>,
    pub result: String,
}

impl ConvolveDoc {
    pub fn to_text(&self) -> String {
        format!("{}\n", self.result)
    }
}

/// Values per open quadrant, in I..IV order.
#[derive(Clone, Debug, Serialize)]
pub struct QuadrantDoc {
    pub i: String,
    pub ii: String,
    pub iii: String,
    pub iv: String,
}

impl QuadrantDoc {
    fn new<T: ToString>(values: &[T; 4]) -> Self {
        QuadrantDoc {
            i: values[0].to_string(),
            ii: values[1].to_string(),
            iii: values[2].to_string(),
            iv: values[3].to_string(),
        }
    }

    fn rows(&self) -> [(&'static str, &str); 4] {
        [
            ("I", &self.i),
            ("II", &self.ii),
            ("III", &self.iii),
            ("IV", &self.iv),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleDoc {
    pub a: String,
    pub b: String,
    pub c: String,
    pub discriminant: String,
    pub sign_method: String,
    pub conclusive: bool,
    pub quadrant_signs: QuadrantDoc,
    pub quadrant_types: QuadrantDoc,
    pub degenerate: bool,
}

pub fn triple_doc(analysis: &TripleAnalysis, vars: &VarNames) -> TripleDoc {
    let pp = |p| convpde_core::pretty_print(p, vars);
    TripleDoc {
        a: pp(&analysis.triple.a),
        b: pp(&analysis.triple.b),
        c: pp(&analysis.triple.c),
        discriminant: pp(&analysis.discriminant),
        sign_method: analysis.signs.method.to_string(),
        conclusive: analysis.signs.conclusive,
        quadrant_signs: QuadrantDoc::new(&analysis.signs.quadrants),
        quadrant_types: QuadrantDoc::new(&analysis.types),
        degenerate: analysis.degenerate,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LowerOrderDoc {
    pub ux: String,
    pub uy: String,
    pub u: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyDoc {
    pub command: &'static str,
    pub vars: [String; 2],
    pub axis: String,
    pub kernels: Vec<String>,
    pub original: TripleDoc,
    pub convolved: TripleDoc,
    pub lower_order: LowerOrderDoc,
    pub rhs: Option<String>,
    pub degenerate: bool,
    pub invariance_agree: Option<bool>,
}

pub fn classify_doc(
    report: &convpde_core::ClassificationReport,
    pde: &SecondOrderPde,
    chain: &KernelChain,
    vars: &VarNames,
) -> ClassifyDoc {
    let pp = |p| convpde_core::pretty_print(p, vars);
    ClassifyDoc {
        command: "classify",
        vars: [vars.first().to_string(), vars.second().to_string()],
        axis: chain.axis().to_string(),
        kernels: chain.kernels().iter().map(&pp).collect(),
        original: triple_doc(&report.original, vars),
        convolved: triple_doc(&report.convolved, vars),
        lower_order: LowerOrderDoc {
            ux: pp(pde.d()),
            uy: pp(pde.e()),
            u: pp(pde.f()),
        },
        rhs: pde.rhs_note().map(str::to_string),
        degenerate: report.convolved.degenerate,
        invariance_agree: report.agreement,
    }
}

fn write_triple(out: &mut String, title: &str, labels: [&str; 3], t: &TripleDoc) {
    let _ = writeln!(out, "{}:", title);
    let _ = writeln!(out, "  {} = {}", labels[0], t.a);
    let _ = writeln!(out, "  {} = {}", labels[1], t.b);
    let _ = writeln!(out, "  {} = {}", labels[2], t.c);
    let _ = writeln!(out, "  D = {}", t.discriminant);
    let _ = writeln!(
        out,
        "  sign method: {}{}",
        t.sign_method,
        if t.conclusive {
            " (conclusive)"
        } else {
            " (not conclusive)"
        }
    );
    for ((q, sign), (_, ty)) in t.quadrant_signs.rows().iter().zip(t.quadrant_types.rows()) {
        let _ = writeln!(out, "  quadrant {:<3} D {}  ->  {}", q, sign, ty);
    }
}

impl ClassifyDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vars: {} {}", self.vars[0], self.vars[1]);
        if self.kernels.is_empty() {
            let _ = writeln!(out, "kernels: none (identity chain)");
        } else {
            let _ = writeln!(
                out,
                "kernels (axis {}, applied left to right): {}",
                self.axis,
                self.kernels.join(", ")
            );
        }
        write_triple(&mut out, "original", ["a", "b", "c"], &self.original);
        write_triple(&mut out, "convolved", ["A", "B", "C"], &self.convolved);
        let _ = writeln!(
            out,
            "lower order: ux = {}, uy = {}, u = {} (stored, never classified)",
            self.lower_order.ux, self.lower_order.uy, self.lower_order.u
        );
        if let Some(rhs) = &self.rhs {
            let _ = writeln!(out, "rhs: {}", rhs);
        }
        if self.degenerate {
            let _ = writeln!(
                out,
                "verdict: degenerate (all convolved principal coefficients are zero)"
            );
        }
        match self.invariance_agree {
            Some(true) => {
                let _ = writeln!(out, "invariance: AGREE (per-quadrant types unchanged)");
            }
            Some(false) => {
                let _ = writeln!(
                    out,
                    "invariance: DISAGREE (convolution changed at least one quadrant verdict)"
                );
            }
            None => {
                let _ = writeln!(out, "invariance: not applicable");
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueDoc {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
    pub values: Vec<ValueDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproDoc {
    pub command: &'static str,
    pub checks: Vec<CheckDoc>,
    pub discrepancy: String,
    pub all_pass: bool,
}

pub fn repro_doc(report: &ReproReport) -> ReproDoc {
    ReproDoc {
        command: "repro",
        checks: report
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.to_string(),
                pass: c.pass,
                values: c
                    .values
                    .iter()
                    .map(|v| ValueDoc {
                        label: v.label.to_string(),
                        expected: v.expected.clone(),
                        actual: v.actual.clone(),
                        pass: v.pass,
                    })
                    .collect(),
            })
            .collect(),
        discrepancy: report.discrepancy.to_string(),
        all_pass: report.all_pass,
    }
}

impl ReproDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let _ = writeln!(
                out,
                "{}  {}",
                if check.pass { "PASS" } else { "FAIL" },
                check.name
            );
            for v in &check.values {
                if check.pass {
                    continue;
                }
                let status = if v.pass { "ok  " } else { "BAD " };
                let _ = writeln!(
                    out,
                    "      {} {}: expected {}, got {}",
                    status, v.label, v.expected, v.actual
                );
            }
        }
        let _ = writeln!(out, "DISCREPANCY: {}", self.discrepancy);
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "result: {}/{} checks pass", passed, self.checks.len());
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialDoc {
    pub trial: u64,
    pub uxx: String,
    pub uxy: String,
    pub uyy: String,
    pub kernels: Vec<String>,
    pub original: QuadrantDoc,
    pub convolved: QuadrantDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzDoc {
    pub command: &'static str,
    pub family: String,
    pub trials: usize,
    pub seed: u64,
    pub max_degree: u32,
    pub chain_len: usize,
    pub axis: String,
    pub agree_count: usize,
    pub disagree_count: usize,
    pub agreement_percent: String,
    pub disagreements: Vec<TrialDoc>,
}

pub fn fuzz_doc(config: &ExperimentConfig, report: &InvarianceReport) -> FuzzDoc {
    let vars = VarNames::default();
    let pp = |p| convpde_core::pretty_print(p, &vars);
    let disagreements = report
        .disagreeing()
        .map(|r| TrialDoc {
            trial: r.index,
            uxx: pp(r.pde.a()),
            uxy: pp(r.pde.b()),
            uyy: pp(r.pde.c()),
            kernels: r.chain.kernels().iter().map(&pp).collect(),
            original: QuadrantDoc::new(&r.original),
            convolved: QuadrantDoc::new(&r.convolved),
        })
        .collect();
    let percent = 100.0 * report.agree_count as f64 / report.records.len().max(1) as f64;
    FuzzDoc {
        command: "fuzz",
        family: config.family.to_string(),
        trials: config.trials,
        seed: config.seed,
        max_degree: config.max_degree,
        chain_len: config.max_chain_len,
        axis: config.axis.to_string(),
        agree_count: report.agree_count,
        disagree_count: report.disagree_count,
        agreement_percent: format!("{:.1}", percent),
        disagreements,
    }
}

fn types_summary(doc: &QuadrantDoc) -> String {
    let rows = doc.rows();
    if rows.iter().all(|(_, v)| *v == rows[0].1) {
        format!("{} in all quadrants", rows[0].1)
    } else {
        rows.iter()
            .map(|(q, v)| format!("{}: {}", q, v))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl FuzzDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "family: {}  trials: {}  seed: {}  max-degree: {}  chain-len: {}  axis: {}",
            self.family, self.trials, self.seed, self.max_degree, self.chain_len, self.axis
        );
        let _ = writeln!(
            out,
            "agreement: {}/{} ({}%)",
            self.agree_count, self.trials, self.agreement_percent
        );
        if self.disagreements.is_empty() {
            let _ = writeln!(out, "disagreements: none");
        } else {
            let _ = writeln!(
                out,
                "disagreements (reproduce with seed={}, stream=trial):",
                self.seed
            );
            for d in &self.disagreements {
                let _ = writeln!(
                    out,
                    "  trial {}: original {} | convolved {}",
                    d.trial,
                    types_summary(&d.original),
                    types_summary(&d.convolved)
                );
            }
        }
        out
    }
}

/// Serializes any command document as one pretty JSON object.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}
