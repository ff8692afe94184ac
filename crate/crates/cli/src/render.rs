use std::fmt::Write as _;

use minfrac::reference::DifferentialReport;
use minfrac::{OpenInterval, Rational, Solution};
use serde::Serialize;

use crate::{Algorithm, OutputFormat};

const DECIMAL_DIGITS: usize = 20;

/// What a solver produced: the iterative solver carries its full trace, the
/// reference solvers only an answer.
#[derive(Clone, Debug)]
pub enum Answer {
    Traced(Box<Solution>),
    Plain(Rational),
}

impl Answer {
    pub fn value(&self) -> &Rational {
        match self {
            Answer::Traced(s) => &s.answer,
            Answer::Plain(r) => r,
        }
    }
}

#[derive(Serialize)]
struct Endpoints {
    low: String,
    high: String,
}

impl From<&OpenInterval> for Endpoints {
    fn from(i: &OpenInterval) -> Self {
        Endpoints {
            low: i.low().to_string(),
            high: i.high().to_string(),
        }
    }
}

#[derive(Serialize)]
struct StepDoc {
    index: usize,
    w: String,
    low: String,
    high: String,
    modified: bool,
}

#[derive(Serialize)]
struct SolveDoc {
    input: Endpoints,
    algorithm: &'static str,
    answer: String,
    decimal: String,
    w_list: Option<Vec<String>>,
    steps: Option<Vec<StepDoc>>,
    terminal: Option<Endpoints>,
    intermediates: Option<Vec<String>>,
    /// Integer subtracted from the input before iterating; `w_list`
    /// back-substitutes to `answer - offset`.
    offset: Option<String>,
}

fn solve_doc(interval: &OpenInterval, algorithm: Algorithm, answer: &Answer) -> SolveDoc {
    let value = answer.value();
    let mut doc = SolveDoc {
        input: interval.into(),
        algorithm: algorithm.name(),
        answer: value.to_string(),
        decimal: value.to_decimal(DECIMAL_DIGITS).0,
        w_list: None,
        steps: None,
        terminal: None,
        intermediates: None,
        offset: None,
    };
    if let Answer::Traced(solution) = answer {
        let trace = &solution.trace;
        doc.w_list = Some(trace.steps.iter().map(|s| s.w.to_string()).collect());
        doc.steps = Some(
            trace
                .steps
                .iter()
                .map(|s| StepDoc {
                    index: s.index,
                    w: s.w.to_string(),
                    low: s.interval_after.low().to_string(),
                    high: s.interval_after.high().to_string(),
                    modified: s.modification_applied(),
                })
                .collect(),
        );
        doc.terminal = Some((&trace.terminal).into());
        doc.intermediates = Some(
            solution
                .intermediates
                .iter()
                .map(|r| r.to_string())
                .collect(),
        );
        doc.offset = Some(trace.offset.to_string());
    }
    doc
}

fn decimal_line(value: &Rational) -> String {
    let (digits, exact) = value.to_decimal(DECIMAL_DIGITS);
    if value.is_integer() {
        value.to_summary_string()
    } else if exact {
        format!("{} = {digits}", value.to_summary_string())
    } else {
        format!("{} ≈ {digits}", value.to_summary_string())
    }
}

fn trace_text(solution: &Solution) -> String {
    let trace = &solution.trace;
    let mut text = String::new();
    let _ = writeln!(text, "interval {}", trace.initial);
    if trace.is_shifted() {
        let shifted = trace
            .initial
            .shifted(&-trace.offset.clone())
            .map(|i| i.to_string())
            .unwrap_or_default();
        let _ = writeln!(text, "shift by -{}: {}", trace.offset, shifted);
    }
    for step in &trace.steps {
        let _ = write!(
            text,
            "step {}: W = {}, interval {}",
            step.index, step.w, step.interval_after
        );
        if let Some(m) = &step.modification {
            let _ = write!(text, "  MODIFIED {} -> {}", m.before, m.after);
        }
        text.push('\n');
    }
    let _ = writeln!(text, "terminal {}", trace.terminal);
    let chain: Vec<String> = solution
        .intermediates
        .iter()
        .map(|r| r.to_string())
        .collect();
    let _ = writeln!(text, "chain {}", chain.join(" -> "));
    text
}

/// Renders the result of a `solve` invocation.
pub fn render_solve(
    interval: &OpenInterval,
    algorithm: Algorithm,
    answer: &Answer,
    trace: bool,
    output: OutputFormat,
) -> String {
    match output {
        OutputFormat::Structured => {
            let doc = solve_doc(interval, algorithm, answer);
            let mut text = serde_json::to_string_pretty(&doc).expect("plain strings serialize");
            text.push('\n');
            text
        }
        OutputFormat::Text if !trace => format!("{}\n", answer.value().to_summary_string()),
        OutputFormat::Text => {
            let mut text = match answer {
                Answer::Traced(solution) if !solution.trace.steps.is_empty() => {
                    trace_text(solution)
                }
                Answer::Traced(_) => String::new(),
                Answer::Plain(_) => format!(
                    "interval {interval}\n({} keeps no trace)\n",
                    algorithm.name()
                ),
            };
            let _ = writeln!(text, "answer {}", decimal_line(answer.value()));
            text
        }
    }
}

#[derive(Serialize)]
struct MismatchDoc {
    low: String,
    high: String,
    paper: String,
    oracle: String,
    stern_brocot: String,
}

#[derive(Serialize)]
struct ReportDoc {
    max_denominator: u64,
    pairs_checked: u64,
    passed: bool,
    mismatches: Vec<MismatchDoc>,
}

fn outcome(result: &minfrac::Result<Rational>) -> String {
    match result {
        Ok(r) => r.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Renders a differential report as a summary line followed by one line per
/// mismatch, or as a JSON document.
pub fn render_report(report: &DifferentialReport, output: OutputFormat) -> String {
    match output {
        OutputFormat::Text => {
            let mut text = report.summary();
            text.push('\n');
            for line in report.mismatch_lines() {
                text.push_str(&line);
                text.push('\n');
            }
            text
        }
        OutputFormat::Structured => {
            let doc = ReportDoc {
                max_denominator: report.max_denominator,
                pairs_checked: report.pairs_checked,
                passed: report.passed(),
                mismatches: report
                    .mismatches
                    .iter()
                    .map(|m| MismatchDoc {
                        low: m.interval.low().to_string(),
                        high: m.interval.high().to_string(),
                        paper: outcome(&m.paper),
                        oracle: outcome(&m.oracle),
                        stern_brocot: m.stern_brocot.to_string(),
                    })
                    .collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("plain strings serialize");
            text.push('\n');
            text
        }
    }
}
