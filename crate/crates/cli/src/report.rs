use std::collections::BTreeMap;

use instanton_quiver::{Answer, Certificate, PencilVerdict};
use serde::Serialize;
use serde_json::{json, Value};

/// Structured record of one invocation. Printed as JSON with `--json`,
/// otherwise as the accumulated text lines.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub seed: u64,
    pub verdicts: BTreeMap<String, Value>,
    pub exit_code: i32,
    #[serde(skip)]
    lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            seed,
            verdicts: BTreeMap::new(),
            exit_code: 0,
            lines: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn verdict(&mut self, key: &str, value: Value) {
        self.verdicts.insert(key.to_string(), value);
    }

    /// Records a pencil verdict under `key` and prints it as `label: ...`.
    pub fn pencil(&mut self, key: &str, label: &str, v: &PencilVerdict) {
        let seed = self.seed;
        self.line(format!("{label}: {}", describe_verdict(v, seed)));
        self.verdict(key, pencil_json(v, seed));
    }

    pub fn emit(&self, as_json: bool) {
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(self).expect("report serializes")
            );
        } else {
            for l in &self.lines {
                println!("{l}");
            }
        }
    }
}

pub fn describe_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Point(l) => format!("rank drop at {}", vector(l)),
        Certificate::Line { base, dir, gcd } => format!(
            "maximal minors on the line {} + t*{} share the factor {gcd}",
            vector(base),
            vector(dir)
        ),
        Certificate::Plane { origin, p, q, basis } => format!(
            "maximal minors on the plane {} + x*{} + y*{} generate a proper ideal ({} basis elements)",
            vector(origin),
            vector(p),
            vector(q),
            basis.len()
        ),
        Certificate::Lines(cs) => format!("all {} probed lines meet the locus", cs.len()),
        Certificate::DimensionCount { rows, cols } => format!(
            "dimension count: a {rows}x{cols} pencil drops rank in codimension at most {}",
            rows + 1 - cols
        ),
    }
}

pub fn describe_verdict(v: &PencilVerdict, seed: u64) -> String {
    match (&v.answer, &v.certificate) {
        (Answer::ProbablyYes { rounds }, _) => format!("ProbablyYes({rounds}) [seed {seed}]"),
        (a, Some(c)) => format!("{a} ({})", describe_certificate(c)),
        (a, None) => a.to_string(),
    }
}

pub fn pencil_json(v: &PencilVerdict, seed: u64) -> Value {
    let (answer, rounds) = match v.answer {
        Answer::Yes => ("Yes", None),
        Answer::No => ("No", None),
        Answer::ProbablyYes { rounds } => ("ProbablyYes", Some(rounds)),
    };
    json!({
        "answer": answer,
        "exact": v.is_exact(),
        "rounds": rounds,
        "seed": seed,
        "certificate": v.certificate.as_ref().map(describe_certificate),
    })
}

fn vector<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
