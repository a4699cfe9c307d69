//! validate → generate → Moore → DGLA → verification → oracle, as used by the command line.

use sha2::{Digest, Sha256};

use sdgla_core::dgla::{build_dgla_from_formulas, oracle_compare, verify_dgla};
use sdgla_core::hypercrossed::{from_crossed_module, from_two_crossed_module, validate_crossed_module, validate_two_crossed_module};
use sdgla_core::lie::validate_lie_algebra;
use sdgla_core::simplicial::{moore_complex_unchecked, validate_simplicial, SimplicialLieAlgebra};
use sdgla_core::superfield::oracle_level;
use sdgla_core::{LieAlgebra, Report};

use crate::format::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Truncation used for generated objects when neither the file nor the command line sets one.
pub const DEFAULT_TRUNCATION: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Moore,
    Dgla,
    Oracle { level: Option<usize> },
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Moore => "moore",
            Command::Dgla => "dgla",
            Command::Oracle { .. } => "oracle",
        }
    }
}

pub struct Outcome {
    pub exit: i32,
    pub doc: OutputDocument,
}

pub fn provenance(bytes: &[u8]) -> Provenance {
    Provenance {
        input_sha256: hex::encode(Sha256::digest(bytes)),
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn empty_doc(bytes: &[u8], command: &str) -> OutputDocument {
    OutputDocument {
        provenance: provenance(bytes),
        command: command.to_string(),
        status: "ok".to_string(),
        failed_stage: None,
        error: None,
        truncation: None,
        validation: Vec::new(),
        moore: None,
        dgla: None,
        reports: None,
        oracle: None,
    }
}

fn fail(mut doc: OutputDocument, exit: i32, stage: &str, error: impl ToString) -> Outcome {
    doc.status = "failed".to_string();
    doc.failed_stage = Some(stage.to_string());
    doc.error = Some(error.to_string());
    Outcome { exit, doc }
}

fn lie_reports(r: &mut Report, named: &[(&str, &LieAlgebra)]) {
    for (name, g) in named {
        for mut v in validate_lie_algebra(g).violations {
            v.law = format!("{name}:{}", v.law);
            r.violations.push(v);
        }
    }
}

/// Validators for the parsed input, then the simplicial object it denotes.
fn validated_object(input: &Input, truncation: Option<usize>) -> Result<(Report, Option<SimplicialLieAlgebra>), (i32, String, String)> {
    let mut r = Report::new();
    let g = match input {
        Input::Simplicial { levels, g } => {
            let named: Vec<(String, &LieAlgebra)> = levels.iter().enumerate().map(|(n, l)| (format!("g{n}"), l)).collect();
            let named: Vec<(&str, &LieAlgebra)> = named.iter().map(|(s, l)| (s.as_str(), *l)).collect();
            lie_reports(&mut r, &named);
            if !r.is_empty() {
                return Ok((r, None));
            }
            match truncation {
                Some(k) if k > g.truncation() => {
                    return Err((EXIT_INPUT, "options".into(), format!("truncation {k} exceeds the {} levels supplied", g.truncation())))
                }
                Some(k) => g.truncate(k),
                None => g.clone(),
            }
        }
        Input::CrossedModule(spec) => {
            lie_reports(&mut r, &[("d", &spec.d), ("h", &spec.h)]);
            if r.is_empty() {
                r.extend(validate_crossed_module(spec));
            }
            if !r.is_empty() {
                return Ok((r, None));
            }
            from_crossed_module(spec, truncation.unwrap_or(DEFAULT_TRUNCATION))
                .map_err(|e| (EXIT_MATH, "generate".to_string(), e.to_string()))?
        }
        Input::TwoCrossedModule(spec) => {
            lie_reports(&mut r, &[("k", &spec.k), ("d", &spec.d), ("h", &spec.h)]);
            if r.is_empty() {
                r.extend(validate_two_crossed_module(spec));
            }
            if !r.is_empty() {
                return Ok((r, None));
            }
            from_two_crossed_module(spec, truncation.unwrap_or(DEFAULT_TRUNCATION))
                .map_err(|e| (EXIT_MATH, "generate".to_string(), e.to_string()))?
        }
    };
    r.extend(validate_simplicial(&g));
    Ok((r, Some(g)))
}

pub fn run(bytes: &[u8], command: Command, truncation: Option<usize>) -> Outcome {
    let doc = empty_doc(bytes, command.name());
    let (input, options) = match parse_input(bytes) {
        Ok(x) => x,
        Err(e) => return fail(doc, EXIT_INPUT, "parse", e),
    };
    run_parsed(doc, &input, &options, command, truncation)
}

fn run_parsed(mut doc: OutputDocument, input: &Input, options: &Options, command: Command, truncation: Option<usize>) -> Outcome {
    let truncation = truncation.or(options.truncation);
    let (report, g) = match validated_object(input, truncation) {
        Ok(x) => x,
        Err((exit, stage, e)) => return fail(doc, exit, &stage, e),
    };
    doc.validation = report_to_doc(&report);
    let g = match g {
        Some(g) if report.is_empty() => g,
        _ => return fail(doc, EXIT_MATH, "validate", format!("{} violated laws", report.len())),
    };
    doc.truncation = Some(g.truncation());
    if command == Command::Validate {
        return Outcome { exit: EXIT_OK, doc };
    }

    let moore = moore_complex_unchecked(&g);
    doc.moore = Some(moore_to_doc(&g, &moore));
    match command {
        Command::Moore | Command::Validate => Outcome { exit: EXIT_OK, doc },
        Command::Oracle { level } => {
            let n = level.or(options.oracle_level).unwrap_or(0);
            if n > moore.length() {
                return fail(doc, EXIT_INPUT, "oracle", format!("level {n} exceeds the Moore length {}", moore.length()));
            }
            let lvl = match oracle_level(&g, &moore, n) {
                Ok(l) => l,
                Err(e) => return fail(doc, EXIT_INPUT, "oracle", e),
            };
            doc.oracle = Some(OracleDoc {
                level: n,
                linear: lvl.linear.iter().map(|(&m, mat)| (m, matrix_to_doc(mat, &format!("N{m}"), &format!("N{n}")))).collect(),
                brackets: lvl
                    .brackets
                    .iter()
                    .map(|(&(a, b), t)| BracketTableDoc {
                        degrees: [a, b],
                        table: tensor_to_doc(t, &format!("N{a}"), &format!("N{b}"), &format!("N{n}")),
                    })
                    .collect(),
            });
            Outcome { exit: EXIT_OK, doc }
        }
        Command::Dgla => {
            let l = match build_dgla_from_formulas(&g, &moore) {
                Ok(l) => l,
                Err(e) => return fail(doc, EXIT_MATH, "dgla", e),
            };
            let mut verification = verify_dgla(&l);
            match oracle_compare(&g, &moore, &l) {
                Ok(o) => {
                    verification.oracle = o.oracle;
                    verification.checked.extend(o.checked);
                    verification.sign_table = o.sign_table;
                }
                Err(e) => return fail(doc, EXIT_MATH, "oracle", e),
            }
            doc.dgla = Some(dgla_to_doc(&l));
            doc.reports = Some(verification_to_doc(&verification, true));
            if !verification.axioms.is_empty() {
                return fail(doc, EXIT_MATH, "verify", format!("{} axiom violations", verification.axioms.len()));
            }
            if !verification.oracle.is_empty() {
                return fail(doc, EXIT_MATH, "oracle", format!("{} oracle discrepancies", verification.oracle.len()));
            }
            Outcome { exit: EXIT_OK, doc }
        }
    }
}

/// Re-reads the `dgla` section of an output document and checks the axioms again.
pub fn recheck(bytes: &[u8]) -> Outcome {
    let doc = empty_doc(bytes, "recheck");
    let prior: OutputDocument = match serde_json::from_slice(bytes) {
        Ok(d) => d,
        Err(e) => return fail(doc, EXIT_INPUT, "parse", InputError::from(e)),
    };
    let Some(section) = prior.dgla.as_ref() else {
        return fail(doc, EXIT_INPUT, "parse", "document has no dgla section");
    };
    let l = match dgla_from_doc(section) {
        Ok(l) => l,
        Err(e) => return fail(doc, EXIT_INPUT, "parse", e),
    };
    let v = verify_dgla(&l);
    let mut doc = doc;
    doc.dgla = Some(section.clone());
    doc.reports = Some(verification_to_doc(&v, false));
    if v.axioms.is_empty() {
        Outcome { exit: EXIT_OK, doc }
    } else {
        fail(doc, EXIT_MATH, "verify", format!("{} axiom violations", v.axioms.len()))
    }
}

pub fn to_json(doc: &OutputDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("output documents serialize");
    s.push('\n');
    s
}

/// A short human-readable rendering of an output document.
pub fn to_text(doc: &OutputDocument) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "{} {}: {}", doc.provenance.tool, doc.command, doc.status);
    let _ = writeln!(s, "input sha256 {}", doc.provenance.input_sha256);
    if let (Some(stage), Some(e)) = (&doc.failed_stage, &doc.error) {
        let _ = writeln!(s, "failed at {stage}: {e}");
    }
    for v in &doc.validation {
        let _ = writeln!(s, "  violation {} levels {:?} witness {:?}: {}", v.law, v.levels, v.witness, v.detail);
    }
    if let Some(m) = &doc.moore {
        let _ = writeln!(s, "Moore complex: length {}, dims {:?} (levels {:?})", m.length, m.dims, m.level_dims);
    }
    if let Some(d) = &doc.dgla {
        let _ = writeln!(s, "DGLA: degrees 0..-{}, dims {:?}", d.top, d.dims);
        for (n, m) in d.differential.iter().enumerate() {
            let _ = writeln!(s, "  d_{}: {} -> {} [{}]", n + 1, m.domain, m.codomain, m.entries.join(" "));
        }
        for b in &d.brackets {
            let _ = writeln!(
                s,
                "  [{}, {}] -> {}: shape {:?} [{}]",
                b.table.left,
                b.table.right,
                b.table.target,
                b.table.shape,
                b.table.entries.join(" ")
            );
        }
    }
    if let Some(r) = &doc.reports {
        let _ = writeln!(s, "checked: {:?}", r.checked);
        let _ = writeln!(s, "axiom violations: {}", r.axioms.len());
        for v in &r.axioms {
            let _ = writeln!(s, "  {} levels {:?} witness {:?}: {}", v.law, v.levels, v.witness, v.detail);
        }
        if let Some(o) = &r.oracle {
            let _ = writeln!(s, "oracle discrepancies: {}", o.len());
            for v in o {
                let _ = writeln!(s, "  {} levels {:?} witness {:?}: {}", v.law, v.levels, v.witness, v.detail);
            }
        }
        for e in &r.sign_table {
            let _ = writeln!(
                s,
                "  sign n={} alpha={:?} beta={:?} prose {:+} forward {:+} reverse {:+}",
                e.n, e.alpha, e.beta, e.prose, e.forward, e.reverse
            );
        }
    }
    if let Some(o) = &doc.oracle {
        let _ = writeln!(s, "oracle level {}", o.level);
        for (m, mat) in &o.linear {
            let _ = writeln!(s, "  linear from N{m}: [{}]", mat.entries.join(" "));
        }
        for b in &o.brackets {
            let _ = writeln!(s, "  quadratic {:?}: [{}]", b.degrees, b.table.entries.join(" "));
        }
    }
    s
}
