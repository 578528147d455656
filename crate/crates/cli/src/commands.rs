use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use infcone::cones::{check_inclusions, compute_cone, ConeKind, ConeResult};
use infcone::ideal::{dimension, singular_locus};
use infcone::io::{
    load_arc, load_cone, load_splitting, load_subspace, load_variety, ConeFile, Report,
    SubspaceFile,
};
use infcone::projections::{
    check_affine_linearity, check_proper, find_transverse_subspace, sheet_count,
    verify_theorem_1_2, verify_theorem_1_3, TheoremReport, Verdict,
};
use infcone::witness::{
    algebraic_region_check, check_cone_membership, witness_directions, Pairing, SampleSchedule,
};
use infcone::{Budget, Error, MonomialOrder, Variety};

use crate::{Cli, Command, Global, OrderArg, Which};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_HYPOTHESIS: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_FAILED: u8 = 4;
pub const EXIT_INTERNAL: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Resource { .. } | Error::RetryLimit { .. } => EXIT_RESOURCE,
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(Value, Value, u8), Failure>;

struct Job<'a> {
    global: &'a Global,
    budget: Budget,
}

impl Job<'_> {
    fn log(&self, msg: &str) {
        if self.global.verbose > 0 {
            eprintln!("[infcone] {msg}");
        }
    }

    fn variety(&self, path: &Path) -> Result<Variety, Failure> {
        self.log(&format!("loading {}", path.display()));
        Ok(load_variety(path, &self.budget)?)
    }

    fn cone(&self, which: ConeKind, x: &Variety) -> Result<ConeResult, Failure> {
        self.log(&format!("computing {which}"));
        Ok(compute_cone(which, x, &self.budget)?)
    }
}

fn kind(w: Which) -> ConeKind {
    match w {
        Which::C3 => ConeKind::C3,
        Which::C4 => ConeKind::C4,
        Which::C5 => ConeKind::C5,
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Verified => EXIT_OK,
        Verdict::HypothesisNotSatisfied | Verdict::HypothesisNotCertified => EXIT_HYPOTHESIS,
        Verdict::Failed => EXIT_FAILED,
        Verdict::ResourceExceeded => EXIT_RESOURCE,
    }
}

fn theorem(report: TheoremReport) -> (Value, u8) {
    let code = verdict_code(report.verdict);
    (to_value(&report), code)
}

fn parse_pairing(text: &str) -> Result<Pairing, Failure> {
    let input = |m: String| Failure {
        code: EXIT_INPUT,
        message: m,
    };
    match text.split_once(':') {
        None if text == "same" => Ok(Pairing::Same),
        Some(("shift", d)) => Ok(Pairing::Shift {
            delta: d.trim().to_string(),
        }),
        Some(("reflect", c)) => Ok(Pairing::Reflect {
            center: c.trim().to_string(),
        }),
        _ => Err(input(format!(
            "unknown pairing `{text}`; use same, shift:<delta> or reflect:<center>"
        ))),
    }
}

fn cone_value(c: &ConeResult) -> Value {
    let mut v = to_value(&ConeFile::from_result(c));
    v["warnings"] = to_value(&c.warnings);
    v
}

fn dispatch(job: &Job, command: &Command) -> Outcome {
    let b = &job.budget;
    match command {
        Command::Cone { which, input } => {
            let x = job.variety(input)?;
            let c = job.cone(kind(*which), &x)?;
            Ok((
                json!({"input": path_str(input), "which": kind(*which)}),
                cone_value(&c),
                EXIT_OK,
            ))
        }
        Command::Inclusions { input } => {
            let x = job.variety(input)?;
            let cones: Vec<ConeResult> = [ConeKind::C3, ConeKind::C4, ConeKind::C5]
                .into_iter()
                .map(|k| job.cone(k, &x))
                .collect::<Result<_, _>>()?;
            let report = check_inclusions(&x, &cones[0], &cones[1], &cones[2], b)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAILED };
            let results = json!({
                "report": to_value(&report),
                "cones": cones.iter().map(cone_value).collect::<Vec<_>>(),
            });
            Ok((json!({"input": path_str(input)}), results, code))
        }
        Command::Dim { input } => {
            let x = job.variety(input)?;
            let order = match job.global.order {
                OrderArg::Grevlex => MonomialOrder::GrevLex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let basis = x.ideal.groebner(&order, b)?;
            let results = json!({
                "k": x.dim,
                "m": x.ambient_dim,
                "order": format!("{:?}", job.global.order).to_lowercase(),
                "basis": basis.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            });
            Ok((json!({"input": path_str(input)}), results, EXIT_OK))
        }
        Command::Degree { input } => {
            let mut x = job.variety(input)?;
            let d = x.compute_degree(b)?;
            Ok((
                json!({"input": path_str(input)}),
                json!({"k": x.dim, "degree": d}),
                EXIT_OK,
            ))
        }
        Command::Singular { input } => {
            let x = job.variety(input)?;
            let sing = singular_locus(&x)?.canonical(b)?;
            let d = dimension(&sing, b)?;
            let results = json!({
                "variables": sing.ctx().names(),
                "generators": sing.nonzero_generators().map(|g| g.to_string()).collect::<Vec<_>>(),
                "dim": d,
            });
            Ok((json!({"input": path_str(input)}), results, EXIT_OK))
        }
        Command::Transverse { input, retries } => {
            let x = job.variety(input)?;
            let c3 = job.cone(ConeKind::C3, &x)?;
            let w = find_transverse_subspace(&x, &c3, job.global.seed, *retries, b)?;
            let results = json!({"subspace": to_value(&SubspaceFile::from_subspace(&w))});
            Ok((
                json!({"input": path_str(input), "seed": job.global.seed}),
                results,
                EXIT_OK,
            ))
        }
        Command::Sheets {
            input,
            subspace,
            samples,
            retries,
        } => {
            let mut x = job.variety(input)?;
            let c3 = job.cone(ConeKind::C3, &x)?;
            let w = match subspace {
                Some(p) => load_subspace(p)?,
                None => find_transverse_subspace(&x, &c3, job.global.seed, *retries, b)?,
            };
            let inputs = json!({
                "input": path_str(input),
                "subspace": subspace.as_deref().map(path_str),
                "seed": job.global.seed,
            });
            let w_value = to_value(&SubspaceFile::from_subspace(&w));
            if !check_proper(&x, &c3, &w, b)? {
                let results = json!({"subspace": w_value, "proper": false});
                return Ok((inputs, results, EXIT_HYPOTHESIS));
            }
            job.log("counting fibers");
            let count = sheet_count(&x, &w, job.global.seed, *samples, *retries, b)?;
            let degree = x.compute_degree(b)?;
            let results = json!({
                "subspace": w_value,
                "proper": true,
                "sheets": count.sheets,
                "degree": degree,
                "fibers": to_value(&count.fibers),
            });
            Ok((inputs, results, EXIT_OK))
        }
        Command::CheckThm12 { input, subspace } => {
            let x = job.variety(input)?;
            let w = load_subspace(subspace)?;
            let (results, code) = theorem(verify_theorem_1_2(&x, &w, b)?);
            Ok((
                json!({"input": path_str(input), "subspace": path_str(subspace)}),
                results,
                code,
            ))
        }
        Command::CheckThm13 {
            input,
            splitting,
            index,
        } => {
            let x = job.variety(input)?;
            let s = load_splitting(splitting)?;
            let (results, code) = theorem(verify_theorem_1_3(&x, &s, *index, b)?);
            let inputs =
                json!({"input": path_str(input), "splitting": path_str(splitting), "index": index});
            Ok((inputs, results, code))
        }
        Command::CheckLinear { input, splitting } => {
            let x = job.variety(input)?;
            let s = splitting.as_deref().map(load_splitting).transpose()?;
            let (results, code) = theorem(check_affine_linearity(&x, s.as_ref(), b)?);
            let inputs =
                json!({"input": path_str(input), "splitting": splitting.as_deref().map(path_str)});
            Ok((inputs, results, code))
        }
        Command::Witness {
            kind: which,
            input,
            arcs,
            pairing,
            cone,
        } => {
            let x = job.variety(input)?;
            let k = kind(*which);
            let arcs_loaded = arcs
                .iter()
                .map(|p| load_arc(p, &x))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = match cone {
                Some(p) => load_cone(p)?,
                None => job.cone(k, &x)?.ideal,
            };
            if ideal.ctx().arity() != x.ambient_dim {
                return Err(Failure {
                    code: EXIT_INPUT,
                    message: format!(
                        "cone has {} variables, expected {}",
                        ideal.ctx().arity(),
                        x.ambient_dim
                    ),
                });
            }
            let sched =
                SampleSchedule::standard(job.global.seed).with_pairing(parse_pairing(pairing)?);
            let dirs = witness_directions(k, &arcs_loaded, &sched)?;
            let report = check_cone_membership(&ideal, &dirs)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAILED };
            let inputs = json!({
                "input": path_str(input),
                "arcs": arcs.iter().map(|p| path_str(p)).collect::<Vec<_>>(),
                "pairing": to_value(&sched.pairing),
                "cone": cone.as_deref().map(path_str),
                "seed": job.global.seed,
            });
            let results = json!({
                "kind": k,
                "cone_generators": ideal.nonzero_generators().map(|g| g.to_string()).collect::<Vec<_>>(),
                "samples": dirs.samples.len(),
                "warnings": dirs.warnings,
                "membership": to_value(&report),
            });
            Ok((inputs, results, code))
        }
        Command::RegionCheck {
            input,
            arcs,
            v1,
            v2,
            a,
            b: exponent,
        } => {
            let x = job.variety(input)?;
            let arcs_loaded = arcs
                .iter()
                .map(|p| load_arc(p, &x))
                .collect::<Result<Vec<_>, _>>()?;
            let (s1, s2) = (load_subspace(v1)?, load_subspace(v2)?);
            let sched = SampleSchedule::standard(job.global.seed);
            let report = algebraic_region_check(&arcs_loaded, &sched, &s1, &s2, *a, *exponent)?;
            let code = if report.holds { EXIT_OK } else { EXIT_FAILED };
            let inputs = json!({
                "input": path_str(input),
                "arcs": arcs.iter().map(|p| path_str(p)).collect::<Vec<_>>(),
                "v1": path_str(v1),
                "v2": path_str(v2),
                "seed": job.global.seed,
            });
            Ok((inputs, to_value(&report), code))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Cone { .. } => "cone",
        Command::Inclusions { .. } => "inclusions",
        Command::Dim { .. } => "dim",
        Command::Degree { .. } => "degree",
        Command::Singular { .. } => "singular",
        Command::Transverse { .. } => "transverse",
        Command::Sheets { .. } => "sheets",
        Command::CheckThm12 { .. } => "check-thm12",
        Command::CheckThm13 { .. } => "check-thm13",
        Command::CheckLinear { .. } => "check-linear",
        Command::Witness { .. } => "witness",
        Command::RegionCheck { .. } => "region-check",
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    let job = Job {
        global: &cli.global,
        budget: Budget::new(cli.global.budget),
    };
    let start = Instant::now();
    let (inputs, results, code) = dispatch(&job, &cli.command)?;
    let report = Report {
        command: command_name(&cli.command).to_string(),
        inputs,
        results,
        timings: cli
            .global
            .timings
            .then(|| json!({"total_seconds": start.elapsed().as_secs_f64()})),
        budget_used: job.budget.used(),
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    match &cli.global.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("cannot write {}: {e}", path.display()),
        })?,
        None => print!("{text}"),
    }
    job.log(&format!("exit code {code}"));
    Ok(code)
}
