//! Command-line front end: link invariants, observable splitting, 't Hooft
//! normal ordering, lattice verification suites, and symbolic inner-product
//! splitting, all emitting deterministic JSON.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification
//! failure. Every result equals the corresponding direct library call.

use clap::{Parser, Subcommand};
use levelsplit::abelian::LoopKind;
use levelsplit::linkmodel::parse_link_json;
use levelsplit::skein::{cs_expectation, Normalization};
use levelsplit::splitting::{
    normal_order, split_inner_product, tmym_expectation, LoopOperatorWord, SplitError, Theory,
    TheoryLevel, WordEntry,
};
use levelsplit::wzwlab::{run_suite, VerifySuite};
use levelsplit::PDCode;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "levelsplit",
    about = "Wilson-loop invariants and Chern-Simons level splitting for 2+1D gauge theories",
    version
)]
struct Cli {
    /// Write JSON output to a file (atomically) instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the Wilson-loop expectation of a link at level k
    Invariant {
        #[arg(long)]
        level: i64,
        /// Link JSON file ({"format":"braid",...} or {"format":"pd",...})
        #[arg(long)]
        input: PathBuf,
        /// "bracket" or "writhe_corrected"
        #[arg(long, default_value = "bracket")]
        normalization: String,
    },
    /// Evaluate a loop-operator word in TMYM at even level k via splitting
    Tmym {
        #[arg(long)]
        level: i64,
        /// Mass gap of the theory
        #[arg(long)]
        m: f64,
        /// Word JSON file with entries, intersections, optional curves map
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value = "bracket")]
        normalization: String,
    },
    /// Normal-order a W/T loop word and report the exchange phase
    Algebra {
        #[arg(long)]
        level: i64,
        #[arg(long)]
        word: PathBuf,
    },
    /// Run a lattice verification suite
    Verify {
        /// flatness | pw | gauss | symplectic | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 32)]
        grid: usize,
        #[arg(long, default_value_t = 0.3)]
        amplitude: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        level: i64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Print the symbolic split of a TMYM or YM inner product
    Split {
        /// TMYM or YM
        #[arg(long)]
        theory: String,
        #[arg(long)]
        level: i64,
        #[arg(long)]
        m: Option<f64>,
    },
}

struct CmdError {
    code: u8,
    msg: String,
}

impl CmdError {
    fn parse(msg: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_PARSE,
            msg: msg.into(),
        }
    }
    fn domain(msg: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_DOMAIN,
            msg: msg.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value).expect("serializable output");
            if let Some(path) = &cli.output {
                if let Err(e) = write_atomically(path, &text) {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(EXIT_PARSE);
                }
            } else {
                println!("{text}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn write_atomically(path: &PathBuf, text: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, format!("{text}\n"))?;
    std::fs::rename(&tmp, path)
}

fn dispatch(cmd: &Cmd) -> Result<(Value, u8), CmdError> {
    match cmd {
        Cmd::Invariant {
            level,
            input,
            normalization,
        } => cmd_invariant(*level, input, normalization).map(|v| (v, 0)),
        Cmd::Tmym {
            level,
            m,
            word,
            normalization,
        } => cmd_tmym(*level, *m, word, normalization).map(|v| (v, 0)),
        Cmd::Algebra { level, word } => cmd_algebra(*level, word).map(|v| (v, 0)),
        Cmd::Verify {
            suite,
            grid,
            amplitude,
            seed,
            level,
            tol,
        } => cmd_verify(suite, *grid, *amplitude, *seed, *level, *tol),
        Cmd::Split { theory, level, m } => cmd_split(theory, *level, *m).map(|v| (v, 0)),
    }
}

fn read_file(path: &PathBuf) -> Result<String, CmdError> {
    std::fs::read_to_string(path)
        .map_err(|e| CmdError::parse(format!("cannot read {}: {e}", path.display())))
}

fn parse_normalization(s: &str) -> Result<Normalization, CmdError> {
    match s {
        "bracket" => Ok(Normalization::Bracket),
        "writhe_corrected" => Ok(Normalization::WritheCorrected),
        other => Err(CmdError::parse(format!(
            "normalization must be `bracket` or `writhe_corrected`, got `{other}`"
        ))),
    }
}

fn cmd_invariant(level: i64, input: &PathBuf, normalization: &str) -> Result<Value, CmdError> {
    let norm = parse_normalization(normalization)?;
    let text = read_file(input)?;
    let pd = parse_link_json(&text).map_err(|e| CmdError::parse(format!("link input: {e}")))?;
    let e =
        cs_expectation(&pd, level, norm).map_err(|e| CmdError::domain(format!("level: {e}")))?;
    Ok(e.to_json())
}

struct WordFile {
    word: LoopOperatorWord,
    curves: BTreeMap<String, PDCode>,
}

fn parse_word_file(path: &PathBuf) -> Result<WordFile, CmdError> {
    let text = read_file(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CmdError::parse(format!("word file is not valid JSON: {e}")))?;
    let entries_v = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CmdError::parse("word file: missing `entries` array"))?;
    let mut entries = Vec::with_capacity(entries_v.len());
    for (i, e) in entries_v.iter().enumerate() {
        let kind = match e.get("kind").and_then(Value::as_str) {
            Some("W") => LoopKind::W,
            Some("T") => LoopKind::T,
            _ => {
                return Err(CmdError::parse(format!(
                    "entries[{i}].kind must be \"W\" or \"T\""
                )))
            }
        };
        let curve = e
            .get("curve")
            .and_then(Value::as_str)
            .ok_or_else(|| CmdError::parse(format!("entries[{i}].curve must be a string")))?
            .to_string();
        let charge = e
            .get("charge")
            .and_then(Value::as_i64)
            .ok_or_else(|| CmdError::parse(format!("entries[{i}].charge must be an integer")))?;
        entries.push(WordEntry {
            kind,
            curve,
            charge,
        });
    }
    let inter_v = v
        .get("intersections")
        .and_then(Value::as_array)
        .ok_or_else(|| CmdError::parse("word file: missing `intersections` matrix"))?;
    let mut intersections = Vec::with_capacity(inter_v.len());
    for (i, row) in inter_v.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| CmdError::parse(format!("intersections[{i}] must be an array")))?
            .iter()
            .map(|x| {
                x.as_i64().ok_or_else(|| {
                    CmdError::parse(format!("intersections[{i}] entries must be integers"))
                })
            })
            .collect::<Result<Vec<i64>, CmdError>>()?;
        intersections.push(row);
    }
    let word = LoopOperatorWord::new(entries, intersections)
        .map_err(|e| CmdError::domain(format!("word: {e}")))?;
    let mut curves = BTreeMap::new();
    if let Some(map) = v.get("curves") {
        let map = map
            .as_object()
            .ok_or_else(|| CmdError::parse("word file: `curves` must be an object"))?;
        for (name, link) in map {
            let pd = parse_link_json(&link.to_string())
                .map_err(|e| CmdError::parse(format!("curves.{name}: {e}")))?;
            curves.insert(name.clone(), pd);
        }
    }
    Ok(WordFile { word, curves })
}

fn scalar_json(value: &levelsplit::RootOfUnityScalar) -> (Value, f64, f64) {
    let z = value.to_complex();
    (json!(value.coeffs()), z.re, z.im)
}

fn cmd_tmym(level: i64, m: f64, word: &PathBuf, normalization: &str) -> Result<Value, CmdError> {
    let norm = parse_normalization(normalization)?;
    let wf = parse_word_file(word)?;
    let t = TheoryLevel::new(Theory::Tmym, level, Some(m))
        .map_err(|e| CmdError::domain(e.to_string()))?;
    let e = tmym_expectation(&wf.word, &wf.curves, &t, norm).map_err(|e| match e {
        SplitError::OddLevel(_) => CmdError::domain(format!(
            "{e}; the observable map exists only for even levels"
        )),
        SplitError::NonzeroIntersection(_, _) => {
            CmdError::domain(format!("{e}; zero intersection required"))
        }
        other => CmdError::domain(other.to_string()),
    })?;
    let (exact, re, im) = scalar_json(&e.value);
    let provenance: Vec<Value> = e
        .provenance
        .iter()
        .map(|p| {
            let (pe, pre, pim) = scalar_json(&p.value);
            json!({
                "curve": p.curve,
                "cs_level": p.cs_level,
                "value_exact": pe,
                "value_re": pre,
                "value_im": pim,
            })
        })
        .collect();
    Ok(json!({
        "level": level,
        "value_exact": exact,
        "value_re": re,
        "value_im": im,
        "provenance": provenance,
        "correction": {"order": e.correction.order},
    }))
}

fn cmd_algebra(level: i64, word: &PathBuf) -> Result<Value, CmdError> {
    let wf = parse_word_file(word)?;
    let (canonical, phase) =
        normal_order(&wf.word, level).map_err(|e| CmdError::domain(e.to_string()))?;
    let entries: Vec<Value> = canonical
        .entries()
        .iter()
        .map(|e| {
            json!({
                "kind": match e.kind { LoopKind::W => "W", LoopKind::T => "T" },
                "curve": e.curve,
                "charge": e.charge,
            })
        })
        .collect();
    let z = phase.to_complex();
    Ok(json!({
        "entries": entries,
        "intersections": canonical.intersections(),
        "phase": {
            "numerator": *phase.turns().numer(),
            "denominator": *phase.turns().denom(),
        },
        "phase_re": z.re,
        "phase_im": z.im,
    }))
}

fn cmd_verify(
    suite: &str,
    grid: usize,
    amplitude: f64,
    seed: u64,
    level: i64,
    tol: f64,
) -> Result<(Value, u8), CmdError> {
    let suites: Vec<VerifySuite> = match suite {
        "all" => vec![
            VerifySuite::Flatness,
            VerifySuite::Pw,
            VerifySuite::Gauss,
            VerifySuite::Symplectic,
        ],
        other => vec![other
            .parse()
            .map_err(|e: String| CmdError::parse(format!("--suite: {e}")))?],
    };
    let mut reports = Vec::new();
    let mut all_converged = true;
    for s in suites {
        let r = run_suite(s, grid, amplitude, seed, level, tol)
            .map_err(|e| CmdError::domain(e.to_string()))?;
        all_converged &= r.converged;
        reports.push(serde_json::to_value(&r).expect("serializable report"));
    }
    let value = if reports.len() == 1 {
        reports.pop().unwrap()
    } else {
        Value::Array(reports)
    };
    Ok((value, if all_converged { 0 } else { EXIT_VERIFY }))
}

fn cmd_split(theory: &str, level: i64, m: Option<f64>) -> Result<Value, CmdError> {
    let tag = match theory {
        "TMYM" => Theory::Tmym,
        "YM" => Theory::Ym,
        "CS" => Theory::Cs,
        other => Err(CmdError::parse(format!(
            "--theory must be TMYM, YM or CS, got `{other}`"
        )))?,
    };
    let t = TheoryLevel::new(tag, level, m.or(Some(1.0)).filter(|_| tag != Theory::Cs))
        .map_err(|e| CmdError::domain(e.to_string()))?;
    let form = split_inner_product(&t).map_err(|e| CmdError::domain(e.to_string()))?;
    let factors: Vec<Value> = form
        .factors
        .iter()
        .map(|f| {
            json!({
                "level": {
                    "numerator": *f.level.numer(),
                    "denominator": *f.level.denom(),
                },
                "wzw_coefficient": f.wzw_coefficient.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "theory": theory,
        "level": form.level,
        "factors": factors,
        "correction": {"order": form.correction.order},
        "observable_map_available": form.observable_map_available,
    }))
}
