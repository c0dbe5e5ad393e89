//! Command-line front end. `run` is a pure function from arguments to exit
//! code plus output text, so the binary stays a thin wrapper and tests can
//! drive every subcommand byte-exactly.

use crate::braid::{bkl_to_artin, cable_word, torus_knot_braid_word, ArtinWord, BklWord, BraidError};
use crate::homfly::{gc_lower_bound_with, survey_with, HomflyEngine, HomflyError};
use crate::plumb::{enumerate_mergers, plumb_words, Merger, PlumbError};
use crate::rampichini::{plumb_diagrams, RampError, RampichiniDiagram};
use crate::seifert::{
    arc_presentation, build_guide_graph, canonical_genus, report_text, seifert_circles,
    PlanarDiagram, SeifertError,
};
use std::fmt::Write as _;

/// Name of the only environment knob: an optional entry cap for the HOMFLY
/// engine's memo table.
pub const MEMO_CAP_ENV: &str = "BRAIDBOOK_HOMFLY_MEMO_CAP";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Fail {
    Usage(String),
    Parse(String),
    Domain(String),
}

type CmdResult = Result<String, Fail>;

const USAGE: &str = "braidbook - braid words, HOMFLY-PT, plumbing, torus-grid diagrams, Seifert arc data

USAGE:
  braidbook <command> [args]

COMMANDS:
  torus-braid <p> <q>                 braid word of the (p,q)-torus knot
  cable <p> <q> <k> <l>               braid word of the (k,l)-cable of T(p,q)
  writhe <word>                       writhe of an Artin word
  homfly <word>                       HOMFLY-PT polynomial of the closure
  gc-bound <word>                     canonical-genus lower bound of a knot closure
  survey <max_n> [--format=tsv|text]  cable survey rows for n = 1..max_n
  bkl-expand <bklword>                expand band generators into Artin letters
  plumb-word --b1 <w> --n1 <n> --b2 <w> --n2 <n> --merger <m>
                                      braided Stallings plumbing of band words
  mergers <l1> <l2>                   enumerate mergers of size (l1,l2)
  ramp validate <file>                check a torus-grid diagram file
  ramp extract <file> [--cut <k>]     band word at a vertical cut
  ramp translate <file> --cut <k>     move the cut circle k events to the right
  ramp plumb <f1> <f2> --merger <m>   glue two diagram files along a merger
  seifert circles <pd>                Seifert circles of an oriented PD diagram
  seifert genus <pd>                  canonical genus of a knot diagram
  arcpres <pd>                        arc-presentation report for a diagram

Word, PD and merger arguments may be inline text or @path to read from a file.
Exit codes: 0 ok, 1 domain error, 2 parse or usage error.
";

pub fn run<S: AsRef<str>>(args: &[S]) -> Outcome {
    let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
    if args.is_empty() {
        return Outcome { code: 2, stdout: String::new(), stderr: USAGE.to_string() };
    }
    if args[0] == "help" || args[0] == "--help" || args[0] == "-h" {
        return Outcome { code: 0, stdout: USAGE.to_string(), stderr: String::new() };
    }
    let result = dispatch(&args);
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Fail::Usage(message)) => {
            Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n\n{USAGE}") }
        }
        Err(Fail::Parse(message)) => {
            Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
        }
        Err(Fail::Domain(message)) => {
            Outcome { code: 1, stdout: String::new(), stderr: format!("error: {message}\n") }
        }
    }
}

fn dispatch(args: &[&str]) -> CmdResult {
    match args[0] {
        "torus-braid" => cmd_torus_braid(&args[1..]),
        "cable" => cmd_cable(&args[1..]),
        "writhe" => cmd_writhe(&args[1..]),
        "homfly" => cmd_homfly(&args[1..]),
        "gc-bound" => cmd_gc_bound(&args[1..]),
        "survey" => cmd_survey(&args[1..]),
        "bkl-expand" => cmd_bkl_expand(&args[1..]),
        "plumb-word" => cmd_plumb_word(&args[1..]),
        "mergers" => cmd_mergers(&args[1..]),
        "ramp" => cmd_ramp(&args[1..]),
        "seifert" => cmd_seifert(&args[1..]),
        "arcpres" => cmd_arcpres(&args[1..]),
        other => Err(Fail::Usage(format!("unknown subcommand `{other}`"))),
    }
}

fn braid_fail(err: BraidError) -> Fail {
    match err {
        BraidError::BadLetter(_)
        | BraidError::BadBandToken(_)
        | BraidError::BadHeader(_)
        | BraidError::LetterOutOfRange { .. }
        | BraidError::BandOutOfRange { .. } => Fail::Parse(err.to_string()),
        _ => Fail::Domain(err.to_string()),
    }
}

fn homfly_fail(err: HomflyError) -> Fail {
    match err {
        HomflyError::Braid(inner) => braid_fail(inner),
        other => Fail::Domain(other.to_string()),
    }
}

fn plumb_fail(err: PlumbError) -> Fail {
    match err {
        PlumbError::BadMergerText(_) => Fail::Parse(err.to_string()),
        PlumbError::Braid(inner) => braid_fail(inner),
        other => Fail::Domain(other.to_string()),
    }
}

fn ramp_fail(err: RampError) -> Fail {
    match err {
        RampError::Parse { .. } => Fail::Parse(err.to_string()),
        RampError::Plumb(inner) => plumb_fail(inner),
        other => Fail::Domain(other.to_string()),
    }
}

fn seifert_fail(err: SeifertError) -> Fail {
    match err {
        SeifertError::Parse { .. } => Fail::Parse(err.to_string()),
        other => Fail::Domain(other.to_string()),
    }
}

/// Inline argument or `@path` file indirection.
fn read_input(arg: &str) -> Result<String, Fail> {
    if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Fail::Parse(format!("cannot read `{path}`: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn read_file(path: &str) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::Parse(format!("cannot read `{path}`: {e}")))
}

fn parse_uint(name: &str, token: &str) -> Result<u32, Fail> {
    token.parse::<u32>().map_err(|_| Fail::Parse(format!("{name} must be a nonnegative integer, got `{token}`")))
}

fn expect_args(args: &[&str], n: usize, usage: &str) -> Result<(), Fail> {
    if args.len() != n {
        return Err(Fail::Usage(format!("expected {usage}")));
    }
    Ok(())
}

fn artin_arg(arg: &str) -> Result<ArtinWord, Fail> {
    ArtinWord::parse(&read_input(arg)?).map_err(braid_fail)
}

fn bkl_arg(arg: &str) -> Result<BklWord, Fail> {
    BklWord::parse(&read_input(arg)?).map_err(braid_fail)
}

fn pd_arg(arg: &str) -> Result<PlanarDiagram, Fail> {
    PlanarDiagram::parse(&read_input(arg)?).map_err(seifert_fail)
}

fn merger_arg(arg: &str) -> Result<Merger, Fail> {
    Merger::parse(&read_input(arg)?).map_err(plumb_fail)
}

fn engine_from_env() -> Result<HomflyEngine, Fail> {
    match std::env::var(MEMO_CAP_ENV) {
        Ok(value) => {
            let cap: usize = value
                .parse()
                .map_err(|_| Fail::Usage(format!("{MEMO_CAP_ENV} must be an integer, got `{value}`")))?;
            Ok(HomflyEngine::with_memo_cap(cap))
        }
        Err(_) => Ok(HomflyEngine::new()),
    }
}

/// Pulls the value of `--flag` or `--flag=value` out of an argument list.
fn take_flag(args: &mut Vec<&str>, flag: &str) -> Result<Option<String>, Fail> {
    let mut value = None;
    let mut idx = 0;
    while idx < args.len() {
        let arg = args[idx];
        if arg == flag {
            if idx + 1 >= args.len() {
                return Err(Fail::Usage(format!("flag {flag} needs a value")));
            }
            value = Some(args[idx + 1].to_string());
            args.drain(idx..idx + 2);
        } else if let Some(v) = arg.strip_prefix(&format!("{flag}=")) {
            value = Some(v.to_string());
            args.remove(idx);
        } else {
            idx += 1;
        }
    }
    Ok(value)
}

fn reject_flags(args: &[&str]) -> Result<(), Fail> {
    if let Some(flag) = args.iter().find(|a| a.starts_with("--")) {
        return Err(Fail::Usage(format!("unknown flag `{flag}`")));
    }
    Ok(())
}

fn cmd_torus_braid(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 2, "torus-braid <p> <q>")?;
    let p = parse_uint("p", args[0])?;
    let q = parse_uint("q", args[1])?;
    let word = torus_knot_braid_word(p, q).map_err(braid_fail)?;
    Ok(format!("{}\n", word.to_text()))
}

fn cmd_cable(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 4, "cable <p> <q> <k> <l>")?;
    let p = parse_uint("p", args[0])?;
    let q = parse_uint("q", args[1])?;
    let k = parse_uint("k", args[2])?;
    let l: i64 = args[3]
        .parse()
        .map_err(|_| Fail::Parse(format!("l must be an integer, got `{}`", args[3])))?;
    let base = torus_knot_braid_word(p, q).map_err(braid_fail)?;
    let word = cable_word(&base, k, l).map_err(braid_fail)?;
    Ok(format!("{}\n", word.to_text()))
}

fn cmd_writhe(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 1, "writhe <word>")?;
    Ok(format!("{}\n", artin_arg(args[0])?.writhe()))
}

fn cmd_homfly(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 1, "homfly <word>")?;
    let word = artin_arg(args[0])?;
    let engine = engine_from_env()?;
    Ok(format!("{}\n", engine.polynomial(&word).canonical_text()))
}

fn cmd_gc_bound(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 1, "gc-bound <word>")?;
    let word = artin_arg(args[0])?;
    let engine = engine_from_env()?;
    let bound = gc_lower_bound_with(&engine, &word).map_err(homfly_fail)?;
    Ok(format!("{bound}\n"))
}

fn cmd_survey(args: &[&str]) -> CmdResult {
    let mut args = args.to_vec();
    let format = take_flag(&mut args, "--format")?.unwrap_or_else(|| "tsv".to_string());
    reject_flags(&args)?;
    expect_args(&args, 1, "survey <max_n> [--format=tsv|text]")?;
    let max_n = parse_uint("max_n", args[0])?;
    if max_n < 1 {
        return Err(Fail::Domain("survey needs max_n >= 1".to_string()));
    }
    let engine = engine_from_env()?;
    let mut out = String::new();
    for row in survey_with(&engine, max_n) {
        match (row, format.as_str()) {
            (Ok(row), "tsv") => {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", row.n, row.genus, row.gc_lower_bound, row.verdict);
            }
            (Ok(row), "text") => {
                let _ = writeln!(
                    out,
                    "n={} cable_word_length={} genus={} gc_lower_bound={} verdict={}",
                    row.n, row.cable_word_length, row.genus, row.gc_lower_bound, row.verdict
                );
            }
            (Err(err), _) => {
                let _ = writeln!(out, "ERROR\t{err}");
            }
            (_, other) => return Err(Fail::Usage(format!("unknown survey format `{other}`"))),
        }
    }
    Ok(out)
}

fn cmd_bkl_expand(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 1, "bkl-expand <bklword>")?;
    let word = bkl_arg(args[0])?;
    Ok(format!("{}\n", bkl_to_artin(&word).to_text()))
}

fn cmd_plumb_word(args: &[&str]) -> CmdResult {
    let mut args = args.to_vec();
    let b1 = take_flag(&mut args, "--b1")?.ok_or_else(|| Fail::Usage("plumb-word needs --b1".into()))?;
    let n1 = take_flag(&mut args, "--n1")?.ok_or_else(|| Fail::Usage("plumb-word needs --n1".into()))?;
    let b2 = take_flag(&mut args, "--b2")?.ok_or_else(|| Fail::Usage("plumb-word needs --b2".into()))?;
    let n2 = take_flag(&mut args, "--n2")?.ok_or_else(|| Fail::Usage("plumb-word needs --n2".into()))?;
    let merger = take_flag(&mut args, "--merger")?;
    reject_flags(&args)?;
    if !args.is_empty() {
        return Err(Fail::Usage("plumb-word takes only flags".into()));
    }
    let n1 = parse_uint("n1", &n1)? as usize;
    let n2 = parse_uint("n2", &n2)? as usize;
    let b1 = with_strands(bkl_arg(&b1)?, n1)?;
    let b2 = with_strands(bkl_arg(&b2)?, n2)?;
    let merger = match merger {
        Some(text) => merger_arg(&text)?,
        None => Merger::identity(b1.len(), b2.len()),
    };
    let word = plumb_words(&b1, &b2, &merger).map_err(plumb_fail)?;
    Ok(format!("{}\n", word.to_text_with_header()))
}

fn with_strands(word: BklWord, strands: usize) -> Result<BklWord, Fail> {
    if word.strands() > strands {
        return Err(Fail::Domain(format!(
            "word needs at least {} strands, got --n{}",
            word.strands(),
            strands
        )));
    }
    BklWord::new(word.letters().to_vec(), strands).map_err(braid_fail)
}

fn cmd_mergers(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 2, "mergers <l1> <l2>")?;
    let l1 = parse_uint("l1", args[0])? as usize;
    let l2 = parse_uint("l2", args[1])? as usize;
    let mut out = String::new();
    for merger in enumerate_mergers(l1, l2) {
        let _ = writeln!(out, "{}", merger.to_text());
    }
    Ok(out)
}

fn cmd_ramp(args: &[&str]) -> CmdResult {
    if args.is_empty() {
        return Err(Fail::Usage("ramp needs a subcommand: validate, extract, translate or plumb".into()));
    }
    match args[0] {
        "validate" => {
            let rest = &args[1..];
            reject_flags(rest)?;
            expect_args(rest, 1, "ramp validate <file>")?;
            let diagram = RampichiniDiagram::parse(&read_file(rest[0])?).map_err(ramp_fail)?;
            let validation = diagram.validate();
            if validation.is_valid() {
                Ok("valid\n".to_string())
            } else {
                let mut message = String::from("invalid diagram:\n");
                for v in &validation.violations {
                    let _ = writeln!(message, "  {v}");
                }
                Err(Fail::Domain(message.trim_end().to_string()))
            }
        }
        "extract" => {
            let mut rest = args[1..].to_vec();
            let cut = take_flag(&mut rest, "--cut")?.unwrap_or_else(|| "0".to_string());
            reject_flags(&rest)?;
            expect_args(&rest, 1, "ramp extract <file> [--cut <k>]")?;
            let cut = parse_uint("cut", &cut)? as usize;
            let diagram = RampichiniDiagram::parse(&read_file(rest[0])?).map_err(ramp_fail)?;
            let word = diagram.extract_word(cut).map_err(ramp_fail)?;
            Ok(format!("{}\n", word.to_text_with_header()))
        }
        "translate" => {
            let mut rest = args[1..].to_vec();
            let cut = take_flag(&mut rest, "--cut")?
                .ok_or_else(|| Fail::Usage("ramp translate needs --cut <k>".into()))?;
            reject_flags(&rest)?;
            expect_args(&rest, 1, "ramp translate <file> --cut <k>")?;
            let cut = parse_uint("cut", &cut)? as usize;
            let diagram = RampichiniDiagram::parse(&read_file(rest[0])?).map_err(ramp_fail)?;
            let translated = diagram.translate(cut).map_err(ramp_fail)?;
            Ok(translated.to_text())
        }
        "plumb" => {
            let mut rest = args[1..].to_vec();
            let merger = take_flag(&mut rest, "--merger")?;
            reject_flags(&rest)?;
            expect_args(&rest, 2, "ramp plumb <file1> <file2> --merger <m>")?;
            let first = RampichiniDiagram::parse(&read_file(rest[0])?).map_err(ramp_fail)?;
            let second = RampichiniDiagram::parse(&read_file(rest[1])?).map_err(ramp_fail)?;
            let merger = match merger {
                Some(text) => merger_arg(&text)?,
                None => Merger::identity(first.start.len(), second.start.len()),
            };
            let plumbed = plumb_diagrams(&first, &second, &merger).map_err(ramp_fail)?;
            Ok(plumbed.diagram.to_text())
        }
        other => Err(Fail::Usage(format!("unknown ramp subcommand `{other}`"))),
    }
}

fn cmd_seifert(args: &[&str]) -> CmdResult {
    if args.is_empty() {
        return Err(Fail::Usage("seifert needs a subcommand: circles or genus".into()));
    }
    match args[0] {
        "circles" => {
            let rest = &args[1..];
            reject_flags(rest)?;
            expect_args(rest, 1, "seifert circles <pd>")?;
            let diagram = pd_arg(rest[0])?;
            let circles = seifert_circles(&diagram);
            let mut out = format!("circles {}\n", circles.count);
            for circle in &circles.circles {
                let edges =
                    circle.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
                if edges.is_empty() {
                    out.push_str("circle\n");
                } else {
                    let _ = writeln!(out, "circle {edges}");
                }
            }
            Ok(out)
        }
        "genus" => {
            let rest = &args[1..];
            reject_flags(rest)?;
            expect_args(rest, 1, "seifert genus <pd>")?;
            let diagram = pd_arg(rest[0])?;
            let genus = canonical_genus(&diagram).map_err(seifert_fail)?;
            Ok(format!("{genus}\n"))
        }
        other => Err(Fail::Usage(format!("unknown seifert subcommand `{other}`"))),
    }
}

fn cmd_arcpres(args: &[&str]) -> CmdResult {
    reject_flags(args)?;
    expect_args(args, 1, "arcpres <pd>")?;
    let diagram = pd_arg(args[0])?;
    let graph = build_guide_graph(&diagram).map_err(seifert_fail)?;
    let report = arc_presentation(&diagram).map_err(seifert_fail)?;
    Ok(report_text(&graph, &report))
}
