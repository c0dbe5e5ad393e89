//! End-to-end checks of the command-line surface: byte-exact outputs,
//! round-trips through the text formats, and the exit-code contract.

mod common;

use braidbook::cli::run;
use braidbook::rampichini::{samples, RampichiniDiagram};
use std::path::PathBuf;

fn cli(args: &[&str]) -> (i32, String, String) {
    let outcome = run(args);
    (outcome.code, outcome.stdout, outcome.stderr)
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("braidbook_cli_{}_{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn word_commands() {
    assert_eq!(cli(&["torus-braid", "2", "3"]), (0, "1 1 1\n".into(), String::new()));
    assert_eq!(cli(&["torus-braid", "3", "2"]), (0, "1 2 1 2\n".into(), String::new()));
    assert_eq!(
        cli(&["cable", "2", "3", "2", "1"]),
        (0, "2 1 3 2 2 1 3 2 2 1 3 2 -1 -1 -1 -1 -1\n".into(), String::new())
    );
    assert_eq!(cli(&["writhe", "1 1 1"]).1, "3\n");
    assert_eq!(cli(&["writhe", "1 -1 2 -2"]).1, "0\n");
    assert_eq!(cli(&["homfly", "1 1 1"]).1, "v^2*z^2 + 2*v^2 - v^4\n");
    assert_eq!(cli(&["homfly", "strands=2;"]).1, "v^-1*z^-1 - v*z^-1\n");
    assert_eq!(cli(&["gc-bound", "1 1 1"]).1, "1\n");
    assert_eq!(cli(&["bkl-expand", "a(1,3)"]).1, "2 1 -2\n");
    assert_eq!(cli(&["bkl-expand", "A(2,4)"]).1, "3 -2 -3\n");
}

#[test]
fn survey_formats() {
    let (code, tsv, _) = cli(&["survey", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        tsv,
        "1\t2\t3\tnot_canonically_fibered\n2\t4\t7\tnot_canonically_fibered\n3\t6\t11\tnot_canonically_fibered\n"
    );
    let (code, text, _) = cli(&["survey", "1", "--format=text"]);
    assert_eq!(code, 0);
    assert_eq!(text, "n=1 cable_word_length=17 genus=2 gc_lower_bound=3 verdict=not_canonically_fibered\n");
    assert_eq!(cli(&["survey", "1", "--format", "tsv"]).1, "1\t2\t3\tnot_canonically_fibered\n");
}

#[test]
fn plumb_word_command() {
    let out = cli(&[
        "plumb-word",
        "--b1",
        "a(1,3) a(1,2) a(1,3) a(1,2)",
        "--n1",
        "3",
        "--b2",
        "a(1,3) a(2,3) a(1,3) a(2,3)",
        "--n2",
        "3",
        "--merger",
        "f=1,2,3,4,5,6,7,8 sizes=(4,4)",
    ]);
    assert_eq!(out.0, 0, "{}", out.2);
    assert_eq!(out.1, "strands=5; a(1,3) a(1,2) a(1,3) a(1,2) a(3,5) a(4,5) a(3,5) a(4,5)\n");

    let out = cli(&[
        "plumb-word",
        "--b1",
        "a(1,3) a(1,2) a(1,3) a(1,2)",
        "--n1",
        "3",
        "--b2",
        "a(1,3) a(2,3) a(1,3) a(2,3)",
        "--n2",
        "3",
        "--merger",
        "f=1,3,6,8,2,4,5,7 sizes=(4,4)",
    ]);
    assert_eq!(out.1, "strands=5; a(1,3) a(3,5) a(1,2) a(4,5) a(3,5) a(1,3) a(4,5) a(1,2)\n");
}

#[test]
fn mergers_count() {
    let (code, stdout, _) = cli(&["mergers", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
    assert!(stdout.starts_with("f=1,2,3,4 sizes=(2,2)\n"));
}

#[test]
fn ramp_workflow() {
    let hopf = write_temp("hopf.ramp", &samples::hopf_positive().to_text());
    assert_eq!(cli(&["ramp", "validate", hopf.to_str().unwrap()]).1, "valid\n");
    assert_eq!(
        cli(&["ramp", "extract", hopf.to_str().unwrap()]).1,
        "strands=2; a(1,2)\n"
    );
    let translated = cli(&["ramp", "translate", hopf.to_str().unwrap(), "--cut", "1"]);
    assert_eq!(translated.0, 0);
    assert_eq!(translated.1, samples::hopf_positive().to_text());

    let plumbed = cli(&[
        "ramp",
        "plumb",
        hopf.to_str().unwrap(),
        hopf.to_str().unwrap(),
        "--merger",
        "f=1,2 sizes=(1,1)",
    ]);
    assert_eq!(plumbed.0, 0, "{}", plumbed.2);
    let diagram = RampichiniDiagram::parse(&plumbed.1).unwrap();
    assert!(diagram.validate().is_valid());
    assert_eq!(diagram.extract_word(0).unwrap().to_text(), "a(1,2) a(2,3)");

    let mixed = write_temp("mixed.ramp", &samples::mixed_sign_example().to_text());
    assert_eq!(
        cli(&["ramp", "extract", mixed.to_str().unwrap(), "--cut", "0"]).1,
        "strands=4; a(1,2) A(3,4) a(2,3)\n"
    );
    // Translated diagrams round-trip through the file format.
    let out = cli(&["ramp", "translate", mixed.to_str().unwrap(), "--cut", "3"]);
    let translated = RampichiniDiagram::parse(&out.1).unwrap();
    assert!(translated.validate().is_valid());
    assert_eq!(translated, samples::mixed_sign_example().translate(3).unwrap());

    let broken = write_temp("broken.ramp", "n 3\nentry 1 3 + up\nwrap up\n");
    let (code, stdout, stderr) = cli(&["ramp", "validate", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(stderr.contains("wrap count"));

    for path in [hopf, mixed, broken] {
        let _ = std::fs::remove_file(path);
    }
}

#[test]
fn seifert_commands() {
    let trefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
    assert_eq!(
        cli(&["seifert", "circles", trefoil]).1,
        "circles 2\ncircle 1 5 3\ncircle 2 6 4\n"
    );
    assert_eq!(cli(&["seifert", "genus", trefoil]).1, "1\n");
    assert_eq!(cli(&["seifert", "genus", "PD[]"]).1, "0\n");
    let (code, _, stderr) = cli(&["seifert", "genus", "PD[X(1,3,2,4),X(3,1,4,2)]"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("Betti"));

    let (code, report, _) = cli(&["arcpres", trefoil]);
    assert_eq!(code, 0);
    assert!(report.starts_with("crossings 3\nlink_arc_count 24\nunknot_edge_count 24\n"));
    assert!(report.contains("smoothing 0 "));
    assert!(report.contains("page loop 0 0 "));
}

#[test]
fn file_indirection() {
    let word = write_temp("word.txt", "1 1 1\n");
    let arg = format!("@{}", word.to_str().unwrap());
    assert_eq!(cli(&["homfly", &arg]).1, "v^2*z^2 + 2*v^2 - v^4\n");
    let _ = std::fs::remove_file(word);
    assert_eq!(cli(&["homfly", "@/nonexistent/braidbook"]).0, 2);
}

#[test]
fn exit_code_contract() {
    // Domain errors.
    assert_eq!(cli(&["torus-braid", "0", "3"]).0, 1);
    assert_eq!(cli(&["cable", "2", "3", "0", "1"]).0, 1);
    assert_eq!(cli(&["gc-bound", "1 1"]).0, 1);
    assert_eq!(cli(&["survey", "0"]).0, 1);
    assert_eq!(cli(&["arcpres", "PD[]"]).0, 1);
    // Parse and usage errors.
    assert_eq!(cli(&["writhe", "1 zero"]).0, 2);
    assert_eq!(cli(&["homfly", "strands=two; 1"]).0, 2);
    assert_eq!(cli(&["bkl-expand", "b(1,2)"]).0, 2);
    assert_eq!(cli(&["seifert", "circles", "PD[X(1,2)]"]).0, 2);
    assert_eq!(cli(&["seifert", "circles", "PD[X(1,1,1,2)]"]).0, 1);
    assert_eq!(cli(&["mergers", "2"]).0, 2);
    assert_eq!(cli(&["nonsense"]).0, 2);
    assert_eq!(cli(&["survey", "1", "--format=yaml"]).0, 2);
    assert_eq!(cli(&["ramp", "extract"]).0, 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["survey", "2"],
        vec!["homfly", "1 -2 1 -2"],
        vec!["arcpres", "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"],
        vec!["mergers", "1", "2"],
    ] {
        assert_eq!(cli(&args), cli(&args), "{args:?}");
    }
}

#[test]
fn emitted_words_parse_back() {
    use braidbook::braid::{ArtinWord, BklWord};
    let (_, cable, _) = cli(&["cable", "2", "5", "2", "1"]);
    let word = ArtinWord::parse(cable.trim()).unwrap();
    assert_eq!(word.to_text(), cable.trim());
    let (_, expanded, _) = cli(&["bkl-expand", "a(1,4) A(2,3)"]);
    assert!(ArtinWord::parse(expanded.trim()).is_ok());
    let (_, plumbed, _) = cli(&[
        "plumb-word", "--b1", "a(1,2)", "--n1", "2", "--b2", "a(1,2)", "--n2", "2",
    ]);
    let word = BklWord::parse(plumbed.trim()).unwrap();
    assert_eq!(word.to_text_with_header(), plumbed.trim());
}
