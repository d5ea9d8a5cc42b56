use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use latred_cli::{AutomatonDocument, ReportDocument};
use latred_core::random::{random_automaton, seeded};
use latred_core::{LatticeSpec, Word};
use tempfile::TempDir;

fn six_state() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/six_state.json")
}

fn latred(args: &[&str]) -> Output {
    latred_env(args, &[])
}

fn latred_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_latred"));
    cmd.args(args).env_remove("LATRED_WORD_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

struct Reduced {
    automaton: PathBuf,
    report: ReportDocument,
}

fn reduce_file(dir: &TempDir, input: &Path, extra: &[&str]) -> Reduced {
    let out = dir
        .path()
        .join(format!("out{}.json", extra.join("_").replace('-', "")));
    let rep = dir
        .path()
        .join(format!("rep{}.json", extra.join("_").replace('-', "")));
    let mut args = vec![
        "reduce",
        path_str(input),
        "--output",
        path_str(&out),
        "--report",
        path_str(&rep),
    ];
    args.extend_from_slice(extra);
    let o = latred(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    Reduced {
        automaton: out,
        report: ReportDocument::load(&rep).unwrap(),
    }
}

fn write_doc(dir: &TempDir, name: &str, doc: &AutomatonDocument) -> PathBuf {
    let p = dir.path().join(name);
    doc.save(&p).unwrap();
    p
}

#[test]
fn ri_k2_gives_four_states() {
    let dir = TempDir::new().unwrap();
    let r = reduce_file(&dir, &six_state(), &["--method", "ri", "--k", "2"]);
    assert_eq!(r.report.d_sequence, vec![2, 3, 4]);
    assert_eq!(r.report.reduced_states, 4);
    let doc = AutomatonDocument::load(&r.automaton).unwrap();
    assert_eq!(doc.states, 4);
    assert_eq!(doc.to_automaton().unwrap().states(), 4);
}

#[test]
fn wri_k1_has_no_counterexample_up_to_six() {
    let dir = TempDir::new().unwrap();
    let r = reduce_file(
        &dir,
        &six_state(),
        &["--method", "wri", "--k", "1", "--verify-to", "6"],
    );
    assert_eq!(r.report.reduced_states, 3);
    assert_eq!(r.report.verified_to, Some(6));
    assert_eq!(r.report.counterexample, None);
}

#[test]
fn verify_to_reports_counterexample_without_failing() {
    // Q_t(1, 0) = 2^-t never settles, so a short reduction drifts on long words
    let doc = AutomatonDocument::from_json(
        r#"{"lattice": "product", "alphabet": ["a"], "states": 2,
            "sigma": [0.5, 1], "tau": [1, 1],
            "delta": {"a": [[1, 0], [0, 0.5]]}}"#,
    )
    .unwrap();
    let dir = TempDir::new().unwrap();
    let input = write_doc(&dir, "halving.json", &doc);
    let r = reduce_file(
        &dir,
        &input,
        &["--method", "ri", "--k", "0", "--verify-to", "4"],
    );
    let cx = r.report.counterexample.expect("a counterexample above k");
    assert_eq!(cx.word, vec!["a"]);
    assert_ne!(cx.original, cx.reduced);
    let a = doc.to_automaton().unwrap();
    assert_eq!(a.behavior(&a.word(&cx.word).unwrap()).unwrap(), cx.original);
}

#[test]
fn k0_preserves_the_empty_word() {
    let dir = TempDir::new().unwrap();
    let mut rng = seeded(11);
    for lattice in [
        LatticeSpec::godel(),
        LatticeSpec::lukasiewicz(),
        LatticeSpec::product(),
    ] {
        let a = random_automaton(&mut rng, lattice, 5, 2, 4);
        let input = write_doc(
            &dir,
            "rand.json",
            &AutomatonDocument::from_automaton(&a, None),
        );
        for method in ["ri", "li", "wri", "wli"] {
            let r = reduce_file(&dir, &input, &["--method", method, "--k", "0"]);
            let b = AutomatonDocument::load(&r.automaton)
                .unwrap()
                .to_automaton()
                .unwrap();
            assert!(lattice.value_eq(
                a.behavior(&Word::empty()).unwrap(),
                b.behavior(&Word::empty()).unwrap()
            ));
        }
    }
}

#[test]
fn factorize_flag_is_reported() {
    let dir = TempDir::new().unwrap();
    let r = reduce_file(
        &dir,
        &six_state(),
        &["--method", "ri", "--k", "3", "--factorize"],
    );
    assert_eq!(r.report.factorized, Some(5));
    assert_eq!(r.report.reduced_states, 5);
}

#[test]
fn reduced_automaton_goes_to_stdout_without_output() {
    let o = latred(&[
        "reduce",
        path_str(&six_state()),
        "--method",
        "li",
        "--k",
        "1",
    ]);
    assert_eq!(code(&o), 0);
    let doc = AutomatonDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.states, 6);
    assert!(String::from_utf8_lossy(&o.stderr).contains("li k=1: 6 -> 6 states"));
}

#[test]
fn verify_identical_automata() {
    let e = path_str(&six_state()).to_string();
    let o = latred(&["verify", &e, &e, "--k", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "equal\n");
}

#[test]
fn verify_against_ri_reduction() {
    let dir = TempDir::new().unwrap();
    let r = reduce_file(&dir, &six_state(), &["--method", "ri", "--k", "2"]);
    let o = latred(&[
        "verify",
        path_str(&six_state()),
        path_str(&r.automaton),
        "--k",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "equal\n");
}

#[test]
fn verify_against_wri_k0_matches_brute_force() {
    let dir = TempDir::new().unwrap();
    let r = reduce_file(&dir, &six_state(), &["--method", "wri", "--k", "0"]);
    let a = AutomatonDocument::load(&six_state())
        .unwrap()
        .to_automaton()
        .unwrap();
    let b = AutomatonDocument::load(&r.automaton)
        .unwrap()
        .to_automaton()
        .unwrap();
    let first_diff = std::iter::once(Word::empty())
        .chain((0..a.letters()).map(|x| Word::from_letters(vec![x])))
        .find(|w| a.behavior(w).unwrap() != b.behavior(w).unwrap());

    let o = latred(&[
        "verify",
        path_str(&six_state()),
        path_str(&r.automaton),
        "--k",
        "1",
    ]);
    match first_diff {
        None => assert_eq!(stdout(&o), "equal\n"),
        Some(w) => {
            assert_eq!(code(&o), 5);
            let text = stdout(&o);
            assert!(
                text.starts_with(&format!("witness: {}\n", a.format_word(&w))),
                "{text}"
            );
            assert!(text.contains(&format!("first: {}", a.behavior(&w).unwrap())));
            assert!(text.contains(&format!("second: {}", b.behavior(&w).unwrap())));
        }
    }
}

#[test]
fn verify_rejects_different_alphabets() {
    let dir = TempDir::new().unwrap();
    let mut doc = AutomatonDocument::load(&six_state()).unwrap();
    let dx = doc.delta.remove("x").unwrap();
    doc.delta.insert("z".into(), dx);
    doc.alphabet[0] = "z".into();
    let other = write_doc(&dir, "z.json", &doc);
    let o = latred(&[
        "verify",
        path_str(&six_state()),
        path_str(&other),
        "--k",
        "1",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn parse_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(
        code(&latred(&[
            "reduce",
            path_str(&bad),
            "--method",
            "ri",
            "--k",
            "1"
        ])),
        1
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        code(&latred(&[
            "reduce",
            path_str(&missing),
            "--method",
            "ri",
            "--k",
            "1"
        ])),
        1
    );
    let e = path_str(&six_state()).to_string();
    assert_eq!(
        code(&latred(&["reduce", &e, "--method", "xx", "--k", "1"])),
        1
    );
    assert_eq!(code(&latred(&["reduce", &e, "--method", "ri"])), 1);
    assert_eq!(code(&latred(&["frobnicate"])), 1);
    let o = latred_env(
        &["reduce", &e, "--method", "ri", "--k", "1"],
        &[("LATRED_WORD_CAP", "lots")],
    );
    assert_eq!(code(&o), 1);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&latred(&["--help"])), 0);
    assert_eq!(code(&latred(&["--version"])), 0);
}

#[test]
fn validation_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let mut doc = AutomatonDocument::load(&six_state()).unwrap();
    doc.sigma[0] = 0.5;
    let p = write_doc(&dir, "half.json", &doc);
    assert_eq!(
        code(&latred(&[
            "reduce",
            path_str(&p),
            "--method",
            "ri",
            "--k",
            "1"
        ])),
        2
    );

    let e = path_str(&six_state()).to_string();
    let o = latred(&[
        "reduce",
        &e,
        "--method",
        "ri",
        "--k",
        "3",
        "--verify-to",
        "3",
    ]);
    assert_eq!(code(&o), 2);
    let o = latred(&[
        "bench",
        "--sizes",
        "0",
        "--letters",
        "2",
        "--k",
        "1",
        "--method",
        "ri",
        "--lattice",
        "godel",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn cap_errors_exit_3() {
    let e = path_str(&six_state()).to_string();
    // 1 + 2 + 4 = 7 words at k = 2
    let o = latred_env(
        &["reduce", &e, "--method", "wri", "--k", "2"],
        &[("LATRED_WORD_CAP", "6")],
    );
    assert_eq!(code(&o), 3);
    let o = latred_env(
        &["reduce", &e, "--method", "wri", "--k", "2"],
        &[("LATRED_WORD_CAP", "7")],
    );
    assert_eq!(code(&o), 0);
    let o = latred_env(
        &["verify", &e, &e, "--k", "3"],
        &[("LATRED_WORD_CAP", "10")],
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn bench_csv_is_deterministic_apart_from_timing() {
    let args = [
        "bench",
        "--sizes",
        "4,6,8",
        "--letters",
        "2",
        "--k",
        "2",
        "--method",
        "wli",
        "--lattice",
        "lukasiewicz",
        "--seed",
        "42",
    ];
    let strip = |o: Output| -> Vec<String> {
        assert_eq!(code(&o), 0);
        stdout(&o)
            .lines()
            .map(|l| {
                let mut cols: Vec<&str> = l.split(',').collect();
                cols.remove(4);
                cols.join(",")
            })
            .collect()
    };
    let first = strip(latred(&args));
    assert_eq!(first[0], "n,m,k,method,d_final");
    assert_eq!(first.len(), 4);
    assert!(first[1].starts_with("4,2,2,wli,"));
    assert_eq!(first, strip(latred(&args)));
}

#[test]
fn documents_survive_load_save_load() {
    let dir = TempDir::new().unwrap();
    let mut rng = seeded(12);
    for lattice in [
        LatticeSpec::godel(),
        LatticeSpec::lukasiewicz(),
        LatticeSpec::product(),
    ] {
        let a = random_automaton(&mut rng, lattice, 4, 3, 7);
        let doc = AutomatonDocument::from_automaton(&a, Some("sample".into()));
        let p = write_doc(&dir, "rt.json", &doc);
        let back = AutomatonDocument::load(&p).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_automaton().unwrap(), a);
    }
    let original = AutomatonDocument::load(&six_state()).unwrap();
    let p = write_doc(&dir, "ex.json", &original);
    assert_eq!(AutomatonDocument::load(&p).unwrap(), original);
}
