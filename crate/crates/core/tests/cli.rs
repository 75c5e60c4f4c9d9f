use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bihom::io::{self, AnyAlgebra};
use bihom::{commutator_bihom_lie, examples, Scalar};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bihom"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn q(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

fn twisted_sl(dir: &Path) -> PathBuf {
    let path = dir.join("sl.json");
    let out = run(&[
        "twist",
        data("sl2_twist_k1_l2.json").to_str().unwrap(),
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    path
}

#[test]
fn shipped_files_match_generators() {
    let a = io::load_algebra(data("assoc2d_m2_n3.json")).unwrap();
    assert_eq!(a, AnyAlgebra::Associative(examples::assoc2d(&q(2), &q(3)).unwrap()));
    let l = io::load_lie(data("sl2_twist_k1_l2.json")).unwrap();
    assert_eq!(l, examples::sl2_twist(&q(1), &q(2)).unwrap());
    let r = io::load_lie(data("sl2_remark_k1.json")).unwrap();
    assert_eq!(r, examples::sl2_remark(&q(1)).unwrap());
    let la = commutator_bihom_lie(&a.into_associative().unwrap()).unwrap();
    assert_eq!(la.basis_bracket(1, 0), &[q(2), Scalar::new((-4).into(), 3.into())]);
}

#[test]
fn commutator_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("la.json");
    let out = run(&[
        "commutator",
        data("assoc2d_m2_n3.json").to_str().unwrap(),
        "--emit",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("[e1, e2] = -3e1 + 2e2"), "{text}");
    assert!(text.contains("[e2, e2] = -(3/2)e1 + e2"), "{text}");
    assert!(text.contains("bihom-lie: pass"));
    let check = run(&["check", out_file.to_str().unwrap(), "--strict"]);
    assert_eq!(code(&check), 0);
    let assoc = run(&["check-assoc", data("assoc2d_m2_n3.json").to_str().unwrap(), "--strict"]);
    assert_eq!(code(&assoc), 0);
}

#[test]
fn exit_code_one_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    let sl = twisted_sl(dir.path());
    let out = run(&["extend-derivation", sl.to_str().unwrap(), "--matrix", "1,0,0;0,1,0;0,0,1"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("bihom-jacobi             FAIL at"), "{text}");
    assert!(text.contains("defect"));

    let r = io::load_lie(data("sl2_remark_k1.json")).unwrap();
    let both = bihom::BihomLieAlgebra::new(r.bracket_tensor().clone(), r.alpha().clone(), r.alpha().clone()).unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, io::emit_lie(&both)).unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("skew-symmetry            FAIL at (1, 2)"));
}

#[test]
fn exit_code_two_on_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"kind\": \"bihom-lie\", \"dim\": 1 ").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    assert_eq!(code(&run(&["check", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["examples", "gen", "assoc2d", "--param", "m=2", "--param", "n=1"])), 2);
    assert_eq!(code(&run(&["examples", "gen", "assoc2d", "--param", "m=1/0", "--param", "n=3"])), 2);
    let sl = twisted_sl(dir.path());
    assert_eq!(code(&run(&["cohomology", sl.to_str().unwrap(), "--rep", "trivial", "--deg", "4"])), 2);
    assert_eq!(code(&run(&["cohomology", sl.to_str().unwrap(), "--rep", "adjoint:x", "--deg", "1"])), 2);
}

#[test]
fn derivations_and_cohomology_reports() {
    let dir = tempfile::tempdir().unwrap();
    let sl = twisted_sl(dir.path());
    let sl = sl.to_str().unwrap();
    let out = run(&["derivations", sl, "--k", "0", "--l", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim Der_(alpha^0 beta^1) = 1"));
    let out = run(&["inner", sl, "--k", "2", "--l", "-1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim Inn_(alpha^2 beta^-1) = 1"));

    let report = dir.path().join("h1.json");
    let out = run(&["cohomology", sl, "--rep", "adjoint:-1,1", "--deg", "1", "--emit", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["dim_z"], 1);
    assert_eq!(json["dim_b"], 1);
    assert_eq!(json["dim_h"], 0);
    let out = run(&["cohomology", sl, "--rep", "trivial", "--deg", "0"]);
    assert!(stdout(&out).contains("dim H = 1"));
}

#[test]
fn representation_file_argument() {
    let dir = tempfile::tempdir().unwrap();
    let sl = twisted_sl(dir.path());
    let l = io::load_lie(&sl).unwrap();
    let rep = bihom::adjoint_representation(&l, 0, 1).unwrap();
    let rep_file = dir.path().join("rep.json");
    std::fs::write(&rep_file, io::emit_representation(&rep, Some("sl.json"))).unwrap();
    assert_eq!(io::load_representation(&rep_file).unwrap(), rep);
    let out = run(&["semidirect", sl.to_str().unwrap(), "--rep", rep_file.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = run(&["cohomology", sl.to_str().unwrap(), "--rep", rep_file.to_str().unwrap(), "--deg", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn central_extensions_and_isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let sl = twisted_sl(dir.path());
    let sl = sl.to_str().unwrap();
    // compatible θ is spanned by coordinates (0, 0, 1) on pairs (12, 13, 23)
    let out = run(&["extend-central", sl, "--theta", "0,0,0;0,0,1;0,-1,0"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&run(&["extend-central", sl, "--theta", "0,1,0;-1,0,0;0,0,0"])), 1);
    assert_eq!(code(&run(&["extend-central", sl, "--theta", "1,0,0;0,0,0;0,0,0"])), 2);
    let out = run(&["iso-extensions", sl, "--theta1", "0,0,0;0,0,0;0,0,0", "--theta2", "0,0,0;0,0,0;0,0,0", "--f", "0,0,0"]);
    assert_eq!(code(&out), 0);
    let out = run(&["iso-extensions", sl, "--theta1", "0,0,0;0,0,1;0,-1,0", "--theta2", "0,0,0;0,0,0;0,0,0", "--f", "0,0,0"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn dsum_morphism_and_twist() {
    let dir = tempfile::tempdir().unwrap();
    let sl = twisted_sl(dir.path());
    let sl = sl.to_str().unwrap();
    let out = run(&["dsum", sl, sl]);
    assert_eq!(code(&out), 0);
    let out = run(&["morphism", sl, sl, "--matrix", "1,0,0;0,1,0;0,0,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("graph is a subalgebra: yes"));
    let out = run(&["morphism", sl, sl, "--matrix", "2,0,0;0,2,0;0,0,2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("graph is a subalgebra: no"));
    // sl2_remark carries a non-antisymmetric bracket, so it cannot be twisted
    let out = run(&["twist", data("sl2_remark_k1.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn examples_and_output_dir() {
    let out = run(&["examples", "list"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("sl2_remark"));
    let out = run(&["examples", "gen", "sl2_twist", "--param", "k=1", "--param", "l=2"]);
    assert_eq!(code(&out), 0);
    let parsed = io::parse_algebra(&stdout(&out)).unwrap();
    assert_eq!(parsed, AnyAlgebra::Lie(examples::sl2_twist(&q(1), &q(2)).unwrap()));

    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env(io::OUTPUT_DIR_ENV, dir.path())
        .args(["examples", "gen", "abelian", "--param", "n=3", "--emit", "ab.json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(io::load_lie(dir.path().join("ab.json")).unwrap().dim(), 3);
}
