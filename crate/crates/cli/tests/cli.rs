use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ncpoisson::algebra::{BilinearMap, PoissonAlgebra};
use ncpoisson::fixtures::{example_3d, r_example_3d};
use ncpoisson::operators::{LinearOperator, PrePoisson};
use ncpoisson::rep::{dualize, regular_rep};
use ncpoisson::scalar::int;
use ncpoisson_cli::manifest::Manifest;
use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ncpoisson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncpoisson")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn verify(path: &str, law: &str) -> Output {
    ncpoisson(&["verify", path, "--law", law])
}

fn build(construction: &str, input: &str, output: &str) -> Output {
    ncpoisson(&["build", construction, input, "-o", output])
}

fn read_manifest(path: &str) -> Manifest {
    Manifest::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const FIXTURES: [&str; 5] = ["example_3d.json", "example_4d.json", "r_example_3d.json", "r_example_4d_first.json", "r_example_4d_second.json"];

#[test]
fn shipped_fixtures_are_coherent() {
    for name in FIXTURES {
        let path = fixture(name);
        let out = verify(path.to_str().unwrap(), "coherent");
        assert_eq!(code(&out), 0, "{name}");
        assert_eq!(report(&out)["pass"], true);
    }
}

#[test]
fn shipped_fixtures_round_trip() {
    for name in FIXTURES {
        let m = read_manifest(fixture(name).to_str().unwrap());
        assert_eq!(Manifest::parse(&m.to_text()).unwrap(), m, "{name}");
    }
}

#[test]
fn shipped_r_matrices_solve_the_equations() {
    for name in ["r_example_3d.json", "r_example_4d_second.json"] {
        assert_eq!(code(&verify(fixture(name).to_str().unwrap(), "pybe")), 0, "{name}");
    }
    // the first 4-dim family needs a = −c once κ₁₂ ≠ 0; the fixture defaults have it
    let first = fixture("r_example_4d_first.json");
    let first = first.to_str().unwrap();
    assert_eq!(code(&verify(first, "pybe")), 0);
    let out = ncpoisson(&["--param", "c=3", "verify", first, "--law", "pybe"]);
    assert_eq!(code(&out), 1);
    let out = ncpoisson(&["--param", "c=3", "--param", "k12=0", "verify", first, "--law", "pybe"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn zero_algebra_passes_every_law() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "zero.json", "{\"kind\": \"algebra\", \"dim\": 0}\n");
    for law in ncpoisson_cli::commands::LAWS {
        let out = verify(&path, law);
        assert_eq!(code(&out), 0, "{law}");
        assert_eq!(report(&out)["violations"], Value::Array(Vec::new()));
    }
}

#[test]
fn perturbed_r_matrix_fails_with_location() {
    let dir = TempDir::new().unwrap();
    let text = std::fs::read_to_string(fixture("r_example_3d.json")).unwrap();
    // adds e1⊗e2, which leaves the skew-symmetric family
    let perturbed = text.replacen("\"r\": [\n", "\"r\": [\n    [0, 1, 1, 1],\n", 1);
    assert_ne!(perturbed, text);
    let path = write(&dir, "perturbed.json", &perturbed);
    let out = verify(&path, "pybe");
    assert_eq!(code(&out), 1);
    let report = report(&out);
    assert_eq!(report["pass"], false);
    let violations = report["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    for v in violations {
        assert_eq!(v["at"].as_array().unwrap().len(), 3);
        assert_ne!(v["lhs"], v["rhs"]);
    }
}

#[test]
fn standard_poisson_doubles_the_product() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("std.json");
    let out_path = out_path.to_str().unwrap();
    let out = ncpoisson(&["build", "standard-poisson", fixture("example_3d.json").to_str().unwrap(), "-o", out_path, "--hbar", "1"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_manifest(out_path).resolve(&Default::default()).unwrap();
    let bracket = r.bracket();
    assert_eq!(bracket.coeff(2, 0, 1), &int(2));
    assert_eq!(bracket.coeff(2, 1, 0), &int(-2));
    assert_eq!(bracket.entries().len(), 2);
    assert_eq!(code(&verify(out_path, "coherent")), 0);
}

#[test]
fn subadjacent_of_zero_is_zero() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "pp.json", &Manifest::prepoisson(&PrePoisson::zero(3)).to_text());
    let output = dir.path().join("sub.json");
    let output = output.to_str().unwrap();
    assert_eq!(code(&build("subadjacent", &input, output)), 0);
    assert_eq!(read_manifest(output), Manifest::algebra(&PoissonAlgebra::zero(3)));
}

#[test]
fn drinfeld_double_of_coboundary_bialgebra_solves_the_equations() {
    let dir = TempDir::new().unwrap();
    let bialgebra = dir.path().join("b.json");
    let bialgebra = bialgebra.to_str().unwrap();
    assert_eq!(code(&build("coboundary-comults", fixture("r_example_3d.json").to_str().unwrap(), bialgebra)), 0);
    assert_eq!(code(&verify(bialgebra, "bialgebra")), 0);
    assert_eq!(code(&verify(bialgebra, "matched-pair")), 0);
    let double = dir.path().join("d.json");
    let double = double.to_str().unwrap();
    assert_eq!(code(&build("drinfeld-double-r", bialgebra, double)), 0);
    let m = read_manifest(double);
    assert_eq!(m.dim, 6);
    assert_eq!(code(&verify(double, "pybe")), 0);
    assert_eq!(code(&verify(double, "coherent")), 0);
}

#[test]
fn builds_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = fixture("r_example_4d_second.json");
    let input = input.to_str().unwrap();
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|k| {
            let path = dir.path().join(format!("out{k}.json"));
            assert_eq!(code(&build("coboundary-comults", input, path.to_str().unwrap())), 0);
            std::fs::read(path).unwrap()
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn operator_pipeline() {
    let dir = TempDir::new().unwrap();
    let p = example_3d(&int(1), &int(2), &int(3));
    let rep = dualize(&regular_rep(&p));
    let t = LinearOperator(r_example_3d(&int(1), &int(-2)).sharp());
    let input = write(&dir, "op.json", &Manifest::operator(&t, &rep).to_text());
    assert_eq!(code(&verify(&input, "o-operator")), 0);
    assert_eq!(code(&verify(&input, "quasi-rep")), 0);

    let pp = dir.path().join("pp.json");
    let pp = pp.to_str().unwrap();
    assert_eq!(code(&build("induced-prepoisson", &input, pp)), 0);
    for law in ["dendriform", "prelie", "prepoisson"] {
        assert_eq!(code(&verify(pp, law)), 0, "{law}");
    }
    let sub = dir.path().join("sub.json");
    let sub = sub.to_str().unwrap();
    assert_eq!(code(&build("subadjacent", pp, sub)), 0);
    assert_eq!(code(&verify(sub, "coherent")), 0);

    let lifted = dir.path().join("lift.json");
    let lifted = lifted.to_str().unwrap();
    assert_eq!(code(&build("lift-operator", &input, lifted)), 0);
    assert_eq!(read_manifest(lifted).dim, 6);
    assert_eq!(code(&verify(lifted, "pybe")), 0);

    let semi = dir.path().join("semi.json");
    assert_eq!(code(&build("dual", &input, semi.to_str().unwrap())), 2, "dual takes a rep, not an operator");
}

#[test]
fn rota_baxter_and_o_operator_failures() {
    let dir = TempDir::new().unwrap();
    let p = example_3d(&int(1), &int(2), &int(3));
    let rep = regular_rep(&p);
    let input = write(&dir, "id.json", &Manifest::operator(&LinearOperator::identity(3), &rep).to_text());
    let out = verify(&input, "rota-baxter");
    assert_eq!(code(&out), 1);
    assert!(!report(&out)["violations"].as_array().unwrap().is_empty());
    let output = dir.path().join("pp.json");
    let out = build("induced-prepoisson", &input, output.to_str().unwrap());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotOOperator"));
    assert!(!output.exists());
}

#[test]
fn commutator_of_associative_dot() {
    let dir = TempDir::new().unwrap();
    let output = dir.path().join("c.json");
    let output = output.to_str().unwrap();
    assert_eq!(code(&build("commutator", fixture("example_4d.json").to_str().unwrap(), output)), 0);
    let r = read_manifest(output).resolve(&Default::default()).unwrap();
    assert!(r.dot().is_zero());
    assert_eq!(r.bracket(), BilinearMap::from_entries(4, [(3, 0, 1, int(1)), (3, 1, 0, int(-1)), (3, 2, 1, int(1)), (3, 1, 2, int(-1))]));
    assert_eq!(code(&verify(output, "lie")), 0);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let fx = fixture("example_3d.json");
    let fx = fx.to_str().unwrap();
    assert_eq!(code(&verify(fx, "no-such-law")), 2);
    assert_eq!(code(&verify("/nonexistent/file.json", "lie")), 2);
    assert_eq!(code(&ncpoisson(&["suite", "no-such-suite"])), 2);
    assert_eq!(code(&build("no-such-construction", fx, dir.path().join("o.json").to_str().unwrap())), 2);
    assert_eq!(code(&build("semidirect", fx, dir.path().join("o.json").to_str().unwrap())), 2);
    assert_eq!(code(&ncpoisson(&["--param", "a=oops", "verify", fx, "--law", "lie"])), 2);
    assert_eq!(code(&ncpoisson(&["verify", fx])), 2);

    let unbound = write(&dir, "unbound.json", "{\"kind\": \"algebra\", \"dim\": 2, \"bracket\": [[0, 0, 1, \"t\"], [0, 1, 0, \"-t\"]]}");
    let out = verify(&unbound, "lie");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"t\""));
    assert_eq!(code(&ncpoisson(&["--param", "t=1/2", "verify", &unbound, "--law", "lie"])), 0);

    for bad in ["{\"kind\": \"algebra\", \"dim\": 2, \"dot\": [[2, 0, 0, 1, 1]]}", "{\"kind\": \"algebra\", \"dim\": 2, \"dot\": [[0, 0, 0, 1, 0]]}", "{\"kind\": \"ring\", \"dim\": 2}", "not json"] {
        assert_eq!(code(&verify(&write(&dir, "bad.json", bad), "lie")), 2, "{bad}");
    }
}

#[test]
fn cohomology_suite_reports_json() {
    let out = ncpoisson(&["suite", "cohomology", "--seed", "7"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let summary = report(&out);
    assert_eq!(summary["suite"], "cohomology");
    assert_eq!(summary["seed"], 7);
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["criteria"][0]["criterion"], 7);
    assert!(summary["criteria"][0]["millis"].is_u64());
}
