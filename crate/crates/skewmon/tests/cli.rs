use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use serde_json::Value;
use skewmon::bialgebroid::{b1, b2, b3, b4, RightBialgebroid};
use skewmon::cli::{execute, load, Args, InstanceFile, Loaded, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use skewmon::exactlin::{Field, PrimeField};
use skewmon::Error;

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn run(argv: &[&str]) -> (Value, i32) {
    let mut full = vec!["skewmon"];
    full.extend_from_slice(argv);
    let args = Args::try_parse_from(full).expect("arguments parse");
    let (text, code) = execute(&args);
    (serde_json::from_str(&text).expect("json report"), code)
}

fn path(name: &str) -> String {
    instance(name).display().to_string()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skewmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn prime(loaded: Loaded) -> skewmon::cli::Built<PrimeField> {
    match loaded {
        Loaded::Prime(b) => b,
        Loaded::Rational(_) => panic!("expected a prime field"),
    }
}

fn same_bialgebroid<F: Field>(a: &RightBialgebroid<F>, b: &RightBialgebroid<F>) {
    assert_eq!(a.base().structure(), b.base().structure());
    assert_eq!(a.base().unit(), b.base().unit());
    assert_eq!(a.total().structure(), b.total().structure());
    assert_eq!(a.total().unit(), b.total().unit());
    assert_eq!(a.source(), b.source());
    assert_eq!(a.target(), b.target());
    assert_eq!(a.delta_free(), b.delta_free());
    assert_eq!(a.counit(), b.counit());
}

#[test]
fn bundled_instances_match_the_builders() {
    for (file, b) in [("b1.json", b1()), ("b2_kc2_f3.json", b2()), ("b3_monoid.json", b3()), ("b4_renv.json", b4())] {
        let (f, loaded) = load(instance(file)).unwrap();
        let built = prime(loaded);
        assert_eq!(f.name(), b.name());
        assert!(built.checks.all_passed(), "{file}: {}", built.checks);
        same_bialgebroid(built.bialgebroid.as_ref().unwrap(), &b);
    }
}

#[test]
fn integers_are_reduced_mod_p() {
    let (mut f, _) = load(instance("b2_kc2_f3.json")).unwrap();
    for (_, m) in f.matrices_mut() {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x += 3 * (*x + 1) - 6;
            }
        }
    }
    let built = prime(Loaded::from_file(&f).unwrap());
    same_bialgebroid(built.bialgebroid.as_ref().unwrap(), &b2());
}

#[test]
fn rational_field_keeps_integers() {
    let (mut f, _) = load(instance("b2_kc2_f3.json")).unwrap();
    f.field = skewmon::cli::FieldSpec::Named("rational".into());
    let p = temp_file("b2_q.json", &f.to_json());
    let (doc, code) = run(&["galois", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS, "{doc}");
    assert_eq!(doc["field"], "Q");
    assert_eq!(doc["summary"]["rank"], "4/4");
    // 2 is invertible over Q, so k[C_2] is still Hopf
    assert_eq!(doc["summary"]["hopf"], true);
}

#[test]
fn malformed_delta_names_the_field() {
    let (mut f, _) = load(instance("b2_kc2_f3.json")).unwrap();
    f.bialgebroid.as_mut().unwrap().delta.pop();
    let err = InstanceFile::parse(&serde_json::to_string(&f).unwrap()).unwrap_err();
    match err {
        Error::Input { path, .. } => assert_eq!(path, "bialgebroid.Delta"),
        other => panic!("unexpected {other}"),
    }
    let p = temp_file("bad_delta.json", &serde_json::to_string(&f).unwrap());
    let (doc, code) = run(&["check-bialgebroid", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(doc["error"]["path"], "bialgebroid.Delta");
}

#[test]
fn ragged_rows_name_the_row() {
    let (mut f, _) = load(instance("b4_renv.json")).unwrap();
    f.bialgebroid.as_mut().unwrap().s[2].push(0);
    let err = f.validate().unwrap_err();
    assert_eq!(err, Error::Input { path: "bialgebroid.s[2]".into(), msg: "expected 2 entries, found 3".into() });
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let err = InstanceFile::parse("{\n  \"schema\": \"skewmon-instance/1\",\n  \"field\": {\"p\": 3,,}\n}").unwrap_err();
    match err {
        Error::Input { path, .. } => assert_eq!(path, "line 3 column 20"),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn bad_prime_and_unknown_field() {
    let (mut f, _) = load(instance("b1.json")).unwrap();
    f.field = skewmon::cli::FieldSpec::Prime { p: 4 };
    assert!(matches!(f.validate(), Err(Error::Input { path, .. }) if path == "field.p"));
    f.field = skewmon::cli::FieldSpec::Named("reals".into());
    assert!(matches!(f.validate(), Err(Error::Input { path, .. }) if path == "field"));
}

#[test]
fn missing_bialgebroid_is_an_input_error() {
    let (mut f, _) = load(instance("b1.json")).unwrap();
    f.bialgebroid = None;
    let p = temp_file("no_bialgebroid.json", &f.to_json());
    let (doc, code) = run(&["galois", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(doc["error"]["path"], "bialgebroid");
}

#[test]
fn probe_modules_from_the_file_are_used() {
    let (mut f, _) = load(instance("b2_kc2_f3.json")).unwrap();
    f.probes = Some(skewmon::cli::ProbeBlock {
        max_maps: Some(2),
        modules: vec![skewmon::cli::ModuleBlock {
            label: "k³".into(),
            dim: 3,
            right: vec![vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]],
        }],
    });
    let p = temp_file("b2_probes.json", &f.to_json());
    let (doc, code) = run(&["build-skewmon", p.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let products = doc["summary"]["products"].as_array().unwrap();
    // over k, M⊛N = M⊗N⊗H
    let k3 = products.iter().find(|x| x["left"] == "k³" && x["right"] == "k³").unwrap();
    assert_eq!(k3["dim"], 18);
}

#[test]
fn spec_examples() {
    let (doc, code) = run(&["galois", &path("b3_monoid.json")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["summary"]["rank"], "3/4");
    assert_eq!(doc["summary"]["hopf"], false);

    let (doc, code) = run(&["check-axioms", &path("b1.json")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["counts"]["fail"], 0);

    let (doc, code) = run(&["representability", &path("b4_renv.json")]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(doc["summary"]["verdict"], "representable");
    let steps = doc["summary"]["certificate"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 6);
    assert!(steps.iter().all(|s| s["status"] == "pass"));
}

#[test]
fn every_record_carries_an_anchor() {
    let (doc, _) = run(&["report", &path("b2_kc2_f3.json")]);
    for s in doc["suites"].as_array().unwrap() {
        for r in s["records"].as_array().unwrap() {
            assert!(!r["anchor"].as_str().unwrap().is_empty(), "{r}");
        }
    }
}

#[test]
fn reports_are_byte_identical() {
    let argv = ["skewmon", "report", &path("b4_renv.json"), "--format", "json"];
    let a = execute(&Args::try_parse_from(argv).unwrap()).0;
    let b = execute(&Args::try_parse_from(argv).unwrap()).0;
    assert_eq!(a, b);
    let argv = ["skewmon", "check-axioms", &path("b2_kc2_f3.json"), "--format", "text", "--seed-mutations", "5"];
    let a = execute(&Args::try_parse_from(argv).unwrap()).0;
    let b = execute(&Args::try_parse_from(argv).unwrap()).0;
    assert_eq!(a, b);
}

#[test]
fn timing_is_opt_in() {
    let (doc, _) = run(&["galois", &path("b2_kc2_f3.json")]);
    assert!(doc["suites"][0].get("millis").is_none());
    let (doc, _) = run(&["galois", &path("b2_kc2_f3.json"), "--timing"]);
    assert!(doc["suites"][0]["millis"].is_u64());
}

#[test]
fn seeded_mutations_are_all_caught() {
    for file in ["b2_kc2_f3.json", "b4_renv.json"] {
        let (doc, code) = run(&["check-bialgebroid", &path(file), "--seed-mutations", "12"]);
        assert_eq!(code, EXIT_PASS, "{file}");
        let muts = doc["mutations"].as_array().unwrap();
        let detected: Vec<&Value> = muts.iter().filter(|r| r["id"] == "mutation.detected").collect();
        assert_eq!(detected.len(), 12);
        assert!(detected.iter().all(|r| r["status"] == "pass"));
    }
}

#[test]
fn binary_exit_codes_and_out_file() {
    let exe = env!("CARGO_BIN_EXE_skewmon");
    let st = Command::new(exe).args(["check-axioms", &path("b1.json")]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_PASS));
    let st = Command::new(exe).args(["check-bialgebroid", &path("corrupted/bialgebroid.json")]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_FAIL));
    let st = Command::new(exe).args(["galois", "/nonexistent/x.json"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_INPUT));
    let st = Command::new(exe).args(["no-such-command", &path("b1.json")]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_INPUT));

    let out = std::env::temp_dir().join(format!("skewmon-out-{}.txt", std::process::id()));
    let st = Command::new(exe)
        .env("SKEWMON_THREADS", "1")
        .args(["galois", &path("b3_monoid.json"), "--format", "text", "--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(EXIT_PASS));
    assert!(st.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("rank: 3/4"), "{text}");
    assert!(text.contains("hopf: false"), "{text}");
}
