use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lorentz(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lorentz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_line(args: &[&str]) -> String {
    let o = lorentz(&[&["gen"], args].concat(), None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().last().unwrap().to_string()
}

#[test]
fn gen_examples() {
    assert_eq!(
        gen_line(&["--family", "schur", "--lambda", "2,0", "--vars", "2"]),
        "x1^2 + x1 x2 + x2^2"
    );
    assert_eq!(gen_line(&["--family", "schubert", "--w", "321"]), "x1^2 x2");
    assert_eq!(gen_line(&["--family", "key", "--mu", "2,1"]), "x1^2 x2");
}

#[test]
fn gen_writes_a_header() {
    let o = lorentz(&["gen", "--family", "schubert", "--w", "321"], None);
    assert_eq!(stdout(&o), "vars: 3\nx1^2 x2\n");
}

#[test]
fn gen_usage_errors_exit_2() {
    assert_eq!(lorentz(&["gen", "--family", "schur"], None).status.code(), Some(2));
    assert_eq!(
        lorentz(&["gen", "--family", "schubert", "--w", "123456789"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lorentz(&["gen", "--family", "nope"], None).status.code(), Some(2));
    assert_eq!(lorentz(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn certify_exit_codes() {
    let raw = stdout(&lorentz(
        &["gen", "--family", "schur", "--lambda", "2,0", "--vars", "2"],
        None,
    ));
    assert_eq!(lorentz(&["certify"], Some(&raw)).status.code(), Some(1));
    let normalized = stdout(&lorentz(
        &[
            "gen",
            "--family",
            "schur",
            "--lambda",
            "2,0",
            "--vars",
            "2",
            "--normalize",
        ],
        None,
    ));
    assert_eq!(lorentz(&["certify"], Some(&normalized)).status.code(), Some(0));
    assert_eq!(lorentz(&["certify"], Some("x1 +* x2")).status.code(), Some(2));
}

#[test]
fn certify_json_certificate() {
    let o = lorentz(&["certify", "--out", "json"], Some("vars: 2\nx1^2 + x1 x2 + x2^2\n"));
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "not_lorentzian");
    assert_eq!(v["failure"]["kind"], "hessian_failure");
    assert_eq!(v["failure"]["inertia"]["positive"], 2);
}

#[test]
fn certify_corpus_file() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/corpus/ch-m4-example.poly");
    assert_eq!(lorentz(&["certify", file], None).status.code(), Some(0));
}

#[test]
fn certify_support_mode() {
    let o = lorentz(&["certify", "--mode", "support_only"], Some("x1^2 + x2^2"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("alpha=(2,0) beta=(0,2) i=1"), "{}", stdout(&o));
}

#[test]
fn sweep_schubert_normalized() {
    let o = lorentz(
        &[
            "sweep",
            "--family",
            "schubert",
            "--n",
            "4",
            "--normalize",
            "--out",
            "json",
            "--jobs",
            "2",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instances"], 24);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["spec"]["family"], "schubert");
}

#[test]
fn sweep_support_and_inequality_modes() {
    let support = lorentz(
        &["sweep", "--family", "schubert", "--n", "4", "--mode", "support_only"],
        None,
    );
    assert_eq!(support.status.code(), Some(0));
    let kostka = lorentz(
        &[
            "sweep",
            "--family",
            "schur",
            "--mode",
            "inequality",
            "--boxes",
            "8",
            "--n",
            "4",
        ],
        None,
    );
    assert_eq!(kostka.status.code(), Some(0), "{}", stdout(&kostka));
}

#[test]
fn sweep_failures_carry_a_repro_that_reproduces() {
    let o = lorentz(&["sweep", "--family", "schubert", "--n", "4", "--out", "json"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failures = v["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    let repro = failures[0]["repro"].as_str().unwrap();
    let (gen, certify) = repro.split_once(" | ").unwrap();
    let gen_args: Vec<&str> = gen.split_whitespace().skip(1).collect();
    let poly = stdout(&lorentz(&gen_args, None));
    let certify_args: Vec<&str> = certify.split_whitespace().skip(1).collect();
    assert_eq!(lorentz(&certify_args, Some(&poly)).status.code(), Some(1));
}

#[test]
fn sweep_is_deterministic_modulo_time() {
    let run = |jobs: &str| {
        let o = lorentz(
            &[
                "sweep", "--family", "schubert", "--n", "4", "--out", "json", "--jobs", jobs,
            ],
            None,
        );
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["wall_time_seconds"] = serde_json::Value::Null;
        v
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn sweep_caps_exit_2() {
    assert_eq!(
        lorentz(&["sweep", "--family", "schubert", "--n", "9"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lorentz(&["sweep", "--family", "schur", "--n", "3", "--boxes", "20"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn paper_suite_passes() {
    let o = lorentz(&["paper-suite"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS stability_specialization"));
}

#[test]
fn corpus_verify_passes() {
    let o = lorentz(&["corpus", "verify"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok ")).count(), 6);
}
