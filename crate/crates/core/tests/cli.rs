use std::process::{Command, Output};

fn krw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krw"))
        .args(args)
        .env_remove("KRW_ITER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = krw(&["nf", "x^2*y", "--eta", "c0"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "-z^2 - t^3 - c0\n")
    );
    let o = krw(&["exp", "apply", "--map", "phi1", "z"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "z - x^2*U\n")
    );
}

#[test]
fn parse_errors_are_one_line_and_exit_2() {
    for args in [
        &["nf", "x^^2"][..],
        &["nf", "x y"],
        &["nf", "w"],
        &["degree", "x", "--grading", "omega9"],
        &["exp", "apply", "--map", "/nonexistent/map.json", "x"],
    ] {
        let o = krw(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "), "{err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn verification_failures_exit_1() {
    let dir = std::env::temp_dir().join(format!("krw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"x":"x","y":"y + 2*z*U - x^2*U^2","z":"z - x*U","t":"t"}"#,
    )
    .unwrap();
    let o = krw(&[
        "exp",
        "check",
        "--map",
        bad.to_str().unwrap(),
        "--eta-generic",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("well-defined: false"));

    let good = dir.join("good.json");
    std::fs::write(
        &good,
        r#"{"x":"x","y":"y + 2*z*U - x^2*U^2","z":"z - x^2*U","t":"t"}"#,
    )
    .unwrap();
    let o = krw(&["exp", "check", "--map", good.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["wellDefined"]["holds"], true);
    assert_eq!(v["iterative"]["holds"], true);

    let extra = dir.join("extra.json");
    std::fs::write(&extra, r#"{"x":"x","y":"y","z":"z","t":"t","w":"w"}"#).unwrap();
    assert_eq!(
        krw(&["exp", "check", "--map", extra.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    // U -> U^2 gives a non-integral weight whose induced map does not verify
    let squared = dir.join("squared.json");
    std::fs::write(&squared, r#"{"x":"x","y":"y","z":"z - x^2*U^2","t":"t"}"#).unwrap();
    let o = krw(&[
        "exp",
        "induce",
        "--map",
        squared.to_str().unwrap(),
        "--grading",
        "omega1",
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn iteration_cap_variable() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_krw"))
            .args(["degree", "x*y", "--grading", "omega1"])
            .env("KRW_ITER_CAP", cap)
            .output()
            .unwrap()
    };
    let o = run("0");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn help_and_version() {
    assert_eq!(krw(&["--help"]).status.code(), Some(0));
    assert!(stdout(&krw(&["--version"])).starts_with("krw "));
    assert_eq!(krw(&[]).status.code(), Some(2));
}

#[test]
fn verify_json_shape() {
    let o = krw(&["verify", "--eta-generic", "2", "--samples", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "config", "summary"]);
    // field order in the serialized text follows the documented layout
    let (c, k, s) = (
        text.find("\"config\"").unwrap(),
        text.find("\"checks\"").unwrap(),
        text.find("\"summary\"").unwrap(),
    );
    assert!(c < k && k < s);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(names, sorted);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["config"]["sampleCount"], 20);
}

#[test]
fn text_outputs() {
    let o = krw(&["decompose", "x*y"]);
    assert_eq!(stdout(&o), "epsilon = 1\nh = 0\nu1 = 1\nv1 = 0\n");
    let o = krw(&["lf", "y + x", "--grading", "omega1"]);
    assert_eq!(stdout(&o), "degree: 2\nleading form: y\n");
    let o = krw(&["degree", "0", "--grading", "omega2", "--eta", "5"]);
    assert_eq!(stdout(&o), "-inf\n");
    let o = krw(&["exp", "induce", "--map", "phi2", "--grading", "omega1"]);
    assert_eq!(
        stdout(&o),
        "u-weight: -2\nscale: 1\nverified: true\nx -> x\ny -> y + 3*t^2*U - 3*x^2*t*U^2 + x^4*U^3\nz -> z\nt -> t - x^2*U\n"
    );
}
