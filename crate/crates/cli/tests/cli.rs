use std::process::{Command, Output};

use serde_json::Value;

fn sieve_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sieve-lab"))
        .args(args)
        .env_remove("SIEVE_LAB_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = sieve_lab(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

#[test]
fn enumerate_counts() {
    for (args, expected) in [
        (["--family", "A", "--n", "4", "--k", "1"], 6),
        (["--family", "D", "--n", "1", "--k", "3"], 4),
        (["--family", "classicalA", "--n", "6", "--k", "3"], 14),
    ] {
        let mut full = vec!["enumerate"];
        full.extend(args);
        let (v, code) = json(&full);
        assert_eq!(code, 0);
        assert_eq!(v[0]["count"], expected);
        assert_eq!(v[0]["items"].as_array().unwrap().len(), expected as usize);
    }
}

#[test]
fn enumerate_limit_truncates_listing_only() {
    let (v, _) = json(&["enumerate", "--family", "C", "--n", "3", "--k", "2", "--limit", "5"]);
    assert_eq!(v[0]["items"].as_array().unwrap().len(), 5);
    assert_eq!(v[0]["truncated"], true);
    assert!(v[0]["count"].as_u64().unwrap() > 5);
}

#[test]
fn verify_type_a() {
    let (v, code) = json(&["verify", "--theorem", "thm2.5", "--n", "4", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["csp_holds"], true);
    assert_eq!(v[0]["statement"], "type-a");
    let (v2, _) = json(&["verify", "--theorem", "type-a", "--n", "4", "--k", "1"]);
    assert_eq!(v, v2);
}

#[test]
fn printed_variant_failure_is_reported() {
    let args = ["verify", "--theorem", "thm1.1-2", "--variant", "printed", "--n", "2", "--k", "1"];
    let (v, code) = json(&args);
    assert_eq!(code, 1);
    assert_eq!(v[0]["csp_holds"], false);
    assert_eq!(v[0]["cardinality"], 2);
    let identity = v[0]["checks"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(identity["fixed"], 2);
    assert_eq!(identity["evaluation"]["integer"], "12");
    assert!(v[0]["notes"][0].as_str().unwrap().contains("12"));

    let mut exploratory = args.to_vec();
    exploratory.push("--exploratory");
    assert_eq!(json(&exploratory).1, 0);
}

#[test]
fn orbit_polynomial_holds() {
    let (v, code) = json(&["verify", "--theorem", "orbit-poly", "--family", "C", "--n", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["csp_holds"], true);
}

#[test]
fn audits() {
    let (v, code) = json(&["audit", "basis-A", "--n", "4", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!((v[0]["count"].clone(), v[0]["rank"].clone(), v[0]["expected_dim"].clone()), (6.into(), 6.into(), 6.into()));

    let (v, code) = json(&["audit", "conjecture-D", "--n", "2", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["count"], 10);
    assert_eq!(v[0]["expected_dim"], 10);
    assert_eq!(v[0]["independent_mod_J"], true);
    assert!(v[0]["scope"].as_str().unwrap().contains("only"));

    let (v, code) = json(&["audit", "equivariance", "--family", "D", "--n", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["mode"], "mod-J");
    assert_eq!(v[0]["pass"], true);

    let (v, code) = json(&["audit", "characters", "--family", "A", "--n", "4", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["traces"].as_array().unwrap().len(), 4);

    for sel in ["characters", "folding", "basis-C"] {
        let (v, code) = json(&["audit", sel, "--n", "2..=3", "--k", "0..=2"]);
        assert_eq!(code, 0, "{sel}");
        assert_eq!(v.as_array().unwrap().len(), 6);
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify", "--theorem", "bogus", "--n", "4", "--k", "1"],
        vec!["verify", "--theorem", "type-a", "--n", "5..5", "--k", "1"],
        vec!["enumerate", "--family", "Q", "--n", "4", "--k", "1"],
        vec!["audit", "basis-A", "--n", "2", "--k", "1"],
        vec!["verify", "--theorem", "orbit-poly", "--n", "3", "--k", "1"],
        vec!["verify", "--theorem", "type-a", "--variant", "printed", "--n", "4", "--k", "1"],
        vec!["enumerate", "--family", "A", "--n", "4", "--k", "1", "--workers", "0"],
    ] {
        assert_eq!(sieve_lab(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_independent_of_worker_count() {
    let base = ["verify", "--theorem", "type-d", "--n", "2..=4", "--k", "0..=3"];
    let run = |workers: &str, env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_sieve-lab"));
        cmd.args(base).args(["--workers", workers]);
        match env {
            Some(w) => cmd.env("SIEVE_LAB_WORKERS", w),
            None => cmd.env_remove("SIEVE_LAB_WORKERS"),
        };
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let one = run("1", None);
    assert_eq!(one, run("4", None));
    assert_eq!(one, run("1", Some("8")));
    let audit = |w: &str| sieve_lab(&["audit", "folding", "--n", "2..=4", "--k", "0..=3", "--workers", w]).stdout;
    assert_eq!(audit("1"), audit("3"));
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("sieve-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("checks.csv");
    let out = sieve_lab(&[
        "verify", "--theorem", "type-c", "--n", "2", "--k", "1", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "statement,family,n,k,variant,generator_step,group_order,d,fixed,evaluation,pass"
    );
    // One row per rotation power; C-rotation of the square has order 2.
    assert_eq!(lines.count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_format() {
    let out = sieve_lab(&["audit", "basis-A", "--n", "4", "--k", "1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS basis A n=4 k=1"));
}
