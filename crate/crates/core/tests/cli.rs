mod common;

use std::path::PathBuf;

use common::*;
use varkit::matrep::RepFile;

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("varkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const INVOCATIONS: &[&[&str]] = &[
    &["magnus", "comm(x1,x2)", "--letters", "2", "--cutoff", "4"],
    &[
        "magnus",
        "comm(comm(x1,x2),x1)",
        "--letters",
        "2",
        "--cutoff",
        "5",
        "--test-n",
        "3",
    ],
    &["dimsub", "--group", "catalog:D4", "--nmax", "4", "--gamma"],
    &["dimsub", "--group", "catalog:S3", "--coeff", "F3", "--nmax", "3"],
    &["verbal", "--group", "catalog:S3", "--poly", "x1*x2 - x2*x1"],
    &["identities", "--algebra", "catalog:UT2", "--degree", "3"],
    &["identities", "--rep", "catalog:S3", "--degree", "2"],
    &["trprod", "--left", "catalog:UT3F2", "--right", "catalog:UT3F2"],
    &["check", "--rep", "catalog:UT3F2", "--identity", "action:(y1-1)(y2-1)"],
    &["check", "--rep", "catalog:S3", "--identity", "poly:x1*x2 - x2*x1"],
];

#[test]
fn output_is_byte_deterministic() {
    for args in INVOCATIONS {
        let first = run_cli(args);
        for _ in 0..2 {
            assert_eq!(run_cli(args), first, "{args:?}");
        }
    }
}

#[test]
fn exit_code_contract() {
    let ut2 = data("reps/ut2_f2.rep");
    assert_eq!(
        run_cli(&["check", "--rep", &ut2, "--identity", "action:(y1-1)(y2-1)"]).0,
        0
    );
    let (code, out) = run_cli(&["check", "--rep", &ut2, "--identity", "action:y1-1"]);
    assert_eq!(code, 1);
    assert!(out.contains("# witness"));
    assert_eq!(run_cli(&["check", "--rep", &ut2, "--identity", "action:0"]).0, 0);
    // parse and validation errors
    assert_eq!(run_cli(&["magnus", "x1 x", "--letters", "1", "--cutoff", "2"]).0, 2);
    assert_eq!(run_cli(&["dimsub", "--group", "no/such/file", "--nmax", "2"]).0, 2);
    assert_eq!(
        run_cli(&["dimsub", "--group", "catalog:C2", "--coeff", "F4", "--nmax", "2"]).0,
        2
    );
    assert_eq!(
        run_cli(&["trprod", "--left", "catalog:UT3F2", "--right", &data("reps/line_q.rep")]).0,
        2
    );
    assert_eq!(run_cli(&["verbal", "--group", "catalog:S3", "--poly", "x1^2"]).0, 2);
    // caps
    assert_eq!(
        run_cli(&[
            "--max-degree",
            "3",
            "identities",
            "--algebra",
            "catalog:M2",
            "--degree",
            "4"
        ])
        .0,
        3
    );
    assert_eq!(
        run_cli(&["--max-group", "10", "dimsub", "--group", "catalog:A4", "--nmax", "2"]).0,
        3
    );
    assert_eq!(
        run_cli(&["check", "--rep", &data("reps/units_q.rep"), "--identity", "action:y1-1"]).0,
        3
    );
}

#[test]
fn magnus_examples() {
    let (code, out) = run_cli(&[
        "magnus",
        "comm(x1,x2)",
        "--letters",
        "2",
        "--cutoff",
        "2",
        "--test-n",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("in_D_n\ttrue\n") && out.contains("degree\t2\n"));
    let (_, out) = run_cli(&["magnus", "x1", "--letters", "1", "--cutoff", "1", "--test-n", "2"]);
    assert!(out.contains("in_D_n\tfalse\n"));
    let (_, out) = run_cli(&["magnus", "comm(x1,x2)", "--letters", "2", "--cutoff", "2"]);
    assert!(out.contains("# degree\tmonomial\tcoefficient\n"));
    assert!(out.contains("2\ta1a2\t1\n") && out.contains("2\ta2a1\t-1\n"), "{out}");
}

#[test]
fn dimsub_examples() {
    let (_, out) = run_cli(&[
        "dimsub",
        "--group",
        &data("groups/C2.rep"),
        "--coeff",
        "Z",
        "--nmax",
        "2",
    ]);
    assert!(out.ends_with("1\t2\n2\t1\n"), "{out}");
    let (_, out) = run_cli(&[
        "dimsub",
        "--group",
        &data("groups/C2.rep"),
        "--coeff",
        "Q",
        "--nmax",
        "2",
    ]);
    assert!(out.ends_with("1\t2\n2\t2\n"), "{out}");
    let trivial = scratch("trivial.rep", "kind = perm\ndegree = 1\n");
    let (code, out) = run_cli(&["dimsub", "--group", trivial.to_str().unwrap(), "--nmax", "3"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("1\t1\n2\t1\n3\t1\n"), "{out}");
    let (_, out) = run_cli(&["dimsub", "--group", "catalog:Q8", "--nmax", "3", "--gamma"]);
    assert!(out.contains("# n\tgamma_n\tD_n\tcontained\tequal\n"));
    assert!(out.contains("2\t2\t2\ttrue\ttrue\n"), "{out}");
}

#[test]
fn identities_examples() {
    let (code, out) = run_cli(&["identities", "--algebra", &data("algebras/K.alg"), "--degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim=1"));
    assert!(out.ends_with("x1*x2 - x2*x1\n"), "{out}");
    let (_, out) = run_cli(&["identities", "--algebra", "catalog:M2", "--degree", "2"]);
    assert!(out.contains("dim=0"));
    assert!(!out.lines().any(|l| !l.starts_with('#')), "{out}");
    let (_, out) = run_cli(&["identities", "--algebra", "catalog:M2", "--degree", "4"]);
    assert!(out.contains("# s4\tmember=true"), "{out}");
}

#[test]
fn trprod_round_trips() {
    let line = data("reps/line_q.rep");
    let (code, out) = run_cli(&["trprod", "--left", &line, "--right", &line]);
    assert_eq!(code, 0);
    let rep = out.parse::<RepFile>().unwrap().representation(None).unwrap();
    assert_eq!(rep.dim(), 2);
    assert_eq!(rep.generators().len(), 1);
    assert_eq!(rep.generators()[0].to_string(), "[[1,1],[0,1]]");

    let (_, out) = run_cli(&["trprod", "--left", "catalog:UT3F2", "--right", &data("reps/ut2_f2.rep")]);
    let parsed: RepFile = out.parse().unwrap();
    assert_eq!(parsed.to_string(), out);
    assert_eq!(parsed.representation(None).unwrap().dim(), 5);
    // feeding the emitted file back in works
    let path = scratch("tp.rep", &out);
    let (code, out) = run_cli(&["identities", "--rep", path.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim=0"), "{out}");
}
