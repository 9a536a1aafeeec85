use std::process::{Command, Output};

use grred::ar_quiver::TranslationQuiver;
use grred::frieze::Frieze;

fn grred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grred"))
        .args(args)
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
fn arquiver_json_and_dot() {
    let full = grred(&["arquiver", "--n", "6", "--format", "json"]);
    assert_eq!(full.status.code(), Some(0));
    let q = TranslationQuiver::from_json(&stdout(&full)).unwrap();
    assert_eq!(q.vertices().len(), 15);

    let reduced = grred(&["arquiver", "--n", "6", "--perp", "1,4", "--format", "json"]);
    let q = TranslationQuiver::from_json(&stdout(&reduced)).unwrap();
    assert_eq!(q.vertices().len(), 11);

    let dot = stdout(&grred(&["arquiver", "--n", "6", "--perp", "1,4", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    let solid = dot
        .lines()
        .filter(|l| l.contains("->") && !l.contains("dashed"))
        .count();
    assert_eq!(solid, q.arrows().len());

    assert_eq!(
        grred(&["arquiver", "--n", "6", "--perp", "1,4;2,5"]).status.code(),
        Some(2)
    );
    assert_eq!(grred(&["arquiver", "--n", "6", "--perp", "1,2"]).status.code(), Some(2));
    assert_eq!(grred(&["arquiver", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn frieze_checks() {
    let fan = grred(&["frieze", "--n", "6", "--tri", "1,3;1,4;1,5", "--check", "both"]);
    assert_eq!(fan.status.code(), Some(0));
    assert!(stderr(&fan).contains("mesh check: ok"));
    assert!(stderr(&fan).contains("ptolemy check: ok"));

    let args = ["frieze", "--n", "6", "--tri", "2,6;3,6;4,6", "--perp", "1,4", "--check"];
    let mesh = grred(&[&args[..], &["mesh"]].concat());
    assert_eq!(mesh.status.code(), Some(1));
    assert!(stderr(&mesh).contains("mesh check: 2 violations"));
    assert_eq!(grred(&[&args[..], &["ptolemy"]].concat()).status.code(), Some(0));

    assert_eq!(
        grred(&["frieze", "--n", "6", "--tri", "1,3;2,4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        grred(&["frieze", "--n", "6", "--tri", "1,3;1,4;1,5", "--values", "1,3=0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn frieze_json_parses_back() {
    let out = grred(&[
        "frieze",
        "--n",
        "7",
        "--tri",
        "1,3;1,4;1,5;1,6",
        "--values",
        "1,2=1/2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let f = Frieze::from_json(&stdout(&out)).unwrap();
    assert_eq!(f.values().len(), 21);
    assert!(stdout(&out).contains("\"1/2\""));
}

#[test]
fn mesh_frieze_without_triangulation() {
    let out = grred(&[
        "frieze", "--n", "6", "--perp", "1,4", "--check", "mesh", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let f = Frieze::from_json(&stdout(&out)).unwrap();
    assert_eq!(f.values().len(), 11);
}

#[test]
fn characters() {
    let tri = ["character", "--n", "6", "--tri"];
    let value = grred(&[&tri[..], &["2,6;3,6;4,6", "--arc", "1,4", "--specialize", "all1"]].concat());
    assert_eq!(stdout(&value).trim(), "3");
    let seed = grred(&[&tri[..], &["1,3;1,4;1,5", "--arc", "1,3"]].concat());
    assert_eq!(stdout(&seed).trim(), "x[1,3]");
    let exchange = grred(&[&tri[..], &["1,3;1,4;1,5", "--arc", "2,4"]].concat());
    assert_eq!(stdout(&exchange).trim(), "(x[1,2]*x[3,4] + x[1,4]*x[2,3]) / x[1,3]");
    let point = grred(
        &[
            &tri[..],
            &[
                "1,3;1,4;1,5",
                "--arc",
                "2,4",
                "--specialize",
                "x[1,2]=1;x[3,4]=1;x[1,4]=2;x[2,3]=1;x[1,3]=2",
            ],
        ]
        .concat(),
    );
    assert_eq!(stdout(&point).trim(), "3/2");
    assert_eq!(
        grred(&[&tri[..], &["1,3;1,4;1,5", "--arc", "2,9"]].concat())
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn mutation() {
    assert_eq!(
        grred(&["mutate", "--quiver", "Q37", "--seq", "4", "--recognize", "E6"])
            .status
            .code(),
        Some(0)
    );
    let seq = "2,6,3,4,8,1,7,6,5,3,4,5";
    assert_eq!(
        grred(&["mutate", "--quiver", "Q38", "--seq", seq, "--recognize", "E8"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        grred(&["mutate", "--quiver", "Q37", "--seq", "", "--recognize", "E6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        grred(&["mutate", "--quiver", "Q37", "--seq", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(grred(&["mutate", "--quiver", "Q99"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("grred-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("path.txt");
    std::fs::write(&file, "vertices 3\n1 -> 2\n2 -> 3\n").unwrap();
    let out = grred(&[
        "mutate",
        "--quiver",
        file.to_str().unwrap(),
        "--seq",
        "1",
        "--recognize",
        "A",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("A3: yes"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suites() {
    for suite in ["reduction", "frieze", "character"] {
        let out = grred(&["verify", "--suite", suite, "--nmax", "8"]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
    let reduction = stdout(&grred(&["verify", "--suite", "reduction", "--nmax", "8"]));
    assert!(reduction.contains("n=8: 141 frozen sets, 2112 cluster-tilting objects in total"));
    assert_eq!(grred(&["verify", "--nmax", "12"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["arquiver", "--n", "8", "--perp", "1,4;4,7", "--format", "dot"];
    assert_eq!(grred(&args).stdout, grred(&args).stdout);
    let args = ["frieze", "--n", "8", "--tri", "1,3;3,5;5,7;1,5;1,7", "--format", "json"];
    assert_eq!(grred(&args).stdout, grred(&args).stdout);
}
