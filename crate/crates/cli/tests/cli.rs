use std::io::Write;
use std::process::{Command, Output, Stdio};

use icircular::families::{gen_forb_icircular, FamilyId, FamilyKind};
use icircular::icirc::has_i_circular;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_icircular"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

const MVI: &str = "1101\n0111\n1011\n";
// SG(MVI): rows are vertices 1..3, columns 4..7.
const SG_MVI: &str = "7 15\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n\
                      1 4\n1 5\n1 7\n2 5\n2 6\n2 7\n3 4\n3 6\n3 7\n";

#[test]
fn icirc_reports_certificate() {
    let o = run(&["icirc", "-"], MVI);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("NOT-I-CIRCULAR\n"));

    let o = run(&["--json", "icirc", "-"], MVI);
    let v = json(&o);
    assert_eq!(v["property"], "i-circular");
    assert_eq!(v["verdict"], false);
    assert_eq!(v["certificate"]["family"], "MVI");
    assert_eq!(v["certificate"]["rowMap"], serde_json::json!([1, 2, 3]));
}

#[test]
fn c1p_positive_prints_order() {
    let o = run(&["c1p", "-"], "110\n011\n101\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "CIRCULAR 1 2 3\n");
    let mi_star = "1100\n0110\n1010\n";
    assert_eq!(run(&["c1p", "-"], mi_star).status.code(), Some(1));
    let v = json(&run(&["--json", "c1p", "-"], mi_star));
    assert_eq!(v["certificate"]["family"], "MI*(3)");
    assert_eq!(v["certificate"]["k"], 3);
}

#[test]
fn gen_and_bracelets() {
    let o = run(&["gen", "MI", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "110\n011\n101\n");
    let o = run(&["bracelets", "3"], "");
    assert_eq!(stdout(&o), "000\n111\n");
    let o = run(&["gen", "W", "2310", "--variant", "figure"], "");
    assert_eq!(
        stdout(&o),
        "001111\n110011\n111101\n111110\n110011\n100110\n"
    );
    assert_eq!(run(&["gen", "MV*"], "").status.code(), Some(0));
    assert_eq!(
        run(&["gen", "MII", "4", "--mask", "0100"], "")
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn gen_round_trips_through_icirc() {
    for f in gen_forb_icircular(5, 6) {
        let mut args = vec!["gen".to_string()];
        args.push(f.id.kind.name().to_string());
        if let Some(k) = f.id.k {
            args.push(k.to_string());
        }
        if let Some(mask) = &f.id.mask {
            args.push("--mask".into());
            args.push(mask.to_string());
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let generated = run(&args, "");
        assert_eq!(generated.status.code(), Some(0), "{}", f.id);
        let o = run(&["icirc", "-"], &stdout(&generated));
        let expected = if has_i_circular(&f.matrix).is_some() {
            0
        } else {
            1
        };
        assert_eq!(o.status.code(), Some(expected), "{}", f.id);
    }
    let mi4 = FamilyId::sized(FamilyKind::MI, 4);
    let o = run(&["gen", "MI", "4"], "");
    assert_eq!(stdout(&o), format!("{}\n", mi4.build().unwrap()));
}

#[test]
fn split_and_orient() {
    let o = run(&["split", "-"], SG_MVI);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&run(&["--json", "split", "-"], SG_MVI));
    assert_eq!(v["verdict"], false);
    assert_eq!(v["certificate"]["gforbMember"], "MVI");
    assert_eq!(run(&["orient", "-"], SG_MVI).status.code(), Some(1));

    let c4 = "4 4\n1 2\n2 3\n3 4\n1 4\n";
    assert_eq!(run(&["split", "-"], c4).status.code(), Some(2));
    let o = run(&["orient", "-"], c4);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SEMI-TRANSITIVE"));

    let star = "4 3\n1 2\n1 3\n1 4\n";
    let o = run(&["split", "-"], star);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn word_subcommand() {
    let edge = "2 1\n1 2\n";
    let o = run(&["word", "abab", "-"], edge);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "REPRESENTS\n")
    );
    let o = run(&["word", "aabb", "-"], edge);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(1), "DOES-NOT-REPRESENT\n")
    );
    assert_eq!(run(&["word", "abc", "-"], edge).status.code(), Some(2));
}

#[test]
fn input_errors_and_guards() {
    let o = run(&["icirc", "-"], "101\n10\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["c1p", "/no/such/file"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "MQ", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["bracelets", "2"], "").status.code(), Some(2));
    let o = run(&["orient", "-", "--max-edges", "5"], SG_MVI);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_prints_json_lines() {
    let o = run(&["verify", "MVast"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["lemmaId"], "MVast");
    assert_eq!(v["casesChecked"], 16);
    assert_eq!(v["failures"], serde_json::json!([]));
    let o = run(&["verify", "m2", "--kmax", "5"], "");
    assert_eq!(json(&o)["casesChecked"], 3 + 8);
    assert_eq!(run(&["verify", "nope"], "").status.code(), Some(2));
}
