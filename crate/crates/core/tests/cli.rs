use std::process::{Command, Output};

fn bchcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn radius_of_golay() {
    let out = bchcover(&["radius", "--n", "23", "--delta", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R = 3\n"), "{text}");
    assert!(text.contains("coset_count_by_weight = 1,23,253,1771\n"), "{text}");
}

#[test]
fn classify_covered_code() {
    let out = bchcover(&["classify", "--n", "31", "--delta", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().last().unwrap();
    assert_eq!(row, "31,11,11,5,7,6,7,false,true,false,\"A-covered, R = tau_binary\"");
}

#[test]
fn ml_decode_codeword() {
    let out = bchcover(&[
        "decode", "--n", "7", "--delta", "3", "--word", "1101000", "--mode", "ml",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# mode=ml "));
    assert_eq!(text.lines().nth(2), Some("1101000,0"));
}

#[test]
fn list_decode_needs_tau() {
    let out = bchcover(&[
        "decode", "--n", "7", "--delta", "3", "--word", "1101000", "--mode", "list",
    ]);
    assert!(!out.status.success());
    let out = bchcover(&[
        "decode", "--n", "7", "--delta", "3", "--word", "0000000", "--mode", "list", "--tau", "3",
    ]);
    assert!(out.status.success());
    // the zero word, plus the seven weight-3 codewords
    assert!(stdout(&out).contains("count=8"));
}

#[test]
fn johnson_rows() {
    let out = bchcover(&["johnson", "--n", "31"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<usize>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 15);
    for r in &rows {
        assert!(r[2] >= r[1]);
    }
    assert_eq!(rows[14], vec![15, 8, 12]);
    assert!(!bchcover(&["johnson"]).status.success());
}

#[test]
fn table_single_row() {
    let out = bchcover(&["table1", "--max-n", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], "7,4,3,1,1,1,2,true,true,true,Hamming");
}

#[test]
fn table_with_checkpoints() {
    let dir = tempfile::tempdir().unwrap();
    let out = bchcover(&[
        "table1",
        "--max-n",
        "15",
        "--checkpoint-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 5);
    assert!(dir.path().join("radius-15-7.json").exists());
}

#[test]
fn rejects_bad_input() {
    assert!(!bchcover(&["radius", "--n", "16", "--delta", "3"]).status.success());
    assert!(
        !bchcover(&["decode", "--n", "7", "--delta", "3", "--word", "10", "--mode", "ml"])
            .status
            .success()
    );
    assert!(
        !bchcover(&["decode", "--n", "7", "--delta", "3", "--word", "1101000", "--mode", "fast"])
            .status
            .success()
    );
}
