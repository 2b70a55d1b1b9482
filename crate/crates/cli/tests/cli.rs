use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use stoplat::io;
use stoplat::npo::collect_npo;
use stoplat::Poset;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stoplat"))
        .args(args)
        .output()
        .expect("spawn stoplat")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn put(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn ideals_of_a_chain() {
    let dir = TempDir::new().unwrap();
    let chain = put(&dir, "chain3.txt", "n 3\n0 < 1\n1 < 2\n");
    assert_eq!(
        stdout(&["ideals", "--poset", s(&chain)]),
        "-\n0\n0,1\n0,1,2\ncount=4\n"
    );
    assert!(stdout(&["--tsv", "ideals", "--poset", s(&chain)]).ends_with("count\t4\n"));
}

#[test]
fn npo_count_and_stream_agree() {
    assert_eq!(stdout(&["npo", "--n", "5", "--count"]), "357\n");
    let streamed = io::parse_poset_stream(&stdout(&["npo", "--n", "4", "--stream"])).unwrap();
    assert_eq!(streamed, collect_npo(4).unwrap());
}

#[test]
fn superreduce_output_feeds_check_stop_and_stop_order() {
    let dir = TempDir::new().unwrap();
    let base = put(&dir, "d4.txt", "n 4\n");
    let target = put(&dir, "q.txt", "n 4\n0 < 2\n1 < 2\n1 < 3\n");
    let order_out = dir.path().join("order.txt");
    let table = stdout(&[
        "superreduce",
        "--base",
        s(&base),
        "--target",
        s(&target),
        "--order-out",
        s(&order_out),
    ]);
    let stop = put(&dir, "m.txt", &table);
    let recovered = stdout(&["stop-order", "--stop", s(&stop)]);
    assert_eq!(recovered, fs::read_to_string(&order_out).unwrap());
    assert_eq!(
        io::parse_poset(&recovered).unwrap(),
        io::parse_poset(&fs::read_to_string(&target).unwrap()).unwrap()
    );

    let report = stdout(&["check-stop", "--poset", s(&base), "--stop", s(&stop)]);
    assert_eq!(report.matches("PASS").count(), 2);
    assert_eq!(report.matches("SKIP").count(), 2);

    // a base given by path in the header resolves relative to the table
    let by_path = table.replacen(table.lines().next().unwrap(), "stop n=4 base=d4.txt", 1);
    let stop2 = put(&dir, "m2.txt", &by_path);
    assert_eq!(stdout(&["stop-order", "--stop", s(&stop2)]), recovered);
}

#[test]
fn check_stop_reports_failures_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let base = put(&dir, "d2.txt", "n 2\n");
    // sends {0} to {1} and {1} to {0}: fine for size and monotonicity,
    // but raises the weight of {0} under tau = identity
    let stop = put(
        &dir,
        "swap.txt",
        "stop n=2 base={}\n- -> -\n0 -> 1\n1 -> 0\n0,1 -> 0,1\n",
    );
    let tau = put(&dir, "tau.txt", "0\n1\n");
    let graph = put(&dir, "g.txt", "n 2\n0 1\n");
    let out = run(&[
        "check-stop",
        "--poset",
        s(&base),
        "--stop",
        s(&stop),
        "--tau",
        s(&tau),
        "--graph",
        s(&graph),
        "--edge",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("axiom 4 (total extension): FAIL"), "{text}");
    assert!(text.contains("axiom 2 (boundary): PASS"), "{text}");
}

#[test]
fn every_npo4_target_is_recovered() {
    let dir = TempDir::new().unwrap();
    for (i, q) in collect_npo(4).unwrap().iter().enumerate() {
        let path = put(&dir, &format!("q{i}.txt"), &io::write_poset(q));
        assert_eq!(stdout(&["theorem5", "--target", s(&path)]), "PASS\n");
    }
}

#[test]
fn mwi_lines_and_table() {
    let dir = TempDir::new().unwrap();
    let chain = put(&dir, "c.txt", "n 3\n0 < 1\n1 < 2\n");
    let disc = put(&dir, "d.txt", "n 3\n");
    let w = put(&dir, "w.txt", &io::write_weights(&vec![5, -2, 3].into()));
    assert_eq!(
        stdout(&["mwi", "--poset", s(&chain), "--weights", s(&w), "--k", "2"]),
        "value=3 witness={0,1} searched=4\n"
    );
    let table = stdout(&[
        "--tsv",
        "mwi",
        "--poset",
        s(&disc),
        "--weights",
        s(&w),
        "--all-k",
    ]);
    let lines: Vec<_> = table.lines().collect();
    assert_eq!(lines[0], "k\tvalue\twitness\tsearched");
    assert_eq!(lines[2], "1\t-2\t{1}\t8");
    assert_eq!(lines.len(), 5);

    // increasing weights over the chain let the search run on its ideals only
    let inc = put(&dir, "inc.txt", "1\n2\n3\n");
    assert_eq!(
        stdout(&[
            "mwi",
            "--poset",
            s(&disc),
            "--weights",
            s(&inc),
            "--k",
            "2",
            "--target",
            s(&chain)
        ]),
        "value=3 witness={0,1} searched=4\n"
    );
}

#[test]
fn bps_and_verify_npo() {
    let table = stdout(&["bps", "--n-max", "12"]);
    assert!(table.contains("4.5132"));
    assert!(table.contains("0.16237") || table.contains("0.16236"));
    assert_eq!(
        stdout(&["verify-npo", "--n", "4"]),
        "semimodular: PASS\njordan-dedekind: PASS\n"
    );
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["selftest", "--seed", "7"]);
    let b = stdout(&["selftest", "--seed", "7"]);
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.starts_with("PASS ")), "{a}");
    assert_eq!(
        stdout(&["npo", "--n", "3", "--stream"]),
        stdout(&["npo", "--n", "3", "--stream"])
    );
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let cyclic = put(&dir, "cyc.txt", "n 2\n0 < 1\n1 < 0\n");
    let garbage = put(&dir, "bad.txt", "n two\n");
    for args in [
        vec!["ideals", "--poset", s(&cyclic)],
        vec!["ideals", "--poset", s(&garbage)],
        vec!["ideals", "--poset", "/nonexistent/p.txt"],
        vec!["npo", "--n", "3"],
        vec!["npo", "--n", "99", "--count"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["ideals", "--poset", s(&garbage)]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
}

#[test]
fn thread_cap_does_not_change_results() {
    let capped = Command::new(env!("CARGO_BIN_EXE_stoplat"))
        .args(["npo", "--n", "6", "--count"])
        .env("STOPLAT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(capped.stdout).unwrap(), "4824\n");
    let bad = Command::new(env!("CARGO_BIN_EXE_stoplat"))
        .args(["npo", "--n", "2", "--count"])
        .env("STOPLAT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn poset_files_round_trip() {
    for p in collect_npo(4).unwrap() {
        assert_eq!(io::parse_poset(&io::write_poset(&p)).unwrap(), p);
        assert_eq!(io::parse_poset(&io::write_poset_json(&p)).unwrap(), p);
    }
    let p = Poset::new(5, &[(3, 1), (1, 0), (4, 0)]).unwrap();
    let fam = p.enumerate_ideals();
    assert_eq!(io::parse_family(&io::write_family(&fam)).unwrap(), fam);
}
