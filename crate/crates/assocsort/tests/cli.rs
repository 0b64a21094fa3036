use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn assocsort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assocsort"))
        .args(args)
        .output()
        .expect("spawn assocsort")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn sort_text_file() {
    let dir = TempDir::new().unwrap();
    let (input, output, stats) = (
        dir.path().join("in"),
        dir.path().join("out"),
        dir.path().join("stats"),
    );
    fs::write(&input, "3\n1\n2\n").unwrap();
    let out = assocsort(&[
        "sort",
        "--input",
        p(&input),
        "--output",
        p(&output),
        "--stats",
        p(&stats),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&output).unwrap(), "1\n2\n3\n");
    let stats = fs::read_to_string(&stats).unwrap();
    assert!(stats.contains("variant=readonly\n"));
    assert!(stats.contains("passes=1\n"));
    for key in ["swaps=", "moves=", "reads="] {
        assert!(stats.contains(key), "{stats}");
    }
}

#[test]
fn sort_every_variant_and_width() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in");
    fs::write(&input, "200\n3\n130\n40\n255\n0").unwrap();
    for variant in ["readonly", "modifiable", "auto"] {
        for width in ["8", "16", "32", "64"] {
            let output = dir.path().join(format!("out-{variant}-{width}"));
            let out = assocsort(&[
                "sort",
                "--input",
                p(&input),
                "--output",
                p(&output),
                "--variant",
                variant,
                "--word-width",
                width,
            ]);
            assert_eq!(code(&out), 0, "{variant} w={width}");
            assert_eq!(
                fs::read_to_string(&output).unwrap(),
                "0\n3\n40\n130\n200\n255\n"
            );
        }
    }
}

#[test]
fn sort_binary_roundtrip() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    let words: Vec<u8> = [500u16, 7, 65535, 1000]
        .iter()
        .flat_map(|w| w.to_le_bytes())
        .collect();
    fs::write(&input, words).unwrap();
    let out = assocsort(&[
        "sort",
        "--input",
        p(&input),
        "--output",
        p(&output),
        "--format",
        "bin",
        "--word-width",
        "16",
        "--variant",
        "modifiable",
    ]);
    assert_eq!(code(&out), 0);
    let expect: Vec<u8> = [7u16, 500, 1000, 65535]
        .iter()
        .flat_map(|w| w.to_le_bytes())
        .collect();
    assert_eq!(fs::read(&output).unwrap(), expect);
}

#[test]
fn sort_duplicate_exits_2() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    fs::write(&input, "5\n5\n").unwrap();
    for variant in ["modifiable", "readonly"] {
        let out = assocsort(&[
            "sort",
            "--input",
            p(&input),
            "--output",
            p(&output),
            "--variant",
            variant,
        ]);
        assert_eq!(code(&out), 2, "{variant}");
        assert!(String::from_utf8_lossy(&out.stderr).contains('5'));
    }
}

#[test]
fn sort_empty_file() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    fs::write(&input, "").unwrap();
    let out = assocsort(&["sort", "--input", p(&input), "--output", p(&output)]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&output).unwrap(), "");
}

#[test]
fn sort_capacity_exceeded_exits_3() {
    // More values in the lower half of an 8-bit universe than it has room
    // for. The size check runs before any value is practiced.
    let dir = TempDir::new().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    let body: String = (0..300u32).map(|v| format!("{}\n", v % 128)).collect();
    fs::write(&input, body).unwrap();
    let out = assocsort(&[
        "sort",
        "--input",
        p(&input),
        "--output",
        p(&output),
        "--variant",
        "modifiable",
        "--word-width",
        "8",
    ]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn sort_malformed_exits_1() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    for body in ["1\nx\n", "1\n\n2\n", "256\n"] {
        fs::write(&input, body).unwrap();
        let out = assocsort(&[
            "sort",
            "--input",
            p(&input),
            "--output",
            p(&output),
            "--word-width",
            "8",
        ]);
        assert_eq!(code(&out), 1, "{body:?}");
    }
    let missing = dir.path().join("missing");
    assert_eq!(
        code(&assocsort(&[
            "sort",
            "--input",
            p(&missing),
            "--output",
            p(&output)
        ])),
        1
    );
    assert_eq!(code(&assocsort(&["sort", "--word-width", "12"])), 1);
}

#[test]
fn gen_verify_roundtrip_and_tamper() {
    let dir = TempDir::new().unwrap();
    let (raw, sorted) = (dir.path().join("raw"), dir.path().join("sorted"));
    let out = assocsort(&[
        "gen",
        "--dist",
        "uniform_distinct",
        "--n",
        "1000",
        "--beta",
        "4",
        "--seed",
        "3",
        "--output",
        p(&raw),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        code(&assocsort(&[
            "sort",
            "--input",
            p(&raw),
            "--output",
            p(&sorted)
        ])),
        0
    );
    assert_eq!(
        code(&assocsort(&[
            "verify",
            "--input",
            p(&sorted),
            "--against",
            p(&raw)
        ])),
        0
    );
    // unsorted input does not verify
    assert_eq!(
        code(&assocsort(&[
            "verify",
            "--input",
            p(&raw),
            "--against",
            p(&raw)
        ])),
        1
    );

    let mut lines: Vec<String> = fs::read_to_string(&sorted)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    let last: u64 = lines[999].parse().unwrap();
    lines[999] = (last + 1).to_string();
    fs::write(&sorted, lines.join("\n")).unwrap();
    assert_eq!(
        code(&assocsort(&[
            "verify",
            "--input",
            p(&sorted),
            "--against",
            p(&raw)
        ])),
        1
    );
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for path in [&a, &b] {
        let out = assocsort(&[
            "gen",
            "--dist",
            "full_universe",
            "--n",
            "500",
            "--beta",
            "3/2",
            "--seed",
            "9",
            "--output",
            p(path),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn predict_prints_pass_count() {
    let out = assocsort(&["predict", "--n", "1024", "--beta", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "10");
    assert_eq!(
        code(&assocsort(&["predict", "--n", "1024", "--beta", "0"])),
        1
    );
    assert_eq!(
        code(&assocsort(&["predict", "--n", "1024", "--beta", "two"])),
        1
    );
}

fn strip_wall(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split(',').collect();
            f.remove(10);
            f.join(",")
        })
        .collect()
}

#[test]
fn bench_csv_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for path in [&a, &b] {
        let out = assocsort(&[
            "bench",
            "--n",
            "1024,2048",
            "--beta",
            "2,4",
            "--dist",
            "uniform",
            "--algos",
            "assoc-ro,assoc-mod,counting",
            "--reps",
            "2",
            "--seed",
            "11",
            "--csv",
            p(path),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (a, b) = (
        fs::read_to_string(&a).unwrap(),
        fs::read_to_string(&b).unwrap(),
    );
    assert_eq!(a.lines().count(), 1 + 2 * 2 * 3 * 2);
    assert_eq!(
        a.lines().next().unwrap(),
        "algo,dist,n,m,beta,w,passes,swaps,moves,reads,wall_nanos,seed,ok"
    );
    assert_eq!(strip_wall(&a), strip_wall(&b));
    assert!(a.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn bench_failure_exits_1_with_rows() {
    // A range of 200 at w=8 puts values above the tag bit, which the
    // sequential driver rejects; the failed row is still written.
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("f.csv");
    let out = assocsort(&[
        "bench",
        "--n",
        "100",
        "--beta",
        "2",
        "--dist",
        "uniform",
        "--algos",
        "assoc-mod",
        "--reps",
        "1",
        "--seed",
        "0",
        "--csv",
        p(&csv),
        "--word-width",
        "8",
    ]);
    assert_eq!(code(&out), 1);
    let body = fs::read_to_string(&csv).unwrap();
    assert_eq!(body.lines().count(), 2);
    assert!(body.lines().nth(1).unwrap().ends_with(",false"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&assocsort(&["--help"])), 0);
    assert_eq!(code(&assocsort(&["--version"])), 0);
    assert_eq!(code(&assocsort(&[])), 1);
}
