use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rainbow_cli::document::{parse_coloring, parse_edge_list, write_edge_list};
use tempfile::TempDir;

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn color_output_passes_verify() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = rainbow(&["color", s(&g)]);
    assert_eq!(code(&out), 0);
    let doc = parse_coloring(&stdout(&out)).unwrap();
    assert!(doc.palette <= 5);
    let col = write(&dir, "c4.col", &stdout(&out));
    let out = rainbow(&["verify", s(&g), s(&col)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("RAINBOW-CONNECTED"));
}

#[test]
fn color_exit_codes() {
    let dir = TempDir::new().unwrap();
    let star = write(&dir, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    assert_eq!(code(&rainbow(&["color", s(&star)])), 2);
    let malformed = write(&dir, "bad.txt", "4 x\n0 1\n");
    assert_eq!(code(&rainbow(&["color", s(&malformed)])), 1);
    let c6 = write(&dir, "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    assert_eq!(code(&rainbow(&["color", "--mode", "diam2", s(&c6)])), 2);
    let c4 = write(&dir, "c4.txt", C4);
    assert_eq!(code(&rainbow(&["color", "--mode", "pendant", s(&c4)])), 2);
    assert_eq!(code(&rainbow(&["color", s(&dir.path().join("missing.txt"))])), 1);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let alternating = write(&dir, "alt.col", "4 4 2\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n");
    assert_eq!(code(&rainbow(&["verify", s(&g), s(&alternating)])), 0);
    let uniform = write(&dir, "one.col", "4 4 1\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
    let out = rainbow(&["verify", s(&g), s(&uniform)]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("between 0 and 2"), "{}", stdout(&out));
    let mismatch = write(&dir, "n5.col", "5 4 2\n0 1 1\n1 2 2\n2 3 1\n0 3 2\n");
    assert_eq!(code(&rainbow(&["verify", s(&g), s(&mismatch)])), 1);
    let wrong_edges = write(&dir, "edges.col", "4 4 2\n0 1 1\n1 2 2\n2 3 1\n0 2 2\n");
    assert_eq!(code(&rainbow(&["verify", s(&g), s(&wrong_edges)])), 1);
}

#[test]
fn rc_reports_and_caps() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = rainbow(&["rc", s(&c5)]);
    assert_eq!((code(&out), stdout(&out)), (0, "3\n".to_string()));
    let k4 = write(&dir, "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(stdout(&rainbow(&["rc", s(&k4)])), "1\n");
    assert_eq!(stdout(&rainbow(&["rc", "--k-max", "2", s(&c5)])), "> 2\n");
    let big = rainbow(&["gen", "--n", "50", "--p", "0.5", "--seed", "1"]);
    let big = write(&dir, "big.txt", &stdout(&big));
    assert_eq!(code(&rainbow(&["rc", s(&big)])), 5);
}

#[test]
fn gen_is_deterministic_and_valid() {
    let out = rainbow(&["gen", "--family", "named", "--name", "petersen"]);
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));

    let args = ["gen", "--family", "random-diam2", "--n", "20", "--p", "0.3", "--seed", "7"];
    let (a, b) = (rainbow(&args), rainbow(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let g = parse_edge_list(&stdout(&a)).unwrap();
    assert!(rainbow_core::gen::validate_family(&g, rainbow_core::gen::Family::RandomDiam2Bridgeless));
    assert_eq!(write_edge_list(&g), stdout(&a));

    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", r#"{"family":"random_diam2_bridgeless","n":20,"p":0.3,"seed":7}"#);
    assert_eq!(rainbow(&["gen", "--spec", s(&spec)]).stdout, a.stdout);
    assert_eq!(code(&rainbow(&["gen", "--family", "named", "--name", "nonsense"])), 1);
    assert_eq!(code(&rainbow(&["gen", "--family", "sideways"])), 1);
}

#[test]
fn bench_rows_within_bounds() {
    let run = |family: &str| {
        let out =
            rainbow(&["bench", "--family", family, "--count", "100", "--n-min", "10", "--n-max", "40", "--no-timing"]);
        assert_eq!(code(&out), 0);
        stdout(&out)
    };
    for (family, bound) in [("random-diam2", 5), ("pendant", 4)] {
        let csv = run(family);
        assert_eq!(csv, run(family), "bench output must be deterministic");
        let rows: Vec<&str> = csv.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows.len(), 100);
        let mut keys = Vec::new();
        for row in rows {
            let f: Vec<&str> = row.split(',').collect();
            assert_eq!(f.len(), 7);
            let colors: usize = f[3].parse().unwrap_or_else(|_| panic!("failed row {row}"));
            assert!(colors <= bound, "{row}");
            keys.push((f[1].parse::<usize>().unwrap(), f[0].parse::<u64>().unwrap()));
        }
        assert!(keys.windows(2).all(|w| w[0] <= w[1]), "rows sorted by (n, seed)");
        assert!(csv.lines().last().unwrap().starts_with("# instances=100 failed=0"));
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&rainbow(&[])), 1);
    assert_eq!(code(&rainbow(&["color"])), 1);
    assert_eq!(code(&rainbow(&["--help"])), 0);
}

#[test]
fn trace_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let g = rainbow(&["gen", "--n", "25", "--p", "0.35", "--seed", "3"]);
    let g = write(&dir, "g.txt", &stdout(&g));
    let mut seen = Vec::new();
    for i in 0..3 {
        let trace = dir.path().join(format!("t{i}.json"));
        let out = rainbow(&["color", s(&g), "--trace", s(&trace)]);
        assert_eq!(code(&out), 0);
        seen.push((out.stdout, std::fs::read(&trace).unwrap()));
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}
