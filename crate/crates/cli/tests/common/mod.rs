#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden file name and the arguments that produce it.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("generate_fibonomial", &["generate", "--family", "fibonomial", "--rows", "6", "--format", "csv"]),
    ("generate_q5", &["generate", "--family", "q-gaussian", "--q", "5", "--rows", "3", "--format", "csv"]),
    ("generate_pascal_0", &["generate", "--family", "pascal", "--rows", "0", "--format", "csv"]),
    ("verify_q2", &["verify", "--family", "q-gaussian", "--q", "2", "--rows", "12"]),
    ("verify_lah", &["verify", "--family", "lah", "--roots", "0,1,2,3,…", "--rows", "10"]),
    ("verify_catalan_triad", &["verify", "--family", "catalan-triad", "--rows", "1"]),
    ("fit_catalan_triad", &["fit", "--family", "catalan-triad", "--rows", "10"]),
    ("fit_fibonomial", &["fit", "--family", "fibonomial", "--rows", "10"]),
    ("fit_q2", &["fit", "--family", "q-gaussian", "--q", "2", "--rows", "10"]),
    ("solve_f_fibonomial", &["solve-f", "--family", "fibonomial", "--rows", "5"]),
    ("phi_fibonomial", &["phi", "--family", "fibonomial", "--rows", "1"]),
    ("convolve_fibonomial", &["convolve", "--family", "fibonomial", "--a", "ones", "--b", "ones", "--rows", "4"]),
    ("generate_q2_json", &["generate", "--family", "q-gaussian", "--q", "2", "--rows", "3", "--format", "json"]),
    ("generate_catalan_pretty", &["generate", "--family", "catalan-shifted", "--rows", "5", "--format", "pretty"]),
    ("ledger", &["--ledger"]),
];

/// `(args, expected exit code)`.
pub const EXIT_CASES: &[(&[&str], i32)] = &[
    (&["generate", "--family", "pascal", "--rows", "4"], 0),
    (&["fit", "--family", "eulerian", "--rows", "6"], 0),
    (&["verify", "--family", "stirling1", "--rows", "8"], 0),
    (&["verify", "--family", "pascal", "--roots", "constant:2", "--rows", "3"], 1),
    (&["verify", "--family", "eulerian", "--rows", "3"], 1),
    (&["phi", "--family", "eulerian", "--rows", "3"], 1),
    (&["generate", "--family", "lah", "--roots", "1,2", "--rows", "5"], 1),
    (&["generate", "--family", "hermite", "--rows", "3"], 2),
    (&["generate", "--family", "q-gaussian", "--rows", "3"], 2),
    (&["generate", "--family", "q-gaussian", "--q", "0", "--rows", "3"], 2),
    (&["generate", "--family", "pascal", "--q", "2", "--rows", "3"], 2),
    (&["generate", "--rows", "3"], 2),
    (&["generate", "--family", "pascal"], 2),
    (&["generate", "--family", "pascal", "--rows", "600"], 2),
    (&["generate", "--family", "pascal", "--rows", "-1"], 2),
    (&["generate", "--family", "pascal", "--rows", "3", "--format", "xml"], 2),
    (&["fit", "--family", "pascal", "--rows", "3"], 2),
    (&["convolve", "--family", "pascal", "--a", "1,2,3,4", "--b", "ones", "--rows", "2"], 2),
    (&["frobnicate"], 2),
    (&[], 2),
];

pub fn triad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triad"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

/// Every named family with parameters where needed.
pub fn all_families() -> Vec<Vec<&'static str>> {
    vec![
        vec!["--family", "pascal"],
        vec!["--family", "q-gaussian", "--q", "2"],
        vec!["--family", "q-gaussian", "--q", "-1/3"],
        vec!["--family", "catalan-shifted"],
        vec!["--family", "catalan-triad"],
        vec!["--family", "fibonomial"],
        vec!["--family", "stirling1"],
        vec!["--family", "eulerian"],
        vec!["--family", "lah", "--roots", "1/2,…"],
        vec!["--family", "lah", "--roots", "arithmetic:0:1"],
    ]
}
