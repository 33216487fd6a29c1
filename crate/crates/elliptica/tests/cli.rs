//! End-to-end tests of the command-line interface: exit codes, report
//! determinism, config-file and environment overrides.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_elliptica"))
}

#[test]
fn list_prints_all_catalogs() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("identities (27):"));
    assert!(text.contains("matrix kinds (6):"));
    assert!(text.contains("pairs (9):"));
    assert!(text.contains("lemmas (8):"));
    assert!(text.contains("FT_10V9"));
    assert!(text.contains("dn_jackson_two_base"));
}

#[test]
fn verify_known_identity_exits_zero() {
    let out = bin()
        .args(["verify", "--identity", "FT_10V9", "--caps", "3", "--trials", "20", "--seed", "7", "--tol", "1e-10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
}

#[test]
fn unknown_identity_exits_two() {
    let out = bin().args(["verify", "--identity", "no_such_name"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity"));
}

#[test]
fn bad_flag_exits_two() {
    let out = bin().args(["verify", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_tolerance_exits_two() {
    let out = bin()
        .args(["verify", "--identity", "FT_10V9", "--tol", "-1.0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("elliptica_cli_det_1.json");
    let p2 = dir.join("elliptica_cli_det_2.json");
    for p in [&p1, &p2] {
        let out = bin()
            .args([
                "verify",
                "--identity",
                "an_jackson_rosengren",
                "--n",
                "2",
                "--caps",
                "2,2",
                "--trials",
                "3",
                "--seed",
                "11",
                "--format",
                "json",
                "--output",
                p.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    }
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert_eq!(b1, b2, "reports differ between identical runs");

    // Round trip: parsing the file reproduces the in-memory schema.
    let rep: elliptica::report::Report = serde_json::from_slice(&b1).unwrap();
    assert_eq!(rep.seed, 11);
    assert_eq!(rep.precision_bits, 53);
    assert_eq!(rep.entries.len(), 1);
    assert_eq!(rep.entries[0].name, "an_jackson_rosengren");
    assert_eq!(rep.entries[0].trials, 3);
    assert_eq!(rep.entries[0].status, "PASS");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir();
    let cfg = dir.join("elliptica_cli_cfg.json");
    let out_path = dir.join("elliptica_cli_cfg_out.json");
    std::fs::write(
        &cfg,
        format!(
            "{{\"trials\": 2, \"seed\": 21, \"format\": \"json\", \"caps\": \"2\", \"output\": \"{}\"}}",
            out_path.display()
        ),
    )
    .unwrap();
    let out = bin()
        .args(["verify", "--identity", "jackson_q_dougall", "--config", cfg.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let rep: elliptica::report::Report =
        serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(rep.seed, 21);
    assert_eq!(rep.entries[0].trials, 2);
}

#[test]
fn env_var_overrides_precision() {
    let out = bin()
        .args(["verify", "--identity", "FT_10V9", "--trials", "1", "--format", "json"])
        .env("ELLIPTICA_PRECISION_BITS", "106")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rep: elliptica::report::Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep.precision_bits, 106);
    assert_eq!(rep.entries[0].status, "PASS");
}

#[test]
fn matrix_pair_lemma_chain_subcommands() {
    let out = bin()
        .args(["matrix-check", "--kind", "B6", "--n", "2", "--caps", "2", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let out = bin()
        .args(["pair-check", "--pair", "B5_primary", "--n", "1", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["lemma-check", "--lemma", "B3toB3", "--n", "1", "--caps", "2", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["chain-check", "--chain", "B1toB4,B4toB1", "--pair", "B1_primary", "--n", "1", "--caps", "1", "--trials", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // Mismatched chain head is a usage error.
    let out = bin()
        .args(["chain-check", "--chain", "B2toB1", "--pair", "B1_primary"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
