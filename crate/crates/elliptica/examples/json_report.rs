//! Building a machine-readable verification report programmatically.
//!
//! Run with: cargo run --example json_report

use elliptica::bailey::{BressoudKind, PairId};
use elliptica::certify;
use elliptica::registry::{self, Dims};
use elliptica::report::{emit_report, Report, ReportEntry, ReportFormat};

fn main() {
    let seed = 3u64;
    let mut entries = Vec::new();

    for name in ["FT_10V9", "an_jackson_milne_vwp", "e_fundamental"] {
        let spec = registry::lookup(name).unwrap();
        let n = if spec.has_x { 2 } else { 1 };
        let caps = registry::default_caps(&spec, n, 2);
        entries.push(registry::verify_trials(
            &spec,
            5,
            seed,
            Dims { n, m: 0 },
            &caps,
            registry::ladder_tol(n),
        ));
    }
    entries.push(certify::certify_matrix(BressoudKind::B3, 2, 2, 5, seed, 1e-8).unwrap());
    entries.push(certify::certify_pair(PairId::B4Primary, 2, 2, 5, seed, 1e-8).unwrap());

    let report = Report::new(seed, 53, entries.iter().map(ReportEntry::from_suite).collect());

    // Text to stdout, JSON alongside.
    emit_report(&report, ReportFormat::Text, None).unwrap();
    let path = std::env::temp_dir().join("elliptica_example_report.json");
    let bytes = emit_report(&report, ReportFormat::Json, path.to_str()).unwrap();
    println!("wrote {bytes} bytes of JSON to {}", path.display());

    // The file round-trips through the fixed schema.
    let back: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, report);
    println!("round-trip parse OK; all pass = {}", back.all_pass());
}
