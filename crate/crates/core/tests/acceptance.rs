//! Runs every verification suite over its default range and prints one
//! line per criterion. The lines go straight to stdout, so they show up
//! without `--nocapture`.

use std::io::Write;
use std::time::Instant;

use qsp_core::checks::{Scope, Suite};

#[test]
fn acceptance() {
    let scope = Scope::default();
    let mut failed = Vec::new();
    std::io::stdout().lock().write_all(b"\n").unwrap();
    for (k, suite) in Suite::ALL.into_iter().enumerate() {
        let start = Instant::now();
        let line = match suite.run(&scope) {
            Ok(results) => {
                let bad: Vec<_> = results.iter().filter(|r| !r.pass).collect();
                let mut note = String::new();
                if suite == Suite::RankOne {
                    let flagged: Vec<String> = results
                        .iter()
                        .filter_map(|r| r.detail.as_ref())
                        .filter(|d| d["discrepancy"] == true)
                        .map(|d| format!("n={} count={} eigenvalues={}", d["n"], d["eigenvalue_count"], d["eigenvalues"]))
                        .collect();
                    if !flagged.is_empty() {
                        note = format!("; differs from quoted figures at {}", flagged.join(", "));
                    }
                }
                if bad.is_empty() {
                    format!("PASS {} checks{note}", results.len())
                } else {
                    failed.push(suite);
                    let first = serde_json::to_string(bad[0]).unwrap();
                    format!("FAIL {} of {} checks, first: {first}", bad.len(), results.len())
                }
            }
            Err(e) => {
                failed.push(suite);
                format!("FAIL error: {e}")
            }
        };
        let line = format!("criterion {:>2} {:<20} {line} [{:.1?}]\n", k + 1, suite.name(), start.elapsed());
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
