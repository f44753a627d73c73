//! A provider that returns one wrong group must turn `verify-all` red.

use eqhom::confighom::{Catalog, CitedDims, ConfigSpaceSpec, DimensionProvider, Space};
use eqhom::Result;

/// The catalogue, except for one extra class on `B(L^3_3, 2)`.
struct Corrupted;

impl DimensionProvider for Corrupted {
    fn dims(&self, spec: &ConfigSpaceSpec) -> Result<CitedDims> {
        let mut cited = Catalog.dims(spec)?;
        if spec.space == Space::Lens(3) && spec.m == 3 && spec.n == 2 {
            cited.dims.add(1, 1);
        }
        Ok(cited)
    }
}

fn run(args: &[&str], provider: &dyn DimensionProvider) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eqhom").chain(args.iter().copied());
    let code = eqhom_cli::run_with(argv, provider, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn verify_all_exits_one_and_names_the_case() {
    let (code, text) = run(&["verify-all", "-T", "20"], &Corrupted);
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("FAIL 2:"), "{text}");
    assert!(text.contains("failed case c2/lens/m=3/M=5/r=3/s=3/free"), "{text}");
    assert!(text.contains("PASS 1:"), "{text}");
}

#[test]
fn json_report_lists_the_failures() {
    let (code, text) = run(&["verify-all", "--json"], &Corrupted);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    let failed: Vec<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["verdict"] == false)
        .map(|r| r["case_id"].as_str().unwrap())
        .collect();
    assert!(!failed.is_empty());
    assert_eq!(report["summary"]["failed"], failed.len());
    assert!(failed.contains(&"c2/lens/m=3/M=5/r=3/s=3/free"), "{failed:?}");
    assert!(failed.contains(&"c6/euler/lens/r=3/m=3/N=2/const"), "{failed:?}");
}

#[test]
fn table_verify_exits_one_on_a_mismatch() {
    let (code, text) = run(&["table", "lens", "3", "5", "--r", "3", "--s", "3", "--verify"], &Corrupted);
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("equal: false"), "{text}");
    let (code, _) = run(&["table", "lens", "3", "5", "--r", "3", "--s", "3", "--verify"], &Catalog);
    assert_eq!(code, 0);
}
