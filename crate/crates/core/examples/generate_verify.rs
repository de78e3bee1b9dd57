//! Seeded frameworks, text formats, and the brute-force cross-check.
//!
//! `cargo run --example generate_verify`

use afmatrix::frontend::{generate, parse_apx, write_apx, write_tgf, GeneratorConfig, NameMap};
use afmatrix::oracle::DEFAULT_ORACLE_BOUND;
use afmatrix::verify::verify_framework;

fn main() -> afmatrix::Result<()> {
    let cfg = GeneratorConfig::new(6, 0.3, 42)?;
    let f = generate(&cfg)?;
    let names = NameMap::numeric(f.n());
    print!("{}", write_tgf(&f, &names));

    let apx = write_apx(&f, &names);
    let (back, _) = parse_apx(&apx)?;
    assert_eq!(back, f);

    let mut checks = 0;
    for seed in 0..50 {
        let g = generate(&GeneratorConfig::new(8, 0.25, seed)?)?;
        let report = verify_framework(&g, DEFAULT_ORACLE_BOUND)?;
        assert!(report.passed(), "seed {seed}: {:?}", report.mismatches);
        checks += report.checks;
    }
    println!("50 frameworks, {checks} checks against the oracle, no mismatches");
    Ok(())
}
