//! Main-versus-oracle differential checks on a single framework.

use std::ops::ControlFlow;

use crate::cfenum::for_each_conflict_free;
use crate::error::Result;
use crate::framework::Framework;
use crate::matrix::{build_matrix, extract_subblocks, to_norm_form, AttackMatrix};
use crate::oracle::{oracle_family, oracle_grounded_fixpoint};
use crate::semantics::{compute, ExtensionFamily, SemanticsTag};

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

fn subset_family(a: &ExtensionFamily, b: &ExtensionFamily) -> bool {
    a.iter().all(|s| b.contains(s))
}

/// Checks every semantics against the oracle, the grounded extension against
/// the fixed-point iteration, the family-level guarantees, and for every
/// conflict-free set the agreement of the sub-block and norm-form criteria.
///
/// Errors only when the oracle refuses the framework size.
pub fn verify_framework(f: &Framework, oracle_bound: usize) -> Result<VerifyReport> {
    use SemanticsTag::*;
    let mut report = VerifyReport::default();
    let mut families = Vec::new();
    for tag in SemanticsTag::ALL {
        let expected = oracle_family(f, tag, oracle_bound)?;
        match compute(f, tag) {
            Ok(got) => {
                report.check(got == expected, || {
                    format!("{tag}: got {:?}, oracle {:?}", got.sets, expected.sets)
                });
                families.push(got);
            }
            Err(e) => {
                report.check(false, || format!("{tag}: {e}"));
                families.push(expected);
            }
        }
    }
    let fam = |t: SemanticsTag| &families[SemanticsTag::ALL.iter().position(|&x| x == t).unwrap()];

    let fixpoint = oracle_grounded_fixpoint(f);
    report.check(fam(Grounded).sets.iter().eq([&fixpoint]), || {
        format!("gr {:?} differs from fixpoint {fixpoint}", fam(Grounded).sets)
    });
    report.check(
        subset_family(fam(Stable), fam(Preferred))
            && subset_family(fam(Preferred), fam(Complete))
            && subset_family(fam(Complete), fam(Admissible)),
        || "inclusion chain st ⊆ pr ⊆ co ⊆ ad broken".into(),
    );
    for t in [Grounded, Ideal, Eager] {
        report.check(fam(t).len() == 1, || format!("{t} has {} members", fam(t).len()));
    }
    for t in [Admissible, Preferred, Complete, Grounded] {
        report.check(!fam(t).is_empty(), || format!("{t} is empty"));
    }
    if !fam(Stable).is_empty() {
        report.check(fam(SemiStable).sets == fam(Stable).sets, || "sst differs from non-empty st".into());
    }

    let natural = AttackMatrix::natural(f);
    for_each_conflict_free::<()>(f, |s| {
        let nf = match to_norm_form(f, s) {
            Ok(nf) => nf,
            Err(e) => {
                report.check(false, || format!("norm form of {s}: {e}"));
                return ControlFlow::Continue(());
            }
        };
        report.check(nf.structure_holds(), || format!("norm form of {s} lacks block structure"));
        let direct = build_matrix(f, nf.matrix.labels()).expect("labels are a permutation");
        report.check(direct == nf.matrix, || format!("norm form of {s} differs from direct build"));
        let b = extract_subblocks(&natural, s).expect("enumerated set in range");
        let sub = (b.stable_holds(), b.admissible_holds(), b.admissible_holds() && b.complete_holds());
        let norm = (nf.stable_holds(), nf.admissible_holds(), nf.complete_holds());
        report.check(sub == norm, || format!("{s}: sub-block {sub:?} vs norm form {norm:?}"));
        ControlFlow::Continue(())
    });
    Ok(report)
}
