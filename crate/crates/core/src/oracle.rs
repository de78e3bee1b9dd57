//! Brute-force reference semantics.
//!
//! Every subset of the arguments is tested against the textbook definitions,
//! reading attacks only through the framework's pair set. Nothing here shares
//! code with the matrix route; keep it that way, and keep it slow and obvious.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::framework::{Arg, ArgSet, Framework};
use crate::semantics::{ExtensionFamily, SemanticsTag};

pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// Largest bound accepted at all; subsets are enumerated as `u32` masks.
pub const MAX_ORACLE_BOUND: usize = 24;

type Set = BTreeSet<Arg>;

fn attacks(f: &Framework, a: Arg, b: Arg) -> bool {
    f.attacks().contains(&(a, b))
}

fn conflict_free(f: &Framework, s: &Set) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| !attacks(f, a, b)))
}

fn defeated(f: &Framework, s: &Set, a: Arg) -> bool {
    s.iter().any(|&b| attacks(f, b, a))
}

fn defends(f: &Framework, s: &Set, a: Arg) -> bool {
    (1..=f.n()).filter(|&b| attacks(f, b, a)).all(|b| defeated(f, s, b))
}

/// `a` is defended by `s`: every attacker of `a` is attacked by some member
/// of `s`.
pub fn oracle_defends(f: &Framework, s: &ArgSet, a: Arg) -> bool {
    defends(f, &s.iter().collect(), a)
}

fn stable(f: &Framework, s: &Set) -> bool {
    conflict_free(f, s) && (1..=f.n()).filter(|a| !s.contains(a)).all(|a| defeated(f, s, a))
}

fn admissible(f: &Framework, s: &Set) -> bool {
    conflict_free(f, s) && s.iter().all(|&a| defends(f, s, a))
}

fn complete(f: &Framework, s: &Set) -> bool {
    admissible(f, s) && (1..=f.n()).filter(|&a| defends(f, s, a)).all(|a| s.contains(&a))
}

fn proper_subset(a: &Set, b: &Set) -> bool {
    a.is_subset(b) && a != b
}

fn range(f: &Framework, s: &Set) -> Set {
    let mut out = s.clone();
    out.extend((1..=f.n()).filter(|&b| defeated(f, s, b)));
    out
}

fn intersect_all(n: usize, family: &[Set]) -> Set {
    family.iter().fold((1..=n).collect(), |acc, t| acc.intersection(t).copied().collect())
}

fn all_subsets(n: usize) -> Vec<Set> {
    (0u32..1 << n)
        .map(|mask| (1..=n).filter(|a| mask >> (a - 1) & 1 == 1).collect())
        .collect()
}

/// Greatest-by-inclusion admissible sets inside `bound`: members of `ad`
/// contained in `bound` with no strictly larger such member.
fn maximal_admissible_within(ad: &[Set], bound: &Set) -> Vec<Set> {
    let inside: Vec<&Set> = ad.iter().filter(|s| s.is_subset(bound)).collect();
    inside
        .iter()
        .filter(|s| !inside.iter().any(|u| proper_subset(s, u)))
        .map(|s| (*s).clone())
        .collect()
}

/// All extensions under `tag`, by exhaustive subset filtering. Refuses
/// frameworks with more than `bound` arguments.
pub fn oracle_family(f: &Framework, tag: SemanticsTag, bound: usize) -> Result<ExtensionFamily> {
    let n = f.n();
    let bound = bound.min(MAX_ORACLE_BOUND);
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let subsets = all_subsets(n);
    let filter = |p: &dyn Fn(&Set) -> bool| subsets.iter().filter(|s| p(s)).cloned().collect::<Vec<_>>();
    let ad = || filter(&|s| admissible(f, s));
    let pr = |ad: &[Set]| -> Vec<Set> {
        ad.iter().filter(|s| !ad.iter().any(|t| proper_subset(s, t))).cloned().collect()
    };
    let sst = |ad: &[Set]| -> Vec<Set> {
        ad.iter()
            .filter(|s| {
                let rs = range(f, s);
                !ad.iter().any(|t| proper_subset(&rs, &range(f, t)))
            })
            .cloned()
            .collect()
    };

    let sets: Vec<Set> = match tag {
        SemanticsTag::ConflictFree => filter(&|s| conflict_free(f, s)),
        SemanticsTag::Stable => filter(&|s| stable(f, s)),
        SemanticsTag::Admissible => ad(),
        SemanticsTag::Complete => filter(&|s| complete(f, s)),
        SemanticsTag::Preferred => pr(&ad()),
        SemanticsTag::Grounded => {
            let co = filter(&|s| complete(f, s));
            co.iter().filter(|s| !co.iter().any(|t| proper_subset(t, s))).cloned().collect()
        }
        SemanticsTag::Ideal => {
            let ad = ad();
            maximal_admissible_within(&ad, &intersect_all(n, &pr(&ad)))
        }
        SemanticsTag::SemiStable => sst(&ad()),
        SemanticsTag::Eager => {
            let ad = ad();
            maximal_admissible_within(&ad, &intersect_all(n, &sst(&ad)))
        }
    };
    Ok(ExtensionFamily::new(tag, sets.into_iter().map(|s| s.into_iter().collect::<ArgSet>())))
}

/// Least fixed point of `S ↦ {a : a is defended by S}`, iterated from `∅`.
pub fn oracle_grounded_fixpoint(f: &Framework) -> ArgSet {
    let mut current = Set::new();
    loop {
        let next: Set = (1..=f.n()).filter(|&a| defends(f, &current, a)).collect();
        if next == current {
            return current.into_iter().collect();
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ArgSet {
        ArgSet::new(v.to_vec()).unwrap()
    }

    fn unique_stable() -> Framework {
        Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)]).unwrap()
    }

    fn two_stable() -> Framework {
        Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 1), (4, 3), (5, 4)]).unwrap()
    }

    fn two_cycles() -> Framework {
        Framework::new(5, [(1, 2), (1, 3), (3, 1), (4, 5), (5, 1), (5, 4)]).unwrap()
    }

    #[test]
    fn defence_examples() {
        assert!(oracle_defends(&two_stable(), &set(&[1, 5]), 5));
        assert!(oracle_defends(&unique_stable(), &ArgSet::empty(), 1));
        assert!(!oracle_defends(&two_cycles(), &set(&[2, 3]), 1));
    }

    #[test]
    fn conflict_free_family_has_twelve_sets() {
        let fam = oracle_family(&unique_stable(), SemanticsTag::ConflictFree, DEFAULT_ORACLE_BOUND).unwrap();
        let shown: Vec<String> = fam.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            ["[]", "[1]", "[2]", "[3]", "[4]", "[5]", "[1,3]", "[1,4]", "[1,5]", "[2,4]", "[3,5]", "[1,3,5]"]
        );
    }

    #[test]
    fn stable_family_of_example_framework() {
        let fam = oracle_family(&unique_stable(), SemanticsTag::Stable, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(fam.sets.into_iter().collect::<Vec<_>>(), vec![set(&[1, 3, 5])]);
    }

    #[test]
    fn empty_framework_families() {
        let f = Framework::empty(0);
        for tag in [SemanticsTag::Admissible, SemanticsTag::Preferred, SemanticsTag::Complete, SemanticsTag::Grounded] {
            let fam = oracle_family(&f, tag, DEFAULT_ORACLE_BOUND).unwrap();
            assert_eq!(fam.sets.into_iter().collect::<Vec<_>>(), vec![ArgSet::empty()], "{tag}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let f = Framework::empty(13);
        assert_eq!(
            oracle_family(&f, SemanticsTag::Stable, DEFAULT_ORACLE_BOUND).unwrap_err(),
            Error::OracleBound { n: 13, bound: 12 }
        );
    }

    #[test]
    fn grounded_fixpoints() {
        assert_eq!(oracle_grounded_fixpoint(&two_cycles()), ArgSet::empty());
        assert_eq!(oracle_grounded_fixpoint(&Framework::empty(3)), set(&[1, 2, 3]));
        assert_eq!(oracle_grounded_fixpoint(&Framework::new(2, [(1, 2)]).unwrap()), set(&[1]));
    }
}
