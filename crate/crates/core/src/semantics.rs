//! Extension semantics.
//!
//! Stable, admissible and complete sets are decided on the sub-blocks of a
//! conflict-free candidate (or, as a second route, on its norm form).
//! Preferred, grounded, ideal, semi-stable and eager extensions are derived
//! from the admissible and complete families by set comparison.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::bits::BitSet;
use crate::cfenum::for_each_conflict_free;
use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework};
use crate::matrix::{extract_subblocks, to_norm_form, AttackMatrix, SubBlocks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsTag {
    ConflictFree,
    Stable,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Ideal,
    SemiStable,
    Eager,
}

impl SemanticsTag {
    pub const ALL: [SemanticsTag; 9] = [
        SemanticsTag::ConflictFree,
        SemanticsTag::Stable,
        SemanticsTag::Admissible,
        SemanticsTag::Complete,
        SemanticsTag::Preferred,
        SemanticsTag::Grounded,
        SemanticsTag::Ideal,
        SemanticsTag::SemiStable,
        SemanticsTag::Eager,
    ];

    pub fn code(self) -> &'static str {
        match self {
            SemanticsTag::ConflictFree => "cf",
            SemanticsTag::Stable => "st",
            SemanticsTag::Admissible => "ad",
            SemanticsTag::Complete => "co",
            SemanticsTag::Preferred => "pr",
            SemanticsTag::Grounded => "gr",
            SemanticsTag::Ideal => "id",
            SemanticsTag::SemiStable => "sst",
            SemanticsTag::Eager => "eg",
        }
    }

    /// Whether the family is decided directly by a matrix criterion rather
    /// than derived from other families.
    pub fn is_basic(self) -> bool {
        matches!(
            self,
            SemanticsTag::ConflictFree
                | SemanticsTag::Stable
                | SemanticsTag::Admissible
                | SemanticsTag::Complete
        )
    }

    /// Semantics guaranteed to yield exactly one extension.
    pub fn is_unique(self) -> bool {
        matches!(self, SemanticsTag::Grounded | SemanticsTag::Ideal | SemanticsTag::Eager)
    }
}

impl fmt::Display for SemanticsTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for SemanticsTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SemanticsTag::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown semantics '{s}'")))
    }
}

/// The extensions of one framework under one semantics, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFamily {
    pub tag: SemanticsTag,
    pub sets: BTreeSet<ArgSet>,
}

impl ExtensionFamily {
    pub fn new(tag: SemanticsTag, sets: impl IntoIterator<Item = ArgSet>) -> Self {
        ExtensionFamily { tag, sets: sets.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: &ArgSet) -> bool {
        self.sets.contains(s)
    }
}

/// A set together with its range: the set plus everything it attacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range {
    pub set: ArgSet,
    pub range: ArgSet,
}

pub fn range(f: &Framework, s: &ArgSet) -> Range {
    let bits = range_bits(f, s);
    Range { set: s.clone(), range: ArgSet::from_bits(&bits) }
}

fn range_bits(f: &Framework, s: &ArgSet) -> BitSet {
    let mut bits = s.to_bits(f.n());
    for a in s.iter() {
        bits.union_with(f.targets_bits(a));
    }
    bits
}

/// Which matrix characterisation decides stable/admissible/complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Column and row tests on the `cf`, `s`, `a`, `c` sub-blocks of `M(F)`.
    #[default]
    SubBlock,
    /// Block tests on the norm form reached by dual interchanges.
    NormForm,
}

fn blocks(m: &AttackMatrix, s: &ArgSet) -> Result<SubBlocks> {
    let b = extract_subblocks(m, s)?;
    match b.first_conflict() {
        Some((attacker, target)) => Err(Error::NotConflictFree { attacker, target }),
        None => Ok(b),
    }
}

/// Every column of the `s` block is non-zero. Requires a conflict-free set.
pub fn is_stable(f: &Framework, s: &ArgSet) -> Result<bool> {
    Ok(blocks(&AttackMatrix::natural(f), s)?.stable_holds())
}

/// Each non-zero row of the `a` block has a non-zero `s` column. Requires a
/// conflict-free set.
pub fn is_admissible(f: &Framework, s: &ArgSet) -> Result<bool> {
    Ok(blocks(&AttackMatrix::natural(f), s)?.admissible_holds())
}

/// Requires an admissible set.
pub fn is_complete(f: &Framework, s: &ArgSet) -> Result<bool> {
    let b = blocks(&AttackMatrix::natural(f), s)?;
    if let Some((attacker, target)) = b.undefended_attack() {
        return Err(Error::NotAdmissible { attacker, target });
    }
    Ok(b.complete_holds())
}

/// Same decisions as [`is_stable`], [`is_admissible`] and [`is_complete`],
/// read off the norm form instead: `(stable, admissible, complete)`.
pub fn norm_form_verdicts(f: &Framework, s: &ArgSet) -> Result<(bool, bool, bool)> {
    let nf = to_norm_form(f, s)?;
    let admissible = nf.admissible_holds();
    Ok((nf.stable_holds(), admissible, admissible && nf.complete_holds()))
}

pub fn compute_family(f: &Framework, tag: SemanticsTag) -> Result<ExtensionFamily> {
    compute_family_with(f, tag, Route::SubBlock)
}

/// Enumerates conflict-free sets and keeps those meeting the tag's
/// criterion. Only `cf`, `st`, `ad` and `co` are accepted.
pub fn compute_family_with(f: &Framework, tag: SemanticsTag, route: Route) -> Result<ExtensionFamily> {
    if !tag.is_basic() {
        return Err(Error::Usage(format!("'{tag}' is derived; use compute_derived")));
    }
    let natural = AttackMatrix::natural(f);
    let keep = |s: &ArgSet| -> Result<bool> {
        if tag == SemanticsTag::ConflictFree {
            return Ok(true);
        }
        match route {
            Route::SubBlock => {
                let b = blocks(&natural, s)?;
                Ok(match tag {
                    SemanticsTag::Stable => b.stable_holds(),
                    SemanticsTag::Admissible => b.admissible_holds(),
                    _ => b.admissible_holds() && b.complete_holds(),
                })
            }
            Route::NormForm => {
                let nf = to_norm_form(f, s)?;
                Ok(match tag {
                    SemanticsTag::Stable => nf.stable_holds(),
                    SemanticsTag::Admissible => nf.admissible_holds(),
                    _ => nf.complete_holds(),
                })
            }
        }
    };
    let mut sets = BTreeSet::new();
    let failure = for_each_conflict_free(f, |s| match keep(s) {
        Ok(true) => {
            sets.insert(s.clone());
            ControlFlow::Continue(())
        }
        Ok(false) => ControlFlow::Continue(()),
        Err(e) => ControlFlow::Break(e),
    });
    match failure {
        Some(e) => Err(Error::Invariant(format!("criterion failed on enumerated set: {e}"))),
        None => Ok(ExtensionFamily { tag, sets }),
    }
}

struct Packed {
    set: ArgSet,
    bits: BitSet,
}

fn pack(f: &Framework, family: &ExtensionFamily) -> Vec<Packed> {
    family.iter().map(|s| Packed { set: s.clone(), bits: s.to_bits(f.n()) }).collect()
}

fn strict_subset(a: &BitSet, b: &BitSet) -> bool {
    a.is_subset(b) && a != b
}

/// Members with no strict superset in the list, by set inclusion.
fn maximal(items: &[Packed]) -> Vec<ArgSet> {
    items
        .iter()
        .filter(|x| !items.iter().any(|y| strict_subset(&x.bits, &y.bits)))
        .map(|x| x.set.clone())
        .collect()
}

fn minimal(items: &[Packed]) -> Vec<ArgSet> {
    items
        .iter()
        .filter(|x| !items.iter().any(|y| strict_subset(&y.bits, &x.bits)))
        .map(|x| x.set.clone())
        .collect()
}

fn intersection(n: usize, sets: impl IntoIterator<Item = ArgSet>) -> BitSet {
    let mut acc = BitSet::full(n);
    for s in sets {
        acc.intersect_with(&s.to_bits(n));
    }
    acc
}

/// The largest admissible subset of `bound`, scanning admissible sets by
/// descending cardinality. Checks that it contains every other admissible
/// subset of `bound`.
fn greatest_admissible_within(admissible: &[Packed], bound: &BitSet) -> Result<ArgSet> {
    let mut inside: Vec<&Packed> = admissible.iter().filter(|p| p.bits.is_subset(bound)).collect();
    inside.sort_by(|a, b| b.set.cmp(&a.set));
    let top = inside
        .first()
        .ok_or_else(|| Error::Invariant("no admissible subset (the empty set is always one)".into()))?;
    if let Some(other) = inside.iter().find(|p| !p.bits.is_subset(&top.bits)) {
        return Err(Error::Invariant(format!(
            "admissible subsets {} and {} have no common maximum",
            top.set, other.set
        )));
    }
    Ok(top.set.clone())
}

fn single(tag: SemanticsTag, sets: Vec<ArgSet>) -> Result<ExtensionFamily> {
    if sets.len() != 1 {
        return Err(Error::Invariant(format!("{tag} produced {} extensions, expected 1", sets.len())));
    }
    Ok(ExtensionFamily::new(tag, sets))
}

/// Preferred, grounded, ideal, semi-stable or eager extensions.
pub fn compute_derived(f: &Framework, tag: SemanticsTag) -> Result<ExtensionFamily> {
    let n = f.n();
    let ad = compute_family(f, SemanticsTag::Admissible)?;
    let ad_packed = pack(f, &ad);
    match tag {
        SemanticsTag::Preferred => Ok(ExtensionFamily::new(tag, maximal(&ad_packed))),
        SemanticsTag::Grounded => {
            let co = compute_family(f, SemanticsTag::Complete)?;
            single(tag, minimal(&pack(f, &co)))
        }
        SemanticsTag::SemiStable => Ok(ExtensionFamily::new(tag, semi_stable(f, &ad))),
        SemanticsTag::Ideal => {
            let bound = intersection(n, maximal(&ad_packed));
            single(tag, vec![greatest_admissible_within(&ad_packed, &bound)?])
        }
        SemanticsTag::Eager => {
            let bound = intersection(n, semi_stable(f, &ad));
            single(tag, vec![greatest_admissible_within(&ad_packed, &bound)?])
        }
        _ => Err(Error::Usage(format!("'{tag}' is not derived; use compute_family"))),
    }
}

fn semi_stable(f: &Framework, ad: &ExtensionFamily) -> Vec<ArgSet> {
    let ranges: Vec<Packed> =
        ad.iter().map(|s| Packed { set: s.clone(), bits: range_bits(f, s) }).collect();
    maximal(&ranges)
}

/// Any semantics, dispatching to [`compute_family`] or [`compute_derived`].
pub fn compute(f: &Framework, tag: SemanticsTag) -> Result<ExtensionFamily> {
    if tag.is_basic() {
        compute_family(f, tag)
    } else {
        compute_derived(f, tag)
    }
}

/// Global and local reasoning questions about a semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Question {
    /// Does an extension exist?
    Exists,
    /// Give one extension.
    SomeExtension,
    /// Give all extensions.
    AllExtensions,
    /// Is the query set contained in some extension?
    ContainedInSome,
    /// Is the query set contained in every extension?
    ContainedInAll,
    /// Is the query set attacked by some extension?
    AttackedBySome,
    /// Is the query set attacked by every extension?
    AttackedByAll,
    /// Give one extension containing the query set.
    SomeContaining,
    /// Give all extensions containing the query set.
    AllContaining,
    /// Give one extension attacking the query set.
    SomeAttacking,
    /// Give all extensions attacking the query set.
    AllAttacking,
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "exists" => Question::Exists,
            "some" => Question::SomeExtension,
            "all" => Question::AllExtensions,
            "contained-in-some" => Question::ContainedInSome,
            "contained-in-all" => Question::ContainedInAll,
            "attacked-by-some" => Question::AttackedBySome,
            "attacked-by-all" => Question::AttackedByAll,
            "some-containing" => Question::SomeContaining,
            "all-containing" => Question::AllContaining,
            "some-attacking" => Question::SomeAttacking,
            "all-attacking" => Question::AllAttacking,
            _ => return Err(Error::Usage(format!("unknown question '{s}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Bool(bool),
    Extension(Option<ArgSet>),
    Extensions(Vec<ArgSet>),
}

/// Whether some member of `e` attacks some member of `target`.
pub fn attacks_set(f: &Framework, e: &ArgSet, target: &ArgSet) -> bool {
    let target_bits = target.to_bits(f.n());
    e.iter().any(|a| f.targets_bits(a).intersects(&target_bits))
}

/// Answers `question` over an already computed family.
///
/// "Every extension" questions over an empty family are vacuously true.
pub fn answer(f: &Framework, family: &ExtensionFamily, question: Question, a: &ArgSet) -> Result<Answer> {
    f.check_set(a)?;
    let containing = |e: &&ArgSet| a.is_subset(e);
    let attacking = |e: &&ArgSet| attacks_set(f, e, a);
    Ok(match question {
        Question::Exists => Answer::Bool(!family.is_empty()),
        Question::SomeExtension => Answer::Extension(family.iter().next().cloned()),
        Question::AllExtensions => Answer::Extensions(family.iter().cloned().collect()),
        Question::ContainedInSome => Answer::Bool(family.iter().any(|e| containing(&e))),
        Question::ContainedInAll => Answer::Bool(family.iter().all(|e| containing(&e))),
        Question::AttackedBySome => Answer::Bool(family.iter().any(|e| attacking(&e))),
        Question::AttackedByAll => Answer::Bool(family.iter().all(|e| attacking(&e))),
        Question::SomeContaining => Answer::Extension(family.iter().find(containing).cloned()),
        Question::AllContaining => Answer::Extensions(family.iter().filter(containing).cloned().collect()),
        Question::SomeAttacking => Answer::Extension(family.iter().find(attacking).cloned()),
        Question::AllAttacking => Answer::Extensions(family.iter().filter(attacking).cloned().collect()),
    })
}

pub fn query(f: &Framework, question: Question, tag: SemanticsTag, a: &ArgSet) -> Result<Answer> {
    f.check_set(a)?;
    let family = compute(f, tag)?;
    answer(f, &family, question, a)
}
