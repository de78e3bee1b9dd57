//! Conflict-free sets: the sub-block test and level-wise enumeration from
//! basic sets.
//!
//! The basic set `C(i)` of a self-attack-free argument `i` holds every other
//! self-attack-free argument `j` with `a_ij = 0` and `a_ji = 0`. A
//! conflict-free `S` extends to `S ∪ {i}` exactly when `S ⊆ C(i)`. Levels are
//! grown by extending each `S` only with `i > max(S)`, so every set is
//! produced once and each level comes out in lexicographic order.

use std::ops::ControlFlow;

use crate::bits::BitSet;
use crate::error::Result;
use crate::framework::{Arg, ArgSet, Framework};
use crate::matrix::{extract_subblocks, AttackMatrix};

/// True iff the `cf` sub-block of `s` in `M(F)` is zero.
pub fn is_conflict_free(f: &Framework, s: &ArgSet) -> Result<bool> {
    Ok(extract_subblocks(&AttackMatrix::natural(f), s)?.cf_is_zero())
}

/// `C(i)` for every argument; self-attackers have no basic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSets {
    n: usize,
    sets: Vec<Option<BitSet>>,
}

impl BasicSets {
    pub fn get(&self, i: Arg) -> Option<ArgSet> {
        self.sets.get(i.wrapping_sub(1))?.as_ref().map(ArgSet::from_bits)
    }

    pub(crate) fn bits(&self, i: Arg) -> Option<&BitSet> {
        self.sets[i - 1].as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn basic_sets(f: &Framework) -> BasicSets {
    let n = f.n();
    let mut self_attack_free = BitSet::new(n);
    for a in f.arguments().filter(|&a| !f.is_self_attacking(a)) {
        self_attack_free.insert(a - 1);
    }
    let sets = f
        .arguments()
        .map(|i| {
            if f.is_self_attacking(i) {
                return None;
            }
            let mut c = self_attack_free.clone();
            c.difference_with(f.targets_bits(i));
            c.difference_with(f.attackers_bits(i));
            c.remove(i - 1);
            Some(c)
        })
        .collect();
    BasicSets { n, sets }
}

/// All conflict-free sets grouped by cardinality: `levels[r]` holds the
/// sets of size `r`, lexicographically ordered. Trailing empty levels up to
/// `n` are kept so that `levels.len() == n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfFamily {
    pub levels: Vec<Vec<ArgSet>>,
}

impl CfFamily {
    pub fn iter(&self) -> impl Iterator<Item = &ArgSet> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Node {
    bits: BitSet,
    max: Option<Arg>,
}

/// Visits every conflict-free set in level order without holding more than
/// two levels at once. The visitor may stop the walk early.
pub fn for_each_conflict_free<B>(
    f: &Framework,
    mut visit: impl FnMut(&ArgSet) -> ControlFlow<B>,
) -> Option<B> {
    let n = f.n();
    let basic = basic_sets(f);
    let mut level = vec![Node { bits: BitSet::new(n), max: None }];
    if let ControlFlow::Break(b) = visit(&ArgSet::empty()) {
        return Some(b);
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for node in &level {
            let start = node.max.map_or(1, |m| m + 1);
            for i in start..=n {
                let Some(c) = basic.bits(i) else { continue };
                if node.bits.is_subset(c) {
                    let mut bits = node.bits.clone();
                    bits.insert(i - 1);
                    let set = ArgSet::from_bits(&bits);
                    if let ControlFlow::Break(b) = visit(&set) {
                        return Some(b);
                    }
                    next.push(Node { bits, max: Some(i) });
                }
            }
        }
        level = next;
    }
    None
}

pub fn enumerate_conflict_free(f: &Framework) -> CfFamily {
    let mut levels = vec![Vec::new(); f.n() + 1];
    for_each_conflict_free::<()>(f, |s| {
        levels[s.len()].push(s.clone());
        ControlFlow::Continue(())
    });
    CfFamily { levels }
}
