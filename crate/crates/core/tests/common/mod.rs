//! Shared fixtures and a brute-force reference written directly from the
//! textbook definitions, independent of the library's own oracle.

#![allow(dead_code)]

use std::collections::BTreeSet;

use afmatrix::frontend::{generate, GeneratorConfig};
use afmatrix::{ArgSet, Framework, SemanticsTag};

pub fn set(v: &[usize]) -> ArgSet {
    ArgSet::new(v.to_vec()).unwrap()
}

pub fn sets(v: &[&[usize]]) -> BTreeSet<ArgSet> {
    v.iter().map(|s| set(s)).collect()
}

pub fn unique_stable() -> Framework {
    Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)]).unwrap()
}

pub fn two_stable() -> Framework {
    Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 1), (4, 3), (5, 4)]).unwrap()
}

pub fn two_cycles() -> Framework {
    Framework::new(5, [(1, 2), (1, 3), (3, 1), (4, 5), (5, 1), (5, 4)]).unwrap()
}

pub const PROBABILITIES: [f64; 3] = [0.1, 0.3, 0.5];

/// The seeded corpus: `per_cell` frameworks for every `n` in `1..=max_n` and
/// every probability. Seeds are fixed so failures replay.
pub fn corpus(max_n: usize, per_cell: u64) -> Vec<(GeneratorConfig, Framework)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (pi, &p) in PROBABILITIES.iter().enumerate() {
            for i in 0..per_cell {
                let seed = (n as u64) * 1_000_000 + (pi as u64) * 10_000 + i;
                let cfg = GeneratorConfig::new(n, p, seed).unwrap();
                out.push((cfg, generate(&cfg).unwrap()));
            }
        }
    }
    out
}

/// Brute-force semantics over bitmasks.
pub struct Reference {
    n: usize,
    out: Vec<u32>,
}

impl Reference {
    pub fn new(f: &Framework) -> Self {
        assert!(f.n() <= 20, "reference is exponential");
        let mut out = vec![0u32; f.n()];
        for &(a, b) in f.attacks() {
            out[a - 1] |= 1 << (b - 1);
        }
        Reference { n: f.n(), out }
    }

    fn attacked_by(&self, s: u32) -> u32 {
        (0..self.n).filter(|i| s >> i & 1 == 1).fold(0, |acc, i| acc | self.out[i])
    }

    fn conflict_free(&self, s: u32) -> bool {
        self.attacked_by(s) & s == 0
    }

    fn defends(&self, s: u32, a: usize) -> bool {
        let hit = self.attacked_by(s);
        (0..self.n).all(|b| self.out[b] >> a & 1 == 0 || hit >> b & 1 == 1)
    }

    fn defended(&self, s: u32) -> u32 {
        (0..self.n).filter(|&a| self.defends(s, a)).fold(0, |acc, a| acc | 1 << a)
    }

    fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s) && self.defended(s) & s == s
    }

    fn complete(&self, s: u32) -> bool {
        self.conflict_free(s) && self.defended(s) == s
    }

    fn stable(&self, s: u32) -> bool {
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        self.conflict_free(s) && (s | self.attacked_by(s)) == all
    }

    fn range(&self, s: u32) -> u32 {
        s | self.attacked_by(s)
    }

    fn filter(&self, keep: impl Fn(u32) -> bool) -> Vec<u32> {
        (0..1u32 << self.n).filter(|&s| keep(s)).collect()
    }

    fn maximal(v: &[u32], key: impl Fn(u32) -> u32) -> Vec<u32> {
        v.iter()
            .copied()
            .filter(|&s| !v.iter().any(|&t| key(t) != key(s) && key(s) & key(t) == key(s)))
            .collect()
    }

    fn greatest_admissible_within(&self, bound: u32) -> Vec<u32> {
        let inside = self.filter(|s| s & bound == s && self.admissible(s));
        let top = Self::maximal(&inside, |s| s);
        assert_eq!(top.len(), 1, "admissible subsets of a set are closed under union");
        top
    }

    pub fn family_masks(&self, tag: SemanticsTag) -> Vec<u32> {
        use SemanticsTag::*;
        match tag {
            ConflictFree => self.filter(|s| self.conflict_free(s)),
            Stable => self.filter(|s| self.stable(s)),
            Admissible => self.filter(|s| self.admissible(s)),
            Complete => self.filter(|s| self.complete(s)),
            Preferred => Self::maximal(&self.filter(|s| self.admissible(s)), |s| s),
            Grounded => {
                let co = self.filter(|s| self.complete(s));
                co.iter().copied().filter(|&s| co.iter().all(|&t| s & t == s)).collect()
            }
            SemiStable => {
                let ad = self.filter(|s| self.admissible(s));
                Self::maximal(&ad, |s| self.range(s))
            }
            Ideal => {
                let pr = self.family_masks(Preferred);
                self.greatest_admissible_within(pr.iter().fold(u32::MAX, |a, &b| a & b))
            }
            Eager => {
                let sst = self.family_masks(SemiStable);
                self.greatest_admissible_within(sst.iter().fold(u32::MAX, |a, &b| a & b))
            }
        }
    }

    pub fn family(&self, tag: SemanticsTag) -> BTreeSet<ArgSet> {
        self.family_masks(tag)
            .into_iter()
            .map(|m| (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }
}
