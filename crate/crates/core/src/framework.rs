//! Frameworks, argument sets and labelling permutations.
//!
//! Arguments are the integers `1..=n`. Matrix positions are also 1-based so
//! that `M(i_1, ..., i_n)` reads the same in code as in matrix notation.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{BitMatrix, BitSet};
use crate::error::{Error, Result};

/// Argument identifier in `1..=n`.
pub type Arg = usize;

/// A finite argumentation framework `(A, R)` with `A = {1, ..., n}`.
///
/// The attack relation is kept both as an ordered pair set and as the packed
/// natural matrix `M(1, ..., n)` with its transpose (rows of the transpose are
/// the attacker sets).
#[derive(Clone)]
pub struct Framework {
    n: usize,
    attacks: BTreeSet<(Arg, Arg)>,
    out: BitMatrix,
    inc: BitMatrix,
}

impl Framework {
    pub fn new<I>(n: usize, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Arg, Arg)>,
    {
        let mut set = BTreeSet::new();
        let mut out = BitMatrix::zeros(n, n);
        for (a, b) in attacks {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::AttackOutOfRange { attacker: a, target: b, n });
            }
            set.insert((a, b));
            out.set(a - 1, b - 1, true);
        }
        let inc = out.transpose();
        Ok(Framework { n, attacks: set, out, inc })
    }

    pub fn empty(n: usize) -> Self {
        Framework::new(n, []).expect("no attacks")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn attacks(&self) -> &BTreeSet<(Arg, Arg)> {
        &self.attacks
    }

    #[inline]
    pub fn attacks_pair(&self, attacker: Arg, target: Arg) -> bool {
        self.out.get(attacker - 1, target - 1)
    }

    pub fn arguments(&self) -> impl Iterator<Item = Arg> {
        1..=self.n
    }

    /// The natural attack matrix `M(F)` as a packed 0-based grid.
    pub(crate) fn natural(&self) -> &BitMatrix {
        &self.out
    }

    /// Targets of `a` as a 0-based bit row.
    pub(crate) fn targets_bits(&self, a: Arg) -> &BitSet {
        self.out.row(a - 1)
    }

    /// Attackers of `a` as a 0-based bit row.
    pub(crate) fn attackers_bits(&self, a: Arg) -> &BitSet {
        self.inc.row(a - 1)
    }

    pub fn is_self_attacking(&self, a: Arg) -> bool {
        self.attacks_pair(a, a)
    }

    pub fn check_arg(&self, a: Arg) -> Result<()> {
        if a == 0 || a > self.n {
            Err(Error::IndexOutOfRange { index: a, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: &ArgSet) -> Result<()> {
        match s.max() {
            Some(m) if m > self.n => Err(Error::IndexOutOfRange { index: m, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Relabels every argument `a` as `image[a - 1]`.
    pub fn relabel(&self, p: &Permutation) -> Result<Framework> {
        if p.len() != self.n {
            return Err(Error::MalformedPermutation(format!(
                "length {} does not match {} arguments",
                p.len(),
                self.n
            )));
        }
        Framework::new(self.n, self.attacks.iter().map(|&(a, b)| (p.apply(a), p.apply(b))))
    }
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.attacks == other.attacks
    }
}

impl Eq for Framework {}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Framework").field("n", &self.n).field("attacks", &self.attacks).finish()
    }
}

/// A set of arguments stored as a strictly increasing sequence.
///
/// Ordering is by cardinality first, then lexicographic on the members; a
/// `BTreeSet<ArgSet>` therefore iterates in the canonical output order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ArgSet(Vec<Arg>);

impl ArgSet {
    pub fn empty() -> Self {
        ArgSet(Vec::new())
    }

    /// Validates a strictly increasing member list of positive identifiers.
    pub fn new(members: Vec<Arg>) -> Result<Self> {
        if members.first() == Some(&0) {
            return Err(Error::MalformedSet("argument 0 is not an identifier".into()));
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedSet(format!("{members:?} is not strictly increasing")));
        }
        Ok(ArgSet(members))
    }

    pub fn from_bits(bits: &BitSet) -> Self {
        ArgSet(bits.ones().map(|i| i + 1).collect())
    }

    /// Packs the set into `n` bits; bit `a - 1` stands for argument `a`.
    pub fn to_bits(&self, n: usize) -> BitSet {
        let mut bits = BitSet::new(n);
        for &a in &self.0 {
            bits.insert(a - 1);
        }
        bits
    }

    pub fn members(&self) -> &[Arg] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Arg> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<Arg> {
        self.0.last().copied()
    }

    pub fn contains(&self, a: Arg) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.0.iter().all(|&a| other.contains(a))
    }

    /// The members of `1..=n` not in this set, ascending.
    pub fn complement(&self, n: usize) -> ArgSet {
        ArgSet((1..=n).filter(|&a| !self.contains(a)).collect())
    }

    pub fn with(&self, a: Arg) -> ArgSet {
        let mut members = self.0.clone();
        if let Err(pos) = members.binary_search(&a) {
            members.insert(pos, a);
        }
        ArgSet(members)
    }
}

impl FromIterator<Arg> for ArgSet {
    /// Collects arbitrary identifiers, sorting and dropping duplicates.
    fn from_iter<T: IntoIterator<Item = Arg>>(iter: T) -> Self {
        let set: BTreeSet<Arg> = iter.into_iter().collect();
        ArgSet(set.into_iter().collect())
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// A labelling `(i_1, ..., i_n)` of the matrix positions `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<Arg>);

impl Permutation {
    pub fn new(image: Vec<Arg>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &a in &image {
            if a == 0 || a > n {
                return Err(Error::MalformedPermutation(format!("entry {a} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::MalformedPermutation(format!("entry {a} repeated")));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self) -> &[Arg] {
        &self.0
    }

    /// Label at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Arg {
        self.0[pos - 1]
    }

    /// Image of argument `a` when the permutation is read as a map `a -> i_a`.
    pub fn apply(&self, a: Arg) -> Arg {
        self.0[a - 1]
    }

    pub fn position_of(&self, a: Arg) -> Option<usize> {
        self.0.iter().position(|&x| x == a).map(|p| p + 1)
    }

    /// Exchanges the labels at 1-based positions `k` and `l`.
    pub fn swap(&mut self, k: usize, l: usize) -> Result<()> {
        let n = self.0.len();
        for idx in [k, l] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
        self.0.swap(k - 1, l - 1);
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn framework_rejects_out_of_range_attacks() {
        assert!(matches!(Framework::new(2, [(1, 3)]), Err(Error::AttackOutOfRange { .. })));
        assert!(matches!(Framework::new(0, [(1, 1)]), Err(Error::AttackOutOfRange { .. })));
        assert!(Framework::new(0, []).is_ok());
    }

    #[test]
    fn duplicate_attacks_collapse() {
        let f = Framework::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(f.attacks().len(), 1);
        assert!(f.attacks_pair(1, 2));
        assert!(!f.attacks_pair(2, 1));
        assert_eq!(ArgSet::from_bits(f.attackers_bits(2)), ArgSet::new(vec![1]).unwrap());
    }

    #[test]
    fn argset_ordering_is_cardinality_then_lexicographic() {
        let mut sets = [
            ArgSet::new(vec![2, 4]).unwrap(),
            ArgSet::new(vec![5]).unwrap(),
            ArgSet::new(vec![1, 3, 5]).unwrap(),
            ArgSet::empty(),
            ArgSet::new(vec![1, 5]).unwrap(),
        ];
        sets.sort();
        let shown: Vec<String> = sets.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["[]", "[5]", "[1,5]", "[2,4]", "[1,3,5]"]);
    }

    #[test]
    fn argset_validation() {
        assert!(ArgSet::new(vec![2, 1]).is_err());
        assert!(ArgSet::new(vec![1, 1]).is_err());
        assert!(ArgSet::new(vec![0]).is_err());
        assert_eq!(ArgSet::from_iter([3, 1, 3]), ArgSet::new(vec![1, 3]).unwrap());
        assert_eq!(ArgSet::new(vec![2, 4]).unwrap().complement(5).members(), &[1, 3, 5]);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![1, 4, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let mut p = Permutation::identity(3);
        p.swap(1, 3).unwrap();
        assert_eq!(p.image(), &[3, 2, 1]);
        assert!(p.swap(0, 1).is_err());
        assert!(p.swap(1, 4).is_err());
    }
}
