//! Attack matrices under arbitrary labellings, dual interchanges, sub-blocks
//! and the norm form used by the extension criteria.
//!
//! A matrix `M(i_1, ..., i_n)` has a 1 in cell `(s, t)` iff argument `i_s`
//! attacks argument `i_t`. Positions and arguments are both 1-based.
//!
//! For a candidate set `S = {i_1 < ... < i_k}` with complement
//! `{j_1 < ... < j_h}` the four sub-blocks are
//!
//! ```text
//!            i_1..i_k   j_1..j_h
//! i_1..i_k [   cf    |    s    ]
//! j_1..j_h [   a     |    c    ]
//! ```
//!
//! Sub-block rows are indexed by the first index set, columns by the second.

use crate::bits::{BitMatrix, BitSet};
use crate::error::{Error, Result};
use crate::framework::{Arg, ArgSet, Framework, Permutation};

/// The Boolean matrix of a framework under a labelling permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AttackMatrix {
    labels: Permutation,
    cells: BitMatrix,
}

impl AttackMatrix {
    pub fn build(f: &Framework, p: &Permutation) -> Result<Self> {
        if p.len() != f.n() {
            return Err(Error::MalformedPermutation(format!(
                "length {} does not match {} arguments",
                p.len(),
                f.n()
            )));
        }
        let idx: Vec<usize> = p.image().iter().map(|a| a - 1).collect();
        Ok(AttackMatrix { labels: p.clone(), cells: f.natural().select(&idx, &idx) })
    }

    /// `M(F)`, the matrix under the natural permutation `(1, ..., n)`.
    pub fn natural(f: &Framework) -> Self {
        AttackMatrix { labels: Permutation::identity(f.n()), cells: f.natural().clone() }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &Permutation {
        &self.labels
    }

    pub fn cells(&self) -> &BitMatrix {
        &self.cells
    }

    /// Cell at 1-based position `(s, t)`.
    pub fn cell(&self, s: usize, t: usize) -> bool {
        self.cells.get(s - 1, t - 1)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.cells.to_rows()
    }

    /// Reads the attack relation back out of the labelled cells.
    pub fn to_framework(&self) -> Framework {
        let n = self.order();
        let mut attacks = Vec::new();
        for s in 0..n {
            for t in self.cells.row(s).ones() {
                attacks.push((self.labels.image()[s], self.labels.image()[t]));
            }
        }
        Framework::new(n, attacks).expect("labels are a permutation of 1..=n")
    }

    /// Swaps rows `k, l` then columns `k, l` (1-based), relabelling
    /// accordingly. The result is the matrix of the same framework under the
    /// permutation with positions `k` and `l` exchanged.
    pub fn dual_interchange(&self, k: usize, l: usize) -> Result<Self> {
        let mut out = self.clone();
        out.interchange_in_place(k, l)?;
        Ok(out)
    }

    fn interchange_in_place(&mut self, k: usize, l: usize) -> Result<()> {
        self.labels.swap(k, l)?;
        self.cells.swap_rows(k - 1, l - 1);
        self.cells.swap_cols(k - 1, l - 1);
        Ok(())
    }

    /// Position of each argument: `pos[a - 1]` is the 0-based row of `a`.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order()];
        for (i, &a) in self.labels.image().iter().enumerate() {
            pos[a - 1] = i;
        }
        pos
    }
}

pub fn build_matrix(f: &Framework, p: &Permutation) -> Result<AttackMatrix> {
    AttackMatrix::build(f, p)
}

pub fn dual_interchange(m: &AttackMatrix, k: usize, l: usize) -> Result<AttackMatrix> {
    m.dual_interchange(k, l)
}

/// The `cf`, `s`, `a` and `c` sub-blocks of a candidate set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubBlocks {
    pub set: ArgSet,
    pub complement: ArgSet,
    pub cf: BitMatrix,
    pub s: BitMatrix,
    pub a: BitMatrix,
    pub c: BitMatrix,
}

impl SubBlocks {
    /// `[[cf, s], [a, c]]`.
    pub fn assemble(&self) -> BitMatrix {
        BitMatrix::assemble(&self.cf, &self.s, &self.a, &self.c)
    }

    /// Conflict-freeness: the `cf` block is zero.
    pub fn cf_is_zero(&self) -> bool {
        self.cf.is_zero()
    }

    /// First `(attacker, target)` inside the set, if any.
    pub fn first_conflict(&self) -> Option<(Arg, Arg)> {
        let members = self.set.members();
        (0..self.cf.n_rows()).find_map(|r| {
            self.cf.row(r).ones().next().map(|t| (members[r], members[t]))
        })
    }

    /// Stability: every column of the `s` block is non-zero.
    pub fn stable_holds(&self) -> bool {
        self.s.nonzero_columns().all()
    }

    /// Outside attacker of the set whose `s` column is zero, i.e. an attacker
    /// that the set does not counter-attack, paired with one member it hits.
    pub fn undefended_attack(&self) -> Option<(Arg, Arg)> {
        let countered = self.s.nonzero_columns();
        (0..self.a.n_rows()).find_map(|t| {
            if countered.get(t) {
                return None;
            }
            self.a
                .row(t)
                .ones()
                .next()
                .map(|r| (self.complement.members()[t], self.set.members()[r]))
        })
    }

    /// Admissibility: for every non-zero row `t` of the `a` block, column `t`
    /// of the `s` block is non-zero.
    pub fn admissible_holds(&self) -> bool {
        self.undefended_attack().is_none()
    }

    /// Completeness of an admissible set: every zero column `t` of the `s`
    /// block has a 1 in column `t` of the `c` block at some row `v` whose
    /// `s` column is itself zero.
    pub fn complete_holds(&self) -> bool {
        let countered = self.s.nonzero_columns();
        let uncountered = countered.complement();
        (0..self.c.n_cols()).filter(|&t| !countered.get(t)).all(|t| {
            let column_nonzero = !self.c.column_is_zero(t);
            column_nonzero && uncountered.ones().any(|v| self.c.get(v, t))
        })
    }
}

/// Reads the sub-blocks of `s` off `m`. Cells are addressed by argument, so
/// `m` may carry any labelling; under the natural one the blocks are read at
/// the index intersections directly.
pub fn extract_subblocks(m: &AttackMatrix, s: &ArgSet) -> Result<SubBlocks> {
    let n = m.order();
    if let Some(max) = s.max() {
        if max > n {
            return Err(Error::IndexOutOfRange { index: max, n });
        }
    }
    let complement = s.complement(n);
    let pos = m.positions();
    let inside: Vec<usize> = s.iter().map(|a| pos[a - 1]).collect();
    let outside: Vec<usize> = complement.iter().map(|a| pos[a - 1]).collect();
    let cells = m.cells();
    Ok(SubBlocks {
        cf: cells.select(&inside, &inside),
        s: cells.select(&inside, &outside),
        a: cells.select(&outside, &inside),
        c: cells.select(&outside, &outside),
        set: s.clone(),
        complement,
    })
}

/// Splits a labelled matrix after position `k` into `[[cf, s], [a, c]]`,
/// keeping the matrix's own label order inside each block.
pub fn split_blocks(m: &AttackMatrix, k: usize) -> Result<SubBlocks> {
    let n = m.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let cells = m.cells();
    let labels = m.labels().image();
    Ok(SubBlocks {
        set: labels[..k].iter().copied().collect(),
        complement: labels[k..].iter().copied().collect(),
        cf: cells.window(0..k, 0..k),
        s: cells.window(0..k, k..n),
        a: cells.window(k..n, 0..k),
        c: cells.window(k..n, k..n),
    })
}

/// `M(i_1, ..., i_k, j_1, ..., j_h)` reached from `M(F)` by the step-by-step
/// interchanges that put each target label in place in turn.
pub fn to_partition_form(f: &Framework, s: &ArgSet) -> Result<AttackMatrix> {
    f.check_set(s)?;
    let target: Vec<Arg> = s.iter().chain(s.complement(f.n()).iter()).collect();
    let mut m = AttackMatrix::natural(f);
    for (idx, &want) in target.iter().enumerate() {
        let pos = idx + 1;
        if m.labels.at(pos) != want {
            let from = m.labels.position_of(want).expect("label present");
            m.interchange_in_place(pos, from)?;
        }
    }
    Ok(m)
}

/// A matrix in norm form for a conflict-free set of size `k`:
///
/// ```text
/// [ O_kk  O_kq  S_kl ]
/// [ A_qk  C_qq  E_ql ]
/// [ F_lk  G_lq  H_ll ]
/// ```
///
/// where the `q` middle positions hold the outside arguments not attacked by
/// the set and every column of `S_kl` is non-zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormForm {
    pub matrix: AttackMatrix,
    pub k: usize,
    pub q: usize,
    pub l: usize,
    /// The dual interchanges applied to `M(F)`, in order.
    pub interchanges: Vec<(usize, usize)>,
}

impl NormForm {
    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> BitMatrix {
        self.matrix.cells().window(rows, cols)
    }

    fn spans(&self) -> [std::ops::Range<usize>; 3] {
        let (k, q, l) = (self.k, self.q, self.l);
        [0..k, k..k + q, k + q..k + q + l]
    }

    pub fn o_kk(&self) -> BitMatrix {
        let [s, _, _] = self.spans();
        self.block(s.clone(), s)
    }
    pub fn o_kq(&self) -> BitMatrix {
        let [s, z, _] = self.spans();
        self.block(s, z)
    }
    pub fn s_kl(&self) -> BitMatrix {
        let [s, _, r] = self.spans();
        self.block(s, r)
    }
    pub fn a_qk(&self) -> BitMatrix {
        let [s, z, _] = self.spans();
        self.block(z, s)
    }
    pub fn c_qq(&self) -> BitMatrix {
        let [_, z, _] = self.spans();
        self.block(z.clone(), z)
    }
    pub fn e_ql(&self) -> BitMatrix {
        let [_, z, r] = self.spans();
        self.block(z, r)
    }
    pub fn f_lk(&self) -> BitMatrix {
        let [s, _, r] = self.spans();
        self.block(r, s)
    }
    pub fn g_lq(&self) -> BitMatrix {
        let [_, z, r] = self.spans();
        self.block(r, z)
    }
    pub fn h_ll(&self) -> BitMatrix {
        let [_, _, r] = self.spans();
        self.block(r.clone(), r)
    }

    /// The candidate set, read off the first `k` labels.
    pub fn set(&self) -> ArgSet {
        self.matrix.labels().image()[..self.k].iter().copied().collect()
    }

    /// Block shape: top-left `k x (k + q)` region zero, every column of
    /// `S_kl` non-zero, sizes summing to the order.
    pub fn structure_holds(&self) -> bool {
        self.k + self.q + self.l == self.matrix.order()
            && self.o_kk().is_zero()
            && self.o_kq().is_zero()
            && self.s_kl().nonzero_columns().all()
    }

    /// Stability: no outside argument escapes attack, so `q = 0`.
    pub fn stable_holds(&self) -> bool {
        self.q == 0 && self.s_kl().nonzero_columns().all()
    }

    /// Admissibility: `A_qk = 0`.
    pub fn admissible_holds(&self) -> bool {
        self.a_qk().is_zero()
    }

    /// Completeness: `A_qk = 0` and every column of `C_qq` is non-zero.
    pub fn complete_holds(&self) -> bool {
        self.admissible_holds() && self.c_qq().nonzero_columns().all()
    }
}

/// Brings the labels satisfying `wanted` into positions `start..=end` by
/// dual interchanges. Each out-of-place position is swapped with the
/// nearest wanted label lying beyond `end`.
fn gather(
    m: &mut AttackMatrix,
    start: usize,
    end: usize,
    wanted: impl Fn(Arg) -> bool,
    log: &mut Vec<(usize, usize)>,
) -> Result<()> {
    let n = m.order();
    let mut scan = end + 1;
    for pos in start..=end {
        if wanted(m.labels.at(pos)) {
            continue;
        }
        while scan <= n && !wanted(m.labels.at(scan)) {
            scan += 1;
        }
        if scan > n {
            return Err(Error::Invariant(format!("no label left to fill position {pos}")));
        }
        m.interchange_in_place(pos, scan)?;
        log.push((pos, scan));
        scan += 1;
    }
    Ok(())
}

/// Turns `M(F)` into the norm form of a conflict-free set `s`.
///
/// The members of `s` are gathered into the first `k` positions, then the
/// outside arguments that `s` does not attack into the next `q`, each phase
/// filling positions left to right with the nearest out-of-place label. The
/// resulting order inside each group follows from those interchanges and is
/// not sorted in general.
pub fn to_norm_form(f: &Framework, s: &ArgSet) -> Result<NormForm> {
    f.check_set(s)?;
    let n = f.n();
    let members = s.to_bits(n);
    for a in s.iter() {
        let mut hits = f.targets_bits(a).clone();
        hits.intersect_with(&members);
        if let Some(t) = hits.ones().next() {
            return Err(Error::NotConflictFree { attacker: a, target: t + 1 });
        }
    }

    let mut attacked = BitSet::new(n);
    for a in s.iter() {
        attacked.union_with(f.targets_bits(a));
    }
    let mut unattacked = members.complement();
    unattacked.difference_with(&attacked);

    let k = s.len();
    let q = unattacked.count_ones();
    let mut m = AttackMatrix::natural(f);
    let mut log = Vec::new();
    if k > 0 {
        gather(&mut m, 1, k, |a| members.get(a - 1), &mut log)?;
    }
    if q > 0 {
        gather(&mut m, k + 1, k + q, |a| unattacked.get(a - 1), &mut log)?;
    }
    Ok(NormForm { matrix: m, k, q, l: n - k - q, interchanges: log })
}
