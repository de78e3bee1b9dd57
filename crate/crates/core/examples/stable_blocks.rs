//! Dual interchanges bring a candidate set to the top-left corner; the set
//! is stable when every column of its `s` block is non-zero.
//!
//! `cargo run --example stable_blocks`

use afmatrix::{split_blocks, AttackMatrix, Framework};

fn main() -> afmatrix::Result<()> {
    let f = Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)])?;
    let m = AttackMatrix::natural(&f);
    println!("{:?}\n{:?}\n", m.labels(), m.cells());

    let mut current = m;
    for (k, (i, j)) in [(2, (2, 3)), (3, (3, 5))] {
        current = current.dual_interchange(i, j)?;
        let b = split_blocks(&current, k)?;
        println!("after {i} <-> {j}: M{:?}\n{:?}", current.labels(), current.cells());
        println!("S = {}  s block:\n{:?}", b.set, b.s);
        println!("stable: {}\n", b.stable_holds());
    }
    Ok(())
}
