//! Norm forms decide admissibility and completeness from block structure.
//!
//! `cargo run --example norm_form`

use afmatrix::{is_admissible, is_complete, to_norm_form, ArgSet, Framework};

fn main() -> afmatrix::Result<()> {
    let f = Framework::new(5, [(1, 2), (1, 3), (3, 1), (4, 5), (5, 1), (5, 4)])?;

    for members in [vec![3, 4], vec![2, 3]] {
        let s = ArgSet::new(members)?;
        let nf = to_norm_form(&f, &s)?;
        println!("S = {s}");
        println!("  interchanges {:?} give M{:?}", nf.interchanges, nf.matrix.labels());
        println!("{:?}", nf.matrix.cells());
        println!("  (k, q, l) = ({}, {}, {})", nf.k, nf.q, nf.l);
        println!("  A_qk =\n{:?}", nf.a_qk());
        println!("  C_qq =\n{:?}", nf.c_qq());
        println!("  admissible {}  complete {}\n", is_admissible(&f, &s)?, is_complete(&f, &s)?);
    }

    // {1, 3} is not conflict-free, so it has no norm form.
    if let Err(e) = to_norm_form(&f, &ArgSet::new(vec![1, 3])?) {
        println!("[1,3]: {e}");
    }
    Ok(())
}
