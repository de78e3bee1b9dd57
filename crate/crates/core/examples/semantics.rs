//! Every supported semantics on one framework, with the range used by
//! semi-stable and eager extensions.
//!
//! `cargo run --example semantics`

use afmatrix::semantics::range;
use afmatrix::{compute, Framework, SemanticsTag};

fn main() -> afmatrix::Result<()> {
    let f = Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 1), (4, 3), (5, 4)])?;
    for tag in SemanticsTag::ALL {
        let family = compute(&f, tag)?;
        let shown: Vec<String> = family.iter().map(ToString::to_string).collect();
        println!("{:>3}: {}", tag.code(), shown.join(" "));
    }
    for s in compute(&f, SemanticsTag::Admissible)?.iter() {
        println!("range of {s} = {}", range(&f, s).range);
    }
    Ok(())
}
