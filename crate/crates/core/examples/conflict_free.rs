//! Basic sets and the level-wise enumeration of conflict-free sets.
//!
//! `cargo run --example conflict_free`

use afmatrix::{basic_sets, enumerate_conflict_free, AttackMatrix, Framework};

fn main() -> afmatrix::Result<()> {
    let f = Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)])?;
    println!("M(F) =\n{:?}", AttackMatrix::natural(&f).cells());

    let c = basic_sets(&f);
    for i in f.arguments() {
        match c.get(i) {
            Some(s) => println!("C({i}) = {s}"),
            None => println!("C({i}) undefined, {i} attacks itself"),
        }
    }

    let family = enumerate_conflict_free(&f);
    for (r, level) in family.levels.iter().enumerate() {
        let shown: Vec<String> = level.iter().map(ToString::to_string).collect();
        println!("S({r}) = {{{}}}", shown.join(", "));
    }
    println!("{} conflict-free sets", family.len());
    Ok(())
}
