//! Credulous and skeptical questions, and which extensions attack a set.
//!
//! `cargo run --example queries`

use afmatrix::frontend::{format_answer, parse_tgf};
use afmatrix::{query, ArgSet, Question, SemanticsTag};

const INPUT: &str = "a\nb\nc\nd\n#\na b\nb a\nb c\nc d\n";

fn main() -> afmatrix::Result<()> {
    let (f, names) = parse_tgf(INPUT)?;
    let c = ArgSet::new(vec![names.id("c").unwrap()])?;
    let cases = [
        (Question::AllExtensions, SemanticsTag::Preferred),
        (Question::ContainedInSome, SemanticsTag::Preferred),
        (Question::ContainedInAll, SemanticsTag::Preferred),
        (Question::AttackedBySome, SemanticsTag::Stable),
        (Question::AllAttacking, SemanticsTag::Stable),
        (Question::SomeContaining, SemanticsTag::Grounded),
    ];
    for (question, tag) in cases {
        let answer = query(&f, question, tag, &c)?;
        print!("{question:?} [c] under {tag}:\n{}", format_answer(&answer, &names));
    }
    Ok(())
}
