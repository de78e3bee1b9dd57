//! Trivial Graph Format.
//!
//! ```text
//! <name> [label...]      one argument per line
//! #                      separator, alone on its line
//! <src> <dst> [label...] one attack per line
//! ```
//!
//! Blank lines are skipped. Only the first token of an argument line is the
//! name. Attacks must name declared arguments; repeated attacks collapse.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::framework::Framework;

use super::NameMap;

pub fn parse_tgf(text: &str) -> Result<(Framework, NameMap)> {
    let mut names = NameMap::new();
    let mut attacks = Vec::new();
    let mut in_attacks = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !in_attacks {
            if line == "#" {
                in_attacks = true;
                continue;
            }
            let name = line.split_whitespace().next().unwrap_or_default();
            if name.is_empty() {
                return Err(Error::parse(line_no, "empty argument name"));
            }
            names.intern(name);
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(src), Some(dst)) = (tokens.next(), tokens.next()) else {
            return Err(Error::parse(line_no, format!("expected '<src> <dst>', found '{line}'")));
        };
        let lookup = |name: &str| {
            names
                .id(name)
                .ok_or_else(|| Error::parse(line_no, format!("attack refers to undeclared argument '{name}'")))
        };
        attacks.push((lookup(src)?, lookup(dst)?));
    }
    if !in_attacks {
        return Err(Error::parse(text.lines().count().max(1), "missing '#' separator"));
    }
    let f = Framework::new(names.len(), attacks)?;
    Ok((f, names))
}

/// Writes arguments in identifier order, then attacks in ascending pair order.
pub fn write_tgf(f: &Framework, names: &NameMap) -> String {
    let mut out = String::new();
    for a in f.arguments() {
        writeln!(out, "{}", names.name(a).expect("name for every argument")).unwrap();
    }
    out.push_str("#\n");
    for &(a, b) in f.attacks() {
        writeln!(out, "{} {}", names.name(a).unwrap(), names.name(b).unwrap()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle() {
        let (f, names) = parse_tgf("1\n2\n3\n#\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(f, Framework::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap());
        assert_eq!(names, NameMap::numeric(3));
    }

    #[test]
    fn single_argument_and_self_loop() {
        let (f, _) = parse_tgf("a\n#\n").unwrap();
        assert_eq!(f, Framework::empty(1));
        let (f, _) = parse_tgf("a\n#\na a\n").unwrap();
        assert_eq!(f, Framework::new(1, [(1, 1)]).unwrap());
    }

    #[test]
    fn labels_blank_lines_and_duplicates() {
        let (f, names) = parse_tgf("x first\n\ny\n#\nx y weight\nx y\n").unwrap();
        assert_eq!(f.attacks().len(), 1);
        assert_eq!(names.name(1), Some("x"));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_tgf("a\nb\n"), Err(Error::Parse { .. })));
        let err = parse_tgf("a\n#\na b\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "attack refers to undeclared argument 'b'"));
        assert!(matches!(parse_tgf("a\n#\na\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn writes_back_what_it_reads() {
        let text = "b\na\n#\na b\nb a\nb b\n";
        let (f, names) = parse_tgf(text).unwrap();
        let (g, names2) = parse_tgf(&write_tgf(&f, &names)).unwrap();
        assert_eq!((f, names), (g, names2));
    }
}
