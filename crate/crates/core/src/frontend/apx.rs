//! ASPARTIX-style facts: `arg(a).` and `att(a,b).`
//!
//! Whitespace between tokens is ignored and `%` starts a comment running to
//! the end of the line. Every name in an `att` fact must be declared by an
//! `arg` fact somewhere in the file.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::framework::Framework;

use super::NameMap;

enum Fact<'a> {
    Arg(&'a str),
    Att(&'a str, &'a str),
}

fn parse_fact(body: &str, line: usize) -> Result<Fact<'_>> {
    let malformed = || Error::parse(line, format!("malformed fact '{body}.'"));
    let (head, rest) = body.split_once('(').ok_or_else(malformed)?;
    let inner = rest.trim_end().strip_suffix(')').ok_or_else(malformed)?;
    let check = |name: &'_ str| -> Result<()> {
        if name.is_empty() {
            Err(Error::parse(line, "empty argument name"))
        } else if name.contains(|c: char| c.is_whitespace() || "(),".contains(c)) {
            Err(malformed())
        } else {
            Ok(())
        }
    };
    match head.trim() {
        "arg" => {
            let name = inner.trim();
            check(name)?;
            Ok(Fact::Arg(name))
        }
        "att" => {
            let (a, b) = inner.split_once(',').ok_or_else(malformed)?;
            let (a, b) = (a.trim(), b.trim());
            check(a)?;
            check(b)?;
            Ok(Fact::Att(a, b))
        }
        _ => Err(malformed()),
    }
}

pub fn parse_apx(text: &str) -> Result<(Framework, NameMap)> {
    let mut facts = Vec::new();
    let mut pending = String::new();
    let mut pending_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('%').next().unwrap_or_default();
        for (i, piece) in content.split('.').enumerate() {
            if i > 0 {
                let body = std::mem::take(&mut pending);
                if body.trim().is_empty() {
                    return Err(Error::parse(line_no, "empty fact"));
                }
                facts.push((body, pending_line));
            }
            if pending.trim().is_empty() && !piece.trim().is_empty() {
                pending_line = line_no;
            }
            pending.push_str(piece);
            pending.push(' ');
        }
    }
    if !pending.trim().is_empty() {
        return Err(Error::parse(pending_line, format!("fact '{}' is missing its final '.'", pending.trim())));
    }

    let parsed = facts
        .iter()
        .map(|(body, line)| Ok((parse_fact(body.trim(), *line)?, *line)))
        .collect::<Result<Vec<_>>>()?;
    let mut names = NameMap::new();
    for (fact, _) in &parsed {
        if let Fact::Arg(name) = fact {
            names.intern(name);
        }
    }
    let mut attacks = Vec::new();
    for (fact, line) in &parsed {
        if let Fact::Att(a, b) = fact {
            let lookup = |name: &str| {
                names
                    .id(name)
                    .ok_or_else(|| Error::parse(*line, format!("att refers to undeclared argument '{name}'")))
            };
            attacks.push((lookup(a)?, lookup(b)?));
        }
    }
    let f = Framework::new(names.len(), attacks)?;
    Ok((f, names))
}

pub fn write_apx(f: &Framework, names: &NameMap) -> String {
    let mut out = String::new();
    for a in f.arguments() {
        writeln!(out, "arg({}).", names.name(a).expect("name for every argument")).unwrap();
    }
    for &(a, b) in f.attacks() {
        writeln!(out, "att({},{}).", names.name(a).unwrap(), names.name(b).unwrap()).unwrap();
    }
    out
}
