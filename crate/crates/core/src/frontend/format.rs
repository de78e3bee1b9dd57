use crate::framework::ArgSet;
use crate::semantics::Answer;

use super::NameMap;

/// `[a,b,c]` with members in identifier order, rendered through `names`.
pub fn format_set(s: &ArgSet, names: &NameMap) -> String {
    let rendered: Vec<&str> = s.iter().map(|a| names.name(a).expect("name for every argument")).collect();
    format!("[{}]", rendered.join(","))
}

/// Line-oriented rendering: one set per line for lists, a set or `NO` for a
/// single extension, `YES`/`NO` for decisions.
pub fn format_answer(answer: &Answer, names: &NameMap) -> String {
    match answer {
        Answer::Bool(true) => "YES\n".to_owned(),
        Answer::Bool(false) => "NO\n".to_owned(),
        Answer::Extension(Some(s)) => format!("{}\n", format_set(s, names)),
        Answer::Extension(None) => "NO\n".to_owned(),
        Answer::Extensions(sets) => sets.iter().map(|s| format_set(s, names) + "\n").collect(),
    }
}
