use indexmap::IndexSet;

use crate::framework::Arg;

/// Bijection between external argument names and identifiers `1..=n`,
/// assigned in order of first appearance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NameMap {
    names: IndexSet<String>,
}

impl NameMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Names `"1"` through `"n"`.
    pub fn numeric(n: usize) -> Self {
        NameMap { names: (1..=n).map(|i| i.to_string()).collect() }
    }

    /// Returns the identifier for `name`, declaring it if unseen.
    pub fn intern(&mut self, name: &str) -> Arg {
        match self.names.get_index_of(name) {
            Some(i) => i + 1,
            None => {
                self.names.insert(name.to_owned());
                self.names.len()
            }
        }
    }

    pub fn id(&self, name: &str) -> Option<Arg> {
        self.names.get_index_of(name).map(|i| i + 1)
    }

    pub fn name(&self, id: Arg) -> Option<&str> {
        self.names.get_index(id.checked_sub(1)?).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_appearance_order() {
        let mut m = NameMap::new();
        assert_eq!(m.intern("b"), 1);
        assert_eq!(m.intern("a"), 2);
        assert_eq!(m.intern("b"), 1);
        assert_eq!(m.name(2), Some("a"));
        assert_eq!(m.name(0), None);
        assert_eq!(m.name(3), None);
        assert_eq!(m.id("c"), None);
    }
}
