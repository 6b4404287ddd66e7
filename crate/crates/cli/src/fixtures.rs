//! Reference tables shipped with the crate.

use std::collections::{BTreeMap, BTreeSet};

use ambc_core::Tabloid;

pub const SIGN_TRACE_SHORT: &str = include_str!("../fixtures/sign_trace_short.txt");
pub const SIGN_TRACE_WINDOW: &str = include_str!("../fixtures/sign_trace_window.txt");
pub const SIGN_TRACE_ROTATED: &str = include_str!("../fixtures/sign_trace_rotated.txt");
pub const UPSILON_N4: &str = include_str!("../fixtures/upsilon_n4.txt");
pub const UPSILON_N4_RSK_P: &str = include_str!("../fixtures/upsilon_n4_rsk_p.txt");
pub const UPSILON_N4_RSK_Q: &str = include_str!("../fixtures/upsilon_n4_rsk_q.txt");

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// The trace lines of a fixture, comments dropped.
pub fn trace_lines(text: &str) -> Vec<String> {
    data_lines(text).map(String::from).collect()
}

/// Parses `w1 w2 ... | T1 ; T2 ; ...` lines keyed by the word.
pub fn parse_class_table(text: &str) -> BTreeMap<Vec<usize>, BTreeSet<Tabloid>> {
    data_lines(text)
        .map(|line| {
            let (word, rest) = line.split_once('|').expect("fixture line has a key");
            let key = word.split_whitespace().map(|x| x.parse().expect("numeric key")).collect();
            let set = rest.split(';').map(|t| t.trim().parse().expect("fixture tableau")).collect();
            (key, set)
        })
        .collect()
}

pub fn upsilon_n4() -> BTreeMap<Vec<usize>, BTreeSet<Tabloid>> {
    parse_class_table(UPSILON_N4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        let u = upsilon_n4();
        assert_eq!(u.len(), 24);
        assert_eq!(u.values().map(BTreeSet::len).sum::<usize>(), Tabloid::all_rsyt(4).len());
        assert_eq!(parse_class_table(UPSILON_N4_RSK_P).len(), 24);
        assert_eq!(parse_class_table(UPSILON_N4_RSK_Q).len(), 24);
        assert_eq!(trace_lines(SIGN_TRACE_SHORT).len(), 13);
        assert_eq!(trace_lines(SIGN_TRACE_WINDOW).len(), 19);
    }
}
