//! The two tables of elements whose squares multiply to `ε` while the
//! elements themselves do not.

use super::group::{kneser_graph, CommutationGraph, GroupWord, Letter};
use crate::error::{Error, Result};

const TABLE_1: [&str; 5] = [
    "a25 a14 a24^-1 a15^-1",
    "a15 a24 a14^-1 a16 a36^-1 a15^-1 a35 a14 a24^-1 a15^-1",
    "a15 a24 a35^-1 a36 a14^-1 a26^-1",
    "a26 a14 a36^-1 a24^-1 a34 a14^-1",
    "a14 a34^-1 a36 a24 a16^-1 a15 a25^-1 a14^-1",
];
const TABLE_1_PRODUCT: &str = "a25 a16 a15^-1 a14 a16^-1 a15 a25^-1 a14^-1";

const TABLE_2: [&str; 7] = [
    "b23 b13^-1 b24^-1 b14",
    "b14^-1 b13 b24 b35 b25^-1",
    "b25 b24^-1 b35^-1 b34",
    "b34^-1 b35 b24 b34^-1 b13^-1 b35^-1 b15 b23^-1 b35^-1 b34",
    "b34^-1 b35 b15^-1 b23 b12 b34",
    "b34^-1 b12^-1 b23^-1 b15 b45^-1",
    "b23 b45 a15^-1 b34 b13 b23^-1",
];
const TABLE_2_PRODUCT: &str = "b23 b35 b34^-1 b13^-1 b35^-1 b34 b13 b23^-1";

/// A table as data: the graph, the elements, the displayed product and
/// the tokens whose letter prefix had to be corrected.
#[derive(Debug, Clone)]
pub struct TableData {
    pub which: u8,
    pub graph: CommutationGraph,
    pub elements: Vec<GroupWord>,
    pub displayed_product: GroupWord,
    /// Expected number of distinct generators, when the table states one.
    pub expected_generators: Option<usize>,
    pub repaired: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub which: u8,
    pub squares_identity: bool,
    pub product_identity: bool,
    pub product_reduced_len: usize,
    pub product_matches_displayed: bool,
    pub generators_used: usize,
    pub expected_generators: Option<usize>,
    pub repaired: Vec<String>,
    pub pass: bool,
}

/// Parses `a25 a14^-1 ...`; a token whose prefix differs from `prefix` is
/// read with the intended prefix and recorded in `repaired`.
fn parse_table_word(
    h: &CommutationGraph,
    prefix: char,
    text: &str,
    repaired: &mut Vec<String>,
) -> Result<GroupWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (body, inv) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let mut chars = body.chars();
        let p = chars.next().ok_or_else(|| Error::UnknownGenerator(tok.into()))?;
        let digits: Vec<usize> = chars
            .map(|ch| ch.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::UnknownGenerator(tok.into()))?;
        let [i, j] = digits[..] else {
            return Err(Error::UnknownGenerator(tok.into()));
        };
        if p != prefix {
            repaired.push(format!("{tok} -> {prefix}{i}{j}{}", if inv { "^-1" } else { "" }));
        }
        letters.push(Letter { gen: h.pair(i, j)?, inv });
    }
    Ok(GroupWord::from_letters(letters))
}

pub fn table_data(which: u8) -> Result<TableData> {
    let (m, prefix, rows, product, expected): (usize, char, &[&str], &str, Option<usize>) = match which {
        1 => (6, 'a', &TABLE_1, TABLE_1_PRODUCT, Some(9)),
        2 => (5, 'b', &TABLE_2, TABLE_2_PRODUCT, None),
        _ => return Err(Error::OutOfRange(format!("table {which}; there are tables 1 and 2"))),
    };
    let graph = kneser_graph(m, 2)?;
    let mut repaired = Vec::new();
    let elements = rows
        .iter()
        .map(|r| parse_table_word(&graph, prefix, r, &mut repaired))
        .collect::<Result<Vec<_>>>()?;
    let displayed_product = parse_table_word(&graph, prefix, product, &mut repaired)?;
    Ok(TableData { which, graph, elements, displayed_product, expected_generators: expected, repaired })
}

/// Checks `∏ z_i² = ε`, `∏ z_i ≠ ε`, `∏ z_i` equal to the displayed word,
/// and the generator count where one is stated.
pub fn verify_elements(t: &TableData) -> Result<TableReport> {
    let h = &t.graph;
    let squares = GroupWord::product(&t.elements.iter().map(|z| z.pow(2)).collect::<Vec<_>>());
    let product = GroupWord::product(&t.elements);
    let squares_identity = h.is_identity(&squares)?;
    let reduced = h.reduce(&product)?;
    let product_identity = reduced.is_empty();
    let product_matches_displayed = h.equal(&product, &t.displayed_product)?;
    let generators_used = GroupWord::product(&t.elements).support().len();
    let count_ok = t.expected_generators.is_none_or(|n| n == generators_used);
    Ok(TableReport {
        which: t.which,
        squares_identity,
        product_identity,
        product_reduced_len: reduced.len(),
        product_matches_displayed,
        generators_used,
        expected_generators: t.expected_generators,
        repaired: t.repaired.clone(),
        pass: squares_identity && !product_identity && product_matches_displayed && count_ok,
    })
}

pub fn verify_table(which: u8) -> Result<TableReport> {
    verify_elements(&table_data(which)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one() {
        let r = verify_table(1).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.product_reduced_len, 8);
        assert_eq!(r.generators_used, 9);
        assert!(r.repaired.is_empty());
    }

    #[test]
    fn table_two_with_repair() {
        let r = verify_table(2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.repaired, vec!["a15^-1 -> b15^-1".to_string()]);
    }

    #[test]
    fn mutated_table_fails() {
        let mut t = table_data(1).unwrap();
        t.elements[2] = GroupWord::identity();
        assert!(!verify_elements(&t).unwrap().pass);
    }

    #[test]
    fn unknown_table() {
        assert!(verify_table(3).is_err());
    }
}
