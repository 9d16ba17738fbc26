use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::localcolor::subsets;

/// Generators with the pairs that commute. Two distinct generators commute
/// exactly when they are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    commute: Vec<Vec<bool>>,
    /// For Kneser graphs: the subset behind each generator.
    subsets: Vec<Vec<usize>>,
}

impl CommutationGraph {
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Input(format!("duplicate generator `{name}`")));
            }
        }
        let mut commute = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Input(format!("bad commutation edge ({a}, {b})")));
            }
            commute[a][b] = true;
            commute[b][a] = true;
        }
        Ok(CommutationGraph { names, index, commute, subsets: Vec::new() })
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn generator(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.commute[a][b]
    }

    pub fn edge_count(&self) -> usize {
        self.commute.iter().map(|row| row.iter().filter(|&&x| x).count()).sum::<usize>() / 2
    }

    /// Generator of the 2-subset `{i, j}` in a Kneser graph.
    pub fn pair(&self, i: usize, j: usize) -> Result<usize> {
        let key = vec![i.min(j), i.max(j)];
        self.subsets
            .iter()
            .position(|s| *s == key)
            .ok_or_else(|| Error::UnknownGenerator(format!("{{{},{}}}", key[0], key[1])))
    }

    pub fn subset(&self, g: usize) -> Option<&[usize]> {
        self.subsets.get(g).map(Vec::as_slice)
    }

    fn check(&self, w: &GroupWord) -> Result<()> {
        match w.letters.iter().find(|l| l.gen >= self.names.len()) {
            Some(l) => Err(Error::UnknownGenerator(format!("#{}", l.gen))),
            None => Ok(()),
        }
    }

    /// Deletes pairs `x … x⁻¹` whose separating letters all commute with `x`,
    /// leftmost first, until none is left.
    pub fn reduce(&self, w: &GroupWord) -> Result<GroupWord> {
        self.check(w)?;
        let mut letters = w.letters.clone();
        'pass: loop {
            for p in 0..letters.len() {
                let x = letters[p];
                for q in p + 1..letters.len() {
                    let y = letters[q];
                    if y.gen == x.gen {
                        if y.inv != x.inv {
                            letters.remove(q);
                            letters.remove(p);
                            continue 'pass;
                        }
                        break;
                    }
                    if !self.commute(x.gen, y.gen) {
                        break;
                    }
                }
            }
            break;
        }
        Ok(GroupWord { letters })
    }

    pub fn is_identity(&self, w: &GroupWord) -> Result<bool> {
        Ok(self.reduce(w)?.is_empty())
    }

    pub fn equal(&self, u: &GroupWord, v: &GroupWord) -> Result<bool> {
        self.is_identity(&u.concat(&v.inverse()))
    }

    /// Signed letter count per generator.
    pub fn abelianize(&self, w: &GroupWord) -> Result<Vec<i64>> {
        self.check(w)?;
        let mut v = vec![0i64; self.names.len()];
        for l in &w.letters {
            v[l.gen] += if l.inv { -1 } else { 1 };
        }
        Ok(v)
    }

    /// Letters written as `name` or `name^-1`, the identity as `e`.
    pub fn format(&self, w: &GroupWord) -> String {
        if w.is_empty() {
            return "e".into();
        }
        let parts: Vec<String> = w
            .letters
            .iter()
            .map(|l| if l.inv { format!("{}^-1", self.names[l.gen]) } else { self.names[l.gen].clone() })
            .collect();
        parts.join(" ")
    }

    /// Kneser tokens `i.j` / `-i.j`; only for Kneser graphs.
    pub fn format_kneser(&self, w: &GroupWord) -> String {
        if w.is_empty() {
            return "e".into();
        }
        let parts: Vec<String> = w
            .letters
            .iter()
            .map(|l| {
                let s = &self.subsets[l.gen];
                let body: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                format!("{}{}", if l.inv { "-" } else { "" }, body.join("."))
            })
            .collect();
        parts.join(" ")
    }

    /// Parses Kneser tokens `i.j` and `-i.j`; `e` is the empty word.
    pub fn parse_kneser_word(&self, text: &str) -> Result<GroupWord> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let (inv, body) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let mut parts = Vec::new();
            for p in body.split('.') {
                parts.push(p.parse::<usize>().map_err(|_| Error::UnknownGenerator(tok.to_string()))?);
            }
            let sorted = {
                let mut s = parts.clone();
                s.sort_unstable();
                s
            };
            if sorted != parts {
                return Err(Error::UnknownGenerator(format!("{tok} (write subsets in increasing order)")));
            }
            let gen = self
                .subsets
                .iter()
                .position(|s| *s == parts)
                .ok_or_else(|| Error::UnknownGenerator(tok.to_string()))?;
            letters.push(Letter { gen, inv });
        }
        Ok(GroupWord { letters })
    }
}

/// `KG(m, k)`: `k`-subsets of `[m]`, adjacent when disjoint. Generators are
/// named `{i,j,...}`.
pub fn kneser_graph(m: usize, k: usize) -> Result<CommutationGraph> {
    if k == 0 || m < 2 * k {
        return Err(Error::OutOfRange(format!("KG({m},{k}) needs m >= 2k and k >= 1")));
    }
    let items: Vec<usize> = (1..=m).collect();
    let sets = subsets(&items, k);
    let names = sets
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if sets[a].iter().all(|x| !sets[b].contains(x)) {
                edges.push((a, b));
            }
        }
    }
    let mut g = CommutationGraph::new(names, &edges)?;
    g.subsets = sets;
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    pub letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        GroupWord { letters: vec![Letter { gen, inv: false }] }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn pow(&self, k: usize) -> GroupWord {
        GroupWord { letters: (0..k).flat_map(|_| self.letters.iter().copied()).collect() }
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a GroupWord>) -> GroupWord {
        GroupWord { letters: words.into_iter().flat_map(|w| w.letters.iter().copied()).collect() }
    }

    /// Distinct generators occurring in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.letters.iter().map(|l| l.gen).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inv { format!("g{}^-1", l.gen) } else { format!("g{}", l.gen) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// A word file: header `kneser m 2`, then one word per line.
pub fn parse_word_file(text: &str) -> Result<(CommutationGraph, Vec<GroupWord>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty word file".into() })?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 3 || h[0] != "kneser" || h[2] != "2" {
        return Err(Error::Parse { line, msg: "expected header `kneser <m> 2`".into() });
    }
    let m = h[1].parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad m `{}`", h[1]) })?;
    let graph = kneser_graph(m, 2)?;
    let words = lines.map(|(_, l)| graph.parse_kneser_word(l)).collect::<Result<Vec<_>>>()?;
    Ok((graph, words))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kneser_counts() {
        let p = kneser_graph(5, 2).unwrap();
        assert_eq!((p.generator_count(), p.edge_count()), (10, 15));
        let k4 = kneser_graph(4, 2).unwrap();
        assert_eq!((k4.generator_count(), k4.edge_count()), (6, 3));
        let k6 = kneser_graph(6, 2).unwrap();
        assert_eq!((k6.generator_count(), k6.edge_count()), (15, 45));
        assert!(kneser_graph(3, 2).is_err());
    }

    #[test]
    fn free_cancellation() {
        let h = kneser_graph(4, 2).unwrap();
        let x = GroupWord::generator(0);
        assert!(h.is_identity(&x.concat(&x.inverse())).unwrap());
        assert!(!h.is_identity(&x).unwrap());
    }

    #[test]
    fn commuting_cancellation() {
        let h = kneser_graph(4, 2).unwrap();
        let a = h.pair(1, 2).unwrap();
        let b = h.pair(3, 4).unwrap();
        let c = h.pair(1, 3).unwrap();
        let w = h.parse_kneser_word("1.2 3.4 -1.2 -3.4").unwrap();
        assert!(h.is_identity(&w).unwrap());
        let w = h.parse_kneser_word("1.2 1.3 -1.2 -1.3").unwrap();
        assert_eq!(h.reduce(&w).unwrap().len(), 4);
        assert_eq!(w.support(), {
            let mut s = vec![a, c];
            s.sort();
            s
        });
        assert!(h.commute(a, b) && !h.commute(a, c));
    }

    #[test]
    fn parses_word_file() {
        let (h, ws) = parse_word_file("kneser 5 2\n1.2 -3.4\ne\n").unwrap();
        assert_eq!(h.generator_count(), 10);
        assert_eq!(ws.len(), 2);
        assert_eq!(h.format_kneser(&ws[0]), "1.2 -3.4");
        assert!(ws[1].is_empty());
        assert!(matches!(h.parse_kneser_word("1.9"), Err(Error::UnknownGenerator(_))));
    }
}
