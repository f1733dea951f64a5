//! Permutations of `[n+1]` under the (left) weak order.
//!
//! Inversions are recorded as *value* pairs `(a, b)` with `a < b` and `b`
//! appearing before `a` in the one-line word. Covers swap adjacent
//! positions, so the left action of `s_i` exchanges the entries at positions
//! `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of value pairs `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == 0 || a >= b {
                return Err(Error::NotBiclosed(format!(
                    "({a},{b}) is not an ordered pair a<b"
                )));
            }
            set.insert((a, b));
        }
        Ok(Self { pairs: set })
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    fn max_value(&self) -> usize {
        self.pairs.iter().map(|&(_, b)| b).max().unwrap_or(0)
    }

    /// Checks closure and coclosure on the values `1..=size`.
    ///
    /// Closed: `(a,b),(b,c)` in the set forces `(a,c)`. Coclosed: `(a,c)` in
    /// the set forces `(a,b)` or `(b,c)`.
    pub fn is_biclosed(&self, size: usize) -> bool {
        self.first_biclosure_violation(size).is_none()
    }

    fn first_biclosure_violation(&self, size: usize) -> Option<String> {
        if self.max_value() > size {
            return Some(format!("value {} exceeds {}", self.max_value(), size));
        }
        for a in 1..=size {
            for b in a + 1..=size {
                for c in b + 1..=size {
                    let ab = self.contains(a, b);
                    let bc = self.contains(b, c);
                    let ac = self.contains(a, c);
                    if ab && bc && !ac {
                        return Some(format!("({a},{b}),({b},{c}) present but ({a},{c}) missing"));
                    }
                    if ac && !ab && !bc {
                        return Some(format!(
                            "({a},{c}) present but neither ({a},{b}) nor ({b},{c})"
                        ));
                    }
                }
            }
        }
        None
    }

    /// Smallest transitively closed superset (chains `c > b > a`).
    #[allow(clippy::needless_range_loop)]
    pub fn transitive_closure(&self, size: usize) -> InversionSet {
        // before[x][y]: x is forced before y, x > y
        let mut before = vec![vec![false; size + 1]; size + 1];
        for &(a, b) in &self.pairs {
            before[b][a] = true;
        }
        for k in 1..=size {
            for x in 1..=size {
                if !before[x][k] {
                    continue;
                }
                for y in 1..=size {
                    if before[k][y] {
                        before[x][y] = true;
                    }
                }
            }
        }
        let mut pairs = BTreeSet::new();
        for b in 1..=size {
            for a in 1..b {
                if before[b][a] {
                    pairs.insert((a, b));
                }
            }
        }
        InversionSet { pairs }
    }

    pub fn union(&self, other: &InversionSet) -> InversionSet {
        InversionSet {
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }
}

/// A permutation `w_1 .. w_{n+1}` of `[n+1]`, i.e. an element of `S_{n+1}`
/// where `n` is the rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.len() < 2 {
            return Err(Error::InvalidPermutation(format!(
                "need at least 2 entries, got {}",
                word.len()
            )));
        }
        let mut seen = vec![false; word.len() + 1];
        for &v in &word {
            if v == 0 || v > word.len() || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection of [{}]",
                    word.len()
                )));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// Parses the text form and checks the length against rank `n`.
    pub fn parse_with_rank(text: &str, n: usize) -> Result<Self> {
        let w: Permutation = text.parse()?;
        if w.rank() != n {
            return Err(Error::InvalidPermutation(format!(
                "\"{text}\" has length {}, expected {}",
                w.word.len(),
                n + 1
            )));
        }
        Ok(w)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n + 1).collect(),
        }
    }

    pub fn longest(n: usize) -> Self {
        Self {
            word: (1..=n + 1).rev().collect(),
        }
    }

    /// All permutations of rank `n` in lexicographic order of their words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n + 1).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let Some(i) = (0..word.len() - 1).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..word.len())
                .rev()
                .find(|&j| word[j] > word[i])
                .unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }

    /// Rank `n`; the word has `n + 1` entries.
    pub fn rank(&self) -> usize {
        self.word.len() - 1
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.word
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    /// Inverse lookup table: `positions()[v]` is the 1-based position of `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.word.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    pub fn inversions(&self) -> InversionSet {
        let mut pairs = BTreeSet::new();
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    pairs.insert((self.word[j], self.word[i]));
                }
            }
        }
        InversionSet { pairs }
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    pub fn from_inversions(set: &InversionSet, n: usize) -> Result<Self> {
        let size = n + 1;
        if let Some(why) = set.first_biclosure_violation(size) {
            return Err(Error::NotBiclosed(why));
        }
        let mut word: Vec<usize> = (1..=size).collect();
        // a < b: a precedes b unless (a, b) is an inversion
        word.sort_by(|&x, &y| {
            use std::cmp::Ordering;
            if x == y {
                Ordering::Equal
            } else if x < y {
                if set.contains(x, y) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            } else if set.contains(y, x) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        let w = Permutation { word };
        if &w.inversions() != set {
            return Err(Error::NotBiclosed(
                "no permutation realizes this set".into(),
            ));
        }
        Ok(w)
    }

    fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    /// `self <= other` in the weak order.
    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        self.check_rank(other)?;
        Ok(self.inversions().is_subset(&other.inversions()))
    }

    pub fn join(&self, other: &Permutation) -> Result<Permutation> {
        self.check_rank(other)?;
        let size = self.word.len();
        let closure = self
            .inversions()
            .union(&other.inversions())
            .transitive_closure(size);
        Permutation::from_inversions(&closure, self.rank())
            .map_err(|e| Error::Inconsistent(format!("join closure not biclosed: {e}")))
    }

    pub fn meet(&self, other: &Permutation) -> Result<Permutation> {
        self.check_rank(other)?;
        Ok(self.complement().join(&other.complement())?.complement())
    }

    /// Join of a nonempty family; the identity for an empty one.
    pub fn join_all<'a, I>(n: usize, items: I) -> Result<Permutation>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut acc = Permutation::identity(n);
        for w in items {
            acc = acc.join(w)?;
        }
        Ok(acc)
    }

    /// Value complement `w_i -> n + 2 - w_i`; an anti-automorphism of the weak order.
    pub fn complement(&self) -> Permutation {
        let size = self.word.len() + 1;
        Permutation {
            word: self.word.iter().map(|&v| size - v).collect(),
        }
    }

    /// `s_i * w`: exchange the entries at positions `i` and `i + 1`.
    pub fn left_multiply_simple(&self, i: usize) -> Result<Permutation> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Permutation { word })
    }

    /// 1-based positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    pub fn is_join_irreducible(&self) -> bool {
        self.descents().len() == 1
    }

    pub fn covers(&self, direction: CoverDirection) -> Vec<Permutation> {
        (1..self.word.len())
            .filter(|&i| match direction {
                CoverDirection::Down => self.is_descent(i),
                CoverDirection::Up => !self.is_descent(i),
            })
            .map(|i| self.left_multiply_simple(i).expect("position in range"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverDirection {
    Up,
    Down,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry \"{t}\"")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidPermutation(format!("bad digit '{c}' in \"{s}\""))
                    })
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pairs(list: &[(usize, usize)]) -> InversionSet {
        InversionSet::from_pairs(list.iter().copied()).unwrap()
    }

    // direct pair scan, independent of `inversions`
    fn scan(w: &Permutation) -> Vec<(usize, usize)> {
        let word = w.word();
        let mut out = vec![];
        for a in 1..=word.len() {
            for b in a + 1..=word.len() {
                if w.position_of(b) < w.position_of(a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(p("231").inversions(), pairs(&[(1, 2), (1, 3)]));
        assert!(Permutation::identity(4).inversions().is_empty());
        assert_eq!(p("321").inversions(), pairs(&[(1, 2), (1, 3), (2, 3)]));
        for w in Permutation::all(4) {
            assert_eq!(w.inversions().iter().collect::<Vec<_>>(), scan(&w));
        }
    }

    #[test]
    fn weak_leq_examples() {
        assert!(p("132").weak_leq(&p("312")).unwrap());
        assert!(!p("213").weak_leq(&p("312")).unwrap());
        assert!(p("2413").weak_leq(&p("2413")).unwrap());
        assert_eq!(p("12").weak_leq(&p("123")), Err(Error::RankMismatch(1, 2)));
    }

    #[test]
    fn covers_examples() {
        let up = p("123").covers(CoverDirection::Up);
        assert_eq!(up, vec![p("213"), p("132")]);
        assert!(p("321").covers(CoverDirection::Up).is_empty());
        assert_eq!(p("231").covers(CoverDirection::Down), vec![p("213")]);
        for w in Permutation::all(3) {
            for c in w.covers(CoverDirection::Up) {
                assert_eq!(c.length(), w.length() + 1);
                assert!(w.weak_leq(&c).unwrap());
            }
        }
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(p("132").join(&p("213")).unwrap(), p("321"));
        assert_eq!(p("231").meet(&p("312")).unwrap(), p("123"));
        let w = p("3142");
        assert_eq!(w.join(&Permutation::identity(3)).unwrap(), w);
    }

    #[test]
    fn from_inversions_examples() {
        assert_eq!(
            Permutation::from_inversions(&pairs(&[(1, 2), (1, 3), (2, 3)]), 2).unwrap(),
            p("321")
        );
        assert_eq!(
            Permutation::from_inversions(&InversionSet::new(), 3).unwrap(),
            Permutation::identity(3)
        );
        assert!(matches!(
            Permutation::from_inversions(&pairs(&[(1, 3)]), 2),
            Err(Error::NotBiclosed(_))
        ));
    }

    #[test]
    fn left_multiply_examples() {
        assert_eq!(p("321").left_multiply_simple(1).unwrap(), p("231"));
        assert_eq!(p("4321").left_multiply_simple(3).unwrap(), p("4312"));
        let w = p("2413");
        for i in 1..=3 {
            let back = w
                .left_multiply_simple(i)
                .unwrap()
                .left_multiply_simple(i)
                .unwrap();
            assert_eq!(back, w);
        }
        assert!(w.left_multiply_simple(0).is_err());
        assert!(w.left_multiply_simple(4).is_err());
    }

    #[test]
    fn descents_examples() {
        assert_eq!(p("53271468").descents(), vec![1, 2, 4]);
        assert!(Permutation::identity(5).descents().is_empty());
        assert_eq!(p("4321").descents(), vec![1, 2, 3]);
    }

    #[test]
    fn text_forms() {
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1223".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!(Permutation::parse_with_rank("123", 3).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for (n, count) in [(1, 2), (2, 6), (3, 24), (4, 120)] {
            let all = Permutation::all(n);
            assert_eq!(all.len(), count);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for n in 1..=3 {
            let all = Permutation::all(n);
            for u in &all {
                for w in &all {
                    let j = u.join(w).unwrap();
                    let m = u.meet(w).unwrap();
                    assert!(u.weak_leq(&j).unwrap() && w.weak_leq(&j).unwrap());
                    assert!(m.weak_leq(u).unwrap() && m.weak_leq(w).unwrap());
                    // absorption
                    assert_eq!(u.join(&u.meet(w).unwrap()).unwrap(), *u);
                    assert_eq!(u.meet(&u.join(w).unwrap()).unwrap(), *u);
                    // least upper bound
                    for z in &all {
                        if u.weak_leq(z).unwrap() && w.weak_leq(z).unwrap() {
                            assert!(j.weak_leq(z).unwrap());
                        }
                    }
                    if u.weak_leq(w).unwrap() && w.weak_leq(u).unwrap() {
                        assert_eq!(u, w);
                    }
                }
            }
        }
    }

    #[test]
    fn absorption_n4() {
        let all = Permutation::all(4);
        for u in all.iter().step_by(7) {
            for w in &all {
                assert_eq!(u.join(&u.meet(w).unwrap()).unwrap(), *u);
                assert_eq!(u.meet(&u.join(w).unwrap()).unwrap(), *u);
            }
        }
    }

    #[test]
    fn inversions_roundtrip_and_join_irreducibles() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert_eq!(Permutation::from_inversions(&w.inversions(), n).unwrap(), w);
                let one_descent = w.descents().len() == 1;
                assert_eq!(one_descent, w.is_join_irreducible());
                assert_eq!(one_descent, w.covers(CoverDirection::Down).len() == 1);
            }
        }
    }
}
