//! Arcs on the points `1..=n+1`, noncrossing arc diagrams, and the double
//! arc diagram of a permutation.
//!
//! An arc is stored as its endpoints plus the set of interior points it
//! passes *above* (bit `m` of a mask); every other interior point is passed
//! below. This is a complete isotopy invariant for arcs in the disk.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::Permutation;

/// Largest point index an [`Arc`] can carry.
pub const MAX_POINT: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Red,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Green => Color::Red,
            Color::Red => Color::Green,
        }
    }

    /// Homological shift of the corresponding arc module.
    pub fn shift(self) -> u8 {
        match self {
            Color::Green => 0,
            Color::Red => 1,
        }
    }
}

/// Ordered lexicographically by `(left, right, above-mask)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    left: usize,
    right: usize,
    above: u64,
}

impl Arc {
    /// Arc from `left` to `right` passing above exactly the listed interior points.
    pub fn new(left: usize, right: usize, above: &[usize]) -> Result<Self> {
        if left == 0 || left >= right || right > MAX_POINT {
            return Err(Error::InvalidArc(format!(
                "endpoints {left} < {right} out of range"
            )));
        }
        let mut mask = 0u64;
        for &m in above {
            if m <= left || m >= right {
                return Err(Error::InvalidArc(format!(
                    "point {m} is not strictly between {left} and {right}"
                )));
            }
            mask |= 1 << m;
        }
        Ok(Self {
            left,
            right,
            above: mask,
        })
    }

    /// Arc with no interior points passed above.
    pub fn below(left: usize, right: usize) -> Result<Self> {
        Self::new(left, right, &[])
    }

    pub(crate) fn from_mask(left: usize, right: usize, above: u64) -> Self {
        debug_assert!(left < right && right <= MAX_POINT);
        let interior = interior_mask(left, right);
        debug_assert_eq!(above & !interior, 0);
        Self { left, right, above }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn above_mask(&self) -> u64 {
        self.above
    }

    pub fn interior(&self) -> std::ops::Range<usize> {
        self.left + 1..self.right
    }

    /// Interior points passed above, increasing.
    pub fn above_points(&self) -> Vec<usize> {
        self.interior()
            .filter(|&m| self.above & (1 << m) != 0)
            .collect()
    }

    pub fn side(&self, m: usize) -> Option<Side> {
        if m <= self.left || m >= self.right {
            None
        } else if self.above & (1 << m) != 0 {
            Some(Side::Above)
        } else {
            Some(Side::Below)
        }
    }

    pub fn contains_strictly(&self, m: usize) -> bool {
        self.left < m && m < self.right
    }

    pub fn has_endpoint(&self, m: usize) -> bool {
        self.left == m || self.right == m
    }

    /// Number of vertices `v_left .. v_{right-1}` the arc crosses.
    pub fn span(&self) -> usize {
        self.right - self.left
    }

    /// Height of the arc at point `m` relative to the point itself:
    /// `+1` above, `-1` below, `0` at an endpoint, `None` outside the span.
    fn level_at(&self, m: usize) -> Option<i8> {
        if m == self.left || m == self.right {
            Some(0)
        } else {
            self.side(m).map(|s| match s {
                Side::Above => 1,
                Side::Below => -1,
            })
        }
    }

    fn check_fits(&self, n: usize) -> Result<()> {
        if self.right > n + 1 {
            return Err(Error::InvalidArc(format!(
                "arc {self} does not fit on {} points",
                n + 1
            )));
        }
        Ok(())
    }
}

pub(crate) fn interior_mask(left: usize, right: usize) -> u64 {
    if right <= left + 1 {
        0
    } else {
        ((1u64 << right) - 1) & !((1u64 << (left + 1)) - 1)
    }
}

impl fmt::Display for Arc {
    /// `arc(1,7;2v,3v,4^,5v,6^)`, interior points with their sides.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arc({},{}", self.left, self.right)?;
        let mut sep = ';';
        for m in self.interior() {
            let mark = if self.above & (1 << m) != 0 { '^' } else { 'v' };
            write!(f, "{sep}{m}{mark}")?;
            sep = ',';
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ArcJson {
    left: usize,
    right: usize,
    above: Vec<usize>,
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ArcJson {
            left: self.left,
            right: self.right,
            above: self.above_points(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ArcJson::deserialize(deserializer)?;
        Arc::new(raw.left, raw.right, &raw.above).map_err(serde::de::Error::custom)
    }
}

/// Whether two distinct arcs must intersect in their interiors.
///
/// Both arcs are horizontally monotone, so at each integer point of the
/// common span we read off which arc is higher (when that is forced). They
/// cross exactly when both orders are forced somewhere.
pub fn is_crossing(alpha: &Arc, beta: &Arc) -> Result<bool> {
    if alpha == beta {
        return Err(Error::IdenticalArcs);
    }
    Ok(crosses(alpha, beta))
}

fn crosses(alpha: &Arc, beta: &Arc) -> bool {
    let lo = alpha.left.max(beta.left);
    let hi = alpha.right.min(beta.right);
    let (mut up, mut down) = (false, false);
    for m in lo..=hi {
        let (Some(a), Some(b)) = (alpha.level_at(m), beta.level_at(m)) else {
            continue;
        };
        if a > b {
            up = true;
        } else if a < b {
            down = true;
        }
    }
    up && down
}

/// Shared left endpoints or shared right endpoints.
pub fn shares_same_side_endpoint(alpha: &Arc, beta: &Arc) -> bool {
    alpha.left == beta.left || alpha.right == beta.right
}

/// Pairwise compatibility inside a noncrossing diagram.
pub fn compatible(alpha: &Arc, beta: &Arc) -> bool {
    alpha != beta && !crosses(alpha, beta) && !shares_same_side_endpoint(alpha, beta)
}

/// (nc1) and (nc2) for every pair.
pub fn check_nad(arcs: &[Arc]) -> bool {
    arcs.iter().enumerate().all(|(i, a)| {
        arcs[i + 1..]
            .iter()
            .all(|b| a != b && !crosses(a, b) && !shares_same_side_endpoint(a, b))
    })
}

/// A noncrossing arc diagram: arcs kept sorted, each at most once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NoncrossingDiagram {
    arcs: Vec<Arc>,
}

impl NoncrossingDiagram {
    pub fn new(mut arcs: Vec<Arc>) -> Result<Self> {
        arcs.sort();
        arcs.dedup();
        if let Some((a, b)) = first_incompatible_pair(&arcs) {
            return Err(Error::NotNoncrossing(format!("{a} and {b}")));
        }
        Ok(Self { arcs })
    }

    pub fn empty() -> Self {
        Self { arcs: Vec::new() }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl fmt::Debug for NoncrossingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.arcs.iter()).finish()
    }
}

fn first_incompatible_pair(arcs: &[Arc]) -> Option<(Arc, Arc)> {
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if !compatible(a, b) {
                return Some((*a, *b));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredArc {
    pub arc: Arc,
    pub color: Color,
}

#[derive(Serialize, Deserialize)]
struct ColoredArcJson {
    left: usize,
    right: usize,
    above: Vec<usize>,
    color: Color,
}

impl Serialize for ColoredArc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ColoredArcJson {
            left: self.arc.left,
            right: self.arc.right,
            above: self.arc.above_points(),
            color: self.color,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ColoredArc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ColoredArcJson::deserialize(deserializer)?;
        let arc = Arc::new(raw.left, raw.right, &raw.above).map_err(serde::de::Error::custom)?;
        Ok(ColoredArc {
            arc,
            color: raw.color,
        })
    }
}

/// Position-indexed colored arcs: entry `i` (1-based) joins `w_i` and `w_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredDiagram {
    n: usize,
    arcs: Vec<ColoredArc>,
}

impl ColoredDiagram {
    /// Validates the shape of a diagram given position by position.
    ///
    /// Consecutive entries must chain through a common endpoint, colors
    /// must agree with the order of the chained values, and no two arcs
    /// may cross.
    pub fn from_entries(n: usize, arcs: Vec<ColoredArc>) -> Result<Self> {
        if arcs.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} arcs, got {}",
                arcs.len()
            )));
        }
        for e in &arcs {
            e.arc.check_fits(n)?;
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if a.arc != b.arc && crosses(&a.arc, &b.arc) {
                    return Err(Error::NotNoncrossing(format!("{} and {}", a.arc, b.arc)));
                }
            }
        }
        let d = Self { n, arcs };
        d.word()?;
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[ColoredArc] {
        &self.arcs
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> &ColoredArc {
        &self.arcs[i - 1]
    }

    pub fn arcs_of(&self, color: Color) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|e| e.color == color)
            .map(|e| e.arc)
            .collect()
    }

    /// The one-line word read back from the chain of arcs.
    ///
    /// Entry `i` has endpoints `{w_i, w_{i+1}}`; its color says which one
    /// is larger.
    pub fn word(&self) -> Result<Vec<usize>> {
        let mut word = Vec::with_capacity(self.n + 1);
        let first = &self.arcs[0];
        let (hi, lo) = (first.arc.right, first.arc.left);
        match first.color {
            Color::Green => word.extend([hi, lo]),
            Color::Red => word.extend([lo, hi]),
        }
        for e in &self.arcs[1..] {
            let prev = *word.last().unwrap();
            let next = if e.arc.left == prev {
                e.arc.right
            } else if e.arc.right == prev {
                e.arc.left
            } else {
                return Err(Error::Shape(format!(
                    "{} does not continue from {prev}",
                    e.arc
                )));
            };
            let descends = prev > next;
            if descends != (e.color == Color::Green) {
                return Err(Error::Shape(format!(
                    "color of {} disagrees with {prev},{next}",
                    e.arc
                )));
            }
            word.push(next);
        }
        Ok(word)
    }

    pub fn permutation(&self) -> Result<Permutation> {
        Permutation::new(self.word()?)
    }
}

/// The double arc diagram of `w`.
///
/// Entry `i` joins `w_i` and `w_{i+1}`. An interior value is passed below
/// when it sits left of positions `i, i+1` in the word and above when it
/// sits to the right. Green marks a descent.
#[allow(clippy::needless_range_loop)]
pub fn double_diagram(w: &Permutation) -> ColoredDiagram {
    let n = w.rank();
    let pos = w.positions();
    let arcs = (1..=n)
        .map(|i| {
            let (a, b) = (w.at(i), w.at(i + 1));
            let (left, right) = (a.min(b), a.max(b));
            let mut above = 0u64;
            for k in left + 1..right {
                if pos[k] > i + 1 {
                    above |= 1 << k;
                }
            }
            ColoredArc {
                arc: Arc::from_mask(left, right, above),
                color: if a > b { Color::Green } else { Color::Red },
            }
        })
        .collect();
    ColoredDiagram { n, arcs }
}

pub fn restrict(d: &ColoredDiagram, color: Color) -> NoncrossingDiagram {
    let mut arcs = d.arcs_of(color);
    arcs.sort();
    arcs.dedup();
    NoncrossingDiagram { arcs }
}

pub fn restrict_green(d: &ColoredDiagram) -> NoncrossingDiagram {
    restrict(d, Color::Green)
}

pub fn restrict_red(d: &ColoredDiagram) -> NoncrossingDiagram {
    restrict(d, Color::Red)
}

/// The single-descent permutation whose green diagram is `{arc}`.
pub fn arc_to_join_irreducible(arc: &Arc, n: usize) -> Result<Permutation> {
    arc.check_fits(n)?;
    let (p, q) = (arc.left, arc.right);
    let mut first: Vec<usize> = (1..p).collect();
    let mut second = vec![p];
    for m in arc.interior() {
        match arc.side(m) {
            Some(Side::Below) => first.push(m),
            _ => second.push(m),
        }
    }
    first.push(q);
    second.extend(q + 1..=n + 1);
    first.extend(second);
    Permutation::new(first)
}

/// Reconstructs `w` from its green diagram as the join of its joinands.
pub fn diagram_to_permutation(g: &NoncrossingDiagram, n: usize) -> Result<Permutation> {
    if let Some((a, b)) = first_incompatible_pair(&g.arcs) {
        return Err(Error::NotNoncrossing(format!("{a} and {b}")));
    }
    let joinands = g
        .arcs
        .iter()
        .map(|a| arc_to_join_irreducible(a, n))
        .collect::<Result<Vec<_>>>()?;
    Permutation::join_all(n, &joinands)
}

/// Largest rank accepted by [`enumerate_arcs`].
pub const ARC_ENUMERATION_CAP: usize = 20;
/// Largest rank accepted by [`enumerate_nad`]; counting goes further.
pub const NAD_ENUMERATION_CAP: usize = 7;
/// Largest rank accepted by [`count_nad`] and the family counts.
pub const NAD_COUNT_CAP: usize = 8;

/// All arcs on `n + 1` points, ordered by `(left, right, above-mask)`.
pub fn enumerate_arcs(n: usize) -> Result<Vec<Arc>> {
    if n > ARC_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ARC_ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    for left in 1..=n {
        for right in left + 1..=n + 1 {
            let interior = right - left - 1;
            for bits in 0u64..(1 << interior) {
                out.push(Arc::from_mask(left, right, bits << (left + 1)));
            }
        }
    }
    Ok(out)
}

/// Every noncrossing diagram on `n + 1` points, lexicographically ordered.
pub fn enumerate_nad(n: usize) -> Result<Vec<NoncrossingDiagram>> {
    if n > NAD_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: NAD_ENUMERATION_CAP,
        });
    }
    Ok(noncrossing_subsets(&enumerate_arcs(n)?, Exec::default()))
}

pub fn count_nad(n: usize) -> Result<u64> {
    if n > NAD_COUNT_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: NAD_COUNT_CAP,
        });
    }
    Ok(count_noncrossing_subsets(
        &enumerate_arcs(n)?,
        Exec::default(),
    ))
}

/// Pairwise-compatibility bitsets over a pool of arcs.
struct CompatTable {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl CompatTable {
    fn new(pool: &[Arc]) -> Self {
        let words = pool.len().div_ceil(64).max(1);
        let rows = pool
            .iter()
            .map(|a| {
                let mut row = vec![0u64; words];
                for (j, b) in pool.iter().enumerate() {
                    if compatible(a, b) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        Self { words, rows }
    }

    /// Candidates after choosing `i`: compatible with `i` and of larger index.
    fn after(&self, i: usize, current: &[u64]) -> Vec<u64> {
        let mut next: Vec<u64> = current
            .iter()
            .zip(&self.rows[i])
            .map(|(c, r)| c & r)
            .collect();
        for (w, word) in next.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= i + 1 {
                *word = 0;
            } else if lo <= i {
                *word &= !((1u64 << (i + 1 - lo)) - 1);
            }
        }
        next
    }

    fn all(&self, len: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for j in 0..len {
            v[j / 64] |= 1 << (j % 64);
        }
        v
    }
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// All pairwise-compatible subsets of `pool`, in lexicographic order of their
/// index sequences (the empty set first). `pool` must be sorted for the
/// result to be lexicographic in arcs as well.
pub fn noncrossing_subsets(pool: &[Arc], exec: Exec) -> Vec<NoncrossingDiagram> {
    let table = CompatTable::new(pool);
    let shards = exec.map_range(0..pool.len(), |first| {
        let mut out = Vec::new();
        let mut chosen = vec![first];
        let cand = table.after(first, &table.all(pool.len()));
        collect_subsets(&table, pool, &mut chosen, &cand, &mut out);
        out
    });
    let mut all = vec![NoncrossingDiagram::empty()];
    all.extend(shards.into_iter().flatten());
    all
}

fn collect_subsets(
    table: &CompatTable,
    pool: &[Arc],
    chosen: &mut Vec<usize>,
    cand: &[u64],
    out: &mut Vec<NoncrossingDiagram>,
) {
    out.push(NoncrossingDiagram {
        arcs: chosen.iter().map(|&i| pool[i]).collect(),
    });
    for j in bits(cand).collect::<Vec<_>>() {
        chosen.push(j);
        let next = table.after(j, cand);
        collect_subsets(table, pool, chosen, &next, out);
        chosen.pop();
    }
}

/// Number of pairwise-compatible subsets of `pool`, including the empty one.
pub fn count_noncrossing_subsets(pool: &[Arc], exec: Exec) -> u64 {
    let table = CompatTable::new(pool);
    let all = table.all(pool.len());
    let counts = exec.map_range(0..pool.len(), |first| {
        count_from(&table, &table.after(first, &all))
    });
    1 + counts.into_iter().sum::<u64>()
}

fn count_from(table: &CompatTable, cand: &[u64]) -> u64 {
    let mut total = 1;
    for j in bits(cand).collect::<Vec<_>>() {
        total += count_from(table, &table.after(j, cand));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(l: usize, r: usize, above: &[usize]) -> Arc {
        Arc::new(l, r, above).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn nad(arcs: &[Arc]) -> NoncrossingDiagram {
        NoncrossingDiagram::new(arcs.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_green_and_red() {
        let d = double_diagram(&p("53271468"));
        assert_eq!(
            restrict_green(&d),
            nad(&[arc(3, 5, &[4]), arc(2, 3, &[]), arc(1, 7, &[4, 6])])
        );
        assert_eq!(
            restrict_red(&d),
            nad(&[
                arc(2, 7, &[4, 6]),
                arc(1, 4, &[]),
                arc(4, 6, &[]),
                arc(6, 8, &[])
            ])
        );
    }

    #[test]
    fn identity_is_red_chain() {
        let d = double_diagram(&Permutation::identity(3));
        let expected: Vec<_> = (1..=3)
            .map(|k| ColoredArc {
                arc: arc(k, k + 1, &[]),
                color: Color::Red,
            })
            .collect();
        assert_eq!(d.entries(), &expected[..]);
    }

    #[test]
    fn restriction_examples() {
        let d = double_diagram(&p("312"));
        assert_eq!(restrict_green(&d), nad(&[arc(1, 3, &[2])]));
        assert_eq!(restrict_red(&d), nad(&[arc(1, 2, &[])]));
        assert!(restrict_green(&double_diagram(&Permutation::identity(4))).is_empty());
        assert!(restrict_red(&double_diagram(&p("4321"))).is_empty());
    }

    // All 24 double diagrams at n = 3 as hand-drawn reference data:
    // (word, [(color, left, right, points passed above)]).
    #[test]
    fn rank_three_figure() {
        use Color::{Green as G, Red as R};
        type Entry = (Color, usize, usize, &'static [usize]);
        let figure: &[(&str, &[Entry])] = &[
            ("1234", &[(R, 1, 2, &[]), (R, 2, 3, &[]), (R, 3, 4, &[])]),
            ("1243", &[(G, 3, 4, &[]), (R, 1, 2, &[]), (R, 2, 4, &[3])]),
            ("1324", &[(G, 2, 3, &[]), (R, 1, 3, &[2]), (R, 2, 4, &[])]),
            ("1342", &[(G, 2, 4, &[]), (R, 1, 3, &[2]), (R, 3, 4, &[])]),
            (
                "1423",
                &[(G, 2, 4, &[3]), (R, 1, 4, &[2, 3]), (R, 2, 3, &[])],
            ),
            (
                "1432",
                &[(G, 2, 3, &[]), (G, 3, 4, &[]), (R, 1, 4, &[2, 3])],
            ),
            ("2134", &[(G, 1, 2, &[]), (R, 1, 3, &[]), (R, 3, 4, &[])]),
            ("2143", &[(G, 1, 2, &[]), (G, 3, 4, &[]), (R, 1, 4, &[3])]),
            ("2314", &[(G, 1, 3, &[]), (R, 1, 4, &[]), (R, 2, 3, &[])]),
            ("2341", &[(G, 1, 4, &[]), (R, 2, 3, &[]), (R, 3, 4, &[])]),
            ("2413", &[(G, 1, 4, &[3]), (R, 1, 3, &[]), (R, 2, 4, &[3])]),
            ("2431", &[(G, 1, 3, &[]), (G, 3, 4, &[]), (R, 2, 4, &[3])]),
            ("3124", &[(G, 1, 3, &[2]), (R, 1, 2, &[]), (R, 2, 4, &[])]),
            ("3142", &[(G, 1, 3, &[2]), (G, 2, 4, &[]), (R, 1, 4, &[2])]),
            ("3214", &[(G, 1, 2, &[]), (G, 2, 3, &[]), (R, 1, 4, &[])]),
            ("3241", &[(G, 1, 4, &[]), (G, 2, 3, &[]), (R, 2, 4, &[])]),
            ("3412", &[(G, 1, 4, &[2]), (R, 1, 2, &[]), (R, 3, 4, &[])]),
            ("3421", &[(G, 1, 2, &[]), (G, 2, 4, &[]), (R, 3, 4, &[])]),
            (
                "4123",
                &[(G, 1, 4, &[2, 3]), (R, 1, 2, &[]), (R, 2, 3, &[])],
            ),
            (
                "4132",
                &[(G, 1, 4, &[2, 3]), (G, 2, 3, &[]), (R, 1, 3, &[2])],
            ),
            ("4213", &[(G, 1, 2, &[]), (G, 2, 4, &[3]), (R, 1, 3, &[])]),
            ("4231", &[(G, 1, 3, &[]), (G, 2, 4, &[3]), (R, 2, 3, &[])]),
            ("4312", &[(G, 1, 3, &[2]), (G, 3, 4, &[]), (R, 1, 2, &[])]),
            ("4321", &[(G, 1, 2, &[]), (G, 2, 3, &[]), (G, 3, 4, &[])]),
        ];
        assert_eq!(figure.len(), 24);
        for (w, entries) in figure {
            let mut expected: Vec<ColoredArc> = entries
                .iter()
                .map(|&(color, l, r, above)| ColoredArc {
                    arc: arc(l, r, above),
                    color,
                })
                .collect();
            expected.sort();
            let mut got = double_diagram(&p(w)).entries().to_vec();
            got.sort();
            assert_eq!(got, expected, "{w}");
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(is_crossing(&arc(1, 3, &[2]), &arc(2, 4, &[3])).unwrap());
        assert!(!is_crossing(&arc(1, 3, &[]), &arc(3, 5, &[])).unwrap());
        assert!(is_crossing(&arc(1, 4, &[3]), &arc(2, 3, &[])).unwrap());
        assert_eq!(
            is_crossing(&arc(1, 3, &[]), &arc(1, 3, &[])),
            Err(Error::IdenticalArcs)
        );
    }

    #[test]
    fn check_nad_examples() {
        assert!(!check_nad(&[arc(1, 3, &[2]), arc(1, 2, &[])]));
        assert!(check_nad(&[
            arc(2, 8, &[5, 7]),
            arc(3, 4, &[]),
            arc(4, 6, &[5])
        ]));
        assert!(check_nad(&[]));
        // shared right endpoint without crossing
        assert!(!check_nad(&[arc(1, 5, &[2]), arc(3, 5, &[4])]));
        assert!(!is_crossing(&arc(1, 5, &[2]), &arc(3, 5, &[4])).unwrap());
    }

    #[test]
    fn join_irreducible_examples() {
        assert_eq!(
            arc_to_join_irreducible(&arc(1, 3, &[2]), 2).unwrap(),
            p("312")
        );
        assert_eq!(
            arc_to_join_irreducible(&arc(1, 3, &[]), 2).unwrap(),
            p("231")
        );
        assert_eq!(
            arc_to_join_irreducible(&arc(1, 2, &[]), 2).unwrap(),
            p("213")
        );
    }

    #[test]
    fn diagram_to_permutation_examples() {
        assert_eq!(
            diagram_to_permutation(&nad(&[arc(1, 2, &[]), arc(2, 3, &[])]), 2).unwrap(),
            p("321")
        );
        assert_eq!(
            diagram_to_permutation(&NoncrossingDiagram::empty(), 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            diagram_to_permutation(&nad(&[arc(1, 3, &[])]), 2).unwrap(),
            p("231")
        );
        let bad = NoncrossingDiagram {
            arcs: vec![arc(1, 2, &[]), arc(1, 3, &[])],
        };
        assert!(diagram_to_permutation(&bad, 2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for (n, arcs, diagrams) in [(1, 1, 2), (2, 4, 6), (3, 11, 24), (4, 26, 120)] {
            let all = enumerate_arcs(n).unwrap();
            assert_eq!(all.len(), arcs);
            assert_eq!(all.len(), (1 << (n + 1)) - n - 2);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            let nads = enumerate_nad(n).unwrap();
            assert_eq!(nads.len(), diagrams);
            assert!(nads.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(count_nad(n).unwrap(), diagrams as u64);
        }
        assert!(enumerate_nad(NAD_ENUMERATION_CAP + 1).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let pool = enumerate_arcs(4).unwrap();
        assert_eq!(
            noncrossing_subsets(&pool, Exec::Sequential),
            noncrossing_subsets(&pool, Exec::Parallel)
        );
    }

    #[test]
    fn word_readback_and_validation() {
        for w in Permutation::all(4) {
            let d = double_diagram(&w);
            assert_eq!(d.permutation().unwrap(), w);
            assert_eq!(
                ColoredDiagram::from_entries(4, d.entries().to_vec()).unwrap(),
                d
            );
        }
        let mut entries = double_diagram(&p("312")).entries().to_vec();
        entries[0].color = Color::Red;
        assert!(ColoredDiagram::from_entries(2, entries).is_err());
    }

    #[test]
    fn arc_json() {
        let a = arc(1, 7, &[4, 6]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"left":1,"right":7,"above":[4,6]}"#);
        assert_eq!(serde_json::from_str::<Arc>(&s).unwrap(), a);
        assert!(serde_json::from_str::<Arc>(r#"{"left":1,"right":3,"above":[3]}"#).is_err());
    }
}
