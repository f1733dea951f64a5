//! Half twists, mutation of double diagrams, the collections `Psi(D)` of
//! shifted arc modules, and the module-level mutation used to cross-check
//! them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arc::{double_diagram, enumerate_arcs, Arc, Color, ColoredArc, ColoredDiagram, Side};
use crate::error::{Error, Result};
use crate::linalg::{is_unimodular, q, Matrix};
use crate::par::Exec;
use crate::perm::Permutation;
use crate::rep::{
    arc_module, ext1_dim, hom_basis, hom_dim, is_brick, is_isomorphic, morphism_parts, Morphism,
    Representation,
};
use crate::string_hom::graph_map_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    /// Color the pivot must have.
    pub fn pivot_color(self) -> Color {
        match self {
            Direction::Left => Color::Green,
            Direction::Right => Color::Red,
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            _ => Err(Error::Parse(format!(
                "direction must be left or right, got \"{s}\""
            ))),
        }
    }
}

fn shared_endpoint(pivot: &Arc, other: &Arc) -> Result<usize> {
    let shared: Vec<usize> = [pivot.left(), pivot.right()]
        .into_iter()
        .filter(|&p| other.has_endpoint(p))
        .collect();
    match shared.as_slice() {
        [s] => Ok(*s),
        _ => Err(Error::SharedEndpoints(shared.len())),
    }
}

fn twist(pivot: &Arc, other: &Arc, dir: Direction) -> Result<Arc> {
    let s = shared_endpoint(pivot, other)?;
    let a = if pivot.left() == s {
        pivot.right()
    } else {
        pivot.left()
    };
    let b = if other.left() == s {
        other.right()
    } else {
        other.left()
    };
    let (left, right) = (a.min(b), a.max(b));
    let mut above = Vec::new();
    for m in left + 1..right {
        let side = if m == s {
            let pivot_left = pivot.right() == s;
            match (pivot_left, dir) {
                (true, Direction::Left) | (false, Direction::Right) => Side::Above,
                _ => Side::Below,
            }
        } else if pivot.contains_strictly(m) {
            pivot.side(m).expect("strictly inside")
        } else {
            other.side(m).expect("strictly inside")
        };
        if side == Side::Above {
            above.push(m);
        }
    }
    Arc::new(left, right, &above)
}

/// Joins the non-shared endpoints of two arcs meeting in one point.
///
/// At the shared point the result passes above when the pivot is the left
/// arc and below when it is the right one; elsewhere it follows whichever
/// input arc covers the point.
pub fn half_twist(pivot: &Arc, other: &Arc) -> Result<Arc> {
    twist(pivot, other, Direction::Left)
}

/// The twist used by right mutation: same endpoints, opposite side at the
/// shared point.
pub fn inverse_half_twist(pivot: &Arc, other: &Arc) -> Result<Arc> {
    twist(pivot, other, Direction::Right)
}

/// `mu_i` in the given direction.
pub fn mutate_dad(d: &ColoredDiagram, i: usize, dir: Direction) -> Result<ColoredDiagram> {
    let n = d.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let pivot = *d.at(i);
    if pivot.color != dir.pivot_color() {
        return Err(Error::WrongColor(format!(
            "{dir:?} mutation at {i} needs a {:?} arc, found {:?}",
            dir.pivot_color(),
            pivot.color
        )));
    }
    let w = d.word()?;
    let mut entries = d.entries().to_vec();
    entries[i - 1].color = pivot.color.flipped();
    // new adjacent values after swapping w_i and w_{i+1} (0-based i-1, i)
    let mut swapped = w.clone();
    swapped.swap(i - 1, i);
    for j in [i.wrapping_sub(1), i + 1] {
        if j == 0 || j > n {
            continue;
        }
        let arc = twist(&pivot.arc, &d.at(j).arc, dir)?;
        let (x, y) = (swapped[j - 1], swapped[j]);
        entries[j - 1] = ColoredArc {
            arc,
            color: if x < y { Color::Red } else { Color::Green },
        };
    }
    ColoredDiagram::from_entries(n, entries)
}

/// Mutation at `i` in the direction dictated by the pivot's color.
pub fn mutate(d: &ColoredDiagram, i: usize) -> Result<ColoredDiagram> {
    if i == 0 || i > d.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: d.n(),
        });
    }
    let dir = match d.at(i).color {
        Color::Green => Direction::Left,
        Color::Red => Direction::Right,
    };
    mutate_dad(d, i, dir)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub module: Representation,
    pub shift: u8,
}

/// Modules in degrees 0 and -1, in position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TwoTermCollection {
    members: Vec<Member>,
}

impl TwoTermCollection {
    pub fn new(members: Vec<Member>) -> Result<Self> {
        if let Some(first) = members.first() {
            let n = first.module.n();
            if let Some(m) = members.iter().find(|m| m.module.n() != n) {
                return Err(Error::RankMismatch(n, m.module.n()));
            }
        }
        if let Some(m) = members.iter().find(|m| m.shift > 1) {
            return Err(Error::Shape(format!("shift {} is not 0 or 1", m.shift)));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member-by-member isomorphism with equal shifts.
    pub fn is_isomorphic_to(&self, other: &TwoTermCollection) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for (a, b) in self.members.iter().zip(&other.members) {
            if a.shift != b.shift || !is_isomorphic(&a.module, &b.module)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Green arc modules in degree 0, red ones shifted.
pub fn psi(d: &ColoredDiagram) -> TwoTermCollection {
    let members = d
        .entries()
        .iter()
        .map(|e| Member {
            module: arc_module(&e.arc, d.n()).expect("diagram arcs fit"),
            shift: e.color.shift(),
        })
        .collect();
    TwoTermCollection { members }
}

/// The first axiom that fails, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    NotBrick(usize),
    HomSameShift(usize, usize),
    HomAcrossShifts(usize, usize),
    NotBasis,
}

pub fn smc_axiom_failure(x: &TwoTermCollection) -> Result<Option<AxiomFailure>> {
    let ms = x.members();
    for (i, m) in ms.iter().enumerate() {
        if !is_brick(&m.module) {
            return Ok(Some(AxiomFailure::NotBrick(i + 1)));
        }
    }
    for (i, a) in ms.iter().enumerate() {
        for (j, b) in ms.iter().enumerate() {
            if i == j {
                continue;
            }
            let h = hom_dim(&a.module, &b.module)?;
            if a.shift == b.shift && h != 0 {
                return Ok(Some(AxiomFailure::HomSameShift(i + 1, j + 1)));
            }
            if a.shift == 0 && b.shift == 1 && h != 0 {
                return Ok(Some(AxiomFailure::HomAcrossShifts(i + 1, j + 1)));
            }
        }
    }
    let n = ms.first().map_or(0, |m| m.module.n());
    if ms.len() != n {
        return Ok(Some(AxiomFailure::NotBasis));
    }
    let rows: Vec<Vec<_>> = ms
        .iter()
        .map(|m| {
            let sign = if m.shift == 0 { 1 } else { -1 };
            m.module
                .dims()
                .iter()
                .map(|&d| q(sign * d as i64))
                .collect()
        })
        .collect();
    if !is_unimodular(&Matrix::from_rows(rows, n)) {
        return Ok(Some(AxiomFailure::NotBasis));
    }
    Ok(None)
}

/// Bricks, hom-orthogonal within a degree, no homs from degree 0 into the
/// shifted part, and signed dimension vectors forming a basis of `Z^n`.
pub fn smc_axiom_check(x: &TwoTermCollection) -> Result<bool> {
    Ok(smc_axiom_failure(x)?.is_none())
}

/// Pairs `(i, j)` with a degree-0 member `i`, a shifted member `j` and
/// `Ext^1(X_i, X_j) != 0`.
pub fn ext_across_shifts(x: &TwoTermCollection) -> Result<Vec<(usize, usize)>> {
    let ms = x.members();
    let mut out = Vec::new();
    for (i, a) in ms.iter().enumerate() {
        for (j, b) in ms.iter().enumerate() {
            if a.shift == 0 && b.shift == 1 && ext1_dim(&a.module, &b.module)? != 0 {
                out.push((i + 1, j + 1));
            }
        }
    }
    Ok(out)
}

/// No graph map from a green arc of `du` to a red arc of `dw`.
pub fn smc_leq(du: &ColoredDiagram, dw: &ColoredDiagram) -> Result<bool> {
    if du.n() != dw.n() {
        return Err(Error::RankMismatch(du.n(), dw.n()));
    }
    let red = dw.arcs_of(Color::Red);
    Ok(du
        .arcs_of(Color::Green)
        .iter()
        .all(|a| red.iter().all(|b| graph_map_count(a, b) == 0)))
}

/// Some morphism in the span of `basis` that is injective, trying each
/// basis element and then seeded random combinations.
fn find_injective(basis: &[Morphism]) -> Option<Morphism> {
    if let Some(f) = basis.iter().find(|f| f.is_injective()) {
        return Some(f.clone());
    }
    let first = basis.first()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xe11);
    for _ in 0..8 {
        let maps: Vec<Matrix> = (0..first.maps().len())
            .map(|v| {
                basis.iter().fold(
                    Matrix::zeros(first.maps()[v].rows(), first.maps()[v].cols()),
                    |acc, f| acc.add(&f.maps()[v].scale(&q(rng.gen_range(1..1000)))),
                )
            })
            .collect();
        let f = Morphism::new(first.source().clone(), first.target().clone(), maps).ok()?;
        if f.is_injective() {
            return Some(f);
        }
    }
    None
}

/// The middle term of the non-split extension `0 -> pivot -> E -> x -> 0`,
/// searched among all arc modules of the right dimension vector.
fn extension_middle(pivot: &Representation, x: &Representation) -> Result<Representation> {
    let n = pivot.n();
    let target: Vec<usize> = pivot
        .dims()
        .iter()
        .zip(x.dims())
        .map(|(a, b)| a + b)
        .collect();
    for arc in enumerate_arcs(n)? {
        let e = arc_module(&arc, n)?;
        if e.dims() != target.as_slice() {
            continue;
        }
        let Some(f) = find_injective(&hom_basis(pivot, &e)?) else {
            continue;
        };
        if is_isomorphic(&morphism_parts(&f)?.cokernel, x)? {
            return Ok(e);
        }
    }
    Err(Error::Inconsistent(format!(
        "no arc module realizes an extension with dimension vector {target:?}"
    )))
}

/// Left mutation of a 2-term collection at position `i`, computed from
/// homs, extensions and (co)kernels of the modules alone.
pub fn mutate_smc_modules(x: &TwoTermCollection, i: usize) -> Result<TwoTermCollection> {
    let len = x.len();
    if i == 0 || i > len {
        return Err(Error::IndexOutOfRange { index: i, max: len });
    }
    let pivot = &x.members[i - 1];
    if pivot.shift != 0 {
        return Err(Error::WrongColor(format!("member {i} is shifted")));
    }
    let p = &pivot.module;
    let mut out = Vec::with_capacity(len);
    for (j, m) in x.members.iter().enumerate() {
        if j + 1 == i {
            out.push(Member {
                module: p.clone(),
                shift: 1,
            });
            continue;
        }
        let next = if m.shift == 0 {
            match ext1_dim(&m.module, p)? {
                0 => m.clone(),
                1 => Member {
                    module: extension_middle(p, &m.module)?,
                    shift: 0,
                },
                d => {
                    return Err(Error::Inconsistent(format!(
                        "Ext^1 of member {} by the pivot has dimension {d}",
                        j + 1
                    )))
                }
            }
        } else {
            let basis = hom_basis(&m.module, p)?;
            match basis.as_slice() {
                [] => m.clone(),
                [f] => {
                    let parts = morphism_parts(f)?;
                    if f.is_injective() {
                        Member {
                            module: parts.cokernel,
                            shift: 0,
                        }
                    } else if f.is_surjective() {
                        Member {
                            module: parts.kernel,
                            shift: 1,
                        }
                    } else {
                        return Err(Error::Inconsistent(format!(
                            "map from member {} to the pivot is neither injective nor surjective",
                            j + 1
                        )));
                    }
                }
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "Hom from member {} to the pivot has dimension {}",
                        j + 1,
                        basis.len()
                    )))
                }
            }
        };
        out.push(next);
    }
    TwoTermCollection::new(out)
}

/// Mutation graph: one vertex per permutation (lexicographic), one edge
/// per left mutation, ordered by source then position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hasse {
    pub n: usize,
    pub vertices: Vec<Permutation>,
    pub edges: Vec<HasseEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub source: usize,
    pub target: usize,
    pub position: usize,
}

pub const HASSE_CAP: usize = 6;

pub fn hasse(n: usize, exec: Exec) -> Result<Hasse> {
    if n == 0 {
        return Err(Error::Shape("rank must be at least 1".into()));
    }
    if n > HASSE_CAP {
        return Err(Error::CapExceeded { n, cap: HASSE_CAP });
    }
    let vertices = Permutation::all(n);
    let index: std::collections::HashMap<Vec<usize>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, w)| (w.word().to_vec(), k))
        .collect();
    let per_vertex = exec.map(&vertices, |w| -> Result<Vec<(usize, Vec<usize>)>> {
        let d = double_diagram(w);
        (1..=n)
            .filter(|&i| d.at(i).color == Color::Green)
            .map(|i| Ok((i, mutate_dad(&d, i, Direction::Left)?.word()?)))
            .collect()
    });
    let mut edges = Vec::new();
    for (source, targets) in per_vertex.into_iter().enumerate() {
        for (position, word) in targets? {
            edges.push(HasseEdge {
                source,
                target: index[&word],
                position,
            });
        }
    }
    Ok(Hasse { n, vertices, edges })
}

impl Hasse {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for w in &self.vertices {
            out.push_str(&format!("  \"{w}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"mu{}\"];\n",
                self.vertices[e.source], self.vertices[e.target], e.position
            ));
        }
        out.push_str("}\n");
        out
    }
}
