//! Arrow sequences of arcs and the graph-map basis of `Hom` between arc
//! modules.

use std::fmt;

use num::One;
use serde::Serialize;

use crate::arc::{Arc, Side};
use crate::error::Result;
use crate::linalg::{Matrix, Q};
use crate::quiver::{Dir, Letter};
use crate::rep::{arc_module, Morphism};

/// A walk along consecutive vertices, starting at `start`.
///
/// Letter `k` (0-based) joins `v_{start+k}` and `v_{start+k+1}`. The empty
/// sequence stands for the idempotent at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrowSequence {
    start: usize,
    letters: Vec<Letter>,
}

impl ArrowSequence {
    pub fn start(&self) -> usize {
        self.start
    }

    /// Last vertex visited.
    pub fn end(&self) -> usize {
        self.start + self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The piece covering vertices `s..=t`.
    pub fn slice(&self, s: usize, t: usize) -> ArrowSequence {
        ArrowSequence {
            start: s,
            letters: self.letters[s - self.start..t - self.start].to_vec(),
        }
    }
}

impl fmt::Display for ArrowSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e{}", self.start);
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for ArrowSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn arrow_sequence(arc: &Arc) -> ArrowSequence {
    let letters = arc
        .interior()
        .map(|m| match arc.side(m).expect("interior point") {
            Side::Below => Letter::direct(m - 1),
            Side::Above => Letter::inverse(m - 1),
        })
        .collect();
    ArrowSequence {
        start: arc.left(),
        letters,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Quotient,
    Submodule,
}

/// A split `b c d` of an arrow sequence, recorded by the vertex interval
/// `[s, t]` of the middle piece `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    kind: FactorKind,
    whole: ArrowSequence,
    s: usize,
    t: usize,
}

impl Factorization {
    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    /// Vertex interval of the middle piece.
    pub fn middle_interval(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn b(&self) -> ArrowSequence {
        self.whole.slice(self.whole.start, self.s)
    }

    pub fn c(&self) -> ArrowSequence {
        self.whole.slice(self.s, self.t)
    }

    pub fn d(&self) -> ArrowSequence {
        self.whole.slice(self.t, self.whole.end())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let piece = |p: ArrowSequence| {
            if p.is_empty() {
                "-".to_string()
            } else {
                p.to_string()
            }
        };
        write!(
            f,
            "({}, {}, {})",
            piece(self.b()),
            self.c(),
            piece(self.d())
        )
    }
}

/// Whether the letters just outside `[s, t]` have the directions a middle
/// piece of this kind needs.
fn flanks_ok(seq: &ArrowSequence, s: usize, t: usize, kind: FactorKind) -> bool {
    // letter before the middle joins v_{s-1}, v_s; letter after joins v_t, v_{t+1}
    let before = (s > seq.start).then(|| seq.letters[s - 1 - seq.start].dir);
    let after = (t < seq.end()).then(|| seq.letters[t - seq.start].dir);
    let (want_before, want_after) = match kind {
        FactorKind::Quotient => (Dir::Inverse, Dir::Direct),
        FactorKind::Submodule => (Dir::Direct, Dir::Inverse),
    };
    before.is_none_or(|d| d == want_before) && after.is_none_or(|d| d == want_after)
}

/// All factorizations of the given kind, ordered by `(|b|, |c|)`.
pub fn factorizations(arc: &Arc, kind: FactorKind) -> Vec<Factorization> {
    let seq = arrow_sequence(arc);
    let mut out = Vec::new();
    for s in seq.start..=seq.end() {
        for t in s..=seq.end() {
            if flanks_ok(&seq, s, t, kind) {
                out.push(Factorization {
                    kind,
                    whole: seq.clone(),
                    s,
                    t,
                });
            }
        }
    }
    out
}

/// A quotient factorization of the source and a submodule factorization of
/// the target with the same middle piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMap {
    source: Arc,
    target: Arc,
    quotient: Factorization,
    submodule: Factorization,
}

impl GraphMap {
    pub fn source(&self) -> &Arc {
        &self.source
    }

    pub fn target(&self) -> &Arc {
        &self.target
    }

    pub fn quotient(&self) -> &Factorization {
        &self.quotient
    }

    pub fn submodule(&self) -> &Factorization {
        &self.submodule
    }

    pub fn middle(&self) -> ArrowSequence {
        self.quotient.c()
    }

    /// The homomorphism `S(source) -> S(middle) -> S(target)`: the identity
    /// on every vertex of the middle, zero elsewhere.
    pub fn to_morphism(&self, n: usize) -> Result<Morphism> {
        let m = arc_module(&self.source, n)?;
        let t = arc_module(&self.target, n)?;
        let (s0, t0) = self.quotient.middle_interval();
        let maps = (1..=n)
            .map(|v| {
                let mut mat = Matrix::zeros(t.dim_at(v), m.dim_at(v));
                if (s0..=t0).contains(&v) {
                    mat.set(0, 0, Q::one());
                }
                mat
            })
            .collect();
        Morphism::new(m, t, maps)
    }
}

pub fn graph_maps(alpha: &Arc, beta: &Arc) -> Vec<GraphMap> {
    let subs = factorizations(beta, FactorKind::Submodule);
    let mut out = Vec::new();
    for qf in factorizations(alpha, FactorKind::Quotient) {
        for sf in &subs {
            if qf.middle_interval() == sf.middle_interval() && qf.c() == sf.c() {
                out.push(GraphMap {
                    source: *alpha,
                    target: *beta,
                    quotient: qf.clone(),
                    submodule: sf.clone(),
                });
            }
        }
    }
    out
}

pub fn graph_map_count(alpha: &Arc, beta: &Arc) -> usize {
    graph_maps(alpha, beta).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::enumerate_arcs;
    use crate::rep::hom_dim;

    fn arc(l: usize, r: usize, above: &[usize]) -> Arc {
        Arc::new(l, r, above).unwrap()
    }

    fn shapes(fs: &[Factorization]) -> Vec<String> {
        fs.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn arrow_sequence_examples() {
        assert_eq!(
            arrow_sequence(&arc(1, 7, &[4, 6])).to_string(),
            "a1 a2 a3- a4 a5-"
        );
        assert_eq!(arrow_sequence(&arc(3, 4, &[])).to_string(), "e3");
        assert_eq!(arrow_sequence(&arc(1, 3, &[2])).to_string(), "a1-");
    }

    #[test]
    fn factorization_examples() {
        let a1 = arc(1, 3, &[]);
        assert_eq!(
            shapes(&factorizations(&a1, FactorKind::Quotient)),
            ["(-, e1, a1)", "(-, a1, -)"]
        );
        let a1m = arc(1, 3, &[2]);
        assert_eq!(
            shapes(&factorizations(&a1m, FactorKind::Submodule)),
            ["(-, e1, a1-)", "(-, a1-, -)"]
        );
        let e = arc(2, 3, &[]);
        assert_eq!(
            shapes(&factorizations(&e, FactorKind::Quotient)),
            ["(-, e2, -)"]
        );
        // every factorization reassembles the whole sequence
        for f in factorizations(&arc(1, 6, &[3, 4]), FactorKind::Quotient) {
            let mut all = f.b().letters().to_vec();
            all.extend(f.c().letters());
            all.extend(f.d().letters());
            assert_eq!(all, arrow_sequence(&arc(1, 6, &[3, 4])).letters());
        }
    }

    #[test]
    fn graph_map_examples() {
        assert_eq!(graph_map_count(&arc(1, 3, &[]), &arc(1, 2, &[])), 1);
        assert_eq!(graph_map_count(&arc(1, 2, &[]), &arc(1, 3, &[])), 0);
        assert_eq!(graph_map_count(&arc(1, 2, &[]), &arc(3, 4, &[])), 0);
        for a in enumerate_arcs(4).unwrap() {
            assert_eq!(graph_map_count(&a, &a), 1, "{a}");
        }
    }

    #[test]
    fn matches_linear_algebra_n3() {
        let n = 3;
        let arcs = enumerate_arcs(n).unwrap();
        for a in &arcs {
            for b in &arcs {
                let maps = graph_maps(a, b);
                let hd = hom_dim(&arc_module(a, n).unwrap(), &arc_module(b, n).unwrap()).unwrap();
                assert_eq!(maps.len(), hd, "{a} -> {b}");
                let coords: Vec<Vec<Q>> = maps
                    .iter()
                    .map(|g| g.to_morphism(n).unwrap().coordinates())
                    .collect();
                if let Some(first) = coords.first() {
                    let m = Matrix::from_rows(coords.clone(), first.len());
                    assert_eq!(m.rank(), coords.len());
                }
            }
        }
    }
}
