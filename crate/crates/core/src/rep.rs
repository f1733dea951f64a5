//! Representations of the preprojective algebra of type `A_n`, realized as
//! representations of the doubled quiver satisfying the vertex relations.
//!
//! All arithmetic is exact. `Hom` is computed as the solution space of the
//! commuting-square system; `Ext^1` only through the dimension formula
//! `dim Ext^1(M,N) = hom(M,N) + hom(N,M) - (dim M, dim N)`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arc::{Arc, Side};
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};
use crate::quiver::{Dir, Letter, Path};

/// Dimension vector `(x_1, .., x_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &DimVector) -> Result<DimVector> {
        check_len(self, other)?;
        Ok(DimVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

fn check_len(x: &DimVector, y: &DimVector) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::Shape(format!(
            "dimension vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(())
}

/// Symmetric form `(x, y) = sum 2 x_i y_i - sum_{a: i -> j} x_i y_j`, both
/// arrow directions counted.
pub fn bilinear(x: &DimVector, y: &DimVector) -> Result<i64> {
    check_len(x, y)?;
    let (x, y): (Vec<i64>, Vec<i64>) = (
        x.0.iter().map(|&v| v as i64).collect(),
        y.0.iter().map(|&v| v as i64).collect(),
    );
    let diag: i64 = x.iter().zip(&y).map(|(a, b)| 2 * a * b).sum();
    let off: i64 = (0..x.len().saturating_sub(1))
        .map(|i| x[i] * y[i + 1] + x[i + 1] * y[i])
        .sum();
    Ok(diag - off)
}

/// Tits form `q(x) = x_1^2 + sum (x_i - x_{i+1})^2 + x_n^2`.
pub fn quad(x: &DimVector) -> i64 {
    let v: Vec<i64> = x.0.iter().map(|&a| a as i64).collect();
    let Some((first, last)) = v.first().zip(v.last()) else {
        return 0;
    };
    first * first + last * last + v.windows(2).map(|w| (w[0] - w[1]).pow(2)).sum::<i64>()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    dims: Vec<usize>,
    /// `forward[i-1]` is `a_i : v_i -> v_{i+1}` (shape `dims[i] x dims[i-1]`).
    forward: Vec<Matrix>,
    /// `backward[i-1]` is `a_i^- : v_{i+1} -> v_i`.
    backward: Vec<Matrix>,
}

impl Representation {
    pub fn new(dims: Vec<usize>, forward: Vec<Matrix>, backward: Vec<Matrix>) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::Shape("rank must be at least 1".into()));
        }
        if forward.len() != n - 1 || backward.len() != n - 1 {
            return Err(Error::Shape(format!(
                "expected {} maps per direction, got {} and {}",
                n - 1,
                forward.len(),
                backward.len()
            )));
        }
        for i in 0..n - 1 {
            if forward[i].shape() != (dims[i + 1], dims[i]) {
                return Err(Error::Shape(format!(
                    "a{} has shape {:?}, expected {:?}",
                    i + 1,
                    forward[i].shape(),
                    (dims[i + 1], dims[i])
                )));
            }
            if backward[i].shape() != (dims[i], dims[i + 1]) {
                return Err(Error::Shape(format!(
                    "a{}- has shape {:?}, expected {:?}",
                    i + 1,
                    backward[i].shape(),
                    (dims[i], dims[i + 1])
                )));
            }
        }
        Ok(Self {
            dims,
            forward,
            backward,
        })
    }

    pub fn zero(dims: Vec<usize>) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::Shape("rank must be at least 1".into()));
        }
        let forward = (0..n - 1)
            .map(|i| Matrix::zeros(dims[i + 1], dims[i]))
            .collect();
        let backward = (0..n - 1)
            .map(|i| Matrix::zeros(dims[i], dims[i + 1]))
            .collect();
        Self::new(dims, forward, backward)
    }

    /// The simple module at vertex `k`.
    pub fn simple(n: usize, k: usize) -> Self {
        let mut dims = vec![0; n];
        dims[k - 1] = 1;
        Self::zero(dims).expect("n >= 1")
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Dimension at vertex `v` (1-based).
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn map(&self, letter: Letter) -> &Matrix {
        match letter.dir {
            Dir::Direct => &self.forward[letter.index - 1],
            Dir::Inverse => &self.backward[letter.index - 1],
        }
    }

    fn map_mut(&mut self, letter: Letter) -> &mut Matrix {
        match letter.dir {
            Dir::Direct => &mut self.forward[letter.index - 1],
            Dir::Inverse => &mut self.backward[letter.index - 1],
        }
    }

    /// Replaces one arrow's matrix, checking its shape.
    pub fn with_map(mut self, letter: Letter, m: Matrix) -> Result<Self> {
        letter.check_rank(self.n())?;
        let expected = (self.dim_at(letter.target()), self.dim_at(letter.source()));
        if m.shape() != expected {
            return Err(Error::Shape(format!(
                "{letter} needs shape {expected:?}, got {:?}",
                m.shape()
            )));
        }
        *self.map_mut(letter) = m;
        Ok(self)
    }

    /// Every arrow of the doubled quiver, direct before inverse per index.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        let n = self.n();
        (1..n).flat_map(|i| [Letter::direct(i), Letter::inverse(i)])
    }

    /// Vertex relations `a_i^- a_i - a_{i-1} a_{i-1}^- = 0` at every `v_i`
    /// (composites read in traversal order), with `a_0 = a_n = 0`.
    pub fn check_relations(&self) -> bool {
        self.first_relation_failure().is_none()
    }

    /// The first vertex whose relation does not vanish.
    pub fn first_relation_failure(&self) -> Option<usize> {
        let n = self.n();
        for v in 1..=n {
            let d = self.dims[v - 1];
            let mut total = Matrix::zeros(d, d);
            if v < n {
                // v_v -> v_{v+1} -> v_v
                total = total.add(
                    &self
                        .map(Letter::inverse(v))
                        .mul(self.map(Letter::direct(v))),
                );
            }
            if v > 1 {
                // v_v -> v_{v-1} -> v_v
                total = total.sub(
                    &self
                        .map(Letter::direct(v - 1))
                        .mul(self.map(Letter::inverse(v - 1))),
                );
            }
            if !total.is_zero() {
                return Some(v);
            }
        }
        None
    }

    /// Composite matrix of a path, acting on column vectors.
    pub fn path_matrix(&self, path: &Path) -> Result<Matrix> {
        path.check_composable(self.n())?;
        Ok(match path {
            Path::Idempotent(k) => Matrix::identity(self.dim_at(*k)),
            Path::Arrows(letters) => {
                let mut acc = Matrix::identity(self.dim_at(letters[0].source()));
                for l in letters {
                    acc = self.map(*l).mul(&acc);
                }
                acc
            }
        })
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Representation");
        s.field("dims", &self.dims);
        for l in self.letters() {
            let m = self.map(l);
            if !m.is_zero() {
                s.field(&l.to_string(), m);
            }
        }
        s.finish()
    }
}

/// The arc module `S(arc)`: `K` on `v_p .. v_{q-1}`, and for each interior
/// point `m` the identity on `a_{m-1}` when the arc passes below `m`, on
/// `a_{m-1}^-` when it passes above.
pub fn arc_module(arc: &Arc, n: usize) -> Result<Representation> {
    if arc.right() > n + 1 {
        return Err(Error::InvalidArc(format!("{arc} does not fit rank {n}")));
    }
    let mut dims = vec![0; n];
    for v in arc.left()..arc.right() {
        dims[v - 1] = 1;
    }
    let mut rep = Representation::zero(dims)?;
    for m in arc.interior() {
        let letter = match arc.side(m).expect("interior point") {
            Side::Below => Letter::direct(m - 1),
            Side::Above => Letter::inverse(m - 1),
        };
        *rep.map_mut(letter) = Matrix::identity(1);
    }
    Ok(rep)
}

#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and every commuting square.
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        let n = source.n();
        if target.n() != n || maps.len() != n {
            return Err(Error::Shape("morphism rank mismatch".into()));
        }
        for v in 1..=n {
            if maps[v - 1].shape() != (target.dim_at(v), source.dim_at(v)) {
                return Err(Error::Shape(format!(
                    "vertex map at v{v} has the wrong shape"
                )));
            }
        }
        let f = Self {
            source,
            target,
            maps,
        };
        if let Some(l) = f.first_noncommuting() {
            return Err(Error::Inconsistent(format!(
                "square for {l} does not commute"
            )));
        }
        Ok(f)
    }

    pub fn identity(m: &Representation) -> Self {
        let maps = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        Self {
            source: m.clone(),
            target: m.clone(),
            maps,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let maps = (1..=source.n())
            .map(|v| Matrix::zeros(target.dim_at(v), source.dim_at(v)))
            .collect();
        Self {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    /// Vertex map at `v` (1-based).
    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v - 1]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    fn first_noncommuting(&self) -> Option<Letter> {
        self.source.letters().find(|&l| {
            let lhs = self.at(l.target()).mul(self.source.map(l));
            let rhs = self.target.map(l).mul(self.at(l.source()));
            lhs != rhs
        })
    }

    pub fn is_valid(&self) -> bool {
        self.first_noncommuting().is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// Flattened vertex matrices, the coordinates used by the hom solver.
    pub fn coordinates(&self) -> Vec<Q> {
        self.maps
            .iter()
            .flat_map(|m| (0..m.rows()).flat_map(move |r| m.row(r).to_vec()))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("maps", &self.maps)
            .finish()
    }
}

/// Offsets of each vertex block in the unknown vector of the hom system.
fn hom_layout(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(m.n());
    let mut total = 0;
    for v in 0..m.n() {
        offsets.push(total);
        total += n.dims[v] * m.dims[v];
    }
    (offsets, total)
}

/// Coefficient matrix of `phi_t M(a) - N(a) phi_s = 0` over every arrow.
fn hom_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>, usize) {
    let (offsets, unknowns) = hom_layout(m, n);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for l in m.letters() {
        let (s, t) = (l.source() - 1, l.target() - 1);
        let ma = m.map(l);
        let na = n.map(l);
        if ma.is_zero() && na.is_zero() {
            continue;
        }
        let (ms, mt, nt) = (m.dims[s], m.dims[t], n.dims[t]);
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![Q::zero(); unknowns];
                // phi_t[r, k] * M(a)[k, c]
                for k in 0..mt {
                    let coeff = ma.get(k, c);
                    if !coeff.is_zero() {
                        row[offsets[t] + r * mt + k] += coeff;
                    }
                }
                // - N(a)[r, k] * phi_s[k, c]
                for k in 0..n.dims[s] {
                    let coeff = na.get(r, k);
                    if !coeff.is_zero() {
                        row[offsets[s] + k * ms + c] -= coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    (Matrix::from_rows(rows, unknowns), offsets, unknowns)
}

fn check_same_rank(m: &Representation, n: &Representation) -> Result<()> {
    if m.n() != n.n() {
        return Err(Error::RankMismatch(m.n(), n.n()));
    }
    Ok(())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    check_same_rank(m, n)?;
    let (sys, _, unknowns) = hom_system(m, n);
    Ok(unknowns - sys.rank())
}

/// A basis of `Hom(M, N)` read off the reduced echelon form of the
/// commuting-square system (free unknowns in vertex-major order).
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    check_same_rank(m, n)?;
    let (sys, offsets, _) = hom_system(m, n);
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|v| {
            let maps = (0..m.n())
                .map(|i| {
                    let (r, c) = (n.dims[i], m.dims[i]);
                    let mut mat = Matrix::zeros(r, c);
                    for a in 0..r {
                        for b in 0..c {
                            mat.set(a, b, v[offsets[i] + a * c + b].clone());
                        }
                    }
                    mat
                })
                .collect();
            Morphism {
                source: m.clone(),
                target: n.clone(),
                maps,
            }
        })
        .collect())
}

/// Kernel, image and cokernel of a morphism as representations.
#[derive(Debug, Clone)]
pub struct MorphismParts {
    pub kernel: Representation,
    pub image: Representation,
    pub cokernel: Representation,
}

pub fn morphism_parts(f: &Morphism) -> Result<MorphismParts> {
    let (src, tgt) = (&f.source, &f.target);
    let n = src.n();
    // per-vertex bases: kernel in the source, image and a complement in the target
    let mut ker_basis = Vec::with_capacity(n);
    let mut img_basis = Vec::with_capacity(n);
    let mut full_basis = Vec::with_capacity(n);
    let mut comp_dims = Vec::with_capacity(n);
    for v in 1..=n {
        let phi = f.at(v);
        let ker = Matrix::from_columns(&phi.nullspace(), src.dim_at(v));
        let img = phi.column_basis();
        // extend the image basis by standard vectors
        let d = tgt.dim_at(v);
        let mut cols: Vec<Vec<Q>> = (0..img.cols()).map(|c| img.column(c)).collect();
        let mut rank = img.cols();
        let mut comp = 0;
        for e in 0..d {
            let mut unit = vec![Q::zero(); d];
            unit[e] = Q::one();
            cols.push(unit);
            if Matrix::from_columns(&cols, d).rank() > rank {
                rank += 1;
                comp += 1;
            } else {
                cols.pop();
            }
        }
        ker_basis.push(ker);
        img_basis.push(img);
        full_basis.push(Matrix::from_columns(&cols, d));
        comp_dims.push(comp);
    }
    let induced = |basis: &[Matrix], rep: &Representation, l: Letter| -> Result<Matrix> {
        let (s, t) = (l.source() - 1, l.target() - 1);
        let moved = rep.map(l).mul(&basis[s]);
        basis[t]
            .solve(&moved)
            .ok_or_else(|| Error::Inconsistent(format!("subspace not stable under {l}")))
    };
    let build =
        |dims: Vec<usize>, maps: &dyn Fn(Letter) -> Result<Matrix>| -> Result<Representation> {
            let mut rep = Representation::zero(dims)?;
            for l in rep.letters().collect::<Vec<_>>() {
                let m = maps(l)?;
                rep = rep.with_map(l, m)?;
            }
            Ok(rep)
        };
    let kernel = build(ker_basis.iter().map(Matrix::cols).collect(), &|l| {
        induced(&ker_basis, src, l)
    })?;
    let image = build(img_basis.iter().map(Matrix::cols).collect(), &|l| {
        induced(&img_basis, tgt, l)
    })?;
    let cokernel = build(comp_dims.clone(), &|l| {
        let (s, t) = (l.source() - 1, l.target() - 1);
        let img_s = img_basis[s].cols();
        let img_t = img_basis[t].cols();
        // complement vectors of v_s, pushed along l, in the full basis of v_t
        let comp_s: Vec<Vec<Q>> = (img_s..full_basis[s].cols())
            .map(|c| full_basis[s].column(c))
            .collect();
        let moved = tgt
            .map(l)
            .mul(&Matrix::from_columns(&comp_s, tgt.dim_at(l.source())));
        let coords = full_basis[t]
            .solve(&moved)
            .ok_or_else(|| Error::Inconsistent("basis extension is not a basis".into()))?;
        let mut out = Matrix::zeros(comp_dims[t], comp_dims[s]);
        for r in 0..comp_dims[t] {
            for c in 0..comp_dims[s] {
                out.set(r, c, coords.get(img_t + r, c).clone());
            }
        }
        Ok(out)
    })?;
    Ok(MorphismParts {
        kernel,
        image,
        cokernel,
    })
}

/// `dim Ext^1(M, N)` from the hom dimensions and the symmetric form.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let homs = (hom_dim(m, n)? + hom_dim(n, m)?) as i64;
    let form = bilinear(&m.dim_vector(), &n.dim_vector())?;
    let ext = homs - form;
    if ext < 0 {
        return Err(Error::Inconsistent(format!(
            "negative Ext^1 dimension {ext} (homs {homs}, form {form})"
        )));
    }
    Ok(ext as usize)
}

pub fn is_brick(m: &Representation) -> bool {
    hom_dim(m, m).map(|d| d == 1).unwrap_or(false)
}

/// Bricks with vanishing homs between distinct members in both directions.
pub fn is_semibrick(members: &[Representation]) -> bool {
    members.iter().all(is_brick)
        && members.iter().enumerate().all(|(i, a)| {
            members
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || hom_dim(a, b).map(|d| d == 0).unwrap_or(false))
        })
}

pub fn path_action_is_zero(m: &Representation, path: &Path) -> Result<bool> {
    Ok(m.path_matrix(path)?.is_zero())
}

/// Whether some homomorphism `M -> N` is invertible at every vertex.
///
/// For each vertex the determinant of a generic combination of the hom
/// basis is a polynomial in the coefficients, and an isomorphism exists
/// iff all of them are nonzero polynomials. One-dimensional vertices are
/// decided exactly; larger blocks by seeded random evaluation.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    check_same_rank(m, n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    let basis = hom_basis(m, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for v in 1..=m.n() {
        let d = m.dim_at(v);
        if d == 0 {
            continue;
        }
        let blocks: Vec<&Matrix> = basis.iter().map(|f| f.at(v)).collect();
        let ok = if d == 1 {
            blocks.iter().any(|b| !b.is_zero())
        } else {
            (0..24).any(|_| {
                let mut sum = Matrix::zeros(d, d);
                for b in &blocks {
                    sum = sum.add(&b.scale(&q(rng.gen_range(-(1 << 20)..(1 << 20)))));
                }
                sum.is_invertible()
            })
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    dims: Vec<usize>,
    arrows: BTreeMap<String, Vec<Vec<String>>>,
}

impl From<&Representation> for RepresentationJson {
    fn from(rep: &Representation) -> Self {
        let arrows = rep
            .letters()
            .map(|l| {
                let m = rep.map(l);
                let rows = (0..m.rows())
                    .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                    .collect();
                (l.to_string(), rows)
            })
            .collect();
        Self {
            dims: rep.dims.clone(),
            arrows,
        }
    }
}

impl TryFrom<RepresentationJson> for Representation {
    type Error = Error;

    fn try_from(raw: RepresentationJson) -> Result<Self> {
        let mut rep = Representation::zero(raw.dims)?;
        for (name, rows) in raw.arrows {
            let letter: Letter = name.parse()?;
            letter.check_rank(rep.n())?;
            let (r, c) = (rep.dim_at(letter.target()), rep.dim_at(letter.source()));
            // a 0 x c matrix may be written as [] regardless of c
            let rows = if r == 0 { Vec::new() } else { rows };
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Shape(format!("{name} must be {r} x {c}")));
            }
            let parsed = rows
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|s| {
                            s.trim()
                                .parse::<Q>()
                                .map_err(|_| Error::Parse(format!("bad rational \"{s}\"")))
                        })
                        .collect::<Result<Vec<Q>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            rep = rep.with_map(letter, Matrix::from_rows(parsed, c))?;
        }
        Ok(rep)
    }
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RepresentationJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RepresentationJson::deserialize(deserializer)?;
        Representation::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::enumerate_arcs;

    fn arc(l: usize, r: usize, above: &[usize]) -> Arc {
        Arc::new(l, r, above).unwrap()
    }

    fn s(a: Arc, n: usize) -> Representation {
        arc_module(&a, n).unwrap()
    }

    fn dv(v: &[usize]) -> DimVector {
        DimVector(v.to_vec())
    }

    #[test]
    fn arc_module_examples() {
        let m = s(arc(1, 7, &[4, 6]), 7);
        assert_eq!(m.dims(), &[1, 1, 1, 1, 1, 1, 0]);
        let nonzero: Vec<String> = m
            .letters()
            .filter(|&l| !m.map(l).is_zero())
            .map(|l| l.to_string())
            .collect();
        assert_eq!(nonzero, ["a1", "a2", "a3-", "a4", "a5-"]);
        assert_eq!(s(arc(2, 3, &[]), 3), Representation::simple(3, 2));
        let high = s(arc(1, 3, &[2]), 2);
        assert_eq!(high.dims(), &[1, 1]);
        assert!(high.map(Letter::direct(1)).is_zero());
        assert_eq!(high.map(Letter::inverse(1)), &Matrix::identity(1));
    }

    #[test]
    fn relations_examples() {
        for n in 1..=4 {
            for a in enumerate_arcs(n).unwrap() {
                assert!(s(a, n).check_relations(), "{a}");
            }
        }
        let both = Representation::zero(vec![1, 1])
            .unwrap()
            .with_map(Letter::direct(1), Matrix::identity(1))
            .unwrap()
            .with_map(Letter::inverse(1), Matrix::identity(1))
            .unwrap();
        assert!(!both.check_relations());
        assert_eq!(both.first_relation_failure(), Some(1));
        assert!(Representation::zero(vec![0, 0, 0])
            .unwrap()
            .check_relations());
    }

    #[test]
    fn hom_examples() {
        let low = s(arc(1, 3, &[]), 2);
        let s1 = s(arc(1, 2, &[]), 2);
        assert_eq!(hom_dim(&low, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &low).unwrap(), 0);
        for n in 1..=3 {
            for a in enumerate_arcs(n).unwrap() {
                assert_eq!(hom_dim(&s(a, n), &s(a, n)).unwrap(), 1);
            }
        }
        assert_eq!(
            hom_dim(&s(arc(1, 2, &[]), 3), &s(arc(3, 4, &[]), 3)).unwrap(),
            0
        );
        for f in hom_basis(&low, &s1).unwrap() {
            assert!(f.is_valid());
        }
    }

    #[test]
    fn morphism_parts_examples() {
        let s1 = s(arc(1, 2, &[]), 2);
        let high = s(arc(1, 3, &[2]), 2);
        let basis = hom_basis(&s1, &high).unwrap();
        assert_eq!(basis.len(), 1);
        let parts = morphism_parts(&basis[0]).unwrap();
        assert!(parts.kernel.is_zero());
        assert!(is_isomorphic(&parts.cokernel, &Representation::simple(2, 2)).unwrap());
        assert!(is_isomorphic(&parts.image, &s1).unwrap());

        let id = Morphism::identity(&high);
        let parts = morphism_parts(&id).unwrap();
        assert!(parts.kernel.is_zero() && parts.cokernel.is_zero());

        let zero = Morphism::zero(&high, &s1);
        let parts = morphism_parts(&zero).unwrap();
        assert_eq!(parts.kernel, high);
        assert_eq!(parts.cokernel, s1);
    }

    #[test]
    fn exactness_of_parts() {
        let n = 3;
        let arcs = enumerate_arcs(n).unwrap();
        for a in &arcs {
            for b in &arcs {
                for f in hom_basis(&s(*a, n), &s(*b, n)).unwrap() {
                    let parts = morphism_parts(&f).unwrap();
                    for v in 1..=n {
                        assert_eq!(
                            parts.kernel.dim_at(v) + parts.image.dim_at(v),
                            f.source().dim_at(v)
                        );
                        assert_eq!(
                            parts.image.dim_at(v) + parts.cokernel.dim_at(v),
                            f.target().dim_at(v)
                        );
                    }
                    assert!(parts.kernel.check_relations() && parts.cokernel.check_relations());
                }
            }
        }
    }

    #[test]
    fn forms() {
        assert_eq!(bilinear(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        for n in 1..=6 {
            assert_eq!(quad(&DimVector(vec![1; n])), 2);
            assert_eq!(quad(&DimVector(vec![0; n])), 0);
        }
        assert!(bilinear(&dv(&[1]), &dv(&[1, 0])).is_err());
        for x in [[1, 2, 0], [0, 1, 1], [3, 1, 2]] {
            assert_eq!(quad(&dv(&x)), bilinear(&dv(&x), &dv(&x)).unwrap());
        }
    }

    #[test]
    fn ext_examples() {
        let (s1, s2) = (Representation::simple(2, 1), Representation::simple(2, 2));
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
        for a in enumerate_arcs(3).unwrap() {
            assert_eq!(ext1_dim(&s(a, 3), &s(a, 3)).unwrap(), 0);
        }
        let (a, b) = (s(arc(1, 2, &[]), 3), s(arc(3, 4, &[]), 3));
        assert_eq!(ext1_dim(&a, &b).unwrap(), 0);
        assert_eq!(ext1_dim(&b, &a).unwrap(), 0);
    }

    #[test]
    fn brick_examples() {
        let zero_maps = Representation::zero(vec![1, 1]).unwrap();
        assert!(!is_brick(&zero_maps));
        assert_eq!(hom_dim(&zero_maps, &zero_maps).unwrap(), 2);
        assert!(is_semibrick(&[s(arc(1, 2, &[]), 3), s(arc(3, 4, &[]), 3)]));
        assert!(!is_semibrick(&[s(arc(1, 2, &[]), 2), s(arc(1, 3, &[]), 2)]));
    }

    #[test]
    fn path_action_examples() {
        let m = s(arc(1, 4, &[]), 3);
        assert!(!path_action_is_zero(&m, &"a1 a2".parse().unwrap()).unwrap());
        let high = s(arc(1, 3, &[2]), 2);
        assert!(path_action_is_zero(&high, &"a1 a1-".parse().unwrap()).unwrap());
        assert!(!path_action_is_zero(&high, &Path::Idempotent(2)).unwrap());
        assert!(path_action_is_zero(&high, &"a1 a1".parse().unwrap()).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let high = s(arc(1, 3, &[2]), 2);
        let low = s(arc(1, 3, &[]), 2);
        assert!(is_isomorphic(&high, &high).unwrap());
        assert!(!is_isomorphic(&high, &low).unwrap());
        assert!(
            !is_isomorphic(&Representation::simple(2, 1), &Representation::simple(2, 2)).unwrap()
        );
        // a rescaled copy is still isomorphic
        let scaled = high
            .clone()
            .with_map(Letter::inverse(1), Matrix::from_i64(&[&[5]]))
            .unwrap();
        assert!(is_isomorphic(&high, &scaled).unwrap());
    }

    #[test]
    fn isomorphism_on_two_dimensional_blocks() {
        // S1 + S1 at n = 1 versus itself with a basis change
        let m = Representation::zero(vec![2]).unwrap();
        assert!(is_isomorphic(&m, &m).unwrap());
        let n = 2;
        let a = s(arc(1, 3, &[]), n);
        let sum = direct_sum(&a, &Representation::simple(n, 1));
        let other = direct_sum(&s(arc(1, 3, &[2]), n), &Representation::simple(n, 1));
        assert!(is_isomorphic(&sum, &sum).unwrap());
        assert!(!is_isomorphic(&sum, &other).unwrap());
    }

    fn direct_sum(a: &Representation, b: &Representation) -> Representation {
        let dims: Vec<usize> = a.dims().iter().zip(b.dims()).map(|(x, y)| x + y).collect();
        let mut rep = Representation::zero(dims).unwrap();
        for l in a.letters().collect::<Vec<_>>() {
            let (ma, mb) = (a.map(l), b.map(l));
            let mut m = Matrix::zeros(ma.rows() + mb.rows(), ma.cols() + mb.cols());
            for r in 0..ma.rows() {
                for c in 0..ma.cols() {
                    m.set(r, c, ma.get(r, c).clone());
                }
            }
            for r in 0..mb.rows() {
                for c in 0..mb.cols() {
                    m.set(ma.rows() + r, ma.cols() + c, mb.get(r, c).clone());
                }
            }
            rep = rep.with_map(l, m).unwrap();
        }
        rep
    }

    #[test]
    fn json_roundtrip() {
        let m = s(arc(1, 3, &[2]), 2);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"dims":[1,1],"arrows":{"a1":[["0"]],"a1-":[["1"]]}}"#
        );
        let back: Representation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        let half: Representation =
            serde_json::from_str(r#"{"dims":[1,1],"arrows":{"a1":[["1/2"]]}}"#).unwrap();
        assert_eq!(half.map(Letter::direct(1)).get(0, 0), &(q(1) / q(2)));
        assert!(serde_json::from_str::<Representation>(
            r#"{"dims":[1,1],"arrows":{"a1":[["1","2"]]}}"#
        )
        .is_err());
    }
}
