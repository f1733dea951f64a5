//! Named cross-checks between the combinatorial and the linear-algebra
//! sides, runnable up to a rank bound.
//!
//! Every check walks ranks upwards and items in a fixed order, so the first
//! failure reported is the smallest counterexample.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::{
    check_nad, count_nad, diagram_to_permutation, double_diagram, enumerate_arcs, restrict_green,
    Arc, Color,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mutation::{mutate_dad, mutate_smc_modules, psi, smc_axiom_failure, smc_leq, Direction};
use crate::par::Exec;
use crate::perm::Permutation;
use crate::quotients::{
    family_count, is_alternating_arc, is_right_arc, nad_ideal_filter, Family, MonomialIdealSpec,
};
use crate::rep::{arc_module, ext1_dim, hom_dim, is_brick, quad};
use crate::string_hom::graph_maps;

/// Largest rank checked exhaustively.
pub const CHECK_FULL_CAP: usize = 4;
/// Largest rank accepted at all; the top rank is sampled where exhaustive
/// runs would be slow.
pub const CHECK_CAP: usize = 5;

const SAMPLE_SEED: u64 = 0x0a5c;
const PAIR_SAMPLES: usize = 2000;
const MUTATION_SAMPLES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Bijection,
    Homs,
    Mutation,
    Order,
    Quotients,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Bijection,
        Suite::Homs,
        Suite::Mutation,
        Suite::Order,
        Suite::Quotients,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Bijection => "bijection",
            Suite::Homs => "homs",
            Suite::Mutation => "mutation",
            Suite::Order => "order",
            Suite::Quotients => "quotients",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bijection" => Suite::Bijection,
            "homs" => Suite::Homs,
            "mutation" => Suite::Mutation,
            "order" => Suite::Order,
            "quotients" => Suite::Quotients,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite \"{s}\""))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub suite: Suite,
    pub max_n: usize,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: ok ({} checks, n <= {})",
                self.suite, self.checked, self.max_n
            ),
            Some(c) => write!(f, "{}: FAILED at {c}", self.suite),
        }
    }
}

/// Runs one suite (or all of them) for ranks `1 ..= max_n`.
pub fn run(suite: Suite, max_n: usize, exec: Exec) -> Result<Vec<Outcome>> {
    if max_n > CHECK_CAP {
        return Err(Error::CapExceeded {
            n: max_n,
            cap: CHECK_CAP,
        });
    }
    if max_n == 0 {
        return Err(Error::Shape("rank must be at least 1".into()));
    }
    let suites: &[Suite] = match suite {
        Suite::All => &Suite::EACH,
        _ => std::slice::from_ref(&suite),
    };
    suites
        .iter()
        .map(|&s| {
            let mut checked = 0;
            for n in 1..=max_n {
                let (count, failure) = match s {
                    Suite::Bijection => bijection(n, exec)?,
                    Suite::Homs => homs(n, exec)?,
                    Suite::Mutation => mutation(n, exec)?,
                    Suite::Order => order(n, exec)?,
                    Suite::Quotients => quotients(n, exec)?,
                    Suite::All => unreachable!(),
                };
                checked += count;
                if let Some(c) = failure {
                    return Ok(Outcome {
                        suite: s,
                        max_n,
                        checked,
                        counterexample: Some(format!("n={n}: {c}")),
                    });
                }
            }
            Ok(Outcome {
                suite: s,
                max_n,
                checked,
                counterexample: None,
            })
        })
        .collect()
}

type Step = Result<(u64, Option<String>)>;

/// Runs `f` over `items` and reports the first failure in item order.
fn first_failure<T, F>(items: &[T], exec: Exec, f: F) -> Step
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync + Send,
{
    let found = exec.find_first(items, |x| match f(x) {
        Ok(None) => None,
        Ok(Some(msg)) => Some(Ok(msg)),
        Err(e) => Some(Err(e)),
    });
    match found {
        None => Ok((items.len() as u64, None)),
        Some(Ok(msg)) => Ok((items.len() as u64, Some(msg))),
        Some(Err(e)) => Err(e),
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Seeded sample with replacement, sorted so failures stay reproducible
/// and minimal within the sample.
fn sample<T: Clone>(items: &[T], count: usize, salt: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ salt);
    let mut idx: Vec<usize> = (0..count).map(|_| rng.gen_range(0..items.len())).collect();
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

fn pairs<T: Clone>(items: &[T]) -> Vec<(T, T)> {
    items
        .iter()
        .flat_map(|a| items.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn bijection(n: usize, exec: Exec) -> Step {
    let perms = Permutation::all(n);
    let (count, failure) = first_failure(&perms, exec, |w| {
        let g = restrict_green(&double_diagram(w));
        if !check_nad(g.arcs()) {
            return Ok(Some(format!("green diagram of {w} is not noncrossing")));
        }
        if diagram_to_permutation(&g, n)? != *w {
            return Ok(Some(format!(
                "join of the green arcs of {w} differs from {w}"
            )));
        }
        // every proper sub-join is strictly below w
        let arcs = g.arcs();
        for skip in 0..arcs.len() {
            let rest = arcs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, a)| crate::arc::arc_to_join_irreducible(a, n))
                .collect::<Result<Vec<_>>>()?;
            let j = Permutation::join_all(n, rest.iter())?;
            if j == *w || !j.weak_leq(w)? {
                return Ok(Some(format!(
                    "dropping {} from {w} does not go strictly down",
                    arcs[skip]
                )));
            }
        }
        Ok(None)
    })?;
    if failure.is_some() {
        return Ok((count, failure));
    }
    let mut greens: Vec<_> = perms
        .iter()
        .map(|w| restrict_green(&double_diagram(w)))
        .collect();
    greens.sort_by(|a, b| a.arcs().cmp(b.arcs()));
    greens.dedup();
    let expected = factorial(n + 1);
    if greens.len() as u64 != expected {
        return Ok((
            count,
            Some(format!(
                "{} distinct green diagrams, expected {expected}",
                greens.len()
            )),
        ));
    }
    let nads = count_nad(n)?;
    if nads != expected {
        return Ok((
            count,
            Some(format!("{nads} noncrossing diagrams, expected {expected}")),
        ));
    }
    let arcs = enumerate_arcs(n)?;
    let single = perms.iter().filter(|w| w.descents().len() == 1).count();
    if arcs.len() != single {
        return Ok((
            count,
            Some(format!(
                "{} arcs but {single} join-irreducibles",
                arcs.len()
            )),
        ));
    }
    let (more, failure) = first_failure(&arcs, exec, |a| {
        let m = arc_module(a, n)?;
        if !is_brick(&m) || quad(&m.dim_vector()) != 2 || ext1_dim(&m, &m)? != 0 {
            return Ok(Some(format!("arc module of {a} is not a rigid brick")));
        }
        Ok(None)
    })?;
    Ok((count + more + 3, failure))
}

fn shared_endpoints(a: &Arc, b: &Arc) -> (bool, bool) {
    (a.left() == b.left(), a.right() == b.right())
}

fn hom_pair(n: usize, a: &Arc, b: &Arc) -> Result<Option<String>> {
    let (ma, mb) = (arc_module(a, n)?, arc_module(b, n)?);
    let (ab, ba) = (hom_dim(&ma, &mb)?, hom_dim(&mb, &ma)?);
    let maps = graph_maps(a, b);
    if maps.len() != ab {
        return Ok(Some(format!(
            "{a} -> {b}: {} graph maps, hom dimension {ab}",
            maps.len()
        )));
    }
    let coords = maps
        .iter()
        .map(|g| Ok(g.to_morphism(n)?.coordinates()))
        .collect::<Result<Vec<_>>>()?;
    if let Some(first) = coords.first() {
        if Matrix::from_rows(coords.clone(), first.len()).rank() != coords.len() {
            return Ok(Some(format!("{a} -> {b}: graph maps are dependent")));
        }
    }
    if a == b {
        return Ok(None);
    }
    let orthogonal = ab == 0 && ba == 0;
    if check_nad(&[*a, *b]) != orthogonal {
        return Ok(Some(format!(
            "{a}, {b}: noncrossing disagrees with hom-orthogonality"
        )));
    }
    let crossing = crate::arc::is_crossing(a, b)?;
    let ok = match shared_endpoints(a, b) {
        (true, true) => ab != 0 && ba != 0,
        _ if crossing => true,
        (true, false) | (false, true) => ab <= 1 && ((ab == 0) == (ba == 1)),
        (false, false) => {
            let touching = a.has_endpoint(b.left()) || a.has_endpoint(b.right());
            touching || orthogonal
        }
    };
    if !ok {
        return Ok(Some(format!(
            "{a}, {b}: hom dimensions {ab}, {ba} break the endpoint rule"
        )));
    }
    Ok(None)
}

fn homs(n: usize, exec: Exec) -> Step {
    let arcs = enumerate_arcs(n)?;
    let mut all = pairs(&arcs);
    if n > CHECK_FULL_CAP {
        all = sample(&all, PAIR_SAMPLES, 1);
    }
    first_failure(&all, exec, |(a, b)| hom_pair(n, a, b))
}

fn mutation(n: usize, exec: Exec) -> Step {
    let perms = Permutation::all(n);
    let moves: Vec<(Permutation, usize)> = perms
        .iter()
        .flat_map(|w| (1..=n).map(move |i| (w.clone(), i)))
        .collect();
    let (count, failure) = first_failure(&moves, exec, |(w, i)| {
        let d = double_diagram(w);
        let dir = match d.at(*i).color {
            Color::Green => Direction::Left,
            Color::Red => Direction::Right,
        };
        let expected = double_diagram(&w.left_multiply_simple(*i)?);
        if mutate_dad(&d, *i, dir)? != expected {
            return Ok(Some(format!(
                "mutating {w} at {i} does not give D(s{i} {w})"
            )));
        }
        Ok(None)
    })?;
    if failure.is_some() {
        return Ok((count, failure));
    }
    let (axioms, failure) = first_failure(&perms, exec, |w| {
        Ok(smc_axiom_failure(&psi(&double_diagram(w)))?
            .map(|f| format!("collection of {w} fails {f:?}")))
    })?;
    if failure.is_some() {
        return Ok((count + axioms, failure));
    }
    let mut left: Vec<(Permutation, usize)> = moves
        .into_iter()
        .filter(|(w, i)| w.is_descent(*i))
        .collect();
    if n > CHECK_FULL_CAP {
        left = sample(&left, MUTATION_SAMPLES, 2);
    }
    let (more, failure) = first_failure(&left, exec, |(w, i)| {
        let got = mutate_smc_modules(&psi(&double_diagram(w)), *i)?;
        let expected = psi(&double_diagram(&w.left_multiply_simple(*i)?));
        Ok((!got.is_isomorphic_to(&expected)?)
            .then(|| format!("module mutation of {w} at {i} disagrees with s{i} {w}")))
    })?;
    Ok((count + axioms + more, failure))
}

fn order(n: usize, exec: Exec) -> Step {
    let perms = Permutation::all(n);
    let mut all = pairs(&perms);
    if n > CHECK_FULL_CAP {
        all = sample(&all, PAIR_SAMPLES, 3);
    }
    first_failure(&all, exec, |(u, w)| {
        let by_maps = smc_leq(&double_diagram(u), &double_diagram(w))?;
        Ok((by_maps != u.weak_leq(w)?).then(|| format!("{u} <= {w} disagrees")))
    })
}

fn catalan(k: usize) -> u64 {
    // C_k = binom(2k, k) / (k + 1), built incrementally to stay integral
    (0..k as u64).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn quotients(n: usize, exec: Exec) -> Step {
    let nads = count_nad(n)?;
    let cyc = nad_ideal_filter(n, &MonomialIdealSpec::two_cycles(n), exec)?;
    if cyc.len() as u64 != nads {
        return Ok((
            1,
            Some(format!("2-cycle filter keeps {} of {nads}", cyc.len())),
        ));
    }
    let rnad = family_count(n, &Family::Rnad, exec)?;
    if rnad != catalan(n + 1) {
        return Ok((
            2,
            Some(format!(
                "{rnad} right diagrams, expected {}",
                catalan(n + 1)
            )),
        ));
    }
    let (inv, rad2) = (
        MonomialIdealSpec::inverse_arrows(n),
        MonomialIdealSpec::radical_square(n),
    );
    let arcs = enumerate_arcs(n)?;
    let (count, failure) = first_failure(&arcs, exec, |a| {
        if is_right_arc(a) != inv.annihilates(a, n)? {
            return Ok(Some(format!(
                "{a}: right predicate disagrees with the inverse-arrow filter"
            )));
        }
        if is_alternating_arc(a) != rad2.annihilates(a, n)? {
            return Ok(Some(format!(
                "{a}: alternating predicate disagrees with the radical-square filter"
            )));
        }
        Ok(None)
    })?;
    if failure.is_some() {
        return Ok((count + 2, failure));
    }
    let anad = family_count(n, &Family::Anad, exec)?;
    let by_ideal = family_count(n, &Family::Custom(rad2), exec)?;
    if anad != by_ideal {
        return Ok((
            count + 3,
            Some(format!(
                "{anad} alternating diagrams vs {by_ideal} from the ideal"
            )),
        ));
    }
    Ok((count + 3, None))
}
