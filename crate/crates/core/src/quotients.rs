//! Diagram families cut out by monomial ideals, and the right and
//! alternating arc predicates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::{
    count_noncrossing_subsets, enumerate_arcs, noncrossing_subsets, Arc, NoncrossingDiagram, Side,
    NAD_COUNT_CAP, NAD_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::quiver::{Letter, Path};
use crate::rep::{arc_module, path_action_is_zero};

/// An ideal given by path generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialIdealSpec {
    generators: Vec<Path>,
}

impl MonomialIdealSpec {
    pub fn new(generators: Vec<Path>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.is_empty()) {
            return Err(Error::NotComposable(format!("generator {g} has no arrows")));
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[Path] {
        &self.generators
    }

    /// Parses a JSON list of paths such as `["a1-", "a2 a3"]`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<String> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("ideal: {e}")))?;
        Self::new(raw.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        self.generators
            .iter()
            .try_for_each(|g| g.check_composable(n))
    }

    /// `a_i a_i^-` and `a_i^- a_i` for every `i`.
    pub fn two_cycles(n: usize) -> Self {
        let generators = (1..n)
            .flat_map(|i| {
                [
                    Path::Arrows(vec![Letter::direct(i), Letter::inverse(i)]),
                    Path::Arrows(vec![Letter::inverse(i), Letter::direct(i)]),
                ]
            })
            .collect();
        Self { generators }
    }

    /// All inverse arrows, leaving the linearly oriented path algebra.
    pub fn inverse_arrows(n: usize) -> Self {
        let generators = (1..n)
            .map(|i| Path::Arrows(vec![Letter::inverse(i)]))
            .collect();
        Self { generators }
    }

    /// Every composable path of length two.
    pub fn radical_square(n: usize) -> Self {
        let letters: Vec<Letter> = (1..n)
            .flat_map(|i| [Letter::direct(i), Letter::inverse(i)])
            .collect();
        let mut generators = Vec::new();
        for a in &letters {
            for b in &letters {
                if a.target() == b.source() {
                    generators.push(Path::Arrows(vec![*a, *b]));
                }
            }
        }
        Self { generators }
    }

    /// Whether every generator acts as zero on the arc module of `arc`.
    pub fn annihilates(&self, arc: &Arc, n: usize) -> Result<bool> {
        let m = arc_module(arc, n)?;
        for g in &self.generators {
            if !path_action_is_zero(&m, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Serialize for MonomialIdealSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.generators.iter().map(|g| g.to_string()))
    }
}

impl<'de> Deserialize<'de> for MonomialIdealSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let paths = raw
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Path>>>()
            .map_err(serde::de::Error::custom)?;
        MonomialIdealSpec::new(paths).map_err(serde::de::Error::custom)
    }
}

/// Every interior point is passed below.
pub fn is_right_arc(arc: &Arc) -> bool {
    arc.above_mask() == 0
}

/// Interior sides alternate from one point to the next.
pub fn is_alternating_arc(arc: &Arc) -> bool {
    let sides: Vec<Side> = arc.interior().filter_map(|m| arc.side(m)).collect();
    sides.windows(2).all(|w| w[0] != w[1])
}

fn arcs_killed_by(n: usize, ideal: &MonomialIdealSpec) -> Result<Vec<Arc>> {
    ideal.check_rank(n)?;
    let mut pool = Vec::new();
    for a in enumerate_arcs(n)? {
        if ideal.annihilates(&a, n)? {
            pool.push(a);
        }
    }
    Ok(pool)
}

/// Noncrossing diagrams all of whose arc modules are killed by the ideal.
pub fn nad_ideal_filter(
    n: usize,
    ideal: &MonomialIdealSpec,
    exec: Exec,
) -> Result<Vec<NoncrossingDiagram>> {
    if n > NAD_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: NAD_ENUMERATION_CAP,
        });
    }
    Ok(noncrossing_subsets(&arcs_killed_by(n, ideal)?, exec))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Nad,
    Rnad,
    Anad,
    Custom(MonomialIdealSpec),
}

impl Family {
    fn arc_pool(&self, n: usize) -> Result<Vec<Arc>> {
        let all = enumerate_arcs(n)?;
        Ok(match self {
            Family::Nad => all,
            Family::Rnad => all.into_iter().filter(is_right_arc).collect(),
            Family::Anad => all.into_iter().filter(is_alternating_arc).collect(),
            Family::Custom(ideal) => arcs_killed_by(n, ideal)?,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Nad => "nad",
            Family::Rnad => "rnad",
            Family::Anad => "anad",
            Family::Custom(_) => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Built-in families only; `custom` needs an ideal.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nad" => Ok(Family::Nad),
            "rnad" => Ok(Family::Rnad),
            "anad" => Ok(Family::Anad),
            _ => Err(Error::Parse(format!("unknown family \"{s}\""))),
        }
    }
}

/// Number of noncrossing diagrams in the family (the empty one included).
pub fn family_count(n: usize, family: &Family, exec: Exec) -> Result<u64> {
    if n > NAD_COUNT_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: NAD_COUNT_CAP,
        });
    }
    if n == 0 {
        return Err(Error::Shape("rank must be at least 1".into()));
    }
    Ok(count_noncrossing_subsets(&family.arc_pool(n)?, exec))
}
