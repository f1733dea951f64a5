//! Letters and paths of the doubled type-A quiver.
//!
//! Vertices are `v_1 .. v_n`. For `1 <= i < n` the direct arrow
//! `a_i : v_i -> v_{i+1}` and the inverse arrow `a_i^- : v_{i+1} -> v_i`.
//! Paths are written in traversal order: `a1 a2` goes `v_1 -> v_2 -> v_3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Direct,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub dir: Dir,
}

impl Letter {
    pub fn direct(index: usize) -> Self {
        Self {
            index,
            dir: Dir::Direct,
        }
    }

    pub fn inverse(index: usize) -> Self {
        Self {
            index,
            dir: Dir::Inverse,
        }
    }

    pub fn source(&self) -> usize {
        match self.dir {
            Dir::Direct => self.index,
            Dir::Inverse => self.index + 1,
        }
    }

    pub fn target(&self) -> usize {
        match self.dir {
            Dir::Direct => self.index + 1,
            Dir::Inverse => self.index,
        }
    }

    pub fn is_direct(&self) -> bool {
        self.dir == Dir::Direct
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.index == 0 || self.index >= n {
            return Err(Error::NotComposable(format!(
                "{self} is not an arrow of the rank-{n} quiver"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dir {
            Dir::Direct => write!(f, "a{}", self.index),
            Dir::Inverse => write!(f, "a{}-", self.index),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('a')
            .ok_or_else(|| Error::Parse(format!("letter \"{s}\" must start with 'a'")))?;
        let (digits, dir) = match body.strip_suffix('-') {
            Some(d) => (d, Dir::Inverse),
            None => (body, Dir::Direct),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad arrow index in \"{s}\"")))?;
        if index == 0 {
            return Err(Error::Parse(format!(
                "arrow index must be positive in \"{s}\""
            )));
        }
        Ok(Letter { index, dir })
    }
}

/// A path of the doubled quiver: a trivial path `e_k` or a nonempty
/// sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Path {
    Idempotent(usize),
    Arrows(Vec<Letter>),
}

impl Path {
    /// Checks that every letter exists at rank `n` and consecutive letters
    /// meet head to tail.
    pub fn check_composable(&self, n: usize) -> Result<()> {
        match self {
            Path::Idempotent(k) => {
                if *k == 0 || *k > n {
                    return Err(Error::NotComposable(format!("e{k} is not a vertex")));
                }
            }
            Path::Arrows(letters) => {
                if letters.is_empty() {
                    return Err(Error::NotComposable("empty letter sequence".into()));
                }
                for l in letters {
                    l.check_rank(n)?;
                }
                for pair in letters.windows(2) {
                    if pair[0].target() != pair[1].source() {
                        return Err(Error::NotComposable(format!(
                            "{} ends at v{} but {} starts at v{}",
                            pair[0],
                            pair[0].target(),
                            pair[1],
                            pair[1].source()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        match self {
            Path::Idempotent(_) => 0,
            Path::Arrows(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Idempotent(k) => write!(f, "e{k}"),
            Path::Arrows(letters) => {
                let parts: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix('e') {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad idempotent \"{s}\"")))?;
            return Ok(Path::Idempotent(k));
        }
        let letters = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        if letters.is_empty() {
            return Err(Error::Parse("empty path".into()));
        }
        Ok(Path::Arrows(letters))
    }
}
