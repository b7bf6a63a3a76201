//! Named graph families with fixed, documented vertex labelings.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Graph, Result};

/// A named graph family and its integer parameters.
///
/// Labelings are part of the contract since edge order feeds the line graph:
///
/// - `Path(k)`: `0 - 1 - … - (k−1)`.
/// - `Cycle(k)`: the path plus the edge `{0, k−1}`.
/// - `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// - `Star(a)`: `K_{1,a−1}` with hub `0`.
/// - `DoubleStar(a, b)`: centers `0` and `1` joined; `a` leaves on `0`
///   (labels `2..2+a`), then `b` leaves on `1`.
/// - `Wheel(k)`: hub `0` joined to the cycle `1..k`.
/// - `Ladder(k)`: rails `0..k` and `k..2k`, rung `{i, k+i}`.
/// - `Book(k)`: spine `{0, 1}`; page `i` adds `2+2i ~ 0`, `3+2i ~ 1` and
///   the edge between them.
/// - `Friendship(k)`: hub `0`; triangle `i` on `{0, 1+2i, 2+2i}`.
/// - `Comb(a, b)`: path `0..a`, pendant `a+j` on path vertex `j` for `j < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    DoubleStar(usize, usize),
    Wheel(usize),
    Ladder(usize),
    Book(usize),
    Friendship(usize),
    Comb(usize, usize),
}

impl FamilySpec {
    /// Short name used by the family mini-language (`star:20`).
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "bipartite",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleStar(..) => "doublestar",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Ladder(_) => "ladder",
            FamilySpec::Book(_) => "book",
            FamilySpec::Friendship(_) => "friendship",
            FamilySpec::Comb(..) => "comb",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Path(k)
            | FamilySpec::Cycle(k)
            | FamilySpec::Complete(k)
            | FamilySpec::Star(k)
            | FamilySpec::Wheel(k)
            | FamilySpec::Ladder(k)
            | FamilySpec::Book(k)
            | FamilySpec::Friendship(k) => alloc::vec![k],
            FamilySpec::CompleteBipartite(a, b)
            | FamilySpec::DoubleStar(a, b)
            | FamilySpec::Comb(a, b) => alloc::vec![a, b],
        }
    }

    /// Builds a spec from a family name and its parameter list, checking
    /// arity and family constraints.
    pub fn from_parts(name: &str, params: &[usize]) -> Option<Result<Self>> {
        let one = |f: fn(usize) -> FamilySpec| match params {
            [k] => f(*k).validated(),
            _ => Err(Error::InvalidFamilyParam("family takes exactly one parameter")),
        };
        let two = |f: fn(usize, usize) -> FamilySpec| match params {
            [a, b] => f(*a, *b).validated(),
            _ => Err(Error::InvalidFamilyParam("family takes exactly two parameters")),
        };
        Some(match name {
            "path" => one(FamilySpec::Path),
            "cycle" => one(FamilySpec::Cycle),
            "complete" => one(FamilySpec::Complete),
            "bipartite" => two(FamilySpec::CompleteBipartite),
            "star" => one(FamilySpec::Star),
            "doublestar" => two(FamilySpec::DoubleStar),
            "wheel" => one(FamilySpec::Wheel),
            "ladder" => one(FamilySpec::Ladder),
            "book" => one(FamilySpec::Book),
            "friendship" => one(FamilySpec::Friendship),
            "comb" => two(FamilySpec::Comb),
            _ => return None,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg| Err(Error::InvalidFamilyParam(msg));
        match *self {
            FamilySpec::Path(0) => bad("path needs at least 1 vertex"),
            FamilySpec::Cycle(k) if k < 3 => bad("cycle needs at least 3 vertices"),
            FamilySpec::Complete(0) => bad("complete graph needs at least 1 vertex"),
            FamilySpec::CompleteBipartite(a, b) if a == 0 || b == 0 => {
                bad("both parts of a complete bipartite graph must be non-empty")
            }
            FamilySpec::Star(0) => bad("star needs at least 1 vertex"),
            FamilySpec::Wheel(k) if k < 4 => bad("wheel needs at least 4 vertices"),
            FamilySpec::Ladder(0) => bad("ladder needs at least 1 rung"),
            FamilySpec::Book(0) => bad("book needs at least 1 page"),
            FamilySpec::Friendship(0) => bad("friendship graph needs at least 1 triangle"),
            FamilySpec::Comb(0, _) => bad("comb needs a path of at least 1 vertex"),
            FamilySpec::Comb(a, b) if b > a => bad("comb requires b <= a"),
            _ => Ok(()),
        }
    }

    fn validated(self) -> Result<Self> {
        self.validate().map(|()| self)
    }

    /// `(n, m)` of the generated graph.
    pub fn counts(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Path(k) => (k, k - 1),
            FamilySpec::Cycle(k) => (k, k),
            FamilySpec::Complete(a) => (a, a * (a - 1) / 2),
            FamilySpec::CompleteBipartite(a, b) => (a + b, a * b),
            FamilySpec::Star(a) => (a, a - 1),
            FamilySpec::DoubleStar(a, b) => (a + b + 2, a + b + 1),
            FamilySpec::Wheel(k) => (k, 2 * k - 2),
            FamilySpec::Ladder(k) => (2 * k, 3 * k - 2),
            FamilySpec::Book(k) => (2 * k + 2, 3 * k + 1),
            FamilySpec::Friendship(k) => (2 * k + 1, 3 * k),
            FamilySpec::Comb(a, b) => (a + b, a + b - 1),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let mut e: Vec<(usize, usize)> = Vec::new();
        let n = self.counts().0;
        match *self {
            FamilySpec::Path(k) => e.extend((1..k).map(|i| (i - 1, i))),
            FamilySpec::Cycle(k) => {
                e.extend((1..k).map(|i| (i - 1, i)));
                e.push((0, k - 1));
            }
            FamilySpec::Complete(a) => {
                for v in 1..a {
                    e.extend((0..v).map(|u| (u, v)));
                }
            }
            FamilySpec::CompleteBipartite(a, b) => {
                for u in 0..a {
                    e.extend((a..a + b).map(|v| (u, v)));
                }
            }
            FamilySpec::Star(a) => e.extend((1..a).map(|v| (0, v))),
            FamilySpec::DoubleStar(a, b) => {
                e.push((0, 1));
                e.extend((2..2 + a).map(|v| (0, v)));
                e.extend((2 + a..2 + a + b).map(|v| (1, v)));
            }
            FamilySpec::Wheel(k) => {
                e.extend((1..k).map(|v| (0, v)));
                e.extend((2..k).map(|v| (v - 1, v)));
                e.push((1, k - 1));
            }
            FamilySpec::Ladder(k) => {
                for i in 0..k {
                    if i + 1 < k {
                        e.push((i, i + 1));
                        e.push((k + i, k + i + 1));
                    }
                    e.push((i, k + i));
                }
            }
            FamilySpec::Book(k) => {
                e.push((0, 1));
                for i in 0..k {
                    let (x, y) = (2 + 2 * i, 3 + 2 * i);
                    e.extend([(0, x), (1, y), (x, y)]);
                }
            }
            FamilySpec::Friendship(k) => {
                for i in 0..k {
                    let (x, y) = (1 + 2 * i, 2 + 2 * i);
                    e.extend([(0, x), (0, y), (x, y)]);
                }
            }
            FamilySpec::Comb(a, b) => {
                e.extend((1..a).map(|i| (i - 1, i)));
                e.extend((0..b).map(|j| (j, a + j)));
            }
        }
        Graph::new(n, e)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (i, p) in self.params().iter().enumerate() {
            f.write_str(if i == 0 { ":" } else { "," })?;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
