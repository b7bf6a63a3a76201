//! Upper and lower bounds on the A_α-energy and relations to other graph
//! energies.
//!
//! Each evaluator reports the bound value, the formula branch it took, and
//! the signed slack against the energy computed from the spectrum. A bound
//! whose hypotheses fail (α range, connectivity, degenerate spectrum) is
//! reported as [`Verdict::Inapplicable`] rather than evaluated.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::rank::adjacency_rank;
use crate::spectra::{check_alpha, graph_spectrum, MatrixKind};
use crate::{DegreeSummary, Graph, Result, Spectrum};

/// Slack below `-SLACK_TOL` is a violation of the stated inequality.
pub const SLACK_TOL: f64 = 1e-7;
/// `ξ_n` at or below this counts as zero when choosing the Zhou branch.
pub const XI_ZERO_TOL: f64 = 1e-9;
/// Spreads at or below this make the spread lower bound inapplicable.
pub const SPREAD_ZERO_TOL: f64 = 1e-12;

/// Stable identifiers shared by every output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// Edge-decomposition upper bound in n and m.
    UbT31,
    /// Degree-variance upper bound (comparison baseline).
    UbEq3,
    /// Star-dominated upper bound in m, n and Δ.
    UbT35,
    /// Spread lower bound.
    LbT41,
    /// Zhou et al. two-branch lower bound.
    LbL42,
    /// Zagreb square-root lower bound.
    LbC44,
    /// Degree lower bound, α ≤ 1/2.
    LbT45a,
    /// Degree lower bound, α > 1/2.
    LbT45b,
    /// `E_{A_α} + αE_L ≥ 2𝔈 − 4αmζ/n`.
    RelT51,
    /// Line-graph relation with isolated vertices.
    RelT52,
    /// Line-graph relation with isolated and pendant vertices.
    RelT55,
    /// Upper bound on the A_α-spread.
    SpreadL28,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::UbT31,
        BoundId::UbEq3,
        BoundId::UbT35,
        BoundId::LbT41,
        BoundId::LbL42,
        BoundId::LbC44,
        BoundId::LbT45a,
        BoundId::LbT45b,
        BoundId::RelT51,
        BoundId::RelT52,
        BoundId::RelT55,
        BoundId::SpreadL28,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::UbT31 => "UB_T31",
            BoundId::UbEq3 => "UB_EQ3",
            BoundId::UbT35 => "UB_T35",
            BoundId::LbT41 => "LB_T41",
            BoundId::LbL42 => "LB_L42",
            BoundId::LbC44 => "LB_C44",
            BoundId::LbT45a => "LB_T45a",
            BoundId::LbT45b => "LB_T45b",
            BoundId::RelT51 => "REL_T51",
            BoundId::RelT52 => "REL_T52",
            BoundId::RelT55 => "REL_T55",
            BoundId::SpreadL28 => "SPREAD_L28",
        }
    }

    /// `Some(side)` for energy bounds, `None` for relations.
    pub fn side(&self) -> Option<Side> {
        match self {
            BoundId::UbT31 | BoundId::UbEq3 | BoundId::UbT35 => Some(Side::Upper),
            BoundId::LbT41 | BoundId::LbL42 | BoundId::LbC44 | BoundId::LbT45a | BoundId::LbT45b => {
                Some(Side::Lower)
            }
            _ => None,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownBoundId;

impl fmt::Display for UnknownBoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown bound id")
    }
}

impl FromStr for BoundId {
    type Err = UnknownBoundId;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        BoundId::ALL.into_iter().find(|id| id.as_str() == s).ok_or(UnknownBoundId)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// Direction of a relation `lhs ? rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Inapplicable {
    EmptyGraph,
    TooFewVertices { required: usize },
    AlphaOutOfRange { range: &'static str },
    Disconnected,
    NoEdges,
    ZeroSpread,
    ZeroDeviation,
    NegativeRadicand,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inapplicable::EmptyGraph => f.write_str("graph has no vertices"),
            Inapplicable::TooFewVertices { required } => write!(f, "needs n >= {required}"),
            Inapplicable::AlphaOutOfRange { range } => write!(f, "alpha outside {range}"),
            Inapplicable::Disconnected => f.write_str("graph is not connected"),
            Inapplicable::NoEdges => f.write_str("graph has no edges"),
            Inapplicable::ZeroSpread => f.write_str("A_alpha spread is zero"),
            Inapplicable::ZeroDeviation => f.write_str("all deviations are zero"),
            Inapplicable::NegativeRadicand => f.write_str("negative radicand"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<T> {
    Applicable(T),
    Inapplicable(Inapplicable),
}

impl<T> Verdict<T> {
    pub fn applicable(self) -> Option<T> {
        match self {
            Verdict::Applicable(t) => Some(t),
            Verdict::Inapplicable(_) => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Applicable(t) => Verdict::Applicable(f(t)),
            Verdict::Inapplicable(r) => Verdict::Inapplicable(r),
        }
    }
}

/// One evaluated energy bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub id: BoundId,
    pub side: Side,
    pub branch: &'static str,
    pub value: f64,
    pub energy: f64,
    /// `value − energy` for upper bounds, `energy − value` for lower bounds.
    pub slack: f64,
}

/// One evaluated relation `lhs ≤ rhs` or `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationResult {
    pub id: BoundId,
    pub sense: Sense,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
    pub gap: f64,
}

impl RelationResult {
    fn new(id: BoundId, sense: Sense, lhs: f64, rhs: f64) -> Self {
        let mut r = RelationResult { id, sense, lhs, rhs, satisfied: true, gap: (lhs - rhs).abs() };
        r.satisfied = r.margin() >= -SLACK_TOL;
        r
    }

    /// Signed distance by which the relation holds.
    pub fn margin(&self) -> f64 {
        match self.sense {
            Sense::AtMost => self.rhs - self.lhs,
            Sense::AtLeast => self.lhs - self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Evaluation {
    Bound(BoundResult),
    Relation(RelationResult),
    Inapplicable { id: BoundId, reason: Inapplicable },
}

impl Evaluation {
    pub fn id(&self) -> BoundId {
        match self {
            Evaluation::Bound(b) => b.id,
            Evaluation::Relation(r) => r.id,
            Evaluation::Inapplicable { id, .. } => *id,
        }
    }

    /// Slack for bounds, margin for relations; `None` when inapplicable.
    pub fn margin(&self) -> Option<f64> {
        match self {
            Evaluation::Bound(b) => Some(b.slack),
            Evaluation::Relation(r) => Some(r.margin()),
            Evaluation::Inapplicable { .. } => None,
        }
    }

    /// `|value − energy|` or `|lhs − rhs|`.
    pub fn gap(&self) -> Option<f64> {
        match self {
            Evaluation::Bound(b) => Some((b.value - b.energy).abs()),
            Evaluation::Relation(r) => Some(r.gap),
            Evaluation::Inapplicable { .. } => None,
        }
    }

    /// Scale used for relative equality checks.
    pub fn magnitude(&self) -> f64 {
        match self {
            Evaluation::Bound(b) => b.energy.abs(),
            Evaluation::Relation(r) => r.lhs.abs().max(r.rhs.abs()),
            Evaluation::Inapplicable { .. } => 0.0,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.margin().is_some_and(|m| m < -SLACK_TOL)
    }
}

/// α-independent quantities of a graph: counts, degrees, connectivity,
/// adjacency/Laplacian/line-graph energies and exact adjacency rank.
#[derive(Debug, Clone)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub degrees: DegreeSummary,
    pub connected: bool,
    pub adjacency_energy: f64,
    pub laplacian_energy: f64,
    pub line_graph_energy: f64,
    pub adjacency_rank: usize,
}

impl GraphFacts {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let m = g.size();
        let adjacency_energy = graph_spectrum(g, MatrixKind::Adjacency)?.deviation_sum(0.0);
        let laplacian = graph_spectrum(g, MatrixKind::Laplacian)?;
        let laplacian_energy = laplacian.deviation_sum(MatrixKind::Laplacian.mean_shift(n, m));
        let line_graph_energy =
            graph_spectrum(&g.line_graph(), MatrixKind::Adjacency)?.deviation_sum(0.0);
        Ok(GraphFacts {
            n,
            m,
            degrees: g.degree_summary(),
            connected: g.is_connected(),
            adjacency_energy,
            laplacian_energy,
            line_graph_energy,
            adjacency_rank: adjacency_rank(g),
        })
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    fn mf(&self) -> f64 {
        self.m as f64
    }

    fn z1(&self) -> f64 {
        self.degrees.zagreb1 as f64
    }

    fn max_degree(&self) -> f64 {
        self.degrees.max_degree as f64
    }

    /// `α²Z₁ + 2(1−α)²m − 4α²m²/n`, the variance term shared by several bounds.
    fn variance_term(&self, alpha: f64) -> f64 {
        let (n, m, a) = (self.nf(), self.mf(), alpha);
        a * a * self.z1() + 2.0 * (1.0 - a) * (1.0 - a) * m - 4.0 * a * a * m * m / n
    }
}

/// A_α spectrum and energy of a graph at one α.
#[derive(Debug, Clone)]
pub struct AlphaFacts {
    pub alpha: f64,
    pub spectrum: Spectrum,
    pub shift: f64,
    pub energy: f64,
}

impl AlphaFacts {
    pub fn new(g: &Graph, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        let kind = MatrixKind::AAlpha(alpha);
        let spectrum = graph_spectrum(g, kind)?;
        let shift = kind.mean_shift(g.order(), g.size());
        let energy = spectrum.deviation_sum(shift);
        Ok(AlphaFacts { alpha, spectrum, shift, energy })
    }

    pub fn spread(&self) -> f64 {
        self.spectrum.spread()
    }
}

type Formula = Verdict<(f64, &'static str)>;

fn require(cond: bool, reason: Inapplicable) -> core::result::Result<(), Inapplicable> {
    if cond {
        Ok(())
    } else {
        Err(reason)
    }
}

fn alpha_below_one(a: f64) -> core::result::Result<(), Inapplicable> {
    require(a < 1.0, Inapplicable::AlphaOutOfRange { range: "[0, 1)" })
}

fn alpha_half_open(a: f64) -> core::result::Result<(), Inapplicable> {
    require((0.5..1.0).contains(&a), Inapplicable::AlphaOutOfRange { range: "[1/2, 1)" })
}

fn alpha_open_half(a: f64) -> core::result::Result<(), Inapplicable> {
    require(a > 0.5 && a < 1.0, Inapplicable::AlphaOutOfRange { range: "(1/2, 1)" })
}

fn formula(r: core::result::Result<(f64, &'static str), Inapplicable>) -> Formula {
    match r {
        Ok(v) => Verdict::Applicable(v),
        Err(e) => Verdict::Inapplicable(e),
    }
}

fn edge_decomposition(f: &GraphFacts, a: f64) -> Formula {
    formula((|| {
        require(f.n >= 2, Inapplicable::TooFewVertices { required: 2 })?;
        alpha_below_one(a)?;
        let (n, m) = (f.nf(), f.mf());
        Ok(if a >= n / (2.0 * (n - 1.0)) {
            (4.0 * a * m * (1.0 - 1.0 / n), "alpha>=n/(2(n-1))")
        } else {
            (2.0 * m * (1.0 - 2.0 * a / n), "alpha<n/(2(n-1))")
        })
    })())
}

fn degree_variance(f: &GraphFacts, a: f64) -> Formula {
    formula((|| {
        alpha_below_one(a)?;
        let (n, m) = (f.nf(), f.mf());
        let avg = 2.0 * m / n;
        let var: f64 = f.degrees.degrees.iter().map(|&d| (d as f64 - avg) * (d as f64 - avg)).sum();
        let v = 2.0 * (1.0 - a) * (1.0 - a) * m * n + a * a * n * var;
        Ok((libm::sqrt(v), ""))
    })())
}

fn star_dominated(f: &GraphFacts, a: f64) -> Formula {
    formula((|| {
        require(f.connected, Inapplicable::Disconnected)?;
        require(f.n >= 2, Inapplicable::TooFewVertices { required: 2 })?;
        alpha_open_half(a)?;
        let (n, m, d) = (f.nf(), f.mf(), f.max_degree());
        let radicand = a * a * (d + 1.0) * (d + 1.0) + 4.0 * (1.0 - 2.0 * a) * d;
        require(radicand >= 0.0, Inapplicable::NegativeRadicand)?;
        Ok((a * (4.0 * m - 3.0 * d - 4.0 * m / n + 1.0) + libm::sqrt(radicand), ""))
    })())
}

fn spread_lower(f: &GraphFacts, at: &AlphaFacts) -> Formula {
    formula((|| {
        alpha_below_one(at.alpha)?;
        let theta = at.spread();
        require(theta > SPREAD_ZERO_TOL, Inapplicable::ZeroSpread)?;
        Ok((2.0 / theta * f.variance_term(at.alpha), ""))
    })())
}

fn zhou(f: &GraphFacts, at: &AlphaFacts) -> Formula {
    formula((|| {
        alpha_half_open(at.alpha)?;
        let mut xi: Vec<f64> =
            at.spectrum.values().iter().map(|r| (r - at.shift).abs()).collect();
        xi.sort_unstable_by(|x, y| y.total_cmp(x));
        let first = xi[0];
        let last = xi[xi.len() - 1];
        let q = f.variance_term(at.alpha).max(0.0);
        if last > XI_ZERO_TOL {
            let v = 2.0 * libm::sqrt(q * f.nf()) * libm::sqrt(first * last) / (first + last);
            Ok((v, "xi_n>0"))
        } else {
            require(first > XI_ZERO_TOL, Inapplicable::ZeroDeviation)?;
            Ok((q / first, "xi_n=0"))
        }
    })())
}

fn zagreb_sqrt(f: &GraphFacts, a: f64) -> Formula {
    formula((|| {
        alpha_below_one(a)?;
        Ok((libm::sqrt((2.0 * f.variance_term(a)).max(0.0)), ""))
    })())
}

fn degree_branch(f: &GraphFacts, a: f64, want_upper_branch: bool) -> Formula {
    formula((|| {
        require(f.connected, Inapplicable::Disconnected)?;
        require(f.m >= 1, Inapplicable::NoEdges)?;
        let (n, m, z1, d) = (f.nf(), f.mf(), f.z1(), f.max_degree());
        if want_upper_branch {
            alpha_open_half(a)?;
            Ok((2.0 * a * z1 / m + 4.0 * (1.0 - 3.0 * a) * m / n, "b"))
        } else {
            require(a <= 0.5, Inapplicable::AlphaOutOfRange { range: "[0, 1/2]" })?;
            Ok((2.0 * ((1.0 - a) * z1 / m - 2.0 * a * m / n + (2.0 * a - 1.0) * d), "a"))
        }
    })())
}

/// `√(2α²Z₁ + 4(1−α)²m − 8α²m²/n)`, an upper bound on the A_α-spread.
fn spread_invariant(f: &GraphFacts, a: f64) -> f64 {
    libm::sqrt((2.0 * f.variance_term(a)).max(0.0))
}

fn laplacian_relation(f: &GraphFacts, at: &AlphaFacts) -> Verdict<RelationResult> {
    let a = at.alpha;
    let check = (|| {
        require(f.connected, Inapplicable::Disconnected)?;
        require(f.n >= 2, Inapplicable::TooFewVertices { required: 2 })?;
        alpha_half_open(a)
    })();
    if let Err(e) = check {
        return Verdict::Inapplicable(e);
    }
    let lhs = at.energy + a * f.laplacian_energy;
    let rhs = 2.0 * f.adjacency_energy - 4.0 * a * f.mf() * f.adjacency_rank as f64 / f.nf();
    Verdict::Applicable(RelationResult::new(BoundId::RelT51, Sense::AtLeast, lhs, rhs))
}

fn line_graph_lhs(f: &GraphFacts, at: &AlphaFacts) -> f64 {
    let a = at.alpha;
    (at.energy - (1.0 - a) * f.line_graph_energy - 2.0 * (1.0 - a) * (f.nf() - f.mf())).abs()
}

fn line_graph_relation(f: &GraphFacts, at: &AlphaFacts, with_pendants: bool) -> Verdict<RelationResult> {
    let a = at.alpha;
    if let Err(e) = alpha_below_one(a) {
        return Verdict::Inapplicable(e);
    }
    let (n, m) = (f.nf(), f.mf());
    let s = f.degrees.isolated as f64;
    let p = f.degrees.pendant as f64;
    let w = (2.0 * a - 1.0).abs();
    let (id, rhs) = if with_pendants {
        (BoundId::RelT55, w * (2.0 * m - 2.0 * n + 4.0 * s + 2.0 * p) + 2.0 * a * (n - m).abs())
    } else {
        (BoundId::RelT52, w * (2.0 * m - n + 2.0 * s) + (n - 2.0 * a * m).abs())
    };
    Verdict::Applicable(RelationResult::new(id, Sense::AtMost, line_graph_lhs(f, at), rhs))
}

/// Evaluates one bound or relation from precomputed facts.
pub fn evaluate(f: &GraphFacts, at: &AlphaFacts, id: BoundId) -> Evaluation {
    if f.n == 0 {
        return Evaluation::Inapplicable { id, reason: Inapplicable::EmptyGraph };
    }
    let a = at.alpha;
    let bound = |side: Side, v: Formula| match v {
        Verdict::Applicable((value, branch)) => {
            let slack = match side {
                Side::Upper => value - at.energy,
                Side::Lower => at.energy - value,
            };
            Evaluation::Bound(BoundResult { id, side, branch, value, energy: at.energy, slack })
        }
        Verdict::Inapplicable(reason) => Evaluation::Inapplicable { id, reason },
    };
    let relation = |v: Verdict<RelationResult>| match v {
        Verdict::Applicable(r) => Evaluation::Relation(r),
        Verdict::Inapplicable(reason) => Evaluation::Inapplicable { id, reason },
    };
    match id {
        BoundId::UbT31 => bound(Side::Upper, edge_decomposition(f, a)),
        BoundId::UbEq3 => bound(Side::Upper, degree_variance(f, a)),
        BoundId::UbT35 => bound(Side::Upper, star_dominated(f, a)),
        BoundId::LbT41 => bound(Side::Lower, spread_lower(f, at)),
        BoundId::LbL42 => bound(Side::Lower, zhou(f, at)),
        BoundId::LbC44 => bound(Side::Lower, zagreb_sqrt(f, a)),
        BoundId::LbT45a => bound(Side::Lower, degree_branch(f, a, false)),
        BoundId::LbT45b => bound(Side::Lower, degree_branch(f, a, true)),
        BoundId::RelT51 => relation(laplacian_relation(f, at)),
        BoundId::RelT52 => relation(line_graph_relation(f, at, false)),
        BoundId::RelT55 => relation(line_graph_relation(f, at, true)),
        BoundId::SpreadL28 => relation(Verdict::Applicable(RelationResult::new(
            id,
            Sense::AtMost,
            at.spread(),
            spread_invariant(f, a),
        ))),
    }
}

/// All twelve evaluations in [`BoundId::ALL`] order.
pub fn evaluate_all(f: &GraphFacts, at: &AlphaFacts) -> Vec<Evaluation> {
    BoundId::ALL.iter().map(|&id| evaluate(f, at, id)).collect()
}

/// Evaluates `id` on `g` at `alpha`, computing all facts from scratch.
pub fn evaluate_graph(g: &Graph, alpha: f64, id: BoundId) -> Result<Evaluation> {
    let facts = GraphFacts::new(g)?;
    let at = AlphaFacts::new(g, alpha)?;
    Ok(evaluate(&facts, &at, id))
}

fn bound_on(g: &Graph, alpha: f64, id: BoundId) -> Result<Verdict<BoundResult>> {
    Ok(match evaluate_graph(g, alpha, id)? {
        Evaluation::Bound(b) => Verdict::Applicable(b),
        Evaluation::Inapplicable { reason, .. } => Verdict::Inapplicable(reason),
        Evaluation::Relation(_) => unreachable!("{id} is an energy bound"),
    })
}

fn relation_on(g: &Graph, alpha: f64, id: BoundId) -> Result<Verdict<RelationResult>> {
    Ok(match evaluate_graph(g, alpha, id)? {
        Evaluation::Relation(r) => Verdict::Applicable(r),
        Evaluation::Inapplicable { reason, .. } => Verdict::Inapplicable(reason),
        Evaluation::Bound(_) => unreachable!("{id} is a relation"),
    })
}

/// `4αm(1 − 1/n)` if `α ≥ n/(2(n−1))`, else `2m(1 − 2α/n)`.
pub fn ub_edge_decomposition(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::UbT31)
}

/// `√(2(1−α)²mn + α²n Σ(dᵢ − 2m/n)²)`.
pub fn ub_pirzada(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::UbEq3)
}

/// `α(4m − 3Δ − 4m/n + 1) + √(α²(Δ+1)² + 4(1−2α)Δ)` for connected graphs,
/// α ∈ (1/2, 1).
pub fn ub_star_dominated(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::UbT35)
}

/// `(2/Θ)·[α²Z₁ + 2(1−α)²m − 4α²m²/n]`.
pub fn lb_spread(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::LbT41)
}

/// Two-branch bound on the sorted deviations `ξ₁ ≥ … ≥ ξ_n`.
pub fn lb_zhou(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::LbL42)
}

/// `√(2α²Z₁ + 4(1−α)²m − 8α²m²/n)`.
pub fn lb_zagreb_sqrt(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    bound_on(g, alpha, BoundId::LbC44)
}

/// Degree bound: branch (a) for α ≤ 1/2, branch (b) for α ∈ (1/2, 1).
pub fn lb_degree_branch(g: &Graph, alpha: f64) -> Result<Verdict<BoundResult>> {
    let id = if alpha <= 0.5 { BoundId::LbT45a } else { BoundId::LbT45b };
    bound_on(g, alpha, id)
}

pub fn rel_laplacian(g: &Graph, alpha: f64) -> Result<Verdict<RelationResult>> {
    relation_on(g, alpha, BoundId::RelT51)
}

pub fn rel_line_graph(g: &Graph, alpha: f64) -> Result<Verdict<RelationResult>> {
    relation_on(g, alpha, BoundId::RelT52)
}

pub fn rel_line_graph_pendant(g: &Graph, alpha: f64) -> Result<Verdict<RelationResult>> {
    relation_on(g, alpha, BoundId::RelT55)
}

/// Upper bound on `Θ_{A_α}(G)` from n, m and Z₁.
pub fn ub_spread_invariant(g: &Graph, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let n = g.order() as f64;
    let m = g.size() as f64;
    if g.order() == 0 {
        return Ok(0.0);
    }
    let z1 = g.degree_summary().zagreb1 as f64;
    let a = alpha;
    let v = 2.0 * a * a * z1 + 4.0 * (1.0 - a) * (1.0 - a) * m - 8.0 * a * a * m * m / n;
    Ok(libm::sqrt(v.max(0.0)))
}

/// Right-hand side of the star-plus-edges partial sum bound:
/// `½(α(4m − 3Δ + 2k − 1) + √(α²(Δ+1)² + 4Δ(1−2α))) − ⌊1/k⌋(2α−1)(m−Δ)`.
pub fn ub_partial_sum_star(g: &Graph, alpha: f64, k: usize) -> Result<Verdict<f64>> {
    check_alpha(alpha)?;
    if k == 0 || k > g.order() {
        return Err(crate::Error::InvalidK(k));
    }
    if let Err(e) = alpha_half_open(alpha) {
        return Ok(Verdict::Inapplicable(e));
    }
    let a = alpha;
    let m = g.size() as f64;
    let d = g.degree_summary().max_degree as f64;
    let floor_inv_k = if k == 1 { 1.0 } else { 0.0 };
    let root = libm::sqrt(a * a * (d + 1.0) * (d + 1.0) + 4.0 * d * (1.0 - 2.0 * a));
    let v = 0.5 * (a * (4.0 * m - 3.0 * d + 2.0 * k as f64 - 1.0) + root)
        - floor_inv_k * (2.0 * a - 1.0) * (m - d);
    Ok(Verdict::Applicable(v))
}

/// `|value − energy|` (or `|lhs − rhs|`) for sharpness checks.
pub fn equality_gap(g: &Graph, alpha: f64, id: BoundId) -> Result<Verdict<f64>> {
    let e = evaluate_graph(g, alpha, id)?;
    Ok(match e {
        Evaluation::Inapplicable { reason, .. } => Verdict::Inapplicable(reason),
        other => Verdict::Applicable(other.gap().unwrap_or(0.0)),
    })
}
