//! King θ-stability for dimension vectors `(n, 2n+2, n)`.
//!
//! A parameter is the pair `(α, γ)`; the middle weight is forced by
//! `θ · (n, 2n+2, n) = 0`. A representation is θ-stable when `θ · s < 0` for
//! every proper nonzero subrepresentation dimension `s`, and θ-semistable
//! when `θ · s <= 0`. Every such inequality is a half-plane bounded by a line
//! through the origin, so stability regions are open sectors.

pub mod geometry;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, Rational};
use crate::quiver::subrep::sampled_subreps;
use crate::quiver::{all_subrep_dimvectors_charge1, DimVector, QuiverRep, SubrepSearch};

pub use geometry::{open_cone, Ray, Sector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityParam {
    pub alpha: Rational,
    pub gamma: Rational,
    pub charge: usize,
}

impl StabilityParam {
    pub fn new(alpha: Rational, gamma: Rational, charge: usize) -> Self {
        Self {
            alpha,
            gamma,
            charge,
        }
    }

    /// `-(α + γ) n / (2n + 2)`.
    pub fn middle(&self) -> Rational {
        let n = self.charge as i64;
        -(&self.alpha + &self.gamma) * Rational::new(n.into(), (2 * n + 2).into())
    }

    pub fn theta_dot(&self, s: &DimVector) -> Rational {
        &self.alpha * Rational::from_integer(s.s_minus1.into())
            + self.middle() * Rational::from_integer(s.s0.into())
            + &self.gamma * Rational::from_integer(s.s1.into())
    }

    pub fn scaled(&self, lambda: &Rational) -> Self {
        Self::new(&self.alpha * lambda, &self.gamma * lambda, self.charge)
    }

    /// Strictly inside the fourth quadrant `α > 0, γ < 0`.
    pub fn in_open_fourth_quadrant(&self) -> bool {
        self.alpha.is_positive() && self.gamma.is_negative()
    }
}

/// Coefficients `(cα, cγ)` with `θ · s = cα α + cγ γ`.
pub fn wall_normal(n: usize, s: &DimVector) -> (Rational, Rational) {
    let k = Rational::new((n as i64).into(), (2 * n as i64 + 2).into());
    let s0 = Rational::from_integer(s.s0.into());
    (
        Rational::from_integer(s.s_minus1.into()) - &k * &s0,
        Rational::from_integer(s.s1.into()) - &k * &s0,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StabilityVerdict {
    Stable,
    /// Semistable with some subrepresentation attaining `θ · s = 0`.
    SemistableOnly,
    /// Carries a subrepresentation dimension with `θ · s > 0`.
    Unstable(DimVector),
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, StabilityVerdict::Stable)
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityVerdict::Stable => write!(f, "Stable"),
            StabilityVerdict::SemistableOnly => write!(f, "SemistableOnly"),
            StabilityVerdict::Unstable(s) => write!(f, "Unstable, certificate {s}"),
        }
    }
}

fn check_charge1(r: &QuiverRep, theta: &StabilityParam) -> Result<()> {
    let expected = DimVector::instanton(1);
    if r.dim() != expected {
        return Err(Error::WrongDim {
            expected,
            found: r.dim(),
        });
    }
    if theta.charge != 1 {
        return Err(Error::InvalidParameter(format!(
            "stability parameter has charge {}, expected 1",
            theta.charge
        )));
    }
    Ok(())
}

/// Verdict from a set of subrepresentation dimensions. The certificate is
/// the first dimension (in the set's order) attaining the maximum of `θ · s`.
pub fn verdict_from_subreps<'a>(
    theta: &StabilityParam,
    subreps: impl IntoIterator<Item = &'a DimVector>,
) -> StabilityVerdict {
    let mut best: Option<(Rational, DimVector)> = None;
    for s in subreps {
        let v = theta.theta_dot(s);
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, *s));
        }
    }
    match best {
        Some((v, s)) if v.is_positive() => StabilityVerdict::Unstable(s),
        Some((v, _)) if v.is_zero() => StabilityVerdict::SemistableOnly,
        _ => StabilityVerdict::Stable,
    }
}

/// Exact stability decision for a representation of dimension `(1, 4, 1)`.
pub fn is_stable_charge1(r: &QuiverRep, theta: &StabilityParam) -> Result<StabilityVerdict> {
    check_charge1(r, theta)?;
    let subreps = all_subrep_dimvectors_charge1(r)?;
    Ok(verdict_from_subreps(theta, &subreps))
}

/// Behaviour of a representation on a boundary ray of its stable region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryStatus {
    SemistableOnly,
    StrictlyUnstable,
}

/// The open set of parameters at which a representation is stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityRegion {
    /// Disjoint open sectors; empty when the representation is never stable.
    pub sectors: Vec<Sector>,
    /// Status on each boundary ray, listed per sector as `(start, end)`.
    pub boundary_status: Vec<(BoundaryStatus, BoundaryStatus)>,
}

impl StabilityRegion {
    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn contains(&self, alpha: &Rational, gamma: &Rational) -> bool {
        self.sectors.iter().any(|s| s.contains(alpha, gamma))
    }
}

fn boundary_status(theta: &StabilityParam, subreps: &BTreeSet<DimVector>) -> BoundaryStatus {
    match verdict_from_subreps(theta, subreps) {
        StabilityVerdict::Unstable(_) => BoundaryStatus::StrictlyUnstable,
        _ => BoundaryStatus::SemistableOnly,
    }
}

/// Stable region of a `(1, 4, 1)` representation: the intersection of the
/// half-planes `θ · s < 0` over its exact subrepresentation dimensions.
pub fn stability_region_charge1(r: &QuiverRep) -> Result<StabilityRegion> {
    let subreps = all_subrep_dimvectors_charge1(r)?;
    let normals: Vec<(Rational, Rational)> = subreps.iter().map(|s| wall_normal(1, s)).collect();
    let sector = if normals.is_empty() {
        None
    } else {
        open_cone(&normals)
    };
    let mut region = StabilityRegion {
        sectors: Vec::new(),
        boundary_status: Vec::new(),
    };
    if let Some(sec) = sector {
        let at = |ray: &Ray| StabilityParam::new(ray.alpha(), ray.gamma(), 1);
        region.boundary_status.push((
            boundary_status(&at(&sec.start), &subreps),
            boundary_status(&at(&sec.end), &subreps),
        ));
        region.sectors.push(sec);
    }
    Ok(region)
}

/// Dimension vectors allowed for subrepresentations of charge-`n` instanton
/// representations by the necessary conditions
/// `s_{-1} + 1 <= s_0` (when `s_{-1} >= 1`), `s_0 - s_1 <= n - 1` (when
/// `s_1 < n`), `s_0 - 4 s_1 <= 0` and `s_1 >= 1`. Proper and nonzero only.
pub fn candidate_dimvectors(n: usize) -> Vec<DimVector> {
    let full = DimVector::instanton(n);
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=2 * n + 2 {
            for c in 0..=n {
                let s = DimVector::new(a, b, c);
                if s.is_zero() || s == full {
                    continue;
                }
                if satisfies_necessary_conditions(n, &s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// The four necessary conditions used by [`candidate_dimvectors`].
pub fn satisfies_necessary_conditions(n: usize, s: &DimVector) -> bool {
    let (a, b, c) = (s.s_minus1 as i64, s.s0 as i64, s.s1 as i64);
    let n = n as i64;
    (a == 0 || a < b) && (c >= n || b - c < n) && b - 4 * c <= 0 && c >= 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaEpsCheck {
    Holds,
    Counterexample { dim: DimVector, value: Rational },
}

/// Checks `θ_ε · s < 0` with `θ_ε = (ε, (1-ε)/3, -1)` over every charge-2
/// candidate dimension vector.
pub fn verify_theta_eps_charge2(eps: &Rational) -> Result<ThetaEpsCheck> {
    verify_theta_eps(2, eps)
}

/// The same test for any charge with `θ_ε = (α, γ) = (ε, -1)`. For `n >= 3`
/// this only checks the necessary conditions; it proves nothing about
/// stability.
pub fn verify_theta_eps(n: usize, eps: &Rational) -> Result<ThetaEpsCheck> {
    if !(eps.is_positive() && *eps < Rational::one()) {
        return Err(Error::InvalidParameter(format!(
            "epsilon {eps} is not in (0, 1)"
        )));
    }
    let theta = StabilityParam::new(eps.clone(), -Rational::one(), n);
    for s in candidate_dimvectors(n) {
        let v = theta.theta_dot(&s);
        if !v.is_negative() {
            return Ok(ThetaEpsCheck::Counterexample { dim: s, value: v });
        }
    }
    Ok(ThetaEpsCheck::Holds)
}

/// Evidence about stability gathered without an exact subrepresentation set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryAnalysis {
    pub theta: StabilityParam,
    /// A found subrepresentation with `θ · s > 0`: instability is certified.
    pub destabilizing: Option<DimVector>,
    /// A found subrepresentation with `θ · s = 0`: stability is excluded.
    pub balancing: Option<DimVector>,
    /// Largest `θ · s` over the candidate dimension vectors.
    pub candidate_max: Option<(DimVector, Rational)>,
    pub subreps_found: usize,
}

impl NecessaryAnalysis {
    /// `Unstable` when certified; otherwise no verdict.
    pub fn certified_verdict(&self) -> Option<StabilityVerdict> {
        self.destabilizing.map(StabilityVerdict::Unstable)
    }

    /// True when no candidate dimension vector violates `θ · s < 0`.
    pub fn candidates_all_negative(&self) -> bool {
        self.candidate_max
            .as_ref()
            .is_none_or(|(_, v)| v.is_negative())
    }
}

/// Sampled-subrepresentation analysis for dimension `(n, 2n+2, n)`.
pub fn analyze_stability(
    r: &QuiverRep,
    theta: &StabilityParam,
    search: SubrepSearch,
) -> Result<NecessaryAnalysis> {
    let n = r.dim().charge().ok_or(Error::WrongShape(r.dim()))?;
    if theta.charge != n {
        return Err(Error::InvalidParameter(format!(
            "stability parameter has charge {}, representation has charge {n}",
            theta.charge
        )));
    }
    let found = sampled_subreps(r, search);
    let mut destabilizing: Option<(Rational, DimVector)> = None;
    let mut balancing = None;
    for s in found.keys() {
        let v = theta.theta_dot(s);
        if v.is_positive() && destabilizing.as_ref().is_none_or(|(b, _)| v > *b) {
            destabilizing = Some((v, *s));
        } else if v.is_zero() && balancing.is_none() {
            balancing = Some(*s);
        }
    }
    let candidate_max = candidate_dimvectors(n)
        .into_iter()
        .map(|s| (theta.theta_dot(&s), s))
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(v, s)| (s, v));
    Ok(NecessaryAnalysis {
        theta: theta.clone(),
        destabilizing: destabilizing.map(|(_, s)| s),
        balancing,
        candidate_max,
        subreps_found: found.len(),
    })
}

/// A line through the origin on which `θ · s = 0` for its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    /// Primitive integer normal `(cα, cγ)`, first nonzero entry positive.
    pub normal: (Rational, Rational),
    /// Direction of the line in the half-turn `[0, π)`.
    pub direction: Ray,
    pub generators: Vec<DimVector>,
}

impl Wall {
    /// Rays of the line lying in the open fourth quadrant (at most one).
    pub fn fourth_quadrant_ray(&self) -> Option<Ray> {
        [self.direction.clone(), self.direction.opposite()]
            .into_iter()
            .find(Ray::in_open_fourth_quadrant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub sector: Sector,
    pub sample: StabilityParam,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallArrangement {
    pub charge: usize,
    /// Sorted by the angle of `direction`.
    pub walls: Vec<Wall>,
    /// Open sectors of the fourth quadrant between consecutive walls, in
    /// counterclockwise order from the negative γ-axis.
    pub chambers: Vec<Chamber>,
}

/// Candidate walls from a set of dimension vectors.
pub fn walls_from(n: usize, dims: &[DimVector]) -> Vec<Wall> {
    let mut walls: Vec<Wall> = Vec::new();
    for s in dims {
        let (ca, cg) = wall_normal(n, s);
        if ca.is_zero() && cg.is_zero() {
            continue;
        }
        let prim = primitive_integer_vector(&[ca, cg]);
        let normal = (
            Rational::from_integer(prim[0].clone()),
            Rational::from_integer(prim[1].clone()),
        );
        match walls.iter_mut().find(|w| w.normal == normal) {
            Some(w) => w.generators.push(*s),
            None => {
                let dir = Ray::new(&-normal.1.clone(), &normal.0).expect("nonzero normal");
                let dir = if dir.in_upper_half() {
                    dir
                } else {
                    dir.opposite()
                };
                walls.push(Wall {
                    normal,
                    direction: dir,
                    generators: vec![*s],
                });
            }
        }
    }
    walls.sort_by(|a, b| a.direction.angle_cmp(&b.direction));
    walls
}

/// All dimension vectors `<= (1,4,1)` that occur as subrepresentations of
/// some `(1,4,1)` representation satisfying the relations.
fn realizable_charge1() -> Vec<DimVector> {
    let full = DimVector::instanton(1);
    let mut out = Vec::new();
    for a in 0..=1 {
        for b in 0..=4 {
            for c in 0..=1 {
                let s = DimVector::new(a, b, c);
                if !s.is_zero() && s != full {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Wall-and-chamber structure of the (α, γ)-plane for charge `n`.
///
/// For `n = 1` every dimension vector below `(1,4,1)` is realized by some
/// representation (the zero representation realizes all of them), so the
/// walls are exact candidates. For `n >= 2` the walls come from the
/// necessary conditions and are candidates only.
pub fn wall_arrangement(n: usize) -> Result<WallArrangement> {
    if n == 0 {
        return Err(Error::InvalidParameter("charge must be positive".into()));
    }
    let dims = if n == 1 {
        realizable_charge1()
    } else {
        candidate_dimvectors(n)
    };
    let walls = walls_from(n, &dims);
    let neg_gamma = Ray::from_i64(0, -1).expect("nonzero");
    let pos_alpha = Ray::from_i64(1, 0).expect("nonzero");
    let mut rays: Vec<Ray> = walls.iter().filter_map(Wall::fourth_quadrant_ray).collect();
    rays.sort_by(|a, b| a.angle_cmp(b));
    rays.dedup();
    let mut boundary = vec![neg_gamma];
    boundary.extend(rays);
    boundary.push(pos_alpha);
    let chambers = boundary
        .windows(2)
        .map(|w| {
            let sector = Sector {
                start: w[0].clone(),
                end: w[1].clone(),
            };
            let p = sector.interior_point();
            Chamber {
                sample: StabilityParam::new(p.alpha(), p.gamma(), n),
                sector,
            }
        })
        .collect();
    Ok(WallArrangement {
        charge: n,
        walls,
        chambers,
    })
}

/// Interior walls of the fourth quadrant across which the stability of some
/// sampled `(1,4,1)` representation changes.
pub fn effective_walls_charge1(sample: &[QuiverRep]) -> Result<Vec<Ray>> {
    let arrangement = wall_arrangement(1)?;
    let subreps: Vec<BTreeSet<DimVector>> = sample
        .iter()
        .map(all_subrep_dimvectors_charge1)
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for pair in arrangement.chambers.windows(2) {
        let changes = subreps.iter().any(|set| {
            verdict_from_subreps(&pair[0].sample, set).is_stable()
                != verdict_from_subreps(&pair[1].sample, set).is_stable()
        });
        if changes {
            out.push(pair[0].sector.end.clone());
        }
    }
    Ok(out)
}
