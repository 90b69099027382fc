//! Charge one: representations of dimension `(1, 4, 1)`.
//!
//! When the `v`-matrix `N` (rows `g_i`) is invertible, gauging by `N` makes
//! the `v_i` the canonical basis and turns the `u`-columns into a
//! skew-symmetric matrix
//!
//! ```text
//!       [ 0 -a -b -c ]
//!   R = [ a  0 -d -e ]
//!       [ b  d  0 -f ]
//!       [ c  e  f  0 ]
//! ```
//!
//! determined up to scale, i.e. a point `[a:b:c:d:e:f]` of P^5. Its
//! Pfaffian `be - af - dc` vanishes exactly on the rank-2 locus.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::quiver::{DimVector, QuiverRep, RelationCheck};
use crate::sample::Sampler;
use crate::stability::{is_stable_charge1, StabilityParam, StabilityVerdict};

/// Homogeneous coordinates `[a:b:c:d:e:f]`, compared projectively.
#[derive(Clone, Debug)]
pub struct SkewForm {
    coords: [Rational; 6],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricMembership {
    OnQuadric,
    OffQuadric,
}

impl SkewForm {
    pub fn new(coords: [Rational; 6]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::AllZero);
        }
        Ok(Self { coords })
    }

    pub fn from_i64(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(|v| Rational::from_integer(v.into())))
    }

    /// Reads the coordinates of a 4x4 skew-symmetric matrix in the layout
    /// of the module documentation.
    pub fn from_matrix(m: &RationalMatrix) -> Result<Self> {
        if m.shape() != (4, 4) {
            return Err(Error::Shape("skew form needs a 4x4 matrix".into()));
        }
        if !m.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Self::new([
            m[(1, 0)].clone(),
            m[(2, 0)].clone(),
            m[(3, 0)].clone(),
            m[(2, 1)].clone(),
            m[(3, 1)].clone(),
            m[(3, 2)].clone(),
        ])
    }

    pub fn coords(&self) -> &[Rational; 6] {
        &self.coords
    }

    /// Representative with first nonzero coordinate equal to 1.
    pub fn normalized(&self) -> [Rational; 6] {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("constructor rejects the zero tuple")
            .recip();
        self.coords.clone().map(|c| c * &lead)
    }

    pub fn matrix(&self) -> RationalMatrix {
        let [a, b, c, d, e, f] = &self.coords;
        let z = Rational::zero();
        RationalMatrix::new(
            4,
            4,
            vec![
                z.clone(),
                -a,
                -b,
                -c,
                a.clone(),
                z.clone(),
                -d,
                -e,
                b.clone(),
                d.clone(),
                z.clone(),
                -f,
                c.clone(),
                e.clone(),
                f.clone(),
                z,
            ],
        )
        .expect("4x4")
    }

    /// `be - af - dc`; defined only up to the square of the scale.
    pub fn pfaffian(&self) -> Rational {
        let [a, b, c, d, e, f] = &self.coords;
        b * e - a * f - d * c
    }

    /// 2 or 4.
    pub fn rank(&self) -> usize {
        if self.pfaffian().is_zero() {
            2
        } else {
            4
        }
    }

    pub fn quadric_membership(&self) -> QuadricMembership {
        if self.pfaffian().is_zero() {
            QuadricMembership::OnQuadric
        } else {
            QuadricMembership::OffQuadric
        }
    }
}

impl PartialEq for SkewForm {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for SkewForm {}

impl Hash for SkewForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl fmt::Display for SkewForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.normalized().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl fmt::Display for QuadricMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadricMembership::OnQuadric => write!(f, "OnQuadric"),
            QuadricMembership::OffQuadric => write!(f, "OffQuadric"),
        }
    }
}

fn require_charge1(r: &QuiverRep) -> Result<()> {
    let expected = DimVector::instanton(1);
    if r.dim() != expected {
        return Err(Error::WrongDim {
            expected,
            found: r.dim(),
        });
    }
    Ok(())
}

fn require_relations(r: &QuiverRep) -> Result<()> {
    match r.check_relations() {
        RelationCheck::Holds => Ok(()),
        RelationCheck::Violation { i, j, .. } => Err(Error::RelationsViolated { i, j }),
    }
}

/// `B = N M`, which is skew-symmetric exactly when the relations hold.
pub fn composite_matrix(r: &QuiverRep) -> Result<RationalMatrix> {
    require_charge1(r)?;
    Ok(&r.v_matrix()? * &r.u_matrix()?)
}

/// The point of P^5 attached to a globally surjective `(1,4,1)`
/// representation.
pub fn normal_form(r: &QuiverRep) -> Result<SkewForm> {
    require_charge1(r)?;
    require_relations(r)?;
    let n = r.v_matrix()?;
    let rank = n.rank();
    if rank < 4 {
        return Err(Error::NotGloballySurjective { rank });
    }
    SkewForm::from_matrix(&(&n * &r.u_matrix()?))
}

/// The representation with `v_i = e_i^T` and `u`-columns the columns of the
/// skew matrix of `coords`.
pub fn from_p5_point(coords: [Rational; 6]) -> Result<QuiverRep> {
    Ok(from_skew_form(&SkewForm::new(coords)?))
}

pub fn from_skew_form(s: &SkewForm) -> QuiverRep {
    let m = s.matrix();
    let f = std::array::from_fn(|i| RationalMatrix::column_vector(m.column(i)));
    let g = std::array::from_fn(|i| {
        let mut row = RationalMatrix::zeros(1, 4);
        row[(0, i)] = Rational::one();
        row
    });
    QuiverRep::new(DimVector::instanton(1), f, g).expect("shapes are (4x1, 1x4)")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Charge1Kind {
    LocallyFreeInstanton,
    NonLocallyFreeInstanton,
    PerverseDual,
    NotStableHere,
    EmptyRegion,
}

/// Position of `(α, γ)` relative to the fourth quadrant and the line `γ = -α`.
/// The axes and the origin count as outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Q4BelowWall,
    Q4AboveWall,
    Wall,
    OutsideQ4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Charge1Class {
    pub kind: Charge1Kind,
    pub region: Region,
}

impl fmt::Display for Charge1Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn region_of(alpha: &Rational, gamma: &Rational) -> Region {
    if !(alpha.is_positive() && gamma.is_negative()) {
        return Region::OutsideQ4;
    }
    let s = alpha + gamma;
    if s.is_negative() {
        Region::Q4BelowWall
    } else if s.is_positive() {
        Region::Q4AboveWall
    } else {
        Region::Wall
    }
}

/// Names the stable object a `(1,4,1)` representation gives at `θ`.
///
/// Stable representations are locally free instantons when both `M` and `N`
/// have rank 4; otherwise they are non-locally-free instantons below the
/// wall and perverse duals above it. Unstable or strictly semistable ones
/// are `NotStableHere`, and every parameter outside the open fourth quadrant
/// is `EmptyRegion`.
pub fn classify(r: &QuiverRep, theta: &StabilityParam) -> Result<Charge1Class> {
    require_charge1(r)?;
    require_relations(r)?;
    let region = region_of(&theta.alpha, &theta.gamma);
    let verdict = is_stable_charge1(r, theta)?;
    let kind = match (region, verdict) {
        (Region::OutsideQ4, _) => Charge1Kind::EmptyRegion,
        (_, StabilityVerdict::Stable) => {
            let (rm, rn) = (r.u_matrix()?.rank(), r.v_matrix()?.rank());
            match (rm == 4 && rn == 4, region) {
                (true, _) => Charge1Kind::LocallyFreeInstanton,
                (false, Region::Q4BelowWall) => Charge1Kind::NonLocallyFreeInstanton,
                (false, Region::Q4AboveWall) => Charge1Kind::PerverseDual,
                (false, _) if rn == 4 => Charge1Kind::NonLocallyFreeInstanton,
                (false, _) => Charge1Kind::PerverseDual,
            }
        }
        _ => Charge1Kind::NotStableHere,
    };
    Ok(Charge1Class { kind, region })
}

/// The four classes of `(1,4,1)` representations distinguished by the ranks
/// of `M` and `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Charge1Family {
    /// `rank M = rank N = 4` (nonzero Pfaffian).
    LocallyFree,
    /// `rank N = 4`, `rank M = 2`.
    GloballySurjectiveRank2,
    /// `rank M = 4`, `rank N = 2`; the duals of the previous family.
    GloballyInjectiveRank2,
    /// `rank M = rank N = 2` with `N M != 0`.
    DoublyDegenerate,
}

impl Charge1Family {
    pub const ALL: [Charge1Family; 4] = [
        Charge1Family::LocallyFree,
        Charge1Family::GloballySurjectiveRank2,
        Charge1Family::GloballyInjectiveRank2,
        Charge1Family::DoublyDegenerate,
    ];

    /// A fixed member of the family.
    pub fn representative(self) -> QuiverRep {
        let skew = |c| from_skew_form(&SkewForm::from_i64(c).expect("nonzero"));
        match self {
            Charge1Family::LocallyFree => skew([1, 0, 0, 0, 0, 1]),
            Charge1Family::GloballySurjectiveRank2 => skew([1, 0, 0, 0, 0, 0]),
            Charge1Family::GloballyInjectiveRank2 => skew([1, 0, 0, 0, 0, 0]).dual(),
            Charge1Family::DoublyDegenerate => doubly_degenerate_base(),
        }
    }

    /// A random member: a random point of the family's normal-form locus,
    /// moved by a random gauge and a random coordinate change of P^3.
    pub fn sample(self, s: &mut Sampler) -> QuiverRep {
        let base = match self {
            Charge1Family::LocallyFree => loop {
                let form = SkewForm::new(std::array::from_fn(|_| s.rational()));
                if let Ok(form) = form {
                    if !form.pfaffian().is_zero() {
                        break from_skew_form(&form);
                    }
                }
            },
            Charge1Family::GloballySurjectiveRank2 => from_skew_form(&random_rank2_form(s)),
            Charge1Family::GloballyInjectiveRank2 => from_skew_form(&random_rank2_form(s)).dual(),
            Charge1Family::DoublyDegenerate => doubly_degenerate_base(),
        };
        randomize(&base, s)
    }
}

/// `x y^T - y x^T` for independent random `x`, `y`.
fn random_rank2_form(s: &mut Sampler) -> SkewForm {
    loop {
        let (x, y) = (s.vector(4), s.vector(4));
        let m = RationalMatrix::from_columns(4, std::slice::from_ref(&x)).expect("4x1");
        let n = RationalMatrix::from_columns(4, std::slice::from_ref(&y)).expect("4x1");
        let r = &(&m * &n.transpose()) - &(&n * &m.transpose());
        if !r.is_zero() {
            return SkewForm::from_matrix(&r).expect("skew by construction");
        }
    }
}

fn doubly_degenerate_base() -> QuiverRep {
    let col = |i: Option<usize>| {
        let mut m = RationalMatrix::zeros(4, 1);
        if let Some(i) = i {
            m[(i, 0)] = Rational::one();
        }
        m
    };
    let row = |i: Option<(usize, i64)>| {
        let mut m = RationalMatrix::zeros(1, 4);
        if let Some((i, v)) = i {
            m[(0, i)] = Rational::from_integer(v.into());
        }
        m
    };
    QuiverRep::new(
        DimVector::instanton(1),
        [col(Some(0)), col(Some(1)), col(None), col(None)],
        [row(Some((1, 1))), row(Some((0, -1))), row(None), row(None)],
    )
    .expect("shapes")
}

fn randomize(r: &QuiverRep, s: &mut Sampler) -> QuiverRep {
    let t1 = RationalMatrix::identity(1).scale(&s.nonzero_rational());
    let t2 = RationalMatrix::identity(1).scale(&s.nonzero_rational());
    let a = s.invertible_matrix(4);
    let p = s.invertible_matrix(4);
    r.gauge_act(&t1, &a, &t2)
        .and_then(|g| g.change_coordinates(&p))
        .expect("invertible gauge and coordinate change")
}
