//! Rays and open angular sectors of the (α, γ)-plane with exact rational
//! directions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg::Rational;

/// A ray from the origin, stored as a primitive integer direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    alpha: BigInt,
    gamma: BigInt,
}

impl Ray {
    /// `None` for the zero vector.
    pub fn new(alpha: &Rational, gamma: &Rational) -> Option<Self> {
        if alpha.is_zero() && gamma.is_zero() {
            return None;
        }
        let l = alpha.denom().lcm(gamma.denom());
        let a = alpha.numer() * (&l / alpha.denom());
        let g = gamma.numer() * (&l / gamma.denom());
        let d = a.gcd(&g);
        let (a, g) = (a / &d, g / &d);
        Some(Self { alpha: a, gamma: g })
    }

    pub fn from_i64(alpha: i64, gamma: i64) -> Option<Self> {
        Self::new(
            &Rational::from_integer(alpha.into()),
            &Rational::from_integer(gamma.into()),
        )
    }

    pub fn alpha(&self) -> Rational {
        Rational::from_integer(self.alpha.clone())
    }

    pub fn gamma(&self) -> Rational {
        Rational::from_integer(self.gamma.clone())
    }

    pub fn opposite(&self) -> Self {
        Self {
            alpha: -self.alpha.clone(),
            gamma: -self.gamma.clone(),
        }
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn rot90(&self) -> Self {
        Self {
            alpha: -self.gamma.clone(),
            gamma: self.alpha.clone(),
        }
    }

    /// Angle in `[0, π)`.
    pub fn in_upper_half(&self) -> bool {
        self.half() == 0
    }

    fn half(&self) -> u8 {
        if self.gamma.is_positive() || (self.gamma.is_zero() && self.alpha.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Counterclockwise angle order starting at the positive α-axis.
    pub fn angle_cmp(&self, other: &Ray) -> Ordering {
        self.half()
            .cmp(&other.half())
            .then_with(|| match cross(self, other).sign() {
                num_bigint::Sign::Plus => Ordering::Less,
                num_bigint::Sign::Minus => Ordering::Greater,
                num_bigint::Sign::NoSign => Ordering::Equal,
            })
    }

    /// Does the ray lie in the open fourth quadrant `α > 0, γ < 0`?
    pub fn in_open_fourth_quadrant(&self) -> bool {
        self.alpha.is_positive() && self.gamma.is_negative()
    }

    fn plus(&self, other: &Ray) -> Option<Ray> {
        Ray::new(
            &Rational::from_integer(&self.alpha + &other.alpha),
            &Rational::from_integer(&self.gamma + &other.gamma),
        )
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.gamma)
    }
}

fn cross(a: &Ray, b: &Ray) -> BigInt {
    &a.alpha * &b.gamma - &a.gamma * &b.alpha
}

/// Open sector swept counterclockwise from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sector {
    pub start: Ray,
    pub end: Ray,
}

impl Sector {
    /// Strict containment of the nonzero point `(alpha, gamma)`.
    pub fn contains(&self, alpha: &Rational, gamma: &Rational) -> bool {
        let Some(p) = Ray::new(alpha, gamma) else {
            return false;
        };
        let rel = |r: &Ray| relative(&self.start, r);
        let (rp, re) = (rel(&p), rel(&self.end));
        let zero = rel(&self.start);
        rp.angle_cmp(&zero) == Ordering::Greater && rp.angle_cmp(&re) == Ordering::Less
    }

    /// A point strictly inside the sector.
    pub fn interior_point(&self) -> Ray {
        arc_midpoint(&self.start, &self.end)
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "open sector from {} to {}", self.start, self.end)
    }
}

/// `r` expressed in the frame whose first axis is `origin`.
fn relative(origin: &Ray, r: &Ray) -> Ray {
    let dot = &origin.alpha * &r.alpha + &origin.gamma * &r.gamma;
    let cr = cross(origin, r);
    Ray::new(&Rational::from_integer(dot), &Rational::from_integer(cr)).expect("nonzero")
}

/// A direction strictly inside the counterclockwise arc from `a` to `b`.
fn arc_midpoint(a: &Ray, b: &Ray) -> Ray {
    match cross(a, b).sign() {
        num_bigint::Sign::Plus => a.plus(b).expect("non-opposite rays"),
        num_bigint::Sign::Minus => a.plus(b).expect("non-opposite rays").opposite(),
        num_bigint::Sign::NoSign if a == b => a.opposite(),
        num_bigint::Sign::NoSign => a.rot90(),
    }
}

/// The open cone `{ x : n_k · x < 0 for all k }` for normals `n_k = (nα, nγ)`.
///
/// Returns `None` when the cone is empty. At least one constraint must be
/// given; a zero normal makes the cone empty.
pub fn open_cone(normals: &[(Rational, Rational)]) -> Option<Sector> {
    assert!(
        !normals.is_empty(),
        "open_cone needs at least one constraint"
    );
    if normals.iter().any(|(a, g)| a.is_zero() && g.is_zero()) {
        return None;
    }
    let mut rays: Vec<Ray> = normals
        .iter()
        .flat_map(|(a, g)| {
            let r = Ray::new(&-g, a).expect("nonzero normal");
            [r.opposite(), r]
        })
        .collect();
    rays.sort_by(Ray::angle_cmp);
    rays.dedup();
    let inside = |r: &Ray| {
        normals
            .iter()
            .all(|(a, g)| (a * r.alpha() + g * r.gamma()).is_negative())
    };
    let k = rays.len();
    let good: Vec<bool> = (0..k)
        .map(|i| inside(&arc_midpoint(&rays[i], &rays[(i + 1) % k])))
        .collect();
    let first = (0..k).find(|&i| good[i] && !good[(i + k - 1) % k])?;
    let mut last = first;
    while good[(last + 1) % k] && (last + 1) % k != first {
        last = (last + 1) % k;
    }
    Some(Sector {
        start: rays[first].clone(),
        end: rays[(last + 1) % k].clone(),
    })
}
