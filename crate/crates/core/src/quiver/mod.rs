//! Representations of the three-vertex quiver
//!
//! ```text
//!            η0..η3            φ0..φ3
//!   V_{-1} ==========> V_0 ==========> V_1
//! ```
//!
//! subject to `φ_i η_j + φ_j η_i = 0` for `0 <= i <= j <= 3`. The maps are
//! stored as `f[i]` (`b x a`, for `η_i`) and `g[i]` (`c x b`, for `φ_i`).

pub mod subrep;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::pencil::{Answer, Certificate, LinearPencil, Mode, PencilVerdict, ProbeConfig};

pub use subrep::{all_subrep_dimvectors_charge1, SubrepResult, SubrepSearch, SubrepWitness};

/// Dimension vector `(s_{-1}, s_0, s_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub s_minus1: usize,
    pub s0: usize,
    pub s1: usize,
}

impl DimVector {
    pub const fn new(s_minus1: usize, s0: usize, s1: usize) -> Self {
        Self { s_minus1, s0, s1 }
    }

    /// `(n, 2n+2, n)`, the dimension vector of charge-`n` instanton data.
    pub const fn instanton(n: usize) -> Self {
        Self::new(n, 2 * n + 2, n)
    }

    /// `Some(n)` when the vector is `(n, 2n+2, n)`.
    pub fn charge(&self) -> Option<usize> {
        (*self == Self::instanton(self.s_minus1)).then_some(self.s_minus1)
    }

    pub fn is_zero(&self) -> bool {
        self.s_minus1 == 0 && self.s0 == 0 && self.s1 == 0
    }

    /// Componentwise `<=`.
    pub fn fits_in(&self, other: &DimVector) -> bool {
        self.s_minus1 <= other.s_minus1 && self.s0 <= other.s0 && self.s1 <= other.s1
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s_minus1, self.s0, self.s1)
    }
}

/// Outcome of checking the quiver relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationCheck {
    Holds,
    /// First failing pair in `(i, j)` lexicographic order with `i <= j`.
    Violation {
        i: usize,
        j: usize,
        residual: RationalMatrix,
    },
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        matches!(self, RelationCheck::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverRep {
    dim: DimVector,
    f: [RationalMatrix; 4],
    g: [RationalMatrix; 4],
}

impl QuiverRep {
    /// Validates shapes only; the relations are checked separately.
    pub fn new(dim: DimVector, f: [RationalMatrix; 4], g: [RationalMatrix; 4]) -> Result<Self> {
        let (a, b, c) = (dim.s_minus1, dim.s0, dim.s1);
        for (i, m) in f.iter().enumerate() {
            if m.shape() != (b, a) {
                return Err(Error::Shape(format!(
                    "F{i} is {}x{}, expected {b}x{a}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for (i, m) in g.iter().enumerate() {
            if m.shape() != (c, b) {
                return Err(Error::Shape(format!(
                    "G{i} is {}x{}, expected {c}x{b}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { dim, f, g })
    }

    pub fn zero(dim: DimVector) -> Self {
        let (a, b, c) = (dim.s_minus1, dim.s0, dim.s1);
        Self {
            dim,
            f: std::array::from_fn(|_| RationalMatrix::zeros(b, a)),
            g: std::array::from_fn(|_| RationalMatrix::zeros(c, b)),
        }
    }

    /// Builds a representation from its two pencils.
    pub fn from_pencils(eta: &LinearPencil, phi: &LinearPencil) -> Result<Self> {
        let dim = DimVector::new(eta.cols(), eta.rows(), phi.rows());
        Self::new(dim, eta.coeff().clone(), phi.coeff().clone())
    }

    pub fn dim(&self) -> DimVector {
        self.dim
    }

    pub fn f(&self) -> &[RationalMatrix; 4] {
        &self.f
    }

    pub fn g(&self) -> &[RationalMatrix; 4] {
        &self.g
    }

    pub fn check_relations(&self) -> RelationCheck {
        for i in 0..4 {
            for j in i..4 {
                let residual = &(&self.g[i] * &self.f[j]) + &(&self.g[j] * &self.f[i]);
                if !residual.is_zero() {
                    return RelationCheck::Violation { i, j, residual };
                }
            }
        }
        RelationCheck::Holds
    }

    pub fn relations_hold(&self) -> bool {
        self.check_relations().holds()
    }

    /// `f_i ↦ h0 f_i h_{-1}^{-1}`, `g_i ↦ h1 g_i h0^{-1}`.
    pub fn gauge_act(
        &self,
        h_minus1: &RationalMatrix,
        h0: &RationalMatrix,
        h1: &RationalMatrix,
    ) -> Result<Self> {
        let expect = [
            (h_minus1, self.dim.s_minus1),
            (h0, self.dim.s0),
            (h1, self.dim.s1),
        ];
        for (m, n) in expect {
            if m.shape() != (n, n) {
                return Err(Error::Shape(format!(
                    "gauge matrix is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let (im1, i0) = (h_minus1.inverse()?, h0.inverse()?);
        h1.inverse()?;
        Ok(Self {
            dim: self.dim,
            f: std::array::from_fn(|i| &(h0 * &self.f[i]) * &im1),
            g: std::array::from_fn(|i| &(h1 * &self.g[i]) * &i0),
        })
    }

    /// Linear change of coordinates on P^3: `f'_j = Σ_k p[k][j] f_k`, and the
    /// same for `g`. Preserves the relations for any `p`.
    pub fn change_coordinates(&self, p: &RationalMatrix) -> Result<Self> {
        if p.shape() != (4, 4) {
            return Err(Error::Shape("coordinate change must be 4x4".into()));
        }
        let mix = |ms: &[RationalMatrix; 4]| -> [RationalMatrix; 4] {
            std::array::from_fn(|j| {
                (0..4).fold(
                    RationalMatrix::zeros(ms[0].rows(), ms[0].cols()),
                    |acc, k| &acc + &ms[k].scale(&p[(k, j)]),
                )
            })
        };
        Ok(Self {
            dim: self.dim,
            f: mix(&self.f),
            g: mix(&self.g),
        })
    }

    /// Dual representation of dimension `(c, b, a)`: `f'_i = g_i^T`,
    /// `g'_i = f_i^T`. Relations are preserved.
    pub fn dual(&self) -> Self {
        Self {
            dim: DimVector::new(self.dim.s1, self.dim.s0, self.dim.s_minus1),
            f: std::array::from_fn(|i| self.g[i].transpose()),
            g: std::array::from_fn(|i| self.f[i].transpose()),
        }
    }

    /// `Σ λ_i f_i`, a `b x a` pencil.
    pub fn eta_pencil(&self) -> LinearPencil {
        LinearPencil::new(self.f.clone()).expect("shapes validated at construction")
    }

    /// `Σ λ_i g_i`, a `c x b` pencil.
    pub fn phi_pencil(&self) -> LinearPencil {
        LinearPencil::new(self.g.clone()).expect("shapes validated at construction")
    }

    /// For `a == 1`: `M = [u_0 u_1 u_2 u_3]` (`b x 4`) with `u_i = f_i`.
    pub fn u_matrix(&self) -> Result<RationalMatrix> {
        if self.dim.s_minus1 != 1 {
            return Err(Error::Shape(
                "u-matrix needs a one-dimensional V_{-1}".into(),
            ));
        }
        Ok(self.eta_pencil().stacked())
    }

    /// For `c == 1`: `N` (`4 x b`) with rows `v_i = g_i`.
    pub fn v_matrix(&self) -> Result<RationalMatrix> {
        if self.dim.s1 != 1 {
            return Err(Error::Shape("v-matrix needs a one-dimensional V_1".into()));
        }
        Ok(RationalMatrix::vstack(&[
            &self.g[0], &self.g[1], &self.g[2], &self.g[3],
        ]))
    }

    pub fn globally_injective(&self, cfg: &ProbeConfig) -> PencilVerdict {
        injective_or_wide(&self.eta_pencil(), cfg)
    }

    pub fn locally_injective(&self, cfg: &ProbeConfig) -> PencilVerdict {
        self.eta_pencil()
            .fail_locus_codim_at_least_2(Mode::Injective, cfg)
    }

    pub fn globally_surjective(&self, cfg: &ProbeConfig) -> PencilVerdict {
        injective_or_wide(&self.phi_pencil().transpose(), cfg)
    }

    pub fn locally_surjective(&self, cfg: &ProbeConfig) -> PencilVerdict {
        self.phi_pencil()
            .fail_locus_codim_at_least_2(Mode::Surjective, cfg)
    }

    /// Dimension of the space of morphisms `self -> other`: triples
    /// `(h_{-1}, h_0, h_1)` with `f'_i h_{-1} = h_0 f_i` and `g'_i h_0 = h_1 g_i`.
    pub fn hom_space_dim(&self, other: &QuiverRep) -> usize {
        let (a1, b1, c1) = (self.dim.s_minus1, self.dim.s0, self.dim.s1);
        let (a2, b2, c2) = (other.dim.s_minus1, other.dim.s0, other.dim.s1);
        let (off0, off1) = (a2 * a1, a2 * a1 + b2 * b1);
        let unknowns = off1 + c2 * c1;
        let hm = |p: usize, q: usize| p * a1 + q;
        let h0 = |p: usize, q: usize| off0 + p * b1 + q;
        let h1 = |p: usize, q: usize| off1 + p * c1 + q;

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..4 {
            // (f'_i h_{-1} - h_0 f_i)[r][s] = 0
            for r in 0..b2 {
                for s in 0..a1 {
                    let mut row = vec![Rational::zero(); unknowns];
                    for p in 0..a2 {
                        row[hm(p, s)] += &other.f[i][(r, p)];
                    }
                    for q in 0..b1 {
                        row[h0(r, q)] -= &self.f[i][(q, s)];
                    }
                    rows.push(row);
                }
            }
            // (g'_i h_0 - h_1 g_i)[r][s] = 0
            for r in 0..c2 {
                for s in 0..b1 {
                    let mut row = vec![Rational::zero(); unknowns];
                    for p in 0..b2 {
                        row[h0(p, s)] += &other.g[i][(r, p)];
                    }
                    for q in 0..c1 {
                        row[h1(r, q)] -= &self.g[i][(q, s)];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return unknowns;
        }
        let system = RationalMatrix::from_rows(rows).expect("rows share length");
        unknowns - system.rank()
    }

    pub fn is_schurian(&self) -> bool {
        self.hom_space_dim(self) == 1
    }
}

/// A pencil with fewer rows than columns is injective nowhere.
fn injective_or_wide(p: &LinearPencil, cfg: &ProbeConfig) -> PencilVerdict {
    if p.rows() < p.cols() {
        let e0 = vec![
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        return PencilVerdict {
            answer: Answer::No,
            certificate: Some(Certificate::Point(e0)),
        };
    }
    p.is_injective_everywhere(cfg).expect("rows >= cols")
}

/// The simple representation at vertex `-1`, `0` or `1`.
pub fn simple(vertex: i32) -> QuiverRep {
    let dim = match vertex {
        -1 => DimVector::new(1, 0, 0),
        0 => DimVector::new(0, 1, 0),
        _ => DimVector::new(0, 0, 1),
    };
    QuiverRep::zero(dim)
}

/// Identity-scaled gauge triple, useful for tests of gauge invariance.
pub fn scalar_gauge(dim: DimVector, c: &Rational) -> [RationalMatrix; 3] {
    [
        RationalMatrix::identity(dim.s_minus1).scale(c),
        RationalMatrix::identity(dim.s0).scale(c),
        RationalMatrix::identity(dim.s1).scale(c),
    ]
}
