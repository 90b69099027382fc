//! Subrepresentation search via the (U, W) sandwich.
//!
//! For `U ⊆ V_{-1}` and `W ⊆ V_1` put `F(U) = span{f_i(U)}` and
//! `G(W) = ∩ g_i^{-1}(W)`. A subrepresentation of dimension
//! `(dim U, s0, dim W)` with these outer spaces exists iff
//! `F(U) ⊆ G(W)` and `dim F(U) <= s0 <= dim G(W)`; any `V` squeezed between
//! the two works. `F(U) ⊆ G(W)` is equivalent to `Φ(U) ⊆ W` where
//! `Φ(U) = span{g_i F(U)}`, which is what drives the candidate generation.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{DimVector, QuiverRep};
use crate::error::{Error, Result};
use crate::linalg::{in_span, span_rank, Rational, RationalMatrix};
use crate::pencil::combinations;
use crate::sample::Sampler;

/// How hard to look when `U` or `W` is not pinned down by its dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubrepSearch {
    /// Coordinate subspaces and the subspaces forced by the maps.
    ExactFinite,
    /// `ExactFinite` plus `samples` seeded random subspaces per dimension.
    Sampled { samples: usize, seed: u64 },
}

impl Default for SubrepSearch {
    fn default() -> Self {
        SubrepSearch::Sampled {
            samples: 64,
            seed: 0,
        }
    }
}

/// Bases of the three subspaces of a subrepresentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubrepWitness {
    pub dim: DimVector,
    pub basis_u: Vec<Vec<Rational>>,
    pub basis_v: Vec<Vec<Rational>>,
    pub basis_w: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubrepResult {
    Found(SubrepWitness),
    /// Certified absence; only produced when the search space is finite.
    NotFound,
    Unknown,
}

impl SubrepResult {
    pub fn is_found(&self) -> bool {
        matches!(self, SubrepResult::Found(_))
    }
}

impl SubrepWitness {
    /// Exact check that the bases are independent, have the advertised sizes,
    /// and span subspaces stable under all eight maps.
    pub fn verify(&self, r: &QuiverRep) -> bool {
        let d = r.dim();
        let sizes_ok = self.basis_u.len() == self.dim.s_minus1
            && self.basis_v.len() == self.dim.s0
            && self.basis_w.len() == self.dim.s1
            && self.basis_u.iter().all(|v| v.len() == d.s_minus1)
            && self.basis_v.iter().all(|v| v.len() == d.s0)
            && self.basis_w.iter().all(|v| v.len() == d.s1);
        if !sizes_ok || !self.dim.fits_in(&d) {
            return false;
        }
        let independent = span_rank(d.s_minus1, &self.basis_u) == self.basis_u.len()
            && span_rank(d.s0, &self.basis_v) == self.basis_v.len()
            && span_rank(d.s1, &self.basis_w) == self.basis_w.len();
        independent
            && r.f().iter().all(|f| {
                self.basis_u
                    .iter()
                    .all(|u| in_span(&self.basis_v, &f.mul_vec(u)))
            })
            && r.g().iter().all(|g| {
                self.basis_v
                    .iter()
                    .all(|v| in_span(&self.basis_w, &g.mul_vec(v)))
            })
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn full_basis(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| unit(n, i)).collect()
}

/// Basis of the span of `vectors` (all of length `n`).
fn span_basis(n: usize, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    RationalMatrix::from_columns(n, vectors)
        .expect("equal lengths")
        .column_space_basis()
}

/// Rows spanning the annihilator of `span(basis)` in `Q^n`.
fn annihilator(n: usize, basis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if basis.is_empty() {
        return full_basis(n);
    }
    RationalMatrix::from_columns(n, basis)
        .expect("equal lengths")
        .transpose()
        .kernel_basis()
}

/// `{ x : A m_i x = 0 for all i }` with `A` the annihilator of `target`.
fn preimage(maps: &[RationalMatrix; 4], target: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let (rows, cols) = maps[0].shape();
    let ann = annihilator(rows, target);
    if ann.is_empty() {
        return full_basis(cols);
    }
    let a = RationalMatrix::from_rows(ann).expect("equal lengths");
    let products: Vec<RationalMatrix> = maps.iter().map(|m| &a * m).collect();
    let refs: Vec<&RationalMatrix> = products.iter().collect();
    RationalMatrix::vstack(&refs).kernel_basis()
}

/// Basis of `span{ m_i x : x in basis }`.
fn image(maps: &[RationalMatrix; 4], basis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = maps[0].rows();
    let vectors: Vec<Vec<Rational>> = maps
        .iter()
        .flat_map(|m| basis.iter().map(move |x| m.mul_vec(x)))
        .collect();
    span_basis(rows, &vectors)
}

/// Extends `basis` greedily with vectors from `pool` up to `target` vectors.
fn extend(basis: &[Vec<Rational>], pool: &[Vec<Rational>], target: usize) -> Vec<Vec<Rational>> {
    let mut out = basis.to_vec();
    for v in pool {
        if out.len() >= target {
            break;
        }
        if !in_span(&out, v) {
            out.push(v.clone());
        }
    }
    out
}

type Basis = Vec<Vec<Rational>>;

/// Tests one (U, W) pair and returns bases of `(F(U), G(W))` when the
/// sandwich is nonempty.
fn sandwich(r: &QuiverRep, u: &[Vec<Rational>], w: &[Vec<Rational>]) -> Option<(Basis, Basis)> {
    let f_u = image(r.f(), u);
    let g_w = preimage(r.g(), w);
    f_u.iter().all(|v| in_span(&g_w, v)).then_some((f_u, g_w))
}

fn record(
    found: &mut BTreeMap<DimVector, SubrepWitness>,
    r: &QuiverRep,
    u: &[Vec<Rational>],
    w: &[Vec<Rational>],
) {
    let Some((f_u, g_w)) = sandwich(r, u, w) else {
        return;
    };
    for s0 in f_u.len()..=g_w.len() {
        let dim = DimVector::new(u.len(), s0, w.len());
        found.entry(dim).or_insert_with(|| SubrepWitness {
            dim,
            basis_u: u.to_vec(),
            basis_v: extend(&f_u, &g_w, s0),
            basis_w: w.to_vec(),
        });
    }
}

/// Candidate subspaces of `Q^n` of dimension `k` inside `span(ambient)`:
/// coordinate-like choices from the ambient basis plus random combinations.
fn subspaces_within(
    ambient: &[Vec<Rational>],
    k: usize,
    samples: usize,
    s: &mut Sampler,
) -> Vec<Vec<Vec<Rational>>> {
    let m = ambient.len();
    if k > m {
        return Vec::new();
    }
    if k == 0 || k == m {
        return vec![ambient[..k].to_vec()];
    }
    let mut out: Vec<Vec<Vec<Rational>>> = combinations(m, k)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| ambient[i].clone()).collect())
        .collect();
    let n = ambient.first().map_or(0, Vec::len);
    for _ in 0..samples {
        let basis: Vec<Vec<Rational>> = (0..k)
            .map(|_| {
                let coeffs = s.vector(m);
                let mut v = vec![Rational::zero(); n];
                for (c, a) in coeffs.iter().zip(ambient) {
                    for (x, y) in v.iter_mut().zip(a) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect();
        if span_rank(n, &basis) == k {
            out.push(basis);
        }
    }
    out
}

/// Enumerates (U, W) pairs and returns one witness per dimension vector found.
///
/// For every candidate `U` the spaces `W ⊇ Φ(U)` are tried; for every
/// candidate `W` the spaces `U ⊆ {u : f_i u ∈ G(W)}` are tried. When
/// `a, c <= 1` every candidate space is forced and the result is the exact
/// set of subrepresentation dimension vectors. Proper, nonzero only.
pub fn sampled_subreps(r: &QuiverRep, search: SubrepSearch) -> BTreeMap<DimVector, SubrepWitness> {
    let d = r.dim();
    let (samples, seed) = match search {
        SubrepSearch::ExactFinite => (0, 0),
        SubrepSearch::Sampled { samples, seed } => (samples, seed),
    };
    let mut s = Sampler::derived(seed, 17);
    let mut found = BTreeMap::new();
    let (full_u, full_w) = (full_basis(d.s_minus1), full_basis(d.s1));

    for k in 0..=d.s_minus1 {
        for u in subspaces_within(&full_u, k, samples, &mut s) {
            let phi = image(r.g(), &image(r.f(), &u));
            for l in phi.len()..=d.s1 {
                record(&mut found, r, &u, &extend(&phi, &full_w, l));
                if samples > 0 && l > phi.len() && l < d.s1 {
                    let pool: Vec<Vec<Rational>> = (0..d.s1).map(|_| s.vector(d.s1)).collect();
                    record(&mut found, r, &u, &extend(&phi, &pool, l));
                }
            }
        }
    }
    for k in 0..=d.s1 {
        for w in subspaces_within(&full_w, k, samples, &mut s) {
            let g_w = preimage(r.g(), &w);
            let u_max = preimage(r.f(), &g_w);
            for l in 0..=u_max.len() {
                for u in subspaces_within(&u_max, l, samples.min(4), &mut s) {
                    record(&mut found, r, &u, &w);
                }
            }
        }
    }
    found.retain(|dim, _| !dim.is_zero() && *dim != d);
    found
}

impl QuiverRep {
    /// Looks for a subrepresentation of dimension `target`.
    ///
    /// When `target.s_minus1 ∈ {0, a}` and `target.s1 ∈ {0, c}` the outer
    /// spaces are forced and the answer is exact. Otherwise the result is
    /// `Found` or `Unknown`.
    pub fn subrep_exists(&self, target: DimVector, search: SubrepSearch) -> Result<SubrepResult> {
        let d = self.dim();
        if !target.fits_in(&d) || target.is_zero() || target == d {
            return Err(Error::InvalidParameter(format!(
                "{target} is not a proper nonzero dimension vector below {d}"
            )));
        }
        let forced_u = target.s_minus1 == 0 || target.s_minus1 == d.s_minus1;
        let forced_w = target.s1 == 0 || target.s1 == d.s1;
        if forced_u && forced_w {
            let u = full_basis(d.s_minus1)[..target.s_minus1].to_vec();
            let w = full_basis(d.s1)[..target.s1].to_vec();
            let mut found = BTreeMap::new();
            record(&mut found, self, &u, &w);
            return Ok(match found.remove(&target) {
                Some(wit) => SubrepResult::Found(wit),
                None => SubrepResult::NotFound,
            });
        }
        Ok(match sampled_subreps(self, search).remove(&target) {
            Some(wit) => SubrepResult::Found(wit),
            None => SubrepResult::Unknown,
        })
    }
}

/// Exact set of dimension vectors of proper nonzero subrepresentations of a
/// representation of dimension `(1, 4, 1)`.
pub fn all_subrep_dimvectors_charge1(r: &QuiverRep) -> Result<BTreeSet<DimVector>> {
    let expected = DimVector::instanton(1);
    if r.dim() != expected {
        return Err(Error::WrongDim {
            expected,
            found: r.dim(),
        });
    }
    Ok(sampled_subreps(r, SubrepSearch::ExactFinite)
        .into_keys()
        .collect())
}
