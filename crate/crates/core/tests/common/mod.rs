//! Test-side oracles. Nothing here calls the library's elimination,
//! subrepresentation or stability code; inputs are read through plain
//! accessors only.
#![allow(dead_code)]

use std::collections::BTreeSet;

use instanton_quiver::{Charge1Family, DimVector, QuiverRep, Rational, RationalMatrix};
use num_traits::{One, Signed, Zero};

pub type Rows = Vec<Vec<Rational>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rows_of(m: &RationalMatrix) -> Rows {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn transpose(m: &Rows, cols: usize) -> Rows {
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn matmul(a: &Rows, b: &Rows, inner: usize, cols: usize) -> Rows {
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &r[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form by textbook Gauss-Jordan; returns pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(m: &mut Rows) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Rows) -> usize {
    rref(&mut m.clone()).len()
}

pub fn rank_of(m: &RationalMatrix) -> usize {
    rank(&rows_of(m))
}

/// Basis of `{x : m x = 0}` for an `r x cols` matrix.
pub fn kernel(m: &Rows, cols: usize) -> Rows {
    let mut e = m.clone();
    let pivots = rref(&mut e);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -e[i][free].clone();
            }
            v
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &Rows) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Rows = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `u`-matrix (columns `f_i`) and `v`-matrix (rows `g_i`) of a `(1,4,1)` rep.
pub fn m_and_n(r: &QuiverRep) -> (Rows, Rows) {
    let m: Rows = (0..4)
        .map(|row| (0..4).map(|i| r.f()[i][(row, 0)].clone()).collect())
        .collect();
    let n: Rows = (0..4).map(|i| r.g()[i].row(0).to_vec()).collect();
    (m, n)
}

/// Proper nonzero subrepresentation dimension vectors of a `(1,4,1)` rep,
/// enumerated over the four choices of `U ⊆ V_{-1}` and `W ⊆ V_1`:
///
/// * `U = 0, W = 0`: `V' ⊆ ker N`.
/// * `U = 0, W = V_1`: any `V'`.
/// * `U = V_{-1}, W = 0`: `im M ⊆ V' ⊆ ker N`, possible only if `N M = 0`.
/// * `U = V_{-1}, W = V_1`: `im M ⊆ V'`.
pub fn brute_subreps_charge1(r: &QuiverRep) -> BTreeSet<DimVector> {
    let (m, n) = m_and_n(r);
    let rank_m = rank(&m);
    let ker_n = 4 - rank(&n);
    let nm_zero = matmul(&n, &m, 4, 4).iter().flatten().all(Zero::is_zero);
    let mut out = BTreeSet::new();
    for b in 0..=ker_n {
        out.insert(DimVector::new(0, b, 0));
    }
    for b in 0..=4 {
        out.insert(DimVector::new(0, b, 1));
    }
    if nm_zero {
        for b in rank_m..=ker_n {
            out.insert(DimVector::new(1, b, 0));
        }
    }
    for b in rank_m..=4 {
        out.insert(DimVector::new(1, b, 1));
    }
    out.remove(&DimVector::new(0, 0, 0));
    out.remove(&DimVector::new(1, 4, 1));
    out
}

/// Checks that a sampled member really has the ranks of its family.
pub fn family_ranks_hold(family: Charge1Family, r: &QuiverRep) -> bool {
    let (m, n) = m_and_n(r);
    let ranks = (rank(&m), rank(&n));
    let nm_zero = matmul(&n, &m, 4, 4).iter().flatten().all(Zero::is_zero);
    match family {
        Charge1Family::LocallyFree => ranks == (4, 4),
        Charge1Family::GloballySurjectiveRank2 => ranks == (2, 4),
        Charge1Family::GloballyInjectiveRank2 => ranks == (4, 2),
        Charge1Family::DoublyDegenerate => ranks == (2, 2) && !nm_zero,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Stable,
    SemistableOnly,
    Unstable,
}

/// Stability of each `(1,4,1)` family as stated by the classification
/// theorem: locally free reps are stable on the whole open fourth quadrant;
/// rank-2 globally surjective reps only below `γ = -α`; their duals only
/// above it; doubly degenerate reps never. On the wall the non-locally-free
/// families are strictly semistable. Outside the open quadrant nothing is
/// stable.
pub fn main_theorem(family: Charge1Family, alpha: &Rational, gamma: &Rational) -> Expected {
    if !(alpha.is_positive() && gamma.is_negative()) {
        return Expected::Unstable;
    }
    let s = alpha + gamma;
    match family {
        Charge1Family::LocallyFree => Expected::Stable,
        _ if s.is_zero() => Expected::SemistableOnly,
        Charge1Family::GloballySurjectiveRank2 if s.is_negative() => Expected::Stable,
        Charge1Family::GloballyInjectiveRank2 if s.is_positive() => Expected::Stable,
        _ => Expected::Unstable,
    }
}

/// `θ·(a, b, c)` for `θ = (α, -(α+γ) n / (2n+2), γ)`, computed directly.
pub fn theta_dot(n: usize, alpha: &Rational, gamma: &Rational, s: DimVector) -> Rational {
    let n = q(n as i64);
    let middle = -(alpha + gamma) * &n / (q(2) * &n + q(2));
    alpha * q(s.s_minus1 as i64) + middle * q(s.s0 as i64) + gamma * q(s.s1 as i64)
}

/// Does `β_i α_j + β_j α_i` vanish for all `i <= j`?
pub fn composite_oracle(alpha: &[RationalMatrix; 4], beta: &[RationalMatrix; 4]) -> bool {
    let (rows, inner, cols) = (beta[0].rows(), beta[0].cols(), alpha[0].cols());
    (0..4).all(|i| {
        (i..4).all(|j| {
            let a = matmul(&rows_of(&beta[i]), &rows_of(&alpha[j]), inner, cols);
            let b = matmul(&rows_of(&beta[j]), &rows_of(&alpha[i]), inner, cols);
            (0..rows).all(|r| (0..cols).all(|c| (&a[r][c] + &b[r][c]).is_zero()))
        })
    })
}

/// The four necessary inequalities on subrepresentation dimension vectors of
/// a charge-`n` instanton representation. The first is only imposed when
/// `s_{-1} >= 1`, since `(0, 0, s_1)` is always a subrepresentation.
pub fn lemma_sub(n: usize, s: DimVector) -> bool {
    let (a, b, c, n) = (s.s_minus1 as i64, s.s0 as i64, s.s1 as i64, n as i64);
    let item1 = a == 0 || a < b;
    let item2 = c >= n || b - c < n;
    let item3 = b - 4 * c <= 0;
    let item4 = c >= 1;
    item1 && item2 && item3 && item4
}
