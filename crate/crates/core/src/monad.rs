//! Linear monads `O(-1)^n -> O^(2n+2) -> O(1)^n` and their representations.
//!
//! A monad is stored as two pencils: `alpha` (`(2n+2) x n`) and `beta`
//! (`n x (2n+2)`). The functor to quiver representations relabels
//! coefficients (`f_i = alpha_i`, `g_i = beta_i`), so it is bijective on the
//! nose and both directions are exact.

use std::fmt;

use num_traits::Zero;

use crate::charge_one::Charge1Family;
use crate::error::{Error, Result};
use crate::linalg::{primitive_integer_vector, Rational, RationalMatrix};
use crate::pencil::{Answer, LinearPencil, Mode, PencilVerdict, ProbeConfig};
use crate::quiver::{DimVector, QuiverRep};
use crate::sample::Sampler;

/// Attempts made by [`generate_instanton`] before giving up.
pub const DEFAULT_RETRY_BOUND: usize = 256;

/// Consecutive attempts whose `α`-solution space is zero before giving up.
const TRIVIAL_SOLUTION_LIMIT: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monad {
    charge: usize,
    alpha: LinearPencil,
    beta: LinearPencil,
}

impl Monad {
    /// Checks shapes only; the composite may be nonzero.
    pub fn new(alpha: LinearPencil, beta: LinearPencil) -> Result<Self> {
        let n = alpha.cols();
        if n == 0 || alpha.rows() != 2 * n + 2 || beta.rows() != n || beta.cols() != 2 * n + 2 {
            return Err(Error::Shape(format!(
                "monad pencils must be (2n+2)x n and n x(2n+2), got {}x{} and {}x{}",
                alpha.rows(),
                alpha.cols(),
                beta.rows(),
                beta.cols()
            )));
        }
        Ok(Self {
            charge: n,
            alpha,
            beta,
        })
    }

    pub fn charge(&self) -> usize {
        self.charge
    }

    pub fn alpha(&self) -> &LinearPencil {
        &self.alpha
    }

    pub fn beta(&self) -> &LinearPencil {
        &self.beta
    }

    /// `β_i α_j + β_j α_i == 0` for all `i <= j`, i.e. `β(λ) α(λ) ≡ 0`.
    pub fn composite_vanishes(&self) -> bool {
        let (a, b) = (self.alpha.coeff(), self.beta.coeff());
        (0..4).all(|i| (i..4).all(|j| (&(&b[i] * &a[j]) + &(&b[j] * &a[i])).is_zero()))
    }

    pub fn functor_f(&self) -> QuiverRep {
        QuiverRep::from_pencils(&self.alpha, &self.beta).expect("monad shapes are consistent")
    }

    /// Inverse of [`Monad::functor_f`]; requires dimension `(n, 2n+2, n)`.
    pub fn from_rep(r: &QuiverRep) -> Result<Self> {
        if !has_monad_shape(r.dim()) {
            return Err(Error::WrongShape(r.dim()));
        }
        Self::new(r.eta_pencil(), r.phi_pencil())
    }

    /// Pencil verdicts and the resulting sheaf type.
    pub fn diagnose(&self, seed: u64) -> Result<MonadDiagnosis> {
        if !self.composite_vanishes() {
            return Err(Error::CompositeNonzero);
        }
        let cfg = ProbeConfig::with_seed(seed);
        let beta_surjective_everywhere = self.beta.is_surjective_everywhere(&cfg)?;
        let alpha_injective_everywhere = self.alpha.is_injective_everywhere(&cfg)?;
        let alpha_fail_codim2 = self
            .alpha
            .fail_locus_codim_at_least_2(Mode::Injective, &cfg);
        let sheaf_type = sheaf_type(
            &beta_surjective_everywhere,
            &alpha_injective_everywhere,
            &alpha_fail_codim2,
        );
        Ok(MonadDiagnosis {
            beta_surjective_everywhere,
            alpha_injective_everywhere,
            alpha_fail_codim2,
            sheaf_type,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SheafType {
    LocallyFree,
    TorsionFreeNotLF,
    NotInstanton,
    /// Every verdict is affirmative but at least one is only probabilistic.
    Undetermined,
}

impl fmt::Display for SheafType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadDiagnosis {
    pub beta_surjective_everywhere: PencilVerdict,
    pub alpha_injective_everywhere: PencilVerdict,
    pub alpha_fail_codim2: PencilVerdict,
    pub sheaf_type: SheafType,
}

// Exact claims need exact constituent verdicts; a probabilistic affirmative
// anywhere on the path downgrades to Undetermined.
fn sheaf_type(
    beta_surj: &PencilVerdict,
    alpha_inj: &PencilVerdict,
    codim: &PencilVerdict,
) -> SheafType {
    if beta_surj.answer == Answer::No || codim.answer == Answer::No {
        return SheafType::NotInstanton;
    }
    let exact = beta_surj.is_exact() && codim.is_exact();
    match (&alpha_inj.answer, exact) {
        (Answer::Yes, true) => SheafType::LocallyFree,
        (Answer::No, true) => SheafType::TorsionFreeNotLF,
        _ => SheafType::Undetermined,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstantonKind {
    LocallyFree,
    TorsionFree,
    Any,
}

impl InstantonKind {
    fn accepts(self, d: &MonadDiagnosis) -> bool {
        if !d.beta_surjective_everywhere.is_affirmative() || !d.alpha_fail_codim2.is_affirmative() {
            return false;
        }
        match self {
            InstantonKind::LocallyFree => d.alpha_injective_everywhere.is_affirmative(),
            InstantonKind::TorsionFree => d.alpha_injective_everywhere.answer == Answer::No,
            InstantonKind::Any => true,
        }
    }
}

/// Samples an instanton monad of charge `n` with [`DEFAULT_RETRY_BOUND`]
/// attempts.
pub fn generate_instanton(n: usize, kind: InstantonKind, seed: u64) -> Result<Monad> {
    generate_instanton_with_bound(n, kind, seed, DEFAULT_RETRY_BOUND)
}

/// Rejection sampling against [`Monad::diagnose`].
///
/// Charge 1 samples the skew normal form (nonzero Pfaffian for locally free,
/// rank 2 for torsion free) and moves it by a random gauge. Higher charge
/// samples `β`, solves the linear system `β_i α_j + β_j α_i = 0` for `α` and
/// takes a random solution. From charge 4 on the system has at least as many
/// equations as unknowns and random `β` admit only `α = 0`; the search then
/// stops after a few such attempts instead of exhausting the bound.
pub fn generate_instanton_with_bound(
    n: usize,
    kind: InstantonKind,
    seed: u64,
    bound: usize,
) -> Result<Monad> {
    if n == 0 {
        return Err(Error::InvalidParameter("charge must be positive".into()));
    }
    let mut s = Sampler::new(seed);
    let mut trivial_in_a_row = 0;
    for attempt in 0..bound {
        let candidate = if n == 1 {
            let family = match kind {
                InstantonKind::LocallyFree => Charge1Family::LocallyFree,
                InstantonKind::TorsionFree => Charge1Family::GloballySurjectiveRank2,
                InstantonKind::Any if s.index(2) == 0 => Charge1Family::LocallyFree,
                InstantonKind::Any => Charge1Family::GloballySurjectiveRank2,
            };
            Some(Monad::from_rep(&family.sample(&mut s))?)
        } else {
            sample_higher_charge(n, &mut s)
        };
        let Some(m) = candidate else {
            // Random β behave alike; repeated trivial solution spaces mean
            // this charge is out of reach of the sampler.
            trivial_in_a_row += 1;
            if trivial_in_a_row == TRIVIAL_SOLUTION_LIMIT {
                return Err(Error::GenerationFailed {
                    attempts: attempt + 1,
                });
            }
            continue;
        };
        trivial_in_a_row = 0;
        let d = m.diagnose(seed.wrapping_add(attempt as u64))?;
        if kind.accepts(&d) {
            return Ok(m);
        }
    }
    Err(Error::GenerationFailed { attempts: bound })
}

fn sample_higher_charge(n: usize, s: &mut Sampler) -> Option<Monad> {
    let b = 2 * n + 2;
    let beta: [RationalMatrix; 4] = std::array::from_fn(|_| s.matrix(n, b));
    let system = composite_system(&beta, n);
    if system.rank_mod_prime() == Some(system.cols()) {
        return None;
    }
    let kernel = system.kernel_basis();
    if kernel.is_empty() {
        return None;
    }
    let mut x = vec![Rational::zero(); 4 * b * n];
    for v in &kernel {
        let c = s.rational();
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += &c * vi;
        }
    }
    if x.iter().all(Zero::is_zero) {
        return None;
    }
    // A common scale does not change the monad; integral entries keep the
    // later pencil probes cheap.
    let x: Vec<Rational> = primitive_integer_vector(&x)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let alpha: [RationalMatrix; 4] = std::array::from_fn(|k| {
        RationalMatrix::new(b, n, x[k * b * n..(k + 1) * b * n].to_vec()).expect("block size")
    });
    Monad::new(
        LinearPencil::new(alpha).ok()?,
        LinearPencil::new(beta).ok()?,
    )
    .ok()
}

/// Matrix of the linear map `α -> (β_i α_j + β_j α_i)_{i <= j}`, with `α_k`
/// flattened row-major into consecutive blocks of `b * n` unknowns.
fn composite_system(beta: &[RationalMatrix; 4], n: usize) -> RationalMatrix {
    let b = 2 * n + 2;
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect();
    let mut m = RationalMatrix::zeros(pairs.len() * n * n, 4 * b * n);
    let unknown = |k: usize, row: usize, col: usize| k * b * n + row * n + col;
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                let eq = p * n * n + r * n + c;
                // (β_i α_j)[r][c] = Σ_t β_i[r][t] α_j[t][c], and symmetrically.
                for t in 0..b {
                    m[(eq, unknown(j, t, c))] += &beta[i][(r, t)];
                    m[(eq, unknown(i, t, c))] += &beta[j][(r, t)];
                }
            }
        }
    }
    m
}

/// `(n, 2n+2, n)` with `n >= 1`.
pub fn has_monad_shape(d: DimVector) -> bool {
    d.charge().is_some() && d.s_minus1 > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charge_one::{from_skew_form, SkewForm};
    use crate::linalg::int;

    fn charge1(c: [i64; 6]) -> Monad {
        Monad::from_rep(&from_skew_form(&SkewForm::from_i64(c).unwrap())).unwrap()
    }

    #[test]
    fn functor_examples() {
        let m = charge1([1, 0, 0, 0, 0, 1]);
        let r = m.functor_f();
        assert_eq!(
            r,
            from_skew_form(&SkewForm::from_i64([1, 0, 0, 0, 0, 1]).unwrap())
        );
        assert_eq!(Monad::from_rep(&r).unwrap(), m);

        let beta = from_skew_form(&SkewForm::from_i64([1, 0, 0, 0, 0, 1]).unwrap()).phi_pencil();
        let zero = Monad::new(LinearPencil::zero(4, 1), beta).unwrap();
        let r = zero.functor_f();
        assert!(r.f().iter().all(RationalMatrix::is_zero));
        assert!(r.relations_hold() && zero.composite_vanishes());
    }

    #[test]
    fn wrong_shape() {
        let r = QuiverRep::zero(DimVector::new(1, 3, 1));
        assert_eq!(
            Monad::from_rep(&r),
            Err(Error::WrongShape(DimVector::new(1, 3, 1)))
        );
        assert!(Monad::from_rep(&QuiverRep::zero(DimVector::new(0, 2, 0))).is_err());
    }

    #[test]
    fn diagnose_charge1() {
        assert_eq!(
            charge1([1, 0, 0, 0, 0, 1]).diagnose(0).unwrap().sheaf_type,
            SheafType::LocallyFree
        );
        assert_eq!(
            charge1([1, 0, 0, 0, 0, 0]).diagnose(0).unwrap().sheaf_type,
            SheafType::TorsionFreeNotLF
        );
        let dual = Monad::from_rep(&charge1([1, 0, 0, 0, 0, 0]).functor_f().dual()).unwrap();
        assert_eq!(
            dual.diagnose(0).unwrap().sheaf_type,
            SheafType::NotInstanton
        );
    }

    #[test]
    fn diagnose_rejects_nonzero_composite() {
        let m = charge1([1, 0, 0, 0, 0, 1]);
        let mut a = m.alpha().coeff().clone();
        a[0][(0, 0)] += int(1);
        let bad = Monad::new(LinearPencil::new(a).unwrap(), m.beta().clone()).unwrap();
        assert!(!bad.composite_vanishes());
        assert_eq!(bad.diagnose(0), Err(Error::CompositeNonzero));
    }

    #[test]
    fn composite_system_matches_direct_product() {
        let mut s = Sampler::new(5);
        let n = 2;
        let beta: [RationalMatrix; 4] = std::array::from_fn(|_| s.matrix(n, 6));
        let alpha: [RationalMatrix; 4] = std::array::from_fn(|_| s.matrix(6, n));
        let x: Vec<Rational> = alpha.iter().flat_map(|a| a.entries().to_vec()).collect();
        let lhs = composite_system(&beta, n).mul_vec(&x);
        let mut rhs = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                rhs.extend(
                    (&(&beta[i] * &alpha[j]) + &(&beta[j] * &alpha[i]))
                        .entries()
                        .to_vec(),
                );
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generate_charge1() {
        for seed in 0..3 {
            let lf = generate_instanton(1, InstantonKind::LocallyFree, seed).unwrap();
            assert_eq!(lf.diagnose(1).unwrap().sheaf_type, SheafType::LocallyFree);
            let tf = generate_instanton(1, InstantonKind::TorsionFree, seed).unwrap();
            assert_eq!(
                tf.diagnose(1).unwrap().sheaf_type,
                SheafType::TorsionFreeNotLF
            );
        }
        assert_eq!(
            generate_instanton(1, InstantonKind::Any, 9).unwrap(),
            generate_instanton(1, InstantonKind::Any, 9).unwrap()
        );
    }

    #[test]
    fn generate_charge2() {
        let m = generate_instanton(2, InstantonKind::Any, 7).unwrap();
        assert!(m.composite_vanishes());
        assert!(m.functor_f().relations_hold());
        assert_eq!(m.beta().generic_rank(&ProbeConfig::default()), 2);
    }

    #[test]
    fn zero_charge_is_rejected() {
        assert!(matches!(
            generate_instanton(0, InstantonKind::Any, 0),
            Err(Error::InvalidParameter(_))
        ));
    }
}
