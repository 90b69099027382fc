//! Matrices of linear forms `x0*M0 + x1*M1 + x2*M2 + x3*M3` on P^3 and exact
//! probes of the locus where such a matrix drops rank.
//!
//! Injectivity questions are posed for `rows >= cols`; surjectivity questions
//! are answered on the transposed pencil. A point `lambda` *fails* when the
//! evaluated matrix has rank below `cols`.
//!
//! Probes restrict the pencil to a line or a plane of P^3. On a line the
//! maximal minors become univariate polynomials and the line meets the fail
//! locus iff their gcd is non-constant (or a point at infinity fails). On a
//! plane the minors become bivariate and the plane meets the fail locus iff
//! they generate a proper ideal. Both tests are exact over the algebraic
//! closure; only the choice of lines and planes is random.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, Rational, RationalMatrix};
use crate::poly::{groebner_basis, no_common_affine_zero, Poly2, UniPoly};
use crate::sample::Sampler;

/// `Σ λ_i coeff[i]` for `λ ∈ P^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearPencil {
    rows: usize,
    cols: usize,
    coeff: [RationalMatrix; 4],
}

/// Which property of the evaluated matrices is asked about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Injective,
    Surjective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    /// No counterexample after `rounds` independent randomized probes.
    ProbablyYes {
        rounds: usize,
    },
}

/// Evidence supporting a negative answer. Every variant refers to the pencil
/// in its injective orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A nonzero `λ` at which the rank drops.
    Point(Vec<Rational>),
    /// All maximal minors restricted to `base + t*dir` share the non-constant
    /// factor `gcd`.
    Line {
        base: Vec<Rational>,
        dir: Vec<Rational>,
        gcd: UniPoly,
    },
    /// The maximal minors restricted to `origin + x*p + y*q` generate the
    /// proper ideal with reduced lex basis `basis`.
    Plane {
        origin: Vec<Rational>,
        p: Vec<Rational>,
        q: Vec<Rational>,
        basis: Vec<Poly2>,
    },
    /// Every probed line met the fail locus.
    Lines(Vec<Certificate>),
    /// `rows - cols + 1 <= 3`: every component of the rank-drop locus has
    /// codimension at most `rows - cols + 1`, and the locus is nonempty over
    /// the complex numbers because the twisted bundle is ample. It need not
    /// contain a rational point.
    DimensionCount { rows: usize, cols: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilVerdict {
    pub answer: Answer,
    pub certificate: Option<Certificate>,
}

/// Probe counts and seed for the randomized parts of pencil questions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub seed: u64,
    /// Random points for generic rank and rank-drop search.
    pub samples: usize,
    pub lines: usize,
    pub planes: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 16,
            lines: 8,
            planes: 8,
        }
    }
}

impl ProbeConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

impl PencilVerdict {
    fn yes() -> Self {
        Self {
            answer: Answer::Yes,
            certificate: None,
        }
    }

    fn no(certificate: Certificate) -> Self {
        Self {
            answer: Answer::No,
            certificate: Some(certificate),
        }
    }

    /// `Yes` or `ProbablyYes`.
    pub fn is_affirmative(&self) -> bool {
        !matches!(self.answer, Answer::No)
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.answer, Answer::ProbablyYes { .. })
    }

    /// Re-checks the certificate against `p` (in the orientation of `mode`).
    /// Verdicts without a certificate verify trivially.
    pub fn verify(&self, p: &LinearPencil, mode: Mode) -> bool {
        match &self.certificate {
            None => self.answer != Answer::No,
            Some(c) => c.verify(&p.oriented(mode)),
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Yes => write!(f, "Yes"),
            Answer::No => write!(f, "No"),
            Answer::ProbablyYes { rounds } => write!(f, "ProbablyYes({rounds})"),
        }
    }
}

impl Certificate {
    /// Exact re-verification against an injective-orientation pencil.
    pub fn verify(&self, p: &LinearPencil) -> bool {
        match self {
            Certificate::Point(l) => {
                l.len() == 4 && l.iter().any(|x| !x.is_zero()) && p.evaluate(l).rank() < p.cols
            }
            Certificate::Line { base, dir, gcd } => {
                if gcd.is_constant() {
                    return false;
                }
                let restricted = p.line_minors(base, dir);
                restricted.iter().all(|m| m.div_rem(gcd).1.is_zero())
            }
            Certificate::Plane {
                origin,
                p: pp,
                q,
                basis,
            } => {
                if basis.iter().any(Poly2::is_unit) || p.cols > 4 {
                    return false;
                }
                groebner_basis(&p.plane_minors(origin, pp, q)) == *basis
            }
            Certificate::Lines(cs) => !cs.is_empty() && cs.iter().all(|c| c.verify(p)),
            Certificate::DimensionCount { rows, cols } => {
                (*rows, *cols) == (p.rows, p.cols) && *cols >= 1 && *rows < cols + 3
            }
        }
    }
}

impl LinearPencil {
    pub fn new(coeff: [RationalMatrix; 4]) -> Result<Self> {
        let (rows, cols) = coeff[0].shape();
        if coeff.iter().any(|m| m.shape() != (rows, cols)) {
            return Err(Error::Shape("pencil coefficients differ in shape".into()));
        }
        Ok(Self { rows, cols, coeff })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            coeff: std::array::from_fn(|_| RationalMatrix::zeros(rows, cols)),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn coeff(&self) -> &[RationalMatrix; 4] {
        &self.coeff
    }

    pub fn into_coeff(self) -> [RationalMatrix; 4] {
        self.coeff
    }

    /// `Σ λ_i coeff[i]`. Panics unless `lambda.len() == 4`.
    pub fn evaluate(&self, lambda: &[Rational]) -> RationalMatrix {
        assert_eq!(lambda.len(), 4, "a point of P^3 has four coordinates");
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for (l, m) in lambda.iter().zip(&self.coeff) {
            if !l.is_zero() {
                out = &out + &m.scale(l);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            coeff: std::array::from_fn(|i| self.coeff[i].transpose()),
        }
    }

    fn oriented(&self, mode: Mode) -> Self {
        match mode {
            Mode::Injective => self.clone(),
            Mode::Surjective => self.transpose(),
        }
    }

    /// `[coeff[0] | coeff[1] | coeff[2] | coeff[3]]`, a `rows x 4cols` matrix.
    pub fn stacked(&self) -> RationalMatrix {
        RationalMatrix::hstack(&[
            &self.coeff[0],
            &self.coeff[1],
            &self.coeff[2],
            &self.coeff[3],
        ])
    }

    /// For a single-column pencil: the `rows x 4` matrix whose kernel is the
    /// set of `λ` annihilating the column.
    fn column_stack(&self) -> RationalMatrix {
        debug_assert_eq!(self.cols, 1);
        self.stacked()
    }

    /// Maximum rank over `cfg.samples` seeded random points; a certified lower
    /// bound for the generic rank.
    pub fn generic_rank(&self, cfg: &ProbeConfig) -> usize {
        let mut s = Sampler::derived(cfg.seed, 1);
        let full = self.rows.min(self.cols);
        let mut best = 0;
        for _ in 0..cfg.samples.max(1) {
            best = best.max(self.evaluate(&s.nonzero_vector(4)).rank());
            if best == full {
                break;
            }
        }
        best
    }

    /// Is the evaluated matrix injective at every `λ ≠ 0`?
    ///
    /// Exact for single-column pencils and for `rows <= cols + 2`, where the
    /// rank-drop locus is never empty. Otherwise a rank drop found at a
    /// sampled point, on a probed line or on a probed plane gives an exact
    /// `No`; no drop anywhere gives `ProbablyYes`.
    pub fn is_injective_everywhere(&self, cfg: &ProbeConfig) -> Result<PencilVerdict> {
        if self.rows < self.cols {
            return Err(Error::Shape(format!(
                "injectivity needs rows >= cols, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.injective_everywhere_unchecked(cfg))
    }

    /// Is the evaluated matrix surjective at every `λ ≠ 0`?
    pub fn is_surjective_everywhere(&self, cfg: &ProbeConfig) -> Result<PencilVerdict> {
        self.transpose().is_injective_everywhere(cfg)
    }

    fn injective_everywhere_unchecked(&self, cfg: &ProbeConfig) -> PencilVerdict {
        if self.cols == 0 {
            return PencilVerdict::yes();
        }
        if self.cols == 1 {
            let stack = self.column_stack();
            return match stack.kernel_basis().into_iter().next() {
                None => PencilVerdict::yes(),
                Some(l) => PencilVerdict::no(Certificate::Point(l)),
            };
        }
        if self.generic_rank(cfg) < self.cols {
            let e0 = vec![int(1), int(0), int(0), int(0)];
            if self.evaluate(&e0).rank() < self.cols {
                return PencilVerdict::no(Certificate::Point(e0));
            }
        }
        // Expected codimension rows - cols + 1 is at most 3.
        if self.rows < self.cols + 3 {
            return PencilVerdict::no(Certificate::DimensionCount {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut s = Sampler::derived(cfg.seed, 2);
        for _ in 0..cfg.samples {
            let l = s.nonzero_vector(4);
            if self.evaluate(&l).rank() < self.cols {
                return PencilVerdict::no(Certificate::Point(l));
            }
        }
        for _ in 0..cfg.lines {
            let (base, dir) = random_line(&mut s);
            if let Some(c) = self.line_hit(&base, &dir, &mut s) {
                return PencilVerdict::no(c);
            }
        }
        if self.cols > 4 {
            return PencilVerdict {
                answer: Answer::ProbablyYes { rounds: cfg.lines },
                certificate: None,
            };
        }
        for _ in 0..cfg.planes {
            let (origin, p, q) = random_plane(&mut s);
            if let Some(c) = self.plane_hit(&origin, &p, &q, &mut s) {
                return PencilVerdict::no(c);
            }
        }
        PencilVerdict {
            answer: Answer::ProbablyYes { rounds: cfg.planes },
            certificate: None,
        }
    }

    /// Does the locus where injectivity (resp. surjectivity) fails have
    /// codimension at least 2 in P^3?
    ///
    /// A hypersurface meets every line, so one probed line that misses the
    /// locus proves `Yes`. `No` is reported when every probed line meets it,
    /// with the per-line evidence. Single-column pencils (after orientation)
    /// are decided exactly by the rank of the coefficient stack.
    pub fn fail_locus_codim_at_least_2(&self, mode: Mode, cfg: &ProbeConfig) -> PencilVerdict {
        let p = self.oriented(mode);
        if p.cols == 0 {
            return PencilVerdict::yes();
        }
        if p.cols == 1 {
            let stack = p.column_stack();
            if stack.rank() >= 2 {
                return PencilVerdict::yes();
            }
            let l = stack
                .kernel_basis()
                .into_iter()
                .next()
                .expect("rank <= 1 leaves a kernel");
            return PencilVerdict::no(Certificate::Point(l));
        }
        if p.rows < p.cols || p.generic_rank(cfg) < p.cols {
            let e0 = vec![int(1), int(0), int(0), int(0)];
            if p.evaluate(&e0).rank() < p.cols {
                return PencilVerdict::no(Certificate::Point(e0));
            }
        }
        let mut s = Sampler::derived(cfg.seed, 3);
        let mut hits = Vec::with_capacity(cfg.lines);
        for _ in 0..cfg.lines.max(1) {
            let (base, dir) = random_line(&mut s);
            match p.line_hit(&base, &dir, &mut s) {
                None => return PencilVerdict::yes(),
                Some(c) => hits.push(c),
            }
        }
        PencilVerdict::no(Certificate::Lines(hits))
    }

    /// All maximal minors restricted to the affine line `base + t*dir`.
    fn line_minors(&self, base: &[Rational], dir: &[Rational]) -> Vec<UniPoly> {
        let (nodes, mats) = self.line_samples(base, dir);
        combinations(self.rows, self.cols)
            .iter()
            .map(|rows| {
                let ys: Vec<Rational> = mats
                    .iter()
                    .map(|m| m.select_rows(rows).determinant().expect("square minor"))
                    .collect();
                UniPoly::interpolate(&nodes, &ys)
            })
            .collect()
    }

    fn line_samples(
        &self,
        base: &[Rational],
        dir: &[Rational],
    ) -> (Vec<Rational>, Vec<RationalMatrix>) {
        let nodes: Vec<Rational> = (0..=self.cols as i64).map(int).collect();
        let mats = nodes
            .iter()
            .map(|t| self.evaluate(&affine(base, dir, t)))
            .collect();
        (nodes, mats)
    }

    /// Exact test whether the projective line through `base` and `dir` meets
    /// the fail locus; returns a certificate when it does.
    fn line_hit(
        &self,
        base: &[Rational],
        dir: &[Rational],
        s: &mut Sampler,
    ) -> Option<Certificate> {
        if self.evaluate(dir).rank() < self.cols {
            return Some(Certificate::Point(dir.to_vec()));
        }
        let (nodes, mats) = self.line_samples(base, dir);
        // det(L * A(t)) is a combination of maximal minors, so a constant gcd
        // of two such combinations already rules out a common root.
        let mut g = UniPoly::zero();
        for _ in 0..2 {
            let l = s.matrix(self.cols, self.rows);
            let ys: Vec<Rational> = mats
                .iter()
                .map(|m| (&l * m).determinant().expect("square"))
                .collect();
            g = g.gcd(&UniPoly::interpolate(&nodes, &ys));
        }
        if g.degree() == Some(0) {
            return None;
        }
        let mut g = UniPoly::zero();
        for rows in combinations(self.rows, self.cols) {
            let ys: Vec<Rational> = mats
                .iter()
                .map(|m| m.select_rows(&rows).determinant().expect("square"))
                .collect();
            g = g.gcd(&UniPoly::interpolate(&nodes, &ys));
            if g.degree() == Some(0) {
                return None;
            }
        }
        if g.is_zero() {
            return Some(Certificate::Point(base.to_vec()));
        }
        if let Some(t) = g.rational_roots().into_iter().next() {
            let l = affine(base, dir, &t);
            if l.iter().any(|x| !x.is_zero()) {
                return Some(Certificate::Point(l));
            }
        }
        Some(Certificate::Line {
            base: base.to_vec(),
            dir: dir.to_vec(),
            gcd: g,
        })
    }

    fn plane_matrix(&self, origin: &[Rational], p: &[Rational], q: &[Rational]) -> Vec<Vec<Poly2>> {
        let (m0, mx, my) = (self.evaluate(origin), self.evaluate(p), self.evaluate(q));
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        Poly2::linear(m0[(i, j)].clone(), mx[(i, j)].clone(), my[(i, j)].clone())
                    })
                    .collect()
            })
            .collect()
    }

    fn plane_minors(&self, origin: &[Rational], p: &[Rational], q: &[Rational]) -> Vec<Poly2> {
        let m = self.plane_matrix(origin, p, q);
        combinations(self.rows, self.cols)
            .iter()
            .map(|rows| {
                let sub: Vec<Vec<Poly2>> = rows.iter().map(|&r| m[r].clone()).collect();
                det_poly2(&sub)
            })
            .collect()
    }

    /// Exact test whether the projective plane spanned by `origin, p, q`
    /// meets the fail locus. The affine chart is decided by a Gröbner basis,
    /// the line at infinity by a line probe.
    fn plane_hit(
        &self,
        origin: &[Rational],
        p: &[Rational],
        q: &[Rational],
        s: &mut Sampler,
    ) -> Option<Certificate> {
        if let Some(c) = self.line_hit(p, q, s) {
            return Some(c);
        }
        let m = self.plane_matrix(origin, p, q);
        // Three generic combinations of a base-point-free system have no
        // common zero; the resultant filter usually proves that, and the
        // Gröbner basis settles the rest.
        let combos: Vec<Poly2> = (0..3)
            .map(|_| {
                let l = s.matrix(self.cols, self.rows);
                let lm: Vec<Vec<Poly2>> = (0..self.cols)
                    .map(|i| {
                        (0..self.cols)
                            .map(|j| {
                                (0..self.rows).fold(Poly2::zero(), |acc, k| {
                                    acc.add(&m[k][j].mul_term((0, 0), &l[(i, k)]))
                                })
                            })
                            .collect()
                    })
                    .collect();
                det_poly2(&lm)
            })
            .collect();
        if no_common_affine_zero(&combos) || groebner_basis(&combos).iter().any(Poly2::is_unit) {
            return None;
        }
        let basis = groebner_basis(&self.plane_minors(origin, p, q));
        if basis.iter().any(Poly2::is_unit) {
            return None;
        }
        Some(Certificate::Plane {
            origin: origin.to_vec(),
            p: p.to_vec(),
            q: q.to_vec(),
            basis,
        })
    }
}

fn affine(base: &[Rational], dir: &[Rational], t: &Rational) -> Vec<Rational> {
    base.iter().zip(dir).map(|(b, d)| b + d * t).collect()
}

fn random_line(s: &mut Sampler) -> (Vec<Rational>, Vec<Rational>) {
    loop {
        let (b, d) = (s.nonzero_vector(4), s.nonzero_vector(4));
        if crate::linalg::span_rank(4, &[b.clone(), d.clone()]) == 2 {
            return (b, d);
        }
    }
}

fn random_plane(s: &mut Sampler) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    loop {
        let (o, p, q) = (
            s.nonzero_vector(4),
            s.nonzero_vector(4),
            s.nonzero_vector(4),
        );
        if crate::linalg::span_rank(4, &[o.clone(), p.clone(), q.clone()]) == 3 {
            return (o, p, q);
        }
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Laplace expansion along the first row; intended for sizes up to 4.
fn det_poly2(m: &[Vec<Poly2>]) -> Poly2 {
    let n = m.len();
    match n {
        0 => Poly2::constant(Rational::one()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly2::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly2>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det_poly2(&minor));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn e(i: usize) -> Vec<Rational> {
        (0..4).map(|k| int(i64::from(k == i))).collect()
    }

    /// Single-column pencil whose coefficient columns are the columns of `m`.
    fn column_pencil(m: &RationalMatrix) -> LinearPencil {
        LinearPencil::new(std::array::from_fn(|i| {
            RationalMatrix::column_vector(m.column(i))
        }))
        .unwrap()
    }

    fn skew(c: [i64; 6]) -> RationalMatrix {
        let [a, b, cc, d, e, f] = c;
        RationalMatrix::from_i64(
            4,
            4,
            &[0, -a, -b, -cc, a, 0, -d, -e, b, d, 0, -f, cc, e, f, 0],
        )
    }

    #[test]
    fn evaluate_examples() {
        let p = LinearPencil::new(std::array::from_fn(|i| {
            RationalMatrix::identity(4).scale(&int(i as i64))
        }))
        .unwrap();
        assert_eq!(p.evaluate(&e(0)), p.coeff()[0]);
        assert!(p.evaluate(&[int(0), int(0), int(0), int(0)]).is_zero());
        assert_eq!(
            p.evaluate(&[int(1), int(1), int(1), int(1)]),
            RationalMatrix::identity(4).scale(&int(6))
        );
    }

    #[test]
    fn generic_rank_examples() {
        let cfg = ProbeConfig::default();
        assert_eq!(LinearPencil::zero(4, 4).generic_rank(&cfg), 0);
        let mut c: [RationalMatrix; 4] = std::array::from_fn(|_| RationalMatrix::zeros(4, 4));
        c[0] = RationalMatrix::identity(4);
        assert_eq!(LinearPencil::new(c).unwrap().generic_rank(&cfg), 4);
        assert_eq!(
            column_pencil(&skew([1, 0, 0, 0, 0, 1])).generic_rank(&cfg),
            1
        );
    }

    #[test]
    fn charge_one_injectivity_is_exact() {
        let cfg = ProbeConfig::default();
        let lf = column_pencil(&skew([1, 0, 0, 0, 0, 1]));
        assert_eq!(
            lf.is_injective_everywhere(&cfg).unwrap().answer,
            Answer::Yes
        );

        let deg = column_pencil(&skew([1, 0, 0, 0, 0, 0]));
        let v = deg.is_injective_everywhere(&cfg).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert!(v.verify(&deg, Mode::Injective));

        let zero = LinearPencil::zero(4, 1);
        let v = zero.is_injective_everywhere(&cfg).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert!(v.verify(&zero, Mode::Injective));
    }

    #[test]
    fn codim_two_examples() {
        let cfg = ProbeConfig::default();
        let deg = column_pencil(&skew([1, 0, 0, 0, 0, 0]));
        assert_eq!(
            deg.fail_locus_codim_at_least_2(Mode::Injective, &cfg)
                .answer,
            Answer::Yes
        );
        let zero = LinearPencil::zero(4, 1);
        assert_eq!(
            zero.fail_locus_codim_at_least_2(Mode::Injective, &cfg)
                .answer,
            Answer::No
        );
        // 1x4 pencil with canonical rows: surjective at every point.
        let v =
            LinearPencil::new(std::array::from_fn(|i| RationalMatrix::row_vector(e(i)))).unwrap();
        assert_eq!(
            v.fail_locus_codim_at_least_2(Mode::Surjective, &cfg).answer,
            Answer::Yes
        );
        assert_eq!(
            v.is_surjective_everywhere(&cfg).unwrap().answer,
            Answer::Yes
        );
    }

    #[test]
    fn rejects_wide_injectivity_question() {
        assert!(LinearPencil::zero(1, 2)
            .is_injective_everywhere(&ProbeConfig::default())
            .is_err());
    }

    #[test]
    fn two_column_hypersurface_detected() {
        // A(x) = [[x0, x1], [x2, x3]] fails on the quadric x0*x3 - x1*x2 = 0.
        let coeff: [RationalMatrix; 4] = std::array::from_fn(|i| {
            let mut m = RationalMatrix::zeros(2, 2);
            m[(i / 2, i % 2)] = int(1);
            m
        });
        let p = LinearPencil::new(coeff).unwrap();
        let cfg = ProbeConfig::default();
        let v = p.fail_locus_codim_at_least_2(Mode::Injective, &cfg);
        assert_eq!(v.answer, Answer::No);
        assert!(v.verify(&p, Mode::Injective));
        let inj = p.is_injective_everywhere(&cfg).unwrap();
        assert_eq!(inj.answer, Answer::No);
        assert!(inj.verify(&p, Mode::Injective));
    }

    #[test]
    fn two_column_point_locus_is_found_on_planes() {
        // [[x0, x1], [x1, x2], [x2, x3]] fails exactly on the twisted cubic.
        let coeff: [RationalMatrix; 4] = std::array::from_fn(|i| {
            let mut m = RationalMatrix::zeros(3, 2);
            for r in 0..3 {
                for c in 0..2 {
                    if r + c == i {
                        m[(r, c)] = int(1);
                    }
                }
            }
            m
        });
        let p = LinearPencil::new(coeff).unwrap();
        let cfg = ProbeConfig::default();
        assert_eq!(
            p.fail_locus_codim_at_least_2(Mode::Injective, &cfg).answer,
            Answer::Yes
        );
        let inj = p.is_injective_everywhere(&cfg).unwrap();
        assert_eq!(inj.answer, Answer::No);
        assert!(inj.verify(&p, Mode::Injective));
    }

    #[test]
    fn generic_tall_pencil_is_probably_injective() {
        let mut s = Sampler::new(11);
        let p = LinearPencil::new(std::array::from_fn(|_| s.matrix(6, 2))).unwrap();
        let v = p
            .is_injective_everywhere(&ProbeConfig {
                planes: 2,
                ..ProbeConfig::default()
            })
            .unwrap();
        assert_eq!(v.answer, Answer::ProbablyYes { rounds: 2 });
    }

    #[test]
    fn linearity_in_lambda() {
        let mut s = Sampler::new(3);
        let p = LinearPencil::new(std::array::from_fn(|_| s.matrix(3, 2))).unwrap();
        let (l, m) = (s.vector(4), s.vector(4));
        let sum: Vec<Rational> = l.iter().zip(&m).map(|(a, b)| a + b).collect();
        assert_eq!(p.evaluate(&sum), &p.evaluate(&l) + &p.evaluate(&m));
        assert_eq!(
            p.evaluate(&[rat(1, 2), int(0), int(0), int(0)]),
            p.coeff()[0].scale(&rat(1, 2))
        );
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 2).len(), 15);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
