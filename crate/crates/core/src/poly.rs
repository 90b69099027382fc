//! Small exact polynomial toolkit: univariate polynomials (gcd, interpolation,
//! rational roots) and bivariate polynomials with a lex Buchberger routine.
//!
//! Both types are kept normalized: no stored zero coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Rational;
use crate::modp;

/// Dense univariate polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) == 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The unique polynomial of degree `< xs.len()` through the given points.
    /// Panics if the abscissae are not distinct or the lengths differ.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        assert_eq!(xs.len(), ys.len(), "interpolation needs matching lengths");
        let n = xs.len();
        // Newton divided differences.
        let mut dd = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let denom = &xs[i] - &xs[i - level];
                assert!(!denom.is_zero(), "interpolation nodes must be distinct");
                dd[i] = (&dd[i] - &dd[i - 1]) / denom;
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            // acc = acc * (x - xs[i]) + dd[i]
            let shifted = acc.mul(&Self::new(vec![-xs[i].clone(), Rational::one()]));
            acc = shifted.add(&Self::constant(dd[i].clone()));
        }
        acc
    }

    /// Distinct rational roots found by the rational root test. Candidate
    /// divisors are only enumerated while the relevant integer coefficients
    /// stay below 10^12, so roots may be missed for huge coefficients.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            let first = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
            ints.drain(..first);
        }
        if ints.len() < 2 {
            return roots;
        }
        let (Some(ps), Some(qs)) = (
            small_divisors(&ints[0]),
            small_divisors(ints.last().expect("nonempty")),
        ) else {
            return roots;
        };
        let reduced = UniPoly::new(
            ints.iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        for p in &ps {
            for q in &qs {
                for sign in [1i32, -1] {
                    let cand = Rational::new(p * BigInt::from(sign), q.clone());
                    if !roots.contains(&cand) && reduced.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v > 0 && v < 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Exponent pair `(deg_x, deg_y)`; the derived tuple order is lex with x > y.
pub type Monomial = (u32, u32);

/// Sparse bivariate polynomial in `x`, `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term((0, 0), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `c + cx*x + cy*y`.
    pub fn linear(c: Rational, cx: Rational, cy: Rational) -> Self {
        let mut p = Self::constant(c);
        p.add_term((1, 0), cx);
        p.add_term((0, 1), cy);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&(0, 0))
    }

    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term((ma.0 + mb.0, ma.1 + mb.1), a * b);
            }
        }
        out
    }

    pub fn mul_term(&self, m: Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| ((k.0 + m.0, k.1 + m.1), v * c))
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, l)) => self.mul_term((0, 0), &l.recip()),
            None => Self::zero(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, ((i, j), c)| {
                acc + c * pow(x, *i) * pow(y, *j)
            })
    }

    /// Full reduction of `self` modulo `basis` (leading terms in lex order).
    pub fn reduce(&self, basis: &[Poly2]) -> Self {
        let mut p = self.clone();
        let mut rem = Self::zero();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m, c.clone())) {
            let divisor = basis.iter().find_map(|g| {
                let (gm, gc) = g.leading()?;
                (gm.0 <= m.0 && gm.1 <= m.1).then(|| (g, gm, gc.clone()))
            });
            match divisor {
                Some((g, gm, gc)) => {
                    let q = (m.0 - gm.0, m.1 - gm.1);
                    p = p.sub(&g.mul_term(q, &(&c / gc)));
                }
                None => {
                    rem.add_term(m, c.clone());
                    p.terms.remove(&m);
                }
            }
        }
        rem
    }
}

impl Poly2 {
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Image in `F_p`, keyed like `terms`; `None` if a denominator vanishes.
    fn reduce_mod_p(&self) -> Option<Vec<(Monomial, u64)>> {
        self.terms
            .iter()
            .map(|(m, c)| Some((*m, modp::reduce(c)?)))
            .collect()
    }
}

/// Coefficients of `y^0..=y^deg` of a reduced polynomial at `x`.
fn in_y_at(terms: &[(Monomial, u64)], x: u64, deg: u32) -> Vec<u64> {
    let mut out = vec![0; deg as usize + 1];
    for ((i, j), c) in terms {
        let v = modp::mul(*c, modp::pow(x, u64::from(*i)));
        out[*j as usize] = modp::add(out[*j as usize], v);
    }
    out
}

/// Sylvester determinant of `f(x, .)` and `g(x, .)` with formal `y`-degrees
/// `df`, `dg`: the value of `Res_y(f, g)` at `x`, computed in `F_p`.
fn sylvester_at(f: &[(Monomial, u64)], g: &[(Monomial, u64)], x: u64, df: u32, dg: u32) -> u64 {
    let (fc, gc) = (in_y_at(f, x, df), in_y_at(g, x, dg));
    let n = (df + dg) as usize;
    let mut m = vec![vec![0; n]; n];
    for r in 0..dg as usize {
        for (k, c) in fc.iter().rev().enumerate() {
            m[r][r + k] = *c;
        }
    }
    for r in 0..df as usize {
        for (k, c) in gc.iter().rev().enumerate() {
            m[dg as usize + r][r + k] = *c;
        }
    }
    modp::det(m)
}

/// Sufficient test that `polys` have no common zero in the complex affine
/// plane. `false` means undecided.
///
/// Let `f = polys[0]` have total degree `d` and a nonzero `y^d` coefficient,
/// so `Res_y(f, h)` commutes with substituting `x` and has degree at most
/// `d * deg h`. A common zero is a common root of all `Res_y(f, h)`. Working
/// mod `p`: if the first resultant keeps that full degree mod `p`, a rational
/// common factor would survive reduction, so a constant gcd mod `p` proves
/// the rational gcd constant.
pub fn no_common_affine_zero(polys: &[Poly2]) -> bool {
    let Some((f, rest)) = polys.split_first() else {
        return false;
    };
    let Some(df) = f.total_degree() else {
        return false;
    };
    if df == 0 {
        return true;
    }
    if !f.terms.contains_key(&(0, df)) {
        return false;
    }
    let Some(fr) = f.reduce_mod_p() else {
        return false;
    };
    let mut first: Option<Vec<u64>> = None;
    for h in rest {
        let (Some(dh), Some(hr)) = (h.total_degree(), h.reduce_mod_p()) else {
            continue;
        };
        let xs: Vec<u64> = (0..=u64::from(df * dh)).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| sylvester_at(&fr, &hr, x, df, dh))
            .collect();
        let r = modp::interpolate(&xs, &ys);
        match &first {
            None => {
                if r.len() != xs.len() {
                    return false;
                }
                first = Some(r);
            }
            Some(r0) => {
                if modp::gcd_degree(r0, &r) == Some(0) {
                    return true;
                }
            }
        }
    }
    false
}

fn pow(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

fn lcm_mono(a: Monomial, b: Monomial) -> Monomial {
    (a.0.max(b.0), a.1.max(b.1))
}

fn s_polynomial(f: &Poly2, g: &Poly2) -> Poly2 {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = lcm_mono(fm, gm);
    f.mul_term((l.0 - fm.0, l.1 - fm.1), &fc.recip())
        .sub(&g.mul_term((l.0 - gm.0, l.1 - gm.1), &gc.recip()))
}

/// Reduced lex (x > y) Gröbner basis of the ideal generated by `polys`.
///
/// The unit ideal is returned as `[1]`, the zero ideal as `[]`. Output is
/// monic and sorted by leading monomial.
pub fn groebner_basis(polys: &[Poly2]) -> Vec<Poly2> {
    let mut basis: Vec<Poly2> = Vec::new();
    for p in polys {
        let r = p.reduce(&basis);
        if !r.is_zero() {
            if r.is_unit() {
                return vec![Poly2::constant(Rational::one())];
            }
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading().expect("nonzero");
        let (mj, _) = basis[j].leading().expect("nonzero");
        // Coprime leading monomials reduce to zero.
        if (mi.0 == 0 || mj.0 == 0) && (mi.1 == 0 || mj.1 == 0) {
            continue;
        }
        let r = s_polynomial(&basis[i], &basis[j]).reduce(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return vec![Poly2::constant(Rational::one())];
        }
        let k = basis.len();
        basis.push(r.monic());
        pairs.extend((0..k).map(|i| (i, k)));
    }
    interreduce(basis)
}

fn interreduce(mut basis: Vec<Poly2>) -> Vec<Poly2> {
    // Drop elements whose leading monomial is divisible by another one.
    let mut keep: Vec<Poly2> = Vec::new();
    basis.sort_by_key(|p| p.leading().map(|(m, _)| m));
    for p in basis {
        let (m, _) = p.leading().expect("nonzero");
        let redundant = keep.iter().any(|q| {
            let (qm, _) = q.leading().expect("nonzero");
            qm.0 <= m.0 && qm.1 <= m.1
        });
        if !redundant {
            keep.push(p);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly2> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (m, c) = keep[i]
            .leading()
            .map(|(m, c)| (m, c.clone()))
            .expect("nonzero");
        let mut tail = keep[i].clone();
        tail.terms.remove(&m);
        let mut reduced = tail.reduce(&others);
        reduced.add_term(m, c);
        out.push(reduced.monic());
    }
    out
}
