//! Arithmetic in `F_p`, `p = 2^61 - 1`, for cheap certified filters.
//!
//! Field elements are `u64` in `0..P`; polynomials are dense ascending
//! coefficient vectors with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::linalg::Rational;

pub(crate) const P: u64 = (1 << 61) - 1;

pub(crate) fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub(crate) fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub(crate) fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub(crate) fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero element.
pub(crate) fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn reduce_int(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(P))
        .iter_u64_digits()
        .next()
        .unwrap_or(0)
}

/// Image of `x` in `F_p`; `None` when `p` divides the denominator.
pub(crate) fn reduce(x: &Rational) -> Option<u64> {
    let d = reduce_int(x.denom());
    (d != 0).then(|| mul(reduce_int(x.numer()), inv(d)))
}

/// Determinant of a square row-major matrix; consumes it.
pub(crate) fn det(mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut acc = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            acc = sub(0, acc);
        }
        acc = mul(acc, m[c][c]);
        let pinv = inv(m[c][c]);
        let (head, tail) = m.split_at_mut(c + 1);
        let pivot = &head[c];
        for row in tail {
            let f = mul(row[c], pinv);
            if f == 0 {
                continue;
            }
            for (x, &p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = sub(*x, mul(f, p));
            }
        }
    }
    acc
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Polynomial through `(xs[i], ys[i])`; the `xs` must be distinct.
pub(crate) fn interpolate(xs: &[u64], ys: &[u64]) -> Vec<u64> {
    // Newton divided differences, then expansion into the monomial basis.
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = mul(sub(c[i], c[i - 1]), inv(sub(xs[i], xs[i - j])));
        }
    }
    let mut poly = vec![0; n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + c[i]
        let mut next = vec![0; n];
        for k in 0..n - 1 {
            next[k + 1] = add(next[k + 1], poly[k]);
            next[k] = sub(next[k], mul(poly[k], xs[i]));
        }
        next[0] = add(next[0], c[i]);
        poly = next;
    }
    trim(poly)
}

fn rem(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let db = b.len() - 1;
    let linv = inv(b[db]);
    while a.len() > db {
        let f = mul(*a.last().expect("nonempty"), linv);
        let shift = a.len() - 1 - db;
        for (k, &bk) in b.iter().enumerate() {
            a[shift + k] = sub(a[shift + k], mul(f, bk));
        }
        a = trim(a);
    }
    a
}

/// Degree of the gcd; `None` when both inputs are zero.
pub(crate) fn gcd_degree(a: &[u64], b: &[u64]) -> Option<usize> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}
