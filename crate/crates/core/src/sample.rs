//! Seeded sampling of small rationals, vectors and matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rat, Rational, RationalMatrix};

/// Deterministic source of bounded rationals: numerators in `[-9, 9]`,
/// denominators in `{1, 2, 3}`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Derives an independent stream from `seed` and a tag.
    pub fn derived(seed: u64, tag: u64) -> Self {
        Self::new(seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn small_int(&mut self) -> i64 {
        self.rng.gen_range(-9..=9)
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.small_int();
        let d = self.rng.gen_range(1..=3);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::default() {
                return r;
            }
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Rational> {
        assert!(n > 0, "no nonzero vectors in dimension 0");
        loop {
            let v = self.vector(n);
            if v.iter().any(|x| *x != Rational::default()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix::new(rows, cols, self.vector(rows * cols)).expect("shape is consistent")
    }

    pub fn invertible_matrix(&mut self, n: usize) -> RationalMatrix {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// A matrix of exactly the given rank (product of two random full-rank
    /// factors, resampled until the rank is attained).
    pub fn matrix_of_rank(&mut self, rows: usize, cols: usize, rank: usize) -> RationalMatrix {
        assert!(rank <= rows.min(cols), "rank exceeds matrix size");
        loop {
            let m = &self.matrix(rows, rank) * &self.matrix(rank, cols);
            if m.rank() == rank {
                return m;
            }
        }
    }
}
