//! Seeded inputs shared by the benchmarks. Every fixture is a pure function
//! of its seed so successive runs measure the same work.

use instanton_quiver::{Charge1Family, LinearPencil, QuiverRep, RationalMatrix, Sampler, SkewForm};

pub fn square_matrix(n: usize, seed: u64) -> RationalMatrix {
    Sampler::new(seed).matrix(n, n)
}

/// `rows x cols` of rank `rank`, so elimination meets zero pivots.
pub fn deficient_matrix(rows: usize, cols: usize, rank: usize, seed: u64) -> RationalMatrix {
    Sampler::new(seed).matrix_of_rank(rows, cols, rank)
}

/// Random skew-symmetric 4x4 matrix.
pub fn skew4(seed: u64) -> RationalMatrix {
    let mut s = Sampler::new(seed);
    let coords = std::array::from_fn(|_| s.nonzero_rational());
    SkewForm::new(coords).expect("nonzero coordinates").matrix()
}

pub fn charge1_rep(family: Charge1Family, seed: u64) -> QuiverRep {
    family.sample(&mut Sampler::new(seed))
}

pub fn pencil(rows: usize, cols: usize, seed: u64) -> LinearPencil {
    let mut s = Sampler::new(seed);
    LinearPencil::new([0, 1, 2, 3].map(|_| s.matrix(rows, cols))).expect("equal shapes")
}
