//! Seeded random rational points and random representable instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{FgGroup, VectorList};

/// Torsion parts drawn for random ambient groups.
pub const TORSION_CHOICES: &[&[u64]] = &[&[], &[2], &[3], &[4], &[2, 2], &[2, 4], &[3, 3], &[4, 4]];

/// Nonzero rationals `a/b` with `a ∈ [-9, 9] - {0}` and `b ∈ [1, 5]`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> BigRational {
        let mut a: i64 = self.rng.gen_range(-9..=8);
        if a >= 0 {
            a += 1;
        }
        let b: i64 = self.rng.gen_range(1..=5);
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    /// A sample different from every value in `avoid`.
    pub fn rational_avoiding(&mut self, avoid: &[BigRational]) -> BigRational {
        loop {
            let r = self.rational();
            if !avoid.contains(&r) {
                return r;
            }
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<BigRational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Shape of random representable instances.
#[derive(Clone, Copy, Debug)]
pub struct InstanceShape {
    pub max_rank: usize,
    pub max_len: usize,
    pub entry_bound: i64,
    pub torsion: bool,
}

impl Default for InstanceShape {
    fn default() -> InstanceShape {
        InstanceShape { max_rank: 3, max_len: 6, entry_bound: 4, torsion: true }
    }
}

pub fn random_list(rng: &mut impl Rng, shape: InstanceShape) -> VectorList {
    let rank = rng.gen_range(0..=shape.max_rank);
    let torsion: &[u64] = if shape.torsion { TORSION_CHOICES[rng.gen_range(0..TORSION_CHOICES.len())] } else { &[] };
    let group = FgGroup::new(rank, torsion.to_vec()).expect("torsion choices are chains");
    let len = rng.gen_range(0..=shape.max_len);
    let coords: Vec<Vec<i64>> = (0..len)
        .map(|_| {
            let mut v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-shape.entry_bound..=shape.entry_bound)).collect();
            v.extend(torsion.iter().map(|&d| rng.gen_range(0..d as i64)));
            v
        })
        .collect();
    VectorList::from_coords(group, &coords).expect("coordinates match the group")
}

/// `count` random lists from a fixed seed.
pub fn random_lists(seed: u64, count: usize, shape: InstanceShape) -> Vec<VectorList> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_list(&mut rng, shape)).collect()
}
