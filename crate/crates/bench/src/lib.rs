//! Fixed workloads shared by the benchmarks.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use schensted_core::{BuiltinScheme, BumpingScheme, Permutation};

/// `count` uniformly random permutations of size `n`, reproducible from `seed`.
pub fn random_permutations(n: u32, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut letters: Vec<u32> = (1..=n).collect();
            letters.shuffle(&mut rng);
            Permutation::new(letters).expect("shuffle of 1..=n")
        })
        .collect()
}

pub fn schemes() -> Vec<Box<dyn BumpingScheme>> {
    [BuiltinScheme::Row, BuiltinScheme::Column, BuiltinScheme::Reversing, BuiltinScheme::Random(1)]
        .into_iter()
        .map(|s| s.build())
        .collect()
}
