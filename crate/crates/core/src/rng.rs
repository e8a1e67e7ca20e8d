//! Seeded random streams.
//!
//! Every randomized routine draws from a ChaCha8 stream selected by a master
//! seed and a label, so stages never share state and reruns are reproducible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// 64-bit FNV-1a.
pub fn label_hash(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Stream for `label` under `seed`.
pub fn stream(seed: u64, label: &str) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(label_hash(label));
    rng
}

/// Child seed derived from a parent seed and label; used to hand seeds to sub-stages.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    use rand::RngCore;
    stream(seed, label).next_u64()
}
