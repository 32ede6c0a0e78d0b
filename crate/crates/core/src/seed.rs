//! Deterministic sub-stream derivation from a master seed.
//!
//! Every stochastic component draws from its own ChaCha8 stream whose seed is
//! a hash of `(master, component-name, index)`. Adding or reordering parallel
//! work units therefore never perturbs the numbers another unit sees.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive the seeded stream for `(component, index)` under `master`.
pub fn substream(master: u64, component: &str, index: u64) -> ChaCha8Rng {
    let mut state = master
        ^ fnv1a(component.as_bytes())
        ^ index.wrapping_mul(0x2545_f491_4f6c_dd1d);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
