//! Deterministic stream derivation.
//!
//! Every random draw in a replication comes from a stream keyed by
//! `(master_seed, replication_index, purpose_label)`. The key is hashed with
//! SHA-256 into a ChaCha8 seed, so a replication replays bit-identically no
//! matter how many worker threads run alongside it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub type Stream = ChaCha8Rng;

/// Purpose label of the per-replication arm-parameter stream.
pub const ARM_PARAMS: &str = "arm-params";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomnessContract {
    pub master_seed: u64,
}

impl RandomnessContract {
    pub fn new(master_seed: u64) -> Self {
        Self { master_seed }
    }

    pub fn stream(&self, replication: u64, purpose: &str) -> Stream {
        derive_stream(self.master_seed, replication, purpose)
    }
}

pub fn derive_stream(master_seed: u64, replication: u64, purpose: &str) -> Stream {
    let mut h = Sha256::new();
    h.update(master_seed.to_le_bytes());
    h.update(replication.to_le_bytes());
    h.update((purpose.len() as u64).to_le_bytes());
    h.update(purpose.as_bytes());
    let seed: [u8; 32] = h.finalize().into();
    ChaCha8Rng::from_seed(seed)
}
