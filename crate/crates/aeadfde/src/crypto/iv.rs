//! IV generators.
//!
//! Every IV is ultimately tied to the sector: plain64 and ESSIV derive it
//! from the sector number; random IVs are regenerated from an entropy
//! source on every write and persisted in the per-sector metadata next to
//! the authentication tag. Stored IVs are public values — their job is
//! freshness, not secrecy.

use aes::cipher::generic_array::GenericArray;
use aes::cipher::{BlockEncrypt, KeyInit};
use aes::Aes256;
use parking_lot::Mutex;
use rand::rngs::OsRng;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Sector number as a little-endian 64-bit value in the low half of a
/// 16-byte IV.
pub fn iv_plain64(sector: u64) -> [u8; 16] {
    let mut iv = [0u8; 16];
    iv[..8].copy_from_slice(&sector.to_le_bytes());
    iv
}

/// Encrypted salt-sector IV: the plain64 sector number encrypted under a
/// salt derived from the device key by hashing. Deterministic per
/// (key, sector) but unpredictable without the key.
pub fn iv_essiv(sector: u64, master_key: &[u8]) -> [u8; 16] {
    let salt = Sha256::digest(master_key);
    let cipher = Aes256::new_from_slice(&salt).expect("SHA-256 output is 32 bytes");
    let mut block = GenericArray::from(iv_plain64(sector));
    cipher.encrypt_block(&mut block);
    block.into()
}

/// Source of IV randomness. Writes must fail when it cannot deliver —
/// falling back to a predictable IV would silently void the security of
/// every random-IV suite.
pub trait EntropySource: Send + Sync {
    fn fill(&self, dest: &mut [u8]) -> Result<()>;
}

/// The operating system RNG.
#[derive(Debug, Default, Clone, Copy)]
pub struct SystemEntropy;

impl EntropySource for SystemEntropy {
    fn fill(&self, dest: &mut [u8]) -> Result<()> {
        OsRng
            .try_fill_bytes(dest)
            .map_err(|_| Error::EntropyUnavailable)
    }
}

/// Deterministic entropy for reproducible tests and crash-sweep replays.
pub struct SeededEntropy {
    rng: Mutex<ChaCha20Rng>,
}

impl SeededEntropy {
    pub fn new(seed: u64) -> Self {
        SeededEntropy {
            rng: Mutex::new(ChaCha20Rng::seed_from_u64(seed)),
        }
    }
}

impl EntropySource for SeededEntropy {
    fn fill(&self, dest: &mut [u8]) -> Result<()> {
        self.rng.lock().fill_bytes(dest);
        Ok(())
    }
}

/// Fresh random IV of `len` bytes (16, or 12 for GCM).
pub fn iv_random(source: &dyn EntropySource, len: usize) -> Result<Vec<u8>> {
    let mut iv = vec![0u8; len];
    source.fill(&mut iv)?;
    Ok(iv)
}
