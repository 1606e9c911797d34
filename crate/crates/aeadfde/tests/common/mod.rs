//! Shared helpers for the integration suites.

#![allow(dead_code)]

pub mod kats;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use aeadfde::backing::{Backing, MemBacking};
use aeadfde::cryptdev::{CryptDevice, DeviceConfig};
use aeadfde::crypto::iv::SeededEntropy;
use aeadfde::crypto::CipherSuite;
use aeadfde::error::Result;
use aeadfde::metastore::{FormatOptions, Metastore};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn deterministic_key(suite: CipherSuite, seed: u64) -> Vec<u8> {
    let mut key = vec![0u8; suite.master_key_size()];
    ChaCha20Rng::seed_from_u64(seed ^ 0xC0FFEE).fill(&mut key[..]);
    key
}

/// Formats a provider store and opens an encrypted device over it, with
/// deterministic entropy.
pub fn crypt_device(
    suite: CipherSuite,
    device_bytes: u64,
    seed: u64,
) -> Result<(MemBacking, CryptDevice<MemBacking>)> {
    let backing = MemBacking::new(device_bytes);
    let store = Metastore::format(
        backing.clone(),
        &FormatOptions::provider(512, suite.metadata_bytes() as u32),
    )?;
    let config = DeviceConfig::new(suite, deterministic_key(suite, seed), 512)
        .with_entropy(Arc::new(SeededEntropy::new(seed)));
    let device = CryptDevice::open(store, config)?;
    Ok((backing, device))
}

/// Reopens a device over an existing image with the same key/seed scheme.
pub fn reopen_crypt_device(
    backing: MemBacking,
    suite: CipherSuite,
    seed: u64,
) -> Result<CryptDevice<MemBacking>> {
    let config = DeviceConfig::new(suite, deterministic_key(suite, seed), 512)
        .with_entropy(Arc::new(SeededEntropy::new(seed ^ 1)));
    CryptDevice::open(Metastore::open(backing)?, config)
}

/// Backing wrapper that injects an I/O error after a number of writes —
/// the interruption lever for resume tests.
pub struct FailAfter<B: Backing> {
    inner: B,
    writes_left: AtomicU64,
}

impl<B: Backing> FailAfter<B> {
    /// Starts unarmed: writes pass through until `arm` sets a budget.
    pub fn new(inner: B) -> Self {
        FailAfter {
            inner,
            writes_left: AtomicU64::new(u64::MAX),
        }
    }

    /// Lets `writes` more writes through, then fails every later one.
    pub fn arm(&self, writes: u64) {
        self.writes_left.store(writes, Ordering::SeqCst);
    }

    pub fn disarm(&self) {
        self.writes_left.store(u64::MAX, Ordering::SeqCst);
    }
}

impl<B: Backing> Backing for FailAfter<B> {
    fn size(&self) -> u64 {
        self.inner.size()
    }
    fn read_at(&self, offset: u64, buf: &mut [u8]) -> Result<()> {
        self.inner.read_at(offset, buf)
    }
    fn write_at(&self, offset: u64, data: &[u8]) -> Result<()> {
        let left = self.writes_left.fetch_sub(1, Ordering::SeqCst);
        if left == 0 {
            self.writes_left.store(0, Ordering::SeqCst);
            return Err(aeadfde::Error::Io(std::io::Error::other(
                "injected write failure",
            )));
        }
        self.inner.write_at(offset, data)
    }
    fn flush(&self) -> Result<()> {
        self.inner.flush()
    }
}

/// Hamming distance in bits.
pub fn hamming(a: &[u8], b: &[u8]) -> u64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones() as u64)
        .sum()
}
