//! The stacked encrypted virtual device.
//!
//! Applications see plaintext sectors; underneath, every sector is pushed
//! through a cipher suite and lands in the metadata store as data plus an
//! `IV ‖ tag` metadata entry, committed together in one journal
//! transaction. The stack mirrors a three-device setup: encryption device
//! on top, per-sector-metadata device in the middle, plain store at the
//! bottom.
//!
//! Suites that keep nothing per sector (pass-through, sector-number-tweaked
//! XTS) skip the metadata store entirely and run over the raw backing; that
//! is classic length-preserving FDE, and it is also why a random IV is
//! rejected there — with nowhere to store it, decryption could not depend
//! on the sector position.

use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use zeroize::Zeroizing;

use crate::backing::Backing;
use crate::crypto::iv::{EntropySource, SystemEntropy};
use crate::crypto::{pack_metadata, unpack_metadata, CipherSuite, SuiteCipher};
use crate::error::{Error, Result};
use crate::metastore::{untagged_marker, Metastore, SectorWithTag};

/// Supported encryption sector sizes presented to applications.
pub const ENCRYPTION_SECTOR_SIZES: [u32; 2] = [512, 4096];

/// How an encrypted device is assembled.
pub struct DeviceConfig {
    pub suite: CipherSuite,
    pub master_key: Zeroizing<Vec<u8>>,
    /// Sector size presented to applications; 512 or 4096, and a multiple
    /// of the metadata store's sector size when one is underneath.
    pub encryption_sector_size: u32,
    pub entropy: Arc<dyn EntropySource>,
}

impl DeviceConfig {
    pub fn new(suite: CipherSuite, master_key: Vec<u8>, encryption_sector_size: u32) -> Self {
        DeviceConfig {
            suite,
            master_key: Zeroizing::new(master_key),
            encryption_sector_size,
            entropy: Arc::new(SystemEntropy),
        }
    }

    pub fn with_entropy(mut self, entropy: Arc<dyn EntropySource>) -> Self {
        self.entropy = entropy;
        self
    }
}

enum Storage<B: Backing> {
    Meta(Metastore<B>),
    Raw { backing: B, io: RwLock<()> },
}

pub struct CryptDevice<B: Backing> {
    cipher: SuiteCipher,
    suite: CipherSuite,
    sector_size: u32,
    sector_count: u64,
    /// Metadata-store sectors per encryption sector (1 for raw storage).
    group: u32,
    storage: Storage<B>,
    entropy: Arc<dyn EntropySource>,
    writer: Mutex<()>,
}

impl<B: Backing> CryptDevice<B> {
    /// Opens the encrypted device over a provider-mode metadata store.
    ///
    /// The store's tag size must equal the suite's combined `IV + tag`
    /// bytes exactly; anything else is a configuration mismatch.
    pub fn open(store: Metastore<B>, config: DeviceConfig) -> Result<CryptDevice<B>> {
        let suite = config.suite;
        let ess = config.encryption_sector_size;
        if !ENCRYPTION_SECTOR_SIZES.contains(&ess) {
            return Err(Error::ConfigMismatch(format!(
                "unsupported encryption sector size {ess}"
            )));
        }
        if store.standalone() {
            return Err(Error::ConfigMismatch(
                "metadata store runs standalone CRC32 integrity; stacking encryption over it is not supported".into(),
            ));
        }
        if suite.metadata_bytes() == 0 {
            return Err(Error::ConfigMismatch(format!(
                "suite {suite} stores no per-sector metadata; open it over the raw backing instead"
            )));
        }
        if store.tag_size() as usize != suite.metadata_bytes() {
            return Err(Error::ConfigMismatch(format!(
                "metadata store holds {} tag bytes per sector, suite {suite} needs {} (IV {} + tag {})",
                store.tag_size(),
                suite.metadata_bytes(),
                suite.iv_size(),
                suite.tag_size(),
            )));
        }
        let ss = store.sector_size();
        if ess < ss || ess % ss != 0 {
            return Err(Error::ConfigMismatch(format!(
                "encryption sector {ess} is not a multiple of store sector {ss}"
            )));
        }
        let group = ess / ss;
        let sector_count = store.data_sectors() / group as u64;
        if sector_count == 0 {
            return Err(Error::TooSmall {
                needed: ess as u64,
                available: store.data_sectors() * ss as u64,
            });
        }
        let cipher = SuiteCipher::new(suite, &config.master_key)?;
        Ok(CryptDevice {
            cipher,
            suite,
            sector_size: ess,
            sector_count,
            group,
            storage: Storage::Meta(store),
            entropy: config.entropy,
            writer: Mutex::new(()),
        })
    }

    /// Opens a length-preserving device directly over a backing store, for
    /// suites that keep no per-sector metadata.
    pub fn open_raw(backing: B, config: DeviceConfig) -> Result<CryptDevice<B>> {
        let suite = config.suite;
        let ess = config.encryption_sector_size;
        if !ENCRYPTION_SECTOR_SIZES.contains(&ess) {
            return Err(Error::ConfigMismatch(format!(
                "unsupported encryption sector size {ess}"
            )));
        }
        if suite.metadata_bytes() > 0 {
            if suite.tag_size() == 0 {
                // Stored-IV XTS without metadata space: decryption would no
                // longer depend on sector position.
                return Err(Error::RandomIvWithoutTag(format!(
                    "suite {suite} regenerates its IV per write and must persist it in metadata"
                )));
            }
            return Err(Error::ConfigMismatch(format!(
                "suite {suite} needs {} metadata bytes per sector; open it over a metadata store",
                suite.metadata_bytes()
            )));
        }
        let sector_count = backing.size() / ess as u64;
        if sector_count == 0 {
            return Err(Error::TooSmall {
                needed: ess as u64,
                available: backing.size(),
            });
        }
        let cipher = SuiteCipher::new(suite, &config.master_key)?;
        Ok(CryptDevice {
            cipher,
            suite,
            sector_size: ess,
            sector_count,
            group: 1,
            storage: Storage::Raw {
                backing,
                io: RwLock::new(()),
            },
            entropy: config.entropy,
            writer: Mutex::new(()),
        })
    }

    pub fn suite(&self) -> CipherSuite {
        self.suite
    }

    pub fn sector_size(&self) -> u32 {
        self.sector_size
    }

    pub fn sector_count(&self) -> u64 {
        self.sector_count
    }

    pub fn metastore(&self) -> Option<&Metastore<B>> {
        match &self.storage {
            Storage::Meta(store) => Some(store),
            Storage::Raw { .. } => None,
        }
    }

    fn check_range(&self, first: u64, count: u64) -> Result<()> {
        match first.checked_add(count) {
            Some(end) if end <= self.sector_count => Ok(()),
            _ => Err(Error::OutOfRange {
                sector: first.saturating_add(count.saturating_sub(1)),
                limit: self.sector_count,
            }),
        }
    }

    /// The tag slot holding an encryption sector's metadata is the slot of
    /// its first store sector, so tag and data share a region.
    fn tag_slot(&self, sector: u64) -> u64 {
        sector * self.group as u64
    }

    /// Reads and decrypts `count` sectors. Every sector must authenticate;
    /// the first failure fails the whole request and names the sector.
    pub fn read(&self, first: u64, count: u64) -> Result<Vec<u8>> {
        self.check_range(first, count)?;
        let ess = self.sector_size as usize;
        match &self.storage {
            Storage::Meta(store) => {
                let mut out = Vec::with_capacity(count as usize * ess);
                for sector in first..first + count {
                    let group = store.read_sectors(self.tag_slot(sector), self.group as u64)?;
                    let meta = group[0].tag.clone();
                    if meta == untagged_marker(store.tag_size()) {
                        return Err(Error::IntegrityUnformatted { sector });
                    }
                    let (stored_iv, tag) = unpack_metadata(self.suite, &meta)?;
                    let mut payload = Vec::with_capacity(ess);
                    for part in &group {
                        payload.extend_from_slice(&part.data);
                    }
                    let iv = self.request_iv(sector, stored_iv);
                    self.cipher
                        .decrypt_in_place(sector, &iv, &mut payload, &tag)?;
                    out.extend_from_slice(&payload);
                }
                Ok(out)
            }
            Storage::Raw { backing, io } => {
                // The whole request is contiguous on a raw device: one read,
                // decrypt each sector in place.
                let mut out = vec![0u8; count as usize * ess];
                {
                    let _r = io.read();
                    backing.read_at(first * ess as u64, &mut out)?;
                }
                for (i, chunk) in out.chunks_mut(ess).enumerate() {
                    let sector = first + i as u64;
                    let iv = self.request_iv(sector, Vec::new());
                    self.cipher.decrypt_in_place(sector, &iv, chunk, &[])?;
                }
                Ok(out)
            }
        }
    }

    /// IV for a request: stored bytes when the suite persists them, derived
    /// from the sector number otherwise.
    fn request_iv(&self, sector: u64, stored: Vec<u8>) -> Vec<u8> {
        if self.suite.iv_size() > 0 {
            stored
        } else {
            match self.suite.effective_iv_len() {
                0 => Vec::new(),
                _ => crate::crypto::iv::iv_plain64(sector).to_vec(),
            }
        }
    }

    /// Encrypts and writes whole sectors; `plaintext` must be a multiple of
    /// the sector size. The entire request commits as one journal
    /// transaction on a journaled store.
    pub fn write(&self, first: u64, plaintext: &[u8]) -> Result<()> {
        let ess = self.sector_size as usize;
        if plaintext.is_empty() || plaintext.len() % ess != 0 {
            return Err(Error::InvalidArgument(format!(
                "write of {} bytes is not a whole number of {ess}-byte sectors",
                plaintext.len()
            )));
        }
        let count = (plaintext.len() / ess) as u64;
        self.check_range(first, count)?;

        let _serialize = self.writer.lock();
        // Generate IVs and encrypt everything before touching storage, so
        // an entropy failure aborts the request with nothing written.
        let mut buffer = plaintext.to_vec();
        let mut metas = Vec::with_capacity(count as usize);
        for (i, chunk) in buffer.chunks_mut(ess).enumerate() {
            let sector = first + i as u64;
            let iv = self.cipher.generate_iv(sector, self.entropy.as_ref())?;
            let tag = self.cipher.encrypt_in_place(sector, &iv, chunk)?;
            metas.push((iv, tag));
        }

        match &self.storage {
            Storage::Meta(store) => {
                let ss = store.sector_size() as usize;
                let filler = vec![0u8; store.tag_size() as usize];
                let mut entries = Vec::with_capacity(count as usize * self.group as usize);
                for (i, chunk) in buffer.chunks(ess).enumerate() {
                    let sector = first + i as u64;
                    let (iv, tag) = &metas[i];
                    let meta = pack_metadata(self.suite, iv, tag)?;
                    let base = self.tag_slot(sector);
                    for (j, part) in chunk.chunks(ss).enumerate() {
                        entries.push(SectorWithTag {
                            logical: base + j as u64,
                            data: part.to_vec(),
                            tag: if j == 0 { meta.clone() } else { filler.clone() },
                        });
                    }
                }
                store.write_sectors(&entries)
            }
            Storage::Raw { backing, io } => {
                let _w = io.write();
                backing.write_at(first * ess as u64, &buffer)
            }
        }
    }

    /// Initial re-encryption pass: rewrites every sector as the encryption
    /// of all-zero plaintext with fresh IVs, then marks the store
    /// formatted. Until this has completed once, every read fails as
    /// uninitialized. Idempotent: re-running after an interruption
    /// converges to the same readable end state.
    pub fn reencrypt_format_pass(&self) -> Result<u64> {
        let store = match &self.storage {
            Storage::Meta(store) => store,
            Storage::Raw { .. } => {
                return Err(Error::InvalidArgument(
                    "raw devices store no tags; there is nothing to initialize".into(),
                ))
            }
        };
        if store.formatted() {
            return Ok(0);
        }
        let batch = 64u64;
        let zeros = vec![0u8; self.sector_size as usize * batch as usize];
        let mut sector = 0;
        while sector < self.sector_count {
            let n = batch.min(self.sector_count - sector);
            self.write(sector, &zeros[..self.sector_size as usize * n as usize])?;
            sector += n;
        }
        store.set_formatted(true)?;
        Ok(self.sector_count)
    }

    /// Scrubs the device: returns every sector that fails decryption or
    /// authentication, without stopping at the first.
    pub fn verify_all(&self) -> Result<Vec<u64>> {
        let mut failing = Vec::new();
        for sector in 0..self.sector_count {
            match self.read(sector, 1) {
                Ok(_) => {}
                Err(e) if e.is_integrity() => failing.push(sector),
                Err(e) => return Err(e),
            }
        }
        Ok(failing)
    }

    pub fn flush(&self) -> Result<()> {
        match &self.storage {
            Storage::Meta(store) => store.flush(),
            Storage::Raw { backing, .. } => backing.flush(),
        }
    }

    pub fn close(self) -> Result<()> {
        match self.storage {
            Storage::Meta(store) => store.close(),
            Storage::Raw { backing, .. } => backing.flush(),
        }
    }
}
