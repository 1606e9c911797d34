//! Algorithm-agnostic sector authenticated encryption.
//!
//! A sector operation is described by a [`SectorRequest`]: the sector
//! number and IV form the additional authenticated data, the payload is
//! both authenticated and encrypted, and the tag is stored out-of-line in
//! the per-sector metadata. Because the AAD binds the sector number, a
//! valid (ciphertext, IV, tag) triple moved to another sector fails
//! authentication — misplacement is tamper.
//!
//! All suites are encrypt-then-MAC shaped: the tag always covers the final
//! ciphertext, either inside an AEAD primitive or as an explicit HMAC over
//! `sector ‖ IV ‖ ciphertext` for the composed suite.

pub mod iv;
pub mod propagation;
pub mod xts;

use aes_gcm::aead::AeadInPlace;
use aes_gcm::{Aes256Gcm, KeyInit as GcmKeyInit};
use chacha20poly1305::ChaCha20Poly1305;
use hmac::{Hmac, Mac};
use sha2::Sha256;
use subtle::ConstantTimeEq;
use zeroize::Zeroizing;

use crate::error::{Error, Result};
use iv::{iv_plain64, iv_random, EntropySource};
use xts::Xts;

type HmacSha256 = Hmac<Sha256>;

/// Which IV generator a suite uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IvGenerator {
    None,
    Plain64,
    Essiv,
    Random,
}

/// The offered cipher suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CipherSuite {
    /// No encryption, no integrity: a pass-through baseline.
    Null,
    /// No encryption, CRC32 integrity tag.
    Crc32,
    /// Length-preserving AES-256-XTS, sector-number tweak. Pure FDE.
    Aes256XtsPlain64,
    /// AES-256-XTS with a stored random IV, no authentication tag.
    Aes256XtsRandom,
    /// AES-256-GCM AEAD with a stored random 96-bit nonce.
    Aes256GcmRandom,
    /// AES-256-XTS with HMAC-SHA-256 over the ciphertext (composed
    /// encrypt-then-MAC), random stored IV.
    Aes256XtsHmacSha256Random,
    /// ChaCha20-Poly1305 AEAD with a stored random IV.
    ChaCha20Poly1305Random,
}

impl CipherSuite {
    pub const ALL: [CipherSuite; 7] = [
        CipherSuite::Null,
        CipherSuite::Crc32,
        CipherSuite::Aes256XtsPlain64,
        CipherSuite::Aes256XtsRandom,
        CipherSuite::Aes256GcmRandom,
        CipherSuite::Aes256XtsHmacSha256Random,
        CipherSuite::ChaCha20Poly1305Random,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CipherSuite::Null => "null",
            CipherSuite::Crc32 => "crc32",
            CipherSuite::Aes256XtsPlain64 => "aes256-xts-plain64",
            CipherSuite::Aes256XtsRandom => "aes256-xts-random",
            CipherSuite::Aes256GcmRandom => "aes256-gcm-random",
            CipherSuite::Aes256XtsHmacSha256Random => "aes256-xts-hmac-sha256-random",
            CipherSuite::ChaCha20Poly1305Random => "chacha20-poly1305-random",
        }
    }

    pub fn from_name(name: &str) -> Result<CipherSuite> {
        let lower = name.to_ascii_lowercase();
        CipherSuite::ALL
            .into_iter()
            .find(|s| s.name() == lower)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown cipher suite '{name}'")))
    }

    pub fn iv_generator(&self) -> IvGenerator {
        match self {
            CipherSuite::Null | CipherSuite::Crc32 => IvGenerator::None,
            CipherSuite::Aes256XtsPlain64 => IvGenerator::Plain64,
            _ => IvGenerator::Random,
        }
    }

    /// IV bytes persisted in per-sector metadata. Derived IVs (plain64)
    /// store nothing.
    pub fn iv_size(&self) -> usize {
        match self {
            CipherSuite::Null | CipherSuite::Crc32 | CipherSuite::Aes256XtsPlain64 => 0,
            CipherSuite::Aes256GcmRandom => 12,
            _ => 16,
        }
    }

    /// Tag bytes persisted in per-sector metadata.
    pub fn tag_size(&self) -> usize {
        match self {
            CipherSuite::Null | CipherSuite::Aes256XtsPlain64 | CipherSuite::Aes256XtsRandom => 0,
            CipherSuite::Crc32 => 4,
            CipherSuite::Aes256GcmRandom => 16,
            // Poly1305 emits 16 bytes; the stored field is 32 with zero
            // padding that decryption verifies.
            CipherSuite::Aes256XtsHmacSha256Random | CipherSuite::ChaCha20Poly1305Random => 32,
        }
    }

    /// IV bytes the cipher actually consumes per operation.
    pub fn effective_iv_len(&self) -> usize {
        match self {
            CipherSuite::Null | CipherSuite::Crc32 => 0,
            CipherSuite::Aes256GcmRandom => 12,
            _ => 16,
        }
    }

    pub fn master_key_size(&self) -> usize {
        match self {
            CipherSuite::Null | CipherSuite::Crc32 => 0,
            CipherSuite::Aes256XtsPlain64 | CipherSuite::Aes256XtsRandom => 64,
            CipherSuite::Aes256GcmRandom | CipherSuite::ChaCha20Poly1305Random => 32,
            CipherSuite::Aes256XtsHmacSha256Random => 96,
        }
    }

    /// True when decryption verifies an authentication tag.
    pub fn authenticated(&self) -> bool {
        matches!(
            self,
            CipherSuite::Aes256GcmRandom
                | CipherSuite::Aes256XtsHmacSha256Random
                | CipherSuite::ChaCha20Poly1305Random
        )
    }

    /// Per-sector metadata footprint: stored IV plus stored tag.
    pub fn metadata_bytes(&self) -> usize {
        self.iv_size() + self.tag_size()
    }

    /// The CRC32 suite computes an unkeyed checksum anyone can recompute;
    /// it detects accidents, not attackers.
    pub fn unkeyed_tag(&self) -> bool {
        matches!(self, CipherSuite::Crc32)
    }

    /// Writes after which nonce collisions become a real risk. The GCM
    /// suite's 96-bit random nonce budgets roughly 2^32 writes per key;
    /// exceeding it risks a fatal nonce reuse.
    pub fn nonce_write_budget(&self) -> Option<u64> {
        match self {
            CipherSuite::Aes256GcmRandom => Some(1 << 32),
            _ => None,
        }
    }
}

impl std::fmt::Display for CipherSuite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Master key split into its encryption and MAC parts. The composed suite
/// concatenates two independent keys; AEAD suites pass the whole master
/// through as the single cipher key.
pub struct KeyMaterial {
    pub enc_key: Zeroizing<Vec<u8>>,
    pub mac_key: Zeroizing<Vec<u8>>,
}

/// Splits `master_key` according to the suite's key schedule.
pub fn split_key(suite: CipherSuite, master_key: &[u8]) -> Result<KeyMaterial> {
    if master_key.len() != suite.master_key_size() {
        return Err(Error::WrongKeyLength {
            expected: suite.master_key_size(),
            actual: master_key.len(),
        });
    }
    let (enc, mac) = match suite {
        CipherSuite::Aes256XtsHmacSha256Random => master_key.split_at(64),
        _ => (master_key, &[][..]),
    };
    Ok(KeyMaterial {
        enc_key: Zeroizing::new(enc.to_vec()),
        mac_key: Zeroizing::new(mac.to_vec()),
    })
}

/// One sector authentication request.
///
/// ```text
/// |    AAD (authenticated)    | DATA (authenticated + encrypted) | AUTH TAG |
/// | sector number |    IV     |            payload in/out        |   tag    |
/// ```
#[derive(Debug, Clone)]
pub struct SectorRequest {
    /// 64-bit device offset of the sector at this layer's granularity.
    pub sector_number: u64,
    pub iv: Vec<u8>,
    /// Plaintext in / ciphertext out for encryption; the reverse for
    /// decryption. Always length-preserving.
    pub payload: Vec<u8>,
    /// Stored-form tag (zero-padded where the suite stores more bytes than
    /// the primitive emits).
    pub tag: Vec<u8>,
}

impl SectorRequest {
    pub fn new(sector_number: u64, iv: Vec<u8>, payload: Vec<u8>) -> Self {
        SectorRequest {
            sector_number,
            iv,
            payload,
            tag: Vec::new(),
        }
    }

    /// Additional authenticated data: sector number then IV, in request
    /// field order.
    pub fn aad(&self) -> Vec<u8> {
        let mut aad = Vec::with_capacity(8 + self.iv.len());
        aad.extend_from_slice(&self.sector_number.to_le_bytes());
        aad.extend_from_slice(&self.iv);
        aad
    }
}

enum CipherImpl {
    Null,
    Crc32,
    Xts(Xts),
    XtsHmac { xts: Xts, mac_key: Zeroizing<Vec<u8>> },
    Gcm(Box<Aes256Gcm>),
    ChaCha(Box<ChaCha20Poly1305>),
}

/// A suite bound to key material, ready to process sector requests.
/// Immutable after construction and safe to share across threads.
pub struct SuiteCipher {
    suite: CipherSuite,
    inner: CipherImpl,
}

impl SuiteCipher {
    pub fn new(suite: CipherSuite, master_key: &[u8]) -> Result<SuiteCipher> {
        let keys = split_key(suite, master_key)?;
        let inner = match suite {
            CipherSuite::Null => CipherImpl::Null,
            CipherSuite::Crc32 => CipherImpl::Crc32,
            CipherSuite::Aes256XtsPlain64 | CipherSuite::Aes256XtsRandom => {
                CipherImpl::Xts(Xts::new(&keys.enc_key)?)
            }
            CipherSuite::Aes256XtsHmacSha256Random => CipherImpl::XtsHmac {
                xts: Xts::new(&keys.enc_key)?,
                mac_key: keys.mac_key,
            },
            CipherSuite::Aes256GcmRandom => CipherImpl::Gcm(Box::new(
                Aes256Gcm::new_from_slice(&keys.enc_key).expect("32-byte key"),
            )),
            CipherSuite::ChaCha20Poly1305Random => CipherImpl::ChaCha(Box::new(
                ChaCha20Poly1305::new_from_slice(&keys.enc_key).expect("32-byte key"),
            )),
        };
        Ok(SuiteCipher { suite, inner })
    }

    pub fn suite(&self) -> CipherSuite {
        self.suite
    }

    /// Generates the IV for a write to `sector`, using `entropy` for
    /// random-IV suites.
    pub fn generate_iv(&self, sector: u64, entropy: &dyn EntropySource) -> Result<Vec<u8>> {
        match self.suite.iv_generator() {
            IvGenerator::None => Ok(Vec::new()),
            IvGenerator::Plain64 => Ok(iv_plain64(sector).to_vec()),
            IvGenerator::Essiv => Err(Error::InvalidArgument(
                "no offered suite derives its IV via ESSIV".into(),
            )),
            IvGenerator::Random => iv_random(entropy, self.suite.effective_iv_len()),
        }
    }

    fn check_iv(&self, iv: &[u8]) -> Result<()> {
        if iv.len() != self.suite.effective_iv_len() {
            return Err(Error::InvalidArgument(format!(
                "suite {} needs a {}-byte IV, got {}",
                self.suite,
                self.suite.effective_iv_len(),
                iv.len()
            )));
        }
        Ok(())
    }

    fn composed_tag(mac_key: &[u8], sector: u64, iv: &[u8], ciphertext: &[u8]) -> Vec<u8> {
        // AAD first, then the final ciphertext, mirroring the request field
        // order: sector ‖ IV ‖ ciphertext.
        let mut mac = <HmacSha256 as Mac>::new_from_slice(mac_key).expect("any key length");
        mac.update(&sector.to_le_bytes());
        mac.update(iv);
        mac.update(ciphertext);
        mac.finalize().into_bytes().to_vec()
    }

    fn aad_for(sector: u64, iv: &[u8]) -> Vec<u8> {
        let mut aad = Vec::with_capacity(8 + iv.len());
        aad.extend_from_slice(&sector.to_le_bytes());
        aad.extend_from_slice(iv);
        aad
    }

    /// Encrypts one sector payload in place and returns the stored-form
    /// tag. The IV must already be generated per the suite's generator.
    pub fn encrypt_in_place(&self, sector: u64, iv: &[u8], payload: &mut [u8]) -> Result<Vec<u8>> {
        self.check_iv(iv)?;
        let tag = match &self.inner {
            CipherImpl::Null => Vec::new(),
            CipherImpl::Crc32 => crc32fast::hash(payload).to_le_bytes().to_vec(),
            CipherImpl::Xts(xts) => {
                let iv: [u8; 16] = iv.try_into().unwrap();
                xts.encrypt(&iv, payload)?;
                Vec::new()
            }
            CipherImpl::XtsHmac { xts, mac_key } => {
                let iv16: [u8; 16] = iv.try_into().unwrap();
                xts.encrypt(&iv16, payload)?;
                Self::composed_tag(mac_key, sector, iv, payload)
            }
            CipherImpl::Gcm(gcm) => {
                let aad = Self::aad_for(sector, iv);
                let nonce = aes_gcm::Nonce::from_slice(iv);
                gcm.encrypt_in_place_detached(nonce, &aad, payload)
                    .map_err(|_| Error::InvalidArgument("AEAD encryption failed".into()))?
                    .to_vec()
            }
            CipherImpl::ChaCha(chacha) => {
                let aad = Self::aad_for(sector, iv);
                // The cipher consumes a 96-bit nonce; the stored IV is 16
                // bytes and the AAD authenticates all of them.
                let nonce = chacha20poly1305::Nonce::from_slice(&iv[..12]);
                let tag = chacha
                    .encrypt_in_place_detached(nonce, &aad, payload)
                    .map_err(|_| Error::InvalidArgument("AEAD encryption failed".into()))?;
                let mut stored = vec![0u8; self.suite.tag_size()];
                stored[..16].copy_from_slice(&tag);
                stored
            }
        };
        debug_assert_eq!(tag.len(), self.suite.tag_size());
        Ok(tag)
    }

    /// Verifies the tag over (AAD, ciphertext) and decrypts the payload in
    /// place. Tag comparison is constant-time. Any failure reports an
    /// integrity violation carrying the sector number.
    pub fn decrypt_in_place(
        &self,
        sector: u64,
        iv: &[u8],
        payload: &mut [u8],
        tag: &[u8],
    ) -> Result<()> {
        self.check_iv(iv)?;
        let violation = || Error::IntegrityViolation { sector };
        if tag.len() != self.suite.tag_size() {
            return Err(violation());
        }
        match &self.inner {
            CipherImpl::Null => {}
            CipherImpl::Crc32 => {
                let expected = crc32fast::hash(payload).to_le_bytes();
                if tag.ct_eq(&expected).unwrap_u8() != 1 {
                    return Err(violation());
                }
            }
            CipherImpl::Xts(xts) => {
                let iv: [u8; 16] = iv.try_into().unwrap();
                xts.decrypt(&iv, payload)?;
            }
            CipherImpl::XtsHmac { xts, mac_key } => {
                let expected = Self::composed_tag(mac_key, sector, iv, payload);
                if tag.ct_eq(&expected).unwrap_u8() != 1 {
                    return Err(violation());
                }
                let iv: [u8; 16] = iv.try_into().unwrap();
                xts.decrypt(&iv, payload)?;
            }
            CipherImpl::Gcm(gcm) => {
                let aad = Self::aad_for(sector, iv);
                let nonce = aes_gcm::Nonce::from_slice(iv);
                let tag = aes_gcm::Tag::from_slice(tag);
                gcm.decrypt_in_place_detached(nonce, &aad, payload, tag)
                    .map_err(|_| violation())?;
            }
            CipherImpl::ChaCha(chacha) => {
                if tag[16..].iter().any(|&b| b != 0) {
                    return Err(violation());
                }
                let aad = Self::aad_for(sector, iv);
                let nonce = chacha20poly1305::Nonce::from_slice(&iv[..12]);
                let tag = chacha20poly1305::Tag::from_slice(&tag[..16]);
                chacha
                    .decrypt_in_place_detached(nonce, &aad, payload, tag)
                    .map_err(|_| violation())?;
            }
        }
        Ok(())
    }

    /// Request-form wrapper over [`SuiteCipher::encrypt_in_place`].
    pub fn encrypt_sector(&self, req: &mut SectorRequest) -> Result<()> {
        req.tag = self.encrypt_in_place(req.sector_number, &req.iv, &mut req.payload)?;
        Ok(())
    }

    /// Request-form wrapper over [`SuiteCipher::decrypt_in_place`].
    pub fn decrypt_sector(&self, req: &mut SectorRequest) -> Result<()> {
        let tag = std::mem::take(&mut req.tag);
        let result = self.decrypt_in_place(req.sector_number, &req.iv, &mut req.payload, &tag);
        req.tag = tag;
        result
    }
}

/// Packs IV and tag into the per-sector metadata layout: IV first, then
/// tag, exactly `suite.metadata_bytes()` long.
pub fn pack_metadata(suite: CipherSuite, iv: &[u8], tag: &[u8]) -> Result<Vec<u8>> {
    let stored_iv = suite.iv_size();
    if tag.len() != suite.tag_size() {
        return Err(Error::InvalidArgument(format!(
            "tag is {} bytes, suite {} stores {}",
            tag.len(),
            suite,
            suite.tag_size()
        )));
    }
    // Derived IVs are recomputed from the sector number; nothing stored.
    let iv_part = if stored_iv == 0 { &[][..] } else { iv };
    if iv_part.len() != stored_iv {
        return Err(Error::InvalidArgument(format!(
            "IV is {} bytes, suite {} stores {}",
            iv.len(),
            suite,
            stored_iv
        )));
    }
    let mut meta = Vec::with_capacity(suite.metadata_bytes());
    meta.extend_from_slice(iv_part);
    meta.extend_from_slice(tag);
    Ok(meta)
}

/// Splits per-sector metadata back into (IV, tag).
pub fn unpack_metadata(suite: CipherSuite, meta: &[u8]) -> Result<(Vec<u8>, Vec<u8>)> {
    if meta.len() != suite.metadata_bytes() {
        return Err(Error::InvalidArgument(format!(
            "metadata is {} bytes, suite {} expects {}",
            meta.len(),
            suite,
            suite.metadata_bytes()
        )));
    }
    let (iv, tag) = meta.split_at(suite.iv_size());
    Ok((iv.to_vec(), tag.to_vec()))
}
