//! Persisted device parameters and format identity.
//!
//! The superblock occupies the first sector, serialized little-endian and
//! zero-padded to the full sector:
//!
//! ```text
//! offset  size  field
//!      0     8  magic "AEADFDE\0"
//!      8     2  version (u16, = 1)
//!     10     4  sector_size (u32)
//!     14     4  tag_size (u32)
//!     18     8  total_sectors (u64)
//!     26     8  data_sectors (u64)
//!     34     8  journal_sectors (u64)
//!     42     4  flags (u32)
//!     46    16  integrity profile name, NUL-padded
//! ```

use crate::error::{Error, Result};
use crate::layout::Layout;

pub const SUPERBLOCK_MAGIC: [u8; 8] = *b"AEADFDE\0";
pub const FORMAT_VERSION: u16 = 1;
/// Advertised integrity profile, after the hardware DIF profile this store
/// emulates in software.
pub const INTEGRITY_PROFILE: &str = "DM-DIF-EXT-TAG";

const ENCODED_LEN: usize = 62;

pub const FLAG_JOURNAL_ENABLED: u32 = 1 << 0;
pub const FLAG_STANDALONE_CRC: u32 = 1 << 1;
/// Set once the initial tag pass is complete: at format time in standalone
/// mode, by the re-encryption pass in provider mode.
pub const FLAG_FORMATTED: u32 = 1 << 2;
const FLAGS_KNOWN: u32 = FLAG_JOURNAL_ENABLED | FLAG_STANDALONE_CRC | FLAG_FORMATTED;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superblock {
    pub version: u16,
    pub sector_size: u32,
    pub tag_size: u32,
    pub total_sectors: u64,
    pub data_sectors: u64,
    pub journal_sectors: u64,
    pub flags: u32,
}

impl Superblock {
    pub fn journal_enabled(&self) -> bool {
        self.flags & FLAG_JOURNAL_ENABLED != 0
    }

    pub fn standalone_crc(&self) -> bool {
        self.flags & FLAG_STANDALONE_CRC != 0
    }

    pub fn formatted(&self) -> bool {
        self.flags & FLAG_FORMATTED != 0
    }

    /// Serializes into exactly one sector, zero-padded.
    pub fn encode(&self) -> Vec<u8> {
        let mut buf = vec![0u8; self.sector_size as usize];
        buf[0..8].copy_from_slice(&SUPERBLOCK_MAGIC);
        buf[8..10].copy_from_slice(&self.version.to_le_bytes());
        buf[10..14].copy_from_slice(&self.sector_size.to_le_bytes());
        buf[14..18].copy_from_slice(&self.tag_size.to_le_bytes());
        buf[18..26].copy_from_slice(&self.total_sectors.to_le_bytes());
        buf[26..34].copy_from_slice(&self.data_sectors.to_le_bytes());
        buf[34..42].copy_from_slice(&self.journal_sectors.to_le_bytes());
        buf[42..46].copy_from_slice(&self.flags.to_le_bytes());
        buf[46..46 + INTEGRITY_PROFILE.len()].copy_from_slice(INTEGRITY_PROFILE.as_bytes());
        buf
    }

    /// Parses a superblock from the first sector. `sector` may be longer
    /// than the encoded sector size; trailing padding up to the declared
    /// sector size must be zero.
    pub fn decode(sector: &[u8]) -> Result<Superblock> {
        if sector.len() < ENCODED_LEN {
            return Err(Error::BadMagic);
        }
        if sector[0..8] != SUPERBLOCK_MAGIC {
            return Err(Error::BadMagic);
        }
        let version = u16::from_le_bytes(sector[8..10].try_into().unwrap());
        if version != FORMAT_VERSION {
            return Err(Error::BadVersion(version));
        }
        let sector_size = u32::from_le_bytes(sector[10..14].try_into().unwrap());
        let tag_size = u32::from_le_bytes(sector[14..18].try_into().unwrap());
        let total_sectors = u64::from_le_bytes(sector[18..26].try_into().unwrap());
        let data_sectors = u64::from_le_bytes(sector[26..34].try_into().unwrap());
        let journal_sectors = u64::from_le_bytes(sector[34..42].try_into().unwrap());
        let flags = u32::from_le_bytes(sector[42..46].try_into().unwrap());

        let mut name = [0u8; 16];
        name[..INTEGRITY_PROFILE.len()].copy_from_slice(INTEGRITY_PROFILE.as_bytes());
        if sector[46..62] != name {
            return Err(Error::GeometryMismatch(
                "unknown integrity profile name".into(),
            ));
        }
        if flags & !FLAGS_KNOWN != 0 {
            return Err(Error::GeometryMismatch(format!(
                "unknown flag bits {:#x}",
                flags & !FLAGS_KNOWN
            )));
        }
        let end = (sector_size as usize).min(sector.len());
        if sector[ENCODED_LEN..end].iter().any(|&b| b != 0) {
            return Err(Error::GeometryMismatch(
                "superblock padding not zero".into(),
            ));
        }

        let sb = Superblock {
            version,
            sector_size,
            tag_size,
            total_sectors,
            data_sectors,
            journal_sectors,
            flags,
        };
        if sb.journal_enabled() != (journal_sectors > 0) {
            return Err(Error::GeometryMismatch(
                "journal flag disagrees with journal size".into(),
            ));
        }
        Ok(sb)
    }

    /// Rebuilds and validates the layout this superblock describes.
    pub fn layout(&self) -> Result<Layout> {
        Layout::from_geometry(
            self.total_sectors,
            self.sector_size,
            self.tag_size,
            self.journal_sectors,
            self.data_sectors,
        )
    }
}
