//! On-device geometry: interleaved metadata regions and address translation.
//!
//! The device is carved into a superblock sector, a journal region, and a
//! data area made of repeating regions of one metadata sector followed by
//! the data sectors whose tags it holds. The metadata sector comes first in
//! each region so a tag's location is computable before its data is written.
//!
//! ```text
//! | SB | journal ... | M | D D ... D | M | D D ... D | M | D ... |
//!                      '--- region ---'
//! ```
//!
//! One metadata sector holds `tags_per_sector = floor(sector_size /
//! tag_size)` tags, so `meta_sectors = ceil(data_sectors / tags_per_sector)`.
//! The final region may hold fewer data sectors; its metadata sector is
//! still full-size.

use crate::error::{Error, Result};

pub const SUPERBLOCK_SECTORS: u64 = 1;

/// Supported device sector sizes.
pub const SECTOR_SIZES: [u32; 2] = [512, 4096];

/// How many per-sector tags fit in one metadata sector.
pub fn tags_per_sector(sector_size: u32, tag_size: u32) -> Result<u32> {
    if tag_size == 0 {
        return Err(Error::InvalidArgument("tag size must be non-zero".into()));
    }
    if tag_size > sector_size {
        return Err(Error::InvalidArgument(format!(
            "tag size {tag_size} exceeds sector size {sector_size}"
        )));
    }
    Ok(sector_size / tag_size)
}

/// Metadata sectors needed to hold one tag for each of `data_sectors`.
pub fn meta_sectors_required(data_sectors: u64, tags_per_sector: u32) -> Result<u64> {
    if tags_per_sector == 0 {
        return Err(Error::InvalidArgument(
            "tags per sector must be non-zero".into(),
        ));
    }
    Ok(data_sectors.div_ceil(tags_per_sector as u64))
}

/// Fraction of the device spent on metadata, in percent.
///
/// For comparing against fixed overhead tables independent of device size,
/// call with one full region: `data_sectors = tags_per_sector`,
/// `meta_sectors = 1`.
pub fn overhead_percent(data_sectors: u64, meta_sectors: u64) -> Result<f64> {
    let total = data_sectors + meta_sectors;
    if total == 0 {
        return Err(Error::InvalidArgument(
            "overhead of an empty device is undefined".into(),
        ));
    }
    Ok(100.0 * meta_sectors as f64 / total as f64)
}

/// Physical placement of one logical sector: its data sector, the metadata
/// sector holding its tag, and the tag's byte offset inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhysicalAddress {
    pub data_sector: u64,
    pub meta_sector: u64,
    pub tag_offset: u32,
}

/// Complete device geometry. All counts are in sectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub sector_size: u32,
    pub tag_size: u32,
    pub tags_per_sector: u32,
    pub data_sectors: u64,
    pub meta_sectors: u64,
    pub journal_sectors: u64,
    pub superblock_sectors: u64,
    pub total_sectors: u64,
    /// First sector of the interleaved data area.
    pub data_region_start: u64,
}

impl Layout {
    /// Builds the layout with the largest possible `data_sectors` for a
    /// device of `total_sectors`.
    pub fn for_capacity(
        total_sectors: u64,
        sector_size: u32,
        tag_size: u32,
        journal_sectors: u64,
    ) -> Result<Self> {
        if !SECTOR_SIZES.contains(&sector_size) {
            return Err(Error::InvalidArgument(format!(
                "unsupported sector size {sector_size}"
            )));
        }
        let tps = tags_per_sector(sector_size, tag_size)?;
        let reserved = SUPERBLOCK_SECTORS + journal_sectors;
        if total_sectors <= reserved {
            return Err(Error::TooSmall {
                needed: (reserved + 2) * sector_size as u64,
                available: total_sectors * sector_size as u64,
            });
        }

        // Each full region is one metadata sector plus `tps` data sectors; a
        // leftover of r sectors still fits r-1 data sectors behind one
        // metadata sector (r-1 <= tps since r <= tps).
        let available = total_sectors - reserved;
        let full_regions = available / (tps as u64 + 1);
        let leftover = available % (tps as u64 + 1);
        let data_sectors = full_regions * tps as u64 + leftover.saturating_sub(1);
        if data_sectors == 0 {
            return Err(Error::TooSmall {
                needed: (reserved + 2) * sector_size as u64,
                available: total_sectors * sector_size as u64,
            });
        }
        let meta_sectors = meta_sectors_required(data_sectors, tps)?;

        Ok(Layout {
            sector_size,
            tag_size,
            tags_per_sector: tps,
            data_sectors,
            meta_sectors,
            journal_sectors,
            superblock_sectors: SUPERBLOCK_SECTORS,
            total_sectors,
            data_region_start: reserved,
        })
    }

    /// Re-derives a layout from persisted geometry and cross-checks it.
    pub fn from_geometry(
        total_sectors: u64,
        sector_size: u32,
        tag_size: u32,
        journal_sectors: u64,
        data_sectors: u64,
    ) -> Result<Self> {
        let layout = Layout::for_capacity(total_sectors, sector_size, tag_size, journal_sectors)?;
        if layout.data_sectors != data_sectors {
            return Err(Error::GeometryMismatch(format!(
                "superblock claims {data_sectors} data sectors, layout computes {}",
                layout.data_sectors
            )));
        }
        Ok(layout)
    }

    /// Translates a logical sector into its physical placement.
    pub fn to_physical(&self, logical: u64) -> Result<PhysicalAddress> {
        if logical >= self.data_sectors {
            return Err(Error::OutOfRange {
                sector: logical,
                limit: self.data_sectors,
            });
        }
        let tps = self.tags_per_sector as u64;
        let region = logical / tps;
        let index = logical % tps;
        let meta_sector = self.data_region_start + region * (tps + 1);
        Ok(PhysicalAddress {
            data_sector: meta_sector + 1 + index,
            meta_sector,
            tag_offset: (index as u32) * self.tag_size,
        })
    }

    /// Absolute byte offset of a logical sector's data.
    pub fn data_byte_offset(&self, logical: u64) -> Result<u64> {
        Ok(self.to_physical(logical)?.data_sector * self.sector_size as u64)
    }

    /// Absolute byte range of a logical sector's tag.
    pub fn tag_byte_range(&self, logical: u64) -> Result<std::ops::Range<u64>> {
        let addr = self.to_physical(logical)?;
        let start = addr.meta_sector * self.sector_size as u64 + addr.tag_offset as u64;
        Ok(start..start + self.tag_size as u64)
    }

    /// Logical sectors whose tags live in the given metadata sector, if it
    /// is one.
    pub fn logical_sectors_of_meta(&self, meta_sector: u64) -> Option<std::ops::Range<u64>> {
        if meta_sector < self.data_region_start || meta_sector >= self.total_sectors {
            return None;
        }
        let tps = self.tags_per_sector as u64;
        let rel = meta_sector - self.data_region_start;
        if rel % (tps + 1) != 0 {
            return None;
        }
        let region = rel / (tps + 1);
        let first = region * tps;
        if first >= self.data_sectors {
            return None;
        }
        Some(first..(first + tps).min(self.data_sectors))
    }

    pub fn journal_byte_range(&self) -> std::ops::Range<u64> {
        let start = SUPERBLOCK_SECTORS * self.sector_size as u64;
        start..start + self.journal_sectors * self.sector_size as u64
    }

    pub fn device_bytes(&self) -> u64 {
        self.total_sectors * self.sector_size as u64
    }
}

/// Default journal sizing: max(64 sectors, 1/128 of capacity), capped at
/// 16 MiB. The journal is a fraction of the device; it only needs to absorb
/// in-flight transactions between checkpoints.
pub fn default_journal_sectors(total_sectors: u64, sector_size: u32) -> u64 {
    let cap = (16u64 << 20) / sector_size as u64;
    (total_sectors / 128).max(64).min(cap)
}
