//! Virtual block device with arbitrary per-sector metadata over a plain
//! backing store.
//!
//! The store runs in one of two modes, chosen at format time:
//!
//! * **standalone** — it computes and verifies CRC32 checksums itself and
//!   fails reads on mismatch;
//! * **provider** — it stores opaque metadata bytes (an encryption layer's
//!   IV and authentication tag) and hands them up unverified.
//!
//! In provider mode a freshly formatted device carries an all-`0xFF`
//! "untagged" marker in every metadata slot. The layer above treats that
//! marker as "must re-encrypt before first read", which reproduces the
//! initial-format behavior of integrity-enabled disk encryption: every read
//! fails until all tags have been recalculated once.

use parking_lot::{Mutex, RwLock};

use crate::backing::Backing;
use crate::error::{Error, Result};
use crate::journal::{self, Journal, JournalStats};
use crate::layout::Layout;
use crate::superblock::{
    Superblock, FLAG_FORMATTED, FLAG_JOURNAL_ENABLED, FLAG_STANDALONE_CRC, FORMAT_VERSION,
};

/// One logical sector with its metadata bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorWithTag {
    pub logical: u64,
    pub data: Vec<u8>,
    pub tag: Vec<u8>,
}

/// Metadata slot value meaning "no tag has ever been written here".
pub fn untagged_marker(tag_size: u32) -> Vec<u8> {
    vec![0xFF; tag_size as usize]
}

/// Standalone-mode tag rule: CRC32 of the data, little-endian, zero-padded
/// to the tag size.
pub fn crc_tag(data: &[u8], tag_size: u32) -> Vec<u8> {
    let mut tag = vec![0u8; tag_size as usize];
    let crc = crc32fast::hash(data).to_le_bytes();
    let n = (tag_size as usize).min(4);
    tag[..n].copy_from_slice(&crc[..n]);
    tag
}

fn crc_tag_valid(data: &[u8], tag: &[u8]) -> bool {
    tag == crc_tag(data, tag.len() as u32).as_slice()
}

/// Format-time parameters.
#[derive(Debug, Clone)]
pub struct FormatOptions {
    pub sector_size: u32,
    pub tag_size: u32,
    /// `None` picks the default sizing rule; `Some(0)` disables the journal.
    pub journal_sectors: Option<u64>,
    pub standalone: bool,
}

impl FormatOptions {
    pub fn standalone_crc32(sector_size: u32) -> Self {
        FormatOptions {
            sector_size,
            tag_size: 4,
            journal_sectors: None,
            standalone: true,
        }
    }

    pub fn provider(sector_size: u32, tag_size: u32) -> Self {
        FormatOptions {
            sector_size,
            tag_size,
            journal_sectors: None,
            standalone: false,
        }
    }
}

enum WriteSync {
    Journaled(Mutex<Journal>),
    Direct(Mutex<()>),
}

pub struct Metastore<B: Backing> {
    backing: B,
    layout: Layout,
    superblock: Mutex<Superblock>,
    sync: WriteSync,
    /// Readers share; the journal apply path and direct writes exclude them
    /// so a read never observes a torn sector image.
    io: RwLock<()>,
}

impl<B: Backing> Metastore<B> {
    /// Formats the backing store and returns the opened device.
    ///
    /// Standalone mode leaves every sector immediately readable (zero data,
    /// valid checksums). Provider mode writes the untagged marker instead;
    /// reads through the encryption layer fail until its re-encryption pass
    /// has run.
    pub fn format(backing: B, opts: &FormatOptions) -> Result<Metastore<B>> {
        let total_sectors = backing.size() / opts.sector_size as u64;
        let journal_sectors = opts.journal_sectors.unwrap_or_else(|| {
            crate::layout::default_journal_sectors(total_sectors, opts.sector_size)
        });
        let layout =
            Layout::for_capacity(total_sectors, opts.sector_size, opts.tag_size, journal_sectors)?;
        if opts.standalone && opts.tag_size < 4 {
            return Err(Error::InvalidArgument(
                "standalone CRC32 mode needs a tag of at least 4 bytes".into(),
            ));
        }
        if journal_sectors > 0 {
            let region = layout.journal_byte_range();
            let min = journal::transaction_size(1, &layout);
            if region.end - region.start < min {
                return Err(Error::TooSmall {
                    needed: min,
                    available: region.end - region.start,
                });
            }
        }

        let ss = layout.sector_size as usize;
        let zero_sector = vec![0u8; ss];

        // Journal starts empty.
        let region = layout.journal_byte_range();
        let mut offset = region.start;
        while offset < region.end {
            backing.write_at(offset, &zero_sector)?;
            offset += ss as u64;
        }

        // Initial tag pass over every metadata sector; standalone mode also
        // zeroes the data so the checksums it writes hold.
        let meta_template = if opts.standalone {
            let slot = crc_tag(&zero_sector, layout.tag_size);
            let mut sector = vec![0u8; ss];
            for chunk in sector.chunks_mut(layout.tag_size as usize) {
                let n = chunk.len().min(slot.len());
                chunk[..n].copy_from_slice(&slot[..n]);
            }
            sector
        } else {
            vec![0xFF; ss]
        };
        for logical in 0..layout.data_sectors {
            let addr = layout.to_physical(logical)?;
            if addr.tag_offset == 0 {
                backing.write_at(addr.meta_sector * ss as u64, &meta_template)?;
            }
            if opts.standalone {
                backing.write_at(addr.data_sector * ss as u64, &zero_sector)?;
            }
        }
        backing.flush()?;

        // The superblock goes last: a crash mid-format leaves an unformatted
        // device, never a half-formatted one that claims to be valid.
        let mut flags = 0;
        if journal_sectors > 0 {
            flags |= FLAG_JOURNAL_ENABLED;
        }
        if opts.standalone {
            flags |= FLAG_STANDALONE_CRC | FLAG_FORMATTED;
        }
        let superblock = Superblock {
            version: FORMAT_VERSION,
            sector_size: layout.sector_size,
            tag_size: layout.tag_size,
            total_sectors,
            data_sectors: layout.data_sectors,
            journal_sectors,
            flags,
        };
        backing.write_at(0, &superblock.encode())?;
        backing.flush()?;

        let sync = if journal_sectors > 0 {
            WriteSync::Journaled(Mutex::new(Journal::new_empty(&layout)))
        } else {
            WriteSync::Direct(Mutex::new(()))
        };
        Ok(Metastore {
            backing,
            layout,
            superblock: Mutex::new(superblock),
            sync,
            io: RwLock::new(()),
        })
    }

    /// Opens a formatted device: validates the superblock, recovers the
    /// journal, and only then accepts I/O.
    pub fn open(backing: B) -> Result<Metastore<B>> {
        let (store, _) = Self::open_counting(backing)?;
        Ok(store)
    }

    /// Like [`Metastore::open`], also reporting how many journal
    /// transactions recovery replayed.
    pub fn open_counting(backing: B) -> Result<(Metastore<B>, u64)> {
        if backing.size() < 512 {
            return Err(Error::BadMagic);
        }
        let mut first = vec![0u8; 512];
        backing.read_at(0, &mut first)?;
        let mut superblock = Superblock::decode(&first)?;
        if superblock.sector_size as usize > first.len() {
            let mut full = vec![0u8; superblock.sector_size as usize];
            if backing.size() < full.len() as u64 {
                return Err(Error::GeometryMismatch("backing shrank".into()));
            }
            backing.read_at(0, &mut full)?;
            superblock = Superblock::decode(&full)?;
        }
        let layout = superblock.layout()?;
        if backing.size() < layout.device_bytes() {
            return Err(Error::GeometryMismatch(format!(
                "superblock expects {} bytes, backing has {}",
                layout.device_bytes(),
                backing.size()
            )));
        }

        let (sync, replayed) = if superblock.journal_enabled() {
            let (journal, replayed) = Journal::recover(&backing, &layout)?;
            (WriteSync::Journaled(Mutex::new(journal)), replayed)
        } else {
            (WriteSync::Direct(Mutex::new(())), 0)
        };
        Ok((
            Metastore {
                backing,
                layout,
                superblock: Mutex::new(superblock),
                sync,
                io: RwLock::new(()),
            },
            replayed,
        ))
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn superblock(&self) -> Superblock {
        self.superblock.lock().clone()
    }

    pub fn data_sectors(&self) -> u64 {
        self.layout.data_sectors
    }

    pub fn sector_size(&self) -> u32 {
        self.layout.sector_size
    }

    pub fn tag_size(&self) -> u32 {
        self.layout.tag_size
    }

    pub fn standalone(&self) -> bool {
        self.superblock.lock().standalone_crc()
    }

    pub fn journal_stats(&self) -> Option<JournalStats> {
        match &self.sync {
            WriteSync::Journaled(journal) => Some(journal.lock().stats()),
            WriteSync::Direct(_) => None,
        }
    }

    pub fn backing(&self) -> &B {
        &self.backing
    }

    fn check_range(&self, first: u64, count: u64) -> Result<()> {
        let end = first.checked_add(count);
        match end {
            Some(end) if end <= self.layout.data_sectors => Ok(()),
            _ => Err(Error::OutOfRange {
                sector: first.saturating_add(count.saturating_sub(1)),
                limit: self.layout.data_sectors,
            }),
        }
    }

    fn read_one(&self, logical: u64) -> Result<SectorWithTag> {
        let mut data = vec![0u8; self.layout.sector_size as usize];
        self.backing
            .read_at(self.layout.data_byte_offset(logical)?, &mut data)?;
        let range = self.layout.tag_byte_range(logical)?;
        let mut tag = vec![0u8; (range.end - range.start) as usize];
        self.backing.read_at(range.start, &mut tag)?;
        Ok(SectorWithTag { logical, data, tag })
    }

    /// Reads `count` sectors with their tags. In standalone mode every
    /// checksum is verified and a single mismatch fails the whole request,
    /// naming the first bad sector.
    pub fn read_sectors(&self, first: u64, count: u64) -> Result<Vec<SectorWithTag>> {
        self.check_range(first, count)?;
        let standalone = self.standalone();
        let _r = self.io.read();
        let mut out = Vec::with_capacity(count as usize);
        for logical in first..first + count {
            let sector = self.read_one(logical)?;
            if standalone && !crc_tag_valid(&sector.data, &sector.tag) {
                return Err(Error::IntegrityViolation { sector: logical });
            }
            out.push(sector);
        }
        Ok(out)
    }

    /// Writes sectors with their tags as one atomic request when the
    /// journal is enabled. In standalone mode tags are computed internally
    /// and caller-supplied tags are ignored.
    ///
    /// A request larger than the whole journal ring is split into
    /// ring-sized transactions; atomicity is then per transaction, not per
    /// request.
    pub fn write_sectors(&self, sectors: &[SectorWithTag]) -> Result<()> {
        if sectors.is_empty() {
            return Ok(());
        }
        for sector in sectors {
            self.check_range(sector.logical, 1)?;
        }
        let standalone = self.standalone();
        let prepared: Vec<SectorWithTag> = sectors
            .iter()
            .map(|s| {
                let tag = if standalone {
                    crc_tag(&s.data, self.layout.tag_size)
                } else {
                    s.tag.clone()
                };
                SectorWithTag {
                    logical: s.logical,
                    data: s.data.clone(),
                    tag,
                }
            })
            .collect();

        match &self.sync {
            WriteSync::Journaled(journal) => {
                let mut journal = journal.lock();
                let max = journal.max_entries_per_txn(&self.layout).max(1);
                for chunk in prepared.chunks(max) {
                    let mut chunk_vec = chunk.to_vec();
                    match journal.append(&self.backing, &self.layout, chunk_vec) {
                        Ok(_) => {}
                        Err(Error::JournalFull { .. }) => {
                            // Ring exhausted; checkpoint reclaims it.
                            let _w = self.io.write();
                            journal.checkpoint(&self.backing, &self.layout)?;
                            drop(_w);
                            chunk_vec = chunk.to_vec();
                            journal.append(&self.backing, &self.layout, chunk_vec)?;
                        }
                        Err(e) => return Err(e),
                    }
                    let _w = self.io.write();
                    journal.apply_unapplied(&self.backing, &self.layout)?;
                }
                Ok(())
            }
            WriteSync::Direct(writer) => {
                // Without a journal a crash can leave some sectors old and
                // some new; each sector's data+tag pair is still written
                // together, so a torn request surfaces as per-sector
                // checksum failures, never as silent mixing inside one
                // sector's pair going unnoticed.
                let _serialize = writer.lock();
                let _w = self.io.write();
                journal::apply_entries(&self.backing, &self.layout, &prepared)
            }
        }
    }

    /// Scrubs the whole device, returning every logical sector whose tag
    /// check fails, without aborting at the first hit.
    ///
    /// Standalone mode uses the built-in CRC32 rule. Provider mode requires
    /// a caller-supplied check, since only the layer above can interpret
    /// its tags.
    pub fn verify_all(
        &self,
        check: Option<&dyn Fn(u64, &[u8], &[u8]) -> bool>,
    ) -> Result<Vec<u64>> {
        let standalone = self.standalone();
        if !standalone && check.is_none() {
            return Err(Error::InvalidArgument(
                "provider mode needs a per-sector check callback".into(),
            ));
        }
        let _r = self.io.read();
        let mut failing = Vec::new();
        for logical in 0..self.layout.data_sectors {
            let sector = self.read_one(logical)?;
            let ok = match check {
                Some(callback) => callback(logical, &sector.data, &sector.tag),
                None => crc_tag_valid(&sector.data, &sector.tag),
            };
            if !ok {
                failing.push(logical);
            }
        }
        Ok(failing)
    }

    /// Persists a superblock flag change (used by the re-encryption pass to
    /// mark the initial tag pass complete).
    pub fn set_formatted(&self, formatted: bool) -> Result<()> {
        let mut superblock = self.superblock.lock();
        if formatted {
            superblock.flags |= FLAG_FORMATTED;
        } else {
            superblock.flags &= !FLAG_FORMATTED;
        }
        self.backing.write_at(0, &superblock.encode())?;
        self.backing.flush()?;
        Ok(())
    }

    pub fn formatted(&self) -> bool {
        self.superblock.lock().formatted()
    }

    /// Checkpoints the journal and makes everything durable.
    pub fn flush(&self) -> Result<()> {
        if let WriteSync::Journaled(journal) = &self.sync {
            let mut journal = journal.lock();
            let _w = self.io.write();
            journal.checkpoint(&self.backing, &self.layout)?;
        }
        self.backing.flush()
    }

    /// Clean shutdown: checkpoint, then mark the journal empty so the next
    /// open replays nothing.
    pub fn close(self) -> Result<()> {
        self.flush()?;
        if let WriteSync::Journaled(journal) = &self.sync {
            journal.lock().invalidate(&self.backing)?;
        }
        Ok(())
    }
}
