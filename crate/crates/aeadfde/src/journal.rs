//! Write-ahead data journal.
//!
//! Every journaled update is a transaction of full `(logical sector, data,
//! tag)` images. A transaction becomes replayable only once its commit
//! record is durable, which takes two ordered barriers: one after the
//! entries, one after the commit record. Because entries are complete
//! physical images, replay is idempotent — recovery can re-apply a
//! transaction any number of times and land in the same state.
//!
//! On-disk slot format (little-endian, bit-exact):
//!
//! ```text
//! header   magic 0x4A524E4C (u32) | sequence (u64) | entry_count (u32)
//! entries  entry_count × { logical (u64) | data[sector_size] | tag[tag_size] }
//! commit   magic 0x434D5431 (u32) | crc32 over header+entries (u32)
//! ```
//!
//! The ring is scanned from the region start at recovery. Slots form a
//! strictly-increasing sequence chain; the first slot that fails its magic,
//! commit record, checksum, or sequence ordering ends the log. A torn
//! commit record therefore reads as "this transaction never happened" —
//! exactly the all-or-nothing contract a crashed write needs. The write
//! cursor only wraps to the region start after a full checkpoint, so a
//! committed-but-unapplied transaction is never overwritten.

use crate::backing::Backing;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::metastore::SectorWithTag;

pub const SLOT_MAGIC: u32 = 0x4A52_4E4C;
pub const COMMIT_MAGIC: u32 = 0x434D_5431;

const HEADER_LEN: u64 = 4 + 8 + 4;
const COMMIT_LEN: u64 = 4 + 4;

/// Runtime view of the ring for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JournalStats {
    pub region_bytes: u64,
    /// Next append position, relative to the region start.
    pub tail: u64,
    /// Committed transactions not yet reclaimed by a checkpoint.
    pub pending: usize,
    pub next_sequence: u64,
}

struct PendingTxn {
    /// Present until applied to final locations.
    entries: Option<Vec<SectorWithTag>>,
}

pub struct Journal {
    region_start: u64,
    region_len: u64,
    tail: u64,
    next_seq: u64,
    pending: Vec<PendingTxn>,
}

fn entry_size(layout: &Layout) -> u64 {
    8 + layout.sector_size as u64 + layout.tag_size as u64
}

/// Serialized size of a transaction with `entries` entries.
pub fn transaction_size(entries: usize, layout: &Layout) -> u64 {
    HEADER_LEN + entries as u64 * entry_size(layout) + COMMIT_LEN
}

impl Journal {
    /// A freshly formatted journal; the caller has zeroed the region.
    pub fn new_empty(layout: &Layout) -> Journal {
        let region = layout.journal_byte_range();
        Journal {
            region_start: region.start,
            region_len: region.end - region.start,
            tail: 0,
            next_seq: 1,
            pending: Vec::new(),
        }
    }

    /// Scans the ring, replays every committed transaction in sequence
    /// order, and resets the ring. Returns the journal and the number of
    /// transactions replayed.
    pub fn recover<B: Backing>(backing: &B, layout: &Layout) -> Result<(Journal, u64)> {
        let region = layout.journal_byte_range();
        let region_len = region.end - region.start;
        let mut journal = Journal {
            region_start: region.start,
            region_len,
            tail: 0,
            next_seq: 1,
            pending: Vec::new(),
        };

        let txns = journal.scan(backing, layout)?;
        let replayed = txns.len() as u64;
        if let Some(last) = txns.last() {
            journal.next_seq = last.0 + 1;
        }
        for (_, entries) in &txns {
            apply_entries(backing, layout, entries)?;
        }
        if replayed > 0 {
            backing.flush()?;
            // Replayed state is durable; empty the log so a second open
            // starts clean.
            journal.invalidate(backing)?;
        }
        Ok((journal, replayed))
    }

    /// Parses the chain of committed transactions from the region start.
    fn scan<B: Backing>(
        &self,
        backing: &B,
        layout: &Layout,
    ) -> Result<Vec<(u64, Vec<SectorWithTag>)>> {
        let esize = entry_size(layout);
        let mut txns = Vec::new();
        let mut cursor = 0u64;
        let mut prev_seq = 0u64;

        loop {
            if cursor + HEADER_LEN + COMMIT_LEN > self.region_len {
                break;
            }
            let mut header = [0u8; HEADER_LEN as usize];
            backing.read_at(self.region_start + cursor, &mut header)?;
            if u32::from_le_bytes(header[0..4].try_into().unwrap()) != SLOT_MAGIC {
                break;
            }
            let seq = u64::from_le_bytes(header[4..12].try_into().unwrap());
            let count = u32::from_le_bytes(header[12..16].try_into().unwrap()) as u64;
            if count == 0 || seq <= prev_seq {
                break;
            }
            let slot_len = HEADER_LEN + count * esize + COMMIT_LEN;
            if cursor + slot_len > self.region_len {
                break;
            }

            let mut slot = vec![0u8; slot_len as usize];
            backing.read_at(self.region_start + cursor, &mut slot)?;
            let commit_at = (HEADER_LEN + count * esize) as usize;
            let commit_magic =
                u32::from_le_bytes(slot[commit_at..commit_at + 4].try_into().unwrap());
            if commit_magic != COMMIT_MAGIC {
                break;
            }
            let stored_crc =
                u32::from_le_bytes(slot[commit_at + 4..commit_at + 8].try_into().unwrap());
            if crc32fast::hash(&slot[..commit_at]) != stored_crc {
                // A torn commit record: the transaction never committed.
                break;
            }

            let mut entries = Vec::with_capacity(count as usize);
            let ss = layout.sector_size as usize;
            let ts = layout.tag_size as usize;
            for i in 0..count as usize {
                let at = HEADER_LEN as usize + i * esize as usize;
                let logical = u64::from_le_bytes(slot[at..at + 8].try_into().unwrap());
                if logical >= layout.data_sectors {
                    // The checksum held, so these bytes are what the writer
                    // committed — and the writer never commits an
                    // out-of-range sector. This is real corruption.
                    return Err(Error::CorruptJournal(format!(
                        "committed slot seq {seq} references sector {logical} beyond {}",
                        layout.data_sectors
                    )));
                }
                entries.push(SectorWithTag {
                    logical,
                    data: slot[at + 8..at + 8 + ss].to_vec(),
                    tag: slot[at + 8 + ss..at + 8 + ss + ts].to_vec(),
                });
            }
            txns.push((seq, entries));
            prev_seq = seq;
            cursor += slot_len;
        }
        Ok(txns)
    }

    /// Appends one transaction and makes it replayable. Returns the ring
    /// position (byte offset within the region) it was written at.
    ///
    /// Fails with [`Error::JournalFull`] when the transaction does not fit
    /// in the remaining ring space; the caller checkpoints and retries (or
    /// splits a transaction larger than the whole ring).
    pub fn append<B: Backing>(
        &mut self,
        backing: &B,
        layout: &Layout,
        entries: Vec<SectorWithTag>,
    ) -> Result<u64> {
        validate_entries(&entries, layout)?;
        let size = transaction_size(entries.len(), layout);
        if size > self.region_len - self.tail {
            return Err(Error::JournalFull {
                needed: size,
                capacity: self.region_len,
            });
        }

        let mut slot = Vec::with_capacity(size as usize);
        slot.extend_from_slice(&SLOT_MAGIC.to_le_bytes());
        slot.extend_from_slice(&self.next_seq.to_le_bytes());
        slot.extend_from_slice(&(entries.len() as u32).to_le_bytes());
        for entry in &entries {
            slot.extend_from_slice(&entry.logical.to_le_bytes());
            slot.extend_from_slice(&entry.data);
            slot.extend_from_slice(&entry.tag);
        }
        let crc = crc32fast::hash(&slot);

        let position = self.tail;
        // Entries first, then the commit record, with a barrier between:
        // the commit record must never reach media before the bytes it
        // vouches for.
        backing.write_at(self.region_start + position, &slot)?;
        backing.flush()?;
        let mut commit = Vec::with_capacity(COMMIT_LEN as usize);
        commit.extend_from_slice(&COMMIT_MAGIC.to_le_bytes());
        commit.extend_from_slice(&crc.to_le_bytes());
        backing.write_at(self.region_start + position + slot.len() as u64, &commit)?;
        backing.flush()?;

        self.pending.push(PendingTxn {
            entries: Some(entries),
        });
        self.next_seq += 1;
        self.tail += size;
        Ok(position)
    }

    /// Writes committed-but-unapplied transactions to their final
    /// locations. No barrier: the journal still vouches for them until the
    /// next checkpoint.
    pub fn apply_unapplied<B: Backing>(&mut self, backing: &B, layout: &Layout) -> Result<usize> {
        let mut applied = 0;
        for txn in &mut self.pending {
            if let Some(entries) = txn.entries.take() {
                apply_entries(backing, layout, &entries)?;
                applied += 1;
            }
        }
        Ok(applied)
    }

    /// Applies anything outstanding, makes it durable, and reclaims the
    /// ring. Returns the number of transactions checkpointed.
    pub fn checkpoint<B: Backing>(&mut self, backing: &B, layout: &Layout) -> Result<usize> {
        self.apply_unapplied(backing, layout)?;
        let count = self.pending.len();
        if count > 0 || self.tail > 0 {
            // Everything applied so far must be durable before the ring is
            // reused; otherwise an overwritten slot could be the only copy.
            backing.flush()?;
        }
        self.pending.clear();
        self.tail = 0;
        Ok(count)
    }

    /// Marks the log empty on disk. Requires a prior checkpoint.
    pub fn invalidate<B: Backing>(&mut self, backing: &B) -> Result<()> {
        debug_assert!(self.pending.iter().all(|t| t.entries.is_none()));
        backing.write_at(self.region_start, &[0u8; HEADER_LEN as usize])?;
        backing.flush()?;
        self.pending.clear();
        self.tail = 0;
        Ok(())
    }

    pub fn stats(&self) -> JournalStats {
        JournalStats {
            region_bytes: self.region_len,
            tail: self.tail,
            pending: self.pending.len(),
            next_sequence: self.next_seq,
        }
    }

    /// Largest entry count a single transaction can carry.
    pub fn max_entries_per_txn(&self, layout: &Layout) -> usize {
        ((self.region_len.saturating_sub(HEADER_LEN + COMMIT_LEN)) / entry_size(layout)) as usize
    }
}

fn validate_entries(entries: &[SectorWithTag], layout: &Layout) -> Result<()> {
    if entries.is_empty() {
        return Err(Error::InvalidArgument(
            "journal transaction must not be empty".into(),
        ));
    }
    let mut seen = std::collections::HashSet::with_capacity(entries.len());
    for entry in entries {
        if entry.logical >= layout.data_sectors {
            return Err(Error::OutOfRange {
                sector: entry.logical,
                limit: layout.data_sectors,
            });
        }
        if entry.data.len() != layout.sector_size as usize {
            return Err(Error::InvalidArgument(format!(
                "entry data is {} bytes, sector size is {}",
                entry.data.len(),
                layout.sector_size
            )));
        }
        if entry.tag.len() != layout.tag_size as usize {
            return Err(Error::InvalidArgument(format!(
                "entry tag is {} bytes, tag size is {}",
                entry.tag.len(),
                layout.tag_size
            )));
        }
        if !seen.insert(entry.logical) {
            return Err(Error::InvalidArgument(format!(
                "duplicate sector {} in one transaction",
                entry.logical
            )));
        }
    }
    Ok(())
}

/// Writes entry images to their final data and tag locations.
pub(crate) fn apply_entries<B: Backing>(
    backing: &B,
    layout: &Layout,
    entries: &[SectorWithTag],
) -> Result<()> {
    for entry in entries {
        backing.write_at(layout.data_byte_offset(entry.logical)?, &entry.data)?;
        let range = layout.tag_byte_range(entry.logical)?;
        backing.write_at(range.start, &entry.tag)?;
    }
    Ok(())
}
