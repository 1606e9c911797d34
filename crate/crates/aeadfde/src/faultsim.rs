//! Fault and attacker model harness.
//!
//! Injects the events an integrity-protected store must either detect or
//! knowingly let pass — random bit rot, deliberate tampering with checksum
//! fix-up, sector relocation, snapshot replay, torn writes — and classifies
//! what a reader observes afterwards. The classification drives the
//! detection matrix: authenticated suites catch corruption, tampering, and
//! relocation; nobody catches a coherent replay of old content without
//! external trusted state; length-preserving encryption alone catches
//! nothing and hands back garbage.
//!
//! Plans address logical sectors; the layout oracle resolves them to
//! physical byte ranges, so injections land exactly where the device would
//! look.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::sync::Arc;

use crate::backing::{Backing, MemBacking, WriteEvent};
use crate::cryptdev::{CryptDevice, DeviceConfig};
use crate::crypto::iv::SeededEntropy;
use crate::crypto::CipherSuite;
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::metastore::{crc_tag, FormatOptions, Metastore, SectorWithTag};

/// What a fault plan does to the stored bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultKind {
    /// Flip one bit of a sector's stored data.
    BitFlipData { sector: u64, bit: u64 },
    /// Flip one bit of a sector's stored metadata (IV ‖ tag bytes).
    BitFlipMeta { sector: u64, bit: u64 },
    /// Exchange two sectors; `coherent` moves their metadata along.
    SectorSwap { a: u64, b: u64, coherent: bool },
    /// Restore the entire store from an earlier snapshot.
    SnapshotReplayFull,
    /// Restore one sector (and, if `coherent`, its metadata) from an
    /// earlier snapshot.
    SnapshotReplaySector { sector: u64, coherent: bool },
    /// Run a scripted multi-sector write and crash it at a byte offset of
    /// its physical write stream.
    TornWrite { first: u64, count: u64, crash_byte: u64 },
}

/// One injectable fault with its provenance seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaultPlan {
    pub kind: FaultKind,
    pub seed: u64,
}

impl FaultPlan {
    pub fn new(kind: FaultKind) -> Self {
        FaultPlan { kind, seed: 0 }
    }
}

/// Line format: `kind key=value... seed=N`, whitespace-separated.
pub fn plan_to_line(plan: &FaultPlan) -> String {
    let body = match plan.kind {
        FaultKind::BitFlipData { sector, bit } => format!("bit_flip_data sector={sector} bit={bit}"),
        FaultKind::BitFlipMeta { sector, bit } => format!("bit_flip_meta sector={sector} bit={bit}"),
        FaultKind::SectorSwap { a, b, coherent } => {
            format!("sector_swap a={a} b={b} coherent={}", coherent as u8)
        }
        FaultKind::SnapshotReplayFull => "snapshot_replay_full".to_string(),
        FaultKind::SnapshotReplaySector { sector, coherent } => {
            format!("snapshot_replay_sector sector={sector} coherent={}", coherent as u8)
        }
        FaultKind::TornWrite { first, count, crash_byte } => {
            format!("torn_write first={first} count={count} crash_byte={crash_byte}")
        }
    };
    format!("{body} seed={}", plan.seed)
}

pub fn parse_plan_line(line: &str) -> Result<FaultPlan> {
    let mut parts = line.split_whitespace();
    let kind_name = parts
        .next()
        .ok_or_else(|| Error::InvalidPlan("empty plan line".into()))?;
    let mut fields = std::collections::HashMap::new();
    for part in parts {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidPlan(format!("expected key=value, got '{part}'")))?;
        let value: u64 = value
            .parse()
            .map_err(|_| Error::InvalidPlan(format!("bad value in '{part}'")))?;
        fields.insert(key.to_string(), value);
    }
    let mut take = |key: &str| {
        fields
            .remove(key)
            .ok_or_else(|| Error::InvalidPlan(format!("{kind_name} needs {key}=")))
    };
    let kind = match kind_name {
        "bit_flip_data" => FaultKind::BitFlipData {
            sector: take("sector")?,
            bit: take("bit")?,
        },
        "bit_flip_meta" => FaultKind::BitFlipMeta {
            sector: take("sector")?,
            bit: take("bit")?,
        },
        "sector_swap" => FaultKind::SectorSwap {
            a: take("a")?,
            b: take("b")?,
            coherent: take("coherent")? != 0,
        },
        "snapshot_replay_full" => FaultKind::SnapshotReplayFull,
        "snapshot_replay_sector" => FaultKind::SnapshotReplaySector {
            sector: take("sector")?,
            coherent: take("coherent")? != 0,
        },
        "torn_write" => FaultKind::TornWrite {
            first: take("first")?,
            count: take("count")?,
            crash_byte: take("crash_byte")?,
        },
        other => return Err(Error::InvalidPlan(format!("unknown fault kind '{other}'"))),
    };
    let seed = fields.remove("seed").unwrap_or(0);
    if let Some(key) = fields.keys().next() {
        return Err(Error::InvalidPlan(format!(
            "unknown field '{key}' for {kind_name}"
        )));
    }
    Ok(FaultPlan { kind, seed })
}

/// Parses a plan corpus: one plan per line, `#` comments and blank lines
/// ignored.
pub fn parse_plan_file(text: &str) -> Result<Vec<FaultPlan>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_plan_line)
        .collect()
}

/// Resolves logical sectors of the device under attack to physical byte
/// ranges of the backing store.
#[derive(Debug, Clone)]
pub enum AddressMap {
    /// Metadata-store stack: `group` store sectors per presented sector.
    Meta { layout: Layout, group: u32 },
    /// Raw length-preserving device: logical position is physical position.
    Raw { sector_size: u32 },
}

impl AddressMap {
    pub fn sector_bytes(&self) -> u64 {
        match self {
            AddressMap::Meta { layout, group } => layout.sector_size as u64 * *group as u64,
            AddressMap::Raw { sector_size } => *sector_size as u64,
        }
    }

    /// Physical byte ranges of a presented sector's data, in order.
    pub fn data_ranges(&self, sector: u64) -> Result<Vec<std::ops::Range<u64>>> {
        match self {
            AddressMap::Meta { layout, group } => {
                let mut ranges = Vec::with_capacity(*group as usize);
                for i in 0..*group as u64 {
                    let offset = layout.data_byte_offset(sector * *group as u64 + i)?;
                    ranges.push(offset..offset + layout.sector_size as u64);
                }
                Ok(ranges)
            }
            AddressMap::Raw { sector_size } => {
                let start = sector * *sector_size as u64;
                Ok(vec![start..start + *sector_size as u64])
            }
        }
    }

    /// Physical byte range of a presented sector's metadata slot, if any.
    pub fn meta_range(&self, sector: u64) -> Result<Option<std::ops::Range<u64>>> {
        match self {
            AddressMap::Meta { layout, group } => {
                Ok(Some(layout.tag_byte_range(sector * *group as u64)?))
            }
            AddressMap::Raw { .. } => Ok(None),
        }
    }
}

/// Exact byte mutations an injection performed, for bit-identical reversal.
#[derive(Debug, Clone, Default)]
pub struct MutationLog {
    pub changes: Vec<ByteChange>,
}

#[derive(Debug, Clone)]
pub struct ByteChange {
    pub offset: u64,
    pub old: Vec<u8>,
    pub new: Vec<u8>,
}

impl MutationLog {
    fn record(&mut self, backing: &MemBacking, offset: u64, new: &[u8]) -> Result<()> {
        let mut old = vec![0u8; new.len()];
        backing.read_at(offset, &mut old)?;
        backing.mutate(offset, new);
        self.changes.push(ByteChange {
            offset,
            old,
            new: new.to_vec(),
        });
        Ok(())
    }

    /// Undoes the injection; applying in reverse order restores the
    /// pre-injection image even when changes overlap.
    pub fn revert(&self, backing: &MemBacking) {
        for change in self.changes.iter().rev() {
            backing.mutate(change.offset, &change.old);
        }
    }

    pub fn reapply(&self, backing: &MemBacking) {
        for change in &self.changes {
            backing.mutate(change.offset, &change.new);
        }
    }

    pub fn changed_bytes(&self) -> u64 {
        self.changes.iter().map(|c| c.new.len() as u64).sum()
    }
}

fn flip_bit_in_ranges(
    log: &mut MutationLog,
    backing: &MemBacking,
    ranges: &[std::ops::Range<u64>],
    bit: u64,
) -> Result<()> {
    let total_bits: u64 = ranges.iter().map(|r| (r.end - r.start) * 8).sum();
    if bit >= total_bits {
        return Err(Error::InvalidPlan(format!(
            "bit {bit} outside target of {total_bits} bits"
        )));
    }
    let mut remaining = bit;
    for range in ranges {
        let bits_here = (range.end - range.start) * 8;
        if remaining < bits_here {
            let offset = range.start + remaining / 8;
            let mut byte = [0u8; 1];
            backing.read_at(offset, &mut byte)?;
            byte[0] ^= 1 << (remaining % 8);
            return log.record(backing, offset, &byte);
        }
        remaining -= bits_here;
    }
    unreachable!("bit bounds checked above");
}

/// Applies a fault plan to the backing store. Returns the mutation log;
/// replay kinds need `snapshot`, the earlier full image to restore from.
pub fn inject(
    plan: &FaultPlan,
    backing: &MemBacking,
    map: &AddressMap,
    snapshot: Option<&[u8]>,
) -> Result<MutationLog> {
    let mut log = MutationLog::default();
    let need_snapshot = || {
        snapshot.ok_or_else(|| {
            Error::InvalidPlan("replay plans need an earlier snapshot image".into())
        })
    };
    match plan.kind {
        FaultKind::BitFlipData { sector, bit } => {
            flip_bit_in_ranges(&mut log, backing, &map.data_ranges(sector)?, bit)?;
        }
        FaultKind::BitFlipMeta { sector, bit } => {
            let range = map.meta_range(sector)?.ok_or_else(|| {
                Error::InvalidPlan("device stores no per-sector metadata to flip".into())
            })?;
            flip_bit_in_ranges(&mut log, backing, &[range], bit)?;
        }
        FaultKind::SectorSwap { a, b, coherent } => {
            if a == b {
                return Err(Error::InvalidPlan("sector_swap needs two distinct sectors".into()));
            }
            let mut swap = |ra: std::ops::Range<u64>, rb: std::ops::Range<u64>| -> Result<()> {
                let len = (ra.end - ra.start) as usize;
                let mut da = vec![0u8; len];
                let mut db = vec![0u8; len];
                backing.read_at(ra.start, &mut da)?;
                backing.read_at(rb.start, &mut db)?;
                log.record(backing, ra.start, &db)?;
                log.record(backing, rb.start, &da)
            };
            for (ra, rb) in map.data_ranges(a)?.into_iter().zip(map.data_ranges(b)?) {
                swap(ra, rb)?;
            }
            if coherent {
                if let (Some(ma), Some(mb)) = (map.meta_range(a)?, map.meta_range(b)?) {
                    swap(ma, mb)?;
                }
            }
        }
        FaultKind::SnapshotReplayFull => {
            let snap = need_snapshot()?;
            if snap.len() as u64 != backing.size() {
                return Err(Error::InvalidPlan("snapshot size differs from store".into()));
            }
            log.record(backing, 0, snap)?;
        }
        FaultKind::SnapshotReplaySector { sector, coherent } => {
            let snap = need_snapshot()?;
            let mut restore = |range: std::ops::Range<u64>| -> Result<()> {
                log.record(
                    backing,
                    range.start,
                    &snap[range.start as usize..range.end as usize],
                )
            };
            for range in map.data_ranges(sector)? {
                restore(range)?;
            }
            if coherent {
                if let Some(range) = map.meta_range(sector)? {
                    restore(range)?;
                }
            }
        }
        FaultKind::TornWrite { first, count, crash_byte } => {
            inject_torn_write(plan.seed, first, count, crash_byte, backing, map, &mut log)?;
        }
    }
    Ok(log)
}

/// Runs a scripted seed-random write against a scratch copy of the store,
/// records its physical write stream, and lands only the first
/// `crash_byte` bytes of it on the real store.
fn inject_torn_write(
    seed: u64,
    first: u64,
    count: u64,
    crash_byte: u64,
    backing: &MemBacking,
    map: &AddressMap,
    log: &mut MutationLog,
) -> Result<()> {
    if count == 0 {
        return Err(Error::InvalidPlan("torn_write needs count >= 1".into()));
    }
    let base = backing.snapshot();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let events = match map {
        AddressMap::Meta { layout, group } => {
            let scratch = MemBacking::from_image(base.clone());
            let store = Metastore::open(scratch.clone())?;
            let mut sectors = Vec::new();
            for i in 0..count * *group as u64 {
                let mut data = vec![0u8; layout.sector_size as usize];
                let mut tag = vec![0u8; layout.tag_size as usize];
                rng.fill(&mut data[..]);
                rng.fill(&mut tag[..]);
                sectors.push(SectorWithTag {
                    logical: first * *group as u64 + i,
                    data,
                    tag,
                });
            }
            scratch.start_recording();
            store.write_sectors(&sectors)?;
            scratch.take_log().events
        }
        AddressMap::Raw { sector_size } => {
            let mut data = vec![0u8; (*sector_size as u64 * count) as usize];
            rng.fill(&mut data[..]);
            vec![WriteEvent::Write {
                offset: first * *sector_size as u64,
                data,
            }]
        }
    };

    let total: u64 = events
        .iter()
        .map(|e| match e {
            WriteEvent::Write { data, .. } => data.len() as u64,
            WriteEvent::Barrier => 0,
        })
        .sum();
    let mut remaining = crash_byte.min(total);
    for event in &events {
        let WriteEvent::Write { offset, data } = event else {
            continue;
        };
        if remaining == 0 {
            break;
        }
        let take = (data.len() as u64).min(remaining) as usize;
        log.record(backing, *offset, &data[..take])?;
        remaining -= take as u64;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Detection matrix
// ---------------------------------------------------------------------------

/// The stack configurations the detection matrix compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StackKind {
    /// Metadata store in standalone CRC32 mode; no encryption.
    StandaloneCrc32,
    /// An encrypted device with the given suite (raw storage for suites
    /// without metadata).
    Crypt(CipherSuite),
}

impl StackKind {
    /// The five columns of the detection matrix.
    pub const MATRIX: [StackKind; 5] = [
        StackKind::StandaloneCrc32,
        StackKind::Crypt(CipherSuite::Aes256XtsPlain64),
        StackKind::Crypt(CipherSuite::Aes256XtsHmacSha256Random),
        StackKind::Crypt(CipherSuite::Aes256GcmRandom),
        StackKind::Crypt(CipherSuite::ChaCha20Poly1305Random),
    ];

    pub fn label(&self) -> String {
        match self {
            StackKind::StandaloneCrc32 => "crc32-standalone".to_string(),
            StackKind::Crypt(suite) => suite.name().to_string(),
        }
    }
}

/// The four attack classes of the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultClass {
    /// Random bit rot in stored data.
    SilentCorruption,
    /// Deliberate data change; the attacker fixes any unkeyed checksum.
    Tampering,
    /// Coherent exchange of two sectors.
    Relocation,
    /// Coherent restore of one sector from an earlier snapshot.
    Replay,
}

impl FaultClass {
    pub const ALL: [FaultClass; 4] = [
        FaultClass::SilentCorruption,
        FaultClass::Tampering,
        FaultClass::Relocation,
        FaultClass::Replay,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            FaultClass::SilentCorruption => "silent-corruption",
            FaultClass::Tampering => "tampering",
            FaultClass::Relocation => "relocation",
            FaultClass::Replay => "replay",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Detected,
    Undetected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observed {
    /// The read failed with an integrity error.
    IntegrityViolation,
    /// The read succeeded and returned known valid content (current, stale,
    /// or relocated — the reader cannot tell).
    CleanRead,
    /// The read succeeded but returned bytes matching no known content.
    GarbageRead,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectionVerdict {
    pub expected: Expectation,
    pub observed: Observed,
}

impl DetectionVerdict {
    /// A cell passes when detection happened exactly if expected.
    pub fn matches(&self) -> bool {
        (self.expected == Expectation::Detected)
            == (self.observed == Observed::IntegrityViolation)
    }
}

/// The frozen expected matrix: checksums catch accidents only, pure
/// encryption catches nothing, authenticated suites catch everything except
/// replay.
pub fn expected_detection(kind: StackKind, class: FaultClass) -> Expectation {
    match (kind, class) {
        (StackKind::StandaloneCrc32, FaultClass::SilentCorruption) => Expectation::Detected,
        (StackKind::StandaloneCrc32, _) => Expectation::Undetected,
        (StackKind::Crypt(suite), _) if !suite.authenticated() => Expectation::Undetected,
        (StackKind::Crypt(_), FaultClass::Replay) => Expectation::Undetected,
        (StackKind::Crypt(_), _) => Expectation::Detected,
    }
}

/// A quiesced device populated with two known generations of content,
/// ready for repeated injection/classification rounds.
pub struct MatrixHarness {
    kind: StackKind,
    backing: MemBacking,
    map: AddressMap,
    master_seed: u64,
    sector_count: u64,
    sector_bytes: usize,
    key: Vec<u8>,
    /// Backing image after generation 1 (the replay source).
    gen1_image: Vec<u8>,
    /// Backing image after generation 2 (the pristine current state).
    gen2_image: Vec<u8>,
}

fn generation_plain(master_seed: u64, generation: u64, sector: u64, len: usize) -> Vec<u8> {
    let mut rng = ChaCha20Rng::seed_from_u64(
        master_seed ^ (generation.wrapping_mul(0x9E37_79B9_7F4A_7C15)) ^ sector.rotate_left(17),
    );
    let mut data = vec![0u8; len];
    rng.fill(&mut data[..]);
    data
}

impl MatrixHarness {
    /// Builds a device of `device_bytes`, writes generation 1 everywhere,
    /// snapshots it, then overwrites with generation 2.
    pub fn build(kind: StackKind, device_bytes: u64, master_seed: u64) -> Result<MatrixHarness> {
        let backing = MemBacking::new(device_bytes);
        let suite = match kind {
            StackKind::StandaloneCrc32 => None,
            StackKind::Crypt(suite) => Some(suite),
        };
        let key = suite
            .map(|s| {
                let mut key = vec![0u8; s.master_key_size()];
                ChaCha20Rng::seed_from_u64(master_seed ^ 0x5EED_4B37).fill(&mut key[..]);
                key
            })
            .unwrap_or_default();

        let map;
        match kind {
            StackKind::StandaloneCrc32 => {
                let store =
                    Metastore::format(backing.clone(), &FormatOptions::standalone_crc32(512))?;
                map = AddressMap::Meta {
                    layout: *store.layout(),
                    group: 1,
                };
                store.close()?;
            }
            StackKind::Crypt(suite) if suite.metadata_bytes() == 0 => {
                map = AddressMap::Raw { sector_size: 512 };
            }
            StackKind::Crypt(suite) => {
                let store = Metastore::format(
                    backing.clone(),
                    &FormatOptions::provider(512, suite.metadata_bytes() as u32),
                )?;
                map = AddressMap::Meta {
                    layout: *store.layout(),
                    group: 1,
                };
                store.close()?;
                let dev = Self::open_crypt(&backing, suite, &key, master_seed)?;
                dev.reencrypt_format_pass()?;
                dev.close()?;
            }
        }

        let mut harness = MatrixHarness {
            kind,
            backing,
            map,
            master_seed,
            sector_count: 0,
            sector_bytes: 512,
            key,
            gen1_image: Vec::new(),
            gen2_image: Vec::new(),
        };
        harness.sector_count = harness.probe_sector_count()?;

        harness.write_generation(1)?;
        harness.gen1_image = harness.backing.snapshot();
        harness.write_generation(2)?;
        harness.gen2_image = harness.backing.snapshot();
        Ok(harness)
    }

    fn open_crypt(
        backing: &MemBacking,
        suite: CipherSuite,
        key: &[u8],
        seed: u64,
    ) -> Result<CryptDevice<MemBacking>> {
        let config = DeviceConfig::new(suite, key.to_vec(), 512)
            .with_entropy(Arc::new(SeededEntropy::new(seed ^ 0x1A2B)));
        if suite.metadata_bytes() == 0 {
            CryptDevice::open_raw(backing.clone(), config)
        } else {
            CryptDevice::open(Metastore::open(backing.clone())?, config)
        }
    }

    fn probe_sector_count(&self) -> Result<u64> {
        Ok(match self.kind {
            StackKind::StandaloneCrc32 => Metastore::open(self.backing.clone())?.data_sectors(),
            StackKind::Crypt(suite) => {
                Self::open_crypt(&self.backing, suite, &self.key, self.master_seed)?.sector_count()
            }
        })
    }

    fn write_generation(&self, generation: u64) -> Result<()> {
        let batch = 128u64;
        match self.kind {
            StackKind::StandaloneCrc32 => {
                let store = Metastore::open(self.backing.clone())?;
                let mut sectors = Vec::new();
                for logical in 0..self.sector_count {
                    sectors.push(SectorWithTag {
                        logical,
                        data: generation_plain(
                            self.master_seed,
                            generation,
                            logical,
                            self.sector_bytes,
                        ),
                        tag: Vec::new(),
                    });
                    if sectors.len() as u64 == batch || logical + 1 == self.sector_count {
                        store.write_sectors(&sectors)?;
                        sectors.clear();
                    }
                }
                store.close()
            }
            StackKind::Crypt(suite) => {
                let dev = Self::open_crypt(&self.backing, suite, &self.key, self.master_seed)?;
                let mut sector = 0;
                while sector < self.sector_count {
                    let n = batch.min(self.sector_count - sector);
                    let mut plain = Vec::with_capacity((n as usize) * self.sector_bytes);
                    for s in sector..sector + n {
                        plain.extend(generation_plain(
                            self.master_seed,
                            generation,
                            s,
                            self.sector_bytes,
                        ));
                    }
                    dev.write(sector, &plain)?;
                    sector += n;
                }
                dev.close()
            }
        }
    }

    pub fn sector_count(&self) -> u64 {
        self.sector_count
    }

    pub fn kind(&self) -> StackKind {
        self.kind
    }

    /// Builds the plan list for one matrix cell instance. Tampering against
    /// an unkeyed checksum includes the meta bit flips that fix it; a keyed
    /// tag cannot be fixed without the key, so the tag is left alone.
    pub fn plans_for(&self, class: FaultClass, seed: u64) -> Result<Vec<FaultPlan>> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let sector = rng.gen_range(0..self.sector_count);
        let bits = self.map.sector_bytes() * 8;
        Ok(match class {
            FaultClass::SilentCorruption => vec![FaultPlan {
                kind: FaultKind::BitFlipData {
                    sector,
                    bit: rng.gen_range(0..bits),
                },
                seed,
            }],
            FaultClass::Tampering => {
                let bit = rng.gen_range(0..bits);
                let mut plans = vec![FaultPlan {
                    kind: FaultKind::BitFlipData { sector, bit },
                    seed,
                }];
                if self.unkeyed_checksum() {
                    plans.extend(self.checksum_fix_plans(sector, bit, seed)?);
                }
                plans
            }
            FaultClass::Relocation => {
                let other = loop {
                    let candidate = rng.gen_range(0..self.sector_count);
                    if candidate != sector {
                        break candidate;
                    }
                };
                vec![FaultPlan {
                    kind: FaultKind::SectorSwap {
                        a: sector,
                        b: other,
                        coherent: true,
                    },
                    seed,
                }]
            }
            FaultClass::Replay => vec![FaultPlan {
                kind: FaultKind::SnapshotReplaySector {
                    sector,
                    coherent: true,
                },
                seed,
            }],
        })
    }

    fn unkeyed_checksum(&self) -> bool {
        match self.kind {
            StackKind::StandaloneCrc32 => true,
            StackKind::Crypt(suite) => suite.unkeyed_tag(),
        }
    }

    /// The meta bit flips that re-validate an unkeyed CRC32 after flipping
    /// `bit` of the sector's data — exactly what an attacker who "simply
    /// fixes the checksum" performs.
    fn checksum_fix_plans(&self, sector: u64, bit: u64, seed: u64) -> Result<Vec<FaultPlan>> {
        let data_ranges = self.map.data_ranges(sector)?;
        let mut data = Vec::new();
        for range in &data_ranges {
            let mut part = vec![0u8; (range.end - range.start) as usize];
            self.backing.read_at(range.start, &mut part)?;
            data.extend(part);
        }
        let meta_range = self
            .map
            .meta_range(sector)?
            .ok_or_else(|| Error::InvalidPlan("no checksum to fix".into()))?;
        let tag_size = (meta_range.end - meta_range.start) as u32;
        let old_tag = crc_tag(&data, tag_size);
        data[(bit / 8) as usize] ^= 1 << (bit % 8);
        let new_tag = crc_tag(&data, tag_size);

        let mut plans = Vec::new();
        for (byte, (o, n)) in old_tag.iter().zip(&new_tag).enumerate() {
            let mut diff = o ^ n;
            while diff != 0 {
                let bit_in_byte = diff.trailing_zeros() as u64;
                plans.push(FaultPlan {
                    kind: FaultKind::BitFlipMeta {
                        sector,
                        bit: byte as u64 * 8 + bit_in_byte,
                    },
                    seed,
                });
                diff &= diff - 1;
            }
        }
        Ok(plans)
    }

    /// Sectors a plan touches, for post-injection probing.
    fn affected_sectors(&self, plans: &[FaultPlan]) -> Vec<u64> {
        let mut sectors = Vec::new();
        for plan in plans {
            match plan.kind {
                FaultKind::BitFlipData { sector, .. }
                | FaultKind::BitFlipMeta { sector, .. }
                | FaultKind::SnapshotReplaySector { sector, .. } => sectors.push(sector),
                FaultKind::SectorSwap { a, b, .. } => {
                    sectors.push(a);
                    sectors.push(b);
                }
                FaultKind::SnapshotReplayFull => sectors.extend(0..self.sector_count.min(8)),
                FaultKind::TornWrite { first, count, .. } => sectors.extend(first..first + count),
            }
        }
        sectors.sort_unstable();
        sectors.dedup();
        sectors
    }

    fn read_sector(&self, sector: u64) -> Result<Vec<u8>> {
        match self.kind {
            StackKind::StandaloneCrc32 => {
                let store = Metastore::open(self.backing.clone())?;
                Ok(store.read_sectors(sector, 1)?.remove(0).data)
            }
            StackKind::Crypt(suite) => {
                let dev = Self::open_crypt(&self.backing, suite, &self.key, self.master_seed)?;
                dev.read(sector, 1)
            }
        }
    }

    /// Runs one matrix cell instance: restore the pristine image, inject,
    /// reopen, probe, classify.
    pub fn classify(&self, class: FaultClass, seed: u64) -> Result<DetectionVerdict> {
        self.backing.restore(&self.gen2_image);
        let plans = self.plans_for(class, seed)?;
        for plan in &plans {
            inject(plan, &self.backing, &self.map, Some(&self.gen1_image))?;
        }

        let targets = self.affected_sectors(&plans);
        let mut observed = Observed::CleanRead;
        for &sector in &targets {
            match self.read_sector(sector) {
                Err(e) if e.is_integrity() => {
                    observed = Observed::IntegrityViolation;
                    break;
                }
                Err(e) => return Err(e),
                Ok(data) => {
                    if self.is_known_content(sector, &targets, &data) {
                        continue;
                    }
                    observed = Observed::GarbageRead;
                }
            }
        }
        Ok(DetectionVerdict {
            expected: expected_detection(self.kind, class),
            observed,
        })
    }

    /// Data counts as "clean" when it matches any legitimate generation of
    /// any plausibly involved sector — current, stale, or relocated content
    /// all look equally valid to a reader without external trusted state.
    fn is_known_content(&self, _sector: u64, involved: &[u64], data: &[u8]) -> bool {
        for &candidate in involved {
            for generation in [1, 2] {
                if data
                    == generation_plain(
                        self.master_seed,
                        generation,
                        candidate,
                        self.sector_bytes,
                    )
                {
                    return true;
                }
            }
        }
        false
    }
}
