//! Workload harness: linear and mixed-random I/O against any stack
//! configuration, reporting throughput per configuration.
//!
//! Shapes mirror common storage benchmarking practice: sequential access at
//! a fixed block size, and a 70/30 read/write mix of 8 KiB blocks across
//! random offsets from several parallel jobs. Offsets and payloads derive
//! deterministically from the seed, so two runs of one spec perform
//! identical operation sequences — only the timings differ. Absolute
//! numbers are whatever the host delivers; the meaningful output is the
//! ordering between configurations measured on the same backing.
//!
//! The submission engine is synchronous; `queue_depth` is recorded in the
//! report for comparability but does not create in-flight parallelism
//! beyond `parallel_jobs`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::backing::Backing;
use crate::cryptdev::CryptDevice;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WorkloadKind {
    LinearRead,
    LinearWrite,
    MixedRandom,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorkloadSpec {
    pub kind: WorkloadKind,
    pub block_size: u32,
    /// Fraction of operations that are reads (mixed workloads only).
    pub read_fraction: f64,
    pub parallel_jobs: u32,
    pub queue_depth: u32,
    /// Total bytes to move across all jobs.
    pub byte_budget: u64,
    pub seed: u64,
}

/// Desk-scale default budget standing in for long wall-clock runs.
pub const DEFAULT_BYTE_BUDGET: u64 = 256 << 20;

impl WorkloadSpec {
    pub fn linear_read(byte_budget: u64, seed: u64) -> Self {
        WorkloadSpec {
            kind: WorkloadKind::LinearRead,
            block_size: 4096,
            read_fraction: 1.0,
            parallel_jobs: 1,
            queue_depth: 1,
            byte_budget,
            seed,
        }
    }

    pub fn linear_write(byte_budget: u64, seed: u64) -> Self {
        WorkloadSpec {
            kind: WorkloadKind::LinearWrite,
            read_fraction: 0.0,
            ..WorkloadSpec::linear_read(byte_budget, seed)
        }
    }

    /// 8 KiB blocks, 70 % reads, 16 jobs at depth 16.
    pub fn mixed_random(byte_budget: u64, seed: u64) -> Self {
        WorkloadSpec {
            kind: WorkloadKind::MixedRandom,
            block_size: 8192,
            read_fraction: 0.70,
            parallel_jobs: 16,
            queue_depth: 16,
            byte_budget,
            seed,
        }
    }

    fn validate(&self, sector_size: u32, device_bytes: u64) -> Result<()> {
        if self.block_size == 0 || self.block_size % sector_size != 0 {
            return Err(Error::InvalidArgument(format!(
                "block size {} is not a multiple of the {}-byte sector",
                self.block_size, sector_size
            )));
        }
        if self.parallel_jobs == 0 {
            return Err(Error::InvalidArgument("need at least one job".into()));
        }
        if !(0.0..=1.0).contains(&self.read_fraction) {
            return Err(Error::InvalidArgument("read fraction outside [0, 1]".into()));
        }
        if self.byte_budget < self.block_size as u64 {
            return Err(Error::InvalidArgument("byte budget below one block".into()));
        }
        if device_bytes < self.block_size as u64 {
            return Err(Error::TooSmall {
                needed: self.block_size as u64,
                available: device_bytes,
            });
        }
        Ok(())
    }
}

/// Anything the harness can drive: an encrypted device, or the raw backing
/// adapter as the baseline.
pub trait BlockTarget: Sync {
    fn sector_size(&self) -> u32;
    fn sector_count(&self) -> u64;
    fn read_sectors(&self, first: u64, count: u64) -> Result<Vec<u8>>;
    fn write_sectors(&self, first: u64, data: &[u8]) -> Result<()>;
    fn flush_all(&self) -> Result<()>;
    /// Configuration identity echoed into reports (suite, journal on/off).
    fn config_label(&self) -> String;
}

impl<B: Backing> BlockTarget for CryptDevice<B> {
    fn sector_size(&self) -> u32 {
        self.sector_size()
    }
    fn sector_count(&self) -> u64 {
        self.sector_count()
    }
    fn read_sectors(&self, first: u64, count: u64) -> Result<Vec<u8>> {
        self.read(first, count)
    }
    fn write_sectors(&self, first: u64, data: &[u8]) -> Result<()> {
        self.write(first, data)
    }
    fn flush_all(&self) -> Result<()> {
        self.flush()
    }
    fn config_label(&self) -> String {
        let journal = match self.metastore() {
            Some(store) if store.journal_stats().is_some() => "journal=on",
            Some(_) => "journal=off",
            None => "journal=none",
        };
        format!("suite={} {}", self.suite(), journal)
    }
}

/// The bare backing store as a block target: the no-overhead baseline.
pub struct RawTarget<B: Backing> {
    backing: B,
    sector_size: u32,
}

impl<B: Backing> RawTarget<B> {
    pub fn new(backing: B, sector_size: u32) -> Self {
        RawTarget {
            backing,
            sector_size,
        }
    }
}

impl<B: Backing> BlockTarget for RawTarget<B> {
    fn sector_size(&self) -> u32 {
        self.sector_size
    }
    fn sector_count(&self) -> u64 {
        self.backing.size() / self.sector_size as u64
    }
    fn read_sectors(&self, first: u64, count: u64) -> Result<Vec<u8>> {
        let mut buf = vec![0u8; (count * self.sector_size as u64) as usize];
        self.backing
            .read_at(first * self.sector_size as u64, &mut buf)?;
        Ok(buf)
    }
    fn write_sectors(&self, first: u64, data: &[u8]) -> Result<()> {
        self.backing.write_at(first * self.sector_size as u64, data)
    }
    fn flush_all(&self) -> Result<()> {
        self.backing.flush()
    }
    fn config_label(&self) -> String {
        "raw-backing".to_string()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThroughputReport {
    pub config: String,
    pub spec: WorkloadSpec,
    pub read_bytes: u64,
    pub write_bytes: u64,
    pub read_ops: u64,
    pub write_ops: u64,
    pub duration_secs: f64,
    pub read_mib_s: f64,
    pub write_mib_s: f64,
    /// Set when an I/O error aborted the run early; counts cover the work
    /// that completed.
    pub partial: bool,
    pub error: Option<String>,
}

impl ThroughputReport {
    pub fn tsv_header() -> &'static str {
        "config\tworkload\tblock\tjobs\tread_mib_s\twrite_mib_s\tread_ops\twrite_ops\tseconds\tpartial"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{:?}\t{}\t{}\t{:.1}\t{:.1}\t{}\t{}\t{:.3}\t{}",
            self.config,
            self.spec.kind,
            self.spec.block_size,
            self.spec.parallel_jobs,
            self.read_mib_s,
            self.write_mib_s,
            self.read_ops,
            self.write_ops,
            self.duration_secs,
            self.partial,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct JobTally {
    read_bytes: u64,
    write_bytes: u64,
    read_ops: u64,
    write_ops: u64,
    error: Option<String>,
}

fn run_job(
    target: &dyn BlockTarget,
    spec: &WorkloadSpec,
    job: u32,
    job_budget: u64,
) -> JobTally {
    let mut tally = JobTally::default();
    let spb = (spec.block_size / target.sector_size()) as u64;
    let device_blocks = target.sector_count() / spb;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed.wrapping_add(job as u64 * 0x9E37));

    let mut payload = vec![0u8; spec.block_size as usize];
    rng.fill(&mut payload[..]);

    // Each job owns a contiguous slice of the device for linear access so
    // jobs never serialize on the same offsets.
    let segment_len = (device_blocks / spec.parallel_jobs as u64).max(1);
    let segment_start = segment_len * job as u64 % device_blocks;

    let blocks = job_budget / spec.block_size as u64;
    for i in 0..blocks {
        let (block, is_read) = match spec.kind {
            WorkloadKind::LinearRead => (segment_start + i % segment_len, true),
            WorkloadKind::LinearWrite => (segment_start + i % segment_len, false),
            WorkloadKind::MixedRandom => (
                rng.gen_range(0..device_blocks),
                rng.gen_bool(spec.read_fraction),
            ),
        };
        let first = block * spb;
        let outcome = if is_read {
            target.read_sectors(first, spb).map(|_| ())
        } else {
            // Vary the payload cheaply so consecutive writes are not
            // byte-identical.
            payload[..8].copy_from_slice(&(i ^ job as u64).to_le_bytes());
            target.write_sectors(first, &payload)
        };
        match outcome {
            Ok(()) => {
                if is_read {
                    tally.read_bytes += spec.block_size as u64;
                    tally.read_ops += 1;
                } else {
                    tally.write_bytes += spec.block_size as u64;
                    tally.write_ops += 1;
                }
            }
            Err(e) => {
                tally.error = Some(e.to_string());
                return tally;
            }
        }
    }
    tally
}

/// Runs one workload against one target and reports throughput.
pub fn run_workload(target: &dyn BlockTarget, spec: &WorkloadSpec) -> Result<ThroughputReport> {
    spec.validate(
        target.sector_size(),
        target.sector_count() * target.sector_size() as u64,
    )?;
    let job_budget = (spec.byte_budget / spec.parallel_jobs as u64)
        .max(spec.block_size as u64);

    let start = Instant::now();
    let tallies: Vec<JobTally> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..spec.parallel_jobs)
            .map(|job| scope.spawn(move || run_job(target, spec, job, job_budget)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("job panicked")).collect()
    });
    let flush_result = target.flush_all();
    let duration = start.elapsed().as_secs_f64();

    let mut report = ThroughputReport {
        config: target.config_label(),
        spec: spec.clone(),
        read_bytes: tallies.iter().map(|t| t.read_bytes).sum(),
        write_bytes: tallies.iter().map(|t| t.write_bytes).sum(),
        read_ops: tallies.iter().map(|t| t.read_ops).sum(),
        write_ops: tallies.iter().map(|t| t.write_ops).sum(),
        duration_secs: duration,
        read_mib_s: 0.0,
        write_mib_s: 0.0,
        partial: false,
        error: None,
    };
    report.read_mib_s = report.read_bytes as f64 / (1 << 20) as f64 / duration.max(1e-9);
    report.write_mib_s = report.write_bytes as f64 / (1 << 20) as f64 / duration.max(1e-9);
    if let Some(bad) = tallies.into_iter().find_map(|t| t.error) {
        report.partial = true;
        report.error = Some(bad);
    } else if let Err(e) = flush_result {
        report.partial = true;
        report.error = Some(e.to_string());
    }
    Ok(report)
}
