//! Runs the workload harness across stack configurations on an in-memory
//! store and prints the throughput table. Absolute numbers are whatever
//! this machine delivers; the point is the relative cost of encryption,
//! authentication, and journaling.
//!
//! ```bash
//! cargo run --release -p aeadfde --example workload_bench
//! ```

use std::sync::Arc;

use aeadfde::backing::MemBacking;
use aeadfde::bench::{run_workload, RawTarget, ThroughputReport, WorkloadSpec};
use aeadfde::cryptdev::{CryptDevice, DeviceConfig};
use aeadfde::crypto::iv::SeededEntropy;
use aeadfde::crypto::CipherSuite;
use aeadfde::metastore::{FormatOptions, Metastore};

const DEVICE_BYTES: u64 = 32 << 20;
const BUDGET: u64 = 64 << 20;

fn open_device(suite: CipherSuite, journal: Option<u64>) -> aeadfde::Result<CryptDevice<MemBacking>> {
    let key = vec![0x42u8; suite.master_key_size()];
    let config = DeviceConfig::new(suite, key, 512)
        .with_entropy(Arc::new(SeededEntropy::new(7)));
    if suite.metadata_bytes() == 0 {
        CryptDevice::open_raw(MemBacking::new(DEVICE_BYTES), config)
    } else {
        let store = Metastore::format(
            MemBacking::new(DEVICE_BYTES),
            &FormatOptions {
                sector_size: 512,
                tag_size: suite.metadata_bytes() as u32,
                journal_sectors: journal,
                standalone: false,
            },
        )?;
        let device = CryptDevice::open(store, config)?;
        device.reencrypt_format_pass()?;
        Ok(device)
    }
}

fn main() -> aeadfde::Result<()> {
    let mut reports: Vec<ThroughputReport> = Vec::new();

    let raw = RawTarget::new(MemBacking::new(DEVICE_BYTES), 512);
    reports.push(run_workload(&raw, &WorkloadSpec::linear_write(BUDGET, 7))?);
    reports.push(run_workload(&raw, &WorkloadSpec::linear_read(BUDGET, 7))?);

    let configs: [(CipherSuite, Option<u64>); 5] = [
        (CipherSuite::Null, None),
        (CipherSuite::Aes256XtsPlain64, None),
        (CipherSuite::Aes256GcmRandom, None),
        (CipherSuite::Aes256XtsHmacSha256Random, None),
        (CipherSuite::Aes256XtsHmacSha256Random, Some(0)),
    ];
    for (suite, journal) in configs {
        let device = open_device(suite, journal)?;
        reports.push(run_workload(&device, &WorkloadSpec::linear_write(BUDGET, 7))?);
        reports.push(run_workload(&device, &WorkloadSpec::linear_read(BUDGET, 7))?);
        reports.push(run_workload(&device, &WorkloadSpec::mixed_random(BUDGET, 7))?);
    }

    println!("{}", ThroughputReport::tsv_header());
    for report in &reports {
        println!("{}", report.tsv_row());
    }
    println!();
    println!(
        "Workloads are deterministic per seed: re-running moves the same {} MiB.",
        BUDGET >> 20
    );
    Ok(())
}
