//! Operator frontend over backing files.
//!
//! Every subcommand is a thin adapter over the library API; anything the
//! CLI does is reachable programmatically. Exit codes: 0 success, 1 usage
//! or I/O problems, 2 integrity violation — the userspace analog of a
//! distinct kernel error code for failed authentication.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::backing::{Backing, FileBacking, MemBacking};
use crate::bench::{run_workload, ThroughputReport, WorkloadSpec, DEFAULT_BYTE_BUDGET};
use crate::cryptdev::{CryptDevice, DeviceConfig};
use crate::crypto::iv::SystemEntropy;
use crate::crypto::CipherSuite;
use crate::error::{Error, Result};
use crate::faultsim::{inject, parse_plan_file, AddressMap};
use crate::layout::overhead_percent;
use crate::metastore::{FormatOptions, Metastore};
use crate::superblock::Superblock;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INTEGRITY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "aeadfde", version, about = "Authenticated disk encryption over plain files")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct KeyArgs {
    /// Cipher suite name (see `format --help` for the list).
    #[arg(long)]
    pub suite: Option<String>,
    /// Raw binary master key of exactly the suite's key size.
    #[arg(long)]
    pub key_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Format a backing file as an integrity device.
    Format {
        image: PathBuf,
        /// Cipher suite the device will run; decides the metadata size.
        #[arg(long, conflicts_with = "standalone")]
        suite: Option<String>,
        /// Standalone mode: the store checksums data itself (CRC32).
        #[arg(long)]
        standalone: bool,
        /// Per-sector tag bytes (standalone mode only; default 4).
        #[arg(long)]
        tag_size: Option<u32>,
        #[arg(long, default_value_t = 512)]
        sector_size: u32,
        /// Journal size in sectors (default: sized from capacity).
        #[arg(long, conflicts_with = "no_journal")]
        journal_sectors: Option<u64>,
        /// Disable the data journal (an upper layer must provide its own
        /// crash protection).
        #[arg(long)]
        no_journal: bool,
        /// Create the image file with this size in bytes first.
        #[arg(long)]
        size: Option<u64>,
    },
    /// Print the superblock and derived geometry.
    Info {
        image: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// Scrub the device and list sectors failing their integrity check.
    Verify {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long)]
        machine: bool,
    },
    /// Initial re-encryption pass: make a freshly formatted encrypted
    /// device readable by writing every sector once.
    ScrubPass {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Decrypt and print sectors.
    Read {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, default_value_t = 0)]
        first: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Write raw bytes here instead of hex to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encrypt and write sectors from a file.
    Write {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, default_value_t = 0)]
        first: u64,
        /// Plaintext input; length must be a whole number of sectors.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Apply a fault plan corpus to the image.
    Corrupt {
        image: PathBuf,
        /// Line-oriented plan file (kind, coordinates, seed).
        #[arg(long)]
        plan: PathBuf,
        /// Earlier image copy; required by replay plans.
        #[arg(long)]
        snapshot: Option<PathBuf>,
        /// Sector size for raw images without a superblock.
        #[arg(long, default_value_t = 512)]
        sector_size: u32,
    },
    /// Run the workload suite and print a throughput table.
    Bench {
        image: PathBuf,
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long, default_value_t = DEFAULT_BYTE_BUDGET)]
        budget_bytes: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        machine: bool,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text.
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let mut stdout = std::io::stdout();
    match dispatch(cli.command, &mut stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_integrity() {
                EXIT_INTEGRITY
            } else {
                EXIT_ERROR
            }
        }
    }
}

fn read_key(path: &Option<PathBuf>) -> Result<Vec<u8>> {
    match path {
        Some(path) => Ok(std::fs::read(path)?),
        None => Err(Error::Usage(
            "this suite needs --key-file with the raw master key".into(),
        )),
    }
}

fn parse_suite(name: &Option<String>) -> Result<CipherSuite> {
    let name = name
        .as_deref()
        .ok_or_else(|| Error::Usage("--suite is required here".into()))?;
    CipherSuite::from_name(name)
}

enum AnyDevice {
    Standalone(Metastore<FileBacking>),
    Crypt(CryptDevice<FileBacking>),
}

/// Opens whatever stack the image and arguments describe: a standalone
/// store needs no suite; an encrypted stack needs suite and key; raw suites
/// run straight over the file.
fn open_device(image: &Path, key: &KeyArgs) -> Result<AnyDevice> {
    let backing = FileBacking::open(image)?;
    let has_superblock = {
        let mut first = vec![0u8; 512.min(backing.size() as usize)];
        backing.read_at(0, &mut first)?;
        Superblock::decode(&first).is_ok()
    };
    if !has_superblock {
        let suite = parse_suite(&key.suite)?;
        let master = if suite.master_key_size() > 0 {
            read_key(&key.key_file)?
        } else {
            Vec::new()
        };
        let config = DeviceConfig::new(suite, master, 512).with_entropy(Arc::new(SystemEntropy));
        return Ok(AnyDevice::Crypt(CryptDevice::open_raw(backing, config)?));
    }

    let store = Metastore::open(backing)?;
    if store.standalone() {
        if key.suite.is_some() {
            return Err(Error::Usage(
                "image runs standalone integrity; --suite does not apply".into(),
            ));
        }
        return Ok(AnyDevice::Standalone(store));
    }
    let suite = parse_suite(&key.suite)?;
    let master = if suite.master_key_size() > 0 {
        read_key(&key.key_file)?
    } else {
        Vec::new()
    };
    let config = DeviceConfig::new(suite, master, store.sector_size());
    Ok(AnyDevice::Crypt(CryptDevice::open(store, config)?))
}

pub fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Format {
            image,
            suite,
            standalone,
            tag_size,
            sector_size,
            journal_sectors,
            no_journal,
            size,
        } => {
            let backing = match size {
                Some(bytes) => FileBacking::create(&image, bytes)?,
                None => FileBacking::open(&image)?,
            };
            let journal = if no_journal { Some(0) } else { journal_sectors };
            let opts = if standalone {
                FormatOptions {
                    sector_size,
                    tag_size: tag_size.unwrap_or(4),
                    journal_sectors: journal,
                    standalone: true,
                }
            } else {
                let suite = parse_suite(&suite)?;
                if tag_size.is_some() {
                    return Err(Error::Usage(
                        "--tag-size applies to standalone mode; suites fix their own".into(),
                    ));
                }
                if suite.metadata_bytes() == 0 {
                    return Err(Error::Usage(format!(
                        "suite {suite} stores no per-sector metadata; use the plain file directly"
                    )));
                }
                FormatOptions::provider(sector_size, suite.metadata_bytes() as u32)
            };
            let store = Metastore::format(backing, &opts)?;
            writeln!(
                out,
                "formatted: {} sectors of {} bytes, tag {} bytes, journal {} sectors",
                store.data_sectors(),
                store.sector_size(),
                store.tag_size(),
                store.superblock().journal_sectors,
            )?;
            store.close()
        }

        Command::Info { image, machine } => {
            let backing = FileBacking::open_readonly(&image)?;
            let mut first = vec![0u8; 512.min(backing.size() as usize)];
            backing.read_at(0, &mut first)?;
            let mut sb = Superblock::decode(&first)?;
            if sb.sector_size as usize > first.len() {
                let mut full = vec![0u8; sb.sector_size as usize];
                backing.read_at(0, &mut full)?;
                sb = Superblock::decode(&full)?;
            }
            let layout = sb.layout()?;
            let overhead = overhead_percent(layout.data_sectors, layout.meta_sectors)?;
            if machine {
                let doc = serde_json::json!({
                    "version": sb.version,
                    "sector_size": sb.sector_size,
                    "tag_size": sb.tag_size,
                    "total_sectors": sb.total_sectors,
                    "data_sectors": sb.data_sectors,
                    "meta_sectors": layout.meta_sectors,
                    "journal_sectors": sb.journal_sectors,
                    "journal_enabled": sb.journal_enabled(),
                    "standalone_crc": sb.standalone_crc(),
                    "formatted": sb.formatted(),
                    "overhead_percent": overhead,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "version:         {}", sb.version)?;
                writeln!(out, "sector_size:     {}", sb.sector_size)?;
                writeln!(out, "tag_size:        {}", sb.tag_size)?;
                writeln!(out, "total_sectors:   {}", sb.total_sectors)?;
                writeln!(out, "data_sectors:    {}", sb.data_sectors)?;
                writeln!(out, "meta_sectors:    {}", layout.meta_sectors)?;
                writeln!(out, "journal_sectors: {}", sb.journal_sectors)?;
                writeln!(out, "journal:         {}", if sb.journal_enabled() { "on" } else { "off" })?;
                writeln!(out, "standalone_crc:  {}", sb.standalone_crc())?;
                writeln!(out, "formatted:       {}", sb.formatted())?;
                writeln!(out, "overhead:        {overhead:.2} %")?;
            }
            Ok(())
        }

        Command::Verify { image, key, machine } => {
            let failing = match open_device(&image, &key)? {
                AnyDevice::Standalone(store) => store.verify_all(None)?,
                AnyDevice::Crypt(dev) => dev.verify_all()?,
            };
            if machine {
                writeln!(out, "{}", serde_json::json!({ "failing_sectors": failing }))?;
            } else if failing.is_empty() {
                writeln!(out, "all sectors verify")?;
            } else {
                writeln!(out, "{} sectors fail verification:", failing.len())?;
                for sector in &failing {
                    writeln!(out, "  sector {sector}")?;
                }
            }
            match failing.first() {
                Some(&sector) => Err(Error::IntegrityViolation { sector }),
                None => Ok(()),
            }
        }

        Command::ScrubPass { image, key } => {
            let dev = match open_device(&image, &key)? {
                AnyDevice::Crypt(dev) => dev,
                AnyDevice::Standalone(_) => {
                    return Err(Error::Usage(
                        "standalone devices are initialized at format time".into(),
                    ))
                }
            };
            let sectors = dev.reencrypt_format_pass()?;
            writeln!(out, "initialized {sectors} sectors")?;
            dev.close()
        }

        Command::Read { image, key, first, count, out: out_path } => {
            let data = match open_device(&image, &key)? {
                AnyDevice::Standalone(store) => {
                    let sectors = store.read_sectors(first, count)?;
                    sectors.into_iter().flat_map(|s| s.data).collect::<Vec<u8>>()
                }
                AnyDevice::Crypt(dev) => dev.read(first, count)?,
            };
            match out_path {
                Some(path) => std::fs::write(path, &data)?,
                None => {
                    for chunk in data.chunks(32) {
                        writeln!(out, "{}", hex_line(chunk))?;
                    }
                }
            }
            Ok(())
        }

        Command::Write { image, key, first, input } => {
            let plaintext = std::fs::read(&input)?;
            match open_device(&image, &key)? {
                AnyDevice::Standalone(store) => {
                    let ss = store.sector_size() as usize;
                    if plaintext.is_empty() || plaintext.len() % ss != 0 {
                        return Err(Error::Usage(format!(
                            "input must be a whole number of {ss}-byte sectors"
                        )));
                    }
                    let sectors = plaintext
                        .chunks(ss)
                        .enumerate()
                        .map(|(i, chunk)| crate::metastore::SectorWithTag {
                            logical: first + i as u64,
                            data: chunk.to_vec(),
                            tag: Vec::new(),
                        })
                        .collect::<Vec<_>>();
                    store.write_sectors(&sectors)?;
                    let written = sectors.len();
                    store.close()?;
                    writeln!(out, "wrote {written} sectors")?;
                }
                AnyDevice::Crypt(dev) => {
                    dev.write(first, &plaintext)?;
                    let written = plaintext.len() as u64 / dev.sector_size() as u64;
                    dev.close()?;
                    writeln!(out, "wrote {written} sectors")?;
                }
            }
            Ok(())
        }

        Command::Corrupt { image, plan, snapshot, sector_size } => {
            let plans = parse_plan_file(&std::fs::read_to_string(&plan)?)?;
            let image_bytes = std::fs::read(&image)?;
            let snapshot_bytes = match &snapshot {
                Some(path) => Some(std::fs::read(path)?),
                None => None,
            };
            let backing = MemBacking::from_image(image_bytes);
            let map = match Superblock::decode(&backing.snapshot()[..512]) {
                Ok(sb) => AddressMap::Meta {
                    layout: sb.layout()?,
                    group: 1,
                },
                Err(_) => AddressMap::Raw { sector_size },
            };
            let mut total = 0u64;
            for plan in &plans {
                let log = inject(plan, &backing, &map, snapshot_bytes.as_deref())?;
                total += log.changed_bytes();
            }
            std::fs::write(&image, backing.snapshot())?;
            writeln!(out, "applied {} plans, {} bytes changed", plans.len(), total)?;
            Ok(())
        }

        Command::Bench { image, key, budget_bytes, seed, machine } => {
            let dev = match open_device(&image, &key)? {
                AnyDevice::Crypt(dev) => dev,
                AnyDevice::Standalone(_) => {
                    return Err(Error::Usage(
                        "bench drives encrypted stacks; raw or suite devices only".into(),
                    ))
                }
            };
            if let Some(store) = dev.metastore() {
                if !store.formatted() {
                    writeln!(out, "# device uninitialized; running re-encryption pass first")?;
                    dev.reencrypt_format_pass()?;
                }
            }
            let specs = [
                WorkloadSpec::linear_write(budget_bytes, seed),
                WorkloadSpec::linear_read(budget_bytes, seed),
                WorkloadSpec::mixed_random(budget_bytes, seed),
            ];
            let mut reports = Vec::new();
            for spec in &specs {
                reports.push(run_workload(&dev, spec)?);
            }
            if machine {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
            } else {
                writeln!(out, "{}", ThroughputReport::tsv_header())?;
                for report in &reports {
                    writeln!(out, "{}", report.tsv_row())?;
                }
            }
            Ok(())
        }
    }
}

fn hex_line(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
