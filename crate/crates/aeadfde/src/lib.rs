//! Authenticated full-disk encryption over plain files, in userspace.
//!
//! Classic length-preserving disk encryption cannot store an authentication
//! tag: a plaintext sector and its ciphertext are the same size, so there
//! is nowhere to put integrity metadata. This crate builds the missing
//! piece as a stack of three layers over any flat byte store:
//!
//! * [`metastore`] — a virtual block device that emulates per-sector
//!   metadata by interleaving dedicated metadata sectors between groups of
//!   data sectors, with a write-ahead [`journal`] making each data+tag
//!   update atomic across crashes;
//! * [`crypto`] — algorithm-agnostic sector authenticated encryption:
//!   cipher suites, IV generators, and the AEAD sector request whose
//!   additional authenticated data binds the sector number and IV;
//! * [`cryptdev`] — the encrypted device applications read and write,
//!   wiring sector requests to data+metadata I/O.
//!
//! Around the stack sit a fault-injection harness ([`faultsim`]) that
//! reproduces the detection matrix — what each configuration catches and
//! what it knowingly cannot (replay) — and a workload harness
//! ([`bench`](mod@bench)).
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release -p aeadfde --example overhead_table
//! cargo run --release -p aeadfde --example standalone_integrity
//! cargo run --release -p aeadfde --example encrypted_device
//! cargo run --release -p aeadfde --example tamper_detection
//! cargo run --release -p aeadfde --example crash_recovery
//! cargo run --release -p aeadfde --example workload_bench
//! ```
//!
//! The same functionality is scriptable through the `aeadfde` binary
//! (`format`, `info`, `verify`, `scrub-pass`, `read`, `write`, `corrupt`,
//! `bench`).
//!
//! # Quick start
//!
//! ```
//! use aeadfde::backing::MemBacking;
//! use aeadfde::cryptdev::{CryptDevice, DeviceConfig};
//! use aeadfde::crypto::CipherSuite;
//! use aeadfde::metastore::{FormatOptions, Metastore};
//!
//! let suite = CipherSuite::Aes256XtsHmacSha256Random;
//! let backing = MemBacking::new(1 << 20);
//! let store = Metastore::format(
//!     backing,
//!     &FormatOptions::provider(512, suite.metadata_bytes() as u32),
//! ).unwrap();
//!
//! let key = vec![0x42; suite.master_key_size()];
//! let dev = CryptDevice::open(store, DeviceConfig::new(suite, key, 512)).unwrap();
//! dev.reencrypt_format_pass().unwrap();
//!
//! dev.write(7, &vec![0xAB; 512]).unwrap();
//! assert_eq!(dev.read(7, 1).unwrap(), vec![0xAB; 512]);
//! ```

pub mod backing;
pub mod bench;
pub mod cli;
pub mod cryptdev;
pub mod crypto;
pub mod error;
pub mod faultsim;
pub mod journal;
pub mod layout;
pub mod metastore;
pub mod superblock;

pub use error::{Error, Result};
