//! Flat byte-addressable backing stores.
//!
//! Everything persistent in this crate goes through the [`Backing`] trait: a
//! fixed-size random-access byte store with an explicit durability barrier.
//! Two implementations are provided: a plain file and an in-memory buffer.
//! The in-memory store can additionally record every write it sees, which is
//! what the crash-injection harnesses replay to build torn images.

use std::fs::{File, OpenOptions};
use std::io;
use std::path::Path;
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};

use crate::error::{Error, Result};

/// Fixed-size random-access byte store with explicit durability barriers.
///
/// `flush` is the "make everything written so far durable" point; writes
/// issued after a completed flush may land on media in any order and may be
/// torn at any byte on a crash.
pub trait Backing: Send + Sync {
    /// Total size in bytes. Fixed for the lifetime of the store.
    fn size(&self) -> u64;

    fn read_at(&self, offset: u64, buf: &mut [u8]) -> Result<()>;

    fn write_at(&self, offset: u64, data: &[u8]) -> Result<()>;

    /// Durability barrier: returns once all previous writes are persistent.
    fn flush(&self) -> Result<()>;
}

fn check_range(size: u64, offset: u64, len: usize) -> Result<()> {
    let end = offset.checked_add(len as u64);
    match end {
        Some(end) if end <= size => Ok(()),
        _ => Err(Error::Io(io::Error::new(
            io::ErrorKind::UnexpectedEof,
            format!("access [{offset}, +{len}) beyond store of {size} bytes"),
        ))),
    }
}

/// File-backed store using positional I/O; safe for concurrent readers.
pub struct FileBacking {
    file: File,
    size: u64,
}

impl FileBacking {
    /// Opens an existing file read-write.
    pub fn open(path: &Path) -> Result<Self> {
        let file = OpenOptions::new().read(true).write(true).open(path)?;
        let size = file.metadata()?.len();
        Ok(FileBacking { file, size })
    }

    /// Opens read-only, for inspection commands that must not mutate.
    pub fn open_readonly(path: &Path) -> Result<Self> {
        let file = OpenOptions::new().read(true).open(path)?;
        let size = file.metadata()?.len();
        Ok(FileBacking { file, size })
    }

    /// Creates (or truncates) a file of exactly `size` bytes.
    pub fn create(path: &Path, size: u64) -> Result<Self> {
        let file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(true)
            .open(path)?;
        file.set_len(size)?;
        Ok(FileBacking { file, size })
    }
}

impl Backing for FileBacking {
    fn size(&self) -> u64 {
        self.size
    }

    fn read_at(&self, offset: u64, buf: &mut [u8]) -> Result<()> {
        check_range(self.size, offset, buf.len())?;
        #[cfg(unix)]
        {
            use std::os::unix::fs::FileExt;
            self.file.read_exact_at(buf, offset)?;
        }
        #[cfg(not(unix))]
        compile_error!("FileBacking requires positional I/O (unix)");
        Ok(())
    }

    fn write_at(&self, offset: u64, data: &[u8]) -> Result<()> {
        check_range(self.size, offset, data.len())?;
        #[cfg(unix)]
        {
            use std::os::unix::fs::FileExt;
            self.file.write_all_at(data, offset)?;
        }
        Ok(())
    }

    fn flush(&self) -> Result<()> {
        self.file.sync_data()?;
        Ok(())
    }
}

/// One recorded backing-store event, in issue order.
#[derive(Debug, Clone)]
pub enum WriteEvent {
    Write { offset: u64, data: Vec<u8> },
    /// A completed durability barrier.
    Barrier,
}

/// Ordered log of writes and barriers captured from a [`MemBacking`].
///
/// The log supports two crash models:
///
/// * **byte prefix** — writes land on media in issue order and the crash
///   tears the stream at an arbitrary byte ([`apply_prefix`]);
/// * **epoch reorder** — only a completed barrier orders writes; within the
///   crash epoch each write independently lands fully, partially, or not at
///   all ([`apply_epoch`]).
///
/// [`apply_prefix`]: WriteLog::apply_prefix
/// [`apply_epoch`]: WriteLog::apply_epoch
#[derive(Debug, Clone, Default)]
pub struct WriteLog {
    pub events: Vec<WriteEvent>,
}

impl WriteLog {
    /// Total number of data bytes in the log; prefix crash points range over
    /// `0..=byte_len()`.
    pub fn byte_len(&self) -> u64 {
        self.events
            .iter()
            .map(|e| match e {
                WriteEvent::Write { data, .. } => data.len() as u64,
                WriteEvent::Barrier => 0,
            })
            .sum()
    }

    /// Number of barrier-delimited epochs (always ≥ 1).
    pub fn epochs(&self) -> usize {
        1 + self
            .events
            .iter()
            .filter(|e| matches!(e, WriteEvent::Barrier))
            .count()
    }

    /// Applies the first `crash_byte` data bytes of the log onto `image`,
    /// tearing the unlucky write mid-way.
    pub fn apply_prefix(&self, image: &mut [u8], crash_byte: u64) {
        let mut remaining = crash_byte;
        for event in &self.events {
            let WriteEvent::Write { offset, data } = event else {
                continue;
            };
            if remaining == 0 {
                return;
            }
            let take = (data.len() as u64).min(remaining) as usize;
            image[*offset as usize..*offset as usize + take].copy_from_slice(&data[..take]);
            remaining -= take as u64;
        }
    }

    /// Applies all epochs before `crash_epoch` fully, then each write of the
    /// crash epoch with an independently random byte coverage (possibly
    /// zero, possibly full, possibly an arbitrary byte subset), and nothing
    /// afterwards.
    pub fn apply_epoch(&self, image: &mut [u8], crash_epoch: usize, rng: &mut impl rand::Rng) {
        let mut epoch = 0usize;
        for event in &self.events {
            match event {
                WriteEvent::Barrier => {
                    epoch += 1;
                    if epoch > crash_epoch {
                        return;
                    }
                }
                WriteEvent::Write { offset, data } => {
                    if epoch < crash_epoch {
                        image[*offset as usize..*offset as usize + data.len()]
                            .copy_from_slice(data);
                    } else if epoch == crash_epoch {
                        for (i, byte) in data.iter().enumerate() {
                            if rng.gen_bool(0.5) {
                                image[*offset as usize + i] = *byte;
                            }
                        }
                    }
                }
            }
        }
    }
}

#[derive(Default)]
struct Recorder {
    log: Option<WriteLog>,
}

/// In-memory backing store. Cloning shares the underlying buffer, which lets
/// a harness keep a handle for out-of-band inspection and mutation while a
/// device owns another.
#[derive(Clone)]
pub struct MemBacking {
    buf: Arc<RwLock<Vec<u8>>>,
    recorder: Arc<Mutex<Recorder>>,
}

impl MemBacking {
    /// Zero-filled store of `size` bytes.
    pub fn new(size: u64) -> Self {
        MemBacking {
            buf: Arc::new(RwLock::new(vec![0u8; size as usize])),
            recorder: Arc::new(Mutex::new(Recorder::default())),
        }
    }

    pub fn from_image(image: Vec<u8>) -> Self {
        MemBacking {
            buf: Arc::new(RwLock::new(image)),
            recorder: Arc::new(Mutex::new(Recorder::default())),
        }
    }

    /// Full copy of the current contents.
    pub fn snapshot(&self) -> Vec<u8> {
        self.buf.read().clone()
    }

    /// Overwrites the whole store from an image of identical size.
    pub fn restore(&self, image: &[u8]) {
        let mut buf = self.buf.write();
        assert_eq!(buf.len(), image.len(), "restore image size mismatch");
        buf.copy_from_slice(image);
    }

    /// Starts capturing writes and barriers into a fresh log.
    pub fn start_recording(&self) {
        self.recorder.lock().log = Some(WriteLog::default());
    }

    /// Stops recording and returns the captured log.
    pub fn take_log(&self) -> WriteLog {
        self.recorder.lock().log.take().unwrap_or_default()
    }

    /// Direct byte mutation, bypassing any device on top. This is the fault
    /// injector's entry point.
    pub fn mutate(&self, offset: u64, bytes: &[u8]) {
        let mut buf = self.buf.write();
        buf[offset as usize..offset as usize + bytes.len()].copy_from_slice(bytes);
    }
}

impl Backing for MemBacking {
    fn size(&self) -> u64 {
        self.buf.read().len() as u64
    }

    fn read_at(&self, offset: u64, buf: &mut [u8]) -> Result<()> {
        let store = self.buf.read();
        check_range(store.len() as u64, offset, buf.len())?;
        buf.copy_from_slice(&store[offset as usize..offset as usize + buf.len()]);
        Ok(())
    }

    fn write_at(&self, offset: u64, data: &[u8]) -> Result<()> {
        let mut store = self.buf.write();
        check_range(store.len() as u64, offset, data.len())?;
        store[offset as usize..offset as usize + data.len()].copy_from_slice(data);
        if let Some(log) = self.recorder.lock().log.as_mut() {
            log.events.push(WriteEvent::Write {
                offset,
                data: data.to_vec(),
            });
        }
        Ok(())
    }

    fn flush(&self) -> Result<()> {
        if let Some(log) = self.recorder.lock().log.as_mut() {
            log.events.push(WriteEvent::Barrier);
        }
        Ok(())
    }
}

impl<B: Backing + ?Sized> Backing for Arc<B> {
    fn size(&self) -> u64 {
        (**self).size()
    }
    fn read_at(&self, offset: u64, buf: &mut [u8]) -> Result<()> {
        (**self).read_at(offset, buf)
    }
    fn write_at(&self, offset: u64, data: &[u8]) -> Result<()> {
        (**self).write_at(offset, data)
    }
    fn flush(&self) -> Result<()> {
        (**self).flush()
    }
}
