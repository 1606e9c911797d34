//! Error-propagation contracts for length-preserving block modes.
//!
//! Flipping one ciphertext bit never decrypts back to a one-bit plaintext
//! error; the mode determines how far the damage spreads. These predictions
//! are what the fault tests check real decryptions against:
//!
//! * **XTS** processes 16-byte blocks independently, so the damage is
//!   confined to the containing block (fully randomized).
//! * **CBC** chains blocks: the containing block is randomized and the
//!   *same bit position* of the following block flips, because that block's
//!   plaintext is XORed with the previous ciphertext block.

use std::ops::Range;

use crate::error::{Error, Result};

pub const CIPHER_BLOCK: usize = 16;
const BLOCK_BITS: usize = CIPHER_BLOCK * 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockMode {
    Xts,
    /// Present as a decryption oracle for propagation contracts only; CBC
    /// is not an offered suite.
    Cbc,
}

/// Predicted plaintext damage from one flipped ciphertext bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationProfile {
    /// Byte range decrypting to unrelated pseudo-random content.
    pub randomized: Range<usize>,
    /// Absolute plaintext bit index flipped exactly, for chaining modes.
    pub mirrored_bit: Option<usize>,
}

impl PropagationProfile {
    /// True if `byte` may legitimately differ from the original plaintext.
    pub fn may_differ(&self, byte: usize) -> bool {
        self.randomized.contains(&byte)
            || self.mirrored_bit.is_some_and(|bit| bit / 8 == byte)
    }

    /// Exact byte-level difference mask the profile allows at `byte`:
    /// `None` means any value, `Some(mask)` means exactly those bits flip.
    pub fn allowed_flip_mask(&self, byte: usize) -> Option<u8> {
        if self.randomized.contains(&byte) {
            return None;
        }
        match self.mirrored_bit {
            Some(bit) if bit / 8 == byte => Some(1 << (bit % 8)),
            _ => Some(0),
        }
    }
}

/// Predicts plaintext corruption for a single ciphertext bit flip at
/// `flip_bit` (absolute bit index, LSB-first within each byte) in a payload
/// of `payload_len` bytes.
pub fn propagation_profile(
    mode: BlockMode,
    payload_len: usize,
    flip_bit: usize,
) -> Result<PropagationProfile> {
    if payload_len == 0 || payload_len % CIPHER_BLOCK != 0 {
        return Err(Error::InvalidArgument(format!(
            "payload of {payload_len} bytes is not a whole number of cipher blocks"
        )));
    }
    if flip_bit >= payload_len * 8 {
        return Err(Error::InvalidArgument(format!(
            "bit {flip_bit} outside payload of {payload_len} bytes"
        )));
    }
    let block = flip_bit / BLOCK_BITS;
    let randomized = block * CIPHER_BLOCK..(block + 1) * CIPHER_BLOCK;
    let mirrored_bit = match mode {
        BlockMode::Xts => None,
        BlockMode::Cbc => {
            let next_block_bit = flip_bit + BLOCK_BITS;
            (next_block_bit < payload_len * 8).then_some(next_block_bit)
        }
    };
    Ok(PropagationProfile {
        randomized,
        mirrored_bit,
    })
}
