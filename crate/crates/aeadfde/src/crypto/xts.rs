//! XTS-AES-256 for whole sectors.
//!
//! One data unit is one encryption sector. The 16-byte tweak input (a
//! plain64 sector number or a stored random IV) is encrypted under the
//! second key half, then advanced per 16-byte block by multiplication by x
//! in GF(2^128) with the low-bit-first convention of the storage standard.

use aes::cipher::generic_array::GenericArray;
use aes::cipher::{BlockDecrypt, BlockEncrypt, KeyInit};
use aes::Aes256;

use crate::error::{Error, Result};

pub const AES_BLOCK: usize = 16;

/// Combined XTS key: 32 data-key bytes then 32 tweak-key bytes.
pub const XTS_KEY_LEN: usize = 64;

const GF_FEEDBACK: u8 = 0x87;

pub struct Xts {
    data: Aes256,
    tweak: Aes256,
}

fn xor_into(block: &mut [u8], mask: &[u8; AES_BLOCK]) {
    for (b, m) in block.iter_mut().zip(mask) {
        *b ^= m;
    }
}

/// Multiply the running tweak by x in GF(2^128), little-endian bit order.
fn gf_mul_x(tweak: &mut [u8; AES_BLOCK]) {
    let mut carry = 0u8;
    for byte in tweak.iter_mut() {
        let next = *byte >> 7;
        *byte = (*byte << 1) | carry;
        carry = next;
    }
    if carry != 0 {
        tweak[0] ^= GF_FEEDBACK;
    }
}

impl Xts {
    pub fn new(key: &[u8]) -> Result<Xts> {
        if key.len() != XTS_KEY_LEN {
            return Err(Error::WrongKeyLength {
                expected: XTS_KEY_LEN,
                actual: key.len(),
            });
        }
        Ok(Xts {
            data: Aes256::new_from_slice(&key[..32]).expect("key half is 32 bytes"),
            tweak: Aes256::new_from_slice(&key[32..]).expect("key half is 32 bytes"),
        })
    }

    fn initial_tweak(&self, iv: &[u8; AES_BLOCK]) -> [u8; AES_BLOCK] {
        let mut t = GenericArray::clone_from_slice(iv);
        self.tweak.encrypt_block(&mut t);
        t.into()
    }

    fn check_len(buf: &[u8]) -> Result<()> {
        if buf.is_empty() || buf.len() % AES_BLOCK != 0 {
            return Err(Error::InvalidArgument(format!(
                "XTS payload must be a non-empty multiple of {AES_BLOCK} bytes, got {}",
                buf.len()
            )));
        }
        Ok(())
    }

    pub fn encrypt(&self, iv: &[u8; AES_BLOCK], buf: &mut [u8]) -> Result<()> {
        Self::check_len(buf)?;
        let mut tweak = self.initial_tweak(iv);
        for block in buf.chunks_mut(AES_BLOCK) {
            xor_into(block, &tweak);
            self.data
                .encrypt_block(GenericArray::from_mut_slice(block));
            xor_into(block, &tweak);
            gf_mul_x(&mut tweak);
        }
        Ok(())
    }

    pub fn decrypt(&self, iv: &[u8; AES_BLOCK], buf: &mut [u8]) -> Result<()> {
        Self::check_len(buf)?;
        let mut tweak = self.initial_tweak(iv);
        for block in buf.chunks_mut(AES_BLOCK) {
            xor_into(block, &tweak);
            self.data
                .decrypt_block(GenericArray::from_mut_slice(block));
            xor_into(block, &tweak);
            gf_mul_x(&mut tweak);
        }
        Ok(())
    }
}
