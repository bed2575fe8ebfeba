//! Fixed-length bit strings.
//!
//! A [`BitString`] of length `n` doubles as a basis-state index for an
//! `n`-qubit register: the index is the big-endian integer reading of the
//! bits, so bit `i` of the string addresses site `i` of the register.

use crate::error::{Error, Result};
use crate::rng::SimRng;
use std::fmt;

/// Maximum supported length; dense registers are far smaller in practice.
pub const MAX_BITS: usize = 63;

/// An `n`-bit string with big-endian index encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: usize,
    value: u64,
}

impl BitString {
    /// The all-zero string of length `len`.
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_BITS, "bit-string length over {MAX_BITS}");
        BitString { len, value: 0 }
    }

    /// Build from a basis index; `index` must fit in `len` bits.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len <= MAX_BITS, "bit-string length over {MAX_BITS}");
        assert!(
            len == 64 || index < (1u64 << len),
            "index {index} does not fit in {len} bits"
        );
        BitString { len, value: index }
    }

    /// Build from explicit bits, bit 0 first.
    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(bits.len() <= MAX_BITS);
        let mut value = 0u64;
        for &b in bits {
            value = (value << 1) | b as u64;
        }
        BitString {
            len: bits.len(),
            value,
        }
    }

    /// Parse from a string of '0'/'1' characters.
    pub fn parse(s: &str) -> Result<Self> {
        if s.len() > MAX_BITS {
            return Err(Error::argument(format!("bit string too long: {}", s.len())));
        }
        let mut value = 0u64;
        for c in s.chars() {
            match c {
                '0' => value <<= 1,
                '1' => value = (value << 1) | 1,
                _ => return Err(Error::argument(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(BitString {
            len: s.len(),
            value,
        })
    }

    /// Uniformly random string of length `len`.
    pub fn random(len: usize, rng: &mut SimRng) -> Self {
        assert!(len <= MAX_BITS);
        if len == 0 {
            return BitString::zeros(0);
        }
        BitString {
            len,
            value: rng.below(1u64 << len),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Big-endian integer reading; also the basis index of `|x⟩`.
    pub fn index(&self) -> u64 {
        self.value
    }

    /// Bit `i`, big-endian (bit 0 is the most significant).
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.value >> (self.len - 1 - i)) & 1 == 1
    }

    /// Copy with bit `i` flipped.
    pub fn with_flipped(&self, i: usize) -> Self {
        assert!(i < self.len);
        BitString {
            len: self.len,
            value: self.value ^ (1u64 << (self.len - 1 - i)),
        }
    }

    /// Inner product `x·y mod 2`. Both strings share the big-endian
    /// encoding, so this is the parity of the AND of the indices.
    pub fn dot(&self, other: &BitString) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::dimension(format!(
                "bit-string lengths {} and {} differ",
                self.len, other.len
            )));
        }
        Ok((self.value & other.value).count_ones() % 2 == 1)
    }

    /// Bitwise XOR.
    pub fn xor(&self, other: &BitString) -> Result<BitString> {
        if self.len != other.len {
            return Err(Error::dimension("xor of different lengths".to_string()));
        }
        Ok(BitString {
            len: self.len,
            value: self.value ^ other.value,
        })
    }

    /// All strings of length `len`, in index order.
    pub fn all(len: usize) -> impl Iterator<Item = BitString> {
        assert!(len < MAX_BITS);
        (0..(1u64 << len)).map(move |v| BitString { len, value: v })
    }

    /// Pack into little-endian bytes (bit 0 of byte 0 is string bit 0).
    pub fn pack(&self) -> Vec<u8> {
        let mut bytes = vec![0u8; self.len.div_ceil(8)];
        for i in 0..self.len {
            if self.bit(i) {
                bytes[i / 8] |= 1 << (i % 8);
            }
        }
        bytes
    }

    /// Inverse of [`BitString::pack`].
    pub fn unpack(bytes: &[u8], len: usize) -> Result<Self> {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::Decode(format!(
                "expected {} packed bytes for {len} bits, got {}",
                len.div_ceil(8),
                bytes.len()
            )));
        }
        let mut out = BitString::zeros(len);
        for i in 0..len {
            if bytes[i / 8] >> (i % 8) & 1 == 1 {
                out = out.with_flipped(i);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.bit(i) as u8)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_endian_reading() {
        let x = BitString::parse("110").unwrap();
        assert_eq!(x.index(), 6);
        assert!(x.bit(0));
        assert!(x.bit(1));
        assert!(!x.bit(2));
    }

    #[test]
    fn dot_is_and_parity() {
        let x = BitString::parse("11").unwrap();
        let y = BitString::parse("11").unwrap();
        // two overlapping ones: parity 0
        assert!(!x.dot(&y).unwrap());
        let z = BitString::parse("10").unwrap();
        assert!(x.dot(&z).unwrap());
    }

    #[test]
    fn dot_rejects_length_mismatch() {
        let x = BitString::parse("11").unwrap();
        let y = BitString::parse("111").unwrap();
        assert!(x.dot(&y).is_err());
    }

    #[test]
    fn pack_unpack_round_trip() {
        let mut rng = SimRng::from_seed(5);
        for len in [1usize, 7, 8, 9, 20] {
            let x = BitString::random(len, &mut rng);
            let packed = x.pack();
            assert_eq!(BitString::unpack(&packed, len).unwrap(), x);
        }
    }

    #[test]
    fn display_round_trip() {
        let x = BitString::parse("01011").unwrap();
        assert_eq!(x.to_string(), "01011");
        assert_eq!(BitString::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn all_enumerates_in_index_order() {
        let v: Vec<u64> = BitString::all(3).map(|b| b.index()).collect();
        assert_eq!(v, (0..8).collect::<Vec<_>>());
    }
}
