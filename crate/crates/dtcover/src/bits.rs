//! Fixed-length bitstrings used as function inputs.
//!
//! Coordinates are 0-based throughout the crate. When a bitstring is
//! rendered or parsed as text, coordinate 0 is the leftmost character,
//! so `"1100"` has coordinates 0 and 1 set.

use std::fmt;

use crate::error::Error;

/// An immutable-by-convention bitstring of fixed length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BitString(Vec<bool>);

impl BitString {
    /// All-zero string of the given length.
    pub fn zeros(len: usize) -> Self {
        BitString(vec![false; len])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    /// Parses a `0`/`1` string; `|` separators (block notation) are ignored.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '|' => {}
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            }
        }
        Ok(BitString(bits))
    }

    /// Interprets the low `len` bits of `index` as a bitstring with
    /// coordinate 0 as the lowest-order bit.
    pub fn from_index(index: u64, len: usize) -> Self {
        BitString((0..len).map(|i| (index >> i) & 1 == 1).collect())
    }

    /// Inverse of [`BitString::from_index`]; requires `len <= 63`.
    pub fn to_index(&self) -> u64 {
        assert!(self.0.len() <= 63, "bitstring too long for an index");
        self.0
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, coord: usize) -> bool {
        self.0[coord]
    }

    pub fn set(&mut self, coord: usize, value: bool) {
        self.0[coord] = value;
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Coordinates that are set to 1, ascending.
    pub fn ones(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i]).collect()
    }

    /// The string with coordinate `coord` flipped.
    pub fn flip(&self, coord: usize) -> Self {
        let mut out = self.clone();
        out.0[coord] = !out.0[coord];
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// Renders with `|` between blocks of `block_len` coordinates,
    /// e.g. `1100|1100|1100`.
    pub fn to_block_string(&self, block_len: usize) -> String {
        let mut out = String::with_capacity(self.0.len() + self.0.len() / block_len.max(1));
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 && block_len > 0 && i % block_len == 0 {
                out.push('|');
            }
            out.push(if *b { '1' } else { '0' });
        }
        out
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            f.write_str(if *b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl TryFrom<String> for BitString {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        BitString::parse(&s)
    }
}

impl From<BitString> for String {
    fn from(b: BitString) -> String {
        b.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let b = BitString::parse("1100|1100").unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.to_string(), "11001100");
        assert_eq!(b.to_block_string(4), "1100|1100");
        assert_eq!(b.weight(), 4);
    }

    #[test]
    fn index_roundtrip_uses_low_order_coordinate_zero() {
        // index 1 sets coordinate 0, which prints leftmost
        let b = BitString::from_index(1, 4);
        assert_eq!(b.to_string(), "1000");
        assert_eq!(b.to_index(), 1);
        for idx in 0..16u64 {
            assert_eq!(BitString::from_index(idx, 4).to_index(), idx);
        }
    }

    #[test]
    fn flip_changes_exactly_one_coordinate() {
        let b = BitString::parse("0101").unwrap();
        let f = b.flip(0);
        assert_eq!(f.to_string(), "1101");
        assert_eq!(b.to_string(), "0101");
    }
}
