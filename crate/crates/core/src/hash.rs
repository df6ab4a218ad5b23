//! The 256-bit hash pipeline: message preprocessing into a normalized bit
//! string and an initial 256-cell state, strategy derivation from the
//! normalized string, and the digest obtained by running the iteration engine
//! over the derived strategy.
//!
//! Stages, in order:
//!
//! 1. [`encode_message`] — 7-bit ASCII codes, a 1-bit, the minimal binary
//!    length, another 1-bit.
//! 2. [`mirror_extend`] — append the reverse of the string minus its final bit.
//! 3. [`pad_to_512`] — cyclic self-extension to the next multiple of 512,
//!    giving the normalized string `D`.
//! 4. [`fold_xor_256`] — XOR-fold of `D`'s 256-bit blocks, giving the initial
//!    state `E`.
//! 5. [`derive_u_sequence`] / [`derive_strategy`] — byte values of eight
//!    1-bit-rotation passes over `D`, chained through a doubling recurrence,
//!    mapped onto cell indices.
//! 6. [`digest`] — run the engine over the whole strategy and render the
//!    final state as 64 uppercase hex characters.

use std::fmt;

use crate::engine::{iterate, BitState, IterationFunction, Strategy, SystemPoint};
use crate::error::{Error, Result};

/// An arbitrary-length ordered sequence of bits.
#[derive(Clone, PartialEq, Eq)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        BitString { bits: Vec::new() }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString { bits }
    }

    /// Parses a string of `0`/`1` characters; whitespace is ignored.
    /// Used for embedded reference vectors.
    pub fn parse(text: &str) -> Self {
        BitString {
            bits: text
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c == '1')
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Renders the bits in 8-bit groups, six groups per line, matching the
    /// trace display format.
    pub fn grouped(&self) -> String {
        let mut out = String::new();
        for (i, &b) in self.bits.iter().enumerate() {
            if i > 0 {
                if i % 48 == 0 {
                    out.push('\n');
                } else if i % 8 == 0 {
                    out.push(' ');
                }
            }
            out.push(if b { '1' } else { '0' });
        }
        out
    }
}

impl Default for BitString {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString[{}]({})", self.len(), self.grouped().replace('\n', " "))
    }
}

/// Appends `value` in minimal binary, most significant bit first.
fn push_minimal_binary(out: &mut BitString, value: usize) {
    let width = usize::BITS - value.leading_zeros();
    let width = width.max(1);
    for i in (0..width).rev() {
        out.push(value >> i & 1 != 0);
    }
}

/// Encodes a 7-bit ASCII message: each byte as 7 bits MSB-first, then a
/// 1-bit, then the minimal binary representation of the bit length so far,
/// then another 1-bit.
pub fn encode_message(text: &[u8]) -> Result<BitString> {
    let (_, full) = encode_stages(text)?;
    Ok(full)
}

/// Like [`encode_message`] but also returns the intermediate string before
/// the length field (codes plus the first 1-bit), for trace output.
pub fn encode_stages(text: &[u8]) -> Result<(BitString, BitString)> {
    let mut s = BitString::new();
    for (position, &byte) in text.iter().enumerate() {
        if byte >= 128 {
            return Err(Error::NonAsciiByte { position, byte });
        }
        for i in (0..7).rev() {
            s.push(byte >> i & 1 != 0);
        }
    }
    s.push(true);
    let marked = s.clone();

    push_minimal_binary(&mut s, marked.len());
    s.push(true);
    Ok((marked, s))
}

/// Appends the reverse of the string without its final bit.
/// Output length is `2 * len - 1`.
pub fn mirror_extend(s: &BitString) -> Result<BitString> {
    if s.is_empty() {
        return Err(Error::EmptyBitString);
    }
    let mut bits = s.bits().to_vec();
    bits.extend(s.bits()[..s.len() - 1].iter().rev());
    Ok(BitString::from_bits(bits))
}

/// Extends the string with copies of itself up to the smallest multiple of
/// 512 at least as long as the input.
pub fn pad_to_512(s: &BitString) -> Result<BitString> {
    if s.is_empty() {
        return Err(Error::EmptyBitString);
    }
    let target = s.len().div_ceil(512) * 512;
    let bits = (0..target).map(|i| s.bits()[i % s.len()]).collect();
    Ok(BitString::from_bits(bits))
}

/// Cell-wise XOR of the string's consecutive 256-bit blocks.
pub fn fold_xor_256(d: &BitString) -> Result<BitState> {
    if d.is_empty() || d.len() % 256 != 0 {
        return Err(Error::BlockLength { len: d.len(), multiple: 256 });
    }
    let mut cells = vec![false; 256];
    for (i, &b) in d.bits().iter().enumerate() {
        cells[i % 256] ^= b;
    }
    Ok(BitState::from_cells(cells))
}

/// Byte values of eight passes over the string: pass `r` reads the string
/// rotated left by `r` bits, split into 8-bit blocks, MSB first. Output
/// length is the bit length of the input.
pub fn derive_u_sequence(d: &BitString) -> Result<Vec<u8>> {
    if d.is_empty() || d.len() % 8 != 0 {
        return Err(Error::BlockLength { len: d.len(), multiple: 8 });
    }
    let bits = d.bits();
    let len = bits.len();
    let mut u = Vec::with_capacity(len);
    for rotation in 0..8 {
        for block in 0..len / 8 {
            let mut value = 0u8;
            for bit in 0..8 {
                value = value << 1 | bits[(block * 8 + bit + rotation) % len] as u8;
            }
            u.push(value);
        }
    }
    Ok(u)
}

/// Chains the byte sequence through `S(n) = u(n) + 2*S(n-1) + n mod 256` and
/// maps each raw value onto the cell index `value + 1`.
pub fn derive_strategy(u: &[u8]) -> Result<Strategy> {
    if u.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut terms = Vec::with_capacity(u.len());
    let mut raw = u[0] as u32;
    terms.push(raw as usize + 1);
    for (n, &value) in u.iter().enumerate().skip(1) {
        raw = (value as u32 + 2 * raw + n as u32) % 256;
        terms.push(raw as usize + 1);
    }
    Strategy::new(terms, 256)
}

/// Result of the preprocessing stages: the normalized 512-multiple string
/// `D`, the XOR-folded 256-cell initial state `E`, and the named
/// intermediate strings for tracing.
#[derive(Clone, Debug)]
pub struct PreprocessResult {
    pub normalized: BitString,
    pub initial_state: BitState,
    pub trace: Vec<(&'static str, BitString)>,
}

pub fn preprocess(text: &[u8]) -> Result<PreprocessResult> {
    let (encoded, with_length) = encode_stages(text)?;
    let mirrored = mirror_extend(&with_length)?;
    let padded = pad_to_512(&mirrored)?;
    let initial_state = fold_xor_256(&padded)?;
    Ok(PreprocessResult {
        normalized: padded.clone(),
        initial_state,
        trace: vec![
            ("encoded", encoded),
            ("length-appended", with_length),
            ("mirrored", mirrored),
            ("padded", padded),
        ],
    })
}

/// A 256-cell final state with its canonical hex rendering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digest {
    pub state: BitState,
    pub hex: String,
}

/// Renders a state as uppercase hex, 4 cells per digit, the lowest-indexed
/// cell of each group being the most significant bit.
pub fn to_hex(state: &BitState) -> Result<String> {
    if state.width() % 4 != 0 {
        return Err(Error::WidthNotNibble { width: state.width() });
    }
    let mut hex = String::with_capacity(state.width() / 4);
    for chunk in state.cells().chunks(4) {
        let value = chunk.iter().fold(0u32, |acc, &b| acc << 1 | b as u32);
        hex.push(char::from_digit(value, 16).unwrap().to_ascii_uppercase());
    }
    Ok(hex)
}

/// Full digest pipeline over a 7-bit ASCII message.
pub fn digest(text: &[u8], f: IterationFunction) -> Result<Digest> {
    let pre = preprocess(text)?;
    let u = derive_u_sequence(&pre.normalized)?;
    let strategy = derive_strategy(&u)?;
    let steps = strategy.len();
    let point = SystemPoint::new(strategy, pre.initial_state)?;
    let final_point = iterate(f, &point, steps)?;
    let hex = to_hex(final_point.state())?;
    Ok(Digest { state: final_point.state().clone(), hex })
}
