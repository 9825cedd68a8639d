//! The `(20, 8)` codes of size 256 with all distances divisible by 4:
//! unions of cosets of the span of five disjoint weight-16 words, with any
//! subset of the cosets replaced by their complements.

use crate::code::{Code, Word};
use crate::error::Result;

/// The five weight-16 words whose span (dimension 4) underlies the cosets.
const D_ROWS: [&str; 5] = [
    "00001111111111111111",
    "11110000111111111111",
    "11111111000011111111",
    "11111111111100001111",
    "11111111111111110000",
];

/// The sixteen coset representatives; their cosets tile the linear
/// `(20, 8)`-code of size 256.
const COSET_REPS: [&str; 16] = [
    "00000000000000000000",
    "00000101010101011010",
    "00001001011001101100",
    "00001100001100110110",
    "10100000010101101001",
    "10100101000000110011",
    "10101001001100000101",
    "10101100011001011111",
    "11000000011000110101",
    "11000101001101101111",
    "11001001000001011001",
    "11001100010100000011",
    "01100000001101011100",
    "01100101011000000110",
    "01101001010100110000",
    "01101100000001101010",
];

/// Flip masks (bit `i` complements the coset of representative `i`) whose
/// codes represent the 15 equivalence classes; mask 0 is the linear code.
pub const CLASS_MASKS: [u16; 15] = [
    0b0000000000000000,
    0b0000000000000001,
    0b0000000000000011,
    0b0000000000000111,
    0b0000000000001111,
    0b0000000000010011,
    0b0000000000010111,
    0b0000000000110011,
    0b0000000001010011,
    0b0000000100010111,
    0b0000000100011110,
    0b0000000100110110,
    0b0000001101010110,
    0b0000001101100101,
    0b0000001101101010,
];

fn parse_bits(s: &str) -> Vec<u16> {
    s.bytes().map(|b| (b - b'0') as u16).collect()
}

fn add_words(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

/// Span of the five weight-16 rows: 16 words.
fn span_d() -> Vec<Vec<u16>> {
    let rows: Vec<Vec<u16>> = D_ROWS.iter().map(|s| parse_bits(s)).collect();
    let mut words = vec![vec![0u16; 20]];
    // the five rows sum to zero; the first four are independent
    for row in &rows[..4] {
        let mut next = Vec::with_capacity(words.len() * 2);
        for w in &words {
            next.push(w.clone());
            next.push(add_words(w, row));
        }
        words = next;
    }
    words
}

/// Builds the code for a flip mask: coset `i` of the base tiling is
/// complemented when bit `i` of `flips` is set.
pub fn coset20(flips: u16) -> Result<Code> {
    let span = span_d();
    let ones = vec![1u16; 20];
    let mut words = Vec::with_capacity(256);
    for (i, rep) in COSET_REPS.iter().enumerate() {
        let rep = parse_bits(rep);
        for v in &span {
            let mut w = add_words(&rep, v);
            if flips >> i & 1 == 1 {
                w = add_words(&w, &ones);
            }
            words.push(Word::new(2, w).unwrap());
        }
    }
    Code::new(2, 20, words)
}
