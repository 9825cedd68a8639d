//! The binary Golay family: the extended `(24, 8)` code, the punctured
//! `(23, 7)` code, their shortenings, and weight classes.

use crate::code::{Code, Word};
use crate::error::{Error, Result};
use crate::f2;
use std::sync::OnceLock;

/// Generator matrix of the extended binary Golay code, `[I | B]` with `B`
/// built on the quadratic residues mod 11.
const GENERATOR_ROWS: [&str; 12] = [
    "100000000000110111000101",
    "010000000000101110001011",
    "001000000000011100010111",
    "000100000000111000101101",
    "000010000000110001011011",
    "000001000000100010110111",
    "000000100000000101101111",
    "000000010000001011011101",
    "000000001000010110111001",
    "000000000100101101110001",
    "000000000010011011100011",
    "000000000001111111111110",
];

/// Which member of the family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GolayVariant {
    /// The extended binary Golay code: 4096 words, n = 24, d = 8.
    Extended,
    /// The binary Golay code: 4096 words, n = 23, d = 7 (last coordinate
    /// of the extended code deleted).
    Binary,
    /// The extended code shortened `times` times: `2^{12-times}` words of
    /// length `24 - times`, minimum distance 8.
    Shortened { times: usize },
    /// The binary (23, 7) code shortened `times` times: `2^{12-times}`
    /// words of length `23 - times`, minimum distance 7.
    ShortenedBinary { times: usize },
    /// All weight-w words of the extended code (w even) or of the binary
    /// code (w odd).
    WeightClass { w: usize },
}

fn generator() -> Code {
    Code::from_digit_strings(2, 24, &GENERATOR_ROWS).unwrap()
}

/// Shortens at the first coordinate: keep words starting with 0, drop it.
fn shorten_once(c: &Code) -> Result<Code> {
    let words: Vec<Word> = c
        .words()
        .iter()
        .filter(|w| w.symbols()[0] == 0)
        .map(|w| Word::new(2, w.symbols()[1..].to_vec()).unwrap())
        .collect();
    Code::new(2, c.n() - 1, words)
}

/// Deletes the last coordinate (puncturing).
fn puncture_last(c: &Code) -> Result<Code> {
    let n = c.n() - 1;
    Code::from_set(
        2,
        n,
        c.words()
            .iter()
            .map(|w| Word::new(2, w.symbols()[..n].to_vec()).unwrap()),
    )
}

pub fn golay(variant: GolayVariant) -> Result<Code> {
    static EXTENDED: OnceLock<Code> = OnceLock::new();
    let extended = EXTENDED
        .get_or_init(|| {
            let c = f2::span(&generator()).unwrap();
            assert_eq!(c.len(), 4096);
            c
        })
        .clone();
    match variant {
        GolayVariant::Extended => Ok(extended),
        GolayVariant::Binary => puncture_last(&extended),
        GolayVariant::Shortened { times } => {
            if times == 0 || times > 4 {
                return Err(Error::Domain("shortening is supported for 1..=4 steps".into()));
            }
            let mut c = extended;
            for _ in 0..times {
                c = shorten_once(&c)?;
            }
            Ok(c)
        }
        GolayVariant::ShortenedBinary { times } => {
            if times == 0 || times > 4 {
                return Err(Error::Domain("shortening is supported for 1..=4 steps".into()));
            }
            let mut c = puncture_last(&extended)?;
            for _ in 0..times {
                c = shorten_once(&c)?;
            }
            Ok(c)
        }
        GolayVariant::WeightClass { w } => {
            let base = if w % 2 == 0 { extended } else { puncture_last(&extended)? };
            let words: Vec<Word> = base
                .words()
                .iter()
                .filter(|v| v.weight() == w)
                .cloned()
                .collect();
            if words.is_empty() {
                return Err(Error::Domain(format!("weight {w} does not occur")));
            }
            Code::new(2, base.n(), words)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Metric;

    #[test]
    fn extended_code_parameters() {
        let c = golay(GolayVariant::Extended).unwrap();
        assert_eq!(c.len(), 4096);
        assert_eq!(c.n(), 24);
        assert_eq!(c.min_distance(Metric::Hamming), Some(8));
        // every weight divisible by 4
        assert!(c.words().iter().all(|w| w.weight() % 4 == 0));
    }

    #[test]
    fn extended_code_is_self_dual() {
        let c = golay(GolayVariant::Extended).unwrap();
        assert_eq!(f2::dual(&c).unwrap(), c);
    }

    #[test]
    fn binary_code_parameters() {
        let c = golay(GolayVariant::Binary).unwrap();
        assert_eq!((c.len(), c.n()), (4096, 23));
        assert_eq!(c.min_distance(Metric::Hamming), Some(7));
    }

    #[test]
    fn weight_enumerators() {
        let ext = golay(GolayVariant::Extended).unwrap();
        let profile = ext.distance_profile(&Word::zero(2, 24)).unwrap();
        let mut expect = vec![0usize; 25];
        for (w, c) in [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)] {
            expect[w] = c;
        }
        assert_eq!(profile, expect);

        let bin = golay(GolayVariant::Binary).unwrap();
        let profile = bin.distance_profile(&Word::zero(2, 23)).unwrap();
        let mut expect = vec![0usize; 24];
        for (w, c) in [
            (0, 1),
            (7, 253),
            (8, 506),
            (11, 1288),
            (12, 1288),
            (15, 506),
            (16, 253),
            (23, 1),
        ] {
            expect[w] = c;
        }
        assert_eq!(profile, expect);
    }

    #[test]
    fn weight_eleven_class_has_1288_words() {
        let c = golay(GolayVariant::WeightClass { w: 11 }).unwrap();
        assert_eq!(c.len(), 1288);
        assert_eq!(c.n(), 23);
        assert!(c.min_distance(Metric::Hamming).unwrap() >= 8);
    }

    #[test]
    fn shortened_extended_sizes() {
        for times in 1..=4usize {
            let c = golay(GolayVariant::Shortened { times }).unwrap();
            assert_eq!(c.len(), 1 << (12 - times));
            assert_eq!(c.n(), 24 - times);
            assert_eq!(c.min_distance(Metric::Hamming), Some(8));
        }
    }

    #[test]
    fn quadruply_shortened_distance_distribution() {
        let c = golay(GolayVariant::Shortened { times: 4 }).unwrap();
        let dd = c.distance_distribution().unwrap();
        let as_ints: Vec<i64> = dd
            .iter()
            .map(|r| {
                assert_eq!(r.denom(), &crate::Int::from(1));
                i64::try_from(r.numer().clone()).unwrap()
            })
            .collect();
        let mut expect = vec![0i64; 21];
        expect[0] = 1;
        expect[8] = 130;
        expect[12] = 120;
        expect[16] = 5;
        assert_eq!(as_ints, expect);
    }

    #[test]
    fn once_shortened_binary_weight_profile() {
        let c = golay(GolayVariant::ShortenedBinary { times: 1 }).unwrap();
        assert_eq!((c.len(), c.n()), (2048, 22));
        let profile = c.distance_profile(&Word::zero(2, 22)).unwrap();
        let mut expect = vec![0usize; 23];
        for (w, count) in [(0, 1), (7, 176), (8, 330), (11, 672), (12, 616), (15, 176), (16, 77)] {
            expect[w] = count;
        }
        assert_eq!(profile, expect);
    }
}
