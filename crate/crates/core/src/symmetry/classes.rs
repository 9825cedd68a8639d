//! Orbit classes of pairs `(x, y)` of base-set elements under a base group,
//! together with canonical labels. These classes index the dual basis used
//! by the block-entry polynomials.

use crate::code::circ_dist;
use std::collections::HashMap;

/// A single class: its canonical (lexicographically smallest) label as a
//  flat symbol tuple, together with the member pairs as base-set indices.
#[derive(Debug, Clone)]
pub struct Class {
    pub label: Vec<u16>,
    pub members: Vec<(u32, u32)>,
}

/// The orbit classes of `Z x Z` under a base group, with `Z` an indexed set
/// of `z_size` elements. Classes are ordered by their canonical labels.
#[derive(Debug, Clone)]
pub struct LambdaClasses {
    pub z_size: usize,
    pub classes: Vec<Class>,
    index: HashMap<Vec<u16>, u32>,
}

impl LambdaClasses {
    fn from_canonicalizer(
        z_size: usize,
        label_len: usize,
        pair_label: impl Fn(u32, u32) -> Vec<u16>,
        canonical: impl Fn(&[u16]) -> Vec<u16>,
    ) -> Self {
        let mut map: HashMap<Vec<u16>, Vec<(u32, u32)>> = HashMap::new();
        for x in 0..z_size as u32 {
            for y in 0..z_size as u32 {
                let label = pair_label(x, y);
                debug_assert_eq!(label.len(), label_len);
                map.entry(canonical(&label)).or_default().push((x, y));
            }
        }
        let mut labels: Vec<Vec<u16>> = map.keys().cloned().collect();
        labels.sort();
        let mut classes = Vec::with_capacity(labels.len());
        let mut index = HashMap::new();
        for (i, label) in labels.into_iter().enumerate() {
            let members = map.remove(&label).unwrap();
            index.insert(label.clone(), i as u32);
            classes.push(Class { label, members });
        }
        LambdaClasses { z_size, classes, index }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, canonical_label: &[u16]) -> Option<u32> {
        self.index.get(canonical_label).copied()
    }
}

/// Relabels a tuple by first occurrence: the lexicographically smallest
/// image under the full symmetric group on the symbols.
pub fn pattern_of(tuple: &[u16]) -> Vec<u16> {
    let mut map: HashMap<u16, u16> = HashMap::new();
    let mut next = 0u16;
    tuple
        .iter()
        .map(|&s| {
            *map.entry(s).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        })
        .collect()
}

/// Minimum over the dihedral group `D_q` acting on all entries of a tuple
/// over `Z_q`.
pub fn dihedral_min(q: u32, tuple: &[u16]) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    for rot in 0..q {
        for reflect in [false, true] {
            let image: Vec<u16> = tuple
                .iter()
                .map(|&s| {
                    let v = if reflect { (q - s as u32) % q } else { s as u32 };
                    ((v + rot) % q) as u16
                })
                .collect();
            if best.as_ref().map_or(true, |b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap()
}

/// Minimum over the reflection `x -> -x` on `Z_q` applied to all entries.
pub fn reflection_min(q: u32, tuple: &[u16]) -> Vec<u16> {
    let image: Vec<u16> = tuple.iter().map(|&s| ((q - s as u32) % q) as u16).collect();
    let own = tuple.to_vec();
    own.min(image)
}

/// Classes of `([q]^2) x ([q]^2) = [q]^4` under the symmetric group `S_q`
/// relabeling symbols. `Z = [q]^2` indexed as `a * q + b`.
pub fn hamming_pair_classes(q: u32) -> LambdaClasses {
    LambdaClasses::from_canonicalizer(
        (q * q) as usize,
        4,
        move |x, y| {
            vec![
                (x / q) as u16,
                (x % q) as u16,
                (y / q) as u16,
                (y % q) as u16,
            ]
        },
        |label| pattern_of(label),
    )
}

/// Classes of `[q] x [q]` under `S_q`: the diagonal class `00` and the
/// off-diagonal class `01`.
pub fn hamming_single_classes(q: u32) -> LambdaClasses {
    LambdaClasses::from_canonicalizer(
        q as usize,
        2,
        |x, y| vec![x as u16, y as u16],
        |label| pattern_of(label),
    )
}

/// Classes of `Z x Z` under the trivial group: singletons `(x, y)`.
pub fn trivial_classes(z_size: usize) -> LambdaClasses {
    LambdaClasses::from_canonicalizer(
        z_size,
        2,
        |x, y| vec![x as u16, y as u16],
        |label| label.to_vec(),
    )
}

/// Classes of `Z_q x Z_q` under the reflection action of `S_2` fixing `0`.
pub fn reflection_classes(q: u32) -> LambdaClasses {
    LambdaClasses::from_canonicalizer(
        q as usize,
        2,
        |x, y| vec![x as u16, y as u16],
        move |label| reflection_min(q, label),
    )
}

/// Classes of `Z_q x Z_q` under the dihedral group `D_q`: one class per
/// circular difference `0..=floor(q/2)`, labeled `(0, j)`.
pub fn dihedral_classes(q: u32) -> LambdaClasses {
    LambdaClasses::from_canonicalizer(
        q as usize,
        2,
        |x, y| vec![x as u16, y as u16],
        move |label| dihedral_min(q, label),
    )
}

/// Index of the dihedral class of a pair at circular distance `delta`.
pub fn dihedral_class_of_distance(classes: &LambdaClasses, q: u32, delta: u32) -> u32 {
    debug_assert!(delta <= q / 2);
    classes.class_of(&[0, delta as u16]).unwrap()
}

/// Circular distance of the canonical dihedral label `(0, j)`.
pub fn dihedral_label_distance(q: u32, label: &[u16]) -> u32 {
    circ_dist(q, label[0] as u32, label[1] as u32)
}
