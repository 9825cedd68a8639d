//! Representative sets for the base-group actions used by the generators,
//! and the generic computation of the F-matrices paired against the class
//! basis.

use super::classes::LambdaClasses;
use super::poly::Poly;
use crate::Rational;
use num::{One, Zero};
use std::f64::consts::PI;

/// Which representative set to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepSetKind {
    /// `S_q` on `[q]`: trivial plus standard representation.
    SqSingle,
    /// `S_q` on `[q]^2`, the pair action (with the `q < 4` truncations).
    SqPairs,
    /// Reflection action of `S_2` on `Z_q` fixing `0`.
    S2Reflection,
    /// Dihedral group `D_q` on `Z_q`; cosine-valued, hence inexact.
    Dihedral,
    /// Trivial group on `F_2`.
    TrivialF2,
    /// Trivial group on `[q]`: the identity basis.
    IdentityQ,
}

/// An ordered family of column tuples `B_1, .., B_k` over an indexed base
/// set, one tuple per irreducible class, with multiplicities `m_i`.
#[derive(Debug, Clone)]
pub struct RepresentativeSet<S> {
    /// `blocks[i]` is `B_{i+1}`: a list of `m_i` columns of length `|Z|`.
    pub blocks: Vec<Vec<Vec<S>>>,
    pub z_size: usize,
}

impl<S> RepresentativeSet<S> {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

fn basis_vec(len: usize, idx: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[idx] = Rational::one();
    v
}

/// Builds the exact (rational) representative sets. Normalization constants
/// that only rescale whole blocks are dropped to keep entries integral.
pub fn rep_set_exact(kind: RepSetKind, q: u32) -> RepresentativeSet<Rational> {
    let qi = q as usize;
    match kind {
        RepSetKind::SqSingle => {
            assert!(q >= 2);
            let ones = vec![Rational::one(); qi];
            let mut e01 = vec![Rational::zero(); qi];
            e01[0] = Rational::one();
            e01[1] = -Rational::one();
            RepresentativeSet { blocks: vec![vec![ones], vec![e01]], z_size: qi }
        }
        RepSetKind::SqPairs => {
            assert!(q >= 2);
            let z = qi * qi;
            let at = |a: usize, b: usize| a * qi + b;
            let mat = |f: &dyn Fn(usize, usize) -> i64| -> Vec<Rational> {
                let mut v = vec![Rational::zero(); z];
                for a in 0..qi {
                    for b in 0..qi {
                        v[at(a, b)] = Rational::from_integer(f(a, b).into());
                    }
                }
                v
            };
            let identity = mat(&|a, b| (a == b) as i64);
            let j_minus_i = mat(&|a, b| (a != b) as i64);
            // N = (e0 - e1) 1^T
            let n_mat = |a: usize, _b: usize| (a == 0) as i64 - (a == 1) as i64;
            let e = |i: usize, j: usize, a: usize, b: usize| ((a, b) == (i, j)) as i64;
            let d11 = mat(&|a, b| e(0, 0, a, b) - e(1, 1, a, b));
            let skew = mat(&|a, b| n_mat(a, b) - n_mat(b, a));
            let sym = mat(&|a, b| {
                n_mat(a, b) + n_mat(b, a) - 2 * (e(0, 0, a, b) - e(1, 1, a, b))
            });
            let b3 = mat(&|a, b| {
                e(0, 1, a, b) + e(1, 2, a, b) + e(2, 0, a, b)
                    - e(1, 0, a, b)
                    - e(2, 1, a, b)
                    - e(0, 2, a, b)
            });
            let b4 = mat(&|a, b| {
                e(0, 2, a, b) - e(2, 1, a, b) + e(1, 3, a, b) - e(3, 0, a, b)
                    + e(2, 0, a, b)
                    - e(1, 2, a, b)
                    + e(3, 1, a, b)
                    - e(0, 3, a, b)
            });
            let blocks = if q >= 4 {
                vec![
                    vec![identity, j_minus_i],
                    vec![d11, skew, sym],
                    vec![b3],
                    vec![b4],
                ]
            } else if q == 3 {
                vec![vec![identity, j_minus_i], vec![d11, skew, sym], vec![b3]]
            } else {
                vec![vec![identity, j_minus_i], vec![d11, skew]]
            };
            RepresentativeSet { blocks, z_size: z }
        }
        RepSetKind::S2Reflection => {
            assert!(q >= 2);
            let mut b1 = vec![basis_vec(qi, 0)];
            for i in 1..=qi / 2 {
                let mut v = basis_vec(qi, i);
                v[(qi - i) % qi] = &v[(qi - i) % qi] + Rational::one();
                b1.push(v);
            }
            let mut b2 = Vec::new();
            for i in 1..=(qi - 1) / 2 {
                let mut v = basis_vec(qi, i);
                v[qi - i] = -Rational::one();
                b2.push(v);
            }
            RepresentativeSet { blocks: vec![b1, b2], z_size: qi }
        }
        RepSetKind::TrivialF2 => RepresentativeSet {
            blocks: vec![vec![basis_vec(2, 0), basis_vec(2, 1)]],
            z_size: 2,
        },
        RepSetKind::IdentityQ => RepresentativeSet {
            blocks: vec![(0..qi).map(|i| basis_vec(qi, i)).collect()],
            z_size: qi,
        },
        RepSetKind::Dihedral => panic!("dihedral representative set is not exact"),
    }
}

/// The dihedral representative set: one cosine column per irreducible,
/// scaled by the square root of the dimension of its isotypical component.
pub fn rep_set_dihedral(q: u32) -> RepresentativeSet<f64> {
    let qi = q as usize;
    let mut blocks = Vec::new();
    for j in 0..=q / 2 {
        let dim: f64 = if j == 0 || (q % 2 == 0 && j == q / 2) { 1.0 } else { 2.0 };
        let col: Vec<f64> = (0..qi)
            .map(|k| dim.sqrt() * (2.0 * PI * j as f64 * k as f64 / q as f64).cos())
            .collect();
        blocks.push(vec![col]);
    }
    RepresentativeSet { blocks, z_size: qi }
}

/// One F-matrix per block: `(F_i)_{j,h} = sum_P (B_i(j) (x) B_i(h))(a_P) a*_P`,
/// where the pairing is evaluated over the members of each class. Class `c`
/// becomes the polynomial variable `label_offset + c`.
pub fn f_table<S: super::poly::Scalar>(
    repset: &RepresentativeSet<S>,
    classes: &LambdaClasses,
    label_offset: u32,
) -> Vec<Vec<Vec<Poly<S>>>> {
    assert_eq!(repset.z_size, classes.z_size, "base set mismatch");
    repset
        .blocks
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|col_j| {
                    block
                        .iter()
                        .map(|col_h| {
                            let mut f = Poly::zero();
                            for (ci, class) in classes.classes.iter().enumerate() {
                                let mut acc = S::zero();
                                for &(x, y) in &class.members {
                                    acc = acc.add(
                                        &col_j[x as usize].mul(&col_h[y as usize]),
                                    );
                                }
                                f.add_assign(&Poly::linear(
                                    label_offset + ci as u32,
                                    acc,
                                ));
                            }
                            f
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::classes;
    use super::*;
    use num::FromPrimitive;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v).unwrap()
    }

    fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn multiplicities_per_kind() {
        assert_eq!(rep_set_exact(RepSetKind::SqPairs, 4).multiplicities(), vec![2, 3, 1, 1]);
        assert_eq!(rep_set_exact(RepSetKind::SqPairs, 5).multiplicities(), vec![2, 3, 1, 1]);
        assert_eq!(rep_set_exact(RepSetKind::SqPairs, 3).multiplicities(), vec![2, 3, 1]);
        assert_eq!(rep_set_exact(RepSetKind::SqPairs, 2).multiplicities(), vec![2, 2]);
        assert_eq!(rep_set_exact(RepSetKind::S2Reflection, 5).multiplicities(), vec![3, 2]);
        assert_eq!(rep_set_exact(RepSetKind::S2Reflection, 6).multiplicities(), vec![4, 2]);
        assert_eq!(rep_set_dihedral(6).multiplicities(), vec![1, 1, 1, 1]);
        assert_eq!(rep_set_dihedral(7).multiplicities(), vec![1, 1, 1, 1]);
        assert_eq!(rep_set_exact(RepSetKind::SqSingle, 5).multiplicities(), vec![1, 1]);
    }

    #[test]
    fn orthogonal_columns_where_stated() {
        for (kind, q) in [
            (RepSetKind::SqSingle, 5),
            (RepSetKind::S2Reflection, 5),
            (RepSetKind::S2Reflection, 6),
            (RepSetKind::TrivialF2, 2),
        ] {
            let rs = rep_set_exact(kind, q);
            let cols: Vec<&Vec<Rational>> = rs.blocks.iter().flatten().collect();
            for (i, a) in cols.iter().enumerate() {
                for b in cols.iter().skip(i + 1) {
                    assert!(dot(a, b).is_zero(), "{kind:?} q={q}");
                }
            }
        }
        // dihedral: float columns, tolerance
        for q in [5u32, 6, 7, 8] {
            let rs = rep_set_dihedral(q);
            let cols: Vec<&Vec<f64>> = rs.blocks.iter().flatten().collect();
            for (i, a) in cols.iter().enumerate() {
                for b in cols.iter().skip(i + 1) {
                    let d: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
                    assert!(d.abs() < 1e-9, "q={q} i={i}");
                }
            }
        }
    }

    #[test]
    fn reflection_invariance_of_columns() {
        // generator: x -> -x. B_1 columns invariant, B_2 columns negated.
        for q in [5u32, 6, 9] {
            let rs = rep_set_exact(RepSetKind::S2Reflection, q);
            let reflect = |v: &Vec<Rational>| -> Vec<Rational> {
                (0..q as usize)
                    .map(|i| v[(q as usize - i) % q as usize].clone())
                    .collect()
            };
            for col in &rs.blocks[0] {
                assert_eq!(&reflect(col), col);
            }
            for col in &rs.blocks[1] {
                let neg: Vec<Rational> = col.iter().map(|x| -x).collect();
                assert_eq!(reflect(col), neg);
            }
        }
    }

    #[test]
    fn dihedral_columns_span_stable_planes() {
        // rotation and reflection keep each column inside the span of the
        // cosine/sine pair of its frequency.
        for q in [5u32, 7, 8] {
            let rs = rep_set_dihedral(q);
            for (j, block) in rs.blocks.iter().enumerate() {
                let col = &block[0];
                let cos: Vec<f64> = (0..q as usize)
                    .map(|k| (2.0 * PI * j as f64 * k as f64 / q as f64).cos())
                    .collect();
                let sin: Vec<f64> = (0..q as usize)
                    .map(|k| (2.0 * PI * j as f64 * k as f64 / q as f64).sin())
                    .collect();
                let project = |v: &[f64]| -> f64 {
                    // residual after projecting onto span{cos, sin}
                    let nc: f64 = cos.iter().map(|x| x * x).sum();
                    let ns: f64 = sin.iter().map(|x| x * x).sum();
                    let pc: f64 = v.iter().zip(&cos).map(|(a, b)| a * b).sum::<f64>()
                        / if nc > 1e-12 { nc } else { 1.0 };
                    let ps: f64 = v.iter().zip(&sin).map(|(a, b)| a * b).sum::<f64>()
                        / if ns > 1e-12 { ns } else { 1.0 };
                    v.iter()
                        .enumerate()
                        .map(|(k, a)| {
                            let r = a - pc * cos[k] - ps * sin[k];
                            r * r
                        })
                        .sum()
                };
                // rotated column: k -> k+1
                let rot: Vec<f64> =
                    (0..q as usize).map(|k| col[(k + 1) % q as usize]).collect();
                // reflected column: k -> -k
                let refl: Vec<f64> = (0..q as usize)
                    .map(|k| col[(q as usize - k) % q as usize])
                    .collect();
                assert!(project(&rot) < 1e-18, "q={q} j={j}");
                assert!(project(&refl) < 1e-18, "q={q} j={j}");
            }
        }
    }

    #[test]
    fn sq_pairs_structural_predicates() {
        // from the proof: B2(2), B3 skew; B1 entries S_q-invariant patterns;
        // B3, B4 have zero row sums; B4 symmetric with zero diagonal.
        for q in [4u32, 5, 7] {
            let rs = rep_set_exact(RepSetKind::SqPairs, q);
            let qi = q as usize;
            let get = |col: &Vec<Rational>, a: usize, b: usize| col[a * qi + b].clone();
            let skew = |col: &Vec<Rational>| {
                (0..qi).all(|a| (0..qi).all(|b| get(col, a, b) == -get(col, b, a)))
            };
            let symmetric = |col: &Vec<Rational>| {
                (0..qi).all(|a| (0..qi).all(|b| get(col, a, b) == get(col, b, a)))
            };
            let zero_row_sums = |col: &Vec<Rational>| {
                (0..qi).all(|a| (0..qi).map(|b| get(col, a, b)).sum::<Rational>().is_zero())
            };
            assert!(skew(&rs.blocks[1][1]));
            assert!(skew(&rs.blocks[2][0]));
            assert!(zero_row_sums(&rs.blocks[2][0]));
            assert!(symmetric(&rs.blocks[3][0]));
            assert!(zero_row_sums(&rs.blocks[3][0]));
            assert!((0..qi).all(|a| get(&rs.blocks[3][0], a, a).is_zero()));
        }
    }

    #[test]
    fn f_table_matches_published_hamming_formulas() {
        for q in [4u32, 5, 7] {
            let rs = rep_set_exact(RepSetKind::SqPairs, q);
            let cls = classes::hamming_pair_classes(q);
            let f = f_table(&rs, &cls, 0);
            let lab = |s: &[u16]| cls.class_of(&classes::pattern_of(s)).unwrap();
            let qr = r(q as i64);

            // (F1)_{1,1} = q a*_0000 + q(q-1) a*_0011
            let f11 = &f[0][0][0];
            assert_eq!(f11.coefficient(&vec![lab(&[0, 0, 0, 0])]), qr.clone());
            assert_eq!(
                f11.coefficient(&vec![lab(&[0, 0, 1, 1])]),
                r((q * (q - 1)) as i64)
            );
            assert_eq!(f11.num_terms(), 2);

            // (F1)_{1,2} = q(q-1)(a*_0001 + a*_0010 + (q-2) a*_0012)
            let f12 = &f[0][0][1];
            let qq1 = r((q * (q - 1)) as i64);
            assert_eq!(f12.coefficient(&vec![lab(&[0, 0, 0, 1])]), qq1.clone());
            assert_eq!(f12.coefficient(&vec![lab(&[0, 0, 1, 0])]), qq1.clone());
            assert_eq!(
                f12.coefficient(&vec![lab(&[0, 0, 1, 2])]),
                qq1.clone() * r((q - 2) as i64)
            );

            // (F2)_{1,1} = 2 a*_0000 - 2 a*_0011
            let g11 = &f[1][0][0];
            assert_eq!(g11.coefficient(&vec![lab(&[0, 0, 0, 0])]), r(2));
            assert_eq!(g11.coefficient(&vec![lab(&[0, 0, 1, 1])]), r(-2));

            // (F3)_{1,1} = 6(a*_0101 - a*_0110 - a*_0102 + a*_0120 + a*_0112 - a*_0121)
            let h11 = &f[2][0][0];
            assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 0, 1])]), r(6));
            assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 1, 0])]), r(-6));
            if q >= 3 {
                assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 0, 2])]), r(-6));
                assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 2, 0])]), r(6));
                assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 1, 2])]), r(6));
                assert_eq!(h11.coefficient(&vec![lab(&[0, 1, 2, 1])]), r(-6));
            }

            // (F4)_{1,1} = 8(a*_0101 + a*_0110 - a*_0102 - a*_0120 - a*_0112
            //              - a*_0121) + 16 a*_0123
            let k11 = &f[3][0][0];
            assert_eq!(k11.coefficient(&vec![lab(&[0, 1, 0, 1])]), r(8));
            assert_eq!(k11.coefficient(&vec![lab(&[0, 1, 1, 0])]), r(8));
            assert_eq!(k11.coefficient(&vec![lab(&[0, 1, 0, 2])]), r(-8));
            assert_eq!(k11.coefficient(&vec![lab(&[0, 1, 2, 3])]), r(16));
        }
    }

    #[test]
    fn f_table_matches_published_reflection_formulas() {
        for q in [5u32, 6, 7] {
            let rs = rep_set_exact(RepSetKind::S2Reflection, q);
            let cls = classes::reflection_classes(q);
            let f = f_table(&rs, &cls, 0);
            let lab = |a: u16, b: u16| cls.class_of(&classes::reflection_min(q, &[a, b])).unwrap();
            // (F1)_{1,1} = 1 a*_00
            assert_eq!(f[0][0][0].coefficient(&vec![lab(0, 0)]), r(1));
            assert_eq!(f[0][0][0].num_terms(), 1);
            // (F1)_{1,j+1} = 2 a*_0j
            for j in 1..=q / 2 {
                assert_eq!(
                    f[0][0][j as usize].coefficient(&vec![lab(0, j as u16)]),
                    r(2),
                    "q={q} j={j}"
                );
            }
            // (F1)_{j+1,h+1} = 2 a*_jh + 2 a*_j(q-h); for coinciding classes
            // the two contributions accumulate.
            for j in 1..=q / 2 {
                for h in 1..=q / 2 {
                    let mut expect: std::collections::HashMap<u32, i64> =
                        std::collections::HashMap::new();
                    *expect.entry(lab(j as u16, h as u16)).or_default() += 2;
                    *expect.entry(lab(j as u16, (q - h) as u16)).or_default() += 2;
                    for (label, v) in expect {
                        assert_eq!(
                            f[0][j as usize][h as usize].coefficient(&vec![label]),
                            r(v),
                            "q={q} j={j} h={h}"
                        );
                    }
                }
            }
            // (F2)_{j,h} = 2 a*_jh - 2 a*_j(q-h)
            for j in 1..=(q - 1) / 2 {
                for h in 1..=(q - 1) / 2 {
                    let mut expect: std::collections::HashMap<u32, i64> =
                        std::collections::HashMap::new();
                    *expect.entry(lab(j as u16, h as u16)).or_default() += 2;
                    *expect.entry(lab(j as u16, (q - h) as u16)).or_default() -= 2;
                    for (label, v) in expect {
                        assert_eq!(
                            f[1][j as usize - 1][h as usize - 1].coefficient(&vec![label]),
                            r(v),
                            "q={q} j={j} h={h}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn f_table_matches_published_dihedral_formulas() {
        for q in [5u32, 6, 7, 8] {
            let rs = rep_set_dihedral(q);
            let cls = classes::dihedral_classes(q);
            let f = f_table(&rs, &cls, 0);
            for i in 1..=(q / 2 + 1) as usize {
                let fi = &f[i - 1][0][0];
                // coefficient of a*_0j
                for j in 0..=q / 2 {
                    let got = fi.coefficient(&vec![j]);
                    let expect = if j == 0 {
                        q as f64
                    } else if q % 2 == 0 && j == q / 2 {
                        q as f64 * if (i - 1) % 2 == 0 { 1.0 } else { -1.0 }
                    } else {
                        2.0 * q as f64
                            * (2.0 * PI * j as f64 * (i as f64 - 1.0) / q as f64).cos()
                    };
                    assert!(
                        (got - expect).abs() < 1e-9,
                        "q={q} i={i} j={j}: {got} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn f_table_trivial_group() {
        let rs = rep_set_exact(RepSetKind::TrivialF2, 2);
        let cls = classes::trivial_classes(2);
        let f = f_table(&rs, &cls, 0);
        for j in 0..2u16 {
            for h in 0..2u16 {
                let label = cls.class_of(&[j, h]).unwrap();
                assert_eq!(f[0][j as usize][h as usize].coefficient(&vec![label]), r(1));
                assert_eq!(f[0][j as usize][h as usize].num_terms(), 1);
            }
        }
    }
}
