//! Explicit 8×8 matrices for three-qubit Pauli words.
//!
//! This is the reference oracle for commutation and context signs. Entries
//! of products of Pauli matrices are always in `{0, ±1, ±i}`, so integer
//! complex arithmetic is exact.

use num_complex::Complex;

use crate::pauli::{Observable, PauliLetter, Sign};

pub type Entry = Complex<i32>;

const DIM: usize = 8;

/// A dense `8×8` complex matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseMatrix([[Entry; DIM]; DIM]);

fn single(letter: PauliLetter) -> [[Entry; 2]; 2] {
    let z = Complex::new(0, 0);
    let one = Complex::new(1, 0);
    let i = Complex::new(0, 1);
    match letter {
        PauliLetter::I => [[one, z], [z, one]],
        PauliLetter::X => [[z, one], [one, z]],
        PauliLetter::Y => [[z, -i], [i, z]],
        PauliLetter::Z => [[one, z], [z, -one]],
    }
}

impl DenseMatrix {
    pub fn identity() -> Self {
        Self::scalar(Complex::new(1, 0))
    }

    pub fn scalar(c: Entry) -> Self {
        let mut m = [[Complex::new(0, 0); DIM]; DIM];
        for (r, row) in m.iter_mut().enumerate() {
            row[r] = c;
        }
        DenseMatrix(m)
    }

    pub fn entry(&self, row: usize, col: usize) -> Entry {
        self.0[row][col]
    }

    pub fn trace(&self) -> Entry {
        (0..DIM).map(|r| self.0[r][r]).sum()
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        let mut out = [[Complex::new(0, 0); DIM]; DIM];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = (0..DIM).map(|k| self.0[r][k] * other.0[k][c]).sum();
            }
        }
        DenseMatrix(out)
    }

    /// `Some(c)` when the matrix equals `c · I`.
    pub fn as_scalar(&self) -> Option<Entry> {
        let c = self.0[0][0];
        (*self == Self::scalar(c)).then_some(c)
    }
}

/// Kronecker product `G1 ⊗ G2 ⊗ G3`; the first qubit is the most significant index bit.
pub fn dense_matrix(o: Observable) -> DenseMatrix {
    let [g1, g2, g3] = o.letters().map(single);
    let mut m = [[Complex::new(0, 0); DIM]; DIM];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = g1[r >> 2][c >> 2] * g2[(r >> 1) & 1][(c >> 1) & 1] * g3[r & 1][c & 1];
        }
    }
    DenseMatrix(m)
}

pub fn dense_commutes(a: Observable, b: Observable) -> bool {
    let (ma, mb) = (dense_matrix(a), dense_matrix(b));
    ma.matmul(&mb) == mb.matmul(&ma)
}

/// Ordered dense product of the context; `Some(sign)` when it is `±I`.
pub fn dense_product_sign(obs: &[Observable]) -> Option<Sign> {
    let prod = obs.iter().fold(DenseMatrix::identity(), |acc, &o| acc.matmul(&dense_matrix(o)));
    match prod.as_scalar()? {
        c if c == Complex::new(1, 0) => Some(Sign::Plus),
        c if c == Complex::new(-1, 0) => Some(Sign::Minus),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{multiply, Phase};

    fn o(word: &str) -> Observable {
        word.parse().unwrap()
    }

    #[test]
    fn squares_to_identity_and_traceless() {
        for ob in Observable::all() {
            let m = dense_matrix(ob);
            assert_eq!(m.matmul(&m), DenseMatrix::identity(), "{ob}");
            assert_eq!(m.trace(), Complex::new(0, 0), "{ob}");
        }
    }

    #[test]
    fn xyz_entries_match_kronecker_definition() {
        let m = dense_matrix(o("XYZ"));
        let i = Complex::new(0, 1);
        // X⊗Y⊗Z has nonzeros only where the first index bit flips and the second flips
        // row 0 = |000>: X sends to |1..>, Y sends |0>→ i|1>, Z on |0> is +1
        assert_eq!(m.entry(6, 0), i);
        assert_eq!(m.entry(7, 1), -i);
        assert_eq!(m.entry(4, 2), -i);
        assert_eq!(m.entry(0, 6), -i);
        let nonzero = (0..8)
            .flat_map(|r| (0..8).map(move |c| (r, c)))
            .filter(|&(r, c)| m.entry(r, c) != Complex::new(0, 0))
            .count();
        assert_eq!(nonzero, 8);
    }

    #[test]
    fn oracle_agrees_on_spot_checks() {
        assert!(dense_commutes(o("XXI"), o("YYI")));
        assert!(!dense_commutes(o("XII"), o("ZII")));
        assert_eq!(dense_product_sign(&[o("XXI"), o("YYI"), o("ZZI")]), Some(Sign::Minus));
        assert_eq!(dense_product_sign(&[o("XYY"), o("YXY"), o("YYX"), o("XXX")]), Some(Sign::Minus));
        assert_eq!(dense_product_sign(&[o("XII"), o("IXI")]), None);
    }

    #[test]
    fn phase_engine_matches_dense_products() {
        for a in Observable::all() {
            for b in Observable::all() {
                let (phase, coords) = multiply(a, b);
                let lhs = dense_matrix(a).matmul(&dense_matrix(b));
                let base = match Observable::from_id(coords) {
                    Ok(c) => dense_matrix(c),
                    Err(_) => DenseMatrix::identity(),
                };
                let scale = match phase {
                    Phase::ONE => Complex::new(1, 0),
                    Phase::I => Complex::new(0, 1),
                    Phase::MINUS_ONE => Complex::new(-1, 0),
                    _ => Complex::new(0, -1),
                };
                assert_eq!(lhs, DenseMatrix::scalar(scale).matmul(&base), "{a}·{b}");
            }
        }
    }
}
