use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// `u * m * v == d`, with `d` diagonal, nonnegative, and each diagonal entry
/// dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Re-checks the certificate by exact multiplication.
    pub fn certifies(&self, m: &IntegerMatrix) -> bool {
        self.u.is_unimodular()
            && self.v.is_unimodular()
            && self.d.is_diagonal()
            && divisibility_chain(&self.d)
            && self.u.mul(m).mul(&self.v) == self.d
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn divisibility_chain(d: &IntegerMatrix) -> bool {
    let diag = d.diagonal();
    diag.iter().all(|x| !x.is_negative())
        && diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            if let Some((i, j)) = clear_pivot_cross(&mut d, &mut u, &mut v, t) {
                // a remainder beat the pivot: promote it and start over
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            // row and column t are clear; enforce divisibility on the rest
            let pivot = d[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v }
}

fn smallest_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Eliminates column `t` below and row `t` right of the pivot. Returns the
/// position of a nonzero remainder if one is left over.
fn clear_pivot_cross(
    d: &mut IntegerMatrix,
    u: &mut IntegerMatrix,
    v: &mut IntegerMatrix,
    t: usize,
) -> Option<(usize, usize)> {
    let pivot = d[(t, t)].clone();
    for i in t + 1..d.rows() {
        if d[(i, t)].is_zero() {
            continue;
        }
        let q = -(&d[(i, t)] / &pivot);
        d.add_row_multiple(i, t, &q);
        u.add_row_multiple(i, t, &q);
    }
    for j in t + 1..d.cols() {
        if d[(t, j)].is_zero() {
            continue;
        }
        let q = -(&d[(t, j)] / &pivot);
        d.add_col_multiple(j, t, &q);
        v.add_col_multiple(j, t, &q);
    }
    let col = (t + 1..d.rows())
        .find(|&i| !d[(i, t)].is_zero())
        .map(|i| (i, t));
    let row = (t + 1..d.cols())
        .find(|&j| !d[(t, j)].is_zero())
        .map(|j| (t, j));
    col.or(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn diag(m: &IntegerMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .d
            .diagonal()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn coprime_diagonal_merges() {
        let m = IntegerMatrix::from_rows(2, &[vec![2i64, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(diag(&m), vec![1, 6]);
        assert!(snf.certifies(&m));
    }

    #[test]
    fn zero_matrix_keeps_identity_transforms() {
        let m = IntegerMatrix::zeros(2, 3);
        let snf = smith_normal_form(&m);
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, IntegerMatrix::identity(2));
        assert_eq!(snf.v, IntegerMatrix::identity(3));
    }

    #[test]
    fn unimodular_closed_presentation_matrix() {
        for p in 2..9i64 {
            let m = IntegerMatrix::from_rows(2, &[vec![1i64, -p], vec![0, 1]]);
            assert_eq!(diag(&m), vec![1, 1]);
        }
    }

    #[test]
    fn rectangular_and_negative_entries() {
        let m = IntegerMatrix::from_rows(3, &[vec![4i64, -6, 8], vec![-6, 9, 12]]);
        let snf = smith_normal_form(&m);
        assert!(snf.certifies(&m));
        // 2x2 minors 0, 96, -144 have gcd 48
        assert_eq!(diag(&m), vec![1, 48]);
        let m = IntegerMatrix::from_rows(1, &[vec![-4i64], vec![6], vec![0]]);
        assert_eq!(diag(&m), vec![2]);
        assert!(smith_normal_form(&m).certifies(&m));
    }

    #[test]
    fn divisibility_fix_up_needed() {
        // already diagonal but 2 does not divide 3
        let m = IntegerMatrix::from_rows(3, &[vec![2i64, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]);
        assert_eq!(diag(&m), vec![1, 2, 12]);
        assert!(smith_normal_form(&m).certifies(&m));
    }
}
