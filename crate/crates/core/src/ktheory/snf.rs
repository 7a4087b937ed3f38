use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · a · v = diag(d)` with `u`, `v` unimodular, `d` nonnegative, each
/// entry dividing the next and zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by pivoting on the smallest nonzero entry.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = smallest_nonzero(&m, t) {
            m.swap_rows(t, pi);
            u.swap_rows(t, pi);
            m.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let q = -m[(i, t)].div_floor(&m[(t, t)]);
                m.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= m[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let q = -m[(t, j)].div_floor(&m[(t, t)]);
                m.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= m[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // pivot must divide the rest; otherwise fold the offending row in
            let pivot = m[(t, t)].clone();
            let bad_row =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[(i, j)].is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::from(1);
                    m.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if m[(t, t)].is_negative() {
            m.negate_row(t);
            u.negate_row(t);
        }
    }

    let d = (0..rows.min(cols)).map(|i| m[(i, i)].clone()).collect();
    SnfResult { d, u, v }
}

fn smallest_nonzero(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = m[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|b| x < b.2) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
