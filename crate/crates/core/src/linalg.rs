//! Small dense exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Solves `matrix · x = rhs` by Gauss-Jordan elimination with exact
/// rational pivots. `matrix` is row-major and square.
///
/// Returns `None` when the matrix is singular.
pub fn solve(mut matrix: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "right-hand side length must match matrix size");
    for row in &matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }

    for col in 0..n {
        let pivot = (col..n).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);

        let inv = BigRational::one() / &matrix[col][col];
        for entry in matrix[col].iter_mut().skip(col) {
            *entry = &*entry * &inv;
        }
        rhs[col] = &rhs[col] * &inv;

        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for c in col..n {
                let delta = &factor * &matrix[col][c];
                matrix[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solves_two_by_two() {
        // 2x + y = 3, x - y = 0
        let m = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        let x = solve(m, vec![q(3, 1), q(0, 1)]).unwrap();
        assert_eq!(x, vec![q(1, 1), q(1, 1)]);
    }

    #[test]
    fn needs_row_swap() {
        let m = vec![vec![q(0, 1), q(1, 1)], vec![q(3, 1), q(0, 1)]];
        let x = solve(m, vec![q(5, 1), q(1, 1)]).unwrap();
        assert_eq!(x, vec![q(1, 3), q(5, 1)]);
    }

    #[test]
    fn singular_is_none() {
        let m = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve(m, vec![q(1, 1), q(1, 1)]).is_none());
    }
}
