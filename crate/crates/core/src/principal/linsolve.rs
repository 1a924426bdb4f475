//! Exact Gaussian elimination over any field-like scalar, used both for
//! the fraction-field membership decision and for its specializations at
//! rational sample points.

use num_traits::{One, Zero};

/// Scalar operations needed by the eliminator.  Implemented by any exact
/// field representation with by-value arithmetic.
pub(crate) trait FieldScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
{
}

impl<T> FieldScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + std::ops::Sub<Output = Self>
        + std::ops::Mul<Output = Self>
        + std::ops::Div<Output = Self>
{
}

/// Solves `sum_j x_j * columns[j] = rhs` exactly.  Returns one solution
/// (free variables set to zero) or `None` when the system is
/// inconsistent.
pub(crate) fn solve_in_span<F: FieldScalar>(columns: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));

    // Augmented matrix [A | rhs] in row-major order.
    let mut m: Vec<Vec<F>> = (0..rows)
        .map(|i| {
            let mut row: Vec<F> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][col].clone();
        for x in m[r][col..].iter_mut() {
            *x = x.clone() / pv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    m[i][j] = m[i][j].clone() - f.clone() * m[r][j].clone();
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }

    // Rows below the last pivot have an all-zero coefficient part; a
    // nonzero augmented entry there means the system is inconsistent.
    if m.iter().skip(r).any(|row| !row[cols].is_zero()) {
        return None;
    }

    let mut sol = vec![F::zero(); cols];
    for (row, col) in pivots {
        sol[col] = m[row][cols].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn solves_a_consistent_system() {
        // x*(1,0) + y*(1,1) = (3,2)  =>  y=2, x=1
        let cols = vec![vec![r(1), r(0)], vec![r(1), r(1)]];
        let sol = solve_in_span(&cols, &[r(3), r(2)]).unwrap();
        assert_eq!(sol, vec![r(1), r(2)]);
    }

    #[test]
    fn detects_inconsistency() {
        // (1,2) and (2,4) span a line missing (1,0)
        let cols = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_in_span(&cols, &[r(1), r(0)]).is_none());
    }

    #[test]
    fn handles_redundant_columns() {
        let cols = vec![vec![r(1), r(1)], vec![r(2), r(2)], vec![r(0), r(1)]];
        let sol = solve_in_span(&cols, &[r(4), r(5)]).unwrap();
        // verify the combination reproduces the rhs
        let combo: Vec<BigRational> = (0..2)
            .map(|i| {
                sol.iter()
                    .zip(&cols)
                    .map(|(x, c)| x.clone() * c[i].clone())
                    .fold(r(0), |a, b| a + b)
            })
            .collect();
        assert_eq!(combo, vec![r(4), r(5)]);
    }

    #[test]
    fn empty_column_set_only_spans_zero() {
        let cols: Vec<Vec<BigRational>> = Vec::new();
        assert!(solve_in_span(&cols, &[r(0), r(0)]).is_some());
        assert!(solve_in_span(&cols, &[r(1), r(0)]).is_none());
    }
}
