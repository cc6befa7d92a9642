//! Exact linear solves over a finite field.

use crate::field::FieldElem;

/// Solves `matrix * u = rhs` for a square system by Gaussian elimination,
/// taking the first nonzero entry of each column as pivot. Returns `None`
/// when the matrix is singular.
pub fn solve_square(mut matrix: Vec<Vec<FieldElem>>, mut rhs: Vec<FieldElem>) -> Option<Vec<FieldElem>> {
    let n = rhs.len();
    debug_assert!(matrix.len() == n && matrix.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].inv().expect("pivot is nonzero");
        for entry in matrix[col].iter_mut() {
            *entry = &*entry * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        let pivot_row = matrix[col].clone();
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for (c, pivot) in pivot_row.iter().enumerate().skip(col) {
                let delta = &factor * pivot;
                matrix[r][c] = &matrix[r][c] - &delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] = &rhs[r] - &delta;
        }
    }
    Some(rhs)
}

/// Row `j` holds `node^j` for every node, for `j` in `0..rows`: the
/// transposed Vandermonde matrix of the moment conditions
/// `sum_node u(node) * node^j`.
pub fn moment_matrix(nodes: &[FieldElem], rows: usize) -> Vec<Vec<FieldElem>> {
    let Some(first) = nodes.first() else {
        return Vec::new();
    };
    let mut powers: Vec<FieldElem> = vec![first.field().one(); nodes.len()];
    (0..rows)
        .map(|_| {
            let row = powers.clone();
            for (p, x) in powers.iter_mut().zip(nodes) {
                *p = &*p * x;
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn solves_small_system() {
        let f = FieldSpec::prime(7).unwrap();
        let e = |v| f.from_int(v);
        // 2u + v = 3, u + 3v = 5  ->  u = 4/5 = 5, v = 3 - 10 = 0 (mod 7)
        let m = vec![vec![e(2), e(1)], vec![e(1), e(3)]];
        let u = solve_square(m.clone(), vec![e(3), e(5)]).unwrap();
        assert_eq!(&(&m[0][0] * &u[0]) + &(&m[0][1] * &u[1]), e(3));
        assert_eq!(&(&m[1][0] * &u[0]) + &(&m[1][1] * &u[1]), e(5));
    }

    #[test]
    fn needs_row_swap() {
        let f = FieldSpec::prime(5).unwrap();
        let e = |v| f.from_int(v);
        let u = solve_square(vec![vec![e(0), e(1)], vec![e(1), e(0)]], vec![e(2), e(3)]).unwrap();
        assert_eq!(u, vec![e(3), e(2)]);
    }

    #[test]
    fn singular_is_none() {
        let f = FieldSpec::prime(5).unwrap();
        let e = |v| f.from_int(v);
        assert!(solve_square(vec![vec![e(1), e(2)], vec![e(2), e(4)]], vec![e(1), e(1)]).is_none());
    }

    #[test]
    fn moment_rows() {
        let f = FieldSpec::prime(5).unwrap();
        let nodes: Vec<_> = [0, 1, 2].iter().map(|&v| f.from_int(v)).collect();
        let m = moment_matrix(&nodes, 3);
        let render: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        assert_eq!(render, [["1", "1", "1"], ["0", "1", "2"], ["0", "1", "4"]]);
    }
}
