//! Exact rank computation by fraction-free (Bareiss) Gaussian elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::Rat;

/// Rank of a rational matrix. Rows are cleared to integers first, then
/// eliminated fraction-free so intermediate entries stay in `Z`.
pub fn rank_rational(rows: &[Vec<Rat>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|row| clear_denominators(row)).collect();
    rank_bigint(int_rows)
}

fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in row {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

/// Bareiss single-step fraction-free elimination; every division is exact.
pub fn rank_bigint(mut mat: Vec<Vec<BigInt>>) -> usize {
    let nrows = mat.len();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // smallest nonzero pivot keeps entry growth down
        let pivot = (rank..nrows)
            .filter(|&r| !mat[r][col].is_zero())
            .min_by_key(|&r| mat[r][col].magnitude().bits());
        let Some(pr) = pivot else { continue };
        mat.swap(rank, pr);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let num = &mat[rank][col] * &mat[i][j] - &mat[i][col] * &mat[rank][j];
                let q = &num / &prev;
                debug_assert!(&q * &prev == num, "Bareiss division not exact");
                mat[i][j] = q;
            }
            mat[i][col] = BigInt::zero();
        }
        prev = mat[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    #[test]
    fn rank_of_rational_matrix() {
        let rows = vec![
            vec![rat(1, 2), rat(1, 3), rat_int(0)],
            vec![rat_int(1), rat(2, 3), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat(5, 7)],
        ];
        // row 2 = 2 * row 1
        assert_eq!(rank_rational(&rows), 2);
    }

    #[test]
    fn rank_full_and_zero() {
        let id: Vec<Vec<Rat>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { rat_int(1) } else { rat_int(0) }).collect())
            .collect();
        assert_eq!(rank_rational(&id), 4);
        let z = vec![vec![rat_int(0); 3]; 2];
        assert_eq!(rank_rational(&z), 0);
    }
}
