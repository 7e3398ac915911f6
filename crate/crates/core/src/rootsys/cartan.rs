//! Closed-form data for the irreducible families, written independently of
//! the coordinate realizations so that built systems can be checked against
//! it.

use super::Family;

/// `|R|` for the family at the given rank.
pub fn root_count(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank * (rank + 1),
        Family::B | Family::C => 2 * rank * rank,
        Family::D => 2 * rank * (rank - 1),
        Family::G2 => 12,
        Family::F4 => 48,
        Family::E6 => 72,
        Family::E8 => 240,
    }
}

/// Standard Cartan matrix, convention `a_ij = 2(α_i, α_j) / (α_j, α_j)`,
/// Bourbaki node numbering.
pub fn standard_cartan(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
        m[i - 1][j - 1] = a_ij;
        m[j - 1][i - 1] = a_ji;
    };
    match family {
        Family::A => (1..rank).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (1..rank - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 1, rank, -2, -1);
        }
        Family::C => {
            (1..rank - 1).for_each(|i| link(i, i + 1, -1, -1));
            if rank >= 2 {
                link(rank - 1, rank, -1, -2);
            }
        }
        Family::D => {
            (1..rank - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 2, rank, -1, -1);
        }
        Family::G2 => link(1, 2, -1, -3),
        Family::F4 => {
            link(1, 2, -1, -1);
            link(2, 3, -2, -1);
            link(3, 4, -1, -1);
        }
        Family::E6 | Family::E8 => {
            for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
                if i <= rank && j <= rank {
                    link(i, j, -1, -1);
                }
            }
        }
    }
    m
}
