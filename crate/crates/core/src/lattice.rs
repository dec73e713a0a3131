//! Exact integer and rational linear algebra: the kernel lattice of `A`, its
//! Gale dual, Hermite and Smith normal forms, and affine solves over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: Vec<Vec<i64>>,
    cols: usize,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(IntegerMatrix { rows, cols })
    }

    pub fn from_columns(cols: &[Vec<i64>], nrows: usize) -> Self {
        let rows = (0..nrows)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        IntegerMatrix {
            rows,
            cols: cols.len(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        IntegerMatrix { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntegerMatrix {
        IntegerMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| idx.iter().map(|&j| r[j]).collect())
                .collect(),
            cols: idx.len(),
        }
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_vec_q(&self, x: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(Q::zero(), |acc, (&a, b)| acc + b * BigInt::from(a))
            })
            .collect()
    }

    fn to_q_rows(&self) -> Vec<Vec<Q>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.to_q_rows();
        row_echelon(&mut m).len()
    }

    /// True iff all columns lie on one affine hyperplane off the origin,
    /// i.e. `(1, ..., 1)` is in the row space.
    pub fn is_homogeneous(&self) -> bool {
        if self.cols == 0 {
            return true;
        }
        let mut with_ones = self.rows.clone();
        with_ones.push(vec![1; self.cols]);
        IntegerMatrix::new(with_ones).map(|m| m.rank()).unwrap_or(0) == self.rank()
    }
}

/// Integer basis `B` of `ker_Z(A)`. Columns are `b_1..b_{n-d}`; row `i` is
/// the Gale covector `g_i`. The basis is the row Hermite normal form of the
/// lattice, so it is canonical for the lattice and byte-stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    n: usize,
    columns: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    /// Rebuilds a basis from columns already in echelon form (as produced by
    /// [`kernel_lattice_basis`]); `None` otherwise.
    pub fn from_echelon_columns(n: usize, columns: Vec<Vec<i64>>) -> Option<Self> {
        let mut pivots = Vec::with_capacity(columns.len());
        for c in &columns {
            if c.len() != n {
                return None;
            }
            let p = c.iter().position(|&x| x != 0)?;
            if pivots.last().is_some_and(|&last| p <= last) {
                return None;
            }
            pivots.push(p);
        }
        Some(LatticeBasis { n, columns, pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(&self.columns, self.n)
    }

    /// Gale covector `g_i` (row `i` of `B`).
    pub fn covector(&self, i: usize) -> Vec<i64> {
        self.columns.iter().map(|c| c[i]).collect()
    }

    /// `u = B x`.
    pub fn lift(&self, x: &[i64]) -> Vec<i64> {
        let mut u = vec![0i64; self.n];
        for (c, &xi) in self.columns.iter().zip(x) {
            for (ui, &ci) in u.iter_mut().zip(c) {
                *ui += ci * xi;
            }
        }
        u
    }

    /// Gale coordinates of `u`, or `None` when `u` is not in the lattice.
    pub fn coordinates(&self, u: &[i64]) -> Option<Vec<i64>> {
        if u.len() != self.n {
            return None;
        }
        let mut x = Vec::with_capacity(self.columns.len());
        for (r, &p) in self.pivots.iter().enumerate() {
            let partial: i64 = (0..r).map(|s| x[s] * self.columns[s][p]).sum();
            let rem = u[p] - partial;
            let piv = self.columns[r][p];
            if rem % piv != 0 {
                return None;
            }
            x.push(rem / piv);
        }
        (self.lift(&x) == u).then_some(x)
    }
}

/// Saturated kernel basis of `a`, checked against the declared rank.
pub fn kernel_lattice_basis(a: &IntegerMatrix, declared_rank: usize) -> Result<LatticeBasis> {
    let n = a.ncols();
    let mut m: Vec<Vec<BigInt>> = a
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();

    // Column-style echelon form A U = [H | 0] with U unimodular.
    let mut c = 0;
    for i in 0..m.len() {
        if c == n {
            break;
        }
        for j in (c + 1)..n {
            if m[i][j].is_zero() {
                continue;
            }
            let (a_ic, a_ij) = (m[i][c].clone(), m[i][j].clone());
            let eg = a_ic.extended_gcd(&a_ij);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (p, r) = (-(&a_ij / &g), &a_ic / &g);
            column_combine(&mut m, c, j, &x, &y, &p, &r);
            column_combine(&mut u, c, j, &x, &y, &p, &r);
        }
        if !m[i][c].is_zero() {
            c += 1;
        }
    }
    if c != declared_rank {
        return Err(Error::RankMismatch {
            declared: declared_rank,
            computed: c,
        });
    }

    let kernel_rows: Vec<Vec<BigInt>> = (c..n)
        .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
        .collect();
    let (hnf, pivots) = row_hnf(kernel_rows);
    let columns = hnf
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::Internal("kernel entry overflows i64".into()))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeBasis { n, columns, pivots })
}

// col_c <- x col_c + y col_j ; col_j <- p col_c + r col_j (simultaneously)
fn column_combine(
    m: &mut [Vec<BigInt>],
    c: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    p: &BigInt,
    r: &BigInt,
) {
    for row in m.iter_mut() {
        let (vc, vj) = (row[c].clone(), row[j].clone());
        row[c] = x * &vc + y * &vj;
        row[j] = p * &vc + r * &vj;
    }
}

/// Row Hermite normal form: positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, zero rows dropped. Returns rows and pivot
/// columns.
pub fn row_hnf(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        // gcd-combine rows r.. at this column into row r
        for k in (r + 1)..rows.len() {
            if rows[k][col].is_zero() {
                continue;
            }
            let (a, b) = (rows[r][col].clone(), rows[k][col].clone());
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (p, s) = (-(&b / &g), &a / &g);
            for t in 0..ncols {
                let (vr, vk) = (rows[r][t].clone(), rows[k][t].clone());
                rows[r][t] = &x * &vr + &y * &vk;
                rows[k][t] = &p * &vr + &s * &vk;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for t in rows[r].iter_mut() {
                *t = -t.clone();
            }
        }
        let piv = rows[r][col].clone();
        for k in 0..r {
            let f = rows[k][col].div_floor(&piv);
            if !f.is_zero() {
                for t in 0..ncols {
                    let sub = &f * &rows[r][t];
                    rows[k][t] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Diagonal of the Smith normal form (nonzero elementary divisors only).
pub fn elementary_divisors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in (t + 1)..nr {
            let f = a[i][t].div_floor(&a[t][t]);
            for j in t..nc {
                let sub = &f * &a[t][j];
                a[i][j] -= sub;
            }
            clean &= a[i][t].is_zero();
        }
        for j in (t + 1)..nc {
            let f = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let sub = &f * &row[t];
                row[j] -= sub;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // divisibility condition on the trailing block
        let piv = a[t][t].clone();
        let offender = (t + 1..nr)
            .flat_map(|i| (t + 1..nc).map(move |j| (i, j)))
            .find(|&(i, j)| !(a[i][j].clone() % &piv).is_zero());
        if let Some((i, _)) = offender {
            for j in t..nc {
                let add = a[i][j].clone();
                a[t][j] += add;
            }
            continue;
        }
        divisors.push(piv.abs());
        t += 1;
    }
    divisors
}

/// Reduces `m` in place to reduced row echelon form, returning pivot columns.
pub fn row_echelon(m: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][col];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSolution {
    Unique(Vec<Q>),
    NoSolution,
    PositiveDimensional,
}

/// Classifies the solution set of `m x = rhs` over `Q`.
pub fn solve_affine(m: &IntegerMatrix, rhs: &[Q]) -> AffineSolution {
    let nc = m.ncols();
    let mut aug: Vec<Vec<Q>> = m
        .rows()
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row: Vec<Q> = r.iter().map(|&x| q(x)).collect();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    if pivots.contains(&nc) {
        return AffineSolution::NoSolution;
    }
    if pivots.len() < nc {
        return AffineSolution::PositiveDimensional;
    }
    let mut x = vec![Q::zero(); nc];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][nc].clone();
    }
    AffineSolution::Unique(x)
}

/// Integer kernel of the rows `vecs` (each of length `k`), as a list of
/// primitive integer vectors spanning the rational kernel.
pub fn integer_kernel(vecs: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    if vecs.is_empty() {
        return (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    let m = IntegerMatrix::new(vecs.to_vec()).expect("rectangular");
    let r = m.rank();
    kernel_lattice_basis(&m, r)
        .map(|b| b.columns().to_vec())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qr, qvec};

    fn mat(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn kernel_of_rational_normal_curve() {
        let a = mat(&[&[1, 1, 1], &[0, 1, 2]]);
        let b = kernel_lattice_basis(&a, 2).unwrap();
        assert_eq!(b.columns(), &[vec![1, -2, 1]]);
    }

    #[test]
    fn kernel_of_example_with_two_dimensional_lattice() {
        let a = mat(&[&[1, 1, 1, 1, 1], &[-1, 1, 1, -1, 0], &[-1, -1, 1, 1, 0]]);
        let b = kernel_lattice_basis(&a, 3).unwrap();
        assert_eq!(b.columns(), &[vec![1, 0, 1, 0, -2], vec![0, 1, 0, 1, -2]]);
        assert_eq!(b.covector(4), vec![-2, -2]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let b = kernel_lattice_basis(&IntegerMatrix::identity(2), 2).unwrap();
        assert_eq!(b.rank(), 0);
        assert_eq!(b.coordinates(&[0, 0]), Some(vec![]));
        assert_eq!(b.coordinates(&[1, 0]), None);
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let a = mat(&[&[1, 1, 1], &[2, 2, 2]]);
        assert_eq!(
            kernel_lattice_basis(&a, 2),
            Err(Error::RankMismatch {
                declared: 2,
                computed: 1
            })
        );
    }

    #[test]
    fn gale_coordinates_round_trip() {
        let a = mat(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let b = kernel_lattice_basis(&a, 2).unwrap();
        let u = vec![2, -5, 7, -4];
        let x = b.coordinates(&u).unwrap();
        assert_eq!(b.lift(&x), u);
        assert!(b.coordinates(&[1, 0, 0, 0]).is_none());
    }

    #[test]
    fn homogeneity() {
        assert!(mat(&[&[1, 1, 1], &[0, 1, 2]]).is_homogeneous());
        assert!(!mat(&[&[1, 2, 3]]).is_homogeneous());
    }

    #[test]
    fn solve_affine_cases() {
        // columns 2,3 of [[1,1,1],[0,1,2]] with beta = (10, 8)
        let m = mat(&[&[1, 1], &[1, 2]]);
        assert_eq!(
            solve_affine(&m, &qvec(&[10, 8])),
            AffineSolution::Unique(qvec(&[12, -2]))
        );
        let rhs = vec![qr(1, 3), q(-4)];
        assert_eq!(
            solve_affine(&IntegerMatrix::identity(2), &rhs),
            AffineSolution::Unique(rhs.clone())
        );
        assert_eq!(
            solve_affine(&mat(&[&[1, 1], &[2, 2]]), &qvec(&[0, 1])),
            AffineSolution::NoSolution
        );
        assert_eq!(
            solve_affine(&mat(&[&[1, 1]]), &qvec(&[3])),
            AffineSolution::PositiveDimensional
        );
    }

    #[test]
    fn smith_divisors() {
        let m = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            elementary_divisors(&m),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        let m = mat(&[&[1, 0], &[-2, 1], &[2, -3], &[-1, 2]]);
        assert!(elementary_divisors(&m).iter().all(|d| d.is_one()));
    }
}
