//! Exact linear algebra: solving, kernels, inverses, and the integer-lattice
//! tools (Hermite normal form, saturation, Diophantine solving) used by the
//! quotient machinery.

use super::{primitive_integer_ray, ExactError, Integer, RatMatrix, RatVector, Rational};
use num::{Integer as NumInteger, One, Signed, Zero};

/// Result of [`solve_linear`]: one particular solution (if the system is
/// consistent) and a canonical basis of `ker(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub solution: Option<RatVector>,
    pub kernel: Vec<RatVector>,
}

struct Echelon {
    rows: Vec<RatVector>,
    /// `(row, col)` pivot positions in order.
    pivots: Vec<(usize, usize)>,
    ncols: usize,
}

/// Reduced row echelon form by exact Gaussian elimination. Deterministic:
/// pivots are the first nonzero entry scanning columns left to right.
fn rref(m: &RatMatrix) -> Echelon {
    let mut rows: Vec<Vec<Rational>> = m.rows().iter().map(|r| r.entries().to_vec()).collect();
    let ncols = m.ncols();
    let mut pivots = Vec::new();
    let mut r0 = 0usize;
    for c in 0..ncols {
        let Some(pr) = (r0..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r0, pr);
        let inv = rows[r0][c].clone().recip();
        for e in rows[r0].iter_mut() {
            *e = &*e * &inv;
        }
        for i in 0..rows.len() {
            if i != r0 && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &rows[r0][j] * &f;
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push((r0, c));
        r0 += 1;
        if r0 == rows.len() {
            break;
        }
    }
    Echelon {
        rows: rows.into_iter().map(RatVector::new).collect(),
        pivots,
        ncols,
    }
}

/// Canonical kernel basis of `A`, one vector per free column, each reduced to
/// a primitive integer vector with positive leading entry.
pub fn rational_kernel(m: &RatMatrix) -> Vec<RatVector> {
    let ech = rref(m);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for f in 0..ech.ncols {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![Rational::zero(); ech.ncols];
        v[f] = Rational::one();
        for &(r, c) in &ech.pivots {
            v[c] = -ech.rows[r][f].clone();
        }
        basis.push(normalize_sign(&RatVector::new(v)));
    }
    basis
}

fn normalize_sign(v: &RatVector) -> RatVector {
    let p = primitive_integer_ray(v).expect("kernel vector is nonzero");
    match p.iter().find(|e| !e.is_zero()) {
        Some(e) if e.is_negative() => -&p,
        _ => p,
    }
}

/// Solves `A x = b` exactly. Returns one solution (absent when inconsistent)
/// together with a kernel basis of `A`.
pub fn solve_linear(a: &RatMatrix, b: &RatVector) -> Result<LinearSolution, ExactError> {
    if a.nrows() != b.dim() {
        return Err(ExactError::DimensionMismatch {
            expected: a.nrows(),
            got: b.dim(),
        });
    }
    let mut rows: Vec<RatVector> = a
        .rows()
        .iter()
        .zip(b.iter())
        .map(|(r, e)| {
            let mut es = r.entries().to_vec();
            es.push(e.clone());
            RatVector::new(es)
        })
        .collect();
    if rows.is_empty() {
        // 0 x n system: everything solves it.
        rows = Vec::new();
    }
    let aug = RatMatrix::with_shape(rows, a.ncols() + 1);
    let ech = rref(&aug);
    let inconsistent = ech.pivots.iter().any(|&(_, c)| c == a.ncols());
    let solution = if inconsistent {
        None
    } else {
        let mut x = vec![Rational::zero(); a.ncols()];
        for &(r, c) in &ech.pivots {
            x[c] = ech.rows[r][a.ncols()].clone();
        }
        Some(RatVector::new(x))
    };
    Ok(LinearSolution {
        solution,
        kernel: rational_kernel(a),
    })
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    rref(m).pivots.len()
}

/// Exact inverse of a square matrix, or `None` when singular.
pub fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    assert!(m.is_square(), "invert expects a square matrix");
    let n = m.nrows();
    let aug = RatMatrix::with_shape(
        m.rows()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut es = r.entries().to_vec();
                es.extend(RatVector::unit(n, i).entries().iter().cloned());
                RatVector::new(es)
            })
            .collect(),
        2 * n,
    );
    let ech = rref(&aug);
    if ech.pivots.len() < n || ech.pivots.iter().any(|&(_, c)| c >= n) {
        return None;
    }
    Some(RatMatrix::with_shape(
        ech.rows
            .iter()
            .take(n)
            .map(|r| RatVector::new(r.entries()[n..].to_vec()))
            .collect(),
        n,
    ))
}

/// Exact determinant. The empty matrix has determinant 1.
pub fn determinant(m: &RatMatrix) -> Rational {
    assert!(m.is_square(), "determinant expects a square matrix");
    let n = m.nrows();
    let mut rows: Vec<Vec<Rational>> = m.rows().iter().map(|r| r.entries().to_vec()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return Rational::zero();
        };
        if pr != c {
            rows.swap(c, pr);
            det = -det;
        }
        det *= rows[c][c].clone();
        let inv = rows[c][c].clone().recip();
        for i in (c + 1)..n {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                for j in c..n {
                    let t = &rows[c][j] * &f;
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Integer-lattice tools.
// ---------------------------------------------------------------------------

fn to_integer_rows(rows: &[RatVector]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|r| {
            let p = primitive_integer_ray(r).expect("integer row must be nonzero");
            p.iter().map(|e| e.to_integer()).collect()
        })
        .collect()
}

/// Canonical Hermite-normal-form basis (rows) of the lattice spanned by the
/// given integer rows. Pivots positive, entries above pivots reduced.
fn hnf_rows(mut rows: Vec<Vec<Integer>>, ncols: usize) -> Vec<Vec<Integer>> {
    let mut r0 = 0usize;
    for c in 0..ncols {
        loop {
            let mut best: Option<usize> = None;
            for i in r0..rows.len() {
                if !rows[i][c].is_zero()
                    && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r0, b);
            let mut others = false;
            for i in (r0 + 1)..rows.len() {
                if !rows[i][c].is_zero() {
                    let q = rows[i][c].div_floor(&rows[r0][c]);
                    if !q.is_zero() {
                        for j in 0..ncols {
                            let t = &rows[r0][j] * &q;
                            rows[i][j] -= t;
                        }
                    }
                    if !rows[i][c].is_zero() {
                        others = true;
                    }
                }
            }
            if !others {
                break;
            }
        }
        if r0 < rows.len() && !rows[r0][c].is_zero() {
            if rows[r0][c].is_negative() {
                for e in rows[r0].iter_mut() {
                    *e = -e.clone();
                }
            }
            // Reduce entries above the pivot into [0, pivot).
            for i in 0..r0 {
                let q = rows[i][c].div_floor(&rows[r0][c]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let t = &rows[r0][j] * &q;
                        rows[i][j] -= t;
                    }
                }
            }
            r0 += 1;
        }
    }
    rows.truncate(r0);
    rows
}

fn int_rows_to_vectors(rows: Vec<Vec<Integer>>) -> Vec<RatVector> {
    rows.into_iter()
        .map(|r| RatVector::new(r.into_iter().map(Rational::from).collect()))
        .collect()
}

/// Basis of `{x in Z^dim : <row, x> = 0 for every row}`, saturated and in
/// canonical HNF form. Empty row list yields the standard basis.
pub fn integer_kernel_basis(rows: &[RatVector], dim: usize) -> Vec<RatVector> {
    let nonzero: Vec<RatVector> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return (0..dim).map(|i| RatVector::unit(dim, i)).collect();
    }
    let b = to_integer_rows(&nonzero);
    let m = b.len();
    // Column elimination on B with a unimodular transform U mirrored on the
    // right: columns of U whose image column becomes zero span the kernel.
    let mut work = b;
    let mut u: Vec<Vec<Integer>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Integer::one() } else { Integer::zero() })
                .collect()
        })
        .collect();
    // u is stored as columns: u[j] is the j-th column.
    let mut p = 0usize;
    for r in 0..m {
        if p >= dim {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in p..dim {
                if !work[r][j].is_zero()
                    && best.is_none_or(|b| work[r][j].abs() < work[r][b].abs())
                {
                    best = Some(j);
                }
            }
            let Some(bj) = best else { break };
            if bj != p {
                for row in work.iter_mut() {
                    row.swap(p, bj);
                }
                u.swap(p, bj);
            }
            let mut remaining = false;
            for j in (p + 1)..dim {
                if !work[r][j].is_zero() {
                    let q = work[r][j].div_floor(&work[r][p]);
                    if !q.is_zero() {
                        for row in work.iter_mut() {
                            let t = &row[p] * &q;
                            row[j] -= t;
                        }
                        let up = u[p].clone();
                        for (e, s) in u[j].iter_mut().zip(up.iter()) {
                            *e -= s * &q;
                        }
                    }
                    if !work[r][j].is_zero() {
                        remaining = true;
                    }
                }
            }
            if !remaining {
                break;
            }
        }
        if !work[r][p].is_zero() {
            p += 1;
        }
    }
    let kernel: Vec<Vec<Integer>> = (p..dim).map(|j| u[j].clone()).collect();
    int_rows_to_vectors(hnf_rows(kernel, dim))
}

/// Canonical HNF basis of `span_Q(vectors) meet Z^dim` (the saturation).
pub fn saturate_lattice(vectors: &[RatVector], dim: usize) -> Vec<RatVector> {
    let nonzero: Vec<RatVector> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let orth = rational_kernel(&RatMatrix::with_shape(nonzero, dim));
    integer_kernel_basis(&orth, dim)
}

/// One integer solution of `A x = b` for integer `A`, `b`, or `None` when no
/// integer solution exists.
pub fn diophantine_solve(a: &RatMatrix, b: &RatVector) -> Option<RatVector> {
    assert_eq!(a.nrows(), b.dim());
    assert!(a.is_integer() && super::is_integer_vector(b));
    let dim = a.ncols();
    let m = a.nrows();
    let mut work: Vec<Vec<Integer>> = a
        .rows()
        .iter()
        .map(|r| r.iter().map(|e| e.to_integer()).collect())
        .collect();
    let mut u: Vec<Vec<Integer>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Integer::one() } else { Integer::zero() })
                .collect()
        })
        .collect();
    let mut pivots: Vec<Option<usize>> = vec![None; m];
    let mut p = 0usize;
    for r in 0..m {
        if p < dim {
            loop {
                let mut best: Option<usize> = None;
                for j in p..dim {
                    if !work[r][j].is_zero()
                        && best.is_none_or(|b| work[r][j].abs() < work[r][b].abs())
                    {
                        best = Some(j);
                    }
                }
                let Some(bj) = best else { break };
                if bj != p {
                    for row in work.iter_mut() {
                        row.swap(p, bj);
                    }
                    u.swap(p, bj);
                }
                let mut remaining = false;
                for j in (p + 1)..dim {
                    if !work[r][j].is_zero() {
                        let q = work[r][j].div_floor(&work[r][p]);
                        if !q.is_zero() {
                            for row in work.iter_mut() {
                                let t = &row[p] * &q;
                                row[j] -= t;
                            }
                            let up = u[p].clone();
                            for (e, s) in u[j].iter_mut().zip(up.iter()) {
                                *e -= s * &q;
                            }
                        }
                        if !work[r][j].is_zero() {
                            remaining = true;
                        }
                    }
                }
                if !remaining {
                    break;
                }
            }
            if !work[r][p].is_zero() {
                pivots[r] = Some(p);
                p += 1;
            }
        }
    }
    // Forward substitution in the column-echelon system E y = b.
    let mut y = vec![Integer::zero(); dim];
    for r in 0..m {
        let mut s = Integer::zero();
        for j in 0..dim {
            if pivots[r] != Some(j) {
                s += &work[r][j] * &y[j];
            }
        }
        let rhs = b[r].to_integer() - s;
        match pivots[r] {
            Some(pc) => {
                let (q, rem) = rhs.div_rem(&work[r][pc]);
                if !rem.is_zero() {
                    return None;
                }
                y[pc] = q;
            }
            None => {
                if !rhs.is_zero() {
                    return None;
                }
            }
        }
    }
    // x = U y.
    let x: Vec<Integer> = (0..dim)
        .map(|i| (0..dim).map(|j| &u[j][i] * &y[j]).sum())
        .collect();
    Some(RatVector::new(x.into_iter().map(Rational::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn solve_identity() {
        let a = RatMatrix::identity(2);
        let b = RatVector::from_ints(&[3, 5]);
        let out = solve_linear(&a, &b).unwrap();
        assert_eq!(out.solution, Some(RatVector::from_ints(&[3, 5])));
        assert!(out.kernel.is_empty());
    }

    #[test]
    fn solve_one_equation_kernel() {
        let a = RatMatrix::from_int_rows(&[&[1, 1]]);
        let b = RatVector::from_ints(&[0]);
        let out = solve_linear(&a, &b).unwrap();
        assert_eq!(out.solution, Some(RatVector::from_ints(&[0, 0])));
        assert_eq!(out.kernel, vec![RatVector::from_ints(&[1, -1])]);
    }

    #[test]
    fn solve_inconsistent_rank_deficient() {
        // Second row is twice the first but the right sides disagree.
        let a = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let b = RatVector::from_ints(&[1, 3]);
        let out = solve_linear(&a, &b).unwrap();
        assert_eq!(out.solution, None);
        assert_eq!(out.kernel, vec![RatVector::from_ints(&[2, -1])]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = RatMatrix::from_int_rows(&[&[1, 2]]);
        let b = RatVector::from_ints(&[1, 3]);
        assert!(solve_linear(&a, &b).is_err());
    }

    #[test]
    fn invert_and_determinant() {
        let m = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv, RatMatrix::from_int_rows(&[&[1, -1], &[-1, 2]]));
        assert_eq!(determinant(&m), int(1));
        assert_eq!(determinant(&RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]])), int(0));
        assert!(invert(&RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]])).is_none());
        let half = RatMatrix::from_rows(vec![RatVector::new(vec![rat(1, 2)])]);
        assert_eq!(invert(&half).unwrap(), RatMatrix::from_int_rows(&[&[2]]));
    }

    #[test]
    fn hnf_kernel_of_single_row() {
        // {x : 2x + 3y = 0} in Z^2 is generated by (3, -2); HNF sign rule
        // makes the leading entry positive.
        let k = integer_kernel_basis(&[RatVector::from_ints(&[2, 3])], 2);
        assert_eq!(k, vec![RatVector::from_ints(&[3, -2])]);
    }

    #[test]
    fn saturation_of_scaled_span() {
        // span{(2, 4)} meets Z^2 in the lattice generated by (1, 2).
        let s = saturate_lattice(&[RatVector::from_ints(&[2, 4])], 2);
        assert_eq!(s, vec![RatVector::from_ints(&[1, 2])]);
    }

    #[test]
    fn diophantine_preimage() {
        // Rows of the projection span a primitive lattice, so every unit
        // vector has an integer preimage.
        let a = RatMatrix::from_int_rows(&[&[0, 1]]);
        let x = diophantine_solve(&a, &RatVector::from_ints(&[1])).unwrap();
        assert_eq!(a.mul_vec(&x), RatVector::from_ints(&[1]));
        // 2x = 1 has no integer solution.
        let a2 = RatMatrix::from_int_rows(&[&[2]]);
        assert!(diophantine_solve(&a2, &RatVector::from_ints(&[1])).is_none());
    }
}
