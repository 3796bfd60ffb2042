//! Exact linear algebra over the rationals: fraction-free rank, nullspace
//! bases, and coordinates of a vector in the span of a basis.
//!
//! Everything here uses fixed deterministic pivoting (first nonzero column,
//! smallest row index), so bases and ranks are reproducible across runs and
//! platforms. Rational input rows are cleared to integers first; the forward
//! pass is one-step Bareiss elimination, which keeps all intermediate
//! entries integral and bounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ratpoly::Rational;

/// Multiplies each row by the lcm of its denominators, yielding an integer
/// matrix with the same row space and nullspace.
fn clear_denominators(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for entry in row {
                lcm = lcm.lcm(entry.denom());
            }
            row.iter()
                .map(|entry| {
                    let scaled = Rational::from_big(lcm.clone(), BigInt::one());
                    let v = &scaled * entry;
                    debug_assert!(v.denom().is_one());
                    v.numer().clone()
                })
                .collect()
        })
        .collect()
}

struct Echelon {
    mat: Vec<Vec<BigInt>>,
    /// Pivot columns in order; `pivots.len()` is the rank.
    pivots: Vec<usize>,
}

/// One-step Bareiss fraction-free forward elimination.
fn bareiss_echelon(mut mat: Vec<Vec<BigInt>>) -> Echelon {
    let m = mat.len();
    let n = if m == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..m).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, piv);
        for i in r + 1..m {
            for j in c + 1..n {
                let num = &mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][c] = BigInt::zero();
        }
        prev = mat[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    Echelon { mat, pivots }
}

/// Exact rank over `Q` via fraction-free Bareiss elimination.
pub fn exact_rank(rows: &[Vec<Rational>]) -> usize {
    bareiss_echelon(clear_denominators(rows)).pivots.len()
}

/// Scales a rational vector to primitive integer form: integer entries with
/// content 1, keeping the sign of every entry.
fn primitive_scale(vec: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for v in &vec {
        lcm = lcm.lcm(v.denom());
    }
    let mut gcd = BigInt::zero();
    for v in &vec {
        let n = v.numer() * &lcm / v.denom();
        gcd = gcd.gcd(&n);
    }
    if gcd.is_zero() {
        return vec;
    }
    vec.into_iter()
        .map(|v| {
            let n = v.numer() * &lcm / v.denom();
            Rational::from_big(n / &gcd, BigInt::one())
        })
        .collect()
}

/// Basis of the right nullspace `{ v : A v = 0 }`.
///
/// One basis vector per free column, ordered by free-column index, each in
/// primitive integer form with a positive entry at its free column.
pub fn nullspace_basis(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = if rows.is_empty() { 0 } else { rows[0].len() };
    if n == 0 {
        return Vec::new();
    }
    let ech = bareiss_echelon(clear_denominators(rows));
    let pivot_set: Vec<usize> = ech.pivots.clone();
    let mut basis = Vec::new();
    for fc in 0..n {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v = vec![Rational::zero(); n];
        v[fc] = Rational::one();
        // Back-substitute pivot variables from the last pivot row upward.
        for (k, &pc) in pivot_set.iter().enumerate().rev() {
            let row = &ech.mat[k];
            let mut acc = Rational::zero();
            for j in pc + 1..n {
                if !row[j].is_zero() && !v[j].is_zero() {
                    acc = &acc + &(&Rational::from_big(row[j].clone(), BigInt::one()) * &v[j]);
                }
            }
            v[pc] = -&(&acc * &Rational::from_big(BigInt::one(), row[pc].clone()));
        }
        basis.push(primitive_scale(v));
    }
    basis
}

/// Coordinates of `target` in the span of `basis` (vectors of equal length),
/// or `None` when `target` lies outside the span. When the basis vectors
/// are linearly independent the coordinates are unique.
pub fn solve_in_span(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = target.len();
    if k == 0 {
        return if target.iter().all(Rational::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    assert!(basis.iter().all(|b| b.len() == n), "basis length mismatch");
    // Augmented system [B | t] with columns of B the basis vectors.
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, piv);
        let inv = aug[r][c].recip();
        for e in &mut aug[r][c..=k] {
            *e = &*e * &inv;
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (e, p) in row[c..=k].iter_mut().zip(&pivot_row[c..=k]) {
                    *e = &*e - &(&factor * p);
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == n {
            break;
        }
    }
    // Inconsistent when a zero row of B has nonzero rhs.
    if aug[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut coords = vec![Rational::zero(); k];
    for &(row, col) in &pivots {
        coords[col] = aug[row][k].clone();
    }
    Some(coords)
}
