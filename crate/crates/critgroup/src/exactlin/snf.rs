//! Smith normal form, fraction-free determinants, and the gcd-of-minors
//! oracle.
//!
//! The normal form is computed the classical way: repeatedly bring the entry
//! of smallest absolute value in the working submatrix to the pivot position,
//! reduce its row and column with nearest-quotient combinations, and once the
//! matrix is diagonal repair the divisibility chain with pairwise gcd/lcm
//! swaps. Arbitrary precision removes any overflow concern; for the matrix
//! sizes this crate sweeps (a few dozen rows) coefficient growth is a
//! non-issue.

use super::{ExactError, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Diagonal of a Smith normal form: nonnegative, each entry divides the
/// next, zeros only at the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form of an arbitrary integer matrix. Total function.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w: Vec<BigInt> = m.entries().to_vec();
    let k = rows.min(cols);

    'pivot: for t in 0..k {
        loop {
            // Re-select the smallest-magnitude nonzero entry as the pivot on
            // every round; remainders from the reductions below shrink it.
            let Some((pi, pj)) = find_pivot(&w, rows, cols, t) else { break 'pivot };
            swap_rows(&mut w, cols, t, pi);
            swap_cols(&mut w, rows, cols, t, pj);
            let p = w[t * cols + t].clone();

            // While some entry in the pivot column or row is not a multiple
            // of the pivot, knock it down to its remainder and start over.
            // Fill-in only ever happens through exact quotients below.
            if let Some(i) =
                (t + 1..rows).find(|&i| !(&w[i * cols + t] % &p).is_zero())
            {
                let q = nearest_quotient(&w[i * cols + t], &p);
                row_submul(&mut w, cols, i, t, &q);
                continue;
            }
            if let Some(j) =
                (t + 1..cols).find(|&j| !(&w[t * cols + j] % &p).is_zero())
            {
                let q = nearest_quotient(&w[t * cols + j], &p);
                col_submul(&mut w, rows, cols, j, t, &q);
                continue;
            }

            // The pivot divides its whole column and row: clear both with
            // exact quotients. The column goes first, so the column pass has
            // nothing left below row t and cannot re-dirty it.
            for i in t + 1..rows {
                if !w[i * cols + t].is_zero() {
                    let q = &w[i * cols + t] / &p;
                    row_submul(&mut w, cols, i, t, &q);
                }
            }
            for j in t + 1..cols {
                if !w[t * cols + j].is_zero() {
                    let q = &w[t * cols + j] / &p;
                    col_submul(&mut w, rows, cols, j, t, &q);
                }
            }
            break;
        }
    }

    let mut diagonal: Vec<BigInt> = (0..k).map(|t| w[t * cols + t].abs()).collect();
    repair_chain(&mut diagonal);
    SmithForm { diagonal, rows, cols }
}

/// Pairwise gcd/lcm merge until every diagonal entry divides the next.
/// `diag(a, b) ~ diag(gcd(a,b), lcm(a,b))` over the integers, so this keeps
/// the equivalence class while enforcing the chain.
fn repair_chain(d: &mut [BigInt]) {
    loop {
        let mut changed = false;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if !divides(&d[i], &d[j]) {
                    let g = d[i].gcd(&d[j]);
                    let l = if d[i].is_zero() || d[j].is_zero() {
                        BigInt::zero()
                    } else {
                        (&d[i] * &d[j]) / &g
                    };
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// `a | b` with the convention that every integer divides 0.
pub(crate) fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

fn find_pivot(w: &[BigInt], rows: usize, cols: usize, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..rows {
        for j in t..cols {
            let v = &w[i * cols + j];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

/// Quotient minimizing the remainder: `|x - q*p| <= |p| / 2`.
fn nearest_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (mut q, r) = x.div_rem(p);
    if r.abs() * 2 > p.abs() {
        if r.sign() == p.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn swap_rows(w: &mut [BigInt], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..cols {
        w.swap(a * cols + j, b * cols + j);
    }
}

fn swap_cols(w: &mut [BigInt], rows: usize, cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..rows {
        w.swap(i * cols + a, i * cols + b);
    }
}

/// `row[i] -= q * row[t]`
fn row_submul(w: &mut [BigInt], cols: usize, i: usize, t: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..cols {
        let d = q * &w[t * cols + j];
        w[i * cols + j] -= d;
    }
}

/// `col[j] -= q * col[t]`
fn col_submul(w: &mut [BigInt], rows: usize, cols: usize, j: usize, t: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..rows {
        let d = q * &w[i * cols + t];
        w[i * cols + j] -= d;
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// performed is exact, so no rationals are ever needed.
pub fn det(m: &IntMatrix) -> Result<BigInt, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut w: Vec<BigInt> = m.entries().to_vec();
    det_in_place(&mut w, n)
}

fn det_in_place(w: &mut [BigInt], n: usize) -> Result<BigInt, ExactError> {
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n.saturating_sub(1) {
        if w[k * n + k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !w[i * n + k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            for j in 0..n {
                w.swap(k * n + j, s * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &w[i * n + j] * &w[k * n + k] - &w[i * n + k] * &w[k * n + j];
                w[i * n + j] = num / &prev; // exact by Bareiss
            }
            w[i * n + k] = BigInt::zero();
        }
        prev = w[k * n + k].clone();
    }
    let d = w[(n - 1) * n + (n - 1)].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Matrices larger than this on their short side are rejected by
/// [`minor_gcd`]; the number of minors grows combinatorially.
pub const MINOR_GCD_DIM_LIMIT: usize = 6;

/// Gcd of all `order x order` minors, the independent route to invariant
/// factors. Order 0 is defined as 1. This is an oracle, not a production
/// path, hence the hard size limit.
pub fn minor_gcd(m: &IntMatrix, order: usize) -> Result<BigInt, ExactError> {
    let min_dim = m.rows().min(m.cols());
    if min_dim > MINOR_GCD_DIM_LIMIT {
        return Err(ExactError::MinorDimTooLarge {
            rows: m.rows(),
            cols: m.cols(),
            limit: MINOR_GCD_DIM_LIMIT,
        });
    }
    if order == 0 {
        return Ok(BigInt::from(1));
    }
    if order > min_dim {
        return Err(ExactError::MinorOrderOutOfRange { order, max: min_dim });
    }
    let mut acc = BigInt::zero();
    let mut done = false;
    for_each_combination(m.rows(), order, |rows_sel| {
        if done {
            return;
        }
        for_each_combination(m.cols(), order, |cols_sel| {
            if done {
                return;
            }
            let mut sub: Vec<BigInt> = Vec::with_capacity(order * order);
            for &i in rows_sel {
                for &j in cols_sel {
                    sub.push(m[(i, j)].clone());
                }
            }
            let d = det_in_place(&mut sub, order).expect("square by construction");
            acc = acc.gcd(&d);
            if acc == BigInt::from(1) {
                done = true;
            }
        });
    });
    Ok(acc)
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    debug_assert!(k >= 1 && k <= n);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next lexicographic k-subset of 0..n
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Random unimodular matrix built as a product of at most `ops` elementary
/// operations (row additions with small coefficients, swaps, negations).
pub fn random_unimodular(n: usize, ops: usize, rng: &mut impl Rng) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if n > 1 {
                    while j == i {
                        j = rng.gen_range(0..n);
                    }
                    let c = BigInt::from(rng.gen_range(-3i64..=3));
                    for col in 0..n {
                        let d = &c * &u[(j, col)];
                        u[(i, col)] += d;
                    }
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    for col in 0..n {
                        let a = u[(i, col)].clone();
                        u[(i, col)] = u[(j, col)].clone();
                        u[(j, col)] = a;
                    }
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                for col in 0..n {
                    let v = -u[(i, col)].clone();
                    u[(i, col)] = v;
                }
            }
        }
    }
    u
}
