//! Exact integer and rational linear algebra.
//!
//! Ranks come from fraction-free (Bareiss) elimination over `BigInt`; there is
//! no floating point anywhere in this module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer vector with arbitrary-precision entries.
pub type ExactVector = Vec<BigInt>;

pub fn vector_from_i64(v: &[i64]) -> ExactVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: Vec<ExactVector>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        ExactMatrix { rows: n, cols, data }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(cols, rows.iter().map(|r| vector_from_i64(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Stacks the rows of `other` below `self`.
    pub fn stack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Rank by fraction-free elimination. Every division is exact.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
            }
            let pivot = m[r * cols + c].clone();
            for i in r + 1..rows {
                let lead = m[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = &pivot * &m[i * cols + j] - &lead * &m[r * cols + j];
                    let (q, rem) = v.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[i * cols + j] = q;
                }
                m[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }
}

/// Matrix with rational entries `num / den` sharing one positive denominator.
#[derive(Debug, Clone)]
pub struct RationalMatrix {
    pub num: ExactMatrix,
    pub den: BigInt,
}

impl RationalMatrix {
    pub fn new(num: ExactMatrix, den: BigInt) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        RationalMatrix { num, den }
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        RationalMatrix {
            num: self.num.mul(&other.num),
            den: &self.den * &other.den,
        }
    }

    /// Exact equality of the represented rational matrices.
    pub fn equals(&self, other: &RationalMatrix) -> bool {
        self.num.nrows() == other.num.nrows()
            && self.num.ncols() == other.num.ncols()
            && self.num.scale(&other.den) == other.num.scale(&self.den)
    }

    /// Trace as a reduced fraction `(numerator, denominator)`.
    pub fn trace(&self) -> (BigInt, BigInt) {
        let t = self.num.trace();
        let g = t.gcd(&self.den);
        if g.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        (t / &g, &self.den / &g)
    }
}

fn content_normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Incrementally maintained row echelon basis of a subspace of `Q^n`,
/// kept integral by content normalization.
///
/// Each stored row also carries its expression as an integer combination of
/// the vectors that were accepted by [`EchelonBasis::insert`], which gives
/// exact span-membership certificates.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<(usize, ExactVector, ExactVector)>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Drops rows inserted after the basis had `len` rows.
    pub fn truncate(&mut self, len: usize) {
        self.rows.truncate(len);
    }

    /// Reduces `v` against the basis. Returns the residual and the
    /// combination `(α, β)` with `α·v − Σ β_j·accepted_j = residual`.
    fn reduce(&self, v: &[BigInt]) -> (ExactVector, BigInt, ExactVector) {
        assert_eq!(v.len(), self.dim);
        let mut res = v.to_vec();
        let mut alpha = BigInt::one();
        let mut combo = vec![BigInt::zero(); self.rows.len()];
        for (i, (pivot, row, _)) in self.rows.iter().enumerate() {
            let lead = res[*pivot].clone();
            if lead.is_zero() {
                continue;
            }
            let p = row[*pivot].clone();
            for (x, y) in res.iter_mut().zip(row) {
                *x = &p * &*x - &lead * y;
            }
            alpha *= &p;
            for c in combo.iter_mut() {
                *c *= &p;
            }
            combo[i] += &lead;
            let mut g = alpha.clone();
            for x in res.iter().chain(combo.iter()) {
                if !x.is_zero() {
                    g = g.gcd(x);
                }
            }
            if !g.is_one() && !g.is_zero() {
                alpha /= &g;
                for x in res.iter_mut().chain(combo.iter_mut()) {
                    *x /= &g;
                }
            }
        }
        (res, alpha, combo)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// For `v` in the span, the set of accepted vectors (by insertion index)
    /// with a nonzero coefficient in its unique expression; `None` otherwise.
    pub fn support_in_span(&self, v: &[BigInt]) -> Option<Vec<usize>> {
        let (res, _, combo) = self.reduce(v);
        if !res.iter().all(Zero::is_zero) {
            return None;
        }
        // combo is expressed over rows; rows are combinations of accepted vectors
        let k = self.rows.len();
        let mut total = vec![BigInt::zero(); k];
        for (c, (_, _, rc)) in combo.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (t, r) in total.iter_mut().zip(rc) {
                *t += c * r;
            }
        }
        Some((0..k).filter(|&j| !total[j].is_zero()).collect())
    }

    /// Adds `v` if it is outside the current span; returns whether it was added.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let (res, alpha, combo) = self.reduce(v);
        let Some(pivot) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // res = α·v − Σ combo_i·row_i, and each row_i = Σ_j E_ij·accepted_j
        let k = self.rows.len();
        let mut expr = vec![BigInt::zero(); k + 1];
        for (c, (_, _, rc)) in combo.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (t, r) in expr.iter_mut().zip(rc) {
                *t -= c * r;
            }
        }
        expr[k] = alpha;
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(BigInt::zero());
        }
        let mut both = res;
        let n = both.len();
        both.extend(expr);
        content_normalize(&mut both);
        let expr = both.split_off(n);
        self.rows.push((pivot, both, expr));
        true
    }
}

/// Row echelon basis over `F_p` with `p = 2^61 − 1`.
///
/// Ranks over `F_p` never exceed ranks over `Q`, so a rank lower bound found
/// here also holds exactly.
#[derive(Debug, Clone)]
pub struct ModPBasis {
    dim: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModPBasis {
    pub const PRIME: u64 = (1 << 61) - 1;

    pub fn new(dim: usize) -> Self {
        ModPBasis { dim, rows: Vec::new() }
    }

    /// Reduces an integer vector modulo the prime.
    pub fn residues(v: &[BigInt]) -> Vec<u64> {
        let p = BigInt::from(Self::PRIME);
        v.iter()
            .map(|x| {
                let r = x.mod_floor(&p);
                r.to_u64().expect("residue fits in u64")
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn truncate(&mut self, len: usize) {
        self.rows.truncate(len);
    }

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % Self::PRIME as u128) as u64
    }

    fn inverse(a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a, Self::PRIME - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Self::mul(acc, base);
            }
            base = Self::mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Adds `v` (given as residues) if it is outside the span; rows are kept
    /// with a unit pivot.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let p = Self::PRIME;
        let mut res = v.to_vec();
        for (pivot, row) in &self.rows {
            let lead = res[*pivot];
            if lead == 0 {
                continue;
            }
            for (x, &y) in res.iter_mut().zip(row) {
                *x = (*x + p - Self::mul(lead, y)) % p;
            }
        }
        let Some(pivot) = res.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = Self::inverse(res[pivot]);
        for x in res.iter_mut() {
            *x = Self::mul(*x, inv);
        }
        self.rows.push((pivot, res));
        true
    }
}

/// Rank of a list of vectors, through [`ExactMatrix::rank`].
pub fn rank_of(dim: usize, vectors: &[ExactVector]) -> usize {
    ExactMatrix::from_rows(dim, vectors.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows[0].len(), rows)
    }

    #[test]
    fn bareiss_rank_small_cases() {
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(m(&[vec![0, 1, 2], vec![1, 0, 3], vec![1, 1, 5]]).rank(), 2);
        assert_eq!(m(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).rank(), 3);
        // needs a column skip: first column all zero below the first pivot row
        assert_eq!(m(&[vec![0, 2, 4], vec![0, 1, 2], vec![1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn rational_products() {
        let a = RationalMatrix::new(m(&[vec![1, 1], vec![1, 1]]), BigInt::from(2));
        let sq = a.mul(&a);
        assert!(sq.equals(&a), "averaging projector is idempotent");
        assert_eq!(a.trace(), (BigInt::one(), BigInt::one()));
    }

    #[test]
    fn echelon_support_certificate() {
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(&vector_from_i64(&[1, 1, 0])));
        assert!(b.insert(&vector_from_i64(&[0, 1, 1])));
        assert!(!b.insert(&vector_from_i64(&[2, 2, 0])));
        assert_eq!(b.support_in_span(&vector_from_i64(&[1, 2, 1])), Some(vec![0, 1]));
        assert_eq!(b.support_in_span(&vector_from_i64(&[0, 3, 3])), Some(vec![1]));
        assert_eq!(b.support_in_span(&vector_from_i64(&[1, 0, 0])), None);
        b.truncate(1);
        assert_eq!(b.rank(), 1);
        assert!(!b.contains(&vector_from_i64(&[0, 1, 1])));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_independent_of_row_order(rows in small_matrix(), seed in any::<u64>()) {
            let mut shuffled = rows.clone();
            let n = shuffled.len();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                shuffled.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(m(&rows).rank(), m(&shuffled).rank());
        }

        #[test]
        fn echelon_rank_agrees_with_bareiss(rows in small_matrix()) {
            let cols = rows[0].len();
            let mut b = EchelonBasis::new(cols);
            for r in &rows {
                b.insert(&vector_from_i64(r));
            }
            prop_assert_eq!(b.rank(), m(&rows).rank());
            for r in &rows {
                prop_assert!(b.contains(&vector_from_i64(r)));
            }
        }

        #[test]
        fn support_certificate_reconstructs(rows in small_matrix(), coeffs in proptest::collection::vec(-2i64..=2, 6)) {
            let cols = rows[0].len();
            let mut b = EchelonBasis::new(cols);
            let mut accepted = Vec::new();
            for r in &rows {
                if b.insert(&vector_from_i64(r)) {
                    accepted.push(r.clone());
                }
            }
            let mut target = vec![0i64; cols];
            for (j, a) in accepted.iter().enumerate() {
                for (t, x) in target.iter_mut().zip(a) {
                    *t += coeffs[j] * x;
                }
            }
            let support = b.support_in_span(&vector_from_i64(&target)).unwrap();
            let expected: Vec<usize> = (0..accepted.len()).filter(|&j| coeffs[j] != 0).collect();
            prop_assert_eq!(support, expected);
        }
    }
}
