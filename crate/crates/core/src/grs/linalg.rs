//! Exact matrix work over a [`Field`]: Gram products, rank by Gaussian
//! elimination, and the two MDS certification strategies (a layered minor
//! scan and exhaustive codeword weights).

use crate::combinat::{all_subsets, binomial_capped, subset_rank, BinomTable};
use crate::exec;
use crate::galois::{Elem, Field};

/// Budget for the minor scan: the total number of maximal minors C(n, k).
pub const MINORS_BUDGET: u64 = 50_000_000;
/// Budget for codeword enumeration: q^k.
pub const WEIGHT_ENUM_BUDGET: u64 = 10_000_000;
/// Two consecutive minor layers must fit in memory (entries, u32 each).
const LAYER_ENTRY_BUDGET: u64 = 48_000_000;
/// Flattened subset lists per layer (entries, usize each).
const SUBSET_ENTRY_BUDGET: u64 = 16_000_000;

/// Dense row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    /// Builds from row vectors; `None` if the rows are ragged or empty.
    pub fn from_rows(rows_in: &[Vec<Elem>]) -> Option<Self> {
        let rows = rows_in.len();
        let cols = rows_in.first()?.len();
        if rows_in.iter().any(|r| r.len() != cols) || cols == 0 {
            return None;
        }
        let data = rows_in.iter().flatten().copied().collect();
        Some(Mat { rows, cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

/// True iff `G * G^T = 0`.
pub fn gram_is_zero(f: &Field, g: &Mat) -> bool {
    for i in 0..g.rows {
        for j in i..g.rows {
            let dot = g
                .row(i)
                .iter()
                .zip(g.row(j))
                .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            if dot != 0 {
                return false;
            }
        }
    }
    true
}

pub(crate) struct Reduced {
    /// The non-pivot block of the reduced row echelon form, k x (n - rank').
    pub a: Vec<Elem>,
    pub pivot_cols: Vec<usize>,
    pub other_cols: Vec<usize>,
}

pub(crate) fn reduce(f: &Field, g: &Mat) -> Reduced {
    let (k, n) = (g.rows, g.cols);
    let mut w = g.data.clone();
    let mut pivot_cols = Vec::with_capacity(k);
    let mut row = 0usize;
    for col in 0..n {
        if row == k {
            break;
        }
        let Some(r) = (row..k).find(|&r| w[r * n + col] != 0) else {
            continue;
        };
        if r != row {
            for j in 0..n {
                w.swap(row * n + j, r * n + j);
            }
        }
        let inv = f.inv(w[row * n + col]).expect("pivot is nonzero");
        for j in col..n {
            w[row * n + j] = f.mul(w[row * n + j], inv);
        }
        for r2 in 0..k {
            if r2 != row && w[r2 * n + col] != 0 {
                let c = w[r2 * n + col];
                for j in col..n {
                    let t = f.mul(c, w[row * n + j]);
                    w[r2 * n + j] = f.sub(w[r2 * n + j], t);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let other_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mm = other_cols.len();
    let mut a = vec![0; k * mm];
    for r in 0..k {
        for (j, &c) in other_cols.iter().enumerate() {
            a[r * mm + j] = w[r * n + c];
        }
    }
    Reduced { a, pivot_cols, other_cols }
}

pub fn rank(f: &Field, g: &Mat) -> usize {
    reduce(f, g).pivot_cols.len()
}

/// Whether the layered minor scan fits the memory budgets for a k x mm
/// non-pivot block.
pub(crate) fn minors_layers_fit(kk: usize, mm: usize) -> bool {
    let jmax = kk.min(mm);
    let mut prev = 1u64;
    for j in 1..=jmax as u64 {
        let szr = binomial_capped(kk as u64, j, LAYER_ENTRY_BUDGET);
        let szc = binomial_capped(mm as u64, j, LAYER_ENTRY_BUDGET);
        let sz = szr.saturating_mul(szc);
        if sz.saturating_add(prev) > LAYER_ENTRY_BUDGET {
            return false;
        }
        if szr.saturating_mul(j) > SUBSET_ENTRY_BUDGET || szc.saturating_mul(j) > SUBSET_ENTRY_BUDGET {
            return false;
        }
        prev = sz;
    }
    true
}

/// Checks that every k x k column submatrix is invertible.
///
/// After row reduction to `[I | A]` (up to a column permutation) this is
/// equivalent to every square minor of `A`, of every order, being nonzero.
/// Minors of order j are built from order j-1 by Laplace expansion along
/// each submatrix's first column, which costs O(j) per minor instead of a
/// fresh elimination. Layers are scanned in order, so the reported witness
/// is deterministic.
pub(crate) fn mds_by_minors(f: &Field, g: &Mat) -> (bool, Option<Vec<usize>>) {
    let (k, n) = (g.rows, g.cols);
    let red = reduce(f, g);
    if red.pivot_cols.len() < k {
        // Rank deficient: every maximal minor vanishes.
        return (false, Some((0..k).collect()));
    }
    let kk = k;
    let mm = n - k;
    let jmax = kk.min(mm);
    if jmax == 0 {
        return (true, None);
    }
    let binom = BinomTable::new(kk.max(mm), jmax);
    let mut prev: Vec<u32> = vec![1];
    let mut prev_ncols = 1usize;
    for j in 1..=jmax {
        let rowsets = all_subsets(kk, j);
        let colsets = all_subsets(mm, j);
        let nrs = rowsets.len() / j;
        let ncs = colsets.len() / j;

        // Ranks of each rowset with one element dropped, among (j-1)-subsets.
        let mut drop_ranks: Vec<u32> = Vec::with_capacity(nrs * j);
        let mut scratch: Vec<usize> = Vec::with_capacity(j);
        for ri in 0..nrs {
            let rs = &rowsets[ri * j..(ri + 1) * j];
            for omit in 0..j {
                scratch.clear();
                scratch.extend(rs.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v));
                drop_ranks.push(subset_rank(&scratch, kk, &binom) as u32);
            }
        }
        // Leading column of each colset plus the rank of its tail.
        let mut lead_col: Vec<u32> = Vec::with_capacity(ncs);
        let mut tail_rank: Vec<u32> = Vec::with_capacity(ncs);
        for ci in 0..ncs {
            let cs = &colsets[ci * j..(ci + 1) * j];
            lead_col.push(cs[0] as u32);
            tail_rank.push(subset_rank(&cs[1..], mm, &binom) as u32);
        }

        let a = &red.a;
        let prev_ref = &prev;
        let layer = exec::fill_u32(nrs * ncs, |pos| {
            let ri = pos / ncs;
            let ci = pos % ncs;
            let rs = &rowsets[ri * j..(ri + 1) * j];
            let c0 = lead_col[ci] as usize;
            let tr = tail_rank[ci] as usize;
            let dr = &drop_ranks[ri * j..(ri + 1) * j];
            let mut acc: Elem = 0;
            for i in 0..j {
                let aval = a[rs[i] * mm + c0];
                if aval == 0 {
                    continue;
                }
                let sub = prev_ref[dr[i] as usize * prev_ncols + tr] as Elem;
                if sub == 0 {
                    continue;
                }
                let term = f.mul(aval, sub);
                acc = if i % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
            }
            acc as u32
        });

        if let Some(pos) = layer.iter().position(|&v| v == 0) {
            let ri = pos / ncs;
            let ci = pos % ncs;
            let rs = &rowsets[ri * j..(ri + 1) * j];
            let cs = &colsets[ci * j..(ci + 1) * j];
            let mut cols: Vec<usize> = (0..kk)
                .filter(|i| !rs.contains(i))
                .map(|i| red.pivot_cols[i])
                .collect();
            cols.extend(cs.iter().map(|&c| red.other_cols[c]));
            cols.sort_unstable();
            return (false, Some(cols));
        }
        prev = layer;
        prev_ncols = ncs;
    }
    (true, None)
}

/// Falsifies the MDS property by finding a nonzero codeword of weight at
/// most n - k, scanning one representative per projective message class.
pub(crate) fn mds_by_weight_enum(f: &Field, g: &Mat) -> (bool, Option<Vec<usize>>) {
    let (k, n) = (g.rows, g.cols);
    let q = f.q();
    let target = n - k;
    for lead in 0..k {
        let tail_digits = (k - lead - 1) as u32;
        let space = q.pow(tail_digits);
        let hit = exec::find_map_first_u64(0, space, |t| {
            let mut cw: Vec<Elem> = g.row(lead).to_vec();
            let mut tt = t;
            for r in lead + 1..k {
                let digit = tt % q;
                tt /= q;
                if digit != 0 {
                    for (c, slot) in cw.iter_mut().enumerate() {
                        *slot = f.add(*slot, f.mul(digit, g.get(r, c)));
                    }
                }
            }
            let wt = cw.iter().filter(|&&v| v != 0).count();
            if wt <= target {
                Some(
                    cw.iter()
                        .enumerate()
                        .filter(|&(_, &v)| v == 0)
                        .map(|(i, _)| i)
                        .take(k)
                        .collect::<Vec<usize>>(),
                )
            } else {
                None
            }
        });
        if let Some(cols) = hit {
            return (false, Some(cols));
        }
    }
    (true, None)
}

/// Naive MDS reference: eliminates every k-column submatrix separately.
/// Exponential and only for cross-checking the layered scan in tests.
pub fn mds_by_submatrix_elimination(f: &Field, g: &Mat) -> bool {
    let (k, n) = (g.rows, g.cols);
    let mut cols: Vec<u64> = (0..k as u64).collect();
    loop {
        let mut sub = Mat::zeros(k, k);
        for r in 0..k {
            for (j, &c) in cols.iter().enumerate() {
                sub.set(r, j, g.get(r, c as usize));
            }
        }
        if rank(f, &sub) < k {
            return false;
        }
        if !crate::combinat::next_combination(&mut cols, n as u64) {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn gf9() -> Field {
        Field::new(3, 2).unwrap()
    }

    #[test]
    fn rank_and_gram_basics() {
        let f = gf9();
        let g = Mat::from_rows(&[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
        assert_eq!(rank(&f, &g), 2);
        assert!(gram_is_zero(&f, &g));
        let ident = Mat::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!gram_is_zero(&f, &ident));
        // Second row is 2 * first in characteristic 3.
        let dep = Mat::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(rank(&f, &dep), 1);
    }

    #[test]
    fn minor_scan_agrees_with_submatrix_elimination() {
        let f = Field::new(5, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let k = rng.gen_range(1..=3usize);
            let n = rng.gen_range(k..=7usize);
            let rows: Vec<Vec<Elem>> =
                (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..5u64)).collect()).collect();
            let g = Mat::from_rows(&rows).unwrap();
            let (dp, witness) = mds_by_minors(&f, &g);
            assert_eq!(dp, mds_by_submatrix_elimination(&f, &g));
            if let Some(cols) = witness {
                let mut sub = Mat::zeros(k, k);
                for r in 0..k {
                    for (j, &c) in cols.iter().enumerate() {
                        sub.set(r, j, g.get(r, c));
                    }
                }
                assert!(rank(&f, &sub) < k, "witness columns must be singular");
            }
        }
    }

    #[test]
    fn weight_enum_agrees_with_minors() {
        let f = gf9();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let k = rng.gen_range(1..=3usize);
            let n = rng.gen_range(k..=6usize);
            let rows: Vec<Vec<Elem>> =
                (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..9u64)).collect()).collect();
            let g = Mat::from_rows(&rows).unwrap();
            assert_eq!(mds_by_minors(&f, &g).0, mds_by_weight_enum(&f, &g).0);
        }
    }

    #[test]
    fn layer_budget_rejects_degenerate_shapes() {
        assert!(minors_layers_fit(14, 14));
        assert!(minors_layers_fit(9, 9));
        assert!(!minors_layers_fit(2, 20_000));
    }
}
