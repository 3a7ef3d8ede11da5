//! Brute-force ground truth, independent of the construction pipeline:
//! exhaustive evaluation-set searches, systematic self-dual matrix
//! enumeration, the Lagrange duality identity, and exact minimum distance
//! by codeword enumeration.

use crate::combinat::{binomial_capped, next_combination, pow_capped, subset_rank, BinomTable};
use crate::exec;
use crate::galois::{Elem, Field};
use crate::grs::{CodeKind, EvalSet, Mat};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Canonicalized subsets examined by a set search.
pub const SET_SEARCH_BUDGET: u64 = 100_000_000;
/// Matrices examined by the systematic self-dual search.
pub const MATRIX_SEARCH_BUDGET: u64 = 100_000_000;
/// Messages enumerated for an exact minimum distance.
pub const MIN_DISTANCE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("length {0} must be even and at least 2")]
    BadLength(u64),
    #[error("search space of {space} candidates exceeds the budget {budget}")]
    SearchSpaceExceeded { space: u64, budget: u64 },
    #[error(transparent)]
    Grs(#[from] crate::grs::GrsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    SigmaG,
    SigmaEg,
    SelfDualAny,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchWitness {
    Set(Vec<Elem>),
    Matrix(Vec<Vec<Elem>>),
}

/// Result of one exhaustive search. `examined` is deterministic: the
/// lexicographic rank of the witness (1-based) when found, the full
/// candidate count otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub q: u64,
    pub n: u64,
    pub mode: SearchMode,
    pub found: bool,
    pub witness: Option<SearchWitness>,
    pub examined: u64,
}

fn grs_signs_uniform(f: &Field, pts: &[Elem]) -> bool {
    let mut first = 0i8;
    for (i, &a) in pts.iter().enumerate() {
        let mut d: Elem = 1;
        for (j, &b) in pts.iter().enumerate() {
            if i != j {
                d = f.mul(d, f.sub(a, b));
            }
        }
        let sign = f.quadratic_character(d).expect("distinct points");
        if first == 0 {
            first = sign;
        } else if sign != first {
            return false;
        }
    }
    true
}

fn egrs_signs_hold(f: &Field, pts: &[Elem]) -> bool {
    for (i, &a) in pts.iter().enumerate() {
        let mut d: Elem = 1;
        for (j, &b) in pts.iter().enumerate() {
            if i != j {
                d = f.mul(d, f.sub(a, b));
            }
        }
        if f.quadratic_character(f.neg(d)).expect("distinct points") != 1 {
            return false;
        }
    }
    true
}

fn set_condition_holds(f: &Field, kind: CodeKind, pts: &[Elem]) -> bool {
    match kind {
        CodeKind::Grs => grs_signs_uniform(f, pts),
        CodeKind::Egrs => egrs_signs_hold(f, pts),
    }
}

fn mode_of(kind: CodeKind) -> SearchMode {
    match kind {
        CodeKind::Grs => SearchMode::SigmaG,
        CodeKind::Egrs => SearchMode::SigmaEg,
    }
}

/// Searches for an evaluation set witnessing an (extended) GRS self-dual
/// code of even length `n`, searching sets of size n (plain) or n-1
/// (extended).
///
/// The search fixes {0, 1} inside every candidate. That is sound because
/// the conditions are invariant under the affine maps x -> ax + b: the
/// point products scale by a^{|S|-1} in common, which preserves "all
/// characters equal" for even sizes and is an even power (hence a square)
/// for odd sizes. The witness is the lexicographically first canonical
/// set.
pub fn search_set_membership(
    f: &Field,
    n: u64,
    kind: CodeKind,
    budget: u64,
) -> Result<SearchResult, OracleError> {
    if n < 2 || n % 2 != 0 {
        return Err(OracleError::BadLength(n));
    }
    let q = f.q();
    let size = match kind {
        CodeKind::Grs => n,
        CodeKind::Egrs => n - 1,
    };
    let mode = mode_of(kind);
    if size > q {
        return Ok(SearchResult { q, n, mode, found: false, witness: None, examined: 0 });
    }
    if size == 1 {
        // Translation maps any singleton to {0}; the point product is 1.
        let found = f.quadratic_character(f.neg(1)).unwrap() == 1;
        return Ok(SearchResult {
            q,
            n,
            mode,
            found,
            witness: found.then(|| SearchWitness::Set(vec![0])),
            examined: 1,
        });
    }
    if size == 2 {
        let found = set_condition_holds(f, kind, &[0, 1]);
        return Ok(SearchResult {
            q,
            n,
            mode,
            found,
            witness: found.then(|| SearchWitness::Set(vec![0, 1])),
            examined: 1,
        });
    }

    let free = (size - 2) as usize;
    let space = binomial_capped(q - 2, free as u64, budget + 1);
    if space > budget {
        return Err(OracleError::SearchSpaceExceeded { space, budget });
    }

    // Parallel over the first free element; each task walks the remaining
    // combinations in lexicographic order, so the first hit overall is the
    // lexicographic minimum.
    let hit = exec::find_map_first_u64(2, q - free as u64 + 1, |c| {
        let mut pts: Vec<Elem> = Vec::with_capacity(size as usize);
        pts.extend_from_slice(&[0, 1, c]);
        let mut rest: Vec<u64> = (c + 1..c + free as u64).collect();
        loop {
            pts.truncate(3);
            pts.extend_from_slice(&rest);
            if set_condition_holds(f, kind, &pts) {
                return Some(pts);
            }
            if rest.is_empty() || !next_combination(&mut rest, q) {
                return None;
            }
        }
    });

    match hit {
        Some(pts) => {
            // Rank of the free part among (size-2)-subsets of [2, q).
            let binom = BinomTable::new((q - 2) as usize, free);
            let shifted: Vec<usize> = pts[2..].iter().map(|&v| (v - 2) as usize).collect();
            let examined = subset_rank(&shifted, (q - 2) as usize, &binom) + 1;
            Ok(SearchResult {
                q,
                n,
                mode,
                found: true,
                witness: Some(SearchWitness::Set(pts)),
                examined,
            })
        }
        None => Ok(SearchResult {
            q,
            n,
            mode,
            found: false,
            witness: None,
            examined: space,
        }),
    }
}

/// Same search without the {0, 1} canonicalization; a sanity check for
/// the affine reduction on small fields.
pub fn search_set_membership_uncanonicalized(
    f: &Field,
    n: u64,
    kind: CodeKind,
    budget: u64,
) -> Result<SearchResult, OracleError> {
    if n < 2 || n % 2 != 0 {
        return Err(OracleError::BadLength(n));
    }
    let q = f.q();
    let size = match kind {
        CodeKind::Grs => n,
        CodeKind::Egrs => n - 1,
    };
    let mode = mode_of(kind);
    if size > q {
        return Ok(SearchResult { q, n, mode, found: false, witness: None, examined: 0 });
    }
    let space = binomial_capped(q, size, budget + 1);
    if space > budget {
        return Err(OracleError::SearchSpaceExceeded { space, budget });
    }
    let mut pts: Vec<u64> = (0..size).collect();
    let mut examined = 0u64;
    loop {
        examined += 1;
        if set_condition_holds(f, kind, &pts) {
            return Ok(SearchResult {
                q,
                n,
                mode,
                found: true,
                witness: Some(SearchWitness::Set(pts)),
                examined,
            });
        }
        if !next_combination(&mut pts, q) {
            return Ok(SearchResult { q, n, mode, found: false, witness: None, examined });
        }
    }
}

/// Enumerates systematic generator matrices `[I_k | P]` of even length n
/// and tests `P P^T = -I_k`; such a matrix exists iff a self-dual code of
/// length n exists over the field (up to equivalence every self-dual code
/// has one). The witness is the lexicographically first `P` by row-major
/// digits.
pub fn search_systematic_selfdual(
    f: &Field,
    n: u64,
    budget: u64,
) -> Result<SearchResult, OracleError> {
    if n < 2 || n % 2 != 0 {
        return Err(OracleError::BadLength(n));
    }
    let q = f.q();
    let k = (n / 2) as usize;
    let cells = (k * k) as u32;
    let space = pow_capped(q, cells, budget + 1);
    if space > budget {
        return Err(OracleError::SearchSpaceExceeded { space, budget });
    }
    let neg_one = f.neg(1);
    // Row-major digits, most significant first, so index order is
    // lexicographic order on P's entries.
    let place: Vec<u64> = (0..cells).rev().map(|i| q.pow(i)).collect();

    let hit = exec::find_map_first_u64(0, space, |idx| {
        let mut p = [0u64; 64];
        let p = &mut p[..k * k];
        for (pos, &pl) in place.iter().enumerate() {
            p[pos] = idx / pl % q;
        }
        for i in 0..k {
            for l in i..k {
                let mut dot: Elem = 0;
                for j in 0..k {
                    dot = f.add(dot, f.mul(p[i * k + j], p[l * k + j]));
                }
                let want = if i == l { neg_one } else { 0 };
                if dot != want {
                    return None;
                }
            }
        }
        Some(idx)
    });

    match hit {
        Some(idx) => {
            let mut rows = Vec::with_capacity(k);
            for i in 0..k {
                let mut row = vec![0u64; 2 * k];
                row[i] = 1;
                for j in 0..k {
                    row[k + j] = idx / place[i * k + j] % q;
                }
                rows.push(row);
            }
            Ok(SearchResult {
                q,
                n,
                mode: SearchMode::SelfDualAny,
                found: true,
                witness: Some(SearchWitness::Matrix(rows)),
                examined: idx + 1,
            })
        }
        None => Ok(SearchResult {
            q,
            n,
            mode: SearchMode::SelfDualAny,
            found: false,
            witness: None,
            examined: space,
        }),
    }
}

/// The duality identity behind the canonical weight rule: with d_i the
/// point product at a_i, the sums `sum_i a_i^s / d_i` vanish for
/// 0 <= s <= n-2 and equal 1 for s = n-1.
pub fn lagrange_identity_holds(f: &Field, set: &EvalSet) -> bool {
    let pts = set.points();
    let n = pts.len();
    let inv_deltas: Vec<Elem> = pts
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut d: Elem = 1;
            for (j, &b) in pts.iter().enumerate() {
                if i != j {
                    d = f.mul(d, f.sub(a, b));
                }
            }
            f.inv(d).expect("distinct points")
        })
        .collect();
    for s in 0..n {
        let mut sum: Elem = 0;
        for (&a, &inv_d) in pts.iter().zip(&inv_deltas) {
            sum = f.add(sum, f.mul(inv_d, f.pow(a, s as i64)));
        }
        let expected = if s == n - 1 { 1 } else { 0 };
        if sum != expected {
            return false;
        }
    }
    true
}

/// Exact minimum Hamming weight over all nonzero messages, by full
/// enumeration of the q^k - 1 candidates.
pub fn min_distance(f: &Field, g: &Mat, budget: u64) -> Result<u64, OracleError> {
    let (k, n) = (g.rows(), g.cols());
    let q = f.q();
    let space = pow_capped(q, k as u32, budget + 1);
    if space > budget {
        return Err(OracleError::SearchSpaceExceeded { space, budget });
    }
    let best = exec::min_map_u64(1, space, |msg| {
        let mut wt = 0u64;
        for c in 0..n {
            let mut acc: Elem = 0;
            let mut mm = msg;
            for r in 0..k {
                let digit = mm % q;
                mm /= q;
                if digit != 0 {
                    acc = f.add(acc, f.mul(digit, g.get(r, c)));
                }
            }
            if acc != 0 {
                wt += 1;
            }
        }
        wt
    });
    Ok(best.expect("at least one nonzero message"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    fn gf9() -> Field {
        Field::new(3, 2).unwrap()
    }

    #[test]
    fn membership_search_examples() {
        let f = gf9();
        let r = search_set_membership(&f, 2, CodeKind::Grs, SET_SEARCH_BUDGET).unwrap();
        assert!(r.found);
        assert_eq!(r.witness, Some(SearchWitness::Set(vec![0, 1])));

        let r = search_set_membership(&f, 4, CodeKind::Egrs, SET_SEARCH_BUDGET).unwrap();
        assert!(r.found);
        assert_eq!(r.witness, Some(SearchWitness::Set(vec![0, 1, 2])));

        let f3 = Field::new(3, 1).unwrap();
        let r = search_set_membership(&f3, 2, CodeKind::Grs, SET_SEARCH_BUDGET).unwrap();
        assert!(!r.found);
    }

    #[test]
    fn canonicalized_search_agrees_with_raw_enumeration() {
        for q in [3u64, 5, 7, 9, 11, 13] {
            let f = Field::of_order(q).unwrap();
            for n in [2u64, 4, 6] {
                for kind in [CodeKind::Grs, CodeKind::Egrs] {
                    let canon = search_set_membership(&f, n, kind, SET_SEARCH_BUDGET).unwrap();
                    let raw =
                        search_set_membership_uncanonicalized(&f, n, kind, SET_SEARCH_BUDGET)
                            .unwrap();
                    assert_eq!(canon.found, raw.found, "q={q} n={n} kind={kind:?}");
                }
            }
        }
    }

    #[test]
    fn selfdual_matrix_search_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert!(!search_systematic_selfdual(&f3, 2, MATRIX_SEARCH_BUDGET).unwrap().found);
        assert!(!search_systematic_selfdual(&f3, 6, MATRIX_SEARCH_BUDGET).unwrap().found);

        let f9 = gf9();
        let r = search_systematic_selfdual(&f9, 2, MATRIX_SEARCH_BUDGET).unwrap();
        assert!(r.found);
        // Lexicographically first P with p^2 = -1 is the element x (index 3).
        assert_eq!(r.witness, Some(SearchWitness::Matrix(vec![vec![1, 3]])));
    }

    #[test]
    fn lagrange_identity_examples() {
        let f = gf9();
        for pts in [vec![0u64, 1, 2], vec![0, 1], vec![5]] {
            let s = EvalSet::new(&f, pts).unwrap();
            assert!(lagrange_identity_holds(&f, &s));
        }
    }

    #[test]
    fn min_distance_examples() {
        let f = gf9();
        let g = Mat::from_rows(&[vec![1, 1, 1, 0], vec![0, 1, 2, 1]]).unwrap();
        assert_eq!(min_distance(&f, &g, MIN_DISTANCE_BUDGET).unwrap(), 3);
        let g = Mat::from_rows(&[vec![3, 1]]).unwrap();
        assert_eq!(min_distance(&f, &g, MIN_DISTANCE_BUDGET).unwrap(), 2);
        let g = Mat::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(min_distance(&f, &g, MIN_DISTANCE_BUDGET).unwrap(), 1);
    }

    #[test]
    fn budget_violations_error() {
        let f = Field::new(101, 1).unwrap();
        assert!(matches!(
            search_set_membership(&f, 20, CodeKind::Grs, 1000),
            Err(OracleError::SearchSpaceExceeded { .. })
        ));
        assert!(matches!(
            search_systematic_selfdual(&f, 8, MATRIX_SEARCH_BUDGET),
            Err(OracleError::SearchSpaceExceeded { .. })
        ));
    }
}
