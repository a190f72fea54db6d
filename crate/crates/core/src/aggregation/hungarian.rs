//! Minimum-cost perfect matching on a square matrix (potentials method).

use crate::ranking::{next_permutation, Permutation};
use crate::scalar::Scalar;

/// Solves the assignment problem in O(n³). Returns `assign[row] = column`
/// and the total cost. Among equal-cost matchings the one the algorithm
/// reaches first is returned.
pub fn hungarian<T: Scalar>(cost: &[Vec<T>]) -> (Vec<usize>, T) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), T::zero());
    }
    // 1-based arrays; column 0 is the virtual start
    let mut u = vec![T::zero(); n + 1];
    let mut v = vec![T::zero(); n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0;
        let mut minv: Vec<Option<T>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<T> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1].clone() - u[i0].clone() - v[j].clone();
                if minv[j].as_ref().is_none_or(|m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().unwrap();
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] = u[owner[j]].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else if let Some(m) = minv[j].as_mut() {
                    *m = m.clone() - delta.clone();
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        assign[owner[j] - 1] = j - 1;
    }
    let total = assign.iter().enumerate().fold(T::zero(), |acc, (r, &c)| acc + cost[r][c].clone());
    (assign, total)
}

/// Minimum assignment cost by trying every matching. Reference oracle.
pub fn assignment_brute_force<T: Scalar>(cost: &[Vec<T>]) -> (Permutation, T) {
    let n = cost.len();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut best: Option<(Vec<usize>, T)> = None;
    loop {
        let c = cur.iter().enumerate().fold(T::zero(), |acc, (r, &col)| acc + cost[r][col].clone());
        if best.as_ref().is_none_or(|(_, b)| c < *b) {
            best = Some((cur.clone(), c));
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let (a, c) = best.expect("nonempty");
    (Permutation::new(a).expect("arrangement"), c)
}
