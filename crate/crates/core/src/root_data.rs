//! Cartan data, weights, Weyl group elements and reduced words for the
//! classical families A, B, C, D.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("rank {rank} out of range for type {family}")]
    BadRank { family: Family, rank: usize },
    #[error("node {0} out of range")]
    BadNode(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        };
        if rank < min {
            return Err(RootError::BadRank { family, rank });
        }
        Ok(LieType { family, rank })
    }

    /// Cartan matrix entries `a[i][j]` (0-indexed nodes).
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            a[i][j] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut a, i, i + 1, -1);
                    link(&mut a, i + 1, i, -1);
                }
            }
            Family::C => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1, -1);
                    link(&mut a, i + 1, i, -1);
                }
                // long root at node n: a_{n-1,n} = -2
                a[n - 2][n - 1] = -2;
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1, -1);
                    link(&mut a, i + 1, i, -1);
                }
                // short root at node n: a_{n,n-1} = -2
                a[n - 1][n - 2] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(&mut a, i, i + 1, -1);
                    link(&mut a, i + 1, i, -1);
                }
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                link(&mut a, n - 3, n - 1, -1);
                link(&mut a, n - 1, n - 3, -1);
            }
        }
        a
    }

    /// Simple root `alpha_j` in fundamental-weight coordinates (1-indexed node).
    pub fn simple_root(&self, j: usize) -> Vec<i64> {
        let a = self.cartan();
        (0..self.rank).map(|i| a[i][j - 1]).collect()
    }

    /// Pairing `<h_i, lambda>` for `lambda` in fundamental-weight coordinates.
    pub fn pair(&self, i: usize, lambda: &[i64]) -> i64 {
        lambda[i - 1]
    }

    /// The fixed reduced word for the longest Weyl group element.
    pub fn longest_word(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => {
                let mut w = Vec::new();
                for len in (1..=n).rev() {
                    w.extend(1..=len);
                }
                w
            }
            Family::B | Family::C => {
                let mut w = Vec::new();
                for _ in 0..n {
                    w.extend(1..=n);
                }
                w
            }
            Family::D => {
                let mut w = Vec::new();
                for _ in 0..n - 1 {
                    w.extend(1..=n);
                }
                w
            }
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    /// All positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let a = self.cartan();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for j in 0..n {
            let mut r = vec![0i64; n];
            r[j] = 1;
            frontier.push(r);
        }
        for r in &frontier {
            seen.insert(r.clone());
        }
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                // s_i in simple-root coordinates
                let pairing: i64 = (0..n).map(|j| a[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    frontier.push(s);
                }
            }
        }
        seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
    }

    /// An integer vector `v > 0` with `sum_j a_{ji} v_j > 0` for every `i`
    /// (a positive multiple of the inverse-transpose Cartan image of the
    /// all-ones vector; inverse Cartan matrices have positive entries).
    pub fn dominant_torus_vector(&self) -> Vec<i64> {
        let n = self.rank;
        let a = self.cartan();
        // transpose
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = a[j][i];
            }
        }
        // adjugate * ones = det * inverse * ones
        let det = int_det(&m);
        debug_assert!(det != 0);
        let mut v = vec![0i64; n];
        for (j, vj) in v.iter_mut().enumerate() {
            // cofactor expansion for the j-th entry of adj(m) * ones
            let mut acc = 0i64;
            for i in 0..n {
                let minor = int_det(&delete_row_col(&m, i, j));
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                acc += sign * minor;
            }
            *vj = acc * det.signum();
        }
        debug_assert!(v.iter().all(|&x| x > 0), "{v:?}");
        v
    }

    pub fn weyl_identity(&self) -> WeylElt {
        WeylElt::identity(*self)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt::identity(*self).mul_simple(i)
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElt {
        let mut w = WeylElt::identity(*self);
        for &i in word {
            w = w.mul_simple(i);
        }
        w
    }

    pub fn longest_element(&self) -> WeylElt {
        self.weyl_from_word(&self.longest_word())
    }
}

fn delete_row_col(m: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| *x).collect()
        })
        .collect()
}

fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i64;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * m[0][j] * int_det(&delete_row_col(m, 0, j));
    }
    acc
}

/// A Weyl group element, stored as its action on fundamental-weight
/// coordinates together with its action on simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElt {
    pub lie: LieType,
    /// weight_mat[i][j]: coefficient of `Lambda_{i+1}` in `w(Lambda_{j+1})`
    weight_mat: Vec<Vec<i64>>,
    /// root_mat[i][j]: coefficient of `alpha_{i+1}` in `w(alpha_{j+1})`
    root_mat: Vec<Vec<i64>>,
}

impl WeylElt {
    pub fn identity(lie: LieType) -> Self {
        let n = lie.rank;
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElt { lie, weight_mat: id.clone(), root_mat: id }
    }

    /// Right-multiply by `s_i` (1-indexed).
    pub fn mul_simple(&self, i: usize) -> Self {
        let n = self.lie.rank;
        let a = self.lie.cartan();
        // columns of the new matrices are w(s_i(basis vector))
        let mut wm = vec![vec![0i64; n]; n];
        let mut rm = vec![vec![0i64; n]; n];
        for j in 0..n {
            // s_i(Lambda_{j+1}) = Lambda_{j+1} - delta_{ij} alpha_i
            let mut col = vec![0i64; n];
            col[j] = 1;
            if j == i - 1 {
                for (k, c) in col.iter_mut().enumerate() {
                    *c -= a[k][i - 1];
                }
            }
            for k in 0..n {
                let mut acc = 0;
                for (l, cl) in col.iter().enumerate() {
                    acc += self.weight_mat[k][l] * cl;
                }
                wm[k][j] = acc;
            }
            // s_i(alpha_{j+1}) = alpha_{j+1} - a_{i,j} alpha_i
            let mut rcol = vec![0i64; n];
            rcol[j] = 1;
            rcol[i - 1] -= a[i - 1][j];
            for k in 0..n {
                let mut acc = 0;
                for (l, cl) in rcol.iter().enumerate() {
                    acc += self.root_mat[k][l] * cl;
                }
                rm[k][j] = acc;
            }
        }
        WeylElt { lie: self.lie, weight_mat: wm, root_mat: rm }
    }

    pub fn apply_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let n = self.lie.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.weight_mat[i][j] * lambda[j]).sum())
            .collect()
    }

    fn apply_root(&self, alpha: &[i64]) -> Vec<i64> {
        let n = self.lie.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.root_mat[i][j] * alpha[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElt::identity(self.lie)
    }

    /// `w(alpha_i)` is a negative root, i.e. `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.lie.rank;
        let mut e = vec![0i64; n];
        e[i - 1] = 1;
        let img = self.apply_root(&e);
        img.iter().all(|&x| x <= 0)
    }

    /// A reduced word for this element (deterministic: picks the smallest
    /// descent at each step).
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.lie.rank;
        let mut w = self.clone();
        let mut rev = Vec::new();
        while !w.is_identity() {
            let mut found = None;
            for i in 1..=n {
                if w.has_right_descent(i) {
                    found = Some(i);
                    break;
                }
            }
            let i = found.expect("non-identity element without descent");
            w = w.mul_simple(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    #[test]
    fn cartan_c2_has_minus_two_at_top_right() {
        let a = t(Family::C, 2).cartan();
        assert_eq!(a, vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn cartan_a_is_tridiagonal() {
        let a = t(Family::A, 4).cartan();
        for i in 0usize..4 {
            for j in 0..4 {
                let expect = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
                assert_eq!(a[i][j], expect);
            }
        }
    }

    #[test]
    fn cartan_d4_branch_node() {
        let a = t(Family::D, 4).cartan();
        assert_eq!(a[1][3], -1);
        assert_eq!(a[3][1], -1);
        assert_eq!(a[2][3], 0);
        assert_eq!(a[3][2], 0);
    }

    #[test]
    fn cartan_b_c_transposed_tail() {
        let b = t(Family::B, 3).cartan();
        let c = t(Family::C, 3).cartan();
        assert_eq!(b[2][1], -2);
        assert_eq!(b[1][2], -1);
        assert_eq!(c[1][2], -2);
        assert_eq!(c[2][1], -1);
    }

    #[test]
    fn longest_word_examples() {
        assert_eq!(t(Family::A, 2).longest_word(), vec![1, 2, 1]);
        assert_eq!(t(Family::C, 2).longest_word(), vec![1, 2, 1, 2]);
        assert_eq!(t(Family::D, 3).longest_word(), vec![1, 2, 3, 1, 2, 3]);
    }

    #[test]
    fn longest_word_length_is_positive_root_count() {
        for lie in [
            t(Family::A, 1),
            t(Family::A, 4),
            t(Family::B, 2),
            t(Family::B, 4),
            t(Family::C, 2),
            t(Family::C, 3),
            t(Family::D, 3),
            t(Family::D, 5),
        ] {
            assert_eq!(lie.longest_word().len(), lie.positive_root_count());
            assert_eq!(lie.positive_roots().len(), lie.positive_root_count());
            // and the word is reduced
            assert_eq!(lie.longest_element().length(), lie.positive_root_count());
        }
    }

    #[test]
    fn simple_root_pairings_match_cartan() {
        for lie in [t(Family::B, 3), t(Family::C, 3), t(Family::D, 4), t(Family::A, 3)] {
            let a = lie.cartan();
            for i in 1..=lie.rank {
                for j in 1..=lie.rank {
                    assert_eq!(lie.pair(j, &lie.simple_root(i)), a[j - 1][i - 1]);
                }
            }
        }
    }

    #[test]
    fn longest_element_negates_dominant_weights_up_to_diagram() {
        // w0 sends the dominant chamber to the antidominant one
        for lie in [t(Family::B, 3), t(Family::C, 2), t(Family::D, 4), t(Family::A, 2)] {
            let w0 = lie.longest_element();
            let rho: Vec<i64> = vec![1; lie.rank];
            let img = w0.apply_weight(&rho);
            // -w0(rho) is again rho (possibly permuted by a diagram automorphism)
            let mut neg: Vec<i64> = img.iter().map(|x| -x).collect();
            neg.sort();
            assert_eq!(neg, rho);
        }
    }

    #[test]
    fn reduced_word_round_trip() {
        let lie = t(Family::C, 3);
        let w0 = lie.longest_element();
        let word = w0.reduced_word();
        assert_eq!(word.len(), lie.positive_root_count());
        assert_eq!(lie.weyl_from_word(&word), w0);
        // w0 * s_k has a reduced word of length N-1
        for k in 1..=3 {
            let w = w0.mul_simple(k);
            assert_eq!(w.length(), lie.positive_root_count() - 1);
        }
    }
}
