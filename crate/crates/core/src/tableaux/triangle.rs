//! Integer triangles realizing the spin crystals of types B and D, their
//! labels, monomial images, and the word builder used as a spin-representation
//! test oracle.

use crate::monomial::MonomialElt;
use crate::root_data::{Family, LieType};
use crate::tableaux::ColumnError;
use std::fmt;

/// A triangle, stored through its label `s = (s_1, ..., s_r)`; entry
/// `j_m^(k) = m` for `m < s_k` and `m + 1` otherwise. Rows run to `n` for
/// type B and to `n - 1` for type D.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub lie: LieType,
    pub label: Vec<i64>,
}

/// Row classification by the neighbouring label values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowType {
    I,
    II,
    III,
    IV,
}

impl Triangle {
    pub fn rows(lie: LieType) -> usize {
        match lie.family {
            Family::B => lie.rank,
            Family::D => lie.rank - 1,
            _ => panic!("triangles are defined for types B and D"),
        }
    }

    pub fn from_label(lie: LieType, label: Vec<i64>) -> Result<Self, ColumnError> {
        let r = Self::rows(lie);
        if label.len() != r {
            return Err(ColumnError::Construction("label length mismatch".into()));
        }
        for (k, &s) in label.iter().enumerate() {
            let prev = if k == 0 { 1 } else { label[k - 1] };
            if s < 1 || s > k as i64 + 2 || (s != prev && s != prev + 1) {
                return Err(ColumnError::Construction(format!("invalid label {label:?}")));
            }
        }
        Ok(Triangle { lie, label })
    }

    /// All triangles, sorted by label.
    pub fn all(lie: LieType) -> Vec<Triangle> {
        let r = Self::rows(lie);
        let mut out = vec![vec![1i64], vec![2i64]];
        for _ in 1..r {
            let mut next = Vec::new();
            for s in out {
                let last = *s.last().unwrap();
                let mut a = s.clone();
                a.push(last);
                next.push(a);
                let mut b = s;
                b.push(last + 1);
                next.push(b);
            }
            out = next;
        }
        let mut ts: Vec<Triangle> =
            out.into_iter().map(|label| Triangle { lie, label }).collect();
        ts.sort();
        ts
    }

    /// The highest triangle (all entries `k + 1`, label all ones).
    pub fn highest(lie: LieType) -> Triangle {
        Triangle { lie, label: vec![1; Self::rows(lie)] }
    }

    /// The lowest triangle (all entries `k`, label `2, 3, ...`).
    pub fn lowest(lie: LieType) -> Triangle {
        Triangle { lie, label: (2..2 + Self::rows(lie) as i64).collect() }
    }

    /// Entry `j_m^{(k)}` for `1 <= m <= k`.
    pub fn entry(&self, m: usize, k: usize) -> i64 {
        if (m as i64) < self.label[k - 1] {
            m as i64
        } else {
            m as i64 + 1
        }
    }

    /// Row `k` as displayed: `(j_k^{(k)}, j_{k-1}^{(k)}, ..., j_1^{(k)})`.
    pub fn row(&self, k: usize) -> Vec<i64> {
        (1..=k).rev().map(|m| self.entry(m, k)).collect()
    }

    pub fn entries(&self) -> Vec<Vec<i64>> {
        (1..=self.label.len()).map(|k| self.row(k)).collect()
    }

    /// Boundary-extended label value: `s_0 = 1`, and one past the last row
    /// the value is `s_{r-1} + 1`.
    fn s(&self, k: i64) -> i64 {
        let r = self.label.len() as i64;
        if k <= 0 {
            1
        } else if k <= r {
            self.label[(k - 1) as usize]
        } else {
            debug_assert_eq!(k, r + 1);
            self.s(r - 1) + 1
        }
    }

    pub fn row_type(&self, k: usize) -> RowType {
        let k = k as i64;
        let grows_after = self.s(k + 1) == self.s(k) + 1;
        let grew_here = self.s(k) == self.s(k - 1) + 1;
        match (grows_after, grew_here) {
            (true, false) => RowType::I,
            (false, false) => RowType::II,
            (true, true) => RowType::III,
            (false, true) => RowType::IV,
        }
    }

    /// Weight in fundamental-weight coordinates.
    pub fn weight(&self) -> Vec<i64> {
        let n = self.lie.rank;
        let mut wt = vec![0i64; n];
        match self.lie.family {
            Family::B => {
                wt[n - 1] = 1;
                for k in 1..=n {
                    let c = self.label[k - 1] - 1;
                    if c != 0 {
                        let alpha = self.lie.simple_root(k);
                        for (w, a) in wt.iter_mut().zip(&alpha) {
                            *w -= c * a;
                        }
                    }
                }
            }
            Family::D => {
                let s_last = self.label[n - 2];
                let (hw, c_n1, c_n) = if n % 2 == 0 {
                    (n, (s_last - 1).div_euclid(2), s_last.div_euclid(2))
                } else {
                    (n - 1, s_last.div_euclid(2), (s_last - 1).div_euclid(2))
                };
                wt[hw - 1] = 1;
                for k in 1..=n - 2 {
                    let c = self.label[k - 1] - 1;
                    if c != 0 {
                        let alpha = self.lie.simple_root(k);
                        for (w, a) in wt.iter_mut().zip(&alpha) {
                            *w -= c * a;
                        }
                    }
                }
                for (node, c) in [(n - 1, c_n1), (n, c_n)] {
                    if c != 0 {
                        let alpha = self.lie.simple_root(node);
                        for (w, a) in wt.iter_mut().zip(&alpha) {
                            *w -= c * a;
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        wt
    }

    /// Kashiwara lowering operator.
    pub fn f(&self, i: usize) -> Option<Triangle> {
        let n = self.lie.rank;
        let r = self.label.len();
        let (row, parity_ok) = match self.lie.family {
            Family::B => (i, true),
            Family::D => {
                if i <= n - 2 {
                    (i, true)
                } else {
                    let j = self.label[r - 1];
                    let even = (n as i64 + j) % 2 == 0;
                    (n - 1, if i == n - 1 { even } else { !even })
                }
            }
            _ => unreachable!(),
        };
        if parity_ok && self.row_type(row) == RowType::I {
            let mut label = self.label.clone();
            label[row - 1] += 1;
            Some(Triangle { lie: self.lie, label })
        } else {
            None
        }
    }

    /// Kashiwara raising operator.
    pub fn e(&self, i: usize) -> Option<Triangle> {
        let n = self.lie.rank;
        let r = self.label.len();
        let (row, parity_ok) = match self.lie.family {
            Family::B => (i, true),
            Family::D => {
                if i <= n - 2 {
                    (i, true)
                } else {
                    let j = self.label[r - 1];
                    let odd = (n as i64 + j) % 2 == 1;
                    (n - 1, if i == n - 1 { odd } else { !odd })
                }
            }
            _ => unreachable!(),
        };
        if parity_ok && self.row_type(row) == RowType::IV {
            let mut label = self.label.clone();
            label[row - 1] -= 1;
            Some(Triangle { lie: self.lie, label })
        } else {
            None
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries()
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// The spin sign vector attached to a triangle.
pub fn spin_vector_of_label(t: &Triangle) -> Vec<bool> {
    let n = t.lie.rank;
    match t.lie.family {
        Family::B => {
            let mut eps = Vec::with_capacity(n);
            eps.push(t.label[0] == 1);
            for k in 2..=n {
                eps.push(t.label[k - 1] == t.label[k - 2]);
            }
            eps
        }
        Family::D => {
            let mut eps = Vec::with_capacity(n);
            eps.push(t.label[0] == 1);
            for k in 2..=n - 2 {
                eps.push(t.label[k - 1] == t.label[k - 2]);
            }
            let s_prev = if n >= 3 { t.label[n - 3] } else { 1 };
            let s_last = t.label[n - 2];
            let stays = s_last == s_prev;
            let odd = (n as i64 + s_last) % 2 == 1;
            let (e1, e2) = match (stays, odd) {
                (true, true) => (true, true),
                (true, false) => (true, false),
                (false, true) => (false, true),
                (false, false) => (false, false),
            };
            eps.push(e1);
            eps.push(e2);
            eps
        }
        _ => unreachable!(),
    }
}

/// Monomial attached to a triangle: type-I rows contribute `c[i, s_i]`,
/// type-IV rows the inverse, with the parity split at the fork of type D.
pub fn triangle_monomial(t: &Triangle) -> MonomialElt {
    let n = t.lie.rank;
    let r = t.label.len();
    let mut out = MonomialElt::one();
    for row in 1..=r {
        let s = t.label[row - 1] as i32;
        let node = if t.lie.family == Family::D && row == n - 1 {
            let even = (n as i64 + s as i64) % 2 == 0;
            match t.row_type(row) {
                RowType::I => {
                    if even {
                        n - 1
                    } else {
                        n
                    }
                }
                RowType::IV => {
                    if even {
                        n
                    } else {
                        n - 1
                    }
                }
                _ => continue,
            }
        } else {
            row
        };
        match t.row_type(row) {
            RowType::I => out = out.mul(&MonomialElt::gen(s, node)),
            RowType::IV => out = out.mul(&MonomialElt::gen(s, node).inv()),
            _ => {}
        }
    }
    out
}

/// The barred monomial: `c[i,j] -> 1/c[i, n+1-j]` for type B and
/// `c[i,j] -> 1/c[i, n-j]` for type D.
pub fn triangle_monomial_bar(t: &Triangle) -> MonomialElt {
    let n = t.lie.rank as i32;
    let a = match t.lie.family {
        Family::B => n + 1,
        Family::D => n,
        _ => unreachable!(),
    };
    crate::monomial::bar_dual(&triangle_monomial(t), a)
}

/// The node-swap involution of type D (`n-1 <-> n`) on monomials.
pub fn xi_swap(m: &MonomialElt, n: usize) -> MonomialElt {
    let exps: Vec<((i32, usize), i64)> = m
        .exps()
        .iter()
        .map(|((t, i), l)| {
            let node = if *i == n { n - 1 } else if *i == n - 1 { n } else { *i };
            ((*t, node), *l)
        })
        .collect();
    MonomialElt::from_exps(&exps)
}

/// The triangle crystal with its spin correspondence.
#[derive(Clone, Debug)]
pub struct TriangleCrystal {
    pub lie: LieType,
    pub triangles: Vec<Triangle>,
}

pub fn triangle_crystal(lie: LieType) -> TriangleCrystal {
    TriangleCrystal { lie, triangles: Triangle::all(lie) }
}

impl TriangleCrystal {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// The word `E(delta)`: positions of entry `i` sorted by row give the block
/// `E_i`, and the blocks are concatenated as `E_r ... E_1` (rightmost block
/// applied first). Type D adjusts the final letter of a block ending in the
/// bottom row according to the parity of `k + l`.
pub fn word_e(t: &Triangle) -> Vec<usize> {
    let n = t.lie.rank;
    let r = t.label.len();
    let max_entry = match t.lie.family {
        Family::B => n,
        Family::D => n - 1,
        _ => unreachable!(),
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 1..=max_entry as i64 {
        // occurrences (k = position, l = row) of entry i, sorted by row
        let mut occ: Vec<(usize, usize)> = Vec::new();
        for l in 1..=r {
            for m in 1..=l {
                if t.entry(m, l) == i {
                    occ.push((m, l));
                }
            }
        }
        occ.sort_by_key(|(_, l)| *l);
        let mut block: Vec<usize> = occ.iter().map(|(_, l)| *l).collect();
        if t.lie.family == Family::D {
            if let Some(&(k, l)) = occ.last() {
                if l == n - 1 {
                    *block.last_mut().unwrap() = if (k + l) % 2 == 1 { n - 1 } else { n };
                }
            }
        }
        blocks.push(block);
    }
    // printed order: E_r ... E_1
    blocks.into_iter().rev().flatten().collect()
}

/// Apply a word of raising operators (rightmost letter first) to a spin sign
/// vector; `None` encodes 0.
pub fn apply_e_word(lie: LieType, word: &[usize], eps: &[bool]) -> Option<Vec<bool>> {
    let n = lie.rank;
    let mut cur = eps.to_vec();
    for &i in word.iter().rev() {
        match lie.family {
            Family::B => {
                if i < n {
                    if !cur[i - 1] && cur[i] {
                        cur[i - 1] = true;
                        cur[i] = false;
                    } else {
                        return None;
                    }
                } else if !cur[n - 1] {
                    cur[n - 1] = true;
                } else {
                    return None;
                }
            }
            Family::D => {
                if i < n {
                    if !cur[i - 1] && cur[i] {
                        cur[i - 1] = true;
                        cur[i] = false;
                    } else {
                        return None;
                    }
                } else if !cur[n - 2] && !cur[n - 1] {
                    cur[n - 2] = true;
                    cur[n - 1] = true;
                } else {
                    return None;
                }
            }
            _ => unreachable!(),
        }
    }
    Some(cur)
}
