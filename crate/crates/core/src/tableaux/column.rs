//! Columns in the ordered alphabet `1 < ... < n < n-bar < ... < 1-bar`,
//! the type-C column crystals, their monomial maps, and the level-raising
//! rectification.

use crate::monomial::{generate_component, kashiwara, KashiwaraDir, MonomialElt, Sign, DEFAULT_CAP};
use crate::root_data::{Family, LieType};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ColumnError {
    #[error("column is outside the extended domain (conditions A1-A6)")]
    OutsideDomain,
    #[error("letter {0} out of range for rank {1}")]
    BadLetter(i64, usize),
    #[error("column crystal construction failed: {0}")]
    Construction(String),
}

/// A column with unbarred head `u_1..u_m` (top down) and barred tail; the
/// barred values are stored bottom-up as `l_1..l_k`, so the displayed column
/// is `[u_1,...,u_m, bar(l_k),...,bar(l_1)]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnTableau {
    pub n: usize,
    pub us: Vec<i64>,
    pub ls: Vec<i64>,
}

impl ColumnTableau {
    /// Build from signed letters (positive unbarred, negative barred),
    /// read top-down.
    pub fn from_letters(n: usize, letters: &[i64]) -> Result<Self, ColumnError> {
        let mut us = Vec::new();
        let mut ls = Vec::new();
        for &x in letters {
            if x == 0 || x.unsigned_abs() as usize > n {
                return Err(ColumnError::BadLetter(x, n));
            }
            if x > 0 {
                if !ls.is_empty() {
                    return Err(ColumnError::BadLetter(x, n));
                }
                us.push(x);
            } else {
                ls.push(-x);
            }
        }
        ls.reverse();
        Ok(ColumnTableau { n, us, ls })
    }

    pub fn len(&self) -> usize {
        self.us.len() + self.ls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Signed letters top-down.
    pub fn letters(&self) -> Vec<i64> {
        let mut out = self.us.clone();
        out.extend(self.ls.iter().rev().map(|l| -l));
        out
    }

    /// Strictly increasing in the column alphabet.
    pub fn is_strict(&self) -> bool {
        let rank = |x: i64| -> i64 {
            if x > 0 {
                x
            } else {
                2 * self.n as i64 + 1 + x
            }
        };
        let letters = self.letters();
        letters.windows(2).all(|w| rank(w[0]) < rank(w[1]))
    }

    /// Weight in fundamental-weight coordinates (type C conventions).
    pub fn weight(&self) -> Vec<i64> {
        let mut wt = vec![0i64; self.n];
        let mut add = |i: i64, s: i64| {
            let i = i as usize;
            wt[i - 1] += s;
            if i >= 2 {
                wt[i - 2] -= s;
            }
        };
        for &u in &self.us {
            add(u, 1);
        }
        for &l in &self.ls {
            add(l, -1);
        }
        wt
    }
}

impl fmt::Display for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters()
            .iter()
            .map(|x| if *x > 0 { x.to_string() } else { format!("{}b", -x) })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Membership in the type-C crystal `B(Lambda_k)`: the column is strictly
/// increasing and every pair `(i, i-bar)` with `i` at top-position `b` and
/// `i-bar` at bottom-position `a` satisfies `a + b <= i`.
pub fn is_kn_column(v: &ColumnTableau) -> bool {
    if !v.is_strict() {
        return false;
    }
    for (b0, &u) in v.us.iter().enumerate() {
        for (a0, &l) in v.ls.iter().enumerate() {
            if u == l && (a0 + 1 + b0 + 1) as i64 > u {
                return false;
            }
        }
    }
    true
}

/// All strictly increasing columns of length `k` in the rank-`n` alphabet.
pub fn all_columns(n: usize, k: usize) -> Vec<ColumnTableau> {
    let alphabet: Vec<i64> = (1..=n as i64).chain((1..=n as i64).rev().map(|i| -i)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; k];
    fn rec(
        alphabet: &[i64],
        n: usize,
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<ColumnTableau>,
    ) {
        if depth == k {
            let letters: Vec<i64> = pick.iter().map(|&i| alphabet[i]).collect();
            out.push(ColumnTableau::from_letters(n, &letters).unwrap());
            return;
        }
        for i in start..alphabet.len() {
            pick[depth] = i;
            rec(alphabet, n, k, i + 1, pick, depth + 1, out);
        }
    }
    rec(&alphabet, n, k, 0, &mut pick, 0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// extended domain and rectification
// ---------------------------------------------------------------------------

fn descents(xs: &[i64]) -> Vec<usize> {
    xs.windows(2).enumerate().filter(|(_, w)| w[0] >= w[1]).map(|(i, _)| i).collect()
}

/// Check the conditions (A1)-(A6) of the extended domain for length-`n`
/// columns. The split points are existentially quantified: when a side has a
/// descent its split is forced there, otherwise any split of the increasing
/// list is allowed and (A3)-(A6) must hold for some choice.
pub fn is_extended_domain(v: &ColumnTableau) -> bool {
    let n = v.n;
    if v.len() != n {
        return false;
    }
    let du = descents(&v.us);
    let dl = descents(&v.ls);
    if du.len() > 1 || dl.len() > 1 {
        return false;
    }
    let in_bounds =
        v.us.iter().chain(v.ls.iter()).all(|&x| 1 <= x && x <= n as i64);
    if !in_bounds {
        return false;
    }
    // strictness within each run
    let strict_runs = |xs: &[i64], d: &[usize]| -> bool {
        let cut = d.first().map(|x| x + 1).unwrap_or(xs.len());
        xs[..cut].windows(2).all(|w| w[0] < w[1]) && xs[cut..].windows(2).all(|w| w[0] < w[1])
    };
    if !strict_runs(&v.us, &du) || !strict_runs(&v.ls, &dl) {
        return false;
    }
    let x_choices: Vec<usize> = match du.first() {
        Some(&x0) => vec![x0 + 1],
        None => (0..=v.us.len()).collect(),
    };
    let y_choices: Vec<usize> = match dl.first() {
        Some(&y0) => vec![y0 + 1],
        None => (0..=v.ls.len()).collect(),
    };
    let u_descent = du.first().is_some();
    let l_descent = dl.first().is_some();
    x_choices.iter().any(|&x| {
        y_choices.iter().any(|&y| {
            // (A3): head pairs are in configuration
            for p in 1..=x {
                for q in 1..=y {
                    if v.us[p - 1] == v.ls[q - 1] && (p + q) as i64 > v.us[p - 1] {
                        return false;
                    }
                }
            }
            // (A4): the letter after the descent has a (+1)-partner among the
            // barred letters, lying in a consecutive run that reaches u_x
            if u_descent {
                let ux = v.us[x - 1];
                let ux1 = v.us[x];
                let ok = (1..=v.ls.len()).any(|z| {
                    if v.ls[z - 1] != ux || (x + z) as i64 > ux {
                        return false;
                    }
                    (1..=z).any(|w| {
                        v.ls[w - 1] == ux1
                            && (x + 1 + w) as i64 == ux1 + 1
                            && (w..z).all(|t| v.ls[t] == v.ls[t - 1] + 1)
                    })
                });
                if !ok {
                    return false;
                }
            }
            // (A5): symmetric condition for a descent among the barred letters
            if l_descent {
                let ly = v.ls[y - 1];
                let ly1 = v.ls[y];
                let ok = (1..=v.us.len()).any(|z| {
                    if v.us[z - 1] != ly || (y + z) as i64 > ly {
                        return false;
                    }
                    (1..=z).any(|w| {
                        v.us[w - 1] == ly1
                            && (w + y + 1) as i64 == ly1 + 1
                            && (w..z).all(|t| v.us[t] == v.us[t - 1] + 1)
                    })
                });
                if !ok {
                    return false;
                }
            }
            // (A6)
            if u_descent && l_descent && v.us[x - 1] != v.ls[y - 1] {
                return false;
            }
            true
        })
    })
}

/// All pairs `(a, b)` (1-based) with `u_a = l_b` and `a + b = u_a + 1`.
fn plus_one_pairs(v: &ColumnTableau) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a0, &u) in v.us.iter().enumerate() {
        for (b0, &l) in v.ls.iter().enumerate() {
            if u == l && (a0 + b0 + 2) as i64 == u + 1 {
                out.push((a0 + 1, b0 + 1));
            }
        }
    }
    out
}

/// Level: the smallest letter carrying a `(+1)`-configuration pair, or `n`
/// when none exists.
pub fn level(v: &ColumnTableau) -> i64 {
    plus_one_pairs(v)
        .iter()
        .map(|(a, _)| v.us[a - 1])
        .min()
        .unwrap_or(v.n as i64)
}

fn run_top(xs: &[i64], start0: usize) -> i64 {
    let mut top = xs[start0];
    let mut idx = start0;
    while idx + 1 < xs.len() && xs[idx + 1] == top + 1 {
        top += 1;
        idx += 1;
    }
    top
}

/// Resolve the `(+1)`-pair `(a, b)`: replace the ascending runs starting at
/// the two occurrences of `i` by the shifted runs. When `bound` is set (the
/// descent cases) both runs stop there.
fn resolve_pair(v: &ColumnTableau, a: usize, b: usize, bound: Option<i64>) -> ColumnTableau {
    let i = v.us[a - 1];
    debug_assert_eq!(v.ls[b - 1], i);
    let mut j = run_top(&v.us, a - 1);
    let mut k = run_top(&v.ls, b - 1);
    if let Some(t) = bound {
        j = j.min(t);
        k = k.min(t);
    }
    let mut out = v.clone();
    for t in 0..=(j - i) {
        out.us[a - 1 + t as usize] = k + 1 + t;
    }
    for t in 0..=(k - i) {
        out.ls[b - 1 + t as usize] = j + 1 + t;
    }
    out
}

/// The single half-move prescribed by the case analysis, if any:
/// returns `(letter, pair, resolved column)`. In the descent cases the moved
/// runs are capped at the top of the descent-side run.
fn half_move(v: &ColumnTableau) -> Option<(i64, (usize, usize), ColumnTableau)> {
    let du = descents(&v.us);
    let dl = descents(&v.ls);
    let ux1 = du.first().map(|&x0| v.us[x0 + 1]);
    let ly1 = dl.first().map(|&y0| v.ls[y0 + 1]);
    let (i, a, b, bound) = match (du.first(), dl.first()) {
        (None, None) => {
            let pairs = plus_one_pairs(v);
            let (a, b) = *pairs.iter().min_by_key(|(a, _)| v.us[a - 1])?;
            (v.us[a - 1], a, b, None)
        }
        (Some(&x0), None) => {
            let i = ux1.unwrap();
            let a = x0 + 2;
            (i, a, (i + 1) as usize - a, Some(run_top(&v.us, a - 1)))
        }
        (None, Some(&y0)) => {
            let i = ly1.unwrap();
            let b = y0 + 2;
            (i, (i + 1) as usize - b, b, Some(run_top(&v.ls, b - 1)))
        }
        (Some(&x0), Some(&y0)) => {
            let iu = ux1.unwrap();
            let il = ly1.unwrap();
            if iu <= il {
                let a = x0 + 2;
                (iu, a, (iu + 1) as usize - a, Some(run_top(&v.us, a - 1)))
            } else {
                let b = y0 + 2;
                (il, (il + 1) as usize - b, b, Some(run_top(&v.ls, b - 1)))
            }
        }
    };
    debug_assert!(a >= 1 && a <= v.us.len() && b >= 1 && b <= v.ls.len());
    Some((i, (a, b), resolve_pair(v, a, b, bound)))
}

/// One full transformation step at the active letter. The composite case
/// (descents on both sides with the same letter) applies both halves as one
/// atomic step.
fn tau_atomic(v: &ColumnTableau) -> Option<(i64, Vec<ColumnTableau>)> {
    let (i, _, first) = half_move(v)?;
    let du = descents(&v.us);
    let dl = descents(&v.ls);
    let composite = match (du.first(), dl.first()) {
        (Some(&x0), Some(&y0)) => v.us[x0 + 1] == v.ls[y0 + 1],
        _ => false,
    };
    let mut halves = vec![first.clone()];
    if composite {
        if let Some((i2, _, second)) = half_move(&first) {
            if i2 == i {
                halves.push(second);
            }
        }
    }
    Some((i, halves))
}

/// `tau_i`: the identity unless `i` is the active letter, in which case the
/// atomic (possibly composite) move is applied.
pub fn tau(v: &ColumnTableau, i: i64) -> ColumnTableau {
    match tau_atomic(v) {
        Some((active, halves)) if active == i => halves.last().unwrap().clone(),
        _ => v.clone(),
    }
}

/// A rectification trace: the applied letters (one entry per half-move, so a
/// composite step contributes its letter twice) and every intermediate
/// column, plus the level after each atomic step.
#[derive(Clone, Debug)]
pub struct RectTrace {
    pub steps: Vec<i64>,
    pub intermediates: Vec<ColumnTableau>,
    pub levels: Vec<i64>,
    pub result: ColumnTableau,
}

/// Rectify an element of the extended domain into a genuine column of
/// `B(Lambda_n)`.
pub fn rectify(v: &ColumnTableau) -> Result<RectTrace, ColumnError> {
    if !is_extended_domain(v) {
        return Err(ColumnError::OutsideDomain);
    }
    let mut cur = v.clone();
    let mut steps = Vec::new();
    let mut intermediates = Vec::new();
    let mut levels = vec![level(&cur)];
    while let Some((i, halves)) = tau_atomic(&cur) {
        let before = level(&cur);
        for h in &halves {
            steps.push(i);
            intermediates.push(h.clone());
            if !is_extended_domain(h) {
                return Err(ColumnError::OutsideDomain);
            }
        }
        cur = halves.last().unwrap().clone();
        let after = level(&cur);
        if after <= before {
            return Err(ColumnError::Construction(format!(
                "level did not increase at tau_{i}: {before} -> {after}"
            )));
        }
        levels.push(after);
        if steps.len() > 4 * v.n * v.n {
            return Err(ColumnError::Construction("rectification did not terminate".into()));
        }
    }
    Ok(RectTrace { steps, intermediates, levels, result: cur })
}

// ---------------------------------------------------------------------------
// monomial maps
// ---------------------------------------------------------------------------

/// Monomial image of a length-`k` column: the product of
/// `C(u_a, a)` over the head and `Cbar(l_b, l_b - b - (n - k))` over the tail,
/// where `C(i,j) = c[i, n-j] / c[i-1, n-j+1]` and
/// `Cbar(i,j) = c[i-1, n-j] / c[i, n-j]` with `c[0,*] = 1`.
///
/// For `k = n` this is the embedding sending `[1..n]` to `c[n,0]`; for
/// general `k` it sends `[1..k]` to `c[k, n-k]`.
pub fn monomial_map(v: &ColumnTableau) -> MonomialElt {
    let n = v.n as i32;
    let k = v.len() as i32;
    let mut out = MonomialElt::one();
    for (a0, &u) in v.us.iter().enumerate() {
        let j = (a0 + 1) as i32;
        // C(u, j)
        let mut exps = vec![((n - j, u as usize), 1i64)];
        if u >= 2 {
            exps.push(((n - j + 1, (u - 1) as usize), -1));
        }
        out = out.mul(&MonomialElt::from_exps(&exps));
    }
    for (b0, &l) in v.ls.iter().enumerate() {
        let b = (b0 + 1) as i32;
        let j = l as i32 - b - (n - k);
        // Cbar(l, j): time n - j
        let time = n - j;
        let mut exps = vec![((time, l as usize), -1i64)];
        if l >= 2 {
            exps.push(((time, (l - 1) as usize), 1));
        }
        out = out.mul(&MonomialElt::from_exps(&exps));
    }
    out
}

/// The length-`n` monomial map (the image of `[1..n]` is `c[n,0]`).
pub fn monomial_map_m0(v: &ColumnTableau) -> MonomialElt {
    monomial_map(v)
}

// ---------------------------------------------------------------------------
// the column crystal
// ---------------------------------------------------------------------------

/// The type-C crystal `B(Lambda_k)` realized on columns. The crystal
/// structure is carried by the isomorphic monomial component of
/// `c[k, n-k]`; for `k = n` (through the explicit monomial map) and `k = 1`
/// (weights are multiplicity-free) the column <-> monomial pairing is
/// explicit, and the Kashiwara operators act on columns through it.
#[derive(Clone, Debug)]
pub struct ColumnCrystal {
    pub lie: LieType,
    pub k: usize,
    pub columns: Vec<ColumnTableau>,
    pub component: crate::monomial::CrystalGraph,
    /// column index -> component node index, when the pairing is explicit
    pairing: Option<Vec<usize>>,
}

impl ColumnCrystal {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Monomial attached to a column (available for `k = 1` and `k = n`).
    pub fn monomial(&self, idx: usize) -> Option<&MonomialElt> {
        let pairing = self.pairing.as_ref()?;
        Some(&self.component.nodes[pairing[idx]])
    }

    pub fn index_of(&self, v: &ColumnTableau) -> Option<usize> {
        self.columns.iter().position(|c| c == v)
    }

    pub fn highest(&self) -> &ColumnTableau {
        let want: Vec<i64> = (1..=self.k as i64).collect();
        self.columns
            .iter()
            .find(|c| c.us == want && c.ls.is_empty())
            .expect("highest column present")
    }

    pub fn lowest(&self) -> &ColumnTableau {
        let want: Vec<i64> = (1..=self.k as i64).collect();
        self.columns
            .iter()
            .find(|c| c.ls == want && c.us.is_empty())
            .expect("lowest column present")
    }

    /// Kashiwara operator on columns, induced through the monomial pairing.
    pub fn op(&self, idx: usize, i: usize, dir: KashiwaraDir) -> Option<usize> {
        let pairing = self.pairing.as_ref().expect("explicit pairing required");
        let sign = Sign::forward(self.lie.rank);
        let node = &self.component.nodes[pairing[idx]];
        let img = kashiwara(self.lie, &sign, node, i, dir)?;
        let img_node = self.component.index_of(&img).expect("image stays in the component");
        Some(
            pairing
                .iter()
                .position(|&p| p == img_node)
                .expect("pairing is onto the component"),
        )
    }
}

/// Build the type-C column crystal `B(Lambda_k)`: enumerate the admissible
/// columns, generate the monomial component of `c[k, n-k]`, check that the
/// cardinalities agree, and pair the two sides whenever an explicit map is
/// available.
pub fn column_crystal(lie: LieType, k: usize) -> Result<ColumnCrystal, ColumnError> {
    assert_eq!(lie.family, Family::C);
    let n = lie.rank;
    assert!(k >= 1 && k <= n);
    let columns: Vec<ColumnTableau> =
        all_columns(n, k).into_iter().filter(is_kn_column).collect();
    let sign = Sign::forward(n);
    let seed = MonomialElt::gen((n - k) as i32, k);
    let component = generate_component(lie, &sign, &seed, DEFAULT_CAP, false)
        .map_err(|e| ColumnError::Construction(e.to_string()))?;
    if component.len() != columns.len() {
        return Err(ColumnError::Construction(format!(
            "column count {} does not match component size {}",
            columns.len(),
            component.len()
        )));
    }
    let pairing = if k == n {
        let mut lookup: BTreeMap<MonomialElt, usize> = BTreeMap::new();
        for (node, m) in component.nodes.iter().enumerate() {
            lookup.insert(m.clone(), node);
        }
        let mut pairing = Vec::with_capacity(columns.len());
        for col in &columns {
            let m = monomial_map_m0(col);
            match lookup.get(&m) {
                Some(&node) => pairing.push(node),
                None => {
                    return Err(ColumnError::Construction(format!(
                        "monomial image of {col} is outside the component"
                    )))
                }
            }
        }
        let distinct: std::collections::BTreeSet<usize> = pairing.iter().copied().collect();
        if distinct.len() != columns.len() {
            return Err(ColumnError::Construction("monomial map is not injective".into()));
        }
        Some(pairing)
    } else if k == 1 {
        // weights of the vector crystal are multiplicity-free
        let mut pairing = Vec::with_capacity(columns.len());
        for col in &columns {
            let wt = col.weight();
            let node = component
                .nodes
                .iter()
                .position(|m| m.weight(n) == wt)
                .ok_or_else(|| ColumnError::Construction("weight not found".into()))?;
            pairing.push(node);
        }
        Some(pairing)
    } else {
        None
    };
    Ok(ColumnCrystal { lie, k, columns, component, pairing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn col(n: usize, letters: &[i64]) -> ColumnTableau {
        ColumnTableau::from_letters(n, letters).unwrap()
    }

    #[test]
    fn kn_membership_c2() {
        // [1, 1bar] is out (a+b = 2 > 1), [2, 2bar] is in (a+b = 2 <= 2)
        assert!(!is_kn_column(&col(2, &[1, -1])));
        assert!(is_kn_column(&col(2, &[2, -2])));
        let members: Vec<ColumnTableau> =
            all_columns(2, 2).into_iter().filter(is_kn_column).collect();
        assert_eq!(members.len(), 5);
    }

    #[test]
    fn column_crystal_c2_matches_component() {
        let lie = LieType::new(Family::C, 2).unwrap();
        let b2 = column_crystal(lie, 2).unwrap();
        assert_eq!(b2.len(), 5);
        assert_eq!(b2.highest().letters(), vec![1, 2]);
        assert_eq!(b2.lowest().letters(), vec![-2, -1]);
        let b1 = column_crystal(lie, 1).unwrap();
        assert_eq!(b1.len(), 4);
    }

    #[test]
    fn column_crystal_sizes_c3() {
        let lie = LieType::new(Family::C, 3).unwrap();
        for (k, expect) in [(1usize, 6usize), (2, 14), (3, 14)] {
            let b = column_crystal(lie, k).unwrap();
            assert_eq!(b.len(), expect, "k={k}");
        }
    }

    #[test]
    fn operators_commute_with_monomial_map() {
        let lie = LieType::new(Family::C, 3).unwrap();
        let sign = Sign::forward(3);
        for k in [1usize, 3] {
            let b = column_crystal(lie, k).unwrap();
            for idx in 0..b.len() {
                for i in 1..=3 {
                    for dir in [KashiwaraDir::F, KashiwaraDir::E] {
                        let img = b.op(idx, i, dir);
                        let mono_img = kashiwara(lie, &sign, b.monomial(idx).unwrap(), i, dir);
                        match (img, mono_img) {
                            (None, None) => {}
                            (Some(j), Some(m)) => assert_eq!(b.monomial(j), Some(&m)),
                            other => panic!("mismatch {other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn m0_endpoint_values() {
        let n = 3;
        let hi = col(n, &[1, 2, 3]);
        let lo = col(n, &[-3, -2, -1]);
        assert_eq!(monomial_map_m0(&hi), MonomialElt::gen(0, 3));
        assert_eq!(monomial_map_m0(&lo), MonomialElt::gen(3, 3).inv());
    }

    #[test]
    fn image_of_column_crystal_is_bb_set() {
        // m(B(Lambda_n)) equals the set of monomials over all columns (the
        // two sets of the paper's comparison), for n = 3 and 4
        for n in [3usize, 4] {
            let lie = LieType::new(Family::C, n).unwrap();
            let b = column_crystal(lie, n).unwrap();
            let image: BTreeSet<MonomialElt> =
                (0..b.len()).map(|i| b.monomial(i).unwrap().clone()).collect();
            let all: BTreeSet<MonomialElt> =
                all_columns(n, n).iter().map(monomial_map_m0).collect();
            assert_eq!(image, all);
        }
    }

    #[test]
    fn rectification_of_the_printed_example() {
        let v = col(10, &[1, 2, 3, 5, 6, -6, -5, -3, -2, -1]);
        let trace = rectify(&v).unwrap();
        assert_eq!(trace.result.letters(), vec![4, 7, 8, 9, 10, -10, -9, -8, -7, -4]);
        assert_eq!(trace.steps, vec![1, 5, 5, 7]);
        assert_eq!(
            trace.intermediates[0].letters(),
            vec![4, 5, 6, 5, 6, -6, -5, -6, -5, -4]
        );
        assert_eq!(
            trace.intermediates[1].letters(),
            vec![4, 5, 6, 7, 8, -6, -5, -8, -7, -4]
        );
        assert_eq!(
            trace.intermediates[2].letters(),
            vec![4, 7, 8, 7, 8, -8, -7, -8, -7, -4]
        );
        // strict level increase along the atomic steps
        assert!(trace.levels.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(*trace.levels.last().unwrap(), 10);
    }

    #[test]
    fn rectify_fixes_kn_columns() {
        for n in [3usize, 4] {
            for v in all_columns(n, n).into_iter().filter(is_kn_column) {
                let trace = rectify(&v).unwrap();
                assert_eq!(trace.result, v);
                assert!(trace.steps.is_empty());
            }
        }
    }

    #[test]
    fn level_is_n_iff_kn_member() {
        for n in [3usize, 4, 5] {
            for v in all_columns(n, n) {
                assert_eq!(level(&v) == n as i64, is_kn_column(&v), "{v}");
            }
        }
    }

    #[test]
    fn tau_preserves_monomial_and_raises_level() {
        for n in [3usize, 4] {
            for v in all_columns(n, n) {
                if is_kn_column(&v) {
                    continue;
                }
                let (i, halves) = tau_atomic(&v).expect("non-member has a move");
                for h in &halves {
                    assert!(is_extended_domain(h), "tau_{i} left the domain at {h}");
                    assert_eq!(monomial_map_m0(h), monomial_map_m0(&v));
                }
                assert!(level(halves.last().unwrap()) > level(&v));
            }
        }
    }

    #[test]
    fn rectification_is_confluent_under_all_pair_orders() {
        // explore every (+1)-pair resolution order from every column
        fn endpoints(v: &ColumnTableau, acc: &mut BTreeSet<ColumnTableau>) {
            let du = descents(&v.us);
            let dl = descents(&v.ls);
            let moves: Vec<ColumnTableau> = if du.is_empty() && dl.is_empty() {
                plus_one_pairs(v)
                    .into_iter()
                    .map(|(a, b)| resolve_pair(v, a, b, None))
                    .collect()
            } else {
                tau_atomic(v).map(|(_, hs)| vec![hs[0].clone()]).unwrap_or_default()
            };
            if moves.is_empty() {
                acc.insert(v.clone());
            } else {
                for m in moves {
                    assert!(is_extended_domain(&m), "left the domain at {m}");
                    endpoints(&m, acc);
                }
            }
        }
        let n = 4;
        for v in all_columns(n, n) {
            let mut acc = BTreeSet::new();
            endpoints(&v, &mut acc);
            assert_eq!(acc.len(), 1, "non-confluent from {v}");
            let end = acc.into_iter().next().unwrap();
            assert!(is_kn_column(&end));
            assert_eq!(end, rectify(&v).unwrap().result);
        }
    }

    #[test]
    fn rect_multiplicities_cover_all_columns() {
        // every column rectifies into the crystal; multiplicity counts add up
        for n in [3usize, 4] {
            let lie = LieType::new(Family::C, n).unwrap();
            let b = column_crystal(lie, n).unwrap();
            let mut counts: BTreeMap<ColumnTableau, usize> = BTreeMap::new();
            let all = all_columns(n, n);
            for v in &all {
                let r = rectify(v).unwrap().result;
                assert!(is_kn_column(&r));
                assert_eq!(monomial_map_m0(&r), monomial_map_m0(v));
                *counts.entry(r).or_insert(0) += 1;
            }
            assert_eq!(counts.values().sum::<usize>(), all.len());
            assert!(counts.keys().all(|c| b.index_of(c).is_some()));
        }
    }
}
