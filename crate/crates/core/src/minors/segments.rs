//! Segment families and the closed coefficient sums for the entries of the
//! products `X^(p) ... X^(1)` on the vector representations, together with
//! the matrix oracle they are tested against.

use super::MinorError;
use crate::laurent::{RationalFunction, Var};
use crate::rep::{one_param, BasisLabel, OneParamKind, RepElement, RepSpace, SpaceKind};
use crate::root_data::{Family, LieType};

fn cvar(node: i64, time: i64) -> RationalFunction {
    if node == 0 {
        RationalFunction::one()
    } else {
        RationalFunction::var(Var::c(node as u32, time as i32))
    }
}

/// A member of the family `M^{(p)}_k[r]` together with its segment
/// decomposition: `elems` are the chosen values and `slots[t]` is the
/// 1-based segment index of `elems[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentedSet {
    pub elems: Vec<i64>,
    pub slots: Vec<usize>,
    pub seg_count: usize,
}

impl SegmentedSet {
    fn new(elems: Vec<i64>, r: i64, seg_count: usize) -> Self {
        let mut slots = Vec::with_capacity(elems.len());
        let mut slot = 0usize;
        for (t, &m) in elems.iter().enumerate() {
            if t == 0 {
                slot = (m - 1 - r) as usize;
            } else {
                let gap = m - elems[t - 1];
                slot += (gap - 1) as usize;
                if gap == 1 {
                    // same run, same slot
                } else {
                    // slot advanced by gap - 1
                }
            }
            slots.push(slot);
        }
        SegmentedSet { elems, slots, seg_count }
    }

    /// Elements of the first segment, which is nonempty only when it starts
    /// at `2 + r`.
    pub fn first_segment(&self) -> Vec<i64> {
        self.elems
            .iter()
            .zip(&self.slots)
            .filter(|(_, s)| **s == 1)
            .map(|(m, _)| *m)
            .collect()
    }

    /// `min M_i >= i + 1` and `max M_i <= L + i - 1` for every segment.
    pub fn bounds_hold(&self, len_l: i64, r: i64) -> bool {
        for (m, s) in self.elems.iter().zip(&self.slots) {
            let i = *s as i64;
            if *m - r < i + 1 || *m - r > len_l + i - 1 {
                return false;
            }
        }
        self.slots.iter().all(|s| *s >= 1 && *s <= self.seg_count)
    }
}

/// All members of `M^{(p)}_k[r]` for the given type.
pub fn segment_family(lie: LieType, p: i64, k: i64, r: i64) -> Vec<SegmentedSet> {
    let n = lie.rank as i64;
    let (len_l, seg_count) = match lie.family {
        Family::D => (p - n + k + 1, (n - k) as usize),
        _ => (p - n + k, (n - k + 1) as usize),
    };
    let size = (len_l - 1).max(0) as usize;
    let lo = 2 + r;
    let hi = p + r;
    let mut out = Vec::new();
    if size == 0 {
        if len_l >= 1 {
            out.push(SegmentedSet::new(Vec::new(), r, seg_count));
        }
        return out;
    }
    if hi < lo {
        return out;
    }
    let pool: Vec<i64> = (lo..=hi).collect();
    let mut idx = vec![0usize; size];
    fn rec(
        pool: &[i64],
        size: usize,
        start: usize,
        idx: &mut Vec<usize>,
        depth: usize,
        r: i64,
        seg_count: usize,
        out: &mut Vec<SegmentedSet>,
    ) {
        if depth == size {
            let elems: Vec<i64> = idx.iter().map(|&i| pool[i]).collect();
            out.push(SegmentedSet::new(elems, r, seg_count));
            return;
        }
        for i in start..pool.len() {
            idx[depth] = i;
            rec(pool, size, i + 1, idx, depth + 1, r, seg_count, out);
        }
    }
    rec(&pool, size, 0, &mut idx, 0, r, seg_count, &mut out);
    out
}

/// `D^M`: product over the elements outside the first segment. For type D
/// the barred chain is one node shorter, so the slot-to-node map shifts.
fn d_product(lie: LieType, m: &SegmentedSet) -> RationalFunction {
    let n = lie.rank as i64;
    let shift = i64::from(lie.family == Family::D);
    let mut out = RationalFunction::one();
    for (e, s) in m.elems.iter().zip(&m.slots) {
        if *s == 1 {
            continue;
        }
        let nm = n - (*s as i64) + 1 - shift;
        out = out.mul(&cvar(nm - 1, *e).div(&cvar(nm, *e)).unwrap()).unwrap();
    }
    out
}

/// Weakly increasing tuples of the given length within `[lo, hi]`.
fn weakly_increasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    fn rec(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            rec(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    rec(len, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Target of a coefficient extraction: an unbarred letter, the middle vector
/// of type B, or a barred letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiTarget {
    Unbarred(i64),
    Zero,
    Barred(i64),
}

/// Matrix oracle: the coefficient of the target vector in
/// `X^(p) ... X^(1) v_{i-bar}` where `X^(q) = bold-x_n(c[n,q]) ... bold-x_1(c[1,q])`.
pub fn oracle_xi(
    lie: LieType,
    i: i64,
    p: i64,
    target: XiTarget,
) -> Result<RationalFunction, MinorError> {
    let space = RepSpace::new(lie, SpaceKind::Vector)?;
    let n = lie.rank;
    let mut x = RepElement::identity(space);
    for q in 1..=p {
        // X^(q) = bold-x_n(c[n,q]) ... bold-x_1(c[1,q])
        let mut blk = RepElement::identity(space);
        for node in (1..=n).rev() {
            blk = blk.mul(&one_param(space, OneParamKind::BoldX, node, &cvar(node as i64, q))?)?;
        }
        x = blk.mul(&x)?;
    }
    let col = space
        .index_of(&BasisLabel::VectorIdx(-(i as i32)))
        .expect("barred basis vector");
    let row_label = match target {
        XiTarget::Unbarred(j) => BasisLabel::VectorIdx(j as i32),
        XiTarget::Zero => BasisLabel::VectorIdx(0),
        XiTarget::Barred(j) => BasisLabel::VectorIdx(-(j as i32)),
    };
    let row = space.index_of(&row_label).expect("target basis vector");
    Ok(x.entry(row, col))
}

/// Closed segment-sum forms for the same coefficients.
pub fn closed_xi(
    lie: LieType,
    i: i64,
    p: i64,
    target: XiTarget,
) -> Result<RationalFunction, MinorError> {
    let n = lie.rank as i64;
    let out = match (lie.family, target) {
        (Family::C, XiTarget::Barred(k)) => {
            // sum over i = i_1 <= i_2 <= ... <= i_p <= k (empty when k < i)
            let mut acc = RationalFunction::zero();
            if i > k {
                return Ok(acc);
            }
            for tail in weakly_increasing((p - 1) as usize, i, k) {
                let mut chain = vec![i];
                chain.extend(tail);
                let mut term = RationalFunction::one();
                for (q, iq) in chain.iter().enumerate() {
                    term = term.div(&cvar(iq - 1, q as i64 + 1)).unwrap();
                }
                for (q, iq) in chain.iter().enumerate().skip(1) {
                    term = term.mul(&cvar(*iq, q as i64)).unwrap();
                }
                term = term.mul(&cvar(k, p)).unwrap();
                acc = acc.add(&term).unwrap();
            }
            acc
        }
        (Family::C, XiTarget::Unbarred(k)) => {
            let mut acc = RationalFunction::zero();
            for m in segment_family(lie, p, k, 0) {
                let first = m.first_segment();
                let d = d_product(lie, &m);
                for choice in weakly_increasing(first.len(), i - 1, n) {
                    let mut term = d.clone();
                    for (q, iq) in first.iter().zip(&choice) {
                        let f = if *iq == n {
                            cvar(n - 1, *q).div(&cvar(n, *q)).unwrap()
                        } else {
                            cvar(iq + 1, q - 1).div(&cvar(*iq, *q)).unwrap()
                        };
                        term = term.mul(&f).unwrap();
                    }
                    acc = acc.add(&term).unwrap();
                }
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        (Family::B, XiTarget::Barred(k)) => {
            let eps = |x: i64| i64::from(x == n);
            let mut acc = RationalFunction::zero();
            if i > k {
                return Ok(acc);
            }
            for tail in weakly_increasing((p - 1) as usize, i, k) {
                let mut term = RationalFunction::one();
                for (q0, iq) in tail.iter().enumerate() {
                    let q = q0 as i64 + 2;
                    term = term.div(&cvar(iq - 1, q)).unwrap();
                    term = term.mul(&cvar(*iq, q - 1).pow(1 + eps(*iq)).unwrap()).unwrap();
                }
                term = term.mul(&cvar(k, p).pow(1 + eps(k)).unwrap()).unwrap();
                acc = acc.add(&term).unwrap();
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        (Family::B, XiTarget::Zero) => {
            let eps = |x: i64| i64::from(x == n);
            let mut acc = RationalFunction::zero();
            for q in 1..=p {
                for tail in weakly_increasing((q - 1) as usize, i, n) {
                    let mut term = RationalFunction::one();
                    for (r0, iq) in tail.iter().enumerate() {
                        let r = r0 as i64 + 2;
                        term = term.div(&cvar(iq - 1, r)).unwrap();
                        term = term.mul(&cvar(*iq, r - 1).pow(1 + eps(*iq)).unwrap()).unwrap();
                    }
                    term = term.mul(&cvar(n, q)).unwrap();
                    acc = acc.add(&term).unwrap();
                }
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        (Family::B, XiTarget::Unbarred(k)) => {
            let eps = |x: i64| i64::from(x == n);
            let mut acc = RationalFunction::zero();
            for m in segment_family(lie, p, k, 0) {
                let first = m.first_segment();
                let d = d_product(lie, &m);
                // plain part
                for choice in weakly_increasing(first.len(), i - 1, n) {
                    let mut term = d.clone();
                    for (q, iq) in first.iter().zip(&choice) {
                        let num = cvar(iq + 1 - 2 * eps(*iq), q - 1 + eps(*iq))
                            .pow(1 + eps(iq + 1))
                            .unwrap();
                        let den = cvar(*iq, *q).pow(1 + eps(*iq)).unwrap();
                        term = term.mul(&num).unwrap().div(&den).unwrap();
                    }
                    acc = acc.add(&term).unwrap();
                }
                // doubled part through the middle vector
                if !first.is_empty() {
                    let a = *first.last().unwrap();
                    for b in 1..=a {
                        for c in (b + 1)..=a {
                            for js in weakly_increasing((b - 1) as usize, i, n) {
                                let mut term = d.clone();
                                for (q0, jq) in js.iter().enumerate() {
                                    let q = q0 as i64 + 2;
                                    term = term
                                        .mul(&cvar(*jq, q - 1).pow(1 + eps(*jq)).unwrap())
                                        .unwrap();
                                    term = term.div(&cvar(jq - 1, q)).unwrap();
                                }
                                term = term.mul(&cvar(n, b)).unwrap();
                                term = term.div(&cvar(n, c)).unwrap();
                                for t in (c + 1)..=a {
                                    term = term.mul(&cvar(n - 1, t)).unwrap();
                                    term = term.div(&cvar(n, t).pow(2).unwrap()).unwrap();
                                }
                                term = term.mul(&RationalFunction::from_i64(2)).unwrap();
                                acc = acc.add(&term).unwrap();
                            }
                        }
                    }
                }
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        (Family::D, XiTarget::Barred(k)) => {
            let epsp = |x: i64| i64::from(x == n - 1);
            let mut acc = RationalFunction::zero();
            if i > k {
                return Ok(acc);
            }
            for tail in weakly_increasing((p - 1) as usize, i, k) {
                let mut term = RationalFunction::one().div(&cvar(i - 1, 1)).unwrap();
                for (q0, iq) in tail.iter().enumerate() {
                    let q = q0 as i64 + 2;
                    term = term.div(&cvar(iq - 1, q)).unwrap();
                    term = term.mul(&cvar(*iq, q - 1)).unwrap();
                    if epsp(*iq) == 1 {
                        term = term.mul(&cvar(n, q - 1)).unwrap();
                    }
                }
                term = term.mul(&cvar(k, p)).unwrap();
                if epsp(k) == 1 {
                    term = term.mul(&cvar(n, p)).unwrap();
                }
                acc = acc.add(&term).unwrap();
            }
            acc
        }
        (Family::D, XiTarget::Unbarred(k)) if k == n => {
            // the chain starts at i and avoids n; entries may take the
            // virtual value n+1 (the source v_{n-bar} never climbs to v_n)
            let mut acc = RationalFunction::zero();
            if i == n {
                return Ok(acc);
            }
            let pool: Vec<i64> = (i..=n + 1).filter(|x| *x != n).collect();
            for tail in tuples_from_pool(&pool, (p - 1) as usize) {
                let mut term = RationalFunction::one().div(&cvar(i - 1, 1)).unwrap();
                for (q0, iq) in tail.iter().enumerate() {
                    let q = q0 as i64 + 2;
                    term = term.div(&cvar(iq - 1, q)).unwrap();
                    let node = if *iq == n + 1 { n - 1 } else { *iq };
                    term = term.mul(&cvar(node, q - 1)).unwrap();
                    if *iq == n - 1 {
                        term = term.mul(&cvar(n, q - 1)).unwrap();
                    }
                }
                term = term.mul(&cvar(n - 1, p)).unwrap();
                acc = acc.add(&term).unwrap();
            }
            acc
        }
        (Family::D, XiTarget::Unbarred(k)) if i == n => {
            // degenerate source: from v_{n-bar} only the c_n-route of the
            // bridge is reachable and the barred descents sit one node lower
            let mut acc = RationalFunction::zero();
            for m in segment_family(lie, p, k, 0) {
                let first = m.first_segment();
                let d = d_product(lie, &m);
                if first.is_empty() {
                    acc = acc.add(&d).unwrap();
                    continue;
                }
                let a = *first.last().unwrap();
                for c in 1..=a {
                    let mut term = d.clone();
                    for t in 1..c {
                        term = term.mul(&cvar(n, t)).unwrap();
                    }
                    for t in 2..=c {
                        term = term.div(&cvar(n - 1, t)).unwrap();
                    }
                    for t in (c + 1)..=a {
                        term = term.mul(&cvar(n - 2, t)).unwrap();
                        term = term.div(&cvar(n - 1, t).mul(&cvar(n, t)).unwrap()).unwrap();
                    }
                    acc = acc.add(&term).unwrap();
                }
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        (Family::D, XiTarget::Unbarred(k)) => {
            let eps = |x: i64| i64::from(x == n);
            let mut acc = RationalFunction::zero();
            for m in segment_family(lie, p, k, 0) {
                let first = m.first_segment();
                let d = d_product(lie, &m);
                if first.is_empty() {
                    acc = acc.add(&d).unwrap();
                    continue;
                }
                let a = *first.last().unwrap();
                for b in 1..=a {
                    for c in b..=a {
                        for is in weakly_increasing((b - 1) as usize, i, n - 1) {
                            let mut term = d.clone();
                            for (q0, iq) in is.iter().enumerate() {
                                let q = q0 as i64 + 2;
                                term = term.mul(&cvar(*iq, q - 1)).unwrap();
                                if eps(iq + 1) == 1 {
                                    term = term.mul(&cvar(n, q - 1)).unwrap();
                                }
                                term = term.div(&cvar(iq - 1, q)).unwrap();
                            }
                            // E part over [b, c]
                            if c > b {
                                let mut e1 = RationalFunction::one();
                                let mut e2 = RationalFunction::one();
                                for t in b..c {
                                    e1 = e1.mul(&cvar(n, t)).unwrap();
                                    e2 = e2.mul(&cvar(n - 1, t)).unwrap();
                                }
                                for t in (b + 1)..=c {
                                    e1 = e1.div(&cvar(n - 1, t)).unwrap();
                                    e2 = e2.div(&cvar(n, t)).unwrap();
                                }
                                term = term.mul(&e1.add(&e2).unwrap()).unwrap();
                            }
                            // F part over (c, a]
                            for t in (c + 1)..=a {
                                term = term.mul(&cvar(n - 2, t)).unwrap();
                                term = term
                                    .div(&cvar(n - 1, t).mul(&cvar(n, t)).unwrap())
                                    .unwrap();
                            }
                            acc = acc.add(&term).unwrap();
                        }
                    }
                }
            }
            acc.div(&cvar(i - 1, 1)).unwrap()
        }
        _ => return Err(MinorError::Unsupported),
    };
    Ok(out)
}

fn tuples_from_pool(pool: &[i64], len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(pool: &[i64], len: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for (idx, v) in pool.iter().enumerate().skip(start) {
            cur.push(*v);
            rec(pool, len, idx, cur, out);
            cur.pop();
        }
    }
    rec(pool, len, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    #[test]
    fn segment_decomposition_of_the_worked_example() {
        // n = p = 6, k = 4: L = 4, S = 3
        let l = lie(Family::C, 6);
        let fam = segment_family(l, 6, 4, 0);
        let find = |elems: &[i64]| -> Vec<usize> {
            fam.iter()
                .find(|m| m.elems == elems)
                .map(|m| m.slots.clone())
                .unwrap()
        };
        assert_eq!(find(&[2, 3, 5]), vec![1, 1, 2]);
        assert_eq!(find(&[2, 3, 6]), vec![1, 1, 3]);
        assert_eq!(find(&[2, 4, 6]), vec![1, 2, 3]);
        assert_eq!(find(&[3, 4, 6]), vec![2, 2, 3]);
    }

    #[test]
    fn segment_bounds_lemma() {
        for l in [lie(Family::C, 4), lie(Family::C, 6), lie(Family::B, 5), lie(Family::D, 5)] {
            let n = l.rank as i64;
            let kmax = if l.family == Family::D { n - 1 } else { n };
            let pmax = if l.family == Family::D { n - 1 } else { n };
            for p in 1..=pmax {
                for k in 1..=kmax {
                    for r in 0..=(n - p).max(0) {
                        let (len_l, _) = match l.family {
                            Family::D => (p - n + k + 1, 0),
                            _ => (p - n + k, 0),
                        };
                        for m in segment_family(l, p, k, r) {
                            assert!(m.bounds_hold(len_l, r), "{l} p={p} k={k} r={r} {m:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn segment_terms_use_only_the_shifted_window() {
        // the C-family product over a member of M^{(p)}_k[r] only involves
        // the blocks 2+r .. p+r
        let l = lie(Family::C, 5);
        let n = 5i64;
        for (p, k, r) in [(3i64, 4i64, 0i64), (3, 4, 1), (3, 4, 2), (4, 4, 1)] {
            for m in segment_family(l, p, k, r) {
                let d = d_product(l, &m);
                let first = m.first_segment();
                for choice in weakly_increasing(first.len(), 0, n) {
                    let mut term = d.clone();
                    for (q, iq) in first.iter().zip(&choice) {
                        let f = if *iq == n {
                            cvar(n - 1, *q).div(&cvar(n, *q)).unwrap()
                        } else {
                            cvar(iq + 1, q - 1).div(&cvar(*iq, *q)).unwrap()
                        };
                        term = term.mul(&f).unwrap();
                    }
                    for v in term.vars() {
                        assert!(
                            (v.time as i64) >= 1 + r && (v.time as i64) <= p + r,
                            "variable {v} outside window [{}..{}] in {m:?}",
                            2 + r,
                            p + r
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c_xi_oracle_one_factor() {
        // X^(1) v_{i-bar} has v_n coefficient 1/c[i-1,1]
        let l = lie(Family::C, 3);
        for i in 1..=3i64 {
            let o = oracle_xi(l, i, 1, XiTarget::Unbarred(3)).unwrap();
            assert_eq!(o, RationalFunction::one().div(&cvar(i - 1, 1)).unwrap());
            let c = closed_xi(l, i, 1, XiTarget::Unbarred(3)).unwrap();
            assert_eq!(o, c);
        }
    }

    #[test]
    fn xi_full_product_gives_the_left_minor() {
        // the coefficient of v_2 in X^(n)...X^(1) v_{1-bar} is the minor
        // Delta_{w0 L1, s1 L1}(Theta^-)
        use crate::minors::{oracle_minor_side, MinorSide};
        use crate::rep::Factorization;
        for n in [2usize, 3] {
            let l = lie(Family::C, n);
            let xi = oracle_xi(l, 1, n as i64, XiTarget::Unbarred(2)).unwrap();
            let fact = Factorization::standard(l);
            let minor = oracle_minor_side(l, 1, MinorSide::Left, &fact).unwrap();
            assert_eq!(xi, minor, "C{n}");
            let closed = closed_xi(l, 1, n as i64, XiTarget::Unbarred(2)).unwrap();
            assert_eq!(closed, minor);
        }
    }

    #[test]
    fn xi_closed_equals_oracle_c2() {
        let l = lie(Family::C, 2);
        let n = 2i64;
        for i in 1..=n {
            for p in 1..=n {
                for k in 1..=n {
                    for target in [XiTarget::Unbarred(k), XiTarget::Barred(k)] {
                        let o = oracle_xi(l, i, p, target).unwrap();
                        let c = closed_xi(l, i, p, target).unwrap();
                        assert_eq!(o, c, "C2 i={i} p={p} {target:?}");
                    }
                }
            }
        }
    }
}
