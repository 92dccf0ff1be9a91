//! Nakajima monomial crystals: signs, the monomials `A_{m,i}`, Kashiwara
//! operators, connected-component generation, and the bar duality.

use crate::laurent::{LaurentPoly, RationalFunction, Var};
use crate::root_data::LieType;
use num::rational::BigRational;
use num::One;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("component cap {cap} exceeded while expanding from {seed}")]
    CapExceeded { cap: usize, seed: String },
    #[error("seed is neither highest nor lowest; pass the override flag to expand anyway")]
    NotExtremal,
}

/// A sign: `p[i][j] + p[j][i] = 1` for `i != j` (1-indexed access).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sign {
    n: usize,
    p: Vec<Vec<u8>>,
}

impl Sign {
    /// Sign associated with the cyclic sequence `(i_1 i_2 ... i_n)`:
    /// `p_{i_a, i_b} = 1` iff `a < b`.
    pub fn from_cycle(cycle: &[usize]) -> Self {
        let n = cycle.len();
        let mut p = vec![vec![0u8; n + 1]; n + 1];
        for (a, &ia) in cycle.iter().enumerate() {
            for (b, &ib) in cycle.iter().enumerate() {
                if a < b {
                    p[ia][ib] = 1;
                }
            }
        }
        Sign { n, p }
    }

    /// The forward cyclic sign `(1 2 ... n)`: `p_{ij} = 1` iff `i < j`.
    pub fn forward(n: usize) -> Self {
        Sign::from_cycle(&(1..=n).collect::<Vec<_>>())
    }

    /// The reverse cyclic sign `(n ... 2 1)`: `p_{ij} = 1` iff `i > j`.
    pub fn reverse(n: usize) -> Self {
        Sign::from_cycle(&(1..=n).rev().collect::<Vec<_>>())
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        i64::from(self.p[i][j])
    }

    /// The transposed sign `p'_{ij} = p_{ji}`.
    pub fn transpose(&self) -> Self {
        let mut p = vec![vec![0u8; self.n + 1]; self.n + 1];
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    p[i][j] = self.p[j][i];
                }
            }
        }
        Sign { n: self.n, p }
    }
}

/// A Laurent monomial in the doubly indexed variables `Y_{m,i}`; keys are
/// `(time m, node i)` and zero exponents are never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MonomialElt {
    exps: BTreeMap<(i32, usize), i64>,
}

impl MonomialElt {
    pub fn one() -> Self {
        MonomialElt::default()
    }

    pub fn gen(m: i32, i: usize) -> Self {
        MonomialElt { exps: BTreeMap::from([((m, i), 1)]) }
    }

    pub fn from_exps(exps: &[((i32, usize), i64)]) -> Self {
        let mut e = BTreeMap::new();
        for (k, v) in exps {
            if *v != 0 {
                *e.entry(*k).or_insert(0) += v;
            }
        }
        e.retain(|_, v| *v != 0);
        MonomialElt { exps: e }
    }

    pub fn exps(&self) -> &BTreeMap<(i32, usize), i64> {
        &self.exps
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.exps.clone();
        for (k, v) in &other.exps {
            let entry = e.entry(*k).or_insert(0);
            *entry += v;
            if *entry == 0 {
                e.remove(k);
            }
        }
        MonomialElt { exps: e }
    }

    pub fn inv(&self) -> Self {
        MonomialElt { exps: self.exps.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    /// Weight in fundamental-weight coordinates.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0i64; n];
        for ((_, i), l) in &self.exps {
            wt[i - 1] += l;
        }
        wt
    }

    fn node_profile(&self, i: usize) -> Vec<(i32, i64)> {
        self.exps
            .iter()
            .filter(|((_, node), _)| *node == i)
            .map(|((m, _), l)| (*m, *l))
            .collect()
    }

    pub fn phi(&self, i: usize) -> i64 {
        let profile = self.node_profile(i);
        let mut best = 0i64;
        let mut acc = 0i64;
        for (_, l) in &profile {
            acc += l;
            best = best.max(acc);
        }
        best
    }

    pub fn eps(&self, i: usize) -> i64 {
        let total: i64 = self.node_profile(i).iter().map(|(_, l)| l).sum();
        self.phi(i) - total
    }

    /// Smallest time at which the running sum attains `phi_i`.
    fn n_f(&self, i: usize) -> Option<i32> {
        let profile = self.node_profile(i);
        let phi = self.phi(i);
        let mut acc = 0i64;
        for (m, l) in &profile {
            acc += l;
            if acc == phi {
                return Some(*m);
            }
        }
        None
    }

    /// Largest time at which the running sum still equals `phi_i`.
    fn n_e(&self, i: usize) -> Option<i32> {
        let profile = self.node_profile(i);
        let phi = self.phi(i);
        let mut acc = 0i64;
        let mut hit: Option<usize> = None;
        for (idx, (_, l)) in profile.iter().enumerate() {
            acc += l;
            if acc == phi {
                hit = Some(idx);
            }
        }
        match hit {
            Some(idx) if idx + 1 < profile.len() => Some(profile[idx + 1].0 - 1),
            Some(_) => None, // running sum stays at phi; eps = 0 there
            None => {
                // phi attained only by the empty prefix
                if phi == 0 {
                    profile.first().map(|(m, _)| m - 1)
                } else {
                    None
                }
            }
        }
    }

    /// Inverse of `to_rational` for single monomials with coefficient one.
    pub fn from_rational(f: &RationalFunction) -> Option<Self> {
        let poly = f.as_poly()?;
        let (exps, coeff) = poly.terms().iter().next()?;
        if poly.num_terms() != 1 || !coeff.is_one() {
            return None;
        }
        let items: Vec<((i32, usize), i64)> = exps
            .iter()
            .map(|(v, k)| ((v.time, v.node as usize), *k))
            .collect();
        Some(MonomialElt::from_exps(&items))
    }

    /// Conversion to the `c[i,m]` Laurent monomial under `Y_{m,i} = c[i,m]`.
    pub fn to_rational(&self) -> RationalFunction {
        let exps: Vec<(Var, i64)> = self
            .exps
            .iter()
            .map(|((m, i), l)| (Var::c(*i as u32, *m), *l))
            .collect();
        RationalFunction::from_poly(LaurentPoly::monomial(&exps, BigRational::one()))
    }
}

impl fmt::Display for MonomialElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// The monomial `A_{m,i} = Y_{m,i} Y_{m+1,i} prod_{j != i} Y_{m+p_{ji}, j}^{a_{ji}}`.
pub fn a_monomial(lie: LieType, sign: &Sign, i: usize, m: i32) -> MonomialElt {
    let a = lie.cartan();
    let mut exps = vec![((m, i), 1i64), ((m + 1, i), 1)];
    for j in 1..=lie.rank {
        if j != i {
            let coeff = a[j - 1][i - 1];
            if coeff != 0 {
                exps.push(((m + sign.get(j, i) as i32, j), coeff));
            }
        }
    }
    MonomialElt::from_exps(&exps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KashiwaraDir {
    F,
    E,
}

/// Kashiwara operator on monomials; `None` encodes 0.
pub fn kashiwara(
    lie: LieType,
    sign: &Sign,
    y: &MonomialElt,
    i: usize,
    dir: KashiwaraDir,
) -> Option<MonomialElt> {
    match dir {
        KashiwaraDir::F => {
            if y.phi(i) > 0 {
                let m = y.n_f(i).expect("phi > 0 has a witness");
                Some(y.mul(&a_monomial(lie, sign, i, m).inv()))
            } else {
                None
            }
        }
        KashiwaraDir::E => {
            if y.eps(i) > 0 {
                let m = y.n_e(i).expect("eps > 0 has a witness");
                Some(y.mul(&a_monomial(lie, sign, i, m)))
            } else {
                None
            }
        }
    }
}

/// Bar duality `Y_{m,i} -> Y_{a-m,i}^{-1}`, a crystal map to the transposed
/// sign that swaps the roles of f and e.
pub fn bar_dual(y: &MonomialElt, a: i32) -> MonomialElt {
    MonomialElt { exps: y.exps.iter().map(|((m, i), l)| ((a - m, *i), -l)).collect() }
}

/// An edge of a crystal graph: `f_i(from) = to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub i: usize,
}

/// A generated connected component of the monomial crystal.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub lie: LieType,
    pub nodes: Vec<MonomialElt>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn index_of(&self, y: &MonomialElt) -> Option<usize> {
        self.nodes.binary_search(y).ok()
    }

    pub fn contains(&self, y: &MonomialElt) -> bool {
        self.index_of(y).is_some()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn highest(&self) -> Vec<&MonomialElt> {
        self.nodes
            .iter()
            .filter(|y| (1..=self.lie.rank).all(|i| y.eps(i) == 0))
            .collect()
    }

    pub fn lowest(&self) -> Vec<&MonomialElt> {
        self.nodes
            .iter()
            .filter(|y| (1..=self.lie.rank).all(|i| y.phi(i) == 0))
            .collect()
    }

    /// Canonical DOT rendering; nodes carry the monomial and its weight,
    /// edges the operator index.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (k, y) in self.nodes.iter().enumerate() {
            let wt = y.weight(self.lie.rank);
            out.push_str(&format!("  n{} [label=\"{}  wt={:?}\"];\n", k, y, wt));
        }
        for e in &self.edges {
            out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", e.from, e.to, e.i));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "v1",
            "type": self.lie.to_string(),
            "nodes": self.nodes.iter().map(|y| serde_json::json!({
                "monomial": y.to_string(),
                "weight": y.weight(self.lie.rank),
            })).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

/// Closure of a seed monomial under the Kashiwara operators. The seed must be
/// highest or lowest unless `force` is set; expansion stops with an error
/// when `cap` is exceeded.
pub fn generate_component(
    lie: LieType,
    sign: &Sign,
    seed: &MonomialElt,
    cap: usize,
    force: bool,
) -> Result<CrystalGraph, MonomialError> {
    let n = lie.rank;
    let highest = (1..=n).all(|i| seed.eps(i) == 0);
    let lowest = (1..=n).all(|i| seed.phi(i) == 0);
    if !highest && !lowest && !force {
        return Err(MonomialError::NotExtremal);
    }
    let mut seen: BTreeSet<MonomialElt> = BTreeSet::new();
    let mut queue: VecDeque<MonomialElt> = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(y) = queue.pop_front() {
        for i in 1..=n {
            for dir in [KashiwaraDir::F, KashiwaraDir::E] {
                if let Some(z) = kashiwara(lie, sign, &y, i, dir) {
                    if seen.insert(z.clone()) {
                        if seen.len() > cap {
                            return Err(MonomialError::CapExceeded {
                                cap,
                                seed: seed.to_string(),
                            });
                        }
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    let nodes: Vec<MonomialElt> = seen.into_iter().collect();
    let mut edges = Vec::new();
    for (k, y) in nodes.iter().enumerate() {
        for i in 1..=n {
            if let Some(z) = kashiwara(lie, sign, y, i, KashiwaraDir::F) {
                let to = nodes.binary_search(&z).expect("closure is closed under f");
                edges.push(CrystalEdge { from: k, to, i });
            }
        }
    }
    Ok(CrystalGraph { lie, nodes, edges })
}

/// Default node cap for component generation.
pub const DEFAULT_CAP: usize = 100_000;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Family;
    use rand::{Rng, SeedableRng};

    fn lie(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    fn y(m: i32, i: usize) -> MonomialElt {
        MonomialElt::gen(m, i)
    }

    #[test]
    fn a_monomial_matches_displayed_forms() {
        // type C, forward sign, node n: Y_{m,n} Y_{m+1,n} Y_{m+1,n-1}^{-2}
        let l = lie(Family::C, 3);
        let a = a_monomial(l, &Sign::forward(3), 3, 1);
        assert_eq!(
            a,
            MonomialElt::from_exps(&[((1, 3), 1), ((2, 3), 1), ((2, 2), -2)])
        );
        // type B, reverse sign, node n: Y_{m,n} Y_{m,n-1}^{-1} Y_{m+1,n}
        let l = lie(Family::B, 3);
        let a = a_monomial(l, &Sign::reverse(3), 3, 2);
        assert_eq!(
            a,
            MonomialElt::from_exps(&[((2, 3), 1), ((3, 3), 1), ((2, 2), -1)])
        );
    }

    #[test]
    fn a_monomial_weight_is_simple_root() {
        for l in [lie(Family::A, 3), lie(Family::B, 3), lie(Family::C, 3), lie(Family::D, 4)] {
            for sign in [Sign::forward(l.rank), Sign::reverse(l.rank)] {
                for i in 1..=l.rank {
                    let a = a_monomial(l, &sign, i, 0);
                    assert_eq!(a.weight(l.rank), l.simple_root(i));
                }
            }
        }
    }

    #[test]
    fn a2_forward_chain_from_y11() {
        // f_1(Y_{1,1}) = Y_{1,2} / Y_{2,1}
        let l = lie(Family::A, 2);
        let s = Sign::forward(2);
        let f1 = kashiwara(l, &s, &y(1, 1), 1, KashiwaraDir::F).unwrap();
        assert_eq!(f1, MonomialElt::from_exps(&[((1, 2), 1), ((2, 1), -1)]));
    }

    #[test]
    fn f_absent_when_phi_zero() {
        let l = lie(Family::A, 2);
        let s = Sign::forward(2);
        let bottom = y(1, 2).inv();
        assert_eq!(bottom.phi(2), 0);
        assert!(kashiwara(l, &s, &bottom, 2, KashiwaraDir::F).is_none());
    }

    fn random_monomial(rng: &mut impl Rng, n: usize) -> MonomialElt {
        let mut exps = Vec::new();
        for _ in 0..rng.gen_range(1..5) {
            exps.push((
                (rng.gen_range(-2i32..4), rng.gen_range(1..=n)),
                rng.gen_range(-3i64..4),
            ));
        }
        MonomialElt::from_exps(&exps)
    }

    #[test]
    fn e_undoes_f_on_random_monomials() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for l in [lie(Family::A, 3), lie(Family::B, 3), lie(Family::C, 3), lie(Family::D, 4)] {
            let s = Sign::forward(l.rank);
            let mut done = 0;
            while done < 500 {
                let m = random_monomial(&mut rng, l.rank);
                let i = rng.gen_range(1..=l.rank);
                if let Some(fm) = kashiwara(l, &s, &m, i, KashiwaraDir::F) {
                    let back = kashiwara(l, &s, &fm, i, KashiwaraDir::E).expect("e after f");
                    assert_eq!(back, m);
                    done += 1;
                }
            }
        }
    }

    #[test]
    fn eps_is_phi_minus_weight_pairing() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for l in [lie(Family::B, 3), lie(Family::D, 4)] {
            for _ in 0..200 {
                let m = random_monomial(&mut rng, l.rank);
                let wt = m.weight(l.rank);
                for i in 1..=l.rank {
                    assert_eq!(m.eps(i), m.phi(i) - l.pair(i, &wt));
                }
            }
        }
    }

    #[test]
    fn vector_component_size_for_c() {
        for n in [2usize, 3] {
            let l = lie(Family::C, n);
            let g = generate_component(l, &Sign::forward(n), &y(1, 1), DEFAULT_CAP, false).unwrap();
            assert_eq!(g.len(), 2 * n);
            assert_eq!(g.highest().len(), 1);
            assert_eq!(g.lowest().len(), 1);
        }
    }

    #[test]
    fn spin_component_size_for_b() {
        for n in [2usize, 3, 4] {
            let l = lie(Family::B, n);
            let g = generate_component(l, &Sign::reverse(n), &y(1, n), DEFAULT_CAP, false).unwrap();
            assert_eq!(g.len(), 1usize << n);
        }
    }

    #[test]
    fn a3_vector_component_is_the_listed_set() {
        // B(Lambda_1) = { Y_{m,1}, Y_{m,2}/Y_{m+1,1}, Y_{m,3}/Y_{m+1,2}, 1/Y_{m+1,3} }
        let l = lie(Family::A, 3);
        let g = generate_component(l, &Sign::forward(3), &y(1, 1), DEFAULT_CAP, false).unwrap();
        let expect: BTreeSet<MonomialElt> = [
            y(1, 1),
            MonomialElt::from_exps(&[((1, 2), 1), ((2, 1), -1)]),
            MonomialElt::from_exps(&[((1, 3), 1), ((2, 2), -1)]),
            y(2, 3).inv(),
        ]
        .into_iter()
        .collect();
        assert_eq!(g.nodes.iter().cloned().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn crystal_axioms_on_generated_component() {
        let l = lie(Family::C, 3);
        let s = Sign::forward(3);
        let g = generate_component(l, &s, &y(2, 2), DEFAULT_CAP, false).unwrap();
        for node in &g.nodes {
            for i in 1..=l.rank {
                if let Some(f) = kashiwara(l, &s, node, i, KashiwaraDir::F) {
                    assert!(g.contains(&f));
                    assert_eq!(kashiwara(l, &s, &f, i, KashiwaraDir::E).as_ref(), Some(node));
                    assert_eq!(f.eps(i), node.eps(i) + 1);
                    assert_eq!(f.phi(i), node.phi(i) - 1);
                    let mut wt = node.weight(l.rank);
                    let alpha = l.simple_root(i);
                    for (w, a) in wt.iter_mut().zip(&alpha) {
                        *w -= a;
                    }
                    assert_eq!(f.weight(l.rank), wt);
                }
            }
        }
    }

    #[test]
    fn lowest_weight_is_w0_of_highest() {
        for (l, seed) in [
            (lie(Family::A, 3), y(1, 2)),
            (lie(Family::B, 2), y(1, 2)),
            (lie(Family::C, 3), y(1, 1)),
            (lie(Family::D, 4), y(1, 4)),
        ] {
            let g = generate_component(l, &Sign::forward(l.rank), &seed, DEFAULT_CAP, false).unwrap();
            let hi = g.highest()[0].weight(l.rank);
            let lo = g.lowest()[0].weight(l.rank);
            let w0 = l.longest_element();
            assert_eq!(lo, w0.apply_weight(&hi));
        }
    }

    #[test]
    fn bar_dual_is_involutive_and_swaps_structure() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for l in [lie(Family::A, 3), lie(Family::B, 3), lie(Family::C, 2), lie(Family::D, 4)] {
            let p = Sign::forward(l.rank);
            let tp = p.transpose();
            for _ in 0..500 {
                let m = random_monomial(&mut rng, l.rank);
                let a = rng.gen_range(-3i32..5);
                let bar = bar_dual(&m, a);
                assert_eq!(bar_dual(&bar, a), m);
                for i in 1..=l.rank {
                    assert_eq!(bar.phi(i), m.eps(i));
                    assert_eq!(bar.eps(i), m.phi(i));
                }
                let mut neg = m.weight(l.rank);
                neg.iter_mut().for_each(|x| *x = -*x);
                assert_eq!(bar.weight(l.rank), neg);
                // duality of the defining monomials and of the operators
                for i in 1..=l.rank {
                    let am = a_monomial(l, &p, i, 2);
                    assert_eq!(bar_dual(&am, a), a_monomial(l, &tp, i, a - 2 - 1).inv());
                    let f = kashiwara(l, &p, &m, i, KashiwaraDir::F);
                    let e_of_bar = kashiwara(l, &tp, &bar, i, KashiwaraDir::E);
                    assert_eq!(f.map(|x| bar_dual(&x, a)), e_of_bar);
                    let e = kashiwara(l, &p, &m, i, KashiwaraDir::E);
                    let f_of_bar = kashiwara(l, &tp, &bar, i, KashiwaraDir::F);
                    assert_eq!(e.map(|x| bar_dual(&x, a)), f_of_bar);
                }
            }
        }
    }

    #[test]
    fn bar_of_spin_component_swaps_extremes() {
        let n = 3;
        let l = lie(Family::B, n);
        // component of c[n,1] over the reverse sign
        let g = generate_component(l, &Sign::reverse(n), &y(1, n), DEFAULT_CAP, false).unwrap();
        let mapped: BTreeSet<MonomialElt> =
            g.nodes.iter().map(|m| bar_dual(m, n as i32 + 1)).collect();
        // equals the component of c[n,0] over the forward sign
        let g2 = generate_component(l, &Sign::forward(n), &y(0, n), DEFAULT_CAP, false).unwrap();
        assert_eq!(mapped, g2.nodes.iter().cloned().collect::<BTreeSet<_>>());
        let hi = g.highest()[0];
        let lo2 = g2.lowest()[0];
        assert_eq!(&bar_dual(hi, n as i32 + 1), lo2);
    }

    #[test]
    fn cap_exceeded_names_the_seed() {
        let l = lie(Family::A, 2);
        let err = generate_component(l, &Sign::forward(2), &y(1, 1), 2, false).unwrap_err();
        match err {
            MonomialError::CapExceeded { cap, seed } => {
                assert_eq!(cap, 2);
                assert!(seed.contains("c[1,1]"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
