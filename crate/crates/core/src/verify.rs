//! Suite runners pairing every closed formula with its independent oracle.
//! These back both the command-line `verify` command and the acceptance
//! tests.

use crate::laurent::RationalFunction;
use crate::minors::{
    closed_form_minor, closed_xi, monomial_form_minor, oracle_minor, oracle_minor_side,
    oracle_xi, MinorSide, MinorSpec, XiTarget,
};
use crate::monomial::{
    bar_dual, generate_component, kashiwara, KashiwaraDir, MonomialElt, Sign, DEFAULT_CAP,
};
use crate::rep::Factorization;
use crate::report::{Check, Status, Timer};
use crate::root_data::{Family, LieType};
use crate::tableaux::{
    all_columns, column_crystal, is_kn_column, monomial_map_m0, rectify,
    spin_vector_of_label, triangle_monomial, triangle_monomial_bar, word_e, ColumnTableau,
    Triangle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

fn check(
    family: String,
    lie: LieType,
    k: Option<usize>,
    timer: Timer,
    pass: bool,
    lhs_terms: usize,
    rhs_terms: usize,
    detail: Option<String>,
) -> Check {
    Check {
        family,
        lie: lie.to_string(),
        rank: lie.rank,
        k,
        status: if pass { Status::Pass } else { Status::Fail },
        elapsed_ms: timer.ms(),
        lhs_terms,
        rhs_terms,
        detail,
    }
}

fn eq_check(
    family: String,
    lie: LieType,
    k: Option<usize>,
    timer: Timer,
    lhs: &RationalFunction,
    rhs: &RationalFunction,
) -> Check {
    let pass = lhs == rhs;
    let detail =
        if pass { None } else { Some(format!("lhs = {lhs} ; rhs = {rhs}")) };
    check(family, lie, k, timer, pass, lhs.num_terms(), rhs.num_terms(), detail)
}

/// Closed-form minors against the oracle (and the crystal route), both
/// sides, every fundamental index. A sign failure surfaces as a failed
/// positivity check.
pub fn suite_minors(lie: LieType) -> Vec<Check> {
    let mut out = Vec::new();
    let fact = Factorization::standard(lie);
    for k in 1..=lie.rank {
        for side in [MinorSide::Left, MinorSide::Right] {
            let tag = match side {
                MinorSide::Left => "L",
                MinorSide::Right => "R",
            };
            let t = Timer::start();
            let oracle = oracle_minor_side(lie, k, side, &fact).expect("oracle");
            let closed = closed_form_minor(lie, k, side).expect("closed form");
            let mut pass = oracle == closed;
            let mut detail = None;
            if !oracle.is_positive_flagged() && !oracle.numerator().all_coeffs_positive() {
                pass = false;
                detail = Some("oracle minor is not subtraction-free".into());
            }
            if !pass && detail.is_none() {
                detail = Some(format!("oracle = {oracle} ; closed = {closed}"));
            }
            out.push(check(
                format!("minor/{tag}/k={k}"),
                lie,
                Some(k),
                t,
                pass,
                oracle.num_terms(),
                closed.num_terms(),
                detail,
            ));
            let t = Timer::start();
            let mono = monomial_form_minor(lie, k, side).expect("monomial route");
            out.push(eq_check(
                format!("minor/{tag}-mono/k={k}"),
                lie,
                Some(k),
                t,
                &oracle,
                &mono,
            ));
        }
    }
    out
}

/// Only the spin-node checks of the minors suite (used where the wedge
/// fundamentals are covered at lower rank already).
pub fn suite_minors_spin_only(lie: LieType) -> Vec<Check> {
    let fact = Factorization::standard(lie);
    let n = lie.rank;
    let ks: Vec<usize> = match lie.family {
        Family::B => vec![n],
        Family::D => vec![n - 1, n],
        _ => vec![],
    };
    let mut out = Vec::new();
    for k in ks {
        for side in [MinorSide::Left, MinorSide::Right] {
            let tag = match side {
                MinorSide::Left => "L",
                MinorSide::Right => "R",
            };
            let t = Timer::start();
            let oracle = oracle_minor_side(lie, k, side, &fact).expect("oracle");
            let closed = closed_form_minor(lie, k, side).expect("closed form");
            out.push(eq_check(format!("minor/{tag}/k={k}"), lie, Some(k), t, &oracle, &closed));
        }
    }
    out
}

/// `Delta_{w0 Lambda_i, Lambda_i}(Theta^-) = 1` for every fundamental.
pub fn suite_del1(lie: LieType) -> Vec<Check> {
    let fact = Factorization::standard(lie);
    (1..=lie.rank)
        .map(|k| {
            let t = Timer::start();
            let v = oracle_minor(&MinorSpec::principal_family(lie, k), &fact).expect("oracle");
            let pass = v.is_one();
            check(
                format!("principal-minor/k={k}"),
                lie,
                Some(k),
                t,
                pass,
                v.num_terms(),
                1,
                if pass { None } else { Some(format!("value = {v}")) },
            )
        })
        .collect()
}

fn xi_targets(lie: LieType) -> Vec<XiTarget> {
    let n = lie.rank as i64;
    match lie.family {
        Family::C => (1..=n)
            .map(XiTarget::Unbarred)
            .chain((1..=n).map(XiTarget::Barred))
            .collect(),
        Family::B => (1..=n)
            .map(XiTarget::Unbarred)
            .chain(std::iter::once(XiTarget::Zero))
            .chain((1..=n).map(XiTarget::Barred))
            .collect(),
        Family::D => (1..=n)
            .map(XiTarget::Unbarred)
            .chain((1..=n).map(XiTarget::Barred))
            .collect(),
        Family::A => Vec::new(),
    }
}

/// Closed segment sums against matrix-extracted coefficients, plus the
/// recursion identities, for every valid source, block count and target.
pub fn suite_xi(lie: LieType) -> Vec<Check> {
    let n = lie.rank as i64;
    let pmax = if lie.family == Family::D { n - 1 } else { n };
    let mut out = Vec::new();
    for i in 1..=n {
        for p in 1..=pmax {
            for target in xi_targets(lie) {
                let t = Timer::start();
                let oracle = oracle_xi(lie, i, p, target).expect("oracle");
                let closed = closed_xi(lie, i, p, target).expect("closed");
                out.push(eq_check(
                    format!("xi/i={i}/p={p}/{target:?}"),
                    lie,
                    None,
                    t,
                    &oracle,
                    &closed,
                ));
            }
        }
    }
    out.extend(suite_xi_recursions(lie));
    out
}

fn cvar(node: i64, time: i64) -> RationalFunction {
    if node <= 0 {
        RationalFunction::one()
    } else {
        RationalFunction::var(crate::laurent::Var::c(node as u32, time as i32))
    }
}

/// The recursion identities relating `p` to `p - 1`, all sides evaluated
/// through the matrix oracle.
pub fn suite_xi_recursions(lie: LieType) -> Vec<Check> {
    let n = lie.rank as i64;
    let pmax = if lie.family == Family::D { n - 1 } else { n };
    let xi = |i: i64, p: i64, t: XiTarget| oracle_xi(lie, i, p, t).expect("oracle");
    let mut out = Vec::new();
    for i in 1..=n {
        for p in 2..=pmax {
            // barred recursion (all types, with the type-specific exponent)
            for k in 1..=n {
                let t = Timer::start();
                let lhs = xi(i, p, XiTarget::Barred(k));
                let mut rhs = RationalFunction::zero();
                let top = match lie.family {
                    Family::B => cvar(k, p).pow(1 + i64::from(k == n)).unwrap(),
                    Family::D => {
                        let mut v = cvar(k, p);
                        if k == n - 1 {
                            v = v.mul(&cvar(n, p)).unwrap();
                        }
                        v
                    }
                    _ => cvar(k, p),
                };
                for j in i..=k {
                    let part = xi(i, p - 1, XiTarget::Barred(j))
                        .mul(&top)
                        .unwrap()
                        .div(&cvar(j - 1, p))
                        .unwrap();
                    rhs = rhs.add(&part).unwrap();
                }
                out.push(eq_check(
                    format!("xi-recur/bar/i={i}/p={p}/k={k}"),
                    lie,
                    None,
                    t,
                    &lhs,
                    &rhs,
                ));
            }
            // plain recursion away from the tail
            let plain_max = match lie.family {
                Family::D => n - 2,
                _ => n - 1,
            };
            for k in 1..=plain_max {
                let t = Timer::start();
                let lhs = xi(i, p, XiTarget::Unbarred(k));
                let rhs = xi(i, p - 1, XiTarget::Unbarred(k + 1))
                    .add(
                        &xi(i, p - 1, XiTarget::Unbarred(k))
                            .mul(&cvar(k - 1, p))
                            .unwrap()
                            .div(&cvar(k, p))
                            .unwrap(),
                    )
                    .unwrap();
                out.push(eq_check(
                    format!("xi-recur/plain/i={i}/p={p}/k={k}"),
                    lie,
                    None,
                    t,
                    &lhs,
                    &rhs,
                ));
            }
            // tail recursions
            match lie.family {
                Family::B => {
                    let t = Timer::start();
                    let lhs = xi(i, p, XiTarget::Zero);
                    let mut rhs = xi(i, p - 1, XiTarget::Zero);
                    for j in i..=n {
                        rhs = rhs
                            .add(
                                &xi(i, p - 1, XiTarget::Barred(j))
                                    .mul(&cvar(n, p))
                                    .unwrap()
                                    .div(&cvar(j - 1, p))
                                    .unwrap(),
                            )
                            .unwrap();
                    }
                    out.push(eq_check(format!("xi-recur/zero/i={i}/p={p}"), lie, None, t, &lhs, &rhs));
                    let t = Timer::start();
                    let lhs = xi(i, p, XiTarget::Unbarred(n));
                    let mut rhs = xi(i, p - 1, XiTarget::Unbarred(n))
                        .mul(&cvar(n - 1, p))
                        .unwrap()
                        .div(&cvar(n, p).pow(2).unwrap())
                        .unwrap();
                    rhs = rhs
                        .add(
                            &xi(i, p - 1, XiTarget::Zero)
                                .mul(&RationalFunction::from_i64(2))
                                .unwrap()
                                .div(&cvar(n, p))
                                .unwrap(),
                        )
                        .unwrap();
                    for j in i..=n {
                        rhs = rhs
                            .add(&xi(i, p - 1, XiTarget::Barred(j)).div(&cvar(j - 1, p)).unwrap())
                            .unwrap();
                    }
                    out.push(eq_check(format!("xi-recur/top/i={i}/p={p}"), lie, None, t, &lhs, &rhs));
                }
                Family::C => {
                    let t = Timer::start();
                    let lhs = xi(i, p, XiTarget::Unbarred(n));
                    let mut rhs = xi(i, p - 1, XiTarget::Unbarred(n))
                        .mul(&cvar(n - 1, p))
                        .unwrap()
                        .div(&cvar(n, p))
                        .unwrap();
                    for j in i..=n {
                        rhs = rhs
                            .add(&xi(i, p - 1, XiTarget::Barred(j)).div(&cvar(j - 1, p)).unwrap())
                            .unwrap();
                    }
                    out.push(eq_check(format!("xi-recur/top/i={i}/p={p}"), lie, None, t, &lhs, &rhs));
                }
                Family::D => {
                    let t = Timer::start();
                    let lhs = xi(i, p, XiTarget::Unbarred(n - 1));
                    let mut rhs = xi(i, p - 1, XiTarget::Unbarred(n - 1))
                        .mul(&cvar(n - 2, p))
                        .unwrap()
                        .div(&cvar(n - 1, p).mul(&cvar(n, p)).unwrap())
                        .unwrap();
                    rhs = rhs
                        .add(&xi(i, p - 1, XiTarget::Unbarred(n)).div(&cvar(n, p)).unwrap())
                        .unwrap();
                    for j in i..=n {
                        rhs = rhs
                            .add(&xi(i, p - 1, XiTarget::Barred(j)).div(&cvar(j - 1, p)).unwrap())
                            .unwrap();
                    }
                    out.push(eq_check(
                        format!("xi-recur/next-top/i={i}/p={p}"),
                        lie,
                        None,
                        t,
                        &lhs,
                        &rhs,
                    ));
                    let t = Timer::start();
                    let lhs = xi(i, p, XiTarget::Unbarred(n));
                    let mut rhs = xi(i, p - 1, XiTarget::Unbarred(n))
                        .mul(&cvar(n - 1, p))
                        .unwrap()
                        .div(&cvar(n, p))
                        .unwrap();
                    for j in i..=n - 1 {
                        rhs = rhs
                            .add(
                                &xi(i, p - 1, XiTarget::Barred(j))
                                    .mul(&cvar(n - 1, p))
                                    .unwrap()
                                    .div(&cvar(j - 1, p))
                                    .unwrap(),
                            )
                            .unwrap();
                    }
                    out.push(eq_check(format!("xi-recur/top/i={i}/p={p}"), lie, None, t, &lhs, &rhs));
                }
                Family::A => {}
            }
        }
    }
    out
}

/// Rectification suite for type C: exhaustive confluence, monomial
/// invariance, strict level increase, the two-set identity, and the
/// multiplicity identity against the oracle minor.
pub fn suite_rect(rank: usize) -> Vec<Check> {
    let lie = LieType::new(Family::C, rank).unwrap();
    let mut out = Vec::new();
    let n = rank;
    let all = all_columns(n, n);

    let t = Timer::start();
    let mut confluent = true;
    let mut m_invariant = true;
    let mut level_up = true;
    for v in &all {
        match rectify(v) {
            Ok(trace) => {
                if !is_kn_column(&trace.result) {
                    confluent = false;
                }
                if monomial_map_m0(&trace.result) != monomial_map_m0(v) {
                    m_invariant = false;
                }
                if !trace.levels.windows(2).all(|w| w[0] < w[1]) {
                    level_up = false;
                }
            }
            Err(_) => confluent = false,
        }
    }
    out.push(check(
        "rect/m-invariance-and-levels".into(),
        lie,
        None,
        t,
        confluent && m_invariant && level_up,
        all.len(),
        all.len(),
        None,
    ));

    // the two monomial sets coincide
    let t = Timer::start();
    let members: BTreeSet<MonomialElt> = all
        .iter()
        .filter(|v| is_kn_column(v))
        .map(monomial_map_m0)
        .collect();
    let extended: BTreeSet<MonomialElt> = all.iter().map(monomial_map_m0).collect();
    out.push(check(
        "rect/set-identity".into(),
        lie,
        None,
        t,
        members == extended,
        members.len(),
        extended.len(),
        None,
    ));

    // multiplicity identity against the oracle spin minor
    if rank <= 3 {
        let t = Timer::start();
        let fact = Factorization::standard(lie);
        let oracle = oracle_minor_side(lie, n, MinorSide::Right, &fact).expect("oracle");
        let mono = monomial_form_minor(lie, n, MinorSide::Right).expect("multiplicity sum");
        out.push(eq_check("rect/multiplicity-sum".into(), lie, Some(n), t, &oracle, &mono));
    }
    out
}

/// The printed example tables: the sixteen triangles of rank 4 type B with
/// labels and both monomial families, the rank-5 type D table, and the
/// rank-10 rectification trace.
pub fn suite_spin_examples() -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(b4_table());
    out.extend(d5_table());
    out.push(rect10_example());
    out
}

fn parse_mono(s: &str) -> MonomialElt {
    let f = crate::laurent::parse(s).expect("monomial literal");
    let poly = f.as_poly().expect("monomial literal").clone();
    let (exps, coeff) = poly.terms().iter().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    assert!(coeff == num::BigRational::from_integer(1.into()));
    MonomialElt::from_exps(
        &exps
            .iter()
            .map(|(v, k)| ((v.time, v.node as usize), *k))
            .collect::<Vec<_>>(),
    )
}

fn printed_b4_labels() -> Vec<Vec<i64>> {
    vec![
        vec![2, 3, 4, 5],
        vec![2, 3, 4, 4],
        vec![2, 3, 3, 4],
        vec![2, 2, 3, 4],
        vec![1, 2, 3, 4],
        vec![1, 2, 3, 3],
        vec![2, 2, 3, 3],
        vec![2, 3, 3, 3],
        vec![2, 2, 2, 3],
        vec![1, 2, 2, 3],
        vec![1, 1, 2, 3],
        vec![2, 2, 2, 2],
        vec![1, 2, 2, 2],
        vec![1, 1, 2, 2],
        vec![1, 1, 1, 2],
        vec![1, 1, 1, 1],
    ]
}

fn b4_table() -> Vec<Check> {
    let lie = LieType::new(Family::B, 4).unwrap();
    let t = Timer::start();
    let labels = printed_b4_labels();
    let printed_entries: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1], vec![2, 1], vec![3, 2, 1], vec![4, 3, 2, 1]],
        vec![vec![1], vec![2, 1], vec![3, 2, 1], vec![5, 3, 2, 1]],
        vec![vec![1], vec![2, 1], vec![4, 2, 1], vec![5, 3, 2, 1]],
        vec![vec![1], vec![3, 1], vec![4, 2, 1], vec![5, 3, 2, 1]],
        vec![vec![2], vec![3, 1], vec![4, 2, 1], vec![5, 3, 2, 1]],
        vec![vec![2], vec![3, 1], vec![4, 2, 1], vec![5, 4, 2, 1]],
        vec![vec![1], vec![3, 1], vec![4, 2, 1], vec![5, 4, 2, 1]],
        vec![vec![1], vec![2, 1], vec![4, 2, 1], vec![5, 4, 2, 1]],
        vec![vec![1], vec![3, 1], vec![4, 3, 1], vec![5, 4, 2, 1]],
        vec![vec![2], vec![3, 1], vec![4, 3, 1], vec![5, 4, 2, 1]],
        vec![vec![2], vec![3, 2], vec![4, 3, 1], vec![5, 4, 2, 1]],
        vec![vec![1], vec![3, 1], vec![4, 3, 1], vec![5, 4, 3, 1]],
        vec![vec![2], vec![3, 1], vec![4, 3, 1], vec![5, 4, 3, 1]],
        vec![vec![2], vec![3, 2], vec![4, 3, 1], vec![5, 4, 3, 1]],
        vec![vec![2], vec![3, 2], vec![4, 3, 2], vec![5, 4, 3, 1]],
        vec![vec![2], vec![3, 2], vec![4, 3, 2], vec![5, 4, 3, 2]],
    ];
    let printed_m = [
        "1/c[4,5]",
        "c[4,4]/c[3,4]",
        "c[3,3]/c[2,3]/c[4,4]",
        "c[2,2]/c[1,2]/c[4,4]",
        "c[1,1]/c[4,4]",
        "c[1,1]*c[4,3]/c[3,3]",
        "c[2,2]*c[4,3]/c[1,2]/c[3,3]",
        "c[4,3]/c[2,3]",
        "c[3,2]/c[1,2]/c[4,3]",
        "c[1,1]*c[3,2]/c[2,2]/c[4,3]",
        "c[2,1]/c[4,3]",
        "c[4,2]/c[1,2]",
        "c[1,1]*c[4,2]/c[2,2]",
        "c[2,1]*c[4,2]/c[3,2]",
        "c[3,1]/c[4,2]",
        "c[4,1]",
    ];
    let printed_mbar = [
        "c[4,0]",
        "c[3,1]/c[4,1]",
        "c[2,2]*c[4,1]/c[3,2]",
        "c[1,3]*c[4,1]/c[2,3]",
        "c[4,1]/c[1,4]",
        "c[3,2]/c[1,4]/c[4,2]",
        "c[1,3]*c[3,2]/c[2,3]/c[4,2]",
        "c[2,2]/c[4,2]",
        "c[1,3]*c[4,2]/c[3,3]",
        "c[2,3]*c[4,2]/c[1,4]/c[3,3]",
        "c[4,2]/c[2,4]",
        "c[1,3]/c[4,3]",
        "c[2,3]/c[1,4]/c[4,3]",
        "c[3,3]/c[2,4]/c[4,3]",
        "c[4,3]/c[3,4]",
        "1/c[4,4]",
    ];
    let mut pass = Triangle::all(lie).len() == 16;
    for (idx, label) in labels.iter().enumerate() {
        let tri = Triangle::from_label(lie, label.clone()).expect("printed label");
        if tri.entries() != printed_entries[idx] {
            pass = false;
        }
        if triangle_monomial(&tri) != parse_mono(printed_m[idx]) {
            pass = false;
        }
        if triangle_monomial_bar(&tri) != parse_mono(printed_mbar[idx]) {
            pass = false;
        }
    }
    // the sum of all barred monomials except the first is the spin minor
    let fact = Factorization::standard(lie);
    let oracle = oracle_minor_side(lie, 4, MinorSide::Right, &fact).expect("oracle");
    let closed = closed_form_minor(lie, 4, MinorSide::Right).expect("closed");
    pass = pass && oracle == closed;
    vec![check(
        "spin-example/b4-table".into(),
        lie,
        Some(4),
        t,
        pass,
        16,
        16,
        None,
    )]
}

fn d5_table() -> Vec<Check> {
    let lie = LieType::new(Family::D, 5).unwrap();
    let t = Timer::start();
    let labels = printed_b4_labels(); // the same sixteen labels
    let printed_m = [
        "1/c[5,5]",
        "c[5,4]/c[3,4]",
        "c[3,3]/c[2,3]/c[4,4]",
        "c[2,2]/c[1,2]/c[4,4]",
        "c[1,1]/c[4,4]",
        "c[1,1]*c[4,3]/c[3,3]",
        "c[2,2]*c[4,3]/c[1,2]/c[3,3]",
        "c[4,3]/c[2,3]",
        "c[3,2]/c[1,2]/c[5,3]",
        "c[1,1]*c[3,2]/c[2,2]/c[5,3]",
        "c[2,1]/c[5,3]",
        "c[5,2]/c[1,2]",
        "c[1,1]*c[5,2]/c[2,2]",
        "c[2,1]*c[5,2]/c[3,2]",
        "c[3,1]/c[4,2]",
        "c[4,1]",
    ];
    let printed_mbar = [
        "c[5,0]",
        "c[3,1]/c[5,1]",
        "c[2,2]*c[4,1]/c[3,2]",
        "c[1,3]*c[4,1]/c[2,3]",
        "c[4,1]/c[1,4]",
        "c[3,2]/c[1,4]/c[4,2]",
        "c[1,3]*c[3,2]/c[2,3]/c[4,2]",
        "c[2,2]/c[4,2]",
        "c[1,3]*c[5,2]/c[3,3]",
        "c[2,3]*c[5,2]/c[1,4]/c[3,3]",
        "c[5,2]/c[2,4]",
        "c[1,3]/c[5,3]",
        "c[2,3]/c[1,4]/c[5,3]",
        "c[3,3]/c[2,4]/c[5,3]",
        "c[4,3]/c[3,4]",
        "1/c[4,4]",
    ];
    let mut pass = Triangle::all(lie).len() == 16;
    for (idx, label) in labels.iter().enumerate() {
        let tri = Triangle::from_label(lie, label.clone()).expect("printed label");
        if triangle_monomial(&tri) != parse_mono(printed_m[idx]) {
            pass = false;
        }
        if triangle_monomial_bar(&tri) != parse_mono(printed_mbar[idx]) {
            pass = false;
        }
    }
    // the printed fifteen-term sum is the spin minor at the last node
    let fact = Factorization::standard(lie);
    let oracle = oracle_minor_side(lie, 5, MinorSide::Right, &fact).expect("oracle");
    let closed = closed_form_minor(lie, 5, MinorSide::Right).expect("closed");
    pass = pass && oracle == closed && closed.num_terms() == 15;
    vec![check("spin-example/d5-table".into(), lie, Some(5), t, pass, 16, 16, None)]
}

fn rect10_example() -> Check {
    let lie = LieType::new(Family::C, 10).unwrap();
    let t = Timer::start();
    let v = ColumnTableau::from_letters(10, &[1, 2, 3, 5, 6, -6, -5, -3, -2, -1]).unwrap();
    let trace = rectify(&v).expect("rectification");
    let pass = trace.result.letters() == vec![4, 7, 8, 9, 10, -10, -9, -8, -7, -4]
        && trace.steps == vec![1, 5, 5, 7];
    check("spin-example/rect-n10".into(), lie, None, t, pass, trace.steps.len(), 4, None)
}

/// Crystal isomorphisms of the triangle realizations: the spin bijection and
/// the monomial bijection, weights and operators included.
pub fn suite_triangles(lie: LieType) -> Vec<Check> {
    let n = lie.rank;
    let t = Timer::start();
    let all = Triangle::all(lie);
    let expected = match lie.family {
        Family::B => 1usize << n,
        Family::D => 1usize << (n - 1),
        _ => return vec![],
    };
    let mut pass = all.len() == expected;

    // spin bijection commuting with the operators
    let images: BTreeSet<Vec<bool>> = all.iter().map(spin_vector_of_label).collect();
    pass = pass && images.len() == all.len();
    for tri in &all {
        let eps = spin_vector_of_label(tri);
        for i in 1..=n {
            let lhs = tri.f(i).map(|x| spin_vector_of_label(&x));
            let rhs = spin_f(lie, &eps, i);
            if lhs != rhs {
                pass = false;
            }
        }
    }

    // monomial bijection with weights and operators
    let seed = match lie.family {
        Family::B => MonomialElt::gen(1, n),
        Family::D => {
            if n % 2 == 0 {
                MonomialElt::gen(1, n)
            } else {
                MonomialElt::gen(1, n - 1)
            }
        }
        _ => unreachable!(),
    };
    let sign = Sign::reverse(n);
    let comp = generate_component(lie, &sign, &seed, DEFAULT_CAP, false).expect("component");
    let image: BTreeSet<MonomialElt> = all.iter().map(triangle_monomial).collect();
    pass = pass && comp.len() == all.len() && image == comp.nodes.iter().cloned().collect();
    for tri in &all {
        let m = triangle_monomial(tri);
        if tri.weight() != m.weight(n) {
            pass = false;
        }
        for i in 1..=n {
            if tri.f(i).map(|x| triangle_monomial(&x))
                != kashiwara(lie, &sign, &m, i, KashiwaraDir::F)
            {
                pass = false;
            }
            if tri.e(i).map(|x| triangle_monomial(&x))
                != kashiwara(lie, &sign, &m, i, KashiwaraDir::E)
            {
                pass = false;
            }
        }
    }
    vec![check("triangles/iso".into(), lie, None, t, pass, all.len(), expected, None)]
}

fn spin_f(lie: LieType, eps: &[bool], i: usize) -> Option<Vec<bool>> {
    let n = lie.rank;
    let mut cur = eps.to_vec();
    match lie.family {
        Family::B => {
            if i < n {
                if cur[i - 1] && !cur[i] {
                    cur[i - 1] = false;
                    cur[i] = true;
                    Some(cur)
                } else {
                    None
                }
            } else if cur[n - 1] {
                cur[n - 1] = false;
                Some(cur)
            } else {
                None
            }
        }
        Family::D => {
            if i < n {
                if cur[i - 1] && !cur[i] {
                    cur[i - 1] = false;
                    cur[i] = true;
                    Some(cur)
                } else {
                    None
                }
            } else if cur[n - 2] && cur[n - 1] {
                cur[n - 2] = false;
                cur[n - 1] = false;
                Some(cur)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// The spin-word oracle: `E(delta)` raises the lowest vector of the plus
/// spin representation to `s_n(highest)` exactly for the non-lowest
/// triangles.
pub fn suite_word_e(lie: LieType) -> Vec<Check> {
    let n = lie.rank;
    let t = Timer::start();
    let mut lo = vec![false; n];
    if lie.family == Family::D && n % 2 == 1 {
        lo[n - 1] = true;
    }
    let mut target = vec![true; n];
    target[n - 1] = false;
    if lie.family == Family::D {
        target[n - 2] = false;
    }
    let lowest = Triangle::lowest(lie);
    let mut pass = true;
    for tri in Triangle::all(lie) {
        let word = word_e(&tri);
        let img = crate::tableaux::apply_e_word(lie, &word, &lo);
        if tri == lowest {
            if img.as_deref() == Some(target.as_slice()) {
                pass = false;
            }
        } else if img.as_deref() != Some(target.as_slice()) {
            pass = false;
        }
    }
    vec![check("word-e/oracle".into(), lie, None, t, pass, 1 << (n - 1), 1, None)]
}

/// Duality of the monomial crystal: the bar involution swaps the structure
/// functions and the operators on random monomials, and maps spin components
/// onto their opposite-extreme duals.
pub fn suite_duality(lie: LieType, seed: u64) -> Vec<Check> {
    let n = lie.rank;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = Sign::forward(n);
    let tp = p.transpose();
    let t = Timer::start();
    let mut pass = true;
    for _ in 0..500 {
        let mut exps = Vec::new();
        for _ in 0..rng.gen_range(1..5) {
            exps.push((
                (rng.gen_range(-2i32..4), rng.gen_range(1..=n)),
                rng.gen_range(-3i64..4),
            ));
        }
        let m = MonomialElt::from_exps(&exps);
        let a = rng.gen_range(-3i32..5);
        let bar = bar_dual(&m, a);
        for i in 1..=n {
            if bar.phi(i) != m.eps(i) || bar.eps(i) != m.phi(i) {
                pass = false;
            }
            let f = kashiwara(lie, &p, &m, i, KashiwaraDir::F);
            if f.map(|x| bar_dual(&x, a)) != kashiwara(lie, &tp, &bar, i, KashiwaraDir::E) {
                pass = false;
            }
            let e = kashiwara(lie, &p, &m, i, KashiwaraDir::E);
            if e.map(|x| bar_dual(&x, a)) != kashiwara(lie, &tp, &bar, i, KashiwaraDir::F) {
                pass = false;
            }
        }
    }
    let mut out = vec![check("duality/bar-random".into(), lie, None, t, pass, 500, 500, None)];
    if lie.family == Family::B {
        let t = Timer::start();
        let g = generate_component(lie, &Sign::reverse(n), &MonomialElt::gen(1, n), DEFAULT_CAP, false)
            .expect("component");
        let mapped: BTreeSet<MonomialElt> =
            g.nodes.iter().map(|m| bar_dual(m, n as i32 + 1)).collect();
        let g2 = generate_component(lie, &Sign::forward(n), &MonomialElt::gen(0, n), DEFAULT_CAP, false)
            .expect("component");
        let same = mapped == g2.nodes.iter().cloned().collect::<BTreeSet<_>>();
        let swap = bar_dual(g.highest()[0], n as i32 + 1) == *g2.lowest()[0]
            && bar_dual(g.lowest()[0], n as i32 + 1) == *g2.highest()[0];
        out.push(check(
            "duality/spin-component-swap".into(),
            lie,
            None,
            t,
            same && swap,
            g.len(),
            g2.len(),
            None,
        ));
    }
    out
}

/// Symbolic decoration law and covariances for the type.
pub fn suite_decoration(lie: LieType) -> Vec<Check> {
    let mut out = Vec::new();
    for i in 1..=lie.rank {
        let t = Timer::start();
        let ok = crate::geom::verify_decoration_law(lie, i).expect("symbolic check");
        out.push(check(format!("decoration/law/i={i}"), lie, Some(i), t, ok, 1, 1, None));
    }
    // covariances
    let point = crate::geom::GeomPoint::symbolic(lie);
    let c = RationalFunction::var(crate::laurent::Var::t(lie.rank as u32 + 1));
    let cartan = lie.cartan();
    for i in 1..=lie.rank {
        let t = Timer::start();
        let moved = crate::geom::geom_e(&point, i, &c).expect("action");
        let mut ok = true;
        for j in 1..=lie.rank {
            let (e0, g0) = crate::geom::geom_eps_gamma(&point, j).expect("eps/gamma");
            let (e1, g1) = crate::geom::geom_eps_gamma(&moved, j).expect("eps/gamma");
            let expect = g0.mul(&c.pow(cartan[i - 1][j - 1]).unwrap()).unwrap();
            if g1 != expect {
                ok = false;
            }
            if j == i && e1 != e0.div(&c).unwrap() {
                ok = false;
            }
            if j != i
                && cartan[i - 1][j - 1] == 0
                && cartan[j - 1][i - 1] == 0
                && e1 != e0
            {
                ok = false;
            }
        }
        out.push(check(format!("decoration/covariance/i={i}"), lie, Some(i), t, ok, 1, 1, None));
    }
    out
}

/// Verma relations at seeded positive rational points for every adjacent
/// pair (and one distant pair when present).
pub fn suite_verma(lie: LieType, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cartan = lie.cartan();
    let mut out = Vec::new();
    for i in 1..=lie.rank {
        for j in (i + 1)..=lie.rank {
            let t = Timer::start();
            let rep = crate::geom::verify_verma(lie, i, j, 20, &mut rng).expect("verma");
            use num::Zero;
            let pass = rep.exact && rep.max_deviation.is_zero();
            let detail = if pass {
                None
            } else {
                Some(format!("max deviation {}", rep.max_deviation))
            };
            out.push(check(
                format!("verma/i={i}/j={j}/pattern=({},{})", cartan[i - 1][j - 1], cartan[j - 1][i - 1]),
                lie,
                None,
                t,
                pass,
                rep.points,
                rep.points,
                detail,
            ));
        }
    }
    out
}

/// Tropicalization agreement and the normality of the nonnegativity set.
pub fn suite_trop(lie: LieType, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ud = crate::geom::ud_crystal(lie).expect("ud data");
    let mut out = Vec::new();

    // degree-convention coordinate maps against the one-variable oracle
    let t = Timer::start();
    let mut ok = true;
    for _ in 0..50 {
        let mut x = BTreeMap::new();
        for v in ud.vars.iter().chain(std::iter::once(&ud.param)) {
            x.insert(*v, rng.gen_range(-5i64..6));
        }
        for i in 1..=lie.rank {
            let vals = ud.action_deg_at(i, &x);
            for (j, v) in vals.iter().enumerate() {
                if crate::trop::v_oracle(ud.rational_coord(i, j), &x).unwrap() != *v {
                    ok = false;
                }
            }
        }
    }
    out.push(check("trop/v-agreement".into(), lie, None, t, ok, 50, 50, None));

    // epsilon agreement through the same oracle
    let t = Timer::start();
    let mut ok = true;
    let point = crate::geom::GeomPoint::symbolic(lie);
    for i in 1..=lie.rank {
        let (eps, _) = crate::geom::geom_eps_gamma(&point, i).expect("eps");
        let te = crate::trop::tropicalize(&eps).expect("positive");
        for _ in 0..30 {
            let mut x = BTreeMap::new();
            for v in &ud.vars {
                x.insert(*v, rng.gen_range(-5i64..6));
            }
            if te.eval(&x) != crate::trop::v_oracle(&eps, &x).unwrap() {
                ok = false;
            }
        }
    }
    out.push(check("trop/eps-agreement".into(), lie, None, t, ok, 30, 30, None));

    // zero parameter acts trivially
    let t = Timer::start();
    let mut ok = true;
    for _ in 0..30 {
        let mut x = BTreeMap::new();
        for v in &ud.vars {
            x.insert(*v, rng.gen_range(-6i64..7));
        }
        for i in 1..=lie.rank {
            if ud.act(i, 0, &x) != x {
                ok = false;
            }
        }
    }
    out.push(check("trop/unit-action".into(), lie, None, t, ok, 30, 30, None));

    // normality of the nonnegativity set under the lattice action, sampled
    // by membership-checked walks from the origin (which always lies in the
    // set: every valuation form vanishes there)
    let t = Timer::start();
    let mut ok = true;
    let dominant = lie.dominant_torus_vector();
    let mut members: BTreeSet<BTreeMap<crate::laurent::Var, i64>> = BTreeSet::new();
    let mut rounds = 0;
    while members.len() < 30 && rounds < 500 {
        rounds += 1;
        // base point: zero cell coordinates with a dominant torus part, so
        // every valuation form of the decoration is nonnegative there
        let scale = rng.gen_range(1i64..10);
        let mut x: BTreeMap<crate::laurent::Var, i64> = BTreeMap::new();
        for v in &ud.vars {
            let value = if v.kind == crate::laurent::VarKind::T {
                scale * dominant[v.node as usize - 1]
            } else {
                0
            };
            x.insert(*v, value);
        }
        debug_assert!(ud.contains(&x));
        members.insert(x.clone());
        for _ in 0..12 {
            let i = rng.gen_range(1..=lie.rank);
            let k = rng.gen_range(-2i64..4);
            let y = ud.act(i, k, &x);
            if ud.contains(&y) {
                members.insert(y.clone());
                x = y;
            }
        }
    }
    for x in &members {
        for i in 1..=lie.rank {
            let eps = ud.eps_at(i, x);
            let reach = (0..=40).take_while(|k| ud.contains(&ud.act(i, *k, x))).last();
            if reach != Some(eps) {
                ok = false;
            }
        }
    }
    out.push(check(
        "trop/normality".into(),
        lie,
        None,
        t,
        ok && members.len() >= 12,
        members.len(),
        30,
        None,
    ));
    out
}

/// The monomial realizations of the vector crystal match the tabulated
/// element lists, and the column crystals match the generated components.
pub fn suite_mono(lie: LieType) -> Vec<Check> {
    let n = lie.rank;
    let mut out = Vec::new();
    let t = Timer::start();
    let sign = Sign::forward(n);
    let seed = MonomialElt::gen(1, 1);
    let comp = generate_component(lie, &sign, &seed, DEFAULT_CAP, false).expect("component");
    let expected_len = match lie.family {
        Family::A => n + 1,
        Family::B => 2 * n + 1,
        Family::C | Family::D => 2 * n,
    };
    let mut pass = comp.len() == expected_len;
    let listed = listed_vector_monomials(lie, 1);
    pass = pass && listed.iter().all(|m| comp.contains(m)) && listed.len() == expected_len;
    out.push(check(
        "mono/vector-list".into(),
        lie,
        None,
        t,
        pass,
        comp.len(),
        expected_len,
        None,
    ));
    if lie.family == Family::C {
        for k in 1..=n {
            let t = Timer::start();
            let pass = column_crystal(lie, k).is_ok();
            out.push(check(format!("mono/column-component/k={k}"), lie, Some(k), t, pass, 0, 0, None));
        }
    }
    out
}

/// The tabulated monomial lists for the vector crystal `B(c[1,k])`.
pub fn listed_vector_monomials(lie: LieType, k: i32) -> Vec<MonomialElt> {
    let n = lie.rank;
    let e = |items: &[((i32, usize), i64)]| MonomialElt::from_exps(items);
    let mut out = Vec::new();
    match lie.family {
        Family::A => {
            out.push(MonomialElt::gen(k, 1));
            for j in 2..=n {
                out.push(e(&[((k, j), 1), ((k + 1, j - 1), -1)]));
            }
            out.push(e(&[((k + 1, n), -1)]));
        }
        Family::C => {
            for j in 1..=n {
                let mut items = vec![((k, j), 1i64)];
                if j >= 2 {
                    items.push(((k + 1, j - 1), -1));
                }
                out.push(e(&items));
            }
            for j in (1..=n).rev() {
                let tm = k + (n - j) as i32 + 1;
                let mut items = vec![((tm, j), -1i64)];
                if j >= 2 {
                    items.push(((tm, j - 1), 1));
                }
                out.push(e(&items));
            }
        }
        Family::B => {
            for j in 1..n {
                let mut items = vec![((k, j), 1i64)];
                if j >= 2 {
                    items.push(((k + 1, j - 1), -1));
                }
                out.push(e(&items));
            }
            out.push(e(&[((k, n), 2), ((k + 1, n - 1), -1)]));
            out.push(e(&[((k, n), 1), ((k + 1, n), -1)]));
            out.push(e(&[((k + 1, n - 1), 1), ((k + 1, n), -2)]));
            for j in (1..n).rev() {
                let tm = k + (n - j) as i32 + 1;
                let mut items = vec![((tm, j), -1i64)];
                if j >= 2 {
                    items.push(((tm, j - 1), 1));
                }
                out.push(e(&items));
            }
        }
        Family::D => {
            for j in 1..=n - 2 {
                let mut items = vec![((k, j), 1i64)];
                if j >= 2 {
                    items.push(((k + 1, j - 1), -1));
                }
                out.push(e(&items));
            }
            out.push(e(&[((k, n - 1), 1), ((k, n), 1), ((k + 1, n - 2), -1)]));
            out.push(e(&[((k, n), 1), ((k + 1, n - 1), -1)]));
            out.push(e(&[((k, n - 1), 1), ((k + 1, n), -1)]));
            out.push(e(&[((k + 1, n - 2), 1), ((k + 1, n - 1), -1), ((k + 1, n), -1)]));
            for j in (1..=n - 2).rev() {
                let tm = k + (n - j) as i32;
                let mut items = vec![((tm, j), -1i64)];
                if j >= 2 {
                    items.push(((tm, j - 1), 1));
                }
                out.push(e(&items));
            }
        }
    }
    out
}

/// Named suite dispatch used by the command line. `None` signals an unknown
/// suite or an unsupported type/suite combination.
pub fn run_suite(name: &str, lie: Option<LieType>, seed: u64) -> Option<Vec<Check>> {
    if name == "spin-example" {
        return Some(suite_spin_examples());
    }
    let l = lie?;
    let checks = match name {
        "minors" => suite_minors(l),
        "del1" => suite_del1(l),
        "xi" if l.family != Family::A => suite_xi(l),
        "rect" if l.family == Family::C => suite_rect(l.rank),
        "triangles" if matches!(l.family, Family::B | Family::D) => {
            let mut v = suite_triangles(l);
            v.extend(suite_word_e(l));
            v
        }
        "duality" => suite_duality(l, seed),
        "decoration" => suite_decoration(l),
        "verma" => suite_verma(l, seed),
        "trop" => suite_trop(l, seed),
        "mono" => suite_mono(l),
        _ => return None,
    };
    Some(checks)
}
