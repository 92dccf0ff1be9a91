//! Ultra-discretization of the big-cell geometric crystal: piecewise-linear
//! weight, epsilon and decoration functions, the lattice action, and the
//! membership test for the decoration-nonnegativity set.
//!
//! The crystal data uses the valuation (min-plus) orientation, which is the
//! degree convention applied to the reciprocal structure functions; with it
//! the identity map stays the identity and the decoration cuts out a genuine
//! polyhedral region. The degree-convention coordinate maps are also kept so
//! they can be compared against the one-variable degree oracle.

use super::{geom_e, GeomError, GeomPoint};
use crate::laurent::{RationalFunction, Var};
use crate::minors::decoration_fb;
use crate::root_data::LieType;
use crate::trop::{min_plus, tropicalize, TropExpr};
use std::collections::BTreeMap;

/// Tropicalized structure data of the big-cell geometric crystal.
#[derive(Clone, Debug)]
pub struct UdCrystal {
    pub lie: LieType,
    /// the parameter variable of the lattice action
    pub param: Var,
    /// ambient variables: torus then cell coordinates
    pub vars: Vec<Var>,
    pub wt: Vec<TropExpr>,
    pub eps: Vec<TropExpr>,
    pub f_tilde: TropExpr,
    /// min-plus coordinate maps of the action, per node
    action_val: Vec<Vec<TropExpr>>,
    /// degree-convention coordinate maps, per node
    action_deg: Vec<Vec<TropExpr>>,
    /// the rational coordinate maps they came from
    rational_coords: Vec<Vec<RationalFunction>>,
}

/// Build the tropical crystal data for the type.
pub fn ud_crystal(lie: LieType) -> Result<UdCrystal, GeomError> {
    let point = GeomPoint::symbolic(lie);
    let param = Var::t(lie.rank as u32 + 1);
    let c = RationalFunction::var(param);
    let mut vars: Vec<Var> = (1..=lie.rank).map(|j| Var::t(j as u32)).collect();
    vars.extend(crate::rep::standard_vars(lie));
    let mut wt = Vec::new();
    let mut eps = Vec::new();
    let mut action_val = Vec::new();
    let mut action_deg = Vec::new();
    let mut rational_coords = Vec::new();
    for i in 1..=lie.rank {
        let (e, g) = super::geom_eps_gamma(&point, i)?;
        wt.push(min_plus(&g)?);
        eps.push(min_plus(&e)?);
        let moved = geom_e(&point, i, &c)?;
        let mut row_val = Vec::new();
        let mut row_deg = Vec::new();
        for cj in &moved.coords {
            row_val.push(min_plus(cj)?);
            row_deg.push(tropicalize(cj)?);
        }
        action_val.push(row_val);
        action_deg.push(row_deg);
        rational_coords.push(moved.coords.clone());
    }
    let f = decoration_fb(lie).map_err(|e| match e {
        crate::minors::MinorError::Arithmetic(a) => GeomError::Arithmetic(a),
        _ => GeomError::Pole,
    })?;
    let f_tilde = min_plus(&f)?;
    Ok(UdCrystal { lie, param, vars, wt, eps, f_tilde, action_val, action_deg, rational_coords })
}

impl UdCrystal {
    /// Membership in the decoration-nonnegativity set.
    pub fn contains(&self, x: &BTreeMap<Var, i64>) -> bool {
        self.f_tilde.eval(x) >= 0
    }

    pub fn eps_at(&self, i: usize, x: &BTreeMap<Var, i64>) -> i64 {
        self.eps[i - 1].eval(x)
    }

    pub fn wt_at(&self, i: usize, x: &BTreeMap<Var, i64>) -> i64 {
        self.wt[i - 1].eval(x)
    }

    pub fn f_at(&self, x: &BTreeMap<Var, i64>) -> i64 {
        self.f_tilde.eval(x)
    }

    /// The lattice action `e_i^k` on a point: cell coordinates move by the
    /// min-plus coordinate maps, the torus part stays.
    pub fn act(&self, i: usize, k: i64, x: &BTreeMap<Var, i64>) -> BTreeMap<Var, i64> {
        let mut with_param = x.clone();
        with_param.insert(self.param, k);
        let coords = crate::rep::standard_vars(self.lie);
        let mut out = x.clone();
        for (v, expr) in coords.iter().zip(&self.action_val[i - 1]) {
            out.insert(*v, expr.eval(&with_param));
        }
        out
    }

    /// Degree-convention coordinate map values, for comparison against the
    /// one-variable degree oracle.
    pub fn action_deg_at(&self, i: usize, x: &BTreeMap<Var, i64>) -> Vec<i64> {
        self.action_deg[i - 1].iter().map(|e| e.eval(x)).collect()
    }

    /// The rational coordinate maps underlying the action.
    pub fn rational_coord(&self, i: usize, j: usize) -> &RationalFunction {
        &self.rational_coords[i - 1][j]
    }

    pub fn coord_count(&self) -> usize {
        self.rational_coords[0].len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Family;
    use crate::trop::v_oracle;
    use rand::{Rng, SeedableRng};

    fn lie(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    fn a1_point(xt: i64, x1: i64) -> BTreeMap<Var, i64> {
        BTreeMap::from([(Var::t(1), xt), (Var::c(1, 1), x1)])
    }

    #[test]
    fn a1_membership_region_is_a_cone() {
        let ud = ud_crystal(lie(Family::A, 1)).unwrap();
        for xt in -6..=6 {
            for x1 in -6..=6 {
                let inside = ud.contains(&a1_point(xt, x1));
                assert_eq!(inside, x1 >= 0 && x1 <= 2 * xt, "({xt},{x1})");
            }
        }
    }

    #[test]
    fn a1_normality() {
        let ud = ud_crystal(lie(Family::A, 1)).unwrap();
        for xt in 0..=5 {
            for x1 in 0..=(2 * xt) {
                let x = a1_point(xt, x1);
                assert!(ud.contains(&x));
                let eps = ud.eps_at(1, &x);
                let reach = (0..=20).take_while(|k| ud.contains(&ud.act(1, *k, &x))).last();
                assert_eq!(reach, Some(eps), "({xt},{x1})");
            }
        }
    }

    #[test]
    fn zero_parameter_acts_trivially() {
        for l in [lie(Family::A, 2), lie(Family::C, 2)] {
            let ud = ud_crystal(l).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
            for _ in 0..40 {
                let mut x = BTreeMap::new();
                for v in &ud.vars {
                    x.insert(*v, rng.gen_range(-6i64..7));
                }
                for i in 1..=l.rank {
                    let moved = ud.act(i, 0, &x);
                    assert_eq!(moved, x);
                }
            }
        }
    }

    #[test]
    fn degree_maps_agree_with_the_one_variable_oracle() {
        let l = lie(Family::A, 2);
        let ud = ud_crystal(l).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(57);
        for _ in 0..50 {
            let mut x = BTreeMap::new();
            for v in ud.vars.iter().chain(std::iter::once(&ud.param)) {
                x.insert(*v, rng.gen_range(-5i64..6));
            }
            for i in 1..=l.rank {
                let vals = ud.action_deg_at(i, &x);
                for (j, v) in vals.iter().enumerate() {
                    let oracle = v_oracle(ud.rational_coord(i, j), &x).unwrap();
                    assert_eq!(*v, oracle);
                }
            }
        }
    }

    #[test]
    fn a2_normality_on_sampled_points() {
        let l = lie(Family::A, 2);
        let ud = ud_crystal(l).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        let mut inside = 0;
        while inside < 40 {
            let mut x = BTreeMap::new();
            for v in &ud.vars {
                let hi = if v.kind == crate::laurent::VarKind::T { 8 } else { 6 };
                x.insert(*v, rng.gen_range(0i64..hi));
            }
            if !ud.contains(&x) {
                continue;
            }
            inside += 1;
            for i in 1..=l.rank {
                let eps = ud.eps_at(i, &x);
                let reach = (0..=30).take_while(|k| ud.contains(&ud.act(i, *k, &x))).last();
                assert_eq!(reach, Some(eps), "normality failed at {x:?} i={i}");
            }
        }
    }
}
