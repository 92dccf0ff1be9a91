//! The geometric crystal on the big cell in factorized coordinates: the
//! one-parameter actions, the structure functions, the Verma relations, the
//! decoration law, and the ultra-discretization.

mod ud;

pub use ud::{ud_crystal, UdCrystal};

use crate::laurent::{LaurentError, RationalFunction, Var};
use crate::root_data::LieType;
use num::rational::BigRational;
use num::{BigInt, Signed};
use rand::Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("arithmetic: {0}")]
    Arithmetic(#[from] LaurentError),
    #[error("pole at the evaluation point")]
    Pole,
}

/// A point of the big-cell geometric crystal in factorized coordinates:
/// torus part `t_1..t_n` and cell coordinates `c_1..c_N` along the fixed
/// longest word. Numeric points are constant rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeomPoint {
    pub lie: LieType,
    pub torus: Vec<RationalFunction>,
    pub coords: Vec<RationalFunction>,
}

impl GeomPoint {
    /// The fully symbolic point with coordinates `c[i,j]` and torus `t[j]`.
    pub fn symbolic(lie: LieType) -> Self {
        let torus = (1..=lie.rank)
            .map(|j| RationalFunction::var(Var::t(j as u32)))
            .collect();
        let coords = crate::rep::standard_vars(lie)
            .into_iter()
            .map(RationalFunction::var)
            .collect();
        GeomPoint { lie, torus, coords }
    }

    pub fn numeric(lie: LieType, torus: Vec<BigRational>, coords: Vec<BigRational>) -> Self {
        GeomPoint {
            lie,
            torus: torus.into_iter().map(RationalFunction::constant).collect(),
            coords: coords.into_iter().map(RationalFunction::constant).collect(),
        }
    }

    /// Substitution map sending the standard symbolic variables to this
    /// point's values.
    pub fn subst_map(&self) -> BTreeMap<Var, RationalFunction> {
        let mut map = BTreeMap::new();
        for (j, t) in self.torus.iter().enumerate() {
            map.insert(Var::t(j as u32 + 1), t.clone());
        }
        for (v, c) in crate::rep::standard_vars(self.lie).into_iter().zip(&self.coords) {
            map.insert(v, c.clone());
        }
        map
    }
}

/// Monomial prefix `P_m = (prod_{l < m} c_l^{a_{i_l, i}}) c_m` used by the
/// coordinate action and the structure functions.
fn prefix_products(lie: LieType, coords: &[RationalFunction], i: usize) -> Result<Vec<(usize, RationalFunction)>, GeomError> {
    let word = lie.longest_word();
    let cartan = lie.cartan();
    let mut running = RationalFunction::one();
    let mut out = Vec::new();
    for (m, &im) in word.iter().enumerate() {
        if im == i {
            out.push((m, running.mul(&coords[m])?));
        }
        running = running.mul(&coords[m].pow(cartan[im - 1][i - 1])?)?;
    }
    Ok(out)
}

/// The rational one-parameter action `e_i^c` in factorized coordinates.
pub fn geom_e(point: &GeomPoint, i: usize, c: &RationalFunction) -> Result<GeomPoint, GeomError> {
    let lie = point.lie;
    let word = lie.longest_word();
    let prefixes = prefix_products(lie, &point.coords, i)?;
    let mut coords = Vec::with_capacity(point.coords.len());
    for (j, cj) in point.coords.iter().enumerate() {
        if word[j] != i {
            coords.push(cj.clone());
            continue;
        }
        // numerator: sum over m < j of c*P_m plus sum over m >= j of P_m
        // denominator: sum over m <= j of c*P_m plus sum over m > j of P_m
        let mut num = RationalFunction::zero();
        let mut den = RationalFunction::zero();
        for (m, p) in &prefixes {
            let scaled = c.mul(p)?;
            if *m < j {
                num = num.add(&scaled)?;
            } else {
                num = num.add(p)?;
            }
            if *m <= j {
                den = den.add(&scaled)?;
            } else {
                den = den.add(p)?;
            }
        }
        if den.is_zero() {
            return Err(GeomError::Pole);
        }
        coords.push(cj.mul(&num)?.div(&den)?);
    }
    Ok(GeomPoint { lie, torus: point.torus.clone(), coords })
}

/// The structure functions `epsilon_i` and `gamma_i` of the geometric
/// crystal at the point.
pub fn geom_eps_gamma(
    point: &GeomPoint,
    i: usize,
) -> Result<(RationalFunction, RationalFunction), GeomError> {
    let lie = point.lie;
    let word = lie.longest_word();
    let cartan = lie.cartan();
    // epsilon_i = (sum_m 1 / (c_m * prod_{l > m} c_l^{a_{i_l, i}}))^{-1}
    let mut suffix = RationalFunction::one();
    let mut inv_sum = RationalFunction::zero();
    for (m, &im) in word.iter().enumerate().rev() {
        if im == i {
            let denom = point.coords[m].mul(&suffix)?;
            inv_sum = inv_sum.add(&denom.inv()?)?;
        }
        suffix = suffix.mul(&point.coords[m].pow(cartan[im - 1][i - 1])?)?;
    }
    let eps = inv_sum.inv()?;
    // gamma_i = alpha_i(t) / prod_l c_l^{a_{i_l, i}}
    let mut gamma = RationalFunction::one();
    for (j, t) in point.torus.iter().enumerate() {
        let e = cartan[j][i - 1];
        if e != 0 {
            gamma = gamma.mul(&t.pow(e)?)?;
        }
    }
    for (m, &im) in word.iter().enumerate() {
        gamma = gamma.div(&point.coords[m].pow(cartan[im - 1][i - 1])?)?;
    }
    Ok((eps, gamma))
}

/// `phi_i = epsilon_i * gamma_i`.
pub fn geom_phi(point: &GeomPoint, i: usize) -> Result<RationalFunction, GeomError> {
    let (eps, gamma) = geom_eps_gamma(point, i)?;
    Ok(eps.mul(&gamma)?)
}

/// Sampler for reproducible positive rational points: numerators and
/// denominators up to 50.
pub fn sample_positive(rng: &mut impl Rng) -> BigRational {
    let num = rng.gen_range(1..=50i64);
    let den = rng.gen_range(1..=50i64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Outcome of one Verma-relation pattern check.
#[derive(Clone, Debug)]
pub struct VermaReport {
    pub lie: LieType,
    pub i: usize,
    pub j: usize,
    pub pattern: (i64, i64),
    pub points: usize,
    pub exact: bool,
    /// largest absolute coordinate deviation over all sampled points; the
    /// arithmetic is exact, so anything other than zero is a failure
    pub max_deviation: BigRational,
}

/// Check the braid-like relation for the pair `(i, j)` at sampled positive
/// rational points; all arithmetic is exact, so `exact` records whether every
/// sampled identity held on the nose.
pub fn verify_verma(
    lie: LieType,
    i: usize,
    j: usize,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<VermaReport, GeomError> {
    let cartan = lie.cartan();
    let (aij, aji) = (cartan[i - 1][j - 1], cartan[j - 1][i - 1]);
    let n = lie.rank;
    let nvars = lie.longest_word().len();
    let mut exact = true;
    let mut max_deviation = BigRational::from_integer(0.into());
    for _ in 0..samples {
        let torus: Vec<BigRational> = (0..n).map(|_| sample_positive(rng)).collect();
        let coords: Vec<BigRational> = (0..nvars).map(|_| sample_positive(rng)).collect();
        let point = GeomPoint::numeric(lie, torus, coords);
        let c1 = RationalFunction::constant(sample_positive(rng));
        let c2 = RationalFunction::constant(sample_positive(rng));
        let lhs;
        let rhs;
        match (aij, aji) {
            (0, 0) => {
                lhs = geom_e(&geom_e(&point, j, &c2)?, i, &c1)?;
                rhs = geom_e(&geom_e(&point, i, &c1)?, j, &c2)?;
            }
            (-1, -1) => {
                let c12 = c1.mul(&c2)?;
                lhs = geom_e(
                    &geom_e(&geom_e(&point, i, &c2)?, j, &c12)?,
                    i,
                    &c1,
                )?;
                rhs = geom_e(
                    &geom_e(&geom_e(&point, j, &c1)?, i, &c12)?,
                    j,
                    &c2,
                )?;
            }
            (-2, -1) => {
                let c12 = c1.mul(&c2)?;
                let c112 = c1.mul(&c12)?;
                lhs = geom_e(
                    &geom_e(
                        &geom_e(&geom_e(&point, j, &c2)?, i, &c12)?,
                        j,
                        &c112,
                    )?,
                    i,
                    &c1,
                )?;
                rhs = geom_e(
                    &geom_e(
                        &geom_e(&geom_e(&point, i, &c1)?, j, &c112)?,
                        i,
                        &c12,
                    )?,
                    j,
                    &c2,
                )?;
            }
            (-1, -2) => {
                // same relation read with the roles of i and j exchanged
                return verify_verma(lie, j, i, samples, rng);
            }
            other => panic!("unsupported Cartan pattern {other:?}"),
        }
        if lhs != rhs {
            exact = false;
        }
        for (a, b) in lhs.coords.iter().zip(&rhs.coords) {
            let d = a.sub(b)?;
            let num = d.numerator().eval(&BTreeMap::new()).unwrap_or_else(|_| BigRational::from_integer(0.into()));
            let den = d.denominator().eval(&BTreeMap::new()).unwrap_or_else(|_| BigRational::from_integer(1.into()));
            let dev = (num / den).abs();
            if dev > max_deviation {
                max_deviation = dev;
            }
        }
    }
    Ok(VermaReport { lie, i, j, pattern: (aij, aji), points: samples, exact, max_deviation })
}

/// Symbolic check of the decoration law
/// `f(e_i^c x) = f(x) + (c-1) phi_i(x) + (c^{-1}-1) epsilon_i(x)` for one
/// node; the parameter is carried by the torus-style variable `t[rank+1]`.
pub fn verify_decoration_law(lie: LieType, i: usize) -> Result<bool, GeomError> {
    let f = crate::minors::decoration_fb(lie).map_err(|e| match e {
        crate::minors::MinorError::Arithmetic(a) => GeomError::Arithmetic(a),
        _ => GeomError::Pole,
    })?;
    let point = GeomPoint::symbolic(lie);
    let c = RationalFunction::var(Var::t(lie.rank as u32 + 1));
    let moved = geom_e(&point, i, &c)?;
    let lhs = f.subst(&moved.subst_map())?;
    let (eps, gamma) = geom_eps_gamma(&point, i)?;
    let phi = eps.mul(&gamma)?;
    let one = RationalFunction::one();
    let rhs = f
        .add(&c.sub(&one)?.mul(&phi)?)?
        .add(&c.inv()?.sub(&one)?.mul(&eps)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse;
    use crate::root_data::Family;
    use rand::SeedableRng;

    fn lie(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    #[test]
    fn a1_coordinate_action() {
        let l = lie(Family::A, 1);
        let point = GeomPoint::symbolic(l);
        let c = RationalFunction::var(Var::t(9));
        let moved = geom_e(&point, 1, &c).unwrap();
        // c'_1 = c_1 / c
        let expect = parse("c[1,1]/t[9]").unwrap();
        assert_eq!(moved.coords[0], expect);
    }

    #[test]
    fn a1_eps_gamma() {
        let l = lie(Family::A, 1);
        let point = GeomPoint::symbolic(l);
        let (eps, gamma) = geom_eps_gamma(&point, 1).unwrap();
        assert_eq!(eps, parse("c[1,1]").unwrap());
        assert_eq!(gamma, parse("t[1]^2/c[1,1]^2").unwrap());
    }

    #[test]
    fn unit_parameter_is_identity() {
        for l in [lie(Family::A, 2), lie(Family::B, 2), lie(Family::C, 3), lie(Family::D, 3)] {
            let point = GeomPoint::symbolic(l);
            for i in 1..=l.rank {
                let moved = geom_e(&point, i, &RationalFunction::one()).unwrap();
                assert_eq!(moved, point);
            }
        }
    }

    #[test]
    fn action_is_multiplicative_symbolically() {
        for l in [lie(Family::A, 2), lie(Family::C, 2), lie(Family::B, 2), lie(Family::D, 3)] {
            let point = GeomPoint::symbolic(l);
            let c1 = RationalFunction::var(Var::t(l.rank as u32 + 1));
            let c2 = RationalFunction::var(Var::t(l.rank as u32 + 2));
            for i in 1..=l.rank {
                let lhs = geom_e(&geom_e(&point, i, &c2).unwrap(), i, &c1).unwrap();
                let rhs = geom_e(&point, i, &c1.mul(&c2).unwrap()).unwrap();
                assert_eq!(lhs.coords, rhs.coords, "{l}, i={i}");
            }
        }
    }

    #[test]
    fn matrix_consistency_of_the_action() {
        // Theta(c') = x_i((c-1) phi_i / alpha_i(t)) Theta(c) x_i((1/c - 1) eps_i)
        use crate::rep::{one_param, theta_minus, OneParamKind, RepSpace, SpaceKind};
        let l = lie(Family::C, 2);
        let space = RepSpace::new(l, SpaceKind::Vector).unwrap();
        let point = GeomPoint::symbolic(l);
        let word = l.longest_word();
        let c = RationalFunction::var(Var::t(l.rank as u32 + 1));
        for i in 1..=l.rank {
            let moved = geom_e(&point, i, &c).unwrap();
            let lhs = theta_minus(space, &word, &moved.coords).unwrap();
            let (eps, gamma) = geom_eps_gamma(&point, i).unwrap();
            // strip the torus part of gamma: phi / alpha_i(t) stays rational
            // in the cell coordinates only
            let cartan = l.cartan();
            let mut alpha_t = RationalFunction::one();
            for (j, t) in point.torus.iter().enumerate() {
                let e = cartan[j][i - 1];
                if e != 0 {
                    alpha_t = alpha_t.mul(&t.pow(e).unwrap()).unwrap();
                }
            }
            let phi0 = eps.mul(&gamma).unwrap().div(&alpha_t).unwrap();
            let one = RationalFunction::one();
            let left_factor = one_param(
                space,
                OneParamKind::X,
                i,
                &c.sub(&one).unwrap().mul(&phi0).unwrap(),
            )
            .unwrap();
            let right_factor = one_param(
                space,
                OneParamKind::X,
                i,
                &c.inv().unwrap().sub(&one).unwrap().mul(&eps).unwrap(),
            )
            .unwrap();
            let mid = theta_minus(space, &word, &point.coords).unwrap();
            let rhs = left_factor.mul(&mid).unwrap().mul(&right_factor).unwrap();
            assert_eq!(lhs, rhs, "matrix consistency failed at i={i}");
        }
    }

    #[test]
    fn gamma_covariance() {
        // gamma_j(e_i^c x) = c^{a_ij} gamma_j(x), symbolically
        for l in [lie(Family::A, 2), lie(Family::C, 2), lie(Family::B, 2)] {
            let point = GeomPoint::symbolic(l);
            let c = RationalFunction::var(Var::t(l.rank as u32 + 1));
            let cartan = l.cartan();
            for i in 1..=l.rank {
                let moved = geom_e(&point, i, &c).unwrap();
                for j in 1..=l.rank {
                    let (_, g0) = geom_eps_gamma(&point, j).unwrap();
                    let (_, g1) = geom_eps_gamma(&moved, j).unwrap();
                    let expect = g0.mul(&c.pow(cartan[i - 1][j - 1]).unwrap()).unwrap();
                    assert_eq!(g1, expect, "{l} gamma_{j}(e_{i})");
                }
            }
        }
    }

    #[test]
    fn eps_covariance() {
        for l in [lie(Family::A, 2), lie(Family::C, 2)] {
            let point = GeomPoint::symbolic(l);
            let c = RationalFunction::var(Var::t(l.rank as u32 + 1));
            for i in 1..=l.rank {
                let moved = geom_e(&point, i, &c).unwrap();
                let (e0, _) = geom_eps_gamma(&point, i).unwrap();
                let (e1, _) = geom_eps_gamma(&moved, i).unwrap();
                assert_eq!(e1, e0.div(&c).unwrap(), "{l} eps_{i}");
            }
        }
        // distant pairs leave epsilon untouched
        let l = lie(Family::D, 4);
        let point = GeomPoint::symbolic(l);
        let c = RationalFunction::var(Var::t(5));
        for (i, j) in [(1usize, 3usize), (1, 4), (3, 4)] {
            let moved = geom_e(&point, j, &c).unwrap();
            let (e0, _) = geom_eps_gamma(&point, i).unwrap();
            let (e1, _) = geom_eps_gamma(&moved, i).unwrap();
            assert_eq!(e0, e1, "eps_{i}(e_{j}^c x) changed");
        }
    }

    #[test]
    fn verma_relations_at_sampled_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let cases = [
            (lie(Family::A, 2), 1usize, 2usize),
            (lie(Family::C, 2), 1, 2),
            (lie(Family::B, 2), 2, 1),
            (lie(Family::D, 4), 3, 4),
            (lie(Family::D, 4), 2, 3),
        ];
        for (l, i, j) in cases {
            let rep = verify_verma(l, i, j, 5, &mut rng).unwrap();
            assert!(rep.exact, "Verma relation failed for {l} ({i},{j})");
        }
    }

    #[test]
    fn decoration_law_a1_symbolic() {
        assert!(verify_decoration_law(lie(Family::A, 1), 1).unwrap());
    }

    #[test]
    fn decoration_law_a2_c2_symbolic() {
        for l in [lie(Family::A, 2), lie(Family::C, 2)] {
            for i in 1..=l.rank {
                assert!(verify_decoration_law(l, i).unwrap(), "decoration law {l} i={i}");
            }
        }
    }
}
