//! Curve classes, Chern numbers, localization, Weyl dimensions and the
//! Gromov-Witten certificate `c1(A) = 1 + dim Gamma_A(pt)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rat, Rational};
use crate::rootsys::{pair, Root, RootSystem, SimpleType, Weight};
use crate::schubert::curve_neighborhood_point;
use crate::weyl::ParabolicSubset;

/// A class in `H_2(G/P) = Z S^vee / Z S_P^vee`, one integer per node of `S - S_P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    pub coeffs: BTreeMap<usize, i64>,
}

impl CurveClass {
    /// The Schubert generator `A_alpha = [X_P(s_alpha)]`.
    pub fn generator(p: &ParabolicSubset, alpha: usize) -> Result<CurveClass> {
        p.system().check_node(alpha)?;
        if p.contains(alpha) {
            return Err(Error::NodeInParabolic(alpha));
        }
        let coeffs = p
            .complement()
            .into_iter()
            .map(|i| (i, i64::from(i == alpha)))
            .collect();
        Ok(CurveClass { coeffs })
    }
}

/// `[C_beta] = coroot(beta) + Z S_P^vee`.
pub fn curve_class(beta: &Root, p: &ParabolicSubset) -> Result<CurveClass> {
    let rs = p.system();
    let coroot = rs.coroot(beta)?;
    if !beta.is_positive() {
        return Err(Error::NotARoot(beta.coeffs.clone()));
    }
    if p.contains_root(beta) {
        return Err(Error::DegenerateClass(beta.coeffs.clone()));
    }
    let coeffs = p.complement().into_iter().map(|i| (i, coroot.coeffs[i])).collect();
    Ok(CurveClass { coeffs })
}

/// `sum of gamma over R+ - R_P+`, in root coordinates.
pub fn tangent_weight_sum(p: &ParabolicSubset) -> Vec<i64> {
    let rs = p.system();
    let mut sum = vec![0i64; rs.rank()];
    for gamma in rs.positive_roots().iter().filter(|g| !p.contains_root(g)) {
        for (s, c) in sum.iter_mut().zip(&gamma.coeffs) {
            *s += c;
        }
    }
    sum
}

/// `c1(T(G/P))` evaluated on a curve class.
pub fn chern_number(p: &ParabolicSubset, a: &CurveClass) -> Result<i64> {
    let rs = p.system();
    let sum = tangent_weight_sum(p);
    let mut c1 = 0;
    for (&i, &k) in &a.coeffs {
        rs.check_node(i)?;
        if p.contains(i) {
            return Err(Error::NodeInParabolic(i));
        }
        c1 += k * rs.pair_simple(&sum, i);
    }
    Ok(c1)
}

/// Localization identity `<eta, coroot beta> = integral of c1(L(eta)) over C_beta`,
/// the right side evaluated linearly on the curve class of `beta`.
pub fn bott_degree_check(eta: &Weight, beta: &Root, p: &ParabolicSubset) -> Result<bool> {
    let rs = p.system();
    if eta.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: eta.rank() });
    }
    if p.nodes().iter().any(|&i| !eta.coords[i].is_zero()) {
        return Err(Error::WeightNotInPicard);
    }
    let lhs = pair(eta, &rs.coroot(beta)?)?;
    let class = curve_class(beta, p)?;
    let rhs: Rational = class
        .coeffs
        .iter()
        .map(|(&i, &k)| &eta.coords[i] * rat(k))
        .fold(Rational::zero(), |a, b| a + b);
    Ok(lhs == rhs)
}

/// Weyl dimension formula for a dominant integral highest weight.
pub fn weyl_dim(rs: &RootSystem, eta: &Weight) -> Result<BigInt> {
    if eta.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: eta.rank() });
    }
    if !eta.is_integral() {
        return Err(Error::NonIntegral);
    }
    if !eta.is_dominant() {
        return Err(Error::NonDominant);
    }
    let rho = Weight::rho(rs.rank());
    let shifted = eta.add(&rho)?;
    let mut acc = Rational::one();
    for c in rs.positive_coroots() {
        acc *= pair(&shifted, c)? / pair(&rho, c)?;
    }
    assert!(acc.is_integer(), "Weyl dimension formula produced {acc}");
    Ok(acc.to_integer())
}

/// Outcome of the dimension test. Failure proves nothing, so there is no zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GwValue {
    One,
    Unverified,
}

impl fmt::Display for GwValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GwValue::One => write!(f, "1"),
            GwValue::Unverified => write!(f, "unverified"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GwCertificate {
    pub parabolic: ParabolicSubset,
    pub node: usize,
    pub c1: i64,
    pub dim_gamma: usize,
    pub gw: GwValue,
    /// Type of the fiber `Q/P` the computation ran in.
    pub fiber_type: Option<SimpleType>,
}

impl GwCertificate {
    pub fn is_one(&self) -> bool {
        self.gw == GwValue::One
    }
}

/// `GW_{A_alpha,2}(PD[pt], PD[Gamma^op]) = 1` whenever
/// `c1(A_alpha) = 1 + dim Gamma_{A_alpha}(1.P)`; both sides come from the fiber.
pub fn gw_certificate(p: &ParabolicSubset, alpha: usize) -> Result<GwCertificate> {
    let nbhd = curve_neighborhood_point(p, alpha)?;
    let fp = nbhd.fiber.parabolic();
    let c1 = chern_number(&fp, &CurveClass::generator(&fp, nbhd.fiber.node)?)?;
    let dim_gamma = nbhd.dim;
    let gw = if c1 == dim_gamma as i64 + 1 { GwValue::One } else { GwValue::Unverified };
    Ok(GwCertificate {
        parabolic: p.clone(),
        node: alpha,
        c1,
        dim_gamma,
        gw,
        fiber_type: nbhd.fiber.system.simple_type(),
    })
}

/// Certificates for every maximal parabolic of `rs`, in node order.
pub fn certify_maximal_parabolics(rs: &std::sync::Arc<RootSystem>) -> Result<Vec<GwCertificate>> {
    (0..rs.rank())
        .map(|k| gw_certificate(&ParabolicSubset::maximal(rs, k)?, k))
        .collect()
}
