//! Gromov width upper bound for coadjoint orbits.
//!
//! For `lambda` in `t*` the orbit `O_lambda` carries the KKS form, and the
//! bound is the smallest nonzero `|<lambda, beta^vee>|` over all coroots.
//! Each simple generator `A_alpha` with `alpha` outside the stabilizer gets a
//! GW certificate, without which no bound is reported.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::{gw_certificate, GwCertificate};
use crate::lattice::{rat, rat_frac, Rational};
use crate::rootsys::{pair, CorootVector, Root, RootSystem, SimpleType, Weight};
use crate::weyl::{reflect_weight, ParabolicSubset, WeylElement};

/// Reflect `lambda` into the dominant chamber. Returns `(lambda+, w)` with
/// `w . lambda = lambda+`.
pub fn make_dominant(rs: &std::sync::Arc<RootSystem>, lambda: &Weight) -> Result<(Weight, WeylElement)> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    let mut mu = lambda.clone();
    let mut w = WeylElement::identity(rs);
    while let Some(i) = mu.coords.iter().position(|c| c.is_negative()) {
        reflect_weight(rs, &mut mu, i);
        w = w.mul_simple_left(i);
    }
    Ok((mu, w))
}

/// `S_P = {alpha : <lambda, alpha^vee> = 0}` for dominant `lambda`.
pub fn stabilizer_parabolic(rs: &std::sync::Arc<RootSystem>, lambda: &Weight) -> Result<ParabolicSubset> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroOrbit);
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant);
    }
    let nodes = (0..rs.rank()).filter(|&i| lambda.coords[i].is_zero());
    ParabolicSubset::new(rs, nodes)
}

#[derive(Debug, Clone)]
pub struct GromovWidthReport {
    pub bound: Rational,
    pub achieving_root: Root,
    /// Sign chosen so that the pairing with `lambda` is positive.
    pub achieving_coroot: CorootVector,
    pub parabolic: ParabolicSubset,
    /// `omega_lambda(A_alpha) = <lambda+, alpha^vee>` for `alpha` in `S - S_P`.
    pub areas: BTreeMap<usize, Rational>,
    pub certificates: BTreeMap<usize, GwCertificate>,
    pub lambda: Weight,
    pub dominant_lambda: Weight,
    pub chamber_witness: WeylElement,
}

/// Smallest nonzero `|<lambda, beta^vee>|` over all coroots, with the
/// positive root attaining it first in root order.
pub fn min_nonzero_pairing(rs: &RootSystem, lambda: &Weight) -> Result<Option<(Rational, usize)>> {
    let mut best: Option<(Rational, usize)> = None;
    for (k, c) in rs.positive_coroots().iter().enumerate() {
        let v = pair(lambda, c)?.abs();
        if v.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, k));
        }
    }
    Ok(best)
}

pub fn gromov_width_upper(rs: &std::sync::Arc<RootSystem>, lambda: &Weight) -> Result<GromovWidthReport> {
    let (dominant, witness) = make_dominant(rs, lambda)?;
    let parabolic = stabilizer_parabolic(rs, &dominant)?;
    let (bound, k) = min_nonzero_pairing(rs, lambda)?.ok_or(Error::ZeroOrbit)?;
    let root = rs.positive_roots()[k].clone();
    let mut coroot = rs.positive_coroots()[k].clone();
    if pair(lambda, &coroot)?.is_negative() {
        coroot = coroot.negated();
    }
    let mut areas = BTreeMap::new();
    let mut certificates = BTreeMap::new();
    for alpha in parabolic.complement() {
        areas.insert(alpha, dominant.coords[alpha].clone());
        let cert = gw_certificate(&parabolic, alpha)?;
        if !cert.is_one() {
            return Err(Error::Uncertified { node: alpha, c1: cert.c1, dim_gamma: cert.dim_gamma });
        }
        certificates.insert(alpha, cert);
    }
    Ok(GromovWidthReport {
        bound,
        achieving_root: root,
        achieving_coroot: coroot,
        parabolic,
        areas,
        certificates,
        lambda: lambda.clone(),
        dominant_lambda: dominant,
        chamber_witness: witness,
    })
}

/// `min |lambda_i - lambda_j|` over distinct entries, the U(n) formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnWidth {
    pub width: Rational,
    /// The `A_{n-1}` weight of the sorted tuple: `coords[i] = l_(i) - l_(i+1)`.
    pub weight: Weight,
}

pub fn un_width(values: &[Rational]) -> Result<UnWidth> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let diffs: Vec<Rational> = sorted.windows(2).map(|p| &p[0] - &p[1]).collect();
    // After sorting, the closest distinct pair is adjacent.
    let width = diffs.iter().filter(|d| !d.is_zero()).min().cloned().ok_or(Error::ZeroOrbit)?;
    Ok(UnWidth { width, weight: Weight::new(diffs) })
}

/// Coordinate systems accepted for `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Fundamental,
    Euclidean,
    UnDiag,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Fundamental => "fundamental",
            Basis::Euclidean => "euclidean",
            Basis::UnDiag => "un-diag",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fundamental" => Ok(Basis::Fundamental),
            "euclidean" => Ok(Basis::Euclidean),
            "un-diag" => Ok(Basis::UnDiag),
            other => Err(Error::Unsupported(format!("basis {other}"))),
        }
    }
}

/// A Euclidean realization: simple roots as vectors, and the diagonal of the
/// (rational) metric they are measured in.
#[derive(Debug, Clone)]
pub struct Realization {
    pub simple_roots: Vec<Vec<Rational>>,
    pub metric: Vec<Rational>,
}

impl Realization {
    pub fn dim(&self) -> usize {
        self.metric.len()
    }

    fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        u.iter()
            .zip(v)
            .zip(&self.metric)
            .fold(Rational::zero(), |acc, ((a, b), g)| acc + a * b * g)
    }

    /// `<lambda, alpha_i^vee> = 2 (lambda, alpha_i) / (alpha_i, alpha_i)` for each node.
    pub fn to_fundamental(&self, v: &[Rational]) -> Result<Weight> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        let coords = self
            .simple_roots
            .iter()
            .map(|a| rat(2) * self.inner(v, a) / self.inner(a, a))
            .collect();
        Ok(Weight::new(coords))
    }

    /// `<alpha_j, alpha_i^vee>`, which must reproduce the Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<Rational>> {
        self.simple_roots
            .iter()
            .map(|ai| {
                self.simple_roots
                    .iter()
                    .map(|aj| rat(2) * self.inner(aj, ai) / self.inner(ai, ai))
                    .collect()
            })
            .collect()
    }
}

fn unit(dim: usize, entries: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    for (i, x) in entries {
        v[*i] = x.clone();
    }
    v
}

/// Standard realizations. Type `A_n` lives in `R^{n+1}`; `G2` uses a second
/// coordinate measured in units of `sqrt 3`. Type `E` has none here.
pub fn realization(t: SimpleType) -> Result<Realization> {
    let n = t.rank;
    let one = || rat(1);
    let chain = |dim: usize, len: usize| -> Vec<Vec<Rational>> {
        (0..len).map(|i| unit(dim, &[(i, one()), (i + 1, rat(-1))])).collect()
    };
    let (simple_roots, metric) = match t.letter {
        'A' => (chain(n + 1, n), vec![one(); n + 1]),
        'B' | 'C' | 'D' => {
            let mut roots = chain(n, n - 1);
            roots.push(match t.letter {
                'B' => unit(n, &[(n - 1, one())]),
                'C' => unit(n, &[(n - 1, rat(2))]),
                _ => unit(n, &[(n - 2, one()), (n - 1, one())]),
            });
            (roots, vec![one(); n])
        }
        'F' => {
            let h = rat_frac(1, 2);
            let roots = vec![
                unit(4, &[(1, one()), (2, rat(-1))]),
                unit(4, &[(2, one()), (3, rat(-1))]),
                unit(4, &[(3, one())]),
                vec![h.clone(), -h.clone(), -h.clone(), -h],
            ];
            (roots, vec![one(); 4])
        }
        'G' => (
            vec![vec![rat_frac(-3, 2), rat_frac(1, 2)], vec![one(), Rational::zero()]],
            vec![one(), rat(3)],
        ),
        _ => return Err(Error::Unsupported(format!("Euclidean realization of {t}"))),
    };
    Ok(Realization { simple_roots, metric })
}

/// Diagonal entries of `i * lambda` in `u(n)` to `A_{n-1}` fundamental
/// coordinates; the trace part drops out.
pub fn un_diag_to_fundamental(values: &[Rational]) -> Weight {
    Weight::new(values.windows(2).map(|p| &p[0] - &p[1]).collect())
}

/// Convert user coordinates in `basis` to fundamental-weight coordinates.
pub fn to_fundamental(t: SimpleType, basis: Basis, values: &[Rational]) -> Result<Weight> {
    let w = match basis {
        Basis::Fundamental => Weight::new(values.to_vec()),
        Basis::Euclidean => realization(t)?.to_fundamental(values)?,
        Basis::UnDiag => {
            if t.letter != 'A' {
                return Err(Error::Unsupported(format!("un-diag basis for type {t}")));
            }
            if values.len() != t.rank + 1 {
                return Err(Error::DimensionMismatch { expected: t.rank + 1, got: values.len() });
            }
            un_diag_to_fundamental(values)
        }
    };
    if w.rank() != t.rank {
        return Err(Error::DimensionMismatch { expected: t.rank, got: w.rank() });
    }
    Ok(w)
}
