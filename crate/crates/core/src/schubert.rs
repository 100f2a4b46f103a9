//! Schubert indexing on `G/P`, fibration pushforward/pullback, and the
//! degree-`A_alpha` curve neighborhood of the base point.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::invariants::{curve_class, CurveClass};
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{CosetRep, ParabolicSubset, WeylElement};

/// A T-fixed point `s_beta P` of the neighborhood, with every root `beta`
/// (of the right curve class) whose reflection lands in this coset.
#[derive(Debug, Clone)]
pub struct FixedPoint {
    pub rep: CosetRep,
    pub roots: Vec<Root>,
}

/// The simple root system carrying a curve neighborhood computation: the
/// connected component of `alpha` in `S_P + {alpha}`, relabeled `0..k`.
#[derive(Debug, Clone)]
pub struct Fiber {
    pub system: Arc<RootSystem>,
    /// `table[k]` is the ambient node of fiber node `k`.
    pub table: Vec<usize>,
    /// Fiber index of the distinguished node.
    pub node: usize,
}

impl Fiber {
    /// The maximal parabolic of the fiber at the distinguished node.
    pub fn parabolic(&self) -> ParabolicSubset {
        ParabolicSubset::maximal(&self.system, self.node).expect("node in range")
    }

    fn lift_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&k| self.table[k]).collect()
    }

    fn lift_root(&self, beta: &Root, rank: usize) -> Root {
        let mut c = vec![0; rank];
        for (k, &x) in beta.coeffs.iter().enumerate() {
            c[self.table[k]] = x;
        }
        Root::new(c)
    }
}

/// `Gamma_{A_alpha}(1.P) = X_P(max)`.
#[derive(Debug, Clone)]
pub struct CurveNeighborhood {
    pub parabolic: ParabolicSubset,
    pub node: usize,
    pub degree: CurveClass,
    /// `Z_A^P`, sorted by length then word.
    pub zset: Vec<FixedPoint>,
    /// Index of the Bruhat-maximal point in `zset`.
    pub max_index: usize,
    pub dim: usize,
    pub fiber: Fiber,
}

impl CurveNeighborhood {
    pub fn max(&self) -> &CosetRep {
        &self.zset[self.max_index].rep
    }
}

/// `Z_A^P` for `P` maximal at `alpha`: cosets `s_beta W_P` over
/// `beta` in `R+ - R_P+` whose curve class is the generator `A_alpha`.
pub fn fixed_point_set(p: &ParabolicSubset) -> Result<Vec<FixedPoint>> {
    let alpha = p.maximal_node().ok_or(Error::NotMaximal)?;
    let rs = p.system();
    let mut points: Vec<FixedPoint> = Vec::new();
    for beta in rs.positive_roots() {
        if p.contains_root(beta) {
            continue;
        }
        let class = curve_class(beta, p)?;
        if class.coeffs.get(&alpha) != Some(&1) {
            continue;
        }
        let rep = p.min_coset_rep(&WeylElement::reflection(rs, beta)?)?;
        match points.iter_mut().find(|fp| fp.rep == rep) {
            Some(fp) => fp.roots.push(beta.clone()),
            None => points.push(FixedPoint { rep, roots: vec![beta.clone()] }),
        }
    }
    points.sort_by(|a, b| {
        a.rep
            .length()
            .cmp(&b.rep.length())
            .then_with(|| a.rep.elem().word().cmp(b.rep.elem().word()))
    });
    Ok(points)
}

/// Index of the unique Bruhat-maximal coset. More than one surviving
/// maximum is reported, never broken as a tie.
pub fn unique_maximum(reps: &[&CosetRep]) -> Result<usize> {
    let mut maxima: Vec<usize> = Vec::new();
    for (k, r) in reps.iter().enumerate() {
        if maxima.iter().any(|&m| r.bruhat_leq(reps[m])) {
            continue;
        }
        maxima.retain(|&m| !reps[m].bruhat_leq(r));
        maxima.push(k);
    }
    match maxima.as_slice() {
        [m] => Ok(*m),
        _ => Err(Error::NoUniqueMaximum { candidates: maxima.len() }),
    }
}

/// The fiber of `G/P -> G/Q` with `S_Q = S_P + {alpha}`, reduced to the
/// connected component of `alpha`.
pub fn fiber_for(p: &ParabolicSubset, alpha: usize) -> Result<Fiber> {
    let rs = p.system();
    rs.check_node(alpha)?;
    if p.contains(alpha) {
        return Err(Error::NodeInParabolic(alpha));
    }
    let mut nodes = p.nodes().clone();
    nodes.insert(alpha);
    let comp = rs.component_of(alpha, &nodes);
    let (system, table) = if comp.len() == rs.rank() {
        (rs.clone(), (0..rs.rank()).collect())
    } else {
        rs.sub_system(&comp)?
    };
    let node = table.iter().position(|&i| i == alpha).expect("alpha in component");
    Ok(Fiber { system, table, node })
}

/// Curve neighborhood of `1.P` in degree `A_alpha`, computed in the fiber
/// and lifted back; its dimension is unchanged by the lift.
pub fn curve_neighborhood_point(p: &ParabolicSubset, alpha: usize) -> Result<CurveNeighborhood> {
    let fiber = fiber_for(p, alpha)?;
    let fp = fiber.parabolic();
    let points = fixed_point_set(&fp)?;
    let reps: Vec<&CosetRep> = points.iter().map(|x| &x.rep).collect();
    let max_index = unique_maximum(&reps)?;
    let dim = points[max_index].rep.length();

    let rs = p.system();
    let zset = points
        .iter()
        .map(|x| {
            let elem = WeylElement::from_word(rs, &fiber.lift_word(x.rep.elem().word()))?;
            Ok(FixedPoint {
                rep: CosetRep::new(elem, p)?,
                roots: x.roots.iter().map(|b| fiber.lift_root(b, rs.rank())).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveNeighborhood {
        parabolic: p.clone(),
        node: alpha,
        degree: CurveClass::generator(p, alpha)?,
        zset,
        max_index,
        dim,
        fiber,
    })
}

/// `Gamma_A(1.P) = X_P(w_p w_r s_alpha)` for `P` maximal at a long node,
/// with `S_R = S - (N(alpha) + {alpha})`.
pub fn longroot_curve_neighborhood(p: &ParabolicSubset) -> Result<CosetRep> {
    let alpha = p.maximal_node().ok_or(Error::NotMaximal)?;
    let rs = p.system();
    if !rs.is_long_node(alpha) {
        return Err(Error::ShortRoot(alpha));
    }
    let r = long_root_r(p, alpha)?;
    let wpr = p.longest_element().multiply(&r.longest_element())?;
    CosetRep::new(wpr.mul_simple_right(alpha), p)
}

/// The parabolic `S_R = S - (N(alpha) + {alpha})`.
pub fn long_root_r(p: &ParabolicSubset, alpha: usize) -> Result<ParabolicSubset> {
    let rs = p.system();
    let nbrs = rs.neighbors(alpha);
    ParabolicSubset::new(rs, (0..rs.rank()).filter(|i| *i != alpha && !nbrs.contains(i)))
}

/// `pi_{q*} X_P(w) = X_Q(w^Q)`.
pub fn pushforward(w: &CosetRep, q: &ParabolicSubset) -> Result<CosetRep> {
    Ok(w.decompose(q)?.0)
}

/// `pi_q^* X_Q(w~) = X_P(w~ w_q w_p)`.
pub fn pullback(w: &CosetRep, p: &ParabolicSubset) -> Result<CosetRep> {
    let q = w.parabolic();
    if !p.is_subset_of(q) {
        return Err(Error::ContainmentViolated);
    }
    let wqp = q.longest_element().multiply(&p.longest_element())?;
    CosetRep::new(w.elem().multiply(&wqp)?, p)
}

/// Cover relations of the Bruhat order restricted to a set of cosets.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    pub vertices: Vec<CosetRep>,
    /// `(lower, upper)` index pairs.
    pub edges: Vec<(usize, usize)>,
    pub maximum: usize,
}

pub fn hasse_diagram(points: &[FixedPoint]) -> Result<HasseDiagram> {
    let vertices: Vec<CosetRep> = points.iter().map(|x| x.rep.clone()).collect();
    let n = vertices.len();
    let less: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && vertices[i].bruhat_leq(&vertices[j])).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                edges.push((i, j));
            }
        }
    }
    let refs: Vec<&CosetRep> = vertices.iter().collect();
    let maximum = unique_maximum(&refs)?;
    Ok(HasseDiagram { vertices, edges, maximum })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one() {
        let rs = RootSystem::new('A', 1).unwrap();
        let p = ParabolicSubset::maximal(&rs, 0).unwrap();
        let z = fixed_point_set(&p).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].rep.elem().word(), &[0]);
        let n = curve_neighborhood_point(&p, 0).unwrap();
        assert_eq!(n.dim, 1);
        let h = hasse_diagram(&n.zset).unwrap();
        assert_eq!(h.vertices.len(), 1);
        assert!(h.edges.is_empty());
    }

    #[test]
    fn a2_longroot() {
        let rs = RootSystem::new('A', 2).unwrap();
        let p = ParabolicSubset::maximal(&rs, 0).unwrap();
        let z = longroot_curve_neighborhood(&p).unwrap();
        assert_eq!(z.elem().word(), &[1, 0]);
        assert_eq!(z.length(), 2);
        assert_eq!(curve_neighborhood_point(&p, 0).unwrap().max(), &z);
    }

    #[test]
    fn errors() {
        let rs = RootSystem::new('C', 3).unwrap();
        let borel = ParabolicSubset::empty(&rs);
        assert_eq!(fixed_point_set(&borel).unwrap_err(), Error::NotMaximal);
        let p = ParabolicSubset::maximal(&rs, 0).unwrap();
        assert_eq!(longroot_curve_neighborhood(&p).unwrap_err(), Error::ShortRoot(0));
        assert_eq!(curve_neighborhood_point(&p, 1).unwrap_err(), Error::NodeInParabolic(1));
        let q = ParabolicSubset::new(&rs, [1]).unwrap();
        let e = CosetRep::new(WeylElement::identity(&rs), &q).unwrap();
        assert_eq!(pushforward(&e, &borel).unwrap_err(), Error::ContainmentViolated);
        assert_eq!(pullback(&e, &p).unwrap_err(), Error::ContainmentViolated);
    }

    #[test]
    fn push_pull_trivial() {
        let rs = RootSystem::new('B', 3).unwrap();
        let p = ParabolicSubset::new(&rs, [0]).unwrap();
        let q = ParabolicSubset::new(&rs, [0, 1]).unwrap();
        let e = CosetRep::new(WeylElement::identity(&rs), &p).unwrap();
        assert!(pushforward(&e, &q).unwrap().elem().is_identity());
        let s2 = CosetRep::new(WeylElement::simple(&rs, 1).unwrap(), &p).unwrap();
        assert!(pushforward(&s2, &q).unwrap().elem().is_identity());
        let eq = CosetRep::new(WeylElement::identity(&rs), &q).unwrap();
        let full = pullback(&eq, &p).unwrap();
        let expect = q.longest_element().multiply(&p.longest_element()).unwrap();
        assert_eq!(full.elem(), &expect);
        // Q = P is the identity map.
        let w = CosetRep::new(WeylElement::from_word(&rs, &[1, 2]).unwrap(), &q).unwrap();
        assert_eq!(pullback(&w, &q).unwrap(), w);
    }

    #[test]
    fn general_parabolic_routes_through_fiber() {
        let rs = RootSystem::new('A', 4).unwrap();
        // S_P = {0, 2} (0-based), alpha = 3: component {2, 3} is A2.
        let p = ParabolicSubset::new(&rs, [0, 2]).unwrap();
        let n = curve_neighborhood_point(&p, 3).unwrap();
        assert_eq!(n.fiber.table, vec![2, 3]);
        assert_eq!(n.fiber.system.simple_type().unwrap().to_string(), "A2");
        assert_eq!(n.dim, 2);
        for x in &n.zset {
            assert!(p.is_min_rep(x.rep.elem()));
        }
    }
}
