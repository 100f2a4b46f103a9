//! Weyl group elements, Bruhat order and parabolic coset combinatorics.
//!
//! An element carries its integer action on root coordinates (and the action
//! of its inverse) together with a canonical reduced word: the
//! lexicographically smallest one, produced by repeatedly stripping the
//! smallest left descent. Nothing here enumerates the group except
//! [`enumerate_group`], which is guarded.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{rat, IntMatrix};
use crate::rootsys::{Root, RootSystem, Weight};

/// Default bound on `|W|` for [`enumerate_group`].
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_ENUMERATION_LIMIT`].
pub const ENUMERATION_LIMIT_ENV: &str = "COADJOINT_WIDTH_MAX_ENUM";

#[derive(Clone)]
pub struct WeylElement {
    system: Arc<RootSystem>,
    word: Vec<usize>,
    action: IntMatrix,
    inverse: IntMatrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({})", self)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub(crate) fn same_system(a: &Arc<RootSystem>, b: &Arc<RootSystem>) -> bool {
    Arc::ptr_eq(a, b) || a.cartan() == b.cartan()
}

impl WeylElement {
    pub fn identity(system: &Arc<RootSystem>) -> Self {
        let n = system.rank();
        WeylElement {
            system: system.clone(),
            word: Vec::new(),
            action: IntMatrix::identity(n),
            inverse: IntMatrix::identity(n),
        }
    }

    pub fn simple(system: &Arc<RootSystem>, i: usize) -> Result<Self> {
        system.check_node(i)?;
        Self::from_word(system, &[i])
    }

    /// Product `s_{w[0]} s_{w[1]} ...`; the word need not be reduced.
    pub fn from_word(system: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let n = system.rank();
        let mut action = IntMatrix::identity(n);
        let mut inverse = IntMatrix::identity(n);
        for &i in word {
            system.check_node(i)?;
            action.mul_simple_right(i, system.cartan_row(i));
            inverse.mul_simple_left(i, system.cartan_row(i));
        }
        Ok(Self::canonical(system.clone(), action, inverse))
    }

    fn canonical(system: Arc<RootSystem>, action: IntMatrix, inverse: IntMatrix) -> Self {
        let word = canonical_word(&system, &inverse);
        WeylElement { system, word, action, inverse }
    }

    /// Reflection `v -> v - <v, coroot beta> beta`.
    pub fn reflection(system: &Arc<RootSystem>, beta: &Root) -> Result<Self> {
        let coroot = system.coroot(beta)?;
        let n = system.rank();
        let mut rows = vec![vec![0i64; n]; n];
        for j in 0..n {
            // <alpha_j, coroot beta>
            let p: i64 = (0..n).map(|i| coroot.coeffs[i] * system.cartan()[i][j]).sum();
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = i64::from(i == j) - p * beta.coeffs[i];
            }
        }
        let m = IntMatrix::from_rows(&rows);
        Ok(Self::canonical(system.clone(), m.clone(), m))
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    /// Canonical (lexicographically smallest) reduced word, 0-based.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self) -> usize {
        self.system
            .positive_roots()
            .iter()
            .filter(|b| !Root::new(self.action.apply(&b.coeffs)).is_positive())
            .count()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.action.apply(v)
    }

    /// Action on a weight in the fundamental basis.
    pub fn act_on_weight(&self, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        for &i in self.word.iter().rev() {
            reflect_weight(&self.system, &mut out, i);
        }
        out
    }

    pub fn inverse(&self) -> WeylElement {
        Self::canonical(self.system.clone(), self.inverse.clone(), self.action.clone())
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if !same_system(&self.system, &other.system) {
            return Err(Error::SystemMismatch);
        }
        Ok(Self::canonical(
            self.system.clone(),
            self.action.mul(&other.action),
            other.inverse.mul(&self.inverse),
        ))
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> WeylElement {
        let row = self.system.cartan_row(i);
        let mut action = self.action.clone();
        let mut inverse = self.inverse.clone();
        action.mul_simple_right(i, row);
        inverse.mul_simple_left(i, row);
        Self::canonical(self.system.clone(), action, inverse)
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> WeylElement {
        let row = self.system.cartan_row(i);
        let mut action = self.action.clone();
        let mut inverse = self.inverse.clone();
        action.mul_simple_left(i, row);
        inverse.mul_simple_right(i, row);
        Self::canonical(self.system.clone(), action, inverse)
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.action.column_is_negative(i)
    }

    /// `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse.column_is_negative(i)
    }

    pub fn right_descents(&self) -> BTreeSet<usize> {
        (0..self.system.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Every letter of the canonical word lies in `nodes` (membership in W_P).
    pub fn lies_in(&self, nodes: &BTreeSet<usize>) -> bool {
        self.word.iter().all(|i| nodes.contains(i))
    }

    /// Bruhat order test by the subword property against the canonical
    /// reduced word of `other`: walk the word left to right, stripping each
    /// letter that is a left descent of the running element; `self <= other`
    /// iff the running element reaches the identity.
    pub fn bruhat_leq(&self, other: &WeylElement) -> bool {
        let (lu, lw) = (self.length(), other.length());
        if lu > lw {
            return false;
        }
        if lu == lw {
            return self == other;
        }
        let mut inv = self.inverse.clone();
        let mut remaining = lu;
        for (pos, &s) in other.word.iter().enumerate() {
            if remaining == 0 {
                return true;
            }
            if remaining > lw - pos {
                return false;
            }
            if inv.column_is_negative(s) {
                inv.mul_simple_right(s, self.system.cartan_row(s));
                remaining -= 1;
            }
        }
        remaining == 0
    }
}

pub(crate) fn reflect_weight(rs: &RootSystem, lambda: &mut Weight, i: usize) {
    let li = lambda.coords[i].clone();
    if li.is_zero() {
        return;
    }
    for j in 0..rs.rank() {
        let c = rs.cartan()[j][i];
        if c != 0 {
            lambda.coords[j] -= &li * rat(c);
        }
    }
}

fn canonical_word(system: &RootSystem, inverse: &IntMatrix) -> Vec<usize> {
    let n = system.rank();
    let mut u = inverse.clone();
    let mut word = Vec::new();
    'strip: loop {
        for i in 0..n {
            if u.column_is_negative(i) {
                u.mul_simple_right(i, system.cartan_row(i));
                word.push(i);
                continue 'strip;
            }
        }
        break;
    }
    debug_assert!(u.is_identity());
    word
}

/// A subset `S_P` of the simple nodes.
#[derive(Clone)]
pub struct ParabolicSubset {
    system: Arc<RootSystem>,
    nodes: BTreeSet<usize>,
}

impl PartialEq for ParabolicSubset {
    fn eq(&self, other: &Self) -> bool {
        same_system(&self.system, &other.system) && self.nodes == other.nodes
    }
}

impl Eq for ParabolicSubset {}

impl fmt::Debug for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<usize> = self.nodes.iter().map(|i| i + 1).collect();
        write!(f, "ParabolicSubset({nodes:?})")
    }
}

impl ParabolicSubset {
    pub fn new(system: &Arc<RootSystem>, nodes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        for &i in &nodes {
            system.check_node(i)?;
        }
        Ok(ParabolicSubset { system: system.clone(), nodes })
    }

    /// The Borel case `S_P = {}`.
    pub fn empty(system: &Arc<RootSystem>) -> Self {
        ParabolicSubset { system: system.clone(), nodes: BTreeSet::new() }
    }

    pub fn full(system: &Arc<RootSystem>) -> Self {
        ParabolicSubset { system: system.clone(), nodes: (0..system.rank()).collect() }
    }

    /// `S_P = S - {node}`.
    pub fn maximal(system: &Arc<RootSystem>, node: usize) -> Result<Self> {
        system.check_node(node)?;
        Self::new(system, (0..system.rank()).filter(|&i| i != node))
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    pub fn contains(&self, i: usize) -> bool {
        self.nodes.contains(&i)
    }

    /// `S - S_P`.
    pub fn complement(&self) -> BTreeSet<usize> {
        (0..self.system.rank()).filter(|i| !self.nodes.contains(i)).collect()
    }

    /// The excluded node when `S_P = S - {node}`.
    pub fn maximal_node(&self) -> Option<usize> {
        let c = self.complement();
        if c.len() == 1 {
            c.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &ParabolicSubset) -> bool {
        same_system(&self.system, &other.system) && self.nodes.is_subset(&other.nodes)
    }

    /// `R_P+`: positive roots supported on `S_P`.
    pub fn positive_roots(&self) -> Vec<&Root> {
        self.system
            .positive_roots()
            .iter()
            .filter(|r| r.support().is_subset(&self.nodes))
            .collect()
    }

    pub fn contains_root(&self, beta: &Root) -> bool {
        beta.support().is_subset(&self.nodes)
    }

    /// `dim_C G/P = |R+| - |R_P+|`.
    pub fn flag_dimension(&self) -> usize {
        self.system.num_positive_roots() - self.positive_roots().len()
    }

    /// Longest element `w_P` of `W_P`, grown greedily by simple reflections
    /// in `S_P` that increase length.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(&self.system);
        'grow: loop {
            for &i in &self.nodes {
                if !w.has_right_descent(i) {
                    w = w.mul_simple_right(i);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Minimal representative `w^P` of `w W_P`, by stripping right descents in `S_P`.
    pub fn min_coset_rep(&self, w: &WeylElement) -> Result<CosetRep> {
        if !same_system(&self.system, w.system()) {
            return Err(Error::SystemMismatch);
        }
        let mut cur = w.clone();
        'strip: loop {
            for &i in &self.nodes {
                if cur.has_right_descent(i) {
                    cur = cur.mul_simple_right(i);
                    continue 'strip;
                }
            }
            break;
        }
        Ok(CosetRep { elem: cur, parabolic: self.clone() })
    }

    /// Is `w` in `W^P`?
    pub fn is_min_rep(&self, w: &WeylElement) -> bool {
        self.nodes.iter().all(|&i| !w.has_right_descent(i))
    }
}

/// Minimal-length representative of a coset in `W / W_P`.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetRep {
    elem: WeylElement,
    parabolic: ParabolicSubset,
}

impl fmt::Debug for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CosetRep({} mod {:?})", self.elem, self.parabolic)
    }
}

impl CosetRep {
    /// Wrap an element already known to lie in `W^P`.
    pub fn new(elem: WeylElement, parabolic: &ParabolicSubset) -> Result<Self> {
        if !same_system(elem.system(), parabolic.system()) {
            return Err(Error::SystemMismatch);
        }
        if !parabolic.is_min_rep(&elem) {
            return Err(Error::NotMinimalRepresentative);
        }
        Ok(CosetRep { elem, parabolic: parabolic.clone() })
    }

    pub fn elem(&self) -> &WeylElement {
        &self.elem
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn length(&self) -> usize {
        self.elem.length()
    }

    /// Bruhat order on `W / W_P`, compared through minimal representatives.
    pub fn bruhat_leq(&self, other: &CosetRep) -> bool {
        self.elem.bruhat_leq(&other.elem)
    }

    /// Split `w = w^Q * w_Q^P` with `w^Q` in `W^Q` and `w_Q^P` in `W_Q`
    /// having no right descent in `S_P`.
    pub fn decompose(&self, q: &ParabolicSubset) -> Result<(CosetRep, WeylElement)> {
        if !self.parabolic.is_subset_of(q) {
            return Err(Error::ContainmentViolated);
        }
        let wq = q.min_coset_rep(&self.elem)?;
        let rest = wq.elem.inverse().multiply(&self.elem)?;
        debug_assert!(rest.lies_in(q.nodes()));
        debug_assert!(self.parabolic.is_min_rep(&rest));
        Ok((wq, rest))
    }
}

/// Enumeration bound from the environment, or the default.
pub fn enumeration_limit() -> u128 {
    std::env::var(ENUMERATION_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

/// All elements of `W`, breadth first from the identity and deduplicated by
/// action. Refuses groups larger than [`enumeration_limit`] unless `force`.
pub fn enumerate_group(system: &Arc<RootSystem>, force: bool) -> Result<Vec<WeylElement>> {
    let order = system.weyl_group_order();
    let limit = enumeration_limit();
    if order > limit && !force {
        return Err(Error::EnumerationTooLarge { order, limit });
    }
    let id = WeylElement::identity(system);
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for i in 0..system.rank() {
            if w.has_right_descent(i) {
                continue;
            }
            let next = w.mul_simple_right(i);
            if seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// `W^P`, the minimal representatives of `W / W_P`.
pub fn enumerate_min_reps(p: &ParabolicSubset, force: bool) -> Result<Vec<CosetRep>> {
    Ok(enumerate_group(p.system(), force)?
        .into_iter()
        .filter(|w| p.is_min_rep(w))
        .map(|w| CosetRep { elem: w, parabolic: p.clone() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<RootSystem> {
        RootSystem::new('A', 2).unwrap()
    }

    #[test]
    fn reflection_of_highest_root_a2() {
        let rs = a2();
        let s = WeylElement::reflection(&rs, &Root::new(vec![1, 1])).unwrap();
        assert_eq!(s.word(), &[0, 1, 0]);
        assert_eq!(s.length(), 3);
        assert!(s.multiply(&s).unwrap().is_identity());
        assert_eq!(WeylElement::reflection(&rs, &Root::new(vec![0, 1])).unwrap().word(), &[1]);
        assert!(WeylElement::reflection(&rs, &Root::new(vec![2, 1])).is_err());
    }

    #[test]
    fn canonical_word_is_lex_smallest() {
        let rs = a2();
        let w = WeylElement::from_word(&rs, &[1, 0, 1]).unwrap();
        assert_eq!(w.word(), &[0, 1, 0]);
        let e = WeylElement::from_word(&rs, &[0, 0]).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn multiply_basics() {
        let rs = a2();
        let s1 = WeylElement::simple(&rs, 0).unwrap();
        let s2 = WeylElement::simple(&rs, 1).unwrap();
        let id = WeylElement::identity(&rs);
        assert_eq!(s1.multiply(&id).unwrap(), s1);
        assert!(s1.multiply(&s1).unwrap().is_identity());
        assert_eq!(s1.multiply(&s2).unwrap().length(), 2);
        let other = RootSystem::new('B', 2).unwrap();
        assert_eq!(
            s1.multiply(&WeylElement::simple(&other, 0).unwrap()),
            Err(Error::SystemMismatch)
        );
    }

    #[test]
    fn longest_elements() {
        let rs = a2();
        assert!(ParabolicSubset::empty(&rs).longest_element().is_identity());
        let w0 = ParabolicSubset::full(&rs).longest_element();
        assert_eq!(w0.length(), 3);
        assert!(w0.multiply(&w0).unwrap().is_identity());
        let f4 = RootSystem::new('F', 4).unwrap();
        assert_eq!(ParabolicSubset::full(&f4).longest_element().length(), 24);
    }

    #[test]
    fn a2_min_reps_collapse() {
        let rs = a2();
        let p = ParabolicSubset::new(&rs, [0]).unwrap();
        let all = enumerate_group(&rs, false).unwrap();
        assert_eq!(all.len(), 6);
        let mut reps: Vec<WeylElement> = Vec::new();
        for w in &all {
            let r = p.min_coset_rep(w).unwrap();
            if !reps.contains(r.elem()) {
                reps.push(r.elem().clone());
            }
        }
        let mut lens: Vec<usize> = reps.iter().map(|w| w.length()).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 2]);
    }

    #[test]
    fn min_rep_trivial_cases() {
        let rs = a2();
        let p = ParabolicSubset::new(&rs, [0]).unwrap();
        let s1 = WeylElement::simple(&rs, 0).unwrap();
        assert!(p.min_coset_rep(&s1).unwrap().elem().is_identity());
        let w = WeylElement::from_word(&rs, &[0, 1]).unwrap();
        assert_eq!(p.min_coset_rep(&w).unwrap().elem(), &w);
    }

    #[test]
    fn decompose_edge_cases() {
        let rs = RootSystem::new('B', 3).unwrap();
        let p = ParabolicSubset::new(&rs, [0]).unwrap();
        let q = ParabolicSubset::new(&rs, [0, 1]).unwrap();
        // w in W^Q decomposes as (w, e).
        let w = WeylElement::from_word(&rs, &[1, 2]).unwrap();
        let rep = CosetRep::new(w.clone(), &p).unwrap();
        let (wq, rest) = rep.decompose(&q).unwrap();
        assert_eq!(wq.elem(), &w);
        assert!(rest.is_identity());
        // The longest element of W_Q^P is w_q w_p and decomposes as (e, w_q w_p).
        let wqp = q.longest_element().multiply(&p.longest_element()).unwrap();
        let rep = CosetRep::new(wqp.clone(), &p).unwrap();
        let (wq, rest) = rep.decompose(&q).unwrap();
        assert!(wq.elem().is_identity());
        assert_eq!(rest, wqp);
        assert_eq!(rep.decompose(&ParabolicSubset::empty(&rs)).unwrap_err(), Error::ContainmentViolated);
    }

    #[test]
    fn enumeration_guard() {
        let e7 = RootSystem::new('E', 7).unwrap();
        assert!(matches!(enumerate_group(&e7, false), Err(Error::EnumerationTooLarge { .. })));
        let e8 = RootSystem::new('E', 8).unwrap();
        assert!(matches!(enumerate_group(&e8, false), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn weight_action_matches_root_action() {
        let rs = RootSystem::new('G', 2).unwrap();
        let w = WeylElement::from_word(&rs, &[0, 1, 0]).unwrap();
        for beta in rs.positive_roots() {
            let as_weight = rs.root_to_weight(&beta.coeffs);
            let image = rs.root_to_weight(&w.apply(&beta.coeffs));
            assert_eq!(w.act_on_weight(&as_weight), image);
        }
    }
}
