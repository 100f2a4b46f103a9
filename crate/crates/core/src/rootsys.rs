//! Root systems of the simple types, built from their Cartan matrices.
//!
//! Roots are stored in simple-root coordinates and coroots in simple-coroot
//! coordinates. The invariant form is normalized so that long roots have
//! squared length 2 in every connected component.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rat, rat_frac, solve, Rational};

/// A simple Dynkin type such as `A3` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub letter: char,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = letter.to_ascii_uppercase();
        let ok = match letter {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(SimpleType { letter, rank })
        } else {
            Err(Error::InvalidType { letter, rank })
        }
    }

    /// Every simple type of rank at most `max_rank`, in the order
    /// A, B, C, D, E, F, G and increasing rank within a letter.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for letter in ['A', 'B', 'C', 'D', 'E', 'F', 'G'] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(letter, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix with `C[i][j] = <alpha_j, coroot alpha_i>` in Bourbaki
    /// labeling. For G2 the first simple root is the long one.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.letter {
            'A' | 'B' | 'C' | 'F' | 'G' => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            'E' => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            _ => unreachable!("validated in SimpleType::new"),
        }
        // The row of the short node carries the -2 (or -3).
        match self.letter {
            'B' => c[n - 1][n - 2] = -2,
            'C' => c[n - 2][n - 1] = -2,
            'F' => c[2][1] = -2,
            'G' => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or(Error::InvalidType { letter: '?', rank: 0 })?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::InvalidType { letter, rank: 0 })?;
        SimpleType::new(letter, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Nodes with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A coroot in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootVector {
    pub coeffs: Vec<i64>,
}

impl CorootVector {
    pub fn negated(&self) -> CorootVector {
        CorootVector {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![Rational::zero(); rank])
    }

    /// Half the sum of the positive roots: all coordinates equal to one.
    pub fn rho(rank: usize) -> Self {
        Weight::from_ints(&vec![1; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = rat(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scaled(&self, c: &Rational) -> Weight {
        Weight::new(self.coords.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        check_dim(self.rank(), other.rank())?;
        Ok(Weight::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        ))
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// `<lambda, coroot>` for a weight in the fundamental basis and a coroot in
/// the simple-coroot basis.
pub fn pair(lambda: &Weight, coroot: &CorootVector) -> Result<Rational> {
    check_dim(lambda.rank(), coroot.coeffs.len())?;
    let mut acc = Rational::zero();
    for (l, &m) in lambda.coords.iter().zip(&coroot.coeffs) {
        if m != 0 {
            acc += l * rat(m);
        }
    }
    Ok(acc)
}

/// A (possibly reducible) finite root system.
#[derive(Debug)]
pub struct RootSystem {
    rank: usize,
    components: Vec<(SimpleType, Vec<usize>)>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    positive_roots: Vec<Root>,
    coroots: Vec<CorootVector>,
    root_lengths: Vec<Rational>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Build the root system of a simple type.
    pub fn new(letter: char, rank: usize) -> Result<Arc<RootSystem>> {
        Self::from_type(SimpleType::new(letter, rank)?)
    }

    pub fn from_type(t: SimpleType) -> Result<Arc<RootSystem>> {
        let mut rs = Self::build(t.cartan_matrix())?;
        // B2 and C2 share a diagram; keep the requested name.
        rs.components[0].0 = t;
        Ok(Arc::new(rs))
    }

    /// Build from an arbitrary finite-type Cartan matrix. Components are
    /// classified and normalized independently.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Arc<RootSystem>> {
        Ok(Arc::new(Self::build(cartan)?))
    }

    fn build(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            check_dim(n, row.len())?;
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("C[{i}][{i}] != 2")));
            }
            for (j, &c) in row.iter().enumerate() {
                if i != j && (c > 0 || (c == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidCartan(format!("bad entry C[{i}][{j}]")));
                }
            }
        }

        let comps = components(&cartan, &(0..n).collect());
        let symmetrizer = symmetrize(&cartan, &comps)?;
        let mut components = Vec::with_capacity(comps.len());
        for comp in comps {
            let t = classify(&cartan, &symmetrizer, &comp)?;
            components.push((t, comp));
        }

        let positive_roots = generate_positive_roots(&cartan);
        let index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), k))
            .collect();

        let mut rs = RootSystem {
            rank: n,
            components,
            cartan,
            symmetrizer,
            positive_roots,
            coroots: Vec::new(),
            root_lengths: Vec::new(),
            index,
        };
        let mut coroots = Vec::with_capacity(rs.positive_roots.len());
        let mut lengths = Vec::with_capacity(rs.positive_roots.len());
        for beta in &rs.positive_roots {
            let half = rs.form(&beta.coeffs, &beta.coeffs) / rat(2);
            let mut coeffs = Vec::with_capacity(n);
            for i in 0..n {
                let m = rat(beta.coeffs[i]) * &rs.symmetrizer[i] / &half;
                if !m.is_integer() {
                    return Err(Error::InvalidCartan("non-integral coroot".into()));
                }
                coeffs.push(i64::try_from(m.to_integer()).expect("small coroot coefficient"));
            }
            coroots.push(CorootVector { coeffs });
            lengths.push(half);
        }
        rs.coroots = coroots;
        rs.root_lengths = lengths;
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    #[inline]
    pub fn cartan_row(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    /// `d_i = (alpha_i, alpha_i) / 2`, so that `d_i C[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// The type when the system is simple.
    pub fn simple_type(&self) -> Option<SimpleType> {
        match self.components.as_slice() {
            [(t, _)] => Some(*t),
            _ => None,
        }
    }

    /// Connected components as (type, nodes in this system's labeling).
    pub fn components(&self) -> &[(SimpleType, Vec<usize>)] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        Root::new(c)
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        }
    }

    /// Index of a positive root, if `v` is one.
    pub fn positive_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.len() != self.rank {
            return false;
        }
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Index into the positive roots together with the sign of `beta`.
    fn locate(&self, beta: &Root) -> Result<(usize, bool)> {
        check_dim(self.rank, beta.coeffs.len())?;
        if let Some(k) = self.positive_index(&beta.coeffs) {
            return Ok((k, true));
        }
        let neg = beta.negated();
        self.positive_index(&neg.coeffs)
            .map(|k| (k, false))
            .ok_or_else(|| Error::NotARoot(beta.coeffs.clone()))
    }

    /// The unique root of maximal height (first component for reducible systems).
    pub fn highest_root(&self) -> &Root {
        let comp = &self.components[0].1;
        self.positive_roots
            .iter()
            .filter(|r| r.support().iter().all(|i| comp.contains(i)))
            .max_by_key(|r| r.height())
            .expect("nonempty")
    }

    /// `<v, coroot alpha_i>` for `v` in root coordinates.
    #[inline]
    pub fn pair_simple(&self, v: &[i64], i: usize) -> i64 {
        self.cartan[i].iter().zip(v).map(|(c, x)| c * x).sum()
    }

    fn form(&self, v: &[i64], w: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rank {
            if v[i] == 0 {
                continue;
            }
            let s: i64 = (0..self.rank).map(|j| self.cartan[i][j] * w[j]).sum();
            if s != 0 {
                acc += &self.symmetrizer[i] * rat(v[i] * s);
            }
        }
        acc
    }

    /// Invariant inner product of two root-lattice vectors.
    pub fn inner_product(&self, v: &[i64], w: &[i64]) -> Result<Rational> {
        check_dim(self.rank, v.len())?;
        check_dim(self.rank, w.len())?;
        Ok(self.form(v, w))
    }

    /// Inner product of rational vectors in root coordinates.
    pub fn inner_product_rational(&self, v: &[Rational], w: &[Rational]) -> Result<Rational> {
        check_dim(self.rank, v.len())?;
        check_dim(self.rank, w.len())?;
        let mut acc = Rational::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let c = self.cartan[i][j];
                if c != 0 {
                    acc += &self.symmetrizer[i] * rat(c) * &v[i] * &w[j];
                }
            }
        }
        Ok(acc)
    }

    /// Coroot of any root (positive or negative).
    pub fn coroot(&self, beta: &Root) -> Result<CorootVector> {
        let (k, positive) = self.locate(beta)?;
        let c = &self.coroots[k];
        Ok(if positive { c.clone() } else { c.negated() })
    }

    /// Coroots of the positive roots, parallel to [`Self::positive_roots`].
    pub fn positive_coroots(&self) -> &[CorootVector] {
        &self.coroots
    }

    /// `(beta, beta) / 2`; equals 1 exactly for long roots.
    pub fn half_length(&self, beta: &Root) -> Result<Rational> {
        let (k, _) = self.locate(beta)?;
        Ok(self.root_lengths[k].clone())
    }

    pub fn is_long(&self, beta: &Root) -> Result<bool> {
        Ok(self.half_length(beta)? == rat(1))
    }

    pub fn is_long_node(&self, i: usize) -> bool {
        self.symmetrizer[i] == rat(1)
    }

    /// Dynkin neighbors of node `i`.
    pub fn neighbors(&self, i: usize) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// Connected component of `start` in the Dynkin diagram restricted to `nodes`.
    pub fn component_of(&self, start: usize, nodes: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in self.neighbors(i) {
                if nodes.contains(&j) && seen.insert(j) {
                    queue.push_back(j);
                }
            }
        }
        seen
    }

    /// Root system on the induced Cartan submatrix. The returned table maps
    /// sub-system node `k` to ambient node `table[k]`.
    pub fn sub_system(&self, nodes: &BTreeSet<usize>) -> Result<(Arc<RootSystem>, Vec<usize>)> {
        for &i in nodes {
            self.check_node(i)?;
        }
        let table: Vec<usize> = nodes.iter().copied().collect();
        let cartan = table
            .iter()
            .map(|&i| table.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        Ok((RootSystem::from_cartan(cartan)?, table))
    }

    /// Simple root `alpha_i` written in the fundamental-weight basis.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::from_ints(&(0..self.rank).map(|j| self.cartan[j][i]).collect::<Vec<_>>())
    }

    /// A root-lattice vector written in the fundamental-weight basis.
    pub fn root_to_weight(&self, v: &[i64]) -> Weight {
        Weight::from_ints(&(0..self.rank).map(|j| self.pair_simple(v, j)).collect::<Vec<_>>())
    }

    /// Rational root coordinates of a weight (inverse Cartan matrix).
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Result<Vec<Rational>> {
        check_dim(self.rank, lambda.rank())?;
        let a: Vec<Vec<Rational>> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| rat(self.cartan[j][i])).collect())
            .collect();
        Ok(solve(&a, &lambda.coords).expect("Cartan matrix is invertible"))
    }

    /// Order of the Weyl group from the exponents, read off the height
    /// distribution of the positive roots.
    pub fn weyl_group_order(&self) -> u128 {
        let max_h = self.positive_roots.iter().map(Root::height).max().unwrap_or(0);
        let mut counts = vec![0i64; max_h as usize + 2];
        for r in &self.positive_roots {
            counts[r.height() as usize] += 1;
        }
        let mut order: u128 = 1;
        for k in 1..=max_h as usize {
            let mult = counts[k] - counts[k + 1];
            for _ in 0..mult {
                order *= k as u128 + 1;
            }
        }
        order
    }
}

fn components(cartan: &[Vec<i64>], nodes: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &s in nodes {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &j in nodes {
                if j != i && cartan[i][j] != 0 && seen.insert(j) {
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn symmetrize(cartan: &[Vec<i64>], comps: &[Vec<usize>]) -> Result<Vec<Rational>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for comp in comps {
        d[comp[0]] = Some(rat(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for &j in comp {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                let dj = di.clone() * rat_frac(cartan[i][j], cartan[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(prev) if *prev != dj => {
                        return Err(Error::InvalidCartan("not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let max = comp
            .iter()
            .map(|&i| d[i].clone().expect("visited"))
            .max()
            .expect("nonempty");
        for &i in comp {
            d[i] = Some(d[i].take().expect("visited") / &max);
        }
    }
    Ok(d.into_iter().map(|x| x.expect("all nodes visited")).collect())
}

/// Identify the Dynkin type of one connected component.
fn classify(cartan: &[Vec<i64>], d: &[Rational], comp: &[usize]) -> Result<SimpleType> {
    let r = comp.len();
    let bad = |why: &str| Error::InvalidCartan(why.to_string());
    let mut edges = Vec::new();
    let mut degree: HashMap<usize, usize> = comp.iter().map(|&i| (i, 0)).collect();
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            if cartan[i][j] != 0 {
                let mult = cartan[i][j] * cartan[j][i];
                if !(1..=3).contains(&mult) {
                    return Err(bad("edge multiplicity out of range"));
                }
                edges.push((i, j, mult));
                *degree.get_mut(&i).expect("node") += 1;
                *degree.get_mut(&j).expect("node") += 1;
            }
        }
    }
    if edges.len() + 1 != r {
        return Err(bad("Dynkin diagram is not a tree"));
    }
    if r == 1 {
        return SimpleType::new('A', 1);
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|i| degree[i] >= 3).collect();
    if branch.iter().any(|i| degree[i] > 3) || branch.len() > 1 {
        return Err(bad("unsupported branching"));
    }
    let multiple: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    if multiple.len() > 1 {
        return Err(bad("more than one multiple edge"));
    }
    if let Some(&&(i, j, mult)) = multiple.first() {
        if !branch.is_empty() {
            return Err(bad("multiple edge in a branched diagram"));
        }
        if mult == 3 {
            return if r == 2 { SimpleType::new('G', 2) } else { Err(bad("triple edge beyond rank 2")) };
        }
        if r == 2 {
            return SimpleType::new('B', 2);
        }
        let end = [i, j].into_iter().find(|k| degree[k] == 1);
        return match end {
            Some(e) => {
                let other = if e == i { j } else { i };
                let letter = if d[e] < d[other] { 'B' } else { 'C' };
                SimpleType::new(letter, r)
            }
            None if r == 4 => SimpleType::new('F', 4),
            None => Err(bad("double edge in the middle beyond rank 4")),
        };
    }
    let Some(&b) = branch.first() else {
        return SimpleType::new('A', r);
    };
    let mut arms: Vec<usize> = Vec::new();
    for &start in comp.iter().filter(|&&k| k != b && cartan[b][k] != 0) {
        let (mut prev, mut cur, mut len) = (b, start, 1);
        loop {
            let next = comp
                .iter()
                .copied()
                .find(|&k| k != prev && k != cur && cartan[cur][k] != 0);
            match next {
                Some(k) => {
                    prev = cur;
                    cur = k;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => SimpleType::new('D', r),
        [1, 2, 2] => SimpleType::new('E', 6),
        [1, 2, 3] => SimpleType::new('E', 7),
        [1, 2, 4] => SimpleType::new('E', 8),
        _ => Err(bad("branched diagram of infinite type")),
    }
}

/// Positive roots by closure from the simple roots: `beta + alpha_i` is a root
/// exactly when the `alpha_i`-string through `beta` extends upward, i.e.
/// `p - <beta, coroot alpha_i> > 0` with `p` the downward string length.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let pair = |v: &[i64], i: usize| -> i64 { cartan[i].iter().zip(v).map(|(c, x)| c * x).sum() };
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    known.extend(layer.iter().cloned());
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                loop {
                    let mut v = beta.clone();
                    v[i] -= p + 1;
                    if known.contains(&v) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));
    roots
}
