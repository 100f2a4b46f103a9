//! Brute-force oracles shared by the integration suites. Everything here is
//! built from the Cartan matrix alone, without the library's root tables.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

pub type Mat = Vec<Vec<i64>>;

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// `s_i` on root coordinates: `alpha_j -> alpha_j - C[i][j] alpha_i`.
pub fn simple_matrix(cartan: &Mat, i: usize) -> Mat {
    let n = cartan.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let id = i64::from(r == c);
                    if r == i {
                        id - cartan[i][c]
                    } else {
                        id
                    }
                })
                .collect()
        })
        .collect()
}

/// The whole group by breadth-first search on the Cayley graph; the BFS
/// depth of an element is its length.
pub struct BruteGroup {
    pub elems: Vec<Mat>,
    pub words: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
    pub index: HashMap<Mat, usize>,
}

impl BruteGroup {
    pub fn new(cartan: &Mat) -> Self {
        let n = cartan.len();
        let gens: Vec<Mat> = (0..n).map(|i| simple_matrix(cartan, i)).collect();
        let id: Mat = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
        let mut g = BruteGroup { elems: vec![], words: vec![], lengths: vec![], index: HashMap::new() };
        g.push(id, vec![], 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in gens.iter().enumerate() {
                let m = mat_mul(&g.elems[k], s);
                if !g.index.contains_key(&m) {
                    let mut w = g.words[k].clone();
                    w.push(i);
                    let l = g.lengths[k] + 1;
                    queue.push_back(g.push(m, w, l));
                }
            }
        }
        g
    }

    fn push(&mut self, m: Mat, w: Vec<usize>, l: usize) -> usize {
        let k = self.elems.len();
        self.index.insert(m.clone(), k);
        self.elems.push(m);
        self.words.push(w);
        self.lengths.push(l);
        k
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// All reflections, as conjugates `w s_i w^{-1}`.
    pub fn reflections(&self, cartan: &Mat) -> Vec<usize> {
        let n = cartan.len();
        let mut out: Vec<usize> = Vec::new();
        for k in 0..self.len() {
            let inv = self.inverse(k);
            for i in 0..n {
                let t = mat_mul(&mat_mul(&self.elems[k], &simple_matrix(cartan, i)), &self.elems[inv]);
                let idx = self.index[&t];
                if !out.contains(&idx) {
                    out.push(idx);
                }
            }
        }
        out
    }

    pub fn inverse(&self, k: usize) -> usize {
        (0..self.len())
            .find(|&j| {
                let p = mat_mul(&self.elems[k], &self.elems[j]);
                p.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
            })
            .expect("group element has an inverse")
    }

    /// Transitive closure of `u -> u t` over reflections `t` with
    /// `l(u t) = l(u) + 1`. `leq[u][w]` is the Bruhat order.
    pub fn bruhat_closure(&self, cartan: &Mat) -> Vec<Vec<bool>> {
        let n = self.len();
        let refl = self.reflections(cartan);
        let mut up: Vec<Vec<usize>> = vec![vec![]; n];
        for u in 0..n {
            for &t in &refl {
                let v = self.index[&mat_mul(&self.elems[u], &self.elems[t])];
                if self.lengths[v] == self.lengths[u] + 1 {
                    up[u].push(v);
                }
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for u in 0..n {
            let mut queue = VecDeque::from([u]);
            leq[u][u] = true;
            while let Some(x) = queue.pop_front() {
                for &y in &up[x] {
                    if !leq[u][y] {
                        leq[u][y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        leq
    }
}
