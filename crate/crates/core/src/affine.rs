//! The affine Weyl group `W_aff = W ⋉ Q^vee` acting at level zero on
//! monomials `q^n e^lambda`, and the quantum Bruhat graph on `W`.
//!
//! An element is stored as a pair `(w, beta)` meaning `w t_beta`. The affine
//! simple reflection is `s_0 = s_theta t_{-theta^vee}`, so that
//! `t_{-theta^vee} = s_theta s_0`.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::rootdata::{Coweight, RootSystem, Weight, WeylElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffineError {
    #[error("letter {0} is not an affine node")]
    BadLetter(usize),
    #[error("word {word:?} is not a quantum Bruhat path at {at}")]
    NotALoop { word: Vec<usize>, at: String },
    #[error("no quantum Bruhat path from {from} to {to}")]
    Unreachable { from: String, to: String },
}

pub type Result<T> = std::result::Result<T, AffineError>;

/// `w t_beta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub finite: WeylElement,
    pub translation: Coweight,
}

impl AffineElement {
    pub fn identity(rs: &RootSystem) -> Self {
        AffineElement { finite: rs.identity(), translation: Coweight::zero(rs.rank()) }
    }

    pub fn translation(rs: &RootSystem, beta: &Coweight) -> Self {
        AffineElement { finite: rs.identity(), translation: beta.clone() }
    }

    pub fn finite(rs: &RootSystem, w: &WeylElement) -> Self {
        AffineElement { finite: w.clone(), translation: Coweight::zero(rs.rank()) }
    }

    /// Simple reflection for an affine node `0..=rank`.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        if i == 0 {
            Ok(AffineElement { finite: rs.s_theta(), translation: -rs.theta_coroot() })
        } else if i <= rs.rank() {
            Ok(Self::finite(rs, &rs.simple_reflection(i)))
        } else {
            Err(AffineError::BadLetter(i))
        }
    }

    /// `(w1 t_b1)(w2 t_b2) = w1 w2 t_{w2^{-1} b1 + b2}`.
    pub fn compose(&self, rs: &RootSystem, other: &AffineElement) -> AffineElement {
        let w2inv = rs.inverse(&other.finite);
        AffineElement {
            finite: &self.finite * &other.finite,
            translation: &rs.weyl_act_coweight(&w2inv, &self.translation) + &other.translation,
        }
    }

    pub fn inverse(&self, rs: &RootSystem) -> AffineElement {
        // (w t_b)^{-1} = t_{-b} w^{-1} = w^{-1} t_{-w b}
        AffineElement {
            finite: rs.inverse(&self.finite),
            translation: -&rs.weyl_act_coweight(&self.finite, &self.translation),
        }
    }

    pub fn right_mul_simple(&self, rs: &RootSystem, i: usize) -> AffineElement {
        self.compose(rs, &Self::simple(rs, i).expect("valid affine node"))
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<AffineElement> {
        let mut x = Self::identity(rs);
        for &i in word {
            x = x.compose(rs, &Self::simple(rs, i)?);
        }
        Ok(x)
    }

    /// Level-zero action on `q^n e^lambda`.
    pub fn act(&self, rs: &RootSystem, n: i64, l: &Weight) -> (i64, Weight) {
        (n - self.translation.pair(l), rs.weyl_act(&self.finite, l))
    }

    /// Number of positive affine roots sent to negative ones.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots_weights()
            .iter()
            .map(|a| {
                let k = self.translation.pair(a);
                let neg = !rs.is_positive_root(&rs.weyl_act(&self.finite, a));
                if k >= 0 {
                    k as usize + neg as usize
                } else {
                    k.unsigned_abs() as usize - neg as usize
                }
            })
            .sum()
    }

    pub fn is_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.right_mul_simple(rs, i).length(rs) < self.length(rs)
    }

    /// A reduced word, built by peeling off the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = self.clone();
        let mut len = x.length(rs);
        while len > 0 {
            let (i, y, l) = (0..=rs.rank())
                .map(|i| {
                    let y = x.right_mul_simple(rs, i);
                    let l = y.length(rs);
                    (i, y, l)
                })
                .find(|(_, _, l)| *l < len)
                .expect("nontrivial element has a right descent");
            word.push(i);
            x = y;
            len = l;
        }
        word.reverse();
        word
    }

    /// Every reduced word of the element.
    pub fn all_reduced_words(&self, rs: &RootSystem) -> Vec<Vec<usize>> {
        let mut memo = HashMap::new();
        let mut out = all_words_rec(rs, self, &mut memo);
        out.sort();
        out
    }
}

fn all_words_rec(
    rs: &RootSystem,
    x: &AffineElement,
    memo: &mut HashMap<AffineElement, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(v) = memo.get(x) {
        return v.clone();
    }
    let len = x.length(rs);
    let out = if len == 0 {
        vec![vec![]]
    } else {
        let mut out = Vec::new();
        for i in 0..=rs.rank() {
            let y = x.right_mul_simple(rs, i);
            if y.length(rs) < len {
                for mut w in all_words_rec(rs, &y, memo) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out
    };
    memo.insert(x.clone(), out.clone());
    out
}

/// Affine elements of length at most `max_len`, by breadth-first search on the
/// Cayley graph. Returned with their BFS distance.
pub fn elements_up_to_length(rs: &RootSystem, max_len: usize) -> Vec<(AffineElement, usize)> {
    let id = AffineElement::identity(rs);
    let mut seen = HashSet::from([id.clone()]);
    let mut out = vec![(id.clone(), 0)];
    let mut queue = VecDeque::from([(id, 0usize)]);
    while let Some((x, d)) = queue.pop_front() {
        if d == max_len {
            continue;
        }
        for i in 0..=rs.rank() {
            let y = x.right_mul_simple(rs, i);
            if seen.insert(y.clone()) {
                out.push((y.clone(), d + 1));
                queue.push_back((y, d + 1));
            }
        }
    }
    out
}

/// `s_0(q^n e^lambda) = q^{n + <theta^vee, lambda>} e^{s_theta lambda}`.
pub fn s0_action(rs: &RootSystem, n: i64, l: &Weight) -> (i64, Weight) {
    (n + rs.theta_coroot().pair(l), rs.reflect_theta(l))
}

/// Reduced word of `t_beta`.
pub fn translation_word(rs: &RootSystem, beta: &Coweight) -> Vec<usize> {
    AffineElement::translation(rs, beta).reduced_word(rs)
}

/// An edge `w -> s̄_letter w` of the quantum Bruhat graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumCover {
    pub source: WeylElement,
    pub target: WeylElement,
    pub letter: usize,
}

/// The quantum Bruhat graph on `W`, with edges labelled by affine nodes.
#[derive(Debug, Clone)]
pub struct QuantumGraph {
    /// `edges[k]` lists `(letter, target index)` out of element `k`.
    edges: Vec<Vec<(usize, usize)>>,
    redges: Vec<Vec<(usize, usize)>>,
}

impl QuantumGraph {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.order();
        let stheta = rs.s_theta();
        let mut edges = vec![Vec::new(); n];
        let mut redges = vec![Vec::new(); n];
        for k in 0..n {
            let w = rs.element(k);
            let winv = rs.inverse(w);
            if !rs.is_positive_root(&winv.act(rs.theta())) {
                let t = rs.index_of(&(&stheta * w));
                edges[k].push((0, t));
            }
            for i in 1..=rs.rank() {
                let t = rs.left_mul_index(i, k);
                if rs.length_of_index(t) > rs.length_of_index(k) {
                    edges[k].push((i, t));
                }
            }
        }
        for (k, out) in edges.iter().enumerate() {
            for &(i, t) in out {
                redges[t].push((i, k));
            }
        }
        QuantumGraph { edges, redges }
    }

    pub fn covers(&self, rs: &RootSystem, w: &WeylElement) -> Vec<QuantumCover> {
        self.edges[rs.index_of(w)]
            .iter()
            .map(|&(letter, t)| QuantumCover {
                source: w.clone(),
                target: rs.element(t).clone(),
                letter,
            })
            .collect()
    }

    /// Whether `w -> s̄_i w` is an edge.
    pub fn is_cover(&self, rs: &RootSystem, i: usize, w: &WeylElement) -> bool {
        self.edges[rs.index_of(w)].iter().any(|&(l, _)| l == i)
    }

    pub fn target(&self, rs: &RootSystem, i: usize, w: &WeylElement) -> Option<WeylElement> {
        self.edges[rs.index_of(w)]
            .iter()
            .find(|&&(l, _)| l == i)
            .map(|&(_, t)| rs.element(t).clone())
    }

    /// All edges as `(source, letter, target)` element indices.
    pub fn edge_list(&self) -> Vec<(usize, usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(k, out)| out.iter().map(move |&(i, t)| (k, i, t)))
            .collect()
    }

    fn distances_to(&self, target: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.edges.len()];
        dist[target] = Some(0);
        let mut queue = VecDeque::from([target]);
        while let Some(k) = queue.pop_front() {
            let d = dist[k].unwrap();
            for &(_, s) in &self.redges[k] {
                if dist[s].is_none() {
                    dist[s] = Some(d + 1);
                    queue.push_back(s);
                }
            }
        }
        dist
    }

    /// Letters `(i_1, ..., i_l)` with `w = s̄_{i_1} ... s̄_{i_l} v`, each step an
    /// edge, of minimal length. For `v == w` the shortest nonempty loop.
    pub fn adapted_sequence(&self, rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> Result<Vec<usize>> {
        let (vi, wi) = (rs.index_of(v), rs.index_of(w));
        let dist = self.distances_to(wi);
        let unreachable = || AffineError::Unreachable { from: format!("{v:?}"), to: format!("{w:?}") };
        let mut path = Vec::new();
        let mut cur = vi;
        if vi == wi {
            // first step of the shortest loop, then a shortest path home
            let (letter, next) = self.edges[vi]
                .iter()
                .filter(|(_, t)| dist[*t].is_some())
                .min_by_key(|(l, t)| (dist[*t].unwrap(), *l))
                .copied()
                .ok_or_else(unreachable)?;
            path.push(letter);
            cur = next;
        }
        while cur != wi {
            let d = dist[cur].ok_or_else(unreachable)?;
            let &(letter, next) = self.edges[cur]
                .iter()
                .filter(|(_, t)| dist[*t] == Some(d - 1))
                .min_by_key(|(l, _)| *l)
                .expect("BFS distance decreases along some edge");
            path.push(letter);
            cur = next;
        }
        path.reverse();
        Ok(path)
    }

    /// All shortest nonempty loops at `w`, as letter words in operator order.
    pub fn minimal_loops(&self, rs: &RootSystem, w: &WeylElement) -> Vec<Vec<usize>> {
        let wi = rs.index_of(w);
        let dist = self.distances_to(wi);
        let best = self.edges[wi]
            .iter()
            .filter_map(|(_, t)| dist[*t])
            .min()
            .map(|d| d + 1);
        let Some(len) = best else { return vec![] };
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.loops_dfs(wi, wi, len, &dist, &mut path, &mut out);
        for p in out.iter_mut() {
            p.reverse();
        }
        out.sort();
        out
    }

    /// All loops at `w` with exactly `len` letters, in operator order.
    pub fn loops_of_length(&self, rs: &RootSystem, w: &WeylElement, len: usize) -> Vec<Vec<usize>> {
        let wi = rs.index_of(w);
        let dist = self.distances_to(wi);
        let mut out = Vec::new();
        let mut path = Vec::new();
        if len > 0 {
            self.loops_dfs(wi, wi, len, &dist, &mut path, &mut out);
        }
        for p in out.iter_mut() {
            p.reverse();
        }
        out.sort();
        out
    }

    fn loops_dfs(
        &self,
        cur: usize,
        home: usize,
        remaining: usize,
        dist: &[Option<usize>],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            if cur == home {
                out.push(path.clone());
            }
            return;
        }
        for &(letter, next) in &self.edges[cur] {
            if dist[next].is_some_and(|d| d < remaining) {
                path.push(letter);
                self.loops_dfs(next, home, remaining - 1, dist, path, out);
                path.pop();
            }
        }
    }

    /// The translation part of the lifted loop: the product of the affine
    /// simple reflections along `word` sends `w t_0` to `w t_beta`.
    pub fn loop_translation_weight(&self, rs: &RootSystem, word: &[usize], w: &WeylElement) -> Result<Coweight> {
        let not_loop = || AffineError::NotALoop { word: word.to_vec(), at: format!("{w:?}") };
        let mut cur = w.clone();
        for &i in word.iter().rev() {
            if i > rs.rank() {
                return Err(AffineError::BadLetter(i));
            }
            cur = self.target(rs, i, &cur).ok_or_else(not_loop)?;
        }
        if cur != *w {
            return Err(not_loop());
        }
        let lift = AffineElement::from_word(rs, word)?;
        let moved = lift.compose(rs, &AffineElement::finite(rs, w));
        debug_assert_eq!(moved.finite, *w);
        Ok(moved.translation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::new(label.parse().unwrap())
    }

    #[test]
    fn s0_on_monomials() {
        let a1 = rs("A1");
        assert_eq!(s0_action(&a1, 0, &Weight(vec![-1])), (-1, Weight(vec![1])));
        assert_eq!(s0_action(&a1, 0, &Weight(vec![1])), (1, Weight(vec![-1])));
        assert_eq!(s0_action(&a1, 4, &Weight(vec![0])), (4, Weight(vec![0])));
        let s0 = AffineElement::simple(&a1, 0).unwrap();
        assert_eq!(s0.act(&a1, 0, &Weight(vec![-1])), (-1, Weight(vec![1])));
    }

    #[test]
    fn translation_words_a1() {
        let a1 = rs("A1");
        assert_eq!(translation_word(&a1, &Coweight(vec![-1])), vec![1, 0]);
        assert_eq!(translation_word(&a1, &Coweight(vec![1])), vec![0, 1]);
        assert!(translation_word(&a1, &Coweight(vec![0])).is_empty());
        let s1s0 = AffineElement::from_word(&a1, &[1, 0]).unwrap();
        assert_eq!(s1s0, AffineElement::translation(&a1, &Coweight(vec![-1])));
    }

    #[test]
    fn length_formula_matches_bfs() {
        for label in ["A1", "A2", "C2", "G2", "B3"] {
            let r = rs(label);
            for (x, d) in elements_up_to_length(&r, 6) {
                assert_eq!(x.length(&r), d, "{label} {x:?}");
                assert_eq!(x.reduced_word(&r).len(), d);
                assert_eq!(AffineElement::from_word(&r, &x.reduced_word(&r)).unwrap(), x);
            }
        }
    }

    #[test]
    fn group_law() {
        let r = rs("C2");
        let els: Vec<_> = elements_up_to_length(&r, 3).into_iter().map(|p| p.0).collect();
        for a in els.iter().step_by(3) {
            assert_eq!(a.compose(&r, &a.inverse(&r)), AffineElement::identity(&r));
            for b in els.iter().step_by(5) {
                for c in els.iter().step_by(7) {
                    let l = a.compose(&r, b).compose(&r, c);
                    let rr = a.compose(&r, &b.compose(&r, c));
                    assert_eq!(l, rr);
                }
                let ab = a.compose(&r, b);
                assert_eq!(ab.finite, &a.finite * &b.finite);
            }
        }
    }

    #[test]
    fn covers_examples() {
        let a1 = rs("A1");
        let g = QuantumGraph::new(&a1);
        let e = a1.identity();
        let s1 = a1.simple_reflection(1);
        let c = g.covers(&a1, &e);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].letter, c[0].target.clone()), (1, s1.clone()));
        let c = g.covers(&a1, &s1);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].letter, c[0].target.clone()), (0, e.clone()));

        let a2 = rs("A2");
        let g = QuantumGraph::new(&a2);
        let w0 = a2.longest_element();
        let c = g.covers(&a2, &w0);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].letter, 0);
        assert_eq!(c[0].target, &a2.s_theta() * &w0);
    }

    #[test]
    fn adapted_sequences() {
        let a1 = rs("A1");
        let g = QuantumGraph::new(&a1);
        let e = a1.identity();
        let s1 = a1.simple_reflection(1);
        assert_eq!(g.adapted_sequence(&a1, &e, &s1).unwrap(), vec![1]);
        assert_eq!(g.adapted_sequence(&a1, &e, &e).unwrap(), vec![0, 1]);
        let a2 = rs("A2");
        let g = QuantumGraph::new(&a2);
        let w0 = a2.longest_element();
        let word = g.adapted_sequence(&a2, &a2.identity(), &w0).unwrap();
        assert_eq!(word.len(), 3);
        assert!(word.iter().all(|&i| i != 0));
    }

    #[test]
    fn loop_translations() {
        let a1 = rs("A1");
        let g = QuantumGraph::new(&a1);
        let e = a1.identity();
        assert_eq!(g.loop_translation_weight(&a1, &[0, 1], &e).unwrap(), Coweight(vec![1]));
        assert_eq!(g.loop_translation_weight(&a1, &[], &e).unwrap(), Coweight(vec![0]));
        assert_eq!(g.loop_translation_weight(&a1, &[0, 1, 0, 1], &e).unwrap(), Coweight(vec![2]));
        assert!(g.loop_translation_weight(&a1, &[1], &e).is_err());
        assert!(g.loop_translation_weight(&a1, &[1, 0], &e).is_err());
        let s1 = a1.simple_reflection(1);
        assert!(g.loop_translation_weight(&a1, &[1, 0], &s1).is_ok());
        assert_eq!(g.minimal_loops(&a1, &e), vec![vec![0, 1]]);
    }
}
