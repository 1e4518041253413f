//! Finite root systems of rank at most four: Cartan data, positive roots and
//! coroots, the weight and coroot lattices, and a fully enumerated Weyl group.
//!
//! Weights are stored in fundamental-weight coordinates, roots in
//! simple-root coordinates and coweights in simple-coroot coordinates, so that
//! every pairing is an integer dot product. Simple reflections are addressed
//! by their node label `1..=rank`; label `0` is reserved for the affine node.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unsupported root system {0}")]
    Unsupported(String),
    #[error("cannot parse root system label {0:?}")]
    BadLabel(String),
    #[error("vector of length {found} does not match rank {rank}")]
    RankMismatch { rank: usize, found: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("node {0} is not a simple reflection of this root system")]
    BadNode(usize),
}

pub type Result<T> = std::result::Result<T, RootDataError>;

/// The Cartan-Killing type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
    G,
}

/// A supported Cartan type, e.g. `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=4).contains(&rank),
            Family::B | Family::C => (2..=4).contains(&rank),
            Family::D => rank == 4,
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        let ty = CartanType { family, rank };
        if ok {
            Ok(ty)
        } else {
            Err(RootDataError::Unsupported(ty.to_string()))
        }
    }

    /// Cartan matrix with `cartan[i][j] = <alpha_i^vee, alpha_j>` (Bourbaki numbering,
    /// G2 with the first simple root short).
    fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => {
                for i in 0..r - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 0..r - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(r - 2, r - 1, -1, -2);
            }
            Family::C => {
                for i in 0..r - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(r - 2, r - 1, -2, -1);
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(r - 3, r - 1, -1, -1);
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('F') => Family::F,
            Some('G') => Family::G,
            Some('E') => return Err(RootDataError::Unsupported(s.to_string())),
            _ => return Err(RootDataError::BadLabel(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::BadLabel(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A weight `sum_i c_i varpi_i` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

/// A coweight `sum_i b_i alpha_i^vee` in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coweight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `<alpha_i^vee, self>` for the simple coroot at `node`.
    pub fn coord(&self, node: usize) -> i64 {
        self.0[node - 1]
    }

    /// Sum of the coordinates, i.e. `<sum_i alpha_i^vee, self>`.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The natural pairing with a weight.
    pub fn pair(&self, w: &Weight) -> i64 {
        debug_assert_eq!(self.0.len(), w.0.len());
        self.0.iter().zip(&w.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|c| c * k).collect())
    }
}

macro_rules! lattice_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    };
}

lattice_ops!(Weight);
lattice_ops!(Coweight);

/// A Weyl group element, identified by its matrix on the fundamental-weight
/// basis: column `j` holds the coordinates of `w(varpi_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut mat = vec![0; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        WeylElement { rank, mat }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn act(&self, w: &Weight) -> Weight {
        let r = self.rank;
        Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.mat[i * r + j] * w.0[j]).sum())
                .collect(),
        )
    }

    /// Action on coweights through the contragredient representation.
    /// Needs the inverse element, which the caller supplies.
    fn act_coweight_with_inverse(inv: &WeylElement, b: &Coweight) -> Coweight {
        let r = inv.rank;
        // (w b)_j = sum_i (M_{w^{-1}})_{ij} b_i
        Coweight(
            (0..r)
                .map(|j| (0..r).map(|i| inv.mat[i * r + j] * b.0[i]).sum())
                .collect(),
        )
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank;
        let mut mat = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                mat[i * r + j] = (0..r).map(|k| self.mat[i * r + k] * other.mat[k * r + j]).sum();
            }
        }
        WeylElement { rank: r, mat }
    }

    /// Images of the fundamental weights, the canonical form of the element.
    pub fn fundamental_images(&self) -> Vec<Weight> {
        (1..=self.rank)
            .map(|j| self.act(&Weight::fundamental(self.rank, j)))
            .collect()
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.compose(rhs)
    }
}

#[derive(Debug, Clone)]
struct WeylTable {
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    /// `left[i-1][k]` is the index of `s_i * elements[k]`.
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    length: Vec<usize>,
    words: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

/// Root datum together with its enumerated Weyl group.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    pos_roots: Vec<Vec<i64>>,
    pos_roots_wt: Vec<Weight>,
    pos_coroots: Vec<Coweight>,
    pos_root_lookup: HashMap<Weight, usize>,
    highest: usize,
    /// Inverse Cartan matrix scaled by `det`, for weight-to-root conversion.
    inv_cartan: Vec<Vec<i64>>,
    det: i64,
    table: WeylTable,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let r = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer = symmetrizer(&cartan);

        // Positive roots by closure of the simple roots under simple reflections.
        let mut pos_roots: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect();
        let mut frontier = pos_roots.clone();
        while let Some(root) = frontier.pop() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * root[j]).sum();
                let mut image = root.clone();
                image[i] -= pairing;
                if image.iter().all(|&c| c >= 0) && !pos_roots.contains(&image) {
                    pos_roots.push(image.clone());
                    frontier.push(image);
                }
            }
        }
        pos_roots.sort_by_key(|a| (a.iter().sum::<i64>(), std::cmp::Reverse(a.clone())));

        let to_weight = |a: &[i64]| Weight((0..r).map(|i| (0..r).map(|j| cartan[i][j] * a[j]).sum()).collect());
        let pos_roots_wt: Vec<Weight> = pos_roots.iter().map(|a| to_weight(a)).collect();
        let pos_coroots: Vec<Coweight> = pos_roots
            .iter()
            .map(|a| {
                let norm: i64 = (0..r)
                    .flat_map(|i| (0..r).map(move |j| (i, j)))
                    .map(|(i, j)| a[i] * a[j] * symmetrizer[i] * cartan[i][j])
                    .sum();
                let d_alpha = norm / 2;
                Coweight((0..r).map(|i| a[i] * symmetrizer[i] / d_alpha).collect())
            })
            .collect();
        let pos_root_lookup = pos_roots_wt
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let highest = pos_roots.len() - 1;
        let (inv_cartan, det) = integer_inverse(&cartan);

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            pos_roots,
            pos_roots_wt,
            pos_coroots,
            pos_root_lookup,
            highest,
            inv_cartan,
            det,
            table: WeylTable {
                elements: vec![],
                index: HashMap::new(),
                left: vec![],
                right: vec![],
                length: vec![],
                words: vec![],
                inverse: vec![],
            },
        };
        rs.table = rs.enumerate_table();
        rs
    }

    /// Builds the root system for a family and rank.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared lengths of the simple roots, normalised so the short ones are 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// Positive roots in fundamental-weight coordinates (same order).
    pub fn positive_roots_weights(&self) -> &[Weight] {
        &self.pos_roots_wt
    }

    /// Positive coroots in simple-coroot coordinates (same order).
    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.pos_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }

    /// Highest root in simple-root coordinates.
    pub fn theta_root(&self) -> &[i64] {
        &self.pos_roots[self.highest]
    }

    /// Highest root as a weight.
    pub fn theta(&self) -> &Weight {
        &self.pos_roots_wt[self.highest]
    }

    /// Coroot of the highest root.
    pub fn theta_coroot(&self) -> &Coweight {
        &self.pos_coroots[self.highest]
    }

    pub fn simple_root(&self, node: usize) -> Weight {
        self.root_to_weight(&unit(self.rank(), node))
    }

    pub fn simple_coroot(&self, node: usize) -> Coweight {
        Coweight(unit(self.rank(), node))
    }

    pub fn root_to_weight(&self, a: &[i64]) -> Weight {
        let r = self.rank();
        Weight((0..r).map(|i| (0..r).map(|j| self.cartan[i][j] * a[j]).sum()).collect())
    }

    /// Coordinates in the simple-root basis, if the weight lies in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<Vec<i64>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let s: i64 = (0..r).map(|j| self.inv_cartan[i][j] * w.0[j]).sum();
            if s % self.det != 0 {
                return None;
            }
            out.push(s / self.det);
        }
        Some(out)
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.weight_to_root(w).is_some()
    }

    /// `<alpha^vee, lambda>`-weighted height: `sum_{alpha > 0} <alpha^vee, w>`.
    /// For differences in the root lattice this is twice the usual height.
    pub fn rho_vee_pairing2(&self, w: &Weight) -> i64 {
        self.pos_coroots.iter().map(|c| c.pair(w)).sum()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.pos_root_lookup.contains_key(w)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.is_positive_root(w) || self.is_positive_root(&-w)
    }

    /// The pairing `Q^vee x Lambda -> Z`, checked for matching ranks.
    pub fn pairing(&self, b: &Coweight, w: &Weight) -> Result<i64> {
        self.check_weight(w)?;
        if b.0.len() != self.rank() {
            return Err(RootDataError::RankMismatch { rank: self.rank(), found: b.0.len() });
        }
        Ok(b.pair(w))
    }

    /// `<beta, alpha>` for a coweight and a weight-coordinates root.
    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(RootDataError::RankMismatch { rank: self.rank(), found: w.0.len() });
        }
        Ok(())
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            Err(RootDataError::BadNode(node))
        } else {
            Ok(())
        }
    }

    /// `s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i`.
    pub fn reflect(&self, node: usize, w: &Weight) -> Weight {
        let k = w.coord(node);
        let r = self.rank();
        Weight((0..r).map(|j| w.0[j] - k * self.cartan[j][node - 1]).collect())
    }

    /// `s_i(beta) = beta - <beta, alpha_i> alpha_i^vee`.
    pub fn reflect_coweight(&self, node: usize, b: &Coweight) -> Coweight {
        let k = b.pair(&self.simple_root(node));
        let mut out = b.clone();
        out.0[node - 1] -= k;
        out
    }

    /// `s_theta(lambda) = lambda - <theta^vee, lambda> theta`.
    pub fn reflect_theta(&self, w: &Weight) -> Weight {
        let k = self.theta_coroot().pair(w);
        w - &self.theta().scaled(k)
    }

    pub fn reflect_theta_coweight(&self, b: &Coweight) -> Coweight {
        let k = b.pair(self.theta());
        b - &self.theta_coroot().scaled(k)
    }

    pub fn simple_reflection(&self, node: usize) -> WeylElement {
        let idx = self.table.left[node - 1][0];
        self.table.elements[idx].clone()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// Reflection in the highest root.
    pub fn s_theta(&self) -> WeylElement {
        let r = self.rank();
        let cols: Vec<Weight> = (1..=r).map(|j| self.reflect_theta(&Weight::fundamental(r, j))).collect();
        let mut mat = vec![0; r * r];
        for (j, c) in cols.iter().enumerate() {
            for i in 0..r {
                mat[i * r + j] = c.0[i];
            }
        }
        WeylElement { rank: r, mat }
    }

    pub fn weyl_act(&self, w: &WeylElement, l: &Weight) -> Weight {
        w.act(l)
    }

    pub fn weyl_act_coweight(&self, w: &WeylElement, b: &Coweight) -> Coweight {
        WeylElement::act_coweight_with_inverse(&self.inverse(w), b)
    }

    /// Multiplies out a word of simple reflections (letters `1..=rank`).
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut idx = 0;
        for &i in word.iter().rev() {
            self.check_node(i)?;
            idx = self.table.left[i - 1][idx];
        }
        Ok(self.table.elements[idx].clone())
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.table.index[w]
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.table.elements[idx]
    }

    pub fn order(&self) -> usize {
        self.table.elements.len()
    }

    /// All elements, in breadth-first order (nondecreasing length).
    pub fn elements(&self) -> &[WeylElement] {
        &self.table.elements
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.table.length[self.index_of(w)]
    }

    pub fn length_of_index(&self, idx: usize) -> usize {
        self.table.length[idx]
    }

    /// Inversion count `|{alpha > 0 : w alpha < 0}|`, computed directly.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.pos_roots_wt
            .iter()
            .filter(|a| !self.is_positive_root(&w.act(a)))
            .count()
    }

    /// A reduced word `w = s_{i_1} ... s_{i_l}`, lexicographically first among
    /// those found by breadth-first search.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        self.table.words[self.index_of(w)].clone()
    }

    /// `"s1 s2"`, or `"e"` for the identity.
    pub fn reduced_word_string(&self, w: &WeylElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.table.elements[self.table.inverse[self.index_of(w)]].clone()
    }

    pub fn left_mul_index(&self, node: usize, idx: usize) -> usize {
        self.table.left[node - 1][idx]
    }

    pub fn right_mul_index(&self, idx: usize, node: usize) -> usize {
        self.table.right[node - 1][idx]
    }

    pub fn longest_element(&self) -> WeylElement {
        let idx = (0..self.order()).max_by_key(|&k| self.table.length[k]).unwrap();
        self.table.elements[idx].clone()
    }

    pub fn enumerate_weyl(&self) -> Vec<WeylElement> {
        self.table.elements.clone()
    }

    /// Nodes fixing `lambda`; they generate the stabilizer `W_lambda`.
    pub fn stabilizer_nodes(&self, l: &Weight) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| l.coord(i) == 0).collect()
    }

    /// Minimal-length representatives of `W / W_lambda`, sorted by length.
    pub fn minimal_coset_reps(&self, l: &Weight) -> Result<Vec<WeylElement>> {
        self.check_weight(l)?;
        if !l.is_dominant() {
            return Err(RootDataError::NotDominant(l.clone()));
        }
        let fixed = self.stabilizer_nodes(l);
        Ok((0..self.order())
            .filter(|&k| {
                fixed
                    .iter()
                    .all(|&j| self.table.length[self.table.right[j - 1][k]] > self.table.length[k])
            })
            .map(|k| self.table.elements[k].clone())
            .collect())
    }

    pub fn is_minimal_coset_rep(&self, w: &WeylElement, l: &Weight) -> bool {
        let k = self.index_of(w);
        self.stabilizer_nodes(l)
            .iter()
            .all(|&j| self.table.length[self.table.right[j - 1][k]] > self.table.length[k])
    }

    /// The minimal-length `v` with `v lambda = w lambda`.
    pub fn minimal_rep_of(&self, w: &WeylElement, l: &Weight) -> WeylElement {
        let (_, v) = self.dominant_conjugate(&w.act(l));
        v
    }

    /// Writes `nu = v nu^+` with `nu^+` dominant and `v` of minimal length.
    pub fn dominant_conjugate(&self, nu: &Weight) -> (Weight, WeylElement) {
        let mut cur = nu.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..=self.rank()).find(|&i| cur.coord(i) < 0) {
            cur = self.reflect(i, &cur);
            word.push(i);
        }
        let v = self.element_from_word(&word).expect("valid nodes");
        (cur, v)
    }

    /// Bruhat order test `u <= v` via the lifting property.
    pub fn bruhat_le(&self, u: &WeylElement, v: &WeylElement) -> bool {
        self.bruhat_le_idx(self.index_of(u), self.index_of(v))
    }

    fn bruhat_le_idx(&self, u: usize, v: usize) -> bool {
        let t = &self.table;
        if t.length[v] == 0 {
            return t.length[u] == 0;
        }
        if t.length[u] > t.length[v] {
            return false;
        }
        let s = (0..self.rank())
            .find(|&i| t.length[t.left[i][v]] < t.length[v])
            .expect("non-identity element has a left descent");
        let sv = t.left[s][v];
        let su = t.left[s][u];
        if t.length[su] < t.length[u] {
            self.bruhat_le_idx(su, sv)
        } else {
            self.bruhat_le_idx(u, sv)
        }
    }

    /// Dominant weights `mu <= lambda` in dominance order (same coset of the root lattice).
    pub fn dominant_weights_below(&self, l: &Weight) -> Vec<Weight> {
        let mut found = vec![l.clone()];
        let mut stack = vec![l.clone()];
        while let Some(mu) = stack.pop() {
            for a in &self.pos_roots_wt {
                let nu = &mu - a;
                if nu.is_dominant() && !found.contains(&nu) {
                    found.push(nu.clone());
                    stack.push(nu);
                }
            }
        }
        found.sort_by_key(|w| (std::cmp::Reverse(self.rho_vee_pairing2(w)), w.clone()));
        found
    }

    /// The Weyl orbit of a weight, sorted.
    pub fn orbit(&self, l: &Weight) -> Vec<Weight> {
        let (dom, _) = self.dominant_conjugate(l);
        let mut out: Vec<Weight> = self
            .minimal_coset_reps(&dom)
            .expect("dominant")
            .iter()
            .map(|w| w.act(&dom))
            .collect();
        out.sort();
        out
    }

    /// Weights of the convex hull of `W lambda` congruent to `lambda` modulo roots.
    pub fn saturated_weights(&self, l: &Weight) -> Vec<Weight> {
        let mut out: Vec<Weight> = self
            .dominant_weights_below(l)
            .iter()
            .flat_map(|mu| self.orbit(mu))
            .collect();
        out.sort();
        out
    }

    fn enumerate_table(&self) -> WeylTable {
        let r = self.rank();
        let gens: Vec<WeylElement> = (1..=r)
            .map(|i| {
                let mut mat = vec![0; r * r];
                for j in 1..=r {
                    let img = self.reflect(i, &Weight::fundamental(r, j));
                    for k in 0..r {
                        mat[k * r + (j - 1)] = img.0[k];
                    }
                }
                WeylElement { rank: r, mat }
            })
            .collect();
        let id = WeylElement::identity(r);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut length = vec![0usize];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let next = g.compose(&elements[k]);
                if !index.contains_key(&next) {
                    let n = elements.len();
                    index.insert(next.clone(), n);
                    elements.push(next);
                    length.push(length[k] + 1);
                    let mut w = vec![i + 1];
                    w.extend_from_slice(&words[k]);
                    words.push(w);
                    queue.push_back(n);
                }
            }
        }
        let left: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| elements.iter().map(|e| index[&g.compose(e)]).collect())
            .collect();
        let right: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| elements.iter().map(|e| index[&e.compose(g)]).collect())
            .collect();
        let id = WeylElement::identity(r);
        let inverse = elements
            .iter()
            .map(|e| {
                // reversing the reduced word gives the inverse
                let k = index[e];
                let mut idx = 0;
                for &i in &words[k] {
                    idx = left[i - 1][idx];
                }
                debug_assert!(elements[idx].compose(e) == id);
                idx
            })
            .collect();
        WeylTable { elements, index, left, right, length, words, inverse }
    }
}

fn unit(rank: usize, node: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[node - 1] = 1;
    v
}

/// Integers `d_i` with `d_i a_ij = d_j a_ji`, smallest equal to 1.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    // rational propagation along the (connected) Dynkin diagram
    let mut num = vec![0i64; r];
    let mut den = vec![1i64; r];
    num[0] = 1;
    let mut done = vec![false; r];
    done[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if !done[j] && a[i][j] != 0 {
                // d_j = d_i * a_ij / a_ji
                num[j] = num[i] * a[i][j];
                den[j] = den[i] * a[j][i];
                let g = num_integer::gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                done[j] = true;
                stack.push(j);
            }
        }
    }
    let l = den.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d));
    let d: Vec<i64> = (0..r).map(|i| num[i] * (l / den[i])).collect();
    let g = d.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    d.iter().map(|x| x / g).collect()
}

/// Adjugate and determinant of a small integer matrix.
fn integer_inverse(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let r = a.len();
    let det = determinant(a);
    let mut adj = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            let minor: Vec<Vec<i64>> = (0..r)
                .filter(|&k| k != j)
                .map(|k| (0..r).filter(|&l| l != i).map(|l| a[k][l]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * determinant(&minor);
        }
    }
    (adj, det)
}

fn determinant(a: &[Vec<i64>]) -> i64 {
    let r = a.len();
    if r == 0 {
        return 1;
    }
    if r == 1 {
        return a[0][0];
    }
    (0..r)
        .map(|j| {
            let minor: Vec<Vec<i64>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(l, _)| l != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * determinant(&minor)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::new(label.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (label, n, w) in [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("B2", 4, 8),
            ("C2", 4, 8),
            ("B3", 9, 48),
            ("C3", 9, 48),
            ("D4", 12, 192),
            ("G2", 6, 12),
            ("F4", 24, 1152),
        ] {
            let r = rs(label);
            assert_eq!(r.num_positive_roots(), n, "{label}");
            assert_eq!(r.order(), w, "{label}");
            assert_eq!(r.length(&r.longest_element()), n, "{label}");
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A1").theta_root(), &[1]);
        assert_eq!(rs("A1").theta_coroot(), &Coweight(vec![1]));
        assert_eq!(rs("A2").theta_root(), &[1, 1]);
        let g2 = rs("G2");
        assert_eq!(g2.theta_root(), &[3, 2]);
        assert_eq!(g2.theta_coroot(), &Coweight(vec![1, 2]));
        assert_eq!(g2.theta(), &Weight(vec![0, 1]));
        // theta is the unique maximal positive root
        for r in ["A3", "B3", "C3", "F4", "D4"] {
            let r = rs(r);
            let th = r.theta_root().to_vec();
            for a in r.positive_roots() {
                assert!(a.iter().zip(&th).all(|(x, y)| x <= y));
            }
        }
    }

    #[test]
    fn cartan_invariants() {
        for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"] {
            let r = rs(label);
            for (i, row) in r.cartan().iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(x, 2);
                    } else {
                        assert!(x <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.pairing(&Coweight(vec![1, 0]), &Weight(vec![1, 0])).unwrap(), 1);
        assert_eq!(a2.simple_coroot(1).pair(&a2.simple_root(2)), -1);
        for label in ["A2", "B2", "G2", "C3"] {
            let r = rs(label);
            assert_eq!(r.theta_coroot().pair(r.theta()), 2);
        }
        assert!(a2.pairing(&Coweight(vec![1]), &Weight(vec![1, 0])).is_err());
    }

    #[test]
    fn reflection_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.reflect(1, &Weight(vec![1])), Weight(vec![-1]));
        let a2 = rs("A2");
        assert_eq!(a2.reflect(1, &Weight(vec![1, 0])), Weight(vec![-1, 1]));
        for w in a2.elements() {
            assert!(w.act(&Weight::zero(2)).is_zero());
        }
    }

    #[test]
    fn coset_reps() {
        let a1 = rs("A1");
        assert_eq!(a1.minimal_coset_reps(&Weight(vec![1])).unwrap().len(), 2);
        let a2 = rs("A2");
        let reps = a2.minimal_coset_reps(&Weight(vec![1, 0])).unwrap();
        let words: Vec<Vec<usize>> = reps.iter().map(|w| a2.reduced_word(w)).collect();
        assert_eq!(words, vec![vec![], vec![1], vec![2, 1]]);
        assert_eq!(a2.minimal_coset_reps(&Weight(vec![0, 0])).unwrap().len(), 1);
        assert!(a2.minimal_coset_reps(&Weight(vec![-1, 0])).is_err());
        let c3 = rs("C3");
        let l = Weight(vec![0, 1, 0]);
        let reps = c3.minimal_coset_reps(&l).unwrap();
        // |W^lambda| * |W_lambda| = |W|, W_lambda = A1 x A1 here
        assert_eq!(reps.len() * 4, c3.order());
    }

    #[test]
    fn lengths_match_inversions() {
        for label in ["A3", "B3", "G2"] {
            let r = rs(label);
            for w in r.elements() {
                assert_eq!(r.length(w), r.inversion_count(w));
                assert_eq!(r.element_from_word(&r.reduced_word(w)).unwrap(), *w);
            }
        }
    }

    #[test]
    fn coweight_action_preserves_pairing() {
        let r = rs("B3");
        let b = Coweight(vec![1, -2, 3]);
        let l = Weight(vec![2, 1, -1]);
        for w in r.elements().iter().step_by(5) {
            assert_eq!(r.weyl_act_coweight(w, &b).pair(&w.act(&l)), b.pair(&l));
        }
    }

    #[test]
    fn bruhat_order_small() {
        let a2 = rs("A2");
        let e = a2.identity();
        let w0 = a2.longest_element();
        for w in a2.elements() {
            assert!(a2.bruhat_le(&e, w));
            assert!(a2.bruhat_le(w, &w0));
        }
        let s1 = a2.simple_reflection(1);
        let s2 = a2.simple_reflection(2);
        assert!(!a2.bruhat_le(&s1, &s2));
        assert!(a2.bruhat_le(&s1, &(&s2 * &s1)));
    }

    #[test]
    fn dominant_conjugates() {
        let a2 = rs("A2");
        let (d, v) = a2.dominant_conjugate(&Weight(vec![0, -1]));
        assert_eq!(d, Weight(vec![1, 0]));
        assert_eq!(v.act(&d), Weight(vec![0, -1]));
        assert_eq!(a2.length(&v), 2);
        let below = a2.dominant_weights_below(&Weight(vec![2, 0]));
        assert_eq!(below, vec![Weight(vec![2, 0]), Weight(vec![0, 1])]);
        assert_eq!(a2.saturated_weights(&Weight(vec![1, 1])).len(), 7);
    }

    #[test]
    fn root_lattice_conversion() {
        let g2 = rs("G2");
        assert_eq!(g2.weight_to_root(g2.theta()).unwrap(), vec![3, 2]);
        let a2 = rs("A2");
        assert!(a2.weight_to_root(&Weight(vec![1, 0])).is_none());
    }

    #[test]
    fn parse_labels() {
        assert!("E6".parse::<CartanType>().is_err());
        assert!("A9".parse::<CartanType>().is_err());
        assert!("x2".parse::<CartanType>().is_err());
        assert_eq!("g2".parse::<CartanType>().unwrap().to_string(), "G2");
    }
}
