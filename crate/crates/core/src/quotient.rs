//! The quotient `W(I,J,K)` and its order `≤_O`.
//!
//! For disjoint, pairwise disconnected `I, J, K` and a diagram isomorphism
//! `*: I → J`, cosets are `[w] = w·W_K·W_{I,J}` with
//! `W_{I,J} = {x·x* : x ∈ W_I}`. Each coset meets `W^{J∪K}` in exactly one
//! element, which is used as its representative.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{build_root_system, Family, RootSystem};
use crate::weyl::{enumerate_min_coset_reps, enumerate_parabolic, word_string, ParabolicSubset, WeylElement};

/// The data `(I, J, K, *)` defining a quotient `W(I,J,K)`.
#[derive(Clone)]
pub struct IJKDatum {
    system: Arc<RootSystem>,
    i: ParabolicSubset,
    j: ParabolicSubset,
    k: ParabolicSubset,
    star: HashMap<usize, usize>,
    jk: ParabolicSubset,
    ijk: ParabolicSubset,
    /// Pairs `(x, x·x*)` for `x ∈ W_I`.
    diagonal: Vec<(WeylElement, WeylElement)>,
    wk: Vec<WeylElement>,
}

impl std::fmt::Debug for IJKDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut star: Vec<_> = self.star.iter().collect();
        star.sort();
        f.debug_struct("IJKDatum")
            .field("system", &self.system.label())
            .field("I", &self.i.indices())
            .field("J", &self.j.indices())
            .field("K", &self.k.indices())
            .field("star", &star)
            .finish()
    }
}

impl IJKDatum {
    /// Validates and precomputes the datum. `star` lists pairs `(s, s*)`.
    pub fn new(
        system: &Arc<RootSystem>,
        i: ParabolicSubset,
        j: ParabolicSubset,
        k: ParabolicSubset,
        star: &[(usize, usize)],
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidDatum(msg));
        for part in [&i, &j, &k] {
            part.check(system)?;
        }
        let parts = [("I", &i), ("J", &j), ("K", &k)];
        for (a, (na, pa)) in parts.iter().enumerate() {
            for (nb, pb) in &parts[a + 1..] {
                for &s in pa.indices() {
                    if pb.contains(s) {
                        return invalid(format!("{na} and {nb} share index {s}"));
                    }
                    for &t in pb.indices() {
                        if system.cartan(s - 1, t - 1) != 0 {
                            return invalid(format!("{na} and {nb} are joined by the bond s{s}-s{t}"));
                        }
                    }
                }
            }
        }
        let mut map = HashMap::new();
        let mut image = HashSet::new();
        for &(s, t) in star {
            if !i.contains(s) {
                return invalid(format!("star is defined on s{s}, which is not in I"));
            }
            if !j.contains(t) {
                return invalid(format!("star sends s{s} to s{t}, which is not in J"));
            }
            if map.insert(s, t).is_some() || !image.insert(t) {
                return invalid("star is not a bijection".into());
            }
        }
        if map.len() != i.len() || image.len() != j.len() {
            return invalid("star must be a bijection from I onto J".into());
        }
        let datum = system.datum();
        for &s in i.indices() {
            for &t in i.indices() {
                if datum.coxeter_m(s - 1, t - 1) != datum.coxeter_m(map[&s] - 1, map[&t] - 1) {
                    return invalid(format!("star does not preserve the Coxeter relation of s{s}, s{t}"));
                }
            }
        }
        let cap = crate::weyl::DEFAULT_CAP;
        let mut this = IJKDatum {
            system: Arc::clone(system),
            jk: j.union(&k),
            ijk: i.union(&j).union(&k),
            i,
            j,
            k,
            star: map,
            diagonal: Vec::new(),
            wk: Vec::new(),
        };
        let wi = enumerate_parabolic(system, &this.i, cap)?;
        this.diagonal = wi
            .into_iter()
            .map(|x| {
                let xs = this.star_extend(&x)?;
                let prod = x.mul(&xs)?;
                Ok((x, prod))
            })
            .collect::<Result<_>>()?;
        this.wk = enumerate_parabolic(system, &this.k, cap)?;
        Ok(this)
    }

    /// Like [`IJKDatum::new`] with `*` pairing `I` and `J` in increasing order.
    pub fn with_ordered_star(
        system: &Arc<RootSystem>,
        i: ParabolicSubset,
        j: ParabolicSubset,
        k: ParabolicSubset,
    ) -> Result<Self> {
        let star: Vec<(usize, usize)> = i.indices().iter().copied().zip(j.indices().iter().copied()).collect();
        if i.len() != j.len() {
            return Err(Error::InvalidDatum("I and J have different sizes".into()));
        }
        Self::new(system, i, j, k, &star)
    }

    /// The datum on `A_{n-1}` attached to square-zero matrices of rank `r`:
    /// `I = {1..r-1}`, `J = {n-r+1..n-1}`, `K = {r+1..n-r-1}`,
    /// `s_i* = s_{n-r+i}`.
    pub fn type_a(n: usize, r: usize) -> Result<Self> {
        if n < 2 || 2 * r > n {
            return Err(Error::InvalidDatum(format!("need n ≥ 2 and 2r ≤ n, got n={n}, r={r}")));
        }
        let system = build_root_system(Family::A, n - 1)?;
        let i = ParabolicSubset::new(1..r.max(1));
        let j = ParabolicSubset::new(n - r + 1..n);
        let k = ParabolicSubset::new(r + 1..n - r);
        let star: Vec<(usize, usize)> = (1..r.max(1)).map(|s| (s, n - r + s)).collect();
        Self::new(&system, i, j, k, &star)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn i(&self) -> &ParabolicSubset {
        &self.i
    }

    pub fn j(&self) -> &ParabolicSubset {
        &self.j
    }

    pub fn k(&self) -> &ParabolicSubset {
        &self.k
    }

    /// `J ∪ K`; `W(I,J,K) = W^{J∪K}`.
    pub fn jk(&self) -> &ParabolicSubset {
        &self.jk
    }

    /// `I ∪ J ∪ K`.
    pub fn ijk(&self) -> &ParabolicSubset {
        &self.ijk
    }

    /// `*` on a simple index of `I`.
    pub fn star_index(&self, s: usize) -> Option<usize> {
        self.star.get(&s).copied()
    }

    /// `|W_K|·|W_I|`, the size of every coset.
    pub fn coset_size(&self) -> usize {
        self.wk.len() * self.diagonal.len()
    }

    /// `x ↦ x*` from `W_I` to `W_J`.
    pub fn star_extend(&self, x: &WeylElement) -> Result<WeylElement> {
        let word = x.reduced_word();
        let image: Option<Vec<usize>> = word.iter().map(|s| self.star.get(s).copied()).collect();
        match image {
            Some(image) => WeylElement::from_word(&self.system, &image),
            None => Err(Error::NotInParabolic(format!("I = {:?}", self.i.indices()))),
        }
    }

    /// The coset `[w] = {w·a·x·x* : a ∈ W_K, x ∈ W_I}`.
    pub fn coset(&self, w: &WeylElement) -> Result<Vec<WeylElement>> {
        let mut out = Vec::with_capacity(self.coset_size());
        for a in &self.wk {
            let wa = w.mul(a)?;
            for (_, xx) in &self.diagonal {
                out.push(wa.mul(xx)?);
            }
        }
        Ok(out)
    }

    /// The unique member of `[w]` in `W^{J∪K}`.
    pub fn canonical_rep(&self, w: &WeylElement) -> Result<QuotientElement> {
        let mut found = None;
        for u in self.coset(w)? {
            if u.is_min_coset_rep(&self.jk) {
                if found.is_some() {
                    return Err(Error::Internal(format!("coset of {w} has two members in W^(J∪K)")));
                }
                found = Some(u);
            }
        }
        let rep = found.ok_or_else(|| Error::Internal(format!("coset of {w} misses W^(J∪K)")))?;
        self.element(rep)
    }

    /// Wraps an element of `W^{J∪K}`, computing `rep = w1·w2`.
    pub fn element(&self, rep: WeylElement) -> Result<QuotientElement> {
        if !rep.is_min_coset_rep(&self.jk) {
            return Err(Error::InvalidDatum(format!("{rep} has a right descent in J∪K")));
        }
        let (w1, w2) = rep.parabolic_decompose(&self.ijk)?;
        if !w2.in_parabolic(&self.i)? {
            return Err(Error::Internal(format!("W_L-part of {rep} is not in W_I")));
        }
        Ok(QuotientElement { rep, w1, w2 })
    }

    /// `Min(w) = {w·x·x* : x ∈ W_I, ℓ(w2·x) + ℓ(x) = ℓ(w2)}`.
    pub fn min_set(&self, w: &QuotientElement) -> Result<Vec<WeylElement>> {
        let l2 = w.w2.length();
        let mut out = Vec::new();
        for (x, xx) in &self.diagonal {
            if w.w2.mul(x)?.length() + x.length() == l2 {
                out.push(w.rep.mul(xx)?);
            }
        }
        Ok(out)
    }

    /// `w' ≤_O w`, tested through `Min(w')`.
    pub fn leq_o(&self, lower: &QuotientElement, upper: &QuotientElement) -> Result<bool> {
        Ok(self.leq_o_witness(lower, upper)?.is_some())
    }

    /// An element of `Min(w')` lying Bruhat-below `w`, if there is one.
    pub fn leq_o_witness(&self, lower: &QuotientElement, upper: &QuotientElement) -> Result<Option<WeylElement>> {
        if lower.rep.length() > upper.rep.length() {
            return Ok(None);
        }
        for u in self.min_set(lower)? {
            if u.bruhat_leq(&upper.rep)? {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    /// `w' ≤_O w` straight from the definition: some member of `[w']` is
    /// Bruhat-below `w`.
    pub fn leq_o_by_coset(&self, lower: &QuotientElement, upper: &QuotientElement) -> Result<bool> {
        for u in self.coset(&lower.rep)? {
            if u.bruhat_leq(&upper.rep)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether `u` belongs to some `Min(w)`.
    pub fn member_of_m(&self, u: &WeylElement) -> Result<bool> {
        let (_, ul) = u.parabolic_decompose(&self.ijk)?;
        // The factors of W_I × W_J × W_K commute and each letter of a reduced
        // word lies in exactly one factor.
        let word = ul.reduced_word();
        let part = |p: &ParabolicSubset| -> Vec<usize> { word.iter().copied().filter(|s| p.contains(*s)).collect() };
        if !part(&self.k).is_empty() {
            return Ok(false);
        }
        let a = WeylElement::from_word(&self.system, &part(&self.i))?;
        let inverse_star: HashMap<usize, usize> = self.star.iter().map(|(&s, &t)| (t, s)).collect();
        let v_word: Vec<usize> = part(&self.j).iter().map(|t| inverse_star[t]).collect();
        let v = WeylElement::from_word(&self.system, &v_word)?;
        Ok(a.mul(&v.inverse())?.length() == a.length() + v.length())
    }

    /// All `w'` with `w' ⋖_O w`, sorted by canonical reduced word.
    pub fn covers_o_below(&self, w: &QuotientElement) -> Result<Vec<QuotientElement>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for u in w.rep.bruhat_covers_below() {
            if self.member_of_m(&u)? {
                let c = self.canonical_rep(&u)?;
                if seen.insert(c.rep.clone()) {
                    out.push(c);
                }
            }
        }
        out.sort_by_cached_key(|c| c.rep.reduced_word());
        Ok(out)
    }

    /// All elements of `W(I,J,K)`, ordered by length then canonical word.
    pub fn elements(&self, cap: usize) -> Result<Vec<QuotientElement>> {
        let mut reps = enumerate_min_coset_reps(&self.system, &self.jk, cap)?;
        reps.sort_by_cached_key(|w| (w.length(), w.reduced_word()));
        reps.into_iter().map(|w| self.element(w)).collect()
    }

    /// The Hasse diagram of `≤_O`.
    pub fn build_poset(&self, cap: usize) -> Result<PosetGraph> {
        let nodes = self.elements(cap)?;
        let index: HashMap<WeylElement, usize> = nodes.iter().enumerate().map(|(k, q)| (q.rep.clone(), k)).collect();
        let lists: Vec<Vec<(usize, usize)>> = nodes
            .par_iter()
            .enumerate()
            .map(|(k, w)| {
                self.covers_o_below(w)?
                    .into_iter()
                    .map(|c| {
                        index
                            .get(&c.rep)
                            .map(|&lo| (lo, k))
                            .ok_or_else(|| Error::Internal(format!("cover {c} is not a node")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut edges: Vec<(usize, usize)> = lists.into_iter().flatten().collect();
        edges.sort_unstable();
        Ok(PosetGraph { nodes, edges })
    }
}

/// An element of `W(I,J,K)` with its factorization `rep = w1·w2`,
/// `w1 ∈ W^{I∪J∪K}`, `w2 ∈ W_I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    pub rep: WeylElement,
    pub w1: WeylElement,
    pub w2: WeylElement,
}

impl QuotientElement {
    pub fn length(&self) -> usize {
        self.rep.length()
    }

    pub fn word(&self) -> Vec<usize> {
        self.rep.reduced_word()
    }
}

impl std::fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.rep.fmt(f)
    }
}

/// Hasse diagram of `≤_O`: nodes ordered by (rank, word), edges
/// `(lower, upper)` as node indices.
#[derive(Debug, Clone)]
pub struct PosetGraph {
    pub nodes: Vec<QuotientElement>,
    pub edges: Vec<(usize, usize)>,
}

/// JSON form of a [`PosetGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub nodes: Vec<PosetNodeJson>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNodeJson {
    pub word: Vec<usize>,
    pub length: usize,
}

impl PosetGraph {
    /// Number of nodes of each rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let top = self.nodes.iter().map(QuotientElement::length).max().unwrap_or(0);
        let mut profile = vec![0; top + 1];
        for q in &self.nodes {
            profile[q.length()] += 1;
        }
        profile
    }

    /// Whether every edge raises the length by exactly one.
    pub fn is_graded(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.nodes[a].length() + 1 == self.nodes[b].length())
    }

    /// Reflexive-transitive closure of the edges as a boolean matrix
    /// `reach[lower][upper]`.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            up[a].push(b);
        }
        let mut reach = vec![vec![false; n]; n];
        // Nodes are sorted by rank, so processing from the top down sees every
        // upper neighbour's closure first.
        for a in (0..n).rev() {
            reach[a][a] = true;
            for &b in &up[a] {
                let row = reach[b].clone();
                for (x, y) in reach[a].iter_mut().zip(row) {
                    *x |= y;
                }
            }
        }
        reach
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            nodes: self.nodes.iter().map(|q| PosetNodeJson { word: q.word(), length: q.length() }).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// DOT rendering with one subgraph per rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (r, _) in self.rank_profile().iter().enumerate() {
            let _ = writeln!(out, "  subgraph rank_{r} {{\n    rank=same;");
            for (k, q) in self.nodes.iter().enumerate().filter(|(_, q)| q.length() == r) {
                let _ = writeln!(out, "    n{k} [label=\"{}\", rank={r}];", word_string(&q.word()));
            }
            out.push_str("  }\n");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;

    fn fig1() -> IJKDatum {
        let sys = build_root_system(Family::A, 3).unwrap();
        IJKDatum::new(&sys, ParabolicSubset::new([1]), ParabolicSubset::new([3]), ParabolicSubset::empty(), &[(1, 3)])
            .unwrap()
    }

    fn el(d: &IJKDatum, word: &[usize]) -> WeylElement {
        WeylElement::from_word(d.system(), word).unwrap()
    }

    #[test]
    fn validation() {
        let sys = build_root_system(Family::A, 3).unwrap();
        let p = |v: &[usize]| ParabolicSubset::new(v.iter().copied());
        assert!(IJKDatum::new(&sys, p(&[1]), p(&[2]), p(&[]), &[(1, 2)]).is_err());
        assert!(IJKDatum::new(&sys, p(&[1]), p(&[3]), p(&[]), &[]).is_err());
        assert!(IJKDatum::new(&sys, p(&[1]), p(&[1]), p(&[]), &[(1, 1)]).is_err());
        let b5 = build_root_system(Family::B, 5).unwrap();
        // s1-s2 and s4-s5 carry different Coxeter labels in B5.
        let err = IJKDatum::new(&b5, p(&[1, 2]), p(&[4, 5]), p(&[]), &[(1, 4), (2, 5)]).unwrap_err();
        assert!(err.to_string().contains("Coxeter"));
        assert!(IJKDatum::type_a(4, 3).is_err());
    }

    #[test]
    fn star_and_cosets() {
        let d = fig1();
        assert_eq!(d.star_extend(&el(&d, &[1])).unwrap(), el(&d, &[3]));
        assert!(d.star_extend(&el(&d, &[2])).is_err());
        assert_eq!(d.coset(&el(&d, &[2])).unwrap().len(), 2);
        assert_eq!(d.canonical_rep(&el(&d, &[1, 3])).unwrap().rep, el(&d, &[]));
        let ta = IJKDatum::type_a(6, 3).unwrap();
        assert_eq!(ta.star_index(2), Some(5));
    }

    #[test]
    fn min_sets_and_membership() {
        let d = fig1();
        let w = d.canonical_rep(&el(&d, &[2, 1])).unwrap();
        let min = d.min_set(&w).unwrap();
        assert_eq!(min.len(), 2);
        assert!(min.contains(&el(&d, &[2, 1])) && min.contains(&el(&d, &[2, 3])));
        assert!(d.member_of_m(&el(&d, &[2, 3])).unwrap());
        assert!(!d.member_of_m(&el(&d, &[1, 3])).unwrap());
    }

    #[test]
    fn order_examples() {
        let d = fig1();
        let q = |word: &[usize]| d.canonical_rep(&el(&d, word)).unwrap();
        assert!(d.leq_o(&q(&[1]), &q(&[3, 2])).unwrap());
        assert!(!d.leq_o(&q(&[1, 2]), &q(&[3, 2])).unwrap());
        let covers: Vec<Vec<usize>> = d.covers_o_below(&q(&[2, 1, 3, 2])).unwrap().iter().map(|c| c.word()).collect();
        assert_eq!(covers.len(), 3);
        for c in [&[1, 3, 2][..], &[3, 2, 1], &[1, 2, 1]] {
            assert!(covers.contains(&q(c).word()));
        }
    }

    #[test]
    fn poset_of_a3_quotient() {
        let g = fig1().build_poset(DEFAULT_CAP).unwrap();
        assert_eq!(g.nodes.len(), 12);
        assert_eq!(g.edges.len(), 22);
        assert_eq!(g.rank_profile(), vec![1, 2, 3, 3, 2, 1]);
        assert!(g.is_graded());
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: PosetJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g.to_json());
        assert_eq!(g.to_dot().matches(" -> ").count(), 22);
    }
}
