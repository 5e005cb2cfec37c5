//! Weyl group elements as exact linear maps on the root lattice.
//!
//! Words are sequences of 1-based simple indices. `from_word(&[i1, .., ik])`
//! is the product `s_{i1} ⋯ s_{ik}`, with the rightmost letter acting first,
//! so in type A `s2 s1` has line notation `3 1 2`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::root_system::{Family, Root, RootSystem};

/// Default bound on the number of elements produced by an enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

/// An element of the Weyl group of a root system.
///
/// The action is stored column-major: column `j` holds `w(α_j)` in the
/// simple-root basis.
#[derive(Clone)]
pub struct WeylElement {
    system: Arc<RootSystem>,
    action: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action && (Arc::ptr_eq(&self.system, &other.system) || self.system == other.system)
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
        write!(f, "WeylElement({}: {})", self.system.label(), self)
    }
}

/// Formats as the canonical reduced word, e.g. `s1 s3 s2`, or `e`.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_string(&self.reduced_word()))
    }
}

/// Formats a word as `s1 s3 s2`, the empty word as `e`.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

/// Parses words such as `"2 1 3 2"`, `"2,1,3,2"`, `"s2 s1"` or `"e"`.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" || text == "[]" {
        return Ok(Vec::new());
    }
    text.trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches('s')
                .parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(format!("cannot parse word letter '{t}'")))
        })
        .collect()
}

fn root_sign(col: &[i64]) -> i64 {
    col.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
}

impl WeylElement {
    pub fn identity(system: &Arc<RootSystem>) -> Self {
        let n = system.rank();
        let mut action = vec![0; n * n];
        for j in 0..n {
            action[j * n + j] = 1;
        }
        WeylElement { system: Arc::clone(system), action }
    }

    /// Simple reflection `s_i` (1-based).
    pub fn simple(system: &Arc<RootSystem>, i: usize) -> Result<Self> {
        system.check_index(i)?;
        Ok(Self::identity(system).mul_simple_right(i - 1))
    }

    /// The product `s_{i1} ⋯ s_{ik}` of a word.
    pub fn from_word(system: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(system);
        for &i in word {
            system.check_index(i)?;
            w = w.mul_simple_right(i - 1);
        }
        Ok(w)
    }

    /// Reflection `s_β` in a root.
    pub fn reflection(system: &Arc<RootSystem>, beta: &Root) -> Result<Self> {
        let n = system.rank();
        let mut action = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let img = system.reflect_vector(&e, beta)?;
            action[j * n..(j + 1) * n].copy_from_slice(&img);
        }
        Ok(WeylElement { system: Arc::clone(system), action })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// `w(α_j)` for a 0-based simple index.
    pub fn column(&self, j: usize) -> &[i64] {
        let n = self.rank();
        &self.action[j * n..(j + 1) * n]
    }

    /// Action matrix as rows (`rows[i][j]` is the `α_i`-coordinate of `w(α_j)`).
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.action[j * n + i]).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|j| (0..n).all(|i| self.action[j * n + i] == i64::from(i == j)))
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.system, &other.system) || self.system == other.system {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    /// Image of a lattice vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0; n];
        for (j, &vj) in v.iter().enumerate() {
            if vj != 0 {
                for (o, c) in out.iter_mut().zip(self.column(j)) {
                    *o += vj * c;
                }
            }
        }
        out
    }

    /// Image of a root.
    pub fn apply_root(&self, root: &Root) -> Root {
        let v = self.apply(root.coords());
        self.system.root(&v).cloned().expect("Weyl group elements permute the roots")
    }

    /// `w·s_i` for a 0-based index.
    pub(crate) fn mul_simple_right(&self, i: usize) -> Self {
        let n = self.rank();
        let mut action = self.action.clone();
        for j in 0..n {
            let a = self.system.cartan(i, j);
            if a != 0 {
                for k in 0..n {
                    action[j * n + k] -= a * self.action[i * n + k];
                }
            }
        }
        WeylElement { system: Arc::clone(&self.system), action }
    }

    /// `s_i·w` for a 0-based index.
    pub(crate) fn mul_simple_left(&self, i: usize) -> Self {
        let n = self.rank();
        let mut action = self.action.clone();
        for j in 0..n {
            let col = &mut action[j * n..(j + 1) * n];
            self.system.simple_reflect_in_place(col, i);
        }
        WeylElement { system: Arc::clone(&self.system), action }
    }

    /// `w·s_i` for a 1-based index.
    pub fn times_simple(&self, i: usize) -> Result<Self> {
        self.system.check_index(i)?;
        Ok(self.mul_simple_right(i - 1))
    }

    /// `s_i·w` for a 1-based index.
    pub fn simple_times(&self, i: usize) -> Result<Self> {
        self.system.check_index(i)?;
        Ok(self.mul_simple_left(i - 1))
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let n = self.rank();
        let mut action = vec![0; n * n];
        for j in 0..n {
            let img = self.apply(other.column(j));
            action[j * n..(j + 1) * n].copy_from_slice(&img);
        }
        Ok(WeylElement { system: Arc::clone(&self.system), action })
    }

    /// Whether `w(α_i) < 0` (0-based), i.e. `ℓ(w s_i) < ℓ(w)`.
    pub(crate) fn has_right_descent(&self, i: usize) -> bool {
        root_sign(self.column(i)) < 0
    }

    /// Right descents, 1-based and ascending.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.has_right_descent(i)).map(|i| i + 1).collect()
    }

    /// Left descents, 1-based and ascending.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// Word obtained by repeatedly stripping the smallest right descent; the
    /// element equals `s_{last} ⋯ s_{first}` of the returned list.
    fn strip_right(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut peeled = Vec::new();
        while let Some(i) = (0..w.rank()).find(|&i| w.has_right_descent(i)) {
            w = w.mul_simple_right(i);
            peeled.push(i + 1);
        }
        peeled
    }

    pub fn inverse(&self) -> Self {
        // w = s_{pk} ⋯ s_{p1}, so w⁻¹ = s_{p1} ⋯ s_{pk}.
        let peeled = self.strip_right();
        let mut v = Self::identity(&self.system);
        for &i in &peeled {
            v = v.mul_simple_right(i - 1);
        }
        v
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.system
            .positive_roots()
            .iter()
            .filter(|b| root_sign(&self.apply(b.coords())) < 0)
            .count()
    }

    /// Lexicographically smallest reduced word (greedy smallest left descent).
    pub fn reduced_word(&self) -> Vec<usize> {
        // Left descents of w are right descents of w⁻¹.
        let mut v = self.inverse();
        let mut word = Vec::new();
        while let Some(i) = (0..v.rank()).find(|&i| v.has_right_descent(i)) {
            v = v.mul_simple_right(i);
            word.push(i + 1);
        }
        word
    }

    /// Bruhat order `self ≤ w`, by the lifting property.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        self.same_group(w)?;
        let mut u = self.clone();
        let mut w = w.clone();
        let mut lu = u.length();
        let mut lw = w.length();
        loop {
            if lu > lw {
                return Ok(false);
            }
            if lu == lw {
                return Ok(u == w);
            }
            let s = (0..w.rank()).find(|&i| w.has_right_descent(i)).expect("w ≠ e has a descent");
            w = w.mul_simple_right(s);
            lw -= 1;
            if u.has_right_descent(s) {
                u = u.mul_simple_right(s);
                lu -= 1;
            }
        }
    }

    /// All `u` with `u ⋖ w` in the Bruhat order.
    pub fn bruhat_covers_below(&self) -> Vec<WeylElement> {
        let l = self.length();
        if l == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for beta in self.system.positive_roots() {
            let t = WeylElement::reflection(&self.system, beta).expect("reflection in a root");
            let u = self.mul(&t).expect("same group");
            if u.length() + 1 == l {
                out.push(u);
            }
        }
        out
    }

    /// Right weak order: `ℓ(w) = ℓ(w v⁻¹) + ℓ(v)` with `v = self`.
    pub fn right_weak_leq(&self, w: &Self) -> Result<bool> {
        let wv = w.mul(&self.inverse())?;
        Ok(w.length() == wv.length() + self.length())
    }

    /// `w = w_upper · w_lower` with `w_lower ∈ W_L` and `w_upper ∈ W^L`.
    pub fn parabolic_decompose(&self, l: &ParabolicSubset) -> Result<(WeylElement, WeylElement)> {
        l.check(&self.system)?;
        let mut upper = self.clone();
        let mut peeled = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| l.contains0(i) && upper.has_right_descent(i)) {
            upper = upper.mul_simple_right(i);
            peeled.push(i);
        }
        let mut lower = Self::identity(&self.system);
        for &i in peeled.iter().rev() {
            lower = lower.mul_simple_right(i);
        }
        Ok((upper, lower))
    }

    /// Whether the element lies in `W_L`.
    pub fn in_parabolic(&self, l: &ParabolicSubset) -> Result<bool> {
        Ok(self.parabolic_decompose(l)?.0.is_identity())
    }

    /// Whether the element lies in `W^L` (no right descent in `L`).
    pub fn is_min_coset_rep(&self, l: &ParabolicSubset) -> bool {
        l.indices().iter().all(|&i| !self.has_right_descent(i - 1))
    }

    fn check_type_a(&self) -> Result<()> {
        if self.system.family() == Family::A {
            Ok(())
        } else {
            Err(Error::InvalidPermutation("line notation requires type A".into()))
        }
    }

    /// One-line notation `w(1) ⋯ w(n)` in type `A_{n-1}`.
    pub fn to_line_notation(&self) -> Result<Vec<usize>> {
        self.check_type_a()?;
        let n = self.rank() + 1;
        let mut line = vec![0; n];
        for j in 0..n - 1 {
            // w(α_j) = ε_{w(j)} − ε_{w(j+1)}; a positive root ε_p − ε_{q+1}
            // has support p..=q.
            let col = self.column(j);
            let first = col.iter().position(|&c| c != 0).unwrap() + 1;
            let last = col.iter().rposition(|&c| c != 0).unwrap() + 1;
            if root_sign(col) > 0 {
                line[j] = first;
                line[j + 1] = last + 1;
            } else {
                line[j] = last + 1;
                line[j + 1] = first;
            }
        }
        Ok(line)
    }

    /// Inverse of [`WeylElement::to_line_notation`].
    pub fn from_line_notation(system: &Arc<RootSystem>, line: &[usize]) -> Result<Self> {
        if system.family() != Family::A {
            return Err(Error::InvalidPermutation("line notation requires type A".into()));
        }
        let n = system.rank() + 1;
        check_permutation(line, n)?;
        let mut action = vec![0; (n - 1) * (n - 1)];
        for j in 0..n - 1 {
            let (a, b) = (line[j], line[j + 1]);
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            for k in lo..hi {
                action[j * (n - 1) + k - 1] = sign;
            }
        }
        Ok(WeylElement { system: Arc::clone(system), action })
    }
}

/// Checks that `line` is a permutation of `1..=n`.
pub fn check_permutation(line: &[usize], n: usize) -> Result<()> {
    if line.len() != n {
        return Err(Error::InvalidPermutation(format!("expected {n} entries, got {}", line.len())));
    }
    let mut seen = vec![false; n + 1];
    for &x in line {
        if x == 0 || x > n || seen[x] {
            return Err(Error::InvalidPermutation(format!("{line:?} is not a permutation of 1..={n}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// A subset `L` of the simple indices, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParabolicSubset {
    indices: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        ParabolicSubset { indices }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    fn contains0(&self, i: usize) -> bool {
        self.contains(i + 1)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.indices.iter().chain(&other.indices).copied())
    }

    /// Fails if some index is outside `1..=rank`.
    pub fn check(&self, system: &RootSystem) -> Result<()> {
        self.indices.iter().try_for_each(|&i| system.check_index(i))
    }
}

/// All elements of `W`, breadth-first by length.
pub fn enumerate_group(system: &Arc<RootSystem>, cap: usize) -> Result<Vec<WeylElement>> {
    enumerate_min_coset_reps(system, &ParabolicSubset::empty(), cap)
}

/// The minimal coset representatives `W^L`, breadth-first by length.
///
/// `W^L` is closed under deleting letters on the left of a reduced word, so
/// the search grows elements by left multiplication.
pub fn enumerate_min_coset_reps(
    system: &Arc<RootSystem>,
    l: &ParabolicSubset,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    l.check(system)?;
    let identity = WeylElement::identity(system);
    let mut seen: HashSet<WeylElement> = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut layer_start = 0;
    while layer_start < out.len() {
        let layer_end = out.len();
        for k in layer_start..layer_end {
            // s_i w > w iff w⁻¹(α_i) > 0; a length-increasing product has
            // length ℓ(w) + 1, which the layer structure tracks.
            let inv = out[k].inverse();
            for i in 0..system.rank() {
                if inv.has_right_descent(i) {
                    continue;
                }
                let next = out[k].mul_simple_left(i);
                if !next.is_min_coset_rep(l) || seen.contains(&next) {
                    continue;
                }
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap, reached: out.len() + 1 });
                }
                seen.insert(next.clone());
                out.push(next);
            }
        }
        layer_start = layer_end;
    }
    Ok(out)
}

/// All elements of the parabolic subgroup `W_L`, breadth-first by length.
pub fn enumerate_parabolic(system: &Arc<RootSystem>, l: &ParabolicSubset, cap: usize) -> Result<Vec<WeylElement>> {
    l.check(system)?;
    let identity = WeylElement::identity(system);
    let mut seen: HashSet<WeylElement> = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut k = 0;
    while k < out.len() {
        for &i in l.indices() {
            if out[k].has_right_descent(i - 1) {
                continue;
            }
            let next = out[k].mul_simple_right(i - 1);
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap, reached: out.len() + 1 });
                }
                out.push(next);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// An enumerated group with multiplication tables, lengths and a lazily
/// built Bruhat order table.
pub struct GroupTable {
    system: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    lengths: Vec<usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl GroupTable {
    pub fn new(system: &Arc<RootSystem>, cap: usize) -> Result<Self> {
        let elements = enumerate_group(system, cap)?;
        let index: HashMap<WeylElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = system.rank();
        let right: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| (0..n).map(|s| index[&w.mul_simple_right(s)]).collect())
            .collect();
        let left: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| (0..n).map(|s| index[&w.mul_simple_left(s)]).collect())
            .collect();
        // Breadth-first order: lengths follow from any predecessor.
        let mut lengths = vec![0; elements.len()];
        for k in 1..elements.len() {
            let s = (0..n).find(|&s| elements[k].has_right_descent(s)).unwrap();
            lengths[k] = lengths[right[k][s]] + 1;
        }
        Ok(GroupTable { system: Arc::clone(system), elements, index, lengths, right, left, bruhat: OnceLock::new() })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, k: usize) -> usize {
        self.lengths[k]
    }

    /// Index of `w_k · s_i` (1-based `i`).
    pub fn right_mul(&self, k: usize, i: usize) -> usize {
        self.right[k][i - 1]
    }

    /// Index of `s_i · w_k` (1-based `i`).
    pub fn left_mul(&self, k: usize, i: usize) -> usize {
        self.left[k][i - 1]
    }

    fn bruhat_table(&self) -> &Vec<Vec<u64>> {
        self.bruhat.get_or_init(|| {
            let n = self.len();
            let words = n.div_ceil(64);
            let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
            for w in 0..n {
                let mut col = vec![0u64; words];
                if self.lengths[w] == 0 {
                    col[w / 64] |= 1 << (w % 64);
                } else {
                    let s = (0..self.system.rank())
                        .find(|&s| self.elements[w].has_right_descent(s))
                        .unwrap();
                    let ws = self.right[w][s];
                    let prev = &cols[ws];
                    for u in 0..n {
                        let us = self.right[u][s];
                        let probe = if self.lengths[us] < self.lengths[u] { us } else { u };
                        if prev[probe / 64] >> (probe % 64) & 1 == 1 {
                            col[u / 64] |= 1 << (u % 64);
                        }
                    }
                }
                cols.push(col);
            }
            cols
        })
    }

    /// Bruhat order on indices, from the memoized table.
    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        self.bruhat_table()[w][u / 64] >> (u % 64) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_system;

    fn a3() -> Arc<RootSystem> {
        build_root_system(Family::A, 3).unwrap()
    }

    fn w(sys: &Arc<RootSystem>, word: &[usize]) -> WeylElement {
        WeylElement::from_word(sys, word).unwrap()
    }

    #[test]
    fn lengths_and_words() {
        let s = a3();
        assert_eq!(w(&s, &[]).length(), 0);
        assert_eq!(w(&s, &[2, 3, 2, 1, 2]).length(), 5);
        assert_eq!(w(&s, &[1, 3, 2]).length(), 3);
        assert_eq!(w(&s, &[1, 1]), w(&s, &[]));
        assert_eq!(w(&s, &[2]).reduced_word(), vec![2]);
        assert!(WeylElement::from_word(&s, &[4]).is_err());
        let x = w(&s, &[2, 1, 3, 2, 1]);
        assert_eq!(x.mul(&x.inverse()).unwrap(), w(&s, &[]));
    }

    #[test]
    fn line_notation() {
        let s = a3();
        assert_eq!(w(&s, &[]).to_line_notation().unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(w(&s, &[2, 1, 3, 2]).to_line_notation().unwrap(), vec![3, 4, 1, 2]);
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(w(&a2, &[2, 1]).to_line_notation().unwrap(), vec![3, 1, 2]);
        let x = WeylElement::from_line_notation(&s, &[3, 4, 1, 2]).unwrap();
        assert_eq!(x.reduced_word().len(), 4);
        assert_eq!(x, w(&s, &[2, 1, 3, 2]));
        assert!(WeylElement::from_line_notation(&s, &[1, 1, 2, 3]).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let s = a3();
        assert!(!w(&s, &[1]).bruhat_leq(&w(&s, &[3, 2])).unwrap());
        assert!(w(&s, &[3, 2]).bruhat_leq(&w(&s, &[1, 3, 2])).unwrap());
        let covers = w(&s, &[1, 2]).bruhat_covers_below();
        assert_eq!(covers.len(), 2);
        assert!(covers.contains(&w(&s, &[1])) && covers.contains(&w(&s, &[2])));
        assert_eq!(w(&s, &[1, 2, 1, 3, 2, 1]).bruhat_covers_below().len(), 3);
    }

    #[test]
    fn weak_and_parabolic() {
        let s = a3();
        assert!(w(&s, &[2]).right_weak_leq(&w(&s, &[1, 2])).unwrap());
        assert!(!w(&s, &[1]).right_weak_leq(&w(&s, &[1, 2])).unwrap());
        let (u, l) = w(&s, &[2, 1]).parabolic_decompose(&ParabolicSubset::new([1])).unwrap();
        assert_eq!((u, l), (w(&s, &[2]), w(&s, &[1])));
        let x = w(&s, &[2, 1, 3, 2]);
        let (u, l) = x.parabolic_decompose(&ParabolicSubset::new([1, 3])).unwrap();
        assert_eq!(u, x);
        assert!(l.is_identity());
    }

    #[test]
    fn enumeration_sizes() {
        let s = a3();
        assert_eq!(enumerate_group(&s, DEFAULT_CAP).unwrap().len(), 24);
        assert_eq!(enumerate_min_coset_reps(&s, &ParabolicSubset::new([1, 3]), DEFAULT_CAP).unwrap().len(), 6);
        let f4 = build_root_system(Family::F, 4).unwrap();
        assert_eq!(enumerate_group(&f4, DEFAULT_CAP).unwrap().len(), 1152);
        assert!(matches!(enumerate_group(&s, 10), Err(Error::CapExceeded { cap: 10, .. })));
    }

    #[test]
    fn table_matches_elementwise_bruhat() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        let t = GroupTable::new(&b3, DEFAULT_CAP).unwrap();
        for u in 0..t.len() {
            assert_eq!(t.length(u), t.element(u).length());
            for v in 0..t.len() {
                assert_eq!(t.bruhat_leq(u, v), t.element(u).bruhat_leq(t.element(v)).unwrap());
            }
        }
    }
}
