//! Finite crystallographic root systems with exact arithmetic.
//!
//! Simple roots follow the Bourbaki numbering for every family (this is also
//! the numbering of the usual E7 diagram with `α2` attached to `α4`):
//!
//! * `B_n`: `α_n` is short; `C_n`: `α_n` is long.
//! * `D_n`: `α_{n-1}` and `α_n` are the two short legs attached to `α_{n-2}`.
//! * `E_n`: chain `1-3-4-5-...-n` with `α2` attached to `α4`.
//! * `F4`: `α1, α2` long, `α3, α4` short. `G2`: `α1` short, `α2` long.
//!
//! Roots are integer vectors in the simple-root basis. The invariant form is
//! stored as an integer Gram matrix with short roots of squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Cartan-Killing family of an irreducible finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Cartan data of an irreducible finite root system.
///
/// `cartan_matrix[i][j] = ⟨α_j, α_i^∨⟩` and `symmetrizer[i] = (α_i, α_i) / 2`,
/// so that `symmetrizer[i] * cartan_matrix[i][j] = (α_i, α_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank { family: family.letter(), rank });
        }
        let (norms, bonds) = diagram(family, rank);
        let mut gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            gram[i][i] = norms[i];
        }
        for &(i, j, ip) in &bonds {
            gram[i][j] = ip;
            gram[j][i] = ip;
        }
        let cartan_matrix = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / norms[i]).collect())
            .collect();
        let datum = CartanDatum {
            family,
            rank,
            cartan_matrix,
            symmetrizer: norms.iter().map(|n| n / 2).collect(),
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Checks the Cartan-matrix axioms and positive definiteness of `D·A`.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank;
        let a = &self.cartan_matrix;
        let bad = |msg: &str| Err(Error::Internal(format!("{}{}: {msg}", self.family, n)));
        if a.len() != n || a.iter().any(|r| r.len() != n) || self.symmetrizer.len() != n {
            return bad("shape");
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return bad("diagonal entry is not 2");
            }
            for j in 0..n {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return bad("off-diagonal sign pattern");
                }
            }
        }
        let gram = self.gram();
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return bad("D·A is not symmetric");
                }
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            if linalg::determinant(&minor) <= 0 {
                return bad("D·A is not positive definite");
            }
        }
        Ok(())
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.symmetrizer[i] * self.cartan_matrix[i][j])
                    .collect()
            })
            .collect()
    }

    /// Coxeter matrix entry `m(s_i, s_j)` for 0-based indices.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.cartan_matrix[i][j] * self.cartan_matrix[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("finite Cartan matrix with product {p}"),
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Squared lengths of the simple roots and the nonzero inner products
/// `(i, j, (α_i, α_j))` of the Dynkin diagram, 0-based.
fn diagram(family: Family, n: usize) -> (Vec<i64>, Vec<(usize, usize, i64)>) {
    let chain = |len: usize, ip: i64| (0..len.saturating_sub(1)).map(move |i| (i, i + 1, ip));
    match family {
        Family::A => (vec![2; n], chain(n, -1).collect()),
        Family::B => {
            let mut norms = vec![4; n];
            norms[n - 1] = 2;
            (norms, chain(n, -2).collect())
        }
        Family::C => {
            let mut norms = vec![2; n];
            norms[n - 1] = 4;
            let mut bonds: Vec<_> = chain(n - 1, -1).collect();
            bonds.push((n - 2, n - 1, -2));
            (norms, bonds)
        }
        Family::D => {
            let mut bonds: Vec<_> = chain(n - 1, -1).collect();
            bonds.push((n - 3, n - 1, -1));
            (vec![2; n], bonds)
        }
        Family::E => {
            let mut bonds = vec![(0, 2, -1), (1, 3, -1)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1, -1)));
            (vec![2; n], bonds)
        }
        Family::F => (vec![4, 4, 2, 2], vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)]),
        Family::G => (vec![2, 6], vec![(0, 1, -3)]),
    }
}

/// A root, as integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Sum of the coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn negate(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A coweight, stored by its values `h(α_i)` on the simple roots, i.e. in the
/// basis of fundamental coweights `ϖ_i^∨`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Coweight { coords: vec![0; rank] }
    }

    /// The fundamental coweight `ϖ_i^∨` (1-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Coweight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Value `⟨v, h⟩` on a lattice vector in the simple-root basis.
    pub fn eval(&self, v: &[i64]) -> i64 {
        self.coords.iter().zip(v).map(|(h, x)| h * x).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight { coords: self.coords.iter().map(|a| a * k).collect() }
    }

    /// Coordinates in the simple-coroot basis `α_i^∨`.
    pub fn to_coroot_basis(&self, datum: &CartanDatum) -> Vec<Rational64> {
        // h(α_j) = Σ_i c_i ⟨α_j, α_i^∨⟩, i.e. h = Aᵀ c.
        let n = datum.rank;
        let at: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| datum.cartan_matrix[i][j]).collect()).collect();
        let inv = linalg::inverse(&at).expect("Cartan matrices of finite type are invertible");
        (0..n)
            .map(|i| {
                (0..n).fold(Rational64::zero(), |acc, j| acc + inv[i][j] * Rational64::from_integer(self.coords[j]))
            })
            .collect()
    }

    /// Inverse of [`Coweight::to_coroot_basis`]. Fails if the result is not
    /// integral on the root lattice.
    pub fn from_coroot_basis(datum: &CartanDatum, c: &[Rational64]) -> Result<Coweight> {
        let n = datum.rank;
        if c.len() != n {
            return Err(Error::Mismatch);
        }
        let coords = (0..n)
            .map(|j| {
                let v = (0..n).fold(Rational64::zero(), |acc, i| {
                    acc + c[i] * Rational64::from_integer(datum.cartan_matrix[i][j])
                });
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::Internal(format!("coweight value {v} is not integral")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(Coweight { coords })
    }

    /// Formats the coweight as a combination of fundamental coweights, e.g.
    /// `-w1 + 2w3`.
    pub fn fundamental_expr(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coords.iter().enumerate().filter(|(_, &c)| c != 0) {
            match (out.is_empty(), c < 0) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("w{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A finite crystallographic root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    highest: Root,
}

/// Builds the root system of the given type.
pub fn build_root_system(family: Family, rank: usize) -> Result<Arc<RootSystem>> {
    RootSystem::new(family, rank).map(Arc::new)
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let datum = CartanDatum::new(family, rank)?;
        let gram = datum.gram();
        // Reflection closure of the simple roots.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
        let mut stack: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        while let Some(v) = stack.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for i in 0..rank {
                let mut w = v.clone();
                let p: i64 = (0..rank).map(|j| v[j] * datum.cartan_matrix[i][j]).sum();
                w[i] -= p;
                if !seen.contains(&w) {
                    stack.push(w);
                }
            }
            roots.push(v);
        }
        roots.sort();
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect::<HashMap<_, _>>();
        let roots: Vec<Root> = roots.into_iter().map(|coords| Root { coords }).collect();
        let positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        let highest = positive
            .iter()
            .filter(|b| {
                (0..rank).all(|i| {
                    let mut c = b.coords.clone();
                    c[i] += 1;
                    !index.contains_key(&c)
                })
            })
            .max_by_key(|b| b.height())
            .cloned()
            .ok_or_else(|| Error::Internal("no highest root".into()))?;
        Ok(RootSystem { datum, gram, roots, positive, index, highest })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn family(&self) -> Family {
        self.datum.family
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.datum.cartan_matrix[i][j]
    }

    /// All roots in lexicographic order of their coordinates.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// Looks up a root by its coordinates.
    pub fn root(&self, coords: &[i64]) -> Option<&Root> {
        self.index.get(coords).map(|&i| &self.roots[i])
    }

    /// Like [`RootSystem::root`] but returns an error for non-roots.
    pub fn expect_root(&self, coords: &[i64]) -> Result<Root> {
        if coords.len() != self.rank() {
            return Err(Error::Mismatch);
        }
        self.root(coords).cloned().ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.coords).copied()
    }

    /// Simple root `α_i` (1-based).
    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank()];
        coords[i - 1] = 1;
        Ok(Root { coords })
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    /// Invariant form `(a, b)` on lattice vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Squared length `(β, β)`.
    pub fn norm(&self, root: &Root) -> i64 {
        self.inner(&root.coords, &root.coords)
    }

    pub fn max_norm(&self) -> i64 {
        self.norm(&self.highest)
    }

    pub fn is_long(&self, root: &Root) -> bool {
        self.norm(root) == self.max_norm()
    }

    /// Exact pairing `⟨a, b^∨⟩ = 2(a, b)/(b, b)` of a lattice vector with a coroot.
    pub fn pairing(&self, a: &[i64], b: &Root) -> Result<i64> {
        if a.len() != self.rank() || b.coords.len() != self.rank() {
            return Err(Error::Mismatch);
        }
        let num = 2 * self.inner(a, &b.coords);
        let den = self.norm(b);
        if num % den != 0 {
            return Err(Error::Internal(format!("pairing {num}/{den} is not integral")));
        }
        Ok(num / den)
    }

    /// Coroot `b^∨` as a coweight.
    pub fn coroot(&self, b: &Root) -> Coweight {
        let den = self.norm(b);
        let coords = (0..self.rank())
            .map(|j| {
                let num: i64 = 2 * (0..self.rank()).map(|i| self.gram[j][i] * b.coords[i]).sum::<i64>();
                num / den
            })
            .collect();
        Coweight { coords }
    }

    /// `Σ_i θ_i^∨` for a list of roots.
    pub fn coroot_sum<'a>(&self, roots: impl IntoIterator<Item = &'a Root>) -> Coweight {
        roots
            .into_iter()
            .fold(Coweight::zero(self.rank()), |acc, r| acc.add(&self.coroot(r)))
    }

    /// Reflection `s_b(v) = v - ⟨v, b^∨⟩ b` of a lattice vector.
    pub fn reflect_vector(&self, v: &[i64], b: &Root) -> Result<Vec<i64>> {
        let p = self.pairing(v, b)?;
        Ok(v.iter().zip(&b.coords).map(|(x, y)| x - p * y).collect())
    }

    /// Reflection of a root in another root.
    pub fn reflect(&self, a: &Root, b: &Root) -> Result<Root> {
        let v = self.reflect_vector(&a.coords, b)?;
        self.expect_root(&v)
    }

    /// Simple reflection `s_i` (0-based) applied to a lattice vector.
    pub(crate) fn simple_reflect_in_place(&self, v: &mut [i64], i: usize) {
        let p: i64 = (0..self.rank()).map(|j| v[j] * self.datum.cartan_matrix[i][j]).sum();
        v[i] -= p;
    }

    /// `s_i(h)` for a coweight (1-based `i`).
    pub fn reflect_coweight(&self, h: &Coweight, i: usize) -> Coweight {
        let hi = h.coords[i - 1];
        let coords = (0..self.rank())
            .map(|j| h.coords[j] - hi * self.datum.cartan_matrix[i - 1][j])
            .collect();
        Coweight { coords }
    }

    /// Moves `h` into the dominant chamber, always reflecting in the smallest
    /// simple index with a negative value. Returns the dominant coweight and
    /// the indices applied, in order.
    pub fn dominantize(&self, h: &Coweight) -> (Coweight, Vec<usize>) {
        let mut h = h.clone();
        let mut word = Vec::new();
        while let Some(i) = h.coords.iter().position(|&c| c < 0) {
            h = self.reflect_coweight(&h, i + 1);
            word.push(i + 1);
        }
        (h, word)
    }

    /// Rational coefficients of `gamma` in the span of `set`, if any.
    pub fn span_membership(&self, set: &[Root], gamma: &[i64]) -> Result<Option<Vec<Rational64>>> {
        if gamma.len() != self.rank() || set.iter().any(|b| b.coords.len() != self.rank()) {
            return Err(Error::Mismatch);
        }
        let orthogonal = set
            .iter()
            .enumerate()
            .all(|(i, a)| set[i + 1..].iter().all(|b| self.inner(&a.coords, &b.coords) == 0));
        if !orthogonal {
            let cols: Vec<Vec<i64>> = set.iter().map(|b| b.coords.clone()).collect();
            return linalg::solve_in_span(&cols, gamma);
        }
        if set.iter().any(|b| b.coords.iter().all(|&c| c == 0)) {
            return Err(Error::DependentSet);
        }
        let q: Vec<Rational64> = set
            .iter()
            .map(|b| Rational64::new(self.inner(gamma, &b.coords), self.norm(b)))
            .collect();
        let mut recon = vec![Rational64::zero(); self.rank()];
        for (qi, b) in q.iter().zip(set) {
            for (r, &c) in recon.iter_mut().zip(&b.coords) {
                *r += *qi * Rational64::from_integer(c);
            }
        }
        let hit = recon.iter().zip(gamma).all(|(r, &g)| *r == Rational64::from_integer(g));
        Ok(hit.then_some(q))
    }

    pub fn label(&self) -> String {
        self.datum.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn invalid_ranks() {
        assert!(matches!(RootSystem::new(Family::E, 5), Err(Error::InvalidRank { .. })));
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::F, 3).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
    }

    #[test]
    fn small_examples() {
        assert_eq!(sys(Family::A, 3).roots().len(), 12);
        let g2 = sys(Family::G, 2);
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.roots().iter().filter(|r| g2.is_long(r)).count(), 6);
        let e7 = sys(Family::E, 7);
        assert_eq!(e7.roots().len(), 126);
        assert_eq!(e7.highest_root().coords(), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn highest_roots_bourbaki() {
        assert_eq!(sys(Family::B, 3).highest_root().coords(), &[1, 2, 2]);
        assert_eq!(sys(Family::C, 3).highest_root().coords(), &[2, 2, 1]);
        assert_eq!(sys(Family::D, 4).highest_root().coords(), &[1, 2, 1, 1]);
        assert_eq!(sys(Family::F, 4).highest_root().coords(), &[2, 3, 4, 2]);
        assert_eq!(sys(Family::G, 2).highest_root().coords(), &[3, 2]);
        assert_eq!(sys(Family::E, 6).highest_root().coords(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(sys(Family::E, 8).highest_root().coords(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn pairing_examples() {
        let d4 = sys(Family::D, 4);
        let a1 = d4.simple_root(1).unwrap();
        assert_eq!(d4.pairing(a1.coords(), &a1).unwrap(), 2);
        let two_w2 = Coweight::fundamental(4, 2).scale(2);
        assert_eq!(two_w2.eval(d4.highest_root().coords()), 4);
        let g2 = sys(Family::G, 2);
        assert_eq!(Coweight::fundamental(2, 2).scale(2).eval(g2.highest_root().coords()), 4);
        assert_eq!(d4.pairing(&[1, 0, 0], &a1), Err(Error::Mismatch));
    }

    #[test]
    fn reflect_examples() {
        let a3 = sys(Family::A, 3);
        let a = a3.simple_root(1).unwrap();
        assert_eq!(a3.reflect(&a, &a).unwrap(), a.negate());
        let c = a3.simple_root(3).unwrap();
        assert_eq!(a3.reflect(&a, &c).unwrap(), a);
        // G2: β1 = θ long, β2 = α1 short, β = ½(β1 + 3β2) long; s_β(β2) = β2 − β.
        let g2 = sys(Family::G, 2);
        let beta2 = g2.simple_root(1).unwrap();
        let beta = g2.expect_root(&[3, 1]).unwrap();
        let expected: Vec<i64> = beta2.coords().iter().zip(beta.coords()).map(|(x, y)| x - y).collect();
        assert_eq!(g2.reflect(&beta2, &beta).unwrap().coords(), expected.as_slice());
        assert_eq!(expected, vec![-2, -1]);
    }

    #[test]
    fn dominantize_examples() {
        let e7 = sys(Family::E, 7);
        let h = Coweight::new(vec![-1, 0, 0, 1, 0, 0, 0]);
        let (dom, word) = e7.dominantize(&h);
        assert_eq!(dom, Coweight::fundamental(7, 3));
        assert_eq!(word, vec![1, 3]);
        let h = Coweight::new(vec![-2, 0, 2, 0, 0, 0, 0]);
        assert_eq!(e7.dominantize(&h).0, Coweight::fundamental(7, 1).scale(2));
        let dom = Coweight::new(vec![1, 0, 2, 0, 0, 0, 1]);
        assert_eq!(e7.dominantize(&dom), (dom.clone(), vec![]));
    }

    #[test]
    fn coroot_basis_roundtrip() {
        let f4 = sys(Family::F, 4);
        let h = Coweight::new(vec![3, -1, 0, 2]);
        let c = h.to_coroot_basis(f4.datum());
        assert_eq!(Coweight::from_coroot_basis(f4.datum(), &c).unwrap(), h);
        // The coroot of a simple root has coroot coordinates e_i.
        let a2 = f4.simple_root(2).unwrap();
        let c = f4.coroot(&a2).to_coroot_basis(f4.datum());
        assert_eq!(c[1], Rational64::from_integer(1));
        assert!(c.iter().enumerate().all(|(i, x)| i == 1 || x.is_zero()));
    }

    #[test]
    fn span_membership_examples() {
        let d4 = sys(Family::D, 4);
        let set: Vec<Root> = [[1, 2, 1, 1], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
            .iter()
            .map(|c| d4.expect_root(c).unwrap())
            .collect();
        let q = d4.span_membership(&set, set[0].coords()).unwrap().unwrap();
        assert_eq!(q[0], Rational64::from_integer(1));
        let half = Rational64::new(1, 2);
        let q = d4.span_membership(&set, &[1, 1, 1, 1]).unwrap().unwrap();
        assert_eq!(q, vec![half; 4]);
        let dep = vec![set[1].clone(), set[1].clone()];
        assert_eq!(d4.span_membership(&dep, &[1, 0, 0, 0]), Err(Error::DependentSet));
    }

    #[test]
    fn fundamental_expr_formatting() {
        assert_eq!(Coweight::new(vec![-1, 0, 2]).fundamental_expr(), "-w1 + 2w3");
        assert_eq!(Coweight::new(vec![0, 0]).fundamental_expr(), "0");
        assert_eq!(Coweight::new(vec![0, 1]).fundamental_expr(), "w2");
    }
}
