//! Sums of root vectors over orthogonal root sets.
//!
//! Only root and coweight combinatorics is modelled: a set of orthogonal
//! roots `θ_1, …, θ_r` stands for the nilpotent element `Σ e_{θ_i}` and
//! everything is computed from the roots, their coroots and `Σ θ_i^∨`.

mod cascade;
mod height;
mod involution;

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Coweight, Root, RootSystem};
use crate::weyl::WeylElement;

pub use cascade::{chain_cascade, chain_cascade_to_depth, CascadeNode};
pub use height::{
    classify, enumerate_orthogonal_sets, height_of_sum, is_spherical, reduce_b2long, type_b_height,
    ClassificationReport, SphericalVerdict, TypeBHeight,
};
pub use involution::{
    dynkin_type, grading_dimensions, levi_and_involution, ComponentAction, InvolutionReport, SimpleRootAction,
};

/// A list of pairwise orthogonal roots of one root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSet {
    system: Arc<RootSystem>,
    thetas: Vec<Root>,
}

impl OrthogonalSet {
    /// Checks membership and pairwise orthogonality. Orthogonal nonzero
    /// vectors are linearly independent, so no separate check is needed.
    pub fn new(system: &Arc<RootSystem>, thetas: Vec<Root>) -> Result<Self> {
        for t in &thetas {
            system.expect_root(t.coords())?;
        }
        for (i, a) in thetas.iter().enumerate() {
            for b in &thetas[i + 1..] {
                if system.inner(a.coords(), b.coords()) != 0 {
                    return Err(Error::NotOrthogonal(format!("{a} and {b}")));
                }
            }
        }
        Ok(OrthogonalSet { system: Arc::clone(system), thetas })
    }

    /// Builds the set from coordinate vectors.
    pub fn from_coords(system: &Arc<RootSystem>, coords: &[Vec<i64>]) -> Result<Self> {
        let roots = coords.iter().map(|c| system.expect_root(c)).collect::<Result<_>>()?;
        Self::new(system, roots)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn thetas(&self) -> &[Root] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    /// `h = Σ θ_i^∨`.
    pub fn coweight(&self) -> Coweight {
        self.system.coroot_sum(&self.thetas)
    }

    /// The set with the entries at `keep` only, in order.
    pub fn subset(&self, keep: &[usize]) -> OrthogonalSet {
        OrthogonalSet { system: Arc::clone(&self.system), thetas: keep.iter().map(|&i| self.thetas[i].clone()).collect() }
    }

    /// The image `w(θ_1), …, w(θ_r)`.
    pub fn translate(&self, w: &WeylElement) -> Result<OrthogonalSet> {
        if w.system().datum() != self.system.datum() {
            return Err(Error::Mismatch);
        }
        Ok(OrthogonalSet { system: Arc::clone(&self.system), thetas: self.thetas.iter().map(|t| w.apply_root(t)).collect() })
    }

    /// The translate whose coweight is dominant, together with the
    /// dominantizing word (the element is `s_{ik} ⋯ s_{i1}` for the word
    /// `[i1, …, ik]`).
    pub fn translate_to_dominant(&self) -> Result<(OrthogonalSet, Vec<usize>)> {
        let (_, word) = self.system.dominantize(&self.coweight());
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        let w = WeylElement::from_word(&self.system, &rev)?;
        Ok((self.translate(&w)?, word))
    }

    /// Rational coefficients of `gamma` in the span of the set.
    pub fn coefficients(&self, gamma: &[i64]) -> Result<Option<Vec<Rational64>>> {
        self.system.span_membership(&self.thetas, gamma)
    }
}

impl fmt::Display for OrthogonalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.thetas.iter().map(Root::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Labels `α_i(h)` of the dominant translate of `h = Σ θ_i^∨`.
pub fn weighted_dynkin(set: &OrthogonalSet) -> Coweight {
    set.system.dominantize(&set.coweight()).0
}

/// `α ± β ∉ Φ ∪ {0}`.
pub fn is_strongly_orthogonal(system: &RootSystem, a: &Root, b: &Root) -> bool {
    let sum: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect();
    let diff: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect();
    let zero = |v: &[i64]| v.iter().all(|&c| c == 0);
    !(zero(&sum) || zero(&diff) || system.is_root(&sum) || system.is_root(&diff))
}

/// A root in the rational span of the set other than `±θ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Offender {
    pub root: Root,
    #[serde(with = "ratio_strings")]
    pub coefficients: Vec<Rational64>,
}

/// Whether `span_Q(set) ∩ Φ = {±θ_i}`, with every root that violates it.
pub fn rational_orthogonality(set: &OrthogonalSet) -> Result<(bool, Vec<Offender>)> {
    let mut offenders = Vec::new();
    for gamma in set.system.roots() {
        if let Some(q) = set.coefficients(gamma.coords())? {
            let nonzero = q.iter().filter(|c| !c.is_zero()).count();
            let is_pm_theta = nonzero == 1 && q.iter().all(|c| c.is_zero() || c.abs() == Rational64::from_integer(1));
            if !is_pm_theta {
                offenders.push(Offender { root: gamma.clone(), coefficients: q });
            }
        }
    }
    Ok((offenders.is_empty(), offenders))
}

pub fn is_rationally_orthogonal(set: &OrthogonalSet) -> Result<bool> {
    Ok(rational_orthogonality(set)?.0)
}

/// The seven possible shapes of a root in the rational span of orthogonal roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    D4,
    B3,
    C3,
    B2long,
    B2short,
    G2both,
    A1,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::D4 => "D4",
            Case::B3 => "B3",
            Case::C3 => "C3",
            Case::B2long => "B2 long",
            Case::B2short => "B2 short",
            Case::G2both => "G2 both",
            Case::A1 => "A1",
        };
        f.write_str(s)
    }
}

/// A classified root `β = Σ q_i θ_i`, with the indices of the nonzero `q_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLabel {
    pub case: Case,
    pub beta: Root,
    #[serde(with = "ratio_strings")]
    pub coefficients: Vec<Rational64>,
    pub support: Vec<usize>,
}

/// Classifies `β ∈ span_Q(set) ∩ Φ` by the coefficient and length pattern,
/// and independently by the Cartan matrix of `{±θ_i} ∪ {−β}`; the two must agree.
pub fn classify_combination(set: &OrthogonalSet, beta: &Root) -> Result<CaseLabel> {
    let q = set
        .coefficients(beta.coords())?
        .ok_or_else(|| Error::UnreachableCase(format!("{beta} is not in the span of {set}")))?;
    let support: Vec<usize> = (0..q.len()).filter(|&i| !q[i].is_zero()).collect();
    let by_pattern = case_by_pattern(set, &q, &support);
    let by_diagram = case_by_diagram(set, &q, &support);
    match (by_pattern, by_diagram) {
        (Some(a), Some(b)) if a == b => Ok(CaseLabel { case: a, beta: beta.clone(), coefficients: q, support }),
        (a, b) => Err(Error::UnreachableCase(format!(
            "{beta} over {set}: coefficient pattern gives {a:?}, diagram gives {b:?}"
        ))),
    }
}

fn case_by_pattern(set: &OrthogonalSet, q: &[Rational64], support: &[usize]) -> Option<Case> {
    let sys = &set.system;
    let half = Rational64::new(1, 2);
    let one = Rational64::from_integer(1);
    let three_halves = Rational64::new(3, 2);
    // (is_long, |q|) for each supported root.
    let mut shape: Vec<(bool, Rational64)> =
        support.iter().map(|&i| (sys.is_long(&set.thetas[i]), q[i].abs())).collect();
    shape.sort();
    let long = |c| (true, c);
    let short = |c| (false, c);
    match shape.as_slice() {
        [(_, c)] if *c == one => Some(Case::A1),
        [a, b, c, d] if [a, b, c, d].iter().all(|x| x.1 == half && x.0 == a.0) => Some(Case::D4),
        [x, y, z] if *x == short(one) && *y == long(half) && *z == long(half) => Some(Case::B3),
        [x, y, z] if *x == short(half) && *y == short(half) && *z == long(half) => Some(Case::C3),
        [x, y] if *x == short(one) && *y == short(one) => Some(Case::B2long),
        [x, y] if *x == long(half) && *y == long(half) => Some(Case::B2short),
        [x, y] if *y == long(half) && (*x == short(three_halves) || *x == short(half)) => Some(Case::G2both),
        _ => None,
    }
}

/// Reference diagrams `(norms, bonds)` with short roots of squared length 2.
fn reference_diagrams() -> Vec<(Case, Vec<i64>, Vec<(usize, usize, i64)>)> {
    vec![
        (Case::A1, vec![2, 2], vec![(0, 1, -2)]),
        (Case::D4, vec![2, 2, 2, 2, 2], vec![(4, 0, -1), (4, 1, -1), (4, 2, -1), (4, 3, -1)]),
        (Case::B3, vec![4, 4, 4, 2], vec![(0, 2, -2), (1, 2, -2), (2, 3, -2)]),
        (Case::C3, vec![2, 2, 2, 4], vec![(0, 2, -1), (1, 2, -1), (2, 3, -2)]),
        (Case::B2long, vec![2, 4, 2], vec![(0, 1, -2), (1, 2, -2)]),
        (Case::B2short, vec![4, 2, 4], vec![(0, 1, -2), (1, 2, -2)]),
        (Case::G2both, vec![6, 6, 2], vec![(0, 1, -3), (1, 2, -3)]),
        (Case::G2both, vec![2, 2, 6], vec![(0, 1, -1), (1, 2, -3)]),
    ]
}

fn cartan_of(norms: &[i64], gram: &dyn Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    let k = norms.len();
    (0..k).map(|a| (0..k).map(|b| 2 * gram(a, b) / norms[b]).collect()).collect()
}

fn same_up_to_permutation(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = perm.len();
        if k == a.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] {
                continue;
            }
            let ok = (0..k).all(|x| a[x][k] == b[perm[x]][c] && a[k][x] == b[c][perm[x]]) && a[k][k] == b[c][c];
            if ok {
                used[c] = true;
                perm.push(c);
                if go(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    a.len() == b.len() && go(a, b, &mut Vec::new(), &mut vec![false; a.len()])
}

fn case_by_diagram(set: &OrthogonalSet, q: &[Rational64], support: &[usize]) -> Option<Case> {
    let sys = &set.system;
    // Reflecting in θ_i flips the sign of q_i, so take all coefficients positive.
    let mut r: Vec<Vec<i64>> = support
        .iter()
        .map(|&i| {
            let sign = if q[i].is_negative() { -1 } else { 1 };
            set.thetas[i].coords().iter().map(|c| sign * c).collect()
        })
        .collect();
    // The same reflections send β to Σ |q_i| θ_i.
    let mut beta_pos = vec![Rational64::zero(); sys.rank()];
    for (&i, v) in support.iter().zip(&r) {
        for (x, &y) in beta_pos.iter_mut().zip(v) {
            *x += q[i].abs() * Rational64::from_integer(y);
        }
    }
    if !beta_pos.iter().all(Rational64::is_integer) {
        return None;
    }
    let beta_pos: Vec<i64> = beta_pos.iter().map(Rational64::to_integer).collect();
    if !sys.is_root(&beta_pos) {
        return None;
    }
    r.push(beta_pos.iter().map(|c| -c).collect());
    let norms: Vec<i64> = r.iter().map(|v| sys.inner(v, v)).collect();
    let actual = cartan_of(&norms, &|a, b| sys.inner(&r[a], &r[b]));
    reference_diagrams().into_iter().find_map(|(case, ref_norms, bonds)| {
        let k = ref_norms.len();
        let mut gram = vec![vec![0; k]; k];
        for (a, n) in ref_norms.iter().enumerate() {
            gram[a][a] = *n;
        }
        for &(a, b, ip) in &bonds {
            gram[a][b] = ip;
            gram[b][a] = ip;
        }
        let reference = cartan_of(&ref_norms, &|a, b| gram[a][b]);
        same_up_to_permutation(&actual, &reference).then_some(case)
    })
}

/// Serializes rationals as strings such as `"1/2"`.
pub(crate) mod ratio_strings {
    use num_rational::Rational64;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational64>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter().map(|s| s.parse::<Rational64>().map_err(D::Error::custom)).collect()
    }
}
