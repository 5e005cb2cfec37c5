//! Oriented link patterns and the closure order on Borel orbits of
//! square-zero matrices.
//!
//! Vertices are `1..=n`. The flag is `V_j = span(ε_1, …, ε_j)`, and
//! `M_d(ε_i) = ε_j` for each arrow `i → j`. Permutations are in one-line
//! notation, `line[i - 1] = w(i)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::quotient::IJKDatum;
use crate::weyl::{check_permutation, DEFAULT_CAP};

/// A directed graph on `1..=n` in which every vertex meets at most one arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternJson", into = "PatternJson")]
pub struct OrientedLinkPattern {
    n: usize,
    /// Arrows `(source, target)`, sorted.
    arrows: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    arrows: Vec<[usize; 2]>,
}

impl TryFrom<PatternJson> for OrientedLinkPattern {
    type Error = Error;

    fn try_from(p: PatternJson) -> Result<Self> {
        OrientedLinkPattern::new(p.n, p.arrows.iter().map(|a| (a[0], a[1])).collect())
    }
}

impl From<OrientedLinkPattern> for PatternJson {
    fn from(d: OrientedLinkPattern) -> Self {
        PatternJson { n: d.n, arrows: d.arrows.iter().map(|&(s, t)| [s, t]).collect() }
    }
}

impl fmt::Display for OrientedLinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}->{t}")).collect();
        write!(f, "{{{}}}", arrows.join(", "))
    }
}

impl OrientedLinkPattern {
    pub fn new(n: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        for &(s, t) in &arrows {
            if s == t || s == 0 || t == 0 || s > n || t > n {
                return Err(Error::InvalidPattern(format!("bad arrow {s}->{t} on {n} vertices")));
            }
            for v in [s, t] {
                if std::mem::replace(&mut used[v], true) {
                    return Err(Error::InvalidPattern(format!("vertex {v} meets two arrows")));
                }
            }
        }
        arrows.sort_unstable();
        Ok(OrientedLinkPattern { n, arrows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arrows.
    pub fn r(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// The image `t·d` under a permutation of the vertices.
    pub fn permute_vertices(&self, t: impl Fn(usize) -> usize) -> OrientedLinkPattern {
        let arrows = self.arrows.iter().map(|&(s, e)| (t(s), t(e))).collect();
        OrientedLinkPattern::new(self.n, arrows).expect("vertex permutations preserve patterns")
    }

    /// `M_d`, with column `i` equal to `ε_j` for each arrow `i → j`.
    pub fn matrix(&self) -> NilpotentMatrix {
        let mut entries = vec![vec![0; self.n]; self.n];
        for &(s, t) in &self.arrows {
            entries[t - 1][s - 1] = 1;
        }
        NilpotentMatrix { entries }
    }

    /// `p_ℓ`: vertices `≤ ℓ` that are not the source of an arrow.
    pub fn p_stat(&self, l: usize) -> Result<usize> {
        if l == 0 || l > self.n {
            return Err(Error::IndexOutOfRange { index: l, rank: self.n });
        }
        Ok(l - self.arrows.iter().filter(|&&(s, _)| s <= l).count())
    }

    /// `q_{k,ℓ} = p_ℓ + #{arrows with source ≤ ℓ and target ≤ k}`.
    pub fn q_stat(&self, k: usize, l: usize) -> Result<usize> {
        if k > self.n {
            return Err(Error::IndexOutOfRange { index: k, rank: self.n });
        }
        Ok(self.p_stat(l)? + self.arrows.iter().filter(|&&(s, t)| s <= l && t <= k).count())
    }

    /// `q_{k,ℓ}` as `dim(V_ℓ ∩ ker M) + dim(M(V_ℓ) ∩ V_k)`.
    pub fn q_stat_linear(&self, k: usize, l: usize) -> Result<usize> {
        if k > self.n || l == 0 || l > self.n {
            return Err(Error::IndexOutOfRange { index: k.max(l), rank: self.n });
        }
        let m = self.matrix();
        let image = m.columns(l);
        let rank_image = linalg::rank(&image);
        let mut joined = image;
        joined.extend(unit_vectors(self.n, k));
        let rank_sum = linalg::rank(&joined);
        Ok((l - rank_image) + (rank_image + k - rank_sum))
    }

    /// The sequence `S`: entry `i` is `j` for an arrow `i → j`, else 0.
    pub fn seq_s(&self) -> SeqS {
        let mut s = vec![0; self.n];
        for &(src, t) in &self.arrows {
            s[src - 1] = t;
        }
        SeqS(s)
    }
}

fn unit_vectors(n: usize, k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|j| {
            let mut v = vec![0; n];
            v[j] = 1;
            v
        })
        .collect()
}

/// A square-zero 0/1 matrix, `entries[row][column]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NilpotentMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl NilpotentMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// The first `i` columns, each as a vector.
    pub fn columns(&self, i: usize) -> Vec<Vec<i64>> {
        (0..i).map(|c| self.entries.iter().map(|row| row[c]).collect()).collect()
    }

    pub fn square(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.entries[i][k] * self.entries[k][j]).sum()).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    /// `r(i, j, y) = dim(y(V_i) + V_j)`.
    pub fn rank_stat(&self, i: usize, j: usize) -> usize {
        let mut vecs = self.columns(i);
        vecs.extend(unit_vectors(self.n(), j));
        linalg::rank(&vecs)
    }
}

/// The sequence `S_w` attached to a pattern or permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeqS(pub Vec<usize>);

impl fmt::Display for SeqS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl SeqS {
    /// Number of nonzero entries among the first `i` that exceed `j`.
    pub fn count_above(&self, i: usize, j: usize) -> usize {
        self.0[..i].iter().filter(|&&k| k != 0 && k > j).count()
    }
}

fn check_nr(n: usize, r: usize) -> Result<()> {
    if 2 * r > n {
        Err(Error::InvalidPattern(format!("need 2r ≤ n, got n={n}, r={r}")))
    } else {
        Ok(())
    }
}

/// `d_w`: arrows `w(n-r+i) → w(i)` for `1 ≤ i ≤ r`.
pub fn olp_from_perm(line: &[usize], n: usize, r: usize) -> Result<OrientedLinkPattern> {
    check_nr(n, r)?;
    check_permutation(line, n)?;
    let arrows = (1..=r).map(|i| (line[n - r + i - 1], line[i - 1])).collect();
    OrientedLinkPattern::new(n, arrows)
}

/// The unique `w` with `w(r+1) < … < w(n-r)` and `w(n-r+1) < … < w(n)`
/// such that `d_w = d`.
pub fn perm_from_olp(d: &OrientedLinkPattern) -> Vec<usize> {
    let (n, r) = (d.n, d.r());
    let mut line = vec![0; n];
    // Arrows are sorted by source.
    for (i, &(s, t)) in d.arrows.iter().enumerate() {
        line[n - r + i] = s;
        line[i] = t;
    }
    let mut used = vec![false; n + 1];
    for &(s, t) in &d.arrows {
        used[s] = true;
        used[t] = true;
    }
    let free = (1..=n).filter(|&v| !used[v]);
    for (slot, v) in (r..n - r).zip(free) {
        line[slot] = v;
    }
    line
}

/// `S_w`: position `w(i)` holds `w(i - (n-r))` for `n-r < i ≤ n`.
pub fn seq_s(line: &[usize], n: usize, r: usize) -> Result<SeqS> {
    check_nr(n, r)?;
    check_permutation(line, n)?;
    let mut s = vec![0; n];
    for i in n - r + 1..=n {
        s[line[i - 1] - 1] = line[i - (n - r) - 1];
    }
    Ok(SeqS(s))
}

fn same_size(a: &OrientedLinkPattern, b: &OrientedLinkPattern) -> Result<()> {
    if a.n == b.n {
        Ok(())
    } else {
        Err(Error::InvalidPattern(format!("patterns on {} and {} vertices", a.n, b.n)))
    }
}

/// `d' ≤_D d`: `q_{k,ℓ}^d ≤ q_{k,ℓ}^{d'}` for all `0 ≤ k ≤ n`, `1 ≤ ℓ ≤ n`.
pub fn leq_d(lower: &OrientedLinkPattern, upper: &OrientedLinkPattern) -> Result<bool> {
    same_size(lower, upper)?;
    let n = lower.n;
    for l in 1..=n {
        for k in 0..=n {
            if upper.q_stat(k, l)? > lower.q_stat(k, l)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `r(i, j, M_{d'}) ≤ r(i, j, M_d)` for all `1 ≤ i ≤ n`, `0 ≤ j ≤ n`.
pub fn leq_rank(lower: &OrientedLinkPattern, upper: &OrientedLinkPattern) -> Result<bool> {
    same_size(lower, upper)?;
    let (ml, mu) = (lower.matrix(), upper.matrix());
    let n = lower.n;
    Ok((1..=n).all(|i| (0..=n).all(|j| ml.rank_stat(i, j) <= mu.rank_stat(i, j))))
}

/// Comparison of truncated sequences: for all `i` and `j ≥ 0`, `S'^i` has
/// at most as many entries above `j` as `S^i`.
pub fn leq_seq(lower: &SeqS, upper: &SeqS) -> Result<bool> {
    if lower.0.len() != upper.0.len() {
        return Err(Error::InvalidPattern("sequences of different lengths".into()));
    }
    let n = lower.0.len();
    Ok((1..=n).all(|i| (0..=n).all(|j| lower.count_above(i, j) <= upper.count_above(i, j))))
}

/// Dimension of the Borel orbit of `M_d`: the rank of `x ↦ xM − Mx` on
/// upper-triangular matrices.
pub fn orbit_dimension(d: &OrientedLinkPattern) -> usize {
    let n = d.n;
    let m = d.matrix().entries;
    let mut images = Vec::with_capacity(n * (n + 1) / 2);
    for a in 0..n {
        for b in a..n {
            // x = E_ab: (xM)_{ij} = δ_{ia} M_{bj}, (Mx)_{ij} = M_{ia} δ_{bj}.
            let mut v = vec![0i64; n * n];
            for j in 0..n {
                v[a * n + j] += m[b][j];
            }
            for i in 0..n {
                v[i * n + b] -= m[i][a];
            }
            images.push(v);
        }
    }
    linalg::rank(&images)
}

/// `|D_{n,r}| = n! / (r! (n-2r)!)`.
pub fn count_patterns(n: usize, r: usize) -> Result<u128> {
    check_nr(n, r)?;
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    Ok(fact(n) / (fact(r) * fact(n - 2 * r)))
}

/// All patterns on `n` vertices with exactly `r` arrows, sorted.
pub fn enumerate_patterns(n: usize, r: usize) -> Result<Vec<OrientedLinkPattern>> {
    check_nr(n, r)?;
    fn go(
        v: usize,
        n: usize,
        left: usize,
        used: &mut Vec<bool>,
        arrows: &mut Vec<(usize, usize)>,
        out: &mut Vec<OrientedLinkPattern>,
    ) {
        if left == 0 {
            out.push(OrientedLinkPattern::new(n, arrows.clone()).unwrap());
            return;
        }
        if v > n {
            return;
        }
        if used[v] {
            go(v + 1, n, left, used, arrows, out);
            return;
        }
        go(v + 1, n, left, used, arrows, out);
        used[v] = true;
        for u in v + 1..=n {
            if used[u] {
                continue;
            }
            used[u] = true;
            for arrow in [(v, u), (u, v)] {
                arrows.push(arrow);
                go(v + 1, n, left - 1, used, arrows, out);
                arrows.pop();
            }
            used[u] = false;
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    go(1, n, r, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Strong Bruhat order on permutations by the tableau criterion.
pub fn tableau_leq(x: &[usize], y: &[usize]) -> bool {
    assert_eq!(x.len(), y.len(), "permutations of different sizes");
    (1..=x.len()).all(|i| {
        let mut a = x[..i].to_vec();
        let mut b = y[..i].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(p, q)| p <= q)
    })
}

/// The kind of elementary move relating the two ends of a cover `d' ⋖_D d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoverMove {
    /// One arrow reversed.
    Flip,
    /// Three vertices involved, related by a vertex transposition.
    ThreeVertex,
    /// Four vertices involved, related by a vertex transposition.
    FourVertex,
}

/// A transposition `(a, b)` of vertices realising a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveWitness {
    pub kind: CoverMove,
    pub a: usize,
    pub b: usize,
}

/// Classifies how `lower` arises from `upper` by a vertex transposition
/// `(a, b)` supported on the vertices where the patterns differ. Returns
/// every transposition that works; the list is empty when none does.
pub fn classify_cover_move(lower: &OrientedLinkPattern, upper: &OrientedLinkPattern) -> Result<Vec<MoveWitness>> {
    same_size(lower, upper)?;
    let role = |d: &OrientedLinkPattern| {
        let mut m = BTreeMap::new();
        for &(s, t) in &d.arrows {
            m.insert(s, (1i8, t));
            m.insert(t, (-1i8, s));
        }
        m
    };
    let (rl, ru) = (role(lower), role(upper));
    let support: Vec<usize> = (1..=lower.n).filter(|v| rl.get(v) != ru.get(v)).collect();
    let kind = match support.len() {
        2 => CoverMove::Flip,
        3 => CoverMove::ThreeVertex,
        4 => CoverMove::FourVertex,
        _ => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    for (x, &a) in support.iter().enumerate() {
        for &b in &support[x + 1..] {
            let swapped = upper.permute_vertices(|v| if v == a { b } else if v == b { a } else { v });
            if &swapped == lower {
                out.push(MoveWitness { kind, a, b });
            }
        }
    }
    Ok(out)
}

/// Parameters of the Z-orbit on the flag variety matching `B·w·e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPair {
    /// `w ∈ W(I,J,K)` in line notation.
    pub w: Vec<usize>,
    /// `w1⁻¹` for `w = w1·w2`, `w1 ∈ W^{I∪J∪K}`.
    pub w1_inv: Vec<usize>,
    /// `w2⁻¹`, with `w2 ∈ W_I`.
    pub w2_inv: Vec<usize>,
    /// `ℓ(w1) + ℓ(w2) + r(r-1)/2 + (n-2r)(n-2r-1)/2`.
    pub dimension: usize,
}

/// One row of the type-A orbit table for `(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub w: Vec<usize>,
    pub word: Vec<usize>,
    pub pattern: OrientedLinkPattern,
    pub seq: SeqS,
    pub length: usize,
    pub b_orbit_dimension: usize,
    pub z_orbit: OrbitPair,
}

/// The orbit table over `W(I,J,K)` for square-zero matrices of rank `r`,
/// ordered by length then canonical word.
pub fn orbit_table(n: usize, r: usize) -> Result<Vec<OrbitRow>> {
    let datum = IJKDatum::type_a(n, r)?;
    let extra = r * r.saturating_sub(1) / 2 + (n - 2 * r) * (n - 2 * r).saturating_sub(1) / 2;
    datum
        .elements(DEFAULT_CAP)?
        .into_iter()
        .map(|q| {
            let w = q.rep.to_line_notation()?;
            let pattern = olp_from_perm(&w, n, r)?;
            Ok(OrbitRow {
                seq: seq_s(&w, n, r)?,
                b_orbit_dimension: orbit_dimension(&pattern),
                pattern,
                length: q.length(),
                word: q.word(),
                z_orbit: OrbitPair {
                    w: w.clone(),
                    w1_inv: q.w1.inverse().to_line_notation()?,
                    w2_inv: q.w2.inverse().to_line_notation()?,
                    dimension: q.w1.length() + q.w2.length() + extra,
                },
                w,
            })
        })
        .collect()
}

/// Z-orbit parameters `(w1⁻¹, w2⁻¹)` and dimensions for every `w ∈ W(I,J,K)`.
pub fn orbit_pair_params(n: usize, r: usize) -> Result<Vec<OrbitPair>> {
    Ok(orbit_table(n, r)?.into_iter().map(|row| row.z_orbit).collect())
}
