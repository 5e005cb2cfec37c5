//! Heights of `Σ θ_i^∨` and the sphericality test.

use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::involution::{levi_and_involution, InvolutionReport};
use super::{classify_combination, rational_orthogonality, Case, CaseLabel, OrthogonalSet};
use crate::error::{Error, Result};
use crate::root_system::{Coweight, Family, Root, RootSystem};

/// Repeatedly drops `θ_j` from the first pair `i < j` with `θ_i − θ_j ∈ Φ`.
///
/// The condition is symmetric in `i` and `j`, so the later entry is the one
/// removed. Each step keeps the orbit of `Σ e_θ` unchanged.
pub fn reduce_b2long(set: &OrthogonalSet) -> OrthogonalSet {
    let sys = set.system();
    let mut keep: Vec<usize> = (0..set.len()).collect();
    'outer: loop {
        for a in 0..keep.len() {
            for b in a + 1..keep.len() {
                let (x, y) = (&set.thetas()[keep[a]], &set.thetas()[keep[b]]);
                let diff: Vec<i64> = x.coords().iter().zip(y.coords()).map(|(p, q)| p - q).collect();
                if sys.is_root(&diff) {
                    keep.remove(b);
                    continue 'outer;
                }
            }
        }
        return set.subset(&keep);
    }
}

/// Every root of the span other than `±θ_i`, classified.
pub fn classified_offenders(set: &OrthogonalSet) -> Result<Vec<CaseLabel>> {
    rational_orthogonality(set)?.1.iter().map(|o| classify_combination(set, &o.root)).collect()
}

/// The height `⟨θ, h⟩` of the dominant translate of `h = Σ θ_i^∨` over the
/// B2-long-reduced set, where `θ` is the highest root.
pub fn height_of_sum(set: &OrthogonalSet) -> Result<i64> {
    let reduced = reduce_b2long(set);
    for label in classified_offenders(&reduced)? {
        if label.coefficients.iter().all(Rational64::is_integer) {
            return Err(Error::Internal(format!(
                "{} is an integral combination of the reduced set {reduced}",
                label.beta
            )));
        }
    }
    Ok(dominant_height(&reduced))
}

fn dominant_height(set: &OrthogonalSet) -> i64 {
    let sys = set.system();
    let (dom, _) = sys.dominantize(&set.coweight());
    dom.eval(sys.highest_root().coords())
}

/// Sphericality decided by the height bound and, separately, by the
/// configurations of roots present in the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalVerdict {
    pub height: i64,
    pub by_height: bool,
    pub by_pattern: bool,
}

impl SphericalVerdict {
    pub fn spherical(&self) -> bool {
        self.by_height
    }
}

/// Errors if the two tests disagree.
pub fn is_spherical(set: &OrthogonalSet) -> Result<SphericalVerdict> {
    let height = height_of_sum(set)?;
    let by_height = height <= 3;
    let by_pattern = !has_obstruction(set)?;
    if by_height != by_pattern {
        return Err(Error::Internal(format!(
            "sphericality of {set}: height {height} disagrees with the pattern test"
        )));
    }
    Ok(SphericalVerdict { height, by_height, by_pattern })
}

fn has_obstruction(set: &OrthogonalSet) -> Result<bool> {
    let labels = classified_offenders(set)?;
    let any = |c: Case| labels.iter().any(|l| l.case == c);
    Ok(match set.system().family() {
        Family::A | Family::C => false,
        Family::D | Family::E => any(Case::D4),
        Family::B | Family::F => any(Case::B3) || two_disjoint(&b2short_pairs(&labels)),
        Family::G => any(Case::G2both),
    })
}

fn b2short_pairs(labels: &[CaseLabel]) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> =
        labels.iter().filter(|l| l.case == Case::B2short).map(|l| (l.support[0], l.support[1])).collect();
    pairs.sort();
    pairs.dedup();
    pairs
}

fn two_disjoint(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().enumerate().any(|(k, &(a, b))| pairs[k + 1..].iter().any(|&(c, d)| a != c && a != d && b != c && b != d))
}

/// Height classes in type B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TypeBHeight {
    Two,
    Three,
    AtLeastFour,
}

impl TypeBHeight {
    pub fn from_height(h: i64) -> Self {
        match h {
            ..=2 => TypeBHeight::Two,
            3 => TypeBHeight::Three,
            _ => TypeBHeight::AtLeastFour,
        }
    }
}

/// The height class in type B read off from root lengths and B2-short pairs.
pub fn type_b_height(set: &OrthogonalSet) -> Result<TypeBHeight> {
    let sys = set.system();
    if sys.family() != Family::B {
        return Err(Error::Mismatch);
    }
    let long = set.thetas().iter().filter(|t| sys.is_long(t)).count();
    let r = set.len();
    let pairs = b2short_pairs(&classified_offenders(set)?).len();
    Ok(if long == 0 {
        TypeBHeight::Two
    } else if long == r && (r == 2 || pairs == 0) {
        TypeBHeight::Two
    } else if long < r && pairs == 0 {
        TypeBHeight::Three
    } else if long == r && r >= 3 && pairs == 1 {
        TypeBHeight::Three
    } else {
        TypeBHeight::AtLeastFour
    })
}

/// All nonempty orthogonal sets of positive roots, each listed once with
/// increasing root indices.
pub fn enumerate_orthogonal_sets(system: &Arc<RootSystem>) -> Vec<OrthogonalSet> {
    let pos = system.positive_roots();
    let n = pos.len();
    let ortho: Vec<Vec<bool>> =
        (0..n).map(|a| (0..n).map(|b| system.inner(pos[a].coords(), pos[b].coords()) == 0).collect()).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn go(
        start: usize,
        ortho: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        for c in start..ortho.len() {
            if chosen.iter().all(|&x| ortho[x][c]) {
                chosen.push(c);
                emit(chosen);
                go(c + 1, ortho, chosen, emit);
                chosen.pop();
            }
        }
    }
    go(0, &ortho, &mut chosen, &mut |idx| {
        let thetas = idx.iter().map(|&i| pos[i].clone()).collect();
        out.push(OrthogonalSet::new(system, thetas).expect("pairwise orthogonal by construction"));
    });
    out
}

/// Everything computed about one orthogonal set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub system: String,
    pub thetas: Vec<Root>,
    pub rationally_orthogonal: bool,
    pub combinations: Vec<CaseLabel>,
    pub reduced: Vec<Root>,
    /// `Σ θ^∨` over the reduced set.
    pub coweight: Coweight,
    pub dominant: Coweight,
    pub dominant_expr: String,
    pub dominant_word: Vec<usize>,
    pub height: i64,
    pub spherical: bool,
    /// The reduced set moved so that its coweight is dominant.
    pub translated: Vec<Root>,
    /// Computed for `translated`.
    pub involution: InvolutionReport,
}

pub fn classify(set: &OrthogonalSet) -> Result<ClassificationReport> {
    let sys = set.system();
    let combinations = classified_offenders(set)?;
    let verdict = is_spherical(set)?;
    let reduced = reduce_b2long(set);
    let (dominant, dominant_word) = sys.dominantize(&reduced.coweight());
    let (translated, _) = reduced.translate_to_dominant()?;
    Ok(ClassificationReport {
        system: sys.label(),
        thetas: set.thetas().to_vec(),
        rationally_orthogonal: combinations.is_empty(),
        combinations,
        reduced: reduced.thetas().to_vec(),
        coweight: reduced.coweight(),
        dominant_expr: dominant.fundamental_expr(),
        dominant,
        dominant_word,
        height: verdict.height,
        spherical: verdict.spherical(),
        involution: levi_and_involution(&translated)?,
        translated: translated.thetas().to_vec(),
    })
}
