//! The Levi subsystem of `h = Σ θ_i^∨`, the involution `σ = s_{θ_1} ⋯ s_{θ_r}`
//! on it, and the grading of the Lie algebra by `h`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::OrthogonalSet;
use crate::error::Result;
use crate::root_system::{Coweight, Root, RootSystem};

/// How `σ` acts on one simple root of the Levi subsystem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimpleRootAction {
    Fixed,
    /// `σ(α_i) = −α_j` for a Levi simple root `α_j`, `j ≠ i`.
    NegatedSwap(usize),
    Other,
}

/// How `σ` acts on one connected component of the Levi diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentAction {
    Fixed,
    /// Swapped with the component at this position in the component list.
    Paired(usize),
    /// Sent to minus itself through a diagram automorphism.
    Twisted,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviComponent {
    pub indices: Vec<usize>,
    pub dynkin_type: String,
    pub action: ComponentAction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionReport {
    /// 1-based simple indices with `⟨α_i, h⟩ = 0`.
    pub levi: Vec<usize>,
    pub levi_type: String,
    /// `(i, σ(α_i), action)` for each Levi simple root.
    pub images: Vec<(usize, Root, SimpleRootAction)>,
    pub components: Vec<LeviComponent>,
    /// Fixed components, plus one diagonal copy per swapped pair.
    pub folded_type: String,
}

pub fn levi_and_involution(set: &OrthogonalSet) -> Result<InvolutionReport> {
    let sys = set.system();
    let h = set.coweight();
    let levi: Vec<usize> = (1..=sys.rank()).filter(|&i| h.coords()[i - 1] == 0).collect();
    let mut images = Vec::new();
    for &i in &levi {
        let mut v = sys.simple_root(i)?.coords().to_vec();
        for t in set.thetas() {
            v = sys.reflect_vector(&v, t)?;
        }
        let image = sys.expect_root(&v)?;
        let action = if v == sys.simple_root(i)?.coords() {
            SimpleRootAction::Fixed
        } else {
            let neg = image.negate();
            match levi.iter().find(|&&j| j != i && sys.simple_root(j).map(|a| a == neg).unwrap_or(false)) {
                Some(&j) => SimpleRootAction::NegatedSwap(j),
                None => SimpleRootAction::Other,
            }
        };
        images.push((i, image, action));
    }

    let comps = components(sys, &levi);
    let which = |j: usize| comps.iter().position(|c| c.contains(&j));
    let mut out = Vec::new();
    for c in &comps {
        let acts: Vec<&SimpleRootAction> =
            c.iter().map(|i| &images.iter().find(|(k, _, _)| k == i).expect("levi index").2).collect();
        let action = if acts.iter().all(|a| **a == SimpleRootAction::Fixed) {
            ComponentAction::Fixed
        } else if acts.iter().all(|a| matches!(a, SimpleRootAction::NegatedSwap(_))) {
            let targets: Vec<Option<usize>> = acts
                .iter()
                .map(|a| match a {
                    SimpleRootAction::NegatedSwap(j) => which(*j),
                    _ => None,
                })
                .collect();
            let own = which(c[0]);
            match targets[0] {
                Some(t) if targets.iter().all(|x| *x == Some(t)) && Some(t) == own => ComponentAction::Twisted,
                Some(t) if targets.iter().all(|x| *x == Some(t)) => ComponentAction::Paired(t),
                _ => ComponentAction::Other,
            }
        } else {
            ComponentAction::Other
        };
        out.push(LeviComponent { indices: c.clone(), dynkin_type: component_type(sys, c), action });
    }

    let mut folded = Vec::new();
    for (k, c) in out.iter().enumerate() {
        match c.action {
            ComponentAction::Fixed => folded.push(c.dynkin_type.clone()),
            ComponentAction::Paired(t) if t > k => folded.push(format!("{}(diag)", c.dynkin_type)),
            ComponentAction::Paired(_) => {}
            ComponentAction::Twisted => folded.push(format!("{}(twisted)", c.dynkin_type)),
            ComponentAction::Other => folded.push(format!("{}(?)", c.dynkin_type)),
        }
    }
    Ok(InvolutionReport {
        levi_type: join_types(out.iter().map(|c| c.dynkin_type.clone()).collect()),
        levi,
        images,
        components: out,
        folded_type: join_types(folded),
    })
}

fn join_types(parts: Vec<String>) -> String {
    if parts.is_empty() {
        "trivial".to_string()
    } else {
        parts.join(" x ")
    }
}

/// Connected components of the Dynkin diagram restricted to `indices` (1-based).
fn components(sys: &RootSystem, indices: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; indices.len()];
    let mut out = Vec::new();
    for s in 0..indices.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![indices[s]];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for (t, &v) in indices.iter().enumerate() {
                if !seen[t] && sys.cartan(u - 1, v - 1) != 0 {
                    seen[t] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Dynkin types of the components of the subdiagram on `indices`, such as `"A2 x A1"`.
pub fn dynkin_type(sys: &RootSystem, indices: &[usize]) -> String {
    join_types(components(sys, indices).iter().map(|c| component_type(sys, c)).collect())
}

fn component_type(sys: &RootSystem, comp: &[usize]) -> String {
    let n = comp.len();
    let bond = |u: usize, v: usize| sys.cartan(u - 1, v - 1) * sys.cartan(v - 1, u - 1);
    let neighbours = |u: usize| comp.iter().copied().filter(|&v| v != u && bond(u, v) != 0).collect::<Vec<_>>();
    let mut multi = None;
    for (a, &u) in comp.iter().enumerate() {
        for &v in &comp[a + 1..] {
            if bond(u, v) > 1 {
                multi = Some((u, v, bond(u, v)));
            }
        }
    }
    let norm = |u: usize| sys.norm(&sys.simple_root(u).expect("valid index"));
    match multi {
        Some((_, _, 3)) => "G2".to_string(),
        Some(_) if n == 2 => "B2".to_string(),
        Some((u, v, _)) => {
            if n == 4 && neighbours(u).len() == 2 && neighbours(v).len() == 2 {
                return "F4".to_string();
            }
            let leaf = if neighbours(u).len() == 1 { u } else { v };
            let other = if leaf == u { v } else { u };
            if norm(leaf) < norm(other) {
                format!("B{n}")
            } else {
                format!("C{n}")
            }
        }
        None => {
            let Some(&branch) = comp.iter().find(|&&u| neighbours(u).len() == 3) else {
                return format!("A{n}");
            };
            let mut legs: Vec<usize> = neighbours(branch)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, k] => format!("D{}", k + 3),
                [1, 2, k] => format!("E{}", k + 4),
                _ => format!("?{n}"),
            }
        }
    }
}

/// `dim g_k` for the grading by `h`: root counts per degree, plus the rank in degree 0.
pub fn grading_dimensions(sys: &RootSystem, h: &Coweight) -> BTreeMap<i64, usize> {
    let mut dims = BTreeMap::new();
    dims.insert(0, sys.rank());
    for r in sys.roots() {
        *dims.entry(h.eval(r.coords())).or_insert(0) += 1;
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, Family};

    #[test]
    fn dynkin_types_of_full_diagrams() {
        for (f, n, want) in [
            (Family::A, 4, "A4"),
            (Family::B, 4, "B4"),
            (Family::C, 4, "C4"),
            (Family::B, 2, "B2"),
            (Family::D, 5, "D5"),
            (Family::D, 4, "D4"),
            (Family::E, 6, "E6"),
            (Family::E, 7, "E7"),
            (Family::E, 8, "E8"),
            (Family::F, 4, "F4"),
            (Family::G, 2, "G2"),
        ] {
            let sys = build_root_system(f, n).unwrap();
            let all: Vec<usize> = (1..=n).collect();
            assert_eq!(dynkin_type(&sys, &all), want);
        }
        let e7 = build_root_system(Family::E, 7).unwrap();
        assert_eq!(dynkin_type(&e7, &[2, 3, 4, 5, 7]), "D4 x A1");
        assert_eq!(dynkin_type(&e7, &[]), "trivial");
    }

    fn type_a_set(l: usize, r: usize) -> OrthogonalSet {
        let sys = build_root_system(Family::A, l).unwrap();
        let thetas = (1..=r)
            .map(|i| {
                let c: Vec<i64> = (1..=l).map(|k| i64::from(k >= i && k <= l + 1 - i)).collect();
                sys.expect_root(&c).unwrap()
            })
            .collect();
        OrthogonalSet::new(&sys, thetas).unwrap()
    }

    #[test]
    fn type_a_nested_roots() {
        for (l, r) in [(3, 1), (5, 2), (7, 3), (6, 2), (5, 3)] {
            let set = type_a_set(l, r);
            let mut want = Coweight::fundamental(l, r);
            if l + 1 - r != r {
                want = want.add(&Coweight::fundamental(l, l + 1 - r));
            } else {
                want = want.scale(2);
            }
            assert_eq!(set.coweight(), want);
            let rep = levi_and_involution(&set).unwrap();
            let expect_levi: Vec<usize> = (1..=l).filter(|&i| i != r && i != l + 1 - r).collect();
            assert_eq!(rep.levi, expect_levi, "l={l} r={r}");
            for (i, _, act) in &rep.images {
                if *i < r || *i > l + 1 - r {
                    assert_eq!(*act, SimpleRootAction::NegatedSwap(l + 1 - i));
                } else {
                    assert_eq!(*act, SimpleRootAction::Fixed);
                }
            }
        }
        assert_eq!(levi_and_involution(&type_a_set(7, 3)).unwrap().folded_type, "A2(diag) x A1");
        assert_eq!(levi_and_involution(&type_a_set(3, 1)).unwrap().folded_type, "A1");
    }

    #[test]
    fn grading_of_type_a() {
        for (l, r) in [(3, 1), (5, 2), (4, 2), (6, 3)] {
            let sys = build_root_system(Family::A, l).unwrap();
            let dims = grading_dimensions(&sys, &Coweight::fundamental(l, r));
            let (n, r) = (l + 1, r);
            assert_eq!(dims[&0], (n - r) * (n - r) + r * r - 1);
            assert_eq!(dims[&1], r * (n - r));
            assert_eq!(dims.len(), 3);
        }
    }

    #[test]
    fn e6_three_roots() {
        let e6 = build_root_system(Family::E, 6).unwrap();
        let set = OrthogonalSet::from_coords(&e6, &[vec![1, 2, 2, 3, 2, 1], vec![1, 0, 1, 1, 1, 1], vec![0, 0, 1, 1, 1, 0]])
            .unwrap();
        assert_eq!(set.coweight(), Coweight::new(vec![0, -1, 1, 0, 1, 0]));
        let (moved, word) = set.translate_to_dominant().unwrap();
        assert_eq!(word, vec![2, 4]);
        assert_eq!(moved.coweight(), Coweight::fundamental(6, 4));
        let rep = levi_and_involution(&moved).unwrap();
        assert_eq!(rep.levi, vec![1, 2, 3, 5, 6]);
        let act = |i: usize| rep.images.iter().find(|x| x.0 == i).unwrap().2.clone();
        assert_eq!(act(1), SimpleRootAction::NegatedSwap(6));
        assert_eq!(act(3), SimpleRootAction::NegatedSwap(5));
        assert_eq!(act(2), SimpleRootAction::Fixed);
        assert_eq!(rep.levi_type, "A2 x A1 x A2");
        assert_eq!(rep.folded_type, "A2(diag) x A1");
    }
}
