//! Chains of orthogonal roots built from highest roots of successive
//! orthogonal complements.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::root_system::{Coweight, Root, RootSystem};

use super::OrthogonalSet;

/// One node of the cascade tree. The root node has no `added` root and an
/// empty chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeNode {
    pub added: Option<Root>,
    pub chain: Vec<Root>,
    pub coweight: Coweight,
    pub dominant: Coweight,
    pub dominant_expr: String,
    pub children: Vec<CascadeNode>,
}

impl CascadeNode {
    /// Number of nodes in the subtree, this one included.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(CascadeNode::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| 1 + c.depth()).max().unwrap_or(0)
    }

    /// Depth-first walk, parents before children.
    pub fn walk(&self, f: &mut dyn FnMut(&CascadeNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    /// Child whose added root has these coordinates.
    pub fn child(&self, coords: &[i64]) -> Option<&CascadeNode> {
        self.children.iter().find(|c| c.added.as_ref().map(|r| r.coords() == coords).unwrap_or(false))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, indent: usize, out: &mut String) {
        let head = match &self.added {
            Some(r) => format!("{r}"),
            None => "root".to_string(),
        };
        out.push_str(&format!("{}{head}  h = {}\n", "  ".repeat(indent), self.dominant_expr));
        for c in &self.children {
            c.write_text(indent + 1, out);
        }
    }
}

/// The full cascade tree: each node branches over the irreducible
/// components of the roots orthogonal to its chain, adding the highest
/// root of the component.
pub fn chain_cascade(system: &Arc<RootSystem>) -> Result<CascadeNode> {
    chain_cascade_to_depth(system, usize::MAX)
}

pub fn chain_cascade_to_depth(system: &Arc<RootSystem>, max_depth: usize) -> Result<CascadeNode> {
    build(system, None, Vec::new(), max_depth)
}

fn build(system: &Arc<RootSystem>, added: Option<Root>, chain: Vec<Root>, budget: usize) -> Result<CascadeNode> {
    let set = OrthogonalSet::new(system, chain.clone())?;
    let coweight = set.coweight();
    let (dominant, _) = system.dominantize(&coweight);
    let mut children = Vec::new();
    if budget > 0 {
        for top in complement_tops(system, &chain) {
            let mut next = chain.clone();
            next.push(top.clone());
            children.push(build(system, Some(top), next, budget - 1)?);
        }
    }
    Ok(CascadeNode { added, chain, dominant_expr: dominant.fundamental_expr(), coweight, dominant, children })
}

/// Highest roots of the irreducible components of the positive roots
/// orthogonal to `chain`, largest first.
pub fn complement_tops(system: &RootSystem, chain: &[Root]) -> Vec<Root> {
    let perp: Vec<&Root> = system
        .positive_roots()
        .iter()
        .filter(|r| chain.iter().all(|t| system.inner(r.coords(), t.coords()) == 0))
        .collect();
    let mut comp = vec![usize::MAX; perp.len()];
    let mut tops = Vec::new();
    for s in 0..perp.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut stack = vec![s];
        let mut best = perp[s];
        while let Some(u) = stack.pop() {
            if perp[u].height() > best.height() {
                best = perp[u];
            }
            for v in 0..perp.len() {
                if comp[v] == usize::MAX && system.inner(perp[u].coords(), perp[v].coords()) != 0 {
                    comp[v] = s;
                    stack.push(v);
                }
            }
        }
        tops.push(best.clone());
    }
    tops.sort_by(|a, b| b.cmp(a));
    tops
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, Family};

    fn w(rank: usize, terms: &[(usize, i64)]) -> Coweight {
        let mut c = vec![0; rank];
        for &(i, k) in terms {
            c[i - 1] = k;
        }
        Coweight::new(c)
    }

    #[test]
    fn e7_cascade() {
        let e7 = build_root_system(Family::E, 7).unwrap();
        let tree = chain_cascade(&e7).unwrap();
        assert_eq!(tree.children.len(), 1);
        let n1 = &tree.children[0];
        assert_eq!(n1.added.as_ref().unwrap().coords(), &[2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(n1.dominant, w(7, &[(1, 1)]));
        assert_eq!(n1.children.len(), 1);
        let n2 = &n1.children[0];
        assert_eq!(n2.added.as_ref().unwrap().coords(), &[0, 1, 1, 2, 2, 2, 1]);
        assert_eq!(n2.dominant, w(7, &[(6, 1)]));
        // The complement of the first two roots is D4 x A1.
        assert_eq!(n2.children.len(), 2);
        let n3 = n2.child(&[0, 1, 1, 2, 1, 0, 0]).unwrap();
        assert_eq!(n3.dominant, w(7, &[(3, 1)]));
        let a7 = n2.child(&[0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(a7.dominant, w(7, &[(7, 2)]));
        let tops: Vec<Vec<i64>> = n3.children.iter().map(|c| c.added.as_ref().unwrap().coords().to_vec()).collect();
        for simple in [2, 3, 5, 7] {
            let mut v = vec![0; 7];
            v[simple - 1] = 1;
            assert!(tops.contains(&v), "missing α{simple}");
        }
        let via2 = n3.child(&[0, 1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(via2.coweight, w(7, &[(1, -1), (2, 2)]));
        assert_eq!(via2.dominant, w(7, &[(2, 1), (7, 1)]));
        let via5 = n3.child(&[0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(via5.coweight, w(7, &[(1, -1), (5, 2), (6, -1)]));
        assert_eq!(via5.dominant, via2.dominant);
        let via3 = n3.child(&[0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(via3.coweight, w(7, &[(1, -2), (3, 2)]));
        assert_eq!(via3.dominant, w(7, &[(1, 2)]));
        assert_eq!(via3.dominant.eval(e7.highest_root().coords()), 4);
    }

    #[test]
    fn type_a_cascade_is_a_chain() {
        let a5 = build_root_system(Family::A, 5).unwrap();
        let tree = chain_cascade(&a5).unwrap();
        assert_eq!(tree.depth(), 3);
        assert_eq!(tree.size(), 4);
    }
}
