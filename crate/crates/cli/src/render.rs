//! Plain-text rendering for the CLI.

use std::fmt::Write;

use coxorbit::link_pattern::{OrbitRow, SeqS};
use coxorbit::nilpotent::{CascadeNode, ClassificationReport, ComponentAction, SimpleRootAction};
use coxorbit::weyl::word_string;
use coxorbit::{PosetGraph, RootSystem, WeylElement};

pub fn join_elements(elements: &[WeylElement]) -> String {
    elements.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn poset_text(poset: &PosetGraph) -> String {
    let mut out = String::new();
    let profile = poset.rank_profile();
    writeln!(out, "{} elements, {} covers, rank profile {:?}", poset.nodes.len(), poset.edges.len(), profile).unwrap();
    for (rank, _) in profile.iter().enumerate() {
        let names: Vec<String> =
            poset.nodes.iter().filter(|q| q.length() == rank).map(|q| q.to_string()).collect();
        if !names.is_empty() {
            writeln!(out, "rank {rank}: {}", names.join(" | ")).unwrap();
        }
    }
    for &(a, b) in &poset.edges {
        writeln!(out, "{} < {}", poset.nodes[a], poset.nodes[b]).unwrap();
    }
    out
}

fn seq_string(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" "))
}

/// `S` followed by its truncations `S^i`, the nonzero entries among the first
/// `i` positions.
pub fn sequence_rows(name: &str, seq: &SeqS) -> String {
    let mut out = format!("S({name}) = {seq}\n");
    for i in 1..=seq.0.len() {
        let truncated: Vec<usize> = seq.0[..i].iter().copied().filter(|&x| x != 0).collect();
        writeln!(out, "  S^{i} = {}", seq_string(&truncated)).unwrap();
    }
    out
}

fn bond(sys: &RootSystem, a: usize, b: usize) -> &'static str {
    let m = sys.cartan(a, b) * sys.cartan(b, a);
    let (na, nb) = (sys.norm(&sys.simple_root(a + 1).unwrap()), sys.norm(&sys.simple_root(b + 1).unwrap()));
    match (m, na.cmp(&nb)) {
        (1, _) => "---",
        (2, std::cmp::Ordering::Greater) => "=>=",
        (2, _) => "=<=",
        (3, std::cmp::Ordering::Greater) => "≡>≡",
        (3, _) => "≡<≡",
        _ => "-?-",
    }
}

fn farthest(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = vec![start];
    seen[start] = true;
    let mut k = 0;
    while k < order.len() {
        let v = order[k];
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                prev[u] = v;
                order.push(u);
            }
        }
        k += 1;
    }
    let mut v = *order.last().unwrap();
    let mut path = vec![v];
    while prev[v] != usize::MAX {
        v = prev[v];
        path.push(v);
    }
    path
}

/// The Dynkin diagram labelled by `labels`: the longest chain of nodes on
/// one line, each remaining node on its own line below its neighbour.
pub fn weighted_diagram(sys: &RootSystem, labels: &[i64]) -> String {
    let n = sys.rank();
    let adj: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && sys.cartan(i, j) != 0).collect()).collect();
    let end = *farthest(&adj, 0).first().unwrap();
    let mut path = farthest(&adj, end);
    if path.first() > path.last() {
        path.reverse();
    }
    let node = |i: usize| format!("{}[{}]", i + 1, labels[i]);
    let mut out = node(path[0]);
    for w in path.windows(2) {
        write!(out, " {} {}", bond(sys, w[0], w[1]), node(w[1])).unwrap();
    }
    out.push('\n');
    for i in (0..n).filter(|i| !path.contains(i)) {
        for &j in &adj[i] {
            writeln!(out, "  {} attached to {} by {}", node(i), node(j), bond(sys, i, j)).unwrap();
        }
    }
    out
}

pub fn report_text(sys: &RootSystem, r: &ClassificationReport) -> String {
    let mut out = String::new();
    let roots = |v: &[coxorbit::Root]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
    writeln!(out, "system: {}", r.system).unwrap();
    writeln!(out, "roots: {}", roots(&r.thetas)).unwrap();
    if r.rationally_orthogonal {
        writeln!(out, "rationally orthogonal: yes, type {}A1", r.thetas.len()).unwrap();
    } else {
        writeln!(out, "rationally orthogonal: no").unwrap();
        for l in &r.combinations {
            let coeffs: Vec<String> = l.coefficients.iter().map(|c| c.to_string()).collect();
            writeln!(out, "  {}: {} on roots {:?}, coefficients [{}]", l.beta, l.case, l.support, coeffs.join(", "))
                .unwrap();
        }
    }
    if r.reduced.len() != r.thetas.len() {
        writeln!(out, "after B2 long reduction: {}", roots(&r.reduced)).unwrap();
    }
    writeln!(out, "sum of coroots: {}", r.coweight.fundamental_expr()).unwrap();
    writeln!(out, "dominant: {} via {}", r.dominant_expr, word_string(&r.dominant_word)).unwrap();
    writeln!(out, "height: {}", r.height).unwrap();
    writeln!(out, "spherical: {}", if r.spherical { "yes" } else { "no" }).unwrap();
    writeln!(out, "weighted Dynkin diagram:").unwrap();
    for line in weighted_diagram(sys, r.dominant.coords()).lines() {
        writeln!(out, "  {line}").unwrap();
    }
    writeln!(out, "translated roots: {}", roots(&r.translated)).unwrap();
    let inv = &r.involution;
    writeln!(out, "Levi: {:?} of type {}", inv.levi, inv.levi_type).unwrap();
    for (i, image, action) in &inv.images {
        let note = match action {
            SimpleRootAction::Fixed => "fixed".to_string(),
            SimpleRootAction::NegatedSwap(j) => format!("-a{j}"),
            SimpleRootAction::Other => "other".to_string(),
        };
        writeln!(out, "  sigma(a{i}) = {image}  [{note}]").unwrap();
    }
    for (k, c) in inv.components.iter().enumerate() {
        let action = match &c.action {
            ComponentAction::Fixed => "fixed".to_string(),
            ComponentAction::Paired(j) => format!("paired with component {j}"),
            ComponentAction::Twisted => "twisted".to_string(),
            ComponentAction::Other => "other".to_string(),
        };
        writeln!(out, "  component {k}: {} on {:?}, {action}", c.dynkin_type, c.indices).unwrap();
    }
    writeln!(out, "fixed subgroup type: {}", inv.folded_type).unwrap();
    out
}

pub fn cascade_text(tree: &CascadeNode) -> String {
    format!("{} nodes, depth {}\n{}", tree.size(), tree.depth(), tree.to_text())
}

pub fn orbit_text(rows: &[OrbitRow]) -> String {
    let mut out = String::from("w\tword\tpattern\tS\tlength\tdim B-orbit\tdim Z-orbit\n");
    for row in rows {
        let line: Vec<String> = row.w.iter().map(|x| x.to_string()).collect();
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            line.join(" "),
            word_string(&row.word),
            row.pattern,
            row.seq,
            row.length,
            row.b_orbit_dimension,
            row.z_orbit.dimension
        )
        .unwrap();
    }
    out
}
