//! The chord graph on harmonic four-tone chords.
//!
//! Nodes are the labeled chords of [`seventh_table`]. Every node gets one edge
//! per operator: a directed `i`-edge to its next inversion, and undirected `d`-
//! and `a`-edges (both operators are involutions). Fixed points show up as
//! self-loops.
//!
//! Without the diminished-diminished chord the graph splits into two 12-node
//! components, one per partition class `[1,3,4,4]` and `[2,3,3,4]`. The map
//! `MM -> mm`, `mM -> Mm`, `AM -> dm` (keeping the inversion index) is an
//! isomorphism between them. Extending that map to `dd` would require an
//! "augmented-augmented" chord with a doubled root, which is not a chord in
//! this model, so `dd` is left out of the isomorphism.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::json;

use crate::chord::Chord;
use crate::classify::{seventh_table, ChordLabel, Family, SeventhFamily};
use crate::error::{Error, Result};
use crate::transform::OperatorSymbol;

/// Index into [`ChordGraph::nodes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub chord: Chord,
    pub label: ChordLabel,
}

/// An operator edge. Undirected edges (`d`, `a`) are stored once, oriented from
/// the endpoint with the greater label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub op: OperatorSymbol,
    pub from: NodeId,
    pub to: NodeId,
    pub directed: bool,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }

    pub fn touches(&self, n: NodeId) -> bool {
        self.from == n || self.to == n
    }
}

#[derive(Debug, Clone)]
pub struct ChordGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    by_chord: BTreeMap<Chord, NodeId>,
}

impl ChordGraph {
    /// Nodes in label order (family, then inversion).
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Edges sorted by operator, then endpoints.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn find_chord(&self, c: &Chord) -> Option<NodeId> {
        self.by_chord.get(c).copied()
    }

    pub fn find_label(&self, label: ChordLabel) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.label == label).map(NodeId)
    }

    pub fn edges_with(&self, op: OperatorSymbol) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.op == op)
    }

    /// Number of `op`-edges incident to `n`, a self-loop counting once.
    /// For the directed `i`-edges only outgoing edges count.
    pub fn degree(&self, n: NodeId, op: OperatorSymbol) -> usize {
        self.edges_with(op)
            .filter(|e| if e.directed { e.from == n } else { e.touches(n) })
            .count()
    }

    /// The `op`-neighbour of `n` (its image under `op`).
    pub fn image(&self, n: NodeId, op: OperatorSymbol) -> Option<NodeId> {
        self.edges_with(op).find_map(|e| {
            if e.from == n {
                Some(e.to)
            } else if !e.directed && e.to == n {
                Some(e.from)
            } else {
                None
            }
        })
    }

    /// Nodes fixed by `op`, in node order.
    pub fn fixed_points(&self, op: OperatorSymbol) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self.edges_with(op).filter(|e| e.is_loop()).map(|e| e.from).collect();
        out.sort();
        out
    }

    pub fn label_of(&self, id: NodeId) -> ChordLabel {
        self.nodes[id.0].label
    }
}

/// Builds the graph over all harmonic four-tone chords, leaving out the
/// diminished-diminished chord unless `include_dd` is set.
pub fn build_chord_graph(include_dd: bool) -> ChordGraph {
    let mut entries: Vec<(ChordLabel, Chord)> = seventh_table()
        .iter()
        .filter(|(_, l)| include_dd || l.family != Family::Seventh(SeventhFamily::dd))
        .map(|(c, l)| (*l, c.clone()))
        .collect();
    entries.sort();

    let nodes: Vec<Node> = entries
        .into_iter()
        .map(|(label, chord)| Node { chord, label })
        .collect();
    let by_chord: BTreeMap<Chord, NodeId> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (n.chord.clone(), NodeId(i)))
        .collect();

    let mut edges = BTreeSet::new();
    for (i, node) in nodes.iter().enumerate() {
        let u = NodeId(i);
        for op in OperatorSymbol::ALL {
            let image = op.apply(&node.chord).expect("four-tone chords accept every operator");
            let v = by_chord[&image];
            let directed = !op.is_involution();
            let (from, to) = if directed || nodes[u.0].label >= nodes[v.0].label {
                (u, v)
            } else {
                (v, u)
            };
            edges.insert(Edge { op, from, to, directed });
        }
    }

    ChordGraph {
        nodes,
        edges: edges.into_iter().collect(),
        by_chord,
    }
}

/// Components of the underlying undirected graph, largest first, ties broken
/// by node order.
pub fn connected_components(g: &ChordGraph) -> Vec<Vec<NodeId>> {
    let n = g.nodes.len();
    let mut adjacency = vec![Vec::new(); n];
    for e in &g.edges {
        adjacency[e.from.0].push(e.to.0);
        adjacency[e.to.0].push(e.from.0);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(x) = stack.pop() {
            members.push(NodeId(x));
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        members.sort();
        components.push(members);
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    components
}

/// Node correspondence between the `[1,3,4,4]` component and the `[2,3,3,4]`
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    pub pairs: Vec<(NodeId, NodeId)>,
}

impl ComponentMap {
    pub fn get(&self, upper: NodeId) -> Option<NodeId> {
        self.pairs.iter().find(|(u, _)| *u == upper).map(|&(_, l)| l)
    }
}

/// `MM -> mm`, `mM -> Mm`, `AM -> dm`; `None` for families outside the upper
/// component.
pub fn mirror_family(f: SeventhFamily) -> Option<SeventhFamily> {
    match f {
        SeventhFamily::MM => Some(SeventhFamily::mm),
        SeventhFamily::mM => Some(SeventhFamily::Mm),
        SeventhFamily::AM => Some(SeventhFamily::dm),
        _ => None,
    }
}

type EdgeKey = (OperatorSymbol, NodeId, NodeId);

fn edge_key(e: &Edge, map: impl Fn(NodeId) -> NodeId) -> EdgeKey {
    let (a, b) = (map(e.from), map(e.to));
    if e.directed || a <= b {
        (e.op, a, b)
    } else {
        (e.op, b, a)
    }
}

/// Checks that the family mirror is a label-preserving graph isomorphism
/// between the two 12-node components and returns it.
pub fn component_isomorphism(g: &ChordGraph) -> Result<ComponentMap> {
    let violation = |msg: String| Error::IsomorphismViolation(msg);
    let components = connected_components(g);
    let root = |f| {
        g.find_label(ChordLabel {
            family: Family::Seventh(f),
            inversion: 0,
        })
        .ok_or_else(|| violation(format!("graph has no {}0 node", f.code())))
    };
    let component_of = |n: NodeId| {
        components
            .iter()
            .find(|c| c.contains(&n))
            .expect("every node lies in a component")
    };
    let upper = component_of(root(SeventhFamily::MM)?);
    let lower = component_of(root(SeventhFamily::mm)?);
    if upper == lower {
        return Err(violation("MM0 and mm0 share a component".into()));
    }

    let mut pairs = Vec::with_capacity(upper.len());
    for &u in upper {
        let label = g.label_of(u);
        let image = match label.family {
            Family::Seventh(f) => mirror_family(f),
            Family::Triad(_) => None,
        }
        .ok_or_else(|| violation(format!("{label} has no mirror family")))?;
        let target = ChordLabel {
            family: Family::Seventh(image),
            inversion: label.inversion,
        };
        let v = g
            .find_label(target)
            .ok_or_else(|| violation(format!("{label} maps to missing node {target}")))?;
        if !lower.contains(&v) {
            return Err(violation(format!("{label} maps outside the mirror component")));
        }
        pairs.push((u, v));
    }
    let images: BTreeSet<NodeId> = pairs.iter().map(|&(_, v)| v).collect();
    if images.len() != pairs.len() || images.len() != lower.len() {
        return Err(violation(format!(
            "map is not a bijection ({} nodes onto {} of {})",
            pairs.len(),
            images.len(),
            lower.len()
        )));
    }

    let forward: BTreeMap<NodeId, NodeId> = pairs.iter().copied().collect();
    let upper_set: BTreeSet<NodeId> = upper.iter().copied().collect();
    let mapped: BTreeSet<EdgeKey> = g
        .edges
        .iter()
        .filter(|e| upper_set.contains(&e.from))
        .map(|e| edge_key(e, |n| forward[&n]))
        .collect();
    let actual: BTreeSet<EdgeKey> = g
        .edges
        .iter()
        .filter(|e| images.contains(&e.from))
        .map(|e| edge_key(e, |n| n))
        .collect();
    if let Some(&(op, a, b)) = mapped.symmetric_difference(&actual).next() {
        return Err(violation(format!(
            "{op}-edge {} -- {} has no counterpart",
            g.label_of(a),
            g.label_of(b)
        )));
    }
    Ok(ComponentMap { pairs })
}

/// Graphviz rendering: `i`-edges solid and directed, `d`-edges solid and
/// two-headed, `a`-edges dashed and two-headed.
pub fn export_dot(g: &ChordGraph) -> String {
    let mut out = String::from("digraph chords {\n  node [shape=box];\n");
    for n in &g.nodes {
        let _ = writeln!(out, "  {} [label=\"{}\\n({})\"];", n.label, n.label, n.chord);
    }
    for e in &g.edges {
        let attrs = match e.op {
            OperatorSymbol::I => "label=\"i\"",
            OperatorSymbol::D => "label=\"d\", dir=both",
            OperatorSymbol::A => "label=\"a\", dir=both, style=dashed",
        };
        let _ = writeln!(out, "  {} -> {} [{attrs}];", g.label_of(e.from), g.label_of(e.to));
    }
    out.push_str("}\n");
    out
}

/// `{"nodes": [{"chord", "family", "id", "inversion"}], "edges": [{"from", "op", "to"}]}`
/// with object keys sorted.
pub fn export_json(g: &ChordGraph) -> String {
    let nodes: Vec<_> = g
        .nodes
        .iter()
        .map(|n| {
            json!({
                "id": n.label.to_string(),
                "chord": n.chord.tones(),
                "family": n.label.family.name(),
                "inversion": n.label.inversion,
            })
        })
        .collect();
    let edges: Vec<_> = g
        .edges
        .iter()
        .map(|e| {
            json!({
                "from": g.label_of(e.from).to_string(),
                "to": g.label_of(e.to).to_string(),
                "op": e.op.to_string(),
            })
        })
        .collect();
    let doc = json!({ "nodes": nodes, "edges": edges });
    let mut text = serde_json::to_string_pretty(&doc).expect("graph JSON serializes");
    text.push('\n');
    text
}
