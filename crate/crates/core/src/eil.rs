//! Symbol graphs, Eil graphs and their reduction to symbols.
//!
//! A [`SymbolGraph`] is an oriented tree whose vertices carry [`Symbol`] labels.
//! Graphs built with [`SymbolGraph::new`] must join distinct free letters along
//! every edge; [`SymbolGraph::ambient`] also admits homogeneous edges, which
//! occur in the graph model of the cofree Lie coalgebra before rewriting to
//! distinct-vertex graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{self, LieError};
use crate::linalg::{format_rational, Matrix};
use crate::linking::{eval_symbol_sum, Undefined};
use crate::parse::{Cursor, ParseError};
use crate::symbols::{pre_symbol, Symbol, SymbolError, SymbolSum};
use crate::words::{Generator, Word};

/// Vertex bound for enumeration and [`distinct_reduce`].
pub const DEFAULT_MAX_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EilError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("graph is not a tree")]
    NotATree,
    #[error("edge {tail}->{head} joins equal free letters")]
    InvalidEdge { tail: String, head: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("vertex `{0}` has no incident edge")]
    IsolatedVertex(String),
    #[error("reduction at `{vertex}` is undefined: {detail}")]
    UndefinedReduction { vertex: String, detail: String },
    #[error("invalid reduction order: {0}")]
    BadOrder(String),
    #[error("vertex `{0}` is not labelled by a single letter")]
    NotEil(String),
    #[error("{size} vertices exceed the bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("linear system has no solution")]
    InconsistentSystem,
    #[error(transparent)]
    Undefined(#[from] Undefined),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    ids: Vec<String>,
    label: Symbol,
}

impl Vertex {
    /// The id the vertex was created with.
    pub fn id(&self) -> &str {
        &self.ids[0]
    }

    /// Every original id, including those of vertices merged into this one.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn label(&self) -> &Symbol {
        &self.label
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymbolGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl SymbolGraph {
    /// A symbol graph: a tree whose edges join distinct free letters.
    pub fn new(vertices: Vec<(String, Symbol)>, edges: &[(&str, &str)]) -> Result<Self, EilError> {
        let g = Self::ambient(vertices, edges)?;
        g.check_heterogeneous()?;
        Ok(g)
    }

    /// A labelled oriented tree; homogeneous edges allowed.
    pub fn ambient(vertices: Vec<(String, Symbol)>, edges: &[(&str, &str)]) -> Result<Self, EilError> {
        let mut seen = BTreeSet::new();
        for (id, _) in &vertices {
            if !seen.insert(id.clone()) {
                return Err(EilError::DuplicateVertex(id.clone()));
            }
        }
        let index = |id: &str| {
            vertices
                .iter()
                .position(|(v, _)| v == id)
                .ok_or_else(|| EilError::UnknownVertex(id.to_string()))
        };
        let edges = edges
            .iter()
            .map(|(t, h)| Ok((index(t)?, index(h)?)))
            .collect::<Result<Vec<_>, EilError>>()?;
        let vertices = vertices
            .into_iter()
            .map(|(id, label)| Vertex {
                ids: vec![id],
                label,
            })
            .collect();
        let g = SymbolGraph { vertices, edges };
        g.check_tree()?;
        Ok(g)
    }

    /// Ids `v1, v2, …` in label order; edges as index pairs.
    pub fn from_indexed(labels: Vec<Symbol>, edges: Vec<(usize, usize)>) -> Result<Self, EilError> {
        let vertices = labels
            .into_iter()
            .enumerate()
            .map(|(i, label)| Vertex {
                ids: vec![format!("v{}", i + 1)],
                label,
            })
            .collect();
        let g = SymbolGraph { vertices, edges };
        g.check_tree()?;
        Ok(g)
    }

    /// An Eil graph on letter labels, given as index pairs.
    pub fn from_letters(labels: &[Generator], edges: Vec<(usize, usize)>) -> Result<Self, EilError> {
        Self::from_indexed(labels.iter().cloned().map(Symbol::letter).collect(), edges)
    }

    fn check_tree(&self) -> Result<(), EilError> {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() + 1 != n {
            return Err(EilError::NotATree);
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(EilError::NotATree);
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(EilError::NotATree);
            }
            parent[ra] = rb;
        }
        Ok(())
    }

    fn check_heterogeneous(&self) -> Result<(), EilError> {
        match self.homogeneous_edges().first() {
            Some(&e) => {
                let (t, h) = self.edges[e];
                Err(EilError::InvalidEdge {
                    tail: self.vertices[t].id().to_string(),
                    head: self.vertices[h].id().to_string(),
                })
            }
            None => Ok(()),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &Symbol {
        &self.vertices[v].label
    }

    /// The vertex holding `id`, merged or not.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.ids.iter().any(|x| x == id))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn homogeneous_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                self.label(a).free_letter() == self.label(b).free_letter()
            })
            .collect()
    }

    pub fn is_distinct_vertex(&self) -> bool {
        self.homogeneous_edges().is_empty()
    }

    /// All labels are single letters.
    pub fn is_eil(&self) -> bool {
        self.vertices.iter().all(|v| v.label.depth() == 0)
    }

    pub(crate) fn letter_labels(&self) -> Result<Vec<Generator>, EilError> {
        self.vertices
            .iter()
            .map(|v| {
                if v.label.depth() == 0 {
                    Ok(v.label.free_letter().clone())
                } else {
                    Err(EilError::NotEil(v.id().to_string()))
                }
            })
            .collect()
    }

    /// Letters of all labels, with multiplicity.
    pub fn multidegree(&self) -> BTreeMap<Generator, usize> {
        let mut m = BTreeMap::new();
        for v in &self.vertices {
            for g in v.label.letters() {
                *m.entry(g).or_insert(0) += 1;
            }
        }
        m
    }

    /// Total letter count of the labels: the weight `Φ_G` lives in.
    pub fn weight(&self) -> usize {
        self.vertices.iter().map(|v| v.label.node_count()).sum()
    }

    /// Reverse edge `e`.
    pub fn flip_edge(&self, e: usize) -> SymbolGraph {
        let mut g = self.clone();
        let (a, b) = g.edges[e];
        g.edges[e] = (b, a);
        g
    }
}

impl fmt::Display for SymbolGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", v.id(), v.label)?;
        }
        if !self.edges.is_empty() {
            f.write_str(" ; ")?;
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}->{}", self.vertices[a].id(), self.vertices[b].id())?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SymbolGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolGraph({self})")
    }
}

struct RawGraph {
    vertices: Vec<(String, Symbol)>,
    edges: Vec<(String, String)>,
}

fn raw_graph(cur: &mut Cursor<'_>) -> Result<RawGraph, EilError> {
    cur.expect('{')?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    loop {
        let id = cur.ident()?.to_string();
        cur.expect(':')?;
        let label = pre_symbol_checked(cur)?;
        vertices.push((id, label));
        if !cur.eat(',') {
            break;
        }
    }
    if cur.eat(';')
        && cur.peek() != Some('}') {
            loop {
                let tail = cur.ident()?.to_string();
                if !cur.eat_str("->") {
                    return Err(cur.error("'->'").into());
                }
                let head = cur.ident()?.to_string();
                edges.push((tail, head));
                if !cur.eat(',') {
                    break;
                }
            }
        }
    cur.expect('}')?;
    Ok(RawGraph { vertices, edges })
}

fn pre_symbol_checked(cur: &mut Cursor<'_>) -> Result<Symbol, EilError> {
    Ok(pre_symbol(cur)?.validate()?)
}

fn build(raw: RawGraph, ambient: bool) -> Result<SymbolGraph, EilError> {
    let edges: Vec<(&str, &str)> = raw
        .edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    if ambient {
        SymbolGraph::ambient(raw.vertices, &edges)
    } else {
        SymbolGraph::new(raw.vertices, &edges)
    }
}

/// `{ v1:label, v2:label ; v1->v2, … }`, edges joining distinct free letters.
pub fn parse_graph(text: &str) -> Result<SymbolGraph, EilError> {
    let mut cur = Cursor::new(text);
    let raw = raw_graph(&mut cur)?;
    cur.expect_end()?;
    build(raw, false)
}

/// Same grammar as [`parse_graph`], admitting homogeneous edges.
pub fn parse_eil_graph(text: &str) -> Result<SymbolGraph, EilError> {
    let mut cur = Cursor::new(text);
    let raw = raw_graph(&mut cur)?;
    cur.expect_end()?;
    build(raw, true)
}

/// Signed graphs produced by a reduction step.
pub type SignedGraphs = Vec<(i64, SymbolGraph)>;

/// `ρ_v(G) = Σ_{e ∋ v} or_v(e)·G_{v,e}`, where the contracted vertex is labelled `(σ_v)σ_o`.
pub fn reduce_at(g: &SymbolGraph, v: &str) -> Result<SignedGraphs, EilError> {
    let vi = g
        .index_of(v)
        .ok_or_else(|| EilError::UnknownVertex(v.to_string()))?;
    let incident: Vec<usize> = (0..g.edges.len())
        .filter(|&e| g.edges[e].0 == vi || g.edges[e].1 == vi)
        .collect();
    if incident.is_empty() {
        return Err(EilError::IsolatedVertex(v.to_string()));
    }
    let undefined = |detail: String| EilError::UndefinedReduction {
        vertex: v.to_string(),
        detail,
    };
    let mut out = Vec::with_capacity(incident.len());
    for &e in &incident {
        let (t, h) = g.edges[e];
        let (sign, other) = if t == vi { (1, h) } else { (-1, t) };
        let merged = g.vertices[other]
            .label
            .with_child(g.vertices[vi].label.clone())
            .map_err(|err| undefined(err.to_string()))?;
        let remap = |x: usize| -> usize {
            let x = if x == vi { other } else { x };
            x - usize::from(x > vi)
        };
        let mut vertices = g.vertices.clone();
        let absorbed = vertices[vi].ids.clone();
        vertices[other].label = merged;
        vertices[other].ids.extend(absorbed);
        vertices.remove(vi);
        let mut edges = Vec::with_capacity(g.edges.len() - 1);
        for (k, &(a, b)) in g.edges.iter().enumerate() {
            if k == e {
                continue;
            }
            let (a, b) = (remap(a), remap(b));
            if vertices[a].label.free_letter() == vertices[b].label.free_letter() {
                return Err(undefined(format!(
                    "edge {}->{} would join equal free letters",
                    vertices[a].id(),
                    vertices[b].id()
                )));
            }
            edges.push((a, b));
        }
        out.push((sign, SymbolGraph { vertices, edges }));
    }
    Ok(out)
}

/// `ρ_{v_k} ∘ … ∘ ρ_{v_1}`; `order` names all vertices but one.
pub fn reduce_full(g: &SymbolGraph, order: &[&str]) -> Result<SymbolSum, EilError> {
    if order.len() + 1 != g.vertex_count() {
        return Err(EilError::BadOrder(format!(
            "expected {} vertices, got {}",
            g.vertex_count() - 1,
            order.len()
        )));
    }
    let distinct: BTreeSet<&str> = order.iter().copied().collect();
    if distinct.len() != order.len() {
        return Err(EilError::BadOrder("repeated vertex".into()));
    }
    let mut terms: SignedGraphs = vec![(1, g.clone())];
    for v in order {
        let mut next = Vec::new();
        for (sign, h) in &terms {
            for (s, r) in reduce_at(h, v)? {
                next.push((sign * s, r));
            }
        }
        terms = next;
    }
    let mut sum = SymbolSum::zero();
    for (sign, h) in terms {
        sum.add_term(h.vertices[0].label.clone(), BigRational::from_integer(sign.into()));
    }
    Ok(sum)
}

/// Peel leaves, smallest label first; the vertex with the largest label stays.
pub fn default_order(g: &SymbolGraph) -> Vec<String> {
    let n = g.vertex_count();
    let key = |v: usize| (g.label(v).as_str().to_string(), g.vertices[v].id().to_string());
    let last = (0..n).max_by_key(|&v| key(v)).unwrap_or(0);
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let leaf = (0..n)
            .filter(|&v| alive[v] && v != last && degree[v] == 1)
            .min_by_key(|&v| key(v))
            .expect("a tree with two or more vertices has two leaves");
        alive[leaf] = false;
        for u in g.neighbors(leaf) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        order.push(g.vertices[leaf].id().to_string());
    }
    order
}

/// One vertex per node of `σ`, an edge from each node to its parent, and a
/// post-order reduction order with `reduce_full = +σ`.
pub fn graph_of_symbol(sigma: &Symbol) -> (SymbolGraph, Vec<String>) {
    fn walk(
        s: &Symbol,
        parent: Option<usize>,
        labels: &mut Vec<Symbol>,
        edges: &mut Vec<(usize, usize)>,
        post: &mut Vec<usize>,
    ) {
        let me = labels.len();
        labels.push(Symbol::letter(s.free_letter().clone()));
        if let Some(p) = parent {
            edges.push((me, p));
        }
        for c in s.children() {
            walk(c, Some(me), labels, edges, post);
        }
        post.push(me);
    }
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut post = Vec::new();
    walk(sigma, None, &mut labels, &mut edges, &mut post);
    post.pop();
    let g = SymbolGraph::from_indexed(labels, edges).expect("a symbol's containment tree is a tree");
    let order = post.iter().map(|&i| format!("v{}", i + 1)).collect();
    (g, order)
}

/// Canonical representative of a graph up to isomorphism and reorientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Nested rooted encoding `label{child,…}`; equal exactly for isomorphic trees.
    pub encoding: String,
    /// Ids `v1, v2, …` in canonical pre-order, every edge pointing to the root.
    pub graph: SymbolGraph,
    /// `G = sign · graph` by antisymmetry. Zero when the graph equals its own negative.
    pub sign: i64,
}

pub fn canonicalize(g: &SymbolGraph) -> Canonical {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();

    fn enc(g: &SymbolGraph, adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| enc(g, adj, u, Some(v)))
            .collect();
        kids.sort();
        format!("{}{{{}}}", g.label(v), kids.join(","))
    }

    let centers = tree_centers(&adj);
    let mut rooted: Vec<(String, usize)> = centers.iter().map(|&c| (enc(g, &adj, c, None), c)).collect();
    rooted.sort();
    let symmetric = rooted.len() == 2 && rooted[0].0 == rooted[1].0;
    let (encoding, root) = rooted.swap_remove(0);

    let mut labels = Vec::with_capacity(n);
    let mut new_edges = Vec::with_capacity(n.saturating_sub(1));
    let mut parent_of = vec![usize::MAX; n];
    let mut stack = vec![(root, usize::MAX, usize::MAX)];
    while let Some((v, p, new_p)) = stack.pop() {
        let me = labels.len();
        labels.push(g.label(v).clone());
        parent_of[v] = p;
        if new_p != usize::MAX {
            new_edges.push((me, new_p));
        }
        let mut kids: Vec<(String, usize)> = adj[v]
            .iter()
            .filter(|&&u| u != p)
            .map(|&u| (enc(g, &adj, u, Some(v)), u))
            .collect();
        kids.sort();
        for (_, u) in kids.into_iter().rev() {
            stack.push((u, v, me));
        }
    }
    new_edges.sort();
    let mut sign = 1;
    for &(t, h) in &g.edges {
        if parent_of[t] != h {
            sign = -sign;
        }
    }
    if symmetric {
        sign = 0;
    }
    let graph = SymbolGraph::from_indexed(labels, new_edges).expect("relabelled tree");
    Canonical {
        encoding,
        graph,
        sign,
    }
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &u in &adj[v] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers = layer;
    centers.sort();
    centers
}

/// Exact rational combination of graphs, keyed by canonical encoding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSum {
    terms: BTreeMap<String, (SymbolGraph, BigRational)>,
}

impl GraphSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: &SymbolGraph) -> Self {
        let mut s = Self::zero();
        s.add_graph(g, BigRational::one());
        s
    }

    /// Add `c·G`, rewritten to its canonical representative.
    pub fn add_graph(&mut self, g: &SymbolGraph, c: BigRational) {
        let canon = canonicalize(g);
        if canon.sign == 0 || c.is_zero() {
            return;
        }
        let c = c * BigRational::from_integer(canon.sign.into());
        let key = canon.encoding.clone();
        let entry = self
            .terms
            .entry(canon.encoding)
            .or_insert_with(|| (canon.graph, BigRational::zero()));
        entry.1 += c;
        if entry.1.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_sum(&mut self, other: &GraphSum, scale: &BigRational) {
        for (g, c) in other.iter() {
            self.add_graph(g, c * scale);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymbolGraph, &BigRational)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `p/q * {…} + …` in canonical term order; `0` when empty.
impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.iter().enumerate() {
            let text = format_rational(c);
            match (i, text.strip_prefix('-')) {
                (0, _) => write!(f, "{text} * {g}")?,
                (_, Some(magnitude)) => write!(f, " - {magnitude} * {g}")?,
                (_, None) => write!(f, " + {text} * {g}")?,
            }
        }
        Ok(())
    }
}

/// `term (('+'|'-') term)*` with `term := (rational '*')? graph`; homogeneous edges allowed.
pub fn parse_graph_sum(text: &str) -> Result<GraphSum, EilError> {
    let mut cur = Cursor::new(text);
    let mut sum = GraphSum::zero();
    if text.trim() == "0" {
        return Ok(sum);
    }
    let mut sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    loop {
        let coefficient = if cur.peek() == Some('{') {
            BigRational::one()
        } else {
            let c = crate::lie::rational(&mut cur)?;
            cur.expect('*')?;
            c
        };
        let g = build(raw_graph(&mut cur)?, true)?;
        sum.add_graph(&g, coefficient * BigRational::from_integer(sign.into()));
        if cur.eat('+') {
            sign = 1;
        } else if cur.eat('-') {
            sign = -1;
        } else {
            break;
        }
    }
    cur.expect_end()?;
    Ok(sum)
}

/// All trees on the given letter multiset with no homogeneous edge, one per
/// isomorphism class, in canonical orientation and encoding order.
pub fn enumerate_distinct_vertex_graphs(
    multidegree: &BTreeMap<Generator, usize>,
) -> Result<Vec<SymbolGraph>, EilError> {
    enumerate_distinct_vertex_graphs_bounded(multidegree, DEFAULT_MAX_VERTICES)
}

pub fn enumerate_distinct_vertex_graphs_bounded(
    multidegree: &BTreeMap<Generator, usize>,
    bound: usize,
) -> Result<Vec<SymbolGraph>, EilError> {
    let labels: Vec<Generator> = multidegree
        .iter()
        .flat_map(|(g, &n)| std::iter::repeat_n(g.clone(), n))
        .collect();
    let k = labels.len();
    if k > bound {
        return Err(EilError::TooLarge { size: k, bound });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut found: BTreeMap<String, SymbolGraph> = BTreeMap::new();
    for edges in labelled_trees(k) {
        if edges.iter().any(|&(a, b)| labels[a] == labels[b]) {
            continue;
        }
        let g = SymbolGraph::from_letters(&labels, edges)?;
        let canon = canonicalize(&g);
        found.entry(canon.encoding).or_insert(canon.graph);
    }
    Ok(found.into_values().collect())
}

/// Every labelled tree on `0..k`, decoded from Prüfer sequences.
pub fn labelled_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    match k {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let len = k - 2;
    let total = k.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for s in seq.iter_mut() {
            *s = code % k;
            code /= k;
        }
        out.push(prufer_decode(&seq, k));
    }
    out
}

fn prufer_decode(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; k];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &s in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A distinct-vertex [`GraphSum`] with the same pairing as `g` against every
/// bracket tree of its multidegree. Free variables of the linear system are set to zero.
pub fn distinct_reduce(g: &SymbolGraph) -> Result<GraphSum, EilError> {
    let size = g.vertex_count();
    if size > DEFAULT_MAX_VERTICES {
        return Err(EilError::TooLarge {
            size,
            bound: DEFAULT_MAX_VERTICES,
        });
    }
    g.letter_labels()?;
    let md = g.multidegree();
    let trees = lie::lyndon_trees_of_multidegree(&md);
    if trees.is_empty() {
        return Ok(GraphSum::zero());
    }
    let basis = enumerate_distinct_vertex_graphs(&md)?;
    let mut a = Matrix::zeros(trees.len(), basis.len());
    let mut rhs = Vec::with_capacity(trees.len());
    for (r, t) in trees.iter().enumerate() {
        for (c, b) in basis.iter().enumerate() {
            a.set(r, c, int_q(lie::pair_graph_tree(b, t)?));
        }
        rhs.push(int_q(lie::pair_graph_tree(g, t)?));
    }
    let x = a.solve(&rhs).ok_or(EilError::InconsistentSystem)?;
    let mut out = GraphSum::zero();
    for (b, c) in basis.iter().zip(x) {
        out.add_graph(b, c);
    }
    Ok(out)
}

fn int_q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `Φ_G(w)`, reducing along [`default_order`].
pub fn eval_graph(g: &SymbolGraph, w: &Word) -> Result<BigRational, EilError> {
    let order = default_order(g);
    let refs: Vec<&str> = order.iter().map(String::as_str).collect();
    let sum = reduce_full(g, &refs)?;
    Ok(eval_symbol_sum(&sum, w)?)
}

/// `Σ c·Φ_G(w)` over a graph sum.
pub fn eval_graph_sum(s: &GraphSum, w: &Word) -> Result<BigRational, EilError> {
    let mut total = BigRational::zero();
    for (g, c) in s.iter() {
        total += c * eval_graph(g, w)?;
    }
    Ok(total)
}

/// The three graphs of the Arnold relation at two edges sharing a vertex `y`.
/// With `x` and `z` the other endpoints, they carry `{x→y, y→z}`, `{y→z, z→x}`
/// and `{x→y, z→x}`, the rest of the graph unchanged; their sum vanishes in
/// the graph model. Also returns `s` with `G = s·first`.
pub fn arnold_triple(g: &SymbolGraph, e1: usize, e2: usize) -> Option<(i64, [SymbolGraph; 3])> {
    if e1 == e2 {
        return None;
    }
    let (a1, b1) = g.edges[e1];
    let (a2, b2) = g.edges[e2];
    let shared = [a1, b1].into_iter().find(|v| *v == a2 || *v == b2)?;
    let x = if a1 == shared { b1 } else { a1 };
    let z = if a2 == shared { b2 } else { a2 };
    let y = shared;
    let sign = (if g.edges[e1] == (x, y) { 1 } else { -1 }) * (if g.edges[e2] == (y, z) { 1 } else { -1 });
    let with = |first: (usize, usize), second: (usize, usize)| {
        let mut h = g.clone();
        h.edges[e1] = first;
        h.edges[e2] = second;
        h
    };
    let rotated = [with((x, y), (y, z)), with((y, z), (z, x)), with((x, y), (z, x))];
    Some((sign, rotated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::parse_symbol;

    fn s(t: &str) -> Symbol {
        parse_symbol(t).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn parse_examples() {
        let g = parse_graph("{v1:a, v2:b, v3:a ; v1->v2, v3->v2}").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (2, 1)]);
        assert!(matches!(
            parse_graph("{v1:a, v2:a ; v1->v2}"),
            Err(EilError::InvalidEdge { .. })
        ));
        assert!(parse_eil_graph("{v1:a, v2:a ; v1->v2}").is_ok());
        assert_eq!(parse_graph("{v1:a}").unwrap().edge_count(), 0);
        assert_eq!(
            parse_graph("{v1:a, v2:b, v3:c ; v1->v2, v2->v1}"),
            Err(EilError::NotATree)
        );
        assert_eq!(parse_graph("{v1:a, v2:b}"), Err(EilError::NotATree));
        assert!(matches!(parse_graph("{v1:a ; v1-v2}"), Err(EilError::Parse(_))));
        let labelled = parse_graph("{v1:(a)b, v2:c ; v1->v2}").unwrap();
        assert_eq!(labelled.label(0), &s("(a)b"));
        assert_eq!(labelled.to_string(), "{v1:(a)b, v2:c ; v1->v2}");
    }

    #[test]
    fn reduction_examples() {
        let g = parse_graph("{v1:a, v2:b, v3:c ; v1->v2, v2->v3}").unwrap();
        let terms = reduce_at(&g, "v2").unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0, -1);
        assert_eq!(terms[0].1.to_string(), "{v1:a(b), v3:c ; v1->v3}");
        assert_eq!(terms[1].0, 1);
        assert_eq!(terms[1].1.to_string(), "{v1:a, v3:(b)c ; v1->v3}");

        let mut expected = SymbolSum::zero();
        expected.add_term(s("(a(b))c"), q(-1));
        expected.add_term(s("(a)(b)c"), q(1));
        assert_eq!(reduce_full(&g, &["v2", "v1"]).unwrap(), expected);
        let mut other = SymbolSum::zero();
        other.add_term(s("(a)b(c)"), q(-1));
        assert_eq!(reduce_full(&g, &["v1", "v3"]).unwrap(), other);

        let edge = parse_graph("{v1:a, v2:b ; v1->v2}").unwrap();
        let r = reduce_at(&edge, "v1").unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].0, 1);
        assert_eq!(r[0].1.label(0), &s("(a)b"));

        let single = parse_graph("{v1:(a)b}").unwrap();
        assert_eq!(reduce_at(&single, "v1"), Err(EilError::IsolatedVertex("v1".into())));
        assert_eq!(reduce_full(&single, &[]).unwrap(), SymbolSum::single(s("(a)b")));
    }

    #[test]
    fn undefined_reduction() {
        let g = parse_graph("{v1:a, v2:b, v3:a ; v1->v2, v2->v3}").unwrap();
        assert!(matches!(
            reduce_at(&g, "v2"),
            Err(EilError::UndefinedReduction { .. })
        ));
        assert!(reduce_full(&g, &["v1", "v3"]).is_ok());
    }

    #[test]
    fn symbol_round_trip() {
        for text in ["(a)b", "((a)b)a", "(a)(c)b", "((a)(a)b)c", "(((b)a)(c)b)a"] {
            let sigma = s(text);
            let (g, order) = graph_of_symbol(&sigma);
            assert!(g.is_eil());
            let refs: Vec<&str> = order.iter().map(String::as_str).collect();
            assert_eq!(reduce_full(&g, &refs).unwrap(), SymbolSum::single(sigma));
        }
        let (g, order) = graph_of_symbol(&s("((a)b)a"));
        assert_eq!(g.to_string(), "{v1:a, v2:b, v3:a ; v2->v1, v3->v2}");
        assert_eq!(order, vec!["v3", "v2"]);
    }

    #[test]
    fn default_orders() {
        let star = parse_graph("{v1:a, v2:b, v3:c, v4:d, v5:e ; v2->v1, v3->v1, v4->v1, v5->v1}").unwrap();
        assert_eq!(default_order(&star), vec!["v2", "v3", "v4", "v1"]);
        let edge = parse_graph("{v1:a, v2:b ; v1->v2}").unwrap();
        assert_eq!(default_order(&edge), vec!["v1"]);
    }

    #[test]
    fn canonical_forms() {
        let ab = canonicalize(&parse_graph("{v1:a, v2:b ; v1->v2}").unwrap());
        let ba = canonicalize(&parse_graph("{v1:a, v2:b ; v2->v1}").unwrap());
        assert_eq!(ab.encoding, ba.encoding);
        assert_eq!(ab.sign, -ba.sign);

        let p = canonicalize(&parse_graph("{x:a, y:b, z:c ; x->y, y->z}").unwrap());
        let r = canonicalize(&parse_graph("{x:c, y:b, z:a ; y->x, z->y}").unwrap());
        assert_eq!(p.encoding, r.encoding);
        assert_eq!(p.sign * r.sign, 1);
        let flipped = canonicalize(&parse_graph("{x:a, y:b, z:c ; y->x, z->y}").unwrap());
        assert_eq!(flipped.encoding, p.encoding);
        assert_eq!(flipped.sign, p.sign);

        let sym = canonicalize(&parse_eil_graph("{v1:a, v2:a ; v1->v2}").unwrap());
        assert_eq!(sym.sign, 0);
    }

    #[test]
    fn distinct_vertex_enumeration() {
        let md = |pairs: &[(&str, usize)]| -> BTreeMap<Generator, usize> {
            pairs.iter().map(|&(g, n)| (Generator::new(g), n)).collect()
        };
        assert_eq!(enumerate_distinct_vertex_graphs(&md(&[("a", 1), ("b", 1)])).unwrap().len(), 1);
        assert_eq!(enumerate_distinct_vertex_graphs(&md(&[("a", 2), ("b", 1)])).unwrap().len(), 1);
        let star = enumerate_distinct_vertex_graphs(&md(&[("a", 4), ("b", 1)])).unwrap();
        assert_eq!(star.len(), 1);
        assert_eq!(star[0].degree(0), 4);
        assert!(matches!(
            enumerate_distinct_vertex_graphs(&md(&[("a", 8)])),
            Err(EilError::TooLarge { size: 8, bound: 7 })
        ));
        assert_eq!(labelled_trees(4).len(), 16);
    }

    #[test]
    fn graph_sum_printing_and_parsing() {
        let s = parse_graph_sum("1/2 * {v1:a, v2:b ; v1->v2} - 1/2 * {v1:b, v2:a ; v1->v2}").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s, GraphSum::single(&parse_graph("{v1:a, v2:b ; v1->v2}").unwrap()));
        let z = parse_graph_sum("{v1:a, v2:b ; v1->v2} + {v1:a, v2:b ; v2->v1}").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        let printed = s.to_string();
        assert_eq!(parse_graph_sum(&printed).unwrap(), s);
    }

    #[test]
    fn eval_examples() {
        let w = crate::words::parse_word_expr;
        let g = parse_graph("{v1:a, v2:b ; v1->v2}").unwrap();
        assert_eq!(eval_graph(&g, &w("a b a^-1 b^-1").unwrap().to_word()).unwrap(), q(1));
        let path = graph_of_symbol(&s("((a)b)a")).0;
        assert_eq!(eval_graph(&path, &w("[a a, [b, a c]]").unwrap().to_word()).unwrap(), q(4));
        assert_eq!(eval_graph(&path, &Word::empty()).unwrap(), q(0));
    }
}
