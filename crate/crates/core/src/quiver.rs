//! Finite quivers: adjacency matrices, Frobenius-Perron dimension, cycle
//! numbers, Dynkin classification of the underlying graph and positive roots.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::Digraph;
use crate::spectral::{rho_counts, SpectralValue, NUMERIC_TOLERANCE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Finite directed multigraph with labelled arrows. Loops and parallel
/// arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    DuplicateVertex(String),
    DuplicateLabel(String),
    UnknownVertex(String),
    UnknownArrow(String),
    Disconnected,
    NotDynkin,
}

impl core::error::Error for QuiverError {}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::DuplicateVertex(v) => write!(f, "vertex `{v}` declared twice"),
            QuiverError::DuplicateLabel(a) => write!(f, "arrow label `{a}` used twice"),
            QuiverError::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            QuiverError::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            QuiverError::Disconnected => write!(f, "underlying graph is disconnected"),
            QuiverError::NotDynkin => write!(f, "underlying graph is not a Dynkin diagram"),
        }
    }
}

impl Quiver {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self, QuiverError> {
        let mut q = Quiver { vertices: Vec::new(), arrows: Vec::new() };
        for v in vertices {
            let v = v.into();
            if q.vertices.contains(&v) {
                return Err(QuiverError::DuplicateVertex(v));
            }
            q.vertices.push(v);
        }
        Ok(q)
    }

    /// Vertices named `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        Quiver { vertices: (1..=n).map(|i| i.to_string()).collect(), arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, label: &str, from: &str, to: &str) -> Result<usize, QuiverError> {
        let s = self.vertex_index(from).ok_or_else(|| QuiverError::UnknownVertex(from.into()))?;
        let t = self.vertex_index(to).ok_or_else(|| QuiverError::UnknownVertex(to.into()))?;
        self.add_arrow_at(label, s, t)
    }

    pub fn add_arrow_at(&mut self, label: &str, source: usize, target: usize) -> Result<usize, QuiverError> {
        if self.arrows.iter().any(|a| a.label == label) {
            return Err(QuiverError::DuplicateLabel(label.into()));
        }
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(QuiverError::UnknownVertex(format!("#{v}")));
            }
        }
        self.arrows.push(Arrow { label: label.into(), source, target });
        Ok(self.arrows.len() - 1)
    }

    /// Quiver on `1..=n` whose arrow `i -> j` count is `counts[i][j]`;
    /// arrows are labelled `a0, a1, ...`.
    pub fn from_adjacency(counts: &[Vec<u64>]) -> Self {
        let mut q = Quiver::with_vertices(counts.len());
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    let label = format!("a{}", q.arrows.len());
                    q.arrows.push(Arrow { label, source: i, target: j });
                }
            }
        }
        q
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Entry `(i, j)` counts the arrows `i -> j`.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u64; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    fn adjacency_flat(&self) -> Vec<u64> {
        self.adjacency().into_iter().flatten().collect()
    }

    /// Same vertices and labels, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Symmetric adjacency of the underlying undirected multigraph; a loop
    /// contributes 2 to its diagonal entry.
    pub fn underlying_adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u64; n]; n];
        for a in &self.arrows {
            if a.source == a.target {
                m[a.source][a.source] += 2;
            } else {
                m[a.source][a.target] += 1;
                m[a.target][a.source] += 1;
            }
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let adj = self.underlying_adjacency();
        let g = Digraph::from_fn(n, |i, j| adj[i][j] > 0);
        g.reachable_from(0).iter().all(|&r| r)
    }

    fn digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.vertex_count());
        for a in &self.arrows {
            g.add_edge(a.source, a.target);
        }
        g
    }

    pub fn is_acyclic(&self) -> bool {
        self.digraph().is_acyclic()
    }
}

/// Perron root of the adjacency matrix.
pub fn quiver_fpdim(q: &Quiver) -> SpectralValue {
    rho_counts(q.vertex_count(), &q.adjacency_flat())
}

/// Frobenius-Perron dimension of a finite family of quivers: the largest
/// member value.
pub fn family_fpdim<'a>(family: impl IntoIterator<Item = &'a Quiver>) -> SpectralValue {
    family.into_iter().map(quiver_fpdim).fold(SpectralValue::zero(), SpectralValue::max)
}

/// Number of cycles, saturated at two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleCount {
    Zero,
    One,
    AtLeastTwo,
}

impl CycleCount {
    fn from_count(n: u64) -> Self {
        match n {
            0 => CycleCount::Zero,
            1 => CycleCount::One,
            _ => CycleCount::AtLeastTwo,
        }
    }
}

impl fmt::Display for CycleCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleCount::Zero => "0",
            CycleCount::One => "1",
            CycleCount::AtLeastTwo => ">=2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleNumber {
    pub per_vertex: Vec<CycleCount>,
    pub global: CycleCount,
}

/// Counts first-return oriented cycles at every vertex: closed walks that
/// meet their base vertex only at the two ends.
///
/// At a vertex `v` such walks are the paths from a copy of `v` keeping only
/// its outgoing arrows to a copy keeping only its incoming arrows, in the
/// quiver with `v` deleted. If a vertex on such a path lies on a cycle
/// avoiding `v`, there are infinitely many; otherwise the relevant part is
/// acyclic and the paths are counted directly.
pub fn cycle_number(q: &Quiver) -> CycleNumber {
    let n = q.vertex_count();
    let per_vertex: Vec<CycleCount> = (0..n).map(|v| first_return_count(q, v)).collect();
    let global = per_vertex.iter().copied().max().unwrap_or(CycleCount::Zero);
    CycleNumber { per_vertex, global }
}

fn first_return_count(q: &Quiver, v: usize) -> CycleCount {
    let n = q.vertex_count();
    let mut mult = vec![vec![0u64; n]; n];
    for a in q.arrows() {
        mult[a.source][a.target] += 1;
    }
    let loops = mult[v][v];
    let rest = Digraph::from_fn(n, |i, j| i != v && j != v && mult[i][j] > 0);

    let mut forward = vec![false; n];
    let mut backward = vec![false; n];
    let rev = rest.reversed();
    for w in 0..n {
        if w != v && mult[v][w] > 0 && !forward[w] {
            for (u, r) in rest.reachable_from(w).into_iter().enumerate() {
                forward[u] |= r;
            }
        }
        if w != v && mult[w][v] > 0 && !backward[w] {
            for (u, r) in rev.reachable_from(w).into_iter().enumerate() {
                backward[u] |= r;
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&u| u != v && forward[u] && backward[u]).collect();
    let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &u)| (u, k)).collect();
    let sub = Digraph::from_fn(keep.len(), |a, b| mult[keep[a]][keep[b]] > 0);
    if !sub.is_acyclic() {
        return CycleCount::AtLeastTwo;
    }

    // Path counts from v into each kept vertex, in topological order.
    let order = topological_order(&sub);
    let mut paths = vec![0u64; keep.len()];
    for &k in &order {
        let u = keep[k];
        let mut total = mult[v][u];
        for (&w, &kw) in &index {
            if mult[w][u] > 0 {
                total = total.saturating_add(paths[kw].saturating_mul(mult[w][u]));
            }
        }
        paths[k] = total.min(2);
    }
    let total = keep.iter().enumerate().fold(loops, |acc, (k, &u)| acc.saturating_add(paths[k].saturating_mul(mult[u][v])));
    CycleCount::from_count(total)
}

fn topological_order(g: &Digraph) -> Vec<usize> {
    let n = g.len();
    let mut indeg = vec![0usize; n];
    for v in 0..n {
        for &w in g.successors(v) {
            indeg[w] += 1;
        }
    }
    let mut ready: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_front() {
        order.push(v);
        for &w in g.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push_back(w);
            }
        }
    }
    order
}

/// Outcome of checking that the cycle number predicts the Frobenius-Perron
/// dimension: 0 iff no cycles, 1 iff exactly one cycle per vertex at most,
/// above 1 otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct TrichotomyReport {
    pub fpdim: SpectralValue,
    pub cycles: CycleNumber,
    pub pass: bool,
}

pub fn fpdim_trichotomy_check(q: &Quiver) -> TrichotomyReport {
    let fpdim = quiver_fpdim(q);
    let cycles = cycle_number(q);
    let rho = fpdim.value;
    let zero = fpdim.is_zero() || rho.abs() <= NUMERIC_TOLERANCE;
    let one = (rho - 1.0).abs() <= NUMERIC_TOLERANCE;
    let above = rho > 1.0 + NUMERIC_TOLERANCE;
    let pass = (cycles.global == CycleCount::Zero) == zero
        && (cycles.global == CycleCount::One) == one
        && (cycles.global == CycleCount::AtLeastTwo) == above;
    TrichotomyReport { fpdim, cycles, pass }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        })
    }
}

/// Shape of the underlying graph. Extended diagrams of rank `n` have `n + 1`
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Dynkin(DynkinType, usize),
    Extended(DynkinType, usize),
    Other,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(t, n) => write!(f, "{t}{n}"),
            GraphClass::Extended(t, n) => write!(f, "~{t}{n}"),
            GraphClass::Other => write!(f, "other"),
        }
    }
}

/// Pattern-matches the underlying undirected graph against the simply laced
/// Dynkin and extended Dynkin diagrams.
pub fn classify_underlying_graph(q: &Quiver) -> Result<GraphClass, QuiverError> {
    let n = q.vertex_count();
    if n == 0 || !q.is_connected() {
        return Err(QuiverError::Disconnected);
    }
    let adj = q.underlying_adjacency();
    let loops: u64 = (0..n).map(|i| adj[i][i] / 2).sum();
    if loops > 0 {
        return Ok(if n == 1 && loops == 1 { GraphClass::Extended(DynkinType::A, 0) } else { GraphClass::Other });
    }
    let max_mult = adj.iter().flatten().copied().max().unwrap_or(0);
    if max_mult >= 2 {
        return Ok(if n == 2 && max_mult == 2 { GraphClass::Extended(DynkinType::A, 1) } else { GraphClass::Other });
    }
    let degree: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&c| c > 0).count()).collect();
    let edges: usize = degree.iter().sum::<usize>() / 2;

    if edges == n {
        let cycle = n >= 3 && degree.iter().all(|&d| d == 2);
        return Ok(if cycle { GraphClass::Extended(DynkinType::A, n - 1) } else { GraphClass::Other });
    }
    if edges + 1 != n {
        return Ok(GraphClass::Other);
    }
    // Trees from here on.
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| adj[v][w] > 0).collect()).collect();
    let neighbours = |v: usize| nbrs[v].iter().copied();
    let arm_length = |from: usize, first: usize| {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while degree[cur] == 2 {
            let next = neighbours(cur).find(|&w| w != prev).expect("degree two");
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, degree[cur] == 1)
    };
    let class = match branch.as_slice() {
        [] => GraphClass::Dynkin(DynkinType::A, n),
        [c] if degree[*c] == 4 => {
            if n == 5 {
                GraphClass::Extended(DynkinType::D, 4)
            } else {
                GraphClass::Other
            }
        }
        [c] if degree[*c] == 3 => {
            let mut arms: Vec<usize> = neighbours(*c).map(|w| arm_length(*c, w).0).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => GraphClass::Dynkin(DynkinType::D, k + 3),
                [1, 2, 2] => GraphClass::Dynkin(DynkinType::E, 6),
                [1, 2, 3] => GraphClass::Dynkin(DynkinType::E, 7),
                [1, 2, 4] => GraphClass::Dynkin(DynkinType::E, 8),
                [2, 2, 2] => GraphClass::Extended(DynkinType::E, 6),
                [1, 3, 3] => GraphClass::Extended(DynkinType::E, 7),
                [1, 2, 5] => GraphClass::Extended(DynkinType::E, 8),
                _ => GraphClass::Other,
            }
        }
        [c1, c2] if degree[*c1] == 3 && degree[*c2] == 3 => {
            let leaves = |c: usize| neighbours(c).filter(|&w| degree[w] == 1).count();
            if leaves(*c1) == 2 && leaves(*c2) == 2 {
                GraphClass::Extended(DynkinType::D, n - 1)
            } else {
                GraphClass::Other
            }
        }
        _ => GraphClass::Other,
    };
    Ok(class)
}

fn graph_quiver(n: usize, edges: &[(usize, usize)]) -> Quiver {
    let mut q = Quiver::with_vertices(n);
    for (k, &(s, t)) in edges.iter().enumerate() {
        q.arrows.push(Arrow { label: format!("a{}", k + 1), source: s, target: t });
    }
    q
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// The Dynkin diagram of the given type and rank, each edge oriented from
/// the smaller to the larger vertex index. `None` for invalid ranks.
pub fn dynkin_quiver(t: DynkinType, rank: usize) -> Option<Quiver> {
    let edges = match t {
        DynkinType::A if rank >= 1 => path_edges(rank),
        DynkinType::D if rank >= 4 => {
            let mut e = path_edges(rank - 1);
            e.push((rank - 3, rank - 1));
            e
        }
        DynkinType::E if (6..=8).contains(&rank) => {
            let mut e = path_edges(rank - 1);
            e.push((2, rank - 1));
            e
        }
        _ => return None,
    };
    Some(graph_quiver(rank, &edges))
}

/// The extended Dynkin diagram of the given type and rank (rank + 1
/// vertices). `None` for invalid ranks.
pub fn extended_dynkin_quiver(t: DynkinType, rank: usize) -> Option<Quiver> {
    let n = rank + 1;
    let edges = match t {
        DynkinType::A if rank == 0 => vec![(0, 0)],
        DynkinType::A if rank == 1 => vec![(0, 1), (0, 1)],
        DynkinType::A => {
            let mut e = path_edges(n);
            e.push((0, n - 1));
            e
        }
        DynkinType::D if rank >= 4 => {
            let mut e = path_edges(n - 2);
            e.push((1, n - 2));
            e.push((n - 4, n - 1));
            e
        }
        DynkinType::E if rank == 6 => vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        DynkinType::E if rank == 7 => {
            let mut e = path_edges(7);
            e.push((3, 7));
            e
        }
        DynkinType::E if rank == 8 => {
            let mut e = path_edges(8);
            e.push((2, 8));
            e
        }
        _ => return None,
    };
    Some(graph_quiver(n, &edges))
}

/// All Dynkin and extended Dynkin quivers with rank at most `max_rank`.
pub fn all_dynkin(max_rank: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for t in [DynkinType::A, DynkinType::D, DynkinType::E] {
        for r in 1..=max_rank {
            out.extend(dynkin_quiver(t, r));
        }
    }
    out
}

pub fn all_extended_dynkin(max_rank: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for t in [DynkinType::A, DynkinType::D, DynkinType::E] {
        for r in 0..=max_rank {
            out.extend(extended_dynkin_quiver(t, r));
        }
    }
    out
}

/// Positive roots of the root system of a Dynkin quiver's underlying
/// graph, as dimension vectors sorted by height then lexicographically.
/// Obtained by closing the simple roots under the simple reflections.
pub fn positive_roots(q: &Quiver) -> Result<Vec<Vec<i64>>, QuiverError> {
    match classify_underlying_graph(q)? {
        GraphClass::Dynkin(..) => {}
        _ => return Err(QuiverError::NotDynkin),
    }
    let n = q.vertex_count();
    let adj = q.underlying_adjacency();
    let reflect = |x: &[i64], i: usize| {
        let pairing: i64 = 2 * x[i] - (0..n).map(|j| adj[i][j] as i64 * x[j]).sum::<i64>();
        let mut y = x.to_vec();
        y[i] -= pairing;
        y
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut todo: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(r) = todo.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for i in 0..n {
            let s = reflect(&r, i);
            if s.iter().all(|&c| c >= 0) && s.iter().any(|&c| c > 0) && !seen.contains(&s) {
                todo.push(s);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    Ok(roots)
}
