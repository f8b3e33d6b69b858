//! Bound quiver algebras `kQ/(R)` with homogeneous admissible relations.
//!
//! Paths are stored in traversal order: `arrows[0]` is applied first. The
//! algebra is built one path length at a time. A path of length `L >= 2` is
//! its first arrow followed by a path of length `L - 1`, so modulo the ideal
//! the length-`L` part is spanned by the words `a . q` with `q` a normal path
//! of length `L - 1`. The ideal contributes, on top of what it already
//! contains in length `L - 1`, the products `r . w` of a relation with a
//! normal path. Row reduction of those products in the word coordinates
//! leaves the non-pivot words as the normal paths of length `L`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{Rat, RatMatrix};
use crate::quiver::{Quiver, QuiverError};
use crate::repmod::Representation;

/// Longest path length explored before an algebra is declared infinite
/// dimensional.
pub const DEFAULT_LENGTH_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    /// Arrow indices in traversal order.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Rational combination of parallel paths, all of one length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// (coefficient, arrow indices in traversal order)
    pub terms: Vec<(Rat, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Rat, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    /// A single path, given by arrow labels in composition order (the
    /// rightmost label is applied first).
    pub fn monomial(q: &Quiver, composition: &[&str]) -> Result<Self, AlgebraError> {
        Ok(Relation { terms: vec![(Rat::one(), traversal(q, composition)?)] })
    }

    /// Combination of paths given by labels in composition order.
    pub fn from_labels(q: &Quiver, terms: &[(Rat, &[&str])]) -> Result<Self, AlgebraError> {
        let terms = terms
            .iter()
            .map(|(c, labels)| Ok((c.clone(), traversal(q, labels)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(Relation { terms })
    }
}

/// Arrow indices in traversal order from labels in composition order.
pub fn traversal(q: &Quiver, composition: &[&str]) -> Result<Vec<usize>, AlgebraError> {
    composition
        .iter()
        .rev()
        .map(|l| q.arrow_index(l).ok_or_else(|| AlgebraError::Quiver(QuiverError::UnknownArrow((*l).into()))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    Quiver(QuiverError),
    /// A relation with no nonzero term.
    EmptyRelation(usize),
    /// A term that is not a path: consecutive arrows do not compose.
    NotAPath(usize),
    /// A term of length below two, so the ideal would not be admissible.
    ShortTerm(usize),
    /// Terms with different endpoints.
    NotParallel(usize),
    /// Terms of different lengths.
    NonHomogeneousRelation(usize),
    /// Nonzero paths still exist at the length cap.
    LengthCapExceeded(usize),
    UnknownVertex(String),
}

impl core::error::Error for AlgebraError {}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Quiver(e) => write!(f, "{e}"),
            AlgebraError::EmptyRelation(i) => write!(f, "relation {i} has no nonzero term"),
            AlgebraError::NotAPath(i) => write!(f, "relation {i} has a term whose arrows do not compose"),
            AlgebraError::ShortTerm(i) => write!(f, "relation {i} has a term of length below 2 (not admissible)"),
            AlgebraError::NotParallel(i) => write!(f, "relation {i} mixes paths with different endpoints"),
            AlgebraError::NonHomogeneousRelation(i) => {
                write!(f, "relation {i} mixes paths of different lengths (only homogeneous relations are supported)")
            }
            AlgebraError::LengthCapExceeded(l) => {
                write!(f, "nonzero paths of length {l} remain; the algebra does not look finite dimensional")
            }
            AlgebraError::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
        }
    }
}

impl From<QuiverError> for AlgebraError {
    fn from(e: QuiverError) -> Self {
        AlgebraError::Quiver(e)
    }
}

/// Sparse vector over the path basis.
pub type Element = BTreeMap<usize, Rat>;

fn axpy(acc: &mut Element, c: &Rat, x: &Element) {
    for (k, v) in x {
        let e = acc.entry(*k).or_insert_with(Rat::zero);
        *e += c * v;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Reduction data for one path length `>= 2`.
#[derive(Debug, Clone)]
struct Level {
    /// Word coordinates: (first arrow, basis id of the remaining path).
    words: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    /// Reduced rows of the ideal, each with its pivot word.
    rows: Vec<(usize, Vec<Rat>)>,
    /// Basis id of each non-pivot word.
    normal: BTreeMap<usize, usize>,
}

impl Level {
    fn reduce(&self, mut v: Vec<Rat>) -> Element {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (self.normal[&i], x))
            .collect()
    }
}

/// Finite-dimensional algebra `kQ/(R)` with its basis of normal paths.
#[derive(Debug, Clone)]
pub struct BoundAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    /// Basis ids of each path length.
    by_length: Vec<Vec<usize>>,
    levels: Vec<Option<Level>>,
}

impl BoundAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self, AlgebraError> {
        Self::with_length_cap(quiver, relations, DEFAULT_LENGTH_CAP)
    }

    /// Path algebra without relations (must be acyclic to be finite).
    pub fn path_algebra(quiver: Quiver) -> Result<Self, AlgebraError> {
        Self::new(quiver, Vec::new())
    }

    pub fn with_length_cap(quiver: Quiver, relations: Vec<Relation>, cap: usize) -> Result<Self, AlgebraError> {
        let relations = validate(&quiver, relations)?;
        let n = quiver.vertex_count();
        let mut alg = BoundAlgebra {
            quiver,
            relations,
            basis: (0..n).map(Path::trivial).collect(),
            by_length: vec![(0..n).collect()],
            levels: vec![None, None],
        };
        let arrows: Vec<usize> = (0..alg.quiver.arrows().len()).collect();
        let mut first = Vec::new();
        for &a in &arrows {
            let arr = alg.quiver.arrow(a);
            alg.basis.push(Path { source: arr.source, target: arr.target, arrows: vec![a] });
            first.push(alg.basis.len() - 1);
        }
        alg.by_length.push(first);

        let mut len = 2;
        while !alg.by_length[len - 1].is_empty() {
            if len > cap {
                return Err(AlgebraError::LengthCapExceeded(cap));
            }
            alg.build_level(len);
            len += 1;
        }
        Ok(alg)
    }

    fn build_level(&mut self, len: usize) {
        let mut words = Vec::new();
        for a in 0..self.quiver.arrows().len() {
            let t = self.quiver.arrow(a).target;
            for &q in &self.by_length[len - 1] {
                if self.basis[q].source == t {
                    words.push((a, q));
                }
            }
        }
        let index: BTreeMap<(usize, usize), usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();

        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for rel in &self.relations {
            let rlen = rel.terms[0].1.len();
            if rlen > len {
                continue;
            }
            let rt = self.path_target(&rel.terms[0].1);
            for &w in &self.by_length[len - rlen] {
                if self.basis[w].source != rt {
                    continue;
                }
                let mut v = vec![Rat::zero(); words.len()];
                for (c, p) in &rel.terms {
                    let mut rest: Vec<usize> = p[1..].to_vec();
                    rest.extend_from_slice(&self.basis[w].arrows);
                    let src = self.quiver.arrow(p[0]).target;
                    for (q, x) in self.normal_form(src, &rest) {
                        v[index[&(p[0], q)]] += c * &x;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    gens.push(v);
                }
            }
        }

        let (rows, pivots) = if gens.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let m = RatMatrix::from_rows(gens, words.len()).expect("uniform rows");
            let (r, pivots) = m.rref();
            let rows = pivots.iter().enumerate().map(|(i, &p)| (p, r.row(i).to_vec())).collect();
            (rows, pivots)
        };
        let mut normal = BTreeMap::new();
        let mut ids = Vec::new();
        for (i, &(a, q)) in words.iter().enumerate() {
            if pivots.contains(&i) {
                continue;
            }
            let mut arrows = vec![a];
            arrows.extend_from_slice(&self.basis[q].arrows);
            let p = Path { source: self.quiver.arrow(a).source, target: self.basis[q].target, arrows };
            self.basis.push(p);
            normal.insert(i, self.basis.len() - 1);
            ids.push(self.basis.len() - 1);
        }
        self.by_length.push(ids);
        self.levels.push(Some(Level { words, index, rows, normal }));
    }

    fn path_target(&self, arrows: &[usize]) -> usize {
        self.quiver.arrow(*arrows.last().expect("nonempty path")).target
    }

    /// Normal form of the path starting at `source` and traversing `arrows`
    /// (which must compose), as a combination of basis paths.
    pub fn normal_form(&self, source: usize, arrows: &[usize]) -> Element {
        match arrows.len() {
            0 => Element::from([(source, Rat::one())]),
            1 => Element::from([(self.quiver.vertex_count() + arrows[0], Rat::one())]),
            l => {
                let Some(Some(level)) = self.levels.get(l) else {
                    return Element::new();
                };
                let rest = self.normal_form(self.quiver.arrow(arrows[0]).target, &arrows[1..]);
                let mut v = vec![Rat::zero(); level.words.len()];
                for (q, x) in rest {
                    v[level.index[&(arrows[0], q)]] += x;
                }
                level.reduce(v)
            }
        }
    }

    /// Product `p` then `q` of basis paths (zero unless they compose).
    pub fn multiply(&self, p: usize, q: usize) -> Element {
        let (bp, bq) = (&self.basis[p], &self.basis[q]);
        if bp.target != bq.source {
            return Element::new();
        }
        let mut arrows = bp.arrows.clone();
        arrows.extend_from_slice(&bq.arrows);
        self.normal_form(bp.source, &arrows)
    }

    /// Basis path `p` followed by arrow `a`.
    pub fn extend(&self, p: usize, a: usize) -> Element {
        let bp = &self.basis[p];
        if bp.target != self.quiver.arrow(a).source {
            return Element::new();
        }
        let mut arrows = bp.arrows.clone();
        arrows.push(a);
        self.normal_form(bp.source, &arrows)
    }

    /// Product of two elements.
    pub fn multiply_elements(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (p, a) in x {
            for (q, b) in y {
                axpy(&mut out, &(a * b), &self.multiply(*p, *q));
            }
        }
        out
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Number of basis paths of each length, from length zero up.
    pub fn graded_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.by_length.iter().map(Vec::len).collect();
        while d.len() > 1 && d.last() == Some(&0) {
            d.pop();
        }
        d
    }

    /// Length of the longest nonzero path.
    pub fn loewy_length(&self) -> usize {
        self.graded_dims().len()
    }

    pub fn is_hereditary_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    /// Basis paths from `v` to `w`.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&p| self.basis[p].source == v && self.basis[p].target == w).collect()
    }

    /// Basis paths starting at `v`.
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&p| self.basis[p].source == v).collect()
    }

    /// Labels of a basis path in composition order (rightmost first).
    pub fn composition_labels(&self, p: usize) -> Vec<String> {
        self.basis[p].arrows.iter().rev().map(|&a| self.quiver.arrow(a).label.clone()).collect()
    }

    /// Reversed quiver with reversed relations.
    pub fn opposite(&self) -> Result<BoundAlgebra, AlgebraError> {
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                    .collect(),
            })
            .collect();
        BoundAlgebra::new(self.quiver.opposite(), rels)
    }

    pub fn vertex(&self, name: &str) -> Result<usize, AlgebraError> {
        self.quiver.vertex_index(name).ok_or_else(|| AlgebraError::UnknownVertex(name.into()))
    }
}

fn validate(q: &Quiver, relations: Vec<Relation>) -> Result<Vec<Relation>, AlgebraError> {
    let mut out = Vec::new();
    for (i, r) in relations.into_iter().enumerate() {
        let mut merged: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        for (c, p) in r.terms {
            *merged.entry(p).or_insert_with(Rat::zero) += c;
        }
        let terms: Vec<(Rat, Vec<usize>)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
        let Some((_, p0)) = terms.first() else {
            return Err(AlgebraError::EmptyRelation(i));
        };
        let mut ends = None;
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(AlgebraError::ShortTerm(i));
            }
            if p.iter().any(|&a| a >= q.arrows().len()) {
                return Err(AlgebraError::NotAPath(i));
            }
            if p.windows(2).any(|w| q.arrow(w[0]).target != q.arrow(w[1]).source) {
                return Err(AlgebraError::NotAPath(i));
            }
            if p.len() != p0.len() {
                return Err(AlgebraError::NonHomogeneousRelation(i));
            }
            let e = (q.arrow(p[0]).source, q.arrow(p[p.len() - 1]).target);
            if *ends.get_or_insert(e) != e {
                return Err(AlgebraError::NotParallel(i));
            }
        }
        out.push(Relation { terms });
    }
    Ok(out)
}

/// One simple module per vertex.
pub fn simples(a: &Arc<BoundAlgebra>) -> Vec<Representation> {
    (0..a.vertex_count()).map(|v| Representation::simple(a, v)).collect()
}

/// Indecomposable projective at vertex `v`: the space at `w` has basis the
/// normal paths from `v` to `w`, and an arrow acts by extending paths.
pub fn projective(a: &Arc<BoundAlgebra>, v: usize) -> Representation {
    let n = a.vertex_count();
    let spaces: Vec<Vec<usize>> = (0..n).map(|w| a.paths_between(v, w)).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, arr)| {
            let src = &spaces[arr.source];
            let tgt = &spaces[arr.target];
            let pos: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let mut m = RatMatrix::zeros(tgt.len(), src.len());
            for (j, &p) in src.iter().enumerate() {
                for (q, c) in a.extend(p, k) {
                    m[(pos[&q], j)] = c;
                }
            }
            m
        })
        .collect();
    Representation::new(a.clone(), spaces.iter().map(Vec::len).collect(), maps).expect("projectives satisfy the relations")
}

pub fn projective_by_name(a: &Arc<BoundAlgebra>, name: &str) -> Result<Representation, AlgebraError> {
    Ok(projective(a, a.vertex(name)?))
}
