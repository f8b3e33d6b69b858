//! Representations of bound quiver algebras: Hom spaces, brick tests,
//! minimal projective resolutions and Ext dimensions.
//!
//! An arrow `a: s -> t` acts as a `dim_t x dim_s` matrix, and a morphism
//! `f: M -> N` satisfies `f_t M_a = N_a f_s` for every arrow.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{projective, BoundAlgebra};
use crate::exactlin::{Rat, RatMatrix};
use crate::quiver::{positive_roots, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    AlgebraMismatch,
    WrongVertexCount { expected: usize, found: usize },
    WrongArrowCount { expected: usize, found: usize },
    ShapeMismatch { arrow: usize, expected: (usize, usize), found: (usize, usize) },
    RelationViolated(usize),
    ZeroModule,
    HasRelations,
    NotDynkin(QuiverError),
    SearchExhausted { root: Vec<i64> },
}

impl core::error::Error for RepError {}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::AlgebraMismatch => write!(f, "modules over different algebras"),
            RepError::WrongVertexCount { expected, found } => {
                write!(f, "dimension vector has {found} entries, expected {expected}")
            }
            RepError::WrongArrowCount { expected, found } => write!(f, "{found} arrow maps given, expected {expected}"),
            RepError::ShapeMismatch { arrow, expected, found } => write!(
                f,
                "map of arrow {arrow} is {}x{}, expected {}x{}",
                found.0, found.1, expected.0, expected.1
            ),
            RepError::RelationViolated(i) => write!(f, "relation {i} does not vanish on the module"),
            RepError::ZeroModule => write!(f, "the zero module"),
            RepError::HasRelations => write!(f, "the algebra has relations (Euler form needs a path algebra)"),
            RepError::NotDynkin(e) => write!(f, "{e}"),
            RepError::SearchExhausted { root } => write!(f, "no brick found at dimension vector {root:?}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Representation {
    algebra: Arc<BoundAlgebra>,
    dimvec: Vec<usize>,
    maps: Vec<RatMatrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.dimvec == other.dimvec && self.maps == other.maps
    }
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<BoundAlgebra>, dimvec: Vec<usize>, maps: Vec<RatMatrix>) -> Result<Self, RepError> {
        let q = algebra.quiver();
        if dimvec.len() != q.vertex_count() {
            return Err(RepError::WrongVertexCount { expected: q.vertex_count(), found: dimvec.len() });
        }
        if maps.len() != q.arrows().len() {
            return Err(RepError::WrongArrowCount { expected: q.arrows().len(), found: maps.len() });
        }
        for (k, (a, m)) in q.arrows().iter().zip(&maps).enumerate() {
            let expected = (dimvec[a.target], dimvec[a.source]);
            if (m.rows(), m.cols()) != expected {
                return Err(RepError::ShapeMismatch { arrow: k, expected, found: (m.rows(), m.cols()) });
            }
        }
        let rep = Representation { algebra, dimvec, maps };
        for (i, r) in rep.algebra.relations().iter().enumerate() {
            let (c0, p0) = &r.terms[0];
            let mut sum = rep.arrows_action(p0).scale(c0);
            for (c, p) in &r.terms[1..] {
                sum = sum.add(&rep.arrows_action(p).scale(c));
            }
            if !sum.is_zero() {
                return Err(RepError::RelationViolated(i));
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: &Arc<BoundAlgebra>) -> Self {
        Self::with_zero_maps(algebra, vec![0; algebra.vertex_count()])
    }

    /// Semisimple module with the given dimension vector.
    pub fn with_zero_maps(algebra: &Arc<BoundAlgebra>, dimvec: Vec<usize>) -> Self {
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| RatMatrix::zeros(dimvec[a.target], dimvec[a.source]))
            .collect();
        Representation { algebra: algebra.clone(), dimvec, maps }
    }

    pub fn simple(algebra: &Arc<BoundAlgebra>, v: usize) -> Self {
        let mut d = vec![0; algebra.vertex_count()];
        d[v] = 1;
        Self::with_zero_maps(algebra, d)
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra> {
        &self.algebra
    }

    pub fn dimvec(&self) -> &[usize] {
        &self.dimvec
    }

    pub fn total_dim(&self) -> usize {
        self.dimvec.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &RatMatrix {
        &self.maps[arrow]
    }

    /// Action of the composable arrow sequence (traversal order); the
    /// identity for an empty sequence is not defined here, see
    /// [`path_action`](Self::path_action).
    fn arrows_action(&self, arrows: &[usize]) -> RatMatrix {
        let mut m = self.maps[arrows[0]].clone();
        for &a in &arrows[1..] {
            m = &self.maps[a] * &m;
        }
        m
    }

    /// Action of basis path `p` of the algebra, `V_source -> V_target`.
    pub fn path_action(&self, p: usize) -> RatMatrix {
        let path = &self.algebra.basis()[p];
        if path.is_trivial() {
            RatMatrix::identity(self.dimvec[path.source])
        } else {
            self.arrows_action(&path.arrows)
        }
    }

    fn same_algebra(&self, other: &Representation) -> Result<(), RepError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(RepError::AlgebraMismatch)
        }
    }

    /// Subspaces (column bases per vertex) of the smallest subrepresentation
    /// containing the given elements `(vertex, vector)`.
    pub fn generated_subspaces(&self, gens: &[(usize, Vec<Rat>)]) -> Vec<RatMatrix> {
        let n = self.dimvec.len();
        let mut cols: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); n];
        for (v, x) in gens {
            for p in self.algebra.paths_from(*v) {
                let t = self.algebra.basis()[p].target;
                cols[t].push(self.path_action(p).mul_vec(x));
            }
        }
        (0..n)
            .map(|w| {
                if cols[w].is_empty() {
                    return RatMatrix::zeros(self.dimvec[w], 0);
                }
                let basis = RatMatrix::from_columns(&cols[w], self.dimvec[w]).column_space_basis();
                RatMatrix::from_columns(&basis, self.dimvec[w])
            })
            .collect()
    }

    /// The subrepresentation on the given subspaces (columns form a basis at
    /// each vertex; they must be closed under the arrows).
    pub fn subrepresentation(&self, sub: &[RatMatrix]) -> Representation {
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let image = &self.maps[k] * &sub[a.source];
                sub[a.target].solve_matrix(&image).expect("subspaces are closed under the arrows")
            })
            .collect();
        Representation { algebra: self.algebra.clone(), dimvec: sub.iter().map(RatMatrix::cols).collect(), maps }
    }

    /// The quotient by a subrepresentation given by column bases.
    pub fn quotient(&self, sub: &[RatMatrix]) -> Representation {
        let n = self.dimvec.len();
        // Coordinates of each vertex space in the basis (complement | sub).
        let comps: Vec<RatMatrix> = (0..n)
            .map(|w| RatMatrix::from_columns(&sub[w].complement_basis(), self.dimvec[w]))
            .collect();
        let coords: Vec<RatMatrix> = (0..n)
            .map(|w| {
                let full = comps[w].hstack(&sub[w]);
                let inv = full.solve_matrix(&RatMatrix::identity(self.dimvec[w])).expect("basis");
                let rows: Vec<usize> = (0..comps[w].cols()).collect();
                let all: Vec<usize> = (0..self.dimvec[w]).collect();
                inv.submatrix(&rows, &all)
            })
            .collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| &coords[a.target] * &(&self.maps[k] * &comps[a.source]))
            .collect();
        Representation { algebra: self.algebra.clone(), dimvec: comps.iter().map(RatMatrix::cols).collect(), maps }
    }

    /// Sum of the images of all arrows, as column bases per vertex.
    pub fn radical(&self) -> Vec<RatMatrix> {
        let q = self.algebra.quiver();
        (0..self.dimvec.len())
            .map(|w| {
                let mut m = RatMatrix::zeros(self.dimvec[w], 0);
                for (k, a) in q.arrows().iter().enumerate() {
                    if a.target == w {
                        m = m.hstack(&self.maps[k]);
                    }
                }
                RatMatrix::from_columns(&m.column_space_basis(), self.dimvec[w])
            })
            .collect()
    }

    /// Multiplicity of each simple in the top.
    pub fn top_dimvec(&self) -> Vec<usize> {
        self.radical().iter().zip(&self.dimvec).map(|(r, d)| d - r.cols()).collect()
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum(ms: &[Representation]) -> Result<Representation, RepError> {
    let first = ms.first().ok_or(RepError::ZeroModule)?;
    for m in &ms[1..] {
        first.same_algebra(m)?;
    }
    let alg = first.algebra.clone();
    let n = alg.vertex_count();
    let dimvec = (0..n).map(|v| ms.iter().map(|m| m.dimvec[v]).sum()).collect();
    let maps = (0..alg.quiver().arrows().len())
        .map(|k| RatMatrix::block_diagonal(&ms.iter().map(|m| m.maps[k].clone()).collect::<Vec<_>>()))
        .collect();
    Ok(Representation { algebra: alg, dimvec, maps })
}

/// Space of morphisms, each given by one matrix per vertex.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub basis: Vec<Vec<RatMatrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Coefficient matrix of the intertwiner equations; unknowns are the
/// entries of every `f_v` (row-major, vertex by vertex).
fn hom_system(m: &Representation, n: &Representation) -> (RatMatrix, Vec<usize>) {
    let nv = m.dimvec.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dimvec[v] * m.dimvec[v];
    }
    let vars = offset[nv];
    let q = m.algebra.quiver();
    let eqs: usize = q.arrows().iter().map(|a| n.dimvec[a.target] * m.dimvec[a.source]).sum();
    let mut sys = RatMatrix::zeros(eqs, vars);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.maps[k], &n.maps[k]);
        let (ms, mt) = (m.dimvec[s], m.dimvec[t]);
        let ns = n.dimvec[s];
        for i in 0..n.dimvec[t] {
            for j in 0..ms {
                // (f_t M_a)[i][j] = sum_l f_t[i][l] M_a[l][j]
                for l in 0..mt {
                    let c = &ma[(l, j)];
                    if !c.is_zero() {
                        sys[(row, offset[t] + i * mt + l)] += c;
                    }
                }
                // (N_a f_s)[i][j] = sum_l N_a[i][l] f_s[l][j]
                for l in 0..ns {
                    let c = &na[(i, l)];
                    if !c.is_zero() {
                        sys[(row, offset[s] + l * ms + j)] -= c;
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offset)
}

pub fn hom(m: &Representation, n: &Representation) -> Result<HomSpace, RepError> {
    m.same_algebra(n)?;
    let (sys, offset) = hom_system(m, n);
    let basis = sys
        .nullspace_basis()
        .into_iter()
        .map(|x| {
            (0..m.dimvec.len())
                .map(|v| {
                    let (r, c) = (n.dimvec[v], m.dimvec[v]);
                    RatMatrix::from_fn(r, c, |i, j| x[offset[v] + i * c + j].clone())
                })
                .collect()
        })
        .collect();
    Ok(HomSpace { basis })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize, RepError> {
    m.same_algebra(n)?;
    let (sys, _) = hom_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// True iff the endomorphism algebra is one-dimensional.
pub fn is_brick(m: &Representation) -> Result<bool, RepError> {
    if m.is_zero() {
        return Err(RepError::ZeroModule);
    }
    Ok(hom_dim(m, m)? == 1)
}

/// Isomorphism test for bricks, exact: two bricks are isomorphic iff some
/// nonzero morphism between them is invertible, and then every nonzero
/// morphism is.
pub fn bricks_isomorphic(m: &Representation, n: &Representation) -> Result<bool, RepError> {
    if m.dimvec != n.dimvec {
        return Ok(false);
    }
    let h = hom(m, n)?;
    Ok(h.basis.first().is_some_and(|f| f.iter().all(|fv| fv.rows() == 0 || fv.rank() == fv.rows())))
}

/// Hom dimension minus the Euler form, which equals the dimension of Ext^1
/// over a path algebra without relations.
pub fn euler_ext1(m: &Representation, n: &Representation) -> Result<usize, RepError> {
    m.same_algebra(n)?;
    if !m.algebra.relations().is_empty() {
        return Err(RepError::HasRelations);
    }
    let h = hom_dim(m, n)? as i64;
    let form = euler_form(m.algebra.quiver(), &m.dimvec, &n.dimvec);
    Ok((h - form) as usize)
}

/// `<d, e> = sum_v d_v e_v - sum_{a: s -> t} d_s e_t`.
pub fn euler_form(q: &crate::quiver::Quiver, d: &[usize], e: &[usize]) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(x, y)| (x * y) as i64).sum();
    let off: i64 = q.arrows().iter().map(|a| (d[a.source] * e[a.target]) as i64).sum();
    diag - off
}

/// One projective term `P_i = sum_g P_{v_g}` of a resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStep {
    /// Vertex of each generator.
    pub generators: Vec<usize>,
    /// For `i >= 1`: image of each generator of `P_i` in `P_{i-1}`, as
    /// `(generator of P_{i-1}, basis path, coefficient)` triples. For
    /// `i = 0`: empty (the cover of the module itself).
    pub differential: Vec<Vec<(usize, usize, Rat)>>,
}

impl ResolutionStep {
    pub fn multiplicities(&self, vertices: usize) -> Vec<usize> {
        let mut m = vec![0; vertices];
        for &v in &self.generators {
            m[v] += 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// Minimal projective resolution up to a requested depth.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub steps: Vec<ResolutionStep>,
    /// Projective dimension, when a syzygy vanished within the depth.
    pub projective_dimension: Option<usize>,
    /// True when every differential maps generators into the radical.
    pub minimal: bool,
}

/// Concrete projective module `sum_g P_{v_g}` with coordinates
/// `(generator, basis path)` at each vertex.
struct FreeModule {
    rep: Representation,
    coords: Vec<Vec<(usize, usize)>>,
}

fn free_module(alg: &Arc<BoundAlgebra>, projectives: &[Representation], gens: &[usize]) -> FreeModule {
    let n = alg.vertex_count();
    let mut coords = vec![Vec::new(); n];
    for (g, &v) in gens.iter().enumerate() {
        for w in 0..n {
            for p in alg.paths_between(v, w) {
                coords[w].push((g, p));
            }
        }
    }
    let rep = if gens.is_empty() {
        Representation::zero(alg)
    } else {
        direct_sum(&gens.iter().map(|&v| projectives[v].clone()).collect::<Vec<_>>()).expect("same algebra")
    };
    FreeModule { rep, coords }
}

/// Projective cover data of a module: generator vertices and the generator
/// vectors (a basis of a complement of the radical at each vertex).
fn top_generators(m: &Representation) -> (Vec<usize>, Vec<Vec<Rat>>) {
    let rad = m.radical();
    let mut verts = Vec::new();
    let mut vecs = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for x in r.complement_basis() {
            verts.push(v);
            vecs.push(x);
        }
    }
    (verts, vecs)
}

/// Kernel of the cover `P -> M` sending generator `g` to `vecs[g]`, as a
/// subspace of `P` at each vertex.
fn cover_kernel(m: &Representation, free: &FreeModule, vecs: &[Vec<Rat>]) -> Vec<RatMatrix> {
    let n = m.dimvec.len();
    (0..n)
        .map(|w| {
            let cols: Vec<Vec<Rat>> = free.coords[w].iter().map(|&(g, p)| m.path_action(p).mul_vec(&vecs[g])).collect();
            let pi = RatMatrix::from_columns(&cols, m.dimvec[w]);
            let ker = pi.nullspace_basis();
            RatMatrix::from_columns(&ker, free.coords[w].len())
        })
        .collect()
}

/// Minimal projective resolution of `m` computed through `P_depth`.
pub fn minimal_resolution(m: &Representation, depth: usize) -> Resolution {
    let alg = m.algebra.clone();
    let n = alg.vertex_count();
    let projectives: Vec<Representation> = (0..n).map(|v| projective(&alg, v)).collect();

    let mut steps = Vec::new();
    let mut minimal = true;
    let mut current = m.clone();
    // Embedding of `current` into the previous projective, with the
    // coordinates of that projective.
    let mut embedding: Option<(Vec<RatMatrix>, Vec<Vec<(usize, usize)>>)> = None;
    let mut projective_dimension = None;

    for i in 0..=depth {
        if current.is_zero() {
            projective_dimension = Some(i.saturating_sub(1));
            break;
        }
        let (gens, vecs) = top_generators(&current);
        let mut differential = Vec::new();
        if let Some((emb, coords)) = &embedding {
            for (g, x) in gens.iter().zip(&vecs) {
                let image = emb[*g].mul_vec(x);
                let terms: Vec<(usize, usize, Rat)> = image
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (coords[*g][k].0, coords[*g][k].1, c))
                    .collect();
                if terms.iter().any(|(_, p, _)| alg.basis()[*p].is_trivial()) {
                    minimal = false;
                }
                differential.push(terms);
            }
        }
        let free = free_module(&alg, &projectives, &gens);
        steps.push(ResolutionStep { generators: gens, differential });
        if i == depth {
            break;
        }
        let kernel = cover_kernel(&current, &free, &vecs);
        current = free.rep.subrepresentation(&kernel);
        embedding = Some((kernel, free.coords));
    }
    if projective_dimension.is_none() && current.is_zero() {
        projective_dimension = Some(steps.len().saturating_sub(1));
    }
    Resolution { steps, projective_dimension, minimal }
}

/// Matrix of `delta^i: Hom(P_i, N) -> Hom(P_{i+1}, N)` with
/// `Hom(P_i, N) = sum_g N_{v_g}`.
fn coboundary(res: &Resolution, n: &Representation, i: usize) -> RatMatrix {
    let d = n.dimvec();
    let src = &res.steps[i];
    let dom: usize = src.generators.iter().map(|&v| d[v]).sum();
    let Some(next) = res.steps.get(i + 1) else {
        return RatMatrix::zeros(0, dom);
    };
    let mut col_off = vec![0; src.generators.len()];
    for g in 1..src.generators.len() {
        col_off[g] = col_off[g - 1] + d[src.generators[g - 1]];
    }
    let codom: usize = next.generators.iter().map(|&v| d[v]).sum();
    let mut m = RatMatrix::zeros(codom, dom);
    let mut row = 0;
    for (h, &vh) in next.generators.iter().enumerate() {
        for (g, p, c) in &next.differential[h] {
            let act = n.path_action(*p).scale(c);
            for r in 0..d[vh] {
                for s in 0..act.cols() {
                    m[(row + r, col_off[*g] + s)] += &act[(r, s)];
                }
            }
        }
        row += d[vh];
    }
    m
}

/// `dim Ext^i(M, N)` for `i = 0..=max_degree`, from a resolution of `M`
/// computed through `P_{max_degree + 1}`.
pub fn ext_dims_from(res: &Resolution, n: &Representation, max_degree: usize) -> Vec<usize> {
    let d = n.dimvec();
    let mut out = Vec::with_capacity(max_degree + 1);
    let mut prev_rank = 0;
    for i in 0..=max_degree {
        let Some(step) = res.steps.get(i) else {
            out.push(0);
            prev_rank = 0;
            continue;
        };
        let dim_c: usize = step.generators.iter().map(|&v| d[v]).sum();
        let rank = coboundary(res, n, i).rank();
        out.push(dim_c - rank - prev_rank);
        prev_rank = rank;
    }
    out
}

/// `dim Ext^i(M, N)` for `i = 0..=max_degree`.
pub fn ext_dims(m: &Representation, n: &Representation, max_degree: usize) -> Result<Vec<usize>, RepError> {
    m.same_algebra(n)?;
    let res = minimal_resolution(m, max_degree + 1);
    Ok(ext_dims_from(&res, n, max_degree))
}

pub fn ext(i: usize, m: &Representation, n: &Representation) -> Result<usize, RepError> {
    Ok(ext_dims(m, n, i)?[i])
}

/// Uniformly random integer matrix with entries in `-2..=2`.
fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| Rat::from_integer(rng.gen_range(-2i64..=2).into()))
}

/// Random tries per dimension vector before giving up.
pub const DYNKIN_SEARCH_TRIES: usize = 64;

/// One brick per positive root of a Dynkin path algebra, found by sampling
/// small random integer matrices at the root's dimension vector. Each result
/// is verified to be a brick with Euler form 1.
pub fn dynkin_indecomposables(alg: &Arc<BoundAlgebra>, seed: u64) -> Result<Vec<Representation>, RepError> {
    if !alg.relations().is_empty() {
        return Err(RepError::HasRelations);
    }
    let roots = positive_roots(alg.quiver()).map_err(RepError::NotDynkin)?;
    let mut out = Vec::new();
    for (k, root) in roots.iter().enumerate() {
        let dims: Vec<usize> = root.iter().map(|&x| x as usize).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut found = None;
        for _ in 0..DYNKIN_SEARCH_TRIES {
            let maps = alg
                .quiver()
                .arrows()
                .iter()
                .map(|a| random_matrix(&mut rng, dims[a.target], dims[a.source]))
                .collect();
            let rep = Representation::new(alg.clone(), dims.clone(), maps)?;
            if is_brick(&rep)? && euler_form(alg.quiver(), &dims, &dims) == 1 {
                found = Some(rep);
                break;
            }
        }
        out.push(found.ok_or_else(|| RepError::SearchExhausted { root: root.clone() })?);
    }
    Ok(out)
}

/// Random element of the radical of `sum_g P_{v_g}` at vertex `w`, with
/// small integer coefficients on the nontrivial paths.
pub fn random_radical_element(
    alg: &BoundAlgebra,
    gens: &[usize],
    w: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Rat> {
    let mut x = Vec::new();
    for &v in gens {
        for p in alg.paths_between(v, w) {
            if alg.basis()[p].is_trivial() {
                x.push(Rat::zero());
            } else {
                x.push(Rat::from_integer(rng.gen_range(-2i64..=2).into()));
            }
        }
    }
    x
}

/// Module presented as `(sum_g P_{v_g}) / <relations>`, each relation an
/// element `(vertex, vector in the free module's coordinates)`.
pub fn presented_module(
    alg: &Arc<BoundAlgebra>,
    gens: &[usize],
    relations: &[(usize, Vec<Rat>)],
) -> Representation {
    let n = alg.vertex_count();
    let projectives: Vec<Representation> = (0..n).map(|v| projective(alg, v)).collect();
    let free = free_module(alg, &projectives, gens);
    let sub = free.rep.generated_subspaces(relations);
    free.rep.quotient(&sub)
}
