//! Finite-dimensional representations over exact rationals.
//!
//! A [`Rep`] carries one matrix per arrow (target dimension × source
//! dimension). Projective modules come from the path basis for monomial
//! presentations, or are supplied explicitly (the repetitive window).
//!
//! Every dimension computed here is a rank over the rationals. For the
//! monomial algebras in scope these agree with ranks over any field, but
//! that is an expectation, not something the code checks.

mod matrix;
mod scalar;

pub use matrix::Matrix;
pub use scalar::Q;

use crate::error::{Error, Result};
use crate::presentation::{AlgebraPresentation, Path, PathBasis, Relation};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

/// An indecomposable projective given by its representation and, for each
/// basis element, the path that carries the top generator onto it.
#[derive(Clone, Debug)]
pub struct ProjectiveData {
    pub vertex: usize,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
    /// `paths[w][i]`: arrows (application order) taking the generator to basis element `i` at `w`.
    pub paths: Vec<Vec<Vec<usize>>>,
}

/// A presentation together with its indecomposable projectives.
#[derive(Debug)]
pub struct Algebra {
    pub pres: AlgebraPresentation,
    projectives: Result<Vec<Option<ProjectiveData>>>,
    basis: OnceLock<Result<PathBasis>>,
}

impl Algebra {
    /// Wraps a presentation; projectives come from the path basis when it exists.
    pub fn new(pres: AlgebraPresentation) -> Arc<Algebra> {
        let projectives = pres.path_basis().map(|basis| {
            (0..pres.vertex_count()).map(|v| Some(monomial_projective(&pres, &basis, v))).collect()
        });
        Arc::new(Algebra { pres, projectives, basis: OnceLock::new() })
    }

    /// Wraps a presentation with explicitly supplied projectives (`None` where unavailable).
    pub fn with_projectives(pres: AlgebraPresentation, projectives: Vec<Option<ProjectiveData>>) -> Arc<Algebra> {
        Arc::new(Algebra { pres, projectives: Ok(projectives), basis: OnceLock::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.pres.vertex_count()
    }

    pub fn path_basis(&self) -> Result<&PathBasis> {
        self.basis.get_or_init(|| self.pres.path_basis()).as_ref().map_err(Clone::clone)
    }

    pub fn projective_data(&self, v: usize) -> Result<&ProjectiveData> {
        match &self.projectives {
            Err(e) => Err(e.clone()),
            Ok(ps) => ps[v].as_ref().ok_or_else(|| Error::MissingProjective(self.pres.vertex_name(v).to_string())),
        }
    }

    pub fn projective_dim(&self, v: usize) -> Result<usize> {
        Ok(self.projective_data(v)?.dims.iter().sum())
    }
}

fn monomial_projective(pres: &AlgebraPresentation, basis: &PathBasis, v: usize) -> ProjectiveData {
    let n = pres.vertex_count();
    let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut local: Vec<&Path> = basis.starting_at(v).collect();
    local.sort_by(|a, b| (a.len(), &a.arrows).cmp(&(b.len(), &b.arrows)));
    for p in &local {
        paths[p.target].push(p.arrows.clone());
    }
    let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
    let mats = pres
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            for (j, p) in paths[a.source].iter().enumerate() {
                let mut ext = p.clone();
                ext.push(ai);
                if let Some(i) = paths[a.target].iter().position(|q| *q == ext) {
                    m.set(i, j, Q::int(1));
                }
            }
            m
        })
        .collect();
    ProjectiveData { vertex: v, dims, mats, paths }
}

/// A finite-dimensional left module.
#[derive(Clone, Debug)]
pub struct Rep {
    pub alg: Arc<Algebra>,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
}

/// A module homomorphism, one matrix per vertex (target dim × source dim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub comps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn zero(m: &Rep, n: &Rep) -> ModuleMap {
        ModuleMap { comps: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(b, a)).collect() }
    }

    pub fn identity(m: &Rep) -> ModuleMap {
        ModuleMap { comps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&g.comps).map(|(f, g)| g.mul(f)).collect() }
    }

    pub fn add(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&g.comps).map(|(f, g)| f.add(g)).collect() }
    }

    pub fn scale(&self, c: &Q) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().map(|f| f.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }

    /// Checks every naturality square exactly.
    pub fn is_homomorphism(&self, m: &Rep, n: &Rep) -> bool {
        m.alg.pres.quiver.arrows.iter().enumerate().all(|(i, a)| {
            n.mats[i].mul(&self.comps[a.source]) == self.comps[a.target].mul(&m.mats[i])
        })
    }

    /// Flattened coordinates, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Q> {
        let mut v = Vec::new();
        for c in &self.comps {
            for i in 0..c.rows() {
                v.extend(c.row(i).iter().cloned());
            }
        }
        v
    }
}

/// A direct sum of indecomposable projectives with a path description of its basis.
#[derive(Clone, Debug)]
pub struct ProjSum {
    pub rep: Rep,
    /// Top vertex of each summand.
    pub summands: Vec<usize>,
    /// `elems[w][i] = (summand, path)` for basis element `i` at vertex `w`.
    pub elems: Vec<Vec<(usize, Vec<usize>)>>,
    /// `gens[s]`: local index at the top vertex of summand `s`'s generator.
    pub gens: Vec<usize>,
}

impl ProjSum {
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.rep.alg.vertex_count()];
        for &v in &self.summands {
            m[v] += 1;
        }
        m
    }
}

/// A minimal projective resolution `... → P_1 → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<ProjSum>,
    /// `maps[0]` is the augmentation `P_0 → M`; `maps[k]` is `P_k → P_{k-1}`.
    pub maps: Vec<ModuleMap>,
    /// True when the last kernel was zero, so the resolution is complete.
    pub complete: bool,
}

impl Resolution {
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(ProjSum::multiplicities).collect()
    }

    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

fn same_algebra(m: &Rep, n: &Rep) -> Result<()> {
    if Arc::ptr_eq(&m.alg, &n.alg) || m.alg.pres == n.alg.pres {
        Ok(())
    } else {
        Err(Error::PresentationMismatch)
    }
}

impl Rep {
    /// Builds a representation, checking shapes and every relation.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != alg.vertex_count() || mats.len() != alg.pres.arrow_count() {
            return Err(Error::SizeMismatch);
        }
        for (m, a) in mats.iter().zip(&alg.pres.quiver.arrows) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::SizeMismatch);
            }
        }
        let r = Rep { alg, dims, mats };
        if !r.satisfies_relations() {
            return Err(Error::InvalidString("matrices violate a relation".into()));
        }
        Ok(r)
    }

    pub fn zero(alg: &Arc<Algebra>) -> Rep {
        let n = alg.vertex_count();
        let mats = alg.pres.quiver.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep { alg: alg.clone(), dims: vec![0; n], mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices where the module is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Matrix of a path given in application order.
    pub fn path_matrix(&self, arrows: &[usize], start: usize) -> Matrix {
        let mut m = Matrix::identity(self.dims[start]);
        for &a in arrows {
            m = self.mats[a].mul(&m);
        }
        m
    }

    pub fn satisfies_relations(&self) -> bool {
        self.alg.pres.relations.iter().all(|r| match r {
            Relation::Monomial(p) => self.path_matrix(&p.arrows, p.source).is_zero(),
            Relation::Combination(terms) => {
                let p0 = &terms[0].1;
                let mut acc = Matrix::zeros(self.dims[p0.target], self.dims[p0.source]);
                for (c, p) in terms {
                    acc = acc.add(&self.path_matrix(&p.arrows, p.source).scale(c));
                }
                acc.is_zero()
            }
        })
    }

    /// Moves the same matrices to another algebra on the same quiver.
    pub fn transport(&self, alg: &Arc<Algebra>) -> Result<Rep> {
        if alg.pres.quiver != self.alg.pres.quiver {
            return Err(Error::PresentationMismatch);
        }
        Rep::new(alg.clone(), self.dims.clone(), self.mats.clone())
    }

    /// The vector-space dual, a module over the opposite algebra `op`.
    pub fn dual(&self, op: &Arc<Algebra>) -> Result<Rep> {
        Rep::new(op.clone(), self.dims.clone(), self.mats.iter().map(Matrix::transpose).collect())
    }

    /// Debug text: dimension vector then one matrix per arrow.
    pub fn to_text(&self) -> String {
        let q = &self.alg.pres.quiver;
        let mut s = String::new();
        let dims: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "dims {}", dims.join(" "));
        for (m, a) in self.mats.iter().zip(&q.arrows) {
            let _ = writeln!(s, "{} {:?}", a.name, m);
        }
        s
    }
}

pub fn simple(alg: &Arc<Algebra>, v: usize) -> Rep {
    let mut dims = vec![0; alg.vertex_count()];
    dims[v] = 1;
    let mats = alg.pres.quiver.arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    Rep { alg: alg.clone(), dims, mats }
}

pub fn projective(alg: &Arc<Algebra>, v: usize) -> Result<Rep> {
    let p = alg.projective_data(v)?;
    Ok(Rep { alg: alg.clone(), dims: p.dims.clone(), mats: p.mats.clone() })
}

/// The injective envelope of the simple at `v`, as the dual of the projective of the opposite algebra.
pub fn injective(alg: &Arc<Algebra>, v: usize) -> Result<Rep> {
    let op = Algebra::new(alg.pres.opposite());
    let p = projective(&op, v)?;
    p.dual(alg)
}

/// Direct sum of indecomposable projectives at the listed vertices.
pub fn projective_sum(alg: &Arc<Algebra>, summands: &[usize]) -> Result<ProjSum> {
    let n = alg.vertex_count();
    let mut elems: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); n];
    let mut gens = Vec::with_capacity(summands.len());
    let mut datas = Vec::with_capacity(summands.len());
    for (s, &v) in summands.iter().enumerate() {
        let d = alg.projective_data(v)?;
        let gen_local = d.paths[v].iter().position(Vec::is_empty).expect("generator path");
        gens.push(elems[v].len() + gen_local);
        for w in 0..n {
            for p in &d.paths[w] {
                elems[w].push((s, p.clone()));
            }
        }
        datas.push(d);
    }
    let dims: Vec<usize> = elems.iter().map(Vec::len).collect();
    let mats = alg
        .pres
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let (mut r0, mut c0) = (0, 0);
            for d in &datas {
                m.paste(&d.mats[ai], r0, c0);
                r0 += d.dims[a.target];
                c0 += d.dims[a.source];
            }
            m
        })
        .collect();
    Ok(ProjSum { rep: Rep { alg: alg.clone(), dims, mats }, summands: summands.to_vec(), elems, gens })
}

/// The map from a sum of projectives sending generator `s` to `images[s] ∈ M_{v_s}`.
pub fn proj_sum_map(ps: &ProjSum, m: &Rep, images: &[Vec<Q>]) -> ModuleMap {
    let comps = (0..m.dims.len())
        .map(|w| {
            let mut c = Matrix::zeros(m.dims[w], ps.rep.dims[w]);
            for (j, (s, path)) in ps.elems[w].iter().enumerate() {
                let v = m.path_matrix(path, ps.summands[*s]).mul_vec(&images[*s]);
                for (i, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        c.set(i, j, x);
                    }
                }
            }
            c
        })
        .collect();
    ModuleMap { comps }
}

pub fn direct_sum(parts: &[&Rep]) -> Result<Rep> {
    let first = parts.first().ok_or(Error::SizeMismatch)?;
    for p in parts {
        same_algebra(first, p)?;
    }
    let n = first.dims.len();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let mats = first
        .alg
        .pres
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let (mut r0, mut c0) = (0, 0);
            for p in parts {
                m.paste(&p.mats[ai], r0, c0);
                r0 += p.dims[a.target];
                c0 += p.dims[a.source];
            }
            m
        })
        .collect();
    Ok(Rep { alg: first.alg.clone(), dims, mats })
}

/// Basis of `Hom(M, N)` as solutions of the intertwining equations.
pub fn hom_space(m: &Rep, n: &Rep) -> Result<Vec<ModuleMap>> {
    same_algebra(m, n)?;
    let nv = m.dims.len();
    let mut offs = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offs.push(unknowns);
        unknowns += m.dims[v] * n.dims[v];
    }
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // X_v is n_v × m_v, variable (i, j) at offs[v] + i*m_v + j.
    let arrows = &m.alg.pres.quiver.arrows;
    let eq_count: usize = arrows.iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut eqs = Matrix::zeros(eq_count, unknowns);
    let mut row = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (na, ma) = (&n.mats[ai], &m.mats[ai]);
        // (N_a X_s - X_t M_a)[i][j] = 0
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        eqs.add_at(row, offs[s] + k * m.dims[s] + j, c);
                    }
                }
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        eqs.add_at(row, offs[t] + i * m.dims[t] + k, &-c);
                    }
                }
                row += 1;
            }
        }
    }
    let ns = eqs.nullspace();
    Ok((0..ns.cols())
        .map(|c| ModuleMap {
            comps: (0..nv)
                .map(|v| {
                    let mut x = Matrix::zeros(n.dims[v], m.dims[v]);
                    for i in 0..n.dims[v] {
                        for j in 0..m.dims[v] {
                            let val = ns.get(offs[v] + i * m.dims[v] + j, c);
                            if !val.is_zero() {
                                x.set(i, j, val.clone());
                            }
                        }
                    }
                    x
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// The submodule spanned at each vertex by the columns of `spans[v]` (assumed closed and independent).
pub fn subrep(m: &Rep, spans: &[Matrix]) -> (Rep, ModuleMap) {
    let dims: Vec<usize> = spans.iter().map(Matrix::cols).collect();
    let mats = m
        .alg
        .pres
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = m.mats[ai].mul(&spans[a.source]);
            if dims[a.source] == 0 || dims[a.target] == 0 {
                debug_assert!(img.is_zero(), "subspace not closed under arrow action");
                return Matrix::zeros(dims[a.target], dims[a.source]);
            }
            spans[a.target].solve(&img).expect("subspace not closed under arrow action")
        })
        .collect();
    (Rep { alg: m.alg.clone(), dims, mats }, ModuleMap { comps: spans.to_vec() })
}

/// The quotient by the submodule spanned by `spans`, with the projection.
pub fn quotient(m: &Rep, spans: &[Matrix]) -> (Rep, ModuleMap) {
    let projs: Vec<Matrix> = spans
        .iter()
        .zip(&m.dims)
        .map(|(u, &d)| if u.cols() == 0 { Matrix::identity(d) } else { u.cokernel_projection() })
        .collect();
    let rinv: Vec<Matrix> = projs
        .iter()
        .map(|p| if p.rows() == 0 { Matrix::zeros(p.cols(), 0) } else { p.solve(&Matrix::identity(p.rows())).expect("full row rank") })
        .collect();
    let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
    let mats = m
        .alg
        .pres
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| projs[a.target].mul(&m.mats[ai]).mul(&rinv[a.source]))
        .collect();
    (Rep { alg: m.alg.clone(), dims, mats }, ModuleMap { comps: projs })
}

pub fn kernel(f: &ModuleMap, m: &Rep) -> (Rep, ModuleMap) {
    let spans: Vec<Matrix> = f.comps.iter().map(Matrix::nullspace).collect();
    subrep(m, &spans)
}

pub fn image(f: &ModuleMap, n: &Rep) -> (Rep, ModuleMap) {
    let spans: Vec<Matrix> = f.comps.iter().map(Matrix::column_basis).collect();
    subrep(n, &spans)
}

pub fn cokernel(f: &ModuleMap, n: &Rep) -> (Rep, ModuleMap) {
    let spans: Vec<Matrix> = f.comps.iter().map(Matrix::column_basis).collect();
    quotient(n, &spans)
}

/// Spans of the radical: at each vertex, the images of all incoming arrows.
pub fn radical_spans(m: &Rep) -> Vec<Matrix> {
    let q = &m.alg.pres.quiver;
    (0..m.dims.len())
        .map(|v| {
            let mut acc = Matrix::zeros(m.dims[v], 0);
            for a in q.arrows_into(v) {
                acc = acc.hstack(&m.mats[a]);
            }
            acc.column_basis()
        })
        .collect()
}

pub fn radical(m: &Rep) -> (Rep, ModuleMap) {
    subrep(m, &radical_spans(m))
}

pub fn top(m: &Rep) -> Rep {
    quotient(m, &radical_spans(m)).0
}

pub fn top_dims(m: &Rep) -> Vec<usize> {
    radical_spans(m).iter().zip(&m.dims).map(|(r, &d)| d - r.cols()).collect()
}

/// A projective cover `P → M` built from lifts of a basis of the top.
pub fn projective_cover(m: &Rep) -> Result<(ProjSum, ModuleMap)> {
    let rad = radical_spans(m);
    let mut summands = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for c in r.complement_coordinates() {
            let mut e = vec![Q::int(0); m.dims[v]];
            e[c] = Q::int(1);
            summands.push(v);
            images.push(e);
        }
    }
    let ps = projective_sum(&m.alg, &summands)?;
    let f = proj_sum_map(&ps, m, &images);
    Ok((ps, f))
}

pub fn is_projective(m: &Rep) -> Result<bool> {
    let t = top_dims(m);
    let mut d = 0;
    for (v, &k) in t.iter().enumerate() {
        if k > 0 {
            d += k * m.alg.projective_dim(v)?;
        }
    }
    Ok(d == m.total_dim())
}

fn in_span(span: &Matrix, vecs: &Matrix) -> bool {
    vecs.cols() == 0 || span.rank() == span.hstack(vecs).rank()
}

/// Computes terms `P_0 .. P_len` of a minimal resolution, stopping early at a zero kernel.
pub fn resolution_upto(m: &Rep, len: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut current = m.clone();
    let mut incl: Option<ModuleMap> = None;
    let mut complete = false;
    for _ in 0..=len {
        if current.is_zero() {
            complete = true;
            break;
        }
        let (ps, cover) = projective_cover(&current)?;
        let d = match &incl {
            Some(i) => cover.then(i),
            None => cover.clone(),
        };
        let (k, kincl) = kernel(&cover, &ps.rep);
        // Minimality: the kernel must sit inside the radical of the cover.
        let rad = radical_spans(&ps.rep);
        if !kincl.comps.iter().zip(&rad).all(|(kc, r)| in_span(r, kc)) {
            return Err(Error::InvalidString("non-minimal projective cover".into()));
        }
        terms.push(ps);
        maps.push(d);
        current = k;
        incl = Some(kincl);
    }
    if current.is_zero() {
        complete = true;
    }
    Ok(Resolution { terms, maps, complete })
}

pub fn min_resolution(m: &Rep, cutoff: usize) -> Result<Resolution> {
    let r = resolution_upto(m, cutoff)?;
    if !r.complete {
        return Err(Error::CutoffExceeded(cutoff));
    }
    Ok(r)
}

pub fn proj_dim(m: &Rep, cutoff: usize) -> Result<usize> {
    Ok(min_resolution(m, cutoff)?.length())
}

pub const DEFAULT_GLDIM_CUTOFF: usize = 20;

/// Global dimension as the largest projective dimension of a simple.
pub fn gldim(alg: &Arc<Algebra>, cutoff: usize) -> Result<usize> {
    let dims: Vec<Result<usize>> =
        (0..alg.vertex_count()).into_par_iter().map(|v| proj_dim(&simple(alg, v), cutoff)).collect();
    let mut best = 0;
    for d in dims {
        best = best.max(d?);
    }
    Ok(best)
}

/// Global dimension of a monomial algebra without computing resolutions, `None` when infinite.
///
/// Syzygies of simples are sums of ideals `A·p` generated by single paths, and
/// the kernel of `P(t(p)) → A·p` is the sum of `A·q` over the shortest paths
/// `q` with `p` then `q` zero. The projective dimensions therefore follow a
/// finite graph on paths, which is acyclic exactly when the global dimension
/// is finite.
pub fn monomial_gldim(p: &AlgebraPresentation) -> Result<Option<usize>> {
    p.path_basis()?;
    let q = &p.quiver;
    let shortest_killers = |path: &Path| -> Vec<Path> {
        let mut out = Vec::new();
        let mut frontier = vec![Path::trivial(path.target)];
        while let Some(r) = frontier.pop() {
            for a in q.arrows_from(r.target) {
                let ext = r.then(&Path::arrow(q, a)).expect("composable");
                if p.is_zero_path(&ext) {
                    continue;
                }
                if p.is_zero_path(&path.then(&ext).expect("composable")) {
                    out.push(ext);
                } else {
                    frontier.push(ext);
                }
            }
        }
        out
    };
    // pd(A·p), with `None` marking a path on the current stack.
    fn pd(path: &Path, memo: &mut HashMap<Path, Option<usize>>, killers: &dyn Fn(&Path) -> Vec<Path>) -> Option<usize> {
        if let Some(v) = memo.get(path) {
            return *v;
        }
        memo.insert(path.clone(), None);
        let mut best = Some(0);
        for k in killers(path) {
            best = match (best, pd(&k, memo, killers)) {
                (Some(b), Some(d)) => Some(b.max(d + 1)),
                _ => None,
            };
            if best.is_none() {
                break;
            }
        }
        if best.is_some() {
            memo.insert(path.clone(), best);
        }
        best
    }
    let mut memo = HashMap::new();
    let mut total = 0;
    for v in 0..p.vertex_count() {
        for a in q.arrows_from(v) {
            match pd(&Path::arrow(q, a), &mut memo, &shortest_killers) {
                Some(d) => total = total.max(d + 1),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(total))
}

/// Matrix of `Hom(P_k, N) → Hom(P_{k+1}, N)` induced by `d: P_{k+1} → P_k`, in Yoneda coordinates.
fn hom_differential(pk: &ProjSum, pk1: &ProjSum, d: &ModuleMap, n: &Rep) -> Matrix {
    let col_off = summand_offsets(&pk.summands, n);
    let row_off = summand_offsets(&pk1.summands, n);
    let cols = col_off.last().copied().unwrap_or(0);
    let rows = row_off.last().copied().unwrap_or(0);
    let mut out = Matrix::zeros(rows, cols);
    for (j, &w) in pk1.summands.iter().enumerate() {
        let g = pk1.gens[j];
        let comp = &d.comps[w];
        for (b, (i, path)) in pk.elems[w].iter().enumerate() {
            let c = comp.get(b, g);
            if c.is_zero() {
                continue;
            }
            let block = n.path_matrix(path, pk.summands[*i]).scale(c);
            for r in 0..block.rows() {
                for s in 0..block.cols() {
                    let x = block.get(r, s);
                    if !x.is_zero() {
                        out.add_at(row_off[j] + r, col_off[*i] + s, x);
                    }
                }
            }
        }
    }
    out
}

fn summand_offsets(summands: &[usize], n: &Rep) -> Vec<usize> {
    let mut off = vec![0];
    for &v in summands {
        off.push(off.last().unwrap() + n.dims[v]);
    }
    off
}

fn cochain_dim(pk: &ProjSum, n: &Rep) -> usize {
    pk.summands.iter().map(|&v| n.dims[v]).sum()
}

/// `dim Ext^k(M, N)` from the cohomology of `Hom(P_•, N)`.
pub fn ext_dim(m: &Rep, n: &Rep, k: usize) -> Result<usize> {
    same_algebra(m, n)?;
    let res = resolution_upto(m, k + 1)?;
    ext_from_resolution(&res, n, k)
}

pub fn ext_from_resolution(res: &Resolution, n: &Rep, k: usize) -> Result<usize> {
    if k >= res.terms.len() {
        return Ok(0);
    }
    let dim = cochain_dim(&res.terms[k], n);
    let out_rank = if k + 1 < res.terms.len() {
        hom_differential(&res.terms[k], &res.terms[k + 1], &res.maps[k + 1], n).rank()
    } else {
        0
    };
    let in_rank = if k >= 1 { hom_differential(&res.terms[k - 1], &res.terms[k], &res.maps[k], n).rank() } else { 0 };
    Ok(dim - out_rank - in_rank)
}

/// Matrix of `M ⊗ P_k → M ⊗ P_{k-1}` for a right module `M` given over the opposite algebra.
fn tensor_differential(pk_1: &ProjSum, pk: &ProjSum, d: &ModuleMap, mop: &Rep) -> Matrix {
    let row_off = summand_offsets(&pk_1.summands, mop);
    let col_off = summand_offsets(&pk.summands, mop);
    let mut out = Matrix::zeros(*row_off.last().unwrap(), *col_off.last().unwrap());
    for (j, &w) in pk.summands.iter().enumerate() {
        let g = pk.gens[j];
        let comp = &d.comps[w];
        for (b, (i, path)) in pk_1.elems[w].iter().enumerate() {
            let c = comp.get(b, g);
            if c.is_zero() {
                continue;
            }
            let rev: Vec<usize> = path.iter().rev().copied().collect();
            let block = mop.path_matrix(&rev, w).scale(c);
            for r in 0..block.rows() {
                for s in 0..block.cols() {
                    let x = block.get(r, s);
                    if !x.is_zero() {
                        out.add_at(row_off[*i] + r, col_off[j] + s, x);
                    }
                }
            }
        }
    }
    out
}

/// `dim Tor_k(M, N)` with `M` a right module presented over the opposite algebra.
pub fn tor_dim(mop: &Rep, n: &Rep, k: usize) -> Result<usize> {
    if mop.alg.pres.quiver.vertices != n.alg.pres.quiver.vertices {
        return Err(Error::PresentationMismatch);
    }
    Ok(tor_from_resolution(&resolution_upto(n, k + 1)?, mop, k))
}

/// `dim Tor_k(M^op, N)` from a resolution of `N` computed at least to term `k + 1`.
pub fn tor_from_resolution(res: &Resolution, mop: &Rep, k: usize) -> usize {
    if k >= res.terms.len() {
        return 0;
    }
    let dim = cochain_dim(&res.terms[k], mop);
    let out_rank = if k >= 1 { tensor_differential(&res.terms[k - 1], &res.terms[k], &res.maps[k], mop).rank() } else { 0 };
    let in_rank = if k + 1 < res.terms.len() {
        tensor_differential(&res.terms[k], &res.terms[k + 1], &res.maps[k + 1], mop).rank()
    } else {
        0
    };
    dim - out_rank - in_rank
}

/// The ideal `AeA` as a left module: basis paths passing through a vertex of `s`.
pub fn left_ideal(alg: &Arc<Algebra>, s: &[usize]) -> Result<Rep> {
    let basis = alg.path_basis()?;
    let q = &alg.pres.quiver;
    let keep = |p: &Path| p.vertex_sequence(q).iter().any(|v| s.contains(v));
    path_module(alg, basis, keep)
}

/// The quotient algebra `A/AeA` as a left module: basis paths avoiding `s`.
pub fn quotient_module(alg: &Arc<Algebra>, s: &[usize]) -> Result<Rep> {
    let basis = alg.path_basis()?;
    let q = &alg.pres.quiver;
    let keep = |p: &Path| p.vertex_sequence(q).iter().all(|v| !s.contains(v));
    path_module(alg, basis, keep)
}

/// Regular module restricted to a set of basis paths closed under left multiplication
/// (or whose complement is), with arrows acting by post-composition.
fn path_module(alg: &Arc<Algebra>, basis: &PathBasis, keep: impl Fn(&Path) -> bool) -> Result<Rep> {
    let n = alg.vertex_count();
    let mut local: Vec<Vec<&Path>> = vec![Vec::new(); n];
    for p in &basis.paths {
        if keep(p) {
            local[p.target].push(p);
        }
    }
    let dims: Vec<usize> = local.iter().map(Vec::len).collect();
    let q = &alg.pres.quiver;
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            for (j, p) in local[a.source].iter().enumerate() {
                let ext = p.then(&Path::arrow(q, ai)).expect("composable");
                if let Some(i) = local[a.target].iter().position(|x| **x == ext) {
                    m.set(i, j, Q::int(1));
                }
            }
            m
        })
        .collect();
    Rep::new(alg.clone(), dims, mats)
}

/// The regular module `A` as a left module.
pub fn regular(alg: &Arc<Algebra>) -> Result<Rep> {
    path_module(alg, alg.path_basis()?, |_| true)
}

/// Search budget for [`iso_modules`].
#[derive(Clone, Copy, Debug)]
pub struct IsoConfig {
    /// Deterministic pseudo-random trials before the exhaustive grid.
    pub random_trials: usize,
    /// Largest grid (number of coefficient tuples) swept before reporting inconclusive.
    pub max_grid: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { random_trials: 6, max_grid: 200_000 }
    }
}

fn is_iso_candidate(f: &ModuleMap) -> bool {
    f.comps.iter().all(|c| c.rows() == c.cols() && (c.rows() == 0 || !c.determinant().is_zero()))
}

fn combine(basis: &[ModuleMap], coeffs: &[i64]) -> ModuleMap {
    let mut acc = basis[0].scale(&Q::int(coeffs[0]));
    for (b, &c) in basis.iter().zip(coeffs).skip(1) {
        if c != 0 {
            acc = acc.add(&b.scale(&Q::int(c)));
        }
    }
    acc
}

/// Decides `M ≅ N` by searching for an invertible element of `Hom(M, N)`.
///
/// The product of the vertex determinants is a polynomial of degree at most
/// `dim M` in each coefficient, so it is nonzero somewhere on the grid
/// `{0..=dim M}^h` iff it is nonzero at all. Grids above the budget yield
/// [`Error::Inconclusive`].
pub fn iso_modules(m: &Rep, n: &Rep) -> Result<bool> {
    iso_modules_with(m, n, IsoConfig::default())
}

pub fn iso_modules_with(m: &Rep, n: &Rep, cfg: IsoConfig) -> Result<bool> {
    same_algebra(m, n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    let h = basis.len();
    if h == 0 {
        return Ok(false);
    }
    if hom_dim(n, m)? != h || hom_dim(m, m)? != h || hom_dim(n, n)? != h {
        return Ok(false);
    }
    let deg = m.total_dim() as i64;
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..cfg.random_trials {
        let coeffs: Vec<i64> = (0..h)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % (4 * deg as u64 + 3)) as i64 - 2 * deg - 1
            })
            .collect();
        if is_iso_candidate(&combine(&basis, &coeffs)) {
            return Ok(true);
        }
    }
    let side = (deg + 1) as usize;
    let grid = side.checked_pow(h as u32).filter(|&g| g <= cfg.max_grid);
    let Some(grid) = grid else {
        return Err(Error::Inconclusive(cfg.random_trials));
    };
    let mut coeffs = vec![0i64; h];
    for _ in 0..grid {
        if is_iso_candidate(&combine(&basis, &coeffs)) {
            return Ok(true);
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c <= deg {
                break;
            }
            *c = 0;
        }
    }
    Ok(false)
}

/// `Σ_k (-1)^k dim Ext^k(M, N)`.
pub fn euler_pairing(m: &Rep, n: &Rep, cutoff: usize) -> Result<i64> {
    same_algebra(m, n)?;
    let res = min_resolution(m, cutoff)?;
    let mut total = 0i64;
    for k in 0..res.terms.len() {
        let e = ext_from_resolution(&res, n, k)? as i64;
        total += if k % 2 == 0 { e } else { -e };
    }
    Ok(total)
}
