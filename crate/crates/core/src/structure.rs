//! Quasi-hereditary structures, exceptional sequences, corner algebras,
//! idempotent recollements and derived composition series.

use crate::error::{Error, Result};
use crate::forms::{cartan_matrix, euler_matrix, symmetrized_rank, IntMatrix};
use crate::gentle::{ag_invariant, is_gentle, AgInvariant};
use crate::linrep::{
    ext_from_resolution, hom_space, is_projective, left_ideal, min_resolution, monomial_gldim, projective, quotient,
    quotient_module, resolution_upto, tor_from_resolution, Algebra, Matrix, Rep, DEFAULT_GLDIM_CUTOFF, Q,
};
use crate::presentation::{serialize, iso_presentations, AlgebraPresentation, Arrow, Path, Quiver, Relation};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

/// Vertices (indices into the presentation) in heredity order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeredityChain(pub Vec<usize>);

impl HeredityChain {
    pub fn names(&self, p: &AlgebraPresentation) -> Vec<String> {
        self.0.iter().map(|&v| p.vertex_name(v).to_string()).collect()
    }

    /// The chain read backwards: the first idempotent split off carries the largest weight.
    pub fn weight_order(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }
}

/// `A/A(e_removed)A` as an algebra, keeping the original vertex indices alongside.
fn successive_quotient(p: &AlgebraPresentation, removed: u64) -> Result<(Arc<Algebra>, Vec<usize>)> {
    let n = p.vertex_count();
    let gone: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 1).collect();
    let keep: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    let q = if gone.is_empty() { p.clone() } else { p.quotient_by_vertices(&gone)? };
    Ok((Algebra::new(q), keep))
}

fn corner_dim(alg: &Algebra, v: usize) -> Result<usize> {
    Ok(alg.path_basis()?.between(v, v).count())
}

fn step_on(alg: &Arc<Algebra>, v: usize) -> Result<bool> {
    Ok(corner_dim(alg, v)? == 1 && is_projective(&left_ideal(alg, &[v])?)?)
}

/// Whether `A e_v A` is a heredity ideal: `e_v A e_v` is the field and the ideal is a projective left module.
pub fn heredity_step(p: &AlgebraPresentation, v: usize) -> Result<bool> {
    step_on(&Algebra::new(p.clone()), v)
}

struct OrderSearch<'a> {
    p: &'a AlgebraPresentation,
    /// Removed set → whether some ordering of the rest completes a chain.
    memo: HashMap<u64, bool>,
    /// Removed set → vertices that are heredity steps there.
    steps: HashMap<u64, Vec<usize>>,
}

impl OrderSearch<'_> {
    fn steps(&mut self, removed: u64) -> Result<Vec<usize>> {
        if let Some(s) = self.steps.get(&removed) {
            return Ok(s.clone());
        }
        let (alg, keep) = successive_quotient(self.p, removed)?;
        let mut out = Vec::new();
        for (local, &v) in keep.iter().enumerate() {
            if step_on(&alg, local)? {
                out.push(v);
            }
        }
        self.steps.insert(removed, out.clone());
        Ok(out)
    }

    fn completes(&mut self, removed: u64) -> Result<bool> {
        let n = self.p.vertex_count();
        if removed.count_ones() as usize == n {
            return Ok(true);
        }
        if let Some(&b) = self.memo.get(&removed) {
            return Ok(b);
        }
        let mut ok = false;
        for v in self.steps(removed)? {
            if self.completes(removed | 1 << v)? {
                ok = true;
                break;
            }
        }
        self.memo.insert(removed, ok);
        Ok(ok)
    }

    fn collect(&mut self, removed: u64, prefix: &mut Vec<usize>, out: &mut Vec<HeredityChain>, limit: usize) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        if prefix.len() == self.p.vertex_count() {
            out.push(HeredityChain(prefix.clone()));
            return Ok(());
        }
        for v in self.steps(removed)? {
            if self.completes(removed | 1 << v)? {
                prefix.push(v);
                self.collect(removed | 1 << v, prefix, out, limit)?;
                prefix.pop();
            }
        }
        Ok(())
    }
}

fn order_search(p: &AlgebraPresentation) -> Result<OrderSearch<'_>> {
    if p.vertex_count() > 63 {
        return Err(Error::Params("at most 63 vertices".into()));
    }
    p.path_basis()?;
    Ok(OrderSearch { p, memo: HashMap::new(), steps: HashMap::new() })
}

/// Heredity chains in lexicographic order of vertex indices, at most `limit` of them.
pub fn qh_orders(p: &AlgebraPresentation, limit: usize) -> Result<Vec<HeredityChain>> {
    let mut s = order_search(p)?;
    let mut out = Vec::new();
    s.collect(0, &mut Vec::new(), &mut out, limit)?;
    Ok(out)
}

pub fn is_quasi_hereditary(p: &AlgebraPresentation) -> Result<bool> {
    order_search(p)?.completes(0)
}

/// `Δ(i) = P(i)/U`, `U` the sum of the images of all maps from projectives later in the order.
pub fn standard_modules(alg: &Arc<Algebra>, order: &[usize]) -> Result<Vec<Rep>> {
    let n = alg.vertex_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidSubset("order must list every vertex once".into()));
    }
    order
        .iter()
        .enumerate()
        .map(|(pos, &i)| {
            let pi = projective(alg, i)?;
            let mut spans: Vec<Matrix> = pi.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
            for &j in &order[pos + 1..] {
                for f in hom_space(&projective(alg, j)?, &pi)? {
                    for (w, c) in f.comps.iter().enumerate() {
                        spans[w] = spans[w].hstack(c);
                    }
                }
            }
            Ok(quotient(&pi, &spans).0)
        })
        .collect()
}

/// All `dim Ext^s(M, N)` for `s` from 0 up to the projective dimension of `M`.
fn ext_profile(m: &Rep, n: &Rep) -> Result<Vec<usize>> {
    let res = min_resolution(m, DEFAULT_GLDIM_CUTOFF)?;
    (0..=res.length()).map(|s| ext_from_resolution(&res, n, s)).collect()
}

/// `End(M) = k` and no self-extensions in positive degrees.
pub fn is_exceptional(m: &Rep) -> Result<bool> {
    let prof = ext_profile(m, m)?;
    Ok(prof[0] == 1 && prof[1..].iter().all(|&d| d == 0))
}

/// Each term exceptional and `Ext^s(E_j, E_i) = 0` for `j > i` and all `s`.
pub fn is_exceptional_sequence(seq: &[Rep]) -> Result<bool> {
    for (j, e) in seq.iter().enumerate() {
        if !is_exceptional(e)? {
            return Ok(false);
        }
        for earlier in &seq[..j] {
            if ext_profile(e, earlier)?.iter().any(|&d| d != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the dimension vectors form a basis of the Grothendieck group. Necessary for fullness, not sufficient.
pub fn k0_unimodular(seq: &[Rep]) -> bool {
    let Some(first) = seq.first() else { return false };
    if seq.len() != first.dims.len() {
        return false;
    }
    let rows: Vec<Vec<i64>> = seq.iter().map(|m| m.dims.iter().map(|&d| d as i64).collect()).collect();
    let det = Matrix::from_ints(&rows).determinant();
    det == Q::int(1) || det == Q::int(-1)
}

/// `dim Ext^s(M, M)` for each `s` in the range.
pub fn graded_end_table(m: &Rep, degrees: std::ops::Range<usize>) -> Result<Vec<usize>> {
    let res = resolution_upto(m, degrees.end + 1)?;
    degrees.map(|s| ext_from_resolution(&res, m, s)).collect()
}

/// The corner algebra `eAe` for `e` the idempotents at `s`.
///
/// Arrows are the nonzero paths between vertices of `s` with no interior
/// vertex in `s`, named by joining the arrow names in walking order with `.`.
pub fn corner_presentation(p: &AlgebraPresentation, s: &[usize]) -> Result<AlgebraPresentation> {
    let basis = p.path_basis()?;
    let q = &p.quiver;
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.is_empty() || set.iter().any(|&v| v >= p.vertex_count()) {
        return Err(Error::InvalidSubset(format!("{s:?}")));
    }
    let verts: Vec<usize> = set.iter().copied().collect();
    let local = |v: usize| verts.iter().position(|&x| x == v).unwrap();
    let irreducible: Vec<&Path> = basis
        .paths
        .iter()
        .filter(|path| {
            let seq = path.vertex_sequence(q);
            !path.is_trivial()
                && set.contains(&path.source)
                && set.contains(&path.target)
                && seq[1..seq.len() - 1].iter().all(|v| !set.contains(v))
        })
        .collect();
    let arrows: Vec<Arrow> = irreducible
        .iter()
        .map(|path| Arrow {
            name: path.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("."),
            source: local(path.source),
            target: local(path.target),
        })
        .collect();
    let cq = Quiver { vertices: verts.iter().map(|&v| q.vertices[v].clone()).collect(), arrows };
    let concat = |word: &[usize]| -> Path {
        let arrows = word.iter().flat_map(|&x| irreducible[x].arrows.iter().copied()).collect();
        Path { source: irreducible[word[0]].source, target: irreducible[*word.last().unwrap()].target, arrows }
    };
    // Extend nonzero words; a zero word whose tail is nonzero is a minimal relation.
    let mut relations = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..irreducible.len()).map(|x| vec![x]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            let end = irreducible[*w.last().unwrap()].target;
            for (x, path) in irreducible.iter().enumerate() {
                if path.source != end {
                    continue;
                }
                let mut ext = w.clone();
                ext.push(x);
                if p.is_zero_path(&concat(&ext)) {
                    if !p.is_zero_path(&concat(&ext[1..])) {
                        let rel = Path { source: local(concat(&ext).source), target: local(concat(&ext).target), arrows: ext };
                        relations.push(Relation::Monomial(rel));
                    }
                } else {
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    let names: Vec<&str> = verts.iter().map(|&v| p.vertex_name(v)).collect();
    AlgebraPresentation::new(format!("{}|{{{}}}", p.label, names.join(",")), cq, relations)
}

/// Outcome of testing the idempotent recollement at a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecollementReport {
    pub corner_gldim_finite: bool,
    /// `Tor_k(A/AeA, A/AeA) = 0` for `0 < k ≤ gldim A`.
    pub quotient_embeds: bool,
    /// `AeA` projective as a left module.
    pub shortcut: bool,
}

impl RecollementReport {
    pub fn accepted(&self) -> bool {
        self.corner_gldim_finite && (self.quotient_embeds || self.shortcut)
    }
}

/// The presentation and its opposite wrapped once, with the global dimension.
struct Node {
    alg: Arc<Algebra>,
    op: Arc<Algebra>,
    gldim: usize,
}

impl Node {
    fn new(p: &AlgebraPresentation) -> Result<Node> {
        let alg = Algebra::new(p.clone());
        let gldim = monomial_gldim(p)?.ok_or(Error::CutoffExceeded(DEFAULT_GLDIM_CUTOFF))?;
        Ok(Node { op: Algebra::new(p.opposite()), alg, gldim })
    }

    fn check(&self, s: &[usize]) -> Result<RecollementReport> {
        let corner_gldim_finite = monomial_gldim(&corner_presentation(&self.alg.pres, s)?)?.is_some();
        let shortcut = is_projective(&left_ideal(&self.alg, s)?)?;
        let left = quotient_module(&self.alg, s)?;
        let right = quotient_module(&self.op, s)?;
        let res = resolution_upto(&left, self.gldim + 1)?;
        let quotient_embeds = (1..=self.gldim).all(|k| tor_from_resolution(&res, &right, k) == 0);
        Ok(RecollementReport { corner_gldim_finite, quotient_embeds, shortcut })
    }
}

pub fn recollement_check(p: &AlgebraPresentation, s: &[usize]) -> Result<RecollementReport> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.is_empty() || set.len() >= p.vertex_count() || set.iter().any(|&v| v >= p.vertex_count()) {
        return Err(Error::InvalidSubset(format!("{s:?}")));
    }
    Node::new(p)?.check(&set.into_iter().collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    OneVertex,
    /// No idempotent recollement was accepted; this does not certify derived simplicity.
    NoSplitFound,
}

#[derive(Clone, Debug)]
pub enum CompSeriesTree {
    Leaf { pres: AlgebraPresentation, kind: LeafKind },
    Split { pres: AlgebraPresentation, subset: Vec<String>, quotient: Box<CompSeriesTree>, corner: Box<CompSeriesTree> },
}

impl CompSeriesTree {
    pub fn pres(&self) -> &AlgebraPresentation {
        match self {
            CompSeriesTree::Leaf { pres, .. } | CompSeriesTree::Split { pres, .. } => pres,
        }
    }

    /// Number of leaves.
    pub fn length(&self) -> usize {
        self.leaves().len()
    }

    pub fn leaves(&self) -> Vec<&CompSeriesTree> {
        match self {
            CompSeriesTree::Leaf { .. } => vec![self],
            CompSeriesTree::Split { quotient, corner, .. } => {
                let mut v = quotient.leaves();
                v.extend(corner.leaves());
                v
            }
        }
    }
}

impl fmt::Display for CompSeriesTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompSeriesTree::Leaf { kind: LeafKind::OneVertex, .. } => write!(f, "k"),
            CompSeriesTree::Leaf { pres, kind: LeafKind::NoSplitFound } => write!(f, "[{}]", pres.label),
            CompSeriesTree::Split { quotient, corner, .. } => write!(f, "({quotient} {corner})"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SeriesConfig {
    pub max_depth: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { max_depth: 32 }
    }
}

/// Shared state of one enumeration: iso-class registry and per-class results.
#[derive(Default)]
struct SeriesCache {
    classes: Mutex<Vec<AlgebraPresentation>>,
    done: Mutex<HashMap<usize, Arc<Vec<(String, CompSeriesTree)>>>>,
}

impl SeriesCache {
    fn class_of(&self, p: &AlgebraPresentation) -> usize {
        let mut classes = self.classes.lock().unwrap();
        if let Some(i) = classes.iter().position(|c| iso_presentations(c, p).is_some()) {
            return i;
        }
        classes.push(p.clone());
        classes.len() - 1
    }
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1..(1u64 << n) - 1).map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect()).collect()
}

/// Trees with their signatures, sorted by signature.
fn series(p: &AlgebraPresentation, depth: usize, cfg: SeriesConfig, cache: &SeriesCache) -> Result<Arc<Vec<(String, CompSeriesTree)>>> {
    if depth > cfg.max_depth {
        return Err(Error::Depth(cfg.max_depth));
    }
    let class = cache.class_of(p);
    if let Some(hit) = cache.done.lock().unwrap().get(&class) {
        return Ok(hit.clone());
    }
    let n = p.vertex_count();
    let out: Vec<(String, CompSeriesTree)> = if n == 1 {
        vec![("k".to_string(), CompSeriesTree::Leaf { pres: p.clone(), kind: LeafKind::OneVertex })]
    } else {
        let comps = p.components();
        let node = Node::new(p)?;
        let splits: Vec<Vec<usize>> = if comps.len() > 1 {
            vec![comps[0].clone()]
        } else {
            let candidates = subsets(n);
            let verdicts =
                candidates.par_iter().map(|s| node.check(s).map(|r| r.accepted())).collect::<Result<Vec<_>>>()?;
            candidates.into_iter().zip(verdicts).filter(|(_, ok)| *ok).map(|(s, _)| s).collect()
        };
        let mut found: BTreeMap<String, CompSeriesTree> = BTreeMap::new();
        for s in &splits {
            let qp = p.quotient_by_vertices(s)?;
            let cp = corner_presentation(p, s)?;
            let qs = series(&qp, depth + 1, cfg, cache)?;
            let cs = series(&cp, depth + 1, cfg, cache)?;
            let subset: Vec<String> = s.iter().map(|&v| p.vertex_name(v).to_string()).collect();
            for (qsig, qt) in qs.iter() {
                for (csig, ct) in cs.iter() {
                    let sig = format!("({qsig} {csig})");
                    found.entry(sig).or_insert_with(|| CompSeriesTree::Split {
                        pres: p.clone(),
                        subset: subset.clone(),
                        quotient: Box::new(qt.clone()),
                        corner: Box::new(ct.clone()),
                    });
                }
            }
        }
        if found.is_empty() {
            let sig = format!("#{class}");
            found.insert(sig, CompSeriesTree::Leaf { pres: p.clone(), kind: LeafKind::NoSplitFound });
        }
        found.into_iter().collect()
    };
    let out = Arc::new(out);
    cache.done.lock().unwrap().insert(class, out.clone());
    Ok(out)
}

/// Every derived composition series reachable through idempotent recollements, up to isomorphism at each node.
pub fn composition_series(p: &AlgebraPresentation, cfg: SeriesConfig) -> Result<Vec<CompSeriesTree>> {
    let cache = SeriesCache::default();
    Ok(series(p, 0, cfg, &cache)?.iter().map(|(_, t)| t.clone()).collect())
}

/// Invariants of a presentation, derived ones and informational ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub label: String,
    pub vertices: usize,
    pub arrows: usize,
    pub cartan: IntMatrix,
    pub euler: Option<IntMatrix>,
    pub cartan_det: i64,
    /// Coefficients from the constant term up.
    pub coxeter_poly: Option<Vec<i64>>,
    pub symmetrized_rank: Option<usize>,
    pub ag: Option<AgInvariant>,
    /// `None` when the cutoff was exceeded.
    pub gldim: Option<usize>,
}

/// Characteristic polynomial by Faddeev–LeVerrier, constant term first.
fn char_poly(a: &Matrix) -> Vec<Q> {
    let n = a.rows();
    let mut coeffs = vec![Q::int(0); n + 1];
    coeffs[n] = Q::int(1);
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        let am = a.mul(&m);
        let trace = (0..n).fold(Q::int(0), |acc, i| acc + am.get(i, i).clone());
        coeffs[n - k] = -(trace * Q::new(1, k as i64));
    }
    coeffs
}

pub fn derived_invariant_report(p: &AlgebraPresentation) -> Result<InvariantReport> {
    let cartan = cartan_matrix(p)?;
    let c = cartan.to_matrix();
    let cartan_det = c.determinant().to_i64().ok_or(Error::NotUnimodular)?;
    let euler = match euler_matrix(p) {
        Ok(e) => Some(e),
        Err(Error::NotUnimodular) => None,
        Err(e) => return Err(e),
    };
    // Coxeter matrix -Cᵀ C⁻¹.
    let coxeter_poly = c.solve(&Matrix::identity(c.rows())).map(|inv| {
        let phi = c.transpose().mul(&inv).neg();
        char_poly(&phi).iter().map(|x| x.to_i64().expect("integral Coxeter polynomial")).collect()
    });
    let gldim = monomial_gldim(p)?;
    Ok(InvariantReport {
        label: p.label.clone(),
        vertices: p.vertex_count(),
        arrows: p.arrow_count(),
        cartan,
        symmetrized_rank: euler.as_ref().map(|_| symmetrized_rank(p)).transpose()?,
        euler,
        cartan_det,
        coxeter_poly,
        ag: if is_gentle(p) { Some(ag_invariant(p)?) } else { None },
        gldim,
    })
}

/// One row of a report comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldComparison {
    pub field: &'static str,
    pub derived_invariant: bool,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

impl FieldComparison {
    /// A derived invariant that differs proves the two algebras are not derived equivalent.
    pub fn separates(&self) -> bool {
        self.derived_invariant && !self.equal
    }
}

fn opt<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".to_string(), ToString::to_string)
}

pub fn compare_reports(a: &InvariantReport, b: &InvariantReport) -> Vec<FieldComparison> {
    let row = |field, derived_invariant, left: String, right: String| FieldComparison {
        field,
        derived_invariant,
        equal: left == right,
        left,
        right,
    };
    let poly = |r: &InvariantReport| r.coxeter_poly.as_ref().map_or("-".into(), |c| format!("{c:?}"));
    let finite = |r: &InvariantReport| if r.gldim.is_some() { "finite".to_string() } else { "infinite".to_string() };
    vec![
        row("vertices", true, a.vertices.to_string(), b.vertices.to_string()),
        row("arrows", true, a.arrows.to_string(), b.arrows.to_string()),
        row("cartan_det", true, a.cartan_det.to_string(), b.cartan_det.to_string()),
        row("coxeter_poly", true, poly(a), poly(b)),
        row("symmetrized_rank", true, opt(&a.symmetrized_rank), opt(&b.symmetrized_rank)),
        row("ag", true, opt(&a.ag), opt(&b.ag)),
        row("gldim_finite", true, finite(a), finite(b)),
        row("gldim", false, opt(&a.gldim), opt(&b.gldim)),
        row("cartan", false, a.cartan.to_string(), b.cartan.to_string()),
        row("euler", false, opt(&a.euler), opt(&b.euler)),
    ]
}

/// The presentation in the text format, for reports.
pub fn report_source(p: &AlgebraPresentation) -> String {
    serialize(p)
}
