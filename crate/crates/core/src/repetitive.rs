//! Finite windows of the repetitive algebra of A₁.
//!
//! Vertices are the integers `lo..=hi`, with arrows `a_k, b_k: k → k+1`,
//! relations `a²`, `b²` and `aba = bab`. Away from the window boundary the
//! indecomposable projectives are the six-dimensional diamonds, and they are
//! also the injectives. Modules near the boundary see a truncated algebra, so
//! every operation checks how far the support of its input sits from the
//! edges before doing anything.
//!
//! String modules live over the monomial quotient by `aba` and `bab` and are
//! moved to the window algebra by [`Window::module`].

use crate::error::{Error, Result};
use crate::linrep::{
    cokernel, hom_dim, hom_space, iso_modules, kernel, proj_sum_map, projective_cover, projective_sum, Algebra,
    Matrix, ModuleMap, ProjectiveData, Rep, Q,
};
use crate::presentation::{AlgebraPresentation, Arrow, Path, Quiver, Relation};
use crate::strings::{all_strings, is_valid_string, string_module, Letter, StringWord};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Distance, in vertices, between a support and the window edge that each operation requires.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarginPolicy {
    /// Ω needs this much room above, Ω⁻¹ below.
    pub omega: i64,
    /// τ needs this much room on both sides.
    pub tau: i64,
    /// Room above the target of a stable Hom.
    pub stable_hom: i64,
}

impl Default for MarginPolicy {
    fn default() -> Self {
        MarginPolicy { omega: 4, tau: 8, stable_hom: 4 }
    }
}

fn window_quiver(lo: i64, hi: i64) -> Result<Quiver> {
    if hi - lo < 6 {
        return Err(Error::Params(format!("window {lo}..{hi} needs at least 7 vertices")));
    }
    let vertices = (lo..=hi).map(|k| k.to_string()).collect();
    let mut arrows = Vec::new();
    for k in lo..hi {
        let s = (k - lo) as usize;
        arrows.push(Arrow { name: format!("a{k}"), source: s, target: s + 1 });
        arrows.push(Arrow { name: format!("b{k}"), source: s, target: s + 1 });
    }
    Ok(Quiver { vertices, arrows })
}

fn arrow_a(lo: i64, k: i64) -> usize {
    2 * (k - lo) as usize
}

fn arrow_b(lo: i64, k: i64) -> usize {
    2 * (k - lo) as usize + 1
}

fn squares(q: &Quiver, lo: i64, hi: i64) -> Result<Vec<Relation>> {
    let mut rels = Vec::new();
    for k in lo..hi - 1 {
        for arrow in [arrow_a, arrow_b] {
            let p = Path::from_arrows(q, vec![arrow(lo, k), arrow(lo, k + 1)])?;
            rels.push(Relation::Monomial(p));
        }
    }
    Ok(rels)
}

fn alternating(q: &Quiver, lo: i64, k: i64) -> Result<(Path, Path)> {
    let aba = Path::from_arrows(q, vec![arrow_a(lo, k), arrow_b(lo, k + 1), arrow_a(lo, k + 2)])?;
    let bab = Path::from_arrows(q, vec![arrow_b(lo, k), arrow_a(lo, k + 1), arrow_b(lo, k + 2)])?;
    Ok((aba, bab))
}

/// The window `lo..=hi` with relations `a²`, `b²` and `aba − bab`.
pub fn window_presentation(lo: i64, hi: i64) -> Result<AlgebraPresentation> {
    let q = window_quiver(lo, hi)?;
    let mut rels = squares(&q, lo, hi)?;
    for k in lo..hi - 2 {
        let (aba, bab) = alternating(&q, lo, k)?;
        rels.push(Relation::Combination(vec![(Q::int(1), aba), (Q::int(-1), bab)]));
    }
    AlgebraPresentation::new(format!("rep[{lo},{hi}]"), q, rels)
}

/// The monomial quotient killing `aba` and `bab`, over which string modules are written.
pub fn string_quotient(lo: i64, hi: i64) -> Result<AlgebraPresentation> {
    let q = window_quiver(lo, hi)?;
    let mut rels = squares(&q, lo, hi)?;
    for k in lo..hi - 2 {
        let (aba, bab) = alternating(&q, lo, k)?;
        rels.push(Relation::Monomial(aba));
        rels.push(Relation::Monomial(bab));
    }
    AlgebraPresentation::new(format!("strings[{lo},{hi}]"), q, rels)
}

fn letter(q: &Quiver, arrow: usize) -> u8 {
    q.arrows[arrow].name.as_bytes()[0]
}

/// Same walk with `a` and `b` exchanged.
fn twin(q: &Quiver, path: &[usize]) -> Vec<usize> {
    path.iter()
        .map(|&x| {
            let name = &q.arrows[x].name;
            let other = if name.starts_with('a') { name.replacen('a', "b", 1) } else { name.replacen('b', "a", 1) };
            q.arrow_index(&other).expect("partner arrow")
        })
        .collect()
}

/// Index of the basis element equal to `path`, or `None` when the path is zero.
fn locate(q: &Quiver, basis: &[Vec<usize>], path: &[usize]) -> Option<usize> {
    basis.iter().position(|p| p == path).or_else(|| {
        let t = twin(q, path);
        basis.iter().position(|p| *p == t)
    })
}

/// Projective at `v` on either orientation of the window, truncated where the window ends.
fn diamond(q: &Quiver, v: usize) -> ProjectiveData {
    let n = q.vertex_count();
    let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut frontier = vec![(v, Vec::<usize>::new())];
    paths[v].push(Vec::new());
    while let Some((at, p)) = frontier.pop() {
        for x in q.arrows_from(at) {
            if p.last().is_some_and(|&y| letter(q, y) == letter(q, x)) || p.len() == 3 {
                continue;
            }
            let mut ext = p.clone();
            ext.push(x);
            let t = q.arrows[x].target;
            if ext.len() == 3 && letter(q, ext[0]) != b'a' {
                continue;
            }
            paths[t].push(ext.clone());
            frontier.push((t, ext));
        }
    }
    for ps in paths.iter_mut() {
        ps.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    }
    let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            for (j, p) in paths[a.source].iter().enumerate() {
                let mut ext = p.clone();
                ext.push(ai);
                let zero = ext.len() > 3 || ext.windows(2).any(|w| letter(q, w[0]) == letter(q, w[1]));
                if !zero {
                    if let Some(i) = locate(q, &paths[a.target], &ext) {
                        m.set(i, j, Q::int(1));
                    }
                }
            }
            m
        })
        .collect();
    ProjectiveData { vertex: v, dims, mats, paths }
}

/// A window together with its algebra, the opposite algebra and the string quotient.
#[derive(Debug)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub alg: Arc<Algebra>,
    pub op: Arc<Algebra>,
    pub strings: Arc<Algebra>,
    pub margins: MarginPolicy,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Window> {
        Window::with_margins(lo, hi, MarginPolicy::default())
    }

    pub fn with_margins(lo: i64, hi: i64, margins: MarginPolicy) -> Result<Window> {
        let pres = window_presentation(lo, hi)?;
        let opp = pres.opposite();
        let projs = (0..pres.vertex_count()).map(|v| Some(diamond(&pres.quiver, v))).collect();
        let op_projs = (0..opp.vertex_count()).map(|v| Some(diamond(&opp.quiver, v))).collect();
        Ok(Window {
            lo,
            hi,
            alg: Algebra::with_projectives(pres, projs),
            op: Algebra::with_projectives(opp, op_projs),
            strings: Algebra::new(string_quotient(lo, hi)?),
            margins,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.alg.pres.quiver
    }

    pub fn index(&self, k: i64) -> Option<usize> {
        (self.lo..=self.hi).contains(&k).then(|| (k - self.lo) as usize)
    }

    pub fn label(&self, v: usize) -> i64 {
        self.lo + v as i64
    }

    pub fn parse(&self, text: &str) -> Result<StringWord> {
        let w = crate::strings::parse_word(&self.strings.pres, text)?;
        if !is_valid_string(&self.strings.pres, &w) {
            return Err(Error::InvalidString(text.to_string()));
        }
        Ok(w)
    }

    /// Printed form of the canonical representative.
    pub fn show(&self, w: &StringWord) -> String {
        w.canonical(self.quiver()).display(self.quiver())
    }

    /// The string module of `w`, as a module over the window algebra.
    pub fn module(&self, w: &StringWord) -> Result<Rep> {
        string_module(&self.strings, w)?.transport(&self.alg)
    }

    /// Translates a word by `s` vertices.
    pub fn shift(&self, w: &StringWord, s: i64) -> Result<StringWord> {
        let q = self.quiver();
        let out_of_range = || Error::Params(format!("shift by {s} leaves window {}..{}", self.lo, self.hi));
        let start = self.index(self.label(w.start) + s).ok_or_else(out_of_range)?;
        let letters = w
            .letters
            .iter()
            .map(|l| {
                let a = &q.arrows[l.arrow];
                let k = self.label(a.source) + s;
                self.index(k).filter(|_| k < self.hi).ok_or_else(out_of_range).map(|_| Letter {
                    arrow: if letter(q, l.arrow) == b'a' { arrow_a(self.lo, k) } else { arrow_b(self.lo, k) },
                    inverse: l.inverse,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StringWord { start, letters })
    }

    /// Smallest and largest vertex label carrying a nonzero space.
    pub fn support(&self, m: &Rep) -> Option<(i64, i64)> {
        let s = m.support();
        Some((self.label(*s.first()?), self.label(*s.last()?)))
    }

    fn check(&self, op: &str, m: &Rep, below: i64, above: i64) -> Result<()> {
        let Some((lo, hi)) = self.support(m) else { return Ok(()) };
        if lo - self.lo < below || self.hi - hi < above {
            return Err(Error::Margin { op: op.to_string(), lo, hi, wlo: self.lo, whi: self.hi });
        }
        Ok(())
    }

    /// Recognizes an indecomposable module as a string module.
    pub fn recognize(&self, m: &Rep) -> Result<StringWord> {
        if m.is_zero() {
            return Err(Error::Projective("zero module".into()));
        }
        let ranks: Vec<usize> = m.mats.iter().map(Matrix::rank).collect();
        for w in strings_with_dims(&self.strings.pres, &m.dims) {
            let mut counts = vec![0; ranks.len()];
            for l in &w.letters {
                counts[l.arrow] += 1;
            }
            if counts != ranks {
                continue;
            }
            if iso_modules(&self.module(&w)?, m)? {
                return Ok(w);
            }
        }
        Err(Error::Recognition(format!("dimension vector {:?} over window {}..{}", m.dims, self.lo, self.hi)))
    }
}

/// Every string (canonical representative) with the given dimension vector.
fn strings_with_dims(p: &AlgebraPresentation, dims: &[usize]) -> Vec<StringWord> {
    fn grow(p: &AlgebraPresentation, dims: &[usize], used: &mut [usize], w: &mut StringWord, left: usize, out: &mut BTreeSet<StringWord>) {
        let q = &p.quiver;
        if left == 0 {
            out.insert(w.canonical(q));
            return;
        }
        let at = w.end(q);
        let next: Vec<(Letter, usize)> = q
            .arrows_from(at)
            .map(|a| (Letter::direct(a), q.arrows[a].target))
            .chain(q.arrows_into(at).map(|a| (Letter::inv(a), q.arrows[a].source)))
            .collect();
        for (l, u) in next {
            if used[u] == dims[u] {
                continue;
            }
            w.letters.push(l);
            if is_valid_string(p, w) {
                used[u] += 1;
                grow(p, dims, used, w, left - 1, out);
                used[u] -= 1;
            }
            w.letters.pop();
        }
    }
    let total: usize = dims.iter().sum();
    let mut out = BTreeSet::new();
    for v in (0..dims.len()).filter(|&v| dims[v] > 0) {
        let mut used = vec![0; dims.len()];
        used[v] = 1;
        grow(p, dims, &mut used, &mut StringWord::trivial(v), total - 1, &mut out);
    }
    out.into_iter().collect()
}

/// The diamond with top at vertex `n`.
pub fn projective_at(win: &Window, n: i64) -> Result<Rep> {
    let v = win.index(n).filter(|_| n + 3 <= win.hi).ok_or(Error::Margin {
        op: "projective_at".into(),
        lo: n,
        hi: n + 3,
        wlo: win.lo,
        whi: win.hi,
    })?;
    crate::linrep::projective(&win.alg, v)
}

/// Kernel of the projective cover.
pub fn omega_module(win: &Window, m: &Rep) -> Result<Rep> {
    win.check("omega", m, 0, win.margins.omega)?;
    let (ps, cover) = projective_cover(m)?;
    let (k, _) = kernel(&cover, &ps.rep);
    if let (Some((lo, hi)), Some((klo, khi))) = (win.support(m), win.support(&k)) {
        // The cover reaches three vertices past the support and no further.
        assert!(klo > lo && khi <= hi + 3, "syzygy support {klo}..{khi} outside {}..{}", lo + 1, hi + 3);
    }
    Ok(k)
}

/// Cokernel of the injective envelope, computed as `D Ω D`.
pub fn omega_inv_module(win: &Window, m: &Rep) -> Result<Rep> {
    win.check("omega_inv", m, win.margins.omega, 0)?;
    let d = m.dual(&win.op)?;
    let (ps, cover) = projective_cover(&d)?;
    let (k, _) = kernel(&cover, &ps.rep);
    k.dual(&win.alg)
}

/// `D Tr M` from a minimal projective presentation `P₁ → P₀ → M`.
pub fn tau_module(win: &Window, m: &Rep) -> Result<Rep> {
    win.check("tau", m, win.margins.tau, win.margins.tau)?;
    let (p0, cover) = projective_cover(m)?;
    let (k, incl) = kernel(&cover, &p0.rep);
    let (p1, cover1) = projective_cover(&k)?;
    let f = cover1.then(&incl);
    let q = win.quiver();
    let oq = &win.op.pres.quiver;
    let q0 = projective_sum(&win.op, &p0.summands)?;
    let q1 = projective_sum(&win.op, &p1.summands)?;
    // Generator i of P₀ (top w_i) goes to Σ_j rev(x_ij) where f(gen_j) = Σ_i x_ij · gen_i.
    let mut images: Vec<Vec<Q>> = p0.summands.iter().map(|&w| vec![Q::int(0); q1.rep.dims[w]]).collect();
    for (j, &vj) in p1.summands.iter().enumerate() {
        let col = f.comps[vj].column(p1.gens[j]);
        for (r, c) in col.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, path) = &p0.elems[vj][r];
            let rev: Vec<usize> = path.iter().rev().copied().collect();
            let w = p0.summands[*i];
            let mine: Vec<Vec<usize>> = q1.elems[w].iter().filter(|(s, _)| *s == j).map(|(_, p)| p.clone()).collect();
            let offset = q1.elems[w].iter().position(|(s, _)| *s == j).expect("summand present");
            let local = locate(oq, &mine, &rev).ok_or_else(|| {
                Error::Recognition(format!("path {} has no reverse in the opposite window", Path {
                    source: w,
                    target: vj,
                    arrows: path.clone()
                }
                .written(q)))
            })?;
            images[*i][offset + local] = images[*i][offset + local].clone() + c;
        }
    }
    let g = proj_sum_map(&q0, &q1.rep, &images);
    let (tr, _) = cokernel(&g, &q1.rep);
    tr.dual(&win.alg)
}

fn string_op(win: &Window, w: &StringWord, f: fn(&Window, &Rep) -> Result<Rep>) -> Result<StringWord> {
    let out = f(win, &win.module(w)?)?;
    if out.is_zero() {
        return Err(Error::Projective(win.show(w)));
    }
    win.recognize(&out)
}

pub fn omega(win: &Window, w: &StringWord) -> Result<StringWord> {
    string_op(win, w, omega_module)
}

pub fn omega_inv(win: &Window, w: &StringWord) -> Result<StringWord> {
    string_op(win, w, omega_inv_module)
}

pub fn tau(win: &Window, w: &StringWord) -> Result<StringWord> {
    string_op(win, w, tau_module)
}

/// `Ω^s` for any integer `s`, negative powers meaning `Ω⁻¹`.
pub fn omega_power(win: &Window, w: &StringWord, s: i64) -> Result<StringWord> {
    let mut out = w.clone();
    for _ in 0..s.unsigned_abs() {
        out = if s > 0 { omega(win, &out)? } else { omega_inv(win, &out)? };
    }
    Ok(out)
}

/// Columns span the maps `M → N` that factor through a projective.
fn factoring_span(win: &Window, m: &Rep, n: &Rep) -> Result<Matrix> {
    win.check("stable_hom", n, 0, win.margins.stable_hom)?;
    let len: usize = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    if n.is_zero() {
        return Ok(Matrix::zeros(len, 0));
    }
    let (ps, cover) = projective_cover(n)?;
    let cols: Vec<Vec<Q>> = hom_space(m, &ps.rep)?.iter().map(|g| g.then(&cover).flatten()).collect();
    Ok(Matrix::from_columns(len, &cols))
}

pub fn stable_hom_dim(win: &Window, m: &Rep, n: &Rep) -> Result<usize> {
    let span = factoring_span(win, m, n)?;
    Ok(hom_dim(m, n)? - span.rank())
}

/// True when `y ∘ x` factors through a projective, for `x: M → N` and `y: N → L`.
pub fn stable_comp(win: &Window, m: &Rep, x: &ModuleMap, y: &ModuleMap, l: &Rep) -> Result<bool> {
    factors_through_projective(win, m, &x.then(y), l)
}

pub fn factors_through_projective(win: &Window, m: &Rep, f: &ModuleMap, n: &Rep) -> Result<bool> {
    let span = factoring_span(win, m, n)?;
    let v = Matrix::from_columns(span.rows(), &[f.flatten()]);
    Ok(span.rank() == span.hstack(&v).rank())
}

/// A map `M → N` that is nonzero in the stable category, if any.
fn stable_generator(win: &Window, m: &Rep, n: &Rep) -> Result<Option<ModuleMap>> {
    for f in hom_space(m, n)? {
        if !factors_through_projective(win, m, &f, n)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// The fixed word `1 -a1> 2 -b2> 3`.
pub fn t1(win: &Window) -> Result<StringWord> {
    win.parse("1 -a1> 2 -b2> 3")
}

/// The first condition a candidate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `dim Hom(T₁, Ω^{-s} T′)` must be 1 for `s = 0` and 0 otherwise.
    HomFromT1 { shift: i64, found: usize },
    HomToT1 { shift: i64, found: usize },
    SelfHom { shift: i64, found: usize },
    /// `y ∘ x` is stably nonzero on `T₁`.
    CompositeOnT1,
    /// `x ∘ y` is stably nonzero on `T′`.
    CompositeOnT,
}

fn power(s: i64, x: &str) -> String {
    if s == 0 {
        x.to_string()
    } else {
        format!("Ω^{}{x}", -s)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::HomFromT1 { shift, found } => write!(f, "stable Hom(T1, {}) = {found}", power(*shift, "T'")),
            Condition::HomToT1 { shift, found } => write!(f, "stable Hom(T', {}) = {found}", power(*shift, "T1")),
            Condition::SelfHom { shift, found } => write!(f, "stable Hom(T', {}) = {found}", power(*shift, "T'")),
            Condition::CompositeOnT1 => write!(f, "yx is stably nonzero"),
            Condition::CompositeOnT => write!(f, "xy is stably nonzero"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub word: String,
    pub failed: Option<Condition>,
}

/// Bounds, candidate count and per-candidate verdicts of a search.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub window: (i64, i64),
    pub region: (i64, i64),
    pub max_len: usize,
    pub shifts: i64,
    pub outcomes: Vec<Outcome>,
}

impl SearchReport {
    pub fn candidates(&self) -> usize {
        self.outcomes.len()
    }

    pub fn survivors(&self) -> Vec<&str> {
        self.outcomes.iter().filter(|o| o.failed.is_none()).map(|o| o.word.as_str()).collect()
    }
}

/// Rows of stable Hom dimensions must read `δ_{s,0}`.
fn expect_delta(s: i64, found: usize) -> bool {
    found == usize::from(s == 0)
}

fn judge(win: &Window, t1_powers: &[(i64, Rep)], t1: &Rep, w: &StringWord, shifts: i64) -> Result<Option<Condition>> {
    let t = win.module(w)?;
    // Cheap necessary condition before any stable computation.
    if hom_dim(t1, &t)? == 0 {
        return Ok(Some(Condition::HomFromT1 { shift: 0, found: 0 }));
    }
    if hom_dim(&t, t1)? == 0 {
        return Ok(Some(Condition::HomToT1 { shift: 0, found: 0 }));
    }
    // Hom(T₁, Ω^{-s}T′) = Hom(Ω^s T₁, T′) and Hom(T′, Ω^{-s}T₁) use powers of T₁ only.
    let order: Vec<i64> = std::iter::once(0).chain((1..=shifts).flat_map(|s| [s, -s])).collect();
    for &s in &order {
        let src = &t1_powers.iter().find(|(k, _)| *k == s).expect("power of T1").1;
        let found = stable_hom_dim(win, src, &t)?;
        if !expect_delta(s, found) {
            return Ok(Some(Condition::HomFromT1 { shift: s, found }));
        }
        let dst = &t1_powers.iter().find(|(k, _)| *k == -s).expect("power of T1").1;
        let found = stable_hom_dim(win, &t, dst)?;
        if !expect_delta(s, found) {
            return Ok(Some(Condition::HomToT1 { shift: s, found }));
        }
    }
    // Hom(T′, Ω^{-s}T′) = Hom(Ω^a T′, Ω^{a-s} T′), split to keep both sides near the middle.
    for &s in &order {
        let a = s.div_euclid(2);
        let left = win.module(&omega_power(win, w, a)?)?;
        let right = win.module(&omega_power(win, w, a - s)?)?;
        let found = stable_hom_dim(win, &left, &right)?;
        if !expect_delta(s, found) {
            return Ok(Some(Condition::SelfHom { shift: s, found }));
        }
    }
    let x = stable_generator(win, t1, &t)?.expect("stable Hom(T1, T') is one-dimensional");
    let y = stable_generator(win, &t, t1)?.expect("stable Hom(T', T1) is one-dimensional");
    if !stable_comp(win, t1, &x, &y, t1)? {
        return Ok(Some(Condition::CompositeOnT1));
    }
    if !stable_comp(win, &t, &y, &x, &t)? {
        return Ok(Some(Condition::CompositeOnT));
    }
    Ok(None)
}

/// Strings of length at most `max_len` supported in `[lo+7, hi-7]` that could complete `T₁` to a two-cycle.
pub fn search_counterexample(win: &Window, max_len: usize, shifts: i64) -> Result<SearchReport> {
    let region = (win.lo + 7, win.hi - 7);
    let sub = string_quotient(region.0, region.1)?;
    let q = win.quiver();
    let lift = |w: &StringWord| -> StringWord {
        let sq = &sub.quiver;
        let start = win.index(region.0 + w.start as i64).expect("region inside window");
        let letters = w.letters.iter().map(|l| Letter { arrow: q.arrow_index(&sq.arrows[l.arrow].name).unwrap(), inverse: l.inverse }).collect();
        StringWord { start, letters }.canonical(q)
    };
    let candidates: Vec<StringWord> = all_strings(&sub, max_len).iter().map(lift).collect();
    let base = t1(win)?;
    let t1_rep = win.module(&base)?;
    let t1_powers = (-shifts..=shifts)
        .map(|s| Ok((s, win.module(&omega_power(win, &base, s)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let outcomes = candidates
        .par_iter()
        .map(|w| Ok(Outcome { word: win.show(w), failed: judge(win, &t1_powers, &t1_rep, w, shifts)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport { window: (win.lo, win.hi), region, max_len, shifts, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gentle::check_gentle;
    use crate::linrep::{ext_dim, simple, top};

    fn word(win: &Window, s: &str) -> StringWord {
        win.parse(s).unwrap()
    }

    #[test]
    fn presentations() {
        assert!(window_presentation(0, 5).is_err());
        let p = window_presentation(0, 6).unwrap();
        assert_eq!((p.vertex_count(), p.arrow_count()), (7, 12));
        let monomial = p.monomial_relations().len();
        assert_eq!(monomial, 10);
        assert_eq!(p.relations.len() - monomial, 4);
        let s = string_quotient(0, 6).unwrap();
        assert_eq!(s.relations.len(), 10 + 2 * 4);
        assert!(s.is_monomial());
        // Two arrows a_k, b_k out of k and two into k+1 with aba and bab both zero: G2 fails.
        assert!(check_gentle(&s).is_some());
    }

    #[test]
    fn diamonds() {
        let win = Window::new(0, 8).unwrap();
        for n in 0..=5 {
            let p = projective_at(&win, n).unwrap();
            let mut want = vec![0; 9];
            for (k, d) in [1, 2, 2, 1].into_iter().enumerate() {
                want[n as usize + k] = d;
            }
            assert_eq!(p.dims, want);
            assert!(p.satisfies_relations());
            assert!(iso_modules(&top(&p), &simple(&win.alg, n as usize)).unwrap());
            let soc = win.index(n + 3).unwrap();
            assert_eq!(hom_dim(&simple(&win.alg, soc), &p).unwrap(), 1);
        }
        assert!(matches!(projective_at(&win, 6), Err(Error::Margin { .. })));
    }

    #[test]
    fn strings_satisfy_commutation() {
        let win = Window::new(0, 6).unwrap();
        for w in all_strings(&win.strings.pres, 6) {
            assert!(win.module(&w).unwrap().satisfies_relations());
        }
    }

    #[test]
    fn omega_anchors() {
        let win = Window::new(-6, 10).unwrap();
        let t = t1(&win).unwrap();
        assert_eq!(omega(&win, &t).unwrap(), word(&win, "2 -a2> 3 -b3> 4").canonical(win.quiver()));
        assert_eq!(omega_inv(&win, &t).unwrap(), word(&win, "0 -a0> 1 -b1> 2").canonical(win.quiver()));
    }

    #[test]
    fn tau_anchors() {
        let win = Window::new(-10, 12).unwrap();
        let t = t1(&win).unwrap();
        let t1 = tau(&win, &t).unwrap();
        assert_eq!(win.show(&t1), win.show(&word(&win, "0 -b0> 1 -a1> 2")));
        let t2 = tau(&win, &t1).unwrap();
        assert_eq!(win.show(&t2), win.show(&word(&win, "-1 -a-1> 0 -b0> 1")));
    }

    #[test]
    fn tau_removes_hook() {
        let win = Window::new(-14, 16).unwrap();
        let q = win.quiver();
        let hooked = [
            "1 <a0- 0 <b-1- -1 -a-1> 0 <b-1- -1",
            "1 <a0- 0 <b-1- -1 -a-1> 0 <b-1- -1 -a-1> 0",
            "1 <a0- 0 <b-1- -1 -a-1> 0 <b-1- -1 <a-2- -2",
        ];
        let head = word(&win, "0 <b-1- -1");
        for s in hooked {
            let t = tau(&win, &word(&win, s)).unwrap();
            let starts = [t.clone(), t.inverse(q)].into_iter().any(|u| u.start == head.start && u.letters.starts_with(&head.letters));
            assert!(starts, "{s} -> {}", win.show(&t));
        }
    }

    #[test]
    fn stable_homs() {
        let win = Window::new(-6, 10).unwrap();
        let t = win.module(&t1(&win).unwrap()).unwrap();
        assert_eq!(stable_hom_dim(&win, &t, &t).unwrap(), 1);
        let p = projective_at(&win, 1).unwrap();
        assert_eq!(stable_hom_dim(&win, &p, &t).unwrap(), 0);
        assert!(stable_hom_dim(&win, &t, &t).unwrap() <= hom_dim(&t, &t).unwrap());
        let id = ModuleMap::identity(&t);
        assert!(!stable_comp(&win, &t, &id, &id, &t).unwrap());
    }

    #[test]
    fn ext_via_syzygy() {
        let win = Window::new(-6, 10).unwrap();
        let words: Vec<StringWord> = all_strings(&win.strings.pres, 3)
            .into_iter()
            .filter(|w| w.vertices(win.quiver()).iter().all(|&v| (0..=4).contains(&win.label(v))))
            .collect();
        let mut checked = 0;
        for (i, m) in words.iter().enumerate().step_by(5) {
            for n in words.iter().skip(i % 7).step_by(9) {
                let (mm, nn) = (win.module(m).unwrap(), win.module(n).unwrap());
                let om = omega_module(&win, &mm).unwrap();
                let stable = stable_hom_dim(&win, &om, &nn).unwrap();
                assert_eq!(stable, ext_dim(&mm, &nn, 1).unwrap(), "{} {}", win.show(m), win.show(n));
                checked += 1;
            }
        }
        assert!(checked >= 30);
    }

    #[test]
    fn margins_are_enforced() {
        let win = Window::new(0, 8).unwrap();
        let w = word(&win, "5 -a5> 6");
        assert!(matches!(omega(&win, &w), Err(Error::Margin { .. })));
        let w = word(&win, "1 -a1> 2");
        assert!(matches!(omega_inv(&win, &w), Err(Error::Margin { .. })));
        assert!(matches!(tau(&win, &w), Err(Error::Margin { .. })));
    }

    #[test]
    fn t1_is_excluded() {
        let win = Window::new(-8, 12).unwrap();
        let base = t1(&win).unwrap();
        let t = win.module(&base).unwrap();
        let powers: Vec<(i64, Rep)> =
            (-2..=2).map(|s| (s, win.module(&omega_power(&win, &base, s).unwrap()).unwrap())).collect();
        assert_eq!(judge(&win, &powers, &t, &base, 2).unwrap(), Some(Condition::CompositeOnT1));
    }
}
