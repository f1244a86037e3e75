//! Quivers, paths and algebras given by a quiver with relations.
//!
//! Paths compose right to left: the written form `f*g` means "f after g".
//! Internally a [`Path`] stores its arrows in application order, so
//! `arrows[0]` is the first arrow traversed.

mod dsl;
mod families;
mod iso;

pub use dsl::{parse_presentation, parse_path, serialize};
pub use families::{family, FamilyParams};
pub use iso::{iso_presentations, Isomorphism};

use crate::error::{Error, Result};
use crate::linrep::Q;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows_from(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows_into(v).count()
    }
}

/// A path in a quiver; `arrows` is in application order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        Path { source: q.arrows[a].source, target: q.arrows[a].target, arrows: vec![a] }
    }

    /// Builds a path from arrows in application order, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::NonComposable("empty".into()));
        };
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                let p = Path { source: 0, target: 0, arrows: arrows.clone() };
                return Err(Error::NonComposable(p.written(q)));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: q.arrows[first].source, target: q.arrows[last].target, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `then`, i.e. the product `then * self`.
    pub fn then(&self, then: &Path) -> Option<Path> {
        if self.target != then.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Some(Path { source: self.source, target: then.target, arrows })
    }

    /// Whether `sub` (nontrivial) occurs as a contiguous subpath.
    pub fn contains(&self, sub: &Path) -> bool {
        !sub.arrows.is_empty() && self.arrows.windows(sub.arrows.len()).any(|w| w == sub.arrows.as_slice())
    }

    /// Vertices along the path, source first.
    pub fn vertex_sequence(&self, q: &Quiver) -> Vec<usize> {
        let mut vs = vec![self.source];
        vs.extend(self.arrows.iter().map(|&a| q.arrows[a].target));
        vs
    }

    /// Written form, later arrows first: `c*b*a`; trivial paths print as `e_v`.
    pub fn written(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices.get(self.source).map_or("?", String::as_str));
        }
        let names: Vec<&str> = self.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect();
        names.join("*")
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Monomial(Path),
    Combination(Vec<(Q, Path)>),
}

impl Relation {
    pub fn paths(&self) -> Vec<&Path> {
        match self {
            Relation::Monomial(p) => vec![p],
            Relation::Combination(terms) => terms.iter().map(|(_, p)| p).collect(),
        }
    }

    pub fn written(&self, q: &Quiver) -> String {
        match self {
            Relation::Monomial(p) => p.written(q),
            Relation::Combination(terms) => {
                let mut s = String::new();
                for (i, (c, p)) in terms.iter().enumerate() {
                    let neg = c.is_negative();
                    let mag = c.abs();
                    if i == 0 {
                        if neg {
                            s.push('-');
                        }
                    } else {
                        s.push_str(if neg { " - " } else { " + " });
                    }
                    if !mag.is_one() {
                        let _ = write!(s, "{mag} ");
                    }
                    s.push_str(&p.written(q));
                }
                s
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraPresentation {
    pub label: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

/// Nonzero paths of a monomial algebra, trivial paths included.
#[derive(Clone, Debug)]
pub struct PathBasis {
    pub paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl PathBasis {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn between(&self, i: usize, j: usize) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter(move |p| p.source == i && p.target == j)
    }

    pub fn starting_at(&self, i: usize) -> impl Iterator<Item = &Path> {
        self.paths.iter().filter(move |p| p.source == i)
    }

    /// Paths grouped by `(source, target)`.
    pub fn grouped(&self) -> BTreeMap<(usize, usize), Vec<&Path>> {
        let mut m: BTreeMap<(usize, usize), Vec<&Path>> = BTreeMap::new();
        for p in &self.paths {
            m.entry((p.source, p.target)).or_default().push(p);
        }
        m
    }
}

/// Sort key that orders integer-like names numerically: `2 < 10 < 10' < x`.
pub fn natural_key(s: &str) -> (u8, i64, String) {
    let bytes = s.as_bytes();
    let mut end = 0;
    if bytes.first() == Some(&b'-') {
        end = 1;
    }
    let digits_start = end;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end > digits_start {
        if let Ok(n) = s[..end].parse::<i64>() {
            return (0, n, s[end..].to_string());
        }
    }
    (1, 0, s.to_string())
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    natural_key(a).cmp(&natural_key(b))
}

impl AlgebraPresentation {
    /// Validates relations and stores them in reduced form.
    pub fn new(label: impl Into<String>, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &quiver.vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Duplicate(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        for a in &quiver.arrows {
            if !seen.insert(a.name.clone()) {
                return Err(Error::Duplicate(a.name.clone()));
            }
            if a.source >= quiver.vertices.len() || a.target >= quiver.vertices.len() {
                return Err(Error::UnknownVertex(format!("endpoint of {}", a.name)));
            }
        }
        for r in &relations {
            for p in r.paths() {
                if p.len() < 2 {
                    return Err(Error::Inadmissible(p.written(&quiver), "length below 2".into()));
                }
                Path::from_arrows(&quiver, p.arrows.clone())?;
            }
            if let Relation::Combination(terms) = r {
                let (s, t, l) = (terms[0].1.source, terms[0].1.target, terms[0].1.len());
                if terms.iter().any(|(_, p)| p.source != s || p.target != t || p.len() != l) {
                    return Err(Error::Inadmissible(r.written(&quiver), "paths not parallel of equal length".into()));
                }
            }
        }
        let relations = reduce_relations(relations);
        let mut p = AlgebraPresentation { label: label.into(), quiver, relations };
        sort_relations(&mut p);
        Ok(p)
    }

    /// Convenience constructor from names; relations use the written form `b*a`.
    pub fn build(label: &str, vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&str]) -> Result<Self> {
        let mut q = Quiver { vertices: vertices.iter().map(|s| s.to_string()).collect(), arrows: Vec::new() };
        for (name, s, t) in arrows {
            q.arrows.push(Arrow { name: name.to_string(), source: q.vertex(s)?, target: q.vertex(t)? });
        }
        let rels = relations
            .iter()
            .map(|r| parse_path(&q, r).map(Relation::Monomial))
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(label, q, rels)
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(|r| matches!(r, Relation::Monomial(_)))
    }

    pub fn monomial_relations(&self) -> Vec<&Path> {
        self.relations
            .iter()
            .filter_map(|r| match r {
                Relation::Monomial(p) => Some(p),
                Relation::Combination(_) => None,
            })
            .collect()
    }

    /// True when the path contains a monomial relation.
    pub fn is_zero_path(&self, p: &Path) -> bool {
        self.monomial_relations().iter().any(|r| p.len() >= r.len() && p.contains(r))
    }

    pub fn path_basis(&self) -> Result<PathBasis> {
        if !self.is_monomial() {
            return Err(Error::NonMonomial);
        }
        let rels = self.monomial_relations();
        let max_rel = rels.iter().map(|r| r.len()).max().unwrap_or(0);
        let window = max_rel.saturating_sub(1).max(1);
        let mut paths: Vec<Path> = (0..self.vertex_count()).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.quiver.arrows_from(p.target) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    let np = Path { source: p.source, target: self.quiver.arrows[a].target, arrows };
                    let killed = rels.iter().any(|r| np.arrows.ends_with(&r.arrows));
                    if killed {
                        continue;
                    }
                    let n = np.arrows.len();
                    if n > window {
                        let tail = &np.arrows[n - window..];
                        if np.arrows[..n - 1].windows(window).any(|w| w == tail) {
                            return Err(Error::InfiniteDimensional(np.written(&self.quiver)));
                        }
                    }
                    next.push(np);
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        paths.sort_by(|a, b| (a.source, a.target, a.len(), &a.arrows).cmp(&(b.source, b.target, b.len(), &b.arrows)));
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(PathBasis { paths, index })
    }

    pub fn dimension(&self) -> Result<usize> {
        Ok(self.path_basis()?.len())
    }

    pub fn opposite(&self) -> AlgebraPresentation {
        let quiver = Quiver {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        };
        let relations = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monomial(p) => Relation::Monomial(p.reversed()),
                Relation::Combination(t) => {
                    Relation::Combination(t.iter().map(|(c, p)| (c.clone(), p.reversed())).collect())
                }
            })
            .collect();
        let label = match self.label.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.label),
        };
        AlgebraPresentation { label, quiver, relations }
    }

    /// Keeps the vertices in `keep` (in their current order), dropping the
    /// other vertices, incident arrows and relations touching them.
    fn restrict(&self, keep: &[usize], label: String) -> AlgebraPresentation {
        let mut vmap = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            vmap[v] = i;
        }
        let mut amap = vec![usize::MAX; self.arrow_count()];
        let mut arrows = Vec::new();
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            if vmap[a.source] != usize::MAX && vmap[a.target] != usize::MAX {
                amap[i] = arrows.len();
                arrows.push(Arrow { name: a.name.clone(), source: vmap[a.source], target: vmap[a.target] });
            }
        }
        let map_path = |p: &Path| -> Option<Path> {
            if p.arrows.iter().any(|&a| amap[a] == usize::MAX) {
                return None;
            }
            Some(Path { source: vmap[p.source], target: vmap[p.target], arrows: p.arrows.iter().map(|&a| amap[a]).collect() })
        };
        let relations = self
            .relations
            .iter()
            .filter_map(|r| match r {
                Relation::Monomial(p) => map_path(p).map(Relation::Monomial),
                Relation::Combination(t) => {
                    let terms: Vec<(Q, Path)> =
                        t.iter().filter_map(|(c, p)| map_path(p).map(|mp| (c.clone(), mp))).collect();
                    (!terms.is_empty()).then_some(Relation::Combination(terms))
                }
            })
            .collect();
        let quiver = Quiver { vertices: keep.iter().map(|&v| self.quiver.vertices[v].clone()).collect(), arrows };
        AlgebraPresentation { label, quiver, relations: reduce_relations(relations) }
    }

    /// The algebra `A/AeA` for `e` the sum of the idempotents in `s`.
    pub fn quotient_by_vertices(&self, s: &[usize]) -> Result<AlgebraPresentation> {
        check_subset(self, s)?;
        if !self.is_monomial() {
            return Err(Error::NonMonomial);
        }
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !s.contains(v)).collect();
        let names: Vec<&str> = s.iter().map(|&v| self.vertex_name(v)).collect();
        Ok(self.restrict(&keep, format!("{}/<{}>", self.label, names.join(","))))
    }

    /// Disjoint union with `other` plus one new arrow from `a` (here) to `b` (in `other`).
    pub fn glue(&self, a: &str, other: &AlgebraPresentation, b: &str) -> Result<AlgebraPresentation> {
        let av = self.quiver.vertex(a)?;
        let bv = other.quiver.vertex(b)?;
        let mut primes = String::new();
        loop {
            let clash = other.quiver.vertices.iter().any(|v| self.quiver.vertex_index(&format!("{v}{primes}")).is_some())
                || other.quiver.arrows.iter().any(|x| self.quiver.arrow_index(&format!("{}{primes}", x.name)).is_some());
            if !clash {
                break;
            }
            primes.push('\'');
        }
        let n = self.vertex_count();
        let m = self.arrow_count();
        let mut quiver = self.quiver.clone();
        quiver.vertices.extend(other.quiver.vertices.iter().map(|v| format!("{v}{primes}")));
        quiver.arrows.extend(other.quiver.arrows.iter().map(|x| Arrow {
            name: format!("{}{primes}", x.name),
            source: x.source + n,
            target: x.target + n,
        }));
        let mut k = 1;
        let glue_name = loop {
            let cand = format!("g{k}");
            if quiver.arrow_index(&cand).is_none() {
                break cand;
            }
            k += 1;
        };
        quiver.arrows.push(Arrow { name: glue_name, source: av, target: bv + n });
        let shift = |p: &Path| Path { source: p.source + n, target: p.target + n, arrows: p.arrows.iter().map(|&x| x + m).collect() };
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().map(|r| match r {
            Relation::Monomial(p) => Relation::Monomial(shift(p)),
            Relation::Combination(t) => Relation::Combination(t.iter().map(|(c, p)| (c.clone(), shift(p))).collect()),
        }));
        Ok(AlgebraPresentation { label: format!("({} {a}->{b} {})", self.label, other.label), quiver, relations })
    }

    /// Connected components of the underlying graph, each as its own algebra.
    pub fn blocks(&self) -> Vec<AlgebraPresentation> {
        let comps = self.components();
        if comps.len() == 1 {
            return vec![self.clone()];
        }
        comps
            .iter()
            .enumerate()
            .map(|(i, c)| self.restrict(c, format!("{}#{}", self.label, i + 1)))
            .collect()
    }

    /// Vertex sets of the connected components, in order of first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for a in &self.quiver.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices and arrows sorted by natural name order, relations sorted by written form.
    pub fn canonical(&self) -> AlgebraPresentation {
        let mut vorder: Vec<usize> = (0..self.vertex_count()).collect();
        vorder.sort_by(|&a, &b| natural_cmp(&self.quiver.vertices[a], &self.quiver.vertices[b]));
        let mut vmap = vec![0; self.vertex_count()];
        for (i, &v) in vorder.iter().enumerate() {
            vmap[v] = i;
        }
        let mut aorder: Vec<usize> = (0..self.arrow_count()).collect();
        aorder.sort_by(|&a, &b| natural_cmp(&self.quiver.arrows[a].name, &self.quiver.arrows[b].name));
        let mut amap = vec![0; self.arrow_count()];
        for (i, &a) in aorder.iter().enumerate() {
            amap[a] = i;
        }
        let quiver = Quiver {
            vertices: vorder.iter().map(|&v| self.quiver.vertices[v].clone()).collect(),
            arrows: aorder
                .iter()
                .map(|&a| {
                    let x = &self.quiver.arrows[a];
                    Arrow { name: x.name.clone(), source: vmap[x.source], target: vmap[x.target] }
                })
                .collect(),
        };
        let mp = |p: &Path| Path { source: vmap[p.source], target: vmap[p.target], arrows: p.arrows.iter().map(|&a| amap[a]).collect() };
        let relations = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monomial(p) => Relation::Monomial(mp(p)),
                Relation::Combination(t) => Relation::Combination(t.iter().map(|(c, p)| (c.clone(), mp(p))).collect()),
            })
            .collect();
        let mut out = AlgebraPresentation { label: self.label.clone(), quiver, relations };
        sort_relations(&mut out);
        out
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

fn check_subset(p: &AlgebraPresentation, s: &[usize]) -> Result<()> {
    let set: HashSet<usize> = s.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::InvalidSubset("empty".into()));
    }
    if set.len() >= p.vertex_count() {
        return Err(Error::InvalidSubset("all vertices".into()));
    }
    if s.iter().any(|&v| v >= p.vertex_count()) {
        return Err(Error::InvalidSubset("vertex out of range".into()));
    }
    Ok(())
}

fn sort_relations(p: &mut AlgebraPresentation) {
    let q = p.quiver.clone();
    for r in &mut p.relations {
        if let Relation::Combination(t) = r {
            t.sort_by(|a, b| a.1.written(&q).cmp(&b.1.written(&q)));
        }
    }
    p.relations.sort_by_key(|r| r.written(&q));
}

/// Drops duplicate monomials, monomials containing another monomial, and
/// zero or killed terms of combinations.
fn reduce_relations(relations: Vec<Relation>) -> Vec<Relation> {
    let mut monos: Vec<Path> = Vec::new();
    let mut combos: Vec<Vec<(Q, Path)>> = Vec::new();
    for r in relations {
        match r {
            Relation::Monomial(p) => monos.push(p),
            Relation::Combination(terms) => combos.push(terms),
        }
    }
    monos.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    monos.dedup();
    let mut kept: Vec<Path> = Vec::new();
    for p in monos {
        if !kept.iter().any(|k| p.contains(k)) {
            kept.push(p);
        }
    }
    let mut out: Vec<Relation> = Vec::new();
    let mut extra_monos = Vec::new();
    for terms in combos {
        let mut merged: Vec<(Q, Path)> = Vec::new();
        for (c, p) in terms {
            if kept.iter().any(|k| p.contains(k)) {
                continue;
            }
            match merged.iter_mut().find(|(_, q)| *q == p) {
                Some(slot) => slot.0 = &slot.0 + &c,
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        match merged.len() {
            0 => {}
            1 => extra_monos.push(merged.pop().unwrap().1),
            _ => out.push(Relation::Combination(merged)),
        }
    }
    if !extra_monos.is_empty() {
        let mut all: Vec<Relation> = kept.into_iter().map(Relation::Monomial).collect();
        all.extend(extra_monos.into_iter().map(Relation::Monomial));
        all.extend(out);
        return reduce_relations(all);
    }
    let mut res: Vec<Relation> = kept.into_iter().map(Relation::Monomial).collect();
    res.extend(out);
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> AlgebraPresentation {
        family("A1", &FamilyParams::default()).unwrap()
    }

    #[test]
    fn a1_basis_has_nine_paths() {
        let b = a1().path_basis().unwrap();
        assert_eq!(b.len(), 9);
        assert_eq!(b.paths.iter().filter(|p| p.len() == 2).count(), 2);
    }

    #[test]
    fn loop_with_square_zero() {
        let p = AlgebraPresentation::build("x", &["1"], &[("x", "1", "1")], &["x*x"]).unwrap();
        assert_eq!(p.dimension().unwrap(), 2);
    }

    #[test]
    fn kronecker_with_loop_is_infinite() {
        let p = AlgebraPresentation::build("k", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2"), ("x", "1", "1")], &[])
            .unwrap();
        assert!(matches!(p.path_basis(), Err(Error::InfiniteDimensional(_))));
    }

    #[test]
    fn relations_are_reduced() {
        let p = AlgebraPresentation::build("x", &["1"], &[("x", "1", "1")], &["x*x*x", "x*x", "x*x"]).unwrap();
        assert_eq!(p.relations.len(), 1);
    }

    #[test]
    fn opposite_is_involution() {
        let p = family("A2", &FamilyParams::default()).unwrap();
        assert_eq!(p.opposite().opposite(), p);
    }

    #[test]
    fn quotient_of_a2_at_one_and_three() {
        let p = family("A2", &FamilyParams::default()).unwrap();
        let s = [p.quiver.vertex("1").unwrap(), p.quiver.vertex("3").unwrap()];
        let q = p.quotient_by_vertices(&s).unwrap();
        assert_eq!((q.vertex_count(), q.arrow_count()), (1, 0));
        assert!(p.quotient_by_vertices(&[]).is_err());
        assert!(p.quotient_by_vertices(&[0, 1, 2]).is_err());
    }

    #[test]
    fn glue_two_points() {
        let k = family("field", &FamilyParams::default()).unwrap();
        let g = k.glue("1", &k, "1").unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (2, 1));
        assert!(iso_presentations(&g, &family("linear", &FamilyParams { n: Some(2), ..Default::default() }).unwrap()).is_some());
    }

    #[test]
    fn blocks_split_components() {
        let b = family("B", &FamilyParams { l: Some(3), ..Default::default() }).unwrap();
        let q = b.quotient_by_vertices(&[0, 1]).unwrap();
        let blocks = q.blocks();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().all(|x| x.vertex_count() == 1));
        assert_eq!(a1().blocks().len(), 1);
    }

    #[test]
    fn natural_order() {
        let mut v = vec!["10", "2", "-1", "1'", "1", "x"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(v, vec!["-1", "1", "1'", "2", "10", "x"]);
    }
}
