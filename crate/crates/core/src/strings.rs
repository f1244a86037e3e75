//! String words, string modules and graph maps over monomial special biserial algebras.
//!
//! A word is a start vertex and letters in walk order. A direct letter walks
//! along its arrow, an inverse letter against it. Printed form:
//! `1 -a> 2 <b- 3` walks along `a: 1→2` and then against `b: 3→2`.

use crate::error::{Error, Result};
use crate::linrep::{direct_sum, iso_modules, Algebra, Matrix, ModuleMap, Rep, Q};
use crate::presentation::{AlgebraPresentation, Path, Quiver};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Letter {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: usize) -> Letter {
        Letter { arrow, inverse: true }
    }

    pub fn flipped(self) -> Letter {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    /// Vertex reached when walking this letter from its start.
    fn from_vertex(self, q: &Quiver) -> usize {
        let a = &q.arrows[self.arrow];
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    fn to_vertex(self, q: &Quiver) -> usize {
        let a = &q.arrows[self.arrow];
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(v: usize) -> StringWord {
        StringWord { start: v, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertex at each of the `len + 1` positions.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        for l in &self.letters {
            out.push(l.to_vertex(q));
        }
        out
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.letters.last().map_or(self.start, |l| l.to_vertex(q))
    }

    pub fn inverse(&self, q: &Quiver) -> StringWord {
        StringWord { start: self.end(q), letters: self.letters.iter().rev().map(|l| l.flipped()).collect() }
    }

    /// The smaller of the word and its inverse.
    pub fn canonical(&self, q: &Quiver) -> StringWord {
        let inv = self.inverse(q);
        if inv.letters < self.letters || (inv.letters == self.letters && inv.start < self.start) {
            inv
        } else {
            self.clone()
        }
    }

    /// Positions `i..=j` as a word of its own.
    pub fn window(&self, q: &Quiver, i: usize, j: usize) -> StringWord {
        StringWord { start: self.vertices(q)[i], letters: self.letters[i..j].to_vec() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = q.vertices[self.start].clone();
        for l in &self.letters {
            let name = &q.arrows[l.arrow].name;
            let next = &q.vertices[l.to_vertex(q)];
            if l.inverse {
                let _ = write!(s, " <{name}- {next}");
            } else {
                let _ = write!(s, " -{name}> {next}");
            }
        }
        s
    }
}

/// Parses `1 -a> 2 <b- 3`; tokens are separated by whitespace.
pub fn parse_word(p: &AlgebraPresentation, text: &str) -> Result<StringWord> {
    let q = &p.quiver;
    let mut tokens = text.split_whitespace();
    let first = tokens.next().ok_or_else(|| Error::InvalidString("empty word".into()))?;
    let start = q.vertex(first)?;
    let mut word = StringWord::trivial(start);
    let mut at = start;
    loop {
        let Some(tok) = tokens.next() else { break };
        let letter = if let Some(name) = tok.strip_prefix('-').and_then(|t| t.strip_suffix('>')) {
            Letter::direct(q.arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?)
        } else if let Some(name) = tok.strip_prefix('<').and_then(|t| t.strip_suffix('-')) {
            Letter::inv(q.arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?)
        } else {
            return Err(Error::InvalidString(format!("expected a letter, found `{tok}`")));
        };
        let next_tok = tokens.next().ok_or_else(|| Error::InvalidString("word ends with a letter".into()))?;
        let next = q.vertex(next_tok)?;
        if letter.from_vertex(q) != at || letter.to_vertex(q) != next {
            return Err(Error::InvalidString(format!("letter `{tok}` does not connect {} to {next_tok}", q.vertices[at])));
        }
        word.letters.push(letter);
        at = next;
    }
    Ok(word)
}

fn run_is_zero(p: &AlgebraPresentation, arrows: Vec<usize>) -> bool {
    let path = Path { source: p.quiver.arrows[arrows[0]].source, target: p.quiver.arrows[*arrows.last().unwrap()].target, arrows };
    p.monomial_relations().iter().any(|r| path.contains(r))
}

/// Walk consistency, no letter next to its own inverse, and no relation inside a run of one direction.
pub fn is_valid_string(p: &AlgebraPresentation, w: &StringWord) -> bool {
    let q = &p.quiver;
    if w.start >= q.vertex_count() || w.letters.iter().any(|l| l.arrow >= q.arrow_count()) {
        return false;
    }
    let mut at = w.start;
    for l in &w.letters {
        if l.from_vertex(q) != at {
            return false;
        }
        at = l.to_vertex(q);
    }
    if w.letters.windows(2).any(|x| x[0].arrow == x[1].arrow && x[0].inverse != x[1].inverse) {
        return false;
    }
    let mut i = 0;
    while i < w.letters.len() {
        let dir = w.letters[i].inverse;
        let mut j = i;
        while j < w.letters.len() && w.letters[j].inverse == dir {
            j += 1;
        }
        if j - i >= 2 {
            let mut arrows: Vec<usize> = w.letters[i..j].iter().map(|l| l.arrow).collect();
            if dir {
                arrows.reverse();
            }
            if run_is_zero(p, arrows) {
                return false;
            }
        }
        i = j;
    }
    true
}

/// Every string up to the given length, one per inverse pair, in canonical form.
pub fn all_strings(p: &AlgebraPresentation, max_len: usize) -> Vec<StringWord> {
    let q = &p.quiver;
    let mut found = BTreeSet::new();
    let mut stack: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::trivial).collect();
    while let Some(w) = stack.pop() {
        found.insert(w.canonical(q));
        if w.len() == max_len {
            continue;
        }
        let at = w.end(q);
        let candidates = q.arrows_from(at).map(Letter::direct).chain(q.arrows_into(at).map(Letter::inv));
        for l in candidates {
            let mut next = w.clone();
            next.letters.push(l);
            if is_valid_string(p, &next) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<StringWord> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Index of each position within its vertex's basis.
fn local_indices(vs: &[usize], n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut counts = vec![0; n];
    let idx = vs
        .iter()
        .map(|&v| {
            counts[v] += 1;
            counts[v] - 1
        })
        .collect();
    (idx, counts)
}

pub fn string_module(alg: &Arc<Algebra>, w: &StringWord) -> Result<Rep> {
    let p = &alg.pres;
    if !is_valid_string(p, w) {
        return Err(Error::InvalidString(format!("{w:?}")));
    }
    let q = &p.quiver;
    let vs = w.vertices(q);
    let (idx, dims) = local_indices(&vs, q.vertex_count());
    let mut mats: Vec<Matrix> = q.arrows.iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (i, l) in w.letters.iter().enumerate() {
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        mats[l.arrow].set(idx[to], idx[from], Q::int(1));
    }
    Rep::new(alg.clone(), dims, mats)
}

/// Positions `start..=end` of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Window {
    pub start: usize,
    pub end: usize,
}

/// Windows whose neighbouring arrows point into the window (submodules).
pub fn substrings(w: &StringWord) -> Vec<Window> {
    windows(w, false)
}

/// Windows whose neighbouring arrows point away from the window (quotients).
pub fn factor_strings(w: &StringWord) -> Vec<Window> {
    windows(w, true)
}

fn windows(w: &StringWord, factor: bool) -> Vec<Window> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..=n {
        // Left neighbour walks into position i: direct means it points in.
        let left_ok = i == 0 || w.letters[i - 1].inverse == factor;
        if !left_ok {
            continue;
        }
        for j in i..=n {
            let right_ok = j == n || w.letters[j].inverse != factor;
            if right_ok {
                out.push(Window { start: i, end: j });
            }
        }
    }
    out
}

/// A graph map: identity from a factor window of the source onto a sub window of the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphMap {
    pub source: Window,
    pub target: Window,
    /// The identification runs against the target's reading direction.
    pub reversed: bool,
}

impl GraphMap {
    pub fn realize(&self, alg: &Arc<Algebra>, w1: &StringWord, w2: &StringWord) -> ModuleMap {
        let q = &alg.pres.quiver;
        let n = q.vertex_count();
        let (v1, v2) = (w1.vertices(q), w2.vertices(q));
        let (i1, d1) = local_indices(&v1, n);
        let (i2, d2) = local_indices(&v2, n);
        let mut comps: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(d2[v], d1[v])).collect();
        let len = self.source.end - self.source.start;
        for k in 0..=len {
            let ps = self.source.start + k;
            let pt = if self.reversed { self.target.end - k } else { self.target.start + k };
            comps[v1[ps]].set(i2[pt], i1[ps], Q::int(1));
        }
        ModuleMap { comps }
    }
}

pub fn graph_map_basis(p: &AlgebraPresentation, w1: &StringWord, w2: &StringWord) -> Vec<GraphMap> {
    let q = &p.quiver;
    let mut out = Vec::new();
    let subs = substrings(w2);
    for f in factor_strings(w1) {
        let fw = w1.window(q, f.start, f.end);
        let finv = fw.inverse(q);
        for &s in &subs {
            if s.end - s.start != f.end - f.start {
                continue;
            }
            let sw = w2.window(q, s.start, s.end);
            if sw == fw {
                out.push(GraphMap { source: f, target: s, reversed: false });
            }
            if sw == finv && !fw.is_trivial() {
                out.push(GraphMap { source: f, target: s, reversed: true });
            }
        }
    }
    out
}

/// Result of gluing two words along a common segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapExtension {
    pub m1: StringWord,
    pub m2: StringWord,
    /// `0 → M(w1) → M(m1) ⊕ M(m2) → M(w2) → 0` checked exact by ranks.
    pub exact: bool,
    /// The middle term is not isomorphic to `M(w1) ⊕ M(w2)`.
    pub nonsplit: bool,
}

/// Builds the extension from `overlap` as a factor window of `w1` and a sub window of `w2`.
///
/// With `w1 = U_l ← M → U_r` and `w2 = F_l → M ← F_r` the middle terms are
/// `U_l ← M ← F_r` and `F_l → M → U_r`.
pub fn overlap_extension(alg: &Arc<Algebra>, w1: &StringWord, w2: &StringWord, overlap: GraphMap) -> Result<OverlapExtension> {
    let p = &alg.pres;
    let q = &p.quiver;
    let bad = |m: &str| Err(Error::InvalidString(m.to_string()));
    if !is_valid_string(p, w1) || !is_valid_string(p, w2) {
        return bad("input word is not a string");
    }
    let (w2, t) = if overlap.reversed {
        let n = w2.len();
        (w2.inverse(q), Window { start: n - overlap.target.end, end: n - overlap.target.start })
    } else {
        (w2.clone(), overlap.target)
    };
    let s = overlap.source;
    if !factor_strings(w1).contains(&s) || !substrings(&w2).contains(&t) {
        return bad("overlap is not a factor window of the first word and a sub window of the second");
    }
    if w1.window(q, s.start, s.end) != w2.window(q, t.start, t.end) {
        return bad("windows carry different words");
    }
    if s.start == 0 && s.end == w1.len() && t.start == 0 && t.end == w2.len() {
        return bad("all flanks are empty");
    }
    let m1 = StringWord { start: w1.start, letters: [&w1.letters[..s.end], &w2.letters[t.end..]].concat() };
    let m2 = StringWord { start: w2.start, letters: [&w2.letters[..t.end], &w1.letters[s.end..]].concat() };
    if !is_valid_string(p, &m1) || !is_valid_string(p, &m2) {
        return bad("glued words are not strings");
    }
    let (r1, r2) = (string_module(alg, w1)?, string_module(alg, &w2)?);
    let (rm1, rm2) = (string_module(alg, &m1)?, string_module(alg, &m2)?);
    let mid = direct_sum(&[&rm1, &rm2])?;
    let n = q.vertex_count();
    let (v1, vw2) = (w1.vertices(q), w2.vertices(q));
    let (vm1, vm2) = (m1.vertices(q), m2.vertices(q));
    let (i1, _) = local_indices(&v1, n);
    let (iw2, _) = local_indices(&vw2, n);
    let (im1, dm1) = local_indices(&vm1, n);
    let (im2, _) = local_indices(&vm2, n);
    let mut f: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(mid.dims[v], r1.dims[v])).collect();
    let mut g: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(r2.dims[v], mid.dims[v])).collect();
    for pos in 0..v1.len() {
        let v = v1[pos];
        if pos <= s.end {
            f[v].set(im1[pos], i1[pos], Q::int(1));
        }
        if pos >= s.start {
            let p2 = pos - s.start + t.start;
            f[v].set(dm1[v] + im2[p2], i1[pos], Q::int(1));
        }
    }
    for pos in 0..vm1.len() {
        if pos >= s.start {
            let pw = if pos <= s.end { pos - s.start + t.start } else { pos - s.end + t.end };
            g[vm1[pos]].set(iw2[pw], im1[pos], Q::int(1));
        }
    }
    for pos in 0..vm2.len() {
        let v = vm2[pos];
        if pos <= t.end {
            g[v].set(iw2[pos], dm1[v] + im2[pos], Q::int(-1));
        }
    }
    let (f, g) = (ModuleMap { comps: f }, ModuleMap { comps: g });
    let exact = f.is_homomorphism(&r1, &mid)
        && g.is_homomorphism(&mid, &r2)
        && f.then(&g).is_zero()
        && f.rank() == r1.total_dim()
        && g.rank() == r2.total_dim()
        && mid.total_dim() == r1.total_dim() + r2.total_dim();
    let nonsplit = !iso_modules(&mid, &direct_sum(&[&r1, &r2])?)?;
    Ok(OverlapExtension { m1, m2, exact, nonsplit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::{hom_dim, hom_space, projective, simple};
    use crate::presentation::{family, FamilyParams};

    fn alg(name: &str) -> Arc<Algebra> {
        Algebra::new(family(name, &FamilyParams::default()).unwrap())
    }

    #[test]
    fn parse_and_print() {
        let a = alg("A1");
        let w = parse_word(&a.pres, "1 -a1> 2 -b2> 3").unwrap();
        assert!(is_valid_string(&a.pres, &w));
        assert_eq!(w.display(&a.pres.quiver), "1 -a1> 2 -b2> 3");
        let inv = w.inverse(&a.pres.quiver);
        assert_eq!(inv.display(&a.pres.quiver), "3 <b2- 2 <a1- 1");
        assert_eq!(parse_word(&a.pres, &inv.display(&a.pres.quiver)).unwrap(), inv);
        assert!(parse_word(&a.pres, "1 -a1> 3").is_err());
        assert!(parse_word(&a.pres, "1 -a1>").is_err());
        assert!(parse_word(&a.pres, "").is_err());
    }

    #[test]
    fn validity() {
        let a = alg("A1");
        assert!(!is_valid_string(&a.pres, &parse_word(&a.pres, "1 -a1> 2 -a2> 3").unwrap()));
        assert!(!is_valid_string(&a.pres, &parse_word(&a.pres, "1 -a1> 2 <a1- 1").unwrap()));
        assert!(is_valid_string(&a.pres, &parse_word(&a.pres, "1 -a1> 2 <b1- 1").unwrap()));
        assert!(!is_valid_string(&a.pres, &parse_word(&a.pres, "3 <a2- 2 <a1- 1").unwrap()));
        let k = alg("field");
        assert_eq!(all_strings(&k.pres, 5).len(), 1);
    }

    #[test]
    fn modules_from_words() {
        let a = alg("A1");
        let t1 = string_module(&a, &parse_word(&a.pres, "1 -a1> 2 -b2> 3").unwrap()).unwrap();
        assert_eq!(t1.dims, vec![1, 1, 1]);
        assert!(iso_modules(&string_module(&a, &StringWord::trivial(1)).unwrap(), &simple(&a, 1)).unwrap());
        let a2 = alg("A2");
        let p2 = string_module(&a2, &parse_word(&a2.pres, "2 -alpha1> 3 -beta> 1").unwrap()).unwrap();
        assert!(iso_modules(&p2, &projective(&a2, 1).unwrap()).unwrap());
    }

    #[test]
    fn windows_of_t1() {
        let a = alg("A1");
        let q = &a.pres.quiver;
        let w = parse_word(&a.pres, "1 -a1> 2 -b2> 3").unwrap();
        let f: Vec<String> = factor_strings(&w).iter().map(|x| w.window(q, x.start, x.end).display(q)).collect();
        assert!(f.contains(&"1".to_string()));
        assert!(f.contains(&"1 -a1> 2".to_string()));
        let full = Window { start: 0, end: 2 };
        assert!(factor_strings(&w).contains(&full) && substrings(&w).contains(&full));
        assert_eq!(substrings(&StringWord::trivial(0)), vec![Window { start: 0, end: 0 }]);
    }

    #[test]
    fn graph_maps_match_hom() {
        for name in ["A1", "A2", "A2p"] {
            let a = alg(name);
            let ws = all_strings(&a.pres, 4);
            for w1 in &ws {
                let m1 = string_module(&a, w1).unwrap();
                for w2 in &ws {
                    let m2 = string_module(&a, w2).unwrap();
                    let maps = graph_map_basis(&a.pres, w1, w2);
                    assert_eq!(maps.len(), hom_dim(&m1, &m2).unwrap());
                    for g in &maps {
                        assert!(g.realize(&a, w1, w2).is_homomorphism(&m1, &m2));
                    }
                }
            }
        }
    }

    #[test]
    fn identity_is_a_graph_map() {
        let a = alg("A2");
        let w = parse_word(&a.pres, "2 -alpha1> 3 -beta> 1").unwrap();
        let m = string_module(&a, &w).unwrap();
        let maps = graph_map_basis(&a.pres, &w, &w);
        let full = Window { start: 0, end: 2 };
        let id = maps.iter().find(|g| g.source == full && g.target == full && !g.reversed).unwrap();
        assert_eq!(id.realize(&a, &w, &w), crate::linrep::ModuleMap::identity(&m));
        assert_eq!(hom_space(&m, &m).unwrap().len(), maps.len());
    }

    #[test]
    fn overlap_over_a1() {
        let a = alg("A1");
        // The overlap is the simple at 2.
        let w1 = parse_word(&a.pres, "2 -a2> 3").unwrap();
        let w2 = parse_word(&a.pres, "1 -a1> 2").unwrap();
        let overlap = GraphMap { source: Window { start: 0, end: 0 }, target: Window { start: 1, end: 1 }, reversed: false };
        let e = overlap_extension(&a, &w1, &w2, overlap);
        // a2 after a1 is a relation, so gluing fails.
        assert!(e.is_err());
        let w1 = parse_word(&a.pres, "2 -b2> 3").unwrap();
        let e = overlap_extension(&a, &w1, &w2, overlap).unwrap();
        assert!(e.exact && e.nonsplit);
        assert_eq!(e.m1.display(&a.pres.quiver), "2");
        assert_eq!(e.m2.display(&a.pres.quiver), "1 -a1> 2 -b2> 3");
    }

    #[test]
    fn empty_flanks_rejected() {
        let a = alg("A1");
        let w = StringWord::trivial(1);
        let overlap = GraphMap { source: Window { start: 0, end: 0 }, target: Window { start: 0, end: 0 }, reversed: false };
        assert!(overlap_extension(&a, &w, &w, overlap).is_err());
    }
}
