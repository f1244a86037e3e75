//! Gentle algebras: recognition, threads, the AG invariant and enumeration.
//!
//! Composition is written right to left, so `βα ∈ I` means the path that
//! applies `α` first and then `β` is a relation.

use crate::error::{Error, Result};
use crate::presentation::{iso_presentations, AlgebraPresentation, Arrow, Path, Quiver, Relation};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// The first gentle condition that fails, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// More than two arrows into or out of a vertex.
    G1 { vertex: String },
    /// A relation that is not a path of length two, or an infinite-dimensional quotient.
    G2 { witness: String },
    /// An arrow with two zero continuations on one side.
    G3 { arrow: String },
    /// An arrow with two nonzero continuations on one side.
    G4 { arrow: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::G1 { vertex } => write!(f, "G1 fails at vertex {vertex}"),
            Violation::G2 { witness } => write!(f, "G2 fails: {witness}"),
            Violation::G3 { arrow } => write!(f, "G3 fails at arrow {arrow}"),
            Violation::G4 { arrow } => write!(f, "G4 fails at arrow {arrow}"),
        }
    }
}

/// Pairs `(first, second)` of arrows with `second * first` a relation.
fn zero_pairs(p: &AlgebraPresentation) -> HashSet<(usize, usize)> {
    p.monomial_relations().iter().filter(|r| r.len() == 2).map(|r| (r.arrows[0], r.arrows[1])).collect()
}

/// Returns the first violated condition, or `None` for a gentle presentation.
pub fn check_gentle(p: &AlgebraPresentation) -> Option<Violation> {
    let q = &p.quiver;
    for v in 0..q.vertex_count() {
        if q.in_degree(v) > 2 || q.out_degree(v) > 2 {
            return Some(Violation::G1 { vertex: q.vertices[v].clone() });
        }
    }
    for r in &p.relations {
        match r {
            Relation::Combination(_) => return Some(Violation::G2 { witness: r.written(q) }),
            Relation::Monomial(path) if path.len() != 2 => return Some(Violation::G2 { witness: r.written(q) }),
            _ => {}
        }
    }
    let zero = zero_pairs(p);
    for (b, arrow) in q.arrows.iter().enumerate() {
        let after: Vec<usize> = q.arrows_from(arrow.target).collect();
        let before: Vec<usize> = q.arrows_into(arrow.source).collect();
        let zero_after = after.iter().filter(|&&a| zero.contains(&(b, a))).count();
        let zero_before = before.iter().filter(|&&c| zero.contains(&(c, b))).count();
        if zero_after > 1 || zero_before > 1 {
            return Some(Violation::G3 { arrow: arrow.name.clone() });
        }
        if after.len() - zero_after > 1 || before.len() - zero_before > 1 {
            return Some(Violation::G4 { arrow: arrow.name.clone() });
        }
    }
    if let Err(e) = p.path_basis() {
        return Some(Violation::G2 { witness: e.to_string() });
    }
    None
}

pub fn is_gentle(p: &AlgebraPresentation) -> bool {
    check_gentle(p).is_none()
}

fn require_gentle(p: &AlgebraPresentation) -> Result<()> {
    match check_gentle(p) {
        None => Ok(()),
        Some(v) => Err(Error::Recognition(v.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThreadKind {
    Permitted,
    Forbidden,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub kind: ThreadKind,
    pub body: Path,
    pub sigma: i8,
    pub epsilon: i8,
}

impl Thread {
    pub fn start(&self) -> usize {
        self.body.source
    }

    pub fn end(&self) -> usize {
        self.body.target
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.body.is_trivial()
    }
}

/// Signs on arrow ends.
///
/// Constraints at each vertex: arrows leaving it have opposite `sigma`
/// (S1), arrows entering it have opposite `epsilon` (S2), and for
/// composable `α` then `β` we have `sigma(β) = -epsilon(α)` when `βα ∉ I`
/// (S3) and `sigma(β) = epsilon(α)` when `βα ∈ I` (S4). Only ends at the
/// same vertex interact, so each vertex is solved on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideAssignment {
    pub sigma: Vec<i8>,
    pub epsilon: Vec<i8>,
}

impl SideAssignment {
    pub fn new(p: &AlgebraPresentation) -> Result<SideAssignment> {
        let q = &p.quiver;
        let zero = zero_pairs(p);
        let n = q.arrow_count();
        // Variables: sigma(a) = a, epsilon(a) = n + a.
        let mut val: Vec<i8> = vec![0; 2 * n];
        for v in 0..q.vertex_count() {
            let outs: Vec<usize> = q.arrows_from(v).collect();
            let ins: Vec<usize> = q.arrows_into(v).collect();
            // (x, y, same) constraints among this vertex's ends.
            let mut cons: Vec<(usize, usize, bool)> = Vec::new();
            for w in outs.windows(2) {
                cons.push((w[0], w[1], false));
            }
            for w in ins.windows(2) {
                cons.push((n + w[0], n + w[1], false));
            }
            for &a in &ins {
                for &b in &outs {
                    cons.push((b, n + a, zero.contains(&(a, b))));
                }
            }
            let ends: Vec<usize> = outs.iter().copied().chain(ins.iter().map(|&a| n + a)).collect();
            for &start in &ends {
                if val[start] != 0 {
                    continue;
                }
                val[start] = 1;
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for &(a, b, same) in &cons {
                        let other = if a == x {
                            b
                        } else if b == x {
                            a
                        } else {
                            continue;
                        };
                        let want = if same { val[x] } else { -val[x] };
                        if val[other] == 0 {
                            val[other] = want;
                            stack.push(other);
                        } else if val[other] != want {
                            return Err(Error::SideAssignment(format!("inconsistent signs at vertex {}", q.vertices[v])));
                        }
                    }
                }
            }
        }
        Ok(SideAssignment { sigma: val[..n].to_vec(), epsilon: val[n..].to_vec() })
    }

    /// Every constraint holds.
    pub fn verify(&self, p: &AlgebraPresentation) -> bool {
        let q = &p.quiver;
        let zero = zero_pairs(p);
        (0..q.vertex_count()).all(|v| {
            let outs: Vec<usize> = q.arrows_from(v).collect();
            let ins: Vec<usize> = q.arrows_into(v).collect();
            outs.windows(2).all(|w| self.sigma[w[0]] == -self.sigma[w[1]])
                && ins.windows(2).all(|w| self.epsilon[w[0]] == -self.epsilon[w[1]])
                && ins.iter().all(|&a| {
                    outs.iter().all(|&b| {
                        let same = zero.contains(&(a, b));
                        (self.sigma[b] == self.epsilon[a]) == same
                    })
                })
        })
    }
}

/// Follows the unique continuation of each arrow through pairs that are (or are not) relations.
fn successor(p: &AlgebraPresentation, zero: &HashSet<(usize, usize)>, in_relation: bool) -> Vec<Option<usize>> {
    let q = &p.quiver;
    (0..q.arrow_count())
        .map(|a| q.arrows_from(q.arrows[a].target).find(|&b| zero.contains(&(a, b)) == in_relation))
        .collect()
}

/// Maximal paths built from a successor map; arrows on closed cycles are returned separately.
fn maximal_chains(next: &[Option<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = next.len();
    let mut has_pred = vec![false; n];
    for s in next.iter().flatten() {
        has_pred[*s] = true;
    }
    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    for a in 0..n {
        if has_pred[a] {
            continue;
        }
        let mut chain = vec![a];
        seen[a] = true;
        let mut cur = a;
        while let Some(b) = next[cur] {
            chain.push(b);
            seen[b] = true;
            cur = b;
        }
        chains.push(chain);
    }
    let mut cycles = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut cyc = vec![a];
        seen[a] = true;
        let mut cur = next[a].expect("on a cycle");
        while cur != a {
            cyc.push(cur);
            seen[cur] = true;
            cur = next[cur].expect("on a cycle");
        }
        cycles.push(cyc);
    }
    (chains, cycles)
}

fn thread_of(q: &Quiver, kind: ThreadKind, arrows: Vec<usize>, sides: &SideAssignment) -> Thread {
    let sigma = sides.sigma[arrows[0]];
    let epsilon = sides.epsilon[*arrows.last().unwrap()];
    let body = Path::from_arrows(q, arrows).expect("thread is a path");
    Thread { kind, body, sigma, epsilon }
}

/// Trivial threads at `v`; isolated vertices carry two of each kind with opposite signs.
fn trivial_threads(p: &AlgebraPresentation, zero: &HashSet<(usize, usize)>, sides: &SideAssignment, v: usize) -> Vec<Thread> {
    let q = &p.quiver;
    let outs: Vec<usize> = q.arrows_from(v).collect();
    let ins: Vec<usize> = q.arrows_into(v).collect();
    if outs.len() > 1 || ins.len() > 1 {
        return Vec::new();
    }
    let body = Path::trivial(v);
    if outs.is_empty() && ins.is_empty() {
        return vec![
            Thread { kind: ThreadKind::Permitted, body: body.clone(), sigma: 1, epsilon: -1 },
            Thread { kind: ThreadKind::Permitted, body: body.clone(), sigma: -1, epsilon: 1 },
            Thread { kind: ThreadKind::Forbidden, body: body.clone(), sigma: 1, epsilon: 1 },
            Thread { kind: ThreadKind::Forbidden, body, sigma: -1, epsilon: -1 },
        ];
    }
    let related = match (ins.first(), outs.first()) {
        (Some(&a), Some(&b)) => Some(zero.contains(&(a, b))),
        _ => None,
    };
    // A sign read off the incident arrow: -sigma(out) or, failing that, epsilon(in).
    let s = match outs.first() {
        Some(&b) => -sides.sigma[b],
        None => sides.epsilon[ins[0]],
    };
    let mut out = Vec::new();
    if related != Some(true) {
        out.push(Thread { kind: ThreadKind::Permitted, body: body.clone(), sigma: s, epsilon: -s });
    }
    if related != Some(false) {
        let f = match outs.first() {
            Some(&b) => -sides.sigma[b],
            None => -sides.epsilon[ins[0]],
        };
        out.push(Thread { kind: ThreadKind::Forbidden, body, sigma: f, epsilon: f });
    }
    out
}

fn threads(p: &AlgebraPresentation, kind: ThreadKind) -> Result<Vec<Thread>> {
    require_gentle(p)?;
    let sides = SideAssignment::new(p)?;
    let zero = zero_pairs(p);
    let next = successor(p, &zero, kind == ThreadKind::Forbidden);
    let (chains, _) = maximal_chains(&next);
    let mut out: Vec<Thread> = chains.into_iter().map(|c| thread_of(&p.quiver, kind, c, &sides)).collect();
    for v in 0..p.vertex_count() {
        out.extend(trivial_threads(p, &zero, &sides, v).into_iter().filter(|t| t.kind == kind));
    }
    Ok(out)
}

pub fn permitted_threads(p: &AlgebraPresentation) -> Result<Vec<Thread>> {
    threads(p, ThreadKind::Permitted)
}

pub fn forbidden_threads(p: &AlgebraPresentation) -> Result<Vec<Thread>> {
    threads(p, ThreadKind::Forbidden)
}

/// Oriented cycles all of whose consecutive pairs (wraparound included) are
/// relations, one representative per rotation class, starting at its smallest arrow.
pub fn full_relation_cycles(p: &AlgebraPresentation) -> Result<Vec<Path>> {
    require_gentle(p)?;
    let zero = zero_pairs(p);
    let (_, cycles) = maximal_chains(&successor(p, &zero, true));
    Ok(cycles
        .into_iter()
        .map(|mut c| {
            let k = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
            c.rotate_left(k);
            Path::from_arrows(&p.quiver, c).expect("cycle is a path")
        })
        .collect())
}

pub fn gentle_gldim_finite(p: &AlgebraPresentation) -> Result<bool> {
    Ok(full_relation_cycles(p)?.is_empty())
}

/// The AG invariant as a sorted multiset of pairs `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AgInvariant(pub Vec<(usize, usize)>);

impl fmt::Display for AgInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(n, m)| format!("[{n},{m}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn ag_invariant(p: &AlgebraPresentation) -> Result<AgInvariant> {
    let permitted = permitted_threads(p)?;
    let forbidden = forbidden_threads(p)?;
    let mut used_h = vec![false; permitted.len()];
    let mut used_f = vec![false; forbidden.len()];
    let mut pairs = Vec::new();
    while let Some(h0) = used_h.iter().position(|u| !u) {
        let (mut n, mut m) = (0, 0);
        let mut h = h0;
        loop {
            n += 1;
            used_h[h] = true;
            let ht = &permitted[h];
            let pis: Vec<usize> = (0..forbidden.len())
                .filter(|&i| forbidden[i].end() == ht.end() && forbidden[i].epsilon == -ht.epsilon)
                .collect();
            let [pi] = pis[..] else {
                return Err(Error::SideAssignment(format!("{} forbidden continuations after a permitted thread", pis.len())));
            };
            if used_f[pi] {
                return Err(Error::SideAssignment("forbidden thread consumed twice".into()));
            }
            used_f[pi] = true;
            let pt = &forbidden[pi];
            m += pt.len();
            let hs: Vec<usize> = (0..permitted.len())
                .filter(|&i| permitted[i].start() == pt.start() && permitted[i].sigma == -pt.sigma)
                .collect();
            let [next] = hs[..] else {
                return Err(Error::SideAssignment(format!("{} permitted continuations after a forbidden thread", hs.len())));
            };
            if next == h0 {
                break;
            }
            if used_h[next] {
                return Err(Error::SideAssignment("permitted thread consumed twice".into()));
            }
            h = next;
        }
        pairs.push((n, m));
    }
    if used_f.iter().any(|u| !u) {
        return Err(Error::SideAssignment("unused forbidden thread".into()));
    }
    for c in full_relation_cycles(p)? {
        pairs.push((0, c.len()));
    }
    pairs.sort();
    Ok(AgInvariant(pairs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub connected: bool,
    pub no_loops: bool,
    pub finite_gldim: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { connected: true, no_loops: true, finite_gldim: true }
    }
}

pub const MAX_ENUM_VERTICES: usize = 5;
pub const MAX_ENUM_ARROWS: usize = 6;

/// Arrow multiplicities `mult[u][v]`.
type Shape = Vec<Vec<usize>>;

fn canonical_shape(m: &Shape) -> Shape {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Shape> = None;
    loop {
        let c: Shape = (0..n).map(|i| (0..n).map(|j| m[perm[i]][perm[j]]).collect()).collect();
        if best.as_ref().map_or(true, |b| c < *b) {
            best = Some(c);
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn shape_connected(m: &Shape) -> bool {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && (m[u][v] > 0 || m[v][u] > 0) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Quivers with the given counts up to isomorphism, respecting degree bounds.
fn quiver_shapes(nv: usize, na: usize, opts: EnumOptions) -> Vec<Shape> {
    let slots: Vec<(usize, usize)> =
        (0..nv).flat_map(|u| (0..nv).map(move |v| (u, v))).filter(|(u, v)| !opts.no_loops || u != v).collect();
    let mut found = BTreeSet::new();
    let mut m = vec![vec![0; nv]; nv];
    fn rec(
        i: usize,
        left: usize,
        slots: &[(usize, usize)],
        m: &mut Shape,
        opts: EnumOptions,
        found: &mut BTreeSet<Shape>,
    ) {
        if left == 0 {
            if !opts.connected || shape_connected(m) {
                found.insert(canonical_shape(m));
            }
            return;
        }
        if i == slots.len() {
            return;
        }
        let (u, v) = slots[i];
        let nv = m.len();
        for k in (0..=left.min(2)).rev() {
            m[u][v] += k;
            let out_u: usize = (0..nv).map(|w| m[u][w]).sum();
            let in_v: usize = (0..nv).map(|w| m[w][v]).sum();
            if out_u <= 2 && in_v <= 2 {
                rec(i + 1, left - k, slots, m, opts, found);
            }
            m[u][v] -= k;
        }
    }
    rec(0, na, &slots, &mut m, opts, &mut found);
    found.into_iter().collect()
}

fn shape_quiver(m: &Shape) -> Quiver {
    let n = m.len();
    let mut arrows = Vec::new();
    for u in 0..n {
        for v in 0..n {
            for _ in 0..m[u][v] {
                arrows.push(Arrow { name: format!("x{}", arrows.len() + 1), source: u, target: v });
            }
        }
    }
    Quiver { vertices: (1..=n).map(|i| i.to_string()).collect(), arrows }
}

/// Every gentle relation set on a fixed quiver, up to isomorphism.
pub fn gentle_structures(q: &Quiver, finite_gldim: bool) -> Vec<AlgebraPresentation> {
    let pairs: Vec<(usize, usize)> = (0..q.arrow_count())
        .flat_map(|a| q.arrows_from(q.arrows[a].target).map(move |b| (a, b)))
        .collect();
    let n = q.arrow_count();
    let mut out: Vec<AlgebraPresentation> = Vec::new();
    let mut choice = vec![false; pairs.len()];
    // Counts of zero / nonzero continuations after and before each arrow.
    let mut counts = vec![[0usize; 4]; n];
    fn rec(
        i: usize,
        pairs: &[(usize, usize)],
        choice: &mut Vec<bool>,
        counts: &mut Vec<[usize; 4]>,
        q: &Quiver,
        finite_gldim: bool,
        out: &mut Vec<AlgebraPresentation>,
    ) {
        if i == pairs.len() {
            let rels: Vec<Relation> = pairs
                .iter()
                .zip(choice.iter())
                .filter(|(_, &c)| c)
                .map(|(&(a, b), _)| Relation::Monomial(Path::from_arrows(q, vec![a, b]).unwrap()))
                .collect();
            let Ok(p) = AlgebraPresentation::new("gentle", q.clone(), rels) else { return };
            if !is_gentle(&p) {
                return;
            }
            if finite_gldim && !gentle_gldim_finite(&p).unwrap_or(false) {
                return;
            }
            if out.iter().all(|o| iso_presentations(o, &p).is_none()) {
                out.push(p);
            }
            return;
        }
        let (a, b) = pairs[i];
        for zero in [true, false] {
            let k = if zero { 0 } else { 1 };
            counts[a][k] += 1;
            counts[b][2 + k] += 1;
            if counts[a][k] <= 1 && counts[b][2 + k] <= 1 {
                choice[i] = zero;
                rec(i + 1, pairs, choice, counts, q, finite_gldim, out);
            }
            counts[a][k] -= 1;
            counts[b][2 + k] -= 1;
        }
    }
    rec(0, &pairs, &mut choice, &mut counts, q, finite_gldim, &mut out);
    out
}

/// All gentle algebras with the given numbers of vertices and arrows, up to isomorphism.
pub fn enumerate_gentle(nv: usize, na: usize, opts: EnumOptions) -> Result<Vec<AlgebraPresentation>> {
    if nv == 0 || nv > MAX_ENUM_VERTICES || na > MAX_ENUM_ARROWS {
        return Err(Error::Guard(format!(
            "enumeration limited to 1..={MAX_ENUM_VERTICES} vertices and {MAX_ENUM_ARROWS} arrows"
        )));
    }
    let shapes = quiver_shapes(nv, na, opts);
    let per: Vec<Vec<AlgebraPresentation>> =
        shapes.par_iter().map(|s| gentle_structures(&shape_quiver(s), opts.finite_gldim)).collect();
    Ok(per
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(i, p)| p.with_label(format!("G{nv}.{na}.{}", i + 1)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{family, FamilyParams};

    fn fam(name: &str) -> AlgebraPresentation {
        family(name, &FamilyParams::default()).unwrap()
    }

    fn inv(pairs: &[(usize, usize)]) -> AgInvariant {
        AgInvariant(pairs.to_vec())
    }

    #[test]
    fn recognition() {
        for name in ["A1", "A2", "A2p", "A3"] {
            assert!(is_gentle(&fam(name)), "{name}");
        }
        assert!(is_gentle(&family("B", &FamilyParams::l(1)).unwrap()));
        assert!(matches!(check_gentle(&family("B", &FamilyParams::l(2)).unwrap()), Some(Violation::G3 { .. })));
        let three = AlgebraPresentation::build("t", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")], &[])
            .unwrap();
        assert!(matches!(check_gentle(&three), Some(Violation::G1 { .. })));
        let a1 = fam("A1");
        let long = AlgebraPresentation::build(
            "long",
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
            &["c*b*a"],
        )
        .unwrap();
        assert!(matches!(check_gentle(&long), Some(Violation::G2 { .. })));
        assert!(is_gentle(&a1));
        assert!(is_gentle(&fam("kronecker")));
    }

    #[test]
    fn a1_threads() {
        let p = fam("A1");
        let perm: BTreeSet<String> = permitted_threads(&p).unwrap().iter().map(|t| t.body.written(&p.quiver)).collect();
        let forb: BTreeSet<String> = forbidden_threads(&p).unwrap().iter().map(|t| t.body.written(&p.quiver)).collect();
        assert_eq!(perm, ["a2*b1", "b2*a1"].iter().map(|s| s.to_string()).collect());
        assert_eq!(forb, ["a2*a1", "b2*b1"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn a2_threads() {
        let p = fam("A2");
        let perm: BTreeSet<String> = permitted_threads(&p).unwrap().iter().map(|t| t.body.written(&p.quiver)).collect();
        assert_eq!(perm, ["alpha2*gamma", "beta*alpha1"].iter().map(|s| s.to_string()).collect());
        let forb = forbidden_threads(&p).unwrap();
        let mut lens: Vec<usize> = forb.iter().map(Thread::len).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 4]);
        let trivial = forb.iter().find(|t| t.is_trivial()).unwrap();
        assert_eq!(p.vertex_name(trivial.start()), "2");
    }

    #[test]
    fn calibration_anchors() {
        for name in ["A1", "A2", "A2p"] {
            assert_eq!(ag_invariant(&fam(name)).unwrap(), inv(&[(2, 4)]), "{name}");
        }
        assert_eq!(ag_invariant(&fam("field")).unwrap(), inv(&[(2, 0)]));
        let l3 = family("linear", &FamilyParams::n(3)).unwrap();
        assert_eq!(ag_invariant(&l3).unwrap(), inv(&[(4, 2)]));
    }

    #[test]
    fn family_invariants() {
        for p in 0..=5 {
            let expect = inv(&[(p + 2, p + 4)]);
            assert_eq!(ag_invariant(&family("Apq", &FamilyParams::p(p + 1)).unwrap()).unwrap(), expect);
            for r in 0..=p {
                let b = family("Bpr", &FamilyParams::pr(p + 1, r)).unwrap();
                assert_eq!(ag_invariant(&b).unwrap(), expect, "B({},{r})", p + 1);
            }
        }
    }

    #[test]
    fn enumeration_three_four() {
        let all = enumerate_gentle(3, 4, EnumOptions::default()).unwrap();
        for p in &all {
            assert_eq!(ag_invariant(p).unwrap(), inv(&[(2, 4)]), "{}", crate::presentation::serialize(p));
        }
        assert!(all.iter().any(|p| iso_presentations(p, &fam("A1")).is_some()));
        assert!(all.iter().any(|p| iso_presentations(p, &fam("A2")).is_some()));
    }

    #[test]
    fn full_relation_three_cycle() {
        let c = AlgebraPresentation::build(
            "c3",
            &["x", "y", "z"],
            &[("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")],
            &["b*a", "c*b", "a*c"],
        )
        .unwrap();
        assert_eq!(full_relation_cycles(&c).unwrap().len(), 1);
        assert!(!gentle_gldim_finite(&c).unwrap());
        assert!(ag_invariant(&c).unwrap().0.contains(&(0, 3)));
        assert!(gentle_gldim_finite(&fam("A2")).unwrap());
    }

    #[test]
    fn side_assignments_verify() {
        for name in ["A1", "A2", "A2p", "A3"] {
            let p = fam(name);
            assert!(SideAssignment::new(&p).unwrap().verify(&p));
        }
    }

    #[test]
    fn two_cycle_chain_has_no_finite_gentle_structure() {
        let q = AlgebraPresentation::build(
            "z",
            &["1", "2", "3"],
            &[("x", "1", "2"), ("y", "2", "1"), ("u", "2", "3"), ("w", "3", "2")],
            &[],
        )
        .unwrap()
        .quiver;
        assert!(gentle_structures(&q, true).is_empty());
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_gentle(6, 4, EnumOptions::default()), Err(Error::Guard(_))));
    }

    #[test]
    fn canonical_shapes_identify_relabelings() {
        let a = vec![vec![0, 2, 0], vec![0, 0, 1], vec![0, 0, 0]];
        let b = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 2, 0]];
        assert_eq!(canonical_shape(&a), canonical_shape(&b));
    }
}
