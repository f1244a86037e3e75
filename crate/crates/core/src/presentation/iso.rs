//! Isomorphism of monomial presentations by backtracking over quiver isomorphisms.

use super::{AlgebraPresentation, Path};
use std::collections::{BTreeMap, HashSet};

/// Vertex and arrow bijections from the first presentation to the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

struct Shape {
    n: usize,
    /// `mult[u][v]` = number of arrows u→v.
    mult: Vec<Vec<usize>>,
    sig: Vec<(usize, usize, usize)>,
    parallel: BTreeMap<(usize, usize), Vec<usize>>,
}

fn shape(p: &AlgebraPresentation) -> Shape {
    let n = p.vertex_count();
    let mut mult = vec![vec![0; n]; n];
    let mut parallel: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, a) in p.quiver.arrows.iter().enumerate() {
        mult[a.source][a.target] += 1;
        parallel.entry((a.source, a.target)).or_default().push(i);
    }
    let sig = (0..n)
        .map(|v| (p.quiver.out_degree(v), p.quiver.in_degree(v), mult[v][v]))
        .collect();
    Shape { n, mult, sig, parallel }
}

/// Some isomorphism carrying the relations of `p1` onto those of `p2`, if one exists.
///
/// Both presentations must be monomial; `None` is returned otherwise.
pub fn iso_presentations(p1: &AlgebraPresentation, p2: &AlgebraPresentation) -> Option<Isomorphism> {
    if !p1.is_monomial() || !p2.is_monomial() {
        return None;
    }
    if p1.vertex_count() != p2.vertex_count()
        || p1.arrow_count() != p2.arrow_count()
        || p1.relations.len() != p2.relations.len()
    {
        return None;
    }
    let (s1, s2) = (shape(p1), shape(p2));
    let mut sigs1 = s1.sig.clone();
    let mut sigs2 = s2.sig.clone();
    sigs1.sort();
    sigs2.sort();
    if sigs1 != sigs2 {
        return None;
    }
    let mut rel_lengths1: Vec<usize> = p1.monomial_relations().iter().map(|r| r.len()).collect();
    let mut rel_lengths2: Vec<usize> = p2.monomial_relations().iter().map(|r| r.len()).collect();
    rel_lengths1.sort();
    rel_lengths2.sort();
    if rel_lengths1 != rel_lengths2 {
        return None;
    }
    let order = search_order(&s1);
    let target: HashSet<Vec<usize>> = p2.monomial_relations().iter().map(|r| r.arrows.clone()).collect();
    let mut vmap = vec![usize::MAX; s1.n];
    let mut used = vec![false; s1.n];
    let mut result = None;
    assign_vertices(0, &order, &s1, &s2, &mut vmap, &mut used, &mut |vmap| {
        let found = assign_arrows(p1, &s1, &s2, vmap, &target);
        if let Some(amap) = found {
            result = Some(Isomorphism { vertex_map: vmap.to_vec(), arrow_map: amap });
            true
        } else {
            false
        }
    });
    result
}

/// Vertices in breadth-first order so each new vertex is adjacent to an assigned one.
fn search_order(s: &Shape) -> Vec<usize> {
    let mut order = Vec::new();
    let mut seen = vec![false; s.n];
    for start in 0..s.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in 0..s.n {
                if !seen[v] && (s.mult[u][v] > 0 || s.mult[v][u] > 0) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

fn assign_vertices(
    k: usize,
    order: &[usize],
    s1: &Shape,
    s2: &Shape,
    vmap: &mut Vec<usize>,
    used: &mut Vec<bool>,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == order.len() {
        return done(vmap);
    }
    let u = order[k];
    for cand in 0..s2.n {
        if used[cand] || s1.sig[u] != s2.sig[cand] {
            continue;
        }
        let consistent = order[..k].iter().all(|&w| {
            let x = vmap[w];
            s1.mult[u][w] == s2.mult[cand][x] && s1.mult[w][u] == s2.mult[x][cand]
        });
        if !consistent {
            continue;
        }
        vmap[u] = cand;
        used[cand] = true;
        if assign_vertices(k + 1, order, s1, s2, vmap, used, done) {
            return true;
        }
        used[cand] = false;
        vmap[u] = usize::MAX;
    }
    false
}

fn assign_arrows(
    p1: &AlgebraPresentation,
    s1: &Shape,
    s2: &Shape,
    vmap: &[usize],
    target: &HashSet<Vec<usize>>,
) -> Option<Vec<usize>> {
    let groups: Vec<(Vec<usize>, Vec<usize>)> = s1
        .parallel
        .iter()
        .map(|(&(u, v), arrows)| (arrows.clone(), s2.parallel[&(vmap[u], vmap[v])].clone()))
        .collect();
    let rels: Vec<&Path> = p1.monomial_relations();
    let mut amap = vec![usize::MAX; p1.arrow_count()];
    fn rec(
        g: usize,
        groups: &[(Vec<usize>, Vec<usize>)],
        amap: &mut Vec<usize>,
        rels: &[&Path],
        target: &HashSet<Vec<usize>>,
    ) -> bool {
        if g == groups.len() {
            return rels.iter().all(|r| target.contains(&r.arrows.iter().map(|&a| amap[a]).collect::<Vec<_>>()));
        }
        let (src, dst) = &groups[g];
        let mut perm: Vec<usize> = (0..dst.len()).collect();
        loop {
            for (i, &a) in src.iter().enumerate() {
                amap[a] = dst[perm[i]];
            }
            // Prune: relations whose arrows are all assigned must map onto relations.
            let ok = rels.iter().all(|r| {
                if r.arrows.iter().any(|&a| amap[a] == usize::MAX) {
                    return true;
                }
                target.contains(&r.arrows.iter().map(|&a| amap[a]).collect::<Vec<_>>())
            });
            if ok && rec(g + 1, groups, amap, rels, target) {
                return true;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        for &a in src {
            amap[a] = usize::MAX;
        }
        false
    }
    rec(0, &groups, &mut amap, &rels, target).then_some(amap)
}

fn next_permutation(p: &mut [usize]) -> bool {
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
