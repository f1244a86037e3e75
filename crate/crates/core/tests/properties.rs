use proptest::prelude::*;
use std::sync::Arc;
use strata_core::forms::{cartan_matrix, euler_matrix, symmetrized_rank, IntMatrix};
use strata_core::gentle::{
    ag_invariant, enumerate_gentle, forbidden_threads, full_relation_cycles, gentle_gldim_finite, permitted_threads,
    EnumOptions,
};
use strata_core::linrep::{
    euler_pairing, gldim, hom_dim, hom_space, is_projective, iso_modules, left_ideal, min_resolution, projective_cover,
    simple,
};
use strata_core::presentation::{iso_presentations, Arrow, Path, Quiver, Relation};
use strata_core::repetitive::{omega, omega_inv, stable_hom_dim, string_quotient, tau, Window};
use strata_core::strings::{all_strings, graph_map_basis, overlap_extension, string_module, StringWord};
use strata_core::structure::{
    compare_reports, composition_series, corner_presentation, derived_invariant_report, is_quasi_hereditary,
    qh_orders, standard_modules, SeriesConfig,
};
use strata_core::{family, Algebra, AlgebraPresentation, FamilyParams};

fn fam(name: &str) -> AlgebraPresentation {
    family(name, &FamilyParams::default()).unwrap()
}

fn b_l(l: usize) -> AlgebraPresentation {
    family("B", &FamilyParams::l(l)).unwrap()
}

/// Named algebras plus the small members of each family.
fn corpus() -> Vec<AlgebraPresentation> {
    let mut c: Vec<AlgebraPresentation> = ["A1", "A2", "A2p", "A3", "kronecker", "field"].into_iter().map(fam).collect();
    for l in 1..=3 {
        c.push(b_l(l));
        c.push(family("G", &FamilyParams::l(l)).unwrap());
    }
    for p in 1..=3 {
        c.push(family("Apq", &FamilyParams::p(p)).unwrap());
        c.push(family("Bpr", &FamilyParams::pr(p, p - 1)).unwrap());
    }
    c.push(family("linear", &FamilyParams::n(4)).unwrap());
    c.push(family("Bglued", &FamilyParams::ls(&[1, 1])).unwrap());
    c
}

fn finite_gldim(p: &AlgebraPresentation) -> Option<usize> {
    gldim(&Algebra::new(p.clone()), 20).ok()
}

fn enumeration() -> Vec<AlgebraPresentation> {
    enumerate_gentle(3, 4, EnumOptions::default()).unwrap()
}

/// Vertex permutation and arrow renaming of a monomial presentation.
fn relabel(p: &AlgebraPresentation, perm: &[usize], arrow_perm: &[usize]) -> AlgebraPresentation {
    let q = &p.quiver;
    let mut vertices = vec![String::new(); q.vertex_count()];
    for (v, name) in q.vertices.iter().enumerate() {
        vertices[perm[v]] = format!("v{name}");
    }
    let mut arrows = vec![Arrow { name: String::new(), source: 0, target: 0 }; q.arrow_count()];
    for (i, a) in q.arrows.iter().enumerate() {
        arrows[arrow_perm[i]] = Arrow { name: format!("r{}", a.name), source: perm[a.source], target: perm[a.target] };
    }
    let relations = p
        .monomial_relations()
        .iter()
        .map(|r| {
            Relation::Monomial(Path {
                source: perm[r.source],
                target: perm[r.target],
                arrows: r.arrows.iter().map(|&x| arrow_perm[x]).collect(),
            })
        })
        .collect();
    AlgebraPresentation::new("relabeled", Quiver { vertices, arrows }, relations).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

// presentation

#[test]
fn basis_counts_are_cartan_entries() {
    for p in corpus() {
        let basis = p.path_basis().unwrap();
        let c = cartan_matrix(&p).unwrap();
        for i in 0..p.vertex_count() {
            for j in 0..p.vertex_count() {
                assert_eq!(basis.between(i, j).count() as i64, c.0[i][j], "{} ({i},{j})", p.label);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_dimension_counts_avoiding_paths(pick in 0usize..20, mask in 1u32..64) {
        let all = corpus();
        let p = &all[pick % all.len()];
        let n = p.vertex_count();
        let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        prop_assume!(!s.is_empty() && s.len() < n);
        let basis = p.path_basis().unwrap();
        let avoiding = basis.paths.iter().filter(|path| !path.vertex_sequence(&p.quiver).iter().any(|v| s.contains(v))).count();
        prop_assert_eq!(p.quotient_by_vertices(&s).unwrap().dimension().unwrap(), avoiding);
    }

    #[test]
    fn glue_is_associative(a in 0usize..4, b in 0usize..4, c in 0usize..4, va in 0usize..3, vb in 0usize..3, vb2 in 0usize..3, vc in 0usize..3) {
        let pool = ["A1", "A2", "A2p", "kronecker"].map(fam);
        let (pa, pb, pc) = (&pool[a], &pool[b], &pool[c]);
        let (va, vb, vb2, vc) = (va % pa.vertex_count(), vb % pb.vertex_count(), vb2 % pb.vertex_count(), vc % pc.vertex_count());
        let name = |p: &AlgebraPresentation, v: usize| p.quiver.vertices[v].clone();
        let ab = pa.glue(&name(pa, va), pb, &name(pb, vb)).unwrap();
        let left = ab.glue(&name(&ab, pa.vertex_count() + vb2), pc, &name(pc, vc)).unwrap();
        let bc = pb.glue(&name(pb, vb2), pc, &name(pc, vc)).unwrap();
        let right = pa.glue(&name(pa, va), &bc, &name(&bc, vb)).unwrap();
        prop_assert!(iso_presentations(&left, &right).is_some());
    }
}

#[test]
fn opposite_is_an_involution() {
    for p in corpus() {
        assert!(iso_presentations(&p.opposite().opposite(), &p).is_some(), "{}", p.label);
    }
}

// linrep

#[test]
fn euler_pairing_of_simples_is_the_euler_matrix() {
    for p in ["A1", "A2", "A2p"].map(fam).into_iter().chain((1..=3).map(b_l)) {
        let a = Algebra::new(p.clone());
        let e = euler_matrix(&p).unwrap();
        for i in 0..p.vertex_count() {
            for j in 0..p.vertex_count() {
                assert_eq!(euler_pairing(&simple(&a, i), &simple(&a, j), 20).unwrap(), e.0[i][j], "{} ({i},{j})", p.label);
            }
        }
    }
}

#[test]
fn projective_ideals_have_matching_covers() {
    for p in corpus() {
        let a = Algebra::new(p.clone());
        let n = p.vertex_count();
        for mask in 1u32..(1 << n) - 1 {
            let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let ideal = left_ideal(&a, &s).unwrap();
            if is_projective(&ideal).unwrap() {
                let (cover, _) = projective_cover(&ideal).unwrap();
                assert_eq!(cover.rep.dims, ideal.dims, "{} {s:?}", p.label);
            }
        }
    }
}

#[test]
fn resolutions_are_exact_at_every_term() {
    for p in corpus() {
        let a = Algebra::new(p.clone());
        for v in 0..p.vertex_count() {
            let Ok(r) = min_resolution(&simple(&a, v), 8) else { continue };
            for k in 0..r.terms.len() {
                let incoming = r.maps.get(k + 1).map_or(0, |f| f.rank());
                assert_eq!(r.maps[k].rank() + incoming, r.terms[k].rep.total_dim(), "{} S{v} at {k}", p.label);
            }
        }
    }
}

fn small_strings() -> Vec<(Arc<Algebra>, Vec<StringWord>)> {
    ["A1", "A2", "A2p"].map(|n| {
        let a = Algebra::new(fam(n));
        let ws = all_strings(&a.pres, 3);
        (a, ws)
    })
    .to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hom_basis_elements_intertwine(alg in 0usize..3, i in 0usize..200, j in 0usize..200) {
        let all = small_strings();
        let (a, ws) = &all[alg];
        let (m, n) = (string_module(a, &ws[i % ws.len()]).unwrap(), string_module(a, &ws[j % ws.len()]).unwrap());
        for f in hom_space(&m, &n).unwrap() {
            prop_assert!(f.is_homomorphism(&m, &n));
        }
    }

    #[test]
    fn euler_pairing_is_the_bilinear_form(alg in 0usize..3, i in 0usize..200, j in 0usize..200) {
        let all = small_strings();
        let (a, ws) = &all[alg];
        let (m, n) = (string_module(a, &ws[i % ws.len()]).unwrap(), string_module(a, &ws[j % ws.len()]).unwrap());
        let e = euler_matrix(&a.pres).unwrap();
        let dv = |r: &strata_core::Rep| r.dims.iter().map(|&d| d as i64).collect::<Vec<_>>();
        prop_assert_eq!(euler_pairing(&m, &n, 20).unwrap(), e.pair(&dv(&m), &dv(&n)));
    }
}

// forms

#[test]
fn euler_inverts_cartan() {
    for p in corpus().into_iter().chain(enumeration()) {
        if finite_gldim(&p).is_none() {
            continue;
        }
        let e = euler_matrix(&p).unwrap();
        assert_eq!(e.mul(&cartan_matrix(&p).unwrap()), IntMatrix::identity(p.vertex_count()), "{}", p.label);
    }
}

#[test]
fn symmetrized_rank_survives_opposite() {
    for p in enumeration() {
        assert_eq!(symmetrized_rank(&p).unwrap(), symmetrized_rank(&p.opposite()).unwrap());
    }
}

// gentle

#[test]
fn gentle_finiteness_matches_resolutions() {
    let opts = EnumOptions { finite_gldim: false, ..EnumOptions::default() };
    for p in enumerate_gentle(3, 4, opts).unwrap() {
        let by_resolution = gldim(&Algebra::new(p.clone()), 20).is_ok();
        assert_eq!(gentle_gldim_finite(&p).unwrap(), by_resolution, "{}", p.label);
    }
}

#[test]
fn ag_sums_count_threads() {
    let mut pool = enumeration();
    for p in 1..=5 {
        pool.push(family("Apq", &FamilyParams::p(p)).unwrap());
        for r in 0..p {
            pool.push(family("Bpr", &FamilyParams::pr(p, r)).unwrap());
        }
    }
    pool.extend(["A1", "A2", "A2p", "A3"].map(fam));
    for p in pool {
        let ag = ag_invariant(&p).unwrap();
        let n: usize = ag.0.iter().map(|x| x.0).sum();
        let m: usize = ag.0.iter().map(|x| x.1).sum();
        let forbidden: usize = forbidden_threads(&p).unwrap().iter().map(|t| t.len()).sum();
        let cycles: usize = full_relation_cycles(&p).unwrap().iter().map(Path::len).sum();
        assert_eq!(n, permitted_threads(&p).unwrap().len(), "{}", p.label);
        assert_eq!(m, forbidden + cycles, "{}", p.label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ag_is_invariant_under_relabeling(pick in 0usize..64, perm in permutation(3), arrows in permutation(4)) {
        let pool = enumeration();
        let p = &pool[pick % pool.len()];
        prop_assert_eq!(ag_invariant(&relabel(p, &perm, &arrows)).unwrap(), ag_invariant(p).unwrap());
    }
}

// strings

#[test]
fn graph_maps_count_homs_over_the_window_quotient() {
    let p = string_quotient(0, 6).unwrap();
    let a = Algebra::new(p.clone());
    let ws = all_strings(&p, 4);
    let ms: Vec<_> = ws.iter().map(|w| string_module(&a, w).unwrap()).collect();
    for (w1, m1) in ws.iter().zip(&ms) {
        for (w2, m2) in ws.iter().zip(&ms) {
            assert_eq!(graph_map_basis(&p, w1, w2).len(), hom_dim(m1, m2).unwrap());
        }
    }
}

#[test]
fn distinct_words_give_distinct_modules() {
    for name in ["A1", "A2", "A2p"] {
        let a = Algebra::new(fam(name));
        let ws = all_strings(&a.pres, 5);
        let ms: Vec<_> = ws.iter().map(|w| string_module(&a, w).unwrap()).collect();
        for i in 0..ms.len() {
            assert!(ms[i].satisfies_relations());
            for j in i + 1..ms.len() {
                if ms[i].dims == ms[j].dims {
                    assert!(!iso_modules(&ms[i], &ms[j]).unwrap(), "{name}: word {i} and {j}");
                }
            }
        }
    }
}

#[test]
fn extension_dimensions_add_up() {
    for name in ["A1", "A2", "A2p"] {
        let a = Algebra::new(fam(name));
        let ws = all_strings(&a.pres, 4);
        for w1 in &ws {
            for w2 in &ws {
                for g in graph_map_basis(&a.pres, w1, w2) {
                    let Ok(e) = overlap_extension(&a, w1, w2, g) else { continue };
                    let dim = |w: &StringWord| string_module(&a, w).unwrap().total_dim();
                    assert_eq!(dim(&e.m1) + dim(&e.m2), dim(w1) + dim(w2));
                }
            }
        }
    }
}

// repetitive

fn middle_strings(max_len: usize) -> (Window, Vec<StringWord>) {
    let win = Window::new(-14, 18).unwrap();
    let sub = string_quotient(0, 6).unwrap();
    let words: Vec<StringWord> = all_strings(&sub, max_len).iter().map(|w| win.parse(&w.display(&sub.quiver)).unwrap()).collect();
    (win, words)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn omega_and_its_inverse_cancel(i in 0usize..1000) {
        let (win, ws) = middle_strings(4);
        let w = ws[i % ws.len()].clone().canonical(win.quiver());
        prop_assert_eq!(omega_inv(&win, &omega(&win, &w).unwrap()).unwrap(), w.clone());
        prop_assert_eq!(omega(&win, &omega_inv(&win, &w).unwrap()).unwrap(), w);
    }

    #[test]
    fn tau_commutes_with_omega(i in 0usize..1000) {
        let (win, ws) = middle_strings(3);
        let w = &ws[i % ws.len()];
        prop_assert_eq!(tau(&win, &omega(&win, w).unwrap()).unwrap(), omega(&win, &tau(&win, w).unwrap()).unwrap());
    }

    #[test]
    fn stable_hom_is_bounded_by_hom(i in 0usize..1000, j in 0usize..1000) {
        let (win, ws) = middle_strings(4);
        let (m, n) = (win.module(&ws[i % ws.len()]).unwrap(), win.module(&ws[j % ws.len()]).unwrap());
        prop_assert!(stable_hom_dim(&win, &m, &n).unwrap() <= hom_dim(&m, &n).unwrap());
    }

    #[test]
    fn window_enlargement_changes_nothing(i in 0usize..1000, j in 0usize..1000) {
        let (small, ws) = middle_strings(3);
        let big = Window::new(-18, 22).unwrap();
        let (w, v) = (&ws[i % ws.len()], &ws[j % ws.len()]);
        let lift = |x: &StringWord| big.parse(&small.show(x)).unwrap();
        prop_assert_eq!(small.show(&omega(&small, w).unwrap()), big.show(&omega(&big, &lift(w)).unwrap()));
        prop_assert_eq!(small.show(&tau(&small, w).unwrap()), big.show(&tau(&big, &lift(w)).unwrap()));
        let d_small = stable_hom_dim(&small, &small.module(w).unwrap(), &small.module(v).unwrap()).unwrap();
        let d_big = stable_hom_dim(&big, &big.module(&lift(w)).unwrap(), &big.module(&lift(v)).unwrap()).unwrap();
        prop_assert_eq!(d_small, d_big);
    }
}

// structure

#[test]
fn gldim_two_implies_quasi_hereditary() {
    for p in corpus().into_iter().chain(enumeration()) {
        if finite_gldim(&p).is_some_and(|g| g <= 2) {
            assert!(is_quasi_hereditary(&p).unwrap(), "{}", p.label);
        }
    }
}

#[test]
fn standard_modules_have_trivial_endomorphisms() {
    for p in corpus() {
        let a = Algebra::new(p.clone());
        for chain in qh_orders(&p, 4).unwrap() {
            for d in standard_modules(&a, &chain.weight_order()).unwrap() {
                assert_eq!(hom_dim(&d, &d).unwrap(), 1, "{} {:?}", p.label, chain.names(&p));
            }
        }
    }
}

#[test]
fn corner_dimension_is_a_cartan_block_sum() {
    for p in corpus() {
        let c = cartan_matrix(&p).unwrap();
        let n = p.vertex_count();
        for mask in 1u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let Ok(corner) = corner_presentation(&p, &s) else { continue };
            let want: i64 = s.iter().flat_map(|&i| s.iter().map(move |&j| (i, j))).map(|(i, j)| c.0[i][j]).sum();
            assert_eq!(corner.dimension().unwrap() as i64, want, "{} {s:?}", p.label);
        }
    }
}

#[test]
fn b_l_series_contain_both_lengths() {
    for l in 1..=3 {
        let lengths: Vec<usize> = composition_series(&b_l(l), SeriesConfig::default()).unwrap().iter().map(|t| t.length()).collect();
        assert!(lengths.contains(&(l + 2)) && lengths.contains(&(l + 1)), "B{l}: {lengths:?}");
    }
}

#[test]
fn compare_reports_is_symmetric_and_reflexive() {
    let reports: Vec<_> = corpus().iter().map(|p| derived_invariant_report(p).unwrap()).collect();
    for a in &reports {
        assert!(compare_reports(a, a).iter().all(|f| f.equal));
        for b in &reports {
            let (ab, ba) = (compare_reports(a, b), compare_reports(b, a));
            for (x, y) in ab.iter().zip(&ba) {
                assert_eq!((x.field, x.equal, &x.left, &x.right), (y.field, y.equal, &y.right, &y.left));
            }
        }
    }
}
