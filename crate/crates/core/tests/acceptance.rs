//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};
use strata_core::forms::{congruent_by, euler_matrix, symmetrized_rank, IntMatrix};
use strata_core::gentle::{
    ag_invariant, enumerate_gentle, gentle_gldim_finite, gentle_structures, AgInvariant, EnumOptions,
};
use strata_core::linrep::{direct_sum, gldim, hom_space, min_resolution, projective, simple};
use strata_core::presentation::iso_presentations;
use strata_core::repetitive::{
    omega, omega_inv, search_counterexample, stable_hom_dim, string_quotient, t1, tau, Window,
};
use strata_core::strings::{all_strings, graph_map_basis, overlap_extension, string_module};
use strata_core::structure::{
    compare_reports, composition_series, corner_presentation, derived_invariant_report, graded_end_table,
    is_exceptional_sequence, is_quasi_hereditary, CompSeriesTree, SeriesConfig,
};
use strata_core::{family, Algebra, AlgebraPresentation, FamilyParams};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Check {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn fam(name: &str) -> AlgebraPresentation {
    family(name, &FamilyParams::default()).unwrap()
}

fn fam_l(name: &str, l: usize) -> AlgebraPresentation {
    family(name, &FamilyParams::l(l)).unwrap()
}

fn im(rows: &[[i64; 3]]) -> IntMatrix {
    IntMatrix(rows.iter().map(|r| r.to_vec()).collect())
}

fn within(start: Instant, limit: Duration) -> Check {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn euler_matrices() -> Check {
    let m1 = im(&[[1, -2, 2], [0, 1, -2], [0, 0, 1]]);
    let m2 = im(&[[0, -1, 1], [1, 1, -1], [-1, 1, 0]]);
    ensure(euler_matrix(&fam("A1")).unwrap() == m1, "E(A1) differs")?;
    ensure(euler_matrix(&fam("A2")).unwrap() == m2, "E(A2) differs")
}

fn congruence() -> Check {
    let m1 = im(&[[1, -2, 2], [0, 1, -2], [0, 0, 1]]);
    let m2 = im(&[[0, -1, 1], [1, 1, -1], [-1, 1, 0]]);
    let b = im(&[[-1, 1, 1], [-1, 0, 2], [0, 0, 1]]);
    ensure(congruent_by(&m1, &m2, &b).unwrap(), "Bᵀ M1 B ≠ M2")
}

fn rank_classification() -> Check {
    let start = Instant::now();
    let all = enumerate_gentle(3, 4, EnumOptions::default()).unwrap();
    let rank_one: Vec<&AlgebraPresentation> = all.iter().filter(|p| symmetrized_rank(p).unwrap() == 1).collect();
    ensure(rank_one.len() == 2, format!("{} rank-1 classes", rank_one.len()))?;
    for name in ["A1", "A2"] {
        ensure(rank_one.iter().any(|p| iso_presentations(p, &fam(name)).is_some()), format!("{name} missing"))?;
    }
    let want = AgInvariant(vec![(2, 4)]);
    ensure(all.iter().all(|p| ag_invariant(p).unwrap() == want), "a class has AG invariant other than [2,4]")?;
    let q = AlgebraPresentation::build(
        "z",
        &["1", "2", "3"],
        &[("x", "1", "2"), ("y", "2", "1"), ("u", "2", "3"), ("w", "3", "2")],
        &[],
    )
    .unwrap()
    .quiver;
    ensure(gentle_structures(&q, true).is_empty(), "1⇄2⇄3 has a valid structure")?;
    within(start, Duration::from_secs(60))
}

fn ag_families() -> Check {
    for p in 0..=5 {
        let want = AgInvariant(vec![(p + 2, p + 4)]);
        let a = family("Apq", &FamilyParams::p(p + 1)).unwrap();
        ensure(ag_invariant(&a).unwrap() == want, format!("A({})", p + 1))?;
        for r in 0..=p {
            let b = family("Bpr", &FamilyParams::pr(p + 1, r)).unwrap();
            ensure(ag_invariant(&b).unwrap() == want, format!("B({},{r})", p + 1))?;
        }
    }
    let c = AlgebraPresentation::build(
        "c3",
        &["x", "y", "z"],
        &[("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")],
        &["b*a", "c*b", "a*c"],
    )
    .unwrap();
    ensure(ag_invariant(&c).unwrap().0.contains(&(0, 3)), "3-cycle lacks [0,3]")
}

fn global_dimensions() -> Check {
    let g = |p: AlgebraPresentation| gldim(&Algebra::new(p), 20).unwrap();
    ensure(g(fam("A2p")) == 2, "gldim A2'")?;
    ensure(g(fam("A1")) == 2, "gldim A1")?;
    for l in 1..=4 {
        ensure(g(fam_l("B", l)) == 2, format!("gldim B{l}"))?;
        ensure(g(fam_l("G", l)) == 3, format!("gldim G{l}"))?;
    }
    let opts = EnumOptions { finite_gldim: false, ..EnumOptions::default() };
    for p in enumerate_gentle(3, 4, opts).unwrap() {
        let by_resolution = gldim(&Algebra::new(p.clone()), 20).is_ok();
        ensure(gentle_gldim_finite(&p).unwrap() == by_resolution, format!("disagreement on {}", p.label))?;
    }
    Ok(())
}

fn resolutions() -> Check {
    for l in 1..=3 {
        let a = Algebra::new(fam_l("B", l));
        let n = l + 2;
        let unit = |v: usize| (0..n).map(|i| usize::from(i == v)).collect::<Vec<_>>();
        let outer: Vec<usize> = (0..n).map(|i| usize::from(i >= 2)).collect();
        let twice_p2: Vec<usize> = (0..n).map(|i| if i == 1 { 2 } else { 0 }).collect();
        let got = |v: usize| min_resolution(&simple(&a, v), 20).unwrap().multiplicities();
        ensure(got(0) == vec![unit(0), twice_p2, outer.clone()], format!("B{l} S1"))?;
        ensure(got(1) == vec![unit(1), outer], format!("B{l} S2"))?;
        for i in 2..n {
            ensure(got(i) == vec![unit(i), unit(0), unit(1)], format!("B{l} S{}", i + 1))?;
        }
    }
    let p = fam("A2");
    let a = Algebra::new(p.clone());
    let v = |s: &str| p.quiver.vertex(s).unwrap();
    let r = min_resolution(&simple(&a, v("2")), 20).unwrap();
    let unit = |x: usize| (0..3).map(|i| usize::from(i == x)).collect::<Vec<_>>();
    ensure(r.multiplicities() == vec![unit(v("2")), unit(v("3")), unit(v("1"))], "A2 S2")
}

fn quasi_heredity() -> Check {
    let start = Instant::now();
    ensure(!is_quasi_hereditary(&fam("A2")).unwrap(), "A2 is quasi-hereditary")?;
    let mut yes = vec![fam("A1"), fam("A2p")];
    yes.extend((1..=4).map(|l| fam_l("B", l)));
    for ls in [&[1, 1][..], &[2, 1], &[1, 1, 1]] {
        yes.push(family("Bglued", &FamilyParams::ls(ls)).unwrap());
    }
    for p in &yes {
        ensure(is_quasi_hereditary(p).unwrap(), format!("{} not quasi-hereditary", p.label))?;
    }
    let mut corpus: Vec<AlgebraPresentation> = ["A1", "A2", "A2p", "A3", "kronecker", "field"].map(fam).to_vec();
    corpus.extend((1..=4).flat_map(|l| [fam_l("B", l), fam_l("G", l)]));
    corpus.extend(enumerate_gentle(3, 4, EnumOptions::default()).unwrap());
    corpus.extend(yes);
    for p in &corpus {
        if gldim(&Algebra::new(p.clone()), 20).is_ok_and(|g| g <= 2) {
            ensure(is_quasi_hereditary(p).unwrap(), format!("{} has gldim <= 2 but is not quasi-hereditary", p.label))?;
        }
    }
    within(start, Duration::from_secs(120))
}

fn corners() -> Check {
    for l in 1..=3 {
        let c = corner_presentation(&fam_l("B", l), &[0, 1]).unwrap();
        ensure(iso_presentations(&c, &fam_l("G", l)).is_some(), format!("corner of B{l} is not G{l}"))?;
    }
    let p = fam("A2");
    let s = [p.quiver.vertex("1").unwrap(), p.quiver.vertex("3").unwrap()];
    let c = corner_presentation(&p, &s).unwrap();
    ensure(iso_presentations(&c, &fam("kronecker")).is_some(), "corner of A2 at {1,3} is not Kronecker")
}

fn factor_multiset(t: &CompSeriesTree, g: &AlgebraPresentation) -> Vec<String> {
    let mut f: Vec<String> = t
        .leaves()
        .iter()
        .map(|l| match l.pres() {
            p if p.vertex_count() == 1 => "k".to_string(),
            p if iso_presentations(p, g).is_some() => "G".to_string(),
            p => p.label.clone(),
        })
        .collect();
    f.sort();
    f
}

fn composition_series_lengths() -> Check {
    let g2 = fam_l("G", 2);
    let b2 = composition_series(&fam_l("B", 2), SeriesConfig::default()).unwrap();
    let has = |len: usize, want: &[&str]| b2.iter().any(|t| t.length() == len && factor_multiset(t, &g2) == want);
    ensure(has(4, &["k", "k", "k", "k"]), "B2 lacks the all-k series")?;
    ensure(has(3, &["G", "k", "k"]), "B2 lacks the {k,k,G2} series")?;
    let a2 = composition_series(&fam("A2"), SeriesConfig::default()).unwrap();
    ensure(a2.iter().any(|t| t.length() == 3 && factor_multiset(t, &g2) == ["k", "k", "k"]), "A2 lacks the all-k series")?;
    for (ls, need) in [(&[1, 1][..], 4), (&[1, 1, 1], 8)] {
        let trees = composition_series(&family("Bglued", &FamilyParams::ls(ls)).unwrap(), SeriesConfig::default()).unwrap();
        let lengths: BTreeSet<usize> = trees.iter().map(CompSeriesTree::length).collect();
        ensure(
            lengths.len() >= need,
            format!("B_{ls:?} realizes {} distinct lengths {lengths:?} across {} series, need {need}", lengths.len(), trees.len()),
        )?;
    }
    Ok(())
}

fn exceptional_data() -> Check {
    let p = fam("A2");
    let a = Algebra::new(p.clone());
    let v = |s: &str| p.quiver.vertex(s).unwrap();
    let s2 = simple(&a, v("2"));
    let p1 = projective(&a, v("1")).unwrap();
    let p3 = projective(&a, v("3")).unwrap();
    ensure(is_exceptional_sequence(&[s2.clone(), p1.clone(), p3]).unwrap(), "(S2,P1,P3) not exceptional")?;
    let table = graded_end_table(&direct_sum(&[&s2, &p1]).unwrap(), 0..4).unwrap();
    ensure(table == [3, 0, 1, 0], format!("graded End {table:?}"))
}

fn repetitive_anchors() -> Check {
    let w = Window::new(-10, 12).unwrap();
    let t = t1(&w).unwrap();
    let show = |x| w.show(&x);
    let want = |s: &str| w.show(&w.parse(s).unwrap());
    ensure(show(omega(&w, &t).unwrap()) == want("2 -a2> 3 -b3> 4"), "Ω T1")?;
    ensure(show(omega_inv(&w, &t).unwrap()) == want("0 -a0> 1 -b1> 2"), "Ω⁻¹ T1")?;
    let once = tau(&w, &t).unwrap();
    ensure(w.show(&once) == want("0 -b0> 1 -a1> 2"), "τ T1")?;
    ensure(show(tau(&w, &once).unwrap()) == want("-1 -a-1> 0 -b0> 1"), "τ² T1")?;
    let m = w.module(&t).unwrap();
    ensure(stable_hom_dim(&w, &m, &m).unwrap() == 1, "stable End T1")
}

fn string_oracle() -> Check {
    let mut algebras: Vec<AlgebraPresentation> = ["A1", "A2", "A2p"].map(fam).to_vec();
    algebras.push(string_quotient(0, 6).unwrap());
    for p in algebras {
        let a = Algebra::new(p.clone());
        let words = all_strings(&p, 6);
        let modules: Vec<_> = words.iter().map(|w| string_module(&a, w).unwrap()).collect();
        for (w1, m1) in words.iter().zip(&modules) {
            for (w2, m2) in words.iter().zip(&modules) {
                let maps = graph_map_basis(&p, w1, w2);
                let dim = hom_space(m1, m2).unwrap().len();
                ensure(maps.len() == dim, format!("{}: {} graph maps vs dim Hom {dim}", p.label, maps.len()))?;
                for g in maps {
                    if let Ok(e) = overlap_extension(&a, w1, w2, g) {
                        ensure(e.exact, format!("{}: inexact extension", p.label))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn counterexample_search() -> Check {
    let start = Instant::now();
    let small = search_counterexample(&Window::new(-8, 12).unwrap(), 16, 4).unwrap();
    let large = search_counterexample(&Window::new(-10, 14).unwrap(), 18, 4).unwrap();
    ensure(small.survivors().is_empty(), format!("survivors {:?}", small.survivors()))?;
    ensure(large.survivors().is_empty(), format!("survivors in the larger window {:?}", large.survivors()))?;
    within(start, Duration::from_secs(600))
}

fn invariant_agreement() -> Check {
    let r = |n: &str| derived_invariant_report(&fam(n)).unwrap();
    let (r1, r2, r3) = (r("A1"), r("A2"), r("A2p"));
    let separating: Vec<&str> = compare_reports(&r1, &r2).iter().filter(|f| f.separates()).map(|f| f.field).collect();
    ensure(separating.is_empty(), format!("A1 and A2 separated by {separating:?}"))?;
    for (x, y, names) in [(&r1, &r3, "A1, A2'"), (&r2, &r3, "A2, A2'")] {
        let by_rank = compare_reports(x, y).iter().any(|f| f.field == "symmetrized_rank" && f.separates());
        ensure(by_rank, format!("{names} not separated by symmetrized rank"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 14] = [
        ("euler matrices", euler_matrices),
        ("congruence", congruence),
        ("rank classification", rank_classification),
        ("AG family check", ag_families),
        ("global dimensions", global_dimensions),
        ("resolutions", resolutions),
        ("quasi-heredity", quasi_heredity),
        ("corners", corners),
        ("composition series", composition_series_lengths),
        ("exceptional data", exceptional_data),
        ("repetitive anchors", repetitive_anchors),
        ("string oracle equivalence", string_oracle),
        ("counterexample certification", counterexample_search),
        ("invariant agreement", invariant_agreement),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} pass  {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
