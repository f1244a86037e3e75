use crate::input::{load_spec, module, module_sum, source, vertex_list, AlgArgs};
use crate::{reproduce, CliError, Command, Output};
use clap::{Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use strata_core::forms::{cartan_matrix, congruent_by, euler_matrix, symmetrized_rank, IntMatrix};
use strata_core::gentle::{ag_invariant, check_gentle, enumerate_gentle, gentle_gldim_finite, EnumOptions};
use strata_core::linrep::{ext_dim, gldim, hom_dim, min_resolution, monomial_gldim, Resolution};
use strata_core::repetitive::{
    omega_power, search_counterexample, stable_hom_dim, tau, MarginPolicy, Window as RepWindow,
};
use strata_core::strings::{all_strings, graph_map_basis, overlap_extension, parse_word, string_module};
use strata_core::structure::{
    compare_reports, composition_series, corner_presentation, derived_invariant_report, graded_end_table,
    is_exceptional, is_exceptional_sequence, k0_unimodular, qh_orders, recollement_check, standard_modules,
    SeriesConfig,
};
use strata_core::{Algebra, AlgebraPresentation};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GldimMethod {
    /// Projective dimensions of the simples.
    Resolution,
    /// Combinatorial count for monomial algebras.
    Monomial,
    /// Finiteness only, from full relation cycles of a gentle algebra.
    Gentle,
}

#[derive(Subcommand, Debug)]
pub enum StringsCommand {
    /// All strings up to a length.
    List {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Graph maps between two string modules.
    Hom {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// `dim Ext¹(M(to), M(from))` and the overlaps that realize it.
    Ext {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Extensions `0 → M(from) → M(m1) ⊕ M(m2) → M(to) → 0` from overlaps.
    Extend {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct WindowArgs {
    #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 12, allow_hyphen_values = true)]
    pub hi: i64,
    #[arg(long, default_value_t = 4)]
    pub omega_margin: i64,
    #[arg(long, default_value_t = 8)]
    pub tau_margin: i64,
    #[arg(long, default_value_t = 4)]
    pub stable_margin: i64,
}

impl WindowArgs {
    fn window(&self) -> Result<RepWindow, CliError> {
        let margins = MarginPolicy { omega: self.omega_margin, tau: self.tau_margin, stable_hom: self.stable_margin };
        Ok(RepWindow::with_margins(self.lo, self.hi, margins)?)
    }
}

#[derive(Subcommand, Debug)]
pub enum RepetitiveCommand {
    /// Ω^s of a string module; negative powers give cosyzygies.
    Omega {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
    },
    /// Iterated Auslander–Reiten translate.
    Tau {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Dimension of the stable Hom space.
    Stablehom {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Search for a string completing T₁ to a two-cycle.
    Search {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        shifts: i64,
    },
}

fn out(payload: Value, text: String, inputs: Vec<String>) -> Output {
    Output { payload, text, inputs }
}

fn matrix_text(m: &IntMatrix) -> String {
    let width = m.0.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    m.0.iter()
        .map(|r| r.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn names(p: &AlgebraPresentation, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| p.vertex_name(v).to_string()).collect()
}

/// `0 → P1 → P3 → P2 → M`, longest term first.
fn resolution_text(p: &AlgebraPresentation, r: &Resolution, target: &str) -> String {
    let term = |mult: &[usize]| {
        let parts: Vec<String> = mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, &m)| if m == 1 { format!("P{}", p.vertex_name(v)) } else { format!("P{}^{m}", p.vertex_name(v)) })
            .collect();
        if parts.is_empty() { "0".to_string() } else { parts.join("⊕") }
    };
    let mut chain: Vec<String> = r.multiplicities().iter().rev().map(|m| term(m)).collect();
    if r.complete {
        chain.insert(0, "0".into());
    } else {
        chain.insert(0, "...".into());
    }
    chain.push(target.to_string());
    chain.join(" → ")
}

fn multiplicities_json(p: &AlgebraPresentation, r: &Resolution) -> Value {
    let terms: Vec<Value> = r
        .multiplicities()
        .iter()
        .map(|m| {
            let map: BTreeMap<String, usize> =
                m.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, &k)| (p.vertex_name(v).to_string(), k)).collect();
            json!(map)
        })
        .collect();
    json!({ "terms": terms, "complete": r.complete, "length": r.length() })
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Parse(a) => {
            let p = a.load()?;
            let s = source(&p);
            Ok(out(json!({ "label": p.label, "source": s }), s.clone(), vec![s]))
        }
        Command::Info(a) => {
            let p = a.load()?;
            let rels: Vec<String> = p.relations.iter().map(|r| r.written(&p.quiver)).collect();
            let payload = json!({
                "label": p.label,
                "vertices": p.vertex_count(),
                "arrows": p.arrow_count(),
                "relations": rels,
                "dimension": p.dimension()?,
                "monomial": p.is_monomial(),
                "gentle": check_gentle(&p).is_none(),
                "connected": p.is_connected(),
            });
            let text = format!(
                "{}: {} vertices, {} arrows, {} relations, dimension {}, monomial {}, gentle {}, connected {}\n",
                p.label,
                p.vertex_count(),
                p.arrow_count(),
                rels.len(),
                payload["dimension"],
                p.is_monomial(),
                payload["gentle"],
                p.is_connected()
            );
            Ok(out(payload, text, vec![source(&p)]))
        }
        Command::GentleCheck(a) => {
            let p = a.load()?;
            let v = check_gentle(&p).map(|v| v.to_string());
            let text = match &v {
                None => "gentle\n".to_string(),
                Some(v) => format!("not gentle: {v}\n"),
            };
            Ok(out(json!({ "gentle": v.is_none(), "violation": v }), text, vec![source(&p)]))
        }
        Command::Cartan(a) => {
            let p = a.load()?;
            let c = cartan_matrix(&p)?;
            Ok(out(json!({ "cartan": c.0 }), matrix_text(&c), vec![source(&p)]))
        }
        Command::Euler(a) => {
            let p = a.load()?;
            let e = euler_matrix(&p)?;
            Ok(out(json!({ "euler": e.0 }), matrix_text(&e), vec![source(&p)]))
        }
        Command::Rank(a) => {
            let p = a.load()?;
            let r = symmetrized_rank(&p)?;
            Ok(out(json!({ "symmetrized_rank": r }), format!("{r}\n"), vec![source(&p)]))
        }
        Command::Congruence { alg, other, b } => {
            let (p1, p2) = (alg.load()?, load_spec(other)?);
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(b).map_err(|e| CliError::Usage(format!("--b is not an integer matrix: {e}")))?;
            let (e1, e2, b) = (euler_matrix(&p1)?, euler_matrix(&p2)?, IntMatrix(rows));
            let ok = congruent_by(&e1, &e2, &b)?;
            let payload = json!({ "left": e1.0, "right": e2.0, "b": b.0, "congruent": ok });
            Ok(out(payload, format!("{ok}\n"), vec![source(&p1), source(&p2)]))
        }
        Command::Ag(a) => {
            let p = a.load()?;
            let ag = ag_invariant(&p)?;
            Ok(out(json!({ "ag": ag.to_string(), "pairs": ag.0 }), format!("{ag}\n"), vec![source(&p)]))
        }
        Command::Gldim { alg, cutoff, method } => {
            let p = alg.load()?;
            let (value, text) = match method {
                GldimMethod::Resolution => {
                    let g = gldim(&Algebra::new(p.clone()), *cutoff)?;
                    (json!(g), g.to_string())
                }
                GldimMethod::Monomial => match monomial_gldim(&p)? {
                    Some(g) => (json!(g), g.to_string()),
                    None => (json!("infinite"), "infinite".to_string()),
                },
                GldimMethod::Gentle => {
                    let f = gentle_gldim_finite(&p)?;
                    let s = if f { "finite" } else { "infinite" };
                    (json!(s), s.to_string())
                }
            };
            Ok(out(json!({ "gldim": value }), text + "\n", vec![source(&p)]))
        }
        Command::Resolve { alg, module: specs, cutoff } => {
            let p = alg.load()?;
            let a = Algebra::new(p.clone());
            let specs: Vec<String> = if specs.is_empty() {
                (0..p.vertex_count()).map(|v| format!("S{}", p.vertex_name(v))).collect()
            } else {
                specs.clone()
            };
            let mut payload = serde_json::Map::new();
            let mut text = String::new();
            for s in &specs {
                let r = min_resolution(&module(&a, s)?, *cutoff)?;
                payload.insert(s.clone(), multiplicities_json(&p, &r));
                let _ = writeln!(text, "{}", resolution_text(&p, &r, s));
            }
            Ok(out(Value::Object(payload), text, vec![source(&p)]))
        }
        Command::Qh { alg, limit } => {
            let p = alg.load()?;
            let orders = qh_orders(&p, *limit)?;
            let listed: Vec<Vec<String>> = orders.iter().map(|c| c.names(&p)).collect();
            let mut text = format!("quasi-hereditary: {}\n", !orders.is_empty());
            for o in &listed {
                let _ = writeln!(text, "  {}", o.join(" > "));
            }
            Ok(out(json!({ "quasi_hereditary": !orders.is_empty(), "chains": listed }), text, vec![source(&p)]))
        }
        Command::Standard { alg, order } => {
            let p = alg.load()?;
            let weights = if order.is_empty() {
                let chain = qh_orders(&p, 1)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| CliError::Usage("no quasi-hereditary order; pass --order".into()))?;
                chain.weight_order()
            } else {
                order.iter().map(|n| p.quiver.vertex(n)).collect::<Result<Vec<_>, _>>()?
            };
            let a = Algebra::new(p.clone());
            let deltas = standard_modules(&a, &weights)?;
            let mut text = String::new();
            let mut rows = serde_json::Map::new();
            for (v, d) in deltas.iter().enumerate() {
                let _ = writeln!(text, "Δ({}) dims {:?}", p.vertex_name(v), d.dims);
                rows.insert(p.vertex_name(v).to_string(), json!(d.dims));
            }
            Ok(out(json!({ "order": names(&p, &weights), "standard": rows }), text, vec![source(&p)]))
        }
        Command::Exceptional { alg, module: specs, degrees } => {
            let p = alg.load()?;
            let a = Algebra::new(p.clone());
            let seq = specs.iter().map(|s| module(&a, s)).collect::<Result<Vec<_>, _>>()?;
            let each = seq.iter().map(is_exceptional).collect::<Result<Vec<_>, _>>()?;
            let sequence = is_exceptional_sequence(&seq)?;
            let table = graded_end_table(&module_sum(&a, specs)?, 0..*degrees)?;
            let payload = json!({
                "modules": specs,
                "exceptional": each,
                "exceptional_sequence": sequence,
                "k0_unimodular": k0_unimodular(&seq),
                "graded_end": table,
            });
            let text = format!(
                "exceptional sequence: {sequence}\nexceptional terms: {each:?}\nK0 unimodular: {}\ngraded End of the sum: {table:?}\n",
                k0_unimodular(&seq)
            );
            Ok(out(payload, text, vec![source(&p)]))
        }
        Command::Corner { alg, subset } => {
            let p = alg.load()?;
            let c = corner_presentation(&p, &vertex_list(&p, subset)?)?;
            let s = source(&c);
            Ok(out(json!({ "label": c.label, "source": s }), s, vec![source(&p)]))
        }
        Command::Quotient { alg, subset } => {
            let p = alg.load()?;
            let c = p.quotient_by_vertices(&vertex_list(&p, subset)?)?;
            let s = source(&c);
            Ok(out(json!({ "label": c.label, "source": s }), s, vec![source(&p)]))
        }
        Command::Glue { alg, other, at, to } => {
            let (p1, p2) = (alg.load()?, load_spec(other)?);
            let g = p1.glue(at, &p2, to)?;
            let s = source(&g);
            Ok(out(json!({ "label": g.label, "source": s }), s, vec![source(&p1), source(&p2)]))
        }
        Command::Recollement { alg, subset } => {
            let p = alg.load()?;
            let r = recollement_check(&p, &vertex_list(&p, subset)?)?;
            let payload = json!({
                "corner_gldim_finite": r.corner_gldim_finite,
                "quotient_embeds": r.quotient_embeds,
                "shortcut": r.shortcut,
                "accepted": r.accepted(),
            });
            let text = format!(
                "accepted: {}\ncorner gldim finite: {}\nTor vanishing: {}\nprojective ideal: {}\n",
                r.accepted(),
                r.corner_gldim_finite,
                r.quotient_embeds,
                r.shortcut
            );
            Ok(out(payload, text, vec![source(&p)]))
        }
        Command::Series { alg, max_depth } => {
            let p = alg.load()?;
            let trees = composition_series(&p, SeriesConfig { max_depth: *max_depth })?;
            let mut rendered: Vec<(usize, String)> = trees.iter().map(|t| (t.length(), t.to_string())).collect();
            rendered.sort();
            let lengths: std::collections::BTreeSet<usize> = rendered.iter().map(|(l, _)| *l).collect();
            let mut text = format!("{} series, lengths {:?}\n", rendered.len(), lengths);
            for (l, t) in &rendered {
                let _ = writeln!(text, "  {l}  {t}");
            }
            let list: Vec<Value> = rendered.iter().map(|(l, t)| json!({ "length": l, "tree": t })).collect();
            Ok(out(json!({ "series": list, "lengths": lengths }), text, vec![source(&p)]))
        }
        Command::Report(a) => {
            let p = a.load()?;
            let r = derived_invariant_report(&p)?;
            let payload = json!({
                "label": r.label,
                "vertices": r.vertices,
                "arrows": r.arrows,
                "cartan": r.cartan.0,
                "euler": r.euler.as_ref().map(|e| e.0.clone()),
                "cartan_det": r.cartan_det,
                "coxeter_poly": r.coxeter_poly,
                "symmetrized_rank": r.symmetrized_rank,
                "ag": r.ag.as_ref().map(ToString::to_string),
                "gldim": r.gldim,
            });
            let mut text = String::new();
            for (k, v) in payload.as_object().expect("object") {
                let _ = writeln!(text, "{k}: {v}");
            }
            Ok(out(payload, text, vec![source(&p)]))
        }
        Command::Compare { alg, other } => {
            let (p1, p2) = (alg.load()?, load_spec(other)?);
            let rows = compare_reports(&derived_invariant_report(&p1)?, &derived_invariant_report(&p2)?);
            let mut text = String::new();
            let mut list = Vec::new();
            for r in &rows {
                let mark = if r.separates() { "separates" } else if r.equal { "equal" } else { "differs" };
                let _ = writeln!(text, "{:<18} {:<10} {} | {}", r.field, mark, r.left, r.right);
                list.push(json!({
                    "field": r.field,
                    "derived_invariant": r.derived_invariant,
                    "left": r.left,
                    "right": r.right,
                    "equal": r.equal,
                }));
            }
            let separated = rows.iter().any(|r| r.separates());
            let _ = writeln!(text, "separated: {separated}");
            Ok(out(json!({ "fields": list, "separated": separated }), text, vec![source(&p1), source(&p2)]))
        }
        Command::Strings(s) => strings(s),
        Command::Repetitive(r) => repetitive(r),
        Command::Enumerate { vertices, arrows, disconnected, loops, infinite_gldim } => {
            let opts = EnumOptions { connected: !disconnected, no_loops: !loops, finite_gldim: !infinite_gldim };
            let all = enumerate_gentle(*vertices, *arrows, opts)?;
            let mut text = format!("{} classes\n", all.len());
            let mut list = Vec::new();
            for p in &all {
                let rank = symmetrized_rank(&p).ok();
                let ag = ag_invariant(p)?.to_string();
                let _ = writeln!(text, "rank {} ag {}\n{}", rank.map_or("-".into(), |r| r.to_string()), ag, source(p));
                list.push(json!({ "source": source(p), "symmetrized_rank": rank, "ag": ag }));
            }
            Ok(out(json!({ "classes": list }), text, Vec::new()))
        }
        Command::Reproduce { id } => reproduce::run(id),
    }
}

fn strings(cmd: &StringsCommand) -> Result<Output, CliError> {
    match cmd {
        StringsCommand::List { alg, max_len } => {
            let p = alg.load()?;
            let words: Vec<String> = all_strings(&p, *max_len).iter().map(|w| w.display(&p.quiver)).collect();
            let text = words.iter().map(|w| format!("{w}\n")).collect();
            Ok(out(json!({ "strings": words }), text, vec![source(&p)]))
        }
        StringsCommand::Hom { alg, from, to } => {
            let p = alg.load()?;
            let a = Algebra::new(p.clone());
            let (w1, w2) = (parse_word(&p, from)?, parse_word(&p, to)?);
            let maps = graph_map_basis(&p, &w1, &w2);
            let dim = hom_dim(&string_module(&a, &w1)?, &string_module(&a, &w2)?)?;
            let listed: Vec<String> = maps
                .iter()
                .map(|g| {
                    let src = w1.window(&p.quiver, g.source.start, g.source.end).display(&p.quiver);
                    format!("{src} [{}..{}] -> [{}..{}]{}", g.source.start, g.source.end, g.target.start, g.target.end, if g.reversed { " reversed" } else { "" })
                })
                .collect();
            let mut text = format!("graph maps: {}, dim Hom: {dim}\n", maps.len());
            for l in &listed {
                let _ = writeln!(text, "  {l}");
            }
            Ok(out(json!({ "graph_maps": listed, "hom_dim": dim }), text, vec![source(&p)]))
        }
        StringsCommand::Ext { alg, from, to } => {
            let p = alg.load()?;
            let a = Algebra::new(p.clone());
            let (w1, w2) = (parse_word(&p, from)?, parse_word(&p, to)?);
            let dim = ext_dim(&string_module(&a, &w2)?, &string_module(&a, &w1)?, 1)?;
            let overlaps = graph_map_basis(&p, &w1, &w2)
                .into_iter()
                .filter(|g| overlap_extension(&a, &w1, &w2, *g).map(|e| e.nonsplit).unwrap_or(false))
                .count();
            let text = format!("dim Ext1: {dim}, nonsplit overlaps: {overlaps}\n");
            Ok(out(json!({ "ext1": dim, "nonsplit_overlaps": overlaps }), text, vec![source(&p)]))
        }
        StringsCommand::Extend { alg, from, to } => {
            let p = alg.load()?;
            let a = Algebra::new(p.clone());
            let (w1, w2) = (parse_word(&p, from)?, parse_word(&p, to)?);
            let mut list = Vec::new();
            let mut text = String::new();
            for g in graph_map_basis(&p, &w1, &w2) {
                let Ok(e) = overlap_extension(&a, &w1, &w2, g) else { continue };
                let (m1, m2) = (e.m1.display(&p.quiver), e.m2.display(&p.quiver));
                let _ = writeln!(text, "{m1} ⊕ {m2}  exact {} nonsplit {}", e.exact, e.nonsplit);
                list.push(json!({ "m1": m1, "m2": m2, "exact": e.exact, "nonsplit": e.nonsplit }));
            }
            if list.is_empty() {
                text.push_str("no overlap gives an extension\n");
            }
            Ok(out(json!({ "extensions": list }), text, vec![source(&p)]))
        }
    }
}

fn repetitive(cmd: &RepetitiveCommand) -> Result<Output, CliError> {
    match cmd {
        RepetitiveCommand::Omega { win, word, power } => {
            let w = win.window()?;
            let r = omega_power(&w, &w.parse(word)?, *power)?;
            let s = w.show(&r);
            Ok(out(json!({ "result": s }), s + "\n", Vec::new()))
        }
        RepetitiveCommand::Tau { win, word, power } => {
            let w = win.window()?;
            let mut cur = w.parse(word)?;
            for _ in 0..*power {
                cur = tau(&w, &cur)?;
            }
            let s = w.show(&cur);
            Ok(out(json!({ "result": s }), s + "\n", Vec::new()))
        }
        RepetitiveCommand::Stablehom { win, from, to } => {
            let w = win.window()?;
            let (m, n) = (w.module(&w.parse(from)?)?, w.module(&w.parse(to)?)?);
            let d = stable_hom_dim(&w, &m, &n)?;
            Ok(out(json!({ "stable_hom_dim": d }), format!("{d}\n"), Vec::new()))
        }
        RepetitiveCommand::Search { win, max_len, shifts } => {
            let w = win.window()?;
            let r = search_counterexample(&w, *max_len, *shifts)?;
            let mut hist: BTreeMap<String, usize> = BTreeMap::new();
            for o in &r.outcomes {
                let key = match &o.failed {
                    None => "survivor".to_string(),
                    Some(c) => c.to_string(),
                };
                *hist.entry(key).or_default() += 1;
            }
            let survivors = r.survivors();
            let mut text = format!(
                "window {}..{}, region {}..{}, max_len {}, shifts {}\ncandidates {}, survivors {}\n",
                r.window.0, r.window.1, r.region.0, r.region.1, r.max_len, r.shifts, r.candidates(), survivors.len()
            );
            for (k, v) in &hist {
                let _ = writeln!(text, "  {v:>7}  {k}");
            }
            let payload = json!({
                "window": [r.window.0, r.window.1],
                "region": [r.region.0, r.region.1],
                "max_len": r.max_len,
                "shifts": r.shifts,
                "candidates": r.candidates(),
                "survivors": survivors,
                "first_failure": hist,
            });
            Ok(out(payload, text, Vec::new()))
        }
    }
}
