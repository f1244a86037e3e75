//! Named algebras with their standard vertex numbering.

use super::AlgebraPresentation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub l: Option<usize>,
    pub p: Option<usize>,
    pub r: Option<usize>,
    pub n: Option<usize>,
    /// Block sizes for the glued family.
    pub ls: Vec<usize>,
}

impl FamilyParams {
    pub fn l(l: usize) -> Self {
        FamilyParams { l: Some(l), ..Default::default() }
    }

    pub fn p(p: usize) -> Self {
        FamilyParams { p: Some(p), ..Default::default() }
    }

    pub fn pr(p: usize, r: usize) -> Self {
        FamilyParams { p: Some(p), r: Some(r), ..Default::default() }
    }

    pub fn n(n: usize) -> Self {
        FamilyParams { n: Some(n), ..Default::default() }
    }

    pub fn ls(ls: &[usize]) -> Self {
        FamilyParams { ls: ls.to_vec(), ..Default::default() }
    }
}

fn need(v: Option<usize>, name: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Params(format!("family {family} needs parameter {name}")))
}

struct Spec {
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<String>,
}

impl Spec {
    fn new(n: usize) -> Spec {
        Spec { vertices: (1..=n).map(|i| i.to_string()).collect(), arrows: Vec::new(), relations: Vec::new() }
    }

    fn arrow(&mut self, name: impl ToString, s: usize, t: usize) {
        self.arrows.push((name.to_string(), s.to_string(), t.to_string()));
    }

    fn rel(&mut self, r: impl ToString) {
        self.relations.push(r.to_string());
    }

    fn build(self, label: &str) -> Result<AlgebraPresentation> {
        let v: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let a: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|(x, y, z)| (x.as_str(), y.as_str(), z.as_str())).collect();
        let r: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        AlgebraPresentation::build(label, &v, &a, &r)
    }
}

/// `A(p)`: a,b: 1→2, a: 2→3, b: 2→p+2, a chain 3→…→p+2, relations a², b².
fn a_p(p: usize) -> Result<AlgebraPresentation> {
    if p == 0 {
        return Err(Error::Params("A(p) needs p >= 1".into()));
    }
    let mut s = Spec::new(p + 2);
    s.arrow("a1", 1, 2);
    s.arrow("b1", 1, 2);
    s.arrow("a2", 2, 3);
    s.arrow("b2", 2, p + 2);
    for i in 3..p + 2 {
        s.arrow(format!("c{i}"), i, i + 1);
    }
    s.rel("a2*a1");
    s.rel("b2*b1");
    s.build(&if p == 1 { "A1".to_string() } else { format!("A({p})") })
}

/// `B(p,r)`: beta, gamma: p+2→1 and alpha_i: p+2-i → p+3-i.
fn b_pr(p: usize, r: usize) -> Result<AlgebraPresentation> {
    if r > p {
        return Err(Error::Params(format!("B(p,r) needs r in [0,p], got p={p}, r={r}")));
    }
    let mut s = Spec::new(p + 2);
    s.arrow("beta", p + 2, 1);
    s.arrow("gamma", p + 2, 1);
    for i in 1..=p + 1 {
        s.arrow(format!("alpha{i}"), p + 2 - i, p + 3 - i);
    }
    s.rel(format!("alpha{}*beta", p + 1));
    s.rel("gamma*alpha1");
    for i in 1..=r {
        s.rel(format!("alpha{i}*alpha{}", i + 1));
    }
    let label = match (p, r) {
        (1, 0) => "A2'".to_string(),
        (1, 1) => "A2".to_string(),
        _ => format!("B({p},{r})"),
    };
    s.build(&label)
}

/// `B_l`: a,b: 1→2, b_i: 2→i, a_i: i→1 for 3 ≤ i ≤ l+2, every b after an a is zero.
fn b_l(l: usize) -> Result<AlgebraPresentation> {
    if l == 0 {
        return Err(Error::Params("B_l needs l >= 1".into()));
    }
    let mut s = Spec::new(l + 2);
    s.arrow("a", 1, 2);
    s.arrow("b", 1, 2);
    for i in 3..=l + 2 {
        s.arrow(format!("b{i}"), 2, i);
        s.arrow(format!("a{i}"), i, 1);
    }
    for i in 3..=l + 2 {
        s.rel(format!("b{i}*a"));
        s.rel(format!("b*a{i}"));
    }
    s.build(&format!("B{l}"))
}

/// `G_l`: a,b: 1→2, c_i: 2→1, relations b c_i and c_j a.
fn g_l(l: usize) -> Result<AlgebraPresentation> {
    if l == 0 {
        return Err(Error::Params("G_l needs l >= 1".into()));
    }
    let mut s = Spec::new(2);
    s.arrow("a", 1, 2);
    s.arrow("b", 1, 2);
    for i in 3..=l + 2 {
        s.arrow(format!("c{i}"), 2, 1);
    }
    for i in 3..=l + 2 {
        s.rel(format!("b*c{i}"));
        s.rel(format!("c{i}*a"));
    }
    s.build(&format!("G{l}"))
}

fn glued(ls: &[usize]) -> Result<AlgebraPresentation> {
    let Some((&last, rest)) = ls.split_last() else {
        return Err(Error::Params("glued family needs at least one block".into()));
    };
    let mut acc = b_l(last)?;
    for &l in rest.iter().rev() {
        acc = b_l(l)?.glue("2", &acc, "1")?;
    }
    let names: Vec<String> = ls.iter().map(ToString::to_string).collect();
    Ok(acc.with_label(format!("B({})", names.join(","))))
}

/// Builds a named algebra.
///
/// Names: `A1`, `A2`, `A2p`, `A3`, `kronecker`, `field`, `linear` (n),
/// `B` (l), `G` (l), `Apq` (p), `Bpr` (p, r), `Bglued` (ls).
pub fn family(name: &str, params: &FamilyParams) -> Result<AlgebraPresentation> {
    match name {
        "A1" => a_p(1),
        "A2" => b_pr(1, 1),
        "A2p" | "A2'" => b_pr(1, 0),
        "A3" => AlgebraPresentation::build(
            "A3",
            &["1", "2", "3"],
            &[("c", "1", "2"), ("b", "1", "2"), ("a", "2", "1"), ("d", "2", "3")],
            &["c*a", "a*b", "d*c"],
        ),
        "kronecker" | "K" => AlgebraPresentation::build("K", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]),
        "field" | "k" => AlgebraPresentation::build("k", &["1"], &[], &[]),
        "linear" => {
            let n = need(params.n, "n", name)?;
            if n == 0 {
                return Err(Error::Params("linear quiver needs n >= 1".into()));
            }
            let mut s = Spec::new(n);
            for i in 1..n {
                s.arrow(format!("x{i}"), i, i + 1);
            }
            s.build(&format!("L{n}"))
        }
        "B" => b_l(need(params.l, "l", name)?),
        "G" => g_l(need(params.l, "l", name)?),
        "Apq" | "A" => a_p(need(params.p, "p", name)?),
        "Bpr" => b_pr(need(params.p, "p", name)?, need(params.r, "r", name)?),
        "Bglued" => glued(&params.ls),
        other => Err(Error::Params(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::iso_presentations;

    #[test]
    fn family_identities() {
        let a2p = family("A2p", &FamilyParams::default()).unwrap();
        assert!(iso_presentations(&family("B", &FamilyParams::l(1)).unwrap(), &a2p).is_some());
        assert!(iso_presentations(&family("Bpr", &FamilyParams::pr(1, 1)).unwrap(), &family("A2", &FamilyParams::default()).unwrap()).is_some());
        assert!(iso_presentations(&family("Apq", &FamilyParams::p(1)).unwrap(), &family("A1", &FamilyParams::default()).unwrap()).is_some());
    }

    #[test]
    fn relation_counts() {
        for p in 1..6 {
            assert_eq!(family("Apq", &FamilyParams::p(p)).unwrap().relations.len(), 2);
            assert_eq!(family("Apq", &FamilyParams::p(p)).unwrap().arrow_count(), p + 3);
            for r in 0..=p {
                assert_eq!(family("Bpr", &FamilyParams::pr(p, r)).unwrap().relations.len(), r + 2);
            }
        }
        assert!(family("Bpr", &FamilyParams::pr(1, 2)).is_err());
    }

    #[test]
    fn glued_counts() {
        let g = family("Bglued", &FamilyParams::ls(&[3, 2, 4])).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (15, 26));
    }

    #[test]
    fn b_l_is_finite_dimensional() {
        for l in 1..5 {
            let b = family("B", &FamilyParams::l(l)).unwrap();
            let basis = b.path_basis().unwrap();
            assert!(basis.paths.iter().all(|p| p.len() <= 4));
        }
    }
}
