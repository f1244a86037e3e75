//! Algebra and module arguments.

use crate::CliError;
use clap::Args;
use std::path::PathBuf;
use std::sync::Arc;
use strata_core::linrep::{direct_sum, injective, projective, simple};
use strata_core::presentation::serialize;
use strata_core::strings::{parse_word, string_module};
use strata_core::{family, parse_presentation, Algebra, AlgebraPresentation, FamilyParams, Rep};

#[derive(Args, Clone, Debug, Default)]
pub struct AlgArgs {
    /// Presentation in the text format.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Named family: A1 A2 A2p A3 kronecker field linear B G Apq Bpr Bglued.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub l: Option<usize>,
    /// For Apq and Bpr this selects A(p+1) and B(p+1,r).
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Block sizes for Bglued, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ls: Vec<usize>,
}

impl AlgArgs {
    pub fn load(&self) -> Result<AlgebraPresentation, CliError> {
        match (&self.file, &self.family) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                Ok(parse_presentation(&text)?)
            }
            (None, Some(name)) => {
                let shifted = matches!(name.as_str(), "Apq" | "A" | "Bpr");
                let params = FamilyParams {
                    l: self.l,
                    p: if shifted { self.p.map(|p| p + 1) } else { self.p },
                    r: self.r,
                    n: self.n,
                    ls: self.ls.clone(),
                };
                Ok(family(name, &params)?)
            }
            (None, None) => Err(CliError::Usage("an algebra is required: pass --file or --family".into())),
        }
    }
}

/// A second algebra written `NAME` or `NAME:key=value,...` or `@path`.
pub fn load_spec(spec: &str) -> Result<AlgebraPresentation, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let args = AlgArgs { file: Some(PathBuf::from(path)), ..Default::default() };
        return args.load();
    }
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut args = AlgArgs { family: Some(name.to_string()), ..Default::default() };
    for kv in rest.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| CliError::Usage(format!("expected key=value in `{kv}`")))?;
        let num = |v: &str| v.parse::<usize>().map_err(|_| CliError::Usage(format!("`{v}` is not a number")));
        match k {
            "l" => args.l = Some(num(v)?),
            "p" => args.p = Some(num(v)?),
            "r" => args.r = Some(num(v)?),
            "n" => args.n = Some(num(v)?),
            "ls" => args.ls = v.split('.').map(num).collect::<Result<_, _>>()?,
            _ => return Err(CliError::Usage(format!("unknown parameter `{k}`"))),
        }
    }
    args.load()
}

pub fn vertex_list(p: &AlgebraPresentation, names: &[String]) -> Result<Vec<usize>, CliError> {
    let mut out = names.iter().map(|n| p.quiver.vertex(n)).collect::<Result<Vec<_>, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `S<v>`, `P<v>`, `I<v>` or `str:<word>`.
pub fn module(alg: &Arc<Algebra>, spec: &str) -> Result<Rep, CliError> {
    if let Some(word) = spec.strip_prefix("str:") {
        let w = parse_word(&alg.pres, word)?;
        return Ok(string_module(alg, &w)?);
    }
    let mut chars = spec.chars();
    let kind = chars.next().ok_or_else(|| CliError::Usage("empty module spec".into()))?;
    let v = alg.pres.quiver.vertex(chars.as_str())?;
    match kind {
        'S' => Ok(simple(alg, v)),
        'P' => Ok(projective(alg, v)?),
        'I' => Ok(injective(alg, v)?),
        _ => Err(CliError::Usage(format!("module spec `{spec}` should start with S, P, I or str:"))),
    }
}

pub fn module_sum(alg: &Arc<Algebra>, specs: &[String]) -> Result<Rep, CliError> {
    let parts = specs.iter().map(|s| module(alg, s)).collect::<Result<Vec<_>, _>>()?;
    Ok(direct_sum(&parts.iter().collect::<Vec<_>>())?)
}

pub fn source(p: &AlgebraPresentation) -> String {
    serialize(p)
}
