//! Parsing of weights, root lists and embedding designations from flags.

use gkrs_core::embed::{build_embedding, EmbeddingSpec};
use gkrs_core::rootdata::{build_root_system, parse_coord, DEFAULT_WEYL_BOUND};
use gkrs_core::{Embedding, Error, Result, RootSystem, Weight};

pub const WEYL_BOUND_VAR: &str = "GKRS_WEYL_BOUND";

/// Named embeddings and the root vectors they expand to.
pub const CATALOG: &[(&str, &str, &[&[i64]])] = &[
    ("A2>A1u1", "A2", &[&[2, -1]]),
    ("B2>A1A1", "B2", &[&[2, -2], &[0, 2]]),
    ("G2>A2", "G2", &[&[-3, 2], &[3, -1]]),
    ("G2>A1A1", "G2", &[&[2, -1], &[0, 1]]),
];

pub fn catalog_entry(name: &str) -> Option<(&'static str, Vec<Vec<i64>>)> {
    CATALOG
        .iter()
        .find(|(n, _, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g, roots)| (*g, roots.iter().map(|r| r.to_vec()).collect()))
}

pub fn weyl_bound() -> Result<usize> {
    match std::env::var(WEYL_BOUND_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{WEYL_BOUND_VAR}={v} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_WEYL_BOUND),
    }
}

pub fn root_system(label: &str) -> Result<RootSystem> {
    Ok(build_root_system(label)?.with_weyl_bound(weyl_bound()?))
}

/// Integer weight such as `1,0` or `(1,0)` or `[1,0]`.
pub fn parse_weight(text: &str) -> Result<Weight> {
    parse_scaled_weight(text, 1)
}

/// Weight with possibly fractional coordinates (`1,-1/2`), returned in units of `1/scale`.
pub fn parse_scaled_weight(text: &str, scale: i64) -> Result<Weight> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if inner.trim().is_empty() {
        return Err(Error::Parse(format!("empty weight `{text}`")));
    }
    inner
        .split(',')
        .map(|c| parse_coord(c.trim(), scale))
        .collect::<Result<Vec<_>>>()
        .map(Weight::new)
}

/// Root lists: `""` (torus), `[2,-1]`, `[2,-2],[0,2]` or `[[2,-2],[0,2]]`.
pub fn parse_roots(text: &str) -> Result<Vec<Vec<i64>>> {
    let t = text.trim();
    if t.is_empty() || t == "[]" {
        return Ok(Vec::new());
    }
    let wrapped = if t.starts_with("[[") {
        t.to_string()
    } else {
        format!("[{t}]")
    };
    serde_json::from_str(&wrapped).map_err(|e| Error::Parse(format!("root list `{text}`: {e}")))
}

/// Where the embedding comes from.
#[derive(Debug, Default, Clone)]
pub struct EmbeddingArgs {
    pub g: Option<String>,
    pub h: Option<String>,
    pub catalog: Option<String>,
    pub embedding: Option<String>,
}

impl EmbeddingArgs {
    /// Resolution order: `--embedding` JSON, explicit `--h` vectors, then a catalog name
    /// (given by `--catalog` or as the value of `--h`).
    pub fn resolve(&self) -> Result<Embedding> {
        if let Some(json) = &self.embedding {
            let spec: EmbeddingSpec = serde_json::from_str(json)
                .map_err(|e| Error::Parse(format!("--embedding: {e}")))?;
            return self.build(&spec.g, &spec.h_roots);
        }
        let explicit = self.h.as_deref().filter(|h| catalog_entry(h).is_none());
        let named = self
            .h
            .as_deref()
            .filter(|h| catalog_entry(h).is_some())
            .or(self.catalog.as_deref());
        if let Some(h) = explicit {
            let g = self.require_g()?;
            return self.build(g, &parse_roots(h)?);
        }
        if let Some(name) = named {
            let (g, roots) = catalog_entry(name)
                .ok_or_else(|| Error::Parse(format!("unknown catalog embedding `{name}`")))?;
            if let Some(given) = &self.g {
                if !given.eq_ignore_ascii_case(g) {
                    return Err(Error::Parse(format!(
                        "catalog embedding `{name}` lives in {g}, not {given}"
                    )));
                }
            }
            return self.build(g, &roots);
        }
        Err(Error::Parse(
            "an embedding is required: pass --h (\"\" for the torus), --catalog or --embedding"
                .into(),
        ))
    }

    pub fn require_g(&self) -> Result<&str> {
        self.g
            .as_deref()
            .ok_or_else(|| Error::Parse("--g is required".into()))
    }

    fn build(&self, g: &str, roots: &[Vec<i64>]) -> Result<Embedding> {
        let rs = root_system(g)?;
        let roots: Vec<Weight> = roots.iter().map(|r| Weight::new(r.clone())).collect();
        build_embedding(&rs, &roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(parse_weight("1,0").unwrap(), Weight::new(vec![1, 0]));
        assert_eq!(parse_weight("(2, -1)").unwrap(), Weight::new(vec![2, -1]));
        assert_eq!(
            parse_scaled_weight("1,-1/2", 2).unwrap(),
            Weight::new(vec![2, -1])
        );
        assert!(parse_weight("1/2").is_err());
        assert!(parse_weight("").is_err());
        assert!(parse_weight("a,b").is_err());
    }

    #[test]
    fn roots() {
        assert!(parse_roots("").unwrap().is_empty());
        assert_eq!(parse_roots("[2,-1]").unwrap(), vec![vec![2, -1]]);
        assert_eq!(
            parse_roots("[2,-2],[0,2]").unwrap(),
            vec![vec![2, -2], vec![0, 2]]
        );
        assert_eq!(
            parse_roots("[[2,-2],[0,2]]").unwrap(),
            vec![vec![2, -2], vec![0, 2]]
        );
        assert!(parse_roots("[2,").is_err());
    }

    #[test]
    fn resolution() {
        let args = EmbeddingArgs {
            g: Some("A2".into()),
            h: Some("[2,-1]".into()),
            catalog: Some("G2>A2".into()),
            ..Default::default()
        };
        assert_eq!(args.resolve().unwrap().ambient().label(), "A2");
        let args = EmbeddingArgs {
            h: Some("B2>A1A1".into()),
            ..Default::default()
        };
        assert_eq!(args.resolve().unwrap().h_simple_roots().len(), 2);
        let args = EmbeddingArgs {
            embedding: Some(r#"{"g":"A1","h_roots":[]}"#.into()),
            ..Default::default()
        };
        assert!(args.resolve().unwrap().is_torus());
        assert!(EmbeddingArgs::default().resolve().is_err());
        let mismatch = EmbeddingArgs {
            g: Some("A2".into()),
            catalog: Some("G2>A2".into()),
            ..Default::default()
        };
        assert!(mismatch.resolve().is_err());
    }
}
