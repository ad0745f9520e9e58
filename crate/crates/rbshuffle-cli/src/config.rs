//! Session configuration: everything the flags control, resolved once.

use rbshuffle::{Context, DeltaCase, Generator, KernelError, Mode, ProductKind, Rational, SamplePolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductTag {
    Sh,
    Qsh,
    Rsh,
    Lsh,
}

impl ProductTag {
    pub fn parse(s: &str) -> Option<ProductTag> {
        Some(match s {
            "sh" => ProductTag::Sh,
            "qsh" => ProductTag::Qsh,
            "rsh" => ProductTag::Rsh,
            "lsh" => ProductTag::Lsh,
            _ => return None,
        })
    }

    pub fn kind(self, theta: &Rational) -> ProductKind {
        match self {
            ProductTag::Sh => ProductKind::Shuffle,
            ProductTag::Qsh => ProductKind::Quasi(theta.clone()),
            ProductTag::Rsh => ProductKind::RightShift,
            ProductTag::Lsh => ProductKind::LeftShift,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleTag {
    Primitive,
    Grouplike,
}

/// One `--gens` entry: `NAME`, `NAME:prim`, `NAME:grp`, `NAME~PARTNER`, or a
/// combination like `v~w:prim`.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub name: String,
    pub partner: Option<String>,
    pub rule: Option<RuleTag>,
}

pub fn parse_gens(spec: &str) -> Result<Vec<GenSpec>, String> {
    let mut out = Vec::new();
    for entry in spec.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            return Err(format!("empty generator entry in `{spec}`"));
        }
        let (head, rule) = match entry.split_once(':') {
            Some((head, "prim")) => (head, Some(RuleTag::Primitive)),
            Some((head, "grp")) => (head, Some(RuleTag::Grouplike)),
            Some((_, tag)) => {
                return Err(format!("unknown coproduct tag `:{tag}` (use :prim or :grp)"))
            }
            None => (entry, None),
        };
        let (name, partner) = match head.split_once('~') {
            Some((name, partner)) => (name, Some(partner.to_string())),
            None => (head, None),
        };
        out.push(GenSpec { name: name.to_string(), partner, rule });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub mode: Mode,
    pub gens: Vec<GenSpec>,
    pub product: Option<ProductTag>,
    pub theta: Rational,
    pub case: DeltaCase,
    pub max_len: usize,
    pub order: usize,
    pub seed: u64,
    pub format: OutputFormat,
}

impl SessionConfig {
    pub fn context(&self) -> Result<Context, KernelError> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut gen = Generator::new(&g.name);
                if let Some(p) = &g.partner {
                    gen = gen.paired_with(p);
                }
                match g.rule {
                    Some(RuleTag::Primitive) => gen = gen.primitive(),
                    Some(RuleTag::Grouplike) => gen = gen.grouplike(),
                    None => {}
                }
                gen
            })
            .collect();
        Context::new(self.mode, gens)
    }

    pub fn names(&self) -> Vec<&str> {
        self.gens.iter().map(|g| g.name.as_str()).collect()
    }

    /// The product the expression layer uses where one is needed (`bsh`, the
    /// tridendriform operations, the case-1 counit): the `--product` choice,
    /// defaulting to the weight-theta quasi-shuffle.
    pub fn session_kind(&self) -> ProductKind {
        self.product.unwrap_or(ProductTag::Qsh).kind(&self.theta)
    }

    /// Set only when `--product` was given explicitly; suites replace their
    /// canonical ambient with it.
    pub fn override_kind(&self) -> Option<ProductKind> {
        self.product.map(|t| t.kind(&self.theta))
    }

    pub fn policy(&self) -> SamplePolicy {
        SamplePolicy {
            exhaustive_len: self.max_len.min(3),
            random_len: self.max_len,
            random_cases: 200,
            seed: self.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_entries() {
        let gens = parse_gens("a,b").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].name, "a");
        assert!(gens[0].partner.is_none() && gens[0].rule.is_none());

        let gens = parse_gens("h:prim, g:grp, v~w").unwrap();
        assert_eq!(gens[0].rule, Some(RuleTag::Primitive));
        assert_eq!(gens[1].rule, Some(RuleTag::Grouplike));
        assert_eq!(gens[2].partner.as_deref(), Some("w"));

        assert!(parse_gens("a,").is_err());
        assert!(parse_gens("a:weird").is_err());
    }
}
