//! Run configuration: descriptor parsing and the `key = value` config format.
//!
//! Config files hold one `key = value` pair per line or several separated by
//! `;`. `#` starts a comment. Command-line flags override file values.
//!
//! ```text
//! domain = annulus 0 0 0.3 1
//! phi = weierstrass 0.5 12
//! propermap = blaschke 0.5 ; n = 2
//! ```

use std::{fmt, path::PathBuf};

use symprod_core::{
    cauchy::{PhiSpec, DEFAULT_WEIERSTRASS_TERMS},
    geometry::DomainSpec,
    propermap::ProperMapKind,
    C64,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

fn numbers(words: &[&str], what: &str) -> Result<Vec<f64>, ConfigError> {
    words
        .iter()
        .map(|w| w.parse::<f64>().map_err(|_| ConfigError(format!("{what}: `{w}` is not a number"))))
        .collect()
}

fn integer(word: &str, what: &str) -> Result<u32, ConfigError> {
    word.parse().map_err(|_| ConfigError(format!("{what}: `{word}` is not a nonnegative integer")))
}

/// Complex numbers are written `re` or `re,im`.
fn complex(word: &str, what: &str) -> Result<C64, ConfigError> {
    match word.split_once(',') {
        Some((re, im)) => {
            let v = numbers(&[re, im], what)?;
            Ok(C64::new(v[0], v[1]))
        }
        None => Ok(C64::new(numbers(&[word], what)?[0], 0.0)),
    }
}

/// `disc cx cy r`, `ellipse cx cy a b`, `star cx cy r eps m`,
/// `annulus cx cy r_inner r_outer`.
pub fn parse_domain(text: &str) -> Result<DomainSpec, ConfigError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((&kind, args)) = words.split_first() else {
        return err("empty domain descriptor");
    };
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            err(format!("domain `{kind}` takes {k} numbers, got {}", args.len()))
        }
    };
    match kind {
        "disc" => {
            arity(3)?;
            let v = numbers(args, "disc")?;
            Ok(DomainSpec::Disc { center: C64::new(v[0], v[1]), radius: v[2] })
        }
        "ellipse" => {
            arity(4)?;
            let v = numbers(args, "ellipse")?;
            Ok(DomainSpec::Ellipse { center: C64::new(v[0], v[1]), a: v[2], b: v[3] })
        }
        "star" => {
            arity(5)?;
            let v = numbers(&args[..4], "star")?;
            let m = integer(args[4], "star")?;
            Ok(DomainSpec::Star { center: C64::new(v[0], v[1]), radius: v[2], eps: v[3], m })
        }
        "annulus" => {
            arity(4)?;
            let v = numbers(args, "annulus")?;
            Ok(DomainSpec::Annulus { center: C64::new(v[0], v[1]), inner: v[2], outer: v[3] })
        }
        other => err(format!("unknown domain family `{other}`")),
    }
}

/// `monomial m`, `pole re im [order]`, `conj`, `weierstrass alpha [terms]`.
pub fn parse_phi(text: &str) -> Result<PhiSpec, ConfigError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["monomial", m] => Ok(PhiSpec::Monomial(integer(m, "monomial")?)),
        ["pole", re, im] => {
            let v = numbers(&[re, im], "pole")?;
            Ok(PhiSpec::Pole { a: C64::new(v[0], v[1]), order: 1 })
        }
        ["pole", re, im, order] => {
            let v = numbers(&[re, im], "pole")?;
            let order = integer(order, "pole")?;
            if order == 0 {
                return err("pole order must be ≥ 1");
            }
            Ok(PhiSpec::Pole { a: C64::new(v[0], v[1]), order })
        }
        ["conj"] => Ok(PhiSpec::Conj),
        ["weierstrass", alpha] => weierstrass(alpha, DEFAULT_WEIERSTRASS_TERMS),
        ["weierstrass", alpha, terms] => weierstrass(alpha, integer(terms, "weierstrass")?),
        _ => err(format!("cannot parse phi descriptor `{text}`")),
    }
}

fn weierstrass(alpha: &str, terms: u32) -> Result<PhiSpec, ConfigError> {
    let alpha = numbers(&[alpha], "weierstrass")?[0];
    if !(alpha > 0.0 && alpha <= 1.0) {
        return err(format!("weierstrass exponent {alpha} outside (0, 1]"));
    }
    Ok(PhiSpec::Weierstrass { alpha, terms })
}

/// `identity`, `monomial d`, `blaschke a_1 a_2 …` with each zero `re` or
/// `re,im`.
pub fn parse_propermap(text: &str) -> Result<ProperMapKind, ConfigError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["identity"] => Ok(ProperMapKind::Identity),
        ["monomial", d] => match integer(d, "monomial")? {
            0 => err("monomial degree must be ≥ 1"),
            d => Ok(ProperMapKind::Monomial(d)),
        },
        ["blaschke", zeros @ ..] if !zeros.is_empty() => {
            let zeros = zeros.iter().map(|w| complex(w, "blaschke")).collect::<Result<Vec<_>, _>>()?;
            if zeros.iter().any(|a| a.norm() >= 1.0) {
                return err("Blaschke zeros must lie inside the unit disc");
            }
            Ok(ProperMapKind::Blaschke(zeros))
        }
        _ => err(format!("cannot parse proper map descriptor `{text}`")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Transform,
    Identities,
    Components,
    Loja,
    Pv,
    Holder,
    Propermap,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Transform => "transform",
            Command::Identities => "identities",
            Command::Components => "components",
            Command::Loja => "loja",
            Command::Pv => "pv",
            Command::Holder => "holder",
            Command::Propermap => "propermap",
        }
    }

    fn default_nodes(self) -> usize {
        match self {
            Command::Pv => 1 << 14,
            _ => 256,
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Command::Transform => 64,
            Command::Identities => 200,
            Command::Components | Command::Loja => 10_000,
            Command::Pv => 64,
            Command::Holder => 2000,
            Command::Propermap => 1000,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fully resolved settings of one run. Descriptor strings are kept verbatim
/// for the report echo and parsed on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub domain: String,
    pub phi: String,
    pub propermap: String,
    pub n: usize,
    pub nodes: usize,
    pub samples: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub tol_scale: f64,
}

/// Values set by a config file or by flags; unset fields fall through.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub domain: Option<String>,
    pub phi: Option<String>,
    pub propermap: Option<String>,
    pub n: Option<usize>,
    pub nodes: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub tol_scale: Option<f64>,
}

impl Overrides {
    /// Parses the `key = value` format.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut o = Overrides::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for item in line.split(';') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                let Some((key, value)) = item.split_once('=') else {
                    return err(format!("line {}: expected `key = value`, got `{item}`", lineno + 1));
                };
                let (key, value) = (key.trim(), value.trim().to_string());
                let count = |v: &str| {
                    v.parse::<usize>().map_err(|_| ConfigError(format!("line {}: `{key}` needs an integer", lineno + 1)))
                };
                match key {
                    "domain" => o.domain = Some(value),
                    "phi" => o.phi = Some(value),
                    "propermap" => o.propermap = Some(value),
                    "n" => o.n = Some(count(&value)?),
                    "nodes" => o.nodes = Some(count(&value)?),
                    "samples" => o.samples = Some(count(&value)?),
                    "seed" => {
                        o.seed = Some(value.parse().map_err(|_| ConfigError(format!("line {}: bad seed", lineno + 1)))?)
                    }
                    "out" => o.out = Some(PathBuf::from(value)),
                    "tol_scale" | "tol-scale" => {
                        o.tol_scale =
                            Some(value.parse().map_err(|_| ConfigError(format!("line {}: bad tol_scale", lineno + 1)))?)
                    }
                    other => return err(format!("line {}: unknown key `{other}`", lineno + 1)),
                }
            }
        }
        Ok(o)
    }

    /// `self` wins over `base`.
    pub fn over(self, base: Overrides) -> Overrides {
        Overrides {
            domain: self.domain.or(base.domain),
            phi: self.phi.or(base.phi),
            propermap: self.propermap.or(base.propermap),
            n: self.n.or(base.n),
            nodes: self.nodes.or(base.nodes),
            samples: self.samples.or(base.samples),
            seed: self.seed.or(base.seed),
            out: self.out.or(base.out),
            tol_scale: self.tol_scale.or(base.tol_scale),
        }
    }

    /// Fills defaults and validates every descriptor.
    pub fn resolve(self, command: Command) -> Result<RunConfig, ConfigError> {
        let cfg = RunConfig {
            command,
            domain: self.domain.unwrap_or_else(|| "disc 0 0 1".into()),
            phi: self.phi.unwrap_or_else(|| "weierstrass 0.5 12".into()),
            propermap: self.propermap.unwrap_or_else(|| "monomial 2".into()),
            n: self.n.unwrap_or(2),
            nodes: self.nodes.unwrap_or(command.default_nodes()),
            samples: self.samples.unwrap_or(command.default_samples()),
            seed: self.seed.unwrap_or(42),
            out: self.out,
            tol_scale: self.tol_scale.unwrap_or(1.0),
        };
        parse_domain(&cfg.domain)?;
        parse_phi(&cfg.phi)?;
        parse_propermap(&cfg.propermap)?;
        if cfg.n == 0 {
            return err("n must be ≥ 1");
        }
        if cfg.nodes < 4 || !cfg.nodes.is_multiple_of(2) {
            return err(format!("nodes must be even and ≥ 4, got {}", cfg.nodes));
        }
        if !(cfg.tol_scale > 0.0 && cfg.tol_scale.is_finite()) {
            return err("tol_scale must be positive");
        }
        Ok(cfg)
    }
}

impl RunConfig {
    pub fn domain_spec(&self) -> DomainSpec {
        parse_domain(&self.domain).expect("validated at resolve")
    }

    pub fn phi_spec(&self) -> PhiSpec {
        parse_phi(&self.phi).expect("validated at resolve")
    }

    pub fn propermap_kind(&self) -> ProperMapKind {
        parse_propermap(&self.propermap).expect("validated at resolve")
    }

    /// Echo for the report's `meta` block.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::json!({
            "command": self.command.name(),
            "domain": self.domain,
            "phi": self.phi,
            "propermap": self.propermap,
            "n": self.n,
            "nodes": self.nodes,
            "samples": self.samples,
            "seed": self.seed,
            "tol_scale": self.tol_scale,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert_eq!(
            parse_domain("annulus 0 0 0.3 1").unwrap(),
            DomainSpec::Annulus { center: C64::new(0.0, 0.0), inner: 0.3, outer: 1.0 }
        );
        assert!(parse_domain("disc 0 0").is_err());
        assert!(parse_domain("square 0 0 1").is_err());
        assert_eq!(parse_phi("pole 3 0 1").unwrap(), PhiSpec::Pole { a: C64::new(3.0, 0.0), order: 1 });
        assert_eq!(parse_phi("weierstrass 0.5").unwrap(), PhiSpec::Weierstrass { alpha: 0.5, terms: 12 });
        assert!(parse_phi("weierstrass 1.5").is_err());
        assert_eq!(
            parse_propermap("blaschke 0.5 0.1,-0.2").unwrap(),
            ProperMapKind::Blaschke(vec![C64::new(0.5, 0.0), C64::new(0.1, -0.2)])
        );
        assert!(parse_propermap("blaschke 1.2").is_err());
        assert!(parse_propermap("monomial 0").is_err());
    }

    #[test]
    fn config_text() {
        let o = Overrides::parse("# run\npropermap = blaschke 0.5 ; n = 2\nnodes = 128\n").unwrap();
        assert_eq!(o.propermap.as_deref(), Some("blaschke 0.5"));
        assert_eq!(o.n, Some(2));
        let cfg = o.resolve(Command::Propermap).unwrap();
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.nodes, 128);
        assert!(Overrides::parse("nonsense").is_err());
        assert!(Overrides::parse("colour = red").is_err());
        assert!(Overrides::parse("n = two").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = Overrides { n: Some(3), seed: Some(7), ..Default::default() };
        let flags = Overrides { n: Some(4), ..Default::default() };
        let cfg = flags.over(file).resolve(Command::Loja).unwrap();
        assert_eq!((cfg.n, cfg.seed, cfg.samples), (4, 7, 10_000));
    }
}
