//! Argument parsing and validation.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use simac::macdonald::parse_specs;
use simac::rootdata::RootDataError;
use simac::weylchar::BaseSource;
use simac::{CartanType, Coweight, RootSystem, Specialization, Weight, WeylElement};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error(transparent)]
    Root(#[from] RootDataError),
    #[error("malformed vector {0:?}")]
    BadVector(String),
    #[error("--{flag} has {found} entries but {ty} has rank {rank}")]
    Length { flag: &'static str, found: usize, ty: CartanType, rank: usize },
    #[error("--rank {rank} disagrees with --type {ty}")]
    RankConflict { ty: String, rank: usize },
    #[error("missing --type")]
    MissingType,
    #[error("malformed Weyl group word {0:?}")]
    BadWord(String),
    #[error("missing --{0}")]
    Missing(&'static str),
    #[error("bad --spec: {0}")]
    BadSpec(String),
    #[error("--trunc must be at least 1")]
    BadTrunc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Latex,
    #[default]
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    Nmconn,
    Dmain,
    Fdif,
    Cor,
    Gnsmac,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Nmconn => "nmconn",
            Suite::Dmain => "dmain",
            Suite::Fdif => "fdif",
            Suite::Cor => "cor",
            Suite::Gnsmac => "gnsmac",
            Suite::All => "all",
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Nmconn, Suite::Dmain, Suite::Fdif, Suite::Cor, Suite::Gnsmac],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Base {
    Oracle,
    Eigen,
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and highest root.
    Roots,
    /// Quantum Bruhat graph edges, or an adapted sequence with --from/--to.
    Qbruhat,
    /// Nonsymmetric Macdonald polynomial E_gamma, optionally specialized.
    Emac,
    /// Generalized Weyl character, or the global Demazure character with --global.
    Weylchar,
    /// Twisted Euler characteristic.
    Twisted,
    /// Batch verification of the character identities.
    Verify,
}

#[derive(Debug, Parser)]
#[command(name = "siflag", version, about = "Characters of generalized Weyl modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long = "type", global = true)]
    ty: Option<String>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, global = true)]
    w: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, global = true, env = "SIMAC_TRUNC", default_value_t = 20, allow_hyphen_values = true)]
    trunc: i64,
    #[arg(long, global = true)]
    spec: Option<String>,
    /// Apply the bar involution before specializing.
    #[arg(long, global = true)]
    dagger: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long = "max-weight", global = true, default_value_t = 2)]
    max_weight: i64,
    #[arg(long, global = true)]
    global: bool,
    #[arg(long, global = true)]
    from: Option<String>,
    #[arg(long, global = true)]
    to: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Base::Auto)]
    base: Base,
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub root_system: RootSystem,
    pub lambda: Option<Weight>,
    pub gamma: Option<Weight>,
    pub w: Option<WeylElement>,
    pub beta: Option<Coweight>,
    pub from: Option<WeylElement>,
    pub to: Option<WeylElement>,
    pub trunc: i64,
    pub specs: Vec<Specialization>,
    pub dagger: bool,
    pub format: Format,
    pub suite: Suite,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub max_weight: i64,
    pub global: bool,
    pub base: BaseSource,
}

impl RunConfig {
    pub fn cartan_type(&self) -> CartanType {
        self.root_system.cartan_type()
    }

    pub fn need_lambda(&self) -> Result<&Weight, ConfigError> {
        self.lambda.as_ref().ok_or(ConfigError::Missing("lambda"))
    }

    pub fn need_gamma(&self) -> Result<&Weight, ConfigError> {
        self.gamma.as_ref().ok_or(ConfigError::Missing("gamma"))
    }
}

fn parse_vector(s: &str) -> Result<Vec<i64>, ConfigError> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Err(ConfigError::BadVector(s.to_string()));
    }
    t.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| ConfigError::BadVector(s.to_string())))
        .collect()
}

fn sized(flag: &'static str, s: &str, ty: CartanType) -> Result<Vec<i64>, ConfigError> {
    let v = parse_vector(s)?;
    if v.len() != ty.rank {
        return Err(ConfigError::Length { flag, found: v.len(), ty, rank: ty.rank });
    }
    Ok(v)
}

/// Parses `"s1 s2"`, `"1 2"`, `"e"` or `"w0"` into a group element.
pub fn parse_word(rs: &RootSystem, s: &str) -> Result<WeylElement, ConfigError> {
    let t = s.trim();
    if t == "w0" {
        return Ok(rs.longest_element());
    }
    let mut word = Vec::new();
    for tok in t.split(|c: char| c.is_whitespace() || c == ',' || c == '*').filter(|x| !x.is_empty()) {
        if tok == "e" {
            continue;
        }
        let digits = tok.strip_prefix('s').unwrap_or(tok);
        let node: usize = digits.parse().map_err(|_| ConfigError::BadWord(s.to_string()))?;
        if node == 0 {
            return Err(ConfigError::BadWord(s.to_string()));
        }
        word.push(node);
    }
    Ok(rs.element_from_word(&word)?)
}

fn resolve_type(ty: Option<&str>, rank: Option<usize>) -> Result<CartanType, ConfigError> {
    let ty = ty.ok_or(ConfigError::MissingType)?;
    let has_rank = ty.trim().chars().skip(1).any(|c| !c.is_whitespace());
    match (has_rank, rank) {
        (true, None) => Ok(ty.parse()?),
        (false, Some(r)) => Ok(format!("{}{r}", ty.trim()).parse()?),
        (false, None) => Err(RootDataError::BadLabel(ty.to_string()).into()),
        (true, Some(r)) => {
            let t: CartanType = ty.parse()?;
            if t.rank != r {
                return Err(ConfigError::RankConflict { ty: ty.to_string(), rank: r });
            }
            Ok(t)
        }
    }
}

/// Parses and validates a command line, `argv[0]` included.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let ty = resolve_type(cli.ty.as_deref(), cli.rank)?;
    let rs = RootSystem::new(ty);
    if cli.trunc < 1 {
        return Err(ConfigError::BadTrunc);
    }
    let lambda = cli.lambda.as_deref().map(|s| sized("lambda", s, ty).map(Weight)).transpose()?;
    let gamma = cli.gamma.as_deref().map(|s| sized("gamma", s, ty).map(Weight)).transpose()?;
    let beta = cli.beta.as_deref().map(|s| sized("beta", s, ty).map(Coweight)).transpose()?;
    let w = cli.w.as_deref().map(|s| parse_word(&rs, s)).transpose()?;
    let from = cli.from.as_deref().map(|s| parse_word(&rs, s)).transpose()?;
    let to = cli.to.as_deref().map(|s| parse_word(&rs, s)).transpose()?;
    let specs = match cli.spec.as_deref() {
        Some(s) => parse_specs(s).map_err(|e| ConfigError::BadSpec(e.to_string()))?,
        None => Vec::new(),
    };
    let base = match cli.base {
        Base::Oracle => BaseSource::Oracle,
        Base::Eigen => BaseSource::Eigen,
        Base::Auto => BaseSource::Auto,
    };
    Ok(RunConfig {
        command: cli.command,
        root_system: rs,
        lambda,
        gamma,
        w,
        beta,
        from,
        to,
        trunc: cli.trunc,
        specs,
        dagger: cli.dagger,
        format: cli.format,
        suite: cli.suite,
        jobs: cli.jobs.max(1),
        out: cli.out,
        max_weight: cli.max_weight,
        global: cli.global,
        base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig, ConfigError> {
        parse_args(std::iter::once("siflag").chain(args.split(' ')))
    }

    #[test]
    fn lambda_and_type() {
        let c = parse("weylchar --type A2 --lambda 1,0").unwrap();
        assert_eq!(c.lambda, Some(Weight(vec![1, 0])));
        assert_eq!(c.cartan_type().to_string(), "A2");
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(parse("weylchar --lambda 1,0,0 --type A2"), Err(ConfigError::Length { .. })));
    }

    #[test]
    fn type_and_rank() {
        assert_eq!(parse("roots --type B --rank 3").unwrap().cartan_type().to_string(), "B3");
        assert!(matches!(parse("roots --type B2 --rank 3"), Err(ConfigError::RankConflict { .. })));
        assert!(parse("roots --type E6").is_err());
    }

    #[test]
    fn words() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let w = parse_word(&rs, "s1 s2").unwrap();
        assert_eq!(w, rs.element_from_word(&[1, 2]).unwrap());
        assert_eq!(parse_word(&rs, "e").unwrap(), rs.identity());
        assert_eq!(parse_word(&rs, "").unwrap(), rs.identity());
        assert_eq!(parse_word(&rs, "w0").unwrap(), rs.longest_element());
        assert_eq!(parse_word(&rs, "s1 s1").unwrap(), rs.identity());
        assert!(parse_word(&rs, "s3").is_err());
        assert!(parse_word(&rs, "x").is_err());
    }

    #[test]
    fn negative_weights_and_flags() {
        let c = parse("emac --type A2 --gamma -1,0 --spec t-inf,q-inv --format json").unwrap();
        assert_eq!(c.gamma, Some(Weight(vec![-1, 0])));
        assert_eq!(c.specs, vec![Specialization::TInfinity, Specialization::QInverse]);
        assert_eq!(c.format, Format::Json);
        assert!(parse("emac --type A2 --bogus").is_err());
        assert!(matches!(parse("emac --type A2 --gamma 1,x"), Err(ConfigError::BadVector(_))));
        assert!(matches!(parse("roots --type A1 --trunc 0"), Err(ConfigError::BadTrunc)));
    }
}
