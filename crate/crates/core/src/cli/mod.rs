//! The `fstable` command line: problem files in, reports out.
//!
//! Exit codes: 0 computed, 1 input error, 2 resource cap hit, 3 an
//! inconclusive verdict is present in the report.

mod problem;
mod reproduce;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use problem::{Mode, NamedIdeal, Options, PoolSpec, ProblemError, ProblemFile};
pub use reproduce::{random_ideal, random_poly, reproduce_paper};
pub use report::{Entry, Report, SetupInfo};

use crate::ci::{linear_pool, variable_pool, CISetup};
use crate::error::Error;
use crate::frobenius;
use crate::gorenstein::GorSetup;
use crate::groebner::{GbLimits, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::stable::{FRationality, Height, Lattice, MembershipVerdict, NilpotencyStatus, Settings, TestIdealReport};

#[derive(Debug, Parser)]
#[command(name = "fstable", version, about = "F-stable ideals, F-purity and parameter test ideals over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Monomial order for printed bases (grevlex or lex).
    #[arg(long, global = true)]
    pub order: Option<MonomialOrder>,
    /// Largest Frobenius exponent for nilpotency and K_u chains.
    #[arg(long, global = true)]
    pub emax: Option<usize>,
    /// Cap on closure iterations.
    #[arg(long = "max-iter", global = true)]
    pub max_iter: Option<usize>,
    /// Enumeration pool: vars, linear or file:PATH.
    #[arg(long, global = true)]
    pub pool: Option<PoolSpec>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized checks of reproduce-paper.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership of every named ideal.
    Check { file: PathBuf },
    /// Smallest member containing each named ideal.
    Closure { file: PathBuf },
    /// Nilpotency of each named ideal (complete intersections only).
    Nilpotent { file: PathBuf },
    /// Members reachable from the pool under closure, sums and intersections.
    Enumerate { file: PathBuf },
    /// Parameter test ideal from the enumerated members.
    TestIdeal { file: PathBuf },
    /// Fedder's criterion.
    Fpure { file: PathBuf },
    /// F-rationality relative to the pool.
    Frational { file: PathBuf },
    /// Reduced Gröbner bases of u and the named ideals.
    Gb { file: PathBuf },
    /// Krull dimensions and heights.
    Dim { file: PathBuf },
    /// Re-run the worked examples and print PASS/FAIL per claim.
    ReproducePaper,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Closure { .. } => "closure",
            Command::Nilpotent { .. } => "nilpotent",
            Command::Enumerate { .. } => "enumerate",
            Command::TestIdeal { .. } => "test-ideal",
            Command::Fpure { .. } => "fpure",
            Command::Frational { .. } => "frational",
            Command::Gb { .. } => "gb",
            Command::Dim { .. } => "dim",
            Command::ReproducePaper => "reproduce-paper",
        }
    }

    fn file(&self) -> Option<&Path> {
        match self {
            Command::Check { file }
            | Command::Closure { file }
            | Command::Nilpotent { file }
            | Command::Enumerate { file }
            | Command::TestIdeal { file }
            | Command::Fpure { file }
            | Command::Frational { file }
            | Command::Gb { file }
            | Command::Dim { file } => Some(file),
            Command::ReproducePaper => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Problem { path: String, source: ProblemError },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Compute(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(Error::ResourceLimit { .. } | Error::IterationCap { .. } | Error::ExponentOverflow) => 2,
            CliError::Compute(Error::KuInconclusive { .. }) => 3,
            _ => 1,
        }
    }
}

/// A finished command: its report and whether any verdict was inconclusive.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub inconclusive: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.inconclusive {
            3
        } else {
            0
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let text = if cli.json { outcome.report.to_json() + "\n" } else { outcome.report.to_text() };
            let _ = out.write_all(text.as_bytes());
            outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Compute(Error::KuInconclusive { chain, .. }) = &e {
                for (i, c) in chain.iter().enumerate() {
                    let _ = writeln!(err, "  C_{i} = ({})", c.join(", "));
                }
            }
            e.exit_code()
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let Some(path) = cli.command.file() else {
        let report = reproduce_paper(cli.seed.unwrap_or(0));
        return Ok(Outcome { report, inconclusive: false });
    };
    let src = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let problem = ProblemFile::parse(&src)
        .map_err(|source| CliError::Problem { path: path.display().to_string(), source })?;
    let session = Session::new(problem, cli)?;
    session.run(&cli.command)
}

/// Merges file options with command-line overrides.
fn settings_for(options: &Options, cli: &Cli) -> Settings {
    let mut s = Settings::default();
    let defaults = GbLimits::default();
    s.order = cli.order.or(options.order).unwrap_or(s.order);
    s.emax = cli.emax.or(options.emax).unwrap_or(s.emax);
    s.max_iter = cli.max_iter.or(options.max_iter).unwrap_or(s.max_iter);
    s.max_members = options.max_members.unwrap_or(s.max_members);
    s.limits = GbLimits {
        max_pairs: options.max_pairs.unwrap_or(defaults.max_pairs),
        max_basis: options.max_basis.unwrap_or(defaults.max_basis),
    };
    s
}

enum Setup {
    Ci(CISetup),
    Gor(GorSetup),
}

struct Session {
    problem: ProblemFile,
    setup: Setup,
    settings: Settings,
    pool_spec: PoolSpec,
    caveats: Vec<String>,
}

fn height_text(h: Height) -> String {
    match h {
        Some(h) => h.to_string(),
        None => "unit".into(),
    }
}

fn nilpotency_text(s: &NilpotencyStatus) -> String {
    match s {
        NilpotencyStatus::Nilpotent(e) => format!("nilpotent (e = {e})"),
        NilpotencyStatus::NotNilpotent => "not nilpotent".into(),
        NilpotencyStatus::Inconclusive(emax) => format!("inconclusive up to e = {emax}"),
    }
}

impl Session {
    fn new(problem: ProblemFile, cli: &Cli) -> Result<Self, CliError> {
        let settings = settings_for(&problem.options, cli);
        let ring = problem.ring.clone();
        let setup = match &problem.epsilon {
            None => Setup::Ci(CISetup::new(ring, problem.u.clone(), settings)?),
            Some(eps) => Setup::Gor(GorSetup::new(ring, problem.u.clone(), eps.clone(), settings)?),
        };
        let pool_spec = cli.pool.clone().or_else(|| problem.options.pool.clone()).unwrap_or(PoolSpec::Vars);
        let mut caveats = Vec::new();
        let named = problem.ideals.iter().flat_map(|i| i.gens.iter().map(move |g| (i.name.as_str(), g)));
        let factors = problem.options.factors.iter().map(|g| ("factors", g));
        for (name, g) in named.chain(factors) {
            if g.constant_term() != 0 {
                caveats.push(format!(
                    "generator `{}` of {name} has a nonzero constant term; heights are computed globally and may differ from the local ones",
                    problem.ring.display(g)
                ));
            }
        }
        Ok(Session { problem, setup, settings, pool_spec, caveats })
    }

    fn ring(&self) -> &PolyRing {
        &self.problem.ring
    }

    fn info(&self) -> SetupInfo {
        let ring = self.ring();
        SetupInfo {
            p: ring.characteristic(),
            vars: ring.var_names().to_vec(),
            mode: self.problem.mode.name().to_string(),
            u: self.problem.u.iter().map(|g| ring.display(g)).collect(),
            epsilon: self.problem.epsilon.as_ref().map(|e| ring.display(e)),
            order: self.settings.order.name().to_string(),
        }
    }

    fn ideal(&self, gens: Vec<Polynomial>) -> Ideal {
        match &self.setup {
            Setup::Ci(s) => s.ideal(gens),
            Setup::Gor(s) => s.ideal(gens),
        }
    }

    fn basis(&self, ideal: &Ideal) -> Result<Vec<String>, Error> {
        let gb = ideal.groebner_basis_in(self.settings.order)?;
        Ok(gb.iter().map(|g| self.ring().display_in(g, self.settings.order)).collect())
    }

    fn gens_text(&self, gens: &[Polynomial]) -> Vec<String> {
        gens.iter().map(|g| self.ring().display_in(g, self.settings.order)).collect()
    }

    fn check_member(&self, ideal: &Ideal) -> Result<MembershipVerdict, Error> {
        match &self.setup {
            Setup::Ci(s) => s.check_member(ideal),
            Setup::Gor(s) => s.check_member(ideal),
        }
    }

    fn closure(&self, ideal: &Ideal) -> Result<Ideal, Error> {
        match &self.setup {
            Setup::Ci(s) => s.closure(ideal),
            Setup::Gor(s) => s.closure(ideal),
        }
    }

    fn height(&self, ideal: &Ideal) -> Result<Height, Error> {
        match &self.setup {
            Setup::Ci(s) => s.height(ideal),
            Setup::Gor(s) => s.height(ideal),
        }
    }

    fn dim_a(&self) -> usize {
        match &self.setup {
            Setup::Ci(s) => s.dim_a(),
            Setup::Gor(s) => s.dim_a(),
        }
    }

    fn base(&self) -> Result<Ideal, Error> {
        match &self.setup {
            Setup::Ci(s) => Ok(s.u_ideal().clone()),
            Setup::Gor(s) => Ok(s.k_u()?.k_u.clone()),
        }
    }

    fn pool(&self) -> Result<Vec<Polynomial>, CliError> {
        let ring = self.ring();
        let mut pool = match &self.pool_spec {
            PoolSpec::Vars => variable_pool(ring),
            PoolSpec::Linear => linear_pool(ring).ok_or_else(|| {
                CliError::Input(format!(
                    "the linear pool needs p^(number of variables) <= 10^4; here it is {}^{}",
                    ring.characteristic(),
                    ring.nvars()
                ))
            })?,
            PoolSpec::File(path) => {
                let src = std::fs::read_to_string(path)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
                let mut out = Vec::new();
                for (i, line) in src.lines().enumerate() {
                    let line = line.split('#').next().unwrap_or("");
                    for piece in line.split(',').filter(|s| !s.trim().is_empty()) {
                        let f = ring.parse(piece).map_err(|e| {
                            CliError::Input(format!("{path}: line {}: {e}", i + 1))
                        })?;
                        out.push(f);
                    }
                }
                out
            }
        };
        for f in &self.problem.options.factors {
            if !pool.contains(f) {
                pool.push(f.clone());
            }
        }
        Ok(pool)
    }

    fn enumerate(&self) -> Result<Lattice, CliError> {
        let pool = self.pool()?;
        Ok(match &self.setup {
            Setup::Ci(s) => s.enumerate(&pool)?,
            Setup::Gor(s) => s.enumerate(&pool)?,
        })
    }

    fn pool_caveat(&self, lattice: &Lattice) -> String {
        let spec = match &self.pool_spec {
            PoolSpec::Vars => "variables".to_string(),
            PoolSpec::Linear => "linear forms".to_string(),
            PoolSpec::File(p) => format!("file {p}"),
        };
        format!(
            "pool-relative lower bound: {} members found from a pool of {} elements ({spec}{}); members unreachable from the pool are not listed",
            lattice.members.len(),
            lattice.pool_size,
            if self.problem.options.factors.is_empty() { "" } else { " plus factors" }
        )
    }

    fn named_ideals(&self) -> Vec<(&str, Ideal, &[Polynomial])> {
        self.problem
            .ideals
            .iter()
            .map(|n| (n.name.as_str(), self.ideal(n.gens.clone()), n.gens.as_slice()))
            .collect()
    }

    fn ku_entry(&self) -> Result<Option<Entry>, Error> {
        let Setup::Gor(s) = &self.setup else { return Ok(None) };
        let k = s.k_u()?;
        Ok(Some(
            Entry::new("K_u", "computed")
                .basis(self.basis(&k.k_u)?)
                .detail(format!("colon chain stable from e = {}", k.stable_at)),
        ))
    }

    fn run(mut self, command: &Command) -> Result<Outcome, CliError> {
        let mut report = Report::new(command.name(), Some(self.info()));
        let mut inconclusive = false;
        let needs_base = matches!(
            command,
            Command::Check { .. }
                | Command::Closure { .. }
                | Command::Enumerate { .. }
                | Command::TestIdeal { .. }
                | Command::Frational { .. }
        );
        if needs_base {
            report.results.extend(self.ku_entry()?);
        }
        let wants_ideals = matches!(
            command,
            Command::Check { .. } | Command::Closure { .. } | Command::Nilpotent { .. }
        );
        if wants_ideals && self.problem.ideals.is_empty() {
            self.caveats.push("no `ideal NAME:` lines in the problem file; nothing to report".into());
        }

        match command {
            Command::Check { .. } => {
                for (name, ideal, gens) in self.named_ideals() {
                    let v = self.check_member(&ideal)?;
                    let mut entry = Entry::new(name, if v.member { "member" } else { "non-member" })
                        .basis(self.basis(&v.ideal)?)
                        .generators(self.gens_text(gens));
                    if v.normalized {
                        entry = entry.detail("the base ideal was added before testing");
                    }
                    if let Some(w) = &v.witness {
                        entry = entry.detail(format!(
                            "witness: generator {} has multiplied normal form {} modulo the Frobenius power",
                            self.ring().display(&w.generator),
                            self.ring().display(&w.normal_form)
                        ));
                    }
                    report.results.push(entry);
                }
            }
            Command::Closure { .. } => {
                for (name, ideal, gens) in self.named_ideals() {
                    let c = self.closure(&ideal)?;
                    let h = self.height(&c)?;
                    report.results.push(
                        Entry::new(name, "closure")
                            .basis(self.basis(&c)?)
                            .generators(self.gens_text(gens))
                            .height(height_text(h)),
                    );
                }
            }
            Command::Nilpotent { .. } => {
                let Setup::Ci(s) = &self.setup else {
                    return Err(CliError::Input(
                        "nilpotent is only defined for complete intersections (drop the epsilon line)".into(),
                    ));
                };
                for (name, ideal, gens) in self.named_ideals() {
                    let v = s.nilpotency(&ideal, self.settings.emax)?;
                    if matches!(v.status, NilpotencyStatus::Inconclusive(_)) {
                        inconclusive = true;
                    }
                    let mut entry = Entry::new(name, nilpotency_text(&v.status)).generators(self.gens_text(gens));
                    for (i, w) in v.chain.iter().enumerate() {
                        entry = entry.detail(format!("W_{} = ({})", i + 1, self.basis(w)?.join(", ")));
                    }
                    if v.stabilized {
                        entry = entry.detail("chain stabilized");
                    }
                    report.results.push(entry);
                }
            }
            Command::Enumerate { .. } => {
                let lattice = self.enumerate()?;
                for (i, m) in lattice.members.iter().enumerate() {
                    let mut entry =
                        Entry::new(format!("M{}", i + 1), "member").basis(self.basis(&m.ideal)?).height(height_text(m.height));
                    if let Some(n) = &m.nilpotency {
                        if matches!(n, NilpotencyStatus::Inconclusive(_)) {
                            inconclusive = true;
                        }
                        entry = entry.detail(format!("nilpotency: {}", nilpotency_text(n)));
                    }
                    report.results.push(entry);
                }
                self.caveats.push(self.pool_caveat(&lattice));
            }
            Command::TestIdeal { .. } => {
                let lattice = self.enumerate()?;
                let t: TestIdealReport = match &self.setup {
                    Setup::Ci(s) => s.test_ideal(&lattice)?,
                    Setup::Gor(s) => s.test_ideal(&lattice)?,
                };
                let mut entry = Entry::new("test-ideal", if t.vacuous { "vacuous" } else { "computed" })
                    .basis(self.basis(&t.ideal)?)
                    .detail(format!("intersection of {} members of positive height", t.positive_height_members));
                if let Some(m) = &t.minimal_member {
                    entry = entry.detail(format!(
                        "equals the unique minimal member of positive height ({})",
                        self.basis(m)?.join(", ")
                    ));
                }
                report.results.push(entry);
                self.caveats.push(self.pool_caveat(&lattice));
                self.caveats.extend(t.caveats);
            }
            Command::Fpure { .. } => {
                let pure = match &self.setup {
                    Setup::Ci(s) => frobenius::is_f_pure(s)?,
                    Setup::Gor(s) => s.is_f_pure()?,
                };
                report.results.push(Entry::new("F-pure", pure.to_string()).detail("Fedder's criterion"));
            }
            Command::Frational { .. } => {
                let lattice = self.enumerate()?;
                let verdict = match &self.setup {
                    Setup::Ci(s) => s.f_rationality(&lattice)?,
                    Setup::Gor(s) => s.f_rationality(&lattice)?,
                };
                match verdict {
                    FRationality::NotFRational { witness } => {
                        report.results.push(
                            Entry::new("F-rational", "false")
                                .basis(self.basis(&witness)?)
                                .detail("witness: a member other than the base ideal and R"),
                        );
                    }
                    FRationality::FRationalRelativeToPool => {
                        report.results.push(Entry::new("F-rational", "true relative to pool"));
                        self.caveats.push("only the base ideal and R were reached; a larger pool could find a witness".into());
                    }
                }
                self.caveats.push(self.pool_caveat(&lattice));
            }
            Command::Gb { .. } => {
                let u = self.ideal(self.problem.u.clone());
                report.results.push(
                    Entry::new("u", "basis").basis(self.basis(&u)?).generators(self.gens_text(&self.problem.u)),
                );
                for (name, ideal, gens) in self.named_ideals() {
                    report.results.push(Entry::new(name, "basis").basis(self.basis(&ideal)?).generators(self.gens_text(gens)));
                }
            }
            Command::Dim { .. } => {
                report.results.push(Entry::new("A", format!("dim {}", self.dim_a())));
                for (name, ideal, gens) in self.named_ideals() {
                    let d = ideal.krull_dim()?;
                    let verdict = if d < 0 { "unit ideal".to_string() } else { format!("dim R/I = {d}") };
                    let normalized = ideal.sum(&self.base()?)?;
                    report.results.push(
                        Entry::new(name, verdict)
                            .height(height_text(self.height(&normalized)?))
                            .generators(self.gens_text(gens)),
                    );
                }
            }
            Command::ReproducePaper => unreachable!("handled before a problem file is read"),
        }
        report.caveats = self.caveats;
        Ok(Outcome { report, inconclusive })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_one() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run_with(["fstable", "frobnicate"], &mut out, &mut err), 1);
        assert_eq!(run_with(["fstable", "check", "/nonexistent/file.prob"], &mut out, &mut err), 1);
        assert_eq!(run_with(["fstable", "--help"], &mut out, &mut err), 0);
    }

    #[test]
    fn exit_codes_by_error() {
        assert_eq!(CliError::Compute(Error::IterationCap { what: "closure", cap: 1 }).exit_code(), 2);
        assert_eq!(CliError::Compute(Error::KuInconclusive { emax: 1, chain: vec![] }).exit_code(), 3);
        assert_eq!(CliError::Compute(Error::EmptyPool).exit_code(), 1);
    }
}
