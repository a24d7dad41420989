//! Command-line front end: argument parsing, rendering and the result cache.

pub mod cache;
pub mod tables;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use spingrass_core::dims::{dim, dim_via_littlewood, LittlewoodFamily};
use spingrass_core::dirac::{
    enumerate_spectrum, l2_table, min_eigenvalue_sq, minimal_weights, smallest_contribution,
    GrassmannEven, L2Row, MinEigenvalue, SpectrumEntry,
};
use spingrass_core::identities::{
    check_bnk, check_btilde, check_lemma4, check_odd_l2, q_coefficient,
};
use spingrass_core::lie::fmt_half;
use spingrass_core::lr::{lr_coefficient, lr_product};
use spingrass_core::report::IdentityReport;
use spingrass_core::spinor::{
    decompose, peel, project_generic, verify_dimension_identity, Case, Chirality, Decomposition,
};
use spingrass_core::{AlgebraId, Error, Family, Partition, Weight};

use cache::Cache;
use tables::TableReport;

#[derive(Debug, Parser)]
#[command(name = "spingrass", version, about = "Spinor modules of Grassmannians and Dirac spectra")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Overrides SPINGRASS_CACHE_DIR.
    #[arg(long, global = true, hide = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Decompose the spinor module of G_{m,n} under so(m) ⊕ so(n).
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum)]
        case: CaseArg,
    },
    /// Dimension of an irreducible representation.
    Dims {
        /// e.g. so(8), so(7), sp(4), gl(3)
        #[arg(long)]
        algebra: AlgebraId,
        /// e.g. [2,2,2,0] or [3/2,1/2]
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Littlewood-Richardson coefficients.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        /// Print one coefficient instead of the whole product.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
    },
    /// Check one of the dimension or binomial identities.
    Verify {
        #[arg(value_enum)]
        identity: IdentityArg,
        #[arg(long, conflicts_with_all = ["k", "l"])]
        max_n: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Recompute a printed table and compare it with the stored copy.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        table: u8,
    },
    /// Dirac operator on the even Grassmannian G_{2k,2l}.
    Dirac {
        #[arg(value_enum)]
        what: DiracArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Largest Euclidean Casimir value to list (spectrum only).
        #[arg(long)]
        bound: Option<i64>,
        /// Largest |2κ| in the expansion (spectrum only).
        #[arg(long)]
        max_trace: Option<usize>,
    },
    /// Project all sign vectors through an integer matrix read from a file.
    Project {
        #[arg(long)]
        matrix: PathBuf,
        /// Factor algebras for the rows; repeat for products. Enables peeling.
        #[arg(long)]
        algebra: Vec<AlgebraId>,
        /// Divide every image coordinate by this before peeling.
        #[arg(long, default_value_t = 1)]
        divisor: i64,
        /// Use only the sign vectors with an even number of minus signs.
        #[arg(long)]
        half_spin: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CaseArg {
    Even,
    Odd,
    Mixed,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Case {
        match c {
            CaseArg::Even => Case::Even,
            CaseArg::Odd => Case::Odd,
            CaseArg::Mixed => Case::Mixed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Via {
    Littlewood,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentityArg {
    Master,
    Master2,
    Lemma4,
    Bnk,
    OddL2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DiracArg {
    Min,
    Spectrum,
    MinimalWeights,
    Lambda0,
}

fn bracketed(s: &str) -> String {
    let t = s.trim();
    if t.starts_with('[') {
        t.to_owned()
    } else {
        format!("[{t}]")
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    bracketed(s).parse()
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, pass: bool) -> Self {
        Output {
            status: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn err(status: i32, msg: String) -> Self {
        Output {
            status,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Internal failures: a failed consistency check exits with 1, anything else
/// the user supplied wrongly with 2.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) | Error::Peel(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Check(format!("internal error: {e}"))
}

struct Ctx {
    json: bool,
    cache: Option<Cache>,
}

impl Ctx {
    /// Computes or loads a value. Either way the value is rebuilt from its
    /// JSON text, so a hit renders exactly like a miss.
    fn cached<T: Serialize + DeserializeOwned>(
        &self,
        command: &str,
        params: &str,
        compute: impl FnOnce() -> Res<T>,
    ) -> Res<T> {
        if let Some(text) = self.cache.as_ref().and_then(|c| c.load(command, params)) {
            if let Ok(v) = serde_json::from_str(&text) {
                return Ok(v);
            }
        }
        let text = serde_json::to_string(&compute()?).map_err(internal)?;
        if let Some(c) = &self.cache {
            // the cache is advisory; a failed write only costs a recomputation
            let _ = c.store(command, params, text.clone());
        }
        serde_json::from_str(&text).map_err(internal)
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Res<String> {
        if self.json {
            let mut s = serde_json::to_string_pretty(value).map_err(internal)?;
            s.push('\n');
            Ok(s)
        } else {
            Ok(text())
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::err(2, text)
            } else {
                Output::ok(text, true)
            };
        }
    };
    let cache = if cli.no_cache {
        None
    } else {
        cli.cache_dir.clone().or_else(Cache::default_dir).map(Cache::new)
    };
    let ctx = Ctx {
        json: cli.json,
        cache,
    };
    match dispatch(&ctx, cli.cmd) {
        Ok((stdout, pass)) => Output::ok(stdout, pass),
        Err(Failure::Check(m)) => Output::err(1, format!("error: {m}\n")),
        Err(Failure::Usage(m)) => Output::err(2, format!("error: {m}\n")),
    }
}

fn dispatch(ctx: &Ctx, cmd: Cmd) -> Res<(String, bool)> {
    match cmd {
        Cmd::Decompose { k, l, case } => {
            let d = cached_decomposition(ctx, k, l, case.into())?;
            Ok((ctx.emit(&d, || render_decomposition(&d, k, l, case.into()))?, true))
        }
        Cmd::Dims {
            algebra,
            weight,
            via,
        } => dims(ctx, algebra, &weight, via).map(|s| (s, true)),
        Cmd::Lr { mu, nu, lambda } => lr(ctx, &mu, &nu, lambda.as_ref()).map(|s| (s, true)),
        Cmd::Verify {
            identity,
            max_n,
            k,
            l,
        } => verify(ctx, identity, max_n, k, l),
        Cmd::Tables { table } => {
            let r = match table {
                1 => tables::table1()?,
                2 => tables::product_table(2, &cached_decomposition(ctx, 4, 2, Case::Even)?)?,
                _ => tables::product_table(3, &cached_decomposition(ctx, 3, 3, Case::Even)?)?,
            };
            Ok((ctx.emit(&r, || render_table(&r))?, r.pass))
        }
        Cmd::Dirac {
            what,
            k,
            l,
            bound,
            max_trace,
        } => dirac(ctx, what, k, l, bound, max_trace).map(|s| (s, true)),
        Cmd::Project {
            matrix,
            algebra,
            divisor,
            half_spin,
        } => project(ctx, &matrix, algebra, divisor, half_spin).map(|s| (s, true)),
    }
}

fn cached_decomposition(ctx: &Ctx, k: usize, l: usize, case: Case) -> Res<Decomposition> {
    ctx.cached("decompose", &format!("k={k},l={l},case={case}"), || {
        Ok(decompose(k, l, case)?)
    })
}

fn chirality_label(c: Chirality) -> &'static str {
    match c {
        Chirality::Plus => "S+",
        Chirality::Minus => "S-",
        Chirality::None => "S",
    }
}

fn render_decomposition(d: &Decomposition, k: usize, l: usize, case: Case) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "spinor module, k={k} l={l} ({case}): {} summands", d.len());
    let mut current = None;
    for x in &d.summands {
        if current != Some(x.chirality) {
            current = Some(x.chirality);
            let _ = writeln!(s, "{}:", chirality_label(x.chirality));
        }
        let _ = writeln!(s, "  {x}  {}*{} = {}", x.dim1, x.dim2, x.dim());
    }
    for c in [Chirality::Plus, Chirality::Minus] {
        if d.summands.iter().any(|x| x.chirality == c) {
            let _ = writeln!(s, "dim {} = {}", chirality_label(c), d.dim_of(c));
        }
    }
    let _ = writeln!(s, "total = {}", d.total_dim);
    s
}

#[derive(Serialize)]
struct DimOut<'a> {
    algebra: String,
    weight: &'a Weight,
    #[serde(with = "spingrass_core::bigjson::nat")]
    dim: BigUint,
    via: &'static str,
}

fn dims(ctx: &Ctx, a: AlgebraId, weight: &str, via: Option<Via>) -> Res<String> {
    let w = Weight::parse(&bracketed(weight), a)?;
    let (d, how) = match via {
        None => (dim(&w)?, "weyl"),
        Some(Via::Littlewood) => {
            let family = match a.family {
                Family::SoEven => LittlewoodFamily::SoEven,
                Family::Sp => LittlewoodFamily::Sp,
                _ => return Err(usage(format!("no Littlewood formula for {a}"))),
            };
            let ints = w.to_ints().ok_or_else(|| usage("the Littlewood formula needs an integral weight"))?;
            let parts = ints
                .iter()
                .map(|&x| usize::try_from(x).map_err(|_| usage("the Littlewood formula needs a partition")))
                .collect::<Res<Vec<_>>>()?;
            (dim_via_littlewood(&Partition::new(parts)?, a.rank(), family)?, "littlewood")
        }
    };
    let out = DimOut {
        algebra: a.to_string(),
        weight: &w,
        dim: d,
        via: how,
    };
    ctx.emit(&out, || format!("dim {a} {w} = {}\n", out.dim))
}

#[derive(Serialize)]
struct LrTerm {
    lambda: Partition,
    coefficient: u64,
}

fn lr(ctx: &Ctx, mu: &Partition, nu: &Partition, lambda: Option<&Partition>) -> Res<String> {
    if let Some(lam) = lambda {
        let t = LrTerm {
            lambda: lam.clone(),
            coefficient: lr_coefficient(mu, nu, lam),
        };
        return ctx.emit(&t, || format!("LR({mu}, {nu}; {lam}) = {}\n", t.coefficient));
    }
    let terms: Vec<LrTerm> = lr_product(mu, nu)
        .into_iter()
        .rev()
        .map(|(lambda, coefficient)| LrTerm {
            lambda,
            coefficient,
        })
        .collect();
    ctx.emit(&terms, || {
        let mut s = format!("{mu} * {nu} =\n");
        for t in &terms {
            let _ = writeln!(s, "  {} {}", t.coefficient, t.lambda);
        }
        s
    })
}

const MASTER_CASES: [(usize, usize); 6] = [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3)];

fn verify(
    ctx: &Ctx,
    which: IdentityArg,
    max_n: Option<u64>,
    k: Option<usize>,
    l: Option<usize>,
) -> Res<(String, bool)> {
    let mut reports: Vec<IdentityReport> = Vec::new();
    let pair = |default: &[(usize, usize)]| -> Res<Vec<(usize, usize)>> {
        match (k, l) {
            (Some(k), Some(l)) => Ok(vec![(k, l)]),
            (None, None) => Ok(default.to_vec()),
            _ => Err(usage("give both --k and --l")),
        }
    };
    let no_kl = || {
        if k.is_some() || l.is_some() {
            Err(usage("this identity takes --max-n only"))
        } else {
            Ok(())
        }
    };
    match which {
        IdentityArg::Master | IdentityArg::Master2 => {
            if max_n.is_some() {
                return Err(usage("this identity takes --k and --l"));
            }
            let (case, cases): (Case, Vec<(usize, usize)>) = match which {
                IdentityArg::Master => (Case::Even, MASTER_CASES.to_vec()),
                _ => (
                    Case::Odd,
                    (1..=8).map(|k| (k, 1)).chain((2..=8).map(|k| (k, 2))).collect(),
                ),
            };
            for (k, l) in pair(&cases)? {
                reports.push(verify_dimension_identity(k, l, case)?);
            }
        }
        IdentityArg::Lemma4 => {
            no_kl()?;
            for n in 1..=max_n.unwrap_or(10) {
                reports.extend(check_lemma4(n));
            }
        }
        IdentityArg::Bnk => {
            no_kl()?;
            let max_n = max_n.unwrap_or(12);
            for n in 0..=max_n {
                reports.extend(check_bnk(n));
            }
            for n in 1..=max_n.min(10) {
                for k in 0..=5 {
                    reports.push(check_btilde(n, k)?);
                }
            }
            // q_coefficient fails with Inconsistent unless all its routes agree
            for n in 0..=max_n.min(8) {
                for k in 0..=5 {
                    q_coefficient(n, k)?;
                }
            }
        }
        IdentityArg::OddL2 => {
            if max_n.is_some() || l.is_some_and(|l| l != 2) {
                return Err(usage("odd-l2 takes --k"));
            }
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=8).collect(),
            };
            for k in ks {
                reports.push(check_odd_l2(k)?);
            }
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let s = ctx.emit(&reports, || {
        let mut s = String::new();
        for r in &reports {
            let mark = if r.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "{mark} {} {}: {} = {}", r.name, r.parameter, r.lhs, r.rhs);
        }
        let failed = reports.iter().filter(|r| !r.pass).count();
        let _ = writeln!(s, "{} checks, {failed} failed", reports.len());
        s
    })?;
    Ok((s, pass))
}

fn render_table(t: &TableReport) -> String {
    let mut s = String::new();
    for r in &t.rows {
        let label = match &r.factor2 {
            Some(nu) => format!("({} | {})", r.factor1, nu),
            None => r.factor1.to_string(),
        };
        let c = r.chirality.map(|c| format!("{} ", chirality_label(c))).unwrap_or_default();
        let got = r.computed.as_ref().map_or("missing".to_owned(), |d| d.to_string());
        let mark = if r.pass { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "{mark} {c}{label}  {got} (table {})", r.expected);
    }
    for u in &t.unlisted {
        let _ = writeln!(s, "FAIL not in table: {u}");
    }
    let _ = writeln!(
        s,
        "table {}: {} rows, {}",
        t.table,
        t.rows.len(),
        if t.pass { "all match" } else { "MISMATCH" }
    );
    s
}

#[derive(Serialize, Deserialize)]
struct Lambda0 {
    lambda0: SpectrumEntry,
    l2_table: Option<Vec<L2Row>>,
}

fn dirac(
    ctx: &Ctx,
    what: DiracArg,
    k: usize,
    l: usize,
    bound: Option<i64>,
    max_trace: Option<usize>,
) -> Res<String> {
    let space = GrassmannEven::new(k, l)?;
    if !matches!(what, DiracArg::Spectrum) && (bound.is_some() || max_trace.is_some()) {
        return Err(usage("--bound and --max-trace apply to the spectrum only"));
    }
    match what {
        DiracArg::Min => {
            let m = min_eigenvalue_sq(&space)?;
            ctx.emit(&m, || render_min(&m))
        }
        DiracArg::Spectrum => {
            let bound = bound.ok_or_else(|| usage("spectrum needs --bound"))?;
            let trace = max_trace.map_or("none".to_owned(), |t| t.to_string());
            let params = format!("k={k},l={l},bound={bound},max_trace={trace}");
            let spec: Vec<SpectrumEntry> = ctx.cached("dirac-spectrum", &params, || {
                Ok(enumerate_spectrum(&space, bound, max_trace)?)
            })?;
            ctx.emit(&spec, || {
                let mut s = format!("{:<20} {:>8} {:>10} {:>10}\n", "lambda", "c_eucl", "c", "D^2");
                for e in &spec {
                    let _ = writeln!(
                        s,
                        "{:<20} {:>8} {:>10} {:>10}",
                        e.lambda.to_string(),
                        e.casimir_eucl,
                        e.casimir_b.to_string(),
                        e.eigenvalue_sq.to_string()
                    );
                }
                s
            })
        }
        DiracArg::MinimalWeights => {
            let pairs = minimal_weights(&space)?;
            ctx.emit(&pairs, || {
                pairs.iter().map(|(a, b)| format!("({a} | {b})\n")).collect()
            })
        }
        DiracArg::Lambda0 => {
            let out = Lambda0 {
                lambda0: smallest_contribution(&space)?,
                l2_table: if l == 2 && k >= 4 { Some(l2_table(k)?) } else { None },
            };
            ctx.emit(&out, || {
                let e = &out.lambda0;
                let mut s = format!(
                    "lambda0 = {}  c_eucl = {}  D^2 = {}\n",
                    e.lambda, e.casimir_eucl, e.eigenvalue_sq
                );
                for r in out.l2_table.iter().flatten() {
                    let _ = writeln!(s, "  {:<20} {}", r.lambda.to_string(), r.casimir_eucl);
                }
                s
            })
        }
    }
}

fn render_min(m: &MinEigenvalue) -> String {
    let mut s = format!("smallest eigenvalue squared = {}\n", m.value);
    if let Some(v) = &m.via_decomposition {
        let _ = writeln!(s, "  via decomposition: {v}");
    }
    let _ = writeln!(s, "  via Psi:           {}", m.via_psi);
    let _ = writeln!(s, "  closed form:       {}", m.closed_form);
    if m.fallback {
        let _ = writeln!(s, "  (decomposition too large; two routes compared)");
    }
    s
}

fn read_matrix(path: &std::path::Path) -> Res<Vec<Vec<i64>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| usage(format!("{} line {}: {e}", path.display(), i + 1)))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(usage(format!("{} holds no rows", path.display())));
    }
    Ok(rows)
}

#[derive(Serialize)]
struct Image {
    weight: String,
    #[serde(with = "spingrass_core::bigjson::nat")]
    multiplicity: BigUint,
}

fn project(
    ctx: &Ctx,
    path: &std::path::Path,
    algebras: Vec<AlgebraId>,
    divisor: i64,
    half_spin: bool,
) -> Res<String> {
    let rows = read_matrix(path)?;
    if divisor <= 0 {
        return Err(usage("--divisor must be positive"));
    }
    let img = project_generic(&rows, half_spin)?;
    if algebras.is_empty() {
        let mut images: Vec<Image> = img
            .iter()
            .map(|(w, m)| Image {
                weight: format!("[{}]", w.iter().map(|&c| fmt_half(c)).collect::<Vec<_>>().join(",")),
                multiplicity: m.clone(),
            })
            .collect();
        images.reverse();
        return ctx.emit(&images, || {
            let mut s = String::new();
            for i in &images {
                let _ = writeln!(s, "{} x{}", i.weight, i.multiplicity);
            }
            let _ = writeln!(s, "total = {}", img.total());
            s
        });
    }
    let d = peel(&img.into_weights(algebras, divisor)?)?;
    ctx.emit(&d, || {
        let mut s = String::new();
        for x in &d.summands {
            let _ = writeln!(s, "{x}  dim {}", x.dim());
        }
        let _ = writeln!(s, "total = {}", d.total_dim);
        s
    })
}
