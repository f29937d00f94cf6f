//! Command-line front end. [`run`] parses arguments, writes to the given
//! sinks and returns the process exit code: 0 ok, 1 a check failed,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra_core::expr::{format_element, parse_element, parse_forest, parse_tree};
use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::Poly;
use crate::algebra_core::scalar::{parse_rational, Rational};
use crate::algebra_core::tree::{Alphabet, Tree};
use crate::combinatorics::{
    bernoulli_number, compositions, descent_class_size, Composition, Conventions, Mutation, Permutation,
};
use crate::error::{Error, Result};
use crate::grossman_larson::{brace, expand_forest_with, gl_product, graft, GLSeries, ProductMode};
use crate::identities::{run_suite_with, verify, CheckParams, CheckReport, ModelKind, SuiteLevel};
use crate::magnus::{gl_magnus_fixed_point_with, magnus_in_model, mps_log};
use crate::ode::{dyson_series, float_table, parse_grid, texp_prelie_form, total, Orientation};
use crate::rota_baxter::free::letter;
use crate::rota_baxter::{
    double_product, iterated_r_perm, parse_rb, pre_lie_left, pre_lie_right, rb_normal_form, rb_normal_form_with,
    symmetrized_iterated_r, FreeRb, RbExpr, Strategy,
};

const DEFAULT_ORDER: &str = "4";

#[derive(Parser, Debug)]
#[command(name = "prelie", version, about = "Exact pre-Lie, Grossman-Larson and Rota-Baxter computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Grossman-Larson products, grafting, braces and forest expansion
    #[command(subcommand)]
    Gl(GlCommand),
    /// Free Rota-Baxter algebra with formal weight `th`
    #[command(subcommand)]
    Rb(RbCommand),
    /// Pre-Lie Magnus expansion
    #[command(subcommand)]
    Magnus(MagnusCommand),
    /// Descent-class logarithm of the time-ordered exponential of U(t)
    Mps {
        #[command(flatten)]
        order: Order,
        /// File holding a matrix of polynomials in t, or `-` for stdin
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Time-ordered exponentials of U(t)
    #[command(subcommand)]
    Ode(OdeCommand),
    /// Combinatorial tables
    #[command(subcommand)]
    Tables(TablesCommand),
    /// Run identity checks
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Order {
    /// Truncation order
    #[arg(long, env = "PRELIE_ORDER", default_value = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum GlCommand {
    /// Grossman-Larson product of two elements
    Mul { x: String, y: String },
    /// Graft the tree S onto every vertex of T
    Graft { t: String, s: String },
    /// Symmetric brace {L; F}
    Brace { l: String, forest: String },
    /// Rewrite a forest as a signed sum of products over admissible chains
    Expand {
        forest: String,
        /// Also print every chain with its term
        #[arg(long)]
        chains: bool,
    },
}

#[derive(Subcommand, Debug)]
enum RbCommand {
    /// Reduce an expression to normal form
    NormalForm {
        expr: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Recursive)]
        strategy: StrategyArg,
    },
    /// Pre-Lie product of two expressions
    PreLie {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// Double product a * b = R(a)b + aR(b) + th ab
    Double { a: String, b: String },
    /// Iterated operator on the given expressions
    Iterate {
        #[arg(required = true)]
        args: Vec<String>,
        /// One-line permutation applied to the arguments, e.g. 2,1,3
        #[arg(long, conflicts_with = "symmetrize")]
        perm: Option<String>,
        /// Sum over all permutations
        #[arg(long)]
        symmetrize: bool,
    },
}

#[derive(Subcommand, Debug)]
enum MagnusCommand {
    /// Magnus series of the one-vertex tree `a`
    Trees {
        #[command(flatten)]
        order: Order,
        /// Take powers in the forest product instead of the GL product
        #[arg(long)]
        forest_powers: bool,
    },
    /// Magnus series of the letter `a` in the free Rota-Baxter algebra
    Model {
        #[command(flatten)]
        order: Order,
        /// Substitute a rational value for the weight `th`
        #[arg(long)]
        weight: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum OdeCommand {
    /// Dyson series, one iterated integral per degree
    Dyson(OdeArgs),
    /// Composition-sum form of the time-ordered exponential
    Texp(OdeArgs),
}

#[derive(Args, Debug)]
struct OdeArgs {
    #[command(flatten)]
    order: Order,
    #[arg(long)]
    matrix: PathBuf,
    /// `left` solves Y' = UY, `right` solves Y' = YU
    #[arg(long, value_enum, default_value_t = OrientationArg::Right)]
    orientation: OrientationArg,
    /// Also print floating-point values of the truncated sum on a:b:steps
    #[arg(long)]
    float_grid: Option<String>,
}

#[derive(Subcommand, Debug)]
enum TablesCommand {
    /// c-coefficients of all compositions of n
    CCoeffs {
        #[arg(long)]
        n: usize,
    },
    /// Admissible partition chains of {1..n}
    Chains {
        #[arg(long)]
        n: usize,
    },
    /// Bernoulli numbers B_0..B_n
    Bernoulli {
        #[arg(long)]
        n: usize,
    },
    /// Sizes of descent classes in S_n
    Descents {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check id
    #[arg(long, conflicts_with = "suite", required_unless_present = "suite")]
    check: Option<String>,
    /// quick or full
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// tree, free, matrix-poly, matrix-seq or laurent-pole
    #[arg(long)]
    model: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    /// Weight of the sequence model
    #[arg(long)]
    weight: Option<String>,
    /// Corrupt one convention: b1, admissibility, or c:<parts> such as c:1,1
    #[arg(long)]
    mutate: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
    Innermost,
    Recursive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrientationArg {
    Left,
    Right,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Precondition(format!("i/o: {e}"))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let mut lines = Vec::new();
    let code = match cmd {
        Command::Gl(c) => gl(c, &mut lines).map(|_| 0)?,
        Command::Rb(c) => rb(c, &mut lines).map(|_| 0)?,
        Command::Magnus(c) => magnus(c, &mut lines).map(|_| 0)?,
        Command::Mps { order, matrix } => {
            let u = read_matrix(&matrix)?;
            for (d, x) in mps_log(&u, order.order)?.iter().enumerate() {
                lines.push(format!("degree {}: {x}", d + 1));
            }
            0
        }
        Command::Ode(c) => ode(c, &mut lines).map(|_| 0)?,
        Command::Tables(c) => tables(c, &mut lines).map(|_| 0)?,
        Command::Verify(args) => run_verify(args, &mut lines)?,
    };
    for l in lines {
        writeln!(out, "{l}").map_err(io_err)?;
    }
    Ok(code)
}

fn element(s: &str) -> Result<crate::algebra_core::lincomb::GLVector> {
    parse_element(s, &Alphabet::open())
}

fn tree(s: &str) -> Result<Tree> {
    parse_tree(s, &Alphabet::open())
}

fn gl(cmd: GlCommand, lines: &mut Vec<String>) -> Result<()> {
    match cmd {
        GlCommand::Mul { x, y } => lines.push(format_element(&gl_product(&element(&x)?, &element(&y)?))),
        GlCommand::Graft { t, s } => lines.push(format_element(&graft(&tree(&t)?, &tree(&s)?))),
        GlCommand::Brace { l, forest } => {
            lines.push(format_element(&brace(&tree(&l)?, &parse_forest(&forest, &Alphabet::open())?)))
        }
        GlCommand::Expand { forest, chains } => {
            let f = parse_forest(&forest, &Alphabet::open())?;
            let ts = f.trees();
            let conventions = Conventions::standard();
            if chains {
                let vs: Vec<_> = ts.iter().cloned().map(crate::algebra_core::lincomb::GLVector::from_tree).collect();
                for c in conventions.chains(ts.len())? {
                    let term = c
                        .blocks()
                        .iter()
                        .map(|b| crate::grossman_larson::block_element(&vs, b))
                        .reduce(|a, b| gl_product(&a, &b))
                        .expect("chains are nonempty");
                    lines.push(format!("{c} sign={} : {}", c.sign(), format_element(&term)));
                }
            }
            lines.push(format_element(&expand_forest_with(ts, &conventions)?));
        }
    }
    Ok(())
}

fn rb_arg(s: &str) -> Result<RbExpr> {
    Ok(rb_normal_form(&parse_rb(s)?))
}

fn rb(cmd: RbCommand, lines: &mut Vec<String>) -> Result<()> {
    let m = FreeRb;
    let x = match cmd {
        RbCommand::NormalForm { expr, strategy } => {
            let strategy = match strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
                StrategyArg::Innermost => Strategy::Innermost,
                StrategyArg::Recursive => Strategy::Recursive,
            };
            rb_normal_form_with(&parse_rb(&expr)?, strategy)
        }
        RbCommand::PreLie { a, b, side } => {
            let (a, b) = (rb_arg(&a)?, rb_arg(&b)?);
            match side {
                Side::Left => pre_lie_left(&m, &a, &b)?,
                Side::Right => pre_lie_right(&m, &a, &b)?,
            }
        }
        RbCommand::Double { a, b } => double_product(&m, &rb_arg(&a)?, &rb_arg(&b)?)?,
        RbCommand::Iterate { args, perm, symmetrize } => {
            let xs = args.iter().map(|s| rb_arg(s)).collect::<Result<Vec<_>>>()?;
            if symmetrize {
                symmetrized_iterated_r(&m, &xs)?
            } else {
                let sigma = match perm {
                    Some(p) => parse_permutation(&p)?,
                    None => Permutation::identity(xs.len()),
                };
                iterated_r_perm(&m, &xs, &sigma)?
            }
        }
    };
    lines.push(x.to_string());
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::syntax(0, format!("expected a positive integer, got `{p}`"))))
        .collect()
}

fn parse_permutation(s: &str) -> Result<Permutation> {
    Permutation::new(parse_list(s)?)
}

fn magnus(cmd: MagnusCommand, lines: &mut Vec<String>) -> Result<()> {
    match cmd {
        MagnusCommand::Trees { order, forest_powers } => {
            let mode = if forest_powers { ProductMode::Commutative } else { ProductMode::Star };
            let om: GLSeries = gl_magnus_fixed_point_with(order.order, mode, &Conventions::standard())?;
            for d in 1..=order.order {
                lines.push(format!("degree {d}: {}", format_element(om.component(d))));
            }
        }
        MagnusCommand::Model { order, weight } => {
            let weight = weight.map(|w| parse_rational(&w)).transpose()?;
            let om = magnus_in_model(&FreeRb, &letter("a"), order.order, &Conventions::standard())?;
            for (d, x) in om.iter().enumerate() {
                let x = match &weight {
                    Some(w) => substitute_weight(x, w),
                    None => x.clone(),
                };
                lines.push(format!("degree {}: {x}", d + 1));
            }
        }
    }
    Ok(())
}

/// Evaluates the `th`-polynomial coefficients at `w`.
fn substitute_weight(x: &RbExpr, w: &Rational) -> RbExpr {
    x.iter().map(|(k, c)| (k.clone(), Poly::new(vec![c.eval(w)]))).collect()
}

fn read_matrix(path: &PathBuf) -> Result<Matrix<Poly>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io_err)?;
    }
    Matrix::parse(text.trim())
}

fn ode(cmd: OdeCommand, lines: &mut Vec<String>) -> Result<()> {
    let (args, texp) = match cmd {
        OdeCommand::Dyson(a) => (a, false),
        OdeCommand::Texp(a) => (a, true),
    };
    let u = read_matrix(&args.matrix)?;
    let orientation = match args.orientation {
        OrientationArg::Left => Orientation::Left,
        OrientationArg::Right => Orientation::Right,
    };
    let terms = if texp {
        if matches!(orientation, Orientation::Left) {
            return Err(Error::OutOfRange("the composition-sum form solves Y' = YU; use --orientation right".into()));
        }
        texp_prelie_form(&u, args.order.order, &Conventions::standard())?
    } else {
        dyson_series(&u, args.order.order, orientation)
    };
    for (k, x) in terms.iter().enumerate() {
        lines.push(format!("degree {k}: {x}"));
    }
    let sum = total(&terms);
    lines.push(format!("sum: {sum}"));
    if let Some(grid) = args.float_grid {
        lines.push("# floating-point values of the truncated sum, not exact".into());
        for (t, values) in float_table(&sum, &parse_grid(&grid)?) {
            let row: Vec<String> = values.iter().map(f64::to_string).collect();
            lines.push(format!("{t},{}", row.join(",")));
        }
    }
    Ok(())
}

fn tables(cmd: TablesCommand, lines: &mut Vec<String>) -> Result<()> {
    match cmd {
        TablesCommand::CCoeffs { n } => {
            for c in compositions(n) {
                lines.push(format!("{c} -> {}", Conventions::standard().c_coefficient(&c)?));
            }
        }
        TablesCommand::Chains { n } => {
            let chains = Conventions::standard().chains(n)?;
            lines.push(format!("count: {}", chains.len()));
            for c in chains {
                lines.push(format!("{c} sign={}", c.sign()));
            }
        }
        TablesCommand::Bernoulli { n } => {
            for k in 0..=n {
                lines.push(format!("B{k} = {}", bernoulli_number(k)));
            }
        }
        TablesCommand::Descents { n } => {
            if n == 0 || n > 8 {
                return Err(Error::OutOfRange("descent tables support 1 <= n <= 8".into()));
            }
            for mask in 0..1usize << (n - 1) {
                let s: std::collections::BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let inner: Vec<String> = s.iter().map(usize::to_string).collect();
                lines.push(format!("{{{}}} -> {}", inner.join(","), descent_class_size(n, &s)));
            }
        }
    }
    Ok(())
}

fn parse_mutation(s: &str) -> Result<Mutation> {
    match s {
        "b1" => Ok(Mutation::FlipBernoulliOne),
        "admissibility" => Ok(Mutation::ReverseAdmissibility),
        _ => match s.strip_prefix("c:") {
            Some(parts) => Ok(Mutation::FlipCCoefficient(Composition::new(parse_list(parts)?)?)),
            None => Err(Error::OutOfRange(format!("unknown mutation `{s}`"))),
        },
    }
}

fn run_verify(args: VerifyArgs, lines: &mut Vec<String>) -> Result<i32> {
    let conventions = match &args.mutate {
        Some(m) => Conventions::mutated(parse_mutation(m)?),
        None => Conventions::standard(),
    };
    let reports: Vec<CheckReport> = match (&args.check, &args.suite) {
        (Some(id), _) => {
            let mut p = CheckParams::default().seed(args.seed).conventions(conventions);
            p.n = args.n;
            p.samples = args.samples;
            p.model = args.model.as_deref().map(str::parse::<ModelKind>).transpose()?;
            if let Some(w) = &args.weight {
                p.weight = parse_rational(w)?;
            }
            vec![verify(id, &p)?]
        }
        (None, Some(level)) => run_suite_with(level.parse::<SuiteLevel>()?, args.seed, &conventions),
        (None, None) => unreachable!("clap requires one of --check and --suite"),
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        lines.push(r.to_string());
    }
    if args.suite.is_some() {
        lines.push(format!("summary: {} passed, {failed} failed", reports.len() - failed));
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
