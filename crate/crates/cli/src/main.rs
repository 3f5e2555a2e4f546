//! `revpaste`: Reversing and Pasting from the command line.
//!
//! Exit codes: 0 on success, 1 when `verify` sees an unexpected outcome,
//! 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value as Json;

use revpaste::json::{
    matrix_from_json, matrix_to_json, poly_to_json, scalar_to_json, vector_to_json,
};
use revpaste::matrices::{symmetry_basis, SymmetryMode};
use revpaste::polynomials::format_poly;
use revpaste::verifier::{self, DomainSpec, Strategy};
use revpaste::{
    antipalindromic_basis, eigenspace_basis, exchange_matrix, generalized_cross, palindromic_basis,
    reversing_char_poly, reversing_min_poly, Error, FieldTag, Matrix, Poly, Sign, Vector,
};

#[derive(Parser, Debug)]
#[command(
    name = "revpaste",
    version,
    about = "Reversing and Pasting of vectors, polynomials and matrices"
)]
struct Cli {
    /// Field selector: q, gf:<p>, f64 or f64:<tol> [default: q; gf:3 for verify]
    #[arg(long, global = true)]
    field: Option<String>,

    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Vector operations; vectors are comma-separated scalars
    #[command(subcommand)]
    Vec(VecCmd),
    /// Polynomial operations; coefficients ascending, ambient degree = count - 1
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Matrix operations; inline rows separated by `;` or JSON via --file
    #[command(subcommand)]
    Mat(MatCmd),
    /// Generalized product of the n-1 rows of an (n-1) x n matrix
    Crossn(MatInput),
    /// Reversing as a linear map
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Check cataloged laws
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum VecCmd {
    Reverse {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    Paste {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    Dot {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    Cross3 {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    Decompose {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "pal")]
        kind: Kind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Pal,
    Anti,
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    Reverse {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    Paste {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    Decompose {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
}

#[derive(Args, Debug)]
struct MatInput {
    /// JSON matrix file, read before any inline matrices
    #[arg(long = "file")]
    files: Vec<PathBuf>,
    /// Inline matrix such as "1,2;3,4"
    #[arg(allow_hyphen_values = true)]
    first: Option<String>,
    /// Second inline matrix, for binary operations
    #[arg(allow_hyphen_values = true)]
    second: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReverseMode {
    Rows,
    Cols,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PasteMode {
    Rows,
    Cols,
    Blocks,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DecomposeMode {
    Rc,
    Full,
}

#[derive(Subcommand, Debug)]
enum MatCmd {
    Reverse {
        #[arg(long, value_enum)]
        mode: ReverseMode,
        #[command(flatten)]
        input: MatInput,
    },
    Paste {
        #[arg(long, value_enum)]
        mode: PasteMode,
        #[command(flatten)]
        input: MatInput,
    },
    Decompose {
        #[arg(long, value_enum)]
        mode: DecomposeMode,
        #[command(flatten)]
        input: MatInput,
    },
    Det(MatInput),
    Inv(MatInput),
    Trace(MatInput),
    Basis {
        /// row-pal, row-anti, col-pal, col-anti, pp, pa, ap, aa, full-pal or full-anti
        #[arg(long)]
        mode: SymmetryMode,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TransformCmd {
    Exchange {
        #[arg(long)]
        n: usize,
    },
    Charpoly {
        #[arg(long)]
        n: usize,
    },
    Minpoly {
        #[arg(long)]
        n: usize,
    },
    Eigenbasis {
        #[arg(long)]
        n: usize,
        /// +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
    },
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["law", "suite"]))]
struct VerifyArgs {
    /// Law id or alias, e.g. M8 or M-det-sign
    #[arg(long)]
    law: Option<String>,
    /// Run the whole catalog
    #[arg(long)]
    suite: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Random cases; exhaustive enumeration when absent
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = verifier::DEFAULT_BUDGET)]
    budget: u64,
}

/// Plain text or JSON rendering of one result.
struct Output {
    text: String,
    json: Json,
}

impl Output {
    fn vector(v: &Vector) -> Self {
        Output {
            text: v.to_string(),
            json: vector_to_json(v),
        }
    }

    fn matrix(m: &Matrix) -> Self {
        Output {
            text: m.to_string(),
            json: matrix_to_json(m),
        }
    }

    fn poly(p: &Poly) -> Self {
        Output {
            text: p.to_string(),
            json: poly_to_json(p),
        }
    }

    fn vectors(vs: &[Vector]) -> Self {
        Output {
            text: vs
                .iter()
                .map(Vector::to_string)
                .collect::<Vec<_>>()
                .join("\n"),
            json: Json::Array(vs.iter().map(vector_to_json).collect()),
        }
    }

    fn labelled(parts: &[(&str, Output)]) -> Self {
        let text = parts
            .iter()
            .map(|(k, o)| format!("{k}: {}", o.text))
            .collect::<Vec<_>>()
            .join("\n");
        let json = Json::Object(
            parts
                .iter()
                .map(|(k, o)| (k.to_string(), o.json.clone()))
                .collect(),
        );
        Output { text, json }
    }
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn matrices(tag: FieldTag, input: &MatInput, want: usize) -> CliResult<Vec<Matrix>> {
    let mut out = Vec::new();
    for path in &input.files {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let value: Json = serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{}: invalid JSON: {e}", path.display())))?;
        out.push(matrix_from_json(tag, &value)?);
    }
    for text in input.first.iter().chain(&input.second) {
        out.push(Matrix::parse(tag, text)?);
    }
    if out.len() != want {
        return Err(Failure::Usage(format!(
            "expected {want} matrix argument(s), got {}",
            out.len()
        )));
    }
    Ok(out)
}

fn poly(tag: FieldTag, text: &str) -> CliResult<Poly> {
    Ok(Poly::from_coeffs(Vector::parse(tag, text)?)?)
}

fn run_vec(tag: FieldTag, cmd: &VecCmd) -> CliResult<Output> {
    let parse = |s: &str| Vector::parse(tag, s);
    Ok(match cmd {
        VecCmd::Reverse { v } => Output::vector(&parse(v)?.reverse()),
        VecCmd::Paste { v, w } => Output::vector(&parse(v)?.paste(&parse(w)?)?),
        VecCmd::Dot { v, w } => {
            let s = parse(v)?.dot(&parse(w)?)?;
            Output {
                text: s.to_string(),
                json: scalar_to_json(&s),
            }
        }
        VecCmd::Cross3 { v, w } => Output::vector(&parse(v)?.cross3(&parse(w)?)?),
        VecCmd::Decompose { v } => {
            let parts = parse(v)?.decompose()?;
            Output::labelled(&[
                ("pal", Output::vector(&parts.pal)),
                ("anti", Output::vector(&parts.anti)),
            ])
        }
        VecCmd::Basis { n, kind } => match kind {
            Kind::Pal => Output::vectors(&palindromic_basis(*n, tag)),
            Kind::Anti => Output::vectors(&antipalindromic_basis(*n, tag)?),
        },
    })
}

fn run_poly(tag: FieldTag, cmd: &PolyCmd) -> CliResult<Output> {
    Ok(match cmd {
        PolyCmd::Reverse { p } => Output::poly(&poly(tag, p)?.reverse()),
        PolyCmd::Paste { p, q } => Output::poly(&poly(tag, p)?.paste(&poly(tag, q)?)?),
        PolyCmd::Decompose { p } => {
            let (pal, anti) = poly(tag, p)?.decompose()?;
            Output::labelled(&[("pal", Output::poly(&pal)), ("anti", Output::poly(&anti))])
        }
    })
}

fn run_mat(tag: FieldTag, cmd: &MatCmd) -> CliResult<Output> {
    let one = |input| -> CliResult<Matrix> { Ok(matrices(tag, input, 1)?.remove(0)) };
    Ok(match cmd {
        MatCmd::Reverse { mode, input } => {
            let a = one(input)?;
            Output::matrix(&match mode {
                ReverseMode::Rows => a.reverse_rows(),
                ReverseMode::Cols => a.reverse_cols(),
                ReverseMode::Full => a.reverse_full(),
            })
        }
        MatCmd::Paste { mode, input } => {
            let ms = matrices(tag, input, 2)?;
            let (a, b) = (&ms[0], &ms[1]);
            Output::matrix(&match mode {
                PasteMode::Rows => a.paste_rows(b)?,
                PasteMode::Cols => a.paste_cols(b)?,
                PasteMode::Blocks => a.paste_blocks(b)?,
            })
        }
        MatCmd::Decompose { mode, input } => {
            let a = one(input)?;
            match mode {
                DecomposeMode::Rc => {
                    let q = a.decompose_rc()?;
                    Output::labelled(&[
                        ("pp", Output::matrix(&q.pp)),
                        ("pa", Output::matrix(&q.pa)),
                        ("ap", Output::matrix(&q.ap)),
                        ("aa", Output::matrix(&q.aa)),
                    ])
                }
                DecomposeMode::Full => {
                    let (pal, anti) = a.decompose_full()?;
                    Output::labelled(&[
                        ("pal", Output::matrix(&pal)),
                        ("anti", Output::matrix(&anti)),
                    ])
                }
            }
        }
        MatCmd::Det(input) => {
            let d = one(input)?.det()?;
            Output {
                text: d.to_string(),
                json: scalar_to_json(&d),
            }
        }
        MatCmd::Inv(input) => Output::matrix(&one(input)?.inverse()?),
        MatCmd::Trace(input) => {
            let t = one(input)?.trace()?;
            Output {
                text: t.to_string(),
                json: scalar_to_json(&t),
            }
        }
        MatCmd::Basis { mode, n, m } => {
            let basis = symmetry_basis(*n, *m, *mode, tag)?;
            Output {
                text: basis
                    .iter()
                    .map(Matrix::to_string)
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: Json::Array(basis.iter().map(matrix_to_json).collect()),
            }
        }
    })
}

fn run_transform(tag: FieldTag, cmd: &TransformCmd) -> CliResult<Output> {
    let polynomial = |p: Poly| Output {
        text: format_poly(&p, "x"),
        json: poly_to_json(&p),
    };
    Ok(match cmd {
        TransformCmd::Exchange { n } => Output::matrix(&exchange_matrix(*n, tag)),
        TransformCmd::Charpoly { n } => polynomial(reversing_char_poly(*n, tag)),
        TransformCmd::Minpoly { n } => polynomial(reversing_min_poly(*n, tag)),
        TransformCmd::Eigenbasis { n, sign } => Output::vectors(&eigenspace_basis(*n, *sign, tag)?),
    })
}

/// Returns the JSON document, the summary table and whether everything went as expected.
fn run_verify(tag: FieldTag, args: &VerifyArgs) -> CliResult<(Json, Option<String>, bool)> {
    let strategy = match args.trials {
        Some(trials) => Strategy::Random {
            trials,
            seed: args.seed,
        },
        None => Strategy::Exhaustive,
    };
    let mut domain = DomainSpec {
        field: tag,
        dims: Default::default(),
        strategy,
        budget: args.budget,
    };
    domain.dims.n = args.n;
    domain.dims.m = args.m;
    domain.dims.p = args.p;
    if args.suite {
        let reports = verifier::run_suite(&domain);
        let doc = Json::Array(reports.iter().map(|r| r.to_json()).collect());
        Ok((
            doc,
            Some(verifier::summary_table(&reports)),
            verifier::suite_passed(&reports),
        ))
    } else {
        let law = args.law.as_deref().expect("clap requires --law or --suite");
        let report = verifier::check_law(law, &domain)?;
        Ok((report.to_json(), None, report.as_expected()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_field = if matches!(cli.command, Command::Verify(_)) {
        "gf:3"
    } else {
        "q"
    };
    let tag = match FieldTag::parse(cli.field.as_deref().unwrap_or(default_field)) {
        Ok(tag) => tag,
        Err(e) => return fail(Failure::Input(e)),
    };
    let result = match &cli.command {
        Command::Vec(cmd) => run_vec(tag, cmd),
        Command::Poly(cmd) => run_poly(tag, cmd),
        Command::Mat(cmd) => run_mat(tag, cmd),
        Command::Crossn(input) => matrices(tag, input, 1)
            .and_then(|ms| Ok(Output::vector(&generalized_cross(&ms[0].row_vectors())?))),
        Command::Transform(cmd) => run_transform(tag, cmd),
        Command::Verify(args) => {
            return match run_verify(tag, args) {
                Ok((doc, table, expected)) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("serializable")
                    );
                    if let Some(table) = table {
                        print!("{table}");
                    }
                    if expected {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(f) => fail(f),
            };
        }
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(msg) => eprintln!("error: {msg}\n\nFor more information, try '--help'."),
        Failure::Input(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(2)
}
