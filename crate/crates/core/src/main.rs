use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use bihom::algebra::check_morphism;
use bihom::cohomology::cochain_space;
use bihom::derivation::{is_derivation, unflatten};
use bihom::examples::{generate_example, EXAMPLE_NAMES};
use bihom::io::{self, AnyAlgebra};
use bihom::linalg::{format_combination, format_vector, Matrix, Subspace};
use bihom::{
    adjoint_representation, central_extension, check_bihom_associative, check_bihom_lie,
    check_representation, check_subalgebra, cohomology, commutator_bihom_lie,
    derivation_extension, derivation_space, direct_sum, extension_isomorphism,
    inner_derivation_space, semidirect_product, trivial_representation, yau_twist, AlgebraMap,
    BihomLieAlgebra, Error, ExtensionCocycle, Representation,
};

/// Exact-rational checks and constructions for Bihom-Lie algebras.
///
/// Exit status: 0 when every check passes, 1 when a mathematical check fails
/// (a witness is printed), 2 on malformed input or usage errors.
#[derive(Parser)]
#[command(name = "bihom", version)]
struct Cli {
    /// Write the machine-readable result (algebra or report JSON) to FILE.
    /// Relative paths are placed under $BIHOM_OUTPUT_DIR when it is set.
    #[arg(long, global = true, value_name = "FILE")]
    emit: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Bihom-Lie axioms.
    Check {
        file: PathBuf,
        /// Also require multiplicative and invertible twists.
        #[arg(long)]
        strict: bool,
    },
    /// Check the Bihom-associative axioms.
    CheckAssoc {
        file: PathBuf,
        /// Also require multiplicative twists.
        #[arg(long)]
        strict: bool,
    },
    /// Commutator Bihom-Lie algebra of a regular Bihom-associative algebra.
    Commutator { file: PathBuf },
    /// Yau twist `{a,b} = [α a, β b]` of an ordinary Lie bracket.
    Twist { file: PathBuf },
    /// Direct sum of two Bihom-Lie algebras.
    Dsum { first: PathBuf, second: PathBuf },
    /// Semidirect product with a representation.
    Semidirect {
        file: PathBuf,
        /// `trivial`, `adjoint:S,T` or a representation file.
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
    },
    /// One-dimensional extension by a linear map D.
    ExtendDerivation {
        file: PathBuf,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// One-dimensional central extension by an antisymmetric matrix θ.
    ExtendCentral {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Isomorphism between central extensions whose cocycles differ by d f.
    IsoExtensions {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta1: String,
        #[arg(long, allow_hyphen_values = true)]
        theta2: String,
        /// Values of f on the basis, separated by `,`.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// The space of α^k β^l-derivations.
    Derivations {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
    /// The space of inner α^k β^l-derivations.
    Inner {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        file: PathBuf,
        /// `trivial`, `adjoint:S,T` or a representation file.
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        #[arg(long)]
        deg: usize,
    },
    /// Check that a matrix defines a morphism SOURCE → TARGET.
    Morphism {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Built-in parameterized examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// List the available generators.
    List,
    /// Generate an example as an algebra file.
    Gen {
        name: String,
        /// Parameter as `key=value`; repeatable.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Errors that report a mathematical failure rather than bad input.
fn is_math_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotRegular(_)
            | Error::InvalidRepresentation(_)
            | Error::InvalidCocycleCompatibility(_)
            | Error::NotCohomologous
            | Error::SingularMatrix
            | Error::InternalInvariantViolation(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) if is_math_failure(&e) => {
            println!("FAIL: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> bihom::Result<()> {
    if let Some(path) = &cli.emit {
        let path = io::output_path(path);
        fs::write(&path, text).map_err(|e| Error::Parse {
            context: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(())
}

fn emit_json(cli: &Cli, value: serde_json::Value) -> bihom::Result<()> {
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    emit(cli, &text)
}

fn strings(v: &[bihom::Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn print_matrix(m: &Matrix, indent: &str) {
    for row in m.to_rows() {
        println!("{indent}[{}]", strings(&row).join(", "));
    }
}

fn print_table(l: &BihomLieAlgebra) {
    let labels = l.labels();
    println!("{} (dim {})", l.name().unwrap_or("algebra"), l.dim());
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let v = l.basis_bracket(i, j);
            if v.iter().any(|x| *x != bihom::Scalar::from_integer(0.into())) {
                println!("  [{}, {}] = {}", labels[i], labels[j], format_combination(v, &labels));
            }
        }
    }
    println!("  alpha:");
    print_matrix(l.alpha(), "    ");
    println!("  beta:");
    print_matrix(l.beta(), "    ");
}

/// Prints the full report and returns whether the defining axioms hold.
fn report_lie(l: &BihomLieAlgebra, strict: bool) -> Outcome {
    let report = check_bihom_lie(l);
    print!("{report}");
    let ok = report.is_bihom_lie() && (!strict || report.all_passed());
    println!("bihom-lie: {}", if ok { "pass" } else { "FAIL" });
    Outcome::from_bool(ok)
}

fn lie_file(path: &Path) -> bihom::Result<BihomLieAlgebra> {
    io::load_lie(path)
}

fn representation(l: &BihomLieAlgebra, spec: &str) -> bihom::Result<Representation> {
    if spec == "trivial" {
        return Ok(trivial_representation(l));
    }
    if let Some(rest) = spec.strip_prefix("adjoint:") {
        let parsed = rest
            .split_once(',')
            .and_then(|(s, t)| Some((s.trim().parse().ok()?, t.trim().parse().ok()?)));
        let (s, t) = parsed.ok_or_else(|| Error::Parse {
            context: "--rep".into(),
            message: format!("expected adjoint:S,T with integers, got {spec:?}"),
        })?;
        return adjoint_representation(l, s, t);
    }
    let text = fs::read_to_string(spec).map_err(|e| Error::Parse {
        context: spec.into(),
        message: e.to_string(),
    })?;
    io::parse_representation(&text, l)
}

fn subspace_json(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| strings(v)).collect()
}

fn run(cli: &Cli) -> bihom::Result<Outcome> {
    match &cli.command {
        Command::Check { file, strict } => {
            let l = lie_file(file)?;
            let outcome = report_lie(&l, *strict);
            let report = check_bihom_lie(&l);
            emit_json(cli, json!({ "bihom_lie": report.is_bihom_lie(), "all_passed": report.all_passed() }))?;
            Ok(outcome)
        }
        Command::CheckAssoc { file, strict } => {
            let a = io::load_algebra(file)?.into_associative()?;
            let report = check_bihom_associative(&a);
            print!("{report}");
            let ok = report.is_bihom_associative() && (!strict || report.all_passed());
            println!("bihom-associative: {}", if ok { "pass" } else { "FAIL" });
            Ok(Outcome::from_bool(ok))
        }
        Command::Commutator { file } => {
            let a = io::load_algebra(file)?.into_associative()?;
            let pre = check_bihom_associative(&a);
            if !pre.is_bihom_associative() {
                print!("{pre}");
                println!("input is not bihom-associative");
                return Ok(Outcome::Fail);
            }
            let l = commutator_bihom_lie(&a)?;
            finish_construction(cli, &l)
        }
        Command::Twist { file } => {
            let base = lie_file(file)?;
            match yau_twist(base.bracket_tensor(), base.alpha(), base.beta()) {
                Ok(l) => {
                    let mut l = l.with_name(format!("twist({})", base.name().unwrap_or("algebra")));
                    if let Some(labels) = base.explicit_labels() {
                        l = l.with_labels(labels.to_vec())?;
                    }
                    finish_construction(cli, &l)
                }
                Err(Error::InvalidInput(msg)) => {
                    println!("FAIL: {msg}");
                    Ok(Outcome::Fail)
                }
                Err(e) => Err(e),
            }
        }
        Command::Dsum { first, second } => {
            let (a, b) = (lie_file(first)?, lie_file(second)?);
            for l in [&a, &b] {
                let pre = check_bihom_lie(l);
                if !pre.is_bihom_lie() {
                    print!("{pre}");
                    println!("summand {} is not bihom-lie", l.name().unwrap_or("?"));
                    return Ok(Outcome::Fail);
                }
            }
            finish_construction(cli, &direct_sum(&a, &b)?)
        }
        Command::Semidirect { file, rep } => {
            let l = lie_file(file)?;
            let rep = representation(&l, rep)?;
            let pre = check_representation(&rep);
            if !pre.all_passed() {
                print!("{pre}");
                println!("not a representation");
                return Ok(Outcome::Fail);
            }
            finish_construction(cli, &semidirect_product(&rep)?)
        }
        Command::ExtendDerivation { file, matrix } => {
            let l = lie_file(file)?;
            let d = io::parse_matrix(matrix)?;
            let ext = derivation_extension(&l, &d)?;
            println!(
                "D is an alpha^0 beta^1-derivation: {}",
                if is_derivation(&l, &d, 0, 1)? { "yes" } else { "no" }
            );
            finish_construction(cli, &ext)
        }
        Command::ExtendCentral { file, theta } => {
            let l = lie_file(file)?;
            let theta = ExtensionCocycle::new(io::parse_matrix(theta)?)?;
            let rep = trivial_representation(&l);
            if l.dim() >= 2 {
                let d2 = bihom::coboundary_matrix(&rep, 2)?;
                println!("d theta = {}", format_vector(&d2.apply(&theta.to_cochain())?));
            }
            let ext = central_extension(&l, &theta)?;
            finish_construction(cli, &ext)
        }
        Command::IsoExtensions { file, theta1, theta2, f } => {
            let l = lie_file(file)?;
            let t1 = ExtensionCocycle::new(io::parse_matrix(theta1)?)?;
            let t2 = ExtensionCocycle::new(io::parse_matrix(theta2)?)?;
            let f = io::parse_vector(f)?;
            let phi = extension_isomorphism(&l, &t1, &t2, &f)?;
            println!("phi:");
            print_matrix(phi.matrix(), "  ");
            let ok = check_morphism(&phi) && phi.matrix().is_invertible();
            println!("isomorphism: {}", if ok { "pass" } else { "FAIL" });
            emit_json(cli, json!({ "matrix": matrix_json(phi.matrix()), "isomorphism": ok }))?;
            Ok(Outcome::from_bool(ok))
        }
        Command::Derivations { file, k, l: lp } => {
            let l = lie_file(file)?;
            let space = derivation_space(&l, *k, *lp)?;
            print_derivations(cli, &l, "Der", *k, *lp, &space)
        }
        Command::Inner { file, k, l: lp } => {
            let l = lie_file(file)?;
            let space = inner_derivation_space(&l, *k, *lp)?;
            print_derivations(cli, &l, "Inn", *k, *lp, &space)
        }
        Command::Cohomology { file, rep, deg } => {
            let l = lie_file(file)?;
            let rep = representation(&l, rep)?;
            let pre = check_representation(&rep);
            if !pre.all_passed() {
                print!("{pre}");
                println!("not a representation");
                return Ok(Outcome::Fail);
            }
            let dim_c = cochain_space(&rep, *deg)?.dim();
            let h = cohomology(&rep, *deg)?;
            println!("degree {deg}");
            println!("  dim C = {dim_c}");
            println!("  dim Z = {}", h.dim_z);
            println!("  dim B = {}", h.dim_b);
            println!("  dim H = {}", h.dim_h);
            for v in h.cocycles.basis() {
                println!("  cocycle {}", format_vector(v));
            }
            emit_json(
                cli,
                json!({
                    "degree": deg,
                    "dim_c": dim_c,
                    "dim_z": h.dim_z,
                    "dim_b": h.dim_b,
                    "dim_h": h.dim_h,
                    "cocycles": subspace_json(&h.cocycles),
                    "coboundaries": subspace_json(&h.coboundaries),
                }),
            )?;
            Ok(Outcome::Pass)
        }
        Command::Morphism { source, target, matrix } => {
            let (src, tgt) = (lie_file(source)?, lie_file(target)?);
            let map = AlgebraMap::new(src.clone(), tgt.clone(), io::parse_matrix(matrix)?)?;
            let ok = check_morphism(&map);
            println!("morphism: {}", if ok { "pass" } else { "FAIL" });
            if let Ok(sum) = direct_sum(&src, &tgt) {
                let graph = check_subalgebra(&sum, &map.graph())?;
                println!("graph is a subalgebra: {}", if graph { "yes" } else { "no" });
            }
            Ok(Outcome::from_bool(ok))
        }
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                for name in EXAMPLE_NAMES {
                    println!("{name}");
                }
                Ok(Outcome::Pass)
            }
            ExamplesAction::Gen { name, params } => {
                let alg = generate_example(name, &io::parse_params(params)?)?;
                let text = io::emit_algebra(&alg);
                if cli.emit.is_some() {
                    emit(cli, &text)?;
                    if let AnyAlgebra::Lie(l) = &alg {
                        print_table(l);
                    }
                } else {
                    print!("{text}");
                }
                Ok(Outcome::Pass)
            }
        },
    }
}

fn finish_construction(cli: &Cli, l: &BihomLieAlgebra) -> bihom::Result<Outcome> {
    print_table(l);
    emit(cli, &io::emit_lie(l))?;
    Ok(report_lie(l, false))
}

fn print_derivations(
    cli: &Cli,
    l: &BihomLieAlgebra,
    what: &str,
    k: i64,
    lp: i64,
    space: &Subspace,
) -> bihom::Result<Outcome> {
    println!("dim {what}_(alpha^{k} beta^{lp}) = {}", space.dim());
    let mut basis = Vec::new();
    for (idx, v) in space.basis().iter().enumerate() {
        let m = unflatten(l.dim(), v)?;
        println!("  D{}:", idx + 1);
        print_matrix(&m, "    ");
        basis.push(matrix_json(&m));
    }
    emit_json(cli, json!({ "space": what, "k": k, "l": lp, "dim": space.dim(), "basis": basis }))?;
    Ok(Outcome::Pass)
}
