//! The command-line surface. [`run`] never exits the process; it returns the
//! exit code and both output streams so tests can drive it directly.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use trihom::algebras::{check_3homldend, check_3homlie, check_3hompre, commutator_lie, horizontal_prelie, subadjacent_lie, vertical_prelie};
use trihom::nijenhuis::{
    check_deformation, check_nijenhuis, check_trivial_deformation, first_order, morphism_report,
    nijenhuis_deform, second_order,
};
use trihom::operators::{
    compatible_ldend, ldend_from_commuting_rb, ldend_from_o, ldend_from_rb, ldend_from_symplectic,
    ldend_regular_rep, prelie_from_o, rb_prelie, trace_3homlie, trace_rb_ldend,
};
use trihom::representations::{
    adjoint_rep, check_lie_rep, check_prelie_rep, coadjoint_rep, dual_lie_rep, prelie_adjoint,
    rep_derived_identities, semidirect_lie, semidirect_prelie,
};
use trihom::structures::{
    classify_complex, classify_product, complex_identities, complexify, j_twisted_products,
    product_identities, real_part, ComplexCandidate, ProductCandidate,
};
use trihom::{
    GaussRational, LieOOperator, Matrix, NijenhuisCandidate, PreLieOOperator, Rational, Report,
    Scalar, SymplecticForm, TernaryAlgebra, ThreeHomLDend, ThreeHomLie, ThreeHomPreLie,
};

use crate::convert::{self, ConvertError};
use crate::document::{Document, DocumentError, Kind, Mode};
use crate::output::{render, Format};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(name = "trihom", version, about = "Exact checks and constructions for ternary Hom-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of the object in a document
    Verify {
        file: PathBuf,
        /// Suite to run; defaults to the main axioms of the document kind
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Run every suite that applies to the document
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Build a new document from existing ones
    Derive {
        #[arg(value_enum)]
        construction: Construction,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Output file; the document is printed when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a product or complex structure on an L-dendriform algebra
    Classify {
        structure: PathBuf,
        algebra: PathBuf,
        /// Require only the algebraic conditions, not integrability
        #[arg(long)]
        almost: bool,
        /// Structure type; inferred from the square of the map by default
        #[arg(long = "as", value_enum)]
        as_kind: Option<StructureKind>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Deform an algebra by a Nijenhuis operator
    Deform {
        algebra: PathBuf,
        #[arg(long)]
        nijenhuis: PathBuf,
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Write the deformed algebra here
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StructureKind {
    Product,
    Complex,
}

/// Named constructions with their input kinds, in argument order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// 3hom_prelie -> 3hom_lie
    Subadjacent,
    /// 3hom_ldend -> 3hom_prelie
    Horizontal,
    /// 3hom_ldend -> 3hom_prelie
    Vertical,
    /// 3hom_ldend -> 3hom_lie
    Commutator,
    /// 3hom_lie -> rep
    Adjoint,
    /// 3hom_lie -> rep
    Coadjoint,
    /// rep -> rep
    Dual,
    /// rep -> 3hom_lie
    Semidirect,
    /// 3hom_prelie -> prelie_rep
    PrelieAdjoint,
    /// prelie_rep -> 3hom_prelie
    SemidirectPrelie,
    /// 3hom_ldend -> prelie_rep
    Regular,
    /// rep, linear_map -> 3hom_prelie
    PrelieFromO,
    /// prelie_rep, linear_map -> 3hom_ldend
    LdendFromO,
    /// 3hom_lie, linear_map -> 3hom_prelie
    RbPrelie,
    /// 3hom_prelie, linear_map -> 3hom_ldend
    LdendFromRb,
    /// 3hom_lie, linear_map, linear_map -> 3hom_ldend
    CommutingRb,
    /// prelie_rep, linear_map -> 3hom_ldend
    Compatible,
    /// 3hom_prelie, bilinear_form -> 3hom_ldend
    Symplectic,
    /// hom_lie, covector -> 3hom_lie
    Trace,
    /// hom_lie, covector, linear_map, linear_map -> 3hom_ldend
    TraceRb,
    /// algebra, linear_map -> algebra of the same kind
    YauTwist,
    /// 3hom_ldend, linear_map -> 3hom_ldend
    JTwisted,
    /// real 3hom_ldend -> complex 3hom_ldend
    Complexify,
    /// complex 3hom_ldend -> real 3hom_ldend
    RealPart,
}

impl Construction {
    fn arity(self) -> usize {
        use Construction::*;
        match self {
            Subadjacent | Horizontal | Vertical | Commutator | Adjoint | Coadjoint | Dual
            | Semidirect | PrelieAdjoint | SemidirectPrelie | Regular | Complexify | RealPart => 1,
            PrelieFromO | LdendFromO | RbPrelie | LdendFromRb | Compatible | Symplectic | Trace
            | YauTwist | JTwisted => 2,
            CommutingRb => 3,
            TraceRb => 4,
        }
    }

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: DocumentError },
    #[error(transparent)]
    Convert(#[from] ConvertError),
    #[error(transparent)]
    Core(#[from] trihom::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Output of a command that completed: stdout text and whether every check
/// passed.
struct Done {
    text: String,
    passed: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_PASS, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(done) => Outcome {
            code: if done.passed { EXIT_PASS } else { EXIT_FAIL },
            stdout: done.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cmd: Command) -> Result<Done> {
    match cmd {
        Command::Verify { file, suite, format } => {
            let doc = load(&file)?;
            let available = suites(doc.kind);
            let name = match suite {
                Some(s) if available.contains(&s.as_str()) => s,
                Some(s) => return Err(unknown_suite(&s, doc.kind)),
                None => available
                    .first()
                    .ok_or_else(|| unknown_suite("", doc.kind))?
                    .to_string(),
            };
            let report = match doc.mode {
                Mode::Real => run_suite::<Rational>(&doc, &name)?,
                Mode::Complex => run_suite::<GaussRational>(&doc, &name)?,
            };
            Ok(reports_done(vec![report], format))
        }
        Command::Report { file, format } => {
            let doc = load(&file)?;
            if suites(doc.kind).is_empty() {
                return Err(unknown_suite("", doc.kind));
            }
            let mut reports = Vec::new();
            for name in suites(doc.kind) {
                reports.push(match doc.mode {
                    Mode::Real => run_suite::<Rational>(&doc, name)?,
                    Mode::Complex => run_suite::<GaussRational>(&doc, name)?,
                });
            }
            Ok(reports_done(reports, format))
        }
        Command::Derive { construction, files, output } => {
            if files.len() != construction.arity() {
                return Err(CliError::Usage(format!(
                    "`{}` takes {} input file(s), got {}",
                    construction.name(),
                    construction.arity(),
                    files.len()
                )));
            }
            let docs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let mode = docs[0].mode;
            if let Some(d) = docs.iter().find(|d| d.mode != mode) {
                return Err(CliError::Usage(format!(
                    "inputs mix {} and {} documents",
                    mode.name(),
                    d.mode.name()
                )));
            }
            let out = match mode {
                Mode::Real => derive::<Rational>(construction, &docs)?,
                Mode::Complex => derive::<GaussRational>(construction, &docs)?,
            };
            emit(out, output.as_deref())
        }
        Command::Classify { structure, algebra, almost, as_kind, format } => {
            let (s, a) = (load(&structure)?, load(&algebra)?);
            match a.mode {
                Mode::Real => classify::<Rational>(&s, &a, almost, as_kind, format),
                Mode::Complex => classify::<GaussRational>(&s, &a, almost, as_kind, format),
            }
        }
        Command::Deform { algebra, nijenhuis, order, output, format } => {
            if order == 0 {
                return Err(CliError::Usage("`--order` must be at least 1".to_string()));
            }
            let (a, n) = (load(&algebra)?, load(&nijenhuis)?);
            let (reports, deformed) = match a.mode {
                Mode::Real => deform::<Rational>(&a, &n, order)?,
                Mode::Complex => deform::<GaussRational>(&a, &n, order)?,
            };
            if let (Some(doc), Some(path)) = (deformed, output) {
                write(&path, &doc)?;
            }
            Ok(reports_done(reports, format))
        }
    }
}

fn unknown_suite(name: &str, kind: Kind) -> CliError {
    let list = suites(kind);
    if list.is_empty() {
        CliError::Usage(format!("{kind} documents have no checks to run"))
    } else {
        CliError::Usage(format!("no suite `{name}` for {kind} documents (available: {})", list.join(", ")))
    }
}

fn load(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Document::parse(&text).map_err(|source| CliError::Document { path: path.to_path_buf(), source })
}

fn write(path: &Path, doc: &Document) -> Result<()> {
    fs::write(path, doc.serialize()).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(doc: Document, output: Option<&Path>) -> Result<Done> {
    match output {
        Some(path) => {
            write(path, &doc)?;
            Ok(Done { text: String::new(), passed: true })
        }
        None => Ok(Done { text: doc.serialize(), passed: true }),
    }
}

fn reports_done(reports: Vec<Report>, format: Format) -> Done {
    Done {
        passed: reports.iter().all(Report::passed),
        text: render(&reports, format),
    }
}

/// Suites available per document kind; the first is the default.
pub fn suites(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Lie => &["3hom_lie", "3hom_prelie"],
        Kind::PreLie => &["3hom_prelie"],
        Kind::LDend => &["3hom_ldend", "horizontal", "vertical"],
        Kind::HomLie => &["hom_lie"],
        Kind::Rep => &["lie_rep", "rep_derived"],
        Kind::PreLieRep => &["prelie_rep"],
        Kind::LinearMap | Kind::BilinearForm | Kind::Covector => &[],
    }
}

fn run_suite<S: Scalar>(doc: &Document, name: &str) -> Result<Report> {
    let mut report = match (doc.kind, name) {
        (Kind::Lie, "3hom_lie") => check_3homlie(&convert::lie::<S>(doc)?),
        (Kind::Lie, "3hom_prelie") => check_3hompre(&convert::lie::<S>(doc)?.as_prelie()),
        (Kind::PreLie, "3hom_prelie") => check_3hompre(&convert::prelie::<S>(doc)?),
        (Kind::LDend, "3hom_ldend") => check_3homldend(&convert::ldend::<S>(doc)?),
        (Kind::LDend, "horizontal") => {
            let a = convert::ldend::<S>(doc)?;
            check_3hompre(&ThreeHomPreLie::new(a.horizontal(), a.alpha.clone())?)
        }
        (Kind::LDend, "vertical") => {
            let a = convert::ldend::<S>(doc)?;
            check_3hompre(&ThreeHomPreLie::new(a.vertical(), a.alpha.clone())?)
        }
        (Kind::HomLie, "hom_lie") => convert::hom_lie::<S>(doc)?.check_skew(),
        (Kind::Rep, "lie_rep") => check_lie_rep(&convert::lie_rep::<S>(doc)?)?,
        (Kind::Rep, "rep_derived") => rep_derived_identities(&convert::lie_rep::<S>(doc)?)?,
        (Kind::PreLieRep, "prelie_rep") => check_prelie_rep(&convert::prelie_rep::<S>(doc)?)?,
        _ => return Err(unknown_suite(name, doc.kind)),
    };
    if report.suite != name {
        report.suite = format!("{name}/{}", report.suite);
    }
    Ok(report)
}

fn derive<S: Scalar>(c: Construction, d: &[Document]) -> Result<Document> {
    use convert::*;
    use Construction::*;
    let doc = match c {
        Subadjacent => lie_doc(&subadjacent_lie(&prelie::<S>(&d[0])?)?),
        Horizontal => prelie_doc(&horizontal_prelie(&ldend::<S>(&d[0])?)?),
        Vertical => prelie_doc(&vertical_prelie(&ldend::<S>(&d[0])?)?),
        Commutator => lie_doc(&commutator_lie(&ldend::<S>(&d[0])?)?),
        Adjoint => lie_rep_doc(&adjoint_rep(&lie::<S>(&d[0])?)),
        Coadjoint => lie_rep_doc(&coadjoint_rep(&lie::<S>(&d[0])?)?),
        Dual => lie_rep_doc(&dual_lie_rep(&lie_rep::<S>(&d[0])?)?),
        Semidirect => lie_doc(&semidirect_lie(&lie_rep::<S>(&d[0])?)),
        PrelieAdjoint => prelie_rep_doc(&prelie_adjoint(&prelie::<S>(&d[0])?)),
        SemidirectPrelie => prelie_doc(&semidirect_prelie(&prelie_rep::<S>(&d[0])?)),
        Regular => prelie_rep_doc(&ldend_regular_rep(&ldend::<S>(&d[0])?)),
        PrelieFromO => {
            let t = LieOOperator::new(linear_map::<S>(&d[1])?, lie_rep(&d[0])?)?;
            prelie_doc(&prelie_from_o(&t)?)
        }
        LdendFromO => {
            let t = PreLieOOperator::new(linear_map::<S>(&d[1])?, prelie_rep(&d[0])?)?;
            ldend_doc(&ldend_from_o(&t)?)
        }
        RbPrelie => prelie_doc(&rb_prelie(&lie::<S>(&d[0])?, &linear_map(&d[1])?)?),
        LdendFromRb => ldend_doc(&ldend_from_rb(&prelie::<S>(&d[0])?, &linear_map(&d[1])?)?),
        CommutingRb => ldend_doc(&ldend_from_commuting_rb(
            &lie::<S>(&d[0])?,
            &linear_map(&d[1])?,
            &linear_map(&d[2])?,
        )?),
        Compatible => {
            let t = PreLieOOperator::new(linear_map::<S>(&d[1])?, prelie_rep(&d[0])?)?;
            ldend_doc(&compatible_ldend(&t)?)
        }
        Symplectic => {
            let s = SymplecticForm::new(prelie::<S>(&d[0])?, bilinear_form(&d[1])?)?;
            ldend_doc(&ldend_from_symplectic(&s)?)
        }
        Trace => lie_doc(&trace_3homlie(&hom_lie::<S>(&d[0])?, &covector::<S>(&d[1])?)?),
        TraceRb => ldend_doc(&trace_rb_ldend(
            &hom_lie::<S>(&d[0])?,
            &covector::<S>(&d[1])?,
            &linear_map(&d[2])?,
            &linear_map(&d[3])?,
        )?),
        YauTwist => {
            let t = linear_map::<S>(&d[1])?;
            match d[0].kind {
                Kind::Lie => lie_doc(&lie::<S>(&d[0])?.yau_twist(&t)?),
                Kind::PreLie => prelie_doc(&prelie::<S>(&d[0])?.yau_twist(&t)?),
                _ => ldend_doc(&ldend::<S>(&d[0])?.yau_twist(&t)?),
            }
        }
        JTwisted => {
            let c = ComplexCandidate::new(linear_map::<S>(&d[1])?, ldend(&d[0])?)?;
            ldend_doc(&j_twisted_products(&c)?)
        }
        Complexify => ldend_doc(&complexify(&ldend::<S>(&d[0])?)?),
        RealPart => {
            let a = ldend::<GaussRational>(&d[0])?;
            ldend_doc(&real_part(&a)?)
        }
    };
    Ok(doc)
}

fn classify<S: Scalar>(
    structure: &Document,
    algebra: &Document,
    almost: bool,
    as_kind: Option<StructureKind>,
    format: Format,
) -> Result<Done> {
    let m = convert::linear_map::<S>(structure)?;
    let a = convert::ldend::<S>(algebra)?;
    let kind = as_kind.unwrap_or_else(|| {
        let square = m.try_mul(&m).ok();
        let minus = Matrix::scalar(m.rows(), -S::one());
        if square.as_ref() == Some(&minus) {
            StructureKind::Complex
        } else {
            StructureKind::Product
        }
    });
    let (label, pre, result) = match kind {
        StructureKind::Product => {
            let c = ProductCandidate::new(m, a)?;
            ("product", product_identities(&c), classify_product(&c, almost))
        }
        StructureKind::Complex => {
            let c = ComplexCandidate::new(m, a)?;
            ("complex", complex_identities(&c), classify_complex(&c, almost))
        }
    };
    match result {
        Ok(cl) => {
            let mut reports = vec![pre];
            reports.extend(cl.reports.iter().map(|(_, r)| r.clone()));
            let labels: Vec<&str> = cl.labels.iter().map(|l| l.name()).collect();
            let labels = if labels.is_empty() { "none".to_string() } else { labels.join(", ") };
            let body = render(&reports, format);
            let text = match format {
                Format::Human => format!("{label} structure: {labels}\n{body}"),
                Format::Machine => body,
            };
            Ok(Done { text, passed: true })
        }
        Err(trihom::Error::NotAProduct(r) | trihom::Error::NotAComplexStructure(r)) => {
            Ok(reports_done(vec![*r], format))
        }
        Err(e) => Err(e.into()),
    }
}

/// Conversion of the deformable algebra kinds back to documents.
trait AlgebraDoc<S: Scalar>: TernaryAlgebra<S> + Clone {
    fn load(doc: &Document) -> Result<Self>;
    fn to_doc(&self) -> Document;
}

impl<S: Scalar> AlgebraDoc<S> for ThreeHomLie<S> {
    fn load(doc: &Document) -> Result<Self> {
        Ok(convert::lie(doc)?)
    }
    fn to_doc(&self) -> Document {
        convert::lie_doc(self)
    }
}

impl<S: Scalar> AlgebraDoc<S> for ThreeHomPreLie<S> {
    fn load(doc: &Document) -> Result<Self> {
        Ok(convert::prelie(doc)?)
    }
    fn to_doc(&self) -> Document {
        convert::prelie_doc(self)
    }
}

impl<S: Scalar> AlgebraDoc<S> for ThreeHomLDend<S> {
    fn load(doc: &Document) -> Result<Self> {
        Ok(convert::ldend(doc)?)
    }
    fn to_doc(&self) -> Document {
        convert::ldend_doc(self)
    }
}

/// Reports for a Nijenhuis deformation and the deformed algebra of the
/// requested order, when `N` is Nijenhuis.
fn deform<S: Scalar>(algebra: &Document, map: &Document, order: usize) -> Result<(Vec<Report>, Option<Document>)> {
    let n = convert::linear_map::<S>(map)?;
    match algebra.kind {
        Kind::LDend => {
            let c = NijenhuisCandidate::new(n.clone(), convert::ldend::<S>(algebra)?)?;
            let nij = check_nijenhuis(&c)?;
            if !nij.passed() {
                return Ok((vec![nij], None));
            }
            let (_, mut family) = nijenhuis_deform(&c)?;
            family.order = order;
            let deformation = check_deformation(&family)?;
            let trivial = check_trivial_deformation(&c)?;
            let (mut reports, doc) = deformed_reports(&c, order)?;
            reports.splice(0..0, [nij, deformation, trivial]);
            Ok((reports, Some(doc)))
        }
        Kind::Lie | Kind::PreLie => {
            if algebra.kind == Kind::Lie {
                generic_deform::<S, ThreeHomLie<S>>(algebra, &n, order)
            } else {
                generic_deform::<S, ThreeHomPreLie<S>>(algebra, &n, order)
            }
        }
        other => Err(CliError::Usage(format!("cannot deform a {other} document"))),
    }
}

fn generic_deform<S: Scalar, A: AlgebraDoc<S>>(
    algebra: &Document,
    n: &Matrix<S>,
    order: usize,
) -> Result<(Vec<Report>, Option<Document>)> {
    if order > 2 {
        return Err(trihom::Error::OrderTooHigh(order).into());
    }
    let c = NijenhuisCandidate::new(n.clone(), A::load(algebra)?)?;
    let nij = check_nijenhuis(&c)?;
    if !nij.passed() {
        return Ok((vec![nij], None));
    }
    let (mut reports, doc) = deformed_reports(&c, order)?;
    reports.insert(0, nij);
    Ok((reports, Some(doc)))
}

/// Axioms of the order-`k` deformed algebra and whether `N` maps it onto the
/// base.
fn deformed_reports<S: Scalar, A: AlgebraDoc<S>>(
    c: &NijenhuisCandidate<S, A>,
    order: usize,
) -> Result<(Vec<Report>, Document)> {
    let deformed = match order {
        1 => first_order(c)?,
        2 => second_order(c)?,
        k => return Err(trihom::Error::OrderTooHigh(k).into()),
    };
    let axioms = deformed.check();
    let morphism = morphism_report(&c.n, &deformed, &c.target);
    Ok((vec![axioms, morphism], deformed.to_doc()))
}
