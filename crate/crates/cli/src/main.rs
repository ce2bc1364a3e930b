//! `acm`: batch front end for acm-core. Every verb prints one JSON document
//! (or a plain-text rendering with `--pretty`).

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use acm_core::deform::{family_check, hilb_tangent_with, jacobian_tangent_dim, syzygies, Family};
use acm_core::gallery::{
    self, check_lemma43, describe, hyperplane_split, instance_rng, link, project, random_center,
    verify_paper, Fixture, VerifyOptions, FIXTURE_IDS,
};
use acm_core::hilbert::{acm_report, hilbert_data, DegreeBound};
use acm_core::ideals::Ideal;
use acm_core::par::Exec;
use acm_core::polyring::{parse_point, Field, Polynomial, Scalar};
use acm_core::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use input::{load_fixture, load_operand, poly, polys, read_lines, RingFlags};

const DEFAULT_SEED: u64 = 20240;
const DEFAULT_SAMPLES: &str = "0,1,2,3,5";

#[derive(Parser, Debug)]
#[command(
    name = "acm",
    version,
    about = "Exact computations with projective curves"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Opts {
    /// QQ or Fp:<prime> (default: the file header, else $ACM_FIELD, else QQ)
    #[arg(long, global = true)]
    field: Option<String>,
    /// grevlex or lex
    #[arg(long, global = true)]
    order: Option<String>,
    /// Hard cap on the degrees used for Hilbert data
    #[arg(long, global = true, value_name = "D")]
    degree_bound: Option<u32>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Named fixture as the input ideal
    #[arg(long, global = true, value_name = "ID")]
    fixture: Option<String>,
    /// Ideal file as the input ideal
    #[arg(long, global = true, value_name = "PATH")]
    ideal: Option<PathBuf>,
    /// Write the result here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Human-readable tables instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
}

/// A second ideal operand.
#[derive(Args, Debug)]
struct Other {
    /// Ideal file for the second operand
    #[arg(long = "with", value_name = "PATH")]
    with: Option<PathBuf>,
    /// Fixture for the second operand
    #[arg(long = "with-fixture", value_name = "ID")]
    with_fixture: Option<String>,
}

impl Other {
    fn given(&self) -> bool {
        self.with.is_some() || self.with_fixture.is_some()
    }

    fn load(&self, flags: &RingFlags) -> Result<Ideal, CliError> {
        load_operand(
            self.with.as_deref(),
            self.with_fixture.as_deref(),
            flags,
            "second operand",
        )
    }
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Reduced Gröbner basis and minimal generators
    Gb,
    /// Normal form of a polynomial modulo the ideal
    Nf {
        #[arg(long)]
        poly: String,
    },
    /// Ideal membership
    Member {
        #[arg(long)]
        poly: String,
    },
    /// Intersection with a second ideal
    Intersect {
        #[command(flatten)]
        other: Other,
    },
    /// Colon by a second ideal or by one polynomial
    Colon {
        #[command(flatten)]
        other: Other,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Saturation by a second ideal (default: the irrelevant ideal)
    Saturate {
        #[command(flatten)]
        other: Other,
    },
    /// Elimination of the listed variables
    Eliminate {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
    },
    /// Hilbert function, polynomial, degree and genus
    Hilbert,
    /// ACM test for a curve with its deficiency by degree
    Acm,
    /// Dimension of the Hilbert-scheme tangent space Hom(I/I², S/I)_0
    Tangent,
    /// Zariski tangent space at a point from the Jacobian
    Jactangent {
        /// Comma-separated coordinates
        #[arg(long)]
        point: String,
    },
    /// First syzygies of the minimal generators
    Syzygy,
    /// Split a curve by a hyperplane into section and residual
    Split {
        /// The linear form of the hyperplane
        #[arg(long)]
        form: String,
    },
    /// Projection from a point (default: a seeded random point off the curve)
    Project {
        #[arg(long)]
        point: Option<String>,
    },
    /// Residual in a complete intersection (the second operand)
    Link {
        #[command(flatten)]
        other: Other,
    },
    /// Union criterion for a line and a cubic in a hyperplane of P^4
    Lemma43 {
        /// The hyperplane L
        #[arg(long)]
        hyperplane: String,
        /// Three linear forms cutting the line
        #[arg(long)]
        forms: String,
        /// Three quadrics
        #[arg(long)]
        quadrics: String,
    },
    /// Flatness by sampling a one-parameter family
    Family {
        #[command(flatten)]
        other: Other,
        #[arg(long, default_value = DEFAULT_SAMPLES)]
        samples: String,
    },
    /// List fixtures, or show one
    Gallery,
    /// Run every explicit check of the catalogue
    VerifyPaper {
        /// Instances per randomized identity
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
}

/// Verb → the single library operation behind it.
pub const VERBS: &[(&str, &str)] = &[
    ("gb", "Ideal::groebner_basis"),
    ("nf", "GroebnerBasis::normal_form"),
    ("member", "Ideal::contains"),
    ("intersect", "Ideal::intersect"),
    ("colon", "Ideal::colon"),
    ("saturate", "Ideal::saturate"),
    ("eliminate", "Ideal::eliminate"),
    ("hilbert", "hilbert::hilbert_data"),
    ("acm", "hilbert::acm_report"),
    ("tangent", "deform::hilb_tangent_with"),
    ("jactangent", "deform::jacobian_tangent_dim"),
    ("syzygy", "deform::syzygies"),
    ("split", "gallery::hyperplane_split"),
    ("project", "gallery::project"),
    ("link", "gallery::link"),
    ("lemma43", "gallery::check_lemma43"),
    ("family", "deform::family_check"),
    ("gallery", "gallery::fixture"),
    ("verify-paper", "gallery::verify_paper"),
];

#[derive(Debug)]
pub struct CliError {
    kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> CliError {
        CliError {
            kind: "io",
            message: message.into(),
        }
    }

    fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message}})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let kind = match &e {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown_variable",
            Error::DivisionByZero => "division_by_zero",
            Error::NotPrime(_) | Error::InvalidRing(_) => "invalid_ring",
            Error::RingMismatch => "ring_mismatch",
            Error::PointLength { .. } => "point_length",
            Error::NotHomogeneous => "not_homogeneous",
            Error::TailNotStabilized(_) => "tail_not_stabilized",
            Error::SaturationDiverged(_) => "saturation_diverged",
            Error::NotACurve(_) => "not_a_curve",
            Error::NotSaturated => "not_saturated",
            Error::PointNotOnScheme => "point_not_on_scheme",
            Error::CenterOnScheme => "center_on_scheme",
            Error::Hypothesis(_) => "hypothesis",
            Error::SectionFinite => "section_finite",
            Error::NotContained => "not_contained",
            Error::NotCompleteIntersection(_) => "not_complete_intersection",
            Error::UnknownFixture(_) => "unknown_fixture",
            Error::NotDivisible => "not_divisible",
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}

/// A computed result, and whether it counts as a failed verification.
struct Output {
    value: Value,
    failed: bool,
}

impl From<Value> for Output {
    fn from(value: Value) -> Output {
        Output {
            value,
            failed: false,
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn ideal_json(i: &Ideal) -> Value {
    let minimal = if i.is_homogeneous() {
        i.minimal_generators().ok().map(|g| strings(&g))
    } else {
        None
    };
    json!({
        "ring": i.ring().to_string(),
        "order": i.ring().order().name(),
        "groebner_basis": strings(i.groebner_basis().generators()),
        "minimal_generators": minimal,
    })
}

fn point_json(p: &[Scalar]) -> Value {
    json!(p.iter().map(ToString::to_string).collect::<Vec<_>>())
}

struct Ctx<'a> {
    opts: &'a Opts,
    flags: RingFlags,
}

impl Ctx<'_> {
    fn input(&self) -> Result<Ideal, CliError> {
        load_operand(
            self.opts.ideal.as_deref(),
            self.opts.fixture.as_deref(),
            &self.flags,
            "input",
        )
    }

    fn bound(&self) -> DegreeBound {
        self.opts
            .degree_bound
            .map_or_else(DegreeBound::default, DegreeBound::fixed)
    }

    fn second(&self, other: &Other, first: &Ideal) -> Result<Ideal, CliError> {
        let j = other.load(&self.flags)?;
        if j.ring() != first.ring() {
            return Err(Error::RingMismatch.into());
        }
        Ok(j)
    }
}

fn run(verb: &Verb, ctx: &Ctx) -> Result<Output, CliError> {
    let out: Output = match verb {
        Verb::Gb => ideal_json(&ctx.input()?).into(),
        Verb::Nf { poly: p } => {
            let i = ctx.input()?;
            let f = poly(p, i.ring())?;
            json!({"normal_form": i.groebner_basis().normal_form(&f)?.to_string()}).into()
        }
        Verb::Member { poly: p } => {
            let i = ctx.input()?;
            json!({"member": i.contains(&poly(p, i.ring())?)?}).into()
        }
        Verb::Intersect { other } => {
            let i = ctx.input()?;
            ideal_json(&i.intersect(&ctx.second(other, &i)?)?).into()
        }
        Verb::Colon { other, poly: p } => {
            let i = ctx.input()?;
            let r = match (p, other.given()) {
                (Some(p), false) => i.colon_poly(&poly(p, i.ring())?)?,
                (None, true) => i.colon(&ctx.second(other, &i)?)?,
                _ => {
                    return Err(CliError::usage(
                        "colon: give exactly one of --poly or a second ideal",
                    ))
                }
            };
            ideal_json(&r).into()
        }
        Verb::Saturate { other } => {
            let i = ctx.input()?;
            let r = if other.given() {
                i.saturate(&ctx.second(other, &i)?)?
            } else {
                i.saturate_irrelevant()?
            };
            ideal_json(&r).into()
        }
        Verb::Eliminate { vars } => {
            let i = ctx.input()?;
            let idx = vars
                .iter()
                .map(|v| {
                    i.ring()
                        .var_index(v.trim())
                        .ok_or_else(|| CliError::from(Error::UnknownVariable(v.clone())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ideal_json(&i.eliminate(&idx)?).into()
        }
        Verb::Hilbert => {
            to_value(&hilbert_data(&ctx.input()?, ctx.bound(), Exec::Sequential)?).into()
        }
        Verb::Acm => to_value(&acm_report(&ctx.input()?, ctx.bound(), Exec::Sequential)?).into(),
        Verb::Tangent => to_value(&hilb_tangent_with(&ctx.input()?, Exec::Sequential)?).into(),
        Verb::Jactangent { point } => {
            let i = ctx.input()?;
            let p = parse_point(point, i.ring())?;
            let j = jacobian_tangent_dim(i.generators(), &p)?;
            json!({"point": point_json(&p), "tangent_dim": j.tangent_dim, "rank": j.rank}).into()
        }
        Verb::Syzygy => {
            let i = ctx.input()?;
            let gens = if i.is_homogeneous() {
                i.minimal_generators()?
            } else {
                i.generators().to_vec()
            };
            let s = syzygies(&gens)?;
            let rows: Vec<Vec<String>> = s.rows.iter().map(|r| strings(r)).collect();
            let counts: Vec<Value> = s
                .degree_counts()
                .iter()
                .map(|(d, n)| json!({"degree": d, "count": n}))
                .collect();
            json!({
                "generators": strings(&s.generators),
                "rows": rows,
                "degrees": s.degrees,
                "degree_counts": counts,
            })
            .into()
        }
        Verb::Split { form } => {
            let i = ctx.input()?;
            to_value(&hyperplane_split(&i, &poly(form, i.ring())?)?).into()
        }
        Verb::Project { point } => {
            let i = ctx.input()?;
            let c = match point {
                Some(p) => parse_point(p, i.ring())?,
                None => random_center(&i, &[], &mut instance_rng(ctx.opts.seed, 0))?,
            };
            let image = project(&i, &c)?;
            json!({"center": point_json(&c), "image": ideal_json(&image)}).into()
        }
        Verb::Link { other } => {
            let i = ctx.input()?;
            to_value(&link(&ctx.second(other, &i)?, &i)?).into()
        }
        Verb::Lemma43 {
            hyperplane,
            forms,
            quadrics,
        } => {
            let r = ctx.flags.projective(4);
            let three = |s: &str, what: &str| -> Result<[Polynomial; 3], CliError> {
                polys(s, &r)?.try_into().map_err(|_| {
                    CliError::usage(format!("--{what} needs exactly three polynomials"))
                })
            };
            let rep = check_lemma43(
                &poly(hyperplane, &r)?,
                &three(forms, "forms")?,
                &three(quadrics, "quadrics")?,
            )?;
            to_value(&rep).into()
        }
        Verb::Family { other, samples } => run_family(ctx, other, samples)?,
        Verb::Gallery => match &ctx.opts.fixture {
            Some(id) => {
                let i = load_fixture(id, &ctx.flags)?;
                json!({"id": id, "description": describe(id), "ideal": ideal_json(&i)}).into()
            }
            None => {
                let list: Vec<Value> = FIXTURE_IDS
                    .iter()
                    .map(|id| json!({"id": id, "description": describe(id)}))
                    .collect();
                Value::Array(list).into()
            }
        },
        Verb::VerifyPaper { instances } => {
            let opts = VerifyOptions {
                field: ctx.flags.field(),
                bound: ctx.bound(),
                seed: ctx.opts.seed,
                exec: Exec::default(),
                random_instances: *instances,
            };
            let items = verify_paper(&opts);
            Output {
                failed: items.iter().any(|i| !i.pass),
                value: to_value(&items),
            }
        }
    };
    Ok(out)
}

fn run_family(ctx: &Ctx, other: &Other, samples: &str) -> Result<Output, CliError> {
    let field = ctx.flags.field();
    let (family, declared) = match (&ctx.opts.fixture, &ctx.opts.ideal) {
        (Some(id), None) => match gallery::fixture(id, field)? {
            Fixture::Family(f) => (f.family, Some(f.limit)),
            Fixture::Curve(i) => (Family::constant(&i), Some(i)),
        },
        (None, Some(path)) => {
            let (ring, lines) = read_lines(path, &ctx.flags)?;
            let refs: Vec<&str> = lines.iter().map(|(_, l)| l.as_str()).collect();
            (Family::parse(&ring, &refs)?, None)
        }
        _ => {
            return Err(CliError::usage(
                "family: give exactly one of --fixture or --ideal",
            ))
        }
    };
    let limit = if other.given() {
        other.load(&ctx.flags)?
    } else {
        declared.ok_or_else(|| {
            CliError::usage("family: give the limit ideal with --with or --with-fixture")
        })?
    };
    let ts = samples
        .split(',')
        .map(|s| scalar(s, field).ok_or_else(|| CliError::usage(format!("bad sample `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let rep = family_check(&family, &ts, &limit, ctx.bound(), Exec::Sequential)?;
    Ok(Output {
        failed: !rep.passes(),
        value: to_value(&rep),
    })
}

/// One field element written as an integer or fraction.
fn scalar(s: &str, field: Field) -> Option<Scalar> {
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (s.trim().parse::<i64>().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    field.from_i64(n).div(&field.from_i64(d))
}

fn emit(value: &Value, opts: &Opts) -> Result<(), CliError> {
    let text = if opts.pretty {
        render::pretty(value)
    } else {
        let mut s = serde_json::to_string(value).expect("valid json");
        s.push('\n');
        s
    };
    match &opts.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(e: CliError) -> ExitCode {
    println!("{}", e.to_json());
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            return fail(CliError::usage(first.to_string()));
        }
    };
    let flags = match RingFlags::new(cli.opts.field.as_deref(), cli.opts.order.as_deref()) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let ctx = Ctx {
        opts: &cli.opts,
        flags,
    };
    match run(&cli.verb, &ctx).and_then(|o| emit(&o.value, &cli.opts).map(|_| o.failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => fail(e),
    }
}
