//! Turning flags into rings, ideals and polynomials.

use std::fs;
use std::path::Path;

use acm_core::gallery::fixture_ideal;
use acm_core::ideals::Ideal;
use acm_core::polyring::{parse_polynomial, Field, MonomialOrder, PolyRing, Polynomial};

use crate::CliError;

pub const FIELD_ENV: &str = "ACM_FIELD";

/// Ring settings: the flags, and the environment default for the field.
#[derive(Clone, Copy, Debug)]
pub struct RingFlags {
    pub field: Option<Field>,
    pub env_field: Option<Field>,
    pub order: Option<MonomialOrder>,
}

impl RingFlags {
    pub fn new(field: Option<&str>, order: Option<&str>) -> Result<RingFlags, CliError> {
        let field = field.map(Field::parse).transpose()?;
        let env_field = match std::env::var(FIELD_ENV) {
            Ok(f) if !f.trim().is_empty() => {
                Some(Field::parse(&f).map_err(|e| CliError::usage(format!("{FIELD_ENV}: {e}")))?)
            }
            _ => None,
        };
        let order = match order {
            Some(o) => Some(
                MonomialOrder::parse(o)
                    .filter(|o| !matches!(o, MonomialOrder::Block { .. }))
                    .ok_or_else(|| CliError::usage(format!("unknown order `{o}`")))?,
            ),
            None => None,
        };
        Ok(RingFlags {
            field,
            env_field,
            order,
        })
    }

    /// Field for inputs that carry none: flag, then environment, then QQ.
    pub fn field(&self) -> Field {
        self.field.or(self.env_field).unwrap_or(Field::Rational)
    }

    /// `P^n` with the selected field and order.
    pub fn projective(&self, n: usize) -> PolyRing {
        PolyRing::with_order(
            n + 1,
            self.field(),
            self.order.unwrap_or(MonomialOrder::Grevlex),
        )
    }

    /// A file header's field yields only to the flag.
    fn adjust(&self, ring: &PolyRing) -> Result<PolyRing, CliError> {
        let field = self.field.unwrap_or(ring.field());
        let order = self.order.unwrap_or(ring.order());
        Ok(PolyRing::new(ring.vars().to_vec(), field, order)?)
    }
}

/// Non-empty lines of an ideal file with their line numbers, comments
/// stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Reads an ideal file. Field and order flags override the header.
pub fn read_ideal_file(path: &Path, flags: &RingFlags) -> Result<Ideal, CliError> {
    let (ring, lines) = read_lines(path, flags)?;
    let gens = lines
        .iter()
        .map(|(n, l)| parse_polynomial(l, &ring).map_err(|e| located(path, *n, e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(&ring, gens)?)
}

fn located(path: &Path, line: usize, e: acm_core::Error) -> CliError {
    let mut err = CliError::from(e);
    err.message = format!("{}:{line}: {}", path.display(), err.message);
    err
}

/// The adjusted ring and the numbered generator lines of an ideal file.
pub fn read_lines(
    path: &Path,
    flags: &RingFlags,
) -> Result<(PolyRing, Vec<(usize, String)>), CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    let mut lines = content_lines(&text);
    let (n, header) = lines
        .next()
        .ok_or_else(|| CliError::usage(format!("{}: missing ring header", path.display())))?;
    let ring = PolyRing::parse_header(header).map_err(|e| located(path, n, e))?;
    let ring = flags.adjust(&ring)?;
    Ok((ring, lines.map(|(n, l)| (n, l.to_string())).collect()))
}

pub fn load_fixture(id: &str, flags: &RingFlags) -> Result<Ideal, CliError> {
    let ideal = fixture_ideal(id, flags.field())?;
    match flags.order {
        Some(order) if order != ideal.ring().order() => {
            Ok(ideal.reorder(&ideal.ring().reordered(order))?)
        }
        _ => Ok(ideal),
    }
}

/// Exactly one of a file or a fixture.
pub fn load_operand(
    path: Option<&Path>,
    fixture: Option<&str>,
    flags: &RingFlags,
    what: &str,
) -> Result<Ideal, CliError> {
    match (path, fixture) {
        (Some(p), None) => read_ideal_file(p, flags),
        (None, Some(id)) => load_fixture(id, flags),
        (None, None) => Err(CliError::usage(format!("{what}: give a file or a fixture"))),
        (Some(_), Some(_)) => Err(CliError::usage(format!(
            "{what}: give either a file or a fixture, not both"
        ))),
    }
}

pub fn poly(src: &str, ring: &PolyRing) -> Result<Polynomial, CliError> {
    Ok(parse_polynomial(src, ring)?)
}

/// Comma-separated polynomials.
pub fn polys(src: &str, ring: &PolyRing) -> Result<Vec<Polynomial>, CliError> {
    src.split(',').map(|s| poly(s, ring)).collect()
}
