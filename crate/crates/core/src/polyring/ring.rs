use std::fmt;
use std::sync::Arc;

use super::{Field, MonomialOrder};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

/// A polynomial ring `k[vars]` with a fixed monomial order.
///
/// Cheap to clone; two handles compare equal when variables, field and
/// order agree.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PolyRing {
    pub fn new(vars: Vec<String>, field: Field, order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            let mut chars = v.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
        }
        if let MonomialOrder::Block { elim } = order {
            if elim > vars.len() {
                return Err(Error::InvalidRing(
                    "block larger than variable count".into(),
                ));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(PolyRing(Arc::new(RingData { vars, field, order })))
    }

    /// `k[X0..X{nvars-1}]` with grevlex.
    pub fn standard(nvars: usize, field: Field) -> Self {
        Self::with_order(nvars, field, MonomialOrder::Grevlex)
    }

    pub fn with_order(nvars: usize, field: Field, order: MonomialOrder) -> Self {
        let vars = (0..nvars).map(|i| format!("X{i}")).collect();
        Self::new(vars, field, order).expect("standard ring is valid")
    }

    /// Coordinate ring of projective `n`-space.
    pub fn projective(n: usize, field: Field) -> Self {
        Self::standard(n + 1, field)
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Same variables and field, different order.
    pub fn reordered(&self, order: MonomialOrder) -> PolyRing {
        if order == self.order() {
            return self.clone();
        }
        Self::new(self.0.vars.clone(), self.0.field, order).expect("valid reorder")
    }

    /// Same variables and field; the order may differ.
    pub fn same_space(&self, other: &PolyRing) -> bool {
        self.0.vars == other.0.vars && self.0.field == other.0.field
    }

    /// Whether the variable names are exactly `X0..X<n>`.
    fn is_standard(&self) -> bool {
        self.0
            .vars
            .iter()
            .enumerate()
            .all(|(i, v)| *v == format!("X{i}"))
    }

    /// Header line of the ideal file format.
    pub fn header(&self) -> String {
        let vars = if self.is_standard() {
            format!("X0..X{}", self.nvars() - 1)
        } else {
            self.0.vars.join(",")
        };
        format!(
            "ring {} vars {} order {}",
            self.field().name(),
            vars,
            self.order().name()
        )
    }

    /// Parses `ring <field> vars X0..X<n> order <grevlex|lex>`.
    pub fn parse_header(line: &str) -> Result<PolyRing> {
        let bad = |m: &str| Error::InvalidRing(m.to_string());
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != 6 || words[0] != "ring" || words[2] != "vars" || words[4] != "order" {
            return Err(bad("expected `ring <field> vars X0..X<n> order <order>`"));
        }
        let field = Field::parse(words[1])?;
        let vars: Vec<String> = if let Some(rest) = words[3].strip_prefix("X0..X") {
            let n: usize = rest.parse().map_err(|_| bad("bad variable range"))?;
            (0..=n).map(|i| format!("X{i}")).collect()
        } else {
            words[3].split(',').map(str::to_string).collect()
        };
        let order = MonomialOrder::parse(words[5]).ok_or_else(|| bad("unknown order"))?;
        PolyRing::new(vars, field, order)
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({})", self.header())
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.0.vars;
        if self.is_standard() && v.len() > 1 {
            write!(f, "{}[X0..X{}]", self.field().name(), v.len() - 1)
        } else {
            write!(f, "{}[{}]", self.field().name(), v.join(","))
        }
    }
}
