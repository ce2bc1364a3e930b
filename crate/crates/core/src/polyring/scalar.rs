use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Conventional test prime for randomized checks.
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field with the given modulus, `p < 2^32`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                residue: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` reduced into the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match *self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(_) => {
                let n = self.reduce_bigint(num);
                let d = self.reduce_bigint(den);
                n.div(&d).ok_or(Error::DivisionByZero)
            }
        }
    }

    fn reduce_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                Scalar::Prime {
                    residue: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Uniform element of `F_p`, or a small integer in `[-9, 9]` over ℚ.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match *self {
            Field::Rational => self.from_i64(rng.gen_range(-9..=9)),
            Field::Prime(p) => Scalar::Prime {
                residue: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Field::Rational => "QQ".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    /// Parses `QQ` or `Fp:<prime>`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "QQ" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidRing(format!("bad prime `{p}`")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidRing(format!("unknown field `{s}`")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// `BigRational`); prime-field residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self * &i)
    }

    /// Signed integer view used for printing: the rational itself, or the
    /// symmetric representative of a residue.
    pub fn as_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Prime { residue, modulus } => {
                let v = if *residue > modulus / 2 {
                    *residue as i64 - *modulus as i64
                } else {
                    *residue as i64
                };
                (BigInt::from(v), BigInt::one())
            }
        }
    }

    /// True when the printed representative is negative.
    pub fn is_negative(&self) -> bool {
        self.as_fraction().0.is_negative()
    }

    /// Magnitude used for pivot selection over ℚ; residues compare by value.
    pub fn magnitude(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.abs(),
            Scalar::Prime { residue, .. } => BigRational::from_integer(BigInt::from(*residue)),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn mismatch() -> ! {
    panic!("scalar field mismatch")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime {
                    residue: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Prime {
                residue: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime {
                    residue: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Prime {
                residue: a * b % modulus,
                modulus: *modulus,
            },
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.as_fraction();
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_check() {
        assert!(Field::prime(32003).is_ok());
        assert_eq!(Field::prime(32001), Err(Error::NotPrime(32001)));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn rational_lowest_terms() {
        let f = Field::Rational;
        let a = f
            .from_fraction(&BigInt::from(6), &BigInt::from(-4))
            .unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(
            f.from_fraction(&BigInt::from(1), &BigInt::from(0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn prime_fraction() {
        let f = Field::Prime(7);
        let half = f.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(f
            .from_fraction(&BigInt::from(1), &BigInt::from(14))
            .is_err());
        assert_eq!(f.from_i64(-1).to_string(), "-1");
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [Field::Rational, Field::Prime(DEFAULT_PRIME)] {
            for _ in 0..1000 {
                let a = field.random(&mut rng);
                let b = field.random(&mut rng);
                let c = field.random(&mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert!((&a - &a).is_zero());
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
            }
        }
    }
}
