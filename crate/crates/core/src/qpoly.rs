//! Laurent polynomials in `q` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Dense Laurent polynomial `Σ c_d q^d`.
///
/// Normalized so that the first and last stored coefficients are nonzero; the
/// zero polynomial has no coefficients and `min_deg = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    min_deg: i32,
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(1, 0)
    }

    /// `c · q^d`.
    pub fn monomial(c: i64, d: i32) -> Self {
        QPoly::from_coeffs(d, vec![c])
    }

    /// Builds `Σ_k coeffs[k] q^{min_deg + k}` and normalizes.
    pub fn from_coeffs(min_deg: i32, coeffs: Vec<i64>) -> Self {
        let mut p = QPoly { min_deg, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    /// Quantum integer `[m]_q = (q^m - q^{-m}) / (q - q^{-1})`.
    pub fn quantum_int(m: i64) -> Self {
        if m == 0 {
            return QPoly::zero();
        }
        let sign = m.signum();
        let n = m.abs();
        let mut coeffs = vec![0; (2 * n - 1) as usize];
        for k in (0..coeffs.len()).step_by(2) {
            coeffs[k] = sign;
        }
        QPoly::from_coeffs(-(n as i32) + 1, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.min_deg)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.min_deg + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, d: i32) -> i64 {
        let k = d as i64 - self.min_deg as i64;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.min_deg + k as i32, c))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i32) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            min_deg: self.min_deg + d,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Adds `c · q^d` in place.
    pub fn add_term(&mut self, c: i64, d: i32) {
        if c == 0 {
            return;
        }
        if self.is_zero() {
            *self = QPoly::monomial(c, d);
            return;
        }
        if d < self.min_deg {
            let pad = (self.min_deg - d) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.min_deg = d;
        }
        let k = (d - self.min_deg) as usize;
        if k >= self.coeffs.len() {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    /// `c_d` for `d = min_deg..`, the serialization payload.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn min_deg_raw(&self) -> i32 {
        self.min_deg
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let mut out = vec![0; (hi - lo + 1) as usize];
        for (d, c) in self.terms().chain(rhs.terms()) {
            out[(d - lo) as usize] += c;
        }
        *self = QPoly::from_coeffs(lo, out);
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        QPoly::from_coeffs(self.min_deg + rhs.min_deg, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;

            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Prints as e.g. `1+2q^2+q^4`, `q`, `-q^-1`, `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (d, c)) in self.terms().enumerate() {
            if c < 0 {
                write!(f, "-")?;
            } else if n > 0 {
                write!(f, "+")?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid polynomial {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut out = QPoly::zero();
        let bytes = text.as_bytes();
        let mut start = 0;
        let mut k = 1;
        // Split on +/- that are not part of an exponent.
        let mut pieces = Vec::new();
        while k <= bytes.len() {
            if k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^')
            {
                pieces.push(&text[start..k]);
                start = k;
            }
            k += 1;
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            let (coef, deg) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(p) => {
                    let c = if p == 0 {
                        1
                    } else {
                        body[..p].parse::<i64>().map_err(|_| bad())?
                    };
                    let rest = &body[p + 1..];
                    let d = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<i32>()
                            .map_err(|_| bad())?
                    };
                    (c, d)
                }
            };
            out.add_term(sign * coef, deg);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyRepr {
    min_deg: i32,
    coeffs: Vec<i64>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QPolyRepr {
            min_deg: self.min_deg,
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = QPolyRepr::deserialize(deserializer)?;
        let p = QPoly::from_coeffs(repr.min_deg, repr.coeffs);
        if p.coeffs.is_empty() && repr.min_deg != 0 {
            return Err(D::Error::custom("zero polynomial must have min_deg 0"));
        }
        Ok(p)
    }
}
