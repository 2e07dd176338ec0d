use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer extended by `+∞` and `−∞`, the codomain of a discrete
/// valuation and the carrier of max-plus arithmetic.
///
/// Ordering is `−∞ < finite < +∞`. Adding opposite infinities is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

pub use ExtInt::{Finite, NegInf, PosInf};

impl ExtInt {
    pub const ZERO: ExtInt = Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn try_add(self, rhs: ExtInt) -> Result<ExtInt> {
        match (self, rhs) {
            (Finite(a), Finite(b)) => a
                .checked_add(b)
                .map(Finite)
                .ok_or(Error::Overflow("extended-integer addition")),
            (PosInf, NegInf) | (NegInf, PosInf) => {
                Err(Error::Indeterminate(format!("{self} + {rhs}")))
            }
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
        }
    }

    pub fn try_sub(self, rhs: ExtInt) -> Result<ExtInt> {
        self.try_add(-rhs)
            .map_err(|_| Error::Indeterminate(format!("{self} - {rhs}")))
    }

    /// `k·self` for an integer `k`; `0·(±∞)` is indeterminate.
    pub fn try_scale(self, k: i64) -> Result<ExtInt> {
        match self {
            Finite(a) => a
                .checked_mul(k)
                .map(Finite)
                .ok_or(Error::Overflow("extended-integer scaling")),
            _ if k == 0 => Err(Error::Indeterminate(format!("0 * {self}"))),
            _ if k > 0 => Ok(self),
            _ => Ok(-self),
        }
    }

    /// The tropical "plus": `max(0, self)`.
    pub fn pos_part(self) -> ExtInt {
        self.max(ExtInt::ZERO)
    }
}

impl std::ops::Neg for ExtInt {
    type Output = ExtInt;
    fn neg(self) -> ExtInt {
        match self {
            Finite(v) => Finite(-v),
            PosInf => NegInf,
            NegInf => PosInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            PosInf => f.write_str("inf"),
            NegInf => f.write_str("-inf"),
        }
    }
}

impl FromStr for ExtInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(PosInf),
            "-inf" | "-∞" => Ok(NegInf),
            t => t.parse().map(Finite).map_err(|_| Error::Parse {
                what: "extended integer",
                detail: s.to_string(),
            }),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Finite(v) => s.serialize_i64(*v),
            PosInf => s.serialize_str("inf"),
            NegInf => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(Finite(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
