use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real Clifford algebra Cl(p,q) with `1 <= p+q <= 3`.
///
/// Basis vectors `e1..ep` square to +1 and `e(p+1)..en` square to -1, so
/// Cl(2,1) has `e3^2 = -1` and Cl(1,2) has `e2^2 = e3^2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(u8, u8)", into = "(u8, u8)")]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub const CL10: Signature = Signature { p: 1, q: 0 };
    pub const CL01: Signature = Signature { p: 0, q: 1 };
    pub const CL20: Signature = Signature { p: 2, q: 0 };
    pub const CL11: Signature = Signature { p: 1, q: 1 };
    pub const CL02: Signature = Signature { p: 0, q: 2 };
    pub const CL30: Signature = Signature { p: 3, q: 0 };
    pub const CL21: Signature = Signature { p: 2, q: 1 };
    pub const CL12: Signature = Signature { p: 1, q: 2 };
    pub const CL03: Signature = Signature { p: 0, q: 3 };

    /// Every supported algebra, ordered by dimension.
    pub const ALL: [Signature; 9] = [
        Self::CL10,
        Self::CL01,
        Self::CL20,
        Self::CL11,
        Self::CL02,
        Self::CL30,
        Self::CL21,
        Self::CL12,
        Self::CL03,
    ];

    pub fn new(p: u8, q: u8) -> Result<Self> {
        let n = p as usize + q as usize;
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidSignature {
                p: p as i64,
                q: q as i64,
            });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn q(self) -> u8 {
        self.q
    }

    /// Number of generating vectors `n = p + q`.
    pub fn dim(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Square of the basis vector `e_i` (1-based index).
    pub fn vector_square(self, i: usize) -> f64 {
        debug_assert!((1..=self.dim()).contains(&i));
        if i <= self.p as usize {
            1.0
        } else {
            -1.0
        }
    }

    /// Squares of all basis vectors, `[e1^2, e2^2, e3^2]` padded with zeros.
    pub fn metric(self) -> [f64; 3] {
        let mut g = [0.0; 3];
        for (i, gi) in g.iter_mut().enumerate().take(self.dim()) {
            *gi = self.vector_square(i + 1);
        }
        g
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Parses `"p,q"`, optionally wrapped as `Cl(p,q)`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix("Cl(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(trimmed);
        let (p, q) = inner
            .split_once(',')
            .ok_or_else(|| Error::MalformedSignature(s.to_string()))?;
        let p: i64 = p
            .trim()
            .parse()
            .map_err(|_| Error::MalformedSignature(s.to_string()))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| Error::MalformedSignature(s.to_string()))?;
        if p < 0 || q < 0 || p + q < 1 || p + q > 3 {
            return Err(Error::InvalidSignature { p, q });
        }
        Signature::new(p as u8, q as u8)
    }
}

impl TryFrom<(u8, u8)> for Signature {
    type Error = Error;

    fn try_from((p, q): (u8, u8)) -> Result<Self> {
        Signature::new(p, q)
    }
}

impl From<Signature> for (u8, u8) {
    fn from(sig: Signature) -> Self {
        (sig.p, sig.q)
    }
}
