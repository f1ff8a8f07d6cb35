use crate::error::{Error, Result};
use crate::zn::md;
use serde::{Serialize, Serializer};
use std::fmt;

/// Sign `ε = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+1" } else { "-1" })
    }
}

/// Label of a simple Yetter-Drinfeld module over K_n.
///
/// U labels are kept in canonical form: the lexicographically smaller of
/// `(i,j,m,t)` and `(j,i,t+2i,m-2j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleLabel {
    V { eps: Sign, i: u32, m: u32 },
    U { i: u32, j: u32, m: u32, t: u32 },
    W { eps: Sign, i: u32, m: u32 },
}

/// The partner `(j, i, t+2i, m-2j)` describing the same U module.
pub fn u_partner(n: u32, i: i64, j: i64, m: i64, t: i64) -> (u32, u32, u32, u32) {
    (md(j, n), md(i, n), md(t + 2 * i, n), md(m - 2 * j, n))
}

/// Canonical representative of a U label (no simplicity check).
pub fn canonical_u(n: u32, i: i64, j: i64, m: i64, t: i64) -> (u32, u32, u32, u32) {
    let a = (md(i, n), md(j, n), md(m, n), md(t, n));
    let b = u_partner(n, i, j, m, t);
    a.min(b)
}

/// `U(i,j,m,t)` is reducible iff `i = j` and `t = m - 2i`.
pub fn u_is_reducible(n: u32, i: i64, j: i64, m: i64, t: i64) -> bool {
    md(i - j, n) == 0 && md(t - m + 2 * i, n) == 0
}

impl SimpleLabel {
    pub fn v(n: u32, eps: Sign, i: i64, m: i64) -> SimpleLabel {
        SimpleLabel::V { eps, i: md(i, n), m: md(m, n) }
    }

    pub fn w(n: u32, eps: Sign, i: i64, m: i64) -> SimpleLabel {
        SimpleLabel::W { eps, i: md(i, n), m: md(m, n) }
    }

    /// Canonical U label; rejects the reducible case.
    pub fn u(n: u32, i: i64, j: i64, m: i64, t: i64) -> Result<SimpleLabel> {
        if u_is_reducible(n, i, j, m, t) {
            return Err(Error::NonSimpleLabel(format!("U({},{},{},{})", md(i, n), md(j, n), md(m, n), md(t, n))));
        }
        let (i, j, m, t) = canonical_u(n, i, j, m, t);
        Ok(SimpleLabel::U { i, j, m, t })
    }

    pub fn dim(&self, n: u32) -> usize {
        match self {
            SimpleLabel::V { .. } => 1,
            SimpleLabel::U { .. } => 2,
            SimpleLabel::W { .. } => n as usize,
        }
    }

    /// Parses `V(e,i,m)`, `U(i,j,m,t)` or `W(e,i,m)`, `e ∈ {+1,-1}`; indices
    /// are reduced mod n.
    pub fn parse(n: u32, s: &str) -> Result<SimpleLabel> {
        let bad = |why: &str| Error::LabelParse(s.to_string(), why.to_string());
        let t = s.trim();
        let open = t.find('(').ok_or_else(|| bad("expected `(`"))?;
        if !t.ends_with(')') {
            return Err(bad("expected trailing `)`"));
        }
        let head = t[..open].trim();
        let args: Vec<&str> = t[open + 1..t.len() - 1].split(',').map(str::trim).collect();
        let int = |a: &str| -> Result<i64> {
            a.replace('−', "-").parse::<i64>().map_err(|_| bad(&format!("`{a}` is not an integer")))
        };
        let sign = |a: &str| -> Result<Sign> {
            match a.replace('−', "-").as_str() {
                "+1" | "1" | "+" => Ok(Sign::Plus),
                "-1" | "-" => Ok(Sign::Minus),
                _ => Err(bad(&format!("sign `{a}` must be +1 or -1"))),
            }
        };
        match (head, args.len()) {
            ("V", 3) => Ok(SimpleLabel::v(n, sign(args[0])?, int(args[1])?, int(args[2])?)),
            ("W", 3) => Ok(SimpleLabel::w(n, sign(args[0])?, int(args[1])?, int(args[2])?)),
            ("U", 4) => SimpleLabel::u(n, int(args[0])?, int(args[1])?, int(args[2])?, int(args[3])?),
            ("V" | "W", k) => Err(bad(&format!("expected 3 arguments, found {k}"))),
            ("U", k) => Err(bad(&format!("expected 4 arguments, found {k}"))),
            _ => Err(bad("label must start with V, U or W")),
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::V { eps, i, m } => write!(f, "V({eps},{i},{m})"),
            SimpleLabel::U { i, j, m, t } => write!(f, "U({i},{j},{m},{t})"),
            SimpleLabel::W { eps, i, m } => write!(f, "W({eps},{i},{m})"),
        }
    }
}

impl Serialize for SimpleLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
