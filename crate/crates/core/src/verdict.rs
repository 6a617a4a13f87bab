//! Inequality identifiers and the verdicts produced by evaluating them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Every inequality the certifier knows about. The derived ordering is the
/// order verdicts appear in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InequalityId {
    /// `N >= s + D`
    Eq4,
    /// `N >= k - (h-1) D`
    Eq5,
    /// `k <= 3(h-1) D` for all-stable fibrations
    Rem7Cycles,
    /// `N <= 2(h-1) D` for all-stable fibrations
    Rem7Components,
    Eq6,
    Eq9,
    Eq10,
    Eq11,
    Eq13,
    Eq14,
    Eq15,
    Eq16,
    Eq17,
    Eq18,
    Eq19,
    Eq21,
    Eq22,
    Thm21,
    /// One member of the linear family interpolating `THM21` (t = 0) and
    /// `EQ17` (t = 1).
    Eq26(BigRational),
    K2Taubes,
    K2Kneser,
    K2Li,
    K2Stipsicz,
}

impl InequalityId {
    pub fn eq26(t: BigRational) -> Self {
        InequalityId::Eq26(t)
    }

    pub fn eq26_int(t: i64) -> Self {
        InequalityId::Eq26(BigRational::from_integer(t.into()))
    }

    pub fn citation(&self) -> &'static str {
        use InequalityId::*;
        match self {
            Eq4 => "Prop. 6, Eq. (4)",
            Eq5 => "Prop. 6, Eq. (5)",
            Rem7Cycles | Rem7Components => "Remark 7",
            Eq6 => "Thm. 8, Eq. (6)",
            Eq9 => "Cor. 9, Eq. (9)",
            Eq10 => "Cor. 9, Eq. (10)",
            Eq11 => "Cor. 9, Eq. (11)",
            Eq13 => "Prop. 14, Eq. (13)",
            Eq14 => "Prop. 14, Eq. (14)",
            Eq15 => "Prop. 14, Eq. (15)",
            Eq16 => "Thm. 15, Eq. (16)",
            Eq17 => "Thm. 15, Eq. (17)",
            Eq18 => "Thm. 15, Eq. (18)",
            Eq19 => "Thm. 15, Eq. (19)",
            Eq21 => "Thm. 20, Eq. (21)",
            Eq22 => "Thm. 20, Eq. (22)",
            Thm21 => "Thm. 21",
            Eq26(_) => "Remark 23, Eq. (26)",
            K2Taubes => "Thm. 8 proof, Eq. (7)",
            K2Kneser => "Thm. 8 proof, Kneser bound",
            K2Li => "Thm. 15 proof, Eq. (20)",
            K2Stipsicz => "Prop. 14 proof, Stipsicz bound",
        }
    }

    /// Identifiers of the fixed (parameter-free) inequalities.
    pub fn all_fixed() -> Vec<InequalityId> {
        use InequalityId::*;
        vec![
            Eq4, Eq5, Rem7Cycles, Rem7Components, Eq6, Eq9, Eq10, Eq11, Eq13, Eq14, Eq15, Eq16,
            Eq17, Eq18, Eq19, Eq21, Eq22, Thm21, K2Taubes, K2Kneser, K2Li, K2Stipsicz,
        ]
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InequalityId::*;
        let s = match self {
            Eq4 => "EQ4",
            Eq5 => "EQ5",
            Rem7Cycles => "REM7_K",
            Rem7Components => "REM7_N",
            Eq6 => "EQ6",
            Eq9 => "EQ9",
            Eq10 => "EQ10",
            Eq11 => "EQ11",
            Eq13 => "EQ13",
            Eq14 => "EQ14",
            Eq15 => "EQ15",
            Eq16 => "EQ16",
            Eq17 => "EQ17",
            Eq18 => "EQ18",
            Eq19 => "EQ19",
            Eq21 => "EQ21",
            Eq22 => "EQ22",
            Thm21 => "THM21",
            Eq26(t) => return write!(f, "EQ26@{t}"),
            K2Taubes => "K2_TAUBES",
            K2Kneser => "K2_KNESER",
            K2Li => "K2_LI",
            K2Stipsicz => "K2_STIPSICZ",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseIdError {
    #[error("unknown inequality id `{0}`")]
    UnknownInequalityId(String),
    #[error("bad rational parameter `{0}`")]
    BadParameter(String),
}

impl FromStr for InequalityId {
    type Err = ParseIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(t) = s.strip_prefix("EQ26@") {
            return parse_fraction(t)
                .map(InequalityId::Eq26)
                .ok_or_else(|| ParseIdError::BadParameter(t.to_string()));
        }
        InequalityId::all_fixed()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| ParseIdError::UnknownInequalityId(s.to_string()))
    }
}

/// Parses `p` or `p/q` with a nonzero denominator.
pub fn parse_fraction(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
            Status::Unknown => "unknown",
        })
    }
}

/// Outcome of one inequality. Slack is `LHS - RHS` in the normal form
/// "slack >= 0", present only when the inequality was evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub id: InequalityId,
    pub status: Status,
    pub slack: Option<BigRational>,
}

impl InequalityVerdict {
    pub fn from_slack(id: InequalityId, slack: BigRational) -> Self {
        let status = if slack.is_negative() {
            Status::Violated
        } else {
            Status::Holds
        };
        InequalityVerdict {
            id,
            status,
            slack: Some(slack),
        }
    }

    pub fn not_applicable(id: InequalityId) -> Self {
        InequalityVerdict {
            id,
            status: Status::NotApplicable,
            slack: None,
        }
    }

    pub fn unknown(id: InequalityId) -> Self {
        InequalityVerdict {
            id,
            status: Status::Unknown,
            slack: None,
        }
    }

    pub fn citation(&self) -> &'static str {
        self.id.citation()
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }

    /// One-line rendering: `EQ9 holds slack=70 [Cor. 9, Eq. (9)]`.
    pub fn render_line(&self) -> String {
        match &self.slack {
            Some(s) => format!("{} {} slack={} [{}]", self.id, self.status, s, self.citation()),
            None => format!("{} {} [{}]", self.id, self.status, self.citation()),
        }
    }
}

impl Serialize for InequalityVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("InequalityVerdict", 4)?;
        st.serialize_field("id", &self.id.to_string())?;
        st.serialize_field("paper_ref", self.citation())?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("slack", &self.slack.as_ref().map(ToString::to_string))?;
        st.end()
    }
}

/// Shorthand for building exact slacks from machine integers.
pub(crate) fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}
