//! Verification reports: one record per identity instance checked.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Status {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct StatusVisitor;
        impl Visitor<'_> for StatusVisitor {
            type Value = Status;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "pass, fail or skipped(reason)")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Status, E> {
                match v {
                    "pass" => Ok(Status::Pass),
                    "fail" => Ok(Status::Fail),
                    other => {
                        if let Some(reason) =
                            other.strip_prefix("skipped(").and_then(|r| r.strip_suffix(')'))
                        {
                            Ok(Status::Skipped(reason.to_string()))
                        } else {
                            Err(E::custom(format!("unknown status {other:?}")))
                        }
                    }
                }
            }
        }
        deserializer.deserialize_str(StatusVisitor)
    }
}

/// Result of checking one identity at one parameter tuple.
///
/// `status` is `pass` exactly when the canonical `lhs` and `rhs` strings
/// are equal; both sides are always reported so a failure prints its own
/// counterexample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ns: u64,
}

impl IdentityReport {
    /// `k=v` pairs joined by `;`, in key order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}
