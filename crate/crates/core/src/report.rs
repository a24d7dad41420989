use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Outcome of checking one identity at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub parameter: String,
    #[serde(with = "crate::bigjson::int")]
    pub lhs: BigInt,
    #[serde(with = "crate::bigjson::int")]
    pub rhs: BigInt,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(
        name: impl Into<String>,
        parameter: impl Into<String>,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        IdentityReport {
            name: name.into(),
            parameter: parameter.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }
}
