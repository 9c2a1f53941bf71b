use serde::Serialize;

/// A rule whose hypotheses do not hold. Carries the first failed condition
/// and, when it is a numeric comparison, both evaluated sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NotApplicable {
    pub condition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
}

impl NotApplicable {
    pub fn because(condition: impl Into<String>) -> Self {
        NotApplicable { condition: condition.into(), lhs: None, rhs: None }
    }

    pub fn compare(condition: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        NotApplicable { condition: condition.into(), lhs: Some(lhs), rhs: Some(rhs) }
    }
}

impl std::fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.lhs, self.rhs) {
            (Some(l), Some(r)) => write!(f, "not applicable: {} fails ({l} vs {r})", self.condition),
            _ => write!(f, "not applicable: needs {}", self.condition),
        }
    }
}

pub type Applicable<T> = std::result::Result<T, NotApplicable>;

/// Fails with `condition` unless `lhs <= rhs`.
pub(crate) fn require_le(condition: &str, lhs: f64, rhs: f64) -> Applicable<()> {
    if lhs <= rhs {
        Ok(())
    } else {
        Err(NotApplicable::compare(condition, lhs, rhs))
    }
}
