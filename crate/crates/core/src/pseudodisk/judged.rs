use serde::{Deserialize, Serialize};

/// A decision together with its slack: how far the deciding quantity was
/// from its threshold. Combinators keep the slack of whichever operand
/// actually settled the outcome, so a decision is fragile exactly when a
/// small perturbation could flip it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Judged {
    pub value: bool,
    pub slack: f64,
}

impl std::ops::Not for Judged {
    type Output = Judged;

    fn not(self) -> Judged {
        Judged {
            value: !self.value,
            ..self
        }
    }
}

impl Judged {
    pub fn certain(value: bool) -> Self {
        Judged {
            value,
            slack: f64::INFINITY,
        }
    }

    /// `x > 0`.
    pub fn positive(x: f64) -> Self {
        Judged {
            value: x > 0.0,
            slack: x.abs(),
        }
    }

    pub fn and(self, other: Judged) -> Self {
        match (self.value, other.value) {
            (true, true) => Judged {
                value: true,
                slack: self.slack.min(other.slack),
            },
            (false, false) => Judged {
                value: false,
                slack: self.slack.max(other.slack),
            },
            (true, false) => other,
            (false, true) => self,
        }
    }

    pub fn or(self, other: Judged) -> Self {
        !(!self).and(!other)
    }

    /// `self` and, only when `self` holds, `f()`.
    pub fn and_then<E>(self, f: impl FnOnce() -> Result<Judged, E>) -> Result<Judged, E> {
        if self.value {
            Ok(self.and(f()?))
        } else {
            Ok(self)
        }
    }

    pub fn xor(self, other: Judged) -> Self {
        Judged {
            value: self.value != other.value,
            slack: self.slack.min(other.slack),
        }
    }
}
