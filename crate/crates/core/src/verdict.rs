//! Three-valued verdicts for sufficient conditions and certified boolean decisions.

use std::fmt;

use crate::interval_matrix::SignVector;
use crate::matrix::RealMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictState {
    Proven,
    Refuted,
    Unknown,
}

/// Outcome of a one-sided test. `Unknown` means the test was inconclusive,
/// never that the property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub state: VerdictState,
    pub note: String,
}

impl Verdict {
    pub fn proven(note: impl Into<String>) -> Self {
        Verdict {
            state: VerdictState::Proven,
            note: note.into(),
        }
    }

    pub fn refuted(note: impl Into<String>) -> Self {
        Verdict {
            state: VerdictState::Refuted,
            note: note.into(),
        }
    }

    pub fn unknown(note: impl Into<String>) -> Self {
        Verdict {
            state: VerdictState::Unknown,
            note: note.into(),
        }
    }

    pub fn is_proven(&self) -> bool {
        self.state == VerdictState::Proven
    }

    pub fn is_refuted(&self) -> bool {
        self.state == VerdictState::Refuted
    }

    pub fn is_unknown(&self) -> bool {
        self.state == VerdictState::Unknown
    }
}

impl fmt::Display for VerdictState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictState::Proven => "proven",
            VerdictState::Refuted => "refuted",
            VerdictState::Unknown => "unknown",
        })
    }
}

/// Machine-checkable evidence attached to a [`Decision`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A member of the interval matrix with the claimed property.
    Member(RealMatrix),
    /// A point witness.
    Witness(Vec<Rational>),
    /// An orthant together with a point in it.
    Orthant { sign: SignVector, x: Vec<Rational> },
    /// Orthant witness `x` plus a member `M` with `M x = 0`.
    SingularMember {
        sign: SignVector,
        x: Vec<Rational>,
        member: RealMatrix,
    },
    /// A member system `A x = b` together with a point solving it.
    MemberSystem {
        matrix: RealMatrix,
        rhs: Vec<Rational>,
        x: Vec<Rational>,
    },
    /// Farkas vector `p` with a member system `(A, b)` it refutes.
    Farkas {
        p: Vec<Rational>,
        matrix: RealMatrix,
        rhs: Vec<Rational>,
    },
    /// `member * vector = lambda * vector`.
    EigenPair {
        member: RealMatrix,
        lambda: Rational,
        vector: Vec<Rational>,
    },
}

/// A boolean answer with optional certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub certificate: Option<Certificate>,
}

impl Decision {
    pub fn yes(certificate: Option<Certificate>) -> Self {
        Decision {
            answer: true,
            certificate,
        }
    }

    pub fn no(certificate: Option<Certificate>) -> Self {
        Decision {
            answer: false,
            certificate,
        }
    }
}
