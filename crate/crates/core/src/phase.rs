// zxopt - T-count reduction for quantum circuits using the ZX-calculus
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact phases.
//!
//! Every angle in the toolkit is a rational multiple of π, stored reduced
//! and normalised to `[0, 2π)`. A [`Phase`] additionally carries at most one
//! signed symbolic variable, which is how non-Clifford angles are tracked
//! during phase teleportation.
//!
//! ```
//! use zxopt::phase::{Angle, Phase, VarId};
//!
//! let t = Angle::new(1, 4);
//! assert_eq!(t + t, Angle::new(1, 2));
//! assert_eq!(-t, Angle::new(7, 4));
//! assert!((t + t).is_proper_clifford());
//!
//! let a = Phase::var(VarId(3));
//! assert!(!a.is_clifford());
//! assert_eq!(-(-a), a);
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use thiserror::Error;

/// A rational multiple of π, reduced modulo 2π.
///
/// The stored ratio `r` satisfies `0 <= r < 2`; the angle is `r·π`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Angle(Rational64);

impl Angle {
    pub const ZERO: Angle = Angle(Rational64::new_raw(0, 1));
    pub const PI: Angle = Angle(Rational64::new_raw(1, 1));
    pub const HALF_PI: Angle = Angle(Rational64::new_raw(1, 2));
    pub const QUARTER_PI: Angle = Angle(Rational64::new_raw(1, 4));

    /// The angle `numer/denom · π`. Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Angle {
        Angle::from_ratio(Rational64::new(numer, denom))
    }

    /// The angle `r · π`, reduced into `[0, 2)`.
    pub fn from_ratio(r: Rational64) -> Angle {
        let (n, d) = (*r.numer(), *r.denom());
        Angle(Rational64::new(n.mod_floor(&(2 * d)), d))
    }

    /// Multiple of π in `[0, 2)`.
    pub fn ratio(&self) -> Rational64 {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    /// 0 or π.
    pub fn is_pauli(&self) -> bool {
        *self.0.denom() == 1
    }

    /// A multiple of π/2.
    pub fn is_clifford(&self) -> bool {
        *self.0.denom() <= 2
    }

    /// π/2 or 3π/2.
    pub fn is_proper_clifford(&self) -> bool {
        *self.0.denom() == 2
    }

    pub fn to_radians(&self) -> f64 {
        std::f64::consts::PI * (*self.0.numer() as f64) / (*self.0.denom() as f64)
    }

    /// Writes the angle as a multiple of π, e.g. `3/4` for 3π/4.
    pub fn to_ratio_string(&self) -> String {
        if *self.0.denom() == 1 {
            format!("{}", self.0.numer())
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::from_ratio(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::from_ratio(self.0 - rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::from_ratio(-self.0)
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (*self.0.numer(), *self.0.denom());
        match (n, d) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "π"),
            (1, d) => write!(f, "π/{}", d),
            (n, 1) => write!(f, "{}π", n),
            (n, d) => write!(f, "{}π/{}", n, d),
        }
    }
}

/// Index of a symbolic phase variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarId(pub u32);

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A variable with a sign: `+a_i` or `-a_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedVar {
    pub negated: bool,
    pub id: VarId,
}

impl SignedVar {
    pub fn plus(id: VarId) -> SignedVar {
        SignedVar { negated: false, id }
    }

    pub fn sign(&self) -> i8 {
        if self.negated {
            -1
        } else {
            1
        }
    }
}

impl Neg for SignedVar {
    type Output = SignedVar;
    fn neg(self) -> SignedVar {
        SignedVar {
            negated: !self.negated,
            id: self.id,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PhaseError {
    #[error("cannot add phases carrying variables {0} and {1}")]
    TwoVariables(VarId, VarId),
    #[error("no value assigned to variable {0}")]
    Unassigned(VarId),
}

/// The label of a spider or phase gate: a constant angle plus an optional
/// signed variable.
///
/// Any phase that carries a variable is treated as non-Clifford, whatever
/// value the variable is eventually assigned.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase {
    pub constant: Angle,
    pub var: Option<SignedVar>,
}

impl Phase {
    pub const ZERO: Phase = Phase {
        constant: Angle::ZERO,
        var: None,
    };

    pub fn constant(a: Angle) -> Phase {
        Phase {
            constant: a,
            var: None,
        }
    }

    /// `+a_id` with no constant part.
    pub fn var(id: VarId) -> Phase {
        Phase {
            constant: Angle::ZERO,
            var: Some(SignedVar::plus(id)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.var.is_none() && self.constant.is_zero()
    }

    pub fn is_clifford(&self) -> bool {
        self.var.is_none() && self.constant.is_clifford()
    }

    pub fn is_pauli(&self) -> bool {
        self.var.is_none() && self.constant.is_pauli()
    }

    pub fn is_proper_clifford(&self) -> bool {
        self.var.is_none() && self.constant.is_proper_clifford()
    }

    pub fn is_non_clifford(&self) -> bool {
        !self.is_clifford()
    }

    /// Adds a constant angle, leaving the variable untouched.
    pub fn add_angle(self, a: Angle) -> Phase {
        Phase {
            constant: self.constant + a,
            var: self.var,
        }
    }

    /// Sum of two phases, failing if both carry a variable.
    pub fn checked_add(self, other: Phase) -> Result<Phase, PhaseError> {
        let var = match (self.var, other.var) {
            (Some(a), Some(b)) => return Err(PhaseError::TwoVariables(a.id, b.id)),
            (a, b) => a.or(b),
        };
        Ok(Phase {
            constant: self.constant + other.constant,
            var,
        })
    }

    /// The concrete angle under an assignment of the variables.
    pub fn evaluate(&self, table: &PhaseTable) -> Result<Angle, PhaseError> {
        match self.var {
            None => Ok(self.constant),
            Some(sv) => {
                let v = table.get(sv.id).ok_or(PhaseError::Unassigned(sv.id))?;
                Ok(if sv.negated {
                    self.constant - v
                } else {
                    self.constant + v
                })
            }
        }
    }
}

/// Two variables meeting on one spider. The spider keeps `kept`; `absorbed`
/// is dropped and its value must be folded into `kept` by the caller.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fusion {
    pub kept: VarId,
    pub absorbed: VarId,
    pub same_sign: bool,
}

impl Phase {
    /// Sum of two phases. When both carry a variable, the result keeps the
    /// variable of `self` and the other is reported as absorbed.
    pub fn fuse(self, other: Phase) -> (Phase, Option<Fusion>) {
        let constant = self.constant + other.constant;
        match (self.var, other.var) {
            (Some(a), Some(b)) => (
                Phase { constant, var: Some(a) },
                Some(Fusion {
                    kept: a.id,
                    absorbed: b.id,
                    same_sign: a.negated == b.negated,
                }),
            ),
            (a, b) => (Phase { constant, var: a.or(b) }, None),
        }
    }
}

impl From<Angle> for Phase {
    fn from(a: Angle) -> Phase {
        Phase::constant(a)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase {
            constant: -self.constant,
            var: self.var.map(|v| -v),
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.var {
            None => write!(f, "{}", self.constant),
            Some(v) => {
                let s = if v.negated { "-" } else { "" };
                if self.constant.is_zero() {
                    write!(f, "{}{}", s, v.id)
                } else {
                    write!(f, "{}{}+{}", s, v.id, self.constant)
                }
            }
        }
    }
}

/// Assignment of concrete angles to phase variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhaseTable {
    entries: BTreeMap<VarId, Angle>,
}

impl PhaseTable {
    pub fn new() -> PhaseTable {
        PhaseTable::default()
    }

    pub fn insert(&mut self, id: VarId, a: Angle) {
        self.entries.insert(id, a);
    }

    pub fn get(&self, id: VarId) -> Option<Angle> {
        self.entries.get(&id).copied()
    }

    pub fn contains(&self, id: VarId) -> bool {
        self.entries.contains_key(&id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, Angle)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub(crate) fn set(&mut self, id: VarId, a: Angle) {
        if let Some(e) = self.entries.get_mut(&id) {
            *e = a;
        }
    }
}

impl FromIterator<(VarId, Angle)> for PhaseTable {
    fn from_iter<T: IntoIterator<Item = (VarId, Angle)>>(iter: T) -> Self {
        PhaseTable {
            entries: iter.into_iter().collect(),
        }
    }
}
