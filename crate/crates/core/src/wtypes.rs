//! Weighted hypersurface types and the symmetric Calabi-Yau family.
//!
//! A [`WeightedType`] is a degree together with positive weights, kept
//! in the order given. On top of the raw type sit three predicates:
//! well-formedness of the weights, well-formedness of the type, and a
//! layered quasi-smoothness test for the general member.
//!
//! [`SymmetricCYType`] is the anticanonical family in five weights
//! `(A, 1, a, b, c)` of degree `2c` whose general member carries a
//! cyclic symmetry of order `m = 2c / A` scaling the first coordinate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, gcd_all};

/// Errors from constructing or parsing weighted types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    /// The degree must be positive.
    #[error("degree must be positive")]
    ZeroDegree,
    /// At least one weight is required.
    #[error("at least one weight is required")]
    NoWeights,
    /// Every weight must be positive.
    #[error("weights must be positive")]
    ZeroWeight,
    /// The curve weights of a symmetric type must satisfy `a <= b < c`.
    #[error("curve weights must satisfy a <= b < c, got a={a}, b={b}, c={c}")]
    UnorderedCurveWeights { a: u64, b: u64, c: u64 },
    /// The weights do not sum to the degree.
    #[error("weights must sum to the degree, off by {amplitude}")]
    NotCalabiYau { amplitude: i64 },
    /// The symmetry weight must divide the degree.
    #[error("symmetry weight {s_weight} does not divide degree {degree}")]
    DivisibilityViolation { s_weight: u64, degree: u64 },
    /// The symmetry order must be even so the double cover exists.
    #[error("symmetry order {order} is odd")]
    ParityViolation { order: u64 },
    /// A symmetric type needs exactly five weights.
    #[error("expected five weights, got {count}")]
    WrongWeightCount { count: usize },
    /// The second weight of a symmetric type must be 1.
    #[error("second weight must be 1, got {weight}")]
    SecondWeightNotOne { weight: u64 },
    /// The degree of a symmetric type must be twice the last weight.
    #[error("degree {degree} is not twice the last weight {c}")]
    DegreeNotTwiceLastWeight { degree: u64, c: u64 },
    /// Quotients are indexed by proper divisors of the symmetry order.
    #[error("quotient index {index} is not a proper divisor of order {order}")]
    InvalidQuotient { index: u64, order: u64 },
    /// Text that does not parse as `(degree,[w0,w1,...])`.
    #[error("cannot parse weighted type from {input:?}; expected \"(degree,[w0,w1,...])\"")]
    UnparsableType { input: String },
}

// ---- Raw weighted types ----

/// A hypersurface type: a degree and positive weights, in given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightedType {
    degree: u64,
    weights: Vec<u64>,
}

impl WeightedType {
    /// Builds a type, rejecting a zero degree, empty weights, or any
    /// zero weight.
    pub fn new(degree: u64, weights: Vec<u64>) -> Result<Self, TypeError> {
        if degree == 0 {
            return Err(TypeError::ZeroDegree);
        }
        if weights.is_empty() {
            return Err(TypeError::NoWeights);
        }
        if weights.contains(&0) {
            return Err(TypeError::ZeroWeight);
        }
        Ok(Self { degree, weights })
    }

    /// The degree of the defining equation.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The weights in the order given at construction.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weights sorted ascending, for display and comparison up to
    /// coordinate permutation.
    pub fn sorted_weights(&self) -> Vec<u64> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }

    /// Degree minus the weight sum. Zero means trivial canonical
    /// bundle, negative means ample anticanonical bundle.
    pub fn amplitude(&self) -> i64 {
        self.degree as i64 - self.weights.iter().sum::<u64>() as i64
    }

    /// Whether the weight sum equals the degree.
    pub fn is_calabi_yau(&self) -> bool {
        self.amplitude() == 0
    }

    /// Whether every weight divides the degree, so that a sum of pure
    /// coordinate powers has this type.
    pub fn is_fermat(&self) -> bool {
        self.weights.iter().all(|&w| self.degree.is_multiple_of(w))
    }

    /// Whether every subset of all-but-one weights is coprime.
    pub fn well_formed_weights(&self) -> bool {
        (0..self.weights.len()).all(|skip| {
            let rest: Vec<u64> = self
                .weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &w)| w)
                .collect();
            gcd_all(&rest) == 1
        })
    }

    /// Whether the gcd of every pair of weights divides the degree.
    pub fn pair_gcds_divide_degree(&self) -> bool {
        let w = &self.weights;
        (0..w.len()).all(|i| (i + 1..w.len()).all(|j| self.degree.is_multiple_of(gcd(w[i], w[j]))))
    }

    /// Whether the type is well formed: the weights are well formed,
    /// pair gcds divide the degree, and every singular coordinate
    /// stratum forced into the general member has codimension at
    /// least 2 there.
    ///
    /// A stratum is spanned by an index subset whose weights share a
    /// common factor; it lies in every member exactly when no monomial
    /// of the degree is supported on it.
    pub fn well_formed_type(&self) -> bool {
        if !self.well_formed_weights() || !self.pair_gcds_divide_degree() {
            return false;
        }
        let n = self.weights.len();
        for mask in 1u32..(1 << n) {
            let subset: Vec<u64> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.weights[i])
                .collect();
            if gcd_all(&subset) <= 1 {
                continue;
            }
            if !representable(self.degree, &subset) && subset.len() + 3 > n {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for WeightedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({},[{}])", self.degree, list.join(","))
    }
}

impl FromStr for WeightedType {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, TypeError> {
        let fail = || TypeError::UnparsableType {
            input: s.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(fail)?;
        let (deg_str, rest) = inner.split_once(',').ok_or_else(fail)?;
        let list = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(fail)?;
        let degree: u64 = deg_str.parse().map_err(|_| fail())?;
        let weights = list
            .split(',')
            .map(|w| w.parse::<u64>().map_err(|_| fail()))
            .collect::<Result<Vec<u64>, TypeError>>()?;
        WeightedType::new(degree, weights)
    }
}

/// Whether `target` is a sum of the given weights with nonnegative
/// multiplicities, i.e. whether a monomial of that degree is supported
/// on them.
fn representable(target: u64, weights: &[u64]) -> bool {
    let t = target as usize;
    let mut reachable = vec![false; t + 1];
    reachable[0] = true;
    for &w in weights {
        let w = w as usize;
        for v in w..=t {
            if reachable[v - w] {
                reachable[v] = true;
            }
        }
    }
    reachable[t]
}

// ---- Quasi-smoothness ----

/// Outcome of the layered quasi-smoothness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuasiSmoothStatus {
    /// Every weight divides the degree; a sum of pure powers works.
    Fermat,
    /// Exactly one weight fails to divide the degree and that variable
    /// is covered by a monomial `x_j^k * x_l`.
    SingleNondivider,
    /// Every variable is covered by a pure power or by `x_j^k * x_l`.
    CoveredByMonomials,
    /// Some variable appears in no monomial of the degree, so every
    /// member is singular along its coordinate axis.
    NotQuasiSmooth,
    /// None of the layered criteria apply.
    Inconclusive,
}

/// A quasi-smoothness status together with the monomial evidence that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiSmoothVerdict {
    pub status: QuasiSmoothStatus,
    pub witness: Option<String>,
}

impl QuasiSmoothVerdict {
    /// `Some(true)` or `Some(false)` when the test decided, `None`
    /// when it was inconclusive.
    pub fn decided(&self) -> Option<bool> {
        match self.status {
            QuasiSmoothStatus::Fermat
            | QuasiSmoothStatus::SingleNondivider
            | QuasiSmoothStatus::CoveredByMonomials => Some(true),
            QuasiSmoothStatus::NotQuasiSmooth => Some(false),
            QuasiSmoothStatus::Inconclusive => None,
        }
    }
}

/// Finds `k >= 1` and `l != j` with `k * w[j] + w[l] = d`, preferring
/// the smallest `l`, and formats the witness monomial.
fn tail_monomial(degree: u64, weights: &[u64], j: usize) -> Option<String> {
    for (l, &wl) in weights.iter().enumerate() {
        if l == j || wl >= degree {
            continue;
        }
        let rest = degree - wl;
        if rest.is_multiple_of(weights[j]) && rest / weights[j] >= 1 {
            return Some(format!("x{}^{}*x{}", j, rest / weights[j], l));
        }
    }
    None
}

/// Tests quasi-smoothness of the general member of the given type,
/// layer by layer: all weights divide the degree; a single
/// non-dividing weight covered by a tail monomial; every variable
/// covered by a pure power or a tail monomial; a variable missing from
/// every monomial of the degree. Anything else is inconclusive.
pub fn quasi_smooth_general(t: &WeightedType) -> QuasiSmoothVerdict {
    let d = t.degree();
    let w = t.weights();

    if t.is_fermat() {
        return QuasiSmoothVerdict {
            status: QuasiSmoothStatus::Fermat,
            witness: Some("every weight divides the degree".to_string()),
        };
    }

    let nondividers: Vec<usize> = (0..w.len()).filter(|&j| !d.is_multiple_of(w[j])).collect();
    if nondividers.len() == 1 {
        let j = nondividers[0];
        if let Some(monomial) = tail_monomial(d, w, j) {
            return QuasiSmoothVerdict {
                status: QuasiSmoothStatus::SingleNondivider,
                witness: Some(monomial),
            };
        }
    }

    let covers: Vec<Option<String>> = (0..w.len())
        .map(|j| {
            if d.is_multiple_of(w[j]) {
                Some(format!("x{}^{}", j, d / w[j]))
            } else {
                tail_monomial(d, w, j)
            }
        })
        .collect();
    if covers.iter().all(Option::is_some) {
        let list: Vec<String> = covers.into_iter().flatten().collect();
        return QuasiSmoothVerdict {
            status: QuasiSmoothStatus::CoveredByMonomials,
            witness: Some(list.join(", ")),
        };
    }

    for j in 0..w.len() {
        let appears = if w[j] == d {
            true
        } else if w[j] > d {
            false
        } else {
            representable(d - w[j], w)
        };
        if !appears {
            return QuasiSmoothVerdict {
                status: QuasiSmoothStatus::NotQuasiSmooth,
                witness: Some(format!("x{j} appears in no monomial of degree {d}")),
            };
        }
    }

    QuasiSmoothVerdict {
        status: QuasiSmoothStatus::Inconclusive,
        witness: None,
    }
}

// ---- Symmetric Calabi-Yau types ----

/// A Calabi-Yau threefold type `(2c, [A, 1, a, b, c])` whose general
/// member can be written `s^m + H(x0, x1, x2) - x3^2` and so carries a
/// cyclic symmetry of order `m = 2c / A` acting on `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricCYType {
    s_weight: u64,
    a: u64,
    b: u64,
    c: u64,
}

impl SymmetricCYType {
    /// Validates `(A, 1, a, b, c)`: positive weights with
    /// `a <= b < c`, weight sum equal to the degree `2c`, `A`
    /// dividing `2c`, and an even symmetry order `2c / A`.
    pub fn new(s_weight: u64, a: u64, b: u64, c: u64) -> Result<Self, TypeError> {
        if s_weight == 0 || a == 0 || b == 0 || c == 0 {
            return Err(TypeError::ZeroWeight);
        }
        if !(a <= b && b < c) {
            return Err(TypeError::UnorderedCurveWeights { a, b, c });
        }
        let degree = 2 * c;
        let sum = s_weight + 1 + a + b + c;
        if sum != degree {
            return Err(TypeError::NotCalabiYau {
                amplitude: degree as i64 - sum as i64,
            });
        }
        if !degree.is_multiple_of(s_weight) {
            return Err(TypeError::DivisibilityViolation { s_weight, degree });
        }
        let order = degree / s_weight;
        if !order.is_multiple_of(2) {
            return Err(TypeError::ParityViolation { order });
        }
        Ok(Self { s_weight, a, b, c })
    }

    /// Reads a symmetric type off a five-weight presentation
    /// `(2c, [A, 1, a, b, c])`.
    pub fn from_weighted(t: &WeightedType) -> Result<Self, TypeError> {
        let w = t.weights();
        if w.len() != 5 {
            return Err(TypeError::WrongWeightCount { count: w.len() });
        }
        if w[1] != 1 {
            return Err(TypeError::SecondWeightNotOne { weight: w[1] });
        }
        if t.degree() != 2 * w[4] {
            return Err(TypeError::DegreeNotTwiceLastWeight {
                degree: t.degree(),
                c: w[4],
            });
        }
        Self::new(w[0], w[2], w[3], w[4])
    }

    /// The weight of the symmetry coordinate `s`.
    pub fn s_weight(&self) -> u64 {
        self.s_weight
    }

    /// The smaller extra curve weight.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// The larger extra curve weight.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// Half the degree; the weight of the square coordinate `x3`.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// The degree `2c`.
    pub fn degree(&self) -> u64 {
        2 * self.c
    }

    /// The order `m = 2c / A` of the cyclic symmetry.
    pub fn order(&self) -> u64 {
        self.degree() / self.s_weight
    }

    /// The full five-weight type `(2c, [A, 1, a, b, c])`.
    pub fn weight_type(&self) -> WeightedType {
        WeightedType::new(
            self.degree(),
            vec![self.s_weight, 1, self.a, self.b, self.c],
        )
        .expect("validated weights")
    }

    /// The plane curve type `(2c, [1, a, b])` cut out by `H = 0`.
    pub fn curve_type(&self) -> WeightedType {
        WeightedType::new(self.degree(), vec![1, self.a, self.b]).expect("validated weights")
    }

    /// The type of the quotient by the subgroup generated by the
    /// `d`-th power of the symmetry, for a proper divisor `d` of the
    /// order. The residual action has order `m / d` and the `s`
    /// coordinate is replaced by `s^{m/d}`.
    pub fn quotient_type(&self, d: u64) -> Result<WeightedType, TypeError> {
        let m = self.order();
        if d == 0 || d >= m || !m.is_multiple_of(d) {
            return Err(TypeError::InvalidQuotient { index: d, order: m });
        }
        WeightedType::new(
            self.degree(),
            vec![self.s_weight * (m / d), 1, self.a, self.b, self.c],
        )
    }

    /// Key for the canonical table order: ascending degree, then the
    /// weights lexicographically.
    fn sort_key(&self) -> (u64, u64, u64, u64, u64) {
        (self.degree(), self.s_weight, self.a, self.b, self.c)
    }
}

impl Ord for SymmetricCYType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for SymmetricCYType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SymmetricCYType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},[{},1,{},{},{}])",
            self.degree(),
            self.s_weight,
            self.a,
            self.b,
            self.c
        )
    }
}
