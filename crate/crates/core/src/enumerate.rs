//! The bounded searches behind the classification: five-term unit
//! fraction sums, the Fermat-type table they induce, the two
//! non-Fermat families, and structural verification of externally
//! sourced rows.
//!
//! Everything here is exact integer arithmetic. The unit fraction
//! search uses cross-multiplied rational bounds, and the family
//! searches filter candidate types through the same validity
//! predicates the table rows must satisfy: symmetric shape,
//! quasi-smoothness, and well-formedness.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::divisors;
use crate::equivariant::{eigenspace_table, isotypical_decomposition, IsotypicalDecomposition};
use crate::hodge::{genus, hodge_numbers_cy3, HodgeVector};
use crate::wtypes::{quasi_smooth_general, QuasiSmoothVerdict, SymmetricCYType, WeightedType};

/// Largest denominator reachable by a five-term unit fraction sum, and
/// hence the bound on every derived search parameter.
pub const SEARCH_DENOMINATOR_BOUND: u64 = 1806;

// ---- Unit fraction solutions ----

/// A solution of `1/n + 1/p + 1/q + 1/r + 1/s = 1` in nondecreasing
/// positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EgyptianSolution {
    denoms: [u64; 5],
}

impl EgyptianSolution {
    /// The denominators, nondecreasing.
    pub fn denoms(&self) -> [u64; 5] {
        self.denoms
    }

    /// Re-checks the defining identity by cross-multiplication.
    pub fn verify(&self) -> bool {
        let product: u128 = self.denoms.iter().map(|&v| v as u128).product();
        let sum: u128 = (0..5)
            .map(|i| {
                self.denoms
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v as u128)
                    .product::<u128>()
            })
            .sum();
        sum == product
    }
}

/// Enumerates all solutions of `1 = 1/v1 + ... + 1/v5` with
/// `v1 <= ... <= v5`, in lexicographic order.
///
/// Depth-first search: with `k` terms left to place and `num/den`
/// still to be represented, the next denominator `v` satisfies
/// `den/num < v <= k*den/num`; the last denominator is forced.
pub fn egyptian_five() -> Vec<EgyptianSolution> {
    fn rec(
        idx: usize,
        min_v: u64,
        num: u64,
        den: u64,
        stack: &mut [u64; 5],
        out: &mut Vec<EgyptianSolution>,
    ) {
        if idx == 4 {
            if den.is_multiple_of(num) {
                let v = den / num;
                if v >= min_v {
                    stack[4] = v;
                    out.push(EgyptianSolution { denoms: *stack });
                }
            }
            return;
        }
        let k = (5 - idx) as u64;
        let lo = (den / num + 1).max(min_v);
        let hi = k * den / num;
        for v in lo..=hi {
            stack[idx] = v;
            rec(idx + 1, v, num * v - den, den * v, stack, out);
        }
    }
    let mut out = Vec::new();
    rec(0, 1, 1, 1, &mut [0; 5], &mut out);
    out
}

/// Counts solutions by first (smallest) denominator, ascending.
pub fn egyptian_counts(solutions: &[EgyptianSolution]) -> Vec<(u64, usize)> {
    let mut counts: Vec<(u64, usize)> = Vec::new();
    for sol in solutions {
        let n = sol.denoms()[0];
        match counts.iter_mut().find(|(v, _)| *v == n) {
            Some((_, c)) => *c += 1,
            None => counts.push((n, 1)),
        }
    }
    counts.sort_unstable();
    counts
}

// ---- Fermat-type classification ----

/// One row of the Fermat-type table: the unit fraction quadruple, the
/// symmetric type it determines, and the derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatRow {
    pub quad: [u64; 4],
    pub cy: SymmetricCYType,
    pub hodge: HodgeVector,
    pub genus: i64,
    pub decomposition: IsotypicalDecomposition,
}

impl FermatRow {
    /// The symmetry order, which equals the third quadruple entry.
    pub fn order(&self) -> u64 {
        self.quad[2]
    }
}

/// Enumerates every symmetric Calabi-Yau type whose equation can be a
/// sum of pure coordinate powers.
///
/// Each solution `(2, v1, v2, v3, v4)` is scanned over all
/// assignments of a denominator to the degree `2c` and another to the
/// symmetry order `t`; the remaining two give the curve weights
/// `a = 2c/y`, `b = 2c/x`. Assignments that fail evenness,
/// divisibility, quasi-smoothness, or well-formedness are dropped;
/// identical types from symmetric assignments are deduplicated. Rows
/// come out ascending by degree, then by weights.
pub fn classify_fermat() -> Vec<FermatRow> {
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for sol in egyptian_five() {
        let v = sol.denoms();
        if v[0] != 2 {
            continue;
        }
        for i in 1..5 {
            let two_c = v[i];
            if two_c % 2 != 0 {
                continue;
            }
            let c = two_c / 2;
            for j in 1..5 {
                if j == i {
                    continue;
                }
                let t = v[j];
                if t % 2 != 0 || two_c % t != 0 {
                    continue;
                }
                let rest: Vec<u64> = (1..5).filter(|&k| k != i && k != j).map(|k| v[k]).collect();
                let (x, y) = (rest[0].min(rest[1]), rest[0].max(rest[1]));
                if two_c % x != 0 || two_c % y != 0 {
                    continue;
                }
                let (s_weight, a, b) = (two_c / t, two_c / y, two_c / x);
                debug_assert_eq!(s_weight + 1 + a + b + c, two_c);
                let Ok(cy) = SymmetricCYType::new(s_weight, a, b, c) else {
                    continue;
                };
                let wt = cy.weight_type();
                if quasi_smooth_general(&wt).decided() != Some(true) || !wt.well_formed_type() {
                    continue;
                }
                if !seen.insert(cy) {
                    continue;
                }
                rows.push(fermat_row([x, y, t, two_c], cy));
            }
        }
    }
    rows.sort_by_key(|r| r.cy);
    rows
}

fn fermat_row(quad: [u64; 4], cy: SymmetricCYType) -> FermatRow {
    let hodge = hodge_numbers_cy3(&cy.weight_type()).expect("enumerated type has Hodge numbers");
    let g = genus(&cy.curve_type()).expect("enumerated type has a quasi-smooth curve");
    let table = eigenspace_table(&cy).expect("enumerated type has an eigenspace table");
    let decomposition =
        isotypical_decomposition(&table).expect("enumerated type decomposes integrally");
    FermatRow {
        quad,
        cy,
        hodge,
        genus: g,
        decomposition,
    }
}

// ---- Non-Fermat families ----

/// One row of the non-Fermat tables: the printed weight tuple
/// `(A, 1, v, d, c)`, the symmetric type, which family produced it,
/// and the tail relation `cover_exponent * cover_divisor = 2c - 1`
/// (family 1) or `2c - 2` (family 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonFermatRow {
    pub tuple: [u64; 5],
    pub cy: SymmetricCYType,
    pub case: u8,
    pub cover_divisor: u64,
    pub cover_exponent: u64,
}

fn admit_non_fermat(
    s_weight: u64,
    divider: u64,
    nondivider: u64,
    c: u64,
    case: u8,
    out: &mut Vec<NonFermatRow>,
) {
    let a = divider.min(nondivider);
    let b = divider.max(nondivider);
    let Ok(cy) = SymmetricCYType::new(s_weight, a, b, c) else {
        return;
    };
    let wt = cy.weight_type();
    if quasi_smooth_general(&wt).decided() != Some(true) || !wt.well_formed_type() {
        return;
    }
    let tail_target = 2 * c - case as u64;
    out.push(NonFermatRow {
        tuple: [s_weight, 1, divider, nondivider, c],
        cy,
        case,
        cover_divisor: nondivider,
        cover_exponent: tail_target / nondivider,
    });
}

/// Searches for symmetric types whose equation needs a tail monomial
/// ending in the weight-1 coordinate: one weight `d` satisfies
/// `r*d = 2c - 1`, all others divide `2c`. Degrees run up to
/// [`SEARCH_DENOMINATOR_BOUND`].
pub fn search_case1() -> Vec<NonFermatRow> {
    let mut out = Vec::new();
    for c in 2..=(SEARCH_DENOMINATOR_BOUND / 2) {
        let two_c = 2 * c;
        let divs: Vec<u64> = divisors(two_c);
        for d in divisors(two_c - 1) {
            if d < 2 || d >= c {
                continue;
            }
            let pair_sum = match (c - 1).checked_sub(d) {
                Some(s) if s >= 2 => s,
                _ => continue,
            };
            for &u in &divs {
                if u >= pair_sum {
                    break;
                }
                let v = pair_sum - u;
                if two_c % v != 0 || c % u != 0 {
                    continue;
                }
                admit_non_fermat(u, v, d, c, 1, &mut out);
            }
        }
    }
    out.sort_by_key(|r| r.cy);
    out
}

/// Searches for symmetric types with curve weights `(1, 2, d)` where
/// `r*d = 2c - 2`: the tail monomial ends in the weight-2 coordinate.
pub fn search_case2() -> Vec<NonFermatRow> {
    let mut out = Vec::new();
    for c in 2..=(SEARCH_DENOMINATOR_BOUND / 2) {
        let two_c = 2 * c;
        for d in divisors(two_c - 2) {
            if d < 3 || d >= c {
                continue;
            }
            let s_weight = match (c - 3).checked_sub(d) {
                Some(u) if u >= 1 => u,
                _ => continue,
            };
            if two_c % s_weight != 0 || c % s_weight != 0 {
                continue;
            }
            admit_non_fermat(s_weight, 2, d, c, 2, &mut out);
        }
    }
    out.sort_by_key(|r| r.cy);
    out
}

/// Number of distinct underlying hypersurface classes among rows:
/// classes are weight multisets together with the degree.
pub fn distinct_type_classes(rows: &[NonFermatRow]) -> usize {
    let classes: BTreeSet<Vec<u64>> = rows
        .iter()
        .map(|r| r.cy.weight_type().sorted_weights())
        .collect();
    classes.len()
}

// ---- Row verification ----

/// One named structural check with its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The full verification report for one five-weight row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub weights: [u64; 5],
    pub checks: Vec<VerificationCheck>,
    pub quasi_smooth: QuasiSmoothVerdict,
}

impl VerificationReport {
    /// Whether every structural check passed and quasi-smoothness was
    /// not refuted.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.quasi_smooth.decided() != Some(false)
    }
}

fn check(name: &str, passed: bool, detail: String) -> VerificationCheck {
    VerificationCheck {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Runs the structural checks for a row given as `(A, 1, a, b, c)`:
/// positivity, the literal 1 in the second slot, weight sum `2c`,
/// divisibility and parity of the symmetry order, well-formedness,
/// and the quasi-smoothness verdict for the general member.
pub fn verify_row(weights: [u64; 5]) -> VerificationReport {
    let mut checks = Vec::new();
    let positive = weights.iter().all(|&w| w > 0);
    checks.push(check("positive weights", positive, format!("{weights:?}")));
    if !positive {
        return VerificationReport {
            weights,
            checks,
            quasi_smooth: QuasiSmoothVerdict {
                status: crate::wtypes::QuasiSmoothStatus::Inconclusive,
                witness: None,
            },
        };
    }

    let s_weight = weights[0];
    let c = weights[4];
    let two_c = 2 * c;
    let sum: u64 = weights.iter().sum();

    checks.push(check(
        "second weight is 1",
        weights[1] == 1,
        format!("second weight {}", weights[1]),
    ));
    checks.push(check(
        "weights sum to the degree",
        sum == two_c,
        format!("sum {sum}, degree {two_c}"),
    ));
    let divides = two_c.is_multiple_of(s_weight);
    checks.push(check(
        "first weight divides the degree",
        divides,
        format!(
            "{two_c} = {s_weight} * {} + {}",
            two_c / s_weight,
            two_c % s_weight
        ),
    ));
    let order_even = divides && (two_c / s_weight).is_multiple_of(2);
    checks.push(check(
        "symmetry order is even",
        order_even,
        if divides {
            format!("order {}", two_c / s_weight)
        } else {
            "order undefined".to_string()
        },
    ));
    checks.push(check(
        "first weight divides half the degree",
        c.is_multiple_of(s_weight),
        format!("c = {c}"),
    ));

    let wt = WeightedType::new(two_c, weights.to_vec()).expect("positive weights");
    checks.push(check(
        "well-formed type",
        wt.well_formed_type(),
        format!("type {wt}"),
    ));
    checks.push(check(
        "amplitude is zero",
        wt.amplitude() == 0,
        format!("amplitude {}", wt.amplitude()),
    ));

    VerificationReport {
        weights,
        checks,
        quasi_smooth: quasi_smooth_general(&wt),
    }
}
