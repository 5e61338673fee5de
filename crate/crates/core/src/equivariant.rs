//! Eigenspace refinement of middle cohomology under the cyclic
//! symmetry of a [`SymmetricCYType`], and everything built on it:
//! isotypical components over the rationals, Hodge numbers of the
//! cyclic quotients, and the compact representation string.
//!
//! The symmetry scales the coordinate `s` by a primitive `m`-th root
//! of unity. The Jacobian ring inherits a grading by character, and a
//! monomial with `s`-exponent `j` contributes to the eigenspace of
//! exponent `j + 1` once the twist by the volume form is taken into
//! account. Eigenspace `e` therefore reads off the bigraded series at
//! residue `e - 1 mod m`, in degree `2c` for `h21` and `4c` for `h12`.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{divisors, euler_phi, gcd, BigradedPolynomial, IntPolynomial};
use crate::hodge::{HodgeError, HodgeVector};
use crate::wtypes::SymmetricCYType;

/// Errors from the equivariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivariantError {
    /// An isotypical block whose dimension is not a multiple of the
    /// rank of the corresponding rational representation.
    #[error(
        "isotypical block for divisor {divisor} has dimension {total}, not a multiple of {phi}"
    )]
    NonIntegralMultiplicity { divisor: u64, total: i64, phi: u64 },
    /// Quotients are indexed by proper divisors of the symmetry order.
    #[error("quotient index {index} is not a proper divisor of order {order}")]
    InvalidQuotient { index: u64, order: u64 },
    /// The underlying dimension series could not be computed.
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

/// Hodge numbers of every symmetry eigenspace of middle cohomology.
/// `rows[e]` is the eigenspace on which the symmetry acts by the
/// `e`-th power of the root of unity; row 0 is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenspaceTable {
    order: u64,
    rows: Vec<HodgeVector>,
}

impl EigenspaceTable {
    /// The symmetry order `m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// All rows, indexed by eigenvalue exponent `0..m`.
    pub fn rows(&self) -> &[HodgeVector] {
        &self.rows
    }

    /// The row for eigenvalue exponent `e mod m`.
    pub fn row(&self, e: u64) -> &HodgeVector {
        &self.rows[(e % self.order) as usize]
    }

    /// Entrywise sum of all rows, the Hodge vector of the full
    /// threefold.
    pub fn total(&self) -> HodgeVector {
        self.rows
            .iter()
            .fold(HodgeVector::zero(), |acc, r| acc.add(r))
    }
}

/// Computes the eigenspace table of a symmetric type.
///
/// The bigraded series is assembled from the `s` coordinate, whose
/// powers `s^j` for `j = 0..m-2` sit in degree `A*j` and character
/// `j`, and the three curve coordinates, which are invariant and
/// contribute their ordinary dimension series at character 0. The
/// square coordinate `x3` contributes only the exponent 0.
pub fn eigenspace_table(x: &SymmetricCYType) -> Result<EigenspaceTable, EquivariantError> {
    let m = x.order() as usize;
    let degree = x.degree();
    let cap = 2 * degree as usize;
    let s_weight = x.s_weight() as usize;

    let mut s_factor = BigradedPolynomial::zero(m, cap);
    for j in 0..=(m - 2) {
        s_factor
            .add_term(s_weight * j, j, 1)
            .map_err(HodgeError::from)?;
    }

    let curve_weights = [1, x.a(), x.b()];
    let full: usize = curve_weights.iter().map(|&w| (degree - w) as usize).sum();
    let mut x_part = IntPolynomial::one();
    for &w in &curve_weights {
        x_part = x_part
            .mul(&IntPolynomial::one_minus_power((degree - w) as usize), full)
            .map_err(HodgeError::from)?;
    }
    for &w in &curve_weights {
        x_part = x_part
            .div_exact(&IntPolynomial::one_minus_power(w as usize), full)
            .map_err(HodgeError::from)?;
    }
    x_part.check_nonnegative().map_err(HodgeError::from)?;

    let x_graded = BigradedPolynomial::from_poly_at_residue(&x_part, 0, m, cap);
    let series = s_factor.mul(&x_graded, cap).map_err(HodgeError::from)?;

    let rows = (0..m)
        .map(|e| {
            let residue = (e + m - 1) % m;
            HodgeVector {
                h30: i64::from(e == 1),
                h21: series.coeff(degree as usize, residue),
                h12: series.coeff(2 * degree as usize, residue),
                h03: i64::from(e == m - 1),
            }
        })
        .collect();

    Ok(EigenspaceTable {
        order: m as u64,
        rows,
    })
}

/// Verifies that complex conjugation relates the computed rows:
/// `h12` of eigenspace `e` must equal `h21` of eigenspace `m - e`,
/// and likewise `h30` against `h03`.
pub fn cross_check_h12(table: &EigenspaceTable) -> bool {
    let m = table.order();
    (0..m).all(|e| {
        let conj = table.row(m - e);
        table.row(e).h12 == conj.h21 && table.row(e).h30 == conj.h03
    })
}

// ---- Isotypical decomposition ----

/// One rational isotypical component: the primitive `divisor`-th
/// roots of unity acting with the given multiplicity, and the Hodge
/// vector of the whole block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicalComponent {
    pub divisor: u64,
    pub multiplicity: u64,
    pub hodge: HodgeVector,
}

/// Decomposition of middle cohomology into rational isotypical
/// components, one per divisor of the symmetry order, in ascending
/// divisor order. Components with multiplicity zero are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicalDecomposition {
    order: u64,
    components: Vec<IsotypicalComponent>,
}

impl IsotypicalDecomposition {
    /// The symmetry order `m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// All components, ascending by divisor.
    pub fn components(&self) -> &[IsotypicalComponent] {
        &self.components
    }

    /// The component for one divisor of the order.
    pub fn component(&self, divisor: u64) -> Option<&IsotypicalComponent> {
        self.components.iter().find(|c| c.divisor == divisor)
    }

    /// Total dimension `sum multiplicity * phi(divisor)`, which must
    /// come out as `2 + 2 * h21` of the threefold.
    pub fn total_dimension(&self) -> i64 {
        self.components
            .iter()
            .map(|c| c.multiplicity as i64 * euler_phi(c.divisor) as i64)
            .sum()
    }
}

/// Groups the eigenspaces into rational isotypical components: the
/// block for a divisor `d` collects the eigenvalue exponents of order
/// exactly `d`, and its dimension must be a multiple of `phi(d)`.
pub fn isotypical_decomposition(
    table: &EigenspaceTable,
) -> Result<IsotypicalDecomposition, EquivariantError> {
    let m = table.order();
    let mut components = Vec::new();
    for d in divisors(m) {
        let step = m / d;
        let mut hodge = HodgeVector::zero();
        for k in 1..=d {
            if gcd(k, d) == 1 {
                hodge = hodge.add(table.row(k * step % m));
            }
        }
        let total = hodge.total();
        let phi = euler_phi(d);
        if total % phi as i64 != 0 {
            return Err(EquivariantError::NonIntegralMultiplicity {
                divisor: d,
                total,
                phi,
            });
        }
        components.push(IsotypicalComponent {
            divisor: d,
            multiplicity: (total / phi as i64) as u64,
            hodge,
        });
    }
    Ok(IsotypicalDecomposition {
        order: m,
        components,
    })
}

/// Hodge vector of the quotient by the subgroup generated by the
/// `d`-th power of the symmetry, for a proper divisor `d` of the
/// order: the sum of the isotypical components over divisors of `d`.
pub fn quotient_hodge(
    dec: &IsotypicalDecomposition,
    d: u64,
) -> Result<HodgeVector, EquivariantError> {
    let m = dec.order();
    if d == 0 || d >= m || !m.is_multiple_of(d) {
        return Err(EquivariantError::InvalidQuotient { index: d, order: m });
    }
    Ok(dec
        .components()
        .iter()
        .filter(|c| d.is_multiple_of(c.divisor))
        .fold(HodgeVector::zero(), |acc, c| acc.add(&c.hodge)))
}

/// Formats a decomposition as `mult.(d1,d2,...)` groups joined by
/// `+`: components of equal nonzero multiplicity are grouped, with
/// divisors descending inside a group; the group containing the full
/// order comes first, the rest follow by descending multiplicity.
pub fn rep_string(dec: &IsotypicalDecomposition) -> String {
    let mut groups: Vec<(u64, Vec<u64>)> = Vec::new();
    for comp in dec.components().iter().rev() {
        if comp.multiplicity == 0 {
            continue;
        }
        match groups.iter_mut().find(|g| g.0 == comp.multiplicity) {
            Some(g) => g.1.push(comp.divisor),
            None => groups.push((comp.multiplicity, vec![comp.divisor])),
        }
    }
    if groups.is_empty() {
        return "0".to_string();
    }
    groups.sort_by(|x, y| {
        let x_has_order = x.1.contains(&dec.order());
        let y_has_order = y.1.contains(&dec.order());
        y_has_order.cmp(&x_has_order).then(y.0.cmp(&x.0))
    });
    let parts: Vec<String> = groups
        .iter()
        .map(|(mult, divs)| {
            let list: Vec<String> = divs.iter().map(|d| d.to_string()).collect();
            format!("{}.({})", mult, list.join(","))
        })
        .collect();
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{genus, hodge_numbers_cy3};

    fn running_example() -> SymmetricCYType {
        SymmetricCYType::new(1, 2, 3, 7).unwrap()
    }

    #[test]
    fn eigenspace_rows_of_the_running_example() {
        let table = eigenspace_table(&running_example()).unwrap();
        assert_eq!(table.order(), 14);
        let h21: Vec<i64> = table.rows().iter().map(|r| r.h21).collect();
        assert_eq!(h21, vec![0, 18, 17, 17, 15, 14, 12, 10, 8, 7, 5, 4, 3, 2]);
        assert_eq!(table.row(0), &HodgeVector::zero());
        assert_eq!(table.row(1).h30, 1);
        assert_eq!(table.row(13).h03, 1);
        assert!(table.rows().iter().skip(2).all(|r| r.h30 == 0));
    }

    #[test]
    fn eigenspace_rows_sum_to_the_hodge_numbers() {
        for x in [
            running_example(),
            SymmetricCYType::new(2, 1, 4, 8).unwrap(),
            SymmetricCYType::new(1, 6, 16, 24).unwrap(),
        ] {
            let table = eigenspace_table(&x).unwrap();
            let sum = table.total();
            let hodge = hodge_numbers_cy3(&x.weight_type()).unwrap();
            assert_eq!(sum, hodge, "type {x}");
            assert!(cross_check_h12(&table), "conjugation symmetry for {x}");
        }
    }

    #[test]
    fn decomposition_of_the_running_example() {
        let table = eigenspace_table(&running_example()).unwrap();
        let dec = isotypical_decomposition(&table).unwrap();
        let mults: Vec<(u64, u64)> = dec
            .components()
            .iter()
            .map(|c| (c.divisor, c.multiplicity))
            .collect();
        assert_eq!(mults, vec![(1, 0), (2, 20), (7, 20), (14, 21)]);
        assert_eq!(dec.component(2).unwrap().hodge.h21, 10);
        assert_eq!(dec.component(7).unwrap().hodge.h21, 60);
        assert_eq!(dec.component(14).unwrap().hodge.h21, 62);
        assert_eq!(dec.total_dimension(), 2 + 2 * 132);
    }

    #[test]
    fn rep_string_of_the_running_example() {
        let table = eigenspace_table(&running_example()).unwrap();
        let dec = isotypical_decomposition(&table).unwrap();
        assert_eq!(rep_string(&dec), "21.(14)+20.(7,2)");
    }

    #[test]
    fn rep_string_groups_equal_multiplicities() {
        let x = SymmetricCYType::new(2, 1, 4, 8).unwrap();
        let dec = isotypical_decomposition(&eigenspace_table(&x).unwrap()).unwrap();
        let mults: Vec<(u64, u64)> = dec
            .components()
            .iter()
            .map(|c| (c.divisor, c.multiplicity))
            .collect();
        assert_eq!(mults, vec![(1, 0), (2, 42), (4, 43), (8, 42)]);
        assert_eq!(rep_string(&dec), "42.(8,2)+43.(4)");
    }

    #[test]
    fn quotient_hodge_matches_the_curve_genus() {
        for x in [
            running_example(),
            SymmetricCYType::new(2, 1, 4, 8).unwrap(),
            SymmetricCYType::new(1, 6, 16, 24).unwrap(),
        ] {
            let dec = isotypical_decomposition(&eigenspace_table(&x).unwrap()).unwrap();
            let y2 = quotient_hodge(&dec, 2).unwrap();
            assert_eq!(y2.h30, 0);
            assert_eq!(y2.h21, genus(&x.curve_type()).unwrap(), "type {x}");
        }
    }

    #[test]
    fn quotient_hodge_sums_component_blocks() {
        let x = running_example();
        let dec = isotypical_decomposition(&eigenspace_table(&x).unwrap()).unwrap();
        assert_eq!(quotient_hodge(&dec, 1).unwrap(), HodgeVector::zero());
        let y7 = quotient_hodge(&dec, 7).unwrap();
        assert_eq!(y7.h21, 60);
        assert_eq!(
            quotient_hodge(&dec, 4),
            Err(EquivariantError::InvalidQuotient {
                index: 4,
                order: 14
            })
        );
        assert_eq!(
            quotient_hodge(&dec, 14),
            Err(EquivariantError::InvalidQuotient {
                index: 14,
                order: 14
            })
        );
    }
}
