//! Minors, Pfaffians and highest weight vectors of the isotypic pieces.

use num_traits::One;

use super::poly::SparsePolynomial;
use super::vars::{SystemKind, VariableSystem};
use crate::partitions::Partition;
use crate::rational::Q;
use crate::{Error, Flavor, Result};

/// The generic matrix entry `x[i,j]`, normalized for the flavor.
pub fn entry(sys: &VariableSystem, i: u32, j: u32) -> Result<SparsePolynomial> {
    SparsePolynomial::var(sys, i, j)
}

/// Determinant of the submatrix on `rows × cols` (1-based, equal length).
pub fn minor(sys: &VariableSystem, rows: &[u32], cols: &[u32]) -> Result<SparsePolynomial> {
    assert_eq!(rows.len(), cols.len(), "square minor");
    if rows.is_empty() {
        return Ok(SparsePolynomial::constant(Q::one()));
    }
    // Laplace expansion along the first row
    let mut out = SparsePolynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = entry(sys, rows[0], c)?;
        if e.is_zero() {
            continue;
        }
        let rest: Vec<u32> = cols.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &c)| c).collect();
        let sub = minor(sys, &rows[1..], &rest)?;
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        out.add_scaled(&e.mul(&sub), &sign);
    }
    Ok(out)
}

/// Pfaffian of the antisymmetric submatrix on `idx` (even length).
pub fn pfaffian(sys: &VariableSystem, idx: &[u32]) -> Result<SparsePolynomial> {
    assert!(idx.len() % 2 == 0, "Pfaffian of odd size");
    if idx.is_empty() {
        return Ok(SparsePolynomial::constant(Q::one()));
    }
    let mut out = SparsePolynomial::zero();
    for k in 1..idx.len() {
        let e = entry(sys, idx[0], idx[k])?;
        let rest: Vec<u32> = idx.iter().enumerate().filter(|&(t, _)| t != 0 && t != k).map(|(_, &v)| v).collect();
        let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
        out.add_scaled(&e.mul(&pfaffian(sys, &rest)?), &sign);
    }
    Ok(out)
}

fn leading(k: u32) -> Vec<u32> {
    (1..=k).collect()
}

/// Highest weight vector of the isotypic piece labelled by `λ`: a product of
/// leading principal minors (symmetric, generic) or leading Pfaffians
/// (antisymmetric). `None` when the piece vanishes at this rank.
pub fn highest_weight_vector(sys: &VariableSystem, lambda: &Partition) -> Result<Option<SparsePolynomial>> {
    let n = sys.rank() as u32;
    let flavor = match sys.kind() {
        SystemKind::Quadratic(f) => f,
        SystemKind::DegreeOne => return Err(Error::UnsupportedFlavor("degree-one".into())),
    };
    let mut out = SparsePolynomial::constant(Q::one());
    match flavor {
        Flavor::Symmetric | Flavor::Generic => {
            if lambda.rows() as u32 > n {
                return Ok(None);
            }
            for &c in lambda.transpose().parts() {
                out = out.mul(&minor(sys, &leading(c), &leading(c))?);
            }
        }
        Flavor::Antisymmetric => {
            if lambda.part(0) * 2 > n {
                return Ok(None);
            }
            for &r in lambda.parts() {
                out = out.mul(&pfaffian(sys, &leading(2 * r))?);
            }
        }
    }
    Ok(Some(out))
}

/// Label of the irreducible spanned by `E_λ`: `2λ`, `(2λ)†`, or `λ` on each
/// side.
pub fn isotypic_label(flavor: Flavor, lambda: &Partition) -> crate::partitions::Irrep {
    use crate::partitions::Irrep;
    match flavor {
        Flavor::Symmetric => Irrep::Single(lambda.doubled()),
        Flavor::Antisymmetric => Irrep::Single(lambda.doubled().transpose()),
        Flavor::Generic => Irrep::Pair(lambda.clone(), lambda.clone()),
    }
}
