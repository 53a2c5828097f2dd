use super::{decompose_into_schur, CharacterTable, Irrep, Partition, SymPolynomial};
use crate::rational::q;
use crate::Flavor;

/// Weight vectors of the degree-one variables of `flavor` at rank `n`.
/// For the generic flavor the first `n` slots are the row weight and the last
/// `n` the column weight.
fn variable_weights(flavor: Flavor, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    match flavor {
        Flavor::Symmetric | Flavor::Antisymmetric => {
            for i in 0..n {
                let lo = if flavor == Flavor::Symmetric { i } else { i + 1 };
                for j in lo..n {
                    let mut w = vec![0; n];
                    w[i] += 1;
                    w[j] += 1;
                    out.push(w);
                }
            }
        }
        Flavor::Generic => {
            for i in 0..n {
                for j in 0..n {
                    let mut w = vec![0; 2 * n];
                    w[i] += 1;
                    w[n + j] += 1;
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Character of the degree-`d` piece of the algebra, by summing the weights
/// of every degree-`d` monomial.
pub fn algebra_character(flavor: Flavor, d: usize, n: usize) -> SymPolynomial {
    let weights = variable_weights(flavor, n);
    let blocks = if flavor.is_bivariate() { 2 } else { 1 };
    let mut out = SymPolynomial::with_blocks(n, blocks);
    let mut acc = vec![0u32; n * blocks];
    fn go(weights: &[Vec<u32>], start: usize, left: usize, acc: &mut Vec<u32>, out: &mut SymPolynomial) {
        if left == 0 {
            out.add_term(acc.clone(), q(1));
            return;
        }
        for v in start..weights.len() {
            for (a, w) in acc.iter_mut().zip(&weights[v]) {
                *a += w;
            }
            go(weights, v, left - 1, acc, out);
            for (a, w) in acc.iter_mut().zip(&weights[v]) {
                *a -= w;
            }
        }
    }
    if d == 0 || !weights.is_empty() {
        go(&weights, 0, d, &mut acc, &mut out);
    }
    out
}

/// Decomposition of the degree-`d` graded piece of `Sym(Sym²ℂⁿ)`,
/// `Sym(Λ²ℂⁿ)` or `Sym(ℂⁿ⊗ℂⁿ)` into irreducibles, computed from monomial
/// weights.
pub fn decompose_algebra(flavor: Flavor, d: usize, n: usize) -> CharacterTable {
    let ch = algebra_character(flavor, d, n);
    decompose_into_schur(&ch, false).expect("characters of the algebra are symmetric and effective")
}

/// The classical multiplicity-free answer: `⊕ S_{2λ}`, `⊕ S_{(2λ)†}` or
/// `⊕ S_λ ⊗ S_λ` over `λ ⊢ d`, dropping labels with more than `n` rows.
pub fn closed_form_algebra(flavor: Flavor, d: usize, n: usize) -> CharacterTable {
    let mut t = CharacterTable::new(n);
    for lam in Partition::all_of_size(d as u32) {
        let label = match flavor {
            Flavor::Symmetric => Irrep::Single(lam.doubled()),
            Flavor::Antisymmetric => Irrep::Single(lam.doubled().transpose()),
            Flavor::Generic => Irrep::Pair(lam.clone(), lam.clone()),
        };
        if label.max_rows() <= n {
            t.add(label, 1);
        }
    }
    t
}
