use num_traits::ToPrimitive;

use tca_lab::partitions::{schur_character, schur_character_pair, CharacterTable, Irrep};
use tca_lab::tor::{determinantal_ideal, ft_check, stabilization_report, tor_table, DeterminantalSpec, TorTable};
use tca_lab::algebra::EquivariantIdeal;
use tca_lab::{part, Flavor};

fn dim(t: &CharacterTable, n: usize) -> i64 {
    t.iter()
        .map(|(label, &m)| {
            let ch = match label {
                Irrep::Single(l) => schur_character(l, n),
                Irrep::Pair(a, b) => schur_character_pair(a, b, n),
            };
            m * ch.evaluate_at_ones().to_integer().to_i64().unwrap()
        })
        .sum()
}

fn betti(t: &TorTable, n: usize, p: usize, q: usize) -> i64 {
    dim(&t.get(p, q), n)
}

/// 2×2 minors of a generic 3×3 matrix cut out the Segre P²×P², whose
/// resolution has Betti numbers 1, 9, 16, 9, 1 (linear up to the last step).
#[test]
fn segre_betti_numbers() {
    let ideal = determinantal_ideal(&DeterminantalSpec::new(Flavor::Generic, 3, 1)).unwrap();
    let t = tor_table(&ideal, 3, 4).unwrap();
    assert_eq!(betti(&t, 3, 1, 2), 9);
    assert_eq!(betti(&t, 3, 2, 3), 16);
    assert_eq!(betti(&t, 3, 3, 4), 9);
    assert_eq!(betti(&t, 3, 2, 4), 0);
    assert_eq!(betti(&t, 3, 1, 3), 0);
}

/// 2×2 minors of a symmetric 3×3 matrix: the Veronese surface in P⁵, with
/// Betti numbers 1, 6, 8, 3.
#[test]
fn veronese_betti_numbers() {
    let ideal = determinantal_ideal(&DeterminantalSpec::new(Flavor::Symmetric, 3, 1)).unwrap();
    let t = tor_table(&ideal, 3, 4).unwrap();
    assert_eq!(t.get(1, 2).to_string(), "{(2,2):1}");
    assert_eq!(betti(&t, 3, 2, 3), 8);
    assert_eq!(betti(&t, 3, 3, 4), 3);
    assert_eq!(betti(&t, 3, 2, 4), 0);
}

/// 4×4 Pfaffians of a 5×5 alternating matrix: the Grassmannian G(2,5), a
/// Gorenstein codimension-3 ideal with Betti numbers 1, 5, 5, 1.
#[test]
fn pfaffian_betti_numbers() {
    let ideal = determinantal_ideal(&DeterminantalSpec::new(Flavor::Antisymmetric, 5, 2)).unwrap();
    let t = tor_table(&ideal, 2, 3).unwrap();
    assert_eq!(t.get(1, 2).to_string(), "{(1,1,1,1):1}");
    assert_eq!(betti(&t, 5, 1, 2), 5);
    assert_eq!(betti(&t, 5, 2, 3), 5);
}

#[test]
fn generic_rank_one_stabilizes() {
    let report = stabilization_report(Flavor::Generic, 1, 2, 4, &[2, 3, 4]).unwrap();
    let (t3, t4) = (report.table(3).unwrap(), report.table(4).unwrap());
    for q in 0..=4 {
        for p in 0..=2 {
            assert!(t3.agrees_at(t4, p, q, 3), "p={p} q={q}: {} vs {}", t3.get(p, q), t4.get(p, q));
        }
    }
    assert!(report.never_stabilized().is_empty());
    // the linear strand: Tor_2 in degree 3
    let mut expected = CharacterTable::new(4);
    expected.add(Irrep::Pair(part![2, 1], part![1, 1, 1]), 1);
    expected.add(Irrep::Pair(part![1, 1, 1], part![2, 1]), 1);
    assert!(t4.get(2, 3).same_entries(&expected), "{}", t4.get(2, 3));
}

#[test]
fn koszul_case_is_stable() {
    let report = stabilization_report(Flavor::Symmetric, 0, 2, 3, &[2, 3, 4]).unwrap();
    for cell in &report.cells {
        // Λᵖ(Sym²) is functorial in n, so every cell settles inside the range
        assert!(cell.first_stable_n.is_some(), "{cell:?}");
    }
    let zero = stabilization_report(Flavor::Antisymmetric, 4, 2, 3, &[2, 3, 4]).unwrap();
    for t in &zero.tables {
        assert_eq!(t.iter().count(), 1);
    }
}

#[test]
fn finite_type_shadow() {
    let rows = ft_check(
        |n| EquivariantIdeal::isotypic(&tca_lab::algebra::VariableSystem::new(Flavor::Symmetric, n), &part![1]),
        2,
        3,
        &[2, 3, 4],
    )
    .unwrap();
    assert!(rows.iter().all(|r| r.stable), "{rows:?}");
    let zero = ft_check(
        |n| Ok(EquivariantIdeal::zero(&tca_lab::algebra::VariableSystem::new(Flavor::Symmetric, n))),
        2,
        3,
        &[2, 3],
    )
    .unwrap();
    assert_eq!(zero[0].labels_by_rank[0].1.len(), 1);
    assert!(zero[1].labels_by_rank.iter().all(|(_, l)| l.is_empty()));
}
