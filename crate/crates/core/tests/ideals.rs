use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tca_lab::algebra::{
    admissible_vector, degree_one_vector, highest_weight_vector, verify_degree_one_closure, verify_move_closure,
    EquivariantIdeal, VariableSystem,
};
use tca_lab::partitions::{decompose_algebra, decompose_into_schur, Partition};
use tca_lab::poset::{perfect_matchings, EdgeReading};
use tca_lab::Flavor;

/// `E_μ ⊆ I_λ` exactly when `λ ⊆ μ`, for all `|λ|, |μ| ≤ 3` at rank 6.
#[test]
fn isotypic_containment_lattice() {
    let parts = Partition::all_up_to(3);
    for flavor in Flavor::ALL {
        let sys = VariableSystem::new(flavor, 6);
        for lambda in &parts {
            let ideal = EquivariantIdeal::isotypic(&sys, lambda).unwrap();
            for mu in &parts {
                if highest_weight_vector(&sys, mu).unwrap().is_none() {
                    continue;
                }
                let got = ideal.contains_isotypic(mu).unwrap();
                assert_eq!(got, lambda.contained_in(mu), "{flavor}: E_{mu} ⊆ I_{lambda}");
            }
        }
    }
}

/// The unit ideal has the character of the algebra itself.
#[test]
fn unit_ideal_matches_algebra_decomposition() {
    for flavor in Flavor::ALL {
        for n in 1..=3 {
            let sys = VariableSystem::new(flavor, n);
            let unit = EquivariantIdeal::isotypic(&sys, &Partition::empty()).unwrap();
            for d in 0..=3 {
                let table = decompose_into_schur(&unit.component_character(d).unwrap(), false).unwrap();
                assert!(table.same_entries(&decompose_algebra(flavor, d, n)), "{flavor} n={n} d={d}");
            }
        }
    }
}

/// Components are `gl_n`-stable.
#[test]
fn random_components_are_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for flavor in [Flavor::Symmetric, Flavor::Antisymmetric] {
        let sys = VariableSystem::new(flavor, 4);
        for _ in 0..3 {
            let g = random_admissible(&sys, 2, &mut rng);
            let ideal = EquivariantIdeal::new(&sys, vec![g]).unwrap().without_shortcut();
            for f in ideal.component(2).unwrap().iter().chain(&ideal.component(3).unwrap()) {
                for op in sys.lie_generators() {
                    assert!(ideal.contains(&f.act(&sys, op)).unwrap());
                }
            }
        }
    }
}

fn random_admissible(sys: &VariableSystem, edges: u32, rng: &mut ChaCha8Rng) -> tca_lab::algebra::SparsePolynomial {
    let support: Vec<u32> = (1..=2 * edges).collect();
    loop {
        let coeffs: Vec<i64> = (0..perfect_matchings(&support).len()).map(|_| rng.gen_range(-3..=3)).collect();
        let g = admissible_vector(sys, &support, &coeffs).unwrap();
        if !g.is_zero() {
            return g;
        }
    }
}

/// Initial sets of random equivariant ideals are closed under both move types.
#[test]
fn initial_sets_are_move_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for flavor in [Flavor::Symmetric, Flavor::Antisymmetric] {
        for _ in 0..6 {
            let sys = VariableSystem::new(flavor, 8);
            let gens: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| {
                let e = rng.gen_range(1..=3);
                random_admissible(&sys, e, &mut rng)
            }).collect();
            let ideal = EquivariantIdeal::new(&sys, gens).unwrap();
            let report = verify_move_closure(&ideal, 4, 8, EdgeReading::LargestFirst).unwrap();
            assert!(report.is_closed(), "{flavor}: {:?}", report.violations.first());
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn degree_one_initial_sets_are_move_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let sys = VariableSystem::degree_one(6);
    for _ in 0..10 {
        let k = rng.gen_range(1..=3usize);
        let support: Vec<u32> = (1..=k as u32).collect();
        let coeffs: Vec<i64> = (0..1 << k).map(|_| rng.gen_range(-2..=2)).collect();
        let f = degree_one_vector(&sys, &support, &coeffs).unwrap();
        let ideal = EquivariantIdeal::new(&sys, vec![f]).unwrap();
        let report = verify_degree_one_closure(&ideal, 4, 6).unwrap();
        assert!(report.is_closed(), "{:?}", report.violations.first());
    }
}

/// The orbit of `x11^2` at rank 8: closed up to 3 edges, one violation at 4.
/// Independent elimination over the polarized generators gives 91 initial
/// matchings on `{1..8}` containing the source below but not the target.
#[test]
fn square_orbit_breaks_closure_at_four_edges() {
    use tca_lab::matching;
    use tca_lab::partitions::Partition;
    for flavor in [Flavor::Symmetric, Flavor::Antisymmetric] {
        let sys = VariableSystem::new(flavor, 8);
        let ideal = EquivariantIdeal::isotypic(&sys, &Partition::new(vec![2]).unwrap()).unwrap();
        assert!(verify_move_closure(&ideal, 3, 8, EdgeReading::LargestFirst).unwrap().is_closed());
        let report = verify_move_closure(&ideal, 4, 8, EdgeReading::LargestFirst).unwrap();
        assert_eq!(report.initial.iter().filter(|m| m.edge_count() == 4).count(), 91);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.from, matching![(1, 6), (2, 7), (3, 8), (4, 5)]);
        assert_eq!(v.to, matching![(1, 6), (2, 5), (3, 8), (4, 7)]);
    }
}
