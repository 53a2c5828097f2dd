//! The acceptance suite. Each criterion runs into a scratch report whose
//! records are kept and whose checks collapse into one line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tca_lab::algebra::{subsets, verify_move_closure, EquivariantIdeal, VariableSystem};
use tca_lab::partitions::{decompose_into_schur, CharacterTable, Irrep, Partition, SymPolynomial};
use tca_lab::poset::EdgeReading;
use tca_lab::rational::Q;
use tca_lab::tor::{determinantal_ideal, stabilization_report, tor_table, DeterminantalSpec};
use tca_lab::{part, Flavor};

use crate::commands::{decompose_degree, lattice_checks, random_admissible, record_tor, sandbox_checks, settle, verify_gamma};
use crate::config::RunConfig;
use crate::report::{Check, Report, Verdict};

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&mut Report, &RunConfig),
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: "C1", title: "decomposition", run: c1_decomposition },
    Criterion { id: "C2", title: "ideal-lattice", run: c2_lattice },
    Criterion { id: "C3", title: "gamma-example", run: c3_gamma },
    Criterion { id: "C4", title: "move-closure", run: c4_move_closure },
    Criterion { id: "C5", title: "tor-oracles", run: c5_tor_oracles },
    Criterion { id: "C6", title: "stabilization", run: c6_stabilization },
    Criterion { id: "C7", title: "degree-one-control", run: c7_sandbox },
];

impl Criterion {
    /// Runs the criterion alone; the returned report carries its records and
    /// individual checks.
    pub fn run(&self, cfg: &RunConfig) -> Report {
        let mut scratch = Report::new(&format!("accept {}", self.id), cfg.echo());
        (self.run)(&mut scratch, cfg);
        scratch
    }

    pub fn name(&self) -> String {
        format!("{}-{}", self.id, self.title)
    }

    /// One check summarizing a scratch report.
    pub fn summarize(&self, scratch: &Report) -> Check {
        let count = |v| scratch.checks.iter().filter(|c| c.verdict == v).count();
        let (fail, open) = (count(Verdict::Fail), count(Verdict::Inconclusive));
        let mut detail = format!("{} checks, {fail} failed, {open} inconclusive", scratch.checks.len());
        if let Some(c) = scratch.checks.iter().find(|c| c.verdict != Verdict::Pass) {
            detail.push_str(&format!("; first: {} {}", c.name, c.detail));
        }
        if scratch.checks.is_empty() {
            return Check { name: self.name(), verdict: Verdict::Fail, detail: "no checks ran".into() };
        }
        Check { name: self.name(), verdict: scratch.verdict(), detail }
    }
}

pub fn accept(cfg: &RunConfig) -> Report {
    let mut report = Report::new("accept", cfg.echo());
    for c in CRITERIA {
        let scratch = c.run(cfg);
        let check = c.summarize(&scratch);
        report.records.extend(scratch.records);
        report.checks.push(check);
    }
    report
}

fn c1_decomposition(r: &mut Report, _: &RunConfig) {
    for flavor in Flavor::ALL {
        for n in 1..=6 {
            for d in 0..=5 {
                decompose_degree(r, flavor, d, n);
            }
        }
    }
}

fn c2_lattice(r: &mut Report, _: &RunConfig) {
    for flavor in Flavor::ALL {
        lattice_checks(r, flavor, 6, 3);
    }
}

fn c3_gamma(r: &mut Report, cfg: &RunConfig) {
    verify_gamma(r, &[3, 4, 5, 6], cfg.budget);
}

/// All `I_λ` with `|λ| ≤ 2` plus seeded random ideals, for both flavors with
/// a matching model, at `n = 8` and up to 4 edges.
fn c4_move_closure(r: &mut Report, cfg: &RunConfig) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for flavor in [Flavor::Symmetric, Flavor::Antisymmetric] {
        let sys = VariableSystem::new(flavor, 8);
        let mut suite: Vec<(String, tca_lab::Result<EquivariantIdeal>)> = Partition::all_up_to(2)
            .into_iter()
            .map(|l| (format!("I_{l}"), EquivariantIdeal::isotypic(&sys, &l)))
            .collect();
        for k in 0..3 {
            let gens: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| {
                let e = rng.gen_range(1..=3);
                random_admissible(&sys, e, &mut rng)
            }).collect();
            suite.push((format!("random{k}"), EquivariantIdeal::new(&sys, gens)));
        }
        for (label, ideal) in suite {
            let name = format!("move-closure/{flavor}/{label}");
            let Some(ideal) = settle(r, &name, ideal) else { continue };
            let Some(rep) = settle(r, &name, verify_move_closure(&ideal, 4, 8, EdgeReading::LargestFirst)) else {
                continue;
            };
            r.record(
                "move-closure",
                [
                    ("flavor", flavor.to_string()),
                    ("ideal", label),
                    ("initial", rep.initial.len().to_string()),
                    ("moves", rep.moves_checked.to_string()),
                    ("violations", rep.violations.len().to_string()),
                ],
            );
            let detail = rep.violations.first().map_or(String::new(), |v| format!("{} --{}--> {}", v.from, v.mv, v.to));
            r.check(name, Verdict::from_bool(rep.is_closed()), detail);
        }
    }
}

/// `Λᵖ(W)` as a character: the sum of the weights of all `p`-subsets of
/// the variables.
fn exterior_power_character(sys: &VariableSystem, p: usize) -> SymPolynomial {
    let mut ch = if sys.is_bivariate() { SymPolynomial::zero_bivariate(sys.rank()) } else { SymPolynomial::zero(sys.rank()) };
    for set in subsets(&(0..sys.len() as u32).collect::<Vec<_>>(), p) {
        let mut w = sys.zero_weight();
        for v in set {
            sys.add_var_weight(&mut w, v);
        }
        ch.add_term(w, Q::from_integer(1.into()));
    }
    ch
}

/// Hypersurface and Koszul oracles. Every strand computed here also checks
/// `∂∘∂ = 0` on each basis element; a failure surfaces as an error.
fn c5_tor_oracles(r: &mut Report, _: &RunConfig) {
    let name = "hypersurface/symmetric/n=2";
    let det = determinantal_ideal(&DeterminantalSpec::new(Flavor::Symmetric, 2, 1));
    if let Some(t) = settle(r, name, det.and_then(|i| tor_table(&i, 3, 4))) {
        record_tor(r, &t);
        let tor1 = t.get(1, 2).to_string() == "{(2,2):1}" && (0..=4).all(|q| q == 2 || t.get(1, q).is_empty());
        let higher = (2..=3).all(|p| (0..=4).all(|q| t.get(p, q).is_empty()));
        r.check(name, Verdict::from_bool(tor1 && higher), if tor1 && higher { String::new() } else { t.to_string() });
    }
    for flavor in Flavor::ALL {
        let name = format!("koszul/{flavor}/n=2");
        let ideal = determinantal_ideal(&DeterminantalSpec::new(flavor, 2, 0));
        let Some(ideal) = settle(r, &name, ideal) else { continue };
        let Some(t) = settle(r, &name, tor_table(&ideal, 3, 3)) else { continue };
        record_tor(r, &t);
        let mut bad = None;
        for p in 0..=3 {
            let Some(expected) = settle(r, &name, decompose_into_schur(&exterior_power_character(ideal.system(), p), false)) else {
                return;
            };
            if !t.get(p, p).same_entries(&expected) || (0..=3).any(|q| q != p && !t.get(p, q).is_empty()) {
                bad = Some(format!("p={p}: got {} expected {expected}", t.get(p, p)));
                break;
            }
        }
        r.check(name, Verdict::from_bool(bad.is_none()), bad.unwrap_or_default());
    }
    // a non-Koszul, non-hypersurface case for the nilpotency check
    let name = "boundary-nilpotent/antisymmetric/n=5";
    let pf = determinantal_ideal(&DeterminantalSpec::new(Flavor::Antisymmetric, 5, 2));
    if settle(r, name, pf.and_then(|i| tor_table(&i, 3, 4))).is_some() {
        r.check(name, Verdict::Pass, "");
    }
}

/// Generic flavor, forms of rank ≤ 1: tables at `n = 3` and `n = 4` agree on
/// every label with at most 3 rows.
fn c6_stabilization(r: &mut Report, _: &RunConfig) {
    let name = "generic-r1/n=3,4";
    let Some(s) = settle(r, name, stabilization_report(Flavor::Generic, 1, 2, 4, &[3, 4])) else { return };
    let (t3, t4) = (s.table(3).expect("rank 3"), s.table(4).expect("rank 4"));
    record_tor(r, t3);
    record_tor(r, t4);
    let mut differ = Vec::new();
    for q in 0..=4 {
        for p in 0..=2 {
            if !t3.agrees_at(t4, p, q, 3) {
                differ.push(format!("({p},{q})"));
            }
        }
    }
    let rows4 = t4.iter().flat_map(|(_, c)| c.labels().filter(|l| l.max_rows() > 3).cloned().collect::<Vec<_>>()).count();
    r.record("stable-identification", [("labels-with-4-rows-at-n=4", rows4.to_string())]);
    r.check(name, Verdict::from_bool(differ.is_empty()), differ.join(","));
    // the linear strand in degree 3 is the first place something nontrivial happens
    let mut expected = CharacterTable::new(4);
    expected.add(Irrep::Pair(part![2, 1], part![1, 1, 1]), 1);
    expected.add(Irrep::Pair(part![1, 1, 1], part![2, 1]), 1);
    let tor23 = t4.get(2, 3);
    r.check("generic-r1/tor2-q3", Verdict::from_bool(tor23.same_entries(&expected)), tor23.to_string());
}

fn c7_sandbox(r: &mut Report, cfg: &RunConfig) {
    sandbox_checks(r, cfg.seed, cfg.budget);
}
