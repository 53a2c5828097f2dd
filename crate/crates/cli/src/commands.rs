//! The subcommands. Each one fills a [`Report`]; problems with the input
//! itself come back as [`InputError`] and never reach the report.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tca_lab::algebra::{
    admissible_vector, degree_one_vector, highest_weight_vector, isotypic_support, verify_degree_one_closure,
    verify_move_closure, EquivariantIdeal, SparsePolynomial, VariableSystem,
};
use tca_lab::partitions::{closed_form_algebra, decompose_algebra, CharacterTable, Partition};
use tca_lab::poset::{
    comparability_witness, degree_one_leq, enumerate_colored_sets, enumerate_matchings, example_gamma, leq,
    leq_full, leq_type1, perfect_matchings, poset_width, replay, replay_remark, ColoredSet, EdgeReading, Matching,
    PosetOrder,
};
use tca_lab::tor::{stabilization_report, tor_table, DeterminantalSpec, TorTable};
use tca_lab::{Error, Flavor};

use crate::config::RunConfig;
use crate::parse::{parse_ideal, IdealFile, ParseError};
use crate::report::{Report, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

/// Width of the colored-set poset with at most 2 elements on 6 vertices,
/// computed independently of this crate.
pub const SANDBOX_WIDTH: usize = 12;

/// Exact width is only attempted below this many candidates.
const WIDTH_LIMIT: usize = 150;

/// Folds a core result into the report: budget and degree overflows make the
/// named check inconclusive, any other error fails it.
pub(crate) fn settle<T>(report: &mut Report, name: &str, r: tca_lab::Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e @ (Error::SearchBudgetExceeded(_) | Error::DegreeOverflow { .. })) => {
            report.check(name, Verdict::Inconclusive, e.to_string());
            None
        }
        Err(e) => {
            report.check(name, Verdict::Fail, e.to_string());
            None
        }
    }
}

fn order_name(order: PosetOrder) -> &'static str {
    match order {
        PosetOrder::Type1 => "type1",
        PosetOrder::Full => "full",
    }
}

fn flavors(cfg: &RunConfig) -> Vec<Flavor> {
    cfg.flavor.map_or_else(|| Flavor::ALL.to_vec(), |f| vec![f])
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn load_ideal(path: &Path) -> Result<(IdealFile, EquivariantIdeal), InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io { path: shown.clone(), message: e.to_string() })?;
    let file = parse_ideal(&text).map_err(|source| InputError::Parse { path: shown.clone(), source })?;
    let ideal = EquivariantIdeal::new(&file.system(), file.generators.clone())
        .map_err(|e| InputError::Usage(format!("{shown}: {e}")))?;
    Ok((file, ideal))
}

fn required_input(cfg: &RunConfig, what: &str) -> Result<(IdealFile, EquivariantIdeal), InputError> {
    match &cfg.input {
        Some(p) => load_ideal(p),
        None => Err(InputError::Usage(format!("{what} needs --input FILE"))),
    }
}

fn record_ideal(report: &mut Report, file: &IdealFile) {
    let sys = file.system();
    report.record("ideal", [("flavor", file.flavor.to_string()), ("rank", file.rank.to_string())]);
    for g in &file.generators {
        report.record("generator", [("f", g.display(&sys).to_string())]);
    }
}

// ---- decompose ----

/// Compares one degree of the algebra with the closed form; true when the
/// tables agree and are multiplicity-free.
pub(crate) fn decompose_degree(report: &mut Report, flavor: Flavor, d: usize, n: usize) -> bool {
    let table = decompose_algebra(flavor, d, n);
    let expected = closed_form_algebra(flavor, d, n);
    report.record(
        "table",
        [("flavor", flavor.to_string()), ("n", n.to_string()), ("d", d.to_string()), ("irreps", table.to_string())],
    );
    let ok = table.same_entries(&expected) && table.is_multiplicity_free();
    let detail = if ok { String::new() } else { format!("expected {expected}") };
    report.check(format!("closed-form/{flavor}/n={n}/d={d}"), Verdict::from_bool(ok), detail);
    ok
}

pub fn decompose(cfg: &RunConfig) -> Report {
    let mut report = Report::new("decompose", cfg.echo());
    let (d, n) = (cfg.degree.unwrap_or(2), cfg.rank.unwrap_or(4));
    for flavor in flavors(cfg) {
        for e in 0..=d {
            decompose_degree(&mut report, flavor, e, n);
        }
    }
    report
}

// ---- poset ----

fn path_string<M: ToString, S>(path: &[(M, S)]) -> String {
    joined(path.iter().map(|(m, _)| m.to_string()), "; ")
}

/// `Γ_n` pairwise incomparable under `≤`, and `Γ_n ⊑ Γ_m` for `n < m` with a
/// replayed witness.
pub(crate) fn verify_gamma(report: &mut Report, ranks: &[usize], budget: usize) {
    let gammas: Vec<(usize, Matching)> = ranks.iter().map(|&n| (n, example_gamma(n).expect("ranks checked"))).collect();
    for (n, g) in &gammas {
        report.record("gamma", [("n", n.to_string()), ("matching", g.to_string())]);
    }
    for (i, (n, a)) in gammas.iter().enumerate() {
        for (m, b) in &gammas[i + 1..] {
            let name = format!("incomparable/{n},{m}");
            let Some(up) = settle(report, &name, leq_type1(a, b, budget)) else { continue };
            let Some(down) = settle(report, &name, leq_type1(b, a, budget)) else { continue };
            let detail = match (up, down) {
                (false, false) => String::new(),
                (true, _) => format!("Γ_{n} ≤ Γ_{m}"),
                (_, true) => format!("Γ_{m} ≤ Γ_{n}"),
            };
            report.check(name, Verdict::from_bool(!up && !down), detail);
        }
    }
    for (i, (n, a)) in gammas.iter().enumerate() {
        for (m, b) in &gammas[i + 1..] {
            let name = format!("chain/{n}<{m}");
            let Some(witness) = settle(report, &name, leq_full(a, b, budget)) else { continue };
            match witness {
                Some(path) => {
                    report.record(
                        "witness",
                        [("n", n.to_string()), ("m", m.to_string()), ("moves", path.len().to_string()), ("path", path_string(&path))],
                    );
                    let replayed = replay(a, &path);
                    let ok = replayed.as_ref() == Ok(b);
                    let detail = if ok { String::new() } else { format!("replay gave {replayed:?}") };
                    report.check(name, Verdict::from_bool(ok), detail);
                }
                None => report.check(name, Verdict::Fail, format!("no move sequence from Γ_{n} to Γ_{m}")),
            }
        }
    }
}

/// Step-by-step replay of the relabeling argument. Informational: the
/// BFS witnesses above are what the checks rely on.
fn record_remark_replay(report: &mut Report, ranks: &[usize], budget: usize) {
    for (i, &n) in ranks.iter().enumerate() {
        for &m in &ranks[i + 1..] {
            let Some(r) = settle(report, &format!("remark-replay/{n}<{m}"), replay_remark(n, m, budget)) else {
                continue;
            };
            let valid = r.steps.iter().filter(|s| s.valid).count();
            let first = r.first_invalid().map_or("none".to_string(), |s| s.description.clone());
            report.record(
                "remark-replay",
                [
                    ("n", n.to_string()),
                    ("m", m.to_string()),
                    ("steps", r.steps.len().to_string()),
                    ("single-move-steps", valid.to_string()),
                    ("first-composite-step", first),
                ],
            );
        }
    }
}

pub fn verify_example(cfg: &RunConfig) -> Result<Report, InputError> {
    let ranks = cfg.nrange.map_or(vec![3, 4, 5], |r| r.ranks());
    if ranks[0] < 3 {
        return Err(InputError::Usage("verify-example needs n >= 3".into()));
    }
    let mut report = Report::new("poset verify-example", cfg.echo());
    verify_gamma(&mut report, &ranks, cfg.budget);
    record_remark_replay(&mut report, &ranks, cfg.budget);
    Ok(report)
}

pub fn compare(cfg: &RunConfig, a: &str, b: &str, order: PosetOrder) -> Result<Report, InputError> {
    let parse = |s: &str| s.parse::<Matching>().map_err(|e| InputError::Usage(format!("'{s}': {e}")));
    let (a, b) = (parse(a)?, parse(b)?);
    let mut report = Report::new("poset compare", cfg.echo());
    let Some(witness) = settle(&mut report, "compare", comparability_witness(&a, &b, order, cfg.budget)) else {
        return Ok(report);
    };
    let mut fields = vec![
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("order", order_name(order).to_string()),
        ("holds", witness.is_some().to_string()),
    ];
    if let Some(path) = &witness {
        fields.push(("moves", path.len().to_string()));
        fields.push(("path", path_string(path)));
    }
    report.record("compare", fields);
    match witness {
        Some(path) => {
            let ok = replay(&a, &path).as_ref() == Ok(&b);
            report.check("witness-replays", Verdict::from_bool(ok), "");
        }
        None => report.check("decided", Verdict::Pass, "not comparable in this direction"),
    }
    Ok(report)
}

/// Comparability matrix of `items`; `None` once a query runs out of budget.
fn relation<T>(
    report: &mut Report,
    name: &str,
    items: &[T],
    leq: impl Fn(&T, &T) -> tca_lab::Result<bool>,
) -> Option<Vec<Vec<bool>>> {
    let mut rel = vec![vec![false; items.len()]; items.len()];
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            rel[i][j] = i == j || settle(report, name, leq(a, b))?;
        }
    }
    Some(rel)
}

/// Greedy antichain over the relation, in index order.
fn greedy(rel: &[Vec<bool>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rel.len() {
        if chosen.iter().all(|&j| !rel[i][j] && !rel[j][i]) {
            chosen.push(i);
        }
    }
    chosen
}

pub fn antichain(cfg: &RunConfig, edges: usize, order: PosetOrder) -> Result<Report, InputError> {
    let n = cfg.rank.unwrap_or(6);
    if 2 * edges > n {
        return Err(InputError::Usage(format!("{edges} edges do not fit on {n} vertices")));
    }
    let mut report = Report::new("poset antichain", cfg.echo());
    let candidates = enumerate_matchings(edges, n as u32);
    let within = candidates.len() <= WIDTH_LIMIT;
    let Some(chosen) = settle(
        &mut report,
        "antichain",
        tca_lab::poset::antichain_search(&candidates, order, cfg.budget),
    ) else {
        return Ok(report);
    };
    report.record(
        "antichain",
        [
            ("edges", edges.to_string()),
            ("n", n.to_string()),
            ("order", order_name(order).to_string()),
            ("candidates", candidates.len().to_string()),
            ("size", chosen.len().to_string()),
            ("members", joined(&chosen, " ")),
        ],
    );
    let Some(rel) = relation(&mut report, "pairwise-incomparable", &chosen, |a, b| leq(a, b, order, cfg.budget)) else {
        return Ok(report);
    };
    let clash = (0..chosen.len()).flat_map(|i| (0..chosen.len()).map(move |j| (i, j))).find(|&(i, j)| i != j && rel[i][j]);
    let detail = clash.map_or(String::new(), |(i, j)| format!("{} ≤ {}", chosen[i], chosen[j]));
    report.check("pairwise-incomparable", Verdict::from_bool(clash.is_none()), detail);
    if within {
        let Some(rel) = relation(&mut report, "width", &candidates, |a, b| leq(a, b, order, cfg.budget)) else {
            return Ok(report);
        };
        let width = poset_width(candidates.len(), |i, j| rel[i][j]);
        report.record("width", [("value", width.to_string())]);
        report.check("greedy-within-width", Verdict::from_bool(chosen.len() <= width), format!("{} <= {width}", chosen.len()));
    } else {
        report.record("width", [("value", format!("skipped: more than {WIDTH_LIMIT} candidates"))]);
    }
    Ok(report)
}

/// Seeded degree-one ideals: one generator on `{1..k}` with random coefficients.
pub(crate) fn degree_one_suite(seed: u64, count: usize, rank: usize) -> Vec<EquivariantIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sys = VariableSystem::degree_one(rank);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(1..=3usize);
        let support: Vec<u32> = (1..=k as u32).collect();
        let coeffs: Vec<i64> = (0..1 << k).map(|_| rng.gen_range(-2..=2)).collect();
        let f = degree_one_vector(&sys, &support, &coeffs).expect("support within rank");
        if f.is_zero() {
            continue;
        }
        out.push(EquivariantIdeal::new(&sys, vec![f]).expect("homogeneous"));
    }
    out
}

/// Move closure of seeded degree-one ideals, and the width of the
/// colored-set poset with at most 2 elements on 6 vertices.
pub(crate) fn sandbox_checks(report: &mut Report, seed: u64, budget: usize) {
    for (k, ideal) in degree_one_suite(seed, 10, 6).iter().enumerate() {
        let name = format!("degree-one-closure/{k}");
        let Some(r) = settle(report, &name, verify_degree_one_closure(ideal, 4, 6)) else { continue };
        report.record(
            "sandbox-ideal",
            [
                ("k", k.to_string()),
                ("generator", ideal.generators()[0].display(ideal.system()).to_string()),
                ("initial", r.initial.len().to_string()),
                ("moves", r.moves_checked.to_string()),
                ("violations", r.violations.len().to_string()),
            ],
        );
        let detail = r.violations.first().map_or(String::new(), |v| format!("{} --{}--> {}", v.from, v.mv, v.to));
        report.check(name, Verdict::from_bool(r.is_closed()), detail);
    }
    let sets: Vec<ColoredSet> = enumerate_colored_sets(2, 6);
    let Some(rel) = relation(report, "sandbox-width", &sets, |a, b| degree_one_leq(a, b, budget)) else { return };
    let width = poset_width(sets.len(), |i, j| rel[i][j]);
    let chosen = greedy(&rel);
    report.record(
        "sandbox-poset",
        [
            ("elements", sets.len().to_string()),
            ("width", width.to_string()),
            ("greedy", chosen.len().to_string()),
            ("antichain", joined(chosen.iter().map(|&i| &sets[i]), " ")),
        ],
    );
    report.check("sandbox-width", Verdict::from_bool(width == SANDBOX_WIDTH), format!("{width} (known {SANDBOX_WIDTH})"));
    report.check("sandbox-greedy", Verdict::from_bool(chosen.len() <= width), format!("{} <= {width}", chosen.len()));
}

pub fn sandbox(cfg: &RunConfig) -> Report {
    let mut report = Report::new("poset sandbox", cfg.echo());
    sandbox_checks(&mut report, cfg.seed, cfg.budget);
    report
}

// ---- ideal ----

/// `E_μ ⊆ I_λ ⟺ λ ⊆ μ` over all `|λ|, |μ| ≤ size`; labels with `E_μ = 0` at
/// this rank are shown as `-` and skipped.
pub(crate) fn lattice_checks(report: &mut Report, flavor: Flavor, n: usize, size: u32) {
    let parts = Partition::all_up_to(size);
    let sys = VariableSystem::new(flavor, n);
    let name = format!("lattice/{flavor}/n={n}");
    report.record("lattice-columns", [("flavor", flavor.to_string()), ("mu", joined(&parts, " "))]);
    let mut mismatches = Vec::new();
    for lambda in &parts {
        let Some(ideal) = settle(report, &name, EquivariantIdeal::isotypic(&sys, lambda)) else { return };
        let mut row = String::new();
        for mu in &parts {
            let Some(hwv) = settle(report, &name, highest_weight_vector(&sys, mu)) else { return };
            if hwv.is_none() {
                row.push('-');
                continue;
            }
            let Some(got) = settle(report, &name, ideal.contains_isotypic(mu)) else { return };
            row.push(if got { '1' } else { '0' });
            if got != lambda.contained_in(mu) {
                mismatches.push(format!("E_{mu} in I_{lambda} = {got}"));
            }
        }
        report.record("lattice", [("flavor", flavor.to_string()), ("lambda", lambda.to_string()), ("row", row)]);
    }
    let detail = mismatches.first().cloned().unwrap_or_default();
    report.check(name, Verdict::from_bool(mismatches.is_empty()), detail);
}

pub fn ideal(cfg: &RunConfig, check: crate::config::IdealCheck, reading: EdgeReading) -> Result<Report, InputError> {
    use crate::config::IdealCheck;
    let title = match check {
        IdealCheck::Lattice => "ideal lattice",
        IdealCheck::InitialSet => "ideal initial-set",
        IdealCheck::MoveClosure => "ideal move-closure",
    };
    let mut report = Report::new(title, cfg.echo());
    if check == IdealCheck::Lattice && cfg.input.is_none() {
        let size = cfg.degree.unwrap_or(3) as u32;
        for flavor in flavors(cfg) {
            lattice_checks(&mut report, flavor, cfg.rank.unwrap_or(6), size);
        }
        return Ok(report);
    }
    let (file, ideal) = required_input(cfg, title)?;
    record_ideal(&mut report, &file);
    if check == IdealCheck::Lattice {
        support_checks(&mut report, &ideal, cfg.degree.unwrap_or(3) as u32);
        return Ok(report);
    }
    if file.flavor == Flavor::Generic {
        return Err(InputError::Usage("initial sets are defined for the symmetric and antisymmetric flavors".into()));
    }
    let bound = file.rank as u32;
    let max_edges = cfg.degree.unwrap_or((file.rank / 2).min(4));
    let Some(r) = settle(&mut report, "move-closure", verify_move_closure(&ideal, max_edges, bound, reading)) else {
        return Ok(report);
    };
    report.record(
        "initial-set",
        [("max-edges", max_edges.to_string()), ("vertices", bound.to_string()), ("size", r.initial.len().to_string())],
    );
    let mut members: Vec<&Matching> = r.initial.iter().collect();
    members.sort_by(|a, b| tca_lab::poset::total_order_with(a, b, reading));
    for m in members {
        report.record("initial", [("matching", m.to_string())]);
    }
    if check == IdealCheck::MoveClosure {
        for v in &r.violations {
            report.record("violation", [("from", v.from.to_string()), ("move", v.mv.to_string()), ("to", v.to.to_string())]);
        }
        report.check(
            "move-closure",
            Verdict::from_bool(r.is_closed()),
            format!("{} moves, {} violations", r.moves_checked, r.violations.len()),
        );
    }
    Ok(report)
}

/// Isotypic labels in the ideal; the set must be closed upward under `⊆`.
fn support_checks(report: &mut Report, ideal: &EquivariantIdeal, size: u32) {
    let Some(support) = settle(report, "support", isotypic_support(ideal, size)) else { return };
    report.record("support", [("labels", joined(&support, " "))]);
    let sys = ideal.system();
    let mut missing = None;
    'outer: for lambda in &support {
        for mu in Partition::all_up_to(size) {
            if !lambda.contained_in(&mu) || support.contains(&mu) {
                continue;
            }
            if matches!(highest_weight_vector(sys, &mu), Ok(Some(_))) {
                missing = Some(format!("{lambda} present but {mu} missing"));
                break 'outer;
            }
        }
    }
    report.check("support-upward-closed", Verdict::from_bool(missing.is_none()), missing.unwrap_or_default());
}

// ---- tor ----

fn is_trivial_tor0(t: &TorTable) -> bool {
    let tor0: Vec<(usize, CharacterTable)> = t.iter().filter(|((p, _), _)| *p == 0).map(|((_, q), c)| (*q, c.clone())).collect();
    match tor0.as_slice() {
        [(0, c)] => c.len() == 1 && c.iter().all(|(label, &m)| m == 1 && label.max_rows() == 0),
        _ => false,
    }
}

pub(crate) fn record_tor(report: &mut Report, t: &TorTable) {
    for ((p, q), c) in t.iter() {
        report.record(
            "tor",
            [("n", t.rank.to_string()), ("p", p.to_string()), ("q", q.to_string()), ("irreps", c.to_string())],
        );
    }
    report.check(format!("tor0-trivial/n={}", t.rank), Verdict::from_bool(is_trivial_tor0(t)), "");
}

pub fn tor(cfg: &RunConfig, rank_bound: usize) -> Result<Report, InputError> {
    let mut report = Report::new("tor", cfg.echo());
    let (p_max, q_max) = (cfg.pmax.unwrap_or(2), cfg.degree.unwrap_or(4));
    if let Some(path) = &cfg.input {
        let (file, ideal) = load_ideal(path)?;
        record_ideal(&mut report, &file);
        if let Some(t) = settle(&mut report, "tor", tor_table(&ideal, p_max, q_max)) {
            record_tor(&mut report, &t);
        }
        return Ok(report);
    }
    let flavor = cfg.flavor.unwrap_or(Flavor::Generic);
    let ranks = cfg.nrange.map_or(vec![2, 3, 4], |r| r.ranks());
    for &n in &ranks {
        report.record("spec", [("ideal", DeterminantalSpec::new(flavor, n, rank_bound).to_string())]);
    }
    let Some(s) = settle(&mut report, "stabilization", stabilization_report(flavor, rank_bound, p_max, q_max, &ranks)) else {
        return Ok(report);
    };
    for t in &s.tables {
        record_tor(&mut report, t);
    }
    for c in &s.cells {
        let first = c.first_stable_n.map_or("none".to_string(), |n| n.to_string());
        report.record("stability", [("p", c.p.to_string()), ("q", c.q.to_string()), ("first-stable-n", first)]);
    }
    let open = s.never_stabilized();
    if open.is_empty() {
        report.check("stabilization", Verdict::Pass, "");
    } else {
        let cells = joined(open.iter().map(|(p, q)| format!("({p},{q})")), ",");
        report.check("stabilization", Verdict::Inconclusive, format!("last two ranks differ at {cells}"));
    }
    Ok(report)
}

/// A nonzero admissible vector on `{1..2e}` with small random coefficients.
pub(crate) fn random_admissible(sys: &VariableSystem, edges: u32, rng: &mut ChaCha8Rng) -> SparsePolynomial {
    let support: Vec<u32> = (1..=2 * edges).collect();
    loop {
        let coeffs: Vec<i64> = (0..perfect_matchings(&support).len()).map(|_| rng.gen_range(-3..=3)).collect();
        let g = admissible_vector(sys, &support, &coeffs).expect("support within rank");
        if !g.is_zero() {
            return g;
        }
    }
}
