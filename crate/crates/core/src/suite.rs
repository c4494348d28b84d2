//! The acceptance suite: twelve criteria over the built-in catalogs.
//!
//! Each `criterion_N` is independent and returns a [`CriterionResult`].
//! [`verify_all`] runs them in order. The serialized report depends only on
//! the configuration: results are gathered in input order and the JSON
//! object keys are sorted, so the bytes do not depend on the thread count.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{helgason_check, string_identity_check, verify_weyl_basis, verify_weyl_properties, StringIdentity, WeylBasis};
use crate::classify::{classify, lattice_verdict, matsushima_bound, Catalog, LatticeVerdict, RealForm, RANK_THRESHOLD};
use crate::cohomology::{
    euler_characteristic, flag_dimension, flag_euler_characteristic, flag_poincare, hirsch_polynomial, low_betti,
    pontryagin_nonvanishing, symmetric_pairs, PoincarePolynomial,
};
use crate::curvature::{
    block_positivity, commuting_pairs, diagonal_coefficient_idx, verify_nonnegativity, xi_eval_commuting, xi_eval_direct,
    BlockPositivity, HorizontalVector, PairStrategy,
};
use crate::hodge::{binary_markings, DatumSpec, HodgeDatum};
use crate::rootsys::{CartanType, RootSystem, Series};
use crate::scalar::{fmt_q, qi, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest rank of the classical families swept.
    pub max_rank: usize,
    /// Commuting pairs generated per Hodge datum.
    pub pairs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 20_240_601, max_rank: 8, pairs: 1000 }
    }
}

/// Failures listed in full up to this many; the count is always exact.
const MAX_LISTED: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionResult {
    fn new(id: u32, name: &str) -> Self {
        Self { id, name: name.into(), passed: true, checked: 0, failure_count: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.passed = false;
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        }
    }

    fn absorb(&mut self, checked: u64, failures: u64, examples: Vec<String>) {
        self.checked += checked;
        if failures > 0 {
            self.passed = false;
            self.failure_count += failures;
            for e in examples {
                if self.failures.len() < MAX_LISTED {
                    self.failures.push(e);
                }
            }
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2}: {} ({} checked, {} failed)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failure_count
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: SuiteConfig,
    pub criteria: Vec<CriterionResult>,
    /// Ids of failed criteria.
    pub failures: Vec<u32>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, inputs: SuiteConfig, criteria: Vec<CriterionResult>) -> Self {
        let failures: Vec<u32> = criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
        Self { command: command.into(), inputs, passed: failures.is_empty(), criteria, failures }
    }

    /// Canonical JSON: sorted keys, two-space indentation.
    pub fn to_json(&self) -> String {
        canonical_json(self)
    }
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("report serializes");
    serde_json::to_string_pretty(&v).expect("value serializes")
}

fn types_up_to(max_rank: usize) -> Vec<CartanType> {
    CartanType::all_up_to(max_rank)
}

fn spec(t: &str, m: Vec<i64>) -> DatumSpec {
    DatumSpec { cartan_type: t.into(), marking: m }
}

/// Every nonzero 0/1 marking of the classical types of rank at most
/// `min(4, max_rank)`, plus `G2` and (rank 4 allowing) `F4`.
pub fn small_hodge_catalog(max_rank: usize) -> Vec<DatumSpec> {
    let mut out = Vec::new();
    for t in types_up_to(max_rank.min(4)) {
        if t.series == Series::E {
            continue;
        }
        for m in binary_markings(t.rank) {
            out.push(spec(&t.to_string(), m));
        }
    }
    out
}

/// [`small_hodge_catalog`], single-node markings of every type of rank 5 to
/// `max_rank`, and a few weighted markings.
pub fn hodge_catalog(max_rank: usize) -> Vec<DatumSpec> {
    let mut out = small_hodge_catalog(max_rank);
    for t in types_up_to(max_rank) {
        if t.rank < 5 {
            continue;
        }
        for node in 0..t.rank {
            let mut m = vec![0; t.rank];
            m[node] = 1;
            out.push(spec(&t.to_string(), m));
        }
    }
    let weighted = [("G2", vec![2, 1]), ("B3", vec![1, 0, 2]), ("C3", vec![2, 1, 0]), ("A4", vec![1, 2, 0, 1]), ("D4", vec![0, 2, 0, 1])];
    for (t, m) in weighted {
        if t[1..].parse::<usize>().unwrap() <= max_rank {
            out.push(spec(t, m));
        }
    }
    out
}

struct Built {
    hd: HodgeDatum,
    wb: Arc<WeylBasis>,
}

/// Data with one Weyl basis per root system.
fn build(specs: &[DatumSpec]) -> Vec<Built> {
    let mut bases: Vec<(CartanType, Arc<WeylBasis>)> = Vec::new();
    let mut out = Vec::new();
    for s in specs {
        let t: CartanType = s.cartan_type.parse().expect("catalog type");
        let wb = match bases.iter().find(|b| b.0 == t) {
            Some(b) => Arc::clone(&b.1),
            None => {
                let wb = Arc::new(WeylBasis::new(Arc::new(RootSystem::new(t))));
                bases.push((t, Arc::clone(&wb)));
                wb
            }
        };
        let hd = HodgeDatum::from_marking(Arc::clone(wb.root_system()), &s.marking).expect("catalog marking");
        out.push(Built { hd, wb });
    }
    out
}

fn weyl_bases(types: &[CartanType]) -> Vec<WeylBasis> {
    types.par_iter().map(|&t| WeylBasis::new(Arc::new(RootSystem::new(t)))).collect()
}

/// Jacobi identity and Weyl-basis clauses (a)–(d) for every type.
pub fn criterion_1(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(1, "structure constants: Jacobi and Weyl basis (a)-(d)");
    let types = types_up_to(cfg.max_rank);
    let rows: Vec<_> = weyl_bases(&types)
        .par_iter()
        .map(|wb| {
            let j = wb.chevalley().algebra().jacobi();
            let w = verify_weyl_basis(wb);
            (j, w)
        })
        .collect();
    for (t, (j, w)) in types.iter().zip(rows) {
        c.check(j.passed(), || format!("{t}: Jacobi {}", j.first_failure.clone().unwrap_or_default()));
        c.checked += j.triples;
        for cl in w.clauses.iter().filter(|cl| ["a", "b", "c", "d"].contains(&cl.clause.as_str())) {
            c.check(cl.passed, || format!("{t} ({}): {}", cl.clause, cl.counterexample.clone().unwrap_or_default()));
            c.checked += cl.checked;
        }
    }
    c.notes.push(format!("{} types", types.len()));
    c
}

/// Conjugation clauses (e)–(g) for every catalog datum.
pub fn criterion_2(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(2, "conjugations: Weyl basis (e)-(g) on every datum");
    let data = build(&hodge_catalog(cfg.max_rank));
    let rows: Vec<_> = data.par_iter().map(|b| verify_weyl_properties(&b.wb, &b.hd)).collect();
    for (b, w) in data.iter().zip(rows) {
        for cl in w.clauses.iter().filter(|cl| ["e", "f", "g"].contains(&cl.clause.as_str())) {
            c.check(cl.passed, || format!("{} ({}): {}", b.hd.label(), cl.clause, cl.counterexample.clone().unwrap_or_default()));
            c.checked += cl.checked;
        }
    }
    c.notes.push(format!("{} data", data.len()));
    c
}

/// The four-root cocycle identity on every algebra of rank at most 6.
pub fn criterion_3(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(3, "Helgason cocycle on zero-sum quadruples");
    let types = types_up_to(cfg.max_rank.min(6));
    let rows: Vec<_> = weyl_bases(&types).par_iter().map(helgason_check).collect();
    for r in rows {
        c.absorb(r.checked, r.failures, r.examples.iter().map(|e| format!("{}: {e}", r.cartan_type)).collect());
    }
    c
}

/// `N_{α,β}² = (k/2)⟨α,α⟩`, `k = −2⟨α,β⟩/⟨β,β⟩`, on every summable pair.
pub fn criterion_4(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(4, "root-string identity N^2 = (k/2)<a,a>");
    let types = types_up_to(cfg.max_rank);
    let bases = weyl_bases(&types);
    let rows: Vec<_> = bases
        .par_iter()
        .map(|wb| (string_identity_check(wb, StringIdentity::KForm), string_identity_check(wb, StringIdentity::PQForm)))
        .collect();
    let mut pq_failures = 0;
    let mut failing_types = Vec::new();
    for (k, pq) in rows {
        if !k.passed() {
            failing_types.push(k.cartan_type.clone());
        }
        c.absorb(k.checked, k.failures, k.examples.iter().take(1).map(|e| format!("{}: {e}", k.cartan_type)).collect());
        pq_failures += pq.failures;
    }
    if !failing_types.is_empty() {
        c.notes.push(format!("fails on {}", failing_types.join(", ")));
    }
    c.notes.push(format!("N^2 = q(p+1)|b|^2/2 holds with {pq_failures} failures"));
    c
}

fn pairs_for(b: &Built, cfg: &SuiteConfig, salt: u64) -> Vec<(HorizontalVector, HorizontalVector)> {
    commuting_pairs(&b.hd, &b.wb, PairStrategy::Mixed, cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15), cfg.pairs)
}

/// The direct evaluator and the closed form agree on commuting pairs.
pub fn criterion_5(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(5, "oracle equivalence: closed form = direct evaluator");
    let data = build(&small_hodge_catalog(cfg.max_rank));
    let rows: Vec<_> = data
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let pairs = pairs_for(b, cfg, i as u64);
            let mut checked = 0u64;
            let mut bad = 0u64;
            let mut first = None;
            for (x, y) in &pairs {
                let closed = xi_eval_commuting(&b.wb, &b.hd, x, y).expect("generated pairs commute");
                let direct = xi_eval_direct(&b.wb, &b.hd, x, y).expect("matching lengths");
                checked += 1;
                if closed != direct {
                    bad += 1;
                    if first.is_none() {
                        first = Some(format!("{}: closed {} vs direct {}", b.hd.label(), closed, direct));
                    }
                }
            }
            (checked, bad, first)
        })
        .collect();
    let mut data_failing = 0;
    for (checked, bad, first) in rows {
        data_failing += (bad > 0) as usize;
        c.absorb(checked, bad, first.into_iter().collect());
    }
    c.notes.push(format!("{} data, {} with mismatches", data.len(), data_failing));
    c
}

/// Nonnegativity of every diagonal coefficient and of both evaluators on
/// the generated commuting pairs.
pub fn criterion_6(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(6, "nonnegativity of coefficients and of Xi on commuting pairs");
    let data = build(&hodge_catalog(cfg.max_rank));
    let rows: Vec<_> = data
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let rep = verify_nonnegativity(&b.wb, &b.hd);
            let mut checked = rep.pairs_checked as u64;
            let mut fails: Vec<String> = rep
                .violations
                .iter()
                .map(|v| format!("{}: C({}, {}) = {}", b.hd.label(), v.alpha, v.beta, v.coefficient))
                .collect();
            let direct_too = b.hd.root_system().rank() <= 4;
            for (x, y) in pairs_for(b, cfg, i as u64) {
                let v = xi_eval_commuting(&b.wb, &b.hd, &x, &y).expect("generated pairs commute");
                checked += 1;
                if v.real_sign() == Some(std::cmp::Ordering::Less) || !v.is_real() {
                    fails.push(format!("{}: closed form {}", b.hd.label(), v));
                }
                if direct_too {
                    let d = xi_eval_direct(&b.wb, &b.hd, &x, &y).expect("matching lengths");
                    checked += 1;
                    if d.real_sign() == Some(std::cmp::Ordering::Less) || !d.is_real() {
                        fails.push(format!("{}: direct {}", b.hd.label(), d));
                    }
                }
            }
            (checked, fails, rep.string_branch_exceptions.len())
        })
        .collect();
    let mut string_exceptions = 0;
    for (checked, fails, se) in rows {
        c.absorb(checked, fails.len() as u64, fails);
        string_exceptions += se;
    }
    c.notes.push(format!("{} data", data.len()));
    c.notes.push(format!("{string_exceptions} pairs with <a,b> < 0 and N_ab^2 != -<a,b>"));
    c
}

/// Totally ordered blocks are strictly positive, and commuting basis pairs
/// inside them never lie in the zero locus.
pub fn criterion_7(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(7, "block argument on totally ordered blocks");
    let data = build(&hodge_catalog(cfg.max_rank));
    let mut ordered = 0;
    let mut bound_fails = Vec::new();
    for b in &data {
        let rs = b.hd.root_system();
        for block in b.hd.blocks() {
            let rep = block_positivity(&b.wb, &b.hd, &block);
            if matches!(rep.verdict, BlockPositivity::NotTotallyOrdered { .. }) {
                continue;
            }
            ordered += 1;
            if !rep.length_bound_holds {
                bound_fails.push(format!("{} block {}", b.hd.label(), rs.root_name(&rs.simple_roots()[block.anchor])));
            }
            c.check(rep.verdict == BlockPositivity::StrictlyPositive, || format!("{} anchor {}: {:?}", b.hd.label(), block.anchor + 1, rep.verdict));
            let n = b.hd.horizontal().len();
            for &x in &block.roots {
                let i = b.hd.horizontal_position(x).expect("block roots are horizontal");
                let e = HorizontalVector::basis(n, i);
                let v = xi_eval_commuting(&b.wb, &b.hd, &e, &e.scale(&Scalar::from_int(2))).expect("proportional pairs commute");
                c.check(v.is_zero(), || format!("{}: Xi(e, 2e) = {v} at {}", b.hd.label(), rs.root(x)));
            }
            for (i, &x) in block.roots.iter().enumerate() {
                for &y in &block.roots[i + 1..] {
                    if rs.sum_index(x, y).is_some() {
                        continue;
                    }
                    let v = diagonal_coefficient_idx(&b.wb, x, y);
                    c.check(v > qi(0), || format!("{}: C({}, {}) = {}", b.hd.label(), rs.root(x), rs.root(y), fmt_q(&v)));
                }
            }
        }
    }
    c.notes.push(format!("{ordered} totally ordered blocks"));
    c.notes.push(format!(
        "<a,b> >= <b,b> fails on {} of them{}",
        bound_fails.len(),
        bound_fails.first().map(|s| format!(", e.g. {s}")).unwrap_or_default()
    ));
    c
}

fn cp_oracle(n: usize) -> PoincarePolynomial {
    let mut v = vec![0; 2 * n + 1];
    for i in 0..=n {
        v[2 * i] = 1;
    }
    PoincarePolynomial { coefficients: v }
}

/// Hirsch quotients against Schubert cells, Weyl orders and dimensions.
pub fn criterion_8(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(8, "Hirsch formula: CP^n, Euler characteristic, top degree");
    for n in 1..=8 {
        let s: Vec<u32> = (2..=n as u32 + 1).map(|d| 2 * d).collect();
        let r: Vec<u32> = std::iter::once(2).chain((2..=n as u32).map(|d| 2 * d)).collect();
        match hirsch_polynomial(&s, &r) {
            Ok(p) => c.check(p == cp_oracle(n), || format!("CP^{n}: {p}")),
            Err(e) => c.fail(format!("CP^{n}: {e}")),
        }
    }
    for pair in symmetric_pairs(cfg.max_rank).iter().filter(|p| p.is_equal_rank()) {
        let p = pair.poincare().expect("equal rank");
        let chi = euler_characteristic(pair).expect("equal rank");
        c.check(p.at_one() == chi, || format!("{}: P(1) = {} but |W_U|/|W_K| = {chi}", pair.name, p.at_one()));
        c.check(p.degree() == pair.dim(), || format!("{}: top degree {} vs dim {}", pair.name, p.degree(), pair.dim()));
        c.check(p.is_palindromic() && p.odd_vanishes(), || format!("{}: {p}", pair.name));
    }
    for b in build(&hodge_catalog(cfg.max_rank)) {
        let p = flag_poincare(&b.hd).expect("Levi is equal rank");
        let chi = flag_euler_characteristic(&b.hd);
        c.check(p.at_one() == chi, || format!("{}: P(1) = {} but {chi}", b.hd.label(), p.at_one()));
        c.check(p.degree() == flag_dimension(&b.hd), || format!("{}: top degree {}", b.hd.label(), p.degree()));
        c.check(p.is_palindromic(), || format!("{}: {p}", b.hd.label()));
    }
    c
}

/// The low-degree Betti table.
pub fn criterion_9(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(9, "low-degree Betti table (h2, h4)");
    for pair in symmetric_pairs(cfg.max_rank) {
        let b = match low_betti(&pair) {
            Ok(b) => b,
            Err(e) => {
                c.fail(format!("{}: {e}", pair.name));
                continue;
            }
        };
        let herm = pair.is_hermitian();
        let mut expected: Vec<(&str, u64, u64)> = Vec::new();
        if herm {
            expected.push(("Hermitian", 1, 2));
        } else if pair.is_equal_rank() {
            expected.push(("equal rank", 0, 1));
        }
        if pair.k_simple() {
            expected.push(("K simple", if herm { 1 } else { 0 }, 0));
        }
        for (why, h2, h4) in expected {
            c.check((b.h2, b.h4) == (h2, h4), || format!("{} [{why}]: ({}, {}) expected ({h2}, {h4})", pair.name, b.h2, b.h4));
        }
        c.check(b.consistent(), || format!("{}: Hirsch {:?}, invariants {:?}, case split {:?}", pair.name, b.hirsch, b.invariant, b.branch));
    }
    c
}

/// Non-vanishing of `p₁` on every equal-rank pair.
pub fn criterion_10(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(10, "p1 of U x_K k nonzero in H^4(U/K)");
    for pair in symmetric_pairs(cfg.max_rank).iter().filter(|p| p.is_equal_rank()) {
        let r = pontryagin_nonvanishing(pair).expect("equal rank");
        c.check(r.nonvanishing, || r.to_string());
    }
    c
}

const EXCEPTIONAL_HODGE_NON_HERMITIAN: [&str; 8] = ["E6(2)", "E7(7)", "E7(-5)", "E8(8)", "E8(-24)", "F4(4)", "F4(-20)", "G2(2)"];

/// Membership in the excluded families, decided from the name alone.
fn excluded_family(f: &RealForm) -> bool {
    let name = f.record.name.as_str();
    let args = |prefix: &str| -> Option<(u32, u32)> {
        let inner = name.strip_prefix(prefix)?.strip_suffix(')')?;
        let (p, q) = inner.split_once(',')?;
        Some((p.parse().ok()?, q.parse().ok()?))
    };
    if let Some((p, q)) = args("SO(") {
        return (p % 2 == 0 || q % 2 == 0) && p != 2 && q != 2;
    }
    args("Sp(").is_some() || EXCEPTIONAL_HODGE_NON_HERMITIAN.contains(&name)
}

/// Lattice verdicts and Matsushima gates.
pub fn criterion_11(_cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(11, "classification gates and Matsushima bound");
    let cat = match Catalog::load() {
        Ok(cat) => cat,
        Err(e) => {
            c.fail(e.to_string());
            return c;
        }
    };
    for f in &cat.forms {
        let expect_nk = excluded_family(f) && f.record.real_rank >= RANK_THRESHOLD;
        let v = lattice_verdict(f);
        c.check((v == LatticeVerdict::NotKahlerLattice) == expect_nk, || format!("{}: {:?}", f.record.name, v));
        if f.record.family == "Sp(p,q)" && f.record.real_rank == 1 {
            c.check(v == LatticeVerdict::BelowThreshold, || format!("{}: {:?}", f.record.name, v));
        }
        let cl = classify(f);
        if cl.hodge && !cl.hermitian {
            c.check(cl.b2_vanishes == (f.record.real_rank >= 12), || format!("{}: b2 gate", f.record.name));
            c.check(cl.b4_is_one == (f.record.real_rank >= 20), || format!("{}: b4 gate", f.record.name));
        }
    }
    c.check(matsushima_bound(20) == qi(4), || "m(20) != 4".into());
    c.check(matsushima_bound(12) == qi(2), || "m(12) != 2".into());
    let ex = cat.exceptional_hodge_non_hermitian();
    c.notes.push(format!("{} exceptional Hodge non-Hermitian forms", ex.len()));
    c.check(ex.len() == EXCEPTIONAL_HODGE_NON_HERMITIAN.len(), || format!("{} exceptional forms", ex.len()));
    c
}

/// Criteria 1 to 11 in order.
pub fn run_criteria(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    let fns: [fn(&SuiteConfig) -> CriterionResult; 11] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9,
        criterion_10, criterion_11,
    ];
    fns.iter().map(|f| f(cfg)).collect()
}

/// Runs `f` on a dedicated pool of `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool").install(f)
}

/// Configuration used by criterion 12 for its repeated runs.
pub fn determinism_config(cfg: &SuiteConfig) -> SuiteConfig {
    SuiteConfig { seed: cfg.seed, max_rank: cfg.max_rank.min(3), pairs: cfg.pairs.min(50) }
}

/// Byte-identical reports across repeated runs and worker counts.
pub fn criterion_12(cfg: &SuiteConfig) -> CriterionResult {
    let mut c = CriterionResult::new(12, "determinism across runs and thread counts");
    let small = determinism_config(cfg);
    let run = |threads| with_threads(threads, || Report::new("verify-all", small.clone(), run_criteria(&small)).to_json());
    let many = std::thread::available_parallelism().map_or(4, |n| n.get()).max(2);
    let a = run(1);
    let b = run(many);
    let again = run(many);
    c.check(a == b, || format!("1 thread vs {many} threads differ"));
    c.check(b == again, || "two runs differ".into());
    let reparsed: serde_json::Value = serde_json::from_str(&a).expect("report is JSON");
    c.check(serde_json::to_string_pretty(&reparsed).unwrap() == a, || "JSON does not round-trip".into());
    c.notes.push(format!("max rank {}, {} pairs per datum, 1 and {many} threads", small.max_rank, small.pairs));
    c
}

pub fn verify_all(cfg: &SuiteConfig) -> Report {
    let mut criteria = run_criteria(cfg);
    criteria.push(criterion_12(cfg));
    Report::new("verify-all", cfg.clone(), criteria)
}
