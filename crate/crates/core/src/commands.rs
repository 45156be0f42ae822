//! Report-producing commands behind the `indpoly` binary: `analyze`, `poly`,
//! `oracle`, `verify` and `search`. Every report serializes to JSON with a
//! fixed field order and renders to plain text.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::engine::{
    independence_poly, oracle_profile_capped, profile, repeated_zykov, star_transform,
    StableSetProfile,
};
use crate::error::{Error, Result, MAX_VERTICES};
use crate::expr::{eval, parse, Evaluated};
use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::par::{self, Exec};
use crate::poly::Polynomial;
use crate::trees;

/// Three-valued structural flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    Yes,
    No,
    SkippedCapacity,
}

impl Flag {
    fn from_bool(b: bool) -> Self {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }

    fn from_result(r: Result<bool>) -> Self {
        r.map_or(Flag::SkippedCapacity, Flag::from_bool)
    }

    fn text(self) -> &'static str {
        match self {
            Flag::Yes => "true",
            Flag::No => "false",
            Flag::SkippedCapacity => "skipped(capacity)",
        }
    }
}

impl Serialize for Flag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Flag::Yes => s.serialize_bool(true),
            Flag::No => s.serialize_bool(false),
            Flag::SkippedCapacity => s.serialize_str("skipped(capacity)"),
        }
    }
}

/// Edge count, or the marker for graphs never materialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeCount {
    Known(usize),
    ClosedFormOnly,
}

impl Serialize for EdgeCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EdgeCount::Known(e) => s.serialize_u64(*e as u64),
            EdgeCount::ClosedFormOnly => s.serialize_str("closed-form-only"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub tree: Flag,
    pub claw_free: Flag,
    pub well_covered: Flag,
    pub very_well_covered: Flag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub expression: String,
    pub vertices: u64,
    pub edges: EdgeCount,
    pub alpha: usize,
    pub coefficients: Vec<String>,
    pub degree: usize,
    pub is_unimodal: bool,
    pub modes: Vec<usize>,
    pub is_log_concave: bool,
    pub real_root_count: usize,
    pub all_roots_real: bool,
    pub flags: StructuralFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyReport {
    pub expression: String,
    pub vertices: u64,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub expression: String,
    pub profile: StableSetProfile,
    pub matches_engine: bool,
}

fn evaluate(text: &str) -> Result<(String, Evaluated)> {
    let e = parse(text)?;
    Ok((e.to_string(), eval(&e)?))
}

pub fn cmd_analyze(text: &str) -> Result<AnalysisReport> {
    let (expression, value) = evaluate(text)?;
    let poly = value.poly()?;
    let shape = poly.shape()?;
    let (edges, flags) = match value.graph() {
        Some(g) => (
            EdgeCount::Known(g.edge_count()),
            StructuralFlags {
                tree: Flag::from_bool(g.is_tree()),
                claw_free: Flag::from_bool(g.is_claw_free()),
                well_covered: Flag::from_result(g.is_well_covered()),
                very_well_covered: Flag::from_result(g.is_very_well_covered()),
            },
        ),
        None => (
            EdgeCount::ClosedFormOnly,
            StructuralFlags {
                tree: Flag::SkippedCapacity,
                claw_free: Flag::SkippedCapacity,
                well_covered: Flag::SkippedCapacity,
                very_well_covered: Flag::SkippedCapacity,
            },
        ),
    };
    Ok(AnalysisReport {
        expression,
        vertices: value.vertices(),
        edges,
        alpha: shape.degree,
        coefficients: poly.to_decimal_strings(),
        degree: shape.degree,
        is_unimodal: shape.is_unimodal,
        modes: shape.modes,
        is_log_concave: shape.is_log_concave,
        real_root_count: shape.real_root_count,
        all_roots_real: shape.all_roots_real,
        flags,
    })
}

pub fn cmd_poly(text: &str) -> Result<PolyReport> {
    let (expression, value) = evaluate(text)?;
    Ok(PolyReport {
        expression,
        vertices: value.vertices(),
        coefficients: value.poly()?.to_decimal_strings(),
    })
}

pub fn cmd_oracle(text: &str, max_vertices: usize) -> Result<OracleReport> {
    let (expression, value) = evaluate(text)?;
    let g = value
        .graph()
        .ok_or_else(|| Error::ClosedFormOnly(expression.clone()))?;
    let oracle = oracle_profile_capped(g, max_vertices)?;
    let matches_engine = oracle.to_poly() == independence_poly(g)?;
    Ok(OracleReport {
        expression,
        profile: oracle,
        matches_engine,
    })
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "expression: {}", self.expression);
        let _ = writeln!(s, "vertices: {}", self.vertices);
        match self.edges {
            EdgeCount::Known(e) => {
                let _ = writeln!(s, "edges: {e}");
            }
            EdgeCount::ClosedFormOnly => {
                let _ = writeln!(s, "edges: closed-form-only");
            }
        }
        let _ = writeln!(s, "alpha: {}", self.alpha);
        let _ = writeln!(s, "coefficients: [{}]", self.coefficients.join(", "));
        let _ = writeln!(s, "degree: {}", self.degree);
        let _ = writeln!(s, "unimodal: {}", self.is_unimodal);
        let modes: Vec<String> = self.modes.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "modes: {{{}}}", modes.join(", "));
        let _ = writeln!(s, "log_concave: {}", self.is_log_concave);
        let _ = writeln!(s, "real_root_count: {}", self.real_root_count);
        let _ = writeln!(s, "all_roots_real: {}", self.all_roots_real);
        let _ = writeln!(s, "tree: {}", self.flags.tree.text());
        let _ = writeln!(s, "claw_free: {}", self.flags.claw_free.text());
        let _ = writeln!(s, "well_covered: {}", self.flags.well_covered.text());
        let _ = writeln!(s, "very_well_covered: {}", self.flags.very_well_covered.text());
        s
    }
}

impl PolyReport {
    pub fn to_text(&self) -> String {
        format!("[{}]\n", self.coefficients.join(", "))
    }
}

impl OracleReport {
    pub fn to_text(&self) -> String {
        let s: Vec<String> = self.profile.s.iter().map(ToString::to_string).collect();
        format!(
            "expression: {}\nn: {}\nalpha: {}\ns: ({})\nmatches_engine: {}\n",
            self.expression,
            self.profile.n,
            self.profile.alpha,
            s.join(", "),
            self.matches_engine
        )
    }
}

// ---------------------------------------------------------------------------
// verify

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Star,
    CentipedeEven,
    CentipedeOdd,
    SpiderClosedForm,
    SpiderMode,
    RatioBound,
    ZykovM,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Star,
        Identity::CentipedeEven,
        Identity::CentipedeOdd,
        Identity::SpiderClosedForm,
        Identity::SpiderMode,
        Identity::RatioBound,
        Identity::ZykovM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Star => "star",
            Identity::CentipedeEven => "centipede-even",
            Identity::CentipedeOdd => "centipede-odd",
            Identity::SpiderClosedForm => "spider-closed-form",
            Identity::SpiderMode => "spider-mode",
            Identity::RatioBound => "lemma1",
            Identity::ZykovM => "zykov-m",
        }
    }

    /// Smallest and largest admissible `n`.
    pub fn n_range(self) -> (usize, usize) {
        match self {
            Identity::Star => (1, 20),
            Identity::CentipedeEven => (1, MAX_VERTICES / 4),
            Identity::CentipedeOdd => (1, (MAX_VERTICES - 2) / 4),
            Identity::SpiderClosedForm => (2, MAX_VERTICES / 2 - 1),
            Identity::SpiderMode => (2, 5000),
            Identity::RatioBound => (1, 32),
            Identity::ZykovM => (1, 200),
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub n_max: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("identity: {}  n_max: {}  seed: {}\n", self.identity, self.n_max, self.seed);
        for r in &self.rows {
            let _ = writeln!(
                s,
                "n={:<4} {}  {}",
                r.n,
                if r.pass { "PASS" } else { "FAIL" },
                r.detail
            );
        }
        let _ = writeln!(s, "{}/{} pass", self.passed, self.passed + self.failed);
        s
    }
}

/// Random graph on `n` vertices with edge probability 1/2.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    random_graph_p(n, 0.5, rng)
}

pub fn random_graph_p(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("indices in range")
}

const STAR_GRAPHS_PER_N: usize = 5;
const LEMMA1_GRAPHS_PER_N: usize = 5;

fn verify_one(identity: Identity, n: usize, seed: u64) -> Result<VerifyRow> {
    let one_plus_x = |m: usize| Polynomial::one_plus_x_pow(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let row = |pass: bool, detail: String| Ok(VerifyRow { n, pass, detail });
    match identity {
        Identity::Star => {
            let mut bad = 0;
            for _ in 0..STAR_GRAPHS_PER_N {
                let g = random_graph(n, &mut rng);
                let lhs = star_transform(&crate::engine::oracle_profile(&g)?);
                if lhs != independence_poly(&g.star()?)? {
                    bad += 1;
                }
            }
            row(bad == 0, format!("{} random graphs, {bad} mismatches", STAR_GRAPHS_PER_N))
        }
        Identity::CentipedeEven => {
            let w = independence_poly(&families::build(&FamilySpec::Centipede(2 * n))?)?;
            let chain = independence_poly(&families::build(&FamilySpec::TriangleChain(n))?)?;
            let ok = w == one_plus_x(n).mul(&chain);
            row(ok, format!("I(W_{}) = (1+x)^{n} I(Tri_{n})", 2 * n))
        }
        Identity::CentipedeOdd => {
            let w = independence_poly(&families::build(&FamilySpec::Centipede(2 * n + 1))?)?;
            let chain = independence_poly(&families::build(&FamilySpec::TriangleChainK2(n))?)?;
            let ok = w == one_plus_x(n).mul(&chain);
            row(ok, format!("I(W_{}) = (1+x)^{n} I(Tri_{n} + K2)", 2 * n + 1))
        }
        Identity::SpiderClosedForm => {
            let engine = independence_poly(&families::build(&FamilySpec::Spider(n))?)?;
            let closed = families::spider_poly(n)?;
            row(engine == closed, format!("engine vs closed form, degree {}", n + 1))
        }
        Identity::SpiderMode => {
            let modes = families::spider_poly(n)?.modes();
            let predicted = families::spider_mode(n)?;
            row(
                modes == [predicted],
                format!("argmax {modes:?}, predicted {predicted}"),
            )
        }
        Identity::RatioBound => {
            let mut weak = 0;
            let mut strong = 0;
            for _ in 0..LEMMA1_GRAPHS_PER_N {
                let g = random_graph(n, &mut rng);
                match profile(&g) {
                    Ok(p) => {
                        if !p.satisfies_strong_ratio_bound() {
                            strong += 1;
                        }
                    }
                    Err(Error::InvalidProfile(_)) => weak += 1,
                    Err(e) => return Err(e),
                }
            }
            row(
                weak == 0 && strong == 0,
                format!(
                    "{} random graphs, {weak} violations, {strong} of the n-alpha+1 form",
                    LEMMA1_GRAPHS_PER_N
                ),
            )
        }
        Identity::ZykovM => {
            let mut members = vec![FamilySpec::Centipede(n)];
            if n >= 2 {
                members.push(FamilySpec::Spider(n));
            }
            let mut notes = Vec::new();
            let mut ok = true;
            for spec in members {
                let base = families::poly(&spec)?;
                for m in 2..=3u64 {
                    let closed = repeated_zykov(&base, m)?;
                    ok &= closed.is_log_concave()?;
                    if spec.order() * m <= MAX_VERTICES as u64 {
                        let h = families::build(&spec)?;
                        let mut g = h.clone();
                        for _ in 1..m {
                            g = g.zykov_sum(&h)?;
                        }
                        ok &= independence_poly(&g)? == closed;
                        notes.push(format!("{spec} m={m} engine"));
                    } else {
                        notes.push(format!("{spec} m={m} closed"));
                    }
                }
            }
            row(ok, notes.join("; "))
        }
    }
}

/// Checks one named identity for every admissible `n <= n_max`.
pub fn cmd_verify(identity: &str, n_max: usize, seed: u64) -> Result<VerifyReport> {
    cmd_verify_with(identity.parse()?, n_max, seed, Exec::default())
}

pub fn cmd_verify_with(identity: Identity, n_max: usize, seed: u64, exec: Exec) -> Result<VerifyReport> {
    let (lo, hi) = identity.n_range();
    if n_max < lo || n_max > hi {
        return Err(Error::Range(format!(
            "{} supports --n-max in {lo}..={hi}, got {n_max}",
            identity.name()
        )));
    }
    let ns: Vec<usize> = (lo..=n_max).collect();
    let rows = par::map_with(exec, &ns, |&n| verify_one(identity, n, seed))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let passed = rows.iter().filter(|r| r.pass).count();
    Ok(VerifyReport {
        identity: identity.name().into(),
        n_max,
        seed,
        failed: rows.len() - passed,
        passed,
        rows,
    })
}

// ---------------------------------------------------------------------------
// search

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Trees,
    StarTrees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Unimodal,
    LogConcave,
}

macro_rules! str_enum {
    ($ty:ident { $($variant:ident => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub fn name(self) -> &'static str {
                match self { $($ty::$variant => $name),+ }
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($ty::$variant),)+
                    other => Err(Error::Range(format!(
                        "unknown {} `{other}`", stringify!($ty)
                    ))),
                }
            }
        }
    };
}

str_enum!(SearchKind { Trees => "trees", StarTrees => "star-trees" });
str_enum!(SearchMode { Exhaustive => "exhaustive", Sample => "sample" });
str_enum!(Property { Unimodal => "unimodal", LogConcave => "log-concave" });

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub kind: SearchKind,
    pub n_max: usize,
    pub mode: SearchMode,
    pub property: Property,
    pub seed: u64,
    /// Random trees per order in sample mode.
    pub samples: usize,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            kind: SearchKind::Trees,
            n_max: 9,
            mode: SearchMode::Exhaustive,
            property: Property::Unimodal,
            seed: 0,
            samples: 200,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOrderSummary {
    pub n: usize,
    pub tested: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub edge_list: String,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub kind: String,
    pub property: String,
    pub mode: String,
    pub n_max: usize,
    pub seed: u64,
    pub total_tested: usize,
    pub total_violations: usize,
    /// Largest `n` such that every order up to it showed no violation.
    pub strongest_n: Option<usize>,
    pub per_n: Vec<SearchOrderSummary>,
    pub violations: Vec<Violation>,
    /// Every tree checked, in enumeration order. Empty in sample mode.
    pub examined: Vec<Examined>,
}

/// One tested tree. `coefficients` belong to the tree itself, or to its
/// star graph in a star-tree search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Examined {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub coefficients: Vec<String>,
    pub holds: bool,
    pub all_roots_real: bool,
}

impl SearchReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "search {} property={} mode={} n_max={} seed={}\n",
            self.kind, self.property, self.mode, self.n_max, self.seed
        );
        for o in &self.per_n {
            let _ = writeln!(s, "n={:<3} tested={:<6} violations={}", o.n, o.tested, o.violations);
        }
        let _ = writeln!(
            s,
            "total tested={} violations={}",
            self.total_tested, self.total_violations
        );
        if let Some(n) = self.strongest_n {
            let _ = writeln!(s, "no violations through n={n}");
        }
        for e in &self.examined {
            let _ = writeln!(
                s,
                "  n={} [{}] {} real_roots={} edges={:?}",
                e.n,
                e.coefficients.join(", "),
                if e.holds { "ok" } else { "VIOLATION" },
                e.all_roots_real,
                e.edges
            );
        }
        for v in &self.violations {
            let _ = writeln!(s, "VIOLATION n={} coefficients=[{}]", v.n, v.coefficients.join(", "));
            s.push_str(&v.edge_list);
        }
        s
    }
}

fn tested_poly(kind: SearchKind, t: &Graph) -> Result<Polynomial> {
    let base = independence_poly(t)?;
    match kind {
        SearchKind::Trees => Ok(base),
        SearchKind::StarTrees => Ok(star_transform(&StableSetProfile::from_poly(t.n(), &base)?)),
    }
}

fn has_property(p: &Polynomial, property: Property) -> Result<bool> {
    match property {
        Property::Unimodal => p.is_unimodal(),
        Property::LogConcave => p.is_log_concave(),
    }
}

/// Tests a coefficient-shape property over trees (or their star graphs).
pub fn cmd_search(opts: &SearchOptions) -> Result<SearchReport> {
    let limit = match opts.mode {
        SearchMode::Exhaustive => trees::EXHAUSTIVE_MAX,
        SearchMode::Sample => match opts.kind {
            SearchKind::Trees => MAX_VERTICES,
            // the star graph doubles the order but is never materialized
            SearchKind::StarTrees => MAX_VERTICES,
        },
    };
    if opts.n_max == 0 || opts.n_max > limit {
        return Err(Error::Range(format!(
            "{} search in {} mode supports --n-max in 1..={limit}, got {}",
            opts.kind.name(),
            opts.mode.name(),
            opts.n_max
        )));
    }
    let mut per_n = Vec::new();
    let mut violations = Vec::new();
    let mut strongest_n = None;
    let mut clean = true;
    let mut examined = Vec::new();
    for n in 1..=opts.n_max {
        let batch = match opts.mode {
            SearchMode::Exhaustive => trees::all_trees_with(n, opts.exec)?,
            SearchMode::Sample => {
                trees::sample_trees(n, opts.samples, opts.seed.wrapping_add(n as u64))?
            }
        };
        let keep = opts.mode == SearchMode::Exhaustive;
        let checked = par::map_with(opts.exec, &batch, |t| -> Result<Examined> {
            let p = tested_poly(opts.kind, t)?;
            Ok(Examined {
                n,
                edges: t.edges(),
                coefficients: p.to_decimal_strings(),
                holds: has_property(&p, opts.property)?,
                // sampled entries are discarded, so skip the Sturm count
                all_roots_real: keep && p.all_roots_real()?,
            })
        });
        let mut found = 0;
        for c in checked {
            let e = c?;
            if !e.holds {
                found += 1;
                violations.push(Violation {
                    n,
                    edge_list: Graph::from_edge_list(n, &e.edges)?.to_edge_list_text(),
                    coefficients: e.coefficients.clone(),
                });
            }
            if keep {
                examined.push(e);
            }
        }
        clean &= found == 0;
        if clean {
            strongest_n = Some(n);
        }
        per_n.push(SearchOrderSummary {
            n,
            tested: batch.len(),
            violations: found,
        });
    }
    Ok(SearchReport {
        kind: opts.kind.name().into(),
        property: opts.property.name().into(),
        mode: opts.mode.name().into(),
        n_max: opts.n_max,
        seed: opts.seed,
        total_tested: per_n.iter().map(|o| o.tested).sum(),
        total_violations: violations.len(),
        strongest_n,
        per_n,
        violations,
        examined,
    })
}
