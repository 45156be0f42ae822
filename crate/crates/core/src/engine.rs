//! Exact independence polynomials.
//!
//! The engine applies the vertex recurrence `I(G) = I(G-v) + x·I(G-N[v])`
//! inside each connected component and multiplies across components. Every
//! intermediate result is memoized under its vertex mask in the original
//! graph's labeling. A separate brute-force subset count serves as the oracle.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;
use crate::poly::{binomial, Polynomial};

/// Default bound on memo entries before a computation aborts.
pub const DEFAULT_MEMO_CAP: usize = 1 << 20;

/// Default and hard upper bound for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Maximum degree inside the current component, lowest index on ties.
    MaxDegree,
    /// Uniformly random vertex of the component, for pivot-independence checks.
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    pub memo_cap: usize,
    pub pivot: PivotRule,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            memo_cap: DEFAULT_MEMO_CAP,
            pivot: PivotRule::MaxDegree,
        }
    }
}

/// One computation over one graph. Owns its memo table.
pub struct Engine<'g> {
    graph: &'g Graph,
    memo: HashMap<u64, Polynomial>,
    config: EngineConfig,
    rng: Option<ChaCha8Rng>,
}

impl<'g> Engine<'g> {
    pub fn new(graph: &'g Graph, config: EngineConfig) -> Self {
        let rng = match config.pivot {
            PivotRule::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            PivotRule::MaxDegree => None,
        };
        Engine {
            graph,
            memo: HashMap::new(),
            config,
            rng,
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `I(G;x)` for the whole graph.
    pub fn run(&mut self) -> Result<Polynomial> {
        self.poly_of(self.graph.vertices())
    }

    /// `I(G[mask];x)`.
    pub fn poly_of(&mut self, mask: VertexSet) -> Result<Polynomial> {
        if mask.is_empty() {
            return Ok(Polynomial::one());
        }
        if let Some(p) = self.memo.get(&mask.0) {
            return Ok(p.clone());
        }
        let g = self.graph;
        let result = if mask.iter().all(|v| g.neighbors(v).intersection(mask).is_empty()) {
            Polynomial::one_plus_x_pow(mask.len())
        } else {
            let comps = g.components_within(mask);
            if comps.len() > 1 {
                let mut acc = Polynomial::one();
                for c in comps {
                    acc = acc.mul(&self.poly_of(c)?);
                }
                acc
            } else {
                let v = self.pivot(mask);
                let without = self.poly_of(mask.without(v))?;
                let rest = self.poly_of(mask.difference(g.closed_neighbors(v)))?;
                without.add(&rest.shift_mul_x())
            }
        };
        if self.memo.len() >= self.config.memo_cap {
            return Err(Error::ResourceExhausted {
                limit: self.config.memo_cap,
            });
        }
        self.memo.insert(mask.0, result.clone());
        Ok(result)
    }

    fn pivot(&mut self, mask: VertexSet) -> usize {
        match self.rng.as_mut() {
            Some(rng) => {
                let k = rng.gen_range(0..mask.len());
                mask.iter().nth(k).expect("index within mask")
            }
            None => {
                let g = self.graph;
                mask.iter()
                    .max_by_key(|&v| (g.neighbors(v).intersection(mask).len(), Reverse(v)))
                    .expect("nonempty mask")
            }
        }
    }
}

/// `I(G;x)` with the default configuration.
pub fn independence_poly(g: &Graph) -> Result<Polynomial> {
    Engine::new(g, EngineConfig::default()).run()
}

pub fn independence_poly_with(g: &Graph, config: EngineConfig) -> Result<Polynomial> {
    Engine::new(g, config).run()
}

static LEMMA1_CHECKED: AtomicU64 = AtomicU64::new(0);
static LEMMA1_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide count of profiles checked against `α·s_α ≤ n·s_{α-1}` and of
/// those that failed.
pub fn ratio_bound_stats() -> (u64, u64) {
    (
        LEMMA1_CHECKED.load(Ordering::Relaxed),
        LEMMA1_VIOLATIONS.load(Ordering::Relaxed),
    )
}

/// Stable-set counts `(s_0, …, s_α)` of a graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableSetProfile {
    pub n: usize,
    pub alpha: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub s: Vec<BigInt>,
}

fn ser_decimal<S: serde::Serializer>(v: &[BigInt], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(ToString::to_string))
}

impl StableSetProfile {
    /// Validates `s_0 = 1`, `s_1 = n`, `s_α ≥ 1` and `α·s_α ≤ n·s_{α-1}`.
    /// Every constructed profile passes through the ratio-bound counters.
    pub fn new(n: usize, s: Vec<BigInt>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidProfile(m));
        if s.is_empty() || !s[0].is_one() {
            return bad("s_0 must be 1".into());
        }
        let alpha = s.len() - 1;
        if alpha > n {
            return bad(format!("alpha {alpha} exceeds n = {n}"));
        }
        if n > 0 && s.get(1) != Some(&BigInt::from(n)) {
            return bad(format!("s_1 must equal n = {n}"));
        }
        if s.iter().any(|c| c < &BigInt::one()) {
            return bad("every s_k up to alpha must be positive".into());
        }
        if alpha >= 1 {
            LEMMA1_CHECKED.fetch_add(1, Ordering::Relaxed);
            if BigInt::from(alpha) * &s[alpha] > BigInt::from(n) * &s[alpha - 1] {
                LEMMA1_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
                return bad(format!("alpha*s_alpha > n*s_(alpha-1) for n = {n}"));
            }
        }
        Ok(StableSetProfile { n, alpha, s })
    }

    /// Reads a profile off an independence polynomial.
    pub fn from_poly(n: usize, p: &Polynomial) -> Result<Self> {
        StableSetProfile::new(n, p.coeffs().to_vec())
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::new(self.s.clone())
    }

    /// The sharper bound `α·s_α ≤ (n-α+1)·s_{α-1}`.
    pub fn satisfies_strong_ratio_bound(&self) -> bool {
        let a = self.alpha;
        a == 0 || BigInt::from(a) * &self.s[a] <= BigInt::from(self.n - a + 1) * &self.s[a - 1]
    }
}

/// Profile of `g` computed by the recurrence engine.
pub fn profile(g: &Graph) -> Result<StableSetProfile> {
    StableSetProfile::from_poly(g.n(), &independence_poly(g)?)
}

/// Counts stable sets of each size by scanning all `2^n` vertex subsets.
pub fn oracle_profile(g: &Graph) -> Result<StableSetProfile> {
    oracle_profile_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn oracle_profile_capped(g: &Graph, cap: usize) -> Result<StableSetProfile> {
    let n = g.n();
    let limit = cap.min(DEFAULT_ORACLE_CAP);
    if n > limit {
        return Err(Error::Capacity {
            what: "brute-force oracle".into(),
            needed: n as u64,
            limit: limit as u64,
        });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).0).collect();
    let total: u64 = 1u64 << n;
    const CHUNK: u64 = 1 << 14;
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let partial = par::map(&chunks, |&c| {
        let mut counts = vec![0u64; n + 1];
        let end = ((c + 1) * CHUNK).min(total);
        'mask: for mask in c * CHUNK..end {
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if adj[v] & mask != 0 {
                    continue 'mask;
                }
                rest &= rest - 1;
            }
            counts[mask.count_ones() as usize] += 1;
        }
        counts
    });
    let mut counts = vec![0u64; n + 1];
    for part in partial {
        for (c, p) in counts.iter_mut().zip(part) {
            *c += p;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    StableSetProfile::new(n, counts.into_iter().map(BigInt::from).collect())
}

/// `I(G*;x)` from the profile of `G`: `t_k = Σ_{j≤k} s_j·C(n-j, n-k)`.
pub fn star_transform(profile: &StableSetProfile) -> Polynomial {
    let n = profile.n;
    let t = (0..=n)
        .map(|k| {
            profile
                .s
                .iter()
                .enumerate()
                .take(k + 1)
                .map(|(j, s)| s * binomial((n - j) as u64, (n - k) as u64))
                .fold(BigInt::zero(), |acc, x| acc + x)
        })
        .collect();
    Polynomial::new(t)
}

fn check_unit_constant(p: &Polynomial) -> Result<()> {
    let c0 = p.coeff(0);
    if c0.is_one() {
        Ok(())
    } else {
        Err(Error::ConstantTermNotOne(c0.to_string()))
    }
}

/// Polynomial of a disjoint union: the product.
pub fn union_poly(polys: &[Polynomial]) -> Result<Polynomial> {
    polys.iter().try_fold(Polynomial::one(), |acc, p| {
        check_unit_constant(p)?;
        Ok(acc.mul(p))
    })
}

/// Polynomial of a Zykov sum: `Σ p_i − (m − 1)`.
pub fn zykov_poly(polys: &[Polynomial]) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for p in polys {
        check_unit_constant(p)?;
        acc = acc.add(p);
    }
    let m = polys.len() as i64;
    Ok(acc.add_constant(&BigInt::from(-(m - 1))))
}

/// Polynomial of `⊎ m G`: `m·p − (m − 1)`.
pub fn repeated_zykov(p: &Polynomial, m: u64) -> Result<Polynomial> {
    check_unit_constant(p)?;
    if m == 0 {
        return Err(Error::Range("Zykov sum of zero copies".into()));
    }
    Ok(p.scale(&BigInt::from(m))
        .add_constant(&(BigInt::one() - BigInt::from(m))))
}

/// Polynomial of `⊔ m G`: `p^m`.
pub fn repeated_union(p: &Polynomial, m: u64) -> Result<Polynomial> {
    check_unit_constant(p)?;
    let m = u32::try_from(m).map_err(|_| Error::Range(format!("{m} copies")))?;
    Ok(p.pow(m))
}
