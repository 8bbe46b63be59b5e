//! Batch verification: named suites of seeded checks, each producing one
//! pass/fail record with enough parameters to reproduce it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chromatic::{blowup_replace, chromatic_number, DEFAULT_NODE_BUDGET};
use crate::constructions::{
    digit_construction, planted_modules, planted_substitution, random_gallai, random_orientation, random_simple_graph,
    GeneratorParams,
};
use crate::error::{Error, Result};
use crate::extractor::{best_subset, check_claim, holder_check, replay_chain, verify_product};
use crate::gallai::{find_rainbow_triangle, gallai_partition, GallaiPartition};
use crate::model::{pairs, ColorSet, ColoredCompleteGraph};
use crate::paths::{
    exact_longest_s_colored_path, ghrv_levels, ghrv_path, monotone_subsequence, pigeonhole_pairs, s_colored_path_with_budget,
    Monotone, Orientation, VertexPath, DEFAULT_PATH_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Product,
    ConstructionSharpness,
    Paths,
    Ghrv,
    Decomposition,
    Claim,
    Chain,
    Holder,
    Blowup,
    ErdosSzekeres,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 10] = [
        SuiteKind::Product,
        SuiteKind::ConstructionSharpness,
        SuiteKind::Paths,
        SuiteKind::Ghrv,
        SuiteKind::Decomposition,
        SuiteKind::Claim,
        SuiteKind::Chain,
        SuiteKind::Holder,
        SuiteKind::Blowup,
        SuiteKind::ErdosSzekeres,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Product => "product",
            SuiteKind::ConstructionSharpness => "construction-sharpness",
            SuiteKind::Paths => "paths",
            SuiteKind::Ghrv => "ghrv",
            SuiteKind::Decomposition => "decomposition",
            SuiteKind::Claim => "claim",
            SuiteKind::Chain => "chain",
            SuiteKind::Holder => "holder",
            SuiteKind::Blowup => "blowup",
            SuiteKind::ErdosSzekeres => "erdos-szekeres",
        }
    }
}

impl std::str::FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

fn default_seeds() -> u64 {
    100
}

fn default_n_max() -> usize {
    12
}

fn default_r_max() -> u8 {
    4
}

fn default_budget() -> u64 {
    DEFAULT_NODE_BUDGET
}

fn default_ms() -> Vec<usize> {
    vec![2, 3]
}

fn default_rs() -> Vec<u8> {
    vec![2, 3]
}

/// One suite run. Seeded suites run seeds `seed_start..seed_start + seeds`;
/// `construction-sharpness` ignores seeds and sweeps `ms` x `rs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSpec {
    pub name: SuiteKind,
    #[serde(default)]
    pub seed_start: u64,
    #[serde(default = "default_seeds")]
    pub seeds: u64,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    #[serde(default = "default_r_max")]
    pub r_max: u8,
    /// Node budget for every exact chromatic number computed.
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default = "default_ms")]
    pub ms: Vec<usize>,
    #[serde(default = "default_rs")]
    pub rs: Vec<u8>,
}

impl SuiteSpec {
    pub fn new(name: SuiteKind) -> Self {
        SuiteSpec {
            name,
            seed_start: 0,
            seeds: default_seeds(),
            n_max: default_n_max(),
            r_max: default_r_max(),
            budget: default_budget(),
            ms: default_ms(),
            rs: default_rs(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("suite {}: {msg}", self.name.name())));
        if self.n_max < 2 {
            return bad("n_max must be at least 2");
        }
        if !(1..=crate::model::MAX_COLORS).contains(&self.r_max) {
            return bad("r_max must lie in 1..=64");
        }
        if self.budget == 0 {
            return bad("budget must be positive");
        }
        if self.seed_start.checked_add(self.seeds).is_none() {
            return bad("seed range overflows");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub suites: Vec<SuiteSpec>,
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("suite config: {e}")))
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub params: Value,
    pub seed: Option<u64>,
    pub pass: bool,
    pub details: String,
    /// The check could not finish within the node budget.
    #[serde(skip)]
    pub budget_exceeded: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.records.iter().any(|r| r.budget_exceeded)
    }

    /// 0 when everything passed, 1 on any invariant failure, 3 when the only
    /// failures are budget overruns.
    pub fn exit_code(&self) -> i32 {
        if self.failures().any(|r| !r.budget_exceeded) {
            1
        } else if self.budget_exceeded() {
            3
        } else {
            0
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

/// A check's verdict: `Ok((pass, details))`, or an error that becomes a failing record.
type Outcome = Result<(bool, String)>;

fn record(kind: SuiteKind, params: Value, seed: Option<u64>, outcome: Outcome) -> Record {
    let (pass, details, budget_exceeded) = match outcome {
        Ok((pass, details)) => (pass, details, false),
        Err(e) => (false, format!("error: {e}"), e.is_budget_exceeded()),
    };
    Record {
        suite: kind.name(),
        params,
        seed,
        pass,
        details,
        budget_exceeded,
    }
}

pub fn run_verification_suite(config: &SuiteConfig) -> Result<Report> {
    for spec in &config.suites {
        spec.validate()?;
    }
    let mut report = Report::default();
    for spec in &config.suites {
        report.records.extend(run_suite(spec));
    }
    Ok(report)
}

pub fn run_suite(spec: &SuiteSpec) -> Vec<Record> {
    if spec.name == SuiteKind::ConstructionSharpness {
        return construction_sharpness(spec);
    }
    let check: fn(&SuiteSpec, &mut ChaCha8Rng) -> (Value, Outcome) = match spec.name {
        SuiteKind::Product => product,
        SuiteKind::Paths => paths,
        SuiteKind::Ghrv => ghrv,
        SuiteKind::Decomposition => decomposition,
        SuiteKind::Claim => claim,
        SuiteKind::Chain => chain,
        SuiteKind::Holder => holder,
        SuiteKind::Blowup => blowup,
        SuiteKind::ErdosSzekeres => erdos_szekeres,
        SuiteKind::ConstructionSharpness => unreachable!(),
    };
    (spec.seed_start..spec.seed_start + spec.seeds)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (params, outcome) = check(spec, &mut rng);
            record(spec.name, params, Some(seed), outcome)
        })
        .collect()
}

/// A random Gallai instance with `n` in `n_lo..=n_max` and `r` in `r_lo..=r_max`.
fn draw_gallai(spec: &SuiteSpec, rng: &mut ChaCha8Rng, n_lo: usize, r_lo: u8) -> (ColoredCompleteGraph, Value) {
    let n = rng.random_range(n_lo.min(spec.n_max)..=spec.n_max);
    let r = rng.random_range(r_lo.min(spec.r_max)..=spec.r_max);
    let params = GeneratorParams::new(rng.random());
    let g = random_gallai(n, r, &params).expect("generator parameters are valid");
    (g, json!({"n": n, "r": r, "generator": params.describe()}))
}

fn product(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let (g, params) = draw_gallai(spec, rng, 2, 1);
    let outcome = (|| {
        let mut details = Vec::new();
        let mut pass = true;
        for s in 1..=g.r() as usize {
            let rep = verify_product(&g, s, spec.budget)?;
            pass &= rep.holds;
            details.push(format!("s={s}: {} >= {} {}", rep.product, rep.bound, rep.holds));
        }
        Ok((pass, details.join("; ")))
    })();
    (params, outcome)
}

fn construction_sharpness(spec: &SuiteSpec) -> Vec<Record> {
    let mut out = Vec::new();
    for &m in &spec.ms {
        for &r in &spec.rs {
            for s in 1..=r as usize {
                let params = json!({"m": m, "r": r, "s": s});
                let outcome = (|| {
                    let t = digit_construction(m, r)?;
                    let want = m.pow(s as u32);
                    let best = best_subset(t.base(), s, spec.budget)?;
                    let rep = verify_product(t.base(), s, spec.budget)?;
                    let path = exact_longest_s_colored_path(&t, s, DEFAULT_PATH_LIMIT)?;
                    let pass = best.k == want && rep.product == rep.bound && path == want;
                    Ok((
                        pass,
                        format!(
                            "k={} path={} want={want}; product={} bound={}",
                            best.k, path, rep.product, rep.bound
                        ),
                    ))
                })();
                out.push(record(SuiteKind::ConstructionSharpness, params, None, outcome));
            }
        }
    }
    out
}

fn paths(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let (g, mut params) = draw_gallai(spec, rng, 2, 1);
    let s = rng.random_range(1..=g.r() as usize);
    let orient_seed: u64 = rng.random();
    params["s"] = json!(s);
    params["orientation_seed"] = json!(orient_seed);
    let t = random_orientation(g, orient_seed);
    let outcome = (|| {
        let path = s_colored_path_with_budget(&t, s, spec.budget)?;
        let checked = VertexPath::in_tournament(&t, path.vertices().to_vec())?;
        let (n, r, len) = (t.n() as u32, t.r() as u32, checked.len() as u32);
        let pass = checked.colors_used().len() <= s && pow_ge(len, r, n, s as u32);
        Ok((pass, format!("{path}")))
    })();
    (params, outcome)
}

/// `a^x >= b^y`, exactly.
fn pow_ge(a: u32, x: u32, b: u32, y: u32) -> bool {
    num_bigint::BigUint::from(a).pow(x) >= num_bigint::BigUint::from(b).pow(y)
}

fn ghrv(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let n = rng.random_range(1..=spec.n_max);
    let p: f64 = rng.random_range(0.1..0.9);
    let graph_seed: u64 = rng.random();
    let g = random_simple_graph(n, p, graph_seed);
    let o = Orientation::of_graph(&g, |_, _| rng.random_bool(0.5));
    let params = json!({"n": n, "p": p, "graph_seed": graph_seed});
    let outcome = (|| {
        let chi = chromatic_number(&g, spec.budget)?.k;
        let levels = ghrv_levels(&o);
        let proper = g.edges().all(|(u, v)| levels[u] != levels[v]);
        let path = ghrv_path(&o, chi)?;
        let valid = VertexPath::in_orientation(&o, path.vertices().to_vec()).is_ok();
        Ok((
            proper && valid && path.len() >= chi,
            format!("chi={chi} path={} levels_proper={proper}", path.len()),
        ))
    })();
    (params, outcome)
}

/// Coverage, disjointness and one color per part pair, checked against the raw coloring.
fn partition_is_valid(g: &ColoredCompleteGraph, p: &GallaiPartition) -> bool {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in p.parts().iter().enumerate() {
        for &v in part {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    p.t() >= 2
        && !owner.contains(&usize::MAX)
        && pairs(n).all(|(u, v)| {
            let (a, b) = (owner[u], owner[v]);
            a == b || (g.color(u, v) == p.cross_color(a, b) && p.q().contains(g.color(u, v)))
        })
}

fn decomposition(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let (g, mut params) = draw_gallai(spec, rng, 2, 1);
    let planted_seed: u64 = rng.random();
    let planted_r = spec.r_max.max(2);
    params["planted_seed"] = json!(planted_seed);
    let outcome = (|| {
        let p = gallai_partition(&g)?;
        let random_ok = partition_is_valid(&g, &p);

        let planted = planted_substitution(planted_seed, planted_r, (spec.n_max / 3).max(1))?;
        let q = gallai_partition(&planted.graph)?;
        let refines = q
            .parts()
            .iter()
            .all(|part| part.iter().all(|&v| planted.block_of[v] == planted.block_of[part[0]]));
        let colors_match = refines
            && (0..q.t()).all(|i| {
                (i + 1..q.t()).all(|j| {
                    let (bi, bj) = (planted.block_of[q.parts()[i][0]], planted.block_of[q.parts()[j][0]]);
                    bi == bj || q.cross_color(i, j) == planted.reduced.color(bi, bj)
                })
            });
        let planted_ok = find_rainbow_triangle(&planted.graph).is_none()
            && partition_is_valid(&planted.graph, &q)
            && colors_match;
        Ok((
            random_ok && planted_ok,
            format!(
                "t={} q={} valid={random_ok}; planted n={} t={} refines={refines} colors_match={colors_match}",
                p.t(),
                p.q(),
                planted.graph.n(),
                q.t()
            ),
        ))
    })();
    (params, outcome)
}

fn claim(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let (g, params) = draw_gallai(spec, rng, 2, 2);
    let outcome = (|| {
        let p = gallai_partition(&g)?;
        if p.q().len() != 2 {
            return Ok((true, format!("no admissible S: partition uses one cross color {}", p.q())));
        }
        let mut checked = 0;
        let mut worst = None;
        for bits in 1..1u64 << g.r() {
            let s = ColorSet::from_bits(bits);
            if p.q().intersection(s).len() != 1 {
                continue;
            }
            let c = check_claim(&g, &p, s, spec.budget)?;
            checked += 1;
            if !c.holds {
                worst = Some(format!("S={s}: {} < {}", c.lhs, c.rhs));
                break;
            }
        }
        Ok(match worst {
            None => (true, format!("q={} sets={checked}", p.q())),
            Some(w) => (false, w),
        })
    })();
    (params, outcome)
}

fn chain(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let (g, mut params) = draw_gallai(spec, rng, 2, 2);
    let s = rng.random_range(1..=g.r() as usize);
    params["s"] = json!(s);
    let outcome = (|| {
        let p = gallai_partition(&g)?;
        let c = replay_chain(&g, &p, s, spec.budget)?;
        Ok((c.holds, format!("q=({},{}) steps={:?}", c.q1, c.q2, c.steps)))
    })();
    (params, outcome)
}

fn holder(_spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let f = rng.random_range(1..=5);
    let m = rng.random_range(1..=8);
    let a: Vec<Vec<f64>> = (0..f)
        .map(|_| {
            (0..m)
                .map(|_| if rng.random_bool(0.15) { 0.0 } else { rng.random_range(0.0..100.0) })
                .collect()
        })
        .collect();
    let outcome = holder_check(&a).map(|h| (h.holds, format!("lhs={} rhs={}", h.lhs, h.rhs)));
    (json!({"rows": f, "cols": m}), outcome)
}

fn blowup(spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let planted_seed: u64 = rng.random();
    let outcome = (|| {
        let p = planted_modules(planted_seed)?;
        let h = blowup_replace(&p.graph, &p.parts, &p.replacements)?;
        let before = chromatic_number(&p.graph, spec.budget)?.k;
        let after = chromatic_number(&h, spec.budget)?.k;
        Ok((before == after, format!("n={}->{} chi={before}->{after}", p.graph.n(), h.n())))
    })();
    (json!({"planted_seed": planted_seed}), outcome)
}

fn erdos_szekeres(_spec: &SuiteSpec, rng: &mut ChaCha8Rng) -> (Value, Outcome) {
    let r = rng.random_range(1..=4);
    let s = rng.random_range(1..=4);
    let len = r * s + 1;
    let alphabet = rng.random_range(1..=len);
    let seq: Vec<usize> = (0..len).map(|_| rng.random_range(0..alphabet)).collect();
    let outcome = (|| {
        let table = pigeonhole_pairs(&seq);
        let injective = table.iter().enumerate().all(|(i, a)| table[..i].iter().all(|b| a != b));
        let m = monotone_subsequence(&seq, r, s)?;
        let ok = is_monotone(&seq, m.kind, &m.indices)
            && m.indices.len()
                > match m.kind {
                    Monotone::NonDecreasing => r,
                    Monotone::NonIncreasing => s,
                };
        Ok((injective && ok, format!("{:?} {:?}", m.kind, m.indices)))
    })();
    (json!({"r": r, "s": s, "seq": seq}), outcome)
}

fn is_monotone(seq: &[usize], kind: Monotone, idx: &[usize]) -> bool {
    idx.windows(2).all(|w| {
        w[0] < w[1]
            && match kind {
                Monotone::NonDecreasing => seq[w[0]] <= seq[w[1]],
                Monotone::NonIncreasing => seq[w[0]] >= seq[w[1]],
            }
    })
}
