//! Exhaustive search for `f(n, r, s)`: the largest `L` such that every
//! `r`-coloring of the transitive tournament on `n` vertices has a directed
//! path on `L` vertices using at most `s` colors.
//!
//! Colorings are enumerated over pairs in lexicographic order. With pruning
//! on, only colorings whose first occurrences of colors appear in the order
//! `1, 2, 3, ...` are visited; relabeling colors permutes the `s`-subsets, so
//! the maximum over subsets is unchanged.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{pair_count, pair_index, Color, ColorSet, ColoredCompleteGraph, ColoredTournament};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrientationMode {
    /// Only the transitive tournament; this is the setting of `f(n, r, s)`.
    #[default]
    Transitive,
    /// Every tournament on `n` labeled vertices.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    pub r: u8,
    pub s: usize,
    /// Maximum number of (coloring, orientation) pairs to examine.
    pub budget: u64,
    pub prune: bool,
    pub orientations: OrientationMode,
}

impl SearchConfig {
    pub fn new(n: usize, r: u8, s: usize, budget: u64) -> Self {
        SearchConfig {
            n,
            r,
            s,
            budget,
            prune: true,
            orientations: OrientationMode::Transitive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub r: u8,
    pub s: usize,
    /// Minimum over examined colorings of the longest `<= s`-colored path.
    pub f_value: usize,
    /// First coloring (in enumeration order) attaining `f_value`.
    pub witness: ColoredTournament,
    pub colorings_examined: u64,
    /// False when the budget cut the enumeration short; `f_value` is then an upper bound.
    pub exact: bool,
    pub orientations: OrientationMode,
}

/// Smallest `L` with `L^ceil(r/s) >= n`: every coloring has a path this long.
pub fn grouping_lower_bound(n: usize, r: u8, s: usize) -> usize {
    let groups = (r as usize).div_ceil(s.max(1)) as u32;
    (1..=n.max(1))
        .find(|&l| (l as u128).checked_pow(groups).is_none_or(|p| p >= n as u128))
        .unwrap_or(1)
}

/// `m` with `m^r = n`, if `n` is a perfect `r`-th power.
pub fn perfect_root(n: usize, r: u8) -> Option<usize> {
    (1..=n).find_map(|m| match (m as u128).checked_pow(r as u32) {
        Some(p) if p == n as u128 => Some(Some(m)),
        Some(p) if p > n as u128 => Some(None),
        None => Some(None),
        _ => None,
    })?
}

/// Upper bound `m^s` from the digit construction when `n = m^r`.
pub fn digit_upper_bound(n: usize, r: u8, s: usize) -> Option<usize> {
    let m = perfect_root(n, r)?;
    (m as u128).checked_pow(s.min(r as usize) as u32).map(|v| v as usize)
}

fn stirling_total(e: usize, r: usize) -> u128 {
    if e == 0 {
        return 1;
    }
    // s2[k] = S(i, k) for the current i
    let mut s2 = vec![0u128; r + 1];
    s2[0] = 1;
    for _ in 0..e {
        for k in (1..=r).rev() {
            s2[k] = s2[k - 1].saturating_add((k as u128).saturating_mul(s2[k]));
        }
        s2[0] = 0;
    }
    s2[1..].iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// Number of (coloring, orientation) pairs the search would visit.
pub fn search_space_size(config: &SearchConfig) -> u128 {
    let e = pair_count(config.n);
    let colorings = if config.prune {
        stirling_total(e, config.r as usize)
    } else {
        (config.r as u128).checked_pow(e as u32).unwrap_or(u128::MAX)
    };
    match config.orientations {
        OrientationMode::Transitive => colorings,
        OrientationMode::All => 1u128
            .checked_shl(e as u32)
            .map_or(u128::MAX, |o| colorings.saturating_mul(o)),
    }
}

struct Evaluator {
    n: usize,
    subsets: Vec<ColorSet>,
}

impl Evaluator {
    /// Longest `<= s`-colored path, or any value `>= cutoff` once it is known to reach `cutoff`.
    fn transitive(&self, colors: &[Color], cutoff: usize) -> usize {
        let n = self.n;
        let mut best = 1;
        let mut len = [0usize; 64];
        for &set in &self.subsets {
            for j in 0..n {
                let mut l = 1;
                for i in 0..j {
                    if set.contains(colors[pair_index(n, i, j)]) && len[i] + 1 > l {
                        l = len[i] + 1;
                    }
                }
                len[j] = l;
                best = best.max(l);
            }
            if best >= cutoff {
                return best;
            }
        }
        best
    }

    fn general(&self, colors: &[Color], forward: &[bool], cutoff: usize) -> usize {
        let n = self.n;
        let mut best = 1;
        let mut ends = vec![0u32; 1 << n];
        for &set in &self.subsets {
            let mut out = vec![0u32; n];
            for i in 0..n {
                for j in i + 1..n {
                    let k = pair_index(n, i, j);
                    if set.contains(colors[k]) {
                        if forward[k] {
                            out[i] |= 1 << j;
                        } else {
                            out[j] |= 1 << i;
                        }
                    }
                }
            }
            ends.iter_mut().for_each(|e| *e = 0);
            for v in 0..n {
                ends[1 << v] = 1 << v;
            }
            for mask in 1usize..(1 << n) {
                let mut e = ends[mask];
                if e == 0 {
                    continue;
                }
                best = best.max(mask.count_ones() as usize);
                while e != 0 {
                    let v = e.trailing_zeros() as usize;
                    e &= e - 1;
                    let mut next = out[v] & !(mask as u32);
                    while next != 0 {
                        let w = next.trailing_zeros();
                        next &= next - 1;
                        ends[mask | (1 << w)] |= 1 << w;
                    }
                }
            }
            if best >= cutoff {
                return best;
            }
        }
        best
    }
}

#[derive(Clone)]
struct Best {
    value: usize,
    colors: Vec<Color>,
    forward: Vec<bool>,
    examined: u64,
}

struct Walker<'a> {
    config: &'a SearchConfig,
    eval: &'a Evaluator,
    edges: usize,
    colors: Vec<Color>,
    best: Option<Best>,
    examined: u64,
    limit: u64,
}

impl Walker<'_> {
    fn visit(&mut self) -> bool {
        let cutoff = self.best.as_ref().map_or(usize::MAX, |b| b.value);
        match self.config.orientations {
            OrientationMode::Transitive => {
                if self.examined >= self.limit {
                    return false;
                }
                self.examined += 1;
                let v = self.eval.transitive(&self.colors, cutoff);
                self.record(v, vec![true; self.edges]);
            }
            OrientationMode::All => {
                for bits in 0u64..(1u64 << self.edges) {
                    if self.examined >= self.limit {
                        return false;
                    }
                    self.examined += 1;
                    let forward: Vec<bool> = (0..self.edges).map(|k| bits >> k & 1 == 0).collect();
                    let cutoff = self.best.as_ref().map_or(cutoff, |b| b.value);
                    let v = self.eval.general(&self.colors, &forward, cutoff);
                    self.record(v, forward);
                }
            }
        }
        true
    }

    fn record(&mut self, value: usize, forward: Vec<bool>) {
        if self.best.as_ref().is_none_or(|b| value < b.value) {
            self.best = Some(Best {
                value,
                colors: self.colors.clone(),
                forward,
                examined: self.examined,
            });
        }
    }

    /// Depth-first over pair colors; false once the budget is spent.
    fn walk(&mut self, k: usize, max_used: Color) -> bool {
        if k == self.edges {
            return self.visit();
        }
        let top = if self.config.prune {
            (max_used + 1).min(self.config.r)
        } else {
            self.config.r
        };
        for c in 1..=top {
            self.colors[k] = c;
            if !self.walk(k + 1, max_used.max(c)) {
                return false;
            }
        }
        true
    }
}

fn validate(config: &SearchConfig) -> Result<()> {
    if config.n == 0 || config.r == 0 || config.s == 0 {
        return Err(Error::InvalidArgument("n, r and s must be positive".into()));
    }
    if config.n > 18 {
        return Err(Error::InvalidArgument("exhaustive search is limited to n <= 18".into()));
    }
    if config.budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    Ok(())
}

fn finish(config: &SearchConfig, best: Best, examined: u64, exact: bool) -> Result<SearchResult> {
    let g = ColoredCompleteGraph::new(config.n, config.r, best.colors)?;
    let witness = ColoredTournament::new(g, best.forward)?;
    Ok(SearchResult {
        n: config.n,
        r: config.r,
        s: config.s,
        f_value: best.value,
        witness,
        colorings_examined: examined,
        exact,
        orientations: config.orientations,
    })
}

/// Exact `f(n, r, s)` over transitive tournaments with color-relabeling pruning.
pub fn brute_force_f(n: usize, r: u8, s: usize, budget: u64) -> Result<SearchResult> {
    search(&SearchConfig::new(n, r, s, budget))
}

/// Runs the search; on budget exhaustion the error carries the partial result.
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    validate(config)?;
    let edges = pair_count(config.n);
    let eval = Evaluator {
        n: config.n,
        subsets: ColorSet::subsets_of_size(config.r, config.s.min(config.r as usize)),
    };
    let new_walker = |limit: u64| Walker {
        config,
        eval: &eval,
        edges,
        colors: vec![1; edges],
        best: None,
        examined: 0,
        limit,
    };

    let total = search_space_size(config);
    if total > config.budget as u128 {
        let mut w = new_walker(config.budget);
        w.walk(0, 0);
        let examined = w.examined;
        let best = w.best.expect("budget is positive");
        let partial = finish(config, best, examined, false)?;
        return Err(Error::SearchBudgetExceeded { partial: Box::new(partial) });
    }

    // fan out over the colors of the first few pairs
    let depth = edges.min(6);
    let mut prefixes: Vec<Vec<Color>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                let max_used = p.iter().copied().max().unwrap_or(0);
                let top = if config.prune { (max_used + 1).min(config.r) } else { config.r };
                (1..=top).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let results: Vec<(Option<Best>, u64)> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut w = new_walker(u64::MAX);
            w.colors[..depth].copy_from_slice(prefix);
            w.walk(depth, prefix.iter().copied().max().unwrap_or(0));
            (w.best, w.examined)
        })
        .collect();

    let mut examined = 0;
    let mut best: Option<Best> = None;
    for (b, count) in results {
        if let Some(mut b) = b {
            b.examined += examined;
            if best.as_ref().is_none_or(|cur| b.value < cur.value) {
                best = Some(b);
            }
        }
        examined += count;
    }
    finish(config, best.expect("at least one coloring"), examined, true)
}
