//! Directed paths: the Gallai–Hasse–Roy–Vitaver construction, few-colored
//! paths in Gallai-colored tournaments, the Erdős–Szekeres pigeonhole, and
//! exact longest-path oracles.
//!
//! Path length always means the number of vertices.

use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_bigint::BigUint;
use serde::Serialize;

use crate::chromatic::DEFAULT_NODE_BUDGET;
use crate::error::{Error, Result};
use crate::extractor::best_subset;
use crate::gallai::require_gallai;
use crate::graph::SimpleGraph;
use crate::model::{ColorSet, ColoredTournament};

/// Default vertex cap for the exponential exact path oracle.
pub const DEFAULT_PATH_LIMIT: usize = 18;

/// An orientation of a simple graph: at most one arc per pair, no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    out: Vec<FixedBitSet>,
}

impl Orientation {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!("bad arc {u}->{v}")));
            }
            if out[u].contains(v) || out[v].contains(u) {
                return Err(Error::InvalidArgument(format!("pair {u},{v} oriented twice")));
            }
            out[u].insert(v);
        }
        Ok(Orientation { out })
    }

    /// Orients every edge of `g` from smaller to larger index unless `flip(u, v)` says otherwise.
    pub fn of_graph(g: &SimpleGraph, mut flip: impl FnMut(usize, usize) -> bool) -> Self {
        let arcs: Vec<_> = g
            .edges()
            .map(|(u, v)| if flip(u, v) { (v, u) } else { (u, v) })
            .collect();
        Orientation::new(g.n(), arcs).expect("edges of a simple graph")
    }

    /// Arcs of `t` whose color lies in `s`.
    pub fn of_tournament(t: &ColoredTournament, s: ColorSet) -> Self {
        let arcs: Vec<_> = t.arcs().filter(|&(u, v)| s.contains(t.color(u, v))).collect();
        Orientation::new(t.n(), arcs).expect("tournament arcs")
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    /// Arcs in lexicographic order of `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().map(move |v| (u, v)))
    }

    /// The underlying undirected graph.
    pub fn support(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n(), self.arcs())
    }
}

/// A directed acyclic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    n: usize,
    out: Vec<Vec<usize>>,
}

impl Dag {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v)
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    /// Kahn's algorithm, smallest available vertex first; `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// `level[v]`: vertex count of the longest path ending at `v`.
    pub fn levels(&self) -> Vec<usize> {
        let order = self.topological_order().expect("Dag is acyclic");
        let mut level = vec![1usize; self.n];
        for u in order {
            for &v in &self.out[u] {
                level[v] = level[v].max(level[u] + 1);
            }
        }
        level
    }

    /// A longest path, ending at the smallest vertex of maximum level and
    /// stepping back through the smallest qualifying predecessor.
    pub fn longest_path(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let level = self.levels();
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (u, v) in self.arcs() {
            pred[v].push(u);
        }
        let top = *level.iter().max().unwrap();
        let mut v = level.iter().position(|&l| l == top).unwrap();
        let mut path = vec![v];
        while level[v] > 1 {
            v = *pred[v]
                .iter()
                .filter(|&&u| level[u] + 1 == level[v])
                .min()
                .expect("level has a witness predecessor");
            path.push(v);
        }
        path.reverse();
        path
    }
}

/// Maximal acyclic subgraph by lexicographic arc insertion.
///
/// An arc is kept iff its head does not already reach its tail, so every
/// omitted arc closes a cycle with the kept ones.
pub fn maximal_acyclic_subgraph(o: &Orientation) -> Dag {
    let n = o.n();
    let mut dag = Dag { n, out: vec![Vec::new(); n] };
    for (u, v) in o.arcs() {
        if !dag.reaches(v, u) {
            dag.out[u].push(v);
        }
    }
    dag
}

/// Level function of the maximal acyclic subgraph of `o`.
///
/// It is a proper coloring of the support of `o`: a kept arc raises the level
/// of its head, and an omitted arc `u -> v` has `v` reaching `u` in the
/// subgraph, so the levels differ either way.
pub fn ghrv_levels(o: &Orientation) -> Vec<usize> {
    maximal_acyclic_subgraph(o).levels()
}

/// A vertex-simple directed path with the set of colors on its arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPath {
    vertices: Vec<usize>,
    colors_used: ColorSet,
}

impl VertexPath {
    /// Validates `vertices` as a directed path of `o`; uncolored, so `colors_used` is empty.
    pub fn in_orientation(o: &Orientation, vertices: Vec<usize>) -> Result<Self> {
        check_simple(o.n(), &vertices)?;
        if let Some((u, v)) = vertices.iter().tuple_windows().find(|(&u, &v)| !o.has_arc(u, v)) {
            return Err(Error::InvalidArgument(format!("missing arc {u}->{v}")));
        }
        Ok(VertexPath { vertices, colors_used: ColorSet::EMPTY })
    }

    /// Validates `vertices` as a directed path of `t` and collects its colors.
    pub fn in_tournament(t: &ColoredTournament, vertices: Vec<usize>) -> Result<Self> {
        check_simple(t.n(), &vertices)?;
        let mut colors_used = ColorSet::EMPTY;
        for (&u, &v) in vertices.iter().tuple_windows() {
            if !t.has_arc(u, v) {
                return Err(Error::InvalidArgument(format!("arc {u}->{v} points the other way")));
            }
            colors_used.insert(t.color(u, v));
        }
        Ok(VertexPath { vertices, colors_used })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colors_used(&self) -> ColorSet {
        self.colors_used
    }

    /// Vertex count.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn check_simple(n: usize, vertices: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!("vertex {v} out of range or repeated")));
        }
    }
    Ok(())
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PATH n={} colors={}", self.vertices.len(), self.colors_used)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A directed path of `o` on at least `k` vertices, for any `k <= χ(support)`.
pub fn ghrv_path(o: &Orientation, k: usize) -> Result<VertexPath> {
    let dag = maximal_acyclic_subgraph(o);
    let path = dag.longest_path();
    if path.len() < k {
        return Err(Error::Internal(format!(
            "longest path in the acyclic subgraph has {} vertices, below target {k}",
            path.len()
        )));
    }
    VertexPath::in_orientation(o, path)
}

/// `base^exp` as an exact integer.
pub(crate) fn big_pow(base: usize, exp: usize) -> BigUint {
    num_bigint::BigUint::from(base).pow(exp as u32)
}

/// A path in `t` using at most `s` colors with `L^r >= n^s` vertices.
///
/// Picks the `s`-color subgraph of largest chromatic number, restricts the
/// orientation to it, and reads a long path off its maximal acyclic subgraph.
pub fn s_colored_path(t: &ColoredTournament, s: usize) -> Result<VertexPath> {
    s_colored_path_with_budget(t, s, DEFAULT_NODE_BUDGET)
}

pub fn s_colored_path_with_budget(t: &ColoredTournament, s: usize, node_budget: u64) -> Result<VertexPath> {
    require_gallai(t.base())?;
    let best = best_subset(t.base(), s, node_budget)?;
    let o = Orientation::of_tournament(t, best.colors);
    let found = ghrv_path(&o, best.k)?;
    let path = VertexPath::in_tournament(t, found.vertices)?;
    let (n, r) = (t.n(), t.r() as usize);
    if path.colors_used().len() > s || big_pow(path.len(), r) < big_pow(n, s) {
        return Err(Error::Internal(format!(
            "path on {} vertices with colors {} misses the bound for n={n}, r={r}, s={s}",
            path.len(),
            path.colors_used()
        )));
    }
    Ok(path)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Monotone {
    NonDecreasing,
    NonIncreasing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneSubsequence {
    pub kind: Monotone,
    pub indices: Vec<usize>,
}

/// For each position, the lengths of the longest non-decreasing and
/// non-increasing subsequences ending there. All pairs are distinct.
pub fn pigeonhole_pairs<T: Ord>(seq: &[T]) -> Vec<(usize, usize)> {
    let mut table: Vec<(usize, usize)> = Vec::with_capacity(seq.len());
    for (i, a) in seq.iter().enumerate() {
        let mut up = 1;
        let mut down = 1;
        for (j, b) in seq[..i].iter().enumerate() {
            if b <= a {
                up = up.max(table[j].0 + 1);
            }
            if b >= a {
                down = down.max(table[j].1 + 1);
            }
        }
        table.push((up, down));
    }
    table
}

/// A non-decreasing subsequence on `r + 1` terms if one exists, otherwise a
/// non-increasing one on `s + 1` terms; needs `seq.len() >= r*s + 1`.
pub fn monotone_subsequence<T: Ord>(seq: &[T], r: usize, s: usize) -> Result<MonotoneSubsequence> {
    let need = r.checked_mul(s).and_then(|x| x.checked_add(1));
    if need.is_none_or(|need| seq.len() < need) {
        return Err(Error::InvalidArgument(format!(
            "sequence of length {} is shorter than r*s+1 for r={r}, s={s}",
            seq.len()
        )));
    }
    let table = pigeonhole_pairs(seq);
    let (end, kind) = table
        .iter()
        .position(|&(up, _)| up > r)
        .map(|i| (i, Monotone::NonDecreasing))
        .or_else(|| {
            table
                .iter()
                .position(|&(_, down)| down > s)
                .map(|i| (i, Monotone::NonIncreasing))
        })
        .ok_or_else(|| Error::Internal("pigeonhole pairs not distinct".into()))?;

    let key = |i: usize| match kind {
        Monotone::NonDecreasing => table[i].0,
        Monotone::NonIncreasing => table[i].1,
    };
    let fits = |j: usize, i: usize| match kind {
        Monotone::NonDecreasing => seq[j] <= seq[i],
        Monotone::NonIncreasing => seq[j] >= seq[i],
    };
    let mut indices = vec![end];
    let mut i = end;
    while key(i) > 1 {
        i = (0..i)
            .find(|&j| fits(j, i) && key(j) + 1 == key(i))
            .expect("table entry has a witness");
        indices.push(i);
    }
    indices.reverse();
    Ok(MonotoneSubsequence { kind, indices })
}

/// Longest path of `t` using only arcs colored in `colors`.
///
/// Transitive tournaments use a quadratic dynamic program over index order;
/// others use a dynamic program over vertex subsets and need `n <= limit`.
pub fn longest_path_in_colors(t: &ColoredTournament, colors: ColorSet, limit: usize) -> Result<VertexPath> {
    let n = t.n();
    let vertices = if t.is_transitive() {
        longest_transitive(t, colors)
    } else if n <= limit.min(30) {
        longest_by_subsets(t, colors)
    } else {
        return Err(Error::PathLimitExceeded { n, limit });
    };
    VertexPath::in_tournament(t, vertices)
}

fn longest_transitive(t: &ColoredTournament, colors: ColorSet) -> Vec<usize> {
    let n = t.n();
    let mut len = vec![1usize; n];
    let mut pred = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            if colors.contains(t.color(i, j)) && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                pred[j] = i;
            }
        }
    }
    let top = *len.iter().max().unwrap();
    let mut v = len.iter().position(|&l| l == top).unwrap();
    let mut path = vec![v];
    while pred[v] != usize::MAX {
        v = pred[v];
        path.push(v);
    }
    path.reverse();
    path
}

fn longest_by_subsets(t: &ColoredTournament, colors: ColorSet) -> Vec<usize> {
    let n = t.n();
    let mut out = vec![0u32; n];
    for (u, v) in t.arcs() {
        if colors.contains(t.color(u, v)) {
            out[u] |= 1 << v;
        }
    }
    // ends[mask]: vertices v such that some path with vertex set `mask` ends at v
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = (1u32, 1usize);
    for mask in 1usize..(1 << n) {
        let mut e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones();
        if size > best.0.count_ones() {
            best = (mask as u32, e.trailing_zeros() as usize);
        }
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
    let (mut mask, mut v) = best;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        let prev = mask & !(1 << v);
        let u = (0..n)
            .find(|&u| ends[prev as usize] & (1 << u) != 0 && out[u] & (1 << v) != 0)
            .expect("subset table has a witness");
        path.push(u);
        mask = prev;
        v = u;
    }
    path.reverse();
    path
}

/// Exact maximum vertex count of a directed path of `t` whose arcs use at most `s` colors.
pub fn exact_longest_s_colored_path(t: &ColoredTournament, s: usize, limit: usize) -> Result<usize> {
    Ok(exact_longest_s_colored_witness(t, s, limit)?.len())
}

/// As [`exact_longest_s_colored_path`], returning a witness path.
///
/// Ties go to the lexicographically first color subset.
pub fn exact_longest_s_colored_witness(t: &ColoredTournament, s: usize, limit: usize) -> Result<VertexPath> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    if !t.is_transitive() && t.n() > limit.min(30) {
        return Err(Error::PathLimitExceeded { n: t.n(), limit });
    }
    let s = s.min(t.r() as usize);
    let mut best: Option<VertexPath> = None;
    for colors in ColorSet::subsets_of_size(t.r(), s) {
        let p = longest_path_in_colors(t, colors, limit)?;
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p);
        }
    }
    Ok(best.expect("at least one color subset"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_number;
    use crate::constructions::{digit_construction, random_gallai, random_orientation, GeneratorParams};
    use crate::model::{pairs, ColoredCompleteGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn transitive(n: usize) -> Orientation {
        Orientation::new(n, pairs(n)).unwrap()
    }

    /// Independent oracle: DFS over every simple path, counting vertices.
    fn brute_longest(t: &ColoredTournament, s: usize) -> usize {
        fn dfs(t: &ColoredTournament, v: usize, used: &mut Vec<bool>, colors: ColorSet, s: usize) -> usize {
            let mut best = 1;
            for w in 0..t.n() {
                if !used[w] && t.has_arc(v, w) {
                    let mut c = colors;
                    c.insert(t.color(v, w));
                    if c.len() <= s {
                        used[w] = true;
                        best = best.max(1 + dfs(t, w, used, c, s));
                        used[w] = false;
                    }
                }
            }
            best
        }
        (0..t.n())
            .map(|v| {
                let mut used = vec![false; t.n()];
                used[v] = true;
                dfs(t, v, &mut used, ColorSet::EMPTY, s)
            })
            .max()
            .unwrap()
    }

    #[test]
    fn transitive_tournament_keeps_all_arcs() {
        let o = transitive(6);
        assert_eq!(maximal_acyclic_subgraph(&o).arc_count(), 15);
    }

    #[test]
    fn three_cycle_keeps_two_arcs() {
        let o = Orientation::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let dag = maximal_acyclic_subgraph(&o);
        assert_eq!(dag.arc_count(), 2);
        assert!(dag.topological_order().is_some());
    }

    #[test]
    fn maximality_on_random_tournaments() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = SimpleGraph::complete(10);
            let o = Orientation::of_graph(&g, |_, _| rng.random_bool(0.5));
            let dag = maximal_acyclic_subgraph(&o);
            assert!(dag.topological_order().is_some());
            for (u, v) in o.arcs() {
                assert!(dag.has_arc(u, v) || dag.reaches(v, u), "arc {u}->{v} could be added");
            }
        }
    }

    #[test]
    fn orientation_rejects_bad_arcs() {
        assert!(Orientation::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Orientation::new(2, [(0, 0)]).is_err());
        assert!(Orientation::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn ghrv_on_complete_and_edgeless() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let o = Orientation::of_graph(&SimpleGraph::complete(7), |_, _| rng.random_bool(0.5));
        assert_eq!(ghrv_path(&o, 7).unwrap().len(), 7);
        let e = Orientation::of_graph(&SimpleGraph::new(4), |_, _| false);
        assert_eq!(ghrv_path(&e, 1).unwrap().len(), 1);
        assert!(ghrv_path(&e, 2).is_err());
    }

    #[test]
    fn ghrv_beats_chromatic_number() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let n = rng.random_range(1..=12);
            let p = rng.random_range(0.2..0.8);
            let g = SimpleGraph::from_edges(
                n,
                pairs(n).filter(|_| rng.random_bool(p)).collect::<Vec<_>>(),
            );
            let o = Orientation::of_graph(&g, |_, _| rng.random_bool(0.5));
            let chi = chromatic_number(&g, DEFAULT_NODE_BUDGET).unwrap().k;
            let levels = ghrv_levels(&o);
            assert!(g.edges().all(|(u, v)| levels[u] != levels[v]));
            assert!(ghrv_path(&o, chi).unwrap().len() >= chi);
        }
    }

    #[test]
    fn path_display() {
        let t = digit_construction(2, 2).unwrap();
        let p = VertexPath::in_tournament(&t, vec![0, 1, 3]).unwrap();
        assert_eq!(p.to_string(), "PATH n=3 colors={1,2} 0 1 3");
        assert!(VertexPath::in_tournament(&t, vec![1, 0]).is_err());
        assert!(VertexPath::in_tournament(&t, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn monochromatic_s_colored_path() {
        let t = ColoredTournament::transitive(ColoredCompleteGraph::monochromatic(5, 1, 1).unwrap());
        let p = s_colored_path(&t, 1).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn digit_s_colored_path() {
        let t = digit_construction(2, 3).unwrap();
        let p = s_colored_path(&t, 2).unwrap();
        assert!(p.len() >= 4);
        assert!(p.colors_used().len() <= 2);
        assert!(exact_longest_s_colored_path(&t, 2, DEFAULT_PATH_LIMIT).unwrap() >= p.len());
    }

    #[test]
    fn s_colored_path_rejects_rainbow() {
        let t = ColoredTournament::transitive(ColoredCompleteGraph::new(3, 3, vec![1, 3, 2]).unwrap());
        assert!(matches!(s_colored_path(&t, 2), Err(Error::RainbowTriangle(_))));
    }

    #[test]
    fn pigeonhole_examples() {
        let m = monotone_subsequence(&[1, 2, 3], 1, 1).unwrap();
        assert_eq!(m.kind, Monotone::NonDecreasing);
        assert_eq!(m.indices.len(), 2);
        assert!(monotone_subsequence(&[3, 1, 4, 2], 2, 2).is_err());
        let seq = [3, 1, 4, 1, 5];
        let m = monotone_subsequence(&seq, 2, 2).unwrap();
        assert_eq!(m.kind, Monotone::NonDecreasing);
        assert_eq!(m.indices.len(), 3);
        assert!(m.indices.windows(2).all(|w| w[0] < w[1] && seq[w[0]] <= seq[w[1]]));
    }

    #[test]
    fn pigeonhole_with_ties() {
        // constant sequence: both kinds have full length, non-decreasing found first
        let m = monotone_subsequence(&[7; 5], 2, 2).unwrap();
        assert_eq!(m.indices, vec![0, 1, 2]);
        let table = pigeonhole_pairs(&[7; 5]);
        assert!(table.iter().all_unique());
    }

    #[test]
    fn exact_oracle_monochromatic() {
        let t = ColoredTournament::transitive(ColoredCompleteGraph::monochromatic(9, 3, 2).unwrap());
        for s in 1..=3 {
            assert_eq!(exact_longest_s_colored_path(&t, s, DEFAULT_PATH_LIMIT).unwrap(), 9);
        }
    }

    #[test]
    fn exact_oracle_matches_enumeration() {
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = ColoredCompleteGraph::from_fn(8, 3, |_, _| rng.random_range(1..=3)).unwrap();
            let transitive = ColoredTournament::transitive(g.clone());
            let tour = random_orientation(g, seed);
            for s in 1..=3 {
                for t in [&transitive, &tour] {
                    let w = exact_longest_s_colored_witness(t, s, DEFAULT_PATH_LIMIT).unwrap();
                    assert_eq!(w.len(), brute_longest(t, s), "seed {seed} s {s}");
                    assert!(w.colors_used().len() <= s);
                }
            }
        }
    }

    #[test]
    fn exact_oracle_limit() {
        let g = random_gallai(20, 3, &GeneratorParams::new(1)).unwrap();
        let t = random_orientation(g, 1);
        assert!(matches!(
            exact_longest_s_colored_path(&t, 2, DEFAULT_PATH_LIMIT),
            Err(Error::PathLimitExceeded { .. })
        ));
        assert!(exact_longest_s_colored_path(&t, 0, DEFAULT_PATH_LIMIT).is_err());
    }

    #[test]
    fn digit_construction_path_lengths() {
        let t = digit_construction(2, 3).unwrap();
        for s in 1..=3 {
            assert_eq!(brute_longest(&t, s), 1 << s);
            assert_eq!(exact_longest_s_colored_path(&t, s, DEFAULT_PATH_LIMIT).unwrap(), 1 << s);
        }
    }
}
