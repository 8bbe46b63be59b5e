//! Instance generators: the digit construction, seeded random Gallai
//! colorings built by repeated substitution, and the single-edge
//! rainbow-destroying recoloring move.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_number, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::model::{pair_count, pair_index, Color, ColoredCompleteGraph, ColoredTournament};

/// Largest vertex count the digit construction will materialize.
pub const MAX_DIGIT_VERTICES: usize = 1 << 13;

/// The `m^r` vertex transitive tournament colored by leftmost differing base-`m` digit.
///
/// Vertices are written as `r`-digit base-`m` numbers, most significant digit
/// first. Edge `i < j` gets the 1-based position of the first digit where the
/// two differ and is oriented `i -> j`. Any path in colors `S` has at most
/// `m^|S|` vertices, and the vertices varying only in the positions of `S`
/// form a clique of that size in `G_S`.
pub fn digit_construction(m: usize, r: u8) -> Result<ColoredTournament> {
    if m < 2 || r == 0 {
        return Err(Error::InvalidArgument("need base m >= 2 and r >= 1 digits".into()));
    }
    let n = (m as u64)
        .checked_pow(r as u32)
        .filter(|&n| n <= MAX_DIGIT_VERTICES as u64)
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{m}^{r} vertices exceeds the limit of {MAX_DIGIT_VERTICES}"
            ))
        })? as usize;
    let digits = |mut x: usize| {
        let mut d = vec![0; r as usize];
        for slot in d.iter_mut().rev() {
            *slot = x % m;
            x /= m;
        }
        d
    };
    let table: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let g = ColoredCompleteGraph::from_fn(n, r, |i, j| {
        let pos = table[i].iter().zip(&table[j]).position(|(a, b)| a != b).unwrap();
        (pos + 1) as Color
    })?;
    Ok(ColoredTournament::transitive(g))
}

/// How the two cross colors are chosen at each substitution level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRule {
    /// Uniform over unordered pairs of distinct colors in `1..=r`.
    Uniform,
    /// Always the same two colors.
    Fixed(Color, Color),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub seed: u64,
    pub max_depth: usize,
    pub part_count_range: RangeInclusive<usize>,
    pub pair_rule: PairRule,
}

impl GeneratorParams {
    pub fn new(seed: u64) -> Self {
        GeneratorParams {
            seed,
            max_depth: 6,
            part_count_range: 2..=4,
            pair_rule: PairRule::Uniform,
        }
    }

    pub fn validate(&self, r: u8) -> Result<()> {
        if self.max_depth == 0 {
            return Err(Error::InvalidArgument("max_depth must be at least 1".into()));
        }
        if self.part_count_range.is_empty() || *self.part_count_range.end() < 2 {
            return Err(Error::InvalidArgument("part count range must allow t >= 2".into()));
        }
        if let PairRule::Fixed(a, b) = self.pair_rule {
            if a == 0 || b == 0 || a > r || b > r {
                return Err(Error::InvalidArgument(format!("fixed pair ({a},{b}) outside 1..={r}")));
            }
        }
        Ok(())
    }

    /// `seed=<u64> params=<...>` line recorded in generated instance files.
    pub fn describe(&self) -> String {
        let pairs = match self.pair_rule {
            PairRule::Uniform => "uniform".to_string(),
            PairRule::Fixed(a, b) => format!("fixed:{a},{b}"),
        };
        format!(
            "seed={} params=max_depth:{},parts:{}..={},pairs:{}",
            self.seed,
            self.max_depth,
            self.part_count_range.start(),
            self.part_count_range.end(),
            pairs
        )
    }
}

struct GallaiGenerator<'a> {
    n: usize,
    r: u8,
    params: &'a GeneratorParams,
    colors: Vec<Color>,
    rng: ChaCha8Rng,
}

impl GallaiGenerator<'_> {
    fn set(&mut self, u: usize, v: usize, c: Color) {
        self.colors[pair_index(self.n, u, v)] = c;
    }

    fn draw_pair(&mut self) -> (Color, Color) {
        match self.params.pair_rule {
            PairRule::Fixed(a, b) => (a, b),
            PairRule::Uniform if self.r == 1 => (1, 1),
            PairRule::Uniform => {
                let a = self.rng.random_range(1..=self.r);
                let mut b = self.rng.random_range(1..self.r);
                if b >= a {
                    b += 1;
                }
                (a.min(b), a.max(b))
            }
        }
    }

    fn fill(&mut self, mut verts: Vec<usize>, depth: usize) {
        let len = verts.len();
        if len <= 1 {
            return;
        }
        if depth >= self.params.max_depth {
            let c = self.rng.random_range(1..=self.r);
            for (a, &u) in verts.iter().enumerate() {
                for &v in &verts[a + 1..] {
                    self.set(u, v, c);
                }
            }
            return;
        }

        let lo = (*self.params.part_count_range.start()).clamp(2, len);
        let hi = (*self.params.part_count_range.end()).clamp(2, len);
        let t = self.rng.random_range(lo..=hi.max(lo));
        // every part gets one vertex, the rest land uniformly
        let mut sizes = vec![1usize; t];
        for _ in t..len {
            let k = self.rng.random_range(0..t);
            sizes[k] += 1;
        }
        verts.shuffle(&mut self.rng);
        let mut parts = Vec::with_capacity(t);
        let mut rest = verts.as_slice();
        for &s in &sizes {
            let (head, tail) = rest.split_at(s);
            parts.push(head.to_vec());
            rest = tail;
        }

        let (qa, qb) = self.draw_pair();
        for i in 0..t {
            for j in i + 1..t {
                let c = if self.rng.random_bool(0.5) { qa } else { qb };
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        self.set(u, v, c);
                    }
                }
            }
        }
        for part in parts {
            self.fill(part, depth + 1);
        }
    }
}

/// A random rainbow-free coloring of `K_n` with colors from `1..=r`.
///
/// Splits the vertex set into `t` random parts, 2-colors the reduced `K_t`
/// with a drawn color pair, and recurses into the parts. After `max_depth`
/// levels the remaining parts are colored monochromatically. Identical
/// `(n, r, params)` give identical instances.
pub fn random_gallai(n: usize, r: u8, params: &GeneratorParams) -> Result<ColoredCompleteGraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    params.validate(r)?;
    let mut gen = GallaiGenerator {
        n,
        r,
        params,
        colors: vec![0; pair_count(n)],
        rng: ChaCha8Rng::seed_from_u64(params.seed),
    };
    gen.fill((0..n).collect(), 0);
    ColoredCompleteGraph::new(n, r, gen.colors)
}

/// Orients every pair of `g` by a fair coin, seeded.
pub fn random_orientation(g: ColoredCompleteGraph, seed: u64) -> ColoredTournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forward = (0..pair_count(g.n())).map(|_| rng.random_bool(0.5)).collect();
    ColoredTournament::new(g, forward).expect("orientation length matches")
}

/// Erdős–Rényi `G(n, p)`, seeded.
pub fn random_simple_graph(n: usize, p: f64, seed: u64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Recolors the long edge `u -> w` of a rainbow triangle with arcs
/// `u -> v`, `v -> w`, `u -> w`.
///
/// `target` must be the color of `u -> v` or of `v -> w`. With `target` the
/// color of `u -> v`, the union of the target and old `u -> w` color classes
/// is unchanged, paths in the remaining pair of colors can only get shorter,
/// and paths in the target plus the `v -> w` color can only get longer.
pub fn recolor_rainbow(
    t: &ColoredTournament,
    (u, v, w): (usize, usize, usize),
    target: Color,
) -> Result<ColoredTournament> {
    let n = t.n();
    if u >= n || v >= n || w >= n || u == v || v == w || u == w {
        return Err(Error::InvalidArgument(format!("({u},{v},{w}) is not a triangle")));
    }
    if !(t.has_arc(u, v) && t.has_arc(v, w) && t.has_arc(u, w)) {
        return Err(Error::InvalidArgument(format!(
            "({u},{v},{w}) is not oriented u->v, v->w, u->w"
        )));
    }
    let (uv, vw, uw) = (t.color(u, v), t.color(v, w), t.color(u, w));
    if uv == vw || vw == uw || uv == uw {
        return Err(Error::InvalidArgument(format!("({u},{v},{w}) is not rainbow")));
    }
    if target != uv && target != vw {
        return Err(Error::InvalidArgument(format!(
            "target color {target} must be {uv} (u->v) or {vw} (v->w)"
        )));
    }
    t.with_color(u, w, target)
}

/// A substitution instance together with the blocks it was built from.
#[derive(Clone, Debug)]
pub struct PlantedSubstitution {
    pub graph: ColoredCompleteGraph,
    /// Planted block of each vertex.
    pub block_of: Vec<usize>,
    /// The 2-coloring of the blocks, in colors `{1, 2}`.
    pub reduced: ColoredCompleteGraph,
}

/// Substitutes 2 to 4 random Gallai blocks of 1 to `max_block` vertices into
/// a random `{1, 2}`-coloring of the blocks.
///
/// With cross colors from the first two colors, the partition found by
/// [`crate::gallai::gallai_partition`] always refines the planted blocks.
pub fn planted_substitution(seed: u64, r: u8, max_block: usize) -> Result<PlantedSubstitution> {
    if r < 2 || max_block == 0 {
        return Err(Error::InvalidArgument("need r >= 2 and blocks of at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = rng.random_range(2..=4);
    let reduced = ColoredCompleteGraph::from_fn(t, r, |_, _| rng.random_range(1..=2))?;
    let blocks = (0..t)
        .map(|_| {
            let size = rng.random_range(1..=max_block);
            random_gallai(size, r, &GeneratorParams::new(rng.random()))
        })
        .collect::<Result<Vec<_>>>()?;
    let block_of = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| std::iter::repeat_n(i, b.n()))
        .collect();
    let graph = crate::gallai::substitute(&reduced, &blocks)?;
    Ok(PlantedSubstitution { graph, block_of, reduced })
}

/// A graph whose vertex set splits into modules, with same-χ stand-ins for each.
#[derive(Clone, Debug)]
pub struct PlantedModules {
    pub graph: SimpleGraph,
    pub parts: Vec<Vec<usize>>,
    pub replacements: Vec<SimpleGraph>,
}

/// Blows a random quotient on 2 to 4 vertices up into modules of 1 to 3
/// vertices, and draws a replacement of 1 to 3 vertices with the same
/// chromatic number for each. Both sides have at most 12 vertices.
pub fn planted_modules(seed: u64) -> Result<PlantedModules> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = rng.random_range(2..=4);
    let quotient = random_simple_graph(t, 0.5, rng.random());
    let inner: Vec<SimpleGraph> = (0..t)
        .map(|_| random_simple_graph(rng.random_range(1..=3), 0.5, rng.random()))
        .collect();

    let mut parts = Vec::with_capacity(t);
    let mut next = 0;
    for h in &inner {
        parts.push((next..next + h.n()).collect::<Vec<_>>());
        next += h.n();
    }
    let mut graph = SimpleGraph::new(next);
    for (i, h) in inner.iter().enumerate() {
        for (u, v) in h.edges() {
            graph.add_edge(parts[i][u], parts[i][v]);
        }
        for j in i + 1..t {
            if quotient.has_edge(i, j) {
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        graph.add_edge(u, v);
                    }
                }
            }
        }
    }

    let mut replacements = Vec::with_capacity(t);
    for h in &inner {
        let k = chromatic_number(h, DEFAULT_NODE_BUDGET)?.k;
        let rep = loop {
            let cand = random_simple_graph(rng.random_range(k..=3), 0.5, rng.random());
            if chromatic_number(&cand, DEFAULT_NODE_BUDGET)?.k == k {
                break cand;
            }
        };
        replacements.push(rep);
    }
    Ok(PlantedModules { graph, parts, replacements })
}
