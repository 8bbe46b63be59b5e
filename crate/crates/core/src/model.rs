//! Edge-colored complete graphs and tournaments.
//!
//! Vertices are `0..n`, colors are `1..=r` with `r <= 64`. Edge colors live in
//! a flat upper-triangular array indexed by [`pair_index`], which enumerates
//! pairs `(i, j)`, `i < j`, in lexicographic order.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub type Color = u8;

pub const MAX_COLORS: u8 = 64;

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the pair `{i, j}` in lexicographic order of `(min, max)`.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Iterates all pairs `(i, j)`, `i < j`, in [`pair_index`] order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// A set of colors drawn from `1..=64`, stored as a bitmask (color `c` is bit `c - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., r}`.
    pub fn all(r: u8) -> Self {
        assert!(r <= MAX_COLORS);
        if r == 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << r) - 1)
        }
    }

    pub fn single(c: Color) -> Self {
        Self::from_colors([c])
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in colors {
            set.insert(c);
        }
        set
    }

    pub fn insert(&mut self, c: Color) {
        assert!((1..=MAX_COLORS).contains(&c), "color {c} out of range");
        self.0 |= 1u64 << (c - 1);
    }

    pub fn remove(&mut self, c: Color) {
        if (1..=MAX_COLORS).contains(&c) {
            self.0 &= !(1u64 << (c - 1));
        }
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        (1..=MAX_COLORS).contains(&c) && self.0 & (1u64 << (c - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    /// Largest color in the set, if any.
    pub fn max(self) -> Option<Color> {
        (self.0 != 0).then(|| (64 - self.0.leading_zeros()) as Color)
    }

    /// Colors in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as Color + 1;
            bits &= bits - 1;
            Some(c)
        })
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: ColorSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All `s`-element subsets of `{1, ..., r}` in lexicographic order.
    pub fn subsets_of_size(r: u8, s: usize) -> Vec<ColorSet> {
        (1..=r)
            .combinations(s)
            .map(ColorSet::from_colors)
            .collect()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet::from_colors(iter)
    }
}

/// An edge coloring of `K_n` with colors from `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredCompleteGraph {
    n: usize,
    r: u8,
    colors: Vec<Color>,
}

impl ColoredCompleteGraph {
    /// Builds a coloring from a per-pair color array in [`pair_index`] order.
    pub fn new(n: usize, r: u8, colors: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInstance("n must be at least 1".into()));
        }
        if r == 0 || r > MAX_COLORS {
            return Err(Error::InvalidInstance(format!(
                "color count {r} outside 1..={MAX_COLORS}"
            )));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::InvalidInstance(format!(
                "expected {} pair colors, got {}",
                pair_count(n),
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::InvalidInstance(format!(
                "color {c} outside 1..={r}"
            )));
        }
        let g = ColoredCompleteGraph { n, r, colors };
        let used = g.colors_present().len();
        if used < r as usize {
            log::warn!("declared {r} colors but only {used} appear");
        }
        Ok(g)
    }

    /// Builds a coloring by evaluating `color(i, j)` on every pair `i < j`.
    pub fn from_fn(n: usize, r: u8, mut color: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let colors = pairs(n).map(|(i, j)| color(i, j)).collect();
        Self::new(n, r, colors)
    }

    /// `K_n` with every edge colored `c`.
    pub fn monochromatic(n: usize, r: u8, c: Color) -> Result<Self> {
        Self::new(n, r, vec![c; pair_count(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        self.colors[pair_index(self.n, i, j)]
    }

    /// Per-pair colors in [`pair_index`] order.
    pub fn pair_colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn colors_present(&self) -> ColorSet {
        self.colors.iter().copied().collect()
    }

    /// Returns a copy with edge `{i, j}` recolored.
    pub fn with_color(&self, i: usize, j: usize, c: Color) -> Result<Self> {
        if c == 0 || c > self.r {
            return Err(Error::InvalidArgument(format!("color {c} outside 1..={}", self.r)));
        }
        let mut colors = self.colors.clone();
        colors[pair_index(self.n, i, j)] = c;
        Ok(ColoredCompleteGraph { colors, ..*self })
    }

    /// Same coloring with a larger declared palette.
    pub fn with_palette(&self, r: u8) -> Result<Self> {
        Self::new(self.n, r, self.colors.clone())
    }

    /// The spanning subgraph `G_S` keeping exactly the edges colored in `s`.
    pub fn color_subgraph(&self, s: ColorSet) -> Result<SimpleGraph> {
        if s.is_empty() {
            return Err(Error::InvalidArgument("color set must be nonempty".into()));
        }
        if !s.is_subset(ColorSet::all(self.r)) {
            return Err(Error::InvalidArgument(format!(
                "color set {s} not contained in 1..={}",
                self.r
            )));
        }
        let mut g = SimpleGraph::new(self.n);
        for ((i, j), &c) in pairs(self.n).zip(&self.colors) {
            if s.contains(c) {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    /// The coloring induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        Self::from_fn(vertices.len(), self.r, |a, b| self.color(vertices[a], vertices[b]))
    }
}

/// A [`ColoredCompleteGraph`] with every pair oriented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredTournament {
    base: ColoredCompleteGraph,
    /// `forward[pair_index(i, j)]` is true iff the arc is `i -> j` for `i < j`.
    forward: Vec<bool>,
}

impl ColoredTournament {
    pub fn new(base: ColoredCompleteGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != pair_count(base.n) {
            return Err(Error::InvalidInstance(format!(
                "expected {} orientations, got {}",
                pair_count(base.n),
                forward.len()
            )));
        }
        Ok(ColoredTournament { base, forward })
    }

    /// Orients every pair from smaller to larger index.
    pub fn transitive(base: ColoredCompleteGraph) -> Self {
        let forward = vec![true; pair_count(base.n)];
        ColoredTournament { base, forward }
    }

    pub fn base(&self) -> &ColoredCompleteGraph {
        &self.base
    }

    pub fn into_base(self) -> ColoredCompleteGraph {
        self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn r(&self) -> u8 {
        self.base.r
    }

    pub fn color(&self, i: usize, j: usize) -> Color {
        self.base.color(i, j)
    }

    /// Per-pair orientation flags in [`pair_index`] order.
    pub fn forward_flags(&self) -> &[bool] {
        &self.forward
    }

    /// Whether the arc between `u` and `v` points `u -> v`.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let fwd = self.forward[pair_index(self.base.n, u, v)];
        if u < v {
            fwd
        } else {
            !fwd
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.forward.iter().all(|&f| f)
    }

    /// All arcs `(tail, head)` in pair order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.base.n)
            .zip(&self.forward)
            .map(|((i, j), &f)| if f { (i, j) } else { (j, i) })
    }

    /// Returns a copy with edge `{i, j}` recolored, orientation unchanged.
    pub fn with_color(&self, i: usize, j: usize, c: Color) -> Result<Self> {
        Ok(ColoredTournament {
            base: self.base.with_color(i, j, c)?,
            forward: self.forward.clone(),
        })
    }
}
