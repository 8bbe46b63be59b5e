//! Rainbow triangles, Gallai partitions, and substitution.
//!
//! A coloring of `K_n` without rainbow triangles splits into `t >= 2` parts
//! whose cross edges use at most two colors, one color per pair of parts.
//! [`gallai_partition`] finds such a split; [`substitute`] is the inverse
//! blow-up.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{pair_count, pair_index, pairs, Color, ColorSet, ColoredCompleteGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowTriangle {
    pub vertices: (usize, usize, usize),
    /// Colors of `{u,v}`, `{v,w}`, `{u,w}`.
    pub colors: (Color, Color, Color),
}

impl fmt::Display for RainbowTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v, w) = self.vertices;
        let (a, b, c) = self.colors;
        write!(f, "({u},{v},{w}) with colors uv={a} vw={b} uw={c}")
    }
}

/// Lexicographically first rainbow triangle `u < v < w`, if any.
pub fn find_rainbow_triangle(g: &ColoredCompleteGraph) -> Option<RainbowTriangle> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let uv = g.color(u, v);
            for w in v + 1..n {
                let vw = g.color(v, w);
                let uw = g.color(u, w);
                if uv != vw && vw != uw && uv != uw {
                    return Some(RainbowTriangle {
                        vertices: (u, v, w),
                        colors: (uv, vw, uw),
                    });
                }
            }
        }
    }
    None
}

pub fn is_gallai(g: &ColoredCompleteGraph) -> bool {
    find_rainbow_triangle(g).is_none()
}

pub(crate) fn require_gallai(g: &ColoredCompleteGraph) -> Result<()> {
    match find_rainbow_triangle(g) {
        Some(t) => Err(Error::RainbowTriangle(t)),
        None => Ok(()),
    }
}

/// A partition `V_1, ..., V_t` with one cross color per part pair, all from `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiPartition {
    parts: Vec<Vec<usize>>,
    q: ColorSet,
    /// Cross color of part pair `(i, j)` at `pair_index(t, i, j)`.
    reduced: Vec<Color>,
}

impl GallaiPartition {
    /// Validates `parts` against `g` and reads off the reduced coloring.
    ///
    /// Parts must be nonempty, disjoint, and cover the vertex set; there must
    /// be at least two; every cross pair of parts must be monochromatic in a
    /// color of `q`, with `1 <= |q| <= 2`.
    pub fn from_parts(g: &ColoredCompleteGraph, parts: Vec<Vec<usize>>, q: ColorSet) -> Result<Self> {
        let n = g.n();
        let t = parts.len();
        if t < 2 {
            return Err(Error::InvalidArgument(format!("need at least 2 parts, got {t}")));
        }
        if q.is_empty() || q.len() > 2 {
            return Err(Error::InvalidArgument(format!("q must have 1 or 2 colors, got {q}")));
        }
        let mut owner = vec![usize::MAX; n];
        for (p, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidArgument(format!("part {p} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("vertex {v} in two parts")));
                }
                owner[v] = p;
            }
        }
        if let Some(v) = owner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidArgument(format!("vertex {v} not covered")));
        }

        let mut reduced = vec![0 as Color; pair_count(t)];
        for (u, v) in pairs(n) {
            let (pu, pv) = (owner[u], owner[v]);
            if pu == pv {
                continue;
            }
            let c = g.color(u, v);
            let slot = &mut reduced[pair_index(t, pu, pv)];
            if *slot == 0 {
                if !q.contains(c) {
                    return Err(Error::InvalidArgument(format!(
                        "edge {u}-{v} between parts {pu} and {pv} has color {c} outside {q}"
                    )));
                }
                *slot = c;
            } else if *slot != c {
                return Err(Error::InvalidArgument(format!(
                    "parts {pu} and {pv} joined by colors {} and {c}",
                    *slot
                )));
            }
        }
        Ok(GallaiPartition { parts, q, reduced })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn q(&self) -> ColorSet {
        self.q
    }

    pub fn cross_color(&self, i: usize, j: usize) -> Color {
        self.reduced[pair_index(self.parts.len(), i, j)]
    }

    /// The reduced coloring on the `t` parts, palette `1..=r`.
    pub fn reduced_graph(&self, r: u8) -> Result<ColoredCompleteGraph> {
        ColoredCompleteGraph::new(self.parts.len(), r, self.reduced.clone())
    }

    /// `owner[v]` is the index of the part containing `v`.
    pub fn owners(&self) -> Vec<usize> {
        let n = self.parts.iter().map(Vec::len).sum();
        let mut owner = vec![0; n];
        for (p, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = p;
            }
        }
        owner
    }
}

/// Connected components of the graph on `0..n` whose edges are the pairs
/// colored outside `q`, ordered by smallest vertex.
fn components_outside(g: &ColoredCompleteGraph, q: ColorSet) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut parts = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut members = vec![start];
        comp[start] = id;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for (v, c) in comp.iter_mut().enumerate() {
                if *c == usize::MAX && v != u && !q.contains(g.color(u, v)) {
                    *c = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        parts.push(members);
    }
    parts
}

/// Finds a Gallai partition of a rainbow-free coloring with `n >= 2`.
///
/// Candidate color pairs `q` (over the colors present) are tried in
/// lexicographic order; the parts are the connected components of the pairs
/// colored outside `q`, and the first `q` giving at least two components
/// wins. With a single color present the partition is into singletons.
pub fn gallai_partition(g: &ColoredCompleteGraph) -> Result<GallaiPartition> {
    if g.n() < 2 {
        return Err(Error::InvalidArgument("gallai_partition needs n >= 2".into()));
    }
    require_gallai(g)?;

    let present: Vec<Color> = g.colors_present().iter().collect();
    if present.len() == 1 {
        let parts = (0..g.n()).map(|v| vec![v]).collect();
        return GallaiPartition::from_parts(g, parts, ColorSet::single(present[0]));
    }
    for (a, &c1) in present.iter().enumerate() {
        for &c2 in &present[a + 1..] {
            let q = ColorSet::from_colors([c1, c2]);
            let parts = components_outside(g, q);
            if parts.len() >= 2 {
                return GallaiPartition::from_parts(g, parts, q);
            }
        }
    }
    Err(Error::Internal(
        "no color pair splits a rainbow-free coloring".into(),
    ))
}

/// Blows up each vertex `i` of a 2-colored `reduced` graph into `blocks[i]`.
///
/// Block 0's vertices come first, then block 1's, and so on. The palette of
/// the result is the largest palette among the inputs.
pub fn substitute(reduced: &ColoredCompleteGraph, blocks: &[ColoredCompleteGraph]) -> Result<ColoredCompleteGraph> {
    let t = reduced.n();
    if t < 2 {
        return Err(Error::InvalidArgument("reduced coloring needs at least 2 vertices".into()));
    }
    if blocks.len() != t {
        return Err(Error::InvalidArgument(format!(
            "{} blocks for a reduced coloring on {t} vertices",
            blocks.len()
        )));
    }
    let used = reduced.colors_present();
    if used.len() > 2 {
        return Err(Error::InvalidArgument(format!(
            "reduced coloring uses {} colors, at most 2 allowed",
            used.len()
        )));
    }
    for (i, b) in blocks.iter().enumerate() {
        if let Some(tri) = find_rainbow_triangle(b) {
            return Err(Error::InvalidArgument(format!("block {i} has rainbow triangle {tri}")));
        }
    }

    let r = blocks.iter().map(ColoredCompleteGraph::r).fold(reduced.r(), u8::max);
    let mut block_of = Vec::new();
    let mut local = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in 0..b.n() {
            block_of.push(i);
            local.push(v);
        }
    }
    ColoredCompleteGraph::from_fn(block_of.len(), r, |u, v| {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu == bv {
            blocks[bu].color(local[u], local[v])
        } else {
            reduced.color(bu, bv)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::digit_construction;

    fn rainbow_k3() -> ColoredCompleteGraph {
        ColoredCompleteGraph::new(3, 3, vec![1, 3, 2]).unwrap()
    }

    #[test]
    fn monochromatic_has_no_rainbow() {
        let g = ColoredCompleteGraph::monochromatic(5, 3, 2).unwrap();
        assert_eq!(find_rainbow_triangle(&g), None);
    }

    #[test]
    fn finds_rainbow_k3() {
        let tri = find_rainbow_triangle(&rainbow_k3()).unwrap();
        assert_eq!(tri.vertices, (0, 1, 2));
        assert_eq!(tri.colors, (1, 2, 3));
    }

    #[test]
    fn finds_lexicographically_first() {
        // (0,2,3) and (1,2,3) are both rainbow
        let g = ColoredCompleteGraph::from_fn(4, 3, |i, j| match (i, j) {
            (0, 2) | (1, 2) => 1,
            (2, 3) => 2,
            (0, 3) | (1, 3) => 3,
            _ => 1,
        })
        .unwrap();
        assert_eq!(find_rainbow_triangle(&g).unwrap().vertices, (0, 2, 3));
    }

    #[test]
    fn digit_construction_is_rainbow_free_by_brute_force() {
        let g = digit_construction(2, 3).unwrap().into_base();
        let mut triples = 0;
        for u in 0..8 {
            for v in u + 1..8 {
                for w in v + 1..8 {
                    triples += 1;
                    let cs = [g.color(u, v), g.color(v, w), g.color(u, w)];
                    assert!(cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2]);
                }
            }
        }
        assert_eq!(triples, 56);
        assert!(is_gallai(&g));
    }

    #[test]
    fn two_colored_k4_splits_into_singletons() {
        let g = ColoredCompleteGraph::new(4, 2, vec![1, 2, 2, 1, 2, 1]).unwrap();
        let p = gallai_partition(&g).unwrap();
        assert_eq!(p.t(), 4);
        assert_eq!(p.q(), ColorSet::from_colors([1, 2]));
        assert!(p.parts().iter().all(|part| part.len() == 1));
    }

    #[test]
    fn single_color_splits_into_singletons() {
        let g = ColoredCompleteGraph::monochromatic(3, 2, 2).unwrap();
        let p = gallai_partition(&g).unwrap();
        assert_eq!(p.t(), 3);
        assert_eq!(p.q(), ColorSet::single(2));
    }

    #[test]
    fn digit_construction_partition() {
        let g = digit_construction(2, 3).unwrap().into_base();
        let p = gallai_partition(&g).unwrap();
        // q = {1,2}: components of the color-3 edges are the pairs differing in the last digit
        assert_eq!(p.q(), ColorSet::from_colors([1, 2]));
        assert_eq!(p.parts(), &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]);
        let owner = p.owners();
        for u in 0..4 {
            for v in 4..8 {
                assert_eq!(p.cross_color(owner[u], owner[v]), 1);
            }
        }
        // the two-half partition is also a valid Gallai partition
        let halves = GallaiPartition::from_parts(&g, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], p.q()).unwrap();
        assert_eq!(halves.cross_color(0, 1), 1);
    }

    #[test]
    fn partition_rejects_bad_input() {
        assert!(matches!(gallai_partition(&rainbow_k3()), Err(Error::RainbowTriangle(_))));
        let one = ColoredCompleteGraph::monochromatic(1, 1, 1).unwrap();
        assert!(gallai_partition(&one).is_err());
    }

    #[test]
    fn from_parts_validates() {
        let g = digit_construction(2, 2).unwrap().into_base();
        let q = ColorSet::from_colors([1, 2]);
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 1, 2, 3]], q).is_err());
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 1], vec![2]], q).is_err());
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 1], vec![1, 2, 3]], q).is_err());
        // {0,2} vs {1,3} mixes colors 1 and 2
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 2], vec![1, 3]], q).is_err());
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 1], vec![2, 3]], ColorSet::single(2)).is_err());
        assert!(GallaiPartition::from_parts(&g, vec![vec![0, 1], vec![2, 3]], ColorSet::single(1)).is_ok());
    }

    #[test]
    fn substitute_two_singletons() {
        let reduced = ColoredCompleteGraph::monochromatic(2, 1, 1).unwrap();
        let one = ColoredCompleteGraph::monochromatic(1, 1, 1).unwrap();
        let g = substitute(&reduced, &[one.clone(), one]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.color(0, 1), 1);
    }

    #[test]
    fn substitute_counts() {
        let reduced = ColoredCompleteGraph::monochromatic(2, 3, 3).unwrap();
        let b0 = ColoredCompleteGraph::monochromatic(2, 3, 1).unwrap();
        let b1 = ColoredCompleteGraph::monochromatic(3, 3, 2).unwrap();
        let g = substitute(&reduced, &[b0, b1]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.pair_colors().len(), 10);
        assert_eq!(g.pair_colors().iter().filter(|&&c| c == 3).count(), 6);
        assert!(is_gallai(&g));
    }

    #[test]
    fn substitute_rejects_bad_input() {
        let one = ColoredCompleteGraph::monochromatic(1, 3, 1).unwrap();
        let three_colors = rainbow_k3();
        assert!(substitute(&three_colors, &[one.clone(), one.clone(), one.clone()]).is_err());
        let reduced = ColoredCompleteGraph::monochromatic(2, 3, 1).unwrap();
        assert!(substitute(&reduced, &[one.clone(), rainbow_k3()]).is_err());
        assert!(substitute(&reduced, &[one]).is_err());
    }
}
