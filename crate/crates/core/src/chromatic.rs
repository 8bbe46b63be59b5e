//! Exact chromatic numbers with certificates.
//!
//! The solver is a DSATUR branch-and-bound: a maximum clique gives the lower
//! bound and pre-colors its vertices, a greedy saturation-order coloring gives
//! the initial upper bound, and the search looks for colorings with strictly
//! fewer classes until the bounds meet or the tree is exhausted. Every search
//! node counts against a budget; running out is an error, never an
//! approximation.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A proper coloring with classes `1..=k`, each nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCertificate {
    k: usize,
    assignment: Vec<usize>,
}

impl ColoringCertificate {
    /// Validates that `assignment` is a proper coloring of `g` using exactly the classes `1..=k`.
    pub fn new(g: &SimpleGraph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != g.n() {
            return Err(Error::InvalidArgument("assignment length differs from vertex count".into()));
        }
        let k = assignment.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for &c in &assignment {
            if c == 0 {
                return Err(Error::InvalidArgument("class 0 is not allowed".into()));
            }
            used[c] = true;
        }
        if used[1..].iter().any(|&u| !u) {
            return Err(Error::InvalidArgument("coloring skips a class".into()));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| assignment[u] == assignment[v]) {
            return Err(Error::InvalidArgument(format!("edge {u}-{v} is monochromatic")));
        }
        Ok(ColoringCertificate { k, assignment })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Class of each vertex, in `1..=k`.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        self.assignment.len() == g.n() && g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    vertices: Vec<usize>,
}

impl CliqueCertificate {
    pub fn new(g: &SimpleGraph, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.iter().any(|&v| v >= g.n()) || !g.is_clique(&vertices) {
            return Err(Error::InvalidArgument("vertices do not form a clique".into()));
        }
        Ok(CliqueCertificate { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticSolution {
    pub k: usize,
    pub coloring: ColoringCertificate,
    pub clique: CliqueCertificate,
}

impl ChromaticSolution {
    /// Whether the clique alone certifies that `k` is optimal.
    pub fn clique_certifies(&self) -> bool {
        self.clique.len() == self.k
    }
}

struct CliqueSearch {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exceeded: bool,
}

impl CliqueSearch {
    /// Greedy sequential coloring of `p` in index order; returns vertices by
    /// nondecreasing color with the color of each.
    fn color_sort(&self, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                q.difference_with(&self.adj[v]);
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: FixedBitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return;
        }
        let (order, bounds) = self.color_sort(&p);
        for idx in (0..order.len()).rev() {
            if current.len() + bounds[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            current.push(v);
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            if np.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, np);
            }
            current.pop();
            if self.exceeded {
                return;
            }
            p.set(v, false);
        }
    }
}

/// A maximum clique, found by branch-and-bound with greedy-coloring bounds.
///
/// Vertices are explored in order of decreasing degree (ties by index), so
/// the result is deterministic. On budget exhaustion the best clique found so
/// far comes back inside [`Error::CliqueBudgetExceeded`].
pub fn max_clique(g: &SimpleGraph, node_budget: u64) -> Result<CliqueCertificate> {
    let n = g.n();
    if node_budget == 0 {
        return Err(Error::InvalidArgument("node budget must be positive".into()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let adj = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            for w in g.neighbors(v).ones() {
                row.insert(rank[w]);
            }
            row
        })
        .collect();
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        nodes: 0,
        budget: node_budget,
        exceeded: false,
    };
    if n > 0 {
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        search.expand(&mut Vec::new(), all);
    }
    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    let clique = CliqueCertificate { vertices };
    if search.exceeded {
        Err(Error::CliqueBudgetExceeded { best: clique })
    } else {
        Ok(clique)
    }
}

struct ColorSearch<'a> {
    g: &'a SimpleGraph,
    color: Vec<usize>,
    /// `nbr_count[v][c]`: neighbors of `v` currently in class `c`.
    nbr_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    free_degree: Vec<usize>,
    best: Vec<usize>,
    upper: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a SimpleGraph, max_classes: usize) -> Self {
        let n = g.n();
        ColorSearch {
            g,
            color: vec![0; n],
            nbr_count: vec![vec![0; max_classes + 2]; n],
            saturation: vec![0; n],
            free_degree: (0..n).map(|v| g.degree(v)).collect(),
            best: Vec::new(),
            upper: max_classes,
            lower: 0,
            nodes: 0,
            budget: u64::MAX,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v).ones() {
            let cnt = &mut self.nbr_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
            self.free_degree[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        for w in self.g.neighbors(v).ones() {
            let cnt = &mut self.nbr_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
            self.free_degree[w] += 1;
        }
    }

    /// Uncolored vertex of maximum saturation, then maximum uncolored degree, then smallest index.
    fn select(&self) -> Option<usize> {
        let mut pick: Option<usize> = None;
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            pick = match pick {
                Some(p)
                    if (self.saturation[p], self.free_degree[p])
                        >= (self.saturation[v], self.free_degree[v]) =>
                {
                    Some(p)
                }
                _ => Some(v),
            };
        }
        pick
    }

    fn greedy(&mut self) -> usize {
        let mut used = self.color.iter().copied().max().unwrap_or(0);
        while let Some(v) = self.select() {
            let c = (1..).find(|&c| self.nbr_count[v][c] == 0).unwrap();
            self.assign(v, c);
            used = used.max(c);
        }
        used
    }

    fn search(&mut self, max_used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ChromaticBudgetExceeded {
                lower: self.lower,
                upper: self.upper,
            });
        }
        let Some(v) = self.select() else {
            if max_used < self.upper {
                self.upper = max_used;
                self.best = self.color.clone();
            }
            return Ok(());
        };
        let mut c = 1;
        while c <= (max_used + 1).min(self.upper - 1) {
            if self.nbr_count[v][c] == 0 {
                self.assign(v, c);
                let res = self.search(max_used.max(c));
                self.unassign(v);
                res?;
                if self.upper <= self.lower {
                    return Ok(());
                }
            }
            c += 1;
        }
        Ok(())
    }
}

/// Exact chromatic number of `g` with a proper coloring and a clique witness.
pub fn chromatic_number(g: &SimpleGraph, node_budget: u64) -> Result<ChromaticSolution> {
    if node_budget == 0 {
        return Err(Error::InvalidArgument("node budget must be positive".into()));
    }
    let n = g.n();
    if n == 0 {
        return Ok(ChromaticSolution {
            k: 0,
            coloring: ColoringCertificate { k: 0, assignment: Vec::new() },
            clique: CliqueCertificate::default(),
        });
    }

    // A truncated clique search still yields a valid lower bound.
    let clique = match max_clique(g, node_budget) {
        Ok(c) => c,
        Err(Error::CliqueBudgetExceeded { best }) => best,
        Err(e) => return Err(e),
    };
    let lower = clique.len().max(1);

    let mut greedy = ColorSearch::new(g, n);
    let upper = greedy.greedy();
    let mut best = greedy.color;

    if upper > lower {
        let mut search = ColorSearch::new(g, upper);
        search.upper = upper;
        search.lower = lower;
        search.budget = node_budget;
        search.best = best.clone();
        for (i, &v) in clique.vertices().iter().enumerate() {
            search.assign(v, i + 1);
        }
        search.search(clique.len())?;
        best = search.best;
    }

    let coloring = ColoringCertificate::new(g, best)
        .map_err(|e| Error::Internal(format!("solver produced an invalid coloring: {e}")))?;
    Ok(ChromaticSolution {
        k: coloring.k(),
        coloring,
        clique,
    })
}

/// Replaces each module `parts[i]` of `g` by `replacements[i]`.
///
/// Every part must be a module: between two parts either all pairs are
/// edges or none are. In the result, replacement 0's vertices come first,
/// then replacement 1's, and so on; two vertices from different replacements
/// are adjacent iff their parts are joined in `g`. When the part and its
/// replacement both have at most 16 vertices, equal chromatic numbers are
/// checked exactly.
pub fn blowup_replace(g: &SimpleGraph, parts: &[Vec<usize>], replacements: &[SimpleGraph]) -> Result<SimpleGraph> {
    const CHECK_LIMIT: usize = 16;
    let n = g.n();
    if parts.len() != replacements.len() {
        return Err(Error::InvalidArgument(format!(
            "{} parts but {} replacements",
            parts.len(),
            replacements.len()
        )));
    }
    let mut owner = vec![usize::MAX; n];
    for (p, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidArgument(format!("part {p} is empty")));
        }
        for &v in part {
            if v >= n || owner[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range or repeated")));
            }
            owner[v] = p;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("parts do not cover the vertex set".into()));
    }

    let m = parts.len();
    let mut joined = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let first = g.has_edge(parts[i][0], parts[j][0]);
            let uniform = parts[i]
                .iter()
                .all(|&u| parts[j].iter().all(|&v| g.has_edge(u, v) == first));
            if !uniform {
                return Err(Error::InvalidArgument(format!(
                    "parts {i} and {j} are neither fully joined nor fully separated"
                )));
            }
            joined[i][j] = first;
            joined[j][i] = first;
        }
    }

    for (i, (part, rep)) in parts.iter().zip(replacements).enumerate() {
        if rep.n() == 0 {
            return Err(Error::InvalidArgument(format!("replacement {i} is empty")));
        }
        if part.len() <= CHECK_LIMIT && rep.n() <= CHECK_LIMIT {
            let original = chromatic_number(&g.induced(part), DEFAULT_NODE_BUDGET)?.k;
            let replaced = chromatic_number(rep, DEFAULT_NODE_BUDGET)?.k;
            if original != replaced {
                return Err(Error::InvalidArgument(format!(
                    "replacement {i} has chromatic number {replaced}, part has {original}"
                )));
            }
        }
    }

    let mut offset = Vec::with_capacity(m + 1);
    offset.push(0);
    for rep in replacements {
        offset.push(offset.last().unwrap() + rep.n());
    }
    let mut h = SimpleGraph::new(offset[m]);
    for (i, rep) in replacements.iter().enumerate() {
        for (u, v) in rep.edges() {
            h.add_edge(offset[i] + u, offset[i] + v);
        }
        for j in i + 1..m {
            if joined[i][j] {
                for u in offset[i]..offset[i + 1] {
                    for v in offset[j]..offset[j + 1] {
                        h.add_edge(u, v);
                    }
                }
            }
        }
    }
    Ok(h)
}
