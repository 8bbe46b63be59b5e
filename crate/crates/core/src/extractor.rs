//! Chromatic numbers of color-restricted subgraphs of Gallai colorings.
//!
//! For a rainbow-free `r`-coloring of `K_n` and `1 <= s <= r`,
//! `n^C(r-1, s-1) <= ∏_{|S| = s} χ(G_S)`, so some `s`-color subgraph has
//! `χ^r >= n^s`. This module evaluates both sides exactly, checks the
//! two-color swap inequality across a Gallai partition, and replays the
//! inductive chain of inequalities on concrete instances.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{chromatic_number, ColoringCertificate};
use crate::error::{Error, Result};
use crate::gallai::{require_gallai, GallaiPartition};
use crate::model::{Color, ColorSet, ColoredCompleteGraph};

/// Relative tolerance for the floating-point steps of [`holder_check`] and [`replay_chain`].
pub const HOLDER_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetChi {
    pub colors: ColorSet,
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub n: usize,
    pub r: u8,
    pub s: usize,
    /// One entry per `s`-subset, lexicographic.
    pub per_subset: Vec<SubsetChi>,
    #[serde(serialize_with = "as_decimal")]
    pub product: BigUint,
    /// `n^C(r-1, s-1)`.
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
    pub holds: bool,
}

impl ProductReport {
    /// One row per subset (bitmask with color `c` at bit `c - 1`, then χ) and a summary row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,subset_mask,chi,product,bound,holds\n");
        for e in &self.per_subset {
            let _ = writeln!(out, "subset,{},{},,,", e.colors.bits(), e.chi);
        }
        let _ = writeln!(out, "summary,,,{},{},{}", self.product, self.bound, self.holds);
        out
    }
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&x.to_string())
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn check_s(g: &ColoredCompleteGraph, s: usize) -> Result<()> {
    if s == 0 || s > g.r() as usize {
        return Err(Error::InvalidArgument(format!("need 1 <= s <= r = {}, got s = {s}", g.r())));
    }
    Ok(())
}

fn subset_solutions(
    g: &ColoredCompleteGraph,
    s: usize,
    node_budget: u64,
) -> Result<Vec<(ColorSet, ColoringCertificate)>> {
    ColorSet::subsets_of_size(g.r(), s)
        .into_par_iter()
        .map(|colors| {
            let sol = chromatic_number(&g.color_subgraph(colors)?, node_budget)?;
            Ok((colors, sol.coloring))
        })
        .collect()
}

/// Exact `∏_{|S| = s} χ(G_S)` against `n^C(r-1, s-1)`.
pub fn verify_product(g: &ColoredCompleteGraph, s: usize, node_budget: u64) -> Result<ProductReport> {
    check_s(g, s)?;
    require_gallai(g)?;
    let per_subset: Vec<SubsetChi> = subset_solutions(g, s, node_budget)?
        .into_iter()
        .map(|(colors, cert)| SubsetChi { colors, chi: cert.k() })
        .collect();
    let product = per_subset
        .iter()
        .fold(BigUint::from(1u32), |acc, e| acc * BigUint::from(e.chi));
    let exponent = binomial(g.r() as usize - 1, s - 1);
    let bound = BigUint::from(g.n()).pow(exponent as u32);
    Ok(ProductReport {
        n: g.n(),
        r: g.r(),
        s,
        holds: bound <= product,
        per_subset,
        product,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BestSubset {
    pub colors: ColorSet,
    pub k: usize,
    pub coloring: ColoringCertificate,
}

/// The `s`-color subgraph of largest chromatic number, ties to the lexicographically least set.
pub fn best_subset(g: &ColoredCompleteGraph, s: usize, node_budget: u64) -> Result<BestSubset> {
    check_s(g, s)?;
    require_gallai(g)?;
    let mut best: Option<BestSubset> = None;
    for (colors, coloring) in subset_solutions(g, s, node_budget)? {
        if best.as_ref().is_none_or(|b| coloring.k() > b.k) {
            best = Some(BestSubset { colors, k: coloring.k(), coloring });
        }
    }
    best.ok_or_else(|| Error::Internal("no color subsets".into()))
}

fn chi_of(g: &ColoredCompleteGraph, colors: ColorSet, vertices: Option<&[usize]>, node_budget: u64) -> Result<usize> {
    let h = g.color_subgraph(colors)?;
    let h = match vertices {
        Some(v) => h.induced(v),
        None => h,
    };
    Ok(chromatic_number(&h, node_budget)?.k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub q1: Color,
    pub q2: Color,
    pub swapped: ColorSet,
    /// `χ(G_S) · χ(G_S*)`.
    pub lhs: usize,
    /// `Σ_i χ(G_S[V_i]) · χ(G_S*[V_i])`.
    pub rhs: usize,
    pub holds: bool,
}

/// Checks `χ(S)·χ(S*) >= Σ_i χ(S, i)·χ(S*, i)` where `S* = S - q1 + q2`.
///
/// `q1` is whichever of the partition's two cross colors lies in `S`; the
/// other must not.
pub fn check_claim(
    g: &ColoredCompleteGraph,
    p: &GallaiPartition,
    s: ColorSet,
    node_budget: u64,
) -> Result<ClaimCheck> {
    let q = p.q();
    if q.len() != 2 {
        return Err(Error::InvalidArgument(format!("partition color set {q} must have two colors")));
    }
    let inside = q.intersection(s);
    if inside.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "exactly one of {q} must lie in S = {s}"
        )));
    }
    if s.is_empty() || !s.is_subset(ColorSet::all(g.r())) {
        return Err(Error::InvalidArgument(format!("S = {s} not a nonempty subset of 1..={}", g.r())));
    }
    let q1 = inside.iter().next().unwrap();
    let q2 = q.difference(inside).iter().next().unwrap();
    let mut swapped = s;
    swapped.remove(q1);
    swapped.insert(q2);

    let lhs = chi_of(g, s, None, node_budget)? * chi_of(g, swapped, None, node_budget)?;
    let mut rhs = 0;
    for part in p.parts() {
        rhs += chi_of(g, s, Some(part), node_budget)? * chi_of(g, swapped, Some(part), node_budget)?;
    }
    Ok(ClaimCheck { q1, q2, swapped, lhs, rhs, holds: lhs >= rhs })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HolderCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// `∏_S Σ_i a_S(i) >= (Σ_i ∏_S a_S(i)^{1/|F|})^{|F|}` for a non-negative
/// matrix with one row per index `S` of the family `F`.
pub fn holder_check(a: &[Vec<f64>]) -> Result<HolderCheck> {
    let f = a.len();
    if f == 0 {
        return Err(Error::InvalidArgument("family must be nonempty".into()));
    }
    let m = a[0].len();
    if a.iter().any(|row| row.len() != m) {
        return Err(Error::InvalidArgument("rows have different lengths".into()));
    }
    if let Some(x) = a.iter().flatten().find(|x| !(x.is_finite() && **x >= 0.0)) {
        return Err(Error::InvalidArgument(format!("entry {x} is not a finite non-negative real")));
    }
    let lhs: f64 = a.iter().map(|row| row.iter().sum::<f64>()).product();
    let exp = 1.0 / f as f64;
    let inner: f64 = (0..m)
        .map(|i| a.iter().map(|row| row[i].powf(exp)).product::<f64>())
        .sum();
    let rhs = inner.powi(f as i32);
    Ok(HolderCheck {
        lhs,
        rhs,
        holds: lhs >= rhs - HOLDER_TOLERANCE * rhs.max(1.0),
    })
}

/// Values of the inductive chain on one instance, each at least the next.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReplay {
    pub q1: Color,
    pub q2: Color,
    /// `|F| = C(r-1, s-1)`, the number of `s`-sets containing `q1`.
    pub family_size: usize,
    /// In order: the product `∏ χ(S)`; after the swap inequality; after Hölder;
    /// after regrouping the disjoint sets; after `χ(S) >= χ(S, i)`;
    /// `n^|F|` via the per-part bounds.
    pub steps: Vec<f64>,
    /// `χ(S) = Σ_i χ(S, i)` for `Q ⊆ S` and `χ(S) = max_i χ(S, i)` for `Q ∩ S = ∅`.
    pub identities_hold: bool,
    /// `|V_i|^|F| <= ∏_S χ(S, i)` on every part.
    pub parts_hold: bool,
    pub holds: bool,
}

/// Replays the inductive step of the product bound on `g` with partition `p`.
///
/// With `Q = {q1, q2}` the cross colors (a one-color `Q` is padded with the
/// smallest unused color), `S* = S - q1 + q2` and `F` the `s`-sets
/// containing `q1`, set `α(S, i) = χ(S, i)·χ(S*, i)` when `q2 ∉ S` and
/// `α(S, i) = χ(S, i)` when `Q ⊆ S`. The chain is
///
/// ```text
/// ∏_S χ(S)
///   >= ∏_{S∈F} Σ_i α(S,i) · ∏_{S∩Q=∅} χ(S)
///   >= (Σ_i ∏_{S∈F} α(S,i)^{1/|F|})^{|F|} · ∏_{S∩Q=∅} χ(S)
///   =  (Σ_i (∏_{S∩Q=∅} χ(S) · ∏_{S∈F} α(S,i))^{1/|F|})^{|F|}
///   >= (Σ_i (∏_S χ(S,i))^{1/|F|})^{|F|}
///   >= (Σ_i |V_i|)^{|F|} = n^{|F|}
/// ```
pub fn replay_chain(
    g: &ColoredCompleteGraph,
    p: &GallaiPartition,
    s: usize,
    node_budget: u64,
) -> Result<ChainReplay> {
    check_s(g, s)?;
    let mut q = p.q();
    if q.len() == 1 {
        let spare = (1..=g.r())
            .find(|&c| !q.contains(c))
            .ok_or_else(|| Error::InvalidArgument("one-color palette has no second cross color".into()))?;
        q.insert(spare);
    }
    let mut q_colors = q.iter();
    let (q1, q2) = (q_colors.next().unwrap(), q_colors.next().unwrap());

    struct Row {
        colors: ColorSet,
        whole: usize,
        parts: Vec<usize>,
    }
    let rows: Vec<Row> = ColorSet::subsets_of_size(g.r(), s)
        .into_par_iter()
        .map(|colors| {
            let whole = chi_of(g, colors, None, node_budget)?;
            let parts = p
                .parts()
                .iter()
                .map(|part| chi_of(g, colors, Some(part), node_budget))
                .collect::<Result<Vec<_>>>()?;
            Ok(Row { colors, whole, parts })
        })
        .collect::<Result<_>>()?;
    let row_of = |c: ColorSet| rows.iter().find(|r| r.colors == c).expect("all s-sets present");
    let m = p.t();

    let identities_hold = rows.iter().all(|row| {
        if q.is_subset(row.colors) {
            row.whole == row.parts.iter().sum::<usize>()
        } else if q.intersection(row.colors).is_empty() {
            row.whole == *row.parts.iter().max().unwrap()
        } else {
            true
        }
    });

    let family: Vec<&Row> = rows.iter().filter(|r| r.colors.contains(q1)).collect();
    let f = family.len();
    let alpha = |row: &Row, i: usize| -> f64 {
        if row.colors.contains(q2) {
            row.parts[i] as f64
        } else {
            let mut swapped = row.colors;
            swapped.remove(q1);
            swapped.insert(q2);
            (row.parts[i] * row_of(swapped).parts[i]) as f64
        }
    };
    let disjoint: f64 = rows
        .iter()
        .filter(|r| q.intersection(r.colors).is_empty())
        .map(|r| r.whole as f64)
        .product();
    let exp = 1.0 / f as f64;

    let product: f64 = rows.iter().map(|r| r.whole as f64).product();
    let after_claim = family
        .iter()
        .map(|row| (0..m).map(|i| alpha(row, i)).sum::<f64>())
        .product::<f64>()
        * disjoint;
    let after_holder = (0..m)
        .map(|i| family.iter().map(|row| alpha(row, i)).product::<f64>().powf(exp))
        .sum::<f64>()
        .powi(f as i32)
        * disjoint;
    let regrouped = (0..m)
        .map(|i| (disjoint * family.iter().map(|row| alpha(row, i)).product::<f64>()).powf(exp))
        .sum::<f64>()
        .powi(f as i32);
    let per_part = (0..m)
        .map(|i| rows.iter().map(|r| r.parts[i] as f64).product::<f64>().powf(exp))
        .sum::<f64>()
        .powi(f as i32);
    let bound = (g.n() as f64).powi(f as i32);
    let steps = vec![product, after_claim, after_holder, regrouped, per_part, bound];

    let parts_hold = p.parts().iter().enumerate().all(|(i, part)| {
        let lhs = BigUint::from(part.len()).pow(f as u32);
        let rhs = rows.iter().fold(BigUint::from(1u32), |acc, r| acc * BigUint::from(r.parts[i]));
        lhs <= rhs
    });
    let chain_holds = steps
        .windows(2)
        .all(|w| w[0] >= w[1] - HOLDER_TOLERANCE * w[1].max(1.0));

    Ok(ChainReplay {
        q1,
        q2,
        family_size: f,
        steps,
        identities_hold,
        parts_hold,
        holds: identities_hold && parts_hold && chain_holds,
    })
}
