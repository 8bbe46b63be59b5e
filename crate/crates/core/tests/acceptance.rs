//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Every library answer is rechecked here against oracles that share no code
//! with the library: backtracking chromatic numbers, DFS path enumeration,
//! explicit certificates for the digit construction, and direct evaluation
//! of both sides of each inequality.

use std::time::Instant;

use gallai_core::chromatic::{blowup_replace, DEFAULT_NODE_BUDGET};
use gallai_core::constructions::{
    digit_construction, planted_modules, planted_substitution, random_gallai, random_orientation, random_simple_graph,
    GeneratorParams,
};
use gallai_core::extractor::{best_subset, check_claim, holder_check, verify_product};
use gallai_core::gallai::{find_rainbow_triangle, gallai_partition};
use gallai_core::paths::{
    exact_longest_s_colored_path, ghrv_levels, ghrv_path, monotone_subsequence, pigeonhole_pairs, s_colored_path,
    Monotone, Orientation, DEFAULT_PATH_LIMIT,
};
use gallai_core::search::{search, SearchConfig};
use gallai_core::{ColorSet, ColoredCompleteGraph, ColoredTournament, SimpleGraph};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact zero tolerance for integer criteria; Hölder comparisons are relative.
const HOLDER_TOL: f64 = 1e-9;

// ---------------------------------------------------------------- oracles

fn k_colorable(adj: &[Vec<bool>], order: &[usize], k: usize, color: &mut [usize], at: usize, used: usize) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    for c in 1..=(used + 1).min(k) {
        if order[..at].iter().all(|&u| !(adj[u][v] && color[u] == c)) {
            color[v] = c;
            if k_colorable(adj, order, k, color, at + 1, used.max(c)) {
                return true;
            }
        }
    }
    color[v] = 0;
    false
}

/// Smallest `k` admitting a proper coloring, by plain backtracking.
fn chi_oracle(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].iter().filter(|&&b| b).count()));
    (1..=n)
        .find(|&k| k_colorable(&adj, &order, k, &mut vec![0; n], 0, 0))
        .unwrap()
}

fn subgraph(g: &ColoredCompleteGraph, colors: &[u8], within: Option<&[usize]>) -> SimpleGraph {
    let vs: Vec<usize> = within.map(<[usize]>::to_vec).unwrap_or_else(|| (0..g.n()).collect());
    let mut h = SimpleGraph::new(vs.len());
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if colors.contains(&g.color(vs[a], vs[b])) {
                h.add_edge(a, b);
            }
        }
    }
    h
}

fn color_subsets(r: u8, s: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << r {
        if mask.count_ones() as usize == s {
            out.push((1..=r).filter(|c| mask >> (c - 1) & 1 == 1).collect());
        }
    }
    out
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Longest simple directed path in colors `colors`, by exhaustive DFS.
fn dfs_longest(t: &ColoredTournament, colors: &[u8]) -> usize {
    fn go(t: &ColoredTournament, colors: &[u8], v: usize, seen: &mut Vec<bool>) -> usize {
        let mut best = 1;
        for w in 0..t.n() {
            if !seen[w] && t.has_arc(v, w) && colors.contains(&t.color(v, w)) {
                seen[w] = true;
                best = best.max(1 + go(t, colors, w, seen));
                seen[w] = false;
            }
        }
        best
    }
    (0..t.n())
        .map(|v| {
            let mut seen = vec![false; t.n()];
            seen[v] = true;
            go(t, colors, v, &mut seen)
        })
        .max()
        .unwrap_or(0)
}

fn dfs_longest_s(t: &ColoredTournament, s: usize) -> usize {
    color_subsets(t.r(), s.min(t.r() as usize))
        .iter()
        .map(|c| dfs_longest(t, c))
        .max()
        .unwrap()
}

/// Checks `vs` arc by arc in `t`; returns the colors seen.
fn path_colors(t: &ColoredTournament, vs: &[usize]) -> Option<Vec<u8>> {
    let mut seen = vec![false; t.n()];
    for &v in vs {
        if v >= t.n() || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    let mut colors = Vec::new();
    for w in vs.windows(2) {
        if !t.has_arc(w[0], w[1]) {
            return None;
        }
        let c = t.color(w[0], w[1]);
        if !colors.contains(&c) {
            colors.push(c);
        }
    }
    Some(colors)
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

fn gallai_instance(seed: u64, n_max: usize, r_lo: u8, r_max: u8) -> ColoredCompleteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=n_max);
    let r = rng.random_range(r_lo..=r_max);
    random_gallai(n, r, &GeneratorParams::new(rng.random())).unwrap()
}

// ---------------------------------------------------------------- criteria

type Verdict = Result<String, String>;

fn criterion_1() -> Verdict {
    let mut checks = 0;
    for seed in 0..200 {
        let g = gallai_instance(seed, 20, 1, 4);
        let (n, r) = (g.n(), g.r());
        for s in 1..=r as usize {
            let rep = verify_product(&g, s, DEFAULT_NODE_BUDGET).map_err(|e| format!("seed {seed} s={s}: {e}"))?;
            let mut subsets = color_subsets(r, s);
            let mut listed: Vec<Vec<u8>> = rep.per_subset.iter().map(|e| e.colors.iter().collect()).collect();
            subsets.sort();
            listed.sort();
            if subsets != listed {
                return Err(format!("seed {seed} s={s}: report lists {listed:?}"));
            }
            let mut product = big(1);
            for entry in &rep.per_subset {
                let sub: Vec<u8> = entry.colors.iter().collect();
                let chi = chi_oracle(&subgraph(&g, &sub, None));
                if chi != entry.chi {
                    return Err(format!("seed {seed} S={sub:?}: library chi {} oracle {chi}", entry.chi));
                }
                product *= big(chi);
            }
            let bound = big(n).pow(binom(r as usize - 1, s - 1) as u32);
            if !(rep.holds && product >= bound && rep.product == product && rep.bound == bound) {
                return Err(format!("seed {seed} n={n} r={r} s={s}: product {product} bound {bound}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} (instance, s) checks, exact integers"))
}

fn criterion_2() -> Verdict {
    let mut checks = 0;
    for m in [2usize, 3] {
        for r in [2u8, 3] {
            let t = digit_construction(m, r).map_err(|e| e.to_string())?;
            let n = t.n();
            for s in 1..=r as usize {
                let want = m.pow(s as u32);
                let best = best_subset(t.base(), s, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
                if best.k != want {
                    return Err(format!("m={m} r={r} s={s}: k={} want {want}", best.k));
                }
                // upper certificate: the returned coloring, checked edge by edge
                let sub: Vec<u8> = best.colors.iter().collect();
                let h = subgraph(t.base(), &sub, None);
                let col = best.coloring.assignment();
                if h.edges().any(|(u, v)| col[u] == col[v]) || col.iter().max() != Some(&want) {
                    return Err(format!("m={m} r={r} s={s}: coloring certificate invalid"));
                }
                // lower certificate: vertices that vary only in the digit positions of S
                let clique: Vec<usize> = (0..n)
                    .filter(|&v| {
                        (1..=r).all(|pos| sub.contains(&pos) || (v / m.pow((r - pos) as u32)) % m == 0)
                    })
                    .collect();
                if clique.len() != want || !h.is_clique(&clique) {
                    return Err(format!("m={m} r={r} s={s}: digit clique has size {}", clique.len()));
                }
                let rep = verify_product(t.base(), s, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
                let bound = big(n).pow(binom(r as usize - 1, s - 1) as u32);
                if rep.product != bound || rep.bound != bound {
                    return Err(format!("m={m} r={r} s={s}: product {} bound {bound}", rep.product));
                }
                checks += 1;
            }
        }
    }
    let rep = verify_product(digit_construction(2, 3).unwrap().base(), 2, DEFAULT_NODE_BUDGET).unwrap();
    if rep.product != big(64) || rep.bound != big(64) {
        return Err(format!("(2,3,2): {} vs {}", rep.product, rep.bound));
    }
    Ok(format!("{checks} (m, r, s) cases with k = m^s and product = bound; (2,3,2) gives 64 = 64"))
}

fn criterion_3() -> Verdict {
    let mut min_slack = f64::INFINITY;
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let n = rng.random_range(2..=20);
        let g = random_gallai(n, 3, &GeneratorParams::new(rng.random())).unwrap();
        let t = random_orientation(g, rng.random());
        let p = s_colored_path(&t, 2).map_err(|e| format!("seed {seed}: {e}"))?;
        let colors = path_colors(&t, p.vertices()).ok_or_else(|| format!("seed {seed}: not a directed path"))?;
        let len = p.len();
        if colors.len() > 2 || big(len).pow(3) < big(n).pow(2) {
            return Err(format!("seed {seed} n={n}: L={len} colors={colors:?}"));
        }
        min_slack = min_slack.min(len as f64 / (n as f64).powf(2.0 / 3.0));
    }
    Ok(format!("100 tournaments, every L^3 >= n^2; min L/n^(2/3) = {min_slack:.3}"))
}

fn criterion_4() -> Verdict {
    let t = digit_construction(2, 3).unwrap();
    let mut got = Vec::new();
    for s in 1..=3 {
        let lib = exact_longest_s_colored_path(&t, s, DEFAULT_PATH_LIMIT).map_err(|e| e.to_string())?;
        let oracle = dfs_longest_s(&t, s);
        if lib != 1 << s || oracle != 1 << s {
            return Err(format!("s={s}: library {lib}, dfs {oracle}, want {}", 1 << s));
        }
        got.push(lib);
    }
    Ok(format!("lengths {got:?} = 2^s"))
}

fn criterion_5() -> Verdict {
    let mut tight = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + seed);
        let n = rng.random_range(1..=14);
        let g = random_simple_graph(n, rng.random_range(0.1..0.9), rng.random());
        let o = Orientation::of_graph(&g, |_, _| rng.random_bool(0.5));
        let chi = chi_oracle(&g);
        let levels = ghrv_levels(&o);
        if g.edges().any(|(u, v)| levels[u] == levels[v]) {
            return Err(format!("seed {seed}: levels not a proper coloring"));
        }
        let p = ghrv_path(&o, chi).map_err(|e| format!("seed {seed}: {e}"))?;
        let vs = p.vertices();
        let distinct = vs.iter().collect::<std::collections::BTreeSet<_>>().len() == vs.len();
        if !distinct || vs.windows(2).any(|w| !o.has_arc(w[0], w[1])) || vs.len() < chi {
            return Err(format!("seed {seed}: path {vs:?} vs chi {chi}"));
        }
        tight += usize::from(vs.len() == chi);
    }
    Ok(format!("200 orientations, path >= chi everywhere ({tight} tight)"))
}

fn criterion_6() -> Verdict {
    for seed in 0..1000 {
        let g = gallai_instance(3000 + seed, 30, 1, 5);
        let p = gallai_partition(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (i, part) in p.parts().iter().enumerate() {
            for &v in part {
                if owner[v] != usize::MAX {
                    return Err(format!("seed {seed}: vertex {v} twice"));
                }
                owner[v] = i;
            }
        }
        if owner.contains(&usize::MAX) || p.t() < 2 {
            return Err(format!("seed {seed}: not a cover with t >= 2"));
        }
        let mut cross = std::collections::HashMap::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (owner[u].min(owner[v]), owner[u].max(owner[v]));
                if a == b {
                    continue;
                }
                let c = g.color(u, v);
                if *cross.entry((a, b)).or_insert(c) != c || !p.q().contains(c) {
                    return Err(format!("seed {seed}: parts {a},{b} not monochromatic in q"));
                }
            }
        }
    }
    for seed in 0..100 {
        let planted = planted_substitution(4000 + seed, 4, 8).map_err(|e| e.to_string())?;
        let g = &planted.graph;
        if find_rainbow_triangle(g).is_some() {
            return Err(format!("planted {seed}: substitution has a rainbow triangle"));
        }
        let p = gallai_partition(g).map_err(|e| format!("planted {seed}: {e}"))?;
        for (i, a) in p.parts().iter().enumerate() {
            let block = planted.block_of[a[0]];
            if a.iter().any(|&v| planted.block_of[v] != block) {
                return Err(format!("planted {seed}: part {i} straddles blocks"));
            }
            for (j, b) in p.parts().iter().enumerate().skip(i + 1) {
                let other = planted.block_of[b[0]];
                if other != block && p.cross_color(i, j) != planted.reduced.color(block, other) {
                    return Err(format!("planted {seed}: cross color of parts {i},{j} differs from planted"));
                }
            }
        }
    }
    Ok("1000 random partitions valid; 100 planted partitions refine blocks with matching cross colors".into())
}

fn criterion_7() -> Verdict {
    let mut triples = 0;
    for seed in 0..100 {
        let g = gallai_instance(5000 + seed, 12, 2, 4);
        let p = gallai_partition(&g).map_err(|e| e.to_string())?;
        if p.q().len() != 2 {
            continue;
        }
        let q: Vec<u8> = p.q().iter().collect();
        for mask in 1u64..1 << g.r() {
            let s = ColorSet::from_bits(mask);
            if s.contains(q[0]) == s.contains(q[1]) {
                continue;
            }
            let c = check_claim(&g, &p, s, DEFAULT_NODE_BUDGET).map_err(|e| format!("seed {seed}: {e}"))?;
            let (q1, q2) = if s.contains(q[0]) { (q[0], q[1]) } else { (q[1], q[0]) };
            let sv: Vec<u8> = s.iter().collect();
            let sw: Vec<u8> = sv.iter().map(|&c| if c == q1 { q2 } else { c }).collect();
            let lhs = chi_oracle(&subgraph(&g, &sv, None)) * chi_oracle(&subgraph(&g, &sw, None));
            let rhs: usize = p
                .parts()
                .iter()
                .map(|part| chi_oracle(&subgraph(&g, &sv, Some(part))) * chi_oracle(&subgraph(&g, &sw, Some(part))))
                .sum();
            if !(c.holds && lhs >= rhs && c.lhs == lhs && c.rhs == rhs) {
                return Err(format!("seed {seed} S={s}: {lhs} vs {rhs} (library {} vs {})", c.lhs, c.rhs));
            }
            triples += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6000);
    let mut worst = f64::INFINITY;
    for k in 0..1000 {
        let f: usize = rng.random_range(1..=6);
        let m = rng.random_range(1..=10);
        let a: Vec<Vec<f64>> = (0..f)
            .map(|_| (0..m).map(|_| if rng.random_bool(0.1) { 0.0 } else { rng.random_range(0.0..1e3) }).collect())
            .collect();
        let h = holder_check(&a).map_err(|e| e.to_string())?;
        let lhs: f64 = a.iter().map(|row| row.iter().sum::<f64>()).product();
        let rhs = (0..m)
            .map(|i| a.iter().map(|row| row[i]).product::<f64>().powf(1.0 / f as f64))
            .sum::<f64>()
            .powi(f as i32);
        let ok = lhs >= rhs - HOLDER_TOL * rhs.max(1.0);
        if !h.holds || !ok {
            return Err(format!("matrix {k}: lhs {lhs} rhs {rhs}"));
        }
        if rhs > 0.0 {
            worst = worst.min(lhs / rhs);
        }
    }
    Ok(format!(
        "{triples} claim triples exact; 1000 Hölder matrices at rel tol {HOLDER_TOL:e}, min lhs/rhs = {worst:.6}"
    ))
}

fn criterion_8() -> Verdict {
    let mut nontrivial = 0;
    for seed in 0..100 {
        let p = planted_modules(7000 + seed).map_err(|e| e.to_string())?;
        let h = blowup_replace(&p.graph, &p.parts, &p.replacements).map_err(|e| format!("seed {seed}: {e}"))?;
        if h.n() > 12 || p.graph.n() > 12 {
            return Err(format!("seed {seed}: {} -> {} vertices", p.graph.n(), h.n()));
        }
        let (before, after) = (chi_oracle(&p.graph), chi_oracle(&h));
        if before != after {
            return Err(format!("seed {seed}: chi {before} -> {after}"));
        }
        nontrivial += usize::from(h != p.graph);
    }
    Ok(format!("100 blow-ups preserve chi exactly ({nontrivial} change the graph)"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Sequences whose values are exactly `0..k` for some `k`: every order pattern with ties.
fn weak_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = n.pow(n as u32);
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(n);
        for _ in 0..n {
            seq.push(code % n);
            code /= n;
        }
        let max = *seq.iter().max().unwrap();
        if (0..=max).all(|v| seq.contains(&v)) {
            out.push(seq);
        }
    }
    out
}

fn es_ok(seq: &[usize], r: usize, s: usize) -> bool {
    let table = pigeonhole_pairs(seq);
    let mut sorted = table.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != table.len() {
        return false;
    }
    let Ok(m) = monotone_subsequence(seq, r, s) else {
        return false;
    };
    let (need, up) = match m.kind {
        Monotone::NonDecreasing => (r + 1, true),
        Monotone::NonIncreasing => (s + 1, false),
    };
    m.indices.len() >= need
        && m.indices.windows(2).all(|w| {
            w[0] < w[1] && if up { seq[w[0]] <= seq[w[1]] } else { seq[w[0]] >= seq[w[1]] }
        })
}

fn criterion_9() -> Verdict {
    let mut strict = 0usize;
    let mut weak = 0usize;
    for r in 1..=3 {
        for s in 1..=3 {
            let len = r * s + 1;
            for p in permutations(len) {
                if !es_ok(&p, r, s) {
                    return Err(format!("r={r} s={s} permutation {p:?}"));
                }
                strict += 1;
            }
            if len <= 7 {
                for w in weak_orders(len) {
                    if !es_ok(&w, r, s) {
                        return Err(format!("r={r} s={s} pattern {w:?}"));
                    }
                    weak += 1;
                }
            }
        }
    }
    Ok(format!("{strict} permutations and {weak} patterns with ties"))
}

fn criterion_10() -> Verdict {
    let mut values = Vec::new();
    for n in 1..=6 {
        let budget = if n <= 5 { 10_000_000 } else { 50_000_000 };
        let res = search(&SearchConfig::new(n, 3, 2, budget)).map_err(|e| format!("n={n}: {e}"))?;
        if !res.exact {
            return Err(format!("n={n}: not exhausted"));
        }
        let lower = (1..=n).find(|&l| l * l >= n).unwrap();
        if res.f_value < lower {
            return Err(format!("n={n}: f={} below ceil(sqrt n) = {lower}", res.f_value));
        }
        let cube = (1..=n).find(|&m| m * m * m == n);
        if let Some(m) = cube {
            if res.f_value > m * m {
                return Err(format!("n={n}: f={} above n^(2/3) = {}", res.f_value, m * m));
            }
        }
        let witness = dfs_longest_s(&res.witness, 2);
        if witness != res.f_value || !res.witness.is_transitive() {
            return Err(format!("n={n}: witness has longest path {witness}, f={}", res.f_value));
        }
        if n <= 4 {
            let mut unpruned = SearchConfig::new(n, 3, 2, budget);
            unpruned.prune = false;
            let full = search(&unpruned).map_err(|e| e.to_string())?;
            if full.f_value != res.f_value {
                return Err(format!("n={n}: pruned {} unpruned {}", res.f_value, full.f_value));
            }
        }
        values.push((n, res.f_value, res.colorings_examined));
    }
    let shown: Vec<String> = values.iter().map(|(n, f, e)| format!("f({n},3,2)={f} [{e}]")).collect();
    Ok(shown.join(" "))
}

fn main() {
    let criteria: [(usize, fn() -> Verdict); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(msg) => println!("criterion {k}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k}: FAIL ({secs:.1}s) {msg}");
            }
        }
    }
    if failed > 0 {
        println!("acceptance: {failed} of 10 criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 10 criteria passed");
}
