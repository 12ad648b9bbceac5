//! Brute-force oracles. Nothing here calls into the solver; they enumerate
//! every assignment of colors to edges.

#![allow(dead_code)]

use interval_edge::coloring::{is_interval, EdgeColoring};
use interval_edge::Multigraph;

/// Calls `visit` with every vector in `1..=k` of length `m` until it returns true.
fn any_assignment(m: usize, k: u32, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    let mut colors = vec![1u32; m];
    loop {
        if visit(&colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Interval colorable iff some assignment of `1..=t` for some `t` in `Δ..=|E|`
/// passes `is_interval`.
pub fn naive_interval_colorable(g: &Multigraph) -> bool {
    naive_interval_witness(g).is_some()
}

pub fn naive_interval_witness(g: &Multigraph) -> Option<EdgeColoring> {
    let m = g.edge_count();
    (g.max_degree()..=m).find_map(|t| naive_interval_t(g, t as u32))
}

pub fn naive_interval_t(g: &Multigraph, t: u32) -> Option<EdgeColoring> {
    let mut found = None;
    any_assignment(g.edge_count(), t, |colors| {
        let c = EdgeColoring::new(t, colors.to_vec()).unwrap();
        if is_interval(g, &c).unwrap() {
            found = Some(c);
            true
        } else {
            false
        }
    });
    found
}

/// Smallest `k` admitting a proper coloring, by enumerating all of `k^m`.
pub fn naive_chromatic_index(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    (1..)
        .find(|&k| {
            any_assignment(g.edge_count(), k as u32, |colors| {
                let mut seen = vec![0u64; n];
                g.edges().iter().zip(colors).all(|(&(u, v), &c)| {
                    let bit = 1u64 << c;
                    let clash = (seen[u] | seen[v]) & bit != 0;
                    seen[u] |= bit;
                    seen[v] |= bit;
                    !clash
                })
            })
        })
        .unwrap()
}
