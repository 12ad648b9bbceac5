//! Edge colorings and the checkers for proper, interval, and odd-color
//! statistics.
//!
//! Colors are positive integers `1..=t`. A coloring does not carry its graph;
//! every checker takes both and rejects a coloring whose length differs from
//! the graph's edge count.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::multigraph::{EdgeId, Multigraph, VertexId};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {found} edges but the graph has {expected}")]
    ColoringMismatch { expected: usize, found: usize },
    #[error("edge {edge} has color {color} outside 1..={t}")]
    ColorOutOfRange {
        edge: EdgeId,
        color: Color,
        t: Color,
    },
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
}

/// A total assignment of colors `1..=t` to edge ids `0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    t: Color,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(t: Color, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > t) {
            return Err(ColoringError::ColorOutOfRange { edge, color, t });
        }
        Ok(EdgeColoring { t, colors })
    }

    /// Uses the largest assigned color as `t`.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let t = colors.iter().copied().max().unwrap_or(0);
        Self::new(t, colors)
    }

    pub fn t(&self) -> Color {
        self.t
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e).copied()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Maps every color `c` to `t + 1 - c`.
    pub fn reversed(&self) -> EdgeColoring {
        EdgeColoring {
            t: self.t,
            colors: self.colors.iter().map(|&c| self.t + 1 - c).collect(),
        }
    }

    fn check_domain(&self, g: &Multigraph) -> Result<(), ColoringError> {
        if self.colors.len() == g.edge_count() {
            Ok(())
        } else {
            Err(ColoringError::ColoringMismatch {
                expected: g.edge_count(),
                found: self.colors.len(),
            })
        }
    }
}

/// S(v, α): the set of colors on edges incident to a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Spectrum(BTreeSet<Color>);

impl Spectrum {
    pub fn colors(&self) -> &BTreeSet<Color> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive integers; the empty set counts as contiguous.
    pub fn is_contiguous(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == self.0.len(),
            _ => true,
        }
    }

    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|&&c| c % 2 == 1).count()
    }

    pub fn even_count(&self) -> usize {
        self.0.len() - self.odd_count()
    }
}

impl FromIterator<Color> for Spectrum {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        Spectrum(iter.into_iter().collect())
    }
}

/// No two edges sharing a vertex carry the same color.
pub fn is_proper(g: &Multigraph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    c.check_domain(g)?;
    Ok(proper_unchecked(g, c))
}

fn proper_unchecked(g: &Multigraph, c: &EdgeColoring) -> bool {
    g.incidence().iter().all(|inc| {
        let mut seen = BTreeSet::new();
        inc.iter().all(|&e| seen.insert(c.colors[e]))
    })
}

pub fn spectrum(g: &Multigraph, c: &EdgeColoring, v: VertexId) -> Result<Spectrum, ColoringError> {
    c.check_domain(g)?;
    let inc = g
        .incident_edges(v)
        .map_err(|_| ColoringError::VertexOutOfRange {
            vertex: v,
            vertex_count: g.vertex_count(),
        })?;
    Ok(inc.iter().map(|&e| c.colors[e]).collect())
}

/// Proper, uses every color in `1..=t`, and each nonempty spectrum is an interval.
pub fn is_interval(g: &Multigraph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    c.check_domain(g)?;
    if !proper_unchecked(g, c) {
        return Ok(false);
    }
    let mut used = vec![false; c.t as usize + 1];
    for &col in &c.colors {
        used[col as usize] = true;
    }
    if used[1..].iter().any(|u| !u) {
        return Ok(false);
    }
    // Properness makes the colors at each vertex distinct, so max - min + 1 == degree
    // is exactly contiguity.
    Ok(g.incidence().iter().all(|inc| {
        let mut lo = Color::MAX;
        let mut hi = 0;
        for &e in inc {
            lo = lo.min(c.colors[e]);
            hi = hi.max(c.colors[e]);
        }
        inc.is_empty() || (hi - lo + 1) as usize == inc.len()
    }))
}

/// Number of edges whose color is odd.
pub fn odd_color_edge_count(g: &Multigraph, c: &EdgeColoring) -> Result<usize, ColoringError> {
    c.check_domain(g)?;
    Ok(c.colors.iter().filter(|&&col| col % 2 == 1).count())
}
