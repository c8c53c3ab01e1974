//! The connected graphs on 2 to 5 vertices with their matching
//! polynomials, under their conventional row labels ("2.1" ... "5.21").
//!
//! Rows whose polynomial is shared by two graphs are pinned by structure:
//! 5.10 is the triangle-with-two-joins graph `L(1,2)`, 5.11 the bowtie
//! `S(2,4)`, 5.13 is `K_{2,3}`, 5.16 is `S(2,3)` and 5.17 is `C_4` with a
//! pendant vertex. Nothing distinguishes 5.5 from 5.6 except the drawings;
//! they are assigned `K_4` plus a pendant and `K_{1,1,3}` respectively and
//! marked unpinned.

use crate::graph::Graph;

#[derive(Clone, Copy, Debug)]
pub struct AppendixRow {
    pub label: &'static str,
    pub polynomial: &'static str,
    pub order: usize,
    pub edges: &'static [(usize, usize)],
    /// False when the row's graph could be swapped with its polynomial twin.
    pub pinned: bool,
}

impl AppendixRow {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.order, self.edges.iter().copied()).expect("appendix edge lists are valid")
    }
}

const fn row(
    label: &'static str,
    polynomial: &'static str,
    order: usize,
    edges: &'static [(usize, usize)],
) -> AppendixRow {
    AppendixRow { label, polynomial, order, edges, pinned: true }
}

pub const APPENDIX: [AppendixRow; 30] = [
    row("2.1", "x^2-1", 2, &[(0, 1)]),
    row("3.1", "x^3-3x", 3, &[(0, 1), (0, 2), (1, 2)]),
    row("3.2", "x^3-2x", 3, &[(0, 1), (0, 2)]),
    row("4.1", "x^4-6x^2+3", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    row("4.2", "x^4-5x^2+2", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    row("4.3", "x^4-4x^2+1", 4, &[(0, 3), (1, 2), (1, 3), (2, 3)]),
    row("4.4", "x^4-4x^2+2", 4, &[(0, 1), (0, 3), (1, 2), (2, 3)]),
    row("4.5", "x^4-3x^2", 4, &[(0, 3), (1, 3), (2, 3)]),
    row("4.6", "x^4-3x^2+1", 4, &[(0, 1), (0, 3), (1, 2)]),
    row(
        "5.1",
        "x^5-10x^3+15x",
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ),
    row("5.2", "x^5-9x^3+12x", 5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    row("5.3", "x^5-8x^3+9x", 5, &[(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    row("5.4", "x^5-8x^3+10x", 5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]),
    AppendixRow {
        label: "5.5",
        polynomial: "x^5-7x^3+6x",
        order: 5,
        edges: &[(0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        pinned: false,
    },
    AppendixRow {
        label: "5.6",
        polynomial: "x^5-7x^3+6x",
        order: 5,
        edges: &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        pinned: false,
    },
    row("5.7", "x^5-7x^3+7x", 5, &[(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]),
    row("5.8", "x^5-7x^3+8x", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
    row("5.9", "x^5-6x^3+4x", 5, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    row("5.10", "x^5-6x^3+5x", 5, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    row("5.11", "x^5-6x^3+5x", 5, &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]),
    row("5.12", "x^5-6x^3+6x", 5, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
    row("5.13", "x^5-6x^3+6x", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    row("5.14", "x^5-5x^3+2x", 5, &[(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]),
    row("5.15", "x^5-5x^3+3x", 5, &[(0, 1), (0, 2), (0, 4), (1, 2), (2, 3)]),
    row("5.16", "x^5-5x^3+4x", 5, &[(0, 4), (1, 2), (1, 3), (2, 3), (3, 4)]),
    row("5.17", "x^5-5x^3+4x", 5, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)]),
    row("5.18", "x^5-5x^3+5x", 5, &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]),
    row("5.19", "x^5-4x^3", 5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),
    row("5.20", "x^5-4x^3+2x", 5, &[(0, 4), (1, 3), (2, 3), (3, 4)]),
    row("5.21", "x^5-4x^3+3x", 5, &[(0, 1), (0, 4), (1, 2), (2, 3)]),
];

pub fn appendix_row(label: &str) -> Option<&'static AppendixRow> {
    APPENDIX.iter().find(|r| r.label == label)
}

/// The label of the row isomorphic to `g`, if `g` is connected of order 2 to 5.
pub fn appendix_label(g: &Graph) -> Option<&'static str> {
    if !(2..=5).contains(&g.order()) {
        return None;
    }
    APPENDIX.iter().find(|r| r.order == g.order() && r.graph().is_isomorphic(g)).map(|r| r.label)
}
