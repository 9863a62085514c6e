//! Built-in fixture graphs, colourings and frameworks used by tests and the
//! command-line catalog.

use crate::colourings::{colouring_from_names, Colour, ThreeColouring, TwoColour, TwoColouring};
use crate::frameworks::Framework;
use crate::graph_core::{Graph, SymmetricGraph};

/// Four-cycle whose reflection swaps both antipodal vertex pairs.
pub fn c4_antipodal() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["1", "2", "3", "4"],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
        &[("1", "3"), ("2", "4")],
    )
    .unwrap()
}

/// Four-cycle whose reflection swaps the two horizontal edges' endpoints,
/// leaving the edges 1-2 and 3-4 invariant.
pub fn c4_axial() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["1", "2", "3", "4"],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
        &[("1", "2"), ("3", "4")],
    )
    .unwrap()
}

/// Triangle with one fixed apex.
pub fn k3_mirror() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["1", "2", "3"],
        &[("1", "2"), ("2", "3"), ("3", "1")],
        &[("2", "3")],
    )
    .unwrap()
}

/// Eight-vertex mirror-symmetric graph with a central triangle, one invariant
/// edge and eleven edges in total. Carries exactly five colouring classes up
/// to conjugation.
pub fn fig2() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[
            ("1", "2"),
            ("1", "3"),
            ("1", "4"),
            ("2", "3"),
            ("2", "8"),
            ("3", "5"),
            ("3", "7"),
            ("4", "5"),
            ("5", "6"),
            ("6", "7"),
            ("7", "8"),
        ],
        &[("1", "2"), ("4", "8"), ("5", "7")],
    )
    .unwrap()
}

/// The five colouring classes of [`fig2`], one representative each.
pub fn fig2_colourings() -> Vec<(String, ThreeColouring)> {
    let g = fig2();
    let mk = |entries: &[(&str, &str, Colour)]| colouring_from_names(&g, entries).unwrap();
    use Colour::{Blue as B, Gold as G, Red as R};
    vec![
        (
            "c1".to_owned(),
            mk(&[
                ("1", "2", G),
                ("1", "3", G),
                ("2", "3", G),
                ("4", "5", G),
                ("7", "8", G),
                ("1", "4", B),
                ("3", "5", B),
                ("5", "6", B),
                ("2", "8", R),
                ("3", "7", R),
                ("6", "7", R),
            ]),
        ),
        (
            "c2".to_owned(),
            mk(&[
                ("1", "2", G),
                ("1", "3", G),
                ("2", "3", G),
                ("4", "5", G),
                ("7", "8", G),
                ("1", "4", B),
                ("3", "5", B),
                ("6", "7", B),
                ("2", "8", R),
                ("3", "7", R),
                ("5", "6", R),
            ]),
        ),
        (
            "c3".to_owned(),
            mk(&[
                ("1", "2", G),
                ("1", "3", G),
                ("2", "3", G),
                ("3", "5", G),
                ("3", "7", G),
                ("5", "6", G),
                ("6", "7", G),
                ("1", "4", B),
                ("4", "5", B),
                ("2", "8", R),
                ("7", "8", R),
            ]),
        ),
        (
            "c4".to_owned(),
            mk(&[
                ("1", "2", G),
                ("1", "3", G),
                ("1", "4", G),
                ("2", "3", G),
                ("2", "8", G),
                ("3", "5", B),
                ("4", "5", B),
                ("5", "6", B),
                ("3", "7", R),
                ("6", "7", R),
                ("7", "8", R),
            ]),
        ),
        (
            "c5".to_owned(),
            mk(&[
                ("1", "2", G),
                ("1", "3", G),
                ("1", "4", G),
                ("2", "3", G),
                ("2", "8", G),
                ("3", "5", B),
                ("4", "5", B),
                ("6", "7", B),
                ("3", "7", R),
                ("5", "6", R),
                ("7", "8", R),
            ]),
        ),
    ]
}

/// Mirror-symmetric realisation of [`fig2`] built out of parallelograms; the
/// three slanted points come from a 70-degree unit direction scaled by 1.25.
pub fn fig2_framework() -> Framework {
    let g = fig2();
    let (sy, cy) = 70f64.to_radians().sin_cos();
    let (ax, ay) = (1.25 * cy, 1.25 * sy);
    let coords = [
        ("1", [-0.5, 0.0]),
        ("2", [0.5, 0.0]),
        ("3", [0.0, 0.75]),
        ("4", [-ax - 0.5, ay]),
        ("5", [-ax, ay + 0.75]),
        ("6", [0.0, 2.0 * ay + 0.75]),
        ("7", [ax, ay + 0.75]),
        ("8", [ax + 0.5, ay]),
    ];
    Framework::from_named(g, &coords).unwrap()
}

/// Eighteen-vertex graph made of a mirrored pentagon core with outer
/// triangles and pendant triangles below; it has two invariant vertices and
/// one invariant edge, and admits colourings only with almost red-blue
/// cycles.
pub fn fig3() -> SymmetricGraph {
    let vertices = [
        "1", "2", "3", "4", "5", "6", "7", "8", "1a", "2a", "4a", "5a", "6a", "7a", "5b", "8b",
        "1c", "8c",
    ];
    let edges = [
        // pendant triangles around the bottom
        ("1", "5"),
        ("5", "8"),
        ("1", "8"),
        ("1a", "5b"),
        ("5b", "8b"),
        ("1a", "8b"),
        ("1c", "5a"),
        ("5a", "8c"),
        ("1c", "8c"),
        // pentagon top and wings
        ("3", "4"),
        ("3", "4a"),
        ("1", "2"),
        ("1", "6"),
        ("2", "6"),
        ("1a", "2a"),
        ("1a", "6a"),
        ("2a", "6a"),
        ("4", "4a"),
        ("5", "5a"),
        ("7", "7a"),
        ("8", "8c"),
        ("1", "1c"),
        ("2", "3"),
        ("2a", "3"),
        ("4", "5"),
        ("5", "7"),
        ("4", "7"),
        ("1", "1a"),
        ("2", "2a"),
        ("6", "6a"),
        ("4a", "5a"),
        ("5a", "7a"),
        ("4a", "7a"),
        ("8", "8b"),
        ("5", "5b"),
    ];
    let sigma = [
        ("1", "5"),
        ("2", "4"),
        ("6", "7"),
        ("1a", "5a"),
        ("2a", "4a"),
        ("6a", "7a"),
        ("8b", "8c"),
        ("5b", "1c"),
    ];
    SymmetricGraph::from_pairs(&vertices, &edges, &sigma).unwrap()
}

/// The two transcribed colourings of [`fig3`]; they certify each other.
pub fn fig3_colourings() -> (ThreeColouring, ThreeColouring) {
    let g = fig3();
    use Colour::{Blue as B, Gold as G, Red as R};
    let gold = [
        ("1", "5", G),
        ("5", "8", G),
        ("1", "8", G),
        ("1a", "5b", G),
        ("5b", "8b", G),
        ("1a", "8b", G),
        ("1c", "5a", G),
        ("5a", "8c", G),
        ("1c", "8c", G),
    ];
    let mut d1 = gold.to_vec();
    d1.extend([
        ("3", "4", B),
        ("3", "4a", B),
        ("1", "2", B),
        ("1", "6", B),
        ("2", "6", B),
        ("1a", "2a", B),
        ("1a", "6a", B),
        ("2a", "6a", B),
        ("4", "4a", B),
        ("5", "5a", B),
        ("7", "7a", B),
        ("8", "8c", B),
        ("1", "1c", B),
        ("2", "3", R),
        ("2a", "3", R),
        ("4", "5", R),
        ("5", "7", R),
        ("4", "7", R),
        ("1", "1a", R),
        ("2", "2a", R),
        ("6", "6a", R),
        ("4a", "5a", R),
        ("5a", "7a", R),
        ("4a", "7a", R),
        ("8", "8b", R),
        ("5", "5b", R),
    ]);
    let mut d2 = gold.to_vec();
    d2.extend([
        ("1", "2", B),
        ("1", "6", B),
        ("2", "6", B),
        ("1a", "2a", B),
        ("1a", "6a", B),
        ("2a", "6a", B),
        ("2", "3", B),
        ("2a", "3", B),
        ("2", "2a", B),
        ("1", "1a", B),
        ("8", "8b", B),
        ("5", "5b", B),
        ("6", "6a", B),
        ("4", "5", R),
        ("5", "7", R),
        ("4", "7", R),
        ("4a", "5a", R),
        ("5a", "7a", R),
        ("4a", "7a", R),
        ("4", "4a", R),
        ("3", "4", R),
        ("3", "4a", R),
        ("8", "8c", R),
        ("5", "5a", R),
        ("7", "7a", R),
        ("1", "1c", R),
    ]);
    (
        colouring_from_names(&g, &d1).unwrap(),
        colouring_from_names(&g, &d2).unwrap(),
    )
}

/// Seven-vertex graph: a pentagon with an invariant chord and two inner
/// vertices, each triangulating one half. Its two triangle fans force every
/// colouring to keep an uncertifiable almost red-blue pentagon.
pub fn fig4_left() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["1", "2", "3", "4", "5", "6", "7"],
        &[
            ("1", "5"),
            ("2", "3"),
            ("1", "2"),
            ("1", "6"),
            ("2", "6"),
            ("3", "6"),
            ("3", "4"),
            ("4", "5"),
            ("4", "7"),
            ("5", "7"),
            ("3", "7"),
        ],
        &[("1", "5"), ("2", "4"), ("6", "7")],
    )
    .unwrap()
}

pub fn fig4_left_colouring() -> ThreeColouring {
    let g = fig4_left();
    use Colour::{Blue as B, Gold as G, Red as R};
    colouring_from_names(
        &g,
        &[
            ("1", "5", G),
            ("2", "3", B),
            ("1", "2", B),
            ("1", "6", B),
            ("2", "6", B),
            ("3", "6", B),
            ("3", "4", R),
            ("4", "5", R),
            ("4", "7", R),
            ("5", "7", R),
            ("3", "7", R),
        ],
    )
    .unwrap()
}

/// Two copies of the [`fig4_left`] body joined by a single new edge between
/// their former chord endpoints; the reflection swaps the copies.
pub fn fig4_right() -> SymmetricGraph {
    let vertices = [
        "a", "b", "a1", "a2", "a3", "a4", "a6", "a7", "b2", "b3", "b4", "b5", "b6", "b7",
    ];
    let edges = [
        ("a", "b"),
        // first copy, its chord endpoint renamed to b
        ("a1", "b"),
        ("a2", "a3"),
        ("a1", "a2"),
        ("a1", "a6"),
        ("a2", "a6"),
        ("a3", "a6"),
        ("a3", "a4"),
        ("a4", "b"),
        ("a4", "a7"),
        ("b", "a7"),
        ("a3", "a7"),
        // second copy, its chord endpoint renamed to a
        ("a", "b5"),
        ("b2", "b3"),
        ("a", "b2"),
        ("a", "b6"),
        ("b2", "b6"),
        ("b3", "b6"),
        ("b3", "b4"),
        ("b4", "b5"),
        ("b4", "b7"),
        ("b5", "b7"),
        ("b3", "b7"),
    ];
    let sigma = [
        ("a", "b"),
        ("a1", "b5"),
        ("a2", "b4"),
        ("a3", "b3"),
        ("a4", "b2"),
        ("a6", "b7"),
        ("a7", "b6"),
    ];
    SymmetricGraph::from_pairs(&vertices, &edges, &sigma).unwrap()
}

/// The drawn colouring of [`fig4_right`]: valid but with an uncertifiable
/// almost red-blue pentagon in each copy.
pub fn fig4_right_colouring() -> ThreeColouring {
    let g = fig4_right();
    use Colour::{Blue as B, Gold as G, Red as R};
    colouring_from_names(
        &g,
        &[
            ("a", "b", G),
            ("a1", "b", G),
            ("a", "b5", G),
            ("a2", "a3", B),
            ("a1", "a2", B),
            ("a1", "a6", B),
            ("a2", "a6", B),
            ("a3", "a6", B),
            ("a3", "a4", R),
            ("a4", "b", R),
            ("a4", "a7", R),
            ("b", "a7", R),
            ("a3", "a7", R),
            ("b2", "b3", B),
            ("a", "b2", B),
            ("a", "b6", B),
            ("b2", "b6", B),
            ("b3", "b6", B),
            ("b3", "b4", R),
            ("b4", "b5", R),
            ("b4", "b7", R),
            ("b5", "b7", R),
            ("b3", "b7", R),
        ],
    )
    .unwrap()
}

/// Like [`fig4_right`] but each copy's chord is replaced by a two-triangle
/// hinge (a four-clique minus the chord), so each copy carries a five-edge
/// hinge block.
pub fn fig6() -> SymmetricGraph {
    let vertices = [
        "a", "b", "a1", "a2", "a3", "a4", "a6", "a7", "a8", "a9", "b2", "b3", "b4", "b5", "b6",
        "b7", "b8", "b9",
    ];
    let edges = [
        ("a", "b"),
        // first copy hinge
        ("a1", "a8"),
        ("a1", "a9"),
        ("b", "a8"),
        ("b", "a9"),
        ("a8", "a9"),
        // first copy fans
        ("a2", "a3"),
        ("a1", "a2"),
        ("a1", "a6"),
        ("a2", "a6"),
        ("a3", "a6"),
        ("a3", "a4"),
        ("a4", "b"),
        ("a4", "a7"),
        ("b", "a7"),
        ("a3", "a7"),
        // second copy hinge
        ("a", "b8"),
        ("a", "b9"),
        ("b5", "b8"),
        ("b5", "b9"),
        ("b8", "b9"),
        // second copy fans
        ("b2", "b3"),
        ("a", "b2"),
        ("a", "b6"),
        ("b2", "b6"),
        ("b3", "b6"),
        ("b3", "b4"),
        ("b4", "b5"),
        ("b4", "b7"),
        ("b5", "b7"),
        ("b3", "b7"),
    ];
    let sigma = [
        ("a", "b"),
        ("a1", "b5"),
        ("a2", "b4"),
        ("a3", "b3"),
        ("a4", "b2"),
        ("a6", "b7"),
        ("a7", "b6"),
        ("a8", "b8"),
        ("a9", "b9"),
    ];
    SymmetricGraph::from_pairs(&vertices, &edges, &sigma).unwrap()
}

/// Minimal invariant five-cycle fixture with two certifying colourings.
pub fn fig9_bare() -> (SymmetricGraph, ThreeColouring, ThreeColouring) {
    let g = SymmetricGraph::from_pairs(
        &["u", "x", "w", "sx", "su"],
        &[("u", "su"), ("u", "x"), ("x", "w"), ("w", "sx"), ("sx", "su")],
        &[("u", "su"), ("x", "sx")],
    )
    .unwrap();
    use Colour::{Blue as B, Gold as G, Red as R};
    let d1 = colouring_from_names(
        &g,
        &[("u", "su", G), ("u", "x", B), ("x", "w", B), ("w", "sx", R), ("sx", "su", R)],
    )
    .unwrap();
    let d2 = colouring_from_names(
        &g,
        &[("u", "su", G), ("u", "x", B), ("x", "w", R), ("w", "sx", B), ("sx", "su", R)],
    )
    .unwrap();
    (g, d1, d2)
}

/// Twenty-one-vertex fixture whose two colourings certify each other but fail
/// the five-values condition on a cycle through the pivot, so the split
/// construction degenerates.
pub fn fig10() -> (SymmetricGraph, ThreeColouring, ThreeColouring) {
    let vertices = [
        "w", "1l", "1r", "2l", "2r", "3l", "3r", "4l", "4r", "5l", "5r", "6l", "6r", "7l", "7r",
        "8l", "8r", "9l", "9r", "10l", "10r",
    ];
    let edges = [
        ("1l", "1r"),
        ("8r", "9r"),
        ("8l", "9l"),
        ("1l", "2l"),
        ("2r", "w"),
        ("3r", "w"),
        ("3r", "4r"),
        ("6r", "2r"),
        ("3r", "7r"),
        ("7r", "8r"),
        ("3r", "10l"),
        ("9l", "10l"),
        ("4l", "5l"),
        ("5l", "6l"),
        ("1r", "2r"),
        ("2l", "w"),
        ("3l", "w"),
        ("3l", "4l"),
        ("6l", "2l"),
        ("3l", "7l"),
        ("7l", "8l"),
        ("3l", "10r"),
        ("9r", "10r"),
        ("4r", "5r"),
        ("5r", "6r"),
    ];
    let sigma = [
        ("1l", "1r"),
        ("2l", "2r"),
        ("3l", "3r"),
        ("4l", "4r"),
        ("5l", "5r"),
        ("6l", "6r"),
        ("7l", "7r"),
        ("8l", "8r"),
        ("9l", "9r"),
        ("10l", "10r"),
    ];
    let g = SymmetricGraph::from_pairs(&vertices, &edges, &sigma).unwrap();
    use Colour::{Blue as B, Gold as G, Red as R};
    let gold = [("1l", "1r", G), ("8r", "9r", G), ("8l", "9l", G)];
    let mut d1 = gold.to_vec();
    d1.extend([
        ("1l", "2l", R),
        ("2r", "w", R),
        ("3r", "w", R),
        ("3r", "4r", R),
        ("6r", "2r", R),
        ("3r", "7r", R),
        ("7r", "8r", R),
        ("3r", "10l", R),
        ("9l", "10l", R),
        ("4l", "5l", R),
        ("5l", "6l", R),
        ("1r", "2r", B),
        ("2l", "w", B),
        ("3l", "w", B),
        ("3l", "4l", B),
        ("6l", "2l", B),
        ("3l", "7l", B),
        ("7l", "8l", B),
        ("3l", "10r", B),
        ("9r", "10r", B),
        ("4r", "5r", B),
        ("5r", "6r", B),
    ]);
    let mut d2 = gold.to_vec();
    d2.extend([
        ("1r", "2r", R),
        ("2r", "w", R),
        ("3r", "w", R),
        ("3l", "4l", R),
        ("4r", "5r", R),
        ("5r", "6r", R),
        ("6l", "2l", R),
        ("3l", "7l", R),
        ("7r", "8r", R),
        ("3r", "10l", R),
        ("9l", "10l", R),
        ("1l", "2l", B),
        ("2l", "w", B),
        ("3l", "w", B),
        ("3r", "4r", B),
        ("4l", "5l", B),
        ("5l", "6l", B),
        ("6r", "2r", B),
        ("3r", "7r", B),
        ("7l", "8l", B),
        ("3l", "10r", B),
        ("9r", "10r", B),
    ]);
    (
        g.clone(),
        colouring_from_names(&g, &d1).unwrap(),
        colouring_from_names(&g, &d2).unwrap(),
    )
}

/// Plain five-vertex graph (a four-clique minus one edge, plus an apex) with
/// a two-colouring whose red part is the clique block; used to exercise the
/// doubling lift.
pub fn fig5_plain() -> (Graph, TwoColouring, (String, String)) {
    let g = Graph::new(
        &["a", "b", "c", "e", "f"],
        &[("a", "e"), ("a", "f"), ("b", "e"), ("b", "f"), ("e", "f"), ("a", "c"), ("b", "c")],
    )
    .unwrap();
    let red = ["a-e", "a-f", "b-e", "b-f", "e-f"];
    let delta = TwoColouring(
        (0..g.edge_count())
            .map(|e| {
                if red.contains(&g.edge_key(e).as_str()) {
                    TwoColour::Red
                } else {
                    TwoColour::Blue
                }
            })
            .collect(),
    );
    (g, delta, ("a".to_owned(), "f".to_owned()))
}

/// Synthetic closure gadget: an invariant apex over a chain of triangles that
/// all contain invariant edges (hence stay gold), plus a mirrored pendant
/// pair keeping red and blue available.
pub fn triangle_chain_gadget() -> SymmetricGraph {
    SymmetricGraph::from_pairs(
        &["u", "a1", "a2", "b1", "b2", "c1", "c2"],
        &[
            ("u", "a1"),
            ("u", "a2"),
            ("a1", "a2"),
            ("a1", "b1"),
            ("a1", "b2"),
            ("a2", "b1"),
            ("a2", "b2"),
            ("b1", "b2"),
            ("b1", "c1"),
            ("b2", "c2"),
        ],
        &[("a1", "a2"), ("b1", "b2"), ("c1", "c2")],
    )
    .unwrap()
}
