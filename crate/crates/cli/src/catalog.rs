//! Named fixture catalog exposed through the `fixtures` subcommand.

use crate::document::GraphDocument;
use anyhow::{anyhow, bail, Result};
use symflex_core::fixtures;
use symflex_core::frameworks::{strip_framework, SeedSequence, StripSpec};
use symflex_core::graph_core::gk_graph;

pub const FIXTURE_NAMES: &[&str] = &[
    "c4_antipodal",
    "c4_axial",
    "k3_mirror",
    "fig2",
    "fig3",
    "fig4_left",
    "fig4_right",
    "fig6",
    "gk",
    "strip",
    "gadget",
];

pub struct FixtureArgs {
    pub k: Option<u32>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub brace: bool,
    pub seed: u64,
    pub variant: Option<String>,
}

pub fn build(name: &str, args: &FixtureArgs) -> Result<GraphDocument> {
    let doc = match name {
        "c4_antipodal" => GraphDocument::from_graph(
            &fixtures::c4_antipodal(),
            Some("c4_antipodal"),
            Some("four-cycle, mirror swaps both antipodal vertex pairs"),
        ),
        "c4_axial" => GraphDocument::from_graph(
            &fixtures::c4_axial(),
            Some("c4_axial"),
            Some("four-cycle, mirror fixes the edges 1-2 and 3-4 setwise"),
        ),
        "k3_mirror" => GraphDocument::from_graph(
            &fixtures::k3_mirror(),
            Some("k3_mirror"),
            Some("triangle with one fixed apex"),
        ),
        "fig2" => {
            let g = fixtures::fig2();
            let mut doc = GraphDocument::from_graph(
                &g,
                Some("fig2"),
                Some(
                    "eight-vertex mirror graph: central triangle, one invariant edge, \
                     five colouring classes up to conjugation; ships a parallelogram \
                     realisation",
                ),
            )
            .with_framework(&fixtures::fig2_framework());
            for (name, delta) in fixtures::fig2_colourings() {
                doc = doc.with_colouring(&g, &name, &delta);
            }
            doc
        }
        "fig3" => {
            let g = fixtures::fig3();
            let (d1, d2) = fixtures::fig3_colourings();
            GraphDocument::from_graph(
                &g,
                Some("fig3"),
                Some(
                    "eighteen-vertex graph whose two shipped colourings certify each \
                     other; supports the split construction at pivot 3",
                ),
            )
            .with_colouring(&g, "c0", &d1)
            .with_colouring(&g, "c1", &d2)
        }
        "fig4_left" => {
            let g = fixtures::fig4_left();
            GraphDocument::from_graph(
                &g,
                Some("fig4_left"),
                Some(
                    "seven-vertex graph with triangle fans that leave every colouring \
                     with an uncertifiable almost red-blue pentagon",
                ),
            )
            .with_colouring(&g, "c0", &fixtures::fig4_left_colouring())
        }
        "fig4_right" => {
            let g = fixtures::fig4_right();
            GraphDocument::from_graph(
                &g,
                Some("fig4_right"),
                Some("two mirrored copies of the fig4_left body joined along one new edge"),
            )
            .with_colouring(&g, "c0", &fixtures::fig4_right_colouring())
        }
        "fig6" => GraphDocument::from_graph(
            &fixtures::fig6(),
            Some("fig6"),
            Some("like fig4_right with each chord replaced by a two-triangle hinge"),
        ),
        "gk" => {
            let k = args.k.ok_or_else(|| anyhow!("gk requires --k"))?;
            GraphDocument::from_graph(
                &gk_graph(k).map_err(|e| anyhow!("{e}"))?,
                Some(&format!("gk_{k}")),
                Some("fan of invariant five-cycles over a shared base edge"),
            )
        }
        "strip" => {
            let m = args.m.ok_or_else(|| anyhow!("strip requires --m"))?;
            let n = args.n.ok_or_else(|| anyhow!("strip requires --n"))?;
            let mut spec = StripSpec::plain(m, n, args.seed);
            if args.brace {
                // seeded mirror-closed brace pattern
                let mut rng = SeedSequence(args.seed ^ 0xb1ace);
                for i in 0..m.div_ceil(2) {
                    for j in 0..n {
                        if rng.next_unit() < 0.5 {
                            spec.braces.push((i, j));
                        }
                    }
                }
            }
            let fw = strip_framework(&spec);
            GraphDocument::from_graph(
                fw.graph(),
                Some(&format!("strip_{m}x{n}")),
                Some("mirror-symmetric parallelogram patch"),
            )
            .with_framework(&fw)
        }
        "gadget" => match args.variant.as_deref() {
            Some("triangle-chain") | None => GraphDocument::from_graph(
                &fixtures::triangle_chain_gadget(),
                Some("gadget_triangle_chain"),
                Some(
                    "invariant apex over a chain of invariant-edge triangles with a \
                     mirrored pendant pair; its closure adds the two apex edges",
                ),
            ),
            Some(other) => bail!("unknown gadget variant {other:?}"),
        },
        other => bail!("unknown fixture {other:?}; known: {}", FIXTURE_NAMES.join(", ")),
    };
    Ok(doc)
}
