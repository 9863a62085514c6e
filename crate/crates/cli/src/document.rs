//! Canonical JSON documents for graphs, frameworks, colourings and flexes.
//!
//! Every number is carried as a decimal string with twelve significant
//! digits so emitted artifacts are byte-identical across platforms. `emit`
//! is canonical: struct fields in fixed order, maps sorted, stable decimals.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use symflex_core::colourings::{Colour, ThreeColouring};
use symflex_core::flexes::{ParametricFlex, SecondChannel};
use symflex_core::frameworks::Framework;
use symflex_core::SymmetricGraph;

/// Fixed-precision decimal rendering: twelve significant digits, sign
/// mirrored exactly so reflected coordinates stay bit-identical.
pub fn format_decimal(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if x < 0.0 {
        return format!("-{}", format_decimal(-x));
    }
    let exp = x.log10().floor() as i32;
    let prec = (11 - exp).max(0) as usize;
    format!("{x:.prec$}")
}

pub fn parse_decimal(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|e| anyhow!("bad decimal {s:?}: {e}"))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub sigma: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realisation: Option<BTreeMap<String, (String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colourings: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

impl GraphDocument {
    /// Schema validation with JSON-pointer style paths, then graph-level
    /// validation.
    pub fn validate(&self) -> Result<SymmetricGraph> {
        let vertex_set: std::collections::BTreeSet<&str> =
            self.vertices.iter().map(|s| s.as_str()).collect();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.contains('-') || v.contains(':') {
                bail!("/vertices/{i}: vertex id {v:?} may not contain '-' or ':'");
            }
        }
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if !vertex_set.contains(a.as_str()) {
                bail!("/edges/{i}: unknown vertex {a:?}");
            }
            if !vertex_set.contains(b.as_str()) {
                bail!("/edges/{i}: unknown vertex {b:?}");
            }
        }
        for (k, v) in &self.sigma {
            if !vertex_set.contains(k.as_str()) {
                bail!("/sigma/{k}: unknown vertex {k:?}");
            }
            if !vertex_set.contains(v.as_str()) {
                bail!("/sigma/{k}: unknown image {v:?}");
            }
        }
        if let Some(real) = &self.realisation {
            for (k, (x, y)) in real {
                if !vertex_set.contains(k.as_str()) {
                    bail!("/realisation/{k}: unknown vertex {k:?}");
                }
                parse_decimal(x).with_context(|| format!("/realisation/{k}/0"))?;
                parse_decimal(y).with_context(|| format!("/realisation/{k}/1"))?;
            }
        }
        let graph = SymmetricGraph::validate(&self.vertices, &self.edges, &self.sigma)
            .map_err(|e| anyhow!("invalid symmetric graph: {e}"))?;
        if let Some(cols) = &self.colourings {
            for (name, entries) in cols {
                self.colouring(&graph, name)
                    .with_context(|| format!("/colourings/{name}"))?;
                for key in entries.keys() {
                    if key.split('-').count() != 2 {
                        bail!("/colourings/{name}/{key}: edge key must be u-v");
                    }
                }
            }
        }
        Ok(graph)
    }

    pub fn colouring(&self, g: &SymmetricGraph, name: &str) -> Result<ThreeColouring> {
        let cols = self
            .colourings
            .as_ref()
            .ok_or_else(|| anyhow!("document has no colourings"))?;
        let entries = cols
            .get(name)
            .ok_or_else(|| anyhow!("no colouring named {name:?}"))?;
        let mut out = vec![None; g.edge_count()];
        for (key, value) in entries {
            let (a, b) = key
                .split_once('-')
                .ok_or_else(|| anyhow!("/{key}: edge key must be u-v"))?;
            let (ia, ib) = (
                g.vertex_ix(a).ok_or_else(|| anyhow!("/{key}: unknown vertex {a:?}"))?,
                g.vertex_ix(b).ok_or_else(|| anyhow!("/{key}: unknown vertex {b:?}"))?,
            );
            let e = g
                .edge_between(ia, ib)
                .ok_or_else(|| anyhow!("/{key}: not an edge"))?;
            let colour =
                Colour::parse(value).ok_or_else(|| anyhow!("/{key}: unknown colour {value:?}"))?;
            if out[e].replace(colour).is_some() {
                bail!("/{key}: edge coloured twice");
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(e, c)| c.ok_or_else(|| anyhow!("edge {} not coloured", g.edge_key(e))))
            .collect::<Result<Vec<_>>>()
            .map(ThreeColouring)
    }

    pub fn framework(&self, g: &SymmetricGraph) -> Result<Framework> {
        let real = self
            .realisation
            .as_ref()
            .ok_or_else(|| anyhow!("document has no realisation"))?;
        let mut coords = Vec::new();
        for u in 0..g.vertex_count() as u32 {
            let name = g.vertex_name(u);
            let (x, y) = real
                .get(name)
                .ok_or_else(|| anyhow!("/realisation: missing vertex {name:?}"))?;
            coords.push([parse_decimal(x)?, parse_decimal(y)?]);
        }
        Framework::new(g.clone(), coords).map_err(|e| anyhow!("bad realisation: {e}"))
    }

    /// Canonical document for a graph: vertices and edges sorted, sigma total.
    pub fn from_graph(g: &SymmetricGraph, name: Option<&str>, description: Option<&str>) -> Self {
        GraphDocument {
            name: name.map(str::to_owned),
            description: description.map(str::to_owned),
            vertices: g.vertex_names().to_vec(),
            edges: (0..g.edge_count()).map(|e| g.edge_name(e)).collect(),
            sigma: g.sigma_map(),
            realisation: None,
            colourings: None,
        }
    }

    pub fn with_framework(mut self, fw: &Framework) -> Self {
        let g = fw.graph();
        let mut real = BTreeMap::new();
        for u in 0..g.vertex_count() as u32 {
            let p = fw.position(u);
            real.insert(
                g.vertex_name(u).to_owned(),
                (format_decimal(p[0]), format_decimal(p[1])),
            );
        }
        self.realisation = Some(real);
        self
    }

    pub fn with_colouring(mut self, g: &SymmetricGraph, name: &str, delta: &ThreeColouring) -> Self {
        let mut entries = BTreeMap::new();
        for e in 0..g.edge_count() {
            entries.insert(g.edge_key(e), delta.get(e).name().to_owned());
        }
        self.colourings
            .get_or_insert_with(BTreeMap::new)
            .insert(name.to_owned(), entries);
        self
    }

    pub fn emit(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<GraphDocument> {
        serde_json::from_str(text).map_err(|e| anyhow!("schema violation: {e}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SecondChannelDocument {
    pub b: BTreeMap<String, (String, String)>,
    pub b_mirror: BTreeMap<String, (String, String)>,
    pub alpha: String,
    pub beta: String,
    pub branch: String,
    pub s_table: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlexBody {
    pub a: BTreeMap<String, (String, String)>,
    pub a_mirror: BTreeMap<String, (String, String)>,
    pub z: BTreeMap<String, (String, String)>,
    pub domain: (String, String),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<SecondChannelDocument>,
}

/// Self-contained motion document: the graph, an optional colouring for
/// rendering, and the flex coefficients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlexDocument {
    pub graph: GraphDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<BTreeMap<String, String>>,
    pub flex: FlexBody,
}

fn point_map(g: &SymmetricGraph, values: &[[f64; 2]]) -> BTreeMap<String, (String, String)> {
    values
        .iter()
        .enumerate()
        .map(|(u, p)| {
            (
                g.vertex_name(u as u32).to_owned(),
                (format_decimal(p[0]), format_decimal(p[1])),
            )
        })
        .collect()
}

fn read_point_map(
    g: &SymmetricGraph,
    map: &BTreeMap<String, (String, String)>,
) -> Result<Vec<[f64; 2]>> {
    let mut out = vec![[0.0; 2]; g.vertex_count()];
    for u in 0..g.vertex_count() as u32 {
        let name = g.vertex_name(u);
        let (x, y) = map
            .get(name)
            .ok_or_else(|| anyhow!("flex map missing vertex {name:?}"))?;
        out[u as usize] = [parse_decimal(x)?, parse_decimal(y)?];
    }
    Ok(out)
}

impl FlexDocument {
    pub fn build(
        g: &SymmetricGraph,
        flex: &ParametricFlex,
        colouring: Option<&ThreeColouring>,
        name: Option<&str>,
    ) -> FlexDocument {
        let colour_map = colouring.map(|delta| {
            (0..g.edge_count())
                .map(|e| (g.edge_key(e), delta.get(e).name().to_owned()))
                .collect()
        });
        FlexDocument {
            graph: GraphDocument::from_graph(g, name, None),
            colouring: colour_map,
            flex: FlexBody {
                a: point_map(g, &flex.a),
                a_mirror: point_map(g, &flex.a_mirror),
                z: point_map(g, &flex.z),
                domain: (format_decimal(flex.domain.0), format_decimal(flex.domain.1)),
                second: flex.second.as_ref().map(|ch| SecondChannelDocument {
                    b: point_map(g, &ch.b),
                    b_mirror: point_map(g, &ch.b_mirror),
                    alpha: format_decimal(ch.alpha),
                    beta: format_decimal(ch.beta),
                    branch: format_decimal(ch.branch),
                    s_table: ch
                        .s_table
                        .iter()
                        .map(|&(t, s)| (format_decimal(t), format_decimal(s)))
                        .collect(),
                }),
            },
        }
    }

    pub fn restore(&self) -> Result<(SymmetricGraph, ParametricFlex, Option<ThreeColouring>)> {
        let g = self.graph.validate()?;
        let a = read_point_map(&g, &self.flex.a)?;
        let a_mirror = read_point_map(&g, &self.flex.a_mirror)?;
        let z = read_point_map(&g, &self.flex.z)?;
        let second = match &self.flex.second {
            None => None,
            Some(ch) => Some(SecondChannel {
                b: read_point_map(&g, &ch.b)?,
                b_mirror: read_point_map(&g, &ch.b_mirror)?,
                alpha: parse_decimal(&ch.alpha)?,
                beta: parse_decimal(&ch.beta)?,
                branch: parse_decimal(&ch.branch)?,
                s_table: ch
                    .s_table
                    .iter()
                    .map(|(t, s)| Ok((parse_decimal(t)?, parse_decimal(s)?)))
                    .collect::<Result<Vec<_>>>()?,
            }),
        };
        let flex = ParametricFlex {
            a,
            a_mirror,
            z,
            second,
            domain: (parse_decimal(&self.flex.domain.0)?, parse_decimal(&self.flex.domain.1)?),
        };
        let colouring = match &self.colouring {
            None => None,
            Some(entries) => {
                let mut out = vec![None; g.edge_count()];
                for (key, value) in entries {
                    let (x, y) = key
                        .split_once('-')
                        .ok_or_else(|| anyhow!("bad edge key {key:?}"))?;
                    let e = g
                        .edge_between(
                            g.vertex_ix(x).ok_or_else(|| anyhow!("unknown vertex {x:?}"))?,
                            g.vertex_ix(y).ok_or_else(|| anyhow!("unknown vertex {y:?}"))?,
                        )
                        .ok_or_else(|| anyhow!("{key:?} is not an edge"))?;
                    out[e] =
                        Some(Colour::parse(value).ok_or_else(|| anyhow!("bad colour {value:?}"))?);
                }
                Some(ThreeColouring(
                    out.into_iter()
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| anyhow!("colouring does not cover every edge"))?,
                ))
            }
        };
        Ok((g, flex, colouring))
    }

    pub fn emit(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("flex document serializes");
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<FlexDocument> {
        serde_json::from_str(text).map_err(|e| anyhow!("schema violation: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_formatting_is_sign_symmetric_and_idempotent() {
        for x in [0.5, 1.0 / 3.0, 1.174615775982385, 123456.789, 1e-7, 2.0] {
            let s = format_decimal(x);
            assert_eq!(format_decimal(-x), format!("-{s}"));
            let back = parse_decimal(&s).unwrap();
            assert_eq!(format_decimal(back), s, "re-format must be stable for {x}");
            assert!(((back - x) / x).abs() < 1e-11);
        }
        assert_eq!(format_decimal(0.0), "0");
        assert_eq!(format_decimal(2.0), "2.00000000000");
    }

    #[test]
    fn minimal_document_round_trip() {
        let doc = GraphDocument {
            name: Some("square".into()),
            description: None,
            vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            edges: vec![
                ("1".into(), "2".into()),
                ("2".into(), "3".into()),
                ("3".into(), "4".into()),
                ("4".into(), "1".into()),
            ],
            sigma: [("1", "3"), ("3", "1"), ("2", "4"), ("4", "2")]
                .iter()
                .map(|&(a, b)| (a.to_owned(), b.to_owned()))
                .collect(),
            realisation: None,
            colourings: None,
        };
        doc.validate().unwrap();
        let text = doc.emit();
        let parsed = GraphDocument::parse(&text).unwrap();
        assert_eq!(parsed.emit(), text);
    }

    #[test]
    fn emit_parse_emit_is_identity_on_every_fixture() {
        let catalog: Vec<(&str, crate::catalog::FixtureArgs)> = vec![
            ("c4_antipodal", plain_args()),
            ("c4_axial", plain_args()),
            ("k3_mirror", plain_args()),
            ("fig2", plain_args()),
            ("fig3", plain_args()),
            ("fig4_left", plain_args()),
            ("fig4_right", plain_args()),
            ("fig6", plain_args()),
            ("gk", with_k(3)),
            ("strip", with_mn(3, 2)),
            ("gadget", plain_args()),
        ];
        for (name, args) in catalog {
            let doc = crate::catalog::build(name, &args).unwrap();
            let emitted = doc.emit();
            let parsed = GraphDocument::parse(&emitted).unwrap();
            parsed.validate().unwrap();
            assert_eq!(parsed.emit(), emitted, "{name} emit-parse-emit must be identity");
        }
    }

    fn plain_args() -> crate::catalog::FixtureArgs {
        crate::catalog::FixtureArgs {
            k: None,
            m: None,
            n: None,
            brace: false,
            seed: 7,
            variant: None,
        }
    }

    fn with_k(k: u32) -> crate::catalog::FixtureArgs {
        crate::catalog::FixtureArgs { k: Some(k), ..plain_args() }
    }

    fn with_mn(m: u32, n: u32) -> crate::catalog::FixtureArgs {
        crate::catalog::FixtureArgs { m: Some(m), n: Some(n), brace: true, ..plain_args() }
    }

    #[test]
    fn dangling_sigma_is_reported_with_path() {
        let mut doc = GraphDocument {
            name: None,
            description: None,
            vertices: vec!["1".into(), "2".into()],
            edges: vec![("1".into(), "2".into())],
            sigma: BTreeMap::new(),
            realisation: None,
            colourings: None,
        };
        doc.sigma.insert("5".into(), "1".into());
        let err = doc.validate().unwrap_err().to_string();
        assert!(err.contains("/sigma/5"), "{err}");
    }
}
