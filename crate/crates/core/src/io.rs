//! Canonical JSON for point sets, closed-set families and reports.
//!
//! Output has sorted keys and canonical rational strings, so emitting a parsed
//! document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::closure::{ConvexGeometry, GroundSet};
use crate::dimension::AnalysisReport;
use crate::geometry::{format_rational, CompositionTree, Point, PointSet};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    label: String,
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum TreeDoc {
    Leaf(Vec<String>),
    Node(Box<TreeDoc>, Box<TreeDoc>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointSetDoc {
    points: Vec<PointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tree: Option<TreeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryDoc {
    closed_sets: Vec<Vec<String>>,
    ground: Vec<String>,
}

/// A parsed input file.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Input {
    Points(PointSet),
    Geometry(ConvexGeometry),
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
fn canonical<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(&serde_json::to_value(value)?)?;
    text.push('\n');
    Ok(text)
}

fn tree_doc(set: &PointSet, tree: &CompositionTree) -> TreeDoc {
    match tree {
        CompositionTree::Leaf(members) => TreeDoc::Leaf(
            members
                .iter()
                .map(|&i| set.points()[i].label.clone())
                .collect(),
        ),
        CompositionTree::Node { left, right, .. } => TreeDoc::Node(
            Box::new(tree_doc(set, left)),
            Box::new(tree_doc(set, right)),
        ),
    }
}

fn tree_from_doc(set: &PointSet, doc: &TreeDoc) -> Result<CompositionTree> {
    Ok(match doc {
        TreeDoc::Leaf(labels) => CompositionTree::leaf(
            labels
                .iter()
                .map(|l| set.index_of(l))
                .collect::<Result<Vec<usize>>>()?,
        ),
        TreeDoc::Node(left, right) => {
            CompositionTree::node(tree_from_doc(set, left)?, tree_from_doc(set, right)?)
        }
    })
}

pub fn point_set_to_json(set: &PointSet) -> Result<String> {
    canonical(&PointSetDoc {
        points: set
            .points()
            .iter()
            .map(|p| PointDoc {
                label: p.label.clone(),
                x: format_rational(&p.x),
                y: format_rational(&p.y),
            })
            .collect(),
        tree: set.tree().map(|t| tree_doc(set, t)),
    })
}

/// Coordinates are strings, `"p/q"` or an integer; the tree is optional.
pub fn parse_point_set(text: &str) -> Result<PointSet> {
    point_set_from_doc(serde_json::from_str(text)?)
}

fn point_set_from_doc(doc: PointSetDoc) -> Result<PointSet> {
    let points = doc
        .points
        .iter()
        .map(|p| Point::parse(&p.label, &p.x, &p.y))
        .collect::<Result<Vec<Point>>>()?;
    let set = PointSet::new(points)?;
    match &doc.tree {
        Some(t) => {
            let tree = tree_from_doc(&set, t)?;
            set.with_tree(tree)
        }
        None => Ok(set),
    }
}

pub fn geometry_to_json(g: &ConvexGeometry) -> Result<String> {
    canonical(&GeometryDoc {
        closed_sets: g
            .family()
            .sets()
            .iter()
            .map(|&s| g.ground().labels_of(s))
            .collect(),
        ground: g.ground().labels().to_vec(),
    })
}

/// Validates alignment and anti-exchange; failures carry a witness.
pub fn parse_geometry(text: &str) -> Result<ConvexGeometry> {
    geometry_from_doc(serde_json::from_str(text)?)
}

fn geometry_from_doc(doc: GeometryDoc) -> Result<ConvexGeometry> {
    let ground = GroundSet::new(doc.ground)?;
    ConvexGeometry::from_labelled_sets(ground, &doc.closed_sets)
}

/// Picks the format by the top-level key: `points` or `closed_sets`.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::InvalidInput("not a JSON object".into()))?;
    if object.contains_key("points") {
        Ok(Input::Points(point_set_from_doc(serde_json::from_value(
            value,
        )?)?))
    } else if object.contains_key("closed_sets") {
        Ok(Input::Geometry(geometry_from_doc(serde_json::from_value(
            value,
        )?)?))
    } else {
        Err(Error::InvalidInput(
            "neither a \"points\" nor a \"closed_sets\" key".into(),
        ))
    }
}

pub fn report_to_json(report: &AnalysisReport) -> Result<String> {
    canonical(report)
}
