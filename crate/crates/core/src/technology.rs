//! Technology-node parameter sets.
//!
//! A node is described by five critical feature sizes in integer nm. The
//! seven built-in nodes (65 nm down to 7 nm) ship as a CSV dataset with the
//! header `name,delta_g_nm,delta_ic_nm,w_si_nm,l_bu_nm,l_hdd_nm`; custom
//! nodes use the same format.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUILTIN_CSV: &str = include_str!("../data/nodes.csv");

/// Column names of the node CSV format, in order.
pub const NODE_CSV_HEADER: [&str; 6] = [
    "name",
    "delta_g_nm",
    "delta_ic_nm",
    "w_si_nm",
    "l_bu_nm",
    "l_hdd_nm",
];

/// Buffers shorter than this let dopant straggling reach the active region.
pub const MIN_BUFFER_NM: u32 = 20;

/// Critical feature sizes of one technology node, all in nm.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TechNode {
    pub name: String,
    /// Contacted gate pitch.
    #[serde(rename = "delta_g_nm")]
    pub delta_g: u32,
    /// Interconnect pitch.
    #[serde(rename = "delta_ic_nm")]
    pub delta_ic: u32,
    /// Width of the silicon wire hosting the dots.
    #[serde(rename = "w_si_nm")]
    pub w_si: u32,
    /// Undoped buffer length.
    #[serde(rename = "l_bu_nm")]
    pub l_bu: u32,
    /// Highly doped drain length.
    #[serde(rename = "l_hdd_nm")]
    pub l_hdd: u32,
}

/// Non-fatal observations about a node's parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeWarning {
    /// Buffer below [`MIN_BUFFER_NM`].
    LateralStraggling { node: String, l_bu: u32 },
    /// `l_hdd` differs from the interconnect pitch.
    DrainDeviates { node: String, l_hdd: u32, delta_ic: u32 },
    /// `l_bu` differs from twice the interconnect pitch.
    BufferDeviates { node: String, l_bu: u32, delta_ic: u32 },
}

impl fmt::Display for NodeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeWarning::LateralStraggling { node, l_bu } => write!(
                f,
                "{node}: buffer length {l_bu} nm is below {MIN_BUFFER_NM} nm (lateral straggling)"
            ),
            NodeWarning::DrainDeviates { node, l_hdd, delta_ic } => write!(
                f,
                "{node}: l_hdd = {l_hdd} nm differs from interconnect pitch {delta_ic} nm"
            ),
            NodeWarning::BufferDeviates { node, l_bu, delta_ic } => write!(
                f,
                "{node}: l_bu = {l_bu} nm differs from twice the interconnect pitch ({} nm)",
                2 * delta_ic
            ),
        }
    }
}

impl TechNode {
    pub fn new(
        name: impl Into<String>,
        delta_g: u32,
        delta_ic: u32,
        w_si: u32,
        l_bu: u32,
        l_hdd: u32,
    ) -> Result<Self> {
        let node = TechNode {
            name: name.into(),
            delta_g,
            delta_ic,
            w_si,
            l_bu,
            l_hdd,
        };
        node.validate()?;
        Ok(node)
    }

    pub fn validate(&self) -> Result<()> {
        if self.name.trim().is_empty() {
            return Err(Error::EmptyNodeName);
        }
        for (field, value) in self.lengths() {
            if value == 0 {
                return Err(Error::NonPositiveLength {
                    field: field.to_string(),
                    value: 0,
                });
            }
        }
        Ok(())
    }

    /// The five lengths paired with their CSV column names.
    pub fn lengths(&self) -> [(&'static str, u32); 5] {
        [
            ("delta_g_nm", self.delta_g),
            ("delta_ic_nm", self.delta_ic),
            ("w_si_nm", self.w_si),
            ("l_bu_nm", self.l_bu),
            ("l_hdd_nm", self.l_hdd),
        ]
    }

    pub fn warnings(&self) -> Vec<NodeWarning> {
        let mut out = Vec::new();
        if self.l_bu < MIN_BUFFER_NM {
            out.push(NodeWarning::LateralStraggling {
                node: self.name.clone(),
                l_bu: self.l_bu,
            });
        }
        if self.l_hdd != self.delta_ic {
            out.push(NodeWarning::DrainDeviates {
                node: self.name.clone(),
                l_hdd: self.l_hdd,
                delta_ic: self.delta_ic,
            });
        }
        if u64::from(self.l_bu) != 2 * u64::from(self.delta_ic) {
            out.push(NodeWarning::BufferDeviates {
                node: self.name.clone(),
                l_bu: self.l_bu,
                delta_ic: self.delta_ic,
            });
        }
        out
    }

    /// Every length multiplied by `factor`. Panics on overflow.
    pub fn scaled(&self, factor: u32) -> TechNode {
        let mul = |v: u32| v.checked_mul(factor).expect("scaled length overflows u32");
        TechNode {
            name: format!("{}x{}", self.name, factor),
            delta_g: mul(self.delta_g),
            delta_ic: mul(self.delta_ic),
            w_si: mul(self.w_si),
            l_bu: mul(self.l_bu),
            l_hdd: mul(self.l_hdd),
        }
    }
}

impl fmt::Display for TechNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn builtin_table() -> &'static [TechNode] {
    static NODES: OnceLock<Vec<TechNode>> = OnceLock::new();
    NODES.get_or_init(|| {
        read_nodes_csv(BUILTIN_CSV.as_bytes())
            .expect("bundled node dataset is valid")
            .into_iter()
            .map(|loaded| loaded.node)
            .collect()
    })
}

/// The seven built-in nodes, ordered from 65 nm down to 7 nm.
pub fn builtin_nodes() -> Vec<TechNode> {
    builtin_table().to_vec()
}

pub fn builtin_node(name: &str) -> Result<TechNode> {
    builtin_table()
        .iter()
        .find(|n| n.name == name)
        .cloned()
        .ok_or_else(|| Error::UnknownNode(name.to_string()))
}

/// A node read from user input together with anything worth flagging.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedNode {
    pub node: TechNode,
    pub warnings: Vec<NodeWarning>,
}

fn parse_length(record: &BTreeMap<String, String>, field: &str) -> Result<u32> {
    let raw = record
        .get(field)
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::MissingField(field.to_string()))?;
    match raw.parse::<i64>() {
        Ok(v) if v <= 0 => Err(Error::NonPositiveLength {
            field: field.to_string(),
            value: v,
        }),
        Ok(v) => u32::try_from(v).map_err(|_| Error::LengthOutOfRange {
            field: field.to_string(),
            value: raw.to_string(),
        }),
        Err(_) => match raw.parse::<f64>() {
            Ok(v) if v <= 0.0 => Err(Error::NonPositiveLength {
                field: field.to_string(),
                value: v.floor() as i64,
            }),
            Ok(v) if v.fract() == 0.0 && v.is_finite() => Err(Error::LengthOutOfRange {
                field: field.to_string(),
                value: raw.to_string(),
            }),
            _ => Err(Error::NonIntegerLength {
                field: field.to_string(),
                value: raw.to_string(),
            }),
        },
    }
}

/// Validates a user-supplied node given as a field map keyed by the CSV
/// column names. The built-in construction rules (`l_hdd = Δ_IC`,
/// `l_bu = 2Δ_IC`) are not enforced; deviations come back as warnings.
pub fn load_custom_node(record: &BTreeMap<String, String>) -> Result<LoadedNode> {
    let name = record
        .get("name")
        .map(|s| s.trim().to_string())
        .ok_or_else(|| Error::MissingField("name".to_string()))?;
    if name.is_empty() {
        return Err(Error::EmptyNodeName);
    }
    let node = TechNode::new(
        name,
        parse_length(record, "delta_g_nm")?,
        parse_length(record, "delta_ic_nm")?,
        parse_length(record, "w_si_nm")?,
        parse_length(record, "l_bu_nm")?,
        parse_length(record, "l_hdd_nm")?,
    )?;
    let warnings = node.warnings();
    Ok(LoadedNode { node, warnings })
}

/// Reads nodes in the CSV format described in the module docs.
pub fn read_nodes_csv<R: Read>(reader: R) -> Result<Vec<LoadedNode>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let record: BTreeMap<String, String> = headers
            .iter()
            .zip(row.iter())
            .map(|(h, v)| (h.to_string(), v.to_string()))
            .collect();
        out.push(load_custom_node(&record)?);
    }
    Ok(out)
}

pub fn write_nodes_csv<W: Write>(nodes: &[TechNode], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    for node in nodes {
        wtr.serialize(node)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Built-in nodes followed by `extra`, rejecting duplicate names.
pub fn merge_nodes(extra: &[TechNode]) -> Result<Vec<TechNode>> {
    let mut all = builtin_nodes();
    for node in extra {
        if all.iter().any(|n| n.name == node.name) {
            return Err(Error::DuplicateNode(node.name.clone()));
        }
        all.push(node.clone());
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn builtin_values() {
        let n65 = builtin_node("65nm").unwrap();
        assert_eq!(
            (n65.delta_g, n65.delta_ic, n65.w_si, n65.l_bu, n65.l_hdd),
            (140, 220, 140, 440, 220)
        );
        let n22 = builtin_node("22nm").unwrap();
        assert_eq!(
            (n22.delta_g, n22.delta_ic, n22.w_si, n22.l_bu, n22.l_hdd),
            (52, 90, 52, 180, 90)
        );
        let n7 = builtin_node("7nm").unwrap();
        assert_eq!(
            (n7.delta_g, n7.delta_ic, n7.w_si, n7.l_bu, n7.l_hdd),
            (26, 50, 26, 100, 50)
        );
    }

    #[test]
    fn builtin_set_and_rules() {
        let nodes = builtin_nodes();
        let names: Vec<_> = nodes.iter().map(|n| n.name.as_str()).collect();
        assert_eq!(names, ["65nm", "45nm", "32nm", "22nm", "14nm", "10nm", "7nm"]);
        for n in &nodes {
            assert_eq!(n.l_hdd, n.delta_ic);
            assert_eq!(n.l_bu, 2 * n.delta_ic);
            assert!(n.warnings().is_empty(), "{n}");
        }
        assert!(nodes.windows(2).all(|w| w[0].delta_g > w[1].delta_g));
    }

    #[test]
    fn builtins_round_trip_through_csv() {
        let nodes = builtin_nodes();
        let mut buf = Vec::new();
        write_nodes_csv(&nodes, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), BUILTIN_CSV);
        let back: Vec<_> = read_nodes_csv(buf.as_slice())
            .unwrap()
            .into_iter()
            .map(|l| l.node)
            .collect();
        assert_eq!(back, nodes);
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(builtin_node("5nm"), Err(Error::UnknownNode(_))));
    }

    #[test]
    fn custom_node_valid() {
        let loaded = load_custom_node(&record(&[
            ("name", "20nm"),
            ("delta_g_nm", "50"),
            ("delta_ic_nm", "88"),
            ("w_si_nm", "50"),
            ("l_bu_nm", "176"),
            ("l_hdd_nm", "88"),
        ]))
        .unwrap();
        assert_eq!(loaded.node.delta_ic, 88);
        assert!(loaded.warnings.is_empty());
    }

    #[test]
    fn custom_node_zero_length() {
        let err = load_custom_node(&record(&[
            ("name", "bad"),
            ("delta_g_nm", "0"),
            ("delta_ic_nm", "88"),
            ("w_si_nm", "50"),
            ("l_bu_nm", "176"),
            ("l_hdd_nm", "88"),
        ]))
        .unwrap_err();
        assert!(matches!(err, Error::NonPositiveLength { ref field, value: 0 } if field == "delta_g_nm"));
    }

    #[test]
    fn custom_node_negative_and_fractional() {
        let base = [
            ("name", "x"),
            ("delta_g_nm", "30"),
            ("delta_ic_nm", "64"),
            ("w_si_nm", "30"),
            ("l_bu_nm", "128"),
            ("l_hdd_nm", "64"),
        ];
        let mut r = record(&base);
        r.insert("w_si_nm".into(), "-4".into());
        assert!(matches!(load_custom_node(&r), Err(Error::NonPositiveLength { .. })));
        let mut r = record(&base);
        r.insert("w_si_nm".into(), "30.5".into());
        assert!(matches!(load_custom_node(&r), Err(Error::NonIntegerLength { .. })));
        let mut r = record(&base);
        r.insert("w_si_nm".into(), "abc".into());
        assert!(matches!(load_custom_node(&r), Err(Error::NonIntegerLength { .. })));
        let mut r = record(&base);
        r.remove("l_hdd_nm");
        assert!(matches!(load_custom_node(&r), Err(Error::MissingField(ref f)) if f == "l_hdd_nm"));
        let mut r = record(&base);
        r.remove("name");
        assert!(matches!(load_custom_node(&r), Err(Error::MissingField(ref f)) if f == "name"));
    }

    #[test]
    fn short_buffer_is_a_warning() {
        let loaded = load_custom_node(&record(&[
            ("name", "x"),
            ("delta_g_nm", "30"),
            ("delta_ic_nm", "64"),
            ("w_si_nm", "30"),
            ("l_bu_nm", "10"),
            ("l_hdd_nm", "64"),
        ]))
        .unwrap();
        assert!(loaded
            .warnings
            .contains(&NodeWarning::LateralStraggling { node: "x".into(), l_bu: 10 }));
        assert!(loaded
            .warnings
            .iter()
            .any(|w| matches!(w, NodeWarning::BufferDeviates { .. })));
    }

    #[test]
    fn merge_rejects_duplicates() {
        let extra = TechNode::new("20nm", 50, 88, 50, 176, 88).unwrap();
        assert_eq!(merge_nodes(std::slice::from_ref(&extra)).unwrap().len(), 8);
        let dup = TechNode { name: "7nm".into(), ..extra };
        assert!(matches!(merge_nodes(&[dup]), Err(Error::DuplicateNode(_))));
    }
}
