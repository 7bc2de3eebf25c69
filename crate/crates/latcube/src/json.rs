//! JSON schemas for the file-based interfaces: posets and lattices as
//! element lists with an order relation, and cellular presentations of
//! cubical sets. Loading validates; unknown fields are ignored so report
//! outputs that extend these schemas can be fed back in.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cset::Presentation;
use crate::cube::{self, End};
use crate::duality::FinitePoset;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// `{"elements": [...], "leq": [[a, b], ...]}`; the relation is closed
/// reflexively and transitively on load, so cover pairs suffice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderJson {
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
}

impl OrderJson {
    fn index_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let index: BTreeMap<&str, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        self.leq
            .iter()
            .map(|(a, b)| {
                let ia = *index
                    .get(a.as_str())
                    .ok_or_else(|| Error::input(format!("leq names unknown element {a:?}")))?;
                let ib = *index
                    .get(b.as_str())
                    .ok_or_else(|| Error::input(format!("leq names unknown element {b:?}")))?;
                Ok((ia, ib))
            })
            .collect()
    }

    pub fn to_lattice(&self) -> Result<FiniteLattice> {
        FiniteLattice::from_leq_pairs(self.elements.clone(), &self.index_pairs()?)
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        FinitePoset::from_leq_pairs(self.elements.clone(), &self.index_pairs()?)
    }

    pub fn from_lattice(lattice: &FiniteLattice) -> Self {
        let mut leq = Vec::new();
        for a in 0..lattice.len() {
            for b in 0..lattice.len() {
                if a != b && lattice.leq(a, b) {
                    leq.push((lattice.name(a).to_string(), lattice.name(b).to_string()));
                }
            }
        }
        OrderJson {
            elements: lattice.names().to_vec(),
            leq,
        }
    }

    pub fn from_poset(poset: &FinitePoset) -> Self {
        let mut leq = Vec::new();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if a != b && poset.leq(a, b) {
                    leq.push((poset.names()[a].clone(), poset.names()[b].clone()));
                }
            }
        }
        OrderJson {
            elements: poset.names().to_vec(),
            leq,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad order JSON: {e}")))
    }
}

/// A face value: a plain cell name or `{"cell": ..., "via": "cube ..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FaceValueJson {
    Name(String),
    Composite { cell: String, via: String },
}

/// `{"cell": target, "via": "cube d -> d0 : [...]"}`: the declared cell is
/// the action of `via` on the target.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegeneracyJson {
    pub of: String,
    pub via: String,
}

/// The cellular presentation format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationJson {
    pub dims: usize,
    /// dimension (as a decimal string key) -> cell names
    pub cells: BTreeMap<String, Vec<String>>,
    /// cell -> face key (`"d<axis>-"` or `"d<axis>+"`) -> face value
    #[serde(default)]
    pub faces: BTreeMap<String, BTreeMap<String, FaceValueJson>>,
    /// explicitly listed degenerate cells
    #[serde(default)]
    pub degeneracies: BTreeMap<String, DegeneracyJson>,
}

fn parse_face_key(key: &str) -> Result<(usize, End)> {
    let rest = key
        .strip_prefix('d')
        .ok_or_else(|| Error::input(format!("face key {key:?} must look like d0- or d1+")))?;
    let (axis_s, end) = if let Some(a) = rest.strip_suffix('-') {
        (a, End::Bot)
    } else if let Some(a) = rest.strip_suffix('+') {
        (a, End::Top)
    } else {
        return Err(Error::input(format!("face key {key:?} must end in - or +")));
    };
    let axis = axis_s
        .parse()
        .map_err(|_| Error::input(format!("bad face axis in {key:?}")))?;
    Ok((axis, end))
}

impl PresentationJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad presentation JSON: {e}")))
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let mut p = Presentation::new(self.dims);
        let mut dims_sorted: Vec<(usize, &Vec<String>)> = self
            .cells
            .iter()
            .map(|(k, v)| {
                let d: usize = k
                    .parse()
                    .map_err(|_| Error::input(format!("bad dimension key {k:?}")))?;
                Ok((d, v))
            })
            .collect::<Result<_>>()?;
        dims_sorted.sort_by_key(|(d, _)| *d);
        for (d, names) in dims_sorted {
            for name in names {
                p = p.cell(name, d);
            }
        }
        for (cell, faces) in &self.faces {
            for (key, value) in faces {
                let (axis, end) = parse_face_key(key)?;
                match value {
                    FaceValueJson::Name(target) => {
                        p = p.face(cell, axis, end, target);
                    }
                    FaceValueJson::Composite { cell: target, via } => {
                        let morphism = cube::parse_morphism(via)?;
                        p = p.face_composite(cell, axis, end, target, morphism);
                    }
                }
            }
        }
        for (cell, degen) in &self.degeneracies {
            let via = cube::parse_morphism(&degen.via)?;
            p = p.alias(cell, &degen.of, via);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_json_roundtrip() {
        let text = r#"{"elements": ["0", "a", "b", "1"],
                       "leq": [["0","a"], ["0","b"], ["a","1"], ["b","1"]]}"#;
        let parsed = OrderJson::parse(text).unwrap();
        let lattice = parsed.to_lattice().unwrap();
        assert_eq!(lattice.len(), 4);
        assert_eq!(lattice.join(1, 2), 3);
        let back = OrderJson::from_lattice(&lattice);
        let again = back.to_lattice().unwrap();
        assert_eq!(lattice, again);
    }

    #[test]
    fn order_json_rejects_unknown_names() {
        let text = r#"{"elements": ["a"], "leq": [["a","b"]]}"#;
        assert!(OrderJson::parse(text).unwrap().to_lattice().is_err());
    }

    #[test]
    fn presentation_json_circle() {
        let text = r#"{"dims": 1,
                       "cells": {"0": ["v"], "1": ["e"]},
                       "faces": {"e": {"d0-": "v", "d0+": "v"}}}"#;
        let p = PresentationJson::parse(text)
            .unwrap()
            .to_presentation()
            .unwrap();
        let set = crate::cset::CubicalSet::from_presentation(&p).unwrap();
        assert_eq!(set.cell_count(0), 1);
        assert_eq!(set.cell_count(1), 2);
    }

    #[test]
    fn presentation_json_with_degeneracy() {
        let text = r#"{"dims": 1,
                       "cells": {"0": ["v"], "1": ["e", "pad"]},
                       "faces": {"e": {"d0-": "v", "d0+": "v"}},
                       "degeneracies": {"pad": {"of": "v", "via": "cube 1 -> 0 : []"}}}"#;
        let p = PresentationJson::parse(text)
            .unwrap()
            .to_presentation()
            .unwrap();
        let set = crate::cset::CubicalSet::from_presentation(&p).unwrap();
        assert_eq!(set.cell_count(1), 2);
        assert_eq!(set.nondegenerate_cells(1).len(), 1);
    }

    #[test]
    fn bad_face_keys_are_input_errors() {
        let text = r#"{"dims": 1, "cells": {"0": ["v"], "1": ["e"]},
                       "faces": {"e": {"left": "v"}}}"#;
        assert!(PresentationJson::parse(text)
            .unwrap()
            .to_presentation()
            .is_err());
    }
}
