//! File formats.
//!
//! Lattices are `{"name", "elements", "leq", "tensor"?}`, where `leq` may be
//! any generating relation (covers are written back out). Spaces are
//! `{"points", "opens"}`. Sets are always name arrays in declaration order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::order::BoundedLattice;
use crate::support::{Flavor, SupportDatum};
use crate::tensor::{build_tensor_lattice, TensorLattice};
use crate::topology::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub leq: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorSection {
    pub unit: String,
    /// `table[i][j]` names the product of elements `i` and `j`.
    pub table: Vec<Vec<String>>,
}

/// Parses JSON, reporting line and column on failure.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

impl LatticeFile {
    pub fn lattice(&self) -> Result<BoundedLattice> {
        let pairs: Vec<(&str, &str)> = self.leq.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let names: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        BoundedLattice::from_pairs(&names, &pairs)
    }

    /// The tensor lattice, when a tensor section is present.
    pub fn tensor_lattice(&self) -> Result<Option<TensorLattice>> {
        let Some(section) = &self.tensor else {
            return Ok(None);
        };
        let l = self.lattice()?;
        let table = section
            .table
            .iter()
            .map(|row| row.iter().map(|x| l.index_of(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let unit = l.index_of(&section.unit)?;
        build_tensor_lattice(&l, table, unit).map(Some)
    }

    pub fn from_lattice(name: &str, l: &BoundedLattice) -> Self {
        LatticeFile {
            name: name.to_string(),
            elements: l.names().to_vec(),
            leq: l
                .covers()
                .into_iter()
                .map(|(a, b)| [l.name(a).to_string(), l.name(b).to_string()])
                .collect(),
            tensor: None,
        }
    }

    pub fn from_tensor(name: &str, t: &TensorLattice) -> Self {
        let l = t.base();
        let mut file = Self::from_lattice(name, l);
        file.tensor = Some(TensorSection {
            unit: l.name(t.unit()).to_string(),
            table: t
                .table()
                .iter()
                .map(|row| row.iter().map(|&v| l.name(v).to_string()).collect())
                .collect(),
        });
        file
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

fn names_of(points: &[String], s: BitSet) -> Vec<String> {
    s.iter().map(|p| points[p].clone()).collect()
}

fn set_of(x: &FiniteSpace, names: &[String]) -> Result<BitSet> {
    names.iter().map(|n| x.index_of(n)).collect()
}

impl From<&FiniteSpace> for SpaceJson {
    fn from(x: &FiniteSpace) -> Self {
        SpaceJson {
            points: x.points().to_vec(),
            opens: x.opens().iter().map(|&u| names_of(x.points(), u)).collect(),
        }
    }
}

impl SpaceJson {
    pub fn space(&self) -> Result<FiniteSpace> {
        let index = |n: &String| {
            self.points
                .iter()
                .position(|p| p == n)
                .ok_or_else(|| Error::UnknownName(n.clone()))
        };
        let opens = self
            .opens
            .iter()
            .map(|u| u.iter().map(index).collect::<Result<BitSet>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteSpace::new(self.points.clone(), opens)
    }
}

/// A support datum; `sigma` maps element names to point names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub space: SpaceJson,
    pub flavor: Flavor,
    pub sigma: BTreeMap<String, Vec<String>>,
}

impl DatumFile {
    /// Every lattice element must be assigned a set.
    pub fn datum(&self, l: &BoundedLattice) -> Result<SupportDatum> {
        let space = self.space.space()?;
        for name in self.sigma.keys() {
            l.index_of(name)?;
        }
        let sigma = l
            .names()
            .iter()
            .map(|a| match self.sigma.get(a) {
                Some(ps) => set_of(&space, ps),
                None => Err(Error::Malformed(format!("no set assigned to {a}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SupportDatum { space, sigma, flavor: self.flavor })
    }
}

/// A map between two spaces, point name to point name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub source: SpaceJson,
    pub target: SpaceJson,
    pub map: BTreeMap<String, String>,
}

impl MapFile {
    pub fn resolve(&self) -> Result<(FiniteSpace, FiniteSpace, Vec<usize>)> {
        let x = self.source.space()?;
        let y = self.target.space()?;
        for p in self.map.keys() {
            x.index_of(p)?;
        }
        let f = x
            .points()
            .iter()
            .map(|p| match self.map.get(p) {
                Some(q) => y.index_of(q),
                None => Err(Error::Malformed(format!("no image for point {p}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((x, y, f))
    }
}

/// Element-to-element map between two lattices.
pub fn resolve_element_map(
    src: &BoundedLattice,
    tgt: &BoundedLattice,
    map: &BTreeMap<String, String>,
) -> Result<Vec<usize>> {
    for a in map.keys() {
        src.index_of(a)?;
    }
    src.names()
        .iter()
        .map(|a| match map.get(a) {
            Some(b) => tgt.index_of(b),
            None => Err(Error::Malformed(format!("no image for element {a}"))),
        })
        .collect()
}
