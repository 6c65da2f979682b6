use serde::{Deserialize, Serialize};

use super::{FiniteRing, LocalAtom};
use crate::{Error, Result};

/// On-disk ring description.
///
/// ```json
/// {"product": [{"p": 2, "k": 1}, {"p": 3, "k": 2}], "labels": ["a", "b"]}
/// {"table": {"n": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum RingDescription {
    Product {
        product: Vec<AtomSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Table {
        table: TableDescription,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub k: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDescription {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl RingDescription {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingDescription::Product { product, labels } => {
                let atoms = product
                    .iter()
                    .map(|a| LocalAtom::new(a.p, a.k))
                    .collect::<Result<Vec<_>>>()?;
                match labels {
                    Some(l) => FiniteRing::product(atoms, l.clone()),
                    None => FiniteRing::product_of(&atoms),
                }
            }
            RingDescription::Table { table } => FiniteRing::from_tables(
                table.n,
                table.add.clone(),
                table.mul.clone(),
                table.zero,
                table.one,
            ),
        }
    }

    /// Description that rebuilds `ring` exactly.
    pub fn of(ring: &FiniteRing) -> Self {
        match ring.atoms() {
            Some((atoms, labels)) => RingDescription::Product {
                product: atoms.iter().map(|a| AtomSpec { p: a.p, k: a.k }).collect(),
                labels: Some(labels.to_vec()),
            },
            None => {
                let n = ring.order();
                let rows = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
                    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
                };
                RingDescription::Table {
                    table: TableDescription {
                        n,
                        add: rows(&|a, b| ring.add(super::Elem(a), super::Elem(b)).0),
                        mul: rows(&|a, b| ring.mul(super::Elem(a), super::Elem(b)).0),
                        zero: ring.zero().0,
                        one: ring.one().0,
                    },
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring descriptions serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_product_and_table() {
        let r = RingDescription::parse(
            r#"{"product": [{"p": 2, "k": 1}, {"p": 3, "k": 2}], "labels": ["a","b"]}"#,
        )
        .unwrap()
        .build()
        .unwrap();
        assert_eq!(r.order(), 18);
        let t = RingDescription::parse(
            r#"{"table": {"n": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1}}"#,
        )
        .unwrap()
        .build()
        .unwrap();
        assert!(t.is_field());
    }

    #[test]
    fn round_trip_through_description() {
        let r = FiniteRing::cyclic(6).unwrap();
        let back = RingDescription::parse(&RingDescription::of(&r).to_json())
            .unwrap()
            .build()
            .unwrap();
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(r.mul(a, b), back.mul(a, b));
            }
        }
    }

    #[test]
    fn errors_are_reported() {
        assert!(matches!(
            RingDescription::parse("{\"product\": [}"),
            Err(Error::Parse { .. })
        ));
        assert!(RingDescription::parse(r#"{"product": [{"p": 4}]}"#)
            .unwrap()
            .build()
            .is_err());
        assert!(RingDescription::parse(r#"{"product": [{"p": 2}], "bogus": 1}"#).is_err());
    }
}
