//! JSON documents for spaces and maps.
//!
//! Levels and memberships are exact fraction strings (`"3/4"`, `"1"`).
//! Serialization is canonical: elements in universe order, levels ascending,
//! zero memberships omitted, fractions in lowest terms.

use fuzzy_closure_core::closure::{NamedOperator, DEFAULT_MAX_CARRIER};
use fuzzy_closure_core::{
    Carrier, Chain, ClosureOperator, Error as CoreError, FuzzyClosureSpace, FuzzySet, Level,
    PointClosures, SpaceMap, Universe,
};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// Element name to membership string; zero entries may be omitted.
pub type SetDocument = IndexMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub format: u32,
    pub universe: Vec<String>,
    pub denominator: u16,
    pub operator: OperatorDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OperatorDocument {
    Named {
        name: String,
    },
    /// One entry per fuzzy set of the carrier.
    Table {
        entries: Vec<TableEntry>,
    },
    /// Element, then level, then the closure of that fuzzy point.
    FinitelyGenerated {
        closures: IndexMap<String, IndexMap<String, SetDocument>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub set: SetDocument,
    pub closure: SetDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub format: u32,
    pub source: SpaceDocument,
    /// Defaults to the source space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceDocument>,
    pub map: IndexMap<String, String>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error(transparent)]
    Space(#[from] CoreError),
}

impl DocumentError {
    pub fn is_budget(&self) -> bool {
        matches!(self, DocumentError::Space(CoreError::Budget { .. }))
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Parses and validates a space document.
pub fn parse_space(text: &str) -> Result<FuzzyClosureSpace, DocumentError> {
    parse_space_with_budget(text, DEFAULT_MAX_CARRIER)
}

pub fn parse_space_with_budget(text: &str, budget: usize) -> Result<FuzzyClosureSpace, DocumentError> {
    let doc: SpaceDocument = serde_json::from_str(text)?;
    doc.to_space(budget)
}

pub fn serialize_space(s: &FuzzyClosureSpace) -> String {
    to_text(&SpaceDocument::from_space(s))
}

pub fn parse_map(text: &str) -> Result<SpaceMap, DocumentError> {
    parse_map_with_budget(text, DEFAULT_MAX_CARRIER)
}

pub fn parse_map_with_budget(text: &str, budget: usize) -> Result<SpaceMap, DocumentError> {
    let doc: MapDocument = serde_json::from_str(text)?;
    doc.to_map(budget)
}

pub fn serialize_map(m: &SpaceMap) -> String {
    to_text(&MapDocument::from_map(m))
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}

fn level_text(chain: Chain, level: u16) -> String {
    chain.ratio(Level(level)).to_string()
}

fn set_document(f: &FuzzySet) -> SetDocument {
    let c = f.carrier();
    f.grades()
        .iter()
        .enumerate()
        .filter(|(_, g)| **g > 0)
        .map(|(x, g)| (c.universe().name(x).to_string(), level_text(c.chain(), *g)))
        .collect()
}

fn parse_set(carrier: &Carrier, doc: &SetDocument) -> Result<FuzzySet, CoreError> {
    let mut grades = vec![0; carrier.len()];
    for (name, value) in doc {
        let x = carrier.universe().require(name)?;
        grades[x] = carrier.chain().parse_level(value)?.0;
    }
    carrier.set(grades)
}

impl SpaceDocument {
    pub fn from_space(s: &FuzzyClosureSpace) -> Self {
        let c = s.carrier();
        let operator = match s.operator() {
            ClosureOperator::Named(named) => OperatorDocument::Named {
                name: match named {
                    NamedOperator::Discrete => "discrete",
                    NamedOperator::Indiscrete => "indiscrete",
                }
                .into(),
            },
            ClosureOperator::Table(table) => OperatorDocument::Table {
                entries: table
                    .iter()
                    .enumerate()
                    .map(|(code, image)| TableEntry {
                        set: set_document(&c.decode(code)),
                        closure: set_document(&c.decode(*image as usize)),
                    })
                    .collect(),
            },
            ClosureOperator::Generated(points) => OperatorDocument::FinitelyGenerated {
                closures: (0..c.len())
                    .map(|x| {
                        let levels = c
                            .chain()
                            .positive_levels()
                            .map(|l| {
                                let p = c.point_at(x, l).expect("level on the chain");
                                let image = c.set(points.entry(p).to_vec()).expect("entry on the chain");
                                (level_text(c.chain(), l.0), set_document(&image))
                            })
                            .collect();
                        (c.universe().name(x).to_string(), levels)
                    })
                    .collect(),
            },
        };
        SpaceDocument {
            format: FORMAT_VERSION,
            universe: c.universe().names().to_vec(),
            denominator: c.denominator(),
            operator,
        }
    }

    /// Builds and validates the space.
    pub fn to_space(&self, budget: usize) -> Result<FuzzyClosureSpace, DocumentError> {
        if self.format != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format));
        }
        let carrier = Carrier::new(Universe::new(self.universe.iter().cloned())?, Chain::new(self.denominator)?);
        let operator = match &self.operator {
            OperatorDocument::Named { name } => ClosureOperator::Named(match name.as_str() {
                "discrete" => NamedOperator::Discrete,
                "indiscrete" => NamedOperator::Indiscrete,
                other => {
                    return Err(CoreError::MalformedOperator(format!("unknown named operator `{other}`")).into())
                }
            }),
            OperatorDocument::Table { entries } => {
                let count = carrier.check_budget(budget)?;
                let mut table: Vec<Option<u32>> = vec![None; count];
                for entry in entries {
                    let set = parse_set(&carrier, &entry.set)?;
                    let image = parse_set(&carrier, &entry.closure)?;
                    let slot = &mut table[set.code()];
                    if slot.is_some() {
                        return Err(CoreError::MalformedOperator(format!("set {set} listed twice")).into());
                    }
                    *slot = Some(image.code() as u32);
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(code, image)| {
                        image.ok_or_else(|| {
                            CoreError::MalformedOperator(format!("no entry for set {}", carrier.decode(code)))
                        })
                    })
                    .collect::<Result<Vec<u32>, CoreError>>()?;
                ClosureOperator::Table(table)
            }
            OperatorDocument::FinitelyGenerated { closures } => {
                let d = carrier.denominator() as usize;
                let mut entries: Vec<Option<Vec<u16>>> = vec![None; carrier.len() * d];
                for (name, levels) in closures {
                    let x = carrier.universe().require(name)?;
                    for (level, image) in levels {
                        let l = carrier.chain().parse_level(level)?;
                        if l.is_zero() {
                            return Err(CoreError::MalformedOperator("point closures start at level 1/D".into()).into());
                        }
                        let slot = &mut entries[x * d + (l.0 as usize - 1)];
                        if slot.is_some() {
                            return Err(
                                CoreError::MalformedOperator(format!("closure of {name} at {level} listed twice")).into()
                            );
                        }
                        *slot = Some(parse_set(&carrier, image)?.grades().to_vec());
                    }
                }
                let entries = entries
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| {
                        e.ok_or_else(|| {
                            CoreError::MalformedOperator(format!(
                                "missing closure of {} at {}",
                                carrier.universe().name(i / d),
                                level_text(carrier.chain(), (i % d + 1) as u16)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, CoreError>>()?;
                ClosureOperator::Generated(PointClosures::new(&carrier, entries)?)
            }
        };
        let space = FuzzyClosureSpace::unvalidated(carrier, operator)?.with_budget(budget);
        let report = space.validate()?;
        if !report.passed() {
            return Err(CoreError::Invalid(report).into());
        }
        Ok(FuzzyClosureSpace::new(space.carrier().clone(), space.operator().clone())?.with_budget(budget))
    }
}

impl MapDocument {
    pub fn from_map(m: &SpaceMap) -> Self {
        let source = SpaceDocument::from_space(m.source());
        let target = SpaceDocument::from_space(m.target());
        let sc = m.source().carrier();
        let tc = m.target().carrier();
        MapDocument {
            format: FORMAT_VERSION,
            target: (target != source).then_some(target),
            source,
            map: m
                .ground()
                .iter()
                .enumerate()
                .map(|(x, y)| (sc.universe().name(x).to_string(), tc.universe().name(*y).to_string()))
                .collect(),
        }
    }

    pub fn to_map(&self, budget: usize) -> Result<SpaceMap, DocumentError> {
        if self.format != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format));
        }
        let source = self.source.to_space(budget)?;
        let target = match &self.target {
            Some(t) => t.to_space(budget)?,
            None => source.clone(),
        };
        let pairs: Vec<(&str, &str)> = self.map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Ok(SpaceMap::from_names(source, target, &pairs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fuzzy_closure_core::corpus;

    #[test]
    fn round_trip_is_byte_exact() {
        for s in [
            corpus::cycle3(2).unwrap(),
            corpus::discrete(2, 3).unwrap(),
            corpus::pqr_interior(1).unwrap().to_table().unwrap(),
        ] {
            let text = serialize_space(&s);
            let back = parse_space(&text).unwrap();
            assert_eq!(serialize_space(&back), text);
        }
    }

    #[test]
    fn parsing_canonicalizes() {
        let text = r#"{"format":1,"universe":["a","b"],"denominator":4,"operator":{"kind":"finitely_generated",
            "closures":{"b":{"1":{"b":"4/4"},"2/4":{"b":"1/2"},"1/4":{"b":"1/4"},"3/4":{"b":"3/4"}},
                        "a":{"1/4":{"a":"1/4","b":"0"},"1/2":{"a":"1/2"},"3/4":{"a":"3/4"},"1":{"a":"1"}}}}}"#;
        let s = parse_space(text).unwrap();
        let canonical = serialize_space(&s);
        assert!(canonical.find("\"a\": {").unwrap() < canonical.find("\"b\": {").unwrap());
        assert!(!canonical.contains("2/4") && !canonical.contains("\"0\""));
        assert_eq!(serialize_space(&parse_space(&canonical).unwrap()), canonical);
    }

    #[test]
    fn cycle3_document_closes_points_onto_a_pair() {
        let s = parse_space(&serialize_space(&corpus::cycle3(2).unwrap())).unwrap();
        let c = s.carrier();
        let x = c.point("x", 1).unwrap();
        assert_eq!(s.point_closure(x), c.crisp(&["x", "y"]).unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        let over = r#"{"format":1,"universe":["a"],"denominator":4,"operator":{"kind":"finitely_generated",
            "closures":{"a":{"1/4":{"a":"5/4"},"1/2":{"a":"1/2"},"3/4":{"a":"3/4"},"1":{"a":"1"}}}}}"#;
        assert!(matches!(parse_space(over), Err(DocumentError::Space(CoreError::InvalidLevel(_)))));
        let shrinking = r#"{"format":1,"universe":["a","b"],"denominator":1,"operator":{"kind":"finitely_generated",
            "closures":{"a":{"1":{}},"b":{"1":{"b":"1"}}}}}"#;
        assert!(matches!(parse_space(shrinking), Err(DocumentError::Space(CoreError::Invalid(_)))));
        let Err(DocumentError::Syntax { line, .. }) = parse_space("{\n\"format\": 1,\n oops") else {
            panic!("expected a syntax error");
        };
        assert_eq!(line, 3);
    }

    #[test]
    fn map_round_trip() {
        let (_, m) = corpus::cycle4_rotation(1).unwrap();
        let text = serialize_map(&m);
        assert!(!text.contains("\"target\""));
        let back = parse_map(&text).unwrap();
        assert_eq!(back.ground(), m.ground());
        assert_eq!(serialize_map(&back), text);
    }
}
