//! The JSON input format and its canonical form.

use std::collections::{BTreeMap, HashMap};

use msdual::{AlgebraError, Homomorphism, MonotoneSemilattice, Semilattice};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A semilattice description as written by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub elements: Vec<String>,
    /// Cover pairs `[lower, upper]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[String; 2]>>,
    /// Full meet table, rows in `elements` order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
    pub top: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monotone: Option<BTreeMap<String, String>>,
    /// Named endomorphisms.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{0}")]
    Json(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("exactly one of `order` and `meet` must be given")]
    OrderOrMeet,
    #[error("empty label")]
    EmptyLabel,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("meet table must be {n} by {n}")]
    TableShape { n: usize },
    #[error("{what} does not assign every element")]
    Incomplete { what: String },
}

/// A structural problem with a well-formed document; carries a labelled
/// witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {witness}")]
pub struct ValidationError {
    pub what: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// A validated document.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub semilattice: Semilattice,
    pub monotone: Option<MonotoneSemilattice>,
    pub maps: Vec<(String, Homomorphism)>,
}

impl Loaded {
    pub fn label(&self, a: usize) -> String {
        self.semilattice.label(a).into_owned()
    }
}

pub fn parse_str(text: &str) -> Result<Document, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))
}

pub fn read(path: &str) -> Result<Document, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io { path: path.into(), msg: e.to_string() })?;
    parse_str(&text)
}

/// Name the elements mentioned in an [`AlgebraError`].
pub fn describe(e: &AlgebraError, s_labels: &[String]) -> String {
    let l = |i: &usize| s_labels.get(*i).cloned().unwrap_or_else(|| i.to_string());
    match e {
        AlgebraError::NotIdempotent { a } => format!("not idempotent at {}", l(a)),
        AlgebraError::NotCommutative { a, b } => format!("not commutative at ({}, {})", l(a), l(b)),
        AlgebraError::NotAssociative { a, b, c } => format!("not associative at ({}, {}, {})", l(a), l(b), l(c)),
        AlgebraError::BadUnit { a } => format!("top ∧ {} ≠ {}", l(a), l(a)),
        AlgebraError::NotMonotone { a, b } => format!("{} ≤ {} but the images are not ordered", l(a), l(b)),
        AlgebraError::MeetNotPreserved { a, b } => format!("meet of ({}, {}) not preserved", l(a), l(b)),
        AlgebraError::OperatorNotPreserved { a } => format!("operator not preserved at {}", l(a)),
        AlgebraError::Cyclic { a, b } => format!("cycle through {} and {}", l(a), l(b)),
        AlgebraError::NoMeet { a, b } => format!("{} and {} have no greatest lower bound", l(a), l(b)),
        AlgebraError::TopNotGreatest { top } => format!("{} is not above every element", l(top)),
        other => other.to_string(),
    }
}

fn invalid(what: &str, e: &AlgebraError, labels: &[String]) -> ValidationError {
    ValidationError { what: what.into(), witness: describe(e, labels) }
}

impl Document {
    fn index(&self) -> Result<HashMap<&str, usize>, ParseError> {
        let mut idx = HashMap::new();
        for (i, l) in self.elements.iter().enumerate() {
            if l.is_empty() {
                return Err(ParseError::EmptyLabel);
            }
            if idx.insert(l.as_str(), i).is_some() {
                return Err(ParseError::DuplicateLabel(l.clone()));
            }
        }
        Ok(idx)
    }

    fn map_of(
        &self,
        idx: &HashMap<&str, usize>,
        what: &str,
        m: &BTreeMap<String, String>,
    ) -> Result<Vec<usize>, ParseError> {
        let look = |s: &str| idx.get(s).copied().ok_or_else(|| ParseError::UnknownLabel(s.into()));
        let mut out = vec![None; self.elements.len()];
        for (k, v) in m {
            out[look(k)?] = Some(look(v)?);
        }
        out.into_iter().collect::<Option<Vec<_>>>().ok_or(ParseError::Incomplete { what: what.into() })
    }

    /// Check shape, then the algebra.
    pub fn load(&self) -> Result<Loaded, DocError> {
        let idx = self.index()?;
        let look = |s: &str| idx.get(s).copied().ok_or_else(|| ParseError::UnknownLabel(s.into()));
        let n = self.elements.len();
        let top = look(&self.top)?;
        let labels = self.elements.clone();
        let s = match (&self.order, &self.meet) {
            (Some(order), None) => {
                let covers =
                    order.iter().map(|[a, b]| Ok((look(a)?, look(b)?))).collect::<Result<Vec<_>, ParseError>>()?;
                Semilattice::from_covers(n, &covers, top).map_err(|e| invalid("order", &e, &labels))?
            }
            (None, Some(meet)) => {
                if meet.len() != n || meet.iter().any(|r| r.len() != n) {
                    return Err(ParseError::TableShape { n }.into());
                }
                let table = meet
                    .iter()
                    .map(|r| r.iter().map(|x| look(x)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Semilattice::new(table, top).map_err(|e| invalid("meet table", &e, &labels))?
            }
            _ => return Err(ParseError::OrderOrMeet.into()),
        };
        let s = s.with_labels(labels.clone());
        let monotone = match &self.monotone {
            Some(m) => {
                let op = self.map_of(&idx, "monotone", m)?;
                Some(MonotoneSemilattice::new(s.clone(), op).map_err(|e| invalid("monotone", &e, &labels))?)
            }
            None => None,
        };
        let mut maps = Vec::new();
        for (name, m) in &self.maps {
            let f = self.map_of(&idx, &format!("map {name}"), m)?;
            let h = Homomorphism::new(s.clone(), s.clone(), f).map_err(|e| invalid(&format!("map {name}"), &e, &labels))?;
            maps.push((name.clone(), h));
        }
        Ok(Loaded { semilattice: s, monotone, maps })
    }
}

/// The canonical document of a semilattice: labels as given, sorted cover
/// pairs, maps keyed by label.
pub fn canonical(s: &Semilattice, monotone: Option<&MonotoneSemilattice>, maps: &[(String, Homomorphism)]) -> Document {
    let l = |a: usize| s.label(a).into_owned();
    let mut covers: Vec<(usize, usize)> = s.covers();
    covers.sort_unstable();
    let label_map = |f: &dyn Fn(usize) -> usize| -> BTreeMap<String, String> { s.elements().map(|a| (l(a), l(f(a)))).collect() };
    Document {
        elements: s.elements().map(l).collect(),
        order: Some(covers.into_iter().map(|(a, b)| [l(a), l(b)]).collect()),
        meet: None,
        top: l(s.top()),
        monotone: monotone.map(|ms| label_map(&|a| ms.op(a))),
        maps: maps.iter().map(|(n, h)| (n.clone(), label_map(&|a| h.apply(a)))).collect(),
    }
}

impl Loaded {
    pub fn canonical(&self) -> Document {
        canonical(&self.semilattice, self.monotone.as_ref(), &self.maps)
    }
}
