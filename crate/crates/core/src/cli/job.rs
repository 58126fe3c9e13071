//! JSON job specifications.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::combinat::{Composition, Index};
use crate::error::{Error, Result};
use crate::gzmod::{parse_rational, EdgeRule, EvalPoint, PointValue, PointValueSpec};

/// `{"lambda": [2,1], "point": {"1,1": {"tag": 1, "offset": "0"}, ...}, "radius": 3}`
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub lambda: Vec<u32>,
    #[serde(default)]
    pub point: Option<BTreeMap<String, PointValueSpec>>,
    #[serde(default)]
    pub radius: Option<i64>,
    #[serde(default)]
    pub edge_rule: Option<String>,
    #[serde(default)]
    pub degree: Option<u32>,
    #[serde(default)]
    pub out: Option<String>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(e.to_string()))
    }

    pub fn composition(&self) -> Result<Composition> {
        Composition::new(self.lambda.clone())
    }

    /// The evaluation point; fully generic when no point is given.
    pub fn eval_point(&self) -> Result<EvalPoint> {
        let lambda = self.composition()?;
        let Some(point) = &self.point else {
            return Ok(EvalPoint::generic(&lambda));
        };
        let mut values = BTreeMap::new();
        for (key, spec) in point {
            let a = parse_index(key)?;
            lambda.check(a)?;
            if spec.tag == 0 {
                return Err(Error::Validation(format!("tag of {key} must be positive")));
            }
            values.insert(a, PointValue::new(spec.tag, parse_rational(&spec.offset)?));
        }
        if values.len() != lambda.indices().len() {
            return Err(Error::Validation(format!("point must assign all {} indices", lambda.indices().len())));
        }
        EvalPoint::new(&lambda, values)
    }

    pub fn edge_rule(&self) -> Result<EdgeRule> {
        self.edge_rule.as_deref().map_or(Ok(EdgeRule::Both), str::parse)
    }
}

/// `"i,j"` with optional surrounding parentheses.
pub fn parse_index(s: &str) -> Result<Index> {
    let bad = || Error::Validation(format!("bad index {s:?}"));
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (i, j) = t.split_once(',').ok_or_else(bad)?;
    let i: u32 = i.trim().parse().map_err(|_| bad())?;
    let j: u32 = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 {
        return Err(bad());
    }
    Ok(Index::new(i, j))
}
