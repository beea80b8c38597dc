//! JSON form of polynomials:
//! `{"vars":[...],"terms":[{"coef":"p/q","exps":[...]}]}`.
//!
//! `vars` lists the variables that occur, in universe order; each `exps`
//! vector is aligned with it. Terms appear in descending graded-lex order.

use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::poly::mpoly::{MPoly, Monomial};
use crate::poly::universe::Var;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

impl From<&MPoly> for PolyJson {
    fn from(p: &MPoly) -> Self {
        let vars = p.variables();
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| TermJson {
                coef: c.to_string(),
                exps: vars.iter().map(|&v| m.exp(v)).collect(),
            })
            .collect();
        PolyJson {
            vars: vars.iter().map(|v| v.name()).collect(),
            terms,
        }
    }
}

impl TryFrom<&PolyJson> for MPoly {
    type Error = PolyError;

    fn try_from(j: &PolyJson) -> Result<Self, Self::Error> {
        let vars: Vec<Var> = j
            .vars
            .iter()
            .map(|name| Var::parse(name))
            .collect::<Result<_, _>>()?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exps.len() != vars.len() {
                return Err(PolyError::Dimension(format!(
                    "term has {} exponents for {} variables",
                    t.exps.len(),
                    vars.len()
                )));
            }
            let coef: Rational = t.coef.parse()?;
            let mono = Monomial::from_pairs(vars.iter().copied().zip(t.exps.iter().copied()));
            terms.push((mono, coef));
        }
        Ok(MPoly::from_terms(terms))
    }
}

pub fn to_json(p: &MPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("polynomial JSON serialization")
}

pub fn to_json_value(p: &MPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson::from(p)).expect("polynomial JSON serialization")
}

pub fn from_json(s: &str) -> Result<MPoly, PolyError> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Parse {
        position: e.column(),
        message: e.to_string(),
    })?;
    MPoly::try_from(&j)
}
