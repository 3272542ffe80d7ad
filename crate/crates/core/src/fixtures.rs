//! The fixture corpus: algebra, graded coordinates, ideal generators (or a
//! leading-term ideal), lex order, auxiliary substitutions and resolutions.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::affine::{quadratize, Quadratization, Substitution};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, lt_ideal, parse_monomial, CoeffExt, GradedVariable, GroebnerBasis, MonomialIdeal, MonomialOrder,
    Polynomial,
};
use crate::lie::{build_algebra, Family, LieAlgebra, Weight};
use crate::verify::{ResolutionData, ResolutionTerm};

const BUILTIN: &[(&str, &str)] = &[
    ("sl2", include_str!("../fixtures/sl2.json")),
    ("sl3", include_str!("../fixtures/sl3.json")),
    ("sl4", include_str!("../fixtures/sl4.json")),
    ("so5", include_str!("../fixtures/so5.json")),
    ("so7", include_str!("../fixtures/so7.json")),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "paper-ideal")]
    Ideal,
    #[serde(rename = "paper-LT")]
    LeadingTerms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureVariable {
    pub name: String,
    pub multidegree: Vec<u32>,
    pub dynkin: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureTerm {
    /// `[a_num, a_den, b_num, b_den]` for `a + b√2`.
    pub coeff: [i64; 4],
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResolutionTerm {
    pub degree: usize,
    pub shift: Vec<i64>,
    /// Highest weight of the irreducible module tensored with the shift.
    pub module: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResolution {
    pub length: usize,
    pub terms: Vec<FixtureResolutionTerm>,
}

/// On-disk form of a fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub name: String,
    pub algebra: AlgebraSpec,
    pub reps: Vec<usize>,
    pub provenance: Provenance,
    pub variables: Vec<FixtureVariable>,
    pub order: Vec<String>,
    #[serde(default)]
    pub generators: Vec<Vec<FixtureTerm>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lt_generators: Vec<String>,
    #[serde(default)]
    pub substitutions: Vec<Substitution>,
    #[serde(default)]
    pub expected_lt: Vec<String>,
    #[serde(default)]
    pub expected_pairs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<FixtureResolution>,
}

/// A validated fixture.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub file: FixtureFile,
    pub algebra: LieAlgebra,
    pub variables: Vec<GradedVariable>,
    pub order: MonomialOrder,
}

impl Fixture {
    /// Load a built-in fixture by name, or a JSON file by path.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if let Some((_, text)) = BUILTIN.iter().find(|(n, _)| *n == name_or_path) {
            return Self::from_json(text);
        }
        let path = Path::new(name_or_path);
        if path.exists() {
            return Self::from_json(&std::fs::read_to_string(path)?);
        }
        Err(Error::Fixture(format!(
            "no fixture `{name_or_path}` (built-in: {})",
            builtin_names().join(", ")
        )))
    }

    /// Load from a directory holding `<name>.json`, falling back to built-ins.
    pub fn load_from(dir: Option<&Path>, name: &str) -> Result<Self> {
        if let Some(dir) = dir {
            let p = dir.join(format!("{name}.json"));
            if p.exists() {
                return Self::from_json(&std::fs::read_to_string(p)?);
            }
        }
        Self::load(name)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FixtureFile = serde_json::from_str(text)?;
        Self::from_file(file)
    }

    pub fn from_file(file: FixtureFile) -> Result<Self> {
        let family = match file.algebra.family.as_str() {
            "A" => Family::A,
            "B" => Family::B,
            other => return Err(Error::Fixture(format!("unknown family `{other}`"))),
        };
        let algebra = build_algebra(family, file.algebra.rank)?;
        let rank = algebra.rank;
        let variables: Vec<GradedVariable> = file
            .variables
            .iter()
            .map(|v| GradedVariable::new(v.name.clone(), v.multidegree.clone(), Weight(v.dynkin.clone())))
            .collect();
        for v in &variables {
            if v.multidegree.len() != rank || v.weight.rank() != rank {
                return Err(Error::Fixture(format!("variable {} has grading of the wrong length", v.name)));
            }
        }
        // coordinates of each representation carry exactly its weights
        for &i in &file.reps {
            let mut deg = vec![0u32; rank];
            deg[i - 1] = 1;
            let mut have: Vec<Weight> =
                variables.iter().filter(|v| v.multidegree == deg).map(|v| v.weight.clone()).collect();
            let mut want: Vec<Weight> = algebra.rep_weights(i)?.into_iter().map(|(_, w)| w).collect();
            have.sort();
            want.sort();
            if have != want {
                return Err(Error::Fixture(format!("coordinates of L(Λ_{i}) do not carry its weights")));
            }
        }
        let names: Vec<String> = variables.iter().map(|v| v.name.clone()).collect();
        let order = MonomialOrder::from_names(&names, &file.order)?;
        let fx = Fixture { file, algebra, variables, order };
        let gens = fx.generators()?;
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() || !g.is_homogeneous(&fx.variables) {
                return Err(Error::Fixture(format!("generator {k} of {} is not homogeneous", fx.file.name)));
            }
        }
        match fx.file.provenance {
            Provenance::Ideal if !fx.file.lt_generators.is_empty() => {
                return Err(Error::Fixture("paper-ideal fixture carries lt_generators".into()))
            }
            Provenance::LeadingTerms if !gens.is_empty() || fx.file.lt_generators.is_empty() => {
                return Err(Error::Fixture("paper-LT fixture must list lt_generators only".into()))
            }
            _ => {}
        }
        for m in &fx.file.lt_generators {
            parse_monomial(&names, m)?;
        }
        let mut ext = names.clone();
        for s in &fx.file.substitutions {
            let e = parse_monomial(&ext, &s.monomial)?;
            if e.iter().sum::<u32>() < 2 {
                return Err(Error::Fixture(format!("substitution {} is not of degree ≥ 2", s.name)));
            }
            ext.push(s.name.clone());
        }
        if let Some(res) = &fx.file.resolution {
            for t in &res.terms {
                if t.shift.len() != rank || t.module.len() != rank {
                    return Err(Error::Fixture("resolution term of the wrong length".into()));
                }
            }
        }
        Ok(fx)
    }

    pub fn name(&self) -> &str {
        &self.file.name
    }

    pub fn names(&self) -> Vec<String> {
        self.variables.iter().map(|v| v.name.clone()).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.file)?)
    }

    pub fn generators(&self) -> Result<Vec<Polynomial>> {
        let n = self.variables.len();
        self.file
            .generators
            .iter()
            .map(|terms| {
                Polynomial::from_terms(
                    n,
                    terms.iter().map(|t| {
                        let [an, ad, bn, bd] = t.coeff;
                        (t.exponents.clone(), CoeffExt::from_ratios(an, ad, bn, bd))
                    }),
                )
            })
            .collect()
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        self.groebner_with_order(&self.order)
    }

    pub fn groebner_with_order(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        if self.file.provenance == Provenance::LeadingTerms {
            return Err(Error::Fixture(format!(
                "{}: no ideal generators available (fixture stores the leading-term ideal)",
                self.file.name
            )));
        }
        let gens = self.generators()?;
        if gens.is_empty() {
            return Ok(GroebnerBasis { order: order.clone(), polys: Vec::new() });
        }
        buchberger(&gens, order)
    }

    /// `⟨LT(I)⟩`: computed for ideal fixtures, read for leading-term fixtures.
    pub fn lt_ideal(&self) -> Result<MonomialIdeal> {
        match self.file.provenance {
            Provenance::Ideal => Ok(lt_ideal(&self.groebner()?)),
            Provenance::LeadingTerms => self.parse_ideal(&self.file.lt_generators),
        }
    }

    pub fn expected_lt(&self) -> Result<MonomialIdeal> {
        self.parse_ideal(&self.file.expected_lt)
    }

    fn parse_ideal(&self, monomials: &[String]) -> Result<MonomialIdeal> {
        let names = self.names();
        Ok(MonomialIdeal::new(monomials.iter().map(|m| parse_monomial(&names, m)).collect::<Result<Vec<_>>>()?))
    }

    /// Sorted exponent vectors of the expected pairs over the ring extended
    /// by the substitution variables.
    pub fn expected_pairs(&self) -> Result<Vec<Vec<u32>>> {
        let mut names = self.names();
        names.extend(self.file.substitutions.iter().map(|s| s.name.clone()));
        let mut out = self
            .file
            .expected_pairs
            .iter()
            .map(|m| parse_monomial(&names, m))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// Quadratize `⟨LT(I)⟩` with the stored substitutions.
    pub fn quadratized(&self) -> Result<Quadratization> {
        let lt = self.lt_ideal()?;
        let subs = (!self.file.substitutions.is_empty()).then_some(self.file.substitutions.as_slice());
        quadratize(&self.variables, &lt, &self.order, subs)
    }

    /// Quadratize `⟨LT(I)⟩` greedily.
    pub fn quadratized_greedy(&self) -> Result<Quadratization> {
        quadratize(&self.variables, &self.lt_ideal()?, &self.order, None)
    }

    pub fn resolution(&self) -> Option<ResolutionData> {
        self.file.resolution.as_ref().map(|r| ResolutionData {
            length: r.length,
            terms: r
                .terms
                .iter()
                .map(|t| ResolutionTerm { degree: t.degree, shift: t.shift.clone(), module: Weight(t.module.clone()) })
                .collect(),
        })
    }
}

/// Short description of every built-in fixture.
pub fn list() -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for name in builtin_names() {
        let fx = Fixture::load(name)?;
        let kind = match fx.file.provenance {
            Provenance::Ideal => format!("{} generators", fx.file.generators.len()),
            Provenance::LeadingTerms => format!("{} leading terms", fx.file.lt_generators.len()),
        };
        let res = if fx.file.resolution.is_some() { ", resolution" } else { "" };
        out.insert(
            name.to_string(),
            format!("{}, {} variables, {kind}, {} substitutions{res}", fx.algebra.name(), fx.variables.len(), fx.file.substitutions.len()),
        );
    }
    Ok(out)
}
