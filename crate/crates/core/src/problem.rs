//! Problem files and the shared front half of every computation: lattice,
//! toric ideal, Gröbner basis for `w`, cone, standard pairs and fake
//! exponents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{
    fake_exponents, ns_classes, restrict_classes, FakeExponent, NsClassification, Support,
};
use crate::lattice::{kernel_lattice_basis, IntegerMatrix, LatticeBasis};
use crate::rational::{format_q, parse_q, q, Q};
use crate::series::Window;
use crate::standard_pairs::{standard_pairs, StandardPair};
use crate::toric::{
    buchberger, initial_ideal, lattice_ideal_generators, same_ideal, saturate_to_toric, Binomial,
    Cone, GroebnerBasis, MonomialIdeal, DEFAULT_SPAIR_BUDGET,
};
use crate::verifier::HypergeometricSystem;

/// A rational on the wire: a JSON integer or a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalRepr {
    Int(i64),
    Str(String),
}

impl RationalRepr {
    pub fn parse(&self) -> Result<Q> {
        match self {
            RationalRepr::Int(n) => Ok(q(*n)),
            RationalRepr::Str(s) => parse_q(s),
        }
    }
}

impl From<&Q> for RationalRepr {
    fn from(x: &Q) -> Self {
        RationalRepr::Str(format_q(x))
    }
}

fn parse_all(xs: &[RationalRepr]) -> Result<Vec<Q>> {
    xs.iter().map(RationalRepr::parse).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_cap: Option<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_degree: Option<u32>,
}

/// The JSON problem schema. Index sets are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub beta: Vec<RationalRepr>,
    pub w: Vec<RationalRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric_generators: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_vectors: Option<Vec<Vec<i64>>>,
    #[serde(
        default,
        rename = "N_restriction",
        skip_serializing_if = "Option::is_none"
    )]
    pub n_restriction: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<Vec<RationalRepr>>,
    #[serde(default)]
    pub options: OptionsFile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub radius: i64,
    pub weight_cap: Q,
    /// Upper bound on the derivative orders enumerated when none is given.
    pub s_degree: Option<u32>,
}

impl Options {
    pub fn window(&self) -> Window {
        Window {
            weight_cap: self.weight_cap.clone(),
            radius: self.radius,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub a: IntegerMatrix,
    pub beta: Vec<Q>,
    pub w: Vec<Q>,
    pub toric_generators: Option<Vec<Vec<i64>>>,
    pub b_vectors: Option<Vec<Vec<i64>>>,
    pub n_restriction: Option<Vec<Support>>,
    pub exponent: Option<Vec<Q>>,
    pub options: Options,
}

/// Converts 1-based index lists to supports.
pub fn supports_from_one_based(sets: &[Vec<usize>], n: usize) -> Result<Vec<Support>> {
    sets.iter()
        .map(|s| {
            s.iter()
                .map(|&i| {
                    if i == 0 || i > n {
                        Err(Error::Parse(format!("index {i} out of range 1..={n}")))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect()
        })
        .collect()
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Problem::from_file(file)
    }

    pub fn from_file(f: ProblemFile) -> Result<Problem> {
        let a = IntegerMatrix::new(f.a)?;
        let n = a.ncols();
        let beta = parse_all(&f.beta)?;
        let w = parse_all(&f.w)?;
        if beta.len() != a.nrows() {
            return Err(Error::Shape(format!(
                "beta has length {}, A has {} rows",
                beta.len(),
                a.nrows()
            )));
        }
        if w.len() != n {
            return Err(Error::Shape(format!(
                "w has length {}, A has {n} columns",
                w.len()
            )));
        }
        let check_len = |what: &str, vs: &Option<Vec<Vec<i64>>>| -> Result<()> {
            for v in vs.iter().flatten() {
                if v.len() != n {
                    return Err(Error::Shape(format!(
                        "{what} entry {v:?} has length {}, expected {n}",
                        v.len()
                    )));
                }
                if a.mul_vec(v).iter().any(|&x| x != 0) {
                    return Err(Error::NotInLattice(v.clone()));
                }
            }
            Ok(())
        };
        check_len("toric_generators", &f.toric_generators)?;
        check_len("b_vectors", &f.b_vectors)?;
        let n_restriction = f
            .n_restriction
            .as_deref()
            .map(|s| supports_from_one_based(s, n))
            .transpose()?;
        let exponent = f.exponent.as_deref().map(parse_all).transpose()?;
        if let Some(v) = &exponent {
            if v.len() != n {
                return Err(Error::Shape(format!(
                    "exponent has length {}, expected {n}",
                    v.len()
                )));
            }
        }
        let options = Options {
            radius: f.options.radius.unwrap_or(crate::exponents::DEFAULT_RADIUS),
            weight_cap: f
                .options
                .weight_cap
                .as_ref()
                .map(RationalRepr::parse)
                .transpose()?
                .unwrap_or_else(|| q(crate::series::DEFAULT_WEIGHT_CAP)),
            s_degree: f.options.s_degree,
        };
        if options.radius < 0 {
            return Err(Error::Parse("radius must be nonnegative".into()));
        }
        Ok(Problem {
            a,
            beta,
            w,
            toric_generators: f.toric_generators,
            b_vectors: f.b_vectors,
            n_restriction,
            exponent,
            options,
        })
    }

    pub fn prepare(&self) -> Result<Prepared> {
        let basis = kernel_lattice_basis(&self.a, self.a.nrows())?;
        let computed = saturate_to_toric(&lattice_ideal_generators(&basis), DEFAULT_SPAIR_BUDGET)?;
        let toric = match &self.toric_generators {
            Some(gens) => {
                let given: Vec<Binomial> = gens.iter().map(|g| Binomial::from_vector(g)).collect();
                if !same_ideal(&given, &computed)? {
                    return Err(Error::Parse(
                        "toric_generators do not generate the toric ideal of A".into(),
                    ));
                }
                given
            }
            None => computed,
        };
        let gb = buchberger(&toric, &self.w)?;
        let cone = Cone::new(&gb, &basis, &self.w)?;
        let initial = initial_ideal(&gb, self.a.ncols());
        let pairs = standard_pairs(&initial);
        let exponents = fake_exponents(&self.a, &self.beta, &pairs)?;
        Ok(Prepared {
            problem: self.clone(),
            basis,
            toric,
            gb,
            cone,
            initial,
            pairs,
            exponents,
        })
    }
}

/// Everything that depends only on `(A, β, w)`.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub problem: Problem,
    pub basis: LatticeBasis,
    pub toric: Vec<Binomial>,
    pub gb: GroebnerBasis,
    pub cone: Cone,
    pub initial: MonomialIdeal,
    pub pairs: Vec<StandardPair>,
    pub exponents: Vec<FakeExponent>,
}

impl Prepared {
    pub fn system(&self) -> HypergeometricSystem {
        HypergeometricSystem {
            a: self.problem.a.clone(),
            beta: self.problem.beta.clone(),
            toric: self.toric.clone(),
        }
    }

    /// The working exponent: `index` (1-based into the fake exponents), else
    /// the problem's `exponent`, else the unique fake exponent.
    pub fn exponent(&self, index: Option<usize>) -> Result<Vec<Q>> {
        if let Some(i) = index {
            return self
                .exponents
                .get(i.wrapping_sub(1))
                .map(|e| e.v.clone())
                .ok_or_else(|| {
                    Error::Parse(format!(
                        "exponent index {i} out of range 1..={}",
                        self.exponents.len()
                    ))
                });
        }
        if let Some(v) = &self.problem.exponent {
            if !self.exponents.iter().any(|e| &e.v == v) {
                return Err(Error::Parse(
                    "the given exponent is not a fake exponent".into(),
                ));
            }
            return Ok(v.clone());
        }
        match self.exponents.as_slice() {
            [only] => Ok(only.v.clone()),
            [] => Err(Error::Parse("there are no fake exponents".into())),
            many => Err(Error::Parse(format!(
                "{} fake exponents; choose one by index or in the problem file",
                many.len()
            ))),
        }
    }

    /// Classification of `v`, restricted when the problem asks for it.
    pub fn classes(&self, v: &[Q]) -> Result<NsClassification> {
        let cls = ns_classes(v, &self.cone, self.problem.options.radius);
        match &self.problem.n_restriction {
            Some(n) => restrict_classes(&cls, n),
            None => Ok(cls),
        }
    }

    pub fn b_vectors(&self) -> Vec<Vec<i64>> {
        self.problem
            .b_vectors
            .clone()
            .unwrap_or_else(|| self.basis.columns().to_vec())
    }

    /// A lattice vector nonzero on `set`: the first given `b` vector, else
    /// the smallest Gale combination of the basis that works.
    pub fn direction(&self, set: &Support) -> Result<Vec<i64>> {
        if let Some(bs) = &self.problem.b_vectors {
            return bs
                .first()
                .cloned()
                .ok_or_else(|| Error::Parse("b_vectors is empty".into()));
        }
        let k = self.basis.rank();
        for r in 1..=3 {
            let mut pts = crate::exponents::gale_box(k, r);
            pts.sort_by_key(|x| {
                (
                    x.iter().map(|c| c.abs()).sum::<i64>(),
                    std::cmp::Reverse(x.clone()),
                )
            });
            for x in pts {
                let b = self.basis.lift(&x);
                if b.iter().any(|&c| c != 0) && set.iter().all(|&i| b[i] != 0) {
                    return Ok(b);
                }
            }
        }
        Err(Error::PerturbationHitsZero(
            *set.iter().next().unwrap_or(&0),
        ))
    }
}
