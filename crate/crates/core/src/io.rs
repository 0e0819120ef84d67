//! JSON wire formats.
//!
//! Operators are `{"m": int, "F": [[[re, im], …], …], "tau": [re, im]}` and
//! norms are `{"n": int, "family": …, "p"?, "k"?, "c"?, "S"?, "gamma"?}`.
//! Non-finite numbers are rejected on input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};
use crate::opmodel::TailOperator;
use crate::vecnorm::{CSet, NormFamily, SymmetricNorm};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub m: usize,
    #[serde(rename = "F")]
    pub f: Vec<Vec<[f64; 2]>>,
    pub tau: [f64; 2],
}

fn finite_pair(z: [f64; 2]) -> Result<C64> {
    if z[0].is_finite() && z[1].is_finite() {
        Ok(C64::new(z[0], z[1]))
    } else {
        Err(Error::NonFinite)
    }
}

impl TryFrom<OperatorJson> for TailOperator {
    type Error = Error;

    fn try_from(j: OperatorJson) -> Result<Self> {
        if j.f.len() != j.m {
            return Err(Error::Arity {
                expected: j.m,
                got: j.f.len(),
            });
        }
        let rows =
            j.f.iter()
                .map(|row| {
                    if row.len() != j.m {
                        return Err(Error::Arity {
                            expected: j.m,
                            got: row.len(),
                        });
                    }
                    row.iter()
                        .map(|&z| finite_pair(z))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
        let block = if j.m == 0 {
            CMatrix::zeros(0, 0)
        } else {
            CMatrix::from_rows(&rows)?
        };
        TailOperator::new(block, finite_pair(j.tau)?)
    }
}

impl From<TailOperator> for OperatorJson {
    fn from(a: TailOperator) -> Self {
        let m = a.m();
        let b = a.block();
        OperatorJson {
            m,
            f: (0..m)
                .map(|i| (0..m).map(|k| [b[(i, k)].re, b[(i, k)].im]).collect())
                .collect(),
            tau: [a.tail().re, a.tail().im],
        }
    }
}

/// `p` is a number, or the string `"inf"` for the max norm.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Finite(f64),
    Named(String),
}

impl Exponent {
    fn value(&self) -> Result<f64> {
        match self {
            Exponent::Finite(p) => Ok(*p),
            Exponent::Named(s)
                if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") =>
            {
                Ok(f64::INFINITY)
            }
            Exponent::Named(s) => Err(Error::InvalidParameter(format!("unknown exponent {s:?}"))),
        }
    }

    fn from_value(p: f64) -> Self {
        if p.is_infinite() {
            Exponent::Named("inf".into())
        } else {
            Exponent::Finite(p)
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormSpec {
    pub n: usize,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Exponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<f64>>,
    #[serde(default, rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
}

fn required<T>(v: Option<T>, name: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("family {family:?} requires {name:?}")))
}

impl TryFrom<NormSpec> for SymmetricNorm {
    type Error = Error;

    fn try_from(spec: NormSpec) -> Result<Self> {
        let fam = spec.family.as_str();
        let family = match fam {
            "lp" => NormFamily::Lp {
                p: required(spec.p, "p", fam)?.value()?,
            },
            "kyfan" => NormFamily::KyFan {
                k: required(spec.k, "k", fam)?,
            },
            "cnorm" => NormFamily::CNorm {
                c: required(spec.c, "c", fam)?,
            },
            "cpnorm" => NormFamily::CpNorm {
                c: required(spec.c, "c", fam)?,
                p: required(spec.p, "p", fam)?.value()?,
            },
            "maxc" => NormFamily::MaxC {
                set: CSet::new(required(spec.s, "S", fam)?)?,
            },
            "scaled_linf" => NormFamily::ScaledLInf {
                gamma: required(spec.gamma, "gamma", fam)?,
            },
            other => {
                return Err(Error::InvalidParameter(format!("unknown family {other:?}")));
            }
        };
        SymmetricNorm::new(spec.n, family)
    }
}

impl From<&SymmetricNorm> for NormSpec {
    fn from(f: &SymmetricNorm) -> Self {
        let n = f.arity();
        match f.family() {
            NormFamily::Lp { p } => NormSpec {
                n,
                family: "lp".into(),
                p: Some(Exponent::from_value(*p)),
                ..Default::default()
            },
            NormFamily::KyFan { k } => NormSpec {
                n,
                family: "kyfan".into(),
                k: Some(*k),
                ..Default::default()
            },
            NormFamily::CNorm { c } => NormSpec {
                n,
                family: "cnorm".into(),
                c: Some(c.clone()),
                ..Default::default()
            },
            NormFamily::CpNorm { c, p } => NormSpec {
                n,
                family: "cpnorm".into(),
                c: Some(c.clone()),
                p: Some(Exponent::from_value(*p)),
                ..Default::default()
            },
            NormFamily::MaxC { set } => NormSpec {
                n,
                family: "maxc".into(),
                s: Some(set.vectors().to_vec()),
                ..Default::default()
            },
            NormFamily::ScaledLInf { gamma } => NormSpec {
                n,
                family: "scaled_linf".into(),
                gamma: Some(*gamma),
                ..Default::default()
            },
        }
    }
}

impl From<SymmetricNorm> for NormSpec {
    fn from(f: SymmetricNorm) -> Self {
        NormSpec::from(&f)
    }
}

pub fn parse_operator(text: &str) -> Result<TailOperator> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_norm(text: &str) -> Result<SymmetricNorm> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use proptest::prelude::*;

    #[test]
    fn operator_json_shape() {
        let a = TailOperator::real_diag(&[0.4, 0.4], 0.2);
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["m"], 2);
        assert_eq!(v["F"][1][1][0], 0.4);
        assert_eq!(v["tau"][0], 0.2);
    }

    #[test]
    fn operator_json_rejects_malformed() {
        assert!(parse_operator(r#"{"m": 2, "F": [[[1,0]]], "tau": [0,0]}"#).is_err());
        assert!(parse_operator(r#"{"m": 1, "F": [[[1,0],[0,0]]], "tau": [0,0]}"#).is_err());
        assert!(parse_operator(r#"{"m": 1, "F": [[[1e400,0]]], "tau": [0,0]}"#).is_err());
        assert!(parse_operator(r#"{"m": 0, "F": [], "tau": [1]}"#).is_err());
        let a = parse_operator(r#"{"m": 0, "F": [], "tau": [0.5, -1]}"#).unwrap();
        assert_eq!(a.tail(), C64::new(0.5, -1.0));
    }

    #[test]
    fn norm_json_families() {
        let f = parse_norm(r#"{"n": 3, "family": "maxc", "S": [[2.5,0,0],[1,1,1]]}"#).unwrap();
        assert!((f.eval(&[0.4, 0.4, 0.2]).unwrap() - 1.0).abs() < 1e-15);
        let f = parse_norm(r#"{"n": 2, "family": "lp", "p": "inf"}"#).unwrap();
        assert_eq!(f.eval(&[3.0, -4.0]).unwrap(), 4.0);
        let f = parse_norm(r#"{"n": 2, "family": "kyfan", "k": 2}"#).unwrap();
        assert_eq!(f.eval(&[3.0, 1.0]).unwrap(), 4.0);
        assert!(parse_norm(r#"{"n": 2, "family": "kyfan"}"#).is_err());
        assert!(parse_norm(r#"{"n": 2, "family": "bogus"}"#).is_err());
        assert!(parse_norm(r#"{"n": 2, "family": "cnorm", "c": [1, 2]}"#).is_err());
    }

    #[test]
    fn norm_json_round_trip() {
        let norms = [
            SymmetricNorm::lp(3, f64::INFINITY).unwrap(),
            SymmetricNorm::lp(3, 2.0).unwrap(),
            SymmetricNorm::ky_fan(3, 2).unwrap(),
            SymmetricNorm::c_norm(vec![1.0, 0.5]).unwrap(),
            SymmetricNorm::cp_norm(vec![1.0, 0.5], 3.0).unwrap(),
            SymmetricNorm::max_c(vec![vec![2.5, 0.0], vec![1.0, 1.0]]).unwrap(),
            SymmetricNorm::scaled_linf(2, 0.5).unwrap(),
        ];
        for f in norms {
            let text = serde_json::to_string(&NormSpec::from(&f)).unwrap();
            assert_eq!(parse_norm(&text).unwrap(), f);
        }
    }

    proptest! {
        #[test]
        fn operator_json_round_trip(seed in any::<u64>()) {
            let mut rng = sample::rng_for(seed, 0);
            let a = sample::random_operator(&mut rng, 4);
            let text = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(parse_operator(&text).unwrap(), a);
        }
    }
}
