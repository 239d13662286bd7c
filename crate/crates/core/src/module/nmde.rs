use std::fmt;

use serde::Serialize;

use super::ModuleType;
use crate::error::{Error, Result};

/// Endpoint `ν`, dual endpoint `μ`, diameter `d` and auxiliary `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Nmde {
    pub nu: i64,
    pub mu: i64,
    pub d: i64,
    pub e: i64,
}

impl fmt::Display for Nmde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu={}, mu={}, d={}, e={}", self.nu, self.mu, self.d, self.e)
    }
}

/// Which of the three parameter regimes a type falls in, decided by `β - α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConversionCase {
    /// `β - α <= 0`
    C1,
    /// `0 < β - α <= h - k`
    C2,
    /// `β - α > h - k`
    C3,
}

impl fmt::Display for ConversionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConversionCase::C1 => "C1",
            ConversionCase::C2 => "C2",
            ConversionCase::C3 => "C3",
        })
    }
}

pub fn conversion_case(t: &ModuleType) -> ConversionCase {
    let gap = t.beta - t.alpha;
    if gap <= 0 {
        ConversionCase::C1
    } else if gap <= t.h - t.k {
        ConversionCase::C2
    } else {
        ConversionCase::C3
    }
}

/// `ν, μ, d` read off the support; `e` from the case formulas.
///
/// `ν` and `d` are defined through the weights on the line `i + j = k`; when
/// the support misses that line (exactly when `ρ + α + β > k`) the parameters
/// do not exist and [`Error::NoLevelK`] is returned.
pub fn type_to_nmde(t: &ModuleType) -> Result<(Nmde, ConversionCase)> {
    let k = t.k;
    let on_line: Vec<i64> = (0..=k).filter(|&j| t.contains(k - j, j)).collect();
    let Some(&nu) = on_line.first() else {
        return Err(Error::NoLevelK(format!("{t} at (h,k)=({},{})", t.h, t.k)));
    };
    let mu = (0..=k)
        .flat_map(|i| (0..=k).map(move |j| (i, j)))
        .filter(|&(i, j)| t.contains(i, j))
        .map(|(i, j)| i + j)
        .min()
        .expect("support meets the line i + j = k, so it meets the lower square");
    let d = on_line.len() as i64 - 1;
    let case = conversion_case(t);
    let e = match case {
        ConversionCase::C1 => t.rho,
        ConversionCase::C2 => mu - 2 * t.beta,
        ConversionCase::C3 => t.rho - t.h + t.k,
    };
    Ok((Nmde { nu, mu, d, e }, case))
}

/// Recover `(α, β, ρ)` from `(ν, μ, d, e)` and the case.
///
/// Fails with [`Error::Domain`] when the formulas give an invalid triple or
/// one whose own parameters differ from the input.
pub fn nmde_to_type(n: &Nmde, case: ConversionCase, h: i64, k: i64) -> Result<ModuleType> {
    let Nmde { nu, mu, e, .. } = *n;
    let (alpha, beta, rho) = match case {
        ConversionCase::C1 => (nu - e, mu - nu, e),
        ConversionCase::C2 => {
            if (mu - e) % 2 != 0 {
                return Err(Error::Domain(format!("mu - e = {} is odd in case C2", mu - e)));
            }
            let beta = (mu - e) / 2;
            (mu - nu, beta, nu - beta)
        }
        ConversionCase::C3 => (mu - nu, k - h + nu - e, h - k + e),
    };
    let t =
        ModuleType::new(alpha, beta, rho, h, k).map_err(|err| Error::Domain(format!("({n}) in case {case}: {err}")))?;
    match type_to_nmde(&t) {
        Ok((back, c)) if back == *n && c == case => Ok(t),
        _ => Err(Error::Domain(format!(
            "({n}) in case {case} is not realized by type {t}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::enumerate_types;

    fn t(a: i64, b: i64, r: i64, h: i64, k: i64) -> ModuleType {
        ModuleType::new(a, b, r, h, k).unwrap()
    }

    #[test]
    fn examples() {
        let n = |nu, mu, d, e| Nmde { nu, mu, d, e };
        assert_eq!(
            type_to_nmde(&t(0, 0, 0, 2, 1)).unwrap(),
            (n(0, 0, 1, 0), ConversionCase::C1)
        );
        assert_eq!(
            type_to_nmde(&t(0, 1, 0, 2, 1)).unwrap(),
            (n(1, 1, 0, -1), ConversionCase::C2)
        );
        assert_eq!(
            type_to_nmde(&t(0, 0, 1, 2, 1)).unwrap(),
            (n(1, 1, 0, 1), ConversionCase::C1)
        );
        assert_eq!(
            nmde_to_type(&n(0, 0, 1, 0), ConversionCase::C1, 2, 1).unwrap(),
            t(0, 0, 0, 2, 1)
        );
        assert_eq!(
            nmde_to_type(&n(1, 1, 0, -1), ConversionCase::C2, 2, 1).unwrap(),
            t(0, 1, 0, 2, 1)
        );
    }

    #[test]
    fn inconsistent_parameters_rejected() {
        let n = Nmde {
            nu: 0,
            mu: 0,
            d: 1,
            e: 0,
        };
        assert!(nmde_to_type(&n, ConversionCase::C3, 2, 1).is_err());
        assert!(nmde_to_type(
            &Nmde {
                nu: 5,
                mu: 0,
                d: 0,
                e: 0
            },
            ConversionCase::C1,
            2,
            1
        )
        .is_err());
        assert!(nmde_to_type(
            &Nmde {
                nu: 1,
                mu: 2,
                d: 0,
                e: 1
            },
            ConversionCase::C2,
            2,
            1
        )
        .is_err());
    }

    #[test]
    fn defined_exactly_when_level_k_is_met() {
        for h in 2..=5 {
            for k in 1..h {
                for ty in enumerate_types(h, k).unwrap() {
                    let defined = type_to_nmde(&ty).is_ok();
                    assert_eq!(defined, ty.rho + ty.alpha + ty.beta <= ty.k, "{ty}");
                }
            }
        }
        assert!(matches!(type_to_nmde(&t(0, 1, 1, 3, 1)), Err(Error::NoLevelK(_))));
    }

    #[test]
    fn round_trip() {
        for h in 2..=6 {
            for k in 1..h {
                for ty in enumerate_types(h, k).unwrap() {
                    if let Ok((n, case)) = type_to_nmde(&ty) {
                        assert_eq!(nmde_to_type(&n, case, ty.h, ty.k).unwrap(), ty);
                    }
                }
            }
        }
    }
}
