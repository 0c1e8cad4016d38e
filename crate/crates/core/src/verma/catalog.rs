//! Named morphisms and the compositions relating them.

use std::fmt;
use std::str::FromStr;

use super::degree4::{build_degree4, Degree4Error, Degree4Kind};
use super::morphism::{compose, MorphismData, MorphismError};
use crate::models::{nabla, Family, ModelError};
use crate::sl5::Weight;

/// A morphism that can be built by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    /// `∇_X` on the `(m, n)` component.
    Nabla(Family, u32, u32),
    /// `t_AB: M(n,0,0,0) → M(n−3,0,0,0)`.
    TAB(u32),
    /// `t_BC: M(0,0,0,n) → M(0,0,0,n+3)`.
    TBC(u32),
    /// `∇_B ∇_A: M(m,1,0,0) → M(m−1,0,0,1)`.
    NablaAB(u32),
    /// `∇_C ∇_B: M(1,0,0,n) → M(0,0,1,n+1)`.
    NablaBC(u32),
    /// `∇_C ∇_A: M(0,1,0,0) → M(0,0,1,0)`.
    NablaAC,
    /// `∇_C ∇_B ∇_A: M(1,1,0,0) → M(0,0,1,1)`.
    NablaABC,
    /// `∇_C t_AB: M(3,0,0,0) → M(0,0,1,0)`.
    TPrime,
    /// `t_BC ∇_A: M(0,1,0,0) → M(0,0,0,3)`.
    TDoublePrime,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown morphism {0:?}")]
    Unknown(String),
    #[error("{0}: parameter out of range")]
    OutOfRange(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Degree4(#[from] Degree4Error),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Nabla(x, m, n) => write!(f, "nabla {x} {m} {n}"),
            Named::TAB(n) => write!(f, "t_AB {n}"),
            Named::TBC(n) => write!(f, "t_BC {n}"),
            Named::NablaAB(m) => write!(f, "nabla_AB {m}"),
            Named::NablaBC(n) => write!(f, "nabla_BC {n}"),
            Named::NablaAC => f.write_str("nabla_AC"),
            Named::NablaABC => f.write_str("nabla_ABC"),
            Named::TPrime => f.write_str("t_prime"),
            Named::TDoublePrime => f.write_str("t_dprime"),
        }
    }
}

fn nums(args: &[&str], k: usize, name: &str) -> Result<Vec<u32>, CatalogError> {
    if args.len() != k {
        return Err(CatalogError::Unknown(format!(
            "{name} expects {k} argument(s)"
        )));
    }
    args.iter()
        .map(|a| {
            a.parse()
                .map_err(|_| CatalogError::Unknown(format!("{name}: bad number {a:?}")))
        })
        .collect()
}

impl Named {
    /// Parses `name arg…`, e.g. `["nabla", "C", "2", "3"]` or `["t_AB", "4"]`.
    pub fn parse(words: &[&str]) -> Result<Named, CatalogError> {
        let (head, rest) = words
            .split_first()
            .ok_or_else(|| CatalogError::Unknown(String::new()))?;
        Ok(match *head {
            "nabla" => {
                let (x, rest) = rest
                    .split_first()
                    .ok_or_else(|| CatalogError::Unknown("nabla needs a family".into()))?;
                let fam = Family::from_str(x).map_err(|e| CatalogError::Unknown(e.to_string()))?;
                let v = nums(rest, 2, "nabla")?;
                Named::Nabla(fam, v[0], v[1])
            }
            "t_AB" => Named::TAB(nums(rest, 1, head)?[0]),
            "t_BC" => Named::TBC(nums(rest, 1, head)?[0]),
            "nabla_AB" => Named::NablaAB(nums(rest, 1, head)?[0]),
            "nabla_BC" => Named::NablaBC(nums(rest, 1, head)?[0]),
            "nabla_AC" => {
                nums(rest, 0, head)?;
                Named::NablaAC
            }
            "nabla_ABC" => {
                nums(rest, 0, head)?;
                Named::NablaABC
            }
            "t_prime" => {
                nums(rest, 0, head)?;
                Named::TPrime
            }
            "t_dprime" => {
                nums(rest, 0, head)?;
                Named::TDoublePrime
            }
            other => return Err(CatalogError::Unknown(other.to_string())),
        })
    }

    /// Degree of the morphism.
    pub fn degree(&self) -> u32 {
        match self {
            Named::Nabla(..) => 1,
            Named::NablaAB(_) | Named::NablaBC(_) | Named::NablaAC => 2,
            Named::NablaABC => 3,
            Named::TAB(_) | Named::TBC(_) => 4,
            Named::TPrime | Named::TDoublePrime => 5,
        }
    }

    /// Highest weights of source and target (the target of a vanishing
    /// `∇_X` is `None`).
    pub fn endpoints(&self) -> (Weight, Option<Weight>) {
        let w = |a, b, c, d| Weight::new(a, b, c, d);
        match *self {
            Named::Nabla(x, m, n) => (
                crate::models::lambda(x, m, n),
                crate::models::nabla_target(x, m, n).map(|(a, b)| crate::models::lambda(x, a, b)),
            ),
            Named::TAB(n) => (w(n as i64, 0, 0, 0), Some(w(n as i64 - 3, 0, 0, 0))),
            Named::TBC(n) => (w(0, 0, 0, n as i64), Some(w(0, 0, 0, n as i64 + 3))),
            Named::NablaAB(m) => (w(m as i64, 1, 0, 0), Some(w(m as i64 - 1, 0, 0, 1))),
            Named::NablaBC(n) => (w(1, 0, 0, n as i64), Some(w(0, 0, 1, n as i64 + 1))),
            Named::NablaAC => (w(0, 1, 0, 0), Some(w(0, 0, 1, 0))),
            Named::NablaABC => (w(1, 1, 0, 0), Some(w(0, 0, 1, 1))),
            Named::TPrime => (w(3, 0, 0, 0), Some(w(0, 0, 1, 0))),
            Named::TDoublePrime => (w(0, 1, 0, 0), Some(w(0, 0, 0, 3))),
        }
    }

    pub fn build(&self) -> Result<MorphismData, CatalogError> {
        let nb = |x, m, n| -> Result<MorphismData, CatalogError> { Ok(nabla(x, m, n)?.morphism) };
        let mut out = match *self {
            Named::Nabla(x, m, n) => nb(x, m, n)?,
            Named::TAB(n) => build_degree4(Degree4Kind::AB, n)?,
            Named::TBC(n) => build_degree4(Degree4Kind::BC, n)?,
            Named::NablaAB(m) => {
                if m == 0 {
                    return Err(CatalogError::OutOfRange(self.to_string()));
                }
                compose(&nb(Family::B, m, 0)?, &nb(Family::A, m, 1)?)?
            }
            Named::NablaBC(n) => compose(&nb(Family::C, 0, n + 1)?, &nb(Family::B, 1, n)?)?,
            Named::NablaAC => compose(&nb(Family::C, 0, 0)?, &nb(Family::A, 0, 1)?)?,
            Named::NablaABC => compose(
                &nb(Family::C, 0, 1)?,
                &compose(&nb(Family::B, 1, 0)?, &nb(Family::A, 1, 1)?)?,
            )?,
            Named::TPrime => compose(&nb(Family::C, 0, 0)?, &build_degree4(Degree4Kind::AB, 3)?)?,
            Named::TDoublePrime => {
                compose(&build_degree4(Degree4Kind::BC, 0)?, &nb(Family::A, 0, 1)?)?
            }
        };
        out.label = self.to_string();
        Ok(out)
    }
}

/// An entry of [`named_morphisms`].
pub struct CatalogEntry {
    pub name: Named,
    pub morphism: MorphismData,
    /// Whether the map is claimed to be nonzero.
    pub expect_nonzero: bool,
}

/// Every named morphism at its smallest admissible parameters (plus a few
/// more members of the infinite families).
pub fn catalog_names() -> Vec<Named> {
    let mut v = vec![
        Named::Nabla(Family::A, 0, 1),
        Named::Nabla(Family::A, 2, 1),
        Named::Nabla(Family::B, 1, 0),
        Named::Nabla(Family::B, 2, 1),
        Named::Nabla(Family::C, 0, 0),
        Named::Nabla(Family::C, 1, 1),
        Named::TAB(3),
        Named::TAB(4),
        Named::TBC(0),
        Named::TBC(1),
        Named::NablaAB(1),
        Named::NablaAB(2),
        Named::NablaBC(0),
        Named::NablaBC(1),
    ];
    v.extend([
        Named::NablaAC,
        Named::NablaABC,
        Named::TPrime,
        Named::TDoublePrime,
    ]);
    v
}

pub fn named_morphisms() -> Result<Vec<CatalogEntry>, CatalogError> {
    catalog_names()
        .into_iter()
        .map(|name| {
            Ok(CatalogEntry {
                name,
                morphism: name.build()?,
                expect_nonzero: true,
            })
        })
        .collect()
}

/// A composition claimed to vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroComposition {
    /// `t_AB ∘ ∇_A` on `M(n,1,0,0)`, `n ≥ 3`.
    TabNablaA(u32),
    /// `∇_B ∘ t_AB` on `M(n,0,0,0)`, `n ≥ 4`.
    NablaBTab(u32),
    /// `t_BC ∘ ∇_B` on `M(1,0,0,n)`.
    TbcNablaB(u32),
    /// `∇_C ∘ t_BC` on `M(0,0,0,n)`.
    NablaCTbc(u32),
    /// `t_BC ∘ t_AB` on `M(3,0,0,0)`.
    TbcTab,
}

impl fmt::Display for ZeroComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroComposition::TabNablaA(n) => write!(f, "t_AB∘∇_A on M({n},1,0,0)"),
            ZeroComposition::NablaBTab(n) => write!(f, "∇_B∘t_AB on M({n},0,0,0)"),
            ZeroComposition::TbcNablaB(n) => write!(f, "t_BC∘∇_B on M(1,0,0,{n})"),
            ZeroComposition::NablaCTbc(n) => write!(f, "∇_C∘t_BC on M(0,0,0,{n})"),
            ZeroComposition::TbcTab => f.write_str("t_BC∘t_AB on M(3,0,0,0)"),
        }
    }
}

impl ZeroComposition {
    pub fn build(&self) -> Result<MorphismData, CatalogError> {
        let nb = |x, m, n| -> Result<MorphismData, CatalogError> { Ok(nabla(x, m, n)?.morphism) };
        let d4 = |k, n| -> Result<MorphismData, CatalogError> { Ok(build_degree4(k, n)?) };
        Ok(match *self {
            ZeroComposition::TabNablaA(n) => {
                compose(&d4(Degree4Kind::AB, n)?, &nb(Family::A, n, 1)?)?
            }
            ZeroComposition::NablaBTab(n) => {
                if n < 4 {
                    return Err(CatalogError::OutOfRange(self.to_string()));
                }
                compose(&nb(Family::B, n - 3, 0)?, &d4(Degree4Kind::AB, n)?)?
            }
            ZeroComposition::TbcNablaB(n) => {
                compose(&d4(Degree4Kind::BC, n + 1)?, &nb(Family::B, 1, n)?)?
            }
            ZeroComposition::NablaCTbc(n) => {
                compose(&nb(Family::C, 0, n + 3)?, &d4(Degree4Kind::BC, n)?)?
            }
            ZeroComposition::TbcTab => compose(&d4(Degree4Kind::BC, 0)?, &d4(Degree4Kind::AB, 3)?)?,
        })
    }

    /// The five families at small parameters.
    pub fn standard() -> Vec<ZeroComposition> {
        vec![
            ZeroComposition::TabNablaA(3),
            ZeroComposition::TabNablaA(4),
            ZeroComposition::NablaBTab(4),
            ZeroComposition::NablaBTab(5),
            ZeroComposition::TbcNablaB(0),
            ZeroComposition::TbcNablaB(1),
            ZeroComposition::NablaCTbc(0),
            ZeroComposition::NablaCTbc(1),
            ZeroComposition::TbcTab,
        ]
    }
}
