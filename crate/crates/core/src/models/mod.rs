//! Polynomial models of `S_A`, `S_B`, `S_C`, their highest parts, the
//! operators `θ^X_ij` and the degree-1 morphisms `∇_X = Σ_{i<j} d_ij ⊗ θ^X_ij`.
//!
//! | family | variables      | highest part                  | `θ_ij`                       |
//! |--------|----------------|-------------------------------|------------------------------|
//! | A      | `z_i`, `x_ij`  | kernel of a PDE system        | `∂/∂x_ij`                    |
//! | B      | `z_i`, `z*_i`  | quotient by `Σ z_i z*_i`      | `z*_i ∂/∂z_j − z*_j ∂/∂z_i`  |
//! | C      | `z*_i`, `x*_ij`| quotient by quadratic relations| multiplication by `x*_ij`   |
//!
//! The `(m, n)` bidegree component of the highest part is irreducible; its
//! basis comes from the canonical construction of [`CyclicModule`], so it has
//! the same matrices as [`crate::sl5::irreducible`].

mod reduce;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

pub use reduce::{BReducer, CReducer};

use crate::e510::{N, PAIRS};
use crate::exact::{Rational, SparseMatrix};
use crate::sl5::poly::{Mono, NoRelations, Poly, Reducer, Ring};
use crate::sl5::{irreducible, CyclicModule, NotInSpan, Sl5Module, Weight};
use crate::uea::PBWMonomial;
use crate::verma::{compose, MorphismData, VermaVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::C];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family {0:?} (expected A, B or C)")]
pub struct ParseFamilyError(pub String);

impl FromStr for Family {
    type Err = ParseFamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            _ => Err(ParseFamilyError(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("θ_ij needs i ≠ j (got {0}, {0})")]
    SameIndex(usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    NotInSpan(#[from] NotInSpan),
}

/// A polynomial ring with its canonical-form map.
pub struct Model {
    pub family: Family,
    pub ring: Ring,
    reducer: Box<dyn Reducer + Send>,
}

impl Model {
    fn new(family: Family) -> Self {
        let vars = match family {
            Family::A => [Ring::wedge_vars(1), Ring::wedge_vars(2)].concat(),
            Family::B => [Ring::wedge_vars(1), Ring::dual_vars(1)].concat(),
            Family::C => [Ring::dual_vars(1), Ring::dual_vars(2)].concat(),
        };
        let ring = Ring::new(vars);
        let reducer: Box<dyn Reducer + Send> = match family {
            Family::A => Box::new(NoRelations),
            Family::B => Box::new(BReducer::new(&ring)),
            Family::C => Box::new(CReducer::new(&ring)),
        };
        Model {
            family,
            ring,
            reducer,
        }
    }

    pub fn reducer(&self) -> &dyn Reducer {
        self.reducer.as_ref()
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        self.reducer.reduce(p)
    }

    /// `z_i` (A, B) or `z*_i` (B, C) as a variable index.
    pub fn z(&self, i: usize, dual: bool) -> usize {
        self.ring.var_of(dual, &[i])
    }

    /// `x_ij` (A) or `x*_ij` (C) for `i < j`.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.ring.var_of(self.family == Family::C, &[i, j])
    }

    pub fn format(&self, p: &Poly) -> String {
        self.ring.format(p)
    }
}

pub fn model(family: Family) -> &'static Model {
    static MODELS: OnceLock<[Model; 3]> = OnceLock::new();
    let ms = MODELS.get_or_init(|| {
        [
            Model::new(Family::A),
            Model::new(Family::B),
            Model::new(Family::C),
        ]
    });
    &ms[family as usize]
}

fn ordered(i: usize, j: usize) -> Result<(usize, usize, Rational), ModelError> {
    for k in [i, j] {
        if k >= N {
            return Err(ModelError::IndexOutOfRange(k));
        }
    }
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Ok((i, j, Rational::ONE)),
        std::cmp::Ordering::Greater => Ok((j, i, Rational::from_int(-1))),
        std::cmp::Ordering::Equal => Err(ModelError::SameIndex(i)),
    }
}

/// `θ^X_ij p` (0-based indices), in canonical form.
pub fn theta(family: Family, i: usize, j: usize, p: &Poly) -> Result<Poly, ModelError> {
    let (a, b, s) = ordered(i, j)?;
    let md = model(family);
    let ring = &md.ring;
    let out = match family {
        Family::A => ring.derivative(md.x(a, b), p),
        Family::B => {
            let t1 = ring.times_var(md.z(a, true), &ring.derivative(md.z(b, false), p));
            let t2 = ring.times_var(md.z(b, true), &ring.derivative(md.z(a, false), p));
            md.reduce(&t1.minus(&t2))
        }
        Family::C => md.reduce(&ring.times_var(md.x(a, b), p)),
    };
    Ok(out.scale(&s))
}

/// Output of [`reduce_high`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighElement {
    pub family: Family,
    pub poly: Poly,
    /// Family A only: whether the polynomial solves the defining PDE system.
    pub certified: Option<bool>,
}

/// Canonical form in `S_{X,high}` (B, C) or membership certificate (A).
pub fn reduce_high(family: Family, p: &Poly) -> HighElement {
    let md = model(family);
    match family {
        Family::A => HighElement {
            family,
            poly: p.clone(),
            certified: Some(satisfies_pde(p)),
        },
        _ => HighElement {
            family,
            poly: md.reduce(p),
            certified: None,
        },
    }
}

/// The PDE system cutting out `S_{A,high}`: for `a<b<c<d`
/// `(∂_ab ∂_cd − ∂_ac ∂_bd + ∂_ad ∂_bc) f = 0` and for `a<b<c`
/// `(∂_ab ∂_{z_c} − ∂_ac ∂_{z_b} + ∂_bc ∂_{z_a}) f = 0`. Tuples with repeated
/// indices give trivial equations and the rest are permutations of these.
pub fn satisfies_pde(p: &Poly) -> bool {
    let md = model(Family::A);
    let r = &md.ring;
    let dx = |a, b, q: &Poly| r.derivative(md.x(a, b), q);
    let dz = |a, q: &Poly| r.derivative(md.z(a, false), q);
    for a in 0..N {
        for b in a + 1..N {
            for c in b + 1..N {
                let mixed =
                    dx(a, b, &dz(c, p))
                        .minus(&dx(a, c, &dz(b, p)))
                        .plus(&dx(b, c, &dz(a, p)));
                if !mixed.is_zero() {
                    return false;
                }
                for d in c + 1..N {
                    let e = dx(a, b, &dx(c, d, p))
                        .minus(&dx(a, c, &dx(b, d, p)))
                        .plus(&dx(a, d, &dx(b, c, p)));
                    if !e.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Highest-weight vector of the `(m, n)` component:
/// A `z1^m x12^n`, B `z1^m z*5^n`, C `x*45^m z*5^n`.
pub fn hwv(family: Family, m: u32, n: u32) -> Poly {
    let md = model(family);
    let mono = match family {
        Family::A => Mono::pow(md.z(0, false), m).mul(&Mono::pow(md.x(0, 1), n)),
        Family::B => Mono::pow(md.z(0, false), m).mul(&Mono::pow(md.z(4, true), n)),
        Family::C => Mono::pow(md.x(3, 4), m).mul(&Mono::pow(md.z(4, true), n)),
    };
    Poly::basis(mono)
}

/// Highest weight of the `(m, n)` component.
pub fn lambda(family: Family, m: u32, n: u32) -> Weight {
    let (m, n) = (m as i64, n as i64);
    match family {
        Family::A => Weight::new(m, n, 0, 0),
        Family::B => Weight::new(m, 0, 0, n),
        Family::C => Weight::new(0, 0, m, n),
    }
}

/// One bidegree component of `S_{X,high}` with its polynomial basis.
pub struct Component {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub cyclic: CyclicModule,
    /// Shared with [`crate::sl5::irreducible`] when the matrices agree.
    pub module: Arc<Sl5Module>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.cyclic.dim()
    }

    pub fn basis(&self) -> &[Poly] {
        &self.cyclic.basis
    }

    /// Coordinates of a polynomial of this component, exactly checked.
    pub fn coords(&self, p: &Poly) -> Result<crate::exact::SparseVec, NotInSpan> {
        self.cyclic.coords(&model(self.family).ring, p)
    }
}

type ComponentMap = Mutex<HashMap<(Family, u32, u32), Arc<Component>>>;

/// The `(m, n)` component, built once per process.
pub fn component(family: Family, m: u32, n: u32) -> Arc<Component> {
    static CACHE: OnceLock<ComponentMap> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().unwrap().get(&(family, m, n)) {
        return c.clone();
    }
    let md = model(family);
    let lam = lambda(family, m, n);
    let cyclic = CyclicModule::build(
        &md.ring,
        md.reducer(),
        &hwv(family, m, n),
        &format!("F{lam}"),
    );
    let irr = irreducible(lam).expect("component weights are dominant");
    let module = if *irr == cyclic.module {
        irr
    } else {
        Arc::new(cyclic.module.clone())
    };
    let c = Arc::new(Component {
        family,
        m,
        n,
        cyclic,
        module,
    });
    cache
        .lock()
        .unwrap()
        .entry((family, m, n))
        .or_insert(c)
        .clone()
}

/// The zero module, used as the formal target of a map that vanishes
/// because its would-be target component does not exist.
pub fn zero_module() -> Arc<Sl5Module> {
    static Z: OnceLock<Arc<Sl5Module>> = OnceLock::new();
    Z.get_or_init(|| {
        let z = || std::array::from_fn(|_| SparseMatrix::zeros(0, 0));
        Arc::new(Sl5Module::new("0".into(), Vec::new(), z(), z(), None))
    })
    .clone()
}

/// Bidegree of the component `∇_X` maps the `(m, n)` component to, or `None`
/// when `∇_X` vanishes there.
pub fn nabla_target(family: Family, m: u32, n: u32) -> Option<(u32, u32)> {
    match family {
        Family::A => (n > 0).then(|| (m, n - 1)),
        Family::B => (m > 0).then(|| (m - 1, n + 1)),
        Family::C => Some((m + 1, n)),
    }
}

/// `∇_X` restricted to the `(m, n)` component.
#[derive(Clone, Debug)]
pub struct Nabla {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub morphism: MorphismData,
    /// Set when `∇_X` is identically zero on this component (its target is
    /// then the zero module).
    pub zero_case: bool,
}

/// `∇_X = Σ_{i<j} d_ij ⊗ θ^X_ij` on the `(m, n)` component.
pub fn nabla(family: Family, m: u32, n: u32) -> Result<Nabla, ModelError> {
    let src = component(family, m, n);
    let label = format!("nabla_{family}{}", lambda(family, m, n));
    let Some((m2, n2)) = nabla_target(family, m, n) else {
        // every θ kills the component
        for p in src.basis() {
            for &(i, j) in PAIRS.iter() {
                debug_assert!(theta(family, i, j, p)?.is_zero());
            }
        }
        return Ok(Nabla {
            family,
            m,
            n,
            morphism: MorphismData::zero(label, src.module.clone(), zero_module(), 1),
            zero_case: true,
        });
    };
    let tgt = component(family, m2, n2);
    let table: Vec<VermaVector> = src
        .basis()
        .par_iter()
        .map(|p| -> Result<VermaVector, ModelError> {
            let mut v = VermaVector::new();
            for (k, &(i, j)) in PAIRS.iter().enumerate() {
                let img = theta(family, i, j, p)?;
                for (b, c) in tgt.coords(&img)?.iter() {
                    v.add_term((PBWMonomial::d_pair(k), *b), c.clone());
                }
            }
            Ok(v)
        })
        .collect::<Result<_, _>>()?;
    let morphism = MorphismData::new(label, src.module.clone(), tgt.module.clone(), 1, table)
        .expect("degree-1 table");
    Ok(Nabla {
        family,
        m,
        n,
        morphism,
        zero_case: false,
    })
}

/// Outcome of [`check_nabla_squared`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NablaSquared {
    /// `θ_ab θ_cd − θ_ac θ_bd + θ_ad θ_bc` vanishes for `a<b<c<d` on the basis.
    pub identities: bool,
    /// The θ's pairwise commute on the basis.
    pub commute: bool,
    /// `∇_X ∘ ∇_X` is the zero map.
    pub composition_zero: bool,
}

impl NablaSquared {
    pub fn holds(&self) -> bool {
        self.identities && self.commute && self.composition_zero
    }
}

/// Checks `∇_X² = 0` on the `(m, n)` component, both through the quadratic
/// identities for the θ's and by composing the maps.
pub fn check_nabla_squared(family: Family, m: u32, n: u32) -> Result<NablaSquared, ModelError> {
    let src = component(family, m, n);
    let th = |i: usize, j: usize, p: &Poly| theta(family, i, j, p);
    let mut identities = true;
    let mut commute = true;
    for p in src.basis() {
        let once: Vec<Poly> = PAIRS
            .iter()
            .map(|&(i, j)| th(i, j, p))
            .collect::<Result<_, _>>()?;
        let twice = |k: usize, l: usize| -> Result<Poly, ModelError> {
            let (i, j) = PAIRS[l];
            th(i, j, &once[k])
        };
        let pi = |a: usize, b: usize| PAIRS.iter().position(|&x| x == (a, b)).unwrap();
        for a in 0..N {
            for b in a + 1..N {
                for c in b + 1..N {
                    for d in c + 1..N {
                        let e = twice(pi(c, d), pi(a, b))?
                            .minus(&twice(pi(b, d), pi(a, c))?)
                            .plus(&twice(pi(b, c), pi(a, d))?);
                        identities &= e.is_zero();
                    }
                }
            }
        }
        for k in 0..PAIRS.len() {
            for l in k + 1..PAIRS.len() {
                commute &= twice(k, l)? == twice(l, k)?;
            }
        }
    }
    let first = nabla(family, m, n)?;
    let composition_zero = match nabla_target(family, m, n) {
        None => first.morphism.is_zero(),
        Some((m2, n2)) => {
            let second = nabla(family, m2, n2)?;
            compose(&second.morphism, &first.morphism)
                .expect("consecutive components")
                .is_zero()
        }
    };
    Ok(NablaSquared {
        identities,
        commute,
        composition_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl5::weyl_dim;

    #[test]
    fn theta_examples() {
        let p = hwv(Family::A, 2, 1);
        assert_eq!(theta(Family::A, 0, 1, &p).unwrap(), hwv(Family::A, 2, 0));
        assert_eq!(
            theta(Family::A, 1, 0, &p).unwrap(),
            hwv(Family::A, 2, 0).neg()
        );
        assert_eq!(theta(Family::A, 2, 2, &p), Err(ModelError::SameIndex(2)));

        let b = model(Family::B);
        let z1z2 = Poly::basis(Mono::pow(b.z(0, false), 1).times_var(b.z(1, false)));
        let expect = Poly::basis(Mono::ONE.times_var(b.z(0, true)).times_var(b.z(0, false))).minus(
            &Poly::basis(Mono::ONE.times_var(b.z(1, true)).times_var(b.z(1, false))),
        );
        assert_eq!(theta(Family::B, 0, 1, &z1z2).unwrap(), expect);

        let c = model(Family::C);
        assert_eq!(
            theta(Family::C, 0, 1, &Poly::basis(Mono::ONE)).unwrap(),
            Poly::basis(Mono::ONE.times_var(c.x(0, 1)))
        );
    }

    #[test]
    fn reducer_examples() {
        let b = model(Family::B);
        let p = Poly::basis(Mono::ONE.times_var(b.z(4, false)).times_var(b.z(4, true)));
        let mut expect = Poly::new();
        for i in 0..4 {
            expect.add_term(
                Mono::ONE.times_var(b.z(i, false)).times_var(b.z(i, true)),
                Rational::from_int(-1),
            );
        }
        assert_eq!(reduce_high(Family::B, &p).poly, expect);

        let c = model(Family::C);
        let x = |i, j| Mono::ONE.times_var(c.x(i, j));
        let pl = Poly::basis(x(0, 1).mul(&x(2, 3)))
            .minus(&Poly::basis(x(0, 2).mul(&x(1, 3))))
            .plus(&Poly::basis(x(0, 3).mul(&x(1, 2))));
        assert!(reduce_high(Family::C, &pl).poly.is_zero());
        let q = |i| Mono::ONE.times_var(c.z(i, true));
        let mixed = Poly::basis(x(0, 1).mul(&q(2)))
            .minus(&Poly::basis(x(0, 2).mul(&q(1))))
            .plus(&Poly::basis(x(1, 2).mul(&q(0))));
        assert!(reduce_high(Family::C, &mixed).poly.is_zero());

        let h = reduce_high(Family::A, &hwv(Family::A, 3, 2));
        assert_eq!(h.certified, Some(true));
        let a = model(Family::A);
        let bad = Poly::basis(Mono::ONE.times_var(a.x(0, 1)).times_var(a.x(2, 3)));
        assert_eq!(reduce_high(Family::A, &bad).certified, Some(false));
    }

    #[test]
    fn hwv_weights() {
        for f in Family::ALL {
            for (m, n) in [(0, 0), (1, 0), (0, 1), (2, 3)] {
                let p = hwv(f, m, n);
                let md = model(f);
                let w = Weight::from_epsilon(md.ring.weight_of(p.keys().next().unwrap()));
                assert_eq!(w, lambda(f, m, n), "{f} {m} {n}");
                for i in 0..4 {
                    assert!(md.reduce(&md.ring.eab(i, i + 1, &p)).is_zero());
                }
            }
        }
    }

    #[test]
    fn small_components() {
        for f in Family::ALL {
            for (m, n) in [(0, 0), (1, 1), (2, 0), (0, 2)] {
                let c = component(f, m, n);
                assert_eq!(c.dim() as u64, weyl_dim(lambda(f, m, n)), "{f} {m} {n}");
                assert!(Arc::ptr_eq(
                    &c.module,
                    &irreducible(lambda(f, m, n)).unwrap()
                ));
            }
        }
    }

    #[test]
    fn nabla_examples() {
        // ∇_A(z1^m x12) = d12 ⊗ z1^m
        let nb = nabla(Family::A, 2, 1).unwrap();
        let expect = VermaVector::basis((PBWMonomial::d_pair(0), 0));
        assert_eq!(nb.morphism.table[0], expect);
        assert!(nabla(Family::A, 3, 0).unwrap().zero_case);
        assert!(nabla(Family::B, 0, 2).unwrap().zero_case);
        let c = nabla(Family::C, 0, 0).unwrap();
        assert!(!c.zero_case && !c.morphism.is_zero());
    }
}
