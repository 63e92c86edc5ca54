//! Rational polyhedral cones in the Néron–Severi space, and the nef cone with
//! its subcones.
//!
//! A half-space is given by a class `n` and reads `n.D >= 0` under the
//! intersection pairing. The subcones come from comparing a nef class against
//! the 27 conic pencils `S` and half the hyperplane degree:
//!
//! * `Γ(C)`: `D.C <= D.C'` for every `C'` in `S`, and `2 D.C <= D.h`;
//! * `Γ(h)`: `D.h <= 2 D.C'` for every `C'` in `S`.

pub mod dd;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};

use crate::picard::{self, hyperplane, lines27, pair, pencils27, ClassName, DivisorClass, RANK};
use crate::{Error, Result};

/// The constraint `normal . D >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    normal: DivisorClass,
}

impl HalfSpace {
    /// Builds the half-space, reducing the normal to primitive form.
    pub fn new(normal: DivisorClass) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(HalfSpace { normal: normal.primitive() })
    }

    pub fn normal(&self) -> &DivisorClass {
        &self.normal
    }

    pub fn contains(&self, d: &DivisorClass) -> bool {
        !pair(&self.normal, d).is_negative()
    }

    pub fn is_tight(&self, d: &DivisorClass) -> bool {
        pair(&self.normal, d).is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Outside,
    Boundary,
    Interior,
}

/// A cone with both descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    halfspaces: Vec<HalfSpace>,
    rays: Vec<DivisorClass>,
}

impl Cone {
    /// Computes the extreme rays of the intersection of `halfspaces`.
    pub fn from_halfspaces(halfspaces: Vec<HalfSpace>) -> Result<Self> {
        let rays = extreme_rays(&halfspaces)?;
        Ok(Cone { halfspaces, rays })
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Extreme rays, primitive and sorted lexicographically.
    pub fn rays(&self) -> &[DivisorClass] {
        &self.rays
    }

    pub fn contains(&self, d: &DivisorClass) -> Membership {
        contains(self, d)
    }

    /// Rank of the defining constraints tight at `d`.
    pub fn tight_rank(&self, d: &DivisorClass) -> usize {
        dd::tight_rank(&functionals(&self.halfspaces), d.coeffs())
    }

    /// True when `d` lies in the cone and spans one of its extreme rays.
    pub fn is_extreme_ray(&self, d: &DivisorClass) -> bool {
        !d.is_zero() && contains(self, d) != Membership::Outside && self.tight_rank(d) == RANK - 1
    }
}

fn functionals(halfspaces: &[HalfSpace]) -> Vec<Vec<num_bigint::BigInt>> {
    halfspaces.iter().map(|h| h.normal.as_functional()).collect()
}

/// Extreme rays of the intersection of the given half-spaces, exactly.
pub fn extreme_rays(halfspaces: &[HalfSpace]) -> Result<Vec<DivisorClass>> {
    let rays = dd::extreme_rays(&functionals(halfspaces))?;
    Ok(rays
        .into_iter()
        .map(|v| {
            let coeffs: [num_bigint::BigInt; RANK] =
                v.try_into().expect("rays live in the rank-7 lattice");
            DivisorClass::new(coeffs)
        })
        .collect())
}

pub fn contains(cone: &Cone, d: &DivisorClass) -> Membership {
    let mut tight = false;
    for h in &cone.halfspaces {
        let v = pair(&h.normal, d);
        if v.is_negative() {
            return Membership::Outside;
        }
        tight |= v.is_zero();
    }
    if tight {
        Membership::Boundary
    } else {
        Membership::Interior
    }
}

/// Which subcone of the nef cone to build.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubconeSelector {
    /// `Γ(C)` for a pencil class `C`.
    Pencil(DivisorClass),
    /// `Γ(h)`.
    Hyperplane,
}

impl SubconeSelector {
    pub fn pencil(name: ClassName) -> Result<Self> {
        let class = picard::standard_class(name)?;
        if !name.is_pencil() {
            return Err(Error::NotAPencil(Box::new(class)));
        }
        Ok(SubconeSelector::Pencil(class))
    }
}

fn line_halfspaces() -> Vec<HalfSpace> {
    lines27()
        .iter()
        .map(|l| HalfSpace::new(l.clone()).expect("lines are nonzero"))
        .collect()
}

pub fn nef_halfspaces() -> Vec<HalfSpace> {
    line_halfspaces()
}

/// Defining half-spaces of a subcone, without computing its rays.
pub fn subcone_halfspaces(sel: &SubconeSelector) -> Result<Vec<HalfSpace>> {
    let h = hyperplane();
    let mut out = line_halfspaces();
    match sel {
        SubconeSelector::Pencil(c) => {
            if !pencils27().contains(c) {
                return Err(Error::NotAPencil(Box::new(c.clone())));
            }
            for other in pencils27().iter().filter(|p| *p != c) {
                out.push(HalfSpace::new(other - c)?);
            }
            out.push(HalfSpace::new(&h - &c.scale(&2.into()))?);
        }
        SubconeSelector::Hyperplane => {
            for p in pencils27() {
                out.push(HalfSpace::new(&p.scale(&2.into()) - &h)?);
            }
        }
    }
    Ok(out)
}

/// The nef cone: 27 line constraints. Computed once and shared.
pub fn nef_cone() -> Arc<Cone> {
    static NEF: OnceLock<Arc<Cone>> = OnceLock::new();
    NEF.get_or_init(|| {
        Arc::new(Cone::from_halfspaces(line_halfspaces()).expect("the nef cone is pointed"))
    })
    .clone()
}

/// `Γ(C)` or `Γ(h)`. Results are memoised per selector.
pub fn subcone(sel: &SubconeSelector) -> Result<Arc<Cone>> {
    static CACHE: OnceLock<Mutex<HashMap<SubconeSelector, Arc<Cone>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cone cache poisoned").get(sel) {
        return Ok(c.clone());
    }
    let cone = Arc::new(Cone::from_halfspaces(subcone_halfspaces(sel)?)?);
    cache
        .lock()
        .expect("cone cache poisoned")
        .insert(sel.clone(), cone.clone());
    Ok(cone)
}
