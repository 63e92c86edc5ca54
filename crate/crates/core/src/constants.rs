//! Seshadri constants `ε` and approximation constants `α` on the cubic surface.
//!
//! For a nef class `D` and a point `x` off the 27 lines:
//!
//! * `ε_x(D) = min(D.C for C in S, D.h / 2)`, where `S` is the set of 27 conic
//!   pencils and `h` the hyperplane class;
//! * `α_x(D) = ε_x(D)` when the tangent-plane section at `x` is cuspidal, or
//!   nodal with branch slopes defined over the completion but not over the
//!   ground field; otherwise `α_x(D) = min(D.C for C in S)`.
//!
//! Every result carries the curves that achieve the minimum.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::picard::{self, hyperplane, is_nef, pair, pencil_names, pencils27, DivisorClass};
use crate::{Error, Result};

/// An exact rational number or `+∞`.
///
/// Ordering puts `Infinity` above every finite value, so `min` treats it as
/// the neutral element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinity,
}

impl ExtendedRational {
    pub fn integer(n: i64) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExtendedRational::Finite(BigRational::new(n.into(), d.into()))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtendedRational::Finite(q) => Some(q),
            ExtendedRational::Infinity => None,
        }
    }

    /// Nearest `f64`; `∞` maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedRational::Finite(q) => q.to_f64().unwrap_or(f64::NAN),
            ExtendedRational::Infinity => f64::INFINITY,
        }
    }

    /// Multiplication by a positive rational; `∞` stays `∞`.
    pub fn scale(&self, factor: &BigRational) -> Self {
        debug_assert!(factor.is_positive());
        match self {
            ExtendedRational::Finite(q) => ExtendedRational::Finite(q * factor),
            ExtendedRational::Infinity => ExtendedRational::Infinity,
        }
    }
}

impl From<BigRational> for ExtendedRational {
    fn from(q: BigRational) -> Self {
        ExtendedRational::Finite(q)
    }
}

impl fmt::Display for ExtendedRational {
    /// `p/q` (or `p` for integers), and `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(q) => write!(f, "{q}"),
            ExtendedRational::Infinity => write!(f, "inf"),
        }
    }
}

/// Arithmetic type of the tangent-plane section `C_x` at the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TangentType {
    Cuspidal,
    /// Nodal, branch slopes in the completion `k_v` but not in `k`.
    NodalSlopesInKvNotK,
    /// Nodal, branch slopes in `k`, or not even in `k_v`.
    NodalSlopesInKOrNotInKv,
}

impl TangentType {
    pub const ALL: [TangentType; 3] = [
        TangentType::Cuspidal,
        TangentType::NodalSlopesInKvNotK,
        TangentType::NodalSlopesInKOrNotInKv,
    ];

    /// Whether `α` coincides with `ε` for this tangent type.
    pub fn alpha_equals_seshadri(self) -> bool {
        !matches!(self, TangentType::NodalSlopesInKOrNotInKv)
    }
}

/// A curve through the point achieving a constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// The member through `x` of one of the 27 conic pencils.
    Pencil(picard::ClassName),
    /// The tangent-plane section `C_x`, of class `h` with a double point at `x`.
    HyperplaneSection,
}

impl Certificate {
    /// The quantity this curve contributes to the minimum for `d`:
    /// `D.C` for a pencil, `D.h / 2` for the tangent section.
    pub fn evaluate(&self, d: &DivisorClass) -> BigRational {
        match self {
            Certificate::Pencil(name) => {
                let c = name.class().expect("certificate names are valid");
                BigRational::from_integer(pair(d, &c))
            }
            Certificate::HyperplaneSection => half(pair(d, &hyperplane())),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Pencil(name) => write!(f, "{name}"),
            Certificate::HyperplaneSection => write!(f, "hyperplane-section"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantResult {
    pub value: ExtendedRational,
    pub certificates: Vec<Certificate>,
}

fn half(n: BigInt) -> BigRational {
    BigRational::new(n, BigInt::from(2))
}

fn require_nef(d: &DivisorClass) -> Result<()> {
    if is_nef(d) {
        Ok(())
    } else {
        Err(Error::NotNef(Box::new(d.clone())))
    }
}

fn argmin(candidates: Vec<(Certificate, BigRational)>) -> ConstantResult {
    let min = candidates
        .iter()
        .map(|(_, v)| v)
        .min()
        .expect("candidate list is never empty")
        .clone();
    let certificates = candidates
        .into_iter()
        .filter(|(_, v)| *v == min)
        .map(|(c, _)| c)
        .collect();
    ConstantResult { value: min.into(), certificates }
}

fn pencil_candidates(d: &DivisorClass) -> Vec<(Certificate, BigRational)> {
    pencil_names()
        .into_iter()
        .zip(pencils27())
        .map(|(name, c)| (Certificate::Pencil(name), BigRational::from_integer(pair(d, c))))
        .collect()
}

/// `ε_x(D)` for a point not on a (−1)-curve.
pub fn seshadri(d: &DivisorClass) -> Result<ConstantResult> {
    require_nef(d)?;
    let mut candidates = pencil_candidates(d);
    candidates.push((Certificate::HyperplaneSection, half(pair(d, &hyperplane()))));
    Ok(argmin(candidates))
}

/// `α_x(D)` for a point not on a (−1)-curve with the given tangent type.
pub fn alpha(d: &DivisorClass, t: TangentType) -> Result<ConstantResult> {
    if t.alpha_equals_seshadri() {
        return seshadri(d);
    }
    require_nef(d)?;
    Ok(argmin(pencil_candidates(d)))
}

/// `(ε_x(-K), α_x(-K))`, including points on one of the 27 lines.
pub fn anticanonical_constants(on_line: bool, t: TangentType) -> (ExtendedRational, ExtendedRational) {
    if on_line {
        return (ExtendedRational::integer(1), ExtendedRational::integer(1));
    }
    let anti_k = hyperplane();
    let eps = seshadri(&anti_k).expect("-K is nef").value;
    let alpha = alpha(&anti_k, t).expect("-K is nef").value;
    (eps, alpha)
}

/// Brute-force `ε` through the blow-up at a seventh general point.
///
/// On the degree-two del Pezzo surface `Y` the (−1)-curves are the 56 classes
/// `Ei`, `L - Ei - Ej`, `2L - (five Ei)` and `3L - sum E - Ek`, and
/// `π*D - γ E7` is nef iff it meets all of them non-negatively. So `ε` is the
/// minimum of `(π*D . ℓ) / (E7 . ℓ)` over those `ℓ` with `E7 . ℓ > 0`.
///
/// Independent of [`seshadri`] apart from the nef check.
pub fn seshadri_oracle(d: &DivisorClass) -> Result<ExtendedRational> {
    require_nef(d)?;
    type V8 = [i64; 8];
    fn pair8(x: &[BigInt; 8], y: &V8) -> BigInt {
        let mut acc = &x[0] * y[0];
        for i in 1..8 {
            acc -= &x[i] * y[i];
        }
        acc
    }
    let mut exceptional: Vec<V8> = Vec::with_capacity(56);
    for i in 1..=7 {
        let mut v = [0; 8];
        v[i] = 1;
        exceptional.push(v);
    }
    for i in 1..=7 {
        for j in i + 1..=7 {
            let mut v = [1, 0, 0, 0, 0, 0, 0, 0];
            v[i] = -1;
            v[j] = -1;
            exceptional.push(v);
            // conic through the five points other than i, j
            let mut w = [2, -1, -1, -1, -1, -1, -1, -1];
            w[i] = 0;
            w[j] = 0;
            exceptional.push(w);
        }
    }
    for k in 1..=7 {
        let mut v = [3, -1, -1, -1, -1, -1, -1, -1];
        v[k] = -2;
        exceptional.push(v);
    }
    let k8: V8 = [-3, 1, 1, 1, 1, 1, 1, 1];
    let dot = |x: &V8, y: &V8| x[0] * y[0] - (1..8).map(|i| x[i] * y[i]).sum::<i64>();
    assert_eq!(exceptional.len(), 56);
    assert!(exceptional.iter().all(|l| dot(l, l) == -1 && dot(l, &k8) == -1));

    let mut pulled_back: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
    for (slot, c) in pulled_back.iter_mut().zip(d.coeffs()) {
        *slot = c.clone();
    }
    let e7: V8 = [0, 0, 0, 0, 0, 0, 0, 1];
    let best = exceptional
        .iter()
        .filter(|l| dot(&e7, l) > 0)
        .map(|l| BigRational::new(pair8(&pulled_back, l), BigInt::from(dot(&e7, l))))
        .min()
        .map(ExtendedRational::Finite)
        .unwrap_or(ExtendedRational::Infinity);
    Ok(best)
}

/// Residue-field code of a branch point `q` on the normalisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueCode {
    /// `κ(q)` is not contained in `k_v`: no `k`-points approach along this branch.
    NotInCompletion = 0,
    /// `κ(q) = k`.
    GroundField = 1,
    /// `κ(q)` is a proper extension of `k` inside `k_v`.
    InCompletion = 2,
}

impl ResidueCode {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for ResidueCode {
    type Error = Error;
    fn try_from(r: u8) -> Result<Self> {
        match r {
            0 => Ok(ResidueCode::NotInCompletion),
            1 => Ok(ResidueCode::GroundField),
            2 => Ok(ResidueCode::InCompletion),
            _ => Err(Error::InvalidArgument(format!("residue code must be 0, 1 or 2, got {r}"))),
        }
    }
}

/// One branch of a rational curve through the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BranchDatum {
    multiplicity: u32,
    residue: ResidueCode,
}

impl BranchDatum {
    pub fn new(multiplicity: u32, residue: ResidueCode) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::InvalidArgument("branch multiplicity must be at least 1".into()));
        }
        Ok(BranchDatum { multiplicity, residue })
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn residue(&self) -> ResidueCode {
        self.residue
    }
}

/// `α` at a point of a rational curve of degree `d`: `min d / (r_q m_q)` over
/// the branches, a zero residue code contributing `∞`.
pub fn alpha_rational_curve(d: u64, branches: &[BranchDatum]) -> Result<ExtendedRational> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    if branches.is_empty() {
        return Err(Error::NoBranches);
    }
    Ok(branches
        .iter()
        .map(|b| match b.residue.code() {
            0 => ExtendedRational::Infinity,
            r => ExtendedRational::Finite(BigRational::new(
                BigInt::from(d),
                BigInt::from(u64::from(r) * u64::from(b.multiplicity)),
            )),
        })
        .min()
        .expect("branches is nonempty"))
}

/// Change of field for a sequence's approximation constant:
/// `α_K = (d / m_v) α_k` with `d = [K:k]` and `m_v = [K_v:k_v]`.
pub fn rescale_alpha_field(alpha_k: &ExtendedRational, d: u64, m_v: u64) -> Result<ExtendedRational> {
    if m_v == 0 || d < m_v {
        return Err(Error::InvalidArgument(format!(
            "need d >= m_v >= 1, got d = {d}, m_v = {m_v}"
        )));
    }
    Ok(alpha_k.scale(&BigRational::new(d.into(), m_v.into())))
}

/// `α_x(D) - ε_x(D)` for a `k`-rational point; non-negative by the Liouville
/// bound `α ≥ ε / [k(x):k]`.
pub fn liouville_gap(d: &DivisorClass, t: TangentType) -> Result<BigRational> {
    let eps = seshadri(d)?.value;
    let alpha = alpha(d, t)?.value;
    match (alpha, eps) {
        (ExtendedRational::Finite(a), ExtendedRational::Finite(e)) => Ok(a - e),
        _ => Err(Error::InvalidArgument("constants on the cubic surface are finite".into())),
    }
}

/// Re-evaluates every certificate and checks it reproduces the value.
pub fn certificates_coherent(d: &DivisorClass, result: &ConstantResult) -> bool {
    !result.certificates.is_empty()
        && result
            .certificates
            .iter()
            .all(|c| ExtendedRational::Finite(c.evaluate(d)) == result.value)
}
