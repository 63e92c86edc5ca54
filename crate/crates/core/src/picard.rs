//! The Néron–Severi lattice of a smooth cubic surface.
//!
//! Classes are written in the basis `{L, E1, .., E6}` where `L` is the pull-back
//! of a line in the plane and `Ei` are the exceptional curves over the six
//! blown-up points. The intersection form is `diag(1, -1, .., -1)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Rank of the lattice.
pub const RANK: usize = 7;

/// A divisor class `a L + b1 E1 + .. + b6 E6` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass([BigInt; RANK]);

impl DivisorClass {
    pub fn new(coeffs: [BigInt; RANK]) -> Self {
        DivisorClass(coeffs)
    }

    pub fn from_ints(coeffs: [i64; RANK]) -> Self {
        DivisorClass(coeffs.map(BigInt::from))
    }

    pub fn zero() -> Self {
        DivisorClass(std::array::from_fn(|_| BigInt::zero()))
    }

    pub fn coeffs(&self) -> &[BigInt; RANK] {
        &self.0
    }

    /// Coefficients as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<[i64; RANK]> {
        let mut out = [0i64; RANK];
        for (o, c) in out.iter_mut().zip(&self.0) {
            *o = c.to_i64()?;
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The linear functional `D -> self.D` as a coefficient row, i.e. the
    /// vector `v` with `v . coeffs(D) = pair(self, D)` under the Euclidean
    /// dot product.
    pub fn as_functional(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { c.clone() } else { -c })
            .collect()
    }

    /// Divides out the gcd of the coefficients (the zero class is returned unchanged).
    pub fn primitive(&self) -> Self {
        let g = crate::linalg::content(&self.0);
        if g.is_zero() {
            return self.clone();
        }
        DivisorClass(self.0.clone().map(|c| c / &g))
    }

    pub fn is_primitive(&self) -> bool {
        crate::linalg::content(&self.0) == BigInt::from(1)
    }

    pub fn scale(&self, m: &BigInt) -> Self {
        DivisorClass(self.0.clone().map(|c| c * m))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Serialised as an array of seven integers. Coefficients outside the i64
// range are written as decimal strings.
impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(RANK))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        let raw: Vec<Coeff> = Vec::deserialize(d)?;
        if raw.len() != RANK {
            return Err(de::Error::invalid_length(raw.len(), &"seven coefficients"));
        }
        let mut coeffs: [BigInt; RANK] = Default::default();
        for (slot, c) in coeffs.iter_mut().zip(raw) {
            *slot = match c {
                Coeff::Int(x) => BigInt::from(x),
                Coeff::Text(t) => t.parse().map_err(de::Error::custom)?,
            };
        }
        Ok(DivisorClass(coeffs))
    }
}

impl From<[i64; RANK]> for DivisorClass {
    fn from(coeffs: [i64; RANK]) -> Self {
        DivisorClass::from_ints(coeffs)
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.map(|c| -c))
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(&BigInt::from(self))
    }
}

/// The intersection pairing `a a' - sum bi bi'`.
pub fn pair(d1: &DivisorClass, d2: &DivisorClass) -> BigInt {
    let mut acc = &d1.0[0] * &d2.0[0];
    for i in 1..RANK {
        acc -= &d1.0[i] * &d2.0[i];
    }
    acc
}

/// Symbolic names for the classes that appear in the theory.
///
/// Indices are 1-based, as in `E1 .. E6`; two-index names require `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassName {
    /// Pull-back of a line in the plane.
    L,
    /// Exceptional curve over the i-th point.
    E(u8),
    /// Line through two points, `L - Ei - Ej`.
    F(u8, u8),
    /// Conic through five points, `2L - sum E + Ei`.
    G(u8),
    /// Canonical class.
    K,
    AntiK,
    /// Hyperplane class of the anticanonical embedding (equal to `-K`).
    Hyperplane,
    /// Pencil of lines through the i-th point, `L - Ei`.
    Li(u8),
    /// Pencil of conics through the four points other than i, j.
    Lij(u8, u8),
    /// Pencil of cubics through all six points, nodal at the i-th.
    B(u8),
}

impl ClassName {
    fn check(&self) -> Result<()> {
        let ok1 = |i: u8| (1..=6).contains(&i);
        let ok2 = |i: u8, j: u8| ok1(i) && ok1(j) && i < j;
        let valid = match *self {
            ClassName::E(i) | ClassName::G(i) | ClassName::Li(i) | ClassName::B(i) => ok1(i),
            ClassName::F(i, j) | ClassName::Lij(i, j) => ok2(i, j),
            ClassName::L | ClassName::K | ClassName::AntiK | ClassName::Hyperplane => true,
        };
        if valid {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(self.to_string()))
        }
    }

    /// True for the 27 conic-pencil names `Li`, `Lij`, `Bi`.
    pub fn is_pencil(&self) -> bool {
        matches!(self, ClassName::Li(_) | ClassName::Lij(..) | ClassName::B(_))
    }

    pub fn class(&self) -> Result<DivisorClass> {
        standard_class(*self)
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassName::L => write!(f, "L"),
            ClassName::E(i) => write!(f, "E{i}"),
            ClassName::F(i, j) => write!(f, "F{i}{j}"),
            ClassName::G(i) => write!(f, "G{i}"),
            ClassName::K => write!(f, "K"),
            ClassName::AntiK => write!(f, "-K"),
            ClassName::Hyperplane => write!(f, "h"),
            ClassName::Li(i) => write!(f, "L{i}"),
            ClassName::Lij(i, j) => write!(f, "L{i}{j}"),
            ClassName::B(i) => write!(f, "B{i}"),
        }
    }
}

impl FromStr for ClassName {
    type Err = Error;

    /// Parses the names produced by `Display`; underscores and braces are
    /// ignored so `L_{23}` reads the same as `L23`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
        let unknown = || Error::UnknownClassName(s.to_string());
        let name = match cleaned.as_str() {
            "L" => ClassName::L,
            "K" => ClassName::K,
            "-K" | "antiK" | "anti-K" => ClassName::AntiK,
            "h" | "hyperplane" => ClassName::Hyperplane,
            _ => {
                let mut chars = cleaned.chars();
                let head = chars.next().ok_or_else(unknown)?;
                let digits: Vec<u8> = chars
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<_>>()
                    .ok_or_else(unknown)?;
                match (head, digits.as_slice()) {
                    ('E', [i]) => ClassName::E(*i),
                    ('F', [i, j]) => ClassName::F(*i, *j),
                    ('G', [i]) => ClassName::G(*i),
                    ('L', [i]) => ClassName::Li(*i),
                    ('L', [i, j]) => ClassName::Lij(*i, *j),
                    ('B', [i]) => ClassName::B(*i),
                    _ => return Err(unknown()),
                }
            }
        };
        name.check()?;
        Ok(name)
    }
}

fn unit(slot: usize) -> [i64; RANK] {
    let mut v = [0; RANK];
    v[slot] = 1;
    v
}

/// Resolves a class name to its coefficient vector.
pub fn standard_class(name: ClassName) -> Result<DivisorClass> {
    name.check()?;
    let all_e = [0, -1, -1, -1, -1, -1, -1];
    let v: [i64; RANK] = match name {
        ClassName::L => unit(0),
        ClassName::E(i) => unit(i as usize),
        ClassName::F(i, j) => {
            let mut v = unit(0);
            v[i as usize] = -1;
            v[j as usize] = -1;
            v
        }
        ClassName::Lij(i, j) => {
            let mut v = all_e;
            v[0] = 2;
            v[i as usize] = 0;
            v[j as usize] = 0;
            v
        }
        ClassName::G(i) => {
            let mut v = all_e;
            v[0] = 2;
            v[i as usize] = 0;
            v
        }
        ClassName::K => [-3, 1, 1, 1, 1, 1, 1],
        ClassName::AntiK | ClassName::Hyperplane => [3, -1, -1, -1, -1, -1, -1],
        ClassName::Li(i) => {
            let mut v = unit(0);
            v[i as usize] = -1;
            v
        }
        ClassName::B(i) => {
            let mut v = all_e;
            v[0] = 3;
            v[i as usize] = -2;
            v
        }
    };
    Ok(DivisorClass::from_ints(v))
}

pub fn canonical() -> DivisorClass {
    DivisorClass::from_ints([-3, 1, 1, 1, 1, 1, 1])
}

/// The hyperplane class `h = -K`.
pub fn hyperplane() -> DivisorClass {
    DivisorClass::from_ints([3, -1, -1, -1, -1, -1, -1])
}

fn index_pairs() -> impl Iterator<Item = (u8, u8)> {
    (1..=6u8).flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
}

/// Names of the 27 lines: `Ei`, then `Fij`, then `Gi`.
pub fn line_names() -> Vec<ClassName> {
    (1..=6)
        .map(ClassName::E)
        .chain(index_pairs().map(|(i, j)| ClassName::F(i, j)))
        .chain((1..=6).map(ClassName::G))
        .collect()
}

/// Names of the 27 conic pencils: `Li`, then `Lij`, then `Bi`.
pub fn pencil_names() -> Vec<ClassName> {
    (1..=6)
        .map(ClassName::Li)
        .chain(index_pairs().map(|(i, j)| ClassName::Lij(i, j)))
        .chain((1..=6).map(ClassName::B))
        .collect()
}

fn build_validated(names: Vec<ClassName>, square: i64, anti_k_degree: i64) -> Vec<DivisorClass> {
    let anti_k = hyperplane();
    let classes: Vec<DivisorClass> = names
        .into_iter()
        .map(|n| standard_class(n).expect("generated names are in range"))
        .collect();
    for c in &classes {
        assert_eq!(pair(c, c), BigInt::from(square), "bad square for {c}");
        assert_eq!(pair(c, &anti_k), BigInt::from(anti_k_degree), "bad degree for {c}");
    }
    let distinct: BTreeSet<_> = classes.iter().collect();
    assert_eq!(distinct.len(), 27);
    classes
}

/// The 27 lines (`l.l = -1`, `l.K = -1`), in the order of [`line_names`].
pub fn lines27() -> &'static [DivisorClass] {
    static LINES: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    LINES.get_or_init(|| build_validated(line_names(), -1, 1))
}

/// The 27 conic pencils (`C.C = 0`, `C.(-K) = 2`), in the order of [`pencil_names`].
pub fn pencils27() -> &'static [DivisorClass] {
    static PENCILS: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    PENCILS.get_or_init(|| build_validated(pencil_names(), 0, 2))
}

/// Looks up the pencil name of a class, if it is one of the 27.
pub fn pencil_name_of(class: &DivisorClass) -> Option<ClassName> {
    pencils27()
        .iter()
        .position(|c| c == class)
        .map(|i| pencil_names()[i])
}

/// Nef test against the 27 lines, which generate the cone of curves.
pub fn is_nef(d: &DivisorClass) -> bool {
    lines27().iter().all(|l| !pair(d, l).is_negative())
}

/// A class with `r.r = -2` and `r.K = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root(DivisorClass);

impl Root {
    pub fn new(class: DivisorClass) -> Result<Self> {
        if pair(&class, &class) == BigInt::from(-2) && pair(&class, &canonical()).is_zero() {
            Ok(Root(class))
        } else {
            Err(Error::NotARoot(Box::new(class)))
        }
    }

    pub fn class(&self) -> &DivisorClass {
        &self.0
    }
}

/// Reflection in a root: `D + (D.r) r`.
pub fn reflect(d: &DivisorClass, r: &Root) -> DivisorClass {
    let k = pair(d, &r.0);
    d + &r.0.scale(&k)
}

/// Simple roots of E6: `E1-E2, .., E5-E6` and `L-E1-E2-E3`.
pub fn simple_roots() -> &'static [Root; 6] {
    static ROOTS: OnceLock<[Root; 6]> = OnceLock::new();
    ROOTS.get_or_init(|| {
        std::array::from_fn(|k| {
            let v = if k < 5 {
                let mut v = [0; RANK];
                v[k + 1] = 1;
                v[k + 2] = -1;
                v
            } else {
                [1, -1, -1, -1, 0, 0, 0]
            };
            Root::new(DivisorClass::from_ints(v)).expect("simple roots are roots")
        })
    })
}

/// Applies simple reflections in order: `word[0]` first.
pub fn apply_word(d: &DivisorClass, word: &[usize]) -> DivisorClass {
    let roots = simple_roots();
    word.iter().fold(d.clone(), |acc, &k| reflect(&acc, &roots[k]))
}

/// Closure of `{d}` under the simple reflections, sorted.
pub fn weyl_orbit(d: &DivisorClass) -> Vec<DivisorClass> {
    let mut seen: BTreeSet<DivisorClass> = BTreeSet::new();
    let mut queue = VecDeque::from([d.clone()]);
    seen.insert(d.clone());
    while let Some(cur) = queue.pop_front() {
        for r in simple_roots() {
            let next = reflect(&cur, r);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// A shortest word in the simple reflections carrying `from` to `to`, if any.
pub fn weyl_word(from: &DivisorClass, to: &DivisorClass) -> Option<Vec<usize>> {
    let mut parent: HashMap<DivisorClass, Option<(DivisorClass, usize)>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            let mut word = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, k))) = parent.get(&node) {
                word.push(*k);
                node = prev.clone();
            }
            word.reverse();
            return Some(word);
        }
        for (k, r) in simple_roots().iter().enumerate() {
            let next = reflect(&cur, r);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), k)));
                queue.push_back(next);
            }
        }
    }
    None
}
