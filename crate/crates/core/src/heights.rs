//! Heights, distances and empirical approximation constants over `Q` at the
//! real place.
//!
//! The distance between `x` and `y` in `P^n` is `|x ∧ y| / (|x| |y|)` with
//! Euclidean norms. Its square is the exact rational
//! `(|x|^2 |y|^2 - (x.y)^2) / (|x|^2 |y|^2)`, so every logarithm needed here
//! is the logarithm of an integer. Those are evaluated in binary fixed point
//! with [`LOG_BITS`] fractional bits, and the exponents `γ_i` are exact
//! quotients of such values.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::constants::ExtendedRational;
use crate::linalg::{dot, make_primitive};
use crate::{Error, Result};

/// Fractional bits carried by every logarithm.
pub const LOG_BITS: u32 = 128;
const GUARD: u32 = 32;
const WORK: u32 = LOG_BITS + GUARD;

// atanh(num/den) * 2^WORK for 0 <= num/den <= 1/3
fn atanh_fixed(num: &BigInt, den: &BigInt) -> BigInt {
    let z: BigInt = (num << WORK) / den;
    let z2: BigInt = (&z * &z) >> WORK;
    let mut term = z;
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    loop {
        let t = &term / k;
        if t.is_zero() {
            return sum;
        }
        sum += t;
        term = (&term * &z2) >> WORK;
        k += 2;
    }
}

fn ln2_fixed() -> &'static BigInt {
    static LN2: OnceLock<BigInt> = OnceLock::new();
    LN2.get_or_init(|| atanh_fixed(&BigInt::one(), &BigInt::from(3)) * 2)
}

// ln(n) * 2^WORK for n >= 1, via n = 2^k m and ln m = 2 atanh((m-1)/(m+1))
fn ln_fixed(n: &BigInt) -> BigInt {
    debug_assert!(n.is_positive());
    let k = n.bits() - 1;
    let p = BigInt::one() << k;
    ln2_fixed() * k + atanh_fixed(&(n - &p), &(n + &p)) * 2
}

fn to_log_bits(work: BigInt) -> BigInt {
    // round to nearest
    (work + (BigInt::one() << (GUARD - 1))) >> GUARD
}

fn log_rational(raw: BigInt) -> BigRational {
    BigRational::new(raw, BigInt::one() << LOG_BITS)
}

/// Natural logarithm of a positive integer, to [`LOG_BITS`] fractional bits.
pub fn ln_integer(n: &BigInt) -> Result<BigRational> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(format!("logarithm of non-positive {n}")));
    }
    Ok(log_rational(to_log_bits(ln_fixed(n))))
}

/// A rational point of `P^n`, stored primitive with its first nonzero
/// coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    pub fn new(mut coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument("a projective point needs at least two coordinates".into()));
        }
        let Some(lead) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument("all coordinates are zero".into()));
        };
        let negate = lead.is_negative();
        make_primitive(&mut coords);
        if negate {
            coords.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// `n` for a point of `P^n`.
    pub fn dimension(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(BigInt::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Multiplicative height: the largest absolute coordinate.
pub fn height(p: &ProjectivePoint) -> BigInt {
    p.coords.iter().map(BigInt::abs).max().expect("points have coordinates")
}

fn check_dims(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<()> {
    if p.coords.len() != q.coords.len() {
        return Err(Error::DimensionMismatch { expected: p.coords.len(), got: q.coords.len() });
    }
    Ok(())
}

// (|x ∧ y|^2, |x|^2 |y|^2)
fn squared_parts(p: &ProjectivePoint, q: &ProjectivePoint) -> (BigInt, BigInt) {
    let x2 = dot(&p.coords, &p.coords);
    let y2 = dot(&q.coords, &q.coords);
    let xy = dot(&p.coords, &q.coords);
    let norms = x2 * y2;
    (&norms - &xy * &xy, norms)
}

/// `|x ∧ y| / (|x| |y|)` in `f64`.
///
/// Exact zero only for equal points; for distinct points below about
/// `1e-308` the value underflows, and [`neg_log_distance`] should be used.
pub fn distance(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<f64> {
    check_dims(p, q)?;
    let (w, n) = squared_parts(p, q);
    if w.is_zero() {
        return Ok(0.0);
    }
    let d2 = BigRational::new(w, n).to_f64().unwrap_or(0.0);
    Ok(d2.sqrt().min(1.0))
}

/// `-ln distance(p, q)`, or `∞` when the points coincide.
pub fn neg_log_distance(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<ExtendedRational> {
    check_dims(p, q)?;
    let (w, n) = squared_parts(p, q);
    if w.is_zero() {
        return Ok(ExtendedRational::Infinity);
    }
    let raw = (ln_fixed(&n) - ln_fixed(&w)) / 2;
    Ok(ExtendedRational::Finite(log_rational(to_log_bits(raw))))
}

/// How the sequence parameter `n_i` grows with the index `i = 1, 2, ..`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// `n_i = i`.
    #[default]
    Linear,
    /// `n_i = 2^i`.
    Geometric,
}

impl Schedule {
    pub fn parameter(self, i: usize) -> BigInt {
        match self {
            Schedule::Linear => BigInt::from(i),
            Schedule::Geometric => BigInt::one() << i,
        }
    }
}

impl FromStr for Schedule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Schedule::Linear),
            "geometric" => Ok(Schedule::Geometric),
            _ => Err(Error::InvalidArgument(format!("unknown schedule {s:?}"))),
        }
    }
}

/// Test curves and the point each sequence converges to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `x_n = target + 1/n` on `P^1`.
    LineShift(BigRational),
    /// `y^2 z = x^3 + x^2 z` through `x = t^2 - 1`, `y = t(t^2 - 1)`, with
    /// `t = ±(n + 1)/n` running into the node along the branch `t → ±1`.
    NodalCubicBranch(i8),
    /// `y^2 z = x^3` through `[t^2 : t^3 : 1]`, `t = 1/n`, into the cusp.
    CuspidalCubic,
    /// `P^1 × P^1` with the class `(a, b)`; the point moves along the ruling
    /// whose weight is smaller, the first one on ties.
    SplitQuadric(u32, u32),
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::LineShift(q) => write!(f, "line:{q}"),
            SequenceKind::NodalCubicBranch(s) => write!(f, "nodal:{}", if *s > 0 { "+1" } else { "-1" }),
            SequenceKind::CuspidalCubic => write!(f, "cusp"),
            SequenceKind::SplitQuadric(a, b) => write!(f, "quadric:{a},{b}"),
        }
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    /// `line:p/q`, `nodal:+1`, `nodal:-1`, `cusp`, `quadric:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown sequence kind {s:?}"));
        let (head, arg) = s.split_once(':').unwrap_or((s, ""));
        let kind = match head {
            "line" => {
                let q = if arg.is_empty() { BigRational::zero() } else { parse_rational(arg)? };
                SequenceKind::LineShift(q)
            }
            "nodal" => match arg {
                "+1" | "1" | "" => SequenceKind::NodalCubicBranch(1),
                "-1" => SequenceKind::NodalCubicBranch(-1),
                _ => return Err(bad()),
            },
            "cusp" if arg.is_empty() => SequenceKind::CuspidalCubic,
            "quadric" => {
                let (a, b) = arg.split_once(',').ok_or_else(bad)?;
                SequenceKind::SplitQuadric(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
            }
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl SequenceKind {
    /// The approximation constant the sequence should realise in the limit.
    pub fn expected_alpha(&self) -> BigRational {
        match self {
            SequenceKind::LineShift(_) => BigRational::one(),
            SequenceKind::NodalCubicBranch(_) => BigRational::from_integer(3.into()),
            SequenceKind::CuspidalCubic => BigRational::new(3.into(), 2.into()),
            SequenceKind::SplitQuadric(a, b) => BigRational::from_integer((*a.min(b)).into()),
        }
    }

    /// Acceptance band around [`Self::expected_alpha`] at lengths 10^3 to
    /// 10^4. An engineering choice from the observed convergence rates.
    pub fn tolerance(&self) -> f64 {
        match self {
            SequenceKind::LineShift(_) | SequenceKind::CuspidalCubic => 0.1,
            SequenceKind::NodalCubicBranch(_) | SequenceKind::SplitQuadric(..) => 0.15,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SequenceKind::NodalCubicBranch(s) if s.abs() != 1 => {
                Err(Error::InvalidArgument(format!("branch sign must be ±1, got {s}")))
            }
            SequenceKind::SplitQuadric(a, b) if *a == 0 || *b == 0 => {
                Err(Error::InvalidArgument(format!("quadric weights must be positive, got ({a}, {b})")))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    pub length: usize,
    pub schedule: Schedule,
}

impl SequenceSpec {
    pub const MIN_LENGTH: usize = 10;

    pub fn new(kind: SequenceKind, length: usize) -> Result<Self> {
        kind.validate()?;
        if length < Self::MIN_LENGTH {
            return Err(Error::InvalidArgument(format!(
                "sequence length must be at least {}, got {length}",
                Self::MIN_LENGTH
            )));
        }
        Ok(SequenceSpec { kind, length, schedule: Schedule::Linear })
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    /// The parameter `n_i`.
    pub parameter: BigInt,
    /// The point in the ambient space used for distances.
    pub point: ProjectivePoint,
    /// Height of the point with respect to the line bundle under study.
    pub height: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub spec: SequenceSpec,
    pub target: ProjectivePoint,
    pub samples: Vec<Sample>,
}

fn point(coords: Vec<BigInt>) -> ProjectivePoint {
    ProjectivePoint::new(coords).expect("sequence points are nonzero")
}

fn sample(kind: &SequenceKind, n: BigInt) -> Sample {
    let one = BigInt::one;
    match kind {
        SequenceKind::LineShift(q) => {
            let p = point(vec![q.numer() * &n + q.denom(), q.denom() * &n]);
            let height = height(&p);
            Sample { parameter: n, point: p, height }
        }
        SequenceKind::NodalCubicBranch(sign) => {
            let m: BigInt = &n + 1;
            let s: BigInt = 2 * &n + 1;
            let mut y: BigInt = &m * &s;
            if *sign < 0 {
                y = -y;
            }
            let p = point(vec![&n * &s, y, n.pow(3)]);
            // the parameter [n : n + 1] has height n + 1 and L has degree 3 on it
            Sample { parameter: n, point: p, height: m.pow(3) }
        }
        SequenceKind::CuspidalCubic => {
            let p = point(vec![n.clone(), one(), n.pow(3)]);
            Sample { height: n.pow(3), parameter: n, point: p }
        }
        SequenceKind::SplitQuadric(a, b) => {
            // Segre coordinates [x0y0 : x0y1 : x1y0 : x1y1]
            let (p, h) = if a <= b {
                // ([1 : n], [0 : 1])
                (point(vec![BigInt::zero(), one(), BigInt::zero(), n.clone()]), n.pow(*a))
            } else {
                // ([0 : 1], [1 : n])
                (point(vec![BigInt::zero(), BigInt::zero(), one(), n.clone()]), n.pow(*b))
            };
            Sample { parameter: n, point: p, height: h }
        }
    }
}

fn target(kind: &SequenceKind) -> ProjectivePoint {
    match kind {
        SequenceKind::LineShift(q) => point(vec![q.numer().clone(), q.denom().clone()]),
        SequenceKind::NodalCubicBranch(_) | SequenceKind::CuspidalCubic => {
            point(vec![BigInt::zero(), BigInt::zero(), BigInt::one()])
        }
        SequenceKind::SplitQuadric(..) => {
            point(vec![BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::one()])
        }
    }
}

/// Builds the test sequence with its target point and attached heights.
pub fn generate(spec: &SequenceSpec) -> Result<Sequence> {
    spec.kind.validate()?;
    let samples = (1..=spec.length)
        .map(|i| sample(&spec.kind, spec.schedule.parameter(i)))
        .collect();
    Ok(Sequence { spec: spec.clone(), target: target(&spec.kind), samples })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaEstimate {
    pub heights: Vec<BigInt>,
    pub neg_log_distances: Vec<BigRational>,
    /// `γ_i = ln H_i / (-ln d_i)`; `∞` where `-ln d_i <= 0`.
    pub gammas: Vec<ExtendedRational>,
    /// Median of `gammas[tail_start..]`.
    pub estimate: ExtendedRational,
    pub tail_start: usize,
    pub tail_min: ExtendedRational,
    pub tail_max: ExtendedRational,
    /// Tail indices whose distance did not decrease from the previous point.
    pub stalled: Vec<usize>,
}

impl AlphaEstimate {
    pub fn spread(&self) -> f64 {
        self.tail_max.to_f64() - self.tail_min.to_f64()
    }

    /// One row per point: `i, height, distance, neg_log_distance, gamma`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv output failed: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["i", "height", "distance", "neg_log_distance", "gamma"]).map_err(io)?;
        for (i, ((h, nld), g)) in self.heights.iter().zip(&self.neg_log_distances).zip(&self.gammas).enumerate() {
            let nld = nld.to_f64().unwrap_or(f64::INFINITY);
            w.write_record([
                (i + 1).to_string(),
                h.to_string(),
                format_distance(nld),
                format!("{nld:.12}"),
                format_gamma(g),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::InvalidArgument(format!("csv output failed: {e}")))
    }
}

pub fn format_gamma(g: &ExtendedRational) -> String {
    match g {
        ExtendedRational::Infinity => "inf".to_string(),
        _ => format!("{:.12}", g.to_f64()),
    }
}

/// `exp(-nld)` in scientific notation, without underflowing.
fn format_distance(nld: f64) -> String {
    let x = -nld / std::f64::consts::LN_10;
    let mut e = x.floor();
    let mut m = 10f64.powf(x - e);
    if m >= 9.9999999995 {
        m /= 10.0;
        e += 1.0;
    }
    format!("{m:.9}e{}", e as i64)
}

fn median(sorted: &[ExtendedRational]) -> ExtendedRational {
    let k = sorted.len();
    if k % 2 == 1 {
        return sorted[k / 2].clone();
    }
    match (&sorted[k / 2 - 1], &sorted[k / 2]) {
        (ExtendedRational::Finite(a), ExtendedRational::Finite(b)) => {
            ExtendedRational::Finite((a + b) / BigInt::from(2))
        }
        _ => ExtendedRational::Infinity,
    }
}

fn estimate_from(
    points: &[&ProjectivePoint],
    heights: Vec<BigInt>,
    target: &ProjectivePoint,
    distance_scale: Option<&BigRational>,
) -> Result<AlphaEstimate> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty sequence".into()));
    }
    let scale_log = match distance_scale {
        Some(c) if !c.is_positive() => {
            return Err(Error::InvalidArgument(format!("distance scale must be positive, got {c}")))
        }
        Some(c) => log_rational(to_log_bits(ln_fixed(c.numer()) - ln_fixed(c.denom()))),
        None => BigRational::zero(),
    };
    let mut nlds = Vec::with_capacity(points.len());
    let mut gammas = Vec::with_capacity(points.len());
    for (i, (p, h)) in points.iter().zip(&heights).enumerate() {
        let ExtendedRational::Finite(nld) = neg_log_distance(target, p)? else {
            return Err(Error::PointEqualsTarget(i));
        };
        if !h.is_positive() {
            return Err(Error::InvalidArgument(format!("height {h} at index {i} is not positive")));
        }
        let nld = nld - &scale_log;
        gammas.push(if nld.is_positive() {
            ExtendedRational::Finite(ln_integer(h)? / &nld)
        } else {
            ExtendedRational::Infinity
        });
        nlds.push(nld);
    }
    let tail_start = points.len() / 2;
    let mut tail = gammas[tail_start..].to_vec();
    tail.sort();
    let stalled = (tail_start.max(1)..points.len()).filter(|&i| nlds[i] <= nlds[i - 1]).collect();
    Ok(AlphaEstimate {
        heights,
        neg_log_distances: nlds,
        estimate: median(&tail),
        tail_start,
        tail_min: tail[0].clone(),
        tail_max: tail[tail.len() - 1].clone(),
        gammas,
        stalled,
    })
}

/// Estimates the approximation constant of `target` along `points` for
/// `O(degree)` on the ambient projective space, whose height is
/// `H(x)^degree`.
pub fn estimate_alpha(points: &[ProjectivePoint], target: &ProjectivePoint, degree: u32) -> Result<AlphaEstimate> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let refs: Vec<&ProjectivePoint> = points.iter().collect();
    let heights = points.iter().map(|p| height(p).pow(degree)).collect();
    estimate_from(&refs, heights, target, None)
}

/// Estimate for a generated sequence, using its attached heights.
pub fn estimate_sequence(seq: &Sequence) -> Result<AlphaEstimate> {
    estimate_sequence_scaled(seq, None)
}

/// As [`estimate_sequence`] with every distance multiplied by `scale`.
pub fn estimate_sequence_scaled(seq: &Sequence, scale: Option<&BigRational>) -> Result<AlphaEstimate> {
    let refs: Vec<&ProjectivePoint> = seq.samples.iter().map(|s| &s.point).collect();
    let heights = seq.samples.iter().map(|s| s.height.clone()).collect();
    estimate_from(&refs, heights, &seq.target, scale)
}

/// Parses `p/q` or `p` into a rational, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalisation_and_height() {
        assert_eq!(height(&pt(&[1, 0])), BigInt::from(1));
        assert_eq!(height(&pt(&[22, 7])), BigInt::from(22));
        assert_eq!(pt(&[4, 6]), pt(&[2, 3]));
        assert_eq!(height(&pt(&[4, 6])), BigInt::from(3));
        assert_eq!(pt(&[0, -2, 4]).coords(), pt(&[0, 1, -2]).coords());
        assert!(ProjectivePoint::from_ints(&[0, 0]).is_err());
        assert!(ProjectivePoint::from_ints(&[3]).is_err());
        assert_eq!(pt(&[1, 2, 3]).to_string(), "[1:2:3]");
    }

    #[test]
    fn distances() {
        let p = pt(&[3, -1, 4]);
        assert_eq!(distance(&p, &p).unwrap(), 0.0);
        assert_eq!(neg_log_distance(&p, &p).unwrap(), ExtendedRational::Infinity);
        for n in [1i64, 2, 10, 1000] {
            let d = distance(&pt(&[1, 0]), &pt(&[n, 1])).unwrap();
            let expected = 1.0 / ((n * n + 1) as f64).sqrt();
            assert!((d - expected).abs() < 1e-15);
        }
        let a = pt(&[5, 2, -7]);
        let b = pt(&[1, 1, 1]);
        assert_eq!(distance(&a, &b).unwrap(), distance(&b, &a).unwrap());
        assert_eq!(distance(&pt(&[1, 0]), &pt(&[0, 1])).unwrap(), 1.0);
        assert!(matches!(distance(&a, &pt(&[1, 0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn log_precision() {
        // ln 2 to 54 decimal places
        let ln2 = parse_rational("693147180559945309417232121458176568075500134360255254/1000000000000000000000000000000000000000000000000000000").unwrap();
        let err = (ln_integer(&BigInt::from(2)).unwrap() - ln2).abs();
        assert!(err < BigRational::new(BigInt::one(), BigInt::one() << 120));
        // consistency of large and composite arguments
        let a = ln_integer(&BigInt::from(3)).unwrap() + ln_integer(&BigInt::from(10).pow(50)).unwrap();
        let b = ln_integer(&(BigInt::from(3) * BigInt::from(10).pow(50))).unwrap();
        assert!((a - b).abs() < BigRational::new(BigInt::one(), BigInt::one() << 120));
        assert_eq!(ln_integer(&BigInt::one()).unwrap(), BigRational::zero());
        assert!(ln_integer(&BigInt::zero()).is_err());
    }

    #[test]
    fn log_distance_matches_float() {
        let a = pt(&[7, 3, 1]);
        let b = pt(&[2, 9, 4]);
        let nld = neg_log_distance(&a, &b).unwrap().to_f64();
        assert!((nld + distance(&a, &b).unwrap().ln()).abs() < 1e-14);
    }

    #[test]
    fn sequence_points() {
        let line = generate(&SequenceSpec::new(SequenceKind::LineShift(BigRational::zero()), 10).unwrap()).unwrap();
        assert_eq!(line.samples[4].point, pt(&[1, 5]));
        assert_eq!(line.target, pt(&[0, 1]));

        let shifted = generate(&SequenceSpec::new(SequenceKind::LineShift(q(22, 7)), 10).unwrap()).unwrap();
        assert_eq!(shifted.samples[2].point, pt(&[22 * 3 + 7, 21]));
        assert_eq!(shifted.target, pt(&[22, 7]));

        let cusp = generate(&SequenceSpec::new(SequenceKind::CuspidalCubic, 10).unwrap()).unwrap();
        for (i, s) in cusp.samples.iter().enumerate() {
            let n = i as i64 + 1;
            assert_eq!(s.point, pt(&[n, 1, n * n * n]));
            assert_eq!(s.height, BigInt::from(n * n * n));
        }

        let nodal = generate(&SequenceSpec::new(SequenceKind::NodalCubicBranch(1), 10).unwrap()).unwrap();
        for (i, s) in nodal.samples.iter().enumerate() {
            let n = i as i64 + 1;
            let expected = [n * (2 * n + 1), (n + 1) * (2 * n + 1), n * n * n];
            assert_eq!(s.point.coords(), pt(&expected).coords());
            // already primitive
            assert_eq!(s.point.coords().iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>(), expected);
            // on y^2 z = x^3 + x^2 z
            let c: Vec<BigInt> = s.point.coords().to_vec();
            let (x, y, z) = (&c[0], &c[1], &c[2]);
            assert_eq!(y * y * z, x * x * x + x * x * z);
        }
        let minus = generate(&SequenceSpec::new(SequenceKind::NodalCubicBranch(-1), 10).unwrap()).unwrap();
        assert!(minus.samples[0].point.coords()[1].is_negative());

        let quad = generate(&SequenceSpec::new(SequenceKind::SplitQuadric(2, 3), 10).unwrap()).unwrap();
        assert_eq!(quad.samples[3].point, pt(&[0, 1, 0, 4]));
        assert_eq!(quad.samples[3].height, BigInt::from(16));
        let quad = generate(&SequenceSpec::new(SequenceKind::SplitQuadric(3, 2), 10).unwrap()).unwrap();
        assert_eq!(quad.samples[3].point, pt(&[0, 0, 1, 4]));
        assert_eq!(quad.samples[3].height, BigInt::from(16));
    }

    #[test]
    fn cusp_points_lie_on_the_cusp() {
        let cusp = generate(&SequenceSpec::new(SequenceKind::CuspidalCubic, 12).unwrap()).unwrap();
        for s in &cusp.samples {
            let c = s.point.coords();
            assert_eq!(&c[1] * &c[1] * &c[2], &c[0] * &c[0] * &c[0]);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(SequenceSpec::new(SequenceKind::CuspidalCubic, 9).is_err());
        assert!(SequenceSpec::new(SequenceKind::NodalCubicBranch(2), 10).is_err());
        assert!(SequenceSpec::new(SequenceKind::SplitQuadric(0, 1), 10).is_err());
        for s in ["line:1/3", "line:-2", "nodal:+1", "nodal:-1", "cusp", "quadric:2,3"] {
            let k: SequenceKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        for s in ["line:1/0", "nodal:2", "quadric:0,1", "cusp:1", "sphere"] {
            assert!(s.parse::<SequenceKind>().is_err(), "{s}");
        }
    }

    #[test]
    fn estimate_on_the_line() {
        let points: Vec<ProjectivePoint> = (1..=200).map(|n| pt(&[1, n])).collect();
        let est = estimate_alpha(&points, &pt(&[0, 1]), 1).unwrap();
        assert_eq!(est.tail_start, 100);
        assert!(est.stalled.is_empty());
        assert!((est.estimate.to_f64() - 1.0).abs() < 0.01);
        assert!(est.tail_min <= est.estimate && est.estimate <= est.tail_max);
        // degree scales the heights
        let est3 = estimate_alpha(&points, &pt(&[0, 1]), 3).unwrap();
        assert!((est3.estimate.to_f64() - 3.0).abs() < 0.03);
    }

    #[test]
    fn estimate_errors_and_flags() {
        let target = pt(&[0, 1]);
        let points = vec![pt(&[1, 3]), target.clone()];
        assert_eq!(estimate_alpha(&points, &target, 1), Err(Error::PointEqualsTarget(1)));
        assert!(estimate_alpha(&[], &target, 1).is_err());
        assert!(estimate_alpha(&[pt(&[1, 3])], &target, 0).is_err());

        // moving away from the target in the tail gets flagged
        let points: Vec<ProjectivePoint> = [1, 2, 3, 4, 5, 6, 7, 8, 9, 4].iter().map(|&n| pt(&[1, n])).collect();
        let est = estimate_alpha(&points, &target, 1).unwrap();
        assert_eq!(est.stalled, vec![9]);
    }

    #[test]
    fn median_of_even_tail() {
        let v = [ExtendedRational::integer(1), ExtendedRational::integer(2)];
        assert_eq!(median(&v), ExtendedRational::ratio(3, 2));
        let v = [ExtendedRational::integer(1), ExtendedRational::Infinity];
        assert_eq!(median(&v), ExtendedRational::Infinity);
    }

    #[test]
    fn csv_layout() {
        let seq = generate(&SequenceSpec::new(SequenceKind::CuspidalCubic, 10).unwrap()).unwrap();
        let est = estimate_sequence(&seq).unwrap();
        let mut buf = Vec::new();
        est.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "i,height,distance,neg_log_distance,gamma");
        assert_eq!(lines.len(), 11);
        assert!(lines[10].starts_with("10,1000,"));
    }

    #[test]
    fn tiny_distances_format_without_underflow() {
        assert_eq!(format_distance(0.0), "1.000000000e0");
        assert_eq!(format_distance(2000.0 * std::f64::consts::LN_10), "1.000000000e-2000");
    }
}
