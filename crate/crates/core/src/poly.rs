//! Exact counting polynomials, closed forms, and coefficient bounds.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;
use crate::visibility::Variant;

/// A polynomial with nonnegative integer coefficients, `coeffs[i]` being the
/// coefficient of `x^i`. Trailing zeros are trimmed, so the degree is
/// `coeffs.len() - 1`; the zero polynomial is not representable.
///
/// Serializes as an array of decimal strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CountPolynomial {
    coeffs: Vec<BigUint>,
}

impl CountPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Result<Self, PolyError> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(CountPolynomial { coeffs })
    }

    pub fn from_u64s(coeffs: &[u64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `(1 + x)^k`
    pub fn one_plus_x_pow(k: usize) -> Self {
        CountPolynomial {
            coeffs: (0..=k)
                .map(|i| binomial(BigUint::from(k), BigUint::from(i)))
                .collect(),
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_str_radix(10)).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        let coeffs = items
            .iter()
            .map(|s| {
                let s = s.as_ref().trim();
                BigUint::parse_bytes(s.as_bytes(), 10)
                    .ok_or_else(|| PolyError::InvalidCoefficient(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(coeffs)
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Coefficientwise `self <= other`.
    pub fn dominated_by(&self, other: &CountPolynomial) -> bool {
        (0..=self.degree()).all(|i| self.coeffs[i] <= other.coeff(i))
    }
}

impl fmt::Debug for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CountPolynomial({self})")
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CountPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CountPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        CountPolynomial::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// Integer polynomial with signed coefficients, used for closed forms and
/// alternating sums before they are known to be nonnegative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SignedPoly(pub(crate) Vec<BigInt>);

impl SignedPoly {
    pub(crate) fn monomial(coeff: i64, power: usize) -> Self {
        let mut c = vec![BigInt::zero(); power + 1];
        c[power] = BigInt::from(coeff);
        SignedPoly(c)
    }

    pub(crate) fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = SignedPoly::monomial(1, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub(crate) fn add_scaled(&mut self, other: &[BigUint], sign: Sign) {
        if self.0.len() < other.len() {
            self.0.resize(other.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(other) {
            *a += BigInt::from_biguint(sign, b.clone());
        }
    }

    /// Converts to a count polynomial; fails if any coefficient is negative.
    pub(crate) fn into_counts(self) -> Option<CountPolynomial> {
        let coeffs = self
            .0
            .into_iter()
            .map(|c| c.to_biguint())
            .collect::<Option<Vec<_>>>()?;
        CountPolynomial::new(coeffs).ok()
    }
}

impl Add for &SignedPoly {
    type Output = SignedPoly;

    fn add(self, rhs: &SignedPoly) -> SignedPoly {
        let len = self.0.len().max(rhs.0.len());
        SignedPoly(
            (0..len)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_default() + rhs.0.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Mul for &SignedPoly {
    type Output = SignedPoly;

    fn mul(self, rhs: &SignedPoly) -> SignedPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return SignedPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SignedPoly(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormFamily {
    Path,
    /// Balanced complete bipartite graph `K_{n,n}`.
    Knn,
}

/// Known closed-form visibility polynomials of paths and `K_{n,n}`.
pub fn closed_form(
    variant: Variant,
    family: ClosedFormFamily,
    n: usize,
) -> Result<CountPolynomial, PolyError> {
    match family {
        ClosedFormFamily::Path => {
            let min = if variant == Variant::Mv { 1 } else { 3 };
            if n < min {
                return Err(PolyError::OutOfRangeParam(format!(
                    "{variant} path polynomial needs n >= {min}, got {n}"
                )));
            }
            let n64 = n as u64;
            let coeffs = match variant {
                Variant::Mv => vec![1, n64, n64 * (n64 - 1) / 2],
                Variant::Dual => vec![1, 2, 3],
                Variant::Outer => vec![1, n64, 1],
                Variant::Total => vec![1, 2, 1],
            };
            CountPolynomial::from_u64s(&coeffs)
        }
        ClosedFormFamily::Knn => {
            if n < 3 {
                return Err(PolyError::OutOfRangeParam(format!(
                    "K_(n,n) polynomial needs n >= 3, got {n}"
                )));
            }
            let one_plus_x = &SignedPoly::monomial(1, 0) + &SignedPoly::monomial(1, 1);
            let diff = &one_plus_x.pow(n) + &SignedPoly::monomial(-1, n);
            let base = &diff * &diff;
            let extra = match variant {
                Variant::Mv => &SignedPoly::monomial(2 * n as i64, n + 1) + &SignedPoly::monomial(2, n),
                Variant::Outer => SignedPoly::monomial(2, n),
                Variant::Dual | Variant::Total => SignedPoly::default(),
            };
            Ok((&base + &extra)
                .into_counts()
                .expect("closed form has nonnegative coefficients"))
        }
    }
}

/// `C(x, k) = prod_{s=1..k} (x - s + 1) / s` for real `x >= k`.
/// `k = 0` gives the empty product 1.
pub fn generalized_binomial(x: f64, k: u32) -> Result<f64, PolyError> {
    if x < k as f64 || x.is_nan() {
        return Err(PolyError::DomainError { x, k });
    }
    Ok((1..=k).fold(1.0, |acc, s| acc * (x - s as f64 + 1.0) / s as f64))
}

/// Tolerance on the `r_{i-1}` comparison of the shadow bound.
pub const SHADOW_EPSILON: f64 = 1e-6;
const BISECTION_WIDTH: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShadowEntry {
    pub index: usize,
    /// Real `z >= index` with `C(z, index) = r_index`.
    pub z: f64,
    /// `C(z, index - 1)`, the lower bound on `r_{index-1}`.
    pub bound: f64,
    pub previous: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShadowReport {
    pub entries: Vec<ShadowEntry>,
}

impl ShadowReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Solves `C(z, i) = target` for `z >= i` by bisection on `[i, i + target]`.
fn solve_binomial(target: f64, i: u32) -> f64 {
    let (mut lo, mut hi) = (i as f64, i as f64 + target);
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if generalized_binomial(mid, i).expect("mid >= i") < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Checks the Kruskal–Katona shadow bound on consecutive coefficients: if
/// `r_i = C(z, i)` then `r_{i-1} >= C(z, i-1)`. Indices with `r_i = 0` are
/// skipped.
pub fn shadow_bound_check(p: &CountPolynomial) -> ShadowReport {
    let mut entries = Vec::new();
    for i in 1..=p.degree() {
        let r = p.coeffs[i].to_f64().unwrap_or(f64::INFINITY);
        if r == 0.0 {
            continue;
        }
        let z = solve_binomial(r, i as u32);
        let bound = generalized_binomial(z, i as u32 - 1).expect("z >= i");
        let previous = p.coeffs[i - 1].to_f64().unwrap_or(f64::INFINITY);
        entries.push(ShadowEntry {
            index: i,
            z,
            bound,
            previous,
            pass: previous >= bound - SHADOW_EPSILON,
        });
    }
    ShadowReport { entries }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub mu_t: usize,
    /// Indices `i <= mu_t` with `r_i < C(mu_t, i)`.
    pub bound_violations: Vec<usize>,
    /// Maximal runs `[start, end]` of zero entries strictly between positive ones.
    pub gaps: Vec<(usize, usize)>,
}

impl GapReport {
    pub fn bound_ok(&self) -> bool {
        self.bound_violations.is_empty()
    }
}

/// Verifies `r_i >= C(mu_t, i)` for `i <= mu_t` and locates internal zero runs.
pub fn spectrum_gap_report(p: &CountPolynomial, mu_t: usize) -> GapReport {
    let bound_violations = (0..=mu_t)
        .filter(|&i| p.coeff(i) < binomial(BigUint::from(mu_t), BigUint::from(i)))
        .collect();
    let mut gaps = Vec::new();
    let mut start = None;
    for (i, c) in p.coeffs.iter().enumerate() {
        match (c.is_zero(), start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                gaps.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    GapReport {
        mu_t,
        bound_violations,
        gaps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[u64]) -> CountPolynomial {
        CountPolynomial::from_u64s(c).unwrap()
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), 1);
        assert!(CountPolynomial::from_u64s(&[0, 0]).is_err());
        assert_eq!(poly(&[1, 10, 0, 1]).to_string(), "1 + 10x + x^3");
        assert_eq!(CountPolynomial::one_plus_x_pow(3), poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn decimal_strings_survive_beyond_u64() {
        let big = "123456789012345678901234567890";
        let p = CountPolynomial::from_decimal_strings(&["1", big]).unwrap();
        assert_eq!(p.to_decimal_strings(), vec!["1".to_string(), big.to_string()]);
        assert!(p.to_u64s().is_none());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, format!("[\"1\",\"{big}\"]"));
        let back: CountPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(CountPolynomial::from_decimal_strings(&["1", "-2"]).is_err());
    }

    #[test]
    fn path_closed_forms() {
        assert_eq!(closed_form(Variant::Mv, ClosedFormFamily::Path, 4).unwrap(), poly(&[1, 4, 6]));
        assert_eq!(closed_form(Variant::Mv, ClosedFormFamily::Path, 1).unwrap(), poly(&[1, 1]));
        assert_eq!(closed_form(Variant::Outer, ClosedFormFamily::Path, 7).unwrap(), poly(&[1, 7, 1]));
        assert!(closed_form(Variant::Dual, ClosedFormFamily::Path, 2).is_err());
    }

    #[test]
    fn knn_closed_forms_n3() {
        // ((1+x)^3 - x^3)^2 = (1 + 3x + 3x^2)^2 = 1 + 6x + 15x^2 + 18x^3 + 9x^4
        let total = poly(&[1, 6, 15, 18, 9]);
        assert_eq!(closed_form(Variant::Total, ClosedFormFamily::Knn, 3).unwrap(), total);
        assert_eq!(closed_form(Variant::Dual, ClosedFormFamily::Knn, 3).unwrap(), total);
        assert_eq!(
            closed_form(Variant::Outer, ClosedFormFamily::Knn, 3).unwrap(),
            poly(&[1, 6, 15, 20, 9])
        );
        // + 6x^4 on top of the outer form
        assert_eq!(
            closed_form(Variant::Mv, ClosedFormFamily::Knn, 3).unwrap(),
            poly(&[1, 6, 15, 20, 15])
        );
        assert!(closed_form(Variant::Mv, ClosedFormFamily::Knn, 2).is_err());
    }

    #[test]
    fn generalized_binomial_values() {
        assert_eq!(generalized_binomial(5.0, 2).unwrap(), 10.0);
        assert_eq!(generalized_binomial(4.0, 4).unwrap(), 1.0);
        let x = (1.0 + 57f64.sqrt()) / 2.0;
        assert!((generalized_binomial(x, 2).unwrap() - 7.0).abs() < 1e-12);
        assert!(generalized_binomial(1.5, 2).is_err());
    }

    #[test]
    fn shadow_bound_examples() {
        let petersen_mv = poly(&[1, 10, 45, 90, 80, 30, 5]);
        let report = shadow_bound_check(&petersen_mv);
        assert!(report.all_pass());
        let e2 = &report.entries[1];
        assert_eq!(e2.index, 2);
        assert!((e2.z - 10.0).abs() < 1e-6);
        assert!(shadow_bound_check(&poly(&[1, 1])).all_pass());
        // 3 two-sets need at least 3 one-sets
        assert!(!shadow_bound_check(&poly(&[1, 2, 3])).all_pass());
        // r_1 = 0 is skipped, so the only entry is i = 2
        let gap = shadow_bound_check(&poly(&[1, 0, 5]));
        assert_eq!(gap.entries.len(), 1);
        assert_eq!(gap.entries[0].index, 2);
        assert!(!gap.entries[0].pass);
    }

    #[test]
    fn gap_reports() {
        let r = spectrum_gap_report(&poly(&[1, 0, 5]), 0);
        assert!(r.bound_ok());
        assert_eq!(r.gaps, vec![(1, 1)]);
        let r = spectrum_gap_report(&poly(&[1, 4, 4, 4]), 2);
        assert!(r.bound_ok());
        assert!(r.gaps.is_empty());
        assert!(spectrum_gap_report(&poly(&[1]), 0).bound_ok());
        let r = spectrum_gap_report(&poly(&[1, 0, 0, 1, 0, 2]), 1);
        assert_eq!(r.bound_violations, vec![1]);
        assert_eq!(r.gaps, vec![(1, 2), (4, 4)]);
    }
}
