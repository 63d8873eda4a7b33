//! Mask polynomials, the linear-set criterion, and translation witnesses.
//!
//! A finite integer set `0 = z_0 < z_1 < ... < z_k` is encoded by its mask
//! polynomial `p(x) = Σ x^{z_i}` and the reversed mask `q(x) = Σ x^{z_k −
//! z_i}`. The set has the discrete Pompeiu property with respect to the
//! isometries of the line exactly when `p` and `q` have no common root, i.e.
//! `gcd(p, q) = 1` over ℚ; a nontrivial gcd is returned as the certificate.
//!
//! For translations alone no finite set in a torsion-free group can have the
//! property: [`translation_witness`] constructs an annihilating character
//! `x ↦ Π λ_j^{x_j}` explicitly and verifies it symbolically.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{is_probable_prime, poly_gcd, Rational, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearSetError {
    #[error("linear set must be nonempty")]
    Empty,
    #[error("linear set must start at 0")]
    NonzeroStart,
    #[error("linear set positions must be strictly increasing")]
    NotIncreasing,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeuristicError {
    #[error("coefficient {0} outside {{0, 1}}")]
    CoefficientOutsideZeroOne(String),
    #[error("n_max must be at least 3")]
    BadRange,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("need at least two points")]
    TooFewPoints,
    #[error("points must be pairwise distinct")]
    DuplicatePoint,
    #[error("points must share one dimension")]
    DimensionMismatch,
}

/// Finite set of integers `0 = z_0 < z_1 < ... < z_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSet {
    positions: Vec<i64>,
}

impl LinearSet {
    pub fn new(positions: Vec<i64>) -> Result<Self, LinearSetError> {
        if positions.is_empty() {
            return Err(LinearSetError::Empty);
        }
        if positions[0] != 0 {
            return Err(LinearSetError::NonzeroStart);
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LinearSetError::NotIncreasing);
        }
        Ok(LinearSet { positions })
    }

    /// Sort, then translate so the minimum sits at 0. Duplicates are an error.
    pub fn normalize(mut positions: Vec<i64>) -> Result<Self, LinearSetError> {
        if positions.is_empty() {
            return Err(LinearSetError::Empty);
        }
        positions.sort_unstable();
        let min = positions[0];
        for p in &mut positions {
            *p -= min;
        }
        LinearSet::new(positions)
    }

    /// The consecutive run {0, 1, ..., k}.
    pub fn run(k: i64) -> Self {
        LinearSet::new((0..=k).collect()).unwrap()
    }

    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    /// Largest element z_k.
    pub fn span(&self) -> i64 {
        *self.positions.last().unwrap()
    }

    /// The mirrored set {z_k − z_i}, renormalized to start at 0.
    pub fn reversed(&self) -> LinearSet {
        let span = self.span();
        LinearSet::normalize(self.positions.iter().map(|z| span - z).collect()).unwrap()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reversed()
    }
}

/// The pair `p(x) = Σ x^{z_i}`, `q(x) = Σ x^{z_k − z_i}`.
pub fn mask_polynomials(s: &LinearSet) -> (UniPoly, UniPoly) {
    let span = s.span() as usize;
    let mut p = vec![Rational::zero(); span + 1];
    let mut q = vec![Rational::zero(); span + 1];
    for &z in s.positions() {
        p[z as usize] = Rational::one();
        q[span - z as usize] = Rational::one();
    }
    (UniPoly::from_coeffs(p), UniPoly::from_coeffs(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearVerdict {
    Pompeiu,
    NotPompeiu,
}

impl LinearVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            LinearVerdict::Pompeiu => "POMPEIU",
            LinearVerdict::NotPompeiu => "NOT_POMPEIU",
        }
    }
}

/// Verdict plus the monic gcd of the two masks. A nontrivial gcd is the
/// certificate: it divides both masks, so its roots are common roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCertificate {
    pub verdict: LinearVerdict,
    pub gcd: UniPoly,
}

/// Decide the criterion: Pompeiu w.r.t. line isometries iff `gcd(p, q) = 1`.
pub fn linear_pompeiu_check(s: &LinearSet) -> LinearCertificate {
    let (p, q) = mask_polynomials(s);
    let gcd = poly_gcd(&p, &q);
    let verdict = if gcd.degree() == Some(0) {
        LinearVerdict::Pompeiu
    } else {
        LinearVerdict::NotPompeiu
    };
    LinearCertificate { verdict, gcd }
}

/// Smallest `n` in `[3, n_max]` with `p(n)` prime, if any. A hit certifies
/// that the 0/1-coefficient polynomial `p` is irreducible over ℤ; no hit is
/// inconclusive.
pub fn irreducibility_heuristic(p: &UniPoly, n_max: i64) -> Result<Option<i64>, HeuristicError> {
    for c in p.coeffs() {
        if !c.is_zero() && !c.is_one() {
            return Err(HeuristicError::CoefficientOutsideZeroOne(c.to_string()));
        }
    }
    if n_max < 3 {
        return Err(HeuristicError::BadRange);
    }
    for n in 3..=n_max {
        let value = p.eval(&Rational::from_integer(BigInt::from(n)));
        debug_assert!(value.is_integer());
        if is_probable_prime(&value.to_integer()) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// The λ of a witness character: an exact rational when the induced mask has
/// a rational root, otherwise a root of `min_poly` (squarefree, nonzero
/// constant term) carried with a floating isolating approximation.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessValue {
    Rational(Rational),
    Algebraic { min_poly: UniPoly, approx: Complex64 },
}

impl WitnessValue {
    pub fn approx(&self) -> Complex64 {
        match self {
            WitnessValue::Rational(r) => {
                Complex64::new(crate::exact::rational_to_f64(r), 0.0)
            }
            WitnessValue::Algebraic { approx, .. } => *approx,
        }
    }
}

/// Character `x ↦ Π λ_j^{x_j}` on ℤ^n with λ_j = 1 for every coordinate
/// except `axis`, where λ is a nonzero root of the induced mask polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCharacter {
    pub dimension: usize,
    pub axis: usize,
    pub lambda: WitnessValue,
    /// Induced mask along `axis`, exponents shifted to start at 0. λ is a
    /// root; the annihilation sum equals λ^{min} · induced_mask(λ).
    pub induced_mask: UniPoly,
}

impl WitnessCharacter {
    /// Numeric evaluation at a lattice point.
    pub fn eval_c64(&self, point: &[i64]) -> Complex64 {
        let e = point[self.axis];
        let lambda = self.lambda.approx();
        let mut acc = Complex64::new(1.0, 0.0);
        for _ in 0..e.unsigned_abs() {
            acc *= lambda;
        }
        if e < 0 {
            acc = 1.0 / acc;
        }
        acc
    }

    /// Exact evaluation, available when λ is rational.
    pub fn eval_exact(&self, point: &[i64]) -> Option<Rational> {
        let WitnessValue::Rational(lambda) = &self.lambda else {
            return None;
        };
        let e = point[self.axis];
        let mut acc = Rational::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * lambda;
        }
        if e < 0 {
            acc = Rational::one() / acc;
        }
        Some(acc)
    }

    /// Symbolic re-check that Σ over the points of Π λ_j^{x_j} vanishes:
    /// the shifted mask of the points along `axis` must reduce to zero
    /// modulo the defining polynomial of λ.
    pub fn verify_symbolic(&self, points: &[Vec<i64>]) -> bool {
        let mask = induced_mask(points, self.axis);
        match &self.lambda {
            WitnessValue::Rational(r) => !r.is_zero() && mask.eval(r).is_zero(),
            WitnessValue::Algebraic { min_poly, .. } => {
                !min_poly.coeff(0).is_zero() && min_poly.divides(&mask)
            }
        }
    }
}

/// Mask of the multiset of `axis`-coordinates, shifted to valuation 0:
/// coefficient of x^e counts points with coordinate `min + e`.
fn induced_mask(points: &[Vec<i64>], axis: usize) -> UniPoly {
    let min = points.iter().map(|p| p[axis]).min().unwrap();
    let max = points.iter().map(|p| p[axis]).max().unwrap();
    let mut coeffs = vec![Rational::zero(); (max - min) as usize + 1];
    for p in points {
        let e = (p[axis] - min) as usize;
        coeffs[e] = &coeffs[e] + Rational::one();
    }
    UniPoly::from_coeffs(coeffs)
}

/// Build an annihilating character for the translates of `points` in ℤ^n.
///
/// Fixes λ_j = 1 on all coordinates except one axis along which the points
/// are not all equal; λ on that axis is a nonzero root of the induced mask.
/// Such an axis always exists for ≥ 2 distinct points, and the induced mask
/// has at least two terms, hence a nonzero root.
pub fn translation_witness(points: &[Vec<i64>]) -> Result<WitnessCharacter, WitnessError> {
    if points.len() < 2 {
        return Err(WitnessError::TooFewPoints);
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(WitnessError::DimensionMismatch);
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(WitnessError::DuplicatePoint);
            }
        }
    }
    let axis = (0..dim)
        .find(|&j| points.iter().any(|p| p[j] != points[0][j]))
        .expect("distinct points differ in some coordinate");
    let mask = induced_mask(points, axis);
    debug_assert!(mask.degree().unwrap() >= 1);

    let lambda = match rational_root(&mask) {
        Some(r) => WitnessValue::Rational(r),
        None => {
            let min_poly = mask.squarefree_part();
            let approx = dominant_root(&min_poly);
            WitnessValue::Algebraic { min_poly, approx }
        }
    };
    Ok(WitnessCharacter {
        dimension: dim,
        axis,
        lambda,
        induced_mask: mask,
    })
}

/// A nonzero rational root by the rational-root theorem, if one exists.
fn rational_root(p: &UniPoly) -> Option<Rational> {
    let val = p.valuation()?;
    let p = p.shift_down(val);
    let (ints, _) = p.primitive_integer_parts();
    let lead = ints.last()?.clone();
    let constant = ints.first()?.clone();
    let num_divs = divisors(&constant.abs());
    let den_divs = divisors(&lead.abs());
    for num in &num_divs {
        for den in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(num * BigInt::from(sign), den.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Intended for mask constant/lead coefficients, which are tiny counts.
    let n = n.magnitude().to_u64_digits();
    let n = match n.len() {
        0 => return vec![],
        1 => n[0],
        _ => return vec![BigInt::one()], // absurdly large lead: try ±1 only
    };
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(BigInt::from(d));
        }
    }
    out
}

/// All roots by Durand-Kerner iteration; deterministic starting points.
fn durand_kerner(p: &UniPoly) -> Vec<Complex64> {
    let deg = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return vec![],
    };
    let lead = crate::exact::rational_to_f64(p.leading().unwrap());
    let coeffs: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new(crate::exact::rational_to_f64(c) / lead, 0.0))
        .collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..500 {
        let mut delta_max = 0.0f64;
        for k in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            delta_max = delta_max.max(step.norm());
        }
        if delta_max < 1e-14 {
            break;
        }
    }
    roots
}

/// The root of largest modulus, polished by a few Newton steps.
fn dominant_root(p: &UniPoly) -> Complex64 {
    let roots = durand_kerner(p);
    let mut best = roots[0];
    for r in &roots {
        if r.norm() > best.norm() + 1e-12 {
            best = *r;
        }
    }
    let dp = p.derivative();
    for _ in 0..8 {
        let f = p.eval_c64(best);
        let d = dp.eval_c64(best);
        if d.norm() < 1e-300 {
            break;
        }
        best -= f / d;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_i, resultant};

    #[test]
    fn mask_polynomials_frozen() {
        let s = LinearSet::new(vec![0, 1, 3]).unwrap();
        let (p, q) = mask_polynomials(&s);
        assert_eq!(p, UniPoly::from_i64_coeffs(&[1, 1, 0, 1]));
        assert_eq!(q, UniPoly::from_i64_coeffs(&[1, 0, 1, 1]));

        let s = LinearSet::new(vec![0, 1]).unwrap();
        let (p, q) = mask_polynomials(&s);
        assert_eq!(p, q);
        assert_eq!(p, UniPoly::from_i64_coeffs(&[1, 1]));

        let s = LinearSet::new(vec![0]).unwrap();
        let (p, q) = mask_polynomials(&s);
        assert_eq!(p, UniPoly::one());
        assert_eq!(q, UniPoly::one());
    }

    #[test]
    fn consecutive_runs_are_not_pompeiu() {
        for k in 1..=8 {
            let s = LinearSet::run(k);
            let cert = linear_pompeiu_check(&s);
            assert_eq!(cert.verdict, LinearVerdict::NotPompeiu);
            let (p, _) = mask_polynomials(&s);
            assert_eq!(cert.gcd, p, "symmetric set: gcd is the whole mask");
        }
    }

    #[test]
    fn zero_one_three_is_pompeiu() {
        let s = LinearSet::new(vec![0, 1, 3]).unwrap();
        let cert = linear_pompeiu_check(&s);
        assert_eq!(cert.verdict, LinearVerdict::Pompeiu);
        assert_eq!(cert.gcd, UniPoly::one());
        // independent cross-check through the resultant route
        let (p, q) = mask_polynomials(&s);
        assert!(!resultant(&p, &q).is_zero());
    }

    #[test]
    fn symmetric_sets_are_not_pompeiu() {
        for positions in [vec![0, 1, 2, 3], vec![0, 2, 5, 7], vec![0, 4, 8]] {
            let s = LinearSet::new(positions).unwrap();
            assert!(s.is_symmetric());
            assert_eq!(
                linear_pompeiu_check(&s).verdict,
                LinearVerdict::NotPompeiu
            );
        }
    }

    #[test]
    fn verdict_invariant_under_reversal_and_certificate_divides() {
        for positions in [
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![0, 1, 2, 4],
            vec![0, 1, 5, 6],
            vec![0, 3, 4, 5, 9],
        ] {
            let s = LinearSet::new(positions).unwrap();
            let cert = linear_pompeiu_check(&s);
            let rcert = linear_pompeiu_check(&s.reversed());
            assert_eq!(cert.verdict, rcert.verdict);
            let (p, q) = mask_polynomials(&s);
            assert!(cert.gcd.divides(&p));
            assert!(cert.gcd.divides(&q));
        }
    }

    #[test]
    fn irreducibility_heuristic_examples() {
        let p = UniPoly::from_i64_coeffs(&[1, 1, 0, 1]);
        assert_eq!(irreducibility_heuristic(&p, 10).unwrap(), Some(3)); // p(3) = 31

        let p = UniPoly::from_i64_coeffs(&[1, 1]);
        assert_eq!(irreducibility_heuristic(&p, 10).unwrap(), Some(4)); // p(3)=4, p(4)=5

        let sq = UniPoly::from_i64_coeffs(&[1, 2, 1]); // (1+x)^2 has coefficient 2
        assert!(matches!(
            irreducibility_heuristic(&sq, 10),
            Err(HeuristicError::CoefficientOutsideZeroOne(_))
        ));
    }

    #[test]
    fn witness_for_two_point_set_is_minus_one() {
        let w = translation_witness(&[vec![0], vec![1]]).unwrap();
        assert_eq!(w.lambda, WitnessValue::Rational(rat_i(-1)));
        assert!(w.verify_symbolic(&[vec![0], vec![1]]));
    }

    #[test]
    fn witness_for_three_term_progression_is_cube_root() {
        let pts = vec![vec![0], vec![1], vec![2]];
        let w = translation_witness(&pts).unwrap();
        match &w.lambda {
            WitnessValue::Algebraic { min_poly, approx } => {
                assert_eq!(min_poly, &UniPoly::from_i64_coeffs(&[1, 1, 1]));
                // primitive cube root of unity
                assert!((approx.norm() - 1.0).abs() < 1e-9);
                assert!((approx.re + 0.5).abs() < 1e-9);
            }
            other => panic!("expected algebraic witness, got {other:?}"),
        }
        assert!(w.verify_symbolic(&pts));
    }

    #[test]
    fn witness_in_two_dimensions() {
        let pts = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        let w = translation_witness(&pts).unwrap();
        assert_eq!(w.axis, 0);
        assert_eq!(w.lambda, WitnessValue::Rational(rat_i(-2)));
        assert!(w.verify_symbolic(&pts));
        // direct evaluation: 1 + (-2) + 1 = 0
        let total: Rational = pts
            .iter()
            .map(|p| w.eval_exact(p).unwrap())
            .fold(Rational::zero(), |acc, v| acc + v);
        assert!(total.is_zero());
    }

    #[test]
    fn witness_survives_equal_leading_coordinates() {
        // first coordinates all equal: the axis search must move on
        let pts = vec![vec![5, 0], vec![5, 2], vec![5, 3]];
        let w = translation_witness(&pts).unwrap();
        assert_eq!(w.axis, 1);
        assert!(w.verify_symbolic(&pts));
    }

    #[test]
    fn witness_rejects_bad_input() {
        assert!(matches!(
            translation_witness(&[vec![3]]),
            Err(WitnessError::TooFewPoints)
        ));
        assert!(matches!(
            translation_witness(&[vec![0], vec![0]]),
            Err(WitnessError::DuplicatePoint)
        ));
        assert!(matches!(
            translation_witness(&[vec![0], vec![0, 1]]),
            Err(WitnessError::DimensionMismatch)
        ));
    }

    #[test]
    fn durand_kerner_finds_roots_of_unity() {
        // x^4 - 1
        let p = UniPoly::from_i64_coeffs(&[-1, 0, 0, 0, 1]);
        let mut roots = durand_kerner(&p);
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_eq!(roots.len(), 4);
        for r in roots {
            assert!(p.eval_c64(r).norm() < 1e-9);
        }
    }
}
