//! Point configurations, motion groups, placements, and finite windows.
//!
//! A [`Configuration`] is a weighted tuple of distinct plane points. A
//! [`MotionGroup`] fixes the transformation family under study; rotations are
//! restricted to exact unit Gaussian rationals (the four Gaussian units and
//! Pythagorean units), which keeps every placement lattice-exact. A
//! [`Window`] is the finite surrogate for the plane: the lattice points
//! `(p/d, q/d)` in a rectangle. [`enumerate_placements`] lists every copy of
//! a configuration that fits entirely inside a window, in a deterministic
//! order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{
    cross, gauss, gauss_i64, gauss_one, is_unit_modulus, mul_i, GaussRational, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("configuration must contain at least one point")]
    Empty,
    #[error("points and weights must have equal length")]
    LengthMismatch,
    #[error("configuration points must be pairwise distinct")]
    DuplicatePoint,
    #[error("rotation unit must have |u|^2 = 1 exactly")]
    NotAUnit,
    #[error("scale entries must be positive")]
    NonPositiveScale,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindowError {
    #[error("window denominator must be positive")]
    BadDenominator,
    #[error("window ranges must be nonempty (lo <= hi)")]
    EmptyRange,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlacementError {
    #[error(
        "rotation/scale maps window points off the 1/{denominator} lattice (unit {unit}, scale {scale})"
    )]
    DenominatorOverflow {
        denominator: i64,
        unit: String,
        scale: String,
    },
    #[error("placement image lies outside the window")]
    OutsideWindow,
}

/// Weighted tuple of distinct plane points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<GaussRational>,
    weights: Vec<GaussRational>,
    weight_sum_nonzero: bool,
}

impl Configuration {
    pub fn new(
        points: Vec<GaussRational>,
        weights: Vec<GaussRational>,
    ) -> Result<Self, ConfigError> {
        if points.is_empty() {
            return Err(ConfigError::Empty);
        }
        if points.len() != weights.len() {
            return Err(ConfigError::LengthMismatch);
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(ConfigError::DuplicatePoint);
                }
            }
        }
        let sum = weights
            .iter()
            .fold(GaussRational::zero(), |acc, w| acc + w);
        Ok(Configuration {
            points,
            weights,
            weight_sum_nonzero: !sum.is_zero(),
        })
    }

    /// All weights 1.
    pub fn unweighted(points: Vec<GaussRational>) -> Result<Self, ConfigError> {
        let weights = vec![gauss_one(); points.len()];
        Configuration::new(points, weights)
    }

    pub fn points(&self) -> &[GaussRational] {
        &self.points
    }

    pub fn weights(&self) -> &[GaussRational] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn weight_sum(&self) -> GaussRational {
        self.weights
            .iter()
            .fold(GaussRational::zero(), |acc, w| acc + w)
    }

    pub fn weight_sum_nonzero(&self) -> bool {
        self.weight_sum_nonzero
    }
}

/// Transformation family under which copies of a configuration are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionKind {
    Translations,
    Rigid,
    LineIsometries,
    DirectSimilarities,
    OrderPreservingLineSimilarities,
}

impl MotionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MotionKind::Translations => "translations",
            MotionKind::Rigid => "rigid",
            MotionKind::LineIsometries => "line-isometries",
            MotionKind::DirectSimilarities => "direct-similarities",
            MotionKind::OrderPreservingLineSimilarities => "order-preserving-line-similarities",
        }
    }

    /// Whether orientation-reversing candidates are explored by
    /// [`overlap_isometry_search`]. In the plane, rigid motions exclude
    /// reflections by definition; the 1-d isometry group of a line includes
    /// them.
    pub fn allows_reflection(self) -> bool {
        matches!(self, MotionKind::LineIsometries)
    }

    pub fn uses_scales(self) -> bool {
        matches!(
            self,
            MotionKind::DirectSimilarities | MotionKind::OrderPreservingLineSimilarities
        )
    }
}

/// A motion kind together with its finite direction and scale data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotionGroup {
    kind: MotionKind,
    rotation_units: Vec<GaussRational>,
    scale_set: Vec<Rational>,
}

impl MotionGroup {
    pub fn new(
        kind: MotionKind,
        rotation_units: Vec<GaussRational>,
        scale_set: Vec<Rational>,
    ) -> Result<Self, ConfigError> {
        for u in &rotation_units {
            if !is_unit_modulus(u) {
                return Err(ConfigError::NotAUnit);
            }
        }
        for s in &scale_set {
            if !s.is_positive() {
                return Err(ConfigError::NonPositiveScale);
            }
        }
        Ok(MotionGroup {
            kind,
            rotation_units,
            scale_set,
        })
    }

    pub fn translations() -> Self {
        MotionGroup::new(MotionKind::Translations, vec![], vec![]).unwrap()
    }

    pub fn rigid(rotation_units: Vec<GaussRational>) -> Result<Self, ConfigError> {
        MotionGroup::new(MotionKind::Rigid, rotation_units, vec![])
    }

    pub fn line_isometries() -> Self {
        MotionGroup::new(MotionKind::LineIsometries, vec![], vec![]).unwrap()
    }

    pub fn direct_similarities(
        rotation_units: Vec<GaussRational>,
        scale_set: Vec<Rational>,
    ) -> Result<Self, ConfigError> {
        MotionGroup::new(MotionKind::DirectSimilarities, rotation_units, scale_set)
    }

    pub fn order_preserving_line_similarities(scale_set: Vec<Rational>) -> Result<Self, ConfigError> {
        MotionGroup::new(
            MotionKind::OrderPreservingLineSimilarities,
            vec![],
            scale_set,
        )
    }

    pub fn kind(&self) -> MotionKind {
        self.kind
    }

    pub fn rotation_units(&self) -> &[GaussRational] {
        &self.rotation_units
    }

    pub fn scale_set(&self) -> &[Rational] {
        &self.scale_set
    }

    /// The concrete rotation list used for enumeration, in deterministic
    /// order. Rigid and similarity kinds close the supplied units under
    /// multiplication by the four Gaussian units, so each direction comes
    /// with its quarter turns.
    pub fn rotations(&self) -> Vec<GaussRational> {
        match self.kind {
            MotionKind::Translations | MotionKind::OrderPreservingLineSimilarities => {
                vec![gauss_one()]
            }
            MotionKind::LineIsometries => vec![gauss_one(), gauss_i64(-1, 0)],
            MotionKind::Rigid | MotionKind::DirectSimilarities => {
                let mut seeds = vec![gauss_one()];
                seeds.extend(self.rotation_units.iter().cloned());
                let mut out: Vec<GaussRational> = Vec::new();
                for seed in seeds {
                    let mut u = seed;
                    for _ in 0..4 {
                        if !out.contains(&u) {
                            out.push(u.clone());
                        }
                        u = mul_i(&u);
                    }
                }
                out
            }
        }
    }

    /// The scale list used for enumeration; `1` for isometry kinds.
    pub fn scales(&self) -> Vec<Rational> {
        if self.kind.uses_scales() && !self.scale_set.is_empty() {
            self.scale_set.clone()
        } else {
            vec![Rational::one()]
        }
    }
}

/// One concrete transform: `z -> shift + rotation·scale·τ(z)` where `τ` is
/// conjugation when `reflect` is set and the identity otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub rotation: GaussRational,
    pub scale: Rational,
    pub shift: GaussRational,
    pub reflect: bool,
}

impl Placement {
    pub fn identity() -> Self {
        Placement {
            rotation: gauss_one(),
            scale: Rational::one(),
            shift: GaussRational::zero(),
            reflect: false,
        }
    }

    pub fn translation(shift: GaussRational) -> Self {
        Placement {
            shift,
            ..Placement::identity()
        }
    }

    pub fn apply(&self, z: &GaussRational) -> GaussRational {
        let base = if self.reflect { z.conj() } else { z.clone() };
        let scaled = gauss(&base.re * &self.scale, &base.im * &self.scale);
        &self.shift + &self.rotation * scaled
    }
}

/// Image tuple of a configuration under a placement, preserving point order.
pub fn apply_placement(pl: &Placement, c: &Configuration) -> Vec<GaussRational> {
    c.points().iter().map(|p| pl.apply(p)).collect()
}

/// Finite lattice window: points `(p/d, q/d)` with `p` in `x_range` and `q`
/// in `y_range` (both inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    denominator: i64,
    x_range: (i64, i64),
    y_range: (i64, i64),
}

impl Window {
    pub fn new(denominator: i64, x_range: (i64, i64), y_range: (i64, i64)) -> Result<Self, WindowError> {
        if denominator < 1 {
            return Err(WindowError::BadDenominator);
        }
        if x_range.0 > x_range.1 || y_range.0 > y_range.1 {
            return Err(WindowError::EmptyRange);
        }
        Ok(Window {
            denominator,
            x_range,
            y_range,
        })
    }

    /// Integer segment `[lo, hi]` on the real axis.
    pub fn line(lo: i64, hi: i64) -> Result<Self, WindowError> {
        Window::new(1, (lo, hi), (0, 0))
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn x_range(&self) -> (i64, i64) {
        self.x_range
    }

    pub fn y_range(&self) -> (i64, i64) {
        self.y_range
    }

    pub fn width(&self) -> usize {
        (self.x_range.1 - self.x_range.0 + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.y_range.1 - self.y_range.0 + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Window points in index order: y-major, x within a row.
    pub fn points(&self) -> impl Iterator<Item = GaussRational> + '_ {
        let d = self.denominator;
        (self.y_range.0..=self.y_range.1).flat_map(move |q| {
            (self.x_range.0..=self.x_range.1)
                .map(move |p| gauss(Rational::new(p.into(), d.into()), Rational::new(q.into(), d.into())))
        })
    }

    pub fn point_at(&self, index: usize) -> GaussRational {
        let (p, q) = self.coords_at(index);
        gauss(
            Rational::new(p.into(), self.denominator.into()),
            Rational::new(q.into(), self.denominator.into()),
        )
    }

    /// Integer lattice coordinates (numerators) of the indexed point.
    pub fn coords_at(&self, index: usize) -> (i64, i64) {
        let w = self.width();
        let q = self.y_range.0 + (index / w) as i64;
        let p = self.x_range.0 + (index % w) as i64;
        (p, q)
    }

    /// Index of an exact point, if it is on the window lattice.
    pub fn index_of(&self, z: &GaussRational) -> Option<usize> {
        let (p, q) = self.lattice_coords(z)?;
        if p < self.x_range.0 || p > self.x_range.1 || q < self.y_range.0 || q > self.y_range.1 {
            return None;
        }
        let w = self.width() as i64;
        Some(((q - self.y_range.0) * w + (p - self.x_range.0)) as usize)
    }

    /// Numerators `(p, q)` with `z = (p/d, q/d)`, if `z` is on the lattice
    /// (regardless of whether it falls inside the ranges).
    pub fn lattice_coords(&self, z: &GaussRational) -> Option<(i64, i64)> {
        let d = BigInt::from(self.denominator);
        let px = &z.re * Rational::from_integer(d.clone());
        let qy = &z.im * Rational::from_integer(d);
        if !px.is_integer() || !qy.is_integer() {
            return None;
        }
        Some((
            i64::try_from(px.to_integer()).ok()?,
            i64::try_from(qy.to_integer()).ok()?,
        ))
    }

    pub fn contains(&self, z: &GaussRational) -> bool {
        self.index_of(z).is_some()
    }
}

/// Every placement `(rotation, scale, shift over window points)` whose image
/// tuple lies entirely inside the window, ordered by rotation index, then
/// scale index, then shift in window index order.
pub fn enumerate_placements(
    c: &Configuration,
    g: &MotionGroup,
    w: &Window,
) -> Result<Vec<Placement>, PlacementError> {
    let rotations = g.rotations();
    let scales = g.scales();
    // Denominator compatibility is a property of (unit, scale), not of the
    // shift: rotated/scaled configuration offsets must stay on the lattice.
    for u in &rotations {
        for s in &scales {
            for x in c.points() {
                let image = u * gauss(&x.re * s, &x.im * s);
                if w.lattice_coords(&image).is_none() {
                    return Err(PlacementError::DenominatorOverflow {
                        denominator: w.denominator(),
                        unit: format!("{u}"),
                        scale: s.to_string(),
                    });
                }
            }
        }
    }
    let mut out = Vec::new();
    for u in &rotations {
        for s in &scales {
            let offsets: Vec<GaussRational> = c
                .points()
                .iter()
                .map(|x| u * gauss(&x.re * s, &x.im * s))
                .collect();
            for shift in w.points() {
                let ok = offsets.iter().all(|o| w.contains(&(&shift + o)));
                if ok {
                    out.push(Placement {
                        rotation: u.clone(),
                        scale: s.clone(),
                        shift,
                        reflect: false,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn point_key(z: &GaussRational) -> (Rational, Rational) {
    (z.re.clone(), z.im.clone())
}

/// Search for an isometry `σ` in the group's candidate set with
/// `|E ∩ σ(E)| = |E| − 1`. Candidates align one ordered pair of points of E
/// with another pair at equal distance; orientation-reversing candidates are
/// added when the kind allows them. Weights are ignored.
pub fn overlap_isometry_search(c: &Configuration, g: &MotionGroup) -> Option<Placement> {
    let pts = c.points();
    let n = pts.len();
    if n < 2 {
        return None;
    }
    let set: BTreeSet<(Rational, Rational)> = pts.iter().map(point_key).collect();
    let overlap_count = |pl: &Placement| -> usize {
        pts.iter()
            .filter(|p| set.contains(&point_key(&pl.apply(p))))
            .count()
    };
    let unit_allowed = |u: &GaussRational| -> bool {
        match g.kind() {
            MotionKind::Translations | MotionKind::OrderPreservingLineSimilarities => {
                *u == gauss_one()
            }
            MotionKind::LineIsometries => *u == gauss_one() || *u == gauss_i64(-1, 0),
            MotionKind::Rigid | MotionKind::DirectSimilarities => true,
        }
    };
    // Pass 0 scans pure translations, pass 1 the remaining alignments, so the
    // simplest qualifying map wins deterministically.
    for pass in 0..2 {
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let base = &pts[b] - &pts[a];
                let base_norm = base.norm_sqr();
                for a2 in 0..n {
                    for b2 in 0..n {
                        if a2 == b2 {
                            continue;
                        }
                        let image = &pts[b2] - &pts[a2];
                        if image.norm_sqr() != base_norm {
                            continue;
                        }
                        let u = &image / &base;
                        let is_translation = u == gauss_one();
                        if (pass == 0) == is_translation && unit_allowed(&u) {
                            let pl = Placement {
                                shift: &pts[a2] - &u * &pts[a],
                                rotation: u.clone(),
                                scale: Rational::one(),
                                reflect: false,
                            };
                            if overlap_count(&pl) == n - 1 {
                                return Some(pl);
                            }
                        }
                        if pass == 1 && g.kind().allows_reflection() {
                            let u = &image / base.conj();
                            let pl = Placement {
                                shift: &pts[a2] - &u * pts[a].conj(),
                                rotation: u,
                                scale: Rational::one(),
                                reflect: true,
                            };
                            if overlap_count(&pl) == n - 1 {
                                return Some(pl);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// A collinear point tuple rescaled to integer positions: the i-th input
/// point equals `anchor + step·direction·positions[i]`, positions start at 0
/// and the gcd of their gaps is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearForm {
    pub anchor: GaussRational,
    /// Primitive Gaussian-integer direction of the carrying line.
    pub direction: GaussRational,
    /// Positive rational step, so consecutive integer positions are
    /// `step·|direction|` apart geometrically.
    pub step: Rational,
    pub positions: Vec<BigInt>,
}

impl CollinearForm {
    /// Map an integer position back to the plane.
    pub fn embed(&self, k: &BigInt) -> GaussRational {
        let scale = Rational::from_integer(k.clone()) * &self.step;
        &self.anchor + gauss(&self.direction.re * &scale, &self.direction.im * &scale)
    }
}

/// If the points are collinear, rescale them onto integer positions with gap
/// gcd 1. Points with rational coordinates on a common line always have
/// commensurable distances, so collinearity is the only obstruction.
pub fn commensurability_check(points: &[GaussRational]) -> Option<CollinearForm> {
    if points.is_empty() {
        return None;
    }
    if points.len() == 1 {
        return Some(CollinearForm {
            anchor: points[0].clone(),
            direction: gauss_one(),
            step: Rational::one(),
            positions: vec![BigInt::zero()],
        });
    }
    let base = &points[1] - &points[0];
    let mut ratios = vec![Rational::zero()];
    for p in &points[1..] {
        let delta = p - &points[0];
        if !cross(&base, &delta).is_zero() {
            return None; // not collinear
        }
        // delta = r · base with r rational
        let r = if !base.re.is_zero() {
            &delta.re / &base.re
        } else {
            &delta.im / &base.im
        };
        ratios.push(r);
    }
    // Clear denominators, then divide by the gcd of the gaps.
    let mut denom_lcm = BigInt::one();
    for r in &ratios {
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = ratios
        .iter()
        .map(|r| r.numer() * (&denom_lcm / r.denom()))
        .collect();
    let min = ints.iter().min().unwrap().clone();
    for v in &mut ints {
        *v -= &min;
    }
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    for v in &mut ints {
        *v = &*v / &g;
    }
    // anchor = the point at position 0
    let zero_idx = ints.iter().position(|v| v.is_zero()).unwrap();
    // direction: primitive Gaussian integer along `base`, sign fixed so the
    // first nonzero position is positive (it is, after the min shift).
    let (dir, dir_scale) = primitive_direction(&base);
    // point_i - anchor = (ratios_i - ratios_zero) * base
    //                  = positions_i * (g/denom_lcm) * base
    let step = Rational::new(g, denom_lcm) * dir_scale;
    Some(CollinearForm {
        anchor: points[zero_idx].clone(),
        direction: dir,
        step,
        positions: ints,
    })
}

/// Write `z = scale · d` with `d` a primitive Gaussian integer (component gcd
/// 1, first nonzero component positive) and `scale` a positive rational.
fn primitive_direction(z: &GaussRational) -> (GaussRational, Rational) {
    let denom_lcm: BigInt = z.re.denom().lcm(z.im.denom());
    let a = z.re.numer() * (&denom_lcm / z.re.denom());
    let b = z.im.numer() * (&denom_lcm / z.im.denom());
    let mut g = a.gcd(&b);
    let lead = if !a.is_zero() { &a } else { &b };
    if lead.is_negative() {
        g = -g;
    }
    let dir = gauss(
        Rational::from_integer(&a / &g),
        Rational::from_integer(&b / &g),
    );
    (dir, Rational::new(g, denom_lcm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pythagorean_unit, rat};

    fn pts(v: &[(i64, i64)]) -> Vec<GaussRational> {
        v.iter().map(|&(a, b)| gauss_i64(a, b)).collect()
    }

    #[test]
    fn apply_placement_examples() {
        let c = Configuration::unweighted(pts(&[(1, 0), (0, 1)])).unwrap();
        let id = Placement::identity();
        assert_eq!(apply_placement(&id, &c), c.points().to_vec());

        // rotation by i sends {1, i} to {i, -1}
        let rot = Placement {
            rotation: gauss_i64(0, 1),
            ..Placement::identity()
        };
        assert_eq!(apply_placement(&rot, &c), pts(&[(0, 1), (-1, 0)]));

        // rotation (3+4i)/5 with shift 1 on {0, 5}
        let c = Configuration::unweighted(pts(&[(0, 0), (5, 0)])).unwrap();
        let pl = Placement {
            rotation: pythagorean_unit(2, 1).unwrap(),
            shift: gauss_i64(1, 0),
            ..Placement::identity()
        };
        assert_eq!(apply_placement(&pl, &c), pts(&[(1, 0), (4, 4)]));
    }

    #[test]
    fn isometries_preserve_squared_distances() {
        let c = Configuration::unweighted(pts(&[(0, 0), (2, 1), (-1, 3)])).unwrap();
        let pl = Placement {
            rotation: pythagorean_unit(3, 2).unwrap(),
            shift: gauss(rat(1, 2), rat(-2, 3)),
            reflect: false,
            scale: Rational::one(),
        };
        let img = apply_placement(&pl, &c);
        for i in 0..3 {
            for j in 0..3 {
                let before = (&c.points()[i] - &c.points()[j]).norm_sqr();
                let after = (&img[i] - &img[j]).norm_sqr();
                assert_eq!(before, after);
            }
        }
        // with a scale, distances scale by scale^2
        let pl = Placement {
            scale: rat(3, 2),
            ..pl
        };
        let img = apply_placement(&pl, &c);
        for i in 0..3 {
            for j in 0..3 {
                let before = (&c.points()[i] - &c.points()[j]).norm_sqr();
                let after = (&img[i] - &img[j]).norm_sqr();
                assert_eq!(after, before * rat(9, 4));
            }
        }
    }

    #[test]
    fn enumerate_translations_on_a_line() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0)])).unwrap();
        let w = Window::line(0, 5).unwrap();
        let placements = enumerate_placements(&c, &MotionGroup::translations(), &w).unwrap();
        assert_eq!(placements.len(), 5);
        for (k, pl) in placements.iter().enumerate() {
            assert_eq!(pl.shift, gauss_i64(k as i64, 0));
        }
    }

    #[test]
    fn enumerate_rigid_matches_brute_force_scan() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0)])).unwrap();
        let g = MotionGroup::rigid(vec![]).unwrap();
        let w = Window::new(1, (0, 5), (0, 5)).unwrap();
        let placements = enumerate_placements(&c, &g, &w).unwrap();
        // independent full scan over (unit, shift)
        let mut expected = 0usize;
        for u in g.rotations() {
            for shift in w.points() {
                let ok = c
                    .points()
                    .iter()
                    .all(|x| w.contains(&(&shift + &u * x)));
                if ok {
                    expected += 1;
                }
            }
        }
        assert_eq!(placements.len(), expected);
        assert_eq!(placements.len(), 120); // 4 units x 30 admissible shifts

        // closure property: every image point is inside the window
        for pl in &placements {
            for img in apply_placement(pl, &c) {
                assert!(w.contains(&img));
            }
        }
    }

    #[test]
    fn enumerate_empty_when_window_too_small() {
        let c = Configuration::unweighted(pts(&[(0, 0), (7, 0)])).unwrap();
        let w = Window::line(0, 5).unwrap();
        let placements = enumerate_placements(&c, &MotionGroup::translations(), &w).unwrap();
        assert!(placements.is_empty());
    }

    #[test]
    fn enumerate_rejects_incompatible_denominator() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0)])).unwrap();
        let g = MotionGroup::rigid(vec![pythagorean_unit(2, 1).unwrap()]).unwrap();
        let w = Window::new(1, (0, 5), (0, 5)).unwrap();
        assert!(matches!(
            enumerate_placements(&c, &g, &w),
            Err(PlacementError::DenominatorOverflow { .. })
        ));
    }

    #[test]
    fn overlap_search_arithmetic_progression() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0), (2, 0)])).unwrap();
        let pl = overlap_isometry_search(&c, &MotionGroup::line_isometries()).unwrap();
        // found map is the translation by 1 (first candidate in scan order)
        assert_eq!(pl.rotation, gauss_one());
        assert_eq!(pl.shift, gauss_i64(1, 0));
        assert_overlap_is(&c, &pl, 2);
    }

    #[test]
    fn overlap_search_square_under_rigid_fails() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0), (0, 1), (1, 1)])).unwrap();
        assert!(overlap_isometry_search(&c, &MotionGroup::rigid(vec![]).unwrap()).is_none());
    }

    #[test]
    fn overlap_search_non_progression_needs_point_reflection() {
        let c = Configuration::unweighted(pts(&[(0, 0), (1, 0), (3, 0)])).unwrap();
        // translations alone never reach overlap 2
        assert!(overlap_isometry_search(&c, &MotionGroup::translations()).is_none());
        let pl = overlap_isometry_search(&c, &MotionGroup::line_isometries()).unwrap();
        assert_overlap_is(&c, &pl, 2);
        // the map reverses orientation on the line
        assert_eq!(pl.rotation, gauss_i64(-1, 0));
    }

    fn assert_overlap_is(c: &Configuration, pl: &Placement, expect: usize) {
        let set: BTreeSet<_> = c.points().iter().map(point_key).collect();
        let hits = c
            .points()
            .iter()
            .filter(|p| set.contains(&point_key(&pl.apply(p))))
            .count();
        assert_eq!(hits, expect);
    }

    #[test]
    fn commensurability_examples() {
        // {0, 1/2, 3/2} -> direction 1, positions 0,1,3
        let points = vec![
            gauss(rat(0, 1), rat(0, 1)),
            gauss(rat(1, 2), rat(0, 1)),
            gauss(rat(3, 2), rat(0, 1)),
        ];
        let form = commensurability_check(&points).unwrap();
        assert_eq!(form.direction, gauss_one());
        assert_eq!(
            form.positions,
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(3)]
        );
        for (p, k) in points.iter().zip(&form.positions) {
            assert_eq!(&form.embed(k), p);
        }

        assert!(commensurability_check(&pts(&[(0, 0), (1, 0), (0, 1)])).is_none());

        let form = commensurability_check(&pts(&[(0, 0), (1, 0)])).unwrap();
        assert_eq!(
            form.positions,
            vec![BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn commensurability_round_trip_on_slanted_line() {
        let points = vec![
            gauss(rat(1, 3), rat(1, 2)),
            gauss(rat(4, 3), rat(3, 2)),
            gauss(rat(-2, 3), rat(-1, 2)),
            gauss(rat(7, 3), rat(5, 2)),
        ];
        let form = commensurability_check(&points).unwrap();
        let gaps_gcd = {
            let mut sorted = form.positions.clone();
            sorted.sort();
            let mut g = BigInt::zero();
            for w in sorted.windows(2) {
                g = g.gcd(&(&w[1] - &w[0]));
            }
            g
        };
        assert_eq!(gaps_gcd, BigInt::one());
        assert!(form.positions.iter().min().unwrap().is_zero());
        for (p, k) in points.iter().zip(&form.positions) {
            assert_eq!(&form.embed(k), p);
        }
    }

    #[test]
    fn window_indexing_round_trips() {
        let w = Window::new(2, (-3, 4), (-1, 2)).unwrap();
        assert_eq!(w.len(), 8 * 4);
        for (i, p) in w.points().enumerate() {
            assert_eq!(w.index_of(&p), Some(i));
            assert_eq!(w.point_at(i), p);
        }
        assert!(!w.contains(&gauss(rat(1, 3), rat(0, 1))));
        assert!(!w.contains(&gauss_i64(99, 0)));
    }
}
