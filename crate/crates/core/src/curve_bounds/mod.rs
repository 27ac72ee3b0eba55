//! Upper bounds on the number of cusps `c` and singular points `s` of a plane
//! curve `C` in terms of its Betti numbers `b1`, `b2` (number of irreducible
//! components) and total genus `g`, plus the affine versions.
//!
//! All bounds are exact rationals. Each closed formula is also reachable by
//! substituting the topological identities into the basic cusp inequality
//! `2c <= 12 e + 5 - 3 p_a`, and the tests check that both routes agree.
//!
//! The projective bounds assume the complement of `C` has log Kodaira
//! dimension 2. That cannot be decided from the numbers held here, so every
//! result carries [`KAPPA_CAVEAT`].

mod incidence;
mod rational;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use incidence::{build_incidence_graph, IncidenceGraph};
pub use rational::RationalBound;

use crate::{Error, Result};

pub const KAPPA_CAVEAT: &str =
    "valid when the complement of the curve in CP^2 has log Kodaira dimension 2 \
     (true e.g. when some irreducible component has at least 3 singular points); not checked";

pub const IRREDUCIBLE_NOTE: &str =
    "irreducible case: the bounds exceed 3, so only curves with s >= 3 matter, \
     and for those the log Kodaira dimension condition holds";

/// Topology of a projective plane curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveTopology {
    pub b1: u64,
    pub b2: u64,
    pub g: u64,
    /// Number of local branches at each singular point, if known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singularities: Option<Vec<u32>>,
}

/// `s`, `c` and `d` read off a list of branch counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingularityStats {
    pub s: u64,
    pub c: u64,
    pub d: u64,
}

impl SingularityStats {
    pub fn from_branch_counts(r: &[u32]) -> Result<Self> {
        if let Some(i) = r.iter().position(|&x| x == 0) {
            return Err(Error::InvalidCurve(format!(
                "singular point {i} has no local branches"
            )));
        }
        Ok(SingularityStats {
            s: r.len() as u64,
            c: r.iter().filter(|&&x| x == 1).count() as u64,
            d: r.iter().map(|&x| u64::from(x - 1)).sum(),
        })
    }
}

impl CurveTopology {
    pub fn new(b1: u64, g: u64, b2: u64) -> Self {
        CurveTopology {
            b1,
            b2,
            g,
            singularities: None,
        }
    }

    /// Rejects impossible data and returns warnings for suspicious data.
    pub fn validate(&self) -> Result<Vec<String>> {
        if self.b2 == 0 {
            return Err(Error::InvalidCurve(
                "b2 (number of components) must be at least 1".into(),
            ));
        }
        let mut warnings = Vec::new();
        if let Some(r) = &self.singularities {
            SingularityStats::from_branch_counts(r)?;
        }
        if 2 * self.g > self.b1 {
            warnings.push(format!(
                "g = {} exceeds b1/2 = {}/2; no curve has this topology since b1 = 2g + b1(dual graph)",
                self.g, self.b1
            ));
        }
        Ok(warnings)
    }

    pub fn singularity_stats(&self) -> Option<Result<SingularityStats>> {
        self.singularities
            .as_deref()
            .map(SingularityStats::from_branch_counts)
    }
}

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Euler characteristic of `CP^2 - C`: `2 + b1 - b2`.
pub fn euler_complement(b1: i64, b2: i64) -> i64 {
    2 + b1 - b2
}

/// Arithmetic genus of the resolved boundary divisor, `b1 - g`.
pub fn pa_from_betti(b1: i64, g: i64) -> i64 {
    b1 - g
}

/// `p_a = g + b1(dual graph)`.
pub fn pa_from_dual_graph(g: i64, b1_dual: i64) -> i64 {
    g + b1_dual
}

/// `b1 = 2g + b1(dual graph)`.
pub fn b1_from_dual_graph(g: i64, b1_dual: i64) -> i64 {
    2 * g + b1_dual
}

/// `b1 = 2g + 1 - e(incidence graph)`, since the incidence graph has the
/// homotopy type of the dual graph of the resolved curve.
pub fn b1_from_incidence(g: u64, graph: &IncidenceGraph) -> i64 {
    2 * g as i64 + 1 - graph.euler_characteristic()
}

/// `c <= (12 e + 5 - 3 p_a) / 2`.
pub fn cusp_bound_inequality1(e_complement: i64, p_a: i64) -> RationalBound {
    let num = BigInt::from(12) * e_complement + 5 - BigInt::from(3) * p_a;
    RationalBound::new(num, 2)
}

/// `c <= (9 b1 + 3 g - 12 b2 + 29) / 2`.
pub fn cusp_bound_projective(t: &CurveTopology) -> RationalBound {
    let num = int(9) * t.b1 + int(3) * t.g - int(12) * t.b2 + 29;
    RationalBound::new(num, 2)
}

/// `s <= (11 b1 - g - 10 b2 + 27) / 2`.
pub fn sing_bound_projective(t: &CurveTopology) -> RationalBound {
    let num = int(11) * t.b1 - int(t.g) - int(10) * t.b2 + 27;
    RationalBound::new(num, 2)
}

/// `s <= c + d` with `d = b2 + b1 - 2g - 1`.
pub fn sing_from_cusp(c_bound: &RationalBound, t: &CurveTopology) -> RationalBound {
    c_bound.shifted(int(t.b2) + int(t.b1) - int(2) * t.g - 1)
}

/// `(21 g + 17) / 2`, the bound for a curve homeomorphic to a genus-`g` surface.
pub fn tono_reference(g: u64) -> RationalBound {
    RationalBound::new(int(21) * g + 17, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveBounds {
    pub cusps: RationalBound,
    pub singular_points: RationalBound,
    pub caveat: &'static str,
}

pub fn bounds_projective(t: &CurveTopology) -> ProjectiveBounds {
    ProjectiveBounds {
        cusps: cusp_bound_projective(t),
        singular_points: sing_bound_projective(t),
        caveat: KAPPA_CAVEAT,
    }
}

/// Bounds for an irreducible curve (`b2 = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleBounds {
    /// `(9/2) b1 + (3/2) g + 17/2`
    pub cusps: RationalBound,
    /// `(21/4) b1 + 17/2`, using `g <= b1/2`.
    pub cusps_genus_free: RationalBound,
    /// `(11/2) b1 - (1/2) g + 17/2`
    pub singular_points: RationalBound,
    /// `(11/2) b1 + 17/2`, using `g >= 0`.
    pub singular_points_genus_free: RationalBound,
    pub note: &'static str,
}

pub fn bounds_irreducible(b1: u64, g: u64) -> IrreducibleBounds {
    IrreducibleBounds {
        cusps: RationalBound::new(int(9) * b1 + int(3) * g + 17, 2),
        cusps_genus_free: RationalBound::new(int(21) * b1 + 34, 4),
        singular_points: RationalBound::new(int(11) * b1 - int(g) + 17, 2),
        singular_points_genus_free: RationalBound::new(int(11) * b1 + 17, 2),
        note: IRREDUCIBLE_NOTE,
    }
}

/// Topology of the part of a plane curve in an affine chart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineCurveTopology {
    pub b0_aff: u64,
    pub b1_aff: u64,
    /// Number of points at infinity.
    pub p: u64,
    pub b2: u64,
    pub g: u64,
    /// First Betti number of the projective closure, if known; must agree
    /// with the value implied by the affine data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b1: Option<u64>,
}

impl AffineCurveTopology {
    /// `b1 = b2 + 1 - b0_aff + b1_aff - p`.
    pub fn bridged_b1(&self) -> i64 {
        self.b2 as i64 + 1 - self.b0_aff as i64 + self.b1_aff as i64 - self.p as i64
    }

    /// The projective closure, with `b1` from the bridge identity.
    pub fn projective(&self) -> Result<CurveTopology> {
        if self.p == 0 {
            return Err(Error::InvalidCurve(
                "p (points at infinity) must be at least 1".into(),
            ));
        }
        if self.b0_aff == 0 {
            return Err(Error::InvalidCurve("b0_aff must be at least 1".into()));
        }
        if self.b2 == 0 {
            return Err(Error::InvalidCurve(
                "b2 (number of components) must be at least 1".into(),
            ));
        }
        let bridged = self.bridged_b1();
        if bridged < 0 {
            return Err(Error::InvalidCurve(format!(
                "b2 + 1 - b0_aff + b1_aff - p = {bridged} is negative"
            )));
        }
        if let Some(b1) = self.b1 {
            if b1 as i64 != bridged {
                return Err(Error::InvalidCurve(format!(
                    "b1 = {b1} contradicts b2 + 1 - b0_aff + b1_aff - p = {bridged}"
                )));
            }
        }
        Ok(CurveTopology::new(bridged as u64, self.g, self.b2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineBounds {
    pub bridged_b1: u64,
    /// `(9/2)(b1_aff - b0_aff - p) + (3/2)(g - b2) + 19`
    pub cusps: RationalBound,
    /// `(11/2)(b1_aff - b0_aff - p) + (1/2)(b2 - g) + 19`
    pub singular_points: RationalBound,
    pub caveat: &'static str,
    /// Present when the curve is irreducible (`b2 = 1`, `b0_aff = 1`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<AffineIrreducibleBounds>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineIrreducibleBounds {
    /// `(9/2)(b1_aff - p) + (3/2) g + 13`
    pub cusps: RationalBound,
    /// `(9/2) b1_aff + (3/2) g + 17/2`, using `p >= 1`.
    pub cusps_without_p: RationalBound,
    /// `(21/4) b1_aff + 17/2`, using also `g <= b1/2 <= b1_aff/2`.
    pub cusps_linear: RationalBound,
    /// `(11/2)(b1_aff - p) - (1/2) g + 14`
    pub singular_points: RationalBound,
    /// `(11/2) b1_aff - (1/2) g + 17/2`, using `p >= 1`.
    pub singular_points_without_p: RationalBound,
    pub note: &'static str,
}

pub fn bounds_affine(a: &AffineCurveTopology) -> Result<AffineBounds> {
    let projective = a.projective()?;
    let x = int(a.b1_aff) - int(a.b0_aff) - int(a.p);
    let cusps = RationalBound::new(int(9) * &x + int(3) * a.g - int(3) * a.b2 + 38, 2);
    let singular_points = RationalBound::new(int(11) * &x + int(a.b2) - int(a.g) + 38, 2);
    let irreducible = (a.b2 == 1 && a.b0_aff == 1).then(|| {
        let y = int(a.b1_aff) - int(a.p);
        AffineIrreducibleBounds {
            cusps: RationalBound::new(int(9) * &y + int(3) * a.g + 26, 2),
            cusps_without_p: RationalBound::new(int(9) * a.b1_aff + int(3) * a.g + 17, 2),
            cusps_linear: RationalBound::new(int(21) * a.b1_aff + 34, 4),
            singular_points: RationalBound::new(int(11) * &y - int(a.g) + 28, 2),
            singular_points_without_p: RationalBound::new(int(11) * a.b1_aff - int(a.g) + 17, 2),
            note: IRREDUCIBLE_NOTE,
        }
    });
    Ok(AffineBounds {
        bridged_b1: projective.b1,
        cusps,
        singular_points,
        caveat: KAPPA_CAVEAT,
        irreducible,
    })
}
