//! Intersection arithmetic of closed curves in four-manifolds: virtual
//! dimension, normal Chern number, adjunction, and the deductions forced on
//! a nodal degeneration of an embedded sphere with trivial normal bundle.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedError {
    #[error(
        "inconsistent with a simple J-holomorphic curve: [u]·[u] - c_N = {numerator} is {}",
        if *.numerator < 0 { "negative" } else { "odd" }
    )]
    Adjunction { numerator: i64 },
    #[error("negative pairing {0} between curves with non-identical images")]
    NegativePairing(i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// A closed curve class with its homological pairings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedClass {
    pub id: String,
    pub genus: u32,
    pub c1: i64,
    pub self_pairing: i64,
}

impl ClosedClass {
    pub fn normal_chern(&self) -> i64 {
        cn_closed(self.c1, self.genus)
    }

    pub fn delta(&self) -> Result<i64, ClosedError> {
        delta_closed(self.self_pairing, self.c1, self.genus)
    }
}

/// Virtual dimension `(n-3)(2-2g) + 2c₁(A)`.
pub fn vdim_closed(n: u32, genus: u32, c1: i64) -> i64 {
    (i64::from(n) - 3) * (2 - 2 * i64::from(genus)) + 2 * c1
}

/// `c_N = c₁(A) - χ(Σ)`.
pub fn cn_closed(c1: i64, genus: u32) -> i64 {
    c1 - (2 - 2 * i64::from(genus))
}

/// Double point count of a simple curve from `[u]·[u] = 2δ + c_N`.
pub fn delta_closed(self_pairing: i64, c1: i64, genus: u32) -> Result<i64, ClosedError> {
    let numerator = self_pairing - cn_closed(c1, genus);
    if numerator < 0 || numerator % 2 != 0 {
        return Err(ClosedError::Adjunction { numerator });
    }
    Ok(numerator / 2)
}

/// A simple curve with `δ = 0` is embedded.
pub fn is_embedded(self_pairing: i64, c1: i64, genus: u32) -> Result<bool, ClosedError> {
    Ok(delta_closed(self_pairing, c1, genus)? == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cp2Row {
    pub degree: u32,
    pub self_pairing: i64,
    pub c1: i64,
    pub c_n: i64,
    pub delta: i64,
    pub embedded: bool,
}

/// Adjunction data of a rational curve of degree `d` in the projective plane:
/// `[u]·[u] = d²`, `c₁ = 3d`.
pub fn cp2_row(degree: u32) -> Result<Cp2Row, ClosedError> {
    if degree == 0 {
        return Err(ClosedError::InvalidInput("degree must be positive".into()));
    }
    let d = i64::from(degree);
    let self_pairing = d * d;
    let c1 = 3 * d;
    let delta = delta_closed(self_pairing, c1, 0)?;
    Ok(Cp2Row {
        degree,
        self_pairing,
        c1,
        c_n: cn_closed(c1, 0),
        delta,
        embedded: delta == 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NodalSplit {
    /// Both components are embedded exceptional-type spheres meeting once
    /// transversely.
    Forced {
        delta_plus: i64,
        delta_minus: i64,
        cross: i64,
        self_plus: i64,
        self_minus: i64,
        exceptional_spheres: bool,
    },
    /// The arithmetic leaves room for several solutions; `slack` is
    /// `δ₊ + δ₋ + ([v₊]·[v₋] - 1)`.
    Underdetermined { slack: i64 },
    Impossible { reason: String },
}

/// Deduces what a nodal degeneration `{v₊, v₋}` of spheres in a class with
/// `[S]·[S] = total_self` and `c₁ = total_c1` must look like, given the
/// components' first Chern numbers.
///
/// Uses `[S]·[S] = [v₊]² + [v₋]² + 2[v₊]·[v₋]`, adjunction for each simple
/// component, `δ ≥ 0` and `[v₊]·[v₋] ≥ 1`.
pub fn analyze_nodal_split(total_self: i64, total_c1: i64, component_c1: (i64, i64)) -> Result<NodalSplit, ClosedError> {
    let (a, b) = component_c1;
    if a < 1 || b < 1 {
        return Err(ClosedError::InvalidInput(format!(
            "component first Chern numbers must be positive, got ({a}, {b})"
        )));
    }
    if a + b != total_c1 {
        return Err(ClosedError::InvalidInput(format!(
            "component first Chern numbers ({a}, {b}) do not sum to {total_c1}"
        )));
    }
    let cn_plus = cn_closed(a, 0);
    let cn_minus = cn_closed(b, 0);
    // total_self = 2δ₊ + 2δ₋ + c_N₊ + c_N₋ + 2·cross
    let rest = total_self - cn_plus - cn_minus - 2;
    if rest % 2 != 0 {
        return Ok(NodalSplit::Impossible {
            reason: format!(
                "[S]·[S] - c_N(v+) - c_N(v-) = {} is odd, but must equal 2(δ+ + δ- + [v+]·[v-])",
                rest + 2
            ),
        });
    }
    let slack = rest / 2;
    if slack < 0 {
        return Ok(NodalSplit::Impossible {
            reason: format!(
                "δ(v+) + δ(v-) + [v+]·[v-] - 1 would equal {slack} < 0"
            ),
        });
    }
    if slack > 0 {
        return Ok(NodalSplit::Underdetermined { slack });
    }
    Ok(NodalSplit::Forced {
        delta_plus: 0,
        delta_minus: 0,
        cross: 1,
        self_plus: cn_plus,
        self_minus: cn_minus,
        exceptional_spheres: cn_plus == -1 && cn_minus == -1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CoverVerdict {
    Possible { component_self: i64, delta: i64 },
    Impossible { reason: String },
}

/// Can a class with `[S]·[S] = total_self`, `c₁ = total_c1` be represented
/// by a `k`-fold cover of a simple sphere?
pub fn analyze_multiple_cover(total_self: i64, total_c1: i64, k: i64) -> Result<CoverVerdict, ClosedError> {
    if k < 2 {
        return Err(ClosedError::InvalidInput(format!("cover degree must be at least 2, got {k}")));
    }
    if total_c1 % k != 0 {
        return Ok(CoverVerdict::Impossible {
            reason: format!("c1 = {total_c1} is not divisible by k = {k}"),
        });
    }
    if total_self % (k * k) != 0 {
        return Ok(CoverVerdict::Impossible {
            reason: format!("[S]·[S] = {total_self} is not divisible by k² = {}", k * k),
        });
    }
    let c1 = total_c1 / k;
    let component_self = total_self / (k * k);
    match delta_closed(component_self, c1, 0) {
        Ok(delta) => Ok(CoverVerdict::Possible { component_self, delta }),
        Err(ClosedError::Adjunction { numerator }) => Ok(CoverVerdict::Impossible {
            reason: format!(
                "adjunction for the underlying sphere (c1 = {c1}, [v]·[v] = {component_self}) \
                 needs 2δ = {numerator}, which is {}",
                if numerator < 0 { "negative" } else { "odd" }
            ),
        }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Disjointness {
    DisjointOrIdentical,
    Intersecting,
}

/// Positivity of intersections: two closed curves with non-identical images
/// are disjoint exactly when their pairing vanishes.
pub fn disjointness_verdict(pairing: i64) -> Result<Disjointness, ClosedError> {
    match pairing {
        0 => Ok(Disjointness::DisjointOrIdentical),
        p if p > 0 => Ok(Disjointness::Intersecting),
        p => Err(ClosedError::NegativePairing(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vdim_examples() {
        assert_eq!(vdim_closed(2, 0, 2), 2);
        for g in 0..5 {
            assert_eq!(vdim_closed(2, g, 2 - 2 * i64::from(g)), 2 - 2 * i64::from(g));
        }
        assert_eq!(vdim_closed(3, 0, 2), 4);
    }

    #[test]
    fn cn_examples() {
        assert_eq!(cn_closed(2, 0), 0);
        assert_eq!(cn_closed(1, 0), -1);
        assert_eq!(cn_closed(0, 1), 0);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_closed(0, 2, 0).unwrap(), 0);
        assert!(is_embedded(0, 2, 0).unwrap());
        assert_eq!(delta_closed(0, 1, 0), Err(ClosedError::Adjunction { numerator: 1 }));
        assert_eq!(delta_closed(-4, 2, 0), Err(ClosedError::Adjunction { numerator: -4 }));
    }

    #[test]
    fn cp2_small_degrees() {
        let rows: Vec<_> = (1..=4).map(|d| cp2_row(d).unwrap()).collect();
        assert_eq!(rows.iter().map(|r| r.delta).collect::<Vec<_>>(), vec![0, 0, 1, 3]);
        assert_eq!(rows.iter().map(|r| r.embedded).collect::<Vec<_>>(), vec![true, true, false, false]);
        assert!(cp2_row(0).is_err());
    }

    #[test]
    fn ruled_surface_split() {
        let r = analyze_nodal_split(0, 2, (1, 1)).unwrap();
        assert_eq!(
            r,
            NodalSplit::Forced {
                delta_plus: 0,
                delta_minus: 0,
                cross: 1,
                self_plus: -1,
                self_minus: -1,
                exceptional_spheres: true
            }
        );
        assert!(analyze_nodal_split(0, 2, (2, 0)).is_err());
        assert!(analyze_nodal_split(0, 3, (1, 1)).is_err());
        assert!(matches!(analyze_nodal_split(1, 2, (1, 1)).unwrap(), NodalSplit::Impossible { .. }));
        assert!(matches!(analyze_nodal_split(-2, 2, (1, 1)).unwrap(), NodalSplit::Impossible { .. }));
        assert_eq!(analyze_nodal_split(4, 2, (1, 1)).unwrap(), NodalSplit::Underdetermined { slack: 2 });
    }

    #[test]
    fn double_cover_of_ruled_fibre() {
        let v = analyze_multiple_cover(0, 2, 2).unwrap();
        assert!(matches!(v, CoverVerdict::Impossible { ref reason } if reason.contains("odd")), "{v:?}");
        assert!(matches!(analyze_multiple_cover(0, 3, 2).unwrap(), CoverVerdict::Impossible { .. }));
        assert_eq!(
            analyze_multiple_cover(4, 6, 2).unwrap(),
            CoverVerdict::Possible { component_self: 1, delta: 0 }
        );
    }

    #[test]
    fn disjointness() {
        assert_eq!(disjointness_verdict(0).unwrap(), Disjointness::DisjointOrIdentical);
        assert_eq!(disjointness_verdict(1).unwrap(), Disjointness::Intersecting);
        assert!(disjointness_verdict(-1).is_err());
    }
}
