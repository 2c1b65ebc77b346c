use serde::Serialize;

use crate::model::{euler_char, gcd_cover, Scene, Sign};

use super::IntersectionError;

/// Normal Chern number
/// `c_N(u) = c₁^τ - χ + Σ_{Γ⁺} α₋(γ_z^{k_z}) - Σ_{Γ⁻} α₊(γ_z^{k_z})`.
pub fn normal_chern(scene: &Scene, u: &str) -> Result<i64, IntersectionError> {
    let c = scene.curve(u)?;
    let mut cn = c.rel_c1 - euler_char(c);
    for p in &c.punctures {
        let w = scene.windings(&p.orbit, p.multiplicity)?;
        cn += match p.sign {
            Sign::Plus => w.alpha_minus,
            Sign::Minus => -w.alpha_plus,
        };
    }
    Ok(cn)
}

/// Fredholm index `(n-3)χ + 2c₁^τ + Σ_{Γ⁺} μ_CZ - Σ_{Γ⁻} μ_CZ`.
pub fn fredholm_index(scene: &Scene, u: &str) -> Result<i64, IntersectionError> {
    let c = scene.curve(u)?;
    let n = i64::from(c.ambient_dim_half);
    let mut ind = (n - 3) * euler_char(c) + 2 * c.rel_c1;
    for p in &c.punctures {
        ind += p.sign.as_i64() * scene.windings(&p.orbit, p.multiplicity)?.cz();
    }
    Ok(ind)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CnIndexRelation {
    /// `2 c_N(u)`
    pub lhs: i64,
    /// `ind(u) - 2 + 2g + #Γ_even`
    pub rhs: i64,
    pub holds: bool,
}

/// Checks `2c_N = ind - 2 + 2g + #Γ_even`, which only holds in dimension four.
pub fn check_cn_index_relation(scene: &Scene, u: &str) -> Result<CnIndexRelation, IntersectionError> {
    let c = scene.curve(u)?;
    if c.ambient_dim_half != 2 {
        return Err(IntersectionError::NotDimensionFour {
            curve: u.to_string(),
            n: c.ambient_dim_half,
        });
    }
    let mut even = 0;
    for p in &c.punctures {
        if scene.windings(&p.orbit, p.multiplicity)?.parity() == 0 {
            even += 1;
        }
    }
    let lhs = 2 * normal_chern(scene, u)?;
    let rhs = fredholm_index(scene, u)? - 2 + 2 * i64::from(c.genus) + even;
    Ok(CnIndexRelation {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// Total spectral covering number `σ̄(u) = Σ_{Γ⁺} σ̄₋ + Σ_{Γ⁻} σ̄₊`.
pub fn spectral_covering_total(scene: &Scene, u: &str) -> Result<i64, IntersectionError> {
    let c = scene.curve(u)?;
    let mut total = 0;
    for p in &c.punctures {
        let w = scene.windings(&p.orbit, p.multiplicity)?;
        total += i64::from(gcd_cover(p.multiplicity, w.alpha(p.sign.opposite())));
    }
    debug_assert!(total >= c.punctures.len() as i64);
    Ok(total)
}

/// Asymptotic winding of a section at one puncture, with the a priori bound
/// for that puncture: `α₋` at a positive end, `α₊` at a negative end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndWinding {
    pub sign: Sign,
    pub alpha_bound: i64,
    pub wind: i64,
}

/// Zeroes hidden at infinity,
/// `Z∞ = Σ_{+} (α₋ - wind) + Σ_{-} (wind - α₊)`.
pub fn asymptotic_defect(ends: &[EndWinding]) -> Result<i64, IntersectionError> {
    let mut total = 0;
    for (i, e) in ends.iter().enumerate() {
        let gap = match e.sign {
            Sign::Plus => e.alpha_bound - e.wind,
            Sign::Minus => e.wind - e.alpha_bound,
        };
        if gap < 0 {
            return Err(IntersectionError::WindingBound {
                end: i,
                sign: e.sign,
                alpha: e.alpha_bound,
                wind: e.wind,
            });
        }
        total += gap;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroCount {
    pub zeroes: i64,
    pub z_infinity: i64,
    pub c_n: i64,
    pub holds: bool,
}

/// Checks `Z(η) + Z∞(η) = c_N(u)` for a section of the normal bundle of `u`
/// with `zeroes` zeroes and asymptotic windings `winds`, one per puncture in
/// the order the curve lists them.
pub fn check_zero_count(
    scene: &Scene,
    u: &str,
    winds: &[i64],
    zeroes: i64,
) -> Result<ZeroCount, IntersectionError> {
    let c = scene.curve(u)?;
    if winds.len() != c.punctures.len() {
        return Err(IntersectionError::InvalidInput(format!(
            "curve {u} has {} punctures but {} windings were given",
            c.punctures.len(),
            winds.len()
        )));
    }
    let mut ends = Vec::with_capacity(winds.len());
    for (p, &wind) in c.punctures.iter().zip(winds) {
        let w = scene.windings(&p.orbit, p.multiplicity)?;
        ends.push(EndWinding {
            sign: p.sign,
            alpha_bound: w.alpha(p.sign.opposite()),
            wind,
        });
    }
    let z_infinity = asymptotic_defect(&ends)?;
    let c_n = normal_chern(scene, u)?;
    Ok(ZeroCount {
        zeroes,
        z_infinity,
        c_n,
        holds: zeroes >= 0 && zeroes + z_infinity == c_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CoverWindings, CurveClass, OrbitData, PunctureSpec, RelativePairing};

    fn odd(id: &str) -> OrbitData {
        OrbitData::new(id, [(1, CoverWindings::new(0, 1).unwrap())]).unwrap()
    }

    fn page(r: usize) -> Scene {
        let orbits = (0..r).map(|i| odd(&format!("g{i}"))).collect();
        let punctures = (0..r).map(|i| PunctureSpec::positive(format!("g{i}"), 1)).collect();
        let u = CurveClass::new("page", 0, 2 - r as i64, punctures);
        Scene::new(orbits, vec![u], RelativePairing::new()).unwrap()
    }

    #[test]
    fn closed_curve_values() {
        let s = Scene::new(
            vec![],
            vec![CurveClass::new("s", 0, 2, vec![]), CurveClass::new("t", 3, 5, vec![])],
            RelativePairing::new(),
        )
        .unwrap();
        assert_eq!(normal_chern(&s, "s").unwrap(), 0);
        assert_eq!(fredholm_index(&s, "s").unwrap(), 2);
        assert_eq!(normal_chern(&s, "t").unwrap(), 5 - (2 - 6));
        assert_eq!(fredholm_index(&s, "t").unwrap(), -(2 - 6) + 10);
        assert_eq!(spectral_covering_total(&s, "s").unwrap(), 0);
    }

    #[test]
    fn planar_pages() {
        for r in 1..=4 {
            let s = page(r);
            assert_eq!(fredholm_index(&s, "page").unwrap(), 2);
            assert_eq!(normal_chern(&s, "page").unwrap(), 0);
            assert_eq!(spectral_covering_total(&s, "page").unwrap(), r as i64);
            assert!(check_cn_index_relation(&s, "page").unwrap().holds);
        }
    }

    #[test]
    fn orbit_cylinder_values() {
        for (am, ap) in [(0, 1), (1, 1)] {
            let g = OrbitData::new("g", [(1, CoverWindings::new(am, ap).unwrap())]).unwrap();
            let u = CurveClass::new(
                "u",
                0,
                0,
                vec![PunctureSpec::positive("g", 1), PunctureSpec::negative("g", 1)],
            );
            let s = Scene::new(vec![g], vec![u], RelativePairing::new()).unwrap();
            assert_eq!(normal_chern(&s, "u").unwrap(), -(ap - am));
            assert_eq!(fredholm_index(&s, "u").unwrap(), 0);
            let rel = check_cn_index_relation(&s, "u").unwrap();
            assert!(rel.holds, "{rel:?}");
        }
    }

    #[test]
    fn corrupted_c1_breaks_relation() {
        let mut s = page(2);
        let mut c = s.curve("page").unwrap().clone();
        c.rel_c1 += 1;
        s = Scene::new(s.orbits().cloned().collect(), vec![c], RelativePairing::new()).unwrap();
        let rel = check_cn_index_relation(&s, "page").unwrap();
        // 2c_N grows by 2, the index side by 2 as well: the relation is an identity
        assert!(rel.holds);
        let c = s.curve("page").unwrap().clone().with_dim_half(3);
        let s3 = Scene::new(s.orbits().cloned().collect(), vec![c], RelativePairing::new()).unwrap();
        assert!(matches!(
            check_cn_index_relation(&s3, "page"),
            Err(IntersectionError::NotDimensionFour { .. })
        ));
    }

    #[test]
    fn covering_total_at_double_cover() {
        let g = OrbitData::new(
            "g",
            [(2, CoverWindings::new(0, 1).unwrap())],
        )
        .unwrap();
        let u = CurveClass::new("u", 0, 0, vec![PunctureSpec::positive("g", 2)]);
        let s = Scene::new(vec![g], vec![u], RelativePairing::new()).unwrap();
        assert_eq!(spectral_covering_total(&s, "u").unwrap(), 2);
    }

    #[test]
    fn asymptotic_defect_examples() {
        let e = |sign, alpha_bound, wind| EndWinding {
            sign,
            alpha_bound,
            wind,
        };
        assert_eq!(asymptotic_defect(&[e(Sign::Plus, 0, 0), e(Sign::Minus, 1, 1)]).unwrap(), 0);
        assert_eq!(asymptotic_defect(&[e(Sign::Plus, 0, -2)]).unwrap(), 2);
        assert_eq!(asymptotic_defect(&[e(Sign::Minus, 1, 4)]).unwrap(), 3);
        assert!(matches!(
            asymptotic_defect(&[e(Sign::Plus, 0, 1)]),
            Err(IntersectionError::WindingBound { .. })
        ));
        assert!(asymptotic_defect(&[e(Sign::Minus, 1, 0)]).is_err());
    }
}
