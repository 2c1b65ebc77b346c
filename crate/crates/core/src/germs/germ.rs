use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::gauss::{GaussInt, GaussRat, Ring};
use super::poly::Poly;
use super::resultant::resultant;
use super::GermError;

/// A holomorphic polynomial germ `z ↦ (p(z), q(z))` into `ℂ²` with
/// `p(0) = q(0) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Germ {
    p: Poly<GaussRat>,
    q: Poly<GaussRat>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GermFile {
    p: Vec<[i64; 4]>,
    q: Vec<[i64; 4]>,
}

impl Germ {
    pub fn new(p: Poly<GaussRat>, q: Poly<GaussRat>) -> Result<Self, GermError> {
        if p.is_zero() && q.is_zero() {
            return Err(GermError::ConstantGerm);
        }
        if !p.coeff(0).is_zero() || !q.coeff(0).is_zero() {
            return Err(GermError::NotAtOrigin);
        }
        Ok(Germ { p, q })
    }

    /// Germ with real integer coefficients, ascending in degree.
    pub fn from_ints(p: &[i64], q: &[i64]) -> Result<Self, GermError> {
        let lift = |v: &[i64]| Poly::new(v.iter().map(|&a| GaussRat::from_ints(a, 0)).collect());
        Germ::new(lift(p), lift(q))
    }

    /// Germ with Gaussian integer coefficients `(re, im)`, ascending.
    pub fn from_gauss_ints(p: &[(i64, i64)], q: &[(i64, i64)]) -> Result<Self, GermError> {
        let lift = |v: &[(i64, i64)]| Poly::new(v.iter().map(|&(a, b)| GaussRat::from_ints(a, b)).collect());
        Germ::new(lift(p), lift(q))
    }

    /// `(z^a, z^b)`
    pub fn monomial(a: usize, b: usize) -> Self {
        let one = <GaussRat as Ring>::one();
        Germ::new(Poly::monomial(one.clone(), a), Poly::monomial(one, b)).expect("positive exponents give a germ")
    }

    pub fn p(&self) -> &Poly<GaussRat> {
        &self.p
    }

    pub fn q(&self) -> &Poly<GaussRat> {
        &self.q
    }

    pub fn from_json(text: &str) -> Result<Self, GermError> {
        let file: GermFile = serde_json::from_str(text).map_err(|e| GermError::Parse(e.to_string()))?;
        let lift = |v: &[[i64; 4]]| -> Result<Poly<GaussRat>, GermError> {
            v.iter()
                .map(|&[a, b, c, d]| {
                    GaussRat::from_parts(a, b, c, d).ok_or_else(|| GermError::Parse("zero denominator".into()))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Poly::new)
        };
        Germ::new(lift(&file.p)?, lift(&file.q)?)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, GermError> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| GermError::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String, GermError> {
        let lower = |p: &Poly<GaussRat>| -> Result<Vec<[i64; 4]>, GermError> {
            p.coeffs()
                .iter()
                .map(|c| c.to_parts().ok_or_else(|| GermError::Parse(format!("coefficient {c} exceeds 64 bits"))))
                .collect()
        };
        let file = GermFile {
            p: lower(&self.p)?,
            q: lower(&self.q)?,
        };
        Ok(serde_json::to_string(&file).expect("germ files serialize"))
    }

    /// Applies the linear map `[[a, b], [c, d]]` to the target.
    pub fn map_target(&self, m: [[GaussRat; 2]; 2]) -> Result<Self, GermError> {
        let lin = |x: &GaussRat, y: &GaussRat| {
            let sx = self.p.map(|c| c.mul(x));
            let sy = self.q.map(|c| c.mul(y));
            sx.add(&sy)
        };
        Germ::new(lin(&m[0][0], &m[0][1]), lin(&m[1][0], &m[1][1]))
    }

    /// Reparametrizes by `z ↦ a·z`.
    pub fn rescale(&self, a: &GaussRat) -> Self {
        Germ {
            p: self.p.scale_var(a),
            q: self.q.scale_var(a),
        }
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poly<GaussRat>| {
            let terms: Vec<String> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| {
                    if c == &<GaussRat as Ring>::one() {
                        format!("z^{n}")
                    } else {
                        format!("{c}·z^{n}")
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        };
        write!(f, "({}, {})", show(&self.p), show(&self.q))
    }
}

/// A point `[x : y]` of the projective line, normalized to `[1 : y]` or
/// `[0 : 1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tangent {
    pub x: GaussRat,
    pub y: GaussRat,
}

impl fmt::Display for Tangent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

fn order(p: &Poly<GaussRat>) -> usize {
    p.order().unwrap_or(usize::MAX)
}

/// `k = min(ord₀ p, ord₀ q)` and the tangent line spanned by the degree-`k`
/// coefficients; the germ is immersed iff `k = 1`.
pub fn critical_order(u: &Germ) -> (u32, Tangent) {
    let k = order(&u.p).min(order(&u.q));
    let (a, b) = (u.p.coeff(k), u.q.coeff(k));
    let tangent = match a.inv() {
        Some(inv) => Tangent {
            x: <GaussRat as Ring>::one(),
            y: b.mul(&inv),
        },
        None => Tangent {
            x: <GaussRat as Ring>::zero(),
            y: <GaussRat as Ring>::one(),
        },
    };
    (k as u32, tangent)
}

/// Substitutes `z ↦ z^k` in both coordinates.
pub fn branched_cover(u: &Germ, k: u32) -> Germ {
    assert!(k >= 1, "cover degree must be positive");
    Germ {
        p: u.p.compose_power(k as usize),
        q: u.q.compose_power(k as usize),
    }
}

/// A polynomial in `(z, w)` as a list of `z`-polynomials ascending in `w`.
pub(crate) type Bivariate = Vec<Poly<GaussRat>>;

/// Clears all denominators by one common integer factor, which leaves the
/// vanishing order of any resultant unchanged.
fn to_integral(f: &Bivariate) -> Vec<Poly<GaussInt>> {
    let mut lcm = BigInt::one();
    for c in f.iter().flat_map(|p| p.coeffs()) {
        lcm = lcm.lcm(&c.denominator_lcm());
    }
    f.iter().map(|p| p.map(|c| c.to_gauss_int(&lcm))).collect()
}

pub(crate) fn resultant_in_z(a: &Bivariate, b: &Bivariate) -> Poly<GaussInt> {
    resultant(&to_integral(a), &to_integral(b))
}

/// `f(z) + shift - g(w)`
pub(crate) fn difference(f: &Poly<GaussRat>, g: &Poly<GaussRat>, shift: &GaussRat) -> Bivariate {
    let mut out: Bivariate = vec![f.add(&Poly::constant(shift.clone()))];
    out.extend(g.coeffs().iter().skip(1).map(|c| Poly::constant(c.neg())));
    out
}

/// `(f(z) - f(w)) / (z - w) + shift`
pub(crate) fn divided_difference(f: &Poly<GaussRat>, shift: &GaussRat) -> Bivariate {
    let deg = f.degree().unwrap_or(0);
    let mut out: Bivariate = (0..deg.max(1))
        .map(|b| {
            Poly::new(
                (0..deg.saturating_sub(b))
                    .map(|a| f.coeff(a + b + 1))
                    .collect(),
            )
        })
        .collect();
    out[0] = out[0].add(&Poly::constant(shift.clone()));
    out
}

/// True when `gcd(f, g)` is a power of the variable, i.e. the two have no
/// common root other than 0.
fn only_origin_in_common(f: &Poly<GaussRat>, g: &Poly<GaussRat>) -> bool {
    let d = f.gcd(g);
    match d.degree() {
        None => false,
        Some(n) => d == Poly::monomial(<GaussRat as Ring>::one(), n),
    }
}

pub(crate) fn check_intersection_fiber(v: &Germ) -> Result<(), GermError> {
    if only_origin_in_common(&v.p, &v.q) {
        Ok(())
    } else {
        Err(GermError::DomainTooLarge)
    }
}

/// Local intersection index `ι(u, 0; v, 0)`, the vanishing order at `z = 0`
/// of `Res_w(p_u(z) - p_v(w), q_u(z) - q_v(w))`.
pub fn local_intersection(u: &Germ, v: &Germ) -> Result<u32, GermError> {
    check_intersection_fiber(v)?;
    let zero = <GaussRat as Ring>::zero();
    let r = resultant_in_z(&difference(&u.p, &v.p, &zero), &difference(&u.q, &v.q, &zero));
    match r.order() {
        Some(n) => Ok(n as u32),
        None => Err(GermError::IdenticalImages),
    }
}

/// Largest `d` such that both coordinates are polynomials in `z^d`.
fn exponent_gcd(u: &Germ) -> usize {
    u.p.coeffs()
        .iter()
        .enumerate()
        .chain(u.q.coeffs().iter().enumerate())
        .filter(|(_, c)| !c.is_zero())
        .fold(0, |g, (n, _)| g.gcd(&n))
}

/// Checks the preconditions of the double point count and returns the
/// coordinate-line case directly.
pub(crate) fn check_delta_input(u: &Germ) -> Result<Option<u32>, GermError> {
    if exponent_gcd(u) > 1 {
        return Err(GermError::NotSimple);
    }
    if u.p.is_zero() || u.q.is_zero() {
        // a germ into a coordinate line is a local branched cover unless immersed
        let f = if u.p.is_zero() { &u.q } else { &u.p };
        return if f.order() == Some(1) { Ok(Some(0)) } else { Err(GermError::NotSimple) };
    }
    if !only_origin_in_common(&u.p.shift_down(1), &u.q.shift_down(1)) {
        return Err(GermError::DomainTooLarge);
    }
    Ok(None)
}

/// Singularity index `δ(u, 0)`: half the vanishing order at `z = 0` of
/// `Res_w(P, Q)` for the divided differences `P, Q` of the coordinates.
pub fn delta_local(u: &Germ) -> Result<u32, GermError> {
    if let Some(d) = check_delta_input(u)? {
        return Ok(d);
    }
    let zero = <GaussRat as Ring>::zero();
    let r = resultant_in_z(&divided_difference(&u.p, &zero), &divided_difference(&u.q, &zero));
    match r.order() {
        Some(n) if n % 2 == 0 => Ok((n / 2) as u32),
        Some(n) => Err(GermError::OddDoublePointCount(n as u32)),
        None => Err(GermError::NonIsolatedDoublePoints),
    }
}

/// Data of the normal form `u(z) = (z^k, û(z))`, read off a germ one of whose
/// coordinates is a single monomial of the critical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GermNormalForm {
    pub k: u32,
    pub tangent: Tangent,
    /// `ℓ_j` with `ord(û_j - û) = k + ℓ_j` for `û_j(z) = û(e^{2πij/k} z)`,
    /// `j = 1, …, k-1`; `None` marks an identical branch.
    pub branch_orders: Vec<Option<u32>>,
}

pub fn normal_form(u: &Germ) -> Result<GermNormalForm, GermError> {
    let (k, tangent) = critical_order(u);
    let is_monomial_of = |f: &Poly<GaussRat>| {
        f.order() == Some(k as usize) && f.degree() == Some(k as usize)
    };
    let other = if is_monomial_of(&u.p) {
        &u.q
    } else if is_monomial_of(&u.q) {
        &u.p
    } else {
        return Err(GermError::NoMonomialCoordinate);
    };
    let k_us = k as usize;
    let branch_orders = (1..k_us)
        .map(|j| {
            other
                .coeffs()
                .iter()
                .enumerate()
                .find(|(n, c)| !c.is_zero() && (j * n) % k_us != 0)
                .map(|(n, _)| (n - k_us) as u32)
        })
        .collect();
    Ok(GermNormalForm { k, tangent, branch_orders })
}

/// `δ = ½ Σ_{j=1}^{k-1} (k + ℓ_j - 1)`
pub fn delta_from_normal_form(nf: &GermNormalForm) -> Result<u32, GermError> {
    let mut total = 0;
    for l in &nf.branch_orders {
        total += nf.k + l.ok_or(GermError::NotSimple)? - 1;
    }
    if total % 2 != 0 {
        return Err(GermError::OddDoublePointCount(total));
    }
    Ok(total / 2)
}
