use super::gauss::{ExactDiv, Ring};

/// Univariate polynomial with coefficients ascending in degree and no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c·z^n`
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at 0; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Substitutes `z ↦ z^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            out[n * k] = c.clone();
        }
        Poly::new(out)
    }

    /// Substitutes `z ↦ a·z`.
    pub fn scale_var(&self, a: &R) -> Self {
        let mut pow = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul(&pow));
            pow = pow.mul(a);
        }
        Poly::new(out)
    }

    /// Divides by `z^n`, dropping lower terms.
    pub fn shift_down(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().skip(n).cloned().collect())
    }

    pub fn eval(&self, z: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(z).add(c))
    }

    pub fn derivative(&self, from_int: impl Fn(i64) -> R) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.mul(&from_int(n as i64)))
                .collect(),
        )
    }

    /// Exact quotient and remainder when every leading-coefficient division
    /// succeeds; `None` otherwise.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)>
    where
        R: ExactDiv,
    {
        let dl = d.leading()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((Poly::new(vec![]), Poly::new(vec![])));
        };
        if sd < dd {
            return Some((Poly::new(vec![]), self.clone()));
        }
        let mut quot = vec![R::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(dl)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&q.mul(dc));
            }
            quot[i] = q;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor over a field.
    pub fn gcd(&self, other: &Self) -> Self
    where
        R: ExactDiv,
    {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("division by a nonzero polynomial over a field");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.map(|c| c.exact_div(&l).expect("field division")),
            None => a,
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(out)
    }
    fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(Ring::neg).collect())
    }
}

impl<R: ExactDiv> ExactDiv for Poly<R> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }
}
