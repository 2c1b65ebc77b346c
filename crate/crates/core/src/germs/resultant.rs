use super::gauss::{ExactDiv, Ring};

/// Fraction-free (Bareiss) determinant. Every division performed is exact
/// in an integral domain.
pub fn bareiss_det<R: ExactDiv>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of `a` and `b`, given by their coefficients ascending
/// in the eliminated variable with nonzero leading entries.
pub fn sylvester<R: Ring>(a: &[R], b: &[R]) -> Vec<Vec<R>> {
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two polynomials given by ascending coefficient lists.
/// Trailing zero coefficients are ignored; the resultant with the zero
/// polynomial is zero.
pub fn resultant<R: ExactDiv>(a: &[R], b: &[R]) -> R {
    let trim = |v: &[R]| {
        let len = v.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        v[..len].to_vec()
    };
    let (a, b) = (trim(a), trim(b));
    if a.is_empty() || b.is_empty() {
        return R::zero();
    }
    bareiss_det(sylvester(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germs::gauss::GaussInt;
    use crate::germs::poly::Poly;

    fn g(a: i64) -> GaussInt {
        GaussInt::new(a, 0)
    }

    #[test]
    fn integer_resultants() {
        // Res(w - 2, w - 5) = (w - 5)(2)
        assert_eq!(resultant(&[g(-2), g(1)], &[g(-5), g(1)]), g(-3));
        // Res(w² - 1, w - 1) = 0
        assert_eq!(resultant(&[g(-1), g(0), g(1)], &[g(-1), g(1)]), g(0));
        // Res(w² + 1, w - 3) = 10
        assert_eq!(resultant(&[g(1), g(0), g(1)], &[g(-3), g(1)]), g(10));
        assert_eq!(resultant(&[g(7)], &[g(1), g(1), g(1)]), g(49));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![vec![g(0), g(1), g(2)], vec![g(1), g(0), g(3)], vec![g(4), g(-3), g(8)]];
        assert_eq!(bareiss_det(m), g(-2));
    }

    #[test]
    fn cusp_divided_differences() {
        // Res_w(z + w, z² + zw + w²) = z²
        let c = |v: &[i64]| Poly::new(v.iter().map(|&a| g(a)).collect());
        let p = [c(&[0, 1]), c(&[1])];
        let q = [c(&[0, 0, 1]), c(&[0, 1]), c(&[1])];
        assert_eq!(resultant(&p, &q), c(&[0, 0, 1]));
    }
}
