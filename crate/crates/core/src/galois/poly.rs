//! Univariate polynomials over a [`Field`], stored as ascending
//! coefficient vectors with no trailing zeros.

use super::{Elem, Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.q()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The monic vanishing polynomial `prod (x - a_i)` of a duplicate-free
    /// root set.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Result<Self, FieldError> {
        let mut seen = vec![false; field.q() as usize];
        let mut coeffs: Vec<Elem> = vec![1];
        for &a in roots {
            field.check(a)?;
            if seen[a as usize] {
                return Err(FieldError::DuplicateRoot(a));
            }
            seen[a as usize] = true;
            let neg_a = field.neg(a);
            coeffs.push(0);
            for i in (0..coeffs.len() - 1).rev() {
                let scaled = field.mul(coeffs[i], neg_a);
                coeffs[i + 1] = field.add(coeffs[i + 1], coeffs[i]);
                coeffs[i] = scaled;
            }
        }
        Ok(Poly { coeffs })
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, a: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, a), c))
    }

    /// Formal derivative in characteristic p: coefficient `i * a_i` with
    /// the index reduced mod p.
    pub fn derivative(&self, field: &Field) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| field.mul(field.scalar(i as u64), c))
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    /// Evaluates the composition `self(inner(a))` without expanding it.
    pub fn compose_eval(&self, field: &Field, inner: &Poly, a: Elem) -> Elem {
        self.eval(field, inner.eval(field, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Field {
        Field::new(3, 2).unwrap()
    }

    #[test]
    fn vanishing_polynomial_of_prime_subfield() {
        let f = gf9();
        // prod over GF(3) roots = x^3 - x = x^3 + 2x.
        let p = Poly::from_roots(&f, &[0, 1, 2]).unwrap();
        assert_eq!(p.coeffs(), &[0, 2, 0, 1]);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn derivative_drops_char_multiples() {
        let f = gf9();
        let p = Poly::from_coeffs(&f, vec![0, 2, 0, 1]); // x^3 + 2x
        let d = p.derivative(&f);
        // 3x^2 vanishes; the constant 2 remains.
        assert_eq!(d.coeffs(), &[2]);
    }

    #[test]
    fn eval_outside_root_set() {
        let f = gf9();
        let p = Poly::from_roots(&f, &[0, 1, 2]).unwrap();
        let t = 3; // the element x: x^3 + 2x = -x + 2x = x
        assert_eq!(p.eval(&f, t), t);
        for root in [0, 1, 2] {
            assert_eq!(p.eval(&f, root), 0);
        }
    }

    #[test]
    fn duplicate_roots_rejected() {
        let f = gf9();
        assert_eq!(
            Poly::from_roots(&f, &[1, 4, 1]).unwrap_err(),
            FieldError::DuplicateRoot(1)
        );
    }

    #[test]
    fn compose_eval_matches_direct() {
        let f = gf9();
        let outer = Poly::from_coeffs(&f, vec![1, 0, 1]); // x^2 + 1
        let inner = Poly::from_coeffs(&f, vec![2, 3]); // 3? no: x*? -> 2 + x*3
        for a in f.elements() {
            let v = inner.eval(&f, a);
            assert_eq!(outer.compose_eval(&f, &inner, a), f.add(f.mul(v, v), 1));
        }
    }

    #[test]
    fn zero_polynomial_shape() {
        let f = gf9();
        let z = Poly::from_coeffs(&f, vec![0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(&f, 5), 0);
    }
}
