use std::fmt;

use crate::error::{Error, Result};
use crate::forms::binary::{transvectant, BinaryForm};
use crate::poly::{MPoly, Pair};
use crate::rational::binomial;

/// A form bihomogeneous of orders `(m, n)` in two variable pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct BiForm {
    orders: (u32, u32),
    pairs: (Pair, Pair),
    poly: MPoly,
}

/// Which way a polarisation operator moves degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarization {
    /// `x d/dy`: lowers the second order, raises the first.
    XdY,
    /// `y d/dx`: lowers the first order, raises the second.
    YdX,
}

impl BiForm {
    pub fn new(poly: MPoly, pairs: (Pair, Pair), orders: (u32, u32)) -> Result<Self> {
        if pairs.0 == pairs.1 {
            return Err(Error::Precondition(
                "biform needs two distinct pairs".into(),
            ));
        }
        let (p1, p2) = (pairs.0.vars(), pairs.1.vars());
        let ok = poly.terms().iter().all(|(m, _)| {
            m.exp(p1.0) + m.exp(p1.1) == orders.0 && m.exp(p2.0) + m.exp(p2.1) == orders.1
        });
        if !ok {
            return Err(Error::Precondition(format!(
                "polynomial is not bihomogeneous of orders {orders:?} in ({}, {})",
                pairs.0.name(),
                pairs.1.name()
            )));
        }
        Ok(BiForm {
            orders,
            pairs,
            poly,
        })
    }

    pub fn zero(pairs: (Pair, Pair), orders: (u32, u32)) -> Self {
        BiForm {
            orders,
            pairs,
            poly: MPoly::zero(),
        }
    }

    pub fn orders(&self) -> (u32, u32) {
        self.orders
    }

    pub fn pairs(&self) -> (Pair, Pair) {
        self.pairs
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Views the biform as a form in its first pair.
    pub fn as_first(&self) -> BinaryForm {
        BinaryForm::from_poly(&self.poly, self.pairs.0, self.orders.0)
            .expect("bihomogeneity checked on construction")
    }

    /// Views the biform as a form in its second pair.
    pub fn as_second(&self) -> BinaryForm {
        BinaryForm::from_poly(&self.poly, self.pairs.1, self.orders.1)
            .expect("bihomogeneity checked on construction")
    }

    /// Substitutes the first pair for the second, giving a form of order
    /// `m + n` in the first pair.
    pub fn diagonal(&self) -> BinaryForm {
        let (u1, u2) = self.pairs.0.vars();
        let (w1, w2) = self.pairs.1.vars();
        let p = self
            .poly
            .substitute(&[(w1, MPoly::var(u1)), (w2, MPoly::var(u2))]);
        BinaryForm::from_poly(&p, self.pairs.0, self.orders.0 + self.orders.1)
            .expect("diagonal of a bihomogeneous form is homogeneous")
    }

    pub fn scale(&self, c: &crate::Rational) -> BiForm {
        BiForm {
            poly: self.poly.scale(c),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &BiForm) -> Result<BiForm> {
        if self.pairs != other.pairs
            || (self.orders != other.orders && !other.is_zero() && !self.is_zero())
        {
            return Err(Error::Precondition("sum of incompatible biforms".into()));
        }
        let orders = if self.is_zero() {
            other.orders
        } else {
            self.orders
        };
        Ok(BiForm {
            orders,
            pairs: self.pairs,
            poly: &self.poly + &other.poly,
        })
    }
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[({}, {}) orders {:?}] {}",
            self.pairs.0.name(),
            self.pairs.1.name(),
            self.orders,
            self.poly
        )
    }
}

/// `(A, B)_r` taken in the first pair of `B`, the second pair riding along
/// in the coefficients.
pub fn transvect_partial_x(a: &BinaryForm, b: &BiForm, r: u32) -> Result<BiForm> {
    if a.pair() != b.pairs.0 {
        return Err(Error::Precondition(
            "form and biform must share the first pair".into(),
        ));
    }
    let t = transvectant(a, &b.as_first(), r)?;
    BiForm::new(t.to_poly(), b.pairs, (t.order(), b.orders.1))
}

/// `k`-fold polarisation. With `v d/dw = v1 d/dw1 + v2 d/dw2` the two
/// summands commute, so the power expands binomially.
pub fn polarize(b: &BiForm, direction: Polarization, k: u32) -> Result<BiForm> {
    let (v, w) = match direction {
        Polarization::XdY => (b.pairs.0, b.pairs.1),
        Polarization::YdX => (b.pairs.1, b.pairs.0),
    };
    let (from_order, orders) = match direction {
        Polarization::XdY => (b.orders.1, (b.orders.0 + k, b.orders.1.saturating_sub(k))),
        Polarization::YdX => (b.orders.0, (b.orders.0.saturating_sub(k), b.orders.1 + k)),
    };
    if k > from_order {
        return Ok(BiForm::zero(b.pairs, orders));
    }
    let (v1, v2) = v.vars();
    let (w1, w2) = w.vars();
    let mut acc = MPoly::zero();
    for j in 0..=k {
        let d = b.poly.derivative(w1, k - j).derivative(w2, j);
        if d.is_zero() {
            continue;
        }
        let mult = MPoly::var_pow(v1, k - j) * MPoly::var_pow(v2, j);
        acc = acc + (d * mult).scale(&binomial(k as i64, j as i64));
    }
    BiForm::new(acc, b.pairs, orders)
}

/// Cayley's `Omega = d2/dx1 dy2 - d2/dx2 dy1` on the two pairs.
pub fn omega(b: &BiForm) -> Result<BiForm> {
    if b.orders.0 == 0 || b.orders.1 == 0 {
        return Err(Error::Precondition("omega needs both orders >= 1".into()));
    }
    let (x1, x2) = b.pairs.0.vars();
    let (y1, y2) = b.pairs.1.vars();
    let p = b.poly.derivative2(x1, 1, y2, 1) - b.poly.derivative2(x2, 1, y1, 1);
    BiForm::new(p, b.pairs, (b.orders.0 - 1, b.orders.1 - 1))
}

/// The bracket `(u v) = u1 v2 - u2 v1` of two pairs.
pub fn bracket(u: Pair, v: Pair) -> MPoly {
    let (u1, u2) = u.vars();
    let (v1, v2) = v.vars();
    MPoly::var(u1) * MPoly::var(v2) - MPoly::var(u2) * MPoly::var(v1)
}

/// `F(x) G(y)` as a biform.
pub fn outer(f: &BinaryForm, g: &BinaryForm) -> Result<BiForm> {
    BiForm::new(
        f.to_poly() * g.to_poly(),
        (f.pair(), g.pair()),
        (f.order(), g.order()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::binary::generic_form;
    use crate::poly::{parse_poly, CoefSymbol};

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn polarization_basics() {
        let b = BiForm::new(p("y1*y2"), (Pair::X, Pair::Y), (0, 2)).unwrap();
        let once = polarize(&b, Polarization::XdY, 1).unwrap();
        assert_eq!(once.poly(), &p("x1*y2 + x2*y1"));
        assert_eq!(once.orders(), (1, 1));
        assert_eq!(polarize(&b, Polarization::XdY, 0).unwrap(), b);
        let twice = polarize(&b, Polarization::XdY, 2).unwrap();
        assert_eq!(twice.poly(), &p("2*x1*x2"));
    }

    #[test]
    fn omega_basics() {
        let b = BiForm::new(p("x1*y2"), (Pair::X, Pair::Y), (1, 1)).unwrap();
        assert_eq!(omega(&b).unwrap().poly(), &MPoly::one());
        let c = BiForm::new(p("x1*y1"), (Pair::X, Pair::Y), (1, 1)).unwrap();
        assert!(omega(&c).unwrap().is_zero());
    }

    #[test]
    fn partial_transvectant_edge_cases() {
        let b = BiForm::new(p("a0*y1^2"), (Pair::X, Pair::Y), (0, 2)).unwrap();
        let a = BinaryForm::from_homogeneous(&p("x1^2"), Pair::X).unwrap();
        assert!(transvect_partial_x(&a, &b, 1).unwrap().is_zero());
        let t0 = transvect_partial_x(&a, &b, 0).unwrap();
        assert_eq!(t0.poly(), &p("a0*x1^2*y1^2"));
    }

    #[test]
    fn bihomogeneity_is_enforced() {
        assert!(BiForm::new(p("x1*y1 + x1"), (Pair::X, Pair::Y), (1, 1)).is_err());
    }

    #[test]
    fn diagonal_of_bracket_vanishes() {
        let b = BiForm::new(bracket(Pair::X, Pair::Y), (Pair::X, Pair::Y), (1, 1)).unwrap();
        assert!(b.diagonal().is_zero());
        let f = generic_form(2, CoefSymbol::A, Pair::X).unwrap();
        let g = f.with_pair(Pair::Y).unwrap();
        let fg = outer(&f, &g).unwrap();
        assert_eq!(fg.diagonal(), f.mul(&f).unwrap());
    }
}
