use super::univariate::coeff_in_var;
use crate::algebra::{Factored, Rational, RationalFunction};
use crate::{Error, Result, Var};

fn check_order(f: &Factored, order: &[Var]) -> Result<()> {
    let mut seen = vec![false; order.iter().map(|v| v + 1).max().unwrap_or(0)];
    for &v in order {
        if seen[v] {
            return Err(Error::Usage(format!("variable x{} listed twice", v + 1)));
        }
        seen[v] = true;
    }
    for v in 0..f.nvars() {
        if f.involves(v) && !seen.get(v).copied().unwrap_or(false) {
            return Err(Error::Usage(format!("order does not list x{}", v + 1)));
        }
    }
    Ok(())
}

fn iterated(f: &Factored, order: &[Var], target: i64) -> Result<Rational> {
    check_order(f, order)?;
    let mut g = f.clone();
    // the last variable of the list is evaluated first (innermost)
    for &v in order.iter().rev() {
        g = coeff_in_var(&g, v, target);
        if g.is_zero() {
            return Ok(crate::algebra::rat_int(0));
        }
    }
    g.as_rational()
        .ok_or_else(|| Error::Internal("iterated extraction left free variables".into()))
}

/// Iterated constant term over the given order; exact scalar.
pub fn ct_iterated_factored(f: &Factored, order: &[Var]) -> Result<Rational> {
    iterated(f, order, 0)
}

/// Iterated residue (coefficient of `v^-1` at each step).
pub fn res_iterated_factored(f: &Factored, order: &[Var]) -> Result<Rational> {
    iterated(f, order, -1)
}

pub fn ct_iterated(f: &RationalFunction, order: &[Var]) -> Result<Rational> {
    ct_iterated_factored(&Factored::from_ratfun(f), order)
}

pub fn res_iterated(f: &RationalFunction, order: &[Var]) -> Result<Rational> {
    res_iterated_factored(&Factored::from_ratfun(f), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, LaurentPolynomial};

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn order_sensitivity_of_inadmissible_input() {
        // x1/(x1+x2): CT over [x1,x2] is 1 but over [x2,x1] is 0
        let f = RationalFunction::new(x(0, 2), x(0, 2).add(&x(1, 2))).unwrap();
        assert_eq!(ct_iterated(&f, &[0, 1]).unwrap(), rat_int(1));
        assert_eq!(ct_iterated(&f, &[1, 0]).unwrap(), rat_int(0));
    }

    #[test]
    fn res_of_coordinate_product() {
        let f = RationalFunction::new(LaurentPolynomial::one(2), x(0, 2).mul(&x(1, 2))).unwrap();
        assert_eq!(res_iterated(&f, &[0, 1]).unwrap(), rat_int(1));
    }

    #[test]
    fn rejects_incomplete_order() {
        let f = RationalFunction::new(x(0, 2), x(0, 2).add(&x(1, 2))).unwrap();
        assert!(ct_iterated(&f, &[0]).is_err());
    }
}
