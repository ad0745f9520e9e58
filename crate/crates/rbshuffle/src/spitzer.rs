//! Spitzer's identity on the extended quasi-shuffle algebra, verified order
//! by order with exact coefficients.
//!
//! Working in the commutative algebra (T+(A), extended qsh(theta)) with the
//! prepend operator R, both sides of
//!
//!   exp( sum_{n>=1} R((-theta)^(n-1) a^n) t^n / n )
//!     = 1 + sum_{m>=1} R(R(...R(a)a...)a) t^m
//!
//! are expanded in K[[t]] truncated past the requested order. The right-hand
//! coefficients also have a closed partition-sum form which serves as an
//! independent oracle.

use num_traits::One;

use crate::base::{Context, Mode};
use crate::errors::KernelError;
use crate::report::{CheckReport, Counterexample};
use crate::scalar::{inverse_factorial, Rational};
use crate::shuffle::{product_plus_with, ProductKind, RecursiveEngine};
use crate::tensor::TensorElement;

pub const MAX_SPITZER_ORDER: usize = 6;

/// Coefficients of a truncated power series over the extended module;
/// `coeffs[k]` multiplies t^k.
struct Series {
    coeffs: Vec<TensorElement>,
}

impl Series {
    fn zero(mode: Mode, order: usize) -> Self {
        Series { coeffs: vec![TensorElement::zero(mode); order + 1] }
    }

    fn one(mode: Mode, order: usize) -> Self {
        let mut s = Series::zero(mode, order);
        s.coeffs[0] = TensorElement::unit_word(mode);
        s
    }

    fn add(&self, other: &Series) -> Result<Series, KernelError> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_, _>>()?;
        Ok(Series { coeffs })
    }

    fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    fn mul(&self, other: &Series, engine: &mut RecursiveEngine, mode: Mode) -> Result<Series, KernelError> {
        let order = self.coeffs.len() - 1;
        let mut out = Series::zero(mode, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order || b.is_zero() {
                    continue;
                }
                let prod = product_plus_with(engine, a, b)?;
                out.coeffs[i + j] = out.coeffs[i + j].add(&prod)?;
            }
        }
        Ok(out)
    }

    /// exp of a series with zero constant term, via the truncated sum of
    /// powers with exact 1/k! factors.
    fn exp(&self, engine: &mut RecursiveEngine, mode: Mode) -> Result<Series, KernelError> {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let order = self.coeffs.len() - 1;
        let mut acc = Series::one(mode, order);
        let mut power = Series::one(mode, order);
        for k in 1..=order {
            power = power.mul(self, engine, mode)?;
            acc = acc.add(&power.scale(&inverse_factorial(k as u32)))?;
        }
        Ok(acc)
    }
}

fn prepend_unit(x: &TensorElement) -> Result<TensorElement, KernelError> {
    x.map_words(x.mode(), |w| {
        Ok(TensorElement::word(x.mode(), w.prepend(crate::base::BaseMonomial::unit(x.mode()))))
    })
}

/// Nested-operator coefficients b_m = R(R(...R(a)a...)a) for m = 1..order.
pub fn nested_coefficients(
    theta: &Rational,
    a: &TensorElement,
    order: usize,
) -> Result<Vec<TensorElement>, KernelError> {
    let mut engine = RecursiveEngine::new(ProductKind::Quasi(theta.clone()), a.mode());
    let mut out = Vec::with_capacity(order);
    let mut current = prepend_unit(a)?;
    out.push(current.clone());
    for _ in 1..order {
        current = prepend_unit(&product_plus_with(&mut engine, &current, a)?)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// The same coefficients from the closed partition sum: for each
/// multiplicity vector (l_1, ..., l_m) with sum i*l_i = m,
/// prod r_i^(l_i) / (i^(l_i) l_i!), products taken in the extended algebra.
pub fn partition_coefficient(
    theta: &Rational,
    a: &TensorElement,
    m: usize,
) -> Result<TensorElement, KernelError> {
    let mode = a.mode();
    let mut engine = RecursiveEngine::new(ProductKind::Quasi(theta.clone()), mode);
    let r = moment_terms(theta, a, m, &mut engine)?;
    let mut total = TensorElement::zero(mode);
    for lambda in multiplicity_vectors(m) {
        let mut prod = TensorElement::unit_word(mode);
        let mut factor = Rational::one();
        for (i, &li) in lambda.iter().enumerate() {
            let n = i + 1;
            for _ in 0..li {
                prod = product_plus_with(&mut engine, &prod, &r[n - 1])?;
                factor /= crate::scalar::rat(n as i64);
            }
            factor *= inverse_factorial(li as u32);
        }
        total = total.add(&prod.scale(&factor))?;
    }
    Ok(total)
}

/// r_n = R((-theta)^(n-1) a^n), powers taken in the extended algebra.
fn moment_terms(
    theta: &Rational,
    a: &TensorElement,
    order: usize,
    engine: &mut RecursiveEngine,
) -> Result<Vec<TensorElement>, KernelError> {
    let mut out = Vec::with_capacity(order);
    let mut power = a.clone();
    let mut sign = Rational::one();
    for n in 1..=order {
        if n > 1 {
            power = product_plus_with(engine, &power, a)?;
            sign *= -theta.clone();
        }
        out.push(prepend_unit(&power.scale(&sign))?);
    }
    Ok(out)
}

/// All (l_1, ..., l_m) with sum i*l_i = m.
fn multiplicity_vectors(m: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for count in 0..=remaining / part {
            acc[part - 1] = count;
            rec(remaining - count * part, part - 1, acc, out);
        }
        acc[part - 1] = 0;
    }
    let mut out = Vec::new();
    let mut acc = vec![0; m];
    rec(m, m, &mut acc, &mut out);
    out
}

/// Compare the exponential of the moment series with the nested-operator
/// series, coefficient by coefficient, up to the requested order.
pub fn spitzer_verify(
    ctx: &Context,
    theta: &Rational,
    a: &TensorElement,
    order: usize,
) -> Result<CheckReport, KernelError> {
    if ctx.mode() != Mode::Commutative || a.mode() != Mode::Commutative {
        return Err(KernelError::Unsupported(
            "the Spitzer identity is checked over a commutative base".to_string(),
        ));
    }
    if order == 0 || order > MAX_SPITZER_ORDER {
        return Err(KernelError::InvalidPayload(format!(
            "order must be between 1 and {MAX_SPITZER_ORDER}"
        )));
    }
    a.require_positive()?;
    let mode = a.mode();
    let mut engine = RecursiveEngine::new(ProductKind::Quasi(theta.clone()), mode);

    let moments = moment_terms(theta, a, order, &mut engine)?;
    let mut exponent = Series::zero(mode, order);
    for (n, r) in moments.iter().enumerate() {
        exponent.coeffs[n + 1] = r.scale(&(Rational::one() / crate::scalar::rat((n + 1) as i64)));
    }
    let lhs = exponent.exp(&mut engine, mode)?;

    let mut rhs = Series::one(mode, order);
    for (m, b) in nested_coefficients(theta, a, order)?.into_iter().enumerate() {
        rhs.coeffs[m + 1] = b;
    }

    let identity = format!("spitzer({},{})", theta, order);
    for k in 0..=order {
        if lhs.coeffs[k] != rhs.coeffs[k] {
            return Ok(CheckReport::failed(
                &identity,
                "P_A",
                &format!("qsh({})+", theta),
                k as u64 + 1,
                Counterexample {
                    inputs: vec![a.text(ctx), format!("t^{k}")],
                    lhs: lhs.coeffs[k].text(ctx),
                    rhs: rhs.coeffs[k].text(ctx),
                },
            ));
        }
    }
    Ok(CheckReport::passed(
        &identity,
        "P_A",
        &format!("qsh({})+", theta),
        order as u64 + 1,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};
    use crate::tensor::TensorWord;

    fn ctx() -> Context {
        Context::commutative(&["x", "y"])
    }

    fn letter(ctx: &Context, name: &str) -> TensorElement {
        TensorElement::word(ctx.mode(), TensorWord::from_names(ctx, &[name]).unwrap())
    }

    #[test]
    fn multiplicity_vectors_enumerate_partitions() {
        // partitions of 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1
        assert_eq!(multiplicity_vectors(4).len(), 5);
        assert_eq!(multiplicity_vectors(1), vec![vec![1]]);
        for lambda in multiplicity_vectors(5) {
            let total: usize = lambda.iter().enumerate().map(|(i, l)| (i + 1) * l).sum();
            assert_eq!(total, 5);
        }
    }

    #[test]
    fn order_one_coefficient_is_the_prepended_letter() {
        let ctx = ctx();
        let a = letter(&ctx, "x");
        for theta in [rat(0), rat(1), frac(1, 3)] {
            let report = spitzer_verify(&ctx, &theta, &a, 1).unwrap();
            assert!(report.pass, "{}", report.to_json());
            let nested = nested_coefficients(&theta, &a, 1).unwrap();
            assert_eq!(
                nested[0],
                TensorElement::word(ctx.mode(), TensorWord::from_names(&ctx, &["1", "x"]).unwrap())
            );
        }
    }

    #[test]
    fn weight_zero_second_order_matches_the_squared_operator() {
        let ctx = ctx();
        let a = letter(&ctx, "x");
        let report = spitzer_verify(&ctx, &rat(0), &a, 2).unwrap();
        assert!(report.pass, "{}", report.to_json());
        // at weight 0 the t^2 coefficient on both sides is P(P(a) sh a)
        let nested = nested_coefficients(&rat(0), &a, 2).unwrap();
        let mut engine = RecursiveEngine::new(ProductKind::Quasi(rat(0)), ctx.mode());
        let pa = prepend_unit(&a).unwrap();
        let half = frac(1, 2);
        let squared = product_plus_with(&mut engine, &pa, &pa).unwrap().scale(&half);
        assert_eq!(nested[1], squared);
    }

    #[test]
    fn full_orders_pass_for_several_weights() {
        let ctx = ctx();
        let a = letter(&ctx, "x");
        for theta in [rat(0), rat(1), rat(-2), frac(1, 3)] {
            let report = spitzer_verify(&ctx, &theta, &a, 4).unwrap();
            assert!(report.pass, "{}", report.to_json());
        }
    }

    #[test]
    fn partition_sum_matches_nested_coefficients() {
        let ctx = ctx();
        let a = letter(&ctx, "x");
        for theta in [rat(1), rat(-2), frac(1, 3)] {
            let nested = nested_coefficients(&theta, &a, 3).unwrap();
            for m in 1..=3 {
                assert_eq!(
                    partition_coefficient(&theta, &a, m).unwrap(),
                    nested[m - 1],
                    "theta {} order {}",
                    theta,
                    m
                );
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let nc = Context::noncommutative(&["x"]);
        let a = TensorElement::word(nc.mode(), TensorWord::from_names(&nc, &["x"]).unwrap());
        assert!(spitzer_verify(&nc, &rat(1), &a, 2).is_err());

        let ctx = ctx();
        let good = letter(&ctx, "x");
        assert!(spitzer_verify(&ctx, &rat(1), &good, 0).is_err());
        assert!(spitzer_verify(&ctx, &rat(1), &good, MAX_SPITZER_ORDER + 1).is_err());
        let scalar = TensorElement::one(ctx.mode());
        assert_eq!(
            spitzer_verify(&ctx, &rat(1), &scalar, 2).err(),
            Some(KernelError::NotPositive)
        );
    }
}
