//! Evaluate parsed expressions against a session configuration.
//!
//! Values come in four ranks: scalars, base elements, tensor elements, and
//! two-leg elements. Sums unify upward (a scalar embeds into the tensor
//! module as a multiple of the empty word, a base element letterwise as a
//! length-1 word); two-leg elements only combine with each other. Product
//! functions follow the scalar multiply-through convention, so
//! `sh(2;[a]) = 2*(a)`. A base-valued result is embedded as length-1 words
//! before rendering, which keeps every printed value reparseable.

use std::fmt;

use rbshuffle::scalar::format_rational;
use rbshuffle::{
    bracket_star, counit_case1, counit_case2, delta_case1, delta_case2, omega, product,
    product_plus, shift_apply, BaseElement, BaseMonomial, Context, DeltaCase, KernelError,
    OperatorDescriptor, ProductKind, Rational, TensorElement, TensorWord, TridendOp,
    TridendStructure, TwoLegElement,
};

use crate::config::{OutputFormat, ProductTag, SessionConfig};
use crate::dsl::{Expr, FnName};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Base(BaseElement),
    Tensor(TensorElement),
    TwoLeg(TwoLegElement),
}

impl Value {
    fn kind_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "a scalar",
            Value::Base(_) => "a base element",
            Value::Tensor(_) => "a tensor element",
            Value::TwoLeg(_) => "a two-leg element",
        }
    }
}

/// An evaluation failure: a coded diagnostic, printed on stderr, exit 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub code: &'static str,
    pub message: String,
}

impl EvalError {
    fn typed(message: impl Into<String>) -> EvalError {
        EvalError { code: "type", message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> EvalError {
        EvalError { code: "usage", message: message.into() }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl std::error::Error for EvalError {}

impl From<KernelError> for EvalError {
    fn from(e: KernelError) -> EvalError {
        let code = match &e {
            KernelError::UndeclaredGenerator(_) => "undeclared",
            KernelError::ModeMismatch => "mode",
            KernelError::MissingCoproductRule(_) => "coproduct",
            KernelError::NotPositive | KernelError::UnitLetter | KernelError::NotBasisWord => {
                "carrier"
            }
            KernelError::InvalidMonomial(..)
            | KernelError::InvalidScalar(_)
            | KernelError::InvalidPayload(_) => "payload",
            KernelError::Unsupported(_) => "unsupported",
            _ => "kernel",
        };
        EvalError { code, message: e.to_string() }
    }
}

pub struct Evaluator<'a> {
    pub ctx: &'a Context,
    pub cfg: &'a SessionConfig,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &'a Context, cfg: &'a SessionConfig) -> Self {
        Evaluator { ctx, cfg }
    }

    /// Evaluate and embed a base-valued result into the tensor module, so
    /// the caller only ever sees scalars, tensor and two-leg elements.
    pub fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        Ok(match self.node(e)? {
            Value::Base(b) => Value::Tensor(TensorElement::from_base(&b)),
            v => v,
        })
    }

    fn node(&self, e: &Expr) -> Result<Value, EvalError> {
        match e {
            Expr::Rational(r) => Ok(Value::Scalar(r.clone())),
            Expr::EmptyWord => Ok(Value::Tensor(TensorElement::one(self.ctx.mode()))),
            Expr::Symbol(name) => match self.ctx.lookup(name) {
                Some(id) => Ok(Value::Base(BaseElement::monomial(BaseMonomial::generator(
                    self.ctx.mode(),
                    id,
                )))),
                None => Err(KernelError::UndeclaredGenerator(name.clone()).into()),
            },
            Expr::Word(letters) => {
                let slots = letters
                    .iter()
                    .map(|l| self.as_base(self.node(l)?))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Value::Tensor(rbshuffle::word_normalize(self.ctx.mode(), &slots)?))
            }
            Expr::WordLiteral(letters) => {
                let mut w = TensorWord::empty();
                for text in letters {
                    w = w.append(BaseMonomial::parse(self.ctx, text)?);
                }
                Ok(Value::Tensor(TensorElement::word(self.ctx.mode(), w)))
            }
            Expr::Apply(f, args) => self.apply(*f, args),
            Expr::Add(l, r) => self.combine(self.node(l)?, self.node(r)?, false),
            Expr::Sub(l, r) => self.combine(self.node(l)?, self.node(r)?, true),
            Expr::Neg(inner) => Ok(match self.node(inner)? {
                Value::Scalar(r) => Value::Scalar(-r),
                Value::Base(b) => Value::Base(b.neg()),
                Value::Tensor(t) => Value::Tensor(t.neg()),
                Value::TwoLeg(t) => Value::TwoLeg(t.neg()),
            }),
            Expr::Mul(l, r) => self.multiply(self.node(l)?, self.node(r)?),
            Expr::Pow(base, n) => match self.node(base)? {
                _ if *n > 4096 => Err(EvalError::typed(format!(
                    "exponent {n} is too large (at most 4096)"
                ))),
                Value::Scalar(r) => {
                    let mut acc = Rational::from_integer(1.into());
                    for _ in 0..*n {
                        acc *= r.clone();
                    }
                    Ok(Value::Scalar(acc))
                }
                Value::Base(b) => Ok(Value::Base(b.pow(*n))),
                v => Err(EvalError::typed(format!(
                    "`^` applies to scalars and base elements, not {}",
                    v.kind_name()
                ))),
            },
        }
    }

    fn as_base(&self, v: Value) -> Result<BaseElement, EvalError> {
        match v {
            Value::Scalar(r) => Ok(BaseElement::scalar(self.ctx.mode(), r)),
            Value::Base(b) => Ok(b),
            v => Err(EvalError::typed(format!(
                "expected a base-algebra expression, got {}",
                v.kind_name()
            ))),
        }
    }

    fn as_tensor(&self, v: Value) -> Result<TensorElement, EvalError> {
        match v {
            Value::Scalar(r) => Ok(TensorElement::one(self.ctx.mode()).scale(&r)),
            Value::Base(b) => Ok(TensorElement::from_base(&b)),
            Value::Tensor(t) => Ok(t),
            v @ Value::TwoLeg(_) => Err(EvalError::typed(format!(
                "expected a tensor-module expression, got {}",
                v.kind_name()
            ))),
        }
    }

    /// Like `as_tensor` but lands in the positive-degree module: scalars
    /// embed as multiples of the unit word `(1)`.
    fn as_tensor_positive(&self, v: Value) -> Result<TensorElement, EvalError> {
        match v {
            Value::Scalar(r) => Ok(TensorElement::unit_word(self.ctx.mode()).scale(&r)),
            other => {
                let t = self.as_tensor(other)?;
                t.require_positive()?;
                Ok(t)
            }
        }
    }

    fn combine(&self, l: Value, r: Value, sub: bool) -> Result<Value, EvalError> {
        let rank = |v: &Value| match v {
            Value::Scalar(_) => 0,
            Value::Base(_) => 1,
            Value::Tensor(_) => 2,
            Value::TwoLeg(_) => 3,
        };
        match rank(&l).max(rank(&r)) {
            3 => match (l, r) {
                (Value::TwoLeg(a), Value::TwoLeg(b)) => {
                    Ok(Value::TwoLeg(if sub { a.sub(&b)? } else { a.add(&b)? }))
                }
                (l, r) => Err(EvalError::typed(format!(
                    "cannot combine {} with {}",
                    l.kind_name(),
                    r.kind_name()
                ))),
            },
            2 => {
                let a = self.as_tensor(l)?;
                let b = self.as_tensor(r)?;
                Ok(Value::Tensor(if sub { a.sub(&b)? } else { a.add(&b)? }))
            }
            _ => {
                if let (Value::Scalar(a), Value::Scalar(b)) = (&l, &r) {
                    return Ok(Value::Scalar(if sub { a - b } else { a + b }));
                }
                let a = self.as_base(l)?;
                let b = self.as_base(r)?;
                Ok(Value::Base(if sub { a.sub(&b)? } else { a.add(&b)? }))
            }
        }
    }

    fn multiply(&self, l: Value, r: Value) -> Result<Value, EvalError> {
        match (l, r) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a * b)),
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => Ok(match v {
                Value::Base(b) => Value::Base(b.scale(&c)),
                Value::Tensor(t) => Value::Tensor(t.scale(&c)),
                Value::TwoLeg(t) => Value::TwoLeg(t.scale(&c)),
                Value::Scalar(_) => unreachable!(),
            }),
            (Value::Base(a), Value::Base(b)) => Ok(Value::Base(a.mul(&b)?)),
            (Value::Tensor(_), Value::Tensor(_)) => Err(EvalError::typed(
                "`*` does not multiply tensor words; use sh, qsh, rsh, lsh or bsh",
            )),
            (l, r) => Err(EvalError::typed(format!(
                "cannot multiply {} by {}",
                l.kind_name(),
                r.kind_name()
            ))),
        }
    }

    fn structure(&self) -> Result<TridendStructure, EvalError> {
        let tag = self.cfg.product.unwrap_or(ProductTag::Qsh);
        match tag {
            ProductTag::Lsh => Ok(TridendStructure::plus_lsh(self.ctx.mode())),
            ProductTag::Qsh if self.cfg.theta == Rational::from_integer(1.into()) => {
                Ok(TridendStructure::qone(self.ctx.mode()))
            }
            _ => Err(EvalError {
                code: "unsupported",
                message: "tridendriform operations need --product lsh (shifted words) or \
                          --product qsh with --theta 1 (unit-free words)"
                    .to_string(),
            }),
        }
    }

    fn apply(&self, f: FnName, args: &[Expr]) -> Result<Value, EvalError> {
        if args.len() != f.arity() {
            return Err(EvalError {
                code: "arity",
                message: format!(
                    "{} takes {} argument{}, got {}",
                    f.label(),
                    f.arity(),
                    if f.arity() == 1 { "" } else { "s" },
                    args.len()
                ),
            });
        }
        match f {
            FnName::P | FnName::Q => {
                let x = self.as_tensor(self.node(&args[0])?)?;
                let op = if f == FnName::P {
                    OperatorDescriptor::prepend_unit()
                } else {
                    OperatorDescriptor::append_unit()
                };
                Ok(Value::Tensor(shift_apply(&op, &x)?))
            }
            FnName::Pu => {
                let name = match &args[0] {
                    Expr::Symbol(name) => name,
                    _ => {
                        return Err(EvalError::typed(
                            "the first argument of Pu must be a generator name",
                        ))
                    }
                };
                let op = OperatorDescriptor::prepend_letter(self.ctx, name)?;
                let x = self.as_tensor(self.node(&args[1])?)?;
                Ok(Value::Tensor(shift_apply(&op, &x)?))
            }
            FnName::Sh | FnName::Qsh | FnName::Rsh | FnName::Lsh => {
                let kind = match f {
                    FnName::Sh => ProductKind::Shuffle,
                    FnName::Qsh => ProductKind::Quasi(self.cfg.theta.clone()),
                    FnName::Rsh => ProductKind::RightShift,
                    _ => ProductKind::LeftShift,
                };
                let x = self.as_tensor(self.node(&args[0])?)?;
                let y = self.as_tensor(self.node(&args[1])?)?;
                Ok(Value::Tensor(product(&kind, &x, &y)?))
            }
            FnName::Bsh => {
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                let y = self.as_tensor_positive(self.node(&args[1])?)?;
                Ok(Value::Tensor(product_plus(&self.cfg.session_kind(), &x, &y)?))
            }
            FnName::Prec | FnName::Succ | FnName::Dot | FnName::Star => {
                let op = match f {
                    FnName::Prec => TridendOp::Prec,
                    FnName::Succ => TridendOp::Succ,
                    FnName::Dot => TridendOp::Dot,
                    _ => TridendOp::Star,
                };
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                let y = self.as_tensor_positive(self.node(&args[1])?)?;
                Ok(Value::Tensor(self.structure()?.apply(op, &x, &y)?))
            }
            FnName::Dagger => match self.node(&args[0])? {
                Value::Scalar(r) => Ok(Value::Scalar(r)),
                Value::Base(b) => Ok(Value::Base(b.involution(self.ctx)?)),
                Value::Tensor(t) => Ok(Value::Tensor(t.involution(self.ctx)?)),
                v => Err(EvalError::typed(format!(
                    "dagger applies to base or tensor elements, not {}",
                    v.kind_name()
                ))),
            },
            FnName::Delta => {
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                Ok(Value::TwoLeg(match self.cfg.case {
                    DeltaCase::One => delta_case1(self.ctx, &x)?,
                    DeltaCase::Two => delta_case2(self.ctx, &x)?,
                }))
            }
            FnName::Eps => {
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                Ok(Value::Scalar(match self.cfg.case {
                    DeltaCase::One => counit_case1(self.ctx, &self.cfg.session_kind(), &x)?,
                    DeltaCase::Two => counit_case2(self.ctx, &x)?,
                }))
            }
            FnName::Omega => {
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                Ok(Value::Tensor(omega(&x)?))
            }
            FnName::Bstar => {
                let x = self.as_tensor_positive(self.node(&args[0])?)?;
                Ok(Value::Tensor(bracket_star(&x)?))
            }
        }
    }
}

pub fn render_value(ctx: &Context, v: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => match v {
            Value::Scalar(r) => format_rational(r),
            Value::Base(b) => b.text(ctx),
            Value::Tensor(t) => t.text(ctx),
            Value::TwoLeg(t) => t.text(ctx),
        },
        OutputFormat::Json => match v {
            Value::Scalar(r) => serde_json::json!({ "scalar": format_rational(r) }).to_string(),
            Value::Base(b) => serde_json::json!({ "base": b.text(ctx) }).to_string(),
            Value::Tensor(t) => t.to_json(ctx),
            Value::TwoLeg(t) => t.to_json(ctx),
        },
    }
}
