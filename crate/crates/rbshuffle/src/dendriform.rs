//! Tridendriform structures carried by the tensor module.
//!
//! Two carriers are implemented. `plus_lsh` splits the extended left-shift
//! product on positive words through the prepend operator:
//!
//!   X < Y = X (1|Y),   X > Y = (1|X) Y,   X . Y = -X (1|1) Y
//!
//! (juxtaposition is the extended product). `qone` splits the plain weight-1
//! quasi-shuffle on words over non-unit letters by the leading letter:
//!
//!   a|X < b|Y = a|(X qsh1 b|Y),  a|X > b|Y = b|(a|X qsh1 Y),
//!   a|X . b|Y = ab|(X qsh1 Y).
//!
//! In both cases star = < + > + . recovers the underlying product. The map
//! Omega embeds the second carrier into the first, and every basis word of
//! the second factors through < and . over single-generator letters.

use crate::base::{BaseMonomial, Context, Mode};
use crate::errors::KernelError;
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{self, SamplePolicy};
use crate::shuffle::{product_plus_with, ProductKind, RecursiveEngine};
use crate::tensor::{TensorElement, TensorWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TridendOp {
    Prec,
    Succ,
    Dot,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TridendCarrier {
    PlusLsh,
    QOne,
}

pub struct TridendStructure {
    carrier: TridendCarrier,
    mode: Mode,
    engine: RecursiveEngine,
}

impl TridendStructure {
    pub fn plus_lsh(mode: Mode) -> Self {
        TridendStructure {
            carrier: TridendCarrier::PlusLsh,
            mode,
            engine: RecursiveEngine::new(ProductKind::LeftShift, mode),
        }
    }

    pub fn qone(mode: Mode) -> Self {
        TridendStructure {
            carrier: TridendCarrier::QOne,
            mode,
            engine: RecursiveEngine::new(ProductKind::Quasi(crate::scalar::rat(1)), mode),
        }
    }

    pub fn carrier(&self) -> TridendCarrier {
        self.carrier
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn carrier_label(&self) -> &'static str {
        match self.carrier {
            TridendCarrier::PlusLsh => "plus_lsh",
            TridendCarrier::QOne => "qone",
        }
    }

    pub fn product_label(&self) -> &'static str {
        match self.carrier {
            TridendCarrier::PlusLsh => "lsh+",
            TridendCarrier::QOne => "qsh(1)",
        }
    }

    /// plus_lsh elements live on positive-length words; qone elements must
    /// additionally avoid unit letters.
    pub fn require_carrier(&self, x: &TensorElement) -> Result<(), KernelError> {
        x.require_positive()?;
        if self.carrier == TridendCarrier::QOne {
            for (w, _) in x.terms() {
                if w.letters().iter().any(BaseMonomial::is_unit) {
                    return Err(KernelError::UnitLetter);
                }
            }
        }
        Ok(())
    }

    pub fn apply(
        &mut self,
        op: TridendOp,
        x: &TensorElement,
        y: &TensorElement,
    ) -> Result<TensorElement, KernelError> {
        self.require_carrier(x)?;
        self.require_carrier(y)?;
        if let TridendOp::Star = op {
            let p = self.apply(TridendOp::Prec, x, y)?;
            let s = self.apply(TridendOp::Succ, x, y)?;
            let d = self.apply(TridendOp::Dot, x, y)?;
            return p.add(&s)?.add(&d);
        }
        match self.carrier {
            TridendCarrier::PlusLsh => {
                let unit = BaseMonomial::unit(self.mode);
                let shift = |z: &TensorElement| {
                    z.map_words(z.mode(), |w| {
                        Ok(TensorElement::word(z.mode(), w.prepend(unit.clone())))
                    })
                };
                match op {
                    TridendOp::Prec => product_plus_with(&mut self.engine, x, &shift(y)?),
                    TridendOp::Succ => product_plus_with(&mut self.engine, &shift(x)?, y),
                    TridendOp::Dot => {
                        let sandwich = TensorElement::word(self.mode, TensorWord::units(self.mode, 2));
                        let left = product_plus_with(&mut self.engine, x, &sandwich)?;
                        Ok(product_plus_with(&mut self.engine, &left, y)?.neg())
                    }
                    TridendOp::Star => unreachable!(),
                }
            }
            TridendCarrier::QOne => {
                let mut out = TensorElement::zero(self.mode);
                let x_terms: Vec<(TensorWord, crate::scalar::Rational)> =
                    x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
                let y_terms: Vec<(TensorWord, crate::scalar::Rational)> =
                    y.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
                for (u, cu) in &x_terms {
                    for (v, cv) in &y_terms {
                        let term = self.qone_words(op, u, v)?;
                        out = out.add(&term.scale(&(cu * cv)))?;
                    }
                }
                Ok(out)
            }
        }
    }

    fn qone_words(
        &mut self,
        op: TridendOp,
        u: &TensorWord,
        v: &TensorWord,
    ) -> Result<TensorElement, KernelError> {
        let (a, u_rest) = u.split_first().expect("carrier words are non-empty");
        let (b, v_rest) = v.split_first().expect("carrier words are non-empty");
        let (head, left, right) = match op {
            TridendOp::Prec => (a.clone(), u_rest, v.clone()),
            TridendOp::Succ => (b.clone(), u.clone(), v_rest),
            TridendOp::Dot => (a.mul(b), u_rest, v_rest),
            TridendOp::Star => unreachable!(),
        };
        let tails = self.engine.words(&left, &right);
        tails.map_words(self.mode, |w| {
            Ok(TensorElement::word(self.mode, w.prepend(head.clone())))
        })
    }
}

/// Send each letter of degree d to itself followed by d-1 unit letters,
/// with sign (-1)^(d+1); blocks concatenate along the word. Unit letters
/// are outside the domain.
pub fn omega(x: &TensorElement) -> Result<TensorElement, KernelError> {
    x.require_positive()?;
    x.map_words(x.mode(), |w| {
        let mut image = TensorWord::empty();
        let mut sign = 1i64;
        for letter in w.letters() {
            let d = letter.degree();
            if d == 0 {
                return Err(KernelError::UnitLetter);
            }
            image = image.append(letter.clone());
            for _ in 1..d {
                image = image.append(BaseMonomial::unit(x.mode()));
            }
            if d % 2 == 0 {
                sign = -sign;
            }
        }
        Ok(TensorElement::word(x.mode(), image).scale(&crate::scalar::rat(sign)))
    })
}

/// An expression over < and . with single-generator leaves; what
/// `omega_decompose` returns and the CLI prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompExpr {
    Letter(BaseMonomial),
    Prec(Box<DecompExpr>, Box<DecompExpr>),
    Dot(Box<DecompExpr>, Box<DecompExpr>),
}

impl DecompExpr {
    pub fn evaluate(&self, s: &mut TridendStructure) -> Result<TensorElement, KernelError> {
        match self {
            DecompExpr::Letter(m) => {
                Ok(TensorElement::word(s.mode(), TensorWord::single(m.clone())))
            }
            DecompExpr::Prec(l, r) => {
                let a = l.evaluate(s)?;
                let b = r.evaluate(s)?;
                s.apply(TridendOp::Prec, &a, &b)
            }
            DecompExpr::Dot(l, r) => {
                let a = l.evaluate(s)?;
                let b = r.evaluate(s)?;
                s.apply(TridendOp::Dot, &a, &b)
            }
        }
    }

    /// Render in the CLI expression language.
    pub fn render(&self, ctx: &Context) -> String {
        match self {
            DecompExpr::Letter(m) => format!("[{}]", m.text(ctx)),
            DecompExpr::Prec(l, r) => format!("prec({};{})", l.render(ctx), r.render(ctx)),
            DecompExpr::Dot(l, r) => format!("dot({};{})", l.render(ctx), r.render(ctx)),
        }
    }
}

/// Factor a basis word a1|...|an as a1 < (a2 < (... < an)) with every letter
/// expanded as a product of single generators under the dot operation.
pub fn omega_decompose(mode: Mode, w: &TensorWord) -> Result<DecompExpr, KernelError> {
    if w.is_empty() {
        return Err(KernelError::NotPositive);
    }
    let mut letters = Vec::new();
    for letter in w.letters() {
        if letter.is_unit() {
            return Err(KernelError::UnitLetter);
        }
        let gens = letter.letters();
        let mut expr = DecompExpr::Letter(BaseMonomial::generator(mode, gens[0]));
        for id in &gens[1..] {
            expr = DecompExpr::Dot(
                Box::new(expr),
                Box::new(DecompExpr::Letter(BaseMonomial::generator(mode, *id))),
            );
        }
        letters.push(expr);
    }
    let mut out = letters.pop().expect("word is non-empty");
    while let Some(head) = letters.pop() {
        out = DecompExpr::Prec(Box::new(head), Box::new(out));
    }
    Ok(out)
}

const AXIOMS: [&str; 7] = [
    "(x<y)<z = x<(y*z)",
    "(x>y)<z = x>(y<z)",
    "(x*y)>z = x>(y>z)",
    "(x>y).z = x>(y.z)",
    "(x<y).z = x.(y>z)",
    "(x.y)<z = x.(y<z)",
    "(x.y).z = x.(y.z)",
];

/// Check the seven tridendriform relations (star always taken as the sum of
/// the three operations supplied) and, when `comm_pairs` is given, the
/// commutative laws x < y = y > x and x . y = y . x.
pub fn check_tridend_axioms_with<F>(
    identity: &str,
    operator: &str,
    ambient: &str,
    ctx: &Context,
    mut op: F,
    triples: &[(TensorElement, TensorElement, TensorElement)],
    comm_pairs: Option<&[(TensorElement, TensorElement)]>,
) -> Result<CheckReport, KernelError>
where
    F: FnMut(TridendOp, &TensorElement, &TensorElement) -> Result<TensorElement, KernelError>,
{
    use TridendOp::{Dot, Prec, Succ};
    let mut samples = 0u64;
    let fail = |samples: u64, tag: &str, inputs: Vec<String>, lhs: TensorElement, rhs: TensorElement| {
        CheckReport::failed(
            identity,
            operator,
            ambient,
            samples,
            Counterexample {
                inputs: inputs.into_iter().chain([tag.to_string()]).collect(),
                lhs: lhs.text(ctx),
                rhs: rhs.text(ctx),
            },
        )
    };
    for (x, y, z) in triples {
        let star = |op: &mut F, a: &TensorElement, b: &TensorElement| -> Result<TensorElement, KernelError> {
            let p = op(Prec, a, b)?;
            let s = op(Succ, a, b)?;
            let d = op(Dot, a, b)?;
            p.add(&s)?.add(&d)
        };
        for (k, tag) in AXIOMS.iter().enumerate() {
            let (lhs, rhs) = match k {
                0 => {
                    let l1 = op(Prec, x, y)?;
                    let r1 = star(&mut op, y, z)?;
                    (op(Prec, &l1, z)?, op(Prec, x, &r1)?)
                }
                1 => {
                    let l1 = op(Succ, x, y)?;
                    let r1 = op(Prec, y, z)?;
                    (op(Prec, &l1, z)?, op(Succ, x, &r1)?)
                }
                2 => {
                    let l1 = star(&mut op, x, y)?;
                    let r1 = op(Succ, y, z)?;
                    (op(Succ, &l1, z)?, op(Succ, x, &r1)?)
                }
                3 => {
                    let l1 = op(Succ, x, y)?;
                    let r1 = op(Dot, y, z)?;
                    (op(Dot, &l1, z)?, op(Succ, x, &r1)?)
                }
                4 => {
                    let l1 = op(Prec, x, y)?;
                    let r1 = op(Succ, y, z)?;
                    (op(Dot, &l1, z)?, op(Dot, x, &r1)?)
                }
                5 => {
                    let l1 = op(Dot, x, y)?;
                    let r1 = op(Prec, y, z)?;
                    (op(Prec, &l1, z)?, op(Dot, x, &r1)?)
                }
                _ => {
                    let l1 = op(Dot, x, y)?;
                    let r1 = op(Dot, y, z)?;
                    (op(Dot, &l1, z)?, op(Dot, x, &r1)?)
                }
            };
            samples += 1;
            if lhs != rhs {
                let inputs = vec![x.text(ctx), y.text(ctx), z.text(ctx)];
                return Ok(fail(samples, tag, inputs, lhs, rhs));
            }
        }
    }
    if let Some(pairs) = comm_pairs {
        for (x, y) in pairs {
            let checks = [
                (op(Prec, x, y)?, op(Succ, y, x)?, "x<y = y>x"),
                (op(Dot, x, y)?, op(Dot, y, x)?, "x.y = y.x"),
            ];
            for (lhs, rhs, tag) in checks {
                samples += 1;
                if lhs != rhs {
                    let inputs = vec![x.text(ctx), y.text(ctx)];
                    return Ok(fail(samples, tag, inputs, lhs, rhs));
                }
            }
        }
    }
    Ok(CheckReport::passed(identity, operator, ambient, samples))
}

/// Run the axiom suite on a carrier with its own operations, sampling words
/// from the carrier (commutative mode adds the commutative laws).
pub fn check_tridend_axioms(
    s: &mut TridendStructure,
    ctx: &Context,
    policy: &SamplePolicy,
) -> Result<CheckReport, KernelError> {
    let (triples, pairs) = carrier_samples(s, ctx, policy);
    let comm = (ctx.mode() == Mode::Commutative).then_some(pairs.as_slice());
    let identity = "tridend";
    let operator = s.carrier_label();
    let ambient = s.product_label();
    check_tridend_axioms_with(identity, operator, ambient, ctx, |op, x, y| s.apply(op, x, y), &triples, comm)
}

/// Sample triples and pairs of carrier elements: exhaustive short words over
/// distinct generators plus seeded random words (unit-free for qone).
pub fn carrier_samples(
    s: &TridendStructure,
    ctx: &Context,
    policy: &SamplePolicy,
) -> (
    Vec<(TensorElement, TensorElement, TensorElement)>,
    Vec<(TensorElement, TensorElement)>,
) {
    let small = sampling::exhaustive_words(ctx, 1, policy.exhaustive_len.min(2));
    let randoms = match s.carrier() {
        TridendCarrier::PlusLsh => {
            sampling::random_words(ctx, 3 * policy.random_cases, 1, policy.random_len, policy.seed)
        }
        TridendCarrier::QOne => sampling::random_reduced_words(
            ctx,
            3 * policy.random_cases,
            1,
            policy.random_len,
            policy.seed,
        ),
    };
    let elem = |w: &TensorWord| TensorElement::word(ctx.mode(), w.clone());
    let mut triples = Vec::new();
    for x in &small {
        for y in &small {
            for z in &small {
                triples.push((elem(x), elem(y), elem(z)));
            }
        }
    }
    for chunk in randoms.chunks_exact(3) {
        triples.push((elem(&chunk[0]), elem(&chunk[1]), elem(&chunk[2])));
    }
    let mut pairs = Vec::new();
    for x in &small {
        for y in &small {
            pairs.push((elem(x), elem(y)));
        }
    }
    for chunk in randoms.chunks_exact(2).take(policy.random_cases / 2) {
        pairs.push((elem(&chunk[0]), elem(&chunk[1])));
    }
    (triples, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Generator;
    use crate::operator::{double_product, Ambient, DoubleFlavor, OperatorDescriptor, TensorCheckAlgebra};
    use crate::scalar::rat;
    use crate::shuffle::product;

    fn word(ctx: &Context, slots: &[&str]) -> TensorElement {
        TensorElement::word(ctx.mode(), TensorWord::from_names(ctx, slots).unwrap())
    }

    #[test]
    fn plus_lsh_splits_the_left_shift_product() {
        let ctx = Context::commutative(&["a", "b"]);
        let mut s = TridendStructure::plus_lsh(ctx.mode());
        let a = word(&ctx, &["a"]);
        let b = word(&ctx, &["b"]);
        assert_eq!(s.apply(TridendOp::Prec, &a, &b).unwrap(), word(&ctx, &["a", "b"]));
        assert_eq!(s.apply(TridendOp::Succ, &a, &b).unwrap(), word(&ctx, &["b", "a"]));
        assert_eq!(s.apply(TridendOp::Dot, &a, &b).unwrap(), word(&ctx, &["a*b", "1"]).neg());
        let star = s.apply(TridendOp::Star, &a, &b).unwrap();
        let expected = word(&ctx, &["a", "b"])
            .add(&word(&ctx, &["b", "a"]))
            .unwrap()
            .sub(&word(&ctx, &["a*b", "1"]))
            .unwrap();
        assert_eq!(star, expected);
    }

    #[test]
    fn plus_lsh_star_is_the_operator_double_product() {
        let ctx = Context::commutative(&["a", "b"]);
        let mut s = TridendStructure::plus_lsh(ctx.mode());
        let mut alg = TensorCheckAlgebra::new(
            &ctx,
            Ambient::extended(ctx.mode(), ProductKind::LeftShift),
            OperatorDescriptor::prepend_unit(),
        );
        for (x, y) in [
            (word(&ctx, &["a"]), word(&ctx, &["b"])),
            (word(&ctx, &["a", "b"]), word(&ctx, &["b"])),
            (word(&ctx, &["a", "1"]), word(&ctx, &["b", "a"])),
        ] {
            let star = s.apply(TridendOp::Star, &x, &y).unwrap();
            let dp = double_product(&DoubleFlavor::StarP, &mut alg, &x, &y).unwrap();
            assert_eq!(star, dp);
        }
    }

    #[test]
    fn qone_splits_the_weight_one_quasi_shuffle() {
        let ctx = Context::commutative(&["a", "b"]);
        let mut s = TridendStructure::qone(ctx.mode());
        let a = word(&ctx, &["a"]);
        let b = word(&ctx, &["b"]);
        assert_eq!(s.apply(TridendOp::Prec, &a, &b).unwrap(), word(&ctx, &["a", "b"]));
        assert_eq!(s.apply(TridendOp::Succ, &a, &b).unwrap(), word(&ctx, &["b", "a"]));
        assert_eq!(s.apply(TridendOp::Dot, &a, &b).unwrap(), word(&ctx, &["a*b"]));
        for (x, y) in [
            (word(&ctx, &["a"]), word(&ctx, &["b"])),
            (word(&ctx, &["a", "b"]), word(&ctx, &["b"])),
            (word(&ctx, &["a*b"]), word(&ctx, &["b", "a"])),
        ] {
            let star = s.apply(TridendOp::Star, &x, &y).unwrap();
            let qsh = product(&ProductKind::Quasi(rat(1)), &x, &y).unwrap();
            assert_eq!(star, qsh);
        }
    }

    #[test]
    fn carriers_reject_out_of_range_elements() {
        let ctx = Context::commutative(&["a"]);
        let mut plus = TridendStructure::plus_lsh(ctx.mode());
        let mut qone = TridendStructure::qone(ctx.mode());
        let a = word(&ctx, &["a"]);
        let scalar = TensorElement::one(ctx.mode());
        assert_eq!(
            plus.apply(TridendOp::Prec, &scalar, &a).err(),
            Some(KernelError::NotPositive)
        );
        let with_unit = word(&ctx, &["a", "1"]);
        assert!(plus.apply(TridendOp::Prec, &with_unit, &a).is_ok());
        assert_eq!(
            qone.apply(TridendOp::Prec, &with_unit, &a).err(),
            Some(KernelError::UnitLetter)
        );
    }

    #[test]
    fn omega_signs_and_padding() {
        let ctx = Context::commutative(&["v", "w"]);
        assert_eq!(omega(&word(&ctx, &["v"])).unwrap(), word(&ctx, &["v"]));
        assert_eq!(
            omega(&word(&ctx, &["v*w"])).unwrap(),
            word(&ctx, &["v*w", "1"]).neg()
        );
        assert_eq!(
            omega(&word(&ctx, &["v*w", "v"])).unwrap(),
            word(&ctx, &["v*w", "1", "v"]).neg()
        );
        assert_eq!(
            omega(&word(&ctx, &["v^2*w"])).unwrap(),
            word(&ctx, &["v^2*w", "1", "1"])
        );
        assert_eq!(omega(&word(&ctx, &["1"])).err(), Some(KernelError::UnitLetter));

        // distinct basis words stay distinct up to degree 3
        let letters = sampling::monomials_up_to(&ctx, 3);
        let words = sampling::words_graded(&letters, 1, 3, 3);
        let mut images = Vec::new();
        for w in &words {
            let img = omega(&TensorElement::word(ctx.mode(), w.clone())).unwrap();
            assert!(!images.contains(&img), "collision at {}", w.text(&ctx));
            images.push(img);
        }
    }

    #[test]
    fn omega_is_a_tridendriform_morphism() {
        let ctx = Context::commutative(&["v", "w"]);
        let mut src = TridendStructure::qone(ctx.mode());
        let mut dst = TridendStructure::plus_lsh(ctx.mode());
        let letters = sampling::monomials_up_to(&ctx, 3);
        let words = sampling::words_graded(&letters, 1, 4, 4);
        let mut checked = 0;
        for u in &words {
            for v in &words {
                if u.degree() + v.degree() > 4 {
                    continue;
                }
                let x = TensorElement::word(ctx.mode(), u.clone());
                let y = TensorElement::word(ctx.mode(), v.clone());
                for op in [TridendOp::Prec, TridendOp::Succ, TridendOp::Dot] {
                    let through = omega(&src.apply(op, &x, &y).unwrap()).unwrap();
                    let direct = dst
                        .apply(op, &omega(&x).unwrap(), &omega(&y).unwrap())
                        .unwrap();
                    assert_eq!(through, direct, "{:?} on {} , {}", op, u.text(&ctx), v.text(&ctx));
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn decomposition_shape_and_round_trip() {
        let ctx = Context::commutative(&["v", "w"]);
        let mode = ctx.mode();
        let v = || DecompExpr::Letter(ctx.monomial("v").unwrap());
        let w = || DecompExpr::Letter(ctx.monomial("w").unwrap());

        let t = omega_decompose(mode, &TensorWord::from_names(&ctx, &["v", "w"]).unwrap()).unwrap();
        assert_eq!(t, DecompExpr::Prec(Box::new(v()), Box::new(w())));

        let t = omega_decompose(mode, &TensorWord::from_names(&ctx, &["v*w"]).unwrap()).unwrap();
        assert_eq!(t, DecompExpr::Dot(Box::new(v()), Box::new(w())));

        let t = omega_decompose(mode, &TensorWord::from_names(&ctx, &["v*w", "v"]).unwrap()).unwrap();
        assert_eq!(
            t,
            DecompExpr::Prec(
                Box::new(DecompExpr::Dot(Box::new(v()), Box::new(w()))),
                Box::new(v())
            )
        );
        assert_eq!(t.render(&ctx), "prec(dot([v];[w]);[v])");

        let mut s = TridendStructure::qone(mode);
        let letters = sampling::monomials_up_to(&ctx, 5);
        for word in sampling::words_graded(&letters, 1, 5, 5) {
            let expr = omega_decompose(mode, &word).unwrap();
            assert_eq!(
                expr.evaluate(&mut s).unwrap(),
                TensorElement::word(mode, word.clone()),
                "round trip failed for {}",
                word.text(&ctx)
            );
        }

        assert_eq!(omega_decompose(mode, &TensorWord::empty()).err(), Some(KernelError::NotPositive));
        let unit_word = TensorWord::from_names(&ctx, &["1"]).unwrap();
        assert_eq!(omega_decompose(mode, &unit_word).err(), Some(KernelError::UnitLetter));
    }

    #[test]
    fn noncommutative_decomposition_keeps_letter_order() {
        let ctx = Context::noncommutative(&["v", "w"]);
        let mode = ctx.mode();
        let mut s = TridendStructure::qone(mode);
        for slots in [vec!["v*w"], vec!["w*v", "v"], vec!["v*w*v", "w"]] {
            let word = TensorWord::from_names(&ctx, &slots).unwrap();
            let expr = omega_decompose(mode, &word).unwrap();
            assert_eq!(expr.evaluate(&mut s).unwrap(), TensorElement::word(mode, word));
        }
    }

    #[test]
    fn axiom_suite_passes_on_both_carriers() {
        let policy = SamplePolicy { exhaustive_len: 2, random_len: 3, random_cases: 15, seed: 42 };
        let comm = Context::commutative(&["a", "b"]);
        let nc = Context::noncommutative(&["a", "b"]);
        for ctx in [&comm, &nc] {
            for mut s in [TridendStructure::plus_lsh(ctx.mode()), TridendStructure::qone(ctx.mode())] {
                let report = check_tridend_axioms(&mut s, ctx, &policy).unwrap();
                assert!(report.pass, "{}", report.to_json());
                assert!(report.samples > 100);
            }
        }
    }

    #[test]
    fn flipped_dot_sign_fails_with_counterexample() {
        let ctx = Context::commutative(&["a", "b"]);
        let policy = SamplePolicy { exhaustive_len: 2, random_len: 2, random_cases: 6, seed: 42 };
        let mut s = TridendStructure::plus_lsh(ctx.mode());
        let (triples, pairs) = carrier_samples(&s, &ctx, &policy);
        let report = check_tridend_axioms_with(
            "tridend",
            "plus_lsh(flipped dot)",
            s.product_label(),
            &ctx,
            |op, x, y| {
                let v = s.apply(op, x, y)?;
                Ok(if op == TridendOp::Dot { v.neg() } else { v })
            },
            &triples,
            Some(&pairs),
        )
        .unwrap();
        assert!(!report.pass);
        let cex = report.counterexample.expect("counterexample");
        assert_eq!(cex.inputs.len(), 4);
        assert_ne!(cex.lhs, cex.rhs);
    }

    #[test]
    fn involutive_laws() {
        // letterwise involution against the qone operations over
        // noncommutative letters
        let nc = Context::noncommutative(&["a", "b"]);
        let mut s = TridendStructure::qone(nc.mode());
        let letters = sampling::monomials_up_to(&nc, 2);
        let words = sampling::words_graded(&letters, 1, 2, 3);
        for u in &words {
            for v in &words {
                let x = TensorElement::word(nc.mode(), u.clone());
                let y = TensorElement::word(nc.mode(), v.clone());
                let xd = x.involution(&nc).unwrap();
                let yd = y.involution(&nc).unwrap();
                let prec_dag = s.apply(TridendOp::Prec, &x, &y).unwrap().involution(&nc).unwrap();
                assert_eq!(prec_dag, s.apply(TridendOp::Succ, &yd, &xd).unwrap());
                let dot_dag = s.apply(TridendOp::Dot, &x, &y).unwrap().involution(&nc).unwrap();
                assert_eq!(dot_dag, s.apply(TridendOp::Dot, &yd, &xd).unwrap());
            }
        }
        let ab = TensorElement::word(nc.mode(), TensorWord::from_names(&nc, &["a*b", "a"]).unwrap());
        assert_eq!(
            ab.involution(&nc).unwrap(),
            TensorElement::word(nc.mode(), TensorWord::from_names(&nc, &["b*a", "a"]).unwrap())
        );

        // over a commutative base with a paired involution the plus_lsh
        // operations commute with dagger
        let ctx = Context::new(
            Mode::Commutative,
            vec![
                Generator::new("a").paired_with("b"),
                Generator::new("b").paired_with("a"),
            ],
        )
        .unwrap();
        let mut plus = TridendStructure::plus_lsh(ctx.mode());
        let words = sampling::exhaustive_words(&ctx, 1, 2);
        for u in &words {
            for v in &words {
                let x = TensorElement::word(ctx.mode(), u.clone());
                let y = TensorElement::word(ctx.mode(), v.clone());
                let xd = x.involution(&ctx).unwrap();
                let yd = y.involution(&ctx).unwrap();
                for op in [TridendOp::Prec, TridendOp::Dot, TridendOp::Succ] {
                    let through = plus.apply(op, &x, &y).unwrap().involution(&ctx).unwrap();
                    assert_eq!(through, plus.apply(op, &xd, &yd).unwrap());
                }
            }
        }
    }
}
