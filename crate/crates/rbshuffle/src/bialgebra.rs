//! Coalgebra structure on the positive tensor module over a commutative
//! base, in two flavors.
//!
//! Case 1 assumes the base carries its own coproduct (generators declared
//! primitive or grouplike) and lifts it letterwise: the first Sweedler legs
//! form the output word, the second legs multiply down into the base. Case 2
//! needs no base coproduct; a word maps to itself paired with the base unit,
//! plus its all-unit shadow paired with the product of its letters. Both
//! coproducts land in a two-leg module, are coassociative, admit a right
//! counit, and turn the prepend operator into a coalgebra map. The square
//! two-leg module additionally carries the amalgamated product, which is
//! unit-sensitive: a pair whose second leg is trivial annihilates a pair
//! whose second leg is not, except through genuine units.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::base::{render_terms, BaseElement, BaseMonomial, Context, GenId, Mode};
use crate::errors::KernelError;
use crate::linalg::nullspace;
use crate::operator::CheckAlgebra;
use crate::report::{CheckReport, Counterexample};
use crate::sampling;
use crate::scalar::{format_rational, parse_rational, Rational};
use crate::shuffle::{product_plus_with, ProductKind, RecursiveEngine};
use crate::tensor::{TensorElement, TensorWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegPolicy {
    /// Both legs are positive tensor words.
    Square,
    /// The second leg is a single base monomial, kept as a length-1 word.
    Comodule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaCase {
    One,
    Two,
}

impl DeltaCase {
    pub fn label(&self) -> &'static str {
        match self {
            DeltaCase::One => "case1",
            DeltaCase::Two => "case2",
        }
    }
}

/// A rational combination of pairs of tensor words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLegElement {
    mode: Mode,
    policy: LegPolicy,
    terms: BTreeMap<(TensorWord, TensorWord), Rational>,
}

impl TwoLegElement {
    pub fn zero(mode: Mode, policy: LegPolicy) -> Self {
        TwoLegElement { mode, policy, terms: BTreeMap::new() }
    }

    /// The unit of the amalgamated square: (1) paired with (1).
    pub fn unit_pair(mode: Mode) -> Self {
        let unit = TensorWord::units(mode, 1);
        let mut terms = BTreeMap::new();
        terms.insert((unit.clone(), unit), Rational::one());
        TwoLegElement { mode, policy: LegPolicy::Square, terms }
    }

    fn check_legs(policy: LegPolicy, left: &TensorWord, right: &TensorWord) -> Result<(), KernelError> {
        if left.is_empty() || right.is_empty() {
            return Err(KernelError::NotPositive);
        }
        if policy == LegPolicy::Comodule && right.len() != 1 {
            return Err(KernelError::InvalidPayload(
                "comodule elements need a length-1 second leg".to_string(),
            ));
        }
        Ok(())
    }

    pub fn from_terms(
        mode: Mode,
        policy: LegPolicy,
        terms: impl IntoIterator<Item = ((TensorWord, TensorWord), Rational)>,
    ) -> Result<Self, KernelError> {
        let mut out = BTreeMap::new();
        for ((l, r), c) in terms {
            Self::check_legs(policy, &l, &r)?;
            add_pair(&mut out, (l, r), c);
        }
        Ok(TwoLegElement { mode, policy, terms: out })
    }

    /// Bilinear outer product of two tensor elements.
    pub fn pair(
        policy: LegPolicy,
        x: &TensorElement,
        y: &TensorElement,
    ) -> Result<Self, KernelError> {
        let mut out = BTreeMap::new();
        for (l, cl) in x.terms() {
            for (r, cr) in y.terms() {
                Self::check_legs(policy, l, r)?;
                add_pair(&mut out, (l.clone(), r.clone()), cl * cr);
            }
        }
        Ok(TwoLegElement { mode: x.mode(), policy, terms: out })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn policy(&self) -> LegPolicy {
        self.policy
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(TensorWord, TensorWord), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &TensorWord, right: &TensorWord) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Comodule legs are square legs; forget the tighter policy.
    pub fn to_square(&self) -> Self {
        TwoLegElement { mode: self.mode, policy: LegPolicy::Square, terms: self.terms.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        if self.mode != other.mode {
            return Err(KernelError::ModeMismatch);
        }
        if self.policy != other.policy {
            return Err(KernelError::Unsupported(
                "cannot mix square and comodule elements".to_string(),
            ));
        }
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_pair(&mut terms, k.clone(), c.clone());
        }
        Ok(TwoLegElement { mode: self.mode, policy: self.policy, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TwoLegElement::zero(self.mode, self.policy);
        }
        TwoLegElement {
            mode: self.mode,
            policy: self.policy,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Legwise product: both legs multiply with the extended product of the
    /// engine's kind. Comodule second legs stay length-1, so there the
    /// second legs simply multiply in the base.
    pub fn mul_legwise(
        &self,
        engine: &mut RecursiveEngine,
        other: &Self,
    ) -> Result<Self, KernelError> {
        if self.policy != other.policy {
            return Err(KernelError::Unsupported(
                "cannot mix square and comodule elements".to_string(),
            ));
        }
        let mut out = TwoLegElement::zero(self.mode, self.policy);
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let left = product_plus_with(
                    engine,
                    &TensorElement::word(self.mode, l1.clone()),
                    &TensorElement::word(self.mode, l2.clone()),
                )?;
                let right = product_plus_with(
                    engine,
                    &TensorElement::word(self.mode, r1.clone()),
                    &TensorElement::word(self.mode, r2.clone()),
                )?;
                out = out.add(&TwoLegElement::pair(self.policy, &left, &right)?.scale(&(c1 * c2)))?;
            }
        }
        Ok(out)
    }

    pub fn text(&self, ctx: &Context) -> String {
        render_terms(self.terms.iter().rev(), |(l, r)| {
            format!("{}(x){}", l.text(ctx), r.text(ctx))
        })
    }

    pub fn to_json(&self, ctx: &Context) -> String {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|((l, r), c)| TwoLegTermDto {
                coeff: format_rational(c),
                left: l.letters().iter().map(|m| m.text(ctx)).collect(),
                right: r.letters().iter().map(|m| m.text(ctx)).collect(),
            })
            .collect();
        serde_json::to_string(&TwoLegElementDto { terms }).expect("serializable")
    }

    pub fn from_json(ctx: &Context, policy: LegPolicy, payload: &str) -> Result<Self, KernelError> {
        let dto: TwoLegElementDto = serde_json::from_str(payload)
            .map_err(|e| KernelError::InvalidPayload(e.to_string()))?;
        let mut terms = Vec::new();
        for term in dto.terms {
            let coeff = parse_rational(&term.coeff)?;
            let left: Vec<&str> = term.left.iter().map(|s| s.as_str()).collect();
            let right: Vec<&str> = term.right.iter().map(|s| s.as_str()).collect();
            terms.push((
                (TensorWord::from_names(ctx, &left)?, TensorWord::from_names(ctx, &right)?),
                coeff,
            ));
        }
        TwoLegElement::from_terms(ctx.mode(), policy, terms)
    }
}

fn add_pair(
    terms: &mut BTreeMap<(TensorWord, TensorWord), Rational>,
    key: (TensorWord, TensorWord),
    c: Rational,
) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TwoLegTermDto {
    coeff: String,
    left: Vec<String>,
    right: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TwoLegElementDto {
    terms: Vec<TwoLegTermDto>,
}

fn require_commutative(ctx: &Context, what: &str) -> Result<(), KernelError> {
    if ctx.mode() != Mode::Commutative {
        return Err(KernelError::Unsupported(format!(
            "{what} is defined over a commutative base"
        )));
    }
    Ok(())
}

/// Letterwise lifted coproduct: on a word, expand every letter by the base
/// coproduct, collect the first legs into a word and multiply the second
/// legs down into the base.
pub fn delta_case1(ctx: &Context, x: &TensorElement) -> Result<TwoLegElement, KernelError> {
    require_commutative(ctx, "the lifted coproduct")?;
    x.require_positive()?;
    let unit = BaseMonomial::unit(ctx.mode());
    let mut out = BTreeMap::new();
    for (w, c) in x.terms() {
        let mut acc: Vec<((Vec<BaseMonomial>, BaseMonomial), Rational)> =
            vec![((Vec::new(), unit.clone()), c.clone())];
        for letter in w.letters() {
            let split = BaseElement::monomial(letter.clone()).coproduct(ctx)?;
            let mut next = Vec::new();
            for ((legs, prod), k) in &acc {
                for ((a, b), kk) in split.terms() {
                    let mut legs = legs.clone();
                    legs.push(a.clone());
                    next.push(((legs, prod.mul(b)), k * kk));
                }
            }
            acc = next;
        }
        for ((legs, prod), k) in acc {
            add_pair(
                &mut out,
                (TensorWord::from_letters(legs), TensorWord::single(prod)),
                k,
            );
        }
    }
    Ok(TwoLegElement { mode: ctx.mode(), policy: LegPolicy::Comodule, terms: out })
}

/// The same coproduct built the way the extension theorem defines it:
/// peel the leading letter, coproduct it in the base, recurse on the tail
/// through the first-leg shift. Cross-checks `delta_case1`.
pub fn delta_case1_by_extension(
    ctx: &Context,
    x: &TensorElement,
) -> Result<TwoLegElement, KernelError> {
    require_commutative(ctx, "the lifted coproduct")?;
    x.require_positive()?;
    let mut out = TwoLegElement::zero(ctx.mode(), LegPolicy::Comodule);
    for (w, c) in x.terms() {
        out = out.add(&extension_word(ctx, w)?.scale(c))?;
    }
    Ok(out)
}

fn extension_word(ctx: &Context, w: &TensorWord) -> Result<TwoLegElement, KernelError> {
    let (head, tail) = w.split_first().expect("positive word");
    let split = BaseElement::monomial(head.clone()).coproduct(ctx)?;
    let mut out = BTreeMap::new();
    if tail.is_empty() {
        for ((a, b), c) in split.terms() {
            add_pair(
                &mut out,
                (TensorWord::single(a.clone()), TensorWord::single(b.clone())),
                c.clone(),
            );
        }
    } else {
        // multiplying a length-1 first leg against a unit-led first leg
        // collapses, for every product kind, to putting the letter into the
        // leading slot
        let rest = extension_word(ctx, &tail)?;
        for ((a, b), c) in split.terms() {
            for ((l, r), k) in &rest.terms {
                let left = l.prepend(a.clone());
                let right = TensorWord::single(
                    b.mul(&r.letters()[0]),
                );
                add_pair(&mut out, (left, right), c * k);
            }
        }
    }
    Ok(TwoLegElement { mode: ctx.mode(), policy: LegPolicy::Comodule, terms: out })
}

/// Counit weight of the ambient product: quasi-shuffle words of length n
/// carry (-theta)^(n-1), the shift products carry nothing.
fn counit_factor(kind: &ProductKind, len: usize) -> Rational {
    let base = match kind {
        ProductKind::Shuffle => Rational::zero(),
        ProductKind::Quasi(theta) => -theta.clone(),
        ProductKind::RightShift | ProductKind::LeftShift => return Rational::one(),
    };
    let mut out = Rational::one();
    for _ in 1..len {
        out *= base.clone();
    }
    out
}

pub fn counit_case1(
    ctx: &Context,
    kind: &ProductKind,
    x: &TensorElement,
) -> Result<Rational, KernelError> {
    require_commutative(ctx, "the lifted counit")?;
    x.require_positive()?;
    let mut total = Rational::zero();
    for (w, c) in x.terms() {
        let mut value = counit_factor(kind, w.len()) * c;
        for letter in w.letters() {
            if value.is_zero() {
                break;
            }
            value *= BaseElement::monomial(letter.clone()).counit(ctx)?;
        }
        total += value;
    }
    Ok(total)
}

/// Closed-form coproduct over a plain commutative base: all-unit words pair
/// with the base unit; every other word adds its all-unit shadow paired with
/// the product of its letters.
pub fn delta_case2(ctx: &Context, x: &TensorElement) -> Result<TwoLegElement, KernelError> {
    require_commutative(ctx, "the unit-shadow coproduct")?;
    x.require_positive()?;
    let unit_leg = TensorWord::units(ctx.mode(), 1);
    let mut out = BTreeMap::new();
    for (w, c) in x.terms() {
        add_pair(&mut out, (w.clone(), unit_leg.clone()), c.clone());
        if !w.is_all_units() {
            add_pair(
                &mut out,
                (
                    TensorWord::units(ctx.mode(), w.len()),
                    TensorWord::single(w.letter_product()?),
                ),
                c.clone(),
            );
        }
    }
    Ok(TwoLegElement { mode: ctx.mode(), policy: LegPolicy::Comodule, terms: out })
}

pub fn counit_case2(ctx: &Context, x: &TensorElement) -> Result<Rational, KernelError> {
    require_commutative(ctx, "the unit-shadow counit")?;
    x.require_positive()?;
    let mut total = Rational::zero();
    for (w, c) in x.terms() {
        if w.is_all_units() {
            total += c;
        }
    }
    Ok(total)
}

/// Multiply all letters of each word down to a length-1 word.
pub fn bracket_star(x: &TensorElement) -> Result<TensorElement, KernelError> {
    x.require_positive()?;
    x.map_words(x.mode(), |w| {
        Ok(TensorElement::word(x.mode(), TensorWord::single(w.letter_product()?)))
    })
}

/// The amalgamated square product. An all-unit second leg flags a "bare"
/// pair; bare pairs kill non-bare ones unless the other slot is itself
/// all-unit. Surviving pairs multiply leg by leg. Unit-likeness has to mean
/// the whole grouplike family of unit powers, not just the length-1 unit
/// word: the narrower rule would break multiplicativity of the unit-shadow
/// coproduct already at (a) times the shifted unit.
pub fn amalg_product(
    engine: &mut RecursiveEngine,
    x: &TwoLegElement,
    y: &TwoLegElement,
) -> Result<TwoLegElement, KernelError> {
    if x.policy != LegPolicy::Square || y.policy != LegPolicy::Square {
        return Err(KernelError::Unsupported(
            "the amalgamated product needs square legs".to_string(),
        ));
    }
    let mode = x.mode;
    let mut out = TwoLegElement::zero(mode, LegPolicy::Square);
    for ((x1, x2), cx) in &x.terms {
        for ((y1, y2), cy) in &y.terms {
            let (x1u, x2u) = (x1.is_all_units(), x2.is_all_units());
            let (y1u, y2u) = (y1.is_all_units(), y2.is_all_units());
            if !x2u && y2u && !y1u {
                continue;
            }
            if x2u && !x1u && !y2u {
                continue;
            }
            let left = product_plus_with(
                engine,
                &TensorElement::word(mode, x1.clone()),
                &TensorElement::word(mode, y1.clone()),
            )?;
            let right = product_plus_with(
                engine,
                &TensorElement::word(mode, x2.clone()),
                &TensorElement::word(mode, y2.clone()),
            )?;
            out = out.add(&TwoLegElement::pair(LegPolicy::Square, &left, &right)?.scale(&(cx * cy)))?;
        }
    }
    Ok(out)
}

/// Prepend the unit letter to every first leg.
pub fn sandwich_apply(x: &TwoLegElement) -> Result<TwoLegElement, KernelError> {
    let unit = BaseMonomial::unit(x.mode);
    let terms = x
        .terms
        .iter()
        .map(|((l, r), c)| ((l.prepend(unit.clone()), r.clone()), c.clone()));
    TwoLegElement::from_terms(x.mode, x.policy, terms)
}

/// The square module under the amalgamated product and the first-leg shift.
pub struct SquareCheckAlgebra {
    ctx: Context,
    engine: RecursiveEngine,
}

impl SquareCheckAlgebra {
    pub fn new(ctx: &Context) -> Self {
        SquareCheckAlgebra {
            ctx: ctx.clone(),
            engine: RecursiveEngine::new(ProductKind::RightShift, ctx.mode()),
        }
    }
}

impl CheckAlgebra for SquareCheckAlgebra {
    type Elem = TwoLegElement;

    fn ambient_label(&self) -> String {
        "amalg(rsh+)".to_string()
    }

    fn operator_label(&self) -> String {
        "P_A(x)id".to_string()
    }

    fn mul(&mut self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError> {
        amalg_product(&mut self.engine, x, y)
    }

    fn apply(&mut self, x: &Self::Elem) -> Result<Self::Elem, KernelError> {
        sandwich_apply(x)
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError> {
        x.add(y)
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.neg()
    }

    fn scale(&self, c: &Rational, x: &Self::Elem) -> Self::Elem {
        x.scale(c)
    }

    fn one(&self) -> Result<Self::Elem, KernelError> {
        Ok(TwoLegElement::unit_pair(self.ctx.mode()))
    }

    fn embed_base(&self, _e: &BaseElement) -> Result<Self::Elem, KernelError> {
        Err(KernelError::Unsupported(
            "the amalgamated square has no base embedding".to_string(),
        ))
    }

    fn render(&self, x: &Self::Elem) -> String {
        x.text(&self.ctx)
    }
}

/// Basis pairs for the square-module checks: both legs drawn from the unit
/// word, a single generator, and a two-generator word.
pub fn square_basis_samples(ctx: &Context) -> Vec<TwoLegElement> {
    let mode = ctx.mode();
    let gens: Vec<GenId> = ctx.generators().collect();
    let g1 = BaseMonomial::generator(mode, gens[0]);
    let g2 = BaseMonomial::generator(mode, *gens.get(1).unwrap_or(&gens[0]));
    let legs = [
        TensorWord::units(mode, 1),
        TensorWord::single(g1.clone()),
        TensorWord::from_letters(vec![g1, g2]),
    ];
    let mut out = Vec::new();
    for l in &legs {
        for r in &legs {
            let mut terms = BTreeMap::new();
            terms.insert((l.clone(), r.clone()), Rational::one());
            out.push(TwoLegElement { mode, policy: LegPolicy::Square, terms });
        }
    }
    out
}

fn delta(ctx: &Context, case: DeltaCase, x: &TensorElement) -> Result<TwoLegElement, KernelError> {
    match case {
        DeltaCase::One => delta_case1(ctx, x),
        DeltaCase::Two => delta_case2(ctx, x),
    }
}

fn counit(
    ctx: &Context,
    case: DeltaCase,
    kind: &ProductKind,
    x: &TensorElement,
) -> Result<Rational, KernelError> {
    match case {
        DeltaCase::One => counit_case1(ctx, kind, x),
        DeltaCase::Two => counit_case2(ctx, x),
    }
}

type ThreeLeg = BTreeMap<(TensorWord, TensorWord, TensorWord), Rational>;

fn add_three(map: &mut ThreeLeg, key: (TensorWord, TensorWord, TensorWord), c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn render_three(ctx: &Context, map: &ThreeLeg) -> String {
    render_terms(map.iter().rev(), |(a, b, c)| {
        format!("{}(x){}(x){}", a.text(ctx), b.text(ctx), c.text(ctx))
    })
}

/// Coassociativity. Case 1 compares coproduct-then-coproduct-on-the-word
/// against coproduct-then-base-coproduct-on-the-leg; case 2 applies the same
/// coproduct on either leg.
pub fn check_coassoc(
    ctx: &Context,
    case: DeltaCase,
    words: &[TensorWord],
) -> Result<CheckReport, KernelError> {
    let identity = format!("coassoc({})", case.label());
    let mut samples = 0;
    for w in words {
        samples += 1;
        let x = TensorElement::word(ctx.mode(), w.clone());
        let d = delta(ctx, case, &x)?;
        let mut lhs = ThreeLeg::new();
        let mut rhs = ThreeLeg::new();
        for ((l, r), c) in d.terms() {
            let inner = delta(ctx, case, &TensorElement::word(ctx.mode(), l.clone()))?;
            for ((a, b), k) in inner.terms() {
                add_three(&mut lhs, (a.clone(), b.clone(), r.clone()), c * k);
            }
            match case {
                DeltaCase::One => {
                    let split =
                        BaseElement::monomial(r.letters()[0].clone()).coproduct(ctx)?;
                    for ((p, q), k) in split.terms() {
                        add_three(
                            &mut rhs,
                            (l.clone(), TensorWord::single(p.clone()), TensorWord::single(q.clone())),
                            c * k,
                        );
                    }
                }
                DeltaCase::Two => {
                    let inner = delta(ctx, case, &TensorElement::word(ctx.mode(), r.clone()))?;
                    for ((p, q), k) in inner.terms() {
                        add_three(&mut rhs, (l.clone(), p.clone(), q.clone()), c * k);
                    }
                }
            }
        }
        if lhs != rhs {
            return Ok(CheckReport::failed(
                &identity,
                "delta",
                ctx.mode().label(),
                samples,
                Counterexample {
                    inputs: vec![x.text(ctx)],
                    lhs: render_three(ctx, &lhs),
                    rhs: render_three(ctx, &rhs),
                },
            ));
        }
    }
    Ok(CheckReport::passed(&identity, "delta", ctx.mode().label(), samples))
}

/// Both counit laws. The right law contracts the second leg and must return
/// the element; the left law contracts the first leg and must produce the
/// letter product, weighted by the ambient counit factor in case 1 and
/// plainly in case 2.
pub fn check_counit_laws(
    ctx: &Context,
    case: DeltaCase,
    kind: &ProductKind,
    words: &[TensorWord],
) -> Result<CheckReport, KernelError> {
    let identity = format!("counit({})", case.label());
    let mut samples = 0;
    let failed = |samples: u64, input: String, lhs: String, rhs: String| {
        CheckReport::failed(
            &identity,
            "eps",
            ctx.mode().label(),
            samples,
            Counterexample { inputs: vec![input], lhs, rhs },
        )
    };
    for w in words {
        samples += 1;
        let x = TensorElement::word(ctx.mode(), w.clone());
        let d = delta(ctx, case, &x)?;

        let mut right = TensorElement::zero(ctx.mode());
        for ((l, r), c) in d.terms() {
            let eps = match case {
                DeltaCase::One => BaseElement::monomial(r.letters()[0].clone()).counit(ctx)?,
                DeltaCase::Two => counit_case2(ctx, &TensorElement::word(ctx.mode(), r.clone()))?,
            };
            right = right.add(&TensorElement::word(ctx.mode(), l.clone()).scale(&(c * eps)))?;
        }
        if right != x {
            return Ok(failed(samples, x.text(ctx), right.text(ctx), x.text(ctx)));
        }

        let mut left = BaseElement::zero(ctx.mode());
        for ((l, r), c) in d.terms() {
            let eps = counit(ctx, case, kind, &TensorElement::word(ctx.mode(), l.clone()))?;
            left = left.add(&BaseElement::monomial(r.letters()[0].clone()).scale(&(c * eps)))?;
        }
        let factor = match case {
            DeltaCase::One => counit_factor(kind, w.len()),
            DeltaCase::Two => Rational::one(),
        };
        let expected = BaseElement::monomial(w.letter_product()?).scale(&factor);
        if left != expected {
            return Ok(failed(samples, x.text(ctx), left.text(ctx), expected.text(ctx)));
        }
    }
    Ok(CheckReport::passed(&identity, "eps", ctx.mode().label(), samples))
}

/// The coproduct is an algebra morphism: case 1 into the legwise product,
/// case 2 into the amalgamated square (right-shift products only).
pub fn check_delta_morphism(
    ctx: &Context,
    case: DeltaCase,
    kind: &ProductKind,
    pairs: &[(TensorElement, TensorElement)],
) -> Result<CheckReport, KernelError> {
    if case == DeltaCase::Two && *kind != ProductKind::RightShift {
        return Err(KernelError::Unsupported(
            "the unit-shadow coproduct is multiplicative for the right-shift product".to_string(),
        ));
    }
    let identity = format!("delta_morphism({})", case.label());
    let ambient = kind.label();
    let mut engine = RecursiveEngine::new(kind.clone(), ctx.mode());
    let mut samples = 0;
    for (x, y) in pairs {
        samples += 1;
        let product = product_plus_with(&mut engine, x, y)?;
        let lhs = delta(ctx, case, &product)?;
        let dx = delta(ctx, case, x)?;
        let dy = delta(ctx, case, y)?;
        let rhs = match case {
            DeltaCase::One => dx.mul_legwise(&mut engine, &dy)?,
            DeltaCase::Two => {
                amalg_product(&mut engine, &dx.to_square(), &dy.to_square())?
            }
        };
        let lhs_cmp = if case == DeltaCase::Two { lhs.to_square() } else { lhs };
        if lhs_cmp != rhs {
            return Ok(CheckReport::failed(
                &identity,
                "delta",
                &ambient,
                samples,
                Counterexample {
                    inputs: vec![x.text(ctx), y.text(ctx)],
                    lhs: lhs_cmp.text(ctx),
                    rhs: rhs.text(ctx),
                },
            ));
        }
    }
    Ok(CheckReport::passed(&identity, "delta", &ambient, samples))
}

/// The prepend operator is a coalgebra map: the coproduct of a shifted word
/// is the first-leg-shifted coproduct, and its counit picks up one ambient
/// factor in case 1 and nothing in case 2.
pub fn check_operator_compat(
    ctx: &Context,
    case: DeltaCase,
    kind: &ProductKind,
    words: &[TensorWord],
) -> Result<CheckReport, KernelError> {
    let identity = format!("delta_shift({})", case.label());
    let ambient = kind.label();
    let unit = BaseMonomial::unit(ctx.mode());
    let mut samples = 0;
    for w in words {
        samples += 1;
        let x = TensorElement::word(ctx.mode(), w.clone());
        let shifted = TensorElement::word(ctx.mode(), w.prepend(unit.clone()));
        let lhs = delta(ctx, case, &shifted)?;
        let rhs = sandwich_apply(&delta(ctx, case, &x)?)?;
        if lhs != rhs {
            return Ok(CheckReport::failed(
                &identity,
                "P_A",
                &ambient,
                samples,
                Counterexample {
                    inputs: vec![x.text(ctx)],
                    lhs: lhs.text(ctx),
                    rhs: rhs.text(ctx),
                },
            ));
        }
        let eps_shift = counit(ctx, case, kind, &shifted)?;
        let factor = match case {
            DeltaCase::One => counit_factor(kind, 2),
            DeltaCase::Two => Rational::one(),
        };
        let expected = counit(ctx, case, kind, &x)? * factor;
        if eps_shift != expected {
            return Ok(CheckReport::failed(
                &identity,
                "P_A",
                &ambient,
                samples,
                Counterexample {
                    inputs: vec![x.text(ctx)],
                    lhs: format_rational(&eps_shift),
                    rhs: format_rational(&expected),
                },
            ));
        }
    }
    Ok(CheckReport::passed(&identity, "P_A", &ambient, samples))
}

/// A generator substitution between contexts that preserves coproduct rules,
/// extended letterwise over monomials, words and elements.
pub struct GeneratorMap {
    images: Vec<GenId>,
}

pub fn functor_lift_map(
    src: &Context,
    dst: &Context,
    images: &[(&str, &str)],
) -> Result<GeneratorMap, KernelError> {
    if src.mode() != dst.mode() {
        return Err(KernelError::ModeMismatch);
    }
    let mut table: Vec<Option<GenId>> = vec![None; src.len()];
    for (from, to) in images {
        let f = src.require(from)?;
        if table[f.0 as usize].is_some() {
            return Err(KernelError::DuplicateGenerator((*from).to_string()));
        }
        table[f.0 as usize] = Some(dst.require(to)?);
    }
    let mut out = Vec::with_capacity(src.len());
    for (i, slot) in table.into_iter().enumerate() {
        let f = GenId(i as u32);
        let Some(img) = slot else {
            return Err(KernelError::InvalidPayload(format!(
                "no image for generator {}",
                src.name(f)
            )));
        };
        if src.rule(f) != dst.rule(img) {
            return Err(KernelError::InvalidPayload(format!(
                "`{}` -> `{}` does not preserve the coproduct rule",
                src.name(f),
                dst.name(img)
            )));
        }
        out.push(img);
    }
    Ok(GeneratorMap { images: out })
}

impl GeneratorMap {
    pub fn monomial(&self, mode: Mode, m: &BaseMonomial) -> BaseMonomial {
        let mut out = BaseMonomial::unit(mode);
        for g in m.letters() {
            out = out.mul(&BaseMonomial::generator(mode, self.images[g.0 as usize]));
        }
        out
    }

    pub fn word(&self, mode: Mode, w: &TensorWord) -> TensorWord {
        TensorWord::from_letters(
            w.letters().iter().map(|m| self.monomial(mode, m)).collect(),
        )
    }

    pub fn element(&self, x: &TensorElement) -> TensorElement {
        let mode = x.mode();
        x.map_words(mode, |w| Ok(TensorElement::word(mode, self.word(mode, w))))
            .expect("letterwise substitution is total")
    }
}

/// Naturality of the lifted coproduct under generator substitutions:
/// coproduct after substitution equals legwise substitution after coproduct,
/// and the counits agree.
pub fn check_functor(
    src: &Context,
    dst: &Context,
    map: &GeneratorMap,
    kind: &ProductKind,
    words: &[TensorWord],
) -> Result<CheckReport, KernelError> {
    let identity = "functor(case1)";
    let ambient = kind.label();
    let mode = src.mode();
    let mut samples = 0;
    for w in words {
        samples += 1;
        let x = TensorElement::word(mode, w.clone());
        let mapped = map.element(&x);
        let lhs = delta_case1(dst, &mapped)?;
        let d = delta_case1(src, &x)?;
        let rhs = TwoLegElement::from_terms(
            mode,
            LegPolicy::Comodule,
            d.terms()
                .map(|((l, r), c)| ((map.word(mode, l), map.word(mode, r)), c.clone())),
        )?;
        let eps_lhs = counit_case1(dst, kind, &mapped)?;
        let eps_rhs = counit_case1(src, kind, &x)?;
        if lhs != rhs || eps_lhs != eps_rhs {
            return Ok(CheckReport::failed(
                identity,
                "lift",
                &ambient,
                samples,
                Counterexample {
                    inputs: vec![x.text(src)],
                    lhs: format!("{} ; eps={}", lhs.text(dst), format_rational(&eps_lhs)),
                    rhs: format!("{} ; eps={}", rhs.text(dst), format_rational(&eps_rhs)),
                },
            ));
        }
    }
    Ok(CheckReport::passed(identity, "lift", &ambient, samples))
}

/// Solve for all elements whose coproduct is x(x)1 + 1(x)x, over the word
/// basis with length and total letter degree at most `bound`. The residual
/// is formed in the square representation, which rules out spurious
/// solutions supported on longer words.
pub fn primitives_at_bound(
    ctx: &Context,
    case: DeltaCase,
    bound: usize,
) -> Result<Vec<TensorElement>, KernelError> {
    require_commutative(ctx, "the primitive solver")?;
    let mut letters = vec![BaseMonomial::unit(ctx.mode())];
    letters.extend(sampling::monomials_up_to(ctx, bound));
    let basis = sampling::words_graded(&letters, 1, bound, bound);

    let unit_leg = TensorWord::units(ctx.mode(), 1);
    let mut row_index: BTreeMap<(TensorWord, TensorWord), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<((TensorWord, TensorWord), Rational)>> = Vec::new();
    for w in &basis {
        let x = TensorElement::word(ctx.mode(), w.clone());
        let residual = delta(ctx, case, &x)?
            .to_square()
            .sub(&TwoLegElement::pair(
                LegPolicy::Square,
                &x,
                &TensorElement::word(ctx.mode(), unit_leg.clone()),
            )?)?
            .sub(&TwoLegElement::pair(
                LegPolicy::Square,
                &TensorElement::word(ctx.mode(), unit_leg.clone()),
                &x,
            )?)?;
        let mut column = Vec::new();
        for (key, c) in residual.terms() {
            let next = row_index.len();
            row_index.entry(key.clone()).or_insert(next);
            column.push((key.clone(), c.clone()));
        }
        columns.push(column);
    }

    let mut rows = vec![vec![Rational::zero(); basis.len()]; row_index.len()];
    for (j, column) in columns.iter().enumerate() {
        for (key, c) in column {
            rows[row_index[key]][j] = c.clone();
        }
    }
    let kernel = nullspace(&rows, basis.len());
    let mut out = Vec::new();
    for v in kernel {
        let terms = basis
            .iter()
            .zip(&v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone()));
        out.push(TensorElement::from_terms(ctx.mode(), terms));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Generator;
    use crate::operator::{check_associativity, check_commutativity, check_identity, IdentityKind};
    use crate::sampling::SamplePolicy;
    use crate::scalar::{frac, rat};

    fn bialg_ctx() -> Context {
        Context::new(
            Mode::Commutative,
            vec![
                Generator::new("g").grouplike(),
                Generator::new("h").primitive(),
                Generator::new("k").primitive(),
            ],
        )
        .unwrap()
    }

    fn word(ctx: &Context, slots: &[&str]) -> TensorElement {
        TensorElement::word(ctx.mode(), TensorWord::from_names(ctx, slots).unwrap())
    }

    fn pair(ctx: &Context, left: &[&str], right: &[&str]) -> TwoLegElement {
        TwoLegElement::pair(LegPolicy::Square, &word(ctx, left), &word(ctx, right)).unwrap()
    }

    #[test]
    fn delta_case1_examples() {
        let ctx = bialg_ctx();
        let d = delta_case1(&ctx, &word(&ctx, &["h"])).unwrap();
        let expected = TwoLegElement::from_terms(
            ctx.mode(),
            LegPolicy::Comodule,
            [
                (
                    (
                        TensorWord::from_names(&ctx, &["h"]).unwrap(),
                        TensorWord::from_names(&ctx, &["1"]).unwrap(),
                    ),
                    rat(1),
                ),
                (
                    (
                        TensorWord::from_names(&ctx, &["1"]).unwrap(),
                        TensorWord::from_names(&ctx, &["h"]).unwrap(),
                    ),
                    rat(1),
                ),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);

        let d = delta_case1(&ctx, &word(&ctx, &["h", "k"])).unwrap();
        assert_eq!(d.terms().count(), 4);
        let get = |l: &[&str], r: &str| {
            d.coeff(
                &TensorWord::from_names(&ctx, l).unwrap(),
                &TensorWord::from_names(&ctx, &[r]).unwrap(),
            )
        };
        assert_eq!(get(&["h", "k"], "1"), rat(1));
        assert_eq!(get(&["h", "1"], "k"), rat(1));
        assert_eq!(get(&["1", "k"], "h"), rat(1));
        assert_eq!(get(&["1", "1"], "h*k"), rat(1));

        let d = delta_case1(&ctx, &word(&ctx, &["g", "g"])).unwrap();
        assert_eq!(d.terms().count(), 1);
        assert_eq!(
            d.coeff(
                &TensorWord::from_names(&ctx, &["g", "g"]).unwrap(),
                &TensorWord::from_names(&ctx, &["g^2"]).unwrap()
            ),
            rat(1)
        );
    }

    #[test]
    fn extension_route_agrees_with_the_closed_form() {
        let ctx = bialg_ctx();
        let letters = [
            BaseMonomial::unit(ctx.mode()),
            ctx.monomial("g").unwrap(),
            ctx.monomial("h").unwrap(),
            ctx.monomial("g").unwrap().mul(&ctx.monomial("h").unwrap()),
        ];
        for w in sampling::words_graded(&letters, 1, 3, 4) {
            let x = TensorElement::word(ctx.mode(), w);
            assert_eq!(
                delta_case1(&ctx, &x).unwrap(),
                delta_case1_by_extension(&ctx, &x).unwrap()
            );
        }
    }

    #[test]
    fn counit_case1_values() {
        let ctx = bialg_ctx();
        let rsh = ProductKind::RightShift;
        assert_eq!(counit_case1(&ctx, &rsh, &word(&ctx, &["1", "1"])).unwrap(), rat(1));
        assert_eq!(counit_case1(&ctx, &rsh, &word(&ctx, &["h"])).unwrap(), rat(0));
        for theta in [rat(2), frac(1, 3)] {
            let qsh = ProductKind::Quasi(theta.clone());
            assert_eq!(
                counit_case1(&ctx, &qsh, &word(&ctx, &["g", "g"])).unwrap(),
                -theta
            );
        }
        let missing = Context::commutative(&["a"]);
        assert!(matches!(
            counit_case1(&missing, &rsh, &word(&missing, &["a"])),
            Err(KernelError::MissingCoproductRule(_))
        ));
    }

    #[test]
    fn delta_case2_examples() {
        let ctx = Context::commutative(&["a", "b"]);
        let d = delta_case2(&ctx, &word(&ctx, &["a"])).unwrap();
        assert_eq!(d.terms().count(), 2);
        assert_eq!(
            d.coeff(
                &TensorWord::from_names(&ctx, &["a"]).unwrap(),
                &TensorWord::from_names(&ctx, &["1"]).unwrap()
            ),
            rat(1)
        );
        assert_eq!(
            d.coeff(
                &TensorWord::from_names(&ctx, &["1"]).unwrap(),
                &TensorWord::from_names(&ctx, &["a"]).unwrap()
            ),
            rat(1)
        );

        let d = delta_case2(&ctx, &word(&ctx, &["a", "b"])).unwrap();
        assert_eq!(d.terms().count(), 2);
        assert_eq!(
            d.coeff(
                &TensorWord::from_names(&ctx, &["1", "1"]).unwrap(),
                &TensorWord::from_names(&ctx, &["a*b"]).unwrap()
            ),
            rat(1)
        );

        let d = delta_case2(&ctx, &word(&ctx, &["1", "1"])).unwrap();
        assert_eq!(d.terms().count(), 1);
        assert_eq!(counit_case2(&ctx, &word(&ctx, &["1", "1"])).unwrap(), rat(1));
        assert_eq!(counit_case2(&ctx, &word(&ctx, &["a", "1"])).unwrap(), rat(0));

        let nc = Context::noncommutative(&["a"]);
        let x = TensorElement::word(nc.mode(), TensorWord::from_names(&nc, &["a"]).unwrap());
        assert!(delta_case2(&nc, &x).is_err());
    }

    #[test]
    fn bracket_star_multiplies_letters() {
        let ctx = Context::commutative(&["a", "b", "c"]);
        assert_eq!(bracket_star(&word(&ctx, &["a"])).unwrap(), word(&ctx, &["a"]));
        assert_eq!(
            bracket_star(&word(&ctx, &["a", "b", "c"])).unwrap(),
            word(&ctx, &["a*b*c"])
        );
        assert_eq!(bracket_star(&word(&ctx, &["1", "1"])).unwrap(), word(&ctx, &["1"]));
    }

    #[test]
    fn amalg_rules_and_unit() {
        let ctx = Context::commutative(&["a", "b", "c", "d"]);
        let mut engine = RecursiveEngine::new(ProductKind::RightShift, ctx.mode());
        let zero = TwoLegElement::zero(ctx.mode(), LegPolicy::Square);

        let x = pair(&ctx, &["a"], &["b"]);
        let y = pair(&ctx, &["c"], &["1"]);
        assert_eq!(amalg_product(&mut engine, &x, &y).unwrap(), zero);

        let x = pair(&ctx, &["a"], &["1"]);
        let y = pair(&ctx, &["c"], &["d"]);
        assert_eq!(amalg_product(&mut engine, &x, &y).unwrap(), zero);

        let unit = TwoLegElement::unit_pair(ctx.mode());
        let y = pair(&ctx, &["c", "a"], &["d"]);
        assert_eq!(amalg_product(&mut engine, &unit, &y).unwrap(), y);
        assert_eq!(amalg_product(&mut engine, &y, &unit).unwrap(), y);

        let x = pair(&ctx, &["a"], &["b"]);
        let y = pair(&ctx, &["c"], &["d"]);
        assert_eq!(
            amalg_product(&mut engine, &x, &y).unwrap(),
            pair(&ctx, &["a*c"], &["b*d"])
        );

        // a longer all-unit leg still counts as a unit slot
        let x = pair(&ctx, &["1"], &["a"]);
        let y = pair(&ctx, &["1", "1"], &["1"]);
        assert_eq!(
            amalg_product(&mut engine, &x, &y).unwrap(),
            pair(&ctx, &["1", "1"], &["a"])
        );
        assert_eq!(
            amalg_product(&mut engine, &y, &x).unwrap(),
            pair(&ctx, &["1", "1"], &["a"])
        );

        let comodule = delta_case2(&ctx, &word(&ctx, &["a"])).unwrap();
        assert!(amalg_product(&mut engine, &comodule, &unit).is_err());
    }

    #[test]
    fn sandwich_prepends_the_first_leg() {
        let ctx = Context::commutative(&["a", "b"]);
        let x = pair(&ctx, &["a"], &["b"]);
        assert_eq!(sandwich_apply(&x).unwrap(), pair(&ctx, &["1", "a"], &["b"]));
        assert_eq!(
            sandwich_apply(&TwoLegElement::unit_pair(ctx.mode())).unwrap(),
            pair(&ctx, &["1", "1"], &["1"])
        );
    }

    #[test]
    fn square_module_is_a_nijenhuis_algebra() {
        let ctx = Context::commutative(&["a", "b"]);
        let mut alg = SquareCheckAlgebra::new(&ctx);

        // legs that exercise every branch of the unit-sensitivity rules,
        // in particular all-unit legs longer than one slot
        let legs = [
            TensorWord::from_names(&ctx, &["1"]).unwrap(),
            TensorWord::from_names(&ctx, &["a"]).unwrap(),
            TensorWord::from_names(&ctx, &["1", "1"]).unwrap(),
            TensorWord::from_names(&ctx, &["1", "a"]).unwrap(),
            TensorWord::from_names(&ctx, &["a", "b"]).unwrap(),
        ];
        let mut samples = square_basis_samples(&ctx);
        for l in &legs {
            for r in &legs {
                samples.push(
                    TwoLegElement::from_terms(
                        ctx.mode(),
                        LegPolicy::Square,
                        [((l.clone(), r.clone()), rat(1))],
                    )
                    .unwrap(),
                );
            }
        }
        samples.dedup();

        let mut pairs = Vec::new();
        for x in &samples {
            for y in &samples {
                pairs.push((x.clone(), y.clone()));
            }
        }
        let report = check_identity(&IdentityKind::Nijenhuis, &ctx, &mut alg, &pairs).unwrap();
        assert!(report.pass, "{}", report.to_json());
        assert_eq!(report.operator, "P_A(x)id");

        let mut triples = Vec::new();
        for x in &samples {
            for y in &samples {
                for z in &samples {
                    triples.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        let report = check_associativity(&mut alg, &triples).unwrap();
        assert!(report.pass, "{}", report.to_json());
        let report = check_commutativity(&mut alg, &pairs).unwrap();
        assert!(report.pass, "{}", report.to_json());
    }

    fn case1_words(ctx: &Context) -> Vec<TensorWord> {
        let mut letters = vec![BaseMonomial::unit(ctx.mode())];
        letters.extend(sampling::monomials_up_to(ctx, 2));
        sampling::words_graded(&letters, 1, 3, 2)
    }

    #[test]
    fn coassociativity_both_cases() {
        let ctx = bialg_ctx();
        let report = check_coassoc(&ctx, DeltaCase::One, &case1_words(&ctx)).unwrap();
        assert!(report.pass, "{}", report.to_json());

        let plain = Context::commutative(&["a", "b"]);
        let report = check_coassoc(&plain, DeltaCase::Two, &case1_words(&plain)).unwrap();
        assert!(report.pass, "{}", report.to_json());
    }

    #[test]
    fn counit_laws_both_cases() {
        let ctx = bialg_ctx();
        for kind in [
            ProductKind::RightShift,
            ProductKind::LeftShift,
            ProductKind::Quasi(rat(2)),
            ProductKind::Quasi(frac(-1, 3)),
        ] {
            let report = check_counit_laws(&ctx, DeltaCase::One, &kind, &case1_words(&ctx)).unwrap();
            assert!(report.pass, "{}", report.to_json());
        }
        let plain = Context::commutative(&["a", "b"]);
        let report =
            check_counit_laws(&plain, DeltaCase::Two, &ProductKind::RightShift, &case1_words(&plain))
                .unwrap();
        assert!(report.pass, "{}", report.to_json());
    }

    #[test]
    fn delta_is_multiplicative() {
        let ctx = bialg_ctx();
        let words = case1_words(&ctx);
        let mut pairs = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for v in words.iter().skip(i) {
                if u.len() + v.len() <= 4 {
                    pairs.push((
                        TensorElement::word(ctx.mode(), u.clone()),
                        TensorElement::word(ctx.mode(), v.clone()),
                    ));
                }
            }
        }
        for kind in [
            ProductKind::Quasi(rat(2)),
            ProductKind::Quasi(rat(-1)),
            ProductKind::RightShift,
        ] {
            let report = check_delta_morphism(&ctx, DeltaCase::One, &kind, &pairs).unwrap();
            assert!(report.pass, "{}", report.to_json());
        }

        let plain = Context::commutative(&["a", "b"]);
        let words = case1_words(&plain);
        let mut pairs = Vec::new();
        for u in &words {
            for v in &words {
                if u.len() + v.len() <= 4 {
                    pairs.push((
                        TensorElement::word(plain.mode(), u.clone()),
                        TensorElement::word(plain.mode(), v.clone()),
                    ));
                }
            }
        }
        let report =
            check_delta_morphism(&plain, DeltaCase::Two, &ProductKind::RightShift, &pairs).unwrap();
        assert!(report.pass, "{}", report.to_json());
        assert!(
            check_delta_morphism(&plain, DeltaCase::Two, &ProductKind::LeftShift, &pairs).is_err()
        );
    }

    #[test]
    fn shift_compatibility_both_cases() {
        let ctx = bialg_ctx();
        for kind in [ProductKind::Quasi(rat(2)), ProductKind::RightShift] {
            let report = check_operator_compat(&ctx, DeltaCase::One, &kind, &case1_words(&ctx)).unwrap();
            assert!(report.pass, "{}", report.to_json());
        }
        let plain = Context::commutative(&["a", "b"]);
        let report =
            check_operator_compat(&plain, DeltaCase::Two, &ProductKind::RightShift, &case1_words(&plain))
                .unwrap();
        assert!(report.pass, "{}", report.to_json());
    }

    #[test]
    fn functor_naturality_and_rejection() {
        let src = Context::new(Mode::Commutative, vec![Generator::new("h").primitive()]).unwrap();
        let dst = bialg_ctx();
        let map = functor_lift_map(&src, &dst, &[("h", "k")]).unwrap();
        let kind = ProductKind::Quasi(rat(2));
        let report = check_functor(&src, &dst, &map, &kind, &case1_words(&src)).unwrap();
        assert!(report.pass, "{}", report.to_json());

        // collapsing two primitives onto one is still a coalgebra map
        let wide = Context::new(
            Mode::Commutative,
            vec![Generator::new("h").primitive(), Generator::new("k").primitive()],
        )
        .unwrap();
        let fold = functor_lift_map(&wide, &dst, &[("h", "h"), ("k", "h")]).unwrap();
        let report = check_functor(&wide, &dst, &fold, &kind, &case1_words(&wide)).unwrap();
        assert!(report.pass, "{}", report.to_json());

        // a primitive cannot land on a grouplike
        assert!(matches!(
            functor_lift_map(&src, &dst, &[("h", "g")]),
            Err(KernelError::InvalidPayload(_))
        ));
        assert!(functor_lift_map(&src, &dst, &[]).is_err());
    }

    #[test]
    fn primitive_basis_case2() {
        let ctx = Context::commutative(&["a"]);
        let basis = primitives_at_bound(&ctx, DeltaCase::Two, 3).unwrap();
        let expected: Vec<TensorElement> = ["a", "a^2", "a^3"]
            .iter()
            .map(|m| word(&ctx, &[m]))
            .collect();
        assert_eq!(basis, expected);
    }

    #[test]
    fn primitive_basis_case1() {
        let ctx = bialg_ctx();
        let basis = primitives_at_bound(&ctx, DeltaCase::One, 2).unwrap();
        let h = word(&ctx, &["h"]);
        let k = word(&ctx, &["k"]);
        assert_eq!(basis, vec![h, k]);

        let grouplike_only =
            Context::new(Mode::Commutative, vec![Generator::new("g").grouplike()]).unwrap();
        assert!(primitives_at_bound(&grouplike_only, DeltaCase::One, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn two_leg_json_round_trip() {
        let ctx = Context::commutative(&["a", "b"]);
        let x = TwoLegElement::from_terms(
            ctx.mode(),
            LegPolicy::Comodule,
            [(
                (
                    TensorWord::from_names(&ctx, &["1", "1"]).unwrap(),
                    TensorWord::from_names(&ctx, &["a*b"]).unwrap(),
                ),
                rat(1),
            )],
        )
        .unwrap();
        let json = x.to_json(&ctx);
        assert_eq!(json, r#"{"terms":[{"coeff":"1","left":["1","1"],"right":["a*b"]}]}"#);
        assert_eq!(TwoLegElement::from_json(&ctx, LegPolicy::Comodule, &json).unwrap(), x);
        assert!(TwoLegElement::from_json(&ctx, LegPolicy::Comodule, r#"{"terms":[{"coeff":"1","left":["a"],"right":["a","b"]}]}"#).is_err());

        let d = delta_case2(&ctx, &word(&ctx, &["a", "b"])).unwrap();
        let round =
            TwoLegElement::from_json(&ctx, LegPolicy::Comodule, &d.to_json(&ctx)).unwrap();
        assert_eq!(round, d);
    }

    #[test]
    fn policy_guards() {
        let ctx = Context::commutative(&["a"]);
        let bad = TwoLegElement::from_terms(
            ctx.mode(),
            LegPolicy::Comodule,
            [(
                (
                    TensorWord::from_names(&ctx, &["a"]).unwrap(),
                    TensorWord::from_names(&ctx, &["a", "a"]).unwrap(),
                ),
                rat(1),
            )],
        );
        assert!(bad.is_err());
        let empty_leg = TwoLegElement::pair(
            LegPolicy::Square,
            &TensorElement::one(ctx.mode()),
            &word(&ctx, &["a"]),
        );
        assert_eq!(empty_leg.err(), Some(KernelError::NotPositive));
    }

    #[test]
    fn primitive_policy_sample() {
        // the all-unit length-2 word is grouplike-to-the-unit, not primitive
        let ctx = Context::commutative(&["a"]);
        let basis = primitives_at_bound(&ctx, DeltaCase::Two, 2).unwrap();
        assert!(basis
            .iter()
            .all(|x| x.terms().all(|(w, _)| !w.is_all_units())));
    }
}
