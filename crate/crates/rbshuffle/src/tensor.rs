//! Tensor words over the base algebra and their rational combinations.
//!
//! A word is a finite sequence of base monomials; the empty word is the
//! scalar unit of the full tensor module. Elements whose words all have
//! length at least one live in the positive-degree submodule, which carries
//! the extended product and most operator structure.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::base::{add_term, render_terms, BaseElement, BaseMonomial, Context, Mode};
use crate::errors::KernelError;
use crate::scalar::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<BaseMonomial>);

impl TensorWord {
    pub fn empty() -> Self {
        TensorWord(Vec::new())
    }

    pub fn single(letter: BaseMonomial) -> Self {
        TensorWord(vec![letter])
    }

    pub fn from_letters(letters: Vec<BaseMonomial>) -> Self {
        TensorWord(letters)
    }

    /// Parse each slot as a monomial in `ctx`, e.g. `["a", "b*c"]`.
    pub fn from_names(ctx: &Context, slots: &[&str]) -> Result<Self, KernelError> {
        let letters = slots
            .iter()
            .map(|s| BaseMonomial::parse(ctx, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TensorWord(letters))
    }

    /// The unit word of a given length: `1 | 1 | ... | 1`.
    pub fn units(mode: Mode, n: usize) -> Self {
        TensorWord(vec![BaseMonomial::unit(mode); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[BaseMonomial] {
        &self.0
    }

    /// Total degree carried by the letters.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|m| m.degree()).sum()
    }

    pub fn is_all_units(&self) -> bool {
        self.0.iter().all(|m| m.is_unit())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        TensorWord(letters)
    }

    pub fn prepend(&self, letter: BaseMonomial) -> Self {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        TensorWord(letters)
    }

    pub fn append(&self, letter: BaseMonomial) -> Self {
        let mut letters = self.0.clone();
        letters.push(letter);
        TensorWord(letters)
    }

    pub fn split_first(&self) -> Option<(&BaseMonomial, TensorWord)> {
        self.0
            .split_first()
            .map(|(head, tail)| (head, TensorWord(tail.to_vec())))
    }

    /// Letterwise involution; the outer slot order is preserved.
    pub fn involution(&self, ctx: &Context) -> Self {
        TensorWord(self.0.iter().map(|m| m.involution(ctx)).collect())
    }

    /// Product of all letters in slot order.
    pub fn letter_product(&self) -> Result<BaseMonomial, KernelError> {
        let mut letters = self.0.iter();
        let mut acc = match letters.next() {
            Some(m) => m.clone(),
            None => return Err(KernelError::NotBasisWord),
        };
        for m in letters {
            acc = acc.mul(m);
        }
        Ok(acc)
    }

    /// `(a|b*c)` with `|` separators; `1_K` for the empty word.
    pub fn text(&self, ctx: &Context) -> String {
        if self.0.is_empty() {
            return "1_K".to_string();
        }
        let inner = self
            .0
            .iter()
            .map(|m| m.text(ctx))
            .collect::<Vec<_>>()
            .join("|");
        format!("({})", inner)
    }
}

// Graded order: length first, then letters compared left to right.
impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational combination of tensor words with no zero coefficients.
/// `positive` records that every stored word has length at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    mode: Mode,
    positive: bool,
    terms: BTreeMap<TensorWord, Rational>,
}

impl TensorElement {
    fn build(mode: Mode, terms: BTreeMap<TensorWord, Rational>) -> Self {
        let positive = terms.keys().all(|w| !w.is_empty());
        TensorElement { mode, positive, terms }
    }

    pub fn zero(mode: Mode) -> Self {
        TensorElement::build(mode, BTreeMap::new())
    }

    /// The scalar unit of the full module: the empty word.
    pub fn one(mode: Mode) -> Self {
        TensorElement::word(mode, TensorWord::empty())
    }

    /// The unit of the positive-degree module: the length-one unit word.
    pub fn unit_word(mode: Mode) -> Self {
        TensorElement::word(mode, TensorWord::single(BaseMonomial::unit(mode)))
    }

    pub fn word(mode: Mode, w: TensorWord) -> Self {
        debug_assert!(w.letters().iter().all(|m| m.mode() == mode));
        let mut terms = BTreeMap::new();
        add_term(&mut terms, w, Rational::one());
        TensorElement::build(mode, terms)
    }

    pub fn from_terms(
        mode: Mode,
        entries: impl IntoIterator<Item = (TensorWord, Rational)>,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in entries {
            debug_assert!(w.letters().iter().all(|m| m.mode() == mode));
            add_term(&mut terms, w, c);
        }
        TensorElement::build(mode, terms)
    }

    /// Embed a base element as length-one words.
    pub fn from_base(x: &BaseElement) -> Self {
        TensorElement::from_terms(
            x.mode(),
            x.terms().map(|(m, c)| (TensorWord::single(m.clone()), c.clone())),
        )
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every word has length at least one.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn require_positive(&self) -> Result<(), KernelError> {
        if self.positive {
            Ok(())
        } else {
            Err(KernelError::NotPositive)
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &TensorWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single basis word of a monic one-term element, if that is what
    /// this element is.
    pub fn as_basis_word(&self) -> Option<&TensorWord> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((w, c)), None) if c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        if self.mode != other.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        Ok(TensorElement::build(self.mode, terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TensorElement::zero(self.mode);
        }
        TensorElement {
            mode: self.mode,
            positive: self.positive,
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k * c))
                .collect(),
        }
    }

    /// Apply a word-to-element map linearly.
    pub fn map_words(
        &self,
        mode: Mode,
        mut f: impl FnMut(&TensorWord) -> Result<TensorElement, KernelError>,
    ) -> Result<Self, KernelError> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            for (v, k) in f(w)?.terms {
                add_term(&mut out, v, c * &k);
            }
        }
        Ok(TensorElement::build(mode, out))
    }

    /// Letterwise involution, extended linearly.
    pub fn involution(&self, ctx: &Context) -> Result<Self, KernelError> {
        if self.mode != ctx.mode() {
            return Err(KernelError::ModeMismatch);
        }
        Ok(TensorElement::from_terms(
            self.mode,
            self.terms
                .iter()
                .map(|(w, c)| (w.involution(ctx), c.clone())),
        ))
    }

    /// Canonical text form, terms in descending graded order:
    /// `3/2*(a|b*c) - (1)`.
    pub fn text(&self, ctx: &Context) -> String {
        render_terms(self.terms.iter().rev(), |w| w.text(ctx))
    }

    pub fn to_json(&self, ctx: &Context) -> String {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| TensorTermDto {
                coeff: format_rational(c),
                word: w.letters().iter().map(|m| m.text(ctx)).collect(),
            })
            .collect();
        serde_json::to_string(&TensorElementDto { terms }).expect("serializable")
    }

    pub fn from_json(ctx: &Context, payload: &str) -> Result<Self, KernelError> {
        let dto: TensorElementDto = serde_json::from_str(payload)
            .map_err(|e| KernelError::InvalidPayload(e.to_string()))?;
        let mut terms = BTreeMap::new();
        for term in dto.terms {
            let coeff = parse_rational(&term.coeff)?;
            let slots: Vec<&str> = term.word.iter().map(|s| s.as_str()).collect();
            add_term(&mut terms, TensorWord::from_names(ctx, &slots)?, coeff);
        }
        Ok(TensorElement::build(ctx.mode(), terms))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermDto {
    coeff: String,
    word: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TensorElementDto {
    terms: Vec<TensorTermDto>,
}

/// Expand a sequence of base elements into the corresponding combination of
/// words: each slot contributes one letter. The empty sequence yields the
/// empty word.
pub fn word_normalize(mode: Mode, slots: &[BaseElement]) -> Result<TensorElement, KernelError> {
    for s in slots {
        if s.mode() != mode {
            return Err(KernelError::ModeMismatch);
        }
    }
    let mut acc: Vec<(TensorWord, Rational)> = vec![(TensorWord::empty(), Rational::one())];
    for slot in slots {
        let mut next = Vec::with_capacity(acc.len() * slot.terms().count().max(1));
        for (w, c) in &acc {
            for (m, k) in slot.terms() {
                next.push((w.append(m.clone()), c * k));
            }
        }
        acc = next;
    }
    Ok(TensorElement::from_terms(mode, acc))
}

/// Collect a rational combination of elements into canonical form.
pub fn linear_combine(
    mode: Mode,
    parts: &[(Rational, TensorElement)],
) -> Result<TensorElement, KernelError> {
    let mut out = TensorElement::zero(mode);
    for (c, x) in parts {
        out = out.add(&x.scale(c))?;
    }
    Ok(out)
}

/// Bilinear concatenation of words.
pub fn tensor_concat(
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    if x.mode() != y.mode() {
        return Err(KernelError::ModeMismatch);
    }
    let mut terms = BTreeMap::new();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            add_term(&mut terms, wx.concat(wy), cx * cy);
        }
    }
    Ok(TensorElement::build(x.mode(), terms))
}

/// Split an element into its homogeneous word-length components.
pub fn grade_decompose(x: &TensorElement) -> BTreeMap<usize, TensorElement> {
    let mut buckets: BTreeMap<usize, BTreeMap<TensorWord, Rational>> = BTreeMap::new();
    for (w, c) in x.terms() {
        add_term(buckets.entry(w.len()).or_default(), w.clone(), c.clone());
    }
    buckets
        .into_iter()
        .map(|(n, terms)| (n, TensorElement::build(x.mode(), terms)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    fn ctx() -> Context {
        Context::commutative(&["a", "b", "c"])
    }

    fn w(ctx: &Context, slots: &[&str]) -> TensorWord {
        TensorWord::from_names(ctx, slots).unwrap()
    }

    #[test]
    fn normalize_expands_slots() {
        let ctx = ctx();
        let a = ctx.element("a").unwrap();
        let b = ctx.element("b").unwrap();
        let c = ctx.element("c").unwrap();
        let got = word_normalize(Mode::Commutative, &[a.add(&b).unwrap(), c]).unwrap();
        let expected = TensorElement::from_terms(
            Mode::Commutative,
            [
                (w(&ctx, &["a", "c"]), rat(1)),
                (w(&ctx, &["b", "c"]), rat(1)),
            ],
        );
        assert_eq!(got, expected);

        let zero_slot = word_normalize(
            Mode::Commutative,
            &[BaseElement::zero(Mode::Commutative)],
        )
        .unwrap();
        assert!(zero_slot.is_zero());

        let empty = word_normalize(Mode::Commutative, &[]).unwrap();
        assert_eq!(empty, TensorElement::one(Mode::Commutative));
    }

    #[test]
    fn combine_cancels() {
        let ctx = ctx();
        let x = TensorElement::word(Mode::Commutative, w(&ctx, &["a", "b"]));
        let combined = linear_combine(
            Mode::Commutative,
            &[(rat(2), x.clone()), (rat(-2), x.clone()), (rat(1), x.clone())],
        )
        .unwrap();
        assert_eq!(combined, x);
        let zero = linear_combine(Mode::Commutative, &[(rat(2), x.clone()), (rat(-2), x)]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn concat_is_bilinear() {
        let ctx = ctx();
        let ab = TensorElement::from_terms(
            Mode::Commutative,
            [(w(&ctx, &["a"]), rat(1)), (w(&ctx, &["b"]), rat(1))],
        );
        let c = TensorElement::word(Mode::Commutative, w(&ctx, &["c"]));
        let got = tensor_concat(&ab, &c).unwrap();
        let expected = TensorElement::from_terms(
            Mode::Commutative,
            [
                (w(&ctx, &["a", "c"]), rat(1)),
                (w(&ctx, &["b", "c"]), rat(1)),
            ],
        );
        assert_eq!(got, expected);
        // the empty word is the unit for concatenation
        let one = TensorElement::one(Mode::Commutative);
        assert_eq!(tensor_concat(&one, &expected).unwrap(), expected);
        assert_eq!(tensor_concat(&expected, &one).unwrap(), expected);
    }

    #[test]
    fn grading_partitions_by_length() {
        let ctx = ctx();
        let x = TensorElement::from_terms(
            Mode::Commutative,
            [
                (w(&ctx, &["a", "b"]), rat(1)),
                (w(&ctx, &["a*b"]), rat(2)),
                (TensorWord::empty(), rat(-1)),
            ],
        );
        let grades = grade_decompose(&x);
        assert_eq!(grades.len(), 3);
        assert_eq!(grades[&0], TensorElement::one(Mode::Commutative).neg());
        assert_eq!(
            grades[&1],
            TensorElement::word(Mode::Commutative, w(&ctx, &["a*b"])).scale(&rat(2))
        );
        assert_eq!(
            grades[&2],
            TensorElement::word(Mode::Commutative, w(&ctx, &["a", "b"]))
        );
        let back: Vec<(Rational, TensorElement)> =
            grades.into_values().map(|g| (rat(1), g)).collect();
        assert_eq!(linear_combine(Mode::Commutative, &back).unwrap(), x);
    }

    #[test]
    fn positivity_tracking() {
        let ctx = ctx();
        let pos = TensorElement::word(Mode::Commutative, w(&ctx, &["a"]));
        assert!(pos.is_positive());
        let mixed = pos.add(&TensorElement::one(Mode::Commutative)).unwrap();
        assert!(!mixed.is_positive());
        assert_eq!(mixed.require_positive(), Err(KernelError::NotPositive));
        assert!(TensorElement::zero(Mode::Commutative).is_positive());
        assert!(TensorElement::unit_word(Mode::Commutative).is_positive());
        // cancellation restores positivity
        let restored = mixed.sub(&TensorElement::one(Mode::Commutative)).unwrap();
        assert!(restored.is_positive());
    }

    #[test]
    fn text_matches_canonical_form() {
        let ctx = ctx();
        let x = TensorElement::from_terms(
            Mode::Commutative,
            [
                (w(&ctx, &["a", "b*c"]), frac(3, 2)),
                (w(&ctx, &["1"]), rat(-1)),
            ],
        );
        assert_eq!(x.text(&ctx), "3/2*(a|b*c) - (1)");
        assert_eq!(TensorElement::one(Mode::Commutative).text(&ctx), "1_K");
        assert_eq!(TensorElement::zero(Mode::Commutative).text(&ctx), "0");
        assert_eq!(
            TensorElement::one(Mode::Commutative).scale(&rat(2)).text(&ctx),
            "2*1_K"
        );
    }

    #[test]
    fn json_round_trip() {
        let ctx = ctx();
        let x = TensorElement::from_terms(
            Mode::Commutative,
            [
                (w(&ctx, &["a", "b*c"]), frac(3, 2)),
                (w(&ctx, &["1"]), rat(-1)),
                (TensorWord::empty(), rat(2)),
            ],
        );
        let payload = x.to_json(&ctx);
        let back = TensorElement::from_json(&ctx, &payload).unwrap();
        assert_eq!(back, x);

        let spec_payload = r#"{"terms":[{"coeff":"3/2","word":["a","b*c"]}]}"#;
        let y = TensorElement::from_json(&ctx, spec_payload).unwrap();
        assert_eq!(
            y,
            TensorElement::word(Mode::Commutative, w(&ctx, &["a", "b*c"])).scale(&frac(3, 2))
        );
        assert_eq!(y.to_json(&ctx), spec_payload);

        assert!(TensorElement::from_json(&ctx, "{").is_err());
        assert!(TensorElement::from_json(
            &ctx,
            r#"{"terms":[{"coeff":"1","word":["z"]}]}"#
        )
        .is_err());
        assert!(TensorElement::from_json(
            &ctx,
            r#"{"terms":[{"coeff":"1/0","word":["a"]}]}"#
        )
        .is_err());
    }

    #[test]
    fn graded_word_order() {
        let ctx = ctx();
        assert!(TensorWord::empty() < w(&ctx, &["a"]));
        assert!(w(&ctx, &["a"]) < w(&ctx, &["b", "a"]));
        assert!(w(&ctx, &["a", "b"]) > w(&ctx, &["b", "a"]));
        assert!(w(&ctx, &["a*b"]) < w(&ctx, &["a", "b"]));
    }

    #[test]
    fn letterwise_involution() {
        let paired = Context::new(
            Mode::Commutative,
            vec![
                crate::base::Generator::new("a").paired_with("b"),
                crate::base::Generator::new("b").paired_with("a"),
            ],
        )
        .unwrap();
        let x = TensorElement::word(Mode::Commutative, w(&paired, &["a", "a*b"]));
        let dag = x.involution(&paired).unwrap();
        assert_eq!(
            dag,
            TensorElement::word(Mode::Commutative, w(&paired, &["b", "a*b"]))
        );
        assert_eq!(dag.involution(&paired).unwrap(), x);
    }
}
