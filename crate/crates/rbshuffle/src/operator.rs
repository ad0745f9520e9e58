//! Shift operators, conjugates, morphism lifts, double products, and the
//! identity checkers that drive them.
//!
//! Everything here is checked semantically: both sides of an identity are
//! evaluated to canonical form on a sample set and compared exactly. A
//! failure is data (a report with a counterexample), not an error.

use std::collections::BTreeMap;

use crate::base::{BaseElement, BaseMonomial, Context, GenId, Mode};
use crate::errors::KernelError;
use crate::report::{CheckReport, Counterexample};
use crate::sampling::{word_pairs, word_triples, SamplePolicy};
use crate::scalar::Rational;
use crate::shuffle::{product_plus_with, ProductKind, RecursiveEngine};
use crate::tensor::{TensorElement, TensorWord};

/// A product structure on the tensor module: either the plain module with a
/// generalized shuffle product (unit = empty word), or the positive-degree
/// module with the extended product (unit = the length-1 unit word).
pub struct Ambient {
    kind: ProductKind,
    extended: bool,
    mode: Mode,
    engine: RecursiveEngine,
}

impl Ambient {
    pub fn plain(mode: Mode, kind: ProductKind) -> Self {
        Ambient { engine: RecursiveEngine::new(kind.clone(), mode), kind, extended: false, mode }
    }

    pub fn extended(mode: Mode, kind: ProductKind) -> Self {
        Ambient { engine: RecursiveEngine::new(kind.clone(), mode), kind, extended: true, mode }
    }

    pub fn label(&self) -> String {
        if self.extended {
            format!("{}+", self.kind.label())
        } else {
            self.kind.label()
        }
    }

    pub fn kind(&self) -> &ProductKind {
        &self.kind
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn mul(&mut self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement, KernelError> {
        if self.extended {
            product_plus_with(&mut self.engine, x, y)
        } else {
            self.engine.elements(x, y)
        }
    }

    pub fn one(&self) -> TensorElement {
        if self.extended {
            TensorElement::unit_word(self.mode)
        } else {
            TensorElement::one(self.mode)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugateFlavor {
    RbTilde(Rational),
    NijTilde,
    TdTilde,
}

/// A linear operator on tensor elements, evaluated against an ambient
/// product when the definition needs one (conjugates, lifts).
#[derive(Debug, Clone)]
pub struct OperatorDescriptor {
    name: String,
    kind: OperatorKind,
}

#[derive(Debug, Clone)]
pub enum OperatorKind {
    /// P_A: prepend the unit letter.
    PrependUnit,
    /// Q_A: append the unit letter.
    AppendUnit,
    /// P^(u): prepend the generator u.
    PrependLetter(GenId),
    Conjugate(Box<OperatorDescriptor>, ConjugateFlavor),
    Lift(MorphismLift),
    Identity,
    /// Composed(f, g) applies g first, then f.
    Composed(Box<OperatorDescriptor>, Box<OperatorDescriptor>),
}

impl OperatorDescriptor {
    pub fn prepend_unit() -> Self {
        OperatorDescriptor { name: "P_A".to_string(), kind: OperatorKind::PrependUnit }
    }

    pub fn append_unit() -> Self {
        OperatorDescriptor { name: "Q_A".to_string(), kind: OperatorKind::AppendUnit }
    }

    pub fn prepend_letter(ctx: &Context, generator: &str) -> Result<Self, KernelError> {
        let id = ctx.require(generator)?;
        Ok(OperatorDescriptor {
            name: format!("P^({})", generator),
            kind: OperatorKind::PrependLetter(id),
        })
    }

    pub fn identity() -> Self {
        OperatorDescriptor { name: "id".to_string(), kind: OperatorKind::Identity }
    }

    pub fn rb_tilde(base: OperatorDescriptor, theta: Rational) -> Self {
        OperatorDescriptor {
            name: format!("rb_tilde({})", base.name),
            kind: OperatorKind::Conjugate(Box::new(base), ConjugateFlavor::RbTilde(theta)),
        }
    }

    pub fn nij_tilde(base: OperatorDescriptor) -> Self {
        OperatorDescriptor {
            name: format!("nij_tilde({})", base.name),
            kind: OperatorKind::Conjugate(Box::new(base), ConjugateFlavor::NijTilde),
        }
    }

    pub fn td_tilde(base: OperatorDescriptor) -> Self {
        OperatorDescriptor {
            name: format!("td_tilde({})", base.name),
            kind: OperatorKind::Conjugate(Box::new(base), ConjugateFlavor::TdTilde),
        }
    }

    pub fn composed(outer: OperatorDescriptor, inner: OperatorDescriptor) -> Self {
        OperatorDescriptor {
            name: format!("{}.{}", outer.name, inner.name),
            kind: OperatorKind::Composed(Box::new(outer), Box::new(inner)),
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &OperatorKind {
        &self.kind
    }

    pub fn apply(&self, ambient: &mut Ambient, x: &TensorElement) -> Result<TensorElement, KernelError> {
        let mode = ambient.mode();
        if x.mode() != mode {
            return Err(KernelError::ModeMismatch);
        }
        match &self.kind {
            OperatorKind::PrependUnit => x.map_words(mode, |w| {
                Ok(TensorElement::word(mode, w.prepend(BaseMonomial::unit(mode))))
            }),
            OperatorKind::AppendUnit => x.map_words(mode, |w| {
                Ok(TensorElement::word(mode, w.append(BaseMonomial::unit(mode))))
            }),
            OperatorKind::PrependLetter(u) => {
                let letter = BaseMonomial::generator(mode, *u);
                x.map_words(mode, |w| Ok(TensorElement::word(mode, w.prepend(letter.clone()))))
            }
            OperatorKind::Conjugate(base, flavor) => {
                let base_image = base.apply(ambient, x)?;
                match flavor {
                    ConjugateFlavor::RbTilde(theta) => x.scale(&-theta.clone()).sub(&base_image),
                    ConjugateFlavor::NijTilde => x.sub(&base_image),
                    ConjugateFlavor::TdTilde => {
                        let one = ambient.one();
                        let unit_image = base.apply(ambient, &one)?;
                        ambient.mul(&unit_image, x)?.sub(&base_image)
                    }
                }
            }
            OperatorKind::Lift(lift) => lift.apply(x),
            OperatorKind::Identity => Ok(x.clone()),
            OperatorKind::Composed(outer, inner) => {
                let mid = inner.apply(ambient, x)?;
                outer.apply(ambient, &mid)
            }
        }
    }
}

/// Apply a shift operator without constructing an ambient (the three shift
/// kinds never consult the product).
pub fn shift_apply(op: &OperatorDescriptor, x: &TensorElement) -> Result<TensorElement, KernelError> {
    match op.kind() {
        OperatorKind::PrependUnit | OperatorKind::AppendUnit | OperatorKind::PrependLetter(_) => {
            let mut ambient = Ambient::plain(x.mode(), ProductKind::Shuffle);
            op.apply(&mut ambient, x)
        }
        _ => Err(KernelError::Unsupported(
            "shift_apply expects a shift operator; use apply with an ambient".to_string(),
        )),
    }
}

/// The inductive extension of a generator substitution to the whole module:
/// a length-1 word goes to the multiplicative image of its letter, and
/// longer words follow head-times-shifted-tail.
#[derive(Debug, Clone)]
pub struct MorphismLift {
    images: BTreeMap<GenId, TensorElement>,
    kind: ProductKind,
    mode: Mode,
}

impl MorphismLift {
    fn monomial_image(&self, engine: &mut RecursiveEngine, m: &BaseMonomial) -> Result<TensorElement, KernelError> {
        let mut acc = TensorElement::unit_word(self.mode);
        for g in m.letters() {
            let img = self.images.get(&g).expect("validated total");
            acc = product_plus_with(engine, &acc, img)?;
        }
        Ok(acc)
    }

    fn word_image(&self, engine: &mut RecursiveEngine, w: &TensorWord) -> Result<TensorElement, KernelError> {
        match w.split_first() {
            None => Ok(TensorElement::unit_word(self.mode)),
            Some((head, tail)) => {
                let head_image = self.monomial_image(engine, head)?;
                if tail.is_empty() {
                    return Ok(head_image);
                }
                let tail_image = self.word_image(engine, &tail)?;
                let shifted = tail_image.map_words(self.mode, |v| {
                    Ok(TensorElement::word(self.mode, v.prepend(BaseMonomial::unit(self.mode))))
                })?;
                product_plus_with(engine, &head_image, &shifted)
            }
        }
    }

    pub fn apply(&self, x: &TensorElement) -> Result<TensorElement, KernelError> {
        if x.mode() != self.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut engine = RecursiveEngine::new(self.kind.clone(), self.mode);
        x.map_words(self.mode, |w| self.word_image(&mut engine, w))
    }
}

/// Build the lift of a generator substitution into the extended algebra of
/// the given product kind. Every generator needs a positive image; over a
/// commutative base the images must commute pairwise under the extended
/// product, otherwise the substitution does not factor through the
/// commutative polynomial algebra.
pub fn lift_morphism(
    ctx: &Context,
    assignments: &[(&str, TensorElement)],
    kind: ProductKind,
) -> Result<OperatorDescriptor, KernelError> {
    let mode = ctx.mode();
    let mut images = BTreeMap::new();
    for (name, image) in assignments {
        let id = ctx.require(name)?;
        if image.mode() != mode {
            return Err(KernelError::ModeMismatch);
        }
        image.require_positive()?;
        if images.insert(id, image.clone()).is_some() {
            return Err(KernelError::DuplicateGenerator((*name).to_string()));
        }
    }
    for id in ctx.generators() {
        if !images.contains_key(&id) {
            return Err(KernelError::InvalidPayload(format!(
                "no image for generator {}",
                ctx.name(id)
            )));
        }
    }
    if mode == Mode::Commutative {
        let mut engine = RecursiveEngine::new(kind.clone(), mode);
        let values: Vec<&TensorElement> = images.values().collect();
        for (i, x) in values.iter().enumerate() {
            for y in values.iter().skip(i + 1) {
                let xy = product_plus_with(&mut engine, x, y)?;
                let yx = product_plus_with(&mut engine, y, x)?;
                if xy != yx {
                    return Err(KernelError::NonMultiplicative);
                }
            }
        }
    }
    Ok(OperatorDescriptor {
        name: "lift".to_string(),
        kind: OperatorKind::Lift(MorphismLift { images, kind, mode }),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Scalar(Rational),
    Element(BaseElement),
}

impl Weight {
    pub fn label(&self, ctx: &Context) -> String {
        match self {
            Weight::Scalar(c) => c.to_string(),
            Weight::Element(e) => e.text(ctx),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdentityKind {
    RotaBaxter(Weight),
    Nijenhuis,
    Td,
    Average,
    RbHomomorphism(Weight),
    NijHomomorphism,
}

impl IdentityKind {
    pub fn label(&self, ctx: &Context) -> String {
        match self {
            IdentityKind::RotaBaxter(w) => format!("rota_baxter({})", w.label(ctx)),
            IdentityKind::Nijenhuis => "nijenhuis".to_string(),
            IdentityKind::Td => "td".to_string(),
            IdentityKind::Average => "average".to_string(),
            IdentityKind::RbHomomorphism(w) => format!("rb_homomorphism({})", w.label(ctx)),
            IdentityKind::NijHomomorphism => "nij_homomorphism".to_string(),
        }
    }
}

/// An algebra in which operator identities can be evaluated: a product, a
/// distinguished operator, and enough linear structure to form residuals.
pub trait CheckAlgebra {
    type Elem: Clone + PartialEq;

    fn ambient_label(&self) -> String;
    fn operator_label(&self) -> String;
    fn mul(&mut self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError>;
    fn apply(&mut self, x: &Self::Elem) -> Result<Self::Elem, KernelError>;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError>;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, x: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Result<Self::Elem, KernelError>;
    fn embed_base(&self, e: &BaseElement) -> Result<Self::Elem, KernelError>;
    fn render(&self, x: &Self::Elem) -> String;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError> {
        self.add(x, &self.neg(y))
    }
}

/// The tensor module with a generalized shuffle product and one operator.
pub struct TensorCheckAlgebra {
    ctx: Context,
    ambient: Ambient,
    op: OperatorDescriptor,
}

impl TensorCheckAlgebra {
    pub fn new(ctx: &Context, ambient: Ambient, op: OperatorDescriptor) -> Self {
        TensorCheckAlgebra { ctx: ctx.clone(), ambient, op }
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn min_word_len(&self) -> usize {
        usize::from(self.ambient.is_extended())
    }

    pub fn sample_pairs(&self, policy: &SamplePolicy) -> Vec<(TensorElement, TensorElement)> {
        word_pairs(&self.ctx, policy, self.min_word_len())
            .into_iter()
            .map(|(x, y)| {
                (
                    TensorElement::word(self.ctx.mode(), x),
                    TensorElement::word(self.ctx.mode(), y),
                )
            })
            .collect()
    }

    pub fn sample_triples(&self, policy: &SamplePolicy) -> Vec<(TensorElement, TensorElement, TensorElement)> {
        word_triples(&self.ctx, policy, self.min_word_len())
            .into_iter()
            .map(|(x, y, z)| {
                (
                    TensorElement::word(self.ctx.mode(), x),
                    TensorElement::word(self.ctx.mode(), y),
                    TensorElement::word(self.ctx.mode(), z),
                )
            })
            .collect()
    }
}

impl CheckAlgebra for TensorCheckAlgebra {
    type Elem = TensorElement;

    fn ambient_label(&self) -> String {
        self.ambient.label()
    }

    fn operator_label(&self) -> String {
        self.op.name().to_string()
    }

    fn mul(&mut self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement, KernelError> {
        self.ambient.mul(x, y)
    }

    fn apply(&mut self, x: &TensorElement) -> Result<TensorElement, KernelError> {
        self.op.apply(&mut self.ambient, x)
    }

    fn add(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement, KernelError> {
        x.add(y)
    }

    fn neg(&self, x: &TensorElement) -> TensorElement {
        x.neg()
    }

    fn scale(&self, c: &Rational, x: &TensorElement) -> TensorElement {
        x.scale(c)
    }

    fn one(&self) -> Result<TensorElement, KernelError> {
        Ok(self.ambient.one())
    }

    fn embed_base(&self, e: &BaseElement) -> Result<TensorElement, KernelError> {
        if e.mode() != self.ambient.mode() {
            return Err(KernelError::ModeMismatch);
        }
        Ok(TensorElement::from_base(e))
    }

    fn render(&self, x: &TensorElement) -> String {
        x.text(&self.ctx)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DoubleFlavor {
    StarR(Weight),
    StarN,
    StarP,
}

impl DoubleFlavor {
    pub fn label(&self, ctx: &Context) -> String {
        match self {
            DoubleFlavor::StarR(w) => format!("star_R({})", w.label(ctx)),
            DoubleFlavor::StarN => "star_N".to_string(),
            DoubleFlavor::StarP => "star_P".to_string(),
        }
    }
}

/// The operator-twisted double product in any check algebra.
pub fn double_product<A: CheckAlgebra>(
    flavor: &DoubleFlavor,
    alg: &mut A,
    x: &A::Elem,
    y: &A::Elem,
) -> Result<A::Elem, KernelError> {
    let ox = alg.apply(x)?;
    let oy = alg.apply(y)?;
    let oxy = alg.mul(&ox, y)?;
    let xoy = alg.mul(x, &oy)?;
    let base = alg.add(&oxy, &xoy)?;
    let twist = match flavor {
        DoubleFlavor::StarR(Weight::Scalar(theta)) => {
            let xy = alg.mul(x, y)?;
            alg.scale(theta, &xy)
        }
        DoubleFlavor::StarR(Weight::Element(e)) => {
            let w = alg.embed_base(e)?;
            let xw = alg.mul(x, &w)?;
            alg.mul(&xw, y)?
        }
        DoubleFlavor::StarN => {
            let xy = alg.mul(x, y)?;
            let nxy = alg.apply(&xy)?;
            alg.neg(&nxy)
        }
        DoubleFlavor::StarP => {
            let one = alg.one()?;
            let p1 = alg.apply(&one)?;
            let xp1 = alg.mul(x, &p1)?;
            let sandwich = alg.mul(&xp1, y)?;
            alg.neg(&sandwich)
        }
    };
    alg.add(&base, &twist)
}

/// Wraps an algebra so that multiplication becomes the double product while
/// the operator is unchanged. Double products are generally non-unital.
pub struct DoubleCheckAlgebra<A: CheckAlgebra> {
    pub inner: A,
    flavor: DoubleFlavor,
    label: String,
}

impl<A: CheckAlgebra> DoubleCheckAlgebra<A> {
    pub fn new(inner: A, flavor: DoubleFlavor, flavor_label: &str) -> Self {
        let label = format!("{}@{}", flavor_label, inner.ambient_label());
        DoubleCheckAlgebra { inner, flavor, label }
    }
}

impl<A: CheckAlgebra> CheckAlgebra for DoubleCheckAlgebra<A> {
    type Elem = A::Elem;

    fn ambient_label(&self) -> String {
        self.label.clone()
    }

    fn operator_label(&self) -> String {
        self.inner.operator_label()
    }

    fn mul(&mut self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError> {
        double_product(&self.flavor, &mut self.inner, x, y)
    }

    fn apply(&mut self, x: &Self::Elem) -> Result<Self::Elem, KernelError> {
        self.inner.apply(x)
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, KernelError> {
        self.inner.add(x, y)
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        self.inner.neg(x)
    }

    fn scale(&self, c: &Rational, x: &Self::Elem) -> Self::Elem {
        self.inner.scale(c, x)
    }

    fn one(&self) -> Result<Self::Elem, KernelError> {
        Err(KernelError::Unsupported(
            "double products are non-unital".to_string(),
        ))
    }

    fn embed_base(&self, e: &BaseElement) -> Result<Self::Elem, KernelError> {
        self.inner.embed_base(e)
    }

    fn render(&self, x: &Self::Elem) -> String {
        self.inner.render(x)
    }
}

/// Evaluate a caller-supplied family of equations over sample pairs and fold
/// the outcomes into a report.
pub fn check_pairs<A, F>(
    alg: &mut A,
    identity_label: &str,
    pairs: &[(A::Elem, A::Elem)],
    mut equations: F,
) -> Result<CheckReport, KernelError>
where
    A: CheckAlgebra,
    F: FnMut(&mut A, &A::Elem, &A::Elem) -> Result<Vec<(A::Elem, A::Elem)>, KernelError>,
{
    let operator = alg.operator_label();
    let ambient = alg.ambient_label();
    let mut samples = 0u64;
    for (x, y) in pairs {
        samples += 1;
        for (lhs, rhs) in equations(alg, x, y)? {
            if lhs != rhs {
                return Ok(CheckReport::failed(
                    identity_label,
                    &operator,
                    &ambient,
                    samples,
                    Counterexample {
                        inputs: vec![alg.render(x), alg.render(y)],
                        lhs: alg.render(&lhs),
                        rhs: alg.render(&rhs),
                    },
                ));
            }
        }
    }
    Ok(CheckReport::passed(identity_label, &operator, &ambient, samples))
}

/// Evaluate one of the named operator identities on every sample pair.
pub fn check_identity<A: CheckAlgebra>(
    kind: &IdentityKind,
    ctx: &Context,
    alg: &mut A,
    pairs: &[(A::Elem, A::Elem)],
) -> Result<CheckReport, KernelError> {
    let label = kind.label(ctx);
    let kind = kind.clone();
    check_pairs(alg, &label, pairs, move |alg, x, y| {
        equation_sides(&kind, alg, x, y)
    })
}

fn weight_term<A: CheckAlgebra>(
    w: &Weight,
    alg: &mut A,
    x: &A::Elem,
    y: &A::Elem,
) -> Result<A::Elem, KernelError> {
    match w {
        Weight::Scalar(theta) => {
            let xy = alg.mul(x, y)?;
            Ok(alg.scale(theta, &xy))
        }
        Weight::Element(e) => {
            let mid = alg.embed_base(e)?;
            let xm = alg.mul(x, &mid)?;
            alg.mul(&xm, y)
        }
    }
}

fn equation_sides<A: CheckAlgebra>(
    kind: &IdentityKind,
    alg: &mut A,
    x: &A::Elem,
    y: &A::Elem,
) -> Result<Vec<(A::Elem, A::Elem)>, KernelError> {
    let ox = alg.apply(x)?;
    let oy = alg.apply(y)?;
    let lhs = alg.mul(&ox, &oy)?;
    let oxy = alg.mul(&ox, y)?;
    let xoy = alg.mul(x, &oy)?;
    let cross = alg.add(&oxy, &xoy)?;
    match kind {
        IdentityKind::RotaBaxter(w) => {
            let wt = weight_term(w, alg, x, y)?;
            let inner = alg.add(&cross, &wt)?;
            Ok(vec![(lhs, alg.apply(&inner)?)])
        }
        IdentityKind::Nijenhuis => {
            let xy = alg.mul(x, y)?;
            let once = alg.apply(&xy)?;
            let osq = alg.apply(&once)?;
            let ocross = alg.apply(&cross)?;
            let rhs = alg.sub(&ocross, &osq)?;
            Ok(vec![(lhs, rhs)])
        }
        IdentityKind::Td => {
            let one = alg.one()?;
            let p1 = alg.apply(&one)?;
            let xp1 = alg.mul(x, &p1)?;
            let sandwich = alg.mul(&xp1, y)?;
            let inner = alg.sub(&cross, &sandwich)?;
            Ok(vec![(lhs, alg.apply(&inner)?)])
        }
        IdentityKind::Average => {
            let right = alg.apply(&xoy)?;
            let left = alg.apply(&oxy)?;
            Ok(vec![(lhs.clone(), right), (lhs, left)])
        }
        IdentityKind::RbHomomorphism(w) => {
            let wt = weight_term(w, alg, x, y)?;
            let star = alg.add(&cross, &wt)?;
            Ok(vec![(alg.apply(&star)?, lhs)])
        }
        IdentityKind::NijHomomorphism => {
            let xy = alg.mul(x, y)?;
            let nxy = alg.apply(&xy)?;
            let star = alg.sub(&cross, &nxy)?;
            let hom = (alg.apply(&star)?, lhs);
            // the complement Nt = id - N is a morphism for its own double
            // product, which is xy - x*y; with the sign pulled out:
            // Nt(x*y) - Nt(xy) = -Nt(x) Nt(y)
            let tx = alg.sub(x, &ox)?;
            let ty = alg.sub(y, &oy)?;
            let nstar = alg.apply(&star)?;
            let tstar = alg.sub(&star, &nstar)?;
            let txy = alg.sub(&xy, &nxy)?;
            let anti_lhs = alg.sub(&tstar, &txy)?;
            let txty = alg.mul(&tx, &ty)?;
            let anti = (anti_lhs, alg.neg(&txty));
            Ok(vec![hom, anti])
        }
    }
}

/// Associativity of the algebra's own product over sample triples.
pub fn check_associativity<A: CheckAlgebra>(
    alg: &mut A,
    triples: &[(A::Elem, A::Elem, A::Elem)],
) -> Result<CheckReport, KernelError> {
    let operator = alg.operator_label();
    let ambient = alg.ambient_label();
    let mut samples = 0u64;
    for (x, y, z) in triples {
        samples += 1;
        let xy = alg.mul(x, y)?;
        let left = alg.mul(&xy, z)?;
        let yz = alg.mul(y, z)?;
        let right = alg.mul(x, &yz)?;
        if left != right {
            return Ok(CheckReport::failed(
                "associativity",
                &operator,
                &ambient,
                samples,
                Counterexample {
                    inputs: vec![alg.render(x), alg.render(y), alg.render(z)],
                    lhs: alg.render(&left),
                    rhs: alg.render(&right),
                },
            ));
        }
    }
    Ok(CheckReport::passed("associativity", &operator, &ambient, samples))
}

/// Commutativity of the algebra's own product over sample pairs.
pub fn check_commutativity<A: CheckAlgebra>(
    alg: &mut A,
    pairs: &[(A::Elem, A::Elem)],
) -> Result<CheckReport, KernelError> {
    check_pairs(alg, "commutativity", pairs, |alg, x, y| {
        Ok(vec![(alg.mul(x, y)?, alg.mul(y, x)?)])
    })
}
