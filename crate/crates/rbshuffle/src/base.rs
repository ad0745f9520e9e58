//! Free commutative and noncommutative base algebras over declared
//! generators, with optional involution pairing and letterwise coproduct
//! rules (primitive or grouplike) per generator.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::errors::KernelError;
use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Commutative,
    Noncommutative,
}

impl Mode {
    pub fn label(&self) -> &'static str {
        match self {
            Mode::Commutative => "comm",
            Mode::Noncommutative => "noncomm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoproductRule {
    Primitive,
    Grouplike,
    #[default]
    Unspecified,
}

/// Index of a generator inside a [`Context`]; ordering follows name order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub rule: CoproductRule,
    /// Involution partner; the generator itself unless a pairing is declared.
    pub partner: String,
}

impl Generator {
    pub fn new(name: &str) -> Self {
        Generator {
            name: name.to_string(),
            rule: CoproductRule::Unspecified,
            partner: name.to_string(),
        }
    }

    pub fn primitive(mut self) -> Self {
        self.rule = CoproductRule::Primitive;
        self
    }

    pub fn grouplike(mut self) -> Self {
        self.rule = CoproductRule::Grouplike;
        self
    }

    pub fn paired_with(mut self, partner: &str) -> Self {
        self.partner = partner.to_string();
        self
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A fixed set of generators together with the base-algebra mode.
#[derive(Debug, Clone)]
pub struct Context {
    mode: Mode,
    gens: Vec<Generator>,
    partner: Vec<GenId>,
}

impl Context {
    pub fn new(mode: Mode, mut gens: Vec<Generator>) -> Result<Self, KernelError> {
        gens.sort_by(|a, b| a.name.cmp(&b.name));
        for pair in gens.windows(2) {
            if pair[0].name == pair[1].name {
                return Err(KernelError::DuplicateGenerator(pair[0].name.clone()));
            }
        }
        for g in &gens {
            if !valid_name(&g.name) {
                return Err(KernelError::InvalidGeneratorName(g.name.clone()));
            }
        }
        let lookup = |name: &str| -> Result<GenId, KernelError> {
            gens.binary_search_by(|g| g.name.as_str().cmp(name))
                .map(|i| GenId(i as u32))
                .map_err(|_| KernelError::UndeclaredGenerator(name.to_string()))
        };
        let mut partner = Vec::with_capacity(gens.len());
        for g in &gens {
            partner.push(lookup(&g.partner)?);
        }
        for (i, &p) in partner.iter().enumerate() {
            if partner[p.0 as usize] != GenId(i as u32) {
                return Err(KernelError::BrokenInvolution(
                    gens[i].name.clone(),
                    gens[p.0 as usize].name.clone(),
                ));
            }
        }
        Ok(Context { mode, gens, partner })
    }

    /// Fixture constructor: plain commutative generators, no rules, no pairing.
    pub fn commutative(names: &[&str]) -> Self {
        Context::new(
            Mode::Commutative,
            names.iter().map(|n| Generator::new(n)).collect(),
        )
        .expect("valid fixture generators")
    }

    pub fn noncommutative(names: &[&str]) -> Self {
        Context::new(
            Mode::Noncommutative,
            names.iter().map(|n| Generator::new(n)).collect(),
        )
        .expect("valid fixture generators")
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.gens.len() as u32).map(GenId)
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.gens[id.0 as usize].name
    }

    pub fn rule(&self, id: GenId) -> CoproductRule {
        self.gens[id.0 as usize].rule
    }

    pub fn partner(&self, id: GenId) -> GenId {
        self.partner[id.0 as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.gens
            .binary_search_by(|g| g.name.as_str().cmp(name))
            .ok()
            .map(|i| GenId(i as u32))
    }

    pub fn require(&self, name: &str) -> Result<GenId, KernelError> {
        self.lookup(name)
            .ok_or_else(|| KernelError::UndeclaredGenerator(name.to_string()))
    }

    pub fn monomial(&self, name: &str) -> Result<BaseMonomial, KernelError> {
        Ok(BaseMonomial::generator(self.mode, self.require(name)?))
    }

    pub fn element(&self, name: &str) -> Result<BaseElement, KernelError> {
        Ok(BaseElement::monomial(self.monomial(name)?))
    }
}

/// A basis monomial: an exponent vector in commutative mode, a generator
/// word in noncommutative mode. The unit is the empty monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseMonomial {
    repr: MonoRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum MonoRepr {
    Comm(BTreeMap<GenId, u32>),
    Word(Vec<GenId>),
}

impl BaseMonomial {
    pub fn unit(mode: Mode) -> Self {
        let repr = match mode {
            Mode::Commutative => MonoRepr::Comm(BTreeMap::new()),
            Mode::Noncommutative => MonoRepr::Word(Vec::new()),
        };
        BaseMonomial { repr }
    }

    pub fn generator(mode: Mode, id: GenId) -> Self {
        let repr = match mode {
            Mode::Commutative => MonoRepr::Comm(BTreeMap::from([(id, 1)])),
            Mode::Noncommutative => MonoRepr::Word(vec![id]),
        };
        BaseMonomial { repr }
    }

    pub fn mode(&self) -> Mode {
        match self.repr {
            MonoRepr::Comm(_) => Mode::Commutative,
            MonoRepr::Word(_) => Mode::Noncommutative,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    pub fn degree(&self) -> usize {
        match &self.repr {
            MonoRepr::Comm(exps) => exps.values().map(|&e| e as usize).sum(),
            MonoRepr::Word(word) => word.len(),
        }
    }

    /// The generator sequence with multiplicity (sorted in commutative mode).
    pub fn letters(&self) -> Vec<GenId> {
        match &self.repr {
            MonoRepr::Comm(exps) => exps
                .iter()
                .flat_map(|(&g, &e)| std::iter::repeat(g).take(e as usize))
                .collect(),
            MonoRepr::Word(word) => word.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let repr = match (&self.repr, &other.repr) {
            (MonoRepr::Comm(a), MonoRepr::Comm(b)) => {
                let mut exps = a.clone();
                for (&g, &e) in b {
                    *exps.entry(g).or_insert(0) += e;
                }
                MonoRepr::Comm(exps)
            }
            (MonoRepr::Word(a), MonoRepr::Word(b)) => {
                let mut word = a.clone();
                word.extend_from_slice(b);
                MonoRepr::Word(word)
            }
            _ => panic!("mode mismatch between monomials"),
        };
        BaseMonomial { repr }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = BaseMonomial::unit(self.mode());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Involution: partner substitution on every generator; noncommutative
    /// words are reversed in addition.
    pub fn involution(&self, ctx: &Context) -> Self {
        let repr = match &self.repr {
            MonoRepr::Comm(exps) => MonoRepr::Comm(
                exps.iter()
                    .map(|(&g, &e)| (ctx.partner(g), e))
                    .collect(),
            ),
            MonoRepr::Word(word) => {
                MonoRepr::Word(word.iter().rev().map(|&g| ctx.partner(g)).collect())
            }
        };
        BaseMonomial { repr }
    }

    /// Canonical text form: `a^2*b`, `a*b*a` (adjacent repeats compressed),
    /// `1` for the unit.
    pub fn text(&self, ctx: &Context) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut runs: Vec<(GenId, u32)> = Vec::new();
        for g in self.letters() {
            match runs.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => runs.push((g, 1)),
            }
        }
        runs.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    ctx.name(g).to_string()
                } else {
                    format!("{}^{}", ctx.name(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn parse(ctx: &Context, s: &str) -> Result<Self, KernelError> {
        let bad = |reason: &str| KernelError::InvalidMonomial(s.to_string(), reason.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty text"));
        }
        let mut acc = BaseMonomial::unit(ctx.mode());
        for factor in s.split('*') {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: u32 = e
                        .trim()
                        .parse()
                        .ok()
                        .filter(|e| *e <= 4096)
                        .ok_or_else(|| bad("exponent is not a small nonnegative integer"))?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            if name.is_empty() {
                return Err(bad("missing generator name"));
            }
            let id = ctx.require(name)?;
            acc = acc.mul(&BaseMonomial::generator(ctx.mode(), id).pow(exp));
        }
        Ok(acc)
    }
}

// Graded lexicographic order: degree first, then exponent vectors compared
// lexicographically with earlier generator names dominating.
impl Ord for BaseMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            match (&self.repr, &other.repr) {
                (MonoRepr::Comm(a), MonoRepr::Comm(b)) => {
                    let mut ia = a.iter();
                    let mut ib = b.iter();
                    loop {
                        match (ia.next(), ib.next()) {
                            (None, None) => return Ordering::Equal,
                            (None, Some(_)) => return Ordering::Less,
                            (Some(_), None) => return Ordering::Greater,
                            (Some((ga, ea)), Some((gb, eb))) => {
                                // a positive exponent on an earlier generator outranks
                                match ga.cmp(gb) {
                                    Ordering::Less => return Ordering::Greater,
                                    Ordering::Greater => return Ordering::Less,
                                    Ordering::Equal => match ea.cmp(eb) {
                                        Ordering::Equal => {}
                                        ord => return ord,
                                    },
                                }
                            }
                        }
                    }
                }
                (MonoRepr::Word(a), MonoRepr::Word(b)) => {
                    for (la, lb) in a.iter().zip(b.iter()) {
                        match la.cmp(lb) {
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => {}
                        }
                    }
                    Ordering::Equal
                }
                (MonoRepr::Comm(_), MonoRepr::Word(_)) => Ordering::Less,
                (MonoRepr::Word(_), MonoRepr::Comm(_)) => Ordering::Greater,
            }
        })
    }
}

impl PartialOrd for BaseMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite rational combination of basis monomials; no zero coefficients
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseElement {
    mode: Mode,
    terms: BTreeMap<BaseMonomial, Rational>,
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl BaseElement {
    pub fn zero(mode: Mode) -> Self {
        BaseElement { mode, terms: BTreeMap::new() }
    }

    pub fn one(mode: Mode) -> Self {
        BaseElement::monomial(BaseMonomial::unit(mode))
    }

    pub fn scalar(mode: Mode, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, BaseMonomial::unit(mode), c);
        BaseElement { mode, terms }
    }

    pub fn monomial(m: BaseMonomial) -> Self {
        let mode = m.mode();
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, Rational::one());
        BaseElement { mode, terms }
    }

    pub fn from_terms(
        mode: Mode,
        entries: impl IntoIterator<Item = (BaseMonomial, Rational)>,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in entries {
            assert!(m.mode() == mode, "mode mismatch in term list");
            add_term(&mut terms, m, c);
        }
        BaseElement { mode, terms }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BaseMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &BaseMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        if self.mode != other.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(BaseElement { mode: self.mode, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BaseElement::zero(self.mode);
        }
        BaseElement {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, KernelError> {
        if self.mode != other.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(BaseElement { mode: self.mode, terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = BaseElement::one(self.mode);
        for _ in 0..k {
            acc = acc.mul(self).expect("same mode");
        }
        acc
    }

    pub fn involution(&self, ctx: &Context) -> Result<Self, KernelError> {
        if self.mode != ctx.mode() {
            return Err(KernelError::ModeMismatch);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.involution(ctx), c.clone());
        }
        Ok(BaseElement { mode: self.mode, terms })
    }

    /// Letterwise coproduct, extended multiplicatively: primitive generators
    /// split as `g(x)1 + 1(x)g`, grouplike ones as `g(x)g`.
    pub fn coproduct(&self, ctx: &Context) -> Result<TwoLegBase, KernelError> {
        if self.mode != ctx.mode() {
            return Err(KernelError::ModeMismatch);
        }
        let unit = BaseMonomial::unit(self.mode);
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc: Vec<((BaseMonomial, BaseMonomial), Rational)> =
                vec![((unit.clone(), unit.clone()), c.clone())];
            for g in m.letters() {
                let split = match ctx.rule(g) {
                    CoproductRule::Primitive => vec![
                        (BaseMonomial::generator(self.mode, g), unit.clone()),
                        (unit.clone(), BaseMonomial::generator(self.mode, g)),
                    ],
                    CoproductRule::Grouplike => vec![(
                        BaseMonomial::generator(self.mode, g),
                        BaseMonomial::generator(self.mode, g),
                    )],
                    CoproductRule::Unspecified => {
                        return Err(KernelError::MissingCoproductRule(
                            ctx.name(g).to_string(),
                        ));
                    }
                };
                let mut next = Vec::with_capacity(acc.len() * split.len());
                for ((l, r), k) in &acc {
                    for (gl, gr) in &split {
                        next.push(((l.mul(gl), r.mul(gr)), k.clone()));
                    }
                }
                acc = next;
            }
            for (pair, k) in acc {
                add_term(&mut out, pair, k);
            }
        }
        Ok(TwoLegBase { mode: self.mode, terms: out })
    }

    /// Letterwise counit: primitive generators vanish, grouplike ones count 1.
    pub fn counit(&self, ctx: &Context) -> Result<Rational, KernelError> {
        if self.mode != ctx.mode() {
            return Err(KernelError::ModeMismatch);
        }
        let mut total = Rational::zero();
        'terms: for (m, c) in &self.terms {
            for g in m.letters() {
                match ctx.rule(g) {
                    CoproductRule::Primitive => continue 'terms,
                    CoproductRule::Grouplike => {}
                    CoproductRule::Unspecified => {
                        return Err(KernelError::MissingCoproductRule(
                            ctx.name(g).to_string(),
                        ));
                    }
                }
            }
            total += c;
        }
        Ok(total)
    }

    /// Canonical text form, terms in descending graded order.
    pub fn text(&self, ctx: &Context) -> String {
        render_terms(self.terms.iter().rev(), |m| m.text(ctx))
    }
}

/// Renders `coeff * item` terms joined by ` + ` / ` - `, eliding unit
/// coefficients; the scalar `1` stands in for a bare unit basis item.
pub(crate) fn render_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    item: impl Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = item(k);
        if mag.is_one() {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{}*{}", mag, body));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A rational combination of monomial pairs: the target of the base
/// coproduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLegBase {
    mode: Mode,
    terms: BTreeMap<(BaseMonomial, BaseMonomial), Rational>,
}

impl TwoLegBase {
    pub fn zero(mode: Mode) -> Self {
        TwoLegBase { mode, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        mode: Mode,
        entries: impl IntoIterator<Item = ((BaseMonomial, BaseMonomial), Rational)>,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (pair, c) in entries {
            assert!(pair.0.mode() == mode && pair.1.mode() == mode);
            add_term(&mut terms, pair, c);
        }
        TwoLegBase { mode, terms }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BaseMonomial, BaseMonomial), &Rational)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, KernelError> {
        if self.mode != other.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut terms = BTreeMap::new();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                add_term(&mut terms, (la.mul(lb), ra.mul(rb)), ca * cb);
            }
        }
        Ok(TwoLegBase { mode: self.mode, terms })
    }

    /// Collapse the left leg with the counit.
    pub fn counit_left(&self, ctx: &Context) -> Result<BaseElement, KernelError> {
        let mut out = BaseElement::zero(self.mode);
        for ((l, r), c) in &self.terms {
            let k = BaseElement::monomial(l.clone()).counit(ctx)?;
            out = out.add(&BaseElement::monomial(r.clone()).scale(&(c * k)))?;
        }
        Ok(out)
    }

    /// Collapse the right leg with the counit.
    pub fn counit_right(&self, ctx: &Context) -> Result<BaseElement, KernelError> {
        let mut out = BaseElement::zero(self.mode);
        for ((l, r), c) in &self.terms {
            let k = BaseElement::monomial(r.clone()).counit(ctx)?;
            out = out.add(&BaseElement::monomial(l.clone()).scale(&(c * k)))?;
        }
        Ok(out)
    }

    pub fn text(&self, ctx: &Context) -> String {
        render_terms(self.terms.iter().rev(), |(l, r)| {
            format!("{} @ {}", l.text(ctx), r.text(ctx))
        })
    }
}
