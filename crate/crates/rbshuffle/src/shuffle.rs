//! The four generalized shuffle products on tensor words.
//!
//! All four share the same shuffle skeleton and differ in how an adjacent
//! (left-letter, right-letter) pair may contract:
//!
//! * plain shuffle: no contractions;
//! * quasi-shuffle of weight `theta`: the pair merges into its product,
//!   scaled by `theta`;
//! * right-shift shuffle: the pair becomes `1 | product`, scaled by `-1`;
//! * left-shift shuffle: the pair becomes `product | 1`, scaled by `-1`.
//!
//! Two independent engines compute the same product: a combinatorial one
//! that enumerates shuffles and contraction subsets, and a recursive one
//! driven by first-letter recursions. Keeping both honest against each
//! other is part of the test contract.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::One;

use crate::base::{add_term, BaseMonomial, Mode};
use crate::errors::KernelError;
use crate::scalar::Rational;
use crate::tensor::{TensorElement, TensorWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductKind {
    Shuffle,
    Quasi(Rational),
    RightShift,
    LeftShift,
}

impl ProductKind {
    pub fn label(&self) -> String {
        match self {
            ProductKind::Shuffle => "sh".to_string(),
            ProductKind::Quasi(theta) => format!("qsh({})", theta),
            ProductKind::RightShift => "rsh".to_string(),
            ProductKind::LeftShift => "lsh".to_string(),
        }
    }
}

/// One interleaving of an `m`-letter word with an `n`-letter word, plus an
/// optional set of contracted adjacent pairs.
///
/// `positions[k]` is the index of the combined letter placed at slot `k`
/// (0-based): values below `m` refer to left-word letters, the rest to
/// right-word letters. Both subsequences must appear in their original
/// order. `contractions` holds 0-based slots `k` such that the pair
/// `(k, k+1)` contracts; each such slot must be admissible, meaning a
/// left-word letter sits at `k` and a right-word letter at `k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleSpec {
    left: usize,
    right: usize,
    positions: Vec<usize>,
    contractions: Vec<usize>,
}

impl ShuffleSpec {
    pub fn new(left: usize, right: usize, positions: Vec<usize>) -> Result<Self, KernelError> {
        let total = left + right;
        let bad = |reason: &str| -> Result<Self, KernelError> {
            Err(KernelError::InvalidPayload(format!(
                "not an ({left},{right})-shuffle: {reason}"
            )))
        };
        if positions.len() != total {
            return bad("wrong length");
        }
        let mut seen = vec![false; total];
        for &p in &positions {
            if p >= total || seen[p] {
                return bad("not a permutation");
            }
            seen[p] = true;
        }
        let mut last_left = None;
        let mut last_right = None;
        for &p in &positions {
            if p < left {
                if last_left.is_some_and(|q| q > p) {
                    return bad("left letters out of order");
                }
                last_left = Some(p);
            } else {
                if last_right.is_some_and(|q| q > p) {
                    return bad("right letters out of order");
                }
                last_right = Some(p);
            }
        }
        Ok(ShuffleSpec { left, right, positions, contractions: Vec::new() })
    }

    pub fn with_contractions(&self, slots: &[usize]) -> Result<Self, KernelError> {
        let admissible = self.admissible_slots();
        for s in slots {
            if !admissible.contains(s) {
                return Err(KernelError::InvalidPayload(format!(
                    "slot {s} is not an admissible contraction"
                )));
            }
        }
        let mut contractions = slots.to_vec();
        contractions.sort_unstable();
        contractions.dedup();
        Ok(ShuffleSpec { contractions, ..self.clone() })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contractions(&self) -> &[usize] {
        &self.contractions
    }

    /// 0-based slots where a left-word letter immediately precedes a
    /// right-word letter.
    pub fn admissible_slots(&self) -> Vec<usize> {
        (0..self.positions.len().saturating_sub(1))
            .filter(|&k| self.positions[k] < self.left && self.positions[k + 1] >= self.left)
            .collect()
    }

    /// The same slots as 1-based `(k, k+1)` pairs.
    pub fn admissible_pairs(&self) -> Vec<(usize, usize)> {
        self.admissible_slots()
            .into_iter()
            .map(|k| (k + 1, k + 2))
            .collect()
    }
}

/// All `(m+n choose m)` shuffles, contraction-free, in a fixed order: the
/// left-letter slot sets are enumerated lexicographically, so the identity
/// interleaving comes first.
pub fn enumerate_shuffles(m: usize, n: usize) -> Vec<ShuffleSpec> {
    let total = m + n;
    (0..total)
        .combinations(m)
        .map(|left_slots| {
            let mut positions = vec![usize::MAX; total];
            let mut is_left = vec![false; total];
            for (i, &slot) in left_slots.iter().enumerate() {
                positions[slot] = i;
                is_left[slot] = true;
            }
            let mut j = 0;
            for (slot, taken) in is_left.iter().enumerate() {
                if !taken {
                    positions[slot] = m + j;
                    j += 1;
                }
            }
            ShuffleSpec { left: m, right: n, positions, contractions: Vec::new() }
        })
        .collect()
}

fn combined<'a>(wx: &'a TensorWord, wy: &'a TensorWord) -> Vec<&'a BaseMonomial> {
    wx.letters().iter().chain(wy.letters().iter()).collect()
}

/// The word and scalar weight produced by one `(shuffle, contractions)`
/// choice applied to a pair of basis words.
fn realize(
    kind: &ProductKind,
    spec: &ShuffleSpec,
    letters: &[&BaseMonomial],
    mode: Mode,
) -> (TensorWord, Rational) {
    let mut out = Vec::with_capacity(letters.len());
    let mut weight = Rational::one();
    let mut k = 0;
    while k < spec.positions.len() {
        if spec.contractions.contains(&k) {
            let merged = letters[spec.positions[k]].mul(letters[spec.positions[k + 1]]);
            match kind {
                ProductKind::Shuffle => unreachable!("plain shuffle never contracts"),
                ProductKind::Quasi(theta) => {
                    out.push(merged);
                    weight *= theta;
                }
                ProductKind::RightShift => {
                    out.push(BaseMonomial::unit(mode));
                    out.push(merged);
                    weight = -weight;
                }
                ProductKind::LeftShift => {
                    out.push(merged);
                    out.push(BaseMonomial::unit(mode));
                    weight = -weight;
                }
            }
            k += 2;
        } else {
            out.push(letters[spec.positions[k]].clone());
            k += 1;
        }
    }
    (TensorWord::from_letters(out), weight)
}

fn word_product_combinatorial(
    kind: &ProductKind,
    mode: Mode,
    wx: &TensorWord,
    wy: &TensorWord,
    scale: &Rational,
    out: &mut BTreeMap<TensorWord, Rational>,
) {
    let letters = combined(wx, wy);
    for spec in enumerate_shuffles(wx.len(), wy.len()) {
        match kind {
            ProductKind::Shuffle => {
                let (word, weight) = realize(kind, &spec, &letters, mode);
                add_term(out, word, weight * scale);
            }
            _ => {
                let slots = spec.admissible_slots();
                for mask in 0u32..(1 << slots.len()) {
                    let chosen: Vec<usize> = slots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &s)| s)
                        .collect();
                    let spec = spec.with_contractions(&chosen).expect("admissible by construction");
                    let (word, weight) = realize(kind, &spec, &letters, mode);
                    add_term(out, word, weight * scale);
                }
            }
        }
    }
}

/// Engine one: enumerate shuffles and contraction subsets.
pub fn product_combinatorial(
    kind: &ProductKind,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    if x.mode() != y.mode() {
        return Err(KernelError::ModeMismatch);
    }
    let mut out = BTreeMap::new();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            word_product_combinatorial(kind, x.mode(), wx, wy, &(cx * cy), &mut out);
        }
    }
    Ok(TensorElement::from_terms(x.mode(), out))
}

/// Memoized first-letter recursion for one product kind.
pub struct RecursiveEngine {
    kind: ProductKind,
    mode: Mode,
    memo: HashMap<(TensorWord, TensorWord), TensorElement>,
}

impl RecursiveEngine {
    pub fn new(kind: ProductKind, mode: Mode) -> Self {
        RecursiveEngine { kind, mode, memo: HashMap::new() }
    }

    pub fn kind(&self) -> &ProductKind {
        &self.kind
    }

    pub fn words(&mut self, wx: &TensorWord, wy: &TensorWord) -> TensorElement {
        let key = (wx.clone(), wy.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.words_uncached(wx, wy);
        self.memo.insert(key, result.clone());
        result
    }

    fn words_uncached(&mut self, wx: &TensorWord, wy: &TensorWord) -> TensorElement {
        if wx.is_empty() {
            return TensorElement::word(self.mode, wy.clone());
        }
        if wy.is_empty() {
            return TensorElement::word(self.mode, wx.clone());
        }
        let (a, u) = wx.split_first().expect("nonempty");
        let (b, v) = wy.split_first().expect("nonempty");
        let mut out = BTreeMap::new();
        for (w, c) in self.words(&u, wy).terms() {
            add_term(&mut out, w.prepend(a.clone()), c.clone());
        }
        for (w, c) in self.words(wx, &v).terms() {
            add_term(&mut out, w.prepend(b.clone()), c.clone());
        }
        match self.kind.clone() {
            ProductKind::Shuffle => {}
            ProductKind::Quasi(theta) => {
                let merged = a.mul(b);
                for (w, c) in self.words(&u, &v).terms() {
                    add_term(&mut out, w.prepend(merged.clone()), c * &theta);
                }
            }
            ProductKind::RightShift => {
                let merged = a.mul(b);
                let unit = BaseMonomial::unit(self.mode);
                for (w, c) in self.words(&u, &v).terms() {
                    add_term(&mut out, w.prepend(merged.clone()).prepend(unit.clone()), -c);
                }
            }
            ProductKind::LeftShift => {
                let merged = a.mul(b);
                let unit = BaseMonomial::unit(self.mode);
                for (w, c) in self.words(&u, &v).terms() {
                    add_term(&mut out, w.prepend(unit.clone()).prepend(merged.clone()), -c);
                }
            }
        }
        TensorElement::from_terms(self.mode, out)
    }

    pub fn elements(
        &mut self,
        x: &TensorElement,
        y: &TensorElement,
    ) -> Result<TensorElement, KernelError> {
        if x.mode() != self.mode || y.mode() != self.mode {
            return Err(KernelError::ModeMismatch);
        }
        let mut out = BTreeMap::new();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                for (w, c) in self.words(wx, wy).terms() {
                    add_term(&mut out, w.clone(), c * &(cx * cy));
                }
            }
        }
        Ok(TensorElement::from_terms(self.mode, out))
    }
}

/// Engine two: the first-letter recursion.
pub fn product_recursive(
    kind: &ProductKind,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    RecursiveEngine::new(kind.clone(), x.mode()).elements(x, y)
}

/// The product used throughout the operator layers.
pub fn product(
    kind: &ProductKind,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    product_recursive(kind, x, y)
}

/// Extended product on the positive-degree module: first letters multiply in
/// the base algebra, tails multiply by the chosen shuffle product.
pub fn product_plus(
    kind: &ProductKind,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    let mut engine = RecursiveEngine::new(kind.clone(), x.mode());
    product_plus_with(&mut engine, x, y)
}

/// As `product_plus`, sharing the caller's memoized engine.
pub fn product_plus_with(
    engine: &mut RecursiveEngine,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement, KernelError> {
    if x.mode() != y.mode() {
        return Err(KernelError::ModeMismatch);
    }
    x.require_positive()?;
    y.require_positive()?;
    let mut out = BTreeMap::new();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let (a, u) = wx.split_first().expect("positive");
            let (b, v) = wy.split_first().expect("positive");
            let head = a.mul(b);
            for (w, c) in engine.words(&u, &v).terms() {
                add_term(&mut out, w.prepend(head.clone()), c * &(cx * cy));
            }
        }
    }
    Ok(TensorElement::from_terms(x.mode(), out))
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of distinct words a contracting product produces on a pair of
/// words with pairwise distinct generator letters.
pub fn mixable_count(m: u64, n: u64) -> u128 {
    let mut total = 0u128;
    for j in 0..=m.min(n) {
        // (m+n-j)! / (j! (m-j)! (n-j)!)
        let mut numer: u128 = 1;
        for i in 1..=(m + n - j) {
            numer *= i as u128;
        }
        let mut denom: u128 = 1;
        for i in 1..=j {
            denom *= i as u128;
        }
        for i in 1..=(m - j) {
            denom *= i as u128;
        }
        for i in 1..=(n - j) {
            denom *= i as u128;
        }
        total += numer / denom;
    }
    total
}
