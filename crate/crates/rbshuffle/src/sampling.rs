//! Deterministic sample generation for identity checks.
//!
//! Exhaustive samples are the words whose letters are pairwise distinct
//! single generators, up to a length bound. Random samples draw letters from
//! a richer pool (unit, generators, products of two generators) with a
//! seeded generator, so every reported counterexample is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use itertools::Itertools;

use crate::base::{BaseMonomial, Context};
use crate::tensor::TensorWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePolicy {
    pub exhaustive_len: usize,
    pub random_len: usize,
    pub random_cases: usize,
    pub seed: u64,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        SamplePolicy { exhaustive_len: 3, random_len: 4, random_cases: 200, seed: 42 }
    }
}

impl SamplePolicy {
    /// A reduced policy for quadratic or cubic sample grids.
    pub fn shallow() -> Self {
        SamplePolicy { exhaustive_len: 2, random_len: 3, random_cases: 60, seed: 42 }
    }
}

/// All words with pairwise distinct single-generator letters, length from
/// `min_len` to `max_len`.
pub fn exhaustive_words(ctx: &Context, min_len: usize, max_len: usize) -> Vec<TensorWord> {
    let gens: Vec<BaseMonomial> = ctx
        .generators()
        .map(|id| BaseMonomial::generator(ctx.mode(), id))
        .collect();
    let mut out = Vec::new();
    for len in min_len..=max_len.min(gens.len()) {
        for perm in gens.iter().permutations(len) {
            out.push(TensorWord::from_letters(perm.into_iter().cloned().collect()));
        }
    }
    out
}

/// The letter pool for random words: the unit, every generator, and every
/// product of two generators.
pub fn letter_pool(ctx: &Context) -> Vec<BaseMonomial> {
    let gens: Vec<BaseMonomial> = ctx
        .generators()
        .map(|id| BaseMonomial::generator(ctx.mode(), id))
        .collect();
    let mut pool = vec![BaseMonomial::unit(ctx.mode())];
    pool.extend(gens.iter().cloned());
    for g in &gens {
        for h in &gens {
            let p = g.mul(h);
            if !pool.contains(&p) {
                pool.push(p);
            }
        }
    }
    pool
}

pub fn random_words(
    ctx: &Context,
    count: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
) -> Vec<TensorWord> {
    random_words_from(&letter_pool(ctx), count, min_len, max_len, seed)
}

/// Random words whose letters avoid the unit monomial, for carriers over the
/// augmentation ideal.
pub fn random_reduced_words(
    ctx: &Context,
    count: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
) -> Vec<TensorWord> {
    let pool: Vec<BaseMonomial> =
        letter_pool(ctx).into_iter().filter(|m| !m.is_unit()).collect();
    random_words_from(&pool, count, min_len, max_len, seed)
}

fn random_words_from(
    pool: &[BaseMonomial],
    count: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
) -> Vec<TensorWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(min_len..=max_len);
            let letters = (0..len)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            TensorWord::from_letters(letters)
        })
        .collect()
}

/// All non-unit monomials of total degree 1..=max_deg over the generators.
pub fn monomials_up_to(ctx: &Context, max_deg: usize) -> Vec<BaseMonomial> {
    if max_deg == 0 {
        return Vec::new();
    }
    let gens: Vec<BaseMonomial> = ctx
        .generators()
        .map(|id| BaseMonomial::generator(ctx.mode(), id))
        .collect();
    let mut by_deg: Vec<Vec<BaseMonomial>> = vec![gens.clone()];
    for _ in 2..=max_deg {
        let prev = by_deg.last().unwrap();
        let mut next = Vec::new();
        for m in prev {
            for g in &gens {
                let p = m.mul(g);
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        by_deg.push(next);
    }
    by_deg.concat()
}

/// All words over the given letters with length `min_len..=max_len` and total
/// degree at most `max_deg`.
pub fn words_graded(
    letters: &[BaseMonomial],
    min_len: usize,
    max_len: usize,
    max_deg: usize,
) -> Vec<TensorWord> {
    let mut out = Vec::new();
    if min_len == 0 {
        out.push(TensorWord::empty());
    }
    let mut frontier = vec![TensorWord::empty()];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in letters {
                if w.degree() + a.degree() <= max_deg {
                    next.push(w.append(a.clone()));
                }
            }
        }
        if len >= min_len {
            out.extend(next.iter().cloned());
        }
        frontier = next;
    }
    out
}

/// Exhaustive ordered pairs plus seeded random pairs; `min_len = 1` restricts
/// to the positive-degree module.
pub fn word_pairs(ctx: &Context, policy: &SamplePolicy, min_len: usize) -> Vec<(TensorWord, TensorWord)> {
    let small = exhaustive_words(ctx, min_len, policy.exhaustive_len);
    let mut pairs: Vec<(TensorWord, TensorWord)> = small
        .iter()
        .cartesian_product(small.iter())
        .map(|(x, y)| (x.clone(), y.clone()))
        .collect();
    let randoms = random_words(ctx, 2 * policy.random_cases, min_len, policy.random_len, policy.seed);
    for chunk in randoms.chunks_exact(2) {
        pairs.push((chunk[0].clone(), chunk[1].clone()));
    }
    pairs
}

/// Exhaustive triples (over a shortened exhaustive list) plus random triples,
/// for associativity-style checks.
pub fn word_triples(
    ctx: &Context,
    policy: &SamplePolicy,
    min_len: usize,
) -> Vec<(TensorWord, TensorWord, TensorWord)> {
    let small = exhaustive_words(ctx, min_len, policy.exhaustive_len.min(2));
    let mut triples = Vec::new();
    for x in &small {
        for y in &small {
            for z in &small {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let randoms = random_words(ctx, 3 * policy.random_cases, min_len, policy.random_len, policy.seed);
    for chunk in randoms.chunks_exact(3) {
        triples.push((chunk[0].clone(), chunk[1].clone(), chunk[2].clone()));
    }
    triples
}
