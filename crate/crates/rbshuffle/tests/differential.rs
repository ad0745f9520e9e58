//! The combinatorial and recursive product engines must agree everywhere.
//! Words with pairwise-distinct generator letters give every shuffle and
//! every contraction a distinct target word, so nothing can cancel or merge:
//! any divergence between the engines survives into the comparison.

use std::collections::BTreeSet;

use rbshuffle::scalar::{frac, rat};
use rbshuffle::{
    product_combinatorial, product_recursive, Context, Mode, ProductKind, TensorElement,
    TensorWord,
};

fn kinds() -> Vec<ProductKind> {
    vec![
        ProductKind::Shuffle,
        ProductKind::Quasi(rat(1)),
        ProductKind::RightShift,
        ProductKind::LeftShift,
    ]
}

fn distinct_letter_pairs(ctx: &Context, total: usize) -> Vec<(TensorWord, TensorWord)> {
    let words = rbshuffle::sampling::exhaustive_words(ctx, 0, total);
    let tagged: Vec<(BTreeSet<_>, &TensorWord)> = words
        .iter()
        .map(|w| {
            let set: BTreeSet<_> = w.letters().iter().flat_map(|m| m.letters()).collect();
            (set, w)
        })
        .collect();
    let mut pairs = Vec::new();
    for (su, u) in &tagged {
        for (sv, v) in &tagged {
            if u.len() + v.len() <= total && su.is_disjoint(sv) {
                pairs.push(((*u).clone(), (*v).clone()));
            }
        }
    }
    pairs
}

#[test]
fn engines_agree_on_all_distinct_letter_pairs() {
    for mode in [Mode::Commutative, Mode::Noncommutative] {
        let names = ["p", "q", "r", "s", "t", "u"];
        let ctx = match mode {
            Mode::Commutative => Context::commutative(&names),
            Mode::Noncommutative => Context::noncommutative(&names),
        };
        let pairs = distinct_letter_pairs(&ctx, 6);
        assert_eq!(pairs.len(), 11743, "pair family over six generators");
        for kind in kinds() {
            for (u, v) in &pairs {
                let x = TensorElement::word(mode, u.clone());
                let y = TensorElement::word(mode, v.clone());
                let comb = product_combinatorial(&kind, &x, &y).unwrap();
                let rec = product_recursive(&kind, &x, &y).unwrap();
                assert_eq!(
                    comb,
                    rec,
                    "kind {} on {} ; {}",
                    kind.label(),
                    x.text(&ctx),
                    y.text(&ctx)
                );
            }
        }
    }
}

// Repeated and composite letters force merging of colliding result words;
// a fractional weight exercises the contraction bookkeeping.
#[test]
fn engines_agree_with_collisions_and_fractional_weight() {
    for mode in [Mode::Commutative, Mode::Noncommutative] {
        let ctx = Context::new_with_mode(mode, &["a", "b"]);
        let words = rbshuffle::sampling::random_words(&ctx, 60, 0, 4, 2024);
        for kind in [
            ProductKind::Quasi(frac(-2, 3)),
            ProductKind::Shuffle,
            ProductKind::RightShift,
            ProductKind::LeftShift,
        ] {
            for chunk in words.chunks_exact(2) {
                if chunk[0].len() + chunk[1].len() > 6 {
                    continue;
                }
                let x = TensorElement::word(mode, chunk[0].clone());
                let y = TensorElement::word(mode, chunk[1].clone());
                let comb = product_combinatorial(&kind, &x, &y).unwrap();
                let rec = product_recursive(&kind, &x, &y).unwrap();
                assert_eq!(comb, rec, "kind {} collision family", kind.label());
            }
        }
    }
}
