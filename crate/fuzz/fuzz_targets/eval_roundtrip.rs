#![no_main]
use libfuzzer_sys::fuzz_target;

use rbshuffle_cli::config::{parse_gens, OutputFormat, SessionConfig};
use rbshuffle_cli::dsl::{parse_expr, Expr};
use rbshuffle_cli::eval::{render_value, Evaluator};
use rbshuffle::scalar::rat;
use rbshuffle::{DeltaCase, Mode};

// Bound the work a parsed expression may demand before evaluating it: deep
// towers, long words and large exponents are legitimate parses but blow up
// exact arithmetic, which libFuzzer would misread as a hang.
fn weight(e: &Expr) -> usize {
    match e {
        Expr::Rational(_) | Expr::EmptyWord | Expr::Symbol(_) => 1,
        Expr::Word(slots) => 1 + slots.iter().map(weight).sum::<usize>(),
        Expr::WordLiteral(letters) => 1 + letters.len(),
        Expr::Apply(_, args) => 4 + args.iter().map(weight).sum::<usize>(),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => 1 + weight(a) + weight(b),
        Expr::Neg(a) => 1 + weight(a),
        Expr::Pow(a, k) => {
            if *k > 6 {
                return usize::MAX / 2;
            }
            (1 + weight(a)).saturating_mul(*k as usize + 1)
        }
    }
}

// Shuffle counts grow exponentially in the total letter count, so bound it
// independently of the node weight.
fn letters(e: &Expr) -> usize {
    match e {
        Expr::Rational(_) | Expr::EmptyWord | Expr::Symbol(_) => 0,
        Expr::Word(slots) => slots.len() + slots.iter().map(letters).sum::<usize>(),
        Expr::WordLiteral(ls) => ls.len(),
        Expr::Apply(_, args) => args.iter().map(letters).sum(),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => letters(a) + letters(b),
        Expr::Neg(a) => letters(a),
        Expr::Pow(a, k) => letters(a).saturating_mul(*k as usize),
    }
}

fuzz_target!(|data: &[u8]| {
    if data.len() > 160 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(ast) = parse_expr(s) else { return };
    if weight(&ast) > 40 || letters(&ast) > 12 {
        return;
    }
    let cfg = SessionConfig {
        mode: Mode::Commutative,
        gens: parse_gens("a,b").unwrap(),
        product: None,
        theta: rat(1),
        case: DeltaCase::Two,
        max_len: 3,
        order: 3,
        seed: 1,
        format: OutputFormat::Text,
    };
    let ctx = cfg.context().unwrap();
    let Ok(value) = Evaluator::new(&ctx, &cfg).eval(&ast) else { return };
    let rendered = render_value(&ctx, &value, OutputFormat::Text);
    if rendered.contains("(x)") {
        // two-leg values round-trip through json, not through the expression
        // grammar
        return;
    }
    let back = parse_expr(&rendered).expect("rendered value reparses");
    let revalue = Evaluator::new(&ctx, &cfg)
        .eval(&back)
        .expect("rendered value reevaluates");
    let rerendered = render_value(&ctx, &revalue, OutputFormat::Text);
    assert_eq!(rendered, rerendered, "canonical text is a fixpoint");
});
