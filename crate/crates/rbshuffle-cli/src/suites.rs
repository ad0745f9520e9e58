//! Named check suites behind `check`: each one drives a family of operator,
//! product, or coalgebra identities and streams `CheckReport`s.
//!
//! Every suite has a canonical operator/product matrix chosen so that the
//! default configuration passes end to end; passing `--product` explicitly
//! replaces the ambient product in the operator suites (rb, nijenhuis, td,
//! average), which is also how the expected-failure combinations are
//! reproduced, e.g. `check --suite rb --product rsh --theta 1`.

use rbshuffle::scalar::rat;
use rbshuffle::{
    check_associativity, check_coassoc, check_commutativity, check_counit_laws,
    check_delta_morphism, check_functor, check_identity, check_operator_compat, check_tridend_axioms,
    check_tridend_axioms_with, double_product, functor_lift_map, omega, omega_decompose,
    partition_coefficient, primitives_at_bound, sampling, spitzer_verify, square_basis_samples,
    Ambient, CheckReport, Context, Counterexample, DeltaCase, DoubleFlavor, Generator,
    IdentityKind, KernelError, Mode, OperatorDescriptor, ProductKind, SamplePolicy,
    SquareCheckAlgebra, TensorCheckAlgebra, TensorElement, TensorWord, TridendOp,
    TridendStructure, Weight,
};

use crate::config::SessionConfig;
use crate::eval::EvalError;

pub const SUITE_NAMES: [&str; 10] = [
    "rb",
    "nijenhuis",
    "td",
    "average",
    "tridend",
    "omega",
    "spitzer",
    "bialg1",
    "bialg2",
    "differential",
];

pub fn run_suite(name: &str, cfg: &SessionConfig) -> Result<Vec<CheckReport>, EvalError> {
    let reports = match name {
        "rb" => suite_rb(cfg)?,
        "nijenhuis" => suite_nijenhuis(cfg)?,
        "td" => suite_td(cfg)?,
        "average" => suite_average(cfg)?,
        "tridend" => suite_tridend(cfg)?,
        "omega" => suite_omega(cfg)?,
        "spitzer" => suite_spitzer(cfg)?,
        "bialg1" => suite_bialg1(cfg)?,
        "bialg2" => suite_bialg2(cfg)?,
        "differential" => suite_differential(cfg)?,
        "all" => {
            let mut all = Vec::new();
            for n in SUITE_NAMES {
                all.extend(run_suite(n, cfg)?);
            }
            all
        }
        other => {
            return Err(EvalError::usage(format!(
                "unknown suite `{other}`; expected one of {} or all",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    Ok(reports)
}

pub fn render_report_text(r: &CheckReport) -> String {
    let status = if r.pass { "[PASS]" } else { "[FAIL]" };
    let mut out = format!(
        "{status} identity={} operator={} ambient={} samples={}",
        r.identity, r.operator, r.ambient, r.samples
    );
    if let Some(ce) = &r.counterexample {
        out.push_str(&format!("\n  inputs: {}", ce.inputs.join(" ; ")));
        out.push_str(&format!("\n  lhs: {}", ce.lhs));
        out.push_str(&format!("\n  rhs: {}", ce.rhs));
    }
    out
}

fn op_row(
    ctx: &Context,
    ambient: Ambient,
    op: OperatorDescriptor,
    id: IdentityKind,
    policy: &SamplePolicy,
) -> Result<CheckReport, KernelError> {
    let mut alg = TensorCheckAlgebra::new(ctx, ambient, op);
    let pairs = alg.sample_pairs(policy);
    check_identity(&id, ctx, &mut alg, &pairs)
}

fn suite_rb(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let ctx = cfg.context()?;
    let policy = cfg.policy();
    let theta = cfg.theta.clone();
    let mut out = Vec::new();
    match cfg.override_kind() {
        Some(kind) => out.push(op_row(
            &ctx,
            Ambient::extended(ctx.mode(), kind),
            OperatorDescriptor::prepend_unit(),
            IdentityKind::RotaBaxter(Weight::Scalar(theta)),
            &policy,
        )?),
        None => {
            out.push(op_row(
                &ctx,
                Ambient::extended(ctx.mode(), ProductKind::Quasi(theta.clone())),
                OperatorDescriptor::prepend_unit(),
                IdentityKind::RotaBaxter(Weight::Scalar(theta)),
                &policy,
            )?);
            let names = cfg.names();
            if let Some(first) = names.first() {
                out.push(op_row(
                    &ctx,
                    Ambient::plain(ctx.mode(), ProductKind::Shuffle),
                    OperatorDescriptor::prepend_letter(&ctx, first)?,
                    IdentityKind::RotaBaxter(Weight::Scalar(rat(0))),
                    &policy,
                )?);
            }
        }
    }
    Ok(out)
}

fn square_pairs(ctx: &Context) -> Vec<(rbshuffle::TwoLegElement, rbshuffle::TwoLegElement)> {
    let samples = square_basis_samples(ctx);
    let mut pairs = Vec::new();
    for x in &samples {
        for y in &samples {
            pairs.push((x.clone(), y.clone()));
        }
    }
    pairs
}

fn suite_nijenhuis(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let ctx = cfg.context()?;
    let policy = cfg.policy();
    let mut out = Vec::new();
    if let Some(kind) = cfg.override_kind() {
        out.push(op_row(
            &ctx,
            Ambient::plain(ctx.mode(), kind),
            OperatorDescriptor::prepend_unit(),
            IdentityKind::Nijenhuis,
            &policy,
        )?);
        return Ok(out);
    }
    // prepend-unit is Nijenhuis for the right shift on both modules, and for
    // the left shift on the plain module (the extended left shift is TD)
    out.push(op_row(
        &ctx,
        Ambient::extended(ctx.mode(), ProductKind::RightShift),
        OperatorDescriptor::prepend_unit(),
        IdentityKind::Nijenhuis,
        &policy,
    )?);
    out.push(op_row(
        &ctx,
        Ambient::plain(ctx.mode(), ProductKind::LeftShift),
        OperatorDescriptor::prepend_unit(),
        IdentityKind::Nijenhuis,
        &policy,
    )?);
    // the left-shift row again over a noncommutative base
    let names = cfg.names();
    let nc = Context::noncommutative(&names);
    out.push(op_row(
        &nc,
        Ambient::plain(Mode::Noncommutative, ProductKind::LeftShift),
        OperatorDescriptor::prepend_unit(),
        IdentityKind::Nijenhuis,
        &policy,
    )?);
    // the twisted square with the prepend-unit operator on the first leg
    let sq_ctx = if ctx.mode() == Mode::Commutative { ctx } else { Context::commutative(&names) };
    let mut alg = SquareCheckAlgebra::new(&sq_ctx);
    out.push(check_identity(
        &IdentityKind::Nijenhuis,
        &sq_ctx,
        &mut alg,
        &square_pairs(&sq_ctx),
    )?);
    Ok(out)
}

fn suite_td(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let ctx = cfg.context()?;
    let policy = cfg.policy();
    let mut out = Vec::new();
    if let Some(kind) = cfg.override_kind() {
        out.push(op_row(
            &ctx,
            Ambient::extended(ctx.mode(), kind),
            OperatorDescriptor::prepend_unit(),
            IdentityKind::Td,
            &policy,
        )?);
        return Ok(out);
    }
    out.push(op_row(
        &ctx,
        Ambient::extended(ctx.mode(), ProductKind::LeftShift),
        OperatorDescriptor::prepend_unit(),
        IdentityKind::Td,
        &policy,
    )?);
    out.push(op_row(
        &ctx,
        Ambient::extended(ctx.mode(), ProductKind::RightShift),
        OperatorDescriptor::append_unit(),
        IdentityKind::Td,
        &policy,
    )?);
    Ok(out)
}

fn suite_average(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let ctx = cfg.context()?;
    let policy = cfg.policy();
    let kind = cfg.override_kind().unwrap_or(ProductKind::LeftShift);
    Ok(vec![op_row(
        &ctx,
        Ambient::plain(ctx.mode(), kind),
        OperatorDescriptor::prepend_unit(),
        IdentityKind::Average,
        &policy,
    )?])
}

fn suite_tridend(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let names = cfg.names();
    let ctx = Context::commutative(&names);
    let policy = SamplePolicy {
        exhaustive_len: 2,
        random_len: cfg.max_len.min(3),
        random_cases: 60,
        seed: cfg.seed,
    };
    let mut out = Vec::new();

    let mut shifted = TridendStructure::plus_lsh(ctx.mode());
    out.push(check_tridend_axioms(&mut shifted, &ctx, &policy)?);
    let mut reduced = TridendStructure::qone(ctx.mode());
    out.push(check_tridend_axioms(&mut reduced, &ctx, &policy)?);

    // star identifications: the sum of the three operations recovers the
    // operator double product on shifted words and the weight-one
    // quasi-shuffle on reduced words
    let (_, pairs) = rbshuffle::dendriform::carrier_samples(&shifted, &ctx, &policy);
    let mut alg = TensorCheckAlgebra::new(
        &ctx,
        Ambient::extended(ctx.mode(), ProductKind::LeftShift),
        OperatorDescriptor::prepend_unit(),
    );
    let mut samples = 0;
    let mut star_row = None;
    for (x, y) in &pairs {
        samples += 1;
        let star = shifted.apply(TridendOp::Star, x, y)?;
        let dp = double_product(&DoubleFlavor::StarP, &mut alg, x, y)?;
        if star != dp {
            star_row = Some(CheckReport::failed(
                "star=star_P",
                "plus_lsh",
                "lsh+",
                samples,
                Counterexample {
                    inputs: vec![x.text(&ctx), y.text(&ctx)],
                    lhs: star.text(&ctx),
                    rhs: dp.text(&ctx),
                },
            ));
            break;
        }
    }
    out.push(star_row.unwrap_or_else(|| CheckReport::passed("star=star_P", "plus_lsh", "lsh+", samples)));

    let (_, pairs) = rbshuffle::dendriform::carrier_samples(&reduced, &ctx, &policy);
    let mut samples = 0;
    let mut star_row = None;
    for (x, y) in &pairs {
        samples += 1;
        let star = reduced.apply(TridendOp::Star, x, y)?;
        let qsh = rbshuffle::product(&ProductKind::Quasi(rat(1)), x, y)?;
        if star != qsh {
            star_row = Some(CheckReport::failed(
                "star=qsh(1)",
                "qone",
                "qsh(1)",
                samples,
                Counterexample {
                    inputs: vec![x.text(&ctx), y.text(&ctx)],
                    lhs: star.text(&ctx),
                    rhs: qsh.text(&ctx),
                },
            ));
            break;
        }
    }
    out.push(star_row.unwrap_or_else(|| CheckReport::passed("star=qsh(1)", "qone", "qsh(1)", samples)));

    // negative control: flipping the sign of the dot operation breaks the
    // axioms that route a product through star
    let (triples, comm_pairs) = rbshuffle::dendriform::carrier_samples(&shifted, &ctx, &policy);
    let mut flipped = TridendStructure::plus_lsh(ctx.mode());
    out.push(
        check_tridend_axioms_with(
            "tridend",
            "plus_lsh",
            "lsh+ (dot negated)",
            &ctx,
            |op, x, y| {
                let r = flipped.apply(op, x, y)?;
                Ok(if op == TridendOp::Dot { r.neg() } else { r })
            },
            &triples,
            Some(&comm_pairs),
        )?
        .expect_failure(),
    );
    Ok(out)
}

fn suite_omega(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let names = cfg.names();
    let ctx = Context::commutative(&names);
    let mode = ctx.mode();
    let mut out = Vec::new();

    let mut src = TridendStructure::qone(mode);
    let mut dst = TridendStructure::plus_lsh(mode);
    let policy = SamplePolicy {
        exhaustive_len: 2,
        random_len: cfg.max_len.min(3),
        random_cases: 60,
        seed: cfg.seed,
    };
    let (_, pairs) = rbshuffle::dendriform::carrier_samples(&src, &ctx, &policy);
    for (op, label) in [
        (TridendOp::Prec, "omega(prec)"),
        (TridendOp::Succ, "omega(succ)"),
        (TridendOp::Dot, "omega(dot)"),
    ] {
        let mut samples = 0;
        let mut row = None;
        for (x, y) in &pairs {
            samples += 1;
            let through = omega(&src.apply(op, x, y)?)?;
            let direct = dst.apply(op, &omega(x)?, &omega(y)?)?;
            if through != direct {
                row = Some(CheckReport::failed(
                    label,
                    "Omega",
                    "qone->lsh+",
                    samples,
                    Counterexample {
                        inputs: vec![x.text(&ctx), y.text(&ctx)],
                        lhs: through.text(&ctx),
                        rhs: direct.text(&ctx),
                    },
                ));
                break;
            }
        }
        out.push(row.unwrap_or_else(|| CheckReport::passed(label, "Omega", "qone->lsh+", samples)));
    }

    // factoring a basis word into prec/dot applications and evaluating the
    // expression on the reduced carrier returns the word
    let letters: Vec<_> = sampling::monomials_up_to(&ctx, 2)
        .into_iter()
        .filter(|m| !m.is_unit())
        .collect();
    let words = sampling::words_graded(&letters, 1, cfg.max_len.min(3), 4);
    let mut eval_ctx = TridendStructure::qone(mode);
    let mut samples = 0;
    let mut row = None;
    for w in &words {
        samples += 1;
        let expr = omega_decompose(mode, w)?;
        let back = expr.evaluate(&mut eval_ctx)?;
        let expect = TensorElement::word(mode, w.clone());
        if back != expect {
            row = Some(CheckReport::failed(
                "decompose_round_trip",
                "Omega",
                "qone",
                samples,
                Counterexample {
                    inputs: vec![w.text(&ctx)],
                    lhs: back.text(&ctx),
                    rhs: expect.text(&ctx),
                },
            ));
            break;
        }
    }
    out.push(row.unwrap_or_else(|| CheckReport::passed("decompose_round_trip", "Omega", "qone", samples)));
    Ok(out)
}

fn suite_spitzer(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let names = cfg.names();
    let ctx = Context::commutative(&names);
    let first = names.first().copied().unwrap_or("a");
    let a = TensorElement::word(
        ctx.mode(),
        TensorWord::single(ctx.monomial(first)?),
    );
    let mut out = vec![spitzer_verify(&ctx, &cfg.theta, &a, cfg.order)?];
    let nested = rbshuffle::nested_coefficients(&cfg.theta, &a, cfg.order.min(3))?;
    for (m, b) in nested.iter().enumerate() {
        let closed = partition_coefficient(&cfg.theta, &a, m + 1)?;
        let identity = format!("spitzer_partition({})", m + 1);
        out.push(if closed == *b {
            CheckReport::passed(&identity, "P_A", "qsh+", 1)
        } else {
            CheckReport::failed(
                &identity,
                "P_A",
                "qsh+",
                1,
                Counterexample {
                    inputs: vec![a.text(&ctx)],
                    lhs: closed.text(&ctx),
                    rhs: b.text(&ctx),
                },
            )
        });
    }
    Ok(out)
}

fn case1_words(ctx: &Context, max_len: usize) -> Vec<TensorWord> {
    let mut letters = vec![rbshuffle::BaseMonomial::unit(ctx.mode())];
    letters.extend(sampling::monomials_up_to(ctx, 2));
    sampling::words_graded(&letters, 1, max_len.min(3), 3)
}

fn word_pairs_bounded(words: &[TensorWord], total: usize, mode: Mode) -> Vec<(TensorElement, TensorElement)> {
    let mut pairs = Vec::new();
    for u in words {
        for v in words {
            if u.len() + v.len() <= total {
                pairs.push((TensorElement::word(mode, u.clone()), TensorElement::word(mode, v.clone())));
            }
        }
    }
    pairs
}

fn suite_bialg1(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let fixtures: [(&str, Vec<Generator>); 3] = [
        ("prim", vec![Generator::new("h").primitive()]),
        ("grp", vec![Generator::new("g").grouplike()]),
        (
            "mixed",
            vec![Generator::new("h").primitive(), Generator::new("g").grouplike()],
        ),
    ];
    let theta = cfg.theta.clone();
    let mut out = Vec::new();
    for (_, gens) in fixtures {
        let ctx = Context::new(Mode::Commutative, gens)?;
        let words = case1_words(&ctx, cfg.max_len);
        out.push(check_coassoc(&ctx, DeltaCase::One, &words)?);
        for kind in [ProductKind::Quasi(theta.clone()), ProductKind::LeftShift] {
            out.push(check_counit_laws(&ctx, DeltaCase::One, &kind, &words)?);
        }
        let pairs = word_pairs_bounded(&words, 4, ctx.mode());
        for kind in [
            ProductKind::Quasi(theta.clone()),
            ProductKind::RightShift,
            ProductKind::LeftShift,
            ProductKind::Shuffle,
        ] {
            out.push(check_delta_morphism(&ctx, DeltaCase::One, &kind, &pairs)?);
        }
        for kind in [ProductKind::Quasi(theta.clone()), ProductKind::RightShift] {
            out.push(check_operator_compat(&ctx, DeltaCase::One, &kind, &words)?);
        }
    }
    // naturality of the coproduct under a rule-preserving generator map
    let src = Context::new(Mode::Commutative, vec![Generator::new("h").primitive()])?;
    let dst = Context::new(
        Mode::Commutative,
        vec![Generator::new("h").primitive(), Generator::new("g").grouplike()],
    )?;
    let map = functor_lift_map(&src, &dst, &[("h", "h")])?;
    let words = case1_words(&src, cfg.max_len);
    out.push(check_functor(&src, &dst, &map, &ProductKind::Quasi(theta), &words)?);
    Ok(out)
}

fn suite_bialg2(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let names = cfg.names();
    let ctx = Context::commutative(&names);
    let mut out = Vec::new();

    let pairs = square_pairs(&ctx);
    let mut triples = Vec::new();
    let samples = square_basis_samples(&ctx);
    for x in &samples {
        for y in &samples {
            for z in &samples {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let mut alg = SquareCheckAlgebra::new(&ctx);
    out.push(check_associativity(&mut alg, &triples)?);
    out.push(check_commutativity(&mut alg, &pairs)?);
    out.push(check_identity(&IdentityKind::Nijenhuis, &ctx, &mut alg, &pairs)?);

    let mut letters = vec![rbshuffle::BaseMonomial::unit(ctx.mode())];
    letters.extend(sampling::monomials_up_to(&ctx, 2));
    let words = sampling::words_graded(&letters, 1, cfg.max_len.min(3), 2);
    out.push(check_coassoc(&ctx, DeltaCase::Two, &words)?);
    out.push(check_counit_laws(&ctx, DeltaCase::Two, &ProductKind::RightShift, &words)?);
    let word_pairs = word_pairs_bounded(&words, 4, ctx.mode());
    out.push(check_delta_morphism(&ctx, DeltaCase::Two, &ProductKind::RightShift, &word_pairs)?);
    out.push(check_operator_compat(&ctx, DeltaCase::Two, &ProductKind::RightShift, &words)?);

    // at bound D the primitive space is spanned by the single non-unit words
    let bound = 2;
    let basis = primitives_at_bound(&ctx, DeltaCase::Two, bound)?;
    let expected: Vec<TensorElement> = sampling::monomials_up_to(&ctx, bound)
        .into_iter()
        .map(|m| TensorElement::word(ctx.mode(), TensorWord::single(m)))
        .collect();
    let pass = basis.len() == expected.len() && expected.iter().all(|e| basis.contains(e));
    out.push(if pass {
        CheckReport::passed("primitive_basis(case2)", "delta", "comm", basis.len() as u64)
    } else {
        CheckReport::failed(
            "primitive_basis(case2)",
            "delta",
            "comm",
            basis.len() as u64,
            Counterexample {
                inputs: vec![format!("bound {bound}")],
                lhs: basis.iter().map(|e| e.text(&ctx)).collect::<Vec<_>>().join(", "),
                rhs: expected.iter().map(|e| e.text(&ctx)).collect::<Vec<_>>().join(", "),
            },
        )
    });
    Ok(out)
}

fn suite_differential(cfg: &SessionConfig) -> Result<Vec<CheckReport>, KernelError> {
    let names = cfg.names();
    let contexts = [Context::commutative(&names), Context::noncommutative(&names)];
    let mut out = Vec::new();
    for ctx in &contexts {
        let mut words = sampling::exhaustive_words(ctx, 1, 3);
        words.extend(sampling::random_words(ctx, 24, 1, cfg.max_len.max(3), cfg.seed));
        for kind in [
            ProductKind::Shuffle,
            ProductKind::Quasi(cfg.theta.clone()),
            ProductKind::RightShift,
            ProductKind::LeftShift,
        ] {
            let mut samples = 0;
            let mut row = None;
            'outer: for u in &words {
                for v in &words {
                    if u.len() + v.len() > 6 {
                        continue;
                    }
                    samples += 1;
                    let x = TensorElement::word(ctx.mode(), u.clone());
                    let y = TensorElement::word(ctx.mode(), v.clone());
                    let comb = rbshuffle::product_combinatorial(&kind, &x, &y)?;
                    let rec = rbshuffle::product_recursive(&kind, &x, &y)?;
                    if comb != rec {
                        row = Some(CheckReport::failed(
                            &format!("differential({})", kind.label()),
                            "engines",
                            ctx.mode().label(),
                            samples,
                            Counterexample {
                                inputs: vec![u.text(ctx), v.text(ctx)],
                                lhs: comb.text(ctx),
                                rhs: rec.text(ctx),
                            },
                        ));
                        break 'outer;
                    }
                }
            }
            out.push(row.unwrap_or_else(|| {
                CheckReport::passed(
                    &format!("differential({})", kind.label()),
                    "engines",
                    ctx.mode().label(),
                    samples,
                )
            }));
        }
    }
    Ok(out)
}
