//! End-to-end tour of the kernel: build a context, multiply words, check an
//! operator identity, expand a Spitzer series, decompose through the signed
//! embedding, and solve for primitives.

use rbshuffle::{
    check_identity, delta_case1, nested_coefficients, omega_decompose, primitives_at_bound,
    product, Ambient, Context, DeltaCase, Generator, IdentityKind, Mode, OperatorDescriptor,
    ProductKind, SamplePolicy, TensorCheckAlgebra, TensorElement, TensorWord, Weight,
};
use rbshuffle::scalar::rat;

fn main() -> Result<(), rbshuffle::KernelError> {
    let ctx = Context::commutative(&["a", "b"]);
    let x = TensorElement::word(ctx.mode(), TensorWord::from_names(&ctx, &["a"])?);
    let y = TensorElement::word(ctx.mode(), TensorWord::from_names(&ctx, &["b"])?);

    let lsh = product(&ProductKind::LeftShift, &x, &y)?;
    println!("lsh([a];[b]) = {}", lsh.text(&ctx));

    let mut alg = TensorCheckAlgebra::new(
        &ctx,
        Ambient::extended(ctx.mode(), ProductKind::Quasi(rat(2))),
        OperatorDescriptor::prepend_unit(),
    );
    let pairs = alg.sample_pairs(&SamplePolicy::shallow());
    let report = check_identity(
        &IdentityKind::RotaBaxter(Weight::Scalar(rat(2))),
        &ctx,
        &mut alg,
        &pairs,
    )?;
    println!("{}", report.to_json());
    assert!(report.pass);

    let coeffs = nested_coefficients(&rat(1), &x, 3)?;
    println!("spitzer b_3 = {}", coeffs[2].text(&ctx));

    let w = TensorWord::from_names(&ctx, &["a*b", "a"])?;
    let expr = omega_decompose(ctx.mode(), &w)?;
    println!("decompose (a*b|a) -> {}", expr.render(&ctx));

    let hopf = Context::new(
        Mode::Commutative,
        vec![Generator::new("h").primitive(), Generator::new("g").grouplike()],
    )?;
    let d = delta_case1(&hopf, &TensorElement::word(hopf.mode(), TensorWord::from_names(&hopf, &["h"])?))?;
    println!("delta((h)) = {}", d.text(&hopf));

    for p in primitives_at_bound(&hopf, DeltaCase::One, 2)? {
        println!("primitive: {}", p.text(&hopf));
    }
    Ok(())
}
