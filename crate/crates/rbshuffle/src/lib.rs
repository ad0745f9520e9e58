//! Exact-arithmetic kernel for generalized shuffle products on tensor
//! modules, the shift operators that realize Rota-Baxter, Nijenhuis and
//! TD identities on them, tridendriform structures, and the associated
//! word-coalgebra coproducts.

pub mod base;
pub mod bialgebra;
pub mod dendriform;
pub mod errors;
pub mod linalg;
pub mod operator;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod shuffle;
pub mod spitzer;
pub mod tensor;

pub use base::{BaseElement, BaseMonomial, Context, CoproductRule, GenId, Generator, Mode, TwoLegBase};
pub use bialgebra::{
    amalg_product, bracket_star, check_coassoc, check_counit_laws, check_delta_morphism,
    check_functor, check_operator_compat, counit_case1, counit_case2, delta_case1,
    delta_case1_by_extension, delta_case2, functor_lift_map, primitives_at_bound,
    sandwich_apply, square_basis_samples, DeltaCase, GeneratorMap, LegPolicy,
    SquareCheckAlgebra, TwoLegElement,
};
pub use dendriform::{
    check_tridend_axioms, check_tridend_axioms_with, omega, omega_decompose, DecompExpr,
    TridendCarrier, TridendOp, TridendStructure,
};
pub use errors::KernelError;
pub use operator::{
    check_associativity, check_commutativity, check_identity, check_pairs, double_product,
    lift_morphism, shift_apply, Ambient, CheckAlgebra, ConjugateFlavor, DoubleCheckAlgebra,
    DoubleFlavor, IdentityKind, MorphismLift, OperatorDescriptor, OperatorKind,
    TensorCheckAlgebra, Weight,
};
pub use report::{CheckReport, Counterexample};
pub use sampling::SamplePolicy;
pub use scalar::Rational;
pub use shuffle::{
    enumerate_shuffles, mixable_count, product, product_combinatorial, product_plus,
    product_recursive, ProductKind, RecursiveEngine, ShuffleSpec,
};
pub use spitzer::{
    nested_coefficients, partition_coefficient, spitzer_verify, MAX_SPITZER_ORDER,
};
pub use tensor::{grade_decompose, linear_combine, tensor_concat, word_normalize, TensorElement, TensorWord};
