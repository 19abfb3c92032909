//! Fixtures shared by the benchmarks.

use esakia::constructions::{diamond, rn_downset, x_n_space, RNElement};
use esakia::{FinitePoset, HeytingAlgebra, VarietyPresentation};

/// Algebra of upsets of `p`.
pub fn upsets(p: &FinitePoset) -> HeytingAlgebra {
    HeytingAlgebra::from_upsets(p).expect("benchmark fixtures are small")
}

/// A root under an `n`-antichain: 2^n + 1 elements.
pub fn fan(n: usize) -> HeytingAlgebra {
    upsets(&FinitePoset::tower(&[FinitePoset::chain(1), FinitePoset::antichain(n)], false))
}

/// Downset of `w_k` in the Rieger-Nishimura lattice.
pub fn rn_w(k: usize) -> HeytingAlgebra {
    rn_downset(RNElement::W(k)).expect("index within range")
}

/// Varieties with increasingly many FSI members.
pub fn varieties() -> Vec<(&'static str, VarietyPresentation)> {
    let v = |a| VarietyPresentation::single(a).expect("small generator");
    vec![
        ("diamond+2", v(diamond().alg_sum(&HeytingAlgebra::bool2()))),
        ("chain4", v(HeytingAlgebra::chain(4))),
        ("X2", v(upsets(&x_n_space(2)))),
        ("fan3", v(fan(3))),
    ]
}
