//! Exact computer-algebra kernel for a monoid algebra with rational
//! exponents over a prime field, truncated above total degree 1, together
//! with its polynomial extension and a certificate-producing strong-atom
//! factorization engine.
//!
//! The coefficient ring has no irreducible elements at all (every nonunit
//! has a proper p-th root), yet every nonzero nonunit of the polynomial
//! extension factors into strong atoms, with explicit length bounds. The
//! kernel makes both phenomena executable: exact arithmetic, p-th roots and
//! divisor chains, Hensel lifting, exhaustive bounded certification, and an
//! atomizer that emits verified factorizations.

pub mod atomizer;
pub mod exponent;
pub mod fppoly;
pub mod hensel;
mod linalg;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod ring;
pub mod rpoly;
pub mod scalar;
pub mod subring;

pub use atomizer::{atomize, case1_unit_coeff, case2_pad, case3_mixed, Atomization, AtomizeError, CaseTag};
pub use exponent::Exponent;
pub use fppoly::{FpPoly, FpPolyError};
pub use hensel::{ambient_subring, hensel_split, HenselError};
pub use monomial::Monomial;
pub use oracle::{
    are_associate, certify_strong_atom, certify_strong_atom_via_kill, enumerate_elements,
    find_factorization, Associateness, AtomCertificate, AtomVerdict, OracleError, SearchBudget,
    SearchOutcome, SplitConstraint,
};
pub use parse::{parse_element, parse_rpoly, ParseError};
pub use ring::{NilCertificate, RingElem, RingError};
pub use rpoly::{survive_witness, PolyError, RPoly, SurviveWitness};
pub use scalar::{FieldScalar, NonPrimeModulus, Prime};
pub use subring::{SubringBasis, SubringSpec};
