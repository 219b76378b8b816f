//! Exact structure-constant models of 3-Hom-Lie, 3-Hom-pre-Lie and
//! 3-Hom-L-dendriform algebras, their representations, induced structures,
//! Nijenhuis deformations, and product/complex structures.

pub mod algebras;
pub mod error;
pub mod linalg;
pub mod nijenhuis;
pub mod operators;
pub mod report;
pub mod representations;
pub mod scalar;
pub mod structures;
pub mod tensor;

pub use algebras::{HomLie, TernaryAlgebra, ThreeHomLDend, ThreeHomLie, ThreeHomPreLie};
pub use error::{Error, Result};
pub use linalg::{LinearMap, Matrix, Vector};
pub use nijenhuis::{DeformationFamily, NijenhuisCandidate};
pub use operators::{LieOOperator, PreLieOOperator, SymplecticForm};
pub use report::{Checker, Report, Status, Violation};
pub use representations::{LieRep, PreLieRep};
pub use scalar::{GaussRational, Rational, Scalar};
pub use structures::{ComplexCandidate, Decomposition, ProductCandidate, SpecialType};
pub use tensor::{tri_twist, BiTensor, BilinearForm, RepTensor, TriTensor};

pub type RealLie = ThreeHomLie<Rational>;
pub type RealPreLie = ThreeHomPreLie<Rational>;
pub type RealLDend = ThreeHomLDend<Rational>;
pub type ComplexLie = ThreeHomLie<GaussRational>;
pub type ComplexPreLie = ThreeHomPreLie<GaussRational>;
pub type ComplexLDend = ThreeHomLDend<GaussRational>;
pub type RealMatrix = Matrix<Rational>;
pub type ComplexMatrix = Matrix<GaussRational>;
