//! Exact computation of multivariable Lefschetz zeta functions for
//! mapping tori of surface homeomorphisms presented as free-group
//! endomorphisms, with section-class enumeration, stretch-factor
//! certificates, and an exact model of the Arnoux-Yoccoz genus-3
//! translation surface.
//!
//! The crate is organized bottom-up:
//!
//! - [`intlinalg`]: integer matrices, Smith normal form with unimodular
//!   certificates, cokernel invariants;
//! - [`unipoly`]: integer polynomials, exact division, Sturm-sequence
//!   root isolation;
//! - [`laurent`]: sparse multivariate Laurent polynomials (group rings of
//!   free abelian groups), determinants, specialization, symmetry;
//! - [`words`]: free-group words, endomorphisms, Fox Jacobians;
//! - [`pipeline`]: endomorphism -> zeta function -> section classes,
//!   Euler characteristics, genus searches;
//! - [`surface`]: the slitted polygon and its affine pseudo-Anosov map
//!   over Q(alpha).
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability.

pub mod error;
pub mod intlinalg;
pub mod laurent;
pub mod pipeline;
pub mod surface;
pub mod unipoly;
pub mod words;

pub use error::{Error, Result};
pub use intlinalg::{cokernel, normalize_projection, smith_normal_form, IntMatrix};
pub use laurent::{det_ring, ExponentFunctional, LaurentPoly};
pub use pipeline::{
    build_model, genus_search, is_section, min_section_degree, section,
    sections_with_degree, zeta, zeta_of_endomorphism, CohomologyClass, Model,
    SectionClass, ZetaFunction,
};
pub use surface::{apply_h, classify_region, CubicFieldElt, PointAY, RegionId};
pub use unipoly::{divides, largest_real_root, largest_real_root_interval, UniPoly};
pub use words::{FreeEndomorphism, GroupRingMatrix, Word, WordIdentitySet};
