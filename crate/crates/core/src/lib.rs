//! Permutation groups, mod-2 permutation-module hearts and the checks that
//! decide when a hyperelliptic jacobian has only trivial endomorphisms.
//!
//! The crate is layered bottom-up:
//!
//! * [`permgroup`]: permutations, Schreier–Sims stabilizer chains, product
//!   replacement sampling.
//! * [`finitefield`]: `GF(p^r)` arithmetic and projective spaces.
//! * [`groupzoo`]: symmetric, alternating, Mathieu and projective linear groups.
//! * [`modlinalg`]: dense linear algebra over prime fields (bit-packed for `F_2`).
//! * [`polyfp`]: polynomials over prime fields and their factorization.
//! * [`modrep`]: permutation modules, hearts, endomorphism algebras, MeatAxe.
//! * [`auditor`]: the fact table, unboundedness rules and audit reports.
//! * [`galoisprobe`]: integer polynomials and Frobenius cycle-type probes.

pub mod auditor;
pub mod finitefield;
pub mod galoisprobe;
pub mod groupzoo;
pub mod modlinalg;
pub mod modrep;
pub mod permgroup;
pub mod polyfp;
pub mod rng;

pub use auditor::{audit, AuditReport, Verdict};
pub use groupzoo::GroupId;
pub use modlinalg::{ModMatrix, Subspace};
pub use modrep::GModuleRep;
pub use permgroup::{CycleType, PermGroup, Permutation};
