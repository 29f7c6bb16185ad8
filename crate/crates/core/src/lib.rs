//! Combinatorial machinery for 2-dimensional complexes of groups.
//!
//! The crate builds polygonal complexes with prescribed vertex links,
//! represents them as small categories without loops (scwols), populates
//! scwols with finite local groups and edge monomorphisms, and verifies
//! coverings of complexes of groups together with their sheet counts and
//! orbifold Euler characteristics. On top of that sits a presentation
//! toolkit: polygon contraction, surface relators, and graph-of-groups
//! colimits.
//!
//! The centerpiece constructions:
//!
//! * [`complexes::build_x`] glues one 2m-gon per edge of a connected
//!   bipartite graph `L` into a complex whose every vertex link is `L`.
//! * [`cog::build_g_p`] and [`cog::build_g_k`] build the polygon-of-groups
//!   and chamber-of-groups whose fundamental groups receive the
//!   fundamental group of that complex.
//! * [`covering::build_phi_gamma`] and [`covering::build_psi_w`] produce
//!   the two explicit coverings (q1*q2 and 2m sheets respectively);
//!   [`covering::CoveringData::verify`] is the independent checker.
//! * [`presentation::presentation_h`] derives the surface-amalgam
//!   presentation by contracting a polygon and eliminating generators.
//!
//! Everything is exact: group tables are finite multiplication tables,
//! Euler characteristics are rationals, and every verification is a full
//! enumeration rather than a spot check.

pub mod cog;
pub mod complexes;
pub mod covering;
pub mod groups;
pub mod presentation;
pub mod scwol;

#[cfg(doctest)]
mod book;
