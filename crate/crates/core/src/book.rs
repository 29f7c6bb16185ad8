//! Runs the guide's code blocks as documentation tests, one module per
//! chapter so failures point at the right file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scwols.md")]
pub mod scwols {}

#[doc = include_str!("../../../book/src/finite-groups.md")]
pub mod finite_groups {}

#[doc = include_str!("../../../book/src/polygonal-complexes.md")]
pub mod polygonal_complexes {}

#[doc = include_str!("../../../book/src/complexes-of-groups.md")]
pub mod complexes_of_groups {}

#[doc = include_str!("../../../book/src/coverings.md")]
pub mod coverings {}

#[doc = include_str!("../../../book/src/presentations.md")]
pub mod presentations {}
