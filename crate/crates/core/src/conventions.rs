//! Node numbering and orientation conventions used everywhere in this crate.
//!
//! Simple roots are labelled `1..=rank` following Bourbaki. All public APIs,
//! CLI flags and JSON output use these labels; storage is 0-based internally.
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n        α_n short
//! C_n   1 - 2 - ... - (n-1) <= n        α_n long
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                       \
//!                        n
//! E_n   1 - 3 - 4 - 5 - ... - n         (n = 6, 7, 8)
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                  α_1, α_2 long
//! G_2   1 <= 2                          α_1 short, highest root 3α_1 + 2α_2
//! ```
//!
//! The Cartan matrix is oriented as `C[i][j] = <α_j, α_i^∨>`, so column `j`
//! holds the fundamental-weight coordinates of `α_j`, and pairing a weight
//! with a coroot is a plain dot product.
//!
//! Symmetrizers `d_i = (α_i, α_i) / 2` are normalized so that short roots
//! have `d_i = 1`; `d_i C[i][j] = (α_i, α_j)` is then symmetric.
//!
//! Three coordinate systems are kept apart by type: [`Root`](crate::Root) in
//! the simple-root basis, [`Coroot`](crate::Coroot) in the simple-coroot basis,
//! [`Weight`](crate::Weight) in the fundamental-weight basis.
//!
//! A Schubert variety attached to `w ∈ W^P` has dimension `ℓ(w)`; its
//! codimension in `G/P` is `dim G/P - ℓ(w)`.
//!
//! `C_2` is accepted as given and is isomorphic to `B_2` with the two nodes
//! swapped; no relabelling is done.
