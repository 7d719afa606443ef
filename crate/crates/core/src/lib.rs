//! Exact point-count polynomials of elliptic curves over finite-field
//! extensions, together with their combinatorial counterparts.
//!
//! * [`poly`]: exact integer polynomials in `q` and `v`.
//! * [`point_counts`]: `N_k`, `H_k`, `E_k`, `P_{i,k}` by several routes.
//! * [`qt_combinatorics`]: `(q,t)`-Lucas, Fibonacci and wheel spanning-tree
//!   polynomials by direct enumeration.
//! * [`matrix_cheb`]: circulant/tridiagonal determinants and Chebyshev forms.
//! * [`cyclotomic`]: `Cyc_d`, elliptic cyclotomic `ECyc_d` and `WCyc_d`.
//! * [`curve_oracle`]: brute-force curves over `F_{p^k}` as ground truth.
//! * [`verify`]: the cross-identity sweep used by the command line tool.

pub mod curve_oracle;
pub mod cyclotomic;
pub mod error;
pub mod matrix_cheb;
pub mod point_counts;
pub mod poly;
pub mod qt_combinatorics;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{BivarPoly, JsonTerm, UnivarPoly};
