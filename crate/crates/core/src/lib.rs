//! Row and column twisted Reed-Solomon (RCTRS) codes over finite fields:
//! exact field arithmetic and linear algebra, generator matrices for
//! GRS/TRS/CTRS/RCTRS codes, MDS decisions by minors and by closed forms,
//! Schur-square distinguishers, and parameter builders with MDS guarantees.
//!
//! ```
//! use rctrs::field::GaloisField;
//! use rctrs::code::{generator_matrix, CodeSpec};
//! use rctrs::mds::mds_both;
//! use rctrs::schur::schur_square_dim;
//!
//! let f = GaloisField::new(17, 1).unwrap();
//! let alphas = [0, 3, 7, 8, 10, 12, 13].iter().map(|&a| f.from_int(a)).collect();
//! let spec = CodeSpec::rctrs(&f, alphas, 4, 0, 1, f.from_int(1), f.from_int(2), f.from_int(10), f.from_int(4)).unwrap();
//! let g = generator_matrix(&spec).unwrap();
//! assert!(mds_both(&g).unwrap().is_mds);
//! assert_eq!(schur_square_dim(&g.matrix), 8);
//! ```

pub mod code;
pub mod construct;
mod error;
pub mod field;
pub mod linalg;
pub mod mds;
pub mod report;
pub mod repro;
pub mod schur;
pub mod specfile;
pub mod subsets;

pub use error::Error;
