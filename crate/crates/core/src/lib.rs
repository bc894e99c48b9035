pub mod alternating;
pub mod cli;
pub mod completion;
pub mod error;
pub mod finite;
pub mod io;
pub mod matrix;
pub mod ring;
pub mod witt;
pub mod word;

pub use alternating::{
    check_alternating, congruence, pfaffian, psi, random_alternating, AlternatingMatrix,
};
pub use completion::{
    certify_row, krusemeyer_complete, power_first, power_last, skew4, skew4_matrix,
    skew_from_completion, square_witt_rep, tangent_check, verify_certificate, verify_completion,
    CertifiedRow, CompletionResult, Provenance, SkewCompletion,
};
pub use error::{Error, Result};
pub use finite::{
    completable_bfs, enumerate_um, orbit_bfs, same_orbit, skew_completable_search,
    skew_completions, OrbitTable,
};
pub use matrix::Matrix;
pub use ring::{parse_ring, Elem, Ring};
pub use witt::{check_equiv, pad, search_equiv, witt_perp, witt_rep, EquivCertificate, WittRep};
pub use word::{apply_word, ElementaryWord, Side};
