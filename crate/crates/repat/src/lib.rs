//! Repeating-pattern subsequence toolkit.
//!
//! A library for patterns that prescribe the relative order of every `r`
//! consecutive elements of a sequence, repeating with period `k`. It
//! provides:
//!
//! - the pattern DSL and the `follows` relation ([`pattern`]);
//! - exact longest-subsequence engines, including constrained and
//!   interval-restricted variants and a subset-enumeration oracle
//!   ([`subseq`]);
//! - bounded combinatoriality checking, seed-permutation search, and an
//!   empirical growth probe ([`analysis`]);
//! - the renewal decomposition of longest-subsequence lengths at
//!   regeneration events, with per-sample structural identity checks
//!   ([`decomp`]);
//! - seeded sampling, exact small-`n` enumeration, and central limit
//!   theorem estimation ([`mc`], [`sample`], [`stats`]).
//!
//! Data-parallel inner loops (trial batches, block scans, catalog sweeps)
//! run on rayon when the default `parallel` feature is enabled and fall
//! back to sequential execution without it. Results are identical either
//! way: all randomness is derived from per-item streams and reductions
//! are performed in a fixed order.

pub mod analysis;
pub mod decomp;
pub mod error;
pub mod exec;
pub mod mc;
pub mod pattern;
pub mod perms;
pub mod sample;
pub mod stats;
pub mod subseq;

pub use analysis::{check_combinatorial, find_tau_witness, CombVerdict, TauWitness};
pub use decomp::{
    gluing_check, lemma2_terms, make_block_config, sample_with_planted_events, scan_events,
    segment_lengths, BlockConfig, CellMode, DecompositionTerms, EventScan, SegmentStats,
};
pub use error::{AnalysisError, DecompError, EngineError, PatternError, StatsError};
pub use mc::{estimate_clt, exact_distribution, ks_normality, run_trials, SampleModel, TrialBatch};
pub use pattern::{window_perm_of, Pattern, RealSeq, WindowPerm};
pub use sample::{sample_permutation, sample_uniform_seq};
pub use subseq::{
    longest, longest_bruteforce, longest_constrained, longest_on_interval, IndexConstraint,
    SubseqResult,
};
