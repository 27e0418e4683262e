//! Construction and structural analysis of protograph-based QC-LDPC codes
//! whose short cycles are chordless.

pub mod bounds;
pub mod chord;
pub mod compact;
pub mod cycles;
pub mod error;
pub mod ets;
pub mod fixtures;
pub mod gf2;
pub mod matrix;
pub mod mindist;
pub mod parity;
pub mod search;
pub mod sidon;
pub mod tanner;
pub mod text;

pub use cycles::{algebraic_girth, cycle_sum, enumerate_walks, CycleWalk, EdgeRef, GirthBound, Segment, Term};
pub use error::{Error, Result};
pub use matrix::{validate, BaseMatrix, ExponentMatrix, ValidationReport, Violation};
pub use parity::{export_alist, import_alist, lift, ParityCheckMatrix};
pub use text::{parse_text, serialize_text};
pub use tanner::{enumerate_cycles, find_8wc, find_cycles_wc, is_chordless, CycleInstance, TannerGraph};
pub use chord::{check_3x3, check_3x4, check_chordfree, column_index_vector, six_entry_vector, ColumnIndexVector, SixEntryVector};
pub use compact::{build_compact, corollary_check, CompactSpec};
pub use bounds::{b_lower_bound, dmin_bound, edge_bound, min_a};
pub use ets::{enumerate_ets, vn_graph, TrappingSetRecord, VnGraph};
pub use mindist::{min_distance, Distance, MinDistance, Strategy};
pub use sidon::is_sidon;
pub use search::{certify, search, Certificate, Criterion, SearchConfig, SearchMode, SearchOutcome};
