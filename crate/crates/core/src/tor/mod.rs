//! `Tor^A_p(A/I, ℂ)` at finite rank, through the Koszul complex of the
//! variables acting on `A/I`.

mod koszul;
mod table;

pub use koszul::{ChainKey, KoszulComplex, Strand};
pub use table::{
    determinantal_ideal, ft_check, stabilization_report, tor_table, tor_table_with, DeterminantalSpec, FtRow, StabilityCell,
    StabilizationReport, TorOptions, TorRecord, TorTable,
};
