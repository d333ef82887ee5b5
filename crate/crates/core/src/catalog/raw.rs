//! Static shape of the transcribed tables in `data.rs`.

/// Correction recorded in the typo ledger.
#[derive(Debug, Clone, Copy)]
pub(crate) enum RawFix {
    /// The printed equations of motion stand; the driving-system map is replaced.
    Map { alpha: &'static [&'static str], beta: &'static [&'static str], gamma: &'static [&'static str], note: &'static str },
    /// No map reproduces the printed right-hand side; the right-hand side is replaced.
    Rhs { rhs: [&'static str; 2], note: &'static str },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RawModel {
    pub code: &'static str,
    pub case_ii: bool,
    pub variant: &'static str,
    pub first: usize,
    pub second: usize,
    pub order: usize,
    pub params: &'static [&'static str],
    pub rhs: [&'static str; 2],
    pub alpha: &'static [&'static str],
    pub beta: &'static [&'static str],
    pub gamma: &'static [&'static str],
    pub polynomial: &'static str,
    pub duplicate_of: Option<&'static str>,
    pub fix: Option<RawFix>,
}
