use super::CorrError;
use crate::partitions::Partition;

/// Splits `Name(args)` (or a bare `Name`) into its pieces.
pub(super) fn parse_call(s: &str) -> Result<(&str, &str), CorrError> {
    let s = s.trim();
    match s.find('(') {
        None => Ok((s, "")),
        Some(open) if s.ends_with(')') => Ok((s[..open].trim(), &s[open + 1..s.len() - 1])),
        Some(_) => Err(CorrError::Parse(s.to_string())),
    }
}

pub(super) fn parse_partition_args(args: &str, whole: &str) -> Result<Partition, CorrError> {
    let bad = || CorrError::Parse(whole.to_string());
    let parts = args
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|_| bad())
}
