use gldim_core::Partition;

use crate::error::{CliError, Result};

/// One row per orbit: `n,l,solution_index,orbit_index,partition,rep_dim`.
pub fn solutions_csv(n: u32, l: u32, solutions: &[Vec<Partition>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::invalid(format!("csv: {e}"));
    w.write_record(["n", "l", "solution_index", "orbit_index", "partition", "rep_dim"])
        .map_err(fail)?;
    for (si, s) in solutions.iter().enumerate() {
        for (oi, p) in s.iter().enumerate() {
            w.write_record([
                n.to_string(),
                l.to_string(),
                si.to_string(),
                oi.to_string(),
                p.to_string(),
                p.rep_dim().to_string(),
            ])
            .map_err(fail)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
