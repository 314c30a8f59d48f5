//! Ball export: one row per state in level order.

use std::io::Write;

use cklein_core::model::GroupModel;
use cklein_core::oracle::{export_rows, BallIndex};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallRow {
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub length: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Csv,
    Jsonl,
}

pub fn rows<M: GroupModel>(ball: &BallIndex<M>) -> Vec<BallRow> {
    export_rows(ball)
        .into_iter()
        .map(|([k, m, n], length)| BallRow { k, m, n, length })
        .collect()
}

/// CSV has the header `k,m,n,length`; JSONL has one object per line.
pub fn write_rows<W: Write>(rows: &[BallRow], format: ExportFormat, mut out: W) -> Result<(), CliError> {
    match format {
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        ExportFormat::Jsonl => {
            for r in rows {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}
