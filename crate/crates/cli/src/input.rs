use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use clap::Args;
use dcgraph::{graph6, Graph};

use crate::Failure;

/// Where graphs come from. With neither flag, records are read from stdin.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Inline graph6 or sparse6 record.
    #[arg(long, short = 'g', conflicts_with = "input")]
    pub graph: Option<String>,
    /// File of graph6/sparse6 records, one per line; `-` reads stdin.
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
}

/// A parsed record with the label used in reports.
pub struct Named {
    pub label: String,
    pub graph: Graph,
}

impl InputArgs {
    pub fn reader(&self) -> Result<Box<dyn BufRead>, Failure> {
        match (&self.graph, &self.input) {
            (Some(g), _) => Ok(Box::new(io::Cursor::new(g.clone().into_bytes()))),
            (None, Some(p)) if p.as_os_str() != "-" => {
                let f = File::open(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
                Ok(Box::new(BufReader::new(f)))
            }
            _ => Ok(Box::new(BufReader::new(io::stdin()))),
        }
    }

    /// Read and parse every record before any computation.
    pub fn graphs(&self) -> Result<Vec<Named>, Failure> {
        let mut out = Vec::new();
        for rec in graph6::records(self.reader()?) {
            let rec = rec.map_err(|e| Failure::input(e.to_string()))?;
            match rec.graph {
                Ok(graph) => out.push(Named { label: rec.text, graph }),
                Err(e) => return Err(Failure::input(format!("line {} (byte {}): {e}", rec.line, rec.offset))),
            }
        }
        if out.is_empty() {
            return Err(Failure::input("no graphs in input".into()));
        }
        Ok(out)
    }
}
