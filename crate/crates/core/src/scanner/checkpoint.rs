//! Checkpoint log: one `n<TAB>count` line per completed segment, ASCII
//! decimal, LF-terminated. The last line is the resume point.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::prime_engine::PiCheckpoint;

pub fn format_checkpoint(c: &PiCheckpoint) -> String {
    format!("{}\t{}\n", c.n, c.count)
}

/// Parses a single line (the terminating newline is optional).
pub fn parse_checkpoint(line: &str, line_no: usize) -> Result<PiCheckpoint> {
    let bad = |reason: &str| Error::BadCheckpoint {
        line: line_no,
        reason: reason.to_string(),
    };
    let line = line.strip_suffix('\n').unwrap_or(line);
    let (n, count) = line.split_once('\t').ok_or_else(|| bad("missing tab"))?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(count) {
        return Err(bad("fields must be ASCII decimal"));
    }
    let n = n.parse().map_err(|_| bad("n out of range"))?;
    let count = count.parse().map_err(|_| bad("count out of range"))?;
    Ok(PiCheckpoint::new(n, count))
}

pub fn read_checkpoints(reader: impl BufRead) -> Result<Vec<PiCheckpoint>> {
    let mut out: Vec<PiCheckpoint> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let c = parse_checkpoint(&line, i + 1)?;
        if out
            .last()
            .is_some_and(|prev| prev.n >= c.n || prev.count > c.count)
        {
            return Err(Error::BadCheckpoint {
                line: i + 1,
                reason: "checkpoints must advance".into(),
            });
        }
        out.push(c);
    }
    Ok(out)
}

/// Append-only checkpoint file.
pub struct CheckpointLog {
    file: File,
    last: Option<PiCheckpoint>,
}

impl CheckpointLog {
    /// Opens (creating if needed) and reads back any existing checkpoints.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let last = match File::open(path) {
            Ok(f) => read_checkpoints(BufReader::new(f))?.last().copied(),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(e.into()),
        };
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(CheckpointLog { file, last })
    }

    pub fn last(&self) -> Option<PiCheckpoint> {
        self.last
    }

    pub fn append(&mut self, c: PiCheckpoint) -> Result<()> {
        self.file.write_all(format_checkpoint(&c).as_bytes())?;
        self.file.flush()?;
        self.last = Some(c);
        Ok(())
    }
}
