//! Shared output plumbing: JSON-lines sinks and the error-to-exit-code split.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Command failures, split by exit code: usage errors exit 2, runtime
/// failures exit 1.
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Runtime(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(msg) => write!(f, "{msg}"),
            CmdError::Runtime(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<nlsearch_core::Error> for CmdError {
    fn from(err: nlsearch_core::Error) -> Self {
        // Errors surfaced by the library are contract violations of the
        // supplied arguments.
        CmdError::Usage(err.to_string())
    }
}

impl From<io::Error> for CmdError {
    fn from(err: io::Error) -> Self {
        CmdError::Runtime(err.to_string())
    }
}

pub type CmdResult<T = ()> = Result<T, CmdError>;

/// Writes JSON lines either to a file or to stdout.
pub struct JsonlSink {
    writer: Box<dyn Write>,
    path: Option<PathBuf>,
}

impl JsonlSink {
    pub fn create(out: Option<&Path>) -> CmdResult<Self> {
        Ok(match out {
            Some(path) => JsonlSink {
                writer: Box::new(BufWriter::new(File::create(path)?)),
                path: Some(path.to_path_buf()),
            },
            None => JsonlSink {
                writer: Box::new(io::stdout().lock()),
                path: None,
            },
        })
    }

    pub fn write<T: serde::Serialize>(&mut self, record: &T) -> CmdResult {
        let line = serde_json::to_string(record)
            .map_err(|e| CmdError::Runtime(format!("serialization failed: {e}")))?;
        writeln!(self.writer, "{line}")?;
        Ok(())
    }

    pub fn finish(mut self) -> CmdResult {
        self.writer.flush()?;
        if let Some(path) = &self.path {
            eprintln!("wrote {}", path.display());
        }
        Ok(())
    }
}
