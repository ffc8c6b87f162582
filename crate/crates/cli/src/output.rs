//! Artifact writing: atomic file replacement, or stdout when no output
//! directory is configured.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

pub struct Sink {
    dir: Option<PathBuf>,
}

impl Sink {
    pub fn new(dir: Option<PathBuf>) -> Result<Self> {
        if let Some(d) = &dir {
            std::fs::create_dir_all(d).with_context(|| format!("creating {}", d.display()))?;
        }
        Ok(Sink { dir })
    }

    pub fn has_dir(&self) -> bool {
        self.dir.is_some()
    }

    /// The main artifact of a command: written to the output directory, or
    /// printed to stdout when there is none.
    pub fn primary(&self, name: &str, content: &str) -> Result<()> {
        match &self.dir {
            Some(d) => write_atomic(&d.join(name), content.as_bytes()),
            None => {
                let mut stdout = std::io::stdout().lock();
                match stdout.write_all(content.as_bytes()).and_then(|()| stdout.flush()) {
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                    r => Ok(r?),
                }
            }
        }
    }

    /// Secondary artifacts (plots, curves) are only written to a directory.
    pub fn extra(&self, name: &str, content: &str) -> Result<()> {
        match &self.dir {
            Some(d) => write_atomic(&d.join(name), content.as_bytes()),
            None => Ok(()),
        }
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating temp file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
