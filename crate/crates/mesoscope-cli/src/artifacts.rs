use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::manifest::{sha256_hex, FileStamp};

/// Artifacts accumulate in memory and hit the filesystem only in
/// `write_all`, so a failed run leaves no partial outputs behind; if a
/// write fails midway, files already written in this run are removed.
pub struct ArtifactSet {
    dir: PathBuf,
    files: Vec<(String, String, Vec<u8>)>,
}

impl ArtifactSet {
    pub fn new(dir: &Path) -> ArtifactSet {
        ArtifactSet { dir: dir.to_path_buf(), files: Vec::new() }
    }

    /// Queue a file under a logical name used in the manifest's outputs map.
    pub fn add(&mut self, logical: &str, file_name: &str, content: impl Into<Vec<u8>>) {
        self.files.push((logical.to_string(), file_name.to_string(), content.into()));
    }

    pub fn stamps(&self) -> BTreeMap<String, FileStamp> {
        self.files
            .iter()
            .map(|(logical, name, content)| {
                (
                    logical.clone(),
                    FileStamp { path: name.clone(), sha256: sha256_hex(content) },
                )
            })
            .collect()
    }

    pub fn path_of(&self, file_name: &str) -> PathBuf {
        self.dir.join(file_name)
    }

    pub fn write_all(self) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut written: Vec<PathBuf> = Vec::new();
        for (_, name, content) in &self.files {
            let path = self.dir.join(name);
            if let Err(e) = fs::write(&path, content) {
                for p in written {
                    let _ = fs::remove_file(p);
                }
                return Err(e);
            }
            written.push(path);
        }
        Ok(())
    }
}
