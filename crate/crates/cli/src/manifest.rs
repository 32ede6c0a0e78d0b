//! Run manifest: resolved configuration echo, seed, tool version, and a
//! SHA-256 digest per emitted file.

use lcris_core::scenario::Scenario;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::PathBuf;

pub struct ManifestBuilder {
    dir: PathBuf,
    scenario: Scenario,
    digests: BTreeMap<String, String>,
}

impl ManifestBuilder {
    pub fn new(dir: &std::path::Path, scenario: &Scenario) -> Self {
        ManifestBuilder {
            dir: dir.to_path_buf(),
            scenario: scenario.clone(),
            digests: BTreeMap::new(),
        }
    }

    /// Write one output file and record its digest.
    pub fn write_file(&mut self, name: &str, contents: &str) -> anyhow::Result<()> {
        let path = crate::join_out(&self.dir, name);
        std::fs::write(&path, contents)?;
        let mut hasher = Sha256::new();
        hasher.update(contents.as_bytes());
        self.digests.insert(name.to_string(), format!("{:x}", hasher.finalize()));
        Ok(())
    }

    /// Emit `manifest.json` next to the outputs.
    pub fn finish(self) -> anyhow::Result<()> {
        let manifest = serde_json::json!({
            "tool": "lcris",
            "version": env!("CARGO_PKG_VERSION"),
            "seed": self.scenario.seed,
            "config": self.scenario,
            "outputs": self.digests,
        });
        let path = crate::join_out(&self.dir, "manifest.json");
        std::fs::write(path, serde_json::to_string_pretty(&manifest)?)?;
        Ok(())
    }
}
