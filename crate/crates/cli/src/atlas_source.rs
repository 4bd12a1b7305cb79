//! Where the solvable atlas comes from: an explicit file, or a cached build.

use std::path::{Path, PathBuf};

use invgen_core::atlas::{AtlasCaps, SolvableAtlas, DEFAULT_MAX_DEGREE, STRETCH_MAX_DEGREE};
use invgen_core::Error;

use crate::AtlasOpts;

pub const CACHE_FILE: &str = "invgen.atlas.json";
pub const STRETCH_CACHE_FILE: &str = "invgen-stretch.atlas.json";

pub struct AtlasSource {
    path: Option<PathBuf>,
    stretch: bool,
}

impl From<&AtlasOpts> for AtlasSource {
    fn from(o: &AtlasOpts) -> Self {
        Self {
            path: o.atlas.clone(),
            stretch: o.stretch,
        }
    }
}

pub fn build(max_degree: u32, caps: AtlasCaps) -> Result<SolvableAtlas, Error> {
    if max_degree > DEFAULT_MAX_DEGREE && !caps.stretch {
        return Err(Error::Capability(format!(
            "degree {max_degree} needs --stretch: degree 16 requires enumerating GL(4,2)"
        )));
    }
    SolvableAtlas::build(max_degree, caps)
}

fn cached(path: &Path, ceiling: u32, caps: AtlasCaps) -> Result<SolvableAtlas, Error> {
    if path.exists() {
        match SolvableAtlas::load(path) {
            Ok(a) if a.max_degree() == ceiling && *a.caps() == caps => return Ok(a),
            Ok(_) => eprintln!("invgen: {} does not match the requested caps; rebuilding", path.display()),
            Err(e) => eprintln!("invgen: ignoring cached atlas: {e}; rebuilding"),
        }
    }
    let a = build(ceiling, caps)?;
    if let Err(e) = a.save(path) {
        eprintln!("invgen: could not cache atlas: {e}");
    }
    Ok(a)
}

impl AtlasSource {
    /// An atlas covering degree `needed`.
    pub fn resolve(&self, needed: u32) -> Result<SolvableAtlas, Error> {
        if let Some(path) = &self.path {
            let a = SolvableAtlas::load(path)?;
            if needed > a.max_degree() {
                return Err(Error::Capability(format!(
                    "{} covers degrees 1..={}; degree {needed} is missing",
                    path.display(),
                    a.max_degree()
                )));
            }
            return Ok(a);
        }
        if needed > STRETCH_MAX_DEGREE {
            return Err(Error::Capability(format!(
                "degree {needed} is missing: built atlases reach degree {STRETCH_MAX_DEGREE} at most"
            )));
        }
        if self.stretch {
            cached(Path::new(STRETCH_CACHE_FILE), STRETCH_MAX_DEGREE, AtlasCaps::stretch())
        } else if needed > DEFAULT_MAX_DEGREE {
            Err(Error::Capability(format!(
                "degree {needed} is missing: degrees above {DEFAULT_MAX_DEGREE} need --stretch"
            )))
        } else {
            cached(Path::new(CACHE_FILE), DEFAULT_MAX_DEGREE, AtlasCaps::standard())
        }
    }
}
