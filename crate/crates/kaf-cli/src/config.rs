use crate::error::CliError;
use kaf_quadrature::DeformParams;
use kaf_transform::Cplx;
use serde::Deserialize;
use std::path::Path;

/// Flat key-value config file. Every key can be overridden by the matching
/// command-line flag; flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub dim: Option<usize>,
    pub a: Option<f64>,
    pub k: Option<Vec<f64>>,
    pub z: Option<String>,
    pub range: Option<String>,
    pub count: Option<usize>,
    pub m: Option<usize>,
    pub ell_max: Option<usize>,
    pub n_radial: Option<usize>,
    pub format: Option<String>,
    pub out: Option<String>,
    pub suite: Option<String>,
}

impl FileConfig {
    pub fn load(path: Option<&str>) -> Result<Self, CliError> {
        let path = match path {
            Some(p) => p.to_string(),
            None => match std::env::var("KAF_CONFIG") {
                Ok(p) => p,
                Err(_) => return Ok(FileConfig::default()),
            },
        };
        if !Path::new(&path).exists() {
            return Err(CliError::usage(format!("config file not found: {path}")));
        }
        let text = std::fs::read_to_string(&path)?;
        toml::from_str(&text)
            .map_err(|e| CliError::usage(format!("config file {path}: {e}")))
    }
}

pub fn merge<T: Clone>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Deformation parameters from merged flag/file values. A single k value is
/// broadcast to all N coordinates.
pub fn build_params(
    dim: Option<usize>,
    a: Option<f64>,
    k: Option<Vec<f64>>,
    file: &FileConfig,
) -> Result<DeformParams, CliError> {
    let dim = merge(dim, file.dim, 1);
    let a = merge(a, file.a, 2.0);
    let k = merge(k, file.k.clone(), vec![0.0]);
    let k = if k.len() == 1 {
        vec![k[0]; dim]
    } else {
        k
    };
    if k.len() != dim {
        return Err(CliError::usage(format!(
            "k has {} entries but N = {dim}; pass one value per coordinate or a single shared value",
            k.len()
        )));
    }
    DeformParams::new(dim, a, k).map_err(|e| CliError::usage(e.to_string()))
}

/// "1.5", "-2i", "0.5+1.2i", "0.5-1.2i".
pub fn parse_complex(s: &str) -> Result<Cplx, CliError> {
    let t = s.trim().replace(' ', "");
    let err = || CliError::usage(format!("cannot parse complex number from {s:?}; expected forms like 0.5, 1.2i, 0.5+1.2i"));
    if let Some(im) = t.strip_suffix('i') {
        // Split at the sign that separates the parts (skip a leading sign).
        for (idx, ch) in im.char_indices().skip(1) {
            if (ch == '+' || ch == '-') && !matches!(im.as_bytes()[idx - 1], b'e' | b'E') {
                let re: f64 = im[..idx].parse().map_err(|_| err())?;
                let imag: f64 = match &im[idx..] {
                    "+" => 1.0,
                    "-" => -1.0,
                    rest => rest.parse().map_err(|_| err())?,
                };
                return Ok(Cplx::new(re, imag));
            }
        }
        let imag: f64 = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            rest => rest.parse().map_err(|_| err())?,
        };
        return Ok(Cplx::new(0.0, imag));
    }
    let re: f64 = t.parse().map_err(|_| err())?;
    Ok(Cplx::new(re, 0.0))
}

/// "lo:hi" with lo < hi.
pub fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 2 {
        if let (Ok(lo), Ok(hi)) = (parts[0].parse::<f64>(), parts[1].parse::<f64>()) {
            if lo < hi {
                return Ok((lo, hi));
            }
        }
    }
    Err(CliError::usage(format!(
        "cannot parse range from {s:?}; expected lo:hi with lo < hi"
    )))
}

/// Semicolon-separated points with comma-separated coordinates:
/// "0.5,1.0;-0.3,0.2".
pub fn parse_points(s: &str, dim: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut out = Vec::new();
    for part in s.split(';') {
        let coords: Result<Vec<f64>, _> =
            part.split(',').map(|c| c.trim().parse::<f64>()).collect();
        let coords = coords
            .map_err(|_| CliError::usage(format!("cannot parse point {part:?}")))?;
        if coords.len() != dim {
            return Err(CliError::usage(format!(
                "point {part:?} has {} coordinates, expected N = {dim}",
                coords.len()
            )));
        }
        out.push(coords);
    }
    Ok(out)
}
