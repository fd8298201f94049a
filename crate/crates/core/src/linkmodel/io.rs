//! JSON input formats for links and torus loops.
//!
//! Link files:
//! ```json
//! {"format": "braid", "strands": 2, "word": [1, 1, 1]}
//! {"format": "pd",
//!  "crossings": [[1, 3, 2, 0, 1], [3, 1, 0, 2, 1]],
//!  "components": [[1, 2], [0, 3]]}
//! ```
//! Torus loop files:
//! ```json
//! {"winding": [1, 0], "segments": [[0.1, 0.2], [1.1, 0.2]]}
//! ```

use super::{braid_closure, BraidWord, Crossing, LinkError, PDCode, TorusLoop};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
enum LinkFile {
    Braid {
        strands: Option<usize>,
        word: Vec<i64>,
    },
    Pd {
        crossings: Vec<[i64; 5]>,
        components: Vec<Vec<usize>>,
    },
}

/// Parse a link input file into a PD code (braid inputs are closed first).
pub fn parse_link_json(text: &str) -> Result<PDCode, LinkError> {
    let file: LinkFile =
        serde_json::from_str(text).map_err(|e| LinkError::BadJson(e.to_string()))?;
    match file {
        LinkFile::Braid { strands, word } => {
            let inferred = word
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1);
            let b = BraidWord::new(strands.unwrap_or(inferred), word)?;
            Ok(braid_closure(&b))
        }
        LinkFile::Pd {
            crossings,
            components,
        } => {
            let crossings = crossings
                .into_iter()
                .map(|[a, b, c, d, sign]| {
                    if a < 0 || b < 0 || c < 0 || d < 0 {
                        return Err(LinkError::BadJson("negative arc label".into()));
                    }
                    Ok(Crossing {
                        arcs: [a as usize, b as usize, c as usize, d as usize],
                        sign: match sign {
                            1 => 1,
                            -1 => -1,
                            other => return Err(LinkError::BadSign(other)),
                        },
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            PDCode::new(crossings, components)
        }
    }
}

#[derive(Deserialize)]
struct TorusLoopFile {
    winding: (i64, i64),
    segments: Vec<(f64, f64)>,
}

/// Parse a torus loop file. The segment list is the lifted path; the first
/// point is the basepoint.
pub fn parse_torus_loop_json(text: &str) -> Result<TorusLoop, LinkError> {
    let file: TorusLoopFile =
        serde_json::from_str(text).map_err(|e| LinkError::BadJson(e.to_string()))?;
    TorusLoop::new(file.winding, file.segments)
}
