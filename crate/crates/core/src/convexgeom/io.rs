//! Body files: one primitive per file, `#` starts a comment.
//!
//! ```text
//! polygon: 0 0        # one line per vertex; the hull is taken
//! polygon: 1 0
//! disk: re im r
//! strip: phi b offset
//! ```

use num_complex::Complex64;

use super::ConvexBody;
use crate::angle::parse_angle;
use crate::format::sig12;
use crate::{Error, Result};

pub fn parse_body(text: &str) -> Result<ConvexBody> {
    let mut vertices = Vec::new();
    let mut single: Option<ConvexBody> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let (kind, rest) = content
            .split_once(':')
            .ok_or_else(|| err("expected `polygon:`, `disk:` or `strip:`".into()))?;
        let nums = rest
            .split_whitespace()
            .map(|t| parse_angle(t).map_err(|e| err(e.to_string())))
            .collect::<Result<Vec<f64>>>()?;
        let expect = |n: usize| {
            if nums.len() == n {
                Ok(())
            } else {
                Err(err(format!("`{}` takes {n} numbers, got {}", kind.trim(), nums.len())))
            }
        };
        if single.is_some() || (!vertices.is_empty() && kind.trim() != "polygon") {
            return Err(err("a body file holds exactly one body".into()));
        }
        match kind.trim() {
            "polygon" => {
                expect(2)?;
                vertices.push(Complex64::new(nums[0], nums[1]));
            }
            "disk" => {
                expect(3)?;
                single = Some(
                    ConvexBody::disk(Complex64::new(nums[0], nums[1]), nums[2]).map_err(|e| err(e.to_string()))?,
                );
            }
            "strip" => {
                expect(3)?;
                single = Some(ConvexBody::strip(nums[0], nums[1], nums[2]).map_err(|e| err(e.to_string()))?);
            }
            other => return Err(err(format!("unknown body kind `{other}`"))),
        }
    }
    match single {
        Some(b) => Ok(b),
        None if vertices.is_empty() => Err(Error::InvalidBody("body file is empty".into())),
        None => ConvexBody::from_points(&vertices),
    }
}

pub fn format_body(body: &ConvexBody) -> String {
    match body {
        ConvexBody::Empty => "# empty body\n".to_string(),
        ConvexBody::Polygon(vs) => vs
            .iter()
            .map(|v| format!("polygon: {} {}\n", sig12(v.re), sig12(v.im)))
            .collect(),
        ConvexBody::Disk { center, radius } => {
            format!("disk: {} {} {}\n", sig12(center.re), sig12(center.im), sig12(*radius))
        }
        ConvexBody::Strip { axis, width, offset } => {
            format!("strip: {} {} {}\n", sig12(*axis), sig12(*width), sig12(*offset))
        }
    }
}
