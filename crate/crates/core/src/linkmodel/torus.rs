//! Loops on the torus [0,1)² with integer winding, for intersection numbers.

use super::LinkError;
use serde::{Deserialize, Serialize};

const EPS: f64 = 1e-9;

/// A closed loop on the torus, given as a piecewise-linear lift: a path of
/// points in the plane whose endpoint differs from the basepoint by exactly
/// the winding vector `(p, q)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusLoop {
    winding: (i64, i64),
    points: Vec<(f64, f64)>,
}

impl TorusLoop {
    /// Build from an explicit lifted path. The first point is the basepoint;
    /// the last must equal basepoint + winding.
    pub fn new(winding: (i64, i64), points: Vec<(f64, f64)>) -> Result<Self, LinkError> {
        if points.len() < 2 {
            return Err(LinkError::OpenPath);
        }
        let first = points[0];
        let last = *points.last().unwrap();
        if (last.0 - first.0 - winding.0 as f64).abs() > EPS
            || (last.1 - first.1 - winding.1 as f64).abs() > EPS
        {
            return Err(LinkError::OpenPath);
        }
        for w in points.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            if dx.abs() < EPS && dy.abs() < EPS {
                return Err(LinkError::DegenerateSegment);
            }
        }
        Ok(TorusLoop { winding, points })
    }

    /// The straight-line representative of winding `(p, q)` through the
    /// given basepoint.
    pub fn line(winding: (i64, i64), basepoint: (f64, f64)) -> Result<Self, LinkError> {
        if winding == (0, 0) {
            return Err(LinkError::DegenerateSegment);
        }
        let end = (
            basepoint.0 + winding.0 as f64,
            basepoint.1 + winding.1 as f64,
        );
        Self::new(winding, vec![basepoint, end])
    }

    pub fn winding(&self) -> (i64, i64) {
        self.winding
    }

    pub fn basepoint(&self) -> (f64, f64) {
        self.points[0]
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    fn bbox(&self) -> (f64, f64, f64, f64) {
        let xs = self.points.iter().map(|p| p.0);
        let ys = self.points.iter().map(|p| p.1);
        let xmin = xs.clone().fold(f64::INFINITY, f64::min);
        let xmax = xs.fold(f64::NEG_INFINITY, f64::max);
        let ymin = ys.clone().fold(f64::INFINITY, f64::min);
        let ymax = ys.fold(f64::NEG_INFINITY, f64::max);
        (xmin, xmax, ymin, ymax)
    }
}

/// Homological intersection pairing `p_a q_b − q_a p_b`, cross-checked
/// against the signed count of piecewise-linear crossings on the torus.
/// Non-generic configurations (touching or overlapping segments) are
/// rejected rather than perturbed.
pub fn intersection_number(a: &TorusLoop, b: &TorusLoop) -> Result<i64, LinkError> {
    let (pa, qa) = a.winding();
    let (pb, qb) = b.winding();
    let det = pa * qb - qa * pb;
    let count = signed_crossing_count(a, b)?;
    if det != count {
        return Err(LinkError::IntersectionMismatch { det, count });
    }
    Ok(det)
}

/// Signed crossings of the lift of one period of `a` with all integer
/// translates of one period of `b`.
fn signed_crossing_count(a: &TorusLoop, b: &TorusLoop) -> Result<i64, LinkError> {
    let (axmin, axmax, aymin, aymax) = a.bbox();
    let (bxmin, bxmax, bymin, bymax) = b.bbox();
    let m_lo = (axmin - bxmax).floor() as i64 - 1;
    let m_hi = (axmax - bxmin).ceil() as i64 + 1;
    let n_lo = (aymin - bymax).floor() as i64 - 1;
    let n_hi = (aymax - bymin).ceil() as i64 + 1;

    let mut total = 0i64;
    for m in m_lo..=m_hi {
        for n in n_lo..=n_hi {
            for sa in a.points.windows(2) {
                for sb in b.points.windows(2) {
                    let p3 = (sb[0].0 + m as f64, sb[0].1 + n as f64);
                    let p4 = (sb[1].0 + m as f64, sb[1].1 + n as f64);
                    total += segment_crossing_sign(sa[0], sa[1], p3, p4)?;
                }
            }
        }
    }
    Ok(total)
}

/// Sign of the transversal crossing of segment p1→p2 by p3→p4, 0 if they do
/// not meet, error if they touch or overlap.
fn segment_crossing_sign(
    p1: (f64, f64),
    p2: (f64, f64),
    p3: (f64, f64),
    p4: (f64, f64),
) -> Result<i64, LinkError> {
    let r = (p2.0 - p1.0, p2.1 - p1.1);
    let s = (p4.0 - p3.0, p4.1 - p3.1);
    let denom = r.0 * s.1 - r.1 * s.0;
    let qp = (p3.0 - p1.0, p3.1 - p1.1);
    if denom.abs() < EPS {
        // parallel: overlapping collinear segments are non-generic
        let cross_qp = qp.0 * r.1 - qp.1 * r.0;
        if cross_qp.abs() < EPS && collinear_overlap(p1, p2, p3, p4) {
            return Err(LinkError::NonGenericPosition);
        }
        return Ok(0);
    }
    let t = (qp.0 * s.1 - qp.1 * s.0) / denom;
    let u = (qp.0 * r.1 - qp.1 * r.0) / denom;
    let inside = |v: f64| v > EPS && v < 1.0 - EPS;
    let near_edge = |v: f64| v.abs() <= EPS || (v - 1.0).abs() <= EPS;
    if (near_edge(t) && u >= -EPS && u <= 1.0 + EPS)
        || (near_edge(u) && t >= -EPS && t <= 1.0 + EPS)
    {
        return Err(LinkError::NonGenericPosition);
    }
    if inside(t) && inside(u) {
        Ok(if denom > 0.0 { 1 } else { -1 })
    } else {
        Ok(0)
    }
}

fn collinear_overlap(p1: (f64, f64), p2: (f64, f64), p3: (f64, f64), p4: (f64, f64)) -> bool {
    // project on the dominant axis of p1→p2
    let r = (p2.0 - p1.0, p2.1 - p1.1);
    let (a1, a2, b1, b2) = if r.0.abs() >= r.1.abs() {
        (p1.0, p2.0, p3.0, p4.0)
    } else {
        (p1.1, p2.1, p3.1, p4.1)
    };
    let (alo, ahi) = (a1.min(a2), a1.max(a2));
    let (blo, bhi) = (b1.min(b2), b1.max(b2));
    ahi >= blo - EPS && bhi >= alo - EPS
}
