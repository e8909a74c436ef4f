//! SVG rendering of a planar scan: grid points, exceptional degrees
//! (filled), rank-jumping degrees (outlined) and slab spans.

use std::fmt::Write;

use super::report::AnalysisReport;
use crate::analysis::{Analyzer, DegreeBox};
use crate::error::{Error, Result};
use crate::lattice::to_i64;

const CELL: f64 = 24.0;
const PAD: f64 = 32.0;

struct Frame {
    lo: [i64; 2],
    hi: [i64; 2],
}

impl Frame {
    fn x(&self, u: f64) -> f64 {
        PAD + (u - self.lo[0] as f64) * CELL
    }

    fn y(&self, v: f64) -> f64 {
        PAD + (self.hi[1] as f64 - v) * CELL
    }

    fn width(&self) -> f64 {
        2.0 * PAD + (self.hi[0] - self.lo[0]) as f64 * CELL
    }

    fn height(&self) -> f64 {
        2.0 * PAD + (self.hi[1] - self.lo[1]) as f64 * CELL
    }
}

/// Clips `base + t·dir` to the box; `None` if it misses.
fn clip(frame: &Frame, base: &[i64], dir: &[i64]) -> Option<[(f64, f64); 2]> {
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for k in 0..2 {
        let (b, v) = (base[k] as f64, dir[k] as f64);
        let (lo, hi) = (frame.lo[k] as f64, frame.hi[k] as f64);
        if dir[k] == 0 {
            if b < lo || b > hi {
                return None;
            }
        } else {
            let (a, c) = ((lo - b) / v, (hi - b) / v);
            t0 = t0.max(a.min(c));
            t1 = t1.min(a.max(c));
        }
    }
    (t0 <= t1).then(|| {
        let p = |t: f64| (base[0] as f64 + t * dir[0] as f64, base[1] as f64 + t * dir[1] as f64);
        [p(t0), p(t1)]
    })
}

pub fn render_svg(analyzer: &Analyzer, report: &AnalysisReport) -> Result<String> {
    if analyzer.d() != 2 {
        return Err(Error::UnsupportedDimension(analyzer.d()));
    }
    let region: &DegreeBox = &report.region;
    let frame = Frame {
        lo: [region.lower()[0], region.lower()[1]],
        hi: [region.upper()[0], region.upper()[1]],
    };
    let mut s = String::new();
    let (w, h) = (frame.width(), frame.height());
    writeln!(s, r##"<?xml version="1.0" encoding="UTF-8"?>"##).ok();
    writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"##
    )
    .ok();
    writeln!(s, r##"<rect x="0" y="0" width="{w:.0}" height="{h:.0}" fill="white"/>"##).ok();
    writeln!(s, r##"<g id="grid" fill="#bbbbbb">"##).ok();
    for p in region.points() {
        writeln!(s, r##"<circle cx="{:.1}" cy="{:.1}" r="1.5"/>"##, frame.x(p[0] as f64), frame.y(p[1] as f64)).ok();
    }
    writeln!(s, "</g>").ok();

    if let Ok(inner) = region.inner() {
        let (x0, y0) = (frame.x(inner.lower()[0] as f64 - 0.5), frame.y(inner.upper()[1] as f64 + 0.5));
        let iw = (inner.upper()[0] - inner.lower()[0] + 1) as f64 * CELL;
        let ih = (inner.upper()[1] - inner.lower()[1] + 1) as f64 * CELL;
        writeln!(
            s,
            r##"<rect id="inner" x="{x0:.1}" y="{y0:.1}" width="{iw:.1}" height="{ih:.1}" fill="none" stroke="#dddddd" stroke-dasharray="4 4"/>"##
        )
        .ok();
    }

    writeln!(s, r##"<g id="slabs" stroke="#1f77b4" stroke-width="2" fill="#1f77b4">"##).ok();
    let faces = analyzer.cone().faces();
    for slab in &report.slabs {
        match slab.dim {
            0 => {
                writeln!(
                    s,
                    r##"<circle cx="{:.1}" cy="{:.1}" r="3"/>"##,
                    frame.x(slab.base[0] as f64),
                    frame.y(slab.base[1] as f64)
                )
                .ok();
            }
            _ => {
                let dir = faces.face(slab.face).lattice().basis()[0]
                    .iter()
                    .map(to_i64)
                    .collect::<Result<Vec<_>>>()?;
                if let Some([(ax, ay), (bx, by)]) = clip(&frame, &slab.base, &dir) {
                    writeln!(
                        s,
                        r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"##,
                        frame.x(ax),
                        frame.y(ay),
                        frame.x(bx),
                        frame.y(by)
                    )
                    .ok();
                }
            }
        }
    }
    writeln!(s, "</g>").ok();

    writeln!(s, r##"<g id="exceptional" fill="#d62728">"##).ok();
    for e in &report.exceptional {
        writeln!(s, r##"<circle cx="{:.1}" cy="{:.1}" r="5"/>"##, frame.x(e[0] as f64), frame.y(e[1] as f64)).ok();
    }
    writeln!(s, "</g>").ok();
    writeln!(s, r##"<g id="rank-jumping" fill="none" stroke="black" stroke-width="1.5">"##).ok();
    for c in report.rank_jumping.iter().flatten() {
        writeln!(
            s,
            r##"<circle cx="{:.1}" cy="{:.1}" r="8"/>"##,
            frame.x(c.degree[0] as f64),
            frame.y(c.degree[1] as f64)
        )
        .ok();
    }
    writeln!(s, "</g>").ok();
    writeln!(s, "</svg>").ok();
    Ok(s)
}
