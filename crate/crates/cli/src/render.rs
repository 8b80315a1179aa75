//! SVG schematic of a couple in the affine chart `z = 1`.

use conic_isotopy::oracle::sample_conic;
use conic_isotopy::quadform::QuadraticForm;

const SIZE: f64 = 600.0;
const SAMPLES: usize = 2048;
const CLIP: f64 = 20.0;

fn affine(f: &QuadraticForm) -> Vec<Option<(f64, f64)>> {
    sample_conic(f, SAMPLES)
        .into_iter()
        .map(|[x, y, z]| {
            if z.abs() < 1e-12 {
                return None;
            }
            let (u, v) = (x / z, y / z);
            (u.abs() <= CLIP && v.abs() <= CLIP).then_some((u, v))
        })
        .collect()
}

/// Polylines, broken at points outside the clip box and at jumps.
fn paths(pts: &[Option<(f64, f64)>], map: impl Fn((f64, f64)) -> (f64, f64), jump: f64) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur: Vec<(f64, f64)> = Vec::new();
    let mut flush = |cur: &mut Vec<(f64, f64)>| {
        if cur.len() > 1 {
            let d: Vec<String> = cur.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            out.push(format!("M{}", d.join(" L")));
        }
        cur.clear();
    };
    // Close the loop by visiting the first sample again.
    for p in pts.iter().chain(pts.first()) {
        match p {
            Some(p) => {
                let q = map(*p);
                if let Some(last) = cur.last() {
                    if (q.0 - last.0).hypot(q.1 - last.1) > jump {
                        flush(&mut cur);
                    }
                }
                cur.push(q);
            }
            None => flush(&mut cur),
        }
    }
    flush(&mut cur);
    out
}

pub fn svg(f: &QuadraticForm, g: &QuadraticForm, caption: &str) -> String {
    let pf = affine(f);
    let pg = affine(g);
    let all: Vec<(f64, f64)> = pf.iter().chain(&pg).flatten().copied().collect();
    let (mut x0, mut x1, mut y0, mut y1) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    if !all.is_empty() {
        x0 = all.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        x1 = all.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        y0 = all.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        y1 = all.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-6) * 1.1;
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let scale = (SIZE - 40.0) / span;
    let map = |(x, y): (f64, f64)| (SIZE / 2.0 + (x - cx) * scale, SIZE / 2.0 - (y - cy) * scale + 10.0);
    let mut body = String::new();
    for (pts, color) in [(&pf, "#1f5fbf"), (&pg, "#bf3f1f")] {
        for d in paths(pts, map, SIZE / 4.0) {
            body.push_str(&format!("  <path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n"));
        }
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{h}\" viewBox=\"0 0 {s} {h}\">\n\
         \x20 <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         {body}\
         \x20 <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"13\">{caption}</text>\n\
         \x20 <text x=\"10\" y=\"{ly}\" font-family=\"monospace\" font-size=\"12\" fill=\"#1f5fbf\">f = {f}</text>\n\
         \x20 <text x=\"10\" y=\"{ly2}\" font-family=\"monospace\" font-size=\"12\" fill=\"#bf3f1f\">g = {g}</text>\n\
         </svg>\n",
        s = SIZE,
        h = SIZE + 40.0,
        ly = SIZE + 12.0,
        ly2 = SIZE + 30.0,
    )
}
