//! SVG pictures of the arrangement `{g_i(x) + v_i = 0 : i ∈ Z(v)}` in Gale
//! coordinates, for lattices of rank one or two.
//!
//! Faces are computed exactly: the window is cut by every hyperplane with
//! rational arithmetic and each open cell is labelled by the coordinates
//! that are negative on it. Output is deterministic for fixed input.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exponents::{format_support, gale_box, integer_coordinates, Support};
use crate::lattice::LatticeBasis;
use crate::rational::{q, Q};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;
const LINE_HEIGHT: f64 = 200.0;

/// A hyperplane `g · x + c = 0` for coordinate `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub index: usize,
    pub normal: Vec<i64>,
    pub offset: Q,
}

impl Hyperplane {
    fn eval(&self, x: &[Q]) -> Q {
        self.normal
            .iter()
            .zip(x)
            .fold(self.offset.clone(), |acc, (&g, xi)| acc + q(g) * xi)
    }
}

/// An open cell of the arrangement inside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Vertices in order (two endpoints in rank one).
    pub vertices: Vec<Vec<Q>>,
    pub support: Support,
    /// Integer points strictly inside the cell.
    pub lattice_points: usize,
}

impl Face {
    pub fn centroid(&self) -> Vec<Q> {
        let k = self.vertices[0].len();
        let n = q(self.vertices.len() as i64);
        (0..k)
            .map(|j| self.vertices.iter().map(|p| &p[j]).sum::<Q>() / &n)
            .collect()
    }
}

/// Hyperplanes of the coordinates in `Z(v)` whose covector is nonzero.
pub fn hyperplanes(v: &[Q], basis: &LatticeBasis) -> Vec<Hyperplane> {
    integer_coordinates(v)
        .into_iter()
        .map(|i| Hyperplane {
            index: i,
            normal: basis.covector(i),
            offset: v[i].clone(),
        })
        .filter(|h| h.normal.iter().any(|&g| g != 0))
        .collect()
}

fn negative_set(hs: &[Hyperplane], x: &[Q]) -> Support {
    hs.iter()
        .filter(|h| h.eval(x).is_negative())
        .map(|h| h.index)
        .collect()
}

/// Keeps the part of a convex polygon where `sign · h > 0`.
fn clip(poly: &[Vec<Q>], h: &Hyperplane, sign: i64) -> Vec<Vec<Q>> {
    let s = q(sign);
    let vals: Vec<Q> = poly.iter().map(|p| h.eval(p) * &s).collect();
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        let (a, b) = (&poly[i], &poly[j]);
        let (fa, fb) = (&vals[i], &vals[j]);
        if fa.is_positive() || fa.is_zero() {
            out.push(a.clone());
        }
        if (fa.is_positive() && fb.is_negative()) || (fa.is_negative() && fb.is_positive()) {
            let t = fa / (fa - fb);
            out.push(a.iter().zip(b).map(|(x, y)| x + (y - x) * &t).collect());
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn has_interior(poly: &[Vec<Q>]) -> bool {
    if poly.len() < 3 {
        return false;
    }
    let mut area = q(0);
    for i in 0..poly.len() {
        let (a, b) = (&poly[i], &poly[(i + 1) % poly.len()]);
        area += &a[0] * &b[1] - &a[1] * &b[0];
    }
    !area.is_zero()
}

/// Open cells of the arrangement inside the box `[-r, r]^k`.
pub fn faces(v: &[Q], basis: &LatticeBasis, r: i64) -> Result<Vec<Face>> {
    let hs = hyperplanes(v, basis);
    let rq = q(r);
    let cells: Vec<Vec<Vec<Q>>> = match basis.rank() {
        1 => {
            let mut cuts: Vec<Q> = hs
                .iter()
                .map(|h| -h.offset.clone() / q(h.normal[0]))
                .filter(|c| c.abs() < rq)
                .collect();
            cuts.push(-rq.clone());
            cuts.push(rq.clone());
            cuts.sort();
            cuts.dedup();
            cuts.windows(2)
                .map(|w| vec![vec![w[0].clone()], vec![w[1].clone()]])
                .collect()
        }
        2 => {
            let square = vec![
                vec![-rq.clone(), -rq.clone()],
                vec![rq.clone(), -rq.clone()],
                vec![rq.clone(), rq.clone()],
                vec![-rq.clone(), rq.clone()],
            ];
            let mut cells = vec![square];
            for h in &hs {
                cells = cells
                    .iter()
                    .flat_map(|c| [clip(c, h, 1), clip(c, h, -1)])
                    .filter(|c| has_interior(c))
                    .collect();
            }
            cells
        }
        k => return Err(Error::DimensionUnsupported(k)),
    };
    // a cell is determined by its sign vector, so points are matched by sign
    let points: Vec<Vec<Q>> = gale_box(basis.rank(), r)
        .into_iter()
        .map(|x| x.into_iter().map(q).collect())
        .collect();
    let mut out: Vec<Face> = cells
        .into_iter()
        .map(|vertices| {
            let mut f = Face {
                vertices,
                support: Support::new(),
                lattice_points: 0,
            };
            f.support = negative_set(&hs, &f.centroid());
            f.lattice_points = points
                .iter()
                .filter(|x| {
                    hs.iter().all(|h| !h.eval(x).is_zero()) && negative_set(&hs, x) == f.support
                })
                .count();
            f
        })
        .collect();
    out.sort_by_key(|a| a.centroid());
    Ok(out)
}

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

struct Frame {
    r: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x + self.r) / (2.0 * self.r) * (SIZE - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        SIZE - self.px(y)
    }
}

fn label(s: &Support) -> String {
    if s.is_empty() {
        "\u{2205}".to_string()
    } else {
        format_support(s)
    }
}

/// Class and fill of a face label; cells without lattice points are gray.
fn face_style(c: &Face) -> (&'static str, &'static str) {
    if c.lattice_points == 0 {
        ("face empty", "gray")
    } else {
        ("face", "black")
    }
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{w:.0}" height="{h:.0}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>"
    );
}

/// SVG drawing of the arrangement in the Gale box of radius `r`.
pub fn arrangement_svg(v: &[Q], basis: &LatticeBasis, r: i64) -> Result<String> {
    let k = basis.rank();
    if k == 0 || k > 2 {
        return Err(Error::DimensionUnsupported(k));
    }
    let r = r.max(1);
    let fr = Frame { r: r as f64 };
    let hs = hyperplanes(v, basis);
    let cells = faces(v, basis, r)?;
    let mut out = String::new();
    if k == 1 {
        let (w, h) = (SIZE, LINE_HEIGHT);
        let mid = h / 2.0;
        header(&mut out, w, h);
        let _ = writeln!(
            out,
            r#"<line class="axis" x1="{:.2}" y1="{mid:.2}" x2="{:.2}" y2="{mid:.2}" stroke="gray"/>"#,
            fr.px(-fr.r),
            fr.px(fr.r)
        );
        for x in -r..=r {
            let _ = writeln!(
                out,
                r#"<circle class="lattice" cx="{:.2}" cy="{mid:.2}" r="2.5" fill="gray"/>"#,
                fr.px(x as f64)
            );
        }
        for hp in &hs {
            let c = -hp.offset.clone() / q(hp.normal[0]);
            let x = fr.px(f(&c));
            let dir = if hp.normal[0] > 0 { 18.0 } else { -18.0 };
            let _ = writeln!(
                out,
                r#"<line class="hyperplane" x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
                mid - 50.0,
                mid + 50.0
            );
            let _ = writeln!(
                out,
                r#"<line class="positive-side" x1="{x:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" marker-end="url(#arrow)"/>"#,
                mid - 40.0,
                x + dir,
                mid - 40.0
            );
            let _ = writeln!(
                out,
                r#"<text class="hyperplane-label" x="{x:.2}" y="{:.2}" text-anchor="middle" font-size="12">H{}</text>"#,
                mid - 56.0,
                hp.index + 1
            );
        }
        for c in &cells {
            let x = fr.px(f(&c.centroid()[0]));
            let _ = writeln!(
                out,
                r#"<text class="{}" fill="{}" x="{x:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"#,
                face_style(c).0,
                face_style(c).1,
                mid + 30.0,
                label(&c.support)
            );
        }
    } else {
        header(&mut out, SIZE, SIZE);
        let (lo, hi) = (-fr.r, fr.r);
        let _ = writeln!(
            out,
            r#"<line class="axis" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
            fr.px(lo),
            fr.py(0.0),
            fr.px(hi),
            fr.py(0.0)
        );
        let _ = writeln!(
            out,
            r#"<line class="axis" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
            fr.px(0.0),
            fr.py(lo),
            fr.px(0.0),
            fr.py(hi)
        );
        for x in -r..=r {
            for y in -r..=r {
                let _ = writeln!(
                    out,
                    r#"<circle class="lattice" cx="{:.2}" cy="{:.2}" r="1.5" fill="gray"/>"#,
                    fr.px(x as f64),
                    fr.py(y as f64)
                );
            }
        }
        for hp in &hs {
            let Some((a, b)) = segment(hp, r) else {
                continue;
            };
            let (ax, ay, bx, by) = (f(&a[0]), f(&a[1]), f(&b[0]), f(&b[1]));
            let _ = writeln!(
                out,
                r#"<line class="hyperplane" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
                fr.px(ax),
                fr.py(ay),
                fr.px(bx),
                fr.py(by)
            );
            let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
            let (gx, gy) = (hp.normal[0] as f64, hp.normal[1] as f64);
            let norm = (gx * gx + gy * gy).sqrt();
            let (dx, dy) = (gx / norm * 20.0, -gy / norm * 20.0);
            let _ = writeln!(
                out,
                r#"<line class="positive-side" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" marker-end="url(#arrow)"/>"#,
                fr.px(mx),
                fr.py(my),
                fr.px(mx) + dx,
                fr.py(my) + dy
            );
            let _ = writeln!(
                out,
                r#"<text class="hyperplane-label" x="{:.2}" y="{:.2}" font-size="12">H{}</text>"#,
                fr.px(bx) + 4.0,
                fr.py(by) - 4.0,
                hp.index + 1
            );
        }
        for c in &cells {
            let ctr = c.centroid();
            let _ = writeln!(
                out,
                r#"<text class="{}" fill="{}" x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"#,
                face_style(c).0,
                face_style(c).1,
                fr.px(f(&ctr[0])),
                fr.py(f(&ctr[1])),
                label(&c.support)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// The chord of a line through the box `[-r, r]^2`.
fn segment(h: &Hyperplane, r: i64) -> Option<(Vec<Q>, Vec<Q>)> {
    let rq = q(r);
    let (g0, g1) = (q(h.normal[0]), q(h.normal[1]));
    let mut pts: Vec<Vec<Q>> = Vec::new();
    for side in [-rq.clone(), rq.clone()] {
        if !g1.is_zero() {
            let y = -(&h.offset + &g0 * &side) / &g1;
            if y.abs() <= rq {
                pts.push(vec![side.clone(), y]);
            }
        }
        if !g0.is_zero() {
            let x = -(&h.offset + &g1 * &side) / &g0;
            if x.abs() <= rq {
                pts.push(vec![x, side.clone()]);
            }
        }
    }
    pts.sort();
    pts.dedup();
    match pts.as_slice() {
        [a, .., b] => Some((a.clone(), b.clone())),
        _ => None,
    }
}
