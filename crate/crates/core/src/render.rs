//! Support-polygon rendering: SVG (32-px grid) with hull edges annotated by
//! their direction, plus a plain ASCII fallback. All pixel coordinates are
//! derived by exact rational rounding; no floating point.

use crate::geometry::{dir_of, en, hull_edges, st, Direction};
use crate::rational::{rat, to_i64, Rat};
use crate::weyl::{Point, Support};
use crate::Result;
use num::{BigInt, Zero};

const GRID: i64 = 32;
const MARGIN: i64 = 48;

/// Rounds `r * GRID` to the nearest integer, exactly.
fn to_px(r: &Rat) -> i64 {
    let scaled = r * rat(GRID) + Rat::new(BigInt::from(1), BigInt::from(2));
    to_i64(&scaled.floor())
}

struct Frame {
    min_x: Rat,
    max_y: Rat,
    width: i64,
    height: i64,
}

impl Frame {
    fn new(points: &[Point]) -> Frame {
        let zero = Rat::zero;
        let min_x = points.iter().map(|p| p.x.clone()).min().unwrap_or_else(zero);
        let max_x = points.iter().map(|p| p.x.clone()).max().unwrap_or_else(zero);
        let min_y = points.iter().map(|p| p.y.clone()).min().unwrap_or_else(zero);
        let max_y = points.iter().map(|p| p.y.clone()).max().unwrap_or_else(zero);
        Frame {
            width: to_px(&(&max_x - &min_x)) + 2 * MARGIN,
            height: to_px(&(&max_y - &min_y)) + 2 * MARGIN,
            min_x,
            max_y,
        }
    }

    /// SVG pixel position of a lattice point (y axis flipped).
    fn px(&self, p: &Point) -> (i64, i64) {
        (
            MARGIN + to_px(&(&p.x - &self.min_x)),
            MARGIN + to_px(&(&self.max_y - &p.y)),
        )
    }
}

/// Renders `Supp(P)` as an SVG 1.1 document: support points, convex-hull
/// edges labeled with their direction, and `st`/`en` markers for the
/// requested direction when one is given.
pub fn render_svg(el: &impl Support, dir: Option<&Direction>) -> Result<String> {
    let points = el.support();
    let frame = Frame::new(&points);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = frame.width,
        h = frame.height
    ));
    out.push_str(&format!(
        "  <rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        frame.width, frame.height
    ));
    for (a, b) in hull_edges(el) {
        let (x1, y1) = frame.px(&a);
        let (x2, y2) = frame.px(&b);
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"steelblue\" stroke-width=\"2\"/>\n"
        ));
        if let Ok(d) = dir_of(&b.sub(&a)) {
            let (mx, my) = ((x1 + x2) / 2, (y1 + y2) / 2);
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"steelblue\">{d}</text>\n",
                mx + 6,
                my - 6
            ));
        }
    }
    for p in &points {
        let (cx, cy) = frame.px(p);
        out.push_str(&format!(
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"black\"/>\n"
        ));
    }
    if let Some(d) = dir {
        for (corner, label, color) in [
            (st(el, d), "st", "crimson"),
            (en(el, d), "en", "darkgreen"),
        ] {
            if let Ok(p) = corner {
                let (cx, cy) = frame.px(&p);
                out.push_str(&format!(
                    "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"6\" fill=\"none\" \
                     stroke=\"{color}\" stroke-width=\"2\"/>\n"
                ));
                out.push_str(&format!(
                    "  <text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{color}\">{label} {p}</text>\n",
                    cx + 8,
                    cy + 14
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Plain-text fallback: the support on a character grid, integer lattice
/// only ('*' marks a cell containing at least one support point).
pub fn render_ascii(el: &impl Support) -> String {
    let points = el.support();
    if points.is_empty() {
        return "(empty support)\n".to_string();
    }
    let cell = |r: &Rat| -> i64 { to_i64(&r.floor()) };
    let min_x = points.iter().map(|p| cell(&p.x)).min().unwrap();
    let max_x = points.iter().map(|p| cell(&p.x)).max().unwrap();
    let max_y = points.iter().map(|p| cell(&p.y)).max().unwrap();
    let min_y = points.iter().map(|p| cell(&p.y)).min().unwrap().min(0);
    let mut grid =
        vec![vec![b'.'; (max_x - min_x + 1) as usize]; (max_y - min_y + 1) as usize];
    for p in &points {
        let gx = (cell(&p.x) - min_x) as usize;
        let gy = (max_y - cell(&p.y)) as usize;
        grid[gy][gx] = b'*';
    }
    let mut out = String::new();
    for (i, row) in grid.iter().enumerate() {
        let y = max_y - i as i64;
        out.push_str(&format!("{y:>3} "));
        out.push_str(std::str::from_utf8(row).unwrap());
        out.push('\n');
    }
    out.push_str("    ");
    out.push_str(&"^".repeat((max_x - min_x + 1) as usize));
    out.push('\n');
    out.push_str(&format!("    x from {min_x} to {max_x}\n"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;

    #[test]
    fn svg_contains_points_and_edges() {
        let p = parse_element("X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7")
            .unwrap();
        let d = Direction::new(3, 2).unwrap();
        let svg = render_svg(&p, Some(&d)).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("(3,2)"));
        assert!(svg.contains("st"));
        assert!(svg.contains("en"));
        assert_eq!(svg.matches("<circle").count(), 9 + 2);
        // all emitted coordinates are integers
        for attr in ["x1=\"", "cx=\"", "cy=\""] {
            for piece in svg.split(attr).skip(1) {
                let value = piece.split('"').next().unwrap();
                assert!(value.parse::<i64>().is_ok(), "non-integer coordinate {value}");
            }
        }
    }

    #[test]
    fn exact_rounding() {
        use crate::rational::frac;
        assert_eq!(to_px(&rat(1)), 32);
        assert_eq!(to_px(&frac(1, 2)), 16);
        assert_eq!(to_px(&frac(1, 3)), 11); // 32/3 = 10.67 rounds to 11
        assert_eq!(to_px(&frac(-1, 2)), -16);
    }

    #[test]
    fn ascii_grid() {
        let p = parse_element("X^2*Y + X + Y").unwrap();
        let art = render_ascii(&p);
        assert!(art.contains('*'));
        assert_eq!(art.matches('*').count(), 3);
    }
}
