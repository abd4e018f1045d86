//! Minimal SVG plotting: axes, vertical band segments, polylines, dots.

use std::fmt::Write;

const W: f64 = 800.0;
const H: f64 = 500.0;
const MARGIN: f64 = 60.0;

pub struct Plot {
    x: (f64, f64),
    y: (f64, f64),
    body: String,
    title: String,
}

fn pad(r: (f64, f64)) -> (f64, f64) {
    if r.1 > r.0 {
        let m = 0.04 * (r.1 - r.0);
        (r.0 - m, r.1 + m)
    } else {
        (r.0 - 1.0, r.1 + 1.0)
    }
}

impl Plot {
    pub fn new(title: &str, x: (f64, f64), y: (f64, f64)) -> Self {
        Plot {
            x: pad(x),
            y: pad(y),
            body: String::new(),
            title: title.to_string(),
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x.0) / (self.x.1 - self.x.0) * (W - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        H - MARGIN - (y - self.y.0) / (self.y.1 - self.y.0) * (H - 2.0 * MARGIN)
    }

    pub fn segment(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="{width}"/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        );
    }

    /// Vertical segment `{x} × [lo, hi]`.
    pub fn band(&mut self, x: f64, lo: f64, hi: f64, color: &str) {
        self.segment((x, lo), (x, hi), color, 1.0);
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], color: &str, width: f64) {
        let mut d = String::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.2},{:.2}", if i == 0 { "" } else { " " }, self.px(x), self.py(y));
        }
        let _ = writeln!(
            self.body,
            r#"<polyline points="{d}" fill="none" stroke="{color}" stroke-width="{width}"/>"#
        );
    }

    pub fn dot(&mut self, x: f64, y: f64, color: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.2}" cy="{:.2}" r="0.8" fill="{color}"/>"#,
            self.px(x),
            self.py(y)
        );
    }

    fn ticks(lo: f64, hi: f64) -> Vec<f64> {
        (0..=4).map(|i| lo + (hi - lo) * i as f64 / 4.0).collect()
    }

    pub fn finish(self, xlabel: &str, ylabel: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            W / 2.0,
            escape(&self.title)
        );
        let (x0, y0) = (MARGIN, H - MARGIN);
        let _ = writeln!(
            s,
            r#"<path d="M{x0},{} V{y0} H{}" fill="none" stroke="black"/>"#,
            MARGIN,
            W - MARGIN
        );
        for t in Self::ticks(self.x.0, self.x.1) {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                self.px(t),
                y0 + 18.0,
                fmt_tick(t)
            );
        }
        for t in Self::ticks(self.y.0, self.y.1) {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                x0 - 6.0,
                self.py(t) + 4.0,
                fmt_tick(t)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            W / 2.0,
            H - 18.0,
            escape(xlabel)
        );
        let _ = writeln!(
            s,
            r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
            H / 2.0,
            H / 2.0,
            escape(ylabel)
        );
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s
    }
}

fn fmt_tick(t: f64) -> String {
    let s = format!("{t:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Plot range covering all values.
pub fn range(vals: impl IntoIterator<Item = f64>) -> (f64, f64) {
    vals.into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_closed_document() {
        let mut p = Plot::new("t<1>", (0.0, 1.0), (0.0, 2.0));
        p.band(0.5, 0.0, 1.0, "#336");
        p.polyline(&[(0.0, 0.0), (1.0, 2.0)], "red", 1.0);
        let s = p.finish("x", "y");
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        assert!(s.contains("t&lt;1&gt;"));
        assert_eq!(fmt_tick(0.25), "0.25");
        assert_eq!(fmt_tick(-0.0001), "0");
    }
}
