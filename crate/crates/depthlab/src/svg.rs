//! Minimal SVG output: polylines on a framed plot with axis labels.

use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct Series {
    pub points: Vec<[f64; 2]>,
    pub closed: bool,
    pub stroke: &'static str,
    pub dashed: bool,
}

#[derive(Debug, Clone)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    pub series: Vec<Series>,
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 50.0;

impl Plot {
    fn px(&self, p: [f64; 2]) -> (f64, f64) {
        let [x0, x1] = self.x_range;
        let [y0, y1] = self.y_range;
        let u = MARGIN + (p[0] - x0) / (x1 - x0) * SIZE;
        let v = MARGIN + (1.0 - (p[1] - y0) / (y1 - y0)) * SIZE;
        (u, v)
    }

    pub fn render(&self) -> String {
        let total = SIZE + 2.0 * MARGIN;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
        );
        let _ = writeln!(s, r#"<rect x="0" y="0" width="{total}" height="{total}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
            total / 2.0,
            MARGIN / 2.0,
            escape(&self.title)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="12">{}</text>"#,
            total / 2.0,
            total - 10.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="14" y="{}" text-anchor="middle" font-size="12" transform="rotate(-90 14 {})">{}</text>"#,
            total / 2.0,
            total / 2.0,
            escape(&self.y_label)
        );
        for (k, label) in [(0, self.x_range[0]), (1, self.x_range[1])] {
            let u = MARGIN + k as f64 * SIZE;
            let _ = writeln!(
                s,
                r#"<text x="{u}" y="{}" text-anchor="middle" font-size="10">{}</text>"#,
                MARGIN + SIZE + 14.0,
                tick(label)
            );
        }
        for (k, label) in [(0, self.y_range[0]), (1, self.y_range[1])] {
            let v = MARGIN + (1 - k) as f64 * SIZE;
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{v}" text-anchor="end" font-size="10">{}</text>"#,
                MARGIN - 4.0,
                tick(label)
            );
        }
        for series in &self.series {
            if series.points.len() < 2 {
                continue;
            }
            let tag = if series.closed { "polygon" } else { "polyline" };
            let mut pts = String::new();
            for &p in &series.points {
                let (u, v) = self.px(p);
                let _ = write!(pts, "{u:.2},{v:.2} ");
            }
            let dash = if series.dashed { r#" stroke-dasharray="4 3""# } else { "" };
            let _ = writeln!(
                s,
                r#"<{tag} points="{}" fill="none" stroke="{}" stroke-width="1.2"{dash}/>"#,
                pts.trim_end(),
                series.stroke
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn tick(v: f64) -> String {
    format!("{v:.3}").trim_end_matches('0').trim_end_matches('.').to_string()
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_series_and_labels() {
        let plot = Plot {
            title: "r(q) <p=2>".into(),
            x_label: "q".into(),
            y_label: "r".into(),
            x_range: [0.0, 1.0],
            y_range: [0.0, 1.0],
            series: vec![
                Series { points: vec![[0.0, 0.0], [1.0, 1.0]], closed: false, stroke: "gray", dashed: true },
                Series { points: vec![[0.5, 0.5]], closed: false, stroke: "red", dashed: false },
            ],
        };
        let svg = plot.render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("r(q) &lt;p=2&gt;"));
        assert!(svg.contains(r#"points="50.00,530.00 530.00,50.00""#));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn tick_labels() {
        assert_eq!(tick(1.0), "1");
        assert_eq!(tick(-2.25), "-2.25");
        assert_eq!(tick(0.1234), "0.123");
    }
}
