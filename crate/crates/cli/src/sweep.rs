//! Bias sweeps: the uniform γ grid, CSV emission, and a small
//! self-contained SVG renderer for the two standard curve families
//! (occupation weights and transferred charge fraction).

use crate::fmt::sig12;
use nensemble::{weights_from_gamma, Error};

pub struct SweepRow {
    pub gamma: f64,
    pub w_minus: f64,
    pub w_center: f64,
    pub w_plus: f64,
    pub nu_over_q: f64,
    pub entropy: f64,
}

pub const CSV_HEADER: &str = "gamma,w_minus,w_center,w_plus,nu_over_q,entropy";

/// Uniform grid over [min, max], endpoints exact.
///
/// The last point is pinned to `max` directly rather than computed,
/// since `min + span` can land one ulp off for awkward bounds.
fn grid(min: f64, max: f64, steps: usize) -> impl Iterator<Item = f64> {
    let span = max - min;
    let denom = (steps - 1) as f64;
    (0..steps).map(move |k| {
        if k == steps - 1 {
            max
        } else {
            min + span * (k as f64 / denom)
        }
    })
}

pub fn sweep_rows(q: u32, min: f64, max: f64, steps: usize) -> Result<Vec<SweepRow>, Error> {
    grid(min, max, steps)
        .map(|gamma| {
            let w = weights_from_gamma(q, gamma)?;
            Ok(SweepRow {
                gamma,
                w_minus: w.minus(),
                w_center: w.center(),
                w_plus: w.plus(),
                nu_over_q: w.charge_fraction(),
                entropy: w.entropy(),
            })
        })
        .collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&sig12(r.gamma));
        for v in [r.w_minus, r.w_center, r.w_plus, r.nu_over_q, r.entropy] {
            out.push(',');
            out.push_str(&sig12(v));
        }
        out.push('\n');
    }
    out
}

// Fixed plot geometry; all coordinates below derive from these.
const PLOT_W: f64 = 640.0;
const PLOT_H: f64 = 240.0;
const MARGIN_L: f64 = 56.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_TOP: f64 = 36.0;
const PANEL_GAP: f64 = 52.0;
const MARGIN_BOT: f64 = 44.0;

struct Panel {
    top: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Panel {
    fn x(&self, gamma: f64, min: f64, max: f64) -> f64 {
        MARGIN_L + (gamma - min) / (max - min) * PLOT_W
    }

    fn y(&self, v: f64) -> f64 {
        self.top + (self.y_hi - v) / (self.y_hi - self.y_lo) * PLOT_H
    }

    fn polyline(&self, rows: &[SweepRow], pick: impl Fn(&SweepRow) -> f64, color: &str) -> String {
        let min = rows.first().map_or(0.0, |r| r.gamma);
        let max = rows.last().map_or(1.0, |r| r.gamma);
        let points: Vec<String> = rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", self.x(r.gamma, min, max), self.y(pick(r))))
            .collect();
        format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\" points=\"{}\"/>\n",
            points.join(" ")
        )
    }

    fn frame(&self, out: &mut String, title: &str, y_ticks: &[(f64, &str)]) {
        out.push_str(&format!(
            "  <rect x=\"{MARGIN_L}\" y=\"{}\" width=\"{PLOT_W}\" height=\"{PLOT_H}\" \
             fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n",
            self.top
        ));
        out.push_str(&format!(
            "  <text x=\"{MARGIN_L}\" y=\"{:.2}\" font-size=\"14\" fill=\"#222\">{title}</text>\n",
            self.top - 10.0
        ));
        for &(v, label) in y_ticks {
            let y = self.y(v);
            out.push_str(&format!(
                "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{MARGIN_L}\" y2=\"{y:.2}\" stroke=\"#444\"/>\n",
                MARGIN_L - 4.0
            ));
            out.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#444\" text-anchor=\"end\">{label}</text>\n",
                MARGIN_L - 8.0,
                y + 4.0
            ));
        }
    }

    fn x_axis(&self, out: &mut String, min: f64, max: f64) {
        let bottom = self.top + PLOT_H;
        let ticks: &[f64] = if min < 0.0 && max > 0.0 { &[min, 0.0, max] } else { &[min, max] };
        for &g in ticks {
            let x = self.x(g, min, max);
            out.push_str(&format!(
                "  <line x1=\"{x:.2}\" y1=\"{bottom:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#444\"/>\n",
                bottom + 4.0
            ));
            out.push_str(&format!(
                "  <text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#444\" text-anchor=\"middle\">{}</text>\n",
                bottom + 16.0,
                sig12(g)
            ));
        }
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"#222\" text-anchor=\"middle\">gamma</text>\n",
            MARGIN_L + PLOT_W / 2.0,
            bottom + 32.0
        ));
    }
}

const COLOR_MINUS: &str = "#1f77b4";
const COLOR_CENTER: &str = "#555555";
const COLOR_PLUS: &str = "#d62728";
const COLOR_NU: &str = "#2ca02c";

/// Renders both panels into one standalone SVG document.
pub fn to_svg(rows: &[SweepRow], q: u32) -> String {
    let width = MARGIN_L + PLOT_W + MARGIN_R;
    let height = MARGIN_TOP + PLOT_H + PANEL_GAP + PLOT_H + MARGIN_BOT;
    let min = rows.first().map_or(0.0, |r| r.gamma);
    let max = rows.last().map_or(1.0, |r| r.gamma);

    let weights = Panel { top: MARGIN_TOP, y_lo: 0.0, y_hi: 1.0 };
    let charge = Panel { top: MARGIN_TOP + PLOT_H + PANEL_GAP, y_lo: -1.0, y_hi: 1.0 };

    let mut out = String::with_capacity(1 << 16);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));

    weights.frame(
        &mut out,
        &format!("Occupation weights, q = {q}"),
        &[(0.0, "0"), (1.0 / 3.0, "1/3"), (1.0, "1")],
    );
    out.push_str(&weights.polyline(rows, |r| r.w_minus, COLOR_MINUS));
    out.push_str(&weights.polyline(rows, |r| r.w_center, COLOR_CENTER));
    out.push_str(&weights.polyline(rows, |r| r.w_plus, COLOR_PLUS));
    for (i, (color, label)) in [
        (COLOR_MINUS, "w_minus"),
        (COLOR_CENTER, "w_center"),
        (COLOR_PLUS, "w_plus"),
    ]
    .iter()
    .enumerate()
    {
        let x = MARGIN_L + PLOT_W - 100.0;
        let y = MARGIN_TOP + 18.0 + 16.0 * i as f64;
        out.push_str(&format!(
            "  <line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"1.6\"/>\n",
            y - 4.0,
            x + 18.0,
            y - 4.0
        ));
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{y:.2}\" font-size=\"11\" fill=\"#222\">{label}</text>\n",
            x + 24.0
        ));
    }
    weights.x_axis(&mut out, min, max);

    charge.frame(
        &mut out,
        "Transferred charge fraction",
        &[(-1.0, "-1"), (0.0, "0"), (1.0, "1")],
    );
    out.push_str(&charge.polyline(rows, |r| r.nu_over_q, COLOR_NU));
    charge.x_axis(&mut out, min, max);

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_endpoints_and_center_exactly() {
        let g: Vec<f64> = grid(-5.0, 5.0, 201).collect();
        assert_eq!(g.len(), 201);
        assert_eq!(g[0], -5.0);
        assert_eq!(g[100], 0.0);
        assert_eq!(g[200], 5.0);
    }

    #[test]
    fn grid_endpoint_is_exact_for_awkward_bounds() {
        let g: Vec<f64> = grid(0.1, 0.3, 7).collect();
        assert_eq!(g[0], 0.1);
        assert_eq!(g[6], 0.3);
    }

    #[test]
    fn csv_has_exact_header_and_unix_newlines() {
        let rows = sweep_rows(1, -1.0, 1.0, 3).unwrap();
        let csv = to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(csv.lines().count(), 4);
        assert!(!csv.contains('\r'));
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn csv_center_row_is_uniform() {
        let rows = sweep_rows(1, -5.0, 5.0, 201).unwrap();
        let csv = to_csv(&rows);
        let center = csv.lines().nth(101).unwrap();
        assert_eq!(center, "0,0.333333333333,0.333333333333,0.333333333333,0,1.09861228867");
    }

    #[test]
    fn csv_parses_back_to_the_rows() {
        let rows = sweep_rows(2, -3.0, 3.0, 25).unwrap();
        let csv = to_csv(&rows);
        for (line, row) in csv.lines().skip(1).zip(&rows) {
            let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
            let mem = [row.gamma, row.w_minus, row.w_center, row.w_plus, row.nu_over_q, row.entropy];
            for (p, m) in cols.iter().zip(mem) {
                assert!((p - m).abs() <= 5e-12 * (1.0 + m.abs()), "{line}");
            }
        }
    }

    #[test]
    fn svg_is_standalone_and_carries_four_curves() {
        let rows = sweep_rows(1, -5.0, 5.0, 51).unwrap();
        let svg = to_svg(&rows, 1);
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 4);
        // no external references of any kind
        assert!(!svg.contains("http://") || svg.matches("http://").count() == 1);
        assert!(!svg.contains("href"));
    }
}
