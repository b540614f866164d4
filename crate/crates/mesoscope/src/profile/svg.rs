const PLOT: f64 = 400.0;
const LEFT: f64 = 70.0;
const TOP: f64 = 15.0;
const BOTTOM: f64 = 55.0;
const RIGHT: f64 = 15.0;

fn ramp(t: f64) -> (u8, u8, u8) {
    // White to dark blue.
    let ch = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    (ch(255.0, 8.0), ch(255.0, 48.0), ch(255.0, 107.0))
}

/// Render a bin grid (indexed `[x_bin][y_bin]` over [0,1]²) as an SVG
/// heatmap. Cell intensity is log-scaled: ln(1+count)/ln(1+max). The
/// output is a pure function of the inputs, so repeated renders are
/// byte-identical.
pub fn heatmap_svg(grid: &[Vec<u64>], x_label: &str, y_label: &str) -> String {
    let bins = grid.len();
    assert!(bins >= 1 && grid.iter().all(|row| row.len() == bins), "grid must be square");
    let max = grid.iter().flatten().copied().max().unwrap_or(0);
    let denom = ((1 + max) as f64).ln();
    let cell = PLOT / bins as f64;
    let width = LEFT + PLOT + RIGHT;
    let height = TOP + PLOT + BOTTOM;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">\n"
    ));
    s.push_str(&format!(
        "<rect x=\"{LEFT:.2}\" y=\"{TOP:.2}\" width=\"{PLOT:.2}\" height=\"{PLOT:.2}\" \
         fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));
    for (i, row) in grid.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let t = if max == 0 { 0.0 } else { ((1 + count) as f64).ln() / denom };
            let (r, g, b) = ramp(t);
            let x = LEFT + i as f64 * cell;
            let y = TOP + (bins - 1 - j) as f64 * cell;
            s.push_str(&format!(
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{cell:.2}\" height=\"{cell:.2}\" \
                 fill=\"rgb({r},{g},{b})\"/>\n"
            ));
        }
    }
    for k in 0..=4 {
        let v = k as f64 / 4.0;
        let x = LEFT + v * PLOT;
        let y = TOP + (1.0 - v) * PLOT;
        s.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{v:.2}</text>\n",
            TOP + PLOT + 16.0
        ));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{v:.2}</text>\n",
            LEFT - 6.0,
            y + 4.0
        ));
    }
    s.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\">{x_label}</text>\n",
        LEFT + PLOT / 2.0,
        TOP + PLOT + 40.0
    ));
    s.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\" \
         transform=\"rotate(-90 {:.2} {:.2})\">{y_label}</text>\n",
        18.0,
        TOP + PLOT / 2.0,
        18.0,
        TOP + PLOT / 2.0
    ));
    s.push_str("</svg>\n");
    s
}
