use crate::error::{Error, Result};
use crate::metrics::{MetricRecord, PROFILE_COLUMNS};
use crate::text::format_float;

/// Natural log of the gamma function (Lanczos approximation, g = 7).
/// Relative error is below 1e-13 over the positive reals.
fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // Reflection: Γ(x)Γ(1−x) = π / sin(πx).
        std::f64::consts::PI.ln() - (std::f64::consts::PI * x).sin().ln() - ln_gamma(1.0 - x)
    } else {
        let x = x - 1.0;
        let mut acc = COEF[0];
        for (i, &c) in COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + 7.5;
        0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
    }
}

/// Continued fraction for the incomplete beta function (modified Lentz).
fn betacf(a: f64, b: f64, x: f64) -> f64 {
    const FPMIN: f64 = 1e-300;
    const EPS: f64 = 3e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=300 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Regularized incomplete beta function I_x(a, b).
fn betai(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    // The continued fraction converges fast only below the distribution mean.
    if x < (a + 1.0) / (a + b + 2.0) {
        front * betacf(a, b, x) / a
    } else {
        1.0 - front * betacf(b, a, 1.0 - x) / b
    }
}

/// Two-sided p-value of a t statistic with `df` degrees of freedom:
/// P(|T| ≥ |t|) = I_{df/(df+t²)}(df/2, 1/2).
fn t_test_p(t: f64, df: usize) -> f64 {
    let df = df as f64;
    betai(df / 2.0, 0.5, df / (df + t * t))
}

fn complete_pairs(x: &[Option<f64>], y: &[Option<f64>]) -> Vec<(f64, f64)> {
    x.iter()
        .zip(y)
        .filter_map(|(a, b)| match (a, b) {
            (Some(a), Some(b)) => Some((*a, *b)),
            _ => None,
        })
        .collect()
}

fn pearson_full(x: &[Option<f64>], y: &[Option<f64>]) -> Result<(f64, f64, usize)> {
    assert_eq!(x.len(), y.len(), "series lengths differ");
    let pairs = complete_pairs(x, y);
    let n = pairs.len();
    if n < 3 {
        return Err(Error::TooFewObservations { needed: 3, got: n });
    }
    let nf = n as f64;
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for &(a, b) in &pairs {
        sxx += (a - mean_x) * (a - mean_x);
        syy += (b - mean_y) * (b - mean_y);
        sxy += (a - mean_x) * (b - mean_y);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ConstantSeries);
    }
    let r = (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0);
    let df = n - 2;
    let one_minus_r2 = 1.0 - r * r;
    let p = if one_minus_r2 <= 0.0 {
        0.0
    } else {
        t_test_p(r * (df as f64 / one_minus_r2).sqrt(), df)
    };
    Ok((r, p, n))
}

/// Pearson correlation between two series with missing entries, dropping a
/// position only where either value is missing. Returns (r, two-sided p).
pub fn pearson(x: &[Option<f64>], y: &[Option<f64>]) -> Result<(f64, f64)> {
    pearson_full(x, y).map(|(r, p, _)| (r, p))
}

/// All-pairs Pearson correlations over the profile columns of a record set.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    pub metric_names: Vec<String>,
    pub r: Vec<Vec<f64>>,
    pub p: Vec<Vec<f64>>,
    pub n_obs: Vec<Vec<usize>>,
    pub mask_threshold: f64,
}

impl CorrelationMatrix {
    /// True when the entry's significance is too weak to report
    /// (p above the threshold). Diagonal entries are never masked.
    pub fn masked(&self, i: usize, j: usize) -> bool {
        i != j && self.p[i][j] > self.mask_threshold
    }
}

pub fn correlation_matrix(
    records: &[MetricRecord],
    mask_threshold: f64,
) -> Result<CorrelationMatrix> {
    if records.len() < 3 {
        return Err(Error::TooFewObservations { needed: 3, got: records.len() });
    }
    let cols: Vec<Vec<Option<f64>>> = (0..PROFILE_COLUMNS.len())
        .map(|c| records.iter().map(|rec| rec.profile_value(c)).collect())
        .collect();
    let k = cols.len();
    let mut r = vec![vec![0.0; k]; k];
    let mut p = vec![vec![0.0; k]; k];
    let mut n_obs = vec![vec![0usize; k]; k];
    for i in 0..k {
        r[i][i] = 1.0;
        n_obs[i][i] = cols[i].iter().flatten().count();
        for j in (i + 1)..k {
            let (rij, pij, nij) = pearson_full(&cols[i], &cols[j])?;
            r[i][j] = rij;
            r[j][i] = rij;
            p[i][j] = pij;
            p[j][i] = pij;
            n_obs[i][j] = nij;
            n_obs[j][i] = nij;
        }
    }
    Ok(CorrelationMatrix {
        metric_names: PROFILE_COLUMNS.iter().map(|s| s.to_string()).collect(),
        r,
        p,
        n_obs,
        mask_threshold,
    })
}

/// CSV rendering of the r matrix, one row per metric.
pub fn correlation_to_csv(m: &CorrelationMatrix) -> String {
    let mut out = String::from("metric");
    for name in &m.metric_names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (i, name) in m.metric_names.iter().enumerate() {
        out.push_str(name);
        for j in 0..m.metric_names.len() {
            out.push(',');
            out.push_str(&format_float(m.r[i][j]));
        }
        out.push('\n');
    }
    out
}

/// CSV mask parallel to the r matrix: 1 marks an entry whose p-value
/// exceeds the threshold, 0 a reportable one.
pub fn mask_to_csv(m: &CorrelationMatrix) -> String {
    let mut out = String::from("metric");
    for name in &m.metric_names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (i, name) in m.metric_names.iter().enumerate() {
        out.push_str(name);
        for j in 0..m.metric_names.len() {
            out.push(',');
            out.push(if m.masked(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
