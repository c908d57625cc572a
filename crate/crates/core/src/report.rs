//! Human-readable tables and CSV for spectrum and Grassmann reports.
//!
//! Every number is printed as an exact fraction `p/q` (CSV splits it into
//! numerator and denominator columns). A decimal approximation is appended,
//! marked with `~`, only when asked for.

use std::fmt::Write;

use num_rational::Ratio;

use crate::grassmann::{CiCurveData, GrassmannSetup};
use crate::scalar::{decimal, fraction, Scalar};
use crate::spectrum::SpectrumReport;

pub const SPECTRUM_CSV_HEADER: &str = "s,nu_num,nu_den,threshold_num,threshold_den";

pub const GRASSMANN_CSV_HEADER: &str = "n,fiber_degree,deg_ln,epsilon_num,epsilon_den,cover_degree,\
quotient_degree_num,quotient_degree_den,sub_degree_num,sub_degree_den,sub_slope_num,sub_slope_den,\
sample_num,sample_den,gap_num,gap_den";

fn exact<I: Scalar>(q: &Ratio<I>, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format!("{} (~{})", fraction(q), decimal(q, d)),
        None => fraction(q),
    }
}

pub fn spectrum_csv<I: Scalar>(report: &SpectrumReport<I>) -> String {
    let mut out = String::new();
    out.push_str(SPECTRUM_CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let (t_num, t_den) = match &row.threshold {
            Some(t) => (t.numer().to_string(), t.denom().to_string()),
            None => (String::new(), String::new()),
        };
        writeln!(out, "{},{},{},{},{}", row.s, row.nu.numer(), row.nu.denom(), t_num, t_den).unwrap();
    }
    out
}

pub fn spectrum_table<I: Scalar>(report: &SpectrumReport<I>, digits: Option<usize>) -> String {
    let with_e_s = report.rows.iter().any(|row| row.e_s.is_some());
    let mut header = vec!["s", "nu_s (sup)", "bracket i", "sandwich_threshold", "equals_slope"];
    if with_e_s {
        header.push("e_s");
    }
    let mut rows: Vec<Vec<String>> = vec![header.into_iter().map(String::from).collect()];
    for row in &report.rows {
        let s = if row.endpoint { format!("{}*", row.s) } else { row.s.to_string() };
        let mut cells = vec![
            s,
            exact(&row.nu, digits),
            row.bracket_index.to_string(),
            row.threshold.as_ref().map_or("undefined".into(), |t| exact(t, digits)),
            if row.equals_slope { "yes" } else { "no" }.into(),
        ];
        if with_e_s {
            cells.push(row.e_s.as_ref().map_or("-".into(), |e| exact(e, digits)));
        }
        rows.push(cells);
    }

    let mut out = render_table(&rows);
    writeln!(out, "* s = r is the polygon end point, where nu_r = mu(V)").unwrap();
    writeln!(out, "mu(V) = {}", exact(&report.slope, digits)).unwrap();
    writeln!(
        out,
        "spectra lie in [e_s(V), {}] (upper end mu_max)",
        exact(&report.interval_upper, digits)
    )
    .unwrap();
    let verdict = if report.strongly_semistable {
        "strongly semistable: YES (nu_s = mu(V) for every s)"
    } else {
        "strongly semistable: NO (nu_s > mu(V) for every s < r)"
    };
    writeln!(out, "{verdict}").unwrap();
    out
}

fn render_table(rows: &[Vec<String>]) -> String {
    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (k, row) in rows.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", line.join(" | ").trim_end()).unwrap();
        if k == 0 {
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            writeln!(out, "{}", rule.join("-+-")).unwrap();
        }
    }
    out
}

pub fn grassmann_text<I: Scalar>(
    setup: &GrassmannSetup<I>,
    data: &CiCurveData<I>,
    digits: Option<usize>,
) -> String {
    let mut out = String::new();
    let mut line = |label: &str, value: String| writeln!(out, "{label:<34}{value}").unwrap();
    line(
        "setup",
        format!(
            "r = {}, d = {}, g = {}, s = {}, n = {}",
            setup.rank(),
            setup.degree(),
            setup.genus(),
            setup.sub_rank(),
            data.n
        ),
    );
    line("mu(V)", exact(&setup.slope(), digits));
    line("Plucker fiber degree P", data.fiber_degree.to_string());
    line("deg L_n", data.deg_ln.to_string());
    line("epsilon_n", exact(&data.epsilon_n, digits));
    line("cover degree deg(D -> C)", data.cover_degree.to_string());
    line("deg Q|_D", exact(&data.quotient_degree, digits));
    line("deg S|_D", exact(&data.sub_degree, digits));
    line("mu(S|_D)", exact(&data.sub_slope, digits));
    line("normalized sample mu(S|_D)/deg", exact(&data.normalized_sample, digits));
    line("gap mu - sample = s(2g+eps_n)/n", exact(&data.gap(setup), digits));
    out
}

pub fn grassmann_csv_header() -> String {
    format!("{GRASSMANN_CSV_HEADER}\n")
}

pub fn grassmann_csv_row<I: Scalar>(setup: &GrassmannSetup<I>, data: &CiCurveData<I>) -> String {
    let pair = |q: &Ratio<I>| format!("{},{}", q.numer(), q.denom());
    format!(
        "{},{},{},{},{},{},{},{},{},{}\n",
        data.n,
        data.fiber_degree,
        data.deg_ln,
        pair(&data.epsilon_n),
        data.cover_degree,
        pair(&data.quotient_degree),
        pair(&data.sub_degree),
        pair(&data.sub_slope),
        pair(&data.normalized_sample),
        pair(&data.gap(setup)),
    )
}
