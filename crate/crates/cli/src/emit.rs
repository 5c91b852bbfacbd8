//! Deterministic artifact emission: one number formatter shared by every
//! file, hand-assembled CSV/JSON bodies with a fixed key order, and
//! write-then-rename so readers never observe a partial file.

use std::fs;
use std::io;
use std::path::Path;

use nullsteer::BeampatternGrid64;

use crate::run::{RunSummary, SearchReport};

/// Formats to 9 significant digits with trailing zeros trimmed, switching to
/// exponent form outside [1e-4, 1e9). The mapping from value to text is pure,
/// so identical runs serialize byte-identically, and rounding at fixed
/// precision is monotone, so ordering comparisons on formatted values agree
/// with the underlying floats.
pub fn fmt_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("{:.8e} always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 9);

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (0..9).contains(&exp) {
        let point = (exp + 1) as usize;
        out.push_str(&digits[..point]);
        let frac = digits[point..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if (-4..0).contains(&exp) {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    } else {
        out.push_str(&digits[..1]);
        let frac = digits[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

/// Grid CSV, azimuth-major: all elevations for the first azimuth, then the
/// next azimuth, matching the peak tie-break scan order.
pub fn beampattern_csv(grid: &BeampatternGrid64) -> String {
    let az = grid.az_samples();
    let el = grid.el_samples();
    let g = grid.gain_db();
    let mut out = String::with_capacity(az.len() * el.len() * 24 + 32);
    out.push_str("az_deg,el_deg,gain_db\n");
    for (ai, &a) in az.iter().enumerate() {
        for (ei, &e) in el.iter().enumerate() {
            out.push_str(&fmt_sig9(a));
            out.push(',');
            out.push_str(&fmt_sig9(e));
            out.push(',');
            out.push_str(&fmt_sig9(g[(ei, ai)]));
            out.push('\n');
        }
    }
    out
}

/// Distance sweep CSV, one row per standoff distance.
pub fn search_csv(report: &SearchReport) -> String {
    let mut out = String::from("distance_m,percent_searchable\n");
    for p in &report.points {
        out.push_str(&fmt_sig9(p.distance_m));
        out.push(',');
        out.push_str(&fmt_sig9(p.percent_searchable));
        out.push('\n');
    }
    out
}

fn json_field(out: &mut String, indent: usize, key: &str, value: &str, last: bool) {
    for _ in 0..indent {
        out.push(' ');
    }
    out.push('"');
    out.push_str(key);
    out.push_str("\": ");
    out.push_str(value);
    if !last {
        out.push(',');
    }
    out.push('\n');
}

/// Run summary as JSON with a fixed key order. Wall-clock time is deliberately
/// absent: the file must be byte-identical across repeated runs.
pub fn summary_json(s: &RunSummary) -> String {
    let mut out = String::from("{\n");
    json_field(&mut out, 2, "peak_db", &fmt_sig9(s.peak_db), false);
    json_field(
        &mut out,
        2,
        "peak_angle",
        &format!(
            "{{ \"az_deg\": {}, \"el_deg\": {} }}",
            fmt_sig9(s.peak_az_deg),
            fmt_sig9(s.peak_el_deg)
        ),
        false,
    );
    json_field(
        &mut out,
        2,
        "projector_rank",
        &format!(
            "{{ \"azimuth\": {}, \"elevation\": {} }}",
            s.rank_azimuth, s.rank_elevation
        ),
        false,
    );

    if s.sectors.is_empty() {
        json_field(&mut out, 2, "sectors", "[]", false);
    } else {
        out.push_str("  \"sectors\": [\n");
        for (i, sec) in s.sectors.iter().enumerate() {
            out.push_str("    {\n");
            json_field(&mut out, 6, "az_min_deg", &fmt_sig9(sec.spec.az_min), false);
            json_field(&mut out, 6, "az_max_deg", &fmt_sig9(sec.spec.az_max), false);
            json_field(&mut out, 6, "el_min_deg", &fmt_sig9(sec.spec.el_min), false);
            json_field(&mut out, 6, "el_max_deg", &fmt_sig9(sec.spec.el_max), false);
            json_field(&mut out, 6, "max_db", &fmt_sig9(sec.max_db), false);
            json_field(&mut out, 6, "mean_db", &fmt_sig9(sec.mean_db), false);
            json_field(
                &mut out,
                6,
                "peak_to_sector_db",
                &fmt_sig9(sec.peak_to_sector_db),
                true,
            );
            out.push_str(if i + 1 == s.sectors.len() {
                "    }\n"
            } else {
                "    },\n"
            });
        }
        out.push_str("  ],\n");
    }

    if let Some(search) = &s.search {
        out.push_str("  \"search\": {\n");
        json_field(
            &mut out,
            4,
            "az_extent_deg",
            &fmt_sig9(search.az_extent_deg),
            false,
        );
        json_field(
            &mut out,
            4,
            "el_extent_deg",
            &fmt_sig9(search.el_extent_deg),
            false,
        );
        json_field(&mut out, 4, "omega_sr", &fmt_sig9(search.omega_sr), false);
        out.push_str("    \"points\": [\n");
        for (i, p) in search.points.iter().enumerate() {
            out.push_str("      {\n");
            json_field(&mut out, 8, "distance_m", &fmt_sig9(p.distance_m), false);
            json_field(&mut out, 8, "null_deg2", &fmt_sig9(p.null_deg2), false);
            json_field(&mut out, 8, "omega_nsp_sr", &fmt_sig9(p.omega_nsp_sr), false);
            json_field(
                &mut out,
                8,
                "percent_searchable",
                &fmt_sig9(p.percent_searchable),
                true,
            );
            out.push_str(if i + 1 == search.points.len() {
                "      }\n"
            } else {
                "      },\n"
            });
        }
        out.push_str("    ]\n");
        out.push_str("  }\n");
    } else {
        out.push_str("  \"search\": null\n");
    }
    out.push_str("}\n");
    out
}

/// Writes through a same-directory temporary file and renames it over the
/// target, so an interrupted run leaves either the old file or the new one,
/// never a truncated mix.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
    }
    let file_name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(".tmp");
    let tmp = match dir {
        Some(d) => d.join(&tmp_name),
        None => std::path::PathBuf::from(&tmp_name),
    };
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}
