//! Scenario file model: a line-oriented `section { key = value }` format, a
//! parser that reports the offending key and line for every failure, and a
//! canonical emitter such that `parse(emit(s)) == s` for any valid scenario.
//!
//! Sections: `radar` and `target` are required and unique; `null_sector` and
//! `bs` repeat; `grid`, `nsp`, and `search` are optional and unique. `#`
//! starts a comment anywhere on a line. Unset keys take the documented
//! defaults, so a parsed scenario always has every field populated.

use nullsteer::array_geometry::sample_axis;

/// Hard cap on grid points, mirrored from the evaluation limit so oversized
/// grids fail at parse time with a line number instead of mid-run.
const MAX_GRID_POINTS: usize = nullsteer::beamform::MAX_GRID_POINTS;

/// Transmit array description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadarSpec {
    pub m_h: usize,
    pub m_v: usize,
    /// Element spacing in wavelengths. Default 0.5.
    pub spacing: f64,
}

/// Mainbeam steering direction in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetSpec {
    pub az_deg: f64,
    pub el_deg: f64,
}

/// Angular box to null, with the constraint sampling step in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorSpec {
    pub az_min: f64,
    pub az_max: f64,
    pub el_min: f64,
    pub el_max: f64,
    /// Default 1.
    pub step: f64,
}

/// One protected base station. The receiver size and path gain document the
/// link; nulling depends only on the direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BsSpec {
    pub az_deg: f64,
    pub el_deg: f64,
    pub n: usize,
    pub gain_re: f64,
    pub gain_im: f64,
}

/// Beampattern evaluation grid in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub az_min: f64,
    pub az_max: f64,
    pub az_step: f64,
    pub el_min: f64,
    pub el_max: f64,
    pub el_step: f64,
}

impl Default for GridSpec {
    /// Azimuth [-90, 90], elevation [0, 90], 1 degree steps. The elevation
    /// half-range avoids the exact mirror-angle peak tie of the cosine
    /// steering convention.
    fn default() -> Self {
        GridSpec {
            az_min: -90.0,
            az_max: 90.0,
            az_step: 1.0,
            el_min: 0.0,
            el_max: 90.0,
            el_step: 1.0,
        }
    }
}

/// How the blocked angular area is obtained at each standoff distance.
#[derive(Debug, Clone, PartialEq)]
pub enum Blockage {
    /// Planar region faced broadside; the subtended area follows from
    /// geometry at each distance.
    Region {
        width_m: f64,
        height_min_m: f64,
        height_max_m: f64,
    },
    /// Blocked area in square degrees given directly, one value per distance.
    NullAreas(Vec<f64>),
}

/// Search-volume accounting request.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub az_extent: f64,
    pub el_extent: f64,
    pub distances: Vec<f64>,
    pub blockage: Blockage,
}

/// Fully resolved scenario: parsing fills every default, so two scenarios
/// compare equal exactly when they describe the same run.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub radar: RadarSpec,
    pub target: TargetSpec,
    pub null_sectors: Vec<SectorSpec>,
    pub bs_list: Vec<BsSpec>,
    pub grid: GridSpec,
    /// Relative singular-value tolerance for null selection. Default 1e-10.
    pub nsp_tolerance: f64,
    /// When set, the emitted grid is shifted so its peak sits at this level.
    pub peak_normalization_db: Option<f64>,
    pub search: Option<SearchSpec>,
}

/// Parse failure with enough position information to fix the file.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {detail}; got `{text}`")]
    Syntax {
        line: usize,
        detail: &'static str,
        text: String,
    },

    #[error("line {line}: unknown section `{name}`")]
    UnknownSection { line: usize, name: String },

    #[error("line {line}: unknown key `{key}` in section `{section}`")]
    UnknownKey {
        line: usize,
        section: String,
        key: String,
    },

    #[error("line {line}: duplicate key `{key}` in section `{section}`")]
    DuplicateKey {
        line: usize,
        section: String,
        key: String,
    },

    #[error("line {line}: section `{name}` appears more than once")]
    DuplicateSection { line: usize, name: &'static str },

    #[error("missing required section `{name}`")]
    MissingSection { name: &'static str },

    #[error("section `{section}` at line {line}: missing required key `{key}`")]
    MissingKey {
        section: &'static str,
        line: usize,
        key: &'static str,
    },

    #[error("line {line}: key `{key}`: {detail}")]
    InvalidValue {
        line: usize,
        key: String,
        detail: String,
    },

    #[error("line {line}: `}}` with no open section")]
    UnmatchedClose { line: usize },

    #[error("section `{name}` at line {line} is never closed")]
    UnclosedSection { name: String, line: usize },
}

type PResult<T> = std::result::Result<T, ParseError>;

struct RawEntry {
    key: String,
    value: String,
    line: usize,
}

struct RawSection {
    name: String,
    line: usize,
    entries: Vec<RawEntry>,
}

fn lex(text: &str) -> PResult<Vec<RawSection>> {
    let mut sections = Vec::new();
    let mut open: Option<RawSection> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if line == "}" {
            match open.take() {
                Some(sec) => sections.push(sec),
                None => return Err(ParseError::UnmatchedClose { line: line_no }),
            }
            continue;
        }
        if let Some(head) = line.strip_suffix('{') {
            let name = head.trim();
            if open.is_some() {
                return Err(ParseError::Syntax {
                    line: line_no,
                    detail: "sections do not nest",
                    text: line.to_string(),
                });
            }
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(ParseError::Syntax {
                    line: line_no,
                    detail: "expected `name {`",
                    text: line.to_string(),
                });
            }
            open = Some(RawSection {
                name: name.to_string(),
                line: line_no,
                entries: Vec::new(),
            });
            continue;
        }
        if let Some((k, v)) = line.split_once('=') {
            let key = k.trim();
            let value = v.trim();
            let sec = open.as_mut().ok_or(ParseError::Syntax {
                line: line_no,
                detail: "key outside any section",
                text: line.to_string(),
            })?;
            if key.is_empty() || value.is_empty() {
                return Err(ParseError::Syntax {
                    line: line_no,
                    detail: "expected `key = value`",
                    text: line.to_string(),
                });
            }
            if sec.entries.iter().any(|e| e.key == key) {
                return Err(ParseError::DuplicateKey {
                    line: line_no,
                    section: sec.name.clone(),
                    key: key.to_string(),
                });
            }
            sec.entries.push(RawEntry {
                key: key.to_string(),
                value: value.to_string(),
                line: line_no,
            });
            continue;
        }
        return Err(ParseError::Syntax {
            line: line_no,
            detail: "expected `name {`, `key = value`, or `}`",
            text: line.to_string(),
        });
    }
    if let Some(sec) = open {
        return Err(ParseError::UnclosedSection {
            name: sec.name,
            line: sec.line,
        });
    }
    Ok(sections)
}

fn parse_f64(value: &str, key: &str, line: usize) -> PResult<f64> {
    let x: f64 = value.parse().map_err(|_| ParseError::InvalidValue {
        line,
        key: key.to_string(),
        detail: format!("`{value}` is not a number"),
    })?;
    if !x.is_finite() {
        return Err(ParseError::InvalidValue {
            line,
            key: key.to_string(),
            detail: "must be finite".to_string(),
        });
    }
    Ok(x)
}

fn parse_usize(value: &str, key: &str, line: usize) -> PResult<usize> {
    value.parse().map_err(|_| ParseError::InvalidValue {
        line,
        key: key.to_string(),
        detail: format!("`{value}` is not a non-negative integer"),
    })
}

/// Typed key access over one raw section, tracking which entries were
/// consumed so leftovers surface as unknown keys.
struct Reader<'a> {
    sec: &'a RawSection,
    tag: &'static str,
    used: Vec<bool>,
}

impl<'a> Reader<'a> {
    fn new(sec: &'a RawSection, tag: &'static str) -> Self {
        let used = vec![false; sec.entries.len()];
        Reader { sec, tag, used }
    }

    fn lookup(&mut self, key: &str) -> Option<(&'a str, usize)> {
        for (i, e) in self.sec.entries.iter().enumerate() {
            if e.key == key {
                self.used[i] = true;
                return Some((&e.value, e.line));
            }
        }
        None
    }

    fn missing(&self, key: &'static str) -> ParseError {
        ParseError::MissingKey {
            section: self.tag,
            line: self.sec.line,
            key,
        }
    }

    fn req_f64(&mut self, key: &'static str) -> PResult<(f64, usize)> {
        let (v, line) = self.lookup(key).ok_or_else(|| self.missing(key))?;
        Ok((parse_f64(v, key, line)?, line))
    }

    fn opt_f64(&mut self, key: &'static str) -> PResult<Option<(f64, usize)>> {
        match self.lookup(key) {
            Some((v, line)) => Ok(Some((parse_f64(v, key, line)?, line))),
            None => Ok(None),
        }
    }

    fn req_usize(&mut self, key: &'static str) -> PResult<(usize, usize)> {
        let (v, line) = self.lookup(key).ok_or_else(|| self.missing(key))?;
        Ok((parse_usize(v, key, line)?, line))
    }

    fn req_f64_list(&mut self, key: &'static str) -> PResult<(Vec<f64>, usize)> {
        self.opt_f64_list(key)?.ok_or_else(|| self.missing(key))
    }

    fn opt_f64_list(&mut self, key: &'static str) -> PResult<Option<(Vec<f64>, usize)>> {
        let Some((v, line)) = self.lookup(key) else {
            return Ok(None);
        };
        let mut out = Vec::new();
        for item in v.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(ParseError::InvalidValue {
                    line,
                    key: key.to_string(),
                    detail: "empty element in list".to_string(),
                });
            }
            out.push(parse_f64(item, key, line)?);
        }
        Ok(Some((out, line)))
    }

    fn finish(self) -> PResult<()> {
        for (i, e) in self.sec.entries.iter().enumerate() {
            if !self.used[i] {
                return Err(ParseError::UnknownKey {
                    line: e.line,
                    section: self.sec.name.clone(),
                    key: e.key.clone(),
                });
            }
        }
        Ok(())
    }
}

fn invalid(line: usize, key: &str, detail: impl Into<String>) -> ParseError {
    ParseError::InvalidValue {
        line,
        key: key.to_string(),
        detail: detail.into(),
    }
}

fn check_positive(x: f64, key: &str, line: usize) -> PResult<()> {
    if x <= 0.0 {
        return Err(invalid(line, key, format!("must be positive, got {x}")));
    }
    Ok(())
}

fn check_range(x: f64, lo: f64, hi: f64, key: &str, line: usize) -> PResult<()> {
    if x < lo || x > hi {
        return Err(invalid(line, key, format!("{x} outside [{lo}, {hi}]")));
    }
    Ok(())
}

fn read_radar(sec: &RawSection) -> PResult<RadarSpec> {
    let mut r = Reader::new(sec, "radar");
    let (m_h, m_h_line) = r.req_usize("m_h")?;
    let (m_v, m_v_line) = r.req_usize("m_v")?;
    let spacing = r.opt_f64("spacing")?;
    r.finish()?;
    if m_h == 0 {
        return Err(invalid(m_h_line, "m_h", "must be at least 1"));
    }
    if m_v == 0 {
        return Err(invalid(m_v_line, "m_v", "must be at least 1"));
    }
    let spacing = match spacing {
        Some((s, line)) => {
            check_positive(s, "spacing", line)?;
            s
        }
        None => 0.5,
    };
    Ok(RadarSpec { m_h, m_v, spacing })
}

fn read_target(sec: &RawSection) -> PResult<TargetSpec> {
    let mut r = Reader::new(sec, "target");
    let (az, az_line) = r.req_f64("az_deg")?;
    let (el, el_line) = r.req_f64("el_deg")?;
    r.finish()?;
    check_range(az, -180.0, 180.0, "az_deg", az_line)?;
    check_range(el, -90.0, 90.0, "el_deg", el_line)?;
    Ok(TargetSpec {
        az_deg: az,
        el_deg: el,
    })
}

fn read_sector(sec: &RawSection) -> PResult<SectorSpec> {
    let mut r = Reader::new(sec, "null_sector");
    let (az_min, _) = r.req_f64("az_min")?;
    let (az_max, az_max_line) = r.req_f64("az_max")?;
    let (el_min, _) = r.req_f64("el_min")?;
    let (el_max, el_max_line) = r.req_f64("el_max")?;
    let step = r.opt_f64("step")?;
    r.finish()?;
    if az_max < az_min {
        return Err(invalid(az_max_line, "az_max", "below az_min"));
    }
    if el_max < el_min {
        return Err(invalid(el_max_line, "el_max", "below el_min"));
    }
    let step = match step {
        Some((s, line)) => {
            check_positive(s, "step", line)?;
            s
        }
        None => 1.0,
    };
    Ok(SectorSpec {
        az_min,
        az_max,
        el_min,
        el_max,
        step,
    })
}

fn read_bs(sec: &RawSection) -> PResult<BsSpec> {
    let mut r = Reader::new(sec, "bs");
    let (az, az_line) = r.req_f64("az_deg")?;
    let (el, el_line) = r.req_f64("el_deg")?;
    let (n, n_line) = r.req_usize("n")?;
    let gain_re = r.opt_f64("gain_re")?;
    let gain_im = r.opt_f64("gain_im")?;
    r.finish()?;
    check_range(az, -180.0, 180.0, "az_deg", az_line)?;
    check_range(el, -90.0, 90.0, "el_deg", el_line)?;
    if n == 0 {
        return Err(invalid(n_line, "n", "must be at least 1"));
    }
    let (re, re_line) = gain_re.unwrap_or((1.0, sec.line));
    let im = gain_im.map(|(v, _)| v).unwrap_or(0.0);
    if re == 0.0 && im == 0.0 {
        return Err(invalid(re_line, "gain_re", "path gain must be nonzero"));
    }
    Ok(BsSpec {
        az_deg: az,
        el_deg: el,
        n,
        gain_re: re,
        gain_im: im,
    })
}

fn read_grid(sec: &RawSection) -> PResult<GridSpec> {
    let mut r = Reader::new(sec, "grid");
    let d = GridSpec::default();
    let az_min = r.opt_f64("az_min")?;
    let az_max = r.opt_f64("az_max")?;
    let az_step = r.opt_f64("az_step")?;
    let el_min = r.opt_f64("el_min")?;
    let el_max = r.opt_f64("el_max")?;
    let el_step = r.opt_f64("el_step")?;
    r.finish()?;
    let take = |v: Option<(f64, usize)>, dflt: f64| v.map(|(x, _)| x).unwrap_or(dflt);
    let g = GridSpec {
        az_min: take(az_min, d.az_min),
        az_max: take(az_max, d.az_max),
        az_step: take(az_step, d.az_step),
        el_min: take(el_min, d.el_min),
        el_max: take(el_max, d.el_max),
        el_step: take(el_step, d.el_step),
    };
    if let Some((s, line)) = az_step {
        check_positive(s, "az_step", line)?;
    }
    if let Some((s, line)) = el_step {
        check_positive(s, "el_step", line)?;
    }
    if g.az_max < g.az_min {
        let line = az_max.or(az_min).map(|(_, l)| l).unwrap_or(sec.line);
        return Err(invalid(line, "az_max", "below az_min"));
    }
    if g.el_max < g.el_min {
        let line = el_max.or(el_min).map(|(_, l)| l).unwrap_or(sec.line);
        return Err(invalid(line, "el_max", "below el_min"));
    }
    Ok(g)
}

struct NspSection {
    tolerance: f64,
    peak_normalization_db: Option<f64>,
}

fn read_nsp(sec: &RawSection) -> PResult<NspSection> {
    let mut r = Reader::new(sec, "nsp");
    let tolerance = r.opt_f64("tolerance")?;
    let normalization = r.opt_f64("peak_normalization_db")?;
    r.finish()?;
    let tolerance = match tolerance {
        Some((t, line)) => {
            if t < 0.0 {
                return Err(invalid(line, "tolerance", format!("must not be negative, got {t}")));
            }
            t
        }
        None => 1e-10,
    };
    Ok(NspSection {
        tolerance,
        peak_normalization_db: normalization.map(|(v, _)| v),
    })
}

fn read_search(sec: &RawSection) -> PResult<SearchSpec> {
    let mut r = Reader::new(sec, "search");
    let (az_extent, az_line) = r.req_f64("az_extent")?;
    let (el_extent, el_line) = r.req_f64("el_extent")?;
    let width = r.opt_f64("region_width_m")?;
    let hmin = r.opt_f64("region_hmin_m")?;
    let hmax = r.opt_f64("region_hmax_m")?;
    let nulls = r.opt_f64_list("null_deg2")?;
    let (distances, dist_line) = r.req_f64_list("distances")?;
    r.finish()?;

    if az_extent <= 0.0 || az_extent > 360.0 {
        return Err(invalid(az_line, "az_extent", format!("{az_extent} outside (0, 360]")));
    }
    if el_extent <= 0.0 || el_extent > 180.0 {
        return Err(invalid(el_line, "el_extent", format!("{el_extent} outside (0, 180]")));
    }
    if distances.is_empty() {
        return Err(invalid(dist_line, "distances", "needs at least one distance"));
    }
    for &d in &distances {
        if d <= 0.0 {
            return Err(invalid(dist_line, "distances", format!("must be positive, got {d}")));
        }
    }

    let any_region = width.is_some() || hmin.is_some() || hmax.is_some();
    let blockage = match (&nulls, any_region) {
        (Some((_, line)), true) => {
            return Err(invalid(
                *line,
                "null_deg2",
                "mutually exclusive with the region_* keys",
            ));
        }
        (Some((values, line)), false) => {
            if values.len() != distances.len() {
                return Err(invalid(
                    *line,
                    "null_deg2",
                    format!(
                        "{} values for {} distances",
                        values.len(),
                        distances.len()
                    ),
                ));
            }
            let area = az_extent * el_extent;
            for &v in values {
                if !(0.0..=area).contains(&v) {
                    return Err(invalid(
                        *line,
                        "null_deg2",
                        format!("{v} outside [0, {area}] (the extent area)"),
                    ));
                }
            }
            Blockage::NullAreas(values.clone())
        }
        (None, _) => {
            let (w, w_line) = width.ok_or(ParseError::MissingKey {
                section: "search",
                line: sec.line,
                key: "region_width_m (or null_deg2)",
            })?;
            let (lo, _) = hmin.ok_or(ParseError::MissingKey {
                section: "search",
                line: sec.line,
                key: "region_hmin_m",
            })?;
            let (hi, hi_line) = hmax.ok_or(ParseError::MissingKey {
                section: "search",
                line: sec.line,
                key: "region_hmax_m",
            })?;
            if w < 0.0 {
                return Err(invalid(w_line, "region_width_m", format!("must not be negative, got {w}")));
            }
            if hi < lo {
                return Err(invalid(hi_line, "region_hmax_m", "below region_hmin_m"));
            }
            Blockage::Region {
                width_m: w,
                height_min_m: lo,
                height_max_m: hi,
            }
        }
    };

    Ok(SearchSpec {
        az_extent,
        el_extent,
        distances,
        blockage,
    })
}

/// Parses scenario text into a fully defaulted [`Scenario`].
///
/// Cross-field rules checked here so runs cannot fail on scenario mistakes:
/// the grid must stay within the evaluation size limit, and every null
/// sector must contain at least one grid sample (sector metrics over an
/// empty cell set are undefined).
pub fn parse_scenario(text: &str) -> PResult<Scenario> {
    let sections = lex(text)?;

    let mut radar: Option<RadarSpec> = None;
    let mut target: Option<TargetSpec> = None;
    let mut grid: Option<(GridSpec, usize)> = None;
    let mut nsp: Option<NspSection> = None;
    let mut search: Option<SearchSpec> = None;
    let mut sectors: Vec<(SectorSpec, usize)> = Vec::new();
    let mut bs_list: Vec<BsSpec> = Vec::new();

    for sec in &sections {
        match sec.name.as_str() {
            "radar" => {
                if radar.is_some() {
                    return Err(ParseError::DuplicateSection {
                        line: sec.line,
                        name: "radar",
                    });
                }
                radar = Some(read_radar(sec)?);
            }
            "target" => {
                if target.is_some() {
                    return Err(ParseError::DuplicateSection {
                        line: sec.line,
                        name: "target",
                    });
                }
                target = Some(read_target(sec)?);
            }
            "null_sector" => sectors.push((read_sector(sec)?, sec.line)),
            "bs" => bs_list.push(read_bs(sec)?),
            "grid" => {
                if grid.is_some() {
                    return Err(ParseError::DuplicateSection {
                        line: sec.line,
                        name: "grid",
                    });
                }
                grid = Some((read_grid(sec)?, sec.line));
            }
            "nsp" => {
                if nsp.is_some() {
                    return Err(ParseError::DuplicateSection {
                        line: sec.line,
                        name: "nsp",
                    });
                }
                nsp = Some(read_nsp(sec)?);
            }
            "search" => {
                if search.is_some() {
                    return Err(ParseError::DuplicateSection {
                        line: sec.line,
                        name: "search",
                    });
                }
                search = Some(read_search(sec)?);
            }
            _ => {
                return Err(ParseError::UnknownSection {
                    line: sec.line,
                    name: sec.name.clone(),
                });
            }
        }
    }

    let radar = radar.ok_or(ParseError::MissingSection { name: "radar" })?;
    let target = target.ok_or(ParseError::MissingSection { name: "target" })?;
    let (grid, grid_line) = grid
        .map(|(g, line)| (g, line))
        .unwrap_or((GridSpec::default(), 0));
    let nsp = nsp.unwrap_or(NspSection {
        tolerance: 1e-10,
        peak_normalization_db: None,
    });

    // Grid samples drive both the size cap and the sector overlap check.
    // Step positivity and ordering were validated above, so sample_axis can
    // only fail on the per-axis size limit; the default grid never fails,
    // so grid_line is always a real line when these errors fire.
    let grid_err = |key: &str, e: nullsteer::Error| ParseError::InvalidValue {
        line: grid_line,
        key: key.to_string(),
        detail: e.to_string(),
    };
    let az_samples =
        sample_axis(grid.az_min, grid.az_max, grid.az_step).map_err(|e| grid_err("az_step", e))?;
    let el_samples =
        sample_axis(grid.el_min, grid.el_max, grid.el_step).map_err(|e| grid_err("el_step", e))?;
    if az_samples.len().saturating_mul(el_samples.len()) > MAX_GRID_POINTS {
        return Err(ParseError::InvalidValue {
            line: grid_line,
            key: "grid".to_string(),
            detail: format!(
                "{} x {} samples exceed the {} point limit",
                az_samples.len(),
                el_samples.len(),
                MAX_GRID_POINTS
            ),
        });
    }
    for (sector, line) in &sectors {
        let az_hit = az_samples
            .iter()
            .any(|&a| a >= sector.az_min && a <= sector.az_max);
        let el_hit = el_samples
            .iter()
            .any(|&e| e >= sector.el_min && e <= sector.el_max);
        if !az_hit || !el_hit {
            return Err(ParseError::InvalidValue {
                line: *line,
                key: "null_sector".to_string(),
                detail: "contains no grid sample; widen the sector or refine the grid".to_string(),
            });
        }
    }

    Ok(Scenario {
        radar,
        target,
        null_sectors: sectors.into_iter().map(|(s, _)| s).collect(),
        bs_list,
        grid,
        nsp_tolerance: nsp.tolerance,
        peak_normalization_db: nsp.peak_normalization_db,
        search,
    })
}

fn push_section(out: &mut String, name: &str, keys: &[(&str, String)]) {
    out.push_str(name);
    out.push_str(" {\n");
    for (k, v) in keys {
        out.push_str("  ");
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(v);
        out.push('\n');
    }
    out.push_str("}\n");
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn num_list(xs: &[f64]) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&num(*x));
    }
    s
}

/// Canonical text for a scenario: fixed section order, every default written
/// out. Values use the shortest decimal form that parses back to the same
/// float, so `parse_scenario(emit_scenario(s)) == s`.
pub fn emit_scenario(s: &Scenario) -> String {
    let mut out = String::new();
    push_section(
        &mut out,
        "radar",
        &[
            ("m_h", s.radar.m_h.to_string()),
            ("m_v", s.radar.m_v.to_string()),
            ("spacing", num(s.radar.spacing)),
        ],
    );
    out.push('\n');
    push_section(
        &mut out,
        "target",
        &[
            ("az_deg", num(s.target.az_deg)),
            ("el_deg", num(s.target.el_deg)),
        ],
    );
    for sector in &s.null_sectors {
        out.push('\n');
        push_section(
            &mut out,
            "null_sector",
            &[
                ("az_min", num(sector.az_min)),
                ("az_max", num(sector.az_max)),
                ("el_min", num(sector.el_min)),
                ("el_max", num(sector.el_max)),
                ("step", num(sector.step)),
            ],
        );
    }
    for bs in &s.bs_list {
        out.push('\n');
        push_section(
            &mut out,
            "bs",
            &[
                ("az_deg", num(bs.az_deg)),
                ("el_deg", num(bs.el_deg)),
                ("n", bs.n.to_string()),
                ("gain_re", num(bs.gain_re)),
                ("gain_im", num(bs.gain_im)),
            ],
        );
    }
    out.push('\n');
    push_section(
        &mut out,
        "grid",
        &[
            ("az_min", num(s.grid.az_min)),
            ("az_max", num(s.grid.az_max)),
            ("az_step", num(s.grid.az_step)),
            ("el_min", num(s.grid.el_min)),
            ("el_max", num(s.grid.el_max)),
            ("el_step", num(s.grid.el_step)),
        ],
    );
    out.push('\n');
    let mut nsp_keys = vec![("tolerance", num(s.nsp_tolerance))];
    if let Some(level) = s.peak_normalization_db {
        nsp_keys.push(("peak_normalization_db", num(level)));
    }
    push_section(&mut out, "nsp", &nsp_keys);
    if let Some(search) = &s.search {
        out.push('\n');
        let mut keys = vec![
            ("az_extent", num(search.az_extent)),
            ("el_extent", num(search.el_extent)),
        ];
        match &search.blockage {
            Blockage::Region {
                width_m,
                height_min_m,
                height_max_m,
            } => {
                keys.push(("region_width_m", num(*width_m)));
                keys.push(("region_hmin_m", num(*height_min_m)));
                keys.push(("region_hmax_m", num(*height_max_m)));
            }
            Blockage::NullAreas(values) => keys.push(("null_deg2", num_list(values))),
        }
        keys.push(("distances", num_list(&search.distances)));
        push_section(&mut out, "search", &keys);
    }
    out
}
