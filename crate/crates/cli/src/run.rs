//! Scenario execution: constraints, projectors, covariance combination, grid
//! evaluation, sector metrics, and the optional search-volume report. All
//! numbers are computed before the first file is touched, so a numerical
//! failure leaves the output directory unchanged.

use std::path::{Path, PathBuf};
use std::time::Instant;

use nullsteer::array_geometry::{sample_axis, steering_azimuth, steering_elevation, AngleDeg};
use nullsteer::beamform::{
    beampattern, combine_nsp_covariance, sector_metrics, steered_covariance, BeampatternOptions,
    CovariancePair,
};
use nullsteer::channel::{sector_constraint_matrix, FactorDomain, NullSector};
use nullsteer::nsp::null_projector;
use nullsteer::search_volume::{
    null_extent_from_geometry, nsp_solid_angle, solid_angle, BsRegion, SearchExtent,
};
use nullsteer::{BeampatternGrid64, CMatrix64, CVector64, UraGeometry64};

use crate::emit;
use crate::error::{CliError, Result};
use crate::scenario::{Blockage, Scenario, SearchSpec, SectorSpec};

/// Execution knobs from the command line.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub out_dir: PathBuf,
    /// Replace both projectors with the identity (no nulling).
    pub no_nsp: bool,
    /// Overrides the scenario's NSP tolerance when set.
    pub tol_override: Option<f64>,
    pub quiet: bool,
}

/// Suppression metrics for one requested sector, with its bounds echoed so
/// the summary stands alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorReport {
    pub spec: SectorSpec,
    pub max_db: f64,
    pub mean_db: f64,
    pub peak_to_sector_db: f64,
}

/// Search-volume split at one standoff distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchPoint {
    pub distance_m: f64,
    pub null_deg2: f64,
    pub omega_nsp_sr: f64,
    pub percent_searchable: f64,
}

/// Search-volume accounting over the requested distances.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub az_extent_deg: f64,
    pub el_extent_deg: f64,
    pub omega_sr: f64,
    pub points: Vec<SearchPoint>,
}

/// Everything a run produces besides the artifact files. Wall-clock seconds
/// are reported on the console only; the serialized summary stays
/// byte-deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub peak_db: f64,
    pub peak_az_deg: f64,
    pub peak_el_deg: f64,
    pub rank_azimuth: usize,
    pub rank_elevation: usize,
    pub sectors: Vec<SectorReport>,
    pub search: Option<SearchReport>,
    pub wall_seconds: f64,
}

fn conj_row(v: &CVector64) -> CMatrix64 {
    CMatrix64::from_fn(1, v.len(), |_, j| v[j].conj())
}

fn vstack(blocks: &[CMatrix64], cols: usize) -> CMatrix64 {
    let rows = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = CMatrix64::zeros(rows, cols);
    let mut r0 = 0;
    for b in blocks {
        out.view_mut((r0, 0), (b.nrows(), cols)).copy_from(b);
        r0 += b.nrows();
    }
    out
}

/// Stacks the factor-domain constraint rows: sampled steering rows over each
/// null sector, plus one conjugated steering row per base station per domain
/// (the line-of-sight channel is rank one, so a single direction per factor
/// captures its whole row space).
fn build_constraints(
    scenario: &Scenario,
    radar: &UraGeometry64,
) -> std::result::Result<(CMatrix64, CMatrix64), nullsteer::Error> {
    let mut az_blocks: Vec<CMatrix64> = Vec::new();
    let mut el_blocks: Vec<CMatrix64> = Vec::new();
    for spec in &scenario.null_sectors {
        let sector = NullSector::new(spec.az_min, spec.az_max, spec.el_min, spec.el_max)?
            .with_step(spec.step)?;
        az_blocks.push(sector_constraint_matrix(
            &sector,
            radar,
            FactorDomain::Azimuth,
        )?);
        el_blocks.push(sector_constraint_matrix(
            &sector,
            radar,
            FactorDomain::Elevation,
        )?);
    }
    for bs in &scenario.bs_list {
        az_blocks.push(conj_row(steering_azimuth(bs.az_deg, radar)?.entries()));
        el_blocks.push(conj_row(steering_elevation(bs.el_deg, radar)?.entries()));
    }
    Ok((
        vstack(&az_blocks, radar.m_h()),
        vstack(&el_blocks, radar.m_v()),
    ))
}

fn search_report(spec: &SearchSpec) -> std::result::Result<SearchReport, nullsteer::Error> {
    let extent = SearchExtent::<f64>::new(spec.az_extent, spec.el_extent)?;
    let area = extent.az_extent() * extent.el_extent();
    let mut points = Vec::with_capacity(spec.distances.len());
    match &spec.blockage {
        Blockage::NullAreas(values) => {
            for (&d, &null) in spec.distances.iter().zip(values) {
                let rep = nsp_solid_angle(&extent, null)?;
                points.push(SearchPoint {
                    distance_m: d,
                    null_deg2: rep.null_deg2,
                    omega_nsp_sr: rep.omega_nsp_sr,
                    percent_searchable: rep.percent_searchable,
                });
            }
        }
        Blockage::Region {
            width_m,
            height_min_m,
            height_max_m,
        } => {
            let region = BsRegion::<f64>::new(*width_m, *height_min_m, *height_max_m)?;
            for &d in &spec.distances {
                // A region subtending more than the extent blocks all of it.
                let null = null_extent_from_geometry(&region, d)?.min(area);
                let rep = nsp_solid_angle(&extent, null)?;
                points.push(SearchPoint {
                    distance_m: d,
                    null_deg2: rep.null_deg2,
                    omega_nsp_sr: rep.omega_nsp_sr,
                    percent_searchable: rep.percent_searchable,
                });
            }
        }
    }
    Ok(SearchReport {
        az_extent_deg: spec.az_extent,
        el_extent_deg: spec.el_extent,
        omega_sr: solid_angle(&extent),
        points,
    })
}

fn print_console(summary: &RunSummary, radar_dims: (usize, usize), out_dir: &Path) {
    println!(
        "peak {} dB at ({}, {}) deg",
        emit::fmt_sig9(summary.peak_db),
        emit::fmt_sig9(summary.peak_az_deg),
        emit::fmt_sig9(summary.peak_el_deg)
    );
    println!(
        "projector rank: azimuth {} of {}, elevation {} of {}",
        summary.rank_azimuth, radar_dims.0, summary.rank_elevation, radar_dims.1
    );
    for s in &summary.sectors {
        println!(
            "sector [{}, {}] x [{}, {}] deg: max {} dB, {} dB below peak",
            emit::fmt_sig9(s.spec.az_min),
            emit::fmt_sig9(s.spec.az_max),
            emit::fmt_sig9(s.spec.el_min),
            emit::fmt_sig9(s.spec.el_max),
            emit::fmt_sig9(s.max_db),
            emit::fmt_sig9(s.peak_to_sector_db)
        );
    }
    if let Some(search) = &summary.search {
        for p in &search.points {
            println!(
                "search at {} m: {} % searchable ({} deg^2 blocked)",
                emit::fmt_sig9(p.distance_m),
                emit::fmt_sig9(p.percent_searchable),
                emit::fmt_sig9(p.null_deg2)
            );
        }
    }
    println!("artifacts in {}", out_dir.display());
    println!("wall clock: {:.3} s", summary.wall_seconds);
}

/// Runs one scenario end to end and writes `beampattern.csv`, `summary.json`,
/// and (when search is requested) `search.csv` into the output directory.
pub fn execute(scenario: &Scenario, opts: &RunOptions) -> Result<RunSummary> {
    let t0 = Instant::now();
    let radar = UraGeometry64::new(scenario.radar.m_h, scenario.radar.m_v, scenario.radar.spacing)?;
    let target = AngleDeg::<f64>::new(scenario.target.az_deg, scenario.target.el_deg)?;
    let tol = opts.tol_override.unwrap_or(scenario.nsp_tolerance);
    let m_h = radar.m_h();
    let m_v = radar.m_v();

    let (h_az, h_el) = if opts.no_nsp {
        (CMatrix64::zeros(0, m_h), CMatrix64::zeros(0, m_v))
    } else {
        let built = build_constraints(scenario, &radar)?;
        if built.0.nrows() == 0 && !opts.quiet {
            eprintln!(
                "warning: no null sectors or base stations given; projection is the identity"
            );
        }
        built
    };
    let p_h = null_projector(&h_az, tol)?;
    let p_v = null_projector(&h_el, tol)?;

    let r_azm = steered_covariance(target.azimuth(), m_h, &radar)?;
    let r_elv = steered_covariance(target.elevation(), m_v, &radar)?;
    let pair = CovariancePair::new(r_elv, r_azm)?;
    let combined = combine_nsp_covariance(&pair, &p_h, &p_v, &target, &radar)?;

    let az_samples = sample_axis(scenario.grid.az_min, scenario.grid.az_max, scenario.grid.az_step)?;
    let el_samples = sample_axis(scenario.grid.el_min, scenario.grid.el_max, scenario.grid.el_step)?;
    let bp_opts = BeampatternOptions::<f64> {
        normalize_peak_db: scenario.peak_normalization_db,
        ..BeampatternOptions::default()
    };
    let grid = beampattern(&combined, &az_samples, &el_samples, &radar, &bp_opts)?;

    let mut sectors = Vec::with_capacity(scenario.null_sectors.len());
    for spec in &scenario.null_sectors {
        let sector = NullSector::new(spec.az_min, spec.az_max, spec.el_min, spec.el_max)?
            .with_step(spec.step)?;
        let metrics = sector_metrics(&grid, &sector)?;
        sectors.push(SectorReport {
            spec: *spec,
            max_db: metrics.max_db,
            mean_db: metrics.mean_db,
            peak_to_sector_db: metrics.peak_to_sector_db,
        });
    }

    let search = match &scenario.search {
        Some(spec) => Some(search_report(spec)?),
        None => None,
    };

    let summary = RunSummary {
        peak_db: grid.peak_db(),
        peak_az_deg: grid.peak_angle().azimuth(),
        peak_el_deg: grid.peak_angle().elevation(),
        rank_azimuth: p_h.rank(),
        rank_elevation: p_v.rank(),
        sectors,
        search,
        wall_seconds: t0.elapsed().as_secs_f64(),
    };

    write_artifacts(&summary, &grid, &opts.out_dir)?;
    if !opts.quiet {
        print_console(&summary, (m_h, m_v), &opts.out_dir);
    }
    Ok(summary)
}

fn write_artifacts(summary: &RunSummary, grid: &BeampatternGrid64, out_dir: &Path) -> Result<()> {
    let io_err = |path: PathBuf| move |source: std::io::Error| CliError::Io { path, source };
    std::fs::create_dir_all(out_dir).map_err(io_err(out_dir.to_path_buf()))?;
    let csv_path = out_dir.join("beampattern.csv");
    emit::write_atomic(&csv_path, &emit::beampattern_csv(grid)).map_err(io_err(csv_path.clone()))?;
    let json_path = out_dir.join("summary.json");
    emit::write_atomic(&json_path, &emit::summary_json(summary))
        .map_err(io_err(json_path.clone()))?;
    if let Some(search) = &summary.search {
        let search_path = out_dir.join("search.csv");
        emit::write_atomic(&search_path, &emit::search_csv(search))
            .map_err(io_err(search_path.clone()))?;
    }
    Ok(())
}
