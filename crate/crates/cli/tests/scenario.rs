//! Scenario parser and emitter behavior: defaults, error positions, and
//! round-trip stability.

use nullsteer_cli::scenario::{
    emit_scenario, parse_scenario, Blockage, GridSpec, ParseError, Scenario,
};

const MINIMAL: &str = "radar {\n  m_h = 2\n  m_v = 2\n}\ntarget {\n  az_deg = 0\n  el_deg = 50\n}\n";

fn full_text() -> String {
    r#"
# Full-scale shipboard case.
radar {
  m_h = 40
  m_v = 25
  spacing = 0.5
}

target {
  az_deg = 0
  el_deg = 50
}

null_sector {
  az_min = -45
  az_max = -40
  el_min = 5
  el_max = 15
  step = 1
}

bs {
  az_deg = -42.5
  el_deg = 10
  n = 10
  gain_re = 0.8
  gain_im = -0.25
}

grid {
  az_min = -90
  az_max = 90
  az_step = 1
  el_min = 0
  el_max = 90
  el_step = 1
}

nsp {
  tolerance = 1e-10
  peak_normalization_db = 60
}

search {
  az_extent = 180
  el_extent = 110
  null_deg2 = 811.8, 198.0, 39.6
  distances = 500, 2000, 8000
}
"#
    .to_string()
}

#[test]
fn minimal_scenario_fills_every_default() {
    let s = parse_scenario(MINIMAL).unwrap();
    assert_eq!(s.radar.m_h, 2);
    assert_eq!(s.radar.m_v, 2);
    assert_eq!(s.radar.spacing, 0.5);
    assert_eq!(s.target.az_deg, 0.0);
    assert_eq!(s.target.el_deg, 50.0);
    assert!(s.null_sectors.is_empty());
    assert!(s.bs_list.is_empty());
    assert_eq!(s.grid, GridSpec::default());
    assert_eq!(s.grid.az_min, -90.0);
    assert_eq!(s.grid.az_max, 90.0);
    assert_eq!(s.grid.el_min, 0.0);
    assert_eq!(s.grid.el_max, 90.0);
    assert_eq!(s.grid.az_step, 1.0);
    assert_eq!(s.grid.el_step, 1.0);
    assert_eq!(s.nsp_tolerance, 1e-10);
    assert_eq!(s.peak_normalization_db, None);
    assert!(s.search.is_none());
}

#[test]
fn full_scenario_reads_every_section() {
    let s = parse_scenario(&full_text()).unwrap();
    assert_eq!(s.radar.m_h, 40);
    assert_eq!(s.radar.m_v, 25);
    assert_eq!(s.null_sectors.len(), 1);
    let sector = s.null_sectors[0];
    assert_eq!(
        (sector.az_min, sector.az_max, sector.el_min, sector.el_max, sector.step),
        (-45.0, -40.0, 5.0, 15.0, 1.0)
    );
    assert_eq!(s.bs_list.len(), 1);
    let bs = s.bs_list[0];
    assert_eq!((bs.az_deg, bs.el_deg, bs.n), (-42.5, 10.0, 10));
    assert_eq!((bs.gain_re, bs.gain_im), (0.8, -0.25));
    assert_eq!(s.peak_normalization_db, Some(60.0));
    let search = s.search.as_ref().unwrap();
    assert_eq!(search.az_extent, 180.0);
    assert_eq!(search.el_extent, 110.0);
    assert_eq!(search.distances, vec![500.0, 2000.0, 8000.0]);
    assert_eq!(
        search.blockage,
        Blockage::NullAreas(vec![811.8, 198.0, 39.6])
    );
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# header\n\nradar {  # trailing\n  m_h = 2   # size\n  m_v = 2\n}\n\n# between\ntarget {\n  az_deg = 0\n  el_deg = 50\n}\n";
    let s = parse_scenario(text).unwrap();
    assert_eq!(s.radar.m_h, 2);
}

#[test]
fn sector_defaults_step_to_one_degree() {
    let text = format!(
        "{MINIMAL}null_sector {{\n  az_min = -45\n  az_max = -40\n  el_min = 5\n  el_max = 15\n}}\n"
    );
    let s = parse_scenario(&text).unwrap();
    assert_eq!(s.null_sectors[0].step, 1.0);
}

#[test]
fn bs_gain_defaults_to_unity() {
    let text = format!("{MINIMAL}bs {{\n  az_deg = -40\n  el_deg = 10\n  n = 4\n}}\n");
    let bs = parse_scenario(&text).unwrap().bs_list[0];
    assert_eq!((bs.gain_re, bs.gain_im), (1.0, 0.0));
}

#[test]
fn negative_az_step_is_rejected_with_key_and_line() {
    let text = format!("{MINIMAL}grid {{\n  az_step = -1\n}}\n");
    let err = parse_scenario(&text).unwrap_err();
    match err {
        ParseError::InvalidValue { line, key, .. } => {
            assert_eq!(key, "az_step");
            assert_eq!(line, 10);
        }
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn missing_required_section_is_named() {
    let err = parse_scenario("radar {\n  m_h = 2\n  m_v = 2\n}\n").unwrap_err();
    assert_eq!(err, ParseError::MissingSection { name: "target" });
    let err = parse_scenario("target {\n  az_deg = 0\n  el_deg = 50\n}\n").unwrap_err();
    assert_eq!(err, ParseError::MissingSection { name: "radar" });
}

#[test]
fn missing_required_key_points_at_the_section() {
    let err = parse_scenario("radar {\n  m_h = 2\n}\ntarget {\n  az_deg = 0\n  el_deg = 50\n}\n")
        .unwrap_err();
    assert_eq!(
        err,
        ParseError::MissingKey {
            section: "radar",
            line: 1,
            key: "m_v"
        }
    );
}

#[test]
fn unknown_key_and_section_carry_their_lines() {
    let text = format!("{MINIMAL}nsp {{\n  tolerancy = 1e-9\n}}\n");
    match parse_scenario(&text).unwrap_err() {
        ParseError::UnknownKey { line, section, key } => {
            assert_eq!(line, 10);
            assert_eq!(section, "nsp");
            assert_eq!(key, "tolerancy");
        }
        other => panic!("wrong error: {other:?}"),
    }
    let text = format!("{MINIMAL}radars {{\n  m_h = 2\n}}\n");
    match parse_scenario(&text).unwrap_err() {
        ParseError::UnknownSection { line, name } => {
            assert_eq!(line, 9);
            assert_eq!(name, "radars");
        }
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn duplicates_are_rejected() {
    let text = "radar {\n  m_h = 2\n  m_h = 3\n  m_v = 2\n}\n";
    match parse_scenario(text).unwrap_err() {
        ParseError::DuplicateKey { line, section, key } => {
            assert_eq!(line, 3);
            assert_eq!(section, "radar");
            assert_eq!(key, "m_h");
        }
        other => panic!("wrong error: {other:?}"),
    }
    let text = format!("{MINIMAL}target {{\n  az_deg = 1\n  el_deg = 2\n}}\n");
    match parse_scenario(&text).unwrap_err() {
        ParseError::DuplicateSection { line, name } => {
            assert_eq!(line, 9);
            assert_eq!(name, "target");
        }
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn structural_errors_name_their_lines() {
    match parse_scenario("}\n").unwrap_err() {
        ParseError::UnmatchedClose { line } => assert_eq!(line, 1),
        other => panic!("wrong error: {other:?}"),
    }
    match parse_scenario("radar {\n  m_h = 2\n").unwrap_err() {
        ParseError::UnclosedSection { name, line } => {
            assert_eq!(name, "radar");
            assert_eq!(line, 1);
        }
        other => panic!("wrong error: {other:?}"),
    }
    match parse_scenario("m_h = 2\n").unwrap_err() {
        ParseError::Syntax { line, .. } => assert_eq!(line, 1),
        other => panic!("wrong error: {other:?}"),
    }
    match parse_scenario("radar {\n  grid {\n").unwrap_err() {
        ParseError::Syntax { line, .. } => assert_eq!(line, 2),
        other => panic!("wrong error: {other:?}"),
    }
    match parse_scenario("radar {\n  what is this\n}\n").unwrap_err() {
        ParseError::Syntax { line, .. } => assert_eq!(line, 2),
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn out_of_range_values_are_rejected() {
    let bad_target = "radar {\n  m_h = 2\n  m_v = 2\n}\ntarget {\n  az_deg = 200\n  el_deg = 50\n}\n";
    match parse_scenario(bad_target).unwrap_err() {
        ParseError::InvalidValue { line, key, .. } => {
            assert_eq!(line, 6);
            assert_eq!(key, "az_deg");
        }
        other => panic!("wrong error: {other:?}"),
    }

    let zero_mh = "radar {\n  m_h = 0\n  m_v = 2\n}\ntarget {\n  az_deg = 0\n  el_deg = 50\n}\n";
    assert!(matches!(
        parse_scenario(zero_mh).unwrap_err(),
        ParseError::InvalidValue { line: 2, .. }
    ));

    let text = format!(
        "{MINIMAL}null_sector {{\n  az_min = -40\n  az_max = -45\n  el_min = 5\n  el_max = 15\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "az_max"),
        other => panic!("wrong error: {other:?}"),
    }

    let text = format!("{MINIMAL}nsp {{\n  tolerance = -1e-10\n}}\n");
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "tolerance"),
        other => panic!("wrong error: {other:?}"),
    }

    let text = format!("{MINIMAL}bs {{\n  az_deg = -40\n  el_deg = 10\n  n = 4\n  gain_re = 0\n  gain_im = 0\n}}\n");
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "gain_re"),
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn zero_tolerance_is_allowed() {
    let text = format!("{MINIMAL}nsp {{\n  tolerance = 0\n}}\n");
    assert_eq!(parse_scenario(&text).unwrap().nsp_tolerance, 0.0);
}

#[test]
fn non_numeric_values_are_rejected() {
    let text = "radar {\n  m_h = two\n  m_v = 2\n}\ntarget {\n  az_deg = 0\n  el_deg = 50\n}\n";
    assert!(matches!(
        parse_scenario(text).unwrap_err(),
        ParseError::InvalidValue { line: 2, .. }
    ));
    let text = format!("{MINIMAL}nsp {{\n  tolerance = nan\n}}\n");
    assert!(matches!(
        parse_scenario(&text).unwrap_err(),
        ParseError::InvalidValue { line: 10, .. }
    ));
}

#[test]
fn search_requires_a_consistent_blockage_route() {
    // Mixing the direct areas with the geometric region is ambiguous.
    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  null_deg2 = 10\n  region_width_m = 100\n  region_hmin_m = 0\n  region_hmax_m = 30\n  distances = 500\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "null_deg2"),
        other => panic!("wrong error: {other:?}"),
    }

    // Neither route given.
    let text = format!("{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  distances = 500\n}}\n");
    assert!(matches!(
        parse_scenario(&text).unwrap_err(),
        ParseError::MissingKey { section: "search", .. }
    ));

    // Partial region.
    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  region_width_m = 100\n  region_hmin_m = 0\n  distances = 500\n}}\n"
    );
    assert!(matches!(
        parse_scenario(&text).unwrap_err(),
        ParseError::MissingKey { section: "search", key: "region_hmax_m", .. }
    ));

    // One blocked area per distance.
    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  null_deg2 = 10, 20\n  distances = 500\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, detail, .. } => {
            assert_eq!(key, "null_deg2");
            assert!(detail.contains("2 values for 1 distances"), "{detail}");
        }
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn search_value_ranges_are_enforced() {
    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 400\n  el_extent = 110\n  null_deg2 = 10\n  distances = 500\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "az_extent"),
        other => panic!("wrong error: {other:?}"),
    }

    // Blocked area above the whole extent.
    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 10\n  el_extent = 10\n  null_deg2 = 101\n  distances = 500\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "null_deg2"),
        other => panic!("wrong error: {other:?}"),
    }

    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  null_deg2 = 10, 20\n  distances = 500, -1\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "distances"),
        other => panic!("wrong error: {other:?}"),
    }

    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  region_width_m = -5\n  region_hmin_m = 0\n  region_hmax_m = 30\n  distances = 500\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, .. } => assert_eq!(key, "region_width_m"),
        other => panic!("wrong error: {other:?}"),
    }

    let text = format!(
        "{MINIMAL}search {{\n  az_extent = 180\n  el_extent = 110\n  null_deg2 = 10,, 20\n  distances = 500, 600\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { key, detail, .. } => {
            assert_eq!(key, "null_deg2");
            assert!(detail.contains("empty element"), "{detail}");
        }
        other => panic!("wrong error: {other:?}"),
    }
}

#[test]
fn sector_outside_the_grid_is_rejected_at_parse_time() {
    // Grid elevation stops at 90, sector sits beyond the azimuth range.
    let text = format!(
        "{MINIMAL}null_sector {{\n  az_min = 120\n  az_max = 130\n  el_min = 5\n  el_max = 15\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { line, key, .. } => {
            assert_eq!(key, "null_sector");
            assert_eq!(line, 9);
        }
        other => panic!("wrong error: {other:?}"),
    }

    // A sector narrower than the grid step can still miss every sample.
    let text = format!(
        "{MINIMAL}null_sector {{\n  az_min = 10.2\n  az_max = 10.8\n  el_min = 5\n  el_max = 15\n}}\n"
    );
    assert!(parse_scenario(&text).is_err());
}

#[test]
fn oversized_grid_is_rejected_at_parse_time() {
    let text = format!(
        "{MINIMAL}grid {{\n  az_min = -90\n  az_max = 90\n  az_step = 0.0001\n  el_min = 0\n  el_max = 90\n  el_step = 0.0001\n}}\n"
    );
    match parse_scenario(&text).unwrap_err() {
        ParseError::InvalidValue { line, .. } => assert_eq!(line, 9),
        other => panic!("wrong error: {other:?}"),
    }
}

fn assert_round_trip(s: &Scenario) {
    let text = emit_scenario(s);
    let back = parse_scenario(&text).unwrap_or_else(|e| panic!("emitted text failed: {e}\n{text}"));
    assert_eq!(&back, s, "parse(emit(s)) changed the scenario:\n{text}");
    assert_eq!(emit_scenario(&back), text, "emitter is not stable");
}

#[test]
fn round_trip_minimal() {
    assert_round_trip(&parse_scenario(MINIMAL).unwrap());
}

#[test]
fn round_trip_full_with_null_areas() {
    assert_round_trip(&parse_scenario(&full_text()).unwrap());
}

#[test]
fn round_trip_region_search_and_multiple_sections() {
    let text = format!(
        "{MINIMAL}null_sector {{\n  az_min = -45\n  az_max = -40\n  el_min = 5\n  el_max = 15\n  step = 0.5\n}}\nnull_sector {{\n  az_min = 30\n  az_max = 35\n  el_min = 0\n  el_max = 10\n}}\nbs {{\n  az_deg = -42.5\n  el_deg = 10\n  n = 6\n  gain_im = 0.125\n}}\nbs {{\n  az_deg = 33\n  el_deg = 5\n  n = 2\n}}\nsearch {{\n  az_extent = 180\n  el_extent = 110\n  region_width_m = 2000\n  region_hmin_m = 10\n  region_hmax_m = 45.5\n  distances = 500, 1000, 2000, 4000, 8000\n}}\n"
    );
    let s = parse_scenario(&text).unwrap();
    assert_eq!(s.null_sectors.len(), 2);
    assert_eq!(s.bs_list.len(), 2);
    assert!(matches!(
        s.search.as_ref().unwrap().blockage,
        Blockage::Region { .. }
    ));
    assert_round_trip(&s);
}

#[test]
fn round_trip_preserves_awkward_floats() {
    let mut s = parse_scenario(MINIMAL).unwrap();
    s.radar.spacing = 0.1 + 0.2; // 0.30000000000000004
    s.target.az_deg = -179.999_999_999_9;
    s.nsp_tolerance = 1e-17;
    s.peak_normalization_db = Some(f64::MIN_POSITIVE);
    assert_round_trip(&s);
}
