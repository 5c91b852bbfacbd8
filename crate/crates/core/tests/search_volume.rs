use nullsteer::search_volume::{
    calibrate_region_width, distance_sweep, null_extent_from_geometry, nsp_solid_angle,
    solid_angle, BsRegion, SearchExtent, DEG_PER_RAD_CONVENTION,
};
use nullsteer::Error;

#[test]
fn unit_extent_has_exactly_unit_solid_angle() {
    let e = SearchExtent::<f64>::new(DEG_PER_RAD_CONVENTION, DEG_PER_RAD_CONVENTION).unwrap();
    assert_eq!(solid_angle(&e), 1.0);
}

#[test]
fn full_surveillance_volume_in_steradians() {
    // 180 x 110 degrees: 19800 deg^2 over 57.296^2 deg^2/sr.
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    assert!((solid_angle(&e) - 6.0314).abs() <= 1e-4);
}

#[test]
fn percent_searchable_tracks_the_blocked_area() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    for (null_deg2, percent) in [(811.8, 95.9), (198.0, 99.0), (39.6, 99.8)] {
        let r = nsp_solid_angle(&e, null_deg2).unwrap();
        assert!(
            (r.percent_searchable - percent).abs() <= 1e-9,
            "{null_deg2} deg^2 gave {}",
            r.percent_searchable
        );
        assert_eq!(r.null_deg2, null_deg2);
        // The two solid angles differ by exactly the blocked fraction.
        let ratio = r.omega_nsp_sr / r.omega_sr;
        assert!((ratio - percent / 100.0).abs() <= 1e-12);
    }

    let r = nsp_solid_angle(&e, 0.0).unwrap();
    assert_eq!(r.percent_searchable, 100.0);
    assert_eq!(r.omega_nsp_sr, r.omega_sr);

    let r = nsp_solid_angle(&e, 19800.0).unwrap();
    assert_eq!(r.percent_searchable, 0.0);
    assert_eq!(r.omega_nsp_sr, 0.0);
}

#[test]
fn blocked_area_must_fit_the_extent() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    assert!(matches!(
        nsp_solid_angle(&e, -1.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        nsp_solid_angle(&e, 19800.1),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        nsp_solid_angle(&e, f64::NAN),
        Err(Error::NonFinite { .. })
    ));
}

#[test]
fn extent_and_region_constructors_validate() {
    assert!(matches!(
        SearchExtent::<f64>::new(0.0, 10.0),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        SearchExtent::<f64>::new(400.0, 10.0),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        SearchExtent::<f64>::new(90.0, 200.0),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        BsRegion::<f64>::new(-1.0, 0.0, 10.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        BsRegion::<f64>::new(10.0, 5.0, 2.0),
        Err(Error::Domain { .. })
    ));
    let r = BsRegion::<f64>::new(100.0, 0.0, 30.0).unwrap();
    assert_eq!(r.width_m(), 100.0);
    assert_eq!(r.height_min_m(), 0.0);
    assert_eq!(r.height_max_m(), 30.0);
}

#[test]
fn zero_width_region_subtends_nothing() {
    let r = BsRegion::<f64>::new(0.0, 0.0, 25.0).unwrap();
    assert_eq!(null_extent_from_geometry(&r, 1000.0).unwrap(), 0.0);
}

#[test]
fn subtended_area_matches_hand_geometry() {
    // 200 m wide, 0..30 m tall, seen from 1 km.
    let r = BsRegion::<f64>::new(200.0, 0.0, 30.0).unwrap();
    let deg = 180.0 / std::f64::consts::PI;
    let az = 2.0 * (100.0f64 / 1000.0).atan() * deg;
    let el = (30.0f64 / 1000.0).atan() * deg;
    let got = null_extent_from_geometry(&r, 1000.0).unwrap();
    assert!((got - az * el).abs() <= 1e-12 * az * el);
}

#[test]
fn far_regions_shrink_toward_the_small_angle_limit() {
    let r = BsRegion::<f64>::new(200.0, 0.0, 30.0).unwrap();
    let deg = 180.0 / std::f64::consts::PI;
    // At long range atan(x) ~ x, so the area decays like 1/d^2.
    let d = 1.0e6;
    let approx = (200.0 / d) * (30.0 / d) * deg * deg;
    let got = null_extent_from_geometry(&r, d).unwrap();
    assert!((got - approx).abs() <= 1e-6 * approx);

    // Doubling the distance quarters the area to first order at 10 km.
    let near = null_extent_from_geometry(&r, 10_000.0).unwrap();
    let far = null_extent_from_geometry(&r, 20_000.0).unwrap();
    assert!((near / far - 4.0).abs() <= 0.01);
}

#[test]
fn standoff_must_be_positive_and_finite() {
    let r = BsRegion::<f64>::new(10.0, 0.0, 10.0).unwrap();
    assert!(matches!(
        null_extent_from_geometry(&r, 0.0),
        Err(Error::NonPositive { .. })
    ));
    assert!(matches!(
        null_extent_from_geometry(&r, f64::NAN),
        Err(Error::NonFinite { .. })
    ));
}

#[test]
fn sweep_is_monotone_and_saturates_close_in() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    let r = BsRegion::<f64>::new(500.0, 0.0, 40.0).unwrap();
    let distances = [50.0, 100.0, 500.0, 1000.0, 5000.0, 20000.0];
    let sweep = distance_sweep(&e, &r, &distances).unwrap();
    assert_eq!(sweep.len(), distances.len());
    for (i, (d, p)) in sweep.iter().enumerate() {
        assert_eq!(*d, distances[i]);
        assert!(*p >= 0.0 && *p <= 100.0);
        if i > 0 {
            assert!(*p >= sweep[i - 1].1, "percent fell between distances");
        }
    }
    // Far away the region blocks almost nothing.
    assert!(sweep.last().unwrap().1 > 99.9);
}

#[test]
fn zero_region_sweep_is_always_fully_searchable() {
    let e = SearchExtent::<f64>::new(90.0, 45.0).unwrap();
    let r = BsRegion::<f64>::new(0.0, 0.0, 0.0).unwrap();
    let sweep = distance_sweep(&e, &r, &[10.0, 100.0]).unwrap();
    for (_, p) in sweep {
        assert_eq!(p, 100.0);
    }
}

#[test]
fn oversubtending_region_clamps_to_zero_percent() {
    // A tiny extent seen through a huge nearby region saturates.
    let e = SearchExtent::<f64>::new(10.0, 10.0).unwrap();
    let r = BsRegion::<f64>::new(10_000.0, 0.0, 5_000.0).unwrap();
    let sweep = distance_sweep(&e, &r, &[10.0]).unwrap();
    assert_eq!(sweep[0].1, 0.0);
}

#[test]
fn calibration_reproduces_the_anchor_point() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    // A 200 m height band subtends ~11.3 degrees at 1 km, tall enough for
    // every anchor below to stay under the 180 degree azimuth limit.
    let seed = BsRegion::<f64>::new(1.0, 0.0, 200.0).unwrap();
    for anchor in [95.9, 99.0, 99.8] {
        let cal = calibrate_region_width(&e, &seed, 1000.0, anchor).unwrap();
        assert_eq!(cal.height_min_m(), 0.0);
        assert_eq!(cal.height_max_m(), 200.0);
        let sweep = distance_sweep(&e, &cal, &[1000.0]).unwrap();
        assert!(
            (sweep[0].1 - anchor).abs() <= 1e-9,
            "anchor {anchor} gave {}",
            sweep[0].1
        );
    }
}

#[test]
fn calibration_width_grows_as_the_anchor_percent_drops() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    let seed = BsRegion::<f64>::new(1.0, 0.0, 200.0).unwrap();
    let wide = calibrate_region_width(&e, &seed, 1000.0, 95.0).unwrap();
    let narrow = calibrate_region_width(&e, &seed, 1000.0, 99.9).unwrap();
    assert!(wide.width_m() > narrow.width_m());
    // 100 percent searchable needs no blockage at all.
    let none = calibrate_region_width(&e, &seed, 1000.0, 100.0).unwrap();
    assert_eq!(none.width_m(), 0.0);
}

#[test]
fn calibration_rejects_impossible_anchors() {
    let e = SearchExtent::<f64>::new(180.0, 110.0).unwrap();
    // A zero-height band cannot block anything.
    let flat = BsRegion::<f64>::new(1.0, 0.0, 0.0).unwrap();
    assert!(matches!(
        calibrate_region_width(&e, &flat, 1000.0, 95.0),
        Err(Error::CalibrationInfeasible { .. })
    ));
    // Requesting near-total blockage from a thin band exceeds any width.
    let thin = BsRegion::<f64>::new(1.0, 0.0, 1.0).unwrap();
    assert!(matches!(
        calibrate_region_width(&e, &thin, 1000.0, 1.0),
        Err(Error::CalibrationInfeasible { .. })
    ));
    let seed = BsRegion::<f64>::new(1.0, 0.0, 200.0).unwrap();
    assert!(matches!(
        calibrate_region_width(&e, &seed, -5.0, 95.0),
        Err(Error::NonPositive { .. })
    ));
    assert!(matches!(
        calibrate_region_width(&e, &seed, 1000.0, 101.0),
        Err(Error::OutOfRange { .. })
    ));
}
