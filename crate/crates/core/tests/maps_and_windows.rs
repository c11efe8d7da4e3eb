use spdc_core::emission_maps::{
    compute_maps, integrated_flux, phase_range_metric, PHASE_RANGE_SAMPLES,
};
use spdc_core::numerics::bisect;
use spdc_core::spdc_model::{calibrate_compensation, degenerate_opening_angle, SpectralSlice};
use spdc_core::window_optimizer::{find_optimal_window, solve_iris_for_flux};
use spdc_core::{
    FilterConfig, FluxQuadrature, GridSpec, IsoFluxSettings, SourceConfig, WindowArrangement,
};

fn calibrated() -> SourceConfig {
    calibrate_compensation(&SourceConfig::default()).unwrap()
}

fn default_fwhm_grid() -> Vec<f64> {
    (1..=20).map(|k| 0.005 * k as f64).collect()
}

#[test]
fn peak_sits_on_degenerate_mode() {
    let cfg = calibrated();
    let spec = GridSpec::default();
    let grid = compute_maps(&spec, &cfg, &FilterConfig::degenerate(&cfg, 0.070)).unwrap();
    let (theta, lambda) = grid.peak();
    let theta0 = degenerate_opening_angle(&cfg).unwrap();
    assert!(
        (theta - theta0).abs() <= spec.theta_step(),
        "{theta} vs {theta0}"
    );
    assert!((lambda - 0.7022).abs() <= spec.lambda_step(), "{lambda}");
    assert!(grid.probability.iter().all(|p| (0.0..=1.0).contains(p)));
    assert_eq!(grid.probability.iter().cloned().fold(0.0, f64::max), 1.0);
}

#[test]
fn ridge_follows_phase_matching_roots() {
    let cfg = calibrated();
    let spec = GridSpec::default();
    let grid = compute_maps(&spec, &cfg, &FilterConfig::degenerate(&cfg, 0.070)).unwrap();
    for j in (64..spec.n_lambda - 64).step_by(64) {
        let row = &grid.probability[grid.index(0, j)..grid.index(0, j) + spec.n_theta];
        let i_max = (0..spec.n_theta).fold(0, |b, i| if row[i] > row[b] { i } else { b });
        let slice = SpectralSlice::new(&cfg, spec.lambda_at(j)).unwrap();
        let root = bisect(
            |t| slice.delta_kappa(t).unwrap(),
            0.0,
            spec.theta_max,
            1e-12,
            200,
        )
        .expect("row is phase-matchable")
        .root;
        assert!(
            (spec.theta_at(i_max) - root).abs() <= spec.theta_step(),
            "row {j}: ridge {} vs root {root}",
            spec.theta_at(i_max)
        );
    }
}

#[test]
fn centroid_converges_with_resolution() {
    let cfg = calibrated();
    let filter = FilterConfig::degenerate(&cfg, 0.070);
    let coarse = GridSpec::default();
    let fine = GridSpec {
        n_theta: 1024,
        n_lambda: 1024,
        ..coarse
    };
    let (t1, l1) = compute_maps(&coarse, &cfg, &filter).unwrap().centroid();
    let (t2, l2) = compute_maps(&fine, &cfg, &filter).unwrap().centroid();
    assert!((t1 - t2).abs() < 0.002 * (coarse.theta_max - coarse.theta_min));
    assert!((l1 - l2).abs() < 0.002 * (coarse.lambda_max - coarse.lambda_min));
}

#[test]
#[allow(clippy::needless_range_loop)]
fn flux_increases_across_lattice() {
    let cfg = calibrated();
    let quad = FluxQuadrature::default();
    let center = degenerate_opening_angle(&cfg).unwrap();
    let flux: Vec<Vec<f64>> = (1..=5)
        .map(|a| {
            (1..=5)
                .map(|b| {
                    let arr = WindowArrangement::new(
                        center,
                        (0.15 * b as f64).to_radians(),
                        FilterConfig::degenerate(&cfg, 0.012 * a as f64),
                    );
                    integrated_flux(&arr, &cfg, &quad).unwrap()
                })
                .collect()
        })
        .collect();
    for a in 0..5 {
        for b in 1..5 {
            assert!(flux[a][b] > flux[a][b - 1]);
            assert!(flux[b][a] > flux[b - 1][a]);
        }
    }
}

#[test]
fn phase_range_grows_with_nested_windows() {
    let cfg = calibrated();
    let center = degenerate_opening_angle(&cfg).unwrap();
    let mut last = 0.0;
    for k in 1..=6 {
        let arr = WindowArrangement::new(
            center,
            (0.1 * k as f64).to_radians(),
            FilterConfig::degenerate(&cfg, 0.01 * k as f64),
        );
        let r = phase_range_metric(&arr, &cfg, PHASE_RANGE_SAMPLES).unwrap();
        assert!(r >= last, "window {k}: {r} < {last}");
        last = r;
    }
    let point = WindowArrangement::new(center, 0.0, FilterConfig::degenerate(&cfg, 0.0));
    assert_eq!(
        phase_range_metric(&point, &cfg, PHASE_RANGE_SAMPLES).unwrap(),
        0.0
    );
}

#[test]
fn narrow_filter_wide_iris_is_rougher_than_reference() {
    let cfg = calibrated();
    let center = degenerate_opening_angle(&cfg).unwrap();
    let reference = WindowArrangement::new(
        center,
        0.5f64.to_radians(),
        FilterConfig::degenerate(&cfg, 0.030),
    );
    let wide = WindowArrangement::new(
        center,
        1.5f64.to_radians(),
        FilterConfig::degenerate(&cfg, 0.015),
    );
    let a = phase_range_metric(&reference, &cfg, PHASE_RANGE_SAMPLES).unwrap();
    let b = phase_range_metric(&wide, &cfg, PHASE_RANGE_SAMPLES).unwrap();
    assert!(a < b, "{a} vs {b}");
}

#[test]
fn optimum_depends_only_on_flux_level() {
    let cfg = calibrated();
    let settings = IsoFluxSettings::for_source(&cfg, FluxQuadrature::default()).unwrap();
    let center = settings.iris_center;
    let r30 = WindowArrangement::new(
        center,
        0.5f64.to_radians(),
        FilterConfig::degenerate(&cfg, 0.030),
    );
    let target = integrated_flux(&r30, &cfg, &settings.quadrature).unwrap();
    let w70 = solve_iris_for_flux(0.070, target, &cfg, &settings).unwrap();
    let r70 = WindowArrangement::new(center, w70, FilterConfig::degenerate(&cfg, 0.070));
    let grid = default_fwhm_grid();
    let (_, best30) = find_optimal_window(&r30, &grid, &cfg, &settings).unwrap();
    let (_, best70) = find_optimal_window(&r70, &grid, &cfg, &settings).unwrap();
    assert_eq!(best30.filter.fwhm, best70.filter.fwhm);
    assert!(((best30.iris_width - best70.iris_width) / best30.iris_width).abs() < 1e-5);
}

#[test]
fn repeated_runs_are_bit_identical() {
    let cfg = calibrated();
    let again = calibrated();
    assert_eq!(cfg, again);
    let settings = IsoFluxSettings::for_source(&cfg, FluxQuadrature::default()).unwrap();
    let reference = WindowArrangement::new(
        settings.iris_center,
        0.5f64.to_radians(),
        FilterConfig::degenerate(&cfg, 0.030),
    );
    let grid = [0.02, 0.025, 0.03, 0.04];
    let (a, _) = find_optimal_window(&reference, &grid, &cfg, &settings).unwrap();
    let (b, _) = find_optimal_window(&reference, &grid, &cfg, &settings).unwrap();
    assert_eq!(a.points.len(), b.points.len());
    for (p, q) in a.points.iter().zip(&b.points) {
        assert_eq!(p.iris_width.to_bits(), q.iris_width.to_bits());
        assert_eq!(p.flux.to_bits(), q.flux.to_bits());
        assert_eq!(p.phase_range.to_bits(), q.phase_range.to_bits());
    }
    let spec = GridSpec {
        n_theta: 64,
        n_lambda: 64,
        ..GridSpec::default()
    };
    let filter = FilterConfig::degenerate(&cfg, 0.070);
    assert_eq!(
        compute_maps(&spec, &cfg, &filter).unwrap(),
        compute_maps(&spec, &cfg, &filter).unwrap()
    );
}
