use zeta_crystal::numerics::Complex64;
use zeta_crystal::xray::{contours, xray_svg, XRayGrid};
use zeta_crystal::zerofind::{AnalyticFunction, Rectangle};
use zeta_crystal::zetabuild::build_zeta_m;

#[test]
fn crossings_sit_on_zeros() {
    let f = build_zeta_m().unwrap();
    let r = Rectangle::new(-8.0, 9.0, 26.0, 31.0).unwrap();
    let g = XRayGrid::sample(&f, &r, 171, 101).unwrap();
    let c = contours(&g);
    let cell = (r.width() / 170.0).max(r.height() / 100.0);
    for (re, im) in [(-6.393_998_362_3, 28.099_523_641_4), (7.393_998_362_3, 28.099_523_641_4), (3.789_140_346_5, 29.710_711_464_7)] {
        let z = Complex64::new(re, im);
        let d = c.crossings.iter().map(|&p| (g.to_plane(p) - z).norm()).fold(f64::INFINITY, f64::min);
        assert!(d < cell, "no crossing near {z}: {d}");
    }
}

#[test]
fn pole_is_punctured_and_marked() {
    let f = build_zeta_m().unwrap();
    assert_eq!(f.poles(), vec![Complex64::new(1.0, 0.0)]);
    // Grid through s = 1 exactly.
    let r = Rectangle::new(0.0, 2.0, -1.0, 1.0).unwrap();
    let g = XRayGrid::sample(&f, &r, 33, 33).unwrap();
    assert!(g.punctured_cells() >= 1);
    let svg = xray_svg(&f, &r, 33, 33).unwrap();
    assert!(svg.contains("class=\"pole\""));
}
