use zeta_crystal::numerics::Complex64;
use zeta_crystal::zerofind::{isolate_zeros, scan_zeros, winding_count, zero_to_alpha, Rectangle};
use zeta_crystal::zetabuild::build_zeta_m;

fn close(a: Complex64, re: f64, im: f64) -> bool {
    (a - Complex64::new(re, im)).norm() < 1e-8
}

#[test]
fn first_critical_zero_of_zeta_m() {
    let f = build_zeta_m().unwrap();
    let r = Rectangle::new(0.0, 1.0, 1.0, 10.0).unwrap();
    let zs = isolate_zeros(&f, &r, 1e-12, 40).unwrap();
    assert_eq!(zs.len(), 1);
    assert!(close(zs[0].location, 0.5, 4.775_373_554_7));
    assert_eq!(zs[0].multiplicity, 1);
}

#[test]
fn off_line_quartet() {
    let f = build_zeta_m().unwrap();
    let r = Rectangle::new(-10.0, 11.0, 27.0, 31.0).unwrap();
    let zs = isolate_zeros(&f, &r, 1e-12, 40).unwrap();
    assert_eq!(zs.len(), 4);
    for (re, im) in [
        (-6.393_998_362_3, 28.099_523_641_4),
        (7.393_998_362_3, 28.099_523_641_4),
        (-2.789_140_346_5, 29.710_711_464_7),
        (3.789_140_346_5, 29.710_711_464_7),
    ] {
        assert!(zs.iter().any(|z| close(z.location, re, im)), "{re}+{im}i missing");
    }
}

#[test]
fn pole_is_counted_and_reported() {
    let f = build_zeta_m().unwrap();
    let r = Rectangle::new(0.0, 2.0, -1.0, 1.0).unwrap();
    // No zeros near s = 1, so the winding number is minus the pole.
    assert_eq!(winding_count(&f, &r).unwrap(), -1);
    let scan = scan_zeros(&f, &r, 1e-12, 30).unwrap();
    assert_eq!(scan.poles, vec![Complex64::new(1.0, 0.0)]);
    assert_eq!(scan.zero_total(), 0);
}

#[test]
fn trivial_zeros_on_negative_axis() {
    let f = build_zeta_m().unwrap();
    let r = Rectangle::new(-7.0, -1.0, -0.5, 0.5).unwrap();
    let zs = isolate_zeros(&f, &r, 1e-12, 40).unwrap();
    let mut re: Vec<f64> = zs.iter().map(|z| z.location.re).collect();
    re.sort_by(f64::total_cmp);
    assert_eq!(re.len(), 3);
    for (got, want) in re.iter().zip([-6.0, -4.0, -2.0]) {
        assert!((got - want).abs() < 1e-10);
    }
}

#[test]
fn alpha_mapping() {
    assert!(close(zero_to_alpha(Complex64::new(0.5, 4.775_373_554_7)), 4.775_373_554_7, 0.0));
    assert!(close(zero_to_alpha(Complex64::new(7.393_998_362_3, 28.099_523_641_4)), 28.099_523_641_4, -6.893_998_362_3));
}
