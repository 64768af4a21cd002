use proptest::prelude::*;
use zeta_crystal::documents::{MeasureDocument, ZeroDocument, ZeroLine};
use zeta_crystal::numerics::{Complex64, Rational};
use zeta_crystal::sequence::check_structure;
use zeta_crystal::zerofind::{winding_count, zeros_to_sequence, FnAnalytic, Rectangle, ZeroRecord};
use zeta_crystal::zetabuild::ZetaLikeFunction;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q))
}

fn record(re: f64, im: f64) -> ZeroRecord {
    ZeroRecord { location: Complex64::new(re, im), multiplicity: 1, residual: 0.0, step: 0.0, isolation_radius: 0.0 }
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn zeta_functional_equation(re in -30.0f64..30.0, im in -30.0f64..30.0) {
        prop_assume!((Complex64::new(re, im) - 1.0).norm() > 0.1 && Complex64::new(re, im).norm() > 0.1);
        prop_assume!(im.abs() > 0.1 || (re.fract().abs() > 0.05));
        let f = ZetaLikeFunction::riemann();
        let s = Complex64::new(re, im);
        let l = f.completed(s).unwrap();
        let r = f.completed(Complex64::new(1.0, 0.0) - s).unwrap();
        prop_assert!((l - r).norm() <= 1e-10 * l.norm().max(r.norm()));
    }

    #[test]
    fn winding_is_additive(roots in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..6), cut in -1.5f64..1.5) {
        prop_assume!(roots.iter().all(|&(x, _)| (x - cut).abs() > 1e-3));
        let rs: Vec<Complex64> = roots.iter().map(|&(x, y)| Complex64::new(x, y)).collect();
        let f = FnAnalytic::new(move |z: Complex64| {
            let v: Complex64 = rs.iter().map(|r| z - r).product();
            let d: Complex64 = rs.iter().map(|r| v / (z - r)).sum();
            Ok((v, d))
        });
        let whole = winding_count(&f, &Rectangle::new(-3.0, 3.0, -3.0, 3.0).unwrap()).unwrap();
        let left = winding_count(&f, &Rectangle::new(-3.0, cut, -3.0, 3.0).unwrap()).unwrap();
        let right = winding_count(&f, &Rectangle::new(cut, 3.0, -3.0, 3.0).unwrap()).unwrap();
        prop_assert_eq!(whole, roots.len() as i64);
        prop_assert_eq!(left + right, whole);
    }

    #[test]
    fn certification_ignores_input_order(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let zeros = [
            record(0.5, 4.775_373_554_7),
            record(0.5, -4.775_373_554_7),
            record(7.393_998_362_3, 28.099_523_641_4),
            record(-6.393_998_362_3, 28.099_523_641_4),
            record(3.789_140_346_5, 29.710_711_464_7),
            record(-2.789_140_346_5, 29.710_711_464_7),
            record(0.5, 32.982_606_873_8),
            record(-2.0, 0.0),
        ];
        let shuffled: Vec<ZeroRecord> = perm.iter().map(|&i| zeros[i].clone()).collect();
        let a = zeros_to_sequence(&zeros, "z").unwrap();
        let b = zeros_to_sequence(&shuffled, "z").unwrap();
        prop_assert_eq!(&a.terms, &b.terms);
        prop_assert_eq!(check_structure(&a, 10.0), check_structure(&b, 10.0));
    }

    #[test]
    fn zero_document_roundtrip(vals in prop::collection::vec((any::<f64>(), any::<f64>(), 1u32..4, 0.0f64..1.0, any::<bool>()), 0..20)) {
        let lines: Vec<ZeroLine> = vals
            .iter()
            .filter(|v| v.0.is_finite() && v.1.is_finite())
            .map(|&(re, im, multiplicity, residual, pole)| {
                if pole { ZeroLine::Pole { re, im } } else { ZeroLine::Zero { re, im, multiplicity, residual } }
            })
            .collect();
        let doc = ZeroDocument { lines };
        prop_assert_eq!(ZeroDocument::parse(&doc.serialize()).unwrap(), doc);
    }

    #[test]
    fn measure_document_roundtrip(n in 1usize..6, seed in prop::collection::vec(-1e6f64..1e6, 36)) {
        let doc = MeasureDocument { n, coefficients: seed[..n * n].to_vec() };
        prop_assert_eq!(MeasureDocument::parse(&doc.serialize()).unwrap(), doc);
    }
}
