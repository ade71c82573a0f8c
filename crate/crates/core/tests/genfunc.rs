use horadam_core::{
    gf_linear, gf_power, series_coeffs, term_by_recurrence, HoradamParams, Poly, Rational,
    RationalFn, SeqKind,
};

fn families() -> Vec<(HoradamParams, SeqKind)> {
    let mut out = Vec::new();
    for (p, q) in [(1, -1), (2, 3), (-3, 2), (4, 4), (1, 1)] {
        let Ok(params) = HoradamParams::from_ints(2, -3, p, q) else { continue };
        for kind in [SeqKind::U, SeqKind::V, SeqKind::W] {
            out.push((params.clone(), kind));
        }
    }
    out
}

#[test]
fn linear_and_power_forms_coincide_at_n_one() {
    for (params, kind) in families() {
        for r in -3..=3 {
            for s in -3..=3 {
                let linear = gf_linear(&params, kind, r, s).reduced();
                let power = gf_power(&params, kind, 1, r, s).unwrap();
                assert_eq!(linear, power, "{kind} r={r} s={s}");
            }
        }
    }
}

#[test]
fn denominator_degree_is_bounded_by_n_plus_one() {
    for (params, kind) in families() {
        for n in 0..=5 {
            for r in [-2, 1, 3] {
                let rf = gf_power(&params, kind, n, r, 1).unwrap();
                assert!(rf.den().degree().unwrap() <= n as usize + 1);
                assert!(rf.num().degree().is_none_or(|d| d <= n as usize));
            }
        }
    }
}

#[test]
fn series_reproduces_powers() {
    for (params, kind) in families() {
        for n in 0..=3 {
            let rf = gf_power(&params, kind, n, 2, -1).unwrap();
            let got = series_coeffs(&rf, 10);
            for (j, c) in got.iter().enumerate() {
                let t = term_by_recurrence(&params, kind, 2 * j as i64 - 1);
                assert_eq!(c, &t.pow(i64::from(n)).unwrap());
            }
        }
    }
}

#[test]
fn fibonacci_squares() {
    let rf = gf_power(&HoradamParams::fibonacci(), SeqKind::U, 2, 1, 0).unwrap();
    let want: Vec<Rational> = [0, 1, 1, 4, 9, 25, 64, 169].into_iter().map(Rational::from).collect();
    assert_eq!(series_coeffs(&rf, 8), want);
    assert_eq!(rf.to_string(), "(0 + 1*z + -1*z^2) / (1 + -2*z + -2*z^2 + 1*z^3)");
}

#[test]
fn reduction_is_idempotent_and_value_preserving() {
    let num = Poly::from_ints(&[1, 0, -1]);
    let den = Poly::from_ints(&[1, -2, 1]);
    let rf = RationalFn::new(num, den).unwrap();
    let reduced = rf.reduced();
    assert_eq!(reduced.to_string(), "(1 + 1*z) / (1 + -1*z)");
    assert_eq!(reduced.reduced(), reduced);
    assert_eq!(series_coeffs(&rf, 6), series_coeffs(&reduced, 6));
}
