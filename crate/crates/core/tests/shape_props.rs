use arctic_core::aztec::{height_function, sample_tiling};
use arctic_core::shape::*;
use proptest::prelude::*;

fn zero_one_steps() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0i64..=1, 1..40).prop_map(|steps| {
        let mut u = vec![0];
        for s in steps {
            u.push(u.last().unwrap() + s);
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    /// `inf (I + theta) = 0` over profiles ending at `y`, so every embedded
    /// admissible sequence has a nonnegative normalized rate.
    #[test]
    fn rate_dominates_minus_theta(u in zero_one_steps()) {
        let n = (u.len() - 1) as f64;
        let y = *u.last().unwrap() as f64 / n;
        let f = embed_sequence(&u).unwrap();
        prop_assert!(rate_i(&f).unwrap() + theta(y) >= -1e-12);
    }

    #[test]
    fn log_energy_is_nonnegative(slopes in proptest::collection::vec(-1.0f64..=1.0, 1..30)) {
        let m = slopes.len();
        let xs: Vec<f64> = (0..=m).map(|i| i as f64 / m as f64).collect();
        let mut vs = vec![0.0];
        for s in &slopes {
            vs.push(vs.last().unwrap() + s / m as f64);
        }
        let g = Profile::new(xs, vs).unwrap();
        prop_assert!(functional_j(&g) >= -1e-12);
    }

    #[test]
    fn limit_shape_is_admissible(y in 0.0f64..=1.0, a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (flo, fhi) = (f_star(lo, y).unwrap(), f_star(hi, y).unwrap());
        prop_assert!(fhi - flo >= -1e-12 && fhi - flo <= hi - lo + 1e-12);
        prop_assert!((f_star(a, y).unwrap() - f_star(y, a).unwrap()).abs() < 1e-9);
        prop_assert!((f_star(a, y).unwrap() + f_star(a, 1.0 - y).unwrap() - a).abs() < 1e-9);
        prop_assert!((g_field(a, y).unwrap() - (a + y - 2.0 * f_star(a, y).unwrap())).abs() < 1e-15);
    }
}

#[test]
fn arctic_curves_meet_at_the_ends() {
    assert_eq!(phi_pm(0.0).unwrap(), (0.5, 0.5));
    assert_eq!(phi_pm(1.0).unwrap(), (0.5, 0.5));
    let (lo, hi) = phi_pm(0.5).unwrap();
    assert!((lo - 0.0).abs() < 1e-15 && (hi - 1.0).abs() < 1e-15);
}

#[test]
fn boundary_heights_follow_the_limit() {
    // boundary heights do not depend on the tiling; they match R up to lattice effects
    for n in [20usize, 80] {
        let eta = height_function(&sample_tiling(n, 1)).unwrap();
        let nf = n as f64;
        let worst = eta
            .values()
            .into_iter()
            .filter(|((i, j), _)| (i.abs() + j.abs()) as usize >= n)
            .map(|((i, j), e)| (e as f64 / nf - r_field_clamped(i as f64 / nf, j as f64 / nf)).abs())
            .fold(0.0, f64::max);
        println!("n={n} boundary gap {worst}");
        assert!(worst <= 4.0 / nf, "n={n}: {worst}");
    }
}
