use arctic_core::aztec::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sampled_tilings_round_trip(n in 1usize..16, seed in any::<u64>()) {
        let t = sample_tiling(n, seed);
        prop_assert_eq!(t.dominoes().len(), n * (n + 1));
        let again = DominoTiling::new(n, t.dominoes().to_vec()).unwrap();
        prop_assert_eq!(&again, &t);
        let h = height_function(&t).unwrap();
        prop_assert_eq!(&tiling_from_height(&h).unwrap(), &t);
        let (a, b) = tiling_to_pair(&t).unwrap();
        prop_assert!(is_compatible(&a, &b));
        prop_assert_eq!(&tiling_from_pair(&a, &b).unwrap(), &t);
    }

    #[test]
    fn height_steps_and_boundary(n in 1usize..12, s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = build_graph(n).unwrap();
        let h1 = height_function(&sample_tiling(n, s1)).unwrap();
        let h2 = height_function(&sample_tiling(n, s2)).unwrap();
        let d = AztecDiamond::new(n).unwrap();
        for &(u, v) in &g.edges {
            let step = h1.at(u) - h1.at(v);
            prop_assert!(step == 1 || step == -3, "step {} on {:?}->{:?}", step, u, v);
            // boundary edges are never crossed by a domino, so heights agree there
            if !d.is_interior_edge(u, v) {
                prop_assert_eq!(h1.at(u), h2.at(u));
            }
        }
        prop_assert_eq!(h1.at(west_tip(n)), 0);
    }

    #[test]
    fn polar_dominoes_share_their_region_type(n in 2usize..20, seed in any::<u64>()) {
        let t = sample_tiling(n, seed);
        let mask = frozen_mask(&t);
        let d = t.diamond();
        for (k, dom) in t.dominoes().iter().enumerate() {
            if let Some(ty) = mask.region(k) {
                prop_assert_eq!(DominoType::of(dom, &d), ty);
            }
        }
        let cover = t.cover();
        for c in corner_cells(n) {
            prop_assert!(mask.is_polar(cover.at(c).unwrap()));
        }
    }
}

#[test]
fn json_round_trip() {
    let t = sample_tiling(4, 9);
    let s = serde_json::to_string(&t).unwrap();
    assert!(s.starts_with(r#"{"n":4,"dominoes":[{"x":"#));
    assert_eq!(serde_json::from_str::<DominoTiling>(&s).unwrap(), t);
    let h = height_function(&t).unwrap();
    let hs = serde_json::to_string(&h).unwrap();
    assert_eq!(serde_json::from_str::<HeightFunction>(&hs).unwrap(), h);
    // overlapping dominoes are rejected on load
    let bad = r#"{"n":1,"dominoes":[{"x":-1,"y":-1,"o":"h"},{"x":-1,"y":-1,"o":"h"}]}"#;
    assert!(serde_json::from_str::<DominoTiling>(bad).is_err());
}
