use wurst::monotone::{binomial, increasing_sequences, Monotone};
use wurst::sset::constructions::*;
use wurst::sset::enumerate::{enumerate_maps, free, Budget, Constraint};
use wurst::{SimplicialMap, SimplicialSet};

fn nd(x: &SimplicialSet) -> Vec<usize> {
    x.nondegenerate_counts()
}

#[test]
fn standard_simplex_counts() {
    let d1 = standard_simplex(1, 1);
    assert_eq!(d1.count(1), 3);
    let d0 = standard_simplex(0, 3);
    assert!((0..=3).all(|n| d0.count(n) == 1));
    // brute force: all weakly increasing maps [2] → [2]
    let mut brute = 0;
    for a in 0..3 {
        for b in a..3 {
            for c in b..3 {
                let _ = (a, b, c);
                brute += 1;
            }
        }
    }
    assert_eq!(standard_simplex(2, 2).count(2), brute);
    assert_eq!(brute, 10);
    for n in 0..4 {
        let d = standard_simplex(n, 3);
        d.check_identities().unwrap();
        for k in 0..=3 {
            assert_eq!(d.count(k), binomial(n + k + 1, k + 1));
        }
    }
}

#[test]
fn monotone_rank_and_unrank_agree() {
    for n in 0..4 {
        for k in 0..4 {
            for (idx, v) in increasing_sequences(k + 1, n).into_iter().enumerate() {
                let m = Monotone::new(n, v);
                assert_eq!(simplex_index(&m), idx);
                assert_eq!(simplex_monotone(n, k, idx), m);
            }
        }
    }
}

#[test]
fn boundaries_and_horns() {
    let b1 = boundary(1, 2);
    assert_eq!(b1.count(0), 2);
    assert_eq!(nd(&b1), vec![2, 0, 0]);
    let h = horn(2, 1, 2).unwrap();
    assert_eq!(nd(&h), vec![3, 2, 0]);
    let nd_edges: Vec<String> = h.nondegenerate(1).iter().map(|&e| h.label(1, e)).collect();
    assert_eq!(nd_edges, vec!["01", "12"]);
    assert_eq!(nd(&boundary(2, 2)), vec![3, 3, 0]);
    assert!(horn(0, 0, 2).is_err());
    for x in [b1, h, boundary(3, 3)] {
        x.check_identities().unwrap();
    }
}

#[test]
fn products() {
    let d1 = standard_simplex(1, 3);
    let p = product(&d1, &d1).unwrap();
    p.check_identities().unwrap();
    assert_eq!(p.count(1), 9);
    // brute force over level-2 pairs: nondegenerate iff no s_i hits it
    let mut nondeg = 0;
    for a in 0..d1.count(2) {
        for b in 0..d1.count(2) {
            let va = simplex_monotone(1, 2, a).values;
            let vb = simplex_monotone(1, 2, b).values;
            let degenerate = (0..2).any(|i| va[i] == va[i + 1] && vb[i] == vb[i + 1]);
            if !degenerate {
                nondeg += 1;
            }
        }
    }
    assert_eq!(p.nondegenerate(2).len(), nondeg);
    assert_eq!(nondeg, 2);
    let x = boundary(2, 3);
    assert!(product(&x, &point(3)).unwrap().is_isomorphic(&x).is_some());
}

#[test]
fn joins() {
    let cap = 4;
    let d = |n| standard_simplex(n, cap);
    let j = join(&d(1), &d(0)).unwrap();
    j.check_identities().unwrap();
    assert!(j.is_isomorphic(&d(2)).is_some());
    assert!(join(&d(0), &d(0)).unwrap().is_isomorphic(&d(1)).is_some());
    assert!(join(&d(1), &d(1)).unwrap().is_isomorphic(&d(3)).is_some());
    let cone = join(&boundary(1, cap), &d(0)).unwrap();
    assert!(cone.is_isomorphic(&horn(2, 2, cap).unwrap()).is_some());
    assert!(cone.is_isomorphic(&horn(2, 0, cap).unwrap()).is_none());
}

#[test]
fn pushouts_and_suspensions() {
    let cap = 3;
    let d1 = standard_simplex(1, cap);
    let b1 = boundary(1, cap);
    let (_, incl) = {
        let keep: Vec<Vec<bool>> = (0..=cap)
            .map(|m| {
                (0..d1.count(m))
                    .map(|s| !simplex_monotone(1, m, s).is_surjective())
                    .collect()
            })
            .collect();
        subcomplex(&d1, &keep)
    };
    let (loop1, _) = collapse(&d1, &b1, &incl).unwrap();
    assert_eq!(nd(&loop1), vec![1, 1, 0, 0]);

    let s0 = suspension(&point(cap)).unwrap();
    assert!(s0.carrier().is_isomorphic(&d1).is_some());
    let sb = suspension(&b1).unwrap();
    assert_eq!(nd(sb.carrier()), vec![2, 2, 0, 0]);
    assert!(sb.is_directed());
    let sd1 = suspension(&d1).unwrap();
    assert_eq!(sd1.carrier().count(0), 2);
    for n in 0..3 {
        let d = standard_simplex(n, cap);
        assert!(suspension(&d).unwrap().is_directed());
        assert!(suspension_left(&d).unwrap().is_directed());
        assert!(suspension_right(&d).unwrap().is_directed());
        let (fl, fr) = suspension_comparisons(&d).unwrap();
        let s = suspension(&d).unwrap();
        fl.validate(s.carrier(), suspension_left(&d).unwrap().carrier())
            .unwrap();
        fr.validate(s.carrier(), suspension_right(&d).unwrap().carrier())
            .unwrap();
    }
    assert!(suspension_left(&point(cap))
        .unwrap()
        .carrier()
        .is_isomorphic(&d1)
        .is_some());
}

#[test]
fn opposites() {
    let cap = 3;
    let h0 = horn(2, 0, cap).unwrap();
    let h2 = horn(2, 2, cap).unwrap();
    assert!(opposite(&h0).is_isomorphic(&h2).is_some());
    assert!(opposite(&h0).is_isomorphic(&h0).is_none());
    assert_eq!(opposite(&opposite(&h0)), h0);
    for n in 0..4 {
        let d = standard_simplex(n, cap);
        assert!(opposite(&d).is_isomorphic(&d).is_some());
    }
    // S^L(K)^op ≅ S^R(K^op)
    let k = horn(2, 0, cap).unwrap();
    let l = suspension_left(&k).unwrap().opposite();
    let r = suspension_right(&opposite(&k)).unwrap();
    assert!(l.carrier().is_isomorphic(r.carrier()).is_some());
}

#[test]
fn directedness() {
    let cap = 3;
    let d1 = wurst::PointedDirected::new(standard_simplex(1, cap), 0, 1).unwrap();
    assert!(d1.is_directed());
    let b1 = wurst::PointedDirected::new(boundary(1, cap), 0, 1).unwrap();
    assert!(b1.is_directed());
    let d2 = wurst::PointedDirected::new(standard_simplex(2, cap), 0, 2).unwrap();
    assert!(!d2.is_directed());
}

#[test]
fn map_enumeration_matches_brute_force() {
    let cap = 2;
    let d1 = standard_simplex(1, cap);
    let b = Budget::unlimited();
    let maps = enumerate_maps(&d1, &d1, free, &b).unwrap();
    // brute force: monotone endomaps of [1]
    let brute = increasing_sequences(2, 1).len();
    assert_eq!(maps.len(), brute);
    let x = boundary(2, cap);
    let pts = enumerate_maps(&point(cap), &x, free, &b).unwrap();
    assert_eq!(pts.len(), x.count(0));
    for m in &maps {
        m.validate(&d1, &d1).unwrap();
    }
    // maps Δ^1 → ∂Δ^2 are its 1-simplices
    assert_eq!(enumerate_maps(&d1, &x, free, &b).unwrap().len(), x.count(1));
    // pinned enumeration
    let pinned = enumerate_maps(
        &d1,
        &x,
        |n, s| {
            if n == 0 && s == 0 {
                Constraint::Fixed(1)
            } else {
                Constraint::Free
            }
        },
        &b,
    )
    .unwrap();
    assert!(pinned.iter().all(|m| m.apply(0, 0) == 1));
    // the degenerate edge at 1 and the edge 12
    assert_eq!(pinned.len(), 2);
    let tiny = Budget::new(2);
    assert!(enumerate_maps(&d1, &x, free, &tiny).is_err());
}

#[test]
fn pushout_universal_property() {
    // two edges glued end to start, tested against maps into Δ^2
    let cap = 2;
    let d1 = standard_simplex(1, cap);
    let pt = point(cap);
    let end = SimplicialMap::new(wurst::sset::constructions::yoneda(&d1, 0, 1).components);
    let start = SimplicialMap::new(wurst::sset::constructions::yoneda(&d1, 0, 0).components);
    let (p, fb, fc) = pushout(&d1, &d1, &end, &start).unwrap();
    assert_eq!(nd(&p), vec![3, 2, 0]);
    let target = standard_simplex(2, cap);
    let b = Budget::unlimited();
    let from_p = enumerate_maps(&p, &target, free, &b).unwrap();
    // pairs of maps agreeing on the glued point
    let mb = enumerate_maps(&d1, &target, free, &b).unwrap();
    let mut pairs = 0;
    for u in &mb {
        for v in &mb {
            if end.then(u).apply(0, 0) == start.then(v).apply(0, 0) {
                pairs += 1;
            }
        }
    }
    assert_eq!(from_p.len(), pairs);
    // every map out of the pushout is determined by its two restrictions
    let mut seen = std::collections::HashSet::new();
    for m in &from_p {
        assert!(seen.insert((fb.then(m), fc.then(m))));
    }
    let _ = pt;
}

#[test]
fn json_round_trip() {
    let x = suspension(&boundary(1, 3)).unwrap().into_carrier();
    let y = SimplicialSet::from_json(&x.to_json()).unwrap();
    assert_eq!(x, y);
    let bare = x.clone().without_labels();
    assert_eq!(SimplicialSet::from_json(&bare.to_json()).unwrap(), bare);
}
