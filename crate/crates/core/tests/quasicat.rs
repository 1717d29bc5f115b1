use wurst::coherent::{coherent_nerve, f_category, EnrichedCategory};
use wurst::quasicat::*;
use wurst::sset::constructions::{boundary, opposite, point, standard_simplex};
use wurst::sset::enumerate::{enumerate_maps, Budget, Constraint};
use wurst::SimplicialSet;

fn budget() -> Budget {
    Budget::new(200_000_000)
}

#[test]
fn homs_in_a_simplex_are_points() {
    let d1 = standard_simplex(1, 3);
    let b = budget();
    for v in [Variant::Left, Variant::Right, Variant::Middle] {
        let h = hom_space(&d1, 0, 1, v, 2, &b).unwrap();
        assert!(h.set.is_isomorphic(&point(2)).is_some(), "{v}");
    }
    let c = comparison_maps(&d1, 0, 1, 2, &b).unwrap();
    assert_eq!(c.from_left, wurst::SimplicialMap::identity(&c.left.set));
    assert_eq!(c.from_right, wurst::SimplicialMap::identity(&c.right.set));
}

/// Maps `[n] × [1] → [2]` of posets with fixed ends, counted directly.
fn poset_homs(x: usize, y: usize, n: usize) -> usize {
    let mut count = 0;
    // a map is a pair of monotone rows with bottom ≤ top pointwise
    let rows = wurst::monotone::increasing_sequences(n + 1, 2);
    for lo in &rows {
        for hi in &rows {
            if lo.iter().all(|&v| v == x)
                && hi.iter().all(|&v| v == y)
                && lo.iter().zip(hi).all(|(a, b)| a <= b)
            {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn homs_in_a_poset_nerve_are_discrete() {
    let d2 = standard_simplex(2, 3);
    let b = budget();
    for (x, y) in [(0, 1), (0, 2), (1, 2), (0, 0), (2, 0)] {
        for v in [Variant::Left, Variant::Right, Variant::Middle] {
            let h = hom_space(&d2, x, y, v, 2, &b).unwrap();
            for n in 0..=2 {
                assert_eq!(
                    h.set.count(n),
                    poset_homs(x, y, n),
                    "{v} ({x},{y}) level {n}"
                );
            }
        }
    }
}

#[test]
fn right_is_opposite_of_left_in_the_opposite() {
    let b = budget();
    let corpus: Vec<SimplicialSet> = vec![
        standard_simplex(2, 3),
        boundary(2, 3),
        coherent_nerve(&f_category(&standard_simplex(1, 2)), 3, &b)
            .unwrap()
            .set,
        coherent_nerve(&f_category(&boundary(1, 2)), 3, &b)
            .unwrap()
            .set,
    ];
    for x in &corpus {
        for p in 0..x.count(0) {
            for q in 0..x.count(0) {
                let r = hom_right(x, p, q, 2).unwrap();
                let l = hom_left(&opposite(x), q, p, 2).unwrap();
                assert_eq!(r.witnesses, l.witnesses);
                assert_eq!(r.set, opposite(&l.set));
            }
        }
    }
}

#[test]
fn comparisons_are_injective() {
    let b = budget();
    for k in [
        standard_simplex(1, 2),
        boundary(1, 2),
        standard_simplex(2, 2),
    ] {
        let n = coherent_nerve(&f_category(&k), 3, &b).unwrap();
        let c = comparison_maps(&n.set, 0, 1, 2, &b).unwrap();
        assert!(c.from_left.is_injective());
        assert!(c.from_right.is_injective());
    }
}

#[test]
fn comparisons_are_natural_in_functors() {
    // the poset map [1] → [2], 0 ↦ 0, 1 ↦ 2 induces maps of mapping spaces
    let b = budget();
    let d1 = standard_simplex(1, 3);
    let d2 = standard_simplex(2, 3);
    let f = wurst::sset::constructions::yoneda(
        &d2,
        1,
        wurst::sset::constructions::simplex_index(&wurst::monotone::Monotone::new(2, vec![0, 2])),
    );
    let (c1, c2) = (
        comparison_maps(&d1, 0, 1, 2, &b).unwrap(),
        comparison_maps(&d2, 0, 2, 2, &b).unwrap(),
    );
    for n in 0..=2 {
        for s in 0..c1.left.set.count(n) {
            let Witness::Top(t) = c1.left.witnesses[n][s] else {
                panic!()
            };
            let img = c2.left.locate(n, &Witness::Top(f.apply(n + 1, t))).unwrap();
            let Witness::Probe(p) = &c1.middle.witnesses[n][c1.from_left.apply(n, s)] else {
                panic!()
            };
            let pushed = Witness::Probe(p.then(&f));
            assert_eq!(
                c2.middle.locate(n, &pushed),
                Some(c2.from_left.apply(n, img))
            );
        }
    }
}

#[test]
fn tautological_isomorphisms() {
    let b = budget();
    for k in [
        point(2),
        standard_simplex(1, 2),
        boundary(1, 2),
        standard_simplex(2, 2),
    ] {
        let c = f_category(&k);
        let r = tautological_iso_check(&c, 0, 1, 2, &b).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    // independent enumeration of both sides at F(∂Δ^1)
    let k = boundary(1, 2);
    let tt = tautological(&f_category(&k), 0, 1, 2, &b).unwrap();
    for n in 0..=2 {
        let direct = enumerate_maps(tt.w.term(n), &k, |_, _| Constraint::Free, &b)
            .unwrap()
            .len();
        assert_eq!(tt.hom.middle.set.count(n), direct);
    }
}

#[test]
fn op_symmetry() {
    let b = budget();
    let r = op_symmetry_check(&f_category(&point(2)), 0, 1, 2, &b).unwrap();
    assert!(r.passed() && r.middle_is_identity, "{r:?}");
    let r = op_symmetry_check(&f_category(&standard_simplex(1, 2)), 0, 1, 2, &b).unwrap();
    assert!(r.passed(), "{r:?}");
    // the middle symmetry is a nontrivial involution here
    assert!(!r.middle_is_identity);
}

#[test]
fn horn_fillers() {
    let b = budget();
    for m in 1..=3 {
        let x = standard_simplex(m, 3);
        for n in 2..=3 {
            for k in 1..n {
                assert!(horn_filler_check(&x, n, k, &b).unwrap().passed());
            }
        }
    }
    let r = horn_filler_check(&boundary(2, 2), 2, 1, &b).unwrap();
    assert!(!r.passed());
    assert!(r.unfilled.is_some());
    // Kan mapping complexes give inner fillers
    for k in [point(2), boundary(1, 2)] {
        let nerve = coherent_nerve(&f_category(&k), 3, &b).unwrap();
        for n in 2..=3 {
            for i in 1..n {
                let r = horn_filler_check(&nerve.set, n, i, &b).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
    // C(0,1) = Δ^1 is not Kan: compositions exist but some 3-dimensional inner horns stay open
    let nerve = coherent_nerve(&f_category(&standard_simplex(1, 2)), 3, &b).unwrap();
    assert!(horn_filler_check(&nerve.set, 2, 1, &b).unwrap().passed());
    let r = horn_filler_check(&nerve.set, 3, 1, &b).unwrap();
    assert_eq!((r.horns, r.filled), (18, 16));
}

#[test]
fn requests_are_validated() {
    let d1 = standard_simplex(1, 2);
    assert!(hom_left(&d1, 0, 1, 2).is_err());
    assert!(hom_left(&d1, 0, 5, 1).is_err());
    assert!(tautological(&EnrichedCategory::poset(1, 2), 0, 0, 1, &budget()).is_err());
}
