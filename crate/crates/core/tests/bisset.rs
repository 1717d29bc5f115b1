use wurst::bisset::*;
use wurst::monotone::{increasing_sequences, Monotone};
use wurst::sset::constructions::*;
use wurst::sset::enumerate::{enumerate_maps, Budget, Constraint};
use wurst::{PointedDirected, SimplicialMap};

fn all_counts(b: &BiSimplicialSet) -> Vec<usize> {
    b.bidegrees().map(|(i, j)| b.count(i, j)).collect()
}

#[test]
fn exterior_products() {
    let p = boxtimes(&point(2), &point(3));
    p.check_identities().unwrap();
    assert!(all_counts(&p).iter().all(|&c| c == 1));
    let d2 = standard_simplex(2, 2);
    let b = boxtimes(&d2, &point(2));
    for (i, j) in b.bidegrees() {
        assert_eq!(b.count(i, j), d2.count(i));
    }
    let x = boundary(2, 2);
    let y = standard_simplex(1, 2);
    let xy = boxtimes(&x, &y);
    xy.check_identities().unwrap();
    assert!(diag(&xy).is_isomorphic(&product(&x, &y).unwrap()).is_some());
}

#[test]
fn cut_objects() {
    let c0 = cut(0, (2, 2));
    c0.check_identities().unwrap();
    assert!(all_counts(&c0).iter().all(|&c| c == 1));
    // brute force: monotone maps [1] → [1]
    let mut brute = 0;
    for a in 0..=1 {
        for b in a..=1 {
            let _ = (a, b);
            brute += 1;
        }
    }
    let c1 = cut(1, (2, 2));
    c1.check_identities().unwrap();
    assert_eq!(c1.count(0, 0), brute);
    assert!(diag(&c0).is_isomorphic(&point(2)).is_some());
}

/// `dec` by exhaustive enumeration of maps out of joins over Δ^1.
fn dec_by_enumeration(k: &PointedDirected, i: usize, j: usize) -> usize {
    let cap = k.cap();
    let (js, lay) = join_with_layout(&standard_simplex(i, cap), &standard_simplex(j, cap)).unwrap();
    let (z, o) = (k.zero(), k.one());
    let constraint = |n: usize, s: usize| {
        if n != 0 {
            return Constraint::Free;
        }
        match lay.decode(0, s) {
            JoinSimplex::Left(_) => Constraint::Fixed(z),
            JoinSimplex::Right(_) => Constraint::Fixed(o),
            JoinSimplex::Mixed(..) => unreachable!(),
        }
    };
    let b = Budget::unlimited();
    let split = k.split_points().unwrap();
    let maps = enumerate_maps(&js, k.carrier(), constraint, &b).unwrap();
    // the top simplex determines the map and must lie over the right split
    let top = lay.id(i + 1 + j, JoinSimplex::Mixed(i, top_index(i), top_index(j)));
    for m in &maps {
        assert_eq!(split[i + 1 + j][m.apply(i + 1 + j, top)], i + 1);
    }
    maps.len()
}

fn top_index(n: usize) -> usize {
    simplex_index(&Monotone::identity(n))
}

#[test]
fn dec_matches_enumeration() {
    let ks = [
        suspension(&standard_simplex(1, 3)).unwrap(),
        suspension(&boundary(1, 3)).unwrap(),
        j_object(1, 1, 3).unwrap(),
        suspension_left(&standard_simplex(1, 3)).unwrap(),
    ];
    for k in &ks {
        let d = dec(k, (1, 1)).unwrap();
        d.check_identities().unwrap();
        for (i, j) in d.bidegrees() {
            assert_eq!(d.count(i, j), dec_by_enumeration(k, i, j), "({i},{j})");
        }
    }
}

#[test]
fn dec_of_suspensions() {
    for n in 0..=3 {
        let s = suspension(&standard_simplex(n, 3)).unwrap();
        let d = dec(&s, (1, 1)).unwrap();
        assert!(d.is_isomorphic(&cut(n, (1, 1))).is_some(), "n = {n}");
    }
    for n in 0..=2 {
        let s = suspension(&standard_simplex(n, 5)).unwrap();
        assert!(dec(&s, (2, 2))
            .unwrap()
            .is_isomorphic(&cut(n, (2, 2)))
            .is_some());
    }
    // the cone point of S^L lies over 0, so only the Δ^j block sees Δ^n
    for n in 0..=2 {
        let cap = (2, 2);
        let l = dec(&suspension_left(&standard_simplex(n, 5)).unwrap(), cap).unwrap();
        let r = dec(&suspension_right(&standard_simplex(n, 5)).unwrap(), cap).unwrap();
        let nb = boxtimes(&standard_simplex(n, 2), &point(2));
        let bn = boxtimes(&point(2), &standard_simplex(n, 2));
        assert!(l.is_isomorphic(&bn).is_some());
        assert!(r.is_isomorphic(&nb).is_some());
    }
}

#[test]
fn j_objects() {
    let cap = 3;
    assert!(j_object(0, 0, cap)
        .unwrap()
        .carrier()
        .is_isomorphic(&standard_simplex(1, cap))
        .is_some());
    let j10 = j_object(1, 0, cap).unwrap();
    assert_eq!(j10.carrier().nondegenerate_counts(), vec![2, 2, 1, 0]);
    for i in 0..=2 {
        for j in 0..=2 {
            let jj = j_object(i, j, 5).unwrap();
            assert!(jj.is_directed());
            if i + j <= 2 {
                let d = dec(&jj, (2, 2)).unwrap();
                let target = boxtimes(&standard_simplex(i, 2), &standard_simplex(j, 2));
                assert!(d.is_isomorphic(&target).is_some(), "({i},{j})");
            }
        }
    }
    let b1 = PointedDirected::new(boundary(1, 3), 0, 1).unwrap();
    let d = dec(&b1, (1, 1)).unwrap();
    assert!(all_counts(&d).iter().all(|&c| c == 0));
    assert!(dec(
        &PointedDirected::new(standard_simplex(2, 3), 0, 2).unwrap(),
        (1, 1)
    )
    .is_err());
}

#[test]
fn flips_and_reversals() {
    let c = cut(2, (2, 1));
    assert_eq!(flip(&flip(&c)), c);
    assert_eq!(lrev(&lrev(&c)), c);
    assert_eq!(rrev(&rrev(&c)), c);
    assert_eq!(rev(&c), rrev(&lrev(&c)));
    for b in [flip(&c), lrev(&c), rev(&c)] {
        b.check_identities().unwrap();
    }
    // Cut^n flipped and reversed in both directions is Cut^n via c ↦ n − c(reversed)
    for n in 0..=2 {
        let cap = (2, 2);
        let c = cut(n, cap);
        let f = rev(&flip(&c));
        let mut components = Vec::new();
        for i in 0..=2 {
            for j in 0..=2 {
                let seqs = increasing_sequences(i + 2 + j, n);
                components.push(
                    seqs.iter()
                        .map(|s| {
                            // the simplex at (i,j) of Cut^n is sent to the (j,i) one
                            let t: Vec<usize> = s.iter().rev().map(|&v| n - v).collect();
                            simplex_index(&Monotone::new(n, t))
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let mut comps = vec![Vec::new(); 9];
        for i in 0..=2 {
            for j in 0..=2 {
                comps[f.level(j, i)] = components[c.level(i, j)].clone();
            }
        }
        let m = BiSimplicialMap { components: comps };
        m.validate(&f, &c).unwrap();
        assert!(m.is_injective());
    }
}

#[test]
fn boundary_bisimplices() {
    let cap = (2, 2);
    let (b10, incl) = boundary_bisimplex(1, 0, cap);
    incl.validate(
        &b10,
        &boxtimes(&standard_simplex(1, 2), &standard_simplex(0, 2)),
    )
    .unwrap();
    assert!(b10
        .is_isomorphic(&boxtimes(&boundary(1, 2), &point(2)))
        .is_some());
    let (b00, _) = boundary_bisimplex(0, 0, cap);
    assert!(b00.is_empty());
    let (b11, _) = boundary_bisimplex(1, 1, cap);
    b11.check_identities().unwrap();
    assert_eq!(b11.count(0, 0), 4);
    assert_eq!(b11.nondegenerate_counts()[1][1], 0);
}

#[test]
fn cut_restrictions_are_natural() {
    let cap = (2, 2);
    for n in 0..=2 {
        let c = cut(n, cap);
        let (l, r) = cut_restrictions(n, cap);
        let dn = standard_simplex(n, 2);
        let pt = point(2);
        l.validate(&c, &boxtimes(&dn, &pt)).unwrap();
        r.validate(&c, &boxtimes(&pt, &dn)).unwrap();
        let mut gens = Vec::new();
        for k in 0..=n + 1 {
            gens.push(Monotone::coface(n + 1, k));
        }
        for k in 0..n {
            gens.push(Monotone::codegeneracy(n - 1, k));
        }
        for g in gens {
            let m = g.target;
            let cm = cut_map(&g, cap);
            cm.validate(&c, &cut(m, cap)).unwrap();
            let (l2, r2) = cut_restrictions(m, cap);
            let dm = standard_simplex(m, 2);
            let gs = SimplicialMap::new(yoneda(&dm, n, simplex_index(&g)).components);
            let id = SimplicialMap::identity(&pt);
            let gl = boxtimes_map(&dn, &pt, &gs, &dm, &pt, &id);
            let gr = boxtimes_map(&pt, &dn, &id, &pt, &dm, &gs);
            assert_eq!(cm.then(&l2), l.then(&gl));
            assert_eq!(cm.then(&r2), r.then(&gr));
        }
    }
}

#[test]
fn json_round_trip() {
    let c = cut(1, (2, 1));
    assert_eq!(BiSimplicialSet::from_json(&c.to_json()).unwrap(), c);
}
