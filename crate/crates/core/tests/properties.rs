use proptest::prelude::*;
use wurst::bisset::{boxtimes, flip};
use wurst::coherent::{canonical, is_admissible, q_model};
use wurst::homology::homology;
use wurst::monotone::Monotone;
use wurst::sset::constructions::{
    boundary, horn, join, opposite, product, standard_simplex, suspension,
};
use wurst::SimplicialSet;

fn monotone(target: usize, raw: Vec<usize>) -> Monotone {
    let mut v: Vec<usize> = raw.into_iter().map(|x| x % (target + 1)).collect();
    v.sort_unstable();
    Monotone::new(target, v)
}

fn small(which: usize, cap: usize) -> SimplicialSet {
    match which % 5 {
        0 => standard_simplex(2, cap),
        1 => boundary(2, cap),
        2 => horn(2, 0, cap).unwrap(),
        3 => suspension(&boundary(1, cap)).unwrap().into_carrier(),
        _ => boundary(1, cap),
    }
}

proptest! {
    #[test]
    fn reversal_is_an_involutive_functor(a in prop::collection::vec(0usize..5, 1..5), b in prop::collection::vec(0usize..5, 1..5), n in 0usize..4) {
        let f = monotone(n, a);
        let g = monotone(f.source(), b);
        prop_assert_eq!(f.reversed().reversed(), f.clone());
        prop_assert_eq!(f.compose(&g).reversed(), f.reversed().compose(&g.reversed()));
    }

    #[test]
    fn canonical_form_is_idempotent_and_constant_on_classes(i in 0usize..3, j in 0usize..3, raw in prop::collection::vec(any::<u32>(), 1..4)) {
        let m = i + 1 + j;
        let full = (1u32 << (m + 1)) - 1;
        let mut chain = Vec::new();
        let mut acc = (raw[0] & full) | 1 | (1 << m);
        for r in raw {
            acc |= r & full;
            chain.push(acc);
        }
        prop_assert!(is_admissible(i, j, chain[0]));
        let c = canonical(i, j, &chain);
        prop_assert_eq!(canonical(i, j, &c), c.clone());
        let qm = q_model(i, j, chain.len() - 1);
        prop_assert_eq!(qm.id(&chain), qm.id(&c));
    }

    #[test]
    fn opposite_is_an_involution(w in 0usize..5) {
        let x = small(w, 3);
        prop_assert_eq!(opposite(&opposite(&x)), x.clone());
        prop_assert!(opposite(&x).check_identities().is_ok());
    }

    #[test]
    fn joins_of_simplices_are_simplices(a in 0usize..3, b in 0usize..3) {
        let j = join(&standard_simplex(a, 4), &standard_simplex(b, 4)).unwrap();
        prop_assert!(j.check_identities().is_ok());
        prop_assert!(j.is_isomorphic(&standard_simplex(a + b + 1, 4)).is_some());
    }

    #[test]
    fn homology_is_invariant_under_cylinders(w in 0usize..5) {
        let x = small(w, 3);
        let cyl = product(&x, &standard_simplex(1, 3)).unwrap();
        for k in 0..2 {
            prop_assert_eq!(homology(&x, k).unwrap(), homology(&cyl, k).unwrap());
        }
    }

    #[test]
    fn flip_is_an_involution(a in 0usize..3, b in 0usize..3) {
        let bx = boxtimes(&standard_simplex(a, 2), &standard_simplex(b, 2));
        let f = flip(&bx);
        prop_assert!(f.check_identities().is_ok());
        prop_assert!(flip(&f).is_isomorphic(&bx).is_some());
        prop_assert!(f.is_isomorphic(&boxtimes(&standard_simplex(b, 2), &standard_simplex(a, 2))).is_some());
    }
}
