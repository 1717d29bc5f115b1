use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use wurst::homology::*;
use wurst::sset::constructions::{
    boundary, horn_with_inclusion, point, quotient, standard_simplex, subcomplex, suspension,
};
use wurst::SimplicialMap;

fn z(betti: usize) -> HomologyGroup {
    HomologyGroup {
        betti,
        torsion: vec![],
    }
}

#[test]
fn chain_ranks() {
    assert_eq!(normalized_chains(&point(3)).dims, vec![1, 0, 0, 0]);
    let c = normalized_chains(&boundary(2, 3));
    assert_eq!(c.dims, vec![3, 3, 0, 0]);
    assert!(c.boundary[1].mul(&c.boundary[2]).is_zero());
    let s = suspension(&boundary(1, 3)).unwrap();
    let c = normalized_chains(s.carrier());
    assert_eq!(&c.dims[..3], &[2, 2, 0]);
    let cols: Vec<Vec<i64>> = (0..2)
        .map(|e| (0..2).map(|v| c.boundary[1].get(v, e)).collect())
        .collect();
    assert_eq!(cols[0], cols[1]);
}

#[test]
fn smith_examples() {
    let f = smith_normal_form(&Matrix::from_rows(&[vec![2, 0], vec![0, 0]]));
    assert_eq!((f.factors, f.rank), (vec![BigInt::from(2)], 1));
    assert_eq!(smith_normal_form(&Matrix::zero(3, 2)).rank, 0);
    let d = &normalized_chains(&boundary(2, 2)).boundary[1];
    let f = smith_normal_form(d);
    assert_eq!(f.rank, 2);
    assert!(f.factors.iter().all(|x| *x == BigInt::from(1)));
}

#[test]
fn homology_examples() {
    for n in 0..=3 {
        for k in 0..3 {
            assert_eq!(
                homology(&standard_simplex(n, 3), k).unwrap(),
                z(usize::from(k == 0))
            );
        }
    }
    assert_eq!(homology(&boundary(2, 3), 1).unwrap(), z(1));
    assert!(homology(&boundary(2, 2), 2).is_err());
    assert_eq!(homology(&boundary(3, 4), 2).unwrap(), z(1));
    let s = suspension(&boundary(1, 3)).unwrap();
    assert_eq!(homology(s.carrier(), 1).unwrap(), z(1));
    assert!(homology(&point(2), 2).is_err());
}

#[test]
fn torsion_is_detected() {
    // a triangle with d_2 = d_0 and d_1 collapsed: ∂σ = 2e
    let d2 = standard_simplex(2, 3);
    let (x, _) = quotient(&d2, &[(1, 1, 4), (1, 2, 0)]);
    assert_eq!(homology(&x, 0).unwrap(), z(1));
    assert_eq!(
        homology(&x, 1).unwrap(),
        HomologyGroup {
            betti: 0,
            torsion: vec![BigInt::from(2)]
        }
    );
    assert_eq!(homology(&x, 1).unwrap().to_string(), "Z/2");
}

#[test]
fn contractibility_reports() {
    let r = contractibility_evidence(&boundary(2, 2), 1).unwrap();
    assert!(!r.passed());
    assert_eq!(r.witness(), Some(&(1, z(1))));
    assert!(contractibility_evidence(&standard_simplex(3, 4), 3)
        .unwrap()
        .passed());
    assert!(contractibility_evidence(&boundary(2, 2), 2).is_err());
    let (two, _, _) = wurst::sset::constructions::coproduct(&point(2), &point(2)).unwrap();
    assert_eq!(contractibility_evidence(&two, 1).unwrap().components, 2);
}

#[test]
fn cones() {
    let d2 = standard_simplex(2, 3);
    let id = SimplicialMap::identity(&d2);
    assert!(cone_acyclicity(&id, &d2, &d2, 1).unwrap().acyclic());
    let keep: Vec<Vec<bool>> = (0..=4)
        .map(|k| {
            let d = standard_simplex(2, 4);
            (0..d.count(k))
                .map(|s| !wurst::sset::constructions::simplex_monotone(2, k, s).is_surjective())
                .collect()
        })
        .collect();
    let (bd, incl) = subcomplex(&standard_simplex(2, 4), &keep);
    let r = cone_acyclicity(&incl, &bd, &standard_simplex(2, 4), 2).unwrap();
    assert!(!r.acyclic());
    assert_eq!(r.groups[2].1, z(1));
    assert!(r.groups[..2].iter().all(|(_, g)| g.is_zero()));
    assert!(cone_acyclicity(&id, &d2, &d2, 2).is_err());
    let (h, hi) = horn_with_inclusion(2, 1, 3).unwrap();
    assert!(cone_acyclicity(&hi, &h, &d2, 1).unwrap().acyclic());
    assert!(pi0_bijective(&hi, &h, &d2));
}

#[test]
fn boundaries_square_to_zero_on_a_corpus() {
    let corpus = vec![
        wurst::coherent::q(2, 1, 4),
        wurst::coherent::q(2, 2, 4),
        wurst::coherent::w(2, 3).unwrap().term(2).clone(),
        boundary(3, 4),
    ];
    for x in &corpus {
        let c = normalized_chains(x);
        for k in 2..=x.cap() {
            assert!(c.boundary[k - 1].mul(&c.boundary[k]).is_zero());
        }
    }
}

#[test]
fn euler_characteristic_matches_betti_numbers() {
    // complete complexes: nothing nondegenerate at the cap
    for x in [
        boundary(3, 4),
        wurst::coherent::q(2, 1, 4),
        wurst::coherent::q(1, 1, 3),
        suspension(&boundary(2, 4)).unwrap().into_carrier(),
    ] {
        let c = normalized_chains(&x);
        assert_eq!(c.dims[x.cap()], 0);
        let chi: i64 = c
            .dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        let mut alt = 0i64;
        for k in 0..x.cap() {
            let g = homology(&x, k).unwrap();
            assert!(g.torsion.is_empty());
            alt += if k % 2 == 0 {
                g.betti as i64
            } else {
                -(g.betti as i64)
            };
        }
        assert_eq!(chi, alt);
    }
}

#[test]
fn homology_transports_along_isomorphisms() {
    let qo = wurst::coherent::q_coefficients(3, 4);
    for (i, j) in [(1, 1), (2, 1), (1, 2)] {
        let jj = wurst::bisset::j_object(i, j, 2 * (i + j) + 1).unwrap();
        let other = wurst::coherent::frak_c_directed(&jj, &qo).unwrap();
        let mine = qo.coeff.term(i, j);
        assert!(mine.is_isomorphic(&other).is_some());
        for k in 0..4 {
            assert_eq!(homology(mine, k).unwrap(), homology(&other, k).unwrap());
        }
    }
}

/// Determinantal divisors: `d_k = gcd` of the `k × k` minors.
fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn oracle_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let (r, c) = (m.len(), m[0].len());
    let mut prev = 1i64;
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = 0i64;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j]).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

proptest! {
    #[test]
    fn smith_matches_minors(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-6i64..7, 16)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 4 + c]).collect()).collect();
        let f = smith_normal_form(&Matrix::from_rows(&m));
        let want: Vec<BigInt> = oracle_factors(&m).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(f.factors, want);
    }
}
