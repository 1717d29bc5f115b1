#![allow(dead_code)]

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

/// Every weakly increasing chain of `k + 1` subsets of `[i+1+j]` whose first
/// member meets both blocks, built by successive supersets.
pub fn raw_chains(i: usize, j: usize, k: usize) -> Vec<Vec<u32>> {
    let m = i + 1 + j;
    let all = 1u32 << (m + 1);
    let left = (1u32 << (i + 1)) - 1;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (0..all)
        .filter(|&s| s & left != 0 && s & !left != 0)
        .map(|s| vec![s])
        .collect();
    while let Some(c) = stack.pop() {
        if c.len() == k + 1 {
            out.push(c);
            continue;
        }
        let last = *c.last().unwrap();
        for t in 0..all {
            if t & last == last {
                let mut d = c.clone();
                d.push(t);
                stack.push(d);
            }
        }
    }
    out.sort();
    out
}

/// Classes of the relation "some `i₀ ∈ [i]`, `j₀ ∈ [j]` lie in both first
/// members and every member agrees on `[i₀, j₀]`", closed under transitivity.
pub fn raw_classes(i: usize, j: usize, chains: &[Vec<u32>]) -> Vec<usize> {
    let m = i + 1 + j;
    let mut uf = UnionFind::<usize>::new(chains.len());
    let mut first: HashMap<(usize, usize, Vec<u32>), usize> = HashMap::new();
    for (n, c) in chains.iter().enumerate() {
        for a in 0..=i {
            for b in i + 1..=m {
                if c[0] >> a & 1 == 0 || c[0] >> b & 1 == 0 {
                    continue;
                }
                let mask: u32 = (a..=b).map(|p| 1u32 << p).sum();
                let key = (a, b, c.iter().map(|s| s & mask).collect());
                match first.get(&key) {
                    Some(&f) => {
                        uf.union(f, n);
                    }
                    None => {
                        first.insert(key, n);
                    }
                }
            }
        }
    }
    let labels = uf.into_labeling();
    let mut ids: HashMap<usize, usize> = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = ids.len();
            *ids.entry(*l).or_insert(next)
        })
        .collect()
}

pub fn class_count(classes: &[usize]) -> usize {
    classes.iter().max().map_or(0, |m| m + 1)
}
