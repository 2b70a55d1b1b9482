//! Brute-force oracles that share no code with the library's algorithms.
#![allow(dead_code)]

/// Transitive closure by repeated relaxation over an adjacency matrix.
pub fn closure(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut lt = vec![vec![false; n]; n];
    for &(x, y) in pairs {
        lt[x][y] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if !lt[i][j] && (0..n).any(|k| lt[i][k] && lt[k][j]) {
                    lt[i][j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return lt;
        }
    }
}

/// Every subset of `{0..n}` that is down-closed under `lt`, ascending.
pub fn ideals(n: usize, lt: &[Vec<bool>]) -> Vec<u64> {
    (0..1u64 << n)
        .filter(|&s| {
            (0..n).all(|y| s >> y & 1 == 0 || (0..n).all(|x| !lt[x][y] || s >> x & 1 == 1))
        })
        .collect()
}

/// `|NPO(n)|` by testing every subset of the natural pairs for transitivity.
pub fn npo_count(n: usize) -> u64 {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |i: usize, j: usize| slots.iter().position(|&e| e == (i, j)).unwrap();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triples.push((index(i, j), index(j, k), index(i, k)));
            }
        }
    }
    (0..1u64 << slots.len())
        .filter(|&m| {
            triples
                .iter()
                .all(|&(a, b, c)| m >> a & 1 == 0 || m >> b & 1 == 0 || m >> c & 1 == 1)
        })
        .count() as u64
}

/// Minimum of `w` over all `k`-subsets that are ideals.
pub fn min_weight_ideal(n: usize, lt: &[Vec<bool>], w: &[i64], k: usize) -> i64 {
    ideals(n, lt)
        .into_iter()
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&x| s >> x & 1 == 1).map(|x| w[x]).sum())
        .min()
        .expect("ideals of every size exist")
}
