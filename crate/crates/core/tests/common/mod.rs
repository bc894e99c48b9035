//! Independent oracles. None of these call the library's determinant,
//! Pfaffian, witness search or word application.

#![allow(dead_code)]

use unimod::{Elem, ElementaryWord, Matrix, Ring};

/// Leibniz sum over all permutations, signs from inversion counts.
pub fn det_leibniz(m: &Matrix) -> Elem {
    let n = m.rows();
    let ring = m.ring();
    let mut total = ring.zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = ring.one();
        for (i, &j) in p.iter().enumerate() {
            term = &term * m.entry(i + 1, j + 1);
        }
        total = if inversions % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Sum over perfect matchings `{(i1,j1), …}` with `i < j`, signed by the
/// parity of the permutation `(i1 j1 i2 j2 …)`.
pub fn pf_matchings(m: &Matrix) -> Elem {
    let n = m.rows();
    let ring = m.ring();
    let mut total = ring.zero();
    if n % 2 == 1 {
        return total;
    }
    let mut matchings = Vec::new();
    collect_matchings(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut matchings);
    for pairs in matchings {
        let flat: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
        let inversions = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| flat[a] > flat[b])
            .count();
        let mut term = ring.one();
        for &(i, j) in &pairs {
            term = &term * m.entry(i + 1, j + 1);
        }
        total = if inversions % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

fn collect_matchings(
    free: &[usize],
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if free.is_empty() {
        out.push(acc.clone());
        return;
    }
    let first = free[0];
    for k in 1..free.len() {
        let rest: Vec<usize> = free[1..]
            .iter()
            .copied()
            .filter(|&x| x != free[k])
            .collect();
        acc.push((first, free[k]));
        collect_matchings(&rest, acc, out);
        acc.pop();
    }
}

/// Product of explicit elementary matrices, left to right.
pub fn expand_by_products(w: &ElementaryWord) -> Matrix {
    let ring = w.ring();
    let mut m = Matrix::identity(ring, w.size());
    for l in w.letters() {
        let e = Matrix::elementary(ring, w.size(), l.i, l.j, &l.lambda).unwrap();
        m = m.mul(&e).unwrap();
    }
    m
}

/// Every tuple of length `n` over `elements`, lexicographic.
pub fn tuples(elements: &[Elem], n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                elements.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// A witness found by trying every `w`.
pub fn brute_witness(ring: &Ring, v: &[Elem]) -> Option<Vec<Elem>> {
    let elements = ring.enumerate_elements().unwrap();
    tuples(&elements, v.len()).into_iter().find(|w| {
        let s = v
            .iter()
            .zip(w)
            .fold(ring.zero(), |acc, (a, b)| &acc + &(a * b));
        s.is_one()
    })
}

/// All unimodular rows by brute-force witness search.
pub fn brute_um(ring: &Ring, n: usize) -> Vec<Vec<Elem>> {
    let elements = ring.enumerate_elements().unwrap();
    tuples(&elements, n)
        .into_iter()
        .filter(|v| brute_witness(ring, v).is_some())
        .collect()
}

/// The row `v · E(w)` computed by explicit matrix products.
pub fn row_times_word(ring: &Ring, v: &[Elem], w: &ElementaryWord) -> Vec<Elem> {
    Matrix::row_vector(ring, v)
        .unwrap()
        .mul(&expand_by_products(w))
        .unwrap()
        .row(1)
}
