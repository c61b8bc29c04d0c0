//! Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rctrs::code::CodeSpec;
use rctrs::field::{FieldElement, GaloisField};
use rctrs::linalg::Matrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn els(f: &GaloisField, v: &[i64]) -> Vec<FieldElement> {
    v.iter().map(|&x| f.from_int(x)).collect()
}

pub fn random_element(f: &GaloisField, rng: &mut impl Rng) -> FieldElement {
    f.element(rng.gen_range(0..f.order())).unwrap()
}

pub fn random_nonzero(f: &GaloisField, rng: &mut impl Rng) -> FieldElement {
    f.element(rng.gen_range(1..f.order())).unwrap()
}

/// `count` distinct elements in random order.
pub fn random_distinct(f: &GaloisField, count: usize, rng: &mut impl Rng) -> Vec<FieldElement> {
    let mut all: Vec<FieldElement> = f.elements().collect();
    all.shuffle(rng);
    all.truncate(count);
    all
}

pub fn random_matrix(f: &GaloisField, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| random_element(f, rng)).collect())
        .collect::<Vec<Vec<_>>>();
    Matrix::from_rows(f, &data).unwrap()
}

/// Random RCTRS spec with `t = 1` and the given hook, `n - 1` points.
pub fn random_rctrs(f: &GaloisField, n: usize, k: usize, h: usize, rng: &mut impl Rng) -> CodeSpec {
    let alphas = random_distinct(f, n - 1, rng);
    let (b, c, lambda, eta) = (
        random_element(f, rng),
        random_element(f, rng),
        random_element(f, rng),
        random_element(f, rng),
    );
    CodeSpec::rctrs(f, alphas, k, h, 1, b, c, lambda, eta).unwrap()
}

/// Leibniz-formula determinant, independent of any elimination code.
pub fn leibniz_det(m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    let f = m[0][0].field().clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = f.zero();
    permute(&mut perm, 0, &mut |p| {
        let mut term = f.one();
        for (i, &j) in p.iter().enumerate() {
            term = term * &m[i][j];
        }
        if parity(p) {
            total = &total - &term;
        } else {
            total = &total + &term;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        visit(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, visit);
        p.swap(start, i);
    }
}

/// True for odd permutations.
fn parity(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

pub fn to_rows(m: &Matrix) -> Vec<Vec<FieldElement>> {
    (0..m.rows()).map(|i| m.row(i)).collect()
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// MDS by Leibniz determinants of every maximal minor.
pub fn oracle_is_mds(g: &Matrix) -> bool {
    let rows = to_rows(g);
    subsets(g.cols(), g.rows()).iter().all(|cols| {
        let minor: Vec<Vec<FieldElement>> = rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
        !leibniz_det(&minor).is_zero()
    })
}

/// Minimum weight over all nonzero codewords, by encoding every message.
pub fn oracle_min_distance(g: &Matrix) -> usize {
    let f = g.field().clone();
    let q = f.order();
    let k = g.rows();
    let rows = to_rows(g);
    let mut best = g.cols();
    for m in 1..q.pow(k as u32) {
        let mut word = vec![f.zero(); g.cols()];
        let mut digits = m;
        for row in &rows {
            let coef = f.element(digits % q).unwrap();
            digits /= q;
            if coef.is_zero() {
                continue;
            }
            for (w, x) in word.iter_mut().zip(row) {
                *w = &*w + &(&coef * x);
            }
        }
        best = best.min(word.iter().filter(|x| !x.is_zero()).count());
    }
    best
}

/// Elementary symmetric polynomial by direct subset enumeration.
pub fn oracle_sigma(f: &GaloisField, vals: &[FieldElement], r: usize) -> FieldElement {
    subsets(vals.len(), r).iter().fold(f.zero(), |acc, s| {
        let prod = s.iter().fold(f.one(), |p, &i| p * &vals[i]);
        acc + prod
    })
}

/// Random `t = 1` RCTRS spec for closed-form testing: `2 <= k <= 5`,
/// `k <= n <= 10`, parameters drawn from the whole field.
pub fn random_closed_form_spec(f: &GaloisField, h_of_k: impl Fn(usize) -> usize, extended: bool, rng: &mut impl Rng) -> CodeSpec {
    let max_n = (f.order() as usize + 1).min(10);
    let k = rng.gen_range(2..=5.min(max_n));
    let n = rng.gen_range(k..=max_n);
    random_rctrs(f, n, k, h_of_k(k), rng).with_extension(extended)
}
