//! k-subsets of `0..n` in colexicographic order.

/// Iterator over the k-element subsets of `0..n`, colex order:
/// `{0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}, {0,1,4}, ...`
#[derive(Debug, Clone)]
pub struct Colex {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Self { n, current }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { next[i + 1] } else { self.n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_small() {
        let all: Vec<Vec<usize>> = Colex::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        assert_eq!(Colex::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Colex::new(2, 3).count(), 0);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let subsets: Vec<_> = Colex::new(n, k).collect();
                assert_eq!(subsets.len() as u128, binomial(n, k));
                // strictly increasing under the colex comparison
                for w in subsets.windows(2) {
                    let a: Vec<_> = w[0].iter().rev().collect();
                    let b: Vec<_> = w[1].iter().rev().collect();
                    assert!(a < b);
                }
            }
        }
    }
}
