//! Binomial coefficients and lexicographic `r`-subsets of `0..n`.

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `rank`-th `r`-subset of `0..n` in lexicographic order.
pub fn unrank(mut rank: u128, n: usize, r: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(r);
    let mut next = 0;
    for slot in 0..r {
        let mut c = next;
        loop {
            let below = binomial(n - c - 1, r - slot - 1);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

/// Advances `comb` to the next `r`-subset of `0..n`; `false` after the last one.
pub fn advance(comb: &mut [usize], n: usize) -> bool {
    let r = comb.len();
    let Some(i) = (0..r).rev().find(|&i| comb[i] < n - r + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..r {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 6), 8008);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn unrank_matches_advance() {
        for (n, r) in [(6usize, 2usize), (7, 3), (5, 0), (5, 5)] {
            let mut comb: Vec<usize> = (0..r).collect();
            let mut rank = 0u128;
            loop {
                assert_eq!(unrank(rank, n, r), comb);
                rank += 1;
                if !advance(&mut comb, n) {
                    break;
                }
            }
            assert_eq!(rank, binomial(n, r));
        }
    }
}
