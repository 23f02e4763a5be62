use crate::monomial::Monomial;

/// Largest set of variables containing the support of no leading monomial.
/// This is the Krull dimension of `k[x]/M` for the monomial ideal `M`.
pub fn max_independent_set(nvars: usize, leading: &[Monomial]) -> usize {
    let masks: Vec<u64> = leading.iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    search(nvars, &masks, 0, 0, 0, &mut best);
    best
}

fn search(n: usize, masks: &[u64], v: usize, chosen: u64, size: usize, best: &mut usize) {
    if size + (n - v) <= *best {
        return;
    }
    if v == n {
        *best = size;
        return;
    }
    let with = chosen | (1 << v);
    if masks.iter().all(|&m| m & with != m) {
        search(n, masks, v + 1, with, size + 1, best);
    }
    search(n, masks, v + 1, chosen, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cases() {
        assert_eq!(max_independent_set(3, &[]), 3);
        assert_eq!(max_independent_set(2, &[Monomial::new(vec![1, 0])]), 1);
        // x*y, y*z in k[x,y,z]: {x, z} is independent
        let lm = [Monomial::new(vec![1, 1, 0]), Monomial::new(vec![0, 1, 1])];
        assert_eq!(max_independent_set(3, &lm), 2);
        assert_eq!(max_independent_set(2, &[Monomial::new(vec![0, 0])]), 0);
    }
}
