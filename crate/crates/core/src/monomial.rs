use std::fmt;

/// Dense exponent vector, one slot per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u64 {
        assert!(
            self.0.len() <= 64,
            "support masks need at most 64 variables"
        );
        self.support().fold(0u64, |m, i| m | (1 << i))
    }

    /// Reindexes into a ring with `target_nvars` variables; variable `i`
    /// goes to slot `map[i]`.
    pub fn relabel(&self, map: &[usize], target_nvars: usize) -> Monomial {
        let mut e = vec![0; target_nvars];
        for (i, &x) in self.0.iter().enumerate() {
            if x > 0 {
                e[map[i]] += x;
            }
        }
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Every monomial of weighted degree `d`, in no particular order.
pub fn monomials_of_degree(weights: &[u32], d: u64) -> Vec<Monomial> {
    fn rec(weights: &[u32], v: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == weights.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let w = weights[v] as u64;
        let mut e = 0;
        while e * w <= left {
            cur[v] = e as u32;
            rec(weights, v + 1, left - e * w, cur, out);
            e += 1;
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(Monomial::new(vec![1, 0, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(
            a.lcm(&Monomial::new(vec![0, 3, 1])),
            Monomial::new(vec![2, 3, 1])
        );
        assert!(Monomial::new(vec![1, 0, 0]).is_coprime(&Monomial::new(vec![0, 2, 1])));
        assert_eq!(a.support_mask(), 0b011);
    }
}
