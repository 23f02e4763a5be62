use std::fmt;

/// Bounds of the verification grid: `1 <= m <= n`, `m <= max_m`,
/// `n <= max_n`, `1 <= k <= max_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub max_m: usize,
    pub max_n: usize,
    pub max_k: u32,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            max_m: 3,
            max_n: 3,
            max_k: 3,
        }
    }
}

impl Grid {
    /// Parses tokens such as `m<=2 n<=2 k<=2`, whitespace or comma separated,
    /// starting from the default grid.
    pub fn parse(tokens: &[String]) -> Result<Grid, String> {
        let mut g = Grid::default();
        for tok in tokens
            .iter()
            .flat_map(|t| t.split([',', ' ']))
            .filter(|t| !t.is_empty())
        {
            let (name, value) = tok
                .split_once("<=")
                .ok_or_else(|| format!("bad grid bound {tok:?}, expected e.g. m<=2"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("bad grid bound {tok:?}"))?;
            if value == 0 {
                return Err(format!("grid bound {tok:?} must be positive"));
            }
            match name.trim() {
                "m" => g.max_m = value,
                "n" => g.max_n = value,
                "k" => g.max_k = value as u32,
                other => return Err(format!("unknown grid variable {other:?}")),
            }
        }
        Ok(g)
    }

    pub fn contains(&self, m: usize, n: usize) -> bool {
        m >= 1 && m <= n && m <= self.max_m && n <= self.max_n
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.max_m)
            .flat_map(|m| (m..=self.max_n).map(move |n| (m, n)))
            .collect()
    }

    pub fn intersect(&self, other: &Grid) -> Grid {
        Grid {
            max_m: self.max_m.min(other.max_m),
            max_n: self.max_n.min(other.max_n),
            max_k: self.max_k.min(other.max_k),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m<={} n<={} k<={}", self.max_m, self.max_n, self.max_k)
    }
}

/// Degree-`k` test polynomials for `F(m,n)`, in textual syntax.
pub fn f_choices(m: usize, n: usize, k: u32) -> Vec<String> {
    let (a, b) = (format!("x0{m}"), format!("x1{n}"));
    let distinct: Vec<String> = (1..=k).map(|j| format!("({a} + {j}*{b})")).collect();
    let with_i = if k == 1 {
        format!("{b} + x00")
    } else {
        format!("{b}^{k} + x00*{b}^{}", k - 1)
    };
    vec![
        format!("{b}^{k}"),
        format!("{a}^{k}"),
        format!("({a} - {b})^{k}"),
        distinct.join("*"),
        with_i,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bounds() {
        let g = Grid::parse(&["m<=2".into(), "n<=2".into(), "k<=2".into()]).unwrap();
        assert_eq!(
            g,
            Grid {
                max_m: 2,
                max_n: 2,
                max_k: 2
            }
        );
        assert_eq!(g.cells(), vec![(1, 1), (1, 2), (2, 2)]);
        assert_eq!(
            Grid::parse(&["m<=1,k<=1".into()]).unwrap().cells(),
            vec![(1, 1), (1, 2), (1, 3)]
        );
        assert!(Grid::parse(&["q<=1".into()]).is_err());
        assert!(Grid::parse(&["m=1".into()]).is_err());
        assert_eq!(Grid::default().cells().len(), 6);
    }

    #[test]
    fn choices() {
        assert_eq!(
            f_choices(1, 2, 1),
            [
                "x12^1",
                "x01^1",
                "(x01 - x12)^1",
                "(x01 + 1*x12)",
                "x12 + x00"
            ]
        );
        assert_eq!(f_choices(1, 2, 2)[4], "x12^2 + x00*x12^1");
    }
}
