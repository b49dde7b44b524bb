//! Finite groups by Cayley table, with a small spec grammar for the CLI:
//! `cyclic:<n>`, `sym:<n>` (n ≤ 4) and `product:<spec>,<spec>`.

use crate::error::{Error, Result};

/// A finite group given by its Cayley table. Construction verifies the group
/// axioms on the table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn new(cayley: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let m = cayley.len();
        if m == 0 {
            return Err(Error::InvalidCayleyTable("empty table".into()));
        }
        if labels.len() != m || cayley.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidCayleyTable("table is not square".into()));
        }
        for row in &cayley {
            for &v in row {
                if v >= m {
                    return Err(Error::InvalidCayleyTable(format!(
                        "entry {v} out of range"
                    )));
                }
            }
        }
        // identity
        let identity = (0..m)
            .find(|&e| (0..m).all(|g| cayley[e][g] == g && cayley[g][e] == g))
            .ok_or_else(|| Error::InvalidCayleyTable("no identity element".into()))?;
        // inverses
        let mut inverse = vec![0usize; m];
        for g in 0..m {
            inverse[g] = (0..m)
                .find(|&h| cayley[g][h] == identity && cayley[h][g] == identity)
                .ok_or_else(|| {
                    Error::InvalidCayleyTable(format!("element {g} has no inverse"))
                })?;
        }
        // associativity
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidCayleyTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: m,
            cayley,
            identity,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.cayley[a][b] != self.cayley[b][a] {
                    return false;
                }
            }
        }
        true
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupSpec("cyclic:0".into()));
        }
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        FiniteGroup::new(cayley, labels)
    }

    /// Symmetric group on `n` letters, elements enumerated in lexicographic
    /// one-line order. `n ≤ 4` keeps the double constructions in range.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::InvalidGroupSpec(format!("sym:{n}")));
        }
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        let m = perms.len();
        let mut cayley = vec![vec![0usize; m]; m];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (pa ∘ pb)(i) = pa[pb[i]]
                let comp: Vec<usize> = (0..n).map(|i| pa[pb[i]]).collect();
                cayley[a][b] = index_of(&comp);
            }
        }
        let labels = perms
            .iter()
            .map(|p| {
                p.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            })
            .map(|s| format!("p{s}"))
            .collect();
        FiniteGroup::new(cayley, labels)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let m = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut cayley = vec![vec![0usize; m]; m];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        cayley[idx(x1, y1)][idx(x2, y2)] =
                            idx(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(m);
        for x in 0..a.order {
            for y in 0..b.order {
                labels.push(format!("{}|{}", a.labels[x], b.labels[y]));
            }
        }
        FiniteGroup::new(cayley, labels)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Parses the group spec grammar. For `product`, the splitting comma is the
/// first one that makes both halves parse.
pub fn named_group(spec: &str) -> Result<FiniteGroup> {
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::InvalidGroupSpec(spec.to_string()))?;
        return FiniteGroup::cyclic(n);
    }
    if let Some(n) = spec.strip_prefix("sym:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::InvalidGroupSpec(spec.to_string()))?;
        return FiniteGroup::symmetric(n);
    }
    if let Some(rest) = spec.strip_prefix("product:") {
        for (pos, _) in rest.match_indices(',') {
            let (left, right) = (&rest[..pos], &rest[pos + 1..]);
            if let (Ok(a), Ok(b)) = (named_group(left), named_group(right)) {
                return FiniteGroup::direct_product(&a, &b);
            }
        }
        return Err(Error::InvalidGroupSpec(spec.to_string()));
    }
    Err(Error::InvalidGroupSpec(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_2() {
        let g = named_group("cyclic:2").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn sym_3_noncommutative() {
        let g = named_group("sym:3").unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // a transposition and a 3-cycle do not commute
        let t = (0..6).find(|&a| g.mul(a, a) == g.identity() && a != g.identity()).unwrap();
        let c = (0..6)
            .find(|&a| {
                let a2 = g.mul(a, a);
                a != g.identity() && a2 != g.identity() && g.mul(a2, a) == g.identity()
            })
            .unwrap();
        assert_ne!(g.mul(t, c), g.mul(c, t));
    }

    #[test]
    fn klein_four() {
        let g = named_group("product:cyclic:2,cyclic:2").unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        for a in 0..4 {
            assert_eq!(g.mul(a, a), g.identity());
        }
    }

    #[test]
    fn unknown_spec_rejected() {
        assert!(named_group("dihedral:4").is_err());
        assert!(named_group("sym:5").is_err());
    }

    #[test]
    fn bad_cayley_rejected() {
        // constant table: no identity
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(FiniteGroup::new(t, vec!["a".into(), "b".into()]).is_err());
    }
}
