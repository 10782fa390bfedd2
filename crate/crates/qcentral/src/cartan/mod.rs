//! Root-system and Weyl-group data for the simply-laced families A and D:
//! Cartan matrix, positive roots, and a fixed reduced word for the longest
//! Weyl element whose traversal induces the convex (PBW) order on roots.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dynkin family. Only the two families the pipeline computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CartanFamily {
    A,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanType {
    pub family: CartanFamily,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: CartanFamily, rank: usize) -> Result<Self> {
        match family {
            CartanFamily::A if rank >= 1 => Ok(CartanType { family, rank }),
            CartanFamily::D if rank >= 3 => Ok(CartanType { family, rank }),
            CartanFamily::A => Err(Error::UnsupportedType("A requires rank >= 1".into())),
            CartanFamily::D => Err(Error::UnsupportedType("D requires rank >= 3".into())),
        }
    }

    pub fn parse(family: &str, rank: usize) -> Result<Self> {
        match family {
            "A" | "a" => Self::new(CartanFamily::A, rank),
            "D" | "d" => Self::new(CartanFamily::D, rank),
            other => Err(Error::UnsupportedType(format!(
                "family {other:?} (supported: A, D)"
            ))),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// An integer vector in the simple-root basis. Used both for U_q^- weight
/// gradings (nonnegative cone) and for root coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Complete root data for one Cartan type.
#[derive(Clone, Debug, Serialize)]
pub struct RootData {
    pub ctype: CartanType,
    /// Cartan matrix a[i][j].
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers d_i (all 1 in the simply-laced families here).
    pub sym: Vec<i64>,
    /// Positive roots in the convex order induced by `w0_word`.
    pub positive_roots: Vec<Weight>,
    /// Reduced word for the longest Weyl element (indices of simple
    /// reflections, 0-based).
    pub w0_word: Vec<usize>,
}

impl RootData {
    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    /// Invariant symmetric form on the root lattice: (mu, nu) = mu^T (D A) nu
    /// restricted to our simply-laced case where D = I.
    pub fn form(&self, mu: &Weight, nu: &Weight) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if mu.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += mu.0[i] * self.sym[i] * self.cartan[i][j] * nu.0[j];
            }
        }
        acc
    }

    /// (alpha_i, alpha_j).
    pub fn root_form(&self, i: usize, j: usize) -> i64 {
        self.sym[i] * self.cartan[i][j]
    }

    /// Apply the simple reflection s_i to a root-lattice vector.
    pub fn reflect(&self, i: usize, v: &Weight) -> Weight {
        // s_i(v) = v - <v, alpha_i^vee> alpha_i ; for simply-laced
        // <v, alpha_i^vee> = sum_j v_j a_ij
        let pairing: i64 = (0..self.rank()).map(|j| v.0[j] * self.cartan[j][i]).sum();
        let mut out = v.clone();
        out.0[i] -= pairing;
        out
    }

    /// Sum of all positive roots (the vector 2*rho in root coordinates).
    pub fn two_rho(&self) -> Weight {
        let mut acc = Weight::zero(self.rank());
        for beta in &self.positive_roots {
            acc = acc.add(beta);
        }
        acc
    }
}

/// Cartan matrix for the supported families (Bourbaki labels, 0-based):
/// A_n is the path 0-1-...-(n-1); D_n is the path 0-...-(n-3) with both
/// (n-2) and (n-1) attached to (n-3).
fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let connect = |i: usize, j: usize, a: &mut Vec<Vec<i64>>| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        CartanFamily::A => {
            for i in 0..n.saturating_sub(1) {
                connect(i, i + 1, &mut a);
            }
        }
        CartanFamily::D => {
            for i in 0..n - 2 {
                if i + 1 <= n - 3 {
                    connect(i, i + 1, &mut a);
                }
            }
            connect(n - 3, n - 2, &mut a);
            connect(n - 3, n - 1, &mut a);
        }
    }
    a
}

/// Enumerate all positive roots by closing the simple roots under simple
/// reflections. Independent of the w0 traversal; used as its cross-check.
pub fn positive_roots_by_closure(t: CartanType) -> Vec<Weight> {
    let cartan = cartan_matrix(t);
    let n = t.rank;
    let mut seen: std::collections::BTreeSet<Weight> = std::collections::BTreeSet::new();
    let mut queue: Vec<Weight> = (0..n).map(|i| Weight::simple(n, i)).collect();
    for r in &queue {
        seen.insert(r.clone());
    }
    while let Some(v) = queue.pop() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| v.0[j] * cartan[j][i]).sum();
            let mut w = v.clone();
            w.0[i] -= pairing;
            if w.is_nonnegative() && !w.is_zero() && seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Build complete root data with a deterministic reduced word for w0:
/// starting from the identity, repeatedly append the smallest simple index
/// whose root is still sent to a positive root (i.e. the lexicographically
/// smallest reduced word under greedy left-to-right generation).
pub fn build_root_data(t: CartanType) -> Result<RootData> {
    let ctype = CartanType::new(t.family, t.rank)?;
    let n = ctype.rank;
    let cartan = cartan_matrix(ctype);
    let sym = vec![1i64; n];

    let data = RootData {
        ctype,
        cartan,
        sym,
        positive_roots: vec![],
        w0_word: vec![],
    };

    let num_pos = positive_roots_by_closure(ctype).len();

    // Greedy reduced word w0 = s_{j1} s_{j2} ... : maintain v_i = w(alpha_i)
    // for the prefix w; appending s_j keeps the word reduced iff v_j > 0, and
    // the convex-order root produced at that step is exactly v_j. Update
    // after choosing j: v_i <- v_i - a_ij * v_j. Always taking the smallest
    // admissible j makes the word (hence the PBW order) deterministic.
    let mut word: Vec<usize> = Vec::with_capacity(num_pos);
    let mut roots: Vec<Weight> = Vec::with_capacity(num_pos);
    let mut images: Vec<Weight> = (0..n).map(|i| Weight::simple(n, i)).collect();
    for _ in 0..num_pos {
        let mut chosen = None;
        for (j, im) in images.iter().enumerate() {
            if im.is_nonnegative() && !im.is_zero() {
                chosen = Some(j);
                break;
            }
        }
        let j = chosen.ok_or_else(|| {
            Error::Invalid("w0 generation stalled before exhausting positive roots".into())
        })?;
        word.push(j);
        roots.push(images[j].clone());
        let vj = images[j].clone();
        for (i, im) in images.iter_mut().enumerate() {
            let c = data.cartan[i][j];
            if c != 0 {
                for (a, b) in im.0.iter_mut().zip(&vj.0) {
                    *a -= c * b;
                }
            }
        }
    }

    let out = RootData {
        positive_roots: roots,
        w0_word: word,
        ..data
    };
    out.validate()?;
    Ok(out)
}

impl RootData {
    /// Internal consistency: the w0 traversal generates each positive root
    /// exactly once and the Cartan matrix is symmetrizable.
    fn validate(&self) -> Result<()> {
        let closure = positive_roots_by_closure(self.ctype);
        let mut sorted = self.positive_roots.clone();
        sorted.sort();
        if sorted != closure {
            return Err(Error::Invalid(format!(
                "convex order roots disagree with reflection closure for {}",
                self.ctype
            )));
        }
        if self.w0_word.len() != self.positive_roots.len() {
            return Err(Error::Invalid("w0 length != number of positive roots".into()));
        }
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if self.sym[i] * self.cartan[i][j] != self.sym[j] * self.cartan[j][i] {
                    return Err(Error::Invalid("Cartan matrix is not symmetrizable".into()));
                }
            }
        }
        for root in &self.positive_roots {
            if !root.is_nonnegative() || root.is_zero() {
                return Err(Error::Invalid("non-positive root in convex order".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RootData {
        build_root_data(CartanType::new(CartanFamily::A, n).unwrap()).unwrap()
    }

    fn d(n: usize) -> RootData {
        build_root_data(CartanType::new(CartanFamily::D, n).unwrap()).unwrap()
    }

    #[test]
    fn a2_roots_and_word() {
        let rd = a(2);
        assert_eq!(rd.positive_roots.len(), 3);
        assert_eq!(rd.w0_word.len(), 3);
        // convex order from the greedy word [0,1,0]: alpha1, alpha1+alpha2, alpha2
        assert_eq!(rd.w0_word, vec![0, 1, 0]);
        assert_eq!(
            rd.positive_roots,
            vec![
                Weight(vec![1, 0]),
                Weight(vec![1, 1]),
                Weight(vec![0, 1])
            ]
        );
    }

    #[test]
    fn root_counts_match_closure_oracle() {
        // A_n: n(n+1)/2 roots; D_n: n(n-1)
        assert_eq!(a(1).positive_roots.len(), 1);
        assert_eq!(a(3).positive_roots.len(), 6);
        assert_eq!(d(4).positive_roots.len(), 12);
        assert_eq!(d(6).positive_roots.len(), 30);
        for rd in [a(1), a(2), a(3), d(3), d(4), d(5), d(6)] {
            let mut got = rd.positive_roots.clone();
            got.sort();
            let expect = positive_roots_by_closure(rd.ctype);
            assert_eq!(got, expect, "traversal vs closure for {}", rd.ctype);
            // traversal hits each root exactly once
            let dedup: std::collections::BTreeSet<_> =
                rd.positive_roots.iter().cloned().collect();
            assert_eq!(dedup.len(), rd.positive_roots.len());
        }
    }

    #[test]
    fn d3_is_a3_under_relabeling() {
        // D3 with nodes (0; 1, 2 forked at 0) matches A3's path 1-0-2:
        // relabel D3 index 1 -> A3 index 0, 0 -> 1, 2 -> 2.
        let d3 = d(3);
        let a3 = a(3);
        let relabel = [1usize, 0, 2];
        let mut mapped: Vec<Weight> = d3
            .positive_roots
            .iter()
            .map(|r| {
                let mut v = vec![0i64; 3];
                for (i, &c) in r.0.iter().enumerate() {
                    v[relabel[i]] = c;
                }
                Weight(v)
            })
            .collect();
        mapped.sort();
        let mut a3_roots = a3.positive_roots.clone();
        a3_roots.sort();
        assert_eq!(mapped, a3_roots);
    }

    #[test]
    fn form_is_symmetric_and_even_on_roots() {
        for rd in [a(3), d(4)] {
            for b1 in &rd.positive_roots {
                assert_eq!(rd.form(b1, b1), 2, "simply-laced roots have norm 2");
                for b2 in &rd.positive_roots {
                    assert_eq!(rd.form(b1, b2), rd.form(b2, b1));
                }
            }
        }
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!(CartanType::parse("E", 6).is_err());
        assert!(CartanType::new(CartanFamily::D, 2).is_err());
    }
}
