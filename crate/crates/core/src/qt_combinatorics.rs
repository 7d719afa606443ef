//! Direct enumeration of the `(q,t)`-Lucas, `(q,t)`-Fibonacci and wheel
//! spanning-tree polynomials, and the subset-to-tree bijection.
//!
//! The `t` variable is stored as `v`. Elements of ground sets are labelled
//! from 1, and "even" always refers to the label.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::point_counts::{integral_quotient, partitions, q_integer};
use crate::poly::BivarPoly;

/// Largest ground set for the circular subset sums.
pub const MAX_LUCAS_N: u32 = 30;
/// Largest index for the linear (Fibonacci) subset sums.
pub const MAX_FIB_K: u32 = 31;
/// Largest wheel handled by explicit spanning-tree enumeration.
pub const MAX_WHEEL_N: u32 = 12;
/// Largest `k` accepted by [`c_ij_check`].
pub const MAX_CIJ_K: u32 = 12;

const EVEN_LABELS: u64 = 0xAAAA_AAAA_AAAA_AAAA;

/// Subset of `{1..n}` with no two circularly consecutive members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircularSubset {
    n: u32,
    members: BTreeSet<u32>,
}

impl CircularSubset {
    pub fn new(n: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::Index(format!("element {x} outside 1..={n}")));
        }
        for &x in &members {
            if members.contains(&(x % n + 1)) {
                return Err(Error::Index(format!(
                    "{x} and {} are circularly consecutive",
                    x % n + 1
                )));
            }
        }
        Ok(Self { n, members })
    }

    fn from_mask(n: u32, mask: u64) -> Self {
        Self {
            n,
            members: (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(&x)
    }

    pub fn even_count(&self) -> u32 {
        self.members.iter().filter(|&&x| x % 2 == 0).count() as u32
    }
}

/// Subset of `{1..m}` with no two linearly consecutive members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubset {
    m: u32,
    members: BTreeSet<u32>,
}

impl LinearSubset {
    pub fn new(m: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x == 0 || x > m) {
            return Err(Error::Index(format!("element {x} outside 1..={m}")));
        }
        if let Some(&x) = members.iter().find(|&&x| members.contains(&(x + 1))) {
            return Err(Error::Index(format!("{x} and {} are consecutive", x + 1)));
        }
        Ok(Self { m, members })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn even_count(&self) -> u32 {
        self.members.iter().filter(|&&x| x % 2 == 0).count() as u32
    }
}

/// Calls `f` with the bitmask (bit `i-1` for element `i`) of every subset of
/// `{1..n}` without two consecutive elements; with `circular`, `n` and `1`
/// also count as consecutive (and `{1}` is excluded when `n = 1`).
pub fn for_each_sparse_subset(n: u32, circular: bool, mut f: impl FnMut(u64)) {
    fn walk(i: u32, n: u32, circular: bool, mask: u64, f: &mut impl FnMut(u64)) {
        if i == n {
            f(mask);
            return;
        }
        walk(i + 1, n, circular, mask, f);
        let prev_taken = i > 0 && mask >> (i - 1) & 1 == 1;
        let wraps = circular && i == n - 1 && mask & 1 == 1;
        let self_loop = circular && n == 1;
        if !prev_taken && !wraps && !self_loop {
            walk(i + 1, n, circular, mask | 1 << i, f);
        }
    }
    walk(0, n, circular, 0, &mut f);
}

fn tally_to_poly(tally: HashMap<(u32, u32), u64>) -> BivarPoly {
    BivarPoly::from_terms(
        tally
            .into_iter()
            .map(|((eq, ev), c)| (eq, ev, BigInt::from(c))),
    )
}

/// Sum over sparse subsets of `q^{#even labels} v^{weight(|S|)}`, where the
/// labels run `first, first+1, ...`.
fn sparse_subset_poly(
    n: u32,
    circular: bool,
    first_label: u32,
    t_exp: impl Fn(u32) -> u32,
) -> BivarPoly {
    // Bit i carries label first_label + i.
    let even_bits = if first_label.is_multiple_of(2) {
        !EVEN_LABELS
    } else {
        EVEN_LABELS
    };
    let mut tally = HashMap::new();
    for_each_sparse_subset(n, circular, |mask| {
        let evens = (mask & even_bits).count_ones();
        *tally.entry((evens, t_exp(mask.count_ones()))).or_insert(0) += 1;
    });
    tally_to_poly(tally)
}

fn check_index(n: u32, max: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Index(format!("{what} needs a positive index")));
    }
    if n > max {
        return Err(Error::SizeLimit(format!("{what} index {n} exceeds {max}")));
    }
    Ok(())
}

/// `L_n(q,t)`: circular sparse subsets `S` of `{1..n}` weighted
/// `q^{#even} t^{floor(n/2) - |S|}`.
pub fn lucas_qt(n: u32) -> Result<BivarPoly> {
    check_index(n, MAX_LUCAS_N, "lucas")?;
    Ok(sparse_subset_poly(n, true, 1, |s| n / 2 - s))
}

/// `L~_n(q,t)`: as [`lucas_qt`] with weight `t^{|S|}`.
pub fn lucas_twisted(n: u32) -> Result<BivarPoly> {
    check_index(n, MAX_LUCAS_N, "lucas-twisted")?;
    Ok(sparse_subset_poly(n, true, 1, |s| s))
}

/// `F_k(q,t)`: linear sparse subsets of `{1..k-1}` weighted
/// `q^{#even} t^{ceil(k/2) - |S|}`.
pub fn fib_qt(k: u32) -> Result<BivarPoly> {
    check_index(k, MAX_FIB_K, "fib")?;
    let top = k.div_ceil(2);
    Ok(sparse_subset_poly(k - 1, false, 1, move |s| top - s))
}

/// `F~_k(q,t)`: as [`fib_qt`] with weight `t^{|S|}`.
pub fn fib_twisted(k: u32) -> Result<BivarPoly> {
    check_index(k, MAX_FIB_K, "fib-twisted")?;
    Ok(sparse_subset_poly(k - 1, false, 1, |s| s))
}

/// Twisted chain polynomial on the labels `first_label..first_label+len-1`:
/// linear sparse subsets weighted `q^{#even labels} t^{|S|}`. With
/// `first_label = 1` this is `F~_{len+1}`.
pub fn chain_twisted(len: u32, first_label: u32) -> Result<BivarPoly> {
    if len >= MAX_FIB_K {
        return Err(Error::SizeLimit(format!("chain length {len}")));
    }
    Ok(sparse_subset_poly(len, false, first_label, |s| s))
}

/// Spanning tree of the wheel `W_n`: hub `w_0`, rim `w_1..w_n`, spokes
/// `w_0 w_i`, and rim edges `i` joining `w_i` to `w_{i+1}` (indices mod `n`).
/// For `n = 2` the two rim edges are distinct parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WheelTree {
    n: u32,
    spokes: BTreeSet<u32>,
    rim_edges: BTreeSet<u32>,
}

impl WheelTree {
    pub fn new(
        n: u32,
        spokes: impl IntoIterator<Item = u32>,
        rim_edges: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let tree = Self {
            n,
            spokes: spokes.into_iter().collect(),
            rim_edges: rim_edges.into_iter().collect(),
        };
        tree.validate()?;
        Ok(tree)
    }

    fn from_mask(n: u32, mask: u32) -> Self {
        Self {
            n,
            spokes: (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect(),
            rim_edges: (1..=n).filter(|&i| mask >> (n + i - 1) & 1 == 1).collect(),
        }
    }

    /// Bits `0..n` are spokes, bits `n..2n` rim edges.
    pub fn edge_mask(&self) -> u32 {
        let s: u32 = self.spokes.iter().map(|&i| 1 << (i - 1)).sum();
        let r: u32 = self.rim_edges.iter().map(|&i| 1 << (self.n + i - 1)).sum();
        s | r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn spokes(&self) -> &BTreeSet<u32> {
        &self.spokes
    }

    pub fn rim_edges(&self) -> &BTreeSet<u32> {
        &self.rim_edges
    }

    pub fn spoke_count(&self) -> u32 {
        self.spokes.len() as u32
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 2 {
            return Err(Error::NotATree("wheel needs n >= 2".into()));
        }
        if self
            .spokes
            .iter()
            .chain(&self.rim_edges)
            .any(|&i| i == 0 || i > n)
        {
            return Err(Error::NotATree("edge index outside 1..=n".into()));
        }
        if self.spokes.len() + self.rim_edges.len() != n as usize {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                self.spokes.len() + self.rim_edges.len(),
                n + 1
            )));
        }
        let mut uf = UnionFind::new(n as usize + 1);
        for &i in &self.spokes {
            if !uf.union(0, i as usize) {
                return Err(Error::NotATree("cycle through the hub".into()));
            }
        }
        for &i in &self.rim_edges {
            if !uf.union(i as usize, (i % n + 1) as usize) {
                return Err(Error::NotATree("cycle on the rim".into()));
            }
        }
        Ok(())
    }

    /// Maximal rim arcs, each listed clockwise (increasing index mod `n`).
    pub fn arcs(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut arcs = Vec::new();
        for start in 1..=n {
            // Edge into w_start is rim edge start-1 (edge n for start = 1).
            let incoming = if start == 1 { n } else { start - 1 };
            if self.rim_edges.contains(&incoming) {
                continue;
            }
            let mut arc = vec![start];
            let mut cur = start;
            while self.rim_edges.contains(&cur) {
                cur = cur % n + 1;
                arc.push(cur);
            }
            arcs.push(arc);
        }
        arcs
    }

    /// Sum over arcs of the clockwise edge count from the arc's spoke
    /// endpoint to its tail (clockwise-last vertex).
    pub fn spoke_tail_total(&self) -> u32 {
        self.arcs()
            .iter()
            .map(|arc| {
                let pos = arc
                    .iter()
                    .position(|w| self.spokes.contains(w))
                    .expect("every arc of a spanning tree carries a spoke");
                (arc.len() - 1 - pos) as u32
            })
            .sum()
    }

    /// `q^{spoke-tail total} t^{#spokes}`.
    pub fn weight(&self) -> BivarPoly {
        BivarPoly::monomial(BigInt::from(1), self.spoke_tail_total(), self.spoke_count())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Every spanning tree of `W_n`, by filtering all `n`-edge subsets of the
/// `2n` edges with union-find.
pub fn spanning_trees(n: u32) -> Result<Vec<WheelTree>> {
    if !(2..=MAX_WHEEL_N).contains(&n) {
        return Err(Error::SizeLimit(format!(
            "wheel enumeration needs 2 <= n <= {MAX_WHEEL_N}, got {n}"
        )));
    }
    let total = 2 * n;
    let mut trees = Vec::new();
    // Gosper's hack over masks with exactly n bits set.
    let mut mask: u32 = (1 << n) - 1;
    let limit: u32 = 1 << total;
    while mask < limit {
        if is_tree_mask(n, mask) {
            trees.push(WheelTree::from_mask(n, mask));
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(trees)
}

fn is_tree_mask(n: u32, mask: u32) -> bool {
    if mask & ((1 << n) - 1) == 0 {
        return false;
    }
    let mut uf = UnionFind::new(n as usize + 1);
    for i in 1..=n {
        if mask >> (i - 1) & 1 == 1 && !uf.union(0, i as usize) {
            return false;
        }
        if mask >> (n + i - 1) & 1 == 1 && !uf.union(i as usize, (i % n + 1) as usize) {
            return false;
        }
    }
    true
}

/// `W_n(q,t)` as the weighted sum over all spanning trees of the wheel.
pub fn wheel_poly_enum(n: u32) -> Result<BivarPoly> {
    let mut tally = HashMap::new();
    for tree in spanning_trees(n)? {
        *tally
            .entry((tree.spoke_tail_total(), tree.spoke_count()))
            .or_insert(0u64) += 1;
    }
    Ok(tally_to_poly(tally))
}

/// `W_n(q,t)` from the partition-indexed closed form.
pub fn wheel_poly_partition(n: u32) -> Result<BivarPoly> {
    if n == 0 {
        return Err(Error::Index("wheel needs n >= 1".into()));
    }
    let mut acc = BivarPoly::zero();
    for lambda in partitions(n) {
        let len = lambda.len() as u32;
        let weight = integral_quotient(
            &(BigInt::from(n) * lambda.multinomial()),
            &BigInt::from(len),
            "wheel partition weight",
        );
        let arcs = lambda
            .parts()
            .iter()
            .fold(crate::poly::UnivarPoly::one(), |acc, &part| {
                &acc * &q_integer(part)
            });
        let term = &arcs.to_bivar_q() * &BivarPoly::monomial(weight, 0, len);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Maps a circular sparse subset of `{1..2n}` with at most `n-1` elements to
/// a spanning tree of `W_n`: spoke at `w_i` iff neither `2i-2` nor `2i-1` is
/// in `S` (with `0 = 2n`); rim edge `i` iff `2i-1` or `2i` is in `S`.
pub fn subset_to_tree(s: &CircularSubset) -> Result<WheelTree> {
    if !s.n().is_multiple_of(2) || s.n() < 4 {
        return Err(Error::NotATree(format!(
            "ground set size {} is not 2n with n >= 2",
            s.n()
        )));
    }
    let n = s.n() / 2;
    if s.len() as u32 > n - 1 {
        return Err(Error::NotATree(format!(
            "subset has {} elements, at most {} allowed",
            s.len(),
            n - 1
        )));
    }
    let label = |x: u32| if x == 0 { 2 * n } else { x };
    let spokes = (1..=n).filter(|&i| !s.contains(label(2 * i - 2)) && !s.contains(2 * i - 1));
    let rims = (1..=n).filter(|&i| s.contains(2 * i - 1) || s.contains(2 * i));
    WheelTree::new(n, spokes, rims)
}

/// Every circular sparse subset of `{1..n}`.
pub fn circular_subsets(n: u32) -> Result<Vec<CircularSubset>> {
    check_index(n, MAX_LUCAS_N, "circular subsets")?;
    let mut out = Vec::new();
    for_each_sparse_subset(n, true, |mask| out.push(CircularSubset::from_mask(n, mask)));
    Ok(out)
}

/// Counts of circular sparse subsets of `{1..2k}` and linear sparse subsets
/// of `{1..2k-2}` with `k-i-j` odd and `j` even elements. The two satisfy
/// `count_circular * i = k * count_linear`.
pub fn c_ij_check(k: u32, i: u32, j: u32) -> Result<(u64, u64)> {
    if k > MAX_CIJ_K {
        return Err(Error::SizeLimit(format!(
            "c_ij needs k <= {MAX_CIJ_K}, got {k}"
        )));
    }
    if i < 1 || i > k || j > i {
        return Err(Error::Index(format!(
            "c_ij needs 1 <= i <= k and 0 <= j <= i, got k={k} i={i} j={j}"
        )));
    }
    let Some(odd) = k.checked_sub(i + j) else {
        return Ok((0, 0));
    };
    let count = |n: u32, circular: bool| {
        let mut c = 0u64;
        for_each_sparse_subset(n, circular, |mask| {
            let evens = (mask & EVEN_LABELS).count_ones();
            if evens == j && mask.count_ones() - evens == odd {
                c += 1;
            }
        });
        c
    };
    Ok((count(2 * k, true), count(2 * k - 2, false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_counts::n_k_recurrence;
    use num_traits::One;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_qt(2).unwrap(), p("1*v + 1*q + 1"));
        assert_eq!(lucas_qt(4).unwrap(), p("1*v^2 + 2*q*v + 2*v + 1*q^2 + 1"));
        let vals: Vec<i64> = (1..=10)
            .map(|n| lucas_qt(n).unwrap().eval_i64(1, 1).try_into().unwrap())
            .collect();
        assert_eq!(vals, vec![1, 3, 4, 7, 11, 18, 29, 47, 76, 123]);
    }

    #[test]
    fn size_guards() {
        assert!(matches!(lucas_qt(31), Err(Error::SizeLimit(_))));
        assert!(matches!(fib_qt(32), Err(Error::SizeLimit(_))));
        assert!(matches!(lucas_qt(0), Err(Error::Index(_))));
        assert!(matches!(wheel_poly_enum(13), Err(Error::SizeLimit(_))));
        assert!(matches!(wheel_poly_enum(1), Err(Error::SizeLimit(_))));
        assert!(matches!(c_ij_check(13, 1, 0), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib_qt(1).unwrap(), BivarPoly::v());
        assert_eq!(fib_qt(3).unwrap(), p("1*v^2 + 1*q*v + 1*v"));
        // F_5(q, t) = -E_3(q, -t)
        let e3 = p("1*v^3 - 2*q*v^2 - 2*v^2 + 1*q^2*v + 1*q*v + 1*v");
        assert_eq!(fib_qt(5).unwrap(), -e3.negate_v());
    }

    #[test]
    fn twisted_forms() {
        for k in 1..=8 {
            let l = lucas_qt(2 * k).unwrap();
            let lt = lucas_twisted(2 * k).unwrap();
            for j in 0..=k {
                assert_eq!(
                    lt.coefficient_of_v(j),
                    l.coefficient_of_v(k - j),
                    "k={k} j={j}"
                );
            }
        }
        let fibs: Vec<i64> = (2..=8)
            .map(|k| fib_twisted(k).unwrap().eval_i64(1, 1).try_into().unwrap())
            .collect();
        assert_eq!(fibs, vec![2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn twisted_fibonacci_recurrences() {
        let qt = p("1*q*v");
        let t = BivarPoly::v();
        let one = BigInt::one();
        for k in 3..=12 {
            let f = |m: u32| fib_twisted(m).unwrap();
            // The last label 2k-3 is odd, so choosing it costs t alone.
            assert_eq!(f(2 * k - 2), &(&t * &f(2 * k - 4)) + &f(2 * k - 3), "k={k}");
            assert_eq!(
                f(2 * k - 1),
                &(&qt * &f(2 * k - 3)) + &f(2 * k - 2),
                "k={k}"
            );
            let printed = &(&qt * &f(2 * k - 4)) + &f(2 * k - 3);
            assert_eq!(f(2 * k - 2).specialize_q(&one), printed.specialize_q(&one));
        }
    }

    #[test]
    fn necklace_decomposition() {
        for k in 2..=10 {
            let odd = |m: u32| chain_twisted(m, 1).unwrap();
            let even = |m: u32| chain_twisted(m, 2).unwrap();
            let lt = lucas_twisted(2 * k - 2).unwrap();
            let lhs = &(&odd(2 * k - 3) + &even(2 * k - 3)) - &odd(2 * k - 4);
            assert_eq!(lhs, lt, "k={k}");
            let printed = &fib_twisted(2 * k - 2).unwrap().scale(&BigInt::from(2))
                - &fib_twisted(2 * k - 3).unwrap();
            assert_eq!(
                printed.specialize_q(&BigInt::one()),
                lt.specialize_q(&BigInt::one()),
                "k={k}"
            );
        }
    }

    #[test]
    fn circular_subset_validation() {
        assert!(CircularSubset::new(5, [1, 3]).is_ok());
        assert!(CircularSubset::new(5, [1, 5]).is_err());
        assert!(CircularSubset::new(5, [6]).is_err());
        assert!(LinearSubset::new(4, [1, 4]).is_ok());
        assert!(LinearSubset::new(4, [2, 3]).is_err());
    }

    #[test]
    fn wheel_two_uses_parallel_rim_edges() {
        assert_eq!(wheel_poly_enum(2).unwrap(), p("1*v^2 + 2*q*v + 2*v"));
        assert_eq!(spanning_trees(2).unwrap().len(), 5);
    }

    #[test]
    fn wheel_three_tree_count() {
        assert_eq!(spanning_trees(3).unwrap().len(), 16);
        assert_eq!(wheel_poly_enum(3).unwrap().eval_i64(1, 1), BigInt::from(16));
    }

    #[test]
    fn wheel_five_matches_point_count() {
        let expected = -n_k_recurrence(5).negate_v();
        assert_eq!(wheel_poly_enum(5).unwrap(), expected);
        assert_eq!(wheel_poly_partition(5).unwrap(), expected);
    }

    #[test]
    fn wheel_partition_small() {
        assert_eq!(wheel_poly_partition(1).unwrap(), BivarPoly::v());
        assert_eq!(
            wheel_poly_partition(3).unwrap(),
            wheel_poly_enum(3).unwrap()
        );
    }

    #[test]
    fn bijection_figure_examples() {
        let t = subset_to_tree(&CircularSubset::new(10, []).unwrap()).unwrap();
        assert_eq!(t.weight(), BivarPoly::v().pow(5));
        assert!(t.rim_edges().is_empty());

        let t = subset_to_tree(&CircularSubset::new(10, [3]).unwrap()).unwrap();
        assert_eq!(t.weight(), BivarPoly::v().pow(4));

        let t = subset_to_tree(&CircularSubset::new(10, [2, 5]).unwrap()).unwrap();
        assert_eq!(t.weight(), p("1*q*v^3"));
        assert_eq!(
            t.spokes().iter().copied().collect::<Vec<_>>(),
            vec![1, 4, 5]
        );
        assert_eq!(
            t.rim_edges().iter().copied().collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn bijection_rejects_extremes() {
        let odds = CircularSubset::new(8, [1, 3, 5, 7]).unwrap();
        assert!(matches!(subset_to_tree(&odds), Err(Error::NotATree(_))));
        let evens = CircularSubset::new(8, [2, 4, 6, 8]).unwrap();
        assert!(matches!(subset_to_tree(&evens), Err(Error::NotATree(_))));
    }

    #[test]
    fn wheel_tree_rejects_non_trees() {
        assert!(WheelTree::new(3, [1, 2, 3], [1]).is_err());
        assert!(WheelTree::new(3, [], [1, 2, 3]).is_err());
        assert!(WheelTree::new(3, [1, 2], [1]).is_err());
        assert!(WheelTree::new(3, [1], [1, 2]).is_ok());
    }

    #[test]
    fn c_ij_examples() {
        assert_eq!(c_ij_check(2, 2, 0).unwrap(), (1, 1));
        assert_eq!(c_ij_check(2, 1, 1).unwrap(), (2, 1));
        assert_eq!(c_ij_check(2, 2, 1).unwrap(), (0, 0));
        for k in 1..=8 {
            for i in 1..=k {
                for j in 0..=i {
                    let (c, l) = c_ij_check(k, i, j).unwrap();
                    assert_eq!(c * i as u64, k as u64 * l, "k={k} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn sparse_subset_counts_are_lucas_and_fibonacci() {
        let count = |n, circ| {
            let mut c = 0;
            for_each_sparse_subset(n, circ, |_| c += 1);
            c
        };
        assert_eq!(count(1, true), 1);
        assert_eq!(count(2, true), 3);
        assert_eq!(count(10, true), 123);
        assert_eq!(count(0, false), 1);
        assert_eq!(count(5, false), 13);
    }
}
