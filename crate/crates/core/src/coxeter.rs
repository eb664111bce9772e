//! Coxeter graphs of (truncated) orthoschemes: Gram matrices, truncation
//! heights, finite parabolic subgroups and orbifold Euler characteristics.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lorentz::{invert_small, SquareMatrix};
use crate::scalar::Real;

/// Edge weight between two generators. Omitted edges are [`Label::Finite`]`(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Label<T> {
    Finite(T),
    Infinite,
}

/// Weighted Coxeter graph on `order` nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoxeterGraph<T> {
    order: usize,
    // Upper triangle, row-major over pairs u < v.
    labels: Vec<Label<T>>,
}

fn pair_index(order: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // Pairs before row u: sum_{i<u} (order - 1 - i).
    u * (2 * order - u - 1) / 2 + (v - u - 1)
}

impl<T: Real> CoxeterGraph<T> {
    /// Graph with no edges (all pairs orthogonal).
    pub fn discrete(order: usize) -> Self {
        let pairs = order * order.saturating_sub(1) / 2;
        Self {
            order,
            labels: vec![Label::Finite(T::lit(2.0)); pairs],
        }
    }

    /// Linear diagram `[k_1, ..., k_{m-1}]` on `m` nodes.
    pub fn linear(labels: &[T]) -> Result<Self> {
        let mut g = Self::discrete(labels.len() + 1);
        for (i, &k) in labels.iter().enumerate() {
            g.set_label(i, i + 1, Label::Finite(k))?;
        }
        Ok(g)
    }

    /// Parses a Schläfli symbol such as `"7,3,3"` or `"6.135,3,3"`.
    /// `inf` or `∞` is accepted for an infinite label.
    pub fn parse_schlafli(input: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseSymbol {
            input: input.to_string(),
            reason,
        };
        let body = input
            .trim()
            .trim_start_matches(['{', '['])
            .trim_end_matches(['}', ']']);
        if body.is_empty() {
            return Err(fail("empty symbol".into()));
        }
        let mut g = Self::discrete(body.split(',').count() + 1);
        for (i, tok) in body.split(',').enumerate() {
            let tok = tok.trim();
            let label = match tok {
                "inf" | "∞" => Label::Infinite,
                _ => {
                    let k: f64 = tok
                        .parse()
                        .map_err(|_| fail(format!("bad entry {tok:?}")))?;
                    Label::Finite(T::lit(k))
                }
            };
            g.set_label(i, i + 1, label)
                .map_err(|e| fail(e.to_string()))?;
        }
        Ok(g)
    }

    pub fn set_label(&mut self, u: usize, v: usize, label: Label<T>) -> Result<()> {
        for idx in [u, v] {
            if idx >= self.order {
                return Err(Error::NodeOutOfRange {
                    index: idx,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::NodeOutOfRange {
                index: u,
                order: self.order,
            });
        }
        if let Label::Finite(k) = label {
            if !(k >= T::lit(2.0)) {
                return Err(Error::InvalidLabel { label: k.as_f64() });
            }
        }
        let i = pair_index(self.order, u, v);
        self.labels[i] = label;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self, u: usize, v: usize) -> Label<T> {
        self.labels[pair_index(self.order, u, v)]
    }

    /// Label as an integer, `None` for infinity.
    fn integer_label(&self, u: usize, v: usize) -> Result<Option<u64>> {
        match self.label(u, v) {
            Label::Infinite => Ok(None),
            Label::Finite(k) => {
                let r = k.round();
                if (k - r).abs() > T::epsilon() * k * T::lit(4.0) {
                    return Err(Error::NonIntegerLabel { label: k.as_f64() });
                }
                Ok(Some(r.as_f64() as u64))
            }
        }
    }

    /// Induced subgraph on the given nodes, relabelled `0..nodes.len()`.
    pub fn subgraph(&self, nodes: &[usize]) -> Self {
        let mut g = Self::discrete(nodes.len());
        for (a, &u) in nodes.iter().enumerate() {
            for (b, &v) in nodes.iter().enumerate().skip(a + 1) {
                let i = pair_index(g.order, a, b);
                g.labels[i] = self.label(u, v);
            }
        }
        g
    }
}

impl<T: Real> fmt::Display for CoxeterGraph<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.order.saturating_sub(1) {
            if i > 0 {
                write!(f, ",")?;
            }
            match self.label(i, i + 1) {
                Label::Infinite => write!(f, "∞")?,
                Label::Finite(k) => write!(f, "{k}")?,
            }
        }
        write!(f, "]")
    }
}

/// Coxeter-Schläfli matrix `c^ij = -cos(pi / k_ij)`, unit diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramMatrix<T> {
    entries: SquareMatrix<T>,
}

impl<T: Real> GramMatrix<T> {
    pub fn entries(&self) -> &SquareMatrix<T> {
        &self.entries
    }

    /// The matrix `(h_ij)` driving the distance formulas.
    pub fn inverse(&self) -> Result<SquareMatrix<T>> {
        invert_small(&self.entries)
    }

    /// Numbers of positive, negative and (numerically) zero eigenvalues.
    pub fn signature(&self) -> (usize, usize, usize) {
        let ev = symmetric_eigenvalues(&self.entries);
        let tol = T::epsilon() * T::lit(1e3);
        let pos = ev.iter().filter(|&&e| e > tol).count();
        let neg = ev.iter().filter(|&&e| e < -tol).count();
        (pos, neg, ev.len() - pos - neg)
    }
}

pub fn gram_matrix<T: Real>(g: &CoxeterGraph<T>) -> GramMatrix<T> {
    let n = g.order;
    let mut m = SquareMatrix::identity(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let c = match g.label(u, v) {
                Label::Infinite => -T::one(),
                // Exact zero for orthogonal mirrors.
                Label::Finite(k) if k == T::lit(2.0) => T::zero(),
                Label::Finite(k) => -(T::PI() / k).cos(),
            };
            m[(u, v)] = c;
            m[(v, u)] = c;
        }
    }
    GramMatrix { entries: m }
}

/// Cyclic Jacobi eigenvalue iteration for a small symmetric matrix.
fn symmetric_eigenvalues<T: Real>(a: &SquareMatrix<T>) -> Vec<T> {
    let n = a.size();
    let mut m = a.clone();
    for _sweep in 0..100 {
        let mut off = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off <= T::epsilon() * T::epsilon() {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (apq + apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
            }
        }
    }
    (0..n).map(|i| m[(i, i)]).collect()
}

/// Half the distance between adjacent base planes of the truncated simplex
/// tiled by the orthoscheme `g`:
/// `cosh h = sqrt((h_aa h_bb - h_ab^2) / (h_aa h_bb))`
/// with `a, b` the last two nodes and `(h_ij)` the inverse Gram matrix.
pub fn truncation_height<T: Real>(g: &CoxeterGraph<T>) -> Result<T> {
    let r = g.order();
    if r < 3 {
        return Err(Error::InvalidRank {
            expected: 3,
            actual: r,
        });
    }
    let h = gram_matrix(g).inverse()?;
    let (a, b) = (r - 2, r - 1);
    let haa = h[(a, a)];
    let hbb = h[(b, b)];
    let hab = h[(a, b)];
    let ratio = (haa * hbb - hab * hab) / (haa * hbb);
    let c = if ratio > T::zero() {
        ratio.sqrt()
    } else {
        ratio
    };
    if !(c > T::one()) {
        return Err(Error::NotTruncated { value: c.as_f64() });
    }
    Ok(c.acosh())
}

/// Order of a Coxeter group; affine, hyperbolic and unrecognised groups are
/// `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupOrder {
    Finite(u128),
    Infinite,
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Order of the group generated by reflections in `g`, as the product of the
/// orders of its irreducible components.
pub fn finite_order<T: Real>(g: &CoxeterGraph<T>) -> Result<GroupOrder> {
    let n = g.order();
    // Adjacency over edges with label != 2.
    let mut adj: Vec<Vec<(usize, Option<u64>)>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let k = g.integer_label(u, v)?;
            if k != Some(2) {
                adj[u].push((v, k));
                adj[v].push((u, k));
            }
        }
    }
    let mut seen = vec![false; n];
    let mut total: u128 = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &(w, _) in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        match component_order(&comp, &adj) {
            GroupOrder::Finite(o) => total *= o,
            GroupOrder::Infinite => return Ok(GroupOrder::Infinite),
        }
    }
    Ok(GroupOrder::Finite(total))
}

/// Classifies one connected component against the spherical catalogue.
fn component_order(comp: &[usize], adj: &[Vec<(usize, Option<u64>)>]) -> GroupOrder {
    use GroupOrder::{Finite, Infinite};
    let m = comp.len();
    if m == 1 {
        return Finite(2);
    }
    let edges: usize = comp.iter().map(|&u| adj[u].len()).sum::<usize>() / 2;
    if edges != m - 1 {
        return Infinite;
    }
    let mut labels = Vec::new();
    for &u in comp {
        for &(_, k) in &adj[u] {
            match k {
                None => return Infinite,
                Some(k) => labels.push(k),
            }
        }
    }
    let max_deg = comp.iter().map(|&u| adj[u].len()).max().unwrap_or(0);
    let m128 = m as u128;

    if max_deg <= 2 {
        // Path: read labels in order from one end.
        let end = *comp
            .iter()
            .find(|&&u| adj[u].len() == 1)
            .expect("path has an end");
        let mut seq = Vec::with_capacity(m - 1);
        let (mut prev, mut cur) = (usize::MAX, end);
        loop {
            let next = adj[cur].iter().find(|&&(w, _)| w != prev);
            match next {
                Some(&(w, k)) => {
                    seq.push(k.unwrap());
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if seq[0] > seq[seq.len() - 1] {
            seq.reverse();
        }
        let ones_are_three = |s: &[u64]| s.iter().all(|&k| k == 3);
        return match (m, seq.as_slice()) {
            (2, &[k]) => Finite(2 * k as u128),
            (_, s) if ones_are_three(s) => Finite(factorial(m128 + 1)),
            (_, s) if ones_are_three(&s[..s.len() - 1]) && s[s.len() - 1] == 4 => {
                Finite((1u128 << m) * factorial(m128))
            }
            (3, &[3, 5]) => Finite(120),
            (4, &[3, 3, 5]) => Finite(14400),
            (4, &[3, 4, 3]) => Finite(1152),
            _ => Infinite,
        };
    }

    if max_deg > 3 || labels.iter().any(|&k| k != 3) {
        return Infinite;
    }
    let branches: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| adj[u].len() == 3)
        .collect();
    if branches.len() != 1 {
        return Infinite;
    }
    let centre = branches[0];
    let mut arms: Vec<usize> = adj[centre]
        .iter()
        .map(|&(first, _)| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            while let Some(&(w, _)) = adj[cur].iter().find(|&&(w, _)| w != prev) {
                prev = cur;
                cur = w;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Finite((1u128 << (m - 1)) * factorial(m128)),
        [1, 2, 2] => Finite(51_840),
        [1, 2, 3] => Finite(2_903_040),
        [1, 2, 4] => Finite(696_729_600),
        _ => Infinite,
    }
}

/// `chi = sum_{T subset S} (-1)^{|T|} / |W_T|`, with `1/inf = 0` allowed
/// only for the full generating set.
pub fn orbifold_euler_characteristic<T: Real>(g: &CoxeterGraph<T>) -> Result<Ratio<i128>> {
    let n = g.order();
    let full = (1usize << n) - 1;
    let mut chi = Ratio::from_integer(0i128);
    for mask in 0..=full {
        let nodes: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sign = if nodes.len().is_multiple_of(2) { 1 } else { -1 };
        match finite_order(&g.subgraph(&nodes))? {
            GroupOrder::Finite(o) => chi += Ratio::new(sign, o as i128),
            GroupOrder::Infinite if mask == full => {}
            GroupOrder::Infinite => return Err(Error::InfiniteParabolic { nodes }),
        }
    }
    Ok(chi)
}

/// Covolume of a compact hyperbolic Coxeter 4-simplex by Gauss-Bonnet:
/// `vol = 4 pi^2 / 3 * |chi|`.
pub fn gauss_bonnet_volume_4d<T: Real>(g: &CoxeterGraph<T>) -> Result<T> {
    if g.order() != 5 {
        return Err(Error::InvalidRank {
            expected: 5,
            actual: g.order(),
        });
    }
    let chi = orbifold_euler_characteristic(g)?;
    let abs = T::from_i128(chi.numer().abs()).unwrap() / T::from_i128(*chi.denom()).unwrap();
    let pi = T::PI();
    Ok(T::lit(4.0) * pi * pi / T::lit(3.0) * abs)
}
