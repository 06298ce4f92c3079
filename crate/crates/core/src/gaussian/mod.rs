//! Exact rational linear algebra and conditional independence for regular
//! Gaussian distributions.
//!
//! `<i, j | C>` holds exactly when the partial covariance
//! `Σ_ij − Σ_iC Σ_CC⁻¹ Σ_Cj` vanishes. Partial covariances for all `C` are
//! produced by pivoting one node at a time: eliminating `k` from `Σ/C`
//! yields `Σ/(C ∪ {k})`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph};
use crate::model::{IndependenceModel, MAX_MODEL_NODES};
use crate::nodeset::{Ground, NodeSet};

/// A square matrix of exact rationals with labelled rows and columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    ground: Ground,
    entries: Vec<BigRational>,
}

impl core::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.n() {
            let row: Vec<_> = (0..self.n()).map(|j| self.get(i, j).to_string()).collect();
            l.entry(&row);
        }
        l.finish()
    }
}

/// How a matrix is read when deriving an independence model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Covariance,
    /// The matrix is `Σ⁻¹`.
    Concentration,
}

impl RationalMatrix {
    pub fn new(ground: Ground, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = ground.len();
        if rows.len() != n {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: n,
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { ground, entries })
    }

    pub fn from_fn(ground: Ground, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let n = ground.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        RationalMatrix { ground, entries }
    }

    /// Integer entries, for literals.
    pub fn from_integers(ground: Ground, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        RationalMatrix::new(ground, rows)
    }

    pub fn identity(ground: Ground) -> Self {
        RationalMatrix::from_fn(ground, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        let n = self.n();
        self.entries[i * n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.n().max(1)).map(<[_]>::to_vec).take(self.n()).collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.n() != other.n() {
            return Err(Error::GroundMismatch);
        }
        let n = self.n();
        Ok(RationalMatrix::from_fn(self.ground.clone(), |i, j| {
            (0..n).fold(BigRational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    fn symmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn require_symmetric(&self) -> Result<()> {
        match self.symmetry_violation() {
            Some((i, j)) => Err(Error::NotSymmetric(
                self.ground.label(i).to_string(),
                self.ground.label(j).to_string(),
            )),
            None => Ok(()),
        }
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> BigRational {
        determinant_of(self.n(), self.entries.clone())
    }

    /// Determinants of the leading `k × k` blocks, `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<BigRational> {
        (1..=self.n())
            .map(|k| {
                let block = (0..k * k).map(|t| self.get(t / k, t % k).clone()).collect();
                determinant_of(k, block)
            })
            .collect()
    }

    /// Symmetric with every leading principal minor positive.
    pub fn is_positive_definite(&self) -> bool {
        self.require_positive_definite().is_ok()
    }

    pub fn require_positive_definite(&self) -> Result<()> {
        self.require_symmetric()?;
        for (k, m) in self.leading_minors().into_iter().enumerate() {
            if !m.is_positive() {
                return Err(Error::NotPositiveDefinite {
                    order: k + 1,
                    value: m.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        let n = self.n();
        let mut a = self.entries.clone();
        let mut inv = RationalMatrix::identity(self.ground.clone()).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for t in 0..n {
                    a.swap(pivot * n + t, col * n + t);
                    inv.swap(pivot * n + t, col * n + t);
                }
            }
            let p = a[col * n + col].clone();
            for t in 0..n {
                a[col * n + t] = &a[col * n + t] / &p;
                inv[col * n + t] = &inv[col * n + t] / &p;
            }
            for r in (0..n).filter(|&r| r != col) {
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for t in 0..n {
                    a[r * n + t] = &a[r * n + t] - &f * &a[col * n + t];
                    inv[r * n + t] = &inv[r * n + t] - &f * &inv[col * n + t];
                }
            }
        }
        Ok(RationalMatrix {
            ground: self.ground.clone(),
            entries: inv,
        })
    }

    /// Positive diagonal and non-positive off-diagonal entries.
    pub fn is_m_matrix(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_positive()
                } else {
                    !x.is_positive()
                }
            })
        })
    }

    /// No zero entries.
    pub fn is_dense(&self) -> bool {
        self.entries.iter().all(|x| !x.is_zero())
    }
}

fn determinant_of(n: usize, mut a: Vec<BigRational>) -> BigRational {
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            for t in 0..n {
                a.swap(pivot * n + t, col * n + t);
            }
            det = -det;
        }
        let p = a[col * n + col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &a[r * n + col] / &p;
            if f.is_zero() {
                continue;
            }
            for t in col..n {
                a[r * n + t] = &a[r * n + t] - &f * &a[col * n + t];
            }
        }
    }
    det
}

/// The model of a regular Gaussian with covariance `sigma`.
///
/// # Errors
/// Non-symmetric or non-positive-definite input, or a ground above
/// [`MAX_MODEL_NODES`].
pub fn model_from_covariance(sigma: &RationalMatrix) -> Result<IndependenceModel> {
    sigma.require_positive_definite()?;
    let n = sigma.n();
    if n > MAX_MODEL_NODES {
        return Err(Error::CapExceeded {
            what: "covariance matrix",
            actual: n,
            cap: MAX_MODEL_NODES,
        });
    }
    // zero[(i * n + j) << n | C] for i < j
    let mut zero = vec![false; (n * n) << n];
    let mut stack = vec![(NodeSet::EMPTY, sigma.entries.clone())];
    while let Some((c, s)) = stack.pop() {
        for i in (0..n).filter(|&i| !c.contains(i)) {
            for j in (i + 1..n).filter(|&j| !c.contains(j)) {
                if s[i * n + j].is_zero() {
                    zero[(i * n + j) << n | c.bits() as usize] = true;
                }
            }
        }
        let start = (0..n).rev().find(|&k| c.contains(k)).map_or(0, |k| k + 1);
        for k in start..n {
            stack.push((c.with(k), pivot(&s, n, c, k)));
        }
    }
    IndependenceModel::from_elementary(sigma.ground.clone(), |i, j, c| zero[(i * n + j) << n | c.bits() as usize])
}

/// Schur complement step: eliminates `k` from the partial covariance `s`
/// (of the nodes outside `c`).
fn pivot(s: &[BigRational], n: usize, c: NodeSet, k: usize) -> Vec<BigRational> {
    let mut out = s.to_vec();
    let pkk = &s[k * n + k];
    let rest = (0..n).filter(|&v| v != k && !c.contains(v));
    for a in rest.clone() {
        if s[a * n + k].is_zero() {
            continue;
        }
        let f = &s[a * n + k] / pkk;
        for b in rest.clone() {
            out[a * n + b] = &s[a * n + b] - &f * &s[k * n + b];
        }
    }
    out
}

/// The model of a regular Gaussian from a matrix read in the given role.
pub fn model_from_matrix(m: &RationalMatrix, role: Role) -> Result<IndependenceModel> {
    match role {
        Role::Covariance => model_from_covariance(m),
        Role::Concentration => {
            m.require_positive_definite()?;
            model_from_covariance(&m.inverse()?)
        }
    }
}

fn require_undirected(g: &MixedGraph) -> Result<()> {
    if g.has_kind(EdgeKind::Arrow) || g.has_kind(EdgeKind::Arc) || !g.is_simple() {
        return Err(Error::NotUndirected);
    }
    Ok(())
}

/// `A^{G,ε}`: ones on the diagonal, `ε` for adjacent pairs, zero elsewhere.
pub fn build_a_g_eps(g: &MixedGraph, eps: &BigRational) -> Result<RationalMatrix> {
    require_undirected(g)?;
    Ok(RationalMatrix::from_fn(g.ground().clone(), |i, j| {
        if i == j {
            BigRational::one()
        } else if g.adjacent(i, j) {
            eps.clone()
        } else {
            BigRational::zero()
        }
    }))
}

/// `I − ε·Adj(G)`.
pub fn identity_minus_eps_adjacency(g: &MixedGraph, eps: &BigRational) -> Result<RationalMatrix> {
    require_undirected(g)?;
    Ok(RationalMatrix::from_fn(g.ground().clone(), |i, j| {
        if i == j {
            BigRational::one()
        } else if g.adjacent(i, j) {
            -eps.clone()
        } else {
            BigRational::zero()
        }
    }))
}

/// Parses `p/q`, an integer, or a decimal such as `-0.125` or `1e-3`
/// exactly.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty()
        || !int.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let mut all = alloc::string::String::from(int);
    all.push_str(frac);
    let num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn ground(n: usize) -> Ground {
        Ground::new((1..=n).map(|i| alloc::format!("{i}"))).unwrap()
    }

    #[test]
    fn determinant_and_minors() {
        let m = RationalMatrix::from_integers(ground(2), &[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(m.determinant(), q(-3, 1));
        assert!(!m.is_positive_definite());
        assert_eq!(
            m.require_positive_definite().unwrap_err(),
            Error::NotPositiveDefinite {
                order: 2,
                value: "-3".into()
            }
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_integers(ground(3), &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(ground(3)));
        let sing = RationalMatrix::from_integers(ground(2), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(sing.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn identity_is_full_independence() {
        let m = model_from_covariance(&RationalMatrix::identity(ground(3))).unwrap();
        assert_eq!(m, IndependenceModel::full(ground(3)).unwrap());
    }

    #[test]
    fn a_g_eps_for_a_path() {
        let g = MixedGraph::from_edges(&[("1", EdgeKind::Line, "2"), ("2", EdgeKind::Line, "3")]).unwrap();
        let a = build_a_g_eps(&g, &q(1, 10)).unwrap();
        let expect = [[q(1, 1), q(1, 10), q(0, 1)], [q(1, 10), q(1, 1), q(1, 10)], [q(0, 1), q(1, 10), q(1, 1)]];
        assert_eq!(a.rows(), expect.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let inv = a.inverse().unwrap();
        assert_eq!(*inv.get(0, 2), q(1, 100) / q(98, 100));
        assert!(!inv.is_m_matrix());
        assert!(identity_minus_eps_adjacency(&g, &q(1, 10)).unwrap().is_m_matrix());
        let dag = MixedGraph::from_edges(&[("1", EdgeKind::Arrow, "2")]).unwrap();
        assert_eq!(build_a_g_eps(&dag, &q(1, 2)).unwrap_err(), Error::NotUndirected);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4"), Some(q(3, 4)));
        assert_eq!(parse_rational("-0.125"), Some(q(-1, 8)));
        assert_eq!(parse_rational("1e-3"), Some(q(1, 1000)));
        assert_eq!(parse_rational("2.5E2"), Some(q(250, 1)));
        assert_eq!(parse_rational(".5"), Some(q(1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        for bad in ["", "abc", "1/0", "1.2.3", "-", "e5"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }
}
