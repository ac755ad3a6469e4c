//! Truncated formal power series and Laurent series in z, and truncated
//! bivariate series in (z, t), over the rational-function field.
//!
//! Truncation is an inclusive degree bound carried on every value:
//! coefficients above `trunc` are unknown, not zero. Binary operations
//! propagate the window on which the result is provably exact, so a stored
//! coefficient is always an exact one. `low` is a guaranteed floor: all
//! degrees below it are known zeros (it may be negative for Laurent use).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qfield::{QExp, QRat};

/// Truncated series in z with [`QRat`] coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ZSeries {
    coeffs: BTreeMap<i64, QRat>,
    low: i64,
    trunc: i64,
}

impl ZSeries {
    pub fn zero(trunc: i64) -> ZSeries {
        ZSeries { coeffs: BTreeMap::new(), low: 0, trunc }
    }

    pub fn one(trunc: i64) -> ZSeries {
        ZSeries::monomial(0, QRat::one(), trunc)
    }

    pub fn monomial(degree: i64, coeff: QRat, trunc: i64) -> ZSeries {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() && degree <= trunc {
            coeffs.insert(degree, coeff);
        }
        ZSeries { coeffs, low: degree, trunc }
    }

    /// Power series (low = 0) from dense coefficients c_0, c_1, ...
    pub fn from_dense(dense: &[QRat], trunc: i64) -> ZSeries {
        let mut coeffs = BTreeMap::new();
        for (d, c) in dense.iter().enumerate() {
            let d = d as i64;
            if !c.is_zero() && d <= trunc {
                coeffs.insert(d, c.clone());
            }
        }
        ZSeries { coeffs, low: 0, trunc }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, QRat)>, low: i64, trunc: i64) -> ZSeries {
        let mut coeffs = BTreeMap::new();
        for (d, c) in terms {
            assert!(d >= low && d <= trunc, "term degree {d} outside [{low}, {trunc}]");
            if !c.is_zero() {
                coeffs.insert(d, c);
            }
        }
        ZSeries { coeffs, low, trunc }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Least degree with a nonzero stored coefficient.
    pub fn order(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, d: i64) -> QRat {
        assert!(d <= self.trunc, "coefficient of z^{d} is beyond truncation {}", self.trunc);
        self.coeffs.get(&d).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &QRat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate_to(&self, trunc: i64) -> ZSeries {
        assert!(trunc <= self.trunc, "cannot extend a truncated series");
        let coeffs = self
            .coeffs
            .iter()
            .take_while(|(&d, _)| d <= trunc)
            .map(|(&d, c)| (d, c.clone()))
            .collect();
        ZSeries { coeffs, low: self.low, trunc }
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        let trunc = self.trunc.min(other.trunc);
        let low = self.low.min(other.low);
        let mut coeffs = BTreeMap::new();
        for (&d, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if d > trunc {
                continue;
            }
            let entry = coeffs.entry(d).or_insert_with(QRat::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c: &mut QRat| !c.is_zero());
        ZSeries { coeffs, low, trunc }
    }

    pub fn neg(&self) -> ZSeries {
        let coeffs = self.coeffs.iter().map(|(&d, c)| (d, -c)).collect();
        ZSeries { coeffs, low: self.low, trunc: self.trunc }
    }

    pub fn sub(&self, other: &ZSeries) -> ZSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &QRat) -> ZSeries {
        if s.is_zero() {
            return ZSeries { coeffs: BTreeMap::new(), low: self.low, trunc: self.trunc };
        }
        let coeffs = self.coeffs.iter().map(|(&d, c)| (d, c * s)).collect();
        ZSeries { coeffs, low: self.low, trunc: self.trunc }
    }

    /// Product, exact on the window guaranteed by both factors:
    /// trunc = min(trunc_a + low_b, trunc_b + low_a), low = low_a + low_b.
    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        self.mul_capped(other, i64::MAX)
    }

    /// Product truncated at min(window formula, cap); the cap only avoids
    /// computing coefficients the caller will discard.
    pub fn mul_capped(&self, other: &ZSeries, cap: i64) -> ZSeries {
        let trunc = (self.trunc + other.low)
            .min(other.trunc + self.low)
            .min(cap);
        let low = self.low + other.low;
        let mut coeffs: BTreeMap<i64, QRat> = BTreeMap::new();
        for (&da, ca) in &self.coeffs {
            if da + other.low > trunc {
                break;
            }
            for (&db, cb) in &other.coeffs {
                let d = da + db;
                if d > trunc {
                    break;
                }
                let prod = ca * cb;
                if prod.is_zero() {
                    continue;
                }
                let entry = coeffs.entry(d).or_insert_with(QRat::zero);
                *entry = &*entry + &prod;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        ZSeries { coeffs, low, trunc }
    }

    /// Multiply degrees by shifting: z^k * self.
    pub fn shift_z(&self, k: i64) -> ZSeries {
        let coeffs = self.coeffs.iter().map(|(&d, c)| (d + k, c.clone())).collect();
        ZSeries { coeffs, low: self.low + k, trunc: self.trunc + k }
    }

    /// f(q^a z): the coefficient of z^d is multiplied by q^{a d}.
    pub fn dilate(&self, a: &QExp) -> ZSeries {
        if a.is_zero() {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&d, c)| (d, c * &QRat::q_frac(&a.times_int(d))))
            .collect();
        ZSeries { coeffs, low: self.low, trunc: self.trunc }
    }

    /// Reciprocal. Requires the least stored degree to carry an invertible
    /// coefficient and all lower degrees to be known zeros, which holds by
    /// construction: entries below `order()` are exact zeros.
    pub fn recip(&self) -> Result<ZSeries> {
        let d = self.order().ok_or(Error::NotInvertible)?;
        let lead = self.coeff(d);
        let lead_inv = lead.inv().map_err(|_| Error::NotInvertible)?;
        // self = z^d * u with u a unit on [0, trunc - d]
        let n = self.trunc - 2 * d;
        let mut inv: Vec<QRat> = Vec::new();
        inv.push(lead_inv.clone());
        for m in 1..=(self.trunc - d) {
            // recurrence c_m = -u_0^{-1} * sum_{k=1..m} u_k c_{m-k}
            let mut acc = QRat::zero();
            for k in 1..=m {
                let uk = self.coeffs.get(&(d + k)).cloned().unwrap_or_else(QRat::zero);
                if uk.is_zero() {
                    continue;
                }
                let c = &inv[(m - k) as usize];
                if c.is_zero() {
                    continue;
                }
                acc = &acc + &(&uk * c);
            }
            inv.push(-&(&lead_inv * &acc));
        }
        let mut coeffs = BTreeMap::new();
        for (m, c) in inv.into_iter().enumerate() {
            let deg = m as i64 - d;
            if deg <= n && !c.is_zero() {
                coeffs.insert(deg, c);
            }
        }
        Ok(ZSeries { coeffs, low: -d, trunc: n })
    }

    /// Coefficientwise q -> 1/q transport.
    pub fn subst_inverse_q(&self) -> ZSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&d, c)| (d, c.subst_inverse_q()))
            .collect();
        ZSeries { coeffs, low: self.low, trunc: self.trunc }
    }

    /// Equality of all coefficients of degree <= n (both windows must cover n).
    pub fn eq_through(&self, other: &ZSeries, n: i64) -> bool {
        assert!(self.trunc >= n && other.trunc >= n, "comparison beyond resolved windows");
        let lo = self.low.min(other.low);
        (lo..=n).all(|d| self.coeff(d) == other.coeff(d))
    }
}

/// The finite q-Pochhammer product prod_{0 <= j < n} (1 - q^j z), truncated.
/// An exact polynomial whenever n <= trunc.
pub fn pochhammer(n: i64, trunc: i64) -> ZSeries {
    let mut acc = ZSeries::one(trunc);
    for j in 0..n {
        if j > trunc {
            break;
        }
        let factor = ZSeries::from_terms(
            [(0, QRat::one()), (1, -&QRat::q_int(j))],
            0,
            trunc,
        );
        acc = acc.mul_capped(&factor, trunc);
    }
    acc
}

// ---------------------------------------------------------------------------
// bivariate series
// ---------------------------------------------------------------------------

/// Truncated bivariate series in (z, t); monomials are read as z^i t^j.
///
/// `t_exact` records that every coefficient of t-degree above `trunc_t` is a
/// known zero (the value is polynomial in t within the window), which is what
/// legitimizes collapsing t to a power of q.
#[derive(Clone, Debug, PartialEq)]
pub struct ZTSeries {
    coeffs: BTreeMap<(i64, i64), QRat>,
    trunc_z: i64,
    trunc_t: i64,
    t_exact: bool,
}

impl ZTSeries {
    pub fn zero(trunc_z: i64, trunc_t: i64) -> ZTSeries {
        ZTSeries { coeffs: BTreeMap::new(), trunc_z, trunc_t, t_exact: true }
    }

    pub fn one(trunc_z: i64, trunc_t: i64) -> ZTSeries {
        ZTSeries::monomial((0, 0), QRat::one(), trunc_z, trunc_t)
    }

    /// The projection (z, t) -> t.
    pub fn t_var(trunc_z: i64, trunc_t: i64) -> ZTSeries {
        ZTSeries::monomial((0, 1), QRat::one(), trunc_z, trunc_t)
    }

    pub fn monomial(idx: (i64, i64), coeff: QRat, trunc_z: i64, trunc_t: i64) -> ZTSeries {
        assert!(idx.0 >= 0 && idx.1 >= 0);
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() && idx.0 <= trunc_z && idx.1 <= trunc_t {
            coeffs.insert(idx, coeff);
        }
        ZTSeries { coeffs, trunc_z, trunc_t, t_exact: true }
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((i64, i64), QRat)>,
        trunc_z: i64,
        trunc_t: i64,
        t_exact: bool,
    ) -> ZTSeries {
        let mut coeffs = BTreeMap::new();
        for (idx, c) in terms {
            assert!(idx.0 >= 0 && idx.1 >= 0 && idx.0 <= trunc_z && idx.1 <= trunc_t);
            if !c.is_zero() {
                coeffs.insert(idx, c);
            }
        }
        ZTSeries { coeffs, trunc_z, trunc_t, t_exact }
    }

    pub fn trunc_z(&self) -> i64 {
        self.trunc_z
    }

    pub fn trunc_t(&self) -> i64 {
        self.trunc_t
    }

    pub fn t_exact(&self) -> bool {
        self.t_exact
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: (i64, i64)) -> QRat {
        assert!(
            idx.0 <= self.trunc_z && idx.1 <= self.trunc_t,
            "coefficient at ({}, {}) is beyond the window ({}, {})",
            idx.0,
            idx.1,
            self.trunc_z,
            self.trunc_t
        );
        self.coeffs.get(&idx).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &QRat)> {
        self.coeffs.iter()
    }

    pub fn min_z_degree(&self) -> i64 {
        self.coeffs.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    pub fn min_t_degree(&self) -> i64 {
        self.coeffs.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    pub fn max_t_degree(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(_, j)| j).max()
    }

    pub fn truncate_to(&self, trunc_z: i64, trunc_t: i64) -> ZTSeries {
        assert!(trunc_z <= self.trunc_z && trunc_t <= self.trunc_t);
        let t_exact = self.t_exact
            && self.max_t_degree().map_or(true, |m| m <= trunc_t);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(&(i, j), _)| i <= trunc_z && j <= trunc_t)
            .map(|(&idx, c)| (idx, c.clone()))
            .collect();
        ZTSeries { coeffs, trunc_z, trunc_t, t_exact }
    }

    pub fn add(&self, other: &ZTSeries) -> ZTSeries {
        let trunc_z = self.trunc_z.min(other.trunc_z);
        let trunc_t = self.trunc_t.min(other.trunc_t);
        let mut coeffs: BTreeMap<(i64, i64), QRat> = BTreeMap::new();
        for (&idx, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if idx.0 > trunc_z || idx.1 > trunc_t {
                continue;
            }
            let entry = coeffs.entry(idx).or_insert_with(QRat::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        let t_exact = self.t_exact
            && other.t_exact
            && self.max_t_degree().map_or(true, |m| m <= trunc_t)
            && other.max_t_degree().map_or(true, |m| m <= trunc_t);
        ZTSeries { coeffs, trunc_z, trunc_t, t_exact }
    }

    pub fn neg(&self) -> ZTSeries {
        let coeffs = self.coeffs.iter().map(|(&idx, c)| (idx, -c)).collect();
        ZTSeries { coeffs, ..self.clone() }
    }

    pub fn sub(&self, other: &ZTSeries) -> ZTSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &QRat) -> ZTSeries {
        if s.is_zero() {
            return ZTSeries { coeffs: BTreeMap::new(), ..self.clone() };
        }
        let coeffs = self.coeffs.iter().map(|(&idx, c)| (idx, c * s)).collect();
        ZTSeries { coeffs, ..self.clone() }
    }

    /// Product; both degree bounds are propagated independently.
    pub fn mul(&self, other: &ZTSeries) -> ZTSeries {
        self.mul_capped(other, i64::MAX, i64::MAX)
    }

    pub fn mul_capped(&self, other: &ZTSeries, cap_z: i64, cap_t: i64) -> ZTSeries {
        let trunc_z = (self.trunc_z + other.min_z_degree())
            .min(other.trunc_z + self.min_z_degree())
            .min(cap_z);
        let trunc_t = (self.trunc_t + other.min_t_degree())
            .min(other.trunc_t + self.min_t_degree())
            .min(cap_t);
        let mut coeffs: BTreeMap<(i64, i64), QRat> = BTreeMap::new();
        for (&(ia, ja), ca) in &self.coeffs {
            for (&(ib, jb), cb) in &other.coeffs {
                let idx = (ia + ib, ja + jb);
                if idx.0 > trunc_z || idx.1 > trunc_t {
                    continue;
                }
                let prod = ca * cb;
                if prod.is_zero() {
                    continue;
                }
                let entry = coeffs.entry(idx).or_insert_with(QRat::zero);
                *entry = &*entry + &prod;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let t_exact = self.t_exact
            && other.t_exact
            && match (self.max_t_degree(), other.max_t_degree()) {
                (Some(a), Some(b)) => a + b <= trunc_t,
                _ => true,
            };
        ZTSeries { coeffs, trunc_z, trunc_t, t_exact }
    }

    /// Multiply by the monomial z^dz t^dt.
    pub fn shift(&self, dz: i64, dt: i64) -> ZTSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| ((i + dz, j + dt), c.clone()))
            .collect();
        ZTSeries {
            coeffs,
            trunc_z: self.trunc_z + dz,
            trunc_t: self.trunc_t + dt,
            t_exact: self.t_exact,
        }
    }

    /// F(q^a z, t): the coefficient of z^i t^j is multiplied by q^{a i}.
    pub fn subst_z_scaled(&self, a: &QExp) -> ZTSeries {
        if a.is_zero() {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| ((i, j), c * &QRat::q_frac(&a.times_int(i))))
            .collect();
        ZTSeries { coeffs, ..self.clone() }
    }

    /// Collapse t to q^a: sum_j F_{., j} q^{a j} as a series in z. Exact only
    /// when the value is polynomial in t within the window; otherwise the
    /// evaluation is refused as t-incomplete.
    pub fn eval_t(&self, a: &QExp) -> Result<ZSeries> {
        if !self.t_exact {
            return Err(Error::TIncomplete { trunc_t: self.trunc_t });
        }
        let mut coeffs: BTreeMap<i64, QRat> = BTreeMap::new();
        for (&(i, j), c) in &self.coeffs {
            let w = c * &QRat::q_frac(&a.times_int(j));
            if w.is_zero() {
                continue;
            }
            let entry = coeffs.entry(i).or_insert_with(QRat::zero);
            *entry = &*entry + &w;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(ZSeries { coeffs, low: 0, trunc: self.trunc_z })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(k: i64) -> QRat {
        QRat::from_int(k)
    }

    #[test]
    fn mul_examples() {
        let trunc = 8;
        let a = ZSeries::from_dense(&[c(1), c(1)], trunc); // 1 + z
        let b = ZSeries::from_dense(&[c(1), c(-1)], trunc); // 1 - z
        let ab = a.mul(&b);
        assert_eq!(ab.coeff(0), c(1));
        assert_eq!(ab.coeff(1), c(0));
        assert_eq!(ab.coeff(2), c(-1));
        let f = ZSeries::from_dense(&[c(2), c(0), c(3)], trunc);
        assert_eq!(f.mul(&ZSeries::one(trunc)), f);
        // (z; q)_1 * (1 - qz) = 1 - (1+q) z + q z^2
        let p1 = pochhammer(1, trunc);
        let g = ZSeries::from_terms([(0, c(1)), (1, -&QRat::q())], 0, trunc);
        let prod = p1.mul(&g);
        assert_eq!(prod.coeff(1), -&(&c(1) + &QRat::q()));
        assert_eq!(prod.coeff(2), QRat::q());
        assert_eq!(prod, pochhammer(2, trunc));
    }

    #[test]
    fn recip_geometric() {
        let f = ZSeries::from_terms([(0, c(1)), (1, c(-1))], 0, 6); // 1 - z
        let g = f.recip().unwrap();
        for d in 0..=6 {
            assert_eq!(g.coeff(d), c(1));
        }
        assert_eq!(ZSeries::one(5).recip().unwrap(), ZSeries::one(5));
        assert!(ZSeries::zero(5).recip().is_err());
    }

    #[test]
    fn recip_counts_compositions() {
        // 1/(1 - z - z^2): coefficient of z^n counts compositions of n into
        // parts 1 and 2. Independent oracle: direct dynamic program.
        let n = 10;
        let f = ZSeries::from_terms([(0, c(1)), (1, c(-1)), (2, c(-1))], 0, n);
        let g = f.recip().unwrap();
        let mut comp = vec![0i64; (n + 1) as usize];
        comp[0] = 1;
        for m in 1..=n as usize {
            comp[m] = comp[m - 1] + if m >= 2 { comp[m - 2] } else { 0 };
        }
        for d in 0..=n {
            assert_eq!(g.coeff(d), c(comp[d as usize]));
        }
        // and the defining property f * g = 1
        let prod = f.mul(&g);
        assert!(prod.eq_through(&ZSeries::one(prod.trunc()), prod.trunc()));
    }

    #[test]
    fn dilate_examples() {
        let trunc = 5;
        let z2 = ZSeries::monomial(2, c(1), trunc);
        assert_eq!(z2.dilate(&QExp::int(1)).coeff(2), QRat::q_int(2));
        let f = ZSeries::from_dense(&[c(1), c(4), c(-2)], trunc);
        assert_eq!(f.dilate(&QExp::zero()), f);
        let g = ZSeries::from_dense(&[c(1), c(1)], trunc).dilate(&QExp::int(-1));
        assert_eq!(g.coeff(1), QRat::q_int(-1));
    }

    #[test]
    fn pochhammer_examples() {
        let trunc = 6;
        assert_eq!(pochhammer(0, trunc), ZSeries::one(trunc));
        let p2 = pochhammer(2, trunc);
        assert_eq!(p2.coeff(0), c(1));
        assert_eq!(p2.coeff(1), -&(&c(1) + &QRat::q()));
        assert_eq!(p2.coeff(2), QRat::q());
        // at q = 1 the triple product collapses to (1 - z)^3
        let p3 = pochhammer(3, trunc);
        let binom: Vec<i64> = vec![1, -3, 3, -1];
        for d in 0..=3 {
            assert_eq!(p3.coeff(d).eval_q1().unwrap(), c(binom[d as usize]).eval_q1().unwrap());
        }
    }

    #[test]
    fn eval_t_examples() {
        let f = ZTSeries::from_terms(
            [((0, 1), c(1)), ((1, 2), c(-1))],
            4,
            4,
            true,
        ); // t - z t^2
        let k = 3;
        let e = f.eval_t(&QExp::int(k)).unwrap();
        assert_eq!(e.coeff(0), QRat::q_int(k));
        assert_eq!(e.coeff(1), -&QRat::q_int(2 * k));

        let t = ZTSeries::t_var(4, 4);
        assert_eq!(t.eval_t(&QExp::zero()).unwrap().coeff(0), QRat::one());

        let g = ZTSeries::from_terms([((0, 1), c(1)), ((1, 3), c(-1))], 4, 4, true);
        let e1 = g.eval_t(&QExp::int(1)).unwrap();
        assert_eq!(e1.coeff(0), QRat::q());
        assert_eq!(e1.coeff(1), -&QRat::q_int(3));
    }

    #[test]
    fn eval_t_refuses_incomplete() {
        let f = ZTSeries::from_terms([((0, 1), c(1))], 4, 4, false);
        assert_eq!(f.eval_t(&QExp::zero()), Err(Error::TIncomplete { trunc_t: 4 }));
    }

    #[test]
    fn subst_z_scaled_examples() {
        let zt = ZTSeries::monomial((1, 1), c(1), 4, 4);
        assert_eq!(zt.subst_z_scaled(&QExp::int(1)).coeff((1, 1)), QRat::q());
        let t = ZTSeries::t_var(4, 4);
        assert_eq!(t.subst_z_scaled(&QExp::int(7)), t);
        let z2t = ZTSeries::monomial((2, 1), c(1), 4, 4);
        assert_eq!(z2t.subst_z_scaled(&QExp::int(-1)).coeff((2, 1)), QRat::q_int(-2));
    }

    fn arb_series(trunc: i64) -> impl Strategy<Value = ZSeries> {
        prop::collection::vec(-3i64..4, 1..(trunc as usize + 1)).prop_map(move |v| {
            let dense: Vec<QRat> = v.into_iter().map(QRat::from_int).collect();
            ZSeries::from_dense(&dense, trunc)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutative_associative(a in arb_series(7), b in arb_series(7), cc in arb_series(7)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&cc), a.mul(&b.mul(&cc)));
        }

        #[test]
        fn recip_involution(a in arb_series(7)) {
            prop_assume!(!a.coeff(0).is_zero());
            let r = a.recip().unwrap();
            let rr = r.recip().unwrap();
            prop_assert!(rr.eq_through(&a, rr.trunc()));
        }

        #[test]
        fn dilate_additive(a in arb_series(7), e1 in -3i64..4, e2 in -3i64..4) {
            let lhs = a.dilate(&QExp::int(e1)).dilate(&QExp::int(e2));
            let rhs = a.dilate(&QExp::int(e1 + e2));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_prefix_stable(a in arb_series(9), b in arb_series(9)) {
            // recomputing at higher truncation and re-truncating changes nothing
            let wide = a.mul(&b);
            let narrow = a.truncate_to(5).mul(&b.truncate_to(5));
            prop_assert_eq!(wide.truncate_to(narrow.trunc()), narrow);
        }
    }
}
