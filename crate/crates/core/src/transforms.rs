//! Moment, free cumulant and t-coefficient sequences, the transforms between
//! them, tree evaluations, and the multiplicativity check for the T-series.
//!
//! Everything is exact. Moments and cumulants are indexed from 1, t-coefficients
//! from 0; a sequence of order `N` holds `N` values.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cache;
use crate::error::{Error, Result};
use crate::limits::{Kind, Limits};
use crate::partitions::{is_ncs, NclPartition};
use crate::rational::{self, Rational};
use crate::series::TruncatedSeries;
use crate::trees::{self, BicolorPlanarTree, PlanarTree};

/// External JSON shape: `{"order": 3, "coeffs": ["1", "1/2", "0"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    #[serde(with = "rational::serde_vec")]
    pub coeffs: Vec<Rational>,
}

impl SeriesJson {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        SeriesJson {
            order: coeffs.len(),
            coeffs,
        }
    }

    pub fn validated(self) -> Result<Vec<Rational>> {
        if self.order != self.coeffs.len() {
            return Err(Error::Parse(format!(
                "order {} does not match {} coefficients",
                self.order,
                self.coeffs.len()
            )));
        }
        if self.coeffs.is_empty() {
            return Err(Error::Parse("empty series".into()));
        }
        Ok(self.coeffs)
    }
}

/// Accepted input shapes: the object form or a bare array of coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum SeriesInput {
    Bare(#[serde(with = "rational::serde_vec")] Vec<Rational>),
    Object(SeriesJson),
}

impl SeriesInput {
    pub fn is_bare(&self) -> bool {
        matches!(self, SeriesInput::Bare(_))
    }

    pub fn validated(self) -> Result<Vec<Rational>> {
        match self {
            SeriesInput::Bare(v) => SeriesJson::new(v).validated(),
            SeriesInput::Object(j) => j.validated(),
        }
    }
}

macro_rules! sequence {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(try_from = "SeriesInput", into = "SeriesJson")]
        pub struct $name(Vec<Rational>);

        impl $name {
            pub fn new(values: Vec<Rational>) -> Self {
                $name(values)
            }

            pub fn from_ints(values: &[i64]) -> Self {
                $name(values.iter().map(|&v| rational::int(v)).collect())
            }

            pub fn order(&self) -> usize {
                self.0.len()
            }

            pub fn values(&self) -> &[Rational] {
                &self.0
            }

            pub fn into_values(self) -> Vec<Rational> {
                self.0
            }

            /// The first `order` values.
            pub fn truncate(&self, order: usize) -> Self {
                $name(self.0[..order.min(self.0.len())].to_vec())
            }
        }

        impl TryFrom<SeriesInput> for $name {
            type Error = Error;

            fn try_from(j: SeriesInput) -> Result<Self> {
                Ok($name(j.validated()?))
            }
        }

        impl From<$name> for SeriesJson {
            fn from(s: $name) -> SeriesJson {
                SeriesJson::new(s.0)
            }
        }
    };
}

sequence!(
    /// `m_1, ..., m_N`.
    MomentSequence
);
sequence!(
    /// `kappa_1, ..., kappa_N`.
    CumulantSequence
);
sequence!(
    /// `t_0, ..., t_{N-1}`.
    TCoeffSequence
);

impl MomentSequence {
    /// `m_n`, 1-based.
    pub fn m(&self, n: usize) -> &Rational {
        &self.0[n - 1]
    }

    /// `1 + m_1 z + ... + m_k z^k`, truncated at `order`.
    fn generating(&self, known: usize, order: usize) -> TruncatedSeries {
        let mut c = vec![Rational::one()];
        c.extend(self.0.iter().take(known).cloned());
        TruncatedSeries::from_coeffs(c, order)
    }
}

impl CumulantSequence {
    /// `kappa_n`, 1-based.
    pub fn kappa(&self, n: usize) -> &Rational {
        &self.0[n - 1]
    }

    /// `R(z) = sum kappa_n z^n`.
    pub fn r_series(&self) -> TruncatedSeries {
        let mut c = vec![Rational::zero()];
        c.extend(self.0.iter().cloned());
        TruncatedSeries::from_coeffs(c, self.0.len())
    }
}

impl TCoeffSequence {
    /// `t_n`, 0-based.
    pub fn t(&self, n: usize) -> &Rational {
        &self.0[n]
    }

    /// `T(z) = sum t_n z^n`.
    pub fn t_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.0.clone(), self.0.len() - 1)
    }
}

// m_n = sum_s kappa_s [z^{n-s}] M(z)^s, grouping NC(n) by the block holding 1.
fn nc_first_block_term(m: &MomentSequence, n: usize, s: usize) -> Rational {
    m.generating(n - 1, n - 1).pow(s).coeff(n - s)
}

// m_n = sum_k t_{k-1} [z^{n-1}] M(z) (M(z) - 1)^{k-1}, grouping NCL(n) by the
// block holding 1; each stretch between consecutive elements of that block
// is an arbitrary linked partition.
fn ncl_first_block_term(m: &MomentSequence, n: usize, k: usize) -> Rational {
    let big_m = m.generating(n - 1, n - 1);
    let shifted = &big_m - &TruncatedSeries::one(n - 1);
    (&big_m * &shifted.pow(k - 1)).coeff(n - 1)
}

/// Free cumulants from moments.
pub fn moments_to_cumulants(m: &MomentSequence) -> CumulantSequence {
    let mut kappa: Vec<Rational> = Vec::with_capacity(m.order());
    for n in 1..=m.order() {
        let mut rest = Rational::zero();
        for (s, k) in kappa.iter().enumerate() {
            rest += k * nc_first_block_term(m, n, s + 1);
        }
        kappa.push(m.m(n) - rest);
    }
    CumulantSequence(kappa)
}

/// Moments from free cumulants.
pub fn cumulants_to_moments(kappa: &CumulantSequence) -> MomentSequence {
    let mut m = MomentSequence(Vec::with_capacity(kappa.order()));
    for n in 1..=kappa.order() {
        let mut v = kappa.kappa(n).clone();
        for s in 1..n {
            v += kappa.kappa(s) * nc_first_block_term(&m, n, s);
        }
        m.0.push(v);
    }
    m
}

/// t-coefficients from moments; requires `m_1 != 0`.
pub fn moments_to_tcoeffs(m: &MomentSequence) -> Result<TCoeffSequence> {
    let m1 = m.0.first().ok_or(Error::OrderTooLow { need: 1, have: 0 })?;
    if m1.is_zero() {
        return Err(Error::ZeroFirstMoment);
    }
    let mut t: Vec<Rational> = Vec::with_capacity(m.order());
    for n in 1..=m.order() {
        let mut rest = Rational::zero();
        for (k, tk) in t.iter().enumerate() {
            rest += tk * ncl_first_block_term(m, n, k + 1);
        }
        t.push((m.m(n) - rest) / rational::pow(m1, n - 1));
    }
    Ok(TCoeffSequence(t))
}

/// Moments from t-coefficients; requires `t_0 != 0`.
pub fn tcoeffs_to_moments(t: &TCoeffSequence) -> Result<MomentSequence> {
    let t0 = t.0.first().ok_or(Error::OrderTooLow { need: 1, have: 0 })?;
    if t0.is_zero() {
        return Err(Error::ZeroT0);
    }
    let mut m = MomentSequence(Vec::with_capacity(t.order()));
    for n in 1..=t.order() {
        let mut v = t.t(n - 1) * rational::pow(t0, n - 1);
        for k in 1..n {
            v += t.t(k - 1) * ncl_first_block_term(&m, n, k);
        }
        m.0.push(v);
    }
    Ok(m)
}

fn need_t(t: &TCoeffSequence, index: usize) -> Result<&Rational> {
    t.0.get(index).ok_or(Error::OrderTooLow {
        need: index + 1,
        have: t.order(),
    })
}

/// `t_pi[X]`: `t_{|B|-1}` per block and `t_0` per element of `s(pi)`.
pub fn t_weight(pi: &NclPartition, t: &TCoeffSequence) -> Result<Rational> {
    let mut w = rational::pow(need_t(t, 0)?, pi.non_minimal_elements().len());
    for b in pi.blocks() {
        w *= need_t(t, b.len() - 1)?;
    }
    Ok(w)
}

/// `kappa_n` as the sum of `t_pi` over the connected linked partitions `[1_n]`.
pub fn cumulant_via_classes(t: &TCoeffSequence, n: usize) -> Result<Rational> {
    cumulant_via_classes_with(t, n, &Limits::default())
}

pub fn cumulant_via_classes_with(
    t: &TCoeffSequence,
    n: usize,
    limits: &Limits,
) -> Result<Rational> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    limits.check(Kind::Trees, n)?;
    need_t(t, n - 1)?;
    cache::one_class(n)
        .iter()
        .try_fold(Rational::zero(), |acc, pi| Ok(acc + t_weight(pi, t)?))
}

/// `E_X(A)`: `t_d` for every vertex with `d` children.
pub fn eval_tree(tree: &PlanarTree, t: &TCoeffSequence) -> Result<Rational> {
    tree.elementary_decomposition()
        .iter()
        .try_fold(
            Rational::one(),
            |acc, e| Ok(acc * need_t(t, e.child_count)?),
        )
}

/// `kappa_n` as the sum of tree evaluations over all planar trees on `n`
/// vertices.
pub fn cumulant_via_trees(t: &TCoeffSequence, n: usize) -> Result<Rational> {
    cumulant_via_trees_with(t, n, &Limits::default())
}

pub fn cumulant_via_trees_with(t: &TCoeffSequence, n: usize, limits: &Limits) -> Result<Rational> {
    trees::enumerate_planar_trees_with(n, limits)?
        .iter()
        .try_fold(Rational::zero(), |acc, a| Ok(acc + eval_tree(a, t)?))
}

/// Cumulants of a sum of free elements.
pub fn free_additive(x: &CumulantSequence, y: &CumulantSequence) -> Result<CumulantSequence> {
    if x.order() != y.order() {
        return Err(Error::SizeMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    Ok(CumulantSequence(
        x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect(),
    ))
}

/// `kappa_n(XY)` for free `X, Y`: the sum over `gamma` in `NC(n)` of
/// `kappa_gamma[X] kappa_{Kr(gamma)}[Y]`.
pub fn free_multiplicative(
    x: &CumulantSequence,
    y: &CumulantSequence,
    n: usize,
) -> Result<Rational> {
    free_multiplicative_with(x, y, n, &Limits::default())
}

pub fn free_multiplicative_with(
    x: &CumulantSequence,
    y: &CumulantSequence,
    n: usize,
    limits: &Limits,
) -> Result<Rational> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    limits.check(Kind::Nc, n)?;
    for s in [x, y] {
        if s.order() < n {
            return Err(Error::OrderTooLow {
                need: n,
                have: s.order(),
            });
        }
    }
    let mut total = Rational::zero();
    for (g, kr) in cache::nc_with_kreweras(n).iter() {
        let mut term = Rational::one();
        for b in g.blocks() {
            term *= x.kappa(b.len());
        }
        for b in kr.blocks() {
            term *= y.kappa(b.len());
        }
        total += term;
    }
    Ok(total)
}

/// `omega_{X,Y}(B)`: `t_k(X) t_{d-k}(Y)` for every vertex with `k` color-1 and
/// `d - k` color-0 children.
pub fn eval_bicolor(
    tree: &BicolorPlanarTree,
    tx: &TCoeffSequence,
    ty: &TCoeffSequence,
) -> Result<Rational> {
    tree.vertex_profile()
        .iter()
        .try_fold(Rational::one(), |acc, &(ones, zeros)| {
            Ok(acc * need_t(tx, ones)? * need_t(ty, zeros)?)
        })
}

/// The t-weight of `pi` in `NCL_S(2n)`: odd blocks and odd elements of `s(pi)`
/// are evaluated at `X`, even ones at `Y`.
pub fn ncls_weight(
    pi: &NclPartition,
    tx: &TCoeffSequence,
    ty: &TCoeffSequence,
) -> Result<Rational> {
    if pi.n() % 2 == 1 || !is_ncs(&pi.connected_components())? {
        return Err(Error::NotNclS {
            reason: "connected components are not in NC_S".into(),
        });
    }
    let pick = |x: usize| if x % 2 == 1 { tx } else { ty };
    let mut w = Rational::one();
    for b in pi.blocks() {
        w *= need_t(pick(b.first()), b.len() - 1)?;
    }
    for x in pi.non_minimal_elements() {
        w *= need_t(pick(x), 0)?;
    }
    Ok(w)
}

/// Cauchy product of two t-sequences.
pub fn t_convolve(x: &TCoeffSequence, y: &TCoeffSequence) -> Result<TCoeffSequence> {
    if x.order() != y.order() {
        return Err(Error::SizeMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    let product = &x.t_series() * &y.t_series();
    Ok(TCoeffSequence(product.coeffs().to_vec()))
}

/// One coefficient compared across the two routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientCheck {
    pub index: usize,
    #[serde(with = "rational::serde_one")]
    pub via_cumulants: Rational,
    #[serde(with = "rational::serde_one")]
    pub via_convolution: Rational,
    pub equal: bool,
}

/// `E_XY(A_m)` against the sum of `omega` over the one-level bicolor trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryCheck {
    pub vertices: usize,
    #[serde(with = "rational::serde_one")]
    pub product_tree_value: Rational,
    #[serde(with = "rational::serde_one")]
    pub bicolor_sum: Rational,
    pub equal: bool,
}

/// Sum of `E_XY` over all planar trees against the sum of `omega` over all
/// bicolor trees, both against `kappa_n(XY)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateCheck {
    pub vertices: usize,
    #[serde(with = "rational::serde_one")]
    pub tree_sum: Rational,
    #[serde(with = "rational::serde_one")]
    pub bicolor_sum: Rational,
    #[serde(with = "rational::serde_one")]
    pub cumulant: Rational,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityReport {
    pub order: usize,
    pub t_x: TCoeffSequence,
    pub t_y: TCoeffSequence,
    /// `t(XY)` from `kappa(XY)`, then moments, then t-coefficients.
    pub via_cumulants: TCoeffSequence,
    /// `t(X) * t(Y)` as series.
    pub via_convolution: TCoeffSequence,
    pub coefficients: Vec<CoefficientCheck>,
    pub elementary: Vec<ElementaryCheck>,
    pub aggregate: Vec<AggregateCheck>,
    pub passed: bool,
}

/// Computes `t(XY)` for free `X, Y` in two independent ways and compares
/// them coefficient by coefficient, together with the tree identities that
/// connect the two.
pub fn verify_t_multiplicativity(
    mx: &MomentSequence,
    my: &MomentSequence,
    order: usize,
) -> Result<MultiplicativityReport> {
    verify_t_multiplicativity_with(mx, my, order, &Limits::default())
}

pub fn verify_t_multiplicativity_with(
    mx: &MomentSequence,
    my: &MomentSequence,
    order: usize,
    limits: &Limits,
) -> Result<MultiplicativityReport> {
    if order == 0 {
        return Err(Error::EmptyGroundSet);
    }
    limits.check(Kind::Theorem, order)?;
    for m in [mx, my] {
        if m.order() < order {
            return Err(Error::OrderTooLow {
                need: order,
                have: m.order(),
            });
        }
        if m.m(1).is_zero() {
            return Err(Error::ZeroFirstMoment);
        }
    }
    let (mx, my) = (mx.truncate(order), my.truncate(order));

    let kx = moments_to_cumulants(&mx);
    let ky = moments_to_cumulants(&my);
    let kxy = (1..=order)
        .map(|n| free_multiplicative_with(&kx, &ky, n, &Limits::unlimited()))
        .collect::<Result<Vec<_>>>()?;
    let kxy = CumulantSequence(kxy);
    let via_cumulants = moments_to_tcoeffs(&cumulants_to_moments(&kxy))?;

    let tx = moments_to_tcoeffs(&mx)?;
    let ty = moments_to_tcoeffs(&my)?;
    let via_convolution = t_convolve(&tx, &ty)?;

    let coefficients: Vec<CoefficientCheck> = (0..order)
        .map(|i| CoefficientCheck {
            index: i,
            via_cumulants: via_cumulants.t(i).clone(),
            via_convolution: via_convolution.t(i).clone(),
            equal: via_cumulants.t(i) == via_convolution.t(i),
        })
        .collect();

    let mut elementary = Vec::with_capacity(order);
    for m in 1..=order {
        let lhs = eval_tree(&PlanarTree::elementary(m), &via_cumulants)?;
        let rhs = trees::enumerate_bicolor_elementary(m)?
            .iter()
            .try_fold(Rational::zero(), |acc, b| {
                Ok::<_, Error>(acc + eval_bicolor(b, &tx, &ty)?)
            })?;
        elementary.push(ElementaryCheck {
            vertices: m,
            equal: lhs == rhs,
            product_tree_value: lhs,
            bicolor_sum: rhs,
        });
    }

    let mut aggregate = Vec::with_capacity(order);
    for n in 1..=order {
        let tree_sum = cumulant_via_trees_with(&via_cumulants, n, &Limits::unlimited())?;
        let bicolor_sum = cache::bicolor(n)
            .iter()
            .try_fold(Rational::zero(), |acc, b| {
                Ok::<_, Error>(acc + eval_bicolor(b, &tx, &ty)?)
            })?;
        let cumulant = kxy.kappa(n).clone();
        aggregate.push(AggregateCheck {
            vertices: n,
            equal: tree_sum == bicolor_sum && bicolor_sum == cumulant,
            tree_sum,
            bicolor_sum,
            cumulant,
        });
    }

    let passed = coefficients.iter().all(|c| c.equal)
        && elementary.iter().all(|c| c.equal)
        && aggregate.iter().all(|c| c.equal);
    Ok(MultiplicativityReport {
        order,
        t_x: tx,
        t_y: ty,
        via_cumulants,
        via_convolution,
        coefficients,
        elementary,
        aggregate,
        passed,
    })
}
