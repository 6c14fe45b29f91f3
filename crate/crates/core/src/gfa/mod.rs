//! G-Frobenius algebras over exact cyclotomic scalars: dense structure
//! tensors indexed by group elements and sector bases, with constructors
//! for (twisted, super) group rings and pushforwards along central
//! quotients.

pub mod axioms;
pub mod special;
pub mod twist;

pub use axioms::{check_axioms, check_module_structures};
pub use special::{
    canonicalize_onedim, extract_special, is_galois, special_from_cocycles, CanonicalForm,
    SpecialGFA,
};
pub use twist::{
    alpha_twist, check_epsilon, epsilon, partition, super_regrade, tensor, twist, validate_twist,
    AdjointCocycle, PartitionTable, TwistData,
};

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cohomology::{d2, is_cocycle, Cochain2};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Group, GroupHom};
use crate::scalars::Cyclotomic;

/// The full structure tuple: group, graded sectors, multiplication, unit,
/// metric, group action and character, with an optional super grading.
///
/// Storage conventions (n = |G|, e = identity):
/// * `mult[g*n+h]` is the tensor of `A_g x A_h -> A_{gh}`, entry
///   `(i*dims[h]+j)*dims[gh]+k` is the coefficient of basis vector k in
///   `e_i * e_j`.
/// * `metric[g]` is the block pairing `A_g` with `A_{g^-1}`, row-major.
/// * `action[g*n+h]` is the matrix of `phi_g : A_h -> A_{g h g^-1}`, entry
///   `i*dims[ghg^-1]+k` the coefficient of k in `phi_g(e_i)`.
/// * `parity[g][i]` is the Z/2 degree of basis vector i of `A_g`; `None`
///   means purely even.
#[derive(Clone, Debug, PartialEq)]
pub struct GFrobeniusAlgebra {
    pub group: Group,
    pub dims: Vec<usize>,
    pub mult: Vec<Vec<Cyclotomic>>,
    pub unit: Vec<Cyclotomic>,
    pub metric: Vec<Vec<Cyclotomic>>,
    pub action: Vec<Vec<Cyclotomic>>,
    pub chi: Vec<Cyclotomic>,
    pub parity: Option<Vec<Vec<u8>>>,
}

/// An element of the underlying vector space, one coefficient vector per
/// sector.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    pub comps: Vec<Vec<Cyclotomic>>,
}

impl GFrobeniusAlgebra {
    pub fn n(&self) -> usize {
        self.group.size
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn mult_coeff(&self, g: usize, h: usize, i: usize, j: usize, k: usize) -> &Cyclotomic {
        let n = self.n();
        let gh = self.group.mul(g, h);
        &self.mult[g * n + h][(i * self.dims[h] + j) * self.dims[gh] + k]
    }

    pub fn act_coeff(&self, g: usize, h: usize, i: usize, k: usize) -> &Cyclotomic {
        let n = self.n();
        let t = self.group.conjugate(g, h).expect("indices in range");
        &self.action[g * n + h][i * self.dims[t] + k]
    }

    pub fn eta(&self, g: usize, i: usize, j: usize) -> &Cyclotomic {
        &self.metric[g][i * self.dims[self.group.inv(g)] + j]
    }

    pub fn parity_of(&self, g: usize, i: usize) -> u8 {
        self.parity.as_ref().map_or(0, |p| p[g][i])
    }

    pub fn is_super(&self) -> bool {
        self.parity.is_some()
    }

    /// Product of coefficient vectors `a` in sector g and `b` in sector h;
    /// result lives in sector gh.
    pub fn mult_vec(&self, g: usize, a: &[Cyclotomic], h: usize, b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let gh = self.group.mul(g, h);
        let mut out = vec![Cyclotomic::zero(1); self.dims[gh]];
        for i in 0..self.dims[g] {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dims[h] {
                if b[j].is_zero() {
                    continue;
                }
                let ab = a[i].mul(&b[j]);
                for k in 0..self.dims[gh] {
                    let c = self.mult_coeff(g, h, i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].add(&ab.mul(c));
                    }
                }
            }
        }
        out
    }

    /// phi_g applied to coefficient vector `b` in sector h; result lives in
    /// sector g h g^-1.
    pub fn act_vec(&self, g: usize, h: usize, b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let t = self.group.conjugate(g, h).expect("indices in range");
        let mut out = vec![Cyclotomic::zero(1); self.dims[t]];
        for i in 0..self.dims[h] {
            if b[i].is_zero() {
                continue;
            }
            for k in 0..self.dims[t] {
                let c = self.act_coeff(g, h, i, k);
                if !c.is_zero() {
                    out[k] = out[k].add(&b[i].mul(c));
                }
            }
        }
        out
    }

    pub fn zero_element(&self) -> Element {
        Element {
            comps: self.dims.iter().map(|&d| vec![Cyclotomic::zero(1); d]).collect(),
        }
    }

    pub fn unit_element(&self) -> Element {
        let mut x = self.zero_element();
        x.comps[self.group.identity] = self.unit.clone();
        x
    }

    pub fn basis_element(&self, g: usize, i: usize) -> Element {
        let mut x = self.zero_element();
        x.comps[g][i] = Cyclotomic::one();
        x
    }

    pub fn add_elements(&self, x: &Element, y: &Element) -> Element {
        Element {
            comps: x
                .comps
                .iter()
                .zip(&y.comps)
                .map(|(a, b)| a.iter().zip(b).map(|(u, v)| u.add(v)).collect())
                .collect(),
        }
    }

    pub fn scale_element(&self, c: &Cyclotomic, x: &Element) -> Element {
        Element {
            comps: x
                .comps
                .iter()
                .map(|a| a.iter().map(|u| u.mul(c)).collect())
                .collect(),
        }
    }

    pub fn mul_elements(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.zero_element();
        for g in 0..self.n() {
            if x.comps[g].iter().all(Cyclotomic::is_zero) {
                continue;
            }
            for h in 0..self.n() {
                if y.comps[h].iter().all(Cyclotomic::is_zero) {
                    continue;
                }
                let prod = self.mult_vec(g, &x.comps[g], h, &y.comps[h]);
                let gh = self.group.mul(g, h);
                for (k, v) in prod.iter().enumerate() {
                    out.comps[gh][k] = out.comps[gh][k].add(v);
                }
            }
        }
        out
    }

    /// phi_g applied to a whole element.
    pub fn act_element(&self, g: usize, x: &Element) -> Element {
        let mut out = self.zero_element();
        for h in 0..self.n() {
            if x.comps[h].iter().all(Cyclotomic::is_zero) {
                continue;
            }
            let t = self.group.conjugate(g, h).expect("index in range");
            let v = self.act_vec(g, h, &x.comps[h]);
            for (k, c) in v.iter().enumerate() {
                out.comps[t][k] = out.comps[t][k].add(c);
            }
        }
        out
    }

    /// eta(x, y), summed over all sector pairings.
    pub fn metric_pair(&self, x: &Element, y: &Element) -> Cyclotomic {
        let mut out = Cyclotomic::zero(1);
        for g in 0..self.n() {
            let gi = self.group.inv(g);
            for i in 0..self.dims[g] {
                if x.comps[g][i].is_zero() {
                    continue;
                }
                for j in 0..self.dims[gi] {
                    if y.comps[gi][j].is_zero() {
                        continue;
                    }
                    let e = self.eta(g, i, j);
                    if !e.is_zero() {
                        out = out.add(&x.comps[g][i].mul(&y.comps[gi][j]).mul(e));
                    }
                }
            }
        }
        out
    }

    /// Verify that every stored tensor has the length dictated by `dims`.
    pub fn structural_check(&self) -> Result<()> {
        let n = self.n();
        let dims = &self.dims;
        if dims.len() != n || self.mult.len() != n * n || self.metric.len() != n
            || self.action.len() != n * n || self.chi.len() != n
        {
            return Err(Error::Dimension("tensor table lengths".into()));
        }
        if self.unit.len() != dims[self.group.identity] {
            return Err(Error::Dimension("unit coefficient length".into()));
        }
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul(g, h);
                if self.mult[g * n + h].len() != dims[g] * dims[h] * dims[gh] {
                    return Err(Error::Dimension(format!(
                        "multiplication tensor ({g},{h})"
                    )));
                }
                let t = self.group.conjugate(g, h)?;
                if self.action[g * n + h].len() != dims[h] * dims[t] {
                    return Err(Error::Dimension(format!("action matrix ({g},{h})")));
                }
            }
            if self.metric[g].len() != dims[g] * dims[self.group.inv(g)] {
                return Err(Error::Dimension(format!("metric block {g}")));
            }
        }
        if let Some(p) = &self.parity {
            if p.len() != n || p.iter().zip(dims).any(|(row, &d)| row.len() != d) {
                return Err(Error::Dimension("parity table".into()));
            }
        }
        Ok(())
    }

    /// Drop an all-even parity table so that super and plain forms of the
    /// same algebra compare equal.
    pub fn normalize_parity(&mut self) {
        if let Some(p) = &self.parity {
            if p.iter().all(|row| row.iter().all(|&b| b == 0)) {
                self.parity = None;
            }
        }
    }

    pub fn to_json(&self) -> GfaJson {
        let n = self.n();
        let mut mult = Vec::new();
        let mut metric = Vec::new();
        let mut action = Vec::new();
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul(g, h);
                let t = self.group.conjugate(g, h).unwrap();
                for i in 0..self.dims[g] {
                    for j in 0..self.dims[h] {
                        for k in 0..self.dims[gh] {
                            let c = self.mult_coeff(g, h, i, j, k);
                            if !c.is_zero() {
                                mult.push((g, h, i, j, k, c.clone()));
                            }
                        }
                    }
                }
                for i in 0..self.dims[h] {
                    for k in 0..self.dims[t] {
                        let c = self.act_coeff(g, h, i, k);
                        if !c.is_zero() {
                            action.push((g, h, i, k, c.clone()));
                        }
                    }
                }
            }
            let gi = self.group.inv(g);
            for i in 0..self.dims[g] {
                for j in 0..self.dims[gi] {
                    let c = self.eta(g, i, j);
                    if !c.is_zero() {
                        metric.push((g, i, j, c.clone()));
                    }
                }
            }
        }
        GfaJson {
            group: (*self.group).clone(),
            dims: self.dims.clone(),
            mult,
            unit: self.unit.clone(),
            metric,
            action,
            chi: self.chi.clone(),
            parity: self.parity.clone(),
        }
    }
}

/// Sparse JSON form of an algebra: only nonzero tensor entries are listed.
#[derive(Clone, Serialize, Deserialize)]
pub struct GfaJson {
    pub group: FiniteGroup,
    pub dims: Vec<usize>,
    pub mult: Vec<(usize, usize, usize, usize, usize, Cyclotomic)>,
    pub unit: Vec<Cyclotomic>,
    pub metric: Vec<(usize, usize, usize, Cyclotomic)>,
    pub action: Vec<(usize, usize, usize, usize, Cyclotomic)>,
    pub chi: Vec<Cyclotomic>,
    pub parity: Option<Vec<Vec<u8>>>,
}

impl GfaJson {
    pub fn into_algebra(self) -> Result<GFrobeniusAlgebra> {
        let group: Group = std::sync::Arc::new(self.group);
        let n = group.size;
        if self.dims.len() != n {
            return Err(Error::Dimension("dims length".into()));
        }
        let dims = self.dims;
        let mut a = GFrobeniusAlgebra {
            group: group.clone(),
            dims: dims.clone(),
            mult: (0..n * n)
                .map(|gh| {
                    let (g, h) = (gh / n, gh % n);
                    vec![Cyclotomic::zero(1); dims[g] * dims[h] * dims[group.mul(g, h)]]
                })
                .collect(),
            unit: self.unit,
            metric: (0..n)
                .map(|g| vec![Cyclotomic::zero(1); dims[g] * dims[group.inv(g)]])
                .collect(),
            action: (0..n * n)
                .map(|gh| {
                    let (g, h) = (gh / n, gh % n);
                    let t = group.conjugate(g, h).unwrap();
                    vec![Cyclotomic::zero(1); dims[h] * dims[t]]
                })
                .collect(),
            chi: self.chi,
            parity: self.parity,
        };
        for (g, h, i, j, k, c) in self.mult {
            let gh = group.mul(group.check_index(g)?, group.check_index(h)?);
            a.mult[g * n + h][(i * dims[h] + j) * dims[gh] + k] = c;
        }
        for (g, i, j, c) in self.metric {
            group.check_index(g)?;
            a.metric[g][i * dims[group.inv(g)] + j] = c;
        }
        for (g, h, i, k, c) in self.action {
            let t = group.conjugate(group.check_index(g)?, group.check_index(h)?)?;
            a.action[g * n + h][i * dims[t] + k] = c;
        }
        a.structural_check()?;
        Ok(a)
    }
}

/// Parity table (one bit per group element) read from a homomorphism into
/// Z/2; `None` input means everything even.
fn parity_bits(group: &Group, sigma: Option<&GroupHom>) -> Result<Vec<u8>> {
    match sigma {
        None => Ok(vec![0; group.size]),
        Some(s) => {
            if s.source != *group {
                return Err(Error::GroupMismatch);
            }
            if s.target.size != 2 {
                return Err(Error::InvalidSpec(
                    "parity homomorphism must land in Z/2".into(),
                ));
            }
            Ok((0..group.size)
                .map(|g| (s.apply(g) != s.target.identity) as u8)
                .collect())
        }
    }
}

/// The (super) group ring k^sigma[G]: one-dimensional sectors, conjugation
/// action with the sign (-1)^{sigma(g) sigma(h)}, chi_g = (-1)^{sigma(g)}.
pub fn group_ring(group: &Group, sigma: Option<&GroupHom>) -> Result<GFrobeniusAlgebra> {
    twisted_group_ring(group, &Cochain2::zero(group.clone(), 1), sigma)
}

/// The twisted (super) group ring k^{alpha,sigma}[G]: multiplication
/// alpha(g,h), metric alpha(g,g^-1), action epsilon(g,h) with the super
/// sign, chi_g = (-1)^{sigma(g)}.
pub fn twisted_group_ring(
    group: &Group,
    alpha: &Cochain2,
    sigma: Option<&GroupHom>,
) -> Result<GFrobeniusAlgebra> {
    if alpha.group != *group {
        return Err(Error::GroupMismatch);
    }
    if !is_cocycle(alpha) {
        let d = d2(alpha);
        let n = group.size;
        let idx = d.values.iter().position(|&v| v != 0).unwrap();
        return Err(Error::NotACocycle(idx / (n * n), idx / n % n, idx % n));
    }
    let par = parity_bits(group, sigma)?;
    let n = group.size;
    let m = alpha.modulus as i64;
    let one = Cyclotomic::one();
    let minus_one = Cyclotomic::from_integer(-1);
    let mut mult = Vec::with_capacity(n * n);
    let mut action = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            mult.push(vec![alpha.scalar(g, h)]);
            let t = group.conjugate(g, h)?;
            let eps = alpha.value(g, h) as i64 - alpha.value(t, g) as i64;
            let mut c = Cyclotomic::root(alpha.modulus, eps.rem_euclid(m.max(1)));
            if par[g] & par[h] == 1 {
                c = c.neg();
            }
            action.push(vec![c]);
        }
    }
    let mut a = GFrobeniusAlgebra {
        group: group.clone(),
        dims: vec![1; n],
        mult,
        unit: vec![one.clone()],
        metric: (0..n).map(|g| vec![alpha.scalar(g, group.inv(g))]).collect(),
        action,
        chi: par
            .iter()
            .map(|&p| if p == 1 { minus_one.clone() } else { one.clone() })
            .collect(),
        parity: Some(par.iter().map(|&p| vec![p]).collect()),
    };
    a.normalize_parity();
    Ok(a)
}

/// Push the group ring of `pi.source` down to a `pi.target`-graded algebra:
/// sector A_g is spanned by the fiber over g, the action is conjugation by
/// a fixed section. Requires ker(pi) central (so conjugation descends) and
/// pi surjective. Yields sectors of dimension |ker pi| — a special algebra
/// with base k[ker pi].
pub fn pushforward_group_ring(pi: &GroupHom) -> Result<GFrobeniusAlgebra> {
    let big = &pi.source;
    let small = &pi.target;
    let n = small.size;
    let mut fiber: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pos = vec![(0usize, 0usize); big.size];
    for x in 0..big.size {
        let g = pi.apply(x);
        pos[x] = (g, fiber[g].len());
        fiber[g].push(x);
    }
    if fiber.iter().any(Vec::is_empty) {
        return Err(Error::InvalidSpec("projection is not surjective".into()));
    }
    for &k in &fiber[small.identity] {
        for x in 0..big.size {
            if big.mul(k, x) != big.mul(x, k) {
                return Err(Error::InvalidSpec(format!(
                    "kernel element {k} is not central"
                )));
            }
        }
    }
    let dims: Vec<usize> = fiber.iter().map(Vec::len).collect();
    let section: Vec<usize> = fiber.iter().map(|f| f[0]).collect();
    let one = Cyclotomic::one();
    let mut mult = Vec::with_capacity(n * n);
    let mut action = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let gh = small.mul(g, h);
            let mut t3 = vec![Cyclotomic::zero(1); dims[g] * dims[h] * dims[gh]];
            for (i, &x) in fiber[g].iter().enumerate() {
                for (j, &y) in fiber[h].iter().enumerate() {
                    let (sec, k) = pos[big.mul(x, y)];
                    debug_assert_eq!(sec, gh);
                    t3[(i * dims[h] + j) * dims[gh] + k] = one.clone();
                }
            }
            mult.push(t3);
            let tgt = small.conjugate(g, h)?;
            let mut mat = vec![Cyclotomic::zero(1); dims[h] * dims[tgt]];
            let s = section[g];
            for (i, &y) in fiber[h].iter().enumerate() {
                let (sec, k) = pos[big.mul(big.mul(s, y), big.inv(s))];
                debug_assert_eq!(sec, tgt);
                mat[i * dims[tgt] + k] = one.clone();
            }
            action.push(mat);
        }
    }
    let mut metric = Vec::with_capacity(n);
    for g in 0..n {
        let gi = small.inv(g);
        let mut blk = vec![Cyclotomic::zero(1); dims[g] * dims[gi]];
        for (i, &x) in fiber[g].iter().enumerate() {
            let (sec, j) = pos[big.inv(x)];
            debug_assert_eq!(sec, gi);
            blk[i * dims[gi] + j] = one.clone();
        }
        metric.push(blk);
    }
    let mut unit = vec![Cyclotomic::zero(1); dims[small.identity]];
    unit[pos[big.identity].1] = one.clone();
    Ok(GFrobeniusAlgebra {
        group: small.clone(),
        dims,
        mult,
        unit,
        metric,
        action,
        chi: vec![one; n],
        parity: None,
    })
}

/// 1/k as an exact scalar.
pub(crate) fn rational_inverse(k: usize) -> Cyclotomic {
    Cyclotomic::from_rational(BigRational::new(
        num_bigint::BigInt::one(),
        num_bigint::BigInt::from(k),
    ))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::groups::{homs_to, make_group, GroupSpec};
    use std::sync::Arc;

    pub(crate) fn grp(s: &str) -> Group {
        Arc::new(make_group(&GroupSpec::parse(s).unwrap()).unwrap())
    }

    pub(crate) fn k4_alpha() -> (Group, Cochain2) {
        let g = grp("product(cyclic 2, cyclic 2)");
        let comp = |x: usize| [(0u64, 0u64), (1, 0), (0, 1), (1, 1)][x];
        let alpha = Cochain2::from_fn(g.clone(), 2, |x, y| comp(x).1 * comp(y).0).unwrap();
        (g, alpha)
    }

    #[test]
    fn trivial_group_ring_is_ground_field() {
        let a = group_ring(&grp("cyclic 1"), None).unwrap();
        assert_eq!(a.total_dim(), 1);
        assert!(a.mult_coeff(0, 0, 0, 0, 0).is_one());
        assert!(a.eta(0, 0, 0).is_one());
    }

    #[test]
    fn k4_group_ring_has_trivial_action() {
        let a = group_ring(&grp("product(cyclic 2, cyclic 2)"), None).unwrap();
        for g in 0..4 {
            assert!(a.chi[g].is_one());
            for h in 0..4 {
                assert!(a.act_coeff(g, h, 0, 0).is_one());
            }
        }
    }

    #[test]
    fn super_z2_group_ring_signs() {
        let g = grp("cyclic 2");
        let sigma = homs_to(&g, &g)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        let a = group_ring(&g, Some(&sigma)).unwrap();
        assert_eq!(a.chi[1], Cyclotomic::from_integer(-1));
        // phi_x(x) = -x
        assert_eq!(*a.act_coeff(1, 1, 0, 0), Cyclotomic::from_integer(-1));
        assert_eq!(a.parity_of(1, 0), 1);
        assert_eq!(a.parity_of(0, 0), 0);
    }

    #[test]
    fn twisted_k4_multiplication_is_anticommutative() {
        let (_, alpha) = k4_alpha();
        let a = twisted_group_ring(&alpha.group.clone(), &alpha, None).unwrap();
        // x = element 1, y = element 2: x*y = +(xy), y*x = -(xy)
        assert!(a.mult_coeff(1, 2, 0, 0, 0).is_one());
        assert_eq!(*a.mult_coeff(2, 1, 0, 0, 0), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn non_cocycle_rejected() {
        let g = grp("product(cyclic 2, cyclic 2)");
        let bad = Cochain2::from_fn(g.clone(), 2, |x, y| u64::from(x == 1 && y == 2)).unwrap();
        assert!(matches!(
            twisted_group_ring(&g, &bad, None),
            Err(Error::NotACocycle(_, _, _))
        ));
    }

    #[test]
    fn trivial_twist_equals_group_ring() {
        let g = grp("symmetric 3");
        let a = group_ring(&g, None).unwrap();
        let b = twisted_group_ring(&g, &Cochain2::zero(g.clone(), 2), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn element_arithmetic_in_s3_group_ring() {
        let g = grp("symmetric 3");
        let a = group_ring(&g, None).unwrap();
        let x = a.basis_element(1, 0);
        let y = a.basis_element(2, 0);
        let xy = a.mul_elements(&x, &y);
        let expected = a.basis_element(g.mul(1, 2), 0);
        assert_eq!(xy, expected);
        // unit really is a unit
        assert_eq!(a.mul_elements(&a.unit_element(), &y), y);
        // metric pairs g with g^-1
        let xi = a.basis_element(g.inv(1), 0);
        assert!(a.metric_pair(&x, &xi).is_one());
    }

    #[test]
    fn pushforward_z4_over_z2() {
        let big = grp("cyclic 4");
        let small = grp("cyclic 2");
        let pi = GroupHom::from_generator_images(big.clone(), small.clone(), &[(1, 1)]).unwrap();
        let a = pushforward_group_ring(&pi).unwrap();
        assert_eq!(a.dims, vec![2, 2]);
        assert_eq!(a.total_dim(), 4);
        a.structural_check().unwrap();
        // fiber over 0 is {0, 2}: the base is k[Z/2]
        let sq = a.mult_vec(
            1,
            &[Cyclotomic::one(), Cyclotomic::zero(1)],
            1,
            &[Cyclotomic::one(), Cyclotomic::zero(1)],
        );
        // (element 1)^2 = element 2, the nontrivial kernel basis vector
        assert!(sq[0].is_zero());
        assert!(sq[1].is_one());
    }

    #[test]
    fn pushforward_rejects_noncentral_kernel() {
        let big = grp("symmetric 3");
        let small = grp("cyclic 2");
        let sign = homs_to(&big, &small)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        // kernel A3 is not central in S3
        assert!(pushforward_group_ring(&sign).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (_, alpha) = k4_alpha();
        let a = twisted_group_ring(&alpha.group.clone(), &alpha, None).unwrap();
        let s = serde_json::to_string(&a.to_json()).unwrap();
        let b: GfaJson = serde_json::from_str(&s).unwrap();
        assert_eq!(b.into_algebra().unwrap(), a);
    }
}
