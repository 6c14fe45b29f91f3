//! Discrete-torsion machinery: the adjoint cocycle epsilon of a twisted
//! group ring, the twist action s(mu,lambda) with its validity equations,
//! the graded tensor product, alpha-twists, super regradings and partition
//! tables.

use crate::cohomology::{is_cocycle, Cochain2};
use crate::error::{Error, Result};
use crate::gfa::{group_ring, twisted_group_ring, GFrobeniusAlgebra};
use crate::groups::{Group, GroupHom};
use crate::report::Report;
use crate::scalars::Cyclotomic;

type Gfa = GFrobeniusAlgebra;

/// The adjoint-action table eps(g,h) = alpha(g,h) / alpha(g h g^-1, g),
/// in exponent form over Z/modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointCocycle {
    pub group: Group,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl AdjointCocycle {
    pub fn exponent(&self, g: usize, h: usize) -> u64 {
        self.values[g * self.group.size + h]
    }

    pub fn scalar(&self, g: usize, h: usize) -> Cyclotomic {
        Cyclotomic::root(self.modulus, self.exponent(g, h) as i64)
    }
}

fn eps_exponent(alpha: &Cochain2, g: usize, h: usize) -> u64 {
    let grp = &alpha.group;
    let m = alpha.modulus;
    let t = grp.conjugate(g, h).expect("index in range");
    (alpha.value(g, h) + m - alpha.value(t, g)) % m.max(1)
}

/// The adjoint cocycle of a 2-cocycle alpha.
pub fn epsilon(alpha: &Cochain2) -> Result<AdjointCocycle> {
    if !is_cocycle(alpha) {
        return Err(Error::NotACocycle(0, 0, 0));
    }
    let n = alpha.group.size;
    let mut values = vec![0u64; n * n];
    for g in 0..n {
        for h in 0..n {
            values[g * n + h] = eps_exponent(alpha, g, h);
        }
    }
    Ok(AdjointCocycle {
        group: alpha.group.clone(),
        modulus: alpha.modulus,
        values,
    })
}

/// Verify the relation families satisfied by the adjoint cocycle: the unit
/// relations, the 1-cocycle (action) identity, inversion, the metric
/// compatibility, the trace equation, and on commuting tuples the
/// bicharacter/antisymmetry identities.
pub fn check_epsilon(alpha: &Cochain2) -> Result<Report> {
    let eps = epsilon(alpha)?;
    let grp = &alpha.group;
    let n = grp.size;
    let m = alpha.modulus.max(1);
    let e = grp.identity;
    let ev = |g: usize, h: usize| eps.exponent(g, h);
    let mut report = Report::new();

    let mut w = None;
    for g in 0..n {
        if ev(g, e) != 0 || ev(g, g) != 0 {
            w = Some(format!("g={g}"));
            break;
        }
    }
    report.push("unit: eps(g,e)=eps(g,g)=1", w);

    let mut w = None;
    'outer1: for g1 in 0..n {
        for g2 in 0..n {
            for h in 0..n {
                let lhs = ev(grp.mul(g1, g2), h);
                let rhs = (ev(g1, grp.conjugate(g2, h)?) + ev(g2, h)) % m;
                if lhs != rhs {
                    w = Some(format!("(g1,g2,h)=({g1},{g2},{h})"));
                    break 'outer1;
                }
            }
        }
    }
    report.push("action: eps(g1g2,h)=eps(g1,g2hg2^-1)eps(g2,h)", w);

    let mut w = None;
    'outer2: for g in 0..n {
        for h in 0..n {
            let lhs = (m - ev(g, h)) % m;
            let rhs = ev(grp.inv(g), grp.conjugate(g, h)?);
            if lhs != rhs {
                w = Some(format!("(g,h)=({g},{h})"));
                break 'outer2;
            }
        }
    }
    report.push("inversion: eps(g,h)^-1=eps(g^-1,ghg^-1)", w);

    let mut w = None;
    'outer3: for k in 0..n {
        for g in 0..n {
            for h in 0..n {
                let lhs = ev(k, grp.mul(g, h));
                let rhs = (ev(k, g)
                    + ev(k, h)
                    + alpha.value(grp.conjugate(k, g)?, grp.conjugate(k, h)?)
                    + m
                    - alpha.value(g, h))
                    % m;
                if lhs != rhs {
                    w = Some(format!("(k,g,h)=({k},{g},{h})"));
                    break 'outer3;
                }
            }
        }
    }
    report.push("metric: eps(k,gh)=eps(k,g)eps(k,h)a(kgk^-1,khk^-1)/a(g,h)", w);

    let mut w = None;
    'outer4: for g in 0..n {
        for h in 0..n {
            let c = grp.commutator(g, h)?;
            let lhs = (alpha.value(c, grp.conjugate(h, g)?) + ev(h, g)) % m;
            let rhs = (alpha.value(c, h) + ev(grp.inv(g), grp.conjugate(g, h)?)) % m;
            if lhs != rhs {
                w = Some(format!("(g,h)=({g},{h})"));
                break 'outer4;
            }
        }
    }
    report.push("trace: a([g,h],hgh^-1)eps(h,g)=a([g,h],h)eps(g^-1,ghg^-1)", w);

    let mut w = None;
    'outer5: for (g, h) in grp.commuting_pairs() {
        if (ev(g, h) + ev(h, g)) % m != 0 {
            w = Some(format!("antisymmetry at ({g},{h})"));
            break;
        }
        if ev(grp.inv(g), h) != (m - ev(g, h)) % m {
            w = Some(format!("inverse at ({g},{h})"));
            break;
        }
        for k in 0..n {
            if grp.mul(g, k) == grp.mul(k, g) && grp.mul(h, k) == grp.mul(k, h) {
                if ev(grp.mul(g, k), h) != (ev(g, h) + ev(k, h)) % m {
                    w = Some(format!("bicharacter in first slot at ({g},{k},{h})"));
                    break 'outer5;
                }
                if ev(h, grp.mul(g, k)) != (ev(h, g) + ev(h, k)) % m {
                    w = Some(format!("bicharacter in second slot at ({h},{g},{k})"));
                    break 'outer5;
                }
            }
        }
    }
    report.push("bicharacter on commuting elements", w);

    Ok(report)
}

/// A twist datum (mu, lambda) in exponent form over a common modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistData {
    pub mu: Cochain2,
    pub lambda: Cochain2,
}

impl TwistData {
    pub fn new(mu: Cochain2, lambda: Cochain2) -> Result<TwistData> {
        if mu.modulus != lambda.modulus {
            return Err(Error::ModulusMismatch(mu.modulus, lambda.modulus));
        }
        if mu.group != lambda.group {
            return Err(Error::GroupMismatch);
        }
        Ok(TwistData { mu, lambda })
    }

    /// The universal twist of a cocycle: (alpha, eps(alpha)).
    pub fn universal(alpha: &Cochain2) -> Result<TwistData> {
        let eps = epsilon(alpha)?;
        let lambda = Cochain2::from_fn(alpha.group.clone(), alpha.modulus, |g, h| {
            eps.exponent(g, h)
        })?;
        Ok(TwistData {
            mu: alpha.clone(),
            lambda,
        })
    }

    pub fn trivial(group: Group) -> TwistData {
        TwistData {
            mu: Cochain2::zero(group.clone(), 1),
            lambda: Cochain2::zero(group, 1),
        }
    }
}

/// Is the product sector A_g A_h nonzero?
fn product_nonzero2(a: &Gfa, g: usize, h: usize) -> bool {
    let n = a.n();
    a.mult[g * n + h].iter().any(|c| !c.is_zero())
}

/// Is the triple product A_g A_h A_k nonzero?
fn product_nonzero3(a: &Gfa, g: usize, h: usize, k: usize) -> bool {
    let gh = a.group.mul(g, h);
    for i in 0..a.dims[g] {
        let mut x = vec![Cyclotomic::zero(1); a.dims[g]];
        x[i] = Cyclotomic::one();
        for j in 0..a.dims[h] {
            let mut y = vec![Cyclotomic::zero(1); a.dims[h]];
            y[j] = Cyclotomic::one();
            let xy = a.mult_vec(g, &x, h, &y);
            if xy.iter().all(Cyclotomic::is_zero) {
                continue;
            }
            for l in 0..a.dims[k] {
                let mut z = vec![Cyclotomic::zero(1); a.dims[k]];
                z[l] = Cyclotomic::one();
                if a.mult_vec(gh, &xy, k, &z).iter().any(|c| !c.is_zero()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Does some basis vector c of the commutator sector give a nonzero
/// chi_h (S)Tr(l_c phi_h | A_g)?
fn trace_nonzero(a: &Gfa, g: usize, h: usize) -> bool {
    let s = a.group.commutator(g, h).unwrap();
    let hgh = a.group.conjugate(h, g).unwrap();
    for c in 0..a.dims[s] {
        let mut cv = vec![Cyclotomic::zero(1); a.dims[s]];
        cv[c] = Cyclotomic::one();
        let mut tr = Cyclotomic::zero(1);
        for i in 0..a.dims[g] {
            let mut x = vec![Cyclotomic::zero(1); a.dims[g]];
            x[i] = Cyclotomic::one();
            let w = a.mult_vec(s, &cv, hgh, &a.act_vec(h, g, &x));
            let mut term = w[i].clone();
            if a.parity_of(g, i) == 1 {
                term = term.neg();
            }
            tr = tr.add(&term);
        }
        if !tr.is_zero() {
            return true;
        }
    }
    false
}

/// Check the defining equations of a valid twist, each only on the
/// support the theory requires (computed from A's actual tensors).
pub fn validate_twist(a: &Gfa, t: &TwistData) -> Result<Report> {
    if t.mu.group != a.group {
        return Err(Error::GroupMismatch);
    }
    let grp = &a.group;
    let n = grp.size;
    let m = t.mu.modulus.max(1);
    let e = grp.identity;
    let mu = |g: usize, h: usize| t.mu.value(g, h);
    let la = |g: usize, h: usize| t.lambda.value(g, h);
    let mut report = Report::new();

    let mut w = None;
    for g in 0..n {
        if mu(e, g) != 0 || mu(g, e) != 0 {
            w = Some(format!("g={g}"));
            break;
        }
    }
    report.push("(8)", w);

    let mut w = None;
    'eq9: for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if !product_nonzero3(a, g, h, k) {
                    continue;
                }
                let lhs = (mu(g, h) + mu(grp.mul(g, h), k)) % m;
                let rhs = (mu(h, k) + mu(g, grp.mul(h, k))) % m;
                if lhs != rhs {
                    w = Some(format!("(g,h,k)=({g},{h},{k})"));
                    break 'eq9;
                }
            }
        }
    }
    report.push("(9)", w);

    let mut w = None;
    'eq10: for g in 0..n {
        for h in 0..n {
            if !product_nonzero2(a, g, h) {
                continue;
            }
            let rhs = (mu(g, h) + m - mu(grp.conjugate(g, h)?, g) % m) % m;
            if la(g, h) != rhs {
                w = Some(format!("(g,h)=({g},{h})"));
                break 'eq10;
            }
        }
    }
    report.push("(10)", w);

    let mut w = None;
    'eq11: for g in 0..n {
        for h in 0..n {
            if !product_nonzero2(a, g, h) {
                continue;
            }
            for k in 0..n {
                if product_nonzero3(a, g, h, k) {
                    continue;
                }
                let lhs = (la(g, grp.mul(h, k)) + mu(h, k)) % m;
                let rhs =
                    (la(g, h) + la(g, k) + mu(grp.conjugate(g, h)?, grp.conjugate(g, k)?)) % m;
                if lhs != rhs {
                    w = Some(format!("(g,h,k)=({g},{h},{k})"));
                    break 'eq11;
                }
            }
        }
    }
    report.push("(11)", w);

    let mut w = None;
    'eq12: for g in 0..n {
        if la(e, g) != 0 || la(g, g) != 0 {
            w = Some(format!("unit/self at g={g}"));
            break;
        }
        for h in 0..n {
            for k in 0..n {
                let lhs = la(grp.mul(g, h), k);
                let rhs = (la(h, k) + la(g, grp.conjugate(h, k)?)) % m;
                if lhs != rhs {
                    w = Some(format!("(g,h,k)=({g},{h},{k})"));
                    break 'eq12;
                }
            }
        }
    }
    report.push("(12)", w);

    let mut w = None;
    'eq13: for g in 0..n {
        for h in 0..n {
            let commuting = grp.mul(g, h) == grp.mul(h, g);
            if !commuting && !trace_nonzero(a, g, h) {
                continue;
            }
            let c = grp.commutator(g, h)?;
            let lhs = (mu(c, grp.conjugate(h, g)?) + la(h, g)) % m;
            let rhs = (mu(c, h) + la(grp.inv(g), grp.conjugate(g, h)?)) % m;
            if lhs != rhs {
                w = Some(format!("(g,h)=({g},{h})"));
                break 'eq13;
            }
        }
    }
    report.push("(13)", w);

    Ok(report)
}

/// Apply a validated twist: rescale multiplication by mu, the metric by
/// mu(g,g^-1), the action by lambda; the character is untouched.
pub fn twist(a: &Gfa, t: &TwistData) -> Result<Gfa> {
    let report = validate_twist(a, t)?;
    if let Some(fail) = report.failures().next() {
        return Err(Error::TwistRejected {
            eq: fail.name.clone(),
            witness: fail.witness.clone().unwrap_or_default(),
        });
    }
    let n = a.n();
    let mut out = a.clone();
    for g in 0..n {
        for h in 0..n {
            let mu = t.mu.scalar(g, h);
            for c in out.mult[g * n + h].iter_mut() {
                *c = c.mul(&mu);
            }
            let la = t.lambda.scalar(g, h);
            for c in out.action[g * n + h].iter_mut() {
                *c = c.mul(&la);
            }
        }
        let mu = t.mu.scalar(g, a.group.inv(g));
        for c in out.metric[g].iter_mut() {
            *c = c.mul(&mu);
        }
    }
    Ok(out)
}

/// The graded tensor product A (x) B over the same group: diagonal
/// grading, componentwise structure with the Koszul sign of the super
/// grading. When either factor is purely even this is the plain
/// componentwise product.
pub fn tensor(a: &Gfa, b: &Gfa) -> Result<Gfa> {
    if a.group != b.group {
        return Err(Error::GroupMismatch);
    }
    let grp = a.group.clone();
    let n = grp.size;
    let dims: Vec<usize> = (0..n).map(|g| a.dims[g] * b.dims[g]).collect();
    let pa = |g: usize, i: usize| a.parity_of(g, i);
    let pb = |g: usize, i: usize| b.parity_of(g, i);

    let mut mult = Vec::with_capacity(n * n);
    let mut action = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let gh = grp.mul(g, h);
            let mut t3 = vec![Cyclotomic::zero(1); dims[g] * dims[h] * dims[gh]];
            for i in 0..a.dims[g] {
                for p in 0..b.dims[g] {
                    for j in 0..a.dims[h] {
                        for q in 0..b.dims[h] {
                            for k in 0..a.dims[gh] {
                                let ca = a.mult_coeff(g, h, i, j, k);
                                if ca.is_zero() {
                                    continue;
                                }
                                for r in 0..b.dims[gh] {
                                    let cb = b.mult_coeff(g, h, p, q, r);
                                    if cb.is_zero() {
                                        continue;
                                    }
                                    let mut c = ca.mul(cb);
                                    if pb(g, p) & pa(h, j) == 1 {
                                        c = c.neg();
                                    }
                                    let row = i * b.dims[g] + p;
                                    let col = j * b.dims[h] + q;
                                    let dep = k * b.dims[gh] + r;
                                    t3[(row * dims[h] + col) * dims[gh] + dep] = c;
                                }
                            }
                        }
                    }
                }
            }
            mult.push(t3);
            let ta = grp.conjugate(g, h)?;
            let mut mat = vec![Cyclotomic::zero(1); dims[h] * dims[ta]];
            for i in 0..a.dims[h] {
                for p in 0..b.dims[h] {
                    for k in 0..a.dims[ta] {
                        let ca = a.act_coeff(g, h, i, k);
                        if ca.is_zero() {
                            continue;
                        }
                        for r in 0..b.dims[ta] {
                            let cb = b.act_coeff(g, h, p, r);
                            if !cb.is_zero() {
                                mat[(i * b.dims[h] + p) * dims[ta] + k * b.dims[ta] + r] =
                                    ca.mul(cb);
                            }
                        }
                    }
                }
            }
            action.push(mat);
        }
    }
    let mut metric = Vec::with_capacity(n);
    for g in 0..n {
        let gi = grp.inv(g);
        let mut blk = vec![Cyclotomic::zero(1); dims[g] * dims[gi]];
        for i in 0..a.dims[g] {
            for p in 0..b.dims[g] {
                for j in 0..a.dims[gi] {
                    let ca = a.eta(g, i, j);
                    if ca.is_zero() {
                        continue;
                    }
                    for q in 0..b.dims[gi] {
                        let cb = b.eta(g, p, q);
                        if cb.is_zero() {
                            continue;
                        }
                        let mut c = ca.mul(cb);
                        if pb(g, p) & pa(gi, j) == 1 {
                            c = c.neg();
                        }
                        blk[(i * b.dims[g] + p) * dims[gi] + j * b.dims[gi] + q] = c;
                    }
                }
            }
        }
        metric.push(blk);
    }
    let mut unit = vec![Cyclotomic::zero(1); dims[grp.identity]];
    let eb = b.dims[grp.identity];
    for (i, ui) in a.unit.iter().enumerate() {
        for (p, up) in b.unit.iter().enumerate() {
            unit[i * eb + p] = ui.mul(up);
        }
    }
    let parity = Some(
        (0..n)
            .map(|g| {
                let mut row = Vec::with_capacity(dims[g]);
                for i in 0..a.dims[g] {
                    for p in 0..b.dims[g] {
                        row.push(pa(g, i) ^ pb(g, p));
                    }
                }
                row
            })
            .collect(),
    );
    let mut out = Gfa {
        group: grp.clone(),
        dims,
        mult,
        unit,
        metric,
        action,
        chi: (0..n).map(|g| a.chi[g].mul(&b.chi[g])).collect(),
        parity,
    };
    out.normalize_parity();
    Ok(out)
}

/// The alpha-twist A (x) k^alpha[G] under the canonical identification of
/// each sector with A_g (the second factor is one-dimensional, so the
/// tensor layout is already the identification).
pub fn alpha_twist(a: &Gfa, alpha: &Cochain2) -> Result<Gfa> {
    let ring = twisted_group_ring(&a.group, alpha, None)?;
    let out = tensor(a, &ring)?;
    debug_assert_eq!(out, twist(a, &TwistData::universal(alpha)?)?);
    Ok(out)
}

/// Change the super structure by a parity homomorphism, realized by
/// tensoring with the super group ring k^sigma[G].
pub fn super_regrade(a: &Gfa, sigma: &GroupHom) -> Result<Gfa> {
    let ring = group_ring(&a.group, Some(sigma))?;
    tensor(a, &ring)
}

/// The table of sector contributions Z_{g,h} = chi_g (S)Tr(phi_g | A_h)
/// over commuting pairs, and their sum.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionTable {
    pub entries: Vec<(usize, usize, Cyclotomic)>,
    pub total: Cyclotomic,
}

impl PartitionTable {
    pub fn get(&self, g: usize, h: usize) -> Option<&Cyclotomic> {
        self.entries
            .iter()
            .find(|&&(x, y, _)| x == g && y == h)
            .map(|(_, _, z)| z)
    }
}

pub fn partition(a: &Gfa) -> PartitionTable {
    let mut entries = Vec::new();
    let mut total = Cyclotomic::zero(1);
    for (g, h) in a.group.commuting_pairs() {
        let mut tr = Cyclotomic::zero(1);
        for i in 0..a.dims[h] {
            let mut term = a.act_coeff(g, h, i, i).clone();
            if a.parity_of(h, i) == 1 {
                term = term.neg();
            }
            tr = tr.add(&term);
        }
        let z = a.chi[g].mul(&tr);
        total = total.add(&z);
        entries.push((g, h, z));
    }
    PartitionTable { entries, total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::schur_h2;
    use crate::gfa::tests::{grp, k4_alpha};
    use crate::gfa::{check_axioms, group_ring};
    use crate::groups::homs_to;

    #[test]
    fn trivial_alpha_gives_trivial_epsilon() {
        let g = grp("symmetric 3");
        let eps = epsilon(&Cochain2::zero(g, 4)).unwrap();
        assert!(eps.values.iter().all(|&v| v == 0));
    }

    #[test]
    fn k4_epsilon_is_minus_one_off_diagonal() {
        let (_, alpha) = k4_alpha();
        let eps = epsilon(&alpha).unwrap();
        assert_eq!(eps.exponent(1, 2), 1); // eps(x,y) = -1
        assert_eq!(eps.exponent(2, 1), 1);
        for g in 0..4 {
            assert_eq!(eps.exponent(g, g), 0);
            assert_eq!(eps.exponent(g, 0), 0);
        }
    }

    #[test]
    fn epsilon_relations_hold_for_schur_representatives() {
        for spec in ["product(cyclic 2, cyclic 2)", "dihedral 4", "quaternion", "symmetric 3"] {
            let g = grp(spec);
            for rep in &schur_h2(&g).unwrap().representatives {
                let r = check_epsilon(rep).unwrap();
                assert!(r.all_passed(), "{spec}: {r}");
            }
            let r = check_epsilon(&Cochain2::zero(g, 2)).unwrap();
            assert!(r.all_passed());
        }
    }

    #[test]
    fn trivial_twist_is_identity() {
        let (g, alpha) = k4_alpha();
        let a = twisted_group_ring(&g, &alpha, None).unwrap();
        let t = TwistData::trivial(g);
        assert_eq!(twist(&a, &t).unwrap(), a);
    }

    #[test]
    fn universal_twist_is_valid_for_every_fixture_algebra() {
        let (g, alpha) = k4_alpha();
        let algebras = [
            group_ring(&g, None).unwrap(),
            twisted_group_ring(&g, &alpha, None).unwrap(),
        ];
        for a in &algebras {
            for candidate in [Cochain2::zero(g.clone(), 2), alpha.clone()] {
                let t = TwistData::universal(&candidate).unwrap();
                let r = validate_twist(a, &t).unwrap();
                assert!(r.all_passed(), "{r}");
                let twisted = twist(a, &t).unwrap();
                assert!(check_axioms(&twisted).unwrap().all_passed());
            }
        }
    }

    #[test]
    fn non_cocycle_mu_rejected_with_eq9() {
        let g = grp("product(cyclic 2, cyclic 2)");
        let a = group_ring(&g, None).unwrap();
        let mu = Cochain2::from_fn(g.clone(), 2, |x, y| u64::from(x == 1 && y == 2)).unwrap();
        let lambda = Cochain2::zero(g, 2);
        let t = TwistData::new(mu, lambda).unwrap();
        match twist(&a, &t) {
            Err(Error::TwistRejected { eq, .. }) => assert!(eq == "(9)" || eq == "(10)"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn alpha_twist_of_group_ring_is_twisted_group_ring() {
        let (g, alpha) = k4_alpha();
        let a = group_ring(&g, None).unwrap();
        let twisted = alpha_twist(&a, &alpha).unwrap();
        assert_eq!(twisted, twisted_group_ring(&g, &alpha, None).unwrap());
    }

    #[test]
    fn alpha_twist_inverse_round_trip() {
        let (g, alpha) = k4_alpha();
        let a = group_ring(&g, None).unwrap();
        // alpha has order 2: alpha^-1 = alpha
        let once = alpha_twist(&a, &alpha).unwrap();
        let twice = alpha_twist(&once, &alpha).unwrap();
        assert_eq!(twice, a);
        let _ = g;
    }

    #[test]
    fn tensor_multiplies_cocycles() {
        let (g, alpha) = k4_alpha();
        let ka = twisted_group_ring(&g, &alpha, None).unwrap();
        let sum = alpha.plus(&alpha).unwrap(); // trivial
        assert_eq!(
            tensor(&ka, &ka).unwrap(),
            twisted_group_ring(&g, &sum, None).unwrap()
        );
    }

    #[test]
    fn super_twisted_ring_is_tensor_of_parts() {
        let (g, alpha) = k4_alpha();
        let z2 = grp("cyclic 2");
        for sigma in homs_to(&g, &z2).unwrap() {
            let combined = twisted_group_ring(&g, &alpha, Some(&sigma)).unwrap();
            let split = tensor(
                &twisted_group_ring(&g, &alpha, None).unwrap(),
                &group_ring(&g, Some(&sigma)).unwrap(),
            )
            .unwrap();
            assert_eq!(combined, split);
        }
    }

    #[test]
    fn super_tensor_super_passes_axioms() {
        let g = grp("cyclic 2");
        let sigma = homs_to(&g, &g)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        let ks = group_ring(&g, Some(&sigma)).unwrap();
        let both = tensor(&ks, &ks).unwrap();
        assert!(check_axioms(&both).unwrap().all_passed());
        // parities added: everything even again
        assert!(!both.is_super());
    }

    #[test]
    fn regrade_count_matches_hom_count() {
        let g = grp("product(cyclic 2, cyclic 2)");
        let z2 = grp("cyclic 2");
        let a = group_ring(&g, None).unwrap();
        let mut seen = Vec::new();
        for sigma in homs_to(&g, &z2).unwrap() {
            let r = super_regrade(&a, &sigma).unwrap();
            assert!(check_axioms(&r).unwrap().all_passed());
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn partition_values() {
        let (g, alpha) = k4_alpha();
        let a = group_ring(&g, None).unwrap();
        assert_eq!(partition(&a).total, Cyclotomic::from_integer(16));
        let ka = twisted_group_ring(&g, &alpha, None).unwrap();
        assert_eq!(partition(&ka).total, Cyclotomic::from_integer(4));
        let s3 = group_ring(&grp("symmetric 3"), None).unwrap();
        assert_eq!(partition(&s3).total, Cyclotomic::from_integer(18));
    }

    #[test]
    fn partition_phase_law() {
        let (g, alpha) = k4_alpha();
        let a = group_ring(&g, None).unwrap();
        let eps = epsilon(&alpha).unwrap();
        let before = partition(&a);
        let after = partition(&alpha_twist(&a, &alpha).unwrap());
        for &(x, y, ref z) in &after.entries {
            let expect = eps.scalar(x, y).mul(before.get(x, y).unwrap());
            assert_eq!(*z, expect, "at ({x},{y})");
        }
    }

    #[test]
    fn super_and_torsion_deformations_are_distinct_on_z2() {
        let g = grp("cyclic 2");
        let a = group_ring(&g, None).unwrap();
        let sigma = homs_to(&g, &g)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        let regraded = super_regrade(&a, &sigma).unwrap();
        assert_ne!(partition(&regraded), partition(&a));
        // every alpha-twist leaves the table unchanged (H^2 trivial)
        for alpha in schur_h2(&g).unwrap().elements() {
            let t = alpha_twist(&a, &alpha).unwrap();
            assert_eq!(partition(&t), partition(&a));
        }
    }

    #[test]
    fn chi_untouched_by_twists() {
        let (g, alpha) = k4_alpha();
        let a = group_ring(&g, None).unwrap();
        assert_eq!(alpha_twist(&a, &alpha).unwrap().chi, a.chi);
    }
}
