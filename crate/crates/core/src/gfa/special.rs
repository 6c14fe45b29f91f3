//! Special algebras: sectors that are free rank-one modules over the
//! identity sector, described by a base Frobenius algebra together with a
//! gamma/phi cocycle pair, plus the canonical form of one-dimensional
//! algebras up to diagonal rescaling.

use num_integer::Integer;

use crate::cohomology::{schur_h2, Cochain2, H2Solver};
use crate::cyclin::CycMat;
use crate::error::{Error, Result};
use crate::gfa::GFrobeniusAlgebra;
use crate::groups::{make_group, Group, GroupHom, GroupSpec};
use crate::report::Report;
use crate::scalars::Cyclotomic;
use std::sync::Arc;

type Gfa = GFrobeniusAlgebra;

/// A special presentation: base Frobenius algebra B (over the trivial
/// group), sector generators 1_g with products 1_g 1_h = gamma(g,h) 1_{gh}
/// (gamma an element of B, possibly zero), action phi_g(1_h) =
/// phi(g,h) 1_{ghg^-1} (phi a nonzero scalar, without the super sign),
/// and sector parities sigma.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialGFA {
    pub group: Group,
    pub base: GFrobeniusAlgebra,
    /// Indexed `g * n + h`; coordinates of gamma(g,h) in the base.
    pub gamma: Vec<Vec<Cyclotomic>>,
    /// Indexed `g * n + h`.
    pub phi: Vec<Cyclotomic>,
    pub sigma: Vec<u8>,
}

impl SpecialGFA {
    pub fn gamma(&self, g: usize, h: usize) -> &[Cyclotomic] {
        &self.gamma[g * self.group.size + h]
    }

    pub fn phi(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.phi[g * self.group.size + h]
    }
}

fn trivial_group() -> Group {
    Arc::new(make_group(&GroupSpec::parse("cyclic 1").unwrap()).unwrap())
}

fn vec_eq(a: &[Cyclotomic], b: &[Cyclotomic]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

fn scale_vec(c: &Cyclotomic, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    v.iter().map(|x| c.mul(x)).collect()
}

/// Build the G-Frobenius algebra determined by a special presentation,
/// after validating its consistency equations. The base must be purely
/// even and the base action of every phi_g trivial (which is what makes
/// the scalar description complete).
pub fn special_from_cocycles(s: &SpecialGFA) -> Result<Gfa> {
    let grp = &s.group;
    let n = grp.size;
    let e = grp.identity;
    if s.base.group.size != 1 {
        return Err(Error::InvalidSpec(
            "the base of a special algebra must live over the trivial group".into(),
        ));
    }
    if s.base.is_super() {
        return Err(Error::InvalidSpec(
            "special presentations with a super base are not supported".into(),
        ));
    }
    let d = s.base.dims[0];
    if s.gamma.len() != n * n || s.phi.len() != n * n || s.sigma.len() != n {
        return Err(Error::Dimension("special presentation table sizes".into()));
    }
    for v in &s.gamma {
        if v.len() != d {
            return Err(Error::Dimension("gamma coordinate length".into()));
        }
    }
    // sigma must be a parity homomorphism.
    if s.sigma[e] != 0 {
        return Err(Error::NotSpecial("sigma(e) != 0".into()));
    }
    for g in 0..n {
        for h in 0..n {
            if s.sigma[grp.mul(g, h)] != s.sigma[g] ^ s.sigma[h] {
                return Err(Error::NotSpecial(format!(
                    "sigma is not a homomorphism at ({g},{h})"
                )));
            }
        }
    }
    // Unit normalization and invertibility of phi.
    for g in 0..n {
        if !vec_eq(s.gamma(e, g), &s.base.unit) || !vec_eq(s.gamma(g, e), &s.base.unit) {
            return Err(Error::NotSpecial(format!(
                "gamma is not unit-normalized at g={g}"
            )));
        }
        for h in 0..n {
            if s.phi(g, h).is_zero() {
                return Err(Error::NotSpecial(format!("phi({g},{h}) = 0")));
            }
        }
        if !s.phi(e, g).is_one() {
            return Err(Error::NotSpecial(format!("phi(e,{g}) != 1")));
        }
    }
    let bmul = |x: &[Cyclotomic], y: &[Cyclotomic]| s.base.mult_vec(0, x, 0, y);
    // Associativity of the gamma system.
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let lhs = bmul(s.gamma(g, h), s.gamma(grp.mul(g, h), k));
                let rhs = bmul(s.gamma(h, k), s.gamma(g, grp.mul(h, k)));
                if !vec_eq(&lhs, &rhs) {
                    return Err(Error::NotSpecial(format!(
                        "gamma fails associativity at ({g},{h},{k})"
                    )));
                }
            }
        }
    }
    // Equation (1): gamma(g,h) = phi(g,h) gamma(ghg^-1, g).
    for g in 0..n {
        for h in 0..n {
            let rhs = scale_vec(s.phi(g, h), s.gamma(grp.conjugate(g, h)?, g));
            if !vec_eq(s.gamma(g, h), &rhs) {
                return Err(Error::NotSpecial(format!("equation (1) fails at ({g},{h})")));
            }
        }
    }
    // Equation (2): phi(k,g) phi(k,h) gamma(kgk^-1, khk^-1) = phi(k,gh) gamma(g,h).
    for k in 0..n {
        for g in 0..n {
            for h in 0..n {
                let lhs = scale_vec(
                    &s.phi(k, g).mul(s.phi(k, h)),
                    s.gamma(grp.conjugate(k, g)?, grp.conjugate(k, h)?),
                );
                let rhs = scale_vec(s.phi(k, grp.mul(g, h)), s.gamma(g, h));
                if !vec_eq(&lhs, &rhs) {
                    return Err(Error::NotSpecial(format!(
                        "equation (2) fails at ({k},{g},{h})"
                    )));
                }
            }
        }
    }
    // Composition: phi(g, hkh^-1) phi(h,k) = phi(gh, k).
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let lhs = s.phi(g, grp.conjugate(h, k)?).mul(s.phi(h, k));
                if &lhs != s.phi(grp.mul(g, h), k) {
                    return Err(Error::NotSpecial(format!(
                        "phi fails composition at ({g},{h},{k})"
                    )));
                }
            }
        }
    }

    let dims = vec![d; n];
    let mut mult = Vec::with_capacity(n * n);
    let mut action = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let mut t3 = vec![Cyclotomic::zero(1); d * d * d];
            for i in 0..d {
                let mut x = vec![Cyclotomic::zero(1); d];
                x[i] = Cyclotomic::one();
                for j in 0..d {
                    let mut y = vec![Cyclotomic::zero(1); d];
                    y[j] = Cyclotomic::one();
                    let w = bmul(&bmul(&x, &y), s.gamma(g, h));
                    for (k, c) in w.into_iter().enumerate() {
                        t3[(i * d + j) * d + k] = c;
                    }
                }
            }
            mult.push(t3);
            // Stored action scalar carries the super sign.
            let mut c = s.phi(g, h).clone();
            if s.sigma[g] & s.sigma[h] == 1 {
                c = c.neg();
            }
            let mut mat = vec![Cyclotomic::zero(1); d * d];
            for i in 0..d {
                mat[i * d + i] = c.clone();
            }
            action.push(mat);
        }
    }
    let mut metric = Vec::with_capacity(n);
    for g in 0..n {
        let gi = grp.inv(g);
        let mut blk = vec![Cyclotomic::zero(1); d * d];
        for j in 0..d {
            let mut y = vec![Cyclotomic::zero(1); d];
            y[j] = Cyclotomic::one();
            let v = bmul(&y, s.gamma(g, gi));
            for i in 0..d {
                let mut acc = Cyclotomic::zero(1);
                for (l, vl) in v.iter().enumerate() {
                    acc = acc.add(&s.base.eta(0, i, l).mul(vl));
                }
                blk[i * d + j] = acc;
            }
        }
        metric.push(blk);
    }
    let chi = (0..n)
        .map(|g| {
            let c = s.phi(g, g).inv()?;
            Ok(if s.sigma[g] == 1 { c.neg() } else { c })
        })
        .collect::<Result<Vec<_>>>()?;
    let parity = Some((0..n).map(|g| vec![s.sigma[g]; d]).collect());
    let mut out = Gfa {
        group: grp.clone(),
        dims,
        mult,
        unit: s.base.unit.clone(),
        metric,
        action,
        chi,
        parity,
    };
    out.normalize_parity();
    out.structural_check()?;
    Ok(out)
}

/// Try to present a G-Frobenius algebra in special form: find a cyclic
/// generator of each sector over the identity sector and read off the
/// gamma/phi tables.
pub fn extract_special(a: &Gfa) -> Result<SpecialGFA> {
    let grp = &a.group;
    let n = grp.size;
    let e = grp.identity;
    let d = a.dims[e];
    if a.dims.iter().any(|&x| x != d) {
        return Err(Error::NotSpecial("sector dimensions differ".into()));
    }
    for i in 0..d {
        if a.parity_of(e, i) != 0 {
            return Err(Error::NotSpecial("super identity sector not supported".into()));
        }
    }
    for g in 0..n {
        for i in 0..d {
            for k in 0..d {
                let expect = if i == k { Cyclotomic::one() } else { Cyclotomic::zero(1) };
                if *a.act_coeff(g, e, i, k) != expect {
                    return Err(Error::NotSpecial(
                        "action on the identity sector is nontrivial".into(),
                    ));
                }
            }
        }
    }

    // Base = identity sector.
    let trivial = trivial_group();
    let mut ident = vec![Cyclotomic::zero(1); d * d];
    for i in 0..d {
        ident[i * d + i] = Cyclotomic::one();
    }
    let mut base = Gfa {
        group: trivial,
        dims: vec![d],
        mult: vec![a.mult[e * n + e].clone()],
        unit: a.unit.clone(),
        metric: vec![a.metric[e].clone()],
        action: vec![ident],
        chi: vec![Cyclotomic::one()],
        parity: None,
    };
    base.normalize_parity();

    // Sector generators: the identity sector uses the unit; elsewhere try
    // basis vectors, then the all-ones combination.
    let mut gens: Vec<Vec<Cyclotomic>> = Vec::with_capacity(n);
    let mut inv_mats: Vec<CycMat> = Vec::with_capacity(n);
    for g in 0..n {
        let mut candidates: Vec<Vec<Cyclotomic>> = Vec::new();
        if g == e {
            candidates.push(a.unit.clone());
        } else {
            for i in 0..d {
                let mut v = vec![Cyclotomic::zero(1); d];
                v[i] = Cyclotomic::one();
                candidates.push(v);
            }
            candidates.push(vec![Cyclotomic::one(); d]);
        }
        let mut found = None;
        for v in candidates {
            let mut m = CycMat::zeros(d, d);
            for i in 0..d {
                let mut b = vec![Cyclotomic::zero(1); d];
                b[i] = Cyclotomic::one();
                let col = a.mult_vec(e, &b, g, &v);
                for (r, c) in col.into_iter().enumerate() {
                    m[(r, i)] = c;
                }
            }
            if let Ok(inv) = crate::cyclin::invert(&m) {
                found = Some((v, inv));
                break;
            }
        }
        let Some((v, inv)) = found else {
            return Err(Error::NotSpecial(format!("no cyclic generator found for sector {g}")));
        };
        gens.push(v);
        inv_mats.push(inv);
    }

    // Sector parities (each sector must be homogeneous).
    let mut sigma = vec![0u8; n];
    for g in 0..n {
        let p = a.parity_of(g, 0);
        if (1..d).any(|i| a.parity_of(g, i) != p) {
            return Err(Error::NotSpecial(format!("sector {g} is not homogeneous")));
        }
        sigma[g] = p;
    }

    let mut gamma = Vec::with_capacity(n * n);
    let mut phi = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let gh = grp.mul(g, h);
            let w = a.mult_vec(g, &gens[g], h, &gens[h]);
            gamma.push(inv_mats[gh].mul_vec(&w)?);

            let t = grp.conjugate(g, h)?;
            let w = a.act_vec(g, h, &gens[h]);
            let target = &gens[t];
            let pivot = target
                .iter()
                .position(|c| !c.is_zero())
                .expect("generators are nonzero");
            let mut c = w[pivot].div(&target[pivot])?;
            if !vec_eq(&w, &scale_vec(&c, target)) {
                return Err(Error::NotSpecial(format!(
                    "action is not scalar on the generator of sector {h} under {g}"
                )));
            }
            // Remove the super sign to recover the raw scalar.
            if sigma[g] & sigma[h] == 1 {
                c = c.neg();
            }
            phi.push(c);
        }
    }

    Ok(SpecialGFA {
        group: grp.clone(),
        base,
        gamma,
        phi,
        sigma,
    })
}

/// Galois condition: every product of sectors spans its target,
/// A_g A_h = A_{gh} for all g, h.
pub fn is_galois(a: &Gfa) -> Result<bool> {
    let grp = &a.group;
    let n = grp.size;
    for g in 0..n {
        for h in 0..n {
            let gh = grp.mul(g, h);
            let mut m = CycMat::zeros(a.dims[g] * a.dims[h], a.dims[gh]);
            for i in 0..a.dims[g] {
                for j in 0..a.dims[h] {
                    for k in 0..a.dims[gh] {
                        m[(i * a.dims[h] + j, k)] = a.mult_coeff(g, h, i, j, k).clone();
                    }
                }
            }
            if crate::cyclin::rank(&m) < a.dims[gh] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A report wrapper around the galois check for uniform CLI output.
pub fn galois_report(a: &Gfa) -> Result<Report> {
    let mut r = Report::new();
    r.push(
        "galois: sector products span their targets",
        if is_galois(a)? { None } else { Some("some A_g A_h is a proper subspace of A_{gh}".into()) },
    );
    Ok(r)
}

/// The canonical form of a one-dimensional algebra: the cohomology class
/// of its structure constants together with its parity grading. Two
/// one-dimensional algebras are equivalent under diagonal rescaling if
/// and only if their canonical forms are equal.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub class_rep: Cochain2,
    pub sigma: GroupHom,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.class_rep == other.class_rep && self.sigma.images == other.sigma.images
    }
}

pub fn canonicalize_onedim(a: &Gfa) -> Result<CanonicalForm> {
    let grp = &a.group;
    let n = grp.size;
    let e = grp.identity;
    if a.dims.iter().any(|&d| d != 1) {
        return Err(Error::Dimension(
            "canonical forms are defined for one-dimensional sectors only".into(),
        ));
    }
    // Parity grading from the character signs.
    let z2 = Arc::new(make_group(&GroupSpec::parse("cyclic 2")?)?);
    let mut images = Vec::with_capacity(n);
    for g in 0..n {
        if a.chi[g].is_one() {
            images.push(0);
        } else if a.chi[g] == Cyclotomic::from_integer(-1) {
            images.push(1);
        } else {
            return Err(Error::NotSpecial(format!(
                "character value at {g} is not a sign"
            )));
        }
    }
    let sigma = GroupHom::new(grp.clone(), z2, images)?;

    // Structure constants must be roots of unity in a normalized basis.
    for g in 0..n {
        if !a.mult_coeff(e, g, 0, 0, 0).is_one() || !a.mult_coeff(g, e, 0, 0, 0).is_one() {
            return Err(Error::NotNormalized(e, g));
        }
    }
    let mut orders = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let c = a.mult_coeff(g, h, 0, 0, 0);
            let bound = 2 * c.order().max(1);
            let Some(exp) = c.as_root_of_unity(bound) else {
                return Err(Error::NotARootOfUnity(bound));
            };
            orders.push(bound / bound.gcd(&exp));
        }
    }
    let l = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
    let beta = Cochain2::from_fn(grp.clone(), l, |g, h| {
        a.mult_coeff(g, h, 0, 0, 0).as_root_of_unity(l).unwrap()
    })?;

    // Match against the canonical class representatives, stabilizing both
    // sides far enough that any coboundary connecting them is visible.
    let classes = schur_h2(grp)?;
    let m = grp.size as u64;
    let big = l.lcm(&classes.modulus) * m;
    let solver = H2Solver::new(grp.clone());
    let beta_big = beta.stabilized(big / l);
    for rep in classes.elements() {
        let rep_big = rep.stabilized(big / classes.modulus);
        if solver.are_cohomologous(&beta_big, &rep_big)?.is_some() {
            return Ok(CanonicalForm {
                class_rep: rep,
                sigma,
            });
        }
    }
    Err(Error::NoSolution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfa::tests::{grp, k4_alpha};
    use crate::gfa::twist::{alpha_twist, partition};
    use crate::gfa::{check_axioms, group_ring, pushforward_group_ring, twisted_group_ring};
    use crate::groups::homs_to;

    #[test]
    fn round_trip_twisted_group_ring() {
        let (g, alpha) = k4_alpha();
        let a = twisted_group_ring(&g, &alpha, None).unwrap();
        let s = extract_special(&a).unwrap();
        assert_eq!(special_from_cocycles(&s).unwrap(), a);
    }

    #[test]
    fn round_trip_super_group_ring() {
        let g = grp("cyclic 2");
        let sigma = homs_to(&g, &g)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        let a = group_ring(&g, Some(&sigma)).unwrap();
        let s = extract_special(&a).unwrap();
        assert_eq!(s.sigma, vec![0, 1]);
        assert!(s.phi.iter().all(|c| c.is_one()));
        assert_eq!(special_from_cocycles(&s).unwrap(), a);
    }

    #[test]
    fn pushforward_algebra_is_special_and_galois() {
        let src = grp("product(cyclic 2, cyclic 4)");
        let k4 = grp("product(cyclic 2, cyclic 2)");
        let pi = crate::groups::GroupHom::from_generator_images(
            src.clone(),
            k4.clone(),
            &[(1, 1), (src.size / 4, 2)],
        )
        .unwrap();
        let a = pushforward_group_ring(&pi).unwrap();
        assert!(is_galois(&a).unwrap());
        let s = extract_special(&a).unwrap();
        assert_eq!(s.base.dims[0], 2);
        let rebuilt = special_from_cocycles(&s).unwrap();
        assert!(check_axioms(&rebuilt).unwrap().all_passed());
        assert_eq!(partition(&rebuilt), partition(&a));
    }

    #[test]
    fn bad_phi_rejected() {
        let (g, alpha) = k4_alpha();
        let a = twisted_group_ring(&g, &alpha, None).unwrap();
        let mut s = extract_special(&a).unwrap();
        s.phi[1 * 4 + 2] = s.phi[1 * 4 + 2].neg();
        match special_from_cocycles(&s) {
            Err(Error::NotSpecial(msg)) => assert!(msg.contains("(1)") || msg.contains("(2)")),
            other => panic!("expected NotSpecial, got {other:?}"),
        }
    }

    #[test]
    fn non_galois_detected() {
        let g = grp("cyclic 2");
        let mut a = group_ring(&g, None).unwrap();
        a.mult[1 * 2 + 1][0] = Cyclotomic::zero(1);
        assert!(!is_galois(&a).unwrap());
        assert!(is_galois(&group_ring(&g, None).unwrap()).unwrap());
    }

    #[test]
    fn canonical_form_separates_twists() {
        let (g, alpha) = k4_alpha();
        let plain = canonicalize_onedim(&group_ring(&g, None).unwrap()).unwrap();
        let twisted =
            canonicalize_onedim(&twisted_group_ring(&g, &alpha, None).unwrap()).unwrap();
        assert!(plain.class_rep.is_trivial());
        assert!(!twisted.class_rep.is_trivial());
        assert_ne!(plain, twisted);
        assert_eq!(plain.sigma.images, vec![0; 4]);
    }

    #[test]
    fn canonical_form_ignores_diagonal_rescaling() {
        let (g, alpha) = k4_alpha();
        let a = twisted_group_ring(&g, &alpha, None).unwrap();
        // Rescale the basis of each sector by a root of unity d(g).
        let d: Vec<Cyclotomic> = [0i64, 1, 3, 2]
            .iter()
            .map(|&k| Cyclotomic::root(4, k))
            .collect();
        let n = g.size;
        let mut b = a.clone();
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                let f = d[x].mul(&d[y]).div(&d[xy]).unwrap();
                b.mult[x * n + y][0] = a.mult[x * n + y][0].mul(&f);
                let t = g.conjugate(x, y).unwrap();
                let f = d[y].div(&d[t]).unwrap();
                b.action[x * n + y][0] = a.action[x * n + y][0].mul(&f);
            }
            let f = d[x].mul(&d[g.inv(x)]);
            b.metric[x][0] = a.metric[x][0].mul(&f);
        }
        assert!(check_axioms(&b).unwrap().all_passed());
        assert_eq!(
            canonicalize_onedim(&b).unwrap(),
            canonicalize_onedim(&a).unwrap()
        );
    }

    #[test]
    fn canonical_form_sees_super_grading() {
        let g = grp("cyclic 2");
        let sigma = homs_to(&g, &g)
            .unwrap()
            .into_iter()
            .find(|h| !h.is_trivial())
            .unwrap();
        let plain = canonicalize_onedim(&group_ring(&g, None).unwrap()).unwrap();
        let graded = canonicalize_onedim(&group_ring(&g, Some(&sigma)).unwrap()).unwrap();
        assert!(graded.class_rep.is_trivial());
        assert_eq!(graded.sigma.images, vec![0, 1]);
        assert_ne!(plain, graded);
    }

    #[test]
    fn twist_classes_of_k4_count_the_cohomology() {
        let g = grp("product(cyclic 2, cyclic 2)");
        let a = group_ring(&g, None).unwrap();
        let classes = schur_h2(&g).unwrap();
        let mut seen: Vec<CanonicalForm> = Vec::new();
        for alpha in classes.elements() {
            let t = alpha_twist(&a, &alpha).unwrap();
            let c = canonicalize_onedim(&t).unwrap();
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        assert_eq!(seen.len() as u64, classes.order());
    }
}
