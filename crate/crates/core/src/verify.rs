//! Independent verification: brute-force cohomology oracles, random
//! mutation testing of the axiom checker, and the acceptance runner that
//! exercises the whole library against its frozen expectations.

use std::collections::HashSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::catalog::{fixture_groups, pushforward_fixture};
use crate::cohomology::{h2_mod_m, is_cocycle, schur_h2, Cochain2};
use crate::error::{Error, Result};
use crate::extensions::{central_extension, verify_lift};
use crate::gfa::{
    alpha_twist, canonicalize_onedim, check_axioms, check_module_structures, group_ring,
    partition, super_regrade, tensor, twist, twisted_group_ring, validate_twist, CanonicalForm,
    GFrobeniusAlgebra, TwistData,
};
use crate::groups::{homs_to, make_group, Group, GroupSpec};
use crate::scalars::Cyclotomic;
use std::sync::Arc;

type Gfa = GFrobeniusAlgebra;

/// Order of H^2(G, Z/m) by exhaustive enumeration of normalized cochains:
/// count cocycles, count coboundaries, divide. Only feasible for tiny
/// search spaces; the guard rejects anything beyond about a million
/// candidates.
pub fn h2_order_by_enumeration(group: &Group, m: u64) -> Result<u64> {
    let n = group.size;
    let e = group.identity;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .filter(|&(g, h)| g != e && h != e)
        .collect();
    let total = (m as u128).checked_pow(cells.len() as u32);
    if total.map_or(true, |t| t > 2_000_000) {
        return Err(Error::InvalidSpec(
            "enumeration space too large for the brute-force oracle".into(),
        ));
    }
    let mut counter = vec![0u64; cells.len()];
    let mut cocycles = 0u64;
    loop {
        let mut values = vec![0u64; n * n];
        for (&(g, h), &v) in cells.iter().zip(&counter) {
            values[g * n + h] = v;
        }
        let alpha = Cochain2::new(group.clone(), m, values)?;
        if is_cocycle(&alpha) {
            cocycles += 1;
        }
        if !increment(&mut counter, m) {
            break;
        }
    }
    Ok(cocycles / coboundary_count(group, m)?)
}

fn increment(counter: &mut [u64], m: u64) -> bool {
    for c in counter.iter_mut() {
        *c += 1;
        if *c < m {
            return true;
        }
        *c = 0;
    }
    false
}

fn coboundary_count(group: &Group, m: u64) -> Result<u64> {
    Ok(coboundary_set(group, m)?.len() as u64)
}

/// All coboundaries d(beta) over Z/m, as value vectors on non-identity
/// pairs.
fn coboundary_set(group: &Group, m: u64) -> Result<HashSet<Vec<u64>>> {
    let n = group.size;
    let e = group.identity;
    let elems: Vec<usize> = (0..n).filter(|&g| g != e).collect();
    let total = (m as u128).checked_pow(elems.len() as u32);
    if total.map_or(true, |t| t > 2_000_000) {
        return Err(Error::InvalidSpec(
            "enumeration space too large for the brute-force oracle".into(),
        ));
    }
    let mut counter = vec![0u64; elems.len()];
    let mut out = HashSet::new();
    loop {
        let mut beta = vec![0u64; n];
        for (&g, &v) in elems.iter().zip(&counter) {
            beta[g] = v;
        }
        let mut vals = Vec::with_capacity((n - 1) * (n - 1));
        for &g in &elems {
            for &h in &elems {
                vals.push((beta[g] + beta[h] + m - beta[group.mul(g, h)] % m) % m);
            }
        }
        out.insert(vals);
        if !increment(&mut counter, m) {
            break;
        }
    }
    Ok(out)
}

/// Order of the image of H^2(G, mu_m) in H^2(G, mu_{m^2}) (m = |G|) by
/// exhaustive enumeration: |Z_m| / #{cocycles mod m whose scaling is a
/// coboundary mod m^2}. Only for |G| <= 4.
pub fn schur_order_by_enumeration(group: &Group) -> Result<u64> {
    let n = group.size;
    if n > 4 {
        return Err(Error::InvalidSpec(
            "the schur enumeration oracle handles groups of order at most 4".into(),
        ));
    }
    if n == 1 {
        return Ok(1);
    }
    let m = n as u64;
    let m2 = m * m;
    let e = group.identity;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .filter(|&(g, h)| g != e && h != e)
        .collect();
    let boundaries = coboundary_set(group, m2)?;
    let mut counter = vec![0u64; cells.len()];
    let mut cocycles = 0u64;
    let mut kernel = 0u64;
    loop {
        let mut values = vec![0u64; n * n];
        for (&(g, h), &v) in cells.iter().zip(&counter) {
            values[g * n + h] = v;
        }
        let alpha = Cochain2::new(group.clone(), m, values)?;
        if is_cocycle(&alpha) {
            cocycles += 1;
            let scaled: Vec<u64> = counter.iter().map(|&v| (v * m) % m2).collect();
            if boundaries.contains(&scaled) {
                kernel += 1;
            }
        }
        if !increment(&mut counter, m) {
            break;
        }
    }
    Ok(cocycles / kernel)
}

/// Summary of one mutation-testing run.
#[derive(Clone, Debug)]
pub struct MutationSummary {
    pub total: usize,
    pub detected: usize,
    /// Mutants that pass every axiom and module check: the mutated entry
    /// was not axiom-relevant and the result is a genuinely valid algebra.
    pub benign: usize,
}

fn all_checks_pass(a: &Gfa) -> bool {
    let ax = match check_axioms(a) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let md = match check_module_structures(a) {
        Ok(r) => r,
        Err(_) => return false,
    };
    ax.all_passed() && md.all_passed()
}

/// Randomly corrupt one structure tensor entry at a time and count how
/// many corruptions the checkers catch.
pub fn mutation_test(a: &Gfa, rounds: usize, seed: u64) -> MutationSummary {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = a.n();
    let mut summary = MutationSummary {
        total: 0,
        detected: 0,
        benign: 0,
    };
    let one = Cyclotomic::one();
    for _ in 0..rounds {
        let mut mutant = a.clone();
        loop {
            match rng.gen_range(0..4) {
                0 => {
                    let s = rng.gen_range(0..n * n);
                    if mutant.mult[s].is_empty() {
                        continue;
                    }
                    let i = rng.gen_range(0..mutant.mult[s].len());
                    mutant.mult[s][i] = mutant.mult[s][i].add(&one);
                }
                1 => {
                    let s = rng.gen_range(0..n * n);
                    if mutant.action[s].is_empty() {
                        continue;
                    }
                    let i = rng.gen_range(0..mutant.action[s].len());
                    mutant.action[s][i] = mutant.action[s][i].add(&one);
                }
                2 => {
                    let s = rng.gen_range(0..n);
                    if mutant.metric[s].is_empty() {
                        continue;
                    }
                    let i = rng.gen_range(0..mutant.metric[s].len());
                    mutant.metric[s][i] = mutant.metric[s][i].add(&one);
                }
                _ => {
                    let s = rng.gen_range(0..n);
                    mutant.chi[s] = mutant.chi[s].add(&one);
                }
            }
            break;
        }
        summary.total += 1;
        if all_checks_pass(&mutant) {
            summary.benign += 1;
        } else {
            summary.detected += 1;
        }
    }
    summary
}

/// One acceptance criterion outcome.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &str, passed: bool, detail: String) -> Outcome {
    Outcome {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn z2() -> Group {
    Arc::new(make_group(&GroupSpec::Cyclic(2)).unwrap())
}

fn criterion_axiom_gate() -> Result<Outcome> {
    let start = Instant::now();
    let z2 = z2();
    let mut algebras = 0usize;
    let mut failures = Vec::new();
    for f in fixture_groups() {
        if f.group.size > 16 {
            continue;
        }
        let classes = schur_h2(&f.group)?;
        for alpha in classes.elements() {
            for sigma in homs_to(&f.group, &z2)? {
                let a = twisted_group_ring(&f.group, &alpha, Some(&sigma))?;
                algebras += 1;
                let r = check_axioms(&a)?;
                if !r.all_passed() {
                    failures.push(format!("{}: {:?}", f.name, r.failures().next().map(|c| &c.name)));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed.as_secs() < 60;
    Ok(outcome(
        "twisted group rings satisfy the axioms",
        failures.is_empty() && in_time,
        format!(
            "{algebras} algebras over {} groups in {:.2?}{}",
            fixture_groups().len(),
            elapsed,
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    ))
}

fn criterion_cohomology_oracle() -> Result<Outcome> {
    let mut checks = Vec::new();
    let mut ok = true;
    let small: Vec<(&str, u64, u64)> = vec![
        ("cyclic 2", 2, 2),
        ("cyclic 3", 2, 1),
        ("cyclic 3", 3, 3),
        ("cyclic 4", 2, 2),
        ("product(cyclic 2, cyclic 2)", 2, 8),
    ];
    for (name, m, expect) in small {
        let g = Arc::new(make_group(&GroupSpec::parse(name)?)?);
        let fast = h2_mod_m(&g, m)?.order();
        let slow = h2_order_by_enumeration(&g, m)?;
        let agree = fast == slow && fast == expect;
        ok &= agree;
        checks.push(format!("H2({name}, Z/{m}) = {fast} (oracle {slow}, expected {expect})"));
    }
    let schur_small: Vec<(&str, u64)> = vec![
        ("cyclic 2", 1),
        ("cyclic 3", 1),
        ("cyclic 4", 1),
        ("product(cyclic 2, cyclic 2)", 2),
    ];
    for (name, expect) in schur_small {
        let g = Arc::new(make_group(&GroupSpec::parse(name)?)?);
        let fast = schur_h2(&g)?.order();
        let slow = schur_order_by_enumeration(&g)?;
        let agree = fast == slow && fast == expect;
        ok &= agree;
        checks.push(format!("schur({name}) = {fast} (oracle {slow}, expected {expect})"));
    }
    Ok(outcome(
        "cohomology orders match exhaustive enumeration",
        ok,
        checks.join("; "),
    ))
}

fn criterion_twist_validation() -> Result<Outcome> {
    let mut validated = 0usize;
    let mut ok = true;
    let mut details = Vec::new();
    for f in fixture_groups() {
        let classes = schur_h2(&f.group)?;
        let elements = classes.elements();
        let mut algebras = vec![group_ring(&f.group, None)?];
        for beta in &elements {
            if !beta.is_trivial() {
                algebras.push(twisted_group_ring(&f.group, beta, None)?);
            }
        }
        for a in &algebras {
            for alpha in &elements {
                let t = TwistData::universal(alpha)?;
                let r = validate_twist(a, &t)?;
                validated += 1;
                if !r.all_passed() {
                    ok = false;
                    details.push(format!("{}: {}", f.name, r));
                }
            }
        }
        // Distinct canonical forms of the twists count the cohomology.
        let mut seen: Vec<CanonicalForm> = Vec::new();
        let base = group_ring(&f.group, None)?;
        for alpha in &elements {
            let c = canonicalize_onedim(&alpha_twist(&base, alpha)?)?;
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        if seen.len() as u64 != classes.order() {
            ok = false;
            details.push(format!(
                "{}: {} classes from {} twists",
                f.name,
                seen.len(),
                elements.len()
            ));
        }
    }
    Ok(outcome(
        "universal twists validate and classes count the cohomology",
        ok,
        format!(
            "{validated} twist validations across the catalog{}",
            if details.is_empty() {
                String::new()
            } else {
                format!("; {}", details.join("; "))
            }
        ),
    ))
}

fn criterion_twist_equals_tensor() -> Result<Outcome> {
    let k4 = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)")?)?);
    let classes = schur_h2(&k4)?;
    let elements = classes.elements();
    let nontrivial = elements
        .iter()
        .find(|a| !a.is_trivial())
        .expect("K4 carries a nontrivial class")
        .clone();
    let algebras = vec![
        group_ring(&k4, None)?,
        twisted_group_ring(&k4, &nontrivial, None)?,
        pushforward_fixture()?,
    ];
    let mut compared = 0usize;
    let mut ok = true;
    for a in &algebras {
        for alpha in &elements {
            let via_tensor = alpha_twist(a, alpha)?;
            let via_twist = twist(a, &TwistData::universal(alpha)?)?;
            compared += 1;
            ok &= via_tensor == via_twist;
        }
    }
    Ok(outcome(
        "alpha-twist equals the validated twist",
        ok,
        format!("{compared} comparisons including a two-dimensional example"),
    ))
}

fn criterion_partition() -> Result<Outcome> {
    let k4 = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)")?)?);
    let s3 = Arc::new(make_group(&GroupSpec::parse("symmetric 3")?)?);
    let a = group_ring(&k4, None)?;
    let mut ok = true;
    let mut notes = Vec::new();
    for alpha in schur_h2(&k4)?.elements() {
        let eps = crate::gfa::epsilon(&alpha)?;
        let before = partition(&a);
        let after = partition(&alpha_twist(&a, &alpha)?);
        for &(g, h, ref z) in &after.entries {
            let expect = eps.scalar(g, h).mul(before.get(g, h).unwrap());
            ok &= *z == expect;
        }
    }
    let totals = [
        (partition(&a).total, 16i64, "Z(k[K4])"),
        (
            {
                let alpha = schur_h2(&k4)?
                    .elements()
                    .into_iter()
                    .find(|c| !c.is_trivial())
                    .unwrap();
                partition(&twisted_group_ring(&k4, &alpha, None)?).total
            },
            4,
            "Z(twisted K4)",
        ),
        (partition(&group_ring(&s3, None)?).total, 18, "Z(k[S3])"),
    ];
    for (got, want, label) in totals {
        let pass = got == Cyclotomic::from_integer(want);
        ok &= pass;
        notes.push(format!("{label} = {got}"));
    }
    Ok(outcome(
        "partition tables obey the twist phase law",
        ok,
        notes.join("; "),
    ))
}

fn criterion_super_regrade() -> Result<Outcome> {
    let z2 = z2();
    let mut ok = true;
    let mut notes = Vec::new();
    for f in fixture_groups() {
        let a = group_ring(&f.group, None)?;
        let homs = homs_to(&f.group, &z2)?;
        let mut seen: Vec<Gfa> = Vec::new();
        for sigma in &homs {
            let r = super_regrade(&a, sigma)?;
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        if seen.len() != homs.len() {
            ok = false;
            notes.push(format!("{}: {} of {}", f.name, seen.len(), homs.len()));
        }
    }
    // Combined twist: k^{alpha,sigma} = k^alpha (x) k^sigma.
    let k4 = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)")?)?);
    for alpha in schur_h2(&k4)?.elements() {
        for sigma in homs_to(&k4, &z2)? {
            let combined = twisted_group_ring(&k4, &alpha, Some(&sigma))?;
            let split = tensor(
                &twisted_group_ring(&k4, &alpha, None)?,
                &group_ring(&k4, Some(&sigma))?,
            )?;
            ok &= combined == split;
        }
    }
    Ok(outcome(
        "super regradings are classified by parity characters",
        ok,
        if notes.is_empty() {
            "regrading counts match Hom(G, Z/2) on every fixture".into()
        } else {
            notes.join("; ")
        },
    ))
}

fn criterion_lift_grid() -> Result<Outcome> {
    let start = Instant::now();
    let mut verified = 0usize;
    let mut ok = true;
    let mut notes = Vec::new();
    for gname in ["product(cyclic 2, cyclic 2)", "symmetric 3", "dihedral 4"] {
        let g = Arc::new(make_group(&GroupSpec::parse(gname)?)?);
        let a = group_ring(&g, None)?;
        for m in [2usize, 4] {
            let classes = h2_mod_m(&g, m as u64)?;
            for alpha_prime in classes.elements() {
                let ext = central_extension(&alpha_prime)?;
                for chi in homs_to(&ext.kernel, &ext.kernel)? {
                    let r = verify_lift(&a, &ext, &chi)?;
                    verified += 1;
                    if !r.all_passed() {
                        ok = false;
                        notes.push(format!("{gname} by Z/{m}: {r}"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed.as_secs() < 120;
    Ok(outcome(
        "lifting theorem verified on the extension grid",
        ok && in_time,
        format!(
            "{verified} lifts verified in {elapsed:.2?}{}",
            if notes.is_empty() {
                String::new()
            } else {
                format!("; {}", notes.join("; "))
            }
        ),
    ))
}

fn criterion_mutations() -> Result<Outcome> {
    let k4 = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)")?)?);
    let nontrivial = schur_h2(&k4)?
        .elements()
        .into_iter()
        .find(|c| !c.is_trivial())
        .unwrap();
    let mut targets: Vec<(String, Gfa)> = fixture_groups()
        .into_iter()
        .map(|f| Ok((f.name.to_string(), group_ring(&f.group, None)?)))
        .collect::<Result<_>>()?;
    targets.push(("twisted K4".into(), twisted_group_ring(&k4, &nontrivial, None)?));
    targets.push(("pushforward over K4".into(), pushforward_fixture()?));
    let mut total = 0usize;
    let mut detected = 0usize;
    let mut benign = 0usize;
    for (i, (_, a)) in targets.iter().enumerate() {
        let s = mutation_test(a, 20, 0xC0FF_EE00 + i as u64);
        total += s.total;
        detected += s.detected;
        benign += s.benign;
    }
    let ok = total == detected + benign && detected > 0 && total >= 20 * targets.len();
    Ok(outcome(
        "random structure mutations are detected",
        ok,
        format!("{total} mutants: {detected} detected, {benign} benign (not axiom-relevant)"),
    ))
}

/// The acceptance criteria as independent runnable units, in report order.
pub fn acceptance_criteria() -> Vec<(&'static str, fn() -> Result<Outcome>)> {
    vec![
        ("axioms", criterion_axiom_gate),
        ("cohomology-oracle", criterion_cohomology_oracle),
        ("twist-validation", criterion_twist_validation),
        ("twist-tensor", criterion_twist_equals_tensor),
        ("partition", criterion_partition),
        ("super-regrade", criterion_super_regrade),
        ("lift-grid", criterion_lift_grid),
        ("mutations", criterion_mutations),
    ]
}

/// Run every acceptance criterion and collect the outcomes.
pub fn run_acceptance() -> Result<Vec<Outcome>> {
    acceptance_criteria().into_iter().map(|(_, f)| f()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_oracle_on_cyclic_two() {
        let g = z2();
        assert_eq!(h2_order_by_enumeration(&g, 2).unwrap(), 2);
        assert_eq!(schur_order_by_enumeration(&g).unwrap(), 1);
    }

    #[test]
    fn oracle_rejects_large_spaces() {
        let g = Arc::new(make_group(&GroupSpec::parse("quaternion").unwrap()).unwrap());
        assert!(h2_order_by_enumeration(&g, 4).is_err());
        assert!(schur_order_by_enumeration(&g).is_err());
    }

    #[test]
    fn mutations_on_the_klein_group_ring_are_caught() {
        let g = Arc::new(
            make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)").unwrap()).unwrap(),
        );
        let a = group_ring(&g, None).unwrap();
        let s = mutation_test(&a, 25, 7);
        assert_eq!(s.total, 25);
        assert_eq!(s.detected + s.benign, 25);
        assert!(s.detected > 0);
    }
}
