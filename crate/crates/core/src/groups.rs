//! Finite groups given by multiplication table, a constructor catalog, and
//! the elementary queries every other module relies on.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group on dense element indices 0..n-1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub size: usize,
    /// table[g * size + h] = g * h
    pub table: Vec<usize>,
    pub identity: usize,
    pub inverses: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

pub type Group = Arc<FiniteGroup>;

/// Constructor specs for the fixture catalog.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Cyclic(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// Dihedral group of order 2n.
    Dihedral(usize),
    /// Symmetric group on n letters, n <= 4.
    Symmetric(usize),
    /// Quaternion group of order 8.
    Quaternion,
    Explicit {
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    /// Parse specs like `cyclic 4`, `dihedral 4`, `symmetric 3`,
    /// `quaternion`, `product(cyclic 2, cyclic 4)`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product") {
            let rest = rest.trim();
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::InvalidSpec(format!("malformed product spec: {s}")))?;
            // split at the top-level comma
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| Error::InvalidSpec(format!("product needs two factors: {s}")))?;
            return Ok(GroupSpec::Product(
                Box::new(GroupSpec::parse(&inner[..i])?),
                Box::new(GroupSpec::parse(&inner[i + 1..])?),
            ));
        }
        if s == "quaternion" {
            return Ok(GroupSpec::Quaternion);
        }
        let mut it = s.split_whitespace();
        let head = it.next().unwrap_or("");
        let arg = it
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| Error::InvalidSpec(format!("unrecognized group spec: {s}")))?;
        match head {
            "cyclic" if arg >= 1 => Ok(GroupSpec::Cyclic(arg)),
            "dihedral" if arg >= 1 => Ok(GroupSpec::Dihedral(arg)),
            "symmetric" if (1..=4).contains(&arg) => Ok(GroupSpec::Symmetric(arg)),
            _ => Err(Error::InvalidSpec(format!("unrecognized group spec: {s}"))),
        }
    }
}

/// Enumerate a group from generators by breadth-first search, so elements
/// appear in length-lex generator-word order with the identity first.
fn from_generators<E: Clone + Eq + std::hash::Hash>(
    identity: E,
    gens: &[(String, E)],
    mul: impl Fn(&E, &E) -> E,
    label: impl Fn(&E) -> String,
) -> FiniteGroup {
    let mut elems: Vec<E> = vec![identity.clone()];
    let mut index: HashMap<E, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        for (_, g) in gens {
            let next = mul(&cur, g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        head += 1;
    }
    let n = elems.len();
    let mut table = vec![0usize; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            table[i * n + j] = index[&mul(a, b)];
        }
    }
    let labels: Vec<String> = elems.iter().map(|e| label(e)).collect();
    finish_group(n, table, Some(labels)).expect("generated table is a group")
}

fn finish_group(
    n: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
) -> Result<FiniteGroup> {
    // identity
    let mut identity = None;
    'search: for e in 0..n {
        for g in 0..n {
            if table[e * n + g] != g || table[g * n + e] != g {
                continue 'search;
            }
        }
        identity = Some(e);
        break;
    }
    let identity = identity.ok_or(Error::NoIdentity)?;
    // inverses
    let mut inverses = vec![usize::MAX; n];
    for g in 0..n {
        for h in 0..n {
            if table[g * n + h] == identity && table[h * n + g] == identity {
                inverses[g] = h;
                break;
            }
        }
        if inverses[g] == usize::MAX {
            return Err(Error::NotInvertible(g));
        }
    }
    // associativity, exhaustive (desk scale: n <= 64)
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return Err(Error::NotAssociative(a, b, c));
                }
            }
        }
    }
    Ok(FiniteGroup {
        size: n,
        table,
        identity,
        inverses,
        labels,
    })
}

pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            Ok(from_generators(
                0usize,
                &[("g".into(), 1 % n)],
                |a, b| (a + b) % n,
                |e| if *e == 0 { "e".into() } else { format!("g{e}") },
            ))
        }
        GroupSpec::Product(a, b) => {
            let ga = make_group(a)?;
            let gb = make_group(b)?;
            let gens: Vec<(String, (usize, usize))> = gens_of(&ga)
                .into_iter()
                .map(|g| (String::new(), (g, gb.identity)))
                .chain(gens_of(&gb).into_iter().map(|h| (String::new(), (ga.identity, h))))
                .collect();
            let la = ga.labels.clone();
            let lb = gb.labels.clone();
            Ok(from_generators(
                (ga.identity, gb.identity),
                &gens,
                |x, y| (ga.mul(x.0, y.0), gb.mul(x.1, y.1)),
                move |e| {
                    let l0 = la
                        .as_ref()
                        .map(|l| l[e.0].clone())
                        .unwrap_or_else(|| e.0.to_string());
                    let l1 = lb
                        .as_ref()
                        .map(|l| l[e.1].clone())
                        .unwrap_or_else(|| e.1.to_string());
                    format!("({l0},{l1})")
                },
            ))
        }
        GroupSpec::Dihedral(n) => {
            // order 2n: rotations r^i and reflections r^i s, with s r s = r^-1
            let n = *n;
            type Dh = (usize, bool); // (rotation exponent, reflected?)
            let mul = move |a: &Dh, b: &Dh| -> Dh {
                // (r^i s^a)(r^j s^b): if a, conjugate: r^i s r^j = r^{i-j} s
                let (i, fa) = *a;
                let (j, fb) = *b;
                if fa {
                    (((i + n) - j) % n, !fb)
                } else {
                    ((i + j) % n, fb)
                }
            };
            Ok(from_generators(
                (0, false),
                &[("r".into(), (1 % n, false)), ("s".into(), (0, true))],
                mul,
                |e| match e {
                    (0, false) => "e".into(),
                    (i, false) => format!("r{i}"),
                    (0, true) => "s".into(),
                    (i, true) => format!("r{i}s"),
                },
            ))
        }
        GroupSpec::Symmetric(n) => {
            let n = *n;
            let id: Vec<usize> = (0..n).collect();
            let gens: Vec<(String, Vec<usize>)> = (0..n.saturating_sub(1))
                .map(|i| {
                    let mut p = id.clone();
                    p.swap(i, i + 1);
                    (format!("({},{})", i + 1, i + 2), p)
                })
                .collect();
            Ok(from_generators(
                id,
                &gens,
                // (a*b)(x) = a(b(x))
                |a, b| b.iter().map(|&x| a[x]).collect(),
                |p| {
                    p.iter()
                        .map(|x| (x + 1).to_string())
                        .collect::<Vec<_>>()
                        .join("")
                },
            ))
        }
        GroupSpec::Quaternion => {
            // units {+-1, +-i, +-j, +-k} as (sign, axis) with axis 0=1,1=i,2=j,3=k
            type Q = (bool, usize); // (negative?, axis)
            fn qmul(a: &Q, b: &Q) -> Q {
                let (sa, x) = *a;
                let (sb, y) = *b;
                let (s, z) = match (x, y) {
                    (0, y) => (false, y),
                    (x, 0) => (false, x),
                    (x, y) if x == y => (true, 0),
                    (1, 2) => (false, 3),
                    (2, 3) => (false, 1),
                    (3, 1) => (false, 2),
                    (2, 1) => (true, 3),
                    (3, 2) => (true, 1),
                    (1, 3) => (true, 2),
                    _ => unreachable!(),
                };
                (s ^ sa ^ sb, z)
            }
            Ok(from_generators(
                (false, 0),
                &[("i".into(), (false, 1)), ("j".into(), (false, 2))],
                qmul,
                |e| {
                    let name = ["1", "i", "j", "k"][e.1];
                    if e.0 {
                        format!("-{name}")
                    } else {
                        name.to_string()
                    }
                },
            ))
        }
        GroupSpec::Explicit { table, labels } => {
            let n = table.len();
            let mut flat = Vec::with_capacity(n * n);
            for row in table {
                if row.len() != n {
                    return Err(Error::InvalidSpec("table is not square".into()));
                }
                for &x in row {
                    if x >= n {
                        return Err(Error::IndexOutOfRange(x, n));
                    }
                    flat.push(x);
                }
            }
            finish_group(n, flat, labels.clone())
        }
    }
}

/// A small generating set, greedily chosen.
pub fn gens_of(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; g.size];
    span[g.identity] = true;
    let mut count = 1;
    for cand in 0..g.size {
        if span[cand] {
            continue;
        }
        gens.push(cand);
        // close span under multiplication by the new span
        let mut frontier: Vec<usize> = (0..g.size).filter(|&x| span[x]).collect();
        while let Some(x) = frontier.pop() {
            for &y in [cand].iter().chain(gens.iter()) {
                for z in [g.mul(x, y), g.mul(y, x)] {
                    if !span[z] {
                        span[z] = true;
                        count += 1;
                        frontier.push(z);
                    }
                }
            }
        }
        if count == g.size {
            break;
        }
    }
    gens
}

impl FiniteGroup {
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.size + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn check_index(&self, g: usize) -> Result<usize> {
        if g < self.size {
            Ok(g)
        } else {
            Err(Error::IndexOutOfRange(g, self.size))
        }
    }

    /// g h g^-1
    pub fn conjugate(&self, g: usize, h: usize) -> Result<usize> {
        self.check_index(g)?;
        self.check_index(h)?;
        Ok(self.mul(self.mul(g, h), self.inv(g)))
    }

    /// [g,h] = g h g^-1 h^-1
    pub fn commutator(&self, g: usize, h: usize) -> Result<usize> {
        Ok(self.mul(self.conjugate(g, h)?, self.inv(h)))
    }

    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for g in 0..self.size {
            for h in 0..self.size {
                if self.mul(g, h) == self.mul(h, g) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        (0..self.size)
            .map(|g| self.element_order(g))
            .fold(1usize, num_integer::lcm)
    }

    pub fn conjugacy_class_count(&self) -> usize {
        let mut seen = vec![false; self.size];
        let mut classes = 0;
        for g in 0..self.size {
            if seen[g] {
                continue;
            }
            classes += 1;
            for h in 0..self.size {
                seen[self.conjugate(h, g).unwrap()] = true;
            }
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|g| (0..self.size).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn label(&self, g: usize) -> String {
        self.labels
            .as_ref()
            .map(|l| l[g].clone())
            .unwrap_or_else(|| g.to_string())
    }
}

/// A homomorphism between finite groups, by its image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: Group,
    pub target: Group,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Group, target: Group, images: Vec<usize>) -> Result<GroupHom> {
        if images.len() != source.size {
            return Err(Error::Dimension("image table length".into()));
        }
        for &x in &images {
            target.check_index(x)?;
        }
        for g in 0..source.size {
            for h in 0..source.size {
                if images[source.mul(g, h)] != target.mul(images[g], images[h]) {
                    return Err(Error::NotAHomomorphism(g, h));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&x| x == self.target.identity)
    }

    /// Build a homomorphism from images of a generating set, propagating
    /// along products; fails if the assignment is inconsistent or does not
    /// extend to the whole source group.
    pub fn from_generator_images(
        source: Group,
        target: Group,
        pairs: &[(usize, usize)],
    ) -> Result<GroupHom> {
        let mut images = vec![usize::MAX; source.size];
        images[source.identity] = target.identity;
        let mut frontier = vec![source.identity];
        while let Some(x) = frontier.pop() {
            for &(g, tg) in pairs {
                source.check_index(g)?;
                target.check_index(tg)?;
                let y = source.mul(x, g);
                let img = target.mul(images[x], tg);
                if images[y] == usize::MAX {
                    images[y] = img;
                    frontier.push(y);
                } else if images[y] != img {
                    return Err(Error::NotAHomomorphism(x, g));
                }
            }
        }
        if let Some(missing) = images.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidSpec(format!(
                "generator images do not reach element {missing}"
            )));
        }
        GroupHom::new(source, target, images)
    }
}

/// The complete list of homomorphisms G -> C for cyclic C, by exhaustive
/// search over generator images.
pub fn homs_to(source: &Group, target: &Group) -> Result<Vec<GroupHom>> {
    let m = target.size;
    // target must be cyclic
    let gen = (0..m)
        .find(|&g| target.element_order(g) == m)
        .ok_or_else(|| Error::InvalidSpec("homs_to target must be cyclic".into()))?;
    let gens = gens_of(source);
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        // propagate candidate generator images across the group by BFS
        if let Some(images) = propagate(source, target, &gens, &choice, gen) {
            if let Ok(hom) = GroupHom::new(source.clone(), target.clone(), images) {
                if !out.contains(&hom) {
                    out.push(hom);
                }
            }
        }
        // next choice vector
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn propagate(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    exps: &[usize],
    t_gen: usize,
) -> Option<Vec<usize>> {
    let mut images = vec![usize::MAX; source.size];
    images[source.identity] = target.identity;
    let mut frontier = vec![source.identity];
    while let Some(x) = frontier.pop() {
        for (g, &e) in gens.iter().zip(exps) {
            let y = source.mul(x, *g);
            let mut img = images[x];
            for _ in 0..e {
                img = target.mul(img, t_gen);
            }
            if images[y] == usize::MAX {
                images[y] = img;
                frontier.push(y);
            } else if images[y] != img {
                return None;
            }
        }
    }
    if images.contains(&usize::MAX) {
        return None;
    }
    Some(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> Group {
        Arc::new(make_group(&GroupSpec::parse(s).unwrap()).unwrap())
    }

    #[test]
    fn trivial_group() {
        let g = grp("cyclic 1");
        assert_eq!(g.size, 1);
        assert_eq!(g.identity, 0);
    }

    #[test]
    fn klein_four_from_product() {
        let g = grp("product(cyclic 2, cyclic 2)");
        assert_eq!(g.size, 4);
        assert_eq!(g.exponent(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_four_has_two_order_four_elements() {
        let g = grp("dihedral 4");
        assert_eq!(g.size, 8);
        let count = (0..8).filter(|&x| g.element_order(x) == 4).count();
        assert_eq!(count, 2);
    }

    #[test]
    fn quaternion_orders() {
        let g = grp("quaternion");
        assert_eq!(g.size, 8);
        assert_eq!((0..8).filter(|&x| g.element_order(x) == 4).count(), 6);
        assert_eq!((0..8).filter(|&x| g.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn commuting_pair_counts() {
        assert_eq!(grp("product(cyclic 2, cyclic 2)").commuting_pairs().len(), 16);
        // S3: sum of centralizer orders 6+2+2+2+3+3 = 18
        assert_eq!(grp("symmetric 3").commuting_pairs().len(), 18);
    }

    #[test]
    fn commuting_pairs_equals_size_times_classes() {
        for s in [
            "cyclic 6",
            "symmetric 3",
            "symmetric 4",
            "dihedral 4",
            "quaternion",
            "product(cyclic 2, cyclic 4)",
        ] {
            let g = grp(s);
            assert_eq!(
                g.commuting_pairs().len(),
                g.size * g.conjugacy_class_count(),
                "failed for {s}"
            );
        }
    }

    #[test]
    fn s3_conjugation() {
        let g = grp("symmetric 3");
        // BFS order from adjacent transpositions: index 1 = (12), index 2 = (23)
        let t12 = 1;
        let t23 = 2;
        // (13) = (12)(23)(12)
        let t13 = g.mul(g.mul(t12, t23), t12);
        assert_eq!(g.element_order(t13), 2);
        // (12)(13)(12)^-1 = (23)
        assert_eq!(g.conjugate(t12, t13).unwrap(), t23);
    }

    #[test]
    fn group_axiom_invariants() {
        for s in ["cyclic 5", "dihedral 3", "quaternion", "symmetric 3"] {
            let g = grp(s);
            for x in 0..g.size {
                assert_eq!(g.inv(g.inv(x)), x);
                assert_eq!(g.commutator(x, x).unwrap(), g.identity);
                let mut image: Vec<usize> =
                    (0..g.size).map(|h| g.conjugate(x, h).unwrap()).collect();
                image.sort_unstable();
                assert_eq!(image, (0..g.size).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn hom_counts() {
        let z2 = grp("cyclic 2");
        assert_eq!(homs_to(&grp("cyclic 3"), &z2).unwrap().len(), 1);
        assert_eq!(
            homs_to(&grp("product(cyclic 2, cyclic 2)"), &z2).unwrap().len(),
            4
        );
        assert_eq!(homs_to(&grp("symmetric 3"), &z2).unwrap().len(), 2);
    }

    #[test]
    fn explicit_table_rejects_broken_input() {
        // non-associative magma on 3 elements
        let spec = GroupSpec::Explicit {
            table: vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 0]],
            labels: None,
        };
        assert!(make_group(&spec).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = grp("dihedral 3");
        let s = serde_json::to_string(&*g).unwrap();
        let h: FiniteGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(*g, h);
    }
}
