//! Surgery quotients of knot groups, abelianization through the Smith normal
//! form, and homomorphism counts into small finite groups.
//!
//! Hom counts are isomorphism invariants, so two presentations with
//! different counts into some target present non-isomorphic groups. Equal
//! counts prove nothing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fox::{FreeWord, GroupPresentation};

/// Default enumeration budget: `|G|^generators` may not exceed this.
pub const DEFAULT_HOM_BUDGET: u128 = 3600;

/// Adds the relator `μ·λ^p` for the given component.
pub fn surgery_quotient(
    g: &GroupPresentation,
    component: usize,
    p: i64,
) -> Result<GroupPresentation> {
    let per = g
        .peripheral
        .get(component)
        .and_then(Option::as_ref)
        .ok_or(Error::MissingPeripheral(component))?;
    let mut out = g.clone();
    out.relators.push(per.meridian.mul(&per.longitude.pow(p)));
    Ok(out)
}

/// Slope 0/1 surgery is outside the 1/p family studied here.
pub fn is_degenerate_slope(p: i64) -> bool {
    p == 0
}

/// Elementary divisors of the relation matrix: the nontrivial ones in
/// increasing order, then one `0` per free factor of H₁.
pub fn abelianization_invariants(g: &GroupPresentation) -> Result<Vec<u64>> {
    let n = g.num_generators;
    let mut m: Vec<Vec<BigInt>> = g
        .relators
        .iter()
        .map(|r| r.exponent_sums(n).into_iter().map(BigInt::from).collect())
        .collect();
    let diag = smith_diagonal(&mut m, n);
    let mut out = Vec::new();
    for d in &diag {
        if d != &BigInt::from(1) {
            let v = d.to_u64().ok_or_else(|| {
                Error::InvalidParameter(format!("elementary divisor {d} too large"))
            })?;
            out.push(v);
        }
    }
    out.extend(std::iter::repeat_n(0, n - diag.len()));
    Ok(out)
}

/// Nonzero diagonal of the Smith normal form, each dividing the next.
#[allow(clippy::needless_range_loop)]
fn smith_diagonal(m: &mut [Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !m[r][c].is_zero())
            .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()));
        let Some((pr, pc)) = pivot else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = m[r][t].div_floor(&m[t][t]);
            if !q.is_zero() {
                for c in t..cols {
                    let v = &q * &m[t][c];
                    m[r][c] -= v;
                }
            }
            clean &= m[r][t].is_zero();
        }
        for c in t + 1..cols {
            let q = m[t][c].div_floor(&m[t][t]);
            if !q.is_zero() {
                for r in t..rows {
                    let v = &q * &m[r][t];
                    m[r][c] -= v;
                }
            }
            clean &= m[t][c].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest; otherwise fold the offending row in
        let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !m[r][c].is_multiple_of(&m[t][t])));
        if let Some(r) = bad {
            for c in t..cols {
                let v = m[r][c].clone();
                m[t][c] += v;
            }
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroupTable {
    pub name: String,
    pub labels: Vec<String>,
    /// `table[a][b]` is the product `a·b`.
    pub table: Vec<Vec<u16>>,
    #[serde(skip)]
    inverse: Vec<u16>,
    #[serde(skip)]
    identity: u16,
}

impl FiniteGroupTable {
    /// Validates the table: closure, a two-sided identity and inverses are
    /// checked exhaustively, associativity on a deterministic sample.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<u16>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |m: &str| Error::InvalidGroup(format!("{name}: {m}"));
        if n == 0 || n > u16::MAX as usize || labels.len() != n {
            return Err(bad("order and label count must agree and be positive"));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x as usize >= n))
        {
            return Err(bad("table is not closed"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] as usize == a && table[a][e] as usize == a))
            .ok_or_else(|| bad("no identity"))? as u16;
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad("missing inverse"))?;
            inverse[a] = inv as u16;
        }
        let step = (n / 12).max(1);
        for a in (0..n).step_by(step) {
            for b in (0..n).step_by(step) {
                for c in 0..n {
                    let ab = table[a][b] as usize;
                    let bc = table[b][c] as usize;
                    if table[ab][c] != table[a][bc] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            name,
            labels,
            table,
            inverse,
            identity,
        })
    }

    /// Group generated by closing a list of permutations (with the identity)
    /// under composition `(a·b)(x) = a(b(x))`. Elements are listed in
    /// lexicographic order of their images.
    pub fn from_permutations(name: &str, elements: Vec<Vec<usize>>) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let index = |p: &Vec<usize>| elements.binary_search(p).ok();
        let mut table = Vec::with_capacity(elements.len());
        for a in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in &elements {
                let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                let k =
                    index(&ab).ok_or_else(|| Error::InvalidGroup(format!("{name}: not closed")))?;
                row.push(k as u16);
            }
            table.push(row);
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Self::new(name, labels, table)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::from_permutations(&format!("S{n}"), permutations(n))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        let even = permutations(n).into_iter().filter(|p| is_even(p)).collect();
        Self::from_permutations(&format!("A{n}"), even)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect())
            .collect();
        let labels = (0..n).map(|a| a.to_string()).collect();
        Self::new(format!("Z{n}"), labels, table)
    }

    /// `S<n>`, `A<n>` or `Z<n>`.
    pub fn by_name(name: &str) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("unknown target group `{name}`")))
        };
        match name.split_at(name.len().min(1)) {
            ("S", n) => Self::symmetric(parse(n)?),
            ("A", n) => Self::alternating(parse(n)?),
            ("Z", n) => Self::cyclic(parse(n)?),
            _ => Err(Error::Parse(format!("unknown target group `{name}`"))),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize][b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    pub fn commute(&self, a: u16, b: u16) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn eval(&self, w: &FreeWord, images: &[u16]) -> u16 {
        w.letters().iter().fold(self.identity, |acc, l| {
            let x = images[l.gen];
            self.mul(acc, if l.exp > 0 { x } else { self.inv(x) })
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCountReport {
    pub presentation: String,
    pub target: String,
    pub total: u64,
    /// Homomorphisms whose image is a nonabelian subgroup.
    pub nonabelian: u64,
}

struct Search<'a> {
    target: &'a FiniteGroupTable,
    relators: &'a [FreeWord],
    /// `checks[d]`: relators whose highest generator is `d`.
    checks: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&self, images: &mut Vec<u16>, depth: usize, n: usize) -> (u64, u64) {
        if depth == n {
            let abelian =
                (0..n).all(|i| (i + 1..n).all(|j| self.target.commute(images[i], images[j])));
            return (1, u64::from(!abelian));
        }
        let mut acc = (0, 0);
        for x in 0..self.target.order() as u16 {
            images.push(x);
            if self.checks[depth]
                .iter()
                .all(|&r| self.target.eval(&self.relators[r], images) == self.target.identity())
            {
                let (t, na) = self.run(images, depth + 1, n);
                acc.0 += t;
                acc.1 += na;
            }
            images.pop();
        }
        acc
    }
}

/// Counts homomorphisms by backtracking over generator images, checking
/// each relator as soon as all its generators are assigned. The search is
/// split over the image of the first generator.
pub fn hom_count(
    g: &GroupPresentation,
    id: &str,
    target: &FiniteGroupTable,
    budget: u128,
) -> Result<HomCountReport> {
    let n = g.num_generators;
    let needed = (target.order() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut checks = vec![Vec::new(); n];
    let mut free_relators_ok = true;
    for (i, r) in g.relators.iter().enumerate() {
        match r.generator_bound() {
            0 => free_relators_ok &= r.is_empty(),
            b => checks[b - 1].push(i),
        }
    }
    let search = Search {
        target,
        relators: &g.relators,
        checks,
    };
    let (total, nonabelian) = if !free_relators_ok {
        (0, 0)
    } else if n == 0 {
        (1, 0)
    } else {
        (0..target.order() as u16)
            .into_par_iter()
            .map(|x| {
                let mut images = vec![x];
                if search.checks[0]
                    .iter()
                    .all(|&r| target.eval(&g.relators[r], &images) == target.identity())
                {
                    search.run(&mut images, 1, n)
                } else {
                    (0, 0)
                }
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    Ok(HomCountReport {
        presentation: id.to_string(),
        target: target.name.clone(),
        total,
        nonabelian,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberSignature {
    pub id: String,
    pub counts: Vec<u64>,
}

/// Family members grouped by their hom-count vectors. Members in different
/// blocks present non-isomorphic groups; members sharing a block are merely
/// not separated by these targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPartition {
    pub targets: Vec<String>,
    pub members: Vec<MemberSignature>,
    /// Member ids per block, blocks in order of first appearance.
    pub blocks: Vec<Vec<String>>,
}

pub fn distinguish_family(
    presentations: &[(String, GroupPresentation)],
    targets: &[FiniteGroupTable],
    budget: u128,
) -> Result<FamilyPartition> {
    let mut members = Vec::with_capacity(presentations.len());
    for (id, g) in presentations {
        let counts = targets
            .iter()
            .map(|t| hom_count(g, id, t, budget).map(|r| r.total))
            .collect::<Result<Vec<_>>>()?;
        members.push(MemberSignature {
            id: id.clone(),
            counts,
        });
    }
    let mut keys: Vec<&Vec<u64>> = Vec::new();
    let mut blocks: Vec<Vec<String>> = Vec::new();
    for m in &members {
        match keys.iter().position(|k| **k == m.counts) {
            Some(i) => blocks[i].push(m.id.clone()),
            None => {
                keys.push(&m.counts);
                blocks.push(vec![m.id.clone()]);
            }
        }
    }
    let targets = targets.iter().map(|t| t.name.clone()).collect();
    Ok(FamilyPartition {
        targets,
        members,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{trefoil_braid, BraidWord};
    use crate::fox::closure_presentation;

    fn word(s: &[i64]) -> FreeWord {
        FreeWord::from_signed(s).unwrap()
    }

    #[test]
    fn group_tables() {
        assert_eq!(FiniteGroupTable::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroupTable::symmetric(4).unwrap().order(), 24);
        let a5 = FiniteGroupTable::alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.labels[a5.identity() as usize], "()");
        assert_eq!(FiniteGroupTable::by_name("Z4").unwrap().order(), 4);
        assert!(FiniteGroupTable::by_name("Q8").is_err());
        let broken = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroupTable::new("bad", vec!["e".into(), "a".into()], broken).is_err());
    }

    #[test]
    fn smith_form_examples() {
        let cyclic2 = GroupPresentation::new(1, vec![word(&[1, 1])]).unwrap();
        assert_eq!(abelianization_invariants(&cyclic2).unwrap(), vec![2]);
        let knot = closure_presentation(&trefoil_braid());
        assert_eq!(abelianization_invariants(&knot).unwrap(), vec![0]);
        // <x, y | x^2 y^4, x^4 y^2> has H1 = Z2 + Z6
        let g = GroupPresentation::new(
            2,
            vec![word(&[1, 1, 2, 2, 2, 2]), word(&[1, 1, 1, 1, 2, 2])],
        )
        .unwrap();
        assert_eq!(abelianization_invariants(&g).unwrap(), vec![2, 6]);
        let free = GroupPresentation::new(2, vec![]).unwrap();
        assert_eq!(abelianization_invariants(&free).unwrap(), vec![0, 0]);
    }

    #[test]
    fn surgery_on_unknot_and_trefoil() {
        let unknot = closure_presentation(&BraidWord::trivial(1).unwrap());
        let q = surgery_quotient(&unknot, 0, 3).unwrap();
        assert_eq!(q.relators, vec![word(&[1])]);
        assert!(abelianization_invariants(&q).unwrap().is_empty());
        let tref = closure_presentation(&trefoil_braid());
        for p in 1..=6 {
            let q = surgery_quotient(&tref, 0, p).unwrap();
            assert!(abelianization_invariants(&q).unwrap().is_empty(), "p = {p}");
        }
        let g = GroupPresentation::new(1, vec![]).unwrap();
        assert_eq!(surgery_quotient(&g, 0, 1), Err(Error::MissingPeripheral(0)));
        assert!(is_degenerate_slope(0));
    }

    #[test]
    fn trefoil_hom_counts() {
        let tref = closure_presentation(&trefoil_braid());
        let s3 = FiniteGroupTable::symmetric(3).unwrap();
        let r = hom_count(&tref, "trefoil", &s3, DEFAULT_HOM_BUDGET).unwrap();
        assert_eq!((r.total, r.nonabelian), (12, 6));
        let trivial = GroupPresentation::new(0, vec![]).unwrap();
        assert_eq!(
            hom_count(&trivial, "1", &s3, DEFAULT_HOM_BUDGET)
                .unwrap()
                .total,
            1
        );
        let s4 = FiniteGroupTable::symmetric(4).unwrap();
        let three = GroupPresentation::new(3, vec![]).unwrap();
        assert!(matches!(
            hom_count(&three, "F3", &s4, DEFAULT_HOM_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn partition_blocks() {
        let z2 = GroupPresentation::new(1, vec![word(&[1, 1])]).unwrap();
        let z3 = GroupPresentation::new(1, vec![word(&[1, 1, 1])]).unwrap();
        let fam = vec![
            ("a".to_string(), z2.clone()),
            ("b".to_string(), z3),
            ("c".to_string(), z2),
        ];
        let part = distinguish_family(
            &fam,
            &[FiniteGroupTable::symmetric(3).unwrap()],
            DEFAULT_HOM_BUDGET,
        )
        .unwrap();
        assert_eq!(
            part.blocks,
            vec![
                vec!["a".to_string(), "c".to_string()],
                vec!["b".to_string()]
            ]
        );
        assert_eq!(part.members[0].counts, vec![4]);
        assert_eq!(part.members[1].counts, vec![3]);
    }
}
