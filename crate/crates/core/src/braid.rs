//! Braid words, closure combinatorics and the braid models of each curve family.
//!
//! Letters are signed 1-based Artin generator indices: `2` is σ₂, `-1` is σ₁⁻¹.
//! Strands are 0-based internally. A component of the closure is labeled by the
//! smallest strand in its permutation cycle, so component 0 always contains
//! strand 0.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::EmptyClosure);
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidParameter(format!(
                    "generator {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn trivial(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// The formal inverse word: reversed, each letter inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Arity {
                expected: self.strands,
                found: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn pow(&self, n: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(n),
        }
    }

    /// Re-embeds the word on `strands` strands with every index moved up by
    /// `offset` (so σ₁ becomes σ_{1+offset}).
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Parses `strands=k; 1 2 -1`. Clauses are separated by `;` or newlines;
    /// the `strands=` header may appear anywhere, letters are concatenated in
    /// order. Without a header the strand count is one more than the largest
    /// generator index.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let mut strands: Option<usize> = None;
        let mut letters = Vec::new();
        for clause in text.split([';', '\n']) {
            let clause = clause.trim();
            if clause.is_empty() || clause.starts_with('#') {
                continue;
            }
            if let Some(rest) = clause.strip_prefix("strands") {
                let v = rest.trim_start().strip_prefix('=').ok_or_else(|| {
                    Error::Parse(format!("expected `strands=k`, found `{clause}`"))
                })?;
                let k: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad strand count `{}`", v.trim())))?;
                if strands.replace(k).is_some() {
                    return Err(Error::Parse("duplicate `strands=` header".into()));
                }
                continue;
            }
            for tok in clause.split_whitespace() {
                let l: i32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad braid letter `{tok}`")))?;
                if l == 0 {
                    return Err(Error::Parse("braid letter 0 is not a generator".into()));
                }
                letters.push(l);
            }
        }
        let strands = match strands {
            Some(k) => k,
            None => letters
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1),
        };
        BraidWord::new(strands, letters).map_err(|e| match e {
            Error::InvalidParameter(m) => Error::Parse(m),
            Error::EmptyClosure => Error::Parse("strand count must be positive".into()),
            other => other,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Permutation, components and linking data of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureInfo {
    /// `permutation[s]` is the bottom position of the strand starting at top position `s`.
    pub permutation: Vec<usize>,
    /// Strands of each component in cycle order, starting from the smallest.
    pub components: Vec<Vec<usize>>,
    /// Component index of each strand.
    pub strand_component: Vec<usize>,
    /// Symmetric linking matrix with zero diagonal.
    pub linking: Vec<Vec<i64>>,
    /// Signed count of crossings internal to each component.
    pub writhe_per_component: Vec<i64>,
}

impl ClosureInfo {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }
}

pub fn closure_info(b: &BraidWord) -> ClosureInfo {
    let k = b.strands;
    // at[pos] = strand currently at position pos
    let mut at: Vec<usize> = (0..k).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut permutation = vec![0; k];
    for (pos, &s) in at.iter().enumerate() {
        permutation[s] = pos;
    }

    let mut strand_component = vec![usize::MAX; k];
    let mut components = Vec::new();
    for s in 0..k {
        if strand_component[s] != usize::MAX {
            continue;
        }
        let c = components.len();
        let mut cycle = Vec::new();
        let mut x = s;
        while strand_component[x] == usize::MAX {
            strand_component[x] = c;
            cycle.push(x);
            x = permutation[x];
        }
        components.push(cycle);
    }

    let n = components.len();
    let mut crossings = vec![vec![0i64; n]; n];
    let mut writhe = vec![0i64; n];
    let mut at: Vec<usize> = (0..k).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        let sign = l.signum() as i64;
        let (ca, cb) = (strand_component[at[i]], strand_component[at[i + 1]]);
        if ca == cb {
            writhe[ca] += sign;
        } else {
            crossings[ca][cb] += sign;
            crossings[cb][ca] += sign;
        }
        at.swap(i, i + 1);
    }
    let linking = crossings
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| {
                    debug_assert!(c.is_even(), "inter-component crossing count must be even");
                    c / 2
                })
                .collect()
        })
        .collect();
    ClosureInfo {
        permutation,
        components,
        strand_component,
        linking,
        writhe_per_component: writhe,
    }
}

/// The braid on the strands of the chosen components only; crossings with
/// dropped strands are deleted. Components keep their relative order.
pub fn sublink_braid(b: &BraidWord, keep: &[usize]) -> Result<BraidWord> {
    let info = closure_info(b);
    if let Some(&c) = keep.iter().find(|&&c| c >= info.num_components()) {
        return Err(Error::IndexOutOfRange {
            index: c,
            len: info.num_components(),
        });
    }
    let kept = |s: usize| keep.contains(&info.strand_component[s]);
    let strands = (0..b.strands).filter(|&s| kept(s)).count();
    if strands == 0 {
        return Err(Error::EmptyClosure);
    }
    let mut at: Vec<usize> = (0..b.strands).collect();
    let mut letters = Vec::new();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        if kept(at[i]) && kept(at[i + 1]) {
            let pos = at[..i].iter().filter(|&&s| kept(s)).count() as i32 + 1;
            letters.push(pos * l.signum());
        }
        at.swap(i, i + 1);
    }
    BraidWord::new(strands, letters)
}

fn require_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be at least 1, got {v}"
        )));
    }
    Ok(())
}

/// `(σ₁σ₂…σ_{q−1})^p` on `q` strands; its closure is the torus link T(p,q).
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord> {
    require_positive("p", p)?;
    require_positive("q", q)?;
    let block: Vec<i32> = (1..q as i32).collect();
    BraidWord::new(q as usize, block.repeat(p as usize))
}

/// `((σ₁σ₂⁻¹)³)^p` on 3 strands. One block closes to the Borromean rings.
pub fn borromean_block_braid(iterations: usize) -> BraidWord {
    let block = [1, -2, 1, -2, 1, -2];
    BraidWord {
        strands: 3,
        letters: block.repeat(iterations),
    }
}

/// The necklace-type link H₁ ∪ H₂ ∪ H₃ ∪ γ_p on 4 strands: H₁ is the axis
/// (strand 0, looping once around the others), and strands 1–3 close up
/// `p` Borromean blocks, giving H₂, H₃ and γ_p. lk(H₁, ·) = 1, all other
/// pairwise linking numbers vanish for every p.
pub fn iterated_borromean_link_braid(p: usize) -> BraidWord {
    let mut letters = vec![1, 2, 3, 3, 2, 1];
    letters.extend(
        borromean_block_braid(p)
            .letters
            .iter()
            .map(|l| l + l.signum()),
    );
    BraidWord {
        strands: 4,
        letters,
    }
}

/// σ₁³ on two strands: the trefoil as a 2-braid.
pub fn trefoil_braid() -> BraidWord {
    BraidWord {
        strands: 2,
        letters: vec![1, 1, 1],
    }
}

/// Hopf link H₁ with two parallel meridians H₂, H₃ (the two-ring necklace):
/// σ₁²·σ₂σ₁²σ₂⁻¹, strand 0 being H₁.
pub fn necklace_braid() -> BraidWord {
    BraidWord {
        strands: 3,
        letters: vec![1, 1, 2, 1, 1, -2],
    }
}

/// The positive braid that carries a block of `width` parallel strands at
/// positions `start..start+width` across the next block of the same width.
fn bundle_crossing(start: usize, width: usize, positive: bool) -> Vec<i32> {
    let mut word = Vec::with_capacity(width * width);
    for a in (0..width).rev() {
        for c in 0..width {
            word.push((start + a + c + 1) as i32);
        }
    }
    if positive {
        word
    } else {
        word.iter().rev().map(|l| -l).collect()
    }
}

/// Replaces every strand of `b` by `width` parallel strands.
fn parallel_cable(b: &BraidWord, width: usize) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        out.extend(bundle_crossing(i * width, width, l > 0));
    }
    out
}

fn repeat_signed(block: &[i32], times: i64) -> Vec<i32> {
    if times >= 0 {
        block.repeat(times as usize)
    } else {
        block
            .iter()
            .rev()
            .map(|l| -l)
            .collect::<Vec<_>>()
            .repeat(times.unsigned_abs() as usize)
    }
}

fn require_knot(b: &BraidWord) -> Result<()> {
    let info = closure_info(b);
    if !info.is_knot() {
        return Err(Error::NotAKnot {
            components: info.num_components(),
        });
    }
    Ok(())
}

/// The (p,q)-cable of the knot closing `companion`, with respect to the
/// Seifert framing. The blackboard framing of a closed braid is its writhe,
/// so `q − p·writhe` twists `(σ₁…σ_{p−1})` are inserted on the first bundle.
pub fn cable_knot_braid(companion: &BraidWord, p: i64, q: i64) -> Result<BraidWord> {
    require_positive("p", p)?;
    require_knot(companion)?;
    let width = p as usize;
    let twist: Vec<i32> = (1..width as i32).collect();
    let mut letters = repeat_signed(&twist, q - p * companion.writhe());
    letters.extend(parallel_cable(companion, width));
    BraidWord::new(companion.strands * width, letters)
}

/// The companion knot together with its (p,q)-cable: each strand becomes a
/// bundle of `p+1`, the first strand of each bundle being the companion. The
/// rotation `ε = σ₁²σ₂…σ_p` turns the p cable strands once around the core
/// by one slot; `ε^p` is the full twist of the bundle, so `ε^{q − p·writhe}`
/// untwists the blackboard framing and adds the (p,q) pattern with
/// lk(core, cable) = q.
pub fn cable_link_braid(companion: &BraidWord, p: i64, q: i64) -> Result<BraidWord> {
    require_positive("p", p)?;
    require_knot(companion)?;
    let width = p as usize + 1;
    let mut eps: Vec<i32> = vec![1, 1];
    eps.extend(2..width as i32);
    let mut letters = repeat_signed(&eps, q - p * companion.writhe());
    letters.extend(parallel_cable(companion, width));
    BraidWord::new(companion.strands * width, letters)
}

/// Two-component model of the circle-sum curves: the trefoil on strands 0–1
/// clasped once with T(p,p+1) on the next p+1 strands. Component 0 is the
/// trefoil K, component 1 is γ_p, and lk(K, γ_p) = 1.
pub fn circle_sum_model_braid(p: i64) -> Result<BraidWord> {
    require_positive("p", p)?;
    let torus = torus_braid(p, p + 1)?;
    let strands = 2 + torus.strands;
    let mut letters = vec![1, 1, 1, 2, 2];
    letters.extend(torus.shifted(2, strands)?.letters);
    BraidWord::new(strands, letters)
}

/// Three-component model K ∪ M ∪ γ_p: the trefoil K (strands 0–1), a meridian
/// M (strand 2) clasping both K and γ_p, and γ_p = T(p,p+1). Linking numbers
/// lk(K,M) = lk(M,γ_p) = 1 and lk(K,γ_p) = 0.
pub fn trefoil_fiber_model_braid(p: i64) -> Result<BraidWord> {
    require_positive("p", p)?;
    let torus = torus_braid(p, p + 1)?;
    let strands = 3 + torus.strands;
    let mut letters = vec![1, 1, 1, 2, 2, 3, 3];
    letters.extend(torus.shifted(3, strands)?.letters);
    BraidWord::new(strands, letters)
}

/// Which family of curves γ_p a descriptor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// Curves on the trefoil fiber circle-summed with a meridian: γ_p is
    /// T(p,p+1) and lk(K, γ_p) = 1. Host link is K alone.
    CircleSum,
    /// Curves on the trefoil fiber positioned to link the meridian M of K:
    /// γ_p is T(p,p+1), lk(γ_p, K) = 0, lk(γ_p, M) = q. Host link is K ∪ M.
    TrefoilFiber,
    /// γ_p is the (p,1)-cable of the companion K, lk(K, γ_p) = 1.
    Cable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum KnotType {
    Unknot,
    Torus {
        p: i64,
        q: i64,
    },
    /// (p,q)-cable of the companion (the trefoil unless stated otherwise).
    Cable {
        p: i64,
        q: i64,
    },
}

/// Family record consumed by the Alexander and basic-class modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub kind: FamilyKind,
    pub p: i64,
    pub gamma: KnotType,
    /// lk(γ_p, K).
    pub lk_with_knot: i64,
    /// lk(γ_p, M) when the host link contains the meridian M.
    pub lk_with_meridian: Option<i64>,
}

impl FamilyMember {
    /// Linking numbers of γ_p with the host link components, in host order.
    pub fn host_linking(&self) -> Vec<i64> {
        let mut v = vec![self.lk_with_knot];
        v.extend(self.lk_with_meridian);
        v
    }
}

/// Family record for member `p`. `q` is lk(γ_p, M) for the trefoil-fiber
/// family (the other families ignore it); the paper's setting asks p ≥ q.
pub fn cable_family_descriptor(kind: FamilyKind, p: i64, q: i64) -> Result<FamilyMember> {
    require_positive("p", p)?;
    let torus = |p: i64| {
        if p == 1 {
            KnotType::Unknot
        } else {
            KnotType::Torus { p, q: p + 1 }
        }
    };
    Ok(match kind {
        FamilyKind::CircleSum => FamilyMember {
            kind,
            p,
            gamma: torus(p),
            lk_with_knot: 1,
            lk_with_meridian: None,
        },
        FamilyKind::TrefoilFiber => {
            require_positive("q", q)?;
            FamilyMember {
                kind,
                p,
                gamma: torus(p),
                lk_with_knot: 0,
                lk_with_meridian: Some(q),
            }
        }
        FamilyKind::Cable => FamilyMember {
            kind,
            p,
            gamma: KnotType::Cable { p, q: 1 },
            lk_with_knot: 1,
            lk_with_meridian: None,
        },
    })
}

/// Braid whose closure realizes `K ∪ γ_p` (or `K ∪ M ∪ γ_p`) for a family
/// member, with components in host order followed by γ_p.
pub fn family_link_braid(member: &FamilyMember) -> Result<BraidWord> {
    match member.kind {
        FamilyKind::CircleSum => circle_sum_model_braid(member.p),
        FamilyKind::TrefoilFiber => {
            if member.lk_with_meridian != Some(1) {
                return Err(Error::InvalidParameter(
                    "the trefoil-fiber braid model is built for lk(γ_p, M) = 1 only".into(),
                ));
            }
            trefoil_fiber_model_braid(member.p)
        }
        FamilyKind::Cable => cable_link_braid(&trefoil_braid(), member.p, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_hopf() {
        let info = closure_info(&BraidWord::trivial(2).unwrap());
        assert_eq!(info.num_components(), 2);
        assert_eq!(info.linking, vec![vec![0, 0], vec![0, 0]]);

        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        let info = closure_info(&hopf);
        assert_eq!(info.num_components(), 2);
        assert_eq!(info.lk(0, 1), 1);
        assert_eq!(info.writhe_per_component, vec![0, 0]);
    }

    #[test]
    fn sublinks() {
        let b = necklace_braid();
        let h1h2 = sublink_braid(&b, &[0, 1]).unwrap();
        let info = closure_info(&h1h2);
        assert_eq!(info.num_components(), 2);
        assert_eq!(info.lk(0, 1), 1);
        let h2h3 = sublink_braid(&b, &[1, 2]).unwrap();
        assert_eq!(closure_info(&h2h3).lk(0, 1), 0);
        assert!(sublink_braid(&b, &[3]).is_err());
    }

    #[test]
    fn torus_braid_words() {
        let b = torus_braid(2, 3).unwrap();
        assert_eq!(b.letters(), &[1, 2, 1, 2]);
        assert_eq!(b.strands(), 3);
        let b = torus_braid(3, 4).unwrap();
        assert_eq!(b.letters(), &[1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert!(closure_info(&b).is_knot());
        let u = torus_braid(1, 1).unwrap();
        assert!(u.is_empty());
        assert!(closure_info(&u).is_knot());
        assert!(torus_braid(0, 3).is_err());
    }

    #[test]
    fn borromean_blocks() {
        let info1 = closure_info(&borromean_block_braid(1));
        assert_eq!(info1.num_components(), 3);
        assert!(info1.linking.iter().flatten().all(|&x| x == 0));
        let info2 = closure_info(&borromean_block_braid(2));
        assert_eq!(info2.linking, info1.linking);
        assert!(borromean_block_braid(0).is_empty());
    }

    #[test]
    fn necklace_linking() {
        let info = closure_info(&necklace_braid());
        assert_eq!(
            info.linking,
            vec![vec![0, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn model_braids_have_expected_linking() {
        for p in 1..5 {
            let info = closure_info(&circle_sum_model_braid(p).unwrap());
            assert_eq!(info.num_components(), 2);
            assert_eq!(info.lk(0, 1), 1);

            let info = closure_info(&trefoil_fiber_model_braid(p).unwrap());
            assert_eq!(info.num_components(), 3);
            assert_eq!(
                info.linking,
                vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]
            );
        }
    }

    #[test]
    fn cable_braids() {
        let t = trefoil_braid();
        for p in 1..4 {
            let knot = cable_knot_braid(&t, p, 1).unwrap();
            assert!(closure_info(&knot).is_knot());
            let link = cable_link_braid(&t, p, 1).unwrap();
            let info = closure_info(&link);
            assert_eq!(info.num_components(), 2);
            assert_eq!(info.lk(0, 1), 1);
            // core strands sit first in every bundle
            assert_eq!(info.components[0], vec![0, p as usize + 1]);
        }
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        assert!(matches!(
            cable_knot_braid(&hopf, 2, 1),
            Err(Error::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn family_descriptors() {
        let m = cable_family_descriptor(FamilyKind::TrefoilFiber, 5, 1).unwrap();
        assert_eq!(m.gamma, KnotType::Torus { p: 5, q: 6 });
        assert_eq!(m.lk_with_meridian, Some(1));
        let m = cable_family_descriptor(FamilyKind::CircleSum, 1, 1).unwrap();
        assert_eq!(m.gamma, KnotType::Unknot);
        let m = cable_family_descriptor(FamilyKind::Cable, 3, 1).unwrap();
        assert_eq!(m.gamma, KnotType::Cable { p: 3, q: 1 });
        assert_eq!(m.lk_with_knot, 1);
        assert!(cable_family_descriptor(FamilyKind::Cable, 0, 1).is_err());
    }

    #[test]
    fn parse_and_display() {
        let b = BraidWord::parse("strands=3; 1 2 -1").unwrap();
        assert_eq!(b.letters(), &[1, 2, -1]);
        assert_eq!(b.to_string(), "strands=3; 1 2 -1");
        assert_eq!(BraidWord::parse(&b.to_string()).unwrap(), b);
        assert_eq!(BraidWord::parse("1 1 1").unwrap().strands(), 2);
        assert_eq!(BraidWord::parse("strands=1").unwrap().strands(), 1);
        assert!(BraidWord::parse("strands=2; 2").is_err());
        assert!(BraidWord::parse("strands=x").is_err());
        assert!(BraidWord::parse("1 a").is_err());
        assert!(BraidWord::parse("strands=0").is_err());
    }
}
