//! Free-group words, the Artin action of braids, presentations of closure
//! complements, and abelianized Fox derivatives.

use std::fmt;

use serde::Serialize;

use crate::braid::{closure_info, BraidWord};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, PolyMatrix};

/// `x_gen^exp` with `exp = ±1`; `gen` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }

    /// Signed 1-based form used in text formats.
    pub fn signed(self) -> i64 {
        (self.gen as i64 + 1) * self.exp as i64
    }
}

/// A freely reduced word in the free group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        FreeWord {
            letters: vec![Letter::new(gen, 1)],
        }
    }

    /// Builds and freely reduces a word.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// From signed 1-based indices, e.g. `[1, 2, -1]` = x₁x₂x₁⁻¹.
    pub fn from_signed(signed: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            if s == 0 {
                return Err(Error::Parse("0 is not a generator".into()));
            }
            letters.push(Letter::new(s.unsigned_abs() as usize - 1, s.signum() as i8));
        }
        Ok(FreeWord::new(letters))
    }

    /// Appends a letter, cancelling against the last one if inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// Largest generator index plus one (0 for the identity).
    pub fn generator_bound(&self) -> usize {
        self.letters.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut v = vec![0; num_generators];
        for l in &self.letters {
            v[l.gen] += l.exp as i64;
        }
        v
    }

    /// Applies the endomorphism `x_j -> images[j]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut w = FreeWord::identity();
        for l in &self.letters {
            let img = &images[l.gen];
            if l.exp > 0 {
                for &x in &img.letters {
                    w.push(x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    w.push(x.inverse());
                }
            }
        }
        w
    }

    /// If the word is `u x_g u⁻¹`, returns `(u, g)`.
    pub fn as_conjugate_of_generator(&self) -> Option<(FreeWord, usize)> {
        let n = self.letters.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let mid = n / 2;
        let centre = self.letters[mid];
        if centre.exp != 1 {
            return None;
        }
        for i in 0..mid {
            if self.letters[n - 1 - i] != self.letters[i].inverse() {
                return None;
            }
        }
        Some((
            FreeWord {
                letters: self.letters[..mid].to_vec(),
            },
            centre.gen,
        ))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_signed().iter().map(i64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_signed().serialize(s)
    }
}

/// Image of each generator under the Artin action of a braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinAction {
    pub images: Vec<FreeWord>,
}

impl ArtinAction {
    pub fn identity(strands: usize) -> Self {
        ArtinAction {
            images: (0..strands).map(FreeWord::generator).collect(),
        }
    }

    fn letter_images(strands: usize, letter: i32) -> Vec<FreeWord> {
        let i = letter.unsigned_abs() as usize - 1;
        let mut images: Vec<FreeWord> = (0..strands).map(FreeWord::generator).collect();
        let xi = Letter::new(i, 1);
        let xj = Letter::new(i + 1, 1);
        if letter > 0 {
            // σ_i: x_i -> x_i x_{i+1} x_i⁻¹, x_{i+1} -> x_i
            images[i] = FreeWord::new([xi, xj, xi.inverse()]);
            images[i + 1] = FreeWord::new([xi]);
        } else {
            // σ_i⁻¹: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}⁻¹ x_i x_{i+1}
            images[i] = FreeWord::new([xj]);
            images[i + 1] = FreeWord::new([xj.inverse(), xi, xj]);
        }
        images
    }
}

/// The Artin action of `b`: letters compose left to right, so the action of
/// `σ_a σ_b` is `φ_a ∘ φ_b`.
pub fn artin_action(b: &BraidWord) -> ArtinAction {
    let k = b.strands();
    let mut action = ArtinAction::identity(k);
    for &l in b.letters() {
        let step = ArtinAction::letter_images(k, l);
        action.images = step.iter().map(|w| w.substitute(&action.images)).collect();
    }
    action
}

/// Distinguished peripheral words of one link component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Peripheral {
    pub meridian: FreeWord,
    pub longitude: FreeWord,
}

/// A finitely presented group with optional link-component coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub num_generators: usize,
    pub relators: Vec<FreeWord>,
    /// Component index of each generator; abelianization sends `x_g` to `t_{coloring[g]+1}`.
    pub coloring: Option<Vec<usize>>,
    /// Meridian/longitude per component, when known.
    pub peripheral: Vec<Option<Peripheral>>,
}

impl GroupPresentation {
    pub fn new(num_generators: usize, relators: Vec<FreeWord>) -> Result<Self> {
        for r in &relators {
            if r.generator_bound() > num_generators {
                return Err(Error::InvalidParameter(format!(
                    "relator {r} uses a generator beyond {num_generators}"
                )));
            }
        }
        Ok(GroupPresentation {
            num_generators,
            relators,
            coloring: None,
            peripheral: Vec::new(),
        })
    }

    pub fn with_coloring(mut self, coloring: Vec<usize>) -> Result<Self> {
        if coloring.len() != self.num_generators {
            return Err(Error::Arity {
                expected: self.num_generators,
                found: coloring.len(),
            });
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn num_components(&self) -> usize {
        self.coloring
            .as_ref()
            .map_or(0, |c| c.iter().map(|&x| x + 1).max().unwrap_or(0))
    }

    /// Parses `gens=k; rel= 1 2 -1; rel= ...; color= 1 1; mer= 1; lon= 2 -1`.
    /// Colors are 1-based; `mer`/`lon` give component 1's peripheral words.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens = None;
        let mut relators = Vec::new();
        let mut coloring = None;
        let mut mer = None;
        let mut lon = None;
        let ints = |v: &str| -> Result<Vec<i64>> {
            v.split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
                })
                .collect()
        };
        for clause in text.split([';', '\n']) {
            let clause = clause.trim();
            if clause.is_empty() || clause.starts_with('#') {
                continue;
            }
            let (key, value) = clause
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found `{clause}`")))?;
            match key.trim() {
                "gens" => {
                    gens = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad gens `{value}`")))?,
                    )
                }
                "rel" => relators.push(FreeWord::from_signed(&ints(value)?)?),
                "color" => {
                    let c = ints(value)?;
                    if c.iter().any(|&x| x < 1) {
                        return Err(Error::Parse("colors are 1-based".into()));
                    }
                    coloring = Some(c.iter().map(|&x| x as usize - 1).collect::<Vec<_>>());
                }
                "mer" => mer = Some(FreeWord::from_signed(&ints(value)?)?),
                "lon" => lon = Some(FreeWord::from_signed(&ints(value)?)?),
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let n = gens.ok_or_else(|| Error::Parse("missing `gens=`".into()))?;
        let as_parse = |e: Error| match e {
            Error::InvalidParameter(m) => Error::Parse(m),
            Error::Arity { expected, found } => Error::Parse(format!(
                "coloring has {found} entries for {expected} generators"
            )),
            other => other,
        };
        let mut g = GroupPresentation::new(n, relators).map_err(as_parse)?;
        if let Some(c) = coloring {
            g = g.with_coloring(c).map_err(as_parse)?;
        }
        match (mer, lon) {
            (Some(meridian), Some(longitude)) => {
                if meridian.generator_bound() > n || longitude.generator_bound() > n {
                    return Err(Error::Parse(
                        "peripheral word uses an unknown generator".into(),
                    ));
                }
                g.peripheral = vec![Some(Peripheral {
                    meridian,
                    longitude,
                })];
            }
            (None, None) => {}
            _ => {
                return Err(Error::Parse(
                    "`mer=` and `lon=` must be given together".into(),
                ))
            }
        }
        Ok(g)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens={}", self.num_generators)?;
        for r in &self.relators {
            write!(f, "; rel= {r}")?;
        }
        if let Some(c) = &self.coloring {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "; color= {}", parts.join(" "))?;
        }
        if let Some(Some(p)) = self.peripheral.first() {
            write!(f, "; mer= {}; lon= {}", p.meridian, p.longitude)?;
        }
        Ok(())
    }
}

/// Presentation `⟨x_1..x_k | x_j⁻¹ β(x_j), j < k⟩` of the closure complement.
///
/// The last relator is redundant and dropped. For each component the
/// meridian is the generator of its smallest strand; the longitude follows
/// the strand cycle: writing `β(x_j) = w_j x_{m(j)} w_j⁻¹`, the product of the
/// `w_j⁻¹` around the cycle commutes with the meridian, and a power of the
/// meridian is appended so that the word has zero exponent sum on its own
/// component.
pub fn closure_presentation(b: &BraidWord) -> GroupPresentation {
    let k = b.strands();
    let info = closure_info(b);
    let action = artin_action(b);
    let mut relators: Vec<FreeWord> = (0..k)
        .map(|j| FreeWord::generator(j).inverse().mul(&action.images[j]))
        .collect();
    relators.pop();

    let conj: Vec<(FreeWord, usize)> = action
        .images
        .iter()
        .map(|w| {
            w.as_conjugate_of_generator()
                .expect("Artin images are conjugates of generators")
        })
        .collect();

    let coloring = info.strand_component.clone();
    let mut peripheral = Vec::with_capacity(info.num_components());
    for cycle in &info.components {
        let start = cycle[0];
        let own = coloring[start];
        let mut g = FreeWord::identity();
        let mut j = start;
        loop {
            let (w, next) = &conj[j];
            g = w.inverse().mul(&g);
            j = *next;
            if j == start {
                break;
            }
        }
        let self_exp: i64 = g
            .letters()
            .iter()
            .filter(|l| coloring[l.gen] == own)
            .map(|l| l.exp as i64)
            .sum();
        // inverted so that λ is homologous to Σ lk(K, K_j)·μ_j under the
        // crossing-sign convention of `closure_info`
        let longitude = g.mul(&FreeWord::generator(start).pow(-self_exp)).inverse();
        peripheral.push(Some(Peripheral {
            meridian: FreeWord::generator(start),
            longitude,
        }));
    }

    GroupPresentation {
        num_generators: k,
        relators,
        coloring: Some(coloring),
        peripheral,
    }
}

/// Abelianization of a word: monomial `Π t_{c(g)}^{exp}`.
pub fn abelianize(w: &FreeWord, coloring: &[usize], num_vars: usize) -> LaurentPoly {
    let mut e = vec![0i64; num_vars];
    for l in w.letters() {
        e[coloring[l.gen]] += l.exp as i64;
    }
    LaurentPoly::monomial(num_vars, e, 1)
}

/// Fox derivative `∂w/∂x_j`, abelianized through `coloring`.
///
/// Each occurrence of `x_j` contributes the image of the prefix before it;
/// each occurrence of `x_j⁻¹` contributes minus the image of the prefix
/// including it.
pub fn fox_derivative(w: &FreeWord, j: usize, coloring: &[usize], num_vars: usize) -> LaurentPoly {
    let mut prefix = vec![0i64; num_vars];
    let mut terms: Vec<(Vec<i64>, i64)> = Vec::new();
    for l in w.letters() {
        let c = coloring[l.gen];
        if l.exp > 0 {
            if l.gen == j {
                terms.push((prefix.clone(), 1));
            }
            prefix[c] += 1;
        } else {
            prefix[c] -= 1;
            if l.gen == j {
                terms.push((prefix.clone(), -1));
            }
        }
    }
    LaurentPoly::from_terms(num_vars, terms).expect("exponent vectors have num_vars entries")
}

/// Matrix of abelianized Fox derivatives, `(#relators) × (#generators)`.
pub fn alexander_matrix(g: &GroupPresentation) -> Result<PolyMatrix> {
    let coloring = g.coloring.as_ref().ok_or(Error::MissingColoring)?;
    let nv = g.num_components();
    let mut m = PolyMatrix::zeros(g.relators.len(), g.num_generators, nv);
    for (r, rel) in g.relators.iter().enumerate() {
        for j in 0..g.num_generators {
            m.set(r, j, fox_derivative(rel, j, coloring, nv));
        }
    }
    Ok(m)
}
