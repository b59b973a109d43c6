//! Artin monoid presentations given by Coxeter matrices.
//!
//! A presentation is a named generator list together with a symmetric
//! Coxeter matrix; the off-diagonal entry `m` imposes the relation
//! `⟨st⟩^m = ⟨ts⟩^m` (alternating products of length `m`), and the value
//! 0 encodes `m = ∞`, i.e. no relation between the two generators.

use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::parse_rational;
use crate::word::Word;

/// Index into the generator name table of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(pub u32);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Symmetric Coxeter matrix with 1 on the diagonal; 0 encodes ∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<CoxeterMatrix> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedInput(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        let entries: Vec<u32> = rows.into_iter().flatten().collect();
        let m = CoxeterMatrix { n, entries };
        for i in 0..n {
            if m.raw(i, i) != 1 {
                return Err(Error::BadDiagonal { i });
            }
            for j in 0..n {
                if m.raw(i, j) != m.raw(j, i) {
                    return Err(Error::AsymmetricMatrix { i, j });
                }
                if i != j && m.raw(i, j) == 1 {
                    return Err(Error::BadEntry { i, j });
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn raw(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    /// Entry m(i,j); `None` encodes ∞.
    pub fn get(&self, i: GeneratorId, j: GeneratorId) -> Option<u32> {
        match self.raw(i.index(), j.index()) {
            0 => None,
            m => Some(m),
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.raw(i, j)).collect())
            .collect()
    }
}

/// A finitely generated Artin monoid presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoidPresentation {
    pub name: String,
    pub generators: Vec<String>,
    pub matrix: CoxeterMatrix,
    /// Explicit generator weights; `None` means the uniform scale where
    /// every generator has weight e, so elements scale as e^length.
    pub weights: Option<Vec<BigRational>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    name: String,
    generators: Vec<String>,
    coxeter: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<String>>,
}

impl MonoidPresentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        matrix: CoxeterMatrix,
        weights: Option<Vec<BigRational>>,
    ) -> Result<MonoidPresentation> {
        let p = MonoidPresentation {
            name: name.into(),
            generators,
            matrix,
            weights,
        };
        p.validate()?;
        Ok(p)
    }

    /// Convenience constructor from i64 rows with uniform weights.
    pub fn from_rows(
        name: &str,
        generators: &[&str],
        rows: &[&[u32]],
    ) -> Result<MonoidPresentation> {
        let matrix = CoxeterMatrix::new(rows.iter().map(|r| r.to_vec()).collect())?;
        MonoidPresentation::new(
            name,
            generators.iter().map(|s| s.to_string()).collect(),
            matrix,
            None,
        )
    }

    fn validate(&self) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::MalformedInput(
                "at least one generator required".into(),
            ));
        }
        if self.generators.len() != self.matrix.size() {
            return Err(Error::MalformedInput(format!(
                "{} generators but {}x{} matrix",
                self.generators.len(),
                self.matrix.size(),
                self.matrix.size()
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.is_empty() || g.contains('.') || g.contains(',') || g.contains(char::is_whitespace)
            {
                return Err(Error::MalformedInput(format!(
                    "generator name {g:?} at index {i} is not printable-safe"
                )));
            }
            if self.generators[..i].contains(g) {
                return Err(Error::MalformedInput(format!(
                    "duplicate generator name {g:?}"
                )));
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != self.generators.len() {
                return Err(Error::InconsistentWeights(format!(
                    "{} weights for {} generators",
                    w.len(),
                    self.generators.len()
                )));
            }
            for (i, x) in w.iter().enumerate() {
                if !x.is_positive() {
                    return Err(Error::InconsistentWeights(format!(
                        "weight of {} must be positive",
                        self.generators[i]
                    )));
                }
            }
            // Generators joined by a finite odd m must share a weight, or the
            // weight map fails to extend to a homomorphism.
            for i in 0..self.rank() {
                for j in (i + 1)..self.rank() {
                    let m = self.matrix.raw(i, j);
                    if m != 0 && m % 2 == 1 && w[i] != w[j] {
                        return Err(Error::InconsistentWeights(format!(
                            "generators {} and {} are joined by odd m = {m} but have different weights",
                            self.generators[i], self.generators[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.rank() as u32).map(GeneratorId)
    }

    pub fn uniform_weights(&self) -> bool {
        self.weights.is_none()
    }

    /// Coxeter entry between two generators; `None` is ∞.
    pub fn m(&self, s: GeneratorId, t: GeneratorId) -> Option<u32> {
        self.matrix.get(s, t)
    }

    pub fn generator_named(&self, name: &str) -> Option<GeneratorId> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| GeneratorId(i as u32))
    }

    /// Parse the dot-separated word syntax; the empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for part in text.split('.') {
            let g = self.generator_named(part).ok_or_else(|| {
                Error::MalformedInput(format!("unknown generator {part:?} in word {text:?}"))
            })?;
            letters.push(g);
        }
        Ok(Word::new(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|g| self.generators[g.index()].as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Parse the presentation file format (strict JSON, no unknown keys).
    pub fn parse(text: &str) -> Result<MonoidPresentation> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        let matrix = CoxeterMatrix::new(file.coxeter)?;
        let weights = match file.weights {
            None => None,
            Some(ws) => {
                let mut parsed = Vec::with_capacity(ws.len());
                for w in &ws {
                    parsed.push(parse_rational(w)?);
                }
                Some(parsed)
            }
        };
        MonoidPresentation::new(file.name, file.generators, matrix, weights)
    }

    /// Serialize back to the file format. `parse(serialize(p)) == p`.
    pub fn serialize(&self) -> String {
        let file = PresentationFile {
            name: self.name.clone(),
            generators: self.generators.clone(),
            coxeter: self.matrix.rows(),
            weights: self
                .weights
                .as_ref()
                .map(|ws| ws.iter().map(crate::poly::format_rational).collect()),
        };
        serde_json::to_string_pretty(&file).expect("presentation serializes")
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }
}

/// Spherical type labels for connected Coxeter diagram components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    NonSpherical,
}

impl TypeLabel {
    pub fn is_spherical(&self) -> bool {
        !matches!(self, TypeLabel::NonSpherical)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E6 => write!(f, "E6"),
            TypeLabel::E7 => write!(f, "E7"),
            TypeLabel::E8 => write!(f, "E8"),
            TypeLabel::F4 => write!(f, "F4"),
            TypeLabel::H3 => write!(f, "H3"),
            TypeLabel::H4 => write!(f, "H4"),
            TypeLabel::I2(m) => write!(f, "I2({m})"),
            TypeLabel::NonSpherical => write!(f, "non-spherical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub members: Vec<GeneratorId>,
    pub label: TypeLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub right_angled: bool,
    pub finite_type: bool,
    pub components: Vec<Component>,
}

/// Classify against the spherical diagram table.
///
/// Components are connected components of the Coxeter diagram, whose edges
/// join generators with m ≥ 3 or m = ∞ (m = 2 means the generators commute
/// and are disconnected in the diagram).
pub fn classify(p: &MonoidPresentation) -> Classification {
    let n = p.rank();
    let right_angled = (0..n).all(|i| {
        ((i + 1)..n).all(|j| {
            let m = p.matrix.raw(i, j);
            m == 0 || m == 2
        })
    });

    // union-find over diagram edges
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let m = p.matrix.raw(i, j);
            if m == 0 || m >= 3 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(g) => groups[g].push(i),
            None => {
                root_of[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }

    let mut components = Vec::new();
    let mut finite_type = true;
    for g in groups {
        let label = component_label(p, &g);
        finite_type &= label.is_spherical();
        components.push(Component {
            members: g.into_iter().map(|i| GeneratorId(i as u32)).collect(),
            label,
        });
    }
    Classification {
        right_angled,
        finite_type,
        components,
    }
}

fn component_label(p: &MonoidPresentation, verts: &[usize]) -> TypeLabel {
    let n = verts.len();
    let m_of = |a: usize, b: usize| p.matrix.raw(verts[a], verts[b]);
    // collect diagram edges within the component
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let m = m_of(a, b);
            if m == 0 {
                return TypeLabel::NonSpherical;
            }
            if m >= 3 {
                edges.push((a, b, m));
            }
        }
    }
    if n == 1 {
        return TypeLabel::A(1);
    }
    if n == 2 {
        return match edges[0].2 {
            3 => TypeLabel::A(2),
            4 => TypeLabel::B(2),
            m => TypeLabel::I2(m),
        };
    }
    // a spherical diagram of rank >= 3 is a tree
    if edges.len() != n - 1 {
        return TypeLabel::NonSpherical;
    }
    let mut deg = vec![0usize; n];
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for &(a, b, m) in &edges {
        deg[a] += 1;
        deg[b] += 1;
        adj[a].push((b, m));
        adj[b].push((a, m));
    }
    let max_deg = deg.iter().copied().max().unwrap();
    let labels: Vec<u32> = edges.iter().map(|e| e.2).collect();
    let all3 = labels.iter().all(|&m| m == 3);
    let count4 = labels.iter().filter(|&&m| m == 4).count();
    let count5 = labels.iter().filter(|&&m| m == 5).count();
    let high = labels.iter().any(|&m| m >= 6);

    if max_deg > 3 || high {
        return TypeLabel::NonSpherical;
    }
    if max_deg == 3 {
        // branch node: only the D/E series qualify, all labels 3
        if !all3 || deg.iter().filter(|&&d| d == 3).count() != 1 {
            return TypeLabel::NonSpherical;
        }
        let center = deg.iter().position(|&d| d == 3).unwrap();
        let mut arms: Vec<usize> = adj[center]
            .iter()
            .map(|&(first, _)| arm_length(&adj, center, first))
            .collect();
        arms.sort_unstable();
        if arms.iter().sum::<usize>() != n - 1 {
            return TypeLabel::NonSpherical; // not a tree of simple arms
        }
        return match arms.as_slice() {
            [1, 1, _] => TypeLabel::D(n),
            [1, 2, 2] => TypeLabel::E6,
            [1, 2, 3] => TypeLabel::E7,
            [1, 2, 4] => TypeLabel::E8,
            _ => TypeLabel::NonSpherical,
        };
    }
    // path; order vertices from one end
    let end = deg.iter().position(|&d| d == 1).unwrap();
    let path_labels = path_edge_labels(&adj, end, n);
    if all3 {
        return TypeLabel::A(n);
    }
    if count4 == 1 && count5 == 0 {
        let pos4 = path_labels.iter().position(|&m| m == 4).unwrap();
        if pos4 == 0 || pos4 == n - 2 {
            return TypeLabel::B(n);
        }
        if n == 4 && pos4 == 1 {
            return TypeLabel::F4;
        }
        return TypeLabel::NonSpherical;
    }
    if count5 == 1 && count4 == 0 {
        let pos5 = path_labels.iter().position(|&m| m == 5).unwrap();
        if (pos5 == 0 || pos5 == n - 2) && n == 3 {
            return TypeLabel::H3;
        }
        if (pos5 == 0 || pos5 == n - 2) && n == 4 {
            return TypeLabel::H4;
        }
    }
    TypeLabel::NonSpherical
}

/// Length of the arm starting at `first`, walking away from `center`.
fn arm_length(adj: &[Vec<(usize, u32)>], center: usize, first: usize) -> usize {
    let mut len = 1;
    let (mut prev, mut cur) = (center, first);
    loop {
        let next: Vec<usize> = adj[cur]
            .iter()
            .map(|&(v, _)| v)
            .filter(|&v| v != prev)
            .collect();
        match next.as_slice() {
            [] => return len,
            [v] => {
                prev = cur;
                cur = *v;
                len += 1;
            }
            _ => return usize::MAX / 2, // branches twice; caller rejects
        }
    }
}

fn path_edge_labels(adj: &[Vec<(usize, u32)>], end: usize, n: usize) -> Vec<u32> {
    let mut labels = Vec::with_capacity(n - 1);
    let mut prev = usize::MAX;
    let mut cur = end;
    while labels.len() < n - 1 {
        let &(next, m) = adj[cur]
            .iter()
            .find(|&&(v, _)| v != prev)
            .expect("path continues");
        labels.push(m);
        prev = cur;
        cur = next;
    }
    labels
}

fn rename_disjoint(left: &[String], right: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(right.len());
    for g in right {
        let mut name = g.clone();
        while left.contains(&name) || out.contains(&name) {
            name.push('\'');
        }
        out.push(name);
    }
    out
}

fn product(
    p1: &MonoidPresentation,
    p2: &MonoidPresentation,
    cross: u32,
    sep: &str,
) -> MonoidPresentation {
    let n1 = p1.rank();
    let n2 = p2.rank();
    let mut rows = vec![vec![cross; n1 + n2]; n1 + n2];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n1 {
        for j in 0..n1 {
            rows[i][j] = p1.matrix.raw(i, j);
        }
    }
    #[allow(clippy::needless_range_loop)]
    for i in 0..n2 {
        for j in 0..n2 {
            rows[n1 + i][n1 + j] = p2.matrix.raw(i, j);
        }
    }
    let mut generators = p1.generators.clone();
    generators.extend(rename_disjoint(&p1.generators, &p2.generators));
    let weights = match (&p1.weights, &p2.weights) {
        (Some(a), Some(b)) => {
            let mut w = a.clone();
            w.extend(b.iter().cloned());
            Some(w)
        }
        // Explicit weights survive only when both factors carry them; the
        // uniform scale has no rational representation to splice in.
        _ => None,
    };
    MonoidPresentation::new(
        format!("{}{}{}", p1.name, sep, p2.name),
        generators,
        CoxeterMatrix::new(rows).expect("block matrix is valid"),
        weights,
    )
    .expect("product of valid presentations is valid")
}

/// Free product: block diagonal matrix, cross entries ∞.
pub fn free_product(p1: &MonoidPresentation, p2: &MonoidPresentation) -> MonoidPresentation {
    product(p1, p2, 0, "*")
}

/// Direct product: block diagonal matrix, cross entries 2.
pub fn direct_product(p1: &MonoidPresentation, p2: &MonoidPresentation) -> MonoidPresentation {
    product(p1, p2, 2, "x")
}
