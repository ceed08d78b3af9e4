//! Brute-force permutation group enumeration, used as an independent check
//! on the class data of bundled and user-supplied tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::table::CharacterTable;

pub const DEFAULT_CAP: usize = 100_000;

/// A bijection of `{1, …, degree}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 0-based images; `None` unless `images` is a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.degree()), |acc, _| acc.then(self))
    }

    /// Smallest `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// Cycle lengths in descending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses disjoint-cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
pub fn parse_permutation(cycles: &str, degree: usize) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let bytes = cycles.as_bytes();
    let mut pos = 0;
    let syntax = |position: usize, expected: &str| Error::Syntax {
        position,
        expected: expected.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while bytes.get(*pos).is_some_and(u8::is_ascii_whitespace) {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(syntax(pos, "'('"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(syntax(pos, "'('"));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b')') if cycle.is_empty() => {
                    pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = pos;
                    while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                        pos += 1;
                    }
                    let point: usize = cycles[start..pos]
                        .parse()
                        .map_err(|_| syntax(start, "point number"))?;
                    if point == 0 || point > degree {
                        return Err(Error::Domain(format!("point {point} outside 1..={degree}")));
                    }
                    if used[point - 1] {
                        return Err(Error::RepeatedPoint(point));
                    }
                    used[point - 1] = true;
                    cycle.push(point - 1);
                    skip_ws(&mut pos);
                    match bytes.get(pos) {
                        Some(b',') => pos += 1,
                        Some(b')') => {
                            pos += 1;
                            break;
                        }
                        _ => return Err(syntax(pos, "',' or ')'")),
                    }
                }
                _ => return Err(syntax(pos, "point number")),
            }
        }
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()] as u32;
        }
        skip_ws(&mut pos);
    }
    Ok(Permutation { images })
}

/// Generators read from a generator file.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDocument {
    degree: usize,
    generators: Vec<String>,
}

/// Parses a generator file (`degree` plus `generators` in cycle notation); JSON or TOML.
pub fn load_generators(document: &str) -> Result<GeneratorSet> {
    let doc: GeneratorDocument = if document.trim_start().starts_with('{') {
        serde_json::from_str(document).map_err(|e| Error::Format(e.to_string()))?
    } else {
        toml::from_str(document).map_err(|e| Error::Format(e.to_string()))?
    };
    if doc.degree == 0 {
        return Err(Error::Format("degree must be positive".into()));
    }
    let generators = doc
        .generators
        .iter()
        .map(|g| parse_permutation(g, doc.degree))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        degree: doc.degree,
        generators,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub representative: usize,
    pub members: Vec<usize>,
    pub cycle_type: Vec<usize>,
}

impl ClassInfo {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A permutation group listed element by element, identity first.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    classes: Vec<ClassInfo>,
}

impl EnumeratedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ClassInfo::size).collect()
    }
}

/// Breadth-first closure of `generators` under composition.
pub fn enumerate_group(generators: &[Permutation], cap: usize) -> Result<EnumeratedGroup> {
    let degree = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::Domain("at least one generator is required".into()))?;
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::Domain(format!(
            "generator {g} has degree {} but {degree} was expected",
            g.degree()
        )));
    }
    let identity = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = elements[e].then(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    let classes = conjugacy_classes_of(generators, &elements, &index);
    Ok(EnumeratedGroup {
        generators: generators.to_vec(),
        elements,
        classes,
    })
}

pub fn enumerate_generator_set(set: &GeneratorSet, cap: usize) -> Result<EnumeratedGroup> {
    if set.generators.is_empty() {
        return enumerate_group(&[Permutation::identity(set.degree)], cap);
    }
    enumerate_group(&set.generators, cap)
}

/// Conjugacy classes, largest first (ties in order of first appearance).
pub fn conjugacy_classes(g: &EnumeratedGroup) -> Vec<ClassInfo> {
    g.classes.clone()
}

fn conjugacy_classes_of(
    generators: &[Permutation],
    elements: &[Permutation],
    index: &HashMap<Permutation, usize>,
) -> Vec<ClassInfo> {
    let inverses: Vec<Permutation> = generators.iter().map(Permutation::inverse).collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes: Vec<ClassInfo> = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        // orbit under conjugation by the generators is the full class
        while let Some(x) = queue.pop_front() {
            for (g, gi) in generators.iter().zip(&inverses) {
                let y = gi.then(&elements[x]).then(g);
                let j = index[&y];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(ClassInfo {
            representative: start,
            cycle_type: elements[start].cycle_type(),
            members,
        });
    }
    classes.sort_by_key(|c| std::cmp::Reverse(c.size()));
    classes
}

/// True iff the enumerated class sizes agree with the table's as multisets.
pub fn check_class_function(g: &EnumeratedGroup, ct: &CharacterTable) -> Result<bool> {
    if g.order() as u64 != ct.order() {
        return Err(Error::OrderMismatch {
            group: g.order(),
            table: ct.order(),
        });
    }
    let mut ours: Vec<u64> = g.class_sizes().into_iter().map(|s| s as u64).collect();
    let mut theirs = ct.class_sizes();
    ours.sort_unstable();
    theirs.sort_unstable();
    Ok(ours == theirs)
}
