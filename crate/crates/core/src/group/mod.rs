//! Finite groups as explicit multiplication tables, Ad-stable subsets, and
//! exact rational representations.
//!
//! Element `0` is always the identity. Groups built from permutation
//! generators enumerate the remaining elements breadth-first over generator
//! words, so every index is reproducible from the generator list.

mod builtin;
mod representation;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use builtin::{builtin, cyclic, dihedral, symmetric3, symmetric4};
pub use representation::Representation;

/// Default largest group order accepted (and exhaustively checked).
pub const DEFAULT_ORDER_BOUND: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group closure exceeds the order bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("multiplication table is not a valid group table: {0}")]
    InvalidTable(String),
    #[error("subset is not Ad-stable: {conjugate} = {by} · {member} · {by}⁻¹ is missing")]
    NotAdStable {
        member: String,
        by: String,
        conjugate: String,
    },
    #[error("subset contains the identity element")]
    ContainsIdentity,
    #[error("subset is empty")]
    EmptySubset,
    #[error("element index {0} out of range")]
    UnknownElement(usize),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("representation is not a homomorphism: ρ({g})ρ({h}) ≠ ρ({g}{h})")]
    NotHomomorphism { g: String, h: String },
    #[error("representation matrix for {0} is not invertible")]
    NotInvertible(String),
    #[error("representation matrices do not generate the group (reached {reached} of {order} elements)")]
    NotGenerating { reached: usize, order: usize },
    #[error("representation matrix for {label} has wrong shape (expected {dim}×{dim})")]
    BadShape { label: String, dim: usize },
    #[error("unknown builtin group {0:?} (expected s3, s4, z_n, dihedral_n)")]
    UnknownBuiltin(String),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

/// Options for [`GroupTable::from_permutations`].
#[derive(Clone, Debug)]
pub struct BuildOptions {
    pub order_bound: usize,
    /// Names used to spell element labels as generator words. Without them
    /// elements are labelled by cycle notation.
    pub generator_names: Option<Vec<String>>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            order_bound: DEFAULT_ORDER_BOUND,
            generator_names: None,
        }
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p·q)(i) = q(p(i)): apply p first, so words read left to right.
    p.iter().map(|&i| q[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i.to_string());
            i = p[i];
        }
        let sep = if p.len() > 10 { "," } else { "" };
        out.push_str(&format!("({})", cycle.join(sep)));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

impl GroupTable {
    /// Closes a set of permutations of `0..degree` under composition.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        options: &BuildOptions,
    ) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::NotAPermutation { index, degree });
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let y = compose(&elements[x], g);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() == options.order_bound {
                    return Err(GroupError::OrderBoundExceeded {
                        bound: options.order_bound,
                    });
                }
                index.insert(y.clone(), elements.len());
                let mut w = words[x].clone();
                w.push(gi);
                words.push(w);
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for (i, p) in elements.iter().enumerate() {
            for (j, q) in elements.iter().enumerate() {
                mul[i * n + j] = index[&compose(p, q)];
            }
        }
        let labels = match &options.generator_names {
            Some(names) => words
                .iter()
                .map(|w| {
                    if w.is_empty() {
                        "e".to_string()
                    } else {
                        w.iter().map(|&g| names[g].as_str()).collect()
                    }
                })
                .collect(),
            None => elements.iter().map(|p| cycle_notation(p)).collect(),
        };
        Self::assemble(n, mul, labels)
    }

    /// Builds from an explicit table `table[g][h] = gh`. The identity is
    /// moved to index 0 (other elements keep their relative order).
    /// Associativity is checked exhaustively when `order ≤ order_bound`.
    pub fn from_table(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        order_bound: usize,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::InvalidTable("table must be n×n with entries < n".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| GroupError::InvalidTable("no two-sided identity".into()))?;
        let order: Vec<usize> = std::iter::once(e).chain((0..n).filter(|&g| g != e)).collect();
        let mut new_index = vec![0; n];
        for (k, &g) in order.iter().enumerate() {
            new_index[g] = k;
        }
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = new_index[table[order[i]][order[j]]];
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => order.iter().map(|&g| l[g].clone()).collect(),
            Some(_) => return Err(GroupError::InvalidTable("label count differs from order".into())),
            None => (0..n)
                .map(|k| if k == 0 { "e".to_string() } else { format!("g{}", order[k]) })
                .collect(),
        };
        let g = Self::assemble(n, mul, labels)?;
        if n <= order_bound && !g.is_associative() {
            return Err(GroupError::InvalidTable("not associative".into()));
        }
        Ok(g)
    }

    fn assemble(n: usize, mul: Vec<usize>, labels: Vec<String>) -> Result<Self, GroupError> {
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            let row = &mul[g * n..(g + 1) * n];
            inv[g] = row
                .iter()
                .position(|&x| x == 0)
                .filter(|&h| mul[h * n + g] == 0)
                .ok_or_else(|| GroupError::InvalidTable(format!("element {g} has no inverse")))?;
        }
        Ok(Self {
            order: n,
            mul,
            inv,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element(&self, label: &str) -> Result<usize, GroupError> {
        self.find(label)
            .ok_or_else(|| GroupError::UnknownLabel(label.to_string()))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|g| {
            (0..n).all(|h| {
                let gh = self.mul(g, h);
                (0..n).all(|k| self.mul(gh, k) == self.mul(g, self.mul(h, k)))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Conjugacy classes sorted by their smallest element; each class is
    /// sorted ascending. The identity class comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in self.elements() {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conj(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Relabels elements: new index of old element `g` is `perm[g]`.
    /// `perm[0]` must be 0.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "identity must stay at index 0");
        let n = self.order;
        let mut old_of = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            old_of[new] = old;
        }
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = perm[self.mul(old_of[i], old_of[j])];
            }
        }
        let labels = (0..n).map(|k| self.labels[old_of[k]].clone()).collect();
        Self::assemble(n, mul, labels).expect("relabeling preserves group axioms")
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

/// An Ad-stable subset `C` of a group, not containing the identity. Its
/// members index the left-invariant 1-forms `E_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdSet {
    group: Arc<GroupTable>,
    members: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl AdSet {
    /// Validates `members` (order irrelevant, duplicates removed).
    pub fn new(group: Arc<GroupTable>, members: &[usize]) -> Result<Self, GroupError> {
        if members.is_empty() {
            return Err(GroupError::EmptySubset);
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= group.order()) {
            return Err(GroupError::UnknownElement(bad));
        }
        if members.contains(&group.identity()) {
            return Err(GroupError::ContainsIdentity);
        }
        let mut position = vec![None; group.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m] = Some(i);
        }
        for &a in &members {
            for g in group.elements() {
                let c = group.conj(g, a);
                if position[c].is_none() {
                    return Err(GroupError::NotAdStable {
                        member: group.label(a).to_string(),
                        by: group.label(g).to_string(),
                        conjugate: group.label(c).to_string(),
                    });
                }
            }
        }
        Ok(Self {
            group,
            members,
            position,
        })
    }

    /// The `index`-th nontrivial conjugacy class (0-based, in the order of
    /// [`GroupTable::conjugacy_classes`] with the identity class skipped).
    pub fn from_class_index(group: Arc<GroupTable>, index: usize) -> Option<Self> {
        let classes = group.conjugacy_classes();
        let class = classes.get(index + 1)?.clone();
        Self::new(group, &class).ok()
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Element at position `i`.
    #[inline]
    pub fn element(&self, i: usize) -> usize {
        self.members[i]
    }

    /// Position of element `a`, if it is a member.
    #[inline]
    pub fn position(&self, a: usize) -> Option<usize> {
        self.position[a]
    }

    pub fn contains(&self, a: usize) -> bool {
        self.position[a].is_some()
    }

    /// Position of `b⁻¹ a b` given positions of `a` and `b`.
    #[inline]
    pub fn conj_inv(&self, b: usize, a: usize) -> usize {
        let g = &self.group;
        let (ea, eb) = (self.members[a], self.members[b]);
        self.position[g.conj(g.inv(eb), ea)].expect("Ad-stable")
    }

    /// Position of `b a b⁻¹` given positions of `a` and `b`.
    #[inline]
    pub fn conj_by(&self, b: usize, a: usize) -> usize {
        let g = &self.group;
        self.position[g.conj(self.members[b], self.members[a])].expect("Ad-stable")
    }

    /// Position of `g a g⁻¹` for an arbitrary group element `g`.
    #[inline]
    pub fn conj_by_element(&self, g: usize, a: usize) -> usize {
        self.position[self.group.conj(g, self.members[a])].expect("Ad-stable")
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&m| self.group.label(m)).collect()
    }

    /// Product `ab` (group element) of the members at positions `a`, `b`.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.group.mul(self.members[a], self.members[b])
    }
}
