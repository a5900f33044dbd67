use super::{Below, CuModel};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Interchange form of a finite model.
///
/// `leq` lists generating pairs `[a, b]` meaning `a ≤ b`; the order is their
/// reflexive-transitive closure, so the pair listing order never matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub name: String,
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub leq: Vec<[usize; 2]>,
    pub unit: usize,
    pub top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ModelDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

/// Finite ordered abelian monoid given by its addition table and order
/// relation. Element `0` is the neutral element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCuModel {
    name: String,
    size: usize,
    add: Vec<usize>,
    leq: Vec<bool>,
    unit: usize,
    top: Option<usize>,
    labels: Vec<String>,
}

impl FiniteCuModel {
    /// Builds a model from raw tables and validates every monoid and order law.
    pub fn new(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        leq_pairs: &[[usize; 2]],
        unit: usize,
        top: Option<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let model = Self::new_unchecked(name, add, leq_pairs, unit, top, labels)?;
        model.validate()?;
        Ok(model)
    }

    /// Shape checks only. The result may violate the monoid or order laws;
    /// use [`check_axioms`](super::check_axioms) to inspect it.
    pub fn new_unchecked(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        leq_pairs: &[[usize; 2]],
        unit: usize,
        top: Option<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::Schema("model must have at least the element 0".into()));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in add.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Schema(format!("add row {i} has length {} instead of {size}", row.len())));
            }
            for &v in row {
                if v >= size {
                    return Err(Error::Schema(format!("add entry {v} in row {i} out of range")));
                }
            }
            flat.extend_from_slice(row);
        }
        if unit >= size {
            return Err(Error::Schema(format!("unit {unit} out of range")));
        }
        if let Some(t) = top {
            if t >= size {
                return Err(Error::Schema(format!("top {t} out of range")));
            }
        }
        let labels = match labels {
            Some(l) if l.len() != size => {
                return Err(Error::Schema(format!("{} labels for {size} elements", l.len())))
            }
            Some(l) => l,
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &[a, b] in leq_pairs {
            if a >= size || b >= size {
                return Err(Error::Schema(format!("leq pair [{a}, {b}] out of range")));
            }
            leq[a * size + b] = true;
        }
        // Warshall closure
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Ok(FiniteCuModel { name: name.into(), size, add: flat, leq, unit, top, labels })
    }

    pub fn from_document(doc: &ModelDocument) -> Result<Self> {
        if doc.add.len() != doc.size {
            return Err(Error::Schema(format!("size is {} but add has {} rows", doc.size, doc.add.len())));
        }
        Self::new(doc.name.clone(), doc.add.clone(), &doc.leq, doc.unit, doc.top, doc.labels.clone())
    }

    /// Parses and validates a model file.
    pub fn load(text: &str) -> Result<Self> {
        Self::from_document(&ModelDocument::from_json(text)?)
    }

    /// Canonical document: the full order relation, pairs sorted lexicographically.
    pub fn to_document(&self) -> ModelDocument {
        let n = self.size;
        let add = (0..n).map(|i| self.add[i * n..(i + 1) * n].to_vec()).collect();
        let mut leq = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.leq[a * n + b] {
                    leq.push([a, b]);
                }
            }
        }
        let default_labels = self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string());
        ModelDocument {
            name: self.name.clone(),
            size: n,
            add,
            leq,
            unit: self.unit,
            top: self.top,
            labels: if default_labels { None } else { Some(self.labels.clone()) },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn with_unit(mut self, unit: usize) -> Result<Self> {
        if unit >= self.size {
            return Err(Error::OutOfRange(unit.to_string()));
        }
        self.unit = unit;
        Ok(self)
    }

    pub fn label_of(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn top_index(&self) -> Option<usize> {
        self.top
    }

    /// Index of the element carrying `label`.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub(crate) fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub(crate) fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    fn validate(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                if a != b && self.le(a, b) && self.le(b, a) {
                    return Err(Error::NotAntisymmetric { a: a.min(b), b: a.max(b) });
                }
            }
        }
        for a in 0..n {
            if self.sum(0, a) != a || self.sum(a, 0) != a {
                return Err(Error::NotNeutral(a));
            }
            if !self.le(0, a) {
                return Err(Error::NotPositive(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let (ab, ba) = (self.sum(a, b), self.sum(b, a));
                if ab != ba {
                    return Err(Error::NotCommutative { a, b, ab, ba });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.sum(self.sum(a, b), c) != self.sum(a, self.sum(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // a ≤ b ⇒ a + c ≤ b + c is equivalent to the two-sided law given transitivity
        for a in 0..n {
            for b in 0..n {
                if !self.le(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !self.le(self.sum(a, c), self.sum(b, c)) {
                        return Err(Error::OrderIncompatible { a, b, c, d: c });
                    }
                }
            }
        }
        if let Some(t) = self.top {
            for x in 0..n {
                if !self.le(x, t) || self.sum(x, t) != t {
                    return Err(Error::BadTop { top: t, x });
                }
            }
        }
        Ok(())
    }
}

impl CuModel for FiniteCuModel {
    type Elem = usize;

    fn zero(&self) -> usize {
        0
    }

    fn unit(&self) -> usize {
        self.unit
    }

    fn top(&self) -> Option<usize> {
        self.top
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.sum(*a, *b)
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.le(*a, *b)
    }

    fn elements(&self) -> Vec<usize> {
        (0..self.size).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn label(&self, x: &usize) -> String {
        self.labels.get(*x).cloned().unwrap_or_else(|| format!("#{x}"))
    }

    fn below(&self, u: &usize) -> Result<Below<usize>> {
        Ok(Below { elements: (0..self.size).filter(|x| self.le(*x, *u)).collect(), exhaustive: true })
    }

    fn contains(&self, x: &usize) -> bool {
        *x < self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_chain() -> Vec<Vec<usize>> {
        // {0, a, b} with a + a = b, b absorbing
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]
    }

    #[test]
    fn small_chain_is_valid() {
        let m = FiniteCuModel::new("chain", three_chain(), &[[0, 1], [1, 2]], 1, Some(2), None).unwrap();
        assert!(m.le(0, 2));
        assert_eq!(m.sum(1, 1), 2);
    }

    #[test]
    fn non_commutative_is_rejected_with_witness() {
        let mut add = three_chain();
        add[1][2] = 1;
        let err = FiniteCuModel::new("bad", add, &[[0, 1], [1, 2]], 1, Some(2), None).unwrap_err();
        match err {
            Error::NotCommutative { a, b, ab, ba } => {
                assert_eq!((a, b, ab, ba), (1, 2, 1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_cycle_is_rejected() {
        let err = FiniteCuModel::new("cyc", three_chain(), &[[0, 1], [1, 2], [2, 1]], 1, Some(2), None)
            .unwrap_err();
        assert!(matches!(err, Error::NotAntisymmetric { a: 1, b: 2 }));
    }

    #[test]
    fn pair_order_does_not_matter() {
        let a = FiniteCuModel::new("c", three_chain(), &[[1, 2], [0, 1]], 1, Some(2), None).unwrap();
        let b = FiniteCuModel::new("c", three_chain(), &[[0, 1], [1, 2], [0, 2]], 1, Some(2), None).unwrap();
        assert_eq!(a.to_document(), b.to_document());
    }

    #[test]
    fn document_round_trip() {
        let m = FiniteCuModel::new("c", three_chain(), &[[0, 1], [1, 2]], 1, Some(2), Some(vec!["0".into(), "a".into(), "b".into()]))
            .unwrap();
        let text = m.to_document().to_json();
        let back = FiniteCuModel::load(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.element("b"), Some(2));
    }

    #[test]
    fn malformed_schema() {
        assert!(matches!(FiniteCuModel::load("{\"name\": 3}"), Err(Error::Schema(_))));
        let err = FiniteCuModel::new("x", vec![vec![0, 1], vec![1]], &[], 0, None, None).unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn one_element_model_is_accepted() {
        let m = FiniteCuModel::new("trivial", vec![vec![0]], &[], 0, Some(0), None).unwrap();
        assert_eq!(m.size(), 1);
    }
}
