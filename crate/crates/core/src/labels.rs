use std::collections::BTreeMap;

use crate::perm::Permutation;

/// Dictionary between identifiers and the points `1..=m` used by the
/// permutation kernel. Point `i` is the `i`-th identifier in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceIndex {
    ids: Vec<String>,
    points: BTreeMap<String, usize>,
}

impl FaceIndex {
    pub fn new<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        ids.sort();
        ids.dedup();
        let points = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i + 1))
            .collect();
        FaceIndex { ids, points }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn point(&self, id: &str) -> Option<usize> {
        self.points.get(id).copied()
    }

    pub fn id(&self, point: usize) -> &str {
        &self.ids[point - 1]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// Cycle notation with identifiers in place of points.
    pub fn cycle_string(&self, p: &Permutation) -> String {
        p.to_cycle_string_with(|x| self.id(x).to_string())
    }
}
