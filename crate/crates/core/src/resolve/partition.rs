use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set partition of `0..n` in canonical form: every block sorted, blocks
/// ordered by their smallest element. Block order carries no meaning.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates that `blocks` are nonempty, disjoint and cover `0..n` where
    /// `n` is the total number of elements.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for {n} elements"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        Ok(Self::canonical(blocks))
    }

    /// Partition from a block label per vertex; labels need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        Self::canonical(by_label.into_values().collect())
    }

    /// Every vertex alone.
    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    fn canonical(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of elements partitioned.
    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index per vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                labels[v] = i;
            }
        }
        labels
    }
}

impl TryFrom<Vec<Vec<usize>>> for VertexPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        VertexPartition::new(blocks)
    }
}

impl From<VertexPartition> for Vec<Vec<usize>> {
    fn from(p: VertexPartition) -> Self {
        p.blocks
    }
}

impl std::fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let items: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = VertexPartition::new(vec![vec![3, 1], vec![0], vec![2]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(p.labels(), vec![0, 1, 2, 1]);
        assert_eq!(p.to_string(), "{{0}, {1,3}, {2}}");
        assert_eq!(VertexPartition::from_labels(&[5, 2, 2, 5]).blocks(), &[vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn rejects_malformed() {
        assert!(VertexPartition::new(vec![vec![0, 1], vec![]]).is_err());
        assert!(VertexPartition::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(VertexPartition::new(vec![vec![0, 3], vec![1]]).is_err());
    }
}
