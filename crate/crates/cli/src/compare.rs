//! Cross-checking the four methods degree by degree.

use hilbert_core::{Count, MethodKind};

pub const METHODS: [MethodKind; 4] = [
    MethodKind::Oracle,
    MethodKind::LcmLattice,
    MethodKind::Syzygy,
    MethodKind::Table,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    /// One value per method, `None` when that method returned too few values.
    pub values: Vec<Option<Count>>,
}

impl DegreeRow {
    pub fn agrees(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1]) && self.values.iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub methods: Vec<MethodKind>,
    pub rows: Vec<DegreeRow>,
}

impl Comparison {
    pub fn agree(&self) -> bool {
        self.rows.iter().all(DegreeRow::agrees)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &DegreeRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }
}

pub fn compare(results: &[(MethodKind, Vec<Count>)]) -> Comparison {
    let len = results.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let rows = (0..len)
        .map(|degree| DegreeRow {
            degree,
            values: results
                .iter()
                .map(|(_, v)| v.get(degree).cloned())
                .collect(),
        })
        .collect();
    Comparison {
        methods: results.iter().map(|(m, _)| *m).collect(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u64]) -> Vec<Count> {
        v.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn agreement_and_diffs() {
        let same = compare(&[
            (MethodKind::Oracle, seq(&[1, 3, 5])),
            (MethodKind::Syzygy, seq(&[1, 3, 5])),
        ]);
        assert!(same.agree());
        let diff = compare(&[
            (MethodKind::Oracle, seq(&[1, 3, 5])),
            (MethodKind::Syzygy, seq(&[1, 3, 6])),
        ]);
        assert!(!diff.agree());
        assert_eq!(
            diff.disagreements().map(|r| r.degree).collect::<Vec<_>>(),
            [2]
        );
        let short = compare(&[
            (MethodKind::Oracle, seq(&[1, 3])),
            (MethodKind::Syzygy, seq(&[1])),
        ]);
        assert_eq!(short.disagreements().count(), 1);
    }
}
