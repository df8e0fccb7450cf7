use std::fmt;

/// Outcome of a uniform-bound check over a dyadic sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Growing,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::Growing => "growing",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence table for one bound: every grid row with its observed/claimed
/// ratio, the supremum and where it was attained, and per-dyadic-block
/// suprema. The verdict is "stable" when the ratio sup over the top dyadic
/// block is at most 1.2 times the sup over the previous block, i.e. the
/// would-be constant has stopped moving at the largest scales probed.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub lemma_id: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub ratio_sup: f64,
    /// The full row attaining `ratio_sup`.
    pub ratio_argmax: Vec<f64>,
    /// `(log2 of the block scale, ratio sup within the block)`, ascending.
    pub block_sups: Vec<(i64, f64)>,
    pub verdict: Verdict,
    /// Grid points excluded because a hypothesis of the bound fails there.
    pub skipped: Vec<String>,
    pub notes: Vec<String>,
}

pub const STABILITY_FACTOR: f64 = 1.2;

/// `true` when the last block sup has stopped growing relative to the one
/// before it. Fewer than two blocks cannot witness stability.
pub fn blocks_stable(block_sups: &[(i64, f64)]) -> bool {
    if block_sups.len() < 2 {
        return false;
    }
    let last = block_sups[block_sups.len() - 1].1;
    let prev = block_sups[block_sups.len() - 2].1;
    last <= STABILITY_FACTOR * prev
}

impl BoundCheck {
    /// Assemble a check from raw rows. `block_col` indexes the dyadic scale
    /// column (rows are grouped by its rounded base-two logarithm) and
    /// `ratio_col` the observed/claimed ratio.
    pub fn from_rows(
        lemma_id: &'static str,
        columns: Vec<&'static str>,
        rows: Vec<Vec<f64>>,
        block_col: usize,
        ratio_col: usize,
        skipped: Vec<String>,
        notes: Vec<String>,
    ) -> Self {
        let mut ratio_sup = f64::NEG_INFINITY;
        let mut ratio_argmax = Vec::new();
        let mut blocks: Vec<(i64, f64)> = Vec::new();
        let mut poisoned = false;
        for row in &rows {
            let ratio = row[ratio_col];
            if !ratio.is_finite() {
                poisoned = true;
                continue;
            }
            if ratio > ratio_sup {
                ratio_sup = ratio;
                ratio_argmax = row.clone();
            }
            let exp = row[block_col].log2().round() as i64;
            match blocks.iter_mut().find(|(e, _)| *e == exp) {
                Some((_, sup)) => *sup = sup.max(ratio),
                None => blocks.push((exp, ratio)),
            }
        }
        blocks.sort_by_key(|(e, _)| *e);
        let mut notes = notes;
        if poisoned {
            notes.push("non-finite ratio encountered; verdict forced to growing".into());
        }
        let verdict = if !poisoned && blocks_stable(&blocks) {
            Verdict::Stable
        } else {
            Verdict::Growing
        };
        BoundCheck {
            lemma_id,
            columns,
            rows,
            ratio_sup,
            ratio_argmax,
            block_sups: blocks,
            verdict,
            skipped,
            notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stability_needs_two_blocks_and_a_flat_top() {
        assert!(!blocks_stable(&[(8, 1.0)]));
        assert!(blocks_stable(&[(8, 1.0), (9, 1.1)]));
        assert!(blocks_stable(&[(8, 2.0), (9, 1.0)]));
        assert!(!blocks_stable(&[(8, 1.0), (9, 1.3)]));
        assert!(blocks_stable(&[(8, 0.0), (9, 0.0)]));
    }

    #[test]
    fn from_rows_groups_blocks_and_finds_the_argmax() {
        let rows = vec![
            vec![256.0, 0.5],
            vec![256.0, 0.8],
            vec![512.0, 0.9],
            vec![512.0, 0.7],
        ];
        let c = BoundCheck::from_rows("demo", vec!["scale", "ratio"], rows, 0, 1, vec![], vec![]);
        assert_eq!(c.ratio_sup, 0.9);
        assert_eq!(c.ratio_argmax, vec![512.0, 0.9]);
        assert_eq!(c.block_sups, vec![(8, 0.8), (9, 0.9)]);
        assert_eq!(c.verdict, Verdict::Stable);
    }

    #[test]
    fn a_growing_top_block_flips_the_verdict() {
        let rows = vec![vec![256.0, 0.5], vec![512.0, 0.8]];
        let c = BoundCheck::from_rows("demo", vec!["scale", "ratio"], rows, 0, 1, vec![], vec![]);
        assert_eq!(c.verdict, Verdict::Growing);
    }
}
