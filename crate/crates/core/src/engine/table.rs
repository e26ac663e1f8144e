//! Hilbert function tables.
//!
//! Row `a` of the table is the Hilbert function of `M_a = k[x_1..x_a]/I_a`,
//! where `I_a` is generated by the generators of `I` that only involve the
//! first `a` variables (in a chosen [`VariableOrder`]). Multiplication by
//! `x_a` gives the exact sequence
//!
//! ```text
//! 0 -> (0:x_a)(-1) -> M_a(-1) -> M_a -> M_{a-1} -> 0
//! ```
//!
//! so `HF(M_a, b) = HF(M_{a-1}, b) + HF(M_a, b - 1) - HF((0:x_a), b - 1)`.
//! The annihilator `(0:x_a)` is generated by `q_j = p_j / x_a` for the
//! generators `p_j` new at stage `a`, and splits as a sum of shifted quotient
//! rings in the first `a - 1` variables (see [`annihilator_decomposition`]).

use num_bigint::BigInt;

use super::{Engine, HfError, MethodKind};
use crate::monomial::{table_key, Monomial, MonomialIdeal, VariableOrder};
use crate::pascal::{pascal_row, shifted, Count};

/// One summand `HF(k[x_1..x_{a-1}]/<m_1j, ..., m_(j-1)j>)(-deg q_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorTerm {
    /// 0-based position of `p_j` in the re-indexed generator list.
    pub generator: usize,
    /// `q_j = p_j / x_a`, in order coordinates and arity `a`.
    pub quotient: Monomial,
    /// The syzygies `m_1j, ..., m_(j-1)j` as computed, in arity `a - 1`.
    pub syzygies: MonomialIdeal,
    /// `syzygies` minimalized.
    pub ideal: MonomialIdeal,
    /// `deg q_j`.
    pub shift: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorDecomposition {
    /// The stage `a` (1-based) whose variable `x_a` is multiplied by.
    pub stage: usize,
    /// `Some(deg q_1)` iff the first generator overall is new at this stage.
    /// The matching summand is the free module `k[x_1..x_{a-1}](-deg q_1)`.
    pub leading_shift: Option<u64>,
    pub terms: Vec<AnnihilatorTerm>,
}

impl AnnihilatorDecomposition {
    /// 1 when the first generator contributes the free summand, else 0.
    pub fn delta(&self) -> u8 {
        u8::from(self.leading_shift.is_some())
    }

    /// True when no generator is new at this stage; the annihilator is 0.
    pub fn is_zero(&self) -> bool {
        self.leading_shift.is_none() && self.terms.is_empty()
    }

    /// `HF((0:x_a), b)` for `b = 0..=b_max`, sub-quotients evaluated by the
    /// engine's auto method.
    pub fn evaluate(&self, engine: &mut Engine, b_max: usize) -> Result<Vec<Count>, HfError> {
        let arity = self.stage - 1;
        let mut acc = vec![Count::default(); b_max + 1];
        if let Some(shift) = self.leading_shift {
            let free = pascal_row(arity, b_max);
            add_shifted(&mut acc, &free, shift);
        }
        for term in &self.terms {
            if term.shift > b_max as u64 {
                continue;
            }
            let values = engine.hf(&term.ideal, b_max - term.shift as usize, MethodKind::Auto)?;
            add_shifted(&mut acc, &values, term.shift);
        }
        Ok(acc)
    }
}

fn add_shifted(acc: &mut [Count], values: &[Count], shift: u64) {
    for (b, slot) in acc.iter_mut().enumerate() {
        if let Some(v) = shifted(values, b, shift) {
            *slot += v;
        }
    }
}

/// Checks the two re-indexing criteria on generators in order coordinates:
/// stages never decrease, and within one stage the exponent of the stage
/// variable never decreases.
fn check_reindexed(gens: &[Monomial]) -> Result<(), HfError> {
    for (pos, pair) in gens.windows(2).enumerate() {
        if table_key(&pair[0]) > table_key(&pair[1]) {
            return Err(HfError::NotReindexed { position: pos + 1 });
        }
    }
    Ok(())
}

/// Decomposes `HF((0:x_a)_{M_a})` into shifted Hilbert functions of quotient
/// rings in `a - 1` variables.
///
/// `ideal` must already satisfy [`MonomialIdeal::reindex_for_table`] for
/// `order`; `stage` is 1-based.
pub fn annihilator_decomposition(
    ideal: &MonomialIdeal,
    order: &VariableOrder,
    stage: usize,
) -> Result<AnnihilatorDecomposition, HfError> {
    if order.arity() != ideal.arity() {
        return Err(crate::monomial::MonomialError::ArityMismatch {
            left: ideal.arity(),
            right: order.arity(),
        }
        .into());
    }
    if stage == 0 || stage > ideal.arity() {
        return Err(crate::monomial::MonomialError::StageOutOfRange {
            stage,
            arity: ideal.arity(),
        }
        .into());
    }
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| g.permuted(order))
        .collect();
    check_reindexed(&gens)?;
    decompose(&gens, stage)
}

/// Core of [`annihilator_decomposition`] for generators already in order
/// coordinates and re-indexed.
fn decompose(gens: &[Monomial], stage: usize) -> Result<AnnihilatorDecomposition, HfError> {
    let var = stage - 1;
    let mut leading_shift = None;
    let mut terms = Vec::new();
    for (j, pj) in gens.iter().enumerate() {
        if pj.stage() != stage {
            continue;
        }
        let qj = pj
            .divide_by_var(var)
            .expect("x_a divides a stage-a generator");
        if j == 0 {
            leading_shift = Some(qj.degree());
            continue;
        }
        let mut syzygies = Vec::with_capacity(j);
        for (i, pi) in gens[..j].iter().enumerate() {
            let m = pi.syzygy_quotient_unchecked(pj);
            if m.exponent(var) != 0 {
                return Err(HfError::SyzygyInvolvesStageVariable {
                    i: i + 1,
                    j: j + 1,
                    stage,
                });
            }
            if let Some(qi) = (pi.stage() == stage)
                .then(|| pi.divide_by_var(var))
                .flatten()
            {
                debug_assert_eq!(m, qi.syzygy_quotient_unchecked(&qj));
            }
            syzygies.push(m.truncate(var));
        }
        let syzygies = MonomialIdeal::new(var, syzygies).expect("uniform arity");
        terms.push(AnnihilatorTerm {
            generator: j,
            shift: qj.degree(),
            quotient: qj,
            ideal: syzygies.minimalize(),
            syzygies,
        });
    }
    Ok(AnnihilatorDecomposition {
        stage,
        leading_shift,
        terms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// Number of variables, 1-based.
    pub stage: usize,
    /// `I_a` in order coordinates, arity `stage`.
    pub ideal: MonomialIdeal,
    /// `HF((0:x_a), b)`; all zero when no generator is new at this stage.
    pub annihilator: Vec<Count>,
    pub values: Vec<Count>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    order: VariableOrder,
    /// The input ideal after re-indexing, in its original coordinates.
    reindexed: MonomialIdeal,
    rows: Vec<TableRow>,
}

impl HilbertTable {
    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn reindexed(&self) -> &MonomialIdeal {
        &self.reindexed
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    /// Values of row `a` (1-based).
    pub fn row(&self, a: usize) -> Option<&[Count]> {
        self.rows
            .get(a.checked_sub(1)?)
            .map(|r| r.values.as_slice())
    }

    /// Index of the last stage that introduces a generator (`d`); rows from
    /// here on are fixed by the order-free recurrence.
    pub fn last_generator_stage(&self) -> usize {
        self.reindexed
            .generators()
            .iter()
            .map(|g| g.permuted(&self.order).stage())
            .max()
            .unwrap_or(0)
    }
}

fn pad_arity(ideal: &MonomialIdeal, arity: usize) -> MonomialIdeal {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.resize(arity, 0);
            Monomial::new(e).expect("padding keeps the degree")
        })
        .collect();
    MonomialIdeal::new(arity, gens).expect("uniform arity")
}

pub(super) fn build_table(
    engine: &mut Engine,
    ideal: &MonomialIdeal,
    order: &VariableOrder,
    a_max: usize,
    b_max: usize,
) -> Result<HilbertTable, HfError> {
    let reindexed = ideal.reindex_for_table(order)?;
    let gens: Vec<Monomial> = reindexed
        .generators()
        .iter()
        .map(|g| g.permuted(order))
        .collect();
    let arity = ideal.arity();
    let full = MonomialIdeal::new(arity, gens.clone()).expect("uniform arity");
    let zeros = vec![Count::default(); b_max + 1];
    let mut rows: Vec<TableRow> = Vec::with_capacity(a_max);

    for a in 1..=a_max {
        let row_ideal = if a <= arity {
            full.restrict_prefix(a)
        } else {
            pad_arity(&full, a)
        };
        let (values, annihilator) = if full.is_unit() {
            (zeros.clone(), zeros.clone())
        } else {
            let annihilator = if a <= arity {
                decompose(&gens, a)?.evaluate(engine, b_max)?
            } else {
                zeros.clone()
            };
            let values = if a == 1 {
                engine.hf(&row_ideal, b_max, MethodKind::Auto)?
            } else {
                let prev = &rows[a - 2].values;
                let mut values: Vec<Count> = Vec::with_capacity(b_max + 1);
                for b in 0..=b_max {
                    let mut v = BigInt::from(prev[b].clone());
                    if b > 0 {
                        v += BigInt::from(values[b - 1].clone());
                        v -= BigInt::from(annihilator[b - 1].clone());
                    }
                    values.push(v.to_biguint().expect("table entry went negative"));
                }
                values
            };
            (values, annihilator)
        };
        rows.push(TableRow {
            stage: a,
            ideal: row_ideal,
            annihilator,
            values,
        });
    }
    Ok(HilbertTable {
        order: order.clone(),
        reindexed,
        rows,
    })
}

/// Hilbert function table with a fresh engine.
pub fn hf_table(
    ideal: &MonomialIdeal,
    order: &VariableOrder,
    a_max: usize,
    b_max: usize,
) -> Result<HilbertTable, HfError> {
    Engine::default().table(ideal, order, a_max, b_max)
}
