use super::monomial::Monomial;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Grevlex,
    Lex,
}

/// A run of consecutive variables compared with its own sub-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderBlock {
    pub len: usize,
    pub kind: BlockKind,
}

/// Monomial orders. Grevlex is graded by the ring weights; block orders compare
/// the first block that differs, which makes them elimination orders for every
/// leading group of blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(Vec<OrderBlock>),
}

fn cmp_grevlex(a: &[u16], b: &[u16], w: &[u32]) -> Ordering {
    let da: u32 = a.iter().zip(w).map(|(&e, &w)| e as u32 * w).sum();
    let db: u32 = b.iter().zip(w).map(|(&e, &w)| e as u32 * w).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order: the first `first` variables form a block that
    /// dominates, the remaining ones use `rest` (flattened if it is itself a
    /// block order).
    pub fn eliminating(first: usize, first_kind: BlockKind, rest_len: usize, rest: &MonomialOrder) -> MonomialOrder {
        let mut blocks = vec![OrderBlock { len: first, kind: first_kind }];
        match rest {
            MonomialOrder::Grevlex => blocks.push(OrderBlock { len: rest_len, kind: BlockKind::Grevlex }),
            MonomialOrder::Lex => blocks.push(OrderBlock { len: rest_len, kind: BlockKind::Lex }),
            MonomialOrder::Block(bs) => blocks.extend(bs.iter().copied()),
        }
        MonomialOrder::Block(blocks)
    }

    pub fn validate(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Block(bs) => bs.iter().map(|b| b.len).sum::<usize>() == nvars && bs.iter().all(|b| b.len > 0),
            _ => true,
        }
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Grevlex => cmp_grevlex(a, b, weights),
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for blk in blocks {
                    let end = start + blk.len;
                    let o = match blk.kind {
                        BlockKind::Grevlex => cmp_grevlex(&a[start..end], &b[start..end], &weights[start..end]),
                        BlockKind::Lex => cmp_lex(&a[start..end], &b[start..end]),
                    };
                    if o != Ordering::Equal {
                        return o;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(bs) => {
                let parts: Vec<String> = bs
                    .iter()
                    .map(|b| format!("{}:{}", if b.kind == BlockKind::Lex { "lex" } else { "grevlex" }, b.len))
                    .collect();
                format!("block({})", parts.join(","))
            }
        }
    }
}
