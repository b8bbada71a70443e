//! Bounded search for S-equivalence witnesses.
//!
//! S-equivalence of Seifert matrices is not known to be efficiently decidable,
//! so the search is honest about its limits: it answers `Distinct` only when
//! an abelian invariant differs, `Equivalent` only with a replayable move
//! sequence, and `Unknown` otherwise.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{EnlargementKind, InvariantKind, Reduction, SeifertMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_SIZE: usize = 6;
pub const DEFAULT_MAX_ENTRY: u64 = 4;
pub const DEFAULT_MAX_NODES: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest matrix size the search may enlarge to.
    pub max_size: usize,
    /// Largest absolute entry allowed in an explored matrix.
    pub max_entry: u64,
    /// Number of distinct matrices the breadth-first search may visit.
    pub max_nodes: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_size: DEFAULT_MAX_SIZE,
            max_entry: DEFAULT_MAX_ENTRY,
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

/// One step of an S-equivalence witness. Indices are 0-based.
///
/// The derived ordering is the canonical move order used to break ties
/// between equally short witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Congruence by the transvection `I + c e_target e_source^T`, `c = +-1`.
    Add { target: usize, source: usize, coeff: i8 },
    /// Congruence by a transposition matrix.
    Swap(usize, usize),
    /// Congruence by `diag(.., -1, ..)`.
    Negate(usize),
    /// Congruence by a permutation matrix: entry `(i, j)` becomes entry `(perm[i], perm[j])`.
    Permute(Vec<usize>),
    ColumnEnlarge { xi: Vec<BigInt>, x: BigInt },
    RowEnlarge { eta: Vec<BigInt>, x: BigInt },
    /// The reduction chosen by [`SeifertMatrix::try_reduce`].
    Reduce,
}

impl Move {
    pub fn apply(&self, m: &SeifertMatrix) -> Result<SeifertMatrix> {
        let n = m.size();
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::SizeMismatch { expected: n, found: i + 1 })
            }
        };
        let mut w = m.matrix().clone();
        match self {
            Move::Add { target, source, coeff } => {
                check(*target)?;
                check(*source)?;
                if target == source || coeff.abs() != 1 {
                    return Err(Error::InvalidMove(self.to_string()));
                }
                w.congruence_add(*target, *source, &BigInt::from(*coeff));
            }
            Move::Swap(a, b) => {
                check(*a)?;
                check(*b)?;
                w.congruence_swap(*a, *b);
            }
            Move::Negate(i) => {
                check(*i)?;
                w.congruence_negate(*i);
            }
            Move::Permute(perm) => {
                let mut seen = vec![false; n];
                if perm.len() != n {
                    return Err(Error::SizeMismatch { expected: n, found: perm.len() });
                }
                for &p in perm {
                    check(p)?;
                    if std::mem::replace(&mut seen[p], true) {
                        return Err(Error::InvalidMove(format!("repeated index {p} in permutation")));
                    }
                }
                w = w.permuted(perm);
            }
            Move::ColumnEnlarge { xi, x } => return m.column_enlarge(xi, x),
            Move::RowEnlarge { eta, x } => return m.row_enlarge(eta, x),
            Move::Reduce => {
                return m
                    .try_reduce()
                    .ok_or_else(|| Error::InvalidMove("no enlargement block to reduce".to_string()))
            }
        }
        Ok(SeifertMatrix(w))
    }
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Add { target, source, coeff } => write!(f, "add {target} {source} {coeff}"),
            Move::Swap(a, b) => write!(f, "swap {a} {b}"),
            Move::Negate(i) => write!(f, "negate {i}"),
            Move::Permute(p) => {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "permute {}", s.join(" "))
            }
            Move::ColumnEnlarge { xi, x } => write!(f, "column-enlarge x={x} xi=[{}]", join_ints(xi)),
            Move::RowEnlarge { eta, x } => write!(f, "row-enlarge x={x} eta=[{}]", join_ints(eta)),
            Move::Reduce => write!(f, "reduce"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchVerdict {
    /// A move sequence taking the first matrix to the second.
    Equivalent(Vec<Move>),
    Distinct(InvariantKind),
    Unknown { explored: usize },
}

/// Applies a move sequence in order.
pub fn replay(m: &SeifertMatrix, moves: &[Move]) -> Result<SeifertMatrix> {
    moves.iter().try_fold(m.clone(), |acc, mv| mv.apply(&acc))
}

/// Decides S-equivalence within a budget.
///
/// Both matrices are first reduced greedily. A breadth-first search over
/// elementary congruences, small enlargements and reductions then connects
/// the reduced forms; successors are expanded in canonical move order, so the
/// middle segment is the lexicographically least among shortest paths. The
/// witness is the first matrix's reductions, the search path, then the
/// inverses of the second matrix's reductions in reverse.
pub fn bounded_sequiv_search(
    m1: &SeifertMatrix,
    m2: &SeifertMatrix,
    budget: SearchBudget,
) -> SearchVerdict {
    if let Some(kind) = m1.invariants().first_difference(&m2.invariants()) {
        return SearchVerdict::Distinct(kind);
    }

    let (r1, head) = reduce_fully(m1);
    let (r2, tail_reductions) = reduce_fully(m2);
    let mut witness: Vec<Move> = head.iter().map(|_| Move::Reduce).collect();

    let max_entry = BigInt::from(budget.max_entry)
        .max(r1.matrix().max_abs_entry())
        .max(r2.matrix().max_abs_entry());
    let max_size = budget.max_size.max(r1.size()).max(r2.size());
    match bfs(&r1, &r2, max_size, &max_entry, budget.max_nodes) {
        Ok(path) => witness.extend(path),
        Err(explored) => return SearchVerdict::Unknown { explored },
    }

    for red in tail_reductions.iter().rev() {
        witness.extend(undo_reduction(red));
    }
    debug_assert_eq!(replay(m1, &witness).as_ref(), Ok(m2));
    SearchVerdict::Equivalent(witness)
}

fn reduce_fully(m: &SeifertMatrix) -> (SeifertMatrix, Vec<Reduction>) {
    let mut cur = m.clone();
    let mut steps = Vec::new();
    while let Some(r) = cur.find_reduction() {
        cur = r.reduced.clone();
        steps.push(r);
    }
    (cur, steps)
}

/// Moves rebuilding the matrix a reduction was taken from.
fn undo_reduction(r: &Reduction) -> Vec<Move> {
    let enlarge = match r.kind {
        EnlargementKind::Column => Move::ColumnEnlarge { xi: r.vector.clone(), x: r.x.clone() },
        EnlargementKind::Row => Move::RowEnlarge { eta: r.vector.clone(), x: r.x.clone() },
    };
    let mut inverse = vec![0; r.perm.len()];
    for (i, &p) in r.perm.iter().enumerate() {
        inverse[p] = i;
    }
    let mut out = vec![enlarge];
    if inverse.iter().enumerate().any(|(i, &p)| i != p) {
        out.push(Move::Permute(inverse));
    }
    out
}

fn successors(m: &SeifertMatrix, max_size: usize) -> Vec<Move> {
    let n = m.size();
    let mut out = Vec::new();
    for target in 0..n {
        for source in 0..n {
            if target != source {
                for coeff in [-1i8, 1] {
                    out.push(Move::Add { target, source, coeff });
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            out.push(Move::Swap(a, b));
        }
    }
    out.extend((0..n).map(Move::Negate));
    if n + 2 <= max_size {
        let mut vectors = vec![vec![BigInt::zero(); n]];
        for i in 0..n {
            for s in [-1, 1] {
                let mut v = vec![BigInt::zero(); n];
                v[i] = BigInt::from(s);
                vectors.push(v);
            }
        }
        for x in [-1, 0, 1].map(BigInt::from) {
            for v in &vectors {
                out.push(Move::ColumnEnlarge { xi: v.clone(), x: x.clone() });
                out.push(Move::RowEnlarge { eta: v.clone(), x: x.clone() });
            }
        }
    }
    if m.find_reduction().is_some() {
        out.push(Move::Reduce);
    }
    out.sort();
    out
}

/// Shortest path from `start` to `goal`; `Err(explored)` when the node budget runs out.
fn bfs(
    start: &SeifertMatrix,
    goal: &SeifertMatrix,
    max_size: usize,
    max_entry: &BigInt,
    max_nodes: usize,
) -> std::result::Result<Vec<Move>, usize> {
    if start == goal {
        return Ok(Vec::new());
    }
    // node -> (parent node, move from parent)
    let mut nodes: Vec<(SeifertMatrix, Option<(usize, Move)>)> = vec![(start.clone(), None)];
    let mut seen: HashMap<SeifertMatrix, usize> = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(idx) = queue.pop_front() {
        let current = nodes[idx].0.clone();
        for mv in successors(&current, max_size) {
            let Ok(next) = mv.apply(&current) else { continue };
            if next.matrix().max_abs_entry() > *max_entry || seen.contains_key(&next) {
                continue;
            }
            let id = nodes.len();
            let found = next == *goal;
            seen.insert(next.clone(), id);
            nodes.push((next, Some((idx, mv))));
            if found {
                return Ok(path_to(&nodes, id));
            }
            if nodes.len() >= max_nodes {
                return Err(nodes.len());
            }
            queue.push_back(id);
        }
    }
    Err(nodes.len())
}

fn path_to(nodes: &[(SeifertMatrix, Option<(usize, Move)>)], mut id: usize) -> Vec<Move> {
    let mut path = Vec::new();
    while let Some((parent, mv)) = &nodes[id].1 {
        path.push(mv.clone());
        id = *parent;
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::IntMatrix;
    use crate::seifert::validate;

    fn trefoil() -> SeifertMatrix {
        validate(IntMatrix::from_array([[-1, 1], [0, -1]])).unwrap()
    }

    #[test]
    fn distinct_by_alexander() {
        let fig8 = validate(IntMatrix::from_array([[1, 1], [0, -1]])).unwrap();
        assert_eq!(
            bounded_sequiv_search(&trefoil(), &fig8, SearchBudget::default()),
            SearchVerdict::Distinct(InvariantKind::Alexander)
        );
    }

    #[test]
    fn one_step_reduction() {
        let m = validate(IntMatrix::from_array([[0, 1], [0, 0]])).unwrap();
        let v = bounded_sequiv_search(&m, &SeifertMatrix::empty(), SearchBudget::default());
        assert_eq!(v, SearchVerdict::Equivalent(vec![Move::Reduce]));
        let v = bounded_sequiv_search(&SeifertMatrix::empty(), &m, SearchBudget::default());
        let SearchVerdict::Equivalent(w) = v else { panic!("expected a witness") };
        assert_eq!(w.len(), 1);
        assert_eq!(replay(&SeifertMatrix::empty(), &w).unwrap(), m);
    }

    #[test]
    fn congruent_copy_is_found() {
        let a = IntMatrix::from_array([[1, 1], [0, 1]]);
        let m2 = trefoil().congruent(&a).unwrap();
        let SearchVerdict::Equivalent(w) =
            bounded_sequiv_search(&trefoil(), &m2, SearchBudget::default())
        else {
            panic!("expected a witness")
        };
        assert_eq!(replay(&trefoil(), &w).unwrap(), m2);
        assert_eq!(w, vec![Move::Add { target: 0, source: 1, coeff: 1 }]);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let a = IntMatrix::from_array([[5, 3], [3, 2]]);
        let m2 = trefoil().congruent(&a).unwrap();
        let budget = SearchBudget { max_size: 2, max_entry: 100, max_nodes: 3 };
        assert!(matches!(
            bounded_sequiv_search(&trefoil(), &m2, budget),
            SearchVerdict::Unknown { .. }
        ));
    }

    #[test]
    fn permuted_reductions_are_undone() {
        let xi: Vec<BigInt> = [1, -1].map(BigInt::from).to_vec();
        let big = trefoil().row_enlarge(&xi, &BigInt::from(2)).unwrap();
        let scrambled = SeifertMatrix(big.matrix().permuted(&[3, 0, 2, 1]));
        let SearchVerdict::Equivalent(w) =
            bounded_sequiv_search(&trefoil(), &scrambled, SearchBudget::default())
        else {
            panic!("expected a witness")
        };
        assert_eq!(replay(&trefoil(), &w).unwrap(), scrambled);
    }

    #[test]
    fn move_errors() {
        assert!(Move::Swap(0, 5).apply(&trefoil()).is_err());
        assert!(Move::Reduce.apply(&trefoil()).is_err());
        assert!(Move::Permute(vec![0, 0]).apply(&trefoil()).is_err());
        assert!(Move::Add { target: 1, source: 1, coeff: 1 }.apply(&trefoil()).is_err());
    }
}
