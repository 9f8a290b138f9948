//! Ground truth by exhaustive expansion of the game tree.
//!
//! Every random-player node branches on all `k` in `{1, ..., m}` with weight
//! `1/m`; every deterministic-player node has the single forced move. Values
//! are accumulated exactly over the whole tree. Nothing here uses the
//! recurrences of [`crate::exact`] or [`crate::steps`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::prob::{ExactProb, Rational};
use crate::sim::Player;

/// Depth limit when sub-trees are cached by `(pile, player to move)`.
pub const MEMO_DEPTH_LIMIT: usize = 14;
/// Depth limit when every path of the tree is walked.
pub const PLAIN_DEPTH_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub n: usize,
    pub d_win_prob: ExactProb,
    /// `None` for the empty pile, where no game is played.
    pub expected_r_steps: Option<Rational>,
}

/// Configurable game-tree evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    memoize: bool,
    depth_limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::memoized()
    }
}

// Value of a node: (probability the deterministic player wins,
// expected number of random-player moves from here on).
type NodeValue = (Rational, Rational);

impl Oracle {
    pub fn memoized() -> Self {
        Oracle {
            memoize: true,
            depth_limit: MEMO_DEPTH_LIMIT,
        }
    }

    /// Walks every root-to-leaf path without caching.
    pub fn exhaustive() -> Self {
        Oracle {
            memoize: false,
            depth_limit: PLAIN_DEPTH_LIMIT,
        }
    }

    pub fn with_depth_limit(self, depth_limit: usize) -> Self {
        Oracle {
            depth_limit,
            ..self
        }
    }

    pub fn depth_limit(&self) -> usize {
        self.depth_limit
    }

    pub fn is_memoized(&self) -> bool {
        self.memoize
    }

    /// Exact evaluation of a game started from `n` elements.
    ///
    /// For `n = 0` the deterministic player is credited with the win and no
    /// steps are reported.
    pub fn evaluate(&self, n: usize) -> Result<OracleResult> {
        if n > self.depth_limit {
            return Err(Error::DepthLimit {
                n,
                limit: self.depth_limit,
            });
        }
        if n == 0 {
            return Ok(OracleResult {
                n,
                d_win_prob: ExactProb::one(),
                expected_r_steps: None,
            });
        }
        let mut memo = self.memoize.then(HashMap::new);
        let (d_win, steps) = node(n, Player::Random, &mut memo)?;
        Ok(OracleResult {
            n,
            d_win_prob: ExactProb::new(d_win)?,
            expected_r_steps: Some(steps),
        })
    }

    pub fn win_prob(&self, n: usize) -> Result<ExactProb> {
        self.evaluate(n).map(|r| r.d_win_prob)
    }

    pub fn expected_steps(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            return Err(Error::EmptyPile);
        }
        self.evaluate(n)
            .map(|r| r.expected_r_steps.expect("defined for n >= 1"))
    }
}

fn node(
    pile: usize,
    to_move: Player,
    memo: &mut Option<HashMap<(usize, Player), NodeValue>>,
) -> Result<NodeValue> {
    debug_assert!(pile >= 1);
    if let Some(v) = memo.as_ref().and_then(|m| m.get(&(pile, to_move))) {
        return Ok(v.clone());
    }
    let value = match to_move {
        Player::Deterministic => {
            if pile == 1 {
                (Rational::one(), Rational::zero())
            } else {
                node(pile - 1, Player::Random, memo)?
            }
        }
        Player::Random => {
            let weight = Rational::new(BigInt::one(), BigInt::from(pile));
            let mut total_weight = Rational::zero();
            let mut d_win = Rational::zero();
            let mut steps = Rational::zero();
            for k in 1..=pile {
                total_weight += &weight;
                // this move counts as one step on every branch
                let (branch_win, branch_steps) = if k == pile {
                    (Rational::zero(), Rational::zero())
                } else {
                    node(pile - k, Player::Deterministic, memo)?
                };
                d_win += &weight * branch_win;
                steps += &weight * (Rational::one() + branch_steps);
            }
            if !total_weight.is_one() {
                return Err(Error::BranchWeightLeak {
                    pile,
                    sum: total_weight.to_string(),
                });
            }
            (d_win, steps)
        }
    };
    if let Some(m) = memo.as_mut() {
        m.insert((pile, to_move), value.clone());
    }
    Ok(value)
}

/// Deterministic player's win probability from `n` elements, using the
/// memoized oracle. Returns 1 for `n = 0`.
pub fn oracle_win_prob(n: usize) -> Result<ExactProb> {
    Oracle::memoized().win_prob(n)
}

/// Expected number of random-player moves from `n >= 1` elements.
pub fn oracle_expected_steps(n: usize) -> Result<Rational> {
    Oracle::memoized().expected_steps(n)
}
