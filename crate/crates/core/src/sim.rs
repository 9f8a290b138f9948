//! Literal playouts of the game and Monte Carlo estimates of `D_n`.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::{splitmix64, DrawSource, Xoshiro256StarStar};

/// The two players. The random player always moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    #[serde(rename = "R")]
    Random,
    #[serde(rename = "D")]
    Deterministic,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Random => Player::Deterministic,
            Player::Deterministic => Player::Random,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Random => "R",
            Player::Deterministic => "D",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub player: Player,
    pub removed: u64,
    pub remaining: u64,
}

/// Full record of one game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameTranscript {
    pub initial_n: u64,
    pub moves: Vec<Move>,
    pub winner: Player,
    /// Number of moves made by the random player.
    pub r_steps: u64,
}

impl GameTranscript {
    /// Checks the rules against the recorded moves.
    pub fn is_legal(&self) -> bool {
        let mut pile = self.initial_n;
        let mut expected = Player::Random;
        for m in &self.moves {
            let ok_size = match m.player {
                Player::Random => (1..=pile).contains(&m.removed),
                Player::Deterministic => m.removed == 1,
            };
            if m.player != expected || !ok_size || m.remaining != pile - m.removed {
                return false;
            }
            pile = m.remaining;
            expected = expected.other();
        }
        let r_moves = self
            .moves
            .iter()
            .filter(|m| m.player == Player::Random)
            .count() as u64;
        pile == 0
            && self.moves.last().map(|m| m.player) == Some(self.winner)
            && r_moves == self.r_steps
    }
}

/// Plays one game from `n` elements.
///
/// The random player draws `k` uniformly from `{1, ..., m}` where `m` is the
/// current pile; the deterministic player removes one element. Whoever empties
/// the pile wins.
pub fn play_game<S: DrawSource>(n: u64, rng: &mut S) -> Result<GameTranscript> {
    if n == 0 {
        return Err(Error::EmptyPile);
    }
    let mut moves = Vec::new();
    let mut pile = n;
    let mut player = Player::Random;
    let mut r_steps = 0;
    loop {
        let removed = match player {
            Player::Random => {
                r_steps += 1;
                rng.draw(pile)
            }
            Player::Deterministic => 1,
        };
        pile -= removed;
        moves.push(Move {
            player,
            removed,
            remaining: pile,
        });
        if pile == 0 {
            return Ok(GameTranscript {
                initial_n: n,
                moves,
                winner: player,
                r_steps,
            });
        }
        player = player.other();
    }
}

/// Same draws as [`play_game`] without recording the moves.
/// Returns the winner and the random player's move count.
pub(crate) fn play_outcome<S: DrawSource>(n: u64, rng: &mut S) -> (Player, u64) {
    debug_assert!(n >= 1);
    let mut pile = n;
    let mut r_steps = 0;
    loop {
        r_steps += 1;
        pile -= rng.draw(pile);
        if pile == 0 {
            return (Player::Random, r_steps);
        }
        pile -= 1;
        if pile == 0 {
            return (Player::Deterministic, r_steps);
        }
    }
}

/// Confidence levels with a tabulated two-sided normal quantile.
const Z_TABLE: [(f64, f64); 4] = [
    (0.90, 1.644_853_626_951_472_6),
    (0.95, 1.959_963_984_540_054_3),
    (0.99, 2.575_829_303_548_901),
    (0.999, 3.290_526_731_491_895),
];

pub const DEFAULT_CI_LEVEL: f64 = 0.99;

/// Two-sided normal quantile for a supported confidence level.
pub fn z_value(ci_level: f64) -> Result<f64> {
    Z_TABLE
        .iter()
        .find(|(level, _)| (level - ci_level).abs() < 1e-9)
        .map(|&(_, z)| z)
        .ok_or(Error::UnsupportedCiLevel(ci_level))
}

/// Wilson score interval for `wins` successes out of `trials`.
pub fn wilson_interval(wins: u64, trials: u64, ci_level: f64) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::TooSmall {
            what: "trials",
            min: 1,
            got: 0,
        });
    }
    if wins > trials {
        return Err(Error::WinsExceedTrials { wins, trials });
    }
    let z = z_value(ci_level)?;
    let n = trials as f64;
    let p = wins as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let low = if wins == 0 {
        0.0
    } else {
        (center - half).max(0.0).min(p)
    };
    let high = if wins == trials {
        1.0
    } else {
        (center + half).min(1.0).max(p)
    };
    Ok((low, high))
}

/// Aggregated outcome of [`run_trials`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimResult {
    pub n: u64,
    pub trials: u64,
    pub d_wins: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub ci_level: f64,
    pub mean_r_steps: f64,
    /// Sample standard deviation of the random player's move count.
    pub sd_r_steps: f64,
    pub seed: u64,
    pub workers: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    games: u64,
    d_wins: u64,
    step_sum: u64,
    step_sq_sum: u128,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            games: self.games + other.games,
            d_wins: self.d_wins + other.d_wins,
            step_sum: self.step_sum + other.step_sum,
            step_sq_sum: self.step_sq_sum + other.step_sq_sum,
        }
    }
}

/// Seed of the independent stream used by worker `index`.
pub fn worker_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ (index + 1))
}

/// Sizes of the contiguous trial blocks, one per worker.
pub fn partition(trials: u64, workers: u64) -> Vec<u64> {
    let base = trials / workers;
    let extra = trials % workers;
    (0..workers).map(|i| base + u64::from(i < extra)).collect()
}

fn run_block(n: u64, games: u64, seed: u64) -> Tally {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut tally = Tally {
        games,
        ..Tally::default()
    };
    for _ in 0..games {
        let (winner, steps) = play_outcome(n, &mut rng);
        if winner == Player::Deterministic {
            tally.d_wins += 1;
        }
        tally.step_sum += steps;
        tally.step_sq_sum += u128::from(steps) * u128::from(steps);
    }
    tally
}

/// Plays `trials` independent games from `n` elements.
///
/// Trials are split into `workers` contiguous blocks; block `i` draws from a
/// xoshiro256** stream seeded with [`worker_seed`]`(seed, i)`. The result
/// depends on `(n, trials, seed, workers, ci_level)` only, not on thread
/// scheduling.
pub fn run_trials(
    n: u64,
    trials: u64,
    seed: u64,
    workers: u64,
    ci_level: f64,
) -> Result<SimResult> {
    if n == 0 {
        return Err(Error::EmptyPile);
    }
    if trials == 0 {
        return Err(Error::TooSmall {
            what: "trials",
            min: 1,
            got: 0,
        });
    }
    if workers == 0 {
        return Err(Error::TooSmall {
            what: "workers",
            min: 1,
            got: 0,
        });
    }
    z_value(ci_level)?;

    let blocks = partition(trials, workers);
    let tally = if workers == 1 {
        run_block(n, trials, worker_seed(seed, 0))
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = blocks
                .iter()
                .enumerate()
                .map(|(i, &games)| {
                    scope.spawn(move || run_block(n, games, worker_seed(seed, i as u64)))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .fold(Tally::default(), Tally::merge)
        })
    };
    debug_assert_eq!(tally.games, trials);

    let p_hat = tally.d_wins as f64 / trials as f64;
    let (ci_low, ci_high) = wilson_interval(tally.d_wins, trials, ci_level)?;
    let mean_r_steps = tally.step_sum as f64 / trials as f64;
    let sd_r_steps = if trials > 1 {
        // n * sum(x^2) - (sum x)^2, exact in integers
        let t = u128::from(trials);
        let centered =
            t * tally.step_sq_sum - u128::from(tally.step_sum) * u128::from(tally.step_sum);
        (centered as f64 / (t * (t - 1)) as f64).sqrt()
    } else {
        0.0
    };
    Ok(SimResult {
        n,
        trials,
        d_wins: tally.d_wins,
        p_hat,
        ci_low,
        ci_high,
        ci_level,
        mean_r_steps,
        sd_r_steps,
        seed,
        workers,
    })
}
