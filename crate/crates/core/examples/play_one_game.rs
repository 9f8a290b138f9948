//! Plays a single game and prints every move.
//!
//!     cargo run --example play_one_game -- 20 7

use pilegame::rng::Xoshiro256StarStar;
use pilegame::sim::play_game;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(20);
    let seed: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(7);

    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let game = play_game(n, &mut rng).expect("n must be at least 1");
    println!("pile of {n}, seed {seed}");
    for m in &game.moves {
        println!(
            "  {} removes {:>3}, {:>3} left",
            m.player, m.removed, m.remaining
        );
    }
    println!("winner {} after {} random moves", game.winner, game.r_steps);
}
