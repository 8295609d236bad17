//! Prints the phase allocation of a budget.
//!
//! cargo run --example schedule -- [ARMS] [HORIZON]

use csar::schedule::{harmonic_number, make_schedule};

fn main() -> csar::Result<()> {
    let mut args = std::env::args().skip(1);
    let arms: usize = args.next().map_or(6, |s| s.parse().expect("ARMS"));
    let horizon: u64 = args.next().map_or(3200, |s| s.parse().expect("HORIZON"));

    let s = make_schedule(arms, horizon)?;
    println!(
        "|A| = {arms}, H = {horizon}, harmonic term {:.6}",
        s.harmonic
    );
    println!(
        "{:>5} {:>8} {:>8} {:>8} {:>10}",
        "k", "active", "n_k", "N_k", "pulls so far"
    );
    for k in 1..=s.num_phases() {
        println!(
            "{:>5} {:>8} {:>8} {:>8} {:>10}",
            k,
            arms + 1 - k,
            s.n_at(k),
            s.increment_at(k),
            s.t[k - 1]
        );
    }
    println!(
        "total {} (unused {})",
        s.total_pulls(),
        horizon - s.total_pulls()
    );
    println!("H_{arms} = {:.6}", harmonic_number(arms)?);
    Ok(())
}
