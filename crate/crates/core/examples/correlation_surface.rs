//! Writes the discord surface over (s, phi) as CSV to stdout and reports its
//! maximum on stderr.

use std::io;

use cq_discord::cli::{cmd_surface, Quantity};

fn main() {
    let peak = cmd_surface(51, 91, Quantity::Discord, io::stdout().lock()).expect("surface");
    eprintln!("max D = {:.6} at s = {}, phi = {:.6}", peak.value, peak.s, peak.phi);
}
