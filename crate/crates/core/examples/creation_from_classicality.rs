//! Local amplitude damping on B turns a purely classical state into one with
//! nonzero discord, which then decays again as B relaxes to |0⟩.

use cq_discord::channels::{amplitude_damping, evolve_cq, p_of_t};
use cq_discord::correlations::CorrelationReport;
use cq_discord::states::CqState;

fn main() -> cq_discord::Result<()> {
    let rho0 = CqState::initial_classical();
    let gamma = 1.0;
    println!("{:>6} {:>8} {:>10} {:>10} {:>10}", "t", "p", "discord", "classical", "mutual");
    for step in 0..=20 {
        let t = 0.25 * step as f64;
        let p = p_of_t(gamma, t)?;
        let damped = evolve_cq(&rho0, &amplitude_damping(p)?)?;
        let r = CorrelationReport::analytic(&damped.canonicalize())?;
        println!("{t:>6.2} {p:>8.4} {:>10.6} {:>10.6} {:>10.6}", r.discord, r.classical, r.mutual);
    }
    Ok(())
}
