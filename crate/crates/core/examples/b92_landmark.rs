//! The B92 state: conditional states |0⟩ and |+⟩ give the largest discord
//! among equal-purity classical-quantum states.

use std::f64::consts::FRAC_PI_2;

use cq_discord::correlations::{discord_numeric, CorrelationReport, MeshOptions};
use cq_discord::qmat::Subsystem;
use cq_discord::states::{CanonicalParams, CqState};

fn main() -> cq_discord::Result<()> {
    let closed = CorrelationReport::analytic(&CanonicalParams::equal(1.0, FRAC_PI_2)?)?;
    let rho = CqState::b92().assemble();
    let numeric = discord_numeric(&rho, Subsystem::B, &MeshOptions::default())?;
    let basis = numeric.argmin_basis.expect("search returns a basis");

    println!("closed form: D = {:.6}  C = {:.6}  I = {:.6}", closed.discord, closed.classical, closed.mutual);
    println!("mesh search: D = {:.6}  C = {:.6}  I = {:.6}", numeric.discord, numeric.classical, numeric.mutual);
    println!("optimal basis on B: theta = {:.6}, phi_m = {:.6}", basis.theta(), basis.phi_m());

    let on_a = discord_numeric(&rho, Subsystem::A, &MeshOptions::default())?;
    println!("measuring A instead: D = {:.3e}", on_a.discord);
    Ok(())
}
