//! Numeric discord of a hand-written state, in both the cq-spec and the raw
//! matrix file formats, and for unequal purities where no closed form exists.

use cq_discord::cli::StateFile;
use cq_discord::correlations::{discord_numeric, minimize_delta, MeshOptions};
use cq_discord::qmat::Subsystem;
use cq_discord::states::CqState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = StateFile::parse("bloch0 = [0.0, 0.0, 0.9]\nbloch1 = [0.5, 0.0, 0.0]\n")?;
    let rho = spec.density();
    let mesh = MeshOptions::default();
    for side in [Subsystem::B, Subsystem::A] {
        let r = discord_numeric(&rho, side, &mesh)?;
        println!("measure {side}: D = {:.8}  C = {:.8}  I = {:.8}", r.discord, r.classical, r.mutual);
    }

    let cq = CqState::from_density(&rho)?;
    let params = cq.canonicalize();
    let min = minimize_delta(&params);
    println!("s0 = {}, s1 = {}, phi = {:.6}; ellipse minimum {:.8} at ({:.6}, {:.6})",
        params.s0(), params.s1(), params.phi(), min.value, min.x, min.y);

    // Bell-diagonal-like mixture as a raw 4x4 matrix (re, im pairs per row).
    let raw = "\
        0.4 0  0 0  0 0  0.1 0
        0 0    0.1 0  0 0  0 0
        0 0    0 0  0.1 0  0 0
        0.1 0  0 0  0 0  0.4 0";
    let r = discord_numeric(&StateFile::parse(raw)?.density(), Subsystem::B, &mesh)?;
    println!("raw matrix: D = {:.8}  C = {:.8}  I = {:.8}", r.discord, r.classical, r.mutual);
    Ok(())
}
