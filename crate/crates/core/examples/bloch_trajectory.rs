//! Where the damped |+⟩ and |−⟩ sit in the XZ plane, and how their Bloch
//! length and opening angle change with p.

use cq_discord::channels::trajectory;

fn main() -> cq_discord::Result<()> {
    println!("{:>5} {:>9} {:>9} {:>9} {:>9}", "p", "x_plus", "z_plus", "s", "phi");
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let t = trajectory(p)?;
        println!("{p:>5.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5}", t.bloch_plus.x(), t.bloch_plus.z(), t.s, t.phi);
    }
    Ok(())
}
