mod common;

use cq_discord::channels::{amplitude_damping, angle_of_p, p_of_t, purity_of_p, trajectory};
use cq_discord::correlations::CorrelationReport;
use cq_discord::qmat::binary_entropy;
use cq_discord::states::CanonicalParams;

#[test]
fn trajectory_closed_forms_along_the_sweep() {
    for i in 0..=200 {
        let p = i as f64 / 200.0;
        let t = trajectory(p).unwrap();
        assert_eq!(t.s, purity_of_p(p));
        assert_eq!(t.phi, angle_of_p(p));
        // Along the sweep, s cos(φ/2) = p and C = 1 − h((1 + √(1−p))/2).
        assert!((t.s * (t.phi / 2.0).cos() - p).abs() < 1e-12);
        let r = CorrelationReport::analytic(&CanonicalParams::equal(t.s, t.phi).unwrap()).unwrap();
        let c = 1.0 - binary_entropy((1.0 + (1.0 - p).sqrt()) / 2.0).unwrap();
        assert!((r.classical - c).abs() < 1e-12, "p = {p}");
        // Parabolic paths in the XZ plane.
        assert!((t.bloch_plus.z() - (1.0 - t.bloch_plus.x().powi(2))).abs() < 1e-12);
        assert!((t.bloch_minus.z() - (1.0 - t.bloch_minus.x().powi(2))).abs() < 1e-12);
    }
}

#[test]
fn time_parameterization() {
    assert_eq!(p_of_t(1.0, 0.0).unwrap(), 0.0);
    let p = p_of_t(2.0, 0.5).unwrap();
    assert!((p - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
    assert_eq!(p_of_t(0.0, 1.0).unwrap(), 0.0);
    assert!(p_of_t(-1.0, 1.0).is_err());
    assert!(amplitude_damping(1.5).is_err());
}
