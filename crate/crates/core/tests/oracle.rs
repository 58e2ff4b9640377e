//! The numerical roof against the closed forms.

use erae_core::roof_oracle::{minimize_roof, OracleConfig};
use erae_core::symmetric::{erae_isotropic, erae_werner, isotropic_density, werner_density};
use erae_core::{Alpha, IsotropicSpec, WernerSpec};

#[test]
fn werner_qubits_grid() {
    let cfg = OracleConfig {
        restarts: 8,
        ..OracleConfig::default()
    };
    for a in [0.3, 0.82, 1.0, 2.0] {
        let alpha = Alpha::new(a).unwrap();
        for f in [0.2, 0.5, 0.8] {
            let spec = WernerSpec::new(2, f).unwrap();
            let closed = erae_werner(&spec, alpha).unwrap();
            let found = minimize_roof(&werner_density(&spec), alpha, &cfg).unwrap();
            assert!(
                (found.value - closed).abs() <= 1e-4,
                "α={a} F={f}: oracle {} closed {closed}",
                found.value
            );
            assert!(found.best.reconstruction_error(&werner_density(&spec)) < 1e-8);
        }
    }
}

#[test]
fn isotropic_qutrits_bound() {
    let spec = IsotropicSpec::new(3, 0.7).unwrap();
    let alpha = Alpha::von_neumann();
    let closed = erae_isotropic(&spec, alpha).unwrap();
    let cfg = OracleConfig {
        restarts: 4,
        ..OracleConfig::default()
    };
    let found = minimize_roof(&isotropic_density(&spec), alpha, &cfg).unwrap();
    assert!(found.value >= closed - 1e-6, "oracle {} below closed {closed}", found.value);
    assert!(found.value <= closed + 5e-3, "oracle {} closed {closed}", found.value);
}
