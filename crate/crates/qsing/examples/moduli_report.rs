//! Moduli dimensions across every dispatch route.
//!
//! Run with: cargo run --example moduli_report

use qsing::{full_report, ExceptionalDivisor, GroupDescriptor};

fn main() {
    // groups whose divisor is derivable or unnecessary
    for desc in [
        "cyclic:2/1",  // Eguchi-Hanson, hyperkahler A_1
        "cyclic:5/4",  // A_4, hyperkahler
        "cyclic:3/1",  // first dimension-table row
        "cyclic:9/1",  // LeBrun negative-mass family
        "cyclic:7/3",  // generic cyclic
        "tetra:7",     // closed form, l = 1 mod 6
        "octa:5",      // closed form, l = 5 mod 12
        "icosa:29",    // closed form, l = 29 mod 30
        "idx3tetra:3", // closed form, index-3 diagonal
    ] {
        let report = full_report(&desc.parse::<GroupDescriptor>().unwrap(), None).unwrap();
        let d = report
            .counts
            .as_ref()
            .map(|c| c.d_gamma.to_string())
            .unwrap_or_else(|| "-".into());
        println!(
            "{desc:14} route {:<18}  d = {d:>2}  orbit = {}  m = {}",
            report.route.to_string(),
            report.orbit_dim,
            report.m_gamma,
        );
    }

    // dihedral families need divisor data
    let star = ExceptionalDivisor::star_i64(-3, [&[-2], &[-2], &[-2, -2]]).unwrap();
    let report = full_report(&"dihedral:3,5".parse().unwrap(), Some(&star)).unwrap();
    println!(
        "dihedral:3,5 with a supplied star: route {}, d = {}, m = {}",
        report.route,
        report.counts.as_ref().unwrap().d_gamma,
        report.m_gamma
    );
}
