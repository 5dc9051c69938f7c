//! Divisibility search: for each genus g in 4..=10 the candidate minimal
//! polynomial x^g - x^{g-1} - ... - x - 1 divides none of the section
//! polynomials of degree 2g, so no cross-section of those genera can
//! carry a pseudo-Anosov map with that stretch factor.

use lefschetz::pipeline::{genus_search, zeta_of_endomorphism};
use lefschetz::words::FreeEndomorphism;

fn main() {
    let phi = FreeEndomorphism::parse(include_str!("../data/arnoux_yoccoz.endo")).unwrap();
    let (_, z) = zeta_of_endomorphism(&phi).unwrap();

    // genus 3 first: the fiber class (0,1) is divisible, as it must be
    for report in genus_search(&z, 3, 10).unwrap() {
        println!("genus {}: modulus {}", report.genus, report.modulus.render("x"));
        for (s, verdict) in &report.entries {
            println!(
                "  (a,b)=({},{})  {}  divides: {verdict}",
                s.class.a[0], s.class.b, s.poly
            );
        }
    }
}
