//! Section classes of the suspension flow: there is no class of degree 2
//! (Euler characteristic -2), and the minimum degree is 4 with witness
//! (a, b) = (-1, 1).

use lefschetz::pipeline::{
    min_section_degree, sections_with_degree, zeta_of_endomorphism,
};
use lefschetz::words::FreeEndomorphism;

fn main() {
    let phi = FreeEndomorphism::parse(include_str!("../data/arnoux_yoccoz.endo")).unwrap();
    let (_, z) = zeta_of_endomorphism(&phi).unwrap();

    let degree_two = sections_with_degree(&z, 2).unwrap();
    println!("degree-2 section classes: {}", degree_two.len());
    assert!(degree_two.is_empty());

    let min = min_section_degree(&z).unwrap();
    println!("minimum section degree: {min}");
    for s in sections_with_degree(&z, min).unwrap() {
        println!(
            "  witness (a,b)=({},{}): {}",
            s.class.a[0], s.class.b, s.poly
        );
    }

    // the two degree-6 classes, one of which is the fiber
    for s in sections_with_degree(&z, 6).unwrap() {
        println!(
            "degree-6 class (a,b)=({},{}): {}",
            s.class.a[0], s.class.b, s.poly
        );
    }
}
