//! Exact dynamics on the slitted polygon: the base point x0 lies in
//! region R3, maps into R1, and returns to itself after two steps; the
//! stretch factor's minimal polynomial vanishes at 1/alpha.

use lefschetz::surface::{
    apply_h, classify_region, stretch_factor_certificate, x0,
};

fn main() {
    let p0 = x0();
    println!(
        "x0 = {}  ~ ({:.6}, {:.6})  in {:?}",
        p0.render(),
        p0.x.to_f64(),
        p0.y.to_f64(),
        classify_region(&p0).unwrap()
    );

    let p1 = apply_h(&p0).unwrap();
    println!(
        "h(x0) = {}  ~ ({:.6}, {:.6})  in {:?}",
        p1.render(),
        p1.x.to_f64(),
        p1.y.to_f64(),
        classify_region(&p1).unwrap()
    );
    assert_ne!(p1, p0);

    let p2 = apply_h(&p1).unwrap();
    assert_eq!(p2, p0);
    println!("h(h(x0)) = x0: exact period two confirmed");

    let cert = stretch_factor_certificate().unwrap();
    println!("stretch factor: largest root of {}", cert.render("x"));
}
