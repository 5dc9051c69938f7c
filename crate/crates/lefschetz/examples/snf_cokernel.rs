//! Smith normal form and cokernel of the bundled action matrix: the
//! diagonal (1,1,1,1,1,2,0) exhibits the cokernel Z/2 + Z, and the row
//! of U attached to the zero factor is the projection onto the free part.

use lefschetz::intlinalg::{cokernel, normalize_projection, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::parse(include_str!("../data/action_minus_id.matrix")).unwrap();
    let snf = smith_normal_form(&m);
    println!("invariant factors: {:?}", snf.invariant_factors());

    // certificate: U * M * V = D with unimodular U, V
    let umv = snf.u.mul(&m).unwrap().mul(&snf.v).unwrap();
    assert_eq!(umv, snf.d);
    println!("det U = {}", snf.u.determinant().unwrap());
    println!("det V = {}", snf.v.determinant().unwrap());

    let coker = cokernel(&m);
    println!("torsion invariants: {:?}", coker.torsion_invariants);
    println!("free rank: {}", coker.free_rank);

    // rescale so the last basis element maps to +1 in the free quotient
    let n = normalize_projection(&coker, m.rows() - 1).unwrap();
    print!("projection onto the free quotient: {}", n.projection);
}
