//! From a free-group endomorphism to its multivariable zeta function:
//! abelianize, project to the free quotient, take the Fox Jacobian, and
//! expand the determinant of Id - tau F1.

use lefschetz::laurent::deck_var_names;
use lefschetz::pipeline::zeta_of_endomorphism;
use lefschetz::words::FreeEndomorphism;

fn main() {
    let phi = FreeEndomorphism::parse(include_str!("../data/arnoux_yoccoz.endo")).unwrap();
    let (model, z) = zeta_of_endomorphism(&phi).unwrap();

    print!("deck projection: {}", model.psi);
    let names = deck_var_names(z.num_deck_vars);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    println!("edge action:");
    print!("{}", model.f1.render(&refs));

    println!("numerator:   {}", z.render(&z.numerator));
    println!("denominator: {}", z.render(&z.denominator));
    match &z.reduced {
        Some(p) => println!("reduced:     {}", z.render(p)),
        None => println!("reduced:     not reducible"),
    }
}
