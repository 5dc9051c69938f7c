//! Free-group bookkeeping: verify that the bundled change-of-generators
//! equations hold after expanding every abbreviation and freely reducing.

use lefschetz::words::WordIdentitySet;

fn main() {
    let set = WordIdentitySet::parse(include_str!("../data/word_identities.txt")).unwrap();
    println!("generators: {}", set.gens.join(" "));
    for (name, word) in &set.defs {
        println!("{name} = {}", word.render(&set.gens));
    }
    let mut all_ok = true;
    for (lhs, rhs, ok) in set.verify_all() {
        println!("{}: {lhs} == {rhs}", if ok { "verified" } else { "FAILED" });
        all_ok &= ok;
    }
    assert!(all_ok);
}
