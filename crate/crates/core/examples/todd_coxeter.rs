//! Coset enumeration on a few presentations, including the groups `H_n`.

use cayley::presentation::h_presentation;
use cayley::{parse_presentation, todd_coxeter};

fn main() -> cayley::Result<()> {
    let texts = [
        "< a | a^7 >",
        "< a, b | a^4, b^2 a^-2, b a b^-1 a >",
        "< r, s | r^5, s^2, (s r)^2 >",
        "< x, y | x^2, y^3, (x y)^4 >",
    ];
    for text in texts {
        let p = parse_presentation(text)?;
        let (g, table) = todd_coxeter(&p, 10_000)?;
        println!(
            "{text:<40} order {:>3}  cosets {}",
            g.order(),
            table.count()
        );
    }

    for n in 2..=6 {
        let (g, _) = todd_coxeter(&h_presentation(n), 100_000)?;
        println!("H_{n}: order {} (expected {})", g.order(), 1 << (n + 1));
    }
    Ok(())
}
