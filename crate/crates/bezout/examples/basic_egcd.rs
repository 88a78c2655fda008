//! Compute gcds and Bézout triples with both algorithm forms.
//!
//! ```bash
//! cargo run -p bezout --example basic_egcd
//! ```

use num_bigint::BigUint;

use bezout::{egcd_iterative, egcd_recursive, gcd};

fn main() {
    let pairs: [(u64, u64); 4] = [(240, 46), (12, 8), (7, 0), (8, 12)];

    for (a, b) in pairs {
        let (a, b) = (BigUint::from(a), BigUint::from(b));
        let d = gcd(&a, &b);
        let triple = egcd_iterative(&a, &b);
        println!("gcd({a}, {b}) = {d}");
        println!(
            "  {d} = {a}·({x}) + {b}·({y})",
            x = triple.x,
            y = triple.y
        );
        assert!(triple.identity_holds(&a, &b));

        // the recursive form returns the same triple, bit for bit
        assert_eq!(egcd_recursive(&a, &b), triple);
    }

    // arbitrary precision: a 256-bit pair
    let a = BigUint::parse_bytes(
        b"115792089237316195423570985008687907853269984665640564039457584007913129639747",
        10,
    )
    .unwrap();
    let b = BigUint::parse_bytes(b"340282366920938463463374607431768211507", 10).unwrap();
    let triple = egcd_iterative(&a, &b);
    println!("\n256-bit example:");
    println!("  d = {}", triple.d);
    println!("  x = {}", triple.x);
    println!("  y = {}", triple.y);
    assert!(triple.identity_holds(&a, &b));
}
