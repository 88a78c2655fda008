//! Multiplicative inverses in modular arithmetic, the motivating use of
//! the extended gcd.
//!
//! ```bash
//! cargo run -p bezout --example modular_inverse
//! ```

use num_bigint::BigUint;
use num_traits::Num;

use bezout::{mod_inverse, Error, Modulus};

fn main() {
    let m = Modulus::new(BigUint::from(11u32)).unwrap();
    for a in 1u32..11 {
        let a = BigUint::from(a);
        let inv = mod_inverse(&a, &m).unwrap();
        assert_eq!((&a * &inv) % m.value(), BigUint::from(1u32));
        println!("{a}⁻¹ ≡ {inv} (mod 11)");
    }

    // no inverse when the element shares a factor with the modulus
    let m9 = Modulus::new(BigUint::from(9u32)).unwrap();
    match mod_inverse(&BigUint::from(6u32), &m9) {
        Err(Error::NonInvertible { gcd }) => {
            println!("\n6 has no inverse mod 9 (gcd = {gcd})");
        }
        other => panic!("expected NonInvertible, got {other:?}"),
    }

    // works unchanged at cryptographic scale: a 2048-bit prime modulus
    // (RFC 3526, group 14)
    let prime_hex = concat!(
        "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74",
        "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437",
        "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED",
        "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05",
        "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB",
        "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B",
        "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718",
        "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF"
    );
    let p = Modulus::new(BigUint::from_str_radix(prime_hex, 16).unwrap()).unwrap();
    let a = BigUint::from(0xDEADBEEFu32);
    let inv = mod_inverse(&a, &p).unwrap();
    assert_eq!((&a * &inv) % p.value(), BigUint::from(1u32));
    println!("\n2048-bit modulus: inverse of {a} has {} bits", inv.bits());
}
