//! Toy RSA key derivation: the private exponent is the modular inverse
//! of the public one. A worked example, not a cryptosystem — the primes
//! here are laughably small and nothing is padded.
//!
//! ```bash
//! cargo run -p bezout --example rsa_demo
//! ```

use num_bigint::BigUint;

use bezout::rsa_toy_private_exponent;

fn main() {
    let p = BigUint::from(61u32);
    let q = BigUint::from(53u32);
    let e = BigUint::from(17u32);

    let n = &p * &q;
    let totient = (&p - 1u32) * (&q - 1u32);
    let d = rsa_toy_private_exponent(&p, &q, &e).unwrap();

    println!("p = {p}, q = {q}");
    println!("n = p·q = {n}");
    println!("φ(n) = (p-1)(q-1) = {totient}");
    println!("public exponent  e = {e}");
    println!("private exponent d = e⁻¹ mod φ(n) = {d}");
    assert_eq!((&e * &d) % &totient, BigUint::from(1u32));

    // round-trip a message below n
    let message = BigUint::from(1234u32);
    let ciphertext = message.modpow(&e, &n);
    let recovered = ciphertext.modpow(&d, &n);
    println!("\nmessage   = {message}");
    println!("encrypted = {message}^{e} mod {n} = {ciphertext}");
    println!("decrypted = {ciphertext}^{d} mod {n} = {recovered}");
    assert_eq!(recovered, message);
}
