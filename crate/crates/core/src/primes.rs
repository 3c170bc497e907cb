/// Deterministic primality for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    primal_check::miller_rabin(n)
}
