/// The connectivity threshold curve `p(α) = (m · n^α)^(-1/2)`.
///
/// At `α = 2` this is `1 / (√m · n)`. Values above 1 (possible for `α < 0`)
/// are returned as computed.
pub fn threshold_p(alpha: f64, m: usize, n: usize) -> f64 {
    (m as f64 * (n as f64).powf(alpha)).sqrt().recip()
}
