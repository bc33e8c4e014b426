use super::scalar::Scalar;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn rising<S: Scalar>(a: &S, k: u32) -> S {
    let mut acc = S::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + S::one();
    }
    acc
}

/// Falling factorial `<a>_k = a (a-1) ... (a-k+1)`, with `<a>_0 = 1`.
pub fn falling<S: Scalar>(a: &S, k: u32) -> S {
    let mut acc = S::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term - S::one();
    }
    acc
}
