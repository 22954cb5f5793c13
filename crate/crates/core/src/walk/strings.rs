//! String routines on arc sequences.

/// Prefix function: `pi[k]` is the length of the longest proper border of
/// `s[..=k]`.
pub(crate) fn prefix_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let mut pi = vec![0; s.len()];
    for k in 1..s.len() {
        let mut j = pi[k - 1];
        while j > 0 && s[k] != s[j] {
            j = pi[j - 1];
        }
        if s[k] == s[j] {
            j += 1;
        }
        pi[k] = j;
    }
    pi
}

/// Smallest `p` such that `s` is a power of `s[..p]`; `s.len()` if none.
pub fn smallest_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let p = n - prefix_function(s)[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Start index of the lexicographically least rotation of `s`.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Smallest `k` such that `b` equals `a` read from index `k`, if any.
pub fn cyclic_shift_of<T: Eq>(a: &[T], b: &[T]) -> Option<usize> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    if n == 0 {
        return Some(0);
    }
    let pi = prefix_function(b);
    let mut j = 0;
    for t in 0..(2 * n - 1) {
        let x = &a[t % n];
        while j > 0 && *x != b[j] {
            j = pi[j - 1];
        }
        if *x == b[j] {
            j += 1;
        }
        if j == n {
            return Some(t + 1 - n);
        }
    }
    None
}

/// Whether `b` is a cyclic rotation of `a`.
pub fn cyclic_equal<T: Eq>(a: &[T], b: &[T]) -> bool {
    cyclic_shift_of(a, b).is_some()
}

/// Z-function: `z[k]` is the length of the longest common prefix of `s` and
/// `s[k..]`, with `z[0] = s.len()`.
pub(crate) fn z_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for k in 1..n {
        if k < r {
            z[k] = z[k - l].min(r - k);
        }
        while k + z[k] < n && s[z[k]] == s[k + z[k]] {
            z[k] += 1;
        }
        if k + z[k] > r {
            l = k;
            r = k + z[k];
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_of_powers() {
        assert_eq!(smallest_period(&[1, 2, 1, 2]), 2);
        assert_eq!(smallest_period(&[1, 2, 1]), 3);
        assert_eq!(smallest_period(&[7, 7, 7]), 1);
    }

    #[test]
    fn least_rotation_matches_naive() {
        let words: [&[u8]; 5] = [b"bca", b"abab", b"baaab", b"zzzz", b"cabcab"];
        for w in words {
            let k = least_rotation(w);
            let best = (0..w.len()).map(|r| [&w[r..], &w[..r]].concat()).min().unwrap();
            assert_eq!([&w[k..], &w[..k]].concat(), best);
        }
    }

    #[test]
    fn cyclic_shift_finds_offset() {
        assert_eq!(cyclic_shift_of(&[1, 2, 3, 4], &[3, 4, 1, 2]), Some(2));
        assert_eq!(cyclic_shift_of(&[1, 2, 3], &[1, 3, 2]), None);
        assert!(cyclic_equal::<u8>(&[], &[]));
    }

    #[test]
    fn z_function_matches_naive() {
        let s = [1, 2, 1, 2, 1, 3, 1, 2];
        let z = z_function(&s);
        for k in 0..s.len() {
            let naive = (0..s.len() - k).take_while(|&t| s[t] == s[k + t]).count();
            assert_eq!(z[k], naive);
        }
    }
}
