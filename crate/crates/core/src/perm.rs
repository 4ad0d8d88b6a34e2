//! Small helpers for permutations stored as image slices over `0..n`.

pub fn is_permutation(images: &[u32]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &v in images {
        let v = v as usize;
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Inverse of a permutation. The caller guarantees `images` is one.
pub fn inverse(images: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; images.len()];
    for (i, &v) in images.iter().enumerate() {
        inv[v as usize] = i as u32;
    }
    inv
}

/// For every point, the length of the cycle that contains it.
pub fn cycle_lengths(images: &[u32]) -> Vec<u32> {
    let n = images.len();
    let mut lens = vec![0u32; n];
    for start in 0..n {
        if lens[start] != 0 {
            continue;
        }
        let mut cycle = vec![start];
        let mut x = images[start] as usize;
        while x != start {
            cycle.push(x);
            x = images[x] as usize;
        }
        let len = cycle.len() as u32;
        for p in cycle {
            lens[p] = len;
        }
    }
    lens
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `lcm(a, b)`, or `None` on overflow.
pub fn lcm_checked(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn order(images: &[u32]) -> Option<u64> {
    cycle_lengths(images)
        .into_iter()
        .try_fold(1u64, |acc, len| lcm_checked(acc, len as u64))
}
