//! Integer utilities: gcd/lcm, extended Euclid, totient, trial-division
//! primality, a linear congruence solver, and executable forms of the
//! gcd/lcm inequalities used by the dihedral counting argument.
//!
//! Convention: `gcd(0, n) = n` throughout the crate.

use serde::Serialize;

/// Solution representatives are listed only up to this many entries;
/// `count` stays exact past the cap.
pub const SOLUTION_LIST_CAP: usize = 1_000_000;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).abs() * b.abs()
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Incongruent solutions of a*k = c (mod n).
#[derive(Debug, Clone, Serialize)]
pub struct CongruenceSolution {
    pub solvable: bool,
    pub count: u64,
    pub solutions: Vec<i64>,
}

/// Solves a*k = c (mod n) for k in [0, n). Inputs are canonicalized into
/// [0, n) first; solvable iff gcd(a, n) | c, with exactly gcd(a, n)
/// incongruent solutions built from the extended gcd.
pub fn solve_linear_congruence(a: i64, c: i64, n: i64) -> CongruenceSolution {
    assert!(n >= 1, "modulus must be positive");
    let a = a.rem_euclid(n);
    let c = c.rem_euclid(n);
    let d = gcd(a, n); // gcd(0, n) = n covers a = 0
    if c % d != 0 {
        return CongruenceSolution {
            solvable: false,
            count: 0,
            solutions: Vec::new(),
        };
    }
    let count = d as u64;
    let step = n / d;
    let base = if a == 0 {
        0
    } else {
        let (_, x, _) = extended_gcd(a, n);
        ((c / d) % step * (x % step)).rem_euclid(step)
    };
    let mut solutions = Vec::new();
    let mut k = base;
    for _ in 0..d.min(SOLUTION_LIST_CAP as i64) {
        debug_assert_eq!((a * k).rem_euclid(n), c, "substitution check failed");
        solutions.push(k);
        k += step;
    }
    CongruenceSolution {
        solvable: true,
        count,
        solutions,
    }
}

/// x1 + x2 <= lcm(x1, x2) + gcd(x1, x2), always true for positive inputs.
pub fn check_gcd_lcm_inequality(x1: u64, x2: u64) -> bool {
    let (a, b) = (x1 as i64, x2 as i64);
    a + b <= lcm(a, b) + gcd(a, b)
}

/// gcd(x1, x2) + gcd(x3, x2) <= x2 + gcd(x1, x3), always true.
pub fn check_gcd_triple_inequality(x1: u64, x2: u64, x3: u64) -> bool {
    let (a, b, c) = (x1 as i64, x2 as i64, x3 as i64);
    gcd(a, b) + gcd(c, b) <= b + gcd(a, c)
}

/// gcd(x1 - 1, x1 + 1): 2 for odd x1, 1 for even x1 (x1 = 1 gives
/// gcd(0, 2) = 2, the odd case).
pub fn gcd_of_neighbors(x1: u64) -> u64 {
    gcd(x1 as i64 - 1, x1 as i64 + 1) as u64
}
