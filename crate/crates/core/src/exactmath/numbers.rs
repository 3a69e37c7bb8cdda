//! Integer-valued combinatorial families: binomials, factorials, multinomials,
//! Eulerian numbers, unsigned Stirling numbers of the first kind, and the
//! elementary symmetric sums `elm(m; a, b)` over consecutive integers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Default row bound for the memoized Eulerian and Stirling tables.
pub const DEFAULT_TABLE_LIMIT: usize = 64;

static TABLE_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_LIMIT);

/// Sets the largest `n` whose Eulerian/Stirling row is kept in the shared
/// tables. Rows past the limit are still computed exactly, just not cached.
pub fn set_table_limit(n_max: usize) {
    TABLE_LIMIT.store(n_max, Ordering::Relaxed);
}

pub fn table_limit() -> usize {
    TABLE_LIMIT.load(Ordering::Relaxed)
}

/// `C(n, k)` with the product convention for negative `n`:
/// zero when `k < 0`, zero when `0 <= n < k`, otherwise
/// `n (n-1) ... (n-k+1) / k!`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    // symmetry only valid for nonnegative n
    let k = if n >= 0 && k > n - k { n - k } else { k };
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total: i64 = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p as i64;
        acc *= binomial(total, p as i64);
    }
    acc
}

type Recurrence = fn(&[BigInt], usize) -> Vec<BigInt>;

/// A triangle of big integers grown row by row from row 0 = `[1]`.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next_row: Recurrence,
}

impl Triangle {
    fn new(next_row: Recurrence) -> Self {
        Triangle {
            rows: RwLock::new(vec![vec![BigInt::one()]]),
            next_row,
        }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        let limit = table_limit();
        if n <= limit {
            {
                let rows = self.rows.read().expect("table lock poisoned");
                if let Some(row) = rows.get(n) {
                    return row.get(k).cloned().unwrap_or_default();
                }
            }
            let mut rows = self.rows.write().expect("table lock poisoned");
            while rows.len() <= n {
                let m = rows.len();
                let next = (self.next_row)(&rows[m - 1], m);
                rows.push(next);
            }
            return rows[n].get(k).cloned().unwrap_or_default();
        }
        let (start, mut row) = {
            let rows = self.rows.read().expect("table lock poisoned");
            let last = rows.len() - 1;
            (last, rows[last].clone())
        };
        for m in start + 1..=n {
            row = (self.next_row)(&row, m);
        }
        row.get(k).cloned().unwrap_or_default()
    }
}

fn eulerian_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    // A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1); row n has max(n,1) entries
    let len = n.max(1);
    let at = |k: isize| -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            prev.get(k as usize).cloned().unwrap_or_default()
        }
    };
    (0..len)
        .map(|k| {
            let k = k as isize;
            at(k) * (k + 1) + at(k - 1) * (n as isize - k)
        })
        .collect()
}

fn stirling_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
    (0..=n)
        .map(|k| {
            let left = if k == 0 {
                BigInt::zero()
            } else {
                prev.get(k - 1).cloned().unwrap_or_default()
            };
            let right = prev.get(k).cloned().unwrap_or_default() * (n - 1);
            left + right
        })
        .collect()
}

fn eulerian_table() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(eulerian_row))
}

fn stirling_table() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(stirling_row))
}

/// Eulerian number `A(n, k)`: permutations of `[n]` with exactly `k` descents.
pub fn eulerian(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    eulerian_table().get(n, k as usize)
}

/// Unsigned Stirling number of the first kind: permutations of `[n]` with `k` cycles.
pub fn stirling_first_unsigned(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    stirling_table().get(n, k as usize)
}

/// Elementary symmetric sum `e_m(a, a+1, ..., b)`.
///
/// `elm(0; a, b) = 1` for every `a, b`, and the value is zero when `m < 0` or
/// `m > b - a + 1`. Computed by adjoining one variable at a time.
pub fn elm(m: i64, a: i64, b: i64) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    let len = b - a + 1;
    if m < 0 || m > len {
        return BigInt::zero();
    }
    let m = m as usize;
    let mut e = vec![BigInt::zero(); m + 1];
    e[0] = BigInt::one();
    let mut seen = 0usize;
    for v in a..=b {
        seen += 1;
        let top = seen.min(m);
        for j in (1..=top).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    std::mem::take(&mut e[m])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn cycle_count(p: &[usize]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut c = 0;
        for i in 0..p.len() {
            if !seen[i] {
                c += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                }
            }
        }
        c
    }

    /// Subset enumeration oracle for elm, range length <= 12.
    fn elm_by_subsets(m: i64, a: i64, b: i64) -> BigInt {
        if m == 0 {
            return BigInt::one();
        }
        let vals: Vec<i64> = (a..=b).collect();
        if m < 0 || m as usize > vals.len() {
            return BigInt::zero();
        }
        assert!(vals.len() <= 12);
        let mut total = BigInt::zero();
        for mask in 0u32..(1 << vals.len()) {
            if mask.count_ones() as i64 == m {
                let mut p = BigInt::one();
                for (i, v) in vals.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        p *= *v;
                    }
                }
                total += p;
            }
        }
        total
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(-1, 2), big(1));
        assert_eq!(binomial(-3, 2), big(6));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(-2, 0), big(1));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30i64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        // 6!/(4! 1! 1!)
        assert_eq!(multinomial(&[4, 1, 1]), factorial(6) / (factorial(4)));
        assert_eq!(multinomial(&[4, 1, 1]), big(30));
        assert_eq!(multinomial(&[9]), big(1));
        assert_eq!(multinomial(&[1, 1, 1]), big(6));
        assert_eq!(multinomial(&[]), big(1));
    }

    #[test]
    fn eulerian_matches_descent_enumeration() {
        for n in 0..=7usize {
            let mut counts = vec![0i64; n.max(1)];
            for p in permutations(n) {
                let d = p.windows(2).filter(|w| w[0] > w[1]).count();
                counts[d] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(eulerian(n, k as i64), big(*c), "A({n},{k})");
            }
        }
        assert_eq!(eulerian(3, 1), big(4));
        assert_eq!(eulerian(6, 2), big(302));
        for n in 1..=10 {
            assert_eq!(eulerian(n, n as i64), big(0));
        }
        assert_eq!(eulerian(0, 0), big(1));
        assert_eq!(eulerian(4, -1), big(0));
    }

    #[test]
    fn eulerian_second_column_closed_form() {
        for n in 1..=12u32 {
            let n_i = n as i64;
            let closed = BigInt::from(3).pow(n) - big(n_i + 1) * BigInt::from(2).pow(n)
                + big(n_i * (n_i + 1) / 2);
            assert_eq!(eulerian(n as usize, 2), closed, "A({n},2)");
        }
    }

    #[test]
    fn stirling_matches_cycle_enumeration() {
        for n in 0..=7usize {
            let mut counts = vec![0i64; n + 1];
            for p in permutations(n) {
                counts[cycle_count(&p)] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(stirling_first_unsigned(n, k as i64), big(*c));
            }
        }
        assert_eq!(stirling_first_unsigned(3, 2), big(3));
        assert_eq!(stirling_first_unsigned(4, 0), big(0));
        for n in 0..10 {
            assert_eq!(stirling_first_unsigned(n, n as i64), big(1));
        }
    }

    #[test]
    fn tables_past_limit_match_cached_values() {
        let a = eulerian(70, 5);
        let c = stirling_first_unsigned(70, 30);
        // recomputed beyond the cached rows via the same recurrence
        assert!(a > BigInt::zero());
        assert!(c > BigInt::zero());
        let sum: BigInt = (0..12).map(|k| eulerian(12, k)).sum();
        assert_eq!(sum, factorial(12));
    }

    #[test]
    fn elm_examples() {
        assert_eq!(elm(0, 5, 2), big(1));
        assert_eq!(elm(2, 1, 3), big(11));
        assert_eq!(elm(3, 1, 2), big(0));
        assert_eq!(elm(-1, 1, 4), big(0));
    }

    #[test]
    fn elm_matches_subset_oracle() {
        for a in -6..=6i64 {
            for b in a - 1..=a + 11 {
                for m in -1..=(b - a + 2) {
                    assert_eq!(elm(m, a, b), elm_by_subsets(m, a, b), "elm({m};{a},{b})");
                }
            }
        }
    }

    #[test]
    fn elm_stirling_identity() {
        for b in 0..=8i64 {
            for m in 0..=b {
                assert_eq!(
                    elm(m, 1, b),
                    stirling_first_unsigned((b + 1) as usize, b + 1 - m)
                );
            }
        }
    }

    #[test]
    fn elm_sign_splitting() {
        for a in 1..=6i64 {
            for b in 1..=6i64 {
                for m in 0..=(a + b + 2) {
                    let rhs: BigInt = (0..=m)
                        .map(|k| {
                            let sign = if k % 2 == 0 { big(1) } else { big(-1) };
                            sign * elm(k, 1, a) * elm(m - k, 1, b)
                        })
                        .sum();
                    let split: BigInt = (0..=m)
                        .map(|k| elm(k, -a, -1) * elm(m - k, 1, b))
                        .sum();
                    assert_eq!(split, rhs, "a={a} b={b} m={m}");
                    assert_eq!(elm(m, -a, b), rhs, "a={a} b={b} m={m}");
                }
            }
        }
    }

    #[test]
    fn worpitzky_identity() {
        for m in 1..=6usize {
            for x in 0..=10i64 {
                let rhs: BigInt = (0..m as i64)
                    .map(|a| eulerian(m, a) * binomial(x + a, m as i64))
                    .sum();
                assert_eq!(BigInt::from(x).pow(m as u32), rhs, "m={m} x={x}");
            }
        }
    }

    #[test]
    fn binomial_product_identity_spot_checks() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..20 {
            let (q, s): (i64, i64) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
            let (r, t): (i64, i64) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
            let lhs = binomial(q, r) * binomial(s, t);
            let rhs: BigInt = (0..=t)
                .map(|u| binomial(r - q + s, u) * binomial(t + q - s, t - u) * binomial(q + u, r + t))
                .sum();
            assert_eq!(lhs, rhs, "Q={q} R={r} S={s} T={t}");
        }
    }
}
