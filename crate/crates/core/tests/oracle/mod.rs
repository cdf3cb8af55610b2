//! Brute-force reference implementations over `Z/p^k`.
//!
//! Every search runs over projective points only: scaling a primitive
//! vector by a unit keeps it primitive and multiplies the value of a
//! quadratic form by a unit square.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hodgesig_core::poly::IntPoly;
use hodgesig_core::weil::WeilPolynomial;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn modpow(p: u64, k: u32) -> u64 {
    p.pow(k)
}

fn rem(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Marks the squares modulo `m`.
pub fn square_table(m: u64) -> Vec<bool> {
    let mut t = vec![false; m as usize];
    for z in 0..m {
        t[(z * z % m) as usize] = true;
    }
    t
}

/// Removes factors `p^2` from `a`.
pub fn strip_squares(mut a: i64, p: u64) -> i64 {
    let pp = (p * p) as i64;
    while a % pp == 0 {
        a /= pp;
    }
    a
}

/// Points of `P^1(Z/p^k)`: `(1, y)` and `(p x, 1)`.
pub fn projective_line(p: u64, k: u32) -> impl Iterator<Item = (u64, u64)> {
    let m = modpow(p, k);
    (0..m).map(|y| (1, y)).chain((0..m / p).map(move |x| (p * x % m, 1)))
}

/// `+1` iff `z^2 = a x^2 + b y^2` has a primitive solution modulo `p^k`,
/// after removing square factors of `p` so that both valuations are at
/// most 1, with `k = 2 * 1 + 3`.
pub struct HilbertOracle {
    p: u64,
    m: u64,
    squares: Vec<bool>,
}

impl HilbertOracle {
    pub fn new(p: u64) -> Self {
        let m = modpow(p, 5);
        HilbertOracle { p, m, squares: square_table(m) }
    }

    pub fn symbol(&self, a: i64, b: i64) -> i8 {
        let (p, m) = (self.p, self.m);
        let (a, b) = (rem(strip_squares(a, p), m), rem(strip_squares(b, p), m));
        // If p | x and p | y then p^2 | z^2, so z is not a unit either.
        let hit = projective_line(p, 5).any(|(x, y)| self.squares[((a * x % m * x + b * y % m * y) % m) as usize]);
        if hit {
            1
        } else {
            -1
        }
    }
}

pub fn hilbert_brute(a: i64, b: i64, p: u64) -> i8 {
    HilbertOracle::new(p).symbol(a, b)
}

fn val(mut t: u64, p: u64) -> u32 {
    let mut v = 0;
    while t.is_multiple_of(p) {
        t /= p;
        v += 1;
    }
    v
}

fn unit_class(u: u64, p: u64, sq_p: &[bool]) -> u64 {
    if p == 2 {
        u % 8
    } else if sq_p[(u % p) as usize] {
        1
    } else {
        0
    }
}

/// Square classes `(v mod 2, unit class)` represented by
/// `a x^2 + 2 b x y + c y^2` over `Q_p`, read off from values on primitive
/// vectors modulo `p^k`.
pub fn represented_classes(a: i64, b: i64, c: i64, p: u64) -> BTreeSet<(u32, u64)> {
    let det = a * c - b * b;
    assert!(det != 0);
    let margin = if p == 2 { 3 } else { 1 };
    let k = val(det.unsigned_abs(), p) + margin + 3;
    let m = modpow(p, k);
    let sq_p = square_table(p);
    let (a, b2, c) = (rem(a, m), rem(2 * b, m), rem(c, m));
    let mut out = BTreeSet::new();
    for (x, y) in projective_line(p, k) {
        let t = ((a * x % m * x) + (b2 * x % m * y) + (c * y % m * y)) % m;
        if t == 0 {
            continue;
        }
        let v = val(t, p);
        if v + margin > k {
            continue;
        }
        out.insert((v % 2, unit_class(t / p.pow(v), p, &sq_p)));
    }
    out
}

/// Rank-2 forms over `Q_p` are isometric iff they represent the same
/// square classes.
pub fn isomorphic_brute(f: (i64, i64, i64), g: (i64, i64, i64), p: u64) -> bool {
    represented_classes(f.0, f.1, f.2, p) == represented_classes(g.0, g.1, g.2, p)
}

/// Whether `x` is a norm from `Q_2(√d)`: a primitive solution of
/// `u^2 - d v^2 = x w^2` modulo `2^k`.
pub fn norm_brute_2(x: i64, d: i64, k: u32) -> bool {
    let m = modpow(2, k);
    let dm = rem(d, m);
    let mut all = vec![false; m as usize];
    let mut prim = vec![false; m as usize];
    for u in 0..m {
        for v in 0..m {
            let t = ((u * u % m) + m - (dm * (v * v % m) % m)) % m;
            all[t as usize] = true;
            if u % 2 == 1 || v % 2 == 1 {
                prim[t as usize] = true;
            }
        }
    }
    let xm = rem(x, m);
    (0..m).any(|w| {
        let t = (xm * (w * w % m) % m) as usize;
        if w % 2 == 1 {
            all[t]
        } else {
            prim[t]
        }
    })
}

/// Elements `a + b √-p` of `Z[√-p]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zsp {
    pub a: i64,
    pub b: i64,
}

impl Zsp {
    pub fn mul(self, o: Zsp, p: i64) -> Zsp {
        Zsp { a: self.a * o.a - p * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Counts for `(x^2 + p)^4` from its roots `±√-p` listed with
/// multiplicity: index subsets of size 2 with product `p`, of size 4 with
/// product `p^2`, and the conjugate-free value multisets among the latter.
pub fn supersingular_counts(p: i64) -> (usize, usize, usize) {
    let roots: Vec<Zsp> = [1, 1, 1, 1, -1, -1, -1, -1].iter().map(|&b| Zsp { a: 0, b }).collect();
    let prod = |s: &[usize]| s.iter().fold(Zsp { a: 1, b: 0 }, |acc, &i| acc.mul(roots[i], p));
    let rho1 = index_subsets(8, 2).iter().filter(|s| prod(s) == Zsp { a: p, b: 0 }).count();
    let hits: Vec<Vec<usize>> = index_subsets(8, 4).into_iter().filter(|s| prod(s) == Zsp { a: p * p, b: 0 }).collect();
    let mut values: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in &hits {
        let mut v: Vec<i64> = s.iter().map(|&i| roots[i].b).collect();
        v.sort();
        // The conjugate of a + b√-p is a - b√-p.
        if !(v.contains(&1) && v.contains(&-1)) {
            values.insert(v);
        }
    }
    (rho1, hits.len(), values.len())
}

/// Every Weil `q`-polynomial of degree `2g`, by testing each coefficient
/// vector in the box `|a_i| <= C(2g, i) q^(i/2)`.
pub fn weil_box(q: u64, g: usize) -> Vec<Vec<BigInt>> {
    let bounds: Vec<i64> = (1..=g)
        .map(|i| {
            let c = num_integer::binomial(2 * g as u64, i as u64) as f64;
            (c * (q as f64).powf(i as f64 / 2.0)).floor() as i64
        })
        .collect();
    let mut out = Vec::new();
    let mut a = vec![0i64; g];
    fn rec(i: usize, a: &mut Vec<i64>, bounds: &[i64], q: u64, g: usize, out: &mut Vec<Vec<BigInt>>) {
        if i == g {
            let mut c = vec![0i64; 2 * g + 1];
            c[2 * g] = 1;
            for (k, &ak) in a.iter().enumerate() {
                c[2 * g - 1 - k] = ak;
            }
            for k in 0..g {
                c[k] = (q as i64).pow((g - k) as u32) * c[2 * g - k];
            }
            if let Ok(p) = WeilPolynomial::from_i64(&c, q) {
                out.push(p.coeffs().to_vec());
            }
            return;
        }
        for v in -bounds[i]..=bounds[i] {
            a[i] = v;
            rec(i + 1, a, bounds, q, g, out);
        }
    }
    rec(0, &mut a, &bounds, q, g, &mut out);
    out
}

/// Elliptic count over `F_q` by checking the roots of `x^2 + a x + q`
/// directly: they are complex conjugates of modulus `√q` iff `a^2 <= 4q`.
pub fn elliptic_count(q: i64) -> usize {
    (-4 * q..=4 * q).filter(|a| a * a <= 4 * q).count()
}

/// `a + b ω` with `ω^2 = -1 - ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct Eis(pub BigInt, pub BigInt);

impl Eis {
    pub fn mul(&self, o: &Eis) -> Eis {
        // (a + bω)(c + dω) = ac - bd + (ad + bc - bd)ω
        let bd = &self.1 * &o.1;
        Eis(&self.0 * &o.0 - &bd, &self.0 * &o.1 + &self.1 * &o.0 - bd)
    }
}

pub fn eis_poly_mul(f: &[Eis], g: &[Eis]) -> Vec<Eis> {
    let mut out = vec![Eis(BigInt::zero(), BigInt::zero()); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            let t = a.mul(b);
            out[i + j].0 += t.0;
            out[i + j].1 += t.1;
        }
    }
    out
}

/// The polynomial whose roots are the `s`-th powers of those of `p`, for
/// `s` in `{2, 3}`, from `P(x) P(ζ x) ... P(ζ^(s-1) x)`.
pub fn power_root_poly(p: &IntPoly, s: usize) -> IntPoly {
    let n = p.degree();
    let twist = |k: usize| -> Vec<Eis> {
        // coefficient c_i ζ^(k i)
        (0..=n)
            .map(|i| {
                let c = p.coeff(i);
                let z = BigInt::zero();
                match (s, (k * i) % s) {
                    (_, 0) => Eis(c, z),
                    (2, _) => Eis(-c, z),
                    (_, 1) => Eis(z, c),
                    // ω^2 = -1 - ω
                    _ => Eis(-c.clone(), -c),
                }
            })
            .collect()
    };
    let mut prod = twist(0);
    for k in 1..s {
        prod = eis_poly_mul(&prod, &twist(k));
    }
    let sign = if n % 2 == 1 && s == 2 { -1 } else { 1 };
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|i| {
            let e = &prod[s * i];
            assert!(e.1.is_zero());
            for r in 1..s {
                if s * i + r < prod.len() {
                    assert!(prod[s * i + r].0.is_zero() && prod[s * i + r].1.is_zero());
                }
            }
            &e.0 * sign
        })
        .collect();
    IntPoly::new(coeffs)
}
