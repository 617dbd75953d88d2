//! Closed-form Turán values and bounds.

use crate::error::{Error, Result};
use num_rational::Rational64;

/// Forbidden graphs with a known closed-form Turán number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TuranTarget {
    P3sq,
    P4sq,
    P5sq,
    P6sq,
    FlatTetra,
}

/// `f_T(n)`: maximum edges of an n-vertex graph avoiding the flattened
/// tetrahedron (valid for n != 5).
fn f_flat_tetra(n: usize) -> usize {
    if n % 4 == 2 {
        n * n / 4 + n / 2 - 1
    } else {
        n * n / 4 + n / 2
    }
}

fn f_p6sq(n: usize) -> usize {
    if matches!(n % 6, 1 | 2 | 3) {
        n * n / 4 + (n - 1) / 2
    } else {
        n * n / 4 + n.div_ceil(2)
    }
}

pub fn closed_form_ex(target: TuranTarget, n: usize) -> Result<usize> {
    use TuranTarget::*;
    match target {
        P3sq => Ok(n * n / 4),
        P4sq => {
            if n < 4 {
                Err(Error::Domain(format!("P4sq formula needs n >= 4, got {n}")))
            } else {
                Ok(n * n / 4)
            }
        }
        P5sq => {
            if n < 5 {
                Err(Error::Domain(format!("P5sq formula needs n >= 5, got {n}")))
            } else {
                Ok((n * n + n) / 4)
            }
        }
        FlatTetra => {
            if n == 5 {
                Err(Error::Domain("flattened-tetrahedron formula excludes n = 5".into()))
            } else {
                Ok(f_flat_tetra(n))
            }
        }
        P6sq => {
            if n == 5 {
                Err(Error::Domain("P6sq formula excludes n = 5".into()))
            } else {
                Ok(f_p6sq(n))
            }
        }
    }
}

/// `n(l-2)/2`, the classical path bound, as an exact rational.
pub fn erdos_gallai_bound(n: usize, l: usize) -> Result<Rational64> {
    if l < 2 {
        return Err(Error::Domain(format!("path bound needs l >= 2, got {l}")));
    }
    Ok(Rational64::new(n as i64 * (l as i64 - 2), 2))
}

/// Exact `ex(n, P_l)`: with `n = r (mod l-1)`, `(l-2)n/2 - r(l-1-r)/2`.
pub fn faudree_schelp_ex(n: usize, l: usize) -> Result<usize> {
    if l < 3 || n < 1 {
        return Err(Error::Domain(format!(
            "exact path formula needs l >= 3, n >= 1, got l={l}, n={n}"
        )));
    }
    let r = n % (l - 1);
    let twice = (l - 2) * n - r * (l - 1 - r);
    debug_assert_eq!(twice % 2, 0);
    Ok(twice / 2)
}

/// Value and optimizing part size of the conjectured bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub value: Rational64,
    pub argmax_i: usize,
}

/// Maximize `i(floor(2k/3)-2)/2 + i(n-i)` over integer `i` in `[0,n]`,
/// returning the exact rational maximum and the smallest maximizing `i`.
pub fn conjecture_bound(k: usize, n: usize) -> Result<BoundValue> {
    if k < 3 {
        return Err(Error::Domain(format!("conjecture bound needs k >= 3, got {k}")));
    }
    let c = Rational64::new((2 * k / 3) as i64 - 2, 2);
    let mut best = BoundValue {
        value: Rational64::from_integer(0),
        argmax_i: 0,
    };
    for i in 0..=n as i64 {
        let value = c * i + Rational64::from_integer(i * (n as i64 - i));
        if value > best.value {
            best = BoundValue {
                value,
                argmax_i: i as usize,
            };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TuranTarget::*;

    #[test]
    fn paper_spot_values() {
        assert_eq!(closed_form_ex(P5sq, 8).unwrap(), 18);
        assert_eq!(closed_form_ex(FlatTetra, 6).unwrap(), 11);
        assert_eq!(closed_form_ex(P6sq, 11).unwrap(), 36);
        assert_eq!(closed_form_ex(P3sq, 10).unwrap(), 25);
        assert_eq!(closed_form_ex(P6sq, 6).unwrap(), 12);
        assert_eq!(closed_form_ex(P6sq, 7).unwrap(), 15);
        assert_eq!(closed_form_ex(P6sq, 8).unwrap(), 19);
        assert_eq!(closed_form_ex(P6sq, 9).unwrap(), 24);
        assert_eq!(closed_form_ex(FlatTetra, 8).unwrap(), 20);
        assert_eq!(closed_form_ex(FlatTetra, 9).unwrap(), 24);
        assert!(closed_form_ex(FlatTetra, 5).is_err());
        assert!(closed_form_ex(P6sq, 5).is_err());
    }

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai_bound(6, 4).unwrap(), Rational64::from_integer(6));
        for n in 1..20 {
            assert_eq!(erdos_gallai_bound(n, 2).unwrap(), Rational64::from_integer(0));
        }
        assert_eq!(erdos_gallai_bound(5, 4).unwrap(), Rational64::from_integer(5));
        assert_eq!(erdos_gallai_bound(5, 5).unwrap(), Rational64::new(15, 2));
        assert!(erdos_gallai_bound(5, 1).is_err());
    }

    #[test]
    fn faudree_schelp_values() {
        assert_eq!(faudree_schelp_ex(5, 4).unwrap(), 4);
        assert_eq!(faudree_schelp_ex(6, 4).unwrap(), 6);
        assert_eq!(faudree_schelp_ex(7, 3).unwrap(), 3);
    }

    #[test]
    fn faudree_schelp_below_erdos_gallai() {
        for l in 3..=8 {
            for n in l..=30 {
                let exact = Rational64::from_integer(faudree_schelp_ex(n, l).unwrap() as i64);
                let bound = erdos_gallai_bound(n, l).unwrap();
                assert!(exact <= bound, "n={n} l={l}");
                assert_eq!(exact == bound, n % (l - 1) == 0, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn conjecture_bound_examples() {
        let b = conjecture_bound(6, 6).unwrap();
        assert_eq!(b.value, Rational64::from_integer(12));
        assert_eq!(b.argmax_i, 3);

        let b = conjecture_bound(3, 10).unwrap();
        assert_eq!(b.value, Rational64::from_integer(25));

        let b = conjecture_bound(5, 8).unwrap();
        assert_eq!(b.value, Rational64::from_integer(18));
    }

    #[test]
    fn closed_forms_monotone_in_n() {
        let domains: [(TuranTarget, usize); 5] =
            [(P3sq, 1), (P4sq, 4), (P5sq, 5), (P6sq, 6), (FlatTetra, 6)];
        for (t, start) in domains {
            let mut prev = closed_form_ex(t, start).unwrap();
            for n in start + 1..=40 {
                let cur = closed_form_ex(t, n).unwrap();
                assert!(cur >= prev, "{t:?} at n={n}");
                prev = cur;
            }
        }
    }
}
