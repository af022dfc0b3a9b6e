//! Narrow-sense binary BCH codes, primitive and non-primitive.
//!
//! A code of odd length `n` lives in GF(2^m) with `m = ord_n(2)`. Its roots
//! are powers of `β = α^((2^m-1)/n)`, an element of order exactly `n`, and
//! the generator polynomial is the product of the distinct minimal
//! polynomials of `β^1, .., β^(δ-1)`.

use crate::error::{Error, Result};
use crate::gf2m::{BinaryPolynomial, FieldContext, GfElement};
use crate::linear_code::{LinearCode, MinDistance, DEFAULT_CODEWORD_BUDGET, MAX_LENGTH};

/// Orbit of an exponent under doubling modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    /// Smallest member.
    pub representative: usize,
    /// `representative · 2^j mod n` for `j = 0, 1, ..`, in that order.
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.contains(&e)
    }
}

fn check_odd(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    Ok(())
}

fn orbit(start: usize, n: usize) -> Vec<usize> {
    let mut members = vec![start];
    let mut x = start * 2 % n;
    while x != start {
        members.push(x);
        x = x * 2 % n;
    }
    members
}

/// The coset of `e` modulo `n`.
pub fn coset_of(e: usize, n: usize) -> Result<CyclotomicCoset> {
    check_odd(n)?;
    let members = orbit(e % n, n);
    Ok(CyclotomicCoset {
        representative: *members.iter().min().expect("orbit is nonempty"),
        members,
    })
}

/// Partition of `Z_n` into cyclotomic cosets, sorted by representative.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<CyclotomicCoset>> {
    check_odd(n)?;
    let mut covered = vec![false; n];
    let mut out = Vec::new();
    for r in 0..n {
        if covered[r] {
            continue;
        }
        let members = orbit(r, n);
        for &e in &members {
            covered[e] = true;
        }
        out.push(CyclotomicCoset {
            representative: r,
            members,
        });
    }
    Ok(out)
}

/// Multiplicative order of 2 modulo odd `n`.
pub fn order_of_two(n: usize) -> Result<u32> {
    check_odd(n)?;
    Ok(orbit(1, n).len() as u32)
}

/// Parameters of a narrow-sense BCH code.
#[derive(Clone, Debug)]
pub struct BchSpec {
    pub n: usize,
    /// `ord_n(2)`; the code's roots live in GF(2^m).
    pub m: u32,
    pub delta: usize,
    /// First consecutive root exponent; always 1.
    pub b: usize,
    /// `β = α^((2^m-1)/n)`.
    pub root_order_element: GfElement,
    pub generator: BinaryPolynomial,
}

impl BchSpec {
    fn field(n: usize) -> Result<(u32, FieldContext, GfElement)> {
        let m = order_of_two(n)?;
        if m > 16 {
            return Err(Error::OrderTooLarge { n, m });
        }
        let ctx = FieldContext::new(m)?;
        let beta = ctx.exp(ctx.order() / n);
        Ok((m, ctx, beta))
    }
}

/// `∏_{j ∈ coset(beta_power)} (x - β^j)`, which has coefficients in GF(2).
pub fn minimal_polynomial(ctx: &FieldContext, beta_power: usize, spec: &BchSpec) -> BinaryPolynomial {
    minimal_polynomial_of(ctx, spec.root_order_element, beta_power, spec.n)
}

fn minimal_polynomial_of(ctx: &FieldContext, beta: GfElement, power: usize, n: usize) -> BinaryPolynomial {
    let coset = orbit(power % n, n);
    // coefficients over GF(2^m), lowest degree first
    let mut poly = vec![GfElement::ONE];
    for &j in &coset {
        let root = ctx.pow(beta, j as u64);
        let mut next = vec![GfElement::ZERO; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1] + c;
            next[i] = next[i] + ctx.mul(c, root);
        }
        poly = next;
    }
    let coefficients: Vec<bool> = poly
        .iter()
        .map(|c| {
            assert!(c.0 <= 1, "conjugate-closed product left GF(2)");
            c.0 == 1
        })
        .collect();
    BinaryPolynomial::from_coefficients(&coefficients)
}

/// Builds the narrow-sense BCH code of length `n` and designed distance
/// `delta`, with its exact minimum distance when `2^k` fits the default
/// enumeration budget.
pub fn build_bch(n: usize, delta: usize) -> Result<(LinearCode, BchSpec)> {
    build_bch_with_budget(n, delta, DEFAULT_CODEWORD_BUDGET)
}

pub fn build_bch_with_budget(n: usize, delta: usize, codeword_budget: u64) -> Result<(LinearCode, BchSpec)> {
    check_odd(n)?;
    if n > MAX_LENGTH {
        return Err(Error::LengthUnsupported(n));
    }
    if !(2..=n).contains(&delta) {
        return Err(Error::DesignedDistance { n, delta });
    }
    let (m, ctx, beta) = BchSpec::field(n)?;
    debug_assert_eq!(ctx.element_order(beta), Some(n));

    let mut used: Vec<usize> = Vec::new();
    let mut generator = BinaryPolynomial::one();
    for e in 1..delta {
        let rep = *orbit(e, n).iter().min().expect("nonempty");
        if used.contains(&rep) {
            continue;
        }
        used.push(rep);
        generator = generator.mul(&minimal_polynomial_of(&ctx, beta, rep, n));
    }
    if generator.degree() == Some(n) {
        return Err(Error::DegenerateCode { n, delta });
    }
    let spec = BchSpec {
        n,
        m,
        delta,
        b: 1,
        root_order_element: beta,
        generator: generator.clone(),
    };
    let code = LinearCode::from_generator_poly(&generator, n)?;
    let k = code.k();
    let code = code
        .with_min_distance(MinDistance::lower_bound(delta))
        .with_computed_min_distance(codeword_budget);
    let d = code.known_min_distance().expect("just stored");
    let label = if d.is_exact() {
        format!("BCH [{n},{k},{}]", d.value)
    } else {
        format!("BCH [{n},{k},>={}]", d.value)
    };
    Ok((code.with_label(label), spec))
}

/// Field context matching a [`BchSpec`]; useful for evaluating `g(β^i)`.
pub fn field_for(spec: &BchSpec) -> Result<FieldContext> {
    FieldContext::new(spec.m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        let c15 = cyclotomic_cosets(15).unwrap();
        assert_eq!(c15[1].members, vec![1, 2, 4, 8]);
        let all: usize = c15.iter().map(CyclotomicCoset::len).sum();
        assert_eq!(all, 15);
        assert_eq!(coset_of(1, 17).unwrap().members, vec![1, 2, 4, 8, 16, 15, 13, 9]);
        assert_eq!(order_of_two(17).unwrap(), 8);
        assert_eq!(coset_of(1, 23).unwrap().len(), 11);
        assert_eq!(order_of_two(23).unwrap(), 11);
        assert!(matches!(cyclotomic_cosets(16), Err(Error::EvenLength(16))));
    }

    #[test]
    fn minimal_polynomials() {
        let (_, ctx, beta) = BchSpec::field(15).unwrap();
        let spec = BchSpec {
            n: 15,
            m: 4,
            delta: 3,
            b: 1,
            root_order_element: beta,
            generator: BinaryPolynomial::one(),
        };
        assert_eq!(
            minimal_polynomial(&ctx, 0, &spec),
            BinaryPolynomial::from_exponents(&[1, 0])
        );
        let m1 = minimal_polynomial(&ctx, 1, &spec);
        assert_eq!(m1.degree(), Some(4));
        assert_eq!(m1, *ctx.primitive_poly());
    }

    #[test]
    fn designed_roots_are_roots() {
        for (n, delta) in [(15, 5), (17, 3), (23, 5), (31, 11), (63, 11), (21, 5), (9, 3)] {
            let (code, spec) = build_bch(n, delta).unwrap();
            let ctx = field_for(&spec).unwrap();
            for i in 1..delta {
                let x = ctx.pow(spec.root_order_element, i as u64);
                assert_eq!(ctx.eval(&spec.generator, x), GfElement::ZERO, "n={n} i={i}");
            }
            let xn1 = BinaryPolynomial::from_exponents(&[n, 0]);
            assert!(spec.generator.divides(&xn1).unwrap());
            assert_eq!(code.k(), n - spec.generator.degree().unwrap());
        }
    }

    #[test]
    fn degenerate_and_invalid() {
        // narrow sense never reaches the root β^0, so δ = n still leaves the repetition code
        let (rep, _) = build_bch(7, 7).unwrap();
        assert_eq!((rep.k(), rep.min_distance_default().value), (1, 7));
        assert!(matches!(build_bch(7, 1), Err(Error::DesignedDistance { .. })));
        assert!(matches!(build_bch(8, 3), Err(Error::EvenLength(8))));
    }
}
