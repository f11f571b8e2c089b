//! Exact arithmetic for the coefficient field `Q(q,t)`.
//!
//! [`QTPoly`] is a sparse bivariate polynomial with arbitrary-precision
//! rational coefficients and no stored zero terms; two values are equal iff
//! their term maps are equal. [`QTRat`] is a reduced ratio of two `QTPoly`
//! with the denominator normalized to a primitive integer polynomial whose
//! leading coefficient (graded-lexicographic order, `q` before `t`) is
//! positive, so equality is structural there too.

mod gcd;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A monomial `q^a t^b`, ordered graded-lexicographically with `q` before `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QTMono {
    pub q: u32,
    pub t: u32,
}

impl QTMono {
    pub const ONE: QTMono = QTMono { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        QTMono { q, t }
    }

    pub fn total(&self) -> u32 {
        self.q + self.t
    }
}

impl Ord for QTMono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.q).cmp(&(other.total(), other.q))
    }
}

impl PartialOrd for QTMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial in `q`, `t` over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTPoly {
    terms: BTreeMap<QTMono, BigRational>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn one() -> Self {
        QTPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(QTMono::ONE, c);
        }
        QTPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        QTPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(m: QTMono, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QTPoly { terms }
    }

    /// The variable `q`.
    pub fn var_q() -> Self {
        QTPoly::monomial(QTMono::new(1, 0), BigRational::one())
    }

    /// The variable `t`.
    pub fn var_t() -> Self {
        QTPoly::monomial(QTMono::new(0, 1), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&QTMono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| *m == QTMono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QTMono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: QTMono) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest monomial in graded-lex order.
    pub fn leading_mono(&self) -> Option<QTMono> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading_mono()
            .map(|m| self.coeff(m))
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn valuation_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).min()
    }

    pub fn valuation_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).min()
    }

    fn insert_add(&mut self, m: QTMono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QTPoly) -> QTPoly {
        if self.is_zero() || other.is_zero() {
            return QTPoly::zero();
        }
        let mut out = QTPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(QTMono::new(ma.q + mb.q, ma.t + mb.t), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: QTMono) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (QTMono::new(k.q + m.q, k.t + m.t), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> QTPoly {
        let mut acc = QTPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Replace `q -> q^k`, `t -> t^k` by scaling every exponent.
    pub fn power_substitute(&self, k: u32) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (QTMono::new(m.q * k, m.t * k), c.clone()))
                .collect(),
        }
    }

    /// Substitute a rational constant for `t`, keeping a polynomial in `q`.
    pub fn subst_t_const(&self, v: &BigRational) -> QTPoly {
        let mut out = QTPoly::zero();
        let mut powers: Vec<BigRational> = vec![BigRational::one()];
        for (m, c) in &self.terms {
            while powers.len() <= m.t as usize {
                let last = powers.last().unwrap().clone();
                powers.push(last * v);
            }
            out.insert_add(QTMono::new(m.q, 0), c * &powers[m.t as usize]);
        }
        out
    }

    /// Substitute a rational constant for `q`, keeping a polynomial in `t`.
    pub fn subst_q_const(&self, v: &BigRational) -> QTPoly {
        let mut out = QTPoly::zero();
        let mut powers: Vec<BigRational> = vec![BigRational::one()];
        for (m, c) in &self.terms {
            while powers.len() <= m.q as usize {
                let last = powers.last().unwrap().clone();
                powers.push(last * v);
            }
            out.insert_add(QTMono::new(0, m.t), c * &powers[m.q as usize]);
        }
        out
    }

    /// Reverse the `t` exponents: returns `t^d * self(q, 1/t)` with `d = deg_t`.
    pub fn reverse_t(&self) -> QTPoly {
        let d = self.degree_t().unwrap_or(0);
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (QTMono::new(m.q, d - m.t), c.clone()))
                .collect(),
        }
    }

    /// Swap the roles of `q` and `t`.
    pub fn swap_qt(&self) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (QTMono::new(m.t, m.q), c.clone()))
                .collect(),
        }
    }

    /// Rational content and integer primitive part with positive leading
    /// coefficient, so that `self = content * primitive`.
    pub fn content_primitive(&self) -> (BigRational, QTPoly) {
        if self.is_zero() {
            return (BigRational::zero(), QTPoly::one());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = QTPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * &inv)).collect(),
        };
        (content, prim)
    }

    /// Exact polynomial division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &QTPoly) -> Option<QTPoly> {
        gcd::exact_div(self, other)
    }

    /// All coefficients are nonnegative (used by positivity findings).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluate at `q=1, t=1` (the sum of the coefficients).
    pub fn eval_ones(&self) -> BigRational {
        let mut s = BigRational::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *m == QTMono::ONE {
                parts.push(abs.to_string());
            }
            match m.q {
                0 => {}
                1 => parts.push("q".into()),
                e => parts.push(format!("q^{}", e)),
            }
            match m.t {
                0 => {}
                1 => parts.push("t".into()),
                e => parts.push(format!("t^{}", e)),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    q: u32,
    t: u32,
    c: String,
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                q: m.q,
                t: m.t,
                c: if c.is_integer() {
                    c.numer().to_string()
                } else {
                    c.to_string()
                },
            })
            .collect();
        recs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut out = QTPoly::zero();
        for r in recs {
            let c: BigRational = if let Some((n, d)) = r.c.split_once('/') {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                BigRational::new(n, d)
            } else {
                BigRational::from_integer(r.c.parse().map_err(D::Error::custom)?)
            };
            out.insert_add(QTMono::new(r.q, r.t), c);
        }
        Ok(out)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait<&QTPoly> for &QTPoly {
            type Output = QTPoly;
            fn $method(self, rhs: &QTPoly) -> QTPoly {
                QTPoly::$imp(self, rhs)
            }
        }
        impl std::ops::$trait<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $method(self, rhs: QTPoly) -> QTPoly {
                QTPoly::$imp(&self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add, add);
poly_binop!(Sub, sub, sub);
poly_binop!(Mul, mul, mul);

impl std::ops::Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly::neg(self)
    }
}

/// A reduced rational function `num/den` over `Q(q,t)`.
///
/// Canonical form: `den` is a primitive integer polynomial with positive
/// leading coefficient in graded-lex order, `gcd(num, den)` is a unit, and
/// zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTRat {
    num: QTPoly,
    den: QTPoly,
}

impl QTRat {
    pub fn zero() -> Self {
        QTRat {
            num: QTPoly::zero(),
            den: QTPoly::one(),
        }
    }

    pub fn one() -> Self {
        QTRat {
            num: QTPoly::one(),
            den: QTPoly::one(),
        }
    }

    pub fn from_poly(p: QTPoly) -> Self {
        QTRat {
            num: p,
            den: QTPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QTRat::from_poly(QTPoly::from_int(n))
    }

    pub fn constant(c: BigRational) -> Self {
        QTRat::from_poly(QTPoly::constant(c))
    }

    pub fn var_q() -> Self {
        QTRat::from_poly(QTPoly::var_q())
    }

    pub fn var_t() -> Self {
        QTRat::from_poly(QTPoly::var_t())
    }

    /// Build `num/den` in canonical reduced form.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QTRat::zero());
        }
        if den.is_constant() {
            let c = den.leading_coeff();
            return Ok(QTRat {
                num: num.mul_scalar(&c.recip()),
                den: QTPoly::one(),
            });
        }
        let (cn, pn) = num.content_primitive();
        let (cd, pd) = den.content_primitive();
        let g = gcd::gcd(&pn, &pd);
        let (a, b) = if g.is_one() {
            (pn, pd)
        } else {
            (
                pn.exact_div(&g).expect("gcd divides"),
                pd.exact_div(&g).expect("gcd divides"),
            )
        };
        let scalar = cn / cd;
        if b.is_constant() {
            let c = b.leading_coeff();
            Ok(QTRat {
                num: a.mul_scalar(&(scalar / c)),
                den: QTPoly::one(),
            })
        } else {
            Ok(QTRat {
                num: a.mul_scalar(&scalar),
                den: b,
            })
        }
    }

    pub fn numerator(&self) -> &QTPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QTPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The underlying polynomial when the denominator is 1 and every
    /// coefficient is an integer; errors otherwise.
    pub fn to_int_poly(&self) -> Result<QTPoly> {
        match self.as_poly() {
            Some(p) if p.is_integral() => Ok(p.clone()),
            _ => Err(Error::InternalConsistency(format!(
                "expected integer polynomial, got {}",
                self
            ))),
        }
    }

    pub fn add(&self, other: &QTRat) -> QTRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return QTRat::new(self.num.add(&other.num), self.den.clone()).expect("den nonzero");
        }
        let g = gcd::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = &self.num * &other.den + &other.num * &self.den;
            let den = &self.den * &other.den;
            QTRat::new(num, den).expect("den nonzero")
        } else {
            let db = self.den.exact_div(&g).expect("gcd divides");
            let dd = other.den.exact_div(&g).expect("gcd divides");
            let num = &self.num * &dd + &other.num * &db;
            let den = &self.den * &dd;
            QTRat::new(num, den).expect("den nonzero")
        }
    }

    pub fn sub(&self, other: &QTRat) -> QTRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QTRat {
        QTRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &QTRat) -> QTRat {
        if self.is_zero() || other.is_zero() {
            return QTRat::zero();
        }
        // cross-cancel before multiplying to keep products small
        let (ca, pa) = self.num.content_primitive();
        let (cb, pb) = other.num.content_primitive();
        let g1 = gcd::gcd(&pa, &other.den);
        let g2 = gcd::gcd(&pb, &self.den);
        let a = pa.exact_div(&g1).expect("gcd divides");
        let b = pb.exact_div(&g2).expect("gcd divides");
        let da = self.den.exact_div(&g2).expect("gcd divides");
        let db = other.den.exact_div(&g1).expect("gcd divides");
        let num = a.mul(&b).mul_scalar(&(ca * cb));
        QTRat::new(num, da.mul(&db)).expect("den nonzero")
    }

    pub fn div(&self, other: &QTRat) -> Result<QTRat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&other.recip()?))
    }

    pub fn recip(&self) -> Result<QTRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QTRat::new(self.den.clone(), self.num.clone())
    }

    /// Replace `q -> q^k`, `t -> t^k`.
    pub fn power_substitute(&self, k: u32) -> QTRat {
        // exponent scaling preserves coprimality and the leading-sign normalization
        QTRat {
            num: self.num.power_substitute(k),
            den: self.den.power_substitute(k),
        }
    }

    /// Replace `t -> 1/t`, clearing to a polynomial ratio.
    pub fn invert_t(&self) -> QTRat {
        if self.is_zero() {
            return QTRat::zero();
        }
        let dn = self.num.degree_t().unwrap_or(0);
        let dd = self.den.degree_t().unwrap_or(0);
        let mut num = self.num.reverse_t();
        let mut den = self.den.reverse_t();
        if dd > dn {
            num = num.mul_mono(QTMono::new(0, dd - dn));
        } else {
            den = den.mul_mono(QTMono::new(0, dn - dd));
        }
        QTRat::new(num, den).expect("den nonzero")
    }

    /// Swap `q` and `t`.
    pub fn swap_qt(&self) -> QTRat {
        QTRat::new(self.num.swap_qt(), self.den.swap_qt()).expect("den nonzero")
    }

    /// Substitute rational functions for `q` and/or `t`.
    ///
    /// `None` leaves the variable untouched. Errors with [`Error::Pole`] when
    /// the denominator vanishes under the substitution.
    pub fn specialize(&self, q_sub: Option<&QTRat>, t_sub: Option<&QTRat>) -> Result<QTRat> {
        if q_sub.is_none() && t_sub.is_none() {
            return Ok(self.clone());
        }
        let describe = || {
            let mut s = Vec::new();
            if let Some(v) = q_sub {
                s.push(format!("q -> {}", v));
            }
            if let Some(v) = t_sub {
                s.push(format!("t -> {}", v));
            }
            s.join(", ")
        };
        let num = subst_poly(&self.num, q_sub, t_sub);
        let den = subst_poly(&self.den, q_sub, t_sub);
        if den.is_zero() {
            return Err(Error::Pole(describe()));
        }
        num.div(&den).map_err(|_| Error::Pole(describe()))
    }
}

/// Substitute into a polynomial, yielding a rational function.
fn subst_poly(p: &QTPoly, q_sub: Option<&QTRat>, t_sub: Option<&QTRat>) -> QTRat {
    // constant-substitution fast paths stay inside QTPoly
    let const_of = |r: Option<&QTRat>| -> Option<Option<BigRational>> {
        match r {
            None => Some(None),
            Some(v) => {
                if v.is_polynomial() && v.num.is_constant() {
                    Some(Some(v.num.leading_coeff()))
                } else {
                    None
                }
            }
        }
    };
    if let (Some(qc), Some(tc)) = (const_of(q_sub), const_of(t_sub)) {
        let mut out = p.clone();
        if let Some(v) = qc {
            out = out.subst_q_const(&v);
        }
        if let Some(v) = tc {
            out = out.subst_t_const(&v);
        }
        return QTRat::from_poly(out);
    }
    let mut qpow: Vec<QTRat> = vec![QTRat::one()];
    let mut tpow: Vec<QTRat> = vec![QTRat::one()];
    let qv = q_sub.cloned().unwrap_or_else(QTRat::var_q);
    let tv = t_sub.cloned().unwrap_or_else(QTRat::var_t);
    let mut acc = QTRat::zero();
    for (m, c) in p.terms() {
        while qpow.len() <= m.q as usize {
            let last = qpow.last().unwrap().clone();
            qpow.push(last.mul(&qv));
        }
        while tpow.len() <= m.t as usize {
            let last = tpow.last().unwrap().clone();
            tpow.push(last.mul(&tv));
        }
        let term = qpow[m.q as usize]
            .mul(&tpow[m.t as usize])
            .mul(&QTRat::constant(c.clone()));
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait<&QTRat> for &QTRat {
            type Output = QTRat;
            fn $method(self, rhs: &QTRat) -> QTRat {
                QTRat::$imp(self, rhs)
            }
        }
        impl std::ops::$trait<QTRat> for QTRat {
            type Output = QTRat;
            fn $method(self, rhs: QTRat) -> QTRat {
                QTRat::$imp(&self, &rhs)
            }
        }
    };
}

rat_binop!(Add, add, add);
rat_binop!(Sub, sub, sub);
rat_binop!(Mul, mul, mul);

impl std::ops::Neg for &QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        QTRat::neg(self)
    }
}

/// `1 - q^a t^b`, a building block for arm/leg products and pairing weights.
pub fn one_minus(m: QTMono) -> QTPoly {
    let mut p = QTPoly::one();
    p.insert_add(m, -BigRational::one());
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QTRat {
        QTRat::var_q()
    }

    fn t() -> QTRat {
        QTRat::var_t()
    }

    fn ipoly(s: &[(u32, u32, i64)]) -> QTPoly {
        let mut p = QTPoly::zero();
        for &(a, b, c) in s {
            p = p.add(&QTPoly::monomial(
                QTMono::new(a, b),
                BigRational::from_integer(c.into()),
            ));
        }
        p
    }

    #[test]
    fn mono_order_is_graded_lex() {
        // q^2 > qt > t^2 > q > t > 1
        let ms = [
            QTMono::new(2, 0),
            QTMono::new(1, 1),
            QTMono::new(0, 2),
            QTMono::new(1, 0),
            QTMono::new(0, 1),
            QTMono::new(0, 0),
        ];
        for w in ms.windows(2) {
            assert!(w[0] > w[1], "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn add_with_common_denominator() {
        // q/(1-t) + qt/(1-t) = q(1+t)/(1-t)
        let one_minus_t = ipoly(&[(0, 0, 1), (0, 1, -1)]);
        let a = QTRat::new(ipoly(&[(1, 0, 1)]), one_minus_t.clone()).unwrap();
        let b = QTRat::new(ipoly(&[(1, 1, 1)]), one_minus_t.clone()).unwrap();
        let sum = a.add(&b);
        let expect = QTRat::new(ipoly(&[(1, 0, 1), (1, 1, 1)]), one_minus_t).unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn mul_by_zero_absorbs() {
        let x = QTRat::new(ipoly(&[(1, 2, 3), (0, 0, 1)]), ipoly(&[(0, 1, 1), (0, 0, 2)])).unwrap();
        assert!(x.mul(&QTRat::zero()).is_zero());
    }

    #[test]
    fn geometric_sum_reduces_by_long_division() {
        // oracle: (1-q^3)/(1-q) computed by polynomial long division
        let num = ipoly(&[(0, 0, 1), (3, 0, -1)]);
        let den = ipoly(&[(0, 0, 1), (1, 0, -1)]);
        let quotient = num.exact_div(&den).expect("divides");
        assert_eq!(quotient, ipoly(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)]));
        let r = QTRat::new(num, den).unwrap();
        assert_eq!(r, QTRat::from_poly(quotient));
    }

    #[test]
    fn specialize_t_at_one() {
        // t^3 + q t at t=1 -> 1 + q
        let p = QTRat::from_poly(ipoly(&[(0, 3, 1), (1, 1, 1)]));
        let got = p.specialize(None, Some(&QTRat::one())).unwrap();
        assert_eq!(got, QTRat::from_poly(ipoly(&[(0, 0, 1), (1, 0, 1)])));
        let both = p
            .specialize(Some(&QTRat::one()), Some(&QTRat::one()))
            .unwrap();
        assert_eq!(both, QTRat::from_int(2));
    }

    #[test]
    fn specialize_identity_substitution() {
        let f = QTRat::new(
            ipoly(&[(1, 0, 1), (0, 1, 2)]),
            ipoly(&[(0, 0, 1), (1, 1, -1)]),
        )
        .unwrap();
        let got = f.specialize(Some(&q()), Some(&t())).unwrap();
        assert_eq!(got, f);
    }

    #[test]
    fn specialize_pole_is_reported() {
        // 1/(1-t) at t=1
        let f = QTRat::new(QTPoly::one(), ipoly(&[(0, 0, 1), (0, 1, -1)])).unwrap();
        match f.specialize(None, Some(&QTRat::one())) {
            Err(Error::Pole(desc)) => assert!(desc.contains("t -> 1")),
            other => panic!("expected pole, got {:?}", other),
        }
    }

    #[test]
    fn specialize_q_over_t_rewrite() {
        // (q t) at q -> q/t gives q
        let f = QTRat::from_poly(ipoly(&[(1, 1, 1)]));
        let q_over_t = q().div(&t()).unwrap();
        let got = f.specialize(Some(&q_over_t), None).unwrap();
        assert_eq!(got, q());
    }

    #[test]
    fn power_substitute_scaling() {
        // 1/(1-t) with k=2 -> 1/(1-t^2)
        let f = QTRat::new(QTPoly::one(), ipoly(&[(0, 0, 1), (0, 1, -1)])).unwrap();
        let g = f.power_substitute(2);
        let expect = QTRat::new(QTPoly::one(), ipoly(&[(0, 0, 1), (0, 2, -1)])).unwrap();
        assert_eq!(g, expect);
        // q + t with k=3 -> q^3 + t^3
        let h = QTRat::from_poly(ipoly(&[(1, 0, 1), (0, 1, 1)])).power_substitute(3);
        assert_eq!(h, QTRat::from_poly(ipoly(&[(3, 0, 1), (0, 3, 1)])));
        // canonical form preserved: (1+q)/(1-t) at k=2
        let r = QTRat::new(
            ipoly(&[(0, 0, 1), (1, 0, 1)]),
            ipoly(&[(0, 0, 1), (0, 1, -1)]),
        )
        .unwrap()
        .power_substitute(2);
        let expect = QTRat::new(
            ipoly(&[(0, 0, 1), (2, 0, 1)]),
            ipoly(&[(0, 0, 1), (0, 2, -1)]),
        )
        .unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn invert_t_clears_to_polynomials() {
        // t^2 -> 1/t^2
        let f = QTRat::from_poly(ipoly(&[(0, 2, 1)]));
        let g = f.invert_t();
        assert_eq!(g, QTRat::new(QTPoly::one(), ipoly(&[(0, 2, 1)])).unwrap());
        assert_eq!(g.invert_t(), f);
        // (1 - q t)/(1 - t): t->1/t gives (t - q)/(t - 1)
        let f = QTRat::new(
            ipoly(&[(0, 0, 1), (1, 1, -1)]),
            ipoly(&[(0, 0, 1), (0, 1, -1)]),
        )
        .unwrap();
        let g = f.invert_t();
        let expect = QTRat::new(
            ipoly(&[(0, 1, 1), (1, 0, -1)]),
            ipoly(&[(0, 1, 1), (0, 0, -1)]),
        )
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn denominator_sign_is_normalized() {
        // 1/(t-1) and -1/(1-t) are the same canonical value
        let a = QTRat::new(QTPoly::one(), ipoly(&[(0, 1, 1), (0, 0, -1)])).unwrap();
        let b = QTRat::new(ipoly(&[(0, 0, -1)]), ipoly(&[(0, 0, 1), (0, 1, -1)])).unwrap();
        assert_eq!(a, b);
        assert!(a.denominator().leading_coeff() > BigRational::zero());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert!(matches!(
            QTRat::one().div(&QTRat::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            QTRat::new(QTPoly::one(), QTPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn serde_roundtrip_sorted_records() {
        let p = ipoly(&[(2, 1, 3), (0, 0, -5), (1, 4, 7)]);
        let s = serde_json::to_string(&p).unwrap();
        let back: QTPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
        // records are sorted by the canonical monomial order
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr[0]["q"], 0);
        assert_eq!(arr[0]["c"], "-5");
    }

    #[test]
    fn display_matches_cli_monomial_format() {
        let p = ipoly(&[(0, 3, 1), (1, 1, 1)]);
        assert_eq!(p.to_string(), "t^3 + q*t");
        let m = ipoly(&[(2, 0, -2), (0, 0, 1)]);
        assert_eq!(m.to_string(), "-2*q^2 + 1");
    }
}
