//! Bivariate integer gcd via content/primitive-part splitting and primitive
//! pseudo-remainder sequences, plus exact polynomial division.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::{QTMono, QTPoly};

// ---------- univariate integer polynomials (dense Vec<BigInt>) ----------

fn utrim(p: &mut Vec<BigInt>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn udeg(p: &[BigInt]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn umul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    utrim(&mut out);
    out
}

fn uscale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn usub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    utrim(&mut out);
    out
}

fn ucontent(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uprimitive(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = ucontent(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact division over the integers; `None` when not divisible.
fn uexact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let db = udeg(b)?;
    let da = udeg(a).unwrap();
    if da < db {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quo = vec![BigInt::zero(); da - db + 1];
    let lb = &b[db];
    for k in (0..=da - db).rev() {
        let idx = db + k;
        let lead = if idx < rem.len() {
            rem[idx].clone()
        } else {
            BigInt::zero()
        };
        if lead.is_zero() {
            continue;
        }
        let (c, r) = lead.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        quo[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[j + k] -= &c * bc;
        }
    }
    utrim(&mut rem);
    if rem.is_empty() {
        Some(quo)
    } else {
        None
    }
}

/// Primitive PRS gcd over `Z[y]`; result primitive with positive lead.
fn ugcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return uprimitive(b);
    }
    if b.is_empty() {
        return uprimitive(a);
    }
    let ca = ucontent(a);
    let cb = ucontent(b);
    let cg = ca.gcd(&cb);
    let mut f = uprimitive(a);
    let mut g = uprimitive(b);
    if udeg(&f) < udeg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let dg = udeg(&g).unwrap();
        if dg == 0 {
            // primitive constant is 1
            return uscale(&[BigInt::one()], &cg);
        }
        let r = upseudo_rem(&f, &g);
        if r.is_empty() {
            let pg = uprimitive(&g);
            return uscale(&pg, &cg);
        }
        f = g;
        g = uprimitive(&r);
    }
}

fn upseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = udeg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r = a.to_vec();
    while let Some(dr) = udeg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend_from_slice(b);
        r = usub(&uscale(&r, &lb), &uscale(&shifted, &lr));
    }
    r
}

// ---------- bivariate: main variable X over Z[y] ----------

type BPoly = Vec<Vec<BigInt>>; // coeff[i] = coefficient of X^i, a poly in y

fn btrim(p: &mut BPoly) {
    while p.last().map(|c| c.is_empty()).unwrap_or(false) {
        p.pop();
    }
}

fn bdeg(p: &BPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn bcontent(p: &BPoly) -> Vec<BigInt> {
    let mut g: Vec<BigInt> = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { uprimitive(c) } else { ugcd(&g, c) };
        if udeg(&g) == Some(0) && g[0].is_one() {
            break;
        }
    }
    g
}

fn bdiv_content(p: &BPoly, cont: &[BigInt]) -> BPoly {
    p.iter()
        .map(|c| {
            if c.is_empty() {
                Vec::new()
            } else {
                uexact_div(c, cont).expect("content divides")
            }
        })
        .collect()
}

fn bpseudo_rem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = bdeg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r = a.clone();
    loop {
        btrim(&mut r);
        let dr = match bdeg(&r) {
            None => break,
            Some(d) => d,
        };
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let mut out: BPoly = vec![Vec::new(); dr.max(r.len())];
        for (i, c) in r.iter().enumerate() {
            out[i] = umul(c, &lb);
        }
        for (j, c) in b.iter().enumerate() {
            let k = j + dr - db;
            let sub = umul(c, &lr);
            out[k] = {
                let mut v = std::mem::take(&mut out[k]);
                v = usub(&v, &sub);
                v
            };
        }
        r = out;
    }
    btrim(&mut r);
    r
}

/// gcd of primitive bivariate polys via primitive PRS in the main variable.
fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = bcontent(a);
    let cb = bcontent(b);
    let cg = ugcd(&ca, &cb);
    let mut f = bdiv_content(a, &ca);
    let mut g = bdiv_content(b, &cb);
    if bdeg(&f) < bdeg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    let pp = loop {
        let dg = bdeg(&g).expect("nonzero");
        if dg == 0 {
            // primitive in main var with constant degree: pp gcd is 1
            break vec![vec![BigInt::one()]];
        }
        let r = bpseudo_rem(&f, &g);
        if r.is_empty() {
            let cont = bcontent(&g);
            break bdiv_content(&g, &cont);
        }
        f = g;
        let cont = bcontent(&r);
        g = bdiv_content(&r, &cont);
    };
    // multiply back the content gcd
    pp.iter().map(|c| umul(c, &cg)).collect()
}

// ---------- conversions ----------

fn to_bpoly(p: &QTPoly, q_major: bool) -> BPoly {
    let dx = if q_major { p.degree_q() } else { p.degree_t() }.unwrap_or(0) as usize;
    let mut out: BPoly = vec![Vec::new(); dx + 1];
    for (m, c) in p.terms() {
        debug_assert!(c.is_integer());
        let (i, j) = if q_major {
            (m.q as usize, m.t as usize)
        } else {
            (m.t as usize, m.q as usize)
        };
        if out[i].len() <= j {
            out[i].resize(j + 1, BigInt::zero());
        }
        out[i][j] = c.numer().clone();
    }
    for c in &mut out {
        utrim(c);
    }
    out
}

fn from_bpoly(p: &BPoly, q_major: bool) -> QTPoly {
    let mut out = QTPoly::zero();
    for (i, c) in p.iter().enumerate() {
        for (j, v) in c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let m = if q_major {
                QTMono::new(i as u32, j as u32)
            } else {
                QTMono::new(j as u32, i as u32)
            };
            out = out.add(&QTPoly::monomial(m, BigRational::from_integer(v.clone())));
        }
    }
    out
}

/// gcd of two polynomials, returned as the primitive integer polynomial with
/// positive leading coefficient (graded-lex). `gcd(0, b) = primitive(b)`.
pub fn gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return b.content_primitive().1;
    }
    if b.is_zero() {
        return a.content_primitive().1;
    }
    let (_, pa) = a.content_primitive();
    let (_, pb) = b.content_primitive();
    if pa == pb {
        return pa;
    }
    if pa.is_one() || pb.is_one() {
        // still share a monomial factor when both valuations are positive
        let m = QTMono::new(
            pa.valuation_q().unwrap().min(pb.valuation_q().unwrap()),
            pa.valuation_t().unwrap().min(pb.valuation_t().unwrap()),
        );
        return QTPoly::monomial(m, BigRational::one());
    }
    // strip per-poly monomial factors; the gcd gets the common one
    let strip = |p: &QTPoly| -> (QTMono, QTPoly) {
        let m = QTMono::new(p.valuation_q().unwrap(), p.valuation_t().unwrap());
        if m == QTMono::ONE {
            (m, p.clone())
        } else {
            (
                m,
                QTPoly {
                    terms: p
                        .terms()
                        .map(|(k, c)| (QTMono::new(k.q - m.q, k.t - m.t), c.clone()))
                        .collect(),
                },
            )
        }
    };
    let (ma, sa) = strip(&pa);
    let (mb, sb) = strip(&pb);
    let common = QTMono::new(ma.q.min(mb.q), ma.t.min(mb.t));
    let core = gcd_stripped(&sa, &sb);
    if common == QTMono::ONE {
        core
    } else {
        core.mul_mono(common)
    }
}

fn gcd_stripped(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a == b {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return QTPoly::one();
    }
    // trial division: very often one argument divides the other
    let (small, large) = if (a.num_terms(), a.leading_mono()) <= (b.num_terms(), b.leading_mono())
    {
        (a, b)
    } else {
        (b, a)
    };
    if large.exact_div(small).is_some() {
        return small.clone();
    }
    let qa = a.degree_q().unwrap_or(0);
    let qb = b.degree_q().unwrap_or(0);
    let ta = a.degree_t().unwrap_or(0);
    let tb = b.degree_t().unwrap_or(0);
    if qa == 0 && qb == 0 {
        let g = ugcd(&to_bpoly(a, false)[..].concat_t(), &to_bpoly(b, false).concat_t());
        return from_univ_t(&g);
    }
    if ta == 0 && tb == 0 {
        let g = ugcd(&to_bpoly(a, true).concat_t(), &to_bpoly(b, true).concat_t());
        return from_univ_q(&g);
    }
    // pick the main variable with smaller max degree to shorten the PRS
    let q_major = qa.max(qb) <= ta.max(tb);
    let g = bgcd(&to_bpoly(a, q_major), &to_bpoly(b, q_major));
    let (_, prim) = from_bpoly(&g, q_major).content_primitive();
    prim
}

trait ConcatT {
    fn concat_t(&self) -> Vec<BigInt>;
}

impl ConcatT for BPoly {
    fn concat_t(&self) -> Vec<BigInt> {
        // a univariate poly stored as bivariate with main-degree 0
        self.first().cloned().unwrap_or_default()
    }
}

impl ConcatT for [Vec<BigInt>] {
    fn concat_t(&self) -> Vec<BigInt> {
        self.first().cloned().unwrap_or_default()
    }
}

fn from_univ_t(p: &[BigInt]) -> QTPoly {
    let mut out = QTPoly::zero();
    for (j, v) in p.iter().enumerate() {
        if !v.is_zero() {
            out = out.add(&QTPoly::monomial(
                QTMono::new(0, j as u32),
                BigRational::from_integer(v.clone()),
            ));
        }
    }
    out
}

fn from_univ_q(p: &[BigInt]) -> QTPoly {
    let mut out = QTPoly::zero();
    for (j, v) in p.iter().enumerate() {
        if !v.is_zero() {
            out = out.add(&QTPoly::monomial(
                QTMono::new(j as u32, 0),
                BigRational::from_integer(v.clone()),
            ));
        }
    }
    out
}

// ---------- exact division with rational coefficients ----------

type RUniv = Vec<BigRational>;

fn rtrim(p: &mut RUniv) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rexact_div(a: &[BigRational], b: &[BigRational]) -> Option<RUniv> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.is_empty() || a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut rem = a.to_vec();
    let mut quo = vec![BigRational::zero(); da - db + 1];
    let lb = b[db].clone();
    for k in (0..=da - db).rev() {
        let lead = rem[db + k].clone();
        if lead.is_zero() {
            continue;
        }
        let c = lead / &lb;
        quo[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let prod = &c * bc;
            rem[j + k] -= prod;
        }
    }
    rtrim(&mut rem);
    if rem.is_empty() {
        Some(quo)
    } else {
        None
    }
}

pub(super) fn exact_div(a: &QTPoly, b: &QTPoly) -> Option<QTPoly> {
    if a.is_zero() {
        return Some(QTPoly::zero());
    }
    if b.is_zero() {
        return None;
    }
    if b.is_constant() {
        return Some(a.mul_scalar(&b.leading_coeff().recip()));
    }
    // q-major dense with rational univariate coefficients in t
    let da = a.degree_q().unwrap_or(0) as usize;
    let db = b.degree_q().unwrap_or(0) as usize;
    if da < db {
        return None;
    }
    let dense = |p: &QTPoly, d: usize| -> Vec<RUniv> {
        let mut out: Vec<RUniv> = vec![Vec::new(); d + 1];
        for (m, c) in p.terms() {
            let i = m.q as usize;
            let j = m.t as usize;
            if out[i].len() <= j {
                out[i].resize(j + 1, BigRational::zero());
            }
            out[i][j] = c.clone();
        }
        for c in &mut out {
            rtrim(c);
        }
        out
    };
    let mut rem = dense(a, da);
    let bb = dense(b, db);
    let lb = bb[db].clone();
    let mut quo: Vec<RUniv> = vec![Vec::new(); da - db + 1];
    for k in (0..=da - db).rev() {
        let lead = rem[db + k].clone();
        if lead.is_empty() {
            continue;
        }
        let c = rexact_div(&lead, &lb)?;
        for (j, bc) in bb.iter().enumerate() {
            if bc.is_empty() {
                continue;
            }
            let prod = rumul(&c, bc);
            let target = &mut rem[j + k];
            if target.len() < prod.len() {
                target.resize(prod.len(), BigRational::zero());
            }
            for (i, v) in prod.iter().enumerate() {
                target[i] -= v;
            }
            rtrim(target);
        }
        quo[k] = c;
    }
    if rem.iter().any(|c| !c.is_empty()) {
        return None;
    }
    let mut out = QTPoly::zero();
    for (i, c) in quo.iter().enumerate() {
        for (j, v) in c.iter().enumerate() {
            if !v.is_zero() {
                out = out.add(&QTPoly::monomial(QTMono::new(i as u32, j as u32), v.clone()));
            }
        }
    }
    Some(out)
}

fn rumul(a: &[BigRational], b: &[BigRational]) -> RUniv {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    rtrim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::one_minus;
    use super::*;

    fn om(q: u32, t: u32) -> QTPoly {
        one_minus(QTMono::new(q, t))
    }

    #[test]
    fn gcd_of_products() {
        // gcd((1-q^2)(1-t), (1-q)(1-t^2)) = (1-q)(1-t)
        let a = om(2, 0).mul(&om(0, 1));
        let b = om(1, 0).mul(&om(0, 2));
        let g = gcd(&a, &b);
        let expect = om(1, 0).mul(&om(0, 1)).content_primitive().1;
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_with_mixed_factors() {
        // gcd((1-qt)^2 (1-q), (1-qt)(1-t)) = 1-qt
        let a = om(1, 1).mul(&om(1, 1)).mul(&om(1, 0));
        let b = om(1, 1).mul(&om(0, 1));
        let g = gcd(&a, &b);
        assert_eq!(g, om(1, 1).content_primitive().1);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = om(1, 0);
        let b = om(0, 1);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_monomial_factors() {
        // gcd(q^2 t (1-t), q t^2) = q t
        let a = om(0, 1).mul_mono(QTMono::new(2, 1));
        let b = QTPoly::monomial(QTMono::new(1, 2), BigRational::from_integer(3.into()));
        let g = gcd(&a, &b);
        assert_eq!(
            g,
            QTPoly::monomial(QTMono::new(1, 1), BigRational::one())
        );
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = om(1, 1).mul(&om(2, 1)).mul(&om(0, 3));
        let b = om(2, 1);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(om(1, 0).exact_div(&om(0, 1)).is_none());
    }
}
