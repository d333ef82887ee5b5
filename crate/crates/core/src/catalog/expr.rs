//! Exact-rational polynomials in x1, x2 and the free parameters, and rational
//! functions whose denominators stay factored so a vanishing factor can be named.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::complex::{C64, ONE, ZERO};
use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// Variable order: the two zeros first, then every parameter name used by the catalog.
pub const VARS: [&str; 13] = ["x1", "x2", "a", "b", "c", "a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"];
const NV: usize = VARS.len();

type Exps = [u8; NV];

pub fn var_index(name: &str) -> Option<usize> {
    VARS.iter().position(|v| *v == name)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(q: Q) -> Self {
        let mut p = Poly::zero();
        if !q.is_zero() {
            p.terms.insert([0; NV], q);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NV];
        e[i] = 1;
        let mut p = Poly::zero();
        p.terms.insert(e, Q::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&[0; NV]).copied(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exps, q: Q) {
        let v = self.terms.entry(e).or_insert_with(Q::zero);
        *v += q;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, q) in &o.terms {
            out.add_term(*e, *q);
        }
        out
    }

    pub fn scale(&self, s: Q) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, q)| (*e, q * s)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(-Q::one()))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, q1) in &self.terms {
            for (e2, q2) in &o.terms {
                let mut e = *e1;
                for i in 0..NV {
                    e[i] += e2[i];
                }
                out.add_term(e, q1 * q2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::constant(Q::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exchange x1 and x2.
    pub fn swap_zeros(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, q)| {
                    let mut f = *e;
                    f.swap(0, 1);
                    (f, *q)
                })
                .collect(),
        }
    }

    /// Does the polynomial involve x1 or x2?
    pub fn has_zeros(&self) -> bool {
        self.terms.keys().any(|e| e[0] > 0 || e[1] > 0)
    }

    /// Names of the parameters that occur.
    pub fn parameters(&self) -> Vec<&'static str> {
        (2..NV).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).map(|i| VARS[i]).collect()
    }

    /// Group by (deg x1, deg x2) with parameter-polynomial coefficients.
    pub fn by_zero_monomial(&self) -> BTreeMap<(u8, u8), Poly> {
        let mut out: BTreeMap<(u8, u8), Poly> = BTreeMap::new();
        for (e, q) in &self.terms {
            let mut f = *e;
            f[0] = 0;
            f[1] = 0;
            out.entry((e[0], e[1])).or_default().add_term(f, *q);
        }
        out
    }

    /// Leading coefficient in the internal ordering, used to normalize factors.
    fn leading(&self) -> Option<Q> {
        self.terms.values().next_back().copied()
    }

    /// Evaluate with all variables given (order of `VARS`).
    pub fn eval(&self, vals: &[C64; NV]) -> C64 {
        self.terms
            .iter()
            .map(|(e, q)| {
                let mut v = ONE * q_to_f64(*q);
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        v *= vals[i].powu(k as u32);
                    }
                }
                v
            })
            .sum()
    }

    /// Substitute parameter values, leaving a polynomial in x1, x2.
    pub fn bind(&self, params: &[C64; NV]) -> ZeroPoly {
        let mut acc: BTreeMap<(u8, u8), C64> = BTreeMap::new();
        for (e, q) in &self.terms {
            let mut v = ONE * q_to_f64(*q);
            for i in 2..NV {
                if e[i] > 0 {
                    v *= params[i].powu(e[i] as u32);
                }
            }
            *acc.entry((e[0], e[1])).or_insert(ZERO) += v;
        }
        ZeroPoly { terms: acc.into_iter().filter(|(_, v)| *v != ZERO).map(|((i, j), v)| (i as u32, j as u32, v)).collect() }
    }
}

pub fn q_to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn fmt_q(q: Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Poly {
    /// Parser-compatible form, highest internal term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, q)) in self.terms.iter().rev().enumerate() {
            let mag = q.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(VARS[i].to_string()),
                    _ => factors.push(format!("{}^{}", VARS[i], k)),
                }
            }
            let body = if factors.is_empty() {
                fmt_q(mag)
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", fmt_q(mag), factors.join("*"))
            };
            let neg = q.is_negative();
            match (n, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in x1, x2 with complex coefficients, for fast evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroPoly {
    pub terms: Vec<(u32, u32, C64)>,
}

impl ZeroPoly {
    pub fn eval(&self, x1: C64, x2: C64) -> C64 {
        self.terms.iter().map(|&(i, j, c)| c * x1.powu(i) * x2.powu(j)).sum()
    }

    /// Sum of |term| at the point, the natural scale for cancellation checks.
    pub fn magnitude(&self, x1: C64, x2: C64) -> f64 {
        self.terms.iter().map(|&(i, j, c)| (c * x1.powu(i) * x2.powu(j)).norm()).sum()
    }
}

/// num / prod den_i^k_i with each den_i normalized to leading coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatFn {
    pub num: Poly,
    pub den: Vec<(Poly, u32)>,
}

impl RatFn {
    pub fn poly(p: Poly) -> Self {
        RatFn { num: p, den: Vec::new() }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    fn den_product(den: &[(Poly, u32)]) -> Poly {
        den.iter().fold(Poly::constant(Q::one()), |acc, (f, k)| acc.mul(&f.pow(*k)))
    }

    fn lcm(a: &[(Poly, u32)], b: &[(Poly, u32)]) -> Vec<(Poly, u32)> {
        let mut out = a.to_vec();
        for (f, k) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some(entry) => entry.1 = entry.1.max(*k),
                None => out.push((f.clone(), *k)),
            }
        }
        out
    }

    /// The factors of `target` missing from `have`, as one polynomial.
    fn cofactor(have: &[(Poly, u32)], target: &[(Poly, u32)]) -> Poly {
        let mut acc = Poly::constant(Q::one());
        for (f, k) in target {
            let h = have.iter().find(|(g, _)| g == f).map_or(0, |e| e.1);
            acc = acc.mul(&f.pow(k - h));
        }
        acc
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        let den = Self::lcm(&self.den, &o.den);
        let num = self.num.mul(&Self::cofactor(&self.den, &den)).add(&o.num.mul(&Self::cofactor(&o.den, &den)));
        RatFn { num, den }
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.scale(-Q::one()), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        let mut den = self.den.clone();
        for (f, k) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(entry) => entry.1 += k,
                None => den.push((f.clone(), *k)),
            }
        }
        RatFn { num: self.num.mul(&o.num), den }
    }

    pub fn swap_zeros(&self) -> RatFn {
        RatFn { num: self.num.swap_zeros(), den: self.den.iter().map(|(f, k)| (f.swap_zeros(), *k)).collect() }
    }

    /// Exact equality as rational functions (cross-multiplied).
    pub fn same_function(&self, o: &RatFn) -> bool {
        let den = Self::lcm(&self.den, &o.den);
        self.num.mul(&Self::cofactor(&self.den, &den)) == o.num.mul(&Self::cofactor(&o.den, &den))
    }

    pub fn parameters(&self) -> Vec<&'static str> {
        let mut p = self.num.parameters();
        for (f, _) in &self.den {
            p.extend(f.parameters());
        }
        p.sort_by_key(|n| var_index(n));
        p.dedup();
        p
    }

    pub fn bind(&self, params: &[C64; NV]) -> BoundRatFn {
        BoundRatFn {
            num: self.num.bind(params),
            den: self.den.iter().map(|(f, k)| (f.to_string(), f.bind(params), *k)).collect(),
        }
    }

    /// Full denominator expanded, for the exact checks.
    pub fn den_poly(&self) -> Poly {
        Self::den_product(&self.den)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self.den.iter().map(|(p, k)| if *k == 1 { format!("({p})") } else { format!("({p})^{k}") }).collect();
        write!(f, "({})/({})", self.num, den.join("*"))
    }
}

/// A rational function with parameters bound to complex values.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRatFn {
    pub num: ZeroPoly,
    pub den: Vec<(String, ZeroPoly, u32)>,
}

impl BoundRatFn {
    pub fn eval(&self, x1: C64, x2: C64) -> Result<C64> {
        let mut d = ONE;
        for (name, f, k) in &self.den {
            let v = f.eval(x1, x2);
            if v.norm() <= 1e-14 * f.magnitude(x1, x2) || v == ZERO {
                return Err(Error::SingularPoint { factor: name.clone() });
            }
            d *= v.powu(*k);
        }
        Ok(self.num.eval(x1, x2) / d)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i128),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(format!("integer too large: {text}")))?));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?} in {s:?}")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Num(i128),
    Var(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src)))
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' { Ast::Add(Box::new(lhs), Box::new(rhs)) } else { Ast::Sub(Box::new(lhs), Box::new(rhs)) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Op(op @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' { Ast::Mul(Box::new(lhs), Box::new(rhs)) } else { Ast::Div(Box::new(lhs), Box::new(rhs)) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if let Some(Tok::Op('+')) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) if (0..=64).contains(&n) => {
                    self.pos += 1;
                    return Ok(Ast::Pow(Box::new(base), n as u32));
                }
                _ => return self.err("expected a small integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Ast::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match var_index(&name) {
                    Some(i) => Ok(Ast::Var(i)),
                    None => Err(Error::Parse(format!("unknown symbol {name:?} in {:?}", self.src))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected a number, symbol or '('"),
        }
    }
}

fn lower(ast: &Ast) -> Result<RatFn> {
    Ok(match ast {
        Ast::Num(n) => RatFn::poly(Poly::constant(Q::from_integer(*n))),
        Ast::Var(i) => RatFn::poly(Poly::var(*i)),
        Ast::Neg(a) => lower(a)?.neg(),
        Ast::Add(a, b) => lower(a)?.add(&lower(b)?),
        Ast::Sub(a, b) => lower(a)?.add(&lower(b)?.neg()),
        Ast::Mul(a, b) => lower(a)?.mul(&lower(b)?),
        Ast::Pow(a, k) => {
            let base = lower(a)?;
            let mut out = RatFn::poly(Poly::constant(Q::one()));
            for _ in 0..*k {
                out = out.mul(&base);
            }
            out
        }
        Ast::Div(a, b) => {
            let (scale, factors) = factorize(b)?;
            let mut out = lower(a)?;
            out.num = out.num.scale(scale.recip());
            out.mul(&RatFn { num: Poly::constant(Q::one()), den: factors })
        }
    })
}

/// Split a divisor into a constant and normalized polynomial factors.
fn factorize(ast: &Ast) -> Result<(Q, Vec<(Poly, u32)>)> {
    let mut acc: (Q, Vec<(Poly, u32)>) = (Q::one(), Vec::new());
    fn push(acc: &mut (Q, Vec<(Poly, u32)>), f: Poly, k: u32) {
        match acc.1.iter_mut().find(|(g, _)| *g == f) {
            Some(e) => e.1 += k,
            None => acc.1.push((f, k)),
        }
    }
    fn walk(ast: &Ast, k: u32, acc: &mut (Q, Vec<(Poly, u32)>)) -> Result<()> {
        match ast {
            Ast::Mul(a, b) => {
                walk(a, k, acc)?;
                walk(b, k, acc)
            }
            Ast::Pow(a, e) => walk(a, k * e, acc),
            Ast::Neg(a) => {
                if k % 2 == 1 {
                    acc.0 = -acc.0;
                }
                walk(a, k, acc)
            }
            _ => {
                let r = lower(ast)?;
                if !r.is_polynomial() {
                    return Err(Error::Parse("nested fractions in a denominator are not supported".into()));
                }
                if r.num.is_zero() {
                    return Err(Error::Parse("division by zero".into()));
                }
                if let Some(q) = r.num.as_constant() {
                    for _ in 0..k {
                        acc.0 *= q;
                    }
                    return Ok(());
                }
                let lead = r.num.leading().unwrap_or_else(Q::one);
                for _ in 0..k {
                    acc.0 *= lead;
                }
                push(acc, r.num.scale(lead.recip()), k);
                Ok(())
            }
        }
    }
    walk(ast, 1, &mut acc)?;
    Ok(acc)
}

pub fn parse_ratfn(s: &str) -> Result<RatFn> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0, src: s };
    let ast = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    lower(&ast)
}

pub fn parse_poly(s: &str) -> Result<Poly> {
    let r = parse_ratfn(s)?;
    if !r.is_polynomial() {
        return Err(Error::Parse(format!("expected a polynomial, got a fraction: {s:?}")));
    }
    Ok(r.num)
}

/// Values for all of `VARS`, parameters from the map and zeros (x1, x2).
pub fn bind_values(params: &BTreeMap<String, C64>) -> [C64; NV] {
    let mut v = [ZERO; NV];
    for (name, val) in params {
        if let Some(i) = var_index(name) {
            v[i] = *val;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;

    #[test]
    fn parse_and_print_round_trip() {
        let p = parse_poly("-a2/2 - b2 + 3*x1^2*(x1 + x2) - 7/3").unwrap();
        let q = parse_poly(&p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse_poly("2^3").unwrap().as_constant(), Some(Q::from_integer(8)));
    }

    #[test]
    fn denominator_factors_are_kept() {
        let r = parse_ratfn("(a*(x1 + 3*x2))/(x1*x2*(x1 + x2)) + b/(2*x1)").unwrap();
        assert_eq!(r.den.len(), 3);
        let vals = bind_values(&[("a".to_string(), c(1.0, 0.0)), ("b".to_string(), c(2.0, 0.0))].into_iter().collect());
        let f = r.bind(&vals);
        let got = f.eval(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!((got - c(7.0 / 6.0 + 1.0, 0.0)).norm() < 1e-14);
        match f.eval(c(1.0, 0.0), c(-1.0, 0.0)) {
            Err(Error::SingularPoint { factor }) => assert_eq!(factor, "x1 + x2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equality_and_swap() {
        let a = parse_ratfn("x1/(x1 - x2)").unwrap();
        let b = parse_ratfn("-x1/(x2 - x1)").unwrap();
        assert!(a.same_function(&b));
        assert!(a.swap_zeros().same_function(&parse_ratfn("x2/(x2 - x1)").unwrap()));
        assert!(!a.same_function(&parse_ratfn("x2/(x1 - x2)").unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_ratfn("x1 +").is_err());
        assert!(parse_ratfn("q*x1").is_err());
        assert!(parse_ratfn("1/0").is_err());
        assert!(parse_ratfn("x1 $ 2").is_err());
    }
}
