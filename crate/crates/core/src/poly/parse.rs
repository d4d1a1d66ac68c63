use alloc::string::{String, ToString};
use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, PolyError, Polynomial, VarSet};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    /// One product of factors; returns its coefficient and exponents.
    fn term(&mut self) -> Result<(BigRational, Monomial), PolyError> {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?;
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.digits()?
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    coeff *= BigRational::new(num, den);
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    let name = self.ident();
                    let v = self.vars.index_of(&name).ok_or(PolyError::Parse {
                        pos: start,
                        msg: alloc::format!("unknown variable `{}`", name),
                    })?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let d = self.digits()?;
                        u32::try_from(d).map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    exps[v] += e;
                }
                _ => return Err(self.err("expected a number or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, Monomial::new(exps)));
            }
        }
    }
}

impl Polynomial {
    /// Parses the format produced by `Display`: signed sums of products of
    /// rational numbers (`3`, `-2/5`) and powers of variables (`x^2`).
    pub fn parse(vars: &VarSet, text: &str) -> Result<Polynomial, PolyError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            vars,
        };
        let mut out = Polynomial::zero(vars);
        let mut first = true;
        loop {
            let mut negative = false;
            match p.peek() {
                None if first => return Err(p.err("empty polynomial")),
                None => return Ok(out),
                Some(b'+') if !first => p.pos += 1,
                Some(b'-') => {
                    p.pos += 1;
                    negative = true;
                }
                Some(_) if first => {}
                Some(_) => return Err(p.err("expected `+` or `-`")),
            }
            let (c, m) = p.term()?;
            out.add_term(m, if negative { -c } else { c });
            first = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn round_trip() {
        let vs = VarSet::new(["x", "y", "a_1"]).unwrap();
        for s in ["x^2 - 2*y", "-3/4*x*a_1^3 + y + 7", "0", "a_1"] {
            let p = Polynomial::parse(&vs, s).unwrap();
            assert_eq!(format!("{}", p), s);
        }
        let p = Polynomial::parse(&vs, "2*x*3 + x*x").unwrap();
        assert_eq!(format!("{}", p), "x^2 + 6*x");
    }

    #[test]
    fn errors() {
        let vs = VarSet::new(["x"]).unwrap();
        assert!(matches!(Polynomial::parse(&vs, "x + z"), Err(PolyError::Parse { pos: 4, .. })));
        assert!(Polynomial::parse(&vs, "").is_err());
        assert!(Polynomial::parse(&vs, "x x").is_err());
        assert!(Polynomial::parse(&vs, "1/0").is_err());
    }
}
