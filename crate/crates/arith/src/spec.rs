//! Textual field descriptors: `gf3`, `gf9`, `gf27[:modulus]`,
//! `gf81[:modulus]`, `qi`, or `gf<p>` for any prime p. A modulus is a
//! univariate polynomial in `a` over the prime field, e.g. `a^4+2a^3+2`.

use crate::{ExtField, FieldError, GaussianRationals, PrimeField};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Prime(u64),
    Ext { p: u64, modulus: Vec<u64> },
    GaussianRationals,
}

impl FieldSpec {
    pub fn gf9() -> Self {
        FieldSpec::Ext {
            p: 3,
            modulus: vec![2, 2, 1],
        }
    }

    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("qi") {
            return Ok(FieldSpec::GaussianRationals);
        }
        let (head, modulus_text) = match text.split_once(':') {
            Some((h, m)) => (h, Some(m)),
            None => (text, None),
        };
        let head = head.to_ascii_lowercase();
        let q: u64 = head
            .strip_prefix("gf")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| FieldError::Parse(text.to_string()))?;
        // Factor q as p^k for the smallest prime p dividing q.
        let p = (2..).find(|d| q % d == 0).unwrap();
        let mut k = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(FieldError::BadCharacteristic(q));
        }
        if k == 1 {
            if modulus_text.is_some() {
                return Err(FieldError::Parse(text.to_string()));
            }
            return Ok(FieldSpec::Prime(p));
        }
        let modulus = match modulus_text {
            Some(m) => parse_modulus(m, p)?,
            None => default_modulus(p, k).ok_or_else(|| FieldError::Parse(text.to_string()))?,
        };
        if modulus.len() != k as usize + 1 {
            return Err(FieldError::BadDegree(modulus.len().saturating_sub(1)));
        }
        Ok(FieldSpec::Ext { p, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Ext { p, .. } => *p,
            FieldSpec::GaussianRationals => 0,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("gf{}", p),
            FieldSpec::Ext { p, modulus } => {
                let deg = modulus.len() - 1;
                let q = p.pow(deg as u32);
                format!("gf{}:{}", q, fmt_modulus(modulus))
            }
            FieldSpec::GaussianRationals => "qi".to_string(),
        }
    }

    pub fn build_prime(&self) -> Result<PrimeField, FieldError> {
        match self {
            FieldSpec::Prime(p) => PrimeField::new(*p),
            _ => Err(FieldError::Parse(self.describe())),
        }
    }

    pub fn build_ext(&self) -> Result<ExtField, FieldError> {
        match self {
            FieldSpec::Ext { p, modulus } => ExtField::new(*p, modulus),
            _ => Err(FieldError::Parse(self.describe())),
        }
    }

    pub fn build_gaussian(&self) -> Result<GaussianRationals, FieldError> {
        match self {
            FieldSpec::GaussianRationals => Ok(GaussianRationals::new()),
            _ => Err(FieldError::Parse(self.describe())),
        }
    }
}

fn default_modulus(p: u64, k: u32) -> Option<Vec<u64>> {
    if p != 3 {
        return None;
    }
    match k {
        2 => Some(vec![2, 2, 1]),    // x^2 + 2x + 2
        3 => Some(vec![1, 2, 0, 1]), // x^3 + 2x + 1
        4 => Some(vec![2, 0, 0, 2, 1]), // x^4 + 2x^3 + 2
        _ => None,
    }
}

fn fmt_modulus(m: &[u64]) -> String {
    let mut parts = vec![];
    for i in (0..m.len()).rev() {
        if m[i] == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{}", i),
        };
        let s = match (m[i], i) {
            (c, 0) => c.to_string(),
            (1, _) => var,
            (c, _) => format!("{}{}", c, var),
        };
        parts.push(s);
    }
    parts.join("+")
}

/// Parse a sum of terms `c`, `a`, `ca^k`, `a^k` with `+`/`-` separators.
fn parse_modulus(text: &str, p: u64) -> Result<Vec<u64>, FieldError> {
    let bad = || FieldError::Parse(format!("modulus `{}`", text));
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<i64> = vec![];
    let mut pos = 0usize;
    let mut sign = 1i64;
    if pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
        sign = if s[pos] == '-' { -1 } else { 1 };
        pos += 1;
    }
    while pos < s.len() {
        let mut coef: Option<i64> = None;
        let start = pos;
        while pos < s.len() && s[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos > start {
            coef = Some(s[start..pos].iter().collect::<String>().parse().map_err(|_| bad())?);
        }
        let mut exp = 0usize;
        if pos < s.len() && s[pos] == '*' && pos + 1 < s.len() && s[pos + 1] == 'a' {
            pos += 1;
        }
        if pos < s.len() && s[pos] == 'a' {
            pos += 1;
            exp = 1;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(bad());
                }
                exp = s[start..pos].iter().collect::<String>().parse().map_err(|_| bad())?;
            }
        } else if coef.is_none() {
            return Err(bad());
        }
        let c = sign * coef.unwrap_or(1);
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += c;
        if pos < s.len() {
            sign = match s[pos] {
                '+' => 1,
                '-' => -1,
                _ => return Err(bad()),
            };
            pos += 1;
            if pos == s.len() {
                return Err(bad());
            }
        }
    }
    if coeffs.is_empty() {
        return Err(bad());
    }
    let pi = p as i64;
    Ok(coeffs.into_iter().map(|c| (((c % pi) + pi) % pi) as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_named_fields() {
        assert_eq!(FieldSpec::parse("gf3").unwrap(), FieldSpec::Prime(3));
        assert_eq!(FieldSpec::parse("qi").unwrap(), FieldSpec::GaussianRationals);
        assert_eq!(FieldSpec::parse("gf9").unwrap(), FieldSpec::gf9());
        assert_eq!(
            FieldSpec::parse("gf81:a^4+2a^3+2").unwrap(),
            FieldSpec::Ext { p: 3, modulus: vec![2, 0, 0, 2, 1] }
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(FieldSpec::parse("gf10").is_err());
        assert!(FieldSpec::parse("gf").is_err());
        assert!(FieldSpec::parse("gf9:b^2").is_err());
    }

    #[test]
    fn describe_round_trips() {
        for t in ["gf3", "gf9", "gf27", "gf81", "qi"] {
            let s = FieldSpec::parse(t).unwrap();
            assert_eq!(FieldSpec::parse(&s.describe()).unwrap(), s);
        }
    }

    #[test]
    fn builds() {
        FieldSpec::parse("gf9").unwrap().build_ext().unwrap();
        FieldSpec::parse("gf3").unwrap().build_prime().unwrap();
        FieldSpec::parse("qi").unwrap().build_gaussian().unwrap();
    }
}
