//! Algebra spec strings: `reals`, `dual`, `trunc:s,k`, `tensor:<a>,<b>`, or
//! an inline presentation JSON object.

use super::{make_dual, make_reals, make_truncated, tensor, Algebra, AlgebraError, PresentationJson, Result};

pub fn parse_preset(spec: &str) -> Result<Algebra> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        let p: PresentationJson =
            serde_json::from_str(spec).map_err(|e| AlgebraError::InvalidSpec(format!("bad presentation JSON: {e}")))?;
        return p.build();
    }
    let mut parser = SpecParser { src: spec, pos: 0 };
    let alg = parser.algebra()?;
    if parser.pos != spec.len() {
        return Err(AlgebraError::InvalidSpec(format!(
            "unexpected trailing input at position {}: {:?}",
            parser.pos,
            &spec[parser.pos..]
        )));
    }
    Ok(alg)
}

/// The fixture algebras: `ℝ`, `𝔻`, `ℝ[T]/(T³)`, `ℝ[T]/(T⁴)`, `𝔻⊗𝔻`, `ℝ[T1,T2]/(T)³`.
pub fn catalog() -> Vec<(&'static str, Algebra)> {
    let d = make_dual();
    vec![
        ("reals", make_reals()),
        ("dual", d.clone()),
        ("trunc:1,2", make_truncated(1, 2).expect("trunc")),
        ("trunc:1,3", make_truncated(1, 3).expect("trunc")),
        ("tensor:dual,dual", tensor(&d, &d)),
        ("trunc:2,2", make_truncated(2, 2).expect("trunc")),
    ]
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(AlgebraError::InvalidSpec(format!("expected {s:?} at position {} in {:?}", self.pos, self.src)))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(AlgebraError::InvalidSpec(format!("expected integer at position {} in {:?}", self.pos, self.src)));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| AlgebraError::InvalidSpec(format!("integer out of range in {:?}", self.src)))?;
        self.pos += digits;
        Ok(v)
    }

    fn algebra(&mut self) -> Result<Algebra> {
        if self.eat("reals") {
            Ok(make_reals())
        } else if self.eat("dual") {
            Ok(make_dual())
        } else if self.eat("trunc:") {
            let s = self.int()?;
            self.expect(",")?;
            let k = self.int()?;
            make_truncated(s as usize, k)
        } else if self.eat("tensor:") {
            let a = self.algebra()?;
            self.expect(",")?;
            let b = self.algebra()?;
            Ok(tensor(&a, &b))
        } else {
            Err(AlgebraError::InvalidSpec(format!(
                "unknown algebra {:?} (expected reals, dual, trunc:s,k, tensor:<a>,<b> or inline JSON)",
                self.rest()
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        assert_eq!(parse_preset("dual").unwrap().dim(), 2);
        assert_eq!(parse_preset("trunc:2,2").unwrap().dim(), 6);
        let dd = parse_preset("tensor:dual,dual").unwrap();
        assert_eq!((dd.dim(), dd.height()), (4, 2));
        let t = parse_preset("tensor:trunc:1,2,dual").unwrap();
        assert_eq!((t.dim(), t.height()), (6, 3));
        let nested = parse_preset("tensor:tensor:dual,dual,reals").unwrap();
        assert!(nested.same_as(&dd));
        let inline = parse_preset(r#"{"vars":2,"trunc":2,"extra_gens":[[2,0],[0,2]]}"#).unwrap();
        assert!(inline.same_as(&dd));
    }

    #[test]
    fn bad_presets() {
        for bad in ["", "duall", "trunc:1", "trunc:a,2", "tensor:dual", "trunc:0,3", "{\"vars\":1}"] {
            assert!(parse_preset(bad).is_err(), "{bad}");
        }
    }
}
