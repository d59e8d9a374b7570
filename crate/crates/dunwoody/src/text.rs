//! One-line presentation format: `gens=2; rel=a^2 G A G; rel=g;`.
//!
//! Relators use the word syntax of `dunwoody_core::freegroup::syntax`. A
//! presentation is printed in the α/γ alphabet when it was built that way,
//! otherwise with `x0, x1, ...`; on input, any `x` token (or more than two
//! generators) selects the indexed alphabet. When every relator is `1` the
//! alphabet cannot be recovered and α/γ is assumed.

use dunwoody_core::freegroup::syntax::parse_word;
use dunwoody_core::presentations::{Alphabet, Presentation};

use crate::FormatError;

pub fn format_presentation(p: &Presentation) -> String {
    p.to_string()
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FormatError> {
    let mut generators = None;
    let mut relators = Vec::new();
    let mut indexed = false;
    for field in text.split(';').map(str::trim).filter(|f| !f.is_empty()) {
        let (key, value) = field
            .split_once('=')
            .ok_or(FormatError::Syntax("expected key=value"))?;
        match key.trim() {
            "gens" if generators.is_none() => {
                let n = value
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| FormatError::Syntax("gens must be a nonnegative integer"))?;
                generators = Some(n);
            }
            "gens" => return Err(FormatError::Syntax("gens given twice")),
            "rel" if generators.is_some() => {
                indexed |= value.contains(['x', 'X']);
                relators.push(parse_word(value)?);
            }
            "rel" => return Err(FormatError::Syntax("gens must come first")),
            _ => return Err(FormatError::Syntax("unknown key")),
        }
    }
    let generators = generators.ok_or(FormatError::Syntax("missing gens"))?;
    let alphabet = if indexed || generators > 2 {
        Alphabet::Indexed
    } else {
        Alphabet::AlphaGamma
    };
    Ok(Presentation::new(generators, relators, alphabet)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_trefoil_base() {
        let p = parse_presentation("gens=2; rel=a^2 G A G; rel=g").unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.alphabet(), Alphabet::AlphaGamma);
        assert_eq!(format_presentation(&p), "gens=2; rel=a^2 G A G; rel=g;");
        assert!(p.homology().is_trivial());
    }

    #[test]
    fn indexed_round_trip() {
        let text = "gens=3; rel=x0 x1^-1 x2; rel=x1 X2 x0; rel=x2 X0 x1;";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.alphabet(), Alphabet::Indexed);
        assert_eq!(parse_presentation(&format_presentation(&p)).unwrap(), p);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_presentation("rel=a; gens=1").is_err());
        assert!(parse_presentation("gens=2; rel=q").is_err());
        assert!(parse_presentation("gens=1; rel=x3").is_err());
        assert!(parse_presentation("rel").is_err());
        assert!(parse_presentation("").is_err());
    }
}
