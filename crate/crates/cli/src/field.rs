//! Runtime choice of the coefficient field.
//!
//! Prime fields are const-generic in the core library, so only a fixed list
//! of primes is compiled in.

use quintic_core::FieldTag;

pub const SUPPORTED_PRIMES: [u64; 16] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 103, 1009, 10007, 32003, 65521, 65537];

/// Parses `qq` or `fp:<p>`, rejecting primes that are not compiled in.
pub fn parse_field(s: &str) -> Result<FieldTag, String> {
    let tag: FieldTag = s.parse().map_err(|e: quintic_core::Error| e.to_string())?;
    match tag {
        FieldTag::Prime(p) if !SUPPORTED_PRIMES.contains(&p) => {
            Err(format!("prime {p} is not supported; choose one of {SUPPORTED_PRIMES:?}"))
        }
        t => Ok(t),
    }
}

/// Runs `$body` with the type alias `$F` bound to the field of `$tag`.
macro_rules! with_field {
    ($tag:expr, $F:ident => $body:expr) => {{
        use quintic_core::{FieldTag, Fp, Q};
        match $tag {
            FieldTag::Rational => {
                type $F = Q;
                $body
            }
            FieldTag::Prime(p) => with_field!(@prime p, $F => $body;
                5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 103, 1009, 10007, 32003, 65521, 65537),
        }
    }};
    (@prime $p:expr, $F:ident => $body:expr; $($q:literal),*) => {
        match $p {
            $($q => {
                type $F = Fp<$q>;
                $body
            })*
            other => unreachable!("prime {other} passed validation but is not compiled in"),
        }
    };
}

pub(crate) use with_field;
