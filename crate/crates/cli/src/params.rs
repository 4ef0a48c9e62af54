//! Parsing of rational numbers, root sequences and input sequences.

use num_traits::{One, Zero};
use triad_core::{Integer, Rational, RootSequence, Scalar};

use crate::error::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Accepts `7`, `-3/4` and `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    let bad = || usage(format!("`{s}` is not a rational number"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
        let numer: Integer = digits.parse().map_err(|_| bad())?;
        let scale = Rational::from_integer(10.into()).powu(frac.len() as u32);
        let value = Rational::from_integer(numer) / scale;
        return Ok(if negative { -value } else { value });
    }
    let value: Rational = s.parse().map_err(|_| bad())?;
    Ok(value)
}

fn parse_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(parse_rational).collect()
}

/// Root sequences: a comma list, a comma list ending in `…` or `...`
/// (extended as an arithmetic progression, or a geometric one starting at
/// 1), or a rule `constant:c`, `geometric:q`, `arithmetic[:first[:step]]`.
pub fn parse_roots(s: &str) -> Result<RootSequence<Rational>, CliError> {
    let s = s.trim();
    let (rule, arg) = s.split_once(':').unwrap_or((s, ""));
    match rule {
        "constant" => return Ok(RootSequence::Constant(parse_rational(arg)?)),
        "geometric" => return Ok(RootSequence::Geometric(parse_rational(arg)?)),
        "arithmetic" => {
            let mut parts = arg.split(':').filter(|p| !p.is_empty());
            let first = parts.next().map(parse_rational).transpose()?.unwrap_or_else(Rational::zero);
            let step = parts.next().map(parse_rational).transpose()?.unwrap_or_else(Rational::one);
            if parts.next().is_some() {
                return Err(usage("arithmetic roots take at most two parameters"));
            }
            return Ok(RootSequence::Arithmetic { first, step });
        }
        _ => {}
    }
    let head = s
        .strip_suffix('…')
        .or_else(|| s.strip_suffix("..."))
        .map(|h| h.trim_end().trim_end_matches(','));
    let Some(head) = head else {
        return Ok(RootSequence::Explicit(parse_list(s)?));
    };
    let vals = parse_list(head)?;
    extrapolate(&vals).ok_or_else(|| {
        usage(format!(
            "cannot extend `{s}`: the listed roots are neither an arithmetic progression nor powers of a ratio"
        ))
    })
}

fn extrapolate(vals: &[Rational]) -> Option<RootSequence<Rational>> {
    match vals {
        [] => None,
        [c] => Some(RootSequence::Constant(c.clone())),
        [a, b, ..] => {
            let step = b - a;
            if vals.windows(2).all(|w| w[1].clone() - w[0].clone() == step) {
                return Some(RootSequence::Arithmetic { first: a.clone(), step });
            }
            if a.is_one() && !b.is_zero() && vals.windows(2).all(|w| w[0].clone() * b == w[1]) {
                return Some(RootSequence::Geometric(b.clone()));
            }
            None
        }
    }
}

/// A sequence `a_0..a_{len-1}`: `ones`, `delta:k`, or a comma list padded
/// with zeros.
pub fn parse_sequence(s: &str, len: usize) -> Result<Vec<Rational>, CliError> {
    let s = s.trim();
    if s == "ones" {
        return Ok(vec![Rational::one(); len]);
    }
    let mut out = if let Some(k) = s.strip_prefix("delta:") {
        let k: usize = k.parse().map_err(|_| usage(format!("bad delta index `{k}`")))?;
        let mut v = vec![Rational::zero(); len.max(k + 1)];
        v[k] = Rational::one();
        v
    } else {
        parse_list(s)?
    };
    if out.len() > len && out[len..].iter().any(|x| !x.is_zero()) {
        return Err(usage(format!(
            "sequence `{s}` has nonzero terms beyond index {}",
            len.saturating_sub(1)
        )));
    }
    out.resize(len, Rational::zero());
    Ok(out)
}
