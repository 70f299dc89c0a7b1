//! Human-readable exact values: `1/4`, `-1`, `e^{-2πi/3}`, `3/2·e^{πi/9}`.
//!
//! This is the notation the printed S-matrix tables use. Parsing accepts
//! exactly these forms; rendering falls back to the power-basis expansion
//! when a value is not a rational multiple of a root of unity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cyclo::{reduced_fraction, Cyclotomic, CONDUCTOR};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {text:?}: {reason}")]
pub struct NotationError {
    pub text: String,
    pub reason: &'static str,
}

fn err(text: &str, reason: &'static str) -> NotationError {
    NotationError { text: text.to_string(), reason }
}

fn parse_rational(text: &str, whole: &str) -> Result<BigRational, NotationError> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| err(whole, "bad numerator"))?;
    let d: BigInt = d.trim().parse().map_err(|_| err(whole, "bad denominator"))?;
    if d.is_zero() {
        return Err(err(whole, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Parses `r`, `e^{aπi/b}` or `r·e^{aπi/b}`.
pub fn parse_value(text: &str) -> Result<Cyclotomic, NotationError> {
    let t = text.trim();
    let (scale, exp) = match t.find("e^{") {
        None => return Ok(Cyclotomic::from_rational(parse_rational(t, text)?)),
        Some(0) => (BigRational::one(), &t[3..]),
        Some(pos) => {
            let prefix = t[..pos].trim_end_matches(['·', '*', ' ']);
            let scale = match prefix {
                "-" => -BigRational::one(),
                p => parse_rational(p, text)?,
            };
            (scale, &t[pos + 3..])
        }
    };
    let body = exp.strip_suffix('}').ok_or_else(|| err(text, "missing closing brace"))?;
    let (num, den) = body.split_once("πi").ok_or_else(|| err(text, "exponent must contain πi"))?;
    let num: i64 = match num.trim() {
        "" => 1,
        "-" => -1,
        n => n.parse().map_err(|_| err(text, "bad exponent numerator"))?,
    };
    let den: i64 = match den.trim() {
        "" => 1,
        d => d.strip_prefix('/').ok_or_else(|| err(text, "bad exponent"))?.trim().parse().map_err(|_| err(text, "bad exponent denominator"))?,
    };
    // e^{num·πi/den} = ζ_{2·den}^{num}
    let root = Cyclotomic::root_of_unity((2 * den) as u32, num).map_err(|_| err(text, "root order does not divide 72"))?;
    Ok(root.scale(&scale))
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `x = coefficient·e^{πi·a/b}` with the angle in (−π, π) and `a/b`
/// reduced; the angle is `None` for real values.
struct PolarForm {
    coefficient: BigRational,
    angle: Option<(i64, i64)>,
}

fn polar_form(x: &Cyclotomic) -> Option<PolarForm> {
    let (r, m) = x.as_scaled_root()?;
    let half = CONDUCTOR as i64 / 2;
    let m = if m as i64 > half { m as i64 - CONDUCTOR as i64 } else { m as i64 };
    // angle = m·π/36
    Some(match m {
        0 => PolarForm { coefficient: r, angle: None },
        m if m == half => PolarForm { coefficient: -r, angle: None },
        m => PolarForm { coefficient: r, angle: Some(reduced_fraction(m, half)) },
    })
}

fn text_angle(a: i64, b: i64) -> String {
    match a {
        1 => format!("πi/{b}"),
        -1 => format!("-πi/{b}"),
        a => format!("{a}πi/{b}"),
    }
}

/// Renders `x` as `r·e^{aπi/b}` with the angle in (−π, π], or the plain
/// rational when it is real.
pub fn render_value(x: &Cyclotomic) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let Some(polar) = polar_form(x) else {
        return x.to_string();
    };
    let Some((a, b)) = polar.angle else {
        return render_rational(&polar.coefficient);
    };
    if polar.coefficient.is_one() {
        format!("e^{{{}}}", text_angle(a, b))
    } else {
        format!("{}·e^{{{}}}", render_rational(&polar.coefficient), text_angle(a, b))
    }
}

/// Renders `x/√18` as `(p√2/q)·e^{aπi/b}`; `x` must be a rational multiple
/// of a root of unity for the surd form, otherwise `(x)/√18` is printed.
pub fn render_over_sqrt18(x: &Cyclotomic) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let Some(polar) = polar_form(x) else {
        return format!("({})/√18", x);
    };
    // x/√18 = (x/6)·√2
    let c = &polar.coefficient / BigRational::from_integer(6.into());
    let sign = if c.is_negative() { "-" } else { "" };
    let numer = c.numer().abs();
    let mut out = format!("{sign}{}√2", if numer.is_one() { String::new() } else { numer.to_string() });
    if !c.denom().is_one() {
        out.push_str(&format!("/{}", c.denom()));
    }
    if let Some((a, b)) = polar.angle {
        out.push_str(&format!("·e^{{{}}}", text_angle(a, b)));
    }
    out
}

fn latex_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!(r"{sign}\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

/// LaTeX rendering in the same normal form.
pub fn render_latex(x: &Cyclotomic) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if let Some(polar) = polar_form(x) {
        let Some((a, b)) = polar.angle else {
            return latex_rational(&polar.coefficient);
        };
        let sign = if a < 0 { "-" } else { "" };
        let num = match a.abs() {
            1 => r"\pi i".to_string(),
            n => format!(r"{n}\pi i"),
        };
        let phase = format!(r"e^{{{sign}\frac{{{num}}}{{{b}}}}}");
        return if polar.coefficient.is_one() {
            phase
        } else {
            format!(r"{}{phase}", latex_rational(&polar.coefficient))
        };
    }
    let mut out = String::new();
    for (k, c) in x.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        if c.is_negative() {
            out.push_str(if out.is_empty() { "-" } else { " - " });
        } else if !out.is_empty() {
            out.push_str(" + ");
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&latex_rational(&mag)),
            _ if mag.is_one() => out.push_str(&format!(r"\zeta_{{72}}^{{{k}}}")),
            _ => out.push_str(&format!(r"{}\zeta_{{72}}^{{{k}}}", latex_rational(&mag))),
        }
    }
    out
}

/// LaTeX form of `x/√18`, matching [`render_over_sqrt18`].
pub fn render_latex_over_sqrt18(x: &Cyclotomic) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let Some(polar) = polar_form(x) else {
        return format!(r"\frac{{{}}}{{\sqrt{{18}}}}", render_latex(x));
    };
    let c = &polar.coefficient / BigRational::from_integer(6.into());
    let sign = if c.is_negative() { "-" } else { "" };
    let numer = c.numer().abs();
    let top = if numer.is_one() { r"\sqrt{2}".to_string() } else { format!(r"{numer}\sqrt{{2}}") };
    let mut out = if c.denom().is_one() { format!("{sign}{top}") } else { format!(r"{sign}\frac{{{top}}}{{{}}}", c.denom()) };
    if let Some((a, b)) = polar.angle {
        let s = if a < 0 { "-" } else { "" };
        let num = match a.abs() {
            1 => r"\pi i".to_string(),
            n => format!(r"{n}\pi i"),
        };
        out.push_str(&format!(r"e^{{{s}\frac{{{num}}}{{{b}}}}}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_forms() {
        assert_eq!(parse_value("1/4").unwrap(), Cyclotomic::ratio(1, 4));
        assert_eq!(parse_value("-1").unwrap(), Cyclotomic::from_integer(-1));
        assert_eq!(parse_value("0").unwrap(), Cyclotomic::zero());
        assert_eq!(parse_value("e^{-2πi/3}").unwrap(), Cyclotomic::root_of_unity(3, -1).unwrap());
        assert_eq!(parse_value("e^{πi/3}").unwrap(), Cyclotomic::root_of_unity(6, 1).unwrap());
        assert_eq!(parse_value("e^{5πi/9}").unwrap(), Cyclotomic::root_of_unity(18, 5).unwrap());
        assert_eq!(parse_value("e^{-πi/9}").unwrap(), Cyclotomic::root_of_unity(18, -1).unwrap());
        assert_eq!(parse_value("e^{πi}").unwrap(), Cyclotomic::from_integer(-1));
        assert_eq!(
            parse_value("3/2·e^{πi/9}").unwrap(),
            Cyclotomic::root_of_unity(18, 1).unwrap().scale(&BigRational::new(3.into(), 2.into()))
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_value("e^{2πi/5}").is_err());
        assert!(parse_value("e^{2i/3}").is_err());
        assert!(parse_value("1/0").is_err());
        assert!(parse_value("x").is_err());
    }

    #[test]
    fn renders_normal_form() {
        for s in ["0", "1", "-1", "1/4", "3/2", "e^{-2πi/3}", "e^{2πi/3}", "e^{πi/3}", "e^{-πi/3}", "e^{5πi/9}", "e^{-7πi/9}", "e^{8πi/9}", "2·e^{πi/9}"] {
            assert_eq!(render_value(&parse_value(s).unwrap()), s);
        }
        let mixed = Cyclotomic::from_integer(2) + Cyclotomic::root_of_unity(9, 1).unwrap();
        assert_eq!(render_value(&mixed), mixed.to_string());
    }

    #[test]
    fn normalized_forms() {
        let v = |s: &str| parse_value(s).unwrap();
        assert_eq!(render_over_sqrt18(&v("1/4")), "√2/24");
        assert_eq!(render_over_sqrt18(&v("-3")), "-√2/2");
        assert_eq!(render_over_sqrt18(&v("6")), "√2");
        assert_eq!(render_over_sqrt18(&v("e^{-2πi/3}")), "√2/6·e^{-2πi/3}");
        assert_eq!(render_latex_over_sqrt18(&v("3/2·e^{πi/9}")), r"\frac{\sqrt{2}}{4}e^{\frac{\pi i}{9}}");
        assert_eq!(render_latex_over_sqrt18(&v("12")), r"2\sqrt{2}");
    }

    #[test]
    fn latex_forms() {
        assert_eq!(render_latex(&parse_value("1/4").unwrap()), r"\frac{1}{4}");
        assert_eq!(render_latex(&parse_value("e^{-2πi/3}").unwrap()), r"e^{-\frac{2\pi i}{3}}");
        assert_eq!(render_latex(&parse_value("e^{πi/9}").unwrap()), r"e^{\frac{\pi i}{9}}");
        assert_eq!(render_latex(&Cyclotomic::from_integer(-1)), "-1");
        assert_eq!(render_latex(&parse_value("3/2·e^{-4πi/9}").unwrap()), r"\frac{3}{2}e^{-\frac{4\pi i}{9}}");
    }
}
