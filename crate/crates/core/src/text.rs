//! Tokenizer for the univariate term syntax shared by field elements
//! (`2*t+1`), moduli (`t^2+1`) and polynomials (`3*x^3+(t+1)*x+2`).

/// Coefficient of a single term as written in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Coeff {
    Int(i128),
    /// Parenthesized sub-expression, e.g. the `t+1` of `(t+1)*x^2`.
    Group(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub negative: bool,
    pub coeff: Coeff,
    pub exponent: u64,
}

/// Splits `input` into signed terms `c*var^e`. Whitespace is ignored, `var`
/// alone means exponent 1 and a missing coefficient means 1.
pub(crate) fn parse_terms(input: &str, var: char) -> Result<Vec<Term>, String> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty expression".into());
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    while pos < chars.len() {
        let mut negative = false;
        let mut saw_sign = false;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                negative = !negative;
            }
            saw_sign = true;
            pos += 1;
        }
        if !saw_sign && !terms.is_empty() {
            return Err(format!("expected '+' or '-' at offset {pos}"));
        }
        if pos >= chars.len() {
            return Err("dangling sign at end of expression".into());
        }

        let coeff = match chars[pos] {
            '(' => {
                let start = pos + 1;
                let mut depth = 1;
                pos += 1;
                while pos < chars.len() && depth > 0 {
                    match chars[pos] {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    pos += 1;
                }
                if depth != 0 {
                    return Err("unbalanced parenthesis".into());
                }
                Some(Coeff::Group(chars[start..pos - 1].iter().collect()))
            }
            c if c.is_ascii_digit() => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: String = chars[start..pos].iter().collect();
                let value = digits
                    .parse::<i128>()
                    .map_err(|_| format!("coefficient {digits} is too large"))?;
                Some(Coeff::Int(value))
            }
            _ => None,
        };

        let mut exponent = 0;
        let has_star = pos < chars.len() && chars[pos] == '*';
        if has_star {
            if coeff.is_none() {
                return Err(format!("unexpected '*' at offset {pos}"));
            }
            pos += 1;
        }
        if pos < chars.len() && chars[pos] == var {
            pos += 1;
            exponent = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(format!("missing exponent after '^' at offset {start}"));
                }
                let digits: String = chars[start..pos].iter().collect();
                exponent = digits
                    .parse::<u64>()
                    .map_err(|_| format!("exponent {digits} is too large"))?;
            }
        } else if has_star {
            return Err(format!("expected '{var}' after '*'"));
        } else if coeff.is_none() {
            return Err(match chars.get(pos) {
                Some(c) => format!("unexpected character {c:?} at offset {pos}"),
                None => "unexpected end of expression".into(),
            });
        }

        terms.push(Term {
            negative,
            coeff: coeff.unwrap_or(Coeff::Int(1)),
            exponent,
        });
    }
    Ok(terms)
}

/// Renders `coeff * var^exponent` for a coefficient already known to be
/// nonzero. `coeff` is the coefficient's own rendering; anything that is not
/// a bare integer gets parenthesized.
pub(crate) fn render_term(coeff: &str, var: char, exponent: usize) -> String {
    let bare = coeff.chars().all(|c| c.is_ascii_digit());
    let coeff = if bare { coeff.to_string() } else { format!("({coeff})") };
    match (exponent, coeff.as_str()) {
        (0, _) => coeff,
        (1, "1") => var.to_string(),
        (1, _) => format!("{coeff}*{var}"),
        (_, "1") => format!("{var}^{exponent}"),
        _ => format!("{coeff}*{var}^{exponent}"),
    }
}
