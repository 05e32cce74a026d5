//! The line-oriented variety description format.
//!
//! ```text
//! # comment
//! VARS x y
//! KIND plane-curve            # plane-curve | space-curve | surface
//! GENERATORS
//!   y^2 - x^2*(x + 1)
//! ASSERT
//!   irreducible
//!   smooth-real-point
//!   central-point 0 0         # a central point of X
//!   central-point 0 0 1       # with one coordinate per candidate: a point of Y
//! CANDIDATES
//!   t: num = y; den = x; rel = t^2 - x - 1
//! POINTS
//!   0 0
//! SUBVARIETY                  # generators over VARS and candidate names
//!   y
//! PARAMETER z = 1
//! ```
//!
//! Section names are case-sensitive; blank lines and `#` comments are
//! ignored. A candidate's fraction and relation may mention the declared
//! variables and any candidate name.

use std::fmt;

use crate::curve::{AffinePresentation, VarietyKind};
use crate::error::{Error, Result};
use crate::extension::IntegralElement;
use crate::{parse_poly, parse_rational, Poly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct VarietySpec {
    pub vars: Vec<String>,
    pub kind: VarietyKind,
    pub generators: Vec<Poly>,
    pub irreducible: bool,
    pub smooth_real_point: bool,
    pub central_points: Vec<Vec<Rational>>,
    /// Asserted central points of the extension by all candidates.
    pub upstairs_central: Vec<Vec<Rational>>,
    pub candidates: Vec<IntegralElement>,
    pub points: Vec<Vec<Rational>>,
    pub subvariety: Vec<Poly>,
    pub parameter: Option<(String, Rational)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Generators,
    Assert,
    Candidates,
    Points,
    Subvariety,
}

fn kind_name(k: VarietyKind) -> &'static str {
    match k {
        VarietyKind::PlaneCurve => "plane-curve",
        VarietyKind::SpaceCurve => "space-curve",
        VarietyKind::Surface => "surface",
    }
}

fn at(line: usize, e: Error) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::invalid(format!("line {line}, column {}: {msg}", pos + 1)),
        Error::UnknownVariable(v) => Error::invalid(format!("line {line}: undeclared variable `{v}`")),
        Error::InvalidInput(m) => Error::invalid(format!("line {line}: {m}")),
        e => Error::invalid(format!("line {line}: {e}")),
    }
}

fn parse_point(text: &str) -> Result<Vec<Rational>> {
    text.split_whitespace().map(parse_rational).collect()
}

struct RawCandidate {
    line: usize,
    name: String,
    num: String,
    den: String,
    rel: String,
}

fn parse_candidate(line: usize, text: &str) -> Result<RawCandidate> {
    let (name, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("line {line}: candidate needs `name: num = ...; rel = ...`")))?;
    let name = name.trim().to_string();
    if name.is_empty() || !name.chars().next().unwrap().is_ascii_alphabetic() {
        return Err(Error::invalid(format!("line {line}: bad candidate name `{name}`")));
    }
    let (mut num, mut den, mut rel) = (None, None, None);
    for field in rest.split(';') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("line {line}: expected `key = value` in `{}`", field.trim())))?;
        let slot = match key.trim() {
            "num" => &mut num,
            "den" => &mut den,
            "rel" => &mut rel,
            other => return Err(Error::invalid(format!("line {line}: unknown candidate field `{other}`"))),
        };
        *slot = Some(value.trim().to_string());
    }
    let missing = |f: &str| Error::invalid(format!("line {line}: candidate `{name}` lacks `{f}`"));
    Ok(RawCandidate {
        line,
        num: num.ok_or_else(|| missing("num"))?,
        den: den.unwrap_or_else(|| "1".into()),
        rel: rel.ok_or_else(|| missing("rel"))?,
        name,
    })
}

impl VarietySpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut vars: Option<Vec<String>> = None;
        let mut kind = None;
        let mut gens_raw = Vec::new();
        let mut asserts = Vec::new();
        let mut cands_raw = Vec::new();
        let mut points_raw = Vec::new();
        let mut sub_raw = Vec::new();
        let mut parameter_raw = None;
        let mut section = Section::None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = match content.split_once(char::is_whitespace) {
                Some((h, r)) => (h, r.trim()),
                None => (content, ""),
            };
            match head {
                "VARS" => {
                    let v: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    if v.is_empty() {
                        return Err(Error::invalid(format!("line {line}: VARS needs at least one name")));
                    }
                    vars = Some(v);
                    section = Section::None;
                }
                "KIND" => {
                    kind = Some(match rest {
                        "plane-curve" => VarietyKind::PlaneCurve,
                        "space-curve" => VarietyKind::SpaceCurve,
                        "surface" => VarietyKind::Surface,
                        other => return Err(Error::invalid(format!("line {line}: unknown kind `{other}`"))),
                    });
                    section = Section::None;
                }
                "PARAMETER" => {
                    let (name, value) = rest
                        .split_once('=')
                        .ok_or_else(|| Error::invalid(format!("line {line}: PARAMETER needs `var = value`")))?;
                    parameter_raw = Some((line, name.trim().to_string(), value.trim().to_string()));
                    section = Section::None;
                }
                "GENERATORS" | "ASSERT" | "CANDIDATES" | "POINTS" | "SUBVARIETY" => {
                    if !rest.is_empty() {
                        return Err(Error::invalid(format!("line {line}: {head} takes no arguments")));
                    }
                    section = match head {
                        "GENERATORS" => Section::Generators,
                        "ASSERT" => Section::Assert,
                        "CANDIDATES" => Section::Candidates,
                        "POINTS" => Section::Points,
                        _ => Section::Subvariety,
                    };
                }
                _ => match section {
                    Section::None => {
                        return Err(Error::invalid(format!("line {line}: unexpected `{content}` outside a section")))
                    }
                    Section::Generators => gens_raw.push((line, content.to_string())),
                    Section::Assert => asserts.push((line, content.to_string())),
                    Section::Candidates => cands_raw.push(parse_candidate(line, content)?),
                    Section::Points => points_raw.push((line, content.to_string())),
                    Section::Subvariety => sub_raw.push((line, content.to_string())),
                },
            }
        }
        let vars = vars.ok_or_else(|| Error::invalid("missing VARS"))?;
        let kind = kind.ok_or_else(|| Error::invalid("missing KIND"))?;
        let mut spec = VarietySpec {
            vars: vars.clone(),
            kind,
            generators: Vec::new(),
            irreducible: false,
            smooth_real_point: false,
            central_points: Vec::new(),
            upstairs_central: Vec::new(),
            candidates: Vec::new(),
            points: Vec::new(),
            subvariety: Vec::new(),
            parameter: None,
        };
        for (line, g) in gens_raw {
            spec.generators.push(parse_poly(&g, Some(&vars)).map_err(|e| at(line, e))?);
        }
        if spec.generators.is_empty() {
            return Err(Error::invalid("missing GENERATORS"));
        }
        let mut upstairs = vars.clone();
        for c in &cands_raw {
            if upstairs.contains(&c.name) {
                return Err(Error::invalid(format!("line {}: name `{}` is already taken", c.line, c.name)));
            }
            upstairs.push(c.name.clone());
        }
        for (line, a) in asserts {
            let (head, rest) = a.split_once(char::is_whitespace).unwrap_or((&a, ""));
            match head {
                "irreducible" => spec.irreducible = true,
                "smooth-real-point" => spec.smooth_real_point = true,
                "central-point" => {
                    let p = parse_point(rest).map_err(|e| at(line, e))?;
                    if p.len() == vars.len() {
                        spec.central_points.push(p);
                    } else if p.len() == upstairs.len() && upstairs.len() > vars.len() {
                        spec.upstairs_central.push(p);
                    } else {
                        return Err(Error::invalid(format!(
                            "line {line}: central point has {} coordinates, expected {} or {}",
                            p.len(),
                            vars.len(),
                            upstairs.len()
                        )));
                    }
                }
                other => return Err(Error::invalid(format!("line {line}: unknown assertion `{other}`"))),
            }
        }
        for c in cands_raw {
            let p = |s: &str| parse_poly(s, Some(&upstairs)).map_err(|e| at(c.line, e));
            let e = IntegralElement::new(&c.name, p(&c.num)?, p(&c.den)?, p(&c.rel)?).map_err(|e| at(c.line, e))?;
            spec.candidates.push(e);
        }
        for (line, pt) in points_raw {
            let pt = parse_point(&pt).map_err(|e| at(line, e))?;
            if pt.len() != vars.len() {
                return Err(Error::invalid(format!(
                    "line {line}: point has {} coordinates, expected {}",
                    pt.len(),
                    vars.len()
                )));
            }
            spec.points.push(pt);
        }
        for (line, g) in sub_raw {
            spec.subvariety.push(parse_poly(&g, Some(&upstairs)).map_err(|e| at(line, e))?);
        }
        if let Some((line, name, value)) = parameter_raw {
            if !vars.contains(&name) {
                return Err(Error::invalid(format!("line {line}: undeclared parameter `{name}`")));
            }
            spec.parameter = Some((name, parse_rational(&value).map_err(|e| at(line, e))?));
        }
        Ok(spec)
    }

    pub fn presentation(&self) -> Result<AffinePresentation> {
        Ok(AffinePresentation::new(self.generators.clone(), &self.vars, self.kind)?
            .assume(self.irreducible, self.smooth_real_point)
            .with_central_points(self.central_points.clone()))
    }

    /// Variables of the base plus the candidate names.
    pub fn upstairs_vars(&self) -> Vec<String> {
        let mut v = self.vars.clone();
        v.extend(self.candidates.iter().map(|c| c.name.clone()));
        v
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let point = |p: &[Rational]| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "VARS {}", self.vars.join(" "))?;
        writeln!(f, "KIND {}", kind_name(self.kind))?;
        writeln!(f, "GENERATORS")?;
        for g in &self.generators {
            writeln!(f, "  {g}")?;
        }
        let has_central = !self.central_points.is_empty() || !self.upstairs_central.is_empty();
        if self.irreducible || self.smooth_real_point || has_central {
            writeln!(f, "ASSERT")?;
            if self.irreducible {
                writeln!(f, "  irreducible")?;
            }
            if self.smooth_real_point {
                writeln!(f, "  smooth-real-point")?;
            }
            for p in self.central_points.iter().chain(&self.upstairs_central) {
                writeln!(f, "  central-point {}", point(p))?;
            }
        }
        if !self.candidates.is_empty() {
            writeln!(f, "CANDIDATES")?;
            for c in &self.candidates {
                writeln!(f, "  {}: num = {}; den = {}; rel = {}", c.name, c.f.num, c.f.den, c.relation)?;
            }
        }
        if !self.points.is_empty() {
            writeln!(f, "POINTS")?;
            for p in &self.points {
                writeln!(f, "  {}", point(p))?;
            }
        }
        if !self.subvariety.is_empty() {
            writeln!(f, "SUBVARIETY")?;
            for g in &self.subvariety {
                writeln!(f, "  {g}")?;
            }
        }
        if let Some((name, value)) = &self.parameter {
            writeln!(f, "PARAMETER {name} = {value}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NODE: &str = "\
# nodal cubic
VARS x y
KIND plane-curve
GENERATORS
  y^2 - x^2*(x+1)
ASSERT
  irreducible
  smooth-real-point
CANDIDATES
  t: num = y; den = x; rel = t^2 - x - 1
POINTS
  0 0
";

    #[test]
    fn parses_and_round_trips() {
        let spec = VarietySpec::parse(NODE).unwrap();
        assert_eq!(spec.vars, vec!["x", "y"]);
        assert_eq!(spec.generators[0].to_string(), "-x^3 - x^2 + y^2");
        assert!(spec.irreducible && spec.smooth_real_point);
        assert_eq!(spec.candidates[0].name, "t");
        assert_eq!(spec.points, vec![vec![Rational::from_integer(0.into()); 2]]);
        let printed = spec.to_string();
        let again = VarietySpec::parse(&printed).unwrap();
        assert_eq!(again, spec);
        assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = NODE.replace("y^2 - x^2*(x+1)", "y^2 - x^2(x+1)");
        let err = VarietySpec::parse(&bad).unwrap_err().to_string();
        assert!(err.contains("line 5"), "{err}");
        let undeclared = NODE.replace("y^2 - x^2*(x+1)", "y^2 - z");
        assert!(VarietySpec::parse(&undeclared).unwrap_err().to_string().contains("`z`"));
        assert!(VarietySpec::parse("KIND surface\nGENERATORS\n x\n").is_err());
        assert!(VarietySpec::parse(&NODE.replace("rel = t^2 - x - 1", "rel = 2*t^2")).is_err());
        assert!(VarietySpec::parse(&NODE.replace("0 0", "0")).is_err());
    }

    #[test]
    fn parameter_and_subvariety() {
        let text = "\
VARS x y z
KIND surface
GENERATORS
  x^3 - y^3*(1 + z^2)
CANDIDATES
  t: num = x; den = y; rel = t^3 - (1 + z^2)
SUBVARIETY
  y
PARAMETER z = 1/2
ASSERT
  central-point 0 0 1
  central-point 0 0 1 1
";
        let spec = VarietySpec::parse(text).unwrap();
        assert_eq!(spec.parameter, Some(("z".into(), Rational::new(1.into(), 2.into()))));
        assert_eq!(spec.subvariety[0].vars(), &["x", "y", "z", "t"]);
        assert_eq!((spec.central_points.len(), spec.upstairs_central.len()), (1, 1));
        assert_eq!(VarietySpec::parse(&spec.to_string()).unwrap(), spec);
    }
}
