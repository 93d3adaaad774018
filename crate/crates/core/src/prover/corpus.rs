use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Connective {
    And,
    Or,
    Imp,
    Falsum,
    Verum,
}

impl Connective {
    pub const ALL: [Connective; 5] = [
        Connective::And,
        Connective::Or,
        Connective::Imp,
        Connective::Falsum,
        Connective::Verum,
    ];
}

impl FromStr for Connective {
    type Err = String;

    fn from_str(s: &str) -> Result<Connective, String> {
        match s.to_ascii_lowercase().as_str() {
            "and" | "/\\" => Ok(Connective::And),
            "or" | "\\/" => Ok(Connective::Or),
            "imp" | "=>" => Ok(Connective::Imp),
            "false" | "falsum" => Ok(Connective::Falsum),
            "true" | "verum" => Ok(Connective::Verum),
            _ => Err(format!("unknown connective `{s}` (expected and, or, imp, false, true)")),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Imp => "imp",
            Connective::Falsum => "false",
            Connective::Verum => "true",
        })
    }
}

/// Which formulas a sweep covers: atoms drawn from `P, Q, R`, the given
/// connectives, and at most `depth` binary connectives per formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub atoms: usize,
    pub depth: usize,
    pub connectives: Vec<Connective>,
}

pub const ATOM_NAMES: [&str; 3] = ["P", "Q", "R"];

impl CorpusSpec {
    pub fn new(atoms: usize, depth: usize, connectives: &[Connective]) -> Result<CorpusSpec, String> {
        if !(1..=3).contains(&atoms) {
            return Err(format!("atom count must be 1 to 3, got {atoms}"));
        }
        if depth > 4 {
            return Err(format!("depth must be at most 4, got {depth}"));
        }
        let mut connectives = connectives.to_vec();
        connectives.sort();
        connectives.dedup();
        Ok(CorpusSpec {
            atoms,
            depth,
            connectives,
        })
    }

    /// All five connectives.
    pub fn full(atoms: usize, depth: usize) -> Result<CorpusSpec, String> {
        CorpusSpec::new(atoms, depth, &Connective::ALL)
    }

    fn has(&self, c: Connective) -> bool {
        self.connectives.contains(&c)
    }
}

/// Every formula of the spec, without duplicates, in canonical order:
/// by number of binary connectives; then by connective (`/\`, `\/`, `=>`);
/// then by the number of connectives in the left operand; then
/// lexicographically by the operands' own positions. Formulas with no
/// connective come first as `P, Q, R, False, True`.
pub fn enumerate_formulas(spec: &CorpusSpec) -> Vec<Formula> {
    let mut layers: Vec<Vec<Formula>> = Vec::with_capacity(spec.depth + 1);
    let mut base: Vec<Formula> = ATOM_NAMES[..spec.atoms].iter().map(|a| Formula::atom(*a)).collect();
    if spec.has(Connective::Falsum) {
        base.push(Formula::Falsum);
    }
    if spec.has(Connective::Verum) {
        base.push(Formula::Verum);
    }
    layers.push(base);
    let binary: Vec<fn(Formula, Formula) -> Formula> = [
        (Connective::And, Formula::and as fn(Formula, Formula) -> Formula),
        (Connective::Or, Formula::or),
        (Connective::Imp, Formula::imp),
    ]
    .into_iter()
    .filter(|(c, _)| spec.has(*c))
    .map(|(_, k)| k)
    .collect();
    for k in 1..=spec.depth {
        let mut layer = Vec::new();
        for make in &binary {
            for i in 0..k {
                for l in &layers[i] {
                    for r in &layers[k - 1 - i] {
                        layer.push(make(l.clone(), r.clone()));
                    }
                }
            }
        }
        layers.push(layer);
    }
    layers.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn imp_false_depth_one() {
        let spec = CorpusSpec::new(1, 1, &[Connective::Imp, Connective::Falsum]).unwrap();
        let got: Vec<String> = enumerate_formulas(&spec).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["P", "False", "P => P", "~P", "False => P", "~False"]);
        let expected: Vec<Formula> = ["P", "False", "P => P", "P => False", "False => P", "False => False"]
            .iter()
            .map(|s| parse_formula(s).unwrap())
            .collect();
        assert_eq!(enumerate_formulas(&spec), expected);
    }

    #[test]
    fn depth_zero_is_atoms_and_constants() {
        let spec = CorpusSpec::full(3, 0).unwrap();
        let got: Vec<String> = enumerate_formulas(&spec).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, ["P", "Q", "R", "False", "True"]);
    }

    #[test]
    fn frozen_sizes() {
        let size = |a, d| enumerate_formulas(&CorpusSpec::full(a, d).unwrap()).len();
        assert_eq!(size(1, 1), 30);
        assert_eq!(size(1, 2), 30 + 2 * 3 * 3 * 27);
        assert_eq!(size(2, 3), 35_764);
        assert_eq!(size(3, 2), 5 + 75 + 2250);
    }

    #[test]
    fn no_duplicates() {
        let all = enumerate_formulas(&CorpusSpec::full(2, 2).unwrap());
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn bounds() {
        assert!(CorpusSpec::full(0, 1).is_err());
        assert!(CorpusSpec::full(4, 1).is_err());
        assert!(CorpusSpec::full(1, 5).is_err());
        assert_eq!("=>".parse::<Connective>(), Ok(Connective::Imp));
    }
}
