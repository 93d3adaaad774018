use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::OracleError;
use crate::evidence::Term;
use crate::syntax::{print_formula, Formula};

/// Finite type built from `Void` and `Unit` by sums and products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeDesc {
    Void,
    Unit,
    Sum(Box<TypeDesc>, Box<TypeDesc>),
    Prod(Box<TypeDesc>, Box<TypeDesc>),
}

impl TypeDesc {
    /// The same type written as a constant formula: `Void` as `False`,
    /// `Unit` as `True`, sums as `\/`, products as `/\`.
    pub fn to_formula(&self) -> Formula {
        match self {
            TypeDesc::Void => Formula::Falsum,
            TypeDesc::Unit => Formula::Verum,
            TypeDesc::Sum(a, b) => Formula::or(a.to_formula(), b.to_formula()),
            TypeDesc::Prod(a, b) => Formula::and(a.to_formula(), b.to_formula()),
        }
    }

    /// Number of elements.
    pub fn cardinality(&self) -> u64 {
        match self {
            TypeDesc::Void => 0,
            TypeDesc::Unit => 1,
            TypeDesc::Sum(a, b) => a.cardinality() + b.cardinality(),
            TypeDesc::Prod(a, b) => a.cardinality() * b.cardinality(),
        }
    }
}

impl fmt::Display for TypeDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeDesc::Void => f.write_str("Void"),
            TypeDesc::Unit => f.write_str("Unit"),
            TypeDesc::Sum(a, b) => write!(f, "({a}+{b})"),
            TypeDesc::Prod(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

impl FromStr for TypeDesc {
    type Err = OracleError;

    /// `sum := prod ("+" prod)*`, `prod := prim ("*" prim)*`,
    /// `prim := "Void" | "Unit" | "(" sum ")"`.
    fn from_str(s: &str) -> Result<TypeDesc, OracleError> {
        fn sum(s: &mut &str) -> Result<TypeDesc, OracleError> {
            let mut t = prod(s)?;
            while let Some(rest) = s.trim_start().strip_prefix('+') {
                *s = rest;
                t = TypeDesc::Sum(Box::new(t), Box::new(prod(s)?));
            }
            Ok(t)
        }
        fn prod(s: &mut &str) -> Result<TypeDesc, OracleError> {
            let mut t = prim(s)?;
            while let Some(rest) = s.trim_start().strip_prefix('*') {
                *s = rest;
                t = TypeDesc::Prod(Box::new(t), Box::new(prim(s)?));
            }
            Ok(t)
        }
        fn prim(s: &mut &str) -> Result<TypeDesc, OracleError> {
            let t = s.trim_start();
            if let Some(rest) = t.strip_prefix("Void") {
                *s = rest;
                Ok(TypeDesc::Void)
            } else if let Some(rest) = t.strip_prefix("Unit") {
                *s = rest;
                Ok(TypeDesc::Unit)
            } else if let Some(rest) = t.strip_prefix('(') {
                *s = rest;
                let inner = sum(s)?;
                match s.trim_start().strip_prefix(')') {
                    Some(rest) => {
                        *s = rest;
                        Ok(inner)
                    }
                    None => Err(OracleError::BadModel("missing `)`".into())),
                }
            } else {
                Err(OracleError::BadModel(format!("expected Void, Unit or `(` at `{t}`")))
            }
        }
        let mut rest = s;
        let t = sum(&mut rest)?;
        if !rest.trim().is_empty() {
            return Err(OracleError::BadModel(format!("trailing input `{}`", rest.trim())));
        }
        Ok(t)
    }
}

/// Assignment of a finite evidence type to each atom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvidenceModel(pub BTreeMap<String, TypeDesc>);

impl EvidenceModel {
    /// Atoms true under `v` become `Unit`, the others `Void`.
    pub fn from_bools(v: &BTreeMap<String, bool>) -> EvidenceModel {
        EvidenceModel(
            v.iter()
                .map(|(k, b)| (k.clone(), if *b { TypeDesc::Unit } else { TypeDesc::Void }))
                .collect(),
        )
    }
}

impl FromStr for EvidenceModel {
    type Err = OracleError;

    /// `P=Unit,Q=Void,R=Unit+Unit`
    fn from_str(s: &str) -> Result<EvidenceModel, OracleError> {
        let mut m = BTreeMap::new();
        for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (name, ty) = entry
                .split_once('=')
                .ok_or_else(|| OracleError::BadModel(format!("`{entry}` is not NAME=TYPE")))?;
            m.insert(name.trim().to_string(), ty.parse()?);
        }
        Ok(EvidenceModel(m))
    }
}

/// Inhabitation of a constant (atom-free, squash-free) formula.
fn inhabited(f: &Formula) -> bool {
    match f {
        Formula::Verum => true,
        Formula::Falsum => false,
        Formula::And(a, b) => inhabited(a) && inhabited(b),
        Formula::Or(a, b) => inhabited(a) || inhabited(b),
        Formula::Imp(a, b) => !inhabited(a) || inhabited(b),
        Formula::Squash(a) => inhabited(a),
        _ => unreachable!("not a constant formula"),
    }
}

/// The evidence type of `f` under `m`, as a constant formula: atoms are
/// replaced by their descriptors and `{G}` becomes `True` when the type of
/// `G` is inhabited and `False` otherwise.
pub fn evidence_formula(f: &Formula, m: &EvidenceModel) -> Result<Formula, OracleError> {
    Ok(match f {
        Formula::Atom(_) | Formula::Pred(..) => {
            let key = print_formula(f);
            m.0.get(&key)
                .ok_or(OracleError::Unassigned(key))?
                .to_formula()
        }
        Formula::Falsum | Formula::Verum => f.clone(),
        Formula::And(a, b) => Formula::and(evidence_formula(a, m)?, evidence_formula(b, m)?),
        Formula::Or(a, b) => Formula::or(evidence_formula(a, m)?, evidence_formula(b, m)?),
        Formula::Imp(a, b) => Formula::imp(evidence_formula(a, m)?, evidence_formula(b, m)?),
        Formula::Squash(a) => {
            if inhabited(&evidence_formula(a, m)?) {
                Formula::Verum
            } else {
                Formula::Falsum
            }
        }
        Formula::Forall(..) | Formula::Exists(..) => return Err(OracleError::Quantified),
    })
}

struct Search {
    next: usize,
}

impl Search {
    fn fresh(&mut self) -> String {
        let n = self.next;
        self.next += 1;
        if n == 0 {
            "x".to_string()
        } else {
            format!("x{n}")
        }
    }

    /// A closed inhabitant of a constant formula.
    fn canon(&mut self, f: &Formula, depth: usize) -> Option<Term> {
        if depth == 0 {
            return None;
        }
        let d = depth - 1;
        match f {
            Formula::Verum => Some(Term::Star),
            Formula::Falsum => None,
            Formula::And(a, b) => Some(Term::pair(self.canon(a, d)?, self.canon(b, d)?)),
            Formula::Or(a, b) => {
                if inhabited(a) {
                    self.canon(a, d).map(Term::inl)
                } else {
                    self.canon(b, d).map(Term::inr)
                }
            }
            Formula::Imp(a, b) => {
                let x = self.fresh();
                if inhabited(b) {
                    return Some(Term::lam(x, self.canon(b, d)?));
                }
                let absurd = self.refute(Term::Var(x.clone()), a, d)?;
                let body = if **b == Formula::Falsum {
                    absurd
                } else {
                    Term::any(absurd)
                };
                Some(Term::lam(x, body))
            }
            _ => unreachable!("not a constant formula"),
        }
    }

    /// Given `t` of an empty type `f`, a term of type `False`.
    fn refute(&mut self, t: Term, f: &Formula, depth: usize) -> Option<Term> {
        if depth == 0 {
            return None;
        }
        let d = depth - 1;
        match f {
            Formula::Falsum => Some(t),
            Formula::Verum => None,
            Formula::And(a, b) => {
                if !inhabited(a) {
                    self.refute(Term::fst(t), a, d)
                } else {
                    self.refute(Term::snd(t), b, d)
                }
            }
            Formula::Or(a, b) => {
                let y = self.fresh();
                let z = self.fresh();
                let l = self.refute(Term::Var(y.clone()), a, d)?;
                let r = self.refute(Term::Var(z.clone()), b, d)?;
                Some(Term::case(t, y, l, z, r))
            }
            Formula::Imp(a, b) => {
                let arg = self.canon(a, d)?;
                self.refute(Term::ap(t, arg), b, d)
            }
            _ => unreachable!("not a constant formula"),
        }
    }
}

/// Finds a closed term of the evidence type of `f` under `m`.
///
/// The search is type directed: an inhabited type gets its canonical
/// element, built from inhabitants of its parts and refutations of empty
/// antecedents. `depth` bounds the recursion; a depth of the formula's
/// depth plus two always suffices for the finite types in scope.
pub fn inhabitation_search(
    f: &Formula,
    m: &EvidenceModel,
    depth: usize,
) -> Result<Option<Term>, OracleError> {
    let ty = evidence_formula(f, m)?;
    if !inhabited(&ty) {
        return Ok(None);
    }
    Ok(Search { next: 0 }.canon(&ty, depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::{alpha_eq, check_evidence};
    use crate::syntax::parse_formula;

    fn search(f: &str, m: &str) -> Option<Term> {
        inhabitation_search(&parse_formula(f).unwrap(), &m.parse().unwrap(), 8).unwrap()
    }

    #[test]
    fn examples() {
        let id = Term::lam("x", Term::var("x"));
        assert!(alpha_eq(&search("P => P", "P=Void").unwrap(), &id));
        assert_eq!(search("P \\/ ~P", "P=Unit").unwrap(), Term::inl(Term::Star));
        assert!(alpha_eq(&search("P \\/ ~P", "P=Void").unwrap(), &Term::inr(id)));
        assert_eq!(search("P", "P=Void"), None);
        assert_eq!(search("P /\\ Q", "P=Unit,Q=Void"), None);
    }

    #[test]
    fn squash_is_unit_or_void() {
        assert_eq!(search("{P \\/ ~P}", "P=Void"), Some(Term::Star));
        assert_eq!(search("{P}", "P=Void"), None);
        assert_eq!(search("{P} => P", "P=Unit+Unit").map(|t| t.to_string()), Some("lam(x.inl(star))".into()));
    }

    #[test]
    fn found_terms_check_against_the_instantiated_formula() {
        for (f, m) in [
            ("((P => Q) => P) => P", "P=Void,Q=Void"),
            ("((P => Q) => P) => P", "P=Unit,Q=Void"),
            ("~(P /\\ ~P)", "P=Unit*Unit"),
            ("(P \\/ Q => False) => ~P", "P=Unit+Void,Q=Void"),
            ("~~P => P", "P=Void"),
        ] {
            let model: EvidenceModel = m.parse().unwrap();
            let formula = parse_formula(f).unwrap();
            let t = inhabitation_search(&formula, &model, 8).unwrap().unwrap();
            let ty = evidence_formula(&formula, &model).unwrap();
            assert!(check_evidence(&t, &ty, &[]), "{t} : {ty}");
        }
    }

    #[test]
    fn depth_bound() {
        let f = parse_formula("P => P").unwrap();
        let m: EvidenceModel = "P=Void".parse().unwrap();
        assert_eq!(inhabitation_search(&f, &m, 1).unwrap(), None);
        assert!(inhabitation_search(&f, &m, 2).unwrap().is_some());
    }

    #[test]
    fn model_parsing() {
        let m: EvidenceModel = "P=Unit, Q=Void, R=(Unit+Unit)*Unit".parse().unwrap();
        assert_eq!(m.0["R"].cardinality(), 2);
        assert_eq!(m.0["R"].to_string(), "((Unit+Unit)*Unit)");
        assert!("P=Bool".parse::<EvidenceModel>().is_err());
        assert!("P".parse::<EvidenceModel>().is_err());
        assert!(matches!(
            inhabitation_search(&parse_formula("Q").unwrap(), &m, 3),
            Ok(None)
        ));
        assert!(matches!(
            inhabitation_search(&parse_formula("S").unwrap(), &m, 3),
            Err(OracleError::Unassigned(_))
        ));
    }
}
