use std::collections::BTreeMap;
use std::fmt;

use super::OracleError;
use crate::syntax::{print_formula, Formula};

/// Finite rooted Kripke model. World 0 is the root and sees every world.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    pub worlds: usize,
    /// `le[i][j]` iff world `j` is accessible from world `i`.
    pub le: Vec<Vec<bool>>,
    /// Atomic leaf (printed form) to the set of worlds forcing it.
    pub forcing: BTreeMap<String, Vec<bool>>,
}

impl KripkeModel {
    pub fn forces(&self, w: usize, f: &Formula) -> bool {
        match f {
            Formula::Atom(_) | Formula::Pred(..) => self
                .forcing
                .get(&print_formula(f))
                .is_some_and(|ws| ws[w]),
            Formula::Falsum => false,
            Formula::Verum => true,
            Formula::And(a, b) => self.forces(w, a) && self.forces(w, b),
            Formula::Or(a, b) => self.forces(w, a) || self.forces(w, b),
            Formula::Imp(a, b) => (0..self.worlds)
                .filter(|&v| self.le[w][v])
                .all(|v| !self.forces(v, a) || self.forces(v, b)),
            Formula::Squash(_) | Formula::Forall(..) | Formula::Exists(..) => {
                panic!("Kripke forcing is defined for squash-free propositional formulas")
            }
        }
    }

    /// Reflexive, transitive, rooted at 0, and forcing is monotone.
    pub fn is_well_formed(&self) -> bool {
        let n = self.worlds;
        let preorder = (0..n).all(|i| self.le[i][i])
            && (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| !(self.le[i][j] && self.le[j][k]) || self.le[i][k]))
            });
        let rooted = (0..n).all(|j| self.le[0][j]);
        let monotone = self.forcing.values().all(|ws| {
            (0..n).all(|i| (0..n).all(|j| !(self.le[i][j] && ws[i]) || ws[j]))
        });
        preorder && rooted && monotone
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} world(s);", self.worlds)?;
        let edges: Vec<String> = (0..self.worlds)
            .flat_map(|i| (0..self.worlds).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.le[i][j])
            .map(|(i, j)| format!("{i}<={j}"))
            .collect();
        if edges.is_empty() {
            write!(f, " order: none;")?;
        } else {
            write!(f, " order: {};", edges.join(" "))?;
        }
        for w in 0..self.worlds {
            let atoms: Vec<&str> = self
                .forcing
                .iter()
                .filter(|(_, ws)| ws[w])
                .map(|(a, _)| a.as_str())
                .collect();
            write!(f, " w{w} forces {{{}}}", atoms.join(", "))?;
            if w + 1 < self.worlds {
                f.write_str(";")?;
            }
        }
        Ok(())
    }
}

/// Rooted partial orders on `n` worlds (world 0 below everything), as
/// accessibility matrices.
fn rooted_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for cell in le[0].iter_mut() {
            *cell = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                le[i][j] = true;
            }
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(le[i][j] && le[j][i])));
        let transitive = (0..n)
            .all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if antisymmetric && transitive {
            out.push(le);
        }
    }
    out
}

fn up_sets(le: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = le.len();
    (0u64..1 << n)
        .map(|mask| (0..n).map(|w| mask >> w & 1 == 1).collect::<Vec<bool>>())
        .filter(|set| (0..n).all(|i| (0..n).all(|j| !(set[i] && le[i][j]) || set[j])))
        .collect()
}

/// Searches rooted Kripke models with up to `max_worlds` worlds, smallest
/// first, for one whose root does not force `f`.
pub fn kripke_refutes(f: &Formula, max_worlds: usize) -> Result<Option<KripkeModel>, OracleError> {
    if !f.is_propositional() {
        return Err(OracleError::Quantified);
    }
    if !f.is_squash_free() {
        return Err(OracleError::Squashed);
    }
    if max_worlds > 6 {
        return Err(OracleError::TooLarge(format!("{max_worlds} worlds (limit 6)")));
    }
    let leaves: Vec<String> = f.atomic_leaves().iter().map(print_formula).collect();
    for n in 1..=max_worlds {
        for le in rooted_orders(n) {
            let ups = up_sets(&le);
            let mut choice = vec![0usize; leaves.len()];
            loop {
                let model = KripkeModel {
                    worlds: n,
                    le: le.clone(),
                    forcing: leaves
                        .iter()
                        .zip(&choice)
                        .map(|(a, &c)| (a.clone(), ups[c].clone()))
                        .collect(),
                };
                if !model.forces(0, f) {
                    return Ok(Some(model));
                }
                // Odometer over the up-set choice per leaf.
                let mut i = 0;
                loop {
                    if i == choice.len() {
                        break;
                    }
                    choice[i] += 1;
                    if choice[i] < ups.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
    }
    Ok(None)
}
