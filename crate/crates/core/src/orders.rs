//! Monomial orders used to produce candidate generator sequences.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderFamily {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderFamily {
    pub const ALL: [OrderFamily; 3] = [OrderFamily::Lex, OrderFamily::DegLex, OrderFamily::DegRevLex];

    fn name(self) -> &'static str {
        match self {
            OrderFamily::Lex => "lex",
            OrderFamily::DegLex => "deglex",
            OrderFamily::DegRevLex => "degrevlex",
        }
    }
}

/// Which monomial orders a search may use.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum OrderSpec {
    /// One family, over every permutation of the variables.
    Family(OrderFamily),
    /// All three families, over every permutation of the variables.
    #[default]
    AllFamilies,
    /// A single weight order `a < b ⇔ w·a < w·b`; it must be strict on the
    /// monomials it is asked to sort.
    Weight(Vec<i64>),
}

impl std::str::FromStr for OrderSpec {
    type Err = Error;

    /// `all`, `lex`, `deglex`, `degrevlex` or `weight:1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "all" => Ok(OrderSpec::AllFamilies),
            "lex" => Ok(OrderSpec::Family(OrderFamily::Lex)),
            "deglex" | "grlex" => Ok(OrderSpec::Family(OrderFamily::DegLex)),
            "degrevlex" | "grevlex" => Ok(OrderSpec::Family(OrderFamily::DegRevLex)),
            _ => {
                let weights = s
                    .strip_prefix("weight:")
                    .ok_or_else(|| Error::Domain(format!("unknown order family {s:?}")))?;
                let w = weights
                    .split(',')
                    .map(|t| t.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Domain(format!("bad weight vector {weights:?}")))?;
                Ok(OrderSpec::Weight(w))
            }
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::AllFamilies => f.write_str("all"),
            OrderSpec::Family(family) => f.write_str(family.name()),
            OrderSpec::Weight(w) => {
                let ws: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "weight:{}", ws.join(","))
            }
        }
    }
}

impl Serialize for OrderSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// `perm[0]` is the most significant variable.
    Family { family: OrderFamily, perm: Vec<usize> },
    Weight(Vec<i64>),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Family { family, perm } => {
                let lex = || {
                    perm.iter()
                        .map(|&v| a.exps()[v].cmp(&b.exps()[v]))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                };
                match family {
                    OrderFamily::Lex => lex(),
                    OrderFamily::DegLex => a.degree().cmp(&b.degree()).then_with(lex),
                    OrderFamily::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                        perm.iter()
                            .rev()
                            .map(|&v| b.exps()[v].cmp(&a.exps()[v]))
                            .find(|o| o.is_ne())
                            .unwrap_or(Ordering::Equal)
                    }),
                }
            }
            MonomialOrder::Weight(w) => weight(w, a).cmp(&weight(w, b)),
        }
    }

    /// Sorts ascending; fails if two distinct monomials compare equal.
    pub fn sort(&self, monomials: &[Monomial]) -> Result<Vec<Monomial>> {
        if let MonomialOrder::Weight(w) = self {
            if let Some(m) = monomials.first() {
                if w.len() != m.nvars() {
                    return Err(Error::Dimension {
                        expected: m.nvars(),
                        found: w.len(),
                    });
                }
            }
        }
        let mut out = monomials.to_vec();
        out.sort_by(|a, b| self.compare(a, b));
        if let Some(pair) = out
            .windows(2)
            .find(|p| self.compare(&p[0], &p[1]) == Ordering::Equal)
        {
            return Err(Error::InvalidOrder(format!(
                "{self} does not separate {} and {}",
                pair[0], pair[1]
            )));
        }
        Ok(out)
    }
}

fn weight(w: &[i64], m: &Monomial) -> i128 {
    w.iter()
        .zip(m.exps())
        .map(|(&wi, &e)| i128::from(wi) * i128::from(e))
        .sum()
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Family { family, perm } => {
                let vars: Vec<String> = perm.iter().map(|v| format!("x{}", v + 1)).collect();
                write!(f, "{}[{}]", family.name(), vars.join(">"))
            }
            MonomialOrder::Weight(w) => {
                let ws: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(f, "weight[{}]", ws.join(","))
            }
        }
    }
}

impl Serialize for MonomialOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Every order described by `spec` over `n` variables, deterministic order.
pub fn orders_for(spec: &OrderSpec, n: usize, variable_cap: usize) -> Result<Vec<MonomialOrder>> {
    let families: Vec<OrderFamily> = match spec {
        OrderSpec::Weight(w) => {
            if w.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: w.len(),
                });
            }
            return Ok(vec![MonomialOrder::Weight(w.clone())]);
        }
        OrderSpec::Family(f) => vec![*f],
        OrderSpec::AllFamilies => OrderFamily::ALL.to_vec(),
    };
    if n > variable_cap {
        return Err(Error::resource("order-variables", variable_cap, n));
    }
    let perms = permutations(n);
    Ok(families
        .into_iter()
        .flat_map(|family| {
            perms.iter().map(move |p| MonomialOrder::Family {
                family,
                perm: p.clone(),
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::mono;

    #[test]
    fn families_on_three_variables() {
        let id = vec![0, 1, 2];
        let lex = MonomialOrder::Family { family: OrderFamily::Lex, perm: id.clone() };
        let deglex = MonomialOrder::Family { family: OrderFamily::DegLex, perm: id.clone() };
        let grevlex = MonomialOrder::Family { family: OrderFamily::DegRevLex, perm: id };
        let (a, b) = (mono(3, "x1"), mono(3, "x2^2"));
        assert_eq!(lex.compare(&a, &b), Ordering::Greater);
        assert_eq!(deglex.compare(&a, &b), Ordering::Less);
        // x1*x3 vs x2^2 in degree 2: deglex prefers x1*x3, grevlex prefers x2^2.
        let (c, d) = (mono(3, "x1*x3"), mono(3, "x2^2"));
        assert_eq!(deglex.compare(&c, &d), Ordering::Greater);
        assert_eq!(grevlex.compare(&c, &d), Ordering::Less);
    }

    #[test]
    fn weight_ties_are_rejected() {
        let w = MonomialOrder::Weight(vec![1, 1, 1, 1]);
        let gens = [mono(4, "x1*x2"), mono(4, "x3*x4")];
        assert!(matches!(w.sort(&gens), Err(Error::InvalidOrder(_))));
        let w = MonomialOrder::Weight(vec![1, 2, 3, 4]);
        assert_eq!(w.sort(&gens).unwrap(), gens.to_vec());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
        assert!(orders_for(&OrderSpec::AllFamilies, 9, 8).unwrap_err().is_resource());
        assert_eq!(orders_for(&OrderSpec::AllFamilies, 3, 8).unwrap().len(), 18);
    }

    #[test]
    fn parse_spec() {
        assert_eq!("lex".parse::<OrderSpec>().unwrap(), OrderSpec::Family(OrderFamily::Lex));
        assert_eq!("weight:1,2".parse::<OrderSpec>().unwrap(), OrderSpec::Weight(vec![1, 2]));
        assert!("weight:a".parse::<OrderSpec>().is_err());
        for text in ["all", "lex", "deglex", "degrevlex", "weight:1,-2"] {
            assert_eq!(text.parse::<OrderSpec>().unwrap().to_string(), text);
        }
    }
}
