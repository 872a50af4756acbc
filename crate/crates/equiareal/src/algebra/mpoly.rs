//! Sparse multivariate polynomials over ℚ with named variables.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so the monomial
//! order is the lexicographic order over the declared variable tuple and all
//! iteration is deterministic. Constants carry an empty variable list and
//! promote to any variable context on arithmetic.

use super::rational::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type VarSet = Arc<Vec<String>>;

/// Declare an ordered variable tuple.
pub fn vars(names: &[&str]) -> VarSet {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

#[derive(Clone, Debug)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero_in(vars: &VarSet) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(q: Rat) -> Self {
        let mut p = MPoly {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        };
        if !q.is_zero() {
            p.terms.insert(Vec::new(), q);
        }
        p
    }

    /// The generator with index `i` in `vars`.
    pub fn var(vars: &VarSet, i: usize) -> Self {
        assert!(i < vars.len());
        let mut exp = vec![0u32; vars.len()];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rat::from_integer(1.into()));
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Iterate terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Promote a constant (empty-variable) polynomial into `vars`, or check
    /// the contexts match. Panics on genuinely incompatible variable sets.
    fn promote(&self, target: &VarSet) -> MPoly {
        if Arc::ptr_eq(&self.vars, target) || self.vars == *target {
            return self.clone();
        }
        assert!(
            self.vars.is_empty(),
            "mixing variable contexts {:?} and {:?}",
            self.vars,
            target
        );
        let n = target.len();
        let terms = self
            .terms
            .iter()
            .map(|(_, c)| (vec![0u32; n], c.clone()))
            .collect();
        MPoly {
            vars: target.clone(),
            terms,
        }
    }

    fn joint_vars(&self, rhs: &Self) -> VarSet {
        if self.vars.is_empty() {
            rhs.vars.clone()
        } else {
            self.vars.clone()
        }
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, Rat>, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let vs = self.joint_vars(rhs);
        let a = self.promote(&vs);
        let b = rhs.promote(&vs);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            Self::insert_term(&mut terms, e, c);
        }
        MPoly { vars: vs, terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let vs = self.joint_vars(rhs);
        let a = self.promote(&vs);
        let b = rhs.promote(&vs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                Self::insert_term(&mut terms, exp, ca * cb);
            }
        }
        MPoly { vars: vs, terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero_in(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        super::Ring::pow(self, e)
    }

    /// Evaluate at rational values for every variable.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        // constants compare across contexts
        if self.is_constant() && other.is_constant() {
            let a = self.terms.values().next().cloned().unwrap_or_else(Rat::zero);
            let b = other
                .terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rat::zero);
            return a == b;
        }
        false
    }
}

impl super::Ring for MPoly {
    fn zero() -> Self {
        MPoly::constant(<Rat as Zero>::zero())
    }
    fn one() -> Self {
        MPoly::constant(Rat::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn from_rat(q: &Rat) -> Self {
        MPoly::constant(q.clone())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            use num_traits::Signed;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_term = exp.iter().all(|&e| e == 0);
            let show_coeff = !mag.is_one() || is_const_term;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            let mut wrote_var = false;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if show_coeff || wrote_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote_var = true;
            }
            let _ = wrote_var;
        }
        Ok(())
    }
}
