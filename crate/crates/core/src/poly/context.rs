use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A named contiguous range of variables, e.g. the `x` coordinates plus their
/// homogenizing variable in an incidence construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarBlock {
    pub name: String,
    pub range: Range<usize>,
}

/// Ordered, uniquely named variables with an optional block partition.
///
/// Declaration order is the variable order used by every monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    blocks: Vec<VarBlock>,
}

pub type Ctx = Arc<VariableContext>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        Self::validate_names(&names)?;
        Ok(Arc::new(VariableContext {
            names,
            blocks: Vec::new(),
        }))
    }

    /// Builds a context from named blocks laid out in sequence.
    pub fn with_blocks(blocks: Vec<(String, Vec<String>)>) -> Result<Ctx> {
        let mut names = Vec::new();
        let mut out = Vec::new();
        for (bname, vars) in blocks {
            let start = names.len();
            names.extend(vars);
            out.push(VarBlock {
                name: bname,
                range: start..names.len(),
            });
        }
        Self::validate_names(&names)?;
        Ok(Arc::new(VariableContext { names, blocks: out }))
    }

    fn validate_names(names: &[String]) -> Result<()> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) || n == "i" {
                return Err(Error::Input(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate variable name {n:?}")));
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&VarBlock> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// A name not already present, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() || name == "i" {
            name.push('_');
        }
        name
    }

    /// Context with `extra` variables appended (names made fresh as needed).
    pub fn extend(&self, extra: &[&str]) -> Ctx {
        let mut names = self.names.clone();
        for e in extra {
            let mut n = e.to_string();
            while names.contains(&n) || n == "i" {
                n.push('_');
            }
            names.push(n);
        }
        Arc::new(VariableContext {
            names,
            blocks: self.blocks.clone(),
        })
    }

    /// Context keeping only the given indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Ctx {
        Arc::new(VariableContext {
            names: indices.iter().map(|&i| self.names[i].clone()).collect(),
            blocks: Vec::new(),
        })
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_reserved() {
        assert!(VariableContext::new(&["x", "x"]).is_err());
        assert!(VariableContext::new(&["i"]).is_err());
        assert!(VariableContext::new(&["2x"]).is_err());
        assert!(VariableContext::new(&["x", "y_1"]).is_ok());
    }

    #[test]
    fn blocks_partition_range() {
        let c = VariableContext::with_blocks(vec![
            ("x".into(), vec!["a".into(), "b".into()]),
            ("v".into(), vec!["c".into()]),
        ])
        .unwrap();
        assert_eq!(c.block("x").unwrap().range, 0..2);
        assert_eq!(c.block("v").unwrap().range, 2..3);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let c = VariableContext::new(&["t", "t_"]).unwrap();
        assert_eq!(c.fresh_name("t"), "t__");
        let e = c.extend(&["t"]);
        assert_eq!(e.name(2), "t__");
    }
}
