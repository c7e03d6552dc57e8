use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of symbols a table may declare (fixed exponent arity).
pub const MAX_SYMBOLS: usize = 12;

/// A declared indeterminate, identified by its slot in a [`SymbolTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) usize);

impl Symbol {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Ordered list of symbol names. Declaration order is the variable order
/// used by the graded lexicographic term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        if names.len() > MAX_SYMBOLS {
            return Err(Error::TooManySymbols { max: MAX_SYMBOLS, got: names.len() });
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if out.iter().any(|m| m == n) {
                return Err(Error::DuplicateSymbol(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(SymbolTable { names: out }))
    }

    /// Table holding `q`, `a`, `b` followed by `extra`.
    pub fn standard<S: AsRef<str>>(extra: &[S]) -> Result<Arc<Self>> {
        let mut names: Vec<&str> = vec!["q", "a", "b"];
        names.extend(extra.iter().map(|s| s.as_ref()));
        Self::new(&names)
    }

    /// A new table with `extra` appended (names already present are skipped).
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        for e in extra {
            if !names.iter().any(|n| n == e.as_ref()) {
                names.push(e.as_ref().to_string());
            }
        }
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names.iter().position(|n| n == name).map(Symbol)
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.lookup(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.0]
    }

    pub(crate) fn check_same(a: &Arc<Self>, b: &Arc<Self>) -> Result<()> {
        if Arc::ptr_eq(a, b) || a == b {
            Ok(())
        } else {
            Err(Error::SymbolMismatch { left: a.to_string(), right: b.to_string() })
        }
    }
}

impl fmt::Display for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(", "))
    }
}
