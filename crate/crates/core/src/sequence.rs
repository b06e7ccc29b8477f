// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Update events and the text sequence format.
//!
//! One update per line: `+ u v [p=x]` inserts, `- u v` deletes. Blank lines
//! and lines starting with `#` are ignored.

use std::fmt;

use thiserror::Error;

use crate::forest::{EdgeKey, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UpdateKind {
    Insert,
    Delete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Update {
    pub kind: UpdateKind,
    pub u: VertexId,
    pub v: VertexId,
    /// Rooted model: the endpoint that becomes the parent.
    pub parent_hint: Option<VertexId>,
}

impl Update {
    pub fn insert(u: VertexId, v: VertexId) -> Self {
        Update {
            kind: UpdateKind::Insert,
            u,
            v,
            parent_hint: None,
        }
    }

    /// Insertion of `(p, r)` with `p` as parent.
    pub fn attach(p: VertexId, r: VertexId) -> Self {
        Update {
            kind: UpdateKind::Insert,
            u: p,
            v: r,
            parent_hint: Some(p),
        }
    }

    pub fn delete(u: VertexId, v: VertexId) -> Self {
        Update {
            kind: UpdateKind::Delete,
            u,
            v,
            parent_hint: None,
        }
    }

    pub fn key(&self) -> EdgeKey {
        EdgeKey::new(self.u, self.v)
    }

    pub fn is_insert(&self) -> bool {
        self.kind == UpdateKind::Insert
    }
}

impl fmt::Display for Update {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            UpdateKind::Insert => {
                write!(f, "+ {} {}", self.u, self.v)?;
                if let Some(p) = self.parent_hint {
                    write!(f, " p={p}")?;
                }
                Ok(())
            }
            UpdateKind::Delete => write!(f, "- {} {}", self.u, self.v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

pub fn parse_sequence(text: &str) -> Result<Vec<Update>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| ParseError {
            line: i + 1,
            msg: msg.to_string(),
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(err("expected `+ u v [p=x]` or `- u v`"));
        }
        let num = |t: &str| t.parse::<VertexId>().map_err(|_| err("bad vertex id"));
        let (u, v) = (num(toks[1])?, num(toks[2])?);
        let up = match (toks[0], toks.len()) {
            ("+", 3) => Update::insert(u, v),
            ("+", 4) => {
                let p = toks[3]
                    .strip_prefix("p=")
                    .ok_or_else(|| err("expected `p=x`"))
                    .and_then(num)?;
                if p != u && p != v {
                    return Err(err("parent must be an endpoint"));
                }
                Update {
                    parent_hint: Some(p),
                    ..Update::insert(u, v)
                }
            }
            ("-", 3) => Update::delete(u, v),
            _ => return Err(err("expected `+ u v [p=x]` or `- u v`")),
        };
        out.push(up);
    }
    Ok(out)
}

pub fn serialize_sequence(updates: &[Update]) -> String {
    let mut s = String::new();
    for u in updates {
        s.push_str(&u.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lines() {
        let seq = parse_sequence("# demo\n+ 0 1 p=0\n\n- 0 1\n+ 2 3\n").unwrap();
        assert_eq!(
            seq,
            vec![
                Update::attach(0, 1),
                Update::delete(0, 1),
                Update::insert(2, 3)
            ]
        );
        assert_eq!(serialize_sequence(&seq), "+ 0 1 p=0\n- 0 1\n+ 2 3\n");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_sequence("+ 0").unwrap_err().line, 1);
        assert_eq!(parse_sequence("+ 0 1\n+ 1 2 p=7").unwrap_err().line, 2);
        assert_eq!(parse_sequence("* 0 1").unwrap_err().line, 1);
        assert_eq!(parse_sequence("- 0 1 p=0").unwrap_err().line, 1);
    }
}
