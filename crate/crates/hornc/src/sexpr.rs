//! Minimal s-expression reader with source positions.
//!
//! Handles `;` line comments and `|...|` quoted symbols. String literals are
//! rejected up front since no supported construct uses them.

use crate::error::ChcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom { text: String, pos: Pos },
    List { items: Vec<Sexp>, pos: Pos },
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom { text, .. } => Some(text),
            Sexp::List { .. } => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List { items, .. } => Some(items),
            Sexp::Atom { .. } => None,
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Reader<'a> {
    fn new(input: &'a str) -> Self {
        Reader {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Option<Sexp>, ChcError> {
        self.skip_trivia();
        let pos = self.pos();
        let Some(&c) = self.chars.peek() else {
            return Ok(None);
        };
        match c {
            '(' => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Sexp::List { items, pos }));
                        }
                        Some(_) => match self.read()? {
                            Some(s) => items.push(s),
                            None => {
                                return Err(ChcError::syntax(pos.line, pos.col, "unclosed '('"))
                            }
                        },
                        None => return Err(ChcError::syntax(pos.line, pos.col, "unclosed '('")),
                    }
                }
            }
            ')' => Err(ChcError::syntax(pos.line, pos.col, "unexpected ')'")),
            '"' => Err(ChcError::Unsupported("string literals".into())),
            '|' => {
                self.bump();
                let mut text = String::new();
                loop {
                    match self.bump() {
                        Some('|') => break,
                        Some(c) => text.push(c),
                        None => {
                            return Err(ChcError::syntax(pos.line, pos.col, "unclosed '|' symbol"))
                        }
                    }
                }
                Ok(Some(Sexp::Atom { text, pos }))
            }
            _ => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' || c == '|' || c == '"'
                    {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                Ok(Some(Sexp::Atom { text, pos }))
            }
        }
    }
}

/// Read every top-level s-expression in `input`.
pub fn parse_all(input: &str) -> Result<Vec<Sexp>, ChcError> {
    let mut reader = Reader::new(input);
    let mut out = Vec::new();
    while let Some(s) = reader.read()? {
        out.push(s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_with_comments() {
        let got = parse_all("; header\n(a (b 1) |odd name|) ()").unwrap();
        assert_eq!(got.len(), 2);
        let items = got[0].list().unwrap();
        assert_eq!(items[0].atom(), Some("a"));
        assert_eq!(items[2].atom(), Some("odd name"));
    }

    #[test]
    fn reports_position_of_unclosed_paren() {
        let err = parse_all("(a\n  (b").unwrap_err();
        match err {
            ChcError::Syntax { line, col, .. } => {
                assert_eq!((line, col), (2, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_strings() {
        assert!(matches!(
            parse_all("(\"s\")").unwrap_err(),
            ChcError::Unsupported(_)
        ));
    }
}
