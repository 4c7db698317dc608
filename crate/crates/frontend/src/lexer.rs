use crate::error::SyntaxError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Loc {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub loc: Loc,
    /// Byte length in the source.
    pub len: usize,
}

const SYMBOLS: &str = "()[],;=+-*^/.";

/// Splits `src` into tokens. Comments run from `#` or `//` to the end of the
/// line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&(off, c)) = chars.peek() {
        let loc = Loc { line, col, offset: off };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && src[off..].starts_with("//")) {
            while chars.peek().is_some_and(|&(_, c)| c != '\n') {
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = off;
            while let Some(&(o, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = o + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(src[off..end].to_string()), loc, len: end - off });
            col += end - off;
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = off;
            while let Some(&(o, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    end = o + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Int(src[off..end].to_string()), loc, len: end - off });
            col += end - off;
            continue;
        }
        if SYMBOLS.contains(c) {
            chars.next();
            out.push(Token { tok: Tok::Sym(c), loc, len: 1 });
            col += 1;
            continue;
        }
        let hint = if c == '"' || c == '\'' { "strings are not part of the language" } else { "remove the character or replace it with an operator" };
        return Err(SyntaxError::new(loc, format!("unexpected character {c:?}"), hint));
    }
    let loc = Loc { line, col, offset: src.len() };
    out.push(Token { tok: Tok::Eof, loc, len: 0 });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_locations() {
        let toks = tokenize("ring S = poly(p=7);\n  x^2 # note\nt1").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(kinds[0], &Tok::Ident("ring".into()));
        assert_eq!(kinds[7], &Tok::Int("7".into()));
        let x = toks.iter().find(|t| t.tok == Tok::Ident("x".into())).unwrap();
        assert_eq!((x.loc.line, x.loc.col), (2, 3));
        let t1 = toks.iter().find(|t| t.tok == Tok::Ident("t1".into())).unwrap();
        assert_eq!((t1.loc.line, t1.loc.col), (3, 1));
        assert_eq!(toks.last().unwrap().tok, Tok::Eof);
    }

    #[test]
    fn bad_character() {
        let err = tokenize("I = ideal(x @ y);").unwrap_err();
        assert_eq!((err.loc.line, err.loc.col), (1, 13));
    }
}
