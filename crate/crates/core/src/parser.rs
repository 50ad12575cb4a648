//! Text format for presentations and flattening of nested exponents.
//!
//! ```text
//! gens: a b c;
//! rels: c^(a b) = c;
//!       a^((c a)^5) = b^((a b)^2);
//! ```
//!
//! `^` is right associative, so `a^b^c` is `a ▷ (b ▷ c)`. Juxtaposition
//! means successive action: `(a b)` used as an exponent acts by `a` then
//! `b`. When every generator name is a single character, an identifier such
//! as `ab` is read letter by letter. `#` starts a comment.

use crate::error::{Error, Result};
use crate::word::{Presentation, Relation, Word};

/// Parsed expression tree, before flattening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Leaf(usize),
    /// `base ^ exponent`
    Exp(Box<ExprNode>, Box<ExprNode>),
    Concat(Vec<ExprNode>),
    /// Integer power of a word; negative powers act by the reversed word.
    Power(Box<ExprNode>, i64),
}

impl ExprNode {
    pub fn leaf(g: usize) -> Self {
        ExprNode::Leaf(g)
    }

    pub fn exp(base: ExprNode, exponent: ExprNode) -> Self {
        ExprNode::Exp(Box::new(base), Box::new(exponent))
    }

    pub fn concat(items: Vec<ExprNode>) -> Self {
        ExprNode::Concat(items)
    }

    pub fn power(node: ExprNode, count: i64) -> Self {
        ExprNode::Power(Box::new(node), count)
    }

    /// A word given directly by its letters.
    pub fn word(letters: &[usize]) -> Self {
        ExprNode::Concat(letters.iter().map(|&g| ExprNode::Leaf(g)).collect())
    }
}

/// Reduces an element expression to `base^word` using
/// `(a^u)^(b^v) = a^(u reverse(v) b v)`.
pub fn flatten(e: &ExprNode) -> Result<(usize, Word)> {
    match e {
        ExprNode::Leaf(g) => Ok((*g, Word::empty())),
        ExprNode::Exp(base, exponent) => {
            let (b, u) = flatten(base)?;
            Ok((b, u.concat(&action_word(exponent)?)))
        }
        ExprNode::Concat(items) => {
            let (first, rest) = items
                .split_first()
                .ok_or_else(|| Error::MalformedExpression("empty expression".into()))?;
            let (b, mut u) = flatten(first)?;
            for item in rest {
                u = u.concat(&action_word(item)?);
            }
            Ok((b, u))
        }
        ExprNode::Power(node, 1) => flatten(node),
        ExprNode::Power(_, n) => Err(Error::MalformedExpression(format!(
            "power ^{n} of a word is not an element"
        ))),
    }
}

/// The word by which an expression acts when it appears as an exponent.
pub fn action_word(e: &ExprNode) -> Result<Word> {
    match e {
        ExprNode::Leaf(g) => Ok(Word::letter(*g)),
        ExprNode::Exp(..) => {
            let (b, v) = flatten(e)?;
            Ok(v.conjugate_of(b))
        }
        ExprNode::Concat(items) => {
            if items.is_empty() {
                return Err(Error::MalformedExpression("empty expression".into()));
            }
            let mut w = Word::empty();
            for item in items {
                w = w.concat(&action_word(item)?);
            }
            Ok(w)
        }
        ExprNode::Power(node, n) => Ok(action_word(node)?.pow(*n)),
    }
}

/// `base1^w1 = base2^w2` becomes `base1^(w1 reverse(w2)) = base2`.
pub fn flatten_equation(lhs: &ExprNode, rhs: &ExprNode) -> Result<Relation> {
    let (b1, w1) = flatten(lhs)?;
    let (b2, w2) = flatten(rhs)?;
    Ok(Relation::new(b1, w1.concat(&w2.reversed()), b2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(i64),
    Caret,
    LParen,
    RParen,
    Eq,
    Semi,
    Colon,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let simple = match c {
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '=' => Some(Tok::Eq),
            ';' => Some(Tok::Semi),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token {
                tok,
                line: l0,
                column: c0,
            });
            i += 1;
            col += 1;
        } else if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_ascii_digit() || c == '-' {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s
                .parse::<i64>()
                .map_err(|_| syntax(l0, c0, format!("bad integer `{s}`")))?;
            col += i - start;
            out.push(Token {
                tok: Tok::Int(n),
                line: l0,
                column: c0,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Name(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else {
            return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    gens: &'a [String],
    letterwise: bool,
}

impl<'a> Parser<'a> {
    fn new(toks: Vec<Token>, gens: &'a [String]) -> Self {
        let letterwise = gens.iter().all(|g| g.chars().count() == 1);
        Parser {
            toks,
            pos: 0,
            gens,
            letterwise,
        }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(syntax(t.line, t.column, format!("expected {what}")))
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self.peek().tok, Tok::Name(_) | Tok::LParen)
    }

    fn expr(&mut self) -> Result<ExprNode> {
        let mut items = Vec::new();
        while self.starts_term() {
            items.push(self.term()?);
        }
        match items.len() {
            0 => {
                let t = self.peek();
                Err(syntax(t.line, t.column, "expected an expression"))
            }
            1 => Ok(items.pop().expect("one item")),
            _ => Ok(ExprNode::Concat(items)),
        }
    }

    fn term(&mut self) -> Result<ExprNode> {
        let atom = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(atom);
        }
        self.next();
        if let Tok::Int(n) = self.peek().tok {
            self.next();
            let node = ExprNode::power(atom, n);
            if self.peek().tok == Tok::Caret {
                self.next();
                let exponent = self.term()?;
                return Ok(ExprNode::exp(node, exponent));
            }
            return Ok(node);
        }
        let exponent = self.term()?;
        Ok(ExprNode::exp(atom, exponent))
    }

    fn atom(&mut self) -> Result<ExprNode> {
        let t = self.next();
        match t.tok {
            Tok::Name(name) => self.resolve(&name, t.line, t.column),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(syntax(t.line, t.column, "expected a generator or `(`")),
        }
    }

    fn resolve(&self, name: &str, line: usize, column: usize) -> Result<ExprNode> {
        if let Some(i) = self.gens.iter().position(|g| g == name) {
            return Ok(ExprNode::Leaf(i));
        }
        if self.letterwise && name.chars().count() > 1 {
            let mut letters = Vec::new();
            for (off, ch) in name.chars().enumerate() {
                let s = ch.to_string();
                match self.gens.iter().position(|g| *g == s) {
                    Some(i) => letters.push(ExprNode::Leaf(i)),
                    None => {
                        return Err(Error::UndeclaredGenerator {
                            name: s,
                            line,
                            column: column + off,
                        })
                    }
                }
            }
            return Ok(ExprNode::Concat(letters));
        }
        Err(Error::UndeclaredGenerator {
            name: name.to_string(),
            line,
            column,
        })
    }
}

/// Parses a full presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = lex(text)?;
    let mut header = Parser::new(toks, &[]);
    match header.next() {
        Token {
            tok: Tok::Name(n), ..
        } if n == "gens" => {}
        t => return Err(syntax(t.line, t.column, "expected `gens:`")),
    }
    header.expect(Tok::Colon, "`:` after `gens`")?;
    let mut gens = Vec::new();
    loop {
        let t = header.next();
        match t.tok {
            Tok::Name(n) => {
                if gens.contains(&n) {
                    return Err(Error::DuplicateGenerator(n));
                }
                gens.push(n);
            }
            Tok::Semi => break,
            _ => return Err(syntax(t.line, t.column, "expected a generator name or `;`")),
        }
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let pos = header.pos;
    let toks = header.toks;
    let mut p = Parser::new(toks, &gens);
    p.pos = pos;
    match p.next() {
        Token {
            tok: Tok::Name(n), ..
        } if n == "rels" => {}
        t => return Err(syntax(t.line, t.column, "expected `rels:`")),
    }
    p.expect(Tok::Colon, "`:` after `rels`")?;
    let mut relations = Vec::new();
    loop {
        match p.peek().tok {
            Tok::Eof => break,
            Tok::Semi => {
                p.next();
                continue;
            }
            _ => {}
        }
        let lhs = p.expr()?;
        p.expect(Tok::Eq, "`=`")?;
        let rhs = p.expr()?;
        p.expect(Tok::Semi, "`;` after relation")?;
        relations.push(flatten_equation(&lhs, &rhs)?);
    }
    Presentation::new(gens, relations)
}

/// Parses a single expression over the given generator names.
pub fn parse_expression(text: &str, generators: &[String]) -> Result<ExprNode> {
    let mut p = Parser::new(lex(text)?, generators);
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(syntax(t.line, t.column, "trailing input"));
    }
    Ok(e)
}
