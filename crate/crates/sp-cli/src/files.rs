//! Group-file and triple-file parsing.
//!
//! Group files are line based: `# comment`, `name <string>`,
//! `degree <n>` (required before any generator), `gen <cycles>`,
//! `stab <cycles>`, with 0-based points throughout. A file without `stab`
//! lines designates the trivial stabilizer (the regular action).
//!
//! Triple files hold three sections: `K:` followed by an embedded group
//! block, `aut:` with one line per automorphism listing the images of `K`'s
//! generators (elements separated by top-level whitespace), and `L:` with
//! one generator line per element (empty for the trivial subgroup).

use std::fmt;

use semiprim::config::Caps;
use semiprim::group::PermGroup;
use semiprim::perm::Permutation;
use semiprim::triple::{Automorphism, GroupWithElements, SemiprimitiveTriple};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

pub struct GroupFile {
    pub name: Option<String>,
    pub group: PermGroup,
    /// Designated stabilizer; `None` means the regular action.
    pub stab: Option<PermGroup>,
}

pub fn parse_group_file(text: &str) -> Result<GroupFile, ParseError> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut stab_gens: Vec<Permutation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name ") {
            name = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree ") {
            if degree.is_some() {
                return Err(err(lineno, "duplicate degree line"));
            }
            let d: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(lineno, format!("bad degree {rest:?}")))?;
            if d == 0 {
                return Err(err(lineno, "degree must be positive"));
            }
            degree = Some(d);
            continue;
        }
        let (target, rest) = if let Some(rest) = line.strip_prefix("gen ") {
            (&mut gens, rest)
        } else if let Some(rest) = line.strip_prefix("stab ") {
            (&mut stab_gens, rest)
        } else {
            return Err(err(lineno, format!("unrecognized line {line:?}")));
        };
        let d = degree.ok_or_else(|| err(lineno, "degree must come before generators"))?;
        let p = Permutation::parse(rest.trim(), d).map_err(|e| err(lineno, e.to_string()))?;
        target.push(p);
    }
    let degree = degree.ok_or_else(|| err(0, "missing degree line"))?;
    let group = PermGroup::new(degree, gens);
    let stab = if stab_gens.is_empty() {
        None
    } else {
        let s = PermGroup::new(degree, stab_gens);
        if !group.contains_group(&s) {
            return Err(err(0, "stab generators are not members of the group"));
        }
        Some(s)
    };
    Ok(GroupFile { name, group, stab })
}

/// Splits a line into chunks at whitespace occurring outside parentheses, so
/// `(0 1)(2 3) (0 1 2)` yields two elements.
pub fn split_elements(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in line.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                current.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

pub struct TripleFile {
    pub triple: SemiprimitiveTriple,
}

pub fn parse_triple_file(text: &str, caps: &Caps) -> Result<TripleFile, ParseError> {
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        K,
        Aut,
        L,
    }
    let mut section = Section::Preamble;
    let mut k_lines: Vec<(usize, String)> = Vec::new();
    let mut aut_lines: Vec<(usize, String)> = Vec::new();
    let mut l_lines: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line {
            "K:" => {
                section = Section::K;
                continue;
            }
            "aut:" => {
                section = Section::Aut;
                continue;
            }
            "L:" => {
                section = Section::L;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Preamble => {
                return Err(err(lineno, "content before the K: section"));
            }
            Section::K => k_lines.push((lineno, line.to_string())),
            Section::Aut => aut_lines.push((lineno, line.to_string())),
            Section::L => l_lines.push((lineno, line.to_string())),
        }
    }
    if k_lines.is_empty() {
        return Err(err(0, "missing K: section"));
    }
    let k_text: String = k_lines
        .iter()
        .map(|(_, l)| l.as_str())
        .collect::<Vec<_>>()
        .join("\n");
    let kf = parse_group_file(&k_text)?;
    let degree = kf.group.degree();
    let kwe = GroupWithElements::new(&kf.group, caps)
        .map_err(|e| err(0, format!("K is too large for an element table: {e}")))?;
    let gen_count = kf.group.generators().len();
    let mut auts: Vec<Automorphism> = Vec::new();
    for (lineno, line) in &aut_lines {
        let chunks = split_elements(line);
        if chunks.len() != gen_count {
            return Err(err(
                *lineno,
                format!(
                    "expected {gen_count} generator images, found {}",
                    chunks.len()
                ),
            ));
        }
        let images: Vec<Permutation> = chunks
            .iter()
            .map(|c| Permutation::parse(c, degree))
            .collect::<Result<_, _>>()
            .map_err(|e| err(*lineno, e.to_string()))?;
        let aut = Automorphism::from_gen_images(&kwe, &images)
            .map_err(|e| err(*lineno, e.to_string()))?;
        auts.push(aut);
    }
    let mut l_gens: Vec<Permutation> = Vec::new();
    for (lineno, line) in &l_lines {
        for chunk in split_elements(line) {
            let p = Permutation::parse(&chunk, degree).map_err(|e| err(*lineno, e.to_string()))?;
            if !kf.group.contains(&p) {
                return Err(err(*lineno, "L generator is not an element of K"));
            }
            l_gens.push(p);
        }
    }
    let l = PermGroup::new(degree, l_gens);
    Ok(TripleFile {
        triple: SemiprimitiveTriple::new(kwe, auts, l),
    })
}

/// Renders a triple in the triple-file format.
pub fn render_triple(t: &SemiprimitiveTriple) -> String {
    let mut out = String::new();
    out.push_str("K:\n");
    out.push_str(&format!("degree {}\n", t.k.group.degree()));
    for g in t.k.group.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out.push_str("aut:\n");
    for h in t.h.generators() {
        let images: Vec<String> = t
            .k
            .group
            .generators()
            .iter()
            .map(|g| {
                let id = t.k.index_of(g).expect("generator in table");
                format!("{}", t.k.table.perm(h.image(id)))
            })
            .collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out.push_str("L:\n");
    for g in t.l.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_group_file() {
        let f = parse_group_file("degree 3\ngen (0 1 2)\ngen (0 1)\nstab (0 1)\n").unwrap();
        assert_eq!(f.group.order(), 6);
        assert_eq!(f.stab.unwrap().order(), 2);
    }

    #[test]
    fn regular_action_when_no_stab() {
        let f = parse_group_file("degree 5\ngen (0 1 2 3 4)\n").unwrap();
        assert_eq!(f.group.order(), 5);
        assert!(f.stab.is_none());
    }

    #[test]
    fn out_of_range_point() {
        let Err(e) = parse_group_file("degree 3\ngen (0 1 5)\n") else {
            panic!("expected a parse error");
        };
        assert!(e.msg.contains("out of range"));
        assert_eq!(e.line, 2);
    }

    #[test]
    fn split_respects_parens() {
        assert_eq!(
            split_elements("(0 1)(2 3) (0 1 2)"),
            vec!["(0 1)(2 3)".to_string(), "(0 1 2)".to_string()]
        );
    }

    #[test]
    fn triple_file_roundtrip() {
        let caps = Caps::default();
        let text = "K:\ndegree 3\ngen (0 1 2)\naut:\n(0 2 1)\nL:\n";
        let t = parse_triple_file(text, &caps).unwrap().triple;
        assert_eq!(t.k.group.order(), 3);
        assert_eq!(t.h.order(), 2);
        assert_eq!(t.l.order(), 1);
        let rendered = render_triple(&t);
        let t2 = parse_triple_file(&rendered, &caps).unwrap().triple;
        assert_eq!(t2.h.order(), 2);
    }

    #[test]
    fn wrong_order_image_is_rejected() {
        let caps = Caps::default();
        // C4's generator sent to its square: not a bijection on elements.
        let text = "K:\ndegree 4\ngen (0 1 2 3)\naut:\n(0 2)(1 3)\nL:\n";
        let Err(e) = parse_triple_file(text, &caps) else {
            panic!("expected a parse error");
        };
        assert!(e.msg.contains("automorphism") || e.msg.contains("bijection"));
    }
}
