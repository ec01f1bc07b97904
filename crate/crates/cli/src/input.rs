use std::fs;

use anyhow::{bail, Context, Result};

use posetpoly::expr::{parse, Program};
use posetpoly::{DecompositionTree, Poset};

use crate::Options;

/// A poset read from the command line, with the decomposition tree implied
/// by its expression when it came from one.
pub struct Input {
    pub poset: Poset,
    pub tree: DecompositionTree,
}

fn from_program(prog: &Program) -> Result<Input> {
    let poset = prog.eval()?;
    let tree = prog.tree()?;
    Ok(Input {
        poset,
        tree,
    })
}

pub fn load(opts: &Options) -> Result<Input> {
    let src = match (&opts.expr, &opts.file) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        (None, None) => bail!("this command needs --expr or --file"),
    };
    if looks_like_json(&src) {
        let poset = Poset::from_json(&src)?;
        let tree = DecompositionTree::canonical(&poset);
        return Ok(Input { poset, tree });
    }
    from_program(&parse(&src)?)
}

/// JSON objects open with `{` followed by a quoted key; expression literals
/// open with `{` followed by a label or `;`.
fn looks_like_json(src: &str) -> bool {
    let mut it = src.trim_start().chars();
    it.next() == Some('{') && it.find(|c| !c.is_whitespace()) == Some('"')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_detection() {
        assert!(looks_like_json("{\"labels\": [], \"covers\": []}"));
        assert!(looks_like_json("  {\n  \"labels\": []}"));
        assert!(!looks_like_json("{a, b; a<b}"));
        assert!(!looks_like_json("chain(2)"));
    }
}
