//! Seed mutation: prune one random subtree, then regrow it fragment by
//! fragment from model suggestions until no stub is left.

use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::ast::{AstNode, NodeKind, NodePath, Slot};
use crate::error::Error;
use crate::fragment::{fragmentize, Fragment, FragmentId, Vocabulary};
use crate::suggest::Suggester;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationParams {
    /// Most fragments appended while regrowing one subtree.
    pub f_max: usize,
    /// Suggestions requested per append.
    pub k_top: usize,
    /// Random draws among the suggestions before giving up on a pick.
    pub retry_bound: usize,
}

impl GenerationParams {
    pub fn new(f_max: usize, k_top: usize) -> Self {
        GenerationParams { f_max, k_top, retry_bound: 2 * k_top }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.f_max == 0 || self.k_top == 0 || self.retry_bound == 0 {
            return Err(Error::InvalidHyperparams("f_max, k_top and retry bound must be positive"));
        }
        Ok(())
    }
}

impl Default for GenerationParams {
    fn default() -> Self {
        GenerationParams::new(100, 64)
    }
}

/// A seed with one subtree cut out.
#[derive(Debug, Clone, PartialEq)]
pub struct Pruned {
    /// The seed with a single stub where the subtree was.
    pub ast: AstNode,
    /// BOS followed by the ids of every fragment preceding the removed one.
    pub context: Vec<FragmentId>,
    pub removed_at: NodePath,
    pub removed: AstNode,
}

/// Replaces a uniformly chosen non-root fragmentizable node with a stub.
pub fn remove_subtree<R: Rng + ?Sized>(ast: &AstNode, vocab: &Vocabulary, rng: &mut R) -> Result<Pruned, Error> {
    let paths: Vec<NodePath> = ast
        .preorder_paths()
        .into_iter()
        .filter(|p| ast.get(p).map(AstNode::is_fragmentizable).unwrap_or(false))
        .collect();
    if paths.len() < 2 {
        return Err(Error::NothingToRemove);
    }
    let pick = rng.gen_range(1..paths.len());
    let seq = fragmentize(ast);
    let mut context = Vec::with_capacity(pick + 1);
    context.push(FragmentId::BOS);
    context.extend(seq.fragments[..pick].iter().map(|f| vocab.lookup(f)));

    let mut pruned = ast.clone();
    let path = paths[pick].clone();
    let slot = pruned.position_mut(&path).ok_or_else(|| Error::MalformedAst("removal path".into()))?;
    let removed = match core::mem::replace(slot, Slot::Absent) {
        Slot::Node(n) => *n,
        _ => return Err(Error::MalformedAst("removal path".into())),
    };
    *slot = Slot::Stub(removed.kind);
    Ok(Pruned { ast: pruned, context, removed_at: path, removed })
}

/// True while at least one stub remains.
pub fn is_ast_broken(ast: &AstNode) -> bool {
    ast.has_stub()
}

/// Fills the first pre-order stub of `ast` with `frag`.
pub fn append_frag_in_place(ast: &mut AstNode, frag: &Fragment) -> Result<(), Error> {
    let (path, kind) = ast.first_stub().ok_or(Error::NothingToAppend)?;
    if kind != frag.kind() {
        return Err(Error::AppendTypeError { expected: kind, found: frag.kind() });
    }
    let slot = ast.position_mut(&path).ok_or(Error::NothingToAppend)?;
    *slot = Slot::node(frag.as_node().clone());
    Ok(())
}

pub fn append_frag(ast: &AstNode, frag: &Fragment) -> Result<AstNode, Error> {
    let mut out = ast.clone();
    append_frag_in_place(&mut out, frag)?;
    Ok(out)
}

/// Id of the fragment holding the first stub: its parent in the sequence.
fn stub_parent(ast: &AstNode, path: &[crate::ast::ChildRef], vocab: &Vocabulary) -> FragmentId {
    let holder = ast.get(&path[..path.len() - 1]).expect("stub holder");
    vocab.lookup(&Fragment::of(holder))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationFailure {
    /// No suggestion had the kind of the stub being filled.
    NoTypedSuggestion,
    /// Retry draws or the `f_max` append budget ran out.
    BudgetExhausted,
    /// The chosen seed has no removable subtree.
    UnusableSeed,
}

/// A successful mutation.
#[derive(Debug, Clone, PartialEq)]
pub struct Mutation {
    pub ast: AstNode,
    pub seed: usize,
    pub removed_at: NodePath,
    pub appended: Vec<FragmentId>,
}

/// One round of seed mutation: pick a seed, prune a subtree, and regrow it.
pub fn mutate_ast(
    seeds: &[AstNode],
    vocab: &Vocabulary,
    suggester: &dyn Suggester,
    params: &GenerationParams,
    rng: &mut dyn RngCore,
) -> Result<Mutation, MutationFailure> {
    if seeds.is_empty() {
        return Err(MutationFailure::UnusableSeed);
    }
    let seed = rng.gen_range(0..seeds.len());
    let pruned = remove_subtree(&seeds[seed], vocab, rng).map_err(|_| MutationFailure::UnusableSeed)?;
    regrow(pruned, seed, vocab, suggester, params, rng)
}

/// Regrows the subtree removed from `pruned`.
pub fn regrow(
    pruned: Pruned,
    seed: usize,
    vocab: &Vocabulary,
    suggester: &dyn Suggester,
    params: &GenerationParams,
    rng: &mut dyn RngCore,
) -> Result<Mutation, MutationFailure> {
    let Pruned { mut ast, context, removed_at, .. } = pruned;
    let mut session = suggester.begin();
    for &id in &context {
        session.push(id);
    }
    let mut appended = Vec::new();
    while let Some((path, kind)) = ast.first_stub() {
        if appended.len() >= params.f_max {
            return Err(MutationFailure::BudgetExhausted);
        }
        let parent = stub_parent(&ast, &path, vocab);
        let suggestions = session.suggest(kind, parent, params.k_top, rng);
        if !suggestions.iter().any(|s| vocab.kind_of(s.id) == Some(kind)) {
            return Err(MutationFailure::NoTypedSuggestion);
        }
        let mut chosen = None;
        for _ in 0..params.retry_bound {
            let s = suggestions[rng.gen_range(0..suggestions.len())];
            if vocab.kind_of(s.id) == Some(kind) {
                chosen = Some(s.id);
                break;
            }
        }
        let id = chosen.ok_or(MutationFailure::BudgetExhausted)?;
        let frag = vocab.fragment(id).ok_or(MutationFailure::NoTypedSuggestion)?;
        append_frag_in_place(&mut ast, frag).map_err(|_| MutationFailure::NoTypedSuggestion)?;
        session.push(id);
        appended.push(id);
    }
    Ok(Mutation { ast, seed, removed_at, appended })
}

/// Kind of the stub a pruned AST is waiting on.
pub fn pending_kind(ast: &AstNode) -> Option<NodeKind> {
    ast.first_stub().map(|(_, k)| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::build::*;
    use crate::suggest::{SuggestSession, Suggestion};
    use crate::test_corpus::{programs, toy_corpus};
    use alloc::{boxed::Box, vec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_fragment_ast_always_loses_the_child() {
        let (vocab, _) = toy_corpus();
        // Program [ ExpressionStatement(ThisExpression) ]
        let ast = program(vec![expr_stmt(leaf(NodeKind::ThisExpression))]);
        for s in 0..10 {
            let p = remove_subtree(&ast, &vocab, &mut ChaCha8Rng::seed_from_u64(s)).unwrap();
            assert_eq!(p.removed.kind, NodeKind::ExpressionStatement);
            assert_eq!(p.context, vec![FragmentId::BOS, vocab.lookup(&Fragment::of(&ast))]);
            assert!(is_ast_broken(&p.ast));
        }
        let lone = program(vec![]);
        assert_eq!(remove_subtree(&lone, &vocab, &mut ChaCha8Rng::seed_from_u64(0)), Err(Error::NothingToRemove));
    }

    #[test]
    fn replaying_removed_fragments_restores_the_seed() {
        let (vocab, _) = toy_corpus();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for ast in programs() {
            for _ in 0..20 {
                let p = remove_subtree(&ast, &vocab, &mut rng).unwrap();
                let mut rebuilt = p.ast.clone();
                for frag in fragmentize(&p.removed).fragments {
                    append_frag_in_place(&mut rebuilt, &frag).unwrap();
                }
                assert!(!is_ast_broken(&rebuilt));
                assert_eq!(rebuilt, ast);
            }
        }
    }

    #[test]
    fn append_checks_kind_and_stub_presence() {
        let ast = program(vec![expr_stmt(leaf(NodeKind::ThisExpression))]);
        let frag = Fragment::of(&ident("v0"));
        assert_eq!(append_frag(&ast, &frag), Err(Error::NothingToAppend));
        let mut broken = ast.clone();
        *broken.position_mut(&ast.preorder_paths()[1]).unwrap() = Slot::Stub(NodeKind::ExpressionStatement);
        assert_eq!(
            append_frag(&broken, &frag),
            Err(Error::AppendTypeError { expected: NodeKind::ExpressionStatement, found: NodeKind::Identifier })
        );
        // A fragment whose children are leaves closes its stub for good.
        let stmt = Fragment::of(&expr_stmt(leaf(NodeKind::ThisExpression)));
        let fixed = append_frag(&broken, &stmt).unwrap();
        assert!(!is_ast_broken(&fixed));
    }

    struct Fixed(Vec<FragmentId>);
    struct FixedSession<'a>(&'a [FragmentId]);
    impl Suggester for Fixed {
        fn begin(&self) -> Box<dyn SuggestSession + '_> {
            Box::new(FixedSession(&self.0))
        }
    }
    impl SuggestSession for FixedSession<'_> {
        fn push(&mut self, _: FragmentId) {}
        fn suggest(&mut self, _: NodeKind, _: FragmentId, k: usize, _: &mut dyn RngCore) -> Vec<Suggestion> {
            self.0.iter().take(k).map(|id| Suggestion { id: *id, score: 1.0 }).collect()
        }
    }

    #[test]
    fn wrong_typed_suggestions_fail() {
        let (vocab, _) = toy_corpus();
        let literal_ids: Vec<FragmentId> = vocab.type_index(NodeKind::Literal).to_vec();
        let seeds = vec![program(vec![expr_stmt(call(ident("print"), vec![ident("v0")]))])];
        let s = Fixed(literal_ids);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // Every removable node here is a statement, call or identifier.
        let r = mutate_ast(&seeds, &vocab, &s, &GenerationParams::default(), &mut rng);
        assert_eq!(r, Err(MutationFailure::NoTypedSuggestion));
    }

    #[test]
    fn appended_count_respects_f_max() {
        let (vocab, _) = toy_corpus();
        let all: Vec<FragmentId> = (crate::fragment::RESERVED_IDS..vocab.len()).map(|i| FragmentId(i as u32)).collect();
        let s = Fixed(all);
        let params = GenerationParams::new(3, 1000);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            match mutate_ast(&programs(), &vocab, &s, &params, &mut rng) {
                Ok(m) => {
                    assert!(m.appended.len() <= 3);
                    assert!(!is_ast_broken(&m.ast));
                }
                Err(e) => assert_ne!(e, MutationFailure::UnusableSeed),
            }
        }
    }
}
