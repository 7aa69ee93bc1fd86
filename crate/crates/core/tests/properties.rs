//! Invariants checked over random programs.

use std::collections::{BTreeMap, BTreeSet};

use fraggen_core::ast::{AstNode, NodeKind, Slot};
use fraggen_core::fragment::{build_vocabulary, fragmentize, reassemble, EntryKind, FragmentId, RESERVED_IDS};
use fraggen_core::generate::{mutate_ast, GenerationParams};
use fraggen_core::nnlm::{forward, init_model, Hyperparams};
use fraggen_core::normalize::{normalize, BuiltinRegistry};
use fraggen_core::print::print_program;
use fraggen_core::resolve::{find_undeclared, resolve_references, JsType, UsageHints};
use fraggen_core::suggest::{suggest, MarkovModel, MarkovSuggester, RandomSuggester, Suggester};
use fraggen_core::Vocabulary;
use fraggen_testkit::{program_strategy, random_program};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn builtins() -> BuiltinRegistry {
    let mut b = BuiltinRegistry::default();
    for n in ["Math", "Object", "Array", "String", "undefined", "NaN", "JSON"] {
        b.names.insert(n.into());
    }
    b.test_functions.insert("print".into());
    b.types.insert("Math".into(), JsType::Object);
    b.types.insert("print".into(), JsType::Function);
    b
}

fn identifiers(ast: &AstNode) -> Vec<String> {
    ast.preorder().into_iter().filter_map(|n| n.ident_name().map(String::from)).collect()
}

fn map_idents(n: &mut AstNode, f: &dyn Fn(&str) -> Option<String>) {
    if n.kind == NodeKind::Property && n.bool_value("shorthand") {
        // Keep the property name; only the bound variable is renamed.
        *n.slot_mut("shorthand").unwrap() = Slot::Value(fraggen_core::Value::Bool(false));
        if let Some(Slot::Node(v)) = n.slot_mut("value") {
            map_idents(v, f);
        }
        return;
    }
    if let Some(name) = n.ident_name() {
        if let Some(new) = f(name) {
            *n.slot_mut("name").unwrap() = Slot::Value(fraggen_core::Value::str(new));
        }
    }
    for slot in &mut n.slots {
        match slot {
            Slot::Node(c) => map_idents(c, f),
            Slot::List(items) => {
                for item in items {
                    if let Slot::Node(c) = item {
                        map_idents(c, f);
                    }
                }
            }
            _ => {}
        }
    }
}

/// Normalized corpus of random programs with its vocabulary.
fn corpus(seed: u64, files: usize, min_freq: u64) -> (Vec<AstNode>, Vocabulary, Vec<fraggen_core::fragment::EncodedSequence>) {
    let b = builtins();
    let seeds: Vec<AstNode> =
        (0..files as u64).map(|i| normalize(&random_program(seed * 1000 + i, 60), &b).0).collect();
    let seqs: Vec<_> = seeds.iter().map(fragmentize).collect();
    let (vocab, enc) = build_vocabulary(&seqs, min_freq).unwrap();
    (seeds, vocab, enc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_programs_are_well_formed(ast in program_strategy(150)) {
        prop_assert!(ast.validate().is_ok());
        prop_assert!(!ast.has_stub());
        prop_assert!(print_program(&ast).is_ok());
    }

    #[test]
    fn preorder_visits_every_node_once_root_first(ast in program_strategy(150)) {
        let order = ast.preorder();
        prop_assert_eq!(order.len(), ast.node_count());
        prop_assert!(std::ptr::eq(order[0], &ast));
        let paths = ast.preorder_paths();
        prop_assert_eq!(paths.len(), order.len());
        for (p, n) in paths.iter().zip(&order) {
            prop_assert!(std::ptr::eq(ast.get(p).unwrap(), *n));
        }
    }

    #[test]
    fn printer_refuses_any_stub(ast in program_strategy(100), pick in any::<prop::sample::Index>()) {
        let paths = ast.preorder_paths();
        let path = &paths[1 + pick.index(paths.len() - 1)];
        let mut holed = ast.clone();
        let kind = holed.get(path).unwrap().kind;
        *holed.position_mut(path).unwrap() = Slot::Stub(kind);
        prop_assert!(print_program(&holed).is_err());
    }

    #[test]
    fn fragments_reassemble_to_the_tree(ast in program_strategy(150)) {
        let seq = fragmentize(&ast);
        let fragmentizable = ast.preorder().into_iter().filter(|n| n.is_fragmentizable()).count();
        prop_assert_eq!(seq.len(), fragmentizable);
        prop_assert_eq!(reassemble(&seq.fragments).unwrap(), ast);
    }

    #[test]
    fn fragments_have_depth_one(ast in program_strategy(150)) {
        for (frag, node) in fragmentize(&ast).fragments.iter().zip(ast.preorder().into_iter().filter(|n| n.is_fragmentizable())) {
            let f = frag.as_node();
            prop_assert_eq!(f.kind, node.kind);
            // Every child is a stub or a terminal leaf.
            prop_assert!(f.children().all(|c| !c.is_fragmentizable()));
            prop_assert_eq!(frag.stubs().len(), node.children().filter(|c| c.is_fragmentizable()).count());
        }
    }

    #[test]
    fn parents_point_at_the_enclosing_fragment(ast in program_strategy(150)) {
        let seq = fragmentize(&ast);
        prop_assert_eq!(seq.parents[0], None);
        for (i, p) in seq.parents.iter().enumerate().skip(1) {
            let p = p.unwrap();
            prop_assert!(p < i);
            prop_assert!(seq.fragments[p].stubs().contains(&seq.fragments[i].kind()));
        }
    }

    #[test]
    fn normalize_is_idempotent(ast in program_strategy(150)) {
        let b = builtins();
        let (once, _) = normalize(&ast, &b);
        let (twice, _) = normalize(&once, &b);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn alpha_equivalent_programs_normalize_identically(ast in program_strategy(150)) {
        let b = builtins();
        let mut renamed = ast.clone();
        // Testkit binds only `v<n>` names. Names that also occur free are
        // left alone, since free names survive normalization verbatim.
        let free: BTreeSet<String> = find_undeclared(&ast, &b).into_iter().collect();
        map_idents(&mut renamed, &|n| {
            let digits = n.strip_prefix('v').filter(|d| !d.is_empty() && d.bytes().all(|c| c.is_ascii_digit()))?;
            (!free.contains(n)).then(|| format!("renamed_{digits}"))
        });
        prop_assert_eq!(normalize(&ast, &b).0, normalize(&renamed, &b).0);
    }

    #[test]
    fn normalized_names_never_collide_with_builtins(ast in program_strategy(150)) {
        let b = builtins();
        let (out, map) = normalize(&ast, &b);
        for new in map.variables.values().chain(map.functions.values()) {
            prop_assert!(!b.contains(new), "renamed to builtin {new}");
        }
        let before: Vec<String> = identifiers(&ast).into_iter().filter(|n| b.contains(n)).collect();
        let after: Vec<String> = identifiers(&out).into_iter().filter(|n| b.contains(n)).collect();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn resolved_programs_have_no_undeclared_names(ast in program_strategy(150), seed in any::<u64>()) {
        let b = builtins();
        let hints = UsageHints::default();
        let (resolved, report) = resolve_references(&ast, &b, &hints, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(find_undeclared(&resolved, &b).is_empty(), "{:?}", find_undeclared(&resolved, &b));
        prop_assert!(resolved.validate().is_ok());
        prop_assert!(print_program(&resolved).is_ok());
        for r in &report {
            prop_assert!(!b.contains(&r.old));
            prop_assert!(!b.contains(&r.new));
        }
        // Built-in references survive.
        let count = |a: &AstNode| {
            let mut m = BTreeMap::<String, usize>::new();
            for n in identifiers(a).into_iter().filter(|n| b.contains(n)) {
                *m.entry(n).or_default() += 1;
            }
            m
        };
        let (before, after) = (count(&ast), count(&resolved));
        for (name, n) in before {
            prop_assert!(after.get(&name).copied().unwrap_or(0) >= n, "{name} lost");
        }
        // Idempotence.
        let (again, more) = resolve_references(&resolved, &b, &hints, &mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        prop_assert!(more.is_empty());
        prop_assert_eq!(again, resolved);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn encoding_matches_fragment_frequencies(seed in 0u64..1000, min_freq in 1u64..4) {
        let (seeds, vocab, enc) = corpus(seed, 8, min_freq);
        let seqs: Vec<_> = seeds.iter().map(fragmentize).collect();
        let mut counts = BTreeMap::new();
        for s in &seqs {
            for f in &s.fragments {
                *counts.entry(fraggen_core::fragment::canonical_key(f)).or_insert(0u64) += 1;
            }
        }
        for (s, e) in seqs.iter().zip(&enc) {
            prop_assert_eq!(e.ids[0], FragmentId::BOS);
            prop_assert_eq!(e.ids.len(), s.len() + 1);
            for (f, id) in s.fragments.iter().zip(&e.ids[1..]) {
                let frequent = counts[&fraggen_core::fragment::canonical_key(f)] >= min_freq;
                if frequent {
                    prop_assert_eq!(vocab.fragment(*id), Some(f));
                } else {
                    prop_assert_eq!(*id, FragmentId::oov(f.kind()));
                }
            }
        }
    }

    #[test]
    fn type_index_partitions_the_fragment_ids(seed in 0u64..1000, min_freq in 1u64..4) {
        let (_, vocab, _) = corpus(seed, 8, min_freq);
        let mut seen = BTreeSet::new();
        for &k in NodeKind::ALL {
            for &id in vocab.type_index(k) {
                prop_assert!(!vocab.is_reserved(id));
                prop_assert_eq!(vocab.kind_of(id), Some(k));
                prop_assert!(seen.insert(id));
            }
        }
        prop_assert_eq!(seen.len(), vocab.len() - RESERVED_IDS);
        for (i, e) in vocab.entries().iter().enumerate() {
            match (&e.kind, i) {
                (EntryKind::Bos, 0) => {}
                (EntryKind::Oov(k), i) => prop_assert_eq!(i, FragmentId::oov(*k).index()),
                (EntryKind::Fragment(_), i) => prop_assert!(i >= RESERVED_IDS),
                _ => prop_assert!(false, "bad layout at {i}"),
            }
        }
    }

    #[test]
    fn model_output_is_a_distribution(seed in 0u64..1000, cut in any::<prop::sample::Index>()) {
        let (_, vocab, enc) = corpus(seed, 4, 1);
        let hp = Hyperparams { embed_dim: 6, hidden_dim: 5, type_embed_dim: 3, rng_seed: seed, ..Hyperparams::default() };
        let model = init_model(&hp, &vocab).unwrap();
        let s = &enc[0];
        let pos = 1 + cut.index(s.targets());
        let next = vocab.kind_of(s.ids[pos]).unwrap();
        let p = forward(&model, &s.ids[..pos], next, s.parent_id(pos)).unwrap();
        prop_assert_eq!(p.len(), vocab.len());
        prop_assert!(p.iter().all(|v| *v >= 0.0 && v.is_finite()));
        let sum: f64 = p.iter().map(|v| f64::from(*v)).sum();
        prop_assert!((sum - 1.0).abs() < 1e-5, "sum {sum}");
    }

    #[test]
    fn suggestions_are_distinct_unreserved_and_capped(seed in 0u64..1000, k in 1usize..80, cut in any::<prop::sample::Index>()) {
        let (_, vocab, enc) = corpus(seed, 6, 1);
        let markov = MarkovModel::train(&enc);
        let random = RandomSuggester::new(&vocab);
        let ms = MarkovSuggester { model: &markov };
        let s = &enc[0];
        let pos = 1 + cut.index(s.targets());
        let ctx = &s.ids[..pos];
        for sug in [&ms as &dyn Suggester, &random] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let out = suggest(sug, ctx, vocab.kind_of(s.ids[pos]).unwrap(), s.parent_id(pos), k, &mut rng);
            prop_assert!(out.len() <= k);
            prop_assert!(!out.is_empty());
            let ids: BTreeSet<_> = out.iter().map(|x| x.id).collect();
            prop_assert_eq!(ids.len(), out.len());
            prop_assert!(out.iter().all(|x| x.id.index() >= RESERVED_IDS && x.id.index() < vocab.len()));
            prop_assert!(out.windows(2).all(|w| w[0].score >= w[1].score));
        }
        let d = markov.distribution(ctx);
        let total: f64 = d.iter().map(|x| x.score).sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn random_suggestions_are_reproducible(seed in any::<u64>(), k in 1usize..40) {
        let (_, vocab, _) = corpus(seed % 50, 3, 1);
        let r = RandomSuggester::new(&vocab);
        let a = suggest(&r, &[FragmentId::BOS], NodeKind::Program, FragmentId::BOS, k, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = suggest(&r, &[FragmentId::BOS], NodeKind::Program, FragmentId::BOS, k, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(a.len(), k.min(vocab.len() - RESERVED_IDS));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mutation_keeps_the_rest_of_the_seed(seed in 0u64..1000, rng_seed in any::<u64>(), f_max in 1usize..60, k_top in 1usize..8, markov in any::<bool>()) {
        let (seeds, vocab, enc) = corpus(seed, 6, 1);
        let chain = MarkovModel::train(&enc);
        let ms = MarkovSuggester { model: &chain };
        let rs = RandomSuggester::new(&vocab);
        let sug: &dyn Suggester = if markov { &ms } else { &rs };
        let params = GenerationParams::new(f_max, k_top);
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let Ok(m) = mutate_ast(&seeds, &vocab, sug, &params, &mut rng) else { return Ok(()) };
        prop_assert!(!m.ast.has_stub());
        prop_assert!(m.ast.validate().is_ok());
        prop_assert!(print_program(&m.ast).is_ok());
        prop_assert!(!m.appended.is_empty() && m.appended.len() <= f_max);
        let new_sub = m.ast.get(&m.removed_at).unwrap();
        let old_sub = seeds[m.seed].get(&m.removed_at).unwrap();
        prop_assert_eq!(new_sub.kind, old_sub.kind);
        prop_assert_eq!(vocab.kind_of(m.appended[0]), Some(new_sub.kind));
        // The regrown subtree is exactly the appended fragments.
        let regrown: Vec<_> = fragmentize(new_sub).fragments.iter().map(|f| vocab.lookup(f)).collect();
        prop_assert_eq!(&regrown, &m.appended);
        // Outside the regrown subtree nothing changed.
        let mut a = m.ast.clone();
        let mut b = seeds[m.seed].clone();
        *a.position_mut(&m.removed_at).unwrap() = Slot::Stub(new_sub.kind);
        *b.position_mut(&m.removed_at).unwrap() = Slot::Stub(new_sub.kind);
        prop_assert_eq!(a, b);
    }
}
