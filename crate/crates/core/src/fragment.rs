//! Depth-one fragments: slicing, canonical keys, vocabulary, reassembly.
//!
//! A fragment is a fragmentizable node with its immediate slots. Children
//! that own a fragment of their own appear as kind-only stubs; terminal
//! children (nodes whose slots are all absent, such as `this` or a bare
//! `return`) are kept verbatim, since there is no later fragment that could
//! fill them in. Reassembly walks stubs in pre-order, mirroring the order in
//! which [`fragmentize`] emitted the fragments.

use alloc::{collections::BTreeMap, string::String, vec, vec::Vec};
use core::fmt;

use crate::ast::{AstNode, NodeKind, Slot, Value};
use crate::error::Error;

/// Sequences longer than this many fragments are left out of training.
pub const MAX_SEQUENCE_LEN: usize = 2048;

/// Default out-of-vocabulary threshold: fragments seen fewer times are OoV.
pub const DEFAULT_MIN_FREQ: u64 = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct Fragment {
    node: AstNode,
}

impl Fragment {
    /// Depth-one projection of `node`.
    pub fn of(node: &AstNode) -> Self {
        let slots = node.slots.iter().map(project).collect();
        Fragment { node: AstNode { kind: node.kind, slots } }
    }

    /// Wraps a node that is already depth-one (every child is a stub or a
    /// terminal leaf).
    pub fn from_node(node: AstNode) -> Result<Self, Error> {
        node.validate()?;
        if node.children().any(AstNode::is_fragmentizable) {
            return Err(Error::MalformedAst(alloc::format!("{}: fragment deeper than one", node.kind)));
        }
        Ok(Fragment { node })
    }

    pub fn kind(&self) -> NodeKind {
        self.node.kind
    }

    pub fn as_node(&self) -> &AstNode {
        &self.node
    }

    pub fn into_node(self) -> AstNode {
        self.node
    }

    /// Kinds of the stubs this fragment opens, in pre-order.
    pub fn stubs(&self) -> Vec<NodeKind> {
        let mut out = Vec::new();
        for slot in &self.node.slots {
            match slot {
                Slot::Stub(k) => out.push(*k),
                Slot::List(items) => out.extend(items.iter().filter_map(|i| match i {
                    Slot::Stub(k) => Some(*k),
                    _ => None,
                })),
                _ => {}
            }
        }
        out
    }
}

fn project(slot: &Slot) -> Slot {
    match slot {
        Slot::Node(child) if child.is_fragmentizable() => Slot::Stub(child.kind),
        Slot::List(items) => Slot::List(items.iter().map(project).collect()),
        other => other.clone(),
    }
}

/// Stable, injective byte encoding of a fragment.
///
/// Layout: kind index, then per slot a tag byte followed by its content.
/// Strings and lists are length-prefixed (u32 LE), numbers are IEEE bits.
pub fn canonical_key(frag: &Fragment) -> Vec<u8> {
    let mut out = Vec::with_capacity(32);
    encode_node(&frag.node, &mut out);
    out
}

fn encode_node(node: &AstNode, out: &mut Vec<u8>) {
    out.push(node.kind as u8);
    for slot in &node.slots {
        encode_slot(slot, out);
    }
}

fn encode_slot(slot: &Slot, out: &mut Vec<u8>) {
    match slot {
        Slot::Absent => out.push(0),
        Slot::Stub(k) => {
            out.push(1);
            out.push(*k as u8);
        }
        Slot::Node(n) => {
            out.push(2);
            encode_node(n, out);
        }
        Slot::List(items) => {
            out.push(3);
            out.extend_from_slice(&(items.len() as u32).to_le_bytes());
            for item in items {
                encode_slot(item, out);
            }
        }
        Slot::Value(v) => {
            out.push(4);
            encode_value(v, out);
        }
    }
}

fn encode_value(v: &Value, out: &mut Vec<u8>) {
    fn str(s: &str, out: &mut Vec<u8>) {
        out.extend_from_slice(&(s.len() as u32).to_le_bytes());
        out.extend_from_slice(s.as_bytes());
    }
    match v {
        Value::Null => out.push(0),
        Value::Bool(b) => {
            out.push(1);
            out.push(*b as u8);
        }
        Value::Num(n) => {
            out.push(2);
            // +0 and -0 compare equal, so they must share a key.
            let n = if *n == 0.0 { 0.0f64 } else { *n };
            out.extend_from_slice(&n.to_bits().to_le_bytes());
        }
        Value::Str(s) => {
            out.push(3);
            str(s, out);
        }
        Value::Regex { pattern, flags } => {
            out.push(4);
            str(pattern, out);
            str(flags, out);
        }
    }
}

/// Fragments of one source file in pre-order, with the position of each
/// fragment's parent fragment.
#[derive(Debug, Clone, PartialEq)]
pub struct FragmentSequence {
    pub source: String,
    pub fragments: Vec<Fragment>,
    /// `parents[i]` is the index of the fragment whose stub `fragments[i]`
    /// fills; `None` for the root.
    pub parents: Vec<Option<usize>>,
}

impl FragmentSequence {
    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }
}

/// Emits one fragment per fragmentizable node, in pre-order.
pub fn fragmentize(ast: &AstNode) -> FragmentSequence {
    let mut fragments = Vec::new();
    let mut parents = Vec::new();
    let mut stack: Vec<(&AstNode, Option<usize>)> = vec![(ast, None)];
    while let Some((node, parent)) = stack.pop() {
        if !node.is_fragmentizable() {
            continue;
        }
        let me = fragments.len();
        fragments.push(Fragment::of(node));
        parents.push(parent);
        let start = stack.len();
        stack.extend(node.children().map(|c| (c, Some(me))));
        stack[start..].reverse();
    }
    FragmentSequence { source: String::new(), fragments, parents }
}

/// Rebuilds a tree from fragments by filling stubs in pre-order.
pub fn reassemble(fragments: &[Fragment]) -> Result<AstNode, Error> {
    let (first, rest) = fragments.split_first().ok_or(Error::ReassemblyArityError)?;
    let mut root = first.node.clone();
    let mut next = 1usize;
    fill(&mut root, rest, &mut next)?;
    if next != fragments.len() {
        return Err(Error::ReassemblyArityError);
    }
    Ok(root)
}

fn fill(node: &mut AstNode, frags: &[Fragment], next: &mut usize) -> Result<(), Error> {
    for slot in node.slots.iter_mut() {
        match slot {
            Slot::List(items) => {
                for item in items.iter_mut() {
                    fill_slot(item, frags, next)?;
                }
            }
            other => fill_slot(other, frags, next)?,
        }
    }
    Ok(())
}

fn fill_slot(slot: &mut Slot, frags: &[Fragment], next: &mut usize) -> Result<(), Error> {
    if let Slot::Stub(kind) = *slot {
        // `next` counts the root, which is not part of `frags`.
        let frag = frags.get(*next - 1).ok_or(Error::ReassemblyArityError)?;
        if frag.kind() != kind {
            return Err(Error::ReassemblyTypeError(*next));
        }
        *next += 1;
        let mut child = frag.node.clone();
        fill(&mut child, frags, next)?;
        *slot = Slot::node(child);
    }
    Ok(())
}

/// Dense index into a [`Vocabulary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FragmentId(pub u32);

impl FragmentId {
    pub const BOS: FragmentId = FragmentId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Reserved out-of-vocabulary id for `kind`.
    pub fn oov(kind: NodeKind) -> FragmentId {
        FragmentId(1 + kind.index() as u32)
    }
}

impl fmt::Display for FragmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Number of reserved ids: BOS plus one OoV per node kind.
pub const RESERVED_IDS: usize = 1 + NodeKind::COUNT;

#[derive(Debug, Clone, PartialEq)]
pub enum EntryKind {
    Bos,
    Oov(NodeKind),
    Fragment(Fragment),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VocabEntry {
    pub key: Vec<u8>,
    pub kind: EntryKind,
    pub frequency: u64,
}

impl VocabEntry {
    pub fn root_kind(&self) -> Option<NodeKind> {
        match &self.kind {
            EntryKind::Bos => None,
            EntryKind::Oov(k) => Some(*k),
            EntryKind::Fragment(f) => Some(f.kind()),
        }
    }

    fn reserved_key(kind: &EntryKind) -> Vec<u8> {
        // 0xFF never starts a fragment key (kind indices are < 0xFF).
        match kind {
            EntryKind::Bos => vec![0xFF, 0],
            EntryKind::Oov(k) => vec![0xFF, 1, *k as u8],
            EntryKind::Fragment(f) => canonical_key(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vocabulary {
    entries: Vec<VocabEntry>,
    index: BTreeMap<Vec<u8>, FragmentId>,
    type_index: Vec<Vec<FragmentId>>,
}

impl Vocabulary {
    /// Builds a vocabulary from entries laid out as `[BOS, OoV(kind 0..), fragments..]`.
    pub fn from_entries(entries: Vec<VocabEntry>) -> Result<Self, Error> {
        let bad = |msg: &str| Err(Error::MalformedAst(alloc::format!("vocabulary: {msg}")));
        if entries.len() < RESERVED_IDS {
            return bad("missing reserved entries");
        }
        let mut index = BTreeMap::new();
        let mut type_index = vec![Vec::new(); NodeKind::COUNT];
        for (i, e) in entries.iter().enumerate() {
            let id = FragmentId(i as u32);
            let layout_ok = match (&e.kind, i) {
                (EntryKind::Bos, 0) => true,
                (EntryKind::Oov(k), i) => i == FragmentId::oov(*k).index(),
                (EntryKind::Fragment(_), i) => i >= RESERVED_IDS,
                _ => false,
            };
            if !layout_ok {
                return bad("reserved ids out of place");
            }
            if e.key != VocabEntry::reserved_key(&e.kind) {
                return bad("key does not match fragment");
            }
            if index.insert(e.key.clone(), id).is_some() {
                return bad("duplicate key");
            }
            if let EntryKind::Fragment(f) = &e.kind {
                type_index[f.kind().index()].push(id);
            }
        }
        Ok(Vocabulary { entries, index, type_index })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[VocabEntry] {
        &self.entries
    }

    pub fn entry(&self, id: FragmentId) -> Option<&VocabEntry> {
        self.entries.get(id.index())
    }

    pub fn fragment(&self, id: FragmentId) -> Option<&Fragment> {
        match &self.entry(id)?.kind {
            EntryKind::Fragment(f) => Some(f),
            _ => None,
        }
    }

    pub fn kind_of(&self, id: FragmentId) -> Option<NodeKind> {
        self.entry(id)?.root_kind()
    }

    pub fn is_reserved(&self, id: FragmentId) -> bool {
        id.index() < RESERVED_IDS
    }

    /// Non-reserved ids whose fragments have root kind `kind`.
    pub fn type_index(&self, kind: NodeKind) -> &[FragmentId] {
        &self.type_index[kind.index()]
    }

    /// Id of `frag`, or the typed OoV id if it is not in the vocabulary.
    pub fn lookup(&self, frag: &Fragment) -> FragmentId {
        self.index
            .get(&canonical_key(frag))
            .copied()
            .unwrap_or_else(|| FragmentId::oov(frag.kind()))
    }

    pub fn id_of_key(&self, key: &[u8]) -> Option<FragmentId> {
        self.index.get(key).copied()
    }

    /// Encodes a fragment sequence as ids with BOS prepended.
    pub fn encode(&self, seq: &FragmentSequence) -> EncodedSequence {
        let mut ids = Vec::with_capacity(seq.len() + 1);
        let mut parent_pos = Vec::with_capacity(seq.len() + 1);
        ids.push(FragmentId::BOS);
        parent_pos.push(0);
        for (frag, parent) in seq.fragments.iter().zip(&seq.parents) {
            ids.push(self.lookup(frag));
            parent_pos.push(parent.map_or(0, |p| p as u32 + 1));
        }
        EncodedSequence { source: seq.source.clone(), ids, parent_pos }
    }
}

/// A fragment sequence as vocabulary ids, BOS first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedSequence {
    pub source: String,
    pub ids: Vec<FragmentId>,
    /// For each position `i >= 1`, the position of the parent fragment in
    /// `ids` (0, i.e. BOS, for the root). Entry 0 is unused.
    pub parent_pos: Vec<u32>,
}

impl EncodedSequence {
    /// Number of prediction targets (every id after BOS).
    pub fn targets(&self) -> usize {
        self.ids.len().saturating_sub(1)
    }

    pub fn parent_id(&self, pos: usize) -> FragmentId {
        self.ids[self.parent_pos[pos] as usize]
    }
}

/// Counts fragments, assigns ids and encodes every sequence. Fragments
/// seen fewer than `min_freq` times map to the OoV id of their kind.
/// Sequences longer than [`MAX_SEQUENCE_LEN`] are dropped.
pub fn build_vocabulary(
    sequences: &[FragmentSequence],
    min_freq: u64,
) -> Result<(Vocabulary, Vec<EncodedSequence>), Error> {
    let kept: Vec<&FragmentSequence> = sequences
        .iter()
        .filter(|s| !s.is_empty() && s.len() <= MAX_SEQUENCE_LEN)
        .collect();
    if kept.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut counts: BTreeMap<Vec<u8>, (u64, &Fragment)> = BTreeMap::new();
    for seq in &kept {
        for frag in &seq.fragments {
            counts.entry(canonical_key(frag)).or_insert((0, frag)).0 += 1;
        }
    }

    let mut entries = Vec::with_capacity(RESERVED_IDS + counts.len());
    let mut push = |kind: EntryKind, frequency| {
        entries.push(VocabEntry { key: VocabEntry::reserved_key(&kind), kind, frequency });
    };
    push(EntryKind::Bos, kept.len() as u64);
    for &k in NodeKind::ALL {
        push(EntryKind::Oov(k), 0);
    }

    let mut oov_freq = vec![0u64; NodeKind::COUNT];
    let mut frequent: Vec<(Vec<u8>, u64, &Fragment)> = Vec::new();
    for (key, (n, frag)) in counts {
        if n >= min_freq {
            frequent.push((key, n, frag));
        } else {
            oov_freq[frag.kind().index()] += n;
        }
    }
    frequent.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    for (key, frequency, frag) in frequent {
        entries.push(VocabEntry { key, kind: EntryKind::Fragment(frag.clone()), frequency });
    }
    for (&k, f) in NodeKind::ALL.iter().zip(oov_freq) {
        entries[FragmentId::oov(k).index()].frequency = f;
    }

    let vocab = Vocabulary::from_entries(entries)?;
    let encoded = kept.iter().map(|s| vocab.encode(s)).collect();
    Ok((vocab, encoded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::build::*;

    fn fig2_statement() -> AstNode {
        expr_stmt(assign(
            "=",
            member(ident("v0"), ident("v1"), true),
            binary("+", ident("v1"), num(5.0)),
        ))
    }

    fn seq_of(ast: &AstNode, source: &str) -> FragmentSequence {
        let mut s = fragmentize(ast);
        s.source = source.into();
        s
    }

    #[test]
    fn childless_kinds_produce_no_fragment() {
        let p = program(vec![leaf(NodeKind::EmptyStatement)]);
        let seq = fragmentize(&p);
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.fragments[0].kind(), NodeKind::Program);
        assert!(seq.fragments[0].stubs().is_empty());
    }

    #[test]
    fn assignment_statement_yields_eight_fragments() {
        let seq = fragmentize(&fig2_statement());
        assert_eq!(seq.len(), 8);
        let assignment = &seq.fragments[1];
        assert_eq!(assignment.kind(), NodeKind::AssignmentExpression);
        assert_eq!(assignment.stubs(), [NodeKind::MemberExpression, NodeKind::BinaryExpression]);
        assert_eq!(seq.parents, [None, Some(0), Some(1), Some(2), Some(2), Some(1), Some(5), Some(5)]);
    }

    #[test]
    fn keys_distinguish_content() {
        let a = Fragment::of(&ident("v0"));
        let b = Fragment::of(&ident("v0"));
        let c = Fragment::of(&ident("v1"));
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert_ne!(canonical_key(&a), canonical_key(&c));
        assert_eq!(canonical_key(&a), canonical_key(&a));
        // "1" the string and 1 the number must differ.
        assert_ne!(canonical_key(&Fragment::of(&string("1"))), canonical_key(&Fragment::of(&num(1.0))));
        assert_eq!(canonical_key(&Fragment::of(&num(0.0))), canonical_key(&Fragment::of(&num(-0.0))));
    }

    #[test]
    fn reassembly_round_trip() {
        let ast = program(vec![fig2_statement(), leaf(NodeKind::EmptyStatement), fig2_statement()]);
        let seq = fragmentize(&ast);
        assert_eq!(reassemble(&seq.fragments).unwrap(), ast);
    }

    #[test]
    fn reassembly_errors() {
        assert_eq!(reassemble(&[]), Err(Error::ReassemblyArityError));
        let seq = fragmentize(&fig2_statement());
        let mut swapped = seq.fragments.clone();
        swapped.swap(1, 2);
        assert_eq!(reassemble(&swapped), Err(Error::ReassemblyTypeError(1)));
        assert_eq!(reassemble(&seq.fragments[..5]), Err(Error::ReassemblyArityError));
        let mut extra = seq.fragments.clone();
        extra.push(seq.fragments[3].clone());
        assert_eq!(reassemble(&extra), Err(Error::ReassemblyArityError));
    }

    #[test]
    fn frequency_threshold_is_strict() {
        let four = program(vec![expr_stmt(ident("four"))]);
        let five = program(vec![expr_stmt(ident("five"))]);
        let mut seqs = Vec::new();
        for i in 0..4 {
            seqs.push(seq_of(&four, &alloc::format!("four{i}")));
        }
        for i in 0..5 {
            seqs.push(seq_of(&five, &alloc::format!("five{i}")));
        }
        let (vocab, encoded) = build_vocabulary(&seqs, DEFAULT_MIN_FREQ).unwrap();
        let four_id = vocab.lookup(&Fragment::of(&ident("four")));
        let five_id = vocab.lookup(&Fragment::of(&ident("five")));
        assert_eq!(four_id, FragmentId::oov(NodeKind::Identifier));
        assert!(!vocab.is_reserved(five_id));
        assert_eq!(vocab.entry(five_id).unwrap().frequency, 5);
        assert!(encoded.iter().all(|e| e.ids[0] == FragmentId::BOS));
        assert_eq!(encoded[0].ids[3], FragmentId::oov(NodeKind::Identifier));
    }

    #[test]
    fn repeated_file_has_no_oov() {
        let ast = program(vec![fig2_statement()]);
        let seqs: Vec<_> = (0..10).map(|i| seq_of(&ast, &alloc::format!("f{i}"))).collect();
        let (vocab, encoded) = build_vocabulary(&seqs, DEFAULT_MIN_FREQ).unwrap();
        for e in &encoded {
            assert!(e.ids[1..].iter().all(|id| !vocab.is_reserved(*id)));
            let frags: Vec<_> = e.ids[1..].iter().map(|id| vocab.fragment(*id).unwrap().clone()).collect();
            assert_eq!(reassemble(&frags).unwrap(), ast);
        }
        for (i, entry) in vocab.entries().iter().enumerate() {
            if let Some(k) = entry.root_kind() {
                if i >= RESERVED_IDS {
                    assert!(vocab.type_index(k).contains(&FragmentId(i as u32)));
                }
            }
        }
    }

    #[test]
    fn empty_corpus_is_rejected() {
        assert_eq!(build_vocabulary(&[], 5).unwrap_err(), Error::EmptyCorpus);
    }

    #[test]
    fn parent_positions_follow_the_tree() {
        let ast = program(vec![fig2_statement()]);
        let seqs: Vec<_> = (0..5).map(|i| seq_of(&ast, &alloc::format!("f{i}"))).collect();
        let (vocab, encoded) = build_vocabulary(&seqs, 5).unwrap();
        let e = &encoded[0];
        assert_eq!(e.parent_pos, [0, 0, 1, 2, 3, 4, 4, 3, 7, 7]);
        assert_eq!(e.parent_id(1), FragmentId::BOS);
        assert_eq!(vocab.kind_of(e.parent_id(2)), Some(NodeKind::Program));
    }
}
