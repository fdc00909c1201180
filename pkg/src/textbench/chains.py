"""Lexical chains: where each topic's words occur throughout a text.

A chain is a group of content-word occurrences linked by lemma identity
(``exact``), additionally by thesaurus synonym edges (``synonym``), or by
synonym plus related-term edges (``related``). Groups are merged by
transitive closure; singleton groups are discarded after merging.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

LINKAGES = ("exact", "synonym", "related")


@dataclass(frozen=True)
class LexicalChain:
    linkage: str
    member_indices: tuple[int, ...]  # token indices, sorted
    first: int
    last: int
    representative_lemma: str

    def __len__(self) -> int:
        return len(self.member_indices)


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def add(self, x: str):
        self.parent.setdefault(x, x)

    def find(self, x: str) -> str:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: str, b: str):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def occurrence_partition(tagged_text, bundle, linkage: str) -> list[list[tuple[int, str]]]:
    """Content-word occurrences grouped by the linkage's transitive closure,
    singletons included. Merging only ever coarsens this partition as the
    linkage loosens, so its class count is non-increasing."""
    if linkage not in LINKAGES:
        raise ValueError(f"linkage must be one of {LINKAGES}, got {linkage!r}")
    occurrences = [
        (idx, tok.lemma)
        for idx, tok in enumerate(tagged_text.tokens)
        if tok.is_content
    ]
    if not occurrences:
        return []
    lemmas = {lemma for _idx, lemma in occurrences}
    uf = _UnionFind()
    for lemma in lemmas:
        uf.add(lemma)
    if linkage != "exact":
        include_related = linkage == "related"
        for lemma in lemmas:
            for other in bundle.linked_lemmas(lemma, include_related):
                if other in lemmas:
                    uf.union(lemma, other)
    groups: dict[str, list[tuple[int, str]]] = {}
    for idx, lemma in occurrences:
        groups.setdefault(uf.find(lemma), []).append((idx, lemma))
    return list(groups.values())


def build_chains(tagged_text, bundle, linkage: str = "exact") -> list[LexicalChain]:
    chains = []
    for members in occurrence_partition(tagged_text, bundle, linkage):
        if len(members) < 2:
            continue
        members.sort()
        indices = tuple(idx for idx, _lemma in members)
        lemma_counts = Counter(lemma for _idx, lemma in members)
        top = max(lemma_counts.values())
        representative = next(
            lemma for _idx, lemma in members if lemma_counts[lemma] == top
        )
        chains.append(
            LexicalChain(
                linkage=linkage,
                member_indices=indices,
                first=indices[0],
                last=indices[-1],
                representative_lemma=representative,
            )
        )
    chains.sort(key=lambda c: (c.first, c.last))
    return chains


def chain_metrics(chains, word_count: int) -> tuple[float, float, float, float]:
    """(chain_count, chain_length, chain_span, cross_chains), all per word.

    Span is the token-index extent of a chain over ``word_count - 1``,
    clamped to [0, 1] for punctuation-heavy degenerate texts.
    """
    if not chains or word_count < 1:
        return (0.0, 0.0, 0.0, 0.0)
    n = len(chains)
    denom = max(word_count - 1, 1)
    chain_count = n / word_count
    chain_length = (sum(len(c) for c in chains) / n) / word_count
    chain_span = sum(min((c.last - c.first) / denom, 1.0) for c in chains) / n
    crossing = 0
    for i, a in enumerate(chains):
        for j, b in enumerate(chains):
            if i != j and a.first <= b.last and b.first <= a.last:
                crossing += 1
                break
    cross_chains = crossing / word_count
    return (chain_count, chain_length, chain_span, cross_chains)
