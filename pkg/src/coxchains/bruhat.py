"""Higher Bruhat orders B(n,1), B(n,2) from reduced words of the longest permutation.

Nothing here touches the root-system code except the explicit comparison
functions at the bottom, which translate through the type-A dictionary
(value pair (a, b) <-> root alpha_a + ... + alpha_{b-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .preorder import Preorder, check_contraction

__all__ = [
    "longest_permutation",
    "count_reduced_words",
    "reduced_words",
    "CommutationClass",
    "HigherBruhat",
    "build_B_n_1",
    "build_B_n_2",
    "bst",
    "sylvester_classes",
    "pair_to_root",
    "triple_to_roots",
    "compare_with_weak_order",
    "compare_with_mg",
    "map_f",
    "rhbo_experiment",
    "rhbo_search",
]

MAX_N = 5


def _check_n(n: int, hi: int = MAX_N) -> None:
    if not 1 <= n <= hi:
        raise ValueError(f"n = {n} is outside the supported range 1..{hi}")


def longest_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n + 1, 0, -1))


def _ascents(p: tuple[int, ...]) -> list[int]:
    return [i for i in range(len(p) - 1) if p[i] < p[i + 1]]


def _swap(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def count_reduced_words(n: int) -> int:
    """Number of reduced words of the longest element of S_{n+1}, by memoized DP."""

    @lru_cache(maxsize=None)
    def count(p: tuple[int, ...]) -> int:
        asc = _ascents(p)
        if not asc:
            return 1
        return sum(count(_swap(p, i)) for i in asc)

    return count(tuple(range(1, n + 2)))


def reduced_words(n: int) -> Iterator[tuple[int, ...]]:
    """All reduced words of w0 in S_{n+1}, letters 0-based positions, in lex order."""
    start = tuple(range(1, n + 2))
    stack = [(start, ())]
    while stack:
        p, word = stack.pop()
        asc = _ascents(p)
        if not asc:
            yield word
            continue
        for i in reversed(asc):
            stack.append((_swap(p, i), word + (i,)))


def pairs_of_word(n: int, word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Value pairs swapped along the word, each as (smaller, larger)."""
    p = tuple(range(1, n + 2))
    out = []
    for i in word:
        a, b = p[i], p[i + 1]
        if a > b:
            raise ValueError(f"word {tuple(word)} is not reduced")
        out.append((a, b))
        p = _swap(p, i)
    return tuple(out)


def _triples(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(1, n + 2), 3))


def inverted_triples(n: int, word: Sequence[int]) -> int:
    """Bitset of triples whose three pairs occur in reverse lexicographic order."""
    pos = {pair: t for t, pair in enumerate(pairs_of_word(n, word))}
    key = 0
    for k, (i, j, l) in enumerate(_triples(n)):
        a, b, c = pos[(i, j)], pos[(i, l)], pos[(j, l)]
        if a < b < c:
            continue
        if c < b < a:
            key |= 1 << k
            continue
        raise ArithmeticError(f"pairs of triple {(i, j, l)} are not in lex or reverse order")
    return key


@dataclass
class CommutationClass:
    key: int
    rep: tuple[int, ...]
    size: int


@dataclass
class HigherBruhat:
    n: int
    k: int
    # elements: for k = 1 permutations, for k = 2 commutation classes
    elements: list
    keys: list[int]
    order: Preorder
    universe: list[tuple]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def covers(self) -> list[tuple[int, int]]:
        return self.order.covers


def _single_step(keys: Sequence[int]) -> list[tuple[int, int]]:
    index = {k: i for i, k in enumerate(keys)}
    width = max(keys).bit_length() if keys else 0
    arcs = []
    for k in keys:
        for b in range(width):
            if not k >> b & 1 and (k | 1 << b) in index:
                arcs.append((index[k], index[k | 1 << b]))
    return arcs


def build_B_n_1(n: int) -> HigherBruhat:
    """Permutations of {1..n+1} keyed by inverted value pairs; single-step inclusion."""
    _check_n(n)
    pairs = list(combinations(range(1, n + 2), 2))
    pidx = {pr: k for k, pr in enumerate(pairs)}
    from itertools import permutations

    perms = []
    for p in permutations(range(1, n + 2)):
        key = 0
        for x in range(len(p)):
            for y in range(x + 1, len(p)):
                if p[x] > p[y]:
                    key |= 1 << pidx[(p[y], p[x])]
        perms.append((bin(key).count("1"), key, p))
    perms.sort()
    keys = [k for _, k, _ in perms]
    return HigherBruhat(n, 1, [p for _, _, p in perms], keys, Preorder(len(keys), _single_step(keys)), pairs)


def build_B_n_2(n: int) -> HigherBruhat:
    """Commutation classes of reduced words of w0, keyed by inverted triples.

    Classes are found by a search over (permutation, partial key) states, so
    each class is produced once with its lexicographically first word; class
    sizes come from a separate count over all words when n <= 4.
    """
    _check_n(n)
    if n < 2:
        raise ValueError("B(n, 2) needs n >= 2")
    triples = _triples(n)
    first_pair = {}
    for k, (i, j, l) in enumerate(triples):
        first_pair.setdefault((i, j), []).append((k, False))
        first_pair.setdefault((j, l), []).append((k, True))

    start = tuple(range(1, n + 2))
    seen_state = set()
    reps: dict[int, tuple[int, ...]] = {}
    # states record decided triples: "decided" bitset and "inverted" bitset
    stack = [(start, 0, 0, ())]
    while stack:
        p, decided, inverted, word = stack.pop()
        state = (p, inverted)
        if state in seen_state:
            continue
        seen_state.add(state)
        asc = _ascents(p)
        if not asc:
            reps.setdefault(inverted, word)
            continue
        for i in reversed(asc):
            pair = (p[i], p[i + 1])
            d, inv = decided, inverted
            for k, rev in first_pair.get(pair, ()):
                if not d >> k & 1:
                    d |= 1 << k
                    if rev:
                        inv |= 1 << k
            stack.append((_swap(p, i), d, inv, word + (i,)))

    for key, word in reps.items():
        if inverted_triples(n, word) != key:
            raise ArithmeticError("partial keys disagree with the triple test")
    sizes = {k: 0 for k in reps}
    if n <= 4:
        for w in reduced_words(n):
            sizes[inverted_triples(n, w)] += 1
    keys = sorted(reps, key=lambda k: (bin(k).count("1"), k))
    classes = [CommutationClass(k, reps[k], sizes[k]) for k in keys]
    return HigherBruhat(n, 2, classes, keys, Preorder(len(keys), _single_step(keys)), triples)


# binary search trees ------------------------------------------------------------


def bst(word: Sequence[int]):
    """Binary search tree from inserting the letters of ``word`` in order.

    Trees are nested tuples (root, left, right), None for empty.
    """
    tree = None

    def insert(t, x):
        if t is None:
            return (x, None, None)
        r, left, right = t
        if x < r:
            return (r, insert(left, x), right)
        return (r, left, insert(right, x))

    for x in word:
        tree = insert(tree, x)
    return tree


def sylvester_tree(p: Sequence[int]):
    # insertion from right to left; fibres are the linear Cambrian classes
    return bst(tuple(reversed(p)))


def sylvester_classes(n: int) -> dict:
    from itertools import permutations

    out: dict = {}
    for p in permutations(range(1, n + 2)):
        out.setdefault(sylvester_tree(p), []).append(p)
    return out


# comparisons with the root-system side --------------------------------------------


def pair_to_root(pair: tuple[int, int], rank: int) -> tuple[int, ...]:
    a, b = pair
    return tuple(int(a - 1 <= s <= b - 2) for s in range(rank))


def triple_to_roots(triple: tuple[int, int, int], rank: int) -> tuple[tuple[int, ...], ...]:
    i, j, k = triple
    return pair_to_root((i, j), rank), pair_to_root((j, k), rank)


def _perm_of_word(n: int, word: Sequence[int]) -> tuple[int, ...]:
    p = tuple(range(1, n + 2))
    for i in word:
        p = _swap(p, i)
    return p


def compare_with_weak_order(B1: HigherBruhat, rs, wo) -> dict:
    """B(n,1) against the weak order of A_n, matched through inversion roots."""
    rank = B1.n
    root_id = {tuple(r): i for i, r in enumerate(rs.positives)}
    to_w = []
    for key in B1.keys:
        mask = 0
        for b, pair in enumerate(B1.universe):
            if key >> b & 1:
                mask |= 1 << root_id[pair_to_root(pair, rank)]
        to_w.append(wo.by_inv.get(mask, -1))
    bijective = sorted(to_w) == list(range(len(wo)))
    same_order = bijective and all(
        B1.order.leq(a, b) == wo.leq(to_w[a], to_w[b]) for a in range(B1.size) for b in range(B1.size)
    )
    words_agree = all(
        wo.element_of_word(wo.elements[to_w[a]].word) == to_w[a]
        and _perm_of_word(B1.n, wo.elements[to_w[a]].word) == B1.elements[a]
        for a in range(B1.size)
    )
    return {"size": B1.size, "bijective": bijective, "same_order": same_order, "words_agree": words_agree}


def triple_dictionary(B2: HigherBruhat, rs) -> dict[int, int]:
    """Triple index -> subsystem id of the subsystem spanned by its two short pairs."""
    root_id = {tuple(r): i for i, r in enumerate(rs.positives)}
    out = {}
    for t, triple in enumerate(B2.universe):
        a, b = (root_id[r] for r in triple_to_roots(triple, B2.n))
        out[t] = rs.pair_subsystem[a][b]
    return out


def translate_key(B2: HigherBruhat, dictionary: dict[int, int], key: int) -> int:
    out = 0
    for t, psi in dictionary.items():
        if key >> t & 1:
            out |= 1 << psi
    return out


def compare_with_mg(B2: HigherBruhat, rs, mg) -> dict:
    """Isomorphism B(n,2) -> MG(A_n, linear c) given by the key dictionary."""
    dictionary = triple_dictionary(B2, rs)
    injective_dictionary = len(set(dictionary.values())) == len(dictionary)
    index = mg.key_index()
    image = [index.get(translate_key(B2, dictionary, k), -1) for k in B2.keys]
    bijective = sorted(image) == list(range(mg.size))
    same_order = bijective and all(
        B2.order.leq(a, b) == mg.preorder.leq(image[a], image[b])
        for a in range(B2.size)
        for b in range(B2.size)
    )
    return {
        "size": B2.size,
        "mg_size": mg.size,
        "dictionary_injective": injective_dictionary,
        "bijective": bijective,
        "same_order": same_order,
        "map": image,
    }


def map_f(n: int, rs, wo, cd, chain_map) -> dict:
    """The map f : B(n,2) -> S(n+2,3) checked two ways.

    Route one reads f off the Cambrian chain map through the dictionary.
    Route two pushes every reduced word through binary search trees: the
    chain of permutations becomes a chain of trees, which names a maximal
    chain of the quotient and hence a class. The routes must agree on every
    class, and f must be a contraction with B(n,2) itself as the domain.
    """
    B2 = build_B_n_2(n)
    iso = compare_with_mg(B2, rs, chain_map.domain)
    if not (iso["bijective"] and iso["same_order"]):
        return {"ok": False, "reason": "B(n,2) is not isomorphic to the domain", "iso": iso}
    route_one = [chain_map.class_map[i] for i in iso["map"]]

    # trees <-> quotient elements, checking that tree fibres are the Cambrian classes
    Q, q = cd.quotient
    tree_to_q: dict = {}
    fibres_match = True
    for w in range(len(wo)):
        t = sylvester_tree(_perm_of_word(n, wo.elements[w].word))
        if tree_to_q.setdefault(t, q[w]) != q[w]:
            fibres_match = False
    fibres_match = fibres_match and len(tree_to_q) == Q.n

    key_pos = {k: i for i, k in enumerate(B2.keys)}
    route_two: list[int | None] = [None] * B2.size
    commutes = fibres_match
    words = reduced_words(n) if n <= 4 else (c.rep for c in B2.elements)
    for word in words:
        a = key_pos[inverted_triples(n, word)]
        p = tuple(range(1, n + 2))
        trees = [sylvester_tree(p)]
        for i in word:
            p = _swap(p, i)
            t = sylvester_tree(p)
            if t != trees[-1]:
                trees.append(t)
        image = tuple(tree_to_q.get(t, -1) for t in trees)
        cls = chain_map.codomain.chain_class.get(image, -1)
        if route_two[a] is None:
            route_two[a] = cls
        elif route_two[a] != cls:
            commutes = False
        if cls != route_one[a]:
            commutes = False

    report = check_contraction(B2.order, chain_map.codomain.preorder, route_one)
    fibres: dict[int, list[int]] = {}
    for a, j in enumerate(route_one):
        fibres.setdefault(j, []).append(a)
    non_interval = [sorted(m) for j, m in sorted(fibres.items()) if not _interval(B2.order, m)]
    return {
        "ok": commutes and report.ok,
        "domain_size": B2.size,
        "codomain_size": chain_map.codomain.size,
        "tree_fibres_are_cambrian_classes": fibres_match,
        "commutes": commutes,
        "contraction": report.to_json(),
        "non_interval_fibres": len(non_interval),
        "non_interval_witness": non_interval[0] if non_interval else None,
    }


def _interval(pre: Preorder, members: Sequence[int]) -> bool:
    mask = 0
    for m in members:
        mask |= 1 << m
    lows = [m for m in members if pre.up[m] & mask == mask]
    highs = [m for m in members if pre.down[m] & mask == mask]
    if len(lows) != 1 or len(highs) != 1:
        return False
    return pre.up[lows[0]] & pre.down[highs[0]] == mask


# reference words that are not c-sorting ----------------------------------------------


def rhbo_experiment(rs, wo, reference_word: Sequence[int], chains=None) -> dict:
    """MG poset for an arbitrary reduced word of w0 used as the reference."""
    from .chain_orders import inclusion_order_agrees, mg_poset_fast, reference_from_word

    ref = reference_from_word(rs, wo, reference_word)
    mg = mg_poset_fast(wo, ref, chains)
    return {
        "reference": list(reference_word),
        "classes": mg.size,
        "is_poset": mg.is_poset,
        "minima": len(mg.min_ids),
        "maxima": len(mg.max_ids),
        "inclusion_order_agrees": inclusion_order_agrees(mg),
    }


def rhbo_search(rs, wo, chains=None) -> list[dict]:
    """Run the experiment once per commutation class of reduced words of w0."""
    from .chain_orders import class_key, reference_from_word
    from .weak_order import root_sequence

    if chains is None:
        chains = list(wo.maximal_chains())
    base = reference_from_word(rs, wo, wo.word_of_chain(chains[0]))
    reps: dict[int, tuple[int, ...]] = {}
    for ch in chains:
        reps.setdefault(class_key(base, root_sequence(wo, ch)), ch)
    out = []
    for key in sorted(reps, key=lambda k: (bin(k).count("1"), k)):
        out.append(rhbo_experiment(rs, wo, wo.word_of_chain(reps[key]), chains))
    return out
