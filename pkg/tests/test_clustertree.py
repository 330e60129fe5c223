import json

import pytest

from cycseq import (
    DomainError,
    ResourceCapError,
    build_tree,
    export_tree,
    gamma_max,
    max_branching_level,
    necklace_count,
    predicted_max_branching_level,
    project,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
    tree_to_newick,
)

from conftest import all_necklaces


def leaves(node):
    if not node.children:
        return [node]
    out = []
    for c in node.children:
        out.extend(leaves(c))
    return out


def conservation_ok(node):
    if not node.children:
        return True
    total = sum(c.count for c in node.children)
    return total == node.count and all(conservation_ok(c) for c in node.children)


def test_root_counts_necklaces():
    for n in (3, 5, 7):
        tree = build_tree(n, 2)
        assert tree.root.count == necklace_count(n, 2)
        assert tree.root.p == 0


def test_leaves_are_singletons():
    tree = build_tree(7, 2)
    for leaf in leaves(tree.root):
        assert leaf.count == 1
    assert len(leaves(tree.root)) == necklace_count(7, 2)
    assert conservation_ok(tree.root)


def test_tree_matches_exhaustive_clustering():
    # at every level p the tree nodes are exactly the realized frequency
    # vectors, with member counts equal to the fiber sizes
    n = 7
    tree = build_tree(n, 2)
    necklaces = all_necklaces(n, 2)

    def collect(node, by_level):
        by_level.setdefault(node.p, {})[node.freq] = node.count
        for c in node.children:
            collect(c, by_level)

    by_level = {}
    collect(tree.root, by_level)
    deepest = max(by_level)
    for p in range(0, deepest + 1):
        fibers = {}
        for s in necklaces:
            y = project(s, p)
            fibers[y] = fibers.get(y, 0) + 1
        # nodes whose parent was already a singleton are not refined further,
        # so the tree may omit deep levels of settled branches
        for y, count in by_level[p].items():
            assert fibers[y] == count
        if p <= 1:
            assert by_level[p] == fibers


def test_ultrametric_consistency():
    # two sequences sit in the same node at level p iff gamma_max >= p
    n = 6
    tree = build_tree(n, 2)
    necklaces = all_necklaces(n, 2)

    def members(node):
        return {s for s in necklaces if project(s, node.p) == node.freq}

    def visit(node):
        mem = members(node)
        for a in mem:
            for b in mem:
                if a != b:
                    assert gamma_max(a, b) >= node.p
        for c in node.children:
            visit(c)

    visit(tree.root)


def test_half_tree_n11():
    tree = build_tree(11, 2, half_tree=True)
    assert tree.root.count == 94
    level1 = sorted(c.count for c in tree.root.children)
    assert level1 == [1, 1, 5, 15, 30, 42]
    assert conservation_ok(tree.root)
    assert all(leaf.count == 1 for leaf in leaves(tree.root))
    # deepest splitting cluster: two sequences with composition [8, 3] share
    # all 6-window counts, so branching reaches level 6
    assert max_branching_level(tree) == 6


def test_predicted_branching_level():
    # the floor((n-3)/2) + 1 estimate matches the observed branching depth
    # for n = 7 but undercounts by one from n = 11 on: the final two-way
    # split inside the [n-3, 3] cluster survives one level deeper
    assert predicted_max_branching_level(7) == 3
    assert predicted_max_branching_level(11) == 5
    assert predicted_max_branching_level(13) == 6
    observed = {}
    for n in (7, 11, 13):
        tree = build_tree(n, 2, half_tree=True)
        observed[n] = max_branching_level(tree)
    assert observed == {7: 3, 11: 6, 13: 7}


def test_max_p_truncates():
    tree = build_tree(8, 2, max_p=2)
    def deepest(node):
        if not node.children:
            return node.p
        return max(deepest(c) for c in node.children)
    assert deepest(tree.root) == 2


def test_caps_and_domain_errors():
    with pytest.raises(ResourceCapError):
        build_tree(17, 2)
    with pytest.raises(ResourceCapError):
        build_tree(10, 3)
    with pytest.raises(DomainError):
        build_tree(6, 3, half_tree=True)
    build_tree(18, 2, max_n=18, max_p=1)  # explicit override


def test_json_round_trip():
    tree = build_tree(6, 2)
    text = tree_to_json(tree)
    back = tree_from_json(text)
    assert back.n == 6 and back.l == 2
    assert tree_to_json(back) == text
    # counts serialize as strings so arbitrarily large values survive JSON
    obj = json.loads(text)
    assert isinstance(obj["root"]["count"], str)


def test_dot_and_newick():
    tree = build_tree(5, 2)
    dot = tree_to_dot(tree)
    assert dot.startswith("digraph")
    assert 'label="8"' in dot  # the root holds all 8 necklaces
    newick = tree_to_newick(tree)
    assert newick.endswith(";")
    assert newick.count("(") == newick.count(")")
    assert export_tree(tree, "newick") == newick
    with pytest.raises(DomainError):
        export_tree(tree, "svg")
