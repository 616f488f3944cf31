"""Growing binary trees: the growth process, statistics, and serialization.

A growing binary tree starts as a single anchor, step 0. One growth step
replaces every anchor, in left-to-right order: an anchor either dies and
becomes a dead leaf, or branches and becomes an internal node carrying two
fresh anchors. All anchors created at step s sit at depth s, so the anchors
always occupy exactly the deepest level of the tree. A tree with no anchors
left is inactive and never evolves again.

Bookkeeping identities maintained by the process, with n internal nodes,
m anchors and l dead leaves:

    l = n - m + 1                       (every node has 0 or 2 children)
    m even whenever step >= 1 and m > 0 (anchors are created in pairs)
    h <= n - k + 1 <= 2^{h-1}           (active tree, k = m/2, height h)

Freezing a growing tree turns every anchor into an ordinary leaf and forgets
the step counter; the result is a classical plane binary tree in which every
internal node has exactly two children. Trees are stored as flat node arrays
with children referenced by index; the (left, right) order is significant.

Serialization formats:
  JSON  leaf = {"leaf": true}; internal = {"l": ..., "r": ...}. Growing-tree
        nodes carry "kind" ("internal" | "anchor" | "dead_leaf") instead, and
        the top-level document is {"step": s, "tree": node} so the step
        counter round-trips.
  DOT   internal nodes as filled circles, dead leaves (and frozen leaves) as
        squares, anchors as hollow circles; edge order is left, right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .profiles import Profile


class NodeKind(Enum):
    INTERNAL = "internal"
    ANCHOR = "anchor"
    DEAD_LEAF = "dead_leaf"


class GrowthChoice(Enum):
    DIE = "die"
    BRANCH = "branch"


@dataclass(frozen=True)
class GrowingNode:
    kind: NodeKind
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class GrowingTree:
    """Immutable growing tree: node array, root index, growth-step counter."""

    nodes: tuple[GrowingNode, ...]
    root: int
    step: int

    @property
    def anchor_count(self) -> int:
        return sum(1 for node in self.nodes if node.kind is NodeKind.ANCHOR)

    @property
    def is_active(self) -> bool:
        return any(node.kind is NodeKind.ANCHOR for node in self.nodes)


@dataclass(frozen=True)
class BinaryNode:
    leaf: bool
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class BinaryTree:
    """Immutable plane binary tree; every internal node has two children."""

    nodes: tuple[BinaryNode, ...]
    root: int

    @property
    def leaf_count(self) -> int:
        return sum(1 for node in self.nodes if node.leaf)

    @property
    def internal_count(self) -> int:
        return sum(1 for node in self.nodes if not node.leaf)


@dataclass(frozen=True)
class TreeStats:
    """Counts of a growing tree: internal n, anchors m, dead leaves ell, height h."""

    n: int
    m: int
    ell: int
    h: int


# Leaf nodes carry no per-instance data; sharing them cuts allocation in the
# exhaustive enumerations, which create hundreds of thousands of trees.
_ANCHOR_NODE = GrowingNode(NodeKind.ANCHOR)
_DEAD_NODE = GrowingNode(NodeKind.DEAD_LEAF)


def new_seed() -> GrowingTree:
    """The starting state: a single anchor, zero steps applied."""
    return GrowingTree(nodes=(_ANCHOR_NODE,), root=0, step=0)


def grow_step(t: GrowingTree, choices: list[GrowthChoice] | tuple[GrowthChoice, ...]) -> GrowingTree:
    """Apply one growth step, consuming one choice per anchor, left to right.

    Die turns the anchor into a dead leaf; Branch turns it into an internal
    node with two fresh anchors. The choice list length must equal the
    anchor count and the tree must be active.
    """
    m = t.anchor_count
    if m == 0:
        raise ValueError("no anchors: the tree is inactive and cannot grow")
    if len(choices) != m:
        raise ValueError(f"choice arity: tree has {m} anchors, got {len(choices)} choices")
    new_nodes: list[GrowingNode] = []
    choice_iter = iter(choices)

    def rebuild(i: int) -> int:
        node = t.nodes[i]
        if node.kind is NodeKind.INTERNAL:
            left = rebuild(node.left)
            right = rebuild(node.right)
            new_nodes.append(GrowingNode(NodeKind.INTERNAL, left, right))
        elif node.kind is NodeKind.DEAD_LEAF:
            new_nodes.append(_DEAD_NODE)
        else:
            if next(choice_iter) is GrowthChoice.DIE:
                new_nodes.append(_DEAD_NODE)
            else:
                new_nodes.append(_ANCHOR_NODE)
                left = len(new_nodes) - 1
                new_nodes.append(_ANCHOR_NODE)
                new_nodes.append(GrowingNode(NodeKind.INTERNAL, left, left + 1))
        return len(new_nodes) - 1

    root = rebuild(t.root)
    return GrowingTree(nodes=tuple(new_nodes), root=root, step=t.step + 1)


def grow_history(choices_per_step: list[list[GrowthChoice]]) -> GrowingTree:
    """Replay a whole choice history from the seed."""
    t = new_seed()
    for step_choices in choices_per_step:
        t = grow_step(t, step_choices)
    return t


def stats(t: GrowingTree) -> TreeStats:
    """Node counts and height (edge distance from root to a deepest node)."""
    n = m = ell = 0
    height = 0
    stack = [(t.root, 0)]
    while stack:
        i, depth = stack.pop()
        node = t.nodes[i]
        height = max(height, depth)
        if node.kind is NodeKind.INTERNAL:
            n += 1
            stack.append((node.left, depth + 1))
            stack.append((node.right, depth + 1))
        elif node.kind is NodeKind.ANCHOR:
            m += 1
        else:
            ell += 1
    return TreeStats(n=n, m=m, ell=ell, h=height)


def validate_growing(t: GrowingTree) -> None:
    """Check the structural invariants, raising ValueError with a node index.

    Verified: child indices in range, internal nodes have both children and
    leaves none, every node reachable from the root exactly once, anchors all
    at depth equal to the step counter, and an even anchor count for active
    trees past step 0.
    """
    size = len(t.nodes)
    if not 0 <= t.root < size:
        raise ValueError(f"root index {t.root} out of range")
    if t.step < 0:
        raise ValueError(f"negative step counter {t.step}")
    seen = [False] * size
    anchor_depths = set()
    m = 0
    stack = [(t.root, 0)]
    while stack:
        i, depth = stack.pop()
        if not 0 <= i < size:
            raise ValueError(f"node index {i} out of range")
        if seen[i]:
            raise ValueError(f"node {i}: visited twice, not a tree")
        seen[i] = True
        node = t.nodes[i]
        if node.kind is NodeKind.INTERNAL:
            if node.left is None or node.right is None:
                raise ValueError(f"node {i}: internal node missing a child")
            stack.append((node.left, depth + 1))
            stack.append((node.right, depth + 1))
        else:
            if node.left is not None or node.right is not None:
                raise ValueError(f"node {i}: leaf node with children")
            if node.kind is NodeKind.ANCHOR:
                m += 1
                anchor_depths.add(depth)
    if not all(seen):
        unreachable = seen.index(False)
        raise ValueError(f"node {unreachable}: unreachable from root")
    if anchor_depths and anchor_depths != {t.step}:
        raise ValueError(f"anchors at depths {sorted(anchor_depths)}, expected all at step {t.step}")
    if t.step >= 1 and m % 2 != 0:
        raise ValueError(f"odd anchor count {m} at step {t.step}")


def freeze(t: GrowingTree) -> BinaryTree:
    """Forget the growth state: anchors and dead leaves both become leaves."""
    nodes = tuple(
        BinaryNode(leaf=False, left=node.left, right=node.right)
        if node.kind is NodeKind.INTERNAL
        else BinaryNode(leaf=True)
        for node in t.nodes
    )
    return BinaryTree(nodes=nodes, root=t.root)


def unfreeze(bt: BinaryTree) -> GrowingTree:
    """The unique active growing tree whose frozen shape is bt.

    In an active tree every deepest node is an anchor and every anchor is at
    the deepest level, so the growth state is forced by the shape: deepest
    leaves become anchors, shallower leaves dead ones, and the step counter
    is the height. Inverse of freeze on active trees.
    """
    depths = [0] * len(bt.nodes)
    stack = [(bt.root, 0)]
    height = 0
    while stack:
        i, depth = stack.pop()
        depths[i] = depth
        height = max(height, depth)
        node = bt.nodes[i]
        if not node.leaf:
            stack.append((node.left, depth + 1))
            stack.append((node.right, depth + 1))
    nodes = tuple(
        GrowingNode(NodeKind.INTERNAL, node.left, node.right) if not node.leaf
        else (_ANCHOR_NODE if depths[i] == height else _DEAD_NODE)
        for i, node in enumerate(bt.nodes)
    )
    return GrowingTree(nodes=nodes, root=bt.root, step=height)


def profile(bt: BinaryTree) -> Profile:
    """Leaf counts per depth; the deepest level of any binary tree holds leaves."""
    counts: dict[int, int] = {}
    height = 0
    stack = [(bt.root, 0)]
    while stack:
        i, depth = stack.pop()
        node = bt.nodes[i]
        height = max(height, depth)
        if node.leaf:
            counts[depth] = counts.get(depth, 0) + 1
        else:
            stack.append((node.left, depth + 1))
            stack.append((node.right, depth + 1))
    return Profile(tuple(counts.get(d, 0) for d in range(height + 1)))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _binary_obj(bt: BinaryTree, i: int) -> dict:
    node = bt.nodes[i]
    if node.leaf:
        return {"leaf": True}
    return {"l": _binary_obj(bt, node.left), "r": _binary_obj(bt, node.right)}


def _growing_obj(t: GrowingTree, i: int) -> dict:
    node = t.nodes[i]
    if node.kind is NodeKind.INTERNAL:
        return {"kind": "internal", "l": _growing_obj(t, node.left), "r": _growing_obj(t, node.right)}
    return {"kind": node.kind.value}


def to_json(tree: BinaryTree | GrowingTree) -> str:
    """Compact JSON text; see the module docstring for the schema."""
    if isinstance(tree, GrowingTree):
        doc: dict = {"step": tree.step, "tree": _growing_obj(tree, tree.root)}
    else:
        doc = _binary_obj(tree, tree.root)
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> BinaryTree | GrowingTree:
    """Parse a tree document, validating structure and invariants.

    Binary trees are bare node objects; growing trees are wrapped as
    {"step": s, "tree": node}. Node indices in error messages count nodes in
    document order.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed tree document: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("malformed tree document: top level must be an object")
    if "step" in doc:
        return _growing_from_obj(doc)
    return _binary_from_obj(doc)


def _binary_from_obj(doc: dict) -> BinaryTree:
    nodes: list[BinaryNode] = []
    counter = [0]

    def build(obj: object) -> int:
        index = counter[0]
        counter[0] += 1
        if not isinstance(obj, dict):
            raise ValueError(f"node {index}: expected an object")
        if obj.get("leaf") is True:
            if set(obj) != {"leaf"}:
                raise ValueError(f"node {index}: leaf object with extra keys")
            nodes.append(BinaryNode(leaf=True))
        elif "l" in obj and "r" in obj:
            if set(obj) != {"l", "r"}:
                raise ValueError(f"node {index}: internal object with extra keys")
            left = build(obj["l"])
            right = build(obj["r"])
            nodes.append(BinaryNode(leaf=False, left=left, right=right))
        else:
            raise ValueError(f"node {index}: need either leaf=true or both l and r")
        return len(nodes) - 1

    root = build(doc)
    return BinaryTree(nodes=tuple(nodes), root=root)


def _growing_from_obj(doc: dict) -> GrowingTree:
    step = doc.get("step")
    if not isinstance(step, int) or step < 0:
        raise ValueError("growing tree: step must be a nonnegative integer")
    if "tree" not in doc:
        raise ValueError("growing tree: missing tree field")
    nodes: list[GrowingNode] = []
    counter = [0]
    kinds = {k.value: k for k in NodeKind}

    def build(obj: object) -> int:
        index = counter[0]
        counter[0] += 1
        if not isinstance(obj, dict):
            raise ValueError(f"node {index}: expected an object")
        kind = kinds.get(obj.get("kind"))
        if kind is None:
            raise ValueError(f"node {index}: unknown kind {obj.get('kind')!r}")
        if kind is NodeKind.INTERNAL:
            if "l" not in obj or "r" not in obj:
                raise ValueError(f"node {index}: internal node needs l and r")
            left = build(obj["l"])
            right = build(obj["r"])
            nodes.append(GrowingNode(NodeKind.INTERNAL, left, right))
        else:
            if "l" in obj or "r" in obj:
                raise ValueError(f"node {index}: {kind.value} node cannot have children")
            nodes.append(GrowingNode(kind))
        return len(nodes) - 1

    root = build(doc["tree"])
    tree = GrowingTree(nodes=tuple(nodes), root=root, step=step)
    validate_growing(tree)
    return tree


_DOT_STYLES = {
    NodeKind.INTERNAL: 'shape=circle, style=filled, fillcolor=black, label="", width=0.2',
    NodeKind.ANCHOR: 'shape=circle, label="", width=0.2',
    NodeKind.DEAD_LEAF: 'shape=square, style=filled, fillcolor=black, label="", width=0.18',
}


def to_dot(tree: BinaryTree | GrowingTree) -> str:
    """Graphviz digraph; node shapes encode the kinds (see module docstring)."""
    lines = ["digraph tree {", "  ordering=out;"]
    if isinstance(tree, GrowingTree):
        kinds = [node.kind for node in tree.nodes]
        children = [(node.left, node.right) for node in tree.nodes]
        order = _preorder(children, tree.root)
    else:
        kinds = [NodeKind.DEAD_LEAF if node.leaf else NodeKind.INTERNAL for node in tree.nodes]
        children = [(node.left, node.right) for node in tree.nodes]
        order = _preorder(children, tree.root)
    for i in order:
        lines.append(f"  n{i} [{_DOT_STYLES[kinds[i]]}];")
    for i in order:
        left, right = children[i]
        if left is not None:
            lines.append(f"  n{i} -> n{left};")
            lines.append(f"  n{i} -> n{right};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _preorder(children: list[tuple[int | None, int | None]], root: int) -> list[int]:
    order = []
    stack = [root]
    while stack:
        i = stack.pop()
        order.append(i)
        left, right = children[i]
        if left is not None:
            stack.append(right)
            stack.append(left)
    return order
