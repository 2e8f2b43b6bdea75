#!/usr/bin/env python
# -*- coding: utf-8 -*-

# The MIT License (MIT)
# Copyright (c) 2026 The schroederbij developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE
# OR OTHER DEALINGS IN THE SOFTWARE.

__all__ = ['PLUS', 'MINUS', 'DiSkTree', 'as_tree', 'parse_tree', 'render_tree',
           'label_sequence', 'first_minus_index', 'minus_positions', 'class_index', 'attach_left',
           'attach_right', 'sharp', 'tau', 'enumerate_trees', 'class_counts',
           'embed_star', 'is_star']

__docformat__ = 'restructuredtext'

from ..errors import (TreeSyntaxError, RightChainViolation, LeftChildOccupied,
                      RightChildOccupied, LabelClash, IndexOutOfRange, NotRightBranching,
                      EmptyTree)
from functools import lru_cache
from tabulate import tabulate
import re

PLUS = '+'
MINUS = '-'

_TOKEN = re.compile(r'\s*(\(|\)|\.|\+|-|[^\s()]+)')


def _flip(label):
    return MINUS if label == PLUS else PLUS


class _Node:
    """Mutable node used while a tree is rebuilt."""

    __slots__ = ('label', 'left', 'right', 'parent')

    def __init__(self, label):
        self.label = label
        self.left = None
        self.right = None
        self.parent = None

    def set_left(self, node):
        self.left = node
        if node is not None:
            node.parent = self

    def set_right(self, node):
        self.right = node
        if node is not None:
            node.parent = self

    def detach(self):
        """Cut the edge to the parent."""
        parent = self.parent
        if parent is not None:
            if parent.left is self:
                parent.left = None
            else:
                parent.right = None
        self.parent = None
        return parent

    def is_left_child(self):
        return self.parent is not None and self.parent.left is self


def _to_nodes(shape):
    if shape is None:
        return None
    label, left, right = shape
    node = _Node(label)
    node.set_left(_to_nodes(left))
    node.set_right(_to_nodes(right))
    return node


def _from_nodes(node):
    if node is None:
        return None
    return (node.label, _from_nodes(node.left), _from_nodes(node.right))


def _inorder(node):
    out = []
    stack = []
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        out.append(node)
        node = node.right
    return out


def _render(shape):
    if shape is None:
        return '.'
    label, left, right = shape
    return '({:s} {:s} {:s})'.format(label, _render(left), _render(right))


def _labels(shape):
    if shape is None:
        return ()
    label, left, right = shape
    return _labels(left) + (label,) + _labels(right)


def _size(shape):
    if shape is None:
        return 0
    return 1 + _size(shape[1]) + _size(shape[2])


def _check_right_chains(shape):
    if shape is None:
        return
    label, left, right = shape
    if right is not None and right[0] == label:
        raise RightChainViolation('node {:s} must not have a right child with the same '
                                  'label: {:s}!'.format(label, _render(shape)))
    _check_right_chains(left)
    _check_right_chains(right)


class DiSkTree:
    """DiSkTree

    Immutable binary tree whose nodes are labeled ``+`` or ``-`` such that
    no node has the same label as its right child. Nodes are indexed
    ``1..m`` in in-order.

    Args:
        shape (tuple, optional): nested ``(label, left, right)`` tuples,
            ``None`` for the empty tree.

    Keyword Args:
        check (boolean): validate labels and right chains, defaults to True.

    Attributes:
        shape (tuple): nested ``(label, left, right)`` tuples.
        size (int): number of nodes.

    """

    __slots__ = ('_shape', '_text')

    def __init__(self, shape=None, **kwargs):
        if kwargs.get('check', True):
            self._validate(shape)
            _check_right_chains(shape)
        self._shape = shape
        self._text = None

    @staticmethod
    def _validate(shape):
        if shape is None:
            return
        if not isinstance(shape, tuple) or len(shape) != 3 or shape[0] not in (PLUS, MINUS):
            raise TypeError('tree shape must be None or a (label, left, right) tuple!')
        DiSkTree._validate(shape[1])
        DiSkTree._validate(shape[2])

    @classmethod
    def _from_root(cls, root):
        tree = cls(_from_nodes(root), check=False)
        _check_right_chains(tree._shape)
        return tree

    @classmethod
    def leaf(cls, label):
        if label not in (PLUS, MINUS):
            raise ValueError('label must be + or -!')
        return cls((label, None, None), check=False)

    def __str__(self):
        if self._text is None:
            self._text = _render(self._shape)
        return self._text

    def __repr__(self):
        return 'DiSkTree({!r})'.format(str(self))

    def __eq__(self, other):
        if not isinstance(other, DiSkTree):
            return NotImplemented
        return self._shape == other._shape

    def __hash__(self):
        return hash(self._shape)

    def __len__(self):
        return _size(self._shape)

    @property
    def shape(self):
        return self._shape

    @property
    def size(self):
        return _size(self._shape)

    @property
    def is_empty(self):
        return self._shape is None

    def describe(self):
        """describe

        Table of the nodes in in-order with their children.

        """
        nodes = _inorder(_to_nodes(self._shape))
        index = {id(node): i for i, node in enumerate(nodes, 1)}
        output = [[i, node.label,
                   index[id(node.left)] if node.left is not None else '',
                   index[id(node.right)] if node.right is not None else '']
                  for i, node in enumerate(nodes, 1)]
        return tabulate(output, headers=['i', 'label', 'left', 'right'], tablefmt='rst')


def as_tree(t):
    if isinstance(t, DiSkTree):
        return t
    if isinstance(t, str):
        return parse_tree(t)
    raise TypeError('tree must be a DiSkTree or a str!')


def parse_tree(text):
    """parse_tree

    Parse ``tree := "." | "(" label " " tree " " tree ")"`` with labels
    ``+`` and ``-``.

    Args:
        text (str): tree text.

    Returns:
        tree (DiSkTree): parsed tree.

    """
    if not isinstance(text, str):
        raise TypeError('tree text must be a str!')
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise TreeSyntaxError('unexpected character {!r} in tree text!'.format(text[pos]))
        tokens.append(match.group(1))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse(i):
        if i >= len(tokens):
            raise TreeSyntaxError('unexpected end of tree text!')
        if tokens[i] == '.':
            return None, i + 1
        if tokens[i] != '(':
            raise TreeSyntaxError('expected "(" or ".", found {!r}!'.format(tokens[i]))
        if i + 1 >= len(tokens) or tokens[i+1] not in (PLUS, MINUS):
            raise TreeSyntaxError('node label must be + or -!')
        label = tokens[i+1]
        left, i = parse(i + 2)
        right, i = parse(i)
        if i >= len(tokens) or tokens[i] != ')':
            raise TreeSyntaxError('expected ")" after the children of a node!')
        return (label, left, right), i + 1

    shape, end = parse(0)
    if end != len(tokens):
        raise TreeSyntaxError('trailing text after tree: {!r}!'.format(' '.join(tokens[end:])))
    return DiSkTree(shape)


def render_tree(t):
    return str(as_tree(t))


def label_sequence(t):
    """label_sequence

    Labels in in-order: left subtree, node, right subtree.

    """
    return _labels(as_tree(t).shape)


def first_minus_index(t):
    """first_minus_index

    In-order index of the first ``-`` node, or ``m+1`` for a tree with
    ``m`` nodes and no ``-`` node. The empty tree has index 1.

    """
    labels = label_sequence(t)
    for i, label in enumerate(labels, 1):
        if label == MINUS:
            return i
    return len(labels) + 1


def minus_positions(t):
    return frozenset(i for i, label in enumerate(label_sequence(t), 1) if label == MINUS)


def class_index(t):
    """class_index

    Class ``(n, k)`` of a tree: ``n - 1`` nodes and first ``-`` at
    index ``k``.

    """
    t = as_tree(t)
    return t.size + 1, first_minus_index(t)


def _node_at(nodes, i):
    if not 1 <= i <= len(nodes):
        raise IndexOutOfRange('node index {:d} must be between 1 and {:d}!'.format(
            i, len(nodes)))
    return nodes[i-1]


def attach_left(s, t, i):
    """attach_left

    Make the root of ``s`` the left child of ``t(i)``.

    Args:
        s (DiSkTree): non-empty tree to attach.
        t (DiSkTree): host tree.
        i (int): in-order index in ``t``.

    Returns:
        tree (DiSkTree): combined tree.

    """
    s, t = as_tree(s), as_tree(t)
    if s.is_empty:
        raise EmptyTree('attached tree must not be empty!')
    root = _to_nodes(t.shape)
    target = _node_at(_inorder(root), i)
    if target.left is not None:
        raise LeftChildOccupied('node {:d} already has a left child!'.format(i))
    target.set_left(_to_nodes(s.shape))
    return DiSkTree._from_root(root)


def attach_right(t, i, s):
    """attach_right

    Make the root of ``s`` the right child of ``t(i)``. For the empty ``t``
    and ``i = 0`` the result is ``s``.

    Args:
        t (DiSkTree): host tree.
        i (int): in-order index in ``t``.
        s (DiSkTree): non-empty tree to attach.

    Returns:
        tree (DiSkTree): combined tree.

    """
    s, t = as_tree(s), as_tree(t)
    if s.is_empty:
        raise EmptyTree('attached tree must not be empty!')
    if t.is_empty and i == 0:
        return s
    root = _to_nodes(t.shape)
    target = _node_at(_inorder(root), i)
    if target.right is not None:
        raise RightChildOccupied('node {:d} already has a right child!'.format(i))
    if target.label == s.shape[0]:
        raise LabelClash('right child must not have the label {:s} of node {:d}!'.format(
            target.label, i))
    target.set_right(_to_nodes(s.shape))
    return DiSkTree._from_root(root)


def _sharp_nodes(s, t):
    """Combine node trees so that s(1) and t(1) become the first two nodes.

    Only s has to be right-branching here, nested products keep t general.
    """
    if s is None or t is None:
        raise NotRightBranching('operands must not be empty!')
    if s.left is not None:
        raise NotRightBranching('first operand must not have a left child at its root!')
    first, second = s, _inorder(t)[0]
    if s.right is None:
        second.set_left(s)
        root = t
    else:
        host = _inorder(s)[1]
        host.set_left(t)
        root = s
    nodes = _inorder(root)
    if nodes[0] is not first or nodes[1] is not second:
        raise NotRightBranching('first nodes of the operands must lead the result!')
    return root


def sharp(s, t):
    """sharp

    ``s/t[1]`` if ``s`` is a single node, otherwise ``t/s[2]``. Both trees
    must be right-branching.

    """
    s, t = as_tree(s), as_tree(t)
    if s.is_empty or t.is_empty:
        raise NotRightBranching('operands of sharp must not be empty!')
    if s.shape[1] is not None or t.shape[1] is not None:
        raise NotRightBranching('operands of sharp must be right-branching!')
    return DiSkTree._from_root(_sharp_nodes(_to_nodes(s.shape), _to_nodes(t.shape)))


def tau(t):
    """tau

    Flip the labels of the root and of every node on its right chain.

    """
    t = as_tree(t)
    if t.is_empty:
        raise EmptyTree('tau needs a non-empty tree!')

    def flip(shape):
        if shape is None:
            return None
        label, left, right = shape
        return (_flip(label), left, flip(right))

    return DiSkTree(flip(t.shape), check=False)


@lru_cache(maxsize=None)
def _shapes(m, forbidden):
    """All trees with m nodes whose root label differs from forbidden."""
    if m == 0:
        return (None,)
    out = []
    for label in (PLUS, MINUS):
        if label == forbidden:
            continue
        for a in range(m):
            for left in _shapes(a, None):
                for right in _shapes(m - 1 - a, label):
                    out.append((label, left, right))
    return tuple(out)


def enumerate_trees(n):
    """enumerate_trees

    All trees with ``n - 1`` nodes, each once.

    Args:
        n (int): size class, >= 1.

    Returns:
        trees (generator[DiSkTree]): trees.

    """
    if n < 1:
        raise ValueError('tree size class must be >= 1!')
    for shape in _shapes(n - 1, None):
        yield DiSkTree(shape, check=False)


def class_counts(n):
    """class_counts

    Number of trees with ``n - 1`` nodes per first ``-`` index ``k``.

    Returns:
        counts (dict[int, int]): counts for ``k = 1..n``.

    """
    counts = {k: 0 for k in range(1, n + 1)}
    for t in enumerate_trees(n):
        counts[first_minus_index(t)] += 1
    return counts


def embed_star(s):
    """embed_star

    Attach a new ``+`` node as the left child of ``s(1)``. The empty tree
    becomes a single ``+``.

    """
    s = as_tree(s)
    if s.is_empty:
        return DiSkTree.leaf(PLUS)
    return attach_left(DiSkTree.leaf(PLUS), s, 1)


def is_star(t):
    """is_star

    True if the first node is a ``+`` leaf, i.e. the tree is an image of
    :func:`embed_star`.

    """
    t = as_tree(t)
    if t.is_empty:
        return False
    first = _inorder(_to_nodes(t.shape))[0]
    return first.label == PLUS and first.right is None
