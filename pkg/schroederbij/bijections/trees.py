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

__all__ = ['rho', 'rho_inv', 'strip_star', 'path_to_tree', 'tree_to_path', 'check_rho',
           'check_path_tree']

__docformat__ = 'restructuredtext'

from .paths import big_phi, big_phi_inv, _bits
from ..structures.paths import SchroderPath, as_path, enumerate_words, hill_positions
from ..structures.trees import (DiSkTree, PLUS, MINUS, as_tree, embed_star, is_star,
                                enumerate_trees, first_minus_index, tau, _Node, _inorder,
                                _to_nodes, _sharp_nodes)
from ..errors import DomainMismatch, StarMember, EmptyTree, VerificationFailure
from ..helpers import format_digits
from ..report import Report
from itertools import product


def _replace_child(parent, old, new, holder):
    """Put new in the slot of old below parent, or at the root."""
    if parent is None:
        holder[0] = new
        if new is not None:
            new.parent = None
    elif parent.left is old:
        parent.set_left(new)
    else:
        parent.set_right(new)


def rho(t, b, k):
    """rho

    Insert a new ``-`` node at in-order index ``k`` of a tree whose first
    ``-`` sits at index ``j >= k`` and encode the bits ``b`` of length
    ``j - k`` by cutting and pasting the ``+`` nodes after it. The result
    has its first ``-`` at index ``k`` and is not an image of
    :func:`embed_star`.

    Args:
        t (DiSkTree, str): tree with first ``-`` index ``j``.
        b (tuple[int], str): bits of length ``j - k``.
        k (int): first ``-`` index of the image, >= 1.

    Returns:
        s (DiSkTree): image tree.

    """
    t = as_tree(t)
    b = _bits(b)
    j = first_minus_index(t)
    if k < 1 or j < k or len(b) != j - k:
        raise DomainMismatch('rho needs 1 <= k <= j and j - k bits, got j = {:d}, k = {:d} '
                             'and {:d} bits!'.format(j, k, len(b)))
    holder = [_to_nodes(t.shape)]
    new = _Node(MINUS)
    # insert the new node at index k
    if holder[0] is None:
        holder[0] = new
    else:
        nodes = _inorder(holder[0])
        if k <= len(nodes) and nodes[k-1].left is None:
            nodes[k-1].set_left(new)
        else:
            nodes[k-2].set_right(new)
    # move the left path below the first node away from the front
    nodes = _inorder(holder[0])
    first = nodes[0]
    if first.label == PLUS and first.right is None:
        m_node = first
        m = 1
        while m_node.right is None:
            if not m_node.is_left_child():
                raise DomainMismatch('no node with a right child above the first node!')
            m_node = m_node.parent
            m += 1
        if not 2 <= m <= k - 1:
            raise DomainMismatch('left path ends at index {:d}, must be between 2 and '
                                 '{:d}!'.format(m, k - 1))
        r = m_node.left
        r.detach()
        new.set_left(r)
    if 1 not in b:
        return DiSkTree._from_root(holder[0])
    z = b.index(1)
    b_hat = b[z+1:]
    l = len(b_hat)
    nodes = _inorder(holder[0])
    peeled = nodes[k:k + l + 1]
    marked = set(id(x) for x in peeled)

    def first_kept(node):
        while node is not None and id(node) in marked:
            node = node.left
        return node

    for node in nodes:
        if id(node) in marked:
            continue
        if node.left is not None and id(node.left) in marked:
            node.set_left(first_kept(node.left))
    root = holder[0]
    if id(root) in marked:
        holder[0] = first_kept(root)
        holder[0].parent = None
    for x in peeled:
        if x.is_left_child():
            x.detach()
        x.left = None
    subtrees = [DiSkTree._from_root(x) for x in peeled]
    subtrees = [tau(s) if bit else s for s, bit in zip(subtrees, b_hat)] + subtrees[l:]
    top = None
    for s in subtrees:
        node = _to_nodes(s.shape)
        node.set_left(top)
        top = node
    new.set_right(top)
    return DiSkTree._from_root(holder[0])


def rho_inv(s):
    """rho_inv

    Inverse of :func:`rho`.

    Args:
        s (DiSkTree, str): non-empty tree that is not an image of
            :func:`embed_star`.

    Returns:
        (t, b) (tuple): tree and bits with ``rho(t, b, k) = s`` for ``k``
        the first ``-`` index of ``s``.

    """
    s = as_tree(s)
    if s.is_empty:
        raise EmptyTree('rho_inv needs a non-empty tree!')
    if is_star(s):
        raise StarMember('tree {:s} is an image of embed_star!'.format(str(s)))
    k = first_minus_index(s)
    holder = [_to_nodes(s.shape)]
    n_nodes = s.size
    target = _inorder(holder[0])[k-1]
    b_hat = None
    if target.right is not None:
        chain = []
        node = target.right
        while node is not None:
            chain.append(node)
            node = node.left
        chain.reverse()
        l = len(chain) - 1
        b_hat = tuple(1 if c.label == MINUS else 0 for c in chain[:l])
        chain[-1].detach()
        parts = []
        for m, c in enumerate(chain):
            c.detach()
            c.left = None
            part = DiSkTree._from_root(c)
            if m < l and b_hat[m]:
                part = tau(part)
            parts.append(_to_nodes(part.shape))
        p_root = parts[-1]
        for part in reversed(parts[:-1]):
            p_root = _sharp_nodes(part, p_root)
        p_first = _inorder(p_root)[0]
        if target.parent is not None and not target.is_left_child():
            insertion = target.parent
        else:
            insertion = target
        parent = insertion.parent
        _replace_child(parent, insertion, p_root, holder)
        p_first.set_left(insertion)
    nodes = _inorder(holder[0])
    minus = [i for i, node in enumerate(nodes, 1) if node.label == MINUS]
    j = minus[1] - 1 if len(minus) > 1 else n_nodes
    if b_hat is None:
        b = (0,) * (j - k)
    else:
        b = (0,) * (j - k - len(b_hat) - 1) + (1,) + b_hat
    if target.left is not None:
        r = target.left
        r.detach()
        _inorder(holder[0])[0].set_left(r)
    if target.left is not None or target.right is not None:
        raise DomainMismatch('new node must be a leaf before it is removed!')
    parent = target.detach()
    if parent is None:
        holder[0] = None
    return DiSkTree._from_root(holder[0]), b


def strip_star(t):
    """strip_star

    Inverse of :func:`embed_star`: remove the leading ``+`` leaf.

    """
    t = as_tree(t)
    if not is_star(t):
        raise DomainMismatch('tree {:s} is not an image of embed_star!'.format(str(t)))
    root = _to_nodes(t.shape)
    first = _inorder(root)[0]
    if first.detach() is None:
        return DiSkTree()
    return DiSkTree._from_root(root)


def path_to_tree(p):
    """path_to_tree

    Bijection from paths of semi-length ``n`` with ``k`` hills to trees
    with ``n`` nodes and first ``-`` index ``k + 1``.

    """
    word = as_path(p).word
    if word == '':
        return DiSkTree()
    if word.startswith('UD'):
        return embed_star(path_to_tree(word[2:]))
    k = len(hill_positions(word))
    p1, b = big_phi_inv(word)
    return rho(path_to_tree(p1), b, k + 1)


def tree_to_path(t):
    """tree_to_path

    Inverse of :func:`path_to_tree`.

    """
    t = as_tree(t)
    if t.is_empty:
        return SchroderPath('')
    if is_star(t):
        return SchroderPath('UD', check=False) + tree_to_path(strip_star(t))
    t1, b = rho_inv(t)
    return big_phi(tree_to_path(t1), b, first_minus_index(t) - 1)


def _finish(report, raise_on_failure):
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def check_rho(n, raise_on_failure=True, pbar=None):
    """check_rho

    Exhaustively check that the trees with ``n - 1`` nodes and first ``-``
    index ``k`` split disjointly into the images of :func:`embed_star` and
    of :func:`rho`, with :func:`rho_inv` inverting :func:`rho`.

    """
    report = Report('rho n={:d}'.format(n))
    source = {}
    for t in enumerate_trees(n - 1) if n >= 2 else []:
        source.setdefault(first_minus_index(t), []).append(t)
    target = {}
    for t in enumerate_trees(n):
        target.setdefault(first_minus_index(t), set()).add(t)
    for k in range(1, n + 1):
        stars = set(embed_star(t) for t in source.get(k - 1, []))
        images = set()
        count = 0
        failure = None
        for j in range(k, n):
            for t in source.get(j, []):
                for b in product((0, 1), repeat=j - k):
                    s = rho(t, b, k)
                    count += 1
                    if pbar is not None:
                        pbar.update(1)
                    back = rho_inv(s)
                    if failure is None and back != (t, b):
                        failure = 'rho({:s}, {:s}) = {:s} inverts to ({:s}, {:s})'.format(
                            str(t), format_digits(b) or '-', str(s), str(back[0]),
                            format_digits(back[1]) or '-')
                    if failure is None and (first_minus_index(s) != k or is_star(s)):
                        failure = 'rho({:s}, {:s}) = {:s} lands outside the class'.format(
                            str(t), format_digits(b) or '-', str(s))
                    images.add(s)
        report.check('rho k={:d} inverse after map'.format(k), count, failure is None,
                     failure or '')
        report.check('rho k={:d} injective'.format(k), count, len(images) == count)
        report.check('rho k={:d} disjoint from stars'.format(k), len(stars),
                     not (images & stars))
        report.check('rho k={:d} covers the class'.format(k), len(target.get(k, ())),
                     (images | stars) == target.get(k, set()))
        if not report.ok:
            break
    return _finish(report, raise_on_failure)


def check_path_tree(n, raise_on_failure=True, pbar=None):
    """check_path_tree

    Exhaustively check that :func:`path_to_tree` maps the paths of
    semi-length ``n`` bijectively onto the trees with ``n`` nodes, sends
    ``k`` hills to first ``-`` index ``k + 1`` and is inverted by
    :func:`tree_to_path`.

    """
    report = Report('path-tree n={:d}'.format(n))
    images = set()
    failure = None
    count = 0
    for word in enumerate_words(n):
        t = path_to_tree(word)
        count += 1
        if pbar is not None:
            pbar.update(1)
        if failure is None and first_minus_index(t) != len(hill_positions(word)) + 1:
            failure = '{:s} -> {:s} has the wrong first - index'.format(word, str(t))
        if failure is None and tree_to_path(t).word != word:
            failure = '{:s} -> {:s} -> {:s}'.format(word, str(t), tree_to_path(t).word)
        images.add(t)
    target = set(enumerate_trees(n + 1))
    report.check('hills and first - index, inverse', count, failure is None, failure or '')
    report.check('injective', count, len(images) == count)
    report.check('surjective', len(target), images == target)
    return _finish(report, raise_on_failure)
