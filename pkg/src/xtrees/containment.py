"""Order-preserving pattern containment for ordered and cg graphs.

This module is the trusted containment predicate of the package: given a host
and a pattern of the same mode, it decides whether the pattern embeds into the
host by an injective map that preserves the linear order (ordered graphs) or
the clockwise cyclic order (cg graphs), and produces witnesses.

Semantics are non-induced: the host may have extra edges among image
vertices. Pattern vertices of degree 0 still constrain the relative order of
the images. Cyclic containment is orientation-preserving by default;
reflections (order-reversing maps) are searched only when requested, and only
for cg graphs.

The search itself lives in xtrees.kernels (compiled when available); this
module handles budgets, reflection, deduplication and independent validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BudgetError, InputError
from .kernels import order_embeddings
from .order import CgGraph, OrderedGraph, _Graph, reflect

MAX_HOST = 256
MAX_PATTERN = 7

_MODE_NAME = {"ordered": "linear", "cg": "cyclic"}


@dataclass(frozen=True)
class Embedding:
    """A witness of pattern containment.

    ``map`` holds the host image of each pattern vertex: pattern vertex v is
    sent to ``map[v-1]`` (both 1-based). ``mode`` is "linear" or "cyclic";
    ``reflected`` can be true only in cyclic mode and means the map reverses
    the clockwise order.
    """

    mode: str
    map: tuple[int, ...]
    reflected: bool = False

    def apply(self, v: int) -> int:
        return self.map[v - 1]


def _require_pair(
    host: _Graph, pattern: _Graph, mode: Optional[str], allow_reflection: bool
) -> bool:
    """Validate a (host, pattern) query; returns True when the mode is cyclic."""
    if host.mode != pattern.mode:
        raise InputError(
            f"host mode {host.mode!r} does not match pattern mode {pattern.mode!r}"
        )
    if mode is not None and _MODE_NAME[host.mode] != mode:
        raise InputError(
            f"requested mode {mode!r} but graphs are {_MODE_NAME[host.mode]!r}"
        )
    if allow_reflection and host.mode != "cg":
        raise InputError("reflection applies to cyclic containment only")
    if pattern.n > host.n:
        raise InputError(
            f"pattern has {pattern.n} vertices but host only {host.n}"
        )
    if host.n > MAX_HOST:
        raise BudgetError(f"host has {host.n} vertices; limit is {MAX_HOST}")
    if pattern.n > MAX_PATTERN:
        raise BudgetError(
            f"pattern has {pattern.n} vertices; limit is {MAX_PATTERN}"
        )
    return host.mode == "cg"


def _kernel_maps(host: _Graph, pattern: _Graph, cyclic: bool, limit: int):
    adj = host.adjacency_masks()
    pat = [(u - 1, v - 1) for u, v in pattern.edges]
    return order_embeddings(host.n, adj, pattern.n, pat, cyclic, limit)


def iter_embeddings(
    host: _Graph,
    pattern: _Graph,
    *,
    allow_reflection: bool = False,
    mode: Optional[str] = None,
    limit: int = 0,
) -> Iterator[Embedding]:
    """Yield embeddings of ``pattern`` into ``host`` without duplicates.

    Orientation-preserving embeddings come first (lexicographically by image,
    cyclic ones grouped by anchor); with ``allow_reflection`` (cg only),
    order-reversing embeddings follow, flagged ``reflected=True``. ``limit``
    stops after that many embeddings in total (0 = all).
    """
    cyclic = _require_pair(host, pattern, mode, allow_reflection)
    name = _MODE_NAME[host.mode]
    emitted = 0
    for m in _kernel_maps(host, pattern, cyclic, limit):
        yield Embedding(name, tuple(x + 1 for x in m))
        emitted += 1
        if limit and emitted >= limit:
            return
    # Order-reversing maps exist on >= 3 points only for the reflected
    # pattern; on <= 2 points every map is both, so the first pass already
    # produced them all.
    if allow_reflection and pattern.n >= 3:
        p = pattern.n
        mirrored = reflect(pattern)
        rem = limit - emitted if limit else 0
        for m in _kernel_maps(host, mirrored, cyclic, rem):
            image = tuple(m[p - v] + 1 for v in range(1, p + 1))
            yield Embedding(name, image, reflected=True)
            emitted += 1
            if limit and emitted >= limit:
                return


def find_embedding(
    host: _Graph,
    pattern: _Graph,
    *,
    allow_reflection: bool = False,
    mode: Optional[str] = None,
) -> Optional[Embedding]:
    """First embedding of ``pattern`` into ``host``, or None."""
    for emb in iter_embeddings(
        host, pattern, allow_reflection=allow_reflection, mode=mode, limit=1
    ):
        return emb
    return None


def contains(host: _Graph, pattern: _Graph, *, allow_reflection: bool = False) -> bool:
    """Whether ``host`` contains ``pattern`` (order-preservingly)."""
    return find_embedding(host, pattern, allow_reflection=allow_reflection) is not None


def validate_embedding(host: _Graph, pattern: _Graph, emb: Embedding) -> bool:
    """Independently check an Embedding; returns True or raises InputError.

    Deliberately shares no code with the search kernels: order preservation
    and edge preservation are verified from first principles so that search
    bugs cannot hide behind a matching validator.
    """
    if host.mode != pattern.mode:
        raise InputError("host/pattern mode mismatch")
    if emb.mode != _MODE_NAME[host.mode]:
        raise InputError(f"embedding mode {emb.mode!r} does not fit {host.mode!r} graphs")
    m = emb.map
    if len(m) != pattern.n:
        raise InputError(f"map has {len(m)} entries for a {pattern.n}-vertex pattern")
    if len(set(m)) != len(m):
        raise InputError("map is not injective")
    if any(not (1 <= x <= host.n) for x in m):
        raise InputError("map leaves the host vertex range")
    if emb.reflected and emb.mode != "cyclic":
        raise InputError("reflected embeddings are cyclic-only")
    if emb.mode == "linear":
        if any(m[i] >= m[i + 1] for i in range(len(m) - 1)):
            raise InputError("map does not preserve the linear order")
    elif len(m) >= 2:
        seq = list(reversed(m)) if emb.reflected else list(m)
        rel = [(x - seq[0]) % host.n for x in seq]
        if any(rel[i] >= rel[i + 1] for i in range(len(rel) - 1)):
            direction = "reversed" if emb.reflected else "clockwise"
            raise InputError(f"map does not follow the {direction} cyclic order")
    host_edges = host.edge_set
    for u, v in pattern.edges:
        a, b = emb.apply(u), emb.apply(v)
        if (min(a, b), max(a, b)) not in host_edges:
            raise InputError(f"pattern edge {u}{v} maps to the non-edge {a}{b}")
    return True
