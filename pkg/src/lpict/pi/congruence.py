"""Structural congruence, decided by canonicalization.

A term is normalized into prenex shape: restrictions hoisted to the front of
each parallel level (scope extrusion), nil components dropped, parallel
compositions flattened, and any component that duplicates the body of a
sibling replication absorbed back into it (the unfolding law read
right-to-left). Canonical comparison keys are alpha-invariant (bound names
become binder indices) and minimize over permutations of each level's
binders, so congruent terms get equal keys.

`standard_form` rebuilds a concrete term from the normalized structure with
sorted components and canonically renamed binders.
"""

from __future__ import annotations

import itertools

from .terms import (
    NIL,
    Bang,
    Nil,
    Par,
    Process,
    Receive,
    Restrict,
    Send,
    Sum,
    Tau,
    all_names,
    free_names,
    fresh_name,
    substitute,
)

_PERM_CAP = 6  # brute-force binder permutations per level up to this many


def level_parts(p: Process, keep_nil: bool = False) -> tuple[tuple[str, ...], tuple[Process, ...]]:
    """Split a term into its restriction prefix and flattened parallel components."""
    binders = []
    while isinstance(p, Restrict):
        binders.append(p.name)
        p = p.body
    comps: list[Process] = []
    _flatten(p, comps, keep_nil)
    return tuple(binders), tuple(comps)


def _flatten(p: Process, out: list[Process], keep_nil: bool) -> None:
    if isinstance(p, Par):
        _flatten(p.left, out, keep_nil)
        _flatten(p.right, out, keep_nil)
    elif isinstance(p, Nil):
        if keep_nil:
            out.append(p)
    else:
        out.append(p)


def assemble(binders, comps) -> Process:
    body: Process = NIL
    comps = tuple(comps)
    if comps:
        body = comps[0]
        for c in comps[1:]:
            body = Par(body, c)
    for b in reversed(tuple(binders)):
        body = Restrict(b, body)
    return body


# ---------------------------------------------------------------------------
# Canonical keys


def _name_key(n: str, env: dict[str, int]):
    if n in env:
        return ("b", env[n])
    return ("f", n)


def _level_key(p: Process, env: dict[str, int], depth: int):
    binders, comps = level_parts(p)
    fn = set().union(*(free_names(c) for c in comps)) if comps else set()
    binders = tuple(b for b in binders if b in fn)
    k = len(binders)
    if k == 0:
        return ("lvl", 0, tuple(sorted(_comp_key(c, env, depth) for c in comps)))
    best = None
    perms = (
        itertools.permutations(range(k))
        if k <= _PERM_CAP
        else [tuple(range(k))]  # beyond the cap, keep declaration order
    )
    for perm in perms:
        env2 = dict(env)
        for i, b in enumerate(binders):
            env2[b] = depth + perm[i]
        cand = ("lvl", k, tuple(sorted(_comp_key(c, env2, depth + k) for c in comps)))
        if best is None or cand < best:
            best = cand
    return best


def _comp_key(c: Process, env: dict[str, int], depth: int):
    if isinstance(c, Sum):
        return (0, tuple(sorted(_branch_key(pi, cont, env, depth) for pi, cont in c.branches)))
    if isinstance(c, Bang):
        return (1, _level_key(c.body, env, depth))
    raise TypeError(f"unnormalized component: {c!r}")


def _branch_key(pi, cont: Process, env: dict[str, int], depth: int):
    if isinstance(pi, Tau):
        return (("t",), _level_key(cont, env, depth))
    if isinstance(pi, Send):
        pk = ("s", _name_key(pi.channel, env), tuple(_name_key(a, env) for a in pi.args))
        return (pk, _level_key(cont, env, depth))
    env2 = dict(env)
    for i, prm in enumerate(pi.params):
        env2[prm] = depth + i
    pk = ("r", _name_key(pi.channel, env), len(pi.params))
    return (pk, _level_key(cont, env2, depth + len(pi.params)))


# ---------------------------------------------------------------------------
# Normalization


def normalize(p: Process) -> Process:
    """Prenex shape with nils dropped, levels flattened, and bang bodies absorbed."""
    used = set(all_names(p))
    return _norm_term(p, used)


def _norm_term(p: Process, used: set[str]) -> Process:
    binders, comps = _prenex(p, used)
    binders, comps = _finalize_level(binders, comps)
    return assemble(binders, comps)


def _prenex(p: Process, used: set[str]) -> tuple[list[str], list[Process]]:
    if isinstance(p, Nil):
        return [], []
    if isinstance(p, Sum):
        branches = tuple((pi, _norm_term(cont, used)) for pi, cont in p.branches)
        return [], [Sum(branches)]
    if isinstance(p, Bang):
        return [], [Bang(_norm_term(p.body, used))]
    if isinstance(p, Par):
        lb, lc = _prenex(p.left, used)
        rb, rc = _prenex(p.right, used)
        return lb + rb, lc + rc
    if isinstance(p, Restrict):
        bb, cc = _prenex(p.body, used)
        if not any(p.name in free_names(c) for c in cc):
            return bb, cc
        nx = fresh_name(p.name, used)
        used.add(nx)
        if nx != p.name:
            cc = [substitute(c, {p.name: nx}) for c in cc]
        return [nx] + bb, cc
    raise TypeError(f"not a process term: {p!r}")


def _finalize_level(binders: list[str], comps: list[Process]) -> tuple[list[str], list[Process]]:
    binders, comps = _drop_unused(binders, comps)
    while True:
        reduced = _absorb_once(binders, comps)
        if reduced is None:
            return binders, comps
        binders, comps = _drop_unused(*reduced)


def _drop_unused(binders, comps):
    fn = set().union(*(free_names(c) for c in comps)) if comps else set()
    return [b for b in binders if b in fn], list(comps)


def _absorb_once(binders: list[str], comps: list[Process]):
    """Remove one replication copy: new B' (!Q | Q') == !Q when Q' is Q with
    its own restrictions extruded as B'. Returns the reduced level or None."""
    env0 = {b: i for i, b in enumerate(binders)}
    depth = len(binders)
    for gi, g in enumerate(comps):
        if not isinstance(g, Bang):
            continue
        gb, gc = level_parts(g.body)
        if not gc:
            continue
        others = [(j, c) for j, c in enumerate(comps) if j != gi]
        if len(gb) > len(binders) or len(gc) > len(others):
            continue
        for chosen in itertools.permutations(range(len(binders)), len(gb)):
            env_t = dict(env0)
            for i, name in enumerate(gb):
                env_t[name] = chosen[i]
            targets = [_comp_key(c, env_t, depth) for c in gc]
            available: dict = {}
            for j, c in others:
                available.setdefault(_comp_key(c, env0, depth), []).append(j)
            removed: list[int] = []
            ok = True
            for t in targets:
                slots = available.get(t)
                if not slots:
                    ok = False
                    break
                removed.append(slots.pop())
            if not ok:
                continue
            prime = {binders[i] for i in chosen}
            keep = [c for j, c in enumerate(comps) if j not in removed]
            if any(prime & free_names(c) for c in keep):
                continue
            new_binders = [b for b in binders if b not in prime]
            return new_binders, keep
    return None


# ---------------------------------------------------------------------------
# Public operations


def structurally_congruent(p: Process, q: Process) -> bool:
    """Decide p == q under alpha-conversion, the parallel/sum monoid laws,
    scope extrusion, and replication unfolding."""
    return _level_key(normalize(p), {}, 0) == _level_key(normalize(q), {}, 0)


def standard_form(p: Process) -> Process:
    """A congruent term shaped new a1..an (M1 | .. | Mm | !Q1 | .. | !Qn),
    with sorted components and canonically renamed binders."""
    built = _build(normalize(p), {}, 0)
    return _rename_canonical(built, free_names(p))


def _build(p: Process, env: dict[str, int], depth: int) -> Process:
    binders, comps = level_parts(p)
    fn = set().union(*(free_names(c) for c in comps)) if comps else set()
    binders = tuple(b for b in binders if b in fn)
    k = len(binders)
    best_perm = tuple(range(k))
    if 0 < k <= _PERM_CAP:
        best = None
        for perm in itertools.permutations(range(k)):
            env2 = dict(env)
            for i, b in enumerate(binders):
                env2[b] = depth + perm[i]
            cand = tuple(sorted(_comp_key(c, env2, depth + k) for c in comps))
            if best is None or cand < best:
                best, best_perm = cand, perm
    env2 = dict(env)
    for i, b in enumerate(binders):
        env2[b] = depth + best_perm[i]
    ordered_binders = [b for _, b in sorted((env2[b], b) for b in binders)]
    items = sorted(((_comp_key(c, env2, depth + k), c) for c in comps), key=lambda kv: kv[0])
    rebuilt = [_build_comp(c, env2, depth + k) for _, c in items]
    return assemble(ordered_binders, rebuilt)


def _build_comp(c: Process, env: dict[str, int], depth: int) -> Process:
    if isinstance(c, Bang):
        return Bang(_build(c.body, env, depth))
    branches = sorted(c.branches, key=lambda br: _branch_key(br[0], br[1], env, depth))
    out = []
    for pi, cont in branches:
        if isinstance(pi, Receive) and pi.params:
            env2 = dict(env)
            for i, prm in enumerate(pi.params):
                env2[prm] = depth + i
            out.append((pi, _build(cont, env2, depth + len(pi.params))))
        else:
            out.append((pi, _build(cont, env, depth)))
    return Sum(tuple(out))


def _rename_canonical(p: Process, avoid) -> Process:
    avoid = set(avoid)
    counter = itertools.count()

    def gen() -> str:
        while True:
            name = f"v{next(counter)}"
            if name not in avoid:
                return name

    def walk(t: Process, env: dict[str, str]) -> Process:
        if isinstance(t, Nil):
            return t
        if isinstance(t, Sum):
            out = []
            for pi, cont in t.branches:
                if isinstance(pi, Tau):
                    out.append((pi, walk(cont, env)))
                elif isinstance(pi, Send):
                    out.append(
                        (
                            Send(env.get(pi.channel, pi.channel), tuple(env.get(a, a) for a in pi.args)),
                            walk(cont, env),
                        )
                    )
                else:
                    fresh = [gen() for _ in pi.params]
                    env2 = dict(env)
                    env2.update(zip(pi.params, fresh))
                    out.append(
                        (Receive(env.get(pi.channel, pi.channel), tuple(fresh)), walk(cont, env2))
                    )
            return Sum(tuple(out))
        if isinstance(t, Par):
            return Par(walk(t.left, env), walk(t.right, env))
        if isinstance(t, Restrict):
            nx = gen()
            env2 = dict(env)
            env2[t.name] = nx
            return Restrict(nx, walk(t.body, env2))
        if isinstance(t, Bang):
            return Bang(walk(t.body, env))
        raise TypeError(f"not a process term: {t!r}")

    return walk(p, {})


def is_standard_form(p: Process) -> bool:
    """Shape check: restrictions outermost over a parallel of non-empty sums
    and replications whose bodies are recursively in standard form."""
    if isinstance(p, Nil):
        return True
    binders, comps = level_parts(p, keep_nil=True)
    if len(set(binders)) != len(binders) or not comps:
        return False
    for c in comps:
        if isinstance(c, Sum):
            if not all(is_standard_form(cont) for _, cont in c.branches):
                return False
        elif isinstance(c, Bang):
            if not is_standard_form(c.body):
                return False
        else:
            return False
    return True
