"""Three independent routes to the Mullineux involution, and its multisegment lift.

* mullineux_crystal: recursion through the splitting embedding and the
  crystal isomorphisms (split, lift to a very dominant charge, recurse on
  the two components, descend, merge).
* xu: the truncated-rim peeling algorithm (strip the truncated e-rim,
  recurse, put back a column).
* kleshchev_oracle: the branching-rule recursion (peel a good removable
  node of residue i, recurse, add a good addable node of residue -i).

ak_mullineux transports the componentwise involution between charged
multipartition sets along the crystal isomorphisms, and im_sharp conjugates
it through the multisegment labelling, giving the involution on aperiodic
multisegments.
"""

from functools import lru_cache

from .charges import (
    check_charge,
    same_orbit,
    sharp_very_dominant,
    transpose_charge,
    very_dominant_representative,
)
from .core import (
    check_multipartition,
    check_partition,
    conjugate,
    is_e_regular,
    is_strict_e_core,
    multirank,
    part,
    rank,
)
from .crystal import membership, psi
from .errors import InputError, InternalError, NoPathError, NotAdmissibleError
from .multisegments import canonical, check_multisegment, chi, chi_inverse, is_aperiodic
from .theta import theta_inverse, theta_l2


# ---------------------------------------------------------------------------
# Rim truncation route
# ---------------------------------------------------------------------------

def e_rim(lam, e):
    """Nodes of the e-rim in traversal order.

    The rim is walked rightmost-first within each row from the top row down;
    after every e-th node the walk jumps to the next row, skipping the rest
    of the current one.
    """
    lam = check_partition(lam)
    if not lam:
        raise InputError("the e-rim of the empty partition is undefined")
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    nodes = []
    count = 0
    depth = len(lam)
    for i in range(1, depth + 1):
        lo = max(part(lam, i + 1), 1)
        for j in range(lam[i - 1], lo - 1, -1):
            nodes.append((i, j))
            count += 1
            if count % e == 0:
                break
    return tuple(nodes)


def truncated_e_rim(lam, e):
    """Nodes of the truncated e-rim, in e-rim traversal order.

    These are the e-rim nodes whose left neighbour is also in the e-rim,
    plus, when the e-rim size is not a multiple of e, the leftmost e-rim
    node of the last row.
    """
    rim = e_rim(lam, e)
    members = set(rim)
    chosen = [(i, j) for (i, j) in rim if (i, j - 1) in members]
    if len(rim) % e != 0:
        last_row = len(check_partition(lam))
        extra = [(i, j) for (i, j) in rim if i == last_row and (i, j - 1) not in members]
        if len(extra) != 1:
            raise InternalError(f"expected one seed node in row {last_row}, got {extra}")
        chosen.append(extra[0])
    order = {node: pos for pos, node in enumerate(rim)}
    return tuple(sorted(chosen, key=order.get))


def xu_strip(lam, e):
    """Remove the truncated e-rim; returns (smaller partition, nodes removed)."""
    lam = check_partition(lam)
    removed = truncated_e_rim(lam, e)
    counts = {}
    for i, _ in removed:
        counts[i] = counts.get(i, 0) + 1
    out = [p - counts.get(i, 0) for i, p in enumerate(lam, start=1)]
    if any(x < y for x, y in zip(out, out[1:])) or (out and out[-1] < 0):
        raise InternalError(f"stripping the truncated e-rim broke the shape: {out}")
    return tuple(p for p in out if p > 0), len(removed)


def xu(lam, e):
    """Mullineux image by repeated truncated-rim stripping."""
    lam = check_partition(lam)
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    if not is_e_regular(lam, e):
        raise InputError(f"xu needs an e-regular partition, got {lam} with e={e}")
    return _xu(lam, e)


@lru_cache(maxsize=None)
def _xu(lam, e):
    if not lam:
        return ()
    smaller, removed = xu_strip(lam, e)
    base = _xu(smaller, e)
    width = max(len(base), removed)
    return tuple(part(base, i) + (1 if i <= removed else 0) for i in range(1, width + 1))


def xu_trace(lam, e):
    """(image, steps) where steps record each strip: (label, charge, state)."""
    lam = check_partition(lam)
    steps = []
    chain = []
    cur = lam
    while cur:
        smaller, removed = xu_strip(cur, e)
        steps.append((f"strip {removed} nodes", (0,), (smaller,)))
        chain.append(removed)
        cur = smaller
    img = ()
    for removed in reversed(chain):
        width = max(len(img), removed)
        img = tuple(part(img, i) + (1 if i <= removed else 0) for i in range(1, width + 1))
        steps.append((f"add column of length {removed}", (0,), (img,)))
    return img, steps


# ---------------------------------------------------------------------------
# Branching-rule route
# ---------------------------------------------------------------------------

def _signature(lam, e, i):
    """Addable/removable i-nodes top-to-bottom: list of (kind, row)."""
    entries = []
    depth = len(lam)
    for r in range(1, depth + 2):
        cur = part(lam, r)
        if (r == 1 or cur < part(lam, r - 1)) and (cur + 1 - r) % e == i:
            entries.append(("A", r))
        if r <= depth and cur > part(lam, r + 1) and (cur - r) % e == i:
            entries.append(("R", r))
    return entries


def _reduced_signature(lam, e, i, convention):
    """Cancel adjacent pairs: "A then R" under C1, "R then A" under C2."""
    if convention not in ("C1", "C2"):
        raise InputError(f"convention must be C1 or C2, got {convention!r}")
    first, second = ("A", "R") if convention == "C1" else ("R", "A")
    stack = []
    for entry in _signature(lam, e, i):
        if entry[0] == second and stack and stack[-1][0] == first:
            stack.pop()
        else:
            stack.append(entry)
    return stack


def good_removable_node(lam, e, i, convention="C1"):
    """Good removable i-node as (row, column), or None.

    Under C1 it is the lowest surviving removable node, under C2 the highest.
    """
    lam = check_partition(lam)
    rows = [r for kind, r in _reduced_signature(lam, e, i, convention) if kind == "R"]
    if not rows:
        return None
    r = rows[-1] if convention == "C1" else rows[0]
    return (r, lam[r - 1])


def good_addable_node(lam, e, i, convention="C1"):
    """Good addable i-node as (row, column), or None.

    Under C1 it is the highest surviving addable node, under C2 the lowest.
    """
    lam = check_partition(lam)
    rows = [r for kind, r in _reduced_signature(lam, e, i, convention) if kind == "A"]
    if not rows:
        return None
    r = rows[0] if convention == "C1" else rows[-1]
    return (r, part(lam, r) + 1)


def kleshchev_oracle(lam, e, convention="C1"):
    """Mullineux image by the branching recursion.

    Peel the good removable node of the smallest residue i carrying one,
    recurse, then add the good addable node of residue -i mod e.
    """
    lam = check_partition(lam)
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    if not is_e_regular(lam, e):
        raise InputError(f"kleshchev_oracle needs an e-regular partition, got {lam}")
    return _kleshchev(lam, e, convention)


@lru_cache(maxsize=None)
def _kleshchev(lam, e, convention):
    if not lam:
        return ()
    for i in range(e):
        node = good_removable_node(lam, e, i, convention)
        if node is not None:
            break
    else:
        raise InternalError(f"{lam} has no good removable node mod {e}")
    row, _ = node
    peeled = list(lam)
    peeled[row - 1] -= 1
    sub = _kleshchev(tuple(p for p in peeled if p > 0), e, convention)
    target = good_addable_node(sub, e, (-i) % e, convention)
    if target is None:
        raise InternalError(f"{sub} has no good addable node of residue {(-i) % e}")
    r2, _ = target
    grown = list(sub) + [0] * (r2 - len(sub))
    grown[r2 - 1] += 1
    return tuple(grown)


def kleshchev_trace(lam, e, convention="C1"):
    """(image, steps) where steps record each peel and regrow."""
    lam = check_partition(lam)
    peels = []
    cur = lam
    while cur:
        for i in range(e):
            node = good_removable_node(cur, e, i, convention)
            if node is not None:
                break
        else:
            raise InternalError(f"{cur} has no good removable node mod {e}")
        row, _ = node
        nxt = list(cur)
        nxt[row - 1] -= 1
        cur = tuple(p for p in nxt if p > 0)
        peels.append((i, cur))
    steps = [(f"peel residue {i}", (0,), (state,)) for i, state in peels]
    img = ()
    for i, _ in reversed(peels):
        target = good_addable_node(img, e, (-i) % e, convention)
        r2, _ = target
        grown = list(img) + [0] * (r2 - len(img))
        grown[r2 - 1] += 1
        img = tuple(grown)
        steps.append((f"grow residue {(-i) % e}", (0,), (img,)))
    return img, steps


# ---------------------------------------------------------------------------
# Crystal route
# ---------------------------------------------------------------------------

def mullineux_crystal(lam, e, s=None):
    """Mullineux image through the splitting embedding and the isomorphisms.

    `s` picks the fundamental charge (0, s) used for the split at every
    recursion depth; it defaults to e - 1 and any value in 1..e-1 gives the
    same answer.
    """
    lam = check_partition(lam)
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    if not is_e_regular(lam, e):
        raise InputError(f"mullineux_crystal needs an e-regular partition, got {lam}")
    if s is None:
        s = e - 1
    if not 1 <= s <= e - 1:
        raise InputError(f"s must be in 1..e-1, got {s}")
    return _crystal(lam, e, s)


def _very_dominant_multiple(offset, n, e):
    """Least k >= 1 with offset + k*e very dominant over rank n at level 2."""
    return max(1, (n - 1 - offset) // e + 1)


def _crystal_split(lam, e, s):
    """One unfolding: (pair at (0,s), lifted pair, its charge)."""
    n = rank(lam)
    pair = theta_l2(lam, e, s)
    k = _very_dominant_multiple(s, n, e)
    up = (0, s + k * e)
    mu = psi(pair, (0, s), up, e)
    if not mu[0]:
        raise InternalError(f"lift of {lam} lost its first component")
    if not mu[1]:
        raise InternalError(f"lift of non-core {lam} has an empty second component")
    return pair, mu, up


def _crystal_descend(nu, e, s, n):
    """Place the image pair very dominantly and descend to (0, e - s)."""
    kp = _very_dominant_multiple(-s, n, e)
    start = (0, -s + kp * e)
    kappa = psi(nu, start, (0, e - s), e)
    return kappa, start


@lru_cache(maxsize=None)
def _crystal(lam, e, s):
    if not lam:
        return ()
    if is_strict_e_core(lam, e):
        return conjugate(lam)
    _, mu, _ = _crystal_split(lam, e, s)
    nu = (_crystal(mu[0], e, s), _crystal(mu[1], e, s))
    kappa, _ = _crystal_descend(nu, e, s, rank(lam))
    return theta_inverse(kappa)


def mullineux_crystal_trace(lam, e, s=None):
    """(image, steps) recording the top-level unfolding of the recursion."""
    lam = check_partition(lam)
    if s is None:
        s = e - 1
    img = mullineux_crystal(lam, e, s)
    if not lam:
        return img, [("empty", (0,), ((),))]
    if is_strict_e_core(lam, e):
        return img, [("conjugate strict core", (0,), (img,))]
    pair, mu, up = _crystal_split(lam, e, s)
    steps = [("split", (0, s), pair), ("lift", up, mu)]
    nu = (_crystal(mu[0], e, s), _crystal(mu[1], e, s))
    kappa, start = _crystal_descend(nu, e, s, rank(lam))
    steps.append(("componentwise image", start, nu))
    steps.append(("descend", (0, e - s), kappa))
    steps.append(("merge", (0,), (img,)))
    return img, steps


# ---------------------------------------------------------------------------
# Transported involutions
# ---------------------------------------------------------------------------

def ak_mullineux(mp, charge, to, e):
    """Componentwise Mullineux transported between charged sets.

    Lifts the member to a very dominant charge, applies the involution to
    each component, lands at the matching very dominant charge with negated
    residues, and transports to `to` (which must lie in that orbit).
    """
    mp = check_multipartition(mp)
    s = check_charge(charge)
    t = check_charge(to)
    if len(mp) != len(s) or len(s) != len(t):
        raise InputError("multipartition, charge and target must share one level")
    if not membership(mp, s, e):
        raise InputError(f"{mp} is not a member at charge {s} mod {e}")
    n = multirank(mp)
    vd = very_dominant_representative(s, n, e)
    lifted = psi(mp, s, vd, e)
    image = tuple(xu(comp, e) for comp in lifted)
    sharp = sharp_very_dominant(vd, n, e)
    if not same_orbit(sharp, t, e):
        raise NoPathError(f"target {t} is not in the orbit of the image charge {sharp}")
    return psi(image, sharp, t, e)


def im_sharp(ms, e):
    """Involution on aperiodic multisegments.

    Finds the first fundamental multicharge of level <= 3 (level 1 charges
    (0)..(e-1), then level 2, then level 3, lexicographically) where the
    multisegment has a preimage, applies ak_mullineux towards the transposed
    charge, and reads the result back as a multisegment.
    """
    ms = check_multisegment(ms, e)
    if not ms:
        return ()
    if not is_aperiodic(ms, e):
        raise InputError(f"{ms} is not aperiodic mod {e}")
    for s in _charge_candidates(e):
        try:
            mp = chi_inverse(ms, s, e)
        except NotAdmissibleError:
            continue
        st = transpose_charge(s)
        image = ak_mullineux(mp, s, st, e)
        return canonical(chi(image, st, e))
    raise InputError(
        f"{ms} has no preimage at any fundamental multicharge of level <= 3 mod {e}"
    )


def _charge_candidates(e):
    for a in range(e):
        yield (a,)
    for a in range(e):
        for b in range(a, a + e):
            yield (a, b)
    for a in range(e):
        for b in range(a, a + e):
            for c in range(b, a + e):
                yield (a, b, c)
