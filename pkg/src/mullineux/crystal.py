"""Charged multipartitions, membership, and crystal isomorphisms.

Membership (the FLOTW conditions) is defined at fundamental multicharges and
transported elsewhere along the isomorphisms.  The isomorphism psi follows a
word in the charge group: sigma_c acts on components c, c+1 through the
two-row symbol matching, tau and its inverse rotate the components while
shifting the charge.

`blockwise_lift` and `blockwise_lower` are direct box-moving versions of the
level-2 isomorphisms between a fundamental charge and a very dominant one;
they are independent of the symbol route and are tested against it.
"""

from .charges import (
    act_sigma,
    act_tau,
    act_tau_inv,
    check_charge,
    fundamental_representative,
    path_word,
)
from .core import check_multipartition, check_partition, enumerate_multipartitions, part
from .errors import InputError, InternalError, MalformedSymbolError
from .symbols import build_symbol, decode_symbol, match_step


def flotw_check(mp, charge, e):
    """FLOTW conditions at a fundamental multicharge.

    (1) lam^j_i >= lam^{j+1}_{i + s_{j+1} - s_j} for j < l;
    (2) lam^l_i >= lam^1_{i + e + s_1 - s_l};
    (3) for every part value k, the residues of the row ends of length-k rows
        do not exhaust Z/eZ.
    """
    mp = check_multipartition(mp)
    s = check_charge(charge)
    if len(mp) != len(s):
        raise InputError(f"{len(mp)} components vs {len(s)} charges")
    if not all(a <= b for a, b in zip(s, s[1:])) or s[-1] >= s[0] + e:
        raise InputError(f"flotw_check needs a fundamental multicharge, got {s}")
    l = len(mp)
    for j in range(l):
        if j + 1 < l:
            nxt, gap = mp[j + 1], s[j + 1] - s[j]
        else:
            nxt, gap = mp[0], e + s[0] - s[-1]
        for i in range(1, len(nxt) - gap + 1):
            if part(mp[j], i) < nxt[i + gap - 1]:
                return False
    residues = {}
    for j in range(l):
        for i, p in enumerate(mp[j], start=1):
            residues.setdefault(p, set()).add((p - i + s[j]) % e)
    return all(len(seen) < e for seen in residues.values())


def psi_sigma(mp, charge, e, c):
    """Apply the isomorphism for sigma_c: symbol matching on components c, c+1."""
    mp = check_multipartition(mp)
    s = check_charge(charge)
    if not 1 <= c < len(s):
        raise InputError(f"sigma index {c} out of range for level {len(s)}")
    pair = (mp[c - 1], mp[c])
    sym = build_symbol(pair, (s[c - 1], s[c]))
    image = decode_symbol(match_step(sym))
    out = list(mp)
    out[c - 1], out[c] = image
    return tuple(out), act_sigma(s, c)


def psi_tau(mp, charge, e):
    """Apply the isomorphism for tau: rotate components left."""
    mp = check_multipartition(mp)
    s = check_charge(charge)
    return tuple(mp[1:]) + (mp[0],), act_tau(s, e)


def psi_tau_inv(mp, charge, e):
    """Apply the isomorphism for tau inverse: rotate components right."""
    mp = check_multipartition(mp)
    s = check_charge(charge)
    return (mp[-1],) + tuple(mp[:-1]), act_tau_inv(s, e)


def psi_shift_up(mp, charge, e):
    """Level-2 shortcut (s1, s2) -> (s1, s2 + e): sigma_1 then tau."""
    if len(check_charge(charge)) != 2:
        raise InputError("psi_shift_up needs a level-2 multipartition")
    mp, s = psi_sigma(mp, charge, e, 1)
    return psi_tau(mp, s, e)


def psi_shift_down(mp, charge, e):
    """Level-2 shortcut (s1, s2) -> (s1, s2 - e): tau inverse then sigma_1."""
    if len(check_charge(charge)) != 2:
        raise InputError("psi_shift_down needs a level-2 multipartition")
    mp, s = psi_tau_inv(mp, charge, e)
    mp, s = psi_sigma(mp, s, e, 1)
    return mp, s


def psi(mp, charge, to, e):
    """Crystal isomorphism from `charge` to `to` along a charge-group word.

    Raises NoPathError when the charges are not in one orbit, and may raise
    MalformedSymbolError when `mp` does not belong to the source set.
    """
    mp = check_multipartition(mp)
    s = check_charge(charge)
    t = check_charge(to)
    if len(mp) != len(s):
        raise InputError(f"{len(mp)} components vs {len(s)} charges")
    if s == t:
        return mp
    for gen in path_word(s, t, e):
        if gen[0] == "sigma":
            mp, s = psi_sigma(mp, s, e, gen[1])
        elif gen[0] == "tau":
            mp, s = psi_tau(mp, s, e)
        else:
            mp, s = psi_tau_inv(mp, s, e)
    if s != t:
        raise InternalError(f"isomorphism walk ended at {s}, wanted {t}")
    return mp


def membership(mp, charge, e):
    """Whether a charged multipartition belongs to the set labelled by charge.

    At a fundamental charge this is flotw_check; elsewhere the multipartition
    is transported to the fundamental representative first.  Inputs that the
    transport cannot decode are reported as non-members.
    """
    mp = check_multipartition(mp)
    s = check_charge(charge)
    f = fundamental_representative(s, e)
    if s == f:
        return flotw_check(mp, s, e)
    try:
        image = psi(mp, s, f, e)
    except MalformedSymbolError:
        return False
    return flotw_check(image, f, e)


def enumerate_phi(n, charge, e):
    """All members of rank n at the given charge, sorted, as a tuple.

    At a fundamental charge this filters all multipartitions of n through
    flotw_check; elsewhere it is the isomorphic image of the fundamental set.
    """
    s = check_charge(charge)
    f = fundamental_representative(s, e)
    if s == f:
        found = [mp for mp in enumerate_multipartitions(n, len(s)) if flotw_check(mp, s, e)]
    else:
        found = [psi(mp, f, s, e) for mp in enumerate_phi(n, f, e)]
    return tuple(sorted(found))


def _greatest_below(candidates, c):
    """Index attaining the greatest rightmost content < c, or None."""
    best = None
    best_r = None
    for j, r in candidates:
        if r < c and (best_r is None or r > best_r):
            best, best_r = j, r
    return best, best_r


def blockwise_lift(lam, e, s):
    """Box-moving lift of the two-block split of lam to a very dominant charge.

    State: lam1 = first e - s parts at charge 0, lam2 = the remaining parts
    at a charge that starts at s and grows as rows of lam2 are set aside.
    Each round scans lam1 top-down; a row with rightmost content c moves its
    boxes above content c' to the lam2 row whose rightmost content c' is the
    greatest one below c (candidates: the nonzero rows and one addable row).
    The move must keep lam2 a partition at every moment; lam1 may pass
    through non-partition shapes inside a round.  After a round with moves,
    the rows of lam2 down to the lowest one touched are appended to the
    output mu and the charge of lam2 grows by e minus the number of rows
    collected.  A round without moves grows the charge by e and the process
    repeats until no move can ever fire again (every candidate content is at
    least every source content); the remaining rows of lam2 are then
    appended to mu.  Returns (lam1, mu).
    """
    lam = check_partition(lam)
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    if not 0 <= s < e:
        raise InputError(f"s must be in 0..e-1, got {s}")
    lam1 = list(lam[: e - s])
    lam2 = list(lam[e - s :])
    t = s
    mu = []
    while True:
        touched = []
        for a in range(1, len(lam1) + 1):
            if lam1[a - 1] == 0:
                continue
            c = lam1[a - 1] - a
            candidates = [(j, lam2[j - 1] - j + t) for j in range(1, len(lam2) + 1) if lam2[j - 1] > 0]
            addable = len(lam2) + 1
            candidates.append((addable, t - addable))
            j, r = _greatest_below(candidates, c)
            if j is None:
                continue
            k = c - r
            if k > lam1[a - 1]:
                continue
            if j >= 2 and lam2[j - 2] > 0 and not c < lam2[j - 2] - (j - 1) + t:
                continue
            lam1[a - 1] -= k
            if j == addable:
                lam2.append(k)
            else:
                lam2[j - 1] += k
            touched.append(j)
        if not touched:
            rightmosts = [lam1[a - 1] - a for a in range(1, len(lam1) + 1) if lam1[a - 1] > 0]
            if not rightmosts or t - (len(lam2) + 1) >= max(rightmosts):
                break
            t += e
            continue
        if any(x < y for x, y in zip(lam2, lam2[1:])):
            raise InternalError(f"collected block is not a partition: {lam2}")
        cut = max(touched)
        mu.extend(lam2[:cut])
        lam2 = lam2[cut:]
        t += e - cut
        if any(x < y for x, y in zip(lam1, lam1[1:])):
            raise InternalError(f"first component left a round malformed: {lam1}")
    mu.extend(lam2)
    if any(x < y for x, y in zip(lam1, lam1[1:])):
        raise InternalError(f"first component ended malformed: {lam1}")
    if any(x < y for x, y in zip(mu, mu[1:])):
        raise InternalError(f"second component ended malformed: {mu}")
    return tuple(p for p in lam1 if p > 0), tuple(p for p in mu if p > 0)


def blockwise_lower_pair(pair, start_charge, e):
    """Box-moving descent of (nu1 at 0, nu2 at start_charge) to a fundamental charge.

    Rounds run at t = start_charge, start_charge - e, ..., down to
    start_charge mod e (which must be nonzero).  Each round scans nu2
    bottom-up; a row with rightmost content r donates its boxes above
    content c to the lowest nu1 row not yet used as a target this round
    whose rightmost content c is below r, falling back to the next row up
    whenever the donation would break nu2's shape.  nu1 never gains rows.
    The move must keep nu2 a partition at every moment; nu1 may pass through
    non-partition shapes inside a round.  Returns the final (nu1, nu2).

    The final pair is in general *not* the image of the input under the
    symbol-route isomorphism (which lands inside the member set); only the
    merged partition is guaranteed to agree, which is what blockwise_lower
    returns.
    """
    nu1 = list(check_partition(pair[0]))
    nu2 = list(check_partition(pair[1]))
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    t = int(start_charge)
    final_t = t % e
    if final_t == 0 or t < final_t:
        raise InputError(f"start charge {t} is not of the form k*e - s with 0 < s < e")
    while True:
        used = set()
        for a in range(len(nu2), 0, -1):
            if nu2[a - 1] == 0:
                continue
            r = nu2[a - 1] - a + t
            for j in range(len(nu1), 0, -1):
                if j in used:
                    continue
                c = nu1[j - 1] - j
                if c >= r:
                    break
                k = r - c
                below = nu2[a] if a < len(nu2) else 0
                if k <= nu2[a - 1] and nu2[a - 1] - k >= below:
                    nu2[a - 1] -= k
                    nu1[j - 1] += k
                    used.add(j)
                    break
        while nu2 and nu2[-1] == 0:
            nu2.pop()
        if any(x < y for x, y in zip(nu1, nu1[1:])):
            raise InternalError(f"first component left a round malformed: {nu1}")
        if any(x < y for x, y in zip(nu2, nu2[1:])):
            raise InternalError(f"second component left a round malformed: {nu2}")
        if t == final_t:
            break
        t -= e
    return tuple(p for p in nu1 if p > 0), tuple(nu2)


def blockwise_lower(pair, e, s):
    """Merged partition from the box-moving descent of a very dominant pair.

    Places the pair at the canonical very dominant charge (0, -s + k*e) for
    its rank, runs blockwise_lower_pair down to (0, e - s), and merges the
    two components into one partition.
    """
    nu1 = check_partition(pair[0])
    nu2 = check_partition(pair[1])
    if e < 2:
        raise InputError(f"e must be >= 2, got {e}")
    if not 0 < s < e:
        raise InputError(f"s must be in 1..e-1, got {s}")
    n = sum(nu1) + sum(nu2)
    k = max(1, (n - 1 + s) // e + 1)
    final1, final2 = blockwise_lower_pair((nu1, nu2), -s + k * e, e)
    return tuple(sorted(final1 + final2, reverse=True))
